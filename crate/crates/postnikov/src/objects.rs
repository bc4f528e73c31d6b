//! Object strings: catalog names, plus `torus`, `cone:X`, `join-power:k:X` and
//! the binary forms `join:X+Y`, `product:X+Y`, `sum:X+Y`. The left operand of a
//! binary form is a plain catalog name or `torus`.

use crate::Failure;
use postnikov_core::simplicial::{
    coproduct, join, join_power, product, CatalogSpec, SimplicialSet,
};
use postnikov_core::Budgets;

pub fn parse_object(s: &str, b: &Budgets) -> Result<SimplicialSet, Failure> {
    let s = s.trim();
    if s == "torus" {
        let c = CatalogSpec::MinimalSphere(1).build();
        return Ok(product(&c, &c, b.max_dim)?.object);
    }
    if let Some((op, rest)) = s.split_once(':') {
        let binary = |rest: &str| -> Result<(SimplicialSet, SimplicialSet), Failure> {
            let (l, r) = rest
                .split_once('+')
                .ok_or_else(|| Failure::Input(format!("`{s}` needs two operands X+Y")))?;
            Ok((parse_object(l, b)?, parse_object(r, b)?))
        };
        match op {
            "cone" => {
                return Ok(join(
                    &parse_object(rest, b)?,
                    &CatalogSpec::Point.build(),
                    b.max_dim,
                )?
                .object)
            }
            "join" => {
                let (x, y) = binary(rest)?;
                return Ok(join(&x, &y, b.max_dim)?.object);
            }
            "product" => {
                let (x, y) = binary(rest)?;
                return Ok(product(&x, &y, b.max_dim)?.object);
            }
            "sum" => {
                let (x, y) = binary(rest)?;
                return Ok(coproduct(&x, &y).object);
            }
            "join-power" => {
                let (k, x) = rest.split_once(':').ok_or_else(|| {
                    Failure::Input(format!("`{s}` needs the form join-power:k:X"))
                })?;
                let k: usize = k
                    .parse()
                    .map_err(|_| Failure::Input(format!("`{k}` is not a count")))?;
                if k == 0 {
                    return Err(Failure::Input("join-power needs k >= 1".into()));
                }
                return Ok(join_power(&parse_object(x, b)?, k, b.max_dim)?.object);
            }
            _ => {}
        }
    }
    Ok(s.parse::<CatalogSpec>()?.build())
}

#[cfg(test)]
mod tests {
    use super::*;
    use postnikov_core::invariants::homology;

    #[test]
    fn composite_objects() {
        let b = Budgets::default();
        let ranks = |s: &str| {
            homology(&parse_object(s, &b).unwrap())
                .iter()
                .map(|g| g.rank)
                .collect::<Vec<_>>()
        };
        assert_eq!(ranks("torus"), vec![1, 2, 1]);
        assert_eq!(ranks("cone:wedge:2")[0], 1);
        assert_eq!(ranks("sum:sphere:1+point")[..2], [2, 1]);
        assert_eq!(ranks("join-power:3:sphere:0")[2], 1);
        assert_eq!(ranks("join:discrete:3+discrete:3")[1], 4);
        assert!(parse_object("join:point", &b).is_err());
        assert!(parse_object("join-power:0:point", &b).is_err());
    }
}
