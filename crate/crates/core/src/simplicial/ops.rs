use super::{identity_surj, Builder, GenRef, Simplex, SimplicialMap, SimplicialSet};
use crate::error::{Error, Result};
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

pub(crate) fn cap(dim: isize, max_dim: usize) -> Result<()> {
    if dim >= 0 && dim as usize > max_dim {
        return Err(Error::DimensionCap {
            dim: dim as usize,
            cap: max_dim,
        });
    }
    Ok(())
}

pub struct Coproduct {
    pub object: SimplicialSet,
    pub in1: SimplicialMap,
    pub in2: SimplicialMap,
}

pub fn coproduct(a: &SimplicialSet, b: &SimplicialSet) -> Coproduct {
    let dims = a.counts().len().max(b.counts().len());
    let mut faces: Vec<Vec<Vec<Simplex>>> = vec![Vec::new(); dims];
    let shift = |s: &Simplex| Simplex {
        gen: GenRef::new(s.gen.dim, s.gen.index + a.count(s.gen.dim)),
        sigma: s.sigma.clone(),
    };
    for (d, level) in faces.iter_mut().enumerate() {
        level.extend(a.generators(d).map(|g| a.generator_faces(g).to_vec()));
        level.extend(
            b.generators(d)
                .map(|g| b.generator_faces(g).iter().map(shift).collect()),
        );
    }
    let object = SimplicialSet::from_faces_unchecked(faces);
    let in1 = (0..a.counts().len())
        .map(|d| a.generators(d).map(Simplex::nondegenerate).collect())
        .collect();
    let in2 = (0..b.counts().len())
        .map(|d| {
            b.generators(d)
                .map(|g| shift(&Simplex::nondegenerate(g)))
                .collect()
        })
        .collect();
    Coproduct {
        in1: SimplicialMap::new_unchecked(a.clone(), object.clone(), in1),
        in2: SimplicialMap::new_unchecked(b.clone(), object.clone(), in2),
        object,
    }
}

/// A nondegenerate simplex of a product: generators of both factors and an
/// injective lattice path through `[p] x [q]`.
type ProdKey = (GenRef, GenRef, Vec<(u8, u8)>);

pub struct Product {
    pub object: SimplicialSet,
    pub pr1: SimplicialMap,
    pub pr2: SimplicialMap,
    index: BTreeMap<ProdKey, GenRef>,
}

/// Collapses the pair `(a, b)` of same-dimensional simplices into a product key and surjection.
fn normalize_pair(a: &Simplex, b: &Simplex) -> (ProdKey, Vec<u8>) {
    let mut path: Vec<(u8, u8)> = Vec::with_capacity(a.sigma.len());
    let mut rho = Vec::with_capacity(a.sigma.len());
    for (&x, &y) in a.sigma.iter().zip(&b.sigma) {
        if path.last() != Some(&(x, y)) {
            path.push((x, y));
        }
        rho.push((path.len() - 1) as u8);
    }
    ((a.gen, b.gen, path), rho)
}

impl Product {
    /// The simplex `(a, b)` of the product.
    pub fn pair(&self, a: &Simplex, b: &Simplex) -> Simplex {
        assert_eq!(
            a.dim(),
            b.dim(),
            "pairing simplices of different dimensions"
        );
        let (key, rho) = normalize_pair(a, b);
        Simplex {
            gen: self.index[&key],
            sigma: rho,
        }
    }

    /// `f x g` between two products.
    pub fn map_between(
        &self,
        target: &Product,
        f: &SimplicialMap,
        g: &SimplicialMap,
    ) -> SimplicialMap {
        let images = (0..self.object.counts().len())
            .map(|d| {
                self.object
                    .generators(d)
                    .map(|x| {
                        let x = Simplex::nondegenerate(x);
                        target.pair(&f.apply(&self.pr1.apply(&x)), &g.apply(&self.pr2.apply(&x)))
                    })
                    .collect()
            })
            .collect();
        SimplicialMap::new_unchecked(self.object.clone(), target.object.clone(), images)
    }
}

fn lattice_paths(p: u8, q: u8) -> Vec<Vec<(u8, u8)>> {
    fn go(cur: &mut Vec<(u8, u8)>, p: u8, q: u8, out: &mut Vec<Vec<(u8, u8)>>) {
        let (x, y) = *cur.last().unwrap();
        if (x, y) == (p, q) {
            out.push(cur.clone());
            return;
        }
        for (dx, dy) in [(1, 1), (1, 0), (0, 1)] {
            if x + dx <= p && y + dy <= q {
                cur.push((x + dx, y + dy));
                go(cur, p, q, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut vec![(0, 0)], p, q, &mut out);
    out
}

pub fn product(a: &SimplicialSet, b: &SimplicialSet, max_dim: usize) -> Result<Product> {
    if a.is_empty() || b.is_empty() {
        let object = SimplicialSet::empty();
        return Ok(Product {
            pr1: SimplicialMap::from_empty(a),
            pr2: SimplicialMap::from_empty(b),
            object,
            index: BTreeMap::new(),
        });
    }
    cap(a.dim() + b.dim(), max_dim)?;
    let mut keys: Vec<ProdKey> = Vec::new();
    for x in a.all_generators() {
        for y in b.all_generators() {
            for path in lattice_paths(x.dim as u8, y.dim as u8) {
                keys.push((x, y, path));
            }
        }
    }
    keys.sort_by(|k, l| (k.2.len(), k).cmp(&(l.2.len(), l)));
    let faces = |k: &ProdKey| {
        let (x, y, path) = k;
        let sx = Simplex {
            gen: *x,
            sigma: path.iter().map(|p| p.0).collect(),
        };
        let sy = Simplex {
            gen: *y,
            sigma: path.iter().map(|p| p.1).collect(),
        };
        (0..path.len())
            .map(|i| {
                let (key, rho) = normalize_pair(&a.face(&sx, i), &b.face(&sy, i));
                let d = key.2.len() - 1;
                (key, d, rho)
            })
            .collect()
    };
    let mut builder = Builder::new();
    for k in &keys {
        builder.insert(k, k.2.len() - 1, &faces);
    }
    let (object, index) = builder.finish();
    let mut pr1 = vec![Vec::new(); object.counts().len()];
    let mut pr2 = vec![Vec::new(); object.counts().len()];
    let mut by_gen: Vec<(GenRef, &ProdKey)> = index.iter().map(|(k, g)| (*g, k)).collect();
    by_gen.sort();
    for (g, (x, y, path)) in by_gen {
        debug_assert_eq!(pr1[g.dim].len(), g.index);
        pr1[g.dim].push(Simplex {
            gen: *x,
            sigma: path.iter().map(|p| p.0).collect(),
        });
        pr2[g.dim].push(Simplex {
            gen: *y,
            sigma: path.iter().map(|p| p.1).collect(),
        });
    }
    Ok(Product {
        pr1: SimplicialMap::new_unchecked(object.clone(), a.clone(), pr1),
        pr2: SimplicialMap::new_unchecked(object.clone(), b.clone(), pr2),
        object,
        index,
    })
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum JoinKey {
    Left(GenRef),
    Right(GenRef),
    Pair(GenRef, GenRef),
}

impl JoinKey {
    fn dim(&self) -> usize {
        match self {
            JoinKey::Left(g) | JoinKey::Right(g) => g.dim,
            JoinKey::Pair(a, b) => a.dim + b.dim + 1,
        }
    }
}

pub struct Join {
    pub object: SimplicialSet,
    pub inl: SimplicialMap,
    pub inr: SimplicialMap,
}

/// The combinatorial join; simplices `(a, b)` sit in dimension `p + q + 1`.
pub fn join(a: &SimplicialSet, b: &SimplicialSet, max_dim: usize) -> Result<Join> {
    let dim = if a.is_empty() || b.is_empty() {
        a.dim().max(b.dim())
    } else {
        a.dim() + b.dim() + 1
    };
    cap(dim, max_dim)?;
    Ok(join_skeleton(a, b, usize::MAX))
}

/// The simplices of the join of dimension at most `top`.
pub fn join_skeleton(a: &SimplicialSet, b: &SimplicialSet, top: usize) -> Join {
    let faces = |k: &JoinKey| -> Vec<(JoinKey, usize, Vec<u8>)> {
        match *k {
            JoinKey::Left(g) => side_faces(a, g, JoinKey::Left),
            JoinKey::Right(g) => side_faces(b, g, JoinKey::Right),
            JoinKey::Pair(x, y) => {
                let (p, q) = (x.dim, y.dim);
                let mut out = Vec::with_capacity(p + q + 2);
                let sx = Simplex::nondegenerate(x);
                let sy = Simplex::nondegenerate(y);
                for i in 0..=p {
                    if p == 0 {
                        out.push((JoinKey::Right(y), q, identity_surj(q)));
                        continue;
                    }
                    let f = a.face(&sx, i);
                    let p2 = f.gen.dim;
                    let mut rho = f.sigma;
                    rho.extend((0..=q).map(|j| (p2 + 1 + j) as u8));
                    let key = JoinKey::Pair(f.gen, y);
                    out.push((key, p2 + q + 1, rho));
                }
                for j in 0..=q {
                    if q == 0 {
                        out.push((JoinKey::Left(x), p, identity_surj(p)));
                        continue;
                    }
                    let f = b.face(&sy, j);
                    let mut rho = identity_surj(p);
                    rho.extend(f.sigma.iter().map(|&t| (p + 1) as u8 + t));
                    let key = JoinKey::Pair(x, f.gen);
                    out.push((key, p + f.gen.dim + 1, rho));
                }
                out
            }
        }
    };
    let mut keys: Vec<JoinKey> = a.all_generators().map(JoinKey::Left).collect();
    keys.extend(b.all_generators().map(JoinKey::Right));
    for x in a.all_generators() {
        for y in b.all_generators() {
            keys.push(JoinKey::Pair(x, y));
        }
    }
    keys.retain(|k| k.dim() <= top);
    keys.sort_by(|k, l| (k.dim(), k).cmp(&(l.dim(), l)));
    let mut builder = Builder::new();
    for k in &keys {
        builder.insert(k, k.dim(), &faces);
    }
    let (object, index) = builder.finish();
    let inclusion = |x: &SimplicialSet, wrap: fn(GenRef) -> JoinKey| {
        let images = (0..x.counts().len().min(top.saturating_add(1)))
            .map(|d| {
                x.generators(d)
                    .map(|g| Simplex::nondegenerate(index[&wrap(g)]))
                    .collect()
            })
            .collect();
        SimplicialMap::new_unchecked(x.skeleton(top), object.clone(), images)
    };
    Join {
        inl: inclusion(a, JoinKey::Left),
        inr: inclusion(b, JoinKey::Right),
        object,
    }
}

fn side_faces(
    x: &SimplicialSet,
    g: GenRef,
    wrap: fn(GenRef) -> JoinKey,
) -> Vec<(JoinKey, usize, Vec<u8>)> {
    x.generator_faces(g)
        .iter()
        .map(|f| (wrap(f.gen), f.gen.dim, f.sigma.clone()))
        .collect()
}

pub struct JoinPower {
    pub object: SimplicialSet,
    /// The left inclusion `A^{*(k-1)} -> A^{*k}`.
    pub inl: SimplicialMap,
}

/// Left-associated `k`-fold join.
pub fn join_power(a: &SimplicialSet, k: usize, max_dim: usize) -> Result<JoinPower> {
    if k == 0 {
        return Err(Error::InvalidInput("join power needs k >= 1".into()));
    }
    if !a.is_empty() {
        cap(k as isize * (a.dim() + 1) - 1, max_dim)?;
    }
    join_power_skeleton(a, k, usize::MAX)
}

/// The `top`-skeleton of the left-associated `k`-fold join.
pub fn join_power_skeleton(a: &SimplicialSet, k: usize, top: usize) -> Result<JoinPower> {
    if k == 0 {
        return Err(Error::InvalidInput("join power needs k >= 1".into()));
    }
    let a = a.skeleton(top);
    let mut cur = JoinPower {
        object: a.clone(),
        inl: SimplicialMap::from_empty(&a),
    };
    for _ in 1..k {
        let j = join_skeleton(&cur.object, &a, top);
        cur = JoinPower {
            object: j.object,
            inl: j.inl,
        };
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::CatalogSpec;

    fn cat(s: &str) -> SimplicialSet {
        s.parse::<CatalogSpec>().unwrap().build()
    }

    #[test]
    fn product_of_intervals() {
        let p = product(&cat("delta:1"), &cat("delta:1"), 8).unwrap();
        assert_eq!(p.object.counts(), vec![4, 5, 2]);
        p.object.check_identities().unwrap();
    }

    #[test]
    fn product_top_cells_are_shuffles() {
        // C(p+q, p) top simplices.
        let p = product(&cat("delta:2"), &cat("delta:2"), 8).unwrap();
        assert_eq!(p.object.count(4), 6);
        let p = product(&cat("delta:3"), &cat("delta:1"), 8).unwrap();
        assert_eq!(p.object.count(4), 4);
    }

    #[test]
    fn product_units() {
        let a = cat("sphere:1");
        let p = product(&a, &cat("point"), 8).unwrap();
        assert_eq!(p.object.counts(), a.counts());
        assert!(p.pr1.is_isomorphism());
        let d = product(&cat("discrete:2"), &cat("discrete:2"), 8).unwrap();
        assert_eq!(d.object.counts(), vec![4]);
        assert!(product(&cat("empty"), &a, 8).unwrap().object.is_empty());
    }

    #[test]
    fn product_respects_cap() {
        assert!(matches!(
            product(&cat("delta:5"), &cat("delta:4"), 8),
            Err(Error::DimensionCap { .. })
        ));
    }

    #[test]
    fn coproduct_counts() {
        let c = coproduct(&cat("point"), &cat("point"));
        assert_eq!(c.object.counts(), vec![2]);
        let e = coproduct(&cat("empty"), &cat("sphere:1"));
        assert_eq!(e.object, cat("sphere:1"));
    }

    #[test]
    fn joins() {
        let j = join(&cat("point"), &cat("point"), 8).unwrap();
        assert_eq!(j.object.counts(), cat("delta:1").counts());
        let j = join(&cat("sphere:0"), &cat("sphere:0"), 8).unwrap();
        assert_eq!(j.object.counts(), vec![4, 4]);
        let j = join(&cat("empty"), &cat("sphere:1"), 8).unwrap();
        assert_eq!(j.object, cat("sphere:1"));
        assert!(j.inr.is_isomorphism());
        let j = join(&cat("delta:1"), &cat("delta:1"), 8).unwrap();
        assert_eq!(j.object.counts(), cat("delta:3").counts());
    }

    #[test]
    fn join_power_shapes() {
        let o = join_power(&cat("sphere:0"), 3, 8).unwrap();
        assert_eq!(o.object.counts(), vec![6, 12, 8]);
        assert_eq!(o.inl.source().counts(), vec![4, 4]);
        assert!(join_power(&cat("empty"), 4, 8).unwrap().object.is_empty());
        assert!(join_power(&cat("point"), 0, 8).is_err());
        assert!(matches!(
            join_power(&cat("boundary:2"), 5, 8),
            Err(Error::DimensionCap { dim: 9, .. })
        ));
        let sk = join_power_skeleton(&cat("boundary:2"), 5, 4).unwrap();
        assert_eq!(sk.object.dim(), 4);
        let full = join_power(&cat("boundary:2"), 3, 8).unwrap();
        assert_eq!(
            join_power_skeleton(&cat("boundary:2"), 3, 3)
                .unwrap()
                .object
                .counts(),
            full.object.counts()[..4]
        );
    }
}
