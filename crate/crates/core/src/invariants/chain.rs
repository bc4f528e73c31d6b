use super::sparse::{sparse_invariant_factors, SparseMatrix};
use crate::error::Result;
use crate::simplicial::{mapping_cylinder, GenRef, Simplex, SimplicialMap, SimplicialSet};
use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_traits::One;

/// Normalized chains: degenerate faces contribute zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    ranks: Vec<usize>,
    /// `boundaries[d]` is `C_d -> C_{d-1}`; entry 0 is the zero map to nothing.
    boundaries: Vec<SparseMatrix>,
}

impl ChainComplex {
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// The boundary `C_d -> C_{d-1}` for `d >= 1`.
    pub fn boundary(&self, d: usize) -> &SparseMatrix {
        &self.boundaries[d]
    }

    pub fn top(&self) -> Option<usize> {
        self.ranks.len().checked_sub(1)
    }

    /// Checks that every composite of consecutive boundaries vanishes.
    pub fn check_dd(&self) -> bool {
        (2..self.boundaries.len()).all(|d| {
            self.boundaries[d - 1]
                .mul(&self.boundaries[d])
                .is_some_and(|m| m.is_zero())
        })
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(d, &r)| if d % 2 == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }
}

/// The normalized chain complex on all generators.
pub fn chain_complex(x: &SimplicialSet) -> ChainComplex {
    chain_complex_upto(x, usize::MAX)
}

/// Chains in dimensions `0..=top` only.
pub fn chain_complex_upto(x: &SimplicialSet, top: usize) -> ChainComplex {
    relative_chains(x, &|_| false, top)
}

/// Chains of `x` modulo the subcomplex spanned by the excluded generators.
pub(crate) fn relative_chains(
    x: &SimplicialSet,
    excluded: &dyn Fn(GenRef) -> bool,
    top: usize,
) -> ChainComplex {
    let dims = x.counts().len().min(top.saturating_add(1));
    let mut index: Vec<Vec<Option<usize>>> = Vec::with_capacity(dims);
    let mut ranks = Vec::with_capacity(dims);
    for d in 0..dims {
        let mut next = 0;
        let idx = x
            .generators(d)
            .map(|g| {
                (!excluded(g)).then(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect();
        index.push(idx);
        ranks.push(next);
    }
    let mut boundaries = vec![SparseMatrix::new(0)];
    for d in 1..dims {
        let mut m = SparseMatrix::new(ranks[d - 1]);
        for g in x.generators(d) {
            if index[d][g.index].is_none() {
                continue;
            }
            let s = Simplex::nondegenerate(g);
            let mut col = Vec::with_capacity(d + 1);
            for i in 0..=d {
                let f = x.face(&s, i);
                if f.is_degenerate() {
                    continue;
                }
                if let Some(r) = index[d - 1][f.gen.index] {
                    col.push((r, if i % 2 == 0 { 1 } else { -1 }));
                }
            }
            m.push_column(col);
        }
        boundaries.push(m);
    }
    ChainComplex { ranks, boundaries }
}

/// A finitely generated abelian group `Z^rank + Z/t_1 + ... + Z/t_k` with `t_1 | ... | t_k`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AbelianGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// The group presented by generators modulo the given relation matrix (relations as columns).
    pub fn cokernel(m: &SparseMatrix) -> Self {
        let factors = sparse_invariant_factors(m);
        AbelianGroup {
            rank: m.rows() - factors.len(),
            torsion: factors.into_iter().filter(|f| !f.is_one()).collect(),
        }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts: Vec<alloc::string::String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(alloc::format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| alloc::format!("Z/{t}")));
        write!(f, "{}", parts.join(" + "))
    }
}

/// Homology of a chain complex in degrees `0..=max_degree`, which must be
/// below the complex's top dimension unless the complex is complete there.
pub fn homology_of(cc: &ChainComplex, max_degree: usize) -> Vec<AbelianGroup> {
    let Some(top) = cc.top() else {
        return Vec::new();
    };
    let last = max_degree.min(top);
    let factors: Vec<Vec<BigInt>> = (0..=(last + 1).min(top))
        .map(|d| {
            if d == 0 {
                Vec::new()
            } else {
                sparse_invariant_factors(cc.boundary(d))
            }
        })
        .collect();
    (0..=last)
        .map(|d| {
            let rank_out = factors[d].len();
            let incoming = factors.get(d + 1).map_or(&[][..], |f| &f[..]);
            AbelianGroup {
                rank: cc.ranks()[d] - rank_out - incoming.len(),
                torsion: incoming.iter().filter(|f| !f.is_one()).cloned().collect(),
            }
        })
        .collect()
}

/// Unreduced integral homology in degrees `0..=dim`.
pub fn homology(x: &SimplicialSet) -> Vec<AbelianGroup> {
    homology_of(&chain_complex(x), usize::MAX)
}

/// Unreduced homology in degrees `0..=degree`, touching only the `(degree + 1)`-skeleton.
pub fn homology_upto(x: &SimplicialSet, degree: usize) -> Vec<AbelianGroup> {
    homology_of(&chain_complex_upto(x, degree.saturating_add(1)), degree)
}

/// Reduced homology: drops one free summand in degree 0 of a nonempty space.
pub fn reduce(mut h: Vec<AbelianGroup>) -> Vec<AbelianGroup> {
    if let Some(h0) = h.first_mut() {
        h0.rank -= 1;
    }
    h
}

pub fn reduced_homology(x: &SimplicialSet) -> Vec<AbelianGroup> {
    reduce(homology(x))
}

/// Homology of the pair `(Cyl(f), X)` in degrees `0..=degree`.
pub fn relative_homology_upto(
    f: &SimplicialMap,
    degree: usize,
    max_dim: usize,
) -> Result<Vec<AbelianGroup>> {
    let cyl = mapping_cylinder(f, max_dim)?;
    let bottom: BTreeSet<GenRef> = f
        .source()
        .all_generators()
        .map(|g| cyl.bottom.image(g).gen)
        .collect();
    let cc = relative_chains(
        &cyl.object,
        &|g| bottom.contains(&g),
        degree.saturating_add(1),
    );
    Ok(homology_of(&cc, degree))
}

/// Homology of the pair `(Cyl(f), X)` in degrees `0..=dim Cyl(f)`.
pub fn relative_homology(f: &SimplicialMap, max_dim: usize) -> Result<Vec<AbelianGroup>> {
    relative_homology_upto(f, usize::MAX, max_dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{join, CatalogSpec};

    fn cat(s: &str) -> SimplicialSet {
        s.parse::<CatalogSpec>().unwrap().build()
    }

    fn table(h: &[AbelianGroup]) -> Vec<(usize, Vec<u64>)> {
        h.iter()
            .map(|g| {
                (
                    g.rank,
                    g.torsion
                        .iter()
                        .map(|t| u64::try_from(t).unwrap())
                        .collect(),
                )
            })
            .collect()
    }

    #[test]
    fn interval_boundary() {
        let cc = chain_complex(&cat("delta:1"));
        assert_eq!(cc.boundary(1).column(0), &[(0, -1), (1, 1)]);
        assert!(chain_complex(&cat("empty")).ranks().is_empty());
        assert!(homology(&cat("empty")).is_empty());
    }

    #[test]
    fn sphere_homology() {
        let s2 = cat("sphere:2");
        let cc = chain_complex(&s2);
        assert_eq!(cc.ranks(), &[2, 4, 4]);
        assert!(cc.check_dd());
        assert_eq!(
            table(&homology(&s2)),
            vec![(1, vec![]), (0, vec![]), (1, vec![])]
        );
        assert_eq!(
            table(&homology(&cat("boundary:2"))),
            vec![(1, vec![]), (1, vec![])]
        );
        assert_eq!(
            table(&reduced_homology(&cat("delta:3"))),
            vec![(0, vec![]); 4]
        );
        let c4 = join(&cat("sphere:0"), &cat("sphere:0"), 8).unwrap().object;
        assert_eq!(table(&homology(&c4)), vec![(1, vec![]), (1, vec![])]);
        assert_eq!(
            table(&homology(&cat("msphere:4"))),
            vec![
                (1, vec![]),
                (0, vec![]),
                (0, vec![]),
                (0, vec![]),
                (1, vec![])
            ]
        );
    }

    #[test]
    fn truncated_homology_matches_full() {
        let x = cat("sphere:3");
        let full = homology(&x);
        for deg in 0..4 {
            assert_eq!(homology_upto(&x, deg), full[..=deg]);
        }
    }

    #[test]
    fn relative_cases() {
        let d2 = cat("delta:2");
        let incl = SimplicialMap::new(
            cat("boundary:2"),
            d2.clone(),
            vec![
                (0..3)
                    .map(|k| Simplex::nondegenerate(GenRef::new(0, k)))
                    .collect(),
                (0..3)
                    .map(|k| Simplex::nondegenerate(GenRef::new(1, k)))
                    .collect(),
            ],
        )
        .unwrap();
        assert_eq!(
            table(&relative_homology(&incl, 8).unwrap()),
            vec![(0, vec![]), (0, vec![]), (1, vec![])]
        );
        let id = SimplicialMap::identity(&cat("sphere:1"));
        assert!(relative_homology(&id, 8)
            .unwrap()
            .iter()
            .all(AbelianGroup::is_zero));
        let from_empty = SimplicialMap::from_empty(&cat("sphere:1"));
        assert_eq!(
            relative_homology(&from_empty, 8).unwrap(),
            homology(&cat("sphere:1"))
        );
    }

    #[test]
    fn display() {
        let g = AbelianGroup {
            rank: 2,
            torsion: vec![BigInt::from(2)],
        };
        assert_eq!(alloc::format!("{g}"), "Z^2 + Z/2");
    }
}
