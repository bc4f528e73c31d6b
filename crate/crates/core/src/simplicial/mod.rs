//! Finite simplicial sets presented by nondegenerate generators and their faces.
//!
//! Every simplex is stored in Eilenberg-Zilber normal form: a nondegenerate
//! generator `x` of dimension `m` together with a monotone surjection
//! `sigma: [n] -> [m]`, standing for `sigma^* x`.

mod build;
pub mod catalog;
mod map;
mod ops;
mod pushout;

pub use catalog::CatalogSpec;
pub use map::SimplicialMap;
pub use ops::{
    coproduct, join, join_power, join_power_skeleton, join_skeleton, product, Coproduct, Join,
    JoinPower, Product,
};
pub use pushout::{homotopy_pushout, mapping_cylinder, strict_pushout, Cylinder, Pushout};

use crate::error::{Error, Result};
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub(crate) use build::Builder;

/// Default cap on the dimension of constructed outputs.
pub const DEFAULT_MAX_DIM: usize = 8;

/// Reference to a nondegenerate generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenRef {
    pub dim: usize,
    pub index: usize,
}

impl GenRef {
    pub fn new(dim: usize, index: usize) -> Self {
        GenRef { dim, index }
    }
}

/// A simplex `sigma^* gen`, with `sigma` a monotone surjection onto `[gen.dim]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    pub gen: GenRef,
    pub sigma: Vec<u8>,
}

pub(crate) fn identity_surj(m: usize) -> Vec<u8> {
    (0..=m).map(|k| k as u8).collect()
}

/// `tau . sigma` as surjections, i.e. `sigma` applied first.
pub(crate) fn compose_surj(tau: &[u8], sigma: &[u8]) -> Vec<u8> {
    sigma.iter().map(|&k| tau[k as usize]).collect()
}

fn check_surj(sigma: &[u8], m: usize) -> core::result::Result<(), &'static str> {
    if sigma.is_empty() || sigma[0] != 0 {
        return Err("surjection must start at 0");
    }
    for w in sigma.windows(2) {
        if w[1] != w[0] && w[1] != w[0] + 1 {
            return Err("surjection must be monotone with steps 0 or 1");
        }
    }
    if *sigma.last().unwrap() as usize != m {
        return Err("surjection must hit the top vertex");
    }
    Ok(())
}

impl Simplex {
    pub fn nondegenerate(gen: GenRef) -> Self {
        Simplex {
            gen,
            sigma: identity_surj(gen.dim),
        }
    }

    /// `s_{j_k} ... s_{j_1} gen` for the strictly increasing index list `degens`
    /// (the positions `j` where the surjection repeats).
    pub fn from_degeneracies(gen: GenRef, degens: &[usize]) -> Result<Self> {
        let n = gen.dim + degens.len();
        if degens.windows(2).any(|w| w[0] >= w[1]) || degens.iter().any(|&j| j >= n) {
            return Err(Error::InvalidInput(format!(
                "degeneracy word {degens:?} is not a strictly increasing list below {n}"
            )));
        }
        let mut sigma = vec![0u8; n + 1];
        for j in 0..n {
            sigma[j + 1] = sigma[j] + u8::from(!degens.contains(&j));
        }
        Ok(Simplex { gen, sigma })
    }

    pub fn dim(&self) -> usize {
        self.sigma.len() - 1
    }

    pub fn is_degenerate(&self) -> bool {
        self.dim() > self.gen.dim
    }

    /// The strictly increasing degeneracy indices of the normal form.
    pub fn degeneracies(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|&j| self.sigma[j] == self.sigma[j + 1])
            .collect()
    }

    /// `s_j` applied to this simplex.
    pub fn degeneracy(&self, j: usize) -> Simplex {
        let mut sigma = self.sigma.clone();
        sigma.insert(j, self.sigma[j]);
        Simplex {
            gen: self.gen,
            sigma,
        }
    }

    /// Fully degenerate `n`-simplex on a vertex.
    pub fn constant(vertex: usize, n: usize) -> Simplex {
        Simplex {
            gen: GenRef::new(0, vertex),
            sigma: vec![0; n + 1],
        }
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in self.degeneracies().iter().rev() {
            write!(f, "s{j} ")?;
        }
        write!(f, "x{}_{}", self.gen.dim, self.gen.index)
    }
}

#[derive(Debug, PartialEq, Eq)]
struct Inner {
    /// `faces[d][k]` lists the `d + 1` faces of generator `(d, k)`; empty for vertices.
    faces: Vec<Vec<Vec<Simplex>>>,
    /// `vertices[d][k]` lists the vertices of generator `(d, k)` in order.
    vertices: Vec<Vec<Vec<usize>>>,
}

/// A finite simplicial set. Cloning is cheap; the presentation is shared and immutable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialSet {
    inner: Arc<Inner>,
}

impl SimplicialSet {
    pub fn empty() -> Self {
        Self::from_faces_unchecked(Vec::new())
    }

    /// Builds and validates a presentation from the face lists of every generator.
    pub fn from_faces(mut faces: Vec<Vec<Vec<Simplex>>>) -> Result<Self> {
        while faces.last().is_some_and(|l| l.is_empty()) {
            faces.pop();
        }
        validate_shape(&faces)?;
        let x = Self::build(faces);
        x.check_identities()?;
        Ok(x)
    }

    pub(crate) fn from_faces_unchecked(mut faces: Vec<Vec<Vec<Simplex>>>) -> Self {
        while faces.last().is_some_and(|l| l.is_empty()) {
            faces.pop();
        }
        debug_assert!(
            validate_shape(&faces).is_ok(),
            "{:?}",
            validate_shape(&faces)
        );
        let x = Self::build(faces);
        debug_assert!(x.check_identities().is_ok(), "{:?}", x.check_identities());
        x
    }

    fn build(faces: Vec<Vec<Vec<Simplex>>>) -> Self {
        let mut vertices: Vec<Vec<Vec<usize>>> = Vec::with_capacity(faces.len());
        for (d, gens) in faces.iter().enumerate() {
            let mut level = Vec::with_capacity(gens.len());
            for (k, fs) in gens.iter().enumerate() {
                if d == 0 {
                    level.push(vec![k]);
                    continue;
                }
                let vert =
                    |s: &Simplex, j: usize| vertices[s.gen.dim][s.gen.index][s.sigma[j] as usize];
                let mut vs: Vec<usize> = (0..d).map(|j| vert(&fs[d], j)).collect();
                vs.push(vert(&fs[0], d - 1));
                level.push(vs);
            }
            vertices.push(level);
        }
        SimplicialSet {
            inner: Arc::new(Inner { faces, vertices }),
        }
    }

    /// Top dimension, `-1` for the empty set.
    pub fn dim(&self) -> isize {
        self.inner.faces.len() as isize - 1
    }

    pub fn is_empty(&self) -> bool {
        self.inner.faces.is_empty()
    }

    /// Number of nondegenerate generators in dimension `d`.
    pub fn count(&self, d: usize) -> usize {
        self.inner.faces.get(d).map_or(0, Vec::len)
    }

    pub fn counts(&self) -> Vec<usize> {
        self.inner.faces.iter().map(Vec::len).collect()
    }

    pub fn total_generators(&self) -> usize {
        self.inner.faces.iter().map(Vec::len).sum()
    }

    pub fn generators(&self, d: usize) -> impl Iterator<Item = GenRef> {
        (0..self.count(d)).map(move |k| GenRef::new(d, k))
    }

    pub fn all_generators(&self) -> impl Iterator<Item = GenRef> + '_ {
        (0..self.inner.faces.len()).flat_map(move |d| self.generators(d))
    }

    /// Face list of a generator.
    pub fn generator_faces(&self, g: GenRef) -> &[Simplex] {
        &self.inner.faces[g.dim][g.index]
    }

    pub fn generator_vertices(&self, g: GenRef) -> &[usize] {
        &self.inner.vertices[g.dim][g.index]
    }

    /// Vertex `j` of an arbitrary simplex.
    pub fn vertex(&self, s: &Simplex, j: usize) -> usize {
        self.inner.vertices[s.gen.dim][s.gen.index][s.sigma[j] as usize]
    }

    /// The face `d_i` of a simplex, returned in normal form.
    pub fn face(&self, s: &Simplex, i: usize) -> Simplex {
        let n = s.dim();
        assert!(n >= 1 && i <= n, "face d_{i} of a {n}-simplex");
        let v = s.sigma[i];
        let survives = (i > 0 && s.sigma[i - 1] == v) || (i < n && s.sigma[i + 1] == v);
        let mut rest = s.sigma.clone();
        rest.remove(i);
        if survives {
            return Simplex {
                gen: s.gen,
                sigma: rest,
            };
        }
        for x in rest.iter_mut() {
            if *x > v {
                *x -= 1;
            }
        }
        let f = &self.inner.faces[s.gen.dim][s.gen.index][v as usize];
        Simplex {
            gen: f.gen,
            sigma: compose_surj(&f.sigma, &rest),
        }
    }

    /// Rejects presentations whose top dimension exceeds `cap`.
    pub fn check_dim(&self, cap: usize) -> Result<()> {
        ops::cap(self.dim(), cap)
    }

    /// Checks `d_i d_j = d_{j-1} d_i` for `i < j` on every generator.
    pub fn check_identities(&self) -> Result<()> {
        for (d, gens) in self.inner.faces.iter().enumerate().skip(2) {
            for k in 0..gens.len() {
                let x = Simplex::nondegenerate(GenRef::new(d, k));
                for j in 1..=d {
                    let dj = self.face(&x, j);
                    for i in 0..j {
                        let di = self.face(&x, i);
                        if self.face(&dj, i) != self.face(&di, j - 1) {
                            return Err(Error::InvalidSimplicialSet(format!(
                                "simplicial identity d_{i} d_{j} = d_{} d_{i} fails on generator {d}:{k}",
                                j - 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The sub-simplicial set on the generators selected by `keep`, which must
    /// be closed under faces. Returns it with the reindexing of kept generators.
    pub fn restrict(
        &self,
        keep: &dyn Fn(GenRef) -> bool,
    ) -> (SimplicialSet, Vec<Vec<Option<usize>>>) {
        let mut reindex: Vec<Vec<Option<usize>>> = Vec::new();
        let mut faces: Vec<Vec<Vec<Simplex>>> = Vec::new();
        for (d, gens) in self.inner.faces.iter().enumerate() {
            let mut idx = vec![None; gens.len()];
            let mut level = Vec::new();
            for (k, fs) in gens.iter().enumerate() {
                if !keep(GenRef::new(d, k)) {
                    continue;
                }
                idx[k] = Some(level.len());
                let mapped = fs
                    .iter()
                    .map(|f| Simplex {
                        gen: GenRef::new(
                            f.gen.dim,
                            reindex[f.gen.dim][f.gen.index]
                                .expect("restriction not closed under faces"),
                        ),
                        sigma: f.sigma.clone(),
                    })
                    .collect();
                level.push(mapped);
            }
            reindex.push(idx);
            faces.push(level);
        }
        (SimplicialSet::from_faces_unchecked(faces), reindex)
    }

    /// Generators of dimension at most `top`.
    pub fn skeleton(&self, top: usize) -> SimplicialSet {
        if self.counts().len() <= top.saturating_add(1) {
            return self.clone();
        }
        self.restrict(&|g| g.dim <= top).0
    }
}

fn validate_shape(faces: &[Vec<Vec<Simplex>>]) -> Result<()> {
    for (d, gens) in faces.iter().enumerate() {
        for (k, fs) in gens.iter().enumerate() {
            let expected = if d == 0 { 0 } else { d + 1 };
            if fs.len() != expected {
                return Err(Error::InvalidSimplicialSet(format!(
                    "generator {d}:{k} has {} faces, expected {expected}",
                    fs.len()
                )));
            }
            for (i, f) in fs.iter().enumerate() {
                if f.sigma.len() != d {
                    return Err(Error::InvalidSimplicialSet(format!(
                        "face d_{i} of generator {d}:{k} is not a {}-simplex",
                        d - 1
                    )));
                }
                if f.gen.dim >= d || faces.get(f.gen.dim).map_or(0, Vec::len) <= f.gen.index {
                    return Err(Error::InvalidSimplicialSet(format!(
                        "face d_{i} of generator {d}:{k} references missing generator {}:{}",
                        f.gen.dim, f.gen.index
                    )));
                }
                if let Err(e) = check_surj(&f.sigma, f.gen.dim) {
                    return Err(Error::InvalidSimplicialSet(format!(
                        "face d_{i} of generator {d}:{k} has a malformed degeneracy word: {e}"
                    )));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(d: usize, k: usize) -> Simplex {
        Simplex::nondegenerate(GenRef::new(d, k))
    }

    #[test]
    fn degeneracy_words_round_trip() {
        let x = Simplex::from_degeneracies(GenRef::new(1, 0), &[0, 2]).unwrap();
        assert_eq!(x.sigma, vec![0, 0, 1, 1]);
        assert_eq!(x.degeneracies(), vec![0, 2]);
        assert_eq!(s(1, 0).degeneracy(0).degeneracy(2), x);
        assert!(Simplex::from_degeneracies(GenRef::new(1, 0), &[1, 1]).is_err());
    }

    #[test]
    fn faces_of_degenerate_simplices() {
        // Interval: vertices 0, 1 and an edge 0 -> 1.
        let x = SimplicialSet::from_faces(vec![vec![vec![], vec![]], vec![vec![s(0, 1), s(0, 0)]]])
            .unwrap();
        let e = s(1, 0);
        let se = e.degeneracy(0);
        assert_eq!(x.face(&se, 0), e);
        assert_eq!(x.face(&se, 1), e);
        assert_eq!(x.face(&se, 2), Simplex::constant(0, 1));
        assert_eq!(x.vertex(&se, 2), 1);
    }

    #[test]
    fn identity_violation_is_named() {
        // A triangle whose edges do not match up.
        let err = SimplicialSet::from_faces(vec![
            vec![vec![], vec![], vec![]],
            vec![
                vec![s(0, 1), s(0, 0)],
                vec![s(0, 2), s(0, 0)],
                vec![s(0, 2), s(0, 1)],
            ],
            vec![vec![s(1, 2), s(1, 0), s(1, 1)]],
        ])
        .unwrap_err();
        assert!(format!("{err}").contains("simplicial identity"), "{err}");
    }

    #[test]
    fn shape_errors() {
        assert!(SimplicialSet::from_faces(vec![vec![vec![]], vec![vec![s(0, 0)]]]).is_err());
        assert!(
            SimplicialSet::from_faces(vec![vec![vec![]], vec![vec![s(0, 0), s(0, 3)]]]).is_err()
        );
    }
}
