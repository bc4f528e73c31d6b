use super::{check_surj, compose_surj, GenRef, Simplex, SimplicialSet};
use crate::error::{Error, Result};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

/// A simplicial map, determined by the images of the source generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    source: SimplicialSet,
    target: SimplicialSet,
    images: Vec<Vec<Simplex>>,
}

impl SimplicialMap {
    /// Validates shapes and compatibility with every face map.
    pub fn new(
        source: SimplicialSet,
        target: SimplicialSet,
        images: Vec<Vec<Simplex>>,
    ) -> Result<Self> {
        let f = SimplicialMap {
            source,
            target,
            images,
        };
        f.validate()?;
        Ok(f)
    }

    pub(crate) fn new_unchecked(
        source: SimplicialSet,
        target: SimplicialSet,
        images: Vec<Vec<Simplex>>,
    ) -> Self {
        let f = SimplicialMap {
            source,
            target,
            images,
        };
        debug_assert!(f.validate().is_ok(), "{:?}", f.validate());
        f
    }

    fn validate(&self) -> Result<()> {
        let src = &self.source;
        if self.images.len() != src.counts().len()
            || (0..self.images.len()).any(|d| self.images[d].len() != src.count(d))
        {
            return Err(Error::InvalidMap(
                "image table does not match the source generators".into(),
            ));
        }
        for (d, imgs) in self.images.iter().enumerate() {
            for (k, y) in imgs.iter().enumerate() {
                if y.dim() != d
                    || y.gen.dim > d
                    || y.gen.index >= self.target.count(y.gen.dim)
                    || check_surj(&y.sigma, y.gen.dim).is_err()
                {
                    return Err(Error::InvalidMap(format!(
                        "image of generator {d}:{k} is not a {d}-simplex of the target"
                    )));
                }
            }
        }
        for g in src.all_generators() {
            if g.dim == 0 {
                continue;
            }
            let x = Simplex::nondegenerate(g);
            let fx = self.apply(&x);
            for i in 0..=g.dim {
                if self.apply(&src.face(&x, i)) != self.target.face(&fx, i) {
                    return Err(Error::InvalidMap(format!(
                        "map does not commute with d_{i} on generator {}:{}",
                        g.dim, g.index
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &SimplicialSet {
        &self.source
    }

    pub fn target(&self) -> &SimplicialSet {
        &self.target
    }

    pub fn image(&self, g: GenRef) -> &Simplex {
        &self.images[g.dim][g.index]
    }

    pub fn apply(&self, s: &Simplex) -> Simplex {
        let y = &self.images[s.gen.dim][s.gen.index];
        Simplex {
            gen: y.gen,
            sigma: compose_surj(&y.sigma, &s.sigma),
        }
    }

    pub fn identity(x: &SimplicialSet) -> Self {
        let images = (0..x.counts().len())
            .map(|d| x.generators(d).map(Simplex::nondegenerate).collect())
            .collect();
        SimplicialMap {
            source: x.clone(),
            target: x.clone(),
            images,
        }
    }

    /// The unique map to a one-vertex target with no higher generators.
    pub fn to_point(x: &SimplicialSet, point: &SimplicialSet) -> Result<Self> {
        if point.counts() != vec![1] {
            return Err(Error::Mismatch("target is not the point".into()));
        }
        let images = x
            .counts()
            .iter()
            .enumerate()
            .map(|(d, &c)| vec![Simplex::constant(0, d); c])
            .collect();
        Ok(SimplicialMap {
            source: x.clone(),
            target: point.clone(),
            images,
        })
    }

    pub fn from_empty(target: &SimplicialSet) -> Self {
        SimplicialMap {
            source: SimplicialSet::empty(),
            target: target.clone(),
            images: Vec::new(),
        }
    }

    /// `self . f`, i.e. `f` first.
    pub fn compose(&self, f: &SimplicialMap) -> Result<SimplicialMap> {
        if f.target != self.source {
            return Err(Error::Mismatch(
                "composite of maps whose ends do not agree".into(),
            ));
        }
        let images = f
            .images
            .iter()
            .map(|l| l.iter().map(|y| self.apply(y)).collect())
            .collect();
        Ok(SimplicialMap {
            source: f.source.clone(),
            target: self.target.clone(),
            images,
        })
    }

    /// Bijective on generators, each mapped to a nondegenerate generator.
    pub fn is_isomorphism(&self) -> bool {
        if self.source.counts() != self.target.counts() {
            return false;
        }
        self.images.iter().enumerate().all(|(d, l)| {
            let mut seen = vec![false; l.len()];
            l.iter().all(|y| {
                let fresh = y.gen.dim == d && !seen[y.gen.index];
                if fresh {
                    seen[y.gen.index] = true;
                }
                fresh
            })
        })
    }

    /// The map sending vertex `v` to `vmap[v]`, for targets in which every
    /// nondegenerate simplex is determined by its vertex list (ordered complexes).
    pub fn from_vertex_map(
        source: &SimplicialSet,
        target: &SimplicialSet,
        vmap: &[usize],
    ) -> Result<Self> {
        if vmap.len() != source.count(0) || vmap.iter().any(|&v| v >= target.count(0)) {
            return Err(Error::InvalidMap(
                "vertex map has the wrong length or leaves the target".into(),
            ));
        }
        let mut lookup = alloc::collections::BTreeMap::new();
        for g in target.all_generators() {
            if lookup
                .insert(target.generator_vertices(g).to_vec(), g)
                .is_some()
            {
                return Err(Error::InvalidMap(
                    "target simplices are not determined by their vertices".into(),
                ));
            }
        }
        let mut images = Vec::with_capacity(source.counts().len());
        for d in 0..source.counts().len() {
            let mut level = Vec::with_capacity(source.count(d));
            for g in source.generators(d) {
                let w: Vec<usize> = source
                    .generator_vertices(g)
                    .iter()
                    .map(|&v| vmap[v])
                    .collect();
                let mut key = w.clone();
                key.dedup();
                let mut sigma = vec![0u8; w.len()];
                for j in 1..w.len() {
                    sigma[j] = sigma[j - 1] + u8::from(w[j] != w[j - 1]);
                }
                let gen = *lookup.get(&key).ok_or_else(|| {
                    Error::InvalidMap(format!(
                        "generator {}:{} lands on vertices {w:?}, not a target simplex",
                        d, g.index
                    ))
                })?;
                level.push(Simplex { gen, sigma });
            }
            images.push(level);
        }
        SimplicialMap::new(source.clone(), target.clone(), images)
    }

    /// Vertex map.
    pub fn vertex_map(&self) -> Vec<usize> {
        self.images
            .first()
            .map_or_else(Vec::new, |l| l.iter().map(|y| y.gen.index).collect())
    }
}
