use super::{GenRef, Simplex, SimplicialSet};
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

/// Assembles a simplicial set from keyed nondegenerate simplices. Each key
/// knows its faces as `(face key, face key dimension, surjection)`; faces are
/// inserted on demand so insertion order only affects numbering.
pub(crate) struct Builder<K: Ord + Clone> {
    index: BTreeMap<K, GenRef>,
    faces: Vec<Vec<Vec<Simplex>>>,
}

impl<K: Ord + Clone> Builder<K> {
    pub fn new() -> Self {
        Builder {
            index: BTreeMap::new(),
            faces: Vec::new(),
        }
    }

    pub fn insert<F>(&mut self, key: &K, dim: usize, faces: &F) -> GenRef
    where
        F: Fn(&K) -> Vec<(K, usize, Vec<u8>)>,
    {
        if let Some(&g) = self.index.get(key) {
            return g;
        }
        let fs = if dim == 0 {
            Vec::new()
        } else {
            faces(key)
                .into_iter()
                .map(|(fk, fd, sigma)| Simplex {
                    gen: self.insert(&fk, fd, faces),
                    sigma,
                })
                .collect()
        };
        while self.faces.len() <= dim {
            self.faces.push(Vec::new());
        }
        let g = GenRef::new(dim, self.faces[dim].len());
        self.faces[dim].push(fs);
        self.index.insert(key.clone(), g);
        g
    }

    pub fn finish(self) -> (SimplicialSet, BTreeMap<K, GenRef>) {
        (SimplicialSet::from_faces_unchecked(self.faces), self.index)
    }
}
