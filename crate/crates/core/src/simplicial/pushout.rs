use super::{
    compose_surj, ops::product, CatalogSpec, GenRef, Simplex, SimplicialMap, SimplicialSet,
};
use crate::error::{Error, Result};
use alloc::vec;
use alloc::vec::Vec;

pub struct Pushout {
    pub object: SimplicialSet,
    pub left: SimplicialMap,
    pub right: SimplicialMap,
}

fn through(img: &[Vec<Simplex>], s: &Simplex) -> Simplex {
    let y = &img[s.gen.dim][s.gen.index];
    Simplex {
        gen: y.gen,
        sigma: compose_surj(&y.sigma, &s.sigma),
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Degreewise pushout of `A <-f- C -g-> B`, renormalized to generators.
///
/// Generators of `A` precede those of `B`; a class of identified generators is
/// represented by its first member and collapses onto a degenerate simplex
/// when some member is glued to one.
pub fn strict_pushout(f: &SimplicialMap, g: &SimplicialMap) -> Result<Pushout> {
    if f.source() != g.source() {
        return Err(Error::Mismatch(
            "pushout legs have different sources".into(),
        ));
    }
    let (c, a, b) = (f.source(), f.target(), g.target());
    let dims = a.counts().len().max(b.counts().len());
    let mut faces: Vec<Vec<Vec<Simplex>>> = Vec::with_capacity(dims);
    let mut img_a: Vec<Vec<Simplex>> = Vec::with_capacity(dims);
    let mut img_b: Vec<Vec<Simplex>> = Vec::with_capacity(dims);
    for d in 0..dims {
        let (na, nb) = (a.count(d), b.count(d));
        let mut parent: Vec<usize> = (0..na + nb).collect();
        let mut collapse: Vec<Option<Simplex>> = vec![None; na + nb];
        for cg in c.generators(d) {
            let (x, y) = (f.image(cg), g.image(cg));
            match (x.gen.dim == d, y.gen.dim == d) {
                (true, true) => {
                    let (r, s) = (
                        find(&mut parent, x.gen.index),
                        find(&mut parent, na + y.gen.index),
                    );
                    let (lo, hi) = (r.min(s), r.max(s));
                    parent[hi] = lo;
                }
                (true, false) => collapse[x.gen.index] = Some(through(&img_b, y)),
                (false, true) => collapse[na + y.gen.index] = Some(through(&img_a, x)),
                (false, false) => {}
            }
        }
        let mut root_collapse: Vec<Option<Simplex>> = vec![None; na + nb];
        for v in 0..na + nb {
            if let Some(s) = collapse[v].take() {
                let r = find(&mut parent, v);
                debug_assert!(
                    root_collapse[r].as_ref().map_or(true, |t| *t == s),
                    "inconsistent collapse"
                );
                root_collapse[r] = Some(s);
            }
        }
        let mut level: Vec<Vec<Simplex>> = Vec::new();
        let mut class_image: Vec<Option<Simplex>> = vec![None; na + nb];
        let mut la = Vec::with_capacity(na);
        let mut lb = Vec::with_capacity(nb);
        for v in 0..na + nb {
            let r = find(&mut parent, v);
            if class_image[r].is_none() {
                // Union by minimum keeps `r <= v`, so the first member visited is the representative.
                let s = match &root_collapse[r] {
                    Some(s) => s.clone(),
                    None => {
                        let fs = if v < na {
                            a.generator_faces(GenRef::new(d, v))
                                .iter()
                                .map(|s| through(&img_a, s))
                                .collect()
                        } else {
                            b.generator_faces(GenRef::new(d, v - na))
                                .iter()
                                .map(|s| through(&img_b, s))
                                .collect()
                        };
                        level.push(fs);
                        Simplex::nondegenerate(GenRef::new(d, level.len() - 1))
                    }
                };
                class_image[r] = Some(s);
            }
            let s = class_image[r].clone().unwrap();
            if v < na {
                la.push(s);
            } else {
                lb.push(s);
            }
        }
        faces.push(level);
        img_a.push(la);
        img_b.push(lb);
    }
    let object = SimplicialSet::from_faces_unchecked(faces);
    img_a.truncate(a.counts().len());
    img_b.truncate(b.counts().len());
    Ok(Pushout {
        left: SimplicialMap::new_unchecked(a.clone(), object.clone(), img_a),
        right: SimplicialMap::new_unchecked(b.clone(), object.clone(), img_b),
        object,
    })
}

/// `c |-> (c, vertex)` into `C x Delta^1`.
fn end_inclusion(cyl: &super::Product, c: &SimplicialSet, vertex: usize) -> SimplicialMap {
    let images = (0..c.counts().len())
        .map(|d| {
            c.generators(d)
                .map(|g| cyl.pair(&Simplex::nondegenerate(g), &Simplex::constant(vertex, d)))
                .collect()
        })
        .collect();
    SimplicialMap::new_unchecked(c.clone(), cyl.object.clone(), images)
}

/// Double mapping cylinder `A u (C x Delta^1) u B`.
pub fn homotopy_pushout(f: &SimplicialMap, g: &SimplicialMap, max_dim: usize) -> Result<Pushout> {
    if f.source() != g.source() {
        return Err(Error::Mismatch(
            "pushout legs have different sources".into(),
        ));
    }
    let c = f.source();
    let dim =
        f.target()
            .dim()
            .max(g.target().dim())
            .max(if c.is_empty() { -1 } else { c.dim() + 1 });
    super::ops::cap(dim, max_dim)?;
    let cyl = product(c, &CatalogSpec::Delta(1).build(), usize::MAX)?;
    let i0 = end_inclusion(&cyl, c, 0);
    let i1 = end_inclusion(&cyl, c, 1);
    let p1 = strict_pushout(f, &i0)?;
    let j1 = p1.right.compose(&i1)?;
    let p2 = strict_pushout(&j1, g)?;
    Ok(Pushout {
        left: p2.left.compose(&p1.left)?,
        right: p2.right,
        object: p2.object,
    })
}

pub struct Cylinder {
    pub object: SimplicialSet,
    /// `X x {0}`, an injective map onto a subcomplex.
    pub bottom: SimplicialMap,
    pub top: SimplicialMap,
}

/// Mapping cylinder `X x Delta^1 u_X Y` of `f: X -> Y`.
pub fn mapping_cylinder(f: &SimplicialMap, max_dim: usize) -> Result<Cylinder> {
    let x = f.source();
    let dim = f
        .target()
        .dim()
        .max(if x.is_empty() { -1 } else { x.dim() + 1 });
    super::ops::cap(dim, max_dim)?;
    let cyl = product(x, &CatalogSpec::Delta(1).build(), usize::MAX)?;
    let i0 = end_inclusion(&cyl, x, 0);
    let i1 = end_inclusion(&cyl, x, 1);
    let p = strict_pushout(&i1, f)?;
    Ok(Cylinder {
        bottom: p.left.compose(&i0)?,
        top: p.right,
        object: p.object,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cat(s: &str) -> SimplicialSet {
        s.parse::<CatalogSpec>().unwrap().build()
    }

    #[test]
    fn collapsing_both_legs() {
        let pt = cat("point");
        let s0 = cat("sphere:0");
        let f = SimplicialMap::to_point(&s0, &pt).unwrap();
        let p = strict_pushout(&f, &f).unwrap();
        assert_eq!(p.object.counts(), vec![1]);
    }

    #[test]
    fn empty_source_gives_coproduct() {
        let a = cat("sphere:1");
        let b = cat("delta:2");
        let f = SimplicialMap::from_empty(&a);
        let g = SimplicialMap::from_empty(&b);
        let p = strict_pushout(&f, &g).unwrap();
        assert_eq!(p.object, super::super::coproduct(&a, &b).object);
        let h = homotopy_pushout(&f, &g, 8).unwrap();
        assert_eq!(h.object.counts(), vec![5, 5, 1]);
    }

    #[test]
    fn gluing_intervals_along_endpoints() {
        let i = cat("delta:1");
        let e = cat("boundary:1");
        let incl = SimplicialMap::new(
            e.clone(),
            i.clone(),
            vec![vec![
                Simplex::nondegenerate(GenRef::new(0, 0)),
                Simplex::nondegenerate(GenRef::new(0, 1)),
            ]],
        )
        .unwrap();
        let p = strict_pushout(&incl, &incl).unwrap();
        assert_eq!(p.object.counts(), vec![2, 2]);
    }

    #[test]
    fn suspension_sizes() {
        assert_eq!(cat("sphere:1").counts(), vec![2, 2]);
        assert_eq!(cat("sphere:2").counts(), vec![2, 4, 4]);
    }

    #[test]
    fn cylinder_of_identity() {
        let x = cat("boundary:2");
        let c = mapping_cylinder(&SimplicialMap::identity(&x), 8).unwrap();
        assert_eq!(c.object.counts(), vec![6, 12, 6]);
        assert!(c.bottom.vertex_map().iter().all(|&v| v < 6));
    }
}
