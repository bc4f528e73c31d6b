use super::{homotopy_pushout, Builder, GenRef, Simplex, SimplicialMap, SimplicialSet};
use crate::error::Error;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// Named objects of the built-in catalog. Strings such as `sphere:2` parse into these.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CatalogSpec {
    Empty,
    Point,
    Delta(usize),
    /// `\partial Delta^n`.
    Boundary(usize),
    /// Iterated double-mapping-cylinder suspension of the empty set.
    Sphere(usize),
    /// One vertex and one nondegenerate `n`-simplex; two points for `n = 0`.
    MinimalSphere(usize),
    Discrete(usize),
    Cycle(usize),
    WedgeCircles(usize),
}

impl CatalogSpec {
    pub fn build(&self) -> SimplicialSet {
        match *self {
            CatalogSpec::Empty => SimplicialSet::empty(),
            CatalogSpec::Point => discrete(1),
            CatalogSpec::Delta(n) => complex(&[(0..=n).collect()]),
            CatalogSpec::Boundary(0) => SimplicialSet::empty(),
            CatalogSpec::Boundary(n) => {
                let facets: Vec<Vec<usize>> = (0..=n)
                    .map(|skip| (0..=n).filter(|&v| v != skip).collect())
                    .collect();
                complex(&facets)
            }
            CatalogSpec::Sphere(n) => {
                let pt = discrete(1);
                let mut s = SimplicialSet::empty();
                for _ in 0..=n {
                    let f = SimplicialMap::to_point(&s, &pt).expect("point target");
                    s = homotopy_pushout(&f, &f, usize::MAX)
                        .expect("suspension")
                        .object;
                }
                s
            }
            CatalogSpec::MinimalSphere(0) => discrete(2),
            CatalogSpec::MinimalSphere(n) => {
                let mut faces = vec![vec![Vec::new()]];
                faces.resize(n, Vec::new());
                faces.push(vec![vec![Simplex::constant(0, n - 1); n + 1]]);
                SimplicialSet::from_faces_unchecked(faces)
            }
            CatalogSpec::Discrete(k) => discrete(k),
            CatalogSpec::Cycle(0) => SimplicialSet::empty(),
            CatalogSpec::Cycle(k) => {
                let v = |i: usize| Simplex::nondegenerate(GenRef::new(0, i % k));
                let edges = (0..k).map(|i| vec![v(i + 1), v(i)]).collect();
                SimplicialSet::from_faces_unchecked(vec![vec![Vec::new(); k], edges])
            }
            CatalogSpec::WedgeCircles(k) => {
                let v = Simplex::nondegenerate(GenRef::new(0, 0));
                SimplicialSet::from_faces_unchecked(vec![
                    vec![Vec::new()],
                    vec![vec![v.clone(), v]; k],
                ])
            }
        }
    }
}

fn discrete(k: usize) -> SimplicialSet {
    SimplicialSet::from_faces_unchecked(vec![vec![Vec::new(); k]])
}

/// Ordered simplicial complex on the given facets (sorted vertex lists).
pub(crate) fn complex(facets: &[Vec<usize>]) -> SimplicialSet {
    complex_indexed(facets).0
}

/// The ordered simplicial complex generated by `facets`, each a strictly
/// increasing vertex list. Vertices are renumbered by rank among those used.
pub fn simplicial_complex(facets: &[Vec<usize>]) -> Result<SimplicialSet, Error> {
    if let Some(f) = facets
        .iter()
        .find(|f| f.is_empty() || f.windows(2).any(|w| w[0] >= w[1]))
    {
        return Err(Error::InvalidInput(format!(
            "facet {f:?} is not a nonempty strictly increasing vertex list"
        )));
    }
    Ok(complex(facets))
}

/// The inclusion `boundary(n) -> delta(n)`.
pub fn boundary_inclusion(n: usize) -> SimplicialMap {
    let target_facets = [(0..=n).collect::<Vec<usize>>()];
    let (target, tindex) = complex_indexed(&target_facets);
    if n == 0 {
        return SimplicialMap::from_empty(&target);
    }
    let facets: Vec<Vec<usize>> = (0..=n)
        .map(|skip| (0..=n).filter(|&v| v != skip).collect())
        .collect();
    let (source, sindex) = complex_indexed(&facets);
    let mut images: Vec<Vec<Simplex>> = source
        .counts()
        .iter()
        .map(|&c| vec![Simplex::constant(0, 0); c])
        .collect();
    for (key, g) in &sindex {
        images[g.dim][g.index] = Simplex::nondegenerate(tindex[key]);
    }
    SimplicialMap::new(source, target, images).expect("face of a simplex")
}

fn complex_indexed(
    facets: &[Vec<usize>],
) -> (
    SimplicialSet,
    alloc::collections::BTreeMap<Vec<usize>, GenRef>,
) {
    let faces = |s: &Vec<usize>| {
        (0..s.len())
            .map(|i| {
                let mut t = s.clone();
                t.remove(i);
                let d = t.len() - 1;
                (t, d, super::identity_surj(d))
            })
            .collect()
    };
    let mut b = Builder::new();
    let mut verts: Vec<usize> = facets.iter().flatten().copied().collect();
    verts.sort_unstable();
    verts.dedup();
    for v in verts {
        b.insert(&vec![v], 0, &faces);
    }
    for f in facets {
        b.insert(f, f.len() - 1, &faces);
    }
    b.finish()
}

impl fmt::Display for CatalogSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogSpec::Empty => write!(f, "empty"),
            CatalogSpec::Point => write!(f, "point"),
            CatalogSpec::Delta(n) => write!(f, "delta:{n}"),
            CatalogSpec::Boundary(n) => write!(f, "boundary:{n}"),
            CatalogSpec::Sphere(n) => write!(f, "sphere:{n}"),
            CatalogSpec::MinimalSphere(n) => write!(f, "msphere:{n}"),
            CatalogSpec::Discrete(k) => write!(f, "discrete:{k}"),
            CatalogSpec::Cycle(k) => write!(f, "cycle:{k}"),
            CatalogSpec::WedgeCircles(k) => write!(f, "wedge:{k}"),
        }
    }
}

impl FromStr for CatalogSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = |why: String| Error::InvalidInput(format!("catalog spec `{s}`: {why}"));
        let (name, arg) = match s.trim().split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s.trim(), None),
        };
        let int = || -> Result<i64, Error> {
            let a = arg.ok_or_else(|| bad("missing argument".into()))?;
            a.trim()
                .parse::<i64>()
                .map_err(|_| bad(format!("`{a}` is not an integer")))
        };
        // Dimension arguments range over n >= -1, with -1 giving the empty set.
        let dim = |wrap: fn(usize) -> CatalogSpec| -> Result<CatalogSpec, Error> {
            match int()? {
                -1 => Ok(CatalogSpec::Empty),
                n if n < -1 => Err(bad(format!("dimension {n} is below -1"))),
                n => Ok(wrap(n as usize)),
            }
        };
        let count = |wrap: fn(usize) -> CatalogSpec| -> Result<CatalogSpec, Error> {
            match int()? {
                k if k < 0 => Err(bad(format!("count {k} is negative"))),
                k => Ok(wrap(k as usize)),
            }
        };
        match name {
            "empty" if arg.is_none() => Ok(CatalogSpec::Empty),
            "point" if arg.is_none() => Ok(CatalogSpec::Point),
            "delta" => dim(CatalogSpec::Delta),
            "boundary" => dim(CatalogSpec::Boundary),
            "sphere" => dim(CatalogSpec::Sphere),
            "msphere" => dim(CatalogSpec::MinimalSphere),
            "discrete" => count(CatalogSpec::Discrete),
            "cycle" => count(CatalogSpec::Cycle),
            "wedge" | "wedge_circles" => count(CatalogSpec::WedgeCircles),
            _ => Err(bad("unknown object".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn counts(s: &str) -> Vec<usize> {
        s.parse::<CatalogSpec>().unwrap().build().counts()
    }

    #[test]
    fn catalog_shapes() {
        assert_eq!(counts("sphere:-1"), Vec::<usize>::new());
        assert_eq!(counts("sphere:0"), vec![2]);
        assert_eq!(counts("boundary:2"), vec![3, 3]);
        assert_eq!(counts("delta:3"), vec![4, 6, 4, 1]);
        assert_eq!(counts("cycle:1"), vec![1, 1]);
        assert_eq!(counts("cycle:4"), vec![4, 4]);
        assert_eq!(counts("wedge:2"), vec![1, 2]);
        assert_eq!(counts("msphere:3"), vec![1, 0, 0, 1]);
        assert_eq!(counts("boundary:0"), Vec::<usize>::new());
    }

    #[test]
    fn parse_errors() {
        assert!("sphere:-2".parse::<CatalogSpec>().is_err());
        assert!("discrete:-1".parse::<CatalogSpec>().is_err());
        assert!("torus".parse::<CatalogSpec>().is_err());
        assert!("delta".parse::<CatalogSpec>().is_err());
        assert!("point:3".parse::<CatalogSpec>().is_err());
        assert_eq!(
            "wedge_circles:3"
                .parse::<CatalogSpec>()
                .unwrap()
                .to_string(),
            "wedge:3"
        );
    }

    #[test]
    fn every_catalog_object_validates() {
        for s in [
            "delta:4",
            "boundary:4",
            "sphere:3",
            "msphere:5",
            "cycle:2",
            "cycle:5",
            "wedge:3",
        ] {
            let x = s.parse::<CatalogSpec>().unwrap().build();
            x.check_identities().unwrap();
        }
    }
}
