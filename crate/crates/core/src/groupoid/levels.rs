use super::constructions::homotopy_fiber;
use super::group::Group;
use super::groupoid::{Component, FiniteGroupoid, GroupoidFunctor, Mor};
use crate::error::{Error, Result};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

/// Connectivity of a functor. `Infinite` means every fiber is contractible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConnLevel {
    Finite(i64),
    Infinite,
}

impl ConnLevel {
    pub fn at_least(self, n: i64) -> bool {
        self >= ConnLevel::Finite(n)
    }
}

impl core::fmt::Display for ConnLevel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ConnLevel::Finite(n) => write!(f, "{n}"),
            ConnLevel::Infinite => f.write_str("inf"),
        }
    }
}

/// Fibers over the first object of each target component; fibers over
/// isomorphic objects are equivalent.
fn fibers(f: &GroupoidFunctor) -> Result<Vec<FiniteGroupoid>> {
    let y = f.target();
    (0..y.num_components())
        .map(|c| homotopy_fiber(f, y.rep(c)))
        .collect()
}

pub fn conn_level(f: &GroupoidFunctor) -> Result<ConnLevel> {
    let fs = fibers(f)?;
    Ok(if fs.iter().any(FiniteGroupoid::is_empty) {
        ConnLevel::Finite(-2)
    } else if !fs.iter().all(FiniteGroupoid::is_connected) {
        ConnLevel::Finite(-1)
    } else if !fs.iter().all(FiniteGroupoid::is_discrete) {
        ConnLevel::Finite(0)
    } else {
        ConnLevel::Infinite
    })
}

/// Least n in `-2..=1` with every fiber n-truncated.
pub fn trunc_level(f: &GroupoidFunctor) -> Result<i64> {
    let fs = fibers(f)?;
    Ok(if fs.iter().all(FiniteGroupoid::is_contractible) {
        -2
    } else if fs.iter().all(|g| g.is_empty() || g.is_contractible()) {
        -1
    } else if fs.iter().all(FiniteGroupoid::is_discrete) {
        0
    } else {
        1
    })
}

/// `F = right . left` with `left` n-connected and `right` n-truncated.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub left: GroupoidFunctor,
    pub middle: FiniteGroupoid,
    pub right: GroupoidFunctor,
}

pub fn factorize(f: &GroupoidFunctor, n: i64) -> Result<Factorization> {
    let (x, y) = (f.source(), f.target());
    let fact = match n {
        -2 => Factorization {
            left: f.clone(),
            middle: y.clone(),
            right: GroupoidFunctor::identity(y),
        },
        1 => Factorization {
            left: GroupoidFunctor::identity(x),
            middle: x.clone(),
            right: f.clone(),
        },
        -1 => image_factorization(f)?,
        0 => hom_image_factorization(f),
        _ => {
            return Err(Error::InvalidInput(format!(
                "factorization level {n} is outside -2..=1"
            )))
        }
    };
    let ok = conn_level(&fact.left)?.at_least(n)
        && trunc_level(&fact.right)? <= n
        && fact.right.compose(&fact.left).as_ref() == Ok(f);
    if !ok {
        return Err(Error::Internal(format!(
            "level {n} factorization failed its fiber checks"
        )));
    }
    Ok(fact)
}

/// Through the full subgroupoid on the image objects.
fn image_factorization(f: &GroupoidFunctor) -> Result<Factorization> {
    let y = f.target();
    let mut image: Vec<usize> = f.object_map().to_vec();
    image.sort_unstable();
    image.dedup();
    let (middle, right) = y.full_subgroupoid(&image)?;
    let mut back = vec![usize::MAX; y.num_morphisms()];
    for (m, &t) in right.morphism_map().iter().enumerate() {
        back[t] = m;
    }
    let obj = f
        .object_map()
        .iter()
        .map(|o| image.binary_search(o).expect("image"))
        .collect();
    let mor = f.morphism_map().iter().map(|&m| back[m]).collect();
    let left = GroupoidFunctor::from_maps_unchecked(f.source().clone(), middle.clone(), obj, mor);
    Ok(Factorization {
        left,
        middle,
        right,
    })
}

/// Same objects as the source; hom-sets are the images of the source hom-sets.
fn hom_image_factorization(f: &GroupoidFunctor) -> Factorization {
    let (x, y) = (f.source(), f.target());
    let mut comps = Vec::new();
    let mut images = Vec::new();
    for (c, comp) in x.components().iter().enumerate() {
        let fm = y.decode(f.mor(x.encode(Mor {
            comp: c,
            src: 0,
            tgt: 0,
            elem: 0,
        })));
        let phi: Vec<usize> = (0..comp.group.order())
            .map(|elem| {
                y.decode(f.mor(x.encode(Mor {
                    comp: c,
                    src: 0,
                    tgt: 0,
                    elem,
                })))
                .elem
            })
            .collect();
        let mut elems = phi.clone();
        elems.sort_unstable();
        elems.dedup();
        let sub: Group = y.component(fm.comp).group.subgroup(&elems);
        comps.push(Component {
            group: sub,
            objects: comp.objects.clone(),
        });
        images.push((fm, phi, elems));
    }
    let middle =
        FiniteGroupoid::from_components(x.num_objects(), comps).expect("same layout as the source");
    let mut left_data = Vec::new();
    let mut right_data = Vec::new();
    for (c, comp) in x.components().iter().enumerate() {
        let (fm, phi, elems) = &images[c];
        let idx = |e: usize| elems.binary_search(&e).expect("image element");
        left_data.push((
            comp.objects.iter().map(|&o| middle.transport(o)).collect(),
            phi.iter()
                .map(|&e| {
                    middle.encode(Mor {
                        comp: c,
                        src: 0,
                        tgt: 0,
                        elem: idx(e),
                    })
                })
                .collect(),
        ));
        right_data.push((
            comp.objects
                .iter()
                .map(|&o| f.mor(x.transport(o)))
                .collect(),
            elems
                .iter()
                .map(|&e| y.encode(Mor { elem: e, ..*fm }))
                .collect(),
        ));
    }
    Factorization {
        left: GroupoidFunctor::assemble(x.clone(), middle.clone(), &left_data),
        right: GroupoidFunctor::assemble(middle.clone(), y.clone(), &right_data),
        middle,
    }
}

/// Pulling back component subsets of the target along a functor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubRestriction {
    pub target_components: usize,
    pub source_components: usize,
    /// Indexed by a bit mask of target components; entries are masks of source components.
    pub images: Vec<u64>,
    pub injective: bool,
}

const MAX_SUB_COMPONENTS: usize = 20;

pub fn sub_restriction(f: &GroupoidFunctor) -> Result<SubRestriction> {
    let (nx, ny) = (f.source().num_components(), f.target().num_components());
    if ny > MAX_SUB_COMPONENTS || nx > 64 {
        return Err(Error::SizeCap {
            what: "component subsets",
            size: ny.max(nx) as u128,
            cap: MAX_SUB_COMPONENTS as u128,
        });
    }
    let p = f.pi0_map();
    let images: Vec<u64> = (0..1u64 << ny)
        .map(|s| {
            p.iter()
                .enumerate()
                .filter(|(_, &d)| s >> d & 1 == 1)
                .fold(0, |acc, (c, _)| acc | 1 << c)
        })
        .collect();
    let mut sorted = images.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let injective = sorted.len() == images.len();
    Ok(SubRestriction {
        target_components: ny,
        source_components: nx,
        images,
        injective,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::constructions::homotopy_fiber;

    fn bz2() -> FiniteGroupoid {
        FiniteGroupoid::bg(Group::cyclic(2))
    }

    fn point_into_pair() -> GroupoidFunctor {
        GroupoidFunctor::new(
            FiniteGroupoid::point(),
            FiniteGroupoid::discrete(2),
            vec![0],
            vec![0],
        )
        .unwrap()
    }

    #[test]
    fn fibers_of_basic_functors() {
        let id = GroupoidFunctor::identity(&bz2());
        assert!(homotopy_fiber(&id, 0).unwrap().is_contractible());
        let fib = homotopy_fiber(&GroupoidFunctor::to_point(&bz2()), 0).unwrap();
        assert!(fib.is_connected());
        assert_eq!(fib.component(0).group.order(), 2);
        assert!(homotopy_fiber(&point_into_pair(), 1).unwrap().is_empty());
        assert!(homotopy_fiber(&point_into_pair(), 2).is_err());
    }

    #[test]
    fn levels() {
        let to_pt = GroupoidFunctor::to_point(&bz2());
        assert_eq!(conn_level(&to_pt).unwrap(), ConnLevel::Finite(0));
        assert_eq!(trunc_level(&to_pt).unwrap(), 1);
        assert_eq!(
            conn_level(&point_into_pair()).unwrap(),
            ConnLevel::Finite(-2)
        );
        assert_eq!(trunc_level(&point_into_pair()).unwrap(), -1);
        let id = GroupoidFunctor::identity(&bz2());
        assert_eq!(conn_level(&id).unwrap(), ConnLevel::Infinite);
        assert_eq!(trunc_level(&id).unwrap(), -2);
        let z3 = FiniteGroupoid::bg(Group::cyclic(3));
        let faithful = GroupoidFunctor::to_point(&FiniteGroupoid::discrete(2));
        assert_eq!(trunc_level(&faithful).unwrap(), 0);
        assert_eq!(
            conn_level(&GroupoidFunctor::to_point(&z3)).unwrap(),
            ConnLevel::Finite(0)
        );
    }

    #[test]
    fn factorizations() {
        let f = point_into_pair();
        let im = factorize(&f, -1).unwrap();
        assert_eq!(im.middle.num_objects(), 1);
        assert!(im.left.is_equivalence());
        let to_pt = GroupoidFunctor::to_point(&bz2());
        let t0 = factorize(&to_pt, 0).unwrap();
        assert!(t0.middle.is_contractible());
        assert!(conn_level(&t0.left).unwrap().at_least(0));
        for n in -2..=1 {
            factorize(&f, n).unwrap();
            factorize(&to_pt, n).unwrap();
        }
        assert!(factorize(&f, 2).is_err());
    }

    #[test]
    fn sub_restrictions() {
        let id = sub_restriction(&GroupoidFunctor::identity(&FiniteGroupoid::discrete(2))).unwrap();
        assert!(id.injective);
        assert_eq!(id.images, vec![0, 1, 2, 3]);
        assert!(
            sub_restriction(&GroupoidFunctor::to_point(&bz2()))
                .unwrap()
                .injective
        );
        let r = sub_restriction(&point_into_pair()).unwrap();
        assert!(!r.injective);
        assert_eq!(r.images[0], r.images[2]);
    }
}
