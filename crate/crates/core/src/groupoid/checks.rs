use super::constructions::{
    mapping_groupoid, mapping_groupoid_capped, pullback_materialized, skeleton, FunctorGroupoid,
    DEFAULT_SIZE_CAP,
};
use super::groupoid::{FiniteGroupoid, GroupoidFunctor};
use super::levels::{conn_level, trunc_level};
use crate::error::{Error, Result};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

/// Whether `X -> X^A` (constant diagrams) is an equivalence. `A` is replaced by
/// its skeleton, which changes `X^A` only up to equivalence.
pub fn is_local(x: &FiniteGroupoid, a: &FiniteGroupoid) -> Result<bool> {
    let a = skeleton(a).object;
    let fun = mapping_groupoid(&a, x)?;
    let na = a.num_objects();
    let obj: Vec<usize> = (0..x.num_objects())
        .map(|o| fun.object_index(&vec![x.identity(o); a.num_morphisms()]))
        .collect();
    let mor = (0..x.num_morphisms())
        .map(|m| fun.mor_id(obj[x.src(m)], &vec![m; na]))
        .collect();
    let constant =
        GroupoidFunctor::from_maps_unchecked(x.clone(), fun.groupoid().clone(), obj, mor);
    Ok(constant.is_equivalence())
}

/// Sizes of the two corners of the gap map and whether it is an equivalence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapReport {
    /// `(objects, components)` of `W^Y`.
    pub source: (usize, usize),
    /// `(objects, components)` of `Z^Y x_{Z^X} W^X`.
    pub target: (usize, usize),
    pub equivalence: bool,
}

/// Replaces `f` by `r . f . i` between skeleta.
fn skeletal(f: &GroupoidFunctor) -> GroupoidFunctor {
    let (sx, sy) = (skeleton(f.source()), skeleton(f.target()));
    let g = f.compose(&sx.inclusion).expect("composable");
    sy.retraction.compose(&g).expect("composable")
}

fn post(fun: &FunctorGroupoid, target: &FunctorGroupoid, g: &GroupoidFunctor) -> GroupoidFunctor {
    fun.induced(
        target,
        |h| h.iter().map(|&m| g.mor(m)).collect(),
        |eta| eta.iter().map(|&m| g.mor(m)).collect(),
    )
}

fn pre(fun: &FunctorGroupoid, target: &FunctorGroupoid, f: &GroupoidFunctor) -> GroupoidFunctor {
    let nx = f.source().num_objects();
    fun.induced(
        target,
        |h| f.morphism_map().iter().map(|&m| h[m]).collect(),
        |eta| (0..nx).map(|o| eta[f.obj(o)]).collect(),
    )
}

/// The gap map `u: W^Y -> Z^Y x_{Z^X} W^X` for `f: X -> Y` and `g: W -> Z`,
/// computed between skeleta.
pub fn gap_report(f: &GroupoidFunctor, g: &GroupoidFunctor) -> Result<GapReport> {
    gap_report_capped(f, g, DEFAULT_SIZE_CAP)
}

pub fn gap_report_capped(f: &GroupoidFunctor, g: &GroupoidFunctor, cap: u128) -> Result<GapReport> {
    let (f, g) = (skeletal(f), skeletal(g));
    let (x, y, w, z) = (f.source(), f.target(), g.source(), g.target());
    let wy = mapping_groupoid_capped(y, w, cap)?;
    let zy = mapping_groupoid_capped(y, z, cap)?;
    let wx = mapping_groupoid_capped(x, w, cap)?;
    let zx = mapping_groupoid_capped(x, z, cap)?;
    let pre_z = pre(&zy, &zx, &f);
    let post_x = post(&wx, &zx, &g);
    let (p, pb) = pullback_materialized(&pre_z, &post_x, cap)?;
    let src = wy.groupoid();
    let mut obj = Vec::with_capacity(src.num_objects());
    for i in 0..src.num_objects() {
        let h = wy.key(i);
        let a = zy.object_index(&h.iter().map(|&m| g.mor(m)).collect());
        let b = wx.object_index(&f.morphism_map().iter().map(|&m| h[m]).collect());
        obj.push(pb.object_id(&(a, b, zx.groupoid().identity(pre_z.obj(a)))));
    }
    let mor = (0..src.num_morphisms())
        .map(|id| {
            let from = src.src(id);
            let eta = wy.components_of(id);
            let (a, b, _) = pb.objects[obj[from]];
            let u = zy.mor_id(a, &eta.iter().map(|&m| g.mor(m)).collect());
            let v = wx.mor_id(b, &(0..x.num_objects()).map(|o| eta[f.obj(o)]).collect());
            pb.mor_id(&p, obj[from], &(u, v))
        })
        .collect();
    let target = pb.groupoid.clone();
    let gap = GroupoidFunctor::from_maps_unchecked(src.clone(), target.clone(), obj, mor);
    Ok(GapReport {
        source: (src.num_objects(), src.num_components()),
        target: (target.num_objects(), target.num_components()),
        equivalence: gap.is_equivalence(),
    })
}

/// Unique lifting of `f` against `g`, for `f` n-connected and `g` n-truncated.
pub fn orthogonality_check(f: &GroupoidFunctor, g: &GroupoidFunctor, n: i64) -> Result<bool> {
    let (c, t) = (conn_level(f)?, trunc_level(g)?);
    if !c.at_least(n) || t > n {
        return Err(Error::Precondition(format!(
            "orthogonality needs the left map {n}-connected and the right map {n}-truncated; got connectivity {c} and truncation level {t}"
        )));
    }
    Ok(gap_report(f, g)?.equivalence)
}

/// Whether the gap map is an equivalence, for `g` n-truncated.
pub fn gap_map_check(f: &GroupoidFunctor, g: &GroupoidFunctor, n: i64) -> Result<bool> {
    let t = trunc_level(g)?;
    if t > n {
        return Err(Error::Precondition(format!(
            "the right map must be {n}-truncated; its truncation level is {t}"
        )));
    }
    Ok(gap_report(f, g)?.equivalence)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::constructions::{mapping_groupoid, pullback};
    use crate::groupoid::Group;

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
    fn mapping_groupoids() {
        let x = FiniteGroupoid::codiscrete(2).disjoint_union(&bz2());
        assert!(mapping_groupoid(&FiniteGroupoid::point(), &x)
            .unwrap()
            .groupoid()
            .is_equivalent(&x));
        let two = mapping_groupoid(&FiniteGroupoid::discrete(2), &x).unwrap();
        assert!(two.groupoid().is_equivalent(&x.product(&x)));
        let ends = mapping_groupoid(&bz2(), &bz2()).unwrap();
        assert!(ends.groupoid().is_equivalent(&bz2().disjoint_union(&bz2())));
        let empty = mapping_groupoid(&FiniteGroupoid::empty(), &x).unwrap();
        assert!(empty.groupoid().is_contractible());
    }

    #[test]
    fn size_cap_is_distinct() {
        let big = FiniteGroupoid::codiscrete(3).product(&FiniteGroupoid::bg(Group::cyclic(3)));
        let err = mapping_groupoid(&FiniteGroupoid::discrete(6), &big).unwrap_err();
        assert!(matches!(err, Error::SizeCap { .. }), "{err:?}");
    }

    #[test]
    fn pullbacks() {
        let to_pt = |g: &FiniteGroupoid| GroupoidFunctor::to_point(g);
        let (a, b) = (bz2(), FiniteGroupoid::discrete(3));
        assert!(pullback(&to_pt(&a), &to_pt(&b))
            .unwrap()
            .object
            .is_equivalent(&a.product(&b)));
        let y = GroupoidFunctor::new(
            FiniteGroupoid::point(),
            FiniteGroupoid::discrete(2),
            vec![1],
            vec![1],
        )
        .unwrap();
        assert!(pullback(&point_into_pair(), &y).unwrap().object.is_empty());
        let id = GroupoidFunctor::identity(&bz2());
        let p = pullback(&id, &id).unwrap().object;
        assert_eq!(p.num_objects(), 2);
        assert!(p.is_equivalent(&bz2()));
    }

    #[test]
    fn locality() {
        let x = bz2().disjoint_union(&FiniteGroupoid::codiscrete(2));
        assert!(is_local(&x, &FiniteGroupoid::point()).unwrap());
        assert!(is_local(
            &FiniteGroupoid::discrete(3),
            &bz2().disjoint_union(&FiniteGroupoid::codiscrete(0))
        )
        .unwrap());
        assert!(is_local(&FiniteGroupoid::discrete(3), &FiniteGroupoid::codiscrete(3)).unwrap());
        assert!(!is_local(&bz2(), &FiniteGroupoid::discrete(2)).unwrap());
    }

    #[test]
    fn orthogonality_and_gap() {
        let f = GroupoidFunctor::to_point(&bz2());
        let g = GroupoidFunctor::to_point(&FiniteGroupoid::discrete(2));
        assert!(orthogonality_check(&f, &g, 0).unwrap());
        assert!(gap_map_check(&f, &g, 0).unwrap());
        let bad = point_into_pair();
        assert!(matches!(
            orthogonality_check(&bad, &g, 0),
            Err(Error::Precondition(_))
        ));
        let r = gap_report(&bad, &g).unwrap();
        assert!(!r.equivalence);
        assert_eq!(r.source.0, 4);
        assert_eq!(r.target.0, 2);
        assert!(!gap_map_check(&bad, &g, 0).unwrap());
        let id = GroupoidFunctor::identity(&bz2());
        assert!(gap_map_check(&id, &GroupoidFunctor::to_point(&bz2()), 1).unwrap());
        assert!(orthogonality_check(&f, &GroupoidFunctor::identity(&bz2()), 0).unwrap());
    }
}
