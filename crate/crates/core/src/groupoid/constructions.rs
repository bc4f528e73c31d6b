use super::groupoid::{FiniteGroupoid, GroupoidFunctor, Mor};
use super::implicit::{materialize, Materialized, Presentation};
use crate::error::{Error, Result};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

/// Default bound on the number of morphisms of any enumerated groupoid.
pub const DEFAULT_SIZE_CAP: u128 = 1_000_000;

struct FiberP<'a> {
    f: &'a GroupoidFunctor,
    y: usize,
}

impl Presentation for FiberP<'_> {
    type Obj = (usize, usize);
    type Mor = usize;

    fn objects(&self) -> Vec<(usize, usize)> {
        let (x, y) = (self.f.source(), self.f.target());
        (0..x.num_objects())
            .flat_map(|a| {
                y.hom(self.f.obj(a), self.y)
                    .into_iter()
                    .map(move |al| (a, al))
            })
            .collect()
    }

    fn out(&self, a: &(usize, usize)) -> Vec<usize> {
        self.f.source().out(a.0)
    }

    fn target(&self, a: &(usize, usize), u: &usize) -> (usize, usize) {
        let y = self.f.target();
        (
            self.f.source().tgt(*u),
            y.compose(a.1, y.inverse(self.f.mor(*u)))
                .expect("composable"),
        )
    }

    fn compose(&self, g: &usize, f: &usize) -> usize {
        self.f.source().compose(*g, *f).expect("composable")
    }

    fn inverse(&self, f: &usize) -> usize {
        self.f.source().inverse(*f)
    }

    fn identity(&self, a: &(usize, usize)) -> usize {
        self.f.source().identity(a.0)
    }
}

/// Comma groupoid over `y`: objects `(x, a: F x -> y)`, morphisms `u: x -> x'`
/// with `a' . F u = a`.
pub fn homotopy_fiber(f: &GroupoidFunctor, y: usize) -> Result<FiniteGroupoid> {
    if y >= f.target().num_objects() {
        return Err(Error::InvalidInput(format!(
            "object {y} is not in the target"
        )));
    }
    Ok(materialize(&FiberP { f, y }, DEFAULT_SIZE_CAP)?.groupoid)
}

pub(crate) struct PullbackP<'a> {
    pub f: &'a GroupoidFunctor,
    pub g: &'a GroupoidFunctor,
}

impl Presentation for PullbackP<'_> {
    type Obj = (usize, usize, usize);
    type Mor = (usize, usize);

    fn objects(&self) -> Vec<(usize, usize, usize)> {
        let (a, b, c) = (self.f.source(), self.g.source(), self.f.target());
        let mut out = Vec::new();
        for x in 0..a.num_objects() {
            for y in 0..b.num_objects() {
                for phi in c.hom(self.f.obj(x), self.g.obj(y)) {
                    out.push((x, y, phi));
                }
            }
        }
        out
    }

    fn out(&self, o: &(usize, usize, usize)) -> Vec<(usize, usize)> {
        let bs = self.g.source().out(o.1);
        self.f
            .source()
            .out(o.0)
            .into_iter()
            .flat_map(|u| bs.iter().map(move |&v| (u, v)))
            .collect()
    }

    fn target(&self, o: &(usize, usize, usize), m: &(usize, usize)) -> (usize, usize, usize) {
        let c = self.f.target();
        let phi = c.compose(
            self.g.mor(m.1),
            c.compose(o.2, c.inverse(self.f.mor(m.0)))
                .expect("composable"),
        );
        (
            self.f.source().tgt(m.0),
            self.g.source().tgt(m.1),
            phi.expect("composable"),
        )
    }

    fn compose(&self, g: &(usize, usize), f: &(usize, usize)) -> (usize, usize) {
        (
            self.f.source().compose(g.0, f.0).expect("composable"),
            self.g.source().compose(g.1, f.1).expect("composable"),
        )
    }

    fn inverse(&self, f: &(usize, usize)) -> (usize, usize) {
        (self.f.source().inverse(f.0), self.g.source().inverse(f.1))
    }

    fn identity(&self, o: &(usize, usize, usize)) -> (usize, usize) {
        (self.f.source().identity(o.0), self.g.source().identity(o.1))
    }
}

/// Iso-comma square over `F: A -> C` and `G: B -> C`.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub object: FiniteGroupoid,
    pub pr1: GroupoidFunctor,
    pub pr2: GroupoidFunctor,
    /// `(a, b, phi: F a -> G b)` for each object.
    pub keys: Vec<(usize, usize, usize)>,
    /// `(u, v)` for each morphism.
    pub labels: Vec<(usize, usize)>,
}

impl Pullback {
    pub fn find(&self, key: &(usize, usize, usize)) -> Option<usize> {
        self.keys.iter().position(|k| k == key)
    }

    /// The morphism out of object `from` with components `(u, v)`.
    pub fn morphism(&self, from: usize, label: (usize, usize)) -> Option<usize> {
        self.object
            .out(from)
            .into_iter()
            .find(|&m| self.labels[m] == label)
    }
}

pub(crate) fn pullback_materialized<'a>(
    f: &'a GroupoidFunctor,
    g: &'a GroupoidFunctor,
    cap: u128,
) -> Result<(PullbackP<'a>, Materialized<PullbackP<'a>>)> {
    if f.target() != g.target() {
        return Err(Error::Mismatch(
            "pullback legs have different targets".into(),
        ));
    }
    let p = PullbackP { f, g };
    let m = materialize(&p, cap)?;
    Ok((p, m))
}

pub fn pullback(f: &GroupoidFunctor, g: &GroupoidFunctor) -> Result<Pullback> {
    let (p, m) = pullback_materialized(f, g, DEFAULT_SIZE_CAP)?;
    let labels: Vec<(usize, usize)> = (0..m.groupoid.num_morphisms())
        .map(|id| m.label(&p, id))
        .collect();
    let pr1 = GroupoidFunctor::from_maps_unchecked(
        m.groupoid.clone(),
        f.source().clone(),
        m.objects.iter().map(|o| o.0).collect(),
        labels.iter().map(|l| l.0).collect(),
    );
    let pr2 = GroupoidFunctor::from_maps_unchecked(
        m.groupoid.clone(),
        g.source().clone(),
        m.objects.iter().map(|o| o.1).collect(),
        labels.iter().map(|l| l.1).collect(),
    );
    Ok(Pullback {
        object: m.groupoid,
        pr1,
        pr2,
        keys: m.objects,
        labels,
    })
}

/// One object per component, with inclusion and retraction (mutually inverse
/// up to natural isomorphism).
#[derive(Clone, Debug)]
pub struct Skeleton {
    pub object: FiniteGroupoid,
    pub inclusion: GroupoidFunctor,
    pub retraction: GroupoidFunctor,
}

pub fn skeleton(x: &FiniteGroupoid) -> Skeleton {
    let object = FiniteGroupoid::skeletal(x.components().iter().map(|c| c.group.clone()).collect());
    let auts = |g: &FiniteGroupoid, c: usize, at: usize| -> Vec<usize> {
        (0..g.component(c).group.order())
            .map(|elem| {
                g.encode(Mor {
                    comp: c,
                    src: at,
                    tgt: at,
                    elem,
                })
            })
            .collect()
    };
    let inc: Vec<_> = (0..x.num_components())
        .map(|c| (vec![x.identity(x.rep(c))], auts(x, c, 0)))
        .collect();
    let ret: Vec<_> = (0..x.num_components())
        .map(|c| {
            (
                vec![object.identity(c); x.component(c).objects.len()],
                auts(&object, c, 0),
            )
        })
        .collect();
    Skeleton {
        inclusion: GroupoidFunctor::assemble(object.clone(), x.clone(), &inc),
        retraction: GroupoidFunctor::assemble(x.clone(), object.clone(), &ret),
        object,
    }
}

/// The set of components as a discrete groupoid, with the unit `X -> pi0 X`.
pub fn truncate0(x: &FiniteGroupoid) -> GroupoidFunctor {
    let t = FiniteGroupoid::discrete(x.num_components());
    let data: Vec<_> = x
        .components()
        .iter()
        .enumerate()
        .map(|(c, comp)| {
            (
                vec![t.identity(c); comp.objects.len()],
                vec![t.identity(c); comp.group.order()],
            )
        })
        .collect();
    GroupoidFunctor::assemble(x.clone(), t, &data)
}

/// The diagonal `X -> X x X`.
pub fn diagonal(x: &FiniteGroupoid) -> GroupoidFunctor {
    let xx = x.product(x);
    let n = x.num_objects();
    let data: Vec<_> = x
        .components()
        .iter()
        .enumerate()
        .map(|(c, comp)| {
            let k = comp.objects.len();
            let cc = xx.comp_of(x.rep(c) * n + x.rep(c));
            let order = comp.group.order();
            let transports = (0..k)
                .map(|i| {
                    xx.encode(Mor {
                        comp: cc,
                        src: 0,
                        tgt: i * k + i,
                        elem: 0,
                    })
                })
                .collect();
            let group = (0..order)
                .map(|g| {
                    xx.encode(Mor {
                        comp: cc,
                        src: 0,
                        tgt: 0,
                        elem: g * order + g,
                    })
                })
                .collect();
            (transports, group)
        })
        .collect();
    GroupoidFunctor::assemble(x.clone(), xx, &data)
}

pub(crate) struct FunP {
    pub a: FiniteGroupoid,
    pub x: FiniteGroupoid,
    functors: Vec<Vec<usize>>,
}

impl FunP {
    fn obj_of(&self, mor: &[usize], o: usize) -> usize {
        self.x.src(mor[self.a.identity(o)])
    }
}

impl Presentation for FunP {
    type Obj = Vec<usize>;
    type Mor = Vec<usize>;

    fn objects(&self) -> Vec<Vec<usize>> {
        self.functors.clone()
    }

    fn out(&self, f: &Vec<usize>) -> Vec<Vec<usize>> {
        let mut acc: Vec<Vec<usize>> = vec![Vec::new()];
        for o in 0..self.a.num_objects() {
            let choices = self.x.out(self.obj_of(f, o));
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    choices.iter().map(move |&c| {
                        let mut v = prefix.clone();
                        v.push(c);
                        v
                    })
                })
                .collect();
        }
        acc
    }

    fn target(&self, f: &Vec<usize>, eta: &Vec<usize>) -> Vec<usize> {
        let (a, x) = (&self.a, &self.x);
        (0..a.num_morphisms())
            .map(|m| {
                let back = x
                    .compose(f[m], x.inverse(eta[a.src(m)]))
                    .expect("composable");
                x.compose(eta[a.tgt(m)], back).expect("composable")
            })
            .collect()
    }

    fn compose(&self, g: &Vec<usize>, f: &Vec<usize>) -> Vec<usize> {
        g.iter()
            .zip(f)
            .map(|(&s, &t)| self.x.compose(s, t).expect("composable"))
            .collect()
    }

    fn inverse(&self, f: &Vec<usize>) -> Vec<usize> {
        f.iter().map(|&m| self.x.inverse(m)).collect()
    }

    fn identity(&self, f: &Vec<usize>) -> Vec<usize> {
        (0..self.a.num_objects())
            .map(|o| self.x.identity(self.obj_of(f, o)))
            .collect()
    }
}

/// The functor groupoid `X^A`: functors as objects, natural isomorphisms as morphisms.
pub struct FunctorGroupoid {
    pres: FunP,
    mat: Materialized<FunP>,
}

impl core::fmt::Debug for FunctorGroupoid {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("FunctorGroupoid")
            .field("groupoid", &self.mat.groupoid)
            .finish()
    }
}

/// Enumerates functors component by component: the image of the first object,
/// a homomorphism on its automorphism group, and images of the transports.
fn enumerate_functors(
    a: &FiniteGroupoid,
    x: &FiniteGroupoid,
    cap: u128,
) -> Result<Vec<Vec<usize>>> {
    let mut per_comp: Vec<Vec<(Vec<usize>, Vec<usize>)>> = Vec::new();
    let mut count: u128 = 1;
    for comp in a.components() {
        let mut options = Vec::new();
        for x0 in 0..x.num_objects() {
            let (cx, ix) = x.position(x0);
            let homs = comp.group.homs_to(&x.component(cx).group);
            let out = x.out(x0);
            let k = comp.objects.len();
            let n = homs.len() as u128 * (out.len() as u128).pow(k as u32 - 1);
            if count.saturating_mul(options.len() as u128 + n) > cap {
                return Err(Error::SizeCap {
                    what: "functor enumeration",
                    size: count * n,
                    cap,
                });
            }
            for phi in &homs {
                let group: Vec<usize> = phi
                    .iter()
                    .map(|&h| {
                        x.encode(Mor {
                            comp: cx,
                            src: ix,
                            tgt: ix,
                            elem: h,
                        })
                    })
                    .collect();
                let mut transports: Vec<Vec<usize>> = vec![vec![x.identity(x0)]];
                for _ in 1..k {
                    transports = transports
                        .into_iter()
                        .flat_map(|t| {
                            out.iter().map(move |&m| {
                                let mut t = t.clone();
                                t.push(m);
                                t
                            })
                        })
                        .collect();
                }
                options.extend(transports.into_iter().map(|t| (t, group.clone())));
            }
        }
        count = count.saturating_mul(options.len() as u128);
        per_comp.push(options);
    }
    if count > cap {
        return Err(Error::SizeCap {
            what: "functor enumeration",
            size: count,
            cap,
        });
    }
    let mut choice = vec![0usize; per_comp.len()];
    let mut out = Vec::with_capacity(count as usize);
    if per_comp.iter().any(Vec::is_empty) {
        return Ok(out);
    }
    loop {
        let data: Vec<_> = choice
            .iter()
            .enumerate()
            .map(|(c, &i)| per_comp[c][i].clone())
            .collect();
        out.push(
            GroupoidFunctor::assemble(a.clone(), x.clone(), &data)
                .morphism_map()
                .to_vec(),
        );
        let mut c = 0;
        loop {
            if c == choice.len() {
                return Ok(out);
            }
            choice[c] += 1;
            if choice[c] < per_comp[c].len() {
                break;
            }
            choice[c] = 0;
            c += 1;
        }
    }
}

/// Every functor `A -> X`.
pub fn all_functors(a: &FiniteGroupoid, x: &FiniteGroupoid) -> Result<Vec<GroupoidFunctor>> {
    Ok(enumerate_functors(a, x, DEFAULT_SIZE_CAP)?
        .into_iter()
        .map(|mor| {
            let obj = (0..a.num_objects())
                .map(|o| x.src(mor[a.identity(o)]))
                .collect();
            GroupoidFunctor::from_maps_unchecked(a.clone(), x.clone(), obj, mor)
        })
        .collect())
}

pub fn mapping_groupoid(a: &FiniteGroupoid, x: &FiniteGroupoid) -> Result<FunctorGroupoid> {
    mapping_groupoid_capped(a, x, DEFAULT_SIZE_CAP)
}

pub fn mapping_groupoid_capped(
    a: &FiniteGroupoid,
    x: &FiniteGroupoid,
    cap: u128,
) -> Result<FunctorGroupoid> {
    let functors = enumerate_functors(a, x, cap)?;
    let max_out = (0..x.num_objects())
        .map(|o| x.out(o).len())
        .max()
        .unwrap_or(0) as u128;
    let estimate =
        (functors.len() as u128).saturating_mul(max_out.saturating_pow(a.num_objects() as u32));
    if estimate > cap {
        return Err(Error::SizeCap {
            what: "functor groupoid",
            size: estimate,
            cap,
        });
    }
    let pres = FunP {
        a: a.clone(),
        x: x.clone(),
        functors,
    };
    let mat = materialize(&pres, cap)?;
    Ok(FunctorGroupoid { pres, mat })
}

impl FunctorGroupoid {
    pub fn groupoid(&self) -> &FiniteGroupoid {
        &self.mat.groupoid
    }

    pub fn functor(&self, i: usize) -> GroupoidFunctor {
        let mor = self.mat.objects[i].clone();
        let obj = (0..self.pres.a.num_objects())
            .map(|o| self.pres.obj_of(&mor, o))
            .collect();
        GroupoidFunctor::from_maps_unchecked(self.pres.a.clone(), self.pres.x.clone(), obj, mor)
    }

    pub fn index_of(&self, f: &GroupoidFunctor) -> Option<usize> {
        self.mat.find(&f.morphism_map().to_vec())
    }

    pub(crate) fn object_index(&self, mor: &Vec<usize>) -> usize {
        self.mat.object_id(mor)
    }

    pub(crate) fn key(&self, i: usize) -> &Vec<usize> {
        &self.mat.objects[i]
    }

    /// Components of the natural isomorphism with the given id.
    pub fn components_of(&self, id: usize) -> Vec<usize> {
        self.mat.label(&self.pres, id)
    }

    pub(crate) fn mor_id(&self, from: usize, eta: &Vec<usize>) -> usize {
        self.mat.mor_id(&self.pres, from, eta)
    }

    /// The functor `self -> target` given on functors and natural isomorphisms.
    pub(crate) fn induced(
        &self,
        target: &FunctorGroupoid,
        on_obj: impl Fn(&[usize]) -> Vec<usize>,
        on_nat: impl Fn(&[usize]) -> Vec<usize>,
    ) -> GroupoidFunctor {
        let g = self.groupoid();
        let obj: Vec<usize> = self
            .mat
            .objects
            .iter()
            .map(|k| target.object_index(&on_obj(k)))
            .collect();
        let mor = (0..g.num_morphisms())
            .map(|id| target.mor_id(obj[g.src(id)], &on_nat(&self.components_of(id))))
            .collect();
        GroupoidFunctor::from_maps_unchecked(g.clone(), target.groupoid().clone(), obj, mor)
    }
}
