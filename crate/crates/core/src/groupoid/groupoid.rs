use super::group::Group;
use crate::error::{Error, Result};
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

/// A connected component: its automorphism group at `objects[0]` and its objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub group: Group,
    pub objects: Vec<usize>,
}

/// A morphism in structured coordinates: `(src -> tgt, elem)` stands for
/// `t_tgt . elem . t_src^-1`, where `t_i` is the chosen transport from the
/// component's first object to its `i`-th object. Positions are within the component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mor {
    pub comp: usize,
    pub src: usize,
    pub tgt: usize,
    pub elem: usize,
}

#[derive(Debug, PartialEq, Eq)]
struct Inner {
    comps: Vec<Component>,
    pos: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    total: usize,
}

/// A finite groupoid stored component-wise, which makes composition a table
/// lookup in a group and keeps every hom-set a coset of that group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupoid {
    inner: Arc<Inner>,
}

/// Raw category data, as read from a serialized groupoid. `comp[g][f]` is `g . f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidTables {
    pub objects: usize,
    pub morphisms: Vec<(usize, usize)>,
    pub comp: Vec<Vec<Option<usize>>>,
    pub identities: Option<Vec<usize>>,
    /// Declared inverses; missing or `None` entries are searched for.
    pub inverses: Vec<Option<usize>>,
    /// Morphism names for error messages; indices are used when absent.
    pub names: Option<Vec<String>>,
}

impl FiniteGroupoid {
    pub fn from_components(objects: usize, comps: Vec<Component>) -> Result<Self> {
        let mut pos = vec![None; objects];
        for (c, comp) in comps.iter().enumerate() {
            if comp.objects.is_empty() {
                return Err(Error::InvalidGroupoid(format!(
                    "component {c} has no objects"
                )));
            }
            for (i, &o) in comp.objects.iter().enumerate() {
                match pos.get_mut(o) {
                    Some(slot @ None) => *slot = Some((c, i)),
                    _ => {
                        return Err(Error::InvalidGroupoid(format!(
                            "object {o} is out of range or listed twice"
                        )))
                    }
                }
            }
        }
        let pos = pos
            .into_iter()
            .enumerate()
            .map(|(o, p)| {
                p.ok_or_else(|| Error::InvalidGroupoid(format!("object {o} lies in no component")))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut offsets = Vec::with_capacity(comps.len());
        let mut total = 0;
        for comp in &comps {
            offsets.push(total);
            total += comp.objects.len() * comp.objects.len() * comp.group.order();
        }
        Ok(FiniteGroupoid {
            inner: Arc::new(Inner {
                comps,
                pos,
                offsets,
                total,
            }),
        })
    }

    /// One object per group; object `c` has automorphism group `groups[c]`.
    pub fn skeletal(groups: Vec<Group>) -> Self {
        let n = groups.len();
        let comps = groups
            .into_iter()
            .enumerate()
            .map(|(c, group)| Component {
                group,
                objects: vec![c],
            })
            .collect();
        Self::from_components(n, comps).expect("skeletal layout")
    }

    pub fn empty() -> Self {
        Self::skeletal(Vec::new())
    }

    pub fn point() -> Self {
        Self::skeletal(vec![Group::trivial()])
    }

    /// The one-object groupoid `BG`.
    pub fn bg(group: Group) -> Self {
        Self::skeletal(vec![group])
    }

    pub fn discrete(k: usize) -> Self {
        Self::skeletal(vec![Group::trivial(); k])
    }

    /// `k` objects with exactly one morphism between any two.
    pub fn codiscrete(k: usize) -> Self {
        if k == 0 {
            return Self::empty();
        }
        Self::from_components(
            k,
            vec![Component {
                group: Group::trivial(),
                objects: (0..k).collect(),
            }],
        )
        .expect("codiscrete layout")
    }

    pub fn num_objects(&self) -> usize {
        self.inner.pos.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.inner.total
    }

    pub fn num_components(&self) -> usize {
        self.inner.comps.len()
    }

    pub fn components(&self) -> &[Component] {
        &self.inner.comps
    }

    pub fn component(&self, c: usize) -> &Component {
        &self.inner.comps[c]
    }

    /// `(component, position within it)` of an object.
    pub fn position(&self, o: usize) -> (usize, usize) {
        self.inner.pos[o]
    }

    pub fn comp_of(&self, o: usize) -> usize {
        self.inner.pos[o].0
    }

    pub fn rep(&self, c: usize) -> usize {
        self.inner.comps[c].objects[0]
    }

    pub fn is_empty(&self) -> bool {
        self.num_objects() == 0
    }

    pub fn is_connected(&self) -> bool {
        self.num_components() == 1
    }

    /// Every automorphism group is trivial, so the groupoid is equivalent to a set.
    pub fn is_discrete(&self) -> bool {
        self.inner.comps.iter().all(|c| c.group.is_trivial())
    }

    pub fn is_contractible(&self) -> bool {
        self.is_connected() && self.is_discrete()
    }

    pub fn encode(&self, m: Mor) -> usize {
        let c = &self.inner.comps[m.comp];
        let k = c.objects.len();
        self.inner.offsets[m.comp] + (m.src * k + m.tgt) * c.group.order() + m.elem
    }

    pub fn decode(&self, id: usize) -> Mor {
        let comp = self.inner.offsets.partition_point(|&o| o <= id) - 1;
        let c = &self.inner.comps[comp];
        let (k, n) = (c.objects.len(), c.group.order());
        let r = id - self.inner.offsets[comp];
        Mor {
            comp,
            src: r / (k * n),
            tgt: (r / n) % k,
            elem: r % n,
        }
    }

    pub fn src(&self, id: usize) -> usize {
        let m = self.decode(id);
        self.inner.comps[m.comp].objects[m.src]
    }

    pub fn tgt(&self, id: usize) -> usize {
        let m = self.decode(id);
        self.inner.comps[m.comp].objects[m.tgt]
    }

    /// `g . f`, when `f` ends where `g` starts.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        let (mf, mg) = (self.decode(f), self.decode(g));
        if mf.comp != mg.comp || mf.tgt != mg.src {
            return None;
        }
        let elem = self.inner.comps[mf.comp].group.mul(mg.elem, mf.elem);
        Some(self.encode(Mor {
            comp: mf.comp,
            src: mf.src,
            tgt: mg.tgt,
            elem,
        }))
    }

    pub fn inverse(&self, f: usize) -> usize {
        let m = self.decode(f);
        let elem = self.inner.comps[m.comp].group.inv(m.elem);
        self.encode(Mor {
            comp: m.comp,
            src: m.tgt,
            tgt: m.src,
            elem,
        })
    }

    pub fn identity(&self, o: usize) -> usize {
        let (comp, i) = self.position(o);
        self.encode(Mor {
            comp,
            src: i,
            tgt: i,
            elem: 0,
        })
    }

    /// The chosen transport from the component's first object to `o`.
    pub fn transport(&self, o: usize) -> usize {
        let (comp, i) = self.position(o);
        self.encode(Mor {
            comp,
            src: 0,
            tgt: i,
            elem: 0,
        })
    }

    pub fn hom(&self, a: usize, b: usize) -> Vec<usize> {
        let ((ca, i), (cb, j)) = (self.position(a), self.position(b));
        if ca != cb {
            return Vec::new();
        }
        let n = self.inner.comps[ca].group.order();
        (0..n)
            .map(|elem| {
                self.encode(Mor {
                    comp: ca,
                    src: i,
                    tgt: j,
                    elem,
                })
            })
            .collect()
    }

    /// Every morphism with source `a`.
    pub fn out(&self, a: usize) -> Vec<usize> {
        let c = self.comp_of(a);
        self.inner.comps[c]
            .objects
            .iter()
            .flat_map(|&b| self.hom(a, b))
            .collect()
    }

    pub fn disjoint_union(&self, other: &FiniteGroupoid) -> FiniteGroupoid {
        let shift = self.num_objects();
        let mut comps = self.inner.comps.clone();
        comps.extend(other.inner.comps.iter().map(|c| Component {
            group: c.group.clone(),
            objects: c.objects.iter().map(|o| o + shift).collect(),
        }));
        Self::from_components(shift + other.num_objects(), comps).expect("disjoint union layout")
    }

    /// Objects `(a, b)` are numbered `a * |B| + b`.
    pub fn product(&self, other: &FiniteGroupoid) -> FiniteGroupoid {
        let nb = other.num_objects();
        let mut comps = Vec::new();
        for ca in self.components() {
            for cb in other.components() {
                let objects = ca
                    .objects
                    .iter()
                    .flat_map(|&a| cb.objects.iter().map(move |&b| a * nb + b))
                    .collect();
                comps.push(Component {
                    group: ca.group.direct_product(&cb.group),
                    objects,
                });
            }
        }
        Self::from_components(self.num_objects() * nb, comps).expect("product layout")
    }

    /// The full subgroupoid on `objects` (renumbered `0..` in the given order) with
    /// its inclusion. Structured coordinates carry over unchanged apart from positions.
    pub fn full_subgroupoid(&self, objects: &[usize]) -> Result<(FiniteGroupoid, GroupoidFunctor)> {
        let mut comps: Vec<Component> = Vec::new();
        let mut comp_index: Vec<Option<usize>> = vec![None; self.num_components()];
        let mut origin = Vec::new();
        for (new, &o) in objects.iter().enumerate() {
            if o >= self.num_objects() || objects[..new].contains(&o) {
                return Err(Error::InvalidInput(format!(
                    "object {o} is not in the groupoid or repeated"
                )));
            }
            let c = self.comp_of(o);
            let slot = *comp_index[c].get_or_insert_with(|| {
                comps.push(Component {
                    group: self.component(c).group.clone(),
                    objects: Vec::new(),
                });
                origin.push(c);
                comps.len() - 1
            });
            comps[slot].objects.push(new);
        }
        let sub = FiniteGroupoid::from_components(objects.len(), comps)?;
        let mor = (0..sub.num_morphisms())
            .map(|id| {
                let m = sub.decode(id);
                let objs = &sub.component(m.comp).objects;
                let (i, j) = (
                    self.position(objects[objs[m.src]]).1,
                    self.position(objects[objs[m.tgt]]).1,
                );
                self.encode(Mor {
                    comp: origin[m.comp],
                    src: i,
                    tgt: j,
                    elem: m.elem,
                })
            })
            .collect();
        let inc = GroupoidFunctor {
            source: sub.clone(),
            target: self.clone(),
            obj: objects.to_vec(),
            mor,
        };
        debug_assert!(inc.validate().is_ok());
        Ok((sub, inc))
    }

    pub fn to_tables(&self) -> GroupoidTables {
        let m = self.num_morphisms();
        GroupoidTables {
            objects: self.num_objects(),
            morphisms: (0..m).map(|f| (self.src(f), self.tgt(f))).collect(),
            comp: (0..m)
                .map(|g| (0..m).map(|f| self.compose(g, f)).collect())
                .collect(),
            identities: Some((0..self.num_objects()).map(|o| self.identity(o)).collect()),
            inverses: (0..m).map(|f| Some(self.inverse(f))).collect(),
            names: None,
        }
    }

    /// Validates raw tables and converts them. The second component maps each
    /// table morphism to its structured id.
    pub fn from_tables(t: &GroupoidTables) -> Result<(FiniteGroupoid, Vec<usize>)> {
        let m = t.morphisms.len();
        let bad = |s: alloc::string::String| Err(Error::InvalidGroupoid(s));
        if t.names.as_ref().is_some_and(|n| n.len() != m) {
            return bad("name list has the wrong length".into());
        }
        let name = |f: usize| {
            t.names
                .as_ref()
                .map_or_else(|| format!("{f}"), |n| n[f].clone())
        };
        for (f, &(s, d)) in t.morphisms.iter().enumerate() {
            if s >= t.objects || d >= t.objects {
                return bad(format!(
                    "morphism {} has an endpoint outside the object set",
                    name(f)
                ));
            }
        }
        if t.comp.len() != m || t.comp.iter().any(|r| r.len() != m) {
            return bad(format!("composition table must be {m} x {m}"));
        }
        for g in 0..m {
            for f in 0..m {
                let composable = t.morphisms[g].0 == t.morphisms[f].1;
                match (composable, t.comp[g][f]) {
                    (true, Some(h))
                        if h < m && t.morphisms[h] == (t.morphisms[f].0, t.morphisms[g].1) => {}
                    (true, _) => {
                        return bad(format!(
                            "composite of {} after {} is missing or has wrong endpoints",
                            name(g),
                            name(f)
                        ))
                    }
                    (false, Some(_)) => {
                        return bad(format!(
                            "composite of {} after {} is defined but they do not compose",
                            name(g),
                            name(f)
                        ))
                    }
                    (false, None) => {}
                }
            }
        }
        let comp = |g: usize, f: usize| t.comp[g][f].expect("checked composable");
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); t.objects];
        for (f, &(s, _)) in t.morphisms.iter().enumerate() {
            out[s].push(f);
        }
        for f in 0..m {
            for &g in &out[t.morphisms[f].1] {
                for &h in &out[t.morphisms[g].1] {
                    if comp(h, comp(g, f)) != comp(comp(h, g), f) {
                        return bad(format!(
                            "composition is not associative on ({}, {}, {})",
                            name(h),
                            name(g),
                            name(f)
                        ));
                    }
                }
            }
        }
        let neutral = |o: usize, e: usize| {
            t.morphisms[e] == (o, o)
                && out[o].iter().all(|&f| comp(f, e) == f)
                && (0..m)
                    .filter(|&f| t.morphisms[f].1 == o)
                    .all(|f| comp(e, f) == f)
        };
        let ids: Vec<usize> = match &t.identities {
            Some(ids) => {
                if ids.len() != t.objects {
                    return bad("identity table has the wrong length".into());
                }
                for (o, &e) in ids.iter().enumerate() {
                    if e >= m || !neutral(o, e) {
                        return bad(format!("identity entry for object {o} is not an identity"));
                    }
                }
                ids.clone()
            }
            None => (0..t.objects)
                .map(|o| {
                    out[o]
                        .iter()
                        .copied()
                        .find(|&e| neutral(o, e))
                        .ok_or_else(|| {
                            Error::InvalidGroupoid(format!("object {o} has no identity morphism"))
                        })
                })
                .collect::<Result<_>>()?,
        };
        let mut inverses = Vec::with_capacity(m);
        for f in 0..m {
            let (s, d) = t.morphisms[f];
            let two_sided = |h: usize| {
                h < m && t.morphisms[h] == (d, s) && comp(h, f) == ids[s] && comp(f, h) == ids[d]
            };
            match t.inverses.get(f).copied().flatten() {
                None => match out[d].iter().copied().find(|&h| two_sided(h)) {
                    Some(h) => inverses.push(h),
                    None => return bad(format!("no inverse for morphism {}", name(f))),
                },
                Some(h) if two_sided(h) => inverses.push(h),
                Some(_) => {
                    return bad(format!(
                        "inverse entry for morphism {} is not a two-sided inverse",
                        name(f)
                    ))
                }
            }
        }
        // Components, transports from the least object, automorphism group there.
        let mut comp_of = vec![usize::MAX; t.objects];
        let mut transport = vec![usize::MAX; t.objects];
        let mut comps = Vec::new();
        let mut groups_raw: Vec<Vec<usize>> = Vec::new();
        for r in 0..t.objects {
            if comp_of[r] != usize::MAX {
                continue;
            }
            let c = comps.len();
            let mut objects = Vec::new();
            for &f in &out[r] {
                let d = t.morphisms[f].1;
                if comp_of[d] == usize::MAX {
                    comp_of[d] = c;
                    transport[d] = if d == r { ids[r] } else { f };
                    objects.push(d);
                }
            }
            objects.sort_unstable();
            let mut elems = vec![ids[r]];
            elems.extend(
                out[r]
                    .iter()
                    .copied()
                    .filter(|&f| t.morphisms[f].1 == r && f != ids[r]),
            );
            let n = elems.len();
            let idx = |f: usize| elems.iter().position(|&e| e == f).expect("closed");
            let group = Group::from_fn(n, |a, b| idx(comp(elems[a], elems[b])));
            comps.push(Component { group, objects });
            groups_raw.push(elems);
        }
        let g = FiniteGroupoid::from_components(t.objects, comps)?;
        let inv = |f: usize| inverses[f];
        let translate = (0..m)
            .map(|f| {
                let (a, b) = t.morphisms[f];
                let c = comp_of[a];
                let core = comp(inv(transport[b]), comp(f, transport[a]));
                let elem = groups_raw[c]
                    .iter()
                    .position(|&e| e == core)
                    .expect("automorphism");
                g.encode(Mor {
                    comp: c,
                    src: g.position(a).1,
                    tgt: g.position(b).1,
                    elem,
                })
            })
            .collect();
        Ok((g, translate))
    }

    /// Equivalence of groupoids: same multiset of automorphism groups up to isomorphism.
    pub fn is_equivalent(&self, other: &FiniteGroupoid) -> bool {
        if self.num_components() != other.num_components() {
            return false;
        }
        let mut used = vec![false; other.num_components()];
        self.components().iter().all(|c| {
            let hit = other
                .components()
                .iter()
                .enumerate()
                .find(|(k, d)| !used[*k] && c.group.is_isomorphic(&d.group))
                .map(|(k, _)| k);
            hit.map(|k| used[k] = true).is_some()
        })
    }
}

/// A functor, stored as object and morphism maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidFunctor {
    source: FiniteGroupoid,
    target: FiniteGroupoid,
    obj: Vec<usize>,
    mor: Vec<usize>,
}

impl GroupoidFunctor {
    pub fn new(
        source: FiniteGroupoid,
        target: FiniteGroupoid,
        obj: Vec<usize>,
        mor: Vec<usize>,
    ) -> Result<Self> {
        let f = GroupoidFunctor {
            source,
            target,
            obj,
            mor,
        };
        f.validate()?;
        Ok(f)
    }

    fn validate(&self) -> Result<()> {
        let (x, y) = (&self.source, &self.target);
        let bad = |s: alloc::string::String| Err(Error::InvalidFunctor(s));
        if self.obj.len() != x.num_objects() || self.mor.len() != x.num_morphisms() {
            return bad("object or morphism map has the wrong length".into());
        }
        if self.obj.iter().any(|&o| o >= y.num_objects())
            || self.mor.iter().any(|&f| f >= y.num_morphisms())
        {
            return bad("map points outside the target".into());
        }
        for f in 0..x.num_morphisms() {
            if y.src(self.mor[f]) != self.obj[x.src(f)] || y.tgt(self.mor[f]) != self.obj[x.tgt(f)]
            {
                return bad(format!(
                    "morphism {f} is sent to a morphism with the wrong endpoints"
                ));
            }
        }
        for o in 0..x.num_objects() {
            if self.mor[x.identity(o)] != y.identity(self.obj[o]) {
                return bad(format!("identity of object {o} is not preserved"));
            }
        }
        // Preserving composition reduces to: a homomorphism on each automorphism
        // group, and every morphism determined by transports and that group.
        for (c, comp) in x.components().iter().enumerate() {
            let n = comp.group.order();
            let el = |elem: usize| {
                self.mor[x.encode(Mor {
                    comp: c,
                    src: 0,
                    tgt: 0,
                    elem,
                })]
            };
            for a in 0..n {
                for b in 0..n {
                    if Some(el(comp.group.mul(a, b))) != y.compose(el(a), el(b)) {
                        return bad("composition is not preserved".into());
                    }
                }
            }
            let k = comp.objects.len();
            for i in 0..k {
                for j in 0..k {
                    for elem in 0..n {
                        let m = Mor {
                            comp: c,
                            src: i,
                            tgt: j,
                            elem,
                        };
                        let ti = self.mor[x.transport(comp.objects[i])];
                        let tj = self.mor[x.transport(comp.objects[j])];
                        let want =
                            y.compose(tj, y.compose(el(elem), y.inverse(ti)).expect("composable"));
                        if Some(self.mor[x.encode(m)]) != want {
                            return bad("composition is not preserved".into());
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Builds the functor from, per source component, the images of the transports
    /// (entry 0 must be an identity) and of the automorphism group elements.
    pub(crate) fn assemble(
        source: FiniteGroupoid,
        target: FiniteGroupoid,
        data: &[(Vec<usize>, Vec<usize>)],
    ) -> Self {
        let mut obj = vec![0; source.num_objects()];
        let mut mor = vec![0; source.num_morphisms()];
        for (c, comp) in source.components().iter().enumerate() {
            let (transports, group) = &data[c];
            for (i, &o) in comp.objects.iter().enumerate() {
                obj[o] = target.tgt(transports[i]);
            }
            let k = comp.objects.len();
            for i in 0..k {
                let back = target.inverse(transports[i]);
                for elem in 0..comp.group.order() {
                    let mid = target.compose(group[elem], back).expect("composable");
                    for j in 0..k {
                        let id = source.encode(Mor {
                            comp: c,
                            src: i,
                            tgt: j,
                            elem,
                        });
                        mor[id] = target.compose(transports[j], mid).expect("composable");
                    }
                }
            }
        }
        let f = GroupoidFunctor {
            source,
            target,
            obj,
            mor,
        };
        debug_assert!(f.validate().is_ok(), "{:?}", f.validate());
        f
    }

    pub(crate) fn from_maps_unchecked(
        source: FiniteGroupoid,
        target: FiniteGroupoid,
        obj: Vec<usize>,
        mor: Vec<usize>,
    ) -> Self {
        let f = GroupoidFunctor {
            source,
            target,
            obj,
            mor,
        };
        debug_assert!(f.validate().is_ok(), "{:?}", f.validate());
        f
    }

    pub fn identity(x: &FiniteGroupoid) -> Self {
        GroupoidFunctor {
            source: x.clone(),
            target: x.clone(),
            obj: (0..x.num_objects()).collect(),
            mor: (0..x.num_morphisms()).collect(),
        }
    }

    /// The functor sending everything to `y` and its identity.
    pub fn constant(x: &FiniteGroupoid, target: &FiniteGroupoid, y: usize) -> Result<Self> {
        if y >= target.num_objects() {
            return Err(Error::InvalidInput(format!(
                "object {y} is not in the target"
            )));
        }
        Ok(GroupoidFunctor {
            source: x.clone(),
            target: target.clone(),
            obj: vec![y; x.num_objects()],
            mor: vec![target.identity(y); x.num_morphisms()],
        })
    }

    pub fn to_point(x: &FiniteGroupoid) -> Self {
        Self::constant(x, &FiniteGroupoid::point(), 0).expect("point")
    }

    pub fn source(&self) -> &FiniteGroupoid {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroupoid {
        &self.target
    }

    pub fn obj(&self, o: usize) -> usize {
        self.obj[o]
    }

    pub fn mor(&self, f: usize) -> usize {
        self.mor[f]
    }

    pub fn object_map(&self) -> &[usize] {
        &self.obj
    }

    pub fn morphism_map(&self) -> &[usize] {
        &self.mor
    }

    /// `self . f`.
    pub fn compose(&self, f: &GroupoidFunctor) -> Result<GroupoidFunctor> {
        if f.target != self.source {
            return Err(Error::Mismatch("functors do not compose".into()));
        }
        Ok(GroupoidFunctor {
            source: f.source.clone(),
            target: self.target.clone(),
            obj: f.obj.iter().map(|&o| self.obj[o]).collect(),
            mor: f.mor.iter().map(|&m| self.mor[m]).collect(),
        })
    }

    /// Whether a natural isomorphism `self => other` exists. A component at the
    /// first object of each source component determines the rest.
    pub fn is_isomorphic_to(&self, other: &GroupoidFunctor) -> bool {
        if self.source != other.source || self.target != other.target {
            return false;
        }
        let (x, y) = (&self.source, &self.target);
        x.components().iter().enumerate().all(|(c, comp)| {
            let r = comp.objects[0];
            y.hom(self.obj[r], other.obj[r]).into_iter().any(|eta| {
                (0..comp.group.order()).all(|elem| {
                    let g = x.encode(Mor {
                        comp: c,
                        src: 0,
                        tgt: 0,
                        elem,
                    });
                    y.compose(other.mor[g], eta) == y.compose(eta, self.mor[g])
                })
            })
        })
    }

    /// Induced map on components.
    pub fn pi0_map(&self) -> Vec<usize> {
        (0..self.source.num_components())
            .map(|c| self.target.comp_of(self.obj[self.source.rep(c)]))
            .collect()
    }

    /// Bijective on components and an isomorphism on every automorphism group.
    pub fn is_equivalence(&self) -> bool {
        let p = self.pi0_map();
        let mut hit = vec![false; self.target.num_components()];
        for &c in &p {
            if hit[c] {
                return false;
            }
            hit[c] = true;
        }
        hit.iter().all(|&h| h)
            && (0..self.source.num_components()).all(|c| self.group_map_bijective(c))
    }

    /// Injectivity of the map on automorphisms at the first object of component `c`,
    /// and surjectivity onto the automorphisms of its image.
    fn group_map_bijective(&self, c: usize) -> bool {
        let (inj, n) = self.group_map_injective(c);
        let image_order = self
            .target
            .component(self.target.comp_of(self.obj[self.source.rep(c)]))
            .group
            .order();
        inj && n == image_order
    }

    pub(crate) fn group_map_injective(&self, c: usize) -> (bool, usize) {
        let x = &self.source;
        let n = x.component(c).group.order();
        let mut images: Vec<usize> = (0..n)
            .map(|elem| {
                self.mor[x.encode(Mor {
                    comp: c,
                    src: 0,
                    tgt: 0,
                    elem,
                })]
            })
            .collect();
        images.sort_unstable();
        images.dedup();
        (images.len() == n, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encoding_round_trips() {
        let g = FiniteGroupoid::codiscrete(2).disjoint_union(&FiniteGroupoid::bg(Group::cyclic(3)));
        assert_eq!(g.num_objects(), 3);
        assert_eq!(g.num_morphisms(), 4 + 3);
        for id in 0..g.num_morphisms() {
            assert_eq!(g.encode(g.decode(id)), id);
            let inv = g.inverse(id);
            assert_eq!(g.compose(inv, id), Some(g.identity(g.src(id))));
        }
        assert_eq!(g.hom(0, 2), Vec::<usize>::new());
    }

    #[test]
    fn tables_round_trip() {
        let g = FiniteGroupoid::codiscrete(2).product(&FiniteGroupoid::bg(Group::cyclic(2)));
        let (h, tr) = FiniteGroupoid::from_tables(&g.to_tables()).unwrap();
        assert!(h.is_equivalent(&g));
        assert_eq!(h.num_morphisms(), g.num_morphisms());
        let mut sorted = tr.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..g.num_morphisms()).collect::<Vec<_>>());
        for f in 0..g.num_morphisms() {
            for k in 0..g.num_morphisms() {
                assert_eq!(g.compose(k, f).map(|x| tr[x]), h.compose(tr[k], tr[f]));
            }
        }
    }

    #[test]
    fn missing_inverse_is_reported() {
        let mut t = FiniteGroupoid::bg(Group::cyclic(2)).to_tables();
        t.inverses.clear();
        assert!(FiniteGroupoid::from_tables(&t).is_ok());
        // The walking arrow: identities 0 and 1, then f: 0 -> 1.
        let arrow = GroupoidTables {
            objects: 2,
            morphisms: vec![(0, 0), (1, 1), (0, 1)],
            comp: vec![
                vec![Some(0), None, None],
                vec![None, Some(1), Some(2)],
                vec![Some(2), None, None],
            ],
            identities: None,
            inverses: Vec::new(),
            names: Some(vec!["id0".into(), "id1".into(), "f".into()]),
        };
        let err = FiniteGroupoid::from_tables(&arrow).unwrap_err();
        assert_eq!(
            err,
            Error::InvalidGroupoid("no inverse for morphism f".into())
        );
    }

    #[test]
    fn functor_validation() {
        let x = FiniteGroupoid::bg(Group::cyclic(2));
        let y = FiniteGroupoid::bg(Group::cyclic(3));
        assert!(GroupoidFunctor::new(x.clone(), y.clone(), vec![0], vec![0, 1]).is_err());
        assert!(GroupoidFunctor::new(x.clone(), y, vec![0], vec![0, 0]).is_ok());
        assert!(GroupoidFunctor::identity(&x).is_equivalence());
        assert!(!GroupoidFunctor::to_point(&x).is_equivalence());
        let c = FiniteGroupoid::codiscrete(3);
        assert!(GroupoidFunctor::to_point(&c).is_equivalence());
    }
}
