//! Groupoids given implicitly (comma constructions, functor groupoids) and their
//! conversion to the structured form.
use super::group::Group;
use super::groupoid::{Component, FiniteGroupoid, Mor};
use crate::error::{Error, Result};
use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

pub(crate) trait Presentation {
    type Obj: Ord + Clone;
    type Mor: Ord + Clone;
    fn objects(&self) -> Vec<Self::Obj>;
    /// Every morphism out of `a`; the target is implied by the label.
    fn out(&self, a: &Self::Obj) -> Vec<Self::Mor>;
    fn target(&self, a: &Self::Obj, m: &Self::Mor) -> Self::Obj;
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Self::Mor;
    fn inverse(&self, f: &Self::Mor) -> Self::Mor;
    fn identity(&self, a: &Self::Obj) -> Self::Mor;
}

pub(crate) struct Materialized<P: Presentation> {
    pub groupoid: FiniteGroupoid,
    pub objects: Vec<P::Obj>,
    index: BTreeMap<P::Obj, usize>,
    transports: Vec<P::Mor>,
    labels: Vec<Vec<P::Mor>>,
    label_index: Vec<BTreeMap<P::Mor, usize>>,
}

/// Breadth-first search from the least unvisited object of each component.
/// `cap` bounds the number of morphisms.
pub(crate) fn materialize<P: Presentation>(p: &P, cap: u128) -> Result<Materialized<P>> {
    let objects = p.objects();
    let index: BTreeMap<P::Obj, usize> = objects
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, o)| (o, i))
        .collect();
    let n = objects.len();
    let mut transports: Vec<Option<P::Mor>> = alloc::vec![None; n];
    let mut comps = Vec::new();
    let mut labels = Vec::new();
    let mut label_index = Vec::new();
    let mut total: u128 = 0;
    for r in 0..n {
        if transports[r].is_some() {
            continue;
        }
        transports[r] = Some(p.identity(&objects[r]));
        let mut members = alloc::vec![r];
        let mut queue = VecDeque::from([r]);
        let mut autos = Vec::new();
        while let Some(a) = queue.pop_front() {
            let ta = transports[a].clone().expect("visited");
            for m in p.out(&objects[a]) {
                let b = index[&p.target(&objects[a], &m)];
                if a == r && b == r {
                    autos.push(m.clone());
                }
                if transports[b].is_none() {
                    transports[b] = Some(p.compose(&m, &ta));
                    members.push(b);
                    queue.push_back(b);
                }
            }
        }
        let id = p.identity(&objects[r]);
        autos.retain(|m| *m != id);
        autos.sort();
        autos.insert(0, id);
        let k = members.len() as u128;
        total += k * k * autos.len() as u128;
        if total > cap {
            return Err(Error::SizeCap {
                what: "materialized groupoid",
                size: total,
                cap,
            });
        }
        let li: BTreeMap<P::Mor, usize> = autos
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let group = Group::from_fn(autos.len(), |a, b| li[&p.compose(&autos[a], &autos[b])]);
        members.sort_unstable();
        comps.push(Component {
            group,
            objects: members,
        });
        labels.push(autos);
        label_index.push(li);
    }
    let groupoid = FiniteGroupoid::from_components(n, comps)?;
    let transports = transports
        .into_iter()
        .map(|t| t.expect("visited"))
        .collect();
    Ok(Materialized {
        groupoid,
        objects,
        index,
        transports,
        labels,
        label_index,
    })
}

impl<P: Presentation> Materialized<P> {
    pub fn object_id(&self, o: &P::Obj) -> usize {
        self.index[o]
    }

    pub fn find(&self, o: &P::Obj) -> Option<usize> {
        self.index.get(o).copied()
    }

    /// Structured id of the morphism labelled `m` out of object `a`.
    pub fn mor_id(&self, p: &P, a: usize, m: &P::Mor) -> usize {
        let b = self.index[&p.target(&self.objects[a], m)];
        let g = &self.groupoid;
        let ((c, i), (_, j)) = (g.position(a), g.position(b));
        let core = p.compose(
            &p.inverse(&self.transports[b]),
            &p.compose(m, &self.transports[a]),
        );
        g.encode(Mor {
            comp: c,
            src: i,
            tgt: j,
            elem: self.label_index[c][&core],
        })
    }

    /// The label of a structured morphism id.
    pub fn label(&self, p: &P, id: usize) -> P::Mor {
        let g = &self.groupoid;
        let m = g.decode(id);
        let objs = &g.component(m.comp).objects;
        let (ti, tj) = (&self.transports[objs[m.src]], &self.transports[objs[m.tgt]]);
        p.compose(tj, &p.compose(&self.labels[m.comp][m.elem], &p.inverse(ti)))
    }
}
