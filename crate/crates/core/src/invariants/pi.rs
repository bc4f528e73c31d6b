use super::chain::AbelianGroup;
use super::group_pres::{tietze, GroupPresentation, Simplified, Word};
use crate::error::{Error, Result};
use crate::simplicial::{GenRef, Simplex, SimplicialSet};
use crate::verdict::{Budgets, Verdict};
use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

/// Path components, numbered by least vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    pub vertex_component: Vec<usize>,
    pub count: usize,
}

impl Components {
    pub fn of_generator(&self, x: &SimplicialSet, g: GenRef) -> usize {
        self.vertex_component[x.generator_vertices(g)[0]]
    }

    pub fn vertices(&self, c: usize) -> Vec<usize> {
        (0..self.vertex_component.len())
            .filter(|&v| self.vertex_component[v] == c)
            .collect()
    }
}

pub fn pi0(x: &SimplicialSet) -> Components {
    let n = x.count(0);
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut v: usize) -> usize {
        while p[v] != v {
            p[v] = p[p[v]];
            v = p[v];
        }
        v
    }
    for e in x.generators(1) {
        let vs = x.generator_vertices(e);
        let (a, b) = (find(&mut parent, vs[0]), find(&mut parent, vs[1]));
        parent[a.max(b)] = a.min(b);
    }
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    let mut vertex_component = vec![0; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        if label[r] == usize::MAX {
            label[r] = count;
            count += 1;
        }
        vertex_component[v] = label[r];
    }
    Components {
        vertex_component,
        count,
    }
}

/// The sub-simplicial set on one path component.
pub fn component(x: &SimplicialSet, comps: &Components, c: usize) -> SimplicialSet {
    x.restrict(&|g| comps.of_generator(x, g) == c).0
}

#[derive(Clone, Debug)]
pub struct FundamentalGroup {
    pub base_vertex: usize,
    pub presentation: GroupPresentation,
    pub simplified: Simplified,
    pub abelianization: AbelianGroup,
    pub triviality: Verdict,
    /// Word in the presentation's generators for each edge of the component; `None` elsewhere.
    pub edge_words: Vec<Option<Word>>,
    /// Spanning tree: parent vertex and connecting edge for each non-base vertex of the component.
    pub tree_parent: Vec<Option<(usize, usize)>>,
}

impl FundamentalGroup {
    /// Edge path from the base vertex to `v` along the spanning tree, as `(edge, forward)` steps.
    pub fn tree_path(&self, x: &SimplicialSet, mut v: usize) -> Vec<(usize, bool)> {
        let mut path = Vec::new();
        while let Some((u, e)) = self.tree_parent[v] {
            path.push((e, x.generator_vertices(GenRef::new(1, e))[0] == u));
            v = u;
        }
        path.reverse();
        path
    }

    /// Closed edge paths at the base vertex, one per generator of the presentation.
    pub fn generator_loops(&self, x: &SimplicialSet) -> Vec<Vec<(usize, bool)>> {
        let mut loops = Vec::new();
        for (e, w) in self.edge_words.iter().enumerate() {
            if w.as_ref().is_some_and(|w| !w.is_empty()) {
                let vs = x.generator_vertices(GenRef::new(1, e));
                let mut l = self.tree_path(x, vs[0]);
                l.push((e, true));
                l.extend(
                    self.tree_path(x, vs[1])
                        .into_iter()
                        .rev()
                        .map(|(e, f)| (e, !f)),
                );
                loops.push(l);
            }
        }
        loops
    }
}

/// Edge-path presentation relative to a breadth-first spanning tree.
pub fn pi1(x: &SimplicialSet, comp: usize, budgets: &Budgets) -> Result<FundamentalGroup> {
    if x.is_empty() {
        return Err(Error::InvalidInput(
            "fundamental group of the empty set".into(),
        ));
    }
    let comps = pi0(x);
    if comp >= comps.count {
        return Err(Error::InvalidInput(format!(
            "component {comp} does not exist ({} components)",
            comps.count
        )));
    }
    let base = comps.vertices(comp)[0];
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); x.count(0)];
    for e in x.generators(1) {
        let vs = x.generator_vertices(e);
        if comps.vertex_component[vs[0]] == comp {
            adj[vs[0]].push((vs[1], e.index));
            adj[vs[1]].push((vs[0], e.index));
        }
    }
    let mut in_tree = vec![false; x.count(1)];
    let mut tree_parent = vec![None; x.count(0)];
    let mut seen = vec![false; x.count(0)];
    seen[base] = true;
    let mut queue = VecDeque::from([base]);
    while let Some(v) = queue.pop_front() {
        for &(w, e) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                in_tree[e] = true;
                tree_parent[w] = Some((v, e));
                queue.push_back(w);
            }
        }
    }
    let mut edge_words: Vec<Option<Word>> = vec![None; x.count(1)];
    let mut generators = 0;
    for e in x.generators(1) {
        if comps.of_generator(x, e) != comp {
            continue;
        }
        edge_words[e.index] = Some(if in_tree[e.index] {
            Vec::new()
        } else {
            generators += 1;
            vec![generators as i32]
        });
    }
    let word = |s: &Simplex| -> Word {
        if s.is_degenerate() {
            Vec::new()
        } else {
            edge_words[s.gen.index].clone().expect("edge in component")
        }
    };
    let mut relators = Vec::new();
    for t in x.generators(2) {
        if comps.of_generator(x, t) != comp {
            continue;
        }
        let f = x.generator_faces(t);
        let mut r = word(&f[2]);
        r.extend(word(&f[0]));
        r.extend(super::group_pres::invert(&word(&f[1])));
        relators.push(r);
    }
    let presentation = GroupPresentation::new(generators, relators);
    let simplified = tietze(&presentation, budgets.tietze_steps);
    let abelianization = presentation.abelianization();
    let triviality = if simplified.presentation.generators == 0 {
        Verdict::yes(
            *budgets,
            "P1-TIETZE",
            format!("presentation with {generators} generators simplified to the trivial group in {} steps", simplified.steps),
        )
    } else if !abelianization.is_zero() {
        Verdict::no(
            *budgets,
            "P1-ABELIAN",
            format!("abelianization {abelianization} is nonzero"),
        )
    } else {
        Verdict::unknown(
            *budgets,
            format!(
                "Tietze simplification {} with {} generators and {} relators and perfect abelianization",
                if simplified.exhausted { "exhausted its budget" } else { "stalled" },
                simplified.presentation.generators,
                simplified.presentation.relators.len()
            ),
        )
    };
    Ok(FundamentalGroup {
        base_vertex: base,
        presentation,
        simplified,
        abelianization,
        triviality,
        edge_words,
        tree_parent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{coproduct, CatalogSpec};
    use crate::verdict::Tag;

    fn cat(s: &str) -> SimplicialSet {
        s.parse::<CatalogSpec>().unwrap().build()
    }

    #[test]
    fn components() {
        assert_eq!(pi0(&cat("discrete:3")).count, 3);
        assert_eq!(pi0(&cat("sphere:1")).count, 1);
        assert_eq!(
            pi0(&coproduct(&cat("sphere:1"), &cat("point")).object).count,
            2
        );
        assert_eq!(pi0(&cat("empty")).count, 0);
    }

    #[test]
    fn fundamental_groups() {
        let b = Budgets::default();
        let d2 = pi1(&cat("delta:2"), 0, &b).unwrap();
        assert_eq!(d2.triviality.tag, Tag::Yes);
        let c = pi1(&cat("boundary:2"), 0, &b).unwrap();
        assert_eq!(
            (c.presentation.generators, c.presentation.relators.len()),
            (1, 0)
        );
        assert_eq!(c.abelianization, AbelianGroup::free(1));
        assert_eq!(c.triviality.tag, Tag::No);
        let w = pi1(&cat("wedge:2"), 0, &b).unwrap();
        assert_eq!(w.abelianization, AbelianGroup::free(2));
        assert_eq!(w.triviality.tag, Tag::No);
        assert_eq!(
            pi1(&cat("sphere:2"), 0, &b).unwrap().triviality.tag,
            Tag::Yes
        );
        assert_eq!(
            pi1(&cat("msphere:2"), 0, &b).unwrap().triviality.tag,
            Tag::Yes
        );
        assert!(pi1(&cat("empty"), 0, &b).is_err());
        let c4 = pi1(&cat("cycle:4"), 0, &b).unwrap();
        let loops = c4.generator_loops(&cat("cycle:4"));
        assert_eq!(loops.len(), 1);
        assert_eq!(loops[0].len(), 4);
        assert!(pi1(&cat("point"), 1, &b).is_err());
    }
}
