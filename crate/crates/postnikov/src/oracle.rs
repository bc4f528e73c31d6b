//! Reference computations the suites compare the library against. Each one
//! takes a different route to the same answer.

use crate::objects::parse_object;
use postnikov_core::certify::{conn_object, truncated_object};
use postnikov_core::filter::{BaseObject, FilterSpec};
use postnikov_core::groupoid::{conn_level, trunc_level, GroupoidFunctor};
use postnikov_core::simplicial::{SimplicialMap, SimplicialSet};
use postnikov_core::{Budgets, Tag, TruncLevel};

fn det(mut a: Vec<Vec<i128>>) -> i128 {
    // Fraction-free elimination.
    let n = a.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| a[i][k] != 0) else {
            return 0;
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// Invariant factors as ratios `d_k / d_{k-1}` of the determinantal divisors,
/// `d_k` the gcd of all `k x k` minors. Only for small matrices.
pub fn determinantal_factors(m: &[Vec<i64>]) -> Vec<i128> {
    let (r, c) = (m.len(), m.first().map_or(0, Vec::len));
    let mut divisors = vec![1i128];
    for k in 1..=r.min(c) {
        let mut g = 0;
        for rows in subsets(r, k) {
            for cols in subsets(c, k) {
                g = gcd(
                    g,
                    det(rows
                        .iter()
                        .map(|&i| cols.iter().map(|&j| m[i][j] as i128).collect())
                        .collect()),
                );
            }
        }
        if g == 0 {
            break;
        }
        divisors.push(g);
    }
    divisors.windows(2).map(|w| w[1] / w[0]).collect()
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

fn union_edges(parent: &mut [usize], x: &SimplicialSet, offset: usize) {
    for e in x.generators(1) {
        let vs = x.generator_vertices(e);
        let (a, b) = (find(parent, offset + vs[0]), find(parent, offset + vs[1]));
        parent[a] = b;
    }
}

/// Components of the pushout of `A <- C -> B` by union-find on the vertices of
/// `A + B`: edges of either side, plus `f(c) ~ g(c)` for every vertex `c`.
pub fn pushout_components(f: &SimplicialMap, g: &SimplicialMap) -> usize {
    let (a, b) = (f.target(), g.target());
    let na = a.count(0);
    let mut parent: Vec<usize> = (0..na + b.count(0)).collect();
    union_edges(&mut parent, a, 0);
    union_edges(&mut parent, b, na);
    for (fa, gb) in f.vertex_map().into_iter().zip(g.vertex_map()) {
        let (x, y) = (find(&mut parent, fa), find(&mut parent, na + gb));
        parent[x] = y;
    }
    (0..parent.len())
        .filter(|&v| find(&mut parent, v) == v)
        .count()
}

/// Number of path components of a simplicial set by union-find on its edges.
pub fn components(x: &SimplicialSet) -> usize {
    let mut parent: Vec<usize> = (0..x.count(0)).collect();
    union_edges(&mut parent, x, 0);
    (0..parent.len())
        .filter(|&v| find(&mut parent, v) == v)
        .count()
}

/// Direct per-index verdict from the certifiers, with no level clamping.
pub fn direct(x: &BaseObject, n: i64, truncated: bool, b: &Budgets) -> Tag {
    match x {
        BaseObject::Simplicial(s) => {
            let level = TruncLevel::new(n).expect("levels are at least -2");
            let x = s.build();
            if truncated {
                truncated_object(&x, level, b)
            } else {
                conn_object(&x, level, b)
            }
            .tag
        }
        BaseObject::Groupoid(g) => {
            let u = GroupoidFunctor::to_point(&g.build());
            let holds = if truncated {
                trunc_level(&u).expect("unit functor") <= n
            } else {
                conn_level(&u).expect("unit functor").at_least(n)
            };
            if holds {
                Tag::Yes
            } else {
                Tag::No
            }
        }
    }
}

/// The index-set condition read literally for an eventually constant object
/// at an eventually constant level. Only finitely many indices differ from the
/// tail, so under the cofinite filter the tail alone decides; under a
/// principal filter the generating indices decide.
pub fn los_literal(
    prefix: &[BaseObject],
    tail: BaseObject,
    levels: &[i64],
    tail_level: i64,
    phi: &FilterSpec,
    truncated: bool,
    b: &Budgets,
) -> Tag {
    match phi {
        FilterSpec::Frechet => direct(&tail, tail_level, truncated, b),
        FilterSpec::Principal(s) => {
            let tags: Vec<Tag> = s
                .iter()
                .map(|&i| {
                    let x = prefix.get(i as usize).copied().unwrap_or(tail);
                    let n = levels.get(i as usize).copied().unwrap_or(tail_level);
                    direct(&x, n, truncated, b)
                })
                .collect();
            if tags.iter().all(|&t| t == Tag::Yes) {
                Tag::Yes
            } else if tags.contains(&Tag::No) {
                Tag::No
            } else {
                Tag::Unknown
            }
        }
    }
}

/// An object with known connectivity and truncation level.
#[derive(Clone, Debug)]
pub struct Truth {
    pub name: String,
    /// Largest `n` with the object n-connected; `None` when it is n-connected for all `n`.
    pub conn: Option<i64>,
    /// Least `n` with the object n-truncated; `None` when there is none.
    pub trunc: Option<i64>,
}

impl Truth {
    pub fn connected(&self, n: i64) -> bool {
        self.conn.map_or(true, |c| n <= c)
    }

    pub fn truncated(&self, n: i64) -> bool {
        self.trunc.is_some_and(|t| n >= t)
    }

    pub fn build(&self, b: &Budgets) -> SimplicialSet {
        parse_object(&self.name, b).expect("catalog entry parses")
    }
}

/// Objects whose homotopy types are known: contractible ones, discrete sets,
/// graphs and other aspherical spaces, spheres and simply connected
/// non-truncated spaces, and disconnected mixtures.
pub fn ground_truth() -> Vec<Truth> {
    let t = |name: &str, conn: Option<i64>, trunc: Option<i64>| Truth {
        name: name.to_string(),
        conn,
        trunc,
    };
    let mut out = vec![
        t("empty", Some(-2), Some(-1)),
        t("cycle:0", Some(-2), Some(-1)),
        t("boundary:0", Some(-2), Some(-1)),
    ];
    for s in [
        "point",
        "wedge:0",
        "discrete:1",
        "delta:1",
        "delta:2",
        "delta:3",
        "delta:4",
        "cone:sphere:1",
        "cone:wedge:2",
        "cone:discrete:3",
    ] {
        out.push(t(s, None, Some(-2)));
    }
    for s in [
        "sphere:0",
        "msphere:0",
        "boundary:1",
        "discrete:2",
        "discrete:3",
        "discrete:5",
    ] {
        out.push(t(s, Some(-1), Some(0)));
    }
    for s in [
        "sphere:1",
        "msphere:1",
        "boundary:2",
        "cycle:1",
        "cycle:2",
        "cycle:3",
        "cycle:5",
        "wedge:1",
        "wedge:2",
        "wedge:3",
        "torus",
        "join:discrete:3+discrete:3",
        "join-power:2:sphere:0",
    ] {
        out.push(t(s, Some(0), Some(1)));
    }
    for n in 2..=4 {
        out.push(t(&format!("sphere:{n}"), Some(n - 1), None));
        out.push(t(&format!("boundary:{}", n + 1), Some(n - 1), None));
        out.push(t(
            &format!("join-power:{}:sphere:0", n + 1),
            Some(n - 1),
            None,
        ));
    }
    for n in 2..=5 {
        out.push(t(&format!("msphere:{n}"), Some(n - 1), None));
    }
    out.push(t("join:sphere:1+sphere:0", Some(1), None));
    out.push(t("sum:sphere:2+point", Some(-1), None));
    out.push(t("sum:sphere:1+sphere:1", Some(-1), Some(1)));
    out.push(t("product:sphere:1+discrete:2", Some(-1), Some(1)));
    out.push(t("product:msphere:1+msphere:2", Some(0), None));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinantal_examples() {
        assert_eq!(determinantal_factors(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(
            determinantal_factors(&[vec![0, 0], vec![0, 0]]),
            Vec::<i128>::new()
        );
        assert_eq!(
            determinantal_factors(&[vec![1, 2, 3], vec![2, 4, 6]]),
            vec![1]
        );
    }

    #[test]
    fn catalog_is_large_and_parses() {
        let b = Budgets::default();
        let all = ground_truth();
        assert!(all.len() >= 40);
        for e in &all {
            let x = e.build(&b);
            // Components recorded by the truth agree with a direct count.
            let comps = components(&x);
            match e.conn {
                Some(-2) => assert_eq!(comps, 0, "{}", e.name),
                Some(-1) => assert!(comps >= 2, "{}", e.name),
                _ => assert_eq!(comps, 1, "{}", e.name),
            }
        }
    }
}
