use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use postnikov_core::certify::pushout_cover_check;
use postnikov_core::invariants::{
    chain_complex, component, homology, invariant_factors, pi0, pi1, reduced_homology,
    AbelianGroup, IntMatrix,
};
use postnikov_core::simplicial::catalog::simplicial_complex;
use postnikov_core::simplicial::{
    coproduct, homotopy_pushout, join, join_power, product, strict_pushout, CatalogSpec,
    SimplicialMap, SimplicialSet,
};
use postnikov_core::{Budgets, Tag};
use proptest::prelude::*;

const MAX_DIM: usize = 8;

const CATALOG: &[&str] = &[
    "empty",
    "point",
    "delta:1",
    "delta:2",
    "delta:3",
    "boundary:1",
    "boundary:2",
    "boundary:3",
    "boundary:4",
    "sphere:0",
    "sphere:1",
    "sphere:2",
    "sphere:3",
    "msphere:0",
    "msphere:1",
    "msphere:2",
    "msphere:4",
    "discrete:0",
    "discrete:3",
    "cycle:1",
    "cycle:2",
    "cycle:5",
    "wedge:0",
    "wedge:1",
    "wedge:3",
];

fn build(s: &str) -> SimplicialSet {
    s.parse::<CatalogSpec>().unwrap().build()
}

/// Homology with trailing zero groups dropped.
fn trimmed(mut h: Vec<AbelianGroup>) -> Vec<AbelianGroup> {
    while h.last().is_some_and(AbelianGroup::is_zero) {
        h.pop();
    }
    h
}

fn point() -> SimplicialSet {
    build("point")
}

#[test]
fn join_models_agree() {
    let objs = [
        "empty",
        "point",
        "discrete:2",
        "sphere:0",
        "sphere:1",
        "sphere:2",
        "boundary:3",
    ];
    for a in objs {
        for b in objs {
            let (x, y) = (build(a), build(b));
            let j = join(&x, &y, MAX_DIM).unwrap();
            j.object.check_identities().unwrap();
            let p = product(&x, &y, MAX_DIM).unwrap();
            let po = homotopy_pushout(&p.pr1, &p.pr2, MAX_DIM).unwrap();
            po.object.check_identities().unwrap();
            assert_eq!(
                trimmed(homology(&j.object)),
                trimmed(homology(&po.object)),
                "{a} * {b}"
            );
        }
    }
}

#[test]
fn join_unit_and_absorption() {
    let empty = build("empty");
    for s in CATALOG {
        let x = build(s);
        let j = join(&empty, &x, MAX_DIM).unwrap();
        assert!(j.inr.is_isomorphism(), "empty * {s}");
        let cone = join(&point(), &x, MAX_DIM).unwrap().object;
        assert!(
            reduced_homology(&cone).iter().all(AbelianGroup::is_zero),
            "point * {s}"
        );
    }
}

#[test]
fn sphere_recursion() {
    for n in 0..=3usize {
        let lower = build(&format!("msphere:{}", n as i64 - 1).replace("msphere:-1", "empty"));
        let f = SimplicialMap::to_point(&lower, &point()).unwrap();
        let s = homotopy_pushout(&f, &f, MAX_DIM).unwrap().object;
        assert_eq!(
            trimmed(homology(&s)),
            trimmed(homology(&build(&format!("sphere:{n}"))))
        );
        assert_eq!(
            trimmed(homology(&s)),
            trimmed(homology(&build(&format!("msphere:{n}"))))
        );
    }
}

#[test]
fn boundaries_square_to_zero() {
    let mut objects: Vec<SimplicialSet> = CATALOG.iter().map(|s| build(s)).collect();
    for k in 1..=4 {
        objects.push(join_power(&build("sphere:0"), k, MAX_DIM).unwrap().object);
    }
    objects.push(
        product(&build("cycle:3"), &build("boundary:2"), MAX_DIM)
            .unwrap()
            .object,
    );
    objects.push(
        join(&build("wedge:2"), &build("msphere:2"), MAX_DIM)
            .unwrap()
            .object,
    );
    for x in &objects {
        let cc = chain_complex(x);
        assert!(cc.check_dd());
        let h = homology(x);
        let alt: i64 = h
            .iter()
            .enumerate()
            .map(|(d, g)| {
                if d % 2 == 0 {
                    g.rank as i64
                } else {
                    -(g.rank as i64)
                }
            })
            .sum();
        assert_eq!(cc.euler_characteristic(), alt);
    }
}

#[test]
fn first_homology_is_abelianized_fundamental_group() {
    let b = Budgets::default();
    for s in CATALOG {
        let x = build(s);
        let comps = pi0(&x);
        for c in 0..comps.count {
            let part = component(&x, &comps, c);
            let h1 = homology(&part).get(1).cloned().unwrap_or_default();
            let g = pi1(&x, c, &b).unwrap();
            assert_eq!(g.presentation.abelianization(), h1, "{s} component {c}");
            if g.triviality.tag == Tag::Yes {
                assert!(
                    h1.is_zero(),
                    "{s}: trivial fundamental group with nonzero H1"
                );
            }
        }
    }
}

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

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// Invariant factors as ratios of determinantal divisors, the gcds of all `k x k` minors.
fn oracle_factors(m: &[Vec<i64>]) -> Vec<BigInt> {
    let (r, c) = (m.len(), m[0].len());
    let mut divisors = vec![BigInt::from(1)];
    for k in 1..=r.min(c) {
        let mut g = BigInt::zero();
        for rows in subsets(r, k) {
            for cols in subsets(c, k) {
                let minor = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| m[i][j] as i128).collect())
                    .collect();
                g = g.gcd(&BigInt::from(det(minor)));
            }
        }
        if g.is_zero() {
            break;
        }
        divisors.push(g);
    }
    divisors.windows(2).map(|w| (&w[1] / &w[0]).abs()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 500, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn smith_matches_determinantal_divisors(rows in prop::collection::vec(prop::collection::vec(-5i64..=5, 6), 6)) {
        let got = invariant_factors(&IntMatrix::from_rows(&rows));
        prop_assert_eq!(got, oracle_factors(&rows));
    }
}

/// A complex on vertices `0..n` (all present) with the given extra facets.
fn complex_on(n: usize, facets: &[Vec<usize>]) -> SimplicialSet {
    let mut all: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    all.extend(facets.iter().cloned());
    simplicial_complex(&all).unwrap()
}

fn facets(n: usize) -> impl Strategy<Value = Vec<Vec<usize>>> {
    prop::collection::vec(prop::collection::btree_set(0..n, 1..=3), 0..4)
        .prop_map(|fs| fs.into_iter().map(|s| s.into_iter().collect()).collect())
}

/// `C -> A` is an inclusion, `C -> B` a monotone vertex map.
fn cover_instance() -> impl Strategy<Value = (SimplicialMap, SimplicialMap)> {
    (1usize..4, 0usize..3, 1usize..5).prop_flat_map(|(c, extra_a, nb)| {
        (
            facets(c),
            facets(c + extra_a),
            facets(nb),
            prop::collection::vec(0..nb, c),
        )
            .prop_map(move |(fc, fa, fb, mut vmap)| {
                vmap.sort_unstable();
                let cs = complex_on(c, &fc);
                let mut fa = fa;
                fa.extend(fc.iter().cloned());
                let a = complex_on(c + extra_a, &fa);
                let mut fb = fb;
                for f in &fc {
                    let mut img: Vec<usize> = f.iter().map(|&v| vmap[v]).collect();
                    img.dedup();
                    fb.push(img);
                }
                let b = complex_on(nb, &fb);
                let inc: Vec<usize> = (0..c).collect();
                (
                    SimplicialMap::from_vertex_map(&cs, &a, &inc).unwrap(),
                    SimplicialMap::from_vertex_map(&cs, &b, &vmap).unwrap(),
                )
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn pushout_cover_surjects((f, g) in cover_instance()) {
        let size = f.source().total_generators() + f.target().total_generators() + g.target().total_generators();
        prop_assume!(size <= 30);
        let p = strict_pushout(&f, &g).unwrap();
        p.object.check_identities().unwrap();
        // Independent count: every pushout component contains the image of some vertex of A or B.
        let comps = pi0(&p.object);
        let mut hit = vec![false; comps.count];
        for v in p.left.vertex_map().into_iter().chain(p.right.vertex_map()) {
            hit[comps.vertex_component[v]] = true;
        }
        prop_assert!(hit.iter().all(|&h| h));
        prop_assert_eq!(pushout_cover_check(&f, &g, &Budgets::default()).unwrap().tag, Tag::Yes);
    }

    #[test]
    fn constructions_validate((f, g) in cover_instance()) {
        for x in [
            coproduct(f.target(), g.target()).object,
            product(f.target(), g.target(), MAX_DIM).unwrap().object,
            join(f.source(), g.target(), MAX_DIM).unwrap().object,
            homotopy_pushout(&f, &g, MAX_DIM).unwrap().object,
        ] {
            x.check_identities().unwrap();
            prop_assert!(chain_complex(&x).check_dd());
        }
    }
}
