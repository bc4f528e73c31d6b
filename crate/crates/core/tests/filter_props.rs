use postnikov_core::certify::{conn_object, truncated_object};
use postnikov_core::filter::{
    eq_mod_filter, filter_contains, los, los_connected, los_truncated, lt_mod_filter, BaseObject,
    FilterSpec, GermObject, NonStandardLevel, PeriodicSet, SetDesc, TagSequence,
};
use postnikov_core::groupoid::{conn_level, trunc_level, GroupoidFunctor};
use postnikov_core::{Budgets, Tag, TruncLevel};
use proptest::prelude::*;
use proptest::strategy::ValueTree;

const OBJECTS: &[&str] = &[
    "empty",
    "point",
    "sphere:0",
    "sphere:1",
    "sphere:2",
    "msphere:2",
    "msphere:3",
    "delta:2",
    "boundary:3",
    "cycle:3",
    "wedge:2",
    "discrete:3",
    "gpd:bz:2",
    "gpd:bz:3",
    "gpd:codiscrete:2",
    "gpd:discrete:2",
];

fn filters() -> impl Strategy<Value = FilterSpec> {
    prop_oneof![
        Just(FilterSpec::Frechet),
        prop::collection::vec(0u64..20, 1..4).prop_map(|s| FilterSpec::principal(s).unwrap()),
    ]
}

fn periodic_sets() -> impl Strategy<Value = PeriodicSet> {
    (
        prop::collection::vec(any::<bool>(), 0..12),
        prop::collection::vec(any::<bool>(), 1..5),
    )
        .prop_map(|(p, c)| PeriodicSet::new(p, c).unwrap())
}

fn member(phi: &FilterSpec, s: &PeriodicSet) -> bool {
    filter_contains(phi, &SetDesc::Periodic(s.clone())) == Tag::Yes
}

proptest! {
    #[test]
    fn filter_axioms(phi in filters(), a in periodic_sets(), b in periodic_sets()) {
        prop_assert!(member(&phi, &PeriodicSet::all()));
        prop_assert!(!member(&phi, &PeriodicSet::none()));
        if member(&phi, &a) {
            prop_assert!(member(&phi, &a.union(&b)));
        }
        prop_assert_eq!(member(&phi, &a) && member(&phi, &b), member(&phi, &a.intersect(&b)));
    }

    #[test]
    fn presentations_agree(phi in filters(), xs in prop::collection::btree_set(0u64..30, 0..8), n in 0u64..30) {
        let xs: Vec<u64> = xs.into_iter().collect();
        let fin = SetDesc::Finite(xs.clone());
        let cof = SetDesc::Cofinite(xs);
        prop_assert_eq!(filter_contains(&phi, &fin), filter_contains(&phi, &SetDesc::Periodic(fin.to_periodic().unwrap())));
        prop_assert_eq!(filter_contains(&phi, &cof), filter_contains(&phi, &fin.complement()));
        let tail = SetDesc::EventuallyTrue(n);
        let listed = SetDesc::Cofinite((0..n).collect());
        prop_assert_eq!(filter_contains(&phi, &tail), filter_contains(&phi, &listed));
        prop_assert_eq!(filter_contains(&phi, &tail.complement()), filter_contains(&phi, &SetDesc::Finite((0..n).collect())));
    }

    /// Unrolling the cycle into the prefix describes the same tags and must not
    /// move the verdict.
    #[test]
    fn los_ignores_presentation(
        phi in filters(),
        prefix in prop::collection::vec(0u8..3, 0..10),
        cycle in prop::collection::vec(0u8..3, 1..4),
        unroll in 0usize..4,
    ) {
        let tag = |t: &u8| [Tag::Yes, Tag::No, Tag::Unknown][*t as usize];
        let seq = TagSequence { prefix: prefix.iter().map(tag).collect(), cycle: cycle.iter().map(tag).collect(), extrapolated_from: None };
        let mut p2 = seq.prefix.clone();
        for k in 0..unroll {
            p2.push(seq.cycle[k % seq.cycle.len()]);
        }
        let mut c2: Vec<Tag> = (0..seq.cycle.len()).map(|k| seq.cycle[(k + unroll) % seq.cycle.len()]).collect();
        c2.extend(c2.clone());
        let other = TagSequence { prefix: p2, cycle: c2, extrapolated_from: None };
        let b = Budgets::default();
        let (v1, v2) = (los(&seq, &phi, &b, "t"), los(&other, &phi, &b, "t"));
        prop_assert_eq!(v1.tag, v2.tag);
    }

    #[test]
    fn successor_is_fixed_point_free(prefix in prop::collection::vec(-2i64..6, 0..6), slope in 0i64..3, offset in -2i64..5, c in -2i64..40) {
        let a = NonStandardLevel::affine(slope, offset, None).unwrap();
        let a = NonStandardLevel::from_parts(prefix, a.pieces().to_vec()).unwrap();
        let f = FilterSpec::Frechet;
        prop_assert!(!eq_mod_filter(&a.successor(), &a, &f).unwrap());
        // Standard classes are iterated successors of zero.
        let mut s = NonStandardLevel::zero();
        for _ in 0..(c + 2) {
            s = s.successor();
        }
        prop_assert!(eq_mod_filter(&s, &NonStandardLevel::constant(c).unwrap(), &f).unwrap());
        prop_assert!(s.is_standard());
    }

    #[test]
    fn affine_exceeds_standard_levels(n in -2i64..1_000_000, offset in -2i64..10) {
        let a = NonStandardLevel::affine(1, offset, None).unwrap();
        prop_assert!(lt_mod_filter(&NonStandardLevel::constant(n).unwrap(), &a, &FilterSpec::Frechet).unwrap());
    }

    /// The same level written as const, prefix-const, periodic and seq.
    #[test]
    fn level_presentations_agree(x in 0..OBJECTS.len(), n in -2i64..5, phi in filters()) {
        let b = Budgets::default();
        let g = GermObject::constant(OBJECTS[x].parse().unwrap());
        let specs = [format!("const:{n}"), format!("prefix-const:{n},{n}/{n}"), format!("periodic:/{n},{n}"), format!("seq:{n}/0:{n}")];
        let tags: Vec<Tag> = specs.iter().map(|s| los_truncated(&g, &s.parse().unwrap(), &phi, &b).tag).collect();
        prop_assert!(tags.iter().all(|&t| t == tags[0]), "{:?}", tags);
    }
}

/// Direct per-index verdict, without any level clamping.
fn direct(x: &BaseObject, n: i64, truncated: bool, b: &Budgets) -> Tag {
    match x {
        BaseObject::Simplicial(s) => {
            let level = TruncLevel::new(n).unwrap();
            let v = if truncated {
                truncated_object(&s.build(), level, b)
            } else {
                conn_object(&s.build(), level, b)
            };
            v.tag
        }
        BaseObject::Groupoid(g) => {
            let u = GroupoidFunctor::to_point(&g.build());
            let holds = if truncated {
                trunc_level(&u).unwrap() <= n
            } else {
                conn_level(&u).unwrap().at_least(n)
            };
            if holds {
                Tag::Yes
            } else {
                Tag::No
            }
        }
    }
}

/// The index-set condition applied literally: only finitely many indices
/// differ from the tail, so under the cofinite filter the tail decides, and
/// under a principal filter the named indices do.
fn oracle(
    x: &[BaseObject],
    tail: BaseObject,
    levels: &[i64],
    tail_level: i64,
    phi: &FilterSpec,
    truncated: bool,
) -> Tag {
    let b = Budgets::default();
    match phi {
        FilterSpec::Frechet => direct(&tail, tail_level, truncated, &b),
        FilterSpec::Principal(s0) => {
            let tags: Vec<Tag> = s0
                .iter()
                .map(|&i| {
                    let obj = x.get(i as usize).copied().unwrap_or(tail);
                    let n = levels.get(i as usize).copied().unwrap_or(tail_level);
                    direct(&obj, n, truncated, &b)
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

#[test]
fn los_matches_literal_oracle() {
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    let strategy = (
        prop::collection::vec(0..OBJECTS.len(), 0..5),
        0..OBJECTS.len(),
        prop::collection::vec(-2i64..5, 0..5),
        -2i64..8,
        filters(),
        any::<bool>(),
    );
    let b = Budgets::default();
    for _ in 0..100 {
        let (xs, tail, levels, tail_level, phi, truncated) =
            strategy.new_tree(&mut runner).unwrap().current();
        let objs: Vec<BaseObject> = xs.iter().map(|&k| OBJECTS[k].parse().unwrap()).collect();
        let tail: BaseObject = OBJECTS[tail].parse().unwrap();
        let g = GermObject::eventually_constant(objs.clone(), tail);
        let n = NonStandardLevel::eventually_constant(levels.clone(), tail_level).unwrap();
        let got = if truncated {
            los_truncated(&g, &n, &phi, &b)
        } else {
            los_connected(&g, &n, &phi, &b)
        };
        let want = oracle(&objs, tail, &levels, tail_level, &phi, truncated);
        assert_eq!(
            got.tag, want,
            "{g:?} at {n} over {phi}, truncated={truncated}"
        );
    }
}
