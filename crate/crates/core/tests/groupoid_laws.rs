use postnikov_core::groupoid::{
    all_functors, check_law, conn_level, trunc_level, universe, ConnLevel, FiniteGroupoid,
    GroupoidFunctor, Law, LawOutcome, Mor,
};
use proptest::prelude::*;
use std::sync::OnceLock;

fn u() -> &'static [FiniteGroupoid] {
    static U: OnceLock<Vec<FiniteGroupoid>> = OnceLock::new();
    U.get_or_init(universe)
}

/// Levels from orbit counting: over a target component with group H, the fiber of
/// a source component with group G has [H : im] components, each with group ker.
fn oracle_levels(f: &GroupoidFunctor) -> (ConnLevel, i64) {
    let (x, y) = (f.source(), f.target());
    let p = f.pi0_map();
    // per target component: list of (index, kernel order)
    let mut over: Vec<Vec<(usize, usize)>> = vec![Vec::new(); y.num_components()];
    for (c, comp) in x.components().iter().enumerate() {
        let mut image: Vec<usize> = (0..comp.group.order())
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
        image.sort_unstable();
        image.dedup();
        let h = y.component(p[c]).group.order();
        over[p[c]].push((h / image.len(), comp.group.order() / image.len()));
    }
    let comps = |v: &Vec<(usize, usize)>| v.iter().map(|e| e.0).sum::<usize>();
    let discrete = over.iter().flatten().all(|e| e.1 == 1);
    let conn = if over.iter().any(Vec::is_empty) {
        ConnLevel::Finite(-2)
    } else if over.iter().any(|v| comps(v) > 1) {
        ConnLevel::Finite(-1)
    } else if !discrete {
        ConnLevel::Finite(0)
    } else {
        ConnLevel::Infinite
    };
    let trunc = if over.iter().all(|v| comps(v) == 1) && discrete {
        -2
    } else if over.iter().all(|v| comps(v) <= 1) && discrete {
        -1
    } else if discrete {
        0
    } else {
        1
    };
    (conn, trunc)
}

#[test]
fn levels_match_orbit_counting() {
    let mut checked = 0;
    for a in u() {
        for x in u() {
            for f in all_functors(a, x).unwrap().iter().step_by(7) {
                assert_eq!(
                    (conn_level(f).unwrap(), trunc_level(f).unwrap()),
                    oracle_levels(f)
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 1000, "{checked}");
}

fn seeds() -> impl Strategy<Value = [u64; 6]> {
    prop::array::uniform6(any::<u64>())
}

macro_rules! law_props {
    ($($name:ident => $law:expr),* $(,)?) => {
        proptest! {
            #![proptest_config(ProptestConfig { cases: 500, failure_persistence: None, ..ProptestConfig::default() })]
            $(
                #[test]
                fn $name(s in seeds()) {
                    prop_assert_ne!(check_law($law, u(), &s).unwrap(), LawOutcome::Violated);
                }
            )*
        }
    };
}

law_props! {
    diagonal_law => Law::Diagonal,
    mono_law => Law::Mono,
    unit_connected => Law::UnitConnected,
    factorization_uniqueness => Law::Uniqueness,
    base_change => Law::BaseChange,
    factorization_pullback => Law::FactorizationPullback,
    composition => Law::Composition,
    rigidity => Law::Rigidity,
    descent => Law::Descent,
    sub_injectivity => Law::SubInjectivity,
    half_step => Law::HalfStep,
    elementary_equiv => Law::ElementaryEquiv,
    loop_criterion => Law::LoopCriterion,
    modality => Law::Modality,
    gap_biconditional => Law::GapBiconditional,
    equivalence_invariance => Law::EquivalenceInvariance,
}

/// Each law is exercised on a non-trivial share of draws, not just vacuously.
#[test]
fn laws_are_not_vacuous() {
    for law in Law::ALL {
        let mut held = 0;
        for i in 0..200u64 {
            let s: Vec<u64> = (0..6)
                .map(|k| (i * 6 + k).wrapping_mul(0x9E37_79B9_7F4A_7C15) >> 3)
                .collect();
            match check_law(law, u(), &s).unwrap() {
                LawOutcome::Held => held += 1,
                LawOutcome::Vacuous | LawOutcome::Skipped => {}
                LawOutcome::Violated => panic!("{} violated", law.name()),
            }
        }
        assert!(held >= 10, "{} held only {held} times", law.name());
    }
}
