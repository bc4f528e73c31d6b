//! Named acceptance suites. Each draws from its own seeded stream and records
//! every failed check.

use crate::commands::certified_connectivity;
use crate::objects::parse_object;
use crate::{oracle, random, Failure};
use postnikov_core::certify::{
    conn_object, join_theorem_check, minus_one_truncation_probe, pushout_cover_check,
    truncated_object,
};
use postnikov_core::filter::{
    hypercomplete_witness, los_connected, los_truncated, validate_family, Family, FilterSpec,
    GermMap, GermObject, NonStandardLevel,
};
use postnikov_core::groupoid::{check_law, elementary_square, universe, Law, LawOutcome};
use postnikov_core::invariants::{invariant_factors, pi0, IntMatrix};
use postnikov_core::simplicial::strict_pushout;
use postnikov_core::{Budgets, Tag, TruncLevel};
use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};

/// Suite names and the acceptance criterion each one runs.
pub const SUITES: [(&str, u8); 9] = [
    ("join-growth", 1),
    ("join-theorem", 2),
    ("groupoid-laws", 3),
    ("elementary-equiv", 4),
    ("los-agreement", 5),
    ("sphere-scenario", 6),
    ("snf-oracle", 7),
    ("pushout-cover", 8),
    ("soundness", 9),
];

/// Failure messages kept in a report; the count is always exact.
const MAX_LISTED: usize = 25;

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub criterion: u8,
    pub passed: bool,
    pub checks: usize,
    pub failed: usize,
    pub failures: Vec<String>,
    pub details: Value,
}

struct Tally {
    checks: usize,
    failed: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checks: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_LISTED {
                self.failures.push(what());
            }
        }
    }

    fn finish(self, name: &str, criterion: u8, details: Value) -> SuiteReport {
        SuiteReport {
            suite: name.to_string(),
            criterion,
            passed: self.failed == 0 && self.checks > 0,
            checks: self.checks,
            failed: self.failed,
            failures: self.failures,
            details,
        }
    }
}

pub fn run(name: &str, b: &Budgets, seed: u64) -> Result<SuiteReport, Failure> {
    let Some(&(_, criterion)) = SUITES.iter().find(|(n, _)| *n == name) else {
        let known: Vec<&str> = SUITES.iter().map(|(n, _)| *n).collect();
        return Err(Failure::Input(format!(
            "unknown suite `{name}` (known: {})",
            known.join(", ")
        )));
    };
    let mut t = Tally::new();
    let details = match name {
        "join-growth" => join_growth(&mut t, b),
        "join-theorem" => join_theorem(&mut t, b),
        "groupoid-laws" => groupoid_laws(&mut t, seed),
        "elementary-equiv" => elementary_equiv(&mut t, seed),
        "los-agreement" => los_agreement(&mut t, b, seed),
        "sphere-scenario" => sphere_scenario(&mut t, b),
        "snf-oracle" => snf_oracle(&mut t, seed),
        "pushout-cover" => pushout_cover(&mut t, b, seed),
        "soundness" => soundness(&mut t, b),
        _ => unreachable!("listed suite"),
    };
    Ok(t.finish(name, criterion, details))
}

fn join_growth(t: &mut Tally, b: &Budgets) -> Value {
    let mut rows = Vec::new();
    for a in ["sphere:0", "discrete:3", "boundary:2"] {
        let x = parse_object(a, b).expect("catalog object");
        match minus_one_truncation_probe(&x, 5, b) {
            Ok(p) => {
                for s in &p.stages {
                    t.check(s.verdict.is_yes(), || {
                        format!("{a}^*{}: {}-connected is {}", s.k, s.level, s.verdict.tag)
                    });
                    rows.push(json!({ "object": a, "k": s.k, "level": s.level.value(), "tag": s.verdict.tag.as_str(), "skeleton": s.skeleton }));
                }
            }
            Err(e) => t.check(false, || format!("{a}: {e}")),
        }
    }
    json!({ "stages": rows })
}

fn join_theorem(t: &mut Tally, b: &Budgets) -> Value {
    let names = ["sphere:0", "sphere:1", "sphere:2"];
    let objects: Vec<_> = names
        .iter()
        .map(|s| parse_object(s, b).expect("catalog object"))
        .collect();
    let conn: Vec<Option<i64>> = objects
        .iter()
        .map(|x| certified_connectivity(x, b))
        .collect();
    let mut rows = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            let (Some(m), Some(n)) = (conn[i], conn[j]) else {
                t.check(false, || {
                    format!("{} or {} has no certified connectivity", names[i], names[j])
                });
                continue;
            };
            let lv = |v| TruncLevel::new(v).expect("at least -2");
            match join_theorem_check(&objects[i], lv(m), &objects[j], lv(n), b) {
                Ok(v) => {
                    t.check(v.is_yes(), || {
                        format!(
                            "{} * {}: {}-connected is {}",
                            names[i],
                            names[j],
                            m + n + 2,
                            v.tag
                        )
                    });
                    rows.push(json!({ "x": names[i], "m": m, "y": names[j], "n": n, "tag": v.tag.as_str() }));
                }
                Err(e) => t.check(false, || format!("{} * {}: {e}", names[i], names[j])),
            }
        }
    }
    json!({ "connectivity": names.iter().zip(&conn).map(|(n, c)| json!({ "object": n, "certified": c })).collect::<Vec<_>>(), "pairs": rows })
}

const LAW_SAMPLES: usize = 500;

fn groupoid_laws(t: &mut Tally, seed: u64) -> Value {
    let u = universe();
    let mut rows = Vec::new();
    for (k, law) in Law::ALL.iter().enumerate() {
        let mut r = random::rng(seed, 300 + k as u64);
        let (mut held, mut vacuous, mut skipped) = (0, 0, 0);
        for i in 0..LAW_SAMPLES {
            let words: Vec<u64> = (0..16).map(|_| r.gen()).collect();
            let outcome = check_law(*law, &u, &words);
            match outcome {
                Ok(LawOutcome::Held) => held += 1,
                Ok(LawOutcome::Vacuous) => vacuous += 1,
                Ok(LawOutcome::Skipped) => skipped += 1,
                Ok(LawOutcome::Violated) | Err(_) => {}
            }
            t.check(
                matches!(
                    outcome,
                    Ok(LawOutcome::Held | LawOutcome::Vacuous | LawOutcome::Skipped)
                ),
                || match &outcome {
                    Err(e) => format!("{} failed at sample {i}: {e}", law.name()),
                    _ => format!("{} violated at sample {i}", law.name()),
                },
            );
        }
        rows.push(
            json!({ "law": law.name(), "held": held, "vacuous": vacuous, "skipped": skipped }),
        );
    }
    json!({ "universe": u.len(), "samples_per_law": LAW_SAMPLES, "laws": rows })
}

fn elementary_equiv(t: &mut Tally, seed: u64) -> Value {
    let u = universe();
    let mut r = random::rng(seed, 4);
    let (mut found, mut attempts) = (0, 0);
    while found < 100 && attempts < 20_000 {
        attempts += 1;
        let Some(f) = random::fully_faithful_functor(&mut r, &u) else {
            continue;
        };
        found += 1;
        match elementary_square(&f) {
            Ok((p, cmp)) => {
                t.check(
                    cmp.is_equivalence() && p.object.is_equivalent(f.source()),
                    || format!("sample {found}: comparison X -> pullback is not an equivalence"),
                );
            }
            Err(e) => t.check(false, || format!("sample {found}: {e}")),
        }
    }
    t.check(found == 100, || {
        format!("only {found} fully faithful functors in {attempts} draws")
    });
    json!({ "samples": found, "draws": attempts })
}

fn los_agreement(t: &mut Tally, b: &Budgets, seed: u64) -> Value {
    let mut r = random::rng(seed, 5);
    let mut tags = [0usize; 3];
    for i in 0..100 {
        let g = random::germ_instance(&mut r);
        let x = GermObject::eventually_constant(g.prefix.clone(), g.tail);
        let n = NonStandardLevel::eventually_constant(g.levels.clone(), g.tail_level)
            .expect("levels at least -2");
        for truncated in [true, false] {
            let got = if truncated {
                los_truncated(&x, &n, &g.filter, b)
            } else {
                los_connected(&x, &n, &g.filter, b)
            };
            let want = oracle::los_literal(
                &g.prefix,
                g.tail,
                &g.levels,
                g.tail_level,
                &g.filter,
                truncated,
                b,
            );
            tags[got.tag as usize] += 1;
            t.check(got.tag == want, || {
                let pred = if truncated { "truncated" } else { "connected" };
                format!(
                    "instance {i}: {pred} at {n} over {}: library {} vs literal {}",
                    g.filter, got.tag, want
                )
            });
        }
    }
    json!({ "instances": 100, "yes": tags[0], "no": tags[1], "unknown": tags[2] })
}

fn sphere_scenario(t: &mut Tally, b: &Budgets) -> Value {
    let phi = FilterSpec::Frechet;
    let level = |s: &str| s.parse::<NonStandardLevel>().expect("level literal");
    let valid = validate_family(Family::Spheres, b);
    t.check(valid.is_ok(), || {
        format!(
            "sphere schema at horizon {}: {}",
            b.horizon,
            valid.as_ref().unwrap_err()
        )
    });
    let Ok(spheres) = GermObject::family(Family::Spheres, b) else {
        return json!({ "schema": "invalid" });
    };
    let below = los_connected(&spheres, &level("affine:1,-1"), &phi, b);
    t.check(below.tag == Tag::Yes, || {
        format!("connected at [(i - 1)]: {}", below.tag)
    });
    let at = los_connected(&spheres, &level("affine:1,0"), &phi, b);
    t.check(at.tag == Tag::No, || {
        format!("connected at [(i)]: {}", at.tag)
    });
    let mut constant = Vec::new();
    for c in -2..=1 {
        let v = los_truncated(
            &spheres,
            &NonStandardLevel::constant(c).expect("at least -2"),
            &phi,
            b,
        );
        t.check(v.tag == Tag::No, || {
            format!("truncated at const {c}: {}", v.tag)
        });
        constant.push(json!({ "level": c, "tag": v.tag.as_str() }));
    }
    let witness = GermMap::spheres_to_point(0, b).and_then(|f| hypercomplete_witness(&f, &phi, b));
    let w = match &witness {
        Ok((n, v)) => {
            t.check(v.tag == Tag::No, || {
                format!("witness at {n}: tau-equivalence is {}", v.tag)
            });
            json!({ "level": n.to_string(), "tag": v.tag.as_str() })
        }
        Err(e) => {
            t.check(false, || format!("witness: {e}"));
            json!({ "error": e.to_string() })
        }
    };
    json!({
        "horizon": b.horizon,
        "connected_below": below.tag.as_str(),
        "connected_at": at.tag.as_str(),
        "truncated_constant": constant,
        "witness": w,
    })
}

fn snf_oracle(t: &mut Tally, seed: u64) -> Value {
    let mut r = random::rng(seed, 7);
    let mut agree = 0;
    for i in 0..500 {
        let m = random::matrix(&mut r, 6, 6, 5);
        let got: Vec<String> = invariant_factors(&IntMatrix::from_rows(&m))
            .iter()
            .map(|d| d.to_string())
            .collect();
        let want: Vec<String> = oracle::determinantal_factors(&m)
            .iter()
            .map(|d| d.to_string())
            .collect();
        agree += usize::from(got == want);
        t.check(got == want, || {
            format!("matrix {i} {m:?}: library {got:?} vs oracle {want:?}")
        });
    }
    json!({ "matrices": 500, "agree": agree })
}

fn pushout_cover(t: &mut Tally, b: &Budgets, seed: u64) -> Value {
    let mut r = random::rng(seed, 8);
    let (mut instances, mut draws) = (0, 0);
    while instances < 100 && draws < 10_000 {
        draws += 1;
        let (f, g) = random::cover_instance(&mut r);
        let size = f.source().total_generators()
            + f.target().total_generators()
            + g.target().total_generators();
        if size > 30 {
            continue;
        }
        instances += 1;
        let verdict = pushout_cover_check(&f, &g, b);
        let p = strict_pushout(&f, &g);
        match (verdict, p) {
            (Ok(v), Ok(p)) => {
                let comps = pi0(&p.object);
                let mut hit = vec![false; comps.count];
                for w in p.left.vertex_map().into_iter().chain(p.right.vertex_map()) {
                    hit[comps.vertex_component[w]] = true;
                }
                let expected = oracle::pushout_components(&f, &g);
                t.check(v.is_yes() && hit.iter().all(|&h| h) && comps.count == expected, || {
                    format!("instance {instances}: verdict {}, {} of {} components hit, union-find count {expected}", v.tag, hit.iter().filter(|&&h| h).count(), comps.count)
                });
            }
            (Err(e), _) | (_, Err(e)) => t.check(false, || format!("instance {instances}: {e}")),
        }
    }
    t.check(instances == 100, || {
        format!("only {instances} instances of at most 30 simplices in {draws} draws")
    });
    json!({ "instances": instances, "draws": draws })
}

fn soundness(t: &mut Tally, b: &Budgets) -> Value {
    let catalog = oracle::ground_truth();
    let (mut certified, mut unknown) = (0usize, 0usize);
    for e in &catalog {
        let x = e.build(b);
        for n in -2..=6 {
            let level = TruncLevel::new(n).expect("at least -2");
            for (pred, v, truth) in [
                ("connected", conn_object(&x, level, b), e.connected(n)),
                ("truncated", truncated_object(&x, level, b), e.truncated(n)),
            ] {
                let contradiction = match v.tag {
                    Tag::Yes => !truth,
                    Tag::No => truth,
                    Tag::Unknown => false,
                };
                if v.tag == Tag::Unknown {
                    unknown += 1;
                } else {
                    certified += 1;
                }
                t.check(!contradiction, || {
                    format!(
                        "{} {n}-{pred}: certified {} but the truth is {truth}",
                        e.name, v.tag
                    )
                });
            }
        }
    }
    let total = certified + unknown;
    json!({
        "objects": catalog.len(),
        "verdicts": total,
        "certified": certified,
        "unknown": unknown,
        "unknown_rate": unknown as f64 / total as f64,
    })
}
