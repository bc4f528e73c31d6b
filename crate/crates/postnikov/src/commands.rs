use crate::args::{
    Command, FilterCommand, GermArg, GermMapArg, GpdCommand, ObjectArg, SerializeArg, TargetArg,
};
use crate::json::{self, Ingested};
use crate::objects::parse_object;
use crate::report::{homology_json, verdict_json, Context};
use crate::{suites, Failure};
use postnikov_core::certify::{
    conn_map, conn_object, join_theorem_check, minus_one_truncation_probe, truncated_object, Stable,
};
use postnikov_core::filter::{
    eq_mod_filter, equivalence_mod_filter, filter_contains, hypercomplete_witness, le_mod_filter,
    los_connected, los_truncated, lt_mod_filter, BaseMap, FilterSpec, GermMap, GermObject,
    NonStandardLevel, PeriodicSet, SetDesc,
};
use postnikov_core::groupoid::{
    conn_level, diagonal, factorize, gap_map_check, gap_report, homotopy_fiber, is_local,
    trunc_level, truncate0, ConnLevel, FiniteGroupoid, GroupoidFunctor, GroupoidSpec,
};
use postnikov_core::invariants::{homology, pi1, reduced_homology, GroupPresentation};
use postnikov_core::simplicial::SimplicialSet;
use postnikov_core::{Budgets, TruncLevel};
use serde_json::{json, Value};
use std::path::Path;

/// The result payload and whether every check passed.
pub type CmdResult = Result<(Value, bool), Failure>;

pub fn execute(cmd: &Command, ctx: &Context) -> CmdResult {
    let b = &ctx.budgets;
    let done = |v: Value| Ok((v, true));
    match cmd {
        Command::Homology { input, reduced } => {
            let (label, x) = object(input, ctx)?;
            let h = if *reduced {
                reduced_homology(&x)
            } else {
                homology(&x)
            };
            done(
                json!({ "object": label, "counts": x.counts(), "reduced": reduced, "homology": homology_json(&h) }),
            )
        }
        Command::Pi1 { input, component } => {
            let (label, x) = object(input, ctx)?;
            let g = pi1(&x, *component, b)?;
            done(json!({
                "object": label,
                "component": component,
                "base_vertex": g.base_vertex,
                "presentation": presentation_json(&g.presentation),
                "simplified": {
                    "presentation": presentation_json(&g.simplified.presentation),
                    "steps": g.simplified.steps,
                    "exhausted": g.simplified.exhausted,
                },
                "abelianization": g.abelianization.to_string(),
                "triviality": verdict_json(&g.triviality),
            }))
        }
        Command::CertifyConn { input, level } => {
            let n = TruncLevel::new(*level)?;
            let (label, v) = match target(input, ctx)? {
                Target::Object(label, x) => (label, conn_object(&x, n, b)),
                Target::Map(m) => {
                    let f = m.simplicial_map().ok_or_else(|| {
                        input_err(
                            "certify-conn takes simplicial maps; use `gpd levels` for functors",
                        )
                    })?;
                    (m.to_string(), conn_map(&f, n, b)?)
                }
            };
            done(
                json!({ "input": label, "level": level, "predicate": "connected", "verdict": verdict_json(&v) }),
            )
        }
        Command::CertifyTrunc { input, level } => {
            let (label, x) = object(input, ctx)?;
            let v = truncated_object(&x, TruncLevel::new(*level)?, b);
            done(
                json!({ "input": label, "level": level, "predicate": "truncated", "verdict": verdict_json(&v) }),
            )
        }
        Command::JoinPower { input, k } => {
            let (label, x) = object(input, ctx)?;
            let p = minus_one_truncation_probe(&x, *k, b)?;
            let stages: Vec<Value> = p
                .stages
                .iter()
                .map(|s| {
                    json!({
                        "k": s.k,
                        "level": s.level.value(),
                        "counts": s.counts,
                        "skeleton": s.skeleton,
                        "verdict": verdict_json(&s.verdict),
                    })
                })
                .collect();
            let all = p.stages.iter().all(|s| s.verdict.is_yes());
            let colimit = match p.truncation {
                Stable::Empty => "empty",
                Stable::Point => "point",
            };
            done(
                json!({ "object": label, "stages": stages, "all_certified": all, "colimit": colimit }),
            )
        }
        Command::JoinTheorem { x, y, m, n } => {
            let (xs, ys) = (parse_object(x, b)?, parse_object(y, b)?);
            let m = m
                .or_else(|| certified_connectivity(&xs, b))
                .ok_or_else(|| input_err(format!("{x} has no certified connectivity")))?;
            let n = n
                .or_else(|| certified_connectivity(&ys, b))
                .ok_or_else(|| input_err(format!("{y} has no certified connectivity")))?;
            let v = join_theorem_check(&xs, TruncLevel::new(m)?, &ys, TruncLevel::new(n)?, b)?;
            done(
                json!({ "x": x, "m": m, "y": y, "n": n, "level": m + n + 2, "verdict": verdict_json(&v) }),
            )
        }
        Command::Gpd(g) => gpd(g, ctx),
        Command::Filter(f) => filter(f, ctx),
        Command::Suite { name } => {
            let r = suites::run(name, b, ctx.seed)?;
            let passed = r.passed;
            Ok((
                serde_json::to_value(&r).expect("suite report serializes"),
                passed,
            ))
        }
        Command::Ingest { path } => {
            let text = ctx.read(path)?;
            done(summary(&json::ingest_str(&text, b)?))
        }
        Command::Serialize { input } => done(serialize(input, b)?),
    }
}

fn input_err(s: impl Into<String>) -> Failure {
    Failure::Input(s.into())
}

/// The largest `n <= max_dim` with `X` certified n-connected, scanning up from `-2`.
pub fn certified_connectivity(x: &SimplicialSet, b: &Budgets) -> Option<i64> {
    let mut best = None;
    for n in -2..=b.max_dim as i64 {
        if !conn_object(x, TruncLevel::new(n).ok()?, b).is_yes() {
            break;
        }
        best = Some(n);
    }
    best
}

fn presentation_json(p: &GroupPresentation) -> Value {
    json!({ "gens": p.generators, "relators": p.relators })
}

fn object(a: &ObjectArg, ctx: &Context) -> Result<(String, SimplicialSet), Failure> {
    match (&a.object, &a.file) {
        (Some(s), _) => Ok((s.clone(), parse_object(s, &ctx.budgets)?)),
        (None, Some(p)) => Ok((p.display().to_string(), simplicial_file(p, ctx)?)),
        (None, None) => Err(input_err("give --object or --file")),
    }
}

fn simplicial_file(p: &Path, ctx: &Context) -> Result<SimplicialSet, Failure> {
    match json::ingest_str(&ctx.read(p)?, &ctx.budgets)? {
        Ingested::Simplicial(x) => Ok(x),
        _ => Err(input_err(format!(
            "{} is not a simplicial document",
            p.display()
        ))),
    }
}

enum Target {
    Object(String, SimplicialSet),
    Map(BaseMap),
}

fn target(a: &TargetArg, ctx: &Context) -> Result<Target, Failure> {
    match (&a.object, &a.file, &a.map) {
        (Some(s), _, _) => Ok(Target::Object(s.clone(), parse_object(s, &ctx.budgets)?)),
        (_, Some(p), _) => Ok(Target::Object(
            p.display().to_string(),
            simplicial_file(p, ctx)?,
        )),
        (_, _, Some(m)) => Ok(Target::Map(m.parse()?)),
        _ => Err(input_err("give --object, --file or --map")),
    }
}

fn looks_like_path(s: &str) -> bool {
    s.ends_with(".json") || s.contains('/')
}

fn groupoid(s: &str, ctx: &Context) -> Result<FiniteGroupoid, Failure> {
    if !looks_like_path(s) {
        return Ok(s.parse::<GroupoidSpec>()?.build());
    }
    match json::ingest_str(&ctx.read(Path::new(s))?, &ctx.budgets)? {
        Ingested::Groupoid(g) => Ok(g),
        _ => Err(input_err(format!("{s} is not a groupoid document"))),
    }
}

fn functor(s: &str, ctx: &Context) -> Result<GroupoidFunctor, Failure> {
    if !looks_like_path(s) {
        let (kind, rest) = s.split_once(':').ok_or_else(|| {
            input_err(format!(
                "functor `{s}`: expected unit:G, id:G, diagonal:G, trunc0:G or a path"
            ))
        })?;
        let g = groupoid(rest, ctx)?;
        return match kind {
            "unit" => Ok(GroupoidFunctor::to_point(&g)),
            "id" => Ok(GroupoidFunctor::identity(&g)),
            "diagonal" => Ok(diagonal(&g)),
            "trunc0" => Ok(truncate0(&g)),
            _ => Err(input_err(format!("unknown functor kind `{kind}`"))),
        };
    }
    match json::ingest_str(&ctx.read(Path::new(s))?, &ctx.budgets)? {
        Ingested::Functor(f) => Ok(f),
        _ => Err(input_err(format!("{s} is not a functor document"))),
    }
}

fn conn_json(c: ConnLevel) -> Value {
    match c {
        ConnLevel::Finite(n) => json!(n),
        ConnLevel::Infinite => json!("inf"),
    }
}

pub fn groupoid_summary(g: &FiniteGroupoid) -> Value {
    json!({
        "objects": g.num_objects(),
        "morphisms": g.num_morphisms(),
        "components": g.components().iter().map(|c| json!({ "objects": c.objects.len(), "group_order": c.group.order() })).collect::<Vec<_>>(),
    })
}

fn levels_json(f: &GroupoidFunctor) -> Result<Value, Failure> {
    Ok(json!({ "conn_level": conn_json(conn_level(f)?), "trunc_level": trunc_level(f)? }))
}

fn gpd(cmd: &GpdCommand, ctx: &Context) -> CmdResult {
    let v = match cmd {
        GpdCommand::Levels { functor: s } => {
            let f = functor(s, ctx)?;
            json!({ "functor": s, "source": groupoid_summary(f.source()), "target": groupoid_summary(f.target()), "levels": levels_json(&f)? })
        }
        GpdCommand::Factorize { functor: s, level } => {
            let f = functor(s, ctx)?;
            let fact = factorize(&f, *level)?;
            let recomposed = fact.right.compose(&fact.left)?;
            json!({
                "functor": s,
                "level": level,
                "middle": groupoid_summary(&fact.middle),
                "left": levels_json(&fact.left)?,
                "right": levels_json(&fact.right)?,
                "recomposes": recomposed.is_isomorphic_to(&f),
            })
        }
        GpdCommand::Fiber { functor: s, over } => {
            let f = functor(s, ctx)?;
            if *over >= f.target().num_objects() {
                return Err(input_err(format!("target has no object {over}")));
            }
            let fib = homotopy_fiber(&f, *over)?;
            json!({ "functor": s, "over": over, "fiber": groupoid_summary(&fib), "document": json::tagged("groupoid", &json::groupoid_to_json(&fib)) })
        }
        GpdCommand::GapMap {
            f: fs,
            g: gs,
            level,
        } => {
            let (f, g) = (functor(fs, ctx)?, functor(gs, ctx)?);
            let equivalence = gap_map_check(&f, &g, *level)?;
            let r = gap_report(&f, &g)?;
            let connected = conn_level(&f)?.at_least(*level);
            json!({
                "f": fs,
                "g": gs,
                "level": level,
                "source": { "objects": r.source.0, "components": r.source.1 },
                "target": { "objects": r.target.0, "components": r.target.1 },
                "equivalence": equivalence,
                "f_connected": connected,
                "agrees": equivalence == connected,
            })
        }
        GpdCommand::IsLocal { object, against } => {
            let (x, a) = (groupoid(object, ctx)?, groupoid(against, ctx)?);
            json!({ "object": object, "against": against, "local": is_local(&x, &a)? })
        }
    };
    Ok((v, true))
}

fn parse_set(s: &str) -> Result<SetDesc, Failure> {
    let (kind, body) = s
        .split_once(':')
        .ok_or_else(|| input_err(format!("set `{s}` needs the form kind:body")))?;
    let list = |body: &str| -> Result<Vec<u64>, Failure> {
        body.split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| {
                t.trim()
                    .parse()
                    .map_err(|_| input_err(format!("`{t}` is not an index")))
            })
            .collect()
    };
    let bits = |body: &str| -> Result<Vec<bool>, Failure> {
        body.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(input_err(format!("`{c}` is not a bit"))),
            })
            .collect()
    };
    let count = |body: &str| {
        body.trim()
            .parse::<u64>()
            .map_err(|_| input_err(format!("`{body}` is not an index")))
    };
    Ok(match kind {
        "finite" => SetDesc::Finite(list(body)?),
        "cofinite" => SetDesc::Cofinite(list(body)?),
        "from" => SetDesc::EventuallyTrue(count(body)?),
        "below" => SetDesc::EventuallyFalse(count(body)?),
        "periodic" => {
            let (p, c) = body
                .split_once('/')
                .ok_or_else(|| input_err("periodic sets are written prefix/cycle"))?;
            SetDesc::Periodic(PeriodicSet::new(bits(p)?, bits(c)?)?)
        }
        _ => return Err(input_err(format!("unknown set kind `{kind}`"))),
    })
}

fn germ(a: &GermArg, ctx: &Context) -> Result<(String, GermObject), Failure> {
    let b = &ctx.budgets;
    match (&a.family, &a.object, &a.germ) {
        (Some(f), _, _) => Ok((f.clone(), GermObject::family(f.parse()?, b)?)),
        (_, Some(x), _) => Ok((format!("const {x}"), GermObject::constant(x.parse()?))),
        (_, _, Some(p)) => match json::ingest_str(&ctx.read(p)?, b)? {
            Ingested::Germ(g) => Ok((p.display().to_string(), g)),
            _ => Err(input_err(format!("{} is not a germ document", p.display()))),
        },
        _ => Err(input_err("give --family, --object or --germ")),
    }
}

fn maps(s: &str) -> Result<Vec<BaseMap>, Failure> {
    s.split(';')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.parse().map_err(Failure::from))
        .collect()
}

fn germ_map(a: &GermMapArg, b: &Budgets) -> Result<GermMap, Failure> {
    if a.spheres_to_point {
        return Ok(GermMap::spheres_to_point(a.start, b)?);
    }
    if let Some(m) = &a.map {
        let mut g = GermMap::levelwise(m.parse()?);
        g.start = a.start;
        return Ok(g);
    }
    let cycle = a
        .cycle
        .as_deref()
        .ok_or_else(|| input_err("give --spheres-to-point, --map or --cycle"))?;
    Ok(GermMap::periodic(
        a.start,
        maps(a.prefix.as_deref().unwrap_or(""))?,
        maps(cycle)?,
    )?)
}

fn germ_map_label(a: &GermMapArg) -> String {
    if a.spheres_to_point {
        return format!("msphere:i -> point from {}", a.start);
    }
    if let Some(m) = &a.map {
        return format!("{m} from {}", a.start);
    }
    format!(
        "{} / {} from {}",
        a.prefix.as_deref().unwrap_or(""),
        a.cycle.as_deref().unwrap_or(""),
        a.start
    )
}

fn filter(cmd: &FilterCommand, ctx: &Context) -> CmdResult {
    let b = &ctx.budgets;
    let phi = |s: &str| s.parse::<FilterSpec>().map_err(Failure::from);
    let level = |s: &str| s.parse::<NonStandardLevel>().map_err(Failure::from);
    let compare = |a: &str,
                   c: &str,
                   f: &str,
                   op: fn(
        &NonStandardLevel,
        &NonStandardLevel,
        &FilterSpec,
    ) -> postnikov_core::Result<bool>|
     -> Result<Value, Failure> {
        let (x, y, p) = (level(a)?, level(c)?, phi(f)?);
        Ok(
            json!({ "a": x.to_string(), "b": y.to_string(), "filter": p.to_string(), "holds": op(&x, &y, &p)? }),
        )
    };
    let v = match cmd {
        FilterCommand::Contains { filter: f, set } => {
            let (p, s) = (phi(f)?, parse_set(set)?);
            json!({ "filter": p.to_string(), "set": s.to_string(), "tag": filter_contains(&p, &s).as_str() })
        }
        FilterCommand::Eq { a, b: c, filter: f } => compare(a, c, f, eq_mod_filter)?,
        FilterCommand::Le { a, b: c, filter: f } => compare(a, c, f, le_mod_filter)?,
        FilterCommand::Lt { a, b: c, filter: f } => compare(a, c, f, lt_mod_filter)?,
        FilterCommand::LosTrunc {
            germ: g,
            level: n,
            filter: f,
        }
        | FilterCommand::LosConn {
            germ: g,
            level: n,
            filter: f,
        } => {
            let (label, x) = germ(g, ctx)?;
            let (n, p) = (level(n)?, phi(f)?);
            let truncated = matches!(cmd, FilterCommand::LosTrunc { .. });
            let v = if truncated {
                los_truncated(&x, &n, &p, b)
            } else {
                los_connected(&x, &n, &p, b)
            };
            json!({
                "germ": label,
                "predicate": if truncated { "truncated" } else { "connected" },
                "level": n.to_string(),
                "filter": p.to_string(),
                "tag": v.tag.as_str(),
                "verdict": verdict_json(&v),
            })
        }
        FilterCommand::Equivalence { map, filter: f } => {
            let (g, p) = (germ_map(map, b)?, phi(f)?);
            let v = equivalence_mod_filter(&g, &p, b);
            json!({ "map": germ_map_label(map), "filter": p.to_string(), "tag": v.tag.as_str(), "verdict": verdict_json(&v) })
        }
        FilterCommand::Witness { map, filter: f } => {
            let (g, p) = (germ_map(map, b)?, phi(f)?);
            let (n, v) = hypercomplete_witness(&g, &p, b)?;
            json!({
                "map": germ_map_label(map),
                "filter": p.to_string(),
                "level": n.to_string(),
                "document": json::level_to_json(&n),
                "tau_equivalence": verdict_json(&v),
            })
        }
    };
    Ok((v, true))
}

fn summary(x: &Ingested) -> Value {
    match x {
        Ingested::Simplicial(s) => {
            json!({ "kind": "simplicial", "dim": s.dim(), "counts": s.counts() })
        }
        Ingested::Groupoid(g) => {
            let mut v = groupoid_summary(g);
            v["kind"] = json!("groupoid");
            v
        }
        Ingested::Functor(f) => json!({
            "kind": "functor",
            "source": groupoid_summary(f.source()),
            "target": groupoid_summary(f.target()),
            "levels": levels_json(f).unwrap_or_else(|e| json!({ "error": e.to_string() })),
        }),
        Ingested::Level(n) => {
            json!({ "kind": "level", "level": n.to_string(), "first_values": (0..8).map(|i| n.value(i)).collect::<Vec<_>>() })
        }
        Ingested::Filter(p) => json!({ "kind": "filter", "filter": p.to_string() }),
        Ingested::Germ(g) => json!({
            "kind": "germ",
            "first_members": (0..6).map(|i| g.at(i).to_string()).collect::<Vec<_>>(),
        }),
    }
}

fn serialize(a: &SerializeArg, b: &Budgets) -> Result<Value, Failure> {
    match (&a.object, &a.groupoid) {
        (Some(s), _) => Ok(json::tagged(
            "simplicial",
            &json::simplicial_to_json(&parse_object(s, b)?),
        )),
        (_, Some(g)) => Ok(json::tagged(
            "groupoid",
            &json::groupoid_to_json(&g.parse::<GroupoidSpec>()?.build()),
        )),
        _ => Err(input_err("give --object or --groupoid")),
    }
}
