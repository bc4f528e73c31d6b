//! JSON documents for objects, functors, levels, filters and germ objects.
//! Every document carries a `kind` field; see `docs/formats.md`.

use crate::Failure;
use postnikov_core::filter::{FilterSpec, GermObject, Line, NonStandardLevel};
use postnikov_core::groupoid::{FiniteGroupoid, GroupoidFunctor, GroupoidSpec, GroupoidTables};
use postnikov_core::simplicial::catalog::simplicial_complex;
use postnikov_core::simplicial::{GenRef, Simplex, SimplicialSet};
use postnikov_core::Budgets;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::collections::BTreeMap;
use std::fmt;

/// Morphism ids may be numbers or strings.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Id {
    Num(u64),
    Name(String),
}

impl fmt::Display for Id {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Id::Num(n) => write!(f, "{n}"),
            Id::Name(s) => f.write_str(s),
        }
    }
}

/// A face entry `[dim, id]`, or `[dim, id, [j, ...]]` for the degenerate
/// simplex `s_{j_k} ... s_{j_1}` of that generator (indices strictly increasing).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FaceRef {
    Plain(usize, Id),
    Degenerate(usize, Id, Vec<usize>),
}

/// Generator ids per dimension and the faces `[d_0, ..., d_n]` of every
/// generator of dimension `n >= 1`, keyed `"n:id"`. Alternatively `facets` of an
/// ordered simplicial complex on natural-number vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimplicialJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub simplices: Option<Vec<Vec<Id>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub faces: Option<BTreeMap<String, Vec<FaceRef>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismJson {
    pub id: Id,
    pub src: usize,
    pub tgt: usize,
}

/// A groupoid as a category. `comp` lists `[after, before, after . before]` for
/// every composable pair; `inv` pairs and `identities` are found when omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupoidJson {
    pub objects: usize,
    pub morphisms: Vec<MorphismJson>,
    pub comp: Vec<(Id, Id, Id)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inv: Option<Vec<(Id, Id)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identities: Option<Vec<Id>>,
}

/// A catalog string such as `"bz:2"` or an inline groupoid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupoidRef {
    Spec(String),
    Inline(GroupoidJson),
}

/// Object images in order, and `[source id, target id]` for every source morphism.
/// Ids of catalog groupoids are their structured morphism numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorJson {
    pub source: GroupoidRef,
    pub target: GroupoidRef,
    pub objects: Vec<usize>,
    pub morphisms: Vec<(Id, Id)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum FilterJson {
    Frechet,
    Principal { set: Vec<u64> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum LevelJson {
    Const {
        value: i64,
    },
    PrefixConst {
        prefix: Vec<i64>,
        tail: i64,
    },
    Affine {
        slope: i64,
        offset: i64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        threshold: Option<u64>,
    },
    Periodic {
        prefix: Vec<i64>,
        cycle: Vec<i64>,
    },
    /// Lines `[slope, offset]` in rotation after the prefix.
    Seq {
        prefix: Vec<i64>,
        pieces: Vec<[i64; 2]>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum GermJson {
    Const { object: String },
    PrefixConst { prefix: Vec<String>, tail: String },
    Family { family: String },
}

/// The result of reading a document.
#[derive(Clone, Debug)]
pub enum Ingested {
    Simplicial(SimplicialSet),
    Groupoid(FiniteGroupoid),
    Functor(GroupoidFunctor),
    Level(NonStandardLevel),
    Filter(FilterSpec),
    Germ(GermObject),
}

fn input(e: impl fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

fn strip_kind(v: &Value) -> Value {
    let mut v = v.clone();
    if let Value::Object(m) = &mut v {
        m.remove("kind");
    }
    v
}

pub fn ingest_value(v: &Value, b: &Budgets) -> Result<Ingested, Failure> {
    let kind = v
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| input("document has no string `kind` field"))?;
    let parse = |what: &str| -> Result<Value, Failure> {
        Ok(if what == "tagged" {
            v.clone()
        } else {
            strip_kind(v)
        })
    };
    match kind {
        "simplicial" => {
            let j: SimplicialJson = serde_json::from_value(parse("plain")?).map_err(input)?;
            Ok(Ingested::Simplicial(simplicial_from_json(&j)?))
        }
        "groupoid" => {
            let j: GroupoidJson = serde_json::from_value(parse("plain")?).map_err(input)?;
            Ok(Ingested::Groupoid(groupoid_from_json(&j)?.0))
        }
        "functor" => {
            let j: FunctorJson = serde_json::from_value(parse("plain")?).map_err(input)?;
            Ok(Ingested::Functor(functor_from_json(&j)?))
        }
        "frechet" | "principal" => {
            let j: FilterJson = serde_json::from_value(parse("tagged")?).map_err(input)?;
            Ok(Ingested::Filter(filter_from_json(&j)?))
        }
        "family" => germ(v, b),
        "const" | "prefix-const" => {
            // Levels carry integers, germ objects carry catalog strings.
            if v.get("value").is_some_and(Value::is_i64) || v.get("tail").is_some_and(Value::is_i64)
            {
                level(v)
            } else {
                germ(v, b)
            }
        }
        "affine" | "periodic" | "seq" => level(v),
        other => Err(input(format!("unknown document kind `{other}`"))),
    }
}

fn level(v: &Value) -> Result<Ingested, Failure> {
    let j: LevelJson = serde_json::from_value(v.clone()).map_err(input)?;
    Ok(Ingested::Level(level_from_json(&j)?))
}

fn germ(v: &Value, b: &Budgets) -> Result<Ingested, Failure> {
    let j: GermJson = serde_json::from_value(v.clone()).map_err(input)?;
    Ok(Ingested::Germ(germ_from_json(&j, b)?))
}

pub fn ingest_str(text: &str, b: &Budgets) -> Result<Ingested, Failure> {
    let v: Value = serde_json::from_str(text).map_err(|e| input(format!("malformed JSON: {e}")))?;
    ingest_value(&v, b)
}

/// Wraps a serializable document with its `kind`.
pub fn tagged(kind: &str, doc: &impl Serialize) -> Value {
    let mut v = serde_json::to_value(doc).expect("serializable");
    if let Value::Object(m) = &mut v {
        let mut out = serde_json::Map::new();
        out.insert("kind".into(), Value::String(kind.into()));
        out.extend(std::mem::take(m));
        return Value::Object(out);
    }
    v
}

pub fn simplicial_from_json(j: &SimplicialJson) -> Result<SimplicialSet, Failure> {
    if let Some(facets) = &j.facets {
        if j.dim.is_some() || j.simplices.is_some() || j.faces.is_some() {
            return Err(input(
                "give either `facets` or `dim`/`simplices`/`faces`, not both",
            ));
        }
        return simplicial_complex(facets).map_err(input);
    }
    let simplices = j.simplices.clone().unwrap_or_default();
    let dim = j.dim.ok_or_else(|| input("`dim` is required"))?;
    if dim != simplices.len() as i64 - 1 {
        return Err(input(format!(
            "`dim` is {dim} but `simplices` lists {} dimensions",
            simplices.len()
        )));
    }
    let mut index: Vec<BTreeMap<&Id, usize>> = Vec::new();
    for (d, ids) in simplices.iter().enumerate() {
        let mut m = BTreeMap::new();
        for (k, id) in ids.iter().enumerate() {
            if m.insert(id, k).is_some() {
                return Err(input(format!("generator id {d}:{id} is listed twice")));
            }
        }
        index.push(m);
    }
    let empty = BTreeMap::new();
    let table = j.faces.as_ref().unwrap_or(&empty);
    if let Some(key) = table.keys().find(|k| {
        let known = k.split_once(':').and_then(|(d, id)| {
            let d: usize = d.parse().ok()?;
            let id = id
                .parse::<u64>()
                .map(Id::Num)
                .unwrap_or_else(|_| Id::Name(id.to_string()));
            (d >= 1 && index.get(d)?.contains_key(&id)).then_some(())
        });
        known.is_none()
    }) {
        return Err(input(format!(
            "faces entry `{key}` names no generator of dimension 1 or more"
        )));
    }
    let mut faces = vec![vec![Vec::new(); simplices.first().map_or(0, Vec::len)]];
    for (d, ids) in simplices.iter().enumerate().skip(1) {
        let mut level = Vec::with_capacity(ids.len());
        for id in ids {
            let fs = table
                .get(&format!("{d}:{id}"))
                .ok_or_else(|| input(format!("generator {d}:{id} has no faces entry")))?;
            if fs.len() != d + 1 {
                return Err(input(format!(
                    "generator {d}:{id} lists {} faces, expected {}",
                    fs.len(),
                    d + 1
                )));
            }
            let resolve = |e: usize, r: &Id, js: &[usize]| -> Result<Simplex, Failure> {
                let k = index.get(e).and_then(|m| m.get(r)).ok_or_else(|| {
                    input(format!("face of {d}:{id} names unknown generator {e}:{r}"))
                })?;
                if e + js.len() + 1 != d {
                    return Err(input(format!(
                        "face {e}:{r} {js:?} of {d}:{id} has dimension {}, expected {}",
                        e + js.len(),
                        d - 1
                    )));
                }
                Simplex::from_degeneracies(GenRef::new(e, *k), js).map_err(input)
            };
            level.push(
                fs.iter()
                    .map(|f| match f {
                        FaceRef::Plain(e, r) => resolve(*e, r, &[]),
                        FaceRef::Degenerate(e, r, js) => resolve(*e, r, js),
                    })
                    .collect::<Result<Vec<_>, _>>()?,
            );
        }
        faces.push(level);
    }
    if simplices.is_empty() {
        faces.clear();
    }
    SimplicialSet::from_faces(faces).map_err(input)
}

/// Generator ids are their indices.
pub fn simplicial_to_json(x: &SimplicialSet) -> SimplicialJson {
    let id = |k: usize| Id::Num(k as u64);
    let mut faces = BTreeMap::new();
    for g in x.all_generators().filter(|g| g.dim > 0) {
        let fs = x
            .generator_faces(g)
            .iter()
            .map(|s| {
                if s.is_degenerate() {
                    FaceRef::Degenerate(s.gen.dim, id(s.gen.index), s.degeneracies())
                } else {
                    FaceRef::Plain(s.gen.dim, id(s.gen.index))
                }
            })
            .collect();
        faces.insert(format!("{}:{}", g.dim, g.index), fs);
    }
    SimplicialJson {
        dim: Some(x.dim() as i64),
        simplices: Some(
            x.counts()
                .iter()
                .map(|&c| (0..c).map(id).collect())
                .collect(),
        ),
        faces: Some(faces),
        facets: None,
    }
}

/// The groupoid and the structured id of every named morphism.
pub fn groupoid_from_json(
    j: &GroupoidJson,
) -> Result<(FiniteGroupoid, BTreeMap<Id, usize>), Failure> {
    let m = j.morphisms.len();
    let mut index = BTreeMap::new();
    for (k, mj) in j.morphisms.iter().enumerate() {
        if index.insert(mj.id.clone(), k).is_some() {
            return Err(input(format!("morphism id {} is listed twice", mj.id)));
        }
    }
    let lookup = |id: &Id| {
        index
            .get(id)
            .copied()
            .ok_or_else(|| input(format!("unknown morphism id {id}")))
    };
    let mut comp = vec![vec![None; m]; m];
    for (a, b, c) in &j.comp {
        let (g, f, h) = (lookup(a)?, lookup(b)?, lookup(c)?);
        if comp[g][f].replace(h).is_some_and(|old| old != h) {
            return Err(input(format!("composite of {a} after {b} is given twice")));
        }
    }
    let mut inverses = vec![None; m];
    for (a, b) in j.inv.iter().flatten() {
        inverses[lookup(a)?] = Some(lookup(b)?);
    }
    let identities = j
        .identities
        .as_ref()
        .map(|ids| ids.iter().map(lookup).collect::<Result<Vec<_>, _>>())
        .transpose()?;
    let tables = GroupoidTables {
        objects: j.objects,
        morphisms: j.morphisms.iter().map(|mj| (mj.src, mj.tgt)).collect(),
        comp,
        identities,
        inverses,
        names: Some(j.morphisms.iter().map(|mj| mj.id.to_string()).collect()),
    };
    let (g, translate) = FiniteGroupoid::from_tables(&tables).map_err(input)?;
    let ids = index
        .into_iter()
        .map(|(id, k)| (id, translate[k]))
        .collect();
    Ok((g, ids))
}

pub fn groupoid_to_json(g: &FiniteGroupoid) -> GroupoidJson {
    let t = g.to_tables();
    let id = |k: usize| Id::Num(k as u64);
    let mut comp = Vec::new();
    for (a, row) in t.comp.iter().enumerate() {
        for (b, h) in row.iter().enumerate() {
            if let Some(h) = h {
                comp.push((id(a), id(b), id(*h)));
            }
        }
    }
    GroupoidJson {
        objects: t.objects,
        morphisms: t
            .morphisms
            .iter()
            .enumerate()
            .map(|(k, &(src, tgt))| MorphismJson {
                id: id(k),
                src,
                tgt,
            })
            .collect(),
        comp,
        inv: Some(
            t.inverses
                .iter()
                .enumerate()
                .filter_map(|(k, h)| Some((id(k), id((*h)?))))
                .collect(),
        ),
        identities: t.identities.map(|ids| ids.into_iter().map(id).collect()),
    }
}

fn groupoid_ref(r: &GroupoidRef) -> Result<(FiniteGroupoid, BTreeMap<Id, usize>), Failure> {
    match r {
        GroupoidRef::Spec(s) => {
            let g = s.parse::<GroupoidSpec>().map_err(input)?.build();
            let ids = (0..g.num_morphisms())
                .map(|k| (Id::Num(k as u64), k))
                .collect();
            Ok((g, ids))
        }
        GroupoidRef::Inline(j) => groupoid_from_json(j),
    }
}

pub fn functor_from_json(j: &FunctorJson) -> Result<GroupoidFunctor, Failure> {
    let (x, xi) = groupoid_ref(&j.source)?;
    let (y, yi) = groupoid_ref(&j.target)?;
    let mut mor = vec![None; x.num_morphisms()];
    for (a, b) in &j.morphisms {
        let src = *xi
            .get(a)
            .ok_or_else(|| input(format!("unknown source morphism id {a}")))?;
        let tgt = *yi
            .get(b)
            .ok_or_else(|| input(format!("unknown target morphism id {b}")))?;
        mor[src] = Some(tgt);
    }
    let mor = mor
        .into_iter()
        .enumerate()
        .map(|(k, m)| m.ok_or_else(|| input(format!("source morphism {k} has no image"))))
        .collect::<Result<Vec<_>, _>>()?;
    GroupoidFunctor::new(x, y, j.objects.clone(), mor).map_err(input)
}

pub fn filter_from_json(j: &FilterJson) -> Result<FilterSpec, Failure> {
    match j {
        FilterJson::Frechet => Ok(FilterSpec::Frechet),
        FilterJson::Principal { set } => FilterSpec::principal(set.clone()).map_err(input),
    }
}

pub fn filter_to_json(f: &FilterSpec) -> FilterJson {
    match f {
        FilterSpec::Frechet => FilterJson::Frechet,
        FilterSpec::Principal(s) => FilterJson::Principal { set: s.clone() },
    }
}

pub fn level_from_json(j: &LevelJson) -> Result<NonStandardLevel, Failure> {
    match j {
        LevelJson::Const { value } => NonStandardLevel::constant(*value),
        LevelJson::PrefixConst { prefix, tail } => {
            NonStandardLevel::eventually_constant(prefix.clone(), *tail)
        }
        LevelJson::Affine {
            slope,
            offset,
            threshold,
        } => NonStandardLevel::affine(*slope, *offset, *threshold),
        LevelJson::Periodic { prefix, cycle } => {
            NonStandardLevel::periodic(prefix.clone(), cycle.clone())
        }
        LevelJson::Seq { prefix, pieces } => NonStandardLevel::from_parts(
            prefix.clone(),
            pieces
                .iter()
                .map(|&[slope, offset]| Line { slope, offset })
                .collect(),
        ),
    }
    .map_err(input)
}

pub fn level_to_json(n: &NonStandardLevel) -> LevelJson {
    if let Some(v) = n.standard_value() {
        return if n.prefix().iter().all(|&p| p == v) {
            LevelJson::Const { value: v }
        } else {
            LevelJson::PrefixConst {
                prefix: n.prefix().to_vec(),
                tail: v,
            }
        };
    }
    LevelJson::Seq {
        prefix: n.prefix().to_vec(),
        pieces: n.pieces().iter().map(|l| [l.slope, l.offset]).collect(),
    }
}

pub fn germ_from_json(j: &GermJson, b: &Budgets) -> Result<GermObject, Failure> {
    let obj = |s: &String| s.parse().map_err(input);
    match j {
        GermJson::Const { object } => Ok(GermObject::constant(obj(object)?)),
        GermJson::PrefixConst { prefix, tail } => Ok(GermObject::eventually_constant(
            prefix.iter().map(obj).collect::<Result<_, _>>()?,
            obj(tail)?,
        )),
        GermJson::Family { family } => {
            GermObject::family(family.parse().map_err(input)?, b).map_err(input)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use postnikov_core::simplicial::CatalogSpec;

    #[test]
    fn catalog_objects_round_trip() {
        for s in [
            "empty",
            "point",
            "sphere:2",
            "msphere:3",
            "boundary:3",
            "cycle:4",
            "wedge:2",
            "delta:3",
        ] {
            let x = s.parse::<CatalogSpec>().unwrap().build();
            let doc = tagged("simplicial", &simplicial_to_json(&x));
            let Ingested::Simplicial(y) = ingest_value(&doc, &Budgets::default()).unwrap() else {
                panic!("kind")
            };
            assert_eq!(x, y, "{s}");
        }
    }

    #[test]
    fn level_documents() {
        let b = Budgets::default();
        let v: Value = serde_json::json!({"kind": "affine", "slope": 1, "offset": -1});
        let Ingested::Level(n) = ingest_value(&v, &b).unwrap() else {
            panic!("kind")
        };
        assert_eq!(n, "affine:1,-1".parse().unwrap());
        let v: Value = serde_json::json!({"kind": "const", "object": "sphere:1"});
        assert!(matches!(ingest_value(&v, &b).unwrap(), Ingested::Germ(_)));
        let v: Value = serde_json::json!({"kind": "const", "value": 3});
        assert!(matches!(ingest_value(&v, &b).unwrap(), Ingested::Level(_)));
        for s in [
            "const:2",
            "prefix-const:0,1/3",
            "affine:2,1,0",
            "seq:1/0:2;1:0",
        ] {
            let n: NonStandardLevel = s.parse().unwrap();
            assert_eq!(level_from_json(&level_to_json(&n)).unwrap(), n, "{s}");
        }
    }
}
