//! Seeded instance generators for the randomized suites.

use postnikov_core::filter::{BaseObject, FilterSpec};
use postnikov_core::groupoid::{all_functors, fully_faithful, FiniteGroupoid, GroupoidFunctor};
use postnikov_core::simplicial::catalog::simplicial_complex;
use postnikov_core::simplicial::{SimplicialMap, SimplicialSet};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Independent streams of one seed, so adding draws to one suite leaves the others unchanged.
pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

pub fn matrix(r: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> Vec<Vec<i64>> {
    (0..rows)
        .map(|_| (0..cols).map(|_| r.gen_range(-bound..=bound)).collect())
        .collect()
}

/// Up to three facets of one to three vertices among `0..n`.
fn facets(r: &mut impl Rng, n: usize) -> Vec<Vec<usize>> {
    (0..r.gen_range(0..4))
        .map(|_| {
            let k = r.gen_range(1..=3.min(n));
            let mut f = sample(r, n, k).into_vec();
            f.sort_unstable();
            f
        })
        .collect()
}

/// A complex on vertices `0..n`, all present, with the given extra facets.
pub fn complex_on(n: usize, extra: &[Vec<usize>]) -> SimplicialSet {
    let mut all: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    all.extend(extra.iter().cloned());
    simplicial_complex(&all).expect("sorted facets")
}

/// A span `A <- C -> B` of complexes: `C -> A` an inclusion, `C -> B` a
/// monotone vertex map.
pub fn cover_instance(r: &mut impl Rng) -> (SimplicialMap, SimplicialMap) {
    let (c, extra, nb) = (r.gen_range(1..4), r.gen_range(0..3), r.gen_range(1..5));
    let fc = facets(r, c);
    let mut fa = facets(r, c + extra);
    let mut fb = facets(r, nb);
    let mut vmap: Vec<usize> = (0..c).map(|_| r.gen_range(0..nb)).collect();
    vmap.sort_unstable();
    fa.extend(fc.iter().cloned());
    for f in &fc {
        let mut img: Vec<usize> = f.iter().map(|&v| vmap[v]).collect();
        img.dedup();
        fb.push(img);
    }
    let (cs, a, b) = (
        complex_on(c, &fc),
        complex_on(c + extra, &fa),
        complex_on(nb, &fb),
    );
    let inc: Vec<usize> = (0..c).collect();
    (
        SimplicialMap::from_vertex_map(&cs, &a, &inc).expect("inclusion"),
        SimplicialMap::from_vertex_map(&cs, &b, &vmap).expect("face-preserving"),
    )
}

/// Base objects for random germs: simplicial ones of every connectivity and
/// truncation pattern, and groupoids.
pub const GERM_OBJECTS: &[&str] = &[
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
    "gpd:empty",
];

#[derive(Clone, Debug)]
pub struct GermInstance {
    pub prefix: Vec<BaseObject>,
    pub tail: BaseObject,
    pub levels: Vec<i64>,
    pub tail_level: i64,
    pub filter: FilterSpec,
}

fn germ_object(r: &mut impl Rng) -> BaseObject {
    GERM_OBJECTS[r.gen_range(0..GERM_OBJECTS.len())]
        .parse()
        .expect("listed objects parse")
}

pub fn germ_instance(r: &mut impl Rng) -> GermInstance {
    let prefix = (0..r.gen_range(0..5)).map(|_| germ_object(r)).collect();
    let tail = germ_object(r);
    let levels = (0..r.gen_range(0..5)).map(|_| r.gen_range(-2..5)).collect();
    let tail_level = r.gen_range(-2..8);
    let filter = if r.gen_bool(0.5) {
        FilterSpec::Frechet
    } else {
        FilterSpec::principal((0..r.gen_range(1..=3)).map(|_| r.gen_range(0..8)).collect())
            .expect("nonempty")
    };
    GermInstance {
        prefix,
        tail,
        levels,
        tail_level,
        filter,
    }
}

/// A fully faithful functor between members of `universe`, drawn uniformly
/// among those out of a random source into a random target; `None` when that
/// pair has none (or too many to list).
pub fn fully_faithful_functor(
    r: &mut impl Rng,
    universe: &[FiniteGroupoid],
) -> Option<GroupoidFunctor> {
    let a = &universe[r.gen_range(0..universe.len())];
    let x = &universe[r.gen_range(0..universe.len())];
    let ff: Vec<GroupoidFunctor> = all_functors(a, x)
        .ok()?
        .into_iter()
        .filter(fully_faithful)
        .collect();
    (!ff.is_empty()).then(|| ff[r.gen_range(0..ff.len())].clone())
}
