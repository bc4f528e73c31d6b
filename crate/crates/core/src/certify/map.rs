use super::object::{conn_object, contractible};
use super::{simply_connected, Budgets, Tag, Verdict};
use crate::error::Result;
use crate::invariants::{
    homology, pi0, pi1, relative_homology, relative_homology_upto, Components, Word,
};
use crate::simplicial::{GenRef, Simplex, SimplicialMap};
use crate::TruncLevel;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

/// Component map induced by `f`.
fn pi0_map(f: &SimplicialMap, src: &Components, tgt: &Components) -> Vec<usize> {
    (0..src.count)
        .map(|c| {
            let v = src.vertices(c)[0];
            tgt.vertex_component[f.vertex_map()[v]]
        })
        .collect()
}

fn pi0_status(map: &[usize], targets: usize) -> (bool, bool) {
    let mut hit = vec![0usize; targets];
    for &c in map {
        hit[c] += 1;
    }
    (hit.iter().all(|&h| h >= 1), hit.iter().all(|&h| h <= 1))
}

/// Tries to show that `pi_1` of source component `sc` surjects onto `pi_1` of
/// target component `tc`: every simplified target generator must be the
/// image of some source generator loop, up to inversion.
fn preimage_search(f: &SimplicialMap, sc: usize, tc: usize, b: &Budgets) -> bool {
    let (x, y) = (f.source(), f.target());
    let (Ok(px), Ok(py)) = (pi1(x, sc, b), pi1(y, tc, b)) else {
        return false;
    };
    let gens = py.simplified.presentation.generators as i32;
    let image_word = |path: &[(usize, bool)]| -> Word {
        let mut w = Vec::new();
        for &(e, forward) in path {
            let img: Simplex = f.apply(&Simplex::nondegenerate(GenRef::new(1, e)));
            if img.is_degenerate() {
                continue;
            }
            let ew = py.edge_words[img.gen.index]
                .clone()
                .expect("image edge in target component");
            if forward {
                w.extend(ew);
            } else {
                w.extend(crate::invariants::invert(&ew));
            }
        }
        py.simplified.rewrite(&w)
    };
    let mut hit = vec![false; gens as usize];
    for l in px.generator_loops(x) {
        let w = image_word(&l);
        if w.len() == 1 {
            hit[(w[0].unsigned_abs() - 1) as usize] = true;
        }
    }
    hit.iter().all(|&h| h)
}

/// Is `f` n-connected?
pub fn conn_map(f: &SimplicialMap, n: TruncLevel, b: &Budgets) -> Result<Verdict> {
    if f.is_isomorphism() {
        return Ok(Verdict::yes(*b, "M-ISO", "bijective on generators"));
    }
    let n = n.value();
    if n == -2 {
        return Ok(Verdict::yes(*b, "M-BOTTOM", "every map is (-2)-connected"));
    }
    let (x, y) = (f.source(), f.target());
    let (cx, cy) = (pi0(x), pi0(y));
    let comp_map = pi0_map(f, &cx, &cy);
    let (surjective, injective) = pi0_status(&comp_map, cy.count);
    if n == -1 {
        return Ok(if surjective {
            Verdict::yes(*b, "M-PI0-SURJ", "surjective on components")
        } else {
            Verdict::no(*b, "M-PI0-SURJ", "some target component is missed")
        });
    }
    if !(surjective && injective) {
        return Ok(Verdict::no(
            *b,
            "M-PI0-BIJ",
            format!(
                "{} source components over {} target components, not bijective",
                cx.count, cy.count
            ),
        ));
    }
    // Relative Hurewicz: an n-connected map has H_k(Cyl f, X) = 0 for k <= n + 1.
    let rel = relative_homology_upto(f, n as usize + 1, b.max_dim)?;
    if let Some((k, g)) = rel.iter().enumerate().find(|(_, g)| !g.is_zero()) {
        return Ok(Verdict::no(
            *b,
            "M-REL-HUREWICZ",
            format!("relative H_{k} = {g} with {k} <= {}", n + 1),
        ));
    }
    let sy = simply_connected(y, &cy, b);
    if n == 0 {
        let mut open = Vec::new();
        for (sc, &tc) in comp_map.iter().enumerate() {
            if sy[tc].is_yes() || preimage_search(f, sc, tc, b) {
                continue;
            }
            open.push(tc);
        }
        return Ok(if open.is_empty() {
            Verdict::yes(
                *b,
                "M-PI1-SURJ",
                "bijective on components and surjective on every fundamental group",
            )
        } else {
            Verdict::unknown(
                *b,
                format!("no certified pi_1 surjection onto target components {open:?}"),
            )
        });
    }
    let hx = homology(x);
    let hy = homology(y);
    let h1 = |h: &[crate::invariants::AbelianGroup]| h.get(1).cloned().unwrap_or_default();
    if h1(&hx) != h1(&hy) {
        return Ok(Verdict::no(
            *b,
            "M-H1",
            "H_1 differs between source and target",
        ));
    }
    let sx = simply_connected(x, &cx, b);
    if sx.iter().chain(&sy).all(Verdict::is_yes) {
        return Ok(Verdict::yes(
            *b,
            "M-REL-HUREWICZ",
            format!(
                "simply connected components, relative H_k = 0 for k <= {}",
                n + 1
            ),
        ));
    }
    Ok(Verdict::unknown(
        *b,
        "relative homology vanishes but simple connectivity is not certified on every component",
    ))
}

/// Is `f` a weak equivalence?
pub fn equivalence(f: &SimplicialMap, b: &Budgets) -> Result<Verdict> {
    if f.is_isomorphism() {
        return Ok(Verdict::yes(*b, "M-ISO", "bijective on generators"));
    }
    let (x, y) = (f.source(), f.target());
    let (cx, cy) = (contractible(x, b), contractible(y, b));
    if cx.is_yes() && cy.is_yes() {
        return Ok(
            Verdict::yes(*b, "E-CONTRACTIBLE", "source and target are contractible")
                .citing(&cx)
                .citing(&cy),
        );
    }
    let (px, py) = (pi0(x), pi0(y));
    let (surjective, injective) = pi0_status(&pi0_map(f, &px, &py), py.count);
    if !(surjective && injective) {
        return Ok(Verdict::no(*b, "E-PI0", "not bijective on components"));
    }
    let (hx, hy) = (homology(x), homology(y));
    let len = hx.len().max(hy.len());
    for k in 0..len {
        let (a, c) = (
            hx.get(k).cloned().unwrap_or_default(),
            hy.get(k).cloned().unwrap_or_default(),
        );
        if a != c {
            return Ok(Verdict::no(
                *b,
                "E-HOMOLOGY",
                format!("H_{k} is {a} on the source and {c} on the target"),
            ));
        }
    }
    let rel = relative_homology(f, b.max_dim)?;
    if let Some((k, g)) = rel.iter().enumerate().find(|(_, g)| !g.is_zero()) {
        return Ok(Verdict::no(
            *b,
            "E-RELATIVE",
            format!("relative H_{k} = {g}"),
        ));
    }
    let sx = simply_connected(x, &px, b);
    let sy = simply_connected(y, &py, b);
    if sx.iter().chain(&sy).all(Verdict::is_yes) {
        return Ok(Verdict::yes(
            *b,
            "E-WHITEHEAD",
            "simply connected components and vanishing relative homology",
        ));
    }
    Ok(Verdict::unknown(
        *b,
        "homology isomorphism without certified simple connectivity",
    ))
}

/// Is `tau_n(f)` an equivalence?
pub fn tau_equivalence(f: &SimplicialMap, n: TruncLevel, b: &Budgets) -> Result<Verdict> {
    let (x, y) = (f.source(), f.target());
    match n.value() {
        -2 => {
            return Ok(Verdict::yes(
                *b,
                "TAU-BOTTOM",
                "tau_{-2} of any map is an equivalence",
            ))
        }
        -1 => {
            return Ok(if x.is_empty() == y.is_empty() {
                Verdict::yes(
                    *b,
                    "TAU-PROP",
                    "source and target are both empty or both inhabited",
                )
            } else {
                Verdict::no(*b, "TAU-PROP", "exactly one of source and target is empty")
            })
        }
        0 => {
            let (px, py) = (pi0(x), pi0(y));
            let (s, i) = pi0_status(&pi0_map(f, &px, &py), py.count);
            return Ok(if s && i {
                Verdict::yes(*b, "TAU-PI0", "bijective on components")
            } else {
                Verdict::no(*b, "TAU-PI0", "not bijective on components")
            });
        }
        _ => {}
    }
    // tau_n(f) with a contractible end is an equivalence exactly when the other end is n-connected.
    for (end, other, which) in [(y, x, "target"), (x, y, "source")] {
        let c = contractible(end, b);
        if c.is_yes() {
            let v = conn_object(other, n, b);
            let rule = "TAU-CONTRACTIBLE-END";
            let detail = format!("{which} contractible, so tau_{n} f is an equivalence iff the other end is {n}-connected");
            return Ok(match v.tag {
                Tag::Yes => Verdict::yes(*b, rule, detail).citing(&c).citing(&v),
                Tag::No => Verdict::no(*b, rule, detail).citing(&c).citing(&v),
                Tag::Unknown => Verdict::unknown(*b, detail).citing(&v),
            });
        }
    }
    let up = conn_map(f, n, b)?;
    if up.is_yes() {
        return Ok(Verdict::yes(
            *b,
            "TAU-CONN",
            format!("{n}-connected maps invert under tau_{n}"),
        )
        .citing(&up));
    }
    let down = conn_map(f, n.pred(), b)?;
    if down.is_no() {
        return Ok(Verdict::no(
            *b,
            "TAU-HALF-STEP",
            format!("tau_{n} equivalences are {}-connected", n.pred()),
        )
        .citing(&down));
    }
    Ok(Verdict::unknown(
        *b,
        format!(
            "neither {n}-connectivity nor failure of {}-connectivity is certified",
            n.pred()
        ),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{product, CatalogSpec, SimplicialSet};

    fn cat(s: &str) -> SimplicialSet {
        s.parse::<CatalogSpec>().unwrap().build()
    }

    fn lv(n: i64) -> TruncLevel {
        TruncLevel::new(n).unwrap()
    }

    fn inclusion(x: &SimplicialSet, y: &SimplicialSet) -> SimplicialMap {
        let images = (0..x.counts().len())
            .map(|d| x.generators(d).map(Simplex::nondegenerate).collect())
            .collect();
        SimplicialMap::new(x.clone(), y.clone(), images).unwrap()
    }

    #[test]
    fn boundary_inclusion() {
        let b = Budgets::default();
        let f = inclusion(&cat("boundary:2"), &cat("delta:2"));
        assert_eq!(conn_map(&f, lv(0), &b).unwrap().tag, Tag::Yes);
        assert_eq!(conn_map(&f, lv(1), &b).unwrap().tag, Tag::No);
        assert_eq!(equivalence(&f, &b).unwrap().tag, Tag::No);
        assert_eq!(tau_equivalence(&f, lv(0), &b).unwrap().tag, Tag::Yes);
        assert_eq!(tau_equivalence(&f, lv(1), &b).unwrap().tag, Tag::No);
    }

    #[test]
    fn sphere_into_disk_is_one_connected_only() {
        // S^2 -> D^3 has fiber S^2: 1-connected, not 2-connected.
        let b = Budgets::default();
        let f = inclusion(&cat("boundary:3"), &cat("delta:3"));
        assert_eq!(conn_map(&f, lv(1), &b).unwrap().tag, Tag::Yes);
        assert_eq!(conn_map(&f, lv(2), &b).unwrap().tag, Tag::No);
    }

    #[test]
    fn identities_and_points() {
        let b = Budgets::default();
        let id = SimplicialMap::identity(&cat("sphere:2"));
        for n in -2..8 {
            assert_eq!(conn_map(&id, lv(n), &b).unwrap().tag, Tag::Yes);
        }
        let pt = cat("point");
        let f = SimplicialMap::to_point(&cat("sphere:2"), &pt).unwrap();
        assert_eq!(conn_map(&f, lv(1), &b).unwrap().tag, Tag::Yes);
        assert_eq!(conn_map(&f, lv(2), &b).unwrap().tag, Tag::No);
        assert_eq!(tau_equivalence(&f, lv(1), &b).unwrap().tag, Tag::Yes);
        assert_eq!(tau_equivalence(&f, lv(2), &b).unwrap().tag, Tag::No);
        let g = SimplicialMap::to_point(&cat("delta:3"), &pt).unwrap();
        assert_eq!(equivalence(&g, &b).unwrap().tag, Tag::Yes);
    }

    #[test]
    fn circle_onto_circle_by_generator_search() {
        // The projection S^1 x I -> S^1 needs the preimage search: S^1 is not simply connected.
        let b = Budgets::default();
        let s1 = cat("sphere:1");
        let p = product(&s1, &cat("delta:1"), 8).unwrap();
        let v = conn_map(&p.pr1, lv(0), &b).unwrap();
        assert_eq!(v.tag, Tag::Yes, "{v:?}");
        assert_ne!(equivalence(&p.pr1, &b).unwrap().tag, Tag::No);
    }

    #[test]
    fn missing_component() {
        let b = Budgets::default();
        let f = inclusion(&cat("point"), &cat("discrete:2"));
        assert_eq!(conn_map(&f, lv(-1), &b).unwrap().tag, Tag::No);
        assert_eq!(conn_map(&f, lv(-2), &b).unwrap().tag, Tag::Yes);
    }
}
