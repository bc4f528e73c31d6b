use super::{components, Budgets, Verdict};
use crate::invariants::{homology, homology_upto, pi0, pi1, reduce, AbelianGroup};
use crate::simplicial::SimplicialSet;
use crate::TruncLevel;
use alloc::format;
use alloc::string::String;

fn first_nonzero(h: &[AbelianGroup], from: usize) -> Option<(usize, &AbelianGroup)> {
    h.iter().enumerate().skip(from).find(|(_, g)| !g.is_zero())
}

/// Is `x` n-connected?
pub fn conn_object(x: &SimplicialSet, n: TruncLevel, b: &Budgets) -> Verdict {
    let n = n.value();
    if n == -2 {
        return Verdict::yes(*b, "C-BOTTOM", "every object is (-2)-connected");
    }
    if x.is_empty() {
        return Verdict::no(*b, "C-EMPTY", "the empty set is not (-1)-connected");
    }
    if n == -1 {
        return Verdict::yes(*b, "C-NONEMPTY", format!("{} vertices", x.count(0)));
    }
    let comps = pi0(x);
    if comps.count != 1 {
        return Verdict::no(*b, "C-PI0", format!("{} path components", comps.count));
    }
    if n == 0 {
        return Verdict::yes(*b, "C-PI0", "one path component");
    }
    let n = n as usize;
    // n-connected spaces have vanishing reduced homology through degree n, whatever pi_1 is.
    let h = reduce(homology_upto(x, n));
    if let Some((k, g)) = first_nonzero(&h, 1) {
        return Verdict::no(
            *b,
            "C-HOMOLOGY",
            format!("reduced H_{k} = {g} with {k} <= {n}"),
        );
    }
    let p = pi1(x, 0, b).expect("nonempty");
    match p.triviality.tag {
        crate::Tag::Yes => Verdict::yes(
            *b,
            "C-HUREWICZ",
            format!("reduced H_k = 0 for 1 <= k <= {n}"),
        )
        .citing(&p.triviality),
        crate::Tag::No => {
            Verdict::no(*b, "C-PI1", "fundamental group is nontrivial").citing(&p.triviality)
        }
        crate::Tag::Unknown => Verdict::unknown(
            *b,
            format!(
                "reduced homology vanishes through degree {n} but pi_1 triviality is not certified"
            ),
        )
        .citing(&p.triviality),
    }
}

/// Is `x` contractible? Whitehead: simply connected with vanishing reduced homology.
pub fn contractible(x: &SimplicialSet, b: &Budgets) -> Verdict {
    if x.is_empty() {
        return Verdict::no(*b, "T-EMPTY", "the empty set is not contractible");
    }
    let comps = pi0(x);
    if comps.count != 1 {
        return Verdict::no(*b, "T-PI0", format!("{} path components", comps.count));
    }
    let h = reduce(homology(x));
    if let Some((k, g)) = first_nonzero(&h, 0) {
        return Verdict::no(*b, "T-HOMOLOGY", format!("reduced H_{k} = {g}"));
    }
    let p = pi1(x, 0, b).expect("nonempty");
    match p.triviality.tag {
        crate::Tag::Yes => {
            Verdict::yes(*b, "T-WHITEHEAD", "simply connected and acyclic").citing(&p.triviality)
        }
        crate::Tag::No => {
            Verdict::no(*b, "T-PI1", "fundamental group is nontrivial").citing(&p.triviality)
        }
        crate::Tag::Unknown => Verdict::unknown(*b, "acyclic but pi_1 triviality is not certified")
            .citing(&p.triviality),
    }
}

/// A component that is certified simply connected with a nonzero homology
/// group in degree at least 2: `Some((component, degree, group))` for the first such degree.
fn hurewicz_witness(
    x: &SimplicialSet,
    b: &Budgets,
) -> (Option<(usize, usize, AbelianGroup)>, bool) {
    let (_, parts) = components(x);
    let mut all_certified = true;
    for (c, part) in parts.iter().enumerate() {
        let p = pi1(part, 0, b).expect("nonempty component");
        if !p.triviality.is_yes() {
            all_certified = false;
            continue;
        }
        if let Some((k, g)) = first_nonzero(&homology(part), 2) {
            return (Some((c, k, g.clone())), all_certified);
        }
    }
    (None, all_certified)
}

/// Is `x` n-truncated?
pub fn truncated_object(x: &SimplicialSet, n: TruncLevel, b: &Budgets) -> Verdict {
    match n.value() {
        -2 => contractible(x, b),
        -1 => {
            if x.is_empty() {
                return Verdict::yes(*b, "T-EMPTY-PROP", "the empty set is (-1)-truncated");
            }
            let c = contractible(x, b);
            let why: String = "nonempty, so (-1)-truncated exactly when contractible".into();
            match c.tag {
                crate::Tag::Yes => Verdict::yes(*b, "T-PROP", why).citing(&c),
                crate::Tag::No => Verdict::no(*b, "T-PROP", why).citing(&c),
                crate::Tag::Unknown => Verdict::unknown(*b, why).citing(&c),
            }
        }
        0 => {
            let (_, parts) = components(x);
            let mut unknown = None;
            for (i, part) in parts.iter().enumerate() {
                let c = contractible(part, b);
                match c.tag {
                    crate::Tag::No => {
                        return Verdict::no(
                            *b,
                            "T-SET",
                            format!("component {i} is not contractible"),
                        )
                        .citing(&c)
                    }
                    crate::Tag::Unknown => unknown = Some((i, c)),
                    crate::Tag::Yes => {}
                }
            }
            match unknown {
                None => Verdict::yes(
                    *b,
                    "T-SET",
                    format!("all {} components contractible", parts.len()),
                ),
                Some((i, c)) => {
                    Verdict::unknown(*b, format!("contractibility of component {i} unknown"))
                        .citing(&c)
                }
            }
        }
        n => {
            if x.dim() <= 1 {
                return Verdict::yes(
                    *b,
                    "D-ASPH1",
                    format!("dimension {} <= 1, graphs are aspherical", x.dim()),
                );
            }
            let (witness, _) = hurewicz_witness(x, b);
            if let Some((c, k, g)) = witness {
                // pi_k = H_k for the first nonzero degree of a simply connected component.
                if k as i64 > n {
                    return Verdict::no(
                        *b,
                        "T-HUREWICZ",
                        format!("component {c} is simply connected with pi_{k} = H_{k} = {g}, {k} > {n}"),
                    );
                }
            }
            let lower = truncated_object(x, TruncLevel::new(0).expect("level"), b);
            if lower.is_yes() {
                return Verdict::yes(*b, "T-LIFT", format!("0-truncated implies {n}-truncated"))
                    .citing(&lower);
            }
            Verdict::unknown(
                *b,
                format!(
                    "no rule decides {n}-truncatedness of a {}-dimensional complex",
                    x.dim()
                ),
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{product, CatalogSpec};
    use crate::Tag;

    fn cat(s: &str) -> SimplicialSet {
        s.parse::<CatalogSpec>().unwrap().build()
    }

    fn lv(n: i64) -> TruncLevel {
        TruncLevel::new(n).unwrap()
    }

    fn conn(s: &str, n: i64) -> Tag {
        conn_object(&cat(s), lv(n), &Budgets::default()).tag
    }

    fn trunc(s: &str, n: i64) -> Tag {
        truncated_object(&cat(s), lv(n), &Budgets::default()).tag
    }

    #[test]
    fn connectivity_rules() {
        assert_eq!(conn("empty", -1), Tag::No);
        assert_eq!(conn("empty", -2), Tag::Yes);
        assert_eq!(conn("sphere:2", 1), Tag::Yes);
        assert_eq!(conn("sphere:2", 2), Tag::No);
        assert_eq!(conn("sphere:0", 0), Tag::No);
        assert_eq!(conn("wedge:2", 1), Tag::No);
        assert_eq!(conn("delta:4", 6), Tag::Yes);
        assert_eq!(conn("msphere:5", 4), Tag::Yes);
        assert_eq!(conn("msphere:5", 5), Tag::No);
    }

    #[test]
    fn truncation_rules() {
        assert_eq!(trunc("delta:3", -2), Tag::Yes);
        assert_eq!(trunc("sphere:1", 1), Tag::Yes);
        assert_eq!(trunc("sphere:2", 1), Tag::No);
        assert_eq!(trunc("empty", -1), Tag::Yes);
        assert_eq!(trunc("empty", -2), Tag::No);
        assert_eq!(trunc("discrete:3", 0), Tag::Yes);
        assert_eq!(trunc("discrete:3", -1), Tag::No);
        assert_eq!(trunc("sphere:1", 0), Tag::No);
        assert_eq!(trunc("sphere:3", 2), Tag::No);
        assert_eq!(trunc("sphere:2", 2), Tag::Unknown);
        assert_eq!(trunc("delta:3", 5), Tag::Yes);
    }

    #[test]
    fn evidence_is_present() {
        let v = conn_object(&cat("sphere:2"), lv(1), &Budgets::default());
        assert!(v.evidence.iter().any(|e| e.rule == "C-HUREWICZ"));
        assert!(v.evidence.iter().any(|e| e.rule == "P1-TIETZE"));
        let u = truncated_object(&cat("sphere:2"), lv(3), &Budgets::default());
        assert!(u.reason.is_some() && u.evidence.is_empty());
    }

    #[test]
    fn torus_is_not_overclaimed() {
        let s1 = cat("sphere:1");
        let t = product(&s1, &s1, 8).unwrap().object;
        let b = Budgets::default();
        assert_eq!(conn_object(&t, lv(0), &b).tag, Tag::Yes);
        assert_eq!(conn_object(&t, lv(1), &b).tag, Tag::No);
        assert_ne!(truncated_object(&t, lv(1), &b).tag, Tag::No);
        assert_eq!(truncated_object(&t, lv(0), &b).tag, Tag::No);
    }
}
