use super::chain::AbelianGroup;
use super::sparse::SparseMatrix;
use alloc::vec::Vec;

/// A word over generators: letter `g + 1` stands for generator `g`, `-(g + 1)` for its inverse.
pub type Word = Vec<i32>;

pub fn free_reduce(w: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Free and cyclic reduction.
pub fn cyclic_reduce(w: &[i32]) -> Word {
    let w = free_reduce(w);
    let mut lo = 0;
    let mut hi = w.len();
    while hi - lo >= 2 && w[lo] == -w[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    w[lo..hi].to_vec()
}

pub fn invert(w: &[i32]) -> Word {
    w.iter().rev().map(|l| -l).collect()
}

/// A finite presentation with freely reduced, nonempty relators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: usize,
    pub relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(generators: usize, relators: impl IntoIterator<Item = Word>) -> Self {
        let relators = relators
            .into_iter()
            .map(|r| {
                debug_assert!(r
                    .iter()
                    .all(|&l| l != 0 && l.unsigned_abs() as usize <= generators));
                free_reduce(&r)
            })
            .filter(|r| !r.is_empty())
            .collect();
        GroupPresentation {
            generators,
            relators,
        }
    }

    /// Abelianization from the exponent-sum matrix.
    pub fn abelianization(&self) -> AbelianGroup {
        let mut m = SparseMatrix::new(self.generators);
        for r in &self.relators {
            m.push_column(
                r.iter()
                    .map(|&l| (l.unsigned_abs() as usize - 1, l.signum() as i64))
                    .collect(),
            );
        }
        AbelianGroup::cokernel(&m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplified {
    pub presentation: GroupPresentation,
    /// Rewrite steps spent: one per elimination plus one per rewritten relator.
    pub steps: usize,
    pub exhausted: bool,
    /// Eliminations in order: generator letter (numbered at that moment) and its replacement.
    pub eliminations: Vec<(i32, Word)>,
}

impl Simplified {
    /// Maps a word in the original generators to the simplified generators.
    pub fn rewrite(&self, w: &[i32]) -> Word {
        let mut w = free_reduce(w);
        for (g, replacement) in &self.eliminations {
            let inverse = invert(replacement);
            let mut out = Vec::with_capacity(w.len());
            for &l in &w {
                match l {
                    l if l == *g => out.extend_from_slice(replacement),
                    l if l == -*g => out.extend_from_slice(&inverse),
                    l if l.abs() > *g => out.push(l - l.signum()),
                    l => out.push(l),
                }
            }
            w = free_reduce(&out);
        }
        w
    }
}

/// Tietze simplification: repeatedly drop a generator occurring exactly once
/// in some relator, substituting its solution everywhere else.
pub fn tietze(p: &GroupPresentation, budget: usize) -> Simplified {
    let mut gens = p.generators;
    let mut rels: Vec<Word> = p.relators.clone();
    let mut steps = 0usize;
    let mut exhausted = false;
    let mut eliminations = Vec::new();
    loop {
        for r in rels.iter_mut() {
            *r = cyclic_reduce(r);
        }
        rels.retain(|r| !r.is_empty());
        rels.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        rels.dedup();
        let candidate = rels.iter().enumerate().find_map(|(ri, r)| {
            let mut seen: Vec<(i32, usize, usize)> = Vec::new();
            for (pos, &l) in r.iter().enumerate() {
                let g = l.abs();
                match seen.iter_mut().find(|e| e.0 == g) {
                    Some(e) => e.1 += 1,
                    None => seen.push((g, 1, pos)),
                }
            }
            seen.iter()
                .filter(|e| e.1 == 1)
                .min_by_key(|e| e.0)
                .map(|e| (ri, e.0, e.2))
        });
        let Some((ri, g, pos)) = candidate else { break };
        if steps >= budget {
            exhausted = true;
            break;
        }
        let r = rels.remove(ri);
        let mut rot = r[pos..].to_vec();
        rot.extend_from_slice(&r[..pos]);
        let rest = &rot[1..];
        let replacement = if rot[0] > 0 {
            invert(rest)
        } else {
            rest.to_vec()
        };
        let inverse = invert(&replacement);
        // Stored already renumbered, so `rewrite` can substitute and shift in one pass.
        let shifted: Word = replacement
            .iter()
            .map(|&l| if l.abs() > g { l - l.signum() } else { l })
            .collect();
        eliminations.push((g, shifted));
        for rel in rels.iter_mut() {
            if !rel.iter().any(|l| l.abs() == g) {
                continue;
            }
            let mut w = Vec::with_capacity(rel.len() + replacement.len());
            for &l in rel.iter() {
                match l {
                    l if l == g => w.extend_from_slice(&replacement),
                    l if l == -g => w.extend_from_slice(&inverse),
                    l => w.push(l),
                }
            }
            *rel = free_reduce(&w);
            steps += 1;
        }
        steps += 1;
        for rel in rels.iter_mut() {
            for l in rel.iter_mut() {
                if l.abs() > g {
                    *l -= l.signum();
                }
            }
        }
        gens -= 1;
    }
    Simplified {
        presentation: GroupPresentation {
            generators: gens,
            relators: rels,
        },
        steps,
        exhausted,
        eliminations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn reductions() {
        assert_eq!(free_reduce(&[1, 2, -2, -1, 3]), vec![3]);
        assert_eq!(cyclic_reduce(&[-1, 2, 3, 1]), vec![2, 3]);
        assert_eq!(invert(&[1, -2]), vec![2, -1]);
    }

    #[test]
    fn eliminations() {
        // <a, b | ab, b> is trivial.
        let p = GroupPresentation::new(2, vec![vec![1, 2], vec![2]]);
        let s = tietze(&p, 100);
        assert_eq!(s.presentation.generators, 0);
        assert!(!s.exhausted);
        assert_eq!(s.rewrite(&[1, 2, 1]), Vec::<i32>::new());
        // <a, b, c | ab = c> eliminates a = cb^-1; b, c become generators 1, 2.
        let p = GroupPresentation::new(3, vec![vec![1, 2, -3]]);
        let s = tietze(&p, 100);
        assert_eq!(s.presentation.generators, 2);
        assert_eq!(s.rewrite(&[1]), vec![2, -1]);
        assert_eq!(s.rewrite(&[1, 2]), vec![2]);
        // <a, b | aba^-1b^-1> keeps both generators.
        let t = GroupPresentation::new(2, vec![vec![1, 2, -1, -2]]);
        assert_eq!(tietze(&t, 100).presentation.generators, 2);
        // <a | a^2> survives with one generator.
        let z2 = GroupPresentation::new(1, vec![vec![1, 1]]);
        let s = tietze(&z2, 100);
        assert_eq!(s.presentation, z2);
        assert_eq!(
            z2.abelianization().torsion,
            vec![num_bigint::BigInt::from(2)]
        );
    }

    #[test]
    fn budget_stops_early() {
        let p = GroupPresentation::new(3, vec![vec![1], vec![2], vec![3]]);
        let s = tietze(&p, 1);
        assert!(s.exhausted);
        assert_eq!(s.presentation.generators, 2);
    }
}
