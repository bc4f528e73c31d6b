use crate::error::{Error, Result};
use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

/// A finite group given by its multiplication table; element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Group {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
}

impl Group {
    pub fn trivial() -> Self {
        Group {
            order: 1,
            mul: vec![0],
            inv: vec![0],
        }
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group of order 0");
        let mul = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        let inv = (0..n).map(|a| (n - a) % n).collect();
        Group { order: n, mul, inv }
    }

    /// Validates identity, associativity and inverses of a Cayley table.
    pub fn from_table(table: &[Vec<usize>]) -> Result<Self> {
        let n = table.len();
        let bad = |why: &str| Error::InvalidGroupoid(format!("group table: {why}"));
        if n == 0
            || table
                .iter()
                .any(|r| r.len() != n || r.iter().any(|&x| x >= n))
        {
            return Err(bad("not a square table over its elements"));
        }
        if (0..n).any(|a| table[0][a] != a || table[a][0] != a) {
            return Err(bad("element 0 is not the identity"));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(bad("multiplication is not associative"));
                    }
                }
            }
        }
        let mut inv = vec![0; n];
        for (a, slot) in inv.iter_mut().enumerate() {
            *slot = (0..n)
                .find(|&b| table[a][b] == 0 && table[b][a] == 0)
                .ok_or_else(|| bad("missing inverse"))?;
        }
        Ok(Group {
            order: n,
            mul: table.concat(),
            inv,
        })
    }

    /// From a closed multiplication; the caller guarantees the group axioms.
    pub(crate) fn from_fn(order: usize, mul: impl Fn(usize, usize) -> usize) -> Self {
        let mul: Vec<usize> = (0..order * order)
            .map(|k| mul(k / order, k % order))
            .collect();
        let inv = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| mul[a * order + b] == 0)
                    .expect("inverse")
            })
            .collect();
        Group { order, mul, inv }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    /// `(a, b)` is numbered `a * |other| + b`.
    pub fn direct_product(&self, other: &Group) -> Group {
        let m = other.order;
        Group::from_fn(self.order * m, |x, y| {
            self.mul(x / m, y / m) * m + other.mul(x % m, y % m)
        })
    }

    /// Greedy generating set: each generator lies outside the span of the previous ones.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![false; self.order];
        span[0] = true;
        for a in 1..self.order {
            if !span[a] {
                gens.push(a);
                span = self.closure(&gens);
            }
        }
        gens
    }

    fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(a) = queue.pop_front() {
            for &g in gens {
                let b = self.mul(a, g);
                if !seen[b] {
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }
        seen
    }

    pub fn is_hom(&self, target: &Group, phi: &[usize]) -> bool {
        phi.len() == self.order
            && (0..self.order)
                .all(|a| (0..self.order).all(|b| phi[self.mul(a, b)] == target.mul(phi[a], phi[b])))
    }

    /// All homomorphisms to `target`, as element maps.
    pub fn homs_to(&self, target: &Group) -> Vec<Vec<usize>> {
        let gens = self.generators();
        // Spanning tree of the Cayley graph: element = parent * generator.
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; self.order];
        let mut order_seen = vec![0];
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut i = 0;
        while i < order_seen.len() {
            let a = order_seen[i];
            for (gi, &g) in gens.iter().enumerate() {
                let b = self.mul(a, g);
                if !seen[b] {
                    seen[b] = true;
                    parent[b] = Some((a, gi));
                    order_seen.push(b);
                }
            }
            i += 1;
        }
        let mut out = Vec::new();
        let k = gens.len();
        let total = target.order.pow(k as u32);
        for code in 0..total {
            let mut images = Vec::with_capacity(k);
            let mut c = code;
            for _ in 0..k {
                images.push(c % target.order);
                c /= target.order;
            }
            let mut phi = vec![0; self.order];
            for &b in &order_seen[1..] {
                let (a, gi) = parent[b].expect("tree");
                phi[b] = target.mul(phi[a], images[gi]);
            }
            if self.is_hom(target, &phi) {
                out.push(phi);
            }
        }
        out
    }

    pub fn is_isomorphic(&self, other: &Group) -> bool {
        self.order == other.order
            && self.homs_to(other).iter().any(|phi| {
                let mut hit = vec![false; other.order];
                phi.iter().for_each(|&x| hit[x] = true);
                hit.iter().all(|&h| h)
            })
    }

    /// The subgroup on `elements` (which must be closed and contain 0), renumbered
    /// in the given order, which must start with 0.
    pub(crate) fn subgroup(&self, elements: &[usize]) -> Group {
        debug_assert_eq!(elements.first(), Some(&0));
        let pos = |x: usize| {
            elements
                .iter()
                .position(|&e| e == x)
                .expect("closed subset")
        };
        Group::from_fn(elements.len(), |a, b| {
            pos(self.mul(elements[a], elements[b]))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_groups() {
        let z3 = Group::cyclic(3);
        assert_eq!(z3.mul(2, 2), 1);
        assert_eq!(z3.inv(1), 2);
        assert_eq!(Group::from_table(&z3.table()).unwrap(), z3);
        assert_eq!(z3.homs_to(&Group::cyclic(2)).len(), 1);
        assert_eq!(z3.homs_to(&z3).len(), 3);
        assert_eq!(Group::cyclic(2).homs_to(&Group::cyclic(2)).len(), 2);
    }

    #[test]
    fn products_and_isomorphism() {
        let z6 = Group::cyclic(2).direct_product(&Group::cyclic(3));
        assert!(z6.is_isomorphic(&Group::cyclic(6)));
        let v4 = Group::cyclic(2).direct_product(&Group::cyclic(2));
        assert!(!v4.is_isomorphic(&Group::cyclic(4)));
        assert_eq!(v4.generators().len(), 2);
        assert_eq!(v4.homs_to(&v4).len(), 16);
    }

    #[test]
    fn bad_tables() {
        assert!(Group::from_table(&[vec![0, 1], vec![1, 1]]).is_err());
        assert!(Group::from_table(&[vec![1, 0], vec![0, 1]]).is_err());
        assert!(Group::from_table(&[]).is_err());
    }
}
