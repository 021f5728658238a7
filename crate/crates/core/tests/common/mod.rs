//! Brute-force oracles over explicit multiplication tables. Elements are
//! indexed by their stabilizer-chain rank, so library subgroups convert to
//! index sets directly.
#![allow(dead_code)]

use cn_groups::group::prime_divisors;
use cn_groups::{Bounds, PermGroup, Permutation};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Set(Vec<u64>);

impl Set {
    pub fn empty(n: usize) -> Self {
        Set(vec![0; n.div_ceil(64)])
    }

    pub fn insert(&mut self, i: usize) -> bool {
        let (w, b) = (i / 64, 1u64 << (i % 64));
        let fresh = self.0[w] & b == 0;
        self.0[w] |= b;
        fresh
    }

    pub fn has(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &Set) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    pub fn intersect(&self, other: &Set) -> Set {
        Set(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &bits)| {
            (0..64).filter(move |b| bits >> b & 1 == 1).map(move |b| w * 64 + b)
        })
    }
}

pub struct Table {
    pub n: usize,
    pub elements: Vec<Permutation>,
    mul: Vec<u32>,
    pub inv: Vec<u32>,
    pub order: Vec<u64>,
}

impl Table {
    pub fn new(g: &PermGroup) -> Self {
        let n = g.order() as usize;
        let elements: Vec<Permutation> = (0..n as u64).map(|r| g.unrank(r)).collect();
        let mut mul = vec![0u32; n * n];
        for (i, x) in elements.iter().enumerate() {
            for (j, y) in elements.iter().enumerate() {
                mul[i * n + j] = g.rank(&x.then(y)).expect("closed") as u32;
            }
        }
        let inv = elements.iter().map(|x| g.rank(&x.inverse()).unwrap() as u32).collect();
        let order = elements.iter().map(|x| x.order()).collect();
        Table {
            n,
            elements,
            mul,
            inv,
            order,
        }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    /// `b⁻¹ a b`.
    pub fn conj(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv[b] as usize, a), b)
    }

    pub fn identity(&self) -> usize {
        (0..self.n).find(|&i| self.order[i] == 1).unwrap()
    }

    /// Subgroup generated by a set, by repeated right multiplication.
    pub fn closure(&self, seeds: impl IntoIterator<Item = usize>) -> Set {
        let gens: Vec<usize> = seeds.into_iter().collect();
        let mut s = Set::empty(self.n);
        let e = self.identity();
        s.insert(e);
        let mut queue = vec![e];
        while let Some(x) = queue.pop() {
            for &g in &gens {
                let y = self.mul(x, g);
                if s.insert(y) {
                    queue.push(y);
                }
            }
        }
        s
    }

    pub fn of(&self, g: &PermGroup, h: &PermGroup) -> Set {
        let mut s = Set::empty(self.n);
        for x in h.elements(&Bounds::default()).unwrap() {
            s.insert(g.rank(&x).expect("subgroup") as usize);
        }
        s
    }

    pub fn classes(&self) -> Vec<Set> {
        let mut seen = Set::empty(self.n);
        let mut out = Vec::new();
        for x in 0..self.n {
            if seen.has(x) {
                continue;
            }
            let mut c = Set::empty(self.n);
            for g in 0..self.n {
                let y = self.conj(x, g);
                c.insert(y);
                seen.insert(y);
            }
            out.push(c);
        }
        out
    }

    /// Every normal subgroup, each exactly once, by a depth-first search
    /// over include/exclude decisions on conjugacy classes, closing under
    /// multiplication at each inclusion.
    pub fn normal_subgroups(&self) -> Vec<Set> {
        let classes = self.classes();
        let start = self.closure([]);
        let mut out = Vec::new();
        self.scan(&classes, 0, start, &mut out);
        out.sort();
        out
    }

    fn scan(&self, classes: &[Set], i: usize, s: Set, out: &mut Vec<Set>) {
        if i == classes.len() {
            out.push(s);
            return;
        }
        if classes[i].is_subset(&s) {
            self.scan(classes, i + 1, s, out);
            return;
        }
        let grown = self.closure(s.iter().chain(classes[i].iter()).collect::<Vec<_>>());
        let consistent = classes[..i]
            .iter()
            .all(|c| c.is_subset(&s) || !c.is_subset(&grown));
        self.scan(classes, i + 1, s, out);
        if consistent {
            self.scan(classes, i + 1, grown, out);
        }
    }

    /// Unique Sylow subgroup for every prime.
    pub fn is_nilpotent(&self, s: &Set) -> bool {
        let n = s.len() as u128;
        prime_divisors(n).into_iter().all(|p| {
            let mut part = 1u128;
            while n % (part * p as u128) == 0 {
                part *= p as u128;
            }
            let p_elements = s.iter().filter(|&x| is_power_of(self.order[x], p)).count();
            p_elements as u128 == part
        })
    }

    pub fn is_p_group(&self, s: &Set, p: u64) -> bool {
        is_power_of(s.len() as u64, p)
    }

    /// Every subgroup, as joins of cyclic subgroups.
    pub fn subgroups(&self) -> Vec<Set> {
        let mut cyclic: Vec<Set> = (0..self.n).map(|x| self.closure([x])).collect();
        cyclic.sort();
        cyclic.dedup();
        let mut all = std::collections::BTreeSet::new();
        let mut frontier: Vec<Set> = cyclic.clone();
        all.extend(cyclic.iter().cloned());
        while let Some(h) = frontier.pop() {
            for c in &cyclic {
                if c.is_subset(&h) {
                    continue;
                }
                let j = self.closure(h.iter().chain(c.iter()).collect::<Vec<_>>());
                if all.insert(j.clone()) {
                    frontier.push(j);
                }
            }
        }
        all.into_iter().collect()
    }

    pub fn normalizes(&self, b: &Set, q: &Set) -> bool {
        b.iter().all(|x| q.iter().all(|y| q.has(self.conj(y, x))))
    }

    pub fn commute(&self, a: &Set, b: &Set) -> bool {
        a.iter().all(|x| b.iter().all(|y| self.mul(x, y) == self.mul(y, x)))
    }
}

pub fn is_power_of(mut n: u64, p: u64) -> bool {
    while n > 1 && n % p == 0 {
        n /= p;
    }
    n == 1
}

/// The literal search: a noncyclic `B` of order `p²` normalizing a
/// `p'`-subgroup `Q` with `[Q, B] ≠ 1`.
pub fn literal_eleme_violation(t: &Table) -> bool {
    let subs = t.subgroups();
    for b in &subs {
        let n = b.len() as u64;
        let Some(&p) = prime_divisors(n as u128).first() else {
            continue;
        };
        if n != p * p || b.iter().any(|x| t.order[x] == n) {
            continue;
        }
        for q in &subs {
            if q.len() as u64 % p != 0 && t.normalizes(b, q) && !t.commute(b, q) {
                return true;
            }
        }
    }
    false
}

/// Small catalog groups as (name, group).
pub fn catalog_groups(max_order: u128) -> Vec<(String, PermGroup)> {
    let b = Bounds::default();
    cn_groups::catalog::builtin(&b)
        .unwrap()
        .into_iter()
        .map(|s| (s.name.clone(), cn_groups::spec::build(&s, &b).unwrap()))
        .filter(|(_, g)| g.order() <= max_order)
        .collect()
}
