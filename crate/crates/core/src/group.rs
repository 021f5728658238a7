//! Permutation groups given by generators, backed by a stabilizer chain.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::chain::StabChain;
use crate::perm::Permutation;
use crate::{Bounds, GroupError, Result};

#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: Arc<OnceLock<StabChain>>,
    classes: Arc<OnceLock<Vec<ConjugacyClass>>>,
    /// Cached CN verdict: `None` for CN, else a witness.
    cn: Arc<OnceLock<Option<Permutation>>>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field(
                "generators",
                &self.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            )
            .finish()
    }
}

/// A conjugacy class, represented by its least element in rank order.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub representative: Permutation,
    pub size: u64,
    pub element_order: u64,
}

impl PermGroup {
    /// `⟨perms⟩` on `degree` points. Identity generators and repeats are dropped.
    pub fn closure(degree: usize, perms: &[Permutation]) -> Result<Self> {
        for p in perms {
            if p.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: p.degree(),
                });
            }
        }
        Ok(Self::from_generators_unchecked(degree, perms.to_vec()))
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_generators_unchecked(degree, Vec::new())
    }

    pub(crate) fn from_generators_unchecked(degree: usize, perms: Vec<Permutation>) -> Self {
        let mut generators: Vec<Permutation> = Vec::new();
        for p in perms {
            if !p.is_identity() && !generators.contains(&p) {
                generators.push(p);
            }
        }
        PermGroup {
            degree,
            generators,
            chain: Arc::new(OnceLock::new()),
            classes: Arc::new(OnceLock::new()),
            cn: Arc::new(OnceLock::new()),
        }
    }

    /// Like [`PermGroup::closure`], with the chain built on the given base prefix.
    pub fn with_base(degree: usize, perms: &[Permutation], base: &[usize]) -> Self {
        let g = Self::from_generators_unchecked(degree, perms.to_vec());
        let chain = StabChain::build(degree, &g.generators, base);
        let _ = g.chain.set(chain);
        g
    }

    /// Subgroup generated by `perms`, sharing this group's base so that
    /// element ranks and coset representatives can be computed compatibly.
    pub fn subgroup(&self, perms: &[Permutation]) -> PermGroup {
        Self::with_base(self.degree, perms, &self.chain().base())
    }

    pub(crate) fn from_chain(degree: usize, chain: StabChain) -> Self {
        let g = Self::from_generators_unchecked(degree, chain.strong_generators().to_vec());
        let _ = g.chain.set(chain);
        g
    }

    pub(crate) fn cn_cache(&self) -> &OnceLock<Option<Permutation>> {
        &self.cn
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::build(self.degree, &self.generators, &[]))
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(GroupError::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        Ok(self.chain().contains(p))
    }

    /// Membership for permutations already known to have the right degree.
    pub fn has(&self, p: &Permutation) -> bool {
        self.chain().contains(p)
    }

    /// Whether every generator of `other` lies in `self`.
    pub fn contains_group(&self, other: &PermGroup) -> bool {
        other.generators.iter().all(|g| self.has(g))
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.degree == other.degree
            && self.order() == other.order()
            && self.contains_group(other)
    }

    pub fn rank(&self, p: &Permutation) -> Option<u64> {
        self.chain().rank(p)
    }

    pub fn unrank(&self, r: u64) -> Permutation {
        self.chain().unrank(r)
    }

    /// Every element, each exactly once, in rank order.
    pub fn elements(&self, bounds: &Bounds) -> Result<Elements<'_>> {
        bounds.check_order(self.order())?;
        Ok(Elements {
            chain: self.chain(),
            next: 0,
            end: self.order() as u64,
        })
    }

    pub fn element_list(&self, bounds: &Bounds) -> Result<Vec<Permutation>> {
        Ok(self.elements(bounds)?.collect())
    }

    /// Conjugacy classes ordered by the rank of their representatives.
    pub fn conjugacy_classes(&self, bounds: &Bounds) -> Result<Vec<ConjugacyClass>> {
        bounds.check_order(self.order())?;
        if let Some(c) = self.classes.get() {
            return Ok(c.clone());
        }
        let classes = self.compute_classes();
        Ok(self.classes.get_or_init(|| classes).clone())
    }

    fn compute_classes(&self) -> Vec<ConjugacyClass> {
        let order = self.order();
        let n = order as u64;
        let chain = self.chain();
        let mut visited = vec![false; n as usize];
        let mut classes = Vec::new();
        let mut scratch = vec![0u32; chain.levels().len()];
        let base = chain.base();
        let gens_inv: Vec<Permutation> = self.generators.iter().map(|g| g.inverse()).collect();
        for r in 0..n {
            if visited[r as usize] {
                continue;
            }
            visited[r as usize] = true;
            let rep = chain.unrank(r);
            let mut queue = vec![r];
            let mut head = 0;
            while head < queue.len() {
                let x = chain.unrank(queue[head]);
                head += 1;
                for (g, gi) in self.generators.iter().zip(&gens_inv) {
                    // base images of g⁻¹ x g
                    for (slot, &b) in scratch.iter_mut().zip(&base) {
                        *slot = g.images()[x.apply(gi.apply(b))] as u32;
                    }
                    let y = chain
                        .rank_of_base_image(&mut scratch)
                        .expect("conjugate stays in the group");
                    if !visited[y as usize] {
                        visited[y as usize] = true;
                        queue.push(y);
                    }
                }
            }
            classes.push(ConjugacyClass {
                element_order: rep.order(),
                representative: rep,
                size: queue.len() as u64,
            });
        }
        classes
    }

    pub fn conjugacy_class_representatives(&self, bounds: &Bounds) -> Result<Vec<Permutation>> {
        Ok(self
            .conjugacy_classes(bounds)?
            .into_iter()
            .map(|c| c.representative)
            .collect())
    }

    /// Stabilizer of `x` under conjugation by `self`, computed from the
    /// Schreier tree of its conjugation orbit inside `universe`, which must
    /// contain both `self` and `x`.
    pub(crate) fn conjugation_stabilizer(
        &self,
        x: &Permutation,
        universe: &PermGroup,
        bounds: &Bounds,
    ) -> Result<PermGroup> {
        bounds.check_order(universe.order())?;
        let chain = universe.chain();
        if self.is_trivial() {
            return Ok(universe.subgroup(&[]));
        }
        let base = chain.base();
        let mut scratch = vec![0u32; base.len()];
        let gens_inv: Vec<Permutation> = self.generators.iter().map(|g| g.inverse()).collect();
        let root = chain.rank(x).ok_or(GroupError::NotInGroup)?;
        // rank -> (parent rank, generator index)
        let mut tree: HashMap<u64, (u64, usize)> = HashMap::new();
        tree.insert(root, (root, usize::MAX));
        let mut queue = vec![root];
        let mut head = 0;
        while head < queue.len() {
            let y = chain.unrank(queue[head]);
            head += 1;
            for (s, (g, gi)) in self.generators.iter().zip(&gens_inv).enumerate() {
                for (slot, &b) in scratch.iter_mut().zip(&base) {
                    *slot = g.images()[y.apply(gi.apply(b))] as u32;
                }
                let z = chain
                    .rank_of_base_image(&mut scratch)
                    .expect("conjugate stays in the universe");
                tree.entry(z).or_insert_with(|| {
                    queue.push(z);
                    (queue[head - 1], s)
                });
            }
        }
        let target = self.order() / queue.len() as u128;
        let word = |mut r: u64| -> Permutation {
            let mut gens_rev = Vec::new();
            while r != root {
                let (parent, s) = tree[&r];
                gens_rev.push(s);
                r = parent;
            }
            let mut t = Permutation::identity(self.degree);
            for &s in gens_rev.iter().rev() {
                t = t.then(&self.generators[s]);
            }
            t
        };
        let mut stab = StabChain::build(self.degree, &[], &self.chain().base());
        if stab.order() < target {
            'scan: for &r in &queue {
                let t = word(r);
                for (s, g) in self.generators.iter().enumerate() {
                    let child = chain.rank(&x.conjugate_by(&t.then(g))).expect("in universe");
                    if tree[&child] == (r, s) {
                        continue;
                    }
                    let sg = t.then(g).then(&word(child).inverse());
                    stab.extend(&sg);
                    if stab.order() == target {
                        break 'scan;
                    }
                }
            }
        }
        debug_assert_eq!(stab.order(), target);
        Ok(PermGroup::from_chain(self.degree, stab))
    }

    /// `(element order, number of elements of that order)`, ascending.
    pub fn exponent_and_orders(&self, bounds: &Bounds) -> Result<Vec<(u64, u64)>> {
        let mut counts: HashMap<u64, u64> = HashMap::new();
        for c in self.conjugacy_classes(bounds)? {
            *counts.entry(c.element_order).or_default() += c.size;
        }
        let mut v: Vec<_> = counts.into_iter().collect();
        v.sort();
        Ok(v)
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        is_prime_power_of(self.order(), p)
    }
}

pub fn element_order(p: &Permutation) -> u64 {
    p.order()
}

pub(crate) fn is_prime_power_of(mut n: u128, p: u64) -> bool {
    let p = p as u128;
    while n > 1 && n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u128) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u128;
    while p * p <= n {
        if n % p == 0 {
            out.push(p as u64);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n as u64);
    }
    out
}

/// The largest power of `p` dividing `n`.
pub fn p_part(mut n: u128, p: u64) -> u128 {
    let mut out = 1;
    while n % p as u128 == 0 {
        n /= p as u128;
        out *= p as u128;
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

pub struct Elements<'a> {
    chain: &'a StabChain,
    next: u64,
    end: u64,
}

impl Iterator for Elements<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.next >= self.end {
            return None;
        }
        let g = self.chain.unrank(self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = (self.end - self.next) as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements<'_> {}
