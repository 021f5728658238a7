//! Deterministic Schreier–Sims stabilizer chains.
//!
//! New base points are always the first point moved by the generator that
//! forces them; no randomization is used, so a given generator list always
//! yields the same chain.

use crate::perm::Permutation;

const NOT_IN_ORBIT: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct Level {
    pub base_point: usize,
    /// Strong generators fixing every earlier base point.
    pub gens: Vec<Permutation>,
    /// Basic orbit in discovery order; `orbit[0]` is the base point.
    pub orbit: Vec<u32>,
    position: Vec<u32>,
    /// `transversal[i]` maps the base point to `orbit[i]`.
    transversal: Vec<Permutation>,
    transversal_inv: Vec<Permutation>,
}

impl Level {
    fn new(degree: usize, base_point: usize) -> Self {
        let mut level = Level {
            base_point,
            gens: Vec::new(),
            orbit: Vec::new(),
            position: vec![NOT_IN_ORBIT; degree],
            transversal: Vec::new(),
            transversal_inv: Vec::new(),
        };
        level.recompute_orbit(degree);
        level
    }

    fn recompute_orbit(&mut self, degree: usize) {
        self.position.iter_mut().for_each(|x| *x = NOT_IN_ORBIT);
        self.orbit.clear();
        self.transversal.clear();
        self.transversal_inv.clear();
        self.orbit.push(self.base_point as u32);
        self.position[self.base_point] = 0;
        self.transversal.push(Permutation::identity(degree));
        self.transversal_inv.push(Permutation::identity(degree));
        let mut head = 0;
        while head < self.orbit.len() {
            let x = self.orbit[head] as usize;
            for g in &self.gens {
                let y = g.apply(x);
                if self.position[y] == NOT_IN_ORBIT {
                    self.position[y] = self.orbit.len() as u32;
                    self.orbit.push(y as u32);
                    let t = self.transversal[head].then(g);
                    self.transversal_inv.push(t.inverse());
                    self.transversal.push(t);
                }
            }
            head += 1;
        }
    }

    #[inline]
    pub fn position(&self, point: usize) -> Option<usize> {
        match self.position[point] {
            NOT_IN_ORBIT => None,
            i => Some(i as usize),
        }
    }

    pub fn transversal(&self, i: usize) -> &Permutation {
        &self.transversal[i]
    }

    pub fn transversal_inv(&self, i: usize) -> &Permutation {
        &self.transversal_inv[i]
    }

    pub fn orbit_len(&self) -> usize {
        self.orbit.len()
    }
}

#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    /// Chain for `⟨gens⟩` whose base starts with `base_prefix`.
    pub fn build(degree: usize, gens: &[Permutation], base_prefix: &[usize]) -> Self {
        let mut chain = StabChain {
            degree,
            levels: base_prefix.iter().map(|&b| Level::new(degree, b)).collect(),
        };
        for g in gens {
            chain.extend(g);
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    /// Sifts `g` from level `start`; returns the residue and the level at
    /// which sifting stopped (`levels.len()` if it passed every level).
    pub fn strip_from(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let x = h.apply(level.base_point);
            match level.position(x) {
                Some(i) => {
                    if i != 0 {
                        h = h.then(&level.transversal_inv[i]);
                    }
                }
                None => return (h, l),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        let (h, l) = self.strip_from(g, 0);
        l == self.levels.len() && h.is_identity()
    }

    /// Adds `g` to the group and restores the strong-generation property.
    /// Returns `false` when `g` was already a member.
    pub fn extend(&mut self, g: &Permutation) -> bool {
        let (residue, drop) = self.strip_from(g, 0);
        if drop == self.levels.len() && residue.is_identity() {
            return false;
        }
        let at = self.add_strong_generator(residue, 0, drop);
        self.close_from(at);
        true
    }

    fn add_strong_generator(&mut self, residue: Permutation, from: usize, drop: usize) -> usize {
        let drop = if drop == self.levels.len() {
            let point = residue
                .first_moved_point()
                .expect("nontrivial residue moves a point");
            self.levels.push(Level::new(self.degree, point));
            self.levels.len() - 1
        } else {
            drop
        };
        for l in from..=drop {
            self.levels[l].gens.push(residue.clone());
            self.levels[l].recompute_orbit(self.degree);
        }
        drop
    }

    /// Schreier–Sims closure, assuming levels above `top` are complete.
    fn close_from(&mut self, top: usize) {
        let mut i = top as isize;
        'outer: while i >= 0 {
            let lvl = i as usize;
            let n_orbit = self.levels[lvl].orbit.len();
            for j in 0..n_orbit {
                let n_gens = self.levels[lvl].gens.len();
                for s in 0..n_gens {
                    let level = &self.levels[lvl];
                    let s_perm = &level.gens[s];
                    let x = level.orbit[j] as usize;
                    let y = s_perm.apply(x);
                    let k = level.position(y).expect("orbit is closed");
                    let schreier = level.transversal[j]
                        .then(s_perm)
                        .then(&level.transversal_inv[k]);
                    if schreier.is_identity() {
                        continue;
                    }
                    let (residue, drop) = self.strip_from(&schreier, lvl + 1);
                    if drop < self.levels.len() || !residue.is_identity() {
                        let at = self.add_strong_generator(residue, lvl + 1, drop);
                        i = at as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }

    /// Mixed-radix rank of a member: the digit at each level is the orbit
    /// position used when sifting. Returns `None` for non-members.
    pub fn rank(&self, g: &Permutation) -> Option<u64> {
        let mut images: Vec<u32> = self
            .levels
            .iter()
            .map(|l| g.images()[l.base_point])
            .collect();
        let r = self.rank_of_base_image(&mut images)?;
        // base images only pin down an element when the base is complete
        if self.unrank(r) == *g {
            Some(r)
        } else {
            None
        }
    }

    /// Rank from the images of the base points, for elements already known
    /// to lie in the group. `images` is consumed as scratch space.
    pub fn rank_of_base_image(&self, images: &mut [u32]) -> Option<u64> {
        let mut rank = 0u64;
        for (l, level) in self.levels.iter().enumerate() {
            let i = level.position(images[l] as usize)?;
            rank = rank * level.orbit.len() as u64 + i as u64;
            if i != 0 {
                let inv = &level.transversal_inv[i];
                for x in images[l + 1..].iter_mut() {
                    *x = inv.images()[*x as usize];
                }
            }
        }
        Some(rank)
    }

    /// Inverse of [`StabChain::rank`].
    pub fn unrank(&self, mut rank: u64) -> Permutation {
        let mut digits = vec![0usize; self.levels.len()];
        for (l, level) in self.levels.iter().enumerate().rev() {
            let n = level.orbit.len() as u64;
            digits[l] = (rank % n) as usize;
            rank /= n;
        }
        // g = u_{k-1} ... u_1 u_0
        let mut g = Permutation::identity(self.degree);
        for (l, level) in self.levels.iter().enumerate().rev() {
            if digits[l] != 0 {
                g = g.then(&level.transversal[digits[l]]);
            }
        }
        g
    }

    pub fn base_images(&self, g: &Permutation) -> Vec<u32> {
        self.levels.iter().map(|l| g.images()[l.base_point]).collect()
    }

    /// All strong generators, i.e. the generators of level 0.
    pub fn strong_generators(&self) -> &[Permutation] {
        self.levels.first().map(|l| l.gens.as_slice()).unwrap_or(&[])
    }

    /// Generators of the pointwise stabilizer of the first `depth` base points.
    pub fn stabilizer_generators(&self, depth: usize) -> &[Permutation] {
        self.levels
            .get(depth)
            .map(|l| l.gens.as_slice())
            .unwrap_or(&[])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn symmetric_group_order() {
        let c = StabChain::build(5, &[p(5, "(0 1 2 3 4)"), p(5, "(0 1)")], &[]);
        assert_eq!(c.order(), 120);
        assert!(c.contains(&p(5, "(2 4)")));
    }

    #[test]
    fn rank_unrank_bijective() {
        let c = StabChain::build(4, &[p(4, "(0 1 2 3)"), p(4, "(0 1)")], &[]);
        let mut seen = std::collections::HashSet::new();
        for r in 0..24u64 {
            let g = c.unrank(r);
            assert_eq!(c.rank(&g), Some(r));
            assert!(seen.insert(g));
        }
    }

    #[test]
    fn base_prefix_respected() {
        let c = StabChain::build(4, &[p(4, "(0 1 2)")], &[3, 2]);
        assert_eq!(&c.base()[..2], &[3, 2]);
        assert_eq!(c.order(), 3);
        assert!(!c.contains(&p(4, "(0 1)")));
    }
}
