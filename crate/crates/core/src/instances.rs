//! Seeded pseudo-random action instances for the lemma suites, and the
//! suite runner.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::action_lab::{
    check_coprime_lemma, check_cyclic_automorphism_lemma, check_fpf_nilpotent,
    check_frobenius_generation, check_rank_expo, check_splitting_consistency, ActionInstance,
};
use crate::constructors::{fpf_search, matrix_semidirect, Exclude, MatrixAction};
use crate::modular::Matrix;
use crate::named::{cyclic, dicyclic, dihedral, direct_product, sl23, symmetric};
use crate::outcome::CheckOutcome;
use crate::perm::{gcd, Permutation};
use crate::structure::p_core;
use crate::{Bounds, GroupError, PermGroup, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    CoprimeLemma,
    CyclicAutomorphism,
    RankExpo,
    FrobeniusGeneration,
    FpfNilpotent,
    Splitting,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::CoprimeLemma,
        Suite::CyclicAutomorphism,
        Suite::RankExpo,
        Suite::FrobeniusGeneration,
        Suite::FpfNilpotent,
        Suite::Splitting,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::CoprimeLemma => "coprime_lemma",
            Suite::CyclicAutomorphism => "cyclic_automorphism",
            Suite::RankExpo => "rank_expo",
            Suite::FrobeniusGeneration => "frobenius_generation",
            Suite::FpfNilpotent => "fpf_nilpotent",
            Suite::Splitting => "splitting",
        }
    }

    fn tag(self) -> u64 {
        Suite::ALL.iter().position(|&s| s == self).unwrap() as u64 + 1
    }
}

#[derive(Clone, Debug)]
pub struct LabeledInstance {
    pub label: String,
    pub instance: ActionInstance,
}

/// `count` instances for one suite; the same seed always yields the same list.
pub fn generate(suite: Suite, seed: u64, count: usize, bounds: &Bounds) -> Result<Vec<LabeledInstance>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ suite.tag().wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let mut gen = Generator {
        bounds,
        cache: HashMap::new(),
    };
    (0..count)
        .map(|_| match suite {
            Suite::CoprimeLemma => gen.coprime(&mut rng),
            Suite::CyclicAutomorphism => gen.cyclic_target(&mut rng),
            Suite::RankExpo => gen.rank_expo(&mut rng),
            Suite::FrobeniusGeneration => gen.frobenius(&mut rng),
            Suite::FpfNilpotent => gen.fpf(&mut rng),
            Suite::Splitting => gen.splitting(&mut rng),
        })
        .collect()
}

/// Units `r` mod `m` with `r^q = 1`.
fn units_of_order_dividing(m: u64, q: u64) -> Vec<u64> {
    (1..m)
        .filter(|&r| gcd(r, m) == 1 && Matrix::diagonal(m, &[r]).pow(q).is_identity())
        .collect()
}

fn random_invertible(rng: &mut ChaCha8Rng, dim: usize, modulus: u64) -> Matrix {
    loop {
        let rows: Vec<Vec<i64>> = (0..dim)
            .map(|_| (0..dim).map(|_| rng.gen_range(0..modulus) as i64).collect())
            .collect();
        let m = Matrix::from_rows(modulus, &rows).expect("square");
        if m.is_invertible() {
            return m;
        }
    }
}

fn permutation_matrix(modulus: u64, images: &[usize]) -> Matrix {
    let n = images.len();
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| (images[i] == j) as i64).collect())
        .collect();
    Matrix::from_rows(modulus, &rows).expect("square")
}

/// Translations by `(Z/m)^dim` extended by the group the matrices generate.
pub fn matrix_instance(modulus: u64, matrices: Vec<Matrix>, bounds: &Bounds) -> Result<ActionInstance> {
    let dim = matrices.first().map(Matrix::dim).unwrap_or(1);
    let action = MatrixAction::new(dim, modulus, matrices)?;
    let sp = matrix_semidirect(&action, bounds)?;
    ActionInstance::new(&sp.group, sp.module.generators(), sp.complement.generators())
}

/// The exponent-`p` Heisenberg group in its right regular representation,
/// extended by `(a, b, c) ↦ (d1·a, d2·b, d1·d2·c)`.
pub fn heisenberg_instance(p: u64, d1: u64, d2: u64) -> Result<ActionInstance> {
    let n = (p * p * p) as usize;
    let idx = |a: u64, b: u64, c: u64| ((a % p * p + b % p) * p + c % p) as usize;
    let points = || {
        (0..p).flat_map(move |a| (0..p).flat_map(move |b| (0..p).map(move |c| (a, b, c))))
    };
    let right = |h: (u64, u64, u64)| {
        let mut images = vec![0u32; n];
        for (a, b, c) in points() {
            images[idx(a, b, c)] = idx(a + h.0, b + h.1, c + h.2 + a * h.1) as u32;
        }
        Permutation::from_images(images).expect("regular")
    };
    let mut images = vec![0u32; n];
    for (a, b, c) in points() {
        images[idx(a, b, c)] = idx(d1 * a, d2 * b, d1 * d2 % p * c) as u32;
    }
    let phi = Permutation::from_images(images)
        .map_err(|_| GroupError::InvalidAction("scalars must be units".into()))?;
    let target = vec![right((1, 0, 0)), right((0, 1, 0))];
    let mut gens = target.clone();
    gens.push(phi.clone());
    let ambient = PermGroup::closure(n, &gens)?;
    ActionInstance::new(&ambient, &target, &[phi])
}

/// `target × actors` on disjoint points.
fn trivial_instance(target: &PermGroup, actors: &PermGroup) -> Result<ActionInstance> {
    let ambient = direct_product(target, actors);
    let total = ambient.degree();
    let t: Vec<Permutation> = target.generators().iter().map(|g| g.embed(0, total)).collect();
    let a: Vec<Permutation> = actors
        .generators()
        .iter()
        .map(|g| g.embed(target.degree(), total))
        .collect();
    ActionInstance::new(&ambient, &t, &a)
}

/// `Q8` acted on by an order-3 element of `SL(2,3)`.
fn sl23_instance(rng: &mut ChaCha8Rng, bounds: &Bounds) -> Result<ActionInstance> {
    let g = sl23();
    let q = p_core(&g, 2, bounds)?;
    let threes: Vec<Permutation> = g.elements(bounds)?.filter(|x| x.order() == 3).collect();
    let a = threes.choose(rng).expect("SL(2,3) has elements of order 3").clone();
    ActionInstance::new(&g, q.generators(), &[a])
}

struct Generator<'a> {
    bounds: &'a Bounds,
    cache: HashMap<(&'static str, usize, u64), Option<MatrixAction>>,
}

fn labeled(label: String, instance: ActionInstance) -> Result<LabeledInstance> {
    Ok(LabeledInstance { label, instance })
}

impl<'a> Generator<'a> {
    fn searched(
        &mut self,
        name: &'static str,
        k: &PermGroup,
        dim: usize,
        modulus: u64,
        exclude: Exclude,
    ) -> Result<MatrixAction> {
        if !self.cache.contains_key(&(name, dim, modulus)) {
            let found = fpf_search(k, dim, modulus, exclude, self.bounds)?;
            self.cache.insert((name, dim, modulus), found);
        }
        self.cache[&(name, dim, modulus)]
            .clone()
            .ok_or_else(|| GroupError::Precondition(format!("no action of {name} mod {modulus}")))
    }

    /// An fpf_search action, conjugated by a random basis change, as an
    /// instance with acting group `k`.
    #[allow(clippy::too_many_arguments)]
    fn searched_instance(
        &mut self,
        rng: &mut ChaCha8Rng,
        name: &'static str,
        k: &PermGroup,
        dim: usize,
        modulus: u64,
        exclude: Exclude,
    ) -> Result<LabeledInstance> {
        let action = self.searched(name, k, dim, modulus, exclude)?;
        let p = random_invertible(rng, dim, modulus);
        let mats = action.matrices().iter().map(|m| m.conjugate_by(&p)).collect();
        labeled(
            format!("{name} on (Z/{modulus})^{dim}"),
            matrix_instance(modulus, mats, self.bounds)?,
        )
    }

    /// Random diagonal matrices whose entries have order dividing `q`, in a
    /// random basis.
    fn diagonal(
        &mut self,
        rng: &mut ChaCha8Rng,
        modulus: u64,
        dim: usize,
        q: u64,
        gens: usize,
        require_fpf: bool,
    ) -> Result<LabeledInstance> {
        let roots: Vec<u64> = units_of_order_dividing(modulus, q)
            .into_iter()
            .filter(|&r| !require_fpf || gcd((r + modulus - 1) % modulus, modulus) == 1)
            .collect();
        let mats: Vec<Matrix> = loop {
            let mats: Vec<Matrix> = (0..gens)
                .map(|_| {
                    let d: Vec<u64> = (0..dim).map(|_| *roots.choose(rng).unwrap()).collect();
                    Matrix::diagonal(modulus, &d)
                })
                .collect();
            if mats.iter().any(|m| !m.is_identity()) {
                break mats;
            }
        };
        let p = random_invertible(rng, dim, modulus);
        let label = format!("diagonal {:?} mod {modulus}", mats.iter().map(Matrix::rows).collect::<Vec<_>>());
        let mats = mats.iter().map(|m| m.conjugate_by(&p)).collect();
        labeled(label, matrix_instance(modulus, mats, self.bounds)?)
    }

    /// `V4` as two sign matrices generating a Klein group, in a random basis.
    fn klein(&mut self, rng: &mut ChaCha8Rng, modulus: u64, dim: usize) -> Result<LabeledInstance> {
        let minus = modulus - 1;
        let (a, b) = loop {
            let a: Vec<u64> = (0..dim).map(|_| if rng.gen() { 1 } else { minus }).collect();
            let b: Vec<u64> = (0..dim).map(|_| if rng.gen() { 1 } else { minus }).collect();
            if a.iter().any(|&x| x != 1) && b.iter().any(|&x| x != 1) && a != b {
                break (a, b);
            }
        };
        let p = random_invertible(rng, dim, modulus);
        let mats = vec![
            Matrix::diagonal(modulus, &a).conjugate_by(&p),
            Matrix::diagonal(modulus, &b).conjugate_by(&p),
        ];
        labeled(
            format!("V4 signs {a:?} {b:?} mod {modulus}"),
            matrix_instance(modulus, mats, self.bounds)?,
        )
    }

    fn heisenberg(&mut self, rng: &mut ChaCha8Rng, p: u64, q: u64) -> Result<LabeledInstance> {
        let roots: Vec<u64> = units_of_order_dividing(p, q)
            .into_iter()
            .filter(|&r| r != 1)
            .collect();
        let (d1, d2) = loop {
            let d1 = *roots.choose(rng).unwrap();
            let d2 = *roots.choose(rng).unwrap();
            if d1 * d2 % p != 1 {
                break (d1, d2);
            }
        };
        labeled(format!("Heisenberg mod {p} by ({d1}, {d2})"), heisenberg_instance(p, d1, d2)?)
    }

    fn coprime(&mut self, rng: &mut ChaCha8Rng) -> Result<LabeledInstance> {
        match rng.gen_range(0..8) {
            0 => {
                let (m, dim) = *[(5, 2), (7, 2), (11, 1), (13, 2), (7, 3)].choose(rng).unwrap();
                let gens = rng.gen_range(1..=2);
                self.diagonal(rng, m, dim, m - 1, gens, false)
            }
            1 => {
                let (m, dim) = *[(3, 2), (5, 2), (9, 2), (3, 3), (7, 2)].choose(rng).unwrap();
                self.klein(rng, m, dim)
            }
            2 => {
                let m = *[5u64, 7].choose(rng).unwrap();
                let mats = vec![permutation_matrix(m, &[1, 0, 2]), permutation_matrix(m, &[1, 2, 0])];
                labeled(format!("S3 permuting (Z/{m})^3"), matrix_instance(m, mats, self.bounds)?)
            }
            3 => {
                let (name, k, dim, m, ex) = *[
                    ("S3", 0, 2, 7, Exclude::TwoElements),
                    ("S3", 0, 2, 5, Exclude::TwoElements),
                    ("Q8", 1, 2, 3, Exclude::Nothing),
                    ("Q8", 1, 2, 5, Exclude::Nothing),
                    ("C5", 2, 1, 11, Exclude::Nothing),
                    ("C3", 3, 2, 2, Exclude::Nothing),
                ]
                .choose(rng)
                .unwrap();
                let k = [symmetric(3), dicyclic(2), cyclic(5), cyclic(3)][k].clone();
                self.searched_instance(rng, name, &k, dim, m, ex)
            }
            4 => self.heisenberg(rng, 7, 3),
            5 => labeled("SL(2,3)".into(), sl23_instance(rng, self.bounds)?),
            6 => {
                let (t, a, label) = [
                    (cyclic(9), cyclic(2), "C9 x C2"),
                    (dihedral(3), cyclic(5), "S3 x C5"),
                    (dicyclic(2), dihedral(3), "Q8 x S3"),
                    (cyclic(1), dihedral(2), "1 x V4"),
                ]
                .choose(rng)
                .unwrap()
                .clone();
                labeled(label.into(), trivial_instance(&t, &a)?)
            }
            _ => {
                let mats = vec![permutation_matrix(3, &[1, 0])];
                let inst = matrix_instance(3, mats, self.bounds)?;
                labeled("C2 swapping (Z/3)^2".into(), inst)
            }
        }
    }

    fn cyclic_target(&mut self, rng: &mut ChaCha8Rng) -> Result<LabeledInstance> {
        match rng.gen_range(0..3) {
            0 => {
                let (n, p) = *[(3u64, 3u64), (5, 5), (7, 7), (9, 3), (11, 11), (13, 13), (25, 5), (27, 3), (49, 7)]
                    .choose(rng)
                    .unwrap();
                // units of order prime to p
                let q = (1..n).filter(|&r| gcd(r, n) == 1).count() as u64 / (n / p);
                let units = units_of_order_dividing(n, q);
                let r = loop {
                    let r = *units.choose(rng).unwrap();
                    if r != 1 || units.len() == 1 {
                        break r;
                    }
                };
                let inst = matrix_instance(n, vec![Matrix::diagonal(n, &[r])], self.bounds)?;
                labeled(format!("x -> {r}x on Z/{n}"), inst)
            }
            1 => {
                let (t, a, label) = [
                    (cyclic(8), cyclic(3), "C8 x C3"),
                    (cyclic(4), cyclic(5), "C4 x C5"),
                    (cyclic(16), cyclic(3), "C16 x C3"),
                    (cyclic(9), cyclic(2), "C9 x C2"),
                    (dicyclic(2), cyclic(3), "Q8 x C3"),
                    (dicyclic(4), cyclic(3), "Q16 x C3"),
                    (dicyclic(2), cyclic(5), "Q8 x C5"),
                ]
                .choose(rng)
                .unwrap()
                .clone();
                labeled(label.into(), trivial_instance(&t, &a)?)
            }
            _ => labeled("SL(2,3)".into(), sl23_instance(rng, self.bounds)?),
        }
    }

    fn rank_expo(&mut self, rng: &mut ChaCha8Rng) -> Result<LabeledInstance> {
        match rng.gen_range(0..3) {
            0 | 1 => {
                let (m, dim) = *[(3, 2), (5, 2), (7, 2), (9, 2), (4, 2), (8, 2), (3, 3), (4, 3)]
                    .choose(rng)
                    .unwrap();
                self.klein(rng, m, dim)
            }
            _ => {
                let m = *[7u64, 13].choose(rng).unwrap();
                let roots: Vec<u64> = units_of_order_dividing(m, 3);
                let w = roots.iter().copied().find(|&r| r != 1).unwrap();
                let dim = 2;
                let a = Matrix::diagonal(m, &[w, 1]);
                let b = Matrix::diagonal(m, &[*roots.choose(rng).unwrap(), w]);
                let p = random_invertible(rng, dim, m);
                let mats = vec![a.conjugate_by(&p), b.conjugate_by(&p)];
                labeled(format!("C3 x C3 diagonal mod {m}"), matrix_instance(m, mats, self.bounds)?)
            }
        }
    }

    fn frobenius(&mut self, rng: &mut ChaCha8Rng) -> Result<LabeledInstance> {
        match rng.gen_range(0..4) {
            0 => {
                let m = *[5u64, 7, 11, 13].choose(rng).unwrap();
                self.searched_instance(rng, "S3", &symmetric(3), 2, m, Exclude::TwoElements)
            }
            1 => {
                let (dim, m) = *[(2, 11), (4, 2)].choose(rng).unwrap();
                self.searched_instance(rng, "D10", &dihedral(5), dim, m, Exclude::TwoElements)
            }
            2 => {
                let m = *[3u64, 5, 7].choose(rng).unwrap();
                let mats = vec![
                    Matrix::diagonal(m, &[m - 1, m - 1, 1]),
                    permutation_matrix(m, &[1, 2, 0]),
                ];
                labeled(format!("A4 monomial on (Z/{m})^3"), matrix_instance(m, mats, self.bounds)?)
            }
            _ => {
                // multiplication by x and squaring on GF(8) = F2[x]/(x^3 + x + 1)
                let x = Matrix::from_rows(2, &[vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 0]]).unwrap();
                let frob = Matrix::from_rows(2, &[vec![1, 0, 0], vec![0, 0, 1], vec![0, 1, 1]]).unwrap();
                let copies = rng.gen_range(1..=2);
                let action = MatrixAction::new(3, 2, vec![x, frob])?.repeated(copies);
                let inst = matrix_instance(2, action.matrices().to_vec(), self.bounds)?;
                labeled(format!("C7:C3 on GF(8)^{copies}"), inst)
            }
        }
    }

    fn fpf(&mut self, rng: &mut ChaCha8Rng) -> Result<LabeledInstance> {
        match rng.gen_range(0..4) {
            0 => {
                let (m, dim) = *[(3, 2), (5, 2), (7, 1), (9, 2), (15, 1), (15, 2)].choose(rng).unwrap();
                let inst = matrix_instance(m, vec![Matrix::diagonal(m, &vec![m - 1; dim])], self.bounds)?;
                labeled(format!("inversion on (Z/{m})^{dim}"), inst)
            }
            1 => {
                let (m, q, dim) = *[(7, 3, 2), (13, 3, 2), (11, 5, 2), (7, 3, 3), (31, 5, 1)]
                    .choose(rng)
                    .unwrap();
                self.diagonal(rng, m, dim, q, 1, true)
            }
            2 => {
                let (p, q) = *[(7u64, 3u64), (7, 3), (13, 3)].choose(rng).unwrap();
                self.heisenberg(rng, p, q)
            }
            _ => {
                let (name, k, dim, m) = *[("C3", 3, 2, 2), ("C5", 5, 4, 2), ("C7", 7, 3, 2), ("C3", 3, 2, 5)]
                    .choose(rng)
                    .unwrap();
                self.searched_instance(rng, name, &cyclic(k), dim, m, Exclude::Nothing)
            }
        }
    }

    fn splitting(&mut self, rng: &mut ChaCha8Rng) -> Result<LabeledInstance> {
        match rng.gen_range(0..6) {
            0 => {
                let (m, q, dim) = *[(7, 3, 2), (5, 2, 2), (4, 2, 2), (9, 3, 2), (13, 3, 2), (8, 2, 2)]
                    .choose(rng)
                    .unwrap();
                self.diagonal(rng, m, dim, q, 1, false)
            }
            1 => {
                let (m, q) = *[(3u64, 2usize), (5, 2), (4, 2), (2, 3), (3, 3), (4, 3)].choose(rng).unwrap();
                let shift: Vec<usize> = (0..q).map(|i| (i + 1) % q).collect();
                let inst = matrix_instance(m, vec![permutation_matrix(m, &shift)], self.bounds)?;
                labeled(format!("shift on (Z/{m})^{q}"), inst)
            }
            2 => {
                let (m, dim) = *[(4u64, 1usize), (8, 1), (4, 2), (9, 1), (6, 1)].choose(rng).unwrap();
                let inst = matrix_instance(m, vec![Matrix::diagonal(m, &vec![m - 1; dim])], self.bounds)?;
                labeled(format!("inversion on (Z/{m})^{dim}"), inst)
            }
            3 => self.heisenberg(rng, 7, 3),
            4 => labeled("SL(2,3)".into(), sl23_instance(rng, self.bounds)?),
            _ => {
                let (t, a, label) = [
                    (cyclic(4), cyclic(2), "C4 x C2"),
                    (cyclic(3), cyclic(3), "C3 x C3"),
                    (dihedral(3), cyclic(2), "S3 x C2"),
                    (cyclic(1), cyclic(5), "1 x C5"),
                ]
                .choose(rng)
                .unwrap()
                .clone();
                labeled(label.into(), trivial_instance(&t, &a)?)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub instances: usize,
    /// Instances where every applicable check passed and at least one applied.
    pub passed: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

fn outcomes(suite: Suite, inst: &ActionInstance, bounds: &Bounds) -> Result<Vec<CheckOutcome>> {
    Ok(match suite {
        Suite::CoprimeLemma => check_coprime_lemma(inst, bounds)?
            .parts()
            .into_iter()
            .cloned()
            .collect(),
        Suite::CyclicAutomorphism => vec![check_cyclic_automorphism_lemma(inst, bounds)?],
        Suite::RankExpo => vec![check_rank_expo(inst, bounds)?],
        Suite::FrobeniusGeneration => vec![check_frobenius_generation(inst, bounds)?],
        Suite::FpfNilpotent => vec![check_fpf_nilpotent(inst, bounds)?],
        Suite::Splitting => vec![check_splitting_consistency(inst, bounds)?],
    })
}

pub fn run_suite(suite: Suite, seed: u64, count: usize, bounds: &Bounds) -> Result<SuiteReport> {
    let mut report = SuiteReport {
        suite,
        instances: count,
        passed: 0,
        skipped: 0,
        failures: Vec::new(),
    };
    for (i, li) in generate(suite, seed, count, bounds)?.iter().enumerate() {
        let outs = outcomes(suite, &li.instance, bounds)?;
        if let Some(detail) = outs.iter().find_map(CheckOutcome::failure) {
            report.failures.push(format!("#{i} {}: {detail}", li.label));
        } else if outs.iter().all(CheckOutcome::is_skipped) {
            report.skipped += 1;
        } else {
            report.passed += 1;
        }
    }
    Ok(report)
}
