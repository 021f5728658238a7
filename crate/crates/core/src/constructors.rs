//! Semidirect products `V ⋊ K` of modules over `Z/m` with matrix actions,
//! a backtracking search for fixed-point-free representations, and the
//! example families built from them.
//!
//! A semidirect product is realized on the disjoint union of the affine
//! spaces of the diagonal blocks of the action: if the matrices are block
//! diagonal with blocks `V = V_1 ⊕ … ⊕ V_r`, the group acts on
//! `V_1 ⊔ … ⊔ V_r` with translations and linear maps acting blockwise. The
//! action on the union is faithful whenever the action on `V` is, and its
//! degree is `Σ m^{dim V_i}` instead of `m^{dim V}`.

use std::collections::HashMap;

use crate::group::PermGroup;
use crate::hom::{coset_action, GroupHom};
use crate::modular::{digits, from_digits, integer_det, Matrix};
use crate::named::{alternating, dihedral, sl23};
use crate::perm::Permutation;
use crate::recognition::{decompose_cyclic_odd_times_quaternion, is_cyclic};
use crate::{Bounds, GroupError, Result};

/// One invertible matrix over `Z/modulus` per generator of the acting group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixAction {
    dim: usize,
    modulus: u64,
    matrices: Vec<Matrix>,
}

impl MatrixAction {
    pub fn new(dim: usize, modulus: u64, matrices: Vec<Matrix>) -> Result<Self> {
        if dim == 0 || modulus < 2 {
            return Err(GroupError::InvalidAction(format!(
                "dimension {dim} and modulus {modulus}"
            )));
        }
        for (i, m) in matrices.iter().enumerate() {
            if m.dim() != dim || m.modulus() != modulus {
                return Err(GroupError::InvalidAction(format!(
                    "matrix {i} is {}x{} mod {}",
                    m.dim(),
                    m.dim(),
                    m.modulus()
                )));
            }
            if !m.is_invertible() {
                return Err(GroupError::InvalidAction(format!(
                    "matrix {i} is not invertible"
                )));
            }
        }
        Ok(MatrixAction {
            dim,
            modulus,
            matrices,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    /// Block-diagonal sum of `copies` copies.
    pub fn repeated(&self, copies: usize) -> MatrixAction {
        let matrices = self
            .matrices
            .iter()
            .map(|m| {
                let mut acc = m.clone();
                for _ in 1..copies {
                    acc = acc.direct_sum(m);
                }
                acc
            })
            .collect();
        MatrixAction {
            dim: self.dim * copies,
            modulus: self.modulus,
            matrices,
        }
    }

    fn layout(&self) -> Layout {
        Layout::new(self.dim, self.modulus, &self.matrices)
    }

    /// Certifies that generator ↦ matrix extends to a homomorphism from `k`,
    /// returning it with the matrix group realized as permutations.
    pub fn validate(&self, k: &PermGroup, bounds: &Bounds) -> Result<GroupHom> {
        if self.matrices.len() != k.generators().len() {
            return Err(GroupError::InvalidAction(format!(
                "{} matrices for {} generators",
                self.matrices.len(),
                k.generators().len()
            )));
        }
        let layout = self.layout();
        layout.check_degree(bounds)?;
        let images: Vec<Permutation> = self.matrices.iter().map(|m| layout.linear(m)).collect();
        let codomain = PermGroup::closure(layout.degree, &images)?;
        GroupHom::by_images(k, &codomain, images).map_err(|e| match e {
            GroupError::NotAHomomorphism => {
                GroupError::InvalidAction("matrices do not define a homomorphism".into())
            }
            other => other,
        })
    }

    /// Every element of `k` with its matrix, found by walking the Cayley
    /// graph; fails if two words for one element give different matrices.
    pub fn element_matrices(
        &self,
        k: &PermGroup,
        bounds: &Bounds,
    ) -> Result<Vec<(Permutation, Matrix)>> {
        bounds.check_order(k.order())?;
        cayley_images(k, self.dim, self.modulus, &self.matrices, None).ok_or_else(|| {
            GroupError::InvalidAction("matrices do not define a homomorphism".into())
        })
    }
}

/// Which elements may have nonzero fixed vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exclude {
    Nothing,
    /// Elements of 2-power order.
    TwoElements,
}

impl Exclude {
    pub fn excludes(self, x: &Permutation) -> bool {
        match self {
            Exclude::Nothing => false,
            Exclude::TwoElements => x.order().is_power_of_two(),
        }
    }
}

/// Coordinates split into the connected blocks of the matrices.
struct Layout {
    modulus: u64,
    blocks: Vec<Vec<usize>>,
    offsets: Vec<usize>,
    degree: usize,
}

impl Layout {
    fn new(dim: usize, modulus: u64, matrices: &[Matrix]) -> Self {
        let mut parent: Vec<usize> = (0..dim).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            parent[x] = r;
            r
        }
        for m in matrices {
            for i in 0..dim {
                for j in 0..dim {
                    if i != j && m.entry(i, j) != 0 {
                        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of: HashMap<usize, usize> = HashMap::new();
        for i in 0..dim {
            let r = find(&mut parent, i);
            let b = *block_of.entry(r).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[b].push(i);
        }
        let mut offsets = Vec::with_capacity(blocks.len());
        let mut degree = 0usize;
        for b in &blocks {
            offsets.push(degree);
            degree = degree.saturating_add((modulus as usize).saturating_pow(b.len() as u32));
        }
        Layout {
            modulus,
            blocks,
            offsets,
            degree,
        }
    }

    fn check_degree(&self, bounds: &Bounds) -> Result<()> {
        if self.degree as u128 > bounds.max_degree {
            return Err(GroupError::DegreeTooLarge {
                degree: self.degree as u128,
                bound: bounds.max_degree,
            });
        }
        Ok(())
    }

    fn block_size(&self, b: usize) -> usize {
        (self.modulus as usize).pow(self.blocks[b].len() as u32)
    }

    /// Blockwise `x ↦ x·M`.
    fn linear(&self, m: &Matrix) -> Permutation {
        let mut images = vec![0u32; self.degree];
        for (b, coords) in self.blocks.iter().enumerate() {
            let sub = m.restrict(coords);
            for idx in 0..self.block_size(b) {
                let v = digits(idx, coords.len(), self.modulus);
                let w = sub.apply(&v);
                images[self.offsets[b] + idx] = (self.offsets[b] + from_digits(&w, self.modulus)) as u32;
            }
        }
        Permutation::from_images_unchecked(images)
    }

    /// Translation by the basis vector at `coord`.
    fn translation(&self, coord: usize) -> Permutation {
        let mut images: Vec<u32> = (0..self.degree as u32).collect();
        let (b, pos) = self
            .blocks
            .iter()
            .enumerate()
            .find_map(|(b, c)| c.iter().position(|&x| x == coord).map(|p| (b, p)))
            .expect("coordinate in some block");
        let len = self.blocks[b].len();
        for idx in 0..self.block_size(b) {
            let mut v = digits(idx, len, self.modulus);
            v[pos] = (v[pos] + 1) % self.modulus;
            images[self.offsets[b] + idx] = (self.offsets[b] + from_digits(&v, self.modulus)) as u32;
        }
        Permutation::from_images_unchecked(images)
    }
}

/// `V ⋊ K` with its two factors as subgroups.
#[derive(Clone, Debug)]
pub struct SemidirectProduct {
    pub group: PermGroup,
    /// Translations by `V`.
    pub module: PermGroup,
    /// Linear maps of `K`.
    pub complement: PermGroup,
}

pub fn semidirect_parts(
    action: &MatrixAction,
    k: &PermGroup,
    bounds: &Bounds,
) -> Result<SemidirectProduct> {
    action.validate(k, bounds)?;
    matrix_semidirect(action, bounds)
}

/// `V ⋊ M` where `M` is the group generated by the matrices themselves.
pub fn matrix_semidirect(action: &MatrixAction, bounds: &Bounds) -> Result<SemidirectProduct> {
    let layout = action.layout();
    layout.check_degree(bounds)?;
    let translations: Vec<Permutation> = (0..action.dim).map(|i| layout.translation(i)).collect();
    let linear: Vec<Permutation> = action.matrices.iter().map(|m| layout.linear(m)).collect();
    let mut gens = translations.clone();
    gens.extend(linear.iter().cloned());
    let group = PermGroup::closure(layout.degree, &gens)?;
    bounds.check_order(group.order())?;
    Ok(SemidirectProduct {
        module: group.subgroup(&translations),
        complement: group.subgroup(&linear),
        group,
    })
}

/// `V ⋊ K` generated by the basis translations followed by the linear maps of
/// `K`'s generators.
pub fn semidirect(action: &MatrixAction, k: &PermGroup, bounds: &Bounds) -> Result<PermGroup> {
    Ok(semidirect_parts(action, k, bounds)?.group)
}

/// Walks the Cayley graph of the subgroup generated by the first
/// `mats.len()` generators of `k`, assigning matrices; `None` on an
/// inconsistency, or when `fpf` is given and some element outside the
/// exclusion set has a nonzero fixed vector.
fn cayley_images(
    k: &PermGroup,
    dim: usize,
    modulus: u64,
    mats: &[Matrix],
    fpf: Option<Exclude>,
) -> Option<Vec<(Permutation, Matrix)>> {
    let gens = &k.generators()[..mats.len()];
    let mut list = vec![(k.identity(), Matrix::identity(dim, modulus))];
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    index.insert(k.identity(), 0);
    let mut head = 0;
    while head < list.len() {
        for (s, m) in gens.iter().zip(mats) {
            let y = list[head].0.then(s);
            let my = list[head].1.mul(m);
            match index.get(&y) {
                Some(&j) => {
                    if list[j].1 != my {
                        return None;
                    }
                }
                None => {
                    if let Some(ex) = fpf {
                        if !ex.excludes(&y) && !my.minus_identity().is_invertible() {
                            return None;
                        }
                    }
                    index.insert(y.clone(), list.len());
                    list.push((y, my));
                }
            }
        }
        head += 1;
    }
    Some(list)
}

struct Budget {
    used: u64,
    limit: u64,
}

impl Budget {
    fn spend(&mut self, n: u64) -> Result<()> {
        self.used = self.used.saturating_add(n);
        if self.used > self.limit {
            return Err(GroupError::SearchExhausted {
                evaluations: self.used,
                budget: self.limit,
            });
        }
        Ok(())
    }
}

/// Searches for an action of `k` on `(Z/modulus)^dim` in which every
/// nontrivial element not in the exclusion set fixes only zero.
///
/// For each divisor `e` of `dim` in increasing order, representations of
/// dimension `e` are searched by backtracking over generator images in
/// lexicographic matrix order; the first one found is returned as its
/// `dim/e`-fold block sum. `Ok(None)` means none exists in dimension `dim`
/// at all; running out of budget first is [`GroupError::SearchExhausted`].
pub fn fpf_search(
    k: &PermGroup,
    dim: usize,
    modulus: u64,
    exclude: Exclude,
    bounds: &Bounds,
) -> Result<Option<MatrixAction>> {
    if dim == 0 || modulus < 2 {
        return Err(GroupError::Precondition(format!(
            "dimension {dim} and modulus {modulus}"
        )));
    }
    bounds.check_order(k.order())?;
    let mut budget = Budget {
        used: 0,
        limit: bounds.search_budget,
    };
    for e in (1..=dim).filter(|e| dim % e == 0) {
        if let Some(found) = search_dimension(k, e, modulus, exclude, &mut budget)? {
            return Ok(Some(found.repeated(dim / e)));
        }
    }
    Ok(None)
}

fn search_dimension(
    k: &PermGroup,
    dim: usize,
    modulus: u64,
    exclude: Exclude,
    budget: &mut Budget,
) -> Result<Option<MatrixAction>> {
    let gens = k.generators();
    if gens.is_empty() {
        return Ok(Some(MatrixAction::new(dim, modulus, Vec::new())?));
    }
    let space = (modulus as u128).checked_pow((dim * dim) as u32);
    let space = match space {
        Some(s) if s <= (budget.limit - budget.used.min(budget.limit)) as u128 => s as u64,
        _ => {
            return Err(GroupError::SearchExhausted {
                evaluations: budget.used,
                budget: budget.limit,
            })
        }
    };
    budget.spend(space)?;
    let gen_powers: Vec<Vec<Permutation>> = gens
        .iter()
        .map(|s| (1..s.order()).map(|i| s.pow(i as i64)).collect())
        .collect();
    let mut candidates: Vec<Vec<Matrix>> = vec![Vec::new(); gens.len()];
    for index in 0..space {
        let m = Matrix::from_index(dim, modulus, index);
        if !m.is_invertible() {
            continue;
        }
        for (s, powers) in gen_powers.iter().enumerate() {
            if admissible(&m, powers, exclude) {
                candidates[s].push(m.clone());
            }
        }
    }
    let mut chosen: Vec<Matrix> = Vec::with_capacity(gens.len());
    if backtrack(k, &candidates, exclude, &mut chosen, budget)? {
        return Ok(Some(MatrixAction::new(dim, modulus, chosen)?));
    }
    Ok(None)
}

/// `M^o = 1` for the generator's order `o`, and `M^i - 1` invertible for each
/// non-excluded power.
fn admissible(m: &Matrix, powers: &[Permutation], exclude: Exclude) -> bool {
    let mut acc = m.clone();
    for x in powers {
        if !exclude.excludes(x) && !acc.minus_identity().is_invertible() {
            return false;
        }
        acc = acc.mul(m);
    }
    acc.is_identity()
}

fn backtrack(
    k: &PermGroup,
    candidates: &[Vec<Matrix>],
    exclude: Exclude,
    chosen: &mut Vec<Matrix>,
    budget: &mut Budget,
) -> Result<bool> {
    let depth = chosen.len();
    if depth == candidates.len() {
        return Ok(true);
    }
    for m in &candidates[depth] {
        budget.spend(1)?;
        chosen.push(m.clone());
        if cayley_images(k, m.dim(), m.modulus(), chosen, Some(exclude)).is_some()
            && backtrack(k, candidates, exclude, chosen, budget)?
        {
            return Ok(true);
        }
        chosen.pop();
    }
    Ok(false)
}

/// Independent check of a search result: the matrices define a homomorphism
/// and every non-excluded nontrivial element has no nonzero fixed vector,
/// tested by enumerating vectors.
pub fn certify_fixed_point_free(
    action: &MatrixAction,
    k: &PermGroup,
    exclude: Exclude,
    bounds: &Bounds,
) -> Result<bool> {
    action.validate(k, bounds)?;
    for (x, m) in action.element_matrices(k, bounds)? {
        if x.is_identity() || exclude.excludes(&x) {
            continue;
        }
        let layout = action.layout();
        for coords in &layout.blocks {
            if !m.restrict(coords).fixes_only_zero_by_enumeration() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_prime(p: u64) -> Result<()> {
    if !crate::group::is_prime(p) {
        return Err(GroupError::Precondition(format!("{p} is not prime")));
    }
    Ok(())
}

/// `V ⋊ K` with `V = (Z/p)^d` for the least `d` admitting a fixed-point-free
/// action of `K`.
pub fn example1(k: &PermGroup, p: u64, bounds: &Bounds) -> Result<PermGroup> {
    check_prime(p)?;
    if k.order() % p as u128 == 0 {
        return Err(GroupError::Precondition(format!("{p} divides |K|")));
    }
    if !is_cyclic(k, bounds)? && decompose_cyclic_odd_times_quaternion(k, bounds)?.is_none() {
        return Err(GroupError::Precondition(
            "K must be cyclic or cyclic of odd order times generalized quaternion".into(),
        ));
    }
    for d in 1.. {
        if let Some(action) = fpf_search(k, d, p, Exclude::Nothing, bounds)? {
            return semidirect(&action, k, bounds);
        }
    }
    unreachable!("search either succeeds or exhausts its budget")
}

/// `(Z/2)^k ⋊ D` for `D` dihedral of order `2m`, `m` odd, with every
/// nontrivial rotation fixing only zero.
pub fn example2(m: usize, k: usize, bounds: &Bounds) -> Result<PermGroup> {
    if m < 3 || m % 2 == 0 {
        return Err(GroupError::Precondition(format!("m = {m} must be odd and at least 3")));
    }
    let d = dihedral(m);
    match fpf_search(&d, k, 2, Exclude::TwoElements, bounds)? {
        Some(action) => semidirect(&action, &d, bounds),
        None => Err(GroupError::Precondition(format!(
            "no action of D_{} on (Z/2)^{k} with fixed-point-free rotations",
            2 * m
        ))),
    }
}

/// `(Z/2)^4 ⋊ A5` with every element of odd order fixing only zero.
pub fn example4_a5(bounds: &Bounds) -> Result<PermGroup> {
    let a5 = alternating(5);
    match fpf_search(&a5, 4, 2, Exclude::TwoElements, bounds)? {
        Some(action) => semidirect(&action, &a5, bounds),
        None => Err(GroupError::Precondition("no 2'-semiregular module found".into())),
    }
}

/// `(Z/p)² ⋊ SL(2,3)` with a fixed-point-free action.
pub fn negative_frobenius_sl23(p: u64, bounds: &Bounds) -> Result<PermGroup> {
    check_prime(p)?;
    if p < 5 {
        return Err(GroupError::Precondition(format!("p = {p} must be at least 5")));
    }
    let s = sl23();
    match fpf_search(&s, 2, p, Exclude::Nothing, bounds)? {
        Some(action) => semidirect(&action, &s, bounds),
        None => Err(GroupError::Precondition(format!(
            "SL(2,3) has no fixed-point-free action on (Z/{p})^2"
        ))),
    }
}

/// Hurwitz quaternion `(r + xi + yj + zk)/2` stored with doubled coordinates.
type Quaternion = [i64; 4];

fn quaternion_mul(a: Quaternion, b: Quaternion) -> Quaternion {
    let [a0, a1, a2, a3] = a;
    let [b0, b1, b2, b3] = b;
    let raw = [
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    ];
    raw.map(|x| x / 2)
}

/// Basis `ω = (1+i+j+k)/2, i, j, k` of the Hurwitz order.
const HURWITZ_BASIS: [Quaternion; 4] = [[1, 1, 1, 1], [0, 2, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2]];

fn hurwitz_coordinates(q: Quaternion) -> [i64; 4] {
    let r = q[0];
    [r, (q[1] - r) / 2, (q[2] - r) / 2, (q[3] - r) / 2]
}

/// Integer matrix of `x ↦ x·u` on the Hurwitz order, rows indexed by basis.
pub fn hurwitz_right_multiplication(u: Quaternion) -> [[i64; 4]; 4] {
    HURWITZ_BASIS.map(|b| hurwitz_coordinates(quaternion_mul(b, u)))
}

/// The order-4 unit `i`.
pub const UNIT_A: Quaternion = [0, 2, 0, 0];
/// The order-3 unit `(-1+i+j+k)/2`.
pub const UNIT_D: Quaternion = [-1, 1, 1, 1];

/// `det(M - 1)` over the integers.
pub fn det_minus_identity(m: &[[i64; 4]; 4]) -> i128 {
    let mut flat = Vec::with_capacity(16);
    for (i, row) in m.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            flat.push((x - i64::from(i == j)) as i128);
        }
    }
    integer_det(4, &flat)
}

#[derive(Clone, Debug)]
pub struct Example3 {
    pub group: PermGroup,
    /// Translations of `G` on both modules.
    pub normal: PermGroup,
}

impl Example3 {
    /// `G/N` as a permutation group on the cosets of `N`.
    pub fn quotient(&self, bounds: &Bounds) -> Result<PermGroup> {
        Ok(coset_action(&self.group, &self.normal, bounds)?.0)
    }
}

/// `G = ⟨va, d, V_p⟩` inside `(V_p ⊕ V_2) ⋊ SL(2,3)`, where SL(2,3) acts on
/// the Hurwitz order by right multiplication reduced mod `p` and mod `2^n`,
/// and `v ∈ V_2` is nonzero. Realized on `V_p ⊔ V_2`.
pub fn example3(p: u64, n: u32, v: [u64; 4], bounds: &Bounds) -> Result<Example3> {
    check_prime(p)?;
    if p == 2 || p == 3 {
        return Err(GroupError::Precondition(format!("p = {p} must be an odd prime other than 3")));
    }
    if n == 0 {
        return Err(GroupError::Precondition("n must be at least 1".into()));
    }
    let two = 1u64 << n;
    let v = v.map(|x| x % two);
    if v.iter().all(|&x| x == 0) {
        return Err(GroupError::Precondition("v must be a nonzero element of V_2".into()));
    }
    let size_p = (p as usize).pow(4);
    let size_2 = (two as usize).pow(4);
    let degree = size_p + size_2;
    if degree as u128 > bounds.max_degree {
        return Err(GroupError::DegreeTooLarge {
            degree: degree as u128,
            bound: bounds.max_degree,
        });
    }
    let as_rows = |m: [[i64; 4]; 4]| m.iter().map(|r| r.to_vec()).collect::<Vec<_>>();
    let a = hurwitz_right_multiplication(UNIT_A);
    let d = hurwitz_right_multiplication(UNIT_D);
    let (a_p, d_p) = (
        Matrix::from_rows(p, &as_rows(a)).expect("square"),
        Matrix::from_rows(p, &as_rows(d)).expect("square"),
    );
    let (a_2, d_2) = (
        Matrix::from_rows(two, &as_rows(a)).expect("square"),
        Matrix::from_rows(two, &as_rows(d)).expect("square"),
    );
    // x ↦ (x + shift)·M on both blocks
    let affine = |mp: &Matrix, m2: &Matrix, shift: Option<[u64; 4]>| {
        let mut images = vec![0u32; degree];
        for idx in 0..size_p {
            images[idx] = from_digits(&mp.apply(&digits(idx, 4, p)), p) as u32;
        }
        for idx in 0..size_2 {
            let mut x = digits(idx, 4, two);
            if let Some(s) = shift {
                for (xi, si) in x.iter_mut().zip(s) {
                    *xi = (*xi + si) % two;
                }
            }
            images[size_p + idx] = (size_p + from_digits(&m2.apply(&x), two)) as u32;
        }
        Permutation::from_images_unchecked(images)
    };
    let mut gens = vec![affine(&a_p, &a_2, Some(v)), affine(&d_p, &d_2, None)];
    for coord in 0..4 {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (idx, img) in images.iter_mut().enumerate().take(size_p) {
            let mut x = digits(idx, 4, p);
            x[coord] = (x[coord] + 1) % p;
            *img = from_digits(&x, p) as u32;
        }
        gens.push(Permutation::from_images_unchecked(images));
    }
    let group = PermGroup::closure(degree, &gens)?;
    bounds.check_order(group.order())?;
    // linear part on V_p: x ↦ g(x) - g(0)
    let linear_part = |g: &Permutation| {
        let origin = digits(g.apply(0), 4, p);
        let images: Vec<u32> = (0..size_p)
            .map(|idx| {
                let y = digits(g.apply(idx), 4, p);
                let diff: Vec<u64> = y.iter().zip(&origin).map(|(a, b)| (a + p - b) % p).collect();
                from_digits(&diff, p) as u32
            })
            .collect();
        Permutation::from_images_unchecked(images)
    };
    let images: Vec<Permutation> = group.generators().iter().map(linear_part).collect();
    let codomain = PermGroup::closure(size_p, &images)?;
    let hom = GroupHom::by_images(&group, &codomain, images)?;
    let normal = hom.kernel();
    Ok(Example3 { group, normal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{cyclic, direct_product, quaternion8};

    fn b() -> Bounds {
        Bounds::default()
    }

    #[test]
    fn frobenius_of_order_20() {
        let c4 = cyclic(4);
        let action = MatrixAction::new(1, 5, vec![Matrix::from_rows(5, &[vec![2]]).unwrap()]).unwrap();
        let g = semidirect(&action, &c4, &b()).unwrap();
        assert_eq!(g.order(), 20);
        assert_eq!(g.degree(), 5);
    }

    #[test]
    fn trivial_acting_group() {
        let action = MatrixAction::new(3, 3, vec![]).unwrap();
        let g = semidirect(&action, &PermGroup::trivial(1), &b()).unwrap();
        assert_eq!(g.order(), 27);
    }

    #[test]
    fn invalid_actions_rejected() {
        let c2 = cyclic(2);
        let bad = MatrixAction::new(1, 5, vec![Matrix::from_rows(5, &[vec![2]]).unwrap()]).unwrap();
        assert!(matches!(bad.validate(&c2, &b()), Err(GroupError::InvalidAction(_))));
        assert!(MatrixAction::new(1, 4, vec![Matrix::from_rows(4, &[vec![2]]).unwrap()]).is_err());
    }

    #[test]
    fn small_searches() {
        let c4 = cyclic(4);
        let found = fpf_search(&c4, 1, 5, Exclude::Nothing, &b()).unwrap().unwrap();
        assert_eq!(found.matrices()[0].entry(0, 0), 2);
        assert!(fpf_search(&cyclic(2), 1, 2, Exclude::Nothing, &b()).unwrap().is_none());
        // Q8 has no faithful 1-dimensional action, and 5^4 exceeds the budget
        let tight = Bounds { search_budget: 10, ..Bounds::default() };
        assert!(matches!(
            fpf_search(&quaternion8(), 2, 5, Exclude::Nothing, &tight),
            Err(GroupError::SearchExhausted { .. })
        ));
    }

    #[test]
    fn quaternion_search_certified() {
        let k = direct_product(&cyclic(3), &quaternion8());
        let action = fpf_search(&k, 4, 13, Exclude::Nothing, &b()).unwrap().unwrap();
        assert_eq!(action.dim(), 4);
        assert!(certify_fixed_point_free(&action, &k, Exclude::Nothing, &b()).unwrap());
    }

    #[test]
    fn hurwitz_units() {
        let a = hurwitz_right_multiplication(UNIT_A);
        let d = hurwitz_right_multiplication(UNIT_D);
        assert_eq!(det_minus_identity(&d), 9);
        assert_eq!(det_minus_identity(&a), 4);
        let mut x = UNIT_D;
        for _ in 0..2 {
            x = quaternion_mul(x, UNIT_D);
        }
        assert_eq!(x, [2, 0, 0, 0]);
    }

    #[test]
    fn family_orders() {
        assert_eq!(example1(&cyclic(4), 5, &b()).unwrap().order(), 20);
        assert_eq!(example1(&PermGroup::trivial(1), 3, &b()).unwrap().order(), 3);
        assert_eq!(example2(3, 2, &b()).unwrap().order(), 24);
        assert_eq!(example2(3, 4, &b()).unwrap().order(), 96);
        assert_eq!(example2(5, 4, &b()).unwrap().order(), 160);
        assert!(example2(4, 2, &b()).is_err());
    }

    #[test]
    fn example3_rejects_zero_vector() {
        assert!(matches!(
            example3(5, 1, [0, 0, 0, 0], &b()),
            Err(GroupError::Precondition(_))
        ));
        assert!(example3(3, 1, [1, 0, 0, 0], &b()).is_err());
    }
}
