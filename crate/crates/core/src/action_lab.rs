//! Checks for coprime actions and automorphisms, each realized inside a
//! container group where the acting group acts on a normal subgroup by
//! conjugation (`x^a = a⁻¹xa`).

use serde::Serialize;

use crate::classifier::is_cn;
use crate::constructors::{semidirect_parts, MatrixAction};
use crate::group::{is_prime, is_prime_power_of, prime_divisors, PermGroup};
use crate::hom::coset_action;
use crate::outcome::CheckOutcome;
use crate::perm::Permutation;
use crate::recognition::{frobenius_structure, is_abelian, is_cyclic, is_generalized_quaternion};
use crate::structure::{
    centralizer_element, centralizer_subgroup, commutator_subgroup, is_nilpotent, is_normal,
    normal_subgroups,
};
use crate::{Bounds, GroupError, Result};

fn gcd_u128(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd_u128(b, a % b)
    }
}

/// `ambient = target ⋊ actors`, with `actors` acting on `target` by conjugation.
#[derive(Clone, Debug)]
pub struct ActionInstance {
    ambient: PermGroup,
    target: PermGroup,
    actors: PermGroup,
}

impl ActionInstance {
    pub fn new(ambient: &PermGroup, target: &[Permutation], actors: &[Permutation]) -> Result<Self> {
        let target = ambient.subgroup(target);
        let actors = ambient.subgroup(actors);
        for g in target.generators().iter().chain(actors.generators()) {
            if !ambient.has(g) {
                return Err(GroupError::NotInGroup);
            }
        }
        if !is_normal(ambient, &target) {
            return Err(GroupError::Precondition("target is not normal".into()));
        }
        let mut gens = target.generators().to_vec();
        gens.extend(actors.generators().iter().cloned());
        let joint = ambient.subgroup(&gens);
        if joint.order() != ambient.order() || target.order() * actors.order() != ambient.order()
        {
            return Err(GroupError::Precondition(
                "ambient is not the semidirect product of target and actors".into(),
            ));
        }
        Ok(ActionInstance {
            ambient: ambient.clone(),
            target,
            actors,
        })
    }

    /// Module and matrix group of a semidirect product.
    pub fn from_matrix_action(action: &MatrixAction, k: &PermGroup, bounds: &Bounds) -> Result<Self> {
        let sp = semidirect_parts(action, k, bounds)?;
        ActionInstance::new(&sp.group, sp.module.generators(), sp.complement.generators())
    }

    pub fn ambient(&self) -> &PermGroup {
        &self.ambient
    }

    pub fn target(&self) -> &PermGroup {
        &self.target
    }

    pub fn actors(&self) -> &PermGroup {
        &self.actors
    }

    pub fn is_coprime(&self) -> bool {
        gcd_u128(self.target.order(), self.actors.order()) == 1
    }

    /// `C_G(A)`.
    pub fn fixed_points(&self, bounds: &Bounds) -> Result<PermGroup> {
        centralizer_subgroup(&self.target, &self.actors, bounds)
    }

    /// `C_A(G)`, the actors inducing the identity automorphism.
    pub fn kernel(&self, bounds: &Bounds) -> Result<PermGroup> {
        centralizer_subgroup(&self.actors, &self.target, bounds)
    }

    fn acts_trivially(&self) -> bool {
        self.actors
            .generators()
            .iter()
            .all(|a| self.target.generators().iter().all(|g| a.commutes_with(g)))
    }
}

/// `[G, A]`, generated by the `g⁻¹g^a`.
pub fn commutator_span(inst: &ActionInstance) -> PermGroup {
    let span = commutator_subgroup(&inst.target, &inst.actors);
    inst.target.subgroup(span.generators())
}

/// Both inclusions by generator membership.
fn same_subgroup(a: &PermGroup, b: &PermGroup) -> bool {
    a.generators().iter().all(|x| b.has(x)) && b.generators().iter().all(|x| a.has(x))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoprimeLemmaReport {
    /// `G = [G,A] C_G(A)`.
    pub commutator_times_fixed: CheckOutcome,
    /// `[G,A,A] = [G,A]`.
    pub commutator_stable: CheckOutcome,
    /// `C_{G/N}(A) = C_G(A)N/N` for every `A`-invariant normal `N`.
    pub quotient_fixed_points: CheckOutcome,
    /// `G = ∏_{a ∈ A^#} C_G(a)` for nilpotent `G` and noncyclic abelian `A`.
    pub centralizer_product: CheckOutcome,
}

impl CoprimeLemmaReport {
    pub fn parts(&self) -> [&CheckOutcome; 4] {
        [
            &self.commutator_times_fixed,
            &self.commutator_stable,
            &self.quotient_fixed_points,
            &self.centralizer_product,
        ]
    }

    pub fn any_failed(&self) -> bool {
        self.parts().iter().any(|o| o.is_fail())
    }
}

pub fn check_coprime_lemma(inst: &ActionInstance, bounds: &Bounds) -> Result<CoprimeLemmaReport> {
    if !inst.is_coprime() {
        let skip = CheckOutcome::skipped("orders not coprime");
        return Ok(CoprimeLemmaReport {
            commutator_times_fixed: skip.clone(),
            commutator_stable: skip.clone(),
            quotient_fixed_points: skip.clone(),
            centralizer_product: skip,
        });
    }
    let g = &inst.target;
    let span = commutator_span(inst);
    let fixed = inst.fixed_points(bounds)?;

    let mut gens = span.generators().to_vec();
    gens.extend(fixed.generators().iter().cloned());
    let product = g.subgroup(&gens);
    let commutator_times_fixed = if same_subgroup(&product, g) {
        CheckOutcome::Pass
    } else {
        CheckOutcome::fail(format!(
            "|[G,A] C_G(A)| = {} but |G| = {}",
            product.order(),
            g.order()
        ))
    };

    let again = g.subgroup(commutator_subgroup(&span, &inst.actors).generators());
    let commutator_stable = if same_subgroup(&again, &span) {
        CheckOutcome::Pass
    } else {
        CheckOutcome::fail(format!(
            "|[G,A,A]| = {} but |[G,A]| = {}",
            again.order(),
            span.order()
        ))
    };

    let quotient_fixed_points = check_quotient_fixed_points(inst, &fixed, bounds)?;
    let centralizer_product = check_centralizer_product(inst, bounds)?;
    Ok(CoprimeLemmaReport {
        commutator_times_fixed,
        commutator_stable,
        quotient_fixed_points,
        centralizer_product,
    })
}

fn check_quotient_fixed_points(
    inst: &ActionInstance,
    fixed: &PermGroup,
    bounds: &Bounds,
) -> Result<CheckOutcome> {
    for n in normal_subgroups(&inst.ambient, bounds)? {
        if n.is_trivial() || !inst.target.contains_group(&n) {
            continue;
        }
        let (q, hom) = coset_action(&inst.ambient, &n, bounds)?;
        let image = |h: &PermGroup| -> Result<PermGroup> {
            let gens = h
                .generators()
                .iter()
                .map(|x| hom.apply(x))
                .collect::<Result<Vec<_>>>()?;
            Ok(q.subgroup(&gens))
        };
        let g_bar = image(&inst.target)?;
        let a_bar = image(&inst.actors)?;
        let lhs = centralizer_subgroup(&g_bar, &a_bar, bounds)?;
        let rhs = image(fixed)?;
        if !same_subgroup(&lhs, &rhs) {
            return Ok(CheckOutcome::fail(format!(
                "|N| = {}: |C_(G/N)(A)| = {} but |C_G(A)N/N| = {}",
                n.order(),
                lhs.order(),
                rhs.order()
            )));
        }
    }
    Ok(CheckOutcome::Pass)
}

fn check_centralizer_product(inst: &ActionInstance, bounds: &Bounds) -> Result<CheckOutcome> {
    let g = &inst.target;
    if !is_nilpotent(g) {
        return Ok(CheckOutcome::skipped("target not nilpotent"));
    }
    if !is_abelian(&inst.actors) || is_cyclic(&inst.actors, bounds)? {
        return Ok(CheckOutcome::skipped("actors not noncyclic abelian"));
    }
    bounds.check_order(g.order())?;
    let size = g.order() as usize;
    let mut members = vec![false; size];
    members[g.rank(&g.identity()).expect("identity") as usize] = true;
    let mut current = vec![g.identity()];
    for a in inst.actors.elements(bounds)? {
        if a.is_identity() {
            continue;
        }
        let c = centralizer_subgroup(g, &inst.ambient.subgroup(&[a]), bounds)?;
        let c_elems = c.element_list(bounds)?;
        let mut next = Vec::new();
        for s in &current {
            for x in &c_elems {
                let y = s.then(x);
                let r = g.rank(&y).expect("product stays in G") as usize;
                if !members[r] {
                    members[r] = true;
                    next.push(y);
                }
            }
        }
        current.extend(next);
    }
    if current.len() == size {
        Ok(CheckOutcome::Pass)
    } else {
        Ok(CheckOutcome::fail(format!(
            "product of centralizers has {} of {} elements",
            current.len(),
            size
        )))
    }
}

/// For cyclic coprime actors: on a cyclic 2-group the action is trivial; on a
/// cyclic `p`-group it is trivial or fixes only the identity; on a
/// generalized quaternion group it is trivial, or has order 3 on `Q8`.
pub fn check_cyclic_automorphism_lemma(
    inst: &ActionInstance,
    bounds: &Bounds,
) -> Result<CheckOutcome> {
    if !inst.is_coprime() {
        return Ok(CheckOutcome::skipped("orders not coprime"));
    }
    if !is_cyclic(&inst.actors, bounds)? {
        return Ok(CheckOutcome::skipped("actors not cyclic"));
    }
    let g = &inst.target;
    let n = g.order();
    let trivial = inst.acts_trivially();
    let primes = prime_divisors(n);
    if primes.len() == 1 && is_cyclic(g, bounds)? {
        if primes[0] == 2 && !trivial {
            return Ok(CheckOutcome::fail("nontrivial coprime action on a cyclic 2-group"));
        }
        if !trivial && !inst.fixed_points(bounds)?.is_trivial() {
            return Ok(CheckOutcome::fail(
                "nontrivial action on a cyclic p-group with nontrivial fixed points",
            ));
        }
        return Ok(CheckOutcome::Pass);
    }
    if is_generalized_quaternion(g, bounds)? {
        if trivial {
            return Ok(CheckOutcome::Pass);
        }
        let induced = inst.actors.order() / inst.kernel(bounds)?.order();
        if induced == 3 && n == 8 {
            return Ok(CheckOutcome::Pass);
        }
        return Ok(CheckOutcome::fail(format!(
            "automorphism of order {induced} on a generalized quaternion group of order {n}"
        )));
    }
    Ok(CheckOutcome::skipped("target neither cyclic of prime-power order nor quaternion"))
}

/// `A` elementary abelian of order `p²` on abelian `G`: every `g^p` lies in
/// the subgroup generated by the `C_G(a)`, `a ∈ A^#`.
pub fn check_rank_expo(inst: &ActionInstance, bounds: &Bounds) -> Result<CheckOutcome> {
    let a = &inst.actors;
    let a_order = a.order();
    let p = match prime_divisors(a_order).as_slice() {
        [p] if (*p as u128) * (*p as u128) == a_order => *p,
        _ => return Ok(CheckOutcome::skipped("actors not of order p^2")),
    };
    if is_cyclic(a, bounds)? {
        return Ok(CheckOutcome::skipped("actors cyclic"));
    }
    let g = &inst.target;
    if !is_abelian(g) {
        return Ok(CheckOutcome::skipped("target not abelian"));
    }
    let mut gens = Vec::new();
    for x in a.elements(bounds)? {
        if x.is_identity() {
            continue;
        }
        let c = centralizer_subgroup(g, &inst.ambient.subgroup(&[x]), bounds)?;
        gens.extend(c.generators().iter().cloned());
    }
    let sum = g.subgroup(&gens);
    for x in g.elements(bounds)? {
        let y = x.pow(p as i64);
        if !sum.has(&y) {
            return Ok(CheckOutcome::fail(format!("{y} = {x}^{p} outside the centralizer sum")));
        }
    }
    Ok(CheckOutcome::Pass)
}

/// Actors forming a Frobenius group `FH` with `C_G(F) = 1` and
/// `gcd(|G|, |F|) = 1`: `G = ⟨C_G(H)^f : f ∈ F⟩`.
pub fn check_frobenius_generation(inst: &ActionInstance, bounds: &Bounds) -> Result<CheckOutcome> {
    let g = &inst.target;
    let Some(fh) = frobenius_structure(&inst.actors, bounds)? else {
        return Ok(CheckOutcome::skipped("actors not a Frobenius group"));
    };
    if gcd_u128(g.order(), fh.kernel.order()) != 1 {
        return Ok(CheckOutcome::skipped("|G| and |F| not coprime"));
    }
    if !centralizer_subgroup(g, &fh.kernel, bounds)?.is_trivial() {
        return Ok(CheckOutcome::skipped("C_G(F) nontrivial"));
    }
    let c = centralizer_subgroup(g, &fh.complement, bounds)?;
    let mut gens = Vec::new();
    for f in fh.kernel.elements(bounds)? {
        gens.extend(c.generators().iter().map(|x| x.conjugate_by(&f)));
    }
    let generated = g.subgroup(&gens);
    if same_subgroup(&generated, g) {
        Ok(CheckOutcome::Pass)
    } else {
        Ok(CheckOutcome::fail(format!(
            "conjugates of C_G(H) generate {} of {}",
            generated.order(),
            g.order()
        )))
    }
}

fn prime_order_actor(inst: &ActionInstance) -> Option<(u64, Permutation)> {
    let n = inst.actors.order();
    if n > u64::MAX as u128 || !is_prime(n as u64) {
        return None;
    }
    inst.actors.generators().first().map(|a| (n as u64, a.clone()))
}

/// `x · x^α ⋯ x^{α^{p-1}} = 1` for every `x`, with `α` generating actors of
/// prime order `p`.
pub fn is_splitting(inst: &ActionInstance, bounds: &Bounds) -> Result<bool> {
    let (p, alpha) = prime_order_actor(inst)
        .ok_or_else(|| GroupError::Precondition("actors must have prime order".into()))?;
    let powers: Vec<Permutation> = (0..p).map(|i| alpha.pow(i as i64)).collect();
    for x in inst.target.elements(bounds)? {
        let mut prod = inst.ambient.identity();
        for a in &powers {
            prod = prod.then(&x.conjugate_by(a));
        }
        if !prod.is_identity() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every `xα` has order `p` in the container.
pub fn is_splitting_by_orders(inst: &ActionInstance, bounds: &Bounds) -> Result<bool> {
    let (p, alpha) = prime_order_actor(inst)
        .ok_or_else(|| GroupError::Precondition("actors must have prime order".into()))?;
    for x in inst.target.elements(bounds)? {
        if x.then(&alpha).order() != p {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn check_splitting_consistency(inst: &ActionInstance, bounds: &Bounds) -> Result<CheckOutcome> {
    if prime_order_actor(inst).is_none() {
        return Ok(CheckOutcome::skipped("actors not of prime order"));
    }
    let by_product = is_splitting(inst, bounds)?;
    let by_orders = is_splitting_by_orders(inst, bounds)?;
    if by_product == by_orders {
        Ok(CheckOutcome::Pass)
    } else {
        Ok(CheckOutcome::fail(format!(
            "product test says {by_product}, order test says {by_orders}"
        )))
    }
}

/// A fixed-point-free automorphism of prime order `p ∤ |G|` forces `G`
/// nilpotent.
pub fn check_fpf_nilpotent(inst: &ActionInstance, bounds: &Bounds) -> Result<CheckOutcome> {
    let Some((p, _)) = prime_order_actor(inst) else {
        return Ok(CheckOutcome::skipped("actors not of prime order"));
    };
    if inst.target.order() % p as u128 == 0 {
        return Ok(CheckOutcome::skipped("p divides |G|"));
    }
    if !inst.fixed_points(bounds)?.is_trivial() {
        return Ok(CheckOutcome::skipped("action has fixed points"));
    }
    if is_nilpotent(&inst.target) {
        Ok(CheckOutcome::Pass)
    } else {
        Ok(CheckOutcome::fail("fixed-point-free action on a non-nilpotent group"))
    }
}

/// `(b, y, g)` such that `B = ⟨b, y⟩` is noncyclic of order `p²`, `g` is a
/// `p'`-element centralized by `b` but not by `y`, and the `B`-conjugates of
/// `g` generate a `p'`-group. Such a triple exists exactly when some
/// noncyclic `B` of order `p²` normalizes a `p'`-subgroup `Q` with
/// `[Q, B] ≠ 1`, because such a `Q` is generated by the `C_Q(b)`, `b ∈ B^#`.
pub fn eleme_counterexample(
    g: &PermGroup,
    bounds: &Bounds,
) -> Result<Option<(Permutation, Permutation, Permutation)>> {
    let order = g.order();
    for p in prime_divisors(order) {
        if order % (p as u128 * p as u128) != 0 {
            continue;
        }
        for class in g.conjugacy_classes(bounds)? {
            if class.element_order != p {
                continue;
            }
            let b = &class.representative;
            let h = centralizer_element(g, b, bounds)?;
            if is_prime_power_of(h.order(), p) {
                continue;
            }
            let elems = h.element_list(bounds)?;
            let cyclic_b = h.subgroup(&[b.clone()]);
            let ys: Vec<&Permutation> = elems
                .iter()
                .filter(|y| y.order() == p && !cyclic_b.has(y))
                .collect();
            let xs: Vec<&Permutation> = elems
                .iter()
                .filter(|x| !x.is_identity() && x.order() % p != 0)
                .collect();
            for y in &ys {
                for x in &xs {
                    if x.commutes_with(y) {
                        continue;
                    }
                    let conj: Vec<Permutation> =
                        (0..p).map(|i| x.conjugate_by(&y.pow(i as i64))).collect();
                    if g.subgroup(&conj).order() % p as u128 != 0 {
                        return Ok(Some((b.clone(), (*y).clone(), (*x).clone())));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// In a CN-group every noncyclic `B` of order `p²` centralizes each
/// `p'`-subgroup it normalizes.
pub fn check_eleme_shadow(g: &PermGroup, bounds: &Bounds) -> Result<CheckOutcome> {
    if !is_cn(g, bounds)?.is_cn() {
        return Ok(CheckOutcome::skipped("not a CN-group"));
    }
    Ok(match eleme_counterexample(g, bounds)? {
        None => CheckOutcome::Pass,
        Some((b, y, x)) => CheckOutcome::fail(format!("B = <{b}, {y}> moves {x}")),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modular::Matrix;
    use crate::named::{cyclic, quaternion8, sl23, symmetric};
    use crate::structure::p_core;

    fn b() -> Bounds {
        Bounds::default()
    }

    fn affine(modulus: u64, rows: Vec<Vec<i64>>, k: &PermGroup) -> ActionInstance {
        let dim = rows.len();
        let m = Matrix::from_rows(modulus, &rows).unwrap();
        let action = MatrixAction::new(dim, modulus, vec![m]).unwrap();
        ActionInstance::from_matrix_action(&action, k, &b()).unwrap()
    }

    #[test]
    fn inversion_on_c5() {
        let inst = affine(5, vec![vec![4]], &cyclic(2));
        assert_eq!(commutator_span(&inst).order(), 5);
        let r = check_coprime_lemma(&inst, &b()).unwrap();
        assert!(inst.fixed_points(&b()).unwrap().is_trivial());
        assert_eq!(r.commutator_times_fixed, CheckOutcome::Pass);
        assert_eq!(r.commutator_stable, CheckOutcome::Pass);
        assert!(is_splitting(&inst, &b()).unwrap());
    }

    #[test]
    fn swap_on_c3_squared() {
        let inst = affine(3, vec![vec![0, 1], vec![1, 0]], &cyclic(2));
        let span = commutator_span(&inst);
        assert_eq!(span.order(), 3);
        assert!(!check_coprime_lemma(&inst, &b()).unwrap().any_failed());
    }

    #[test]
    fn invalid_instances_rejected() {
        let s4 = symmetric(4);
        let t = Permutation::parse_cycles(4, "(0 1)").unwrap();
        let c = Permutation::parse_cycles(4, "(0 1 2)").unwrap();
        assert!(ActionInstance::new(&s4, &[t], &[c]).is_err());
    }

    #[test]
    fn cyclic_automorphisms() {
        let inst = affine(7, vec![vec![2]], &cyclic(3));
        assert_eq!(check_cyclic_automorphism_lemma(&inst, &b()).unwrap(), CheckOutcome::Pass);
        assert!(inst.fixed_points(&b()).unwrap().is_trivial());
        assert!(is_splitting(&inst, &b()).unwrap());
        let g = sl23();
        let q = p_core(&g, 2, &b()).unwrap();
        let three = g
            .conjugacy_class_representatives(&b())
            .unwrap()
            .into_iter()
            .find(|x| x.order() == 3)
            .unwrap();
        let inst = ActionInstance::new(&g, q.generators(), &[three]).unwrap();
        assert_eq!(check_cyclic_automorphism_lemma(&inst, &b()).unwrap(), CheckOutcome::Pass);
    }

    #[test]
    fn splitting_on_c4() {
        // inversion: x · x⁻¹ = 1 for every x
        let inversion = affine(4, vec![vec![3]], &cyclic(2));
        assert!(is_splitting(&inversion, &b()).unwrap());
        assert!(is_splitting_by_orders(&inversion, &b()).unwrap());
        let c4 = cyclic(4);
        let c2 = Permutation::parse_cycles(6, "(4 5)").unwrap();
        let gen = c4.generators()[0].embed(0, 6);
        let ambient = PermGroup::closure(6, &[gen.clone(), c2.clone()]).unwrap();
        let trivial = ActionInstance::new(&ambient, &[gen], &[c2]).unwrap();
        assert!(!is_splitting(&trivial, &b()).unwrap());
        assert!(!is_splitting_by_orders(&trivial, &b()).unwrap());
    }

    #[test]
    fn eleme_reduced_search() {
        assert_eq!(check_eleme_shadow(&symmetric(4), &b()).unwrap(), CheckOutcome::Pass);
        assert_eq!(check_eleme_shadow(&quaternion8(), &b()).unwrap(), CheckOutcome::Pass);
        // S3 × C2: a reflection and the central involution invert C3
        let s3c2 = crate::named::direct_product(&symmetric(3), &cyclic(2));
        assert!(eleme_counterexample(&s3c2, &b()).unwrap().is_some());
    }
    fn diag(m: u64, d: &[u64]) -> Matrix {
        Matrix::diagonal(m, d)
    }

    #[test]
    fn klein_group_on_c3_squared() {
        use crate::instances::matrix_instance;
        let inst = matrix_instance(3, vec![diag(3, &[2, 1]), diag(3, &[1, 2])], &b()).unwrap();
        let r = check_coprime_lemma(&inst, &b()).unwrap();
        assert_eq!(r.centralizer_product, CheckOutcome::Pass);
        assert!(!r.any_failed());
        assert_eq!(check_rank_expo(&inst, &b()).unwrap(), CheckOutcome::Pass);
        let on_z4 = matrix_instance(4, vec![diag(4, &[3, 1]), diag(4, &[1, 3])], &b()).unwrap();
        assert_eq!(check_rank_expo(&on_z4, &b()).unwrap(), CheckOutcome::Pass);
    }

    #[test]
    fn coprime_action_on_c8_is_trivial() {
        let c8 = cyclic(8);
        let c3 = cyclic(3);
        let ambient = crate::named::direct_product(&c8, &c3);
        let t = c8.generators()[0].embed(0, 11);
        let a = c3.generators()[0].embed(8, 11);
        let inst = ActionInstance::new(&ambient, &[t], &[a]).unwrap();
        assert_eq!(check_cyclic_automorphism_lemma(&inst, &b()).unwrap(), CheckOutcome::Pass);
    }

    #[test]
    fn s3_generation_on_plane() {
        use crate::constructors::{fpf_search, Exclude};
        for p in [7, 13] {
            let k = symmetric(3);
            let action = fpf_search(&k, 2, p, Exclude::TwoElements, &b()).unwrap().unwrap();
            let inst = ActionInstance::from_matrix_action(&action, &k, &b()).unwrap();
            assert_eq!(check_frobenius_generation(&inst, &b()).unwrap(), CheckOutcome::Pass);
        }
    }

    #[test]
    fn heisenberg_fpf_is_nilpotent() {
        let inst = crate::instances::heisenberg_instance(7, 2, 2).unwrap();
        assert_eq!(inst.target().order(), 343);
        assert!(!is_abelian(inst.target()));
        assert!(inst.fixed_points(&b()).unwrap().is_trivial());
        assert_eq!(check_fpf_nilpotent(&inst, &b()).unwrap(), CheckOutcome::Pass);
        assert!(is_splitting(&inst, &b()).unwrap());
        let inversion = affine(15, vec![vec![14]], &cyclic(2));
        assert_eq!(check_fpf_nilpotent(&inversion, &b()).unwrap(), CheckOutcome::Pass);
    }
}
