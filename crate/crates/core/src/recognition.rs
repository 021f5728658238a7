//! Structural recognition tests used by the classifier's case split.

use std::collections::HashSet;

use crate::group::{is_prime_power_of, p_part, prime_divisors, PermGroup};
use crate::perm::{gcd, Permutation};
use crate::structure::{
    centralizer_subgroup, class_normal_closures, is_nilpotent, normal_subgroups, p_core, socle,
    sylow,
};
use crate::{Bounds, Result};

/// A Frobenius decomposition `G = K ⋊ H`.
#[derive(Clone, Debug)]
pub struct FrobeniusStructure {
    pub kernel: PermGroup,
    pub complement: PermGroup,
}

pub fn is_cyclic(g: &PermGroup, bounds: &Bounds) -> Result<bool> {
    let n = g.order();
    if n == 1 {
        return Ok(true);
    }
    Ok(g
        .conjugacy_classes(bounds)?
        .iter()
        .any(|c| c.element_order as u128 == n))
}

pub fn is_abelian(g: &PermGroup) -> bool {
    let gens = g.generators();
    gens.iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.commutes_with(b)))
}

fn involution_count(g: &PermGroup, bounds: &Bounds) -> Result<u64> {
    Ok(g
        .conjugacy_classes(bounds)?
        .iter()
        .filter(|c| c.element_order == 2)
        .map(|c| c.size)
        .sum())
}

/// Non-cyclic 2-group of order at least 8 with a unique involution (Q8 included).
pub fn is_generalized_quaternion(g: &PermGroup, bounds: &Bounds) -> Result<bool> {
    let n = g.order();
    if n < 8 || !is_prime_power_of(n, 2) {
        return Ok(false);
    }
    Ok(involution_count(g, bounds)? == 1 && !is_cyclic(g, bounds)?)
}

/// Witness for `G ≅ C × Q` with `C` cyclic of odd order and `Q` generalized quaternion.
#[derive(Clone, Debug)]
pub struct CyclicTimesQuaternion {
    pub odd_part: PermGroup,
    pub quaternion_part: PermGroup,
}

pub fn decompose_cyclic_odd_times_quaternion(
    g: &PermGroup,
    bounds: &Bounds,
) -> Result<Option<CyclicTimesQuaternion>> {
    if !is_nilpotent(g) {
        return Ok(None);
    }
    let two = p_core(g, 2, bounds)?;
    if !is_generalized_quaternion(&two, bounds)? {
        return Ok(None);
    }
    let mut odd_gens = Vec::new();
    for p in prime_divisors(g.order()).into_iter().filter(|&p| p != 2) {
        odd_gens.extend(p_core(g, p, bounds)?.generators().iter().cloned());
    }
    let odd = g.subgroup(&odd_gens);
    if !is_cyclic(&odd, bounds)? {
        return Ok(None);
    }
    Ok(Some(CyclicTimesQuaternion {
        odd_part: odd,
        quaternion_part: two,
    }))
}

/// Whether `h` fixes no nontrivial element of `n` under conjugation.
fn acts_fixed_point_freely(h: &Permutation, n: &PermGroup, bounds: &Bounds) -> Result<bool> {
    Ok(n.elements(bounds)?
        .all(|x| x.is_identity() || !x.commutes_with(h)))
}

fn check_complement(
    h: &PermGroup,
    target: u128,
    allowed: &HashSet<u64>,
    g: &PermGroup,
    bounds: &Bounds,
) -> Result<bool> {
    if h.order() != target {
        return Ok(false);
    }
    for x in h.elements(bounds)? {
        if !x.is_identity() && !allowed.contains(&g.rank(&x).expect("subgroup element")) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Searches for a normal subgroup `K` and a complement `H` acting on `K`
/// without nontrivial fixed points. Complements are sought among Sylow
/// subgroups, cyclic subgroups and 2-generated subgroups.
pub fn frobenius_structure(g: &PermGroup, bounds: &Bounds) -> Result<Option<FrobeniusStructure>> {
    let order = g.order();
    bounds.check_order(order)?;
    if order < 6 {
        return Ok(None);
    }
    let elements = g.element_list(bounds)?;
    let reps = g.conjugacy_class_representatives(bounds)?;
    for n in normal_subgroups(g, bounds)? {
        let k = n.order();
        if k == 1 || k == order {
            continue;
        }
        let m = order / k;
        if gcd(k as u64, m as u64) != 1 {
            continue;
        }
        let mut allowed: HashSet<u64> = HashSet::new();
        for x in &elements {
            let o = x.order() as u128;
            if o > 1 && m % o == 0 && acts_fixed_point_freely(x, &n, bounds)? {
                allowed.insert(g.rank(x).expect("element of g"));
            }
        }
        let in_allowed = |x: &Permutation| allowed.contains(&g.rank(x).expect("element of g"));
        let found = |h: PermGroup| FrobeniusStructure {
            kernel: n.clone(),
            complement: h,
        };
        let primes = prime_divisors(m);
        if primes.len() == 1 {
            let s = sylow(g, primes[0], bounds)?;
            if check_complement(&s, m, &allowed, g, bounds)? {
                return Ok(Some(found(s)));
            }
        }
        let firsts: Vec<&Permutation> = reps.iter().filter(|x| in_allowed(x)).collect();
        for a in &firsts {
            if a.order() as u128 == m {
                return Ok(Some(found(g.subgroup(&[(*a).clone()]))));
            }
        }
        for a in &firsts {
            for b in elements.iter().filter(|x| in_allowed(x)) {
                let h = g.subgroup(&[(*a).clone(), b.clone()]);
                if h.order() == m && check_complement(&h, m, &allowed, g, bounds)? {
                    return Ok(Some(found(h)));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_simple(g: &PermGroup, bounds: &Bounds) -> Result<bool> {
    if g.order() == 1 {
        return Ok(false);
    }
    Ok(class_normal_closures(g, bounds)?
        .iter()
        .all(|n| n.order() == g.order()))
}

/// Socle nonabelian simple with trivial centralizer.
pub fn is_almost_simple(g: &PermGroup, bounds: &Bounds) -> Result<bool> {
    if g.order() == 1 {
        return Ok(false);
    }
    let s = socle(g, bounds)?;
    if is_abelian(&s) || !is_simple(&s, bounds)? {
        return Ok(false);
    }
    Ok(centralizer_subgroup(g, &s, bounds)?.order() == 1)
}

/// Order 24, not nilpotent, normal generalized quaternion Sylow 2-subgroup.
pub fn is_sl23(g: &PermGroup, bounds: &Bounds) -> Result<bool> {
    if g.order() != 24 || is_nilpotent(g) {
        return Ok(false);
    }
    let two = p_core(g, 2, bounds)?;
    Ok(two.order() == p_part(24, 2) && is_generalized_quaternion(&two, bounds)?)
}

/// An involution `a` and an element `c = [x, a]` of odd order `> 1`, so that
/// `⟨a, c⟩` is dihedral of order `2|c|` and Frobenius.
pub fn find_dihedral_frobenius(
    g: &PermGroup,
    bounds: &Bounds,
) -> Result<Option<(Permutation, Permutation)>> {
    let involutions: Vec<Permutation> = g
        .conjugacy_classes(bounds)?
        .into_iter()
        .filter(|c| c.element_order == 2)
        .map(|c| c.representative)
        .collect();
    for a in &involutions {
        for x in g.elements(bounds)? {
            let c = x.commutator(a);
            let o = c.order();
            if o > 1 && o % 2 == 1 {
                let d = g.subgroup(&[a.clone(), c.clone()]);
                if d.order() == 2 * o as u128 {
                    return Ok(Some((a.clone(), c)));
                }
            }
        }
    }
    Ok(None)
}
