//! Centralizers, normalizers, Sylow subgroups, cores, the Fitting subgroup
//! and the standard series.

use crate::chain::StabChain;
use crate::group::{is_prime_power_of, p_part, prime_divisors, PermGroup};
use crate::hom::{coset_action, GroupHom};
use crate::perm::Permutation;
use crate::{Bounds, GroupError, Result};

/// One term of the ascending Fitting series.
#[derive(Clone, Debug)]
pub struct NormalSeriesEntry {
    pub subgroup: PermGroup,
    /// Order of this term over the previous one.
    pub quotient_order: u128,
}

pub fn centralizer_element(g: &PermGroup, x: &Permutation, bounds: &Bounds) -> Result<PermGroup> {
    if !g.contains(x)? {
        return Err(GroupError::NotInGroup);
    }
    if x.is_identity() {
        return Ok(g.clone());
    }
    g.conjugation_stabilizer(x, g, bounds)
}

/// `C_G(H)`; `H` need not lie inside `G`.
pub fn centralizer_subgroup(g: &PermGroup, h: &PermGroup, bounds: &Bounds) -> Result<PermGroup> {
    let mut gens = g.generators().to_vec();
    gens.extend(h.generators().iter().cloned());
    let universe = PermGroup::with_base(g.degree(), &gens, &g.chain().base());
    let mut c = g.clone();
    for y in h.generators() {
        if c.is_trivial() {
            break;
        }
        c = c.conjugation_stabilizer(y, &universe, bounds)?;
    }
    Ok(g.subgroup(c.generators()))
}

pub fn center(g: &PermGroup, bounds: &Bounds) -> Result<PermGroup> {
    centralizer_subgroup(g, g, bounds)
}

pub fn is_normal(g: &PermGroup, h: &PermGroup) -> bool {
    g.contains_group(h)
        && h.generators()
            .iter()
            .all(|y| g.generators().iter().all(|t| h.has(&y.conjugate_by(t))))
}

/// Normal closure of `seeds` under conjugation by `g`. Stops early, returning
/// `None`, as soon as `abort` holds for the order reached so far.
pub(crate) fn normal_closure_until(
    g: &PermGroup,
    seeds: &[Permutation],
    abort: impl Fn(u128) -> bool,
) -> Option<PermGroup> {
    let mut chain = StabChain::build(g.degree(), &[], &g.chain().base());
    let mut queue: Vec<Permutation> = Vec::new();
    for s in seeds {
        if chain.extend(s) {
            queue.push(s.clone());
            if abort(chain.order()) {
                return None;
            }
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let n = queue[head].clone();
        head += 1;
        for t in g.generators() {
            let c = n.conjugate_by(t);
            if chain.extend(&c) {
                if abort(chain.order()) {
                    return None;
                }
                queue.push(c);
            }
        }
    }
    Some(PermGroup::from_chain(g.degree(), chain))
}

/// `⟨s^g : s ∈ seeds, g ∈ G⟩`.
pub fn normal_closure(g: &PermGroup, seeds: &[Permutation]) -> PermGroup {
    normal_closure_until(g, seeds, |_| false).expect("never aborts")
}

/// `[A, B]`, the normal closure in `⟨A, B⟩` of the generator commutators.
pub fn commutator_subgroup(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let mut gens = a.generators().to_vec();
    gens.extend(b.generators().iter().cloned());
    let joint = PermGroup::closure(a.degree(), &gens).expect("equal degrees");
    let comms: Vec<Permutation> = a
        .generators()
        .iter()
        .flat_map(|x| b.generators().iter().map(move |y| x.commutator(y)))
        .collect();
    normal_closure(&joint, &comms)
}

pub fn derived_subgroup(g: &PermGroup) -> PermGroup {
    commutator_subgroup(g, g)
}

/// `G = D₀ ≥ D₁ ≥ …` down to the point where it stabilizes.
pub fn derived_series(g: &PermGroup) -> Vec<PermGroup> {
    let mut series = vec![g.clone()];
    loop {
        let last = series.last().expect("nonempty");
        let next = derived_subgroup(last);
        if next.order() == last.order() {
            return series;
        }
        series.push(next);
    }
}

/// `G = γ₁ ≥ γ₂ ≥ …` down to the point where it stabilizes.
pub fn lower_central_series(g: &PermGroup) -> Vec<PermGroup> {
    let mut series = vec![g.clone()];
    loop {
        let last = series.last().expect("nonempty");
        let next = commutator_subgroup(last, g);
        let next = g.subgroup(next.generators());
        if next.order() == last.order() {
            return series;
        }
        series.push(next);
    }
}

pub fn is_soluble(g: &PermGroup) -> bool {
    derived_series(g).last().expect("nonempty").order() == 1
}

/// Nilpotency via the lower central series reaching the identity.
pub fn is_nilpotent(g: &PermGroup) -> bool {
    if g.order() == 1 || prime_divisors(g.order()).len() == 1 {
        return true;
    }
    lower_central_series(g).last().expect("nonempty").order() == 1
}

/// `N_G(H)` by filtering the elements of `G`.
pub fn normalizer(g: &PermGroup, h: &PermGroup, bounds: &Bounds) -> Result<PermGroup> {
    let h = g.subgroup(h.generators());
    let mut chain = StabChain::build(g.degree(), h.generators(), &g.chain().base());
    for x in g.elements(bounds)? {
        if chain.contains(&x) {
            continue;
        }
        if h.generators().iter().all(|y| h.has(&y.conjugate_by(&x))) {
            chain.extend(&x);
            if chain.order() == g.order() {
                break;
            }
        }
    }
    Ok(PermGroup::from_chain(g.degree(), chain))
}

fn is_p_element(x: &Permutation, p: u64) -> bool {
    is_prime_power_of(x.order() as u128, p)
}

/// A Sylow `p`-subgroup. Uses `O_p(G)` when it is already Sylow, and
/// otherwise descends into the centralizer of a noncentral `p`-element whose
/// class size is prime to `p`. Without such an element the subgroup is grown
/// from a `p`-element of largest order (the lexicographically least one) by
/// normalizer ascent.
pub fn sylow(g: &PermGroup, p: u64, bounds: &Bounds) -> Result<PermGroup> {
    let target = p_part(g.order(), p);
    if target == 1 {
        return Ok(g.subgroup(&[]));
    }
    if target == g.order() {
        return Ok(g.clone());
    }
    let core = p_core(g, p, bounds)?;
    if core.order() == target {
        return Ok(core);
    }
    for class in g.conjugacy_classes(bounds)? {
        if class.size > 1
            && class.size % p != 0
            && is_prime_power_of(class.element_order as u128, p)
        {
            let c = centralizer_element(g, &class.representative, bounds)?;
            return Ok(g.subgroup(sylow(&c, p, bounds)?.generators()));
        }
    }
    let mut best: Option<(u64, Permutation)> = None;
    for x in g.elements(bounds)? {
        let o = x.order();
        if o > 1 && is_prime_power_of(o as u128, p) {
            let better = match &best {
                None => true,
                Some((bo, bx)) => o > *bo || (o == *bo && x < *bx),
            };
            if better {
                best = Some((o, x));
            }
        }
    }
    let (_, start) = best.expect("p divides |G|, so a p-element exists");
    let mut psub = g.subgroup(&[start]);
    while psub.order() < target {
        let n = normalizer(g, &psub, bounds)?;
        let next = n
            .elements(bounds)?
            .find(|x| is_p_element(x, p) && !psub.has(x))
            .expect("N_G(P)/P has order divisible by p");
        let mut gens = psub.generators().to_vec();
        gens.push(next);
        psub = g.subgroup(&gens);
    }
    Ok(psub)
}

/// Largest normal `p`-subgroup: generated by the classes of `p`-elements
/// whose normal closures are `p`-groups.
pub fn p_core(g: &PermGroup, p: u64, bounds: &Bounds) -> Result<PermGroup> {
    if p_part(g.order(), p) == 1 {
        return Ok(g.subgroup(&[]));
    }
    if is_prime_power_of(g.order(), p) {
        return Ok(g.clone());
    }
    let mut core = StabChain::build(g.degree(), &[], &g.chain().base());
    for class in g.conjugacy_classes(bounds)? {
        let x = &class.representative;
        if class.element_order == 1 || !is_prime_power_of(class.element_order as u128, p) {
            continue;
        }
        if core.contains(x) {
            continue;
        }
        if normal_closure_until(g, std::slice::from_ref(x), |o| !is_prime_power_of(o, p)).is_some() {
            let mut gens = core.strong_generators().to_vec();
            gens.push(x.clone());
            let joined = normal_closure(g, &gens);
            core = joined.chain().clone();
        }
    }
    Ok(PermGroup::from_chain(g.degree(), core))
}

/// The Fitting subgroup, as the product of the `p`-cores.
pub fn fitting(g: &PermGroup, bounds: &Bounds) -> Result<PermGroup> {
    let mut gens = Vec::new();
    for p in prime_divisors(g.order()) {
        gens.extend(p_core(g, p, bounds)?.generators().iter().cloned());
    }
    Ok(g.subgroup(&gens))
}

/// Ascending Fitting series `1 < F₁ < F₂ < … < G` as subgroups of `G`.
pub fn fitting_series(g: &PermGroup, bounds: &Bounds) -> Result<Vec<NormalSeriesEntry>> {
    if !is_soluble(g) {
        return Err(GroupError::NotSoluble);
    }
    let mut series = Vec::new();
    let mut quotient = g.clone();
    let mut projection: Option<GroupHom> = None;
    while quotient.order() > 1 {
        let f = fitting(&quotient, bounds)?;
        let quotient_order = f.order();
        let (next, hom) = coset_action(&quotient, &f, bounds)?;
        // preimage in G of F(current quotient): kernel of G -> next quotient
        let images: Vec<Permutation> = match &projection {
            None => hom.generator_images().to_vec(),
            Some(prev) => g
                .generators()
                .iter()
                .map(|x| hom.apply(&prev.apply(x).expect("in domain")).expect("in quotient"))
                .collect(),
        };
        let to_next = GroupHom::by_images(g, &next, images)?;
        series.push(NormalSeriesEntry {
            subgroup: to_next.kernel(),
            quotient_order,
        });
        quotient = next;
        projection = Some(to_next);
    }
    Ok(series)
}

/// Length of the ascending Fitting series; `0` for the trivial group.
pub fn fitting_height(g: &PermGroup, bounds: &Bounds) -> Result<usize> {
    if !is_soluble(g) {
        return Err(GroupError::NotSoluble);
    }
    let mut height = 0;
    let mut quotient = g.clone();
    while quotient.order() > 1 {
        let f = fitting(&quotient, bounds)?;
        quotient = coset_action(&quotient, &f, bounds)?.0;
        height += 1;
    }
    Ok(height)
}

fn push_distinct(list: &mut Vec<PermGroup>, n: PermGroup) -> bool {
    if list.iter().any(|m| m.same_group(&n)) {
        false
    } else {
        list.push(n);
        true
    }
}

/// Normal closures of the nontrivial class representatives, without repeats.
pub fn class_normal_closures(g: &PermGroup, bounds: &Bounds) -> Result<Vec<PermGroup>> {
    let mut out: Vec<PermGroup> = Vec::new();
    for rep in g.conjugacy_class_representatives(bounds)? {
        if rep.is_identity() {
            continue;
        }
        push_distinct(&mut out, normal_closure(g, &[rep]));
    }
    out.sort_by_key(|n| n.order());
    Ok(out)
}

pub fn minimal_normal_subgroups(g: &PermGroup, bounds: &Bounds) -> Result<Vec<PermGroup>> {
    let closures = class_normal_closures(g, bounds)?;
    Ok(closures
        .iter()
        .filter(|n| {
            !closures
                .iter()
                .any(|m| m.order() < n.order() && n.contains_group(m))
        })
        .cloned()
        .collect())
}

pub fn socle(g: &PermGroup, bounds: &Bounds) -> Result<PermGroup> {
    let gens: Vec<Permutation> = minimal_normal_subgroups(g, bounds)?
        .iter()
        .flat_map(|n| n.generators().to_vec())
        .collect();
    Ok(g.subgroup(&gens))
}

/// Every normal subgroup, as joins of normal closures of classes, sorted by order.
pub fn normal_subgroups(g: &PermGroup, bounds: &Bounds) -> Result<Vec<PermGroup>> {
    let mut all = vec![g.subgroup(&[])];
    for n in class_normal_closures(g, bounds)? {
        push_distinct(&mut all, n);
    }
    let mut i = 0;
    while i < all.len() {
        for j in 0..i {
            let mut gens = all[i].generators().to_vec();
            gens.extend(all[j].generators().iter().cloned());
            let join = g.subgroup(&gens);
            push_distinct(&mut all, join);
        }
        i += 1;
    }
    all.sort_by_key(|n| n.order());
    Ok(all)
}
