//! CN test and the case split of `G/F(G)` for finite CN-groups.

use serde::Serialize;

use crate::group::{is_prime_power_of, prime_divisors, PermGroup};
use crate::hom::coset_action;
use crate::outcome::CheckOutcome;
use crate::perm::Permutation;
use crate::recognition::{
    decompose_cyclic_odd_times_quaternion, frobenius_structure, is_almost_simple, is_cyclic,
    is_generalized_quaternion, is_sl23,
};
use crate::structure::{
    centralizer_element, centralizer_subgroup, fitting, fitting_height, is_nilpotent, is_soluble,
    minimal_normal_subgroups, p_core, sylow,
};
use crate::{Bounds, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CnVerdict {
    Cn,
    /// A nontrivial element whose centralizer is not nilpotent.
    Witness(Permutation),
}

impl CnVerdict {
    pub fn is_cn(&self) -> bool {
        matches!(self, CnVerdict::Cn)
    }
}

/// Checks one representative per nontrivial conjugacy class.
pub fn is_cn(g: &PermGroup, bounds: &Bounds) -> Result<CnVerdict> {
    let cached = match g.cn_cache().get() {
        Some(w) => w.clone(),
        None => {
            let mut witness = None;
            for class in g.conjugacy_classes(bounds)? {
                let x = &class.representative;
                if !x.is_identity() && !is_nilpotent(&centralizer_element(g, x, bounds)?) {
                    witness = Some(x.clone());
                    break;
                }
            }
            g.cn_cache().get_or_init(|| witness).clone()
        }
    };
    Ok(match cached {
        None => CnVerdict::Cn,
        Some(x) => CnVerdict::Witness(x),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Case {
    Cyclic,
    CyclicOddTimesQuaternion,
    FrobeniusQuotient,
    SL23,
    AlmostSimple,
    NotCN,
    TheoremViolation,
}

impl Case {
    pub const ALL: [Case; 7] = [
        Case::Cyclic,
        Case::CyclicOddTimesQuaternion,
        Case::FrobeniusQuotient,
        Case::SL23,
        Case::AlmostSimple,
        Case::NotCN,
        Case::TheoremViolation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Case::Cyclic => "Cyclic",
            Case::CyclicOddTimesQuaternion => "CyclicOddTimesQuaternion",
            Case::FrobeniusQuotient => "FrobeniusQuotient",
            Case::SL23 => "SL23",
            Case::AlmostSimple => "AlmostSimple",
            Case::NotCN => "NotCN",
            Case::TheoremViolation => "TheoremViolation",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SideCondition {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusData {
    pub kernel_order: u128,
    pub complement_order: u128,
}

/// Field order here is the serialization order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub group_name: String,
    pub group_order: u128,
    pub is_cn: bool,
    pub cn_witness: Option<String>,
    pub fitting_order: u128,
    pub fitting_primes: Vec<u64>,
    pub quotient_order: u128,
    pub case: Case,
    pub side_conditions: Vec<SideCondition>,
    pub frobenius_data: Option<FrobeniusData>,
}

fn condition(name: &str, passed: bool) -> SideCondition {
    SideCondition {
        name: name.to_string(),
        passed,
    }
}

/// The quotient `G/F` as a permutation group.
fn fitting_quotient(g: &PermGroup, f: &PermGroup, bounds: &Bounds) -> Result<PermGroup> {
    if f.is_trivial() {
        return Ok(g.clone());
    }
    Ok(coset_action(g, f, bounds)?.0)
}

pub fn classify(name: &str, g: &PermGroup, bounds: &Bounds) -> Result<ClassificationReport> {
    bounds.check_order(g.order())?;
    let verdict = is_cn(g, bounds)?;
    let f = fitting(g, bounds)?;
    let fitting_primes = prime_divisors(f.order());
    let mut report = ClassificationReport {
        group_name: name.to_string(),
        group_order: g.order(),
        is_cn: verdict.is_cn(),
        cn_witness: None,
        fitting_order: f.order(),
        fitting_primes: fitting_primes.clone(),
        quotient_order: g.order() / f.order(),
        case: Case::NotCN,
        side_conditions: Vec::new(),
        frobenius_data: None,
    };
    if let CnVerdict::Witness(x) = verdict {
        report.cn_witness = Some(x.to_string());
        return Ok(report);
    }
    let q = fitting_quotient(g, &f, bounds)?;
    let (case, conditions) = if is_cyclic(&q, bounds)? {
        (Case::Cyclic, Vec::new())
    } else if decompose_cyclic_odd_times_quaternion(&q, bounds)?.is_some() {
        (Case::CyclicOddTimesQuaternion, Vec::new())
    } else if let Some(data) = cyclic_frobenius(&q, bounds)? {
        report.frobenius_data = Some(data);
        let p_group = fitting_primes.len() <= 1;
        (
            Case::FrobeniusQuotient,
            vec![condition("F is a p-group", p_group)],
        )
    } else if is_sl23(&q, bounds)? {
        (
            Case::SL23,
            vec![
                condition("F nilpotent", is_nilpotent(&f)),
                condition("|pi(F)| >= 2", fitting_primes.len() >= 2),
                condition("2 in pi(F)", fitting_primes.contains(&2)),
            ],
        )
    } else if is_almost_simple(&q, bounds)? {
        (
            Case::AlmostSimple,
            vec![condition("F is a 2-group", is_prime_power_of(f.order(), 2))],
        )
    } else {
        (
            Case::TheoremViolation,
            vec![condition("G/F matches a listed case", false)],
        )
    };
    report.case = if conditions.iter().all(|c| c.passed) {
        case
    } else {
        Case::TheoremViolation
    };
    report.side_conditions = conditions;
    Ok(report)
}

/// Frobenius structure with cyclic kernel of odd order and cyclic complement.
fn cyclic_frobenius(q: &PermGroup, bounds: &Bounds) -> Result<Option<FrobeniusData>> {
    let Some(s) = frobenius_structure(q, bounds)? else {
        return Ok(None);
    };
    let k = &s.kernel;
    let h = &s.complement;
    if k.order() % 2 == 1 && is_cyclic(k, bounds)? && is_cyclic(h, bounds)? {
        Ok(Some(FrobeniusData {
            kernel_order: k.order(),
            complement_order: h.order(),
        }))
    } else {
        Ok(None)
    }
}

/// For a CN group with at least two primes dividing `|F|`: every `p`-element
/// `a` outside `O_p(G)`, for `p` dividing `|F|`, satisfies `C_P(a) = 1` and
/// `⟨a⟩ ∩ F = 1`.
pub fn lemma41_sweep(g: &PermGroup, bounds: &Bounds) -> Result<CheckOutcome> {
    if !is_cn(g, bounds)?.is_cn() {
        return Ok(CheckOutcome::skipped("not a CN-group"));
    }
    let f = fitting(g, bounds)?;
    let primes = prime_divisors(f.order());
    if primes.len() < 2 {
        return Ok(CheckOutcome::skipped("|pi(F)| < 2"));
    }
    let reps = g.conjugacy_class_representatives(bounds)?;
    for &p in &primes {
        let core = p_core(g, p, bounds)?;
        for a in &reps {
            let o = a.order();
            if o == 1 || !is_prime_power_of(o as u128, p) || core.has(a) {
                continue;
            }
            let c = centralizer_subgroup(&core, &g.subgroup(&[a.clone()]), bounds)?;
            if !c.is_trivial() {
                return Ok(CheckOutcome::fail(format!(
                    "p = {p}, a = {a}: |C_P(a)| = {}",
                    c.order()
                )));
            }
            let mut x = a.clone();
            for _ in 1..o {
                if f.has(&x) {
                    return Ok(CheckOutcome::fail(format!(
                        "p = {p}, a = {a}: {x} lies in F"
                    )));
                }
                x = x.then(a);
            }
        }
    }
    Ok(CheckOutcome::Pass)
}

/// A CN group with a nontrivial normal subgroup of odd order is soluble.
pub fn odd_normal_implies_soluble(g: &PermGroup, bounds: &Bounds) -> Result<CheckOutcome> {
    if !is_cn(g, bounds)?.is_cn() {
        return Ok(CheckOutcome::skipped("not a CN-group"));
    }
    let f = fitting(g, bounds)?;
    let odd_fitting = prime_divisors(f.order()).iter().any(|&p| p != 2);
    let odd_minimal = minimal_normal_subgroups(g, bounds)?
        .iter()
        .any(|n| n.order() % 2 == 1);
    if !odd_fitting && !odd_minimal {
        return Ok(CheckOutcome::Pass);
    }
    if is_soluble(g) {
        Ok(CheckOutcome::Pass)
    } else {
        Ok(CheckOutcome::fail(
            "non-soluble group with a nontrivial normal subgroup of odd order",
        ))
    }
}

/// A non-soluble CN group has a 2-group as Fitting subgroup.
pub fn nonsoluble_fitting_is_2group(g: &PermGroup, bounds: &Bounds) -> Result<CheckOutcome> {
    if !is_cn(g, bounds)?.is_cn() {
        return Ok(CheckOutcome::skipped("not a CN-group"));
    }
    if is_soluble(g) {
        return Ok(CheckOutcome::skipped("soluble"));
    }
    let f = fitting(g, bounds)?;
    let two = p_core(g, 2, bounds)?;
    if f.order() == two.order() {
        Ok(CheckOutcome::Pass)
    } else {
        Ok(CheckOutcome::fail(format!(
            "|F| = {} but |O_2(G)| = {}",
            f.order(),
            two.order()
        )))
    }
}

/// A prime `p` such that every Sylow `q`-subgroup for `q ≠ p` is cyclic or
/// generalized quaternion, if one exists.
pub fn sylow_hypothesis_prime(g: &PermGroup, bounds: &Bounds) -> Result<Option<u64>> {
    let primes = prime_divisors(g.order());
    let mut restricted = Vec::new();
    for &q in &primes {
        let s = sylow(g, q, bounds)?;
        if !(is_cyclic(&s, bounds)? || is_generalized_quaternion(&s, bounds)?) {
            restricted.push(q);
        }
    }
    Ok(match restricted.as_slice() {
        [] => Some(primes.first().copied().unwrap_or(2)),
        [p] => Some(*p),
        _ => None,
    })
}

/// Soluble groups meeting the Sylow hypothesis have Fitting height at most 4.
pub fn fitting_height_bound(g: &PermGroup, bounds: &Bounds) -> Result<CheckOutcome> {
    if !is_soluble(g) {
        return Ok(CheckOutcome::skipped("not soluble"));
    }
    if sylow_hypothesis_prime(g, bounds)?.is_none() {
        return Ok(CheckOutcome::skipped("Sylow hypothesis fails"));
    }
    let h = fitting_height(g, bounds)?;
    if h <= 4 {
        Ok(CheckOutcome::Pass)
    } else {
        Ok(CheckOutcome::fail(format!("Fitting height {h}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::*;

    fn b() -> Bounds {
        Bounds::default()
    }

    #[test]
    fn cn_verdicts() {
        assert!(is_cn(&symmetric(3), &b()).unwrap().is_cn());
        assert!(is_cn(&alternating(5), &b()).unwrap().is_cn());
        match is_cn(&symmetric(5), &b()).unwrap() {
            CnVerdict::Witness(x) => {
                assert_eq!(x.order(), 2);
                assert_eq!(x.cycles().len(), 1);
            }
            CnVerdict::Cn => panic!("S5 is not CN"),
        }
    }

    #[test]
    fn small_cases() {
        let r = classify("S4", &symmetric(4), &b()).unwrap();
        assert_eq!(r.case, Case::FrobeniusQuotient);
        assert_eq!(r.fitting_order, 4);
        assert_eq!(r.quotient_order, 6);
        assert_eq!(
            r.frobenius_data,
            Some(FrobeniusData {
                kernel_order: 3,
                complement_order: 2
            })
        );
        // the central involution is centralized by the whole group
        let r = classify("SL(2,3)", &sl23(), &b()).unwrap();
        assert_eq!((r.case, r.fitting_order, r.quotient_order), (Case::NotCN, 8, 3));
        let z = Permutation::parse_cycles(8, r.cn_witness.as_deref().unwrap()).unwrap();
        assert_eq!(z.order(), 2);
        let r = classify("A5", &alternating(5), &b()).unwrap();
        assert_eq!((r.case, r.fitting_order), (Case::AlmostSimple, 1));
        let r = classify("C12", &cyclic(12), &b()).unwrap();
        assert_eq!((r.case, r.quotient_order), (Case::Cyclic, 1));
        let r = classify("S5", &symmetric(5), &b()).unwrap();
        assert_eq!(r.case, Case::NotCN);
        assert!(r.cn_witness.is_some());
        assert_eq!(r.quotient_order, 120);
    }

    #[test]
    fn sweeps() {
        assert_eq!(
            lemma41_sweep(&symmetric(4), &b()).unwrap(),
            CheckOutcome::skipped("|pi(F)| < 2")
        );
        let c3q8 = direct_product(&cyclic(3), &quaternion8());
        assert_eq!(lemma41_sweep(&c3q8, &b()).unwrap(), CheckOutcome::Pass);
        for g in [symmetric(3), symmetric(4), alternating(5)] {
            assert_eq!(odd_normal_implies_soluble(&g, &b()).unwrap(), CheckOutcome::Pass);
        }
        assert_eq!(
            nonsoluble_fitting_is_2group(&alternating(5), &b()).unwrap(),
            CheckOutcome::Pass
        );
        assert_eq!(fitting_height_bound(&symmetric(4), &b()).unwrap(), CheckOutcome::Pass);
    }
}
