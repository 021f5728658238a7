//! Acceptance criteria 1 to 8, one line each. Exits nonzero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{catalog_groups, Set, Table};
use cn_groups::action_lab::check_eleme_shadow;
use cn_groups::app::{cmd_verify, Exit};
use cn_groups::classifier::{
    classify, fitting_height_bound, is_cn, lemma41_sweep, nonsoluble_fitting_is_2group,
    odd_normal_implies_soluble, sylow_hypothesis_prime, Case, CnVerdict,
};
use cn_groups::constructors::{
    example1, example2, example3, example4_a5, fpf_search, negative_frobenius_sl23, semidirect,
    Exclude,
};
use cn_groups::group::prime_divisors;
use cn_groups::instances::{run_suite, Suite};
use cn_groups::named::{alternating, cyclic, direct_product, quaternion8, sl23, symmetric};
use cn_groups::outcome::CheckOutcome;
use cn_groups::recognition::{find_dihedral_frobenius, is_sl23};
use cn_groups::structure::{
    centralizer_element, fitting, is_soluble, minimal_normal_subgroups, normal_subgroups, p_core,
};
use cn_groups::{Bounds, PermGroup};

type Verdict = Result<String, String>;

fn b() -> Bounds {
    Bounds::default()
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn oracle_fitting_order(g: &PermGroup) -> usize {
    let t = Table::new(g);
    t.normal_subgroups()
        .iter()
        .filter(|n| t.is_nilpotent(n))
        .map(Set::len)
        .max()
        .unwrap()
}

fn criterion1() -> Verdict {
    let start = Instant::now();
    let out = cmd_verify(None, 4, 0, &b());
    let elapsed = start.elapsed();
    let doc: serde_json::Value = serde_json::from_str(&out.stdout).map_err(|e| e.to_string())?;
    let s = &doc["summary"];
    let total = s["total"].as_u64().unwrap();
    let violations = s["violations"].as_u64().unwrap();
    ensure(out.exit == Exit::Clean, format!("exit {:?}", out.exit))?;
    ensure(total >= 60, format!("catalog has {total} groups"))?;
    ensure(violations == 0, format!("{violations} violations"))?;
    ensure(s["errors"].as_u64() == Some(0), "entries failed to build")?;
    let five = ["Cyclic", "CyclicOddTimesQuaternion", "FrobeniusQuotient", "SL23", "AlmostSimple"];
    for e in doc["entries"].as_array().unwrap() {
        let r = &e["report"];
        if r["is_cn"].as_bool() == Some(true) {
            let case = r["case"].as_str().unwrap();
            ensure(five.contains(&case), format!("{}: case {case}", e["name"]))?;
            let sides = r["side_conditions"].as_array().unwrap();
            ensure(
                sides.iter().all(|c| c["passed"].as_bool() == Some(true)),
                format!("{}: failed side condition", e["name"]),
            )?;
        }
    }
    ensure(elapsed < Duration::from_secs(300), format!("took {elapsed:?}"))?;
    Ok(format!(
        "{total} groups, {} CN, 0 violations, {:.1}s",
        s["cn_count"],
        elapsed.as_secs_f64()
    ))
}

fn criterion2() -> Verdict {
    let mut failed = Vec::new();
    let mut check = |label: &str, r: Result<(), String>| {
        if let Err(e) = r {
            failed.push(format!("{label}: {e}"));
        }
    };

    let s4 = symmetric(4);
    let r = classify("S4", &s4, &b()).unwrap();
    let f = r.frobenius_data.map(|d| (d.kernel_order, d.complement_order));
    check(
        "S4",
        ensure(
            r.case == Case::FrobeniusQuotient
                && r.fitting_order == 4
                && oracle_fitting_order(&s4) == 4
                && f == Some((3, 2)),
            format!("{:?}, fitting {}, frobenius {f:?}", r.case, r.fitting_order),
        ),
    );

    let sl = sl23();
    let r = classify("SL(2,3)", &sl, &b()).unwrap();
    check(
        "SL(2,3)",
        ensure(
            r.case == Case::Cyclic
                && r.fitting_order == 8
                && oracle_fitting_order(&sl) == 8
                && r.quotient_order == 3,
            format!(
                "expected Cyclic/8/3, got {:?}/{}/{}",
                r.case, r.fitting_order, r.quotient_order
            ),
        ),
    );

    let a5 = alternating(5);
    let r = classify("A5", &a5, &b()).unwrap();
    check(
        "A5",
        ensure(
            r.case == Case::AlmostSimple && r.fitting_order == 1 && oracle_fitting_order(&a5) == 1,
            format!("{:?}, fitting {}", r.case, r.fitting_order),
        ),
    );

    let k = direct_product(&cyclic(3), &quaternion8());
    let action = fpf_search(&k, 4, 13, Exclude::Nothing, &b()).unwrap().unwrap();
    let g = semidirect(&action, &k, &b()).unwrap();
    let r = classify("C3xQ8 on (Z/13)^4", &g, &b()).unwrap();
    check(
        "C3xQ8 on (Z/13)^4",
        ensure(
            r.case == Case::CyclicOddTimesQuaternion
                && g.order() == 28561 * 24
                && r.fitting_order == 28561,
            format!("{:?}, order {}, fitting {}", r.case, g.order(), r.fitting_order),
        ),
    );

    let e4 = example4_a5(&b()).unwrap();
    let r = classify("example4_a5", &e4, &b()).unwrap();
    check(
        "example4_a5",
        ensure(
            e4.order() == 960 && r.case == Case::AlmostSimple && r.fitting_order == 16,
            format!("order {}, {:?}, fitting {}", e4.order(), r.case, r.fitting_order),
        ),
    );

    if failed.is_empty() {
        Ok("S4, SL(2,3), A5, C3xQ8 on (Z/13)^4, example4_a5 as stated".into())
    } else {
        Err(failed.join("; "))
    }
}

fn criterion3() -> Verdict {
    let s5 = symmetric(5);
    let r = classify("S5", &s5, &b()).unwrap();
    ensure(r.case == Case::NotCN, format!("S5: {:?}", r.case))?;
    let CnVerdict::Witness(w) = is_cn(&s5, &b()).unwrap() else {
        return Err("S5 reported CN".into());
    };
    ensure(
        w.order() == 2 && w.cycles().len() == 1,
        format!("S5 witness {w} is not a transposition"),
    )?;
    ensure(r.cn_witness.as_deref() == Some(w.to_string().as_str()), "S5 witness string")?;

    let g = negative_frobenius_sl23(7, &b()).unwrap();
    ensure(g.order() == 1176, format!("order {}", g.order()))?;
    let r = classify("negative", &g, &b()).unwrap();
    ensure(r.case == Case::NotCN, format!("negative: {:?}", r.case))?;
    let CnVerdict::Witness(w) = is_cn(&g, &b()).unwrap() else {
        return Err("negative control reported CN".into());
    };
    let c = centralizer_element(&g, &w, &b()).unwrap();
    ensure(
        w.order() == 2 && c.order() == 24 && is_sl23(&c, &b()).unwrap(),
        format!("witness {w}: order {}, centralizer {}", w.order(), c.order()),
    )?;
    Ok("S5 witness a transposition; order-1176 witness an involution centralized by SL(2,3)".into())
}

fn criterion4() -> Verdict {
    let k = direct_product(&cyclic(3), &quaternion8());
    for (label, g) in [
        ("example1(C4, 5)", example1(&cyclic(4), 5, &b()).unwrap()),
        ("example1(1, 3)", example1(&cyclic(1), 3, &b()).unwrap()),
        ("example1(C3xQ8, 13)", example1(&k, 13, &b()).unwrap()),
    ] {
        let r = classify(label, &g, &b()).unwrap();
        ensure(
            r.is_cn && matches!(r.case, Case::Cyclic | Case::CyclicOddTimesQuaternion),
            format!("{label}: {:?}", r.case),
        )?;
    }
    for (m, k) in [(3, 2), (3, 4), (5, 4)] {
        let r = classify("example2", &example2(m, k, &b()).unwrap(), &b()).unwrap();
        ensure(
            r.is_cn && r.case == Case::FrobeniusQuotient,
            format!("example2({m}, {k}): {:?}", r.case),
        )?;
    }
    let r = classify("example4_a5", &example4_a5(&b()).unwrap(), &b()).unwrap();
    ensure(r.is_cn && r.case == Case::AlmostSimple, format!("example4: {:?}", r.case))?;
    let e3 = example3(5, 1, [1, 0, 0, 0], &b()).unwrap();
    let q = e3.quotient(&b()).unwrap();
    ensure(q.order() == 24 && is_sl23(&q, &b()).unwrap(), "example3 quotient is not SL(2,3)")?;
    let primes = prime_divisors(e3.normal.order());
    ensure(primes == vec![2, 5], format!("pi(N) = {primes:?}"))?;
    Ok(format!(
        "example1 in cases 1/2, example2 in case 3, example4 in case 5; example3(5,1): |G| = {}, |N| = {}, G/N = SL(2,3)",
        e3.group.order(),
        e3.normal.order()
    ))
}

fn criterion5() -> Verdict {
    let mut parts = Vec::new();
    for suite in Suite::ALL {
        let r = run_suite(suite, 42, 100, &b()).map_err(|e| e.to_string())?;
        ensure(r.instances == 100, "instance count")?;
        ensure(r.ok(), format!("{}: {:?}", suite.name(), r.failures))?;
        parts.push(format!("{} {}/{}", suite.name(), r.passed, r.instances));
    }
    Ok(format!("seed 42, zero failures ({})", parts.join(", ")))
}

fn criterion6() -> Verdict {
    let groups = catalog_groups(u128::MAX);
    let mut cn_groups = 0;
    let mut nonsoluble = 0;
    for (name, g) in &groups {
        if !is_soluble(g) {
            nonsoluble += 1;
            ensure(
                find_dihedral_frobenius(g, &b()).unwrap().is_some(),
                format!("{name}: no dihedral Frobenius subgroup"),
            )?;
        }
        if !is_cn(g, &b()).unwrap().is_cn() {
            continue;
        }
        cn_groups += 1;
        for (check, outcome) in [
            ("lemma41_sweep", lemma41_sweep(g, &b()).unwrap()),
            ("odd_normal_implies_soluble", odd_normal_implies_soluble(g, &b()).unwrap()),
            ("check_eleme_shadow", check_eleme_shadow(g, &b()).unwrap()),
            ("nonsoluble_fitting_is_2group", nonsoluble_fitting_is_2group(g, &b()).unwrap()),
        ] {
            if let CheckOutcome::Fail { detail } = outcome {
                return Err(format!("{name}: {check}: {detail}"));
            }
        }
    }
    Ok(format!(
        "{cn_groups} CN groups swept; {nonsoluble} non-soluble groups have a dihedral Frobenius subgroup"
    ))
}

fn criterion7() -> Verdict {
    let mut enumerated = 0;
    let mut scanned = 0;
    for (name, g) in catalog_groups(100_000) {
        let count = g.elements(&b()).unwrap().count() as u128;
        ensure(count == g.order(), format!("{name}: {count} elements, order {}", g.order()))?;
        enumerated += 1;
        if g.order() > 2000 {
            continue;
        }
        scanned += 1;
        let t = Table::new(&g);
        let normals = t.normal_subgroups();
        let mut lib: Vec<Set> = normal_subgroups(&g, &b()).unwrap().iter().map(|n| t.of(&g, n)).collect();
        lib.sort();
        ensure(lib == normals, format!("{name}: normal subgroups"))?;
        let fit = normals.iter().filter(|n| t.is_nilpotent(n)).max_by_key(|n| n.len()).unwrap();
        ensure(&t.of(&g, &fitting(&g, &b()).unwrap()) == fit, format!("{name}: fitting"))?;
        for p in prime_divisors(g.order()) {
            let oracle = normals.iter().filter(|n| t.is_p_group(n, p)).max_by_key(|n| n.len()).unwrap();
            ensure(
                &t.of(&g, &p_core(&g, p, &b()).unwrap()) == oracle,
                format!("{name}: O_{p}"),
            )?;
        }
        let nontrivial: Vec<&Set> = normals.iter().filter(|n| n.len() > 1).collect();
        let mut minimal: Vec<Set> = nontrivial
            .iter()
            .filter(|n| !nontrivial.iter().any(|m| m.len() < n.len() && m.is_subset(n)))
            .map(|n| (*n).clone())
            .collect();
        minimal.sort();
        let mut lib_min: Vec<Set> =
            minimal_normal_subgroups(&g, &b()).unwrap().iter().map(|n| t.of(&g, n)).collect();
        lib_min.sort();
        ensure(lib_min == minimal, format!("{name}: minimal normal subgroups"))?;
    }
    Ok(format!(
        "{enumerated} orders match enumeration; {scanned} groups match the normal-subgroup scan"
    ))
}

fn criterion8() -> Verdict {
    let mut applied = 0;
    for (name, g) in catalog_groups(u128::MAX) {
        if !is_soluble(&g) || sylow_hypothesis_prime(&g, &b()).unwrap().is_none() {
            continue;
        }
        applied += 1;
        match fitting_height_bound(&g, &b()).unwrap() {
            CheckOutcome::Pass => {}
            other => return Err(format!("{name}: {other:?}")),
        }
    }
    Ok(format!("{applied} soluble groups meet the Sylow hypothesis, all of Fitting height <= 4"))
}

fn main() {
    let criteria: [(u32, &str, fn() -> Verdict); 8] = [
        (1, "theorem sweep", criterion1),
        (2, "exact case witnesses", criterion2),
        (3, "negative controls", criterion3),
        (4, "family round trips", criterion4),
        (5, "lemma suites", criterion5),
        (6, "CN-theory shadows", criterion6),
        (7, "kernel correctness", criterion7),
        (8, "Fitting height bound", criterion8),
    ];
    let mut failures = 0;
    for (n, title, run) in criteria {
        let verdict = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|p| {
                let msg = p
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                Err(format!("panicked: {msg}"))
            });
        match verdict {
            Ok(detail) => println!("criterion {n} PASS ({title}): {detail}"),
            Err(detail) => {
                failures += 1;
                println!("criterion {n} FAIL ({title}): {detail}");
            }
        }
    }
    if failures > 0 {
        println!("{failures} of 8 criteria failed");
        std::process::exit(1);
    }
    println!("all 8 criteria passed");
}
