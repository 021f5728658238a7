use cn_groups::classifier::{classify, is_cn, Case, CnVerdict};
use cn_groups::constructors::*;
use cn_groups::group::prime_divisors;
use cn_groups::named::{cyclic, direct_product, quaternion8};
use cn_groups::recognition::is_sl23;
use cn_groups::structure::{center, centralizer_element, is_nilpotent};
use cn_groups::Bounds;

fn b() -> Bounds {
    Bounds::default()
}

#[test]
fn example2_instances_are_frobenius_quotients() {
    for (m, k, order, kernel) in [(3, 2, 24, 3), (3, 4, 96, 3), (5, 4, 160, 5)] {
        let g = example2(m, k, &b()).unwrap();
        assert_eq!(g.order(), order);
        let r = classify("example2", &g, &b()).unwrap();
        assert_eq!(r.case, Case::FrobeniusQuotient, "m = {m}, k = {k}");
        assert_eq!(r.frobenius_data.unwrap().kernel_order, kernel);
        assert_eq!(r.fitting_primes, vec![2]);
    }
}

#[test]
fn example1_instances() {
    let g = example1(&cyclic(4), 5, &b()).unwrap();
    let r = classify("example1", &g, &b()).unwrap();
    assert_eq!((r.case, r.fitting_order), (Case::Cyclic, 5));
    let k = direct_product(&cyclic(3), &quaternion8());
    let g = example1(&k, 13, &b()).unwrap();
    assert_eq!(g.order(), 169 * 24);
    let r = classify("example1", &g, &b()).unwrap();
    assert_eq!((r.case, r.fitting_order), (Case::CyclicOddTimesQuaternion, 169));
}

#[test]
fn example4_is_almost_simple_over_a_2_group() {
    let g = example4_a5(&b()).unwrap();
    assert_eq!(g.order(), 960);
    let r = classify("example4", &g, &b()).unwrap();
    assert_eq!((r.case, r.fitting_order), (Case::AlmostSimple, 16));
    assert!(r.side_conditions.iter().all(|c| c.passed));
}

#[test]
fn negative_control_fails_at_the_central_involution() {
    let g = negative_frobenius_sl23(7, &b()).unwrap();
    assert_eq!(g.order(), 1176);
    let CnVerdict::Witness(x) = is_cn(&g, &b()).unwrap() else {
        panic!("expected a witness");
    };
    assert_eq!(x.order(), 2);
    let c = centralizer_element(&g, &x, &b()).unwrap();
    assert_eq!(c.order(), 24);
    assert!(!is_nilpotent(&c));
    assert_eq!(center(&c, &b()).unwrap().order(), 2);
    let r = classify("neg", &g, &b()).unwrap();
    assert_eq!((r.case, r.fitting_order), (Case::NotCN, 49));
}

#[test]
fn example3_quotient_is_sl23() {
    let e = example3(5, 1, [1, 0, 0, 0], &b()).unwrap();
    let q = e.quotient(&b()).unwrap();
    assert_eq!(q.order(), 24);
    assert!(is_sl23(&q, &b()).unwrap());
    assert_eq!(prime_divisors(e.normal.order()), vec![2, 5]);
    println!("example3 order {} normal {}", e.group.order(), e.normal.order());
}

#[test]
fn quaternion_frobenius_on_four_dimensions() {
    let k = direct_product(&cyclic(3), &quaternion8());
    let action = fpf_search(&k, 4, 13, Exclude::Nothing, &b()).unwrap().unwrap();
    let g = semidirect(&action, &k, &b()).unwrap();
    assert_eq!(g.order(), 13u128.pow(4) * 24);
    let r = classify("C3xQ8 on 13^4", &g, &b()).unwrap();
    assert_eq!((r.case, r.fitting_order), (Case::CyclicOddTimesQuaternion, 13u128.pow(4)));
}
