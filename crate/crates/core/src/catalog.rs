//! The built-in catalog of group specs swept by `verify` and `lemmas`.

use std::fs;
use std::path::Path;

use crate::constructors::{fpf_search, Exclude, MatrixAction};
use crate::instances::heisenberg_instance;
use crate::named::{
    alternating, cyclic, dicyclic, dihedral, direct_product, gl23, sl23, symmetric,
};
use crate::spec::{perm_spec, to_json, FamilySpec, GroupSpec, SpecBody};
use crate::{Bounds, GroupError, PermGroup, Result};

fn family(name: &str, family: FamilySpec) -> GroupSpec {
    GroupSpec {
        name: name.to_string(),
        body: SpecBody::Family { family },
    }
}

fn semidirect_spec(name: &str, modulus: u64, acting: GroupSpec, matrices: Vec<Vec<Vec<i64>>>) -> GroupSpec {
    GroupSpec {
        name: name.to_string(),
        body: SpecBody::Semidirect {
            modulus,
            dim: matrices[0].len(),
            acting: Box::new(acting),
            matrices,
        },
    }
}

fn action_rows(action: &MatrixAction) -> Vec<Vec<Vec<i64>>> {
    action
        .matrices()
        .iter()
        .map(|m| m.rows().into_iter().map(|r| r.into_iter().map(|x| x as i64).collect()).collect())
        .collect()
}

fn searched_spec(
    name: &str,
    k_name: &str,
    k: &PermGroup,
    dim: usize,
    modulus: u64,
    exclude: Exclude,
    bounds: &Bounds,
) -> Result<GroupSpec> {
    let action = fpf_search(k, dim, modulus, exclude, bounds)?
        .ok_or_else(|| GroupError::Precondition(format!("no action for {name}")))?;
    Ok(semidirect_spec(name, modulus, perm_spec(k_name, k), action_rows(&action)))
}

/// The Frobenius group of order 21 on 7 points, generated by `i ↦ i + 1` and
/// `i ↦ 2i`.
fn frobenius21() -> PermGroup {
    let c = crate::Permutation::parse_cycles(7, "(0 1 2 3 4 5 6)").expect("valid");
    let s = crate::Permutation::parse_cycles(7, "(1 2 4)(3 6 5)").expect("valid");
    PermGroup::closure(7, &[c, s]).expect("degree 7")
}

/// More than sixty groups: small symmetric, alternating, cyclic, dihedral and
/// dicyclic groups, assorted products, and every constructor family at its
/// acceptance parameters.
pub fn builtin(bounds: &Bounds) -> Result<Vec<GroupSpec>> {
    let mut out = Vec::new();
    for n in [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15, 16] {
        out.push(perm_spec(&format!("C{n}"), &cyclic(n)));
    }
    for n in 3..=6 {
        out.push(perm_spec(&format!("S{n}"), &symmetric(n)));
    }
    for n in 4..=6 {
        out.push(perm_spec(&format!("A{n}"), &alternating(n)));
    }
    for m in 2..=24 {
        out.push(perm_spec(&format!("D{}", 2 * m), &dihedral(m)));
    }
    for n in 2..=12usize {
        let name = if n.is_power_of_two() {
            format!("Q{}", 4 * n)
        } else {
            format!("Dic{}", 4 * n)
        };
        out.push(perm_spec(&name, &dicyclic(n)));
    }
    let c3xq8 = direct_product(&cyclic(3), &dicyclic(2));
    out.push(perm_spec("C3xQ8", &c3xq8));
    out.push(perm_spec("SL2_3", &sl23()));
    out.push(perm_spec("GL2_3", &gl23()));
    let products = [
        ("C2xC2xC2", direct_product(&dihedral(2), &cyclic(2))),
        ("S3xC3", direct_product(&symmetric(3), &cyclic(3))),
        ("S3xS3", direct_product(&symmetric(3), &symmetric(3))),
        ("C3xC3", direct_product(&cyclic(3), &cyclic(3))),
        ("A4xC2", direct_product(&alternating(4), &cyclic(2))),
        ("S4xC2", direct_product(&symmetric(4), &cyclic(2))),
        ("Q8xC5", direct_product(&dicyclic(2), &cyclic(5))),
        ("A5xC2", direct_product(&alternating(5), &cyclic(2))),
        ("A5xC3", direct_product(&alternating(5), &cyclic(3))),
        ("F21xC2", direct_product(&frobenius21(), &cyclic(2))),
    ];
    for (name, g) in &products {
        out.push(perm_spec(name, g));
    }
    out.push(perm_spec("F21", &frobenius21()));

    let c = |n: usize| perm_spec(&format!("C{n}"), &cyclic(n));
    out.push(semidirect_spec("Z7_C3", 7, c(3), vec![vec![vec![2]]]));
    out.push(semidirect_spec("Z5_C4", 5, c(4), vec![vec![vec![2]]]));
    out.push(semidirect_spec("Z11_C5", 11, c(5), vec![vec![vec![3]]]));
    out.push(semidirect_spec("Z9_C2", 9, c(2), vec![vec![vec![8]]]));
    let mul_x = vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 0]];
    let frob = vec![vec![1, 0, 0], vec![0, 0, 1], vec![0, 1, 1]];
    out.push(semidirect_spec("F8_C7", 2, c(7), vec![mul_x.clone()]));
    out.push(semidirect_spec(
        "F8_F21",
        2,
        perm_spec("F21", &frobenius21()),
        vec![mul_x, frob],
    ));
    let q8 = dicyclic(2);
    out.push(searched_spec("Z3sq_Q8", "Q8", &q8, 2, 3, Exclude::Nothing, bounds)?);
    out.push(searched_spec("Z5sq_Q8", "Q8", &q8, 2, 5, Exclude::Nothing, bounds)?);
    out.push(searched_spec("Z7sq_S3", "S3", &symmetric(3), 2, 7, Exclude::TwoElements, bounds)?);
    out.push(searched_spec(
        "C3xQ8_fpf_13_4",
        "C3xQ8",
        &c3xq8,
        4,
        13,
        Exclude::Nothing,
        bounds,
    )?);
    out.push(perm_spec("Heisenberg7_C3", heisenberg_instance(7, 2, 2)?.ambient()));

    let trivial = perm_spec("C1", &cyclic(1));
    let fams = [
        ("example1_C4_p5", FamilySpec::Example1 { acting: Box::new(c(4)), p: 5 }),
        ("example1_trivial_p3", FamilySpec::Example1 { acting: Box::new(trivial), p: 3 }),
        (
            "example1_C3xQ8_p13",
            FamilySpec::Example1 {
                acting: Box::new(perm_spec("C3xQ8", &c3xq8)),
                p: 13,
            },
        ),
        ("example2_m3_k2", FamilySpec::Example2 { m: 3, k: 2 }),
        ("example2_m3_k4", FamilySpec::Example2 { m: 3, k: 4 }),
        ("example2_m5_k4", FamilySpec::Example2 { m: 5, k: 4 }),
        ("example4_a5", FamilySpec::Example4A5 {}),
        ("negative_frobenius_sl23_p7", FamilySpec::NegativeFrobeniusSl23 { p: 7 }),
    ];
    for (name, f) in fams {
        out.push(family(name, f));
    }
    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}

/// Writes one `<name>.json` per catalog entry; returns how many were written.
pub fn export(dir: &Path, bounds: &Bounds) -> std::io::Result<usize> {
    let specs = builtin(bounds).map_err(std::io::Error::other)?;
    fs::create_dir_all(dir)?;
    for spec in &specs {
        fs::write(dir.join(format!("{}.json", spec.name)), to_json(spec))?;
    }
    Ok(specs.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::build;

    #[test]
    fn catalog_is_large_and_buildable() {
        let b = Bounds::default();
        let specs = builtin(&b).unwrap();
        assert!(specs.len() >= 60, "{}", specs.len());
        let mut names: Vec<&str> = specs.iter().map(|s| s.name.as_str()).collect();
        names.dedup();
        assert_eq!(names.len(), specs.len());
        for s in &specs {
            build(s, &b).unwrap_or_else(|e| panic!("{e}"));
        }
    }
}
