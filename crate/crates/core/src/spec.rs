//! JSON group specifications: parsing, validation and construction.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructors::{
    example1, example2, example3, example4_a5, negative_frobenius_sl23, semidirect, MatrixAction,
};
use crate::modular::Matrix;
use crate::perm::{parse_cycle_notation, Permutation};
use crate::{Bounds, GroupError, PermGroup};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub name: String,
    #[serde(flatten)]
    pub body: SpecBody,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpecBody {
    Perm {
        degree: usize,
        generators: Vec<String>,
    },
    Semidirect {
        modulus: u64,
        dim: usize,
        acting: Box<GroupSpec>,
        /// One `dim × dim` matrix per generator of `acting`.
        matrices: Vec<Vec<Vec<i64>>>,
    },
    Family {
        #[serde(flatten)]
        family: FamilySpec,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", content = "params")]
pub enum FamilySpec {
    #[serde(rename = "example1")]
    Example1 { acting: Box<GroupSpec>, p: u64 },
    #[serde(rename = "example2")]
    Example2 { m: usize, k: usize },
    #[serde(rename = "example3")]
    Example3 {
        p: u64,
        n: u32,
        #[serde(default = "default_v")]
        v: [u64; 4],
    },
    #[serde(rename = "example4_a5")]
    Example4A5 {},
    #[serde(rename = "negative_frobenius_sl23")]
    NegativeFrobeniusSl23 { p: u64 },
}

fn default_v() -> [u64; 4] {
    [1, 0, 0, 0]
}

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("schema error: {0}")]
    Schema(#[from] serde_json::Error),
    #[error("{spec}: generator {index}: {source}")]
    Cycle {
        spec: String,
        index: usize,
        source: crate::perm::CycleSyntaxError,
    },
    #[error("{spec}: generator {index} moves point {point} but the degree is {degree}")]
    Degree {
        spec: String,
        index: usize,
        point: usize,
        degree: usize,
    },
    #[error("{spec}: field `{field}`: {message}")]
    Field {
        spec: String,
        field: &'static str,
        message: String,
    },
    #[error("{spec}: {source}")]
    Group { spec: String, source: GroupError },
}

impl SpecError {
    /// Whether the failure is a resource bound rather than bad input.
    pub fn is_resource_bound(&self) -> bool {
        matches!(
            self,
            SpecError::Group {
                source: GroupError::TooLarge { .. }
                    | GroupError::IndexTooLarge { .. }
                    | GroupError::DegreeTooLarge { .. }
                    | GroupError::SearchExhausted { .. },
                ..
            }
        )
    }
}

pub fn parse_spec(document: &str) -> Result<GroupSpec, SpecError> {
    let spec: GroupSpec = serde_json::from_str(document)?;
    validate(&spec)?;
    Ok(spec)
}

fn parse_generators(spec: &str, degree: usize, gens: &[String]) -> Result<Vec<Permutation>, SpecError> {
    gens.iter()
        .enumerate()
        .map(|(index, text)| {
            let cycles = parse_cycle_notation(text).map_err(|source| SpecError::Cycle {
                spec: spec.to_string(),
                index,
                source,
            })?;
            if let Some(&point) = cycles.iter().flatten().find(|&&x| x >= degree) {
                return Err(SpecError::Degree {
                    spec: spec.to_string(),
                    index,
                    point,
                    degree,
                });
            }
            Permutation::from_cycles(degree, &cycles).map_err(|source| SpecError::Group {
                spec: spec.to_string(),
                source,
            })
        })
        .collect()
}

/// Checks everything that can be checked without building the group.
pub fn validate(spec: &GroupSpec) -> Result<(), SpecError> {
    let field = |field, message: String| SpecError::Field {
        spec: spec.name.clone(),
        field,
        message,
    };
    match &spec.body {
        SpecBody::Perm { degree, generators } => {
            if *degree == 0 {
                return Err(field("degree", "must be at least 1".into()));
            }
            parse_generators(&spec.name, *degree, generators)?;
        }
        SpecBody::Semidirect {
            modulus,
            dim,
            acting,
            matrices,
        } => {
            if *modulus < 2 {
                return Err(field("modulus", format!("{modulus} is below 2")));
            }
            if *dim == 0 {
                return Err(field("dim", "must be at least 1".into()));
            }
            for (i, m) in matrices.iter().enumerate() {
                if m.len() != *dim || m.iter().any(|r| r.len() != *dim) {
                    return Err(field("matrices", format!("matrix {i} is not {dim}x{dim}")));
                }
            }
            validate(acting)?;
        }
        SpecBody::Family { family } => {
            if let FamilySpec::Example1 { acting, .. } = family {
                validate(acting)?;
            }
        }
    }
    Ok(())
}

pub fn build(spec: &GroupSpec, bounds: &Bounds) -> Result<PermGroup, SpecError> {
    let group_err = |source| SpecError::Group {
        spec: spec.name.clone(),
        source,
    };
    match &spec.body {
        SpecBody::Perm { degree, generators } => {
            let gens = parse_generators(&spec.name, *degree, generators)?;
            let g = PermGroup::closure(*degree, &gens).map_err(group_err)?;
            bounds.check_order(g.order()).map_err(group_err)?;
            Ok(g)
        }
        SpecBody::Semidirect {
            modulus,
            dim,
            acting,
            matrices,
        } => {
            let k = build(acting, bounds)?;
            let mats = matrices
                .iter()
                .map(|rows| Matrix::from_rows(*modulus, rows).expect("validated shape"))
                .collect();
            let action = MatrixAction::new(*dim, *modulus, mats).map_err(group_err)?;
            semidirect(&action, &k, bounds).map_err(group_err)
        }
        SpecBody::Family { family } => match family {
            FamilySpec::Example1 { acting, p } => {
                let k = build(acting, bounds)?;
                example1(&k, *p, bounds).map_err(group_err)
            }
            FamilySpec::Example2 { m, k } => example2(*m, *k, bounds).map_err(group_err),
            FamilySpec::Example3 { p, n, v } => {
                Ok(example3(*p, *n, *v, bounds).map_err(group_err)?.group)
            }
            FamilySpec::Example4A5 {} => example4_a5(bounds).map_err(group_err),
            FamilySpec::NegativeFrobeniusSl23 { p } => {
                negative_frobenius_sl23(*p, bounds).map_err(group_err)
            }
        },
    }
}

/// A `perm`-kind spec listing the group's generators.
pub fn perm_spec(name: &str, g: &PermGroup) -> GroupSpec {
    GroupSpec {
        name: name.to_string(),
        body: SpecBody::Perm {
            degree: g.degree(),
            generators: g.generators().iter().map(|x| x.to_string()).collect(),
        },
    }
}

pub fn to_json(spec: &GroupSpec) -> String {
    let mut s = serde_json::to_string_pretty(spec).expect("specs serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_s4_example() {
        let s = parse_spec(r#"{"name":"S4","kind":"perm","degree":4,"generators":["(0 1)","(0 1 2 3)"]}"#)
            .unwrap();
        assert_eq!(build(&s, &Bounds::default()).unwrap().order(), 24);
    }

    #[test]
    fn missing_degree_names_the_field() {
        let e = parse_spec(r#"{"name":"S4","kind":"perm","generators":["(0 1)"]}"#).unwrap_err();
        assert!(matches!(e, SpecError::Schema(_)));
        assert!(e.to_string().contains("degree"), "{e}");
    }

    #[test]
    fn point_beyond_degree() {
        let e = parse_spec(r#"{"name":"bad","kind":"perm","degree":4,"generators":["(0 7)"]}"#)
            .unwrap_err();
        assert!(matches!(e, SpecError::Degree { point: 7, degree: 4, index: 0, .. }), "{e}");
    }

    #[test]
    fn cycle_syntax_position() {
        let e = parse_spec(r#"{"name":"bad","kind":"perm","degree":4,"generators":["()", "(0 1"]}"#)
            .unwrap_err();
        match e {
            SpecError::Cycle { index, source, .. } => {
                assert_eq!(index, 1);
                assert_eq!(source.position, 4);
            }
            other => panic!("{other}"),
        }
    }

    #[test]
    fn families_and_semidirect_round_trip() {
        let b = Bounds::default();
        let docs = [
            r#"{"name":"e2","kind":"family","family":"example2","params":{"m":3,"k":2}}"#,
            r#"{"name":"e1","kind":"family","family":"example1","params":{"p":3,"acting":{"name":"1","kind":"perm","degree":1,"generators":[]}}}"#,
            r#"{"name":"c7c3","kind":"semidirect","modulus":7,"dim":1,"acting":{"name":"C3","kind":"perm","degree":3,"generators":["(0 1 2)"]},"matrices":[[[2]]]}"#,
            r#"{"name":"a5","kind":"family","family":"example4_a5","params":{}}"#,
        ];
        let orders = [24u128, 3, 21, 960];
        for (doc, order) in docs.iter().zip(orders) {
            let spec = parse_spec(doc).unwrap();
            assert_eq!(parse_spec(&to_json(&spec)).unwrap(), spec);
            let g = build(&spec, &b).unwrap();
            assert_eq!(g.order(), order);
            let again = build(&parse_spec(&to_json(&perm_spec("x", &g))).unwrap(), &b).unwrap();
            assert_eq!(again.order(), order);
        }
    }

    #[test]
    fn bounds_are_resource_errors() {
        let s = parse_spec(r#"{"name":"S8","kind":"perm","degree":8,"generators":["(0 1)","(0 1 2 3 4 5 6 7)"]}"#)
            .unwrap();
        let tight = Bounds {
            max_order: 1000,
            ..Bounds::default()
        };
        assert!(build(&s, &tight).unwrap_err().is_resource_bound());
    }
}
