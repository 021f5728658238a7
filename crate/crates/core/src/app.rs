//! The `analyze`, `verify`, `construct` and `lemmas` commands, returning
//! their report text and exit code so the binary stays a thin shell.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use crate::action_lab::check_eleme_shadow;
use crate::catalog;
use crate::classifier::{
    classify, fitting_height_bound, is_cn, lemma41_sweep, nonsoluble_fitting_is_2group,
    odd_normal_implies_soluble, Case, ClassificationReport,
};
use crate::instances::{run_suite, Suite, SuiteReport};
use crate::named::{alternating, cyclic, dicyclic, dihedral, direct_product, sl23, symmetric};
use crate::outcome::CheckOutcome;
use crate::recognition::find_dihedral_frobenius;
use crate::spec::{build, parse_spec, perm_spec, to_json, FamilySpec, GroupSpec, SpecBody, SpecError};
use crate::structure::is_soluble;
use crate::{Bounds, GroupError, PermGroup};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Clean = 0,
    Violation = 1,
    Input = 2,
    Resource = 3,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub exit: Exit,
}

impl Output {
    fn ok(stdout: String, exit: Exit) -> Self {
        Output {
            stdout,
            stderr: String::new(),
            exit,
        }
    }

    fn error(message: String, exit: Exit) -> Self {
        Output {
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
            exit,
        }
    }
}

/// Names the flag that lifts a resource bound.
fn bound_hint(e: &GroupError) -> &'static str {
    match e {
        GroupError::TooLarge { .. } => " (raise --max-order)",
        GroupError::DegreeTooLarge { .. } => " (raise --max-degree)",
        GroupError::SearchExhausted { .. } => " (raise --search-budget)",
        GroupError::IndexTooLarge { .. } => " (quotient index bound)",
        _ => "",
    }
}

fn spec_failure(e: &SpecError) -> Output {
    let hint = match e {
        SpecError::Group { source, .. } => bound_hint(source),
        _ => "",
    };
    let exit = if e.is_resource_bound() {
        Exit::Resource
    } else {
        Exit::Input
    };
    Output::error(format!("{e}{hint}"), exit)
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn read_spec(path: &Path) -> Result<GroupSpec, SpecError> {
    let text = fs::read_to_string(path).map_err(|e| SpecError::Field {
        spec: path.display().to_string(),
        field: "file",
        message: e.to_string(),
    })?;
    parse_spec(&text)
}

pub fn analyze_spec(spec: &GroupSpec, bounds: &Bounds) -> Result<ClassificationReport, SpecError> {
    let g = build(spec, bounds)?;
    classify(&spec.name, &g, bounds).map_err(|source| SpecError::Group {
        spec: spec.name.clone(),
        source,
    })
}

#[derive(Serialize)]
struct AnalyzeDocument<'a> {
    tool_version: &'a str,
    seed: u64,
    #[serde(flatten)]
    report: &'a ClassificationReport,
}

pub fn cmd_analyze(path: &Path, seed: u64, bounds: &Bounds) -> Output {
    let report = match read_spec(path).and_then(|s| analyze_spec(&s, bounds)) {
        Ok(r) => r,
        Err(e) => return spec_failure(&e),
    };
    let exit = if report.case == Case::TheoremViolation {
        Exit::Violation
    } else {
        Exit::Clean
    };
    let doc = AnalyzeDocument {
        tool_version: VERSION,
        seed,
        report: &report,
    };
    Output::ok(to_pretty(&doc), exit)
}

/// Specs from `*.json` files in a directory, or the built-in catalog.
enum Source {
    Builtin(Vec<GroupSpec>),
    Files(Vec<PathBuf>),
}

fn source(dir: Option<&Path>, bounds: &Bounds) -> Result<Source, Output> {
    match dir {
        None => catalog::builtin(bounds)
            .map(Source::Builtin)
            .map_err(|e| Output::error(format!("built-in catalog: {e}"), Exit::Resource)),
        Some(dir) => {
            let entries = fs::read_dir(dir)
                .map_err(|e| Output::error(format!("{}: {e}", dir.display()), Exit::Input))?;
            let mut files: Vec<PathBuf> = entries
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|x| x == "json"))
                .collect();
            files.sort();
            Ok(Source::Files(files))
        }
    }
}

/// Runs `f` on every spec with `jobs` workers, keeping the results sorted by
/// group name (file name for unreadable entries).
fn sweep<T, F>(src: Source, jobs: usize, f: F) -> Vec<(String, Result<T, String>)>
where
    T: Send,
    F: Fn(&GroupSpec) -> Result<T, SpecError> + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let mut out: Vec<(String, Result<T, String>)> = pool.install(|| match src {
        Source::Builtin(specs) => specs
            .par_iter()
            .map(|s| (s.name.clone(), f(s).map_err(|e| e.to_string())))
            .collect(),
        Source::Files(files) => files
            .par_iter()
            .map(|p| match read_spec(p) {
                Ok(s) => (s.name.clone(), f(&s).map_err(|e| e.to_string())),
                Err(e) => (
                    p.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default(),
                    Err(e.to_string()),
                ),
            })
            .collect(),
    });
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

#[derive(Serialize)]
struct VerifyEntry {
    name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<ClassificationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub total: usize,
    pub cn_count: usize,
    pub histogram: BTreeMap<String, usize>,
    pub violations: usize,
    pub errors: usize,
}

#[derive(Serialize)]
struct VerifyDocument<'a> {
    tool_version: &'a str,
    seed: u64,
    summary: VerifySummary,
    entries: Vec<VerifyEntry>,
}

pub fn verify_summary(output: &Output) -> Option<VerifySummary> {
    let v: serde_json::Value = serde_json::from_str(&output.stdout).ok()?;
    let s = &v["summary"];
    Some(VerifySummary {
        total: s["total"].as_u64()? as usize,
        cn_count: s["cn_count"].as_u64()? as usize,
        histogram: s["histogram"]
            .as_object()?
            .iter()
            .map(|(k, n)| (k.clone(), n.as_u64().unwrap_or(0) as usize))
            .collect(),
        violations: s["violations"].as_u64()? as usize,
        errors: s["errors"].as_u64()? as usize,
    })
}

pub fn cmd_verify(dir: Option<&Path>, jobs: usize, seed: u64, bounds: &Bounds) -> Output {
    let src = match source(dir, bounds) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let results = sweep(src, jobs, |s| analyze_spec(s, bounds));
    let mut summary = VerifySummary {
        total: results.len(),
        cn_count: 0,
        histogram: BTreeMap::new(),
        violations: 0,
        errors: 0,
    };
    let mut entries = Vec::new();
    for (name, r) in results {
        match r {
            Ok(report) => {
                summary.cn_count += report.is_cn as usize;
                summary.violations += (report.case == Case::TheoremViolation) as usize;
                *summary.histogram.entry(report.case.name().to_string()).or_default() += 1;
                entries.push(VerifyEntry {
                    name,
                    report: Some(report),
                    error: None,
                });
            }
            Err(e) => {
                summary.errors += 1;
                entries.push(VerifyEntry {
                    name,
                    report: None,
                    error: Some(e),
                });
            }
        }
    }
    let exit = if summary.violations > 0 {
        Exit::Violation
    } else {
        Exit::Clean
    };
    let doc = VerifyDocument {
        tool_version: VERSION,
        seed,
        summary,
        entries,
    };
    Output::ok(to_pretty(&doc), exit)
}

/// Small named groups: `trivial`, `C<n>`, `D<2m>`, `Q<2^k>`, `S<n>`, `A<n>`,
/// `SL2_3`, and `x`-separated direct products of these.
pub fn named_group(name: &str) -> Option<PermGroup> {
    if let Some((a, b)) = name.split_once('x') {
        return Some(direct_product(&named_group(a)?, &named_group(b)?));
    }
    if name == "trivial" || name == "1" {
        return Some(cyclic(1));
    }
    if name == "SL2_3" {
        return Some(sl23());
    }
    let (head, tail) = name.split_at(1.min(name.len()));
    let n: usize = tail.parse().ok()?;
    match head {
        "C" if n >= 1 => Some(cyclic(n)),
        "D" if n >= 4 && n % 2 == 0 => Some(dihedral(n / 2)),
        "Q" if n >= 8 && n.is_power_of_two() => Some(dicyclic(n / 4)),
        "S" if n >= 1 => Some(symmetric(n)),
        "A" if n >= 3 => Some(alternating(n)),
        _ => None,
    }
}

fn family_from_params(family: &str, params: &[(String, String)]) -> Result<(String, FamilySpec), String> {
    let get = |key: &str| -> Result<&str, String> {
        params
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
            .ok_or_else(|| format!("{family} needs parameter `{key}`"))
    };
    let num = |key: &str| -> Result<u64, String> {
        get(key)?
            .parse()
            .map_err(|_| format!("parameter `{key}` must be a non-negative integer"))
    };
    for (k, _) in params {
        let known: &[&str] = match family {
            "example1" => &["K", "k", "p"],
            "example2" => &["m", "k"],
            "example3" => &["p", "n", "v"],
            "example4_a5" => &["k"],
            "negative_frobenius_sl23" => &["p"],
            _ => &[],
        };
        if !known.contains(&k.as_str()) {
            return Err(format!("unknown parameter `{k}` for {family}"));
        }
    }
    let suffix: String = params.iter().map(|(k, v)| format!("_{k}{v}")).collect();
    let name = format!("{family}{suffix}");
    let spec = match family {
        "example1" => {
            let k = get("K").or_else(|_| get("k"))?;
            let g = named_group(k).ok_or_else(|| format!("unknown group `{k}`"))?;
            FamilySpec::Example1 {
                acting: Box::new(perm_spec(k, &g)),
                p: num("p")?,
            }
        }
        "example2" => FamilySpec::Example2 {
            m: num("m")? as usize,
            k: num("k")? as usize,
        },
        "example3" => {
            let v = match get("v") {
                Err(_) => [1, 0, 0, 0],
                Ok(text) => {
                    let parts: Vec<u64> = text
                        .split(',')
                        .map(|x| x.trim().parse())
                        .collect::<Result<_, _>>()
                        .map_err(|_| "parameter `v` must be four comma-separated integers".to_string())?;
                    parts
                        .try_into()
                        .map_err(|_| "parameter `v` must have four entries".to_string())?
                }
            };
            FamilySpec::Example3 {
                p: num("p")?,
                n: num("n")? as u32,
                v,
            }
        }
        "example4_a5" => {
            if params.iter().any(|(k, v)| k == "k" && v != "1") {
                return Err("example4_a5 only supports k=1".into());
            }
            FamilySpec::Example4A5 {}
        }
        "negative_frobenius_sl23" => FamilySpec::NegativeFrobeniusSl23 { p: num("p")? },
        other => return Err(format!("unknown family `{other}`")),
    };
    Ok((name, spec))
}

/// Builds a family instance and writes it as a `perm` spec.
pub fn cmd_construct(family: &str, params: &[(String, String)], out: Option<&Path>, bounds: &Bounds) -> Output {
    let (name, fam) = match family_from_params(family, params) {
        Ok(x) => x,
        Err(e) => return Output::error(e, Exit::Input),
    };
    let spec = GroupSpec {
        name: name.clone(),
        body: SpecBody::Family { family: fam },
    };
    let g = match build(&spec, bounds) {
        Ok(g) => g,
        Err(e) => return spec_failure(&e),
    };
    let text = to_json(&perm_spec(&name, &g));
    match out {
        None => Output::ok(text, Exit::Clean),
        Some(path) => match fs::write(path, &text) {
            Ok(()) => Output::ok(String::new(), Exit::Clean),
            Err(e) => Output::error(format!("{}: {e}", path.display()), Exit::Input),
        },
    }
}

/// Every catalog-wide check run on one group.
fn group_checks(spec: &GroupSpec, bounds: &Bounds) -> Result<BTreeMap<&'static str, CheckOutcome>, SpecError> {
    let wrap = |source| SpecError::Group {
        spec: spec.name.clone(),
        source,
    };
    let g = build(spec, bounds)?;
    let mut out = BTreeMap::new();
    let cn = is_cn(&g, bounds).map_err(wrap)?.is_cn();
    if cn {
        out.insert("lemma41_sweep", lemma41_sweep(&g, bounds).map_err(wrap)?);
        out.insert("odd_normal_implies_soluble", odd_normal_implies_soluble(&g, bounds).map_err(wrap)?);
        out.insert("check_eleme_shadow", check_eleme_shadow(&g, bounds).map_err(wrap)?);
        out.insert("nonsoluble_fitting_is_2group", nonsoluble_fitting_is_2group(&g, bounds).map_err(wrap)?);
    }
    out.insert("fitting_height_bound", fitting_height_bound(&g, bounds).map_err(wrap)?);
    if !is_soluble(&g) {
        let found = find_dihedral_frobenius(&g, bounds).map_err(wrap)?;
        out.insert(
            "dihedral_frobenius",
            match found {
                Some(_) => CheckOutcome::Pass,
                None => CheckOutcome::fail("no dihedral Frobenius subgroup"),
            },
        );
    }
    Ok(out)
}

#[derive(Serialize)]
struct GroupChecks {
    name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    checks: Option<BTreeMap<&'static str, CheckOutcome>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Serialize)]
struct LemmasDocument<'a> {
    tool_version: &'a str,
    seed: u64,
    instances_per_suite: usize,
    failures: usize,
    errors: usize,
    suites: Vec<SuiteReport>,
    groups: Vec<GroupChecks>,
}

pub fn cmd_lemmas(dir: Option<&Path>, seed: u64, count: usize, jobs: usize, bounds: &Bounds) -> Output {
    let src = match source(dir, bounds) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let suites: Result<Vec<SuiteReport>, GroupError> =
        pool.install(|| Suite::ALL.par_iter().map(|&s| run_suite(s, seed, count, bounds)).collect());
    let suites = match suites {
        Ok(s) => s,
        Err(e) => {
            let hint = bound_hint(&e);
            return Output::error(format!("lemma suites: {e}{hint}"), Exit::Resource);
        }
    };
    let results = sweep(src, jobs, |s| group_checks(s, bounds));
    let mut failures: usize = suites.iter().map(|s| s.failures.len()).sum();
    let mut errors = 0;
    let mut groups = Vec::new();
    for (name, r) in results {
        match r {
            Ok(checks) => {
                failures += checks.values().filter(|o| o.is_fail()).count();
                groups.push(GroupChecks {
                    name,
                    checks: Some(checks),
                    error: None,
                });
            }
            Err(e) => {
                errors += 1;
                groups.push(GroupChecks {
                    name,
                    checks: None,
                    error: Some(e),
                });
            }
        }
    }
    let exit = if failures > 0 { Exit::Violation } else { Exit::Clean };
    let doc = LemmasDocument {
        tool_version: VERSION,
        seed,
        instances_per_suite: count,
        failures,
        errors,
        suites,
        groups,
    };
    Output::ok(to_pretty(&doc), exit)
}

/// Writes the built-in catalog as spec files.
pub fn cmd_catalog(dir: &Path, bounds: &Bounds) -> Output {
    match catalog::export(dir, bounds) {
        Ok(n) => Output::ok(format!("wrote {n} specs to {}\n", dir.display()), Exit::Clean),
        Err(e) => Output::error(format!("{}: {e}", dir.display()), Exit::Input),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_groups() {
        assert_eq!(named_group("C3xQ8").unwrap().order(), 24);
        assert_eq!(named_group("trivial").unwrap().order(), 1);
        assert_eq!(named_group("D10").unwrap().order(), 10);
        assert!(named_group("Q12").is_none());
        assert!(named_group("X5").is_none());
    }

    #[test]
    fn construct_parameters() {
        let b = Bounds::default();
        let p = |pairs: &[(&str, &str)]| -> Vec<(String, String)> {
            pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
        };
        let out = cmd_construct("example2", &p(&[("m", "3"), ("k", "2")]), None, &b);
        assert_eq!(out.exit, Exit::Clean);
        let spec = parse_spec(&out.stdout).unwrap();
        assert_eq!(spec.name, "example2_m3_k2");
        assert_eq!(analyze_spec(&spec, &b).unwrap().case, Case::FrobeniusQuotient);
        let out = cmd_construct("example1", &p(&[("K", "trivial"), ("p", "3")]), None, &b);
        assert_eq!(build(&parse_spec(&out.stdout).unwrap(), &b).unwrap().order(), 3);
        assert_eq!(cmd_construct("example2", &p(&[("m", "3")]), None, &b).exit, Exit::Input);
        assert_eq!(cmd_construct("example9", &[], None, &b).exit, Exit::Input);
        let tight = Bounds {
            search_budget: 10,
            ..Bounds::default()
        };
        let out = cmd_construct("example2", &p(&[("m", "5"), ("k", "4")]), None, &tight);
        assert_eq!(out.exit, Exit::Resource);
        assert!(out.stderr.contains("--search-budget"), "{}", out.stderr);
    }
}
