//! Command implementations behind the thin binary: each builds a Report
//! plus a one-line headline for --quiet mode.
//!
//! Exit-code contract (enforced by the binary): 0 when every check
//! passes, 1 when a check fails or an expected counterexample is
//! missing, 2 on usage/parse errors, 3 on math-domain errors.

use std::path::Path;

use clap::ValueEnum;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::falsify::{proof_family_counterexample, random_search_counterexample};
use crate::integrals::{choquet_integral, sugeno_integral};
use crate::io::{
    counterexample_to_json, matrix_to_json, parse_vector, read_matrix, read_measure, read_weight,
    weight_to_json,
};
use crate::majorization::{construct_contraction, eigen_dominates, majorizes, weak_majorizes, MajorizationVerdict};
use crate::matrix::HermitianMatrix;
use crate::norms::{
    kyfan_decomposition_terms, kyfan_norm, kyfan_pk_norm, operator_norm, schatten_choquet_norm,
    sugeno_norm, NormSpec,
};
use crate::report::{json_num, CheckLine, Report, Verdict};
use crate::spectral::{eigenvalue_sequence, four_parts};
use crate::suites::{run_suite, SuiteConfig};
use crate::tol;
use crate::traces::{phi_alpha, phi_alpha_extended, psi_alpha, psi_alpha_extended};
use crate::weights::{check_measure_monotone, WeightFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TraceKind {
    Choquet,
    Sugeno,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NormFamily {
    Choquet,
    Sugeno,
    Kyfan,
    KyfanPk,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FalsifyMode {
    Proof,
    Random,
}

#[derive(Debug, Clone)]
pub struct GlobalOpts {
    pub seed: u64,
    pub trials: usize,
    pub dim: usize,
    pub tolerance: Option<f64>,
}

fn float_list(values: &[f64]) -> Result<Value> {
    let nums: Result<Vec<Value>> = values.iter().map(|&v| json_num(v)).collect();
    Ok(Value::Array(nums?))
}

fn concavity_line(w: &WeightFunction) -> CheckLine {
    if w.is_concave() {
        CheckLine::pass("weight-concave", None)
    } else {
        CheckLine {
            name: "weight-concave".to_string(),
            verdict: Verdict::Skip,
            tolerance: None,
            witness: Some(json!({
                "note": "weight is not concave: the reported value is not subadditive, so it is not a norm"
            })),
        }
    }
}

fn verdict_json(v: &MajorizationVerdict) -> Value {
    json!({
        "holds": v.relation_holds,
        "failing_index": v.failing_index,
        "gap": v.gap,
    })
}

pub fn cmd_trace(
    matrix_path: &Path,
    weight_path: &Path,
    kind: TraceKind,
    extended: bool,
) -> Result<(Report, String)> {
    let m = read_matrix(matrix_path)?;
    let w = read_weight(weight_path)?;
    let mut report = Report::new("trace");
    report.inputs = json!({
        "matrix": { "path": matrix_path.display().to_string(), "n": m.rows() },
        "weight": weight_to_json(&w),
        "kind": format!("{kind:?}").to_lowercase(),
        "extended": extended,
    });

    let headline;
    if extended {
        let value = match kind {
            TraceKind::Choquet => phi_alpha_extended(&m, &w)?,
            TraceKind::Sugeno => psi_alpha_extended(&m, &w)?,
        };
        let parts = four_parts(&m)?;
        let part_value = |h: &HermitianMatrix| -> Result<f64> {
            match kind {
                TraceKind::Choquet => phi_alpha(h, &w),
                TraceKind::Sugeno => psi_alpha(h, &w),
            }
        };
        report.insert_result(
            "trace",
            json!({ "re": json_num(value.re)?, "im": json_num(value.im)? }),
        );
        report.insert_result(
            "parts",
            json!({
                "pos_re": json_num(part_value(&parts.pos_re)?)?,
                "neg_re": json_num(part_value(&parts.neg_re)?)?,
                "pos_im": json_num(part_value(&parts.pos_im)?)?,
                "neg_im": json_num(part_value(&parts.neg_im)?)?,
            }),
        );
        headline = format!("{}{:+}i", value.re, value.im);
    } else {
        let h = HermitianMatrix::try_new(m)?;
        let values = eigenvalue_sequence(&h)?;
        let value = match kind {
            TraceKind::Choquet => phi_alpha(&h, &w)?,
            TraceKind::Sugeno => psi_alpha(&h, &w)?,
        };
        report.insert_result("trace", json_num(value)?);
        report.insert_result("eigenvalues", float_list(&values)?);
        headline = format!("{value}");
    }
    Ok((report, headline))
}

pub fn cmd_integral(values: &str, measure_path: &Path, kind: TraceKind) -> Result<(Report, String)> {
    let x = parse_vector(values)?;
    let mu = read_measure(measure_path)?;
    let mut report = Report::new("integral");
    report.inputs = json!({
        "values": x.as_slice(),
        "measure": { "path": measure_path.display().to_string(), "n": mu.ground_size() },
        "kind": format!("{kind:?}").to_lowercase(),
    });
    report.checks.push(check_measure_monotone(&mu));
    let value = match kind {
        TraceKind::Choquet => choquet_integral(&x, &mu)?,
        TraceKind::Sugeno => sugeno_integral(&x, &mu)?,
    };
    report.insert_result("integral", json_num(value)?);
    Ok((report, format!("{value}")))
}

pub fn cmd_norm(
    matrix_path: &Path,
    weight_path: &Path,
    family: NormFamily,
    p: f64,
    k: Option<usize>,
) -> Result<(Report, String)> {
    let m = read_matrix(matrix_path)?;
    let w = read_weight(weight_path)?;
    let mut report = Report::new("norm");
    report.inputs = json!({
        "matrix": { "path": matrix_path.display().to_string(), "n": m.rows() },
        "weight": weight_to_json(&w),
        "family": format!("{family:?}").to_lowercase(),
        "p": p,
        "k": k,
    });

    let value = match family {
        NormFamily::Choquet => {
            let spec = NormSpec::new(w.clone(), p)?;
            let value = schatten_choquet_norm(&m, &spec)?;
            report.checks.push(concavity_line(&w));
            if p > 1.0 {
                let terms = kyfan_decomposition_terms(&m, &spec)?;
                let total: f64 = terms.iter().sum();
                let target = value.powf(p);
                report.insert_result("decomposition_terms", float_list(&terms)?);
                let ok = (total - target).abs() <= tol::DUAL_FORM_AGREEMENT * (1.0 + target);
                report.checks.push(if ok {
                    CheckLine::pass("decomposition-sum", Some(tol::DUAL_FORM_AGREEMENT))
                } else {
                    CheckLine::fail(
                        "decomposition-sum",
                        Some(tol::DUAL_FORM_AGREEMENT),
                        json!({ "terms_total": total, "norm_power": target }),
                    )
                });
            }
            value
        }
        NormFamily::Sugeno => {
            let value = sugeno_norm(&m, &w)?;
            report.checks.push(concavity_line(&w));
            value
        }
        NormFamily::Kyfan => kyfan_norm(&m, k.unwrap_or(1))?,
        NormFamily::KyfanPk => kyfan_pk_norm(&m, p, k.unwrap_or(1))?,
    };
    report.insert_result("norm", json_num(value)?);
    Ok((report, format!("{value}")))
}

pub fn cmd_major(a_path: &Path, b_path: &Path) -> Result<(Report, String)> {
    let a = HermitianMatrix::try_new(read_matrix(a_path)?)?;
    let b = HermitianMatrix::try_new(read_matrix(b_path)?)?;
    let la = eigenvalue_sequence(&a)?;
    let lb = eigenvalue_sequence(&b)?;
    let mut report = Report::new("major");
    report.inputs = json!({
        "a": { "path": a_path.display().to_string(), "n": a.dim() },
        "b": { "path": b_path.display().to_string(), "n": b.dim() },
    });
    report.insert_result("eigenvalues_a", float_list(&la)?);
    report.insert_result("eigenvalues_b", float_list(&lb)?);
    report.insert_result("weak_majorization", verdict_json(&weak_majorizes(&lb, &la)));
    report.insert_result("majorization", verdict_json(&majorizes(&lb, &la)));

    let dominated = eigen_dominates(&b, &a)?;
    report.insert_result("dominated", Value::Bool(dominated));
    if dominated {
        report
            .checks
            .push(CheckLine::pass("eigenvalue-domination", Some(tol::EIGEN_DOMINATION_SLACK)));
        let c = construct_contraction(&a, &b)?;
        let cn = operator_norm(&c)?;
        let rebuilt = c.mul(b.matrix()).mul(&c.adjoint());
        let residual = a.matrix().sub(&rebuilt).frobenius_norm();
        let bound = tol::FACTORIZATION_RESIDUAL * (1.0 + a.frobenius_norm());
        report.insert_result("contraction", matrix_to_json(&c));
        report.insert_result("contraction_norm", json_num(cn)?);
        report.insert_result("residual", json_num(residual)?);
        report.checks.push(if cn <= 1.0 + tol::CONTRACTION_NORM_SLACK {
            CheckLine::pass("contraction-norm-bound", Some(tol::CONTRACTION_NORM_SLACK))
        } else {
            CheckLine::fail(
                "contraction-norm-bound",
                Some(tol::CONTRACTION_NORM_SLACK),
                json!({ "contraction_norm": cn }),
            )
        });
        report.checks.push(if residual <= bound {
            CheckLine::pass("factorization-residual", Some(tol::FACTORIZATION_RESIDUAL))
        } else {
            CheckLine::fail(
                "factorization-residual",
                Some(tol::FACTORIZATION_RESIDUAL),
                json!({ "residual": residual, "bound": bound }),
            )
        });
    } else {
        let witness = la
            .iter()
            .zip(&lb)
            .enumerate()
            .find(|&(_, (&x, &y))| x > y + tol::EIGEN_DOMINATION_SLACK)
            .map(|(i, (&x, &y))| json!({ "index": i + 1, "lambda_a": x, "lambda_b": y }))
            .unwrap_or_else(|| json!({ "note": "dimension mismatch or padding" }));
        report.checks.push(CheckLine::fail(
            "eigenvalue-domination",
            Some(tol::EIGEN_DOMINATION_SLACK),
            witness,
        ));
        report.checks.push(CheckLine {
            name: "contraction-factorization".to_string(),
            verdict: Verdict::Skip,
            tolerance: None,
            witness: Some(json!({ "note": "no contraction exists: eigenvalue domination fails" })),
        });
    }
    let headline = if dominated { "dominated" } else { "not-dominated" };
    Ok((report, headline.to_string()))
}

pub fn cmd_check(suite: &str, opts: &GlobalOpts) -> Result<(Report, String)> {
    let cfg = SuiteConfig {
        seed: opts.seed,
        trials: opts.trials,
        dim: opts.dim,
        tolerance: opts.tolerance,
    };
    let lines = run_suite(suite, &cfg)?;
    let mut report = Report::new("check");
    report.seed = Some(opts.seed);
    report.inputs = json!({
        "suite": suite,
        "trials": opts.trials,
        "dim": opts.dim,
        "tolerance": opts.tolerance,
    });
    report.checks = lines;
    let headline = if report.passed() { "pass" } else { "fail" };
    Ok((report, headline.to_string()))
}

pub fn cmd_falsify(
    weight_path: &Path,
    p: f64,
    mode: FalsifyMode,
    opts: &GlobalOpts,
) -> Result<(Report, String)> {
    if opts.dim == 0 || opts.dim > tol::MAX_DIM {
        return Err(Error::Parse(format!(
            "dimension {} out of range 1..={}",
            opts.dim,
            tol::MAX_DIM
        )));
    }
    let w = read_weight(weight_path)?;
    let mut report = Report::new("falsify");
    report.seed = Some(opts.seed);
    report.inputs = json!({
        "weight": weight_to_json(&w),
        "p": p,
        "mode": format!("{mode:?}").to_lowercase(),
        "dim": opts.dim,
        "trials": opts.trials,
    });

    if w.is_concave() {
        report.insert_result("found", Value::Bool(false));
        report.checks.push(CheckLine {
            name: "triangle-violated".to_string(),
            verdict: Verdict::Skip,
            tolerance: None,
            witness: Some(json!({
                "note": "weight is concave: the triangle inequality is guaranteed, nothing to falsify"
            })),
        });
        return Ok((report, "skipped".to_string()));
    }

    let found = match mode {
        FalsifyMode::Proof => Some(proof_family_counterexample(&w, p, opts.dim)?),
        FalsifyMode::Random => {
            random_search_counterexample(&w, p, opts.dim, opts.trials, opts.seed)?
        }
    };
    match found {
        Some(ce) => {
            report.insert_result("found", Value::Bool(true));
            report.insert_result("counterexample", counterexample_to_json(&ce));
            report.insert_result("margin", json_num(ce.margin)?);
            report
                .checks
                .push(CheckLine::pass("triangle-violated", Some(tol::COUNTEREXAMPLE_MARGIN)));
            Ok((report, format!("{}", ce.margin)))
        }
        None => {
            report.insert_result("found", Value::Bool(false));
            report.checks.push(CheckLine::fail(
                "triangle-violated",
                Some(tol::COUNTEREXAMPLE_MARGIN),
                json!({
                    "trials": opts.trials,
                    "note": "no violation found for a non-concave weight; increase --trials or use proof mode"
                }),
            ));
            Ok((report, "none".to_string()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::fs;
    use std::path::PathBuf;

    fn write_temp(name: &str, contents: &str) -> PathBuf {
        let mut path = std::env::temp_dir();
        path.push(format!("nltrace-cli-test-{}-{name}", std::process::id()));
        fs::write(&path, contents).unwrap();
        path
    }

    fn opts() -> GlobalOpts {
        GlobalOpts { seed: 7, trials: 50, dim: 4, tolerance: None }
    }

    #[test]
    fn trace_on_a_diagonal_matrix() {
        let m = write_temp("trace-m.json", r#"{"n": 2, "complex": false, "data": [3, 0, 0, 1]}"#);
        let w = write_temp("trace-w.json", r#"{"increments": [], "tail": 1}"#);
        let (report, headline) = cmd_trace(&m, &w, TraceKind::Choquet, false).unwrap();
        assert_eq!(headline, "4");
        assert!(report.passed());
        assert_eq!(report.results["trace"], Value::from(4.0));
    }

    #[test]
    fn sugeno_trace_example() {
        let m = write_temp(
            "strace-m.json",
            r#"{"n": 3, "complex": false, "data": [5, 0, 0, 0, 3, 0, 0, 0, 0.5]}"#,
        );
        let w = write_temp("strace-w.json", r#"{"increments": [], "tail": 1}"#);
        let (_, headline) = cmd_trace(&m, &w, TraceKind::Sugeno, false).unwrap();
        assert_eq!(headline, "2");
    }

    #[test]
    fn extended_trace_of_a_nonpositive_matrix() {
        let m = write_temp(
            "etrace-m.json",
            r#"{"n": 2, "complex": false, "data": [2, 0, 0, -3]}"#,
        );
        let w = write_temp("etrace-w.json", r#"{"increments": [], "tail": 1}"#);
        let (report, headline) = cmd_trace(&m, &w, TraceKind::Choquet, true).unwrap();
        assert_eq!(headline, "-1+0i");
        assert_eq!(report.results["parts"]["pos_re"], Value::from(2.0));
        assert_eq!(report.results["parts"]["neg_re"], Value::from(3.0));
        let bare = cmd_trace(&m, &w, TraceKind::Choquet, false);
        assert!(matches!(bare, Err(Error::NotPositive { .. })));
    }

    #[test]
    fn integral_with_a_measure_table() {
        let mu = write_temp(
            "int-mu.json",
            r#"{"n": 2, "values": {"": 0, "1": 1, "2": 1, "1,2": 2}}"#,
        );
        let (report, headline) = cmd_integral("5,3", &mu, TraceKind::Choquet).unwrap();
        assert_eq!(headline, "8");
        assert!(report.passed());
    }

    #[test]
    fn norm_families() {
        let m = write_temp("norm-m.json", r#"{"n": 2, "complex": false, "data": [3, 0, 0, 4]}"#);
        let w = write_temp("norm-w.json", r#"{"increments": [], "tail": 1}"#);
        let (_, h) = cmd_norm(&m, &w, NormFamily::Choquet, 2.0, None).unwrap();
        assert_eq!(h, "5");
        let (_, h) = cmd_norm(&m, &w, NormFamily::Kyfan, 1.0, Some(1)).unwrap();
        assert_eq!(h, "4");
        let (report, _) = cmd_norm(&m, &w, NormFamily::Choquet, 2.0, None).unwrap();
        assert!(report.results.contains_key("decomposition_terms"));
        assert!(report.passed());
    }

    #[test]
    fn nonconcave_weight_warns_without_failing() {
        let m = write_temp("warn-m.json", r#"{"n": 2, "complex": false, "data": [1, 0, 0, 1]}"#);
        let w = write_temp("warn-w.json", r#"{"increments": [1, 2], "tail": 0}"#);
        let (report, h) = cmd_norm(&m, &w, NormFamily::Choquet, 1.0, None).unwrap();
        assert_eq!(h, "3");
        assert!(report.passed());
        assert!(report
            .checks
            .iter()
            .any(|c| c.name == "weight-concave" && c.verdict == Verdict::Skip));
    }

    #[test]
    fn major_reports_domination_and_factorization() {
        let a = write_temp("maj-a.json", r#"{"n": 2, "complex": false, "data": [1, 0, 0, 0]}"#);
        let b = write_temp("maj-b.json", r#"{"n": 2, "complex": false, "data": [4, 0, 0, 1]}"#);
        let (report, h) = cmd_major(&a, &b).unwrap();
        assert_eq!(h, "dominated");
        assert!(report.passed());
        assert!(report.results.contains_key("contraction"));
        let (report, h) = cmd_major(&b, &a).unwrap();
        assert_eq!(h, "not-dominated");
        assert!(!report.passed());
    }

    #[test]
    fn check_suite_reports_seeded_results() {
        let (report, h) = cmd_check("sugeno-max", &opts()).unwrap();
        assert_eq!(h, "pass");
        assert_eq!(report.seed, Some(7));
        assert!(matches!(
            cmd_check("bogus", &opts()),
            Err(Error::UnknownSuite { .. })
        ));
    }

    #[test]
    fn falsify_proof_mode_on_the_step_weight() {
        let w = write_temp("fal-w.json", r#"{"increments": [1, 2], "tail": 0}"#);
        let (report, h) = cmd_falsify(&w, 1.0, FalsifyMode::Proof, &opts()).unwrap();
        assert!(report.passed());
        assert_eq!(h, "2");
        assert_eq!(report.results["found"], Value::Bool(true));
    }

    #[test]
    fn falsify_concave_weight_is_skipped() {
        let w = write_temp("fal-cw.json", r#"{"increments": [2, 1], "tail": 0.5}"#);
        let (report, h) = cmd_falsify(&w, 2.0, FalsifyMode::Random, &opts()).unwrap();
        assert_eq!(h, "skipped");
        assert!(report.passed());
        assert_eq!(report.checks[0].verdict, Verdict::Skip);
    }

    #[test]
    fn falsify_random_mode_finds_the_step_violation() {
        let w = write_temp("fal-rw.json", r#"{"increments": [1, 2], "tail": 0}"#);
        let mut o = opts();
        o.trials = 1000;
        o.dim = 2;
        let (report, _) = cmd_falsify(&w, 1.0, FalsifyMode::Random, &o).unwrap();
        assert!(report.passed());
        assert_eq!(report.results["found"], Value::Bool(true));
    }
}
