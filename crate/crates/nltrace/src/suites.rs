//! Named property suites: randomized checks of the structural laws the
//! traces and norms are built on, runnable from the command line and
//! from the acceptance tests.
//!
//! Every suite is a pure function of (seed, trials, dim): trial j draws
//! its randomness from a source seeded with seed + j, so any failure is
//! reproducible from the reported trial index. Each suite returns one
//! aggregated check line per property, carrying the trial count on pass
//! and the first failing witness (with its trial index) on fail.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::falsify::{random_complex, random_psd, random_unitary, random_weight, RandomSource};
use crate::integrals::{are_comonotonic, choquet_integral, sugeno_integral, NonNegVector};
use crate::majorization::{construct_contraction, eigen_dominates};
use crate::matrix::{ComplexMatrix, HermitianMatrix};
use crate::norms::{operator_norm, schatten_choquet_norm, sugeno_distance, sugeno_norm, NormSpec};
use crate::report::{CheckLine, Verdict};
use crate::spectral::{apply_spectrum_function, eigenvalue_sequence, SpectrumFunction};
use crate::tol;
use crate::traces::{phi_alpha, psi_alpha, sugeno_max_oracle};
use crate::weights::{MonotoneMeasure, WeightFunction};

pub const KNOWN_SUITES: [&str; 7] = [
    "comonotonic-additivity",
    "sugeno-max",
    "triangle-choquet",
    "triangle-sugeno",
    "majorization-equivalence",
    "weight-monotonicity",
    "ideal-inequalities",
];

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    pub trials: usize,
    pub dim: usize,
    /// Overrides each property's default tolerance when set.
    pub tolerance: Option<f64>,
}

impl SuiteConfig {
    fn tol(&self, default: f64) -> f64 {
        self.tolerance.unwrap_or(default)
    }
}

/// Accumulates one property across trials: pass count, or the first
/// failing witness.
struct Tally {
    name: &'static str,
    tolerance: Option<f64>,
    passes: usize,
    failure: Option<Value>,
}

impl Tally {
    fn new(name: &'static str, tolerance: Option<f64>) -> Self {
        Tally { name, tolerance, passes: 0, failure: None }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        if ok {
            self.passes += 1;
        } else if self.failure.is_none() {
            self.failure = Some(witness());
        }
    }

    fn line(self) -> CheckLine {
        match self.failure {
            None => CheckLine {
                name: self.name.to_string(),
                verdict: Verdict::Pass,
                tolerance: self.tolerance,
                witness: Some(json!({ "checks": self.passes })),
            },
            Some(w) => CheckLine {
                name: self.name.to_string(),
                verdict: Verdict::Fail,
                tolerance: self.tolerance,
                witness: Some(w),
            },
        }
    }
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<Vec<CheckLine>> {
    if cfg.dim == 0 || cfg.dim > tol::MAX_DIM {
        return Err(Error::Parse(format!(
            "suite dimension {} out of range 1..={}",
            cfg.dim,
            tol::MAX_DIM
        )));
    }
    match name {
        "comonotonic-additivity" => suite_comonotonic_additivity(cfg),
        "sugeno-max" => suite_sugeno_max(cfg),
        "triangle-choquet" => suite_triangle_choquet(cfg),
        "triangle-sugeno" => suite_triangle_sugeno(cfg),
        "majorization-equivalence" => suite_majorization_equivalence(cfg),
        "weight-monotonicity" => suite_weight_monotonicity(cfg),
        "ideal-inequalities" => suite_ideal_inequalities(cfg),
        _ => Err(Error::UnknownSuite {
            name: name.to_string(),
            known: KNOWN_SUITES.join(", "),
        }),
    }
}

fn trial_weight(src: &mut RandomSource, concave: bool) -> WeightFunction {
    let len = 1 + src.below(4);
    random_weight(src, len, concave)
}

/// A comonotone pair of spectrum functions over the given points
/// (0 is assumed present): both grow along one shared random order of
/// the nonzero points, which makes them comonotone without being
/// monotone in the point value.
fn comonotone_pair(src: &mut RandomSource, points: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let mut order: Vec<usize> = (0..points.len()).filter(|&i| points[i] > 0.0).collect();
    for i in (1..order.len()).rev() {
        let j = src.below(i + 1);
        order.swap(i, j);
    }
    let mut f = vec![0.0; points.len()];
    let mut g = vec![0.0; points.len()];
    let (mut cf, mut cg) = (0.0f64, 0.0f64);
    for &idx in &order {
        let df = src.uniform();
        let dg = src.uniform();
        // zero steps with probability 1/4 exercise ties
        cf += if df < 0.25 { 0.0 } else { df };
        cg += if dg < 0.25 { 0.0 } else { dg };
        f[idx] = cf;
        g[idx] = cg;
    }
    (f, g)
}

fn exact_position(points: &[f64], x: f64) -> usize {
    points
        .iter()
        .position(|&p| p == x)
        .expect("eigenvalue must be one of its own spectrum points")
}

/// Choquet additivity and Sugeno F-additivity on comonotone spectrum
/// functions: phi((f+g)(a)) = phi(f(a)) + phi(g(a)) and
/// psi((f v g)(a)) = psi(f(a)) v psi(g(a)). The Sugeno identity is
/// checked exactly at the spectral-value level (max/min arithmetic is
/// exact) and with an eigensolver tolerance through the matrix route.
fn suite_comonotonic_additivity(cfg: &SuiteConfig) -> Result<Vec<CheckLine>> {
    let tol_phi = cfg.tol(1e-8);
    let tol_matrix = cfg.tol(1e-9);
    let mut pair_ok = Tally::new("comonotone-pair", None);
    let mut choquet_vec = Tally::new("choquet-additive-spectrum", Some(tol_matrix));
    let mut sugeno_exact = Tally::new("sugeno-f-additive-exact", Some(0.0));
    let mut choquet_mat = Tally::new("choquet-additive-matrix", Some(tol_phi));
    let mut sugeno_mat = Tally::new("sugeno-f-additive-matrix", Some(tol_matrix));

    for trial in 0..cfg.trials {
        let mut src = RandomSource::for_trial(cfg.seed, trial as u64);
        let w = trial_weight(&mut src, trial % 2 == 0);
        let a = random_psd(&mut src, cfg.dim, None)?;
        let lambda = eigenvalue_sequence(&a)?;

        let mut points = lambda.clone();
        points.push(0.0);
        points.sort_by(|x, y| x.partial_cmp(y).unwrap());
        points.dedup();
        let (fv, gv) = comonotone_pair(&mut src, &points);

        let x: Vec<f64> = lambda.iter().map(|&l| fv[exact_position(&points, l)]).collect();
        let y: Vec<f64> = lambda.iter().map(|&l| gv[exact_position(&points, l)]).collect();
        pair_ok.check(are_comonotonic(&x, &y)?, || {
            json!({ "trial": trial, "x": x, "y": y })
        });

        let n = lambda.len();
        let mu = MonotoneMeasure::cardinality(n, w.clone());
        let sum_xy: Vec<f64> = x.iter().zip(&y).map(|(u, v)| u + v).collect();
        let max_xy: Vec<f64> = x.iter().zip(&y).map(|(u, v)| u.max(*v)).collect();
        let ix = choquet_integral(&NonNegVector::new(x.clone())?, &mu)?;
        let iy = choquet_integral(&NonNegVector::new(y.clone())?, &mu)?;
        let isum = choquet_integral(&NonNegVector::new(sum_xy)?, &mu)?;
        choquet_vec.check(
            (isum - ix - iy).abs() <= tol_matrix * (1.0 + ix.abs() + iy.abs()),
            || json!({ "trial": trial, "sum": isum, "parts": [ix, iy] }),
        );
        let sx = sugeno_integral(&NonNegVector::new(x.clone())?, &mu)?;
        let sy = sugeno_integral(&NonNegVector::new(y.clone())?, &mu)?;
        let smax = sugeno_integral(&NonNegVector::new(max_xy)?, &mu)?;
        sugeno_exact.check(smax == sx.max(sy), || {
            json!({ "trial": trial, "max": smax, "parts": [sx, sy] })
        });

        let f = SpectrumFunction::new(points.clone(), fv.clone())?;
        let g = SpectrumFunction::new(points.clone(), gv.clone())?;
        let fg_sum = SpectrumFunction::new(
            points.clone(),
            fv.iter().zip(&gv).map(|(u, v)| u + v).collect(),
        )?;
        let fg_max = SpectrumFunction::new(
            points.clone(),
            fv.iter().zip(&gv).map(|(u, v)| u.max(*v)).collect(),
        )?;
        let af = apply_spectrum_function(&a, &f)?;
        let ag = apply_spectrum_function(&a, &g)?;
        let phi_f = phi_alpha(&af, &w)?;
        let phi_g = phi_alpha(&ag, &w)?;
        let phi_sum = phi_alpha(&apply_spectrum_function(&a, &fg_sum)?, &w)?;
        choquet_mat.check(
            (phi_sum - phi_f - phi_g).abs() <= tol_phi * (1.0 + phi_f.abs() + phi_g.abs()),
            || json!({ "trial": trial, "sum": phi_sum, "parts": [phi_f, phi_g] }),
        );
        let psi_f = psi_alpha(&af, &w)?;
        let psi_g = psi_alpha(&ag, &w)?;
        let psi_max = psi_alpha(&apply_spectrum_function(&a, &fg_max)?, &w)?;
        sugeno_mat.check(
            (psi_max - psi_f.max(psi_g)).abs() <= tol_matrix * (1.0 + psi_f.max(psi_g)),
            || json!({ "trial": trial, "max": psi_max, "parts": [psi_f, psi_g] }),
        );
    }
    Ok(vec![
        pair_ok.line(),
        choquet_vec.line(),
        sugeno_exact.line(),
        choquet_mat.line(),
        sugeno_mat.line(),
    ])
}

/// psi_alpha equals the independent max/min oracle exactly, and no
/// random subspace compression produces a feasible level above psi.
fn suite_sugeno_max(cfg: &SuiteConfig) -> Result<Vec<CheckLine>> {
    let slack = cfg.tol(1e-9);
    let mut exact = Tally::new("oracle-exact-equality", Some(0.0));
    let mut bound = Tally::new("projection-upper-bound", Some(slack));

    for trial in 0..cfg.trials {
        let mut src = RandomSource::for_trial(cfg.seed, trial as u64);
        let w = trial_weight(&mut src, trial % 2 == 0);
        let a = random_psd(&mut src, cfg.dim, None)?;
        let psi = psi_alpha(&a, &w)?;
        let oracle = sugeno_max_oracle(&a, &w)?;
        exact.check(psi == oracle, || {
            json!({ "trial": trial, "psi": psi, "oracle": oracle })
        });

        for _ in 0..20 {
            let k = 1 + src.below(cfg.dim);
            let u = random_unitary(&mut src, cfg.dim);
            let basis = ComplexMatrix::from_fn(cfg.dim, k, |i, j| u[(i, j)]);
            let compressed =
                HermitianMatrix::symmetrized(basis.adjoint().mul(a.matrix()).mul(&basis));
            let mut cv = eigenvalue_sequence(&compressed)?;
            let bottom = cv.pop().expect("compression has k >= 1 eigenvalues");
            let feasible = w.alpha(k).min(bottom);
            bound.check(feasible <= psi + slack, || {
                json!({ "trial": trial, "rank": k, "feasible": feasible, "psi": psi })
            });
        }
    }
    Ok(vec![exact.line(), bound.line()])
}

/// Triangle inequality of the weighted Schatten p-functional for concave
/// weights, over general complex pairs and p in {1, 1.5, 2, 3}.
fn suite_triangle_choquet(cfg: &SuiteConfig) -> Result<Vec<CheckLine>> {
    let slack = cfg.tol(1e-8);
    let mut tri = Tally::new("choquet-triangle", Some(slack));
    for trial in 0..cfg.trials {
        let mut src = RandomSource::for_trial(cfg.seed, trial as u64);
        let p = [1.0, 1.5, 2.0, 3.0][trial % 4];
        let w = trial_weight(&mut src, true);
        let spec = NormSpec::new(w, p)?;
        let a = random_complex(&mut src, cfg.dim);
        let b = random_complex(&mut src, cfg.dim);
        let na = schatten_choquet_norm(&a, &spec)?;
        let nb = schatten_choquet_norm(&b, &spec)?;
        let nab = schatten_choquet_norm(&a.add(&b), &spec)?;
        tri.check(nab <= na + nb + slack * (1.0 + na + nb), || {
            json!({ "trial": trial, "p": p, "sum_norm": nab, "parts": [na, nb] })
        });
    }
    Ok(vec![tri.line()])
}

/// Sugeno norm triangle inequality and the induced metric's axioms for
/// concave weights, over general (non-normal) complex matrices.
fn suite_triangle_sugeno(cfg: &SuiteConfig) -> Result<Vec<CheckLine>> {
    let slack = cfg.tol(1e-9);
    let mut tri = Tally::new("sugeno-triangle", Some(slack));
    let mut self_zero = Tally::new("distance-self-zero", Some(0.0));
    let mut symmetric = Tally::new("distance-symmetric", Some(0.0));
    let mut d_tri = Tally::new("distance-triangle", Some(slack));
    let mut positive = Tally::new("distance-positive", None);

    for trial in 0..cfg.trials {
        let mut src = RandomSource::for_trial(cfg.seed, trial as u64);
        let w = trial_weight(&mut src, true);
        let a = random_complex(&mut src, cfg.dim);
        let b = random_complex(&mut src, cfg.dim);
        let c = random_complex(&mut src, cfg.dim);

        let na = sugeno_norm(&a, &w)?;
        let nb = sugeno_norm(&b, &w)?;
        let nab = sugeno_norm(&a.add(&b), &w)?;
        tri.check(nab <= na + nb + slack * (1.0 + na + nb), || {
            json!({ "trial": trial, "sum_norm": nab, "parts": [na, nb] })
        });

        let dab = sugeno_distance(&a, &b, &w)?;
        let dba = sugeno_distance(&b, &a, &w)?;
        let dbc = sugeno_distance(&b, &c, &w)?;
        let dac = sugeno_distance(&a, &c, &w)?;
        self_zero.check(sugeno_distance(&a, &a, &w)? == 0.0, || {
            json!({ "trial": trial })
        });
        symmetric.check(dab == dba, || {
            json!({ "trial": trial, "d_ab": dab, "d_ba": dba })
        });
        d_tri.check(dac <= dab + dbc + slack * (1.0 + dab + dbc), || {
            json!({ "trial": trial, "d_ac": dac, "d_ab": dab, "d_bc": dbc })
        });
        positive.check(dab > 0.0, || json!({ "trial": trial, "d_ab": dab }));
    }
    Ok(vec![
        tri.line(),
        self_zero.line(),
        symmetric.line(),
        d_tri.line(),
        positive.line(),
    ])
}

/// The three-way equivalence for PSD pairs: compression by a contraction
/// forces eigenvalue domination; domination yields a constructive
/// contraction factorization within tolerance; and domination is
/// equivalent to monotonicity of every weighted trace (probed by
/// selector, top-k, and random weights). A scaled-up negative control
/// must be rejected.
fn suite_majorization_equivalence(cfg: &SuiteConfig) -> Result<Vec<CheckLine>> {
    let probe_slack = cfg.tol(1e-8);
    let mut dominates = Tally::new("compression-dominates", None);
    let mut c_norm = Tally::new("contraction-norm-bound", Some(tol::CONTRACTION_NORM_SLACK));
    let mut residual = Tally::new("factorization-residual", Some(tol::FACTORIZATION_RESIDUAL));
    let mut probes = Tally::new("weight-probe-monotone", Some(probe_slack));
    let mut negative = Tally::new("negative-control-rejected", None);

    for trial in 0..cfg.trials {
        let mut src = RandomSource::for_trial(cfg.seed, trial as u64);
        let b = random_psd(&mut src, cfg.dim, None)?;
        let g = random_complex(&mut src, cfg.dim);
        let shrink = 1.0 / (operator_norm(&g)? * (1.0 + src.uniform()));
        let x = g.scale_re(shrink);
        let a = HermitianMatrix::symmetrized(x.mul(b.matrix()).mul(&x.adjoint()));

        dominates.check(eigen_dominates(&b, &a)?, || json!({ "trial": trial }));

        let c = construct_contraction(&a, &b)?;
        let cn = operator_norm(&c)?;
        c_norm.check(cn <= 1.0 + tol::CONTRACTION_NORM_SLACK, || {
            json!({ "trial": trial, "contraction_norm": cn })
        });
        let rebuilt = c.mul(b.matrix()).mul(&c.adjoint());
        let err = a.matrix().sub(&rebuilt).frobenius_norm();
        let bound = tol::FACTORIZATION_RESIDUAL * (1.0 + a.frobenius_norm());
        residual.check(err <= bound, || {
            json!({ "trial": trial, "residual": err, "bound": bound })
        });

        let mut probe_weights: Vec<WeightFunction> = Vec::new();
        for k in 1..=cfg.dim {
            probe_weights.push(WeightFunction::selector(k));
            probe_weights.push(WeightFunction::top_k(k));
        }
        for concave in [true, false] {
            probe_weights.push(trial_weight(&mut src, concave));
        }
        for pw in &probe_weights {
            let pa = phi_alpha(&a, pw)?;
            let pb = phi_alpha(&b, pw)?;
            probes.check(pa <= pb + probe_slack * (1.0 + pb.abs()), || {
                json!({ "trial": trial, "phi_a": pa, "phi_b": pb, "weight": pw.increments() })
            });
        }

        let doubled = b.scale_re(2.0);
        let rejected = !eigen_dominates(&b, &doubled)?
            && matches!(
                construct_contraction(&doubled, &b),
                Err(Error::NotDominated { .. })
            );
        negative.check(rejected, || json!({ "trial": trial }));
    }
    Ok(vec![
        dominates.line(),
        c_norm.line(),
        residual.line(),
        probes.line(),
        negative.line(),
    ])
}

/// The two quantitative class-inclusion properties: increment-wise
/// dominated weights give dominated norms, and on contractions the
/// p-th-power functional decreases as the exponent grows.
fn suite_weight_monotonicity(cfg: &SuiteConfig) -> Result<Vec<CheckLine>> {
    let slack = cfg.tol(1e-9);
    let mut weight_mono = Tally::new("increment-dominance", Some(slack));
    let mut p_mono = Tally::new("class-inclusion-contraction", Some(slack));

    for trial in 0..cfg.trials {
        let mut src = RandomSource::for_trial(cfg.seed, trial as u64);
        let small = trial_weight(&mut src, trial % 2 == 0);
        let bigger_increments: Vec<f64> = small
            .increments()
            .iter()
            .map(|&c| c + src.uniform())
            .collect();
        let big = WeightFunction::new(bigger_increments, small.tail() + src.uniform() * 0.5)?;
        let a = random_complex(&mut src, cfg.dim);
        let p = [1.0, 2.0, 3.0][trial % 3];
        let n_small = schatten_choquet_norm(&a, &NormSpec::new(small.clone(), p)?)?;
        let n_big = schatten_choquet_norm(&a, &NormSpec::new(big, p)?)?;
        weight_mono.check(n_small <= n_big + slack * (1.0 + n_big), || {
            json!({ "trial": trial, "p": p, "small": n_small, "big": n_big })
        });

        let g = random_complex(&mut src, cfg.dim);
        let contraction = g.scale_re(1.0 / (operator_norm(&g)? * (1.0 + src.uniform())));
        for (lo, hi) in [(1.0, 2.0), (1.5, 3.0), (2.0, 3.0)] {
            let n_lo = schatten_choquet_norm(&contraction, &NormSpec::new(small.clone(), lo)?)?;
            let n_hi = schatten_choquet_norm(&contraction, &NormSpec::new(small.clone(), hi)?)?;
            let lhs = n_hi.powf(hi);
            let rhs = n_lo.powf(lo);
            p_mono.check(lhs <= rhs + slack * (1.0 + rhs), || {
                json!({ "trial": trial, "p": lo, "q": hi, "phi_q": lhs, "phi_p": rhs })
            });
        }
    }
    Ok(vec![weight_mono.line(), p_mono.line()])
}

/// Ideal inequalities of the weighted Schatten p-functional:
/// |||ab||| <= |||a|||*opnorm(b), |||ba||| <= opnorm(b)*|||a|||, and
/// adjoint invariance |||a*||| = |||a|||.
fn suite_ideal_inequalities(cfg: &SuiteConfig) -> Result<Vec<CheckLine>> {
    let slack = cfg.tol(1e-8);
    let mut right = Tally::new("right-ideal-bound", Some(slack));
    let mut left = Tally::new("left-ideal-bound", Some(slack));
    let mut adjoint = Tally::new("adjoint-invariant", Some(slack));

    for trial in 0..cfg.trials {
        let mut src = RandomSource::for_trial(cfg.seed, trial as u64);
        let w = trial_weight(&mut src, trial % 2 == 0);
        let p = [1.0, 1.5, 2.0, 3.0][trial % 4];
        let spec = NormSpec::new(w, p)?;
        let a = random_complex(&mut src, cfg.dim);
        let b = random_complex(&mut src, cfg.dim);
        let na = schatten_choquet_norm(&a, &spec)?;
        let nb_op = operator_norm(&b)?;
        let nab = schatten_choquet_norm(&a.mul(&b), &spec)?;
        let nba = schatten_choquet_norm(&b.mul(&a), &spec)?;
        let bound = na * nb_op;
        right.check(nab <= bound + slack * (1.0 + bound), || {
            json!({ "trial": trial, "p": p, "product_norm": nab, "bound": bound })
        });
        left.check(nba <= bound + slack * (1.0 + bound), || {
            json!({ "trial": trial, "p": p, "product_norm": nba, "bound": bound })
        });
        let nastar = schatten_choquet_norm(&a.adjoint(), &spec)?;
        adjoint.check((nastar - na).abs() <= slack * (1.0 + na), || {
            json!({ "trial": trial, "p": p, "norm": na, "adjoint_norm": nastar })
        });
    }
    Ok(vec![right.line(), left.line(), adjoint.line()])
}
