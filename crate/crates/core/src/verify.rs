//! The acceptance checks, one function per criterion.
//!
//! Every check returns a [`CriterionOutcome`] whose `detail` carries the
//! measured quantities, so a failure says by how much it missed.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cluster::{penrose_check, PointConfiguration};
use crate::error::Result;
use crate::exact::{
    continuous_cond_ratio, continuous_smallest_root, discrete_cond_ratio, discrete_smallest_root,
    free_energy_density_estimate, Block,
};
use crate::inverse::{
    free_energy_continuous_candidates, inv_c, inv_k, prior_bounds, singularity_continuous,
    singularity_discrete, DEFAULT_TOL,
};
use crate::rational::Rational;
use crate::sim::{estimate_avoidance, estimate_intensity, test_r_dependence, RandomSeed, Region, SimParams};
use crate::table::{float, Table};
use crate::trees::{
    enumerate_D, enumerate_d_by_egf, fixed_point_iterate, Case, DEFAULT_MAX_ITER, DIVERGENCE_THRESHOLD,
};

pub const DEFAULT_SEED: u64 = 42;
const ROOT_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriterionOutcome {
    pub id: u32,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CriterionOutcome {
    fn new(id: u32, name: &str, passed: bool, detail: String) -> Self {
        CriterionOutcome { id, name: name.to_string(), passed, detail }
    }

    fn from_result(id: u32, name: &str, r: Result<(bool, String)>) -> Self {
        match r {
            Ok((passed, detail)) => Self::new(id, name, passed, detail),
            Err(e) => Self::new(id, name, false, format!("error: {e}")),
        }
    }

    /// `criterion 3 [FAIL] penrose identity: ...`
    pub fn line(&self) -> String {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        format!("criterion {:>2} [{mark}] {}: {}", self.id, self.name, self.detail)
    }
}

pub fn outcomes_table(outcomes: &[CriterionOutcome]) -> Table {
    let mut t = Table::new(["id", "name", "passed", "detail"]);
    for o in outcomes {
        t.push([o.id.to_string(), o.name.clone(), o.passed.to_string(), o.detail.clone()]);
    }
    t
}

pub fn run_all(seed: u64) -> Vec<CriterionOutcome> {
    vec![
        discrete_singularity(),
        continuous_singularity(),
        penrose_identity(seed),
        discrete_free_energy(),
        continuous_cond_limit(),
        continuous_free_energy(),
        telescoping_bound(),
        fixed_point_operator(),
        tree_series_oracle(),
        scaling(),
        simulation_suite(seed),
        prior_bounds_below_singularities(),
    ]
}

pub fn run_one(id: u32, seed: u64) -> Option<CriterionOutcome> {
    Some(match id {
        1 => discrete_singularity(),
        2 => continuous_singularity(),
        3 => penrose_identity(seed),
        4 => discrete_free_energy(),
        5 => continuous_cond_limit(),
        6 => continuous_free_energy(),
        7 => telescoping_bound(),
        8 => fixed_point_operator(),
        9 => tree_series_oracle(),
        10 => scaling(),
        11 => simulation_suite(seed),
        12 => prior_bounds_below_singularities(),
        _ => return None,
    })
}

/// Root brackets of `Z(-ρ, {1..n})` decrease strictly in `n ≤ 200` and end
/// within `1e-3` of `k^k/(k+1)^{k+1}`, for `k = 1, 2, 3`.
pub fn discrete_singularity() -> CriterionOutcome {
    let name = "discrete singularity";
    let run = || -> Result<(bool, String)> {
        let mut ok = true;
        let mut parts = Vec::new();
        for k in 1..=3u32 {
            let brackets = (1..=200u32)
                .into_par_iter()
                .map(|n| discrete_smallest_root(k, n, ROOT_TOL))
                .collect::<Result<Vec<_>>>()?;
            let decreasing = brackets.windows(2).all(|w| w[0].strictly_above(&w[1]));
            let gap = (brackets[199].midpoint() - singularity_discrete(k)).abs();
            ok &= decreasing && gap < 1e-3;
            parts.push(format!("k={k} decreasing={decreasing} |ρ_200-ρ*|={gap:.3e}"));
        }
        Ok((ok, parts.join("; ")))
    };
    CriterionOutcome::from_result(1, name, run())
}

/// `RootC(t)` decreases strictly on `t = 1..30`, stays above `1/e`, and ends within `1e-2` of it.
pub fn continuous_singularity() -> CriterionOutcome {
    let name = "continuous singularity";
    let run = || -> Result<(bool, String)> {
        let brackets = (1..=30i64)
            .into_par_iter()
            .map(|t| continuous_smallest_root(&Rational::integer(t), ROOT_TOL))
            .collect::<Result<Vec<_>>>()?;
        let decreasing = brackets.windows(2).all(|w| w[0].strictly_above(&w[1]));
        let inv_e = Rational::from_f64(singularity_continuous())?;
        let above = brackets.iter().all(|b| b.lo > inv_e);
        let gap = (brackets[29].midpoint() - singularity_continuous()).abs();
        let ok = decreasing && above && gap < 1e-2;
        Ok((ok, format!("decreasing={decreasing} above_1/e={above} |RootC(30)-1/e|={gap:.3e}")))
    };
    CriterionOutcome::from_result(2, name, run())
}

/// Exact `U = (-1)^{n-1} · #singleton trees` on 200 random configurations per `n = 2..7`.
pub fn penrose_identity(seed: u64) -> CriterionOutcome {
    let name = "penrose identity";
    let start = Instant::now();
    let run = || -> Result<(bool, String)> {
        let mut failures = 0;
        let mut failures_extremal_root = 0;
        let mut parts = Vec::new();
        for n in 2..=7usize {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64) << 32);
            let configs: Vec<PointConfiguration> =
                (0..200).map(|_| PointConfiguration::random(n, &mut rng)).collect();
            let checks =
                configs.par_iter().map(penrose_check).collect::<Result<Vec<_>>>()?;
            let mut fails_n = 0;
            for (c, p) in configs.iter().zip(&checks) {
                if !p.identity_holds {
                    fails_n += 1;
                    if c.root_is_extremal() {
                        failures_extremal_root += 1;
                    }
                }
            }
            failures += fails_n;
            parts.push(format!("n={n}:{fails_n}"));
        }
        let secs = start.elapsed().as_secs_f64();
        let ok = failures == 0 && secs < 300.0;
        Ok((
            ok,
            format!(
                "failures {failures}/1200 ({}); with first point leftmost or rightmost: {failures_extremal_root}; {secs:.1}s",
                parts.join(" ")
            ),
        ))
    };
    CriterionOutcome::from_result(3, name, run())
}

/// `k = 1`, `ρ = 0.2`, `n = 2000`: density within `1e-6` and conditional ratio within `1e-8`.
pub fn discrete_free_energy() -> CriterionOutcome {
    let name = "discrete free energy";
    let run = || -> Result<(bool, String)> {
        let rho = Rational::ratio(1, 5);
        let x = inv_k(1, 0.2, DEFAULT_TOL)?.value;
        let density = free_energy_density_estimate(&Block::discrete(1, 2000), &rho)?;
        let d_gap = (density - (-(-x).ln_1p())).abs();
        let cond = discrete_cond_ratio(1, 2000, &rho)?.to_f64();
        let c_gap = (cond - (1.0 - x)).abs();
        let ok = d_gap < 1e-6 && c_gap < 1e-8;
        Ok((ok, format!("density gap {d_gap:.3e} (< 1e-6), ratio gap {c_gap:.3e} (< 1e-8)")))
    };
    CriterionOutcome::from_result(4, name, run())
}

/// `-log Cond(1/100, 50) / (1/100)` within `1e-2` of `InvC(0.2)`.
pub fn continuous_cond_limit() -> CriterionOutcome {
    let name = "continuous conditional-ratio limit";
    let run = || -> Result<(bool, String)> {
        let s = Rational::ratio(1, 100);
        let cond = continuous_cond_ratio(&Rational::ratio(1, 5), &s, &Rational::integer(50))?;
        let value = -cond.ln()? / s.to_f64();
        let gap = (value - inv_c(0.2, DEFAULT_TOL)?.value).abs();
        Ok((gap < 1e-2, format!("-log Cond/s = {value:.6}, gap {gap:.3e} (< 1e-2)")))
    };
    CriterionOutcome::from_result(5, name, run())
}

/// `-log Z(-0.2, t)/t` at `t = 50, 100, 200` is Cauchy within `5e-3`; the last
/// value is compared with both closed-form candidates.
pub fn continuous_free_energy() -> CriterionOutcome {
    let name = "continuous free-energy density";
    let run = || -> Result<(bool, String)> {
        let rho = Rational::ratio(1, 5);
        let values = [50, 100, 200]
            .into_iter()
            .map(|t| free_energy_density_estimate(&Block::continuous(Rational::integer(t))?, &rho))
            .collect::<Result<Vec<_>>>()?;
        let diffs = [(values[1] - values[0]).abs(), (values[2] - values[1]).abs()];
        let ok = diffs.iter().all(|d| *d < 5e-3);
        let c = free_energy_continuous_candidates(0.2)?;
        let gap_a = (values[2] - c.polynomial_form).abs();
        let gap_b = (values[2] - c.inverse_form).abs();
        let matching = if gap_b < gap_a { "inverse form InvC(ρ)" } else { "polynomial form" };
        Ok((
            ok,
            format!(
                "t=50,100,200: {:.6} {:.6} {:.6}; steps {:.2e} {:.2e}; gap to polynomial form {gap_a:.3e}, to InvC {gap_b:.3e}; closer: {matching}",
                values[0], values[1], values[2], diffs[0], diffs[1]
            ),
        ))
    };
    CriterionOutcome::from_result(6, name, run())
}

/// `Cond(s, t) ≥ exp(-s InvC(ρ)) - 1e-12` on the grid.
pub fn telescoping_bound() -> CriterionOutcome {
    let name = "conditional-ratio lower bound";
    let run = || -> Result<(bool, String)> {
        let rhos = [Rational::ratio(1, 10), Rational::ratio(1, 5), "0.367879441171".parse::<Rational>()?];
        let mut worst = f64::INFINITY;
        let mut points = 0;
        for rho in &rhos {
            let lambda = inv_c(rho.to_f64(), DEFAULT_TOL)?.value;
            let margins = (1..=30i64)
                .into_par_iter()
                .flat_map(|si| (0..=5i64).into_par_iter().map(move |t| (si, t)))
                .map(|(si, t)| {
                    let s = Rational::ratio(si, 10);
                    let cond = continuous_cond_ratio(rho, &s, &Rational::integer(t))?.to_f64();
                    Ok(cond - (-s.to_f64() * lambda).exp())
                })
                .collect::<Result<Vec<f64>>>()?;
            points += margins.len();
            worst = margins.into_iter().fold(worst, f64::min);
        }
        Ok((worst >= -1e-12, format!("{points} grid points, smallest margin {worst:.3e} (>= -1e-12)")))
    };
    CriterionOutcome::from_result(7, name, run())
}

/// Convergence at 0.3, divergence at 0.4, and the divergence boundary within `1e-3` of `1/e`.
pub fn fixed_point_operator() -> CriterionOutcome {
    let name = "fixed-point operator";
    let run = || -> Result<(bool, String)> {
        let iterate = |rho| fixed_point_iterate(Case::Continuous, rho, 1e-12, DEFAULT_MAX_ITER, DIVERGENCE_THRESHOLD);
        let at_03 = iterate(0.3)?;
        let mu = at_03.mu.unwrap_or(f64::NAN);
        let residual = (mu - 0.3 * mu.exp()).abs();
        let err = (mu - inv_c(0.3, 1e-15)?.value).abs();
        let converged = at_03.converged() && residual < 1e-10 && err < 1e-10;
        let diverged = iterate(0.4)?.diverged();
        let (mut lo, mut hi) = (0.3, 0.4);
        while hi - lo > 1e-4 {
            let mid = 0.5 * (lo + hi);
            if iterate(mid)?.diverged() {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let boundary = 0.5 * (lo + hi);
        let b_gap = (boundary - singularity_continuous()).abs();
        let ok = converged && diverged && b_gap < 1e-3;
        Ok((
            ok,
            format!(
                "ρ=0.3: residual {residual:.2e}, |μ-InvC| {err:.2e}; ρ=0.4 diverged={diverged}; boundary {boundary:.5} (gap {b_gap:.2e})"
            ),
        ))
    };
    CriterionOutcome::from_result(8, name, run())
}

/// Prüfer enumeration and the generating-function recursion agree exactly.
pub fn tree_series_oracle() -> CriterionOutcome {
    let name = "tree-series oracle";
    let run = || -> Result<(bool, String)> {
        let mut checked = 0;
        let mut mismatches = Vec::new();
        for case in [Case::Continuous, Case::Discrete(1), Case::Discrete(2)] {
            for n in 1..=7 {
                checked += 1;
                let (a, b) = (enumerate_D(case, n)?, enumerate_d_by_egf(case, n)?);
                if a != b {
                    mismatches.push(format!("{case:?} n={n}: {a} vs {b}"));
                }
            }
        }
        let ok = mismatches.is_empty();
        let detail = if ok {
            format!("{checked} values equal, e.g. continuous D(7) = {}", enumerate_D(Case::Continuous, 7)?)
        } else {
            mismatches.join("; ")
        };
        Ok((ok, detail))
    };
    CriterionOutcome::from_result(9, name, run())
}

/// `(k+1)ρ*_k` increasing on log-spaced `k ≤ 10⁴`, its gap to `1/e` at `k = 1000`,
/// and the scaled inverse at `k = 10⁴`.
pub fn scaling() -> CriterionOutcome {
    let name = "scaling";
    let run = || -> Result<(bool, String)> {
        let mut ks: Vec<u32> = (0..=80).map(|i| 10f64.powf(i as f64 / 20.0).round() as u32).collect();
        ks.dedup();
        let scaled: Vec<f64> = ks.iter().map(|&k| (k as f64 + 1.0) * singularity_discrete(k)).collect();
        let increasing = scaled.windows(2).all(|w| w[1] > w[0]);
        let decreasing = scaled.windows(2).all(|w| w[1] < w[0]);
        let gap_1000 = (1001.0 * singularity_discrete(1000) - singularity_continuous()).abs();
        let k = 10_000u32;
        let scaled_inv = (k as f64 + 1.0) * inv_k(k, 0.3 / (k as f64 + 1.0), DEFAULT_TOL)?.value;
        let inv_gap = (scaled_inv - inv_c(0.3, DEFAULT_TOL)?.value).abs();
        let ok = increasing && gap_1000 < 2e-4 && inv_gap < 1e-3;
        Ok((
            ok,
            format!(
                "increasing={increasing} (strictly decreasing={decreasing}, from {:.6} at k=1 to {:.6} at k=10^4); |1001ρ*_1000-1/e|={gap_1000:.3e}; scaled inverse gap {inv_gap:.3e}",
                scaled[0],
                scaled[scaled.len() - 1]
            ),
        ))
    };
    CriterionOutcome::from_result(10, name, run())
}

/// Samplers: hard core, intensity, avoidance and independence at 10⁵ replicates each.
pub fn simulation_suite(seed: u64) -> CriterionOutcome {
    let name = "simulation suite";
    let start = Instant::now();
    let run = || -> Result<(bool, String)> {
        const REPS: u64 = 100_000;
        let quarter = Rational::ratio(1, 4);
        let fifth = Rational::ratio(1, 5);
        let discrete = SimParams::Discrete { k: 1, rho: quarter.clone(), n: 100 };
        let continuous = SimParams::Continuous { rho: quarter.clone(), t: Rational::integer(10) };
        let seed = RandomSeed::new(seed);
        let interval = |a, b| Region::Interval { lo: Rational::integer(a), hi: Rational::integer(b) };
        let reports = [
            ("intensity discrete", estimate_intensity(&discrete, REPS, seed)?),
            ("intensity continuous", estimate_intensity(&continuous, REPS, seed)?),
            (
                "avoidance {1..10}",
                estimate_avoidance(
                    &SimParams::Discrete { k: 1, rho: quarter.clone(), n: 10 },
                    &Region::Sites { lo: 1, hi: 10 },
                    REPS,
                    seed,
                )?,
            ),
            ("avoidance [0,10]", estimate_avoidance(&continuous, &interval(0, 10), REPS, seed)?),
            (
                "covariance [0,4]x[5,9]",
                test_r_dependence(&continuous, &interval(0, 4), &interval(5, 9), REPS, seed)?,
            ),
            (
                "covariance {1..5}x{8..12}",
                test_r_dependence(
                    &SimParams::Discrete { k: 1, rho: fifth, n: 12 },
                    &Region::Sites { lo: 1, hi: 5 },
                    &Region::Sites { lo: 8, hi: 12 },
                    REPS,
                    seed,
                )?,
            ),
        ];
        let secs = start.elapsed().as_secs_f64();
        let violations: u64 = reports.iter().map(|r| r.1.violations).sum();
        let within = reports.iter().all(|r| r.1.within(4.0));
        let ok = violations == 0 && within && secs < 600.0;
        let parts: Vec<String> = reports
            .iter()
            .map(|(label, r)| format!("{label} {:.3}σ", r.sigma_distance.unwrap_or(f64::NAN)))
            .collect();
        Ok((ok, format!("violations {violations}; {}; {secs:.1}s", parts.join(", "))))
    };
    CriterionOutcome::from_result(11, name, run())
}

/// Every earlier bound lies strictly below its singularity.
pub fn prior_bounds_below_singularities() -> CriterionOutcome {
    let name = "prior bounds";
    let bounds = prior_bounds(10);
    let offenders: Vec<String> = bounds
        .iter()
        .filter(|b| b.value >= b.singularity)
        .map(|b| format!("{} {:?} {}", b.case, b.k, float(b.value)))
        .collect();
    let min_gap = bounds.iter().map(|b| b.singularity - b.value).fold(f64::INFINITY, f64::min);
    let ok = offenders.is_empty();
    let detail = if ok {
        format!("{} bounds, smallest gap {min_gap:.3e}", bounds.len())
    } else {
        format!("not below: {}", offenders.join("; "))
    };
    CriterionOutcome::new(12, name, ok, detail)
}
