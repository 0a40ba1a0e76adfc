//! The maps `f_k(x) = x(1-x)^k` and `f_c(y) = y e^{-y}`, their increasing
//! branches `InvK` on `[0, 1/(k+1)]` and `InvC` on `[0, 1]`, and the
//! quantities built from them: singularities, free energies, limits of
//! conditional ratios and their derivatives.
//!
//! `InvC(ρ) = -W₀(-ρ)`, the principal Lambert W branch. Every inverse is found
//! by bisection on the monotone branch, which stays safe at the branch end
//! where the derivative vanishes.
//!
//! Free energies are reported as `-lim log Z / size`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const ENDPOINT_SLACK: f64 = 1e-15;
const INV_E: f64 = 0.367_879_441_171_442_33;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// `[0, 1/(k+1)]`
    Discrete { k: u32 },
    /// `[0, 1]`
    Continuous,
}

impl Branch {
    pub fn upper(&self) -> f64 {
        match self {
            Branch::Discrete { k } => 1.0 / (*k as f64 + 1.0),
            Branch::Continuous => 1.0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct InverseResult {
    pub value: f64,
    /// `|f(value) - ρ|`
    pub residual: f64,
    pub branch: Branch,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalingRow {
    pub k: u32,
    /// `(k+1) ρ*_k`
    pub scaled_singularity: f64,
    /// `(k+1) InvK(ρ/(k+1))`
    pub scaled_inverse: f64,
}

pub fn f_k_eval(k: u32, x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("f_k needs x in [0, 1], got {x}")));
    }
    Ok(f_k(k, x))
}

fn f_k(k: u32, x: f64) -> f64 {
    x * (1.0 - x).powi(k as i32)
}

pub fn f_c_eval(y: f64) -> Result<f64> {
    if !(y >= 0.0) || !y.is_finite() {
        return Err(Error::Domain(format!("f_c needs y >= 0, got {y}")));
    }
    Ok(f_c(y))
}

fn f_c(y: f64) -> f64 {
    y * (-y).exp()
}

/// `k^k / (k+1)^(k+1)`, with `0^0 = 1`.
pub fn singularity_discrete(k: u32) -> f64 {
    if k == 0 {
        return 1.0;
    }
    let kf = k as f64;
    // (1/(k+1)) (1 - 1/(k+1))^k, stable for large k
    (kf * (-1.0 / (kf + 1.0)).ln_1p()).exp() / (kf + 1.0)
}

pub fn singularity_continuous() -> f64 {
    INV_E
}

fn check_activity(rho: f64, singularity: f64, what: &str) -> Result<f64> {
    if !(rho >= 0.0) {
        return Err(Error::Domain(format!("{what}: ρ must be >= 0, got {rho}")));
    }
    if rho > singularity * (1.0 + ENDPOINT_SLACK) {
        return Err(Error::Domain(format!(
            "{what}: ρ = {rho} exceeds the singularity {singularity}"
        )));
    }
    Ok(rho.min(singularity))
}

/// Bisection for `f(x) = ρ` on `[0, upper]` with `f` increasing.
fn bisect_increasing(f: impl Fn(f64) -> f64, rho: f64, upper: f64) -> (f64, f64) {
    let (mut lo, mut hi) = (0.0f64, upper);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) < rho {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let (rl, rh) = ((f(lo) - rho).abs(), (f(hi) - rho).abs());
    if rl <= rh {
        (lo, rl)
    } else {
        (hi, rh)
    }
}

fn finish(value: f64, residual: f64, tol: f64, branch: Branch) -> Result<InverseResult> {
    if residual > tol {
        return Err(Error::ToleranceNotMet { tol, residual });
    }
    Ok(InverseResult { value, residual, branch })
}

/// `InvK(ρ)`: the pre-image of `ρ` under `f_k` in `[0, 1/(k+1)]`.
pub fn inv_k(k: u32, rho: f64, tol: f64) -> Result<InverseResult> {
    let rho = check_activity(rho, singularity_discrete(k), "InvK")?;
    let branch = Branch::Discrete { k };
    if k == 0 {
        return finish(rho, 0.0, tol, branch);
    }
    let (value, residual) = bisect_increasing(|x| f_k(k, x), rho, branch.upper());
    finish(value, residual, tol, branch)
}

/// `InvC(ρ)`: the pre-image of `ρ` under `f_c` in `[0, 1]`.
pub fn inv_c(rho: f64, tol: f64) -> Result<InverseResult> {
    let rho = check_activity(rho, INV_E, "InvC")?;
    let branch = Branch::Continuous;
    let (value, residual) = bisect_increasing(f_c, rho, branch.upper());
    finish(value, residual, tol, branch)
}

/// Default tolerance for the inverse maps.
pub const DEFAULT_TOL: f64 = 1e-12;

/// `-log(1 - InvK(ρ))`.
pub fn free_energy_discrete(k: u32, rho: f64) -> Result<f64> {
    Ok(-(-inv_k(k, rho, DEFAULT_TOL)?.value).ln_1p())
}

/// The two candidate continuous free-energy densities at `ρ`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FreeEnergyCandidates {
    /// `ρ (1 + 2ρλ + ρ²λ²/2)` with `λ = InvC(ρ)`.
    pub polynomial_form: f64,
    /// `InvC(ρ)`, the density forced by the limit of conditional ratios.
    pub inverse_form: f64,
}

pub fn free_energy_continuous_candidates(rho: f64) -> Result<FreeEnergyCandidates> {
    let lambda = inv_c(rho, DEFAULT_TOL)?.value;
    let q = rho * lambda;
    Ok(FreeEnergyCandidates {
        polynomial_form: rho * (1.0 + 2.0 * q + q * q / 2.0),
        inverse_form: lambda,
    })
}

/// `lim_n Z(n)/Z(n-1) = 1 - InvK(ρ)`.
pub fn cond_limit_discrete(k: u32, rho: f64) -> Result<f64> {
    Ok(1.0 - inv_k(k, rho, DEFAULT_TOL)?.value)
}

/// `∂/∂ρ (1 - InvK(ρ)) = 1 / (kρ/Ξ - Ξ^k)` with `Ξ = 1 - InvK(ρ)`.
pub fn cond_limit_derivative_discrete(k: u32, rho: f64) -> Result<f64> {
    let star = singularity_discrete(k);
    if k >= 1 && rho >= star {
        return Err(Error::SingularPoint(format!(
            "∂Ξ/∂ρ diverges at ρ*_{k} = {star}"
        )));
    }
    let xi = cond_limit_discrete(k, rho)?;
    let denom = k as f64 * rho / xi - xi.powi(k as i32);
    if denom == 0.0 {
        return Err(Error::SingularPoint(format!("∂Ξ/∂ρ diverges at ρ = {rho}")));
    }
    Ok(1.0 / denom)
}

/// `∂InvC/∂ρ = e^λ / (1 - λ)` with `λ = InvC(ρ)`.
pub fn inv_c_derivative(rho: f64) -> Result<f64> {
    if rho >= INV_E {
        return Err(Error::SingularPoint("∂InvC/∂ρ diverges at 1/e".into()));
    }
    let lambda = inv_c(rho, DEFAULT_TOL)?.value;
    Ok(lambda.exp() / (1.0 - lambda))
}

pub fn scaling_table(ks: &[u32], rho: f64) -> Result<Vec<ScalingRow>> {
    check_activity(rho, INV_E, "scaling table")?;
    ks.iter()
        .map(|&k| {
            let kp1 = k as f64 + 1.0;
            let inner = inv_k(k, rho / kp1, DEFAULT_TOL / kp1)?;
            Ok(ScalingRow {
                k,
                scaled_singularity: kp1 * singularity_discrete(k),
                scaled_inverse: kp1 * inner.value,
            })
        })
        .collect()
}

/// Lower bounds on the singularity from earlier cluster-expansion criteria.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PriorBound {
    /// `"discrete"` or `"continuous"`.
    pub case: String,
    /// `None` for the continuous case.
    pub k: Option<u32>,
    pub method: String,
    pub value: f64,
    pub singularity: f64,
}

/// Dobrushin and Fernández–Procacci for gap `k >= 1`.
pub fn prior_bounds_discrete(k: u32) -> Result<Vec<PriorBound>> {
    if k == 0 {
        return Err(Error::Domain("discrete prior bounds need k >= 1".into()));
    }
    let kf = k as f64;
    let two_k = 2.0 * kf;
    // (2k)^(2k) / (2k+1)^(2k+1), same stable form as the singularity
    let dobrushin = (two_k * (-1.0 / (two_k + 1.0)).ln_1p()).exp() / (two_k + 1.0);
    let fernandez_procacci = 1.0 / ((2.0 * kf * (kf + 1.0)).sqrt() + 2.0 * kf + 1.0);
    let star = singularity_discrete(k);
    Ok(vec![
        PriorBound {
            case: "discrete".into(),
            k: Some(k),
            method: "dobrushin".into(),
            value: dobrushin,
            singularity: star,
        },
        PriorBound {
            case: "discrete".into(),
            k: Some(k),
            method: "fernandez_procacci".into(),
            value: fernandez_procacci,
            singularity: star,
        },
    ])
}

/// Ruelle and Fernández–Procacci–Scoppola.
pub fn prior_bounds_continuous() -> Vec<PriorBound> {
    vec![
        PriorBound {
            case: "continuous".into(),
            k: None,
            method: "ruelle".into(),
            value: 1.0 / (2.0 * std::f64::consts::E),
            singularity: INV_E,
        },
        PriorBound {
            case: "continuous".into(),
            k: None,
            method: "fps".into(),
            value: 1.0 / (2.0 + std::f64::consts::SQRT_2),
            singularity: INV_E,
        },
    ]
}

/// Discrete rows for `1..=k_max` followed by the continuous rows.
pub fn prior_bounds(k_max: u32) -> Vec<PriorBound> {
    let mut rows: Vec<PriorBound> = (1..=k_max)
        .flat_map(|k| prior_bounds_discrete(k).expect("k >= 1"))
        .collect();
    rows.extend(prior_bounds_continuous());
    rows
}
