//! Weighted one-sided tree series.
//!
//! A root with `s` children carries weight `G(s)`, every other vertex `H(s)`:
//!
//! ```text
//! G_k(s) = [s=0] + (2k+1)[s=1] + C(k+1,2)[s=2]     H_k(s) = C(k+1, s)
//! G_c(s) = [s=0] + 2[s=1] + ½[s=2]                 H_c(s) = 1/s!
//! ```
//!
//! with generating functions `g`, `h`, the tree operator `μ ↦ ρ h(μ)`,
//! the sums `D(n)` over labelled trees rooted at vertex 1, and the series
//! `P(ρ) = Σ ρⁿ D(n) / n!`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::continuous_partition_eval;
use crate::inverse::{inv_c, inv_k, singularity_continuous, singularity_discrete, DEFAULT_TOL};
use crate::rational::{binomial, factorial, Rational};

/// Largest `n` for the tree enumerators.
pub const MAX_TREE_SIZE: u32 = 9;
pub const DIVERGENCE_THRESHOLD: f64 = 1e6;
pub const DEFAULT_MAX_ITER: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Case {
    Discrete(u32),
    Continuous,
}

impl Case {
    pub fn singularity(&self) -> f64 {
        match self {
            Case::Discrete(k) => singularity_discrete(*k),
            Case::Continuous => singularity_continuous(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    /// `G`
    Root,
    /// `H`
    NonRoot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChildWeightProfile {
    pub case: Case,
    pub kind: Kind,
}

impl ChildWeightProfile {
    pub fn new(case: Case, kind: Kind) -> Self {
        ChildWeightProfile { case, kind }
    }

    pub fn weight(&self, s: u32) -> Rational {
        match (self.case, self.kind) {
            (Case::Discrete(k), Kind::Root) => match s {
                0 => Rational::one(),
                1 => Rational::integer(2 * k + 1),
                2 => Rational::from(binomial(k as u64 + 1, 2)),
                _ => Rational::zero(),
            },
            (Case::Discrete(k), Kind::NonRoot) => Rational::from(binomial(k as u64 + 1, s as u64)),
            (Case::Continuous, Kind::Root) => match s {
                0 => Rational::one(),
                1 => Rational::integer(2),
                2 => Rational::ratio(1, 2),
                _ => Rational::zero(),
            },
            (Case::Continuous, Kind::NonRoot) => {
                Rational::from(factorial(s)).recip().expect("factorials are nonzero")
            }
        }
    }

    /// Largest `s` with nonzero weight, if finite.
    pub fn support(&self) -> Option<u32> {
        match (self.case, self.kind) {
            (_, Kind::Root) => Some(2),
            (Case::Discrete(k), Kind::NonRoot) => Some(k + 1),
            (Case::Continuous, Kind::NonRoot) => None,
        }
    }

    pub fn gen_fun(&self, mu: f64) -> f64 {
        match self.kind {
            Kind::Root => gen_fun_g(self.case, mu),
            Kind::NonRoot => gen_fun_h(self.case, mu),
        }
    }
}

pub fn gen_fun_g(case: Case, mu: f64) -> f64 {
    match case {
        Case::Discrete(k) => {
            let k = k as f64;
            1.0 + (2.0 * k + 1.0) * mu + 0.5 * k * (k + 1.0) * mu * mu
        }
        Case::Continuous => 1.0 + 2.0 * mu + 0.5 * mu * mu,
    }
}

pub fn gen_fun_h(case: Case, mu: f64) -> f64 {
    match case {
        Case::Discrete(k) => (1.0 + mu).powi(k as i32 + 1),
        Case::Continuous => mu.exp(),
    }
}

/// `(argmax, max)` of `μ / g(μ)` or `μ / h(μ)` over `μ ≥ 0`.
pub fn ratio_max(case: Case, kind: Kind) -> Result<(f64, f64)> {
    match (case, kind) {
        (Case::Discrete(0), _) => {
            Err(Error::Domain("the ratio maximum needs k >= 1 in the discrete case".into()))
        }
        (Case::Discrete(k), Kind::Root) => {
            let k = k as f64;
            let m = (2.0 / (k * (k + 1.0))).sqrt();
            Ok((m, 1.0 / ((2.0 * k * (k + 1.0)).sqrt() + 2.0 * k + 1.0)))
        }
        (Case::Discrete(k), Kind::NonRoot) => Ok((1.0 / k as f64, singularity_discrete(k))),
        (Case::Continuous, Kind::Root) => Ok((2f64.sqrt(), 1.0 / (2.0 + 2f64.sqrt()))),
        (Case::Continuous, Kind::NonRoot) => Ok((1.0, singularity_continuous())),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FixedPointStatus {
    Converged,
    Diverged,
    IterationCap,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FixedPointResult {
    pub status: FixedPointStatus,
    pub mu: Option<f64>,
    pub iterations: u64,
    pub last_value: f64,
}

impl FixedPointResult {
    pub fn converged(&self) -> bool {
        self.status == FixedPointStatus::Converged
    }

    pub fn diverged(&self) -> bool {
        self.status == FixedPointStatus::Diverged
    }
}

/// Iterates `μ ← ρ h(μ)` from `μ = 0`.
pub fn fixed_point_iterate(
    case: Case,
    rho: f64,
    tol: f64,
    max_iter: u64,
    divergence_threshold: f64,
) -> Result<FixedPointResult> {
    if !(rho >= 0.0) || !rho.is_finite() {
        return Err(Error::Domain(format!("ρ must be a finite value >= 0, got {rho}")));
    }
    if !(tol > 0.0) || !(divergence_threshold > 0.0) {
        return Err(Error::Domain("tolerance and threshold must be positive".into()));
    }
    let mut mu = 0.0f64;
    for j in 0..max_iter {
        let next = rho * gen_fun_h(case, mu);
        if (next - mu).abs() <= tol {
            return Ok(FixedPointResult {
                status: FixedPointStatus::Converged,
                mu: Some(mu),
                iterations: j,
                last_value: next,
            });
        }
        if !(next <= divergence_threshold) {
            return Ok(FixedPointResult {
                status: FixedPointStatus::Diverged,
                mu: None,
                iterations: j + 1,
                last_value: next,
            });
        }
        mu = next;
    }
    Ok(FixedPointResult {
        status: FixedPointStatus::IterationCap,
        mu: None,
        iterations: max_iter,
        last_value: mu,
    })
}

fn check_tree_size(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("trees need at least one vertex".into()));
    }
    if n > MAX_TREE_SIZE {
        return Err(Error::SizeLimit {
            what: "tree enumeration",
            limit: MAX_TREE_SIZE as usize,
            got: n as usize,
        });
    }
    Ok(())
}

/// `D(n) = Σ_T G(s_1) ∏_{i≥2} H(s_i)` over labelled trees on `{1..n}` rooted
/// at 1, by running through every Prüfer sequence.
///
/// In a Prüfer sequence vertex `i` appears `deg(i) - 1` times, so the root has
/// one more child than its count and every other vertex exactly its count.
#[allow(non_snake_case)]
pub fn enumerate_D(case: Case, n: u32) -> Result<Rational> {
    check_tree_size(n)?;
    if n == 1 {
        return Ok(ChildWeightProfile::new(case, Kind::Root).weight(0));
    }
    let n = n as usize;
    let len = n - 2;
    let mut tally: HashMap<Vec<u8>, u64> = HashMap::new();
    let mut seq = vec![0usize; len];
    loop {
        let mut counts = vec![0u8; n];
        for &v in &seq {
            counts[v] += 1;
        }
        *tally.entry(counts).or_default() += 1;
        // odometer step
        let mut i = 0;
        while i < len && seq[i] == n - 1 {
            seq[i] = 0;
            i += 1;
        }
        if i == len {
            break;
        }
        seq[i] += 1;
    }
    let g = ChildWeightProfile::new(case, Kind::Root);
    let h = ChildWeightProfile::new(case, Kind::NonRoot);
    let mut total = Rational::zero();
    for (counts, multiplicity) in tally {
        let mut w = g.weight(counts[0] as u32 + 1);
        for &c in &counts[1..] {
            w = w * h.weight(c as u32);
        }
        total = total + w * Rational::integer(multiplicity);
    }
    Ok(total)
}

/// `D(n)` from exponential generating functions: the non-root series
/// `A = x Σ_s H(s) Aˢ/s!`, the rooted series `B = x Σ_s G(s) Aˢ/s!`, and
/// `D(n) = (n-1)! [xⁿ] B` since all labels are equally likely to be the root.
pub fn enumerate_d_by_egf(case: Case, n: u32) -> Result<Rational> {
    check_tree_size(n)?;
    let n = n as usize;
    let g = ChildWeightProfile::new(case, Kind::Root);
    let h = ChildWeightProfile::new(case, Kind::NonRoot);
    let mut a = vec![Rational::zero(); n + 1];
    for _ in 0..n {
        a = shift_by_x(&compose_weights(&h, &a, n));
    }
    let b = shift_by_x(&compose_weights(&g, &a, n));
    Ok(&b[n] * Rational::from(factorial(n as u32 - 1)))
}

/// `Σ_s w(s) Aˢ/s!` truncated after degree `deg`.
fn compose_weights(w: &ChildWeightProfile, a: &[Rational], deg: usize) -> Vec<Rational> {
    let top = w.support().map_or(deg, |s| (s as usize).min(deg));
    let mut out = vec![Rational::zero(); deg + 1];
    let mut power = vec![Rational::zero(); deg + 1];
    power[0] = Rational::one();
    for s in 0..=top {
        let c = w.weight(s as u32) * Rational::from(factorial(s as u32)).recip().expect("nonzero");
        if !c.is_zero() {
            for (o, p) in out.iter_mut().zip(&power) {
                *o = &*o + &c * p;
            }
        }
        power = series_mul(&power, a, deg);
    }
    out
}

fn series_mul(x: &[Rational], y: &[Rational], deg: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); deg + 1];
    for (i, xi) in x.iter().enumerate().take(deg + 1) {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate().take(deg + 1 - i) {
            if !yj.is_zero() {
                out[i + j] = &out[i + j] + xi * yj;
            }
        }
    }
    out
}

fn shift_by_x(s: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); s.len()];
    out[1..].clone_from_slice(&s[..s.len() - 1]);
    out
}

/// `P_N(ρ) = Σ_{n=1}^{N} ρⁿ D(n) / n!`.
#[allow(non_snake_case)]
pub fn truncated_P(case: Case, rho: f64, n_terms: u32) -> Result<f64> {
    if n_terms > MAX_TREE_SIZE {
        return Err(Error::SizeLimit {
            what: "tree enumeration",
            limit: MAX_TREE_SIZE as usize,
            got: n_terms as usize,
        });
    }
    let mut sum = 0.0;
    for n in 1..=n_terms {
        let coeff = enumerate_D(case, n)? / Rational::from(factorial(n));
        sum += coeff.to_f64() * rho.powi(n as i32);
    }
    Ok(sum)
}

/// Which quantity plays the role of `Q` in the closed form of `P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QConvention {
    /// `Q = ρ μ(ρ)`
    RhoMu,
    /// `Q = μ(ρ)`
    Mu,
}

/// The least fixed point of `μ = ρ h(μ)` on `[0, ρ*]`.
///
/// Continuous: `μ = InvC(ρ)`. Discrete: `μ = x / (1 - x)` with `x = InvK(ρ)`,
/// because `μ / (1+μ)^{k+1} = x (1-x)^k` under `x = μ / (1+μ)`.
pub fn fixed_point(case: Case, rho: f64) -> Result<f64> {
    match case {
        Case::Continuous => Ok(inv_c(rho, DEFAULT_TOL)?.value),
        Case::Discrete(k) => {
            let x = inv_k(k, rho, DEFAULT_TOL)?.value;
            if x >= 1.0 {
                return Err(Error::Domain(format!("no finite fixed point at ρ = {rho}")));
            }
            Ok(x / (1.0 - x))
        }
    }
}

/// `ρ(1 + 2Q + Q²/2)` in the continuous case, `ρ/(1-ρ)(1 + 2kQ + C(k+1,2)Q²)`
/// in the discrete one.
#[allow(non_snake_case)]
pub fn closed_form_P(case: Case, rho: f64, convention: QConvention) -> Result<f64> {
    let mu = fixed_point(case, rho)?;
    let q = match convention {
        QConvention::RhoMu => rho * mu,
        QConvention::Mu => mu,
    };
    Ok(match case {
        Case::Continuous => rho * (1.0 + 2.0 * q + 0.5 * q * q),
        Case::Discrete(k) => {
            let k = k as f64;
            rho / (1.0 - rho) * (1.0 + 2.0 * k * q + 0.5 * k * (k + 1.0) * q * q)
        }
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesEntry {
    pub name: String,
    pub value: f64,
    /// Whether `value` lies within the tolerance of the exact density.
    pub matches_exact: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesReport {
    pub rho: Rational,
    pub t: Rational,
    pub n_terms: u32,
    pub tolerance: f64,
    /// `-log Z(-ρ, t) / t`
    pub exact_density: f64,
    pub entries: Vec<SeriesEntry>,
}

impl SeriesReport {
    pub fn entry(&self, name: &str) -> Option<&SeriesEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

/// Compares the truncated series, both closed forms and `InvC(ρ)` against the
/// exact density `-log Z(-ρ, t)/t` on a block of length `t`.
pub fn series_vs_free_energy_report(
    rho: &Rational,
    t: &Rational,
    n_terms: u32,
    tolerance: f64,
) -> Result<SeriesReport> {
    if rho.is_negative() {
        return Err(Error::Domain(format!("ρ must be >= 0, got {rho}")));
    }
    if !t.is_positive() {
        return Err(Error::Domain(format!("t must be positive, got {t}")));
    }
    let z = continuous_partition_eval(rho, t)?;
    if !z.is_positive() {
        return Err(Error::NonPositive(format!("Z(-{rho}, {t}) is not positive")));
    }
    let exact_density = -z.ln()? / t.to_f64();
    let r = rho.to_f64();
    let case = Case::Continuous;
    let values = [
        ("truncated_series", truncated_P(case, r, n_terms)?),
        ("closed_form_rho_mu", closed_form_P(case, r, QConvention::RhoMu)?),
        ("closed_form_mu", closed_form_P(case, r, QConvention::Mu)?),
        ("inv_c", inv_c(r, DEFAULT_TOL)?.value),
    ];
    let entries = values
        .into_iter()
        .map(|(name, value)| SeriesEntry {
            name: name.to_string(),
            value,
            matches_exact: (value - exact_density).abs() <= tolerance,
        })
        .collect();
    Ok(SeriesReport {
        rho: rho.clone(),
        t: t.clone(),
        n_terms,
        tolerance,
        exact_density,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inverse::inv_c;

    const E: f64 = std::f64::consts::E;

    fn cases() -> Vec<Case> {
        vec![Case::Continuous, Case::Discrete(0), Case::Discrete(1), Case::Discrete(2), Case::Discrete(3)]
    }

    #[test]
    fn gen_fun_examples() {
        assert_eq!(gen_fun_g(Case::Continuous, 0.0), 1.0);
        assert_eq!(gen_fun_h(Case::Discrete(1), 1.0), 4.0);
        assert!((gen_fun_h(Case::Continuous, 1.0) - E).abs() < 1e-15);
    }

    #[test]
    fn weights_reproduce_generating_functions() {
        for case in cases() {
            for kind in [Kind::Root, Kind::NonRoot] {
                let p = ChildWeightProfile::new(case, kind);
                let top = p.support().unwrap_or(40);
                for i in 0..20 {
                    let mu = i as f64 * 0.1;
                    let series: f64 = (0..=top)
                        .map(|s| p.weight(s).to_f64() * mu.powi(s as i32))
                        .sum();
                    let want = p.gen_fun(mu);
                    assert!((series - want).abs() <= 1e-12 * want.max(1.0), "{case:?} {kind:?} {mu}");
                }
            }
        }
    }

    #[test]
    fn ratio_max_examples() {
        let (m, v) = ratio_max(Case::Continuous, Kind::Root).unwrap();
        assert!((m - 2f64.sqrt()).abs() < 1e-15 && (v - 0.29289).abs() < 1e-5);
        let (m, v) = ratio_max(Case::Continuous, Kind::NonRoot).unwrap();
        assert_eq!(m, 1.0);
        assert!((v - 1.0 / E).abs() < 1e-15);
        let (m, v) = ratio_max(Case::Discrete(1), Kind::NonRoot).unwrap();
        assert_eq!(m, 1.0);
        assert!((v - 0.25).abs() < 1e-15);
        assert!(ratio_max(Case::Discrete(0), Kind::Root).is_err());
    }

    #[test]
    fn ratio_max_beats_a_grid() {
        let mut all = vec![Case::Continuous];
        all.extend((1..=6).map(Case::Discrete));
        for case in all {
            for kind in [Kind::Root, Kind::NonRoot] {
                let p = ChildWeightProfile::new(case, kind);
                let (m, v) = ratio_max(case, kind).unwrap();
                assert!((m / p.gen_fun(m) - v).abs() < 1e-14);
                for i in 0..=5000 {
                    let mu = i as f64 * 1e-3;
                    assert!(mu / p.gen_fun(mu) <= v + 1e-15, "{case:?} {kind:?} {mu}");
                }
            }
        }
    }

    #[test]
    fn discrete_h_maximum_is_the_singularity() {
        for k in 1..=6 {
            let (_, v) = ratio_max(Case::Discrete(k), Kind::NonRoot).unwrap();
            let direct = (k as f64).powi(k as i32) / ((k + 1) as f64).powi(k as i32 + 1);
            assert!((v - direct).abs() < 1e-12);
        }
    }

    #[test]
    fn fixed_point_examples() {
        let r = fixed_point_iterate(Case::Continuous, 0.0, 1e-10, 10, DIVERGENCE_THRESHOLD).unwrap();
        assert!(r.converged());
        assert_eq!(r.mu, Some(0.0));
        let r = fixed_point_iterate(Case::Continuous, 1.0 / E, 1e-9, DEFAULT_MAX_ITER, DIVERGENCE_THRESHOLD)
            .unwrap();
        assert!(r.converged());
        assert!((r.mu.unwrap() - 1.0).abs() < 1e-3);
        let r = fixed_point_iterate(Case::Continuous, 0.4, 1e-10, DEFAULT_MAX_ITER, DIVERGENCE_THRESHOLD)
            .unwrap();
        assert!(r.diverged());
        let r = fixed_point_iterate(Case::Continuous, 0.3, 1e-10, 3, DIVERGENCE_THRESHOLD).unwrap();
        assert_eq!(r.status, FixedPointStatus::IterationCap);
    }

    #[test]
    fn fixed_point_matches_inverse_and_is_monotone() {
        let tol = 1e-13;
        for i in 1..=7 {
            let rho = 0.05 * i as f64;
            let r = fixed_point_iterate(Case::Continuous, rho, tol, DEFAULT_MAX_ITER, DIVERGENCE_THRESHOLD)
                .unwrap();
            let mu = r.mu.unwrap();
            assert!((mu - rho * mu.exp()).abs() <= 2.0 * tol);
            assert!((mu - inv_c(rho, 1e-14).unwrap().value).abs() <= 10.0 * tol / (1.0 - mu), "{rho}");
        }
        for case in cases() {
            let rho = 0.9 * case.singularity();
            let mut mu = 0.0f64;
            for _ in 0..200 {
                let next = rho * gen_fun_h(case, mu);
                assert!(next >= mu);
                mu = next;
            }
            let r = fixed_point_iterate(case, rho, 1e-12, DEFAULT_MAX_ITER, DIVERGENCE_THRESHOLD).unwrap();
            assert!((r.mu.unwrap() - fixed_point(case, rho).unwrap()).abs() < 1e-9, "{case:?}");
        }
    }

    #[test]
    fn divergence_is_monotone_in_rho() {
        for case in [Case::Continuous, Case::Discrete(1), Case::Discrete(2)] {
            let mut seen = false;
            for i in 0..=60 {
                let rho = case.singularity() * (0.7 + 0.01 * i as f64);
                let r = fixed_point_iterate(case, rho, 1e-10, DEFAULT_MAX_ITER, DIVERGENCE_THRESHOLD).unwrap();
                if seen {
                    assert!(r.diverged(), "{case:?} {rho}");
                }
                seen |= r.diverged();
            }
            assert!(seen);
        }
    }

    #[test]
    fn d_examples() {
        for case in cases() {
            assert_eq!(enumerate_D(case, 1).unwrap(), Rational::one());
        }
        assert_eq!(enumerate_D(Case::Continuous, 2).unwrap(), Rational::integer(2));
        assert_eq!(enumerate_D(Case::Continuous, 3).unwrap(), Rational::ratio(9, 2));
        assert!(matches!(enumerate_D(Case::Continuous, 10), Err(Error::SizeLimit { .. })));
        assert!(enumerate_D(Case::Continuous, 0).is_err());
    }

    #[test]
    fn k0_keeps_only_paths_from_the_root() {
        // G_0 and H_0 allow one child, so D(n) = (n-1)!
        for n in 1..=8u32 {
            assert_eq!(enumerate_D(Case::Discrete(0), n).unwrap(), Rational::from(factorial(n - 1)));
        }
    }

    #[test]
    fn prufer_and_egf_agree() {
        for case in cases() {
            for n in 1..=7 {
                assert_eq!(enumerate_D(case, n).unwrap(), enumerate_d_by_egf(case, n).unwrap(), "{case:?} {n}");
            }
        }
    }

    #[test]
    fn truncated_series_examples() {
        assert_eq!(truncated_P(Case::Continuous, 0.3, 1).unwrap(), 0.3);
        assert!((truncated_P(Case::Continuous, 0.2, 2).unwrap() - 0.24).abs() < 1e-15);
        assert!((truncated_P(Case::Continuous, 0.2, 3).unwrap() - 0.246).abs() < 1e-15);
        let p8 = truncated_P(Case::Continuous, 0.2, 8).unwrap();
        let p9 = truncated_P(Case::Continuous, 0.2, 9).unwrap();
        assert!((p9 - p8).abs() < 2e-3);
    }

    #[test]
    fn closed_form_examples() {
        for c in [QConvention::RhoMu, QConvention::Mu] {
            assert_eq!(closed_form_P(Case::Continuous, 0.0, c).unwrap(), 0.0);
        }
        let a = closed_form_P(Case::Continuous, 1.0 / E, QConvention::RhoMu).unwrap();
        assert!((a - (1.0 + 2.0 / E + 0.5 / (E * E)) / E).abs() < 1e-6);
        let b = closed_form_P(Case::Continuous, 1.0 / E, QConvention::Mu).unwrap();
        assert!((b - 3.5 / E).abs() < 1e-6);
        assert!((b - 1.28758).abs() < 1e-5);
        assert!(closed_form_P(Case::Continuous, 0.4, QConvention::Mu).is_err());
    }

    #[test]
    fn discrete_fixed_point_solves_the_equation() {
        for k in 1..=4 {
            let rho = 0.8 * singularity_discrete(k);
            let mu = fixed_point(Case::Discrete(k), rho).unwrap();
            assert!((mu - rho * gen_fun_h(Case::Discrete(k), mu)).abs() < 1e-12);
        }
    }

    #[test]
    fn report_examples() {
        let zero = series_vs_free_energy_report(&Rational::zero(), &Rational::integer(5), 5, 1e-12).unwrap();
        assert_eq!(zero.exact_density, 0.0);
        assert!(zero.entries.iter().all(|e| e.value == 0.0 && e.matches_exact));
        let rep = series_vs_free_energy_report(&Rational::ratio(1, 5), &Rational::integer(200), 9, 5e-3).unwrap();
        assert!((rep.exact_density - 0.259171).abs() < 5e-3);
        assert!(rep.entry("inv_c").unwrap().matches_exact);
    }
}
