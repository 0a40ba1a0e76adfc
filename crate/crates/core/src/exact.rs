//! Exact partition functions of the hard-core gas on `{1..n}` (gap `k`) and on
//! `[0, t]` (unit radius), evaluated at negative activity `z = -ρ`.
//!
//! The discrete polynomial has coefficient `C(n - (m-1)k, m)` at `z^m`, the
//! number of `m`-subsets of `{1..n}` with pairwise gaps of at least `k+1`.
//! The continuous one is the Tonks form
//!
//! ```text
//! Z(z, [0,t]) = Σ_j z^j (t - (j-1))₊^j / j!
//! ```
//!
//! with `Z(z, [0,u]) = 1` for `u <= 0`. Both are checked against independent
//! routes in the tests: subset enumeration for the first, the
//! deletion-contraction integral for the second.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{smallest_positive_root, width_within, ActivityPolynomial, Polynomial, RootBracket};
use crate::rational::{binomial, factorial, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscreteModel {
    /// Gap parameter; the hard-core radius is `k + 1`.
    pub k: u32,
    pub n: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContinuousModel {
    t: Rational,
}

impl ContinuousModel {
    pub fn new(t: Rational) -> Result<Self> {
        if t.is_negative() {
            return Err(Error::Domain(format!("interval length must be >= 0, got {t}")));
        }
        Ok(ContinuousModel { t })
    }

    pub fn t(&self) -> &Rational {
        &self.t
    }
}

/// A finite volume of either geometry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "lowercase")]
pub enum Block {
    Discrete(DiscreteModel),
    Continuous(ContinuousModel),
}

impl Block {
    pub fn discrete(k: u32, n: u32) -> Self {
        Block::Discrete(DiscreteModel { k, n })
    }

    pub fn continuous(t: Rational) -> Result<Self> {
        ContinuousModel::new(t).map(Block::Continuous)
    }

    pub fn size(&self) -> Rational {
        match self {
            Block::Discrete(m) => Rational::integer(m.n),
            Block::Continuous(m) => m.t.clone(),
        }
    }

    pub fn partition_eval(&self, rho: &Rational) -> Result<Rational> {
        match self {
            Block::Discrete(m) => discrete_partition_eval(m.k, m.n, rho),
            Block::Continuous(m) => continuous_partition_eval(rho, &m.t),
        }
    }
}

fn check_rho(rho: &Rational) -> Result<()> {
    if rho.is_negative() {
        return Err(Error::Domain(format!("ρ must be >= 0, got {rho}")));
    }
    Ok(())
}

pub fn discrete_partition_polynomial(k: u32, n: u32) -> ActivityPolynomial {
    let (k, n) = (k as i64, n as i64);
    let mut coeffs = Vec::new();
    for m in 0.. {
        let top = n + k - m * k;
        if top < m {
            break;
        }
        coeffs.push(Rational::integer(binomial(top as u64, m as u64)));
    }
    Polynomial::new(coeffs)
}

/// `Z(-ρ, {1..n})`.
pub fn discrete_partition_eval(k: u32, n: u32, rho: &Rational) -> Result<Rational> {
    check_rho(rho)?;
    Ok(discrete_partition_polynomial(k, n).eval(&-rho))
}

/// `Z(-ρ, {1..n}) / Z(-ρ, {1..n-1})`.
pub fn discrete_cond_ratio(k: u32, n: u32, rho: &Rational) -> Result<Rational> {
    if n == 0 {
        return Err(Error::Domain("conditional ratio needs n >= 1".into()));
    }
    let num = discrete_partition_eval(k, n, rho)?;
    let den = discrete_partition_eval(k, n - 1, rho)?;
    if den.is_zero() {
        return Err(Error::ZeroDenominator(format!(
            "Z(-{rho}, n={}) = 0 for k={k}",
            n - 1
        )));
    }
    Ok(num / den)
}

/// `q^m Z(-p/q, {1..m})` for `m = 0..=n`, from `Z(m) = Z(m-1) - ρ Z(m-k-1)`
/// with `Z(j) = 1` for `j < 0`. All integer arithmetic.
fn scaled_block_values(k: u32, n: u32, rho: &Rational) -> Vec<BigInt> {
    let p = rho.numer();
    let q = rho.denom();
    let k = k as usize;
    let q_k = num_traits::pow(q.clone(), k);
    let mut q_pow = BigInt::one(); // q^(m-1)
    let mut w = Vec::with_capacity(n as usize + 1);
    w.push(BigInt::one());
    for m in 1..=n as usize {
        let removed = if m > k {
            p * &q_k * &w[m - k - 1]
        } else {
            p * &q_pow
        };
        let next = q * &w[m - 1] - removed;
        w.push(next);
        q_pow *= q;
    }
    w
}

/// True iff `Z(-ρ, {1..m}) > 0` for every `m <= n`, which holds exactly on
/// `[0, ρ_n)` with `ρ_n` the smallest root of `Z(-ρ, {1..n})`.
fn prefix_positive(k: u32, n: u32, rho: &Rational) -> bool {
    scaled_block_values(k, n, rho).iter().all(Signed::is_positive)
}

/// Bracket for the smallest positive root of `ρ ↦ Z(-ρ, {1..n})`.
pub fn discrete_smallest_root(k: u32, n: u32, tol: f64) -> Result<RootBracket> {
    if n == 0 {
        return Err(Error::Domain("Z(-ρ, ∅) = 1 has no root".into()));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    // Z(-1, {1}) = 0, so ρ = 1 always fails the prefix test.
    let mut lo = Rational::zero();
    let mut hi = Rational::one();
    while !width_within(&lo, &hi, tol) {
        let mid = lo.midpoint(&hi);
        if prefix_positive(k, n, &mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let sign = |r: &Rational| {
        scaled_block_values(k, n, r)
            .last()
            .map(|v| v.sign())
            .expect("n >= 1")
    };
    let guaranteed_sign_change =
        sign(&lo) == num_bigint::Sign::Plus && sign(&hi) != num_bigint::Sign::Plus;
    Ok(RootBracket { lo, hi, guaranteed_sign_change })
}

/// Polynomial in the activity `z` for the interval `[0, t]`.
pub fn continuous_partition_polynomial(t: &Rational) -> Result<ActivityPolynomial> {
    if t.is_negative() {
        return Err(Error::Domain(format!("interval length must be >= 0, got {t}")));
    }
    let mut coeffs = vec![Rational::one()];
    for j in 1u32.. {
        let free = t - Rational::integer(j as i64 - 1);
        if !free.is_positive() {
            break;
        }
        coeffs.push(free.pow(j) / Rational::integer(factorial(j)));
    }
    Ok(Polynomial::new(coeffs))
}

/// `Z(-ρ, [0, t])`.
pub fn continuous_partition_eval(rho: &Rational, t: &Rational) -> Result<Rational> {
    check_rho(rho)?;
    Ok(continuous_partition_polynomial(t)?.eval(&-rho))
}

/// `Z(-ρ, [0, s+t]) / Z(-ρ, [0, t])`.
pub fn continuous_cond_ratio(rho: &Rational, s: &Rational, t: &Rational) -> Result<Rational> {
    if s.is_negative() {
        return Err(Error::Domain(format!("s must be >= 0, got {s}")));
    }
    let den = continuous_partition_eval(rho, t)?;
    if den.is_zero() {
        return Err(Error::ZeroDenominator(format!("Z(-{rho}, [0,{t}]) = 0")));
    }
    Ok(continuous_partition_eval(rho, &(s + t))? / den)
}

/// Bracket for the smallest positive root of `ρ ↦ Z(-ρ, [0, t])`.
pub fn continuous_smallest_root(t: &Rational, tol: f64) -> Result<RootBracket> {
    if !t.is_positive() {
        return Err(Error::Domain(format!("t must be > 0, got {t}")));
    }
    let in_z = continuous_partition_polynomial(t)?;
    let in_rho = Polynomial::new(
        in_z.coeffs()
            .iter()
            .enumerate()
            .map(|(j, c)| if j % 2 == 1 { -c } else { c.clone() })
            .collect(),
    );
    smallest_positive_root(&in_rho, tol)
}

/// `∫_0^s Z(-ρ, [0, max(t+x-1, 0)]) dx`, integrated piecewise.
///
/// Term `j` of the integrand, `(-ρ)^j (t+x-j)^j / j!`, switches on at
/// `x = j - t`; between consecutive switch points the integrand is a single
/// polynomial in `x` and is integrated exactly.
fn contraction_integral(rho: &Rational, t: &Rational, s: &Rational) -> Rational {
    let zero = Rational::zero();
    let mut cuts = vec![zero.clone(), s.clone()];
    let max_j = (t + s).floor().to_u32().unwrap_or(0) + 1;
    for j in 1..=max_j {
        let x = Rational::integer(j as i64) - t;
        if x > zero && &x < s {
            cuts.push(x);
        }
    }
    cuts.sort();
    cuts.dedup();
    let neg_rho = -rho;
    let mut total = Rational::zero();
    for w in cuts.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        let mid = a.midpoint(b);
        let mut integrand = Polynomial::constant(Rational::one());
        for j in 1..=max_j {
            let shift = t - Rational::integer(j as i64);
            if (&mid + &shift).is_positive() {
                let weight = neg_rho.pow(j) / Rational::integer(factorial(j));
                integrand = integrand.add(&Polynomial::linear(shift).pow(j).scale(&weight));
            }
        }
        total = total + integrand.integrate(a, b);
    }
    total
}

/// Exact check of `Z(t+s) = Z(t) - ρ ∫_0^s Z(max(t+x-1, 0)) dx` for `0 <= s < 1`.
pub fn verify_deletion_contraction(rho: &Rational, t: &Rational, s: &Rational) -> Result<bool> {
    check_rho(rho)?;
    if t.is_negative() {
        return Err(Error::Domain(format!("t must be >= 0, got {t}")));
    }
    if s.is_negative() || *s >= 1 {
        return Err(Error::Domain(format!("s must lie in [0, 1), got {s}")));
    }
    let lhs = continuous_partition_eval(rho, &(t + s))?;
    let rhs = continuous_partition_eval(rho, t)? - rho * contraction_integral(rho, t, s);
    Ok(lhs == rhs)
}

/// `-log Z(-ρ, V) / |V|` from the exact value of `Z`.
pub fn free_energy_density_estimate(block: &Block, rho: &Rational) -> Result<f64> {
    let size = block.size();
    if !size.is_positive() {
        return Err(Error::Domain("volume must be positive".into()));
    }
    let z = block.partition_eval(rho)?;
    if !z.is_positive() {
        return Err(Error::NonPositive(format!("Z(-{rho}) = {} is not positive", z.to_f64())));
    }
    Ok(-z.ln()? / size.to_f64())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::ratio(p, q)
    }

    /// Hard-core subsets of {1..n} counted by size, by enumeration.
    fn brute_force_coefficients(k: u32, n: u32) -> Vec<Rational> {
        let mut counts = vec![0i64; n as usize + 1];
        for mask in 0u32..(1 << n) {
            let sites: Vec<u32> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            if sites.windows(2).all(|w| w[1] - w[0] > k) {
                counts[sites.len()] += 1;
            }
        }
        while counts.len() > 1 && *counts.last().unwrap() == 0 {
            counts.pop();
        }
        counts.into_iter().map(Rational::integer).collect()
    }

    #[test]
    fn discrete_polynomial_examples() {
        let as_ints = |p: Polynomial| p.coeffs().iter().map(|c| c.to_f64() as i64).collect::<Vec<_>>();
        assert_eq!(as_ints(discrete_partition_polynomial(1, 3)), vec![1, 3, 1]);
        assert_eq!(as_ints(discrete_partition_polynomial(0, 2)), vec![1, 2, 1]);
        assert_eq!(as_ints(discrete_partition_polynomial(2, 1)), vec![1, 1]);
        assert_eq!(as_ints(discrete_partition_polynomial(3, 0)), vec![1]);
    }

    #[test]
    fn discrete_polynomial_matches_subset_enumeration() {
        for k in 0..=3 {
            for n in 0..=14 {
                let expected = brute_force_coefficients(k, n);
                assert_eq!(discrete_partition_polynomial(k, n).coeffs(), &expected[..], "k={k} n={n}");
            }
        }
    }

    #[test]
    fn discrete_eval_examples() {
        let rho = r(3, 7);
        for k in 0..4 {
            assert_eq!(discrete_partition_eval(k, 0, &rho).unwrap(), Rational::one());
            assert_eq!(discrete_partition_eval(k, 1, &rho).unwrap(), Rational::one() - &rho);
        }
        assert_eq!(discrete_partition_eval(1, 3, &r(1, 4)).unwrap(), r(5, 16));
        assert!(discrete_partition_eval(1, 3, &r(-1, 4)).is_err());
    }

    #[test]
    fn recursion_agrees_with_polynomial() {
        for k in 0..4 {
            for rho in [r(1, 5), r(2, 7), r(9, 10), r(3, 2)] {
                let w = scaled_block_values(k, 25, &rho);
                for (m, wm) in w.iter().enumerate() {
                    let scaled = Rational::integer(wm.clone())
                        / Rational::integer(num_traits::pow(rho.denom().clone(), m));
                    assert_eq!(scaled, discrete_partition_eval(k, m as u32, &rho).unwrap());
                }
            }
        }
    }

    #[test]
    fn discrete_cond_ratio_examples() {
        for n in 1..6 {
            assert_eq!(discrete_cond_ratio(0, n, &r(1, 3)).unwrap(), r(2, 3));
        }
        assert_eq!(discrete_cond_ratio(1, 2, &r(1, 4)).unwrap(), r(2, 3));
        assert_eq!(discrete_cond_ratio(1, 3, &r(1, 4)).unwrap(), r(5, 8));
        // Z(-1/2, {1,2}) = 0 for k = 1
        assert!(matches!(discrete_cond_ratio(1, 3, &r(1, 2)), Err(Error::ZeroDenominator(_))));
        assert!(discrete_cond_ratio(1, 0, &r(1, 2)).is_err());
    }

    #[test]
    fn discrete_root_examples() {
        for n in [1, 2, 5, 9] {
            let b = discrete_smallest_root(0, n, 1e-12).unwrap();
            assert!(b.contains(1.0), "{b:?}");
        }
        let b = discrete_smallest_root(1, 2, 1e-12).unwrap();
        assert!(b.contains(0.5) && b.guaranteed_sign_change);
        let b = discrete_smallest_root(1, 3, 1e-12).unwrap();
        assert!(b.contains((3.0 - 5f64.sqrt()) / 2.0));
        assert!(width_within(&b.lo, &b.hi, 1e-12));
        assert!(discrete_smallest_root(1, 0, 1e-12).is_err());
    }

    #[test]
    fn k1_roots_match_closed_form() {
        // Z_n for k = 1 has smallest root 1 / (4 cos²(π/(n+2))).
        for n in 1..60u32 {
            let b = discrete_smallest_root(1, n, 1e-13).unwrap();
            let c = (std::f64::consts::PI / (n as f64 + 2.0)).cos();
            let expected = 1.0 / (4.0 * c * c);
            assert!((b.midpoint() - expected).abs() < 1e-12, "n={n}");
            assert!(b.guaranteed_sign_change);
        }
    }

    #[test]
    fn prefix_bisection_agrees_with_sturm_isolation() {
        for k in 1..=3 {
            for n in 1..=24 {
                let by_prefix = discrete_smallest_root(k, n, 1e-10).unwrap();
                let p = discrete_partition_polynomial(k, n);
                let in_rho = Polynomial::new(
                    p.coeffs()
                        .iter()
                        .enumerate()
                        .map(|(j, c)| if j % 2 == 1 { -c } else { c.clone() })
                        .collect(),
                );
                let by_sturm = smallest_positive_root(&in_rho, 1e-10).unwrap();
                assert!(
                    (by_prefix.midpoint() - by_sturm.midpoint()).abs() < 2e-10,
                    "k={k} n={n}"
                );
            }
        }
    }

    #[test]
    fn positive_below_root_and_roots_decrease() {
        for k in 0..=3u32 {
            let mut previous: Option<RootBracket> = None;
            for n in 1..=30 {
                let b = discrete_smallest_root(k, n, 1e-12).unwrap();
                for frac in [r(1, 10), r(1, 2), r(9, 10), r(999, 1000)] {
                    let rho = &b.lo * &frac;
                    assert!(discrete_partition_eval(k, n, &rho).unwrap().is_positive());
                }
                assert!(discrete_partition_eval(k, n, &b.lo).unwrap().is_positive());
                if let Some(prev) = previous {
                    if k == 0 {
                        assert_eq!(prev, b);
                    } else {
                        assert!(prev.strictly_above(&b), "k={k} n={n}");
                    }
                }
                previous = Some(b);
            }
        }
    }

    fn singularity(k: u32) -> Rational {
        Rational::integer(num_traits::pow(BigInt::from(k), k as usize))
            / Rational::integer(num_traits::pow(BigInt::from(k + 1), k as usize + 1))
    }

    #[test]
    fn blocks_and_ratios_decrease_in_n_below_singularity() {
        for k in 0..=3u32 {
            let star = singularity(k);
            // k = 0 at ρ = 1 gives Z = 0 for every n >= 1
            let top = if k == 0 { 9 } else { 10 };
            for j in 1..=top {
                let rho = &star * &r(j, 10);
                let z: Vec<Rational> = (0..=25)
                    .map(|n| discrete_partition_eval(k, n, &rho).unwrap())
                    .collect();
                for n in 0..25 {
                    assert!(z[n] > z[n + 1], "Z k={k} j={j} n={n}");
                }
                for n in 1..25 {
                    let a = &z[n] / &z[n - 1];
                    let b = &z[n + 1] / &z[n];
                    if k == 0 {
                        assert_eq!(a, b);
                    } else {
                        assert!(a > b, "cond k={k} j={j} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn continuous_eval_examples() {
        let rho = r(2, 9);
        assert_eq!(continuous_partition_eval(&rho, &r(1, 2)).unwrap(), Rational::one() - &rho / &Rational::integer(2));
        assert_eq!(continuous_partition_eval(&r(1, 4), &r(3, 2)).unwrap(), r(81, 128));
        assert_eq!(continuous_partition_eval(&rho, &Rational::zero()).unwrap(), Rational::one());
    }

    #[test]
    fn continuous_closed_form_reproduces_low_volume_forms() {
        // t < 1: 1 - tρ. 1 <= t < 2: 1 - tρ + (t-1)²ρ²/2. As polynomials in z.
        for t in [r(1, 3), r(1, 2), r(99, 100)] {
            let p = continuous_partition_polynomial(&t).unwrap();
            assert_eq!(p, Polynomial::new(vec![Rational::one(), t.clone()]));
        }
        for t in [Rational::one(), r(3, 2), r(7, 4), r(199, 100)] {
            let p = continuous_partition_polynomial(&t).unwrap();
            let tm1 = &t - &Rational::one();
            let expected = Polynomial::new(vec![Rational::one(), t.clone(), &tm1 * &tm1 / Rational::integer(2)]);
            assert_eq!(p, expected, "t={t}");
        }
    }

    #[test]
    fn continuous_cond_examples() {
        let rho = r(1, 4);
        assert_eq!(continuous_cond_ratio(&rho, &Rational::zero(), &r(5, 2)).unwrap(), Rational::one());
        assert_eq!(continuous_cond_ratio(&rho, &r(1, 2), &r(1, 2)).unwrap(), r(6, 7));
        assert_eq!(continuous_cond_ratio(&rho, &Rational::one(), &r(1, 2)).unwrap(), r(81, 112));
        // Z(-2, [0, 1/2]) = 0
        assert!(matches!(
            continuous_cond_ratio(&Rational::integer(2), &r(1, 4), &r(1, 2)),
            Err(Error::ZeroDenominator(_))
        ));
    }

    #[test]
    fn continuous_root_examples() {
        let b = continuous_smallest_root(&r(1, 2), 1e-12).unwrap();
        assert!(b.contains(2.0) && b.guaranteed_sign_change);
        let b1 = continuous_smallest_root(&r(5, 2), 1e-12).unwrap();
        let b2 = continuous_smallest_root(&r(11, 4), 1e-12).unwrap();
        assert!(b1.strictly_above(&b2));
        let b = continuous_smallest_root(&Rational::integer(30), 1e-9).unwrap();
        let inv_e = (-1f64).exp();
        assert!(b.lo.to_f64() >= inv_e && b.hi.to_f64() <= inv_e + 0.01, "{b:?}");
        assert!(continuous_smallest_root(&Rational::zero(), 1e-9).is_err());
    }

    #[test]
    fn continuous_ratios_decrease_under_volume_growth() {
        let grid = [Rational::zero(), r(1, 3), r(1, 1), r(5, 2)];
        let steps = [r(1, 4), r(1, 1), r(3, 2)];
        for rho in [r(1, 10), r(1, 5), r(9, 25)] {
            for s in &grid {
                for t in &grid {
                    if s.is_zero() {
                        continue;
                    }
                    let base = continuous_cond_ratio(&rho, s, t).unwrap();
                    for ds in &steps {
                        for dt in &steps {
                            for (s2, t2) in [(s + ds, t.clone()), (s.clone(), t + dt), (s + ds, t + dt)] {
                                let grown = continuous_cond_ratio(&rho, &s2, &t2).unwrap();
                                assert!(base > grown, "ρ={rho} s={s} t={t} -> s'={s2} t'={t2}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn deletion_contraction_examples() {
        let rho = r(3, 10);
        assert!(verify_deletion_contraction(&rho, &Rational::zero(), &r(1, 2)).unwrap());
        assert!(verify_deletion_contraction(&r(1, 4), &r(1, 2), &r(1, 2)).unwrap());
        assert!(verify_deletion_contraction(&r(1, 3), &r(3, 2), &r(1, 3)).unwrap());
        assert!(verify_deletion_contraction(&rho, &r(1, 2), &Rational::one()).is_err());
    }

    #[test]
    fn deletion_contraction_on_random_grid() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let rho = r(rng.random_range(0..=400), 1000);
            let t = r(rng.random_range(0..=6000), 1000);
            let s = r(rng.random_range(0..1000), 1000);
            assert!(verify_deletion_contraction(&rho, &t, &s).unwrap(), "ρ={rho} t={t} s={s}");
        }
    }

    #[test]
    fn deletion_contraction_detects_a_wrong_closed_form() {
        // Dropping the (·)₊ clamp breaks the identity, so the check has teeth.
        let (rho, t, s) = (r(1, 4), r(1, 2), r(1, 2));
        let wrong_z = |u: &Rational| Rational::one() - &rho * u + &rho * &rho * (u - &Rational::one()).pow(2) / Rational::integer(2);
        let lhs = wrong_z(&(&t + &s));
        let rhs = wrong_z(&t) - &rho * contraction_integral(&rho, &t, &s);
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn free_energy_estimates() {
        let rho = r(1, 5);
        for n in [1, 7, 40] {
            let f = free_energy_density_estimate(&Block::discrete(0, n), &rho).unwrap();
            assert!((f + (0.8f64).ln()).abs() < 1e-14);
        }
        // k = 1: Z_n = a r^n + b s^n, with a boundary term log(a)/n.
        let f = free_energy_density_estimate(&Block::discrete(1, 2000), &rho).unwrap();
        let limit = -((1.0 + 0.2f64.sqrt()) / 2.0).ln();
        assert!((f - limit).abs() < 1e-4);
        let f = free_energy_density_estimate(&Block::continuous(Rational::integer(200)).unwrap(), &rho).unwrap();
        assert!((f - 0.259171101819).abs() < 5e-3);
        assert!(free_energy_density_estimate(&Block::discrete(1, 2), &r(1, 2)).is_err());
        assert!(free_energy_density_estimate(&Block::discrete(1, 0), &rho).is_err());
    }
}
