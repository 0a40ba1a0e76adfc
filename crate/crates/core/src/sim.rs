//! Seeded samplers for Shearer's point process.
//!
//! Discrete: `X` i.i.d. Bernoulli(`InvK(ρ)`) on `{1-k, ..., n}` and
//! `Y_j = X_j ∏_{i=1}^{k} (1 - X_{j-i})`.
//!
//! Continuous: `ξ` Poisson with intensity `InvC(ρ)` on `[-1, t]`, and `η` the
//! points of `ξ` in `[0, t]` whose open left unit interval holds no other point.
//!
//! Replicate `r` draws from stream `r` of a ChaCha generator keyed by the
//! master seed, and replicates are reduced in index order, so reports do not
//! depend on the number of worker threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Bernoulli, Distribution, Poisson};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{continuous_partition_eval, discrete_partition_eval};
use crate::inverse::{inv_c, inv_k, DEFAULT_TOL};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RandomSeed {
    pub master: u64,
}

impl RandomSeed {
    pub fn new(master: u64) -> Self {
        RandomSeed { master }
    }

    /// Generator for replicate `r`.
    pub fn stream(&self, r: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.master);
        rng.set_stream(r);
        rng
    }
}

impl From<u64> for RandomSeed {
    fn from(master: u64) -> Self {
        RandomSeed { master }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscreteSample {
    pub k: u32,
    pub n: u32,
    /// Sites `1-k, ..., n`.
    pub x_bits: Vec<bool>,
    /// Same sites; the `k` margin sites are always clear.
    pub y_bits: Vec<bool>,
}

impl DiscreteSample {
    /// Index of site `j` in the bit arrays.
    pub fn index(&self, site: i64) -> usize {
        (site + self.k as i64 - 1) as usize
    }

    pub fn y(&self, site: i64) -> bool {
        self.y_bits[self.index(site)]
    }

    /// Sites `j ∈ {1..n}` with `Y_j = 1`.
    pub fn points(&self) -> Vec<i64> {
        (1..=self.n as i64).filter(|&j| self.y(j)).collect()
    }

    pub fn count_in(&self, lo: i64, hi: i64) -> usize {
        (lo..=hi).filter(|&j| self.y(j)).count()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ContinuousSample {
    pub t: f64,
    /// Sorted, in `[-1, t]`.
    pub xi: Vec<f64>,
    /// Sorted, in `[0, t]`.
    pub eta: Vec<f64>,
}

impl ContinuousSample {
    /// A sample holding only the given `η` points.
    pub fn from_points(t: f64, mut eta: Vec<f64>) -> Self {
        eta.sort_by(f64::total_cmp);
        ContinuousSample { t, xi: eta.clone(), eta }
    }

    pub fn count_in(&self, lo: f64, hi: f64) -> usize {
        let a = self.eta.partition_point(|&x| x < lo);
        let b = self.eta.partition_point(|&x| x <= hi);
        b - a
    }
}

/// `Y_j = X_j ∏_{i=1}^{k} (1 - X_{j-i})` for every site with `k` sites to its left.
pub fn block_factor(k: u32, x_bits: &[bool]) -> Vec<bool> {
    let k = k as usize;
    let mut y = vec![false; x_bits.len()];
    for j in k..x_bits.len() {
        y[j] = x_bits[j] && x_bits[j - k..j].iter().all(|&b| !b);
    }
    y
}

/// Keeps the points of `xi` in `[0, t]` with no other point of `xi` in `]x-1, x[`.
pub fn thin_one_sided(xi: &[f64], t: f64) -> Vec<f64> {
    xi.iter()
        .enumerate()
        .filter(|&(i, &x)| (0.0..=t).contains(&x) && (i == 0 || xi[i - 1] <= x - 1.0))
        .map(|(_, &x)| x)
        .collect()
}

fn check_rho_f64(rho: &Rational) -> Result<f64> {
    if rho.is_negative() {
        return Err(Error::Domain(format!("ρ must be >= 0, got {rho}")));
    }
    Ok(rho.to_f64())
}

pub fn sample_discrete_with<R: Rng + ?Sized>(k: u32, p: f64, n: u32, rng: &mut R) -> DiscreteSample {
    let bern = Bernoulli::new(p.clamp(0.0, 1.0)).expect("probability in [0, 1]");
    let x_bits: Vec<bool> = (0..(n + k) as usize).map(|_| bern.sample(rng)).collect();
    let y_bits = block_factor(k, &x_bits);
    DiscreteSample { k, n, x_bits, y_bits }
}

pub fn sample_continuous_with<R: Rng + ?Sized>(lambda: f64, t: f64, rng: &mut R) -> ContinuousSample {
    let mean = lambda * (t + 1.0);
    let count = if mean > 0.0 {
        Poisson::new(mean).expect("positive mean").sample(rng) as usize
    } else {
        0
    };
    let mut xi: Vec<f64> = (0..count).map(|_| rng.random_range(-1.0..=t)).collect();
    xi.sort_by(f64::total_cmp);
    let eta = thin_one_sided(&xi, t);
    ContinuousSample { t, xi, eta }
}

pub fn sample_discrete_shearer(k: u32, rho: &Rational, n: u32, seed: u64) -> Result<DiscreteSample> {
    if n == 0 {
        return Err(Error::Domain("n must be >= 1".into()));
    }
    let p = inv_k(k, check_rho_f64(rho)?, DEFAULT_TOL)?.value;
    Ok(sample_discrete_with(k, p, n, &mut RandomSeed::new(seed).stream(0)))
}

pub fn sample_continuous_shearer(rho: &Rational, t: f64, seed: u64) -> Result<ContinuousSample> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain(format!("t must be positive, got {t}")));
    }
    let lambda = inv_c(check_rho_f64(rho)?, DEFAULT_TOL)?.value;
    Ok(sample_continuous_with(lambda, t, &mut RandomSeed::new(seed).stream(0)))
}

pub trait HardCore {
    /// Pairs of points closer than the exclusion distance.
    fn hard_core_violations(&self) -> usize;
}

impl HardCore for DiscreteSample {
    fn hard_core_violations(&self) -> usize {
        let pts = self.points();
        let reach = self.k as i64;
        (0..pts.len())
            .map(|i| pts[i + 1..].iter().take_while(|&&q| q - pts[i] <= reach).count())
            .sum()
    }
}

impl HardCore for ContinuousSample {
    fn hard_core_violations(&self) -> usize {
        let pts = &self.eta;
        (0..pts.len())
            .map(|i| pts[i + 1..].iter().take_while(|&&q| q - pts[i] < 1.0).count())
            .sum()
    }
}

pub fn check_hard_core(sample: &impl HardCore) -> usize {
    sample.hard_core_violations()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum SimParams {
    Discrete { k: u32, rho: Rational, n: u32 },
    Continuous { rho: Rational, t: Rational },
}

/// A set of sites or an interval, matching the model.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Region {
    /// `{lo, ..., hi}`
    Sites { lo: i64, hi: i64 },
    /// `[lo, hi]`
    Interval { lo: Rational, hi: Rational },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimulationReport {
    pub estimate: f64,
    pub std_error: f64,
    pub replicates: u64,
    pub violations: u64,
    pub oracle: Option<f64>,
    /// `|estimate - oracle| / std_error`
    pub sigma_distance: Option<f64>,
}

impl SimulationReport {
    fn new(estimate: f64, std_error: f64, replicates: u64, violations: u64, oracle: Option<f64>) -> Self {
        let sigma_distance = oracle.map(|o| {
            let gap = (estimate - o).abs();
            if gap == 0.0 {
                0.0
            } else if std_error > 0.0 {
                gap / std_error
            } else {
                f64::INFINITY
            }
        });
        SimulationReport { estimate, std_error, replicates, violations, oracle, sigma_distance }
    }

    /// Whether the estimate lies within `sigmas` standard errors of the oracle.
    pub fn within(&self, sigmas: f64) -> bool {
        self.sigma_distance.is_some_and(|d| d <= sigmas)
    }
}

enum Draw {
    Discrete(DiscreteSample),
    Continuous(ContinuousSample),
}

impl Draw {
    fn violations(&self) -> u64 {
        match self {
            Draw::Discrete(s) => s.hard_core_violations() as u64,
            Draw::Continuous(s) => s.hard_core_violations() as u64,
        }
    }

    fn count(&self, region: &Region) -> usize {
        match (self, region) {
            (Draw::Discrete(s), Region::Sites { lo, hi }) => s.count_in(*lo, *hi),
            (Draw::Continuous(s), Region::Interval { lo, hi }) => s.count_in(lo.to_f64(), hi.to_f64()),
            _ => unreachable!("regions are checked against the model"),
        }
    }
}

enum Sampler {
    Discrete { k: u32, p: f64, n: u32 },
    Continuous { lambda: f64, t: f64 },
}

impl Sampler {
    fn new(params: &SimParams) -> Result<Self> {
        match params {
            SimParams::Discrete { k, rho, n } => {
                if *n == 0 {
                    return Err(Error::Domain("n must be >= 1".into()));
                }
                let p = inv_k(*k, check_rho_f64(rho)?, DEFAULT_TOL)?.value;
                Ok(Sampler::Discrete { k: *k, p, n: *n })
            }
            SimParams::Continuous { rho, t } => {
                if !t.is_positive() {
                    return Err(Error::Domain(format!("t must be positive, got {t}")));
                }
                let lambda = inv_c(check_rho_f64(rho)?, DEFAULT_TOL)?.value;
                Ok(Sampler::Continuous { lambda, t: t.to_f64() })
            }
        }
    }

    fn draw(&self, rng: &mut ChaCha8Rng) -> Draw {
        match *self {
            Sampler::Discrete { k, p, n } => Draw::Discrete(sample_discrete_with(k, p, n, rng)),
            Sampler::Continuous { lambda, t } => Draw::Continuous(sample_continuous_with(lambda, t, rng)),
        }
    }

    /// Runs `f` on every replicate in parallel and returns results in replicate order.
    fn replicate<T: Send>(&self, replicates: u64, seed: RandomSeed, f: impl Fn(&Draw) -> T + Sync) -> Vec<(T, u64)> {
        (0..replicates)
            .into_par_iter()
            .map(|r| {
                let draw = self.draw(&mut seed.stream(r));
                (f(&draw), draw.violations())
            })
            .collect()
    }
}

fn check_replicates(replicates: u64) -> Result<()> {
    if replicates < 2 {
        return Err(Error::Domain("need at least two replicates".into()));
    }
    Ok(())
}

fn mean_and_se(values: &[f64]) -> (f64, f64) {
    let m = values.len() as f64;
    let mean = values.iter().sum::<f64>() / m;
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (m - 1.0);
    (mean, (var / m).sqrt())
}

/// Mean number of `Y`/`η` points per unit length of the reported window.
pub fn estimate_intensity(params: &SimParams, replicates: u64, seed: RandomSeed) -> Result<SimulationReport> {
    check_replicates(replicates)?;
    let sampler = Sampler::new(params)?;
    let (region, size) = match params {
        SimParams::Discrete { n, .. } => (Region::Sites { lo: 1, hi: *n as i64 }, *n as f64),
        SimParams::Continuous { t, .. } => (Region::Interval { lo: Rational::zero(), hi: t.clone() }, t.to_f64()),
    };
    let rows = sampler.replicate(replicates, seed, |d| d.count(&region) as f64 / size);
    let violations = rows.iter().map(|r| r.1).sum();
    let values: Vec<f64> = rows.into_iter().map(|r| r.0).collect();
    let (mean, se) = mean_and_se(&values);
    let rho = match params {
        SimParams::Discrete { rho, .. } | SimParams::Continuous { rho, .. } => rho.to_f64(),
    };
    Ok(SimulationReport::new(mean, se, replicates, violations, Some(rho)))
}

fn check_region(params: &SimParams, region: &Region) -> Result<()> {
    match (params, region) {
        (SimParams::Discrete { n, .. }, Region::Sites { lo, hi }) => {
            if *lo < 1 || hi < lo || *hi > *n as i64 {
                return Err(Error::Domain(format!("sites {lo}..{hi} not inside 1..{n}")));
            }
        }
        (SimParams::Continuous { t, .. }, Region::Interval { lo, hi }) => {
            if lo.is_negative() || hi < lo || hi > t {
                return Err(Error::Domain(format!("[{lo}, {hi}] not inside [0, {t}]")));
            }
        }
        _ => return Err(Error::Domain("region does not match the model".into())),
    }
    Ok(())
}

/// Exact probability that `region` holds no point: `Z` of the region at weight `-ρ`.
pub fn avoidance_oracle(params: &SimParams, region: &Region) -> Result<Rational> {
    check_region(params, region)?;
    match (params, region) {
        (SimParams::Discrete { k, rho, .. }, Region::Sites { lo, hi }) => {
            discrete_partition_eval(*k, (hi - lo + 1) as u32, rho)
        }
        (SimParams::Continuous { rho, .. }, Region::Interval { lo, hi }) => continuous_partition_eval(rho, &(hi - lo)),
        _ => unreachable!("checked above"),
    }
}

/// Fraction of replicates with no point in `region`, against the exact `Z`.
pub fn estimate_avoidance(
    params: &SimParams,
    region: &Region,
    replicates: u64,
    seed: RandomSeed,
) -> Result<SimulationReport> {
    check_replicates(replicates)?;
    let oracle = avoidance_oracle(params, region)?.to_f64();
    let sampler = Sampler::new(params)?;
    let rows = sampler.replicate(replicates, seed, |d| d.count(region) == 0);
    let violations = rows.iter().map(|r| r.1).sum();
    let hits = rows.iter().filter(|r| r.0).count() as f64;
    let p = hits / replicates as f64;
    let se = (p * (1.0 - p) / replicates as f64).sqrt();
    Ok(SimulationReport::new(p, se, replicates, violations, Some(oracle)))
}

fn region_gap(a: &Region, b: &Region) -> Result<f64> {
    match (a, b) {
        (Region::Sites { lo: a0, hi: a1 }, Region::Sites { lo: b0, hi: b1 }) => {
            Ok(if a1 < b0 { b0 - a1 } else if b1 < a0 { a0 - b1 } else { 0 } as f64)
        }
        (Region::Interval { lo: a0, hi: a1 }, Region::Interval { lo: b0, hi: b1 }) => Ok(if a1 < b0 {
            (b0 - a1).to_f64()
        } else if b1 < a0 {
            (a0 - b1).to_f64()
        } else {
            0.0
        }),
        _ => Err(Error::Domain("regions of different kinds".into())),
    }
}

/// Sample covariance of the point counts in two regions at distance at least
/// the exclusion range (`k+1` sites, or 1).
pub fn test_r_dependence(
    params: &SimParams,
    region_a: &Region,
    region_b: &Region,
    replicates: u64,
    seed: RandomSeed,
) -> Result<SimulationReport> {
    check_replicates(replicates)?;
    check_region(params, region_a)?;
    check_region(params, region_b)?;
    let range = match params {
        SimParams::Discrete { k, .. } => *k as f64 + 1.0,
        SimParams::Continuous { .. } => 1.0,
    };
    let gap = region_gap(region_a, region_b)?;
    if gap < range {
        return Err(Error::Geometry(format!("regions are {gap} apart, need at least {range}")));
    }
    let sampler = Sampler::new(params)?;
    let rows = sampler.replicate(replicates, seed, |d| (d.count(region_a) as f64, d.count(region_b) as f64));
    let violations = rows.iter().map(|r| r.1).sum();
    let m = replicates as f64;
    let mean_a = rows.iter().map(|r| r.0 .0).sum::<f64>() / m;
    let mean_b = rows.iter().map(|r| r.0 .1).sum::<f64>() / m;
    let products: Vec<f64> = rows.iter().map(|r| (r.0 .0 - mean_a) * (r.0 .1 - mean_b)).collect();
    let (mean_prod, se) = mean_and_se(&products);
    let cov = mean_prod * m / (m - 1.0);
    Ok(SimulationReport::new(cov, se, replicates, violations, Some(0.0)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::ratio(p, q)
    }

    #[test]
    fn zero_activity_gives_empty_samples() {
        let d = sample_discrete_shearer(2, &Rational::zero(), 20, 1).unwrap();
        assert!(d.y_bits.iter().all(|&b| !b));
        let c = sample_continuous_shearer(&Rational::zero(), 10.0, 1).unwrap();
        assert!(c.xi.is_empty() && c.eta.is_empty());
    }

    #[test]
    fn rejects_activity_above_the_singularity() {
        assert!(sample_discrete_shearer(1, &r(3, 10), 5, 0).is_err());
        assert!(sample_continuous_shearer(&r(2, 5), 5.0, 0).is_err());
    }

    #[test]
    fn block_factor_rule() {
        let x = [true, true, false, true, false, false, true];
        assert_eq!(block_factor(1, &x), vec![false, false, false, true, false, false, true]);
        assert_eq!(block_factor(2, &x), vec![false, false, false, false, false, false, true]);
    }

    #[test]
    fn samples_respect_hard_core_and_subset() {
        for seed in 0..200 {
            let d = sample_discrete_shearer(2, &r(1, 7), 50, seed).unwrap();
            assert_eq!(check_hard_core(&d), 0);
            assert!(d.x_bits.iter().zip(&d.y_bits).all(|(x, y)| x >= y));
            let c = sample_continuous_shearer(&r(1, 3), 20.0, seed).unwrap();
            assert_eq!(check_hard_core(&c), 0);
            assert!(c.eta.iter().all(|e| c.xi.contains(e)));
            assert!(c.eta.iter().all(|&e| (0.0..=20.0).contains(&e)));
        }
    }

    #[test]
    fn hard_core_counter() {
        assert_eq!(check_hard_core(&ContinuousSample::from_points(1.0, vec![])), 0);
        assert_eq!(check_hard_core(&ContinuousSample::from_points(1.0, vec![0.0, 0.5])), 1);
        assert_eq!(check_hard_core(&ContinuousSample::from_points(3.0, vec![0.0, 0.5, 0.9, 2.0])), 3);
        let mut d = DiscreteSample { k: 1, n: 4, x_bits: vec![false; 5], y_bits: vec![false; 5] };
        d.y_bits[2] = true;
        d.y_bits[3] = true;
        assert_eq!(check_hard_core(&d), 1);
    }

    #[test]
    fn thinning_is_local() {
        let seed = RandomSeed::new(5);
        for rep in 0..100 {
            let mut rng = seed.stream(rep);
            let s = sample_continuous_with(0.8, 10.0, &mut rng);
            for &x in &s.eta {
                // points more than one unit to the right of x cannot change its fate
                let mut far: Vec<f64> = s.xi.iter().copied().filter(|&y| y <= x + 1.0).collect();
                far.push(x + 1.0 + rng.random_range(0.001..5.0));
                far.sort_by(f64::total_cmp);
                assert!(thin_one_sided(&far, 20.0).contains(&x));
            }
        }
    }

    #[test]
    fn discrete_marginal_at_quarter() {
        let params = SimParams::Discrete { k: 1, rho: r(1, 4), n: 100 };
        let rep = estimate_intensity(&params, 10_000, RandomSeed::new(3)).unwrap();
        assert!(rep.within(4.0), "{rep:?}");
        assert_eq!(rep.violations, 0);
    }

    #[test]
    fn zero_activity_reports() {
        let params = SimParams::Continuous { rho: Rational::zero(), t: Rational::integer(5) };
        let i = estimate_intensity(&params, 100, RandomSeed::new(1)).unwrap();
        assert_eq!((i.estimate, i.std_error), (0.0, 0.0));
        let region = Region::Interval { lo: Rational::zero(), hi: Rational::integer(5) };
        let a = estimate_avoidance(&params, &region, 100, RandomSeed::new(1)).unwrap();
        assert_eq!(a.estimate, 1.0);
        let b = Region::Interval { lo: Rational::zero(), hi: Rational::integer(1) };
        let c = Region::Interval { lo: Rational::integer(3), hi: Rational::integer(5) };
        let d = test_r_dependence(&params, &b, &c, 100, RandomSeed::new(1)).unwrap();
        assert_eq!(d.estimate, 0.0);
    }

    #[test]
    fn discrete_avoidance_matches_exact() {
        let params = SimParams::Discrete { k: 1, rho: r(1, 5), n: 8 };
        let rep = estimate_avoidance(&params, &Region::Sites { lo: 1, hi: 8 }, 20_000, RandomSeed::new(9)).unwrap();
        assert!(rep.within(4.0), "{rep:?}");
    }

    #[test]
    fn geometry_checks() {
        let params = SimParams::Discrete { k: 1, rho: r(1, 5), n: 12 };
        let a = Region::Sites { lo: 1, hi: 5 };
        let close = Region::Sites { lo: 6, hi: 9 };
        assert!(matches!(
            test_r_dependence(&params, &a, &close, 10, RandomSeed::new(0)),
            Err(Error::Geometry(_))
        ));
        let outside = Region::Sites { lo: 10, hi: 13 };
        assert!(estimate_avoidance(&params, &outside, 10, RandomSeed::new(0)).is_err());
    }

    #[test]
    fn reports_are_deterministic_across_thread_counts() {
        let params = SimParams::Continuous { rho: r(1, 4), t: Rational::integer(10) };
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| estimate_intensity(&params, 5_000, RandomSeed::new(42)).unwrap())
        };
        let one = run(1);
        assert_eq!(one, run(4));
        assert_eq!(one, estimate_intensity(&params, 5_000, RandomSeed::new(42)).unwrap());
        assert_ne!(one, estimate_intensity(&params, 5_000, RandomSeed::new(43)).unwrap());
    }
}
