//! Command-line front end. Every subcommand prints one table as CSV or JSON.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a failing criterion, 2 on
//! usage or domain errors.

use std::ffi::OsString;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::cluster::{penrose_check, PointConfiguration};
use crate::error::{Error, Result};
use crate::exact::{
    continuous_partition_eval, continuous_smallest_root, discrete_cond_ratio, discrete_partition_eval,
    discrete_smallest_root, free_energy_density_estimate, Block,
};
use crate::inverse::{
    cond_limit_discrete, free_energy_continuous_candidates, free_energy_discrete, inv_c, inv_k, prior_bounds,
    scaling_table,
};
use crate::rational::Rational;
use crate::sim::{estimate_avoidance, estimate_intensity, test_r_dependence, RandomSeed, Region, SimParams, SimulationReport};
use crate::table::{float, opt_float, Format, Table};
use crate::trees::{
    closed_form_P, enumerate_D, fixed_point_iterate, series_vs_free_energy_report, truncated_P, Case, QConvention,
    DIVERGENCE_THRESHOLD,
};
use crate::verify::{outcomes_table, run_all, run_one, DEFAULT_SEED};

pub const SEED_ENV: &str = "SHEARER_SEED";

#[derive(Debug, Parser)]
#[command(name = "shearer", version, about = "Hard-core gas on the line at negative activity")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write the table here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Master seed for simulations and random configurations.
    #[arg(long, global = true, env = SEED_ENV, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

/// Chooses the discrete model (sites, gap `k`) or the continuous one.
#[derive(Debug, Clone, Args)]
pub struct ModelArgs {
    #[arg(long, conflicts_with = "continuous")]
    pub discrete: bool,
    #[arg(long)]
    pub continuous: bool,
    /// Exclusion gap of the discrete model.
    #[arg(long, default_value_t = 1)]
    pub k: u32,
}

impl ModelArgs {
    fn is_continuous(&self) -> bool {
        self.continuous
    }

    /// Continuous unless `--discrete` is given.
    fn case_continuous_default(&self) -> Case {
        if self.discrete { Case::Discrete(self.k) } else { Case::Continuous }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Smallest positive root of Z(-ρ) against block size.
    Roots {
        #[command(flatten)]
        model: ModelArgs,
        /// Block sizes `a:b` or `a:b:step` or `a,b,c` (n for discrete, t for continuous).
        #[arg(long, alias = "t-grid", alias = "n-grid")]
        grid: Option<Grid>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        t: Option<Rational>,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Exact Z(-ρ) for a block.
    Partition {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        rho: Rational,
        #[arg(long, alias = "t-grid", alias = "n-grid")]
        grid: Option<Grid>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        t: Option<Rational>,
    },
    /// InvK(ρ) or InvC(ρ).
    Inverse {
        #[command(flatten)]
        model: ModelArgs,
        /// Activities, as a single value or a grid.
        #[arg(long)]
        rho: Grid,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Free-energy formulas next to the exact density of a finite block.
    FreeEnergy {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        rho: Rational,
        #[arg(long, default_value_t = 2000)]
        n: u32,
        #[arg(long, default_value = "200")]
        t: Rational,
    },
    /// (k+1)ρ*_k and (k+1)InvK(ρ/(k+1)) against k.
    Scaling {
        #[arg(long, default_value = "1,2,5,10,100,1000,10000")]
        k: Grid,
        #[arg(long, default_value_t = 0.3)]
        rho: f64,
    },
    /// Earlier lower bounds on the singularities.
    Bounds {
        /// Largest discrete gap.
        #[arg(long, default_value_t = 10)]
        k: u32,
    },
    /// Ursell coefficient against the signed singleton-tree count.
    PenroseCheck {
        /// JSON configuration, inline or a path to a file.
        #[arg(long)]
        config: Option<String>,
        /// Sizes for the random sweep.
        #[arg(long, default_value = "2:7")]
        n: Grid,
        /// Random configurations per size.
        #[arg(long, default_value_t = 200)]
        replicates: u64,
    },
    /// Tree operator, D(n), partial sums and the comparison report (continuous unless --discrete).
    Series {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_enum, default_value_t = SeriesTable::Report)]
        table: SeriesTable,
        #[arg(long, default_value = "1/5")]
        rho: Rational,
        #[arg(long, default_value = "200")]
        t: Rational,
        /// Number of series terms.
        #[arg(long = "N", default_value_t = 9)]
        n_terms: u32,
        #[arg(long, default_value_t = 5e-3)]
        tol: f64,
    },
    /// Monte Carlo estimates from the samplers.
    Simulate {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_enum, default_value_t = Estimate::Intensity)]
        estimate: Estimate,
        #[arg(long)]
        rho: Rational,
        #[arg(long, default_value_t = 100)]
        n: u32,
        #[arg(long, default_value = "10")]
        t: Rational,
        /// Region `a:b` for avoidance and the first dependence region.
        #[arg(long)]
        region: Option<Span>,
        /// Second region for the dependence estimate.
        #[arg(long)]
        region_b: Option<Span>,
        #[arg(long, default_value_t = 100_000)]
        replicates: u64,
    },
    /// Runs the acceptance criteria.
    Verify {
        /// Run a single criterion.
        #[arg(long)]
        criterion: Option<u32>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesTable {
    Report,
    FixedPoint,
    D,
    Partial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Estimate {
    Intensity,
    Avoidance,
    Dependence,
}

/// `a:b`, `a:b:step` or `a,b,c`.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid(pub Vec<Rational>);

impl FromStr for Grid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            [_] => s.split(',').map(|p| p.trim().parse()).collect::<Result<_>>().map(Grid),
            [a, b] | [a, b, _] => {
                let (a, b): (Rational, Rational) = (a.parse()?, b.parse()?);
                let step: Rational = parts.get(2).map_or(Ok(Rational::one()), |p| p.parse())?;
                if !step.is_positive() {
                    return Err(Error::Parse(format!("grid step must be positive in {s:?}")));
                }
                let mut out = Vec::new();
                let mut x = a;
                while x <= b {
                    out.push(x.clone());
                    x = x + &step;
                }
                Ok(Grid(out))
            }
            _ => Err(Error::Parse(format!("bad grid {s:?}"))),
        }
    }
}

impl Grid {
    fn naturals(&self) -> Result<Vec<u32>> {
        self.0
            .iter()
            .map(|x| {
                if x.is_integer() && !x.is_negative() {
                    u32::try_from(x.floor()).map_err(|_| Error::Parse(format!("{x} is too large")))
                } else {
                    Err(Error::Parse(format!("expected a natural number, got {x}")))
                }
            })
            .collect()
    }
}

/// `a:b`
#[derive(Debug, Clone, PartialEq)]
pub struct Span(pub Rational, pub Rational);

impl FromStr for Span {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s.split_once(':').ok_or_else(|| Error::Parse(format!("expected a:b, got {s:?}")))?;
        Ok(Span(a.parse()?, b.parse()?))
    }
}

impl Span {
    fn region(&self, continuous: bool) -> Result<Region> {
        if continuous {
            return Ok(Region::Interval { lo: self.0.clone(), hi: self.1.clone() });
        }
        let site = |x: &Rational| {
            if x.is_integer() {
                i64::try_from(x.floor()).map_err(|_| Error::Parse(format!("{x} is too large")))
            } else {
                Err(Error::Parse(format!("sites must be integers, got {x}")))
            }
        };
        Ok(Region::Sites { lo: site(&self.0)?, hi: site(&self.1)? })
    }
}

/// A rendered table and whether it reports a failed verification.
pub struct Output {
    pub text: String,
    pub failed: bool,
}

fn sizes(model: &ModelArgs, grid: &Option<Grid>, n: Option<u32>, t: &Option<Rational>) -> Result<Vec<Rational>> {
    if let Some(g) = grid {
        if !model.is_continuous() {
            g.naturals()?;
        }
        return Ok(g.0.clone());
    }
    let single = if model.is_continuous() { t.clone() } else { n.map(Rational::integer) };
    single
        .map(|x| vec![x])
        .ok_or_else(|| Error::Domain(format!("give --grid or --{}", if model.is_continuous() { "t" } else { "n" })))
}

fn model_name(continuous: bool) -> &'static str {
    if continuous { "continuous" } else { "discrete" }
}

fn k_cell(model: &ModelArgs) -> String {
    if model.is_continuous() { String::new() } else { model.k.to_string() }
}

fn size_cell(model: &ModelArgs, size: &Rational) -> String {
    if model.is_continuous() { size.to_string() } else { size.floor().to_string() }
}

fn as_natural(x: &Rational) -> Result<u32> {
    Grid(vec![x.clone()]).naturals().map(|v| v[0])
}

fn report_table(label: &str, r: &SimulationReport) -> Table {
    let mut t = Table::new(["estimate_kind", "estimate", "std_error", "replicates", "violations", "oracle", "sigma_distance"]);
    t.push([
        label.to_string(),
        float(r.estimate),
        float(r.std_error),
        r.replicates.to_string(),
        r.violations.to_string(),
        opt_float(r.oracle),
        opt_float(r.sigma_distance),
    ]);
    t
}

fn read_config(arg: &str) -> Result<PointConfiguration> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('[') || trimmed.starts_with('{') {
        PointConfiguration::from_json(arg)
    } else {
        PointConfiguration::from_json(&std::fs::read_to_string(arg)?)
    }
}

pub fn execute(cli: &Cli) -> Result<Output> {
    let mut failed = false;
    let table = match &cli.command {
        Command::Roots { model, grid, n, t, tol } => {
            let mut table = Table::new(["model", "k", "size", "root_lo", "root_hi", "root", "sign_change"]);
            let brackets = sizes(model, grid, *n, t)?
                .into_par_iter()
                .map(|size| {
                    let b = if model.is_continuous() {
                        continuous_smallest_root(&size, *tol)?
                    } else {
                        discrete_smallest_root(model.k, as_natural(&size)?, *tol)?
                    };
                    Ok((size, b))
                })
                .collect::<Result<Vec<_>>>()?;
            for (size, b) in brackets {
                table.push([
                    model_name(model.is_continuous()).to_string(),
                    k_cell(model),
                    size_cell(model, &size),
                    b.lo.to_string(),
                    b.hi.to_string(),
                    float(b.midpoint()),
                    b.guaranteed_sign_change.to_string(),
                ]);
            }
            table
        }
        Command::Partition { model, rho, grid, n, t } => {
            let mut table = Table::new(["model", "k", "size", "rho", "z", "z_float"]);
            for size in sizes(model, grid, *n, t)? {
                let z = if model.is_continuous() {
                    continuous_partition_eval(rho, &size)?
                } else {
                    discrete_partition_eval(model.k, as_natural(&size)?, rho)?
                };
                table.push([
                    model_name(model.is_continuous()).to_string(),
                    k_cell(model),
                    size_cell(model, &size),
                    rho.to_string(),
                    z.to_string(),
                    float(z.to_f64()),
                ]);
            }
            table
        }
        Command::Inverse { model, rho, tol } => {
            let mut table = Table::new(["branch", "k", "rho", "value", "residual"]);
            for r in &rho.0 {
                let res = if model.is_continuous() { inv_c(r.to_f64(), *tol)? } else { inv_k(model.k, r.to_f64(), *tol)? };
                table.push([
                    model_name(model.is_continuous()).to_string(),
                    k_cell(model),
                    r.to_string(),
                    float(res.value),
                    float(res.residual),
                ]);
            }
            table
        }
        Command::FreeEnergy { model, rho, n, t } => {
            let mut table = Table::new(["quantity", "value"]);
            let r = rho.to_f64();
            if model.is_continuous() {
                let c = free_energy_continuous_candidates(r)?;
                let exact = free_energy_density_estimate(&Block::continuous(t.clone())?, rho)?;
                table.push(["polynomial_form".to_string(), float(c.polynomial_form)]);
                table.push(["inverse_form".to_string(), float(c.inverse_form)]);
                table.push([format!("exact_density_t={t}"), float(exact)]);
            } else {
                let exact = free_energy_density_estimate(&Block::discrete(model.k, *n), rho)?;
                let ratio = discrete_cond_ratio(model.k, *n, rho)?;
                table.push(["free_energy".to_string(), float(free_energy_discrete(model.k, r)?)]);
                table.push([format!("exact_density_n={n}"), float(exact)]);
                table.push(["cond_limit".to_string(), float(cond_limit_discrete(model.k, r)?)]);
                table.push([format!("cond_ratio_n={n}"), float(ratio.to_f64())]);
            }
            table
        }
        Command::Scaling { k, rho } => {
            let mut table = Table::new(["k", "scaled_singularity", "scaled_inverse"]);
            for row in scaling_table(&k.naturals()?, *rho)? {
                table.push([row.k.to_string(), float(row.scaled_singularity), float(row.scaled_inverse)]);
            }
            table
        }
        Command::Bounds { k } => {
            let mut table = Table::new(["case", "k", "method", "value", "singularity"]);
            for b in prior_bounds(*k) {
                table.push([
                    b.case.clone(),
                    b.k.map(|k| k.to_string()).unwrap_or_default(),
                    b.method.clone(),
                    float(b.value),
                    float(b.singularity),
                ]);
            }
            table
        }
        Command::PenroseCheck { config: Some(c), .. } => {
            let p = penrose_check(&read_config(c)?)?;
            if cli.format == Format::Json && cli.out.is_none() {
                let text = serde_json::to_string(&p).map_err(|e| Error::Io(e.to_string()))? + "\n";
                return Ok(Output { text, failed: false });
            }
            let mut table = Table::new(["ursell", "singleton_count", "identity_holds"]);
            table.push([p.ursell.to_string(), p.singleton_count.to_string(), p.identity_holds.to_string()]);
            table
        }
        Command::PenroseCheck { config: None, n, replicates } => {
            use rand::SeedableRng;
            let mut table = Table::new(["n", "configurations", "failures", "failures_extremal_first_point"]);
            for size in n.naturals()? {
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(cli.seed ^ (size as u64) << 32);
                let (mut fails, mut fails_ext) = (0u64, 0u64);
                for _ in 0..*replicates {
                    let c = PointConfiguration::random(size as usize, &mut rng);
                    if !penrose_check(&c)?.identity_holds {
                        fails += 1;
                        fails_ext += u64::from(c.root_is_extremal());
                    }
                }
                table.push([size.to_string(), replicates.to_string(), fails.to_string(), fails_ext.to_string()]);
            }
            table
        }
        Command::Series { model, table: which, rho, t, n_terms, tol } => {
            let case = model.case_continuous_default();
            let r = rho.to_f64();
            match which {
                SeriesTable::Report => {
                    let rep = series_vs_free_energy_report(rho, t, *n_terms, *tol)?;
                    let mut table = Table::new(["quantity", "value", "matches_exact"]);
                    table.push(["exact_density".to_string(), float(rep.exact_density), "true".to_string()]);
                    for e in &rep.entries {
                        table.push([e.name.clone(), float(e.value), e.matches_exact.to_string()]);
                    }
                    table
                }
                SeriesTable::FixedPoint => {
                    let fp = fixed_point_iterate(case, r, *tol, crate::trees::DEFAULT_MAX_ITER, DIVERGENCE_THRESHOLD)?;
                    let mut table = Table::new(["rho", "status", "mu", "iterations", "last_value"]);
                    let status = serde_json::to_value(fp.status).map_err(|e| Error::Io(e.to_string()))?;
                    table.push([
                        rho.to_string(),
                        status.as_str().unwrap_or_default().to_string(),
                        opt_float(fp.mu),
                        fp.iterations.to_string(),
                        float(fp.last_value),
                    ]);
                    table
                }
                SeriesTable::D => {
                    let mut table = Table::new(["n", "d"]);
                    for n in 1..=*n_terms {
                        table.push([n.to_string(), enumerate_D(case, n)?.to_string()]);
                    }
                    table
                }
                SeriesTable::Partial => {
                    let mut table = Table::new(["n_terms", "truncated", "closed_form_rho_mu", "closed_form_mu"]);
                    let a = closed_form_P(case, r, QConvention::RhoMu)?;
                    let b = closed_form_P(case, r, QConvention::Mu)?;
                    for n in 1..=*n_terms {
                        table.push([n.to_string(), float(truncated_P(case, r, n)?), float(a), float(b)]);
                    }
                    table
                }
            }
        }
        Command::Simulate { model, estimate, rho, n, t, region, region_b, replicates } => {
            let params = if model.is_continuous() {
                SimParams::Continuous { rho: rho.clone(), t: t.clone() }
            } else {
                SimParams::Discrete { k: model.k, rho: rho.clone(), n: *n }
            };
            let seed = RandomSeed::new(cli.seed);
            let need = |r: &Option<Span>, flag: &str| {
                r.as_ref()
                    .ok_or_else(|| Error::Domain(format!("--{flag} is required for this estimate")))?
                    .region(model.is_continuous())
            };
            let (label, rep) = match estimate {
                Estimate::Intensity => ("intensity", estimate_intensity(&params, *replicates, seed)?),
                Estimate::Avoidance => {
                    ("avoidance", estimate_avoidance(&params, &need(region, "region")?, *replicates, seed)?)
                }
                Estimate::Dependence => (
                    "covariance",
                    test_r_dependence(&params, &need(region, "region")?, &need(region_b, "region-b")?, *replicates, seed)?,
                ),
            };
            report_table(label, &rep)
        }
        Command::Verify { criterion } => {
            let outcomes = match criterion {
                Some(id) => vec![run_one(*id, cli.seed)
                    .ok_or_else(|| Error::Domain(format!("criteria are numbered 1 to 12, got {id}")))?],
                None => run_all(cli.seed),
            };
            for o in &outcomes {
                eprintln!("{}", o.line());
            }
            failed = outcomes.iter().any(|o| !o.passed);
            outcomes_table(&outcomes)
        }
    };
    Ok(Output { text: table.render(cli.format)?, failed })
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let output = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &output.text),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(output.text.as_bytes())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return 2;
    }
    i32::from(output.failed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exec(args: &[&str]) -> Result<Output> {
        let cli = Cli::try_parse_from(std::iter::once("shearer").chain(args.iter().copied())).unwrap();
        execute(&cli)
    }

    #[test]
    fn grids_parse() {
        let g: Grid = "0.5:2:0.5".parse().unwrap();
        assert_eq!(g.0, vec![Rational::ratio(1, 2), Rational::one(), Rational::ratio(3, 2), Rational::integer(2)]);
        let g: Grid = "1,10,1/3".parse().unwrap();
        assert_eq!(g.0.len(), 3);
        assert!("1:2:0".parse::<Grid>().is_err());
        assert!("1/3".parse::<Grid>().unwrap().naturals().is_err());
    }

    #[test]
    fn continuous_roots_start_at_two() {
        let out = exec(&["roots", "--continuous", "--t-grid", "0.5:3:0.5"]).unwrap();
        let table = Table::from_csv(&out.text).unwrap();
        assert_eq!(table.rows.len(), 6);
        assert_eq!(table.cell(0, "size"), Some("1/2"));
        let root: f64 = table.cell(0, "root").unwrap().parse().unwrap();
        assert!((root - 2.0).abs() < 1e-12);
    }

    #[test]
    fn bounds_table_has_fps_row() {
        let out = exec(&["bounds"]).unwrap();
        let table = Table::from_csv(&out.text).unwrap();
        let row = table.rows.iter().find(|r| r[0] == "continuous" && r[2] == "fps").unwrap();
        assert!(row[3].starts_with("2.928932188134"));
    }

    #[test]
    fn partition_is_exact() {
        let out = exec(&["partition", "--k", "1", "--n", "2", "--rho", "0.2"]).unwrap();
        assert!(out.text.contains("discrete,1,2,1/5,3/5,"));
    }

    #[test]
    fn penrose_config_json() {
        let out = exec(&["--format", "json", "penrose-check", "--config", r#"["0", "2/5", "4/5"]"#]).unwrap();
        assert_eq!(out.text, "{\"ursell\":2,\"singleton_count\":2,\"identity_holds\":true}\n");
    }

    #[test]
    fn domain_errors_surface() {
        assert!(exec(&["inverse", "--continuous", "--rho", "0.4"]).is_err());
        assert!(exec(&["roots", "--continuous"]).is_err());
        assert_eq!(run(["shearer", "inverse", "--continuous", "--rho", "0.4"]), 2);
        assert_eq!(run(["shearer", "no-such-command"]), 2);
    }
}
