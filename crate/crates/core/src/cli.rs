//! Command-line driver: verification runs, positivity sweeps and expression
//! expansion, with text or JSON (newline-delimited) report streams.
//!
//! Exit codes: 0 when every executed check passes, 1 when any identity
//! fails, 2 on configuration or I/O errors. Reports are gathered from the
//! worker pool and emitted in sorted (id, params) order, so the stream
//! content does not depend on the parallelism level.

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use crate::bressoud::{borwein_abc, g_poly, odd_modulus_g_params, region_grid, GParams};
use crate::error::{Error, Result};
use crate::identities::{self, ParamSpec};
use crate::qcomb::qbinom;
use crate::report::{IdentityReport, RunSummary, RENDER_TERM_LIMIT};
use crate::series::{self, product_side, ProductFactor, ProductSideSpec};
use crate::transforms::{kernel, KernelKind};

/// Environment variable supplying the default worker-pool size.
pub const PARALLELISM_ENV: &str = "QVERIFY_PARALLELISM";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

/// Resolved configuration of one run.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub ids: Vec<String>,
    /// Explicit inclusive ranges per parameter name; defaults fill the rest.
    pub ranges: BTreeMap<String, (i64, i64)>,
    pub cap: Option<i64>,
    pub output: Option<PathBuf>,
    pub format: OutputFormat,
    pub parallelism: usize,
}

#[derive(Parser)]
#[command(
    name = "qverify",
    about = "Exact verification of q-series identities and coefficient positivity",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Debug, clap::Args)]
struct CommonOpts {
    /// Report format
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Write the report stream to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
    /// Worker-pool size (default: QVERIFY_PARALLELISM or the CPU count)
    #[arg(long)]
    parallelism: Option<usize>,
}

#[derive(Clone, Debug, clap::Args)]
struct RangeOpts {
    /// Range for L, e.g. `0..30` or a single value
    #[arg(long = "L", allow_hyphen_values = true)]
    l: Option<String>,
    /// Range for a
    #[arg(long = "a", allow_hyphen_values = true)]
    a: Option<String>,
    /// Range for nu
    #[arg(long = "nu", allow_hyphen_values = true)]
    nu: Option<String>,
    /// Range for s
    #[arg(long = "s", allow_hyphen_values = true)]
    s: Option<String>,
    /// Range for n
    #[arg(long = "n", allow_hyphen_values = true)]
    n: Option<String>,
    /// Range for k
    #[arg(long = "k", allow_hyphen_values = true)]
    k: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check identities over parameter grids (finite ids) or to a cap
    /// (series ids)
    Verify {
        /// Identity ids, e.g. eq2.13 eq3.24
        #[arg(required = true)]
        ids: Vec<String>,
        #[command(flatten)]
        ranges: RangeOpts,
        /// Truncation cap for series identities
        #[arg(long)]
        cap: Option<i64>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Run every registered identity at its documented default ranges and caps
    VerifyAll {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Positivity sweep over the proven G families, the odd-modulus grid
    /// and the Borwein triple
    SweepPositivity {
        /// Largest instance size L (and Borwein index n)
        #[arg(long, default_value_t = 20)]
        max_l: i64,
        /// Largest nu of the odd-modulus grid
        #[arg(long, default_value_t = 3)]
        nu_max: i64,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Enumerate the admissible region and scan every G instance for
    /// negative coefficients; only failures are reported individually
    SweepConjecture {
        /// Range of K, e.g. 2..4
        #[arg(long = "K", default_value = "2..4")]
        k_range: String,
        /// Bound on N + M
        #[arg(long, default_value_t = 16)]
        max_size: i64,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Print one exact object (builders: qbinom, kernel, g, product)
    Expand {
        /// Builder name
        builder: String,
        /// Positional builder arguments (qbinom: m n; kernel: kind L k)
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
        #[arg(long = "N", allow_hyphen_values = true)]
        n: Option<i64>,
        #[arg(long = "M", allow_hyphen_values = true)]
        m: Option<i64>,
        #[arg(long = "alphaK")]
        alpha_k: Option<i64>,
        #[arg(long = "betaK")]
        beta_k: Option<i64>,
        #[arg(long = "K")]
        k: Option<i64>,
        /// Product factors, e.g. `21,8,13:21` (exponents:modulus; `;`-separated)
        #[arg(long)]
        factors: Option<String>,
        /// Divide the product by (q)_inf
        #[arg(long)]
        denominator: bool,
        #[arg(long, default_value_t = 40)]
        cap: i64,
    },
}

/// Parse CLI arguments and execute; returns the process exit code.
pub fn run_main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version through this path with code 0
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::Verify { ids, ranges, cap, common } => {
            let config = RunConfig {
                ids,
                ranges: collect_ranges(&ranges)?,
                cap,
                output: common.output.clone(),
                format: common.format,
                parallelism: resolve_parallelism(common.parallelism)?,
            };
            run_verify(&config)
        }
        Command::VerifyAll { common } => {
            let config = RunConfig {
                ids: Vec::new(),
                ranges: BTreeMap::new(),
                cap: None,
                output: common.output.clone(),
                format: common.format,
                parallelism: resolve_parallelism(common.parallelism)?,
            };
            run_verify_all(&config)
        }
        Command::SweepPositivity { max_l, nu_max, common } => {
            let config = RunConfig {
                ids: Vec::new(),
                ranges: BTreeMap::new(),
                cap: None,
                output: common.output.clone(),
                format: common.format,
                parallelism: resolve_parallelism(common.parallelism)?,
            };
            run_sweep_positivity(&config, max_l, nu_max)
        }
        Command::SweepConjecture { k_range, max_size, common } => {
            let config = RunConfig {
                ids: Vec::new(),
                ranges: BTreeMap::new(),
                cap: None,
                output: common.output.clone(),
                format: common.format,
                parallelism: resolve_parallelism(common.parallelism)?,
            };
            run_sweep_conjecture(&config, parse_range(&k_range)?, max_size)
        }
        Command::Expand { builder, args, n, m, alpha_k, beta_k, k, factors, denominator, cap } => {
            let text = run_expand(&builder, &args, n, m, alpha_k, beta_k, k, factors, denominator, cap)?;
            println!("{text}");
            Ok(0)
        }
    }
}

fn resolve_parallelism(flag: Option<usize>) -> Result<usize> {
    let value = match flag {
        Some(v) => v,
        None => match std::env::var(PARALLELISM_ENV) {
            Ok(text) => text.parse().map_err(|_| Error::InvalidParam {
                id: "cli".into(),
                reason: format!("{PARALLELISM_ENV} must be a positive integer, got `{text}`"),
            })?,
            Err(_) => std::thread::available_parallelism().map_or(1, |n| n.get()),
        },
    };
    if value == 0 {
        return Err(Error::InvalidParam {
            id: "cli".into(),
            reason: "parallelism must be at least 1".into(),
        });
    }
    Ok(value)
}

fn parse_range(text: &str) -> Result<(i64, i64)> {
    let bad = || Error::InvalidParam {
        id: "cli".into(),
        reason: format!("range `{text}` is not `a..b` or a single integer"),
    };
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(Error::InvalidParam {
                id: "cli".into(),
                reason: format!("range `{text}` is empty"),
            });
        }
        Ok((lo, hi))
    } else {
        let v: i64 = text.trim().parse().map_err(|_| bad())?;
        Ok((v, v))
    }
}

fn collect_ranges(opts: &RangeOpts) -> Result<BTreeMap<String, (i64, i64)>> {
    let mut ranges = BTreeMap::new();
    for (name, value) in [
        ("L", &opts.l),
        ("a", &opts.a),
        ("nu", &opts.nu),
        ("s", &opts.s),
        ("n", &opts.n),
        ("k", &opts.k),
    ] {
        if let Some(text) = value {
            ranges.insert(name.to_string(), parse_range(text)?);
        }
    }
    Ok(ranges)
}

/// One unit of work for the pool.
enum Cell {
    Finite { id: String, params: BTreeMap<String, i64> },
    Series { id: String, cap: i64 },
    GPositivity { id: &'static str, params: GParams, extra: BTreeMap<String, i64> },
    Borwein { n: i64 },
}

fn grid_for(desc_params: &[ParamSpec], ranges: &BTreeMap<String, (i64, i64)>) -> Vec<BTreeMap<String, i64>> {
    let mut cells = vec![BTreeMap::new()];
    for spec in desc_params {
        let (lo, hi) = ranges.get(spec.name).copied().unwrap_or((spec.lo, spec.hi));
        let mut next = Vec::with_capacity(cells.len() * (hi - lo + 1) as usize);
        for cell in &cells {
            for v in lo..=hi {
                let mut extended = cell.clone();
                extended.insert(spec.name.to_string(), v);
                next.push(extended);
            }
        }
        cells = next;
    }
    cells
}

fn is_series_id(id: &str) -> bool {
    series::series_verify_ids().contains(&id)
        || series::series_registry_list().iter().any(|info| info.id == id)
}

fn build_verify_cells(config: &RunConfig) -> Result<(Vec<Cell>, u64)> {
    let mut cells = Vec::new();
    let mut skipped = 0u64;
    for id in &config.ids {
        if is_series_id(id) {
            let cap = match config.cap {
                Some(cap) if cap >= 0 => cap,
                Some(cap) => {
                    return Err(Error::InvalidParam {
                        id: id.clone(),
                        reason: format!("cap must be nonnegative, got {cap}"),
                    })
                }
                None => series::series_default_cap(id)?,
            };
            cells.push(Cell::Series { id: id.clone(), cap });
            continue;
        }
        let desc = identities::descriptor(id)?;
        for params in grid_for(desc.params, &config.ranges) {
            if identities::params_admissible(id, &params)? {
                cells.push(Cell::Finite { id: id.clone(), params });
            } else {
                skipped += 1;
            }
        }
    }
    Ok((cells, skipped))
}

fn run_cell(cell: &Cell) -> Result<IdentityReport> {
    match cell {
        Cell::Finite { id, params } => identities::verify(id, params),
        Cell::Series { id, cap } => series::verify_series(id, *cap),
        Cell::GPositivity { id, params, extra } => {
            let started = std::time::Instant::now();
            let mut all = extra.clone();
            all.insert("N".into(), params.n);
            all.insert("M".into(), params.m);
            all.insert("alphaK".into(), params.alpha_k);
            all.insert("betaK".into(), params.beta_k);
            all.insert("K".into(), params.k);
            let mut report = IdentityReport::new(*id, all);
            let g = g_poly(params)?;
            report.negative_witness = g.first_negative();
            report.passed = report.negative_witness.is_none();
            if g.len() <= RENDER_TERM_LIMIT {
                report.lhs = Some(g.render());
            }
            report.elapsed_millis = started.elapsed().as_millis() as u64;
            Ok(report)
        }
        Cell::Borwein { n } => {
            let started = std::time::Instant::now();
            let mut params = BTreeMap::new();
            params.insert("n".to_string(), *n);
            let mut report = IdentityReport::new("borwein-positivity", params);
            let (a, b, c) = borwein_abc(*n);
            report.negative_witness = a
                .first_negative()
                .or_else(|| b.first_negative())
                .or_else(|| c.first_negative());
            let decomposition = crate::bressoud::borwein_decomposition(*n);
            report.passed = report.negative_witness.is_none() && decomposition;
            if !decomposition {
                report.notes = Some("decomposition mismatch".into());
            }
            report.elapsed_millis = started.elapsed().as_millis() as u64;
            Ok(report)
        }
    }
}

fn execute(cells: Vec<Cell>, parallelism: usize) -> Result<Vec<IdentityReport>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism)
        .build()
        .map_err(|e| Error::InvalidParam { id: "cli".into(), reason: e.to_string() })?;
    let results: Vec<Result<IdentityReport>> =
        pool.install(|| cells.par_iter().map(run_cell).collect());
    let mut reports = Vec::with_capacity(results.len());
    for r in results {
        reports.push(r?);
    }
    reports.sort_by(|x, y| {
        (&x.identity_id, &x.params)
            .cmp(&(&y.identity_id, &y.params))
            .then_with(|| x.cap.cmp(&y.cap))
    });
    Ok(reports)
}

fn emit(
    config: &RunConfig,
    reports: &[IdentityReport],
    summary: &RunSummary,
    only_failures: bool,
) -> Result<i32> {
    let mut lines = Vec::new();
    for report in reports {
        if only_failures && report.passed {
            continue;
        }
        match config.format {
            OutputFormat::Text => lines.push(report.text_line()),
            OutputFormat::Json => lines.push(
                serde_json::to_string(report).expect("reports serialize"),
            ),
        }
    }
    match config.format {
        OutputFormat::Text => lines.push(format!(
            "total={} passed={} failed={} skipped={}",
            summary.total, summary.passed, summary.failed, summary.skipped
        )),
        OutputFormat::Json => {
            lines.push(serde_json::to_string(summary).expect("summary serializes"))
        }
    }
    let mut body = lines.join("\n");
    body.push('\n');
    match &config.output {
        Some(path) => std::fs::write(path, body).map_err(|e| Error::InvalidParam {
            id: "cli".into(),
            reason: format!("cannot write {}: {e}", path.display()),
        })?,
        None => {
            let stdout = std::io::stdout();
            let mut handle = stdout.lock();
            let _ = handle.write_all(body.as_bytes());
        }
    }
    Ok(if summary.failed > 0 { 1 } else { 0 })
}

/// `verify`: the selected identities over their parameter grids.
pub fn run_verify(config: &RunConfig) -> Result<i32> {
    let (cells, skipped) = build_verify_cells(config)?;
    let reports = execute(cells, config.parallelism)?;
    let mut summary = RunSummary { skipped, ..Default::default() };
    for r in &reports {
        summary.absorb(r);
    }
    emit(config, &reports, &summary, false)
}

/// `verify-all`: every registered identity at its documented defaults.
pub fn run_verify_all(config: &RunConfig) -> Result<i32> {
    let mut ids: Vec<String> = identities::registry_list()
        .iter()
        .map(|d| d.id.to_string())
        .collect();
    ids.extend(series::series_verify_ids().iter().map(|s| s.to_string()));
    let full = RunConfig { ids, ..config.clone() };
    run_verify(&full)
}

/// `sweep-positivity`: the proven G families, the odd-modulus grid, and the
/// Borwein triple (with its decomposition).
pub fn run_sweep_positivity(config: &RunConfig, max_l: i64, nu_max: i64) -> Result<i32> {
    if max_l < 0 || nu_max < 1 {
        return Err(Error::InvalidParam {
            id: "sweep-positivity".into(),
            reason: "need max_l >= 0 and nu_max >= 1".into(),
        });
    }
    type NamedFamily = (&'static str, fn(i64) -> (i64, i64), i64, i64, i64);
    let families: &[NamedFamily] = &[
        ("g-positivity:K3-a8b4", |l| (l, l + 1), 8, 4, 3),
        ("g-positivity:K3-a4b2", |l| (l, l + 1), 4, 2, 3),
        ("g-positivity:K4-a13b8", |l| (l, l + 1), 13, 8, 4),
        ("g-positivity:K4-a11b10", |l| (l, l), 11, 10, 4),
        ("g-positivity:K4-a16b5", |l| (l - 1, l + 1), 16, 5, 4),
        ("g-positivity:K4-a15b6", |l| (l - 1, l + 1), 15, 6, 4),
        ("g-positivity:K6-a30b15", |l| (l - 1, l + 1), 30, 15, 6),
    ];
    let mut cells = Vec::new();
    for &(id, nm, alpha_k, beta_k, k) in families {
        for l in 0..=max_l {
            let (n, m) = nm(l);
            let mut extra = BTreeMap::new();
            extra.insert("L".to_string(), l);
            cells.push(Cell::GPositivity {
                id,
                params: GParams { n, m, alpha_k, beta_k, k },
                extra,
            });
        }
    }
    for nu in 1..=nu_max {
        for s in 0..nu {
            for l in 0..=max_l {
                let mut extra = BTreeMap::new();
                extra.insert("nu".to_string(), nu);
                extra.insert("s".to_string(), s);
                extra.insert("L".to_string(), l);
                cells.push(Cell::GPositivity {
                    id: "theorem1-positivity",
                    params: odd_modulus_g_params(nu, s, l),
                    extra,
                });
            }
        }
    }
    for n in 0..=max_l {
        cells.push(Cell::Borwein { n });
    }
    let reports = execute(cells, config.parallelism)?;
    let mut summary = RunSummary::default();
    for r in &reports {
        summary.absorb(r);
    }
    emit(config, &reports, &summary, false)
}

/// `sweep-conjecture`: every integer (alphaK, betaK) point of the admissible
/// region with K in the given range and N + M bounded; in-region instances
/// are scanned for negative coefficients and only failures are reported.
pub fn run_sweep_conjecture(
    config: &RunConfig,
    k_range: (i64, i64),
    max_size: i64,
) -> Result<i32> {
    if k_range.0 < 2 {
        return Err(Error::InvalidParam {
            id: "sweep-conjecture".into(),
            reason: format!("K must start at 2 or above, got {}", k_range.0),
        });
    }
    if max_size < 0 {
        return Err(Error::InvalidParam {
            id: "sweep-conjecture".into(),
            reason: format!("max size must be nonnegative, got {max_size}"),
        });
    }
    let (inside, skipped) = region_grid(k_range.0, k_range.1, max_size);
    let cells: Vec<Cell> = inside
        .into_iter()
        .map(|params| Cell::GPositivity {
            id: "conjecture-region",
            params,
            extra: BTreeMap::new(),
        })
        .collect();
    let reports = execute(cells, config.parallelism)?;
    let mut summary = RunSummary { skipped, ..Default::default() };
    for r in &reports {
        summary.absorb(r);
    }
    emit(config, &reports, &summary, true)
}

fn positional<T: std::str::FromStr>(args: &[String], index: usize, what: &str) -> Result<T> {
    args.get(index)
        .and_then(|text| text.parse().ok())
        .ok_or_else(|| Error::InvalidParam {
            id: "expand".into(),
            reason: format!("missing or invalid argument {index} ({what})"),
        })
}

fn parse_factors(text: &str) -> Result<Vec<ProductFactor>> {
    let mut factors = Vec::new();
    for group in text.split(';') {
        let (exps, modulus) = group.split_once(':').ok_or_else(|| Error::InvalidParam {
            id: "expand".into(),
            reason: format!("factor group `{group}` is not `a,b,..:modulus`"),
        })?;
        let exponents = exps
            .split(',')
            .map(|e| e.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidParam {
                id: "expand".into(),
                reason: format!("bad exponent list `{exps}`"),
            })?;
        let modulus = modulus.trim().parse().map_err(|_| Error::InvalidParam {
            id: "expand".into(),
            reason: format!("bad modulus `{modulus}`"),
        })?;
        factors.push(ProductFactor { exponents, modulus });
    }
    Ok(factors)
}

#[allow(clippy::too_many_arguments)]
fn run_expand(
    builder: &str,
    args: &[String],
    n: Option<i64>,
    m: Option<i64>,
    alpha_k: Option<i64>,
    beta_k: Option<i64>,
    k: Option<i64>,
    factors: Option<String>,
    denominator: bool,
    cap: i64,
) -> Result<String> {
    let missing = |what: &str| Error::InvalidParam {
        id: "expand".into(),
        reason: format!("builder `{builder}` needs --{what}"),
    };
    match builder {
        "qbinom" => {
            let top_m: i64 = positional(args, 0, "m")?;
            let top_n: i64 = positional(args, 1, "n")?;
            Ok(qbinom(top_m, top_n).render())
        }
        "kernel" => {
            let kind_text: String = positional(args, 0, "kernel kind")?;
            let kind = KernelKind::parse(&kind_text).ok_or_else(|| Error::InvalidParam {
                id: "expand".into(),
                reason: format!("unknown kernel kind `{kind_text}`"),
            })?;
            let l: i64 = positional(args, 1, "L")?;
            let kk: i64 = positional(args, 2, "k")?;
            if l < 0 {
                return Err(Error::InvalidParam {
                    id: "expand".into(),
                    reason: "L must be nonnegative".into(),
                });
            }
            Ok(kernel(kind, l, kk).render())
        }
        "g" => {
            let params = GParams::new(
                n.ok_or_else(|| missing("N"))?,
                m.ok_or_else(|| missing("M"))?,
                alpha_k.ok_or_else(|| missing("alphaK"))?,
                beta_k.ok_or_else(|| missing("betaK"))?,
                k.ok_or_else(|| missing("K"))?,
            )?;
            Ok(g_poly(&params)?.render())
        }
        "product" => {
            if cap < 0 {
                return Err(Error::InvalidParam {
                    id: "expand".into(),
                    reason: "cap must be nonnegative".into(),
                });
            }
            let spec = ProductSideSpec {
                factors: parse_factors(&factors.ok_or_else(|| missing("factors"))?)?,
                euler_denominator: denominator,
            };
            Ok(product_side(&spec, cap).render())
        }
        other => Err(Error::UnknownIdentity { id: format!("builder `{other}`") }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        assert_eq!(parse_range("0..40").unwrap(), (0, 40));
        assert_eq!(parse_range("-6..6").unwrap(), (-6, 6));
        assert_eq!(parse_range("7").unwrap(), (7, 7));
        assert!(parse_range("5..1").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn expand_builders() {
        let out = run_expand("qbinom", &["2".into(), "2".into()], None, None, None, None, None, None, false, 40).unwrap();
        assert_eq!(out, "1 + q + 2*q^2 + q^3 + q^4");
        let out = run_expand("kernel", &["C".into(), "1".into(), "1".into()], None, None, None, None, None, None, false, 40).unwrap();
        assert_eq!(out, "q");
        let out = run_expand("g", &[], Some(1), Some(1), Some(5), Some(4), Some(3), None, false, 40).unwrap();
        assert_eq!(out, "1 + q");
        assert!(run_expand("nope", &[], None, None, None, None, None, None, false, 40).is_err());
    }

    #[test]
    fn expand_product_builder() {
        let out = run_expand(
            "product",
            &[],
            None,
            None,
            None,
            None,
            None,
            Some("4:4".into()),
            true,
            4,
        )
        .unwrap();
        assert_eq!(out, "1 + q + 2*q^2 + 3*q^3 + 4*q^4");
    }

    #[test]
    fn verify_grid_runs_and_sorts() {
        let config = RunConfig {
            ids: vec!["eq2.13".to_string()],
            ranges: [("L".to_string(), (0, 5))].into_iter().collect(),
            cap: None,
            output: None,
            format: OutputFormat::Json,
            parallelism: 2,
        };
        let (cells, skipped) = build_verify_cells(&config).unwrap();
        assert_eq!(cells.len(), 6);
        assert_eq!(skipped, 0);
        let reports = execute(cells, config.parallelism).unwrap();
        assert!(reports.iter().all(|r| r.passed));
        let ls: Vec<i64> = reports.iter().map(|r| r.params["L"]).collect();
        assert_eq!(ls, vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn constraint_cells_are_skipped() {
        let config = RunConfig {
            ids: vec!["eq2.21".to_string()],
            ranges: [
                ("L".to_string(), (0, 2)),
                ("nu".to_string(), (1, 2)),
                ("s".to_string(), (0, 1)),
            ]
            .into_iter()
            .collect(),
            cap: None,
            output: None,
            format: OutputFormat::Text,
            parallelism: 1,
        };
        let (cells, skipped) = build_verify_cells(&config).unwrap();
        // nu=1 admits only s=0; the s=1 cells are skipped
        assert_eq!(cells.len(), 9);
        assert_eq!(skipped, 3);
    }

    #[test]
    fn unknown_id_is_config_error() {
        let config = RunConfig {
            ids: vec!["bogus-id".to_string()],
            ranges: BTreeMap::new(),
            cap: None,
            output: None,
            format: OutputFormat::Text,
            parallelism: 1,
        };
        assert!(matches!(
            build_verify_cells(&config),
            Err(Error::UnknownIdentity { .. })
        ));
    }

    #[test]
    fn series_ids_use_default_caps() {
        let config = RunConfig {
            ids: vec!["jtp".to_string()],
            ranges: BTreeMap::new(),
            cap: Some(30),
            output: None,
            format: OutputFormat::Text,
            parallelism: 1,
        };
        let (cells, _) = build_verify_cells(&config).unwrap();
        match &cells[0] {
            Cell::Series { id, cap } => {
                assert_eq!(id, "jtp");
                assert_eq!(*cap, 30);
            }
            _ => panic!("expected series cell"),
        }
    }
}
