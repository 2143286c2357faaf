//! Command-line front end.
//!
//! `gda-lex <compute|table|crosscheck|valtable> --g1 <kind>:<n> --g2 <kind>:<m> [options]`
//!
//! Exit status: 0 on success, 1 when a cross-check finds a mismatch, 2 for
//! invalid arguments or requests beyond a method's caps.

use std::ffi::OsString;
use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, ValueEnum};

use crate::error::{Error, Result};
use crate::graph::{ComboKind, FactorKind, FactorSpec, ProductSpec};
use crate::oracle::{compute_value_table, min_gda_columns, ValueTable, COLUMN_DP_MAX_M};
use crate::report::{
    compute, crosscheck, render_csv, render_md, render_table_json, render_text, small_table,
    MethodChoice, ResultRecord, TableSource, DEFAULT_K_MAX,
};
use crate::result::GammaResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// γ_a of one product.
    Compute,
    /// Small-order tables (n ≤ 7) over an m range.
    Table,
    /// Compare methods over a range of products.
    Crosscheck,
    /// Compute a section cost table and optionally cache it.
    Valtable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Md,
}

/// `path:20`, `cycle:15`, or a bare kind where ranges supply the order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorArg {
    pub kind: FactorKind,
    pub order: Option<usize>,
}

impl FromStr for FactorArg {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Ok(kind) = s.parse::<FactorKind>() {
            return Ok(FactorArg { kind, order: None });
        }
        let f: FactorSpec = s.parse()?;
        Ok(FactorArg { kind: f.kind(), order: Some(f.order()) })
    }
}

impl FactorArg {
    fn spec(self, flag: &str) -> Result<FactorSpec> {
        let order = self
            .order
            .ok_or_else(|| Error::invalid(format!("{flag} needs an order, e.g. {}:5", self.kind)))?;
        FactorSpec::new(self.kind, order)
    }
}

/// Inclusive range `A..B`, `A..=B` or a single value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeArg(pub RangeInclusive<usize>);

impl FromStr for RangeArg {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::invalid(format!("bad range `{s}`")))
        };
        let range = match s.split_once("..") {
            Some((a, b)) => num(a)?..=num(b.trim_start_matches('='))?,
            None => num(s)?..=num(s)?,
        };
        if range.is_empty() {
            return Err(Error::invalid(format!("empty range `{s}`")));
        }
        Ok(RangeArg(range))
    }
}

#[derive(Debug, Parser)]
#[command(name = "gda-lex", version, about = "Global defensive alliance numbers of P/C lexicographic products")]
pub struct Cli {
    pub command: Command,
    /// Outer factor, `path:N` or `cycle:N` (a bare kind with --n-range).
    #[arg(long, value_parser = parse_arg::<FactorArg>)]
    pub g1: Option<FactorArg>,
    /// Inner factor, `path:M` or `cycle:M` (a bare kind with --m-range).
    #[arg(long, value_parser = parse_arg::<FactorArg>)]
    pub g2: Option<FactorArg>,
    /// auto, closed, sequence-dp, column-dp or subsets.
    #[arg(long, default_value = "auto", value_parser = parse_arg::<MethodChoice>)]
    pub method: MethodChoice,
    /// Print the column profile and masks of a minimum alliance.
    #[arg(long)]
    pub witness: bool,
    /// Shorthand for `--format json`.
    #[arg(long)]
    pub json: bool,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_parser = parse_arg::<RangeArg>)]
    pub n_range: Option<RangeArg>,
    #[arg(long, value_parser = parse_arg::<RangeArg>)]
    pub m_range: Option<RangeArg>,
    /// Comma-separated methods for crosscheck.
    #[arg(long, default_value = "closed,column-dp")]
    pub methods: String,
    /// Value table cache file (read if present, written by valtable and when missing).
    #[arg(long)]
    pub cache: Option<PathBuf>,
    /// Largest section length for valtable.
    #[arg(long, default_value_t = DEFAULT_K_MAX)]
    pub k_max: usize,
}

fn parse_arg<T: FromStr<Err = Error>>(s: &str) -> std::result::Result<T, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Outcome of a run: text to emit and whether a mismatch was found.
struct Output {
    text: String,
    mismatch: bool,
}

impl Cli {
    fn format(&self, default: Format) -> Format {
        if self.json {
            Format::Json
        } else {
            self.format.unwrap_or(default)
        }
    }

    fn product(&self) -> Result<ProductSpec> {
        let g1 = self.g1.ok_or_else(|| Error::invalid("--g1 is required"))?.spec("--g1")?;
        let g2 = self.g2.ok_or_else(|| Error::invalid("--g2 is required"))?.spec("--g2")?;
        ProductSpec::new(g1, g2)
    }

    fn load_cache(&self) -> Result<Option<ValueTable>> {
        match &self.cache {
            Some(p) if p.exists() => ValueTable::load(p).map(Some),
            _ => Ok(None),
        }
    }

    fn combos(&self) -> Vec<ComboKind> {
        ComboKind::ALL
            .into_iter()
            .filter(|c| self.g1.is_none_or(|a| a.kind == c.g1) && self.g2.is_none_or(|a| a.kind == c.g2))
            .collect()
    }

    fn range(&self, arg: &Option<RangeArg>, factor: Option<FactorArg>, flag: &str) -> Result<RangeInclusive<usize>> {
        if let Some(r) = arg {
            return Ok(r.0.clone());
        }
        match factor.and_then(|f| f.order) {
            Some(k) => Ok(k..=k),
            None => Err(Error::invalid(format!("{flag} is required"))),
        }
    }
}

fn run_compute(cli: &Cli) -> Result<Output> {
    let spec = cli.product()?;
    let mut cached = cli.load_cache()?;
    let wants_table = matches!(cli.method, MethodChoice::SequenceDp | MethodChoice::Auto);
    if let (Some(path), None, true) = (&cli.cache, &cached, wants_table) {
        if spec.m() <= COLUMN_DP_MAX_M {
            let t = compute_value_table(spec.g2(), DEFAULT_K_MAX)?;
            t.save(path)?;
            cached = Some(t);
        }
    }
    let mut r = compute(&spec, cli.method, &TableSource::new(cached))?;
    if cli.witness && r.witness.is_none() {
        attach_witness(&spec, &mut r);
    }
    let text = match cli.format(Format::Text) {
        Format::Json => ResultRecord::new(&spec, &r).to_json() + "\n",
        _ => render_text(&spec, &r, cli.witness),
    };
    Ok(Output { text, mismatch: false })
}

/// Closed-form and sequence results carry no vertex set; borrow the column DP's when it agrees.
fn attach_witness(spec: &ProductSpec, r: &mut GammaResult) {
    match min_gda_columns(spec) {
        Ok(exact) if exact.value == r.value => r.witness = exact.witness,
        Ok(exact) => log::warn!(
            "{spec}: {} value {} differs from the column DP ({}); no witness",
            r.method,
            r.value,
            exact.value
        ),
        Err(e) => log::warn!("{spec}: no witness available: {e}"),
    }
}

fn run_table(cli: &Cli) -> Result<Output> {
    let ms = cli.m_range.as_ref().map(|r| r.0.clone()).unwrap_or(3..=3);
    let mut specs = Vec::new();
    for combo in cli.combos() {
        let lo = if combo.g1 == FactorKind::Cycle { 3 } else { 2 };
        let ns = cli.n_range.as_ref().map(|r| r.0.clone()).unwrap_or(lo..=7);
        if *ns.start() < lo || *ns.end() > 7 {
            return Err(Error::Unsupported(format!(
                "{combo} tables cover n in {lo}..7, got {}..{}",
                ns.start(),
                ns.end()
            )));
        }
        for n in ns {
            for m in ms.clone() {
                specs.push(ProductSpec::of(combo.g1, n, combo.g2, m)?);
            }
        }
    }
    let rows = small_table(&specs)?;
    let text = match cli.format(Format::Csv) {
        Format::Json => render_table_json(&rows),
        Format::Md => render_md(&rows),
        _ => render_csv(&rows),
    };
    Ok(Output { text, mismatch: false })
}

fn run_crosscheck(cli: &Cli) -> Result<Output> {
    let methods = cli
        .methods
        .split(',')
        .map(str::parse)
        .collect::<Result<Vec<MethodChoice>>>()?;
    let ns = cli.range(&cli.n_range, cli.g1, "--n-range")?;
    let ms = cli.range(&cli.m_range, cli.g2, "--m-range")?;
    let mut specs = Vec::new();
    for combo in cli.combos() {
        for n in ns.clone() {
            for m in ms.clone() {
                if let Ok(s) = ProductSpec::of(combo.g1, n, combo.g2, m) {
                    specs.push(s);
                }
            }
        }
    }
    let report = crosscheck(&specs, &methods, &TableSource::new(cli.load_cache()?))?;
    let text = match cli.format(Format::Text) {
        Format::Json => serde_json::to_string_pretty(&report).expect("plain data serialises") + "\n",
        _ => report.render_text(),
    };
    Ok(Output { text, mismatch: !report.ok() })
}

fn run_valtable(cli: &Cli) -> Result<Output> {
    let g2 = cli.g2.ok_or_else(|| Error::invalid("--g2 is required"))?.spec("--g2")?;
    let table = compute_value_table(g2, cli.k_max)?;
    if let Some(path) = &cli.cache {
        table.save(path)?;
    }
    let text = match cli.format(Format::Text) {
        Format::Json => serde_json::to_string_pretty(&table.to_cache()).expect("plain data serialises") + "\n",
        _ => {
            let mut out = format!("k      val_I  val_E   ({g2})\n");
            for k in 2..=table.k_max() {
                out.push_str(&format!(
                    "{k:<6} {:>5}  {:>5}\n",
                    table.val_i(k).unwrap_or(0),
                    table.val_e(k).unwrap_or(0)
                ));
            }
            out
        }
    };
    Ok(Output { text, mismatch: false })
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => write_file(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::invalid(format!("cannot write {}: {e}", path.display())))
}

/// Runs the parsed command and maps the outcome to an exit status.
pub fn run(cli: &Cli) -> ExitCode {
    let result = match cli.command {
        Command::Compute => run_compute(cli),
        Command::Table => run_table(cli),
        Command::Crosscheck => run_crosscheck(cli),
        Command::Valtable => run_valtable(cli),
    };
    match result.and_then(|o| emit(&cli.out, &o.text).map(|_| o.mismatch)) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Parses `args` (program name first) and runs; argument errors exit with 2.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
    }
}
