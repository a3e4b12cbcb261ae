//! Command-line frontend: `report`, `sweep`, `verify` and `oracle`.
//!
//! Exit codes: 0 on success, 1 on invalid input, 2 when `verify` finds a
//! failing check.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gstab::exact::rational::format_rational;
use gstab::prelude::*;
use gstab::report::{self, Format, Sweep};
use gstab::structural::oracle_mismatches;
use gstab::verify::{run_checks, Check, Fault, VerifyConfig};

#[derive(Parser)]
#[command(
    name = "gstab",
    version,
    about = "Exact G-stability of homogeneous Einstein metrics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one space.
    Report(ReportArgs),
    /// One report per point of a parameter range.
    Sweep(SweepArgs),
    /// Run the reproduction suite.
    Verify(VerifyArgs),
    /// Compare brute-force su(2) constants with the closed form.
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Nikonorov,
    LedgerObata,
    Diagonal,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Args)]
struct NikonorovArgs {
    /// Number of factors `G_j` besides the copies of `H`.
    #[arg(long, default_value_t = 0)]
    n: usize,
    #[arg(long)]
    dim_h: Option<u64>,
    /// Ratios `c_j` as `p/q`, comma separated; a single value applies to every `j`.
    #[arg(long, value_delimiter = ',')]
    c: Vec<String>,
    /// `dim q_j`, comma separated; a single value applies to every `j`.
    #[arg(long, value_delimiter = ',')]
    dim_q: Vec<u64>,
}

#[derive(Args)]
struct ReportArgs {
    /// JSON spec file; replaces the family flags.
    #[arg(long)]
    spec: Option<PathBuf>,
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    #[arg(long)]
    m: Option<usize>,
    #[command(flatten)]
    nik: NikonorovArgs,
    #[arg(long, default_value_t = 3)]
    dim_f: u64,
    #[arg(long)]
    d1: Option<u64>,
    #[arg(long)]
    d2: Option<u64>,
    #[arg(long)]
    multiplicity_free: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Range `a..b` (inclusive) of `m`.
    #[arg(long)]
    m: Option<String>,
    /// Range of `n` for `Sp(n) x Sp(n-1) / diag Sp(n-1)`.
    #[arg(long)]
    sp_series: Option<String>,
    #[command(flatten)]
    nik: NikonorovArgs,
    #[arg(long, default_value_t = 3)]
    dim_f: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
}

#[derive(Args)]
struct VerifyArgs {
    /// Print the checks as JSON.
    #[arg(long)]
    json: bool,
    /// Show the detail line of passing checks too.
    #[arg(short, long)]
    verbose: bool,
    #[arg(long, hide = true, value_parser = ["sign-112"])]
    inject_fault: Option<String>,
}

#[derive(Args)]
struct OracleArgs {
    /// Range of `m`, within `2..4`.
    #[arg(long, default_value = "2..4")]
    m: String,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
}

/// Writes to stdout, ignoring errors such as a closed pipe.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = write!(std::io::stdout().lock(), $($t)*);
    }};
}

macro_rules! outln {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

type Outcome<T> = std::result::Result<T, Failure>;

enum Failure {
    Input(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn need<T>(v: Option<T>, flag: &str) -> Outcome<T> {
    v.ok_or_else(|| Failure::Input(format!("missing --{flag}")))
}

fn broadcast<T: Clone>(v: Vec<T>, n: usize) -> Vec<T> {
    if v.len() == 1 && n > 1 {
        vec![v[0].clone(); n]
    } else {
        v
    }
}

impl NikonorovArgs {
    fn parts(&self) -> Outcome<(u64, Vec<Rational>, Vec<u64>)> {
        let c = self
            .c
            .iter()
            .map(|s| parse_rational(s))
            .collect::<gstab::Result<Vec<_>>>()?;
        Ok((
            need(self.dim_h, "dim-h")?,
            broadcast(c, self.n),
            broadcast(self.dim_q.clone(), self.n),
        ))
    }
}

fn report_spec(a: &ReportArgs) -> Outcome<SpaceSpec> {
    if let Some(path) = &a.spec {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        return serde_json::from_str(&text)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())));
    }
    Ok(match need(a.family, "family or --spec")? {
        FamilyArg::LedgerObata => SpaceSpec::LedgerObata(LedgerObataSpec {
            m: need(a.m, "m")?,
            dim_f: a.dim_f,
        }),
        FamilyArg::Nikonorov => {
            let (dim_h, c, dim_q) = a.nik.parts()?;
            SpaceSpec::Nikonorov(NikonorovSpec {
                m: need(a.m, "m")?,
                n: a.nik.n,
                dim_h,
                c,
                dim_q,
            })
        }
        FamilyArg::Diagonal => {
            let c = a.nik.c.first().map(|s| parse_rational(s)).transpose()?;
            SpaceSpec::Diagonal(DiagonalPairSpec {
                d1: need(a.d1, "d1")?,
                d2: need(a.d2, "d2")?,
                c: need(c, "c")?,
                multiplicity_free: a.multiplicity_free,
            })
        }
    })
}

fn cmd_report(a: &ReportArgs) -> Outcome<()> {
    let doc = report::report(&report_spec(a)?)?;
    out!(
        "{}",
        ensure_newline(report::render(&[doc], a.format.into())?)
    );
    Ok(())
}

fn cmd_sweep(a: &SweepArgs) -> Outcome<()> {
    let range = |s: &Option<String>, flag: &str| -> Outcome<_> {
        Ok(report::parse_range(need(s.as_deref(), flag)?)?)
    };
    let sweep = match a.family {
        FamilyArg::LedgerObata => Sweep::LedgerObata {
            m: range(&a.m, "m")?,
            dim_f: a.dim_f,
        },
        FamilyArg::Diagonal => Sweep::SpSeries {
            n: range(&a.sp_series, "sp-series")?,
        },
        FamilyArg::Nikonorov => {
            let (dim_h, c, dim_q) = a.nik.parts()?;
            Sweep::Nikonorov {
                m: range(&a.m, "m")?,
                n: a.nik.n,
                dim_h,
                c,
                dim_q,
            }
        }
    };
    let docs = report::sweep(&sweep)?;
    out!(
        "{}",
        ensure_newline(report::render(&docs, a.format.into())?)
    );
    Ok(())
}

fn cmd_verify(a: &VerifyArgs) -> Outcome<()> {
    let cfg = match a.inject_fault.as_deref() {
        Some("sign-112") => VerifyConfig::with_fault(Fault::SignError112),
        _ => VerifyConfig::default(),
    };
    let checks = run_checks(&cfg);
    let ok = checks.iter().all(|c| c.pass);
    if a.json {
        #[derive(serde::Serialize)]
        struct Out<'a> {
            pass: bool,
            checks: &'a [Check],
        }
        let out = Out {
            pass: ok,
            checks: &checks,
        };
        outln!(
            "{}",
            serde_json::to_string_pretty(&out).expect("checks serialize")
        );
    } else {
        for c in &checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            if c.pass && !a.verbose {
                outln!("{status} {}", c.name);
            } else {
                outln!("{status} {}: {}", c.name, c.detail);
            }
        }
        let passed = checks.iter().filter(|c| c.pass).count();
        outln!("{passed}/{} checks passed", checks.len());
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Verify)
    }
}

fn cmd_oracle(a: &OracleArgs) -> Outcome<()> {
    let ms = report::parse_range(&a.m)?;
    let mut rows = Vec::new();
    for m in ms {
        let m = m as usize;
        let brute = brute_force_lo_constants(m)?;
        let closed = ledger_obata_constants(&LedgerObataSpec { m, dim_f: 3 })?;
        let bad = oracle_mismatches(&brute, &closed);
        rows.push((m, brute, bad));
    }
    match a.format {
        FormatArg::Text => {
            for (m, brute, bad) in &rows {
                outln!(
                    "m={m}: {} nonzero constants, {} mismatches",
                    brute.entries().count(),
                    bad.len()
                );
                for (t, v) in brute.entries() {
                    outln!("  [{},{},{}] = {}", t[0], t[1], t[2], format_rational(v));
                }
                for (t, want, got) in bad {
                    let got = got.as_ref().map_or("unknown".to_string(), format_rational);
                    outln!(
                        "  mismatch [{},{},{}]: oracle {} closed form {got}",
                        t[0],
                        t[1],
                        t[2],
                        format_rational(want)
                    );
                }
            }
        }
        FormatArg::Json => {
            let out: Vec<_> = rows
                .iter()
                .map(|(m, brute, bad)| {
                    serde_json::json!({
                        "m": m,
                        "constants": brute,
                        "mismatches": bad.len(),
                    })
                })
                .collect();
            outln!(
                "{}",
                serde_json::to_string_pretty(&out).expect("constants serialize")
            );
        }
        FormatArg::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Failure::Input(e.to_string());
            w.write_record(["m", "i", "j", "k", "oracle", "closed_form"])
                .map_err(io)?;
            for (m, brute, _) in &rows {
                let closed = ledger_obata_constants(&LedgerObataSpec { m: *m, dim_f: 3 })?;
                for (t, v) in brute.entries() {
                    let c = closed.get(t[0], t[1], t[2])?;
                    w.write_record([
                        m.to_string(),
                        t[0].to_string(),
                        t[1].to_string(),
                        t[2].to_string(),
                        format_rational(v),
                        format_rational(&c),
                    ])
                    .map_err(io)?;
                }
            }
            let bytes = w.into_inner().map_err(|e| Failure::Input(e.to_string()))?;
            out!("{}", String::from_utf8_lossy(&bytes));
        }
    }
    if rows.iter().any(|(_, _, bad)| !bad.is_empty()) {
        return Err(Failure::Verify);
    }
    Ok(())
}

fn ensure_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Report(a) => cmd_report(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Oracle(a) => cmd_oracle(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verify) => ExitCode::from(2),
    }
}
