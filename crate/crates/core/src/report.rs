//! Report documents, parameter sweeps, and their text / JSON / CSV encodings.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::rational::{serde_rational, Rational};
use crate::lichnerowicz::LichMatrix;
use crate::spaces::{DiagonalPairSpec, LedgerObataSpec, NikonorovSpec, SpaceSpec};
use crate::stability::{analyze, StabilityReport, Witness};
use crate::verify::Check;

/// Largest number of points a single sweep may request.
pub const MAX_SWEEP_POINTS: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::Parse {
                input: s.into(),
                reason: "expected text, json or csv".into(),
            }),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub family: String,
    pub params: serde_json::Value,
    #[serde(with = "serde_rational")]
    pub rho: Rational,
    #[serde(with = "serde_rational")]
    pub two_rho: Rational,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<LichMatrix>,
    #[serde(with = "serde_rational::option_vec")]
    pub spectrum_exact: Option<Vec<Rational>>,
    pub spectrum_numeric: Option<Vec<f64>>,
    pub verdict: String,
    #[serde(with = "serde_rational")]
    pub lambda_min_bound: Rational,
    pub witness: Option<Witness>,
    pub coindex_lower_bound: Option<usize>,
    pub notes: Vec<String>,
    pub checks: Vec<Check>,
}

fn spec_params(spec: &SpaceSpec) -> serde_json::Value {
    let mut v = serde_json::to_value(spec).expect("spec serializes");
    if let Some(obj) = v.as_object_mut() {
        obj.remove("family");
    }
    v
}

/// `key=value` pairs joined by `;`, e.g. `m=11;dim_f=3`.
pub fn params_string(spec: &SpaceSpec) -> String {
    let list = |v: &[String]| v.join(",");
    match spec {
        SpaceSpec::LedgerObata(s) => format!("m={};dim_f={}", s.m, s.dim_f),
        SpaceSpec::Diagonal(s) => format!(
            "d1={};d2={};c={};multiplicity_free={}",
            s.d1, s.d2, s.c, s.multiplicity_free
        ),
        SpaceSpec::Nikonorov(s) => format!(
            "m={};n={};dim_h={};c={};dim_q={}",
            s.m,
            s.n,
            s.dim_h,
            list(&s.c.iter().map(|c| c.to_string()).collect::<Vec<_>>()),
            list(&s.dim_q.iter().map(|d| d.to_string()).collect::<Vec<_>>()),
        ),
    }
}

impl ReportDocument {
    pub fn new(spec: &SpaceSpec, report: StabilityReport, include_matrix: bool) -> Self {
        ReportDocument {
            family: spec.family_name().to_string(),
            params: spec_params(spec),
            rho: report.rho,
            two_rho: report.two_rho,
            matrix: if include_matrix { report.matrix } else { None },
            spectrum_exact: report.spectrum_exact,
            spectrum_numeric: report.spectrum_numeric,
            verdict: report.verdict.as_str().to_string(),
            lambda_min_bound: report.lambda_min_bound,
            witness: report.witness,
            coindex_lower_bound: report.coindex_lower_bound,
            notes: report.notes,
            checks: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "family:              {}", self.family);
        let _ = writeln!(s, "params:              {}", self.params);
        let _ = writeln!(s, "rho:                 {}", self.rho);
        let _ = writeln!(s, "2 rho:               {}", self.two_rho);
        let _ = writeln!(s, "lambda_min_bound:    {}", self.lambda_min_bound);
        let _ = writeln!(s, "verdict:             {}", self.verdict);
        if let Some(c) = self.coindex_lower_bound {
            let _ = writeln!(s, "coindex_lower_bound: {c}");
        }
        if let Some(w) = &self.witness {
            let coeffs: Vec<String> = w.coeffs.iter().map(|c| c.to_string()).collect();
            let _ = writeln!(
                s,
                "witness:             ({}) rayleigh {}",
                coeffs.join(", "),
                w.rayleigh
            );
        }
        if let Some(sp) = &self.spectrum_exact {
            let v: Vec<String> = sp.iter().map(|r| r.to_string()).collect();
            let _ = writeln!(s, "spectrum_exact:      {{{}}}", v.join(", "));
        }
        if let Some(m) = &self.matrix {
            let _ = writeln!(
                s,
                "matrix ({} metric, dims {:?}):",
                m.metric().as_str(),
                m.dims().as_slice()
            );
            for i in 0..m.order() {
                let row: Vec<String> = (0..m.order()).map(|j| m.entry(i, j).to_string()).collect();
                let _ = writeln!(s, "  [{}]", row.join(", "));
            }
        }
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        s
    }
}

/// Full single-space report.
pub fn report(spec: &SpaceSpec) -> Result<ReportDocument> {
    let v = spec.validate();
    if !v.is_empty() {
        return Err(Error::InvalidSpec(v));
    }
    Ok(ReportDocument::new(spec, analyze(spec)?, true))
}

/// Parses `a..b` (inclusive) or a single integer.
pub fn parse_range(s: &str) -> Result<RangeInclusive<u64>> {
    let bad = |reason: &str| Error::Parse {
        input: s.to_string(),
        reason: reason.to_string(),
    };
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            (a.trim(), b.trim())
        }
        None => (s.trim(), s.trim()),
    };
    let a: u64 = a
        .parse()
        .map_err(|_| bad("range start is not an integer"))?;
    let b: u64 = b.parse().map_err(|_| bad("range end is not an integer"))?;
    if a > b {
        return Err(bad("empty range"));
    }
    if b - a >= MAX_SWEEP_POINTS as u64 {
        return Err(bad("range too large"));
    }
    Ok(a..=b)
}

/// The specs visited by a sweep, in order.
#[derive(Clone, Debug)]
pub enum Sweep {
    LedgerObata {
        m: RangeInclusive<u64>,
        dim_f: u64,
    },
    /// `Sp(n) x Sp(n-1) / diag Sp(n-1)`.
    SpSeries {
        n: RangeInclusive<u64>,
    },
    Nikonorov {
        m: RangeInclusive<u64>,
        n: usize,
        dim_h: u64,
        c: Vec<Rational>,
        dim_q: Vec<u64>,
    },
}

impl Sweep {
    pub fn specs(&self) -> Result<Vec<SpaceSpec>> {
        match self {
            Sweep::LedgerObata { m, dim_f } => Ok(m
                .clone()
                .map(|m| {
                    SpaceSpec::LedgerObata(LedgerObataSpec {
                        m: m as usize,
                        dim_f: *dim_f,
                    })
                })
                .collect()),
            Sweep::SpSeries { n } => n
                .clone()
                .map(|n| DiagonalPairSpec::sp_series(n).map(SpaceSpec::Diagonal))
                .collect(),
            Sweep::Nikonorov {
                m,
                n,
                dim_h,
                c,
                dim_q,
            } => Ok(m
                .clone()
                .map(|m| {
                    SpaceSpec::Nikonorov(NikonorovSpec {
                        m: m as usize,
                        n: *n,
                        dim_h: *dim_h,
                        c: c.clone(),
                        dim_q: dim_q.clone(),
                    })
                })
                .collect()),
        }
    }
}

/// One report per sweep point, without matrices.
pub fn sweep(s: &Sweep) -> Result<Vec<ReportDocument>> {
    s.specs()?
        .iter()
        .map(|spec| {
            let v = spec.validate();
            if !v.is_empty() {
                return Err(Error::InvalidSpec(v));
            }
            Ok(ReportDocument::new(spec, analyze(spec)?, false))
        })
        .collect()
}

#[derive(Serialize)]
struct CsvRow<'a> {
    family: &'a str,
    params: String,
    rho: String,
    lambda_min_bound: String,
    verdict: &'a str,
    coindex_lower_bound: Option<usize>,
}

pub const CSV_HEADER: [&str; 6] = [
    "family",
    "params",
    "rho",
    "lambda_min_bound",
    "verdict",
    "coindex_lower_bound",
];

/// CSV with the columns of [`CSV_HEADER`]; a missing coindex is an empty field.
pub fn to_csv(docs: &[ReportDocument]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if docs.is_empty() {
        w.write_record(CSV_HEADER)
            .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    }
    for d in docs {
        let spec: SpaceSpec = spec_from_doc(d)?;
        w.serialize(CsvRow {
            family: &d.family,
            params: params_string(&spec),
            rho: d.rho.to_string(),
            lambda_min_bound: d.lambda_min_bound.to_string(),
            verdict: &d.verdict,
            coindex_lower_bound: d.coindex_lower_bound,
        })
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv is utf-8"))
}

fn spec_from_doc(d: &ReportDocument) -> Result<SpaceSpec> {
    let mut v = d.params.clone();
    if let Some(obj) = v.as_object_mut() {
        obj.insert("family".into(), serde_json::Value::String(d.family.clone()));
    }
    serde_json::from_value(v).map_err(|e| Error::Parse {
        input: d.params.to_string(),
        reason: e.to_string(),
    })
}

pub fn to_json_array(docs: &[ReportDocument]) -> String {
    serde_json::to_string_pretty(docs).expect("reports serialize")
}

pub fn to_text(docs: &[ReportDocument]) -> String {
    docs.iter()
        .map(|d| d.to_text())
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn render(docs: &[ReportDocument], format: Format) -> Result<String> {
    match format {
        Format::Text => Ok(to_text(docs)),
        Format::Json => Ok(if docs.len() == 1 {
            docs[0].to_json()
        } else {
            to_json_array(docs)
        }),
        Format::Csv => to_csv(docs),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..50").unwrap(), 2..=50);
        assert_eq!(parse_range("2..=5").unwrap(), 2..=5);
        assert_eq!(parse_range("7").unwrap(), 7..=7);
        assert!(parse_range("5..2").is_err());
        assert!(parse_range("a..2").is_err());
        assert!(parse_range("1..100000").is_err());
    }

    #[test]
    fn ledger_obata_sweep_csv() {
        let docs = sweep(&Sweep::LedgerObata {
            m: 2..=50,
            dim_f: 3,
        })
        .unwrap();
        let csv = to_csv(&docs).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 50);
        assert_eq!(lines[0], CSV_HEADER.join(","));
        assert_eq!(
            lines[1],
            "ledger-obata,m=2;dim_f=3,5/12,1/3,unstable_certified,1"
        );
        assert!(lines[10].starts_with("ledger-obata,m=11;"));
        assert!(lines[10].ends_with(",unstable_certified,9"));
    }

    #[test]
    fn sp_series_sweep() {
        let docs = sweep(&Sweep::SpSeries { n: 2..=10 }).unwrap();
        for (k, d) in docs.iter().enumerate() {
            let n = k as i64 + 2;
            assert_eq!(
                d.lambda_min_bound,
                rat(n * (2 * n + 1), (4 * n - 1) * (n + 1))
            );
            assert_eq!(d.verdict, "unstable_certified");
        }
    }

    #[test]
    fn json_is_deterministic_and_round_trips() {
        let spec = SpaceSpec::Diagonal(DiagonalPairSpec {
            d1: 6,
            d2: 8,
            c: rat(3, 4),
            multiplicity_free: true,
        });
        let a = report(&spec).unwrap().to_json();
        let b = report(&spec).unwrap().to_json();
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["verdict"], "stable_certified");
        assert_eq!(v["lambda_min_bound"], "7/12");
        assert_eq!(v["params"]["c"], "3/4");
        let back: SpaceSpec = spec_from_doc(&report(&spec).unwrap()).unwrap();
        assert_eq!(back, spec);
    }

    #[test]
    fn invalid_spec_is_rejected() {
        let spec = SpaceSpec::LedgerObata(LedgerObataSpec { m: 1, dim_f: 3 });
        assert!(matches!(report(&spec), Err(Error::InvalidSpec(_))));
    }
}
