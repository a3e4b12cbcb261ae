//! Stability verdicts for the three families.
//!
//! An Einstein metric with constant `rho` is G-stable iff `2 rho < lambda_p`,
//! the smallest eigenvalue of the Lichnerowicz operator on traceless invariant
//! tensors, and G-unstable iff `lambda_p < 2 rho`. Instability is certified by
//! any traceless direction with Rayleigh quotient below `2 rho`, even one taken
//! from a principal block. Stability is only certified when the operator is
//! known on all invariant tensors, i.e. for a multiplicity-free diagonal pair.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::rational::{from_u64, int, rat, serde_rational, Rational, Surd};
use crate::lichnerowicz::{
    lich_diagonal_pair_g0, lich_ledger_obata, lich_nikonorov_block, ricci_diagonal, LichMatrix,
    MetricTag,
};
use crate::spaces::{
    rho_diagonal_pair, rho_ledger_obata, rho_nikonorov, DiagonalPairSpec, LedgerObataSpec,
    NikonorovSpec, SpaceSpec,
};
use crate::structural::diagonal_pair_constants;

/// Largest Ledger-Obata order for which reports include a Jacobi cross-check.
pub const NUMERIC_CHECK_MAX_ORDER: usize = 64;

const NUMERIC_TOL: f64 = 1e-13;
const NUMERIC_AGREEMENT: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    UnstableCertified,
    StableCertified,
    Degenerate,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::UnstableCertified => "unstable_certified",
            Verdict::StableCertified => "stable_certified",
            Verdict::Degenerate => "degenerate",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Nikonorov,
    LedgerObata,
    Diagonal,
}

/// A unit traceless direction in the I-basis and its Rayleigh quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(serialize_with = "serialize_surds")]
    pub coeffs: Vec<Surd>,
    #[serde(with = "serde_rational")]
    pub rayleigh: Rational,
}

fn serialize_surds<S: serde::Serializer>(v: &[Surd], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

#[derive(Clone, Debug, Serialize)]
pub struct StabilityReport {
    pub family: Family,
    #[serde(with = "serde_rational")]
    pub rho: Rational,
    #[serde(with = "serde_rational")]
    pub two_rho: Rational,
    /// `lambda_p` itself when certified, otherwise an upper bound for it.
    #[serde(with = "serde_rational")]
    pub lambda_min_bound: Rational,
    pub lambda_exact: bool,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub coindex_lower_bound: Option<usize>,
    #[serde(with = "serde_rational::option_vec")]
    pub spectrum_exact: Option<Vec<Rational>>,
    pub spectrum_numeric: Option<Vec<f64>>,
    pub matrix: Option<LichMatrix>,
    pub notes: Vec<String>,
}

/// Sorts certified eigenvalues of traceless directions against `2 rho`.
///
/// Any value below `2 rho` certifies instability. Stability needs every value
/// above `2 rho`, a complete spectrum and a multiplicity-free isotropy
/// representation. A minimum equal to `2 rho` is degenerate.
pub fn classify(
    two_rho: &Rational,
    certified_eigs: &[Rational],
    complete: bool,
    multiplicity_free: bool,
) -> Verdict {
    if certified_eigs.iter().any(|e| e < two_rho) {
        return Verdict::UnstableCertified;
    }
    if certified_eigs.iter().any(|e| e == two_rho) {
        return Verdict::Degenerate;
    }
    if !certified_eigs.is_empty() && complete && multiplicity_free {
        return Verdict::StableCertified;
    }
    Verdict::Inconclusive
}

/// `1/2 (2 rho <A, A> - <L_p A, A>)` for the tensor `A = sum b_k Id_{p_k}`
/// given by block coordinates `b` (so `<A, A> = sum d_k b_k^2`).
pub fn second_variation(rho: &Rational, m: &LichMatrix, b: &[Rational]) -> Result<Rational> {
    if m.metric() != MetricTag::Standard {
        return Err(Error::Hypothesis(
            "the second-variation formula is evaluated at the standard metric".into(),
        ));
    }
    let w = m.weighted();
    let tr = w.trace_of(b)?;
    if !tr.is_zero() {
        return Err(Error::NotTraceless(tr.to_string()));
    }
    Ok((int(2) * rho * w.norm_sq(b)? - w.quad(b)?) / int(2))
}

/// The same value for I-basis coordinates `a`, when all summands have the
/// same dimension (then the traceless condition is `sum a_k = 0`).
pub fn second_variation_i_basis(
    rho: &Rational,
    m: &LichMatrix,
    a: &[Rational],
) -> Result<Rational> {
    if !m.dims().is_uniform() {
        return Err(Error::Irrational(
            "I-basis coordinates need equal summand dimensions".into(),
        ));
    }
    // with d_k = d the block coordinates a_k / sqrt(d) scale both terms by 1/d
    let d = from_u64(m.dims().get(0));
    Ok(second_variation(rho, m, a)? / d)
}

fn unit_surds(v: &[i64]) -> Vec<Surd> {
    let n: i64 = v.iter().map(|x| x * x).sum();
    let inv = Surd::inv_sqrt(n as u64);
    v.iter().map(|&x| inv.scale(&int(x))).collect()
}

/// The direction `(1, 1, -2, 0, .., 0)/sqrt 6` over `I_1, .., I_{m-n-1}` and its
/// Rayleigh quotient `1 - 2 rho`, checked against the block matrix.
pub fn nikonorov_witness(s: &NikonorovSpec) -> Result<Witness> {
    s.ensure_valid()?;
    if !s.witness_eligible() {
        return Err(Error::Hypothesis(format!(
            "witness requires n+4 <= m (m = {}, n = {})",
            s.m, s.n
        )));
    }
    let rho = rho_nikonorov(s)?;
    let closed = int(1) - int(2) * &rho;
    let block = lich_nikonorov_block(s)?;
    let mut v = vec![0i64; block.order()];
    v[..3].copy_from_slice(&[1, 1, -2]);
    let b: Vec<Rational> = v.iter().map(|&x| int(x)).collect();
    let quad = block.weighted().rayleigh(&b)?;
    if quad != closed {
        return Err(Error::Inconsistent(format!(
            "witness Rayleigh quotient {quad} differs from 1 - 2 rho = {closed}"
        )));
    }
    Ok(Witness {
        coeffs: unit_surds(&v),
        rayleigh: closed,
    })
}

/// `a_i = m/(m+1) - i/(i+2)`.
pub fn ledger_obata_eigenvalue(m: usize, i: usize) -> Rational {
    rat(m as i64, m as i64 + 1) - rat(i as i64, i as i64 + 2)
}

/// `(1, .., 1, -i, 0, .., 0)` of length `m`, the eigenvector for `a_i`.
pub fn ledger_obata_eigenvector(m: usize, i: usize) -> Vec<Rational> {
    (0..m)
        .map(|k| match k.cmp(&i) {
            std::cmp::Ordering::Less => int(1),
            std::cmp::Ordering::Equal => -int(i as i64),
            std::cmp::Ordering::Greater => int(0),
        })
        .collect()
}

/// `{0} ∪ {a_1, .., a_{m-1}}`, in that order.
pub fn ledger_obata_spectrum(s: &LedgerObataSpec) -> Result<Vec<Rational>> {
    s.ensure_valid()?;
    let mut out = vec![int(0)];
    out.extend((1..s.m).map(|i| ledger_obata_eigenvalue(s.m, i)));
    Ok(out)
}

/// `#{i : a_i < 2 rho}`.
pub fn ledger_obata_coindex_lower_bound(s: &LedgerObataSpec) -> Result<usize> {
    let two_rho = int(2) * rho_ledger_obata(s)?;
    Ok(ledger_obata_spectrum(s)?[1..]
        .iter()
        .filter(|a| *a < &two_rho)
        .count())
}

fn numeric_matches(numeric: &[f64], exact: &[Rational]) -> bool {
    let mut e: Vec<f64> = exact.iter().map(crate::exact::rational::to_f64).collect();
    e.sort_by(f64::total_cmp);
    numeric.len() == e.len()
        && numeric
            .iter()
            .zip(&e)
            .all(|(x, y)| (x - y).abs() < NUMERIC_AGREEMENT)
}

pub fn ledger_obata_report(s: &LedgerObataSpec) -> Result<StabilityReport> {
    let rho = rho_ledger_obata(s)?;
    let two_rho = int(2) * &rho;
    let matrix = lich_ledger_obata(s)?;
    let spectrum = ledger_obata_spectrum(s)?;
    let mut notes = vec![
        "spectrum on I-basis directions; the isotropy representation is not multiplicity-free, so only instability can be certified".to_string(),
    ];

    // each a_i is certified by its exact eigenvector, the 0 by the identity
    if !matrix.annihilates_identity() {
        return Err(Error::Inconsistent(
            "identity tensor is not in the kernel".into(),
        ));
    }
    let w = matrix.weighted();
    for (i, a) in spectrum.iter().enumerate().skip(1) {
        let v = ledger_obata_eigenvector(s.m, i);
        let image = w.apply(&v)?;
        if image.iter().zip(&v).any(|(x, y)| *x != a * y) {
            return Err(Error::Inconsistent(format!(
                "a_{i} = {a} is not an eigenvalue"
            )));
        }
    }
    notes.push("each a_i certified by an exact eigenvector".into());

    let spectrum_numeric = if s.m <= NUMERIC_CHECK_MAX_ORDER {
        let numeric = matrix.eigen_numeric(NUMERIC_TOL)?;
        if !numeric_matches(&numeric, &spectrum) {
            return Err(Error::Inconsistent(
                "Jacobi spectrum disagrees with the closed form".into(),
            ));
        }
        Some(numeric)
    } else {
        notes.push(format!(
            "numeric cross-check skipped above order {NUMERIC_CHECK_MAX_ORDER}"
        ));
        None
    };

    let traceless = &spectrum[1..];
    let verdict = classify(&two_rho, traceless, false, false);
    let lambda = ledger_obata_eigenvalue(s.m, s.m - 1);
    let v: Vec<i64> = ledger_obata_eigenvector(s.m, s.m - 1)
        .iter()
        .map(|x| x.to_integer().try_into().expect("small"))
        .collect();
    let coindex = traceless.iter().filter(|a| *a < &two_rho).count();
    Ok(StabilityReport {
        family: Family::LedgerObata,
        rho,
        two_rho,
        lambda_min_bound: lambda.clone(),
        lambda_exact: false,
        verdict,
        witness: Some(Witness {
            coeffs: unit_surds(&v),
            rayleigh: lambda,
        }),
        coindex_lower_bound: Some(coindex),
        spectrum_exact: Some(spectrum),
        spectrum_numeric,
        matrix: Some(matrix),
        notes,
    })
}

pub fn nikonorov_report(s: &NikonorovSpec) -> Result<StabilityReport> {
    let rho = rho_nikonorov(s)?;
    let two_rho = int(2) * &rho;
    let mut notes = vec![
        "Einstein constant (assumed): the standard metric is taken to be Einstein".to_string(),
    ];
    let matrix = if s.h_parts() >= 1 {
        Some(lich_nikonorov_block(s)?)
    } else {
        notes.push("no alpha-block: m - n - 1 = 0".into());
        None
    };
    let (verdict, witness, bound) = if s.witness_eligible() {
        let w = nikonorov_witness(s)?;
        let verdict = classify(&two_rho, std::slice::from_ref(&w.rayleigh), false, false);
        notes.push("witness Rayleigh quotient 1 - 2 rho checked against the block matrix".into());
        let bound = w.rayleigh.clone();
        (verdict, Some(w), bound)
    } else {
        notes.push("witness requires n+4 <= m".into());
        (Verdict::Inconclusive, None, two_rho.clone())
    };
    if witness.is_none() {
        notes.push("lambda_min_bound is not informative without a witness".into());
    }
    let coindex = (verdict == Verdict::UnstableCertified).then_some(1);
    Ok(StabilityReport {
        family: Family::Nikonorov,
        rho,
        two_rho,
        lambda_min_bound: bound,
        lambda_exact: false,
        verdict,
        witness,
        coindex_lower_bound: coindex,
        spectrum_exact: None,
        spectrum_numeric: None,
        matrix,
        notes,
    })
}

/// `lambda_p = (1-c)(d1+d2)/d1` at `g_0`, the nonzero eigenvalue of the 2x2 operator.
pub fn diagonal_pair_lambda(s: &DiagonalPairSpec) -> Result<Rational> {
    s.ensure_valid()?;
    Ok((int(1) - &s.c) * from_u64(s.d1 + s.d2) / from_u64(s.d1))
}

pub fn diagonal_pair_verdict(s: &DiagonalPairSpec) -> Result<StabilityReport> {
    let t = diagonal_pair_constants(s)?;
    let rho = rho_diagonal_pair();
    let two_rho = int(2) * &rho;
    let x = [int(1), (&s.c + int(1)) / &s.c];
    let ricci = ricci_diagonal(&t, &x)?;
    if ricci.iter().any(|r| r != &rho) {
        return Err(Error::Inconsistent(format!(
            "g0 is not Einstein: ricci = ({}, {})",
            ricci[0], ricci[1]
        )));
    }
    let matrix = lich_diagonal_pair_g0(s)?;
    let lambda = diagonal_pair_lambda(s)?;
    if !matrix.determinant().is_zero() || matrix.trace() != lambda {
        return Err(Error::Inconsistent(
            "g0 operator is not rank one with trace lambda_p".into(),
        ));
    }
    let numeric = matrix.eigen_numeric(NUMERIC_TOL)?;
    if !numeric_matches(&numeric, &[int(0), lambda.clone()]) {
        return Err(Error::Inconsistent(
            "Jacobi spectrum disagrees with {0, lambda_p}".into(),
        ));
    }
    let verdict = classify(
        &two_rho,
        std::slice::from_ref(&lambda),
        true,
        s.multiplicity_free,
    );
    let mut notes = vec![
        "ricci(g0) = g0/4 verified exactly".to_string(),
        "lambda_p from trace; determinant is 0".to_string(),
    ];
    if !s.multiplicity_free {
        notes.push("stability is only certified for multiplicity-free isotropy".into());
    }
    // A = d2 Id_a - d1 Id_k has I-coordinates (d2 sqrt d1, -d1 sqrt d2) of
    // squared norm d1 d2 (d1 + d2)
    let k = s.d1 * s.d2 * (s.d1 + s.d2);
    let unit = |c: i64, d: u64| Surd::new(int(c) / from_u64(k), k * d);
    let witness = Witness {
        coeffs: vec![unit(s.d2 as i64, s.d1), unit(-(s.d1 as i64), s.d2)],
        rayleigh: lambda.clone(),
    };
    let coindex = usize::from(lambda < two_rho);
    Ok(StabilityReport {
        family: Family::Diagonal,
        rho,
        two_rho,
        lambda_min_bound: lambda.clone(),
        lambda_exact: true,
        verdict,
        witness: Some(witness),
        coindex_lower_bound: Some(coindex),
        spectrum_exact: Some(vec![int(0), lambda]),
        spectrum_numeric: Some(numeric),
        matrix: Some(matrix),
        notes,
    })
}

pub fn analyze(spec: &SpaceSpec) -> Result<StabilityReport> {
    match spec {
        SpaceSpec::Nikonorov(s) => nikonorov_report(s),
        SpaceSpec::LedgerObata(s) => ledger_obata_report(s),
        SpaceSpec::Diagonal(s) => diagonal_pair_verdict(s),
    }
}
