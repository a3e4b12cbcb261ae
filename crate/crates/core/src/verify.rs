//! Named reproduction checks for every closed form in the crate, each
//! compared against an independent route (brute force, generic formula,
//! determinant, eigenvector or Jacobi).

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::exact::matrix::{DimVector, SymMatrix};
use crate::exact::rational::{from_u64, int, rat, to_f64, Rational};
use crate::exact::restrict_traceless;
use crate::lichnerowicz::{
    lich_diagonal_pair_g0, lich_ledger_obata, lich_nikonorov_block, lich_standard_generic,
    ricci_component, ricci_diagonal,
};
use crate::spaces::{
    delta_j, rho_ledger_obata, rho_nikonorov, DiagonalPairSpec, LedgerObataSpec, NikonorovSpec,
};
use crate::stability::{
    diagonal_pair_lambda, diagonal_pair_verdict, ledger_obata_coindex_lower_bound,
    ledger_obata_eigenvalue, ledger_obata_eigenvector, ledger_obata_spectrum, nikonorov_witness,
    second_variation, Verdict,
};
use crate::structural::{
    brute_force_lo_constants, diagonal_pair_constants, ledger_obata_constants, nikonorov_constants,
    StructuralConstants,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn from_outcome(name: &str, outcome: Result<std::result::Result<String, String>>) -> Check {
        let (pass, detail) = match outcome {
            Ok(Ok(d)) => (true, d),
            Ok(Err(d)) => (false, d),
            Err(e) => (false, format!("error: {e}")),
        };
        Check {
            name: name.to_string(),
            pass,
            detail,
        }
    }
}

type Outcome = Result<std::result::Result<String, String>>;

/// Builder of diagonal-pair constants; swapped out to exercise the checks.
pub type DiagonalConstantsFn = fn(&DiagonalPairSpec) -> Result<StructuralConstants>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// `[112] = c(1+c)d2/(1+c)` instead of `c(1-c)d2/(1+c)`.
    SignError112,
}

#[derive(Clone, Copy)]
pub struct VerifyConfig {
    pub diagonal_constants: DiagonalConstantsFn,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            diagonal_constants: diagonal_pair_constants,
        }
    }
}

impl VerifyConfig {
    pub fn with_fault(fault: Fault) -> Self {
        match fault {
            Fault::SignError112 => VerifyConfig {
                diagonal_constants: sign_error_112_constants,
            },
        }
    }
}

fn sign_error_112_constants(s: &DiagonalPairSpec) -> Result<StructuralConstants> {
    let mut t = diagonal_pair_constants(s)?;
    let one = int(1);
    t.insert(
        1,
        1,
        2,
        &s.c * (&one + &s.c) * from_u64(s.d2) / (&one + &s.c),
    )?;
    Ok(t)
}

fn nik(m: usize, n: usize, c: Vec<Rational>) -> NikonorovSpec {
    NikonorovSpec {
        m,
        n,
        dim_h: 3,
        dim_q: vec![4; n],
        c,
    }
}

/// Nikonorov specs with `n + 4 <= m`: `n` in `0..=3`, `m` in `n+4..=20` and
/// constant as well as mixed `c_j` from `{1/4, 1/2, 3/4, 1}`.
pub fn nikonorov_grid() -> Vec<NikonorovSpec> {
    let cs = [rat(1, 4), rat(1, 2), rat(3, 4), int(1)];
    let mut out = Vec::new();
    for n in 0..=3usize {
        let mut choices: Vec<Vec<Rational>> = cs.iter().map(|c| vec![c.clone(); n]).collect();
        if n >= 2 {
            choices.push((0..n).map(|j| cs[j % 4].clone()).collect());
            choices.push((0..n).map(|j| cs[3 - j % 4].clone()).collect());
        }
        if n == 0 {
            choices.truncate(1);
        }
        for m in n + 4..=20 {
            for c in &choices {
                out.push(nik(m, n, c.clone()));
            }
        }
    }
    out
}

fn ledger_obata_spectrum_check(ms: std::ops::RangeInclusive<usize>) -> Outcome {
    for m in ms.clone() {
        let s = LedgerObataSpec { m, dim_f: 3 };
        let l = lich_ledger_obata(&s)?;
        let spectrum = ledger_obata_spectrum(&s)?;
        let poly = l.characteristic_polynomial();
        for a in &spectrum {
            if !poly.vanishes_at(a) {
                return Ok(Err(format!("m={m}: det(M - {a}) != 0")));
            }
        }
        let distinct: std::collections::BTreeSet<&Rational> = spectrum.iter().collect();
        if distinct.len() != poly.degree() {
            return Ok(Err(format!(
                "m={m}: {} distinct roots for degree {}",
                distinct.len(),
                poly.degree()
            )));
        }
        let numeric = l.eigen_numeric(1e-13)?;
        let mut exact: Vec<f64> = spectrum.iter().map(to_f64).collect();
        exact.sort_by(f64::total_cmp);
        if let Some((x, y)) = numeric
            .iter()
            .zip(&exact)
            .find(|(x, y)| (*x - *y).abs() >= 1e-10)
        {
            return Ok(Err(format!("m={m}: Jacobi {x} vs exact {y}")));
        }
    }
    Ok(Ok(format!(
        "m in {}..={}: charpoly vanishes at all m distinct values, Jacobi within 1e-10",
        ms.start(),
        ms.end()
    )))
}

fn coindex_check() -> Outcome {
    for m in 2..=200 {
        let got = ledger_obata_coindex_lower_bound(&LedgerObataSpec { m, dim_f: 3 })?;
        let want = if m <= 10 { m - 1 } else { m - 2 };
        if got != want {
            return Ok(Err(format!("m={m}: coindex bound {got}, expected {want}")));
        }
    }
    let s = LedgerObataSpec { m: 11, dim_f: 3 };
    let a1 = ledger_obata_eigenvalue(11, 1);
    let two_rho = int(2) * rho_ledger_obata(&s)?;
    if a1 != rat(7, 12) || two_rho != rat(7, 12) {
        return Ok(Err(format!("m=11: a_1 = {a1}, 2 rho = {two_rho}")));
    }
    Ok(Ok(
        "m-1 for 2..=10, m-2 for 11..=200; a_1 = 2 rho = 7/12 at m=11".into(),
    ))
}

fn nikonorov_witness_check() -> Outcome {
    let grid = nikonorov_grid();
    for s in &grid {
        let w = nikonorov_witness(s)?;
        let rho = rho_nikonorov(s)?;
        if w.rayleigh != int(1) - int(2) * &rho || w.rayleigh >= int(2) * &rho {
            return Ok(Err(format!(
                "m={} n={} c={:?}: rayleigh {}",
                s.m, s.n, s.c, w.rayleigh
            )));
        }
    }
    Ok(Ok(format!(
        "{} specs: Rayleigh 1 - 2 rho < 2 rho by both routes",
        grid.len()
    )))
}

fn family_consistency_check() -> Outcome {
    for m in 2..=30 {
        let s = nik(m + 1, 0, vec![]);
        let lo = LedgerObataSpec { m, dim_f: 3 };
        if lich_nikonorov_block(&s)? != lich_ledger_obata(&lo)? {
            return Ok(Err(format!(
                "m={m}: Nikonorov block differs from Ledger-Obata matrix"
            )));
        }
        if rho_nikonorov(&s)? != rat(m as i64 + 3, 4 * (m as i64 + 1)) {
            return Ok(Err(format!("m={m}: rho mismatch")));
        }
    }
    Ok(Ok(
        "n=0 Nikonorov at m+1 equals Ledger-Obata at m for 2..=30".into(),
    ))
}

fn oracle_check() -> Outcome {
    for m in 2..=4 {
        let b = brute_force_lo_constants(m)?;
        let c = ledger_obata_constants(&LedgerObataSpec { m, dim_f: 3 })?;
        let bad = crate::structural::oracle_mismatches(&b, &c);
        if let Some((t, x, y)) = bad.first() {
            return Ok(Err(format!("m={m} {t:?}: oracle {x}, closed form {y:?}")));
        }
    }
    Ok(Ok(
        "su(2) triple sums equal the closed form for m = 2, 3, 4".into(),
    ))
}

fn generic_builder_check() -> Outcome {
    for m in 2..=30 {
        for f in [3, 8, 14] {
            let s = LedgerObataSpec { m, dim_f: f };
            if lich_standard_generic(&ledger_obata_constants(&s)?)? != lich_ledger_obata(&s)? {
                return Ok(Err(format!("m={m} dim_f={f}")));
            }
        }
    }
    Ok(Ok(
        "generic operator equals the closed form for 2..=30, dim f in {3, 8, 14}".into(),
    ))
}

fn realizable_pairs() -> Vec<DiagonalPairSpec> {
    let mut v = vec![DiagonalPairSpec {
        d1: 6,
        d2: 8,
        c: rat(3, 4),
        multiplicity_free: true,
    }];
    v.extend((2..=10).map(|n| DiagonalPairSpec::sp_series(n).expect("n >= 2")));
    v
}

fn einstein_check(cfg: &VerifyConfig) -> Outcome {
    for s in realizable_pairs() {
        let t = (cfg.diagonal_constants)(&s)?;
        let x = [int(1), (&s.c + int(1)) / &s.c];
        let r = ricci_diagonal(&t, &x)?;
        if r.iter().any(|v| v != &rat(1, 4)) {
            return Ok(Err(format!(
                "(d1,d2,c) = ({},{},{}): ricci(g0) = ({}, {})",
                s.d1, s.d2, s.c, r[0], r[1]
            )));
        }
    }
    Ok(Ok(
        "ricci(g0) = (1/4, 1/4) for G2/SU(3) and Sp(n), n = 2..=10".into(),
    ))
}

fn diagonal_verdicts_check() -> Outcome {
    for n in 2..=10i64 {
        let s = DiagonalPairSpec::sp_series(n as u64)?;
        let r = diagonal_pair_verdict(&s)?;
        let want = rat(n * (2 * n + 1), (4 * n - 1) * (n + 1));
        if r.lambda_min_bound != want || r.verdict != Verdict::UnstableCertified {
            return Ok(Err(format!(
                "Sp({n}): lambda {} verdict {:?}",
                r.lambda_min_bound, r.verdict
            )));
        }
    }
    let g2 = DiagonalPairSpec {
        d1: 6,
        d2: 8,
        c: rat(3, 4),
        multiplicity_free: true,
    };
    let r = diagonal_pair_verdict(&g2)?;
    if r.lambda_min_bound != rat(7, 12) || r.verdict != Verdict::StableCertified {
        return Ok(Err(format!(
            "G2/SU(3): lambda {} verdict {:?}",
            r.lambda_min_bound, r.verdict
        )));
    }
    Ok(Ok(
        "Sp(n) unstable with n(2n+1)/((4n-1)(n+1)); G2/SU(3) stable with 7/12".into(),
    ))
}

fn kernel_check() -> Outcome {
    let mut count = 0;
    for m in 2..=30 {
        let s = LedgerObataSpec { m, dim_f: 8 };
        for l in [
            lich_ledger_obata(&s)?,
            lich_standard_generic(&ledger_obata_constants(&s)?)?,
        ] {
            count += 1;
            if !l.annihilates_identity() {
                return Ok(Err(format!("Ledger-Obata m={m}")));
            }
        }
    }
    for s in realizable_pairs() {
        let std = lich_standard_generic(&diagonal_pair_constants(&s)?)?;
        if !std.annihilates_identity() {
            return Ok(Err(format!(
                "standard diagonal pair ({},{},{})",
                s.d1, s.d2, s.c
            )));
        }
        let g0 = lich_diagonal_pair_g0(&s)?;
        if !g0.determinant().is_zero() || g0.trace() != diagonal_pair_lambda(&s)? {
            return Ok(Err(format!("g0 diagonal pair ({},{},{})", s.d1, s.d2, s.c)));
        }
        count += 1;
    }
    Ok(Ok(format!(
        "{count} standard-metric operators annihilate the identity; g0 det 0, trace lambda_p"
    )))
}

fn sign_law_check() -> Outcome {
    let mut count = 0;
    for m in 2..=30 {
        let s = LedgerObataSpec { m, dim_f: 3 };
        let l = lich_ledger_obata(&s)?;
        let rho = rho_ledger_obata(&s)?;
        for i in 1..m {
            let v = ledger_obata_eigenvector(m, i);
            let mu = ledger_obata_eigenvalue(m, i);
            let sv = second_variation(&rho, &l, &v)?;
            let norm = l.weighted().norm_sq(&v)?;
            let expected = (int(2) * &rho - &mu) * norm / int(2);
            if sv != expected || sv.is_positive() != (mu < int(2) * &rho) {
                return Ok(Err(format!("m={m} i={i}: {sv} vs {expected}")));
            }
            count += 1;
        }
    }
    Ok(Ok(format!(
        "{count} eigenvectors: value (2 rho - mu)|v|^2/2, positive iff mu < 2 rho"
    )))
}

/// `rho = 1/4 + 1/(2 T)` with `T = (m - n) + sum 1/c_j`, a telescoped form of
/// the `Delta_j` sum.
fn casimir_rho(s: &NikonorovSpec) -> Rational {
    let t =
        s.c.iter()
            .fold(from_u64(s.h_factors() as u64), |acc, c| acc + c.recip());
    rat(1, 4) + (int(2) * t).recip()
}

fn casimir_rho_check() -> Outcome {
    let grid = nikonorov_grid();
    for s in &grid {
        if rho_nikonorov(s)? != casimir_rho(s) {
            return Ok(Err(format!("m={} n={} c={:?}", s.m, s.n, s.c)));
        }
    }
    Ok(Ok(format!(
        "{} specs: rho equals 1/4 + 1/(2(m-n+sum 1/c_j))",
        grid.len()
    )))
}

fn ricci_row_check() -> Outcome {
    let grid = nikonorov_grid();
    for s in &grid {
        let t = nikonorov_constants(s)?;
        let x = vec![int(1); t.parts()];
        let rho = rho_nikonorov(s)?;
        for i in 1..=s.h_parts() {
            let r = ricci_component(&t, &x, i)?;
            if r != rho {
                return Ok(Err(format!(
                    "m={} n={}: r_{i} = {r}, rho = {rho}",
                    s.m, s.n
                )));
            }
        }
    }
    for m in 2..=40 {
        let s = LedgerObataSpec { m, dim_f: 14 };
        let t = ledger_obata_constants(&s)?;
        let r = ricci_diagonal(&t, &vec![int(1); m])?;
        let rho = rho_ledger_obata(&s)?;
        if r.iter().any(|v| v != &rho) {
            return Ok(Err(format!("Ledger-Obata m={m} is not Einstein")));
        }
    }
    Ok(Ok(
        "Ricci rows over the alpha-parts equal rho for every grid spec".into(),
    ))
}

fn restrict_check() -> Outcome {
    let lo2 = SymMatrix::from_rows(vec![
        vec![rat(1, 6), rat(-1, 6)],
        vec![rat(-1, 6), rat(1, 6)],
    ])?;
    let r = restrict_traceless(&lo2, &DimVector::new(vec![3, 3])?)?;
    if r.orthonormal_exact() != Some(SymMatrix::diagonal(&[rat(1, 3)])) {
        return Ok(Err("Ledger-Obata m=2 restriction is not [1/3]".into()));
    }
    for s in realizable_pairs() {
        let r = lich_diagonal_pair_g0(&s)?.restrict_traceless()?;
        let want = diagonal_pair_lambda(&s)?;
        if r.order() != 1 || r.orthonormal_entry(0, 0) != Some(want.clone()) {
            return Ok(Err(format!(
                "({},{},{}): restriction is not [{want}]",
                s.d1, s.d2, s.c
            )));
        }
    }
    Ok(Ok("restrictions give [1/3] and [(d1+d2)(1-c)/d1]".into()))
}

fn min_eigenvalue_check() -> Outcome {
    for m in 2..=200 {
        let s = LedgerObataSpec { m, dim_f: 3 };
        let sp = ledger_obata_spectrum(&s)?;
        let min = sp[1..].iter().min().expect("m >= 2").clone();
        let two_rho = int(2) * rho_ledger_obata(&s)?;
        if min != rat(1, m as i64 + 1) || min >= two_rho {
            return Ok(Err(format!("m={m}: min {min}, 2 rho {two_rho}")));
        }
    }
    Ok(Ok("a_{m-1} = 1/(m+1) < 2 rho for 2..=200".into()))
}

fn positivity_check() -> Outcome {
    for s in nikonorov_grid() {
        for j in 0..s.n {
            if !delta_j(&s, j)?.is_positive() {
                return Ok(Err(format!("m={} n={}: Delta_{j} <= 0", s.m, s.n)));
            }
        }
        if rho_nikonorov(&s)? <= rat(1, 4) {
            return Ok(Err(format!("m={} n={}: rho <= 1/4", s.m, s.n)));
        }
    }
    for m in 2..=200 {
        if rho_ledger_obata(&LedgerObataSpec { m, dim_f: 3 })? <= rat(1, 4) {
            return Ok(Err(format!("Ledger-Obata m={m}: rho <= 1/4")));
        }
    }
    Ok(Ok("Delta_j > 0 and rho > 1/4 across the grids".into()))
}

/// Runs every check; `cfg` can inject a known fault.
pub fn run_checks(cfg: &VerifyConfig) -> Vec<Check> {
    vec![
        Check::from_outcome("ledger-obata-spectrum", ledger_obata_spectrum_check(2..=50)),
        Check::from_outcome("ledger-obata-coindex", coindex_check()),
        Check::from_outcome("ledger-obata-min-eigenvalue", min_eigenvalue_check()),
        Check::from_outcome("nikonorov-witness", nikonorov_witness_check()),
        Check::from_outcome("family-consistency", family_consistency_check()),
        Check::from_outcome("su2-brute-force-oracle", oracle_check()),
        Check::from_outcome("generic-builder", generic_builder_check()),
        Check::from_outcome("diagonal-einstein", einstein_check(cfg)),
        Check::from_outcome("diagonal-verdicts", diagonal_verdicts_check()),
        Check::from_outcome("kernel-identity", kernel_check()),
        Check::from_outcome("second-variation-sign-law", sign_law_check()),
        Check::from_outcome("casimir-rho", casimir_rho_check()),
        Check::from_outcome("ricci-rows", ricci_row_check()),
        Check::from_outcome("restrict-traceless", restrict_check()),
        Check::from_outcome("positivity", positivity_check()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_fault_breaks_only_the_einstein_check() {
        let s = DiagonalPairSpec::sp_series(2).unwrap();
        let t = sign_error_112_constants(&s).unwrap();
        assert_eq!(t.get(1, 1, 2).unwrap(), int(2));
        let good = einstein_check(&VerifyConfig::default()).unwrap();
        assert!(good.is_ok());
        let bad = einstein_check(&VerifyConfig::with_fault(Fault::SignError112)).unwrap();
        assert!(bad.is_err());
    }

    #[test]
    fn grid_is_witness_eligible() {
        let g = nikonorov_grid();
        assert!(g.len() > 100);
        assert!(g
            .iter()
            .all(|s| s.witness_eligible() && s.validate().is_empty()));
    }

    #[test]
    fn casimir_form_examples() {
        assert_eq!(casimir_rho(&nik(5, 1, vec![rat(1, 2)])), rat(1, 3));
        assert_eq!(casimir_rho(&nik(3, 0, vec![])), rat(5, 12));
    }
}
