//! Spectrum, verdict and coindex bound for a Ledger-Obata space `F^{m+1}/diag F`.
//!
//! ```text
//! cargo run --example ledger_obata_spectrum -- 11
//! ```

use gstab::prelude::*;
use gstab::stability::ledger_obata_eigenvector;

fn main() -> gstab::Result<()> {
    let m: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("m must be an integer"))
        .unwrap_or(11);
    let spec = LedgerObataSpec { m, dim_f: 3 };

    let lich = lich_ledger_obata(&spec)?;
    let rho = rho_ledger_obata(&spec)?;
    let two_rho = int(2) * &rho;
    println!(
        "F^{}/diag F, {} summands, rho = {rho}, 2 rho = {two_rho}",
        m + 1,
        lich.order()
    );

    let poly = lich.characteristic_polynomial();
    let numeric = lich.eigen_numeric(1e-13)?;
    let mut spectrum = ledger_obata_spectrum(&spec)?;
    spectrum.sort();
    println!(
        "\n{:>4}  {:>10}  {:>20}  {:>8}  vs 2 rho",
        "i", "a_i", "jacobi", "root"
    );
    for (a, x) in spectrum.iter().zip(&numeric) {
        let i = (0..m)
            .find(|&i| &ledger_obata_eigenvalue_of(m, i) == a)
            .unwrap();
        let side = match a.cmp(&two_rho) {
            std::cmp::Ordering::Less => "below",
            std::cmp::Ordering::Equal => "equal",
            std::cmp::Ordering::Greater => "above",
        };
        println!(
            "{i:>4}  {:>10}  {x:>20.16}  {:>8}  {side}",
            a.to_string(),
            poly.vanishes_at(a)
        );
    }

    // the eigenvector (1, .., 1, -i, 0, ..) of a_i
    let v = ledger_obata_eigenvector(m, m - 1);
    let q = second_variation_i_basis(&rho, &lich, &v)?;
    println!("\nsecond variation along the a_{} eigenvector: {q}", m - 1);

    let report = ledger_obata_report(&spec)?;
    println!(
        "verdict {}, coindex >= {}",
        report.verdict.as_str(),
        report.coindex_lower_bound.unwrap_or(0)
    );
    Ok(())
}

fn ledger_obata_eigenvalue_of(m: usize, i: usize) -> Rational {
    if i == 0 {
        int(0)
    } else {
        gstab::stability::ledger_obata_eigenvalue(m, i)
    }
}
