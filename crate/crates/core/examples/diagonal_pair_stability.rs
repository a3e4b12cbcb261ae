//! Diagonal spaces `(H x K)/diag K` at the Einstein metric `g_0 = (1, (c+1)/c)`.
//!
//! The operator on the two isotropy blocks has eigenvalues `0` and
//! `lambda_p = (1-c)(d1+d2)/d1`, compared against `2 rho = 1/2`.

use gstab::prelude::*;

fn show(name: &str, s: &DiagonalPairSpec) -> gstab::Result<()> {
    let t = diagonal_pair_constants(s)?;
    let x = [int(1), (&s.c + int(1)) / &s.c];
    let ricci = ricci_diagonal(&t, &x)?;
    let report = diagonal_pair_verdict(s)?;
    println!(
        "{name:<22} d1={:<3} d2={:<4} c={:<5} ricci=({}, {})  lambda_p={:<7} {}",
        s.d1,
        s.d2,
        s.c.to_string(),
        ricci[0],
        ricci[1],
        report.lambda_min_bound.to_string(),
        report.verdict.as_str()
    );
    Ok(())
}

fn main() -> gstab::Result<()> {
    let g2 = DiagonalPairSpec {
        d1: 6,
        d2: 8,
        c: rat(3, 4),
        multiplicity_free: true,
    };
    show("G2 x SU(3) / SU(3)", &g2)?;
    for n in 2..=6 {
        show(
            &format!("Sp({n}) x Sp({}) / Sp({})", n - 1, n - 1),
            &DiagonalPairSpec::sp_series(n)?,
        )?;
    }

    let lich = lich_diagonal_pair_g0(&g2)?;
    println!(
        "\nG2 operator at g0: trace {}, det {}",
        lich.trace(),
        lich.determinant()
    );
    for i in 0..2 {
        let row: Vec<String> = (0..2).map(|j| lich.entry(i, j).to_string()).collect();
        println!("  [{}]", row.join(", "));
    }

    // without multiplicity-freeness a spectrum above 2 rho proves nothing
    let unsure = DiagonalPairSpec {
        multiplicity_free: false,
        ..g2
    };
    println!(
        "same parameters, not multiplicity-free: {}",
        diagonal_pair_verdict(&unsure)?.verdict.as_str()
    );
    Ok(())
}
