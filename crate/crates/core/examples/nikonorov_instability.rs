//! Nikonorov spaces `H^{m-n} x G_1 x .. x G_n / (H x L_1 x .. x L_n)`.
//!
//! Whenever `n + 4 <= m` the traceless direction `(1, 1, -2, 0, ..)/sqrt 6`
//! over the `H`-only blocks has Rayleigh quotient `1 - 2 rho`, which lies
//! below `2 rho`. Smaller `m` falls outside that argument and the report
//! stays inconclusive.

use gstab::prelude::*;

fn spec(m: usize, n: usize, c: &[Rational]) -> NikonorovSpec {
    NikonorovSpec {
        m,
        n,
        dim_h: 3,
        c: c.to_vec(),
        dim_q: vec![4; n],
    }
}

fn main() -> gstab::Result<()> {
    let half = rat(1, 2);
    let cases = [
        spec(4, 0, &[]),
        spec(6, 1, std::slice::from_ref(&half)),
        spec(7, 2, &[rat(1, 4), rat(3, 4)]),
        spec(10, 3, &[int(1), half.clone(), rat(1, 4)]),
        spec(4, 1, &[half]),
    ];

    println!(
        "{:>3} {:>3}  {:>12}  {:>12}  {:>12}  verdict",
        "m", "n", "rho", "1 - 2 rho", "2 rho"
    );
    for s in &cases {
        let rho = rho_nikonorov(s)?;
        let report = nikonorov_report(s)?;
        let rayleigh = report
            .witness
            .as_ref()
            .map_or("-".to_string(), |w| w.rayleigh.to_string());
        println!(
            "{:>3} {:>3}  {:>12}  {:>12}  {:>12}  {}",
            s.m,
            s.n,
            rho.to_string(),
            rayleigh,
            report.two_rho.to_string(),
            report.verdict.as_str()
        );
    }

    // the witness evaluated directly against the block matrix
    let s = &cases[2];
    let block = lich_nikonorov_block(s)?;
    let mut b = vec![int(0); block.order()];
    b[0] = int(1);
    b[1] = int(1);
    b[2] = int(-2);
    let q = block.weighted().rayleigh(&b)?;
    println!(
        "\nm={} n={}: Rayleigh quotient on the {}x{} block = {q}",
        s.m,
        s.n,
        block.order(),
        block.order()
    );
    println!("delta_1 = {}", delta_j(s, 0)?);

    let err = nikonorov_witness(&cases[4]).unwrap_err();
    println!("m=4 n=1: {err}");
    Ok(())
}
