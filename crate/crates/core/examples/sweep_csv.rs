//! Plot-ready CSV for a Ledger-Obata sweep and the Sp(n) series.

use gstab::report::{parse_range, sweep, to_csv, Sweep};

fn main() -> gstab::Result<()> {
    let lo = Sweep::LedgerObata {
        m: parse_range("2..20")?,
        dim_f: 3,
    };
    print!("{}", to_csv(&sweep(&lo)?)?);

    let sp = Sweep::SpSeries {
        n: parse_range("2..10")?,
    };
    print!("{}", to_csv(&sweep(&sp)?)?);
    Ok(())
}
