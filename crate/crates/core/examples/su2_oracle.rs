//! Structural constants of `SU(2)^{m+1}/diag SU(2)` computed by brute force
//! from the bracket on an explicit basis, then compared with the closed form.

use gstab::prelude::*;
use gstab::structural::oracle_mismatches;

fn main() -> gstab::Result<()> {
    for m in 2..=4 {
        let brute = brute_force_lo_constants(m)?;
        let closed = ledger_obata_constants(&LedgerObataSpec { m, dim_f: 3 })?;
        let mismatches = oracle_mismatches(&brute, &closed);
        println!("m = {m}: {} mismatches", mismatches.len());
        for i in 1..=m {
            for j in i..=m {
                for k in j..=m {
                    let v = brute.get(i, j, k)?;
                    if !v.is_integer() || v != int(0) {
                        println!(
                            "  [{i}{j}{k}] = {v:<6} closed form {}",
                            closed.get(i, j, k)?
                        );
                    }
                }
            }
        }
    }
    Ok(())
}
