//! Building the operator from a table of structural constants.
//!
//! Here the table is `SU(2)^3 / diag SU(2)` filled in by hand; the generic
//! builder recovers the closed-form Ledger-Obata matrix, and the Ricci
//! components of the standard metric all equal `rho`.

use gstab::prelude::*;
use gstab::structural::Coverage;

fn main() -> gstab::Result<()> {
    let mut t = StructuralConstants::new(DimVector::uniform(2, 3)?, Coverage::Full);
    t.insert(1, 1, 2, rat(1, 2))?;
    t.insert(2, 2, 2, rat(1, 2))?;

    let generic = lich_standard_generic(&t)?;
    let closed = lich_ledger_obata(&LedgerObataSpec { m: 2, dim_f: 3 })?;
    println!("generic == closed form: {}", generic == closed);
    println!("annihilates (sqrt d_k): {}", generic.annihilates_identity());

    let x = vec![int(1); t.parts()];
    let ricci = ricci_diagonal(&t, &x)?;
    let ricci: Vec<String> = ricci.iter().map(|r| r.to_string()).collect();
    println!("ricci at the standard metric: ({})", ricci.join(", "));
    println!(
        "rho: {}",
        rho_ledger_obata(&LedgerObataSpec { m: 2, dim_f: 3 })?
    );

    // reading a constant that was never recorded fails loudly
    let partial = nikonorov_constants(&NikonorovSpec {
        m: 5,
        n: 1,
        dim_h: 3,
        c: vec![rat(1, 2)],
        dim_q: vec![4],
    })?;
    match partial.get(5, 5, 5) {
        Ok(v) => println!("[555] = {v}"),
        Err(e) => println!("{e}"),
    }
    Ok(())
}
