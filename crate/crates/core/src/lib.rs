//! Exact G-stability analysis of Einstein metrics on three families of
//! compact homogeneous spaces: Nikonorov spaces, Ledger-Obata spaces
//! `F^{m+1}/diag F`, and diagonal pairs `(H x K)/diag K`.
//!
//! All arithmetic is over arbitrary-precision rationals. Floating point only
//! appears in the Jacobi eigensolver, which serves as an independent oracle.
//!
//! ```
//! use gstab::prelude::*;
//!
//! let spec = LedgerObataSpec { m: 11, dim_f: 3 };
//! let report = ledger_obata_report(&spec).unwrap();
//! assert_eq!(report.verdict, Verdict::UnstableCertified);
//! assert_eq!(report.coindex_lower_bound, Some(9));
//! ```

#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod exact;
pub mod lichnerowicz;
pub mod report;
pub mod spaces;
pub mod stability;
pub mod structural;
pub mod verify;

pub use error::{Error, Result};

/// The items most programs need.
pub mod prelude {
    pub use crate::error::{Error, Result};
    pub use crate::exact::{
        characteristic_polynomial, charpoly_eval, eigen_numeric, format_rational, int,
        parse_rational, rat, restrict_traceless, DimVector, Polynomial, Rational, Surd, SymMatrix,
        WeightedForm,
    };
    pub use crate::lichnerowicz::{
        lich_diagonal_pair_g0, lich_ledger_obata, lich_nikonorov_block, lich_standard_block,
        lich_standard_generic, ricci_component, ricci_diagonal, LichMatrix, MetricTag,
    };
    pub use crate::spaces::{
        delta_j, rho_diagonal_pair, rho_ledger_obata, rho_nikonorov, DiagonalPairSpec,
        LedgerObataSpec, NikonorovSpec, SpaceSpec,
    };
    pub use crate::stability::{
        analyze, classify, diagonal_pair_verdict, ledger_obata_coindex_lower_bound,
        ledger_obata_report, ledger_obata_spectrum, nikonorov_report, nikonorov_witness,
        second_variation, second_variation_i_basis, StabilityReport, Verdict, Witness,
    };
    pub use crate::structural::{
        brute_force_lo_constants, diagonal_pair_constants, ledger_obata_constants,
        nikonorov_constants, StructuralConstants,
    };
}
