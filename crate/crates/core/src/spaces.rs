//! Parameter records for the three families of homogeneous spaces and their
//! Einstein constants.
//!
//! * Nikonorov spaces `G/K` with `G = H^{m-n} x G_1 x .. x G_n` and
//!   `K = H x L_1 x .. x L_n`, where `H` sits diagonally and each `G_j`
//!   contains `H x L_j`.
//! * Ledger-Obata spaces `F^{m+1} / diag(F)`.
//! * Diagonal pairs `(H x K) / diag(K)` for a simple subgroup `K` of `H`.

use std::fmt;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::rational::{from_u64, int, rat, serde_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub field: String,
    pub constraint: String,
}

impl Violation {
    fn new(field: &str, constraint: &str) -> Self {
        Violation {
            field: field.to_string(),
            constraint: constraint.to_string(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: requires {}", self.field, self.constraint)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NikonorovSpec {
    /// Number of simple factors of `G`.
    pub m: usize,
    /// Number of factors `G_j` that are not copies of `H`.
    pub n: usize,
    pub dim_h: u64,
    /// Killing-form ratios `c_j` with `B_{pi_j(h)} = c_j B_{g_j}`.
    #[serde(with = "serde_rational::vec")]
    pub c: Vec<Rational>,
    pub dim_q: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerObataSpec {
    /// `G = F^{m+1}`.
    pub m: usize,
    pub dim_f: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagonalPairSpec {
    /// `dim a`, the complement of `k` in `h`.
    pub d1: u64,
    /// `dim k`.
    pub d2: u64,
    /// `B_k = c B_h|_k`.
    #[serde(with = "serde_rational")]
    pub c: Rational,
    /// Whether the two isotropy summands are irreducible and inequivalent.
    #[serde(default)]
    pub multiplicity_free: bool,
}

/// A space description as read from a spec file:
/// `{"family": "nikonorov" | "ledger-obata" | "diagonal", ...}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum SpaceSpec {
    Nikonorov(NikonorovSpec),
    LedgerObata(LedgerObataSpec),
    Diagonal(DiagonalPairSpec),
}

impl SpaceSpec {
    pub fn validate(&self) -> Vec<Violation> {
        match self {
            SpaceSpec::Nikonorov(s) => s.validate(),
            SpaceSpec::LedgerObata(s) => s.validate(),
            SpaceSpec::Diagonal(s) => s.validate(),
        }
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            SpaceSpec::Nikonorov(_) => "nikonorov",
            SpaceSpec::LedgerObata(_) => "ledger-obata",
            SpaceSpec::Diagonal(_) => "diagonal",
        }
    }
}

fn ensure_valid(v: Vec<Violation>) -> Result<()> {
    if v.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidSpec(v))
    }
}

impl NikonorovSpec {
    pub fn validate(&self) -> Vec<Violation> {
        let mut v = Vec::new();
        if self.n >= self.m {
            v.push(Violation::new("n", "n < m"));
        }
        if self.dim_h < 3 {
            v.push(Violation::new("dim_h", "dim_h >= 3"));
        }
        if self.c.len() != self.n {
            v.push(Violation::new("c", "exactly n values"));
        }
        if self.dim_q.len() != self.n {
            v.push(Violation::new("dim_q", "exactly n values"));
        }
        for (j, c) in self.c.iter().enumerate() {
            if !c.is_positive() || c > &Rational::one() {
                v.push(Violation::new(&format!("c[{}]", j + 1), "0 < c_j <= 1"));
            }
        }
        for (j, &d) in self.dim_q.iter().enumerate() {
            if d == 0 {
                v.push(Violation::new(&format!("dim_q[{}]", j + 1), "dim_q_j >= 1"));
            }
        }
        v
    }

    pub fn ensure_valid(&self) -> Result<()> {
        ensure_valid(self.validate())
    }

    /// Number of copies of `H` in `G`, i.e. `m - n`.
    pub fn h_factors(&self) -> usize {
        self.m - self.n
    }

    /// Number of parts supported on the `H` factors only: `m - n - 1`.
    pub fn h_parts(&self) -> usize {
        self.m - self.n - 1
    }

    /// Whether the three-direction instability witness applies (`n + 4 <= m`).
    pub fn witness_eligible(&self) -> bool {
        self.n + 4 <= self.m
    }

    pub fn dim_manifold(&self) -> u64 {
        (self.m as u64 - 1) * self.dim_h + self.dim_q.iter().sum::<u64>()
    }
}

impl LedgerObataSpec {
    pub fn validate(&self) -> Vec<Violation> {
        let mut v = Vec::new();
        if self.m < 2 {
            v.push(Violation::new("m", "m >= 2"));
        }
        if self.dim_f < 3 {
            v.push(Violation::new("dim_f", "dim_f >= 3"));
        }
        v
    }

    pub fn ensure_valid(&self) -> Result<()> {
        ensure_valid(self.validate())
    }
}

impl DiagonalPairSpec {
    pub fn validate(&self) -> Vec<Violation> {
        let mut v = Vec::new();
        if !self.c.is_positive() || self.c >= Rational::one() {
            v.push(Violation::new("c", "0 < c < 1"));
        }
        if self.d1 == 0 {
            v.push(Violation::new("d1", "d1 >= 1"));
        }
        if self.d2 == 0 {
            v.push(Violation::new("d2", "d2 >= 1"));
        }
        v
    }

    pub fn ensure_valid(&self) -> Result<()> {
        ensure_valid(self.validate())
    }

    /// `Sp(n) x Sp(n-1) / diag Sp(n-1)`: `c = n/(n+1)`, `d1 = 4n-1`, `d2 = (n-1)(2n-1)`.
    pub fn sp_series(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!(
                "Sp(n) series needs n >= 2, got {n}"
            )));
        }
        Ok(DiagonalPairSpec {
            d1: 4 * n - 1,
            d2: (n - 1) * (2 * n - 1),
            c: rat(n as i64, n as i64 + 1),
            multiplicity_free: true,
        })
    }
}

/// `Delta_j`, the squared norm of the j-th (0-based) alpha-direction that
/// reaches the `G_j` factors, for the c-weighted Killing inner product.
///
/// With `T_j = (m - n) + 1/c_1 + .. + 1/c_j` this is `T_j + c_{j+1} T_j^2`;
/// when `c_1 = .. = c_j = 1` it reads `m - n + j + c_{j+1} (m - n + j)^2`.
pub fn delta_j(s: &NikonorovSpec, j: usize) -> Result<Rational> {
    s.ensure_valid()?;
    if j >= s.n {
        return Err(Error::IndexOutOfRange {
            index: j,
            max: s.n.saturating_sub(1),
        });
    }
    let t = weighted_length(s, j);
    Ok(&t + &s.c[j] * &t * &t)
}

/// `T_j = (m - n) + sum_{l < j} 1/c_l` (0-based `l`).
fn weighted_length(s: &NikonorovSpec, j: usize) -> Rational {
    s.c[..j]
        .iter()
        .fold(from_u64(s.h_factors() as u64), |acc, c| acc + c.recip())
}

/// Einstein constant of the standard metric (assumed Einstein), read off the
/// first Ricci eigenvalue:
/// `rho = 3/4 - (m-n-1)/(2(m-n)) - 1/2 sum_j 1/Delta_j`.
pub fn rho_nikonorov(s: &NikonorovSpec) -> Result<Rational> {
    s.ensure_valid()?;
    let hm = from_u64(s.h_factors() as u64);
    let mut rho = rat(3, 4) - (&hm - int(1)) / (int(2) * &hm);
    for j in 0..s.n {
        rho -= delta_j(s, j)?.recip() / int(2);
    }
    Ok(rho)
}

/// `rho = (m+3) / (4(m+1))`, independent of `dim f`.
pub fn rho_ledger_obata(s: &LedgerObataSpec) -> Result<Rational> {
    s.ensure_valid()?;
    let m = s.m as i64;
    Ok(rat(m + 3, 4 * (m + 1)))
}

/// The metric `g_0` on a diagonal pair is Einstein with constant 1/4.
pub fn rho_diagonal_pair() -> Rational {
    rat(1, 4)
}
