//! Structural constants `[ijk]` of an orthogonal decomposition
//! `p = p_1 + .. + p_r` of the reductive complement: the sum of squared
//! projections `<[X_a^i, X_b^j], X_c^k>^2` over orthonormal bases of the parts.
//!
//! Part labels are 1-based throughout (`p_1 .. p_r`), matching how the
//! constants are usually written. Values are stored once per sorted triple and
//! are invariant under permutation of the labels.

pub mod oracle;

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::matrix::DimVector;
use crate::exact::rational::{from_u64, int, Rational};
use crate::spaces::{delta_j, DiagonalPairSpec, LedgerObataSpec, NikonorovSpec};

pub use oracle::{brute_force_lo_constants, oracle_mismatches};

/// Which triples have a known value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "bound")]
pub enum Coverage {
    Full,
    /// Known iff the triple contains a part label `<= bound`.
    ContainsPartAtMost(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralConstants {
    dims: DimVector,
    entries: BTreeMap<[usize; 3], Rational>,
    coverage: Coverage,
}

fn sorted(i: usize, j: usize, k: usize) -> [usize; 3] {
    let mut t = [i, j, k];
    t.sort_unstable();
    t
}

/// Number of distinct orderings of a triple: 1, 3 or 6.
pub fn ordered_multiplicity(t: [usize; 3]) -> usize {
    let [a, b, c] = sorted(t[0], t[1], t[2]);
    match (a == b, b == c) {
        (true, true) => 1,
        (true, false) | (false, true) => 3,
        (false, false) => 6,
    }
}

impl StructuralConstants {
    pub fn new(dims: DimVector, coverage: Coverage) -> Self {
        StructuralConstants {
            dims,
            entries: BTreeMap::new(),
            coverage,
        }
    }

    pub fn parts(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &DimVector {
        &self.dims
    }

    /// Dimension of part `i` (1-based).
    pub fn dim(&self, i: usize) -> u64 {
        self.dims.get(i - 1)
    }

    pub fn coverage(&self) -> Coverage {
        self.coverage
    }

    pub fn is_complete(&self) -> bool {
        match self.coverage {
            Coverage::Full => true,
            Coverage::ContainsPartAtMost(b) => b >= self.parts(),
        }
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.parts() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.parts(),
            });
        }
        Ok(())
    }

    pub fn is_known(&self, i: usize, j: usize, k: usize) -> bool {
        match self.coverage {
            Coverage::Full => true,
            Coverage::ContainsPartAtMost(b) => i.min(j).min(k) <= b,
        }
    }

    /// Stores `[ijk]`; zero values are not kept. Negative values are rejected.
    pub fn insert(&mut self, i: usize, j: usize, k: usize, v: Rational) -> Result<()> {
        for x in [i, j, k] {
            self.check_index(x)?;
        }
        if v.is_negative() {
            return Err(Error::InvalidArgument(format!(
                "[{i}{j}{k}] = {v} is negative"
            )));
        }
        let key = sorted(i, j, k);
        if v.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, v);
        }
        Ok(())
    }

    /// `[ijk]`, in any order of the labels.
    pub fn get(&self, i: usize, j: usize, k: usize) -> Result<Rational> {
        for x in [i, j, k] {
            self.check_index(x)?;
        }
        if !self.is_known(i, j, k) {
            return Err(Error::UnknownConstant(i, j, k));
        }
        Ok(self
            .entries
            .get(&sorted(i, j, k))
            .cloned()
            .unwrap_or_else(Rational::zero))
    }

    /// Nonzero stored entries, keyed by sorted triple.
    pub fn entries(&self) -> impl Iterator<Item = (&[usize; 3], &Rational)> {
        self.entries.iter()
    }

    /// `sum_{i,j} [ijk]` over ordered pairs, computed from the sorted store by
    /// counting how many ordered pairs `(i, j)` each stored triple yields with
    /// `k` in the last slot.
    pub fn first_trace(&self, k: usize) -> Result<Rational> {
        self.check_index(k)?;
        if let Coverage::ContainsPartAtMost(b) = self.coverage {
            if k > b {
                return Err(Error::UnknownConstant(k, k, k));
            }
        }
        let mut acc = Rational::zero();
        for (t, v) in &self.entries {
            let hits = t.iter().filter(|&&x| x == k).count();
            if hits == 0 {
                continue;
            }
            // remove one copy of k; the other two labels fill (i, j)
            let mut rest = Vec::with_capacity(2);
            let mut removed = false;
            for &x in t {
                if x == k && !removed {
                    removed = true;
                } else {
                    rest.push(x);
                }
            }
            let pairs = if rest[0] == rest[1] { 1 } else { 2 };
            acc += v * int(pairs);
        }
        Ok(acc)
    }

    /// Exact equality on every triple, including zeros and the known mask.
    pub fn same_values(&self, other: &StructuralConstants) -> bool {
        if self.dims != other.dims {
            return false;
        }
        let r = self.parts();
        for i in 1..=r {
            for j in i..=r {
                for k in j..=r {
                    match (self.get(i, j, k), other.get(i, j, k)) {
                        (Ok(a), Ok(b)) if a == b => {}
                        (Err(_), Err(_)) => {}
                        _ => return false,
                    }
                }
            }
        }
        true
    }
}

impl Serialize for StructuralConstants {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Entries<'a>(&'a BTreeMap<[usize; 3], Rational>);
        impl Serialize for Entries<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for ([i, j, k], v) in self.0 {
                    m.serialize_entry(&format!("{i},{j},{k}"), &v.to_string())?;
                }
                m.end()
            }
        }
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("dims", &self.dims)?;
        m.serialize_entry("entries", &Entries(&self.entries))?;
        if let Coverage::ContainsPartAtMost(b) = self.coverage {
            m.serialize_entry("known_if_contains_part_at_most", &b)?;
        }
        m.end()
    }
}

/// `(1-i)^2 d / (i(1+i))`.
fn self_triple(i: usize, d: u64) -> Rational {
    let i = i as i64;
    from_u64(d) * int((1 - i) * (1 - i)) / int(i * (1 + i))
}

/// `d / (k + k^2)`.
fn pair_triple(k: usize, d: u64) -> Rational {
    let k = k as i64;
    from_u64(d) / int(k + k * k)
}

/// Constants for the decomposition of a Nikonorov space into the parts
/// `g_{alpha_1}, .., g_{alpha_{m-1}}` (each of dimension `dim h`) followed by
/// `q_1, .., q_n`.
///
/// Parts `1 ..= m-n-1` live on the `H` factors alone; every triple containing
/// one of them is determined: `[iii]`, `[iik] = dim h/(k+k^2)` for
/// `i < k <= m-n-1`, `[ii(m-n+j)] = dim h/Delta_j`, and zero otherwise.
/// Triples whose parts all reach into the `G_j` factors are unknown.
pub fn nikonorov_constants(s: &NikonorovSpec) -> Result<StructuralConstants> {
    s.ensure_valid()?;
    let d = s.dim_h;
    let hp = s.h_parts();
    let mut dims = vec![d; s.m - 1];
    dims.extend_from_slice(&s.dim_q);
    let mut t = StructuralConstants::new(DimVector::new(dims)?, Coverage::ContainsPartAtMost(hp));
    for i in 1..=hp {
        t.insert(i, i, i, self_triple(i, d))?;
        for k in i + 1..=hp {
            t.insert(i, i, k, pair_triple(k, d))?;
        }
        for j in 0..s.n {
            t.insert(i, i, hp + 1 + j, from_u64(d) / delta_j(s, j)?)?;
        }
    }
    Ok(t)
}

/// Constants of `F^{m+1}/diag F` for the parts `g_{alpha_1}, .., g_{alpha_m}`.
pub fn ledger_obata_constants(s: &LedgerObataSpec) -> Result<StructuralConstants> {
    s.ensure_valid()?;
    let d = s.dim_f;
    let mut t = StructuralConstants::new(DimVector::uniform(s.m, d)?, Coverage::Full);
    for i in 1..=s.m {
        t.insert(i, i, i, self_triple(i, d))?;
        for k in i + 1..=s.m {
            t.insert(i, i, k, pair_triple(k, d))?;
        }
    }
    Ok(t)
}

/// Constants of `(H x K)/diag K` for `p = a + p~`, dims `(d1, d2)`:
/// `[111] = d1 - 2(1-c) d2`, `[112] = c(1-c) d2/(1+c)`,
/// `[222] = (1-c)^2 d2/(1+c)`, `[122] = 0`.
pub fn diagonal_pair_constants(s: &DiagonalPairSpec) -> Result<StructuralConstants> {
    s.ensure_valid()?;
    let one = int(1);
    let c = &s.c;
    let d1 = from_u64(s.d1);
    let d2 = from_u64(s.d2);
    let t111 = &d1 - int(2) * (&one - c) * &d2;
    if t111.is_negative() {
        return Err(Error::Unrealizable(format!(
            "[111] = d1 - 2(1-c)d2 = {t111} is negative"
        )));
    }
    let t112 = c * (&one - c) * &d2 / (&one + c);
    let t222 = (&one - c) * (&one - c) * &d2 / (&one + c);
    let mut t = StructuralConstants::new(DimVector::new(vec![s.d1, s.d2])?, Coverage::Full);
    t.insert(1, 1, 1, t111)?;
    t.insert(1, 1, 2, t112)?;
    t.insert(2, 2, 2, t222)?;
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn lo(m: usize, dim_f: u64) -> StructuralConstants {
        ledger_obata_constants(&LedgerObataSpec { m, dim_f }).unwrap()
    }

    #[test]
    fn permutation_invariant_lookup() {
        let t = lo(3, 3);
        for (i, j, k) in [(1, 1, 2), (1, 2, 1), (2, 1, 1)] {
            assert_eq!(t.get(i, j, k).unwrap(), rat(1, 2));
        }
        assert_eq!(t.get(2, 2, 2).unwrap(), rat(1, 2));
        assert_eq!(t.get(1, 2, 3).unwrap(), int(0));
        assert_eq!(t.get(3, 2, 2).unwrap(), rat(1, 4));
        assert!(matches!(t.get(0, 1, 1), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(t.get(1, 1, 4), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn ledger_obata_examples() {
        assert_eq!(lo(2, 3).get(1, 1, 1).unwrap(), int(0));
        assert_eq!(lo(4, 14).get(2, 2, 2).unwrap(), rat(7, 3));
    }

    #[test]
    fn nikonorov_examples() {
        let s = NikonorovSpec {
            m: 5,
            n: 0,
            dim_h: 3,
            c: vec![],
            dim_q: vec![],
        };
        assert_eq!(
            nikonorov_constants(&s).unwrap().get(1, 1, 2).unwrap(),
            rat(1, 2)
        );

        let s = NikonorovSpec {
            m: 5,
            n: 1,
            dim_h: 3,
            c: vec![rat(1, 2)],
            dim_q: vec![4],
        };
        let t = nikonorov_constants(&s).unwrap();
        assert_eq!(t.parts(), 5);
        assert_eq!(t.dims().as_slice(), &[3, 3, 3, 3, 4]);
        assert_eq!(t.get(1, 1, 4).unwrap(), rat(1, 4));
        assert_eq!(t.get(1, 1, 1).unwrap(), int(0));
        // q_1 with an h-supported part
        assert_eq!(t.get(1, 1, 5).unwrap(), int(0));
        assert_eq!(t.get(2, 5, 5).unwrap(), int(0));
        // both parts reach into G_1
        assert!(matches!(t.get(4, 4, 5), Err(Error::UnknownConstant(..))));
        assert!(matches!(t.get(5, 5, 5), Err(Error::UnknownConstant(..))));
        assert!(t.first_trace(1).is_ok());
        assert!(t.first_trace(4).is_err());
    }

    #[test]
    fn nikonorov_n0_equals_ledger_obata() {
        for m in 2..=12 {
            let s = NikonorovSpec {
                m: m + 1,
                n: 0,
                dim_h: 8,
                c: vec![],
                dim_q: vec![],
            };
            let t = nikonorov_constants(&s).unwrap();
            assert!(t.is_complete());
            assert!(t.same_values(&lo(m, 8)));
        }
    }

    #[test]
    fn diagonal_pair_examples() {
        let sp2 = DiagonalPairSpec {
            d1: 7,
            d2: 3,
            c: rat(2, 3),
            multiplicity_free: true,
        };
        let t = diagonal_pair_constants(&sp2).unwrap();
        assert_eq!(t.get(1, 1, 1).unwrap(), int(5));
        assert_eq!(t.get(1, 1, 2).unwrap(), rat(2, 5));
        assert_eq!(t.get(2, 2, 2).unwrap(), rat(1, 5));
        assert_eq!(t.get(1, 2, 2).unwrap(), int(0));

        let g2 = DiagonalPairSpec {
            d1: 6,
            d2: 8,
            c: rat(3, 4),
            multiplicity_free: true,
        };
        let t = diagonal_pair_constants(&g2).unwrap();
        assert_eq!(t.get(1, 1, 1).unwrap(), int(2));
        assert_eq!(t.get(2, 1, 1).unwrap(), rat(6, 7));
        assert_eq!(t.get(2, 2, 2).unwrap(), rat(2, 7));

        let bad = DiagonalPairSpec {
            d1: 1,
            d2: 8,
            c: rat(1, 2),
            multiplicity_free: true,
        };
        assert!(matches!(
            diagonal_pair_constants(&bad),
            Err(Error::Unrealizable(_))
        ));
    }

    #[test]
    fn multiplicities() {
        assert_eq!(ordered_multiplicity([1, 1, 1]), 1);
        assert_eq!(ordered_multiplicity([2, 1, 1]), 3);
        assert_eq!(ordered_multiplicity([1, 3, 2]), 6);
    }

    #[test]
    fn first_trace_matches_direct_enumeration() {
        for t in [lo(5, 3), lo(3, 14)] {
            for k in 1..=t.parts() {
                let mut direct = int(0);
                for i in 1..=t.parts() {
                    for j in 1..=t.parts() {
                        direct += t.get(i, j, k).unwrap();
                    }
                }
                assert_eq!(t.first_trace(k).unwrap(), direct);
            }
        }
    }

    #[test]
    fn first_trace_gives_einstein_constant() {
        // 1/2 - (1/(4 dim f)) sum_{j,k} [1jk] = (m+3)/(4(m+1))
        for m in 2..=40 {
            let t = lo(m, 3);
            let rho = rat(1, 2) - t.first_trace(1).unwrap() / int(12);
            assert_eq!(rho, rat(m as i64 + 3, 4 * (m as i64 + 1)));
        }
    }

    #[test]
    fn serializes_sorted_keys() {
        let v = serde_json::to_value(lo(2, 3)).unwrap();
        assert_eq!(v["dims"], serde_json::json!([3, 3]));
        assert_eq!(v["entries"]["1,1,2"], "1/2");
        assert_eq!(v["entries"]["2,2,2"], "1/2");
        assert!(v["entries"].get("1,1,1").is_none());
    }
}
