//! Exact scalars.
//!
//! [`Rational`] is an always-reduced arbitrary-precision fraction. On the wire
//! it is the string `"p/q"`, with `q` omitted when it is 1. [`Surd`] carries a
//! rational multiple of a square root, which is what the I-basis entries of a
//! Lichnerowicz matrix look like when the summand dimensions differ.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `num / den` as an exact rational. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn from_u64(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`. Decimal input is rejected so that parameters stay exact.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let err = |reason: &str| Error::Parse {
        input: s.to_string(),
        reason: reason.to_string(),
    };
    if t.contains('.') || t.contains('e') || t.contains('E') {
        return Err(err("decimal notation is not accepted; use p/q"));
    }
    let (p, q) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| err("numerator is not an integer"))?;
    let q: BigInt = q
        .parse()
        .map_err(|_| err("denominator is not an integer"))?;
    if q.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(p, q))
}

pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Exact square root of a non-negative rational, if it is a perfect square.
pub fn sqrt_exact(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Splits `n` into `(s, f)` with `n = s^2 * f` and `f` squarefree.
pub fn squarefree_split(n: u64) -> (u64, u64) {
    let mut s = 1u64;
    let mut f = 1u64;
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        let mut e = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            f *= p;
        }
        p += 1;
    }
    (s, f * rest)
}

/// `coeff * sqrt(radicand)` with `radicand` squarefree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Surd {
    coeff: Rational,
    radicand: u64,
}

impl Surd {
    pub fn new(coeff: Rational, radicand: u64) -> Self {
        if coeff.is_zero() || radicand == 0 {
            return Surd {
                coeff: Rational::zero(),
                radicand: 1,
            };
        }
        let (s, f) = squarefree_split(radicand);
        Surd {
            coeff: coeff * from_u64(s),
            radicand: f,
        }
    }

    pub fn rational(r: Rational) -> Self {
        Surd::new(r, 1)
    }

    /// `1 / sqrt(n)`.
    pub fn inv_sqrt(n: u64) -> Self {
        Surd::new(Rational::new(BigInt::one(), BigInt::from(n)), n)
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        (self.radicand == 1).then_some(&self.coeff)
    }

    pub fn scale(&self, r: &Rational) -> Surd {
        Surd::new(&self.coeff * r, self.radicand)
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.coeff) * (self.radicand as f64).sqrt()
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand == 1 {
            write!(f, "{}", self.coeff)
        } else {
            write!(f, "{}*sqrt({})", self.coeff, self.radicand)
        }
    }
}

impl FromStr for Surd {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once("*sqrt(") {
            None => Ok(Surd::rational(parse_rational(s)?)),
            Some((c, rest)) => {
                let r = rest.strip_suffix(')').ok_or_else(|| Error::Parse {
                    input: s.to_string(),
                    reason: "missing ')'".into(),
                })?;
                let radicand: u64 = r.trim().parse().map_err(|_| Error::Parse {
                    input: s.to_string(),
                    reason: "radicand is not a non-negative integer".into(),
                })?;
                Ok(Surd::new(parse_rational(c)?, radicand))
            }
        }
    }
}

/// serde adapters that encode rationals as `"p/q"` strings.
pub mod serde_rational {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }

    pub mod vec {
        use serde::ser::SerializeSeq;
        use serde::{Deserialize, Deserializer, Serializer};

        use super::super::{parse_rational, Rational};

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for r in v {
                seq.serialize_element(&r.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            Vec::<String>::deserialize(d)?
                .iter()
                .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
                .collect()
        }
    }

    pub mod option {
        use serde::{Deserialize, Deserializer, Serializer};

        use super::super::{parse_rational, Rational};

        pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match r {
                Some(r) => s.serialize_some(&r.to_string()),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
            Option::<String>::deserialize(d)?
                .map(|s| parse_rational(&s).map_err(serde::de::Error::custom))
                .transpose()
        }
    }

    pub mod option_vec {
        use serde::{Deserialize, Deserializer, Serializer};

        use super::super::{parse_rational, Rational};

        pub fn serialize<S: Serializer>(
            v: &Option<Vec<Rational>>,
            s: S,
        ) -> Result<S::Ok, S::Error> {
            match v {
                Some(v) => s.collect_seq(v.iter().map(|r| r.to_string())),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> Result<Option<Vec<Rational>>, D::Error> {
            Option::<Vec<String>>::deserialize(d)?
                .map(|v| {
                    v.iter()
                        .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
                        .collect()
                })
                .transpose()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational(" -6/8 ").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("0.75").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn format_omits_unit_denominator() {
        assert_eq!(format_rational(&rat(10, 5)), "2");
        assert_eq!(format_rational(&rat(-2, 6)), "-1/3");
    }

    #[test]
    fn sqrt_exact_detects_squares() {
        assert_eq!(sqrt_exact(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(sqrt_exact(&rat(2, 1)), None);
        assert_eq!(sqrt_exact(&rat(-1, 1)), None);
    }

    #[test]
    fn surd_normalizes_square_factors() {
        let s = Surd::new(rat(1, 3), 12);
        assert_eq!(s.coeff(), &rat(2, 3));
        assert_eq!(s.radicand(), 3);
        assert_eq!(Surd::new(int(5), 49).as_rational(), Some(&int(35)));
        let w = Surd::inv_sqrt(6);
        assert_eq!(w.to_string(), "1/6*sqrt(6)");
        assert_eq!(w.to_string().parse::<Surd>().unwrap(), w);
        assert!((w.to_f64() - 1.0 / 6f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn squarefree_split_small() {
        assert_eq!(squarefree_split(1), (1, 1));
        assert_eq!(squarefree_split(72), (6, 2));
        assert_eq!(squarefree_split(21), (1, 21));
        assert_eq!(squarefree_split(49), (7, 1));
    }
}
