//! Exact characteristic polynomials by multi-modular Hessenberg reduction.
//!
//! The rational matrix is scaled to an integer matrix `B = L A`. For each
//! prime below `2^31` the characteristic polynomial of `B` is computed over
//! `Z/p` via an upper Hessenberg form, and the integer coefficients are
//! rebuilt by the Chinese remainder theorem. Enough primes are used for their
//! product to exceed twice a Hadamard bound on every coefficient, so the
//! result is exact, not probabilistic.
//!
//! Once built, the polynomial is evaluated with a Horner pass, which makes it
//! the cheap route when many candidate eigenvalues of one matrix are checked.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// A polynomial with exact coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
    // coeffs[k] == numerators[k] / denom
    numerators: Vec<BigInt>,
    denom: BigInt,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        let denom = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let numerators = coeffs
            .iter()
            .map(|c| c.numer() * (&denom / c.denom()))
            .collect();
        Polynomial {
            coeffs,
            numerators,
            denom,
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        // sum_k a_k u^k v^(n-k) over the common denominator d v^n
        let (u, v) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut vpow = BigInt::one();
        for a in self.numerators.iter().rev() {
            acc = acc * u + a * &vpow;
            vpow *= v;
        }
        vpow /= v;
        Rational::new(acc, vpow * &self.denom)
    }

    /// Whether `x` is a root, without normalising the value.
    pub fn vanishes_at(&self, x: &Rational) -> bool {
        let (u, v) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut vpow = BigInt::one();
        for a in self.numerators.iter().rev() {
            acc = acc * u + a * &vpow;
            vpow *= v;
        }
        acc.is_zero()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})x"),
                _ => format!("({c})x^{k}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for `n < 2^32`.
fn is_prime_u32(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 7, 61] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = x * x % n;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The largest primes below `2^31`, in decreasing order, extended on demand.
fn primes(count: usize) -> Vec<u64> {
    static CACHE: OnceLock<std::sync::Mutex<Vec<u64>>> = OnceLock::new();
    let mut cache = CACHE
        .get_or_init(|| std::sync::Mutex::new(Vec::new()))
        .lock()
        .expect("prime cache");
    let mut next = cache.last().map_or(1u64 << 31, |&p| p) - 1;
    while cache.len() < count {
        if is_prime_u32(next) {
            cache.push(next);
        }
        next -= 1;
    }
    cache[..count].to_vec()
}

fn residue(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits")
}

/// `det(x I - H)` over `Z/p`, lowest degree first, for `b` already reduced.
fn charpoly_mod(mut a: Vec<Vec<u64>>, p: u64) -> Vec<u64> {
    let n = a.len();
    debug_assert!(p < 1 << 31);
    let inv = |x: u64| pow_mod(x, p - 2, p);
    let pp = p * p;
    for k in 0..n.saturating_sub(2) {
        let Some(piv) = (k + 1..n).find(|&i| a[i][k] != 0) else {
            continue;
        };
        if piv != k + 1 {
            a.swap(piv, k + 1);
            for row in a.iter_mut() {
                row.swap(piv, k + 1);
            }
        }
        let pinv = inv(a[k + 1][k]);
        for i in k + 2..n {
            if a[i][k] == 0 {
                continue;
            }
            let f = a[i][k] * pinv % p;
            let (upper, lower) = a.split_at_mut(i);
            let src = &upper[k + 1];
            for (x, &y) in lower[0][k..].iter_mut().zip(&src[k..]) {
                *x = (*x + pp - f * y) % p;
            }
            for row in a.iter_mut() {
                row[k + 1] = (row[k + 1] + f * row[i]) % p;
            }
        }
    }

    // polys[k] = det(x I - H_k) for the leading k x k block
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 0..n {
        let prev = &polys[m];
        let mut next = vec![0u64; m + 2];
        let hmm = a[m][m];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % p;
            next[d] = (next[d] + pp - hmm * c) % p;
        }
        let mut t = 1u64;
        for i in 1..=m {
            t = t * a[m - i + 1][m - i] % p;
            if t == 0 {
                break;
            }
            let f = t * a[m - i][m] % p;
            if f == 0 {
                continue;
            }
            for (d, &c) in polys[m - i].iter().enumerate() {
                next[d] = (next[d] + pp - f * c) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().expect("n + 1 entries")
}

/// `log2` of a bound on every coefficient of `det(x I - B)`: the coefficient
/// of `x^{n-k}` is a sum of `C(n, k)` principal minors, each bounded by the
/// product of its `k` largest row norms.
fn coefficient_bound_bits(b: &[Vec<BigInt>]) -> f64 {
    let n = b.len();
    let mut norms: Vec<f64> = b
        .iter()
        .map(|row| {
            // log2 of the Euclidean norm, via the largest entry
            let max_bits = row.iter().map(|x| x.bits()).max().unwrap_or(0) as f64;
            max_bits + 0.5 * (n as f64).log2()
        })
        .collect();
    norms.sort_by(|x, y| y.total_cmp(x));
    let mut best = 0.0f64;
    let mut log_binom = 0.0f64;
    let mut rows = 0.0f64;
    for k in 1..=n {
        log_binom += ((n - k + 1) as f64).log2() - (k as f64).log2();
        rows += norms[k - 1].max(0.0);
        best = best.max(log_binom + rows);
    }
    best
}

/// Coefficients of `det(x I - B)` for an integer matrix `B`, lowest degree first.
fn integer_charpoly(b: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = b.len();
    let needed = coefficient_bound_bits(b) + 2.0;
    let mut count = 0usize;
    let mut bits = 0.0f64;
    // p > 2^30.99 for every prime used
    while bits <= needed {
        count += 1;
        bits += 30.99;
    }
    let ps = primes(count.max(1));

    let mut value = vec![BigInt::zero(); n + 1];
    let mut modulus = BigInt::one();
    for &p in &ps {
        let reduced: Vec<Vec<u64>> = b
            .iter()
            .map(|row| row.iter().map(|x| residue(x, p)).collect())
            .collect();
        let r = charpoly_mod(reduced, p);
        let m_inv = pow_mod(residue(&modulus, p), p - 2, p);
        for (c, &rk) in value.iter_mut().zip(&r) {
            // Garner step: c + modulus * ((rk - c) / modulus mod p)
            let t = (rk + p - residue(c, p)) % p * m_inv % p;
            *c += &modulus * BigInt::from(t);
        }
        modulus *= BigInt::from(p);
    }
    let half = &modulus >> 1;
    for c in value.iter_mut() {
        if *c > half {
            *c -= &modulus;
        }
    }
    value
}

/// `det(A - x I)` for a square rational matrix `A`.
pub fn characteristic_polynomial(rows: &[Vec<Rational>]) -> Result<Polynomial> {
    let n = rows.len();
    if let Some(r) = rows.iter().find(|r| r.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: r.len(),
        });
    }
    let l = rows
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let b: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|v| v.numer() * (&l / v.denom())).collect())
        .collect();
    let c = integer_charpoly(&b);

    // det(A - xI) = (-1)^n L^{-n} det(L x I - B) = (-1)^n sum_k c_k x^k / L^{n-k}
    let mut scale = BigInt::one();
    let mut coeffs = vec![Rational::zero(); n + 1];
    for k in (0..=n).rev() {
        let mut v = Rational::new(c[k].clone(), scale.clone());
        if n % 2 == 1 {
            v = -v;
        }
        coeffs[k] = v;
        scale *= &l;
    }
    debug_assert!(coeffs[n].abs() == Rational::one());
    debug_assert!(c[n].sign() == Sign::Plus);
    Ok(Polynomial::new(coeffs))
}
