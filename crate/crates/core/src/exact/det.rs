//! Exact determinants by fraction-free (Bareiss) elimination.
//!
//! Each rational row is scaled by the lcm of its denominators so elimination
//! runs over integers; every intermediate value is then a minor of the scaled
//! matrix and each division is exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::SymMatrix;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Determinant of an integer matrix. The input is consumed as scratch space.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        for row in tail.iter_mut() {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let v = &row[j] * pivot - &lead * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

/// Exact determinant of a square rational matrix.
pub fn determinant(rows: &[Vec<Rational>]) -> Result<Rational> {
    let n = rows.len();
    if let Some(r) = rows.iter().find(|r| r.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: r.len(),
        });
    }
    let mut scale = BigInt::one();
    let ints = rows
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            scale *= &l;
            row.iter()
                .map(|v| v.numer() * (&l / v.denom()))
                .collect::<Vec<_>>()
        })
        .collect();
    Ok(Rational::new(bareiss_det(ints), scale))
}

/// `det(M - lambda I)`.
pub fn charpoly_eval(m: &SymMatrix, lambda: &Rational) -> Rational {
    determinant(&m.shifted(lambda).rows()).expect("square by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn naive_det(rows: &[Vec<Rational>]) -> Rational {
        // cofactor expansion along the first row
        let n = rows.len();
        if n == 0 {
            return int(1);
        }
        let mut acc = int(0);
        for c in 0..n {
            let minor: Vec<Vec<Rational>> = rows[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != c)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let term = &rows[0][c] * naive_det(&minor);
            if c % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn matches_cofactor_expansion() {
        let rows = vec![
            vec![rat(1, 2), rat(2, 3), int(0), int(5)],
            vec![int(0), int(0), rat(7, 5), int(1)],
            vec![int(3), rat(-1, 4), int(2), int(0)],
            vec![rat(1, 9), int(1), int(1), int(-2)],
        ];
        assert_eq!(determinant(&rows).unwrap(), naive_det(&rows));
    }

    #[test]
    fn pivoting_and_singular() {
        // zero leading pivot forces a row swap
        let rows = vec![vec![int(0), int(1)], vec![int(1), int(0)]];
        assert_eq!(determinant(&rows).unwrap(), int(-1));
        let sing = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(determinant(&sing).unwrap(), int(0));
        assert_eq!(determinant(&[]).unwrap(), int(1));
    }

    #[test]
    fn charpoly_of_identity_vanishes_at_one() {
        let id = SymMatrix::identity(4);
        assert_eq!(charpoly_eval(&id, &int(1)), int(0));
        assert_eq!(charpoly_eval(&id, &int(0)), int(1));
        assert_eq!(charpoly_eval(&id, &int(2)), int(1));
    }

    #[test]
    fn charpoly_two_by_two() {
        let m = SymMatrix::from_rows(vec![
            vec![rat(1, 6), rat(-1, 6)],
            vec![rat(-1, 6), rat(1, 6)],
        ])
        .unwrap();
        // eigenvalues 0 and 1/3: det(M - x) = x^2 - x/3
        assert_eq!(charpoly_eval(&m, &int(0)), int(0));
        assert_eq!(charpoly_eval(&m, &rat(1, 3)), int(0));
        assert_eq!(charpoly_eval(&m, &int(1)), rat(2, 3));
    }
}
