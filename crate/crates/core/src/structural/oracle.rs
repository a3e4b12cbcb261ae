//! Brute-force structural constants of `SU(2)^{m+1} / diag SU(2)`.
//!
//! The Lie algebra `f = su(2)` is modelled with the integer bracket
//! `[X_a, X_b] = eps_{abc} X_c`. Its Killing form is then `-2 delta_{ab}`, so the
//! rescaled bracket `(1/sqrt 2) eps_{abc}` makes `{X_a}` orthonormal for `-B_f`.
//! Every inner product `<[u, v], w>` of integer vectors is therefore an integer
//! multiple of `1/sqrt 2`, and its square is rational.
//!
//! The complement of the diagonal in `f^{m+1}` is spanned by
//! `alpha_i(X_l) = (alpha_i[0] X_l, .., alpha_i[m] X_l)` with
//! `alpha_i = (1, .., 1, -i, 0, .., 0)`, and `{alpha_i(X_l) / |alpha_i|}` is
//! orthonormal for `-B_g`.

use num_traits::Zero;

use super::{Coverage, StructuralConstants};
use crate::error::{Error, Result};
use crate::exact::matrix::DimVector;
use crate::exact::rational::{int, Rational};

const DIM_F: usize = 3;

/// `eps_{abc}` for `a, b, c` in `0..3`.
fn levi_civita(a: usize, b: usize, c: usize) -> i64 {
    if a == b || b == c || a == c {
        0
    } else if (a, b, c) == (0, 1, 2) || (a, b, c) == (1, 2, 0) || (a, b, c) == (2, 0, 1) {
        1
    } else {
        -1
    }
}

/// An element of `f^{m+1}` as integer coordinates `[factor][basis]`.
type Element = Vec<[i64; DIM_F]>;

fn bracket(u: &Element, v: &Element) -> Element {
    u.iter()
        .zip(v)
        .map(|(x, y)| {
            let mut z = [0i64; DIM_F];
            for (c, zc) in z.iter_mut().enumerate() {
                for a in 0..DIM_F {
                    for b in 0..DIM_F {
                        *zc += levi_civita(a, b, c) * x[a] * y[b];
                    }
                }
            }
            z
        })
        .collect()
}

/// `-B` for the integer bracket, i.e. twice the Euclidean dot product.
fn dot(u: &Element, v: &Element) -> i64 {
    u.iter()
        .zip(v)
        .map(|(x, y)| x.iter().zip(y).map(|(a, b)| a * b).sum::<i64>())
        .sum()
}

/// Killing form of the integer-bracket `su(2)` on the basis, `tr(ad X_a ad X_b)`.
fn killing_su2() -> [[i64; DIM_F]; DIM_F] {
    let mut k = [[0i64; DIM_F]; DIM_F];
    for (a, row) in k.iter_mut().enumerate() {
        for (b, kab) in row.iter_mut().enumerate() {
            // (ad X_a ad X_b)_{cc} = sum_d eps_{a d c} eps_{b c d}
            for c in 0..DIM_F {
                for d in 0..DIM_F {
                    *kab += levi_civita(a, d, c) * levi_civita(b, c, d);
                }
            }
        }
    }
    k
}

fn alpha(i: usize, m: usize) -> Vec<i64> {
    let mut a = vec![0i64; m + 1];
    for x in a.iter_mut().take(i) {
        *x = 1;
    }
    a[i] = -(i as i64);
    a
}

fn embed(alpha: &[i64], l: usize) -> Element {
    alpha
        .iter()
        .map(|&s| {
            let mut x = [0i64; DIM_F];
            x[l] = s;
            x
        })
        .collect()
}

/// Structural constants of `SU(2)^{m+1} / diag SU(2)` for the parts
/// `g_{alpha_1}, .., g_{alpha_m}`, by summing `<[X, Y], Z>^2` over the explicit
/// orthonormal bases. Only `2 <= m <= 4` is supported.
pub fn brute_force_lo_constants(m: usize) -> Result<StructuralConstants> {
    if !(2..=4).contains(&m) {
        return Err(Error::InvalidArgument(format!(
            "brute-force oracle supports 2 <= m <= 4, got {m}"
        )));
    }
    let kf = killing_su2();
    for (a, row) in kf.iter().enumerate() {
        for (b, &v) in row.iter().enumerate() {
            let expected = if a == b { -2 } else { 0 };
            if v != expected {
                return Err(Error::Inconsistent(format!(
                    "Killing form of su(2) at ({a},{b}) is {v}, expected {expected}"
                )));
            }
        }
    }

    let alphas: Vec<Vec<i64>> = (1..=m).map(|i| alpha(i, m)).collect();
    let norms: Vec<i64> = alphas
        .iter()
        .map(|a| a.iter().map(|x| x * x).sum())
        .collect();
    let basis: Vec<Vec<Element>> = alphas
        .iter()
        .map(|a| (0..DIM_F).map(|l| embed(a, l)).collect())
        .collect();
    let diag: Vec<Element> = (0..DIM_F).map(|l| embed(&vec![1; m + 1], l)).collect();

    // orthogonality against the isotropy algebra and among the parts
    for (i, part) in basis.iter().enumerate() {
        for (a, u) in part.iter().enumerate() {
            if diag.iter().any(|k| dot(u, k) != 0) {
                return Err(Error::Inconsistent(format!(
                    "alpha_{}(X_{a}) meets the diagonal",
                    i + 1
                )));
            }
            for (j, other) in basis.iter().enumerate() {
                for (b, v) in other.iter().enumerate() {
                    let expected = if i == j && a == b { norms[i] } else { 0 };
                    if dot(u, v) != expected {
                        return Err(Error::Inconsistent(format!(
                            "basis vectors ({},{a}) and ({},{b}) are not orthogonal",
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
    }

    let dims = DimVector::uniform(m, DIM_F as u64)?;
    let mut t = StructuralConstants::new(dims, Coverage::Full);
    for i in 0..m {
        for j in i..m {
            for k in j..m {
                let mut squares = 0i64;
                for u in &basis[i] {
                    for v in &basis[j] {
                        let w = bracket(u, v);
                        for z in &basis[k] {
                            let p = dot(&w, z);
                            squares += p * p;
                        }
                    }
                }
                // each projection is p / (sqrt 2 * |alpha_i| |alpha_j| |alpha_k|)
                let denom = 2 * norms[i] * norms[j] * norms[k];
                let v = int(squares) / int(denom);
                if !v.is_zero() {
                    t.insert(i + 1, j + 1, k + 1, v)?;
                }
            }
        }
    }
    Ok(t)
}

/// Per-triple comparison of the oracle with another table: `(triple, oracle, other)`.
pub fn oracle_mismatches(
    oracle: &StructuralConstants,
    other: &StructuralConstants,
) -> Vec<([usize; 3], Rational, Option<Rational>)> {
    let r = oracle.parts();
    let mut out = Vec::new();
    for i in 1..=r {
        for j in i..=r {
            for k in j..=r {
                let a = oracle.get(i, j, k).unwrap_or_else(|_| Rational::zero());
                let b = other.get(i, j, k).ok();
                if b.as_ref() != Some(&a) {
                    out.push(([i, j, k], a, b));
                }
            }
        }
    }
    out
}
