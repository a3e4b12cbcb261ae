//! Quadratic forms relative to a diagonal metric.
//!
//! A [`WeightedForm`] `(N, w)` is a rational symmetric form `N` together with
//! a positive diagonal metric `W = diag(w)`. It stands for the self-adjoint
//! operator `W^{-1} N`, whose matrix in a `W`-orthonormal basis is
//! `W^{-1/2} N W^{-1/2}`. That orthonormal matrix may contain square roots,
//! but `N`, `W`, the characteristic polynomial, traces, determinants and
//! Rayleigh quotients of rational vectors are all rational.
//!
//! For a Lichnerowicz matrix with summand dimensions `d` the coordinates are
//! block scalars: the tensor `A` acts as `b_k * Id` on the k-th summand, so
//! `<A, A> = sum d_k b_k^2`, `tr A = sum d_k b_k`, and the I-basis coordinate
//! is `a_k = sqrt(d_k) b_k`.

use num_traits::{One, Signed, Zero};

use super::charpoly::{characteristic_polynomial, Polynomial};
use super::det::determinant;
use super::jacobi::jacobi_eigenvalues;
use super::matrix::{DimVector, SymMatrix};
use super::rational::{from_u64, sqrt_exact, to_f64, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedForm {
    form: SymMatrix,
    weights: Vec<Rational>,
}

impl WeightedForm {
    pub fn new(form: SymMatrix, weights: Vec<Rational>) -> Result<Self> {
        if form.order() != weights.len() {
            return Err(Error::DimensionMismatch {
                expected: form.order(),
                actual: weights.len(),
            });
        }
        if let Some(i) = weights.iter().position(|w| !w.is_positive()) {
            return Err(Error::InvalidArgument(format!(
                "metric weight {} is not positive",
                i + 1
            )));
        }
        Ok(WeightedForm { form, weights })
    }

    pub fn with_dims(form: SymMatrix, dims: &DimVector) -> Result<Self> {
        Self::new(form, dims.to_rationals())
    }

    /// Converts an orthonormal-basis matrix `M` back to `N = W^{1/2} M W^{1/2}`.
    /// Fails if some nonzero entry would need an irrational factor.
    pub fn from_orthonormal(m: &SymMatrix, dims: &DimVector) -> Result<Self> {
        if m.order() != dims.len() {
            return Err(Error::DimensionMismatch {
                expected: m.order(),
                actual: dims.len(),
            });
        }
        let mut form = SymMatrix::zeros(m.order());
        for i in 0..m.order() {
            for j in i..m.order() {
                let v = m.get(i, j);
                if v.is_zero() {
                    continue;
                }
                let root = sqrt_exact(&from_u64(dims.get(i) * dims.get(j))).ok_or_else(|| {
                    Error::Irrational(format!(
                        "entry ({i},{j}) needs sqrt({}*{})",
                        dims.get(i),
                        dims.get(j)
                    ))
                })?;
                form.set(i, j, v * root);
            }
        }
        Self::with_dims(form, dims)
    }

    pub fn order(&self) -> usize {
        self.form.order()
    }

    pub fn form(&self) -> &SymMatrix {
        &self.form
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    /// `b^T N b`.
    pub fn quad(&self, b: &[Rational]) -> Result<Rational> {
        self.form.quad_form(b)
    }

    /// `b^T W b`.
    pub fn norm_sq(&self, b: &[Rational]) -> Result<Rational> {
        self.check_len(b.len())?;
        Ok(b.iter().zip(&self.weights).map(|(x, w)| x * x * w).sum())
    }

    /// `sum w_k b_k`, the W-inner product with the all-ones vector.
    pub fn trace_of(&self, b: &[Rational]) -> Result<Rational> {
        self.check_len(b.len())?;
        Ok(b.iter().zip(&self.weights).map(|(x, w)| x * w).sum())
    }

    pub fn rayleigh(&self, b: &[Rational]) -> Result<Rational> {
        let n = self.norm_sq(b)?;
        if n.is_zero() {
            return Err(Error::InvalidArgument(
                "zero vector has no Rayleigh quotient".into(),
            ));
        }
        Ok(self.quad(b)? / n)
    }

    /// `W^{-1} N b`; `b` is an eigenvector with eigenvalue `mu` iff this equals `mu b`.
    pub fn apply(&self, b: &[Rational]) -> Result<Vec<Rational>> {
        Ok(self
            .form
            .mul_vec(b)?
            .into_iter()
            .zip(&self.weights)
            .map(|(x, w)| x / w)
            .collect())
    }

    pub fn trace(&self) -> Rational {
        (0..self.order())
            .map(|i| self.form.get(i, i) / &self.weights[i])
            .sum()
    }

    fn weight_product(&self) -> Rational {
        self.weights.iter().fold(Rational::one(), |acc, w| acc * w)
    }

    pub fn determinant(&self) -> Rational {
        determinant(&self.form.rows()).expect("square") / self.weight_product()
    }

    /// `det(W^{-1/2} N W^{-1/2} - lambda I) = det(N - lambda W) / det W`.
    pub fn charpoly_eval(&self, lambda: &Rational) -> Rational {
        let mut m = self.form.clone();
        for i in 0..self.order() {
            let v = m.get(i, i) - lambda * &self.weights[i];
            m.set(i, i, v);
        }
        determinant(&m.rows()).expect("square") / self.weight_product()
    }

    /// `det(W^{-1/2} N W^{-1/2} - x I)` as a polynomial, computed from the
    /// similar rational matrix `W^{-1} N`.
    pub fn characteristic_polynomial(&self) -> Polynomial {
        let rows: Vec<Vec<Rational>> = self
            .form
            .rows()
            .into_iter()
            .zip(&self.weights)
            .map(|(r, w)| r.into_iter().map(|v| v / w).collect())
            .collect();
        characteristic_polynomial(&rows).expect("square")
    }

    /// Entry `(i, j)` of the orthonormal-basis matrix, if it is rational.
    pub fn orthonormal_entry(&self, i: usize, j: usize) -> Option<Rational> {
        let v = self.form.get(i, j);
        if v.is_zero() {
            return Some(Rational::zero());
        }
        if i == j {
            return Some(v / &self.weights[i]);
        }
        sqrt_exact(&(&self.weights[i] * &self.weights[j])).map(|r| v / r)
    }

    /// The orthonormal-basis matrix, when every entry is rational.
    pub fn orthonormal_exact(&self) -> Option<SymMatrix> {
        let n = self.order();
        let mut m = SymMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                m.set(i, j, self.orthonormal_entry(i, j)?);
            }
        }
        Some(m)
    }

    pub fn orthonormal_f64(&self) -> Vec<Vec<f64>> {
        let n = self.order();
        let w: Vec<f64> = self.weights.iter().map(to_f64).collect();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| to_f64(self.form.get(i, j)) / (w[i] * w[j]).sqrt())
                    .collect()
            })
            .collect()
    }

    /// Eigenvalues of the operator, ascending, by Jacobi rotations.
    pub fn eigen_numeric(&self, tol: f64) -> Result<Vec<f64>> {
        jacobi_eigenvalues(self.orthonormal_f64(), tol)
    }

    /// Restriction to the W-orthogonal complement of the all-ones vector
    /// (the traceless hyperplane `sum w_k b_k = 0`).
    ///
    /// The complement is spanned by the mutually W-orthogonal seeds
    /// `v_i = (1, .., 1, -S_i / w_{i+1}, 0, .., 0)` with `S_i = w_1 + .. + w_i`,
    /// of squared norm `S_i S_{i+1} / w_{i+1}`. The result is the pair
    /// (`V^T N V`, `V^T W V`), again a weighted form.
    pub fn restrict_traceless(&self) -> Result<WeightedForm> {
        let seeds = traceless_seeds(&self.weights)?;
        let r = seeds.len();
        let images: Vec<Vec<Rational>> = seeds
            .iter()
            .map(|v| self.form.mul_vec(v))
            .collect::<Result<_>>()?;
        let form = SymMatrix::from_upper_fn(r, |i, j| {
            seeds[i].iter().zip(&images[j]).map(|(a, b)| a * b).sum()
        });
        let gram = seeds
            .iter()
            .map(|v| self.norm_sq(v))
            .collect::<Result<Vec<_>>>()?;
        WeightedForm::new(form, gram)
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.order() {
            return Err(Error::DimensionMismatch {
                expected: self.order(),
                actual: len,
            });
        }
        Ok(())
    }
}

/// W-orthogonal basis of `{b : sum w_k b_k = 0}` (see [`WeightedForm::restrict_traceless`]).
pub fn traceless_seeds(weights: &[Rational]) -> Result<Vec<Vec<Rational>>> {
    let r = weights.len();
    if r < 2 {
        return Err(Error::InvalidArgument(
            "traceless restriction needs at least two summands".into(),
        ));
    }
    let mut partial = Rational::zero();
    let mut seeds = Vec::with_capacity(r - 1);
    for i in 0..r - 1 {
        partial += &weights[i];
        let mut v = vec![Rational::zero(); r];
        for x in v.iter_mut().take(i + 1) {
            *x = Rational::one();
        }
        v[i + 1] = -(&partial / &weights[i + 1]);
        seeds.push(v);
    }
    Ok(seeds)
}

/// Restricts the orthonormal-basis matrix `m` (summand dimensions `dims`) to
/// the orthogonal complement of `(sqrt d_1, .., sqrt d_r)`.
pub fn restrict_traceless(m: &SymMatrix, dims: &DimVector) -> Result<WeightedForm> {
    WeightedForm::from_orthonormal(m, dims)?.restrict_traceless()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    #[test]
    fn restrict_ledger_obata_m2() {
        let m = SymMatrix::from_rows(vec![
            vec![rat(1, 6), rat(-1, 6)],
            vec![rat(-1, 6), rat(1, 6)],
        ])
        .unwrap();
        let d = DimVector::new(vec![3, 3]).unwrap();
        let r = restrict_traceless(&m, &d).unwrap();
        assert_eq!(
            r.orthonormal_exact().unwrap(),
            SymMatrix::diagonal(&[rat(1, 3)])
        );
    }

    #[test]
    fn polynomial_matches_determinant_route() {
        let n = SymMatrix::from_rows(vec![
            vec![int(2), int(-1), rat(1, 2)],
            vec![int(-1), int(3), int(0)],
            vec![rat(1, 2), int(0), int(1)],
        ])
        .unwrap();
        let w = WeightedForm::new(n, vec![int(3), int(5), rat(1, 2)]).unwrap();
        let p = w.characteristic_polynomial();
        for x in [int(0), rat(1, 3), int(-2)] {
            assert_eq!(p.eval(&x), w.charpoly_eval(&x));
        }
    }

    #[test]
    fn restrict_identity_gives_identity() {
        for dims in [vec![1, 2, 3], vec![7, 3], vec![5, 5, 5, 2]] {
            let d = DimVector::new(dims).unwrap();
            let r = restrict_traceless(&SymMatrix::identity(d.len()), &d).unwrap();
            assert_eq!(
                r.orthonormal_exact().unwrap(),
                SymMatrix::identity(d.len() - 1)
            );
        }
    }

    #[test]
    fn seeds_are_orthogonal_and_traceless() {
        let w = vec![int(7), int(3), rat(5, 2), int(1)];
        let seeds = traceless_seeds(&w).unwrap();
        let f = WeightedForm::new(SymMatrix::diagonal(&w), w.clone()).unwrap();
        for (i, u) in seeds.iter().enumerate() {
            assert_eq!(f.trace_of(u).unwrap(), int(0));
            for v in &seeds[i + 1..] {
                let ip: Rational = u.iter().zip(v).zip(&w).map(|((a, b), c)| a * b * c).sum();
                assert_eq!(ip, int(0));
            }
        }
    }

    #[test]
    fn from_orthonormal_rejects_irrational() {
        let m = SymMatrix::from_rows(vec![vec![int(1), int(1)], vec![int(1), int(1)]]).unwrap();
        let d = DimVector::new(vec![2, 3]).unwrap();
        assert!(matches!(
            WeightedForm::from_orthonormal(&m, &d),
            Err(Error::Irrational(_))
        ));
    }

    #[test]
    fn single_summand_cannot_be_restricted() {
        let f = WeightedForm::new(SymMatrix::identity(1), vec![int(3)]).unwrap();
        assert!(f.restrict_traceless().is_err());
    }

    #[test]
    fn charpoly_matches_orthonormal_when_rational() {
        let m = SymMatrix::from_rows(vec![
            vec![rat(5, 12), rat(-1, 6), rat(-1, 12)],
            vec![rat(-1, 6), rat(1, 4), rat(-1, 12)],
            vec![rat(-1, 12), rat(-1, 12), rat(1, 6)],
        ])
        .unwrap();
        let d = DimVector::uniform(3, 8).unwrap();
        let f = WeightedForm::from_orthonormal(&m, &d).unwrap();
        for lam in [int(0), rat(1, 4), rat(1, 5), int(2)] {
            assert_eq!(
                f.charpoly_eval(&lam),
                crate::exact::det::charpoly_eval(&m, &lam)
            );
        }
    }
}
