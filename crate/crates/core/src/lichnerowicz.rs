//! The Lichnerowicz operator on invariant tensors `A = sum b_k Id_{p_k}`, and
//! the Ricci curvature of diagonal metrics.
//!
//! A [`LichMatrix`] keeps the operator as a rational form `N` in block-scalar
//! coordinates together with the summand dimensions. Its I-basis matrix is
//! `<L_p I_k, I_m> = N_km / sqrt(d_k d_m)`; for equal dimensions it is rational
//! and equals `N / d`.

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::charpoly::Polynomial;
use crate::exact::form::WeightedForm;
use crate::exact::matrix::{DimVector, SymMatrix};
use crate::exact::rational::{from_u64, int, Rational, Surd};
use crate::spaces::{rho_nikonorov, DiagonalPairSpec, LedgerObataSpec, NikonorovSpec};
use crate::structural::StructuralConstants;

/// Metric at which the operator was computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MetricTag {
    /// The metric induced by `-B_g`.
    #[serde(rename = "standard")]
    Standard,
    /// The Einstein metric `g_0 = (1, (c+1)/c)` of a diagonal pair.
    #[serde(rename = "g0")]
    G0Diagonal,
}

impl MetricTag {
    pub fn as_str(self) -> &'static str {
        match self {
            MetricTag::Standard => "standard",
            MetricTag::G0Diagonal => "g0",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LichMatrix {
    form: WeightedForm,
    dims: DimVector,
    metric: MetricTag,
}

impl LichMatrix {
    /// From a block-scalar form `N`; the metric weights are the dimensions.
    pub fn from_form(form: SymMatrix, dims: DimVector, metric: MetricTag) -> Result<Self> {
        let form = WeightedForm::with_dims(form, &dims)?;
        Ok(LichMatrix { form, dims, metric })
    }

    /// From an I-basis matrix with rational entries.
    pub fn from_i_basis(m: &SymMatrix, dims: DimVector, metric: MetricTag) -> Result<Self> {
        let form = WeightedForm::from_orthonormal(m, &dims)?;
        Ok(LichMatrix { form, dims, metric })
    }

    pub fn order(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &DimVector {
        &self.dims
    }

    pub fn metric(&self) -> MetricTag {
        self.metric
    }

    pub fn weighted(&self) -> &WeightedForm {
        &self.form
    }

    /// `<L_p I_i, I_j>` (0-based indices).
    pub fn entry(&self, i: usize, j: usize) -> Surd {
        let v = self.form.form().get(i, j);
        if i == j {
            return Surd::rational(v / from_u64(self.dims.get(i)));
        }
        let p = self.dims.get(i) * self.dims.get(j);
        Surd::new(v / from_u64(p), p)
    }

    /// The I-basis matrix, when all its entries are rational.
    pub fn i_basis_exact(&self) -> Option<SymMatrix> {
        self.form.orthonormal_exact()
    }

    pub fn i_basis_f64(&self) -> Vec<Vec<f64>> {
        self.form.orthonormal_f64()
    }

    pub fn trace(&self) -> Rational {
        self.form.trace()
    }

    pub fn determinant(&self) -> Rational {
        self.form.determinant()
    }

    /// Whether the identity tensor `sum sqrt(d_k) I_k` lies in the kernel,
    /// i.e. `N * (1, .., 1) = 0`.
    pub fn annihilates_identity(&self) -> bool {
        let ones = vec![Rational::one(); self.order()];
        self.form
            .form()
            .mul_vec(&ones)
            .map(|v| v.iter().all(Zero::is_zero))
            .unwrap_or(false)
    }

    pub fn charpoly_eval(&self, lambda: &Rational) -> Rational {
        self.form.charpoly_eval(lambda)
    }

    /// `det(M - x I)` for the I-basis matrix `M`.
    pub fn characteristic_polynomial(&self) -> Polynomial {
        self.form.characteristic_polynomial()
    }

    pub fn eigen_numeric(&self, tol: f64) -> Result<Vec<f64>> {
        self.form.eigen_numeric(tol)
    }

    /// The operator restricted to traceless tensors.
    pub fn restrict_traceless(&self) -> Result<WeightedForm> {
        self.form.restrict_traceless()
    }
}

impl Serialize for LichMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n = self.order();
        let rows: Vec<Vec<String>> = (0..n)
            .map(|i| (0..n).map(|j| self.entry(i, j).to_string()).collect())
            .collect();
        let mut st = s.serialize_struct("LichMatrix", 3)?;
        st.serialize_field("metric", &self.metric)?;
        st.serialize_field("dims", &self.dims)?;
        st.serialize_field("entries", &rows)?;
        st.end()
    }
}

/// Block-scalar form entry `N_kk = sum_{j != k} sum_i [ijk]` (1-based `k`).
fn generic_diagonal(t: &StructuralConstants, k: usize) -> Result<Rational> {
    let r = t.parts();
    let mut acc = Rational::zero();
    for j in (1..=r).filter(|&j| j != k) {
        for i in 1..=r {
            acc += t.get(i, j, k)?;
        }
    }
    Ok(acc)
}

/// `N_km = -sum_i [ikm]`.
fn generic_off_diagonal(t: &StructuralConstants, k: usize, m: usize) -> Result<Rational> {
    let mut acc = Rational::zero();
    for i in 1..=t.parts() {
        acc += t.get(i, k, m)?;
    }
    Ok(-acc)
}

/// The operator at the standard metric from a complete table of constants:
/// `<L_p I_k, I_k> = (1/d_k) sum_{j != k; i} [ijk]` and
/// `<L_p I_k, I_m> = -(1/sqrt(d_k d_m)) sum_i [ikm]`.
pub fn lich_standard_generic(t: &StructuralConstants) -> Result<LichMatrix> {
    let parts: Vec<usize> = (1..=t.parts()).collect();
    lich_standard_block(t, &parts)
}

/// Principal block of the standard-metric operator over the given parts
/// (1-based labels). Only the rows of those parts are read from `t`.
pub fn lich_standard_block(t: &StructuralConstants, parts: &[usize]) -> Result<LichMatrix> {
    if parts.is_empty() {
        return Err(Error::InvalidArgument("empty block".into()));
    }
    for &p in parts {
        if p == 0 || p > t.parts() {
            return Err(Error::IndexOutOfRange {
                index: p,
                max: t.parts(),
            });
        }
    }
    let n = parts.len();
    let mut form = SymMatrix::zeros(n);
    for a in 0..n {
        form.set(a, a, generic_diagonal(t, parts[a])?);
        for b in a + 1..n {
            form.set(a, b, generic_off_diagonal(t, parts[a], parts[b])?);
        }
    }
    let dims = DimVector::new(parts.iter().map(|&p| t.dim(p)).collect())?;
    LichMatrix::from_form(form, dims, MetricTag::Standard)
}

/// `-1/(s + s^2)`.
fn coupling(s: usize) -> Rational {
    let s = s as i64;
    -int(1) / int(s + s * s)
}

/// `(s - 1 - s^2)/(s + s^2)`.
fn diagonal_core(s: usize) -> Rational {
    let s = s as i64;
    int(s - 1 - s * s) / int(s + s * s)
}

/// I-basis matrix with diagonal `diagonal_core(s) + shift` and off-diagonal
/// `-1/(t + t^2)`, `t` the larger index.
fn alpha_block(size: usize, shift: &Rational) -> SymMatrix {
    SymMatrix::from_upper_fn(size, |i, j| {
        if i == j {
            diagonal_core(i + 1) + shift
        } else {
            coupling(j + 1)
        }
    })
}

/// Closed-form operator of a Ledger-Obata space: `m x m`, with
/// `[L]_{ss} = (s-1-s^2)/(s+s^2) + m/(m+1)` and `[L]_{rs} = -1/(s+s^2)` for `r < s`.
pub fn lich_ledger_obata(s: &LedgerObataSpec) -> Result<LichMatrix> {
    s.ensure_valid()?;
    let m = s.m as i64;
    let shift = Rational::new(m.into(), (m + 1).into());
    let block = alpha_block(s.m, &shift);
    LichMatrix::from_i_basis(
        &block,
        DimVector::uniform(s.m, s.dim_f)?,
        MetricTag::Standard,
    )
}

/// The block of a Nikonorov space over `I_1, .., I_{m-n-1}`:
/// `[L]_{ss} = (s-1-s^2)/(s+s^2) - 2 rho + 3/2`, `[L]_{rs} = -1/(s+s^2)` for `r < s`.
pub fn lich_nikonorov_block(s: &NikonorovSpec) -> Result<LichMatrix> {
    s.ensure_valid()?;
    let size = s.h_parts();
    if size == 0 {
        return Err(Error::Hypothesis(
            "the alpha-block needs m - n - 1 >= 1".into(),
        ));
    }
    let rho = rho_nikonorov(s)?;
    let shift = Rational::new(3.into(), 2.into()) - int(2) * rho;
    let block = alpha_block(size, &shift);
    LichMatrix::from_i_basis(
        &block,
        DimVector::uniform(size, s.dim_h)?,
        MetricTag::Standard,
    )
}

/// The operator of a diagonal pair at `g_0`:
/// `(1-c) [[d2/d1, -sqrt(d2/d1)], [-sqrt(d2/d1), 1]]`.
pub fn lich_diagonal_pair_g0(s: &DiagonalPairSpec) -> Result<LichMatrix> {
    s.ensure_valid()?;
    let k = (int(1) - &s.c) * from_u64(s.d2);
    let form = SymMatrix::from_upper_fn(2, |i, j| if i == j { k.clone() } else { -k.clone() });
    LichMatrix::from_form(
        form,
        DimVector::new(vec![s.d1, s.d2])?,
        MetricTag::G0Diagonal,
    )
}

/// Ricci eigenvalue of part `i` (1-based) for the diagonal metric `x`:
/// `r_i = 1/(2x_i) + 1/(4d_i) sum_{j,k} [ijk] x_i/(x_j x_k)
///        - 1/(2d_i) sum_{j,k} [ijk] x_j/(x_i x_k)`.
pub fn ricci_component(t: &StructuralConstants, x: &[Rational], i: usize) -> Result<Rational> {
    let r = t.parts();
    if x.len() != r {
        return Err(Error::DimensionMismatch {
            expected: r,
            actual: x.len(),
        });
    }
    if let Some(p) = x.iter().position(|v| !v.is_positive()) {
        return Err(Error::InvalidArgument(format!(
            "metric component x_{} is not positive",
            p + 1
        )));
    }
    if i == 0 || i > r {
        return Err(Error::IndexOutOfRange { index: i, max: r });
    }
    let xi = &x[i - 1];
    let d = from_u64(t.dim(i));
    let mut plus = Rational::zero();
    let mut minus = Rational::zero();
    for j in 1..=r {
        for k in 1..=r {
            let c = t.get(i, j, k)?;
            if c.is_zero() {
                continue;
            }
            let (xj, xk) = (&x[j - 1], &x[k - 1]);
            plus += &c * xi / (xj * xk);
            minus += &c * xj / (xi * xk);
        }
    }
    Ok(xi.recip() / int(2) + plus / (int(4) * &d) - minus / (int(2) * d))
}

/// All Ricci eigenvalues `(r_1, .., r_r)` of the diagonal metric `x`.
pub fn ricci_diagonal(t: &StructuralConstants, x: &[Rational]) -> Result<Vec<Rational>> {
    (1..=t.parts()).map(|i| ricci_component(t, x, i)).collect()
}
