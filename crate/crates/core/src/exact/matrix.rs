use serde::{Deserialize, Deserializer, Serialize, Serializer};

use num_traits::Zero;

use super::rational::{from_u64, parse_rational, to_f64, Rational};
use crate::error::{Error, Result};

/// Symmetric matrix of exact rationals, stored as its packed upper triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymMatrix {
    order: usize,
    upper: Vec<Rational>,
}

impl SymMatrix {
    pub fn zeros(order: usize) -> Self {
        SymMatrix {
            order,
            upper: vec![Rational::zero(); order * (order + 1) / 2],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.set(i, i, Rational::from_integer(1.into()));
        }
        m
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    /// Builds the matrix from `f(i, j)` evaluated on `i <= j` only.
    pub fn from_upper_fn(order: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut upper = Vec::with_capacity(order * (order + 1) / 2);
        for i in 0..order {
            for j in i..order {
                upper.push(f(i, j));
            }
        }
        SymMatrix { order, upper }
    }

    /// Fails if `rows` is not square and symmetric.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        for r in &rows {
            if r.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    actual: r.len(),
                });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::InvalidArgument(format!(
                        "matrix is not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(Self::from_upper_fn(n, |i, j| rows[i][j].clone()))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn slot(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        assert!(
            j < self.order,
            "index ({i},{j}) out of bounds for order {}",
            self.order
        );
        i * self.order - i * (i + 1) / 2 + j
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.upper[self.slot(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        let s = self.slot(i, j);
        self.upper[s] = v;
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| to_f64(self.get(i, j))).collect())
            .collect()
    }

    pub fn trace(&self) -> Rational {
        (0..self.order).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn scale(&self, s: &Rational) -> SymMatrix {
        SymMatrix {
            order: self.order,
            upper: self.upper.iter().map(|v| v * s).collect(),
        }
    }

    /// `self - lambda * I`.
    pub fn shifted(&self, lambda: &Rational) -> SymMatrix {
        let mut m = self.clone();
        for i in 0..self.order {
            let v = m.get(i, i) - lambda;
            m.set(i, i, v);
        }
        m
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(v.len())?;
        Ok((0..self.order)
            .map(|i| (0..self.order).map(|j| self.get(i, j) * &v[j]).sum())
            .collect())
    }

    /// `u^T M v`.
    pub fn bilinear(&self, u: &[Rational], v: &[Rational]) -> Result<Rational> {
        self.check_len(u.len())?;
        let mv = self.mul_vec(v)?;
        Ok(u.iter().zip(&mv).map(|(a, b)| a * b).sum())
    }

    pub fn quad_form(&self, v: &[Rational]) -> Result<Rational> {
        self.bilinear(v, v)
    }

    /// Principal submatrix on the given (0-based) indices.
    pub fn principal(&self, idx: &[usize]) -> SymMatrix {
        SymMatrix::from_upper_fn(idx.len(), |i, j| self.get(idx[i], idx[j]).clone())
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.order {
            return Err(Error::DimensionMismatch {
                expected: self.order,
                actual: len,
            });
        }
        Ok(())
    }
}

impl Serialize for SymMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect())
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(d)?;
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| parse_rational(s))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        SymMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// Dimensions `(d_1, ..., d_r)` of the summands of an orthogonal decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct DimVector(Vec<u64>);

impl DimVector {
    pub fn new(dims: Vec<u64>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidArgument("dimension vector is empty".into()));
        }
        if let Some(i) = dims.iter().position(|&d| d == 0) {
            return Err(Error::InvalidArgument(format!(
                "dimension d_{} is zero",
                i + 1
            )));
        }
        Ok(DimVector(dims))
    }

    pub fn uniform(len: usize, d: u64) -> Result<Self> {
        Self::new(vec![d; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> u64 {
        self.0[i]
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.0.iter().map(|&d| from_u64(d)).collect()
    }

    pub fn is_uniform(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }
}

impl TryFrom<Vec<u64>> for DimVector {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        DimVector::new(v)
    }
}

impl From<DimVector> for Vec<u64> {
    fn from(d: DimVector) -> Self {
        d.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    #[test]
    fn symmetric_storage() {
        let mut m = SymMatrix::zeros(3);
        m.set(2, 0, rat(1, 2));
        assert_eq!(m.get(0, 2), &rat(1, 2));
        assert_eq!(m.get(2, 0), &rat(1, 2));
        assert_eq!(m.rows()[2][0], rat(1, 2));
    }

    #[test]
    fn from_rows_rejects_asymmetry() {
        let rows = vec![vec![int(1), int(2)], vec![int(3), int(1)]];
        assert!(SymMatrix::from_rows(rows).is_err());
        let ragged = vec![vec![int(1), int(2)], vec![int(3)]];
        assert!(SymMatrix::from_rows(ragged).is_err());
    }

    #[test]
    fn quad_form_and_trace() {
        let m = SymMatrix::from_rows(vec![
            vec![rat(1, 6), rat(-1, 6)],
            vec![rat(-1, 6), rat(1, 6)],
        ])
        .unwrap();
        assert_eq!(m.quad_form(&[int(1), int(1)]).unwrap(), int(0));
        assert_eq!(m.quad_form(&[int(1), int(-1)]).unwrap(), rat(2, 3));
        assert_eq!(m.trace(), rat(1, 3));
        assert!(m.quad_form(&[int(1)]).is_err());
    }

    #[test]
    fn serde_is_row_major_strings() {
        let m =
            SymMatrix::from_rows(vec![vec![rat(1, 2), int(-1)], vec![int(-1), int(3)]]).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"[["1/2","-1"],["-1","3"]]"#);
        let back: SymMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn dim_vector_rejects_zero() {
        assert!(DimVector::new(vec![3, 0]).is_err());
        assert!(DimVector::new(vec![]).is_err());
        assert!(serde_json::from_str::<DimVector>("[1,0]").is_err());
        assert!(DimVector::new(vec![3, 3]).unwrap().is_uniform());
    }
}
