//! Dense matrices over Q(ζ₈).
//!
//! Storage is row-major and dense; products skip zero entries of the left
//! factor so monomial and near-monomial operators multiply in O(nnz·cols)
//! instead of O(n³). All operations are exact and pure.

use serde::{Deserialize, Serialize};

use super::cyclo::Cyclo8;
use crate::QdError;

#[derive(Clone, PartialEq, Eq)]
pub struct FMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Cyclo8>,
}

impl FMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FMatrix { rows, cols, entries: vec![Cyclo8::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = FMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Cyclo8::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Cyclo8) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        FMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Cyclo8>>) -> Result<Self, QdError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(QdError::DimensionMismatch("ragged row lengths".into()));
        }
        Ok(FMatrix { rows: nrows, cols: ncols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Cyclo8 {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Cyclo8) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &Cyclo8) {
        let e = &mut self.entries[r * self.cols + c];
        *e = &*e + v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }

    pub fn add(&self, rhs: &FMatrix) -> Result<FMatrix, QdError> {
        self.check_same_shape(rhs)?;
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(FMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn sub(&self, rhs: &FMatrix) -> Result<FMatrix, QdError> {
        self.check_same_shape(rhs)?;
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(FMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn neg(&self) -> FMatrix {
        FMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    pub fn scale(&self, s: &Cyclo8) -> FMatrix {
        FMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    pub fn mul(&self, rhs: &FMatrix) -> Result<FMatrix, QdError> {
        if self.cols != rhs.rows {
            return Err(QdError::DimensionMismatch(format!(
                "mul: {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = FMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                let rhs_row = &rhs.entries[k * rhs.cols..(k + 1) * rhs.cols];
                let out_row = &mut out.entries[r * rhs.cols..(r + 1) * rhs.cols];
                for (o, b) in out_row.iter_mut().zip(rhs_row) {
                    if !b.is_zero() {
                        *o = &*o + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> FMatrix {
        FMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn trace(&self) -> Result<Cyclo8, QdError> {
        if !self.is_square() {
            return Err(QdError::DimensionMismatch("trace of non-square matrix".into()));
        }
        let mut t = Cyclo8::zero();
        for i in 0..self.rows {
            t += self.get(i, i);
        }
        Ok(t)
    }

    /// M^e for e ≥ 0 by repeated multiplication (desk-scale exponents).
    pub fn pow(&self, e: usize) -> Result<FMatrix, QdError> {
        if !self.is_square() {
            return Err(QdError::DimensionMismatch("pow of non-square matrix".into()));
        }
        let mut acc = FMatrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Apply to a sparse column vector given as (index, value) pairs.
    pub fn apply_sparse(&self, v: &[(usize, Cyclo8)]) -> Vec<(usize, Cyclo8)> {
        let mut acc = vec![Cyclo8::zero(); self.rows];
        for (j, x) in v {
            if x.is_zero() {
                continue;
            }
            for r in 0..self.rows {
                let a = self.get(r, *j);
                if !a.is_zero() {
                    acc[r] = &acc[r] + &(a * x);
                }
            }
        }
        acc.into_iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .collect()
    }

    /// Row-major flattened view, for span/membership bookkeeping.
    pub fn vec_entries(&self) -> &[Cyclo8] {
        &self.entries
    }

    fn check_same_shape(&self, rhs: &FMatrix) -> Result<(), QdError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(QdError::DimensionMismatch(format!(
                "shape {}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }
}

impl std::fmt::Debug for FMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "FMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for FMatrix {
    /// Nested arrays of Cyclo8 coefficient quadruples.
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<&Cyclo8>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c)).collect())
            .collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<Cyclo8>>::deserialize(deserializer)?;
        FMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> Cyclo8 {
        Cyclo8::from_int(n)
    }

    #[test]
    fn mul_and_trace() {
        let a = FMatrix::from_rows(vec![vec![c(1), c(2)], vec![c(3), c(4)]]).unwrap();
        let b = FMatrix::from_rows(vec![vec![c(0), c(1)], vec![c(1), c(0)]]).unwrap();
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab, FMatrix::from_rows(vec![vec![c(2), c(1)], vec![c(4), c(3)]]).unwrap());
        assert_eq!(a.trace().unwrap(), c(5));
        assert!(a.mul(&FMatrix::zeros(3, 3)).is_err());
    }

    #[test]
    fn identity_and_pow() {
        let swap = FMatrix::from_rows(vec![vec![c(0), c(1)], vec![c(1), c(0)]]).unwrap();
        assert_eq!(swap.pow(2).unwrap(), FMatrix::identity(2));
        assert_eq!(swap.pow(0).unwrap(), FMatrix::identity(2));
    }

    #[test]
    fn serde_round_trip() {
        let m = FMatrix::from_rows(vec![
            vec![Cyclo8::sqrt2(), c(0)],
            vec![Cyclo8::i(), Cyclo8::from_ratio(1, 3)],
        ])
        .unwrap();
        let js = serde_json::to_string(&m).unwrap();
        let back: FMatrix = serde_json::from_str(&js).unwrap();
        assert_eq!(m, back);
    }
}
