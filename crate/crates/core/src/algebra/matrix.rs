use super::field::{Fe, PrimeField};
use super::poly::uni;
use crate::error::{Error, Result};

/// Dense matrix over `F_p`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Fe>,
}

impl ConstMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ConstMatrix {
            rows,
            cols,
            data: vec![Fe::ZERO; rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.data[i * size + i] = Fe::ONE;
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, field: PrimeField, other: &ConstMatrix) -> ConstMatrix {
        assert_eq!(self.cols, other.rows, "matrix dimension mismatch");
        let mut out = ConstMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = field.add(out.data[idx], field.mul(a, other.get(k, j)));
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, field: PrimeField, v: &[Fe]) -> Vec<Fe> {
        assert_eq!(v.len(), self.rows, "vector length mismatch");
        let mut out = vec![Fe::ZERO; self.cols];
        for (i, &a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = field.add(*o, field.mul(a, self.get(i, j)));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }
}

/// A layer matrix whose entries are univariate polynomials in a single
/// variable. `var == None` marks a constant layer (every entry has degree 0),
/// which is what restriction leaves behind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    var: Option<usize>,
    entries: Vec<Vec<Fe>>,
}

impl UniMatrix {
    /// `entries` is row-major, each entry a coefficient list lowest degree
    /// first. Trailing zero coefficients are trimmed.
    pub fn new(
        field: PrimeField,
        rows: usize,
        cols: usize,
        var: Option<usize>,
        entries: Vec<Vec<Fe>>,
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Structure(format!(
                "{}x{} matrix given {} entries",
                rows,
                cols,
                entries.len()
            )));
        }
        let entries: Vec<Vec<Fe>> = entries.into_iter().map(uni::trim).collect();
        if var.is_none() && entries.iter().any(|e| e.len() > 1) {
            return Err(Error::Structure(
                "constant layer has an entry of positive degree".into(),
            ));
        }
        Ok(UniMatrix {
            field,
            rows,
            cols,
            var,
            entries,
        })
    }

    /// Builds from a grid of coefficient lists (`grid[i][j]`).
    pub fn from_grid(field: PrimeField, var: Option<usize>, grid: Vec<Vec<Vec<Fe>>>) -> Result<Self> {
        let rows = grid.len();
        let cols = grid.first().map_or(0, |r| r.len());
        if grid.iter().any(|r| r.len() != cols) {
            return Err(Error::Structure("ragged matrix rows".into()));
        }
        Self::new(field, rows, cols, var, grid.into_iter().flatten().collect())
    }

    pub fn constant(field: PrimeField, m: &ConstMatrix) -> Self {
        UniMatrix {
            field,
            rows: m.rows,
            cols: m.cols,
            var: None,
            entries: m
                .data
                .iter()
                .map(|&x| if x.is_zero() { vec![] } else { vec![x] })
                .collect(),
        }
    }

    /// Identity layer that vacuously reads `var`.
    pub fn identity(field: PrimeField, size: usize, var: Option<usize>) -> Self {
        let mut m = UniMatrix::constant(field, &ConstMatrix::identity(size));
        m.var = var;
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn var(&self) -> Option<usize> {
        self.var
    }

    pub(crate) fn set_var(&mut self, var: Option<usize>) {
        self.var = var;
    }

    pub fn entry(&self, i: usize, j: usize) -> &[Fe] {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Vec<Fe>] {
        &self.entries
    }

    /// Maximum entry degree.
    pub fn degree(&self) -> u32 {
        self.entries.iter().map(|e| uni::degree(e)).max().unwrap_or(0)
    }

    pub fn eval(&self, x: Fe) -> ConstMatrix {
        ConstMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .entries
                .iter()
                .map(|e| uni::eval(self.field, e, x))
                .collect(),
        }
    }

    /// Evaluates a constant layer (any variable value works).
    pub fn constant_value(&self) -> ConstMatrix {
        self.eval(Fe::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_empty())
    }

    /// Entrywise scaling.
    pub fn scale(&self, c: Fe) -> UniMatrix {
        UniMatrix {
            entries: self
                .entries
                .iter()
                .map(|e| uni::scale(self.field, e, c))
                .collect(),
            ..self.clone()
        }
    }
}
