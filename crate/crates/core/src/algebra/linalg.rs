use super::field::{Fe, PrimeField};

/// Rank over `F_p` by fraction-free elimination. The pivot in each column is
/// the first nonzero row at or below the current rank, so the elimination
/// order is fully deterministic.
pub fn rank(field: PrimeField, rows: &[Vec<Fe>]) -> usize {
    let mut m: Vec<Vec<Fe>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(piv) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let pv = m[r][c];
        for i in r + 1..m.len() {
            let a = m[i][c];
            if a.is_zero() {
                continue;
            }
            // row_i <- pv * row_i - a * row_r
            for j in c..ncols {
                let t = field.sub(field.mul(pv, m[i][j]), field.mul(a, m[r][j]));
                m[i][j] = t;
            }
        }
        r += 1;
    }
    r
}

#[derive(Clone, Debug)]
struct EchelonRow {
    pivot: usize,
    vec: Vec<Fe>,
    // coordinates of `vec` in terms of the accepted vectors
    combo: Vec<Fe>,
}

/// Incrementally built echelon form that remembers how each stored row is
/// made from the accepted input vectors, so membership queries also return
/// coordinates.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: PrimeField,
    dim: usize,
    rows: Vec<EchelonRow>,
}

impl EchelonBasis {
    pub fn new(field: PrimeField, dim: usize) -> Self {
        EchelonBasis {
            field,
            dim,
            rows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn reduce(&self, v: &[Fe]) -> (Vec<Fe>, Vec<Fe>) {
        assert_eq!(v.len(), self.dim, "vector dimension mismatch");
        let f = self.field;
        let mut v = v.to_vec();
        // coordinates of (original v - current v)
        let mut combo = vec![Fe::ZERO; self.rows.len()];
        for row in &self.rows {
            let c = v[row.pivot];
            if c.is_zero() {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(&row.vec).skip(row.pivot) {
                *x = f.sub(*x, f.mul(c, y));
            }
            for (x, &y) in combo.iter_mut().zip(&row.combo) {
                *x = f.add(*x, f.mul(c, y));
            }
        }
        (v, combo)
    }

    /// Inserts `v`; returns `true` when it was independent of the stored
    /// vectors (and is now one of them).
    pub fn insert(&mut self, v: &[Fe]) -> bool {
        let f = self.field;
        let (mut rem, combo) = self.reduce(v);
        let Some(pivot) = rem.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = f.inv(rem[pivot]).expect("nonzero pivot");
        for x in rem.iter_mut() {
            *x = f.mul(*x, inv);
        }
        let k = self.rows.len();
        // rem = v - sum combo_i * accepted_i, scaled by inv
        let mut new_combo: Vec<Fe> = combo.iter().map(|&c| f.neg(f.mul(c, inv))).collect();
        new_combo.push(inv);
        for row in &mut self.rows {
            row.combo.resize(k + 1, Fe::ZERO);
        }
        self.rows.push(EchelonRow {
            pivot,
            vec: rem,
            combo: new_combo,
        });
        true
    }

    /// Coordinates of `v` in terms of the accepted vectors (in acceptance
    /// order), or `None` if `v` is outside their span.
    pub fn express(&self, v: &[Fe]) -> Option<Vec<Fe>> {
        let (rem, combo) = self.reduce(v);
        if rem.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(combo)
    }

    pub fn contains(&self, v: &[Fe]) -> bool {
        self.express(v).is_some()
    }
}

/// A nonzero `alpha` with `sum alpha_i * vectors[i] = 0`, if the vectors are
/// linearly dependent. The dependency involves only the first dependent
/// vector and the independent ones before it.
pub fn dependency(field: PrimeField, vectors: &[Vec<Fe>]) -> Option<Vec<Fe>> {
    let dim = vectors.first().map_or(0, |v| v.len());
    let mut basis = EchelonBasis::new(field, dim);
    let mut accepted = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        if let Some(coords) = basis.express(v) {
            let mut alpha = vec![Fe::ZERO; vectors.len()];
            for (&idx, &c) in accepted.iter().zip(&coords) {
                alpha[idx] = c;
            }
            alpha[i] = field.neg(Fe::ONE);
            return Some(alpha);
        }
        basis.insert(v);
        accepted.push(i);
    }
    None
}
