use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::linalg::{self, EchelonBasis};
use crate::algebra::{Assignment, Fe, SparsePoly};
use crate::error::{Error, Result};

/// Seed used when no explicit seed is given.
pub const DEFAULT_SEED: u64 = 0x5eed_2016;

#[derive(Clone, Debug)]
pub struct EvalDimOptions {
    /// Independent random substitutions for the `R` variables; the largest
    /// rank is reported.
    pub trials: usize,
    pub seed: u64,
}

impl Default for EvalDimOptions {
    fn default() -> Self {
        EvalDimOptions {
            trials: 3,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalDimReport {
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    pub r: Vec<usize>,
    pub dimension: usize,
    /// Values for the `S` variables (in the order of `s`) whose restrictions
    /// form a basis of the span.
    pub basis_assignments: Vec<Vec<Fe>>,
    /// True when `R` is empty and `p > deg f`, so the dimension is exact.
    /// Otherwise it is a lower bound that is exact with high probability.
    pub exact: bool,
}

/// Coefficient matrix of `f` with rows indexed by the `S`-parts and columns
/// by the `T`-parts of its monomials (each in first-seen sorted order).
/// Variables outside `S` and `T` must not occur in `f`.
pub struct PartialDerivativeMatrix {
    pub row_monomials: Vec<Vec<u32>>,
    pub col_monomials: Vec<Vec<u32>>,
    pub rows: Vec<Vec<Fe>>,
}

pub fn partial_derivative_matrix(f: &SparsePoly, s: &[usize], t: &[usize]) -> PartialDerivativeMatrix {
    let proj = |e: &[u32], vars: &[usize]| -> Vec<u32> { vars.iter().map(|&v| e[v]).collect() };
    let mut row_idx: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    let mut col_idx: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    for (e, _) in f.terms() {
        row_idx.entry(proj(e, s)).or_insert(0);
        col_idx.entry(proj(e, t)).or_insert(0);
    }
    for (i, v) in row_idx.values_mut().enumerate() {
        *v = i;
    }
    for (i, v) in col_idx.values_mut().enumerate() {
        *v = i;
    }
    let mut rows = vec![vec![Fe::ZERO; col_idx.len()]; row_idx.len()];
    for (e, c) in f.terms() {
        rows[row_idx[&proj(e, s)]][col_idx[&proj(e, t)]] = c;
    }
    PartialDerivativeMatrix {
        row_monomials: row_idx.into_keys().collect(),
        col_monomials: col_idx.into_keys().collect(),
        rows,
    }
}

fn check_partition(n: usize, s: &[usize], t: &[usize], r: &[usize]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for &v in s.iter().chain(t).chain(r) {
        if v >= n {
            return Err(Error::InvalidPartition(format!("x{} is not a variable", v + 1)));
        }
        if !seen.insert(v) {
            return Err(Error::InvalidPartition(format!("x{} appears twice", v + 1)));
        }
    }
    if seen.len() != n {
        return Err(Error::InvalidPartition(format!(
            "sets cover {} of {} variables",
            seen.len(),
            n
        )));
    }
    Ok(())
}

/// Vector of `f|_{S=a}` over the column monomials of `m`.
pub(crate) fn restriction_vector(m: &PartialDerivativeMatrix, f: &SparsePoly, a: &[Fe]) -> Vec<Fe> {
    let field = f.field();
    let mut out = vec![Fe::ZERO; m.col_monomials.len()];
    for (mono, row) in m.row_monomials.iter().zip(&m.rows) {
        let w = mono
            .iter()
            .zip(a)
            .fold(Fe::ONE, |acc, (&e, &x)| field.mul(acc, field.pow(x, e as u64)));
        if w.is_zero() {
            continue;
        }
        for (o, &c) in out.iter_mut().zip(row) {
            *o = field.add(*o, field.mul(w, c));
        }
    }
    out
}

/// Grid points `{0..=d}^len` in lexicographic order.
pub(crate) fn grid_points(len: usize, d: u64) -> impl Iterator<Item = Vec<u64>> {
    let mut cur = Some(vec![0u64; len]);
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut next = out.clone();
        let mut i = len;
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            if next[i] < d {
                next[i] += 1;
                for x in next.iter_mut().skip(i + 1) {
                    *x = 0;
                }
                cur = Some(next);
                break;
            }
        }
        Some(out)
    })
}

fn dim_without_r(f: &SparsePoly, s: &[usize], t: &[usize]) -> (usize, Vec<Vec<Fe>>) {
    let field = f.field();
    let m = partial_derivative_matrix(f, s, t);
    let rank = linalg::rank(field, &m.rows);
    let d = s.iter().map(|&v| f.degree_in(v)).max().unwrap_or(0) as u64;
    let mut basis = EchelonBasis::new(field, m.col_monomials.len());
    let mut points = Vec::with_capacity(rank);
    if rank > 0 {
        for g in grid_points(s.len(), d) {
            let a: Vec<Fe> = g.iter().map(|&x| field.from_u64(x)).collect();
            if basis.insert(&restriction_vector(&m, f, &a)) {
                points.push(a);
                if points.len() == rank {
                    break;
                }
            }
        }
    }
    (rank, points)
}

/// Evaluation dimension of `f` with respect to `(S, T; R)`, computed as
/// the rank of the partial derivative matrix. Variables in `R` are replaced
/// by random field elements, `trials` times.
pub fn eval_dim_with(
    f: &SparsePoly,
    s: &[usize],
    t: &[usize],
    r: &[usize],
    opts: &EvalDimOptions,
) -> Result<EvalDimReport> {
    check_partition(f.num_vars(), s, t, r)?;
    let field = f.field();
    let (dimension, basis_assignments) = if r.is_empty() {
        dim_without_r(f, s, t)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let mut best: Option<(usize, Vec<Vec<Fe>>)> = None;
        for _ in 0..opts.trials.max(1) {
            let sub: Assignment = r
                .iter()
                .map(|&v| (v, field.from_u64(rng.random_range(0..field.modulus()))))
                .collect();
            let g = f.substitute(&sub)?;
            let cand = dim_without_r(&g, s, t);
            if best.as_ref().is_none_or(|b| cand.0 > b.0) {
                best = Some(cand);
            }
        }
        best.unwrap()
    };
    Ok(EvalDimReport {
        s: s.to_vec(),
        t: t.to_vec(),
        r: r.to_vec(),
        dimension,
        basis_assignments,
        exact: r.is_empty() && field.modulus() > f.total_degree() as u64,
    })
}

pub fn eval_dim(f: &SparsePoly, s: &[usize], t: &[usize], r: &[usize]) -> Result<EvalDimReport> {
    eval_dim_with(f, s, t, r, &EvalDimOptions::default())
}
