use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::combinations;
use super::families::{pn_polynomial, pn_var, qn_matchings, qn_polynomial, qn_vars};
use crate::algebra::{Assignment, Fe, PrimeField, SparsePoly};
use crate::error::{Error, Result};
use crate::evaldim::{eval_dim, eval_dim_with, EvalDimOptions};

fn pn_names(n: usize, vars: &[usize]) -> String {
    vars.iter()
        .map(|&v| format!("x{}_{}", v / n + 1, v % n + 1))
        .collect::<Vec<_>>()
        .join(" ")
}

/// One subset of the `P_n` dimension experiment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PnDimRow {
    pub n: usize,
    pub t: usize,
    pub subset: String,
    pub dimension: usize,
    /// `2^ceil(sqrt(t))`.
    pub floor: usize,
    pub pass: bool,
    #[serde(skip)]
    pub vars: Vec<usize>,
}

fn ceil_sqrt(t: usize) -> u32 {
    let mut r = 0;
    while r * r < t {
        r += 1;
    }
    r as u32
}

/// Evaluation dimension of `P_n` with respect to every `t`-subset of its
/// variables against the rest, for each `t` in `sizes`. Rows come in order
/// of `t`, then lexicographically by subset.
pub fn experiment_pn_evaldim(field: PrimeField, n: usize, sizes: &[usize]) -> Result<Vec<PnDimRow>> {
    if n == 0 || n > 4 {
        return Err(Error::GuardExceeded {
            what: "P_n dimension experiment (n <= 4)",
            estimate: n as u128,
            limit: 4,
        });
    }
    let p = pn_polynomial(field, n)?;
    let nv = n * n;
    let mut jobs = Vec::new();
    for &t in sizes {
        if t > nv {
            return Err(Error::Argument(format!("subset size {} exceeds {} variables", t, nv)));
        }
        jobs.extend(combinations(nv, t).into_iter().map(|s| (t, s)));
    }
    jobs.into_par_iter()
        .map(|(t, s)| {
            let rest: Vec<usize> = (0..nv).filter(|v| !s.contains(v)).collect();
            let dim = eval_dim(&p, &s, &rest, &[])?.dimension;
            let floor = 1usize << ceil_sqrt(t);
            Ok(PnDimRow {
                n,
                t,
                subset: pn_names(n, &s),
                dimension: dim,
                floor,
                pass: dim >= floor,
                vars: s,
            })
        })
        .collect()
}

/// One step of the reduction from `P_n` to `P_{n-t-1}`.
#[derive(Clone, Debug)]
pub struct PnProjection {
    pub s: Vec<usize>,
    /// Rows and columns holding `s`, padded to `t` each.
    pub top_rows: Vec<usize>,
    pub top_cols: Vec<usize>,
    /// Restriction points of `P_n` on `s` and the coefficients combining them.
    pub points: Vec<Vec<Fe>>,
    pub coefficients: Vec<Fe>,
    /// Values given to every variable outside `s` and the kept block.
    pub fixed: Assignment,
    pub reduced_n: usize,
    /// `c` with projection `= c * P_{n-t-1}`.
    pub constant: Fe,
    pub verified: bool,
}

/// Takes a random combination `g` of linearly independent restrictions of
/// `P_n` on `s` (with `|s| = t < n`), fixes the remaining variables of the
/// rows and columns meeting `s` so that `g` stays nonzero, then fixes the
/// last row and column of the remaining block to cancel the constant shifts
/// of the row and column sums. What is left is compared against
/// `P_{n-t-1}` on the remaining block.
pub fn pn_projection(field: PrimeField, n: usize, s: &[usize], seed: u64) -> Result<PnProjection> {
    let t = s.len();
    if t >= n || n > 4 {
        return Err(Error::Argument(format!(
            "projection needs |S| < n <= 4, got |S| = {} and n = {}",
            t, n
        )));
    }
    let nv = n * n;
    if let Some(&v) = s.iter().find(|&&v| v >= nv) {
        return Err(Error::VariableOutOfRange { index: v, num_vars: nv });
    }
    let p = pn_polynomial(field, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pad = |touched: BTreeSet<usize>| -> Vec<usize> {
        let mut out: Vec<usize> = touched.iter().copied().collect();
        out.extend((0..n).filter(|i| !touched.contains(i)).take(t - touched.len()));
        out.sort_unstable();
        out
    };
    let top_rows = pad(s.iter().map(|&v| v / n).collect());
    let top_cols = pad(s.iter().map(|&v| v % n).collect());
    let rest: Vec<usize> = (0..nv).filter(|v| !s.contains(v)).collect();
    let rep = eval_dim(&p, s, &rest, &[])?;
    let points = rep.basis_assignments;
    let coefficients: Vec<Fe> = points
        .iter()
        .map(|_| field.from_u64(rng.random_range(1..field.modulus())))
        .collect();
    let mut g = SparsePoly::zero(field, nv);
    for (a, &c) in points.iter().zip(&coefficients) {
        let asg: Assignment = s.iter().copied().zip(a.iter().copied()).collect();
        g = g.add(&p.substitute(&asg)?.scale(c))?;
    }
    let border: Vec<usize> = rest
        .iter()
        .copied()
        .filter(|&v| top_rows.contains(&(v / n)) || top_cols.contains(&(v % n)))
        .collect();
    let mut fixed = Assignment::new();
    let mut h = SparsePoly::zero(field, nv);
    for _ in 0..64 {
        fixed = border
            .iter()
            .map(|&v| (v, field.from_u64(rng.random_range(0..field.modulus()))))
            .collect();
        h = g.substitute(&fixed)?;
        if !h.is_zero() {
            break;
        }
    }
    let rows: Vec<usize> = (0..n).filter(|i| !top_rows.contains(i)).collect();
    let cols: Vec<usize> = (0..n).filter(|j| !top_cols.contains(j)).collect();
    let m = n - t;
    let shift = |cells: Vec<usize>| {
        cells
            .iter()
            .fold(Fe::ZERO, |acc, v| field.add(acc, fixed.get(v).copied().unwrap_or(Fe::ZERO)))
    };
    let mut last = Assignment::new();
    for i in 0..m - 1 {
        let alpha = shift(top_cols.iter().map(|&c| pn_var(n, rows[i], c)).collect());
        last.insert(pn_var(n, rows[i], cols[m - 1]), field.neg(alpha));
        let beta = shift(top_rows.iter().map(|&r| pn_var(n, r, cols[i])).collect());
        last.insert(pn_var(n, rows[m - 1], cols[i]), field.neg(beta));
    }
    let corner = pn_var(n, rows[m - 1], cols[m - 1]);
    let mut reduced = SparsePoly::zero(field, nv);
    for c in field.elements() {
        last.insert(corner, c);
        reduced = h.substitute(&last)?;
        if !reduced.is_zero() {
            break;
        }
    }
    fixed.extend(last);
    let k = m - 1;
    let mut map = vec![None; k * k];
    for i in 0..k {
        for j in 0..k {
            map[pn_var(k, i, j)] = Some(pn_var(n, rows[i], cols[j]));
        }
    }
    let target = pn_polynomial(field, k)?.rename(&map, nv)?;
    let (e, tc) = target.terms().next().map(|(e, c)| (e.clone(), c)).expect("P_k is nonzero");
    let constant = field.mul(reduced.coeff(&e), field.inv(tc)?);
    let verified = !constant.is_zero() && reduced == target.scale(constant);
    Ok(PnProjection {
        s: s.to_vec(),
        top_rows,
        top_cols,
        points,
        coefficients,
        fixed,
        reduced_n: k,
        constant,
        verified,
    })
}

/// One sampled pair of the `Q_n` experiment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QnDimRow {
    pub n: usize,
    pub trial: usize,
    pub s: String,
    pub t: String,
    pub dimension: usize,
    /// Index (1-based) of a matching with the most `S`-`T` edges.
    pub matching: usize,
    pub cross_edges: usize,
    /// `2^cross_edges`.
    pub floor: usize,
    pub pass: bool,
}

/// Evaluation dimension of `Q_n` for `(S, T)`, all other variables (the `z`
/// ones included) substituted at random, against the best matching's count
/// of linear forms with one variable in `S` and the other in `T`.
pub fn qn_subset_dimension(
    field: PrimeField,
    n: usize,
    s: &[usize],
    t: &[usize],
    opts: &EvalDimOptions,
) -> Result<QnDimRow> {
    let q = qn_vars(n);
    let poly = qn_polynomial(field, n)?;
    let r: Vec<usize> = (0..q.num_vars()).filter(|v| !s.contains(v) && !t.contains(v)).collect();
    let dim = eval_dim_with(&poly, s, t, &r, opts)?.dimension;
    let cross = |m: &Vec<(usize, usize)>| {
        m.iter()
            .filter(|&&(x, y)| {
                let (x, y) = (q.x(x), q.y(y));
                (s.contains(&x) && t.contains(&y)) || (t.contains(&x) && s.contains(&y))
            })
            .count()
    };
    let matchings = qn_matchings(n);
    let (best, m) = matchings
        .iter()
        .enumerate()
        .map(|(i, mm)| (i, cross(mm)))
        .fold((0, 0), |acc, c| if c.1 > acc.1 { c } else { acc });
    let names = |v: &[usize]| v.iter().map(|&i| q.name(i)).collect::<Vec<_>>().join(" ");
    let floor = 1usize << m;
    Ok(QnDimRow {
        n,
        trial: 0,
        s: names(s),
        t: names(t),
        dimension: dim,
        matching: best + 1,
        cross_edges: m,
        floor,
        pass: dim >= floor,
    })
}

/// Samples `trials` disjoint pairs `S, T` of `x`/`y` variables covering at
/// least 90% of them and runs [`qn_subset_dimension`] on each.
pub fn experiment_qn_evaldim(field: PrimeField, n: usize, trials: usize, seed: u64) -> Result<Vec<QnDimRow>> {
    if !(2..=6).contains(&n) {
        return Err(Error::GuardExceeded {
            what: "Q_n dimension experiment (2 <= n <= 6)",
            estimate: n as u128,
            limit: 6,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let min_cover = (18 * n).div_ceil(10);
    let pairs: Vec<(Vec<usize>, Vec<usize>)> = (0..trials)
        .map(|_| {
            let size = rng.random_range(min_cover..=2 * n);
            let mut xy: Vec<usize> = (0..2 * n).collect();
            xy.shuffle(&mut rng);
            let (mut s, mut t) = (Vec::new(), Vec::new());
            for &v in &xy[..size] {
                if rng.random_bool(0.5) {
                    s.push(v);
                } else {
                    t.push(v);
                }
            }
            s.sort_unstable();
            t.sort_unstable();
            (s, t)
        })
        .collect();
    let opts = EvalDimOptions {
        trials: 3,
        seed,
    };
    pairs
        .into_par_iter()
        .enumerate()
        .map(|(i, (s, t))| {
            let mut row = qn_subset_dimension(field, n, &s, &t, &opts)?;
            row.trial = i;
            Ok(row)
        })
        .collect()
}
