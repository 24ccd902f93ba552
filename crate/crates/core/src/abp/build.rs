use super::ObliviousAbp;
use crate::algebra::{Fe, UniMatrix};
use crate::error::{Error, Result};

/// Block-diagonal combination `sum coeffs[i] * parts[i]` of programs that
/// share a layer layout: same layer count and same variable at every layer.
/// The width is the sum of the part widths.
pub fn parallel_combination(parts: &[ObliviousAbp], coeffs: &[Fe]) -> Result<ObliviousAbp> {
    let Some(first) = parts.first() else {
        return Err(Error::Argument("no programs to combine".into()));
    };
    if coeffs.len() != parts.len() {
        return Err(Error::Argument(format!(
            "{} coefficients for {} programs",
            coeffs.len(),
            parts.len()
        )));
    }
    let field = first.field();
    let depth = first.layers().len();
    for p in parts {
        field.ensure_same(p.field())?;
        if p.num_vars() != first.num_vars() {
            return Err(Error::ArityMismatch {
                left: first.num_vars(),
                right: p.num_vars(),
            });
        }
        if p.layers().len() != depth {
            return Err(Error::Structure("programs have different layer counts".into()));
        }
        for (a, b) in p.layers().iter().zip(first.layers()) {
            if a.var() != b.var() {
                return Err(Error::Structure(
                    "programs read different variables at the same layer".into(),
                ));
            }
        }
    }
    let mut layers = Vec::with_capacity(depth);
    for l in 0..depth {
        let blocks: Vec<UniMatrix> = parts
            .iter()
            .zip(coeffs)
            .map(|(p, &c)| {
                let m = &p.layers()[l];
                if l == 0 {
                    m.scale(c)
                } else {
                    m.clone()
                }
            })
            .collect();
        let var = first.layers()[l].var();
        // the source row and sink column are shared
        let rows: usize = if l == 0 { 1 } else { blocks.iter().map(|b| b.rows()).sum() };
        let cols: usize = if l == depth - 1 { 1 } else { blocks.iter().map(|b| b.cols()).sum() };
        let mut entries = vec![Vec::new(); rows * cols];
        let (mut r0, mut c0) = (0, 0);
        for b in &blocks {
            for i in 0..b.rows() {
                for j in 0..b.cols() {
                    let (ri, cj) = (if l == 0 { 0 } else { r0 + i }, if l == depth - 1 { 0 } else { c0 + j });
                    let cell = &mut entries[ri * cols + cj];
                    *cell = crate::algebra::poly::uni::add(field, cell, b.entry(i, j));
                }
            }
            r0 += b.rows();
            c0 += b.cols();
        }
        layers.push(UniMatrix::new(field, rows, cols, var, entries)?);
    }
    ObliviousAbp::new(field, first.num_vars(), layers)
}

/// One oblivious program computing `sum parts[j]` that runs the parts one
/// after another. Besides the current part's own nodes it carries an
/// accumulator lane and a lane holding the constant 1 for parts still to
/// come, so its width is at most `max width + 2`. A sum of `c` read-once
/// programs becomes a read-`c` program.
pub fn sum_of_programs(parts: &[ObliviousAbp]) -> Result<ObliviousAbp> {
    let Some(first) = parts.first() else {
        return Err(Error::Argument("no programs to sum".into()));
    };
    let field = first.field();
    let n = first.num_vars();
    for p in parts {
        field.ensure_same(p.field())?;
        if p.num_vars() != n {
            return Err(Error::ArityMismatch {
                left: n,
                right: p.num_vars(),
            });
        }
    }
    let c = parts.len();
    let one = vec![Fe::ONE];
    let mut layers = Vec::new();
    for (j, part) in parts.iter().enumerate() {
        let m = part.layers().len();
        for (l, layer) in part.layers().iter().enumerate() {
            let acc_in = j > 0;
            let acc_out = j > 0 || l == m - 1;
            let pend_in = l == 0 || j + 1 < c;
            let pend_out = j + 1 < c;
            let int_in = if l == 0 { 0 } else { layer.rows() };
            let int_out = if l == m - 1 { 0 } else { layer.cols() };
            let rows = acc_in as usize + int_in + pend_in as usize;
            let cols = acc_out as usize + int_out + pend_out as usize;
            let mut e = vec![Vec::new(); rows * cols];
            let acc_row = 0;
            let acc_col = 0;
            let int_row = acc_in as usize;
            let int_col = acc_out as usize;
            let pend_row = int_row + int_in;
            let pend_col = int_col + int_out;
            if acc_in {
                e[acc_row * cols + acc_col] = one.clone();
            }
            if pend_in && pend_out {
                e[pend_row * cols + pend_col] = one.clone();
            }
            if l == 0 {
                // the pending 1 starts this part
                for t in 0..int_out {
                    e[pend_row * cols + int_col + t] = layer.entry(0, t).to_vec();
                }
                if m == 1 {
                    e[pend_row * cols + acc_col] = layer.entry(0, 0).to_vec();
                }
            } else {
                for s in 0..int_in {
                    for t in 0..int_out {
                        e[(int_row + s) * cols + int_col + t] = layer.entry(s, t).to_vec();
                    }
                    if l == m - 1 {
                        e[(int_row + s) * cols + acc_col] = layer.entry(s, 0).to_vec();
                    }
                }
            }
            layers.push(UniMatrix::new(field, rows, cols, layer.var(), e)?);
        }
    }
    ObliviousAbp::new(field, n, layers)
}
