//! Text format for oblivious ABPs.
//!
//! A program is a JSON document:
//!
//! ```text
//! {
//!   "field_prime": 101,
//!   "num_vars": 2,
//!   "layers": [
//!     {"var": 1, "matrix": [[[0, 1], [1]]]},
//!     {"var": 2, "matrix": [[[1]], [[0, 1]]]}
//!   ]
//! }
//! ```
//!
//! * `var` is the 1-based index of the variable the layer reads, or `null`
//!   for a constant layer.
//! * `matrix` is a list of rows; each entry is a coefficient list, lowest
//!   degree first. `[]` is the zero entry. Integers may be negative and are
//!   reduced mod `field_prime`.
//! * `cols` gives the column count of a layer with no rows; it is otherwise
//!   optional and must agree with the rows when present.
//! * `padding: true` tags identity layers added by normalization.
//!
//! Whitespace is insignificant. [`write_abp`] produces the canonical form:
//! one layer per line, trailing zero coefficients dropped.

use serde::Deserialize;

use super::ObliviousAbp;
use crate::algebra::{Fe, PrimeField, UniMatrix};
use crate::error::{Error, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FileAbp {
    field_prime: u64,
    num_vars: usize,
    layers: Vec<FileLayer>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FileLayer {
    var: Option<usize>,
    matrix: Vec<Vec<Vec<i64>>>,
    #[serde(default)]
    cols: Option<usize>,
    #[serde(default)]
    padding: bool,
}

pub fn parse_abp(text: &str) -> Result<ObliviousAbp> {
    let file: FileAbp = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let field = PrimeField::new(file.field_prime)?;
    let mut layers = Vec::with_capacity(file.layers.len());
    let mut padding = Vec::with_capacity(file.layers.len());
    for (li, l) in file.layers.into_iter().enumerate() {
        let rows = l.matrix.len();
        let cols = match (l.matrix.first(), l.cols) {
            (Some(r), None) => r.len(),
            (Some(r), Some(c)) if r.len() == c => c,
            (None, Some(c)) => c,
            (None, None) => 0,
            (Some(r), Some(c)) => {
                return Err(Error::Structure(format!(
                    "layer {}: declared {} columns but rows have {}",
                    li + 1,
                    c,
                    r.len()
                )))
            }
        };
        if l.matrix.iter().any(|r| r.len() != cols) {
            return Err(Error::Structure(format!("layer {}: ragged matrix rows", li + 1)));
        }
        let var = match l.var {
            Some(0) => {
                return Err(Error::Structure(format!(
                    "layer {}: variables are numbered from 1",
                    li + 1
                )))
            }
            Some(v) => Some(v - 1),
            None => None,
        };
        let entries = l
            .matrix
            .into_iter()
            .flatten()
            .map(|e| e.into_iter().map(|c| field.elem(c)).collect())
            .collect();
        let m = UniMatrix::new(field, rows, cols, var, entries)
            .map_err(|e| Error::Structure(format!("layer {}: {}", li + 1, e)))?;
        layers.push(m);
        padding.push(l.padding);
    }
    ObliviousAbp::with_padding(field, file.num_vars, layers, padding)
}

fn write_entry(out: &mut String, e: &[Fe]) {
    out.push('[');
    for (i, c) in e.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push_str(&c.to_string());
    }
    out.push(']');
}

/// Canonical serialization; `parse_abp(write_abp(a)) == a`.
pub fn write_abp(abp: &ObliviousAbp) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!("  \"field_prime\": {},\n", abp.field().modulus()));
    out.push_str(&format!("  \"num_vars\": {},\n", abp.num_vars()));
    out.push_str("  \"layers\": [\n");
    let n = abp.layers().len();
    for (li, l) in abp.layers().iter().enumerate() {
        out.push_str("    {\"var\": ");
        match l.var() {
            Some(v) => out.push_str(&(v + 1).to_string()),
            None => out.push_str("null"),
        }
        out.push_str(", \"matrix\": [");
        for i in 0..l.rows() {
            if i > 0 {
                out.push_str(", ");
            }
            out.push('[');
            for j in 0..l.cols() {
                if j > 0 {
                    out.push_str(", ");
                }
                write_entry(&mut out, l.entry(i, j));
            }
            out.push(']');
        }
        out.push(']');
        if l.rows() == 0 {
            out.push_str(&format!(", \"cols\": {}", l.cols()));
        }
        if abp.is_padding(li) {
            out.push_str(", \"padding\": true");
        }
        out.push('}');
        if li + 1 < n {
            out.push(',');
        }
        out.push('\n');
    }
    out.push_str("  ]\n}\n");
    out
}
