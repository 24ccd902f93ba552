//! Oblivious algebraic branching programs as iterated products of
//! univariate-entry matrices.
//!
//! The polynomial computed by a program is the single entry of the product
//! `A_1(x_{i_1}) A_2(x_{i_2}) ... A_L(x_{i_L})`: the first layer has one row
//! (the source), the last layer has one column (the sink).

mod build;
pub mod format;
pub mod random;

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{Assignment, ConstMatrix, Fe, PrimeField, SparsePoly, UniMatrix};
use crate::error::{Error, Result};
use crate::sequences::ReadSequence;

pub use build::{parallel_combination, sum_of_programs};

/// Default refusal threshold for brute-force expansion, in monomials.
pub const DEFAULT_EXPANSION_GUARD: u128 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObliviousAbp {
    field: PrimeField,
    num_vars: usize,
    layers: Vec<UniMatrix>,
    // identity layers added by normalization
    padding: Vec<bool>,
}

impl ObliviousAbp {
    pub fn new(field: PrimeField, num_vars: usize, layers: Vec<UniMatrix>) -> Result<Self> {
        let padding = vec![false; layers.len()];
        Self::with_padding(field, num_vars, layers, padding)
    }

    pub fn with_padding(
        field: PrimeField,
        num_vars: usize,
        layers: Vec<UniMatrix>,
        padding: Vec<bool>,
    ) -> Result<Self> {
        if layers.is_empty() {
            return Err(Error::Structure("a program needs at least one layer".into()));
        }
        if padding.len() != layers.len() {
            return Err(Error::Structure("padding tags do not match layers".into()));
        }
        if layers[0].rows() != 1 {
            return Err(Error::Structure(format!(
                "first layer must have a single source row, has {}",
                layers[0].rows()
            )));
        }
        let last = layers.last().unwrap();
        if last.cols() != 1 {
            return Err(Error::Structure(format!(
                "last layer must have a single sink column, has {}",
                last.cols()
            )));
        }
        for (i, l) in layers.iter().enumerate() {
            field.ensure_same(l.field())?;
            if let Some(v) = l.var() {
                if v >= num_vars {
                    return Err(Error::VariableOutOfRange { index: v, num_vars });
                }
            }
            if i + 1 < layers.len() && l.cols() != layers[i + 1].rows() {
                return Err(Error::Structure(format!(
                    "layer {} has {} columns but layer {} has {} rows",
                    i + 1,
                    l.cols(),
                    i + 2,
                    layers[i + 1].rows()
                )));
            }
        }
        Ok(ObliviousAbp {
            field,
            num_vars,
            layers,
            padding,
        })
    }

    /// Builds from square `w x w` layers, keeping entry `(1,1)` semantics:
    /// only the first row of the first layer and the first column of the last
    /// layer are used.
    pub fn from_square_layers(
        field: PrimeField,
        num_vars: usize,
        mut layers: Vec<UniMatrix>,
    ) -> Result<Self> {
        if layers.is_empty() {
            return Err(Error::Structure("a program needs at least one layer".into()));
        }
        let first = &layers[0];
        let row0: Vec<Vec<Fe>> = (0..first.cols()).map(|j| first.entry(0, j).to_vec()).collect();
        layers[0] = UniMatrix::new(field, 1, first.cols(), first.var(), row0)?;
        let li = layers.len() - 1;
        let last = &layers[li];
        let col0: Vec<Vec<Fe>> = (0..last.rows()).map(|i| last.entry(i, 0).to_vec()).collect();
        layers[li] = UniMatrix::new(field, last.rows(), 1, last.var(), col0)?;
        Self::new(field, num_vars, layers)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn layers(&self) -> &[UniMatrix] {
        &self.layers
    }

    pub fn is_padding(&self, layer: usize) -> bool {
        self.padding[layer]
    }

    /// Largest matrix dimension over all layers.
    pub fn width(&self) -> usize {
        self.layers
            .iter()
            .map(|l| l.rows().max(l.cols()))
            .max()
            .unwrap_or(0)
    }

    /// Largest entry degree over all layers.
    pub fn degree(&self) -> u32 {
        self.layers.iter().map(|l| l.degree()).max().unwrap_or(0)
    }

    /// Widths at the internal cuts: the number of columns of layers
    /// `1..L-1`.
    pub fn cut_widths(&self) -> Vec<usize> {
        self.layers[..self.layers.len() - 1]
            .iter()
            .map(|l| l.cols())
            .collect()
    }

    /// Variables read by the non-constant layers, in layer order.
    pub fn reads(&self) -> Vec<usize> {
        self.layers.iter().filter_map(|l| l.var()).collect()
    }

    /// Per-variable read counts.
    pub fn read_counts(&self) -> Vec<usize> {
        let mut c = vec![0; self.num_vars];
        for v in self.reads() {
            c[v] += 1;
        }
        c
    }

    /// Variables read by at least one layer.
    pub fn free_vars(&self) -> Vec<usize> {
        let c = self.read_counts();
        (0..self.num_vars).filter(|&i| c[i] > 0).collect()
    }

    /// Sum of layer degrees per variable: a bound on the individual degree of
    /// the computed polynomial.
    pub fn degree_bounds(&self) -> Vec<u32> {
        let mut d = vec![0; self.num_vars];
        for l in &self.layers {
            if let Some(v) = l.var() {
                d[v] += l.degree();
            }
        }
        d
    }

    /// Number of monomials the expansion may have: `prod (deg_i + 1)`.
    pub fn estimated_terms(&self) -> u128 {
        self.degree_bounds()
            .iter()
            .fold(1u128, |acc, &d| acc.saturating_mul(d as u128 + 1))
    }

    pub fn evaluate(&self, point: &[Fe]) -> Result<Fe> {
        if point.len() != self.num_vars {
            return Err(Error::PointLength {
                expected: self.num_vars,
                got: point.len(),
            });
        }
        let mut v = vec![Fe::ONE];
        for l in &self.layers {
            let x = l.var().map_or(Fe::ZERO, |i| point[i]);
            v = l.eval(x).left_mul_vec(self.field, &v);
        }
        Ok(v[0])
    }

    /// Product of all layers when every layer is constant.
    pub fn constant_value(&self) -> Option<Fe> {
        if self.layers.iter().any(|l| l.var().is_some()) {
            return None;
        }
        let mut v = vec![Fe::ONE];
        for l in &self.layers {
            v = l.constant_value().left_mul_vec(self.field, &v);
        }
        Some(v[0])
    }

    pub fn expand(&self) -> Result<SparsePoly> {
        self.expand_with_guard(DEFAULT_EXPANSION_GUARD)
    }

    /// Sums over all source-sink paths. Works on a dense coefficient box of
    /// `prod (deg_i + 1)` cells and refuses when that exceeds `guard`.
    pub fn expand_with_guard(&self, guard: u128) -> Result<SparsePoly> {
        let estimate = self.estimated_terms();
        if estimate > guard {
            return Err(Error::GuardExceeded {
                what: "expansion",
                estimate,
                limit: guard,
            });
        }
        let f = self.field;
        let bounds = self.degree_bounds();
        let mut strides = vec![0usize; self.num_vars];
        let mut size = 1usize;
        for (s, &d) in strides.iter_mut().zip(&bounds) {
            *s = size;
            size *= d as usize + 1;
        }
        let mut state: Vec<Vec<Fe>> = vec![vec![Fe::ZERO; size]];
        state[0][0] = Fe::ONE;
        for l in &self.layers {
            let mut next = vec![vec![Fe::ZERO; size]; l.cols()];
            let stride = l.var().map_or(0, |v| strides[v]);
            for (s, src) in state.iter().enumerate() {
                let support: Vec<(usize, Fe)> = src
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| !a.is_zero())
                    .map(|(i, &a)| (i, a))
                    .collect();
                if support.is_empty() {
                    continue;
                }
                for (t, dst) in next.iter_mut().enumerate() {
                    let entry = l.entry(s, t);
                    if entry.is_empty() {
                        continue;
                    }
                    for &(idx, a) in &support {
                        for (e, &c) in entry.iter().enumerate() {
                            if c.is_zero() {
                                continue;
                            }
                            let j = idx + e * stride;
                            dst[j] = f.add(dst[j], f.mul(a, c));
                        }
                    }
                }
            }
            state = next;
        }
        let mut out = SparsePoly::zero(f, self.num_vars);
        for (idx, &c) in state[0].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut e = vec![0u32; self.num_vars];
            let mut rest = idx;
            for (ei, &d) in e.iter_mut().zip(&bounds) {
                let r = d as usize + 1;
                *ei = (rest % r) as u32;
                rest /= r;
            }
            out.add_term(e, c);
        }
        Ok(out)
    }

    /// Fixes variables: layers reading them become constant layers.
    pub fn restrict(&self, assignment: &Assignment) -> Result<ObliviousAbp> {
        for &i in assignment.keys() {
            if i >= self.num_vars {
                return Err(Error::VariableOutOfRange {
                    index: i,
                    num_vars: self.num_vars,
                });
            }
        }
        let layers = self
            .layers
            .iter()
            .map(|l| match l.var().and_then(|v| assignment.get(&v)) {
                Some(&a) => UniMatrix::constant(self.field, &l.eval(a)),
                None => l.clone(),
            })
            .collect();
        Ok(ObliviousAbp {
            field: self.field,
            num_vars: self.num_vars,
            layers,
            padding: self.padding.clone(),
        })
    }

    /// The read sequence over the free variables. Requires every free
    /// variable to be read the same number of times.
    pub fn read_sequence(&self) -> Result<ReadSequence> {
        ReadSequence::from_labels(&self.reads())
    }

    /// Largest number of reads of any variable.
    pub fn read_multiplicity(&self) -> usize {
        self.read_counts().into_iter().max().unwrap_or(0)
    }

    /// Pads every variable read fewer than `k` times with identity layers
    /// (appended at the sink end) so that each variable is read exactly `k`
    /// times, `k` being the current read multiplicity.
    pub fn normalize(&self) -> ObliviousAbp {
        let k = self.read_multiplicity();
        let counts = self.read_counts();
        let mut layers = self.layers.clone();
        let mut padding = self.padding.clone();
        for (v, &c) in counts.iter().enumerate() {
            for _ in c..k {
                layers.push(UniMatrix::identity(self.field, 1, Some(v)));
                padding.push(true);
            }
        }
        ObliviousAbp {
            field: self.field,
            num_vars: self.num_vars,
            layers,
            padding,
        }
    }

    /// Classifies the normalized program: tight read multiplicity and k-pass
    /// structure.
    pub fn validate(&self) -> Result<Validated> {
        let normalized = self.normalize();
        let class = classify(&normalized.reads(), normalized.read_multiplicity());
        Ok(Validated { class, normalized })
    }

    /// Moves the layers into a new program over `num_vars` variables,
    /// renaming variable `i` to `map[i]`.
    pub fn rename_vars(&self, map: &[usize], num_vars: usize) -> Result<ObliviousAbp> {
        let layers = self
            .layers
            .iter()
            .map(|l| {
                let mut l = l.clone();
                if let Some(v) = l.var() {
                    l.set_var(Some(map[v]));
                }
                l
            })
            .collect();
        Self::with_padding(self.field, num_vars, layers, self.padding.clone())
    }

    /// Evaluates the layers reading exactly the variables in `assignment` up
    /// to (excluding) layer `upto`, returning the row vector that enters
    /// layer `upto`. All earlier layers must be constant or assigned.
    pub(crate) fn prefix_vector(&self, assignment: &Assignment, upto: usize) -> Result<Vec<Fe>> {
        let mut v = vec![Fe::ONE];
        for l in &self.layers[..upto] {
            let m: ConstMatrix = match l.var() {
                None => l.constant_value(),
                Some(x) => match assignment.get(&x) {
                    Some(&a) => l.eval(a),
                    None => {
                        return Err(Error::Precondition(format!(
                            "x{} is read before the cut but not assigned",
                            x + 1
                        )))
                    }
                },
            };
            v = m.left_mul_vec(self.field, &v);
        }
        Ok(v)
    }
}

/// Result of [`ObliviousAbp::validate`].
#[derive(Clone, Debug)]
pub struct Validated {
    pub class: AbpClass,
    /// Copy in which every variable is read exactly `k` times.
    pub normalized: ObliviousAbp,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbpClass {
    /// Maximum number of reads of any variable.
    pub k: usize,
    /// Every pass reads the variables in the same order.
    pub is_k_pass: bool,
    /// The per-pass permutations when the program is k-pass varying-order
    /// (this includes plain k-pass programs); empty otherwise.
    pub pass_orders: Vec<Vec<usize>>,
}

impl AbpClass {
    pub fn is_varying_order(&self) -> bool {
        !self.pass_orders.is_empty()
    }

    pub fn is_read_once(&self) -> bool {
        self.k <= 1
    }
}

fn fmt_order(o: &[usize]) -> String {
    let parts: Vec<String> = o.iter().map(|v| (v + 1).to_string()).collect();
    format!("({})", parts.join(","))
}

impl fmt::Display for AbpClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "read-{}", self.k)?;
        if self.is_k_pass {
            write!(f, ", {}-pass, order {}", self.k, fmt_order(&self.pass_orders[0]))
        } else if self.is_varying_order() {
            let orders: Vec<String> = self.pass_orders.iter().map(|o| fmt_order(o)).collect();
            write!(f, ", {}-pass varying-order, orders {}", self.k, orders.join(" "))
        } else {
            write!(f, ", not k-pass")
        }
    }
}

/// Classifies a read sequence in which every variable occurs exactly `k`
/// times.
pub(crate) fn classify(reads: &[usize], k: usize) -> AbpClass {
    let mut distinct: BTreeMap<usize, ()> = BTreeMap::new();
    for &r in reads {
        distinct.insert(r, ());
    }
    let n = distinct.len();
    let mut pass_orders = Vec::new();
    if k > 0 && reads.len() == n * k {
        let chunks: Vec<Vec<usize>> = reads.chunks(n).map(|c| c.to_vec()).collect();
        let all_perms = chunks.iter().all(|c| {
            let mut s = c.clone();
            s.sort_unstable();
            s.dedup();
            s.len() == n
        });
        if all_perms {
            pass_orders = chunks;
        }
    }
    let is_k_pass = !pass_orders.is_empty() && pass_orders.iter().all(|o| *o == pass_orders[0]);
    AbpClass {
        k,
        is_k_pass,
        pass_orders,
    }
}
