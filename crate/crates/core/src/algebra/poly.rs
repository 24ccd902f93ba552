use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::field::{Fe, PrimeField};
use crate::error::{Error, Result};

/// Partial assignment of variables to field values.
pub type Assignment = BTreeMap<usize, Fe>;

/// Exponent vector of a monomial, one entry per variable.
pub type Exponents = Vec<u32>;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Mul,
}

/// Multivariate polynomial stored as a map from exponent vector to nonzero
/// coefficient. Zero coefficients are never stored, so structural equality is
/// polynomial identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    field: PrimeField,
    num_vars: usize,
    terms: BTreeMap<Exponents, Fe>,
}

impl SparsePoly {
    pub fn zero(field: PrimeField, num_vars: usize) -> Self {
        SparsePoly {
            field,
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: PrimeField, num_vars: usize, c: Fe) -> Self {
        let mut p = Self::zero(field, num_vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; num_vars], c);
        }
        p
    }

    pub fn one(field: PrimeField, num_vars: usize) -> Self {
        Self::constant(field, num_vars, Fe::ONE)
    }

    /// The polynomial `x_index`.
    pub fn var(field: PrimeField, num_vars: usize, index: usize) -> Result<Self> {
        if index >= num_vars {
            return Err(Error::VariableOutOfRange { index, num_vars });
        }
        let mut e = vec![0; num_vars];
        e[index] = 1;
        let mut p = Self::zero(field, num_vars);
        p.terms.insert(e, Fe::ONE);
        Ok(p)
    }

    pub fn from_terms<I>(field: PrimeField, num_vars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponents, Fe)>,
    {
        let mut p = Self::zero(field, num_vars);
        for (e, c) in terms {
            if e.len() != num_vars {
                return Err(Error::ArityMismatch {
                    left: num_vars,
                    right: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, e: Exponents, c: Fe) {
        if c.is_zero() {
            return;
        }
        let field = self.field;
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = field.add(*o.get(), c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, Fe)> {
        self.terms.iter().map(|(e, c)| (e, *c))
    }

    pub fn coeff(&self, e: &[u32]) -> Fe {
        self.terms.get(e).copied().unwrap_or(Fe::ZERO)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    pub fn individual_degrees(&self) -> Vec<u32> {
        let mut d = vec![0; self.num_vars];
        for e in self.terms.keys() {
            for (di, &ei) in d.iter_mut().zip(e) {
                *di = (*di).max(ei);
            }
        }
        d
    }

    /// Variables that occur with positive exponent in some term.
    pub fn support(&self) -> BTreeSet<usize> {
        let mut s = BTreeSet::new();
        for e in self.terms.keys() {
            for (i, &ei) in e.iter().enumerate() {
                if ei > 0 {
                    s.insert(i);
                }
            }
        }
        s
    }

    fn check_compatible(&self, other: &SparsePoly) -> Result<()> {
        self.field.ensure_same(other.field)?;
        if self.num_vars != other.num_vars {
            return Err(Error::ArityMismatch {
                left: self.num_vars,
                right: other.num_vars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), *c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SparsePoly {
        self.scale(self.field.neg(Fe::ONE))
    }

    pub fn scale(&self, c: Fe) -> SparsePoly {
        let mut out = Self::zero(self.field, self.num_vars);
        if c.is_zero() {
            return out;
        }
        for (e, v) in &self.terms {
            out.terms.insert(e.clone(), self.field.mul(*v, c));
        }
        out
    }

    pub fn mul(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.field, self.num_vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, self.field.mul(*c1, *c2));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<SparsePoly> {
        let mut acc = Self::one(self.field, self.num_vars);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `f|_{x_S = a}`: assigned variables keep their index but no longer occur.
    pub fn substitute(&self, assignment: &Assignment) -> Result<SparsePoly> {
        for &i in assignment.keys() {
            if i >= self.num_vars {
                return Err(Error::VariableOutOfRange {
                    index: i,
                    num_vars: self.num_vars,
                });
            }
        }
        if assignment.is_empty() {
            return Ok(self.clone());
        }
        let field = self.field;
        let mut out = Self::zero(field, self.num_vars);
        for (e, c) in &self.terms {
            let mut coeff = *c;
            let mut e2 = e.clone();
            for (&i, &a) in assignment {
                if e[i] > 0 {
                    coeff = field.mul(coeff, field.pow(a, e[i] as u64));
                    e2[i] = 0;
                }
            }
            out.add_term(e2, coeff);
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[Fe]) -> Result<Fe> {
        if point.len() != self.num_vars {
            return Err(Error::PointLength {
                expected: self.num_vars,
                got: point.len(),
            });
        }
        let field = self.field;
        let mut acc = Fe::ZERO;
        for (e, c) in &self.terms {
            let mut t = *c;
            for (i, &ei) in e.iter().enumerate() {
                if ei > 0 {
                    t = field.mul(t, field.pow(point[i], ei as u64));
                }
            }
            acc = field.add(acc, t);
        }
        Ok(acc)
    }

    /// Renames variable `i` to `map[i]` in a polynomial over `new_num_vars`
    /// variables. Variables mapped to `None` must not occur.
    pub fn rename(&self, map: &[Option<usize>], new_num_vars: usize) -> Result<SparsePoly> {
        let mut out = Self::zero(self.field, new_num_vars);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; new_num_vars];
            for (i, &ei) in e.iter().enumerate() {
                if ei == 0 {
                    continue;
                }
                match map.get(i).copied().flatten() {
                    Some(j) if j < new_num_vars => e2[j] += ei,
                    _ => {
                        return Err(Error::Argument(format!(
                            "variable x{} occurs but has no image",
                            i + 1
                        )))
                    }
                }
            }
            out.add_term(e2, *c);
        }
        Ok(out)
    }
}

/// `f + g` or `f * g` with arity and field checks.
pub fn poly_arith(f: &SparsePoly, g: &SparsePoly, op: PolyOp) -> Result<SparsePoly> {
    match op {
        PolyOp::Add => f.add(g),
        PolyOp::Mul => f.mul(g),
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest total degree first, reads more naturally
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        for (k, (e, c)) in terms.into_iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &ei)| ei > 0)
                .map(|(i, &ei)| {
                    if ei == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, ei)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", c)?;
            } else if c.value() == 1 {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", c, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Univariate polynomial helpers on coefficient lists, lowest degree first.
pub mod uni {
    use super::{Fe, PrimeField};

    pub fn trim(mut c: Vec<Fe>) -> Vec<Fe> {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        c
    }

    pub fn degree(c: &[Fe]) -> u32 {
        c.iter()
            .rposition(|x| !x.is_zero())
            .map(|d| d as u32)
            .unwrap_or(0)
    }

    pub fn eval(field: PrimeField, c: &[Fe], x: Fe) -> Fe {
        c.iter()
            .rev()
            .fold(Fe::ZERO, |acc, &a| field.add(field.mul(acc, x), a))
    }

    pub fn add(field: PrimeField, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(Fe::ZERO);
                let y = b.get(i).copied().unwrap_or(Fe::ZERO);
                field.add(x, y)
            })
            .collect();
        trim(out)
    }

    pub fn scale(field: PrimeField, a: &[Fe], c: Fe) -> Vec<Fe> {
        trim(a.iter().map(|&x| field.mul(x, c)).collect())
    }

    pub fn mul(field: PrimeField, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![Fe::ZERO; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = field.add(out[i + j], field.mul(x, y));
            }
        }
        trim(out)
    }

    /// Lagrange basis polynomials for the nodes `0, 1, ..., m-1`.
    /// Requires `m <= p`.
    pub fn lagrange_basis(field: PrimeField, m: usize) -> Vec<Vec<Fe>> {
        let nodes: Vec<Fe> = (0..m as u64).map(|v| field.from_u64(v)).collect();
        (0..m)
            .map(|c| {
                let mut num = vec![Fe::ONE];
                let mut den = Fe::ONE;
                for (j, &xj) in nodes.iter().enumerate() {
                    if j == c {
                        continue;
                    }
                    num = mul(field, &num, &[field.neg(xj), Fe::ONE]);
                    den = field.mul(den, field.sub(nodes[c], xj));
                }
                let inv = field.inv(den).expect("distinct interpolation nodes");
                scale(field, &num, inv)
            })
            .collect()
    }
}
