use std::fmt;

use crate::abp::{sum_of_programs, ObliviousAbp};
use crate::algebra::{Fe, PrimeField, SparsePoly, UniMatrix};
use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Pn,
    Qn,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Pn => "P",
            Family::Qn => "Q",
        })
    }
}

#[derive(Clone, Debug)]
pub struct HardFamilyInstance {
    pub family: Family,
    pub n: usize,
    /// Expanded polynomial, when its size is within the guard.
    pub polynomial: Option<SparsePoly>,
    pub realization: ObliviousAbp,
    /// For `Q_n`: matching `i` as pairs `(j, m)` meaning `x_j` is paired with
    /// `y_m` (0-based). Empty for `P_n`.
    pub matchings: Vec<Vec<(usize, usize)>>,
}

/// Index of `x_{i,j}` (0-based) among the `n^2` variables of `P_n`.
pub fn pn_var(n: usize, i: usize, j: usize) -> usize {
    i * n + j
}

/// Variable indices of `Q_n`: `x_j`, then `y_j`, then `z_i`.
#[derive(Copy, Clone, Debug)]
pub struct QnVars {
    pub n: usize,
}

impl QnVars {
    pub fn x(&self, j: usize) -> usize {
        j
    }

    pub fn y(&self, j: usize) -> usize {
        self.n + j
    }

    pub fn z(&self, i: usize) -> usize {
        2 * self.n + i
    }

    pub fn num_vars(&self) -> usize {
        3 * self.n
    }

    /// Human-readable name of a variable.
    pub fn name(&self, v: usize) -> String {
        let (c, i) = match v / self.n {
            0 => ('x', v),
            1 => ('y', v - self.n),
            _ => ('z', v - 2 * self.n),
        };
        format!("{}{}", c, i + 1)
    }
}

pub fn qn_vars(n: usize) -> QnVars {
    QnVars { n }
}

fn linear_sum(field: PrimeField, num_vars: usize, vars: &[usize]) -> Result<SparsePoly> {
    let mut s = SparsePoly::zero(field, num_vars);
    for &v in vars {
        s = s.add(&SparsePoly::var(field, num_vars, v)?)?;
    }
    Ok(s)
}

/// `P_n` by multiplying out its `2n` linear factors.
pub fn pn_polynomial(field: PrimeField, n: usize) -> Result<SparsePoly> {
    let nv = n * n;
    let mut p = SparsePoly::one(field, nv);
    for i in 0..n {
        let row: Vec<usize> = (0..n).map(|j| pn_var(n, i, j)).collect();
        p = p.mul(&linear_sum(field, nv, &row)?)?;
    }
    for j in 0..n {
        let col: Vec<usize> = (0..n).map(|i| pn_var(n, i, j)).collect();
        p = p.mul(&linear_sum(field, nv, &col)?)?;
    }
    Ok(p)
}

fn entry(field: PrimeField, c0: u64, c1: u64) -> Vec<Fe> {
    let v = vec![field.from_u64(c0), field.from_u64(c1)];
    crate::algebra::poly::uni::trim(v)
}

/// Layers of a width-2 chain computing the sum of `vars`, read in order.
fn sum_chain(field: PrimeField, vars: &[usize]) -> Result<Vec<UniMatrix>> {
    let m = vars.len();
    let x = || entry(field, 0, 1);
    let one = || entry(field, 1, 0);
    let zero = Vec::new;
    if m == 1 {
        return Ok(vec![UniMatrix::new(field, 1, 1, Some(vars[0]), vec![x()])?]);
    }
    let mut layers = Vec::with_capacity(m);
    for (t, &v) in vars.iter().enumerate() {
        let l = if t == 0 {
            UniMatrix::new(field, 1, 2, Some(v), vec![one(), x()])?
        } else if t + 1 == m {
            UniMatrix::new(field, 2, 1, Some(v), vec![x(), one()])?
        } else {
            UniMatrix::new(field, 2, 2, Some(v), vec![one(), x(), zero(), one()])?
        };
        layers.push(l);
    }
    Ok(layers)
}

fn pow_size(base: u128, exp: u32) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base))
}

/// `P_n` with its 2-pass program: the first pass reads the matrix row by
/// row, the second column by column; each row or column sum is a width-2
/// chain. The polynomial is expanded only when `n^(2n) <= guard`.
pub fn gen_pn(field: PrimeField, n: usize, guard: u128) -> Result<HardFamilyInstance> {
    if n == 0 {
        return Err(Error::Argument("P_n needs n >= 1".into()));
    }
    let mut layers = Vec::with_capacity(2 * n * n);
    for i in 0..n {
        let row: Vec<usize> = (0..n).map(|j| pn_var(n, i, j)).collect();
        layers.extend(sum_chain(field, &row)?);
    }
    for j in 0..n {
        let col: Vec<usize> = (0..n).map(|i| pn_var(n, i, j)).collect();
        layers.extend(sum_chain(field, &col)?);
    }
    let realization = ObliviousAbp::new(field, n * n, layers)?;
    let polynomial = if pow_size(n as u128, 2 * n as u32) <= guard {
        Some(pn_polynomial(field, n)?)
    } else {
        None
    };
    Ok(HardFamilyInstance {
        family: Family::Pn,
        n,
        polynomial,
        realization,
        matchings: Vec::new(),
    })
}

/// The `n` matchings of `Q_n`: matching `i` pairs `x_j` with
/// `y_{(i + j + 1) mod n}` (0-based).
pub fn qn_matchings(n: usize) -> Vec<Vec<(usize, usize)>> {
    (0..n)
        .map(|i| (0..n).map(|j| (j, (i + j + 1) % n)).collect())
        .collect()
}

/// Checks that the matchings are perfect, pairwise edge-disjoint, and
/// together cover every `x`-`y` pair.
pub fn check_matchings(n: usize, matchings: &[Vec<(usize, usize)>]) -> bool {
    let mut seen = vec![false; n * n];
    for m in matchings {
        let mut xs = vec![false; n];
        let mut ys = vec![false; n];
        for &(x, y) in m {
            if x >= n || y >= n || xs[x] || ys[y] || seen[x * n + y] {
                return false;
            }
            xs[x] = true;
            ys[y] = true;
            seen[x * n + y] = true;
        }
        if m.len() != n {
            return false;
        }
    }
    seen.iter().all(|&s| s)
}

/// `Q_n` expanded from its depth-3 form.
pub fn qn_polynomial(field: PrimeField, n: usize) -> Result<SparsePoly> {
    let q = qn_vars(n);
    let nv = q.num_vars();
    let mut total = SparsePoly::zero(field, nv);
    for (i, m) in qn_matchings(n).iter().enumerate() {
        let mut term = SparsePoly::var(field, nv, q.z(i))?;
        for &(x, y) in m {
            term = term.mul(&linear_sum(field, nv, &[q.x(x), q.y(y)])?)?;
        }
        total = total.add(&term)?;
    }
    Ok(total)
}

/// `Q_n` with an oblivious program running its `n` summands one after
/// another. Summand `i` reads `z_i`, then `x_j` and its partner `y` for
/// each `j`. The result reads every `x` and `y` variable `n` times and has
/// width at most 4. The polynomial is expanded when `n * 2^n <= guard`.
pub fn gen_qn(field: PrimeField, n: usize, guard: u128) -> Result<HardFamilyInstance> {
    if n < 2 {
        return Err(Error::Argument("Q_n needs n >= 2".into()));
    }
    let q = qn_vars(n);
    let nv = q.num_vars();
    let matchings = qn_matchings(n);
    let mut parts = Vec::with_capacity(n);
    for (i, m) in matchings.iter().enumerate() {
        let mut layers = vec![UniMatrix::new(field, 1, 1, Some(q.z(i)), vec![entry(field, 0, 1)])?];
        for &(x, y) in m {
            layers.push(UniMatrix::new(
                field,
                1,
                2,
                Some(q.x(x)),
                vec![entry(field, 0, 1), entry(field, 1, 0)],
            )?);
            layers.push(UniMatrix::new(
                field,
                2,
                1,
                Some(q.y(y)),
                vec![entry(field, 1, 0), entry(field, 0, 1)],
            )?);
        }
        parts.push(ObliviousAbp::new(field, nv, layers)?);
    }
    let realization = sum_of_programs(&parts)?;
    let polynomial = if (n as u128).saturating_mul(pow_size(2, n as u32)) <= guard {
        Some(qn_polynomial(field, n)?)
    } else {
        None
    };
    Ok(HardFamilyInstance {
        family: Family::Qn,
        n,
        polynomial,
        realization,
        matchings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abp::DEFAULT_EXPANSION_GUARD as G;
    use crate::algebra::Assignment;

    fn f() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    #[test]
    fn p1_is_a_square() {
        let p = gen_pn(f(), 1, G).unwrap();
        assert_eq!(p.realization.layers().len(), 2);
        let x = SparsePoly::var(f(), 1, 0).unwrap();
        assert_eq!(p.polynomial.unwrap(), x.mul(&x).unwrap());
    }

    #[test]
    fn p2_formula_and_realization() {
        let p = gen_pn(f(), 2, G).unwrap();
        let x = |i, j| SparsePoly::var(f(), 4, pn_var(2, i, j)).unwrap();
        let sum = |a: SparsePoly, b: SparsePoly| a.add(&b).unwrap();
        let expected = sum(x(0, 0), x(0, 1))
            .mul(&sum(x(1, 0), x(1, 1)))
            .unwrap()
            .mul(&sum(x(0, 0), x(1, 0)))
            .unwrap()
            .mul(&sum(x(0, 1), x(1, 1)))
            .unwrap();
        assert_eq!(p.polynomial.as_ref().unwrap(), &expected);
        assert_eq!(p.realization.expand().unwrap(), expected);
        assert_eq!(p.realization.evaluate(&[Fe::ONE; 4]).unwrap(), Fe(16));
        let class = p.realization.validate().unwrap().class;
        assert_eq!(class.k, 2);
        assert!(!class.is_k_pass && class.is_varying_order());
        assert_eq!(p.realization.width(), 2);
    }

    #[test]
    fn pn_symbolic_guard() {
        let p = gen_pn(f(), 5, G).unwrap();
        assert!(p.polynomial.is_none());
        assert_eq!(p.realization.num_vars(), 25);
    }

    #[test]
    fn q2_formula() {
        let q = gen_qn(f(), 2, G).unwrap();
        let v = qn_vars(2);
        let var = |i| SparsePoly::var(f(), 6, i).unwrap();
        let lin = |a, b| var(a).add(&var(b)).unwrap();
        let expected = var(v.z(0))
            .mul(&lin(v.x(0), v.y(1)))
            .unwrap()
            .mul(&lin(v.x(1), v.y(0)))
            .unwrap()
            .add(
                &var(v.z(1))
                    .mul(&lin(v.x(0), v.y(0)))
                    .unwrap()
                    .mul(&lin(v.x(1), v.y(1)))
                    .unwrap(),
            )
            .unwrap();
        assert_eq!(q.polynomial.as_ref().unwrap(), &expected);
        assert_eq!(q.realization.expand().unwrap(), expected);
        assert_eq!(q.realization.evaluate(&[Fe::ONE; 6]).unwrap(), Fe(8));
        assert!(q.realization.width() <= 4);
    }

    #[test]
    fn fixing_z_projects_to_one_matching() {
        let n = 3;
        let q = gen_qn(f(), n, G).unwrap();
        let v = qn_vars(n);
        let poly = q.polynomial.unwrap();
        for i in 0..n {
            let asg: Assignment = (0..n)
                .map(|j| (v.z(j), if i == j { Fe::ONE } else { Fe::ZERO }))
                .collect();
            let mut fi = SparsePoly::one(f(), v.num_vars());
            for &(x, y) in &q.matchings[i] {
                let l = SparsePoly::var(f(), 9, v.x(x))
                    .unwrap()
                    .add(&SparsePoly::var(f(), 9, v.y(y)).unwrap())
                    .unwrap();
                fi = fi.mul(&l).unwrap();
            }
            assert_eq!(poly.substitute(&asg).unwrap(), fi);
        }
    }

    #[test]
    fn matchings_decompose_the_complete_graph() {
        for n in 1..=8 {
            assert!(check_matchings(n, &qn_matchings(n)), "n = {n}");
        }
        let mut bad = qn_matchings(3);
        bad[1] = bad[0].clone();
        assert!(!check_matchings(3, &bad));
    }

    #[test]
    fn names() {
        let v = qn_vars(3);
        assert_eq!(v.name(0), "x1");
        assert_eq!(v.name(4), "y2");
        assert_eq!(v.name(8), "z3");
    }
}
