use rayon::prelude::*;

use super::dim::{eval_dim, partial_derivative_matrix, restriction_vector};
use crate::abp::ObliviousAbp;
use crate::algebra::linalg::EchelonBasis;
use crate::algebra::poly::uni;
use crate::algebra::{Fe, SparsePoly, UniMatrix};
use crate::error::{Error, Result};

/// A read-once oblivious program together with its variable order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Roabp {
    abp: ObliviousAbp,
    order: Vec<usize>,
}

impl Roabp {
    /// Checks that the non-constant layers read each variable of `order`
    /// exactly once, in that order. Variables outside `order` are not read.
    pub fn new(abp: ObliviousAbp, order: Vec<usize>) -> Result<Self> {
        if abp.reads() != order {
            return Err(Error::Structure(format!(
                "layers read {:?}, expected order {:?}",
                abp.reads(),
                order
            )));
        }
        let mut seen = order.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != order.len() {
            return Err(Error::Structure(format!("order {:?} repeats a variable", order)));
        }
        Ok(Roabp { abp, order })
    }

    pub fn abp(&self) -> &ObliviousAbp {
        &self.abp
    }

    pub fn into_abp(self) -> ObliviousAbp {
        self.abp
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Number of nodes at each of the internal cuts.
    pub fn width_profile(&self) -> Vec<usize> {
        self.abp.cut_widths()
    }

    pub fn width(&self) -> usize {
        self.abp.width()
    }
}

pub(crate) fn check_order(n: usize, order: &[usize]) -> Result<()> {
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || seen[v] {
            return Err(Error::Argument(format!(
                "order {:?} is not a permutation of {} variables",
                order, n
            )));
        }
        seen[v] = true;
    }
    if order.len() != n {
        return Err(Error::Argument(format!(
            "order {:?} is not a permutation of {} variables",
            order, n
        )));
    }
    Ok(())
}

/// Evaluation dimension at each internal cut of `order`: entry `i` is the
/// dimension with respect to the first `i + 1` variables. This is the
/// smallest possible width profile of a read-once program in that order.
pub fn roabp_width_profile(f: &SparsePoly, order: &[usize]) -> Result<Vec<usize>> {
    check_order(f.num_vars(), order)?;
    let n = order.len();
    (1..n)
        .into_par_iter()
        .map(|i| eval_dim(f, &order[..i], &order[i..], &[]).map(|r| r.dimension))
        .collect()
}

/// Builds a read-once program for `f` in the given order whose width at
/// every cut equals the evaluation dimension there.
///
/// At cut `i` the basis is grown greedily from the candidates
/// `B_{i-1} x {0, ..., d_i}` in lexicographic order, where `d_i` is the
/// degree of `f` in the `i`-th variable. Layer entries are interpolated
/// from the coordinates of the candidates in the next basis.
pub fn roabp_synthesize(f: &SparsePoly, order: &[usize]) -> Result<Roabp> {
    let field = f.field();
    let n = f.num_vars();
    check_order(n, order)?;
    let degs: Vec<u32> = order.iter().map(|&v| f.degree_in(v)).collect();
    if let Some(&d) = degs.iter().max() {
        if d as u64 >= field.modulus() {
            return Err(Error::Precondition(format!(
                "individual degree {} needs a field larger than F_{}",
                d,
                field.modulus()
            )));
        }
    }
    if n == 0 {
        let c = f.coeff(&[]);
        let layer = UniMatrix::new(field, 1, 1, None, vec![vec![c]])?;
        return Roabp::new(ObliviousAbp::new(field, 0, vec![layer])?, vec![]);
    }
    if n == 1 {
        let coeffs: Vec<Fe> = (0..=degs[0]).map(|e| f.coeff(&[e])).collect();
        let layer = UniMatrix::new(field, 1, 1, Some(order[0]), vec![coeffs])?;
        return Roabp::new(ObliviousAbp::new(field, 1, vec![layer])?, order.to_vec());
    }
    let node = |c: u32| field.from_u64(c as u64);
    let mut layers = Vec::with_capacity(n);
    // previous basis: assignments to order[..i]
    let mut prev: Vec<Vec<Fe>> = vec![vec![]];
    for i in 1..n {
        let prefix = &order[..i];
        let m = partial_derivative_matrix(f, prefix, &order[i..]);
        let mut basis = EchelonBasis::new(field, m.col_monomials.len());
        let mut chosen: Vec<Vec<Fe>> = Vec::new();
        let d = degs[i - 1];
        // candidate vectors indexed [s][c]
        let mut cand: Vec<Vec<Vec<Fe>>> = Vec::with_capacity(prev.len());
        for b in &prev {
            let mut row = Vec::with_capacity(d as usize + 1);
            for c in 0..=d {
                let mut a = b.clone();
                a.push(node(c));
                let v = restriction_vector(&m, f, &a);
                if basis.insert(&v) {
                    chosen.push(a);
                }
                row.push(v);
            }
            cand.push(row);
        }
        let lagrange = uni::lagrange_basis(field, d as usize + 1);
        let width = chosen.len();
        let mut entries = vec![Vec::new(); prev.len() * width];
        for (s, row) in cand.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                let coords = basis.express(v).expect("candidate lies in the span");
                for (t, &lam) in coords.iter().enumerate() {
                    if lam.is_zero() {
                        continue;
                    }
                    let cell = &mut entries[s * width + t];
                    *cell = uni::add(field, cell, &uni::scale(field, &lagrange[c], lam));
                }
            }
        }
        layers.push(UniMatrix::new(field, prev.len(), width, Some(order[i - 1]), entries)?);
        prev = chosen;
    }
    // last layer: f with all but the last variable fixed to a basis point
    let last = order[n - 1];
    let mut entries = Vec::with_capacity(prev.len());
    for b in &prev {
        let sub = order[..n - 1].iter().copied().zip(b.iter().copied()).collect();
        let g = f.substitute(&sub)?;
        let coeffs: Vec<Fe> = (0..=degs[n - 1])
            .map(|e| {
                let mut ex = vec![0; n];
                ex[last] = e;
                g.coeff(&ex)
            })
            .collect();
        entries.push(coeffs);
    }
    layers.push(UniMatrix::new(field, prev.len(), 1, Some(last), entries)?);
    Roabp::new(ObliviousAbp::new(field, n, layers)?, order.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;

    fn f() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    fn x(n: usize, i: usize) -> SparsePoly {
        SparsePoly::var(f(), n, i).unwrap()
    }

    #[test]
    fn product_is_width_one() {
        let p = x(2, 0).mul(&x(2, 1)).unwrap();
        assert_eq!(roabp_width_profile(&p, &[0, 1]).unwrap(), vec![1]);
        let r = roabp_synthesize(&p, &[0, 1]).unwrap();
        assert_eq!(r.width_profile(), vec![1]);
        assert_eq!(r.abp().expand().unwrap(), p);
    }

    #[test]
    fn sum_is_width_two() {
        let p = x(2, 0).add(&x(2, 1)).unwrap();
        assert_eq!(roabp_width_profile(&p, &[0, 1]).unwrap(), vec![2]);
        let r = roabp_synthesize(&p, &[1, 0]).unwrap();
        assert_eq!(r.width_profile(), vec![2]);
        assert_eq!(r.abp().expand().unwrap(), p);
    }

    #[test]
    fn zero_and_constants() {
        let z = SparsePoly::zero(f(), 3);
        let r = roabp_synthesize(&z, &[2, 0, 1]).unwrap();
        assert!(r.abp().expand().unwrap().is_zero());
        assert_eq!(r.width_profile(), vec![0, 0]);
        let c = SparsePoly::constant(f(), 0, Fe(7));
        assert_eq!(roabp_synthesize(&c, &[]).unwrap().abp().expand().unwrap(), c);
        let u = x(1, 0).pow(3).unwrap();
        assert_eq!(roabp_synthesize(&u, &[0]).unwrap().abp().expand().unwrap(), u);
    }

    #[test]
    fn higher_degree_mixture() {
        // x1^2 x2 + x2^2 x3 + 3 x1 x3 + 5
        let n = 3;
        let p = x(n, 0)
            .pow(2)
            .unwrap()
            .mul(&x(n, 1))
            .unwrap()
            .add(&x(n, 1).pow(2).unwrap().mul(&x(n, 2)).unwrap())
            .unwrap()
            .add(&x(n, 0).mul(&x(n, 2)).unwrap().scale(Fe(3)))
            .unwrap()
            .add(&SparsePoly::constant(f(), n, Fe(5)))
            .unwrap();
        for order in [[0, 1, 2], [2, 0, 1], [1, 2, 0]] {
            let r = roabp_synthesize(&p, &order).unwrap();
            assert_eq!(r.abp().expand().unwrap(), p);
            assert_eq!(r.width_profile(), roabp_width_profile(&p, &order).unwrap());
        }
    }

    #[test]
    fn bad_orders() {
        let p = x(2, 0);
        assert!(roabp_synthesize(&p, &[0]).is_err());
        assert!(roabp_synthesize(&p, &[0, 0]).is_err());
        assert!(roabp_width_profile(&p, &[0, 2]).is_err());
    }
}
