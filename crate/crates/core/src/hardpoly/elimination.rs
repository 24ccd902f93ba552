use crate::abp::parallel_combination;
use crate::algebra::{linalg, Assignment, Fe};
use crate::error::{Error, Result};
use crate::evaldim::{grid_points, Roabp};

/// Outcome of cancelling the first summand of a sum of read-once programs.
#[derive(Clone, Debug)]
pub struct Elimination {
    /// The first `t` variables of the first part's order.
    pub s: Vec<usize>,
    /// The `w + 1` assignments to `s`.
    pub points: Vec<Vec<Fe>>,
    /// A nonzero vector with `sum alpha_i * part_1|_{s = points_i} = 0`.
    pub alpha: Vec<Fe>,
    /// For each later part `j`, a program for
    /// `sum alpha_i * part_j|_{s = points_i}`.
    pub residuals: Vec<Roabp>,
}

/// Takes `w + 1` distinct assignments to the first `t` variables of the first
/// part's order, where `w` is the largest part width. The first part's
/// states after reading those variables live in a space of dimension at most
/// `w`, so some combination `alpha` of the restrictions vanishes. Each later
/// part restricted at the same points and combined with `alpha` is a
/// parallel composition of width at most `w (w + 1)`.
pub fn eliminate_summand(parts: &[Roabp], t: usize) -> Result<Elimination> {
    let Some(first) = parts.first() else {
        return Err(Error::Argument("no summands".into()));
    };
    let a1 = first.abp();
    let field = a1.field();
    let n = a1.num_vars();
    for p in parts {
        field.ensure_same(p.abp().field())?;
        if p.abp().num_vars() != n {
            return Err(Error::ArityMismatch {
                left: n,
                right: p.abp().num_vars(),
            });
        }
    }
    let order = first.order();
    if t == 0 || t >= order.len() {
        return Err(Error::Argument(format!(
            "prefix size {} must lie in 1..{}",
            t,
            order.len()
        )));
    }
    let s: Vec<usize> = order[..t].to_vec();
    let w = parts.iter().map(|p| p.width()).max().unwrap_or(1);
    let bounds = a1.degree_bounds();
    let d = s.iter().map(|&v| bounds[v]).max().unwrap_or(0) as u64;
    let mut m = d + 1;
    while (m as u128).saturating_pow(t as u32) < (w + 1) as u128 {
        m += 1;
    }
    if m > field.modulus() {
        return Err(Error::Precondition(format!(
            "F_{} has too few elements for {} points",
            field.modulus(),
            w + 1
        )));
    }
    let points: Vec<Vec<Fe>> = grid_points(t, m - 1)
        .take(w + 1)
        .map(|g| g.into_iter().map(|x| field.from_u64(x)).collect())
        .collect();
    let assignments: Vec<Assignment> = points
        .iter()
        .map(|p| s.iter().copied().zip(p.iter().copied()).collect())
        .collect();
    let cut = a1
        .layers()
        .iter()
        .position(|l| l.var() == Some(order[t]))
        .expect("order variable is read");
    let states = assignments
        .iter()
        .map(|asg| a1.prefix_vector(asg, cut))
        .collect::<Result<Vec<_>>>()?;
    let alpha = linalg::dependency(field, &states).expect("w + 1 vectors of length at most w are dependent");
    let mut residuals = Vec::with_capacity(parts.len() - 1);
    for p in &parts[1..] {
        let mut copies = Vec::new();
        let mut coeffs = Vec::new();
        for (asg, &c) in assignments.iter().zip(&alpha) {
            if !c.is_zero() {
                copies.push(p.abp().restrict(asg)?);
                coeffs.push(c);
            }
        }
        let combined = parallel_combination(&copies, &coeffs)?;
        let rest: Vec<usize> = p.order().iter().copied().filter(|v| !s.contains(v)).collect();
        residuals.push(Roabp::new(combined, rest)?);
    }
    Ok(Elimination {
        s,
        points,
        alpha,
        residuals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abp::random::random_roabp;
    use crate::algebra::{PrimeField, SparsePoly};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    fn combo(parts: &Roabp, e: &Elimination) -> SparsePoly {
        let g = parts.abp().expand().unwrap();
        let mut acc = SparsePoly::zero(f(), g.num_vars());
        for (p, &c) in e.points.iter().zip(&e.alpha) {
            let asg: Assignment = e.s.iter().copied().zip(p.iter().copied()).collect();
            acc = acc.add(&g.substitute(&asg).unwrap().scale(c)).unwrap();
        }
        acc
    }

    #[test]
    fn single_summand_is_cancelled() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = random_roabp(&mut rng, f(), &[2, 0, 1, 3], 3, 2);
        let r = Roabp::new(a, vec![2, 0, 1, 3]).unwrap();
        let e = eliminate_summand(std::slice::from_ref(&r), 2).unwrap();
        assert!(e.residuals.is_empty());
        assert!(e.alpha.iter().any(|c| !c.is_zero()));
        assert_eq!(e.s, vec![2, 0]);
        assert!(combo(&r, &e).is_zero());
    }

    #[test]
    fn two_summands() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let mut o1: Vec<usize> = (0..5).collect();
            let mut o2 = o1.clone();
            o1.shuffle(&mut rng);
            o2.shuffle(&mut rng);
            let p1 = Roabp::new(random_roabp(&mut rng, f(), &o1, 3, 1), o1).unwrap();
            let p2 = Roabp::new(random_roabp(&mut rng, f(), &o2, 2, 1), o2).unwrap();
            let w = p1.width().max(p2.width());
            for t in 1..=2 {
                let e = eliminate_summand(&[p1.clone(), p2.clone()], t).unwrap();
                assert_eq!(e.points.len(), w + 1);
                assert!(combo(&p1, &e).is_zero());
                let res = &e.residuals[0];
                assert_eq!(res.abp().expand().unwrap(), combo(&p2, &e));
                assert!(res.width_profile().iter().all(|&c| c <= w * (w + 1)));
            }
        }
    }

    #[test]
    fn prefix_size_errors() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let r = Roabp::new(random_roabp(&mut rng, f(), &[0, 1], 2, 1), vec![0, 1]).unwrap();
        assert!(eliminate_summand(std::slice::from_ref(&r), 2).is_err());
        assert!(eliminate_summand(std::slice::from_ref(&r), 0).is_err());
        assert!(eliminate_summand(&[], 1).is_err());
    }
}
