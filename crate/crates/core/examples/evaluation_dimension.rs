//! Evaluation dimension of the inner product x1 y1 + x2 y2 + x3 y3 under a
//! few splits of its variables.

use readk::algebra::SparsePoly;
use readk::evaldim::{eval_dim, partial_derivative_matrix};
use readk::PrimeField;

fn main() -> readk::Result<()> {
    let f = PrimeField::new(101)?;
    let n = 6;
    let mut ip = SparsePoly::zero(f, n);
    for i in 0..3 {
        ip = ip.add(&SparsePoly::var(f, n, i)?.mul(&SparsePoly::var(f, n, i + 3)?)?)?;
    }
    println!("f = {}", ip);
    let splits: [(&str, Vec<usize>); 3] = [
        ("x against y", vec![0, 1, 2]),
        ("x1 y1 x2 against the rest", vec![0, 3, 1]),
        ("x1 against the rest", vec![0]),
    ];
    for (name, s) in splits {
        let t: Vec<usize> = (0..n).filter(|v| !s.contains(v)).collect();
        let r = eval_dim(&ip, &s, &t, &[])?;
        let m = partial_derivative_matrix(&ip, &s, &t);
        println!("{:28} dim {} ({} x {} coefficient matrix)", name, r.dimension, m.row_monomials.len(), m.col_monomials.len());
    }
    Ok(())
}
