//! Finite-size dimension experiments for P_3 and Q_4, plus a U/V/W block
//! partition of Q_3.

use readk::hardpoly::{block_partition, experiment_pn_evaldim, experiment_qn_evaldim, gen_qn, BlockSearch};
use readk::PrimeField;

fn main() -> readk::Result<()> {
    let f = PrimeField::new(101)?;
    let rows = experiment_pn_evaldim(f, 3, &[1, 2, 3, 4])?;
    for t in 1..=4 {
        let dims: Vec<usize> = rows.iter().filter(|r| r.t == t).map(|r| r.dimension).collect();
        println!(
            "P_3, |S| = {}: min dimension {} over {} subsets, floor {}",
            t,
            dims.iter().min().unwrap(),
            dims.len(),
            1 << (t as f64).sqrt().ceil() as u32
        );
    }
    let q = experiment_qn_evaldim(f, 4, 20, 1)?;
    for r in q.iter().take(5) {
        println!("Q_4 S={} T={}: dim {} >= 2^{}", r.s, r.t, r.dimension, r.cross_edges);
    }
    let q3 = gen_qn(f, 3, 1 << 20)?.realization;
    let b = block_partition(&q3, 2, BlockSearch::Exhaustive)?;
    println!("Q_3 blocks {:?}: |U| {} |V| {} |W| {}", b.blocks, b.u.len(), b.v.len(), b.w.len());
    Ok(())
}
