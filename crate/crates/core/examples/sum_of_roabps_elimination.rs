//! Cancel the first of three read-once summands by combining restrictions.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use readk::abp::random::random_roabp;
use readk::evaldim::Roabp;
use readk::hardpoly::eliminate_summand;
use readk::PrimeField;

fn main() -> readk::Result<()> {
    let f = PrimeField::new(101)?;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let n = 6;
    let mut parts = Vec::new();
    for _ in 0..3 {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        parts.push(Roabp::new(random_roabp(&mut rng, f, &order, 2, 1), order)?);
    }
    let e = eliminate_summand(&parts, 2)?;
    println!("S = {:?}", e.s.iter().map(|v| v + 1).collect::<Vec<_>>());
    for (p, a) in e.points.iter().zip(&e.alpha) {
        println!("  {} at {:?}", a, p.iter().map(|x| x.value()).collect::<Vec<_>>());
    }
    for (j, r) in e.residuals.iter().enumerate() {
        println!("part {} residual widths {:?} (bound 6)", j + 2, r.width_profile());
    }
    Ok(())
}
