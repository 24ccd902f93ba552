//! Identity test of a nonzero program and of a cancelling pair of copies.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use readk::abp::parallel_combination;
use readk::abp::random::{random_abp, RandomAbpParams, ReadShape};
use readk::pit::{product_hitting_set, read_k_pit, Generator, PitOptions};
use readk::PrimeField;

fn main() -> readk::Result<()> {
    let f = PrimeField::new(101)?;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let params = RandomAbpParams {
        zero_prob: 0.1,
        ..RandomAbpParams::new(6, 3, 2, 1, ReadShape::Shuffled)
    };
    let a = random_abp(&mut rng, f, &params);
    let zero = parallel_combination(&[a.clone(), a.clone()], &[f.elem(5), f.elem(-5)])?;
    for (name, prog) in [("random read-3", &a), ("difference of copies", &zero)] {
        for generator in [Generator::Grid, Generator::Random { seed: 1, count: Some(64) }] {
            let opts = PitOptions {
                generator,
                ..PitOptions::default()
            };
            let v = read_k_pit(prog, &opts)?;
            println!(
                "{:22} {:6} rounds {} -> {}",
                name,
                v.provenance.to_string(),
                v.iterations.len(),
                match &v.witness {
                    Some(w) => format!("nonzero at {:?}", w.iter().map(|x| x.value()).collect::<Vec<_>>()),
                    None => "zero".into(),
                }
            );
        }
    }
    let h = product_hitting_set(&a, &PitOptions::default())?;
    println!("product hitting set size {}", h.size());
    Ok(())
}
