//! Collapse a random 2-pass program to a read-once program in its pass order.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use readk::abp::random::{random_abp, RandomAbpParams, ReadShape};
use readk::evaldim::{k_gap_check, k_pass_to_roabp};
use readk::PrimeField;

fn main() -> readk::Result<()> {
    let f = PrimeField::new(101)?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let params = RandomAbpParams {
        zero_prob: 0.0,
        ..RandomAbpParams::new(5, 2, 2, 1, ReadShape::KPass)
    };
    let a = random_abp(&mut rng, f, &params);
    let v = a.validate()?;
    println!("input: {} of width {}", v.class, a.width());
    let order = &v.class.pass_orders[0];
    let renamed = {
        let mut map = vec![0; a.num_vars()];
        for (i, &x) in order.iter().enumerate() {
            map[x] = i;
        }
        a.rename_vars(&map, a.num_vars())?
    };
    let gaps: Vec<usize> = (1..=a.num_vars()).map(|i| k_gap_check(&renamed, i)).collect();
    println!("gaps along the pass order: {:?}", gaps);
    let r = k_pass_to_roabp(&a)?;
    println!("read-once widths {:?}, bound w^4 = {}", r.width_profile(), a.width().pow(4));
    assert_eq!(r.abp().expand()?, a.expand()?);
    Ok(())
}
