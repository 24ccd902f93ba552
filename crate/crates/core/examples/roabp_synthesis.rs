//! Minimal read-once programs for the same polynomial in two orders.

use readk::algebra::SparsePoly;
use readk::evaldim::{roabp_synthesize, roabp_width_profile};
use readk::PrimeField;

fn main() -> readk::Result<()> {
    let f = PrimeField::new(101)?;
    let n = 6;
    let v = |i| SparsePoly::var(f, n, i);
    // x1 x4 + x2 x5 + x3 x6 is narrow in the order 1 4 2 5 3 6 and wide in 1..6
    let mut p = SparsePoly::zero(f, n);
    for i in 0..3 {
        p = p.add(&v(i)?.mul(&v(i + 3)?)?)?;
    }
    for order in [vec![0, 3, 1, 4, 2, 5], vec![0, 1, 2, 3, 4, 5]] {
        let r = roabp_synthesize(&p, &order)?;
        assert_eq!(r.abp().expand()?, p);
        println!(
            "order {:?}: widths {:?} (evaluation dimensions {:?})",
            order.iter().map(|i| i + 1).collect::<Vec<_>>(),
            r.width_profile(),
            roabp_width_profile(&p, &order)?
        );
    }
    Ok(())
}
