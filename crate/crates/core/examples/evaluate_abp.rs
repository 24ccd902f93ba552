//! Build a small read-2 program by hand, then evaluate, expand and classify it.

use readk::algebra::UniMatrix;
use readk::{ObliviousAbp, PrimeField};

fn main() -> readk::Result<()> {
    let f = PrimeField::new(101)?;
    let e = |v: i64| f.elem(v);
    // (x1 + x2)(1 + x1 x2) as a width-2 program reading x1, x2, x1, x2
    let layers = vec![
        UniMatrix::new(f, 1, 2, Some(0), vec![vec![e(0), e(1)], vec![e(1)]])?,
        UniMatrix::new(f, 2, 1, Some(1), vec![vec![e(1)], vec![e(0), e(1)]])?,
        UniMatrix::new(f, 1, 2, Some(0), vec![vec![e(1)], vec![e(0), e(1)]])?,
        UniMatrix::new(f, 2, 1, Some(1), vec![vec![e(1)], vec![e(0), e(1)]])?,
    ];
    let a = ObliviousAbp::new(f, 2, layers)?;
    println!("class: {}", a.validate()?.class);
    println!("f = {}", a.expand()?);
    for x in [[1, 2], [3, 4], [100, 1]] {
        let p = [e(x[0]), e(x[1])];
        println!("f({}, {}) = {}", x[0], x[1], a.evaluate(&p)?);
    }
    println!("{}", readk::abp::format::write_abp(&a));
    Ok(())
}
