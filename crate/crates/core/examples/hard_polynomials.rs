//! The two hard families as programs, with their read structure.

use readk::hardpoly::{gen_pn, gen_qn, qn_matchings, qn_vars};
use readk::PrimeField;

fn main() -> readk::Result<()> {
    let f = PrimeField::new(101)?;
    for n in 2..=3 {
        let p = gen_pn(f, n, 1 << 20)?;
        println!("P_{}: {}, width {}", n, p.realization.validate()?.class, p.realization.width());
        if let Some(poly) = &p.polynomial {
            println!("  {} terms", poly.num_terms());
        }
        let q = gen_qn(f, n, 1 << 20)?;
        let vars = qn_vars(n);
        println!("Q_{}: {}, width {}", n, q.realization.validate()?.class, q.realization.width());
        for (i, m) in qn_matchings(n).iter().enumerate() {
            let edges: Vec<String> = m
                .iter()
                .map(|&(a, b)| format!("{}-{}", vars.name(vars.x(a)), vars.name(vars.y(b))))
                .collect();
            println!("  {}: {}", vars.name(vars.z(i)), edges.join(" "));
        }
    }
    Ok(())
}
