mod common;

use readk::evaldim::EvalDimOptions;
use readk::hardpoly::{experiment_pn_evaldim, pn_polynomial, pn_projection, qn_subset_dimension, qn_vars};

#[test]
fn pn_floor_holds_below_n() {
    for n in 2..=3 {
        let sizes: Vec<usize> = (1..n).collect();
        let rows = experiment_pn_evaldim(common::f101(), n, &sizes).unwrap();
        assert!(!rows.is_empty());
        for r in &rows {
            assert!(r.pass, "n={} S={} dim {} < {}", n, r.subset, r.dimension, r.floor);
        }
    }
}

#[test]
fn pn_dimension_matches_coefficient_rank() {
    let f = common::f101();
    let p = pn_polynomial(f, 3).unwrap();
    let rows = experiment_pn_evaldim(f, 3, &[1, 2, 3]).unwrap();
    for r in rows.iter().step_by(7) {
        assert_eq!(r.dimension, common::split_rank(&p, &r.vars), "{}", r.subset);
    }
}

#[test]
fn pn_projection_below_n() {
    let f = common::f101();
    for s in [vec![0], vec![4], vec![0, 4], vec![1, 2], vec![3, 8]] {
        let pr = pn_projection(f, 3, &s, 11).unwrap();
        assert!(pr.verified, "{s:?}");
        assert_eq!(pr.reduced_n, 3 - s.len() - 1);
    }
    assert!(pn_projection(f, 2, &[0, 1], 1).is_err());
}

#[test]
fn qn_whole_variable_split() {
    // x against y with every z substituted: every matching contributes n cross edges
    let f = common::f101();
    let n = 3;
    let q = qn_vars(n);
    let s: Vec<usize> = (0..n).map(|j| q.x(j)).collect();
    let t: Vec<usize> = (0..n).map(|j| q.y(j)).collect();
    let row = qn_subset_dimension(f, n, &s, &t, &EvalDimOptions::default()).unwrap();
    assert_eq!(row.cross_edges, n);
    assert!(row.dimension >= 1 << n);
    assert!(row.pass);
}
