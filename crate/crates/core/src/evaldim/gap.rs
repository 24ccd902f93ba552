use std::collections::BTreeSet;

use super::synth::{check_order, roabp_synthesize, Roabp};
use crate::abp::{ObliviousAbp, DEFAULT_EXPANSION_GUARD};
use crate::error::{Error, Result};

/// Number of maximal runs of layers reading variables in `prefix`.
/// Constant layers are skipped; layers reading other variables end a run.
pub fn gap_count(abp: &ObliviousAbp, prefix: &BTreeSet<usize>) -> usize {
    let mut runs = 0;
    let mut inside = false;
    for v in abp.reads() {
        let now = prefix.contains(&v);
        if now && !inside {
            runs += 1;
        }
        inside = now;
    }
    runs
}

/// Gap count for the prefix `x_1, ..., x_i` of the identity order.
pub fn k_gap_check(abp: &ObliviousAbp, i: usize) -> usize {
    gap_count(abp, &(0..i).collect())
}

/// Converts a program whose gap count at every prefix of `order` is at most
/// its read multiplicity `k` into a read-once program in `order`. The result
/// has width at most `w^(2k)`: it is the minimal-width program for the
/// expanded polynomial.
pub fn k_gap_to_roabp_in_order(abp: &ObliviousAbp, order: &[usize], guard: u128) -> Result<Roabp> {
    check_order(abp.num_vars(), order)?;
    let k = abp.read_multiplicity();
    let mut prefix = BTreeSet::new();
    for (i, &v) in order.iter().enumerate() {
        prefix.insert(v);
        let gaps = gap_count(abp, &prefix);
        if gaps > k {
            return Err(Error::GapViolation {
                prefix: i + 1,
                gaps,
                bound: k,
            });
        }
    }
    let f = abp.expand_with_guard(guard)?;
    roabp_synthesize(&f, order)
}

/// [`k_gap_to_roabp_in_order`] for the order `x_1, ..., x_n`.
pub fn k_gap_to_roabp(abp: &ObliviousAbp) -> Result<Roabp> {
    let order: Vec<usize> = (0..abp.num_vars()).collect();
    k_gap_to_roabp_in_order(abp, &order, DEFAULT_EXPANSION_GUARD)
}

/// Read-once program in the pass order of a k-pass program. Every k-pass
/// program has at most `k` gaps at every prefix of its pass order, so this
/// goes through [`k_gap_to_roabp_in_order`]. A read-once input is returned
/// as it is.
pub fn k_pass_to_roabp(abp: &ObliviousAbp) -> Result<Roabp> {
    let v = abp.validate()?;
    if !v.class.is_k_pass {
        return Err(Error::NotKPass(v.class.to_string()));
    }
    let order = v.class.pass_orders[0].clone();
    if v.class.k <= 1 {
        return Roabp::new(v.normalized, order);
    }
    k_gap_to_roabp_in_order(&v.normalized, &order, DEFAULT_EXPANSION_GUARD)
}
