//! The two hard families: `P_n`, the product of all row sums and column
//! sums of an `n x n` variable matrix, and `Q_n`, a sum of `n` products of
//! linear forms along edge-disjoint perfect matchings. Also the constructive
//! steps of the lower-bound arguments and finite-size experiments.

mod blocks;
mod elimination;
mod experiments;
mod families;

pub use blocks::{block_partition, BlockPartition, BlockSearch};
pub use elimination::{eliminate_summand, Elimination};
pub use experiments::{
    experiment_pn_evaldim, experiment_qn_evaldim, pn_projection, qn_subset_dimension, PnDimRow, PnProjection,
    QnDimRow,
};
pub use families::{
    check_matchings, gen_pn, gen_qn, pn_polynomial, pn_var, qn_matchings, qn_polynomial, qn_vars, Family,
    HardFamilyInstance, QnVars,
};

/// All `k`-subsets of `0..r` in lexicographic order.
pub(crate) fn combinations(r: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > r {
        return out;
    }
    loop {
        out.push(cur.clone());
        let mut i = k;
        while i > 0 && cur[i - 1] == r - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}
