use std::collections::BTreeSet;
use std::ops::Range;

use super::combinations;
use crate::abp::ObliviousAbp;
use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum BlockSearch {
    /// Every choice of `k` blocks out of `r`.
    Exhaustive,
    /// Adds one block at a time, each time the one that keeps the most
    /// variables fully inside the chosen blocks.
    Greedy,
}

/// Split of the variables of a read-k program into `U`, `V`, `W`: every read
/// of a `U` variable lies in the chosen blocks, `W` holds the other
/// variables read there, `V` the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPartition {
    pub u: Vec<usize>,
    pub v: Vec<usize>,
    pub w: Vec<usize>,
    /// Chosen blocks as layer ranges of the normalized program.
    pub blocks: Vec<Range<usize>>,
    pub r: usize,
    pub k: usize,
    pub num_layers: usize,
}

impl BlockPartition {
    /// `k^2 * L / r` for `L` layers.
    pub fn w_bound(&self) -> f64 {
        (self.k * self.k * self.num_layers) as f64 / self.r as f64
    }

    pub fn satisfies_w_bound(&self) -> bool {
        self.w.len() as f64 <= self.w_bound()
    }

    /// With `r = 10 k^2` the `W` bound reads `|W| <= kn / 10`. That form
    /// only says something when `10 k^2` blocks fit in the program.
    pub fn tenth_form_vacuous(&self) -> bool {
        10 * self.k * self.k > self.num_layers
    }
}

fn block_ranges(len: usize, r: usize) -> Vec<Range<usize>> {
    (0..r).map(|b| b * len / r..(b + 1) * len / r).collect()
}

/// Cuts the layers of the normalized program into `r` contiguous blocks of
/// near-equal size and picks `k` of them holding all reads of as many
/// variables as possible (the first best choice in lexicographic order).
pub fn block_partition(abp: &ObliviousAbp, r: usize, search: BlockSearch) -> Result<BlockPartition> {
    let a = abp.normalize();
    let num_layers = a.layers().len();
    if r == 0 || r > num_layers {
        return Err(Error::Argument(format!(
            "{} blocks requested for {} layers",
            r, num_layers
        )));
    }
    if r > 64 {
        return Err(Error::Argument("at most 64 blocks are supported".into()));
    }
    let k = a.read_multiplicity().max(1);
    let ranges = block_ranges(num_layers, r);
    let block_of = |layer: usize| ranges.iter().position(|b| b.contains(&layer)).unwrap();
    // blocks touched by each variable, as a bitmask
    let n = a.num_vars();
    let mut touched = vec![0u64; n];
    let mut read_blocks: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); r];
    for (li, l) in a.layers().iter().enumerate() {
        if let Some(v) = l.var() {
            let b = block_of(li);
            touched[v] |= 1 << b;
            read_blocks[b].insert(v);
        }
    }
    let free: Vec<usize> = (0..n).filter(|&v| touched[v] != 0).collect();
    let covered = |mask: u64| free.iter().filter(|&&v| touched[v] & !mask == 0).count();
    let choose = k.min(r);
    let chosen: Vec<usize> = match search {
        BlockSearch::Exhaustive => {
            let mut best: Option<(usize, Vec<usize>)> = None;
            for c in combinations(r, choose) {
                let mask = c.iter().fold(0u64, |m, &b| m | 1 << b);
                let size = covered(mask);
                if best.as_ref().is_none_or(|(s, _)| size > *s) {
                    best = Some((size, c));
                }
            }
            best.map(|(_, c)| c).unwrap_or_default()
        }
        BlockSearch::Greedy => {
            let mut mask = 0u64;
            let mut picked = Vec::new();
            for _ in 0..choose {
                let best = (0..r)
                    .filter(|b| mask & 1 << b == 0)
                    .max_by_key(|&b| {
                        let m = mask | 1 << b;
                        let reads: usize = free.iter().map(|&v| (touched[v] & m).count_ones() as usize).sum();
                        (covered(m), reads, std::cmp::Reverse(b))
                    })
                    .unwrap();
                mask |= 1 << best;
                picked.push(best);
            }
            picked.sort_unstable();
            picked
        }
    };
    let mask = chosen.iter().fold(0u64, |m, &b| m | 1 << b);
    let u: Vec<usize> = free.iter().copied().filter(|&v| touched[v] & !mask == 0).collect();
    let w: Vec<usize> = free
        .iter()
        .copied()
        .filter(|&v| touched[v] & mask != 0 && touched[v] & !mask != 0)
        .collect();
    let v: Vec<usize> = (0..n).filter(|x| !u.contains(x) && !w.contains(x)).collect();
    Ok(BlockPartition {
        u,
        v,
        w,
        blocks: chosen.iter().map(|&b| ranges[b].clone()).collect(),
        r,
        k,
        num_layers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Fe, PrimeField, UniMatrix};

    fn chain(n: usize, reads: &[usize]) -> ObliviousAbp {
        let f = PrimeField::new(101).unwrap();
        let layers = reads
            .iter()
            .map(|&v| UniMatrix::new(f, 1, 1, Some(v), vec![vec![Fe::ONE, Fe::ONE]]).unwrap())
            .collect();
        ObliviousAbp::new(f, n, layers).unwrap()
    }

    #[test]
    fn combinations_in_order() {
        assert_eq!(
            combinations(4, 2),
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn read_once_single_block() {
        let a = chain(4, &[2, 0, 3, 1]);
        let p = block_partition(&a, 4, BlockSearch::Exhaustive).unwrap();
        assert_eq!(p.u, vec![2]);
        assert!(p.w.is_empty());
        assert_eq!(p.v, vec![0, 1, 3]);
    }

    #[test]
    fn clustered_reads() {
        // blocks: [x1 x2 x3 x4] [x1 x2 x3 x4] [x5 x6 x7 x8] [x5 x6 x7 x8]
        let reads = [0, 1, 2, 3, 0, 1, 2, 3, 4, 5, 6, 7, 4, 5, 6, 7];
        let a = chain(8, &reads);
        let p = block_partition(&a, 4, BlockSearch::Exhaustive).unwrap();
        assert_eq!(p.u, vec![0, 1, 2, 3]);
        assert_eq!(p.blocks, vec![0..4, 4..8]);
        assert!(p.w.is_empty());
        let g = block_partition(&a, 4, BlockSearch::Greedy).unwrap();
        assert_eq!(g.u.len(), 4);
    }

    #[test]
    fn w_bound_and_errors() {
        let a = chain(3, &[0, 1, 2, 0, 2, 1]);
        let p = block_partition(&a, 3, BlockSearch::Exhaustive).unwrap();
        assert!(p.satisfies_w_bound());
        assert!(p.tenth_form_vacuous());
        assert!(block_partition(&a, 7, BlockSearch::Exhaustive).is_err());
        assert!(block_partition(&a, 0, BlockSearch::Greedy).is_err());
    }
}
