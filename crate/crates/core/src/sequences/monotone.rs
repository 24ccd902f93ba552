use std::collections::BTreeSet;

use super::ReadSequence;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Direction {
    Increasing,
    Decreasing,
}

/// Direction of a sequence of distinct values, if it is monotone.
/// Sequences of length at most 1 count as increasing.
pub fn monotone_direction<T: Ord>(seq: &[T]) -> Option<Direction> {
    if seq.windows(2).all(|w| w[0] < w[1]) {
        Some(Direction::Increasing)
    } else if seq.windows(2).all(|w| w[0] > w[1]) {
        Some(Direction::Decreasing)
    } else {
        None
    }
}

// Fenwick tree over ranks holding prefix maxima.
struct MaxTree(Vec<usize>);

impl MaxTree {
    fn new(n: usize) -> Self {
        MaxTree(vec![0; n + 1])
    }

    fn update(&mut self, mut i: usize, v: usize) {
        i += 1;
        while i < self.0.len() {
            self.0[i] = self.0[i].max(v);
            i += i & i.wrapping_neg();
        }
    }

    // max over ranks 0..i
    fn query(&self, mut i: usize) -> usize {
        let mut m = 0;
        while i > 0 {
            m = m.max(self.0[i]);
            i -= i & i.wrapping_neg();
        }
        m
    }
}

/// Lexicographically smallest index set of a longest strictly increasing
/// subsequence of `ranks` (a permutation of `0..m`).
fn longest_increasing_indices(ranks: &[usize]) -> Vec<usize> {
    let m = ranks.len();
    // from_here[i]: longest increasing subsequence starting at i
    let mut from_here = vec![0; m];
    let mut tree = MaxTree::new(m);
    for i in (0..m).rev() {
        // ranks above ranks[i], mirrored so they form a prefix
        let mirrored = m - 1 - ranks[i];
        from_here[i] = 1 + tree.query(mirrored);
        tree.update(mirrored, from_here[i]);
    }
    let best = from_here.iter().copied().max().unwrap_or(0);
    let mut out = Vec::with_capacity(best);
    let mut need = best;
    for i in 0..m {
        if need == 0 {
            break;
        }
        let fits = out.last().is_none_or(|&p: &usize| ranks[i] > ranks[p]);
        if fits && from_here[i] == need {
            out.push(i);
            need -= 1;
        }
    }
    out
}

/// A longest monotone subsequence of distinct values. Prefers increasing on
/// ties; among subsequences of that length and direction, returns the one
/// with the lexicographically smallest index set.
pub fn longest_monotone<T: Ord + Clone>(seq: &[T]) -> (Vec<T>, Direction) {
    let mut sorted: Vec<&T> = seq.iter().collect();
    sorted.sort();
    let rank: Vec<usize> = seq
        .iter()
        .map(|v| sorted.binary_search(&v).expect("value present"))
        .collect();
    let m = rank.len();
    let inc = longest_increasing_indices(&rank);
    let mirrored: Vec<usize> = rank.iter().map(|&r| m - 1 - r).collect();
    let dec = longest_increasing_indices(&mirrored);
    let (idx, dir) = if inc.len() >= dec.len() {
        (inc, Direction::Increasing)
    } else {
        (dec, Direction::Decreasing)
    };
    (idx.into_iter().map(|i| seq[i].clone()).collect(), dir)
}

pub fn is_per_read_monotone(s: &ReadSequence) -> bool {
    (1..=s.k()).all(|i| monotone_direction(&s.read(i)).is_some())
}

/// Labels of a subset on which every read is monotone, found by pruning
/// with a longest monotone subsequence of each later read in turn. The
/// result has at least `n^(1/2^(k-1))` elements.
pub fn per_read_monotone_subset(s: &ReadSequence) -> BTreeSet<usize> {
    let mut keep = s.label_set();
    for i in 2..=s.k() {
        let cur = s.restrict(&keep);
        let (mono, _) = longest_monotone(&cur.read(i));
        keep = mono.into_iter().map(|e| cur.label(e)).collect();
    }
    keep
}
