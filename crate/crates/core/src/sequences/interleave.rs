use std::collections::BTreeSet;

use super::monotone::{is_per_read_monotone, monotone_direction, Direction};
use super::ReadSequence;
use crate::error::{Error, Result};

/// Block partition witnessing that the projection onto reads `reads.0` and
/// `reads.1` (1-based) is 2-regularly-interleaving. Blocks are listed in
/// sequence order, elements by label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairBlocks {
    pub reads: (usize, usize),
    pub blocks: Vec<Vec<usize>>,
}

/// Block partition of a read-2 sequence, if one exists. It is unique: each
/// block starts with a maximal run of first occurrences that must be
/// followed by the second occurrences of exactly the same elements.
fn two_blocks(s: &ReadSequence) -> Option<Vec<Vec<usize>>> {
    let e = s.entries();
    let mut blocks = Vec::new();
    let mut p = 0;
    while p < e.len() {
        let run = e[p..].iter().take_while(|&&(_, c)| c == 1).count();
        if run == 0 || p + 2 * run > e.len() {
            return None;
        }
        let firsts: BTreeSet<usize> = e[p..p + run].iter().map(|&(x, _)| x).collect();
        let seconds = &e[p + run..p + 2 * run];
        if seconds.iter().any(|&(x, c)| c != 2 || !firsts.contains(&x)) {
            return None;
        }
        blocks.push(e[p..p + run].iter().map(|&(x, _)| s.label(x)).collect());
        p += 2 * run;
    }
    Some(blocks)
}

/// Checks every pairwise projection. Returns the witnessing block
/// partitions (pairs in lexicographic order), or `None` if some projection
/// has no valid partition.
pub fn is_regularly_interleaving(s: &ReadSequence) -> Option<Vec<PairBlocks>> {
    let mut out = Vec::new();
    for i in 1..=s.k() {
        for j in i + 1..=s.k() {
            let p = s.project(&[i, j]).expect("reads in range");
            out.push(PairBlocks {
                reads: (i, j),
                blocks: two_blocks(&p)?,
            });
        }
    }
    Some(out)
}

/// Erasure process on a per-read-monotone read-2 sequence. Keeps at least a
/// third of the elements and leaves a 2-regularly-interleaving sequence.
fn two_subset(s: &ReadSequence) -> BTreeSet<usize> {
    if s.n() <= 1 || monotone_direction(&s.read(2)) == Some(Direction::Decreasing) {
        return s.label_set();
    }
    let mut keep = BTreeSet::new();
    erase(s, &mut keep);
    keep
}

// Second read is increasing here, and stays so in every restriction.
fn erase(s: &ReadSequence, keep: &mut BTreeSet<usize>) {
    let n = s.n();
    if n == 0 {
        return;
    }
    let e = s.entries();
    let dist = |z: usize| s.occur(2, z) - s.occur(1, z);
    // largest distance, smallest element on ties
    let x = (0..n).fold(0, |best, z| if dist(z) > dist(best) { z } else { best });
    let r = dist(x);
    let (o1, o2) = (s.occur(1, x), s.occur(2, x));
    let firsts: Vec<usize> = (o1..o2).filter(|&p| e[p].1 == 1).map(|p| e[p].0).collect();
    let seconds: Vec<usize> = (o1 + 1..=o2).filter(|&p| e[p].1 == 2).map(|p| e[p].0).collect();
    debug_assert_eq!(firsts.len() + seconds.len(), r + 1);
    let (block, lo, hi) = if firsts.len() >= seconds.len() {
        let y = *firsts.iter().max_by_key(|&&z| s.occur(2, z)).unwrap();
        (firsts, o1, s.occur(2, y))
    } else {
        let y = *seconds.iter().min_by_key(|&&z| s.occur(1, z)).unwrap();
        (seconds, s.occur(1, y), o2)
    };
    keep.extend(block.iter().map(|&z| s.label(z)));
    let left: BTreeSet<usize> = (0..n)
        .filter(|&z| s.occur(2, z) < lo)
        .map(|z| s.label(z))
        .collect();
    let right: BTreeSet<usize> = (0..n)
        .filter(|&z| s.occur(1, z) > hi)
        .map(|z| s.label(z))
        .collect();
    erase(&s.restrict(&left), keep);
    erase(&s.restrict(&right), keep);
}

/// Labels of a subset on which the sequence is per-read-monotone and
/// k-regularly-interleaving, obtained by running the read-2 erasure process
/// on each pairwise projection in lexicographic order of the pair. Keeps at
/// least `s / 3` elements for read-2 and `s / 3^(k^2)` in general.
pub fn regularly_interleaving_subset(s: &ReadSequence) -> Result<BTreeSet<usize>> {
    if !is_per_read_monotone(s) {
        return Err(Error::Precondition("sequence is not per-read-monotone".into()));
    }
    let mut keep = s.label_set();
    for i in 1..=s.k() {
        for j in i + 1..=s.k() {
            let p = s.restrict(&keep).project(&[i, j])?;
            keep = two_subset(&p);
        }
    }
    Ok(keep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(l: &[usize]) -> ReadSequence {
        ReadSequence::from_labels(l).unwrap()
    }

    // all set partitions of 0..n as block-index vectors
    fn partitions(n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            let mut next = Vec::new();
            for p in out {
                let nb = p.iter().copied().max().map_or(0, |m| m + 1);
                for b in 0..=nb {
                    let mut q = p.clone();
                    q.push(b);
                    next.push(q);
                }
            }
            out = next;
        }
        out
    }

    fn brute_two(s: &ReadSequence) -> bool {
        let n = s.n();
        partitions(n).into_iter().any(|assign| {
            let nb = assign.iter().copied().max().map_or(0, |m| m + 1);
            (0..nb).all(|b| {
                let mut pos1: Vec<usize> = (0..n).filter(|&z| assign[z] == b).map(|z| s.occur(1, z)).collect();
                let mut pos2: Vec<usize> = (0..n).filter(|&z| assign[z] == b).map(|z| s.occur(2, z)).collect();
                pos1.sort();
                pos2.sort();
                let consecutive = |v: &[usize]| v.windows(2).all(|w| w[1] == w[0] + 1);
                consecutive(&pos1) && consecutive(&pos2) && pos2[0] == pos1[pos1.len() - 1] + 1
            })
        })
    }

    #[test]
    fn definition_examples() {
        let s = seq(&[0, 1, 0, 1, 2, 2]);
        let w = is_regularly_interleaving(&s).unwrap();
        assert_eq!(w[0].blocks, vec![vec![0, 1], vec![2]]);
        assert!(is_regularly_interleaving(&seq(&[0, 1, 0, 1])).is_some());
        assert!(is_regularly_interleaving(&seq(&[0, 1, 1, 2, 0, 2])).is_none());
        assert!(!brute_two(&seq(&[0, 1, 1, 2, 0, 2])));
        // X1 firsts, X1 seconds, X2 firsts, X2 seconds
        assert!(is_regularly_interleaving(&seq(&[0, 1, 0, 1, 2, 3, 4, 2, 3, 4])).is_some());
    }

    #[test]
    fn linear_check_matches_partition_search() {
        fn all_read2(n: usize, cur: &mut Vec<usize>, counts: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == 2 * n {
                out.push(cur.clone());
                return;
            }
            for v in 0..n {
                if counts[v] < 2 {
                    counts[v] += 1;
                    cur.push(v);
                    all_read2(n, cur, counts, out);
                    cur.pop();
                    counts[v] -= 1;
                }
            }
        }
        for n in 1..=4 {
            let mut all = Vec::new();
            all_read2(n, &mut vec![], &mut vec![0; n], &mut all);
            for l in all {
                let s = seq(&l);
                assert_eq!(is_regularly_interleaving(&s).is_some(), brute_two(&s), "{l:?}");
            }
        }
    }

    #[test]
    fn decreasing_second_read_is_kept_whole() {
        let s = seq(&[0, 1, 2, 2, 1, 0]);
        assert_eq!(regularly_interleaving_subset(&s).unwrap(), s.label_set());
    }

    #[test]
    fn erasure_keeps_a_third() {
        let s = seq(&[0, 1, 2, 3, 0, 4, 1, 5, 2, 3, 4, 5]);
        let keep = regularly_interleaving_subset(&s).unwrap();
        assert!(3 * keep.len() >= s.n());
        assert!(is_regularly_interleaving(&s.restrict(&keep)).is_some());
        assert!(regularly_interleaving_subset(&seq(&[0, 1, 2, 1, 2, 0, 2, 0, 1])).is_err());
    }
}
