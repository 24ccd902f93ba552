//! Read sequences of oblivious programs and the pruning procedures that
//! turn an arbitrary read-k order into one a read-once program can simulate.

mod concat;
mod interleave;
mod monotone;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

pub use concat::{concat_decompose, Segment};
pub use interleave::{is_regularly_interleaving, regularly_interleaving_subset, PairBlocks};
pub use monotone::{
    is_per_read_monotone, longest_monotone, monotone_direction, per_read_monotone_subset, Direction,
};

/// A sequence in which each of `n` elements occurs exactly `k` times.
///
/// Elements are stored by local index: local element `e` is the `e`-th
/// distinct element by first occurrence, so the first read is always
/// `0, 1, ..., n-1`. The caller's labels are kept alongside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReadSequence {
    labels: Vec<usize>,
    // (local element, occurrence number starting at 1)
    entries: Vec<(usize, usize)>,
    k: usize,
    // positions[e][c-1] = position of the c-th occurrence of e
    positions: Vec<Vec<usize>>,
}

impl ReadSequence {
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        let mut local: BTreeMap<usize, usize> = BTreeMap::new();
        let mut order = Vec::new();
        let mut counts: Vec<usize> = Vec::new();
        let mut entries = Vec::with_capacity(labels.len());
        for &l in labels {
            let e = *local.entry(l).or_insert_with(|| {
                order.push(l);
                counts.push(0);
                order.len() - 1
            });
            counts[e] += 1;
            entries.push((e, counts[e]));
        }
        let k = counts.first().copied().unwrap_or(0);
        if let Some(e) = counts.iter().position(|&c| c != k) {
            return Err(Error::Structure(format!(
                "element {} occurs {} times, expected {}",
                order[e], counts[e], k
            )));
        }
        let mut positions = vec![Vec::with_capacity(k); order.len()];
        for (p, &(e, _)) in entries.iter().enumerate() {
            positions[e].push(p);
        }
        Ok(ReadSequence {
            labels: order,
            entries,
            k,
            positions,
        })
    }

    /// Number of distinct elements.
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Labels of the local elements, in first-occurrence order.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, e: usize) -> usize {
        self.labels[e]
    }

    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    /// The labels in sequence order.
    pub fn label_sequence(&self) -> Vec<usize> {
        self.entries.iter().map(|&(e, _)| self.labels[e]).collect()
    }

    /// Position of the `c`-th occurrence (1-based) of local element `e`.
    pub fn occur(&self, c: usize, e: usize) -> usize {
        self.positions[e][c - 1]
    }

    /// The `i`-th read (1-based) as local elements in sequence order.
    pub fn read(&self, i: usize) -> Vec<usize> {
        self.entries
            .iter()
            .filter(|&&(_, c)| c == i)
            .map(|&(e, _)| e)
            .collect()
    }

    /// Keeps only the given occurrence numbers (1-based), renumbering them.
    pub fn project(&self, reads: &[usize]) -> Result<ReadSequence> {
        if reads.is_empty() {
            return Err(Error::Argument("projection needs at least one read".into()));
        }
        if let Some(&r) = reads.iter().find(|&&r| r == 0 || r > self.k) {
            return Err(Error::Argument(format!("read {} out of range 1..={}", r, self.k)));
        }
        let keep: BTreeSet<usize> = reads.iter().copied().collect();
        let labels: Vec<usize> = self
            .entries
            .iter()
            .filter(|(_, c)| keep.contains(c))
            .map(|&(e, _)| self.labels[e])
            .collect();
        ReadSequence::from_labels(&labels)
    }

    /// Drops every element whose label is not in `keep`.
    pub fn restrict(&self, keep: &BTreeSet<usize>) -> ReadSequence {
        let labels: Vec<usize> = self
            .label_sequence()
            .into_iter()
            .filter(|l| keep.contains(l))
            .collect();
        ReadSequence::from_labels(&labels).expect("restriction keeps exact multiplicity")
    }

    pub fn label_set(&self) -> BTreeSet<usize> {
        self.labels.iter().copied().collect()
    }
}

impl fmt::Display for ReadSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .label_sequence()
            .iter()
            .map(|l| format!("x{}", l + 1))
            .collect();
        write!(f, "({})", parts.join(","))
    }
}
