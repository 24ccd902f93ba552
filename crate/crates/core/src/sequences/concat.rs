use std::ops::Range;

use super::monotone::{monotone_direction, Direction};
use super::ReadSequence;
use crate::error::{Error, Result};

/// A contiguous piece of a per-read-monotone sequence holding whole reads
/// that all run in the same direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    /// Positions in the sequence.
    pub range: Range<usize>,
    /// Reads (1-based) lying in this segment, by starting position.
    pub reads: Vec<usize>,
    pub direction: Direction,
    /// Labels in the order the reads of this segment visit them. For a
    /// decreasing segment this is the reversal of the first-read order.
    pub order: Vec<usize>,
}

/// Splits a per-read-monotone sequence into segments of alternating
/// direction. Consecutive segments share their border element: the last
/// element (when going from increasing to decreasing) or the first.
pub fn concat_decompose(s: &ReadSequence) -> Result<Vec<Segment>> {
    let n = s.n();
    let mut reads: Vec<(usize, usize, usize, Direction)> = Vec::new();
    for i in 1..=s.k() {
        let r = s.read(i);
        let dir = monotone_direction(&r)
            .ok_or_else(|| Error::Precondition(format!("read {} is not monotone", i)))?;
        let start = s.occur(i, r[0]);
        let end = s.occur(i, *r.last().unwrap());
        reads.push((start, end, i, dir));
    }
    reads.sort_by_key(|r| r.0);
    let mut segs: Vec<Segment> = Vec::new();
    for (start, end, i, dir) in reads {
        match segs.last_mut() {
            Some(seg) if seg.direction == dir => {
                seg.range.end = seg.range.end.max(end + 1);
                seg.reads.push(i);
            }
            _ => {
                if let Some(prev) = segs.last() {
                    if start < prev.range.end {
                        return Err(Error::Precondition(format!(
                            "read {} overlaps a read running the other way",
                            i
                        )));
                    }
                }
                let order = match dir {
                    Direction::Increasing => s.labels().to_vec(),
                    Direction::Decreasing => s.labels().iter().rev().copied().collect(),
                };
                segs.push(Segment {
                    range: start..end + 1,
                    reads: vec![i],
                    direction: dir,
                    order,
                });
            }
        }
    }
    let seq = s.entries();
    for w in segs.windows(2) {
        let last = seq[w[0].range.end - 1].0;
        let first = seq[w[1].range.start].0;
        let border = match w[0].direction {
            Direction::Increasing => n - 1,
            Direction::Decreasing => 0,
        };
        if w[0].range.end != w[1].range.start || last != border || first != border {
            return Err(Error::Precondition("segments do not meet at a border element".into()));
        }
    }
    Ok(segs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_increasing_segment() {
        let s = ReadSequence::from_labels(&[0, 1, 0, 2, 1, 2]).unwrap();
        let segs = concat_decompose(&s).unwrap();
        assert_eq!(segs.len(), 1);
        assert_eq!(segs[0].range, 0..6);
        assert_eq!(segs[0].reads, vec![1, 2]);
    }

    #[test]
    fn up_then_down() {
        let s = ReadSequence::from_labels(&[0, 1, 2, 2, 1, 0]).unwrap();
        let segs = concat_decompose(&s).unwrap();
        assert_eq!(segs.len(), 2);
        assert_eq!(segs[0].range, 0..3);
        assert_eq!(segs[1].range, 3..6);
        assert_eq!(segs[1].direction, Direction::Decreasing);
        assert_eq!(segs[1].order, vec![2, 1, 0]);
    }

    #[test]
    fn three_alternating_segments() {
        let s = ReadSequence::from_labels(&[0, 1, 2, 2, 1, 0, 0, 1, 2]).unwrap();
        let segs = concat_decompose(&s).unwrap();
        let dirs: Vec<Direction> = segs.iter().map(|g| g.direction).collect();
        assert_eq!(
            dirs,
            vec![Direction::Increasing, Direction::Decreasing, Direction::Increasing]
        );
        assert!(concat_decompose(&ReadSequence::from_labels(&[0, 1, 2, 1, 2, 0]).unwrap()).is_err());
    }
}
