use std::collections::BTreeSet;

use rayon::prelude::*;

use super::hitting::{roabp_hitting_set, Generator, HittingSet, Provenance};
use crate::abp::{ObliviousAbp, DEFAULT_EXPANSION_GUARD};
use crate::algebra::{Assignment, Fe};
use crate::error::{Error, Result};
use crate::sequences::{per_read_monotone_subset, regularly_interleaving_subset, ReadSequence};

const LEVEL_SEED_STEP: u64 = 0x9E37_79B9_7F4A_7C15;

#[derive(Clone, Debug)]
pub struct PitOptions {
    pub generator: Generator,
    /// Largest hitting set built in one round.
    pub guard: u128,
    /// Restrictions whose expansion box is at most this size are decided by
    /// expanding them instead of recursing.
    pub fast_path_limit: u128,
    /// Test the points of one hitting set concurrently.
    pub parallel: bool,
}

impl Default for PitOptions {
    fn default() -> Self {
        PitOptions {
            generator: Generator::Grid,
            guard: 1 << 24,
            fast_path_limit: DEFAULT_EXPANSION_GUARD,
            parallel: true,
        }
    }
}

/// One round of the search: a variable subset and the point fixed on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Iteration {
    /// Variables of the round, in the order of the first read.
    pub vars: Vec<usize>,
    /// `None` when every candidate left the program zero.
    pub point: Option<Vec<Fe>>,
    /// Hitting set size.
    pub candidates: usize,
    /// Candidates examined before stopping.
    pub tried: usize,
    /// Width parameter the hitting set was built for.
    pub width: usize,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PitVerdict {
    pub is_zero: bool,
    /// Point over all variables where the program is nonzero. Variables
    /// that are never read are set to zero.
    pub witness: Option<Vec<Fe>>,
    pub iterations: Vec<Iteration>,
    pub provenance: Provenance,
}

/// The cartesian product of the per-round hitting sets. Rounds depend only on
/// the read order, so this is the point set the search draws from.
#[derive(Clone, Debug)]
pub struct ProductHittingSet {
    pub num_vars: usize,
    pub factors: Vec<HittingSet>,
}

impl ProductHittingSet {
    pub fn size(&self) -> u128 {
        self.factors
            .iter()
            .fold(1u128, |acc, h| acc.saturating_mul(h.len() as u128))
    }

    /// Whether the point, projected on each round's variables, lies in that
    /// round's set.
    pub fn contains(&self, point: &[Fe]) -> bool {
        point.len() == self.num_vars
            && self.factors.iter().all(|h| {
                let q: Vec<Fe> = h.vars.iter().map(|&v| point[v]).collect();
                h.contains(&q)
            })
    }
}

/// Variables of one round: prune to a per-read-monotone subset, then to a
/// regularly interleaving one. Listed in first-read order.
pub fn round_subset(s: &ReadSequence) -> Result<Vec<usize>> {
    let mono = per_read_monotone_subset(s);
    let keep = regularly_interleaving_subset(&s.restrict(&mono))?;
    Ok(s.labels().iter().copied().filter(|v| keep.contains(v)).collect())
}

fn level_generator(g: &Generator, level: usize) -> Generator {
    match g {
        Generator::Random { seed, count } => Generator::Random {
            seed: seed.wrapping_add((level as u64).wrapping_mul(LEVEL_SEED_STEP)),
            count: *count,
        },
        other => other.clone(),
    }
}

fn round_parameters(a: &ObliviousAbp, vars: &[usize], k: usize) -> (usize, u32) {
    let w = a.width();
    let width = if k <= 1 { w } else { w.saturating_pow(2 * k as u32) };
    let bounds = a.degree_bounds();
    let d = vars.iter().map(|&v| bounds[v]).max().unwrap_or(0);
    (width, d)
}

/// The per-round hitting sets for the program's read order.
pub fn product_hitting_set(abp: &ObliviousAbp, opts: &PitOptions) -> Result<ProductHittingSet> {
    let a = abp.normalize();
    let mut s = a.read_sequence()?;
    let mut factors = Vec::new();
    while !s.is_empty() {
        let y = round_subset(&s)?;
        let (width, d) = round_parameters(&a, &y, s.k());
        let gen = level_generator(&opts.generator, factors.len());
        factors.push(roabp_hitting_set(a.field(), &y, width, d, &gen, opts.guard)?);
        let rest: BTreeSet<usize> = s.labels().iter().copied().filter(|v| !y.contains(v)).collect();
        s = s.restrict(&rest);
    }
    Ok(ProductHittingSet {
        num_vars: abp.num_vars(),
        factors,
    })
}

enum Search {
    Zero(Option<Iteration>),
    NonZero(Assignment, Vec<Iteration>),
}

fn search(a: &ObliviousAbp, level: usize, opts: &PitOptions) -> Result<Search> {
    if let Some(c) = a.constant_value() {
        return Ok(if c.is_zero() {
            Search::Zero(None)
        } else {
            Search::NonZero(Assignment::new(), Vec::new())
        });
    }
    if a.layers().iter().any(|l| l.is_zero()) {
        return Ok(Search::Zero(None));
    }
    let s = a.read_sequence()?;
    let y = round_subset(&s)?;
    let (width, degree) = round_parameters(a, &y, s.k());
    let gen = level_generator(&opts.generator, level);
    let h = roabp_hitting_set(a.field(), &y, width, degree, &gen, opts.guard)?;

    let attempt = |point: &Vec<Fe>| -> Result<Option<(Assignment, Vec<Iteration>)>> {
        let asg: Assignment = y.iter().copied().zip(point.iter().copied()).collect();
        let b = a.restrict(&asg)?;
        let fast = b.constant_value().is_none() && b.estimated_terms() <= opts.fast_path_limit;
        if fast && b.expand_with_guard(opts.fast_path_limit)?.is_zero() {
            return Ok(None);
        }
        match search(&b, level + 1, opts)? {
            Search::NonZero(mut rest, iters) => {
                rest.extend(asg);
                Ok(Some((rest, iters)))
            }
            Search::Zero(_) if fast => Err(Error::HittingSetMiss { iteration: level + 1 }),
            Search::Zero(_) => Ok(None),
        }
    };
    let visit = |(i, p): (usize, &Vec<Fe>)| match attempt(p) {
        Ok(None) => None,
        Ok(Some(found)) => Some(Ok((i, found))),
        Err(e) => Some(Err(e)),
    };
    let found = if opts.parallel {
        h.points.par_iter().enumerate().find_map_first(visit)
    } else {
        h.points.iter().enumerate().find_map(visit)
    };
    let mut iteration = Iteration {
        vars: y.clone(),
        point: None,
        candidates: h.len(),
        tried: h.len(),
        width,
        degree,
    };
    match found.transpose()? {
        None => Ok(Search::Zero(Some(iteration))),
        Some((i, (asg, rest))) => {
            iteration.point = Some(h.points[i].clone());
            iteration.tried = i + 1;
            let mut iters = vec![iteration];
            iters.extend(rest);
            Ok(Search::NonZero(asg, iters))
        }
    }
}

/// Identity test for read-k oblivious programs that uses only the read
/// order. Each round picks a variable subset on which the program behaves
/// like a read-once program of width `w^(2k)`, fixes it to the first point
/// of a hitting set that keeps the program nonzero, and continues on the
/// remaining variables. Whether a restriction is nonzero is decided by the
/// same procedure on fewer variables, or by expansion once it is small.
///
/// A nonzero verdict always comes with a checked witness. A zero verdict is
/// exact with the grid generator.
pub fn read_k_pit(abp: &ObliviousAbp, opts: &PitOptions) -> Result<PitVerdict> {
    let a = abp.normalize();
    let provenance = opts.generator.provenance();
    match search(&a, 0, opts)? {
        Search::Zero(it) => Ok(PitVerdict {
            is_zero: true,
            witness: None,
            iterations: it.into_iter().collect(),
            provenance,
        }),
        Search::NonZero(asg, iterations) => {
            let mut witness = vec![Fe::ZERO; abp.num_vars()];
            for (v, x) in asg {
                witness[v] = x;
            }
            if abp.evaluate(&witness)?.is_zero() {
                return Err(Error::Structure("assembled witness evaluates to zero".into()));
            }
            Ok(PitVerdict {
                is_zero: false,
                witness: Some(witness),
                iterations,
                provenance,
            })
        }
    }
}
