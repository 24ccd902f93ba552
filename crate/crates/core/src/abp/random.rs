//! Seeded random programs for tests, experiments and examples.

use rand::seq::SliceRandom;
use rand::Rng;

use super::ObliviousAbp;
use crate::algebra::{Fe, PrimeField, UniMatrix};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ReadShape {
    /// Every variable read `k` times, layers in uniformly random order.
    Shuffled,
    /// One permutation repeated `k` times.
    KPass,
    /// A fresh permutation for every pass.
    VaryingKPass,
}

#[derive(Clone, Debug)]
pub struct RandomAbpParams {
    pub num_vars: usize,
    pub k: usize,
    pub width: usize,
    pub degree: u32,
    pub shape: ReadShape,
    /// Probability that an entry is zero.
    pub zero_prob: f64,
}

impl RandomAbpParams {
    pub fn new(num_vars: usize, k: usize, width: usize, degree: u32, shape: ReadShape) -> Self {
        RandomAbpParams {
            num_vars,
            k,
            width,
            degree,
            shape,
            zero_prob: 0.3,
        }
    }
}

pub fn random_entry<R: Rng>(rng: &mut R, field: PrimeField, degree: u32, zero_prob: f64) -> Vec<Fe> {
    if rng.random_bool(zero_prob) {
        return Vec::new();
    }
    (0..=degree)
        .map(|_| field.from_u64(rng.random_range(0..field.modulus())))
        .collect()
}

pub fn random_layer<R: Rng>(
    rng: &mut R,
    field: PrimeField,
    rows: usize,
    cols: usize,
    var: Option<usize>,
    degree: u32,
    zero_prob: f64,
) -> UniMatrix {
    let d = if var.is_some() { degree } else { 0 };
    let entries = (0..rows * cols)
        .map(|_| random_entry(rng, field, d, zero_prob))
        .collect();
    UniMatrix::new(field, rows, cols, var, entries).expect("consistent shape")
}

/// Random program reading the given variables in order, with inner widths
/// drawn from `1..=width`.
pub fn random_with_reads<R: Rng>(
    rng: &mut R,
    field: PrimeField,
    num_vars: usize,
    reads: &[usize],
    width: usize,
    degree: u32,
    zero_prob: f64,
) -> ObliviousAbp {
    assert!(!reads.is_empty(), "need at least one read");
    let mut dims = vec![1usize];
    for _ in 1..reads.len() {
        dims.push(rng.random_range(1..=width.max(1)));
    }
    dims.push(1);
    let layers = reads
        .iter()
        .enumerate()
        .map(|(i, &v)| random_layer(rng, field, dims[i], dims[i + 1], Some(v), degree, zero_prob))
        .collect();
    ObliviousAbp::new(field, num_vars, layers).expect("well-formed random program")
}

pub fn random_read_order<R: Rng>(rng: &mut R, num_vars: usize, k: usize, shape: ReadShape) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..num_vars).collect();
    match shape {
        ReadShape::Shuffled => {
            let mut reads: Vec<usize> = (0..num_vars).flat_map(|v| std::iter::repeat_n(v, k)).collect();
            reads.shuffle(rng);
            reads
        }
        ReadShape::KPass => {
            perm.shuffle(rng);
            perm.iter().copied().cycle().take(num_vars * k).collect()
        }
        ReadShape::VaryingKPass => (0..k)
            .flat_map(|_| {
                perm.shuffle(rng);
                perm.clone()
            })
            .collect(),
    }
}

pub fn random_abp<R: Rng>(rng: &mut R, field: PrimeField, params: &RandomAbpParams) -> ObliviousAbp {
    let reads = random_read_order(rng, params.num_vars, params.k, params.shape);
    random_with_reads(
        rng,
        field,
        params.num_vars,
        &reads,
        params.width,
        params.degree,
        params.zero_prob,
    )
}

/// Random read-once program in the given order.
pub fn random_roabp<R: Rng>(
    rng: &mut R,
    field: PrimeField,
    order: &[usize],
    width: usize,
    degree: u32,
) -> ObliviousAbp {
    random_with_reads(rng, field, order.len(), order, width, degree, 0.3)
}
