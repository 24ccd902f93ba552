#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use readk::abp::random::{random_read_order, random_with_reads, ReadShape};
use readk::abp::{parallel_combination, DEFAULT_EXPANSION_GUARD};
use readk::algebra::UniMatrix;
use readk::{ObliviousAbp, PrimeField, SparsePoly};

pub fn f101() -> PrimeField {
    PrimeField::new(101).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random read-k program with n <= 8, w <= 3, d <= 2 whose expansion box
/// fits the default guard. Roughly a quarter of the instances are made zero,
/// either with a zero layer or as the difference of two equal branches.
pub fn pit_instance<R: Rng>(rng: &mut R, k: usize) -> ObliviousAbp {
    let field = f101();
    loop {
        let n = rng.random_range(1..=8);
        let w = rng.random_range(1..=3);
        let d = rng.random_range(1..=2);
        let shape = match rng.random_range(0..3) {
            0 => ReadShape::KPass,
            1 => ReadShape::VaryingKPass,
            _ => ReadShape::Shuffled,
        };
        let reads = random_read_order(rng, n, k, shape);
        let mut a = random_with_reads(rng, field, n, &reads, w, d, 0.1);
        match rng.random_range(0..8) {
            0 => {
                let i = rng.random_range(0..a.layers().len());
                let l = &a.layers()[i];
                let z = UniMatrix::new(field, l.rows(), l.cols(), l.var(), vec![vec![]; l.rows() * l.cols()]).unwrap();
                let mut layers = a.layers().to_vec();
                layers[i] = z;
                a = ObliviousAbp::new(field, n, layers).unwrap();
            }
            1 => {
                let half_w = w.div_ceil(2).max(1);
                let b = random_with_reads(rng, field, n, &reads, half_w, d, 0.1);
                let c = field.elem(rng.random_range(1..101));
                a = parallel_combination(&[b.clone(), b], &[c, field.neg(c)]).unwrap();
            }
            _ => {}
        }
        if a.estimated_terms() <= DEFAULT_EXPANSION_GUARD {
            return a;
        }
    }
}

/// Rank over F_p by plain row reduction.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let inv = |a: u64| {
        let (mut r, mut b, mut e) = (1u64, a % p, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    };
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&i| !rows[i][c].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(rank, piv);
        let s = inv(rows[rank][c]);
        for x in rows[rank].iter_mut() {
            *x = *x * s % p;
        }
        for i in 0..rows.len() {
            if i != rank && rows[i][c] != 0 {
                let m = rows[i][c];
                for j in 0..cols {
                    rows[i][j] = (rows[i][j] + (p - m) * rows[rank][j]) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of the coefficient matrix of `f` with rows indexed by monomials in
/// `left` and columns by monomials in the other variables.
pub fn split_rank(f: &SparsePoly, left: &[usize]) -> usize {
    let p = f.field().modulus();
    let mut rows: BTreeMap<Vec<u32>, BTreeMap<Vec<u32>, u64>> = BTreeMap::new();
    let mut col_keys = BTreeSet::new();
    for (e, c) in f.terms() {
        let l: Vec<u32> = left.iter().map(|&v| e[v]).collect();
        let r: Vec<u32> = (0..e.len()).filter(|v| !left.contains(v)).map(|v| e[v]).collect();
        col_keys.insert(r.clone());
        rows.entry(l).or_default().insert(r, c.value());
    }
    let cols: Vec<_> = col_keys.into_iter().collect();
    let m = rows
        .values()
        .map(|row| cols.iter().map(|k| row.get(k).copied().unwrap_or(0)).collect())
        .collect();
    rank_mod_p(m, p)
}

/// Length of a longest monotone subsequence by quadratic dynamic programming.
pub fn longest_monotone_len(seq: &[usize]) -> usize {
    let m = seq.len();
    let mut inc = vec![1; m];
    let mut dec = vec![1; m];
    for i in 0..m {
        for j in 0..i {
            if seq[j] < seq[i] {
                inc[i] = inc[i].max(inc[j] + 1);
            }
            if seq[j] > seq[i] {
                dec[i] = dec[i].max(dec[j] + 1);
            }
        }
    }
    inc.into_iter().chain(dec).max().unwrap_or(0)
}

/// All permutations of `0..m` (Heap's algorithm).
pub fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (0..m).collect();
    let mut out = vec![a.clone()];
    let mut c = vec![0; m];
    let mut i = 0;
    while i < m {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Random multilinear polynomial in `n` variables.
pub fn random_multilinear<R: Rng>(rng: &mut R, n: usize, density: f64) -> SparsePoly {
    let field = f101();
    let mut terms = Vec::new();
    for mask in 0u32..1 << n {
        if rng.random_bool(density) {
            let e = (0..n).map(|v| mask >> v & 1).collect();
            terms.push((e, field.elem(rng.random_range(1..101))));
        }
    }
    SparsePoly::from_terms(field, n, terms).unwrap()
}

/// Width-one program reading the labels in the given order.
pub fn sequence_abp(labels: &[usize]) -> ObliviousAbp {
    let field = f101();
    let n = labels.iter().max().map_or(0, |m| m + 1);
    let layers = labels
        .iter()
        .map(|&v| UniMatrix::new(field, 1, 1, Some(v), vec![vec![field.elem(0), field.elem(1)]]).unwrap())
        .collect();
    ObliviousAbp::new(field, n, layers).unwrap()
}
