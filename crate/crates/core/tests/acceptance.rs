//! End-to-end acceptance checks, one test per criterion. Each test prints a
//! `criterion N: PASS|FAIL` line with its measurements; run with
//! `--nocapture` to see them.

mod common;

use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::Rng;
use readk::abp::random::{random_abp, random_read_order, random_roabp, RandomAbpParams, ReadShape};
use readk::evaldim::{k_gap_check, k_pass_to_roabp, roabp_synthesize, roabp_width_profile, Roabp};
use readk::hardpoly::{eliminate_summand, experiment_pn_evaldim, experiment_qn_evaldim};
use readk::pit::{iteration_bound, iteration_bound_check, read_k_pit, PitOptions};
use readk::sequences::{
    is_per_read_monotone, is_regularly_interleaving, longest_monotone, monotone_direction, per_read_monotone_subset,
    regularly_interleaving_subset,
};
use readk::{ReadSequence, SparsePoly};

use common::f101;

fn report(n: usize, ok: bool, detail: String) {
    println!("criterion {}: {} ({})", n, if ok { "PASS" } else { "FAIL" }, detail);
    assert!(ok, "criterion {} failed: {}", n, detail);
}

struct CorpusRun {
    k: usize,
    n: usize,
    is_zero: bool,
    expected_zero: bool,
    witness_ok: bool,
    iterations: usize,
}

/// Criterion 1's corpus, run once and shared with the iteration-count part of
/// criterion 10. Single-threaded so the runtime is a one-core time.
fn corpus() -> &'static (Vec<CorpusRun>, Duration) {
    static RUNS: OnceLock<(Vec<CorpusRun>, Duration)> = OnceLock::new();
    RUNS.get_or_init(|| {
        let opts = PitOptions {
            parallel: false,
            ..PitOptions::default()
        };
        let start = Instant::now();
        let mut runs = Vec::new();
        for k in 1..=3 {
            let mut rng = common::rng(100 + k as u64);
            for _ in 0..200 {
                let a = common::pit_instance(&mut rng, k);
                let v = read_k_pit(&a, &opts).unwrap();
                let witness_ok = match &v.witness {
                    Some(w) => !a.evaluate(w).unwrap().is_zero(),
                    None => true,
                };
                runs.push(CorpusRun {
                    k,
                    n: a.num_vars(),
                    is_zero: v.is_zero,
                    expected_zero: a.expand().unwrap().is_zero(),
                    witness_ok,
                    iterations: v.iterations.len(),
                });
            }
        }
        (runs, start.elapsed())
    })
}

#[test]
fn criterion_01_pit_exactness() {
    let (runs, elapsed) = corpus();
    let agree = runs.iter().filter(|r| r.is_zero == r.expected_zero && r.witness_ok).count();
    let zeros = runs.iter().filter(|r| r.expected_zero).count();
    let ok = agree == runs.len() && runs.len() == 600 && *elapsed < Duration::from_secs(600);
    report(
        1,
        ok,
        format!(
            "{}/{} agree, {} zero instances, {:.1}s single-threaded",
            agree,
            runs.len(),
            zeros,
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn criterion_02_width_collapse() {
    let field = f101();
    let mut rng = common::rng(2);
    let mut bad = Vec::new();
    let mut max_ratio = 0.0f64;
    for i in 0..100 {
        let n = rng.random_range(1..=6);
        let w = rng.random_range(1..=3);
        let d = rng.random_range(1..=2);
        let a = random_abp(&mut rng, field, &RandomAbpParams::new(n, 2, w, d, ReadShape::KPass));
        let r = k_pass_to_roabp(&a).unwrap();
        let same = r.abp().expand().unwrap() == a.expand().unwrap();
        let bound = a.width().pow(4);
        max_ratio = max_ratio.max(r.width() as f64 / bound as f64);
        if !same || r.width() > bound {
            bad.push(i);
        }
    }
    report(
        2,
        bad.is_empty(),
        format!("100 programs, violations {:?}, largest width/w^4 {:.3}", bad, max_ratio),
    );
}

#[test]
fn criterion_03_nisan_tightness() {
    let mut rng = common::rng(3);
    let mut bad = Vec::new();
    for i in 0..50 {
        let n = rng.random_range(1..=5);
        let density = rng.random_range(0.2..0.9);
        let f = common::random_multilinear(&mut rng, n, density);
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let r = roabp_synthesize(&f, &order).unwrap();
        let profile = roabp_width_profile(&f, &order).unwrap();
        let oracle: Vec<usize> = (1..n).map(|c| common::split_rank(&f, &order[..c])).collect();
        let realized = r.width_profile();
        if realized != profile || profile != oracle || r.abp().expand().unwrap() != f {
            bad.push(i);
        }
    }
    report(3, bad.is_empty(), format!("50 polynomials, violations {:?}", bad));
}

#[test]
fn criterion_04_erdos_szekeres() {
    let mut violations = 0;
    let mut checked = 0;
    for m in 1..=8 {
        let floor = (m as f64).sqrt().ceil() as usize;
        for perm in common::permutations(m) {
            let (sub, dir) = longest_monotone(&perm);
            let is_sub = {
                let mut it = perm.iter();
                sub.iter().all(|x| it.any(|y| y == x))
            };
            let ok = is_sub
                && (sub.len() < 2 || monotone_direction(&sub) == Some(dir))
                && sub.len() == common::longest_monotone_len(&perm)
                && sub.len() >= floor;
            violations += !ok as usize;
            checked += 1;
        }
    }
    report(
        4,
        violations == 0,
        format!("{} permutations of lengths 1..=8, {} violations", checked, violations),
    );
}

fn random_sequence<R: Rng>(rng: &mut R, n: usize, k: usize) -> ReadSequence {
    ReadSequence::from_labels(&random_read_order(rng, n, k, ReadShape::Shuffled)).unwrap()
}

#[test]
fn criterion_05_sequence_pruning() {
    let mut rng = common::rng(5);
    let mut violations = Vec::new();
    for (k, count, n_max) in [(2usize, 500, 12), (3, 200, 16)] {
        for i in 0..count {
            let n = rng.random_range(1..=n_max);
            let s = random_sequence(&mut rng, n, k);
            let mono = per_read_monotone_subset(&s);
            let sm = s.restrict(&mono);
            let mono_floor = (n as f64).powf(1.0 / 2f64.powi(k as i32 - 1));
            let ok_mono = is_per_read_monotone(&sm) && mono.len() as f64 >= mono_floor;
            let reg = regularly_interleaving_subset(&sm).unwrap();
            let sr = sm.restrict(&reg);
            let reg_floor = mono.len() as f64 / 3f64.powi((k * k) as i32);
            let ok_reg = is_regularly_interleaving(&sr).is_some() && reg.len() as f64 >= reg_floor;
            if !ok_mono || !ok_reg {
                violations.push((k, i));
            }
        }
    }
    report(
        5,
        violations.is_empty(),
        format!("500 read-2 and 200 read-3 sequences, violations {:?}", violations),
    );
}

#[test]
fn criterion_06_k_gap_consequence() {
    let mut rng = common::rng(6);
    let mut fixtures = 0;
    let mut violations = Vec::new();
    for (k, count, n_max) in [(2usize, 500, 12), (3, 300, 16)] {
        for i in 0..count {
            let n = rng.random_range(1..=n_max);
            let s = random_sequence(&mut rng, n, k);
            let sm = s.restrict(&per_read_monotone_subset(&s));
            let sr = sm.restrict(&regularly_interleaving_subset(&sm).unwrap());
            if !is_per_read_monotone(&sr) || is_regularly_interleaving(&sr).is_none() {
                violations.push((k, i, "not a fixture".to_string()));
                continue;
            }
            // relabel so the first read visits 0, 1, 2, ...
            let rank: BTreeMap<usize, usize> = sr.labels().iter().enumerate().map(|(i, &v)| (v, i)).collect();
            let labels: Vec<usize> = sr.label_sequence().iter().map(|v| rank[v]).collect();
            let a = common::sequence_abp(&labels);
            fixtures += 1;
            for prefix in 1..=sr.n() {
                let g = k_gap_check(&a, prefix);
                if g > k {
                    violations.push((k, i, format!("prefix {} has {} gaps", prefix, g)));
                }
            }
        }
    }
    report(
        6,
        violations.is_empty(),
        format!("{} pruned fixtures, violations {:?}", fixtures, violations),
    );
}

#[test]
fn criterion_07_pn_dimension_floor() {
    let mut failures = Vec::new();
    let mut total = 0;
    for n in [2, 3] {
        let rows = experiment_pn_evaldim(f101(), n, &[1, 2, 3, 4]).unwrap();
        total += rows.len();
        for t in 1..=4 {
            let rs: Vec<_> = rows.iter().filter(|r| r.t == t).collect();
            let below = rs.iter().filter(|r| !r.pass).count();
            if below > 0 {
                let min = rs.iter().map(|r| r.dimension).min().unwrap();
                failures.push(format!(
                    "n={} t={}: {}/{} subsets below {} (min {})",
                    n,
                    t,
                    below,
                    rs.len(),
                    rs[0].floor,
                    min
                ));
            }
        }
    }
    report(
        7,
        failures.is_empty(),
        format!("{} subsets, shortfalls: {}", total, failures.join("; ")),
    );
}

#[test]
fn criterion_08_qn_mechanism() {
    let mut detail = Vec::new();
    let mut ok = true;
    for n in [3, 4] {
        let rows = experiment_qn_evaldim(f101(), n, 50, 8).unwrap();
        let fails = rows.iter().filter(|r| !r.pass).count();
        let cover_ok = rows
            .iter()
            .all(|r| (r.s.split_whitespace().count() + r.t.split_whitespace().count()) as f64 >= 0.9 * 2.0 * n as f64);
        let max_m = rows.iter().map(|r| r.cross_edges).max().unwrap_or(0);
        ok &= rows.len() == 50 && fails == 0 && cover_ok;
        detail.push(format!("n={}: {} pairs, max m {}, {} below 2^m", n, rows.len(), max_m, fails));
    }
    report(8, ok, detail.join("; "));
}

fn subs_at(f: &SparsePoly, s: &[usize], point: &[readk::Fe]) -> SparsePoly {
    f.substitute(&s.iter().copied().zip(point.iter().copied()).collect()).unwrap()
}

#[test]
fn criterion_09_elimination_step() {
    let field = f101();
    let mut rng = common::rng(9);
    let mut bad = Vec::new();
    for i in 0..50 {
        let t = rng.random_range(1..=2);
        let n = rng.random_range(t + 1..=6);
        let w = rng.random_range(1..=3);
        let d = rng.random_range(1..=2);
        let parts: Vec<Roabp> = (0..2)
            .map(|_| {
                let mut order: Vec<usize> = (0..n).collect();
                order.shuffle(&mut rng);
                Roabp::new(random_roabp(&mut rng, field, &order, w, d), order).unwrap()
            })
            .collect();
        let e = eliminate_summand(&parts, t).unwrap();
        let fs: Vec<SparsePoly> = parts.iter().map(|p| p.abp().expand().unwrap()).collect();
        let combo = |f: &SparsePoly| {
            e.points.iter().zip(&e.alpha).fold(SparsePoly::zero(field, n), |acc, (p, &a)| {
                acc.add(&subs_at(f, &e.s, p).scale(a)).unwrap()
            })
        };
        let nonzero = e.alpha.iter().any(|a| !a.is_zero());
        let annihilates = combo(&fs[0]).is_zero();
        let res = &e.residuals[0];
        let correct = res.abp().expand().unwrap() == combo(&fs[1]);
        let narrow = res.width_profile().iter().all(|&c| c <= w * (w + 1));
        if !(nonzero && annihilates && correct && narrow) {
            bad.push(i);
        }
    }
    report(9, bad.is_empty(), format!("50 sums of two programs, violations {:?}", bad));
}

#[test]
fn criterion_10_iteration_bound() {
    let mut grid_failures = Vec::new();
    for pi in 1..=9 {
        let p = pi as f64 / 10.0;
        for r in 1..=9u64 {
            for n in 1..=10_000u64 {
                if !iteration_bound_check(n, p, r).unwrap() {
                    grid_failures.push((p, r, n));
                }
            }
        }
    }
    let (runs, _) = corpus();
    let over: Vec<_> = runs
        .iter()
        .filter(|r| r.iterations as f64 > iteration_bound(r.n, r.k))
        .map(|r| (r.k, r.n, r.iterations))
        .collect();
    let most = runs.iter().map(|r| r.iterations).max().unwrap_or(0);
    report(
        10,
        grid_failures.is_empty() && over.is_empty(),
        format!(
            "810000 grid points, {} uncertified; {} runs, most rounds {}, {} over the loop bound",
            grid_failures.len(),
            runs.len(),
            most,
            over.len()
        ),
    );
}
