use std::fmt;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Fe, PrimeField};
use crate::error::{Error, Result};
use crate::evaldim::grid_points;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Grid,
    Random,
    External,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Grid => "grid",
            Provenance::Random => "random",
            Provenance::External => "external",
        })
    }
}

/// Where ROABP hitting sets come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    /// The full grid `{0..d}^m`; hits every nonzero polynomial of individual
    /// degree at most `d`.
    Grid,
    /// Uniform points from a seeded stream. `count` defaults to
    /// `(m * w * d)^2`.
    Random { seed: u64, count: Option<usize> },
    /// Points over all variables of the program, loaded from a file; a
    /// subset of variables uses the projection of these points.
    External { points: Vec<Vec<Fe>> },
}

impl Generator {
    pub fn provenance(&self) -> Provenance {
        match self {
            Generator::Grid => Provenance::Grid,
            Generator::Random { .. } => Provenance::Random,
            Generator::External { .. } => Provenance::External,
        }
    }
}

/// Points assigning values to `vars`, in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HittingSet {
    pub vars: Vec<usize>,
    pub points: Vec<Vec<Fe>>,
    pub provenance: Provenance,
    /// Width the set is meant for.
    pub width: usize,
    /// Individual degree the set is meant for.
    pub degree: u32,
}

impl HittingSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, point: &[Fe]) -> bool {
        self.points.iter().any(|p| p == point)
    }
}

fn pow_size(base: u128, exp: usize) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base))
}

/// The complete grid `{0, ..., d}^|vars|`.
pub fn grid_hitting_set(field: PrimeField, vars: &[usize], d: u32, guard: u128) -> Result<HittingSet> {
    if d as u64 >= field.modulus() {
        return Err(Error::Precondition(format!(
            "degree {} grid needs more than {} field elements",
            d,
            field.modulus()
        )));
    }
    let size = pow_size(d as u128 + 1, vars.len());
    if size > guard {
        return Err(Error::GuardExceeded {
            what: "grid hitting set",
            estimate: size,
            limit: guard,
        });
    }
    let points = grid_points(vars.len(), d as u64)
        .map(|g| g.into_iter().map(|x| field.from_u64(x)).collect())
        .collect();
    Ok(HittingSet {
        vars: vars.to_vec(),
        points,
        provenance: Provenance::Grid,
        width: 0,
        degree: d,
    })
}

/// Hitting set intended for width-`w`, individual-degree-`d` read-once
/// programs over `vars`. Only the grid is complete unconditionally.
pub fn roabp_hitting_set(
    field: PrimeField,
    vars: &[usize],
    w: usize,
    d: u32,
    generator: &Generator,
    guard: u128,
) -> Result<HittingSet> {
    let mut h = match generator {
        Generator::Grid => grid_hitting_set(field, vars, d, guard)?,
        Generator::Random { seed, count } => {
            let m = vars.len();
            let count = count.unwrap_or_else(|| {
                let s = (m * w * d as usize).max(1);
                s * s
            });
            if count as u128 > guard {
                return Err(Error::GuardExceeded {
                    what: "random hitting set",
                    estimate: count as u128,
                    limit: guard,
                });
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let points = (0..count)
                .map(|_| {
                    (0..m)
                        .map(|_| field.from_u64(rng.random_range(0..field.modulus())))
                        .collect()
                })
                .collect();
            HittingSet {
                vars: vars.to_vec(),
                points,
                provenance: Provenance::Random,
                width: w,
                degree: d,
            }
        }
        Generator::External { points } => {
            let mut out: Vec<Vec<Fe>> = Vec::new();
            for p in points {
                if let Some(&v) = vars.iter().find(|&&v| v >= p.len()) {
                    return Err(Error::VariableOutOfRange {
                        index: v,
                        num_vars: p.len(),
                    });
                }
                let q: Vec<Fe> = vars.iter().map(|&v| p[v]).collect();
                if !out.contains(&q) {
                    out.push(q);
                }
            }
            HittingSet {
                vars: vars.to_vec(),
                points: out,
                provenance: Provenance::External,
                width: w,
                degree: d,
            }
        }
    };
    h.width = w;
    Ok(h)
}

/// Hitting set for k-pass programs of width `w` in the pass order `order`:
/// the set for read-once programs of width `w^(2k)` (just `w` for `k = 1`)
/// and individual degree `k * d`.
pub fn k_pass_hitting_set(
    field: PrimeField,
    order: &[usize],
    w: usize,
    d: u32,
    k: usize,
    generator: &Generator,
    guard: u128,
) -> Result<HittingSet> {
    let width = if k <= 1 { w } else { w.saturating_pow(2 * k as u32) };
    roabp_hitting_set(field, order, width, d * k.max(1) as u32, generator, guard)
}

/// Parses a point file: one point per line, decimal field elements separated
/// by whitespace or commas, one per variable. Blank lines and lines starting
/// with `#` are ignored.
pub fn parse_points(text: &str, field: PrimeField, num_vars: usize) -> Result<Vec<Vec<Fe>>> {
    let mut out = Vec::new();
    for (li, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut point = Vec::with_capacity(num_vars);
        let mut col = 0;
        for tok in line.split(|c: char| c.is_whitespace() || c == ',') {
            let start = col;
            col += tok.len() + 1;
            if tok.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: li + 1,
                column: start + 1,
                message,
            };
            let v: u64 = tok
                .parse()
                .map_err(|_| err(format!("`{}` is not a field element", tok)))?;
            if v >= field.modulus() {
                return Err(err(format!("{} is not below {}", v, field.modulus())));
            }
            point.push(field.from_u64(v));
        }
        if point.len() != num_vars {
            return Err(Error::Parse {
                line: li + 1,
                column: 1,
                message: format!("expected {} values, found {}", num_vars, point.len()),
            });
        }
        out.push(point);
    }
    Ok(out)
}

pub fn load_points(path: &Path, field: PrimeField, num_vars: usize) -> Result<Vec<Vec<Fe>>> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_points(&text, field, num_vars)
}
