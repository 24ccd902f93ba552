use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default modulus for desk-scale experiments; larger than every degree the
/// test corpora produce.
pub const DEFAULT_PRIME: u64 = 101;

/// A canonical residue in `[0, p)`. Arithmetic goes through [`PrimeField`].
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Fe(pub(crate) u64);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Inv,
}

/// The prime field `F_p`. The modulus must fit in 32 bits so products of two
/// residues fit in a `u64`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u64,
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    /// Reduces an arbitrary signed integer into the field.
    pub fn elem(self, v: i64) -> Fe {
        Fe(v.rem_euclid(self.p as i64) as u64)
    }

    pub fn from_u64(self, v: u64) -> Fe {
        Fe(v % self.p)
    }

    pub fn add(self, a: Fe, b: Fe) -> Fe {
        let s = a.0 + b.0;
        Fe(if s >= self.p { s - self.p } else { s })
    }

    pub fn sub(self, a: Fe, b: Fe) -> Fe {
        Fe(if a.0 >= b.0 { a.0 - b.0 } else { a.0 + self.p - b.0 })
    }

    pub fn neg(self, a: Fe) -> Fe {
        if a.0 == 0 {
            a
        } else {
            Fe(self.p - a.0)
        }
    }

    pub fn mul(self, a: Fe, b: Fe) -> Fe {
        Fe(a.0 * b.0 % self.p)
    }

    pub fn pow(self, a: Fe, mut e: u64) -> Fe {
        let mut base = a;
        let mut acc = Fe::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(self, a: Fe) -> Result<Fe> {
        if a.0 == 0 {
            return Err(Error::ZeroInverse(self.p));
        }
        Ok(self.pow(a, self.p - 2))
    }

    /// Single entry point over the four basic operations; `b` is ignored for
    /// inversion.
    pub fn apply(self, a: Fe, b: Fe, op: FieldOp) -> Result<Fe> {
        Ok(match op {
            FieldOp::Add => self.add(a, b),
            FieldOp::Sub => self.sub(a, b),
            FieldOp::Mul => self.mul(a, b),
            FieldOp::Inv => self.inv(a)?,
        })
    }

    pub fn ensure_same(self, other: PrimeField) -> Result<()> {
        if self != other {
            return Err(Error::FieldMismatch {
                left: self.p,
                right: other.p,
            });
        }
        Ok(())
    }

    /// Iterates over all residues `0..p`.
    pub fn elements(self) -> impl Iterator<Item = Fe> {
        (0..self.p).map(Fe)
    }
}
