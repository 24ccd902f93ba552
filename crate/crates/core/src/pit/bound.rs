use crate::error::{Error, Result};

/// Closed interval of reals with `f64` endpoints.
#[derive(Copy, Clone, Debug)]
struct Iv {
    lo: f64,
    hi: f64,
}

impl Iv {
    fn point(x: f64) -> Iv {
        Iv { lo: x, hi: x }
    }

    /// Encloses a decimal parameter that may not be representable.
    fn around(x: f64) -> Iv {
        Iv {
            lo: x.next_down(),
            hi: x.next_up(),
        }
    }

    fn widen(lo: f64, hi: f64, ulps: usize) -> Iv {
        let mut iv = Iv { lo, hi };
        for _ in 0..ulps {
            iv.lo = iv.lo.next_down();
            iv.hi = iv.hi.next_up();
        }
        iv
    }

    fn sub(self, o: Iv) -> Iv {
        Iv::widen(self.lo - o.hi, self.hi - o.lo, 1)
    }

    fn div(self, o: Iv) -> Iv {
        debug_assert!(o.lo > 0.0 && self.lo >= 0.0);
        Iv::widen(self.lo / o.hi, self.hi / o.lo, 1)
    }

    /// `self^e` for a nonnegative base and positive exponent.
    fn pow(self, e: Iv) -> Iv {
        let b = Iv {
            lo: self.lo.max(0.0),
            hi: self.hi.max(0.0),
        };
        let c = [b.lo.powf(e.lo), b.lo.powf(e.hi), b.hi.powf(e.lo), b.hi.powf(e.hi)];
        let lo = c.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = c.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let mut iv = Iv::widen(lo, hi, 2);
        iv.lo = iv.lo.max(0.0);
        iv
    }
}

/// Decides `n^(1-p) - (n - n^p / r)^(1-p) >= (1-p) / r` with outward-rounded
/// interval arithmetic. `true` is only returned when the inequality is
/// certified; `p` is treated as the decimal it was written as.
pub fn iteration_bound_check(n: u64, p: f64, r: u64) -> Result<bool> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Argument(format!("p = {} must lie strictly between 0 and 1", p)));
    }
    if n == 0 || r == 0 {
        return Err(Error::Argument("n and r must be at least 1".into()));
    }
    let one = Iv::point(1.0);
    let pv = Iv::around(p);
    let q = one.sub(pv);
    let nv = Iv::point(n as f64);
    let rv = Iv::point(r as f64);
    let lhs = nv.pow(q).sub(nv.sub(nv.pow(pv).div(rv)).pow(q));
    let rhs = q.div(rv);
    Ok(lhs.lo >= rhs.hi)
}

/// The loop bound `2 * 3^(k^2) * n^(1 - 1/2^(k-1))`.
pub fn iteration_bound(n: usize, k: usize) -> f64 {
    if k == 0 {
        return 2.0;
    }
    let e = 1.0 - 1.0 / 2f64.powi(k as i32 - 1);
    2.0 * 3f64.powi((k * k) as i32) * (n as f64).powf(e)
}

/// Size guarantee for the variable subset chosen in one round:
/// `n^(1/2^(k-1)) / 3^(k^2)`.
pub fn subset_floor(n: usize, k: usize) -> f64 {
    if k == 0 {
        return 0.0;
    }
    (n as f64).powf(1.0 / 2f64.powi(k as i32 - 1)) / 3f64.powi((k * k) as i32)
}
