//! The reduced three-variable eigenvalue system for graphs whose complement
//! is a star plus a disjoint edge, collapsed to a monic cubic.
//!
//! For such a graph the least-eigenvalue eigenvector is constant on the two
//! symmetry orbits {v2, v3} and {v4, ..., vn}, so the full eigenproblem
//! restricts to three unknowns (x1, x2, x4). A value q admits a nontrivial
//! solution exactly when the 3x3 coefficient determinant vanishes; this
//! module carries that determinant as a polynomial and finds its real roots
//! by bisection with Newton polishing.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Monic cubic `q^3 + c2 q^2 + c1 q + c0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cubic<T> {
    pub c2: T,
    pub c1: T,
    pub c0: T,
}

impl<T: Scalar> Cubic<T> {
    pub fn eval(&self, q: T) -> T {
        ((q + self.c2) * q + self.c1) * q + self.c0
    }

    fn derivative(&self, q: T) -> T {
        let three = T::from_int(3);
        let two = T::from_int(2);
        three * q * q + two * self.c2 * q + self.c1
    }

    /// All real roots in `[lo, hi]`, ascending, found by scanning a uniform
    /// grid for sign changes, bisecting each bracket, then polishing with a
    /// few Newton steps. Grid resolution is fine enough for well-separated
    /// roots, which is all the callers here need.
    pub fn real_roots_in(&self, lo: T, hi: T, samples: usize) -> Vec<T> {
        let mut roots = Vec::new();
        let span = hi - lo;
        let step = span / T::from_int(samples as i64);
        let mut prev_x = lo;
        let mut prev_f = self.eval(lo);
        if prev_f == T::zero() {
            roots.push(lo);
        }
        for i in 1..=samples {
            let x = if i == samples {
                hi
            } else {
                lo + step * T::from_int(i as i64)
            };
            let f = self.eval(x);
            if f == T::zero() {
                roots.push(x);
            } else if prev_f != T::zero() && (prev_f < T::zero()) != (f < T::zero()) {
                roots.push(self.refine(prev_x, x));
            }
            prev_x = x;
            prev_f = f;
        }
        roots.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
        roots.dedup_by(|a, b| (*a - *b).abs() <= T::from_f64(1e-9).unwrap_or_else(T::epsilon));
        roots
    }

    pub fn smallest_root_in(&self, lo: T, hi: T, samples: usize) -> Option<T> {
        self.real_roots_in(lo, hi, samples).first().copied()
    }

    fn refine(&self, mut lo: T, mut hi: T) -> T {
        let mut f_lo = self.eval(lo);
        for _ in 0..200 {
            let mid = (lo + hi) / T::from_int(2);
            if mid == lo || mid == hi {
                break;
            }
            let f_mid = self.eval(mid);
            if f_mid == T::zero() {
                return mid;
            }
            if (f_lo < T::zero()) == (f_mid < T::zero()) {
                lo = mid;
                f_lo = f_mid;
            } else {
                hi = mid;
            }
        }
        // Newton polish to squeeze out the final digits.
        let mut x = (lo + hi) / T::from_int(2);
        for _ in 0..8 {
            let d = self.derivative(x);
            if d == T::zero() {
                break;
            }
            let next = x - self.eval(x) / d;
            if (next - x).abs()
                <= T::from_f64(1e-12).unwrap_or_else(T::epsilon) * x.abs().max(T::one())
            {
                x = next;
                break;
            }
            x = next;
        }
        x
    }
}

/// Determinant condition of the reduced system for the complement of
/// K_{1,n-3} plus an edge, as a monic cubic in q.
///
/// The system in (x1, x2, x4) is
///   (q - 2) x1 - 2 x2                          = 0
///             2 x2 + (2n - 6 - q) x4           = 0
///   x1 + (n - 2 - q) x2 + (n - 3) x4           = 0
///
/// and expanding the determinant gives
///   q^3 - (3n-6) q^2 + (2n^2-6n) q - 4(n-3)(n-4).
pub fn reduced_star_k2_cubic<T: Scalar>(n: usize) -> Result<Cubic<T>> {
    if n < 5 {
        return Err(Error::OrderOutOfRange(n, "5..=64"));
    }
    let ni = n as i64;
    Ok(Cubic {
        c2: T::from_int(-(3 * ni - 6)),
        c1: T::from_int(2 * ni * ni - 6 * ni),
        c0: T::from_int(-4 * (ni - 3) * (ni - 4)),
    })
}
