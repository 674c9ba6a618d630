//! Dense real symmetric eigenproblems, sized for graphs on at most 64
//! vertices.
//!
//! The solver is a cyclic Jacobi sweep: for this order it is simple,
//! deterministic, and accurate to near machine precision, which is what the
//! exhaustive verification runs need. No external linear algebra is used so
//! the whole numeric path stays auditable.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Scalar;

/// Cap on Jacobi sweeps before reporting failure.
const MAX_SWEEPS: usize = 100;

/// Relative stopping tolerance used when callers do not supply one.
pub const DEFAULT_EIGEN_TOL: f64 = 1e-12;

/// Tolerance for any scalar type: the f64 default, floored well above the
/// type's own epsilon so f32 runs still terminate.
pub fn default_tol<T: Scalar>() -> T {
    let hundred_eps = T::epsilon() * T::from_int(100);
    let base = T::from_f64(DEFAULT_EIGEN_TOL).unwrap_or(hundred_eps);
    base.max(hundred_eps)
}

/// Dense symmetric matrix of order `n`, row-major.
///
/// Symmetry is enforced by construction: `set` writes both triangles and
/// `from_rows` validates exact equality.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix<T> {
    n: usize,
    entries: Vec<T>,
}

impl<T: Scalar> SymMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            entries: vec![T::zero(); n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let n = rows.len();
        let mut m = SymMatrix::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch(n, row.len()));
            }
            for (j, &x) in row.iter().enumerate() {
                if rows[j][i] != x {
                    return Err(Error::NotSymmetric(i, j));
                }
                m.entries[i * n + j] = x;
            }
        }
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.entries[i * self.n + j]
    }

    /// Set entry `(i, j)` and its mirror.
    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.entries[i * self.n + j] = value;
        self.entries[j * self.n + i] = value;
    }

    pub fn add(&self, other: &SymMatrix<T>) -> Result<SymMatrix<T>> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| a + b)
            .collect();
        Ok(SymMatrix { n: self.n, entries })
    }

    pub fn frobenius_norm(&self) -> T {
        self.entries
            .iter()
            .fold(T::zero(), |acc, &x| acc + x * x)
            .sqrt()
    }

    /// y = M x.
    pub fn apply(&self, x: &[T]) -> Vec<T> {
        self.entries
            .chunks_exact(self.n)
            .map(|row| {
                row.iter()
                    .zip(x)
                    .fold(T::zero(), |acc, (&a, &b)| acc + a * b)
            })
            .collect()
    }
}

/// Signless Laplacian Q(G) = D(G) + A(G): degrees on the diagonal, a one for
/// every edge off it.
pub fn signless_laplacian<T: Scalar>(g: &Graph) -> SymMatrix<T> {
    let n = g.vertex_count();
    let mut m = SymMatrix::zeros(n);
    for v in 0..n {
        m.set(v, v, T::from_int(g.degree(v) as i64));
    }
    for (i, j) in g.edges() {
        m.set(i, j, T::one());
    }
    m
}

/// Eigenvalues in nonincreasing order with orthonormal eigenvectors and the
/// largest certified residual.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum<T> {
    /// q_1 >= q_2 >= ... >= q_n.
    pub values: Vec<T>,
    /// `vectors[i]` is the unit eigenvector paired with `values[i]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vectors: Option<Vec<Vec<T>>>,
    /// max_i ||M v_i - values[i] v_i||_2.
    pub max_residual: T,
}

impl<T> Spectrum<T> {
    pub fn without_vectors(mut self) -> Self {
        self.vectors = None;
        self
    }
}

/// Full spectrum of a symmetric matrix by cyclic Jacobi rotations.
///
/// Stops once the off-diagonal Frobenius norm drops below `tol * ||M||_F`;
/// errors after 100 sweeps rather than spinning. Output is deterministic for
/// identical input: the sweep order is fixed and ties keep the diagonal
/// order the sweeps produced.
pub fn eigen_sym<T: Scalar>(m: &SymMatrix<T>, tol: T) -> Result<Spectrum<T>> {
    if tol <= T::zero() {
        return Err(Error::InvalidInput("tolerance must be positive"));
    }
    let n = m.order();
    let scale = m.frobenius_norm();
    let threshold = tol * scale;

    let mut a = m.entries.clone();
    let mut v = vec![T::zero(); n * n];
    for i in 0..n {
        v[i * n + i] = T::one();
    }

    let mut sweeps = 0;
    loop {
        let mut off2 = T::zero();
        for p in 0..n {
            for q in (p + 1)..n {
                off2 += a[p * n + q] * a[p * n + q];
            }
        }
        let off = (off2 + off2).sqrt();
        if off <= threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off: off.to_f64().unwrap_or(f64::NAN),
            });
        }
        sweeps += 1;
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == T::zero() {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (apq + apq);
                let mut t = T::one() / (theta.abs() + (T::one() + theta * theta).sqrt());
                if theta < T::zero() {
                    t = -t;
                }
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = t * c;
                let tau = s / (T::one() + c);
                let h = t * apq;
                a[p * n + p] -= h;
                a[q * n + q] += h;
                a[p * n + q] = T::zero();
                a[q * n + p] = T::zero();
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let g = a[r * n + p];
                    let hh = a[r * n + q];
                    let new_p = g - s * (hh + g * tau);
                    let new_q = hh + s * (g - hh * tau);
                    a[r * n + p] = new_p;
                    a[p * n + r] = new_p;
                    a[r * n + q] = new_q;
                    a[q * n + r] = new_q;
                }
                for r in 0..n {
                    let g = v[r * n + p];
                    let hh = v[r * n + q];
                    v[r * n + p] = g - s * (hh + g * tau);
                    v[r * n + q] = hh + s * (g - hh * tau);
                }
            }
        }
    }

    // Stable sort into nonincreasing order; ties keep the sweep output order.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[j * n + j]
            .partial_cmp(&a[i * n + i])
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let values: Vec<T> = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors: Vec<Vec<T>> = order
        .iter()
        .map(|&col| (0..n).map(|r| v[r * n + col]).collect())
        .collect();

    let mut max_residual = T::zero();
    for (val, vec) in values.iter().zip(&vectors) {
        let image = m.apply(vec);
        let mut r2 = T::zero();
        for (y, x) in image.iter().zip(vec) {
            let d = *y - *val * *x;
            r2 += d * d;
        }
        max_residual = max_residual.max(r2.sqrt());
    }

    Ok(Spectrum {
        values,
        vectors: Some(vectors),
        max_residual,
    })
}

/// `(q_1, q_n)` of the signless Laplacian of `g`.
pub fn q_extremes<T: Scalar>(g: &Graph) -> Result<(T, T)> {
    let spectrum = eigen_sym(&signless_laplacian::<T>(g), default_tol::<T>())?;
    let q1 = spectrum.values[0];
    let qn = *spectrum.values.last().expect("n >= 1");
    Ok((q1, qn))
}

/// ||M v - value v||_2 / ||v||_2.
pub fn rayleigh_residual<T: Scalar>(m: &SymMatrix<T>, value: T, vector: &[T]) -> Result<T> {
    if vector.len() != m.order() {
        return Err(Error::DimensionMismatch(m.order(), vector.len()));
    }
    let norm2 = vector.iter().fold(T::zero(), |acc, &x| acc + x * x);
    if norm2 == T::zero() {
        return Err(Error::ZeroVector);
    }
    let image = m.apply(vector);
    let mut r2 = T::zero();
    for (y, x) in image.iter().zip(vector) {
        let d = *y - value * *x;
        r2 += d * d;
    }
    Ok((r2 / norm2).sqrt())
}
