//! Closed-form eigenvalue bounds and their applicability predicates.
//!
//! Everything here is a pure formula in integer graph data (n, m, k,
//! degrees). Values are assembled in integer arithmetic and divided once at
//! the end, so tight cases compare exactly.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DegreeProfile, Graph};
use crate::scalar::Scalar;
use crate::spectral::{default_tol, eigen_sym, SymMatrix};

/// Least-eigenvalue lower bound `2m/(n-1) - n + 2`.
pub fn conjecture_bound<T: Scalar>(n: usize, m: usize) -> Result<T> {
    if n < 2 {
        return Err(Error::OrderOutOfRange(n, "2..=64"));
    }
    let (n, m) = (n as i64, m as i64);
    Ok(T::ratio(2 * m - (n - 2) * (n - 1), n - 1))
}

/// The stronger least-eigenvalue lower bound `2m/(n-2) - n + 1`.
pub fn theorem_bound<T: Scalar>(n: usize, m: usize) -> Result<T> {
    if n < 3 {
        return Err(Error::OrderOutOfRange(n, "3..=64"));
    }
    let (n, m) = (n as i64, m as i64);
    Ok(T::ratio(2 * m - (n - 1) * (n - 2), n - 2))
}

/// Least signless Laplacian eigenvalue of K_n minus one edge:
/// `(3n - 6 - sqrt((n-2)(n+6))) / 2`.
pub fn tau<T: Scalar>(n: usize) -> Result<T> {
    if n < 3 {
        return Err(Error::OrderOutOfRange(n, "3..=64"));
    }
    let ni = n as i64;
    let disc = T::from_int((ni - 2) * (ni + 6)).sqrt();
    Ok((T::from_int(3 * ni - 6) - disc) / T::from_int(2))
}

/// Merris-type upper bound on the largest eigenvalue:
/// `max_u d(u) + (sum of neighbour degrees) / d(u)` over vertices of
/// positive degree. Isolated vertices cannot attain the maximum in any graph
/// with an edge, so they are skipped; an edgeless graph gets 0, which equals
/// its q_1.
pub fn merris_q1_upper<T: Scalar>(g: &Graph) -> T {
    let n = g.vertex_count();
    let degrees: Vec<u64> = (0..n).map(|v| g.degree(v) as u64).collect();
    // Track the max as an exact fraction num/den.
    let mut best: Option<(u64, u64)> = None;
    for u in 0..n {
        let d = degrees[u];
        if d == 0 {
            continue;
        }
        let mut nbsum = 0u64;
        let mut nb = g.neighbors(u);
        while nb != 0 {
            let v = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            nbsum += degrees[v];
        }
        let cand = (d * d + nbsum, d);
        let better = match best {
            None => true,
            Some((num, den)) => cand.0 * den > num * cand.1,
        };
        if better {
            best = Some(cand);
        }
    }
    match best {
        Some((num, den)) => T::ratio(num as i64, den as i64),
        None => T::zero(),
    }
}

/// Lower bound on the least eigenvalue for a graph with `k` vertices of full
/// degree: `(n + 2k - 2 - sqrt((n+2k-2)^2 - 8k(k-1))) / 2`.
///
/// Stated for graphs other than K_n; callers evaluating it at `k = n` get
/// the formula value anyway and should carry the hypothesis flag themselves.
pub fn full_degree_lower<T: Scalar>(n: usize, k: usize) -> Result<T> {
    if k > n {
        return Err(Error::InvalidInput("k exceeds the vertex count"));
    }
    let (n, k) = (n as i64, k as i64);
    let base = n + 2 * k - 2;
    let disc = T::from_int(base * base - 8 * k * (k - 1)).sqrt();
    Ok((T::from_int(base) - disc) / T::from_int(2))
}

/// Applicability of the `2k/(n-2)` bound: one or two full-degree vertices,
/// at least one vertex of degree n-2, and n at least 7.
pub fn near_full_applicable(profile: &DegreeProfile, n: usize) -> bool {
    (profile.k == 1 || profile.k == 2) && profile.near_full >= 1 && n >= 7
}

/// The bound `2k/(n-2)` itself, defined for k in {1, 2}.
pub fn near_full_lower<T: Scalar>(n: usize, k: usize) -> Result<T> {
    if k != 1 && k != 2 {
        return Err(Error::InvalidInput("bound requires k = 1 or 2"));
    }
    if n < 3 {
        return Err(Error::OrderOutOfRange(n, "3..=64"));
    }
    Ok(T::ratio(2 * k as i64, n as i64 - 2))
}

/// Both sides of the Weyl-type inequality
/// `lambda_n(A + B) <= lambda_1(A) + lambda_n(B)`.
///
/// Returns `(lhs, rhs)`; the caller asserts the ordering at its own
/// tolerance.
pub fn weyl_min_sum<T: Scalar>(a: &SymMatrix<T>, b: &SymMatrix<T>) -> Result<(T, T)> {
    let sum = a.add(b)?;
    let tol = default_tol::<T>();
    let s_sum = eigen_sym(&sum, tol)?;
    let s_a = eigen_sym(a, tol)?;
    let s_b = eigen_sym(b, tol)?;
    let lhs = *s_sum.values.last().expect("order >= 1");
    let rhs = s_a.values[0] + *s_b.values.last().expect("order >= 1");
    Ok((lhs, rhs))
}

/// Upper bound on the largest eigenvalue by the heaviest edge:
/// `max over edges {u,v} of d(u) + d(v)`. Dominates the Merris bound.
pub fn edge_degree_q1_upper<T: Scalar>(g: &Graph) -> Result<T> {
    let best = g
        .edges()
        .map(|(u, v)| g.degree(u) + g.degree(v))
        .max()
        .ok_or(Error::NoEdges)?;
    Ok(T::from_int(best as i64))
}

/// Every bound of this module evaluated on one graph, with slacks against
/// the measured extreme eigenvalues.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    /// Edge surplus m - (n-1)(n-2)/2; negative below the critical regime.
    pub r: i64,
    /// Vertices of full degree n-1.
    pub k: usize,
    pub qn: f64,
    pub q1: f64,
    pub conj_bound: f64,
    pub thm_bound: f64,
    /// qn - conj_bound.
    pub conj_slack: f64,
    /// qn - thm_bound.
    pub thm_slack: f64,
    pub merris_upper: f64,
    pub full_degree_lower: f64,
    pub near_full_applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub near_full_lower: Option<f64>,
    /// The k = n case: the full-degree bound assumes G != K_n, so its value
    /// is reported with this warning raised instead of an error.
    pub complete_graph: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{q_extremes, signless_laplacian};

    #[test]
    fn conjecture_bound_values() {
        assert_eq!(conjecture_bound::<f64>(5, 9).unwrap(), 1.5);
        // n = 2 with one edge: bound 2, while q_2(K_2) = 0.
        assert_eq!(conjecture_bound::<f64>(2, 1).unwrap(), 2.0);
        assert!((conjecture_bound::<f64>(4, 5).unwrap() - 4.0 / 3.0).abs() < 1e-15);
        assert!(conjecture_bound::<f64>(1, 0).is_err());
    }

    #[test]
    fn theorem_bound_values() {
        assert_eq!(theorem_bound::<f64>(5, 9).unwrap(), 2.0);
        assert_eq!(theorem_bound::<f64>(6, 10).unwrap(), 0.0);
        assert!((theorem_bound::<f64>(8, 22).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert!(theorem_bound::<f64>(2, 1).is_err());
    }

    #[test]
    fn tau_values() {
        assert_eq!(tau::<f64>(3).unwrap(), 0.0);
        assert!((tau::<f64>(5).unwrap() - (9.0 - 33.0f64.sqrt()) / 2.0).abs() < 1e-15);
        let tau4 = tau::<f64>(4).unwrap();
        assert!((tau4 - (3.0 - 5.0f64.sqrt())).abs() < 1e-15);
        assert!(tau4 < conjecture_bound::<f64>(4, 5).unwrap());
        assert!(tau::<f64>(2).is_err());
    }

    #[test]
    fn tau_matches_eigensolver() {
        for n in 3..=12 {
            let g = Graph::complete_minus_edge(n).unwrap();
            let (_, qn) = q_extremes::<f64>(&g).unwrap();
            assert!((tau::<f64>(n).unwrap() - qn).abs() <= 1e-9, "n={n}");
        }
    }

    #[test]
    fn merris_examples() {
        let mut star = Graph::empty(4).unwrap();
        for leaf in 1..4 {
            star.add_edge(0, leaf);
        }
        assert_eq!(merris_q1_upper::<f64>(&star), 4.0);
        for n in 3..=8 {
            let kn = Graph::complete(n).unwrap();
            let bound = merris_q1_upper::<f64>(&kn);
            assert_eq!(bound, (2 * n - 2) as f64);
            let (q1, _) = q_extremes::<f64>(&kn).unwrap();
            assert!((q1 - bound).abs() < 1e-9, "tight on K_{n}");
        }
        assert_eq!(merris_q1_upper::<f64>(&Graph::empty(3).unwrap()), 0.0);
    }

    #[test]
    fn merris_dominates_q1_on_all_small_graphs() {
        // Exhaustive over every labeled graph with n <= 5.
        for n in 1..=5usize {
            for mask in 0..1u64 << (n * (n - 1) / 2) {
                let g = Graph::from_edge_bits(n, mask).unwrap();
                let (q1, _) = q_extremes::<f64>(&g).unwrap();
                let merris = merris_q1_upper::<f64>(&g);
                assert!(q1 <= merris + 1e-9, "n={n} mask={mask}");
                if g.edge_count() > 0 {
                    let edge = edge_degree_q1_upper::<f64>(&g).unwrap();
                    assert!(merris <= edge + 1e-9, "n={n} mask={mask}");
                    assert!(q1 <= edge + 1e-9);
                }
            }
        }
    }

    #[test]
    fn full_degree_lower_values() {
        assert_eq!(full_degree_lower::<f64>(9, 0).unwrap(), 0.0);
        assert_eq!(full_degree_lower::<f64>(9, 1).unwrap(), 0.0);
        let t5 = full_degree_lower::<f64>(5, 3).unwrap();
        assert!(
            (t5 - tau::<f64>(5).unwrap()).abs() < 1e-15,
            "tight on K5 minus an edge"
        );
        assert_eq!(full_degree_lower::<f64>(8, 4).unwrap(), 2.0);
        assert!(full_degree_lower::<f64>(4, 5).is_err());
    }

    #[test]
    fn full_degree_bound_tight_on_k5_minus_edge() {
        let g = Graph::complete_minus_edge(5).unwrap();
        let p = g.degree_profile();
        assert_eq!(p.k, 3);
        let (_, qn) = q_extremes::<f64>(&g).unwrap();
        assert!((full_degree_lower::<f64>(5, p.k).unwrap() - qn).abs() <= 1e-9);
    }

    #[test]
    fn near_full_values_and_predicate() {
        assert!((near_full_lower::<f64>(8, 1).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert!((near_full_lower::<f64>(8, 2).unwrap() - 2.0 / 3.0).abs() < 1e-15);
        assert!(near_full_lower::<f64>(8, 3).is_err());
        assert!(near_full_lower::<f64>(8, 0).is_err());

        // K_7 minus one edge has k = 5: predicate boundary, not applicable.
        let g = Graph::complete_minus_edge(7).unwrap();
        assert!(!near_full_applicable(&g.degree_profile(), 7));
        // K_7 minus a path of two edges: k = 4, still out.
        let mut h = Graph::complete(7).unwrap();
        h.remove_edge(0, 1);
        h.remove_edge(1, 2);
        assert!(!near_full_applicable(&h.degree_profile(), 7));
        // K_7 minus a 5-edge star at vertex 0: degrees 1,5,5,5,5,5,6,
        // so k = 1 with five vertices of degree n-2.
        let mut a = Graph::complete(7).unwrap();
        for v in 1..6 {
            a.remove_edge(0, v);
        }
        let p = a.degree_profile();
        assert_eq!(p.k, 1);
        assert!(p.near_full >= 1);
        assert!(near_full_applicable(&p, 7));
        // Same shape one vertex short of the order requirement.
        let mut b = Graph::complete(6).unwrap();
        for v in 1..5 {
            b.remove_edge(0, v);
        }
        assert!(!near_full_applicable(&b.degree_profile(), 6));
    }

    #[test]
    fn weyl_examples() {
        let q2: SymMatrix<f64> = signless_laplacian(&Graph::complete(2).unwrap());
        let (lhs, rhs) = weyl_min_sum(&q2, &q2).unwrap();
        assert!(lhs.abs() < 1e-12);
        assert!((rhs - 2.0).abs() < 1e-12);

        // Complement pair: Q(G) + Q(G^c) = Q(K_n), so
        // n - 2 = q_n(K_n) <= q_1(G^c) + q_n(G).
        let g = Graph::star_k2_complement(8).unwrap();
        let (lhs, rhs) = weyl_min_sum(
            &signless_laplacian::<f64>(&g.complement()),
            &signless_laplacian::<f64>(&g),
        )
        .unwrap();
        assert!((lhs - 6.0).abs() < 1e-9);
        assert!(lhs <= rhs + 1e-9);

        let z3 = SymMatrix::<f64>::zeros(3);
        assert!(weyl_min_sum(&q2, &z3).is_err());
    }

    #[test]
    fn edge_degree_examples() {
        // Star plus disjoint edge on 8 vertices: max edge degree sum = n-2.
        let co = Graph::star_k2_complement(8).unwrap().complement();
        assert_eq!(edge_degree_q1_upper::<f64>(&co).unwrap(), 6.0);
        assert_eq!(
            edge_degree_q1_upper::<f64>(&Graph::complete(3).unwrap()).unwrap(),
            4.0
        );
        assert!(edge_degree_q1_upper::<f64>(&Graph::empty(4).unwrap()).is_err());
    }

    #[test]
    fn bound_gap_identity() {
        // thm - conj = 2m/((n-1)(n-2)) - 1, positive exactly above the
        // critical edge count.
        for n in 4..=10usize {
            for m in 0..=n * (n - 1) / 2 {
                let conj = conjecture_bound::<f64>(n, m).unwrap();
                let thm = theorem_bound::<f64>(n, m).unwrap();
                let gap = 2.0 * m as f64 / ((n as f64 - 1.0) * (n as f64 - 2.0)) - 1.0;
                assert!((thm - conj - gap).abs() < 1e-12);
                let critical = (n - 1) * (n - 2) / 2;
                if m > critical {
                    assert!(thm > conj);
                } else if m < critical {
                    assert!(thm < conj);
                }
            }
        }
    }
}
