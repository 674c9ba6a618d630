//! Exhaustive verification of the least-eigenvalue bounds, slack-extremal
//! search, and a per-graph audit of the inequality chain behind the
//! stronger bound.
//!
//! Verification of distinct graphs is embarrassingly parallel: shards are
//! rooted at seed graphs a few levels below the target order, each worker
//! owns its solver scratch, and shard results merge through an associative
//! (min, lexicographic argmin) reduction so summaries are identical for any
//! worker count.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{
    conjecture_bound, edge_degree_q1_upper, full_degree_lower, merris_q1_upper,
    near_full_applicable, near_full_lower, theorem_bound, BoundReport,
};
use crate::enumerate::{enumerate_from_seed, enumerate_graphs, seed_graphs, EnumSpec};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::spectral::{eigen_sym, q_extremes, signless_laplacian};

/// Absolute slack tolerance below which a bound counts as violated.
pub const DEFAULT_SLACK_TOL: f64 = 1e-9;

/// Tighter solver tolerance used to re-check candidate violations.
const CONFIRM_EIGEN_TOL: f64 = 1e-13;

/// Which lower bound a sweep checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Conjecture,
    Theorem,
}

impl BoundKind {
    pub fn bound(self, n: usize, m: usize) -> Result<f64> {
        match self {
            BoundKind::Conjecture => conjecture_bound(n, m),
            BoundKind::Theorem => theorem_bound(n, m),
        }
    }

    /// Smallest order the bound formula is defined for.
    pub fn min_order(self) -> usize {
        match self {
            BoundKind::Conjecture => 2,
            BoundKind::Theorem => 3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            BoundKind::Conjecture => "conjecture",
            BoundKind::Theorem => "theorem",
        }
    }
}

impl std::str::FromStr for BoundKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "conjecture" => Ok(BoundKind::Conjecture),
            "theorem" => Ok(BoundKind::Theorem),
            _ => Err(Error::InvalidInput(
                "bound must be `theorem` or `conjecture`",
            )),
        }
    }
}

/// One confirmed bound violation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub qn: f64,
    pub bound: f64,
    pub slack: f64,
}

/// Aggregate of one exhaustive run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyRun {
    pub spec: EnumSpec,
    pub bound_kind: BoundKind,
    /// Isomorphism classes checked.
    pub count: usize,
    pub min_slack: f64,
    /// Witness attaining the minimum slack (ties broken by graph6 order).
    pub argmin_graph6: String,
    pub violations: Vec<Violation>,
    pub tol: f64,
    /// Wall-clock seconds; excluded from serialized output so identical
    /// runs emit identical documents.
    #[serde(skip_serializing)]
    pub elapsed: f64,
}

#[derive(Clone)]
struct Agg {
    count: usize,
    min_slack: f64,
    argmin: String,
    violations: Vec<Violation>,
}

impl Agg {
    fn empty() -> Self {
        Agg {
            count: 0,
            min_slack: f64::INFINITY,
            argmin: String::new(),
            violations: Vec::new(),
        }
    }

    fn absorb(&mut self, slack: f64, graph6: &str, violation: Option<Violation>) {
        self.count += 1;
        let better =
            slack < self.min_slack || (slack == self.min_slack && graph6 < self.argmin.as_str());
        if better || self.argmin.is_empty() {
            self.min_slack = slack;
            self.argmin = graph6.to_owned();
        }
        if let Some(v) = violation {
            self.violations.push(v);
        }
    }

    fn merge(mut self, other: Agg) -> Agg {
        self.count += other.count;
        let take_other = other.min_slack < self.min_slack
            || (other.min_slack == self.min_slack && other.argmin < self.argmin)
            || self.argmin.is_empty();
        if take_other && !other.argmin.is_empty() {
            self.min_slack = other.min_slack;
            self.argmin = other.argmin;
        }
        self.violations.extend(other.violations);
        self
    }
}

/// Check one graph against `kind` at slack tolerance `tol`.
///
/// Candidate violations are re-solved at a tighter eigensolver tolerance
/// before being reported, so solver noise cannot produce a false positive.
fn eval_graph(g: &Graph, kind: BoundKind, tol: f64) -> Result<(f64, String, Option<Violation>)> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let bound = kind.bound(n, m)?;
    let (_, qn) = q_extremes::<f64>(g)?;
    let mut slack = qn - bound;
    let graph6 = to_graph6(g)?;
    let mut violation = None;
    if slack < -tol {
        let confirm = eigen_sym(&signless_laplacian::<f64>(g), CONFIRM_EIGEN_TOL)?;
        let qn2 = *confirm.values.last().expect("n >= 1");
        slack = qn2 - bound;
        if slack < -tol {
            violation = Some(Violation {
                graph6: graph6.clone(),
                qn: qn2,
                bound,
                slack,
            });
        }
    }
    Ok((slack, graph6, violation))
}

fn seed_level(n: usize) -> usize {
    n.saturating_sub(2).clamp(1, 7)
}

/// Verify `kind` over every isomorphism class matching `spec`.
///
/// `jobs <= 1` runs the plain sequential sweep; larger values shard the
/// generation tree over that many workers. Summaries are identical either
/// way.
pub fn verify_bound(spec: &EnumSpec, kind: BoundKind, tol: f64, jobs: usize) -> Result<VerifyRun> {
    spec.validate()?;
    if spec.n < kind.min_order() {
        return Err(Error::InvalidInput("graph order below the bound's domain"));
    }
    let start = Instant::now();
    let agg = if jobs <= 1 {
        let mut agg = Agg::empty();
        let mut first_err = None;
        enumerate_graphs(spec, |g| {
            if first_err.is_some() {
                return;
            }
            match eval_graph(g, kind, tol) {
                Ok((slack, graph6, violation)) => agg.absorb(slack, &graph6, violation),
                Err(e) => first_err = Some(e),
            }
        })?;
        if let Some(e) = first_err {
            return Err(e);
        }
        agg
    } else {
        let seeds = seed_graphs(spec, seed_level(spec.n))?;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|_| Error::InvalidInput("could not build worker pool"))?;
        pool.install(|| {
            seeds
                .par_iter()
                .map(|seed| {
                    let mut agg = Agg::empty();
                    let mut first_err = None;
                    enumerate_from_seed(spec, seed, |g| {
                        if first_err.is_some() {
                            return;
                        }
                        match eval_graph(g, kind, tol) {
                            Ok((slack, graph6, violation)) => agg.absorb(slack, &graph6, violation),
                            Err(e) => first_err = Some(e),
                        }
                    })?;
                    match first_err {
                        Some(e) => Err(e),
                        None => Ok(agg),
                    }
                })
                .try_reduce(Agg::empty, |a, b| Ok(a.merge(b)))
        })?
    };

    let mut violations = agg.violations;
    violations.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    Ok(VerifyRun {
        spec: spec.clone(),
        bound_kind: kind,
        count: agg.count,
        min_slack: agg.min_slack,
        argmin_graph6: agg.argmin,
        violations,
        tol,
        elapsed: start.elapsed().as_secs_f64(),
    })
}

/// Every bound of the toolkit evaluated on one graph (order at least 3).
pub fn check_graph(g: &Graph, eigen_tol: f64) -> Result<BoundReport> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(Error::OrderOutOfRange(n, "3..=64"));
    }
    let m = g.edge_count();
    let profile = g.degree_profile();
    let spectrum = eigen_sym(&signless_laplacian::<f64>(g), eigen_tol)?;
    let q1 = spectrum.values[0];
    let qn = *spectrum.values.last().expect("n >= 3");
    let conj_bound = conjecture_bound::<f64>(n, m)?;
    let thm_bound = theorem_bound::<f64>(n, m)?;
    let applicable = near_full_applicable(&profile, n);
    Ok(BoundReport {
        n,
        m,
        r: m as i64 - ((n - 1) * (n - 2) / 2) as i64,
        k: profile.k,
        qn,
        q1,
        conj_bound,
        thm_bound,
        conj_slack: qn - conj_bound,
        thm_slack: qn - thm_bound,
        merris_upper: merris_q1_upper::<f64>(g),
        full_degree_lower: full_degree_lower::<f64>(n, profile.k)?,
        near_full_applicable: applicable,
        near_full_lower: if applicable {
            Some(near_full_lower::<f64>(n, profile.k)?)
        } else {
            None
        },
        complete_graph: profile.k == n,
    })
}

/// One inequality of the audit, stated as `lhs <= rhs + tol`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditCheck {
    pub id: &'static str,
    pub lhs: f64,
    pub rhs: f64,
    pub passed: bool,
}

/// Numeric audit record for one graph in the critical regime.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProofAudit {
    pub graph6: String,
    /// Edge surplus past (n-1)(n-2)/2; at least 1 in the regime.
    pub r: i64,
    /// Vertices of full degree.
    pub k: usize,
    pub checks: Vec<AuditCheck>,
}

fn audit_check(id: &'static str, lhs: f64, rhs: f64, tol: f64) -> AuditCheck {
    AuditCheck {
        id,
        lhs,
        rhs,
        passed: lhs <= rhs + tol,
    }
}

/// Audit the unconditional inequalities behind the stronger bound on every
/// connected class with m at least (n-1)(n-2)/2 + 1, for n in 6..=9:
///
/// - `complement_weyl`: (n-2) - q_n(G) <= q_1(G^c),
/// - `complement_edge_degree`: q_1(G^c) <= max over complement edges of
///   d(u) + d(v) (skipped when the complement is edgeless),
/// - `edge_degree_vs_size`: that edge maximum <= |E(G^c)| + 1 = n - r,
/// - `full_degree_bound`: the k-full-degree lower bound <= q_n(G)
///   (skipped for K_n, where its hypothesis fails),
/// - `near_full_bound`: 2k/(n-2) <= q_n(G) when applicable,
/// - `surplus_bound`: 2r/(n-2) <= q_n(G), the equivalent statement of the
///   stronger bound in this regime.
pub fn audit_proof(n: usize, tol: f64) -> Result<Vec<ProofAudit>> {
    if !(6..=9).contains(&n) {
        return Err(Error::OrderOutOfRange(n, "6..=9"));
    }
    let critical = (n - 1) * (n - 2) / 2;
    let spec = EnumSpec::new(n, true).with_edge_window(Some(critical + 1), None);
    let mut audits = Vec::new();
    let mut first_err: Option<Error> = None;
    enumerate_graphs(&spec, |g| {
        if first_err.is_some() {
            return;
        }
        match audit_one(g, n, critical, tol) {
            Ok(audit) => audits.push(audit),
            Err(e) => first_err = Some(e),
        }
    })?;
    if let Some(e) = first_err {
        return Err(e);
    }
    Ok(audits)
}

fn audit_one(g: &Graph, n: usize, critical: usize, tol: f64) -> Result<ProofAudit> {
    let m = g.edge_count();
    let r = m as i64 - critical as i64;
    let profile = g.degree_profile();
    let k = profile.k;
    let gc = g.complement();
    let (_, qn) = q_extremes::<f64>(g)?;
    let (q1c, _) = q_extremes::<f64>(&gc)?;

    let mut checks = Vec::with_capacity(6);
    checks.push(audit_check(
        "complement_weyl",
        (n as f64 - 2.0) - qn,
        q1c,
        tol,
    ));
    if gc.edge_count() > 0 {
        let edge_cap = edge_degree_q1_upper::<f64>(&gc)?;
        checks.push(audit_check("complement_edge_degree", q1c, edge_cap, tol));
        checks.push(audit_check(
            "edge_degree_vs_size",
            edge_cap,
            (n as i64 - r) as f64,
            tol,
        ));
    }
    if k < n {
        checks.push(audit_check(
            "full_degree_bound",
            full_degree_lower::<f64>(n, k)?,
            qn,
            tol,
        ));
    }
    if near_full_applicable(&profile, n) {
        checks.push(audit_check(
            "near_full_bound",
            near_full_lower::<f64>(n, k)?,
            qn,
            tol,
        ));
    }
    checks.push(audit_check(
        "surplus_bound",
        2.0 * r as f64 / (n as f64 - 2.0),
        qn,
        tol,
    ));

    Ok(ProofAudit {
        graph6: to_graph6(g)?,
        r,
        k,
        checks,
    })
}

/// Minimum slack over connected classes with exactly `m` edges, with a
/// witness. Errors when no such class exists.
pub fn extremal_slack(n: usize, m: usize, kind: BoundKind) -> Result<(f64, String)> {
    if !(3..=9).contains(&n) {
        return Err(Error::OrderOutOfRange(n, "3..=9"));
    }
    if m > n * (n - 1) / 2 {
        return Err(Error::InvalidInput("edge count exceeds n(n-1)/2"));
    }
    let spec = EnumSpec::new(n, true).with_edge_window(Some(m), Some(m));
    let run = verify_bound(&spec, kind, DEFAULT_SLACK_TOL, 1)?;
    if run.count == 0 {
        return Err(Error::NoMatchingClass { n, m });
    }
    Ok((run.min_slack, run.argmin_graph6))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::tau;
    use crate::enumerate::canonical_form;
    use crate::spectral::DEFAULT_EIGEN_TOL;

    fn cycle(n: usize) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        g
    }

    #[test]
    fn check_graph_k3() {
        let report = check_graph(&Graph::complete(3).unwrap(), DEFAULT_EIGEN_TOL).unwrap();
        assert!((report.qn - 1.0).abs() < 1e-10);
        assert_eq!(report.thm_bound, 4.0);
        assert!((report.thm_slack + 3.0).abs() < 1e-10);
        assert!(report.complete_graph);
        assert_eq!(report.r, 3 - 1);
    }

    #[test]
    fn check_graph_k6_minus_edge() {
        let report =
            check_graph(&Graph::complete_minus_edge(6).unwrap(), DEFAULT_EIGEN_TOL).unwrap();
        let tau6 = 6.0 - 2.0 * 3.0f64.sqrt();
        assert!((report.qn - tau6).abs() < 1e-9);
        assert_eq!(report.thm_bound, 2.0);
        assert!((report.thm_slack - (tau6 - 2.0)).abs() < 1e-9);
        assert!(!report.complete_graph);
    }

    #[test]
    fn check_graph_c6() {
        let report = check_graph(&cycle(6), DEFAULT_EIGEN_TOL).unwrap();
        assert!(report.qn.abs() < 1e-10);
        assert_eq!(report.thm_bound, -2.0);
        assert!((report.thm_slack - 2.0).abs() < 1e-10);
        assert!(check_graph(&Graph::complete(2).unwrap(), DEFAULT_EIGEN_TOL).is_err());
    }

    #[test]
    fn theorem_holds_at_n6() {
        let run = verify_bound(
            &EnumSpec::new(6, true),
            BoundKind::Theorem,
            DEFAULT_SLACK_TOL,
            1,
        )
        .unwrap();
        assert_eq!(run.count, 112);
        assert!(run.violations.is_empty());
        assert!(run.min_slack >= -DEFAULT_SLACK_TOL);
    }

    #[test]
    fn conjecture_holds_at_n5() {
        let run = verify_bound(
            &EnumSpec::new(5, true),
            BoundKind::Conjecture,
            DEFAULT_SLACK_TOL,
            1,
        )
        .unwrap();
        assert_eq!(run.count, 21);
        assert!(run.violations.is_empty());
    }

    #[test]
    fn theorem_fails_at_n5_on_k5_minus_edge() {
        let run = verify_bound(
            &EnumSpec::new(5, true),
            BoundKind::Theorem,
            DEFAULT_SLACK_TOL,
            1,
        )
        .unwrap();
        assert!(!run.violations.is_empty());
        assert!(run.min_slack < -DEFAULT_SLACK_TOL);
        let witness = canonical_form(&Graph::complete_minus_edge(5).unwrap()).unwrap();
        let v = run
            .violations
            .iter()
            .find(|v| v.graph6 == witness)
            .expect("witness present");
        let expected = tau::<f64>(5).unwrap() - 2.0;
        assert!((v.slack - expected).abs() < 1e-6, "slack={}", v.slack);
    }

    #[test]
    fn conjecture_fails_at_n4_on_k4_minus_edge() {
        let run = verify_bound(
            &EnumSpec::new(4, true),
            BoundKind::Conjecture,
            DEFAULT_SLACK_TOL,
            1,
        )
        .unwrap();
        assert!(!run.violations.is_empty());
        let witness = canonical_form(&Graph::complete_minus_edge(4).unwrap()).unwrap();
        let v = run
            .violations
            .iter()
            .find(|v| v.graph6 == witness)
            .expect("witness present");
        let expected = tau::<f64>(4).unwrap() - 4.0 / 3.0;
        assert!((v.slack - expected).abs() < 1e-6);
    }

    #[test]
    fn parallel_summary_matches_sequential() {
        let spec = EnumSpec::new(6, true);
        let seq = verify_bound(&spec, BoundKind::Theorem, DEFAULT_SLACK_TOL, 1).unwrap();
        let par = verify_bound(&spec, BoundKind::Theorem, DEFAULT_SLACK_TOL, 4).unwrap();
        assert_eq!(seq.count, par.count);
        assert_eq!(seq.min_slack, par.min_slack);
        assert_eq!(seq.argmin_graph6, par.argmin_graph6);
        assert_eq!(seq.violations, par.violations);
    }

    #[test]
    fn violations_reported_iff_min_slack_below_tolerance() {
        for n in 3..=6 {
            for kind in [BoundKind::Conjecture, BoundKind::Theorem] {
                let run =
                    verify_bound(&EnumSpec::new(n, true), kind, DEFAULT_SLACK_TOL, 1).unwrap();
                assert_eq!(
                    !run.violations.is_empty(),
                    run.min_slack < -run.tol,
                    "n={n} {kind:?}"
                );
            }
        }
    }

    #[test]
    fn audit_passes_at_n6() {
        let audits = audit_proof(6, DEFAULT_SLACK_TOL).unwrap();
        assert!(!audits.is_empty());
        for audit in &audits {
            assert!(audit.r >= 1);
            for check in &audit.checks {
                assert!(
                    check.passed,
                    "{} failed on {}: {} vs {}",
                    check.id, audit.graph6, check.lhs, check.rhs
                );
            }
        }
        assert!(audit_proof(5, DEFAULT_SLACK_TOL).is_err());
        assert!(audit_proof(10, DEFAULT_SLACK_TOL).is_err());
    }

    #[test]
    fn audit_records_star_family_and_complete_graph() {
        let audits = audit_proof(8, DEFAULT_SLACK_TOL).unwrap();
        // The r = 1, k = 0 family member: complement is a star plus an edge.
        let family = canonical_form(&Graph::star_k2_complement(8).unwrap()).unwrap();
        let fam = audits
            .iter()
            .find(|a| a.graph6 == family)
            .expect("family present");
        assert_eq!((fam.r, fam.k), (1, 0));
        let surplus = fam.checks.iter().find(|c| c.id == "surplus_bound").unwrap();
        assert!((surplus.lhs - 1.0 / 3.0).abs() < 1e-12);
        assert!(surplus.passed);

        // K_8: complement edgeless, so the complement edge checks and the
        // full-degree check are absent; the surplus check still holds.
        let k8 = canonical_form(&Graph::complete(8).unwrap()).unwrap();
        let complete = audits.iter().find(|a| a.graph6 == k8).expect("K8 present");
        assert_eq!((complete.r, complete.k), (7, 8));
        assert!(complete
            .checks
            .iter()
            .all(|c| c.id != "complement_edge_degree"));
        assert!(complete.checks.iter().all(|c| c.id != "full_degree_bound"));
        let surplus = complete
            .checks
            .iter()
            .find(|c| c.id == "surplus_bound")
            .unwrap();
        assert!((surplus.lhs - 14.0 / 6.0).abs() < 1e-12);
        assert!((surplus.rhs - 6.0).abs() < 1e-9);
        assert!(surplus.passed);
    }

    #[test]
    fn extremal_witnesses() {
        let (slack, witness) = extremal_slack(5, 9, BoundKind::Theorem).unwrap();
        assert_eq!(
            witness,
            canonical_form(&Graph::complete_minus_edge(5).unwrap()).unwrap()
        );
        assert!((slack - (tau::<f64>(5).unwrap() - 2.0)).abs() < 1e-9);

        let (slack, witness) = extremal_slack(6, 14, BoundKind::Theorem).unwrap();
        assert_eq!(
            witness,
            canonical_form(&Graph::complete_minus_edge(6).unwrap()).unwrap()
        );
        assert!((slack - (tau::<f64>(6).unwrap() - 2.0)).abs() < 1e-9);

        let (slack, witness) = extremal_slack(6, 15, BoundKind::Theorem).unwrap();
        assert_eq!(
            witness,
            canonical_form(&Graph::complete(6).unwrap()).unwrap()
        );
        assert!((slack - 1.5).abs() < 1e-9);

        // Four edges cannot connect six vertices.
        assert!(matches!(
            extremal_slack(6, 4, BoundKind::Theorem),
            Err(Error::NoMatchingClass { .. })
        ));
        assert!(extremal_slack(6, 16, BoundKind::Theorem).is_err());
    }
}
