//! Stream claims: the spectral-threshold theorems and the closed-form
//! bound checks.

use super::report::{CaseRecord, Outcome, Status};
use super::runner::StreamClaim;
use crate::family::{construct, FamilySpec};
use crate::graph::Graph;
use crate::spectral::{eigen_report, hong_bound, nikiforov_bound, spectral_radius};
use crate::structure::{
    hamiltonian_cycle, is_isomorphic_with_cap, is_t_tough, toughness, TToughCheck, Toughness,
};
use num_rational::Ratio;
use std::collections::HashMap;
use std::sync::RwLock;

/// Equality-vs-strict tolerance: spectral comparisons within this margin
/// route to the isomorphism check rather than a strict verdict.
pub const SPECTRAL_TOL: f64 = 1e-8;

const ISO_CAP: usize = 64;

fn graph6_or_note(g: &Graph) -> String {
    crate::graph6::write_graph6(g).unwrap_or_else(|_| format!("(n={} too large for graph6)", g.n()))
}

/// Cache of per-n extremal spectral radii.
#[derive(Default)]
struct ThresholdCache {
    values: RwLock<HashMap<usize, f64>>,
}

impl ThresholdCache {
    fn get_or_compute(&self, n: usize, build: impl FnOnce() -> Option<Graph>) -> Option<f64> {
        if let Some(&v) = self.values.read().unwrap().get(&n) {
            return Some(v);
        }
        let rho = spectral_radius(&build()?).ok()?;
        self.values.write().unwrap().insert(n, rho);
        Some(rho)
    }
}

fn violation(claim: &str, g: &Graph, rho: f64, thr: f64, details: String) -> CaseRecord {
    CaseRecord {
        claim: claim.to_string(),
        graph6: graph6_or_note(g),
        measured: rho,
        threshold: thr,
        verdict: "violation".into(),
        details,
    }
}

fn equality_record(claim: &str, g: &Graph, rho: f64, thr: f64, isomorphic: bool) -> CaseRecord {
    CaseRecord {
        claim: claim.to_string(),
        graph6: graph6_or_note(g),
        measured: rho,
        threshold: thr,
        verdict: if isomorphic {
            "equality:isomorphic".into()
        } else {
            "equality:distinct".into()
        },
        details: String::new(),
    }
}

/// Spectral condition for 1-toughness at fixed minimum degree delta:
/// a connected graph with min degree exactly `delta` and
/// `n >= max(5*delta, (2/5)*delta^2 + delta)` whose spectral radius reaches
/// `rho(K_delta v (K_{n-2delta} u delta K_1))` is 1-tough unless it is the
/// extremal graph itself.
pub struct Thm11 {
    pub delta: usize,
    thresholds: ThresholdCache,
}

impl Thm11 {
    pub fn new(delta: usize) -> Thm11 {
        assert!(delta >= 2, "theorem requires delta >= 2");
        Thm11 {
            delta,
            thresholds: ThresholdCache::default(),
        }
    }

    fn extremal(&self, n: usize) -> Option<Graph> {
        construct(&FamilySpec::Extremal1Tough {
            n,
            delta: self.delta,
        })
        .ok()
    }

    fn threshold(&self, n: usize) -> Option<f64> {
        self.thresholds.get_or_compute(n, || self.extremal(n))
    }
}

impl StreamClaim for Thm11 {
    fn id(&self) -> String {
        format!("thm1.1(delta={})", self.delta)
    }

    fn notes(&self) -> Vec<String> {
        vec![format!(
            "hypotheses: connected, min degree = {}, n >= max(5d, 2d^2/5 + d); \
             threshold rho(K_d v (K_(n-2d) u d K_1))",
            self.delta
        )]
    }

    fn evaluate(&self, g: &Graph) -> Outcome {
        let n = g.n();
        let d = self.delta;
        if n == 0
            || !g.is_connected()
            || g.min_degree() != Some(d)
            || n < 5 * d
            || 5 * n < 2 * d * d + 5 * d
        {
            return Outcome::filtered();
        }
        let thr = match self.threshold(n) {
            Some(t) => t,
            None => return Outcome::filtered(),
        };
        // cheap upper bound first: rho <= sqrt(2m - n + 1)
        if let Ok(hb) = hong_bound(n, g.edge_count()) {
            if hb < thr - SPECTRAL_TOL {
                return Outcome::confirmed(false);
            }
        }
        let rho = spectral_radius(g).expect("n >= 1");
        if rho < thr - SPECTRAL_TOL {
            return Outcome::confirmed(false);
        }
        let near_equality = (rho - thr).abs() <= SPECTRAL_TOL;
        let iso = near_equality
            && self
                .extremal(n)
                .map(|ext| is_isomorphic_with_cap(g, &ext, ISO_CAP).unwrap_or(false))
                .unwrap_or(false);
        let tough = is_t_tough(g, Ratio::new(1, 1))
            .map(|c| c.is_tough())
            .unwrap_or(false);
        let mut out = if tough || iso {
            Outcome::confirmed(true)
        } else {
            Outcome {
                hypothesis: true,
                status: Status::Violation,
                tested: true,
                equality: Vec::new(),
                violations: vec![violation(
                    &self.id(),
                    g,
                    rho,
                    thr,
                    "above threshold, not 1-tough, not the extremal graph".into(),
                )],
                ambiguous: Vec::new(),
            }
        };
        if near_equality {
            out.equality
                .push(equality_record(&self.id(), g, rho, thr, iso));
        }
        out
    }
}

/// Spectral condition for hamiltonicity of 1-tough graphs: a connected
/// 1-tough graph with min degree >= 2 and n >= 18 whose spectral radius
/// reaches `rho(M_n)` has a hamiltonian cycle unless it is `M_n`.
pub struct Thm12 {
    thresholds: ThresholdCache,
}

impl Default for Thm12 {
    fn default() -> Self {
        Self::new()
    }
}

impl Thm12 {
    pub fn new() -> Thm12 {
        Thm12 {
            thresholds: ThresholdCache::default(),
        }
    }

    fn threshold(&self, n: usize) -> Option<f64> {
        self.thresholds
            .get_or_compute(n, || construct(&FamilySpec::MGraph { n }).ok())
    }
}

impl StreamClaim for Thm12 {
    fn id(&self) -> String {
        "thm1.2".into()
    }

    fn notes(&self) -> Vec<String> {
        vec![
            "hypotheses: connected, 1-tough, min degree >= 2, n >= 18; threshold rho(M_n)".into(),
        ]
    }

    fn evaluate(&self, g: &Graph) -> Outcome {
        let n = g.n();
        if n < 18 || !g.is_connected() || g.min_degree() < Some(2) {
            return Outcome::filtered();
        }
        // hamiltonian graphs are 1-tough, so a found cycle settles both the
        // hypothesis and the conclusion
        let cycle = hamiltonian_cycle(g).expect("n >= 3");
        let one_tough = cycle.is_some()
            || is_t_tough(g, Ratio::new(1, 1))
                .map(|c| c.is_tough())
                .unwrap_or(false);
        if !one_tough {
            return Outcome::filtered();
        }
        let thr = match self.threshold(n) {
            Some(t) => t,
            None => return Outcome::filtered(),
        };
        let rho = spectral_radius(g).expect("n >= 1");
        if rho < thr - SPECTRAL_TOL {
            return Outcome::confirmed(false);
        }
        let near_equality = (rho - thr).abs() <= SPECTRAL_TOL;
        let iso = near_equality
            && construct(&FamilySpec::MGraph { n })
                .map(|m| is_isomorphic_with_cap(g, &m, ISO_CAP).unwrap_or(false))
                .unwrap_or(false);
        let mut out = if cycle.is_some() || iso {
            Outcome::confirmed(true)
        } else {
            Outcome {
                hypothesis: true,
                status: Status::Violation,
                tested: true,
                equality: Vec::new(),
                violations: vec![violation(
                    &self.id(),
                    g,
                    rho,
                    thr,
                    "above threshold, no hamiltonian cycle, not M_n".into(),
                )],
                ambiguous: Vec::new(),
            }
        };
        if near_equality {
            out.equality
                .push(equality_record(&self.id(), g, rho, thr, iso));
        }
        out
    }
}

/// Spectral condition for t-toughness: a connected graph with
/// `n >= 4t^2 + 6t + 2` whose spectral radius reaches
/// `rho(K_{2t-1} v (K_{n-2t} u K_1))` is t-tough unless it is the extremal
/// graph.
pub struct Thm13 {
    pub t: usize,
    thresholds: ThresholdCache,
}

impl Thm13 {
    pub fn new(t: usize) -> Thm13 {
        assert!(t >= 1, "theorem requires t >= 1");
        Thm13 {
            t,
            thresholds: ThresholdCache::default(),
        }
    }

    fn extremal(&self, n: usize) -> Option<Graph> {
        construct(&FamilySpec::ExtremalTTough { n, t: self.t }).ok()
    }

    fn threshold(&self, n: usize) -> Option<f64> {
        self.thresholds.get_or_compute(n, || self.extremal(n))
    }
}

impl StreamClaim for Thm13 {
    fn id(&self) -> String {
        format!("thm1.3(t={})", self.t)
    }

    fn notes(&self) -> Vec<String> {
        vec![format!(
            "hypotheses: connected, n >= 4t^2 + 6t + 2 with t = {}; \
             threshold rho(K_(2t-1) v (K_(n-2t) u K_1))",
            self.t
        )]
    }

    fn evaluate(&self, g: &Graph) -> Outcome {
        let n = g.n();
        let t = self.t;
        if n < 4 * t * t + 6 * t + 2 || !g.is_connected() {
            return Outcome::filtered();
        }
        let thr = match self.threshold(n) {
            Some(v) => v,
            None => return Outcome::filtered(),
        };
        if let Ok(hb) = hong_bound(n, g.edge_count()) {
            if hb < thr - SPECTRAL_TOL {
                return Outcome::confirmed(false);
            }
        }
        let rho = spectral_radius(g).expect("n >= 1");
        if rho < thr - SPECTRAL_TOL {
            return Outcome::confirmed(false);
        }
        let near_equality = (rho - thr).abs() <= SPECTRAL_TOL;
        let iso = near_equality
            && self
                .extremal(n)
                .map(|ext| is_isomorphic_with_cap(g, &ext, ISO_CAP).unwrap_or(false))
                .unwrap_or(false);
        let tough = is_t_tough(g, Ratio::new(t as u64, 1))
            .map(|c| c.is_tough())
            .unwrap_or(false);
        let mut out = if tough || iso {
            Outcome::confirmed(true)
        } else {
            Outcome {
                hypothesis: true,
                status: Status::Violation,
                tested: true,
                equality: Vec::new(),
                violations: vec![violation(
                    &self.id(),
                    g,
                    rho,
                    thr,
                    format!("above threshold, not {t}-tough, not the extremal graph"),
                )],
                ambiguous: Vec::new(),
            }
        };
        if near_equality {
            out.equality
                .push(equality_record(&self.id(), g, rho, thr, iso));
        }
        out
    }
}

/// Both closed-form bounds on connected graphs, with their equality
/// characterizations checked in both directions: equality must occur
/// exactly on stars/completes (size bound) and exactly on delta-regular or
/// {delta, n-1}-bidegreed graphs (degree-aware bound).
pub struct SpectralBounds;

fn is_star(g: &Graph) -> bool {
    let n = g.n();
    if n < 2 {
        return n == 1;
    }
    let d = g.degree_sequence();
    d[n - 1] == n - 1 && g.edge_count() == n - 1 && d[0] == 1
}

fn is_bidegreed_delta_full(g: &Graph) -> bool {
    let n = g.n();
    let Some(delta) = g.min_degree() else {
        return false;
    };
    g.degrees()
        .iter()
        .all(|&d| d == delta || d == n - 1)
}

impl StreamClaim for SpectralBounds {
    fn id(&self) -> String {
        "bounds".into()
    }

    fn notes(&self) -> Vec<String> {
        vec!["checks rho <= sqrt(2m-n+1) and the degree-aware bound on connected graphs".into()]
    }

    fn evaluate(&self, g: &Graph) -> Outcome {
        let n = g.n();
        if n == 0 || !g.is_connected() {
            return Outcome::filtered();
        }
        let m = g.edge_count();
        let delta = g.min_degree().unwrap();
        let rho = spectral_radius(g).expect("n >= 1");
        let mut problems: Vec<String> = Vec::new();
        let mut equality = Vec::new();
        let mut worst: Option<(f64, f64)> = None;

        let hb = hong_bound(n, m).ok();
        if let Some(hb) = hb {
            if rho > hb + SPECTRAL_TOL {
                problems.push(format!("rho {rho} exceeds size bound {hb}"));
                worst = Some((rho, hb));
            }
            let is_eq = (rho - hb).abs() <= SPECTRAL_TOL;
            let characterized = is_star(g) || g.is_complete();
            if is_eq != characterized {
                problems.push(format!(
                    "size-bound equality mismatch: equality={is_eq}, star-or-complete={characterized}"
                ));
                worst.get_or_insert((rho, hb));
            }
            if is_eq {
                let mut rec = equality_record(&self.id(), g, rho, hb, false);
                rec.verdict = "equality:hong".into();
                rec.details = if characterized {
                    "star or complete".into()
                } else {
                    "uncharacterized".into()
                };
                equality.push(rec);
            }
        }

        if delta >= 1 {
            if let Ok(nb) = nikiforov_bound(n, m, delta) {
                if rho > nb + SPECTRAL_TOL {
                    problems.push(format!("rho {rho} exceeds degree-aware bound {nb}"));
                    worst.get_or_insert((rho, nb));
                }
                let is_eq = (rho - nb).abs() <= SPECTRAL_TOL;
                let characterized = g.is_regular() || is_bidegreed_delta_full(g);
                if is_eq != characterized {
                    problems.push(format!(
                        "degree-bound equality mismatch: equality={is_eq}, regular-or-bidegreed={characterized}"
                    ));
                    worst.get_or_insert((rho, nb));
                }
                if is_eq {
                    let mut rec = equality_record(&self.id(), g, rho, nb, false);
                    rec.verdict = "equality:nikiforov".into();
                    rec.details = if characterized {
                        "regular or bidegreed".into()
                    } else {
                        "uncharacterized".into()
                    };
                    equality.push(rec);
                }
            }
        }

        if problems.is_empty() {
            let mut out = Outcome::confirmed(true);
            out.equality = equality;
            out
        } else {
            let (rho_w, thr_w) = worst.unwrap_or((rho, f64::NAN));
            Outcome {
                hypothesis: true,
                status: Status::Violation,
                tested: true,
                equality,
                violations: vec![violation(
                    &self.id(),
                    g,
                    rho_w,
                    thr_w,
                    problems.join("; "),
                )],
                ambiguous: Vec::new(),
            }
        }
    }
}

/// Toughness of connected non-complete regular graphs strictly exceeds
/// `d / lambda - 1`.
pub struct BrouwerGu;

impl StreamClaim for BrouwerGu {
    fn id(&self) -> String {
        "brouwer-gu".into()
    }

    fn notes(&self) -> Vec<String> {
        vec!["hypotheses: connected, regular, not complete; checks t(G) > d/lambda - 1".into()]
    }

    fn evaluate(&self, g: &Graph) -> Outcome {
        let n = g.n();
        if n < 2 || !g.is_regular() || g.is_complete() || !g.is_connected() {
            return Outcome::filtered();
        }
        let d = g.degree(0) as f64;
        let report = eigen_report(g).expect("n >= 1");
        let lambda = report.lambda_abs().expect("n >= 2");
        let bound = d / lambda - 1.0;
        let cert = match toughness(g) {
            Ok(c) => c,
            Err(_) => return Outcome::filtered(),
        };
        let t_val = match cert.value {
            Toughness::Infinite => unreachable!("complete graphs were filtered"),
            Toughness::Finite(r) => *r.numer() as f64 / *r.denom() as f64,
        };
        let margin = t_val - bound;
        if margin > SPECTRAL_TOL {
            Outcome::confirmed(true)
        } else if margin >= -SPECTRAL_TOL {
            Outcome {
                hypothesis: true,
                status: Status::Ambiguous,
                tested: true,
                equality: Vec::new(),
                violations: Vec::new(),
                ambiguous: vec![CaseRecord {
                    claim: self.id(),
                    graph6: graph6_or_note(g),
                    measured: t_val,
                    threshold: bound,
                    verdict: "ambiguous".into(),
                    details: "toughness within tolerance of the bound".into(),
                }],
            }
        } else {
            Outcome {
                hypothesis: true,
                status: Status::Violation,
                tested: true,
                equality: Vec::new(),
                violations: vec![violation(
                    &self.id(),
                    g,
                    t_val,
                    bound,
                    "toughness at or below d/lambda - 1".into(),
                )],
                ambiguous: Vec::new(),
            }
        }
    }
}

/// A t-toughness check outcome for the extremal family, used by tests and
/// the CLI to show the violating cut explicitly.
pub fn extremal_ttough_violation(n: usize, t: usize) -> crate::error::Result<(Graph, TToughCheck)> {
    let g = construct(&FamilySpec::ExtremalTTough { n, t })?;
    let check = is_t_tough(&g, Ratio::new(t as u64, 1))?;
    Ok((g, check))
}
