//! Named extremal graph families with deterministic vertex labeling.
//!
//! Every constructor labels the join block first, then the remaining blocks
//! in definition order, so graph6 output and golden tests are stable.

use crate::error::{Error, Result};
use crate::graph::{copies, Graph};

/// A named family together with its integer parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// `K_n`.
    Complete { n: usize },
    /// `K_{n-4}^{+3}`: the clique `K_{n-4}` with three extra vertices, each
    /// attached by one edge of a 3-edge matching to the three lowest-labeled
    /// clique vertices. Has `n - 1` vertices; `n` is the order of the `M_n`
    /// it sits inside.
    CompletePlusMatching3 { n: usize },
    /// `M_n = K_1 v K_{n-4}^{+3}`: the 1-tough, non-hamiltonian extremal
    /// graph. Labels: hub 0, clique `1..=n-4`, matched vertices last.
    MGraph { n: usize },
    /// `K_delta v (K_{n-2*delta} u delta*K_1)`.
    Extremal1Tough { n: usize, delta: usize },
    /// `K_{2t-1} v (K_{n-2t} u K_1)`.
    ExtremalTTough { n: usize, t: usize },
    /// `K_{tc-1} v (K_{n-(t+1)c+2} u (c-1)*K_1)`: never t-tough.
    NotTToughFamily { n: usize, t: usize, c: usize },
    /// `K_s v (K_{n1} u ... u K_{nk})` with `n1 >= n2 >= ... >= nk >= 1`.
    SplitFamily { s: usize, parts: Vec<usize> },
    /// `K_3 v (K_{n-5} u 2K_1)`: order n, sits exactly on the size bound
    /// `C(n-2,2) + 6`, and is not hamiltonian-connected (no hamiltonian path
    /// between two of the three join vertices).
    Lemma36Exception { n: usize },
}

fn domain_err(what: &'static str, constraint: String) -> Error {
    Error::ParameterDomain { what, constraint }
}

/// Build the graph named by `spec`, enforcing its parameter domain.
pub fn construct(spec: &FamilySpec) -> Result<Graph> {
    match *spec {
        FamilySpec::Complete { n } => Ok(Graph::complete(n)),
        FamilySpec::CompletePlusMatching3 { n } => {
            if n < 8 {
                return Err(domain_err(
                    "CompletePlusMatching3",
                    format!("n >= 8 required, got {n}"),
                ));
            }
            Ok(kplus3(n - 4))
        }
        FamilySpec::MGraph { n } => {
            if n < 8 {
                return Err(domain_err("MGraph", format!("n >= 8 required, got {n}")));
            }
            Ok(Graph::complete(1).join(&kplus3(n - 4)))
        }
        FamilySpec::Extremal1Tough { n, delta } => {
            if delta < 1 {
                return Err(domain_err("Extremal1Tough", "delta >= 1 required".into()));
            }
            if n < 2 * delta + 1 {
                return Err(domain_err(
                    "Extremal1Tough",
                    format!("n >= 2*delta + 1 required, got n = {n}, delta = {delta}"),
                ));
            }
            let rest = Graph::complete(n - 2 * delta).union(&copies(delta, &Graph::complete(1)));
            Ok(Graph::complete(delta).join(&rest))
        }
        FamilySpec::ExtremalTTough { n, t } => {
            if t < 1 {
                return Err(domain_err("ExtremalTTough", "t >= 1 required".into()));
            }
            if n < 2 * t + 1 {
                return Err(domain_err(
                    "ExtremalTTough",
                    format!("n >= 2t + 1 required, got n = {n}, t = {t}"),
                ));
            }
            let rest = Graph::complete(n - 2 * t).union(&Graph::complete(1));
            Ok(Graph::complete(2 * t - 1).join(&rest))
        }
        FamilySpec::NotTToughFamily { n, t, c } => {
            if c < 2 || t < 1 {
                return Err(domain_err(
                    "NotTToughFamily",
                    format!("c >= 2 and t >= 1 required, got t = {t}, c = {c}"),
                ));
            }
            if n + 1 < (t + 1) * c {
                return Err(domain_err(
                    "NotTToughFamily",
                    format!("n >= (t+1)c - 1 required, got n = {n}, t = {t}, c = {c}"),
                ));
            }
            let clique = n - (t + 1) * c + 2;
            let rest = Graph::complete(clique).union(&copies(c - 1, &Graph::complete(1)));
            Ok(Graph::complete(t * c - 1).join(&rest))
        }
        FamilySpec::SplitFamily { s, ref parts } => {
            if parts.iter().any(|&p| p == 0) {
                return Err(domain_err("SplitFamily", "all part sizes must be >= 1".into()));
            }
            if parts.windows(2).any(|w| w[0] < w[1]) {
                return Err(domain_err(
                    "SplitFamily",
                    format!("part sizes must be nonincreasing, got {parts:?}"),
                ));
            }
            let mut rest = Graph::empty(0);
            for &p in parts {
                rest = rest.union(&Graph::complete(p));
            }
            Ok(Graph::complete(s).join(&rest))
        }
        FamilySpec::Lemma36Exception { n } => {
            if n < 13 {
                return Err(domain_err(
                    "Lemma36Exception",
                    format!("n >= 13 required, got {n}"),
                ));
            }
            let rest = Graph::complete(n - 5).union(&copies(2, &Graph::complete(1)));
            Ok(Graph::complete(3).join(&rest))
        }
    }
}

/// `K_c` plus three matched pendant-side vertices: clique `0..c`, extra
/// vertices `c..c+3`, matching edges `(i, c+i)` for `i < 3`. Requires
/// `c >= 4` so the unmatched clique part is nonempty.
fn kplus3(c: usize) -> Graph {
    debug_assert!(c >= 4);
    let mut g = Graph::complete(c).union(&copies(3, &Graph::complete(1)));
    for i in 0..3 {
        g.set_edge(i, c + i);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(spec: FamilySpec) -> Graph {
        construct(&spec).unwrap()
    }

    #[test]
    fn mgraph_structure() {
        let m8 = build(FamilySpec::MGraph { n: 8 });
        assert_eq!(m8.n(), 8);
        assert_eq!(m8.degree(0), 7); // hub
        assert_eq!(m8.degree_sequence(), vec![2, 2, 2, 4, 5, 5, 5, 7]);
        let deg2 = m8.degrees().iter().filter(|&&d| d == 2).count();
        assert_eq!(deg2, 3);

        for n in 8..=20 {
            let m = build(FamilySpec::MGraph { n });
            assert_eq!(m.n(), n);
            assert_eq!(m.degrees().iter().filter(|&&d| d == 2).count(), 3);
            assert_eq!(m.degrees().iter().filter(|&&d| d == n - 1).count(), 1);
            assert!(m.is_connected());
        }
    }

    #[test]
    fn extremal_1tough_counts() {
        // K2 v (K6 u 2K1): m = 1 + 15 + 2*8 = 32
        let g = build(FamilySpec::Extremal1Tough { n: 10, delta: 2 });
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 32);
        assert_eq!(g.min_degree(), Some(2));
        // minimum degree is exactly delta for n >= 2*delta + 1
        for delta in 1..=4 {
            for n in (2 * delta + 1)..=(2 * delta + 6) {
                let g = build(FamilySpec::Extremal1Tough { n, delta });
                assert_eq!(g.min_degree(), Some(delta), "n={n} delta={delta}");
            }
        }
    }

    #[test]
    fn extremal_ttough_counts() {
        // K1 v (K18 u K1): 172 edges, pendant has degree 1
        let g = build(FamilySpec::ExtremalTTough { n: 20, t: 1 });
        assert_eq!(g.n(), 20);
        assert_eq!(g.edge_count(), 172);
        assert_eq!(g.min_degree(), Some(1));
    }

    #[test]
    fn split_family_join_block_dominates() {
        let g = build(FamilySpec::SplitFamily {
            s: 3,
            parts: vec![4, 2, 1],
        });
        assert_eq!(g.n(), 3 + 7);
        for v in 0..3 {
            assert_eq!(g.degree(v), g.n() - 1);
        }
        assert!(construct(&FamilySpec::SplitFamily {
            s: 2,
            parts: vec![1, 2],
        })
        .is_err());
        assert!(construct(&FamilySpec::SplitFamily {
            s: 2,
            parts: vec![2, 0],
        })
        .is_err());
    }

    #[test]
    fn lemma36_exception_is_on_the_size_bound() {
        for n in 13..=16 {
            let g = build(FamilySpec::Lemma36Exception { n });
            assert_eq!(g.n(), n);
            assert_eq!(g.min_degree(), Some(3));
            let bound = (n - 2) * (n - 3) / 2 + 6;
            assert_eq!(g.edge_count(), bound);
        }
    }

    #[test]
    fn domains_rejected() {
        assert!(construct(&FamilySpec::MGraph { n: 7 }).is_err());
        assert!(construct(&FamilySpec::CompletePlusMatching3 { n: 7 }).is_err());
        assert!(construct(&FamilySpec::Extremal1Tough { n: 4, delta: 2 }).is_err());
        assert!(construct(&FamilySpec::ExtremalTTough { n: 2, t: 1 }).is_err());
        assert!(construct(&FamilySpec::NotTToughFamily { n: 4, t: 1, c: 3 }).is_err());
        assert!(construct(&FamilySpec::Lemma36Exception { n: 12 }).is_err());
    }

    #[test]
    fn not_ttough_family_shape() {
        // K_{tc-1} v (K_{n-(t+1)c+2} u (c-1)K_1)
        let g = build(FamilySpec::NotTToughFamily { n: 12, t: 2, c: 2 });
        assert_eq!(g.n(), 12);
        // join block K3, clique K8, one isolated-part vertex
        assert_eq!(g.degrees().iter().filter(|&&d| d == 11).count(), 3);
        assert_eq!(g.degrees().iter().filter(|&&d| d == 3).count(), 1);
    }

    #[test]
    fn kplus3_matching_goes_to_lowest_clique_labels() {
        let g = build(FamilySpec::CompletePlusMatching3 { n: 9 });
        // clique K5 on 0..5, extras 5,6,7 matched to 0,1,2
        assert_eq!(g.n(), 8);
        assert!(g.has_edge(0, 5) && g.has_edge(1, 6) && g.has_edge(2, 7));
        assert_eq!(g.degree(5), 1);
        assert_eq!(g.degree(3), 4);
    }
}
