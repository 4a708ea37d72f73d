//! Exact graph toughness by pruned cut-set enumeration, plus the
//! `is_t_tough` decision with a cheap connectivity/independence certificate.

use crate::error::{Error, Result};
use crate::graph::Graph;
use num_rational::Ratio;

/// Default vertex-count cap for full toughness enumeration.
pub const TOUGHNESS_DEFAULT_CAP: usize = 24;

/// Subset budget for `is_t_tough` fallback enumeration.
const SUBSET_BUDGET: u128 = 40_000_000;

/// Exact toughness value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Toughness {
    /// Complete graphs have no cut set.
    Infinite,
    /// `min |S| / c(G - S)` over cut sets, as an exact rational;
    /// 0 for disconnected graphs.
    Finite(Ratio<u64>),
}

impl std::fmt::Display for Toughness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Toughness::Infinite => write!(f, "inf"),
            Toughness::Finite(r) => write!(f, "{r}"),
        }
    }
}

/// Exact toughness with a minimizing cut set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToughnessCertificate {
    pub value: Toughness,
    /// Minimizing cut set: the smallest one, ties broken lexicographically.
    /// Empty for complete graphs and for disconnected graphs.
    pub witness: Vec<usize>,
    /// `c(G - witness)`; for disconnected graphs the component count of `G`
    /// itself, 0 for complete graphs.
    pub components: usize,
}

/// Outcome of a t-toughness check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TToughCheck {
    Tough,
    NotTough {
        /// A violating cut set: smallest size, ties broken
        /// lexicographically. Empty when the graph is disconnected.
        cut: Vec<usize>,
        components: usize,
    },
}

impl TToughCheck {
    pub fn is_tough(&self) -> bool {
        matches!(self, TToughCheck::Tough)
    }
}

fn rows_or_cap(g: &Graph, what: &'static str) -> Result<Vec<u64>> {
    g.rows64().ok_or(Error::Capacity {
        what,
        detail: format!("n = {} exceeds the 64-vertex bitset limit", g.n()),
    })
}

/// Component count of the subgraph induced by `mask`.
fn component_count(rows: &[u64], mask: u64) -> usize {
    let mut remaining = mask;
    let mut comps = 0;
    while remaining != 0 {
        comps += 1;
        let start = remaining.trailing_zeros() as usize;
        let mut comp = 1u64 << start;
        loop {
            let mut frontier = 0u64;
            let mut c = comp;
            while c != 0 {
                let v = c.trailing_zeros() as usize;
                c &= c - 1;
                frontier |= rows[v] & remaining;
            }
            let grown = (comp | frontier) & remaining;
            if grown == comp {
                break;
            }
            comp = grown;
        }
        remaining &= !comp;
    }
    comps
}

fn mask_to_vec(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

/// Iterate all size-`k` subsets of `0..n` in lexicographic order.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(u64) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mask = idx.iter().fold(0u64, |m, &i| m | (1 << i));
        if f(mask) {
            return;
        }
        // advance combination
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in (i + 1)..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Exact toughness with the default enumeration cap.
pub fn toughness(g: &Graph) -> Result<ToughnessCertificate> {
    toughness_with_cap(g, TOUGHNESS_DEFAULT_CAP)
}

/// Exact toughness; `cap` bounds the vertex count accepted for the
/// exponential enumeration.
///
/// Cut sets are enumerated in increasing size, lexicographically within a
/// size. Two prunes apply: subsets that are not cut sets are skipped, and
/// the scan stops at size `s` once `s / (n - s)` (the best ratio any
/// size-`s` cut could reach if every remaining vertex became a singleton
/// component) cannot beat the incumbent.
pub fn toughness_with_cap(g: &Graph, cap: usize) -> Result<ToughnessCertificate> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.is_complete() {
        return Ok(ToughnessCertificate {
            value: Toughness::Infinite,
            witness: Vec::new(),
            components: 0,
        });
    }
    if n > cap {
        return Err(Error::Capacity {
            what: "toughness enumeration",
            detail: format!("n = {n} exceeds cap {cap}"),
        });
    }
    let rows = rows_or_cap(g, "toughness enumeration")?;
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let base_components = component_count(&rows, full);
    if base_components > 1 {
        return Ok(ToughnessCertificate {
            value: Toughness::Finite(Ratio::new(0, 1)),
            witness: Vec::new(),
            components: base_components,
        });
    }

    let mut best: Option<(u64, u64, u64)> = None; // (|S|, c, mask)
    for s in 1..=(n - 2) {
        if let Some((bn, bd, _)) = best {
            // lower bound for this and all larger sizes
            if (s as u64) * bd >= bn * ((n - s) as u64) {
                break;
            }
        }
        for_each_subset(n, s, |mask| {
            let c = component_count(&rows, full & !mask) as u64;
            if c > 1 {
                let improves = match best {
                    None => true,
                    Some((bn, bd, _)) => (s as u64) * bd < bn * c,
                };
                if improves {
                    best = Some((s as u64, c, mask));
                }
            }
            false
        });
    }
    let (num, den, mask) = best.expect("non-complete connected graph has a cut set");
    Ok(ToughnessCertificate {
        value: Toughness::Finite(Ratio::new(num, den)),
        witness: mask_to_vec(mask),
        components: den as usize,
    })
}

/// Exact maximum independent set size, by branch and bound. `rows` are
/// single-word adjacency bitsets.
fn max_independent_set(rows: &[u64], mask: u64) -> usize {
    if mask == 0 {
        return 0;
    }
    // pick the vertex of maximum degree within mask; branch on excluding or
    // including it
    let mut best_v = usize::MAX;
    let mut best_deg = 0u32;
    let mut m = mask;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        let deg = (rows[v] & mask).count_ones();
        if best_v == usize::MAX || deg > best_deg {
            best_v = v;
            best_deg = deg;
        }
    }
    if best_deg == 0 {
        // mask is an independent set
        return mask.count_ones() as usize;
    }
    let v = best_v;
    let without = max_independent_set(rows, mask & !(1 << v));
    let with = 1 + max_independent_set(rows, mask & !(rows[v] | (1 << v)));
    without.max(with)
}

/// Exact independence number of `g` (n <= 64).
pub fn independence_number(g: &Graph) -> Result<usize> {
    let rows = rows_or_cap(g, "independence number")?;
    let n = g.n();
    let full: u64 = if n == 0 {
        0
    } else if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    };
    Ok(max_independent_set(&rows, full))
}

/// Is `g` t-tough, i.e. `|S| >= t * c(G - S)` for every cut set `S`?
///
/// A violating cut has `|S| < t * c(G - S) <= t * alpha(G)`, so only
/// subsets below that size bound are enumerated. Before enumerating, the
/// certificate `t(G) >= kappa / alpha >= (2*delta - n + 2) / alpha` settles
/// dense instances without any search.
pub fn is_t_tough(g: &Graph, t: Ratio<u64>) -> Result<TToughCheck> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.is_complete() {
        return Ok(TToughCheck::Tough);
    }
    if t == Ratio::new(0, 1) {
        return Ok(TToughCheck::Tough);
    }
    let rows = rows_or_cap(g, "t-toughness check")?;
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let base_components = component_count(&rows, full);
    if base_components > 1 {
        return Ok(TToughCheck::NotTough {
            cut: Vec::new(),
            components: base_components,
        });
    }

    let alpha = max_independent_set(&rows, full) as u64;
    let delta = g.min_degree().unwrap() as i64;

    // kappa >= 2*delta - n + 2 and c(G - S) <= alpha give
    // t(G) >= (2*delta - n + 2) / alpha
    let kappa_lb = 2 * delta - n as i64 + 2;
    if kappa_lb > 0 {
        let lhs = kappa_lb as u64 * t.denom();
        let rhs = t.numer() * alpha;
        if lhs >= rhs {
            return Ok(TToughCheck::Tough);
        }
    }

    // violating |S| satisfies |S| * denom < numer * c <= numer * alpha
    let size_bound = ((t.numer() * alpha + t.denom() - 1) / t.denom()).saturating_sub(1);
    let size_bound = (size_bound as usize).min(n - 2);

    let mut work: u128 = 0;
    let mut choose: u128 = 1;
    for k in 1..=size_bound {
        choose = choose * (n - k + 1) as u128 / k as u128;
        work += choose;
    }
    if work > SUBSET_BUDGET {
        return Err(Error::Capacity {
            what: "t-toughness enumeration",
            detail: format!(
                "{work} subsets of size <= {size_bound} on n = {n} exceeds budget {SUBSET_BUDGET}"
            ),
        });
    }

    let mut found: Option<(u64, usize)> = None;
    for s in 1..=size_bound {
        for_each_subset(n, s, |mask| {
            let c = component_count(&rows, full & !mask) as u64;
            // violating: |S| < t * c  <=>  |S| * denom < numer * c
            if c > 1 && (s as u64) * t.denom() < t.numer() * c {
                found = Some((mask, c as usize));
                return true;
            }
            false
        });
        if found.is_some() {
            break;
        }
    }
    Ok(match found {
        Some((mask, c)) => TToughCheck::NotTough {
            cut: mask_to_vec(mask),
            components: c,
        },
        None => TToughCheck::Tough,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{construct, FamilySpec};

    fn ratio(n: u64, d: u64) -> Ratio<u64> {
        Ratio::new(n, d)
    }

    #[test]
    fn star_toughness() {
        let star = Graph::complete(1).join(&Graph::empty(3));
        let cert = toughness(&star).unwrap();
        assert_eq!(cert.value, Toughness::Finite(ratio(1, 3)));
        assert_eq!(cert.witness, vec![0]);
        assert_eq!(cert.components, 3);
    }

    #[test]
    fn cycle_toughness() {
        let c6 = Graph::cycle(6).unwrap();
        let cert = toughness(&c6).unwrap();
        assert_eq!(cert.value, Toughness::Finite(ratio(1, 1)));
        assert_eq!(cert.witness.len(), 2);
        assert_eq!(cert.components, 2);
        // witness vertices are nonadjacent on the cycle
        assert!(!c6.has_edge(cert.witness[0], cert.witness[1]));
    }

    #[test]
    fn mgraph_toughness_is_one() {
        let m8 = construct(&FamilySpec::MGraph { n: 8 }).unwrap();
        let cert = toughness(&m8).unwrap();
        assert_eq!(cert.value, Toughness::Finite(ratio(1, 1)));
    }

    #[test]
    fn complete_and_disconnected() {
        let cert = toughness(&Graph::complete(5)).unwrap();
        assert_eq!(cert.value, Toughness::Infinite);
        assert!(cert.witness.is_empty());
        let g = Graph::complete(2).union(&Graph::complete(3));
        let cert = toughness(&g).unwrap();
        assert_eq!(cert.value, Toughness::Finite(ratio(0, 1)));
        assert!(cert.witness.is_empty());
        assert_eq!(cert.components, 2);
    }

    #[test]
    fn witness_invariants() {
        // removing the witness yields exactly `components` components
        let g = construct(&FamilySpec::Extremal1Tough { n: 9, delta: 2 }).unwrap();
        let cert = toughness(&g).unwrap();
        let rows = g.rows64().unwrap();
        let full = (1u64 << g.n()) - 1;
        let mask = cert.witness.iter().fold(0u64, |m, &v| m | (1 << v));
        assert_eq!(
            component_count(&rows, full & !mask),
            cert.components
        );
        match cert.value {
            Toughness::Finite(r) => {
                assert_eq!(r, ratio(cert.witness.len() as u64, cert.components as u64));
            }
            Toughness::Infinite => panic!("not complete"),
        }
    }

    #[test]
    fn is_t_tough_examples() {
        assert!(is_t_tough(&Graph::complete(7), ratio(100, 1))
            .unwrap()
            .is_tough());
        assert!(is_t_tough(&Graph::cycle(6).unwrap(), ratio(1, 1))
            .unwrap()
            .is_tough());
        assert!(!is_t_tough(&Graph::cycle(6).unwrap(), ratio(11, 10))
            .unwrap()
            .is_tough());
        // ExtremalTTough(20, 1): the single join vertex gives ratio 1/2
        let g = construct(&FamilySpec::ExtremalTTough { n: 20, t: 1 }).unwrap();
        match is_t_tough(&g, ratio(1, 1)).unwrap() {
            TToughCheck::NotTough { cut, components } => {
                assert_eq!(cut, vec![0]);
                assert_eq!(components, 2);
            }
            TToughCheck::Tough => panic!("extremal graph must not be 1-tough"),
        }
    }

    #[test]
    fn is_t_tough_agrees_with_toughness_small() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let n = rng.gen_range(1..=7usize);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let cert = match toughness(&g) {
                Ok(c) => c,
                Err(_) => continue,
            };
            for t in [ratio(1, 2), ratio(1, 1), ratio(3, 2), ratio(2, 1)] {
                let check = is_t_tough(&g, t).unwrap();
                let expected = match cert.value {
                    Toughness::Infinite => true,
                    Toughness::Finite(v) => v >= t,
                };
                assert_eq!(check.is_tough(), expected, "t = {t} on {g:?}");
            }
        }
    }

    #[test]
    fn independence_number_small() {
        assert_eq!(independence_number(&Graph::complete(6)).unwrap(), 1);
        assert_eq!(independence_number(&Graph::cycle(6).unwrap()).unwrap(), 3);
        assert_eq!(independence_number(&Graph::cycle(7).unwrap()).unwrap(), 3);
        assert_eq!(independence_number(&Graph::empty(5)).unwrap(), 5);
        let star = Graph::complete(1).join(&Graph::empty(4));
        assert_eq!(independence_number(&star).unwrap(), 4);
    }

    #[test]
    fn caps_enforced() {
        let g = Graph::cycle(30).unwrap();
        assert!(matches!(
            toughness(&g),
            Err(Error::Capacity { .. })
        ));
        // raising the cap is allowed but n > 64 never is
        assert!(toughness_with_cap(&Graph::cycle(10).unwrap(), 10).is_ok());
    }

    #[test]
    fn petersen_exact() {
        let edges = [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5),
        ];
        let g = Graph::from_edges(10, &edges).unwrap();
        let cert = toughness(&g).unwrap();
        assert_eq!(cert.value, Toughness::Finite(ratio(4, 3)));
    }
}
