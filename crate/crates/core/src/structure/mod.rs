//! Exact combinatorial structure: components, toughness, hamiltonian
//! cycles and paths, degree-sequence conditions, and small-graph
//! isomorphism.

mod hamilton;
mod iso;
mod toughness;

pub use hamilton::{
    hamiltonian_cycle, hamiltonian_cycle_through, hamiltonian_path_between,
    is_hamiltonian_connected, CyclePath,
};
pub use iso::{is_isomorphic, is_isomorphic_with_cap, ISO_DEFAULT_CAP};
pub use toughness::{
    independence_number, is_t_tough, toughness, toughness_with_cap, TToughCheck, Toughness,
    ToughnessCertificate, TOUGHNESS_DEFAULT_CAP,
};

use crate::graph::Graph;

/// Connected components: `(count, components)`, each component listed in
/// increasing vertex order, components ordered by smallest member.
pub fn components(g: &Graph) -> (usize, Vec<Vec<usize>>) {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                    queue.push_back(v);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    (comps.len(), comps)
}

/// Degree-sequence implication: for all `1 <= i < n/2`,
/// `d_i <= i` implies `d_{n-i+1} >= n - i` (indices 1-based into the
/// ascending sequence). Together with 1-toughness this forces a
/// hamiltonian cycle.
pub fn chvatal_condition(g: &Graph) -> bool {
    let d = g.degree_sequence();
    let n = g.n();
    for i in 1..n {
        if 2 * i >= n {
            break;
        }
        if d[i - 1] <= i && d[n - i] < n - i {
            return false;
        }
    }
    true
}

/// Smallest 1-based index `theta` with `d_theta >= n/2` in the ascending
/// degree sequence, or `None` if no degree reaches `n/2`.
pub fn theta_index(g: &Graph) -> Option<usize> {
    let d = g.degree_sequence();
    let n = g.n();
    d.iter().position(|&deg| 2 * deg >= n).map(|i| i + 1)
}
