//! Independent oracles shared by the integration suites. These deliberately
//! avoid the library's optimized code paths: plain subset scans and
//! permutation determinants only.

use num_rational::Ratio;
use spectough::Graph;

/// Toughness by scanning every one of the 2^n subsets, no pruning.
/// Returns `None` for complete graphs (no cut sets).
pub fn naive_toughness(g: &Graph) -> Option<Ratio<u64>> {
    let n = g.n();
    assert!(n <= 20, "oracle is for small graphs");
    if n == 0 {
        return None;
    }
    let mut best: Option<Ratio<u64>> = None;
    for mask in 0u32..(1 << n) {
        let removed: Vec<usize> = (0..n).filter(|&v| (mask >> v) & 1 == 1).collect();
        if removed.len() == n {
            continue;
        }
        let c = component_count_without(g, &removed);
        if c > 1 {
            let val = Ratio::new(removed.len() as u64, c as u64);
            if best.map_or(true, |b| val < b) {
                best = Some(val);
            }
        }
    }
    best
}

fn component_count_without(g: &Graph, removed: &[usize]) -> usize {
    let n = g.n();
    let gone = |v: usize| removed.contains(&v);
    let mut seen = vec![false; n];
    let mut comps = 0;
    for start in 0..n {
        if seen[start] || gone(start) {
            continue;
        }
        comps += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            for v in g.neighbors(u) {
                if !seen[v] && !gone(v) {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
    }
    comps
}

/// Hamiltonian cycle decision by trying every vertex permutation with
/// vertex 0 pinned first.
pub fn brute_force_hamiltonian(g: &Graph) -> bool {
    let n = g.n();
    assert!((3..=9).contains(&n), "oracle is for small graphs");
    let mut rest: Vec<usize> = (1..n).collect();
    permute(g, &mut rest, 0)
}

fn permute(g: &Graph, rest: &mut Vec<usize>, k: usize) -> bool {
    if k == rest.len() {
        let ok = g.has_edge(0, rest[0])
            && rest.windows(2).all(|w| g.has_edge(w[0], w[1]))
            && g.has_edge(*rest.last().unwrap(), 0);
        return ok;
    }
    for i in k..rest.len() {
        rest.swap(k, i);
        if permute(g, rest, k + 1) {
            return true;
        }
        rest.swap(k, i);
    }
    false
}

/// Determinant of `xI - M` by the permutation-sum definition (Leibniz);
/// exponential but entirely independent of the library's determinant code.
pub fn leibniz_char_poly(m: &[Vec<f64>], x: f64) -> f64 {
    let k = m.len();
    let mut b = vec![vec![0.0; k]; k];
    for i in 0..k {
        for j in 0..k {
            b[i][j] = if i == j { x - m[i][j] } else { -m[i][j] };
        }
    }
    let mut perm: Vec<usize> = (0..k).collect();
    let mut det = 0.0;
    leibniz_sum(&b, &mut perm, 0, 1.0, &mut det);
    det
}

fn leibniz_sum(b: &[Vec<f64>], perm: &mut Vec<usize>, k: usize, sign: f64, det: &mut f64) {
    let n = perm.len();
    if k == n {
        let mut prod = sign;
        for (i, &j) in perm.iter().enumerate() {
            prod *= b[i][j];
        }
        *det += prod;
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        let s = if i == k { sign } else { -sign };
        leibniz_sum(b, perm, k + 1, s, det);
        perm.swap(k, i);
    }
}

/// The Petersen graph: outer 5-cycle, spokes, inner pentagram.
pub fn petersen() -> Graph {
    Graph::from_edges(
        10,
        &[
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
        ],
    )
    .unwrap()
}

/// Random graph with a seeded RNG, edge probability `p`.
pub fn random_graph(rng: &mut impl rand::Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}
