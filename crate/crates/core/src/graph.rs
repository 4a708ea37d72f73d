//! Dense simple-graph representation and the join/union construction algebra.

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored as a dense bit matrix, one row of `u64` words per
/// vertex. Values are immutable once built: every public constructor returns
/// a finished graph and all operations are pure.
///
/// # Examples
/// ```
/// use spectough::graph::Graph;
/// let g = Graph::complete(4);
/// assert_eq!(g.edge_count(), 6);
/// assert_eq!(g.degree(0), 3);
/// ```
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        let words = n.div_ceil(64);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.set_edge(u, v);
            }
        }
        g
    }

    /// Cycle `C_n` (requires `n >= 3`).
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::ParameterDomain {
                what: "cycle",
                constraint: format!("n >= 3 required, got {n}"),
            });
        }
        let mut g = Graph::empty(n);
        for u in 0..n {
            g.set_edge(u, (u + 1) % n);
        }
        Ok(g)
    }

    /// Graph from an explicit edge list. Rejects out-of-range endpoints and
    /// self-loops; duplicate edges are harmless.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u},{v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && (self.bits[u * self.words + v / 64] >> (v % 64)) & 1 == 1
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// Degree of vertex `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Total number of edges `m`.
    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Degrees in vertex order.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Minimum degree, or `None` for the empty graph.
    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    /// Maximum degree, or `None` for the empty graph.
    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    /// Ascending degree sequence `(d_1 <= d_2 <= ... <= d_n)`.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable();
        d
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree(v));
        for (wi, &word) in self.row(v).iter().enumerate() {
            let mut w = word;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                out.push(wi * 64 + b);
                w &= w - 1;
            }
        }
        out
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Every pair adjacent?
    pub fn is_complete(&self) -> bool {
        self.n < 2 || (0..self.n).all(|v| self.degree(v) == self.n - 1)
    }

    pub fn is_regular(&self) -> bool {
        self.n == 0 || self.min_degree() == self.max_degree()
    }

    pub fn is_connected(&self) -> bool {
        crate::structure::components(self).0 <= 1
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::empty(n);
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    g.set_edge(u, v);
                }
            }
        }
        for u in 0..other.n {
            for v in other.neighbors(u) {
                if u < v {
                    g.set_edge(self.n + u, self.n + v);
                }
            }
        }
        g
    }

    /// Join: disjoint union plus all cross edges.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.set_edge(u, self.n + v);
            }
        }
        g
    }

    /// Adjacency rows packed into single `u64` words; `None` when `n > 64`.
    pub(crate) fn rows64(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        Some((0..self.n).map(|v| self.row(v)[0]).collect())
    }

    /// Dense adjacency matrix as `f64`, row-major.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let n = self.n;
        let mut a = vec![0.0; n * n];
        for u in 0..n {
            for v in self.neighbors(u) {
                a[u * n + v] = 1.0;
            }
        }
        a
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}; ", self.n, self.edge_count())?;
        let mut first = true;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    if !first {
                        write!(f, " ")?;
                    }
                    write!(f, "{u}-{v}")?;
                    first = false;
                }
            }
        }
        write!(f, ")")
    }
}

/// Disjoint union of `k` copies of `g`.
pub fn copies(k: usize, g: &Graph) -> Graph {
    let mut out = Graph::empty(0);
    for _ in 0..k {
        out = out.union(g);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_basics() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.edge_count(), 6);
        assert!(k4.degrees().iter().all(|&d| d == 3));
        let k1 = Graph::complete(1);
        assert_eq!(k1.edge_count(), 0);
        assert_eq!(k1.n(), 1);
        let k0 = Graph::complete(0);
        assert_eq!(k0.n(), 0);
        assert_eq!(k0.edge_count(), 0);
    }

    #[test]
    fn union_shifts_labels() {
        let g = Graph::complete(3).union(&Graph::complete(3));
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 6);
        assert!(g.has_edge(3, 4));
        assert!(!g.has_edge(2, 3));
        let two_k1 = Graph::complete(1).union(&Graph::complete(1));
        assert_eq!((two_k1.n(), two_k1.edge_count()), (2, 0));
        let g = Graph::complete(4)
            .union(&Graph::complete(1))
            .union(&Graph::complete(1));
        assert_eq!((g.n(), g.edge_count()), (6, 6));
    }

    #[test]
    fn join_edge_count_identity() {
        // join(K1, K_{n-1}) = K_n
        let g = Graph::complete(1).join(&Graph::complete(5));
        assert_eq!(g, Graph::complete(6));
        // join(K2, K2 u K1): 1 + 1 + 2*3 edges
        let h = Graph::complete(2).join(&Graph::complete(2).union(&Graph::complete(1)));
        assert_eq!(h.n(), 5);
        assert_eq!(h.edge_count(), 8);
        // wheel-like join(K1, C4)
        let w = Graph::complete(1).join(&Graph::cycle(4).unwrap());
        assert_eq!(w.edge_count(), 8);
    }

    #[test]
    fn join_degree_identity() {
        let a = Graph::cycle(5).unwrap();
        let b = Graph::complete(3);
        let j = a.join(&b);
        for v in 0..a.n() {
            assert_eq!(j.degree(v), a.degree(v) + b.n());
        }
        for v in 0..b.n() {
            assert_eq!(j.degree(a.n() + v), b.degree(v) + a.n());
        }
    }

    #[test]
    fn degree_sequence_sorted() {
        let g = Graph::complete(1).union(&Graph::complete(3));
        assert_eq!(g.degree_sequence(), vec![0, 2, 2, 2]);
        assert_eq!(Graph::complete(4).degree_sequence(), vec![3, 3, 3, 3]);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        let g = Graph::from_edges(3, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn multiword_rows() {
        // n > 64 exercises the two-word rows
        let g = Graph::complete(70);
        assert_eq!(g.degree(69), 69);
        assert_eq!(g.edge_count(), 70 * 69 / 2);
        assert!(g.has_edge(0, 69));
    }
}
