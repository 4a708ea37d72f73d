//! Exact hamiltonian cycle and path search with forced-edge propagation.
//!
//! The search extends a path vertex by vertex. Degree-2 vertices force both
//! incident edges up front; forcing is propagated to closure before any
//! branching. Two prunes keep dense refutations tractable: the unvisited
//! set must induce a connected subgraph, and every unvisited vertex needs
//! at least two usable endpoints among the unvisited set and the two open
//! path ends.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A vertex sequence that is consecutively adjacent in its graph; `closed`
/// means the last vertex is also adjacent to the first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclePath {
    pub vertices: Vec<usize>,
    pub closed: bool,
}

impl CyclePath {
    /// Check the sequence against `g`: distinct vertices, consecutive
    /// adjacency, closure edge when `closed`.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        if vs.is_empty() {
            return false;
        }
        let mut seen = vec![false; g.n()];
        for &v in vs {
            if v >= g.n() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        for w in vs.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return false;
            }
        }
        !self.closed || vs.len() < 3 || g.has_edge(vs[0], vs[vs.len() - 1])
    }

    /// Does the (closed) sequence use edge `{u, v}`?
    pub fn uses_edge(&self, u: usize, v: usize) -> bool {
        let vs = &self.vertices;
        let hit = |a: usize, b: usize| (a == u && b == v) || (a == v && b == u);
        if vs.windows(2).any(|w| hit(w[0], w[1])) {
            return true;
        }
        self.closed && vs.len() >= 3 && hit(vs[0], vs[vs.len() - 1])
    }
}

struct Searcher {
    n: usize,
    rows: Vec<u64>,
    /// usable[v]: neighbors not excluded by forced saturation
    usable: Vec<u64>,
    /// forced[v]: forced cycle-neighbors of v
    forced: Vec<u64>,
    total_forced_edges: usize,
}

enum Propagation {
    Consistent(Searcher),
    Infeasible,
}

impl Searcher {
    fn build(g: &Graph, forced_edges: &[(usize, usize)]) -> Result<Propagation> {
        let n = g.n();
        let rows = g.rows64().ok_or(Error::Capacity {
            what: "hamiltonian search",
            detail: format!("n = {n} exceeds the 64-vertex bitset limit"),
        })?;
        let mut forced = vec![0u64; n];
        for &(u, v) in forced_edges {
            if u >= n || v >= n || u == v || !g.has_edge(u, v) {
                return Err(Error::InvalidArgument(format!(
                    "forced edge ({u},{v}) is not an edge of the graph"
                )));
            }
            forced[u] |= 1 << v;
            forced[v] |= 1 << u;
        }
        let mut s = Searcher {
            n,
            usable: rows.clone(),
            rows,
            forced,
            total_forced_edges: 0,
        };
        if s.propagate() {
            s.total_forced_edges = s.forced.iter().map(|f| f.count_ones() as usize).sum::<usize>() / 2;
            Ok(Propagation::Consistent(s))
        } else {
            Ok(Propagation::Infeasible)
        }
    }

    /// Forced-edge closure. Returns false on contradiction.
    fn propagate(&mut self) -> bool {
        loop {
            let mut changed = false;
            for v in 0..self.n {
                let fdeg = self.forced[v].count_ones();
                let udeg = self.usable[v].count_ones();
                if fdeg > 2 || udeg < 2 {
                    return false;
                }
                if fdeg == 2 && self.usable[v] != self.forced[v] {
                    // drop all non-forced edges at v
                    let drop = self.usable[v] & !self.forced[v];
                    self.usable[v] = self.forced[v];
                    let mut d = drop;
                    while d != 0 {
                        let w = d.trailing_zeros() as usize;
                        d &= d - 1;
                        self.usable[w] &= !(1u64 << v);
                    }
                    changed = true;
                }
                if udeg == 2 && self.forced[v] != self.usable[v] {
                    // both remaining edges are forced
                    let add = self.usable[v] & !self.forced[v];
                    self.forced[v] = self.usable[v];
                    let mut a = add;
                    while a != 0 {
                        let w = a.trailing_zeros() as usize;
                        a &= a - 1;
                        self.forced[w] |= 1u64 << v;
                    }
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        // forced edges must form disjoint paths, or one full cycle
        let mut dsu: Vec<usize> = (0..self.n).collect();
        fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
            let mut r = x;
            while dsu[r] != r {
                r = dsu[r];
            }
            let mut c = x;
            while dsu[c] != r {
                let next = dsu[c];
                dsu[c] = r;
                c = next;
            }
            r
        }
        let mut forced_count = 0usize;
        for u in 0..self.n {
            let mut f = self.forced[u] & !((1u64 << u) | ((1u64 << u) - 1));
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                forced_count += 1;
                let (ru, rv) = (find(&mut dsu, u), find(&mut dsu, v));
                if ru == rv {
                    // forced cycle: only fine if it spans all n vertices
                    if forced_count != self.n {
                        return false;
                    }
                } else {
                    dsu[ru] = rv;
                }
            }
        }
        true
    }

    /// The forced edges alone already form a spanning cycle?
    fn forced_spanning_cycle(&self) -> Option<CyclePath> {
        if self.total_forced_edges != self.n || self.n < 3 {
            return None;
        }
        if (0..self.n).any(|v| self.forced[v].count_ones() != 2) {
            return None;
        }
        let mut vs = vec![0usize];
        let mut prev = usize::MAX;
        let mut cur = 0usize;
        for _ in 1..self.n {
            let mut f = self.forced[cur];
            let mut next = usize::MAX;
            while f != 0 {
                let w = f.trailing_zeros() as usize;
                f &= f - 1;
                if w != prev {
                    next = w;
                    break;
                }
            }
            prev = cur;
            cur = next;
            vs.push(cur);
        }
        Some(CyclePath {
            vertices: vs,
            closed: true,
        })
    }

    fn search_cycle(&self) -> Option<CyclePath> {
        let n = self.n;
        if n < 3 {
            return None;
        }
        if let Some(c) = self.forced_spanning_cycle() {
            return Some(c);
        }
        // start from a lowest-degree vertex
        let start = (0..n)
            .min_by_key(|&v| (self.usable[v].count_ones(), v))
            .unwrap();
        let mut path = Vec::with_capacity(n);
        path.push(start);
        let visited = 1u64 << start;
        let mut used_forced = 0usize;
        self.extend(start, start, visited, &mut path, &mut used_forced)
            .then(|| CyclePath {
                vertices: path,
                closed: true,
            })
    }

    fn extend(
        &self,
        start: usize,
        cur: usize,
        visited: u64,
        path: &mut Vec<usize>,
        used_forced: &mut usize,
    ) -> bool {
        let n = self.n;
        let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let unvisited = full & !visited;

        if unvisited == 0 {
            // close the cycle
            if self.usable[cur] & (1u64 << start) == 0 {
                return false;
            }
            let closing_forced = self.forced[cur] & (1u64 << start) != 0;
            let outstanding = self.total_forced_edges - *used_forced;
            return outstanding == usize::from(closing_forced);
        }

        // unvisited must induce a connected subgraph
        if !self.connected_within(unvisited) {
            return false;
        }
        // every unvisited vertex needs two usable ends among unvisited,
        // cur, start
        let ends = (1u64 << cur) | (1u64 << start);
        let mut m = unvisited;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if (self.usable[v] & (unvisited | ends)).count_ones() < 2 {
                return false;
            }
        }

        // a forced edge from cur into the visited set is dead unless it is
        // the arrival edge (the closing edge case has unvisited empty)
        let arrival = if path.len() >= 2 {
            1u64 << path[path.len() - 2]
        } else {
            0
        };
        if self.forced[cur] & visited & !arrival != 0 {
            return false;
        }
        // candidates: forced-unused edges at cur take precedence
        let forced_next = self.forced[cur] & unvisited;
        let candidates = if forced_next != 0 {
            forced_next
        } else {
            self.usable[cur] & unvisited
        };

        // order candidates by ascending usable degree within the unvisited
        // region, then by label
        let mut cand: Vec<(u32, usize)> = Vec::with_capacity(candidates.count_ones() as usize);
        let mut c = candidates;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            cand.push(((self.usable[v] & unvisited).count_ones(), v));
        }
        cand.sort_unstable();

        // skip candidates that are twins of one already explored: equal
        // usable rows on the live region (ignoring each other) and no forced
        // edges on either, so swapping them maps completions to completions
        let live = unvisited | ends;
        let mut explored: Vec<usize> = Vec::new();
        for &(_, v) in &cand {
            if self.forced[v] == 0
                && explored.iter().any(|&u| {
                    self.forced[u] == 0
                        && (self.usable[u] ^ self.usable[v]) & live & !((1u64 << u) | (1u64 << v))
                            == 0
                })
            {
                continue;
            }
            explored.push(v);
            let edge_forced = self.forced[cur] & (1u64 << v) != 0;
            path.push(v);
            if edge_forced {
                *used_forced += 1;
            }
            if self.extend(start, v, visited | (1u64 << v), path, used_forced) {
                return true;
            }
            if edge_forced {
                *used_forced -= 1;
            }
            path.pop();
        }
        false
    }

    fn connected_within(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        let start = mask.trailing_zeros() as usize;
        let mut comp = 1u64 << start;
        loop {
            let mut frontier = 0u64;
            let mut c = comp;
            while c != 0 {
                let v = c.trailing_zeros() as usize;
                c &= c - 1;
                frontier |= self.rows[v] & mask;
            }
            let grown = (comp | frontier) & mask;
            if grown == comp {
                return grown == mask;
            }
            comp = grown;
        }
    }
}

/// Exact hamiltonian cycle decision; returns a witness cycle when one
/// exists. Errors when `n < 3`.
pub fn hamiltonian_cycle(g: &Graph) -> Result<Option<CyclePath>> {
    hamiltonian_cycle_through(g, &[])
}

/// Exact decision for a hamiltonian cycle containing every edge of `m`.
pub fn hamiltonian_cycle_through(g: &Graph, m: &[(usize, usize)]) -> Result<Option<CyclePath>> {
    if g.n() < 3 {
        return Err(Error::Domain {
            what: "hamiltonian cycle",
            reason: format!("n >= 3 required, got n = {}", g.n()),
        });
    }
    match Searcher::build(g, m)? {
        Propagation::Infeasible => Ok(None),
        Propagation::Consistent(s) => Ok(s.search_cycle()),
    }
}

/// Exact hamiltonian `u`-`v` path decision, via a cycle search in the graph
/// extended with one auxiliary vertex adjacent to exactly `u` and `v`.
pub fn hamiltonian_path_between(g: &Graph, u: usize, v: usize) -> Result<Option<CyclePath>> {
    let n = g.n();
    if u >= n || v >= n || u == v {
        return Err(Error::InvalidArgument(format!(
            "path endpoints ({u},{v}) invalid for n = {n}"
        )));
    }
    if n == 2 {
        return Ok(g.has_edge(u, v).then(|| CyclePath {
            vertices: vec![u, v],
            closed: false,
        }));
    }
    let mut edges = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            if g.has_edge(a, b) {
                edges.push((a, b));
            }
        }
    }
    edges.push((u, n));
    edges.push((v, n));
    let aug = Graph::from_edges(n + 1, &edges)?;
    let cycle = match hamiltonian_cycle(&aug)? {
        Some(c) => c,
        None => return Ok(None),
    };
    // rotate so the auxiliary vertex sits at the front, then drop it
    let pos = cycle.vertices.iter().position(|&x| x == n).unwrap();
    let mut rotated: Vec<usize> = cycle.vertices[pos..]
        .iter()
        .chain(cycle.vertices[..pos].iter())
        .copied()
        .collect();
    rotated.remove(0);
    if rotated[0] != u {
        rotated.reverse();
    }
    debug_assert_eq!(rotated[0], u);
    debug_assert_eq!(*rotated.last().unwrap(), v);
    Ok(Some(CyclePath {
        vertices: rotated,
        closed: false,
    }))
}

/// True iff every vertex pair is joined by a hamiltonian path.
pub fn is_hamiltonian_connected(g: &Graph) -> bool {
    let n = g.n();
    if n <= 1 {
        return true;
    }
    if n == 2 {
        return g.has_edge(0, 1);
    }
    for u in 0..n {
        for v in (u + 1)..n {
            match hamiltonian_path_between(g, u, v) {
                Ok(Some(_)) => {}
                _ => return false,
            }
        }
    }
    true
}
