//! Small-graph isomorphism: color refinement plus backtracking.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::BTreeMap;

/// Default vertex cap for isomorphism checks.
pub const ISO_DEFAULT_CAP: usize = 16;

/// Exact isomorphism decision with the default size cap.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    is_isomorphic_with_cap(g, h, ISO_DEFAULT_CAP)
}

/// Stable vertex colors from iterated neighborhood refinement, shared
/// across both graphs so classes are comparable.
fn refine_colors(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>, bool) {
    let n = g.n();
    let mut cg: Vec<usize> = vec![0; n];
    let mut ch: Vec<usize> = vec![0; n];
    let mut ncolors = 1usize;
    for _ in 0..n {
        let sig = |g: &Graph, colors: &[usize], v: usize| {
            let mut counts = vec![0usize; ncolors];
            for w in g.neighbors(v) {
                counts[colors[w]] += 1;
            }
            (colors[v], counts)
        };
        let mut table: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        for v in 0..n {
            let s = sig(g, &cg, v);
            let next = table.len();
            table.entry(s).or_insert(next);
        }
        for v in 0..n {
            let s = sig(h, &ch, v);
            let next = table.len();
            table.entry(s).or_insert(next);
        }
        let new_cg: Vec<usize> = (0..n).map(|v| table[&sig(g, &cg, v)]).collect();
        let new_ch: Vec<usize> = (0..n).map(|v| table[&sig(h, &ch, v)]).collect();
        let new_ncolors = table.len();
        let stable = new_ncolors == ncolors;
        cg = new_cg;
        ch = new_ch;
        ncolors = new_ncolors;
        if stable {
            break;
        }
    }
    // compatible iff the color class sizes agree
    let mut count_g = BTreeMap::new();
    let mut count_h = BTreeMap::new();
    for v in 0..n {
        *count_g.entry(cg[v]).or_insert(0usize) += 1;
        *count_h.entry(ch[v]).or_insert(0usize) += 1;
    }
    let compatible = count_g == count_h;
    (cg, ch, compatible)
}

/// Exact isomorphism decision; `cap` bounds the accepted vertex count
/// (hard limit 64).
pub fn is_isomorphic_with_cap(g: &Graph, h: &Graph, cap: usize) -> Result<bool> {
    if g.n() != h.n() {
        return Ok(false);
    }
    let n = g.n();
    if n > cap || n > 64 {
        return Err(Error::Capacity {
            what: "isomorphism check",
            detail: format!("n = {n} exceeds cap {}", cap.min(64)),
        });
    }
    if n == 0 {
        return Ok(true);
    }
    if g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    let (cg, ch, compatible) = refine_colors(g, h);
    if !compatible {
        return Ok(false);
    }
    let rows_g = g.rows64().expect("n <= 64");
    let rows_h = h.rows64().expect("n <= 64");

    // map G vertices in order of ascending color class size (fail fast)
    let mut class_size = BTreeMap::new();
    for &c in &cg {
        *class_size.entry(c).or_insert(0usize) += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (class_size[&cg[v]], cg[v], v));

    let mut image = vec![usize::MAX; n]; // g vertex -> h vertex
    let mut used = 0u64;
    let found = backtrack(
        &rows_g, &rows_h, &cg, &ch, &order, 0, &mut image, &mut used,
    )
    .is_some();
    Ok(found)
}

fn backtrack(
    rows_g: &[u64],
    rows_h: &[u64],
    cg: &[usize],
    ch: &[usize],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut u64,
) -> Option<()> {
    if depth == order.len() {
        return Some(());
    }
    let v = order[depth];
    for w in 0..rows_h.len() {
        if (*used >> w) & 1 == 1 || ch[w] != cg[v] {
            continue;
        }
        // adjacency with already-mapped vertices must match
        let mut ok = true;
        for &pv in &order[..depth] {
            let pw = image[pv];
            if (rows_g[v] >> pv) & 1 != (rows_h[w] >> pw) & 1 {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        image[v] = w;
        *used |= 1 << w;
        if backtrack(rows_g, rows_h, cg, ch, order, depth + 1, image, used).is_some() {
            return Some(());
        }
        image[v] = usize::MAX;
        *used &= !(1 << w);
    }
    None
}
