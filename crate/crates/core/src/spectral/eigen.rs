//! Dense symmetric eigensolver: Householder tridiagonalization followed by
//! implicit-shift QL iteration. Eigenvalues only, no eigenvector
//! accumulation.

use crate::error::{Error, Result};

const OFFDIAG_TOL: f64 = 1e-14;
const MAX_SWEEPS: usize = 50;

/// All eigenvalues of a symmetric matrix given row-major. Ascending order.
pub fn symmetric_eigenvalues(a: &[f64], n: usize) -> Result<Vec<f64>> {
    assert_eq!(a.len(), n * n, "matrix shape mismatch");
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut work = a.to_vec();
    let (mut d, mut e) = tridiagonalize(&mut work, n);
    e.push(0.0); // scratch slot: the QL sweep writes e[m] for m up to n-1
    ql_implicit(&mut d, &mut e)?;
    d.sort_unstable_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    Ok(d)
}

/// Householder reduction to tridiagonal form. Returns (diagonal, subdiagonal)
/// where `e[k]` couples `d[k]` and `d[k+1]` (`e` has length n-1).
fn tridiagonalize(a: &mut [f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut e = vec![0.0; n.saturating_sub(1)];
    let at = |a: &[f64], i: usize, j: usize| a[i * n + j];

    for k in 0..n.saturating_sub(2) {
        // Householder vector zeroing column k below row k+1.
        let mut scale = 0.0;
        for i in (k + 1)..n {
            scale += at(a, i, k).abs();
        }
        if scale == 0.0 {
            e[k] = 0.0;
            continue;
        }
        let mut h = 0.0;
        let mut v = vec![0.0; n];
        for i in (k + 1)..n {
            v[i] = at(a, i, k) / scale;
            h += v[i] * v[i];
        }
        let f = v[k + 1];
        let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
        e[k] = scale * g;
        h -= f * g;
        v[k + 1] = f - g;
        // p = A v / h over the trailing block
        let mut p = vec![0.0; n];
        for i in (k + 1)..n {
            let mut s = 0.0;
            for j in (k + 1)..n {
                s += at(a, i, j) * v[j];
            }
            p[i] = s / h;
        }
        // K = v' p / (2h)
        let mut kk = 0.0;
        for i in (k + 1)..n {
            kk += v[i] * p[i];
        }
        kk /= 2.0 * h;
        // q = p - K v;  A <- A - v q' - q v'
        for i in (k + 1)..n {
            p[i] -= kk * v[i];
        }
        for i in (k + 1)..n {
            for j in (k + 1)..=i {
                let delta = v[i] * p[j] + p[i] * v[j];
                a[i * n + j] -= delta;
                a[j * n + i] = a[i * n + j];
            }
        }
        a[(k + 1) * n + k] = e[k];
        a[k * n + k + 1] = e[k];
    }
    if n >= 2 {
        e[n - 2] = a[(n - 1) * n + (n - 2)];
    }
    let d = (0..n).map(|i| a[i * n + i]).collect();
    (d, e)
}

/// Implicit-shift QL on a symmetric tridiagonal matrix. An off-diagonal
/// entry counts as negligible when it drops below
/// `OFFDIAG_TOL * (|d_i| + |d_{i+1}|)`; each eigenvalue gets at most
/// `MAX_SWEEPS` sweeps before the solver reports a numerical failure.
fn ql_implicit(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    if n <= 1 {
        return Ok(());
    }
    let negligible = |e: f64, a: f64, b: f64| {
        let dd = a.abs() + b.abs();
        e == 0.0 || e.abs() <= OFFDIAG_TOL * dd
    };
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                if negligible(e[m], d[m], d[m + 1]) {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_SWEEPS {
                return Err(Error::Numerical {
                    what: "QL iteration",
                    reason: format!("eigenvalue {l} failed to converge in {MAX_SWEEPS} sweeps"),
                });
            }
            // implicit shift from the 2x2 at l
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    // recover: annihilated off-diagonal, restart the sweep
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if i == l {
                    d[l] -= p;
                    e[l] = g;
                    e[m] = 0.0;
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn eig_graph(g: &Graph) -> Vec<f64> {
        symmetric_eigenvalues(&g.adjacency_matrix(), g.n()).unwrap()
    }

    fn assert_close(a: &[f64], b: &[f64], tol: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() <= tol, "{x} vs {y} (tol {tol})");
        }
    }

    #[test]
    fn complete_graph_spectrum() {
        for n in 1..=12 {
            let ev = eig_graph(&Graph::complete(n));
            let mut expected = vec![-1.0; n - 1];
            expected.push((n - 1) as f64);
            assert_close(&ev, &expected, 1e-12);
        }
    }

    #[test]
    fn cycle_spectrum() {
        // C_n eigenvalues are 2 cos(2 pi k / n)
        for n in 3..=10 {
            let ev = eig_graph(&Graph::cycle(n).unwrap());
            let mut expected: Vec<f64> = (0..n)
                .map(|k| 2.0 * (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos())
                .collect();
            expected.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
            assert_close(&ev, &expected, 1e-12);
        }
    }

    #[test]
    fn path_spectrum() {
        // P_n eigenvalues are 2 cos(k pi / (n+1)), k = 1..n
        for n in 2..=9 {
            let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            let ev = eig_graph(&g);
            let mut expected: Vec<f64> = (1..=n)
                .map(|k| 2.0 * (k as f64 * std::f64::consts::PI / (n as f64 + 1.0)).cos())
                .collect();
            expected.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
            assert_close(&ev, &expected, 1e-12);
        }
    }

    #[test]
    fn petersen_spectrum() {
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
        let ev = eig_graph(&g);
        let expected = [-2.0, -2.0, -2.0, -2.0, 1.0, 1.0, 1.0, 1.0, 1.0, 3.0];
        assert_close(&ev, &expected, 1e-12);
    }

    #[test]
    fn trace_identities_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let n = rng.gen_range(1..=12usize);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let ev = eig_graph(&g);
            let s1: f64 = ev.iter().sum();
            let s2: f64 = ev.iter().map(|x| x * x).sum();
            assert!(s1.abs() < 1e-9, "trace {s1}");
            assert!((s2 - 2.0 * g.edge_count() as f64).abs() < 1e-8);
            // sum of cubes = 6 * (# triangles)
            let mut tri = 0usize;
            for u in 0..n {
                for v in (u + 1)..n {
                    for w in (v + 1)..n {
                        if g.has_edge(u, v) && g.has_edge(v, w) && g.has_edge(u, w) {
                            tri += 1;
                        }
                    }
                }
            }
            let s3: f64 = ev.iter().map(|x| x * x * x).sum();
            assert!((s3 - 6.0 * tri as f64).abs() < 1e-7, "{s3} vs {}", 6 * tri);
        }
    }

    #[test]
    fn disconnected_and_empty_rows() {
        let g = Graph::complete(3).union(&Graph::empty(4));
        let ev = eig_graph(&g);
        assert!((ev[ev.len() - 1] - 2.0).abs() < 1e-12);
        assert_eq!(ev.len(), 7);
    }

    #[test]
    fn large_graph_accuracy() {
        // K_200: eigenvalues 199 and -1; checks accuracy target at scale
        let ev = eig_graph(&Graph::complete(200));
        assert!((ev[199] - 199.0).abs() < 1e-10);
        assert!((ev[0] + 1.0).abs() < 1e-10);
    }
}
