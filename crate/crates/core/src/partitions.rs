//! Equitable partitions, quotient matrices, and the two closed-form 3x3
//! quotient constructions with their characteristic polynomials.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::SmallMatrix;
use num_rational::Ratio;

/// Ordered list of disjoint nonempty vertex cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    cells: Vec<Vec<usize>>,
}

impl Partition {
    /// Validates that cells are nonempty and pairwise disjoint. Coverage of
    /// the vertex set is checked against a concrete graph in [`quotient`].
    pub fn new(cells: Vec<Vec<usize>>) -> Result<Partition> {
        let mut seen = std::collections::BTreeSet::new();
        for (i, cell) in cells.iter().enumerate() {
            if cell.is_empty() {
                return Err(Error::InvalidPartition(format!("cell {i} is empty")));
            }
            for &v in cell {
                if !seen.insert(v) {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} appears in more than one cell"
                    )));
                }
            }
        }
        Ok(Partition { cells })
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    fn check_covers(&self, g: &Graph) -> Result<()> {
        let total: usize = self.cells.iter().map(Vec::len).sum();
        if total != g.n() || self.cells.iter().flatten().any(|&v| v >= g.n()) {
            return Err(Error::InvalidPartition(format!(
                "cells cover {total} vertices, graph has {}",
                g.n()
            )));
        }
        Ok(())
    }
}

/// Quotient matrix of a partition: entry `(i, j)` is the average number of
/// neighbors in cell `j` over vertices of cell `i`, computed exactly as a
/// rational before conversion to `f64`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientMatrix {
    matrix: SmallMatrix,
    equitable: bool,
    cell_sizes: Vec<usize>,
}

impl QuotientMatrix {
    pub fn matrix(&self) -> &SmallMatrix {
        &self.matrix
    }

    /// True when every vertex of cell `i` has exactly `b[i][j]` neighbors in
    /// cell `j`; decided by exact integer comparison, never by tolerance.
    pub fn is_equitable(&self) -> bool {
        self.equitable
    }

    pub fn cell_sizes(&self) -> &[usize] {
        &self.cell_sizes
    }

    /// Full spectrum of the quotient, descending. Valid because quotients of
    /// symmetric matrices are similar to the symmetric matrix
    /// `s_ij = b_ij * sqrt(|X_i| / |X_j|)`.
    pub fn spectrum(&self) -> Result<Vec<f64>> {
        let k = self.matrix.order();
        let mut sym = vec![0.0; k * k];
        for i in 0..k {
            for j in 0..k {
                let scale = (self.cell_sizes[i] as f64 / self.cell_sizes[j] as f64).sqrt();
                sym[i * k + j] = self.matrix.get(i, j) * scale;
            }
        }
        for i in 0..k {
            for j in (i + 1)..k {
                if (sym[i * k + j] - sym[j * k + i]).abs() > 1e-9 {
                    return Err(Error::Numerical {
                        what: "quotient spectrum",
                        reason: "quotient is not symmetrizable".into(),
                    });
                }
                let avg = 0.5 * (sym[i * k + j] + sym[j * k + i]);
                sym[i * k + j] = avg;
                sym[j * k + i] = avg;
            }
        }
        let mut ev = crate::spectral::eigen::symmetric_eigenvalues(&sym, k)?;
        ev.reverse();
        Ok(ev)
    }
}

/// Quotient matrix of the adjacency of `g` with respect to `pi`.
pub fn quotient(g: &Graph, pi: &Partition) -> Result<QuotientMatrix> {
    pi.check_covers(g)?;
    let k = pi.cell_count();
    let mut rows = vec![vec![0.0; k]; k];
    let mut equitable = true;
    for (i, cell_i) in pi.cells().iter().enumerate() {
        for (j, cell_j) in pi.cells().iter().enumerate() {
            let counts: Vec<usize> = cell_i
                .iter()
                .map(|&v| cell_j.iter().filter(|&&w| g.has_edge(v, w)).count())
                .collect();
            let total: usize = counts.iter().sum();
            if counts.iter().any(|&c| c * cell_i.len() != total) {
                equitable = false;
            }
            let avg = Ratio::new(total as i64, cell_i.len() as i64);
            rows[i][j] = *avg.numer() as f64 / *avg.denom() as f64;
        }
    }
    Ok(QuotientMatrix {
        matrix: SmallMatrix::from_rows(&rows)?,
        equitable,
        cell_sizes: pi.cells().iter().map(Vec::len).collect(),
    })
}

/// Coarsest equitable partition refining the all-vertices partition,
/// computed by iterated degree refinement. Cells are ordered by their
/// smallest vertex label so the result is reproducible.
pub fn coarsest_equitable(g: &Graph) -> Partition {
    let n = g.n();
    let mut color = vec![0usize; n];
    let mut ncolors = 1usize.min(n);
    loop {
        // signature: own color plus neighbor count per color
        let mut sigs: Vec<(usize, Vec<usize>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut counts = vec![0usize; ncolors];
            for w in g.neighbors(v) {
                counts[color[w]] += 1;
            }
            sigs.push((color[v], counts));
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| sigs[a].cmp(&sigs[b]).then(a.cmp(&b)));
        let mut new_color = vec![0usize; n];
        let mut next = 0usize;
        for idx in 0..order.len() {
            if idx > 0 && sigs[order[idx]] != sigs[order[idx - 1]] {
                next += 1;
            }
            new_color[order[idx]] = next;
        }
        let new_ncolors = if n == 0 { 0 } else { next + 1 };
        if new_ncolors == ncolors && new_color == color {
            break;
        }
        // stable when the partition no longer splits
        if new_ncolors == ncolors {
            // same number of classes; check whether the partition changed as
            // a set family rather than by renaming
            let mut map = vec![usize::MAX; ncolors];
            let mut consistent = true;
            for v in 0..n {
                if map[color[v]] == usize::MAX {
                    map[color[v]] = new_color[v];
                } else if map[color[v]] != new_color[v] {
                    consistent = false;
                    break;
                }
            }
            if consistent {
                break;
            }
        }
        color = new_color;
        ncolors = new_ncolors;
    }
    // gather cells, order by smallest member
    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); ncolors];
    for v in 0..n {
        cells[color[v]].push(v);
    }
    cells.retain(|c| !c.is_empty());
    cells.sort_by_key(|c| c[0]);
    Partition { cells }
}

fn check_b_domain(n: usize, s: usize) -> Result<()> {
    if s < 1 || n < 2 * s + 1 {
        return Err(Error::ParameterDomain {
            what: "b_pi_s",
            constraint: format!("s >= 1 and n >= 2s + 1 required, got n = {n}, s = {s}"),
        });
    }
    Ok(())
}

/// The 3x3 equitable quotient of `K_s v (K_{n-2s} u s*K_1)` with cells
/// (join block, independent block, clique block).
pub fn b_pi_s(n: usize, s: usize) -> Result<SmallMatrix> {
    check_b_domain(n, s)?;
    let (nf, sf) = (n as f64, s as f64);
    SmallMatrix::from_rows(&[
        vec![sf - 1.0, sf, nf - 2.0 * sf],
        vec![sf, 0.0, 0.0],
        vec![sf, 0.0, nf - 2.0 * sf - 1.0],
    ])
}

/// Closed-form characteristic polynomial of [`b_pi_s`] evaluated at `x`:
/// `x^3 - (n-s-2) x^2 - (s^2+n-s-1) x + s^2 n - 2 s^3 - s^2`.
pub fn phi_b(n: usize, s: usize, x: f64) -> Result<f64> {
    check_b_domain(n, s)?;
    let (nf, sf) = (n as f64, s as f64);
    Ok(x * x * x - (nf - sf - 2.0) * x * x - (sf * sf + nf - sf - 1.0) * x + sf * sf * nf
        - 2.0 * sf * sf * sf
        - sf * sf)
}

fn check_c_domain(n: usize, s: usize, delta: usize) -> Result<()> {
    let ok = s >= 1 && s < delta && n as i64 - s as i64 - ((delta - s + 1) * s) as i64 >= 1;
    if !ok {
        return Err(Error::ParameterDomain {
            what: "c_pi_prime",
            constraint: format!(
                "1 <= s < delta and n - s - (delta-s+1)s >= 1 required, got n = {n}, s = {s}, delta = {delta}"
            ),
        });
    }
    Ok(())
}

/// The 3x3 equitable quotient of `K_s v (K_{n-s-(delta-s+1)s} u s*K_{delta-s+1})`
/// with cells (join block, large clique, small cliques).
pub fn c_pi_prime(n: usize, s: usize, delta: usize) -> Result<SmallMatrix> {
    check_c_domain(n, s, delta)?;
    let (nf, sf, df) = (n as f64, s as f64, delta as f64);
    let big = nf - sf - (df - sf + 1.0) * sf;
    SmallMatrix::from_rows(&[
        vec![sf - 1.0, big, (df - sf + 1.0) * sf],
        vec![sf, big - 1.0, 0.0],
        vec![sf, 0.0, df - sf],
    ])
}

/// Closed-form characteristic polynomial of [`c_pi_prime`] evaluated at `x`,
/// transcribed coefficient by coefficient from its printed form.
pub fn phi_c(n: usize, s: usize, delta: usize, x: f64) -> Result<f64> {
    check_c_domain(n, s, delta)?;
    let (nf, sf, df) = (n as f64, s as f64, delta as f64);
    let c2 = -df * sf + sf * sf + df + nf - 2.0 * sf - 2.0;
    let c1 = df * df * sf - df * sf * sf - df * nf + nf * sf + sf * sf + 2.0 * df + nf
        - 3.0 * sf
        - 1.0;
    let c0 = -sf * (sf * (df - sf) * (df * sf - sf * sf - nf + 3.0 * sf) + df * df - sf * df - nf * sf)
        - 2.0 * sf * sf * sf
        + (nf - sf) * df
        - nf * sf
        - df
        + sf;
    Ok(x * x * x - c2 * x * x - c1 * x + c0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{construct, FamilySpec};
    use crate::spectral::{char_poly_eval, eig_max_small, spectral_radius};

    #[test]
    fn quotient_single_cell() {
        let g = Graph::complete(4);
        let pi = Partition::new(vec![vec![0, 1, 2, 3]]).unwrap();
        let q = quotient(&g, &pi).unwrap();
        assert!(q.is_equitable());
        assert_eq!(q.matrix().get(0, 0), 3.0);
    }

    #[test]
    fn quotient_star() {
        // K_{1,3}: center vs leaves -> [[0,3],[1,0]]
        let g = Graph::complete(1).join(&Graph::empty(3));
        let pi = Partition::new(vec![vec![0], vec![1, 2, 3]]).unwrap();
        let q = quotient(&g, &pi).unwrap();
        assert!(q.is_equitable());
        assert_eq!(q.matrix().rows(), vec![vec![0.0, 3.0], vec![1.0, 0.0]]);
    }

    #[test]
    fn quotient_matches_printed_matrix() {
        // cells in the printed order: join block, independents, clique
        let g = construct(&FamilySpec::Extremal1Tough { n: 10, delta: 2 }).unwrap();
        let pi = Partition::new(vec![
            vec![0, 1],
            vec![8, 9],
            (2..8).collect::<Vec<_>>(),
        ])
        .unwrap();
        let q = quotient(&g, &pi).unwrap();
        assert!(q.is_equitable());
        assert_eq!(q.matrix(), &b_pi_s(10, 2).unwrap());
    }

    #[test]
    fn non_equitable_flagged() {
        // P3: endpoints and middle in one cell is not equitable
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let pi = Partition::new(vec![vec![0, 1, 2]]).unwrap();
        let q = quotient(&g, &pi).unwrap();
        assert!(!q.is_equitable());
    }

    #[test]
    fn invalid_partitions_rejected() {
        let g = Graph::complete(3);
        assert!(Partition::new(vec![vec![]]).is_err());
        assert!(Partition::new(vec![vec![0], vec![0, 1]]).is_err());
        let missing = Partition::new(vec![vec![0], vec![1]]).unwrap();
        assert!(quotient(&g, &missing).is_err());
        let out_of_range = Partition::new(vec![vec![0, 1, 5]]).unwrap();
        assert!(quotient(&g, &out_of_range).is_err());
    }

    #[test]
    fn coarsest_equitable_examples() {
        assert_eq!(coarsest_equitable(&Graph::complete(5)).cell_count(), 1);
        let star = Graph::complete(1).join(&Graph::empty(3));
        let pi = coarsest_equitable(&star);
        assert_eq!(pi.cells(), &[vec![0], vec![1, 2, 3]]);
        let g = construct(&FamilySpec::Extremal1Tough { n: 10, delta: 2 }).unwrap();
        let pi = coarsest_equitable(&g);
        assert_eq!(pi.cell_count(), 3);
        assert_eq!(pi.cells()[0], vec![0, 1]);
        assert_eq!(pi.cells()[1], (2..8).collect::<Vec<_>>());
        assert_eq!(pi.cells()[2], vec![8, 9]);
        assert!(quotient(&g, &pi).unwrap().is_equitable());
    }

    #[test]
    fn b_pi_s_substitutions() {
        assert_eq!(
            b_pi_s(10, 2).unwrap().rows(),
            vec![vec![1.0, 2.0, 6.0], vec![2.0, 0.0, 0.0], vec![2.0, 0.0, 5.0]]
        );
        assert_eq!(
            b_pi_s(5, 2).unwrap().rows(),
            vec![vec![1.0, 2.0, 1.0], vec![2.0, 0.0, 0.0], vec![2.0, 0.0, 0.0]]
        );
        assert_eq!(
            b_pi_s(12, 3).unwrap().rows(),
            vec![vec![2.0, 3.0, 6.0], vec![3.0, 0.0, 0.0], vec![3.0, 0.0, 5.0]]
        );
        assert!(b_pi_s(4, 2).is_err());
        assert!(b_pi_s(10, 0).is_err());
    }

    #[test]
    fn phi_b_against_determinant() {
        assert_eq!(phi_b(10, 2, 1.0).unwrap(), 4.0);
        // constant term s^2 n - 2 s^3 - s^2 at (12,3): 45
        assert_eq!(phi_b(12, 3, 0.0).unwrap(), 45.0);
        let b = b_pi_s(10, 2).unwrap();
        for &x in &[-3.0, -1.0, 0.0, 1.0, 2.5, 7.2, 10.0] {
            let via_det = char_poly_eval(&b, x);
            let via_poly = phi_b(10, 2, x).unwrap();
            assert!(
                (via_det - via_poly).abs() <= 1e-9 * (1.0 + via_det.abs()),
                "x = {x}: {via_det} vs {via_poly}"
            );
        }
        // root property: phi_b vanishes at the graph spectral radius
        let g = construct(&FamilySpec::Extremal1Tough { n: 10, delta: 2 }).unwrap();
        let rho = spectral_radius(&g).unwrap();
        assert!(phi_b(10, 2, rho).unwrap().abs() < 1e-7);
    }

    #[test]
    fn c_pi_prime_substitutions() {
        assert_eq!(
            c_pi_prime(20, 2, 3).unwrap().rows(),
            vec![
                vec![1.0, 14.0, 4.0],
                vec![2.0, 13.0, 0.0],
                vec![2.0, 0.0, 1.0]
            ]
        );
        assert_eq!(
            c_pi_prime(18, 2, 4).unwrap().rows(),
            vec![
                vec![1.0, 10.0, 6.0],
                vec![2.0, 9.0, 0.0],
                vec![2.0, 0.0, 2.0]
            ]
        );
        assert_eq!(
            c_pi_prime(30, 3, 5).unwrap().rows(),
            vec![
                vec![2.0, 18.0, 9.0],
                vec![3.0, 17.0, 0.0],
                vec![3.0, 0.0, 2.0]
            ]
        );
        assert!(c_pi_prime(20, 3, 3).is_err());
        assert!(c_pi_prime(6, 2, 4).is_err());
    }

    #[test]
    fn phi_c_against_determinant() {
        let c = c_pi_prime(20, 2, 3).unwrap();
        for &x in &[-5.0, 0.0, 1.0, 7.0, 19.0] {
            let via_det = char_poly_eval(&c, x);
            let via_poly = phi_c(20, 2, 3, x).unwrap();
            assert!(
                (via_det - via_poly).abs() <= 1e-9 * (1.0 + via_det.abs()),
                "x = {x}: {via_det} vs {via_poly}"
            );
        }
        // root property
        let r = eig_max_small(&c).unwrap();
        assert!(phi_c(20, 2, 3, r).unwrap().abs() < 1e-7);
        // comparison sign at x = n - delta - 1 (positive under the
        // hypotheses delta > s >= 2)
        let diff = phi_c(20, 2, 3, 16.0).unwrap() - phi_b(20, 3, 16.0).unwrap();
        assert!((diff - 258.0).abs() < 1e-9);
    }

    #[test]
    fn quotient_spectrum_embeds_in_graph_spectrum() {
        let g = construct(&FamilySpec::Extremal1Tough { n: 12, delta: 3 }).unwrap();
        let pi = coarsest_equitable(&g);
        let q = quotient(&g, &pi).unwrap();
        assert!(q.is_equitable());
        let quotient_ev = q.spectrum().unwrap();
        let graph_ev = crate::spectral::eigen_report(&g).unwrap();
        for qe in quotient_ev {
            assert!(
                graph_ev.eigenvalues().iter().any(|ge| (ge - qe).abs() < 1e-7),
                "quotient eigenvalue {qe} missing from graph spectrum"
            );
        }
        // and the dominant eigenvalues agree
        let via_quotient = eig_max_small(q.matrix()).unwrap();
        assert!((via_quotient - graph_ev.rho()).abs() < 1e-8);
    }
}
