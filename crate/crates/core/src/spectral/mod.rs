//! Adjacency spectra and the closed-form spectral bounds.

pub(crate) mod eigen;
mod small;

pub use small::{char_poly_eval, eig_max_small, SmallMatrix};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Full adjacency spectrum of a graph, eigenvalues in descending order.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralReport {
    eigenvalues: Vec<f64>,
}

impl SpectralReport {
    /// Eigenvalues in descending order; length `n`.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Spectral radius: the largest eigenvalue.
    pub fn rho(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// Second largest eigenvalue; `None` when `n = 1`.
    pub fn lambda2(&self) -> Option<f64> {
        self.eigenvalues.get(1).copied()
    }

    /// Smallest eigenvalue.
    pub fn lambda_min(&self) -> f64 {
        *self.eigenvalues.last().unwrap()
    }

    /// `lambda = max(|lambda_2|, |lambda_n|)`, the second largest absolute
    /// eigenvalue; `None` when `n = 1`.
    pub fn lambda_abs(&self) -> Option<f64> {
        self.lambda2()
            .map(|l2| l2.abs().max(self.lambda_min().abs()))
    }
}

/// All adjacency eigenvalues of `g`. Errors on the empty graph.
pub fn eigen_report(g: &Graph) -> Result<SpectralReport> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut ev = eigen::symmetric_eigenvalues(&g.adjacency_matrix(), g.n())?;
    ev.reverse();
    Ok(SpectralReport { eigenvalues: ev })
}

/// Largest adjacency eigenvalue of `g`.
pub fn spectral_radius(g: &Graph) -> Result<f64> {
    Ok(eigen_report(g)?.rho())
}

/// The bound `rho <= sqrt(2m - n + 1)`, tight exactly on stars and complete
/// graphs.
pub fn hong_bound(n: usize, m: usize) -> Result<f64> {
    let radicand = 2.0 * m as f64 - n as f64 + 1.0;
    if radicand < 0.0 {
        return Err(Error::Domain {
            what: "hong_bound",
            reason: format!("2m - n + 1 = {radicand} is negative (n = {n}, m = {m})"),
        });
    }
    Ok(radicand.sqrt())
}

/// The degree-aware bound
/// `rho <= (delta - 1)/2 + sqrt(2m - n*delta + (delta + 1)^2 / 4)`,
/// tight exactly on delta-regular graphs and on bidegreed graphs whose
/// degrees are all delta or n-1.
pub fn nikiforov_bound(n: usize, m: usize, delta: usize) -> Result<f64> {
    let d = delta as f64;
    let radicand = 2.0 * m as f64 - n as f64 * d + (d + 1.0) * (d + 1.0) / 4.0;
    if radicand < 0.0 {
        return Err(Error::Domain {
            what: "nikiforov_bound",
            reason: format!("radicand {radicand} is negative (n = {n}, m = {m}, delta = {delta})"),
        });
    }
    Ok((d - 1.0) / 2.0 + radicand.sqrt())
}

/// `f(x) = (x-1)/2 + sqrt(2q - p*x + (1+x)^2/4)`, defined for
/// `2q <= p(p-1)` and `0 <= x <= p-1`; decreasing in `x` on that domain.
pub fn lemma33_f(p: usize, q: usize, x: f64) -> Result<f64> {
    if 2 * q > p * p.saturating_sub(1) {
        return Err(Error::Domain {
            what: "lemma33_f",
            reason: format!("2q <= p(p-1) required, got p = {p}, q = {q}"),
        });
    }
    if !(0.0..=(p as f64 - 1.0)).contains(&x) {
        return Err(Error::Domain {
            what: "lemma33_f",
            reason: format!("x must lie in [0, p-1], got x = {x}, p = {p}"),
        });
    }
    let radicand = 2.0 * q as f64 - p as f64 * x + (1.0 + x) * (1.0 + x) / 4.0;
    if radicand < 0.0 {
        return Err(Error::Domain {
            what: "lemma33_f",
            reason: format!("negative radicand {radicand}"),
        });
    }
    Ok((x - 1.0) / 2.0 + radicand.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{construct, FamilySpec};

    #[test]
    fn complete_graph_report() {
        let r = eigen_report(&Graph::complete(6)).unwrap();
        assert!((r.rho() - 5.0).abs() < 1e-12);
        assert!((r.lambda2().unwrap() + 1.0).abs() < 1e-12);
        assert!((r.lambda_min() + 1.0).abs() < 1e-12);
        assert!((r.lambda_abs().unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn remark_values() {
        // rho(K17 v 3K1) = 18.72381 and rho(K11 v (K8 u K1)) = 18.35161
        let a = construct(&FamilySpec::SplitFamily {
            s: 17,
            parts: vec![1, 1, 1],
        })
        .unwrap();
        let b = construct(&FamilySpec::SplitFamily {
            s: 11,
            parts: vec![8, 1],
        })
        .unwrap();
        let ra = spectral_radius(&a).unwrap();
        let rb = spectral_radius(&b).unwrap();
        assert!((ra - 18.72381).abs() < 1e-4, "{ra}");
        assert!((rb - 18.35161).abs() < 1e-4, "{rb}");
        assert!(ra > rb);
        // closed form for the first: 8 + sqrt(115)
        assert!((ra - (8.0 + 115.0f64.sqrt())).abs() < 1e-10);
    }

    #[test]
    fn spectral_radius_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert!((spectral_radius(&c5).unwrap() - 2.0).abs() < 1e-10);
        let star = construct(&FamilySpec::SplitFamily {
            s: 1,
            parts: vec![1, 1, 1],
        })
        .unwrap(); // K_{1,3}
        assert!((spectral_radius(&star).unwrap() - 3.0f64.sqrt()).abs() < 1e-10);
        // rho(K_{n - delta}) = n - delta - 1 for n = 10, delta = 2
        assert!((spectral_radius(&Graph::complete(8)).unwrap() - 7.0).abs() < 1e-10);
    }

    #[test]
    fn empty_graph_rejected() {
        assert!(matches!(eigen_report(&Graph::empty(0)), Err(Error::EmptyGraph)));
    }

    #[test]
    fn rho_row_sum_sandwich() {
        // 2m/n <= rho <= max degree
        for (n, p) in [(8usize, 0.3f64), (10, 0.6), (12, 0.9)] {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(n as u64);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let rho = spectral_radius(&g).unwrap();
            assert!(rho >= 2.0 * g.edge_count() as f64 / n as f64 - 1e-9);
            assert!(rho <= g.max_degree().unwrap() as f64 + 1e-9);
        }
    }

    #[test]
    fn hong_bound_cases() {
        // complete graph: equality
        let k7 = Graph::complete(7);
        let hb = hong_bound(7, k7.edge_count()).unwrap();
        assert!((hb - 6.0).abs() < 1e-12);
        assert!((hb - spectral_radius(&k7).unwrap()).abs() < 1e-10);
        // star: equality
        let star = construct(&FamilySpec::SplitFamily {
            s: 1,
            parts: vec![1, 1, 1],
        })
        .unwrap();
        let hb = hong_bound(4, 3).unwrap();
        assert!((hb - 3.0f64.sqrt()).abs() < 1e-12);
        assert!((hb - spectral_radius(&star).unwrap()).abs() < 1e-10);
        // C5: strict
        let c5 = Graph::cycle(5).unwrap();
        let hb = hong_bound(5, 5).unwrap();
        assert!((hb - 6.0f64.sqrt()).abs() < 1e-12);
        assert!(hb > spectral_radius(&c5).unwrap() + 0.4);
        // negative radicand
        assert!(hong_bound(5, 1).is_err());
    }

    #[test]
    fn nikiforov_bound_cases() {
        // C5 with delta = 2: equality at 2
        let b = nikiforov_bound(5, 5, 2).unwrap();
        assert!((b - 2.0).abs() < 1e-12);
        // K_n with delta = n-1 equals n-1
        for n in 2..=8 {
            let m = n * (n - 1) / 2;
            let b = nikiforov_bound(n, m, n - 1).unwrap();
            assert!((b - (n as f64 - 1.0)).abs() < 1e-10);
        }
        // M_18 with delta = 2: bound must dominate rho
        let m18 = construct(&FamilySpec::MGraph { n: 18 }).unwrap();
        let b = nikiforov_bound(18, m18.edge_count(), 2).unwrap();
        assert!(b >= spectral_radius(&m18).unwrap());
    }

    #[test]
    fn lemma33_f_cases() {
        // decreasing on the admissible range
        let f0 = lemma33_f(5, 10, 0.0).unwrap();
        let f4 = lemma33_f(5, 10, 4.0).unwrap();
        assert!(f0 >= f4);
        let f2 = lemma33_f(4, 6, 2.0).unwrap();
        let f3 = lemma33_f(4, 6, 3.0).unwrap();
        assert!(f2 >= f3);
        // radicand simplifies to 1 at p=2, q=1, x=1
        assert!((lemma33_f(2, 1, 1.0).unwrap() - 1.0).abs() < 1e-15);
        // hypothesis violations
        assert!(lemma33_f(3, 10, 0.0).is_err());
        assert!(lemma33_f(5, 10, 4.5).is_err());
        assert!(lemma33_f(5, 10, -0.1).is_err());
    }
}
