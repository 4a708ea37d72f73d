//! Small dense matrices (quotient matrices are the main client) with exact
//! characteristic-polynomial evaluation and a largest-real-eigenvalue solver.

use crate::error::{Error, Result};

/// Dense real matrix of small order, not necessarily symmetric.
#[derive(Clone, Debug, PartialEq)]
pub struct SmallMatrix {
    k: usize,
    a: Vec<f64>,
}

impl SmallMatrix {
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<SmallMatrix> {
        let k = rows.len();
        let mut a = Vec::with_capacity(k * k);
        for row in rows {
            if row.len() != k {
                return Err(Error::InvalidArgument(format!(
                    "row length {} in a {k}x{k} matrix",
                    row.len()
                )));
            }
            for &x in row {
                if !x.is_finite() {
                    return Err(Error::InvalidArgument("non-finite matrix entry".into()));
                }
                a.push(x);
            }
        }
        Ok(SmallMatrix { k, a })
    }

    pub fn order(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.k + j]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.k)
            .map(|i| self.a[i * self.k..(i + 1) * self.k].to_vec())
            .collect()
    }

    fn max_abs_row_sum(&self) -> f64 {
        (0..self.k)
            .map(|i| {
                self.a[i * self.k..(i + 1) * self.k]
                    .iter()
                    .map(|x| x.abs())
                    .sum::<f64>()
            })
            .fold(0.0, f64::max)
    }

    /// Monic characteristic polynomial coefficients `c_0 .. c_{k-1}` of
    /// `det(xI - M) = x^k + c_{k-1} x^{k-1} + ... + c_0`, by the
    /// Faddeev-LeVerrier recurrence.
    fn char_poly_coeffs(&self) -> Vec<f64> {
        let k = self.k;
        let mut coeffs = vec![0.0; k];
        // N = current power-like matrix, c accumulates coefficients
        let m = self.a.clone();
        let mut n_mat = self.a.clone();
        for step in 1..=k {
            let trace: f64 = (0..k).map(|i| n_mat[i * k + i]).sum();
            let c = -trace / step as f64;
            coeffs[k - step] = c;
            if step == k {
                break;
            }
            // N <- M * (N + c I)
            let mut shifted = n_mat.clone();
            for i in 0..k {
                shifted[i * k + i] += c;
            }
            for i in 0..k {
                for j in 0..k {
                    let mut s = 0.0;
                    for l in 0..k {
                        s += m[i * k + l] * shifted[l * k + j];
                    }
                    n_mat[i * k + j] = s;
                }
            }
        }
        coeffs
    }
}

/// Evaluate `det(xI - M)`: exact cofactor expansion for `k <= 4`, LU with
/// partial pivoting for larger orders.
pub fn char_poly_eval(m: &SmallMatrix, x: f64) -> f64 {
    let k = m.order();
    if k == 0 {
        return 1.0;
    }
    let mut b = vec![0.0; k * k];
    for i in 0..k {
        for j in 0..k {
            b[i * k + j] = if i == j { x - m.get(i, j) } else { -m.get(i, j) };
        }
    }
    if k <= 4 {
        det_cofactor(&b, k)
    } else {
        det_lu(&mut b, k)
    }
}

fn det_cofactor(b: &[f64], k: usize) -> f64 {
    match k {
        1 => b[0],
        2 => b[0] * b[3] - b[1] * b[2],
        _ => {
            // expand along the first row; build minors explicitly
            let mut det = 0.0;
            for col in 0..k {
                if b[col] == 0.0 {
                    continue;
                }
                let mut minor = Vec::with_capacity((k - 1) * (k - 1));
                for i in 1..k {
                    for j in 0..k {
                        if j != col {
                            minor.push(b[i * k + j]);
                        }
                    }
                }
                let sign = if col % 2 == 0 { 1.0 } else { -1.0 };
                det += sign * b[col] * det_cofactor(&minor, k - 1);
            }
            det
        }
    }
}

fn det_lu(b: &mut [f64], k: usize) -> f64 {
    let mut det = 1.0;
    for col in 0..k {
        let mut piv = col;
        for r in (col + 1)..k {
            if b[r * k + col].abs() > b[piv * k + col].abs() {
                piv = r;
            }
        }
        if b[piv * k + col] == 0.0 {
            return 0.0;
        }
        if piv != col {
            for j in 0..k {
                b.swap(col * k + j, piv * k + j);
            }
            det = -det;
        }
        let d = b[col * k + col];
        det *= d;
        for r in (col + 1)..k {
            let f = b[r * k + col] / d;
            if f == 0.0 {
                continue;
            }
            for j in col..k {
                b[r * k + j] -= f * b[col * k + j];
            }
        }
    }
    det
}

fn horner(coeffs: &[f64], x: f64) -> (f64, f64) {
    // returns (p(x), p'(x)) for monic p with low-order coeffs in `coeffs`
    let mut p = 1.0;
    let mut dp = 0.0;
    for &c in coeffs.iter().rev() {
        dp = dp * x + p;
        p = p * x + c;
    }
    (p, dp)
}

/// Largest real eigenvalue of `M`.
///
/// Callers pass quotient matrices of nonnegative symmetric matrices, whose
/// dominant eigenvalue is real and lies in `[0, max row sum]`. For `k <= 4`
/// the root is isolated on that interval by a sign scan plus bisection and
/// polished with Newton steps; larger orders use power iteration on the
/// shifted companion matrix, again polished with Newton.
pub fn eig_max_small(m: &SmallMatrix) -> Result<f64> {
    let k = m.order();
    if k == 0 {
        return Err(Error::InvalidArgument("empty matrix".into()));
    }
    if k == 1 {
        return Ok(m.get(0, 0));
    }
    let coeffs = m.char_poly_coeffs();
    let radius = m.max_abs_row_sum();
    let scale = radius.max(1.0);

    if k <= 4 {
        root_isolate(&coeffs, radius, scale)
    } else {
        companion_power(&coeffs, radius, scale)
    }
}

fn newton_polish(coeffs: &[f64], mut x: f64, scale: f64) -> f64 {
    for _ in 0..60 {
        let (p, dp) = horner(coeffs, x);
        if dp == 0.0 {
            break;
        }
        let step = p / dp;
        x -= step;
        if step.abs() <= 1e-15 * scale {
            break;
        }
    }
    x
}

fn root_isolate(coeffs: &[f64], radius: f64, scale: f64) -> Result<f64> {
    const GRID: usize = 4096;
    let hi = radius;
    let (p_hi, _) = horner(coeffs, hi);
    if p_hi == 0.0 {
        return Ok(hi);
    }
    let mut upper = hi;
    let mut p_upper = p_hi;
    for j in 1..=GRID {
        let x = hi - hi * j as f64 / GRID as f64;
        let (p, _) = horner(coeffs, x);
        if p == 0.0 {
            return Ok(newton_polish(coeffs, x, scale));
        }
        if p.signum() != p_upper.signum() {
            // bisect [x, upper]
            let (mut lo, mut hi_b) = (x, upper);
            let mut p_lo = p;
            for _ in 0..100 {
                let mid = 0.5 * (lo + hi_b);
                let (pm, _) = horner(coeffs, mid);
                if pm == 0.0 {
                    lo = mid;
                    break;
                }
                if pm.signum() == p_lo.signum() {
                    lo = mid;
                    p_lo = pm;
                } else {
                    hi_b = mid;
                }
                if (hi_b - lo) <= 1e-14 * scale {
                    break;
                }
            }
            return Ok(newton_polish(coeffs, 0.5 * (lo + hi_b), scale));
        }
        upper = x;
        p_upper = p;
    }
    // no sign change on [0, radius]: fall back to damped Newton from above
    let x = newton_polish(coeffs, radius + 1.0, scale);
    let (p, _) = horner(coeffs, x);
    if x.is_finite() && p.abs() <= 1e-7 * scale.powi(coeffs.len() as i32) {
        return Ok(x);
    }
    Err(Error::Numerical {
        what: "eig_max_small",
        reason: "no real eigenvalue found in [0, max row sum]".into(),
    })
}

fn companion_power(coeffs: &[f64], radius: f64, scale: f64) -> Result<f64> {
    let k = coeffs.len();
    // shift by sigma so the target root is strictly dominant in modulus:
    // q(y) = p(y - sigma) has all real roots in [0, 2 sigma] for the
    // spectra we care about.
    let sigma = radius + 1.0;
    let mut q = coeffs.to_vec();
    q.push(1.0); // full coefficient vector, low order first
                 // Taylor shift: repeatedly divide by (y - (-sigma)) synthetically
    for i in 0..k {
        for j in (i..k).rev() {
            let next = q[j + 1];
            q[j] += -sigma * next;
        }
    }
    let monic: Vec<f64> = q[..k].to_vec();
    // power iteration on the companion matrix of y^k + monic coefficients
    let mut v = vec![1.0; k];
    let mut est = 0.0;
    for _ in 0..20_000 {
        // w = C v with C the companion matrix (last column = -monic)
        let mut w = vec![0.0; k];
        let last = v[k - 1];
        w[0] = -monic[0] * last;
        for i in 1..k {
            w[i] = v[i - 1] - monic[i] * last;
        }
        let norm = w.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::Numerical {
                what: "eig_max_small",
                reason: "companion power iteration degenerated".into(),
            });
        }
        for x in &mut w {
            *x /= norm;
        }
        let new_est = norm; // dominant |eigenvalue| estimate under max norm
        let done = (new_est - est).abs() <= 1e-13 * sigma.max(1.0);
        v = w;
        est = new_est;
        if done {
            break;
        }
    }
    let x = newton_polish(coeffs, est - sigma, scale);
    let (p, _) = horner(coeffs, x);
    if x.is_finite() && p.abs() <= 1e-6 * scale.powi(k as i32) {
        Ok(x)
    } else {
        Err(Error::Numerical {
            what: "eig_max_small",
            reason: "power iteration failed to converge to a real root".into(),
        })
    }
}
