//! Least-squares extraction of the asymptotic data `(c₂, C₀, C₁)` from an
//! evaluatable potential.

use super::{AsymptoticData, HalflineError};

/// Sample grids used for the two asymptotic fits.
#[derive(Debug, Clone)]
pub struct FitWindows {
    /// Near-origin sample points (log-spaced by default).
    pub near: Vec<f64>,
    /// Far-field sample points.
    pub far: Vec<f64>,
    /// Acceptable rms residual of the near fit of `ρ²V`.
    pub near_threshold: f64,
    /// Acceptable rms residual of the far fit of `V`.
    pub far_threshold: f64,
}

impl FitWindows {
    /// Log grid `[1e-6, 1e-2]` near the origin and `[cutoff/3, cutoff]` in the
    /// far field.
    pub fn default_for(cutoff: f64) -> Self {
        let near = (0..40)
            .map(|k| 1e-6 * 10f64.powf(4.0 * k as f64 / 39.0))
            .collect();
        let far = (0..40)
            .map(|k| cutoff / 3.0 + (cutoff - cutoff / 3.0) * k as f64 / 39.0)
            .collect();
        FitWindows { near, far, near_threshold: 1e-3, far_threshold: 1e-3 }
    }
}

/// Classification result: the fitted asymptotic data plus fit residuals
/// (relative rms) for both windows.
#[derive(Debug, Clone, Copy)]
pub struct Classification {
    pub data: AsymptoticData,
    pub near_residual: f64,
    pub far_residual: f64,
}

/// Fit `ρ²V ≈ c₂ + aρ + bρ²` near the origin and `V ≈ C₀ + C₁/ρ + C₂/ρ²` in
/// the far window, returning the asymptotic data when both residuals pass.
pub fn classify(
    v: &dyn Fn(f64) -> f64,
    windows: &FitWindows,
) -> Result<Classification, HalflineError> {
    if windows.near.len() < 4 || windows.far.len() < 4 {
        return Err(HalflineError::InvalidInput(
            "classification windows need at least four points".into(),
        ));
    }
    let near_y: Vec<f64> = windows.near.iter().map(|&r| r * r * v(r)).collect();
    if near_y.iter().any(|y| !y.is_finite()) {
        return Err(HalflineError::InvalidInput(
            "potential not finite on the near-origin window".into(),
        ));
    }
    let (near_fit, near_residual) = quad_fit(&windows.near, &near_y);
    let c2 = near_fit[0];

    let far_x: Vec<f64> = windows.far.iter().map(|&r| 1.0 / r).collect();
    let far_y: Vec<f64> = windows.far.iter().map(|&r| v(r)).collect();
    if far_y.iter().any(|y| !y.is_finite()) {
        return Err(HalflineError::InvalidInput(
            "potential not finite on the far window".into(),
        ));
    }
    let (far_fit, far_residual) = quad_fit(&far_x, &far_y);
    let (c0, c1) = (far_fit[0], far_fit[1]);

    if near_residual > windows.near_threshold {
        return Err(HalflineError::ClassificationFailed(format!(
            "near-origin fit residual {near_residual:e} exceeds {:e}: rho^2 V is not c2 + O(rho)",
            windows.near_threshold
        )));
    }
    if far_residual > windows.far_threshold {
        return Err(HalflineError::ClassificationFailed(format!(
            "far-field fit residual {far_residual:e} exceeds {:e}: V is not C0 + C1/rho + o(1/rho)",
            windows.far_threshold
        )));
    }
    let data = AsymptoticData::from_c2(c2, c0, c1)?;
    Ok(Classification { data, near_residual, far_residual })
}

/// Least-squares fit of `y ≈ p0 + p1 x + p2 x²`; returns the coefficients and
/// the rms residual relative to the data scale.
fn quad_fit(x: &[f64], y: &[f64]) -> ([f64; 3], f64) {
    // Normal equations for the 3-parameter fit; scale x to [0,1] first for
    // conditioning.
    let xmax = x.iter().cloned().fold(f64::MIN, f64::max).max(f64::MIN_POSITIVE);
    let n = x.len() as f64;
    let mut s = [0.0f64; 5];
    let mut t = [0.0f64; 3];
    for (&xi, &yi) in x.iter().zip(y) {
        let u = xi / xmax;
        let mut p = 1.0;
        for k in 0..5 {
            s[k] += p;
            if k < 3 {
                t[k] += yi * p;
            }
            p *= u;
        }
    }
    let a = [[s[0], s[1], s[2]], [s[1], s[2], s[3]], [s[2], s[3], s[4]]];
    let sol = solve3(a, t);
    let coeffs = [sol[0], sol[1] / xmax, sol[2] / (xmax * xmax)];
    let scale = y.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(1.0);
    let mut rss = 0.0;
    for (&xi, &yi) in x.iter().zip(y) {
        let fit = coeffs[0] + coeffs[1] * xi + coeffs[2] * xi * xi;
        rss += (yi - fit).powi(2);
    }
    (coeffs, (rss / n).sqrt() / scale)
}

fn solve3(mut a: [[f64; 3]; 3], mut b: [f64; 3]) -> [f64; 3] {
    for col in 0..3 {
        let piv = (col..3).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs())).unwrap();
        a.swap(col, piv);
        b.swap(col, piv);
        let d = a[col][col];
        for k in col..3 {
            a[col][k] /= d;
        }
        b[col] /= d;
        for row in 0..3 {
            if row != col && a[row][col] != 0.0 {
                let f = a[row][col];
                for k in col..3 {
                    a[row][k] -= f * a[col][k];
                }
                b[row] -= f * b[col];
            }
        }
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pure_calogero() {
        let w = FitWindows::default_for(60.0);
        let c = classify(&|r: f64| 1.0 / (r * r), &w).unwrap();
        assert!((c.data.c2 - 1.0).abs() < 1e-9);
        assert!(c.data.c0.abs() < 1e-9);
        assert!(c.data.c1.abs() < 1e-9);
    }

    #[test]
    fn coulomb_with_centrifugal() {
        let w = FitWindows::default_for(60.0);
        let c = classify(&|r: f64| -2.0 / r + 2.0 / (r * r) + 1.0, &w).unwrap();
        assert!((c.data.c2 - 2.0).abs() < 1e-8);
        assert!((c.data.c0 - 1.0).abs() < 1e-8);
        assert!((c.data.c1 + 2.0).abs() < 1e-6);
        assert!((c.data.m - 1.5).abs() < 1e-8);
    }

    #[test]
    fn rejects_potentials_outside_class() {
        let w = FitWindows::default_for(60.0);
        // stronger singularity than 1/rho^2
        assert!(classify(&|r: f64| 1.0 / (r * r * r), &w).is_err());
        // growing tail
        assert!(classify(&|r: f64| r.sqrt(), &w).is_err());
    }
}
