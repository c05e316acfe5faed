//! The radial flattening identity: for a positive twice-differentiable `ν`,
//! the radial Laplacian term becomes `-d²/dρ² + ν''/ν` after the substitution
//! `η = ν u`. This computes the effective potential `ν''/ν` from samples.

use super::HalflineError;

/// `ν''/ν` on a uniform grid from samples of `ν`, using 4th-order central
/// differences with one-sided stencils at the ends.
pub fn flatten_radial(grid: &[f64], nu: &[f64]) -> Result<Vec<f64>, HalflineError> {
    let n = grid.len();
    if n != nu.len() {
        return Err(HalflineError::InvalidInput(format!(
            "grid has {n} points but nu has {}",
            nu.len()
        )));
    }
    if n < 6 {
        return Err(HalflineError::InvalidInput(
            "flatten_radial needs at least six grid points".into(),
        ));
    }
    let h = grid[1] - grid[0];
    if h <= 0.0 {
        return Err(HalflineError::InvalidInput("grid must be increasing".into()));
    }
    for w in grid.windows(2) {
        if ((w[1] - w[0]) - h).abs() > 1e-9 * h {
            return Err(HalflineError::InvalidInput("grid must be uniform".into()));
        }
    }
    if let Some(&bad) = nu.iter().find(|&&v| !(v > 0.0)) {
        return Err(HalflineError::Domain(format!(
            "nu must be positive on the grid, found {bad}"
        )));
    }
    // 4th-order second-derivative stencils (interior and one-sided).
    const FWD0: [f64; 6] = [15.0 / 4.0, -77.0 / 6.0, 107.0 / 6.0, -13.0, 61.0 / 12.0, -5.0 / 6.0];
    const FWD1: [f64; 6] = [5.0 / 6.0, -5.0 / 4.0, -1.0 / 3.0, 7.0 / 6.0, -1.0 / 2.0, 1.0 / 12.0];
    let h2 = h * h;
    let second = |i: usize| -> f64 {
        if i >= 2 && i + 2 < n {
            (-nu[i - 2] + 16.0 * nu[i - 1] - 30.0 * nu[i] + 16.0 * nu[i + 1] - nu[i + 2])
                / (12.0 * h2)
        } else if i == 0 {
            FWD0.iter().enumerate().map(|(k, c)| c * nu[k]).sum::<f64>() / h2
        } else if i == 1 {
            FWD1.iter().enumerate().map(|(k, c)| c * nu[k]).sum::<f64>() / h2
        } else if i == n - 1 {
            FWD0.iter().enumerate().map(|(k, c)| c * nu[n - 1 - k]).sum::<f64>() / h2
        } else {
            // i == n - 2
            FWD1.iter().enumerate().map(|(k, c)| c * nu[n - 1 - k]).sum::<f64>() / h2
        }
    };
    Ok((0..n).map(|i| second(i) / nu[i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uniform(a: f64, b: f64, n: usize) -> Vec<f64> {
        (0..n).map(|k| a + (b - a) * k as f64 / (n - 1) as f64).collect()
    }

    #[test]
    fn linear_nu_gives_zero() {
        // ν(ρ) = ρ: the three-dimensional flat case.
        let grid = uniform(0.5, 3.0, 64);
        let nu: Vec<f64> = grid.clone();
        let eff = flatten_radial(&grid, &nu).unwrap();
        for v in eff {
            assert!(v.abs() < 1e-10);
        }
    }

    #[test]
    fn sqrt_nu_gives_attractive_calogero() {
        // ν(ρ) = √ρ yields -1/(4ρ²).
        let grid = uniform(1.0, 2.0, 200);
        let nu: Vec<f64> = grid.iter().map(|r| r.sqrt()).collect();
        let eff = flatten_radial(&grid, &nu).unwrap();
        for (r, v) in grid.iter().zip(eff) {
            let exact = -1.0 / (4.0 * r * r);
            assert!((v - exact).abs() < 1e-8, "rho={r}: {v} vs {exact}");
        }
    }

    #[test]
    fn quadratic_nu_gives_repulsive_term() {
        // ν(ρ) = ρ² yields 2/ρ²; exact for any consistent stencil.
        let grid = uniform(0.5, 1.5, 32);
        let nu: Vec<f64> = grid.iter().map(|r| r * r).collect();
        let eff = flatten_radial(&grid, &nu).unwrap();
        for (r, v) in grid.iter().zip(eff) {
            assert!((v - 2.0 / (r * r)).abs() < 1e-9);
        }
    }

    #[test]
    fn rejects_nonpositive_nu_and_bad_grids() {
        let grid = uniform(0.0, 1.0, 16);
        let nu: Vec<f64> = grid.clone(); // nu[0] = 0
        assert!(flatten_radial(&grid, &nu).is_err());
        let mut bad = uniform(1.0, 2.0, 16);
        bad[3] += 0.01;
        let nu: Vec<f64> = bad.iter().map(|r| r.sqrt()).collect();
        assert!(flatten_radial(&bad, &nu).is_err());
    }
}
