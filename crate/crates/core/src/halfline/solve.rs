//! Finite-difference Sturm-Liouville solver on `(0, cutoff]`.
//!
//! The operator `-d²/dρ² + V` is discretised on a uniform grid with a
//! Dirichlet condition at the cutoff. At the singular origin the Calogero
//! part `c₂/ρ²` of the potential is discretised consistently with the
//! selected branch: its diagonal values are the discrete second difference of
//! `ρ^{1/2+m}` (with the `ρ=0` node value zero), so the branch solves the
//! discrete zero-energy problem exactly and in particular the solution
//! matches `ρ^{1/2+m}` scaling between the first two nodes. Away from the
//! origin this reduces to ordinary sampling of `c₂/ρ²` up to `O(h²)`. Without
//! this treatment the limit-circle case `m = 0` converges only
//! logarithmically; with it the scheme is second order uniformly in `m`,
//! which Richardson extrapolation then improves.

use super::{BoundaryRule, HalflineError, OriginCondition, PotentialProfile, SpectrumResult};
use crate::linalg;

/// Lowest `n_eigs` eigenvalues of `-d²/dρ² + V` with the given boundary rule,
/// via Sturm-sequence bisection and Richardson extrapolation over two grid
/// refinements (`grid_size`, `2*grid_size`, `4*grid_size` intervals).
///
/// Eigenvalues too close to the essential spectrum for the cutoff are
/// returned with `reliable = false`, never silently.
pub fn solve_fd(
    profile: &PotentialProfile,
    rule: &BoundaryRule,
    cutoff: f64,
    grid_size: usize,
    n_eigs: usize,
) -> Result<SpectrumResult, HalflineError> {
    if grid_size < 200 {
        return Err(HalflineError::InvalidInput(format!(
            "grid_size must be at least 200, got {grid_size}"
        )));
    }
    if !(cutoff > 0.0) || n_eigs == 0 {
        return Err(HalflineError::InvalidInput(
            "cutoff must be positive and n_eigs nonzero".into(),
        ));
    }
    let rule_c2 = rule.m * rule.m - 0.25;
    if (rule_c2 - profile.asymptotics.c2).abs() > 1e-6 * (1.0 + profile.asymptotics.c2.abs()) {
        return Err(HalflineError::InvalidInput(format!(
            "boundary rule m = {} implies c2 = {rule_c2}, but the profile has c2 = {}",
            rule.m, profile.asymptotics.c2
        )));
    }
    let levels = [grid_size, 2 * grid_size, 4 * grid_size];
    let mut eigs = Vec::with_capacity(3);
    for &n in &levels {
        eigs.push(fd_eigenvalues(profile, rule, cutoff, n, n_eigs)?);
    }
    // cutoff-sensitivity probe at the coarse grid density
    let probe_cutoff = 0.75 * cutoff;
    let probe_n = (grid_size as f64 * 0.75) as usize;
    let probe = fd_eigenvalues(profile, rule, probe_cutoff, probe_n.max(200), n_eigs)?;

    let c0 = profile.asymptotics.c0;
    let mut eigenvalues = Vec::with_capacity(n_eigs);
    let mut estimated_error = Vec::with_capacity(n_eigs);
    let mut reliable = Vec::with_capacity(n_eigs);
    for k in 0..n_eigs {
        let (l0, l1, l2) = (eigs[0][k], eigs[1][k], eigs[2][k]);
        let d1 = l0 - l1;
        let d2 = l1 - l2;
        // observed order; falls back to the theoretical 2 when the
        // differences are too small or irregular to measure
        let p = if d2.abs() > 1e3 * f64::EPSILON * l2.abs().max(1.0) && d1 / d2 > 1.2 {
            (d1 / d2).log2().clamp(0.8, 4.0)
        } else {
            2.0
        };
        let corr = d2 / (2f64.powf(p) - 1.0);
        let extrap = l2 - corr;
        let err = corr.abs().max(f64::EPSILON * l2.abs().max(1.0));
        let sensitivity = (l1 - probe[k]).abs();
        // Unreliable when the eigenvalue sits within the discretisation /
        // truncation scale of the essential-spectrum bottom.
        let disc_scale = (10.0 * err).max(5.0 * sensitivity);
        eigenvalues.push(extrap);
        estimated_error.push(err);
        reliable.push(extrap < c0 - disc_scale);
    }
    Ok(SpectrumResult {
        eigenvalues,
        method: "fd-sturm-richardson".into(),
        dimension: levels[2],
        domain_cutoff: cutoff,
        estimated_error,
        reliable,
    })
}

/// One discretisation level: lowest `n_eigs` eigenvalues on `n` intervals.
fn fd_eigenvalues(
    profile: &PotentialProfile,
    rule: &BoundaryRule,
    cutoff: f64,
    n: usize,
    n_eigs: usize,
) -> Result<Vec<f64>, HalflineError> {
    let h = cutoff / n as f64;
    let unknowns = n - 1; // nodes i = 1..n-1; rho_n = cutoff is Dirichlet
    if n_eigs > unknowns {
        return Err(HalflineError::InvalidInput(format!(
            "requested {n_eigs} eigenvalues from {unknowns} interior nodes"
        )));
    }
    let exponent = rule.small_rho_exponent();
    let c2 = profile.asymptotics.c2;
    let inv_h2 = 1.0 / (h * h);
    let mut diag = Vec::with_capacity(unknowns);
    for i in 1..n {
        let rho = i as f64 * h;
        let sing = match rule.origin {
            OriginCondition::ScaledBranch => {
                // discrete (D² η)/η on η = ρ^{1/2+m}; the h^{1/2+m} factors cancel
                let im = (i as f64).powf(exponent);
                let lo = ((i - 1) as f64).powf(exponent);
                let hi = ((i + 1) as f64).powf(exponent);
                if c2 == 0.0 {
                    0.0
                } else {
                    // scale by c2/(m²-1/4) == 1 in exact arithmetic; keep the
                    // plain discrete ratio, which equals the consistent
                    // discretisation of c2/ρ² for the profile's own m
                    (lo - 2.0 * im + hi) * inv_h2 / im
                }
            }
            OriginCondition::Dirichlet => c2 / (rho * rho),
        };
        diag.push(2.0 * inv_h2 + sing + profile.w_remainder(rho));
    }
    let offdiag = vec![-inv_h2; unknowns - 1];
    // Absolute tolerance on the eigenvalue scale, not the matrix-norm scale
    // (the norm grows like 1/h² and would drown the Richardson differences).
    let tol = 1e-13 * (1.0 + profile.asymptotics.c0.abs());
    let eigs = linalg::tridiag_eig_bisect(&diag, &offdiag, 0..n_eigs, Some(tol))?;
    Ok(eigs)
}

/// Count of discrete eigenvalues strictly below `threshold` at a single grid
/// level (no refinement); used for essential-spectrum counting experiments.
pub(crate) fn fd_count_below(
    profile: &PotentialProfile,
    rule: &BoundaryRule,
    cutoff: f64,
    n: usize,
    threshold: f64,
) -> Result<usize, HalflineError> {
    let h = cutoff / n as f64;
    let exponent = rule.small_rho_exponent();
    let c2 = profile.asymptotics.c2;
    let inv_h2 = 1.0 / (h * h);
    let mut diag = Vec::with_capacity(n - 1);
    for i in 1..n {
        let rho = i as f64 * h;
        let sing = match rule.origin {
            OriginCondition::ScaledBranch => {
                let im = (i as f64).powf(exponent);
                let lo = ((i - 1) as f64).powf(exponent);
                let hi = ((i + 1) as f64).powf(exponent);
                if c2 == 0.0 { 0.0 } else { (lo - 2.0 * im + hi) * inv_h2 / im }
            }
            OriginCondition::Dirichlet => c2 / (rho * rho),
        };
        diag.push(2.0 * inv_h2 + sing + profile.w_remainder(rho));
    }
    let offdiag = vec![-inv_h2; n - 2];
    Ok(linalg::sturm_count_below(&diag, &offdiag, threshold))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::halfline::AsymptoticData;

    #[test]
    fn particle_in_a_box() {
        // V = 0, Dirichlet at both ends, cutoff = π: lowest eigenvalue 1.
        let asym = AsymptoticData::from_c2(0.0, 0.0, 0.0).unwrap();
        let p = PotentialProfile::with_cutoff("free box", asym, std::f64::consts::PI, |_| 0.0)
            .unwrap();
        // m = 1/2 makes the selected branch η ~ ρ, i.e. a plain Dirichlet wall.
        let rule = BoundaryRule::for_m(0.5);
        let res = solve_fd(&p, &rule, std::f64::consts::PI, 400, 3).unwrap();
        for (k, lam) in res.eigenvalues.iter().enumerate() {
            let exact = ((k + 1) * (k + 1)) as f64;
            assert!(
                (lam - exact).abs() < 1e-7 * exact,
                "k={k}: {lam} vs {exact}"
            );
        }
    }

    #[test]
    fn bessel_limit_circle_branch() {
        // V = -1/(4ρ²) on (0,1]: with the √ρ branch the eigenvalues are
        // squares of the zeros of J₀ (frozen from the Bessel-zero oracle).
        let asym = AsymptoticData::from_c2(-0.25, 0.0, 0.0).unwrap();
        let p = PotentialProfile::with_cutoff("critical Calogero box", asym, 60.0, |r| {
            -0.25 / (r * r)
        })
        .unwrap();
        let rule = BoundaryRule::for_m(0.0);
        let res = solve_fd(&p, &rule, 1.0, 800, 2).unwrap();
        let exact = [5.783_185_962_946_785, 30.471_262_343_662_087];
        for (lam, ex) in res.eigenvalues.iter().zip(exact) {
            assert!((lam - ex).abs() < 1e-6 * ex, "{lam} vs {ex}");
        }
    }

    #[test]
    fn dirichlet_variant_is_worse_for_limit_circle() {
        // The sensitivity flag exists because the plain Dirichlet scheme
        // misses the √ρ branch badly; document the gap.
        let asym = AsymptoticData::from_c2(-0.25, 0.0, 0.0).unwrap();
        let p = PotentialProfile::with_cutoff("critical Calogero box", asym, 60.0, |r| {
            -0.25 / (r * r)
        })
        .unwrap();
        let scaled = solve_fd(&p, &BoundaryRule::for_m(0.0), 1.0, 400, 1).unwrap();
        let dirichlet = solve_fd(
            &p,
            &BoundaryRule { m: 0.0, origin: OriginCondition::Dirichlet },
            1.0,
            400,
            1,
        )
        .unwrap();
        let exact = 5.783_185_962_946_785;
        assert!((scaled.eigenvalues[0] - exact).abs() < 1e-6);
        assert!((dirichlet.eigenvalues[0] - exact).abs() > 0.1);
    }

    #[test]
    fn grid_size_validation() {
        let asym = AsymptoticData::from_c2(0.0, 0.0, 0.0).unwrap();
        let p = PotentialProfile::with_cutoff("free", asym, 1.0, |_| 0.0).unwrap();
        assert!(solve_fd(&p, &BoundaryRule::for_m(0.5), 1.0, 100, 1).is_err());
    }
}
