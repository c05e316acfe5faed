//! The radial potential of the linearised channel,
//! `V(r) = 1/sinh²r + 2/r² - 2 coth(r)/r + coth²r`,
//! with a Laurent-series branch near the origin where the closed form loses
//! all digits to cancellation.

use super::YmhError;

/// Switch radius between the series and closed-form branches.
pub(crate) const SERIES_SWITCH: f64 = 1e-3;

// 2/r² - 1/3 + 8r²/45 - 8r⁴/315 + 16r⁶/4725 - 8r⁸/18711 + ...
const SERIES: [f64; 5] = [
    -1.0 / 3.0,
    8.0 / 45.0,
    -8.0 / 315.0,
    16.0 / 4725.0,
    -8.0 / 18711.0,
];

/// `V(r)` for `r > 0`.
pub fn v_ymh(r: f64) -> Result<f64, YmhError> {
    if !(r > 0.0) {
        return Err(YmhError::Domain(format!("v_ymh requires r > 0, got {r}")));
    }
    if r < SERIES_SWITCH {
        let r2 = r * r;
        let mut acc = 0.0;
        for c in SERIES.iter().rev() {
            acc = acc * r2 + c;
        }
        return Ok(2.0 / r2 + acc);
    }
    // coth and 1/sinh² through tanh stay finite for every representable r
    let t = r.tanh();
    let coth = 1.0 / t;
    let inv_sinh2 = coth * coth - 1.0;
    Ok(inv_sinh2 + 2.0 / (r * r) - 2.0 * coth / r + coth * coth)
}

/// `dV/dr`, used by the fluctuation residual oracle.
pub fn v_ymh_derivative(r: f64) -> Result<f64, YmhError> {
    if !(r > 0.0) {
        return Err(YmhError::Domain(format!(
            "v_ymh_derivative requires r > 0, got {r}"
        )));
    }
    if r < SERIES_SWITCH {
        let r2 = r * r;
        let mut acc = 0.0;
        for (k, c) in SERIES.iter().enumerate().skip(1).rev() {
            acc = acc * r2 + 2.0 * k as f64 * c;
        }
        return Ok(-4.0 / (r2 * r) + r * acc);
    }
    let t = r.tanh();
    let coth = 1.0 / t;
    let inv_sinh2 = coth * coth - 1.0;
    // d/dr [1/sinh²] = -2 coth/sinh², d/dr[coth] = -1/sinh²
    Ok(-2.0 * coth * inv_sinh2 - 4.0 / (r * r * r)
        + 2.0 * inv_sinh2 / r
        + 2.0 * coth / (r * r)
        - 2.0 * coth * inv_sinh2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn domain_error() {
        assert!(v_ymh(0.0).is_err());
        assert!(v_ymh(-1.0).is_err());
    }

    #[test]
    fn calogero_coefficient_at_origin() {
        // r² V(r) -> 2 as r -> 0
        for &r in &[1e-6, 1e-5, 1e-4] {
            let v = v_ymh(r).unwrap();
            assert!((r * r * v - 2.0).abs() < 1e-6, "r={r}");
        }
    }

    #[test]
    fn coulomb_tail() {
        // |V(20) - (1 - 2/20 + 2/400)| < 1e-3 (in fact exponentially small)
        let v = v_ymh(20.0).unwrap();
        assert!((v - (1.0 - 2.0 / 20.0 + 2.0 / 400.0)).abs() < 1e-3);
        // frozen 50-digit oracle values of the defining closed form
        assert!((v_ymh(20.0).unwrap() - 0.905_000_000_000_000_033).abs() < 1e-14);
        assert!((v_ymh(1.0).unwrap() - 1.822_052_750_933_958_326).abs() < 2e-15);
    }

    #[test]
    fn series_branch_consistency() {
        // The two branches agree at the switch point to 1e-12 relative.
        let below = v_ymh(SERIES_SWITCH * (1.0 - 1e-9)).unwrap();
        let above = v_ymh(SERIES_SWITCH * (1.0 + 1e-9)).unwrap();
        assert!(
            (below - above).abs() < 1e-12 * below.abs(),
            "below={below}, above={above}"
        );
        // frozen oracle at the switch point itself
        assert!((v_ymh(1e-3).unwrap() - 1_999_999.666_666_844_444_4).abs() < 1e-7);
    }

    #[test]
    fn derivative_matches_central_difference() {
        for &r in &[5e-4, 2e-3, 0.1, 1.0, 7.0, 25.0] {
            let h = (1e-6 * r).max(1e-9);
            let fd = (v_ymh(r + h).unwrap() - v_ymh(r - h).unwrap()) / (2.0 * h);
            let an = v_ymh_derivative(r).unwrap();
            assert!(
                (fd - an).abs() < 1e-5 * an.abs().max(1.0),
                "r={r}: fd={fd} analytic={an}"
            );
        }
    }

    #[test]
    fn no_overflow_at_huge_radius() {
        let v = v_ymh(800.0).unwrap();
        assert!((v - (1.0 - 2.0 / 800.0 + 2.0 / 640000.0)).abs() < 1e-12);
    }
}
