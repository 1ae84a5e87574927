//! Equilibrium distance from the contact of rigid probability-density
//! surfaces.
//!
//! The ground-state atom A is a sphere of radius `s` about its nucleus. The
//! excited atom B, a distance `R` away on the z axis, is bounded by the
//! lobe `r(θ) = L sin²θ` (x/y states) or `r(θ) = L cos²θ` (z states), with
//! `θ` measured from the internuclear axis and the lobe facing A. Both
//! surfaces are symmetric about the axis, so the contact problem lives in
//! one meridian plane. `R₀` is the distance at which the lobe just touches
//! the sphere.

use serde::Serialize;

use crate::optimize::{bisect, scan_minimize, Minimum};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LobeKind {
    /// `L sin²θ`, for the x/y states.
    Perpendicular,
    /// `L cos²θ`, for the z state.
    Axial,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ContactGeometry {
    /// Equilibrium internuclear distance in Bohr.
    pub r0: f64,
    /// Polar angle of the touching point on the lobe, degrees.
    pub theta_contact_deg: f64,
    pub kind: LobeKind,
    pub sphere_radius: f64,
    pub lobe_amplitude: f64,
}

pub fn lobe_radius(kind: LobeKind, amplitude: f64, theta: f64) -> f64 {
    match kind {
        LobeKind::Perpendicular => amplitude * theta.sin().powi(2),
        LobeKind::Axial => amplitude * theta.cos().powi(2),
    }
}

const THETA_SAMPLES: usize = 721;
const THETA_TOL: f64 = 1e-10;
const R_TOL: f64 = 1e-12;

/// Distance from nucleus A to the lobe point at polar angle `theta`.
pub fn lobe_point_distance(kind: LobeKind, amplitude: f64, r: f64, theta: f64) -> f64 {
    let rho = lobe_radius(kind, amplitude, theta);
    let x = rho * theta.sin();
    let z = r - rho * theta.cos();
    x.hypot(z)
}

/// Closest approach of the lobe of B to nucleus A at separation `r`;
/// `x` of the result is the polar angle in radians.
pub fn closest_approach(kind: LobeKind, amplitude: f64, r: f64) -> Minimum {
    scan_minimize(
        |theta| lobe_point_distance(kind, amplitude, r, theta),
        0.0,
        std::f64::consts::FRAC_PI_2,
        THETA_SAMPLES,
        THETA_TOL,
    )
}

/// Solves for the separation at which the lobe touches the sphere.
pub fn contact_distance(
    sphere_radius: f64,
    lobe_amplitude: f64,
    kind: LobeKind,
) -> Result<ContactGeometry> {
    for (name, v) in [
        ("sphere_radius", sphere_radius),
        ("lobe_amplitude", lobe_amplitude),
    ] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::invalid(name, format!("must be positive, got {v}")));
        }
    }
    // Signed gap between the sphere and the lobe surface; negative once the
    // sphere touches the lobe or A sits inside it (axial lobe, R < L).
    let gap = |r: f64| {
        let d = closest_approach(kind, lobe_amplitude, r).value;
        let inside = r < lobe_radius(kind, lobe_amplitude, 0.0);
        if inside {
            -d - sphere_radius
        } else {
            d - sphere_radius
        }
    };
    let lo = sphere_radius;
    let hi = sphere_radius + 2.0 * lobe_amplitude;
    let r0 = bisect(gap, lo, hi, R_TOL, "sphere-lobe gap")?;
    let contact = closest_approach(kind, lobe_amplitude, r0);
    Ok(ContactGeometry {
        r0,
        theta_contact_deg: contact.x.to_degrees(),
        kind,
        sphere_radius,
        lobe_amplitude,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn lobe_radius_examples() {
        assert_eq!(lobe_radius(LobeKind::Perpendicular, 4.0, FRAC_PI_2), 4.0);
        assert_eq!(lobe_radius(LobeKind::Axial, 4.0, 0.0), 4.0);
        assert_eq!(lobe_radius(LobeKind::Perpendicular, 4.0, 0.0), 0.0);
    }

    #[test]
    fn helium_contact() {
        let s = 16.0 / 27.0;
        let g = contact_distance(s, 4.0, LobeKind::Perpendicular).unwrap();
        assert!((g.r0 - 1.203).abs() < 5e-3, "{g:?}");
        assert!((g.theta_contact_deg - 28.4).abs() < 0.3, "{g:?}");
        let g = contact_distance(s, 4.0, LobeKind::Axial).unwrap();
        assert!((g.r0 - (4.0 + s)).abs() < 1e-8);
        assert_eq!(g.theta_contact_deg, 0.0);
    }

    #[test]
    fn hydrogen_contact() {
        let g = contact_distance(1.0, 4.0, LobeKind::Perpendicular).unwrap();
        assert!((g.r0 - 1.76).abs() < 1e-2, "{g:?}");
        assert!((g.theta_contact_deg - 32.8).abs() < 0.3, "{g:?}");
        let g = contact_distance(1.0, 4.0, LobeKind::Axial).unwrap();
        assert!((g.r0 - 5.0).abs() < 1e-8);
    }

    #[test]
    fn equal_surfaces_ratio() {
        let g = contact_distance(1.0, 1.0, LobeKind::Perpendicular).unwrap();
        assert!((g.r0 - 1.29).abs() < 5e-3, "{g:?}");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(contact_distance(0.0, 1.0, LobeKind::Axial).is_err());
        assert!(contact_distance(1.0, -1.0, LobeKind::Axial).is_err());
    }

    #[test]
    fn contact_is_a_tangency() {
        for (s, l) in [(16.0 / 27.0, 4.0), (1.0, 4.0), (2.0, 2.0)] {
            let g = contact_distance(s, l, LobeKind::Perpendicular).unwrap();
            let t = g.theta_contact_deg.to_radians();
            let h = 1e-4;
            let d = |th: f64| lobe_point_distance(LobeKind::Perpendicular, l, g.r0, th);
            assert!((d(t) - s).abs() < 1e-10);
            assert!(d(t + h) - 2.0 * d(t) + d(t - h) >= 0.0);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn scale_covariance(s in 0.2f64..5.0, l in 0.5f64..8.0, k in 0.1f64..10.0) {
            for kind in [LobeKind::Perpendicular, LobeKind::Axial] {
                let base = contact_distance(s, l, kind).unwrap();
                let scaled = contact_distance(k * s, k * l, kind).unwrap();
                prop_assert!((scaled.r0 - k * base.r0).abs() <= 1e-8 * k * base.r0);
                prop_assert!((scaled.theta_contact_deg - base.theta_contact_deg).abs() < 1e-4);
            }
        }

        #[test]
        fn monotone_in_both_radii(s in 0.2f64..5.0, l in 0.5f64..8.0, ds in 0.01f64..1.0) {
            for kind in [LobeKind::Perpendicular, LobeKind::Axial] {
                let base = contact_distance(s, l, kind).unwrap().r0;
                prop_assert!(contact_distance(s + ds, l, kind).unwrap().r0 > base);
                prop_assert!(contact_distance(s, l + ds, kind).unwrap().r0 > base);
            }
        }

        #[test]
        fn axial_closed_form(s in 0.1f64..10.0, l in 0.1f64..10.0) {
            let g = contact_distance(s, l, LobeKind::Axial).unwrap();
            prop_assert!((g.r0 - (s + l)).abs() < 1e-8);
            prop_assert_eq!(g.theta_contact_deg, 0.0);
        }
    }
}
