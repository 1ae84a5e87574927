//! One-electron integrals over hydrogen-like orbitals and the resonance
//! coupling coefficients assembled from them.
//!
//! Coupling coefficients are the dimensionless `c` in `A = c·e²a²/R³`;
//! charge factors are attached only when energies are assembled.

use serde::Serialize;

use crate::orbitals::{hydrogenic_norm, Angular, Axis, EffectiveCharges, OrbitalSpec, RadialKind};
use crate::quadrature::{integrate_semi_infinite, Tolerance};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CouplingProvenance {
    HeliumClosedForm,
    RadialIntegral,
    AtomicRadiusEstimate,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CouplingCoefficient {
    pub value: f64,
    pub provenance: CouplingProvenance,
}

impl CouplingCoefficient {
    /// Coupling energy `A` in Hartree at internuclear distance `r` (Bohr).
    pub fn energy_at(&self, r: f64) -> f64 {
        self.value / (r * r * r)
    }
}

/// Radial factor written as `e^{-κr} Σ c_j r^j`.
struct Expansion {
    exponent: f64,
    terms: Vec<(i32, f64)>,
}

fn binomial(n: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

fn factorial(n: i32) -> f64 {
    (1..=n).map(f64::from).product()
}

fn expansion(spec: &OrbitalSpec) -> Expansion {
    match spec.kind {
        RadialKind::Slater1s { zeta } => Expansion {
            exponent: zeta,
            terms: vec![(0, 2.0 * zeta.powf(1.5))],
        },
        RadialKind::Hydrogenic { n, l, zeta } => {
            let scale = 2.0 * zeta / n as f64;
            let k = n - l - 1;
            let alpha = 2 * l + 1;
            let norm = hydrogenic_norm(n, l, zeta);
            let terms = (0..=k)
                .map(|j| {
                    let lag =
                        (-1f64).powi(j as i32) * binomial(k + alpha, k - j) / factorial(j as i32);
                    ((l + j) as i32, norm * lag * scale.powi((l + j) as i32))
                })
                .collect();
            Expansion {
                exponent: zeta / n as f64,
                terms,
            }
        }
    }
}

/// Closed-form `∫₀^∞ r^power R_a(r) R_b(r) dr` from Γ-function moments.
pub fn radial_moment(a: &OrbitalSpec, b: &OrbitalSpec, power: i32) -> f64 {
    let ea = expansion(a);
    let eb = expansion(b);
    let kappa = ea.exponent + eb.exponent;
    let mut sum = 0.0;
    for &(pa, ca) in &ea.terms {
        for &(pb, cb) in &eb.terms {
            let m = power + pa + pb;
            sum += ca * cb * factorial(m) / kappa.powi(m + 1);
        }
    }
    sum
}

/// `⟨1s(ζ₁)|1s(ζ₂)⟩ = 8(ζ₁ζ₂)^{3/2}/(ζ₁+ζ₂)³`.
pub fn overlap_s_s(zeta1: f64, zeta2: f64) -> Result<f64> {
    for (name, z) in [("zeta1", zeta1), ("zeta2", zeta2)] {
        if !(z > 0.0 && z.is_finite()) {
            return Err(Error::invalid(
                name,
                format!("charge must be positive, got {z}"),
            ));
        }
    }
    Ok(8.0 * (zeta1 * zeta2).powf(1.5) / (zeta1 + zeta2).powi(3))
}

/// Dipole-length integral `∫ φ_p · r_operator · 1s(ζ_s) dV` in Bohr.
///
/// The angular integral is `1/√3` when the operator component matches the
/// p axis and zero otherwise, so the result is `⟨r³⟩/√3` over the radial
/// factors.
pub fn dipole_s_p(zeta_s: f64, p_spec: &OrbitalSpec, operator: Axis) -> Result<f64> {
    if !(zeta_s > 0.0 && zeta_s.is_finite()) {
        return Err(Error::invalid(
            "zeta_s",
            format!("charge must be positive, got {zeta_s}"),
        ));
    }
    let Angular::P(axis) = p_spec.angular else {
        return Err(Error::invalid(
            "p_spec",
            "dipole integral requires an l = 1 orbital",
        ));
    };
    if axis != operator {
        return Ok(0.0);
    }
    let s = OrbitalSpec::slater_1s(zeta_s);
    Ok(radial_moment(&s, p_spec, 3) / 3f64.sqrt())
}

/// `2¹⁶ α⁶β³γ⁵ / ((α+β)⁶(α+γ)¹⁰)`.
pub fn helium_coupling(charges: &EffectiveCharges) -> CouplingCoefficient {
    let EffectiveCharges { alpha, beta, gamma } = *charges;
    let value = 65536.0 * alpha.powi(6) * beta.powi(3) * gamma.powi(5)
        / ((alpha + beta).powi(6) * (alpha + gamma).powi(10));
    CouplingCoefficient {
        value,
        provenance: CouplingProvenance::HeliumClosedForm,
    }
}

/// `∫₀^∞ r³ R_s(r) R_p(r) dr` by adaptive quadrature.
pub fn radial_dipole_integral(bra: &OrbitalSpec, ket: &OrbitalSpec) -> Result<f64> {
    if bra.l() != 0 {
        return Err(Error::invalid(
            "bra",
            "radial dipole integral needs an l = 0 bra",
        ));
    }
    if ket.l() != 1 {
        return Err(Error::invalid(
            "ket",
            "radial dipole integral needs an l = 1 ket",
        ));
    }
    let r = integrate_semi_infinite(
        |r| r * r * r * bra.radial_function(r) * ket.radial_function(r),
        0.0,
        Tolerance::default(),
    )?;
    Ok(r.value)
}

/// `(∫ r³ R_s R_p dr / a)² / 3`.
pub fn one_electron_coupling(radial_integral: f64) -> CouplingCoefficient {
    CouplingCoefficient {
        value: radial_integral * radial_integral / 3.0,
        provenance: CouplingProvenance::RadialIntegral,
    }
}

/// Coarse estimate `A ≈ e²a²/R³` used when radial functions are unknown.
pub fn atomic_radius_coupling() -> CouplingCoefficient {
    CouplingCoefficient {
        value: 1.0,
        provenance: CouplingProvenance::AtomicRadiusEstimate,
    }
}
