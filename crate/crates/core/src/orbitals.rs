//! Hydrogen-like one-electron orbitals: Slater 1s functions with an
//! effective charge, general hydrogenic `R_nl`, and real p angular factors.
//!
//! Hydrogenic orbitals are parameterized by the effective nuclear charge
//! `ζ`, so the radial exponent is `ζ/n`. The excited-helium 2p orbital
//! (exponent `γ = 1/2`) is therefore `Hydrogenic { n: 2, l: 1, zeta: 1 }`;
//! [`OrbitalSpec::hydrogenic_from_exponent`] builds it from `γ` directly.

use std::f64::consts::PI;

use serde::Serialize;

use crate::optimize;
use crate::{Error, Result};

/// Screening charges of the helium model: `alpha` for each ground-state
/// electron, `beta` for the 1s electron of the excited atom, and `gamma`
/// for the radial exponent of its 2p electron.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EffectiveCharges {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl EffectiveCharges {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        for (name, v) in [("alpha", alpha), ("beta", beta), ("gamma", gamma)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::invalid(
                    name,
                    format!("effective charge must be positive, got {v}"),
                ));
            }
        }
        Ok(Self { alpha, beta, gamma })
    }

    /// Ground 1s orbital of the unexcited atom.
    pub fn ground_orbital(&self) -> OrbitalSpec {
        OrbitalSpec::slater_1s(self.alpha)
    }

    /// 1s orbital of the inner electron of the excited atom.
    pub fn inner_orbital(&self) -> OrbitalSpec {
        OrbitalSpec::slater_1s(self.beta)
    }

    /// 2p orbital of the excited electron along `axis`.
    pub fn excited_orbital(&self, axis: Axis) -> OrbitalSpec {
        OrbitalSpec::hydrogenic_from_exponent(2, 1, self.gamma, Angular::P(axis))
            .expect("2p with positive exponent is valid")
    }
}

impl Default for EffectiveCharges {
    fn default() -> Self {
        Self {
            alpha: 27.0 / 16.0,
            beta: 2.0,
            gamma: 0.5,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Angular {
    S,
    P(Axis),
}

impl Angular {
    pub fn l(self) -> u32 {
        match self {
            Angular::S => 0,
            Angular::P(_) => 1,
        }
    }

    pub fn value(self, theta: f64, phi: f64) -> f64 {
        match self {
            Angular::S => 1.0 / (4.0 * PI).sqrt(),
            Angular::P(axis) => p_angular_value(axis, theta, phi),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum RadialKind {
    Slater1s { zeta: f64 },
    Hydrogenic { n: u32, l: u32, zeta: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OrbitalSpec {
    pub kind: RadialKind,
    pub angular: Angular,
}

impl OrbitalSpec {
    pub fn new(kind: RadialKind, angular: Angular) -> Result<Self> {
        let (l, zeta) = match kind {
            RadialKind::Slater1s { zeta } => (0, zeta),
            RadialKind::Hydrogenic { n, l, zeta } => {
                if n == 0 {
                    return Err(Error::invalid("n", "principal quantum number must be >= 1"));
                }
                if l >= n {
                    return Err(Error::invalid("l", format!("l = {l} must be < n = {n}")));
                }
                (l, zeta)
            }
        };
        if !(zeta > 0.0 && zeta.is_finite()) {
            return Err(Error::invalid(
                "zeta",
                format!("charge must be positive, got {zeta}"),
            ));
        }
        if l > 1 {
            return Err(Error::invalid("l", "only s and p orbitals are supported"));
        }
        if angular.l() != l {
            return Err(Error::invalid(
                "angular",
                format!("angular factor {angular:?} does not match l = {l}"),
            ));
        }
        Ok(Self { kind, angular })
    }

    pub fn slater_1s(zeta: f64) -> Self {
        Self::new(RadialKind::Slater1s { zeta }, Angular::S)
            .expect("slater 1s with positive charge")
    }

    pub fn hydrogenic(n: u32, l: u32, zeta: f64, angular: Angular) -> Result<Self> {
        Self::new(RadialKind::Hydrogenic { n, l, zeta }, angular)
    }

    /// Hydrogenic orbital whose radial factor decays as `e^{-exponent·r}`.
    pub fn hydrogenic_from_exponent(
        n: u32,
        l: u32,
        exponent: f64,
        angular: Angular,
    ) -> Result<Self> {
        Self::hydrogenic(n, l, exponent * n as f64, angular)
    }

    pub fn l(&self) -> u32 {
        self.angular.l()
    }

    pub fn zeta(&self) -> f64 {
        match self.kind {
            RadialKind::Slater1s { zeta } | RadialKind::Hydrogenic { zeta, .. } => zeta,
        }
    }

    /// Radial exponent `κ` in `e^{-κ r}`.
    pub fn exponent(&self) -> f64 {
        match self.kind {
            RadialKind::Slater1s { zeta } => zeta,
            RadialKind::Hydrogenic { n, zeta, .. } => zeta / n as f64,
        }
    }

    /// Radial function normalized as `∫ R² r² dr = 1`.
    pub fn radial_function(&self, r: f64) -> f64 {
        match self.kind {
            RadialKind::Slater1s { zeta } => 2.0 * zeta.powf(1.5) * (-zeta * r).exp(),
            RadialKind::Hydrogenic { n, l, zeta } => {
                let rho = 2.0 * zeta * r / n as f64;
                hydrogenic_norm(n, l, zeta)
                    * (-0.5 * rho).exp()
                    * rho.powi(l as i32)
                    * laguerre(n - l - 1, 2 * l + 1, rho)
            }
        }
    }

    /// Full wave function at spherical coordinates `(r, θ, φ)`.
    pub fn value(&self, r: f64, theta: f64, phi: f64) -> f64 {
        self.radial_function(r) * self.angular.value(theta, phi)
    }

    /// `d/dr (r² R²)`, evaluated analytically.
    fn density_slope(&self, r: f64) -> f64 {
        let shape = match self.kind {
            RadialKind::Slater1s { zeta } => 1.0 - zeta * r,
            RadialKind::Hydrogenic { n, l, zeta } => {
                // R + r R' = C e^{-ρ/2} ρ^l [(l+1) L − ρ L / 2 − ρ L'_{k-1}]
                let rho = 2.0 * zeta * r / n as f64;
                let k = n - l - 1;
                let alpha = 2 * l + 1;
                let lag = laguerre(k, alpha, rho);
                let dlag = if k == 0 {
                    0.0
                } else {
                    laguerre(k - 1, alpha + 1, rho)
                };
                hydrogenic_norm(n, l, zeta)
                    * (-0.5 * rho).exp()
                    * rho.powi(l as i32)
                    * ((l + 1) as f64 * lag - 0.5 * rho * lag - rho * dlag)
            }
        };
        let big_r = self.radial_function(r);
        let shape = match self.kind {
            RadialKind::Slater1s { .. } => big_r * shape,
            RadialKind::Hydrogenic { .. } => shape,
        };
        2.0 * r * big_r * shape
    }
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

pub(crate) fn hydrogenic_norm(n: u32, l: u32, zeta: f64) -> f64 {
    let nf = n as f64;
    ((2.0 * zeta / nf).powi(3) * factorial(n - l - 1) / (2.0 * nf * factorial(n + l))).sqrt()
}

/// Generalized Laguerre polynomial `L_k^{(α)}(x)` by upward recurrence.
pub fn laguerre(k: u32, alpha: u32, x: f64) -> f64 {
    let a = alpha as f64;
    let mut prev = 1.0;
    if k == 0 {
        return prev;
    }
    let mut cur = 1.0 + a - x;
    for j in 1..k {
        let jf = j as f64;
        let next = ((2.0 * jf + 1.0 + a - x) * cur - (jf + a) * prev) / (jf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// `R_nl(r)` for hydrogenic orbitals; the full 1s amplitude
/// `ζ^{3/2} e^{-ζr} / √π` for Slater orbitals.
pub fn radial_value(spec: &OrbitalSpec, r: f64) -> Result<f64> {
    if r.is_nan() || r < 0.0 {
        return Err(Error::invalid(
            "r",
            format!("radius must be non-negative, got {r}"),
        ));
    }
    Ok(match spec.kind {
        RadialKind::Slater1s { zeta } => zeta.powf(1.5) / PI.sqrt() * (-zeta * r).exp(),
        RadialKind::Hydrogenic { .. } => spec.radial_function(r),
    })
}

/// Real p angular factor `√(3/4π)·{sinθ cosφ, sinθ sinφ, cosθ}`.
pub fn p_angular_value(axis: Axis, theta: f64, phi: f64) -> f64 {
    let norm = (3.0 / (4.0 * PI)).sqrt();
    norm * match axis {
        Axis::X => theta.sin() * phi.cos(),
        Axis::Y => theta.sin() * phi.sin(),
        Axis::Z => theta.cos(),
    }
}

/// Most probable radius: the global maximum of `r² R²(r)`.
pub fn radial_density_max(spec: &OrbitalSpec) -> Result<f64> {
    let n = match spec.kind {
        RadialKind::Slater1s { .. } => 1.0,
        RadialKind::Hydrogenic { n, .. } => n as f64,
    };
    let hi = 50f64.max(4.0 * n * n) / spec.zeta();
    let density = |r: f64| {
        let v = spec.radial_function(r);
        r * r * v * v
    };
    let samples = 4000;
    let coarse = optimize::scan_minimize(|r| -density(r), 0.0, hi, samples, 1e-12);
    let step = hi / (samples - 1) as f64;
    if coarse.x <= step || coarse.x >= hi - step {
        return Err(Error::NoInteriorMaximum);
    }
    let lo = (coarse.x - step).max(0.0);
    let up = (coarse.x + step).min(hi);
    optimize::bisect(
        |r| spec.density_slope(r),
        lo,
        up,
        1e-14,
        "radial density slope",
    )
    .map_err(|_| Error::NoInteriorMaximum)
}
