//! Physical outputs: potential curves, binding energies, transition
//! dipoles, radiative rates and lifetimes, metastability estimates and
//! quasimolecule sizes.

use serde::Serialize;

use crate::constants::{
    energy_ev_to_au, length_bohr_to_angstrom, ATOMIC_TIME_S, HARTREE_EV, HBAR_C_EV_ANGSTROM,
    SPEED_OF_LIGHT_AU,
};
use crate::geometry::{ContactGeometry, LobeKind};
use crate::integrals::{dipole_s_p, overlap_s_s, CouplingCoefficient};
use crate::orbitals::EffectiveCharges;
use crate::secular::{well_multiplier, BasisCase, BoundState, TermSymbol};
use crate::{Error, Result};

/// Experimental helium 1s² level, eV.
pub const HELIUM_GROUND_LEVEL_EV: f64 = -79.005;
/// Experimental helium 1s2p level, eV.
pub const HELIUM_1S2P_LEVEL_EV: f64 = -57.787;
/// Typical dipole-allowed radiative lifetime of an excited atom.
pub const TYPICAL_DIPOLE_LIFETIME_S: f64 = 1e-9;
/// Published Σ_g lifetime estimate, kept for comparison with the formula value.
pub const REFERENCE_SIGMA_G_LIFETIME_S: f64 = 0.18e-9;
/// Lower bound quoted for a dipole-forbidden state.
pub const METASTABLE_LOWER_BOUND_S: f64 = 1e-5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MolecularState {
    pub case: BasisCase,
    pub term: TermSymbol,
    pub well_multiplier: f64,
    pub coupling: CouplingCoefficient,
    pub geometry: ContactGeometry,
}

impl MolecularState {
    pub fn new(
        case: BasisCase,
        term: TermSymbol,
        coupling: CouplingCoefficient,
        geometry: ContactGeometry,
    ) -> Result<Self> {
        let expected = match term {
            TermSymbol::PiU => LobeKind::Perpendicular,
            TermSymbol::SigmaG => LobeKind::Axial,
        };
        if geometry.kind != expected {
            return Err(Error::invalid(
                "geometry",
                format!("{term} needs a {expected:?} lobe, got {:?}", geometry.kind),
            ));
        }
        if coupling.value.is_nan() || coupling.value <= 0.0 {
            return Err(Error::invalid(
                "coupling",
                "coupling coefficient must be positive",
            ));
        }
        Ok(Self {
            case,
            term,
            well_multiplier: well_multiplier(case, term),
            coupling,
            geometry,
        })
    }

    /// Attractive branch `−m·c·e²a²/R³` in eV, without the wall.
    pub fn attraction_ev(&self, r: f64) -> f64 {
        -self.well_multiplier * self.coupling.value * HARTREE_EV / (r * r * r)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurvePoint {
    pub r_bohr: f64,
    /// `+∞` inside the hard wall.
    pub energy_ev: f64,
    pub hard_wall: bool,
}

pub fn potential_curve(state: &MolecularState, samples: &[f64]) -> Result<Vec<CurvePoint>> {
    samples
        .iter()
        .map(|&r| {
            if !(r > 0.0 && r.is_finite()) {
                return Err(Error::invalid(
                    "R",
                    format!("distances must be positive, got {r}"),
                ));
            }
            let hard_wall = r < state.geometry.r0;
            Ok(CurvePoint {
                r_bohr: r,
                energy_ev: if hard_wall {
                    f64::INFINITY
                } else {
                    state.attraction_ev(r)
                },
                hard_wall,
            })
        })
        .collect()
}

/// Well depth at the contact distance, eV.
pub fn binding_energy(state: &MolecularState) -> f64 {
    state.attraction_ev(state.geometry.r0)
}

/// `⟨Ψ|d₁+d₂+d₁′+d₂′|ground⟩` in e·a for a helium bound-state vector.
///
/// Each basis term contributes `−⟨0|0̃⟩⟨p|r|0̃⟩` along its p axis; the sum
/// is taken term by term with the state's coefficients.
pub fn transition_dipole_helium(
    state: &BoundState,
    charges: &EffectiveCharges,
) -> Result<[f64; 3]> {
    if state.labels.iter().any(|l| l.case != BasisCase::Helium12) {
        return Err(Error::invalid(
            "state",
            "transition dipole needs a helium state vector",
        ));
    }
    let norm: f64 = state.coefficients.iter().map(|c| c * c).sum();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(Error::invalid(
            "state",
            format!("state vector is not normalized (|c|² = {norm})"),
        ));
    }
    let overlap = overlap_s_s(charges.beta, charges.alpha)?;
    let mut d = [0.0; 3];
    for (label, c) in state.labels.iter().zip(&state.coefficients) {
        let p = charges.excited_orbital(label.axis);
        let term = -overlap * dipole_s_p(charges.alpha, &p, label.axis)?;
        d[label.axis.index()] += c * term;
    }
    Ok(d)
}

/// `2⁹ α³β^{3/2}γ^{5/2} / ((α+β)³(α+γ)⁵)`, the magnitude of the Σ_g dipole.
pub fn sigma_g_dipole_closed_form(charges: &EffectiveCharges) -> f64 {
    let EffectiveCharges { alpha, beta, gamma } = *charges;
    512.0 * alpha.powi(3) * beta.powf(1.5) * gamma.powf(2.5)
        / ((alpha + beta).powi(3) * (alpha + gamma).powi(5))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadiativeRate {
    pub rate_per_s: f64,
    /// `None` for a dipole-forbidden transition.
    pub lifetime_s: Option<f64>,
}

/// Spontaneous dipole emission rate `w = 4ω³|d|²/(3ħc³)`.
pub fn radiative_rate(photon_energy_ev: f64, dipole_ea: f64) -> Result<RadiativeRate> {
    if !(photon_energy_ev > 0.0 && photon_energy_ev.is_finite()) {
        return Err(Error::invalid(
            "photon_energy",
            format!("must be positive, got {photon_energy_ev}"),
        ));
    }
    let omega = energy_ev_to_au(photon_energy_ev);
    let w_au = 4.0 * omega.powi(3) * dipole_ea * dipole_ea / (3.0 * SPEED_OF_LIGHT_AU.powi(3));
    let rate_per_s = w_au / ATOMIC_TIME_S;
    Ok(RadiativeRate {
        rate_per_s,
        lifetime_s: (rate_per_s > 0.0).then(|| 1.0 / rate_per_s),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MultipoleEstimate {
    pub ka0: f64,
    pub suppression: f64,
    pub metastable_lifetime_s: f64,
}

/// Order-of-magnitude rate suppression `(k a₀)²` for going one multipole
/// order up, and the resulting lifetime from a typical dipole lifetime.
pub fn multipole_suppression(
    photon_energy_ev: f64,
    system_size_angstrom: f64,
) -> Result<MultipoleEstimate> {
    if photon_energy_ev.is_nan()
        || photon_energy_ev <= 0.0
        || system_size_angstrom.is_nan()
        || system_size_angstrom <= 0.0
    {
        return Err(Error::invalid(
            "multipole_suppression",
            "inputs must be positive",
        ));
    }
    let ka0 = photon_energy_ev / HBAR_C_EV_ANGSTROM * system_size_angstrom;
    let suppression = ka0 * ka0;
    Ok(MultipoleEstimate {
        ka0,
        suppression,
        metastable_lifetime_s: TYPICAL_DIPOLE_LIFETIME_S / suppression,
    })
}

/// `E(1s2p) − E(1s²)` from the stored experimental levels, eV.
pub fn excitation_energy_helium() -> f64 {
    HELIUM_1S2P_LEVEL_EV - HELIUM_GROUND_LEVEL_EV
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MoleculeSize {
    pub r_m_angstrom: f64,
    pub cross_section_ratio: Option<f64>,
}

/// `R_M = 2R^{(z)}` in Å, and `(R_M / 2r_at)²` when the atomic radius is known.
pub fn molecule_size(r_z_bohr: f64, atomic_radius_angstrom: Option<f64>) -> Result<MoleculeSize> {
    if r_z_bohr.is_nan() || r_z_bohr <= 0.0 {
        return Err(Error::invalid(
            "R_z",
            format!("must be positive, got {r_z_bohr}"),
        ));
    }
    let r_m_angstrom = length_bohr_to_angstrom(2.0 * r_z_bohr);
    Ok(MoleculeSize {
        r_m_angstrom,
        cross_section_ratio: atomic_radius_angstrom
            .map(|r_at| (r_m_angstrom / (2.0 * r_at)).powi(2)),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Lifetime {
    Finite { seconds: f64 },
    Metastable { lower_bound_s: f64 },
    NotModeled,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StateResult {
    pub term: TermSymbol,
    pub r0_bohr: f64,
    pub theta_deg: f64,
    pub binding_energy_ev: f64,
    /// Signed component along the state's axis; `None` where no dipole model exists.
    pub transition_dipole_ea: Option<f64>,
    pub lifetime: Lifetime,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuasimoleculeReport {
    pub species: String,
    pub states: Vec<StateResult>,
    pub molecule_size: MoleculeSize,
    pub excitation_energy_ev: Option<f64>,
    pub assumptions: Vec<String>,
}

impl QuasimoleculeReport {
    pub fn state(&self, term: TermSymbol) -> Option<&StateResult> {
        self.states.iter().find(|s| s.term == term)
    }
}
