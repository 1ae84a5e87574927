//! Physical constants and unit conversions.
//!
//! Everything inside the crate is computed in Hartree atomic units with
//! Gaussian electrostatics, so `e²/a` is one Hartree and a dipole of one
//! `e·a` is one atomic unit. Reported numbers are converted at the edges.

/// Bohr radius in Å.
pub const BOHR_RADIUS_ANGSTROM: f64 = 0.529177;

/// Hartree energy in eV.
pub const HARTREE_EV: f64 = 27.2114;

/// Speed of light in atomic units (inverse fine-structure constant).
pub const SPEED_OF_LIGHT_AU: f64 = 137.036;

/// Atomic unit of time in seconds.
pub const ATOMIC_TIME_S: f64 = 2.41888e-17;

/// ħc in eV·Å.
pub const HBAR_C_EV_ANGSTROM: f64 = 1973.27;

/// Three-digit Bohr radius (0.529 Å) used when converting tabulated
/// experimental atomic radii to Bohr. The alkali table was produced with
/// this rounded value; using [`BOHR_RADIUS_ANGSTROM`] instead moves Li, Rb
/// and Cs across a rounding boundary.
pub const TABLE_BOHR_RADIUS_ANGSTROM: f64 = 0.529;

/// The full constant table as a value, for echoing into output documents.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct PhysicalConstants {
    pub bohr_radius_angstrom: f64,
    pub hartree_ev: f64,
    pub fine_structure_inv: f64,
    pub atomic_time_s: f64,
}

impl PhysicalConstants {
    pub const fn standard() -> Self {
        Self {
            bohr_radius_angstrom: BOHR_RADIUS_ANGSTROM,
            hartree_ev: HARTREE_EV,
            fine_structure_inv: SPEED_OF_LIGHT_AU,
            atomic_time_s: ATOMIC_TIME_S,
        }
    }

    /// e² in eV·Å.
    pub fn coulomb_ev_angstrom(&self) -> f64 {
        self.hartree_ev * self.bohr_radius_angstrom
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::standard()
    }
}

pub fn energy_au_to_ev(hartree: f64) -> f64 {
    hartree * HARTREE_EV
}

pub fn energy_ev_to_au(ev: f64) -> f64 {
    ev / HARTREE_EV
}

pub fn length_bohr_to_angstrom(bohr: f64) -> f64 {
    bohr * BOHR_RADIUS_ANGSTROM
}

pub fn length_angstrom_to_bohr(angstrom: f64) -> f64 {
    angstrom / BOHR_RADIUS_ANGSTROM
}

pub fn time_au_to_s(t: f64) -> f64 {
    t * ATOMIC_TIME_S
}
