//! First-order degenerate perturbation theory over the excitation-exchange
//! basis.
//!
//! The full interaction matrix is assembled from the dipole-dipole tensor
//! `T = I − 3 n nᵀ` (with `n` along the internuclear z axis): two basis
//! states couple only when the excitation sits on different atoms, and then
//! with `A·T[axis][axis']`. Per-axis blocks are cut out of that matrix, so
//! the block structure is a consequence of the assembly rather than an
//! input to it.

use std::fmt;

use serde::Serialize;

use crate::linalg::{dot, jacobi_eigen, SymmetricMatrix};
use crate::orbitals::Axis;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BasisCase {
    /// Two-electron atoms (He): 3 axes × 2 sites × 2 electron slots.
    Helium12,
    /// One valence electron (H, alkalis): 3 axes × 2 sites.
    OneElectron6,
}

impl BasisCase {
    pub fn size(self) -> usize {
        match self {
            BasisCase::Helium12 => 12,
            BasisCase::OneElectron6 => 6,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Site {
    A,
    B,
}

/// Which electron of the excited helium atom carries the p orbital.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Slot {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BasisLabel {
    pub case: BasisCase,
    pub axis: Axis,
    pub excitation_site: Site,
    pub slot: Option<Slot>,
}

impl BasisLabel {
    /// Ket in occupation notation, electrons ordered (1, 2, 1′, 2′).
    pub fn ket(&self) -> String {
        let p = self.axis.symbol();
        match (self.case, self.excitation_site, self.slot) {
            (BasisCase::Helium12, Site::B, Some(Slot::Second)) => format!("|0~0~0{p}>"),
            (BasisCase::Helium12, Site::B, _) => format!("|0~0~{p}0>"),
            (BasisCase::Helium12, Site::A, Some(Slot::Second)) => format!("|0{p}0~0~>"),
            (BasisCase::Helium12, Site::A, _) => format!("|{p}00~0~>"),
            (BasisCase::OneElectron6, Site::B, _) => format!("|0{p}>"),
            (BasisCase::OneElectron6, Site::A, _) => format!("|{p}0>"),
        }
    }
}

/// Zero-order basis in canonical order, grouped by axis.
pub fn basis(case: BasisCase) -> Vec<BasisLabel> {
    let mut out = Vec::with_capacity(case.size());
    for axis in Axis::ALL {
        match case {
            BasisCase::Helium12 => {
                for (site, slot) in [
                    (Site::B, Slot::Second),
                    (Site::B, Slot::First),
                    (Site::A, Slot::Second),
                    (Site::A, Slot::First),
                ] {
                    out.push(BasisLabel {
                        case,
                        axis,
                        excitation_site: site,
                        slot: Some(slot),
                    });
                }
            }
            BasisCase::OneElectron6 => {
                for site in [Site::B, Site::A] {
                    out.push(BasisLabel {
                        case,
                        axis,
                        excitation_site: site,
                        slot: None,
                    });
                }
            }
        }
    }
    out
}

/// `I − 3 n nᵀ` for `n` along z.
fn dipole_tensor(a: Axis, b: Axis) -> f64 {
    let delta = if a == b { 1.0 } else { 0.0 };
    let nn = if a == Axis::Z && b == Axis::Z {
        1.0
    } else {
        0.0
    };
    delta - 3.0 * nn
}

fn check_coupling(coupling: f64) -> Result<()> {
    if !(coupling > 0.0 && coupling.is_finite()) {
        return Err(Error::invalid(
            "coupling",
            format!("A must be positive, got {coupling}"),
        ));
    }
    Ok(())
}

/// The full interaction matrix over [`basis`].
pub fn build_full(case: BasisCase, coupling: f64) -> Result<(Vec<BasisLabel>, SymmetricMatrix)> {
    check_coupling(coupling)?;
    let labels = basis(case);
    let mut m = SymmetricMatrix::zeros(labels.len());
    for (i, li) in labels.iter().enumerate() {
        for (j, lj) in labels.iter().enumerate().skip(i + 1) {
            if li.excitation_site != lj.excitation_site {
                m.set(i, j, coupling * dipole_tensor(li.axis, lj.axis));
            }
        }
    }
    Ok((labels, m))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockAxis {
    Xy,
    Z,
}

impl From<Axis> for BlockAxis {
    fn from(a: Axis) -> Self {
        match a {
            Axis::X | Axis::Y => BlockAxis::Xy,
            Axis::Z => BlockAxis::Z,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SecularBlock {
    pub case: BasisCase,
    pub axis: Axis,
    pub coupling: f64,
    pub labels: Vec<BasisLabel>,
    pub matrix: SymmetricMatrix,
}

/// The block of the full matrix spanned by the basis states of one axis.
pub fn build_block(case: BasisCase, axis: Axis, coupling: f64) -> Result<SecularBlock> {
    let (labels, full) = build_full(case, coupling)?;
    let idx: Vec<usize> = (0..labels.len())
        .filter(|&i| labels[i].axis == axis)
        .collect();
    let rows: Vec<Vec<f64>> = idx
        .iter()
        .map(|&i| idx.iter().map(|&j| full.get(i, j)).collect())
        .collect();
    Ok(SecularBlock {
        case,
        axis,
        coupling,
        labels: idx.iter().map(|&i| labels[i]).collect(),
        matrix: SymmetricMatrix::from_rows(&rows)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TermSymbol {
    #[serde(rename = "1Pi_u")]
    PiU,
    #[serde(rename = "1Sigma_g")]
    SigmaG,
}

impl TermSymbol {
    pub fn ascii(self) -> &'static str {
        match self {
            TermSymbol::PiU => "1Pi_u",
            TermSymbol::SigmaG => "1Sigma_g",
        }
    }

    /// Key used on the command line and in output documents.
    pub fn key(self) -> &'static str {
        match self {
            TermSymbol::PiU => "pi_u",
            TermSymbol::SigmaG => "sigma_g",
        }
    }

    pub fn for_block(block: BlockAxis) -> Self {
        match block {
            BlockAxis::Xy => TermSymbol::PiU,
            BlockAxis::Z => TermSymbol::SigmaG,
        }
    }
}

impl fmt::Display for TermSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TermSymbol::PiU => "¹Π_u",
            TermSymbol::SigmaG => "¹Σ_g",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Level {
    pub value_in_a: f64,
    pub degeneracy: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SecularSpectrum {
    pub case: BasisCase,
    pub axis: Axis,
    pub block_axis: BlockAxis,
    pub coupling: f64,
    pub labels: Vec<BasisLabel>,
    /// Ascending, in units of the coupling `A`.
    pub eigenvalues_in_a: Vec<f64>,
    pub eigenvectors: Vec<Vec<f64>>,
    pub levels: Vec<Level>,
    /// Term symbols of the bound (negative) levels.
    pub term_labels: Vec<(f64, TermSymbol)>,
}

/// Exchange-parity vectors: ± under site exchange times ± under slot
/// exchange (helium), normalized. Every eigenvector of a block is one of
/// these or a combination within a degenerate level.
fn symmetry_adapted(labels: &[BasisLabel]) -> Vec<Vec<f64>> {
    let norm = 1.0 / (labels.len() as f64).sqrt();
    let slot_parities: &[f64] = if labels.iter().any(|l| l.slot.is_some()) {
        &[1.0, -1.0]
    } else {
        &[1.0]
    };
    let mut out = Vec::new();
    for site_parity in [1.0, -1.0] {
        for &slot_parity in slot_parities {
            out.push(
                labels
                    .iter()
                    .map(|l| {
                        let s = if l.excitation_site == Site::A {
                            site_parity
                        } else {
                            1.0
                        };
                        let t = if l.slot == Some(Slot::First) {
                            slot_parity
                        } else {
                            1.0
                        };
                        norm * s * t
                    })
                    .collect(),
            );
        }
    }
    out
}

fn fix_sign(v: &mut [f64]) {
    if let Some(first) = v.iter().find(|x| x.abs() > 1e-12) {
        if *first < 0.0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
    }
}

/// Diagonalizes a block and rotates each degenerate level onto the
/// exchange-parity vectors it contains.
pub fn solve_block(block: &SecularBlock) -> Result<SecularSpectrum> {
    check_coupling(block.coupling)?;
    let eig = jacobi_eigen(&block.matrix)?;
    let cluster_tol = 1e-9 * block.coupling;
    let candidates = symmetry_adapted(&block.labels);

    let mut values = Vec::with_capacity(eig.values.len());
    let mut vectors = Vec::with_capacity(eig.values.len());
    let mut levels = Vec::new();
    let mut start = 0;
    while start < eig.values.len() {
        let mut end = start + 1;
        while end < eig.values.len() && (eig.values[end] - eig.values[start]).abs() < cluster_tol {
            end += 1;
        }
        let subspace = &eig.vectors[start..end];
        let inside: Vec<&Vec<f64>> = candidates
            .iter()
            .filter(|u| subspace.iter().map(|v| dot(v, u).powi(2)).sum::<f64>() > 1.0 - 1e-9)
            .collect();
        if inside.len() == subspace.len() {
            for u in inside {
                // Rayleigh quotient of the exact vector
                let lambda = dot(u, &block.matrix.mul_vec(u));
                values.push(lambda);
                vectors.push(u.clone());
            }
        } else {
            for (k, v) in subspace.iter().enumerate() {
                let mut v = v.clone();
                fix_sign(&mut v);
                values.push(eig.values[start + k]);
                vectors.push(v);
            }
        }
        levels.push(Level {
            value_in_a: eig.values[start..end].iter().sum::<f64>()
                / (end - start) as f64
                / block.coupling,
            degeneracy: end - start,
        });
        start = end;
    }

    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
    let eigenvalues_in_a: Vec<f64> = order.iter().map(|&i| values[i] / block.coupling).collect();
    let eigenvectors: Vec<Vec<f64>> = order.iter().map(|&i| vectors[i].clone()).collect();
    for level in &mut levels {
        // report the exact member value where the level was canonicalized
        if let Some(v) = eigenvalues_in_a
            .iter()
            .find(|v| (**v - level.value_in_a).abs() < 1e-9)
        {
            level.value_in_a = *v;
        }
    }
    let block_axis = BlockAxis::from(block.axis);
    let term_labels = levels
        .iter()
        .filter(|l| l.value_in_a < -1e-9)
        .map(|l| (l.value_in_a, TermSymbol::for_block(block_axis)))
        .collect();
    Ok(SecularSpectrum {
        case: block.case,
        axis: block.axis,
        block_axis,
        coupling: block.coupling,
        labels: block.labels.clone(),
        eigenvalues_in_a,
        eigenvectors,
        levels,
        term_labels,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundState {
    pub value_in_a: f64,
    pub term: TermSymbol,
    pub labels: Vec<BasisLabel>,
    pub coefficients: Vec<f64>,
}

/// Lowest level of a block when it is bound (negative) and non-degenerate.
pub fn bound_state_vector(spectrum: &SecularSpectrum) -> Option<BoundState> {
    let lowest = *spectrum.eigenvalues_in_a.first()?;
    if lowest >= -1e-9 {
        return None;
    }
    if spectrum
        .eigenvalues_in_a
        .get(1)
        .is_some_and(|v| (v - lowest).abs() < 1e-9)
    {
        return None;
    }
    let mut coefficients = spectrum.eigenvectors[0].clone();
    fix_sign(&mut coefficients);
    Some(BoundState {
        value_in_a: lowest,
        term: TermSymbol::for_block(spectrum.block_axis),
        labels: spectrum.labels.clone(),
        coefficients,
    })
}

/// All eigenvalues of the full matrix in units of `A`, ascending.
pub fn full_spectrum_in_a(case: BasisCase, coupling: f64) -> Result<Vec<f64>> {
    let (_, m) = build_full(case, coupling)?;
    Ok(jacobi_eigen(&m)?
        .values
        .into_iter()
        .map(|v| v / coupling)
        .collect())
}

/// Level multiplier `m` of the bound state of a term (`ΔE = −m·A`).
pub fn well_multiplier(case: BasisCase, term: TermSymbol) -> f64 {
    match (case, term) {
        (BasisCase::Helium12, TermSymbol::PiU) => 2.0,
        (BasisCase::Helium12, TermSymbol::SigmaG) => 4.0,
        (BasisCase::OneElectron6, TermSymbol::PiU) => 1.0,
        (BasisCase::OneElectron6, TermSymbol::SigmaG) => 2.0,
    }
}
