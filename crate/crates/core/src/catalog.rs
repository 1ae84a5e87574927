//! Built-in species data and end-to-end report generation.
//!
//! Three models are supported:
//!
//! * `helium`: two-electron atoms with screening charges `(α, β, γ)`; the
//!   coupling is the closed form over Slater/hydrogenic integrals.
//! * `hydrogen`: one electron in a hydrogenic field of charge `ζ`; the
//!   coupling comes from the radial integral between `R_{n0}` and
//!   `R_{n+1,1}`.
//! * `alkali`: one valence electron with unknown radial functions; the
//!   coupling is `A ≈ e²a²/R³` and both contact surfaces are spheres/lobes
//!   of the experimental atomic radius.

use std::fmt;

use serde::Serialize;

use crate::constants::{energy_au_to_ev, TABLE_BOHR_RADIUS_ANGSTROM};
use crate::geometry::{contact_distance, LobeKind};
use crate::integrals::{
    atomic_radius_coupling, helium_coupling, one_electron_coupling, radial_dipole_integral,
    CouplingCoefficient,
};
use crate::observables::{
    binding_energy, excitation_energy_helium, molecule_size, radiative_rate,
    transition_dipole_helium, Lifetime, MolecularState, QuasimoleculeReport, StateResult,
    METASTABLE_LOWER_BOUND_S,
};
use crate::orbitals::{radial_density_max, Angular, Axis, EffectiveCharges, OrbitalSpec};
use crate::secular::{
    bound_state_vector, build_block, solve_block, BasisCase, BoundState, TermSymbol,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpeciesModel {
    HeliumTwoElectron,
    HydrogenAnalytic,
    AlkaliRadius,
}

impl SpeciesModel {
    pub fn basis_case(self) -> BasisCase {
        match self {
            SpeciesModel::HeliumTwoElectron => BasisCase::Helium12,
            _ => BasisCase::OneElectron6,
        }
    }
}

impl fmt::Display for SpeciesModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpeciesModel::HeliumTwoElectron => "helium",
            SpeciesModel::HydrogenAnalytic => "hydrogen",
            SpeciesModel::AlkaliRadius => "alkali",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpeciesRecord {
    pub name: String,
    pub model: SpeciesModel,
    /// Principal quantum number of the ground valence shell.
    pub n: u32,
    pub charges: Option<EffectiveCharges>,
    /// Hydrogenic nuclear charge (hydrogen model only).
    pub zeta: Option<f64>,
    pub atomic_radius_angstrom: Option<f64>,
    /// Bohr.
    pub ground_surface_radius: f64,
    /// Bohr.
    pub lobe_amplitude: f64,
}

impl SpeciesRecord {
    pub fn helium(name: &str, charges: EffectiveCharges) -> Result<Self> {
        let ground = radial_density_max(&charges.ground_orbital())?;
        let lobe = radial_density_max(&charges.excited_orbital(Axis::Z))?;
        Ok(Self {
            name: name.to_string(),
            model: SpeciesModel::HeliumTwoElectron,
            n: 1,
            charges: Some(charges),
            zeta: None,
            atomic_radius_angstrom: None,
            ground_surface_radius: ground,
            lobe_amplitude: lobe,
        })
    }

    pub fn hydrogen(name: &str, n: u32, zeta: f64) -> Result<Self> {
        let (s, p) = hydrogen_orbitals(n, zeta)?;
        Ok(Self {
            name: name.to_string(),
            model: SpeciesModel::HydrogenAnalytic,
            n,
            charges: None,
            zeta: Some(zeta),
            atomic_radius_angstrom: None,
            ground_surface_radius: radial_density_max(&s)?,
            lobe_amplitude: radial_density_max(&p)?,
        })
    }

    pub fn alkali(name: &str, n: u32, atomic_radius_angstrom: f64) -> Result<Self> {
        if !(atomic_radius_angstrom > 0.0 && atomic_radius_angstrom.is_finite()) {
            return Err(Error::invalid(
                "r_at",
                format!("must be positive, got {atomic_radius_angstrom}"),
            ));
        }
        let r = atomic_radius_angstrom / TABLE_BOHR_RADIUS_ANGSTROM;
        Ok(Self {
            name: name.to_string(),
            model: SpeciesModel::AlkaliRadius,
            n,
            charges: None,
            zeta: None,
            atomic_radius_angstrom: Some(atomic_radius_angstrom),
            ground_surface_radius: r,
            lobe_amplitude: r,
        })
    }

    pub fn coupling(&self) -> Result<CouplingCoefficient> {
        match self.model {
            SpeciesModel::HeliumTwoElectron => {
                Ok(helium_coupling(&self.charges.unwrap_or_default()))
            }
            SpeciesModel::HydrogenAnalytic => {
                let (s, p) = hydrogen_orbitals(self.n, self.zeta.unwrap_or(1.0))?;
                Ok(one_electron_coupling(radial_dipole_integral(&s, &p)?))
            }
            SpeciesModel::AlkaliRadius => Ok(atomic_radius_coupling()),
        }
    }

    /// Bound molecular state of `term` at its contact geometry.
    pub fn molecular_state(&self, term: TermSymbol) -> Result<MolecularState> {
        let kind = match term {
            TermSymbol::PiU => LobeKind::Perpendicular,
            TermSymbol::SigmaG => LobeKind::Axial,
        };
        let geometry = contact_distance(self.ground_surface_radius, self.lobe_amplitude, kind)?;
        MolecularState::new(self.model.basis_case(), term, self.coupling()?, geometry)
    }

    pub fn assumptions(&self) -> Vec<String> {
        let mut out = Vec::new();
        match self.model {
            SpeciesModel::HeliumTwoElectron => {
                out.push("only the symmetric (+) combination of the excited two-electron function is carried".into());
            }
            SpeciesModel::HydrogenAnalytic => {
                out.push(format!(
                    "excited orbital is R_{{{},1}} with the same nuclear charge",
                    self.n + 1
                ));
            }
            SpeciesModel::AlkaliRadius => {
                out.push("coupling A = e^2 a^2 / R^3 (atomic-radius estimate)".into());
                out.push(
                    "ground sphere radius = lobe amplitude = r_at (reconstructed convention)"
                        .into(),
                );
                out.push(format!(
                    "r_at converted to Bohr with a = {TABLE_BOHR_RADIUS_ANGSTROM} Angstrom (table convention)"
                ));
                out.push("principal quantum number n is metadata only".into());
            }
        }
        out.push("term labels 1Pi_u / 1Sigma_g are assigned, not derived from parity".into());
        out
    }
}

fn hydrogen_orbitals(n: u32, zeta: f64) -> Result<(OrbitalSpec, OrbitalSpec)> {
    Ok((
        OrbitalSpec::hydrogenic(n, 0, zeta, Angular::S)?,
        OrbitalSpec::hydrogenic(n + 1, 1, zeta, Angular::P(Axis::Z))?,
    ))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Catalog {
    records: Vec<SpeciesRecord>,
}

/// Group-I experimental atomic radii (Å) and ground-shell principal numbers.
const ALKALIS: [(&str, u32, f64); 5] = [
    ("Li", 2, 1.520),
    ("Na", 3, 1.858),
    ("K", 4, 2.272),
    ("Rb", 5, 2.475),
    ("Cs", 6, 2.655),
];

impl Catalog {
    pub fn builtin() -> Self {
        let mut records = vec![
            SpeciesRecord::helium("He", EffectiveCharges::default())
                .expect("default helium record"),
            SpeciesRecord::hydrogen("H", 1, 1.0).expect("hydrogen record"),
        ];
        records.extend(
            ALKALIS
                .iter()
                .map(|&(name, n, r)| SpeciesRecord::alkali(name, n, r).expect("alkali record")),
        );
        Self { records }
    }

    pub fn records(&self) -> &[SpeciesRecord] {
        &self.records
    }

    pub fn names(&self) -> Vec<&str> {
        self.records.iter().map(|r| r.name.as_str()).collect()
    }

    /// Case-insensitive lookup.
    pub fn get(&self, name: &str) -> Result<&SpeciesRecord> {
        self.records
            .iter()
            .find(|r| r.name.eq_ignore_ascii_case(name))
            .ok_or_else(|| Error::UnknownSpecies {
                name: name.to_string(),
                available: self.names().join(", "),
            })
    }

    /// Adds or replaces records; replaced records keep their position.
    pub fn merge(&mut self, records: Vec<SpeciesRecord>) {
        for rec in records {
            match self
                .records
                .iter_mut()
                .find(|r| r.name.eq_ignore_ascii_case(&rec.name))
            {
                Some(slot) => *slot = rec,
                None => self.records.push(rec),
            }
        }
    }

    /// Parses a user catalog: one `name model n value` record per line,
    /// whitespace separated, `#` starting a comment. `model` is `helium`
    /// (value `alpha,beta,gamma`), `hydrogen` (value `zeta`) or `alkali`
    /// (value `r_at` in Å). Numbers may be written as fractions `p/q`.
    pub fn parse_user(text: &str) -> Result<Vec<SpeciesRecord>> {
        let mut out = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |reason: String| Error::CatalogParse {
                line: line_no,
                reason,
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [name, model, n, value] = fields[..] else {
                return Err(err(format!(
                    "expected 4 fields `name model n value`, got {}",
                    fields.len()
                )));
            };
            let n: u32 = n
                .parse()
                .map_err(|_| err(format!("invalid principal quantum number `{n}`")))?;
            let number =
                |s: &str| parse_number(s).ok_or_else(|| err(format!("invalid number `{s}`")));
            let record = match model {
                "helium" => {
                    let parts: Vec<&str> = value.split(',').collect();
                    let [a, b, g] = parts[..] else {
                        return Err(err("helium value must be `alpha,beta,gamma`".into()));
                    };
                    let charges = EffectiveCharges::new(number(a)?, number(b)?, number(g)?)
                        .map_err(|e| err(e.to_string()))?;
                    SpeciesRecord::helium(name, charges)
                }
                "hydrogen" => SpeciesRecord::hydrogen(name, n, number(value)?),
                "alkali" => SpeciesRecord::alkali(name, n, number(value)?),
                other => {
                    return Err(err(format!(
                        "unknown model `{other}` (helium, hydrogen, alkali)"
                    )))
                }
            };
            out.push(record.map_err(|e| err(e.to_string()))?);
        }
        Ok(out)
    }
}

impl Default for Catalog {
    fn default() -> Self {
        Self::builtin()
    }
}

fn parse_number(s: &str) -> Option<f64> {
    let v = match s.split_once('/') {
        Some((p, q)) => p.trim().parse::<f64>().ok()? / q.trim().parse::<f64>().ok()?,
        None => s.parse().ok()?,
    };
    v.is_finite().then_some(v)
}

/// Looks a species up in the built-in catalog.
pub fn get_species(name: &str) -> Result<SpeciesRecord> {
    Catalog::builtin().get(name).cloned()
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ReportOptions {
    /// Photon energy for the Σ_g decay; the atomic excitation energy when `None`.
    pub photon_energy_ev: Option<f64>,
}

/// Helium bound-state vector of a term (x block for Π_u, z block for Σ_g).
pub fn helium_bound_state(term: TermSymbol) -> Result<BoundState> {
    let axis = match term {
        TermSymbol::PiU => Axis::X,
        TermSymbol::SigmaG => Axis::Z,
    };
    let spectrum = solve_block(&build_block(BasisCase::Helium12, axis, 1.0)?)?;
    bound_state_vector(&spectrum).ok_or(Error::Unsupported {
        species: "He".into(),
        what: "a bound state in this block",
    })
}

/// Atomic resonance-line energy, where the model provides one.
pub fn excitation_energy(record: &SpeciesRecord) -> Option<f64> {
    match record.model {
        SpeciesModel::HeliumTwoElectron => Some(excitation_energy_helium()),
        SpeciesModel::HydrogenAnalytic => {
            let z = record.zeta.unwrap_or(1.0);
            let n = record.n as f64;
            Some(energy_au_to_ev(
                0.5 * z * z * (1.0 / (n * n) - 1.0 / ((n + 1.0) * (n + 1.0))),
            ))
        }
        SpeciesModel::AlkaliRadius => None,
    }
}

/// Runs coupling → geometry → observables for both bound terms.
pub fn full_report(record: &SpeciesRecord, options: ReportOptions) -> Result<QuasimoleculeReport> {
    let ctx = |e: Error| e.in_species(&record.name);
    let excitation = excitation_energy(record);
    let mut assumptions = record.assumptions();
    let mut states = Vec::with_capacity(2);
    for term in [TermSymbol::PiU, TermSymbol::SigmaG] {
        let state = record.molecular_state(term).map_err(ctx)?;
        let (dipole, lifetime) = match (record.model, term) {
            (SpeciesModel::HeliumTwoElectron, _) => {
                let charges = record.charges.unwrap_or_default();
                let bound = helium_bound_state(term).map_err(ctx)?;
                let axis = bound.labels[0].axis;
                let d = transition_dipole_helium(&bound, &charges).map_err(ctx)?[axis.index()];
                if d == 0.0 {
                    (
                        Some(d),
                        Lifetime::Metastable {
                            lower_bound_s: METASTABLE_LOWER_BOUND_S,
                        },
                    )
                } else {
                    let photon = options.photon_energy_ev.or(excitation).unwrap_or_default();
                    let rate = radiative_rate(photon, d).map_err(ctx)?;
                    let lifetime = match rate.lifetime_s {
                        Some(seconds) => Lifetime::Finite { seconds },
                        None => Lifetime::Metastable {
                            lower_bound_s: METASTABLE_LOWER_BOUND_S,
                        },
                    };
                    (Some(d), lifetime)
                }
            }
            // excitation-exchange antisymmetric combination: the two terms cancel
            (_, TermSymbol::PiU) => (
                Some(0.0),
                Lifetime::Metastable {
                    lower_bound_s: METASTABLE_LOWER_BOUND_S,
                },
            ),
            (_, TermSymbol::SigmaG) => (None, Lifetime::NotModeled),
        };
        states.push(StateResult {
            term,
            r0_bohr: state.geometry.r0,
            theta_deg: state.geometry.theta_contact_deg,
            binding_energy_ev: binding_energy(&state),
            transition_dipole_ea: dipole,
            lifetime,
        });
    }
    if record.model == SpeciesModel::HeliumTwoElectron {
        match options.photon_energy_ev {
            Some(e) => assumptions.push(format!("Sigma_g photon energy set to {e} eV")),
            None => assumptions.push(
                "Sigma_g photon energy = atomic 1s2p excitation energy (well shift ignored)".into(),
            ),
        }
    } else {
        assumptions.push("Sigma_g transition dipole not modeled for one-electron species".into());
    }
    let r_z = states[1].r0_bohr;
    Ok(QuasimoleculeReport {
        species: record.name.clone(),
        states,
        molecule_size: molecule_size(r_z, record.atomic_radius_angstrom).map_err(ctx)?,
        excitation_energy_ev: excitation,
        assumptions,
    })
}

/// Half-away-from-zero rounding to `decimals` places.
pub fn round_to(x: f64, decimals: i32) -> f64 {
    let k = 10f64.powi(decimals);
    let r = (x * k).round() / k;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub atom: String,
    pub n: u32,
    pub r_at_angstrom: Option<f64>,
    pub r_xy_bohr: f64,
    pub e_xy_ev: f64,
    pub r_z_bohr: f64,
    pub e_z_ev: f64,
}

impl TableRow {
    pub fn from_record(record: &SpeciesRecord) -> Result<Self> {
        let pi = record
            .molecular_state(TermSymbol::PiU)
            .map_err(|e| e.in_species(&record.name))?;
        let sigma = record
            .molecular_state(TermSymbol::SigmaG)
            .map_err(|e| e.in_species(&record.name))?;
        Ok(Self {
            atom: record.name.clone(),
            n: record.n,
            r_at_angstrom: record.atomic_radius_angstrom,
            r_xy_bohr: pi.geometry.r0,
            e_xy_ev: binding_energy(&pi),
            r_z_bohr: sigma.geometry.r0,
            e_z_ev: binding_energy(&sigma),
        })
    }

    /// Distances and energies to two decimals.
    pub fn rounded(&self) -> Self {
        Self {
            atom: self.atom.clone(),
            n: self.n,
            r_at_angstrom: self.r_at_angstrom.map(|r| round_to(r, 3)),
            r_xy_bohr: round_to(self.r_xy_bohr, 2),
            e_xy_ev: round_to(self.e_xy_ev, 2),
            r_z_bohr: round_to(self.r_z_bohr, 2),
            e_z_ev: round_to(self.e_z_ev, 2),
        }
    }
}

/// Full-precision rows for every alkali in catalog order.
pub fn reproduce_table() -> Result<Vec<TableRow>> {
    Catalog::builtin()
        .records()
        .iter()
        .filter(|r| r.model == SpeciesModel::AlkaliRadius)
        .map(TableRow::from_record)
        .collect()
}
