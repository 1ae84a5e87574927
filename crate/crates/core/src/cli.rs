//! Command-line front end.
//!
//! Every command builds a list of rows (ordered column → cell maps); JSON
//! output wraps them in an [`OutputDocument`], CSV output writes a header
//! plus one line per row. Both go through the same number formatting, so
//! the two formats carry identical values.
//!
//! Exit codes: 0 success, 2 usage error (bad arguments, unknown species,
//! unreadable or malformed catalog), 3 computation failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::catalog::{
    full_report, helium_bound_state, Catalog, ReportOptions, SpeciesModel, SpeciesRecord, TableRow,
};
use crate::constants::{length_bohr_to_angstrom, HARTREE_EV};
use crate::geometry::LobeKind;
use crate::observables::{
    multipole_suppression, potential_curve, radiative_rate, transition_dipole_helium, Lifetime,
    METASTABLE_LOWER_BOUND_S, REFERENCE_SIGMA_G_LIFETIME_S,
};
use crate::orbitals::Axis;
use crate::secular::{build_block, solve_block, BlockAxis, TermSymbol};
use crate::Error;

pub const SCHEMA_VERSION: &str = "1";
/// Characteristic size of the radiating system used in the multipole estimate.
pub const RADIATOR_SIZE_ANGSTROM: f64 = 1.0;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COMPUTATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "quasimol",
    version,
    about = "Resonance dipole-dipole quasimolecules"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Extra species records (`name model n value` per line).
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TermArg {
    #[value(name = "pi_u")]
    PiU,
    #[value(name = "sigma_g")]
    SigmaG,
}

impl From<TermArg> for TermSymbol {
    fn from(t: TermArg) -> Self {
        match t {
            TermArg::PiU => TermSymbol::PiU,
            TermArg::SigmaG => TermSymbol::SigmaG,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Secular eigenvalues per axis block, in units of A and in eV.
    Levels {
        species: String,
        /// Evaluate A at this internuclear distance (Bohr) instead of R0.
        #[arg(long = "at-R")]
        at_r: Option<f64>,
        /// Use this coupling energy A (eV) directly.
        #[arg(long = "coupling-ev")]
        coupling_ev: Option<f64>,
    },
    /// Potential curve of one bound term on a uniform grid.
    Curve {
        species: String,
        #[arg(value_enum)]
        term: TermArg,
        /// Bohr.
        r_min: f64,
        /// Bohr.
        r_max: f64,
        steps: usize,
    },
    /// Equilibrium distances and binding energies for every catalog species.
    Table,
    /// Transition dipoles and radiative lifetimes (helium model only).
    Lifetime {
        species: String,
        #[arg(long = "photon-energy")]
        photon_energy: Option<f64>,
    },
    /// Contact geometry of both bound terms.
    Geometry { species: String },
    /// Full per-term report.
    Report {
        species: String,
        #[arg(long = "photon-energy")]
        photon_energy: Option<f64>,
    },
}

/// Top-level JSON document.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutputDocument {
    pub schema_version: String,
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub assumptions: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
enum Cell {
    /// Six significant digits.
    Num(f64),
    /// Fixed number of decimals.
    Fixed(f64, usize),
    Int(i64),
    Text(String),
    Bool(bool),
    Empty,
}

impl Cell {
    fn opt(v: Option<f64>) -> Self {
        v.map_or(Cell::Empty, Cell::Num)
    }

    fn csv(&self) -> String {
        match self {
            Cell::Num(x) => format_sig6(*x),
            Cell::Fixed(x, d) => format_fixed(*x, *d),
            Cell::Int(i) => i.to_string(),
            Cell::Text(s) => csv_escape(s),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        let number = |s: String| {
            s.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .map_or(Value::Null, Value::from)
        };
        match self {
            Cell::Num(x) => number(format_sig6(*x)),
            Cell::Fixed(x, d) => number(format_fixed(*x, *d)),
            Cell::Int(i) => Value::from(*i),
            Cell::Text(s) => Value::from(s.clone()),
            Cell::Bool(b) => Value::from(*b),
            Cell::Empty => Value::Null,
        }
    }
}

type Row = Vec<(&'static str, Cell)>;

struct Payload {
    command: &'static str,
    inputs: Value,
    rows: Vec<Row>,
    assumptions: Vec<String>,
}

/// Fixed notation with six significant digits; `inf`/`-inf`/`nan` pass through.
pub fn format_sig6(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{:.5e}", x);
    let exp: i32 = sci
        .rsplit('e')
        .next()
        .and_then(|e| e.parse().ok())
        .unwrap_or(0);
    let decimals = (5 - exp).max(0) as usize;
    format_fixed(x, decimals)
}

fn format_fixed(x: f64, decimals: usize) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let s = format!("{:.*}", decimals, x);
    // no negative zero in output
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s[1..].to_string()
    } else {
        s
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

enum CliError {
    Usage(String),
    Computation(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let usage = matches!(
            e,
            Error::UnknownSpecies { .. }
                | Error::Unsupported { .. }
                | Error::CatalogParse { .. }
                | Error::InvalidArgument { .. }
        );
        if usage {
            CliError::Usage(e.to_string())
        } else {
            CliError::Computation(e.to_string())
        }
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its output; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let result = load_catalog(&cli).and_then(|catalog| execute(&cli.command, &catalog));
    match result {
        Ok(payload) => {
            let text = render(&payload, cli.format);
            match out.write_all(text.as_bytes()) {
                Ok(()) => EXIT_OK,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    EXIT_COMPUTATION
                }
            }
        }
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Computation(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_COMPUTATION
        }
    }
}

fn load_catalog(cli: &Cli) -> Result<Catalog, CliError> {
    let mut catalog = Catalog::builtin();
    if let Some(path) = &cli.catalog {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read catalog {}: {e}", path.display())))?;
        catalog.merge(Catalog::parse_user(&text)?);
    }
    Ok(catalog)
}

fn render(payload: &Payload, format: Format) -> String {
    match format {
        Format::Json => {
            let rows: Vec<Value> = payload
                .rows
                .iter()
                .map(|row| {
                    Value::Object(
                        row.iter()
                            .map(|(k, c)| (k.to_string(), c.json()))
                            .collect::<Map<_, _>>(),
                    )
                })
                .collect();
            let doc = OutputDocument {
                schema_version: SCHEMA_VERSION.to_string(),
                command: payload.command.to_string(),
                inputs: payload.inputs.clone(),
                results: json!({ "rows": rows }),
                assumptions: payload.assumptions.clone(),
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("document serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::new();
            if let Some(first) = payload.rows.first() {
                let header: Vec<&str> = first.iter().map(|(k, _)| *k).collect();
                s.push_str(&header.join(","));
                s.push('\n');
            }
            for row in &payload.rows {
                let line: Vec<String> = row.iter().map(|(_, c)| c.csv()).collect();
                s.push_str(&line.join(","));
                s.push('\n');
            }
            s
        }
    }
}

fn execute(command: &Command, catalog: &Catalog) -> Result<Payload, CliError> {
    match command {
        Command::Levels {
            species,
            at_r,
            coupling_ev,
        } => levels(catalog.get(species)?, *at_r, *coupling_ev),
        Command::Curve {
            species,
            term,
            r_min,
            r_max,
            steps,
        } => curve(
            catalog.get(species)?,
            (*term).into(),
            *r_min,
            *r_max,
            *steps,
        ),
        Command::Table => table(catalog),
        Command::Lifetime {
            species,
            photon_energy,
        } => lifetime(catalog.get(species)?, *photon_energy),
        Command::Geometry { species } => geometry(catalog.get(species)?),
        Command::Report {
            species,
            photon_energy,
        } => report(catalog.get(species)?, *photon_energy),
    }
}

fn positive(name: &str, v: Option<f64>) -> Result<(), CliError> {
    match v {
        Some(x) if !(x > 0.0 && x.is_finite()) => Err(CliError::Usage(format!(
            "--{name} must be positive, got {x}"
        ))),
        _ => Ok(()),
    }
}

fn term_of(block: BlockAxis) -> TermSymbol {
    TermSymbol::for_block(block)
}

fn levels(
    record: &SpeciesRecord,
    at_r: Option<f64>,
    coupling_ev: Option<f64>,
) -> Result<Payload, CliError> {
    positive("at-R", at_r)?;
    positive("coupling-ev", coupling_ev)?;
    let coupling = record.coupling()?;
    let case = record.model.basis_case();
    let mut rows = Vec::new();
    for axis in Axis::ALL {
        let spectrum = solve_block(&build_block(case, axis, 1.0)?)?;
        let term = term_of(spectrum.block_axis);
        let (a_ev, r_eval) = match (coupling_ev, at_r) {
            (Some(a), _) => (a, None),
            (None, Some(r)) => (coupling.value * HARTREE_EV / r.powi(3), Some(r)),
            (None, None) => {
                let r0 = record.molecular_state(term)?.geometry.r0;
                (coupling.value * HARTREE_EV / r0.powi(3), Some(r0))
            }
        };
        for level in &spectrum.levels {
            let bound = spectrum
                .term_labels
                .iter()
                .find(|(v, _)| *v == level.value_in_a);
            rows.push(vec![
                ("block", Cell::Text(axis.symbol().to_string())),
                ("level_A", Cell::Num(level.value_in_a)),
                ("degeneracy", Cell::Int(level.degeneracy as i64)),
                ("A_eV", Cell::Num(a_ev)),
                ("energy_eV", Cell::Num(level.value_in_a * a_ev)),
                ("R_bohr", Cell::opt(r_eval)),
                (
                    "term",
                    bound.map_or(Cell::Empty, |(_, t)| Cell::Text(t.ascii().to_string())),
                ),
            ]);
        }
    }
    Ok(Payload {
        command: "levels",
        inputs: json!({ "species": record.name, "at_R_bohr": at_r, "coupling_eV": coupling_ev }),
        rows,
        assumptions: record.assumptions(),
    })
}

fn curve(
    record: &SpeciesRecord,
    term: TermSymbol,
    r_min: f64,
    r_max: f64,
    steps: usize,
) -> Result<Payload, CliError> {
    if !(r_min > 0.0 && r_min.is_finite()) {
        return Err(CliError::Usage(format!(
            "R_min must be positive, got {r_min}"
        )));
    }
    if !(r_max > r_min && r_max.is_finite()) {
        return Err(CliError::Usage(format!(
            "R_max must exceed R_min, got [{r_min}, {r_max}]"
        )));
    }
    if steps < 2 {
        return Err(CliError::Usage(format!(
            "steps must be at least 2, got {steps}"
        )));
    }
    let state = record.molecular_state(term)?;
    let grid: Vec<f64> = (0..steps)
        .map(|i| {
            if i == steps - 1 {
                r_max
            } else {
                r_min + (r_max - r_min) * i as f64 / (steps - 1) as f64
            }
        })
        .collect();
    let rows = potential_curve(&state, &grid)?
        .into_iter()
        .map(|p| {
            vec![
                ("R_bohr", Cell::Num(p.r_bohr)),
                ("R_angstrom", Cell::Num(length_bohr_to_angstrom(p.r_bohr))),
                ("U_eV", Cell::Num(p.energy_ev)),
                ("hard_wall", Cell::Bool(p.hard_wall)),
            ]
        })
        .collect();
    Ok(Payload {
        command: "curve",
        inputs: json!({
            "species": record.name,
            "term": term.key(),
            "R_min_bohr": r_min,
            "R_max_bohr": r_max,
            "steps": steps,
            "R0_bohr": state.geometry.r0,
        }),
        rows,
        assumptions: record.assumptions(),
    })
}

fn table(catalog: &Catalog) -> Result<Payload, CliError> {
    let mut rows = Vec::new();
    let mut assumptions: Vec<String> = Vec::new();
    for record in catalog.records() {
        let full = TableRow::from_record(record)?;
        let r = full.rounded();
        rows.push(vec![
            ("atom", Cell::Text(full.atom.clone())),
            ("model", Cell::Text(record.model.to_string())),
            ("n", Cell::Int(full.n as i64)),
            (
                "r_at_angstrom",
                r.r_at_angstrom.map_or(Cell::Empty, |v| Cell::Fixed(v, 3)),
            ),
            ("R_xy_bohr", Cell::Fixed(r.r_xy_bohr, 2)),
            ("E_xy_eV", Cell::Fixed(r.e_xy_ev, 2)),
            ("R_z_bohr", Cell::Fixed(r.r_z_bohr, 2)),
            ("E_z_eV", Cell::Fixed(r.e_z_ev, 2)),
            ("R_xy_bohr_full", Cell::Num(full.r_xy_bohr)),
            ("E_xy_eV_full", Cell::Num(full.e_xy_ev)),
            ("R_z_bohr_full", Cell::Num(full.r_z_bohr)),
            ("E_z_eV_full", Cell::Num(full.e_z_ev)),
        ]);
        for a in record.assumptions() {
            let tagged = match record.model {
                SpeciesModel::AlkaliRadius => format!("alkali: {a}"),
                _ => format!("{}: {a}", record.name),
            };
            if !assumptions.contains(&tagged) {
                assumptions.push(tagged);
            }
        }
    }
    Ok(Payload {
        command: "table",
        inputs: json!({ "species": catalog.names() }),
        rows,
        assumptions,
    })
}

fn lifetime(record: &SpeciesRecord, photon_energy: Option<f64>) -> Result<Payload, CliError> {
    positive("photon-energy", photon_energy)?;
    if record.model != SpeciesModel::HeliumTwoElectron {
        return Err(Error::Unsupported {
            species: record.name.clone(),
            what: "transition dipoles (helium model only)",
        }
        .into());
    }
    let charges = record.charges.unwrap_or_default();
    let photon = photon_energy.unwrap_or_else(crate::observables::excitation_energy_helium);
    let multipole = multipole_suppression(photon, RADIATOR_SIZE_ANGSTROM)?;
    let mut rows = Vec::new();
    for term in [TermSymbol::PiU, TermSymbol::SigmaG] {
        let bound = helium_bound_state(term)?;
        let axis = bound.labels[0].axis;
        let d = transition_dipole_helium(&bound, &charges)?[axis.index()];
        let rate = radiative_rate(photon, d)?;
        let forbidden = rate.lifetime_s.is_none();
        rows.push(vec![
            ("term", Cell::Text(term.ascii().to_string())),
            ("transition_dipole_ea", Cell::Num(d)),
            ("photon_energy_eV", Cell::Num(photon)),
            ("rate_per_s", Cell::Num(rate.rate_per_s)),
            ("lifetime_s", Cell::opt(rate.lifetime_s)),
            (
                "reference_lifetime_s",
                if forbidden {
                    Cell::Empty
                } else {
                    Cell::Num(REFERENCE_SIGMA_G_LIFETIME_S)
                },
            ),
            (
                "lifetime_ratio",
                Cell::opt(rate.lifetime_s.map(|t| t / REFERENCE_SIGMA_G_LIFETIME_S)),
            ),
            (
                "status",
                Cell::Text(
                    if forbidden {
                        "dipole-forbidden"
                    } else {
                        "dipole-allowed"
                    }
                    .into(),
                ),
            ),
            ("metastable", Cell::Bool(forbidden)),
            (
                "metastable_lower_bound_s",
                if forbidden {
                    Cell::Num(METASTABLE_LOWER_BOUND_S)
                } else {
                    Cell::Empty
                },
            ),
            (
                "ka0",
                if forbidden {
                    Cell::Num(multipole.ka0)
                } else {
                    Cell::Empty
                },
            ),
            (
                "suppression",
                if forbidden {
                    Cell::Num(multipole.suppression)
                } else {
                    Cell::Empty
                },
            ),
            (
                "multipole_lifetime_s",
                if forbidden {
                    Cell::Num(multipole.metastable_lifetime_s)
                } else {
                    Cell::Empty
                },
            ),
        ]);
    }
    let mut assumptions = record.assumptions();
    assumptions.push(format!(
        "multipole estimate uses radiator size {RADIATOR_SIZE_ANGSTROM} Angstrom and a 1e-9 s dipole lifetime"
    ));
    Ok(Payload {
        command: "lifetime",
        inputs: json!({ "species": record.name, "photon_energy_eV": photon }),
        rows,
        assumptions,
    })
}

fn geometry(record: &SpeciesRecord) -> Result<Payload, CliError> {
    let mut rows = Vec::new();
    for term in [TermSymbol::PiU, TermSymbol::SigmaG] {
        let g = record.molecular_state(term)?.geometry;
        rows.push(vec![
            ("term", Cell::Text(term.ascii().to_string())),
            (
                "surface",
                Cell::Text(match g.kind {
                    LobeKind::Perpendicular => "perpendicular".into(),
                    LobeKind::Axial => "axial".into(),
                }),
            ),
            ("sphere_radius_bohr", Cell::Num(g.sphere_radius)),
            ("lobe_amplitude_bohr", Cell::Num(g.lobe_amplitude)),
            ("R0_bohr", Cell::Num(g.r0)),
            ("R0_angstrom", Cell::Num(length_bohr_to_angstrom(g.r0))),
            ("theta_deg", Cell::Num(g.theta_contact_deg)),
        ]);
    }
    Ok(Payload {
        command: "geometry",
        inputs: json!({ "species": record.name }),
        rows,
        assumptions: record.assumptions(),
    })
}

fn report(record: &SpeciesRecord, photon_energy: Option<f64>) -> Result<Payload, CliError> {
    positive("photon-energy", photon_energy)?;
    let rep = full_report(
        record,
        ReportOptions {
            photon_energy_ev: photon_energy,
        },
    )?;
    let rows = rep
        .states
        .iter()
        .map(|s| {
            let (kind, seconds) = match s.lifetime {
                Lifetime::Finite { seconds } => ("finite", Some(seconds)),
                Lifetime::Metastable { lower_bound_s } => {
                    ("metastable_lower_bound", Some(lower_bound_s))
                }
                Lifetime::NotModeled => ("not_modeled", None),
            };
            vec![
                ("species", Cell::Text(rep.species.clone())),
                ("term", Cell::Text(s.term.ascii().to_string())),
                ("R0_bohr", Cell::Num(s.r0_bohr)),
                ("theta_deg", Cell::Num(s.theta_deg)),
                ("binding_energy_eV", Cell::Num(s.binding_energy_ev)),
                ("transition_dipole_ea", Cell::opt(s.transition_dipole_ea)),
                ("lifetime_kind", Cell::Text(kind.into())),
                ("lifetime_s", Cell::opt(seconds)),
                (
                    "molecule_size_angstrom",
                    Cell::Num(rep.molecule_size.r_m_angstrom),
                ),
                (
                    "cross_section_ratio",
                    Cell::opt(rep.molecule_size.cross_section_ratio),
                ),
                ("excitation_energy_eV", Cell::opt(rep.excitation_energy_ev)),
            ]
        })
        .collect();
    Ok(Payload {
        command: "report",
        inputs: json!({ "species": record.name, "photon_energy_eV": photon_energy }),
        rows,
        assumptions: rep.assumptions,
    })
}
