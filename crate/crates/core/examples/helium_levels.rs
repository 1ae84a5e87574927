// Helium coupling constant and the secular spectrum of each axis block.

use quasimol::integrals::helium_coupling;
use quasimol::orbitals::{Axis, EffectiveCharges};
use quasimol::secular::{build_block, solve_block, BasisCase};

pub fn run_example() -> quasimol::Result<()> {
    let charges = EffectiveCharges::default();
    let coupling = helium_coupling(&charges);
    println!("A = {:.5} e^2 a^2 / R^3", coupling.value);

    for axis in Axis::ALL {
        let spectrum = solve_block(&build_block(BasisCase::Helium12, axis, 1.0)?)?;
        let levels: Vec<String> = spectrum
            .levels
            .iter()
            .map(|l| format!("{:+}A x{}", l.value_in_a, l.degeneracy))
            .collect();
        let bound = spectrum
            .term_labels
            .first()
            .map(|(_, t)| t.to_string())
            .unwrap_or_default();
        println!("{}: {}  bound {}", axis.symbol(), levels.join(", "), bound);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
