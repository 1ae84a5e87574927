// Hard-wall plus -kA potential curve for the helium Sigma_g state.

use quasimol::catalog::get_species;
use quasimol::observables::potential_curve;
use quasimol::secular::TermSymbol;

pub fn run_example() -> quasimol::Result<()> {
    let state = get_species("He")?.molecular_state(TermSymbol::SigmaG)?;
    let grid: Vec<f64> = (0..12).map(|i| 3.5 + 0.5 * i as f64).collect();
    for p in potential_curve(&state, &grid)? {
        if p.hard_wall {
            println!("R = {:5.2} a   wall", p.r_bohr);
        } else {
            println!("R = {:5.2} a   U = {:+.5} eV", p.r_bohr, p.energy_ev);
        }
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
