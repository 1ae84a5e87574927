// Transition dipoles and radiative lifetimes of the two helium states.

use quasimol::catalog::helium_bound_state;
use quasimol::observables::{
    excitation_energy_helium, multipole_suppression, radiative_rate, transition_dipole_helium,
};
use quasimol::orbitals::EffectiveCharges;
use quasimol::secular::TermSymbol;

pub fn run_example() -> quasimol::Result<()> {
    let charges = EffectiveCharges::default();
    let photon = excitation_energy_helium();
    for term in [TermSymbol::PiU, TermSymbol::SigmaG] {
        let state = helium_bound_state(term)?;
        let d = transition_dipole_helium(&state, &charges)?;
        let rate = radiative_rate(photon, d[state.labels[0].axis.index()])?;
        match rate.lifetime_s {
            Some(t) => println!("{term}: d = {:?} e a, tau = {t:.3e} s", d),
            None => {
                let m = multipole_suppression(20.0, 1.0)?;
                println!(
                    "{term}: dipole-forbidden, (ka0)^2 = {:.2e}, tau ~ {:.1e} s",
                    m.suppression, m.metastable_lifetime_s
                );
            }
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
