// Radial density maxima that set the rigid surfaces used for contact.

use quasimol::orbitals::{radial_density_max, Axis, EffectiveCharges};

pub fn run_example() -> quasimol::Result<()> {
    let charges = EffectiveCharges::default();
    let ground = radial_density_max(&charges.ground_orbital())?;
    let excited = radial_density_max(&charges.excited_orbital(Axis::Z))?;
    println!("He 1s (alpha = 27/16): r_max = {ground:.6} a");
    println!("He 2p (gamma = 1/2):   r_max = {excited:.6} a");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
