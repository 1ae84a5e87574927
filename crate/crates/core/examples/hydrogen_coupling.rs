// Hydrogen 1s-2p radial dipole integral and the resulting coupling.

use quasimol::integrals::{one_electron_coupling, radial_dipole_integral};
use quasimol::orbitals::{Angular, Axis, OrbitalSpec};

pub fn run_example() -> quasimol::Result<()> {
    let s = OrbitalSpec::hydrogenic(1, 0, 1.0, Angular::S)?;
    let p = OrbitalSpec::hydrogenic(2, 1, 1.0, Angular::P(Axis::Z))?;
    let radial = radial_dipole_integral(&s, &p)?;
    let closed = 128.0 * 6f64.sqrt() / 243.0;
    println!("<1s|r|2p> = {radial:.10} a (closed form {closed:.10})");
    println!("c = {:.5}", one_electron_coupling(radial).value);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
