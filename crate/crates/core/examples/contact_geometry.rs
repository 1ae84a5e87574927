// Contact distance between a spherical ground atom and an excited p lobe.

use quasimol::geometry::{contact_distance, LobeKind};

pub fn run_example() -> quasimol::Result<()> {
    let cases = [
        ("He", 16.0 / 27.0, 4.0),
        ("H", 1.0, 4.0),
        ("universal s = L", 1.0, 1.0),
    ];
    for (name, s, l) in cases {
        let side = contact_distance(s, l, LobeKind::Perpendicular)?;
        let axial = contact_distance(s, l, LobeKind::Axial)?;
        println!(
            "{name:>16}: side-on R0 = {:.5} a at {:.2} deg, axial R0 = {:.5} a",
            side.r0, side.theta_contact_deg, axial.r0
        );
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
