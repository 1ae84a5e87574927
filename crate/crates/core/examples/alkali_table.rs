// Equilibrium distances and well depths for the alkali atoms.

use quasimol::catalog::reproduce_table;

pub fn run_example() -> quasimol::Result<()> {
    println!("atom  n  r_at/A  R_xy/a  E_xy/eV  R_z/a  E_z/eV");
    for row in reproduce_table()? {
        println!(
            "{:<4} {:>2}  {:.3}   {:.2}   {:.2}    {:.2}   {:.2}",
            row.atom,
            row.n,
            row.r_at_angstrom.unwrap_or(f64::NAN),
            row.r_xy_bohr,
            row.e_xy_ev,
            row.r_z_bohr,
            row.e_z_ev
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
