// End-to-end report for every built-in species, as JSON.

use quasimol::catalog::{full_report, Catalog, ReportOptions};

pub fn run_example() -> quasimol::Result<()> {
    for record in Catalog::builtin().records() {
        let report = full_report(record, ReportOptions::default())?;
        println!(
            "{}",
            serde_json::to_string(&report).expect("report serializes")
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
