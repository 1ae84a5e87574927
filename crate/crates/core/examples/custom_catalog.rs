// Adding species from a user catalog and driving the CLI in-process.

use quasimol::catalog::Catalog;

const USER_CATALOG: &str = "\
# name model n value
Fr alkali 7 2.70
He* helium 1 27/16,2,1/2
";

pub fn run_example() -> quasimol::Result<()> {
    let mut catalog = Catalog::builtin();
    catalog.merge(Catalog::parse_user(USER_CATALOG)?);
    println!("species: {}", catalog.names().join(", "));

    let path = std::env::temp_dir().join(format!("quasimol-example-{}.cat", std::process::id()));
    std::fs::write(&path, USER_CATALOG).expect("temp dir is writable");
    let args = [
        "quasimol",
        "--catalog",
        path.to_str().unwrap(),
        "--format",
        "csv",
        "geometry",
        "Fr",
    ];
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = quasimol::cli::run(args, &mut out, &mut err);
    let _ = std::fs::remove_file(&path);
    print!("{}", String::from_utf8_lossy(&out));
    eprint!("{}", String::from_utf8_lossy(&err));
    assert_eq!(code, 0);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
