//! Acceptance criteria; one PASS/FAIL line per criterion.

mod common;

use common::{numeric_parity, quasimol};
use quasimol::catalog::{
    get_species, helium_bound_state, reproduce_table, round_to, Catalog, TableRow,
};
use quasimol::constants::{ATOMIC_TIME_S, HARTREE_EV, SPEED_OF_LIGHT_AU};
use quasimol::geometry::{contact_distance, LobeKind};
use quasimol::integrals::{
    dipole_s_p, helium_coupling, one_electron_coupling, overlap_s_s, radial_dipole_integral,
    radial_moment,
};
use quasimol::linalg::jacobi_eigen;
use quasimol::observables::{
    molecule_size, multipole_suppression, radiative_rate, sigma_g_dipole_closed_form,
    transition_dipole_helium, REFERENCE_SIGMA_G_LIFETIME_S,
};
use quasimol::orbitals::{Angular, Axis, EffectiveCharges, OrbitalSpec};
use quasimol::quadrature::{integrate_semi_infinite, Tolerance};
use quasimol::secular::{build_block, build_full, solve_block, BasisCase, TermSymbol};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn within(name: &str, got: f64, want: f64, tol: f64) -> Result<String, String> {
    if (got - want).abs() <= tol {
        Ok(format!("{name}={got:.6}"))
    } else {
        Err(format!("{name}={got:.6}, expected {want} ± {tol}"))
    }
}

fn all(parts: Vec<Check>) -> Check {
    let mut ok = Vec::new();
    for p in parts {
        ok.push(p?);
    }
    Ok(ok.join(" "))
}

fn fail<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn sorted_levels(case: BasisCase, axis: Axis, a: f64) -> Result<Vec<f64>, String> {
    let spectrum = solve_block(&build_block(case, axis, a).map_err(fail)?).map_err(fail)?;
    Ok(spectrum.eigenvalues_in_a.iter().map(|v| v * a).collect())
}

fn criterion_1() -> Check {
    let c = helium_coupling(&EffectiveCharges::new(27.0 / 16.0, 2.0, 0.5).map_err(fail)?);
    within("c", c.value, 0.0600, 0.0005)
}

fn criterion_2() -> Check {
    let a = 0.731;
    let expect = |case, axis| -> Vec<f64> {
        let k = match (case, axis) {
            (BasisCase::Helium12, Axis::Z) => 4.0,
            (BasisCase::Helium12, _) => 2.0,
            (BasisCase::OneElectron6, Axis::Z) => 2.0,
            (BasisCase::OneElectron6, _) => 1.0,
        };
        match case {
            BasisCase::Helium12 => vec![-k * a, 0.0, 0.0, k * a],
            BasisCase::OneElectron6 => vec![-k * a, k * a],
        }
    };
    let mut worst: f64 = 0.0;
    for case in [BasisCase::Helium12, BasisCase::OneElectron6] {
        for axis in Axis::ALL {
            let got = sorted_levels(case, axis, a)?;
            let want = expect(case, axis);
            if got.len() != want.len() {
                return Err(format!("{case:?} {axis:?}: {} levels", got.len()));
            }
            for (g, w) in got.iter().zip(&want) {
                worst = worst.max((g - w).abs() / a);
            }
        }
    }
    if worst <= 1e-10 {
        Ok(format!("max relative deviation {worst:.1e}"))
    } else {
        Err(format!("max relative deviation {worst:.1e}"))
    }
}

fn criterion_3() -> Check {
    let he_s = 16.0 / 27.0;
    let he = contact_distance(he_s, 4.0, LobeKind::Perpendicular).map_err(fail)?;
    let he_z = contact_distance(he_s, 4.0, LobeKind::Axial).map_err(fail)?;
    let h = contact_distance(1.0, 4.0, LobeKind::Perpendicular).map_err(fail)?;
    let h_z = contact_distance(1.0, 4.0, LobeKind::Axial).map_err(fail)?;
    all(vec![
        within("He_R0", he.r0, 1.203, 0.005),
        within("He_theta", he.theta_contact_deg, 28.4, 0.3),
        within("He_Rz", he_z.r0, 4.593, 0.001),
        within("H_R0", h.r0, 1.76, 0.01),
        within("H_theta", h.theta_contact_deg, 32.8, 0.3),
        within("H_Rz", h_z.r0, 5.0, 1e-9),
    ])
}

fn binding(species: &str, term: TermSymbol) -> Result<f64, String> {
    let state = get_species(species)
        .map_err(fail)?
        .molecular_state(term)
        .map_err(fail)?;
    Ok(quasimol::observables::binding_energy(&state))
}

fn criterion_4() -> Check {
    all(vec![
        within("He_Pi", binding("He", TermSymbol::PiU)?, -1.875, 0.005),
        within(
            "He_Sigma",
            binding("He", TermSymbol::SigmaG)?,
            -0.067,
            0.002,
        ),
        within("H_Pi", binding("H", TermSymbol::PiU)?, -2.77, 0.01),
        within("H_Sigma", binding("H", TermSymbol::SigmaG)?, -0.24, 0.01),
    ])
}

fn criterion_5() -> Check {
    let s = OrbitalSpec::hydrogenic(1, 0, 1.0, Angular::S).map_err(fail)?;
    let p = OrbitalSpec::hydrogenic(2, 1, 1.0, Angular::P(Axis::Z)).map_err(fail)?;
    let radial = radial_dipole_integral(&s, &p).map_err(fail)?;
    all(vec![
        within("I", radial, 128.0 * 6f64.sqrt() / 243.0, 1e-9),
        within("c", one_electron_coupling(radial).value, 0.555, 0.001),
    ])
}

fn criterion_6() -> Check {
    let printed: [(&str, u32, f64, [f64; 4]); 5] = [
        ("Li", 2, 1.520, [3.70, -0.54, 5.75, -0.29]),
        ("Na", 3, 1.858, [4.53, -0.29, 7.02, -0.16]),
        ("K", 4, 2.272, [5.54, -0.16, 8.59, -0.09]),
        ("Rb", 5, 2.475, [6.03, -0.12, 9.36, -0.07]),
        ("Cs", 6, 2.655, [6.47, -0.10, 10.04, -0.05]),
    ];
    let rows = reproduce_table().map_err(fail)?;
    if rows.len() != printed.len() {
        return Err(format!("{} rows", rows.len()));
    }
    let mut cells = 0;
    for (row, (atom, n, r_at, want)) in rows.iter().zip(printed) {
        let got = [row.r_xy_bohr, row.e_xy_ev, row.r_z_bohr, row.e_z_ev].map(|v| round_to(v, 2));
        if row.atom != atom || row.n != n || row.r_at_angstrom != Some(r_at) {
            return Err(format!("metadata mismatch for {atom}"));
        }
        for (g, w) in got.iter().zip(want) {
            if *g != w {
                return Err(format!("{atom}: {got:?} vs {want:?}"));
            }
            cells += 1;
        }
    }
    Ok(format!("{cells}/20 cells exact"))
}

fn criterion_7() -> Check {
    let charges = EffectiveCharges::default();
    let pi = transition_dipole_helium(
        &helium_bound_state(TermSymbol::PiU).map_err(fail)?,
        &charges,
    )
    .map_err(fail)?;
    let sigma = transition_dipole_helium(
        &helium_bound_state(TermSymbol::SigmaG).map_err(fail)?,
        &charges,
    )
    .map_err(fail)?;
    if pi != [0.0; 3] {
        return Err(format!("Pi_u dipole {pi:?}"));
    }
    all(vec![
        Ok("Pi_u=0".to_string()),
        within("Sigma_g", sigma[2], -0.490, 0.002),
        within(
            "closed_form",
            -sigma_g_dipole_closed_form(&charges),
            sigma[2],
            1e-12,
        ),
    ])
}

fn criterion_8() -> Check {
    let photon = 21.22;
    let d = sigma_g_dipole_closed_form(&EffectiveCharges::default());
    // Einstein coefficient in atomic units, converted to seconds.
    let omega = photon / HARTREE_EV;
    let w_au = 4.0 * omega.powi(3) * d * d / (3.0 * SPEED_OF_LIGHT_AU.powi(3));
    let tau_oracle = ATOMIC_TIME_S / w_au;
    let tau = radiative_rate(photon, d)
        .map_err(fail)?
        .lifetime_s
        .ok_or("no lifetime")?;
    let rel = (tau - tau_oracle).abs() / tau_oracle;
    if rel > 1e-6 {
        return Err(format!("tau={tau:e} vs oracle {tau_oracle:e}"));
    }
    let ratio = tau / REFERENCE_SIGMA_G_LIFETIME_S;
    if !(1.0 / 3.0..=3.0).contains(&ratio) {
        return Err(format!("ratio to reference {ratio}"));
    }
    let m = multipole_suppression(20.0, 1.0).map_err(fail)?;
    if !(m.suppression > 0.5e-4 && m.suppression < 2e-4) {
        return Err(format!("(ka0)^2={:e}", m.suppression));
    }
    if !(m.metastable_lifetime_s > 1e-6 && m.metastable_lifetime_s < 1e-4) {
        return Err(format!("metastable {:e} s", m.metastable_lifetime_s));
    }
    Ok(format!(
        "tau={tau:.3e}s ratio={ratio:.2} (ka0)^2={:.2e} tau_meta={:.1e}s",
        m.suppression, m.metastable_lifetime_s
    ))
}

fn criterion_9() -> Check {
    let size = |name: &str| -> Result<f64, String> {
        let rec = get_species(name).map_err(fail)?;
        let rz = rec
            .molecular_state(TermSymbol::SigmaG)
            .map_err(fail)?
            .geometry
            .r0;
        Ok(molecule_size(rz, rec.atomic_radius_angstrom)
            .map_err(fail)?
            .r_m_angstrom)
    };
    let li = size("Li")?;
    let cs = size("Cs")?;
    let bracket = li <= 6.0 * 1.1 && cs >= 10.0 * 0.9;
    if !bracket {
        return Err(format!("Li={li:.2} Cs={cs:.2} do not bracket 6-10 A"));
    }
    all(vec![
        within("Li", li, 6.1, 0.1),
        within("Cs", cs, 10.6, 0.1),
    ])
}

fn lu_det(mut m: Vec<Vec<f64>>) -> f64 {
    let n = m.len();
    let mut det = 1.0;
    for k in 0..n {
        let p = (k..n)
            .max_by(|&a, &b| m[a][k].abs().total_cmp(&m[b][k].abs()))
            .unwrap();
        if m[p][k] == 0.0 {
            return 0.0;
        }
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        det *= m[k][k];
        let pivot = m[k].clone();
        for row in m.iter_mut().skip(k + 1) {
            let f = row[k] / pivot[k];
            for (x, p) in row.iter_mut().zip(&pivot).skip(k) {
                *x -= f * p;
            }
        }
    }
    det
}

fn criterion_10() -> Check {
    // eigenvalues of the full matrix vs the union of block quartic roots
    let a = 0.05998;
    let (_, full) = build_full(BasisCase::Helium12, a).map_err(fail)?;
    let eig = jacobi_eigen(&full).map_err(fail)?;
    let mut roots: Vec<f64> = [2.0, 2.0, 4.0]
        .iter()
        .flat_map(|k| [-k * a, 0.0, 0.0, k * a])
        .collect();
    roots.sort_by(f64::total_cmp);
    let eig_dev = eig
        .values
        .iter()
        .zip(&roots)
        .map(|(g, w)| (g - w).abs())
        .fold(0.0, f64::max);
    if eig_dev > 1e-10 * a {
        return Err(format!("eigenvalue deviation {eig_dev:e}"));
    }
    for lambda in [-0.3, -0.17, 0.05, 0.11, 0.29] {
        let mut m = full.rows();
        for (i, row) in m.iter_mut().enumerate() {
            row[i] -= lambda;
        }
        let q = |k: f64| lambda * lambda * (lambda * lambda - k * k * a * a);
        let want = q(2.0).powi(2) * q(4.0);
        let got = lu_det(m);
        if (got - want).abs() > 1e-9 * want.abs() {
            return Err(format!("det at {lambda}: {got:e} vs {want:e}"));
        }
    }

    // contact solver vs exhaustive grid scan (A at origin, B at (0, R))
    let (s, l) = (16.0 / 27.0, 4.0);
    let g = contact_distance(s, l, LobeKind::Perpendicular).map_err(fail)?;
    let n_theta = 10_000;
    let pts: Vec<(f64, f64)> = (0..=n_theta)
        .map(|j| {
            let t = std::f64::consts::FRAC_PI_2 * j as f64 / n_theta as f64;
            let rho = l * t.sin().powi(2);
            (rho * t.sin(), rho * t.cos())
        })
        .collect();
    let h = 1e-4;
    let touches = |r: f64| pts.iter().any(|&(x, z)| x.hypot(r - z) <= s);
    let mut r = 1.0;
    while touches(r) {
        r += h;
    }
    if !(r >= g.r0 && r - g.r0 <= h + 1e-9) {
        return Err(format!("grid contact {r} vs solver {}", g.r0));
    }

    // closed-form integrals vs adaptive quadrature
    let tol = Tolerance {
        absolute: 1e-14,
        relative: 1e-12,
        ..Tolerance::default()
    };
    let quad = |f: &dyn Fn(f64) -> f64| {
        integrate_semi_infinite(f, 0.0, tol)
            .map(|i| i.value)
            .map_err(fail)
    };
    let slater = |z: f64, r: f64| 2.0 * z.powf(1.5) * (-z * r).exp();
    let ch = EffectiveCharges::default();
    let p = ch.excited_orbital(Axis::Z);
    let s_orb = ch.ground_orbital();
    let mut worst: f64 = 0.0;
    let mut rel = |closed: f64, q: f64| worst = worst.max((closed - q).abs() / q.abs());
    rel(
        overlap_s_s(ch.alpha, ch.beta).map_err(fail)?,
        quad(&|r| slater(ch.alpha, r) * slater(ch.beta, r) * r * r)?,
    );
    let radial = quad(&|r| s_orb.radial_function(r) * p.radial_function(r) * r.powi(3))?;
    rel(radial_moment(&s_orb, &p, 3), radial);
    rel(
        dipole_s_p(ch.alpha, &p, Axis::Z).map_err(fail)?,
        radial / 3f64.sqrt(),
    );
    let h1s = OrbitalSpec::hydrogenic(1, 0, 1.0, Angular::S).map_err(fail)?;
    let h2p = OrbitalSpec::hydrogenic(2, 1, 1.0, Angular::P(Axis::Z)).map_err(fail)?;
    rel(
        128.0 * 6f64.sqrt() / 243.0,
        quad(&|r| h1s.radial_function(r) * h2p.radial_function(r) * r.powi(3))?,
    );
    if worst > 1e-8 {
        return Err(format!("integral deviation {worst:e}"));
    }
    Ok(format!(
        "eig dev {eig_dev:.1e}, grid R0 {r:.4} vs {:.4}, integral dev {worst:.1e}",
        g.r0
    ))
}

fn criterion_11() -> Check {
    // geometry covariance
    for (s, l) in [(16.0 / 27.0, 4.0), (1.0, 4.0), (2.873, 2.873)] {
        for kind in [LobeKind::Perpendicular, LobeKind::Axial] {
            let base = contact_distance(s, l, kind).map_err(fail)?;
            for k in [0.5, 3.0, 17.0] {
                let scaled = contact_distance(k * s, k * l, kind).map_err(fail)?;
                if (scaled.r0 - k * base.r0).abs() > 1e-8 * k * base.r0
                    || (scaled.theta_contact_deg - base.theta_contact_deg).abs() > 1e-4
                {
                    return Err(format!(
                        "scale {k} breaks covariance for ({s}, {l}, {kind:?})"
                    ));
                }
            }
        }
    }
    // linearity in A
    for case in [BasisCase::Helium12, BasisCase::OneElectron6] {
        for axis in Axis::ALL {
            let unit = sorted_levels(case, axis, 1.0)?;
            for a in [0.01, 2.5, 40.0] {
                let got = sorted_levels(case, axis, a)?;
                if got
                    .iter()
                    .zip(&unit)
                    .any(|(g, u)| (g - a * u).abs() > 1e-12 * a)
                {
                    return Err(format!("levels not linear in A for {case:?} {axis:?}"));
                }
            }
        }
    }
    // E^3 and |d|^2 scaling of the rate
    let base = radiative_rate(21.22, 0.49).map_err(fail)?.rate_per_s;
    let e2 = radiative_rate(2.0 * 21.22, 0.49).map_err(fail)?.rate_per_s;
    let d3 = radiative_rate(21.22, 3.0 * 0.49).map_err(fail)?.rate_per_s;
    if ((e2 / base) - 8.0).abs() > 1e-12 * 8.0 || ((d3 / base) - 9.0).abs() > 1e-12 * 9.0 {
        return Err(format!("rate scaling {} {}", e2 / base, d3 / base));
    }
    // cubic-law identity on every species
    let catalog = Catalog::builtin();
    for rec in catalog.records() {
        let row = TableRow::from_record(rec).map_err(fail)?;
        let lhs = row.e_z_ev / row.e_xy_ev;
        let rhs = 2.0 * (row.r_xy_bohr / row.r_z_bohr).powi(3);
        if (lhs - rhs).abs() > 1e-10 * rhs {
            return Err(format!("{}: {lhs} vs {rhs}", rec.name));
        }
    }
    Ok(format!(
        "covariance, linearity, rate scaling, cubic law on {} species",
        catalog.records().len()
    ))
}

fn criterion_12() -> Check {
    let commands: [&[&str]; 6] = [
        &["levels", "He", "--at-R", "4.6"],
        &["curve", "He", "sigma_g", "4.6", "20", "100"],
        &["table"],
        &["lifetime", "He"],
        &["geometry", "H"],
        &["report", "K"],
    ];
    let mut numbers = 0;
    for args in commands {
        let mut texts = Vec::new();
        for format in ["csv", "json"] {
            let mut full = args.to_vec();
            full.extend(["--format", format]);
            let a = quasimol(&full);
            let b = quasimol(&full);
            if a.code != 0 {
                return Err(format!("{full:?} exited {}: {}", a.code, a.stderr));
            }
            if a.stdout != b.stdout {
                return Err(format!("{full:?} not byte-identical"));
            }
            texts.push(String::from_utf8(a.stdout).map_err(fail)?);
        }
        numbers += numeric_parity(&texts[0], &texts[1]).map_err(|e| format!("{args:?}: {e}"))?;
    }
    Ok(format!(
        "{} commands byte-identical, {numbers} numbers at parity",
        commands.len()
    ))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("helium coupling coefficient", criterion_1),
        ("secular spectra", criterion_2),
        ("equilibrium geometry", criterion_3),
        ("binding energies", criterion_4),
        ("hydrogen coupling", criterion_5),
        ("alkali table", criterion_6),
        ("transition dipoles", criterion_7),
        ("lifetimes", criterion_8),
        ("molecule sizes", criterion_9),
        ("oracle equivalence", criterion_10),
        ("invariance suite", criterion_11),
        ("determinism and parity", criterion_12),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let result = check();
        let ms = start.elapsed().as_secs_f64() * 1e3;
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({ms:.0} ms)", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {detail} ({ms:.0} ms)", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
