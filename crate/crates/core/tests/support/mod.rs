//! Shared fixtures for the integration and acceptance targets.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::Command;

use num_integer::Integer;
use orbikit::{HodgeDiamond, InertiaComponent, OrbifoldPresentation};
use rand::seq::SliceRandom;
use rand::Rng;

pub const MAX_SECTORS: usize = 20;
pub const MAX_ORDER: u32 = 12;

/// Representatives of the orbits of `(p,q)` under `(q,p)` and `(n-p,n-q)`.
pub fn symmetry_orbits(n: u32) -> Vec<Vec<(i64, i64)>> {
    let n = n as i64;
    let mut seen = BTreeMap::new();
    for p in 0..=n {
        for q in 0..=n {
            let mut orbit = vec![(p, q), (q, p), (n - p, n - q), (n - q, n - p)];
            orbit.sort();
            orbit.dedup();
            seen.entry(orbit[0]).or_insert(orbit);
        }
    }
    seen.into_values().collect()
}

/// Builds a diamond from one value per orbit, in `symmetry_orbits` order.
pub fn diamond_from_orbit_values(n: u32, values: &[u64]) -> HodgeDiamond {
    let orbits = symmetry_orbits(n);
    assert_eq!(orbits.len(), values.len());
    let mut entries = Vec::new();
    for (orbit, &v) in orbits.iter().zip(values) {
        for &(p, q) in orbit {
            entries.push((p, q, v));
        }
    }
    HodgeDiamond::from_integer_entries(n, &entries).expect("symmetric diamond")
}

/// Hodge- and Serre-symmetric, with `h^{0,0} = h^{n,n} = 1`.
pub fn random_symmetric_diamond<R: Rng>(rng: &mut R, n: u32, max: u64) -> HodgeDiamond {
    let values: Vec<u64> = symmetry_orbits(n)
        .iter()
        .map(|orbit| if orbit[0] == (0, 0) { 1 } else { rng.gen_range(0..=max) })
        .collect();
    diamond_from_orbit_values(n, &values)
}

/// A faithful exponent vector with `k` nonzero entries, padded with zeros to `n`.
fn random_exponents<R: Rng>(rng: &mut R, n: u32, k: u32, order: u32) -> Vec<u32> {
    loop {
        let nonzero: Vec<u32> = (0..k).map(|_| rng.gen_range(1..order)).collect();
        if nonzero.iter().fold(order, |g, &a| g.gcd(&a)) != 1 {
            continue;
        }
        let mut exps = nonzero;
        exps.resize(n as usize, 0);
        exps.shuffle(rng);
        return exps;
    }
}

/// A random valid presentation: symmetric untwisted sector plus twisted
/// sectors added in inverse pairs `a -> (l - a) mod l` with a shared
/// symmetric coarse diamond.
pub fn random_presentation<R: Rng>(rng: &mut R, name: &str) -> OrbifoldPresentation {
    let n = rng.gen_range(0..=4u32);
    let mut components = vec![InertiaComponent::untwisted(random_symmetric_diamond(rng, n, 3))];
    if n >= 2 {
        let target = rng.gen_range(1..MAX_SECTORS);
        while components.len() < target {
            let order = rng.gen_range(2..=MAX_ORDER);
            let k = rng.gen_range(2..=n);
            let exps = random_exponents(rng, n, k, order);
            let inverse: Vec<u32> = exps.iter().map(|&a| (order - a) % order).collect();
            let self_inverse = inverse == exps;
            if components.len() + if self_inverse { 1 } else { 2 } > target {
                break;
            }
            let coarse = random_symmetric_diamond(rng, n - k, 2);
            components.push(InertiaComponent::new(order, exps, coarse.clone(), "random").expect("valid sector"));
            if !self_inverse {
                components.push(InertiaComponent::new(order, inverse, coarse, "random inverse").expect("valid sector"));
            }
        }
    }
    OrbifoldPresentation::new(name, n, components).expect("valid presentation")
}

/// Every symmetric diamond of dimension `n` with `h^{0,0} = 1` and total at most `max_total`.
pub fn enumerate_symmetric(n: u32, max_total: u64) -> Vec<HodgeDiamond> {
    let orbits = symmetry_orbits(n);
    let sizes: Vec<u64> = orbits.iter().map(|o| o.len() as u64).collect();
    let mut values = vec![0u64; orbits.len()];
    let mut out = Vec::new();
    let origin = orbits.iter().position(|o| o[0] == (0, 0)).unwrap();
    values[origin] = 1;
    fn rec(
        i: usize,
        used: u64,
        max: u64,
        origin: usize,
        sizes: &[u64],
        values: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if i == sizes.len() {
            out.push(values.clone());
            return;
        }
        if i == origin {
            rec(i + 1, used, max, origin, sizes, values, out);
            return;
        }
        let mut v = 0;
        while used + v * sizes[i] <= max {
            values[i] = v;
            rec(i + 1, used + v * sizes[i], max, origin, sizes, values, out);
            v += 1;
        }
        values[i] = 0;
    }
    let mut raw = Vec::new();
    rec(0, sizes[origin], max_total, origin, &sizes, &mut values, &mut raw);
    for v in raw {
        out.push(diamond_from_orbit_values(n, &v));
    }
    out
}

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_dir() -> PathBuf {
    manifest_dir().join("tests").join("golden")
}

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the installed binary from `tests/golden` with no user catalog.
pub fn run_cli(args: &[&str]) -> Output {
    run_cli_in(&golden_dir(), args, None)
}

pub fn run_cli_in(cwd: &Path, args: &[&str], catalog_dir: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_orbikit"));
    cmd.args(args)
        .current_dir(cwd)
        .env_remove(orbikit::catalog::CATALOG_DIR_ENV);
    if let Some(dir) = catalog_dir {
        cmd.env(orbikit::catalog::CATALOG_DIR_ENV, dir);
    }
    let out = cmd.output().expect("spawn orbikit");
    Output {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

/// `(golden file stem, arguments, expected exit code)`.
pub const GOLDEN_CASES: &[(&str, &[&str], i32)] = &[
    ("catalog", &["catalog"], 0),
    ("catalog_json", &["catalog", "--format", "json"], 0),
    ("diamond_kummer2", &["diamond", "kummer2"], 0),
    ("diamond_kummer3", &["diamond", "kummer3"], 0),
    ("diamond_kummer3_json", &["diamond", "kummer3", "--format", "json"], 0),
    ("diamond_kummer3_csv", &["diamond", "kummer3", "--format", "csv"], 0),
    ("diamond_kummer3_tex", &["diamond", "kummer3", "--format", "tex"], 0),
    ("diamond_p2_mu3", &["diamond", "p2_mu3"], 0),
    ("diamond_pn_trivial", &["diamond", "pn_trivial"], 0),
    ("diamond_quintic_columns", &["diamond", "quintic_columns"], 0),
    ("diamond_unknown", &["diamond", "no_such_entry"], 2),
    (
        "diamond_pseudo_reflection",
        &["diamond", "inputs/pseudo_reflection.json"],
        3,
    ),
    ("diamond_malformed", &["diamond", "inputs/malformed.json"], 2),
    ("check_kummer2", &["check", "kummer2"], 0),
    ("check_kummer3", &["check", "kummer3"], 1),
    ("check_kummer3_symmetry", &["check", "kummer3", "--serre", "--hodge"], 0),
    ("check_p2_mu3_json", &["check", "p2_mu3", "--format", "json"], 0),
    ("check_pn_trivial", &["check", "pn_trivial"], 0),
    ("check_quintic_columns", &["check", "quintic_columns"], 0),
    ("partners_reflexive", &["partners", "kummer2", "kummer2"], 0),
    ("partners_different", &["partners", "kummer2", "p2_mu3"], 1),
    (
        "partners_different_json",
        &["partners", "kummer2", "p2_mu3", "--format", "json"],
        1,
    ),
    ("partners_dim_mismatch", &["partners", "kummer2", "kummer3"], 4),
    (
        "partners_strict",
        &["partners", "quintic_columns", "quintic_columns", "--strict-dim3"],
        0,
    ),
    (
        "reconstruct_quintic",
        &[
            "reconstruct",
            "--dim",
            "3",
            "--columns",
            "3:1,2:0,1:101,0:4",
            "--h01",
            "0",
        ],
        0,
    ),
    (
        "reconstruct_quintic_json",
        &[
            "reconstruct",
            "--dim",
            "3",
            "--columns",
            "3:1,2:0,1:101,0:4",
            "--h01",
            "0",
            "--format",
            "json",
        ],
        0,
    ),
    (
        "reconstruct_k3",
        &["reconstruct", "--dim", "2", "--columns", "2:1,1:0,0:22"],
        0,
    ),
    (
        "reconstruct_odd",
        &[
            "reconstruct",
            "--dim",
            "3",
            "--columns",
            "3:1,2:1,1:0,0:4",
            "--h01",
            "0",
        ],
        1,
    ),
    (
        "reconstruct_dim4",
        &["reconstruct", "--dim", "4", "--columns", "0:2"],
        5,
    ),
    (
        "reconstruct_bad_syntax",
        &["reconstruct", "--dim", "2", "--columns", "2=1"],
        2,
    ),
    ("columns_kummer2", &["columns", "kummer2"], 0),
    ("columns_kummer3", &["columns", "kummer3"], 0),
    ("columns_kummer3_json", &["columns", "kummer3", "--format", "json"], 0),
    ("columns_p2_mu3", &["columns", "p2_mu3"], 0),
    ("columns_pn_trivial", &["columns", "pn_trivial"], 0),
    ("columns_quintic_columns", &["columns", "quintic_columns"], 0),
    ("stringy_kummer2", &["stringy", "kummer2"], 0),
    ("stringy_p2_mu3_json", &["stringy", "p2_mu3", "--format", "json"], 0),
    ("stringy_pn_trivial", &["stringy", "pn_trivial"], 0),
    ("stringy_quintic_columns", &["stringy", "quintic_columns"], 2),
    ("mckay_p2_mu3", &["mckay", "p2_mu3", "inputs/a2_resolution.json"], 0),
    (
        "mckay_p2_mu3_json",
        &["mckay", "p2_mu3", "inputs/a2_resolution.json", "--format", "json"],
        0,
    ),
    ("mckay_p2_mu3_mismatch", &["mckay", "p2_mu3", "pn_trivial"], 1),
    ("mckay_kummer3", &["mckay", "kummer3", "kummer3"], 5),
    ("export_kummer2", &["export", "kummer2"], 0),
    ("export_kummer3", &["export", "kummer3"], 0),
    ("export_p2_mu3", &["export", "p2_mu3"], 0),
    ("export_pn_trivial", &["export", "pn_trivial"], 0),
    ("export_quintic_columns", &["export", "quintic_columns"], 0),
    ("no_subcommand", &[], 2),
];

pub fn golden_text(args: &[&str], out: &Output) -> String {
    format!(
        "$ orbikit {}\nexit: {}\n--- stdout\n{}--- stderr\n{}",
        args.join(" "),
        out.code,
        out.stdout,
        out.stderr
    )
}

/// Compares every golden case; with `ORBIKIT_BLESS=1` rewrites the files instead.
/// Returns one message per mismatch.
pub fn check_golden_files() -> Vec<String> {
    let bless = std::env::var_os("ORBIKIT_BLESS").is_some_and(|v| v == "1");
    let mut problems = Vec::new();
    for &(stem, args, expected_code) in GOLDEN_CASES {
        let out = run_cli(args);
        if out.code != expected_code {
            problems.push(format!("{stem}: exit {} (expected {expected_code})", out.code));
        }
        let text = golden_text(args, &out);
        let path = golden_dir().join(format!("{stem}.txt"));
        if bless {
            std::fs::write(&path, &text).expect("write golden file");
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(expected) if expected == text => {}
            Ok(_) => problems.push(format!("{stem}: output differs from {}", path.display())),
            Err(e) => problems.push(format!("{stem}: {}: {e}", path.display())),
        }
    }
    problems
}
