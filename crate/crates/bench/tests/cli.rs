use std::process::Command;

use mwsht_bench::gen_random_coeffs;

fn mwsht(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_mwsht"))
        .args(args)
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn data_rows(csv: &str) -> Vec<&str> {
    csv.lines()
        .skip(1)
        .filter(|l| !l.starts_with('#'))
        .collect()
}

/// Drops the two timing columns (`seconds_mean`, `seconds_std`).
fn without_timing(csv: &str) -> Vec<String> {
    csv.lines()
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            [&f[..9], &f[11..]].concat().join(",")
        })
        .collect()
}

#[test]
fn roundtrip_is_reproducible() {
    let args = [
        "roundtrip",
        "-L",
        "4,16",
        "-s",
        "0,2",
        "--trials",
        "3",
        "--seed",
        "7",
    ];
    let a = mwsht(&args);
    let b = mwsht(&args);
    assert_eq!(without_timing(&a), without_timing(&b));
    assert_eq!(data_rows(&a).len(), 4);
    let mut par = args.to_vec();
    par.push("--parallel-trials");
    assert_eq!(without_timing(&a), without_timing(&mwsht(&par)));
}

#[test]
fn roundtrip_reports_failures_per_row() {
    let csv = mwsht(&[
        "roundtrip",
        "-L",
        "2,3",
        "-s",
        "2",
        "--sampling",
        "gl",
        "--trials",
        "1",
    ]);
    let rows = data_rows(&csv);
    assert!(rows[0].starts_with("2,2,gl") && rows[0].ends_with("not below L = 2"));
    assert!(rows[1].starts_with("3,2,gl") && rows[1].ends_with(','));
}

#[test]
fn roundtrip_accuracy_at_l64() {
    let csv = mwsht(&["roundtrip", "-L", "64", "-s", "0,10", "--per-trial"]);
    let rows = data_rows(&csv);
    assert_eq!(rows.len(), 10);
    for row in rows {
        let eps: f64 = row.split(',').nth(6).unwrap().parse().unwrap();
        assert!(eps <= 1e-11, "{row}");
    }
}

#[test]
fn weights_table_shape() {
    let csv = mwsht(&["weights", "-L", "4"]);
    assert_eq!(
        csv.lines().next().unwrap(),
        "theta,v,q,sin_theta,q_minus_sin"
    );
    let rows = data_rows(&csv);
    assert_eq!(rows.len(), 7);
    let q: Vec<f64> = rows
        .iter()
        .filter_map(|r| r.split(',').nth(2).filter(|s| !s.is_empty()))
        .map(|s| s.parse().unwrap())
        .collect();
    assert_eq!(q.len(), 4);
    // Σ_t q(θ_t) over L longitudes integrates the constant 1.
    let sum: f64 = q.iter().sum::<f64>() * 4.0;
    assert!((sum - 4.0 * std::f64::consts::PI).abs() < 1e-12);

    let both = mwsht(&["weights"]);
    assert_eq!(both.lines().filter(|l| l.starts_with("theta,")).count(), 2);
}

#[test]
fn grid_exports() {
    let mw = mwsht(&["grid", "-L", "12"]);
    assert_eq!(data_rows(&mw).len(), 276);
    assert_eq!(mw.lines().last().unwrap(), "# distinct_points=254");
    assert_eq!(
        data_rows(&mwsht(&["grid", "-L", "12", "--sampling", "gl"])).len(),
        276
    );
    assert_eq!(data_rows(&mwsht(&["grid", "-L", "1"])).len(), 1);
}

#[test]
fn counts_table() {
    let csv = mwsht(&["counts", "-L", "1,2,1024"]);
    let rows = data_rows(&csv);
    assert_eq!(
        rows,
        ["1,1,1,2", "2,4,6,12", "1024,2094082,2096128,4192256"]
    );
}

#[test]
fn integrate_table() {
    let csv = mwsht(&["integrate", "-L", "4,16", "-s", "0,1", "--trials", "5"]);
    for row in data_rows(&csv) {
        let f: Vec<f64> = row.split(',').skip(4).map(|s| s.parse().unwrap()).collect();
        assert!(f[0] < 1e-11 && f[1] < 1e-12, "{row}");
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("mwsht-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("counts.csv");
    let stdout = mwsht(&["counts", "-L", "3", "--out", path.to_str().unwrap()]);
    assert!(stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "L,n_mw,n_gl,n_dh\n3,11,15,30\n"
    );
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn bad_arguments_fail() {
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_mwsht"))
            .args(args)
            .output()
            .unwrap()
    };
    assert!(!run(&["roundtrip", "--sampling", "healpix"])
        .status
        .success());
    assert!(!run(&["counts", "-L", "0"]).status.success());
    assert!(!run(&["counts", "-L", "8-2"]).status.success());
}

#[test]
fn random_coefficients() {
    let a = gen_random_coeffs(12, 2, 5, false).unwrap();
    assert_eq!(a, gen_random_coeffs(12, 2, 5, false).unwrap());
    assert_ne!(a, gen_random_coeffs(12, 2, 6, false).unwrap());
    for ell in 0..12usize {
        let e = ell as i32;
        for m in -e..=e {
            let z = a.get(ell, m);
            if ell < 2 {
                assert_eq!(z.norm(), 0.0);
            } else {
                assert!(z.re.abs() <= 1.0 && z.im.abs() <= 1.0);
            }
        }
    }
    let r = gen_random_coeffs(12, 0, 5, true).unwrap();
    for ell in 0..12usize {
        let e = ell as i32;
        for m in -e..=e {
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            assert_eq!(r.get(ell, m).conj() * sign, r.get(ell, -m));
        }
    }
}
