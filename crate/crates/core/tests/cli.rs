use std::path::Path;
use std::process::Command;

use vsa_core::table::parse_csv;

fn vsa(args: &[&str], dir: &Path) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_vsa"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("spawn vsa");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn stiffness_curve_with_config_and_grid() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("c.json"), r#"{"spring": {"n": 8}}"#).unwrap();
    let (code, stdout, _) = vsa(
        &["stiffness-curve", "--config", "c.json", "--xr", "0.01,0.02,0.04,0.08", "--out", "k.csv"],
        dir.path(),
    );
    assert_eq!(code, 0, "{stdout}");
    let text = std::fs::read_to_string(dir.path().join("k.csv")).unwrap();
    let (header, rows) = parse_csv(&text);
    assert_eq!(header, ["x_r", "k"]);
    let expected = [(0.01, 2025.0), (0.02, 1012.5), (0.04, 506.25), (0.08, 253.125)];
    for (row, (x, k)) in rows.iter().zip(expected) {
        assert_eq!(row[0].parse::<f64>().unwrap(), x);
        assert!((row[1].parse::<f64>().unwrap() / k - 1.0).abs() < 1e-12);
    }
    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("k.manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["scenario"], "stiffness-curve");
    assert_eq!(manifest["passed"], true);
    assert_eq!(manifest["outputs"][0]["rows"], 4);
    assert_eq!(
        manifest["outputs"][0]["sha256"],
        vsa_core::app::sha256_hex(text.as_bytes())
    );
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _, stderr) = vsa(&["frobnicate"], dir.path());
    assert_eq!(code, 2);
    assert!(stderr.contains("Usage"));
    assert_eq!(vsa(&["static-torque", "--bogus"], dir.path()).0, 2);
    assert_eq!(vsa(&["static-torque", "--qd", "abc"], dir.path()).0, 2);
    assert_eq!(vsa(&[], dir.path()).0, 2);
    assert_eq!(vsa(&["--help"], dir.path()).0, 0);
}

#[test]
fn missing_config_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _, stderr) = vsa(&["static-torque", "--config", "missing.json"], dir.path());
    assert_eq!(code, 1);
    assert!(stderr.contains("missing.json"), "{stderr}");
}

#[test]
fn invalid_config_lists_every_violation() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("bad.json"),
        r#"{"spring": {"t": 0.05}, "screw": {"x_min": 0}, "sim": {"dt": -1}}"#,
    )
    .unwrap();
    let (code, _, stderr) = vsa(&["static-torque", "--config", "bad.json"], dir.path());
    assert_eq!(code, 1);
    assert!(stderr.contains("thickness exceeds width"), "{stderr}");
    assert!(stderr.contains("nonzero"), "{stderr}");
    assert!(stderr.contains("sim.dt"), "{stderr}");
}

#[test]
fn parse_error_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("broken.json"), "{\n  \"spring\": {\"E\": }\n}").unwrap();
    let (code, _, stderr) = vsa(&["stiffness-curve", "--config", "broken.json"], dir.path());
    assert_eq!(code, 1);
    assert!(stderr.contains("line 2"), "{stderr}");
}

#[test]
fn grid_outside_travel_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _, stderr) = vsa(&["stiffness-curve", "--xr", "0.005,0.02"], dir.path());
    assert_eq!(code, 1);
    assert!(stderr.contains("outside roller travel"), "{stderr}");
}

#[test]
fn default_output_name_and_byte_identical_reruns() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(vsa(&["disturbance-map"], dir.path()).0, 0);
    let first = std::fs::read(dir.path().join("disturbance-map.csv")).unwrap();
    let first_manifest = std::fs::read(dir.path().join("disturbance-map.manifest.json")).unwrap();
    assert_eq!(vsa(&["disturbance-map"], dir.path()).0, 0);
    assert_eq!(first, std::fs::read(dir.path().join("disturbance-map.csv")).unwrap());
    assert_eq!(first_manifest, std::fs::read(dir.path().join("disturbance-map.manifest.json")).unwrap());

    let (header, rows) = parse_csv(std::str::from_utf8(&first).unwrap());
    assert_eq!(header, ["q_d", "x_r", "Q_x", "tau_sd_abs"]);
    assert_eq!(rows.len(), 61 * 8);
}

#[test]
fn deflection_experiment_writes_one_file_per_roller() {
    let dir = tempfile::tempdir().unwrap();
    let (code, stdout, stderr) = vsa(&["deflection-experiment", "--duration", "0.4", "--out", "d.csv"], dir.path());
    assert_eq!(code, 0, "{stdout}{stderr}");
    for name in ["d-xr0.02.csv", "d-xr0.08.csv", "d.manifest.json"] {
        assert!(dir.path().join(name).exists(), "{name}");
    }
    let text = std::fs::read_to_string(dir.path().join("d-xr0.02.csv")).unwrap();
    assert!(text.starts_with(
        "t,q_m1,q_m2,q_l,dq_m1,dq_m2,dq_l,x_r,tau_s,tau_sd,k,P_m1,P_m2,E_kin,U_spring,W_m2_abs,flags\n"
    ));
}
