use std::process::Command;

fn ahtoric(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ahtoric")).args(args).env_remove("AHTORIC_SEED").output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn verify_exit_codes() {
    let (code, out, _) = ahtoric(&["verify", "--d", "6"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("d = 6: k = 20 certified, 84/84 points\n"));
    let (code, out, _) = ahtoric(&["verify", "--d", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains("k = 13 certified"));
    let (code, _, err) = ahtoric(&["verify", "--d", "4"]);
    assert_eq!(code, 2);
    assert!(err.contains("d ≥ 5 required; d ≤ 4 cases are classical"));
    let (code, _, _) = ahtoric(&["verify"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_reads_certificate_files() {
    let dir = std::env::temp_dir().join(format!("ahtoric-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("d7.json");
    let (code, text, _) = ahtoric(&["export", "--d", "7", "--certificate"]);
    assert_eq!(code, 0);
    std::fs::write(&good, &text).unwrap();
    assert_eq!(ahtoric(&["verify", "--d", "7", "--certificate", good.to_str().unwrap()]).0, 0);
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["claimed_k"] = serde_json::json!(30);
    let bad = dir.join("bad.json");
    std::fs::write(&bad, v.to_string()).unwrap();
    let (code, out, _) = ahtoric(&["verify", "--d", "7", "--certificate", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("NOT certified"));
    assert_eq!(ahtoric(&["verify", "--d", "7", "--certificate", "/nonexistent"]).0, 2);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn sweep_exit_codes_and_golden() {
    let (code, out, _) = ahtoric(&["sweep", "--dmax", "12"]);
    assert_eq!(code, 0);
    assert_eq!(out, golden("sweep_d12.txt"));
    assert_eq!(out.lines().filter(|l| l.ends_with("pass") && !l.starts_with("identities") && !l.starts_with("result")).count(), 8);
    assert_eq!(ahtoric(&["sweep", "--dmax", "12", "--format", "csv"]).1, golden("sweep_d12.csv"));
    assert_eq!(ahtoric(&["sweep", "--dmax", "4"]).0, 2);
}

#[test]
fn oracle_reports() {
    let (code, out, _) = ahtoric(&["oracle", "--n", "3", "--d", "4", "--points", "9"]);
    assert_eq!(code, 0);
    assert!(out.contains("observed defect 1"));
    let (code, out, _) = ahtoric(&["oracle", "--n", "3", "--d", "5", "--k", "13"]);
    assert_eq!(code, 0);
    assert!(out.contains("observed defect 0"));
    let (code, out, _) = ahtoric(&["oracle", "--exceptional"]);
    assert_eq!(code, 0);
    assert_eq!(out, golden("oracle_exceptional.txt"));
    assert!(out.contains("5/5 rows defective, neighbours non-defective"));
    assert_eq!(ahtoric(&["oracle", "--n", "3", "--d", "40", "--k", "1"]).0, 2);
    assert_eq!(ahtoric(&["oracle", "--n", "3"]).0, 2);
}

#[test]
fn seed_override_is_recorded() {
    let default = ahtoric(&["verify", "--d", "6", "--format", "json"]).1;
    assert_eq!(default, golden("verify_d6.json"));
    let out = Command::new(env!("CARGO_BIN_EXE_ahtoric"))
        .args(["verify", "--d", "6", "--format", "json"])
        .env("AHTORIC_SEED", "7")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["run_config"]["seed"], 7);
    assert_eq!(v["run_config"]["prime"], 1_000_003);
    assert_eq!(v["run_config"]["trials"], 4);
    assert_eq!(v["run_config"]["budget"], 100_000_000);
    let flag = ahtoric(&["verify", "--d", "6", "--format", "json", "--seed", "9"]).1;
    assert!(flag.contains("\"seed\": 9"));
}

#[test]
fn search_exit_codes() {
    let args = ["search", "--region", "S1_8", "--kinds", "tangent", "--target", "20", "--max-uncovered", "1"];
    let (code, out, _) = ahtoric(&args);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["units"].as_array().unwrap().len(), 20);
    assert_eq!(v["uncovered"].as_array().unwrap().len(), 1);
    assert_eq!(ahtoric(&args).1, out);
    let (code, _, _) = ahtoric(&["search", "--region", "gamma_7", "--target", "7"]);
    assert_eq!(code, 1);
    let (code, _, _) = ahtoric(&["search", "--region", "Delta_6", "--target", "21", "--max-uncovered", "0", "--budget", "3"]);
    assert_eq!(code, 1);
    assert_eq!(ahtoric(&["search", "--region", "nowhere", "--target", "1"]).0, 2);
    assert_eq!(ahtoric(&["search", "--region", "S1_8", "--kinds", "bogus", "--target", "1"]).0, 2);
}

#[test]
fn export_formats() {
    let (code, off, _) = ahtoric(&["export", "--d", "6", "--format", "off"]);
    assert_eq!(code, 0);
    assert!(off.starts_with("OFF\n# Delta_6: 56 cells\n"));
    let (code, json, _) = ahtoric(&["export", "--d", "1", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["cells"].as_array().unwrap().len(), 1);
    assert_eq!(v["cells"][0]["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(ahtoric(&["export", "--d", "6", "--format", "off"]).1, off);
    assert_eq!(ahtoric(&["export", "--region", "nowhere"]).0, 2);
    assert_eq!(ahtoric(&["export", "--d", "6", "--format", "csv"]).0, 2);
    assert_eq!(ahtoric(&["export"]).0, 2);
}
