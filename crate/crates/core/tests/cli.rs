use std::path::PathBuf;
use std::process::Command;

use qecc_advisor::cli::{run, EXIT_OK, EXIT_REGISTRY, EXIT_USAGE};
use qecc_advisor::registry::Registry;
use serde_json::Value;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cli(args: &[&str]) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("qecc-advisor").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = cli(&full);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    serde_json::from_str(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", o.stdout))
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qecc-advisor-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

const SCENARIO_1: &[&str] = &[
    "recommend",
    "--qtype",
    "supercond",
    "--max-qavail",
    "100",
    "--qorig",
    "1",
    "--multi-qgate",
    "no",
    "--err-type",
    "bit-flip",
    "--dep-err",
    "1e-4",
    "--gate-err",
    "1e-3",
    "--read-err",
    "1e-2",
];

fn with<'a>(base: &[&'a str], extra: &[&'a str]) -> Vec<&'a str> {
    base.iter().chain(extra).copied().collect()
}

#[test]
fn scenario_one_top_three() {
    let o = cli(&with(SCENARIO_1, &["--top", "3"]));
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.stdout, "repetition 100\nsurface 10\nheavy-hexagon 6\n");
}

#[test]
fn max_distance_query() {
    let o = cli(&["max-distance", "--code", "surface", "--budget", "600", "--qorig", "2"]);
    assert_eq!((o.code, o.stdout.as_str()), (EXIT_OK, "17\n"));
    let o = cli(&["max-distance", "--code", "steane", "--budget", "7"]);
    assert_eq!(o.stdout, "NA\n");
    let o = cli(&["max-distance", "--code", "bacon-shor", "--budget", "7"]);
    assert_eq!(o.stdout, "infeasible\n");
    let o = cli(&["max-distance", "--code", "nope", "--budget", "7"]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("unknown code `nope`"));
}

#[test]
fn zero_budget_is_a_usage_error() {
    let mut args = SCENARIO_1.to_vec();
    args[4] = "0";
    let o = cli(&args);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("max_q_avail"));
    assert!(o.stderr.contains("Usage: qecc-advisor recommend"), "{}", o.stderr);
    assert!(o.stdout.is_empty());
}

#[test]
fn verify_steane_distance() {
    let o = cli(&["verify", "--code", "steane-7", "--claim", "distance", "--wmax", "3"]);
    assert_eq!((o.code, o.stdout.as_str()), (EXIT_OK, "distance = 3\n"));
    let o = cli(&["verify", "--code", "repetition-3", "--claim", "distance", "--restrict", "x"]);
    assert_eq!(o.stdout, "distance = 3\n");
    let o = cli(&["verify", "--code", "repetition-3", "--claim", "correctable", "--t", "1"]);
    assert_eq!(o.stdout, "not correctable (t = 1)\n");
    let v = json(&["verify", "--code", "shor-9", "--claim", "correctable"]);
    assert_eq!(v["correctable"], true);
}

#[test]
fn verify_errors() {
    let o = cli(&["verify", "--code", "golay", "--claim", "distance"]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("steane-7"));
    let o = cli(&["verify", "--code", "shor-9", "--claim", "distance", "--cap", "10"]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("cap"));
    let o = cli(&["verify", "--claim", "distance"]);
    assert_eq!(o.code, EXIT_USAGE);
}

#[test]
fn verify_code_file() {
    let good = temp_file("rep.json", r#"{"name": "rep5", "n": 5, "generators": ["ZZIII", "IZZII", "IIZZI", "IIIZZ"]}"#);
    let o = cli(&["verify", "--code-file", good.to_str().unwrap(), "--claim", "distance", "--restrict", "x"]);
    assert_eq!(o.stdout, "distance = 5\n", "{}", o.stderr);
    let bad = temp_file("bad.json", r#"{"name": "bad", "n": 2, "generators": ["XI", "ZI"]}"#);
    let o = cli(&["verify", "--code-file", bad.to_str().unwrap(), "--claim", "distance"]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("anticommute"));
}

#[test]
fn unknown_subcommand_and_flag() {
    let o = cli(&["frobnicate"]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("Usage"));
    let o = cli(&["list-codes", "--colour"]);
    assert_eq!(o.code, EXIT_USAGE);
    let o = cli(&["--help"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("export-bench"));
}

#[test]
fn recommend_json_shape() {
    let v = json(SCENARIO_1);
    let recs = v["recommendations"].as_array().unwrap();
    assert_eq!(recs[0]["id"], "repetition");
    assert_eq!(recs[0]["max_distance"], 100);
    assert!(recs[0]["breakdown"]["f_dist"].is_number());
    assert_eq!(v["scenario"]["q_type"], "superconducting");
    assert!(v.get("trace").is_none());
    let v = json(&with(&["--debug"], SCENARIO_1));
    assert!(v["trace"].as_array().unwrap().len() >= 9);
}

#[test]
fn debug_keeps_ranking_and_exit_code() {
    let plain = cli(SCENARIO_1);
    let debug = cli(&with(&["--debug"], SCENARIO_1));
    assert_eq!(plain.code, debug.code);
    let ranked: Vec<&str> = debug.stdout.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(ranked, plain.stdout.lines().collect::<Vec<_>>());
    assert!(debug.stdout.contains("# compatibility shor eliminated: realization"));

    let plain = json(SCENARIO_1);
    let debug = json(&with(&["--debug"], SCENARIO_1));
    assert_eq!(plain["recommendations"], debug["recommendations"]);
}

#[test]
fn empty_recommendation_list_succeeds() {
    let o = cli(&[
        "recommend", "--qtype", "nmr", "--max-qavail", "50", "--err-type", "all-pauli", "--dep-err", "1e-4",
        "--gate-err", "1e-3", "--read-err", "1e-2",
    ]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.is_empty());
}

#[test]
fn weights_file_override() {
    let path = temp_file(
        "weights.json",
        r#"{"error": {"w_gate": 0.7, "w_dep": 0.2, "w_read": 0.1}}"#,
    );
    let v = json(&with(SCENARIO_1, &["--weights", path.to_str().unwrap()]));
    let p = v["effective_error_rate"].as_f64().unwrap();
    assert!((p - (0.7e-3 + 0.2e-4 + 0.1e-2)).abs() < 1e-15, "{p}");
    let bad = temp_file("bad-weights.json", r#"{"error": {"w_gate": 2.0, "w_dep": 0.0, "w_read": 0.0}}"#);
    let o = cli(&with(SCENARIO_1, &["--weights", bad.to_str().unwrap()]));
    assert_eq!(o.code, EXIT_USAGE);
}

#[test]
fn json_output_parses_for_every_subcommand() {
    let runs: &[&[&str]] = &[
        SCENARIO_1,
        &["max-distance", "--code", "surface", "--budget", "100"],
        &["list-codes"],
        &["show-code", "gross"],
        &["verify", "--code", "steane-7", "--claim", "distance"],
        &["export-bench", "overhead", "--codes", "surface,steane", "--d-max", "5"],
        &["export-bench", "thresholds"],
        &["export-bench", "radar"],
        &["export-bench", "ler", "--points", "4"],
        &["export-bench", "required-distance", "--points", "4"],
    ];
    for args in runs {
        let first = cli(&with(&["--format", "json"], args));
        assert_eq!(first.code, EXIT_OK, "{args:?}: {}", first.stderr);
        let v: Value = serde_json::from_str(&first.stdout).unwrap();
        let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(again, v, "{args:?} does not round-trip");
        let second = cli(&with(&["--format", "json"], args));
        assert_eq!(first.stdout, second.stdout, "{args:?} is not deterministic");
    }
}

#[test]
fn list_codes_json_is_a_registry() {
    let o = cli(&["--format", "json", "list-codes"]);
    let reg = Registry::from_json_str(&o.stdout).unwrap();
    assert_eq!(reg, Registry::builtin());
}

#[test]
fn show_code_text() {
    let o = cli(&["show-code", "steane"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("overhead        7\n"));
    assert!(o.stdout.contains("transversal     clifford\n"));
    assert_eq!(cli(&["show-code", "nope"]).code, EXIT_USAGE);
}

#[test]
fn validate_registry_files() {
    let good = temp_file("good.json", Registry::builtin_json());
    let o = cli(&["validate-registry", good.to_str().unwrap()]);
    assert_eq!((o.code, o.stdout.as_str()), (EXIT_OK, "ok: 9 codes\n"));

    let bad_text = Registry::builtin_json().replace("\"threshold\": 0.018", "\"threshold\": 1.8");
    assert_ne!(bad_text, Registry::builtin_json());
    let bad = temp_file("bad.json", &bad_text);
    let o = cli(&["validate-registry", bad.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_REGISTRY);
    assert!(o.stderr.contains("threshold"), "{}", o.stderr);
    let v: Value = serde_json::from_str(&cli(&["--format", "json", "validate-registry", bad.to_str().unwrap()]).stdout)
        .unwrap();
    assert_eq!(v["valid"], false);

    let o = cli(&["validate-registry", "/nonexistent/registry.json"]);
    assert_eq!(o.code, EXIT_REGISTRY);
}

#[test]
fn custom_registry_flag() {
    let mut reg: Value = serde_json::from_str(Registry::builtin_json()).unwrap();
    reg["codes"].as_array_mut().unwrap().retain(|c| c["id"] == "surface" || c["id"] == "steane");
    let path = temp_file("two.json", &reg.to_string());
    let o = cli(&["--registry", path.to_str().unwrap(), "list-codes"]);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.stdout.lines().count(), 2);
    let o = cli(&["--registry", "/nonexistent.json", "list-codes"]);
    assert_eq!(o.code, EXIT_REGISTRY);
}

#[test]
fn export_bench_csv() {
    let o = cli(&["export-bench", "overhead", "--codes", "steane"]);
    assert_eq!(o.stdout, "label,x,y\nsteane,3,7\n");
    let o = cli(&["--format", "csv", "export-bench", "overhead", "--codes", "bacon-shor", "--d-min", "3", "--d-max", "11"]);
    assert!(o.stdout.ends_with("bacon-shor,11,1331\n"));
    let o = cli(&["export-bench", "thresholds"]);
    assert_eq!(o.stdout.lines().count(), 10);
    let o = cli(&["export-bench", "overhead", "--codes", "surface", "--d-min", "1"]);
    assert_eq!(o.code, EXIT_USAGE);
    let o = cli(&["export-bench", "ler", "--p-th", "1.5"]);
    assert_eq!(o.code, EXIT_USAGE);
}

#[test]
fn unsupported_formats_are_rejected() {
    assert_eq!(cli(&["--format", "csv", "show-code", "surface"]).code, EXIT_USAGE);
    assert_eq!(cli(&["--format", "csv", "verify", "--code", "steane-7", "--claim", "distance"]).code, EXIT_USAGE);
    assert_eq!(cli(&["--format", "yaml", "list-codes"]).code, EXIT_USAGE);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_qecc-advisor");
    let ok = Command::new(bin)
        .args(["max-distance", "--code", "surface", "--budget", "100"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "10\n");
    let bad = Command::new(bin).arg("nope").output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
    assert!(!bad.stderr.is_empty());
}
