use std::process::Command;

use commtrace::cli::{execute, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};
use commtrace::haar::EmpiricalMoments;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("commtrace").chain(args.iter().copied());
    let code = execute(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, EXIT_OK, "{args:?}: {err}");
    out
}

#[test]
fn text_goldens() {
    assert_eq!(ok(&["tableaux", "--shape", "", "--r", "6"]).trim(), "15");
    assert_eq!(ok(&["tableaux", "--shape", "1", "--r", "3"]).trim(), "3");
    assert_eq!(ok(&["tableaux", "--shape", "1", "--r", "2"]).trim(), "0");
    assert_eq!(ok(&["tableaux", "--shape", "", "--r", "4", "--height-bound", "1"]).trim(), "2");
    assert_eq!(ok(&["dims", "--group", "sp", "--n", "3", "--shape", "1,1"]).trim(), "14");
    assert_eq!(ok(&["dims", "--group", "u", "--n", "5", "--entries", "1,0,0,0,-1"]).trim(), "24");
    assert_eq!(ok(&["moments", "--group", "sp", "--n", "3", "--r", "2"]).trim(), "47/42 1.11904761905");
    assert_eq!(ok(&["moments", "--group", "u", "--n", "5", "--r", "1", "--s", "1"]).trim(), "25/24 1.04166666667");
    assert_eq!(ok(&["moments", "--group", "so-even", "--n", "4", "--r", "2"]).trim(), "149/140 1.06428571429");
}

#[test]
fn json_payloads_parse() {
    let v: serde_json::Value =
        serde_json::from_str(&ok(&["--format", "json", "moments", "--group", "sp", "--n", "3", "--r", "2"])).unwrap();
    assert_eq!(v["exact"], "47/42");
    let v: serde_json::Value = serde_json::from_str(&ok(&["--format", "json", "finite", "--group", "q8", "--k", "2"])).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r["matches"] == true));
}

#[test]
fn report_columns_and_gaps() {
    let out = ok(&["report", "--group", "sp", "--r", "2", "--n-list", "3,6,12,24"]);
    let mut reader = csv::Reader::from_reader(out.as_bytes());
    let headers = reader.headers().unwrap().clone();
    assert_eq!(&headers[0], "n");
    assert_eq!(&headers[4], "gap");
    let gaps: Vec<String> = reader.records().map(|r| r.unwrap()[4].to_string()).collect();
    assert_eq!(gaps, ["5/42", "11/390", "23/3300", "47/27048"]);
}

#[test]
fn report_skips_rows_outside_the_regime() {
    let (code, out, err) = run(&["report", "--group", "so-odd", "--r", "3", "--n-list", "2,4"]);
    assert_eq!(code, EXIT_OK);
    assert!(err.contains("n = 2"));
    assert_eq!(out.lines().count(), 2);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["moments", "--group", "so-even", "--n", "2", "--r", "3"]).0, EXIT_DOMAIN);
    assert_eq!(run(&["tableaux", "--shape", "1,1,1", "--r", "3", "--height-bound", "2"]).0, EXIT_DOMAIN);
    assert_eq!(run(&["tableaux", "--shape", "1,x", "--r", "3"]).0, EXIT_USAGE);
    assert_eq!(run(&["moments", "--group", "gl", "--n", "3", "--r", "2"]).0, EXIT_USAGE);
    assert_eq!(run(&["moments", "--group", "sp", "--n", "0", "--r", "2"]).0, EXIT_USAGE);
    assert_eq!(run(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(run(&["--help"]).0, EXIT_OK);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_commtrace");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let o = status(&["moments", "--group", "sp", "--n", "3", "--r", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), "47/42 1.11904761905");
    assert_eq!(status(&["dims", "--group", "sp"]).status.code(), Some(2));
    assert_eq!(status(&["moments", "--group", "so-odd", "--n", "2", "--r", "2"]).status.code(), Some(3));
}

const SIM: [&str; 11] = ["simulate", "--group", "u", "--n", "3", "--k", "2", "--s-max", "2", "--samples", "300"];

#[test]
fn simulate_json_round_trips_byte_for_byte() {
    let text = ok(&SIM);
    let parsed: EmpiricalMoments = serde_json::from_str(&text).unwrap();
    let again = serde_json::to_string_pretty(&parsed).unwrap();
    assert_eq!(text.trim_end(), again.trim_end());
    assert_eq!(parsed.samples, 300);
    assert_eq!(parsed.histogram_re.total(), 300);
}

#[test]
fn simulate_is_deterministic_across_workers() {
    let with = |w: &str| {
        let mut args = vec!["--workers", w, "--seed", "11"];
        args.extend(SIM);
        ok(&args)
    };
    let one = with("1");
    assert_eq!(one, with("8"));
    assert_eq!(one, with("1"));
    let mut other_seed = vec!["--seed", "12"];
    other_seed.extend(SIM);
    assert_ne!(one, ok(&other_seed));
}

#[test]
fn output_flag_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("commtrace-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("moments.csv");
    let p = path.to_str().unwrap();
    let stdout = ok(&["--output", p, "--format", "csv", "simulate", "--group", "sp", "--n", "2", "--samples", "50"]);
    assert!(stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("r,s,mean_re,mean_im,stderr"));
    assert_eq!(written.lines().count(), 6);
    std::fs::remove_dir_all(&dir).unwrap();
}
