use std::fs;
use std::process::Command;

use minorel_verifier::report::{emit, Format, Report};
use minorel_verifier::store::Store;
use minorel_verifier::{resolve, run, Config, Request, Verdict, RESULTS_ENV};

fn minorel() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_minorel"));
    c.env_remove(RESULTS_ENV);
    c
}

fn quiet_config(dir: &std::path::Path) -> std::path::PathBuf {
    let p = dir.join("minorel.conf");
    fs::write(&p, "# reproducible reports\ntimings = false\nworkers = 2\n").unwrap();
    p
}

#[test]
fn verify_writes_content_addressed_reports() {
    let dir = tempfile::tempdir().unwrap();
    let results = dir.path().join("results");
    let out = minorel()
        .env(RESULTS_ENV, &results)
        .args(["--format", "json", "verify", "thm-1.1", "--m", "2", "--n", "4", "--dmax", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report: Report = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.verdict, Verdict::Pass);
    let files: Vec<_> = fs::read_dir(&results).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    assert_eq!(files.len(), 1);
    let name = &files[0];
    assert!(name.ends_with(".json") && name.len() == 16 + 5, "{name}");
    let stored: Report = serde_json::from_str(&fs::read_to_string(results.join(name)).unwrap()).unwrap();
    assert_eq!(stored.task, report.task);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| minorel().args(args).output().unwrap().status.code();
    assert_eq!(code(&["verify", "thm-1.1", "--m", "3", "--n", "3", "--dmax", "3"]), Some(0));
    assert_eq!(code(&["verify", "no-such-id", "--m", "3", "--n", "3"]), Some(2));
    assert_eq!(code(&["verify", "thm-1.1", "--m", "40", "--n", "3"]), Some(2));
    assert_eq!(code(&["verify", "thm-4.1", "--m", "3", "--n", "3", "--variant", "permanents"]), Some(2));
    assert_eq!(code(&["suite", "--profile", "enormous"]), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let tight = dir.path().join("tight.conf");
    fs::write(&tight, "max_nonzeros = 4\n").unwrap();
    let out = minorel()
        .args(["--config", tight.to_str().unwrap(), "--format", "json", "verify", "thm-1.1", "--m", "3", "--n", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let report: Report = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.verdict, Verdict::SkippedCapacity);
    assert!(report.error.unwrap().contains("cap is 4"));

    let bad = dir.path().join("bad.conf");
    fs::write(&bad, "primes = 5, 7\n").unwrap();
    assert_eq!(code(&["--config", bad.to_str().unwrap(), "suite"]), Some(2));
}

#[test]
fn quick_suite_is_byte_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let conf = quiet_config(dir.path());
    let mut outputs = Vec::new();
    for i in 0..2 {
        let results = dir.path().join(format!("run{i}"));
        let out = minorel()
            .env(RESULTS_ENV, &results)
            .args(["--config", conf.to_str().unwrap(), "--format", "json", "suite", "--profile", "quick"])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
        let mut files: Vec<(String, Vec<u8>)> = fs::read_dir(&results)
            .unwrap()
            .map(|e| {
                let e = e.unwrap();
                (e.file_name().into_string().unwrap(), fs::read(e.path()).unwrap())
            })
            .collect();
        files.sort();
        outputs.push((out.stdout, files));
    }
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[0].1.len(), 15);
}

#[test]
fn cached_reports_are_reused() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = Config::default();
    let task = resolve(&Request::new("que-7.1", 2, 3), &cfg).unwrap();
    let store = Store::new(dir.path());
    let mut report = run(&task, &cfg);
    report.grading = "marker".into();
    store.save(&report, &cfg).unwrap();
    assert_eq!(store.load(&task, &cfg).unwrap().grading, "marker");
    let other = Config { max_nonzeros: 17, ..Config::default() };
    assert!(store.load(&task, &other).is_none());
}

#[test]
fn json_round_trip_and_table() {
    let cfg = Config::default();
    for req in [Request::new("thm-1.1", 2, 4).dmax(3), Request::new("que-7.1", 2, 4), Request::new("lem-4.3", 3, 3).dmax(2).r(1)] {
        let report = run(&resolve(&req, &cfg).unwrap(), &cfg);
        let back: Report = serde_json::from_str(&emit(&report, Format::Json)).unwrap();
        assert_eq!(back, report);
        let value: serde_json::Value = serde_json::from_str(&emit(&report, Format::Json)).unwrap();
        for key in ["task", "predicted", "witnessed", "certificates", "verdict", "timings"] {
            assert!(value.get(key).is_some(), "missing {key}");
        }
    }
    let report = run(&resolve(&Request::new("thm-1.1", 2, 4).dmax(3), &cfg).unwrap(), &cfg);
    assert_eq!(report.predicted["degree 2"]["statement"], "S[1,1,1,1]⊠S[2,2] + S[2,2]⊠S[1,1,1,1]");
    assert_eq!(report.predicted["degree 2"]["character"], "S[2,2]⊠S[1,1,1,1]");
    let table = emit(&report, Format::Table);
    assert!(table.contains("S[2,2]⊠S[1,1,1,1]"), "{table}");
    assert!(table.contains("verdict: pass"));
    assert!(table.contains("predicted: 0"));
}

#[test]
fn modular_reports_carry_certificates() {
    let cfg = Config::default();
    for req in [Request::new("thm-1.1", 3, 3).dmax(3), Request::new("thm-3.1", 3, 3).dmax(4), Request::new("thm-5.1", 2, 2)] {
        let report = run(&resolve(&req, &cfg).unwrap(), &cfg);
        assert!(!report.certificates.is_empty());
        for c in &report.certificates {
            assert_eq!(c.primes.len(), 2);
            assert!(c.confirmed);
        }
    }
}
