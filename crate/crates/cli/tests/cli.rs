use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn macpieri(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_macpieri")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(o)).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

#[test]
fn pieri_example_document() {
    let o = macpieri(&["pieri", "--eta", "0,0", "--r", "1"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["schema"], "1");
    assert_eq!(v["kind"], "pieri");
    assert_eq!(v["n"], 2);
    assert_eq!(v["input"], serde_json::json!(["0,0"]));
    assert_eq!(v["r"], 1);
    assert_eq!(v["mode"], "generic");
    assert_eq!(
        v["payload"],
        serde_json::json!([
            {"label": "1,0", "coeff": {"num": "1", "den": "1"}},
            {"label": "0,1", "coeff": {"num": "q*t - t", "den": "q*t - 1"}},
        ])
    );
}

#[test]
fn polynomial_payloads() {
    assert_eq!(json(&macpieri(&["estar", "--eta", "0,1"]))["payload"], "z2 - 1/t");
    assert_eq!(json(&macpieri(&["e", "--eta", "0,0"]))["payload"], "1");
}

#[test]
fn text_format() {
    let o = macpieri(&["pieri", "--eta", "0,0", "--r", "1", "--format", "text"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("1,0: 1\n") && s.contains("0,1: (q*t - t)/(q*t - 1)\n"), "{s}");
}

#[test]
fn output_is_deterministic() {
    let args = ["pieri", "--eta", "1,0,1", "--r", "2", "--workers", "3"];
    let a = macpieri(&args);
    let b = macpieri(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(macpieri(&["pieri", "--eta", "1,0,1", "--r", "2"]).stdout, a.stdout);
}

fn only_file(dir: &Path) -> std::path::PathBuf {
    let files: Vec<_> = fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(files.len(), 1, "{files:?}");
    files[0].clone()
}

#[test]
fn cache_is_transparent_and_self_healing() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let plain = macpieri(&["binom", "--eta", "1,0,2", "--nu", "2,1,2"]);
    let cold = macpieri(&["binom", "--eta", "1,0,2", "--nu", "2,1,2", "--cache-dir", d]);
    let warm = macpieri(&["binom", "--eta", "1,0,2", "--nu", "2,1,2", "--cache-dir", d]);
    assert!(plain.status.success());
    assert_eq!(plain.stdout, cold.stdout);
    assert_eq!(plain.stdout, warm.stdout);

    let entry = only_file(dir.path());
    fs::write(&entry, "{\"schema\": \"1\", \"kind\": tru").unwrap();
    let healed = macpieri(&["binom", "--eta", "1,0,2", "--nu", "2,1,2", "--cache-dir", d]);
    assert!(healed.status.success());
    assert_eq!(healed.stdout, plain.stdout);
    assert_eq!(only_file(dir.path()), entry);
    assert_eq!(fs::read(&entry).unwrap(), plain.stdout[..plain.stdout.len() - 1].to_vec());
}

#[test]
fn cache_entries_are_keyed_by_mode() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let a = macpieri(&["norm", "--eta", "0,1", "--cache-dir", d]);
    let b = macpieri(&["norm", "--eta", "0,1", "--cache-dir", d, "--params", "q=3,t=5/2"]);
    assert!(a.status.success() && b.status.success());
    assert_ne!(a.stdout, b.stdout);
    assert_eq!(json(&b)["mode"], "q=3,t=5/2");
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 2);
}

#[test]
fn concurrent_invocations_share_one_entry() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap().to_string();
    let outs: Vec<Output> = std::thread::scope(|s| {
        let hs: Vec<_> = (0..6).map(|_| s.spawn(|| macpieri(&["estar", "--eta", "1,2,0", "--cache-dir", &d]))).collect();
        hs.into_iter().map(|h| h.join().unwrap()).collect()
    });
    assert!(outs.iter().all(|o| o.status.success() && o.stdout == outs[0].stdout));
    let entry = only_file(dir.path());
    let stored: serde_json::Value = serde_json::from_str(&fs::read_to_string(entry).unwrap()).unwrap();
    assert_eq!(stored, json(&outs[0]));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["e", "--eta", "1,-1"][..],
        &["pieri", "--eta", "0,0", "--r", "3"],
        &["binom", "--eta", "1,0", "--nu", "1,0,0"],
        &["norm", "--eta", "1,0", "--params", "q=2,t=1/2"],
        &["e", "--eta", "0,1", "--params", "q=1"],
        &["frobnicate"],
        &["verify", "--suite", "nope"],
    ] {
        let o = macpieri(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
    let o = macpieri(&["norm", "--eta", "1,0", "--params", "q=2,t=1/2"]);
    let msg = String::from_utf8(o.stderr).unwrap();
    assert!(msg.contains("denominator"), "{msg}");
}

#[test]
fn verify_examples_pass() {
    for args in [
        &["verify", "--suite", "pieri-agreement", "--max-n", "3", "--max-mod", "3"][..],
        &["verify", "--suite", "vanishing", "--max-n", "3", "--max-mod", "3"],
        &["verify", "--suite", "norms", "--max-n", "2", "--max-mod", "2", "--k", "1"],
    ] {
        let o = macpieri(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        let v = json(&o);
        assert_eq!(v[0]["passed"], true);
    }
    let o = macpieri(&["verify", "--suite", "duality", "--max-n", "2", "--max-mod", "2", "--format", "text"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("duality: pass"), "{}", stdout(&o));
}
