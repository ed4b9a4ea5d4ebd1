use std::process::{Command, Output};

fn dahalab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dahalab")).args(args).env("DAHA_WORKERS", "1").output().unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(dahalab(&["rtt", "ybe", "--n", "2"]).status.code(), Some(0));
    assert_eq!(dahalab(&["rtt", "ybe", "--n", "2", "--inject-failure"]).status.code(), Some(1));
    assert_eq!(dahalab(&["uq", "check", "--n", "9"]).status.code(), Some(2));
    assert_eq!(dahalab(&["cm", "check", "--point", "/nonexistent/p.json"]).status.code(), Some(2));
    assert_eq!(dahalab(&["center", "--l", "4"]).status.code(), Some(2));
    assert_eq!(dahalab(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn report_shape() {
    let o = dahalab(&["verify", "spherical", "--n", "2"]);
    let v = json(&o);
    assert_eq!(v["config"]["command"]["verify"]["what"]["spherical"]["n"], 2);
    assert!(v["version"].is_string());
    assert!(v.get("timings").is_none());
    assert!(v["suites"].as_array().unwrap().iter().all(|s| s["passes"] == s["cases"]));

    let t = json(&dahalab(&["verify", "spherical", "--n", "2", "--timings"]));
    assert!(t["timings"].is_object());
}

#[test]
fn byte_identical_reruns() {
    let args = ["hc", "compare", "--n", "2", "--i", "2", "--degree", "2"];
    let a = dahalab(&args);
    let b = dahalab(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn csv_output() {
    let o = dahalab(&["rtt", "dims", "--n", "2", "--max-degree", "3", "--format", "csv"]);
    let s = String::from_utf8(o.stdout).unwrap();
    assert_eq!(s, "degree,dimension,expected,match\n0,1,1,true\n1,4,4,true\n2,10,10,true\n3,20,20,true\n");

    let o = dahalab(&["rtt", "ybe", "--format", "csv"]);
    let s = String::from_utf8(o.stdout).unwrap();
    assert!(s.starts_with("suite,check,pass,witness\nr-matrix,ybe[n=2],true,\n"), "{s}");
}

#[test]
fn point_file_pipeline() {
    let dir = std::env::temp_dir().join(format!("dahalab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("point.json");
    let p = json(&dahalab(&["cm", "point", "--h", "1,2", "--hp", "3,-4", "--zeta2l", "-1"]));
    std::fs::write(&path, p["results"]["point"].to_string()).unwrap();
    let path = path.to_str().unwrap();

    let c = json(&dahalab(&["cm", "check", "--point", path]));
    assert_eq!(c["results"]["moment_plus_zero"], true);
    assert_eq!(c["results"]["cyclic"], true);

    let nf = json(&dahalab(&["cm", "normal-form", "--point", path]));
    let h = &nf["results"]["normal_form"]["h"];
    assert_eq!(h, &serde_json::json!(["1", "2"]));

    let out = dir.join("f.json");
    let o = dahalab(&["cm", "fourier", "--point", path, "--output", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let f: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(f["results"]["point"]["zeta2l"], "-1");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn passing_suites_exit_zero() {
    let o = dahalab(&["verify", "relations", "--n", "2", "--degree", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["suites"][0]["name"], "daha-presentation");

    let o = dahalab(&["center", "--n", "2", "--l", "3", "--k", "0", "--m", "1", "--window", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["suites"][0]["name"], "center-roots");
}
