use std::process::{Command, Output};

fn qgalois(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qgalois"))
        .args(args)
        .env_remove("QGAL_DEPTH_N")
        .env_remove("QGAL_DEPTH_M")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn exit_zero_when_all_pass() {
    let o = qgalois(&["check", "hopf", "--max-a", "2", "--max-b", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = qgalois(&["series", "heine", "--alpha", "1", "--beta", "2", "--gamma", "3"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn exit_one_when_a_check_fails() {
    let o = qgalois(&["deform", "check", "--algebra", "A1", "--e", "1 + eps", "--f", "eps"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL relation"));
}

#[test]
fn exit_two_on_usage_and_parse_errors() {
    assert_eq!(qgalois(&["suite", "nope"]).status.code(), Some(2));
    assert_eq!(qgalois(&["parse", "q +"]).status.code(), Some(2));
    assert_eq!(qgalois(&["morphism", "euler", "s"]).status.code(), Some(2));
    assert_eq!(qgalois(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(qgalois(&["deform", "check", "--algebra", "gens: x; nilp: y^2"]).status.code(), Some(2));
}

#[test]
fn parse_command_normalizes() {
    let o = qgalois(&["parse", "v*u", "--context", "hq"]);
    assert_eq!(stdout(&o).trim(), "q*u*v");
    let o = qgalois(&["parse", "(q^2-1)/(q-1)", "--context", "scalar"]);
    assert_eq!(stdout(&o).trim(), "q + 1");
}

#[test]
fn json_without_timestamp_is_byte_identical() {
    let args = ["check", "matrix", "--count", "5", "--json", "--no-timestamp"];
    let (a, b) = (qgalois(&args), qgalois(&args));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert!(v.get("timestamp").is_none());
    let with = qgalois(&["check", "matrix", "--count", "5", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&with.stdout).unwrap();
    assert!(v["timestamp"].as_u64().is_some());
}

#[test]
fn depth_flags_and_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_qgalois"))
        .args(["morphism", "hopf", "t", "--json", "--no-timestamp"])
        .env("QGAL_DEPTH_N", "4")
        .env("QGAL_DEPTH_M", "6")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let iota = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "iota-t").unwrap();
    assert_eq!(iota["depth"]["series_order"], 4);
    let o = qgalois(&["morphism", "hopf", "t", "--depth-n", "3", "--json", "--no-timestamp"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let iota = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "iota-t").unwrap();
    assert_eq!(iota["depth"]["series_order"], 3);
}
