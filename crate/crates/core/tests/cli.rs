use std::io::Write;
use std::process::{Command, Output};

use hodge_moduli::LaurentPoly;
use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_hodge-moduli"));
    c.env_remove("HP_MODULI_ORDER_DEFAULT");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn golden_path(name: &str) -> String {
    format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn stable2_json_round_trips() {
    let o = run(&["compute", "stable2", "--genus", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["poly"][0]["c"], "1");
    let poly: LaurentPoly = serde_json::from_value(v["poly"].clone()).unwrap();
    assert_eq!(serde_json::to_value(&poly).unwrap(), v["poly"]);
}

#[test]
fn stable2_text_output() {
    let o = run(&["compute", "stable2", "--genus", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("1 + 2*v + 2*u"));
}

#[test]
fn odd_degree_rejected() {
    let o = run(&["compute", "stable2", "--genus", "2", "--deg", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("degree must be even"));
}

#[test]
fn genus_out_of_range_is_domain_error() {
    let o = run(&["compute", "stable2", "--genus", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("genus out of supported range"));
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(run(&["compute", "stable2", "--genus", "2", "--nope"]).status.code(), Some(64));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(run(&["compute", "stable2", "--genus", "2", "--json", "--text"]).status.code(), Some(64));
    let help = run(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    assert!(stdout(&help).contains("verify"));
}

#[test]
fn golden_compare() {
    let ok = run(&["compute", "stable2", "--genus", "2", "--golden", &golden_path("stable2_g2_hp.json")]);
    assert_eq!(ok.status.code(), Some(0));
    let ok = run(&["compute", "stable2", "--genus", "2", "--deligne", "--golden", &golden_path("stable2_g2_hd.json")]);
    assert_eq!(ok.status.code(), Some(0));
    let bad = run(&["compute", "stable2", "--genus", "3", "--golden", &golden_path("stable2_g2_hp.json")]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr(&bad).contains("golden mismatch"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["compute", "stable2", "--genus", "3", "--json"][..],
        &["compute", "ss", "--rank", "3", "--deg", "1", "--genus", "2", "--order", "10", "--json"][..],
        &["enumerate", "hn-types", "--rank", "3", "--deg", "1", "--genus", "2", "--max-codim", "12"][..],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout);
    }
}

#[test]
fn ss_metadata_and_default_order() {
    let o = run(&["compute", "ss", "--rank", "2", "--deg", "1", "--genus", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["series"]["order"], 12);
    assert_eq!(v["metadata"]["p"], -1);
    assert!(v["metadata"]["types_used"].as_u64().unwrap() > 0);
    assert_eq!(v["metadata"]["violations"], Value::Array(vec![]));

    let o = bin()
        .env("HP_MODULI_ORDER_DEFAULT", "6")
        .args(["compute", "ss", "--rank", "2", "--deg", "0", "--genus", "2", "--json"])
        .output()
        .unwrap();
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["series"]["order"], 6);

    let text = run(&["compute", "ss", "--rank", "1", "--deg", "0", "--genus", "2", "--order", "2"]);
    assert!(stdout(&text).contains("# memo hits"));
}

#[test]
fn enumerate_commands() {
    let o = run(&["enumerate", "hn-types", "--rank", "2", "--deg", "0", "--genus", "2", "--max-codim", "9"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let codims: Vec<i64> = v["types"].as_array().unwrap().iter().map(|t| t["codim"].as_i64().unwrap()).collect();
    assert_eq!(codims, vec![3, 5, 7, 9]);
    assert!(v["metadata"].get("genus_flag").is_none());

    let o = run(&["enumerate", "reductive-classes", "--rank", "2", "--deg", "0"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(v[0]["dim"], 4);
    assert_eq!(v[1]["dim"], 2);
}

#[test]
fn beta_index_set_from_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    // adjoint SL(2) on one weight copy per g, g = 3
    write!(f, r#"{{"dim":1,"weights":[{{"v":[2],"mult":3}},{{"v":[0],"mult":3}},{{"v":[-2],"mult":3}}],"roots":[[2],[-2]],"chamber":[[1]]}}"#).unwrap();
    let o = run(&["beta", "index-set", "--system", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["beta"], serde_json::json!(["2"]));
    assert_eq!(v[0]["codim"], 5);

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    write!(bad, r#"{{"dim":2,"weights":[{{"v":[1],"mult":1}}]}}"#).unwrap();
    assert_eq!(run(&["beta", "index-set", "--system", bad.path().to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn verify_single_genus() {
    let o = run(&["verify", "--genus", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("criterion ")).count(), 9);
    assert!(!out.contains("FAIL"));
}
