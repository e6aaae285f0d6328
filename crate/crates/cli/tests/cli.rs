use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_hypercheck"))
        .args(args)
        .env("HYPERCHECK_THREADS", "2")
        .output()
        .expect("binary runs");
    let text = String::from_utf8(out.stdout).expect("utf-8");
    let v = serde_json::from_str(&text).unwrap_or_else(|e| panic!("bad JSON {text:?}: {e}"));
    (out.status.code().expect("exit code"), v)
}

fn raw(args: &[&str]) -> Vec<u8> {
    Command::new(env!("CARGO_BIN_EXE_hypercheck"))
        .args(args)
        .output()
        .expect("binary runs")
        .stdout
}

#[test]
fn check_cubic_not_hyperbolic() {
    let (code, v) = run(&["check-cubic", "--a", "1", "--b", "0", "--c", "1", "--n", "3"]);
    assert_eq!(code, 2);
    assert_eq!(v["status"], "NotHyperbolic");
    assert_eq!(v["detail"]["product"], "54/1");
    assert_eq!(v["witness"]["line_profile"]["n_nonreal"], 2);
}

#[test]
fn check_cubic_hyperbolic_with_negative_input() {
    let (code, v) = run(&["check-cubic", "--a", "0", "--b", "1", "--c", "-1/10", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "Hyperbolic");
    assert!(v.get("witness").is_none());
}

#[test]
fn g0_exact_output() {
    let out = raw(&["g0", "--n", "3"]);
    assert_eq!(
        String::from_utf8(out).unwrap().trim(),
        r#"{"coeffs":["2/1","-3/1","0/1","1/1"],"n":3}"#
    );
}

#[test]
fn demo_quintic_obstruction() {
    let (code, v) = run(&["demo-quintic", "--samples", "100"]);
    assert_eq!(code, 0);
    let ext = &v["extendability"];
    assert_eq!(ext["extendable"], false);
    assert_eq!(ext["kind"], "MultiplicityObstruction");
    let obs: Vec<(String, u64)> = ext["obstruction"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| {
            (
                o["root"]["exact"].as_str().unwrap().to_string(),
                o["multiplicity"].as_u64().unwrap(),
            )
        })
        .collect();
    assert_eq!(obs, vec![("1/1".into(), 3), ("2/1".into(), 3)]);
    assert_eq!(v["image_proportional_to_expected"], true);
    assert_eq!(v["falsifier"]["status"], "NoCounterexampleFound");
    assert_eq!(v["delta_one_one"]["negative"], 0);
}

#[test]
fn malformed_input_is_error_json() {
    let (code, v) = run(&["check-quartic", "--hook", "{not json"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["code"], "InvalidInput");
    let (code, v) = run(&["check-cubic", "--a", "0", "--b", "0", "--c", "0", "--n", "3"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["code"], "ZeroPolynomial");
    let (code, v) = run(&["no-such-command"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["code"], "Usage");
    let (code, v) = run(&["phi", "--roots", "1/2,1/4,1/2"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["code"], "NotInSimplex");
}

#[test]
fn operator_round_trip() {
    let hook = r#"{"n":5,"d":5,"basis":"e","a":["0","0","7","-220","4500"]}"#;
    let (_, map) = run(&["operator", "--hook", hook]);
    let (_, back) = run(&["hook-of", "--map", &map.to_string()]);
    assert_eq!(back["a"], serde_json::json!(["0/1", "0/1", "1750/1", "-5500/1", "4500/1"]));
    let (_, ext) = run(&["extend", "--map", &map.to_string()]);
    assert_eq!(ext["kind"], "MultiplicityObstruction");
    // The falsifier accepts the hook emitted by hook-of.
    let (code, v) = run(&["falsify", "--hook", &back.to_string(), "--budget", "16"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "NoCounterexampleFound");
}

#[test]
fn extend_target_from_g0_output() {
    // T(g0) = t^4 has the preimage t^4 - t^3.
    let target = r#"{"coeffs":["0","0","0","0","1"],"n":4}"#;
    let (code, v) = run(&["extend", "--target", target, "--n", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["extendable"], true);
    assert_eq!(v["kind"], "Extension");
    assert_eq!(v["f"]["coeffs"], serde_json::json!(["0/1", "0/1", "0/1", "-1/1", "1/1"]));
    let (_, hook) = run(&["hook-of", "--map", &v["map"].to_string()]);
    let (code, q) = run(&["check-quartic", "--hook", &hook.to_string()]);
    assert_eq!(code, 0);
    assert_eq!(q["status"], "Hyperbolic");
}

#[test]
fn file_payloads_and_cone() {
    let dir = std::env::temp_dir().join(format!("hypercheck-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let hook = dir.join("e2.json");
    std::fs::write(&hook, r#"{"n":2,"d":2,"basis":"etilde","a":["0","1"]}"#).unwrap();
    let arg = format!("@{}", hook.display());
    let (_, v) = run(&["cone-member", "--hook", &arg, "--point", r#"{"x":["1","2"]}"#]);
    assert_eq!(v["member"], true);
    let (_, v) = run(&["cone-member", "--hook", &arg, "--point", r#"{"x":["1","-1"]}"#]);
    assert_eq!(v["member"], false);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn deterministic_output() {
    let hook = r#"{"n":4,"d":4,"basis":"etilde","a":["1","0","0","1"]}"#;
    let a = raw(&["falsify", "--hook", hook, "--seed", "5"]);
    let b = raw(&["falsify", "--hook", hook, "--seed", "5"]);
    assert_eq!(a, b);
    let a = raw(&["conjecture", "--target", r#"{"coeffs":["-18000","51000","-49500","17250","0","-750"],"n":5}"#, "--n", "5", "--samples", "200"]);
    let b = raw(&["conjecture", "--target", r#"{"coeffs":["-18000","51000","-49500","17250","0","-750"],"n":5}"#, "--n", "5", "--samples", "200"]);
    assert_eq!(a, b);
    let v: Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["extendable"], false);
    assert_eq!(v["falsifier"]["status"], "NoCounterexampleFound");
}

#[test]
fn pretty_adds_approximations() {
    let (_, v) = run(&["--pretty", "phi", "--roots", "1/3,1/3,1/3,0"]);
    assert_eq!(v["point"][0], "1/2");
    assert_eq!(v["approx"]["point"][0], 0.5);
}

#[test]
fn normal_form_and_ek_check() {
    let (code, v) = run(&["normal-form", "--a", "0", "--b", "1", "--c", "0", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["c1"], "0/1");
    let (code, v) = run(&["ek-check", "--k", "3", "--n", "3", "--ell", "1,1,1", "--trials", "50"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
}
