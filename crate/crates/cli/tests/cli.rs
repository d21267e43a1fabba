use std::process::{Command, Output};

use serde_json::Value;

fn qmick(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qmick")).args(args).env_remove("QMICK_DIM_CAP").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn generators_symplectic_rank_two() {
    let o = qmick(&["generators", "--type", "C", "--rank", "2", "--format", "json"]);
    assert!(o.status.success());
    let v = json(&o);
    let names: Vec<&str> = v["generators"].as_array().unwrap().iter().map(|g| g["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["z_{-3}", "z_{-2}", "z_{-1}", "z_{0}", "z_{1}", "z_{2}", "z_{3}"]);
}

#[test]
fn generators_latex_lowest() {
    let o = qmick(&["generators", "--type", "B", "--rank", "2", "--format", "latex"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("z_{-1} &= f_{1} \\\\"));
}

#[test]
fn generators_are_deterministic() {
    let args = ["generators", "--type", "D", "--rank", "3", "--format", "json"];
    assert_eq!(qmick(&args).stdout, qmick(&args).stdout);
}

#[test]
fn rtable_special_entries() {
    let o = qmick(&["rtable", "--type", "B", "--rank", "2"]);
    assert!(stdout(&o).contains("(2,4) = f2 f2 (q - 1)"), "{}", stdout(&o));
    let o = qmick(&["rtable", "--type", "D", "--rank", "3"]);
    assert!(stdout(&o).contains("(3,4) = 0"));
    let o = qmick(&["rtable", "--type", "C", "--rank", "2", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["sector"], "F");
    assert_eq!(v["source"], "closed");
    assert_eq!(v["entries"]["(2,3)"]["terms"][0]["f"], serde_json::json!([2]));
}

#[test]
fn rtable_oracle_and_upper() {
    let o = qmick(&["rtable", "--type", "B", "--rank", "2", "--oracle", "--upper", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["sector"], "E");
    assert_eq!(v["source"], "recursion");
    assert_eq!(v["entries"]["(2,1)"]["terms"][0]["e"], serde_json::json!([1]));
}

#[test]
fn rtable_diff_vanishes_mod_serre() {
    for (t, r) in [("B", "2"), ("C", "2"), ("D", "3")] {
        let o = qmick(&["rtable", "--type", t, "--rank", r, "--diff"]);
        assert!(o.status.success(), "{t}{r}: {}", stdout(&o));
    }
    let o = qmick(&["rtable", "--type", "B", "--rank", "3", "--diff", "--mode", "sampled", "--seeds", "1,2,3"]);
    assert!(o.status.success());
}

#[test]
fn verify_all_exact_b2() {
    let o = qmick(&["verify", "--type", "B", "--rank", "2", "--suite", "all", "--mode", "exact"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["pass"], true);
    let r = &v["reports"][0];
    for key in ["claim", "mode", "component_degrees", "dims", "verdict", "seeds"] {
        assert!(r.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn verify_lowering_sampled_c3() {
    let o = qmick(&["verify", "--type", "C", "--rank", "3", "--suite", "lowering", "--mode", "sampled", "--seeds", "1,2,3"]);
    assert!(o.status.success());
    assert_eq!(json(&o)["seeds"], serde_json::json!([1, 2, 3]));
}

#[test]
fn verify_eta_across_ranks() {
    for (t, r) in [("B", "2"), ("B", "3"), ("B", "4"), ("C", "2"), ("C", "3"), ("C", "4"), ("D", "3"), ("D", "4")] {
        let o = qmick(&["verify", "--type", t, "--rank", r, "--suite", "eta"]);
        assert!(o.status.success(), "{t}{r}");
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(qmick(&["verify", "--type", "B", "--rank", "1"]).status.code(), Some(2));
    assert_eq!(qmick(&["verify", "--type", "E", "--rank", "6"]).status.code(), Some(2));
    assert_eq!(qmick(&["verify", "--type", "B", "--rank", "2", "--mode", "sampled"]).status.code(), Some(2));
    assert_eq!(qmick(&["verify", "--type", "B", "--rank", "2", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn cap_exceeded_exits_three() {
    let o = qmick(&["verify", "--type", "B", "--rank", "2", "--suite", "rtable", "--dim-cap", "1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("sampled"));
    let o = Command::new(env!("CARGO_BIN_EXE_qmick"))
        .args(["verify", "--type", "B", "--rank", "2", "--suite", "commutator"])
        .env("QMICK_DIM_CAP", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}
