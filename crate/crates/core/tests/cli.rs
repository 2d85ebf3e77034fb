use std::process::{Command, Output};

use serde_json::Value;

fn diamond(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diamond"))
        .args(args)
        .env_remove("DIAMOND_BUDGET_PATHS")
        .env_remove("DIAMOND_BUDGET_VERTICES")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn graph_reports_path_counts() {
    let out = diamond(&["graph", "young", "4,2,2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("paths: 56"));
    let doc = json(&out);
    assert_eq!(doc["n"], 8);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b4.dot");
    let out = diamond(&[
        "graph",
        "boolean",
        "4",
        "--format",
        "dot",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("paths: 24"));
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("digraph"));
}

#[test]
fn json_graphs_round_trip_through_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let out = diamond(&["graph", "skew", "3,2/1", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = diamond(&["group", "json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let direct = diamond(&["group", "skew", "3,2/1"]);
    assert_eq!(json(&out)["order"], json(&direct)["order"]);
}

#[test]
fn parse_errors_exit_2_and_name_the_token() {
    let out = diamond(&["graph", "young", "4;2;2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("4;2;2"));

    let out = diamond(&["graph", "pascal", "3,x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("\"x\""));

    let out = diamond(&["yof", "2,1", "sideways"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("sideways"));

    let out = diamond(&["graph", "skew", "2,1/3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = diamond(&["table", "10"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn group_examples() {
    let out = diamond(&["group", "young", "3,2,1", "--classify"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["order"], "5160960");
    assert_eq!(doc["label"], "WeylD(8)");
    assert_eq!(doc["classification"]["d_verified"], true);

    let doc = json(&diamond(&["group", "young", "6,3", "--classify"]));
    assert_eq!(doc["label"], "Alternating(48)");

    let doc = json(&diamond(&["group", "young", "3,1,1"]));
    assert_eq!(doc["order"], "24");
    assert_eq!(doc["diagram"]["is_hook"], true);
    assert_eq!(doc["diagram"]["match"], true);
}

#[test]
fn group_flags() {
    let doc = json(&diamond(&["group", "young", "3,2,1", "--transitivity", "--blocks"]));
    assert_eq!(doc["transitivity"]["transitive"], true);
    assert_eq!(doc["transitivity"]["two_transitive"], false);
    let blocks = doc["blocks"].as_array().unwrap();
    assert_eq!(blocks.len(), 8);
    assert!(blocks.iter().all(|b| b.as_array().unwrap().len() == 2));

    // S_3 acts regularly on the 6 paths of B_3, so blocks exist
    let doc = json(&diamond(&["group", "boolean", "3", "--blocks"]));
    assert_eq!(doc["blocks"].as_array().unwrap().len(), 3);
    // and naturally on the 3 paths to (2,1), which is primitive
    let doc = json(&diamond(&["group", "pascal", "2,1", "--blocks"]));
    assert_eq!(doc["blocks"], Value::Null);
}

#[test]
fn budgets_exit_3_and_follow_precedence() {
    let out = diamond(&["--max-paths", "10", "group", "boolean", "4"]);
    assert_eq!(out.status.code(), Some(3));

    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("budget.conf");
    std::fs::write(&cfg, "# tight\npaths = 10\n").unwrap();
    let config = cfg.to_str().unwrap();
    assert_eq!(
        diamond(&["--config", config, "group", "boolean", "4"]).status.code(),
        Some(3)
    );
    // flags beat the config file
    let out = diamond(&["--config", config, "--max-paths", "100", "group", "boolean", "4"]);
    assert_eq!(out.status.code(), Some(0));

    // the environment sits below the config file
    let env_only = Command::new(env!("CARGO_BIN_EXE_diamond"))
        .args(["group", "boolean", "4"])
        .env("DIAMOND_BUDGET_PATHS", "10")
        .output()
        .unwrap();
    assert_eq!(env_only.status.code(), Some(3));
    std::fs::write(&cfg, "paths = 100\n").unwrap();
    let both = Command::new(env!("CARGO_BIN_EXE_diamond"))
        .args(["--config", config, "group", "boolean", "4"])
        .env("DIAMOND_BUDGET_PATHS", "10")
        .output()
        .unwrap();
    assert_eq!(both.status.code(), Some(0));

    std::fs::write(&cfg, "paths = lots\n").unwrap();
    assert_eq!(
        diamond(&["--config", config, "group", "boolean", "2"]).status.code(),
        Some(2)
    );

    assert_eq!(
        diamond(&["yof", "4,3", "young", "--probe", "10"]).status.code(),
        Some(3)
    );
    assert_eq!(diamond(&["yof", "5,4", "young", "--relations"]).status.code(), Some(3));
    let out = diamond(&["--yof-relations-n", "9", "yof", "5,4", "young", "--relations"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn table_is_deterministic_and_flags_mismatches() {
    let a = diamond(&["table", "5"]);
    let b = diamond(&["table", "5", "--jobs", "3"]);
    assert_eq!(a.stdout, b.stdout);
    // one-row and one-column diagrams contradict the hook rule
    assert_eq!(a.status.code(), Some(1));
    assert!(stderr(&a).contains("(5) rule Hook, computed Trivial"));
    let text = String::from_utf8(a.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,lambda,dim,is_hook,is_symmetric,rule,predicted_order,order,tag,transitive,two_transitive,match"
    );
    assert!(text.contains("4,\"2,2\",2,false,true,FullSym,2,2,Symmetric(2),true,true,true"));
    assert_eq!(text.lines().count(), 1 + 1 + 2 + 3 + 5 + 7);
}

#[test]
fn table_orders_reproduce_under_group() {
    let out = diamond(&["table", "6"]);
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    for rec in reader.records() {
        let rec = rec.unwrap();
        let (lambda, order) = (&rec[1], &rec[7]);
        if lambda == "3,2,1" || lambda == "4,2" {
            let doc = json(&diamond(&["group", "young", lambda]));
            assert_eq!(doc["order"], order);
            assert!(order.parse::<num_bigint::BigUint>().is_ok());
        }
    }
}

#[test]
fn yof_examples() {
    let doc = json(&diamond(&["yof", "3,2", "young", "--relations"]));
    assert!(doc["relations"]["max_residual"].as_f64().unwrap() < 1e-10);

    let doc = json(&diamond(&["yof", "2,1", "young", "--probe", "100"]));
    assert_eq!(doc["probe"]["verdict"], "Finite");
    assert_eq!(doc["probe"]["count"], 6);

    let out = diamond(&["yof", "2,1", "custom:1.0", "--probe", "10000"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["probe"]["verdict"], "ExceededBound");

    let doc = json(&diamond(&["yof", "3,2,1", "combinatorial", "--limit-check"]));
    assert_eq!(doc["limit_check"], true);
}

#[test]
fn yof_exports_csv_matrices() {
    let dir = tempfile::tempdir().unwrap();
    let out = diamond(&["yof", "2,1", "young", "--csv", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["generators"].as_array().unwrap().len(), 2);
    let text = std::fs::read_to_string(dir.path().join("sigma_2.csv")).unwrap();
    let rows: Vec<Vec<f64>> = text
        .lines()
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0][0], 0.5);
    assert_eq!(rows[1][1], -0.5);
    assert!((rows[0][1] - 3f64.sqrt() / 2.0).abs() < 1e-16);
}
