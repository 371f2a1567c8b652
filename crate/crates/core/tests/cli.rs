use sombor_core::cli::{run_with, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
use sombor_core::{build_u_n_d, index_value, Graph, IndexKind};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("sombor").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn max_theorem_passes_to_nine() {
    let (code, out, _) = run(&[
        "verify",
        "--theorem",
        "max",
        "--index",
        "so",
        "--n-max",
        "9",
    ]);
    assert_eq!(code, EXIT_PASS);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("suite,case,expected,observed,pass"));
    assert_eq!(lines.count(), 10);
}

#[test]
fn infeasible_range_is_a_usage_error() {
    let (code, out, err) = run(&["verify", "--theorem", "max", "--n-max", "2"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(out.is_empty());
    assert!(err.starts_with("error:"));
    assert_eq!(
        run(&["verify", "--theorem", "max", "--n-max", "13"]).0,
        EXIT_USAGE
    );
    assert_eq!(run(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(run(&["extremal", "--n", "6", "--d", "5"]).0, EXIT_USAGE);
}

#[test]
fn extremal_json() {
    let (code, out, _) = run(&[
        "extremal",
        "--n",
        "6",
        "--d",
        "4",
        "--index",
        "so",
        "--direction",
        "max",
        "--emit",
        "json",
    ]);
    assert_eq!(code, EXIT_PASS);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let value: f64 = v["value"].as_str().unwrap().parse().unwrap();
    assert!((value - (2.0 * 10f64.sqrt() + 4.0 * 13f64.sqrt())).abs() < 1e-9);
    assert_eq!(v["optima"].as_array().unwrap().len(), 1);
    assert_eq!(v["count_searched"], 4);

    let (_, csv, _) = run(&["extremal", "--n", "6", "--d", "4", "--emit", "csv"]);
    assert!(csv
        .starts_with("n,d,index,direction,value,optima,count_searched\n6,4,so,max,20.7467604222,"));
}

#[test]
fn construct_output_feeds_index() {
    let (_, text, _) = run(&[
        "construct",
        "--family",
        "u-abc",
        "--n",
        "5",
        "--a",
        "2",
        "--b",
        "0",
        "--c",
        "0",
    ]);
    let path = std::env::temp_dir().join(format!("sombor-cli-{}.txt", std::process::id()));
    std::fs::write(&path, &text).unwrap();
    let (code, out, _) = run(&["index", "--index", "so", "--input", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(code, EXIT_PASS);
    let exact = 2.0 * 17f64.sqrt() + 2.0 * 20f64.sqrt() + 2.0 * 2f64.sqrt();
    assert!((out.trim().parse::<f64>().unwrap() - exact).abs() < 1e-9);
}

#[test]
fn enumerate_by_diameter() {
    let (code, out, _) = run(&["enumerate", "--n", "7", "--d", "4", "--jobs", "2"]);
    assert_eq!(code, EXIT_PASS);
    let graphs: Vec<Graph> = out.split("\n\n").map(|s| s.parse().unwrap()).collect();
    assert!(graphs
        .iter()
        .all(|g| g.diameter().unwrap() == 4 && g.is_unicyclic()));
    let (_, count, _) = run(&["enumerate", "--n", "7", "--d", "4", "--emit", "count"]);
    assert_eq!(count.trim().parse::<usize>().unwrap(), graphs.len());
}

#[test]
fn json_report_has_summary() {
    let (code, out, _) = run(&["lemmas", "--emit", "json"]);
    assert_eq!(code, EXIT_PASS);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["summary"]["pass"], true);
    assert_eq!(v["rows"].as_array().unwrap().len(), 6);
}

#[test]
fn tolerance_flag_changes_tie_collection() {
    // with a huge tolerance every class ties with the optimum, but the
    // uniqueness check then fails, which is a verification failure
    let (code, _, err) = run(&[
        "verify",
        "--theorem",
        "max",
        "--index",
        "so",
        "--n-max",
        "7",
        "--tolerance",
        "100",
    ]);
    assert_eq!(code, EXIT_FAIL);
    assert!(err.contains("FAIL max-theorem(so)"));
}

#[test]
fn inequalities_and_closed_form() {
    assert_eq!(
        run(&["inequalities", "--grid-max-degree", "6"]).0,
        EXIT_PASS
    );
    assert_eq!(
        run(&["inequalities", "--grid-max-degree", "4"]).0,
        EXIT_USAGE
    );
    let (code, out, _) = run(&["closed-form", "--n", "10", "--d", "5", "--index", "sored"]);
    assert_eq!(code, EXIT_PASS);
    let direct = index_value(&build_u_n_d(10, 5).unwrap(), IndexKind::ReducedSombor);
    assert!((out.trim().parse::<f64>().unwrap() - direct).abs() < 1e-9);
    let exact = 20.0 + 2.0 * 26f64.sqrt() + 3.0 * 5f64.sqrt() + 1.0;
    assert!((direct - exact).abs() < 1e-9);
}
