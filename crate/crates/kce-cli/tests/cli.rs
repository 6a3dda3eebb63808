//! Black-box tests against the compiled binary: exit codes, golden output,
//! and the file formats the subcommands exchange with each other.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const P3: &str = "p tw 3 2\n1 2\n2 3\n";
const C4: &str = "p tw 4 4\n1 2\n2 3\n3 4\n1 4\n";
const C5: &str = "p tw 5 5\n1 2\n2 3\n3 4\n4 5\n1 5\n";
const K3: &str = "p tw 3 3\n1 2\n1 3\n2 3\n";
const K4: &str = "p tw 4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
const P6: &str = "p tw 6 5\n1 2\n2 3\n3 4\n4 5\n5 6\n";

fn kce_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kce"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("terminated by signal")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

fn json_out(out: &Output) -> Value {
    serde_json::from_str(stdout(out).trim()).expect("stdout is one JSON object")
}

fn put(dir: &Path, name: &str, contents: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, contents).expect("write test input");
    p
}

fn s(p: &Path) -> &str {
    p.to_str().expect("UTF-8 path")
}

#[test]
fn verify_reports_path_witness() {
    let dir = TempDir::new().unwrap();
    let g = put(dir.path(), "p3.gr", P3);
    let ord = put(dir.path(), "p3.ord", "1 2 3\n");

    let out = kce_in(dir.path(), &["verify", "-k", "2", s(&g), s(&ord)]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "1 2 3\n");

    let out = kce_in(dir.path(), &["verify", "--json", "-k", "2", s(&g), s(&ord)]);
    assert_eq!(code(&out), 1);
    let v = json_out(&out);
    assert_eq!(v["kce"], Value::Bool(false));
    assert_eq!(v["k"], 2);
    assert_eq!(v["witness"], serde_json::json!([1, 2, 3]));
}

#[test]
fn verify_accepts_middle_first_path_order() {
    let dir = TempDir::new().unwrap();
    let g = put(dir.path(), "p3.gr", P3);
    let ord = put(dir.path(), "p3.ord", "2 1 3\n");

    let out = kce_in(dir.path(), &["verify", "-k", "2", s(&g), s(&ord)]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "ordering is 2-clique-extendible\n");

    // The global flags are accepted before the subcommand too.
    let out = kce_in(
        dir.path(),
        &["--json", "--threads", "2", "verify", "-k", "2", s(&g), s(&ord)],
    );
    assert_eq!(code(&out), 0);
    assert_eq!(json_out(&out)["kce"], Value::Bool(true));
}

#[test]
fn verify_with_large_k_has_no_pairs_to_check() {
    let dir = TempDir::new().unwrap();
    let g = put(dir.path(), "p3.gr", P3);
    let ord = put(dir.path(), "p3.ord", "1 2 3\n");
    let out = kce_in(dir.path(), &["verify", "-k", "3", s(&g), s(&ord)]);
    assert_eq!(code(&out), 0);
}

#[test]
fn verify_through_decomposition_matches_pair_scan() {
    let dir = TempDir::new().unwrap();
    let g = put(dir.path(), "p3.gr", P3);
    let td = dir.path().join("p3.td");
    let out = kce_in(dir.path(), &["decomp", s(&g), "--out", s(&td)]);
    assert_eq!(code(&out), 0);

    for (ord_text, want_code, want_line) in [
        ("1 2 3\n", 1, "1 2 3\n"),
        ("2 1 3\n", 0, "ordering is 2-clique-extendible\n"),
    ] {
        let ord = put(dir.path(), "cur.ord", ord_text);
        let plain = kce_in(dir.path(), &["verify", "-k", "2", s(&g), s(&ord)]);
        let viatd = kce_in(
            dir.path(),
            &["verify", "-k", "2", "--td", s(&td), s(&g), s(&ord)],
        );
        assert_eq!(code(&plain), want_code);
        assert_eq!(code(&viatd), want_code);
        assert_eq!(stdout(&plain), want_line);
        assert_eq!(stdout(&viatd), want_line);
    }

    // A decomposition for the wrong vertex count is an input error.
    let c5 = put(dir.path(), "c5.gr", C5);
    let td5 = dir.path().join("c5.td");
    kce_in(dir.path(), &["decomp", s(&c5), "--out", s(&td5)]);
    let ord = put(dir.path(), "p3.ord", "1 2 3\n");
    let out = kce_in(
        dir.path(),
        &["verify", "-k", "2", "--td", s(&td5), s(&g), s(&ord)],
    );
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("declares 5 vertices, graph has 3"));
}

#[test]
fn decomp_reports_width_and_writes_pace_file() {
    let dir = TempDir::new().unwrap();
    let g = put(dir.path(), "c5.gr", C5);

    let out = kce_in(dir.path(), &["decomp", s(&g)]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("treewidth 2\n"));
    assert!(text.contains("s td "));

    let td = dir.path().join("c5.td");
    let out = kce_in(dir.path(), &["decomp", "--json", s(&g), "--out", s(&td)]);
    assert_eq!(code(&out), 0);
    let v = json_out(&out);
    assert_eq!(v["width"], 2);
    assert!(v["bags"].as_u64().unwrap() >= 1);
    let written = fs::read_to_string(&td).unwrap();
    assert!(written.starts_with("s td "));
}

#[test]
fn find_returns_lex_first_ordering() {
    let dir = TempDir::new().unwrap();
    let g = put(dir.path(), "p3.gr", P3);
    let found = dir.path().join("found.ord");

    let out = kce_in(
        dir.path(),
        &["find", "-k", "2", s(&g), "--out", s(&found)],
    );
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1 3 2\n");
    assert_eq!(fs::read_to_string(&found).unwrap(), "1 3 2\n");

    let out = kce_in(dir.path(), &["verify", "-k", "2", s(&g), s(&found)]);
    assert_eq!(code(&out), 0);

    let out = kce_in(dir.path(), &["find", "--json", "-k", "2", s(&g)]);
    let v = json_out(&out);
    assert_eq!(v["found"], Value::Bool(true));
    assert_eq!(v["ordering"], serde_json::json!([1, 3, 2]));
    assert!(v["nodes"].as_u64().unwrap() > 0);
}

#[test]
fn find_reports_impossibility_after_exhaustion() {
    let dir = TempDir::new().unwrap();
    kce_in(dir.path(), &["gadget", "F", "-k", "2"]);
    let out = kce_in(dir.path(), &["find", "--json", "-k", "2", "F2.gr"]);
    assert_eq!(code(&out), 1);
    let v = json_out(&out);
    assert_eq!(v["found"], Value::Bool(false));
    assert_eq!(v["exhausted"], Value::Bool(true));

    let out = kce_in(dir.path(), &["find", "-k", "2", "F2.gr"]);
    assert!(stdout(&out).contains("no 2-clique-extendible ordering exists"));
}

#[test]
fn find_stops_at_node_budget() {
    let dir = TempDir::new().unwrap();
    kce_in(dir.path(), &["gadget", "F", "-k", "3"]);
    let out = kce_in(
        dir.path(),
        &["find", "--json", "-k", "3", "--budget", "1000", "F3.gr"],
    );
    assert_eq!(code(&out), 3);
    let v = json_out(&out);
    assert_eq!(v["found"], Value::Bool(false));
    assert_eq!(v["exhausted"], Value::Bool(false));
    assert_eq!(v["nodes"], 1000);
}

#[test]
fn gadget_f_emits_graph_and_role_labels() {
    let dir = TempDir::new().unwrap();
    let out = kce_in(dir.path(), &["gadget", "F", "-k", "3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("wrote F3.gr (15 vertices, 40 edges)"));

    let gr = fs::read_to_string(dir.path().join("F3.gr")).unwrap();
    assert!(gr.starts_with("p tw 15 40\n"));

    let labels: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("F3.json")).unwrap()).unwrap();
    let map = labels.as_object().unwrap();
    assert_eq!(map.len(), 15);
    for i in 1..=5 {
        assert!(map.contains_key(&format!("v{i}")));
    }
    assert!(map.contains_key("u1,2") && map.contains_key("u4,5"));
    let mut ids: Vec<u64> = map.values().map(|v| v.as_u64().unwrap()).collect();
    ids.sort_unstable();
    assert_eq!(ids, (1..=15).collect::<Vec<u64>>());
}

#[test]
fn gadget_gamma_ordering_passes_verification() {
    let dir = TempDir::new().unwrap();
    let prefix = dir.path().join("g3");
    let out = kce_in(
        dir.path(),
        &["gadget", "Gamma", "-k", "3", "--ordering", "--out", s(&prefix)],
    );
    assert_eq!(code(&out), 0);

    let gr = prefix.with_extension("gr");
    let ord = prefix.with_extension("ord");
    assert!(fs::read_to_string(&gr).unwrap().starts_with("p tw 14 "));
    let out = kce_in(dir.path(), &["verify", "-k", "3", s(&gr), s(&ord)]);
    assert_eq!(code(&out), 0);
}

#[test]
fn gadget_f_refuses_the_ordering_flag() {
    let dir = TempDir::new().unwrap();
    let out = kce_in(dir.path(), &["gadget", "F", "-k", "3", "--ordering"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("no k-C-E ordering"));
}

#[test]
fn reduce_threecol_writes_graph_trace_and_lifted_ordering() {
    let dir = TempDir::new().unwrap();
    put(dir.path(), "k2.gr", "p tw 2 1\n1 2\n");
    let col = put(dir.path(), "k2.col", "1 2\n");

    let out = kce_in(
        dir.path(),
        &["reduce", "--from", "3col", "k2.gr", "--lift", s(&col)],
    );
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("wrote k2-3col.gr (27 vertices,"));
    assert!(text.contains("wrote k2-3col.trace.json"));
    assert!(text.contains("wrote k2-3col.ord"));

    let gr = fs::read_to_string(dir.path().join("k2-3col.gr")).unwrap();
    assert!(gr.starts_with("p tw 27 "));
    let trace: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("k2-3col.trace.json")).unwrap())
            .unwrap();
    assert_eq!(trace["reduction"], "threecol_to_find");
    let k = trace["k"].as_u64().unwrap().to_string();

    let out = kce_in(
        dir.path(),
        &["verify", "-k", &k, "k2-3col.gr", "k2-3col.ord"],
    );
    assert_eq!(code(&out), 0);
}

#[test]
fn reduce_clique_ordering_tracks_clique_presence() {
    let dir = TempDir::new().unwrap();
    put(dir.path(), "empty3.gr", "p tw 3 0\n");
    put(dir.path(), "p3.gr", P3);

    // Without a 2-clique the emitted block ordering is accepted.
    let out = kce_in(
        dir.path(),
        &["reduce", "--from", "clique", "-k", "2", "empty3.gr", "--out", "no2"],
    );
    assert_eq!(code(&out), 0);
    let out = kce_in(dir.path(), &["verify", "-k", "2", "no2.gr", "no2.ord"]);
    assert_eq!(code(&out), 0);

    // With one (any edge) the same construction must be rejected.
    let out = kce_in(
        dir.path(),
        &["reduce", "--from", "clique", "-k", "2", "p3.gr", "--out", "yes2"],
    );
    assert_eq!(code(&out), 0);
    let out = kce_in(dir.path(), &["verify", "-k", "2", "yes2.gr", "yes2.ord"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn reduce_betweenness_lift_verifies() {
    let dir = TempDir::new().unwrap();
    put(
        dir.path(),
        "inst.json",
        "{\"universe\": 3, \"triples\": [[0, 1, 2]]}\n",
    );
    let psi = put(dir.path(), "psi.ord", "1 2 3\n");

    let out = kce_in(
        dir.path(),
        &[
            "reduce", "--from", "betweenness", "-k", "4", "inst.json", "--lift", s(&psi),
            "--out", "bw",
        ],
    );
    assert_eq!(code(&out), 0);
    let gr = fs::read_to_string(dir.path().join("bw.gr")).unwrap();
    assert!(gr.starts_with("p tw 27 "));
    let trace: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("bw.trace.json")).unwrap())
            .unwrap();
    assert_eq!(trace["reduction"], "betweenness_to_find");
    assert_eq!(trace["gadgets"].as_array().unwrap().len(), 1);

    let out = kce_in(dir.path(), &["verify", "-k", "4", "bw.gr", "bw.ord"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn reduce_multicolored_feeds_maxclique() {
    let dir = TempDir::new().unwrap();
    put(dir.path(), "c4.gr", C4);
    let classes = put(dir.path(), "c4.classes", "1 2 1 2\n");

    let out = kce_in(
        dir.path(),
        &[
            "reduce", "--from", "multicolored", "c4.gr", "--classes", s(&classes), "--out", "mc",
        ],
    );
    assert_eq!(code(&out), 0);

    let out = kce_in(
        dir.path(),
        &["maxclique", "--json", "-k", "2", "--ordering", "mc.ord", "mc.gr"],
    );
    assert_eq!(code(&out), 0);
    let v = json_out(&out);
    assert_eq!(v["size"], 2);
    assert_eq!(v["clique"].as_array().unwrap().len(), 2);
}

#[test]
fn maxclique_rejects_non_extendible_orderings() {
    let dir = TempDir::new().unwrap();
    let g = put(dir.path(), "p3.gr", P3);
    let bad = put(dir.path(), "bad.ord", "1 2 3\n");
    let good = put(dir.path(), "good.ord", "2 1 3\n");

    let out = kce_in(
        dir.path(),
        &["maxclique", "-k", "2", "--ordering", s(&bad), s(&g)],
    );
    assert_eq!(code(&out), 2);

    let out = kce_in(
        dir.path(),
        &["maxclique", "-k", "2", "--ordering", s(&good), s(&g)],
    );
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("2\n"));
}

#[test]
fn estimate_is_seed_deterministic_and_near_expectation() {
    let dir = TempDir::new().unwrap();
    let g = put(dir.path(), "p3.gr", P3);
    let args = [
        "estimate", "--json", "-k", "2", s(&g), "--trials", "400", "--seed", "7",
    ];

    let first = kce_in(dir.path(), &args);
    let second = kce_in(dir.path(), &args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);

    let v = json_out(&first);
    assert_eq!(v["subgraphs"], 1);
    assert_eq!(v["trials"], 400);
    assert_eq!(v["seed"], 7);
    let fraction = v["fraction"].as_f64().unwrap();
    assert!((fraction - 1.0 / 3.0).abs() < 0.1, "fraction {fraction}");
}

#[test]
fn oracle_clique_thresholds_the_exit_code() {
    let dir = TempDir::new().unwrap();
    let g = put(dir.path(), "k3.gr", K3);

    let out = kce_in(dir.path(), &["oracle", "clique", s(&g)]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "3\n1 2 3\n");

    let out = kce_in(dir.path(), &["oracle", "clique", s(&g), "-k", "3"]);
    assert_eq!(code(&out), 0);
    let out = kce_in(dir.path(), &["oracle", "clique", s(&g), "-k", "4"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn oracle_betweenness_decides_instances() {
    let dir = TempDir::new().unwrap();
    let sat = put(
        dir.path(),
        "sat.json",
        "{\"universe\": 3, \"triples\": [[0, 1, 2]]}\n",
    );
    // Three triples demanding three different middles of a 3-set.
    let unsat = put(
        dir.path(),
        "unsat.json",
        "{\"universe\": 3, \"triples\": [[0, 1, 2], [1, 0, 2], [0, 2, 1]]}\n",
    );

    let out = kce_in(dir.path(), &["oracle", "betweenness", s(&sat)]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1 2 3\n");

    let out = kce_in(dir.path(), &["oracle", "betweenness", s(&unsat)]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "unsatisfiable\n");
}

#[test]
fn oracle_threecol_decides_graphs() {
    let dir = TempDir::new().unwrap();
    let c5 = put(dir.path(), "c5.gr", C5);
    let k4 = put(dir.path(), "k4.gr", K4);

    let out = kce_in(dir.path(), &["oracle", "3col", s(&c5)]);
    assert_eq!(code(&out), 0);
    let labels: Vec<usize> = stdout(&out)
        .split_whitespace()
        .map(|t| t.parse().unwrap())
        .collect();
    assert_eq!(labels.len(), 5);
    assert!(labels.iter().all(|&c| (1..=3).contains(&c)));
    for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)] {
        assert_ne!(labels[u], labels[v]);
    }

    let out = kce_in(dir.path(), &["oracle", "3col", s(&k4)]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "not 3-colourable\n");
}

#[test]
fn oracle_triple_finds_disjoint_edges() {
    let dir = TempDir::new().unwrap();
    let p6 = put(dir.path(), "p6.gr", P6);
    let k3 = put(dir.path(), "k3.gr", K3);
    let ord6 = put(dir.path(), "p6.ord", "1 2 3 4 5 6\n");
    let ord3 = put(dir.path(), "k3.ord", "1 2 3\n");

    let out = kce_in(dir.path(), &["oracle", "triple", "--json", s(&p6), s(&ord6)]);
    assert_eq!(code(&out), 0);
    assert_eq!(json_out(&out)["triple"], serde_json::json!([[1, 2], [2, 3], [3, 4]]));

    let out = kce_in(dir.path(), &["oracle", "triple", s(&k3), s(&ord3)]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "no disjoint triple\n");
}

#[test]
fn malformed_inputs_exit_two() {
    let dir = TempDir::new().unwrap();
    let g = put(dir.path(), "p3.gr", P3);

    // Missing file.
    let out = kce_in(dir.path(), &["verify", "-k", "2", "absent.gr", "absent.ord"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("cannot open"));

    // Header and edge list disagree.
    let bad = put(dir.path(), "bad.gr", "p tw 2 5\n1 2\n");
    let ord = put(dir.path(), "p3.ord", "1 2 3\n");
    let out = kce_in(dir.path(), &["verify", "-k", "2", s(&bad), s(&ord)]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("declares 5 edges"));

    // Ordering of the wrong length.
    let short = put(dir.path(), "short.ord", "1 2\n");
    let out = kce_in(dir.path(), &["verify", "-k", "2", s(&g), s(&short)]);
    assert_eq!(code(&out), 2);

    // Missing required parameter for a reduction.
    let out = kce_in(dir.path(), &["reduce", "--from", "clique", s(&g)]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("requires --k"));

    // Unknown subcommand (clap usage error).
    let out = kce_in(dir.path(), &["frobnicate"]);
    assert_eq!(code(&out), 2);
}
