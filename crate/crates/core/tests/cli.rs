use std::path::PathBuf;
use std::process::{Command, Output};

fn omega(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_omega"))
        .args(args)
        .env_remove("OMEGA_MAX_BRUTEFORCE")
        .env_remove("OMEGA_JOBS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("omega-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn verify_is_deterministic_across_jobs() {
    let a = omega(&["verify", "--n", "3", "--jobs", "1"]);
    let b = omega(&["verify", "--n", "3", "--jobs", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("28/28"));
    assert!(!stdout(&a).contains("FAIL"));
}

#[test]
fn hull_n2_has_four_rows() {
    let o = omega(&["hull", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(
        s.starts_with("H-representation\nbegin\n4 4 rational\n"),
        "{s}"
    );
    assert_eq!(s.lines().count(), 8);
}

#[test]
fn usage_errors() {
    for args in [
        &["frobnicate"][..],
        &["vertices", "--n"],
        &["edge-cert", "--n", "2", "--a", "1,3", "--b", "1,2"],
        &["edge-cert", "--n", "2", "--a", "1,2", "--b", "1,2"],
        &["face-test", "--n", "3", "--exclude", "1,1,1"],
        &["census", "--n", "1"],
    ] {
        let o = omega(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
        assert!(o.stdout.is_empty());
    }
    let o = omega(&["verify", "--n", "5", "--max-bruteforce", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--max-bruteforce"));
    let o = omega(&["census", "--n", "5"]);
    assert!(stderr(&o).contains("--allow-large"));
}

#[test]
fn env_vars_stand_in_for_flags() {
    let o = Command::new(env!("CARGO_BIN_EXE_omega"))
        .args(["vertices", "--n", "4"])
        .env("OMEGA_MAX_BRUTEFORCE", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("4 > 3"));
    // the flag wins over the variable
    let o = Command::new(env!("CARGO_BIN_EXE_omega"))
        .args(["vertices", "--n", "4", "--max-bruteforce", "4"])
        .env("OMEGA_MAX_BRUTEFORCE", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn face_test_cases() {
    let o = omega(&["face-test", "--n", "3", "--exclude", "1,1,1", "2,2,2"]);
    let s = stdout(&o);
    assert!(s.contains("class: Disjoint"));
    assert!(s.contains("form: X_{1211} + X_{1222} + X_{1311} + X_{1322} + X_{2311} + X_{2322} = 1"));
    assert!(s.contains("verdict: Facet"));
    let s = stdout(&omega(&[
        "face-test",
        "--n",
        "3",
        "--exclude",
        "1,1,1",
        "1,1,2",
    ]));
    assert!(s.contains("form: X_{1211} = 0"), "{s}");
    let s = stdout(&omega(&[
        "face-test",
        "--n",
        "3",
        "--exclude",
        "1,1,1",
        "1,2,2",
    ]));
    assert!(s.contains("values: a = 0, b = 2, remaining = [1, 1, 1, 1, 1, 1]"));
    assert!(s.contains("verdict: NotFace"));
}

#[test]
fn edge_cert_json() {
    let o = omega(&["edge-cert", "--n", "2", "--a", "1,2", "--b", "2,1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["F_a"], "1");
    assert_eq!(v["F_b"], "1");
    assert_eq!(v["min_other"], "2");
    assert_eq!(v["marked"].as_array().unwrap().len(), 2);
}

#[test]
fn census_json() {
    let o = omega(&["census", "--n", "3", "--orbits"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["facet_count"], 16);
    assert_eq!(v["facets"].as_array().unwrap().len(), 16);
    assert_eq!(
        v["per_vertex_incidence"],
        serde_json::json!([12, 12, 12, 12, 12, 12, 12, 12])
    );
    let sizes: Vec<u64> = v["orbits"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| o["size"].as_u64().unwrap())
        .collect();
    assert_eq!(sizes.iter().sum::<u64>(), 16);
}

#[test]
fn clique_solve_and_dimacs() {
    let g = scratch(
        "g.json",
        r#"{"n":3,"missing_edges":[[[1,1],[2,1]],[[1,2],[2,2]],[[1,1],[3,2]]]}"#,
    );
    let o = omega(&["clique-solve", "--graph", g.to_str().unwrap()]);
    assert_eq!(stdout(&o), "clique: 1,2,1\n");
    let o = omega(&[
        "clique-solve",
        "--graph",
        g.to_str().unwrap(),
        "--enumerate",
    ]);
    assert_eq!(stdout(&o), "cliques: 3\n1,2,1\n2,1,1\n2,1,2\n");
    let o = omega(&["convert", "--input", g.to_str().unwrap(), "--to", "dimacs"]);
    assert_eq!(stdout(&o), "p cnf 3 3\n-1 -2 0\n1 2 0\n-1 3 0\n");
    let dead = scratch(
        "dead.json",
        r#"{"n":2,"missing_edges":[[[1,1],[2,1]],[[1,1],[2,2]],[[1,2],[2,1]],[[1,2],[2,2]]]}"#,
    );
    assert_eq!(
        stdout(&omega(&["clique-solve", "--graph", dead.to_str().unwrap()])),
        "no clique\n"
    );
    let o = omega(&["clique-solve", "--graph", "/nonexistent/graph.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn convert_round_trip() {
    let text = stdout(&omega(&["vertices", "--n", "3", "--reduced"]));
    let t = scratch("v.txt", &text);
    let json = stdout(&omega(&[
        "convert",
        "--input",
        t.to_str().unwrap(),
        "--to",
        "json",
    ]));
    assert_eq!(
        json,
        stdout(&omega(&["vertices", "--n", "3", "--reduced", "--json"]))
    );
    let j = scratch("v.json", &json);
    assert_eq!(
        stdout(&omega(&[
            "convert",
            "--input",
            j.to_str().unwrap(),
            "--to",
            "text"
        ])),
        text
    );

    let h = stdout(&omega(&["hull", "--n", "3"]));
    let t = scratch("h.txt", &h);
    let json = stdout(&omega(&[
        "convert",
        "--input",
        t.to_str().unwrap(),
        "--to",
        "json",
    ]));
    let j = scratch("h.json", &json);
    assert_eq!(
        stdout(&omega(&[
            "convert",
            "--input",
            j.to_str().unwrap(),
            "--to",
            "text"
        ])),
        h
    );
    assert_eq!(
        omega(&["convert", "--input", t.to_str().unwrap(), "--to", "dimacs"])
            .status
            .code(),
        Some(2)
    );
}
