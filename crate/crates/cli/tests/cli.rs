use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_treealpha"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn treealpha");
    // The process may exit before reading its input.
    let _ = child.stdin.take().unwrap().write_all(stdin.as_bytes());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const C5: &str = "Dhc\n";
const C4: &str = "Cl\n";
const K4: &str = "C~\n";

#[test]
fn classify_c5() {
    let o = run(&["classify"], C5);
    assert_eq!(o.status.code(), Some(0));
    let line = stdout(&o);
    assert!(line.contains("chordal=false"), "{line}");
    assert!(line.contains("P3+P1-free=true"), "{line}");
    assert_eq!(line.lines().count(), 1);
}

#[test]
fn classify_selected_classes_and_json() {
    let o = run(&["classify", "--class", "chordal", "--class", "C4-free"], "Dhc\nCl\n");
    assert_eq!(stdout(&o), "chordal=false witness=[[0,1,2,3,4]] C4-free=true\nchordal=false witness=[[0,1,2,3]] C4-free=false witness=[0,1,2,3]\n");
    let o = run(&["--format", "json", "classify"], C5);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["graph6"], "Dhc");
    assert_eq!(run(&["classify", "--class", "nope"], C5).status.code(), Some(1));
}

#[test]
fn classify_empty_and_malformed() {
    let o = run(&["classify"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let o = run(&["classify"], "not graph6\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 1"), "{}", stderr(&o));
    let o = run(&["classify"], "Dhc\n\nxx yy\n");
    assert!(stderr(&o).contains("line 3"));
}

#[test]
fn tree_alpha_values() {
    let o = run(&["tree-alpha", "--mode", "exact"], C5);
    let text = stdout(&o);
    assert!(text.starts_with("# theorem=oracle bound=2 paper_bound=2\nc tree-alpha=2\ns td "), "{text}");
    let o = run(&["tree-alpha", "--mode", "exact"], K4);
    assert!(stdout(&o).contains("c tree-alpha=1\n"));
    let o = run(&["tree-alpha", "--mode", "p3p1"], C4);
    assert!(stdout(&o).starts_with("# theorem=thm1.5 bound=2 paper_bound=2\n"));
}

#[test]
fn tree_alpha_out_file_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let td = dir.path().join("c4.td");
    let g = dir.path().join("c4.g6");
    std::fs::write(&g, C4).unwrap();
    let o = run(&["tree-alpha", "--mode", "p3p1", "--out", td.to_str().unwrap()], C4);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "tree-alpha=2\n# theorem=thm1.5 bound=2 paper_bound=2\n");
    let o = run(&["verify-td", "--graph", g.to_str().unwrap(), "--td", td.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("valid=true alpha=2 "));
}

#[test]
fn tree_alpha_constructive_modes() {
    for (mode, tag) in [("star", "thm1.3"), ("split", "thm3.2"), ("fvs", "thm1.4"), ("theta3", "thm1.6")] {
        let o = run(&["tree-alpha", "--mode", mode], C5);
        assert_eq!(o.status.code(), Some(0), "{mode}: {}", stderr(&o));
        let first = stdout(&o).lines().next().unwrap().to_string();
        assert!(first.starts_with(&format!("# theorem={tag} bound=2 ")), "{first}");
    }
    let o = run(&["tree-alpha", "--mode", "star", "--cover", "0,1"], C5);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
}

#[test]
fn tree_alpha_preconditions_exit_3() {
    // P3+P1 itself.
    let o = run(&["tree-alpha", "--mode", "p3p1"], "Cg\n");
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
    assert!(stderr(&o).contains("witness"));
    let o = run(&["tree-alpha", "--mode", "theta3"], C4);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(run(&["tree-alpha"], "Dhc\nDhc\n").status.code(), Some(1));
}

#[test]
fn verify_td_reports() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("c5.g6");
    std::fs::write(&g, C5).unwrap();
    let single = dir.path().join("single.td");
    std::fs::write(&single, "s td 1 5 5\nb 1 1 2 3 4 5\n").unwrap();
    let o = run(&["verify-td", "--graph", g.to_str().unwrap(), "--td", single.to_str().unwrap()], "");
    assert_eq!(stdout(&o), "valid=true alpha=2 theta=3 width=4\n");
    // Bags {0,1,2} and {2,3,4} miss the edge 4-0.
    let bad = dir.path().join("bad.td");
    std::fs::write(&bad, "s td 2 3 5\nb 1 1 2 3\nb 2 3 4 5\n1 2\n").unwrap();
    let o = run(&["verify-td", "--graph", g.to_str().unwrap(), "--td", bad.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("valid=false reason=uncovered edge"), "{}", stdout(&o));
    // Forest with its clique tree.
    let p4 = dir.path().join("p4.g6");
    std::fs::write(&p4, "Ch\n").unwrap();
    let ct = dir.path().join("p4.td");
    std::fs::write(&ct, "s td 3 2 4\nb 1 1 2\nb 2 2 3\nb 3 3 4\n1 2\n2 3\n").unwrap();
    let o = run(&["verify-td", "--graph", p4.to_str().unwrap(), "--td", ct.to_str().unwrap()], "");
    assert_eq!(stdout(&o), "valid=true alpha=1 theta=1 width=1\n");
    let garbage = dir.path().join("garbage.td");
    std::fs::write(&garbage, "s td x\n").unwrap();
    let o = run(&["verify-td", "--graph", g.to_str().unwrap(), "--td", garbage.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_runs_and_is_deterministic() {
    let a = run(&["sweep", "thm1.5", "--n", "6", "--no-timestamp"], "");
    assert_eq!(a.status.code(), Some(0));
    assert!(stdout(&a).contains("violations=0\n"));
    let b = run(&["sweep", "thm1.5", "--n", "6", "--no-timestamp"], "");
    assert_eq!(a.stdout, b.stdout);
    let o = run(&["sweep", "lemma6.1-equivalence", "--n", "7", "--no-timestamp"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("violations=0\n"));
}

#[test]
fn sweep_errors() {
    assert_eq!(run(&["sweep", "thm1.5", "--n", "9"], "").status.code(), Some(1));
    assert_eq!(run(&["sweep", "no-such-theorem", "--n", "4"], "").status.code(), Some(1));
    assert_eq!(run(&["sweep", "thm1.5", "--n", "4", "--filter", "nonsense"], "").status.code(), Some(2));
    let list = stdout(&run(&["sweep", "--list"], ""));
    assert_eq!(list.lines().count(), 15);
}

#[test]
fn sweep_writes_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = run(&["--format", "json", "sweep", "lemma2.3", "--n", "5", "--out", out.to_str().unwrap(), "--no-timestamp"], "");
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["assertion"], "lemma2.3");
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    assert!(v.get("elapsed_ms").is_none());
}

#[test]
fn probes() {
    let o = run(&["probe", "q7.3-p5-gap", "--n", "6", "--no-timestamp"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("max_gap="));
    let o = run(&["probe", "q7.4", "--n", "6", "--no-timestamp"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("probe=q7.4-clique-chordal\n"));
    assert_eq!(run(&["probe", "unknown-name", "--n", "5"], "").status.code(), Some(1));
}

#[test]
fn gen_and_enum() {
    let o = run(&["gen", "cycle", "5"], "");
    assert_eq!(stdout(&o), "Dhc\n");
    let o = run(&["gen", "prism(1,1,2)"], "");
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["gen", "theta", "1", "2", "2"], "");
    assert_ne!(o.status.code(), Some(0));
    let a = run(&["gen", "random", "--n", "9", "--filter", "K1,3-free", "--seed", "5"], "");
    let b = run(&["gen", "random", "--n", "9", "--filter", "K1,3-free", "--seed", "5"], "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let o = run(&["enum", "--n", "5"], "");
    assert_eq!(stdout(&o).lines().count(), 34);
    let o = run(&["enum", "--n", "5", "--filter", "forest & connected"], "");
    assert_eq!(stdout(&o).lines().count(), 3);
    assert!(stdout(&run(&["gen", "--list", "--n", "6"], "")).contains("pyramid(1,2,2)\tEjiO\n"));
}

#[test]
fn measure_and_epsilon() {
    let o = run(&["measure"], C5);
    assert_eq!(
        stdout(&o),
        "n=5 m=5 alpha=2 omega=2 chi=3 theta=3 ibn=1 tree-alpha=2 tree-theta=2 treewidth=2 splitness=2 fvs=1\n"
    );
    let o = run(&["epsilon", "--delta", "1/10,1/10,1/10", "--t", "11"], "");
    assert_eq!(
        stdout(&o),
        "k=2 delta=1/10 epsilon=1/10 c_2,11=100\nk=3 delta=1/10 epsilon=1/200 c_3,11=2000\nk=4 delta=1/10 epsilon=1/4000 c_4,11=40000\n"
    );
    assert_eq!(run(&["epsilon", "--delta", "0"], "").status.code(), Some(1));
}

#[test]
fn config_file_applies() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg");
    std::fs::write(&cfg, "enumeration_cap = 4\n").unwrap();
    let o = run(&["--config", cfg.to_str().unwrap(), "enum", "--n", "5"], "");
    assert_eq!(o.status.code(), Some(1));
    std::fs::write(&cfg, "t = 3\nbogus = 1\n").unwrap();
    let o = run(&["--config", cfg.to_str().unwrap(), "enum", "--n", "3"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"));
}

#[test]
fn usage_errors() {
    assert_eq!(run(&[], "").status.code(), Some(1));
    assert_eq!(run(&["tree-alpha", "--mode", "nope"], C5).status.code(), Some(1));
    assert_eq!(run(&["--help"], "").status.code(), Some(0));
}
