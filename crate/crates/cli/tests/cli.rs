use std::process::{Command, Output};

fn kdirac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kdirac"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn hasse_text_names_first_edge() {
    let o = kdirac(&["hasse", "--k", "3", "--format", "text"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("10 vertices"));
    assert!(s.contains("A00 -> A11 [a(3,4)]"));
}

#[test]
fn hasse_dot_has_six_nodes_for_k2() {
    let o = kdirac(&["hasse", "--k", "2", "--format", "dot"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.starts_with("digraph hasse {"));
    assert!(s.trim_end().ends_with('}'));
    let nodes = s.lines().filter(|l| l.contains("[label=\"A")).count();
    assert_eq!(nodes, 6);
    assert_eq!(s.lines().filter(|l| l.contains("rank=same")).count(), 5);
}

#[test]
fn rank_one_is_rejected() {
    let o = kdirac(&["hasse", "--k", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("minimum rank is k = 2"));
    assert_eq!(kdirac(&["complex", "--k", "1"]).status.code(), Some(2));
}

#[test]
fn bgg_seeds() {
    let o = kdirac(&["bgg", "--k", "3", "--seed", "0,0,0,0,0"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("A11 [0,0,-2|2|0]"), "{s}");
    assert!(s.contains("A60 [-4,-4,-4|6|-6]"), "{s}");

    let o = kdirac(&["bgg", "--k", "3", "--seed", "0,0,5,0,0"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("l_2 >= l_3"));

    let o = kdirac(&["bgg", "--k", "3", "--seed", "-3,-3,-3,3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = kdirac(&["bgg", "--k", "3", "--seed", "a,b"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bgg_json_lists_vertices_without_images() {
    let o = kdirac(&["bgg", "--k", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["k"], 3);
    assert_eq!(v["seed"], serde_json::json!([-3, -3, -3, -3, 3]));
    assert_eq!(v["vertices"].as_array().unwrap().len(), 10);
    assert!(v["vertices"][0].get("image").is_none());
    assert!(v.get("complex").is_none());
}

#[test]
fn pushdown_json_for_k5() {
    let o = kdirac(&["pushdown", "--k", "5", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 21);
    assert_eq!(v["vertices"][0]["image"]["degree"], 1);
    assert_eq!(v["vertices"][0]["image"]["weight2"], serde_json::json!([-3, -3, -3, -3, -3, 1, -1]));
    assert_eq!(v["complex"]["positions"], serde_json::json!([0, 1, 3, 4, 5, 6, 7, 8, 9, 10]));
    assert_eq!(v["complex"]["orders"], serde_json::json!([1, 2, 1, 1, 1, 1, 1, 1, 1]));
    assert_eq!(v["complex"]["terms"][1][0]["slk"], serde_json::json!([1, 1, 1, 1, 0]));
    assert_eq!(v["complex"]["terms"][1][0]["dim"], 10);
}

#[test]
fn pushdown_k2_has_four_terms() {
    let o = kdirac(&["pushdown", "--k", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["complex"]["positions"], serde_json::json!([0, 1, 3, 4]));
    let s = stdout(&kdirac(&["pushdown", "--k", "2"]));
    assert!(s.contains("row 2: A20 \u{2205}"), "{s}");
}

#[test]
fn complex_k3_orders() {
    let o = kdirac(&["complex", "--k", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["complex"]["orders"], serde_json::json!([1, 2, 1, 1, 1]));
}

#[test]
fn graph_formats() {
    for cmd in ["hasse", "bgg", "pushdown", "complex"] {
        let dot = stdout(&kdirac(&[cmd, "--k", "3", "--format", "dot"]));
        assert!(dot.starts_with("digraph "), "{cmd}");
        let tikz = stdout(&kdirac(&[cmd, "--k", "3", "--format", "tikz"]));
        assert!(tikz.contains("\\begin{tikzpicture}"), "{cmd}");
        assert!(tikz.trim_end().ends_with("\\end{document}"), "{cmd}");
    }
    let dot = stdout(&kdirac(&["complex", "--k", "3", "--format", "dot"]));
    assert_eq!(dot.matches("color=\"black:black\"").count(), 2);
    let dot = stdout(&kdirac(&["pushdown", "--k", "3", "--format", "dot"]));
    assert_eq!(dot.matches("style=dotted").count(), 5);
    assert_eq!(kdirac(&["dims", "--k", "3", "--format", "dot"]).status.code(), Some(2));
}

#[test]
fn half_rendering() {
    let s = stdout(&kdirac(&["pushdown", "--k", "3", "--half"]));
    assert!(s.contains("A00 [-3/2,-3/2,-3/2|1/2,-1/2]_1"), "{s}");
}

#[test]
fn dims_table() {
    let s = stdout(&kdirac(&["dims", "--k", "3"]));
    assert!(s.contains("U31     [2,1,0]      8      (0,1)        2      16"), "{s}");
    assert!(s.contains("total at position 3: 20"));
}

#[test]
fn check_dirac_reports() {
    let o = kdirac(&["check-dirac", "--k", "2", "--degree", "3", "--trials", "100", "--seedrng", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("100/100 factorization checks passed"));
    assert_eq!(s, stdout(&kdirac(&["check-dirac", "--k", "2", "--degree", "3", "--trials", "100", "--seedrng", "7"])));
    let o = kdirac(&["check-dirac", "--k", "1", "--trials", "5"]);
    assert!(o.status.success());
    assert_eq!(kdirac(&["check-dirac", "--k", "0"]).status.code(), Some(2));
}
