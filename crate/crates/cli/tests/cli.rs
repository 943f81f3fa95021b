use std::process::Command;

fn hecke(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hecke")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = hecke(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

fn json(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&ok(args)).unwrap()
}

#[test]
fn block_info_worked_example() {
    let v = json(&["block-info", "--e", "4", "--kappa", "1,0,2", "--mp", "[[1,1,1],[2,1],[1,1]]", "--format", "json"]);
    assert_eq!(v["invariants"]["weight"], 3);
    assert_eq!(v["key"]["content"], serde_json::json!({"0": 2, "1": 3, "2": 1, "3": 2}));
    assert!(ok(&["block-info", "--e", "4", "--kappa", "1,0,2", "--mp", "[[1,1,1],[2,1],[1,1]]"]).contains("weight: 3\n"));
}

#[test]
fn block_info_empty_multipartition() {
    let v = json(&["block-info", "--e", "3", "--kappa", "1,1", "--mp", "[[],[]]", "--format", "json"]);
    assert_eq!(v["invariants"]["weight"], 0);
    assert_eq!(v["invariants"]["hub"], serde_json::json!({"0": 0, "1": -2, "2": 0}));
}

#[test]
fn block_info_members() {
    let v = json(&["block-info", "--members", "--e", "3", "--kappa", "0", "--content", "1,1,0", "--format", "json"]);
    assert_eq!(v["members"], serde_json::json!([[[2]]]));
    let v = json(&["block-info", "--members", "--e", "3", "--kappa", "0", "--content", "0:1,1:1", "--format", "json"]);
    assert_eq!(v["members"], serde_json::json!([[[2]]]));
}

#[test]
fn crystal_examples() {
    let v = json(&["crystal", "--e", "2", "--kappa", "0", "--nmax", "2", "--format", "json"]);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 3);
    assert_eq!(v["edges"].as_array().unwrap().len(), 2);
    assert_eq!(ok(&["crystal", "--nmax", "0", "--format", "dot"]), "digraph crystal {\n  v0 [label=\"∅\"];\n}\n");
    let v = json(&["crystal", "--e", "3", "--kappa", "0", "--nmax", "2", "--format", "json"]);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 4);
}

#[test]
fn branch_examples() {
    assert_eq!(ok(&["branch", "--e", "2", "--kappa", "0", "--mp", "[[2,1]]", "--mode", "restrict"]), "S^(2) + v^{-1} S^(1,1)\n");
    assert_eq!(ok(&["branch", "--mp", "[[]]", "--mode", "induce"]), "S^(1)\n");
    assert_eq!(ok(&["branch", "--e", "3", "--kappa", "0", "--mp", "[[2]]", "--mode", "restrict", "--residue", "0"]), "0\n");
}

#[test]
fn scopes_examples() {
    assert!(ok(&["scopes", "--nmax", "0"]).contains("classes: 1\n"));
    let v = json(&["scopes", "--e", "2", "--kappa", "0", "--nmax", "3", "--format", "json"]);
    let classes = v["classes"].as_array().unwrap();
    let merged = classes.iter().any(|c| {
        let members = c["members"].as_array().unwrap();
        members.iter().any(|k| k["content"] == serde_json::json!({"0": 1, "1": 1}))
            && members.iter().any(|k| k["content"] == serde_json::json!({"0": 2, "1": 1}))
    });
    assert!(merged);
    let dot = ok(&["scopes", "--e", "2", "--kappa", "0", "--nmax", "3", "--format", "dot"]);
    assert!(dot.starts_with("digraph scopes {"));
}

#[test]
fn abacus_display() {
    let out = ok(&["abacus", "--e", "4", "--kappa", "3,1,1", "--mp", "[[5,4,1],[3,2,2,2],[4,3,1]]"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "0 1 2 3 | 0 1 2 3 | 0 1 2 3");
    assert!(lines.iter().all(|l| l.matches('|').count() == 2));
}

#[test]
fn config_file_supplies_defaults() {
    let dir = std::env::temp_dir().join(format!("hecke-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("run.conf");
    std::fs::write(&cfg, "# restriction example\ne = 2\nkappa = 0\nmp = [[2,1]]\n").unwrap();
    let c = cfg.to_str().unwrap();
    assert_eq!(ok(&["branch", "--config", c, "--mode", "restrict"]), "S^(2) + v^{-1} S^(1,1)\n");
    assert_eq!(ok(&["branch", "--config", c, "--mode", "restrict", "--e", "3"]), "S^(2) + v S^(1,1)\n");
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("hecke-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c.dot");
    let (code, out, _) = hecke(&["crystal", "--nmax", "2", "--format", "dot", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("digraph crystal {"));
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn exit_codes() {
    for args in [
        &["block-info", "--mp", "[[1,2]]"][..],
        &["block-info", "--mp", "[[1"],
        &["block-info", "--e", "1", "--mp", "[[1]]"],
        &["branch", "--mp", "[[1]]", "--mode", "induce", "--residue", "7"],
        &["scopes", "--e", "0", "--nmax", "2"],
        &["abacus", "--mp", "[[1]]", "--format", "dot"],
        &["nonsense"],
    ] {
        let (code, _, err) = hecke(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty());
    }
    let (code, _, err) = hecke(&["crystal", "--nmax", "17"]);
    assert_eq!(code, 3);
    assert!(err.starts_with("error: "));
}
