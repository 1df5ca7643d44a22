use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_forkfree"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn exit_code_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = dir.path().join("c5.g6");
    std::fs::write(&c5, "Dhc\n").unwrap();
    let c5 = c5.to_str().unwrap();
    let k3 = dir.path().join("k3.dimacs");
    std::fs::write(&k3, "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
    let k3 = k3.to_str().unwrap();
    let loops = dir.path().join("loop.dimacs");
    std::fs::write(&loops, "p edge 2 1\ne 1 1\n").unwrap();
    let loops = loops.to_str().unwrap();
    let unknown = dir.path().join("graph.xyz");
    std::fs::write(&unknown, "Dhc\n").unwrap();
    let unknown = unknown.to_str().unwrap();

    let cases: &[(&[&str], &str, i32)] = &[
        (&["oracle", "chi", c5], "", 0),
        (&["oracle", "omega", k3], "", 0),
        (&["oracle", "perfect", "-"], "Dhc\n", 0),
        (&["detect", "--pattern", "fork", c5], "", 0),
        (&["classify", c5], "", 0),
        (&["divide", c5], "", 0),
        (&["color", c5], "", 0),
        (&["linegraph", k3, "--divide"], "", 0),
        (&["gen", "--all", "3"], "", 0),
        (&["gen", "--gnp", "10", "1/2", "42"], "", 0),
        (&["verify", "--check", "T10", "--all", "6"], "", 0),
        (&["verify", "--check", "T3", "--corpus", c5], "", 0),
        (&["unknown-subcommand"], "", 2),
        (&["oracle", "chi"], "", 2),
        (&["oracle", "chi", "/nonexistent/file.g6"], "", 2),
        (&["oracle", "chi", loops], "", 2),
        (&["oracle", "chi", unknown], "", 2),
        (&["oracle", "chi", "-"], "D?{x\n", 2),
        (&["detect", "--pattern", "no-such-pattern", c5], "", 2),
        (&["verify", "--check", "T99", "--all", "3"], "", 2),
        (&["verify", "--check", "T1", "--all", "9"], "", 2),
        (&["gen", "--gnp", "10", "3/2", "1"], "", 2),
        (&["oracle", "chi", "--format", "edges", "-"], "0 1\n1 2\n", 0),
    ];
    for (args, stdin, code) in cases {
        let out = run(args, stdin);
        assert_eq!(out.status.code(), Some(*code), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        if *code == 2 {
            assert!(!out.stderr.is_empty(), "{args:?} printed no diagnostic");
        }
    }
}

#[test]
fn spec_examples() {
    let chi = run(&["oracle", "chi", "-"], "Dhc\n");
    assert_eq!(json(&chi)["results"][0]["result"]["value"], 3);
    let fork = run(&["detect", "--pattern", "fork", "-"], "Dhc\n");
    assert!(json(&fork)["results"][0]["result"].is_null());
    let verify = run(&["verify", "--check", "T10", "--all", "6"], "");
    assert_eq!(json(&verify)["results"][0]["passed"], true);
}

#[test]
fn envelope_shape_and_determinism() {
    let a = run(&["verify", "--check", "all", "--all", "5"], "");
    let b = run(&["verify", "--check", "all", "--all", "5"], "");
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["tool"], "forkfree");
    assert_eq!(v["input_digest"].as_str().unwrap().len(), 64);
    assert!(v.get("timing_ms").is_none());
    assert_eq!(v["results"].as_array().unwrap().len(), 12);

    let timed = json(&run(&["--timing", "classify", "-"], "Dhc\n"));
    assert!(timed["timing_ms"].is_u64());
}

#[test]
fn multi_graph_input_keeps_order() {
    let out = run(&["oracle", "omega", "-"], "C~\n\nDhc\n@\n");
    let v = json(&out);
    let values: Vec<u64> = v["results"].as_array().unwrap().iter().map(|r| r["result"]["value"].as_u64().unwrap()).collect();
    assert_eq!(values, [4, 2, 1]);
}

#[test]
fn gen_streams_graph6() {
    let out = run(&["gen", "--all", "4"], "");
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1 + 2 + 4 + 11);
    let gnp = run(&["gen", "--gnp", "10", "0.5", "42"], "");
    assert_eq!(String::from_utf8(gnp.stdout).unwrap(), "IJcD|o[o_\n");
}

#[test]
fn weighted_division_and_line_graph() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.txt");
    // paw: 0-1-2 triangle, pendant 3 on 2
    std::fs::write(&w, "1 1 1 5").unwrap();
    let out = run(&["divide", "--format", "edges", "-", "--weights", w.to_str().unwrap()], "0 1\n0 2\n1 2\n2 3\n");
    assert_eq!(out.status.code(), Some(0));
    let cert = &json(&out)["results"][0]["result"]["division"]["certificate"];
    assert_eq!(cert["omega"], 6);
    assert!(cert["omega_b"].as_u64().unwrap() < 6);

    let lg = run(&["linegraph", "--divide", "-"], "C~\n");
    let r = &json(&lg)["results"][0]["result"];
    assert_eq!(r["divisions"][0]["perfect_edges"].as_array().unwrap().len(), 3);
    assert_eq!(r["divisions"][0]["certificate"]["omega"], 3);
}
