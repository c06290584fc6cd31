use std::process::{Command, Output};

use tiltlab_core::serial::from_json;

fn data(name: &str) -> String {
    format!("{}/../../data/{name}.quiver", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tiltlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn ind_lists_one_line_per_indecomposable() {
    for (name, lines) in [("a2", 3), ("a4", 10), ("d4", 12)] {
        let o = run(&["ind", &data(name)]);
        assert_eq!(code(&o), 0);
        assert_eq!(stdout(&o).lines().count(), lines, "{name}");
    }
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(code(&run(&["ind", "/nonexistent.quiver"])), 2);
    assert_eq!(code(&run(&["ind", &data("kronecker")])), 2);
    assert_eq!(code(&run(&["verify", &data("kronecker")])), 2);
    assert_eq!(code(&run(&["bb", &data("a2"), "--vertex", "1"])), 2);
    assert_eq!(code(&run(&["bb", &data("a2"), "--vertex", "7"])), 2);
    assert_eq!(code(&run(&["tilted", &data("a4"), "--t0", "0,1,2,3"])), 2);
    assert_eq!(code(&run(&["tilt", &data("a2"), "--json", "--dot"])), 2);

    let dir = std::env::temp_dir().join(format!("tiltlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.quiver");
    std::fs::write(&bad, "vertices 2\narrow a 1 3\n").unwrap();
    let o = run(&["ind", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("out of range"));
}

#[test]
fn tilt_counts_and_json() {
    for (name, vertices, arrows) in [("a2", 2, 1), ("a4", 14, 21)] {
        let o = run(&["tilt", &data(name), "--json"]);
        assert_eq!(code(&o), 0);
        let r = from_json(&stdout(&o)).unwrap();
        assert_eq!(
            (r.vertices.len(), r.arrows.len()),
            (vertices, arrows),
            "{name}"
        );
        assert_eq!(r.counts.tilting_modules, vertices);
    }
    let o = run(&["tilt", &data("d4"), "--json"]);
    assert_eq!(from_json(&stdout(&o)).unwrap().counts.indecomposables, 12);
}

#[test]
fn dot_output_is_deterministic() {
    let a = stdout(&run(&["tilt", &data("a4"), "--dot"]));
    let b = stdout(&run(&["tilt", &data("a4"), "--dot"]));
    assert_eq!(a, b);
    assert!(a.starts_with("digraph"));
    assert_eq!(a.matches('{').count(), a.matches('}').count());
    assert_eq!(a.lines().filter(|l| l.contains("->")).count(), 21);
}

#[test]
fn bb_fixture_passes_verification() {
    let o = run(&[
        "bb",
        &data("a4"),
        "--vertex",
        "2",
        "--transport",
        "--verify",
    ]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("7 tilting modules, 8 arrows"));
    assert!(!out.contains("FAIL"));

    let o = run(&["bb", &data("a4"), "--vertex", "2", "--json"]);
    let r = from_json(&stdout(&o)).unwrap();
    assert_eq!((r.vertices.len(), r.arrows.len()), (7, 8));
    assert!(r.vertices.iter().all(|v| v.x_summands.is_some()));

    let o = run(&["bb", &data("a2"), "--vertex", "2", "--json"]);
    assert_eq!(from_json(&stdout(&o)).unwrap().vertices.len(), 2);
}

#[test]
fn tilted_second_fixture() {
    // P(1), P(4), I(1), I(2) in the canonical order of linear A₄.
    let o = run(&["tilted", &data("a4"), "--t0", "9,0,3,6", "--json"]);
    assert_eq!(code(&o), 0);
    let r = from_json(&stdout(&o)).unwrap();
    assert_eq!((r.vertices.len(), r.arrows.len()), (7, 8));
}

#[test]
fn tilting_by_the_regular_module_keeps_the_quiver() {
    let lambda = from_json(&stdout(&run(&["tilt", &data("a4"), "--json"]))).unwrap();
    let o = run(&["tilted", &data("a4"), "--t0", "0,4,7,9", "--json"]);
    assert_eq!(code(&o), 0);
    let b = from_json(&stdout(&o)).unwrap();
    assert_eq!(b.vertices.len(), lambda.vertices.len());
    assert_eq!(b.arrows.len(), lambda.arrows.len());
}

#[test]
fn admissibility_violation_exits_1() {
    // [0,1,0] ⊕ [1,1,0] ⊕ [1,1,1] on linear A₃.
    let o = run(&["tilted", &data("a3"), "--t0", "1,4,5"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("admissibility"));
}

#[test]
fn verify_runs_every_bb_vertex() {
    for (name, vertices) in [("a3", 2), ("a4", 3), ("d4", 1)] {
        let o = run(&["verify", &data(name)]);
        assert_eq!(code(&o), 0, "{name}");
        let out = stdout(&o);
        assert_eq!(
            out.lines().filter(|l| l.starts_with("vertex")).count(),
            vertices
        );
        assert!(!out.contains("FAIL"));
    }
}
