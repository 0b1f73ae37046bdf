use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dcomplete")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path_arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_then_check() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["gen", "d4", "--dir", path_arg(dir.path())]);
    assert!(out.status.success());
    let file = dir.path().join("d4.poset");
    let check = run(&["check", path_arg(&file)]);
    assert_eq!(check.status.code(), Some(0));
    assert_eq!(stdout(&check), "elements=6 covers=6 d_intervals=2 is_d_complete=true\n");
}

#[test]
fn verify_proctor_on_d4() {
    let out = run(&["verify-proctor", "catalog:d4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "extensions=2 hook_product=360 factorial=720 ok=true\n");
}

#[test]
fn rsk_and_inverse_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let filling = dir.path().join("t.txt");
    fs::write(&filling, "value 0 2\nvalue 1 2\nvalue 2 3\nvalue 3 4\nvalue 4 2\nvalue 5 1\n").unwrap();
    let order = dir.path().join("order.txt");
    fs::write(&order, "5 4 2 3 1 0\n").unwrap();
    let given = format!("given:{}", order.display());

    let out = run(&["rsk", "catalog:d4", path_arg(&filling), "--order", &given]);
    assert_eq!(out.status.code(), Some(0));
    let image = stdout(&out);
    assert_eq!(image, "value 0 11/1\nvalue 1 9/1\nvalue 2 6/1\nvalue 3 7/1\nvalue 4 4/1\nvalue 5 3/1\n");

    let image_file = dir.path().join("s.txt");
    fs::write(&image_file, &image).unwrap();
    let back = run(&["inverse-rsk", "catalog:d4", path_arg(&image_file)]);
    assert_eq!(back.status.code(), Some(0));
    assert_eq!(stdout(&back), "value 0 2/1\nvalue 1 2/1\nvalue 2 3/1\nvalue 3 4/1\nvalue 4 2/1\nvalue 5 1/1\n");

    // An order listing the bottom element first is rejected.
    fs::write(&order, "0 1 2 3 4 5\n").unwrap();
    let bad = run(&["rsk", "catalog:d4", path_arg(&filling), "--order", &given]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_hlf_is_deterministic() {
    let a = run(&["verify-hlf", "catalog:ten-element", "--points", "3", "--seed", "11"]);
    let b = run(&["verify-hlf", "catalog:ten-element", "--points", "3", "--seed", "11"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).ends_with("ok=true\n"));
    assert_eq!(stdout(&a).lines().count(), 5);
}

#[test]
fn volume_estimate() {
    let out = run(&["volume", "catalog:d3", "--kind", "rpp", "--samples", "100000", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("exact=1/288"), "{text}");
    assert!(text.ends_with("ok=true\n"));
    let bad = run(&["volume", "catalog:d3", "--kind", "cube"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn classical_rsk_example() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("m.txt");
    fs::write(&m, "1 0 2\n0 2 0\n1 1 0\n").unwrap();
    let out = run(&["classical-rsk", path_arg(&m)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "P=1,1,2,2/2,3/3\nQ=1,1,1,3/2,2/3\nrpp=1,2,3/1,2,3/2,4,4\nlower_gt=4,2,1/4,1/2\nupper_gt=4,2,1/3,2/3\nagree=true\n"
    );
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let broken = dir.path().join("broken.poset");
    fs::write(&broken, "elements 2\ncover 0 5\n").unwrap();
    assert_eq!(run(&["check", path_arg(&broken)]).status.code(), Some(2));

    // A diamond with its top removed is not d-complete.
    let truncated = dir.path().join("v.poset");
    fs::write(&truncated, "elements 3\ncover 0 1\ncover 0 2\n").unwrap();
    let out = run(&["check", path_arg(&truncated)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("violation axiom=1"));

    assert_eq!(run(&["hooks", path_arg(&truncated)]).status.code(), Some(1));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["check", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(run(&["extensions", "catalog:young-3,3", "--cap", "2"]).status.code(), Some(2));
}

#[test]
fn extensions_listing() {
    let out = run(&["extensions", "catalog:d4"]);
    assert_eq!(stdout(&out), "extensions=2\nextension=5 4 2 3 1 0\nextension=5 4 3 2 1 0\n");
    let count = run(&["extensions", "catalog:young-4,4", "--count-only"]);
    assert_eq!(stdout(&count), "extensions=14\n");
}

#[test]
fn suite_single_criterion() {
    let out = run(&["suite", "--seed", "7", "--criterion", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("passed=1/1\n"));
    assert_eq!(run(&["suite", "--criterion", "11"]).status.code(), Some(2));
}

#[test]
fn gen_all_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["gen", "--all", "--dir", path_arg(dir.path())]);
    assert!(out.status.success());
    let files: Vec<_> = fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 296);
    let ten = dir.path().join("ten-element.poset");
    let text = fs::read_to_string(&ten).unwrap();
    let printed = run(&["gen", "ten-element"]);
    assert_eq!(stdout(&printed), text);
    assert_eq!(run(&["gen", "d4", "d5"]).status.code(), Some(2));
}
