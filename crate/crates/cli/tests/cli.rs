use std::path::Path;
use std::process::{Command, Output};

fn cyclotri(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclotri"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = cyclotri(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

fn gen_to(dir: &Path, series: &str, name: &str) -> String {
    let path = dir.join(name);
    ok(&["gen", series, "-o", path.to_str().unwrap()]);
    path.to_str().unwrap().to_string()
}

#[test]
fn gen_reports_and_round_trips() {
    let inline = ok(&["gen", "B9:n=16"]);
    assert!(inline.contains("# orientable=true\n"));
    assert!(inline.contains("# genus=g5\n"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b9.spec");
    let printed = ok(&["gen", "B9:n=16", "-o", path.to_str().unwrap()]);
    assert_eq!(ok(&["report", path.to_str().unwrap()]), printed);

    let from_stdout = dir.path().join("inline.spec");
    std::fs::write(&from_stdout, &inline).unwrap();
    assert_eq!(ok(&["report", from_stdout.to_str().unwrap()]), printed);

    let json = ok(&["report", path.to_str().unwrap(), "--json"]);
    assert!(json.contains("\"euler_characteristic\": -8"));
}

#[test]
fn census_matches_golden_rows() {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden/census_12.txt");
    let out = cyclotri(&["census", "12"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), std::fs::read_to_string(golden).unwrap());
    assert!(String::from_utf8_lossy(&out.stderr).contains("census n=12"));
    assert_eq!(
        ok(&["census", "7", "--max"]),
        "4 orientable 0 1\n6 orientable 0 1\n7 orientable 1 1\n"
    );
}

#[test]
fn output_is_independent_of_thread_count() {
    let run = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_cyclotri"))
            .args(["census", "16", "--max"])
            .env("RAYON_NUM_THREADS", threads)
            .output()
            .unwrap();
        stdout(&out)
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn iso_on_spec_files() {
    let dir = tempfile::tempdir().unwrap();
    let w = gen_to(dir.path(), "W:k=1:t=0", "w.spec");
    let c = gen_to(dir.path(), "C10:n=12", "c.spec");
    let a = gen_to(dir.path(), "A6:n=12", "a.spec");
    assert_eq!(ok(&["iso", &w, &c]), "isomorphic\n");
    assert_eq!(ok(&["iso", &w, &a]), "non-isomorphic\n");
}

#[test]
fn q7_lists_two_classes() {
    let out = ok(&["q7", "--max-n", "18"]);
    assert_eq!(
        out,
        "n=12 [0,1,2] [0,2,6] [0,4,8] orientable=true genus=g2\n\
         n=12 [0,1,5] [0,1,6] [0,4,8] orientable=true genus=g2\n"
    );
}

#[test]
fn link_of_a_vertex() {
    let dir = tempfile::tempdir().unwrap();
    let b9 = gen_to(dir.path(), "B9:n=16", "b9.spec");
    let out = ok(&["link", &b9, "--vertex", "3"]);
    assert_eq!(out.lines().count(), 1);
    assert_eq!(out.split_whitespace().count(), 9);
}

#[test]
fn tessellate_and_compare_maps() {
    let dir = tempfile::tempdir().unwrap();
    let b9 = gen_to(dir.path(), "B9:n=16", "b9.spec");
    let map = dir.path().join("b9.map");
    let flags = ok(&[
        "tessellate",
        &b9,
        "--delete",
        "0-2,2-5",
        "-o",
        map.to_str().unwrap(),
    ]);
    assert!(flags.contains("strongly_regular=true\n"));
    assert!(flags.contains("f_vector=16,40,16\n"));
    let text = std::fs::read_to_string(&map).unwrap();
    assert!(text.starts_with("n=16 p=5 q=5\n"));

    let all = dir.path().join("all.map");
    std::fs::write(&all, ok(&["tessellate", &b9, "--delete", "all"])).unwrap();
    assert_eq!(
        ok(&["iso", map.to_str().unwrap(), all.to_str().unwrap()]),
        "isomorphic\n"
    );

    let s4 = gen_to(dir.path(), "S:k=4:n=69", "s4.spec");
    let quads = ok(&["tessellate", &s4, "--merge", "2"]);
    assert!(quads.starts_with("n=69 p=4 q=16\n"));
}

#[test]
fn seed_check_report() {
    let dir = tempfile::tempdir().unwrap();
    let s4 = gen_to(dir.path(), "S:k=4:n=69", "s4.spec");
    let out = ok(&["seed-check", &s4]);
    assert!(out.contains("S4 pass\n"));
    assert!(out.ends_with("predicted=nonorientable odd-n\n"));
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn exit_codes_follow_error_class() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.spec");
    std::fs::write(&bad, "n=8\n0 1 x\n").unwrap();
    let out = cyclotri(&["report", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error class=parse code=2"));

    let out = cyclotri(&["gen", "S:k=4:n=61"]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("seed violates S4"));

    std::fs::write(&bad, "n=8\n0 1 2\n").unwrap();
    assert_eq!(code(&cyclotri(&["report", bad.to_str().unwrap()])), 4);

    assert_eq!(code(&cyclotri(&["gen", "Q:n=5"])), 2);
    assert_eq!(code(&cyclotri(&["census"])), 2);
}
