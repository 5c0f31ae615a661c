use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn fixture_path(name: &str) -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect()
}

fn fixture(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap()
}

fn qforest(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_qforest"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn realize_output_pipes_into_recognize() {
    let built = qforest(&["realize", "6,9,5,1"], None);
    assert_eq!(built.status.code(), Some(0));
    let recognized = qforest(&["recognize", "-"], Some(&stdout(&built)));
    assert_eq!(recognized.status.code(), Some(0));
    let text = stdout(&recognized);
    assert!(text.contains("quasi-forest: yes\n"), "{text}");
    assert!(text.contains("forest: yes\n"), "{text}");
    assert!(text.ends_with("f-vector: 6,9,5,1\n"), "{text}");
}

#[test]
fn triangle_is_not_a_quasi_forest() {
    let path = fixture_path("triangle.cmplx");
    let o = qforest(&["recognize", path.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), fixture("recognize_triangle.out"));
}

#[test]
fn forest_file_is_recognized() {
    let path = fixture_path("forest.cmplx");
    let o = qforest(&["recognize", path.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "quasi-forest: yes\nleaf-order:\n  3 4 5\n  2 4 5\n  1 5\nforest: yes\nf-vector: 5,6,2\n");
}

#[test]
fn three_sun_graph_report() {
    let path = fixture_path("sun3.graph");
    let o = qforest(&["graph", path.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), fixture("graph_sun3.out"));
}

#[test]
fn four_cycle_has_chordless_witness() {
    let o = qforest(&["graph", "-"], Some("n 4\n1 2\n2 3\n3 4\n1 4\n"));
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("chordal: no\nchordless-cycle: "), "{text}");
    assert!(text.contains("strongly-chordal: no\n"), "{text}");
}

#[test]
fn enumerate_writes_report_file() {
    let dir = std::env::temp_dir().join(format!("qforest-report-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let report = dir.join("report.txt");
    let o = qforest(&["enumerate", "--vertices", "4", "--facets", "3", "--report", report.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&report).unwrap();
    assert!(!text.is_empty() && text.lines().all(|l| l.contains(" pass")), "{text}");
    let again = qforest(&["enumerate", "--vertices", "4", "--facets", "3"], None);
    assert_eq!(stdout(&again), text);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn malformed_input_exits_two() {
    let o = qforest(&["recognize", "-"], Some("1 2\nx y\n"));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
}
