use std::io::Write;
use std::process::{Command, Output, Stdio};

use catalan_pairs::FamilyTag;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_catalan-pairs"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn encoded_values_verify() {
    for tag in FamilyTag::ALL {
        for v in tag.enumerate(4) {
            let text = v.to_string();
            let enc = run(&["encode", "--family", tag.name(), "--stdin"], &text);
            assert_eq!(enc.status.code(), Some(0), "{tag} {text}");
            let ver = run(&["verify", "--stdin"], &stdout(&enc));
            assert_eq!(ver.status.code(), Some(0), "{tag} {text}");
        }
    }
}

#[test]
fn convert_command() {
    let out = run(&["convert", "--from", "dyck", "--to", "perm-312", "UUDDUD"], "");
    assert_eq!(stdout(&out), "2 1 3\n");
    let out = run(&["convert", "--from", "plane-tree", "--to", "plane-tree", "(())()"], "");
    assert_eq!(stdout(&out), "(())()\n");
    let out = run(&["convert", "--from", "perm-312", "--to", "dyck", "3 1 2"], "");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn enumerate_command() {
    let out = run(&["enumerate", "--family", "dyck", "-n", "3"], "");
    assert_eq!(stdout(&out), "UDUDUD\nUDUUDD\nUUDDUD\nUUDUDD\nUUUDDD\n");
    let out = run(&["enumerate", "--family", "polyomino", "-n", "0"], "");
    assert_eq!(stdout(&out), ";\n");
}

#[test]
fn count_all_small() {
    let out = run(&["count", "--family", "all", "-n", "3"], "");
    assert_eq!(out.status.code(), Some(0));
    let rows: Vec<String> = stdout(&out).lines().skip(1).map(str::to_string).collect();
    assert_eq!(rows.len(), 14 * 4);
    for row in rows.iter().filter(|r| r.split_whitespace().nth(1) == Some("3")) {
        let cols: Vec<&str> = row.split_whitespace().collect();
        assert_eq!(&cols[2..], ["5", "5", "PASS"]);
    }
}

#[test]
fn bad_invocations() {
    assert_eq!(run(&["count", "--family", "trees", "-n", "3"], "").status.code(), Some(1));
    assert_eq!(run(&["enumerate", "--family", "dyck"], "").status.code(), Some(1));
    assert_eq!(run(&["encode", "--family", "seq1", "3 1 2"], "").status.code(), Some(1));
    assert_eq!(run(&["verify", "/nonexistent/file"], "").status.code(), Some(1));
    assert_eq!(run(&["decompose", "--stdin"], "n 2\nS 1 2\nS 2 1\n").status.code(), Some(2));
    assert_eq!(run(&["verify", "--stdin"], "n 2\nS 1 1\n").status.code(), Some(1));
}
