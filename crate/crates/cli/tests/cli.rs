use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

struct Run {
    ok: bool,
    stdout: String,
    stderr: String,
}

fn derange(args: &[&str]) -> Run {
    let Output {
        status,
        stdout,
        stderr,
    } = Command::new(env!("CARGO_BIN_EXE_derange"))
        .args(args)
        .output()
        .unwrap();
    Run {
        ok: status.success(),
        stdout: String::from_utf8(stdout).unwrap(),
        stderr: String::from_utf8(stderr).unwrap(),
    }
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const S3: &str = "perms 4\n(0 1 2 3)\n(0 1)(2 3)\n(0 3)(1 2)\n";
const CUBIC6: &str =
    "# six-vertex cubic graph\ngraph 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n1 4\n0 2\n3 5\n";

#[test]
fn analyze_s3() {
    let dir = TempDir::new().unwrap();
    let r = derange(&["analyze", s(&file(&dir, "s3", S3))]);
    assert!(r.ok, "{}", r.stderr);
    assert!(r.stdout.contains("multiplicity_free: false\n"));
    assert!(r.stdout.contains("closed: false\n"));
    assert!(r.stdout.contains("regular_valency: 2\n"));
    assert!(r
        .stdout
        .starts_with("domain_size: 4\nset_size: 3\narc_count: 8\n"));
}

#[test]
fn realize_cubic_graph() {
    let dir = TempDir::new().unwrap();
    let input = file(&dir, "cubic", CUBIC6);
    let out = dir.path().join("set");
    let r = derange(&["realize", s(&input), "-o", s(&out)]);
    assert!(r.ok, "{}", r.stderr);
    let a = derange(&["analyze", s(&out)]);
    assert!(a.stdout.contains("set_size: 3\n"));
    assert!(a.stdout.contains("closed: true\n"));
    assert!(a.stdout.contains("self_inverse: true\n"));
    let rebuilt = derange(&["build", s(&out)]).stdout;
    let canonical = derange_fmt(CUBIC6);
    assert_eq!(rebuilt, canonical);
}

fn derange_fmt(graph_text: &str) -> String {
    derange::write_digraph(&derange::parse_digraph(graph_text).unwrap())
}

#[test]
fn decompose_triangle() {
    let dir = TempDir::new().unwrap();
    let r = derange(&[
        "decompose",
        s(&file(&dir, "tri", "digraph 3\n0 1\n1 2\n2 0\n")),
    ]);
    assert!(r.ok, "{}", r.stderr);
    assert_eq!(r.stdout, "perms 3\n(0 1 2)\n");
}

#[test]
fn decompose_rejects_irregular() {
    let dir = TempDir::new().unwrap();
    let r = derange(&["decompose", s(&file(&dir, "p", "digraph 3\n0 1\n1 2\n"))]);
    assert!(!r.ok);
    assert!(r.stderr.starts_with("error: not_regular: "), "{}", r.stderr);
    assert_eq!(r.stderr.lines().count(), 1);
}

#[test]
fn build_decompose_build_is_byte_identical() {
    let dir = TempDir::new().unwrap();
    let sets = [
        S3,
        "perms 8\n(0 1)(2 3)(4 5)(6 7)\n(0 7)(1 6)(2 3)(4 5)\n(0 7)(3 4)(1 2)(5 6)\n",
        "perms 7\n(0 1 2)(3 4 5 6)\n(0 2 1)(3 6 5 4)\n",
        "perms 5\n(0 1 2 3 4)\n(0 2 4 1 3)\n",
    ];
    for (i, text) in sets.iter().enumerate() {
        let set = file(&dir, &format!("s{i}"), text);
        let d1 = dir.path().join(format!("d{i}"));
        assert!(derange(&["build", s(&set), "-o", s(&d1)]).ok);
        let decomposed = dir.path().join(format!("t{i}"));
        let r = derange(&["decompose", s(&d1), "-o", s(&decomposed)]);
        if i == 1 {
            // the 8-point set has an irregular action digraph
            assert!(r.stderr.contains("not_regular"), "{}", r.stderr);
            continue;
        }
        assert!(r.ok, "{}", r.stderr);
        let d2 = dir.path().join(format!("e{i}"));
        assert!(derange(&["build", s(&decomposed), "-o", s(&d2)]).ok);
        assert_eq!(std::fs::read(&d1).unwrap(), std::fs::read(&d2).unwrap());
    }
}

fn sylvester() -> String {
    let mut text = String::from("graph 16\n");
    for block in 0..3 {
        let b = 1 + 5 * block;
        let k4 = [b + 1, b + 2, b + 3, b + 4];
        for i in 0..4 {
            for j in i + 1..4 {
                if (i, j) != (0, 1) {
                    text += &format!("{} {}\n", k4[i], k4[j]);
                }
            }
        }
        text += &format!("{b} {}\n{b} {}\n0 {b}\n", b + 1, b + 2);
    }
    text
}

#[test]
fn realize_prints_matching_certificate() {
    let dir = TempDir::new().unwrap();
    let r = derange(&["realize", s(&file(&dir, "syl", &sylvester()))]);
    assert!(!r.ok);
    assert!(
        r.stderr.starts_with("error: no_perfect_matching: "),
        "{}",
        r.stderr
    );
    assert!(r
        .stdout
        .starts_with("perfect_matching: none\nmaximum_matching_size: 7\nmaximum_matching:\n"));
    assert_eq!(r.stdout.lines().count(), 3 + 7);

    let m = derange(&["matching", s(&file(&dir, "k3", "graph 3\n0 1\n1 2\n0 2\n"))]);
    assert!(m.ok);
    assert!(m.stdout.starts_with("perfect: false\nsize: 1\n"));
    let m = derange(&[
        "matching",
        s(&file(&dir, "c6", "graph 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n")),
    ]);
    assert_eq!(
        m.stdout,
        "perfect: true\nsize: 3\nmatching:\n  0 1\n  2 3\n  4 5\n"
    );
}

#[test]
fn products_and_components() {
    let dir = TempDir::new().unwrap();
    let edge = file(&dir, "e", "perms 2\n(0 1)\n");
    let r = derange(&["product", "--kind", "cartesian", s(&edge), s(&edge)]);
    assert!(r.ok, "{}", r.stderr);
    assert!(r.stdout.contains(
        "kind: cartesian\ndomain_size: 4\nset_size: 2\nclosed: true\nself_inverse: true\n"
    ));
    assert!(r
        .stdout
        .contains("digraph:\n  digraph 4\n  0 1\n  0 2\n  1 0\n  1 3\n"));
    let lex = derange(&["product", "--kind", "lex", s(&edge), s(&edge)]);
    assert!(lex.stdout.contains("kind: lex\n"), "{}", lex.stderr);
    let bad = derange(&[
        "product",
        "--kind",
        "tensor",
        "--lex-group",
        "cyclic",
        s(&edge),
        s(&edge),
    ]);
    assert!(bad.stderr.starts_with("error: unexpected_subgroup: "));

    let z7 = file(&dir, "z7", "perms 7\n(0 1 2)(3 4 5 6)\n(0 2 1)(3 6 5 4)\n");
    let c = derange(&["components", s(&z7)]);
    assert_eq!(
        c.stdout,
        "component_count: 2\ncomponent_0_vertices: 0 1 2\ncomponent_0_set:\n  perms 3\n  (0 1 2)\n  (0 2 1)\n\
         component_1_vertices: 3 4 5 6\ncomponent_1_set:\n  perms 4\n  (0 1 2 3)\n  (0 3 2 1)\n"
    );
}

#[test]
fn automorphisms() {
    let dir = TempDir::new().unwrap();
    let r = derange(&["aut", s(&file(&dir, "s3", S3)), "--vertex-transitive"]);
    assert!(r.stdout.starts_with("order: 8\nautomorphisms:\n  id\n"));
    assert!(r.stdout.ends_with("vertex_transitive: true\n"));
    let big = file(&dir, "big", "perms 11\n(0 1 2 3 4 5 6 7 8 9 10)\n");
    let r = derange(&["aut", s(&big)]);
    assert!(
        r.stderr.starts_with("error: guard_exceeded: "),
        "{}",
        r.stderr
    );
}

#[test]
fn group_digraphs() {
    let dir = TempDir::new().unwrap();
    let a4 = file(&dir, "a4", "group-gens 4\n(0 1 2)\n(1 2 3)\n");
    let r = derange(&[
        "two-sided",
        "--group",
        s(&a4),
        "--left",
        "id,(1 3 2)",
        "--right",
        "(1 2 3),(0 1)(2 3),(0 2 1),(0 3)(1 2)",
    ]);
    assert!(r.ok, "{}", r.stderr);
    assert!(r.stdout.contains(
        "loopless: true\nraw_count: 8\nset_size: 8\nout_valencies: 7 7 7 7 7 7 7 7 7 7 7 7\n"
    ));
    let bad = derange(&[
        "two-sided",
        "--group",
        s(&a4),
        "--left",
        "1",
        "--right",
        "1",
    ]);
    assert!(!bad.ok);
    assert!(bad
        .stdout
        .contains("loopless: false\nconjugate_pair: 1 1\n"));
    assert!(bad.stderr.starts_with("error: not_loopless: "));

    let z4 = file(&dir, "z4", "group 4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n");
    let c = derange(&["cayley", "--group", s(&z4), "--conn", "1,3"]);
    assert!(c.stdout.contains(
        "digraph:\n  digraph 4\n  0 1\n  0 3\n  1 0\n  1 2\n  2 1\n  2 3\n  3 0\n  3 2\n"
    ));
    let c = derange(&["cayley", "--group", s(&z4), "--conn", "0,1"]);
    assert!(c.stderr.starts_with("error: identity_in_connection_set: "));
}

#[test]
fn search_gap() {
    let r = derange(&["search-gap", "--n", "3", "--s", "2"]);
    assert_eq!(r.stdout, "n_max: 3\ns_max: 2\nwitness_count: 0\n");
    let r = derange(&["search-gap", "--n", "4", "--s", "3"]);
    assert!(r.stdout.contains("witness_count: 12\n"));
    assert!(r
        .stdout
        .contains("  (0 1)(2 3)\n  (0 1 2 3)\n  (0 3)(1 2)\n"));
    let r = derange(&["search-gap", "--n", "7", "--s", "2"]);
    assert!(
        r.stderr.starts_with("error: guard_exceeded: "),
        "{}",
        r.stderr
    );
}

#[test]
fn parse_errors_cite_lines() {
    let dir = TempDir::new().unwrap();
    let r = derange(&[
        "analyze",
        s(&file(&dir, "x", "perms 3\n(0 1 2)\n# fine\n(0 1\n")),
    ]);
    assert!(!r.ok);
    assert!(r.stderr.starts_with("error: parse_error: "), "{}", r.stderr);
    assert!(r.stderr.contains("line 4: unclosed cycle"));
    let g = file(&dir, "g", "group 3\n0 1 2\n1 2\n2 0 1\n");
    let r = derange(&["cayley", "--group", s(&g), "--conn", "1"]);
    assert!(
        r.stderr.contains("line 3: row has 2 entries"),
        "{}",
        r.stderr
    );
    let r = derange(&["analyze", s(&dir.path().join("missing"))]);
    assert!(r.stderr.starts_with("error: io_error: "));
    let dup = file(&dir, "dup", "perms 3\n(0 1 2)\n(0 1 2)\n");
    assert!(derange(&["analyze", s(&dup)]).stderr.contains("line 3"));
    assert!(derange(&["--dedupe", "analyze", s(&dup)])
        .stdout
        .contains("set_size: 1\n"));
}
