use std::process::{Command, Output};

fn riordan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_riordan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

const FIGURE1: &str = "011010\n101010\n110111\n001010\n111101\n001010\n";

#[test]
fn graph_matrix_outputs() {
    let o = riordan(&["graph", "--family", "catalan", "-n", "6", "--format", "matrix"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), FIGURE1);

    let o = riordan(&["graph", "--aseq", "10", "-n", "5", "--format", "matrix"]);
    assert_eq!(stdout(&o), "01000\n10100\n01010\n00101\n00010\n");

    let o = riordan(&["graph", "--family", "catalan", "-n", "8", "--reverse", "--format", "matrix"]);
    assert_eq!(
        stdout(&o),
        "01000000\n10110000\n01010100\n01101111\n00010100\n00111011\n00010101\n00010110\n"
    );
}

#[test]
fn graph_descriptors_agree() {
    // Catalan as a g literal: C(z) mod 2 has ones at 2^j - 1.
    let by_g = riordan(&["graph", "--g", "1101000100000001", "-n", "16", "--format", "matrix"]);
    let by_family = riordan(&["graph", "--family", "catalan", "-n", "16", "--format", "matrix"]);
    let by_ones = riordan(&["graph", "--aseq-ones", "15", "-n", "16", "--format", "matrix"]);
    assert_eq!(stdout(&by_g), stdout(&by_family));
    assert_eq!(stdout(&by_ones), stdout(&by_family));
}

#[test]
fn graph_dot_and_csv() {
    let o = riordan(&["graph", "--family", "catalan", "-n", "4", "--format", "dot"]);
    let dot = stdout(&o);
    assert!(dot.starts_with("graph \"G4\" {\n"));
    assert!(dot.contains("  3 -- 4;\n"));
    assert!(dot.ends_with("}\n"));

    let o = riordan(&["graph", "--family", "catalan", "-n", "4", "--format", "csv"]);
    assert_eq!(stdout(&o), "u,v\n1,2\n1,3\n2,3\n3,4\n");
}

#[test]
fn metrics() {
    let o = riordan(&["metric", "--family", "catalan", "-n", "64", "diameter"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "6\n"));

    let o = riordan(&["metric", "--family", "pascal", "-n", "100", "diameter"]);
    assert_eq!(stdout(&o), "2\n");

    // Pascal graph of order 4: 1 is universal, so d(1, 4) = 1.
    let o = riordan(&["metric", "--aseq", "11", "-n", "4", "distance", "1", "4"]);
    assert_eq!(stdout(&o), "1\n");

    let o = riordan(&["metric", "--family", "catalan", "-n", "8", "clique"]);
    assert_eq!(stdout(&o), "4\n");

    let o = riordan(&["metric", "--family", "catalan", "-n", "8", "colors"]);
    let out = stdout(&o);
    assert!(out.starts_with("4\n"));
    assert!(out.contains("color 0: 2 4 6 8\n"));

    let o = riordan(&["--format", "csv", "metric", "--family", "catalan", "-n", "6", "universal"]);
    assert_eq!(stdout(&o), "metric,value\nuniversal,3 5\n");
}

#[test]
fn disconnected_diameter_exits_one() {
    // g = 0 makes every entry of (zg, zg) vanish: an edgeless graph.
    let o = riordan(&["metric", "--g", "0", "-n", "3", "diameter"]);
    assert_eq!(code(&o), 1, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn verify_claims() {
    for args in [
        &["verify", "catalan-diameters", "--kmax", "7"][..],
        &["verify", "structural", "--aseq", "1100000000", "--nmax", "64"],
        &["verify", "fractal", "--family", "catalan", "--s", "3", "-n", "33"],
        &["verify", "mixed-size", "-k", "4", "-m", "1"],
        &["verify", "monotonicity", "--aseq", "111100", "-k", "3", "--mmax", "2"],
        &["verify", "section3", "--family", "pascal", "-k", "4"],
    ] {
        let o = riordan(args);
        assert_eq!(code(&o), 0, "{args:?}");
        let line = stdout(&o);
        assert_eq!(line.split('\t').nth(2), Some("pass"), "{line}");
    }
    let o = riordan(&["verify", "section3", "-k", "4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("hypothesis-not-met"));
}

#[test]
fn verify_usage_errors() {
    assert_eq!(code(&riordan(&["verify", "no-such-claim"])), 2);
    assert_eq!(code(&riordan(&["verify", "fractal", "--s", "3"])), 2);
    assert_eq!(code(&riordan(&["verify", "structural", "--aseq", "1110"])), 2);
}

#[test]
fn scan_exit_codes() {
    let o = riordan(&["scan", "1", "--aseq-ones", "16", "--nmax", "100", "--format", "csv"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("n,aseq,diam,diam_catalan,diam_pascal,verdict"));
    let ns: Vec<&str> = lines.map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(
        ns,
        ["44", "45", "46", "47", "48", "78", "79", "80", "87", "88", "89", "90", "91"]
    );

    let o = riordan(&["scan", "3", "--nmax", "256", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "n,k,m,s,diam_catalan,expected,verdict\n");

    let o = riordan(&["scan", "1", "--family", "pascal", "--nmax", "64"]);
    assert_eq!(code(&o), 0);

    let o = riordan(&["scan", "2", "-k", "4", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stderr).contains("attaining diameter 4: 111111111111111\n"));
}

#[test]
fn scan_two_at_order_eight_reports_second_attainer() {
    let o = riordan(&["scan", "2", "-k", "3", "--format", "csv"]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "k,aseq,diam,attains_k,is_catalan\n3,1111110,3,true,false\n");
}

#[test]
fn scan_budget_and_usage() {
    let o = riordan(&["scan", "1", "--nmax", "60"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("exceeds budget"));
    assert_eq!(code(&riordan(&["--budget", "10", "scan", "3"])), 2);
    assert_eq!(code(&riordan(&["scan", "4"])), 2);
    assert_eq!(code(&riordan(&["scan", "2"])), 2);
}

#[test]
fn scan_output_independent_of_jobs() {
    let a = riordan(&["--jobs", "1", "scan", "1", "--nmax", "20", "--all", "--format", "csv"]);
    let b = riordan(&["--jobs", "4", "scan", "1", "--nmax", "20", "--all", "--format", "csv"]);
    assert_eq!(code(&a), code(&b));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).lines().count() > 1000);
}

#[test]
fn reproductions() {
    let o = riordan(&["reproduce", "counterexamples", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 14);
    assert!(out.contains("44,3,4,match\n"));
    assert!(out.contains("91,3,4,match\n"));

    let o = riordan(&["reproduce", "figure1", "--format", "matrix"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, FIGURE1));

    for target in ["example-cg4r", "example-cg8r"] {
        assert_eq!(code(&riordan(&["reproduce", target])), 0);
    }

    let o = riordan(&["reproduce", "table1", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 9);
    assert!(stdout(&o).contains("1111110,3,2 3,conflict\n"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("recomputed 3"));

    let o = riordan(&["reproduce", "table2", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 33);
    let notes = String::from_utf8_lossy(&o.stderr).to_string();
    assert!(notes.contains("111111000000111: not printed"));
    assert!(notes.contains("111111000011111: not printed"));
    assert!(notes.contains("111111001111110: printed 2 times"));
}

#[test]
fn conflicting_descriptors_rejected() {
    let o = riordan(&["graph", "--family", "catalan", "--aseq", "11", "-n", "4"]);
    assert_eq!(code(&o), 2);
    assert!(o.stdout.is_empty());
    assert_eq!(code(&riordan(&["graph", "-n", "4"])), 2);
    assert_eq!(code(&riordan(&["graph", "--aseq", "1x", "-n", "4"])), 2);
    assert_eq!(code(&riordan(&["metric", "--family", "catalan", "-n", "4", "distance", "1", "9"])), 2);
}
