//! Printed reference data shipped with the crate. Reproductions are diffed
//! against these, anomalies included.

use crate::rgraph::Graph;
use crate::riordan::ASequence;

pub const FIGURE1_CG6: &str = include_str!("../data/figure1_cg6.txt");
pub const CG4_REVERSE: &str = include_str!("../data/cg4_reverse.txt");
pub const CG8_REVERSE: &str = include_str!("../data/cg8_reverse.txt");
pub const COUNTEREXAMPLES: &str = include_str!("../data/counterexamples.txt");
pub const TABLE1: &str = include_str!("../data/table1.txt");
pub const TABLE2: &str = include_str!("../data/table2.txt");

fn data_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn strip_comments(text: &str) -> String {
    data_lines(text).collect::<Vec<_>>().join("\n")
}

/// A printed adjacency matrix.
pub fn matrix(text: &str) -> Graph {
    Graph::parse_matrix(&strip_comments(text)).expect("embedded matrix is well formed")
}

/// Printed counterexample rows `(n, diam CG_n, diam G_n)`.
pub fn counterexample_rows() -> Vec<(usize, usize, usize)> {
    data_lines(COUNTEREXAMPLES)
        .map(|l| {
            let v: Vec<usize> = l.split(',').map(|x| x.parse().expect("integer")).collect();
            (v[0], v[1], v[2])
        })
        .collect()
}

/// Printed table rows `(A-sequence, diameter)` in printed order.
pub fn table_rows(text: &str) -> Vec<(ASequence, usize)> {
    data_lines(text)
        .map(|l| {
            let (a, d) = l.split_once(',').expect("two columns");
            (
                ASequence::parse(a).expect("embedded A-sequence"),
                d.parse().expect("integer"),
            )
        })
        .collect()
}
