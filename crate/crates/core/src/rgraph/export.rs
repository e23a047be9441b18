use std::fmt::Write;

use super::{Graph, Provenance, RiordanGraph};

impl Graph {
    /// One line per vertex, `0`/`1` per column.
    pub fn to_matrix_string(&self) -> String {
        let mut out = String::new();
        for row in &self.adj {
            out.push_str(&row.to_bit_string());
            out.push('\n');
        }
        out
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph \"{name}\" {{\n");
        for v in 1..=self.order() {
            let _ = writeln!(out, "  {v};");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_edge_csv(&self) -> String {
        let mut out = String::from("u,v\n");
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u},{v}");
        }
        out
    }

    /// Distance matrix as CSV; unreachable entries are left empty.
    pub fn to_distance_csv(&self) -> String {
        let n = self.order();
        let mut out = String::from("vertex");
        for v in 1..=n {
            let _ = write!(out, ",{v}");
        }
        out.push('\n');
        for r in self.distance_matrix() {
            let _ = write!(out, "{}", r.source);
            for d in &r.distances {
                match d {
                    Some(d) => {
                        let _ = write!(out, ",{d}");
                    }
                    None => out.push(','),
                }
            }
            out.push('\n');
        }
        out
    }
}

impl RiordanGraph {
    /// Short human-readable provenance, e.g. `G_8(A=1111111)`.
    pub fn label(&self) -> String {
        match self.provenance() {
            Provenance::Pair(p) => format!("G_{}(g={}, f={})", self.order(), p.g(), p.f()),
            Provenance::Bell(a) => format!("G_{}(A={})", self.order(), a),
        }
    }
}
