//! Riordan graphs and the metric/structural queries run against them.
//!
//! Vertices are 1-based everywhere in the public API, matching the index
//! arithmetic of `r_{i,j} = [z^{i-2}] g f^{j-1}`. Internally rows are stored
//! 0-based; `build` is the only place where triangle coordinates and vertex
//! labels meet.

mod clique;
mod export;

use std::fmt;

use crate::binseries::BinarySeries;
use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::riordan::{self, ASequence, BinaryTriangle, RiordanPair};

pub use clique::DEFAULT_CLIQUE_CAP;

/// A labelled simple graph on vertices `1..=n` stored as bit-packed
/// adjacency rows.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Bits>,
}

/// Where a [`RiordanGraph`] came from; used to rebuild it at other orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Pair(RiordanPair),
    Bell(ASequence),
}

/// A graph `G_n(g, f)` together with its provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RiordanGraph {
    graph: Graph,
    provenance: Provenance,
}

/// Hop counts from one source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceReport {
    pub source: usize,
    /// `distances[v - 1]`, `None` when unreachable.
    pub distances: Vec<Option<usize>>,
}

impl DistanceReport {
    pub fn to(&self, v: usize) -> Option<usize> {
        self.distances[v - 1]
    }

    pub fn eccentricity(&self) -> Option<usize> {
        self.distances
            .iter()
            .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
    }
}

/// Proper coloring from the odd/even decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IoColoring {
    /// `colors[v - 1]`.
    pub colors: Vec<usize>,
    pub count: usize,
}

impl IoColoring {
    /// Vertices grouped by color, color 0 first.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.count];
        for (i, &c) in self.colors.iter().enumerate() {
            classes[c].push(i + 1);
        }
        classes
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Bits::zeros(n); n],
        }
    }

    /// From adjacency rows; rejects asymmetric matrices and loops.
    pub fn from_rows(rows: Vec<Bits>) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Usage(format!("row {} has length {}", i + 1, row.len())));
            }
            if row.get(i) {
                return Err(Error::Usage(format!("loop at vertex {}", i + 1)));
            }
            if let Some(j) = row.iter_ones().find(|&j| !rows[j].get(i)) {
                return Err(Error::Usage(format!(
                    "matrix is not symmetric at ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
        }
        Ok(Graph { adj: rows })
    }

    /// Parses rows of `0`/`1` characters.
    pub fn parse_matrix(text: &str) -> Result<Self> {
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| {
                crate::binseries::parse_bit_literal(&l.replace(' ', ""))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.order() {
            return Err(Error::VertexRange {
                vertex: v,
                order: self.order(),
            });
        }
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u - 1].get(v - 1)
    }

    /// Adjacency row of `v` (bit `w - 1` set for each neighbour `w`).
    pub fn row(&self, v: usize) -> &Bits {
        &self.adj[v - 1]
    }

    pub fn neighbors(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        Ok(self.adj[v - 1].iter_ones().map(|w| w + 1).collect())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Bits::count_ones).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(i, row)| {
            row.iter_ones()
                .filter(move |&j| j > i)
                .map(move |j| (i + 1, j + 1))
        })
    }

    /// Adds or removes the edge `{u, v}`.
    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loops are not allowed");
        self.adj[u - 1].flip(v - 1);
        self.adj[v - 1].flip(u - 1);
    }

    /// Breadth-first search with bitset frontiers.
    pub fn bfs(&self, source: usize) -> Result<DistanceReport> {
        self.check_vertex(source)?;
        let n = self.order();
        let mut distances = vec![None; n];
        let mut visited = Bits::zeros(n);
        let mut frontier = Bits::zeros(n);
        visited.set(source - 1, true);
        frontier.set(source - 1, true);
        distances[source - 1] = Some(0);
        let mut depth = 0;
        while frontier.any() {
            depth += 1;
            let mut next = Bits::zeros(n);
            for v in frontier.iter_ones() {
                next.or_assign(&self.adj[v]);
            }
            next.and_not_assign(&visited);
            for v in next.iter_ones() {
                distances[v] = Some(depth);
            }
            visited.or_assign(&next);
            frontier = next;
        }
        Ok(DistanceReport { source, distances })
    }

    /// Shortest-path length, `None` when `v` is unreachable from `u`.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(v)?;
        Ok(self.bfs(u)?.to(v))
    }

    /// All distance rows, one BFS per source.
    pub fn distance_matrix(&self) -> Vec<DistanceReport> {
        (1..=self.order())
            .map(|s| self.bfs(s).expect("source in range"))
            .collect()
    }

    /// Eccentricity of every vertex, or the first unreachable pair.
    pub fn eccentricities(&self) -> Result<Vec<usize>> {
        (1..=self.order())
            .map(|s| self.eccentricity(s))
            .collect()
    }

    fn eccentricity(&self, s: usize) -> Result<usize> {
        let report = self.bfs(s)?;
        match report.distances.iter().position(Option::is_none) {
            Some(v) => Err(Error::Disconnected { u: s, v: v + 1 }),
            None => Ok(report.eccentricity().unwrap_or(0)),
        }
    }

    pub fn diameter(&self) -> Result<usize> {
        let mut best = 0;
        for s in 1..=self.order() {
            best = best.max(self.eccentricity(s)?);
        }
        Ok(best)
    }

    /// Diameter together with every pair `(u, v)`, `u < v`, realizing it.
    pub fn diameter_pairs(&self) -> Result<(usize, Vec<(usize, usize)>)> {
        let rows = self.distance_matrix();
        let mut diam = 0;
        let mut pairs = Vec::new();
        for r in &rows {
            for v in r.source + 1..=self.order() {
                let d = r.to(v).ok_or(Error::Disconnected { u: r.source, v })?;
                if d > diam {
                    diam = d;
                    pairs.clear();
                }
                if d == diam && d > 0 {
                    pairs.push((r.source, v));
                }
            }
        }
        Ok((diam, pairs))
    }

    pub fn is_universal(&self, v: usize) -> bool {
        self.degree(v) + 1 == self.order()
    }

    pub fn universal_vertices(&self) -> Vec<usize> {
        (1..=self.order()).filter(|&v| self.is_universal(v)).collect()
    }

    /// Subgraph induced by the strictly increasing vertex list `s`; vertex
    /// `k` of the result is the `k`-th entry of `s`.
    pub fn induced(&self, s: &[usize]) -> Result<Graph> {
        for &v in s {
            self.check_vertex(v)?;
        }
        if s.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Usage("induced vertex list must be strictly increasing".into()));
        }
        let rows = s
            .iter()
            .map(|&u| Bits::from_bools(s.iter().map(|&v| self.has_edge(u, v))))
            .collect();
        Ok(Graph { adj: rows })
    }

    /// Leading principal subgraph on `1..=m`.
    pub fn prefix(&self, m: usize) -> Graph {
        assert!(m <= self.order());
        Graph {
            adj: self.adj[..m].iter().map(|r| r.resized(m)).collect(),
        }
    }

    /// Relabels vertex `i` as `n + 1 - i`.
    pub fn reverse(&self) -> Graph {
        let n = self.order();
        let rows = (1..=n)
            .map(|i| Bits::from_bools((1..=n).map(|j| self.has_edge(n + 1 - i, n + 1 - j))))
            .collect();
        Graph { adj: rows }
    }

    /// First vertex pair where the two graphs disagree.
    pub fn first_difference(&self, other: &Graph) -> Option<(usize, usize)> {
        if self.order() != other.order() {
            return Some((self.order().min(other.order()) + 1, 0));
        }
        (1..=self.order()).find_map(|i| {
            (i + 1..=self.order())
                .find(|&j| self.has_edge(i, j) != other.has_edge(i, j))
                .map(|j| (i, j))
        })
    }

    pub fn max_clique_size(&self) -> Result<usize> {
        self.max_clique_size_capped(DEFAULT_CLIQUE_CAP)
    }

    /// Exact clique number; refuses graphs with more than `cap` vertices.
    pub fn max_clique_size_capped(&self, cap: usize) -> Result<usize> {
        if self.order() > cap {
            return Err(Error::Scale {
                order: self.order(),
                cap,
            });
        }
        Ok(clique::clique_number(&self.adj))
    }

    /// Coloring by the odd/even decomposition: even vertices get color 0,
    /// odd vertex `v` gets one more than the color of `(v + 1) / 2` in the
    /// half-size graph, down to a single vertex. Fails with the offending
    /// edge when the result is not proper.
    pub fn io_coloring(&self) -> Result<IoColoring> {
        let n = self.order();
        let colors: Vec<usize> = (1..=n).map(|v| io_color(v, n)).collect();
        let count = colors.iter().max().map_or(0, |&c| c + 1);
        if let Some((u, v)) = self.edges().find(|&(u, v)| colors[u - 1] == colors[v - 1]) {
            return Err(Error::IoViolation {
                u,
                v,
                color: colors[u - 1],
            });
        }
        Ok(IoColoring { colors, count })
    }
}

fn io_color(v: usize, n: usize) -> usize {
    if n <= 1 || v.is_multiple_of(2) {
        0
    } else {
        1 + io_color(v.div_ceil(2), n.div_ceil(2))
    }
}

/// `⌈log₂ n⌉` for `n ≥ 1`.
pub fn ceil_log2(n: usize) -> usize {
    assert!(n >= 1);
    (usize::BITS - (n - 1).leading_zeros()) as usize
}

/// `⌊log₂ n⌋` for `n ≥ 1`.
pub fn floor_log2(n: usize) -> usize {
    assert!(n >= 1);
    (usize::BITS - 1 - n.leading_zeros()) as usize
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Graph(order {})", self.order())?;
        for row in &self.adj {
            writeln!(f, "  {}", row.to_bit_string())?;
        }
        Ok(())
    }
}

/// Lower adjacency from a triangle of order `n - 1`: row `i` (1-based) below
/// the diagonal is triangle row `i - 2`, shifted so column `j - 1` is vertex
/// `j`.
fn graph_from_triangle(t: &BinaryTriangle, n: usize) -> Graph {
    debug_assert_eq!(t.order() + 1, n.max(1));
    let mut adj = vec![Bits::zeros(n); n];
    for i in 2..=n {
        for j in t.row(i - 2).iter_ones() {
            if j + 1 < i {
                adj[i - 1].set(j, true);
                adj[j].set(i - 1, true);
            }
        }
    }
    Graph { adj }
}

impl RiordanGraph {
    /// `G_n(g, f)`; both series need `n - 1` known coefficients.
    pub fn build(p: &RiordanPair, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Usage("graph order must be at least 1".into()));
        }
        let t = riordan::riordan_matrix(p, n - 1)?;
        Ok(RiordanGraph {
            graph: graph_from_triangle(&t, n),
            provenance: Provenance::Pair(p.clone()),
        })
    }

    /// Bell type graph `G_n(g, zg)` from its binary A-sequence; reads
    /// `(1, a_1, ..., a_{n-2})`, i.e. `n - 1` entries.
    pub fn build_bell_aseq(a: &ASequence, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Usage("graph order must be at least 1".into()));
        }
        let t = riordan::bell_matrix_from_aseq(a, n - 1)?;
        Ok(RiordanGraph {
            graph: graph_from_triangle(&t, n),
            provenance: Provenance::Bell(a.clone()),
        })
    }

    /// Same provenance, order `n`.
    pub fn rebuild(provenance: &Provenance, n: usize) -> Result<Self> {
        match provenance {
            Provenance::Pair(p) => Self::build(p, n),
            Provenance::Bell(a) => Self::build_bell_aseq(a, n),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    fn is_proper(&self) -> bool {
        match &self.provenance {
            Provenance::Pair(p) => p.is_proper(),
            Provenance::Bell(_) => true,
        }
    }

    /// Odd vertices induce the same-provenance graph of order `⌈n/2⌉` (as
    /// labelled graphs under `v ↦ (v+1)/2`) and even vertices induce a
    /// null graph.
    pub fn is_io_decomposable_by_definition(&self) -> Result<bool> {
        if !self.is_proper() {
            return Ok(false);
        }
        let n = self.order();
        let evens: Vec<usize> = (2..=n).step_by(2).collect();
        if self.induced(&evens)?.edge_count() != 0 {
            return Ok(false);
        }
        let odds: Vec<usize> = (1..=n).step_by(2).collect();
        let half = Self::rebuild(&self.provenance, n.div_ceil(2))?;
        Ok(self.induced(&odds)? == half.graph)
    }
}

impl std::ops::Deref for RiordanGraph {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.graph
    }
}

/// Reverse relabelling of an io-decomposable Bell graph from its A-sequence:
/// the graph of `(A'·A^{n-2}, z/A)`.
pub fn reverse_formula(a: &ASequence, n: usize) -> Result<RiordanGraph> {
    if !riordan::is_io_pattern(a) {
        return Err(Error::Domain(format!(
            "{a} is not of the io-decomposable form (1,1,a2,a2,a4,a4,...)"
        )));
    }
    if n == 0 {
        return Err(Error::Usage("graph order must be at least 1".into()));
    }
    if a.len() + 1 < n {
        return Err(Error::Length {
            needed: n - 1,
            got: a.len(),
        });
    }
    if n == 1 {
        return RiordanGraph::build_bell_aseq(a, 1);
    }
    // g needs degrees 0..=n-2. [z^{n-2}]A' = (n-1) a_{n-1}: for odd n-1 the
    // io pairing gives a_{n-1} = a_{n-2}; for even n-1 it vanishes and the
    // zero padding is never read.
    let a_full = a.prefix(n - 1)?.pattern_completed().resized(n);
    let big_a = a_full.series();
    let g = big_a
        .derivative()?
        .mul(&big_a.pow((n - 2) as u64))
        .truncate(n - 1)?;
    let f = big_a.reciprocal()?.shift_up().truncate(n - 1)?;
    RiordanGraph::build(&RiordanPair::new(g, f)?, n)
}

/// Reverse relabelling of any proper Bell graph from its A-sequence:
/// the graph of `((zA)'·A^{n-2}, z/A)`. Needs `n - 1` entries.
pub fn reverse_formula_general(a: &ASequence, n: usize) -> Result<RiordanGraph> {
    if n <= 1 {
        return RiordanGraph::build_bell_aseq(a, n.max(1));
    }
    let big_a = a.prefix(n - 1)?.series();
    let g = big_a
        .shift_up()
        .derivative()?
        .mul(&big_a.pow((n - 2) as u64));
    let f = big_a.reciprocal()?.shift_up().truncate(n - 1)?;
    RiordanGraph::build(&RiordanPair::new(g, f)?, n)
}

/// Pair whose graph of order `n` is the reverse relabelling of `G_n(g, f)`:
/// `(g(f̄)·f̄'·(z/f̄)^{n-1}, f̄)`. Requires `[z^1]f = 1` and `n` known
/// coefficients of both series.
pub fn reverse_pair(p: &RiordanPair, n: usize) -> Result<RiordanPair> {
    if n < 2 {
        return Err(Error::Usage("reverse pair needs order at least 2".into()));
    }
    let g = p.g().truncate(n)?;
    let f = p.f().truncate(n)?;
    let f_bar = f.comp_inverse()?;
    let z_over = f_bar.div_z()?.reciprocal()?;
    let new_g = g
        .compose(&f_bar)?
        .mul(&f_bar.derivative()?)
        .mul(&z_over.pow((n - 1) as u64));
    RiordanPair::new(new_g, f_bar.truncate(n - 1)?)
}

/// `(1, z+z²)` and `(1+z, z+z²)` style pairs from bit literals, used by the
/// Catalan reverse-relabelling checks.
pub fn pair_from_literals(g: &str, f: &str) -> Result<RiordanPair> {
    RiordanPair::new(BinarySeries::parse(g)?, BinarySeries::parse(f)?)
}

#[cfg(test)]
mod tests;
