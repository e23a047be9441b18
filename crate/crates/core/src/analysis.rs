//! Executable checks of the diameter and structure statements for
//! io-decomposable Bell graphs.
//!
//! Every verifier recomputes from adjacency; nothing here assumes a
//! statement holds. A failing report carries a [`Witness`] that
//! [`Witness::replay`] can confirm against the graph of the recorded order
//! using only graph queries.

use std::fmt;

use crate::error::{Error, Result};
use crate::rgraph::{ceil_log2, floor_log2, Graph, RiordanGraph, DEFAULT_CLIQUE_CAP};
use crate::riordan::{is_io_pattern, ASequence, RiordanPair};
use crate::BinarySeries;

/// Source of the graphs `G_n` a verifier inspects.
pub trait GraphFamily: Sync {
    /// `G_n`; smaller orders are taken as leading principal subgraphs.
    fn graph(&self, n: usize) -> Result<Graph>;
    fn describe(&self) -> String;
}

/// Bell graphs of a fixed binary A-sequence, zero-extended as needed.
#[derive(Clone, Debug)]
pub struct BellFamily {
    aseq: ASequence,
}

impl BellFamily {
    pub fn new(aseq: ASequence) -> Self {
        BellFamily { aseq }
    }

    pub fn catalan() -> Self {
        BellFamily::new(ASequence::catalan(1))
    }

    pub fn aseq(&self) -> &ASequence {
        &self.aseq
    }
}

impl GraphFamily for BellFamily {
    fn graph(&self, n: usize) -> Result<Graph> {
        let a = if self.aseq.is_all_ones() {
            ASequence::catalan(n.max(2))
        } else {
            self.aseq.prefix(n.saturating_sub(1).max(1))?
        };
        Ok(RiordanGraph::build_bell_aseq(&a, n)?.into_graph())
    }

    fn describe(&self) -> String {
        if self.aseq.is_all_ones() {
            "catalan".into()
        } else {
            self.aseq.to_bit_string()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim {
    Structural,
    Fractal,
    CatalanDiameters,
    MixedSize,
    Monotonicity,
    Section3,
}

impl Claim {
    pub fn tag(self) -> &'static str {
        match self {
            Claim::Structural => "structural",
            Claim::Fractal => "fractal",
            Claim::CatalanDiameters => "catalan-diameters",
            Claim::MixedSize => "mixed-size",
            Claim::Monotonicity => "monotonicity",
            Claim::Section3 => "section3",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    HypothesisNotMet,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::HypothesisNotMet => "hypothesis-not-met",
        })
    }
}

/// Evidence for a failed check, always relative to the graph of order `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `vertex` should be universal but misses `missing`.
    NotUniversal { n: usize, vertex: usize, missing: usize },
    ImproperColoring { n: usize, u: usize, v: usize },
    ColorCount { n: usize, expected: usize, actual: usize },
    CliqueSize { n: usize, expected: usize, actual: usize },
    Disconnected { n: usize, u: usize, v: usize },
    /// `d(u, v)` exceeds the stated bound.
    DistanceExceeds { n: usize, u: usize, v: usize, bound: usize },
    DiameterMismatch { n: usize, expected: usize, actual: usize },
    /// `d(u, v)` differs from the expected value.
    DistanceMismatch { n: usize, u: usize, v: usize, expected: usize },
    /// `(u, v)` realizes distance `distance` but is outside the expected
    /// set of extremal pairs.
    UnexpectedExtremalPair { n: usize, u: usize, v: usize, distance: usize },
    /// Edge `{offset+i, offset+j}` disagrees with `{i, j}`.
    WindowMismatch { n: usize, offset: usize, i: usize, j: usize },
    /// Edge `{u, v}` (of the reverse relabelling when `reversed`) is not
    /// `expected`.
    EdgeMismatch { n: usize, u: usize, v: usize, expected: bool, reversed: bool },
    /// Largest neighbour of `vertex` in the reverse relabelling.
    MaxNeighbor { n: usize, vertex: usize, expected: usize, actual: usize },
    NeighborSet { n: usize, vertex: usize, expected: Vec<usize>, actual: Vec<usize> },
}

impl Witness {
    pub fn order(&self) -> usize {
        use Witness::*;
        match *self {
            NotUniversal { n, .. }
            | ImproperColoring { n, .. }
            | ColorCount { n, .. }
            | CliqueSize { n, .. }
            | Disconnected { n, .. }
            | DistanceExceeds { n, .. }
            | DiameterMismatch { n, .. }
            | DistanceMismatch { n, .. }
            | UnexpectedExtremalPair { n, .. }
            | WindowMismatch { n, .. }
            | EdgeMismatch { n, .. }
            | MaxNeighbor { n, .. }
            | NeighborSet { n, .. } => n,
        }
    }

    /// Re-checks the violation on `g` (the graph of order [`Self::order`]).
    pub fn replay(&self, g: &Graph) -> bool {
        use Witness::*;
        if g.order() != self.order() {
            return false;
        }
        let dist = |u, v| g.distance(u, v).ok().flatten();
        match self {
            &NotUniversal { vertex, missing, .. } => vertex != missing && !g.has_edge(vertex, missing),
            &ImproperColoring { u, v, .. } => {
                g.has_edge(u, v) && matches!(g.io_coloring(), Err(Error::IoViolation { .. }))
            }
            &ColorCount { expected, .. } => g.io_coloring().map_or(true, |c| c.count != expected),
            &CliqueSize { expected, .. } => g.max_clique_size_capped(usize::MAX).is_ok_and(|c| c != expected),
            &Disconnected { u, v, .. } => g.distance(u, v).is_ok_and(|d| d.is_none()),
            &DistanceExceeds { u, v, bound, .. } => dist(u, v).is_none_or(|d| d > bound),
            &DiameterMismatch { expected, .. } => g.diameter() != Ok(expected),
            &DistanceMismatch { u, v, expected, .. } => dist(u, v) != Some(expected),
            &UnexpectedExtremalPair { u, v, distance, .. } => dist(u, v) == Some(distance),
            &WindowMismatch { offset, i, j, .. } => g.has_edge(i, j) != g.has_edge(offset + i, offset + j),
            &EdgeMismatch { u, v, expected, reversed, .. } => {
                let present = if reversed {
                    let n = g.order();
                    g.has_edge(n + 1 - u, n + 1 - v)
                } else {
                    g.has_edge(u, v)
                };
                present != expected
            }
            &MaxNeighbor { vertex, expected, .. } => {
                let r = g.reverse();
                r.neighbors(vertex).ok().and_then(|v| v.last().copied()) != Some(expected)
            }
            NeighborSet { vertex, expected, .. } => g.neighbors(*vertex).ok().as_ref() != Some(expected),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Witness::*;
        match self {
            NotUniversal { n, vertex, missing } => write!(f, "n={n} vertex {vertex} not adjacent to {missing}"),
            ImproperColoring { n, u, v } => write!(f, "n={n} adjacent {u},{v} share an io color"),
            ColorCount { n, expected, actual } => write!(f, "n={n} colors {actual} expected {expected}"),
            CliqueSize { n, expected, actual } => write!(f, "n={n} clique {actual} expected {expected}"),
            Disconnected { n, u, v } => write!(f, "n={n} no path {u}-{v}"),
            DistanceExceeds { n, u, v, bound } => write!(f, "n={n} d({u},{v}) exceeds {bound}"),
            DiameterMismatch { n, expected, actual } => write!(f, "n={n} diam {actual} expected {expected}"),
            DistanceMismatch { n, u, v, expected } => write!(f, "n={n} d({u},{v}) expected {expected}"),
            UnexpectedExtremalPair { n, u, v, distance } => {
                write!(f, "n={n} unexpected pair ({u},{v}) at distance {distance}")
            }
            WindowMismatch { n, offset, i, j } => {
                write!(f, "n={n} edge {{{i},{j}}} differs from {{{},{}}}", offset + i, offset + j)
            }
            EdgeMismatch { n, u, v, expected, reversed } => write!(
                f,
                "n={n} {}edge {{{u},{v}}} expected {}",
                if *reversed { "reversed " } else { "" },
                u8::from(*expected)
            ),
            MaxNeighbor { n, vertex, expected, actual } => {
                write!(f, "n={n} reversed max neighbour of {vertex} is {actual}, expected {expected}")
            }
            NeighborSet { n, vertex, expected, actual } => {
                write!(f, "n={n} N({vertex})={actual:?} expected {expected:?}")
            }
        }
    }
}

/// Outcome of one verifier call.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub claim: Claim,
    pub params: Vec<(&'static str, String)>,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// Individual comparisons performed.
    pub checks: usize,
    pub note: Option<String>,
}

impl VerificationReport {
    fn new(claim: Claim) -> Self {
        VerificationReport {
            claim,
            params: Vec::new(),
            verdict: Verdict::Pass,
            witness: None,
            checks: 0,
            note: None,
        }
    }

    fn param(mut self, key: &'static str, value: impl ToString) -> Self {
        self.params.push((key, value.to_string()));
        self
    }

    fn fail(mut self, witness: Witness) -> Self {
        self.verdict = Verdict::Fail;
        self.witness = Some(witness);
        self
    }

    fn not_met(mut self, note: impl Into<String>) -> Self {
        self.verdict = Verdict::HypothesisNotMet;
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// One tab-separated record: claim, parameters, verdict, witness.
impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(",");
        let witness = match (&self.witness, &self.note) {
            (Some(w), _) => w.to_string(),
            (None, Some(note)) => note.clone(),
            (None, None) => "-".into(),
        };
        write!(
            f,
            "{}\t{}\t{}\tchecks={}\t{}",
            self.claim.tag(),
            params,
            self.verdict,
            self.checks,
            witness
        )
    }
}

fn require_io(a: &ASequence) -> Result<()> {
    if !is_io_pattern(a) {
        return Err(Error::Domain(format!("{a} is not an io-decomposable A-sequence")));
    }
    Ok(())
}

fn require_len(a: &ASequence, n: usize) -> Result<()> {
    if a.len() + 1 < n {
        return Err(Error::Length {
            needed: n - 1,
            got: a.len(),
        });
    }
    Ok(())
}

// Diameter of g, or a witness that it is not within `bound` / disconnected.
fn diameter_within(g: &Graph, bound: usize) -> std::result::Result<usize, Witness> {
    let n = g.order();
    let mut diam = 0;
    for u in 1..=n {
        let r = g.bfs(u).expect("vertex in range");
        for v in 1..=n {
            match r.to(v) {
                None => return Err(Witness::Disconnected { n, u, v }),
                Some(d) if d > bound => return Err(Witness::DistanceExceeds { n, u, v, bound }),
                Some(d) => diam = diam.max(d),
            }
        }
    }
    Ok(diam)
}

fn diameter_or_witness(g: &Graph) -> std::result::Result<usize, Witness> {
    diameter_within(g, usize::MAX)
}

fn is_pow2_plus(n: usize, extra: usize) -> Option<u32> {
    (n > extra && (n - extra).is_power_of_two()).then(|| (n - extra).trailing_zeros())
}

/// Universal vertex, coloring, clique and diameter bounds for every order
/// up to `n_max`.
pub fn verify_structural(a: &ASequence, n_max: usize) -> Result<VerificationReport> {
    require_io(a)?;
    require_len(a, n_max)?;
    verify_structural_with(&BellFamily::new(a.clone()), n_max, DEFAULT_CLIQUE_CAP)
}

pub fn verify_structural_with(
    family: &dyn GraphFamily,
    n_max: usize,
    clique_cap: usize,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(Claim::Structural)
        .param("aseq", family.describe())
        .param("n_max", n_max);
    if n_max == 0 {
        return Ok(report);
    }
    let big = family.graph(n_max)?;
    for n in 1..=n_max {
        let g = big.prefix(n);

        // Universal vertex 2^k + 1 in orders 2^k + 1 and 2^k + 2.
        for k in [is_pow2_plus(n, 1), is_pow2_plus(n, 2)].into_iter().flatten() {
            let vertex = (1usize << k) + 1;
            report.checks += 1;
            if let Some(missing) = (1..=n).find(|&w| w != vertex && !g.has_edge(vertex, w)) {
                return Ok(report.fail(Witness::NotUniversal { n, vertex, missing }));
            }
        }

        let expected_colors = ceil_log2(n) + 1;
        report.checks += 1;
        match g.io_coloring() {
            Err(Error::IoViolation { u, v, .. }) => {
                return Ok(report.fail(Witness::ImproperColoring { n, u, v }))
            }
            Err(e) => return Err(e),
            Ok(c) if c.count != expected_colors => {
                return Ok(report.fail(Witness::ColorCount {
                    n,
                    expected: expected_colors,
                    actual: c.count,
                }))
            }
            Ok(_) => {}
        }

        if n <= clique_cap {
            report.checks += 1;
            let clique = g.max_clique_size_capped(clique_cap)?;
            if clique != expected_colors {
                return Ok(report.fail(Witness::CliqueSize {
                    n,
                    expected: expected_colors,
                    actual: clique,
                }));
            }
        }

        let k = floor_log2(n);
        let mut bound = k;
        if (1usize << k) + 1 < n {
            bound = bound.min(floor_log2(n - (1 << k)) + 1);
        }
        report.checks += 1;
        let diam = match diameter_within(&g, bound) {
            Ok(d) => d,
            Err(w) => return Ok(report.fail(w)),
        };
        let exactly_two = n >= 4
            && (is_pow2_plus(n, 2).is_some_and(|k| k >= 1) || is_pow2_plus(n, 1).is_some_and(|k| k >= 2));
        if exactly_two {
            report.checks += 1;
            if diam != 2 {
                return Ok(report.fail(Witness::DiameterMismatch {
                    n,
                    expected: 2,
                    actual: diam,
                }));
            }
        }
    }
    Ok(report)
}

/// Windows `{α2^s+1, ..., (α+1)2^s+1}` and `{α2^s+1, ..., (α+1)2^s}` induce
/// the same labelled graphs as the prefixes of the same sizes.
pub fn verify_fractal(
    a: &ASequence,
    s: u32,
    alpha_max: usize,
    n: usize,
) -> Result<VerificationReport> {
    require_io(a)?;
    require_len(a, n)?;
    verify_fractal_with(&BellFamily::new(a.clone()), s, alpha_max, n)
}

pub fn verify_fractal_with(
    family: &dyn GraphFamily,
    s: u32,
    alpha_max: usize,
    n: usize,
) -> Result<VerificationReport> {
    let step = 1usize
        .checked_shl(s)
        .ok_or_else(|| Error::Usage(format!("level s={s} too large")))?;
    if (alpha_max + 1) * step + 1 > n {
        return Err(Error::Usage(format!(
            "windows up to alpha={alpha_max} at s={s} need n >= {}",
            (alpha_max + 1) * step + 1
        )));
    }
    let mut report = VerificationReport::new(Claim::Fractal)
        .param("aseq", family.describe())
        .param("s", s)
        .param("alpha_max", alpha_max)
        .param("n", n);
    let g = family.graph(n)?;
    for alpha in 1..=alpha_max {
        let offset = alpha * step;
        for width in [step + 1, step] {
            report.checks += 1;
            for i in 1..=width {
                for j in i + 1..=width {
                    if g.has_edge(i, j) != g.has_edge(offset + i, offset + j) {
                        return Ok(report.fail(Witness::WindowMismatch { n, offset, i, j }));
                    }
                }
            }
        }
    }
    Ok(report)
}

/// For `k = 1..=k_max`: `diam CG_{2^k} = k` realized exactly by the pairs
/// `(i, 2^k)` with `i ≤ 2^{k-1}`, `diam CG_{2^k-1} = k-1`, the reverse
/// relabellings equal the graphs of `(1, z+z²)` and `(1+z, z+z²)`, and the
/// largest neighbour of `i ≤ 2^{k-1}` in `CG_{2^k}^r` is `2i`.
pub fn verify_catalan_diameters(k_max: u32) -> Result<VerificationReport> {
    verify_catalan_diameters_with(&BellFamily::catalan(), k_max)
}

pub fn verify_catalan_diameters_with(
    family: &dyn GraphFamily,
    k_max: u32,
) -> Result<VerificationReport> {
    if k_max == 0 || k_max >= usize::BITS - 1 {
        return Err(Error::Usage(format!("k_max={k_max} out of range")));
    }
    let mut report = VerificationReport::new(Claim::CatalanDiameters).param("k_max", k_max);
    let big = family.graph(1 << k_max)?;
    for k in 1..=k_max as usize {
        let n = 1usize << k;
        let g = big.prefix(n);

        report.checks += 1;
        let (diam, pairs) = match g.diameter_pairs() {
            Ok(x) => x,
            Err(Error::Disconnected { u, v }) => {
                return Ok(report.fail(Witness::Disconnected { n, u, v }))
            }
            Err(e) => return Err(e),
        };
        if diam != k {
            return Ok(report.fail(Witness::DiameterMismatch { n, expected: k, actual: diam }));
        }
        report.checks += 1;
        if let Some(&(u, v)) = pairs.iter().find(|&&(u, v)| v != n || u > n / 2) {
            return Ok(report.fail(Witness::UnexpectedExtremalPair { n, u, v, distance: diam }));
        }
        if let Some(i) = (1..=n / 2).find(|i| !pairs.contains(&(*i, n))) {
            return Ok(report.fail(Witness::DistanceMismatch { n, u: i, v: n, expected: k }));
        }

        let closed = closed_form_graph("1", n)?;
        report.checks += 1;
        if let Some(w) = reversed_mismatch(&g, &closed) {
            return Ok(report.fail(w));
        }

        report.checks += 1;
        let r = g.reverse();
        for i in 1..=n / 2 {
            let actual = r.neighbors(i)?.last().copied().unwrap_or(0);
            if actual != 2 * i {
                return Ok(report.fail(Witness::MaxNeighbor { n, vertex: i, expected: 2 * i, actual }));
            }
        }

        let n = n - 1;
        let g = big.prefix(n);
        report.checks += 1;
        match diameter_or_witness(&g) {
            Err(w) => return Ok(report.fail(w)),
            Ok(d) if d != k - 1 => {
                return Ok(report.fail(Witness::DiameterMismatch { n, expected: k - 1, actual: d }))
            }
            Ok(_) => {}
        }
        let closed = closed_form_graph("11", n)?;
        report.checks += 1;
        if let Some(w) = reversed_mismatch(&g, &closed) {
            return Ok(report.fail(w));
        }
    }
    Ok(report)
}

// Graph of (g, z + z²) with g given as a short literal, zero-extended.
fn closed_form_graph(g_literal: &str, n: usize) -> Result<Graph> {
    let p = n.max(3);
    let g = BinarySeries::named(&g_literal.parse()?, p)?;
    let f = BinarySeries::named(&"011".parse()?, p)?;
    Ok(RiordanGraph::build(&RiordanPair::new(g, f)?, n)?.into_graph())
}

fn reversed_mismatch(g: &Graph, expected_reverse: &Graph) -> Option<Witness> {
    g.reverse()
        .first_difference(expected_reverse)
        .map(|(u, v)| Witness::EdgeMismatch {
            n: g.order(),
            u,
            v,
            expected: expected_reverse.has_edge(u, v),
            reversed: true,
        })
}

/// Order `1 + 2^m + Σ_{j=0}^{s} 2^{k+j}`.
pub fn mixed_order(k: u32, m: u32, s: u32) -> Option<usize> {
    let mut n = 1usize.checked_add(1usize.checked_shl(m)?)?;
    for j in 0..=s {
        n = n.checked_add(1usize.checked_shl(k.checked_add(j)?)?)?;
    }
    Some(n)
}

/// Upper bound `s+2` (m = 1) or `s+3` on the diameter at the mixed order;
/// for the Catalan sequence with `s = 0` also equality and the exact
/// neighbour sets of `1` and `2^k + 2^m`.
pub fn verify_mixed_size(k: u32, m: u32, s: u32, a: &ASequence) -> Result<VerificationReport> {
    require_io(a)?;
    let n = mixed_order(k, m, s).ok_or_else(|| Error::Usage("order overflows".into()))?;
    require_len(a, n)?;
    verify_mixed_size_with(&BellFamily::new(a.clone()), k, m, s, a.prefix(n - 1)?.is_all_ones())
}

pub fn verify_mixed_size_with(
    family: &dyn GraphFamily,
    k: u32,
    m: u32,
    s: u32,
    catalan: bool,
) -> Result<VerificationReport> {
    if !(k > m && m >= 1) {
        return Err(Error::Usage(format!("need k > m >= 1, got k={k} m={m}")));
    }
    let n = mixed_order(k, m, s).ok_or_else(|| Error::Usage("order overflows".into()))?;
    let mut report = VerificationReport::new(Claim::MixedSize)
        .param("aseq", family.describe())
        .param("k", k)
        .param("m", m)
        .param("s", s)
        .param("n", n);
    let g = family.graph(n)?;
    let bound = if m == 1 { s as usize + 2 } else { s as usize + 3 };
    report.checks += 1;
    let diam = match diameter_within(&g, bound) {
        Ok(d) => d,
        Err(w) => return Ok(report.fail(w)),
    };
    if catalan && s == 0 {
        report.checks += 1;
        if diam != bound {
            return Ok(report.fail(Witness::DiameterMismatch { n, expected: bound, actual: diam }));
        }
        let (k, m) = (k as usize, m as usize);
        let n1: Vec<usize> = (0..=k).map(|t| (1 << t) + 1).collect();
        let v = (1 << k) + (1 << m);
        let mut nv: Vec<usize> = (0..1usize << (k - m))
            .map(|t| (1 << (m + 1)) + t * (1 << m) - 1)
            .chain(std::iter::once(n))
            .collect();
        nv.sort_unstable();
        for (vertex, expected) in [(1, n1), (v, nv)] {
            report.checks += 1;
            let actual = g.neighbors(vertex)?;
            if actual != expected {
                return Ok(report.fail(Witness::NeighborSet { n, vertex, expected, actual }));
            }
        }
    }
    Ok(report)
}

/// With `s = diam G_{2^k}`: `diam G_{2^{k+m}} ≤ s + m` for `1 ≤ m ≤ m_max`.
pub fn verify_monotonicity(a: &ASequence, k: u32, m_max: u32) -> Result<VerificationReport> {
    require_io(a)?;
    let top = 1usize
        .checked_shl(k + m_max)
        .ok_or_else(|| Error::Usage("order overflows".into()))?;
    require_len(a, top)?;
    verify_monotonicity_with(&BellFamily::new(a.clone()), k, m_max)
}

pub fn verify_monotonicity_with(
    family: &dyn GraphFamily,
    k: u32,
    m_max: u32,
) -> Result<VerificationReport> {
    if k < 2 {
        return Err(Error::Usage(format!("need k >= 2, got {k}")));
    }
    let mut report = VerificationReport::new(Claim::Monotonicity)
        .param("aseq", family.describe())
        .param("k", k)
        .param("m_max", m_max);
    let big = family.graph(1 << (k + m_max))?;
    let base = match diameter_or_witness(&big.prefix(1 << k)) {
        Ok(d) => d,
        Err(w) => return Ok(report.fail(w)),
    };
    report = report.param("s", base);
    for m in 1..=m_max {
        report.checks += 1;
        let g = big.prefix(1 << (k + m));
        if let Err(w) = diameter_within(&g, base + m as usize) {
            return Ok(report.fail(w));
        }
    }
    Ok(report)
}

/// Leading-ones shape `(1^{2^m-2}, 0, 0, ...)` with `m ≥ 4`; returns `m`.
pub fn section3_shape(a: &ASequence) -> Option<u32> {
    let ones = (0..a.len()).take_while(|&i| a.get(i)).count();
    let m = (ones + 2).trailing_zeros();
    let shaped = (ones + 2).is_power_of_two()
        && m >= 4
        && ones + 2 <= a.len()
        && !a.get(ones)
        && !a.get(ones + 1)
        && is_io_pattern(a);
    shaped.then_some(m)
}

/// `diam G_{2^k} < k` under either of two hypotheses: the leading-ones
/// shape of [`section3_shape`] with `k ≥ m`, or an io sequence whose first
/// 16 entries are not all ones. Reports [`Verdict::HypothesisNotMet`] when
/// neither applies.
pub fn verify_section3(a: &ASequence, k: u32) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(Claim::Section3)
        .param("aseq", a.to_bit_string())
        .param("k", k);
    if k < 4 {
        return Ok(report.not_met("k < 4"));
    }
    if !is_io_pattern(a) {
        return Ok(report.not_met("A-sequence is not io-decomposable"));
    }
    let n = 1usize
        .checked_shl(k)
        .ok_or_else(|| Error::Usage("order overflows".into()))?;
    require_len(a, n)?;

    let shape = section3_shape(a);
    let shape_applies = shape.is_some_and(|m| k >= m);
    let first16 = a.pattern_completed();
    let not_all_ones_16 = (0..16).any(|i| i < first16.len() && !first16.get(i));
    // Entries beyond the known prefix are unknown, not ones.
    let prefix_known = first16.len() >= 16 || not_all_ones_16;
    let table_applies = prefix_known && not_all_ones_16;

    if let Some(m) = shape {
        report = report.param("shape_m", m);
    }
    if !shape_applies && !table_applies {
        let why = match shape {
            Some(m) => format!("leading-ones shape needs k >= m={m}; first 16 entries all ones"),
            None => "first 16 entries are all ones and no leading-ones shape".into(),
        };
        return Ok(report.not_met(why));
    }
    report = report.param(
        "hypothesis",
        match (shape_applies, table_applies) {
            (true, true) => "shape+first16",
            (true, false) => "shape",
            _ => "first16",
        },
    );
    report.checks += 1;
    let g = BellFamily::new(a.clone()).graph(n)?;
    if let Err(w) = diameter_within(&g, k as usize - 1) {
        return Ok(report.fail(w));
    }
    Ok(report)
}
