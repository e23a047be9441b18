//! Riordan matrices mod 2 and binary A-sequences.
//!
//! Triangle indices are 0-based here: entry `(i, j)` of the matrix `(g, f)`
//! is `[z^i] g f^j`. The graph layer works with 1-based vertices and does
//! the conversion itself.

use std::fmt;

use crate::binseries::{parse_bit_literal, BinarySeries};
use crate::bits::Bits;
use crate::error::{Error, Result};

/// A pair `(g, f)` with `f(0) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RiordanPair {
    g: BinarySeries,
    f: BinarySeries,
}

impl RiordanPair {
    pub fn new(g: BinarySeries, f: BinarySeries) -> Result<Self> {
        if f.bit(0) {
            return Err(Error::Domain("a Riordan pair needs f(0) = 0".into()));
        }
        Ok(RiordanPair { g, f })
    }

    /// Bell type pair `(g, zg)`.
    pub fn bell(g: BinarySeries) -> Self {
        let f = g.shift_up();
        RiordanPair { g, f }
    }

    /// `(C, zC)`; both series know at least `precision` coefficients.
    pub fn catalan(precision: usize) -> Self {
        Self::bell(BinarySeries::catalan(precision))
    }

    /// `(1/(1-z), z/(1-z))`.
    pub fn pascal(precision: usize) -> Self {
        Self::bell(BinarySeries::geometric(precision))
    }

    pub fn g(&self) -> &BinarySeries {
        &self.g
    }

    pub fn f(&self) -> &BinarySeries {
        &self.f
    }

    /// Number of coefficients known for both series.
    pub fn precision(&self) -> usize {
        self.g.precision().min(self.f.precision())
    }

    /// `[z^0]g = [z^1]f = 1`.
    pub fn is_proper(&self) -> bool {
        self.g.bit(0) && self.f.precision() > 1 && self.f.bit(1)
    }
}

/// Leading principal submatrix of a binary Riordan matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryTriangle {
    rows: Vec<Bits>,
}

impl BinaryTriangle {
    fn from_rows(rows: Vec<Bits>) -> Self {
        BinaryTriangle { rows }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// Entry `(i, j)`; zero above the diagonal.
    pub fn get(&self, i: usize, j: usize) -> bool {
        j <= i && self.rows[i].get(j)
    }

    pub fn row(&self, i: usize) -> &Bits {
        &self.rows[i]
    }

    /// Column `j` read top to bottom as bits (rows `0..order`).
    pub fn column(&self, j: usize) -> Bits {
        Bits::from_bools((0..self.order()).map(|i| self.get(i, j)))
    }
}

impl fmt::Debug for BinaryTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryTriangle(order {})", self.order())?;
        for (i, row) in self.rows.iter().enumerate() {
            writeln!(f, "  {}", &row.to_bit_string()[..=i])?;
        }
        Ok(())
    }
}

/// Binary A-sequence prefix `(1, a_1, a_2, ...)`. The length counts `a_0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ASequence {
    bits: Bits,
}

impl ASequence {
    pub fn new(bits: Bits) -> Result<Self> {
        if bits.is_empty() || !bits.get(0) {
            return Err(Error::Domain("a binary A-sequence starts with a_0 = 1".into()));
        }
        Ok(ASequence { bits })
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::new(parse_bit_literal(s)?)
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(iter: I) -> Result<Self> {
        Self::new(Bits::from_bools(iter))
    }

    /// `(1, 0, 0, ...)`: the identity matrix, path graphs.
    pub fn identity(len: usize) -> Self {
        Self::ones_then_zeros(1, len)
    }

    /// `(1, 1, 1, ...)`: the Catalan A-sequence `1/(1-z)`.
    pub fn catalan(len: usize) -> Self {
        Self::ones_then_zeros(len, len)
    }

    /// `(1, 1, 0, 0, ...)`: the Pascal A-sequence `1 + z`.
    pub fn pascal(len: usize) -> Self {
        Self::ones_then_zeros(2, len)
    }

    /// `ones` leading ones followed by zeros, `len` entries in total.
    pub fn ones_then_zeros(ones: usize, len: usize) -> Self {
        assert!(len >= 1 && ones >= 1, "A-sequence needs a_0 = 1");
        ASequence {
            bits: Bits::from_bools((0..len).map(|i| i < ones)),
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits.get(i)
    }

    pub fn bits(&self) -> &Bits {
        &self.bits
    }

    /// Zero-extends (or truncates) to `len` entries. A finite literal read as
    /// the polynomial `A(z)` has all further coefficients equal to zero.
    pub fn resized(&self, len: usize) -> Self {
        assert!(len >= 1);
        ASequence {
            bits: self.bits.resized(len),
        }
    }

    /// First `len` entries, or a length error.
    pub fn prefix(&self, len: usize) -> Result<Self> {
        if len > self.len() {
            return Err(Error::Length {
                needed: len,
                got: self.len(),
            });
        }
        Ok(self.resized(len.max(1)))
    }

    /// Appends the partner of a trailing unpaired even-indexed entry so the
    /// io pattern `a_{2j+1} = a_{2j}` fixes it.
    pub fn pattern_completed(&self) -> Self {
        if self.len() % 2 == 1 {
            let last = self.get(self.len() - 1);
            ASequence {
                bits: Bits::from_bools(self.bits.iter().chain(std::iter::once(last))),
            }
        } else {
            self.clone()
        }
    }

    /// `A(z)` as a series of precision `len()`.
    pub fn series(&self) -> BinarySeries {
        BinarySeries::from_bits(self.bits.clone()).expect("non-empty A-sequence")
    }

    pub fn is_all_ones(&self) -> bool {
        self.bits.count_ones() == self.len()
    }

    pub fn to_bit_string(&self) -> String {
        self.bits.to_bit_string()
    }
}

impl fmt::Debug for ASequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ASequence({})", self.to_bit_string())
    }
}

impl fmt::Display for ASequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

fn require_precision(s: &BinarySeries, needed: usize) -> Result<()> {
    if s.precision() < needed {
        return Err(Error::Precision {
            needed,
            available: s.precision(),
        });
    }
    Ok(())
}

/// `(g, f)_n` mod 2: entry `(i, j) = [z^i] g f^j`.
pub fn riordan_matrix(p: &RiordanPair, n: usize) -> Result<BinaryTriangle> {
    if n == 0 {
        return Ok(BinaryTriangle::from_rows(Vec::new()));
    }
    require_precision(&p.g, n)?;
    require_precision(&p.f, n)?;
    let f = p.f.truncate(n)?;
    let mut column = p.g.truncate(n)?;
    let mut rows = vec![Bits::zeros(n); n];
    for j in 0..n {
        for i in column.bits().iter_ones() {
            if i >= j {
                rows[i].set(j, true);
            }
        }
        column = column.mul(&f);
    }
    Ok(BinaryTriangle::from_rows(rows))
}

/// First `len` terms of the binary A-sequence, from `A = z / f̄`.
pub fn a_sequence(p: &RiordanPair, len: usize) -> Result<ASequence> {
    if !p.is_proper() {
        return Err(Error::NotInvertible("the pair is not proper"));
    }
    if len == 0 {
        return Err(Error::Usage("A-sequence length must be at least 1".into()));
    }
    require_precision(&p.f, len + 1)?;
    let f_bar = p.f.truncate(len + 1)?.comp_inverse()?;
    let a = f_bar.div_z()?.reciprocal()?;
    ASequence::new(a.bits().clone())
}

/// Bell matrix `B(g, zg)` of order `n` generated from its A-sequence.
///
/// Row `i+1` is `b_{i+1,j} = sum_k a_k b_{i,j-1+k}`, which is the Bell
/// recurrence with both of its lines folded together (`b_{i,-1} = 0`). Row
/// `n-1` reads `a_{n-1}`, so `a` needs `n` entries.
pub fn bell_matrix_from_aseq(a: &ASequence, n: usize) -> Result<BinaryTriangle> {
    if a.len() < n {
        return Err(Error::Length {
            needed: n,
            got: a.len(),
        });
    }
    if n == 0 {
        return Ok(BinaryTriangle::from_rows(Vec::new()));
    }
    let taps: Vec<usize> = a.bits().iter_ones().take_while(|&k| k < n).collect();
    let mut rows = Vec::with_capacity(n);
    let mut row = Bits::zeros(n);
    row.set(0, true);
    rows.push(row);
    for i in 0..n - 1 {
        let mut next = Bits::zeros(n);
        for &k in &taps {
            next.xor_shifted(&rows[i], 1 - k as isize);
        }
        // Entries above the diagonal of row i+1 only ever receive zeros from
        // row i, so nothing needs masking.
        rows.push(next);
    }
    Ok(BinaryTriangle::from_rows(rows))
}

/// `g` of the Bell pair with A-sequence `a`, to the given precision.
pub fn g_from_aseq(a: &ASequence, precision: usize) -> Result<BinarySeries> {
    if precision == 0 {
        return Err(Error::Precision {
            needed: 1,
            available: 0,
        });
    }
    let t = bell_matrix_from_aseq(a, precision)?;
    BinarySeries::from_bits(t.column(0))
}

/// The io-decomposable shape `(1, 1, a_2, a_2, a_4, a_4, ...)`. A trailing
/// unpaired even-indexed entry is unconstrained.
pub fn is_io_pattern(a: &ASequence) -> bool {
    if a.len() < 2 || !a.get(0) || !a.get(1) {
        return false;
    }
    (1..a.len() / 2).all(|j| a.get(2 * j) == a.get(2 * j + 1))
}

/// `C(n, m) mod p` by Lucas's theorem.
pub fn binom_mod_p(n: u64, m: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::Usage(format!("{p} is not prime")));
    }
    if m > n {
        return Ok(0);
    }
    let (mut n, mut m) = (n, m);
    let mut acc = 1u64;
    while m > 0 {
        let (nd, md) = (n % p, m % p);
        if md > nd {
            return Ok(0);
        }
        acc = mul_mod(acc, small_binom_mod(nd, md, p), p);
        n /= p;
        m /= p;
    }
    Ok(acc)
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

// 0 <= m <= n < p, so no factor of the product vanishes mod p.
fn small_binom_mod(n: u64, m: u64, p: u64) -> u64 {
    let m = m.min(n - m);
    let (mut num, mut den) = (1u64, 1u64);
    for i in 0..m {
        num = mul_mod(num, n - i, p);
        den = mul_mod(den, i + 1, p);
    }
    mul_mod(num, pow_mod(den, p - 2, p), p)
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Parity of the n-th Catalan number.
pub fn catalan_bit(n: u64) -> bool {
    (n + 1).is_power_of_two()
}
