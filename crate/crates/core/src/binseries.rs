//! Truncated formal power series over GF(2).
//!
//! A [`BinarySeries`] carries its coefficients densely together with an
//! explicit precision `N`: coefficients of degree `0..N` are known, nothing
//! beyond is. Binary operations produce the minimum of their input precisions,
//! so no result ever reports a coefficient that was not actually determined.

use std::fmt;
use std::str::FromStr;

use crate::bits::Bits;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinarySeries {
    coeffs: Bits,
}

/// Named series families accepted by [`BinarySeries::named`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesFamily {
    /// `C(z)`, the Catalan generating function.
    Catalan,
    /// `1/(1-z)`.
    Geometric,
    One,
    Z,
    /// Explicit coefficients, degree 0 first, zero-extended to the
    /// requested precision.
    Bits(Bits),
}

impl FromStr for SeriesFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "catalan" => Ok(SeriesFamily::Catalan),
            "geometric" => Ok(SeriesFamily::Geometric),
            "one" => Ok(SeriesFamily::One),
            "z" => Ok(SeriesFamily::Z),
            other => match parse_bit_literal(other) {
                Ok(bits) => Ok(SeriesFamily::Bits(bits)),
                Err(_) => Err(Error::Usage(format!("unknown series family `{other}`"))),
            },
        }
    }
}

/// Parses an ASCII `0`/`1` literal, index 0 first.
pub fn parse_bit_literal(s: &str) -> Result<Bits> {
    if s.is_empty() {
        return Err(Error::Usage("empty bit literal".into()));
    }
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(Error::Usage(format!(
                "invalid character `{other}` in bit literal `{s}`"
            ))),
        })
        .collect::<Result<Vec<_>>>()
        .map(Bits::from_bools)
}

impl BinarySeries {
    pub fn from_bits(coeffs: Bits) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Precision {
                needed: 1,
                available: 0,
            });
        }
        Ok(BinarySeries { coeffs })
    }

    /// Parses a bit-string literal; its length is the precision.
    pub fn parse(s: &str) -> Result<Self> {
        Self::from_bits(parse_bit_literal(s)?)
    }

    fn with_precision(precision: usize) -> Self {
        assert!(precision >= 1, "series precision must be at least 1");
        BinarySeries {
            coeffs: Bits::zeros(precision),
        }
    }

    pub fn zero(precision: usize) -> Self {
        Self::with_precision(precision)
    }

    pub fn one(precision: usize) -> Self {
        let mut s = Self::with_precision(precision);
        s.coeffs.set(0, true);
        s
    }

    pub fn z(precision: usize) -> Self {
        let mut s = Self::with_precision(precision);
        if precision > 1 {
            s.coeffs.set(1, true);
        }
        s
    }

    pub fn geometric(precision: usize) -> Self {
        assert!(precision >= 1, "series precision must be at least 1");
        BinarySeries {
            coeffs: Bits::ones(precision),
        }
    }

    /// Catalan generating function mod 2: `[z^n]C` is odd exactly when
    /// `n + 1` is a power of two.
    pub fn catalan(precision: usize) -> Self {
        assert!(precision >= 1, "series precision must be at least 1");
        BinarySeries {
            coeffs: Bits::from_bools((0..precision).map(|n| (n + 1).is_power_of_two())),
        }
    }

    pub fn named(family: &SeriesFamily, precision: usize) -> Result<Self> {
        if precision == 0 {
            return Err(Error::Precision {
                needed: 1,
                available: 0,
            });
        }
        Ok(match family {
            SeriesFamily::Catalan => Self::catalan(precision),
            SeriesFamily::Geometric => Self::geometric(precision),
            SeriesFamily::One => Self::one(precision),
            SeriesFamily::Z => Self::z(precision),
            SeriesFamily::Bits(b) => BinarySeries {
                coeffs: b.resized(precision),
            },
        })
    }

    #[inline]
    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn bits(&self) -> &Bits {
        &self.coeffs
    }

    /// `[z^k]` of the series.
    pub fn coeff(&self, k: usize) -> Result<bool> {
        if k >= self.precision() {
            return Err(Error::Precision {
                needed: k + 1,
                available: self.precision(),
            });
        }
        Ok(self.coeffs.get(k))
    }

    /// Unchecked coefficient read for callers that already validated `k`.
    #[inline]
    pub(crate) fn bit(&self, k: usize) -> bool {
        self.coeffs.get(k)
    }

    pub fn truncate(&self, precision: usize) -> Result<Self> {
        if precision == 0 || precision > self.precision() {
            return Err(Error::Precision {
                needed: precision.max(1),
                available: self.precision(),
            });
        }
        Ok(BinarySeries {
            coeffs: self.coeffs.resized(precision),
        })
    }

    /// True when the first `k` coefficients agree. Both series must know at
    /// least `k` coefficients.
    pub fn prefix_eq(&self, other: &Self, k: usize) -> bool {
        k <= self.precision()
            && k <= other.precision()
            && (0..k).all(|i| self.bit(i) == other.bit(i))
    }

    pub fn is_zero(&self) -> bool {
        !self.coeffs.any()
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.precision().min(other.precision());
        let mut coeffs = self.coeffs.resized(p);
        coeffs.xor_assign(&other.coeffs.resized(p));
        BinarySeries { coeffs }
    }

    /// Cauchy product mod 2.
    pub fn mul(&self, other: &Self) -> Self {
        let p = self.precision().min(other.precision());
        let rhs = other.coeffs.resized(p);
        let mut coeffs = Bits::zeros(p);
        for i in self.coeffs.iter_ones().take_while(|&i| i < p) {
            coeffs.xor_shl(&rhs, i);
        }
        BinarySeries { coeffs }
    }

    /// Multiplication by `z`; one more coefficient becomes known.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Bits::zeros(self.precision() + 1);
        coeffs.xor_shl(&self.coeffs.resized(self.precision() + 1), 1);
        BinarySeries { coeffs }
    }

    /// Division by `z`; requires a zero constant term and loses one
    /// coefficient of precision.
    pub fn div_z(&self) -> Result<Self> {
        if self.bit(0) {
            return Err(Error::NotInvertible("constant term must be 0 to divide by z"));
        }
        if self.precision() < 2 {
            return Err(Error::Precision {
                needed: 2,
                available: self.precision(),
            });
        }
        Ok(BinarySeries {
            coeffs: self.coeffs.slice(1, self.precision() - 1),
        })
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut result = Self::one(self.precision());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// `self(inner(z))`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if inner.bit(0) {
            return Err(Error::Composition);
        }
        let p = self.precision().min(inner.precision());
        Ok(self.compose_to(inner, p))
    }

    // Horner evaluation truncated to precision `p`; `inner(0) = 0` is assumed.
    fn compose_to(&self, inner: &Self, p: usize) -> Self {
        let inner = BinarySeries {
            coeffs: inner.coeffs.resized(p),
        };
        let mut acc = Self::zero(p);
        for k in (0..p).rev() {
            acc = acc.mul(&inner);
            if self.bit(k) {
                acc.coeffs.flip(0);
            }
        }
        acc
    }

    /// Compositional inverse `f̄` with `f(f̄(z)) = z`, solved one degree at a
    /// time.
    pub fn comp_inverse(&self) -> Result<Self> {
        if self.bit(0) {
            return Err(Error::NotInvertible("f(0) must be 0"));
        }
        if self.precision() < 2 || !self.bit(1) {
            return Err(Error::NotInvertible("[z^1]f must be 1"));
        }
        let p = self.precision();
        let mut h = Self::z(p);
        // Raising h_d flips exactly [z^d] f(h) and nothing below it, since
        // f'(0) = 1 and every other contribution has degree > d.
        for d in 2..p {
            let value = self.compose_to(&h, d + 1);
            if value.bit(d) {
                h.coeffs.flip(d);
            }
        }
        Ok(h)
    }

    /// Formal derivative mod 2; precision drops by one.
    pub fn derivative(&self) -> Result<Self> {
        let p = self.precision();
        if p < 2 {
            return Err(Error::Precision {
                needed: 2,
                available: p,
            });
        }
        let coeffs = Bits::from_bools((0..p - 1).map(|k| k % 2 == 0 && self.bit(k + 1)));
        Ok(BinarySeries { coeffs })
    }

    /// Multiplicative inverse; requires a unit constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        if !self.bit(0) {
            return Err(Error::NotInvertible("constant term must be 1"));
        }
        let p = self.precision();
        let mut inv = Bits::zeros(p);
        inv.set(0, true);
        for n in 1..p {
            let mut acc = false;
            for i in self.coeffs.iter_ones() {
                if i > n {
                    break;
                }
                if i >= 1 && inv.get(n - i) {
                    acc = !acc;
                }
            }
            inv.set(n, acc);
        }
        Ok(BinarySeries { coeffs: inv })
    }

    pub fn to_bit_string(&self) -> String {
        self.coeffs.to_bit_string()
    }
}

impl fmt::Debug for BinarySeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinarySeries({}; N={})", self.to_bit_string(), self.precision())
    }
}

impl fmt::Display for BinarySeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}
