//! Coefficient fields: prime fields GF(p) and arbitrary-precision rationals.
//!
//! Every computation in the kernel is exact. Prime-field elements are stored
//! as canonical representatives in `[0, p)` with `p < 2^31`, so products fit
//! in a `u64` before reduction. Rationals are backed by arbitrary-precision
//! integers and kept in lowest terms with a positive denominator.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest admissible prime-field characteristic (exclusive bound).
pub const MAX_PRIME: u64 = 1 << 31;

/// Default characteristic used when none is specified.
pub const DEFAULT_PRIME: u32 = 32003;

/// A coefficient field: either GF(p) for a prime p, or the rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoeffField {
    /// Prime field with the given characteristic.
    Fp(u32),
    /// Field of rational numbers.
    Rational,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl CoeffField {
    /// The prime field GF(p). The modulus is checked for primality by trial
    /// division, which is cheap for the supported range.
    pub fn fp(p: u64) -> Result<CoeffField> {
        if p >= MAX_PRIME {
            return Err(Error::PrimeOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(CoeffField::Fp(p as u32))
    }

    /// The field of rational numbers.
    pub fn rational() -> CoeffField {
        CoeffField::Rational
    }

    /// Additive identity of this field.
    pub fn zero(&self) -> FieldElem {
        match *self {
            CoeffField::Fp(p) => FieldElem::Fp { p, val: 0 },
            CoeffField::Rational => FieldElem::Rat(BigRational::zero()),
        }
    }

    /// Multiplicative identity of this field.
    pub fn one(&self) -> FieldElem {
        match *self {
            CoeffField::Fp(p) => FieldElem::Fp { p, val: 1 },
            CoeffField::Rational => FieldElem::Rat(BigRational::one()),
        }
    }

    /// Image of a machine integer in this field.
    pub fn from_int(&self, n: i64) -> FieldElem {
        match *self {
            CoeffField::Fp(p) => {
                let p64 = p as i64;
                let mut r = n % p64;
                if r < 0 {
                    r += p64;
                }
                FieldElem::Fp { p, val: r as u32 }
            }
            CoeffField::Rational => FieldElem::Rat(BigRational::from_integer(BigInt::from(n))),
        }
    }
}

impl fmt::Display for CoeffField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffField::Fp(p) => write!(f, "ZZ/{p}"),
            CoeffField::Rational => write!(f, "QQ"),
        }
    }
}

/// An element of a coefficient field.
///
/// Elements carry their field so mismatched arithmetic can be detected; the
/// arithmetic methods panic on a field mismatch, which is always a caller bug.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElem {
    /// Element of GF(p), stored as the canonical representative in `[0, p)`.
    Fp { p: u32, val: u32 },
    /// Arbitrary-precision rational in lowest terms.
    Rat(BigRational),
}

/// Modular inverse by the extended Euclidean algorithm. `a` must be nonzero
/// modulo the prime `p`.
fn mod_inverse(a: u32, p: u32) -> u32 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, a as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "inverse of a nonzero residue modulo a prime");
    if t < 0 {
        t += p as i64;
    }
    t as u32
}

impl FieldElem {
    /// The field this element belongs to.
    pub fn field(&self) -> CoeffField {
        match self {
            FieldElem::Fp { p, .. } => CoeffField::Fp(*p),
            FieldElem::Rat(_) => CoeffField::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Fp { val, .. } => *val == 0,
            FieldElem::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Fp { val, .. } => *val == 1,
            FieldElem::Rat(r) => r.is_one(),
        }
    }

    fn expect_same_field(&self, other: &FieldElem) {
        assert_eq!(
            self.field(),
            other.field(),
            "field mismatch: {} vs {}",
            self.field(),
            other.field()
        );
    }

    /// Sum. Panics on a field mismatch.
    pub fn add(&self, other: &FieldElem) -> FieldElem {
        self.expect_same_field(other);
        match (self, other) {
            (FieldElem::Fp { p, val: a }, FieldElem::Fp { val: b, .. }) => {
                let s = (*a as u64 + *b as u64) % *p as u64;
                FieldElem::Fp { p: *p, val: s as u32 }
            }
            (FieldElem::Rat(a), FieldElem::Rat(b)) => FieldElem::Rat(a + b),
            _ => unreachable!(),
        }
    }

    /// Difference. Panics on a field mismatch.
    pub fn sub(&self, other: &FieldElem) -> FieldElem {
        self.add(&other.neg())
    }

    /// Product. Panics on a field mismatch.
    pub fn mul(&self, other: &FieldElem) -> FieldElem {
        self.expect_same_field(other);
        match (self, other) {
            (FieldElem::Fp { p, val: a }, FieldElem::Fp { val: b, .. }) => {
                let m = (*a as u64 * *b as u64) % *p as u64;
                FieldElem::Fp { p: *p, val: m as u32 }
            }
            (FieldElem::Rat(a), FieldElem::Rat(b)) => FieldElem::Rat(a * b),
            _ => unreachable!(),
        }
    }

    /// Additive inverse.
    pub fn neg(&self) -> FieldElem {
        match self {
            FieldElem::Fp { p, val } => {
                let v = if *val == 0 { 0 } else { p - val };
                FieldElem::Fp { p: *p, val: v }
            }
            FieldElem::Rat(r) => FieldElem::Rat(-r),
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<FieldElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            FieldElem::Fp { p, val } => FieldElem::Fp {
                p: *p,
                val: mod_inverse(*val, *p),
            },
            FieldElem::Rat(r) => FieldElem::Rat(r.recip()),
        })
    }

    /// Quotient; errors on a zero divisor. Panics on a field mismatch.
    pub fn div(&self, other: &FieldElem) -> Result<FieldElem> {
        Ok(self.mul(&other.inv()?))
    }

    /// True when the balanced representative of the element is negative; used
    /// by the text renderer so prime-field output reads `-x` rather than
    /// `32002*x`. Representatives in `(p/2, p)` display as negatives.
    pub fn display_negative(&self) -> bool {
        match self {
            FieldElem::Fp { p, val } => *val > p / 2,
            FieldElem::Rat(r) => r.is_negative(),
        }
    }

    /// Magnitude of the balanced representative as a display string, without
    /// a sign. For rationals this includes the denominator when it is not 1.
    pub fn display_magnitude(&self) -> String {
        match self {
            FieldElem::Fp { p, val } => {
                if *val > p / 2 {
                    format!("{}", p - val)
                } else {
                    format!("{val}")
                }
            }
            FieldElem::Rat(r) => {
                let a = r.abs();
                if a.denom().is_one() {
                    format!("{}", a.numer())
                } else {
                    format!("{}/{}", a.numer(), a.denom())
                }
            }
        }
    }

    /// True when the displayed magnitude is exactly 1, so the renderer can
    /// drop the coefficient in front of a monomial.
    pub fn display_is_unit_coeff(&self) -> bool {
        match self {
            FieldElem::Fp { p, val } => *val == 1 || *val == p - 1,
            FieldElem::Rat(r) => r.abs().is_one(),
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.display_negative() {
            write!(f, "-{}", self.display_magnitude())
        } else {
            write!(f, "{}", self.display_magnitude())
        }
    }
}
