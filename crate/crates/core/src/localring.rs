//! Localization of a polynomial ring at a prime ideal.
//!
//! Elements are fractions `num/den` with the denominator outside the prime.
//! Fractions are never reduced to lowest terms, which polynomial rings make
//! expensive; instead denominators are kept monic, the zero fraction is
//! pinned to `0/1`, and equality is decided by cross-multiplication. Units
//! are exactly the fractions whose numerator also lies outside the prime,
//! tested against a cached Gröbner basis of the prime.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::matrix::{Matrix, RingElem};
use crate::poly::{PolyRing, Polynomial};

/// A polynomial ring localized at a prime ideal.
///
/// The prime is given by generators; primality itself is not verified (it is
/// undecidable to check cheaply), but the unit ideal is rejected. Equality
/// compares the base ring and the reduced basis of the prime, so different
/// generating sets of the same prime give equal local rings.
#[derive(Debug)]
pub struct LocalRing {
    base: Arc<PolyRing>,
    prime: Vec<Polynomial>,
    prime_gb: GroebnerBasis,
}

impl PartialEq for LocalRing {
    fn eq(&self, other: &LocalRing) -> bool {
        self.base == other.base && self.prime_gb == other.prime_gb
    }
}

impl LocalRing {
    /// Localize `base` at the ideal generated by `prime_gens`. Zero
    /// generators are dropped; the unit ideal is rejected.
    pub fn new(base: &Arc<PolyRing>, prime_gens: &[Polynomial]) -> Result<Arc<LocalRing>> {
        for g in prime_gens {
            assert!(g.ring() == base, "prime generator from a different ring");
        }
        let prime: Vec<Polynomial> = prime_gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        let prime_gb = GroebnerBasis::of_ideal(base, &prime);
        if prime_gb.is_unit_ideal() {
            return Err(Error::UnitIdeal);
        }
        Ok(Arc::new(LocalRing {
            base: Arc::clone(base),
            prime,
            prime_gb,
        }))
    }

    pub fn base(&self) -> &Arc<PolyRing> {
        &self.base
    }

    /// The generators the prime was declared with (zeros dropped).
    pub fn prime_gens(&self) -> &[Polynomial] {
        &self.prime
    }

    pub fn prime_gb(&self) -> &GroebnerBasis {
        &self.prime_gb
    }

    /// Membership of a base-ring element in the prime.
    pub fn in_prime(&self, f: &Polynomial) -> bool {
        self.prime_gb.contains_poly(f)
    }

    /// True when `f/1` is a unit of the local ring: `f` outside the prime.
    pub fn is_unit_poly(&self, f: &Polynomial) -> bool {
        !self.in_prime(f)
    }
}

impl fmt::Display for LocalRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.prime.iter().map(|g| g.to_string()).collect();
        write!(
            f,
            "{}[{}] localized at ideal ({})",
            self.base.field(),
            self.base.var_names().join(","),
            gens.join(", ")
        )
    }
}

/// An element of a local ring: a fraction with denominator outside the
/// prime, denominator monic, and zero pinned to `0/1`.
#[derive(Debug, Clone)]
pub struct Fraction {
    ring: Arc<LocalRing>,
    num: Polynomial,
    den: Polynomial,
}

impl Fraction {
    /// Build `num/den`, normalizing. A zero denominator is division by
    /// zero; a denominator inside the prime is rejected.
    pub fn new(ring: &Arc<LocalRing>, num: Polynomial, den: Polynomial) -> Result<Fraction> {
        assert!(
            num.ring() == ring.base() && den.ring() == ring.base(),
            "fraction parts from a different ring"
        );
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if ring.in_prime(&den) {
            return Err(Error::DenominatorInPrime);
        }
        if num.is_zero() {
            return Ok(Fraction {
                ring: Arc::clone(ring),
                num,
                den: Polynomial::one(ring.base()),
            });
        }
        let lc = den.lead_coeff().expect("nonzero denominator").clone();
        let inv = lc.inv().expect("nonzero lead coefficient");
        Ok(Fraction {
            ring: Arc::clone(ring),
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    /// The image of a base-ring element, `f/1`.
    pub fn from_poly(ring: &Arc<LocalRing>, f: &Polynomial) -> Fraction {
        Fraction::new(ring, f.clone(), Polynomial::one(ring.base()))
            .expect("denominator 1 is valid")
    }

    pub fn zero(ring: &Arc<LocalRing>) -> Fraction {
        Fraction::from_poly(ring, &Polynomial::zero(ring.base()))
    }

    pub fn one(ring: &Arc<LocalRing>) -> Fraction {
        Fraction::from_poly(ring, &Polynomial::one(ring.base()))
    }

    pub fn ring(&self) -> &Arc<LocalRing> {
        &self.ring
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn expect_same_ring(&self, other: &Fraction) {
        assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring,
            "local ring mismatch in fraction arithmetic"
        );
    }

    /// Denominators multiply; the product stays outside the prime because
    /// the prime is prime. A failure here means the localization was taken
    /// at a non-prime ideal, which is a caller contract violation.
    fn rebuild(&self, num: Polynomial, den: Polynomial) -> Fraction {
        Fraction::new(&self.ring, num, den)
            .expect("localization requires a prime: denominator product left the complement")
    }

    pub fn add(&self, other: &Fraction) -> Fraction {
        self.expect_same_ring(other);
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        self.rebuild(num, den)
    }

    pub fn sub(&self, other: &Fraction) -> Fraction {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Fraction {
        Fraction {
            ring: Arc::clone(&self.ring),
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Fraction) -> Fraction {
        self.expect_same_ring(other);
        if self.is_zero() || other.is_zero() {
            return Fraction::zero(&self.ring);
        }
        self.rebuild(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    /// Units of the local ring are fractions whose numerator avoids the
    /// prime.
    pub fn is_unit(&self) -> bool {
        !self.ring.in_prime(&self.num)
    }

    /// Invert a unit; errors when the numerator lies in the prime.
    pub fn inv(&self) -> Result<Fraction> {
        if !self.is_unit() {
            return Err(Error::NotAUnit);
        }
        Fraction::new(&self.ring, self.den.clone(), self.num.clone())
    }
}

/// Equality by cross-multiplication: `a/b = c/d` iff `ad = cb` in the base
/// ring. Exact because the base ring is a domain and denominators avoid the
/// prime.
impl PartialEq for Fraction {
    fn eq(&self, other: &Fraction) -> bool {
        if !(Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring) {
            return false;
        }
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl RingElem for Fraction {
    type Ring = Arc<LocalRing>;

    fn ring(&self) -> &Arc<LocalRing> {
        Fraction::ring(self)
    }

    fn zero(ring: &Arc<LocalRing>) -> Fraction {
        Fraction::zero(ring)
    }

    fn one(ring: &Arc<LocalRing>) -> Fraction {
        Fraction::one(ring)
    }

    fn is_zero(&self) -> bool {
        Fraction::is_zero(self)
    }

    fn add(&self, rhs: &Fraction) -> Fraction {
        Fraction::add(self, rhs)
    }

    fn sub(&self, rhs: &Fraction) -> Fraction {
        Fraction::sub(self, rhs)
    }

    fn mul(&self, rhs: &Fraction) -> Fraction {
        Fraction::mul(self, rhs)
    }

    fn neg(&self) -> Fraction {
        Fraction::neg(self)
    }

    fn is_unit(&self) -> bool {
        Fraction::is_unit(self)
    }

    fn div_by_unit(&self, u: &Fraction) -> Fraction {
        self.mul(&u.inv().expect("division by a non-unit of the local ring"))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &Polynomial| {
            let s = p.to_string();
            if p.terms().len() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

/// Promote a base-ring matrix entrywise into the local ring.
pub fn promote_matrix(rp: &Arc<LocalRing>, m: &Matrix<Polynomial>) -> Matrix<Fraction> {
    assert!(m.ring() == rp.base(), "matrix over a different base ring");
    m.map(Arc::clone(rp), |f| Fraction::from_poly(rp, f))
}

/// Clear denominators columnwise: entry `i` of a column is multiplied by
/// the product of the column's other *distinct* denominators, so common
/// denominators are cleared only once. The result is a base-ring matrix
/// whose `j`-th column equals the original column scaled by the unit
/// returned at index `j`.
pub fn lift_up_with_units(m: &Matrix<Fraction>) -> (Matrix<Polynomial>, Vec<Fraction>) {
    let rp = m.ring().clone();
    let base = rp.base().clone();
    let mut cols: Vec<Vec<Polynomial>> = Vec::with_capacity(m.ncols());
    let mut units: Vec<Fraction> = Vec::with_capacity(m.ncols());
    for j in 0..m.ncols() {
        let col = m.column(j);
        let mut distinct: Vec<Polynomial> = Vec::new();
        for e in &col {
            if !distinct.contains(e.den()) {
                distinct.push(e.den().clone());
            }
        }
        let lifted: Vec<Polynomial> = col
            .iter()
            .map(|e| {
                distinct
                    .iter()
                    .filter(|d| *d != e.den())
                    .fold(e.num().clone(), |acc, d| acc.mul(d))
            })
            .collect();
        let multiplier = distinct
            .iter()
            .fold(Polynomial::one(&base), |acc, d| acc.mul(d));
        units.push(Fraction::from_poly(&rp, &multiplier));
        cols.push(lifted);
    }
    (Matrix::from_columns(base, m.nrows(), cols), units)
}

/// [`lift_up_with_units`] without the column multipliers.
pub fn lift_up(m: &Matrix<Fraction>) -> Matrix<Polynomial> {
    lift_up_with_units(m).0
}
