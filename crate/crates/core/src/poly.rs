//! Multivariate polynomials over a coefficient field.
//!
//! Rings fix a variable list (at most 64 names) and a monomial order; the
//! default order is graded reverse lexicographic. Polynomials are immutable
//! term lists kept strictly descending in the ring's order, with no zero
//! coefficients, so structural equality is semantic equality.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::coeff::{CoeffField, FieldElem};
use crate::error::{Error, Result};

/// Upper bound on the number of variables in a ring.
pub const MAX_VARS: usize = 64;

/// Monomial orders supported by [`PolyRing`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic order, the default.
    #[default]
    Grevlex,
    /// Pure lexicographic order.
    Lex,
    /// Graded lexicographic order.
    GrLex,
}

impl MonomialOrder {
    /// Compare exponent vectors under this order. Earlier variables are
    /// considered larger, matching the declaration order of the ring.
    pub fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        let lex = || a.cmp(b);
        let degree = |e: &[u32]| e.iter().map(|&x| x as u64).sum::<u64>();
        match self {
            MonomialOrder::Lex => lex(),
            MonomialOrder::GrLex => degree(a).cmp(&degree(b)).then_with(lex),
            MonomialOrder::Grevlex => degree(a).cmp(&degree(b)).then_with(|| {
                // Ties break on the rightmost differing exponent: the vector
                // with the smaller entry there is the larger monomial.
                for i in (0..a.len()).rev() {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => continue,
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MonomialOrder::Grevlex => "grevlex",
            MonomialOrder::Lex => "lex",
            MonomialOrder::GrLex => "glex",
        };
        write!(f, "{s}")
    }
}

/// A polynomial ring `k[x_1, ..., x_n]` with a fixed monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    field: CoeffField,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl PolyRing {
    /// Build a ring over `field` with the given variable names and order.
    /// Names must be nonempty, distinct, and at most [`MAX_VARS`] in number.
    pub fn new(field: CoeffField, vars: &[&str], order: MonomialOrder) -> Result<Arc<PolyRing>> {
        if vars.is_empty() {
            return Err(Error::InvalidVariables("no variables".into()));
        }
        if vars.len() > MAX_VARS {
            return Err(Error::TooManyVariables(vars.len(), MAX_VARS));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::InvalidVariables("empty variable name".into()));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidVariables(format!("duplicate variable {v}")));
            }
        }
        Ok(Arc::new(PolyRing {
            field,
            vars: vars.iter().map(|s| s.to_string()).collect(),
            order,
        }))
    }

    pub fn field(&self) -> CoeffField {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    /// Index of a variable by name, if declared.
    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Compare monomials under the ring's order.
    pub fn cmp_mono(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp_exps(&a.exps, &b.exps)
    }
}

/// An exponent vector. Monomials do not carry a ring; they are only
/// meaningful together with one, which fixes their length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    /// The monomial 1 in `n` variables.
    pub fn one(n: usize) -> Monomial {
        Monomial { exps: vec![0; n] }
    }

    /// The variable with index `i`.
    pub fn var(n: usize, i: usize) -> Monomial {
        assert!(i < n, "variable index {i} out of range for {n} variables");
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn from_exps(exps: Vec<u32>) -> Monomial {
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Total degree: the sum of the exponents.
    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Exact quotient `self / other`, when `other` divides `self`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial {
                exps: self
                    .exps
                    .iter()
                    .zip(&other.exps)
                    .map(|(a, b)| a - b)
                    .collect(),
            })
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| (*a).max(*b))
                .collect(),
        }
    }

    /// True when the monomials share no variable.
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Render with the ring's variable names: `x*y^2`, or `1` for the
    /// trivial monomial.
    pub fn render(&self, ring: &PolyRing) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(ring.vars[i].clone()),
                _ => parts.push(format!("{}^{}", ring.vars[i], e)),
            }
        }
        parts.join("*")
    }
}

/// A polynomial: a term list sorted strictly descending in the ring order.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, FieldElem)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Polynomial) -> bool {
        self.same_ring(other) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    /// The zero polynomial.
    pub fn zero(ring: &Arc<PolyRing>) -> Polynomial {
        Polynomial {
            ring: Arc::clone(ring),
            terms: Vec::new(),
        }
    }

    /// The constant polynomial 1.
    pub fn one(ring: &Arc<PolyRing>) -> Polynomial {
        Polynomial::constant(ring, ring.field().one())
    }

    /// A constant polynomial.
    pub fn constant(ring: &Arc<PolyRing>, c: FieldElem) -> Polynomial {
        assert_eq!(c.field(), ring.field(), "field mismatch in constant");
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring: Arc::clone(ring),
            terms: vec![(Monomial::one(ring.nvars()), c)],
        }
    }

    /// The variable with index `i` as a polynomial.
    pub fn variable(ring: &Arc<PolyRing>, i: usize) -> Polynomial {
        Polynomial {
            ring: Arc::clone(ring),
            terms: vec![(Monomial::var(ring.nvars(), i), ring.field().one())],
        }
    }

    /// A single term `c * m`.
    pub fn term(ring: &Arc<PolyRing>, m: Monomial, c: FieldElem) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        assert_eq!(m.exps().len(), ring.nvars(), "monomial arity mismatch");
        Polynomial {
            ring: Arc::clone(ring),
            terms: vec![(m, c)],
        }
    }

    /// Build from arbitrary terms: sorts, combines duplicates, drops zeros.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<(Monomial, FieldElem)>) -> Polynomial {
        terms.sort_by(|(a, _), (b, _)| ring.cmp_mono(b, a));
        let mut out: Vec<(Monomial, FieldElem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.exps().len(), ring.nvars());
            if let Some((last_m, last_c)) = out.last_mut() {
                if *last_m == m {
                    *last_c = last_c.add(&c);
                    if last_c.is_zero() {
                        out.pop();
                    }
                    continue;
                }
            }
            if !c.is_zero() {
                out.push((m, c));
            }
        }
        Polynomial {
            ring: Arc::clone(ring),
            terms: out,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, FieldElem)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// True for nonzero constants: exactly the units of the base ring.
    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    fn same_ring(&self, other: &Polynomial) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring
    }

    fn expect_same_ring(&self, other: &Polynomial) {
        assert!(self.same_ring(other), "ring mismatch in polynomial arithmetic");
    }

    /// Lead term under the ring order; errors on zero.
    pub fn lead_term(&self) -> Result<(&Monomial, &FieldElem)> {
        self.terms
            .first()
            .map(|(m, c)| (m, c))
            .ok_or(Error::ZeroPolynomial("lead term"))
    }

    pub fn lead_monomial(&self) -> Result<&Monomial> {
        Ok(self.lead_term()?.0)
    }

    pub fn lead_coeff(&self) -> Result<&FieldElem> {
        Ok(self.lead_term()?.1)
    }

    /// Maximum total degree of the terms; errors on zero.
    pub fn total_degree(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("total degree"));
        }
        Ok(self.terms.iter().map(|(m, _)| m.degree()).max().unwrap())
    }

    /// Sum by merging the two sorted term lists.
    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.expect_same_ring(other);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match self.ring.cmp_mono(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca.add(cb);
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().cloned());
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: out,
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    /// Product; collects all pairwise term products and normalizes.
    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.expect_same_ring(other);
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                terms.push((ma.mul(mb), ca.mul(cb)));
            }
        }
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Multiply by a field scalar.
    pub fn scale(&self, c: &FieldElem) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.mul(c)))
                .collect(),
        }
    }

    /// Multiply by a single term `c * m` without reallocating per term pair.
    pub fn mul_term(&self, m: &Monomial, c: &FieldElem) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), tc.mul(c)))
                .collect(),
        }
    }

    /// Scale so the lead coefficient is 1; errors on zero.
    pub fn monic(&self) -> Result<Polynomial> {
        let lc = self.lead_coeff()?.clone();
        Ok(self.scale(&lc.inv()?))
    }

    /// The constant term of the polynomial, zero if absent.
    pub fn constant_term(&self) -> FieldElem {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => self.ring.field().zero(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.display_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            if m.is_one() {
                write!(f, "{}", c.display_magnitude())?;
            } else if c.display_is_unit_coeff() {
                write!(f, "{}", m.render(&self.ring))?;
            } else {
                write!(f, "{}*{}", c.display_magnitude(), m.render(&self.ring))?;
            }
        }
        Ok(())
    }
}
