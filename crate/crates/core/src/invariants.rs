//! Numerical invariants of modules over a local ring: length and the
//! Hilbert–Samuel function with respect to an ideal of definition.
//!
//! Length is computed through the filtration by powers of the maximal
//! ideal: each step counts minimal generators and passes to `m * M`. For
//! modules that are not Artinian the filtration never reaches zero, so the
//! loop carries an iteration cap and reports when it is exceeded instead
//! of diverging.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::localring::{Fraction, LocalRing};
use crate::modules::Subquotient;
use crate::poly::Polynomial;

/// Default iteration cap for length computations.
pub const DEFAULT_LENGTH_CAP: usize = 100;

/// An ideal contained in the maximal ideal of a local ring, given by
/// generators. Zero generators are dropped; unit generators are rejected,
/// since the unit ideal defines no filtration.
#[derive(Debug, Clone)]
pub struct ParameterIdeal {
    ring: Arc<LocalRing>,
    gens: Vec<Fraction>,
    numerator_gb: GroebnerBasis,
}

impl ParameterIdeal {
    pub fn new(ring: &Arc<LocalRing>, gens: &[Fraction]) -> Result<ParameterIdeal> {
        let mut kept = Vec::new();
        for g in gens {
            assert!(g.ring() == ring, "ideal generator over a different ring");
            if g.is_zero() {
                continue;
            }
            if g.is_unit() {
                return Err(Error::UnitGenerator);
            }
            kept.push(g.clone());
        }
        // Denominators are units, so the ideal is generated by the
        // numerators; their base-ring basis drives the maximality test.
        let nums: Vec<Polynomial> = kept.iter().map(|f| f.num().clone()).collect();
        let numerator_gb = GroebnerBasis::of_ideal(ring.base(), &nums);
        Ok(ParameterIdeal {
            ring: Arc::clone(ring),
            gens: kept,
            numerator_gb,
        })
    }

    /// The maximal ideal of the local ring.
    pub fn maximal(ring: &Arc<LocalRing>) -> ParameterIdeal {
        let gens: Vec<Fraction> = ring
            .prime_gens()
            .iter()
            .map(|p| Fraction::from_poly(ring, p))
            .collect();
        ParameterIdeal::new(ring, &gens).expect("generators of the prime are never units")
    }

    pub fn ring(&self) -> &Arc<LocalRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Fraction] {
        &self.gens
    }

    /// Whether this ideal is the whole maximal ideal.
    ///
    /// Tested by membership of each prime generator in the base-ring ideal
    /// of numerators. Equality after localization can hold without base-ring
    /// membership, so `false` may be conservative; callers use a positive
    /// answer for a fast path and otherwise fall back to the general one.
    pub fn is_maximal(&self) -> bool {
        self.ring
            .prime_gens()
            .iter()
            .all(|p| self.numerator_gb.contains_poly(p))
    }
}

/// The length of a module: the number of steps in a maximal chain of
/// submodules, here accumulated as the sum of `dim M_k / m M_k` down the
/// filtration `M_k = m^k M`. Stops with [`Error::PossiblyInfiniteLength`]
/// after `cap` iterations.
pub fn length_of(m: &Subquotient, cap: usize) -> Result<usize> {
    let ring = m.ring().clone();
    let maximal = ParameterIdeal::maximal(&ring);
    let mut current = m.clone();
    let mut total = 0usize;
    for _ in 0..cap {
        let g = current.mingens();
        if g.ncols() == 0 {
            return Ok(total);
        }
        total += g.ncols();
        let minimized = Subquotient::subquotient(&ring, g, current.rels().clone());
        current = minimized.multiply_by_ideal(maximal.gens());
    }
    Err(Error::PossiblyInfiniteLength { cap })
}

/// The Hilbert–Samuel function `n -> length(q^n M / q^(n+1) M)`.
///
/// When `q` is the maximal ideal the value is the number of minimal
/// generators of `q^n M`; otherwise the quotient is formed and its length
/// computed, with `cap` bounding that loop.
pub fn hilbert_samuel_function(
    q: &ParameterIdeal,
    m: &Subquotient,
    n: usize,
    cap: usize,
) -> Result<usize> {
    assert!(q.ring() == m.ring(), "ideal and module over different rings");
    let ring = m.ring().clone();
    let mut current = m.clone();
    for _ in 0..n {
        let g = current.mingens();
        let minimized = Subquotient::subquotient(&ring, g, current.rels().clone());
        current = minimized.multiply_by_ideal(q.gens());
    }
    if q.is_maximal() {
        return Ok(current.mingens().ncols());
    }
    length_of(&current.quotient_by_ideal(q.gens()), cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::CoeffField;
    use crate::matrix::Matrix;
    use crate::poly::{MonomialOrder, PolyRing};

    fn local_at_origin(vars: &[&str]) -> Arc<LocalRing> {
        let r = PolyRing::new(CoeffField::fp(32003).unwrap(), vars, MonomialOrder::Grevlex)
            .unwrap();
        let gens: Vec<Polynomial> =
            (0..vars.len()).map(|i| Polynomial::variable(&r, i)).collect();
        LocalRing::new(&r, &gens).unwrap()
    }

    fn pvar(rp: &Arc<LocalRing>, name: &str) -> Fraction {
        let base = rp.base();
        Fraction::from_poly(rp, &Polynomial::variable(base, base.var_index(name).unwrap()))
    }

    fn quotient_by(rp: &Arc<LocalRing>, gens: &[Fraction]) -> Subquotient {
        let rels = Matrix::from_columns(
            Arc::clone(rp),
            1,
            gens.iter().map(|g| vec![g.clone()]).collect(),
        );
        Subquotient::cokernel(rp, rels)
    }

    #[test]
    fn unit_generators_are_rejected() {
        let rp = local_at_origin(&["x", "y"]);
        let one_plus_x = Fraction::one(&rp).add(&pvar(&rp, "x"));
        assert_eq!(
            ParameterIdeal::new(&rp, &[one_plus_x]).unwrap_err(),
            Error::UnitGenerator
        );
    }

    #[test]
    fn zero_generators_are_dropped() {
        let rp = local_at_origin(&["x", "y"]);
        let q = ParameterIdeal::new(&rp, &[Fraction::zero(&rp), pvar(&rp, "x")]).unwrap();
        assert_eq!(q.gens().len(), 1);
    }

    #[test]
    fn the_maximal_ideal_knows_itself() {
        let rp = local_at_origin(&["x", "y"]);
        assert!(ParameterIdeal::maximal(&rp).is_maximal());
        let q = ParameterIdeal::new(&rp, &[pvar(&rp, "x")]).unwrap();
        assert!(!q.is_maximal());
    }

    #[test]
    fn a_rearranged_maximal_ideal_is_still_maximal() {
        let rp = local_at_origin(&["x", "y"]);
        let x = pvar(&rp, "x");
        let y = pvar(&rp, "y");
        let q = ParameterIdeal::new(&rp, &[x.add(&y), y]).unwrap();
        assert!(q.is_maximal());
    }

    #[test]
    fn length_of_the_residue_field_is_one() {
        let rp = local_at_origin(&["x", "y"]);
        let m = quotient_by(&rp, &[pvar(&rp, "x"), pvar(&rp, "y")]);
        assert_eq!(length_of(&m, DEFAULT_LENGTH_CAP).unwrap(), 1);
    }

    #[test]
    fn length_counts_standard_monomials() {
        // RP / (x^2, y) has basis {1, x}: length 2.
        let rp = local_at_origin(&["x", "y"]);
        let x = pvar(&rp, "x");
        let m = quotient_by(&rp, &[x.mul(&x), pvar(&rp, "y")]);
        assert_eq!(length_of(&m, DEFAULT_LENGTH_CAP).unwrap(), 2);
        // RP / (x^2, xy, y^3) has basis {1, x, y, y^2}: length 4.
        let y = pvar(&rp, "y");
        let m = quotient_by(&rp, &[x.mul(&x), x.mul(&y), y.mul(&y).mul(&y)]);
        assert_eq!(length_of(&m, DEFAULT_LENGTH_CAP).unwrap(), 4);
    }

    #[test]
    fn length_of_the_zero_module_is_zero() {
        let rp = local_at_origin(&["x", "y"]);
        let m = quotient_by(&rp, &[Fraction::one(&rp).add(&pvar(&rp, "x"))]);
        assert_eq!(length_of(&m, DEFAULT_LENGTH_CAP).unwrap(), 0);
    }

    #[test]
    fn unbounded_modules_hit_the_cap() {
        let rp = local_at_origin(&["x"]);
        let m = Subquotient::free_module(&rp, 1);
        assert_eq!(
            length_of(&m, 5).unwrap_err(),
            Error::PossiblyInfiniteLength { cap: 5 }
        );
    }

    #[test]
    fn hilbert_samuel_of_a_regular_ring_counts_forms() {
        // For RP = k[x,y] at (x,y), m^n needs n + 1 generators.
        let rp = local_at_origin(&["x", "y"]);
        let m = Subquotient::free_module(&rp, 1);
        let q = ParameterIdeal::maximal(&rp);
        let values: Vec<usize> = (0..4)
            .map(|n| hilbert_samuel_function(&q, &m, n, DEFAULT_LENGTH_CAP).unwrap())
            .collect();
        assert_eq!(values, vec![1, 2, 3, 4]);
    }

    #[test]
    fn hilbert_samuel_of_a_smaller_parameter_ideal() {
        // For q = (x^2, y^3) in k[x,y] at the origin, q^n/q^(n+1) has
        // length 6(n + 1): the quotient ring RP/q has length 6 and q is
        // generated by a regular sequence.
        let rp = local_at_origin(&["x", "y"]);
        let m = Subquotient::free_module(&rp, 1);
        let x = pvar(&rp, "x");
        let y = pvar(&rp, "y");
        let q = ParameterIdeal::new(&rp, &[x.mul(&x), y.mul(&y).mul(&y)]).unwrap();
        assert!(!q.is_maximal());
        let h0 = hilbert_samuel_function(&q, &m, 0, DEFAULT_LENGTH_CAP).unwrap();
        let h1 = hilbert_samuel_function(&q, &m, 1, DEFAULT_LENGTH_CAP).unwrap();
        assert_eq!((h0, h1), (6, 12));
    }
}
