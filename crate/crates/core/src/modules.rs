//! Finitely generated modules over a local ring, represented as
//! subquotients of a free module, with minimal generators, minimal
//! presentations, and minimal free resolutions.
//!
//! A subquotient is `(im gens + im rels) / im rels` inside the cokernel of
//! `rels`. Syzygy-type computations over the local ring reduce to the base
//! ring: denominators are cleared columnwise, the base-ring result is
//! promoted back, and the rows are rescaled by the (unit) column
//! multipliers so the defining identities hold over the local ring exactly.

use std::fmt;
use std::sync::Arc;

use crate::complex::{ChainComplex, PruningMap};
use crate::error::Result;
use crate::groebner::{modulo_base, modulo_gens_base, syz_base, syz_gens_base};
use crate::localring::{lift_up, lift_up_with_units, promote_matrix, Fraction, LocalRing};
use crate::matrix::Matrix;

/// Promote a base-ring result whose rows answer for the columns of the
/// lifted matrix `m`: row `i` is rescaled by the unit multiplier that
/// cleared column `i`'s denominators, so the defining identity holds over
/// the local ring exactly.
fn promote_rescaled(
    rp: &Arc<LocalRing>,
    base: &Matrix<crate::poly::Polynomial>,
    units: &[Fraction],
) -> Matrix<Fraction> {
    let mut out = promote_matrix(rp, base);
    for (i, u) in units.iter().enumerate() {
        for j in 0..out.ncols() {
            let e = out.entry(i, j).mul(u);
            out.set_entry(i, j, e);
        }
    }
    out
}

/// The canonical syzygy matrix of the columns of a local-ring matrix: the
/// result `S` satisfies `m * S = 0` and its columns span all relations.
pub fn syz_local(m: &Matrix<Fraction>) -> Matrix<Fraction> {
    let rp = m.ring().clone();
    let (lifted, units) = lift_up_with_units(m);
    promote_rescaled(&rp, &syz_base(&lifted), &units)
}

/// Generators of the syzygy module of the columns, cheaper than
/// [`syz_local`] but possibly redundant and not canonical.
pub fn syz_gens_local(m: &Matrix<Fraction>) -> Matrix<Fraction> {
    let rp = m.ring().clone();
    let (lifted, units) = lift_up_with_units(m);
    promote_rescaled(&rp, &syz_gens_base(&lifted), &units)
}

/// Coefficient vectors `a` with `f * a` in the column span of `g`, over the
/// local ring.
pub fn modulo_local(f: &Matrix<Fraction>, g: &Matrix<Fraction>) -> Matrix<Fraction> {
    let rp = f.ring().clone();
    let (lf, units) = lift_up_with_units(f);
    let lg = lift_up(g);
    promote_rescaled(&rp, &modulo_base(&lf, &lg), &units)
}

/// Generating (not canonical) variant of [`modulo_local`]: same contract,
/// possibly redundant columns, much cheaper on iterated presentations.
pub fn modulo_gens_local(f: &Matrix<Fraction>, g: &Matrix<Fraction>) -> Matrix<Fraction> {
    let rp = f.ring().clone();
    let (lf, units) = lift_up_with_units(f);
    let lg = lift_up(g);
    promote_rescaled(&rp, &modulo_gens_base(&lf, &lg), &units)
}

/// Which rows of a relation matrix mark redundant generators: a column
/// echelon form of the relations over the residue field picks one
/// generator per independent relation direction, and those generators are
/// expressible through the rest by Nakayama's lemma.
///
/// Every value is reduced to normal form with respect to the prime's
/// Gröbner basis after each product, so entries stay inside the finite
/// set of standard monomials and never grow; denominators (units, hence
/// nonzero in the residue field) are cleared by cross-multiplication.
fn foldable_rows(rp: &Arc<LocalRing>, rels: &Matrix<Fraction>) -> Vec<bool> {
    let gb = rp.prime_gb();
    let n = rels.nrows();
    let mut folded = vec![false; n];
    let mut pivots: Vec<(usize, Vec<crate::poly::Polynomial>)> = Vec::new();
    for j in 0..rels.ncols() {
        let nums: Vec<_> =
            (0..n).map(|i| gb.normal_form_poly(rels.entry(i, j).num())).collect();
        let dens: Vec<_> =
            (0..n).map(|i| gb.normal_form_poly(rels.entry(i, j).den())).collect();
        let mut col: Vec<_> = nums
            .iter()
            .enumerate()
            .map(|(i, num)| {
                let mut acc = num.clone();
                for (i2, d) in dens.iter().enumerate() {
                    if i2 != i {
                        acc = gb.normal_form_poly(&acc.mul(d));
                    }
                }
                acc
            })
            .collect();
        for (r, pcol) in &pivots {
            let e = col[*r].clone();
            if e.is_zero() {
                continue;
            }
            let p = &pcol[*r];
            for (ci, pi) in col.iter_mut().zip(pcol) {
                *ci = gb.normal_form_poly(&ci.mul(p).sub(&pi.mul(&e)));
            }
        }
        if let Some(r) = col.iter().position(|v| !v.is_zero()) {
            folded[r] = true;
            pivots.push((r, col));
        }
    }
    folded
}

/// The shape of a subquotient presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleKind {
    /// Identity generators, no relations: the free module itself.
    Free,
    /// Arbitrary generators, no relations: a submodule of the free module.
    Image,
    /// Identity generators with relations: a quotient of the free module.
    Cokernel,
    /// Arbitrary generators and relations.
    Subquotient,
}

/// A finitely generated module over a local ring, as a subquotient
/// `(im gens + im rels) / im rels` of a free module.
#[derive(Debug, Clone)]
pub struct Subquotient {
    ring: Arc<LocalRing>,
    ambient: usize,
    gens: Matrix<Fraction>,
    rels: Matrix<Fraction>,
}

impl Subquotient {
    /// General constructor; generator and relation matrices share the
    /// ambient rank.
    #[allow(clippy::self_named_constructors)]
    pub fn subquotient(
        ring: &Arc<LocalRing>,
        gens: Matrix<Fraction>,
        rels: Matrix<Fraction>,
    ) -> Subquotient {
        assert!(
            gens.ring() == ring && rels.ring() == ring,
            "module matrices over a different ring"
        );
        assert_eq!(
            gens.nrows(),
            rels.nrows(),
            "generator and relation matrices have different ambient ranks"
        );
        Subquotient {
            ring: Arc::clone(ring),
            ambient: gens.nrows(),
            gens,
            rels,
        }
    }

    /// The free module of the given rank.
    pub fn free_module(ring: &Arc<LocalRing>, rank: usize) -> Subquotient {
        let gens = Matrix::identity(Arc::clone(ring), rank);
        let rels = Matrix::zero(Arc::clone(ring), rank, 0);
        Subquotient::subquotient(ring, gens, rels)
    }

    /// The submodule of a free module spanned by the columns of `gens`.
    pub fn image(ring: &Arc<LocalRing>, gens: Matrix<Fraction>) -> Subquotient {
        let rels = Matrix::zero(Arc::clone(ring), gens.nrows(), 0);
        Subquotient::subquotient(ring, gens, rels)
    }

    /// The quotient of a free module by the column span of `rels`.
    pub fn cokernel(ring: &Arc<LocalRing>, rels: Matrix<Fraction>) -> Subquotient {
        let gens = Matrix::identity(Arc::clone(ring), rels.nrows());
        Subquotient::subquotient(ring, gens, rels)
    }

    pub fn ring(&self) -> &Arc<LocalRing> {
        &self.ring
    }

    /// Rank of the ambient free module.
    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn gens(&self) -> &Matrix<Fraction> {
        &self.gens
    }

    pub fn rels(&self) -> &Matrix<Fraction> {
        &self.rels
    }

    pub fn kind(&self) -> ModuleKind {
        match (self.gens.is_identity(), self.rels.ncols() == 0) {
            (true, true) => ModuleKind::Free,
            (false, true) => ModuleKind::Image,
            (true, false) => ModuleKind::Cokernel,
            (false, false) => ModuleKind::Subquotient,
        }
    }

    /// A presentation of the module as the cokernel of the result: relations
    /// among the stated generators, in generator coordinates. The free cover
    /// has rank `gens().ncols()`. The columns generate all relations but
    /// are not canonical and may be redundant; redundancy is harmless to
    /// the minimization routines built on top, which prune it away.
    pub fn presentation(&self) -> Matrix<Fraction> {
        match self.kind() {
            ModuleKind::Free => Matrix::zero(Arc::clone(&self.ring), self.gens.ncols(), 0),
            ModuleKind::Image => syz_gens_local(&self.gens),
            ModuleKind::Cokernel => self.rels.clone(),
            ModuleKind::Subquotient => modulo_gens_local(&self.gens, &self.rels),
        }
    }

    /// A minimal generating matrix, in ambient coordinates. The result is
    /// a subset of the stated generator columns.
    ///
    /// By Nakayama's lemma a subset of the generators is minimal and
    /// generating exactly when its images form a basis of `M / PM` over
    /// the residue field, so the relations are reduced modulo the prime
    /// and brought to column echelon form there; each pivot row marks a
    /// generator expressible through the others, and the rest survive.
    pub fn mingens(&self) -> Matrix<Fraction> {
        if self.kind() == ModuleKind::Free {
            return self.gens.clone();
        }
        let folded = foldable_rows(&self.ring, &self.presentation());
        let mut gens = self.gens.clone();
        for (i, f) in folded.iter().enumerate().rev() {
            if *f {
                gens.delete_col(i);
            }
        }
        gens
    }

    /// The minimal presentation: an isomorphic cokernel module whose
    /// presentation matrix has no unit entries and minimally many columns,
    /// together with the basis changes that got there.
    pub fn minimal_presentation(&self) -> (Subquotient, PruningMap<Fraction>) {
        let p1 = self.presentation();
        let p2 = syz_gens_local(&p1);
        let complex = ChainComplex::new(Arc::clone(&self.ring), p1.nrows(), vec![p1, p2]);
        let (pruned, map) = complex.prune();
        let presentation = pruned.differential(1).clone();
        (Subquotient::cokernel(&self.ring, presentation), map)
    }

    /// The minimal free resolution of the module over the local ring.
    ///
    /// The presentation is lifted to the base ring by clearing denominators
    /// (an isomorphism of cokernels, since the column multipliers are
    /// units), resolved there, carried back, and pruned to minimality.
    pub fn resolution(&self) -> Result<ChainComplex<Fraction>> {
        let p1 = self.presentation();
        let lifted = lift_up(&p1);
        let base_res = crate::complex::resolve_base(&lifted)?;
        let promoted = base_res.map(Arc::clone(&self.ring), |f| Fraction::from_poly(&self.ring, f));
        let (pruned, _) = promoted.prune();
        Ok(pruned)
    }

    fn scaled_generator_columns(&self, q: &[Fraction]) -> Vec<Vec<Fraction>> {
        let mut cols: Vec<Vec<Fraction>> = Vec::new();
        for qi in q {
            for j in 0..self.gens.ncols() {
                let col: Vec<Fraction> =
                    (0..self.ambient).map(|i| self.gens.entry(i, j).mul(qi)).collect();
                if col.iter().all(Fraction::is_zero) {
                    continue;
                }
                if cols.contains(&col) {
                    continue;
                }
                cols.push(col);
            }
        }
        cols
    }

    /// The submodule `q * M`, presented with the same relations. Duplicate
    /// and zero product generators are dropped.
    pub fn multiply_by_ideal(&self, q: &[Fraction]) -> Subquotient {
        let cols = self.scaled_generator_columns(q);
        let gens = Matrix::from_columns(Arc::clone(&self.ring), self.ambient, cols);
        Subquotient::subquotient(&self.ring, gens, self.rels.clone())
    }

    /// The quotient `M / (q * M)`: the products join the relations.
    pub fn quotient_by_ideal(&self, q: &[Fraction]) -> Subquotient {
        let cols = self.scaled_generator_columns(q);
        let prods = Matrix::from_columns(Arc::clone(&self.ring), self.ambient, cols);
        let rels = prods.hconcat(&self.rels);
        Subquotient::subquotient(&self.ring, self.gens.clone(), rels)
    }
}

impl fmt::Display for Subquotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            ModuleKind::Free => write!(f, "free module of rank {}", self.ambient),
            ModuleKind::Image => write!(
                f,
                "submodule of a rank-{} free module ({} generators)",
                self.ambient,
                self.gens.ncols()
            ),
            ModuleKind::Cokernel => write!(
                f,
                "quotient of a rank-{} free module ({} relations)",
                self.ambient,
                self.rels.ncols()
            ),
            ModuleKind::Subquotient => write!(
                f,
                "subquotient of a rank-{} free module ({} generators, {} relations)",
                self.ambient,
                self.gens.ncols(),
                self.rels.ncols()
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::CoeffField;
    use crate::localring::LocalRing;
    use crate::poly::{MonomialOrder, PolyRing, Polynomial};

    fn local_xy() -> Arc<LocalRing> {
        let r = PolyRing::new(
            CoeffField::fp(32003).unwrap(),
            &["x", "y"],
            MonomialOrder::Grevlex,
        )
        .unwrap();
        let x = Polynomial::variable(&r, 0);
        let y = Polynomial::variable(&r, 1);
        LocalRing::new(&r, &[x, y]).unwrap()
    }

    fn local_xy_in_xyz() -> Arc<LocalRing> {
        let r = PolyRing::new(
            CoeffField::fp(32003).unwrap(),
            &["x", "y", "z"],
            MonomialOrder::Grevlex,
        )
        .unwrap();
        let x = Polynomial::variable(&r, 0);
        let y = Polynomial::variable(&r, 1);
        LocalRing::new(&r, &[x, y]).unwrap()
    }

    fn pvar(rp: &Arc<LocalRing>, name: &str) -> Fraction {
        let base = rp.base();
        Fraction::from_poly(rp, &Polynomial::variable(base, base.var_index(name).unwrap()))
    }

    #[test]
    fn kinds_classify_presentations() {
        let rp = local_xy();
        assert_eq!(Subquotient::free_module(&rp, 2).kind(), ModuleKind::Free);
        let x_col = Matrix::new(Arc::clone(&rp), 1, 1, vec![pvar(&rp, "x")]);
        assert_eq!(Subquotient::image(&rp, x_col.clone()).kind(), ModuleKind::Image);
        assert_eq!(Subquotient::cokernel(&rp, x_col.clone()).kind(), ModuleKind::Cokernel);
        let m = Subquotient::subquotient(&rp, x_col.clone(), x_col);
        assert_eq!(m.kind(), ModuleKind::Subquotient);
    }

    #[test]
    fn mingens_folds_a_redundant_generator() {
        // The ideal (x, x + x^2) is principal: x + x^2 = x(1 + x) and 1 + x
        // is a unit, so either generator alone suffices.
        let rp = local_xy();
        let x = pvar(&rp, "x");
        let x_plus_x2 = x.add(&x.mul(&x));
        let gens = Matrix::new(Arc::clone(&rp), 1, 2, vec![x.clone(), x_plus_x2]);
        let m = Subquotient::image(&rp, gens);
        let g = m.mingens();
        assert_eq!((g.nrows(), g.ncols()), (1, 1));
        // The survivor generates the same ideal: it is x up to a unit.
        let survivor = g.entry(0, 0).clone();
        assert!(!survivor.is_zero());
        let one_plus_x = Fraction::one(&rp).add(&x);
        assert!(survivor == x || survivor == x.mul(&one_plus_x));
    }

    #[test]
    fn mingens_of_cokernel_uses_unit_relations() {
        // In RP^2 / (x e0 + e1), the second basis vector equals -x times the
        // first, so one generator survives.
        let rp = local_xy();
        let rels = Matrix::new(
            Arc::clone(&rp),
            2,
            1,
            vec![pvar(&rp, "x"), Fraction::one(&rp)],
        );
        let m = Subquotient::cokernel(&rp, rels);
        let g = m.mingens();
        assert_eq!((g.nrows(), g.ncols()), (2, 1));
        assert_eq!(g.entry(0, 0), &Fraction::one(&rp));
        assert!(g.entry(1, 0).is_zero());
    }

    #[test]
    fn presentation_of_an_image_is_its_syzygies() {
        let rp = local_xy();
        let gens = Matrix::new(Arc::clone(&rp), 1, 2, vec![pvar(&rp, "x"), pvar(&rp, "y")]);
        let m = Subquotient::image(&rp, gens.clone());
        let p = m.presentation();
        assert_eq!((p.nrows(), p.ncols()), (2, 1));
        assert!(gens.mul(&p).is_zero());
        assert_eq!(p.entry(0, 0), &pvar(&rp, "y"));
        assert_eq!(p.entry(1, 0), &pvar(&rp, "x").neg());
    }

    #[test]
    fn syzygies_rescale_for_denominators() {
        // For [x/(z+1), y] the syzygy of the cleared column (x, y) must be
        // rescaled so the identity holds against the original fractions.
        let rp = local_xy_in_xyz();
        let base = rp.base().clone();
        let z_plus_1 = Polynomial::variable(&base, 2).add(&Polynomial::one(&base));
        let x_over = Fraction::new(&rp, Polynomial::variable(&base, 0), z_plus_1.clone()).unwrap();
        let m = Matrix::new(Arc::clone(&rp), 1, 2, vec![x_over, pvar(&rp, "y")]);
        let s = syz_local(&m);
        assert_eq!((s.nrows(), s.ncols()), (2, 1));
        assert!(m.mul(&s).is_zero());
        let y_scaled = pvar(&rp, "y").mul(&Fraction::from_poly(&rp, &z_plus_1));
        assert_eq!(s.entry(0, 0), &y_scaled);
        assert_eq!(s.entry(1, 0), &pvar(&rp, "x").neg());
    }

    #[test]
    fn minimal_presentation_of_the_zero_module_is_empty() {
        // RP / (x, 1 + x) = 0 because 1 + x is a unit.
        let rp = local_xy();
        let one_plus_x = Fraction::one(&rp).add(&pvar(&rp, "x"));
        let rels = Matrix::new(Arc::clone(&rp), 1, 2, vec![pvar(&rp, "x"), one_plus_x]);
        let m = Subquotient::cokernel(&rp, rels);
        let (n, map) = m.minimal_presentation();
        assert_eq!(n.ambient_rank(), 0);
        assert_eq!(n.mingens().ncols(), 0);
        assert!(map.is_consistent());
    }

    #[test]
    fn minimal_presentation_keeps_a_minimal_module_unchanged() {
        let rp = local_xy();
        let rels = Matrix::new(Arc::clone(&rp), 1, 2, vec![pvar(&rp, "x"), pvar(&rp, "y")]);
        let m = Subquotient::cokernel(&rp, rels.clone());
        let (n, map) = m.minimal_presentation();
        assert_eq!(n.ambient_rank(), 1);
        assert_eq!(n.rels(), &rels);
        assert!(map.is_consistent());
    }

    #[test]
    fn resolution_of_a_free_module_is_trivial() {
        let rp = local_xy();
        let m = Subquotient::free_module(&rp, 3);
        let res = m.resolution().unwrap();
        assert_eq!(res.ranks(), vec![3]);
    }

    #[test]
    fn resolution_of_the_residue_field() {
        // RP / (x, y) resolves as 1 <-- 2 <-- 1 via the Koszul complex.
        let rp = local_xy();
        let rels = Matrix::new(Arc::clone(&rp), 1, 2, vec![pvar(&rp, "x"), pvar(&rp, "y")]);
        let m = Subquotient::cokernel(&rp, rels);
        let res = m.resolution().unwrap();
        assert_eq!(res.ranks(), vec![1, 2, 1]);
        assert!(res.is_pruned());
        assert_eq!(res.to_string(), "1 <-- 2 <-- 1");
    }

    #[test]
    fn ideal_multiplication_dedupes_products() {
        // (x, y) * (image of [x y]) has products x^2, xy, xy, y^2: the
        // duplicate is dropped.
        let rp = local_xy();
        let gens = Matrix::new(Arc::clone(&rp), 1, 2, vec![pvar(&rp, "x"), pvar(&rp, "y")]);
        let m = Subquotient::image(&rp, gens);
        let q = vec![pvar(&rp, "x"), pvar(&rp, "y")];
        let prod = m.multiply_by_ideal(&q);
        assert_eq!(prod.gens().ncols(), 3);
    }

    #[test]
    fn quotient_by_ideal_adds_relations() {
        let rp = local_xy();
        let m = Subquotient::free_module(&rp, 1);
        let q = vec![pvar(&rp, "x"), pvar(&rp, "y")];
        let quo = m.quotient_by_ideal(&q);
        assert_eq!(quo.kind(), ModuleKind::Cokernel);
        assert_eq!(quo.rels().ncols(), 2);
        assert_eq!(quo.mingens().ncols(), 1);
    }
}
