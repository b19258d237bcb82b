//! Gröbner bases for submodules of free modules over a polynomial ring,
//! and the syzygy computations built on them.
//!
//! Vectors in a free module carry a position-over-term order preferring
//! lower component indices. Appending auxiliary components therefore forms
//! an elimination block: in a Gröbner basis of vectors augmented with unit
//! coordinates, the elements supported entirely on the auxiliary block are
//! exactly the syzygies of the original columns.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::coeff::FieldElem;
use crate::matrix::Matrix;
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial};

/// A vector in a free module `R^r` over a polynomial ring.
///
/// Terms are `(component, monomial, coefficient)` triples kept strictly
/// descending: a term with a smaller component index is greater, and ties
/// within a component follow the ring's monomial order.
#[derive(Debug, Clone, PartialEq)]
pub struct ModVec {
    ring: Arc<PolyRing>,
    rank: usize,
    terms: Vec<(usize, Monomial, FieldElem)>,
}

fn cmp_keys(ring: &PolyRing, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
    b.0.cmp(&a.0).then_with(|| ring.cmp_mono(a.1, b.1))
}

impl ModVec {
    /// The zero vector of `R^rank`.
    pub fn zero(ring: &Arc<PolyRing>, rank: usize) -> ModVec {
        ModVec {
            ring: Arc::clone(ring),
            rank,
            terms: Vec::new(),
        }
    }

    /// The unit vector with 1 in component `c`.
    pub fn unit(ring: &Arc<PolyRing>, rank: usize, c: usize) -> ModVec {
        assert!(c < rank, "component {c} out of range for rank {rank}");
        ModVec {
            ring: Arc::clone(ring),
            rank,
            terms: vec![(c, Monomial::one(ring.nvars()), ring.field().one())],
        }
    }

    /// Build from a column of polynomials; the rank is the column length.
    pub fn from_column(ring: &Arc<PolyRing>, col: &[Polynomial]) -> ModVec {
        let mut terms = Vec::new();
        for (c, f) in col.iter().enumerate() {
            assert!(f.ring() == ring, "ring mismatch in module vector");
            for (m, k) in f.terms() {
                terms.push((c, m.clone(), k.clone()));
            }
        }
        ModVec {
            ring: Arc::clone(ring),
            rank: col.len(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The greatest term, if any.
    pub fn lead(&self) -> Option<(usize, &Monomial, &FieldElem)> {
        self.terms.first().map(|(c, m, k)| (*c, m, k))
    }

    /// True when every term lies in one component.
    pub fn is_single_component(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0 == w[1].0)
    }

    /// The polynomial sitting in component `c`.
    pub fn component_poly(&self, c: usize) -> Polynomial {
        assert!(c < self.rank, "component {c} out of range");
        let terms: Vec<(Monomial, FieldElem)> = self
            .terms
            .iter()
            .filter(|(tc, _, _)| *tc == c)
            .map(|(_, m, k)| (m.clone(), k.clone()))
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Expand into a full column of polynomials.
    pub fn to_column(&self) -> Vec<Polynomial> {
        (0..self.rank).map(|c| self.component_poly(c)).collect()
    }

    fn expect_compatible(&self, other: &ModVec) {
        assert!(
            self.ring == other.ring && self.rank == other.rank,
            "module vector mismatch in arithmetic"
        );
    }

    /// Sum by merging the two sorted term lists.
    pub fn add(&self, other: &ModVec) -> ModVec {
        self.expect_compatible(other);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ca, ma, ka) = &self.terms[i];
            let (cb, mb, kb) = &other.terms[j];
            match cmp_keys(&self.ring, (*ca, ma), (*cb, mb)) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let k = ka.add(kb);
                    if !k.is_zero() {
                        out.push((*ca, ma.clone(), k));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().cloned());
        ModVec {
            ring: Arc::clone(&self.ring),
            rank: self.rank,
            terms: out,
        }
    }

    pub fn sub(&self, other: &ModVec) -> ModVec {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ModVec {
        ModVec {
            ring: Arc::clone(&self.ring),
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(c, m, k)| (*c, m.clone(), k.neg()))
                .collect(),
        }
    }

    /// Multiply by the term `k * m`. Preserves the term order.
    pub fn mul_term(&self, m: &Monomial, k: &FieldElem) -> ModVec {
        if k.is_zero() {
            return ModVec::zero(&self.ring, self.rank);
        }
        ModVec {
            ring: Arc::clone(&self.ring),
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(c, tm, tk)| (*c, tm.mul(m), tk.mul(k)))
                .collect(),
        }
    }

    /// Multiply by a polynomial.
    pub fn mul_poly(&self, f: &Polynomial) -> ModVec {
        let mut acc = ModVec::zero(&self.ring, self.rank);
        for (m, k) in f.terms() {
            acc = acc.add(&self.mul_term(m, k));
        }
        acc
    }

    /// Scale so the lead coefficient is 1. Panics on the zero vector.
    pub fn monic(&self) -> ModVec {
        let lc = self.lead().expect("monic of the zero vector").2.clone();
        let inv = lc.inv().expect("lead coefficients are nonzero");
        ModVec {
            ring: Arc::clone(&self.ring),
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(c, m, k)| (*c, m.clone(), k.mul(&inv)))
                .collect(),
        }
    }

}

/// Total-order key for a term of a module vector: ascending key order is
/// ascending module order, so in a sorted map the last entry is the lead.
type TermKey = (usize, u64, Vec<u32>);

fn term_key(ring: &PolyRing, rank: usize, c: usize, m: &Monomial) -> TermKey {
    let (d, sel) = match ring.order() {
        MonomialOrder::Grevlex | MonomialOrder::GrLex => (m.degree(), selection_key(ring, m)),
        MonomialOrder::Lex => (0, m.exps().to_vec()),
    };
    (rank - c, d, sel)
}

/// Reduce `v` against `basis` using a lead-component index: `by_comp[c]`
/// lists, in basis order, the indices of elements whose lead lies in
/// component `c`, so candidate reducers in other components are never
/// visited. Every term of the result has no reducer whose lead divides it.
///
/// The remainder lives in an ordered map keyed by term, so one reduction
/// step costs the reducer's tail length in map operations rather than a
/// rebuild of the whole remainder.
fn reduce_indexed(v: &ModVec, basis: &[ModVec], by_comp: &[Vec<usize>]) -> ModVec {
    let ring = Arc::clone(&v.ring);
    let rank = v.rank;
    let mut rem: BTreeMap<TermKey, (usize, Monomial, FieldElem)> = BTreeMap::new();
    for (c, m, k) in &v.terms {
        rem.insert(term_key(&ring, rank, *c, m), (*c, m.clone(), k.clone()));
    }
    let mut out: Vec<(usize, Monomial, FieldElem)> = Vec::new();
    'terms: while let Some((_, (c, m, k))) = rem.pop_last() {
        for &gi in &by_comp[c] {
            let g = &basis[gi];
            let (_, gm, gk) = g.lead().expect("basis elements are nonzero");
            if let Some(q) = m.try_div(gm) {
                let s = k.div(gk).expect("lead coefficients are nonzero");
                // The lead of the subtracted multiple cancels the popped
                // term exactly; its tail only touches strictly smaller
                // terms, so the popped prefix is never revisited.
                for (tc, tm, tk) in g.terms.iter().skip(1) {
                    let mono = tm.mul(&q);
                    let coeff = tk.mul(&s);
                    match rem.entry(term_key(&ring, rank, *tc, &mono)) {
                        Entry::Occupied(mut slot) => {
                            let updated = slot.get().2.sub(&coeff);
                            if updated.is_zero() {
                                slot.remove();
                            } else {
                                slot.get_mut().2 = updated;
                            }
                        }
                        Entry::Vacant(slot) => {
                            slot.insert((*tc, mono, coeff.neg()));
                        }
                    }
                }
                continue 'terms;
            }
        }
        out.push((c, m, k));
    }
    ModVec {
        ring,
        rank,
        terms: out,
    }
}

fn lead_component_index(rank: usize, basis: &[ModVec]) -> Vec<Vec<usize>> {
    let mut by_comp = vec![Vec::new(); rank];
    for (i, g) in basis.iter().enumerate() {
        let (c, _, _) = g.lead().expect("basis elements are nonzero");
        by_comp[c].push(i);
    }
    by_comp
}

/// Fully reduce `v` against `basis`: every term of the result has no
/// reducer in `basis` whose lead divides it within the same component.
fn reduce_full(v: &ModVec, basis: &[ModVec]) -> ModVec {
    reduce_indexed(v, basis, &lead_component_index(v.rank, basis))
}

/// Sort key for pending S-pairs under the normal selection strategy:
/// ascending keys enumerate pairs by lcm degree first, then by the ring's
/// monomial order on the lcm, then by basis indices. The monomial is
/// re-encoded so that plain lexicographic comparison of the key agrees
/// with the ring order.
type PairKey = (u64, Vec<u32>, usize, usize);

fn selection_key(ring: &PolyRing, m: &Monomial) -> Vec<u32> {
    match ring.order() {
        // Within a fixed degree, grevlex ascends as the rightmost differing
        // exponent grows; complementing reversed exponents turns that into
        // an ascending lexicographic comparison.
        MonomialOrder::Grevlex => m.exps().iter().rev().map(|e| u32::MAX - e).collect(),
        MonomialOrder::Lex | MonomialOrder::GrLex => m.exps().to_vec(),
    }
}

fn pair_key(ring: &PolyRing, lcm: &Monomial, i: usize, j: usize) -> PairKey {
    (lcm.degree(), selection_key(ring, lcm), i, j)
}

/// Queue the S-pairs of `g` (about to be appended at `basis.len()`) against
/// the existing basis, maintaining the queue with the Gebauer-Moller rules.
/// Pairs exist only between leads in the same component.
///
/// Three prunings keep the queue small without changing the computed
/// module. Pending pairs whose lcm the new lead divides, properly on both
/// sides, reduce through the new element (chain criterion). Among the new
/// pairs, one whose lcm is properly divided by another's is redundant, and
/// pairs sharing an lcm collapse to a single representative. A class whose
/// members include a coprime pair of plain ring elements is dropped
/// entirely, by the product criterion; coprimality proves nothing when
/// either vector spreads over several components, so it is never used
/// there.
fn add_pairs(
    ring: &PolyRing,
    basis: &[ModVec],
    same_comp: &[usize],
    g: &ModVec,
    pairs: &mut BTreeSet<PairKey>,
) {
    let t = basis.len();
    let (gc, gm, _) = g.lead().expect("basis elements are nonzero");
    let lead = |i: usize| {
        let (c, m, _) = basis[i].lead().expect("basis elements are nonzero");
        (c, m)
    };
    let with_new: Vec<(usize, Monomial)> = same_comp
        .iter()
        .map(|&i| (i, lead(i).1.lcm(gm)))
        .collect();

    // Chain criterion: a pending pair reduces through the new element when
    // the new lead divides its lcm and neither side already shares it.
    let stale: Vec<PairKey> = pairs
        .iter()
        .filter(|(_, _, i, j)| {
            let (ic, im) = lead(*i);
            if ic != gc {
                return false;
            }
            let lij = im.lcm(lead(*j).1);
            if !gm.divides(&lij) {
                return false;
            }
            let lit = &with_new
                .iter()
                .find(|(k, _)| k == i)
                .expect("pending pairs only reference same-component elements")
                .1;
            let ljt = &with_new
                .iter()
                .find(|(k, _)| k == j)
                .expect("pending pairs only reference same-component elements")
                .1;
            *lit != lij && *ljt != lij
        })
        .cloned()
        .collect();
    for key in stale {
        pairs.remove(&key);
    }

    // Drop new pairs whose lcm another new lcm properly divides.
    let mut kept: Vec<(usize, &Monomial)> = Vec::new();
    for (i, li) in &with_new {
        let redundant = with_new
            .iter()
            .any(|(j, lj)| j != i && lj != li && lj.divides(li));
        if !redundant {
            kept.push((*i, li));
        }
    }

    // Collapse equal lcms to their first representative in selection order.
    kept.sort_by(|a, b| pair_key(ring, a.1, a.0, t).cmp(&pair_key(ring, b.1, b.0, t)));
    let mut idx = 0;
    while idx < kept.len() {
        let lcm = kept[idx].1;
        let class_end = kept[idx..]
            .iter()
            .position(|&(_, l)| l != lcm)
            .map_or(kept.len(), |off| idx + off);
        let product_rule = g.is_single_component()
            && kept[idx..class_end]
                .iter()
                .any(|&(i, _)| basis[i].is_single_component() && lead(i).1.coprime(gm));
        if !product_rule {
            pairs.insert(pair_key(ring, lcm, kept[idx].0, t));
        }
        idx = class_end;
    }
}

fn s_pair(f: &ModVec, g: &ModVec, lcm: &Monomial) -> ModVec {
    let one = f.ring().field().one();
    let qf = lcm
        .try_div(f.lead().expect("nonzero").1)
        .expect("lcm is divisible by both leads");
    let qg = lcm
        .try_div(g.lead().expect("nonzero").1)
        .expect("lcm is divisible by both leads");
    f.mul_term(&qf, &one).sub(&g.mul_term(&qg, &one))
}

/// Core of Buchberger's algorithm with the normal selection strategy: the
/// pending pair with the smallest lcm degree is processed first, ties
/// broken by the monomial order and then by basis indices, so runs are
/// deterministic.
///
/// With `harvest_from` set to `r`, components at and past `r` are treated
/// as passive bookkeeping: an element whose lead falls there is moved to
/// the second return value instead of the basis, so it never drives a
/// reduction and never forms a pair. Callers use this to collect relation
/// vectors riding in an auxiliary block while only the leading block is
/// brought to basis form.
fn buchberger_core(
    ring: &Arc<PolyRing>,
    rank: usize,
    input: &[ModVec],
    harvest_from: Option<usize>,
) -> (Vec<ModVec>, Vec<ModVec>) {
    let cutoff = harvest_from.unwrap_or(rank);
    let mut basis: Vec<ModVec> = Vec::new();
    let mut by_comp: Vec<Vec<usize>> = vec![Vec::new(); rank];
    let mut pairs: BTreeSet<PairKey> = BTreeSet::new();
    let mut harvested: Vec<ModVec> = Vec::new();
    let push = |g: ModVec,
                    basis: &mut Vec<ModVec>,
                    by_comp: &mut Vec<Vec<usize>>,
                    pairs: &mut BTreeSet<PairKey>,
                    harvested: &mut Vec<ModVec>| {
        let (c, _, _) = g.lead().expect("basis elements are nonzero");
        if c >= cutoff {
            harvested.push(g);
            return;
        }
        add_pairs(ring, basis, &by_comp[c], &g, pairs);
        by_comp[c].push(basis.len());
        basis.push(g);
    };
    for v in input {
        if v.is_zero() {
            continue;
        }
        push(v.monic(), &mut basis, &mut by_comp, &mut pairs, &mut harvested);
    }
    while let Some((_, _, i, j)) = pairs.pop_first() {
        let lcm = {
            let (_, im, _) = basis[i].lead().expect("nonzero");
            let (_, jm, _) = basis[j].lead().expect("nonzero");
            im.lcm(jm)
        };
        let s = s_pair(&basis[i], &basis[j], &lcm);
        let h = reduce_indexed(&s, &basis, &by_comp);
        if h.is_zero() {
            continue;
        }
        push(h.monic(), &mut basis, &mut by_comp, &mut pairs, &mut harvested);
    }
    (basis, harvested)
}

fn buchberger(ring: &Arc<PolyRing>, rank: usize, input: &[ModVec]) -> Vec<ModVec> {
    let (basis, _) = buchberger_core(ring, rank, input, None);
    reduce_basis(ring, basis)
}

/// Canonicalize a Gröbner basis: drop elements whose lead is divisible by
/// another's, reduce every tail against the rest, and sort descending by
/// lead term. The result is the unique reduced basis of the module.
fn reduce_basis(ring: &Arc<PolyRing>, mut basis: Vec<ModVec>) -> Vec<ModVec> {
    basis.sort_by(|a, b| {
        let (ac, am, _) = a.lead().expect("nonzero");
        let (bc, bm, _) = b.lead().expect("nonzero");
        cmp_keys(ring, (ac, am), (bc, bm))
    });
    let mut kept: Vec<ModVec> = Vec::new();
    'candidates: for g in basis {
        let (c, m, _) = g.lead().expect("nonzero");
        for k in &kept {
            let (kc, km, _) = k.lead().expect("nonzero");
            if kc == c && km.divides(m) {
                continue 'candidates;
            }
        }
        kept.push(g);
    }
    for i in 0..kept.len() {
        let g = kept[i].clone();
        let others: Vec<ModVec> = kept
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, v)| v.clone())
            .collect();
        kept[i] = reduce_full(&g, &others);
    }
    kept.sort_by(|a, b| {
        let (ac, am, _) = a.lead().expect("nonzero");
        let (bc, bm, _) = b.lead().expect("nonzero");
        cmp_keys(ring, (bc, bm), (ac, am))
    });
    kept
}

/// A reduced Gröbner basis of a submodule of `R^rank`.
///
/// The stored elements are monic, tail-reduced, and sorted descending by
/// lead term, so equal submodules produce structurally equal bases.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    rank: usize,
    elements: Vec<ModVec>,
}

impl GroebnerBasis {
    /// Basis of the submodule of `R^rank` generated by `gens`.
    pub fn of_module(ring: &Arc<PolyRing>, rank: usize, gens: &[ModVec]) -> GroebnerBasis {
        for v in gens {
            assert!(
                v.ring() == ring && v.rank() == rank,
                "generator does not live in the stated free module"
            );
        }
        GroebnerBasis {
            ring: Arc::clone(ring),
            rank,
            elements: buchberger(ring, rank, gens),
        }
    }

    /// Basis of the ideal generated by `gens`, as the rank-1 case.
    pub fn of_ideal(ring: &Arc<PolyRing>, gens: &[Polynomial]) -> GroebnerBasis {
        let vecs: Vec<ModVec> = gens
            .iter()
            .map(|f| ModVec::from_column(ring, std::slice::from_ref(f)))
            .collect();
        GroebnerBasis::of_module(ring, 1, &vecs)
    }

    /// Basis of the column span of a matrix.
    pub fn of_matrix_columns(m: &Matrix<Polynomial>) -> GroebnerBasis {
        let ring = m.ring().clone();
        let vecs: Vec<ModVec> = m.columns().map(|col| ModVec::from_column(&ring, &col)).collect();
        GroebnerBasis::of_module(&ring, m.nrows(), &vecs)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn elements(&self) -> &[ModVec] {
        &self.elements
    }

    /// The unique normal form of `v` modulo the submodule.
    pub fn normal_form(&self, v: &ModVec) -> ModVec {
        assert!(
            v.ring() == &self.ring && v.rank() == self.rank,
            "vector does not live in the basis's free module"
        );
        reduce_full(v, &self.elements)
    }

    /// Membership test: the normal form vanishes exactly on the submodule.
    pub fn contains(&self, v: &ModVec) -> bool {
        self.normal_form(v).is_zero()
    }

    /// Normal form of a polynomial modulo a rank-1 basis.
    pub fn normal_form_poly(&self, f: &Polynomial) -> Polynomial {
        assert_eq!(self.rank, 1, "polynomial normal form needs a rank-1 basis");
        self.normal_form(&ModVec::from_column(&self.ring, std::slice::from_ref(f)))
            .component_poly(0)
    }

    pub fn contains_poly(&self, f: &Polynomial) -> bool {
        self.normal_form_poly(f).is_zero()
    }

    /// True when a rank-1 basis generates the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        assert_eq!(self.rank, 1, "unit ideal test needs a rank-1 basis");
        self.elements
            .iter()
            .any(|g| g.lead().is_some_and(|(_, m, _)| m.is_one()))
    }
}

/// Each column `f_j` of `m`, augmented with a unit coordinate in an
/// auxiliary block below the original components, so linear algebra on the
/// columns records its own coefficients.
fn augmented_columns(m: &Matrix<Polynomial>) -> Vec<ModVec> {
    let ring = m.ring().clone();
    let n = m.ncols();
    (0..n)
        .map(|j| {
            let mut col = m.column(j);
            col.extend((0..n).map(|k| {
                if k == j {
                    Polynomial::one(&ring)
                } else {
                    Polynomial::zero(&ring)
                }
            }));
            ModVec::from_column(&ring, &col)
        })
        .collect()
}

fn auxiliary_block(ring: Arc<PolyRing>, r: usize, n: usize, vecs: &[ModVec]) -> Matrix<Polynomial> {
    let cols: Vec<Vec<Polynomial>> = vecs
        .iter()
        .map(|g| (0..n).map(|j| g.component_poly(r + j)).collect())
        .collect();
    Matrix::from_columns(ring, n, cols)
}

/// The canonical syzygy matrix of the columns of `m`: the columns of the
/// result `S` satisfy `m * S = 0` and span every such relation.
///
/// Because the module order prefers the original block, basis elements of
/// the augmented module supported entirely on the auxiliary block are
/// exactly the relations, read off as coordinates. Taking them from the
/// reduced basis makes the output canonical: equal column spans produce
/// equal syzygy matrices.
pub fn syz_base(m: &Matrix<Polynomial>) -> Matrix<Polynomial> {
    let ring = m.ring().clone();
    let r = m.nrows();
    let n = m.ncols();
    let gens = augmented_columns(m);
    let gb = buchberger(&ring, r + n, &gens);
    let relations: Vec<ModVec> = gb
        .iter()
        .filter(|g| g.lead().is_some_and(|(c, _, _)| c >= r))
        .cloned()
        .collect();
    auxiliary_block(ring, r, n, &relations)
}

/// Generators of the syzygy module of the columns of `m`, cheaper than
/// [`syz_base`] but not canonical: the columns still satisfy `m * S = 0`
/// and span every relation, but they may be redundant and are not reduced
/// against one another.
///
/// Here the auxiliary block rides along passively: only original-block
/// leads drive reductions and pairs, and every vector whose original block
/// cancels is harvested as a relation on the spot. Skipping basis work on
/// the auxiliary block avoids the large intermediate vectors a full
/// elimination produces, which is what makes iterated presentations (for
/// minimal generators, lengths, and Hilbert-Samuel values) affordable.
pub fn syz_gens_base(m: &Matrix<Polynomial>) -> Matrix<Polynomial> {
    let ring = m.ring().clone();
    let r = m.nrows();
    let n = m.ncols();
    let gens = augmented_columns(m);
    let (_, relations) = buchberger_core(&ring, r + n, &gens, Some(r));
    auxiliary_block(ring, r, n, &relations)
}

fn modulo_block(f: &Matrix<Polynomial>, s: &Matrix<Polynomial>) -> Matrix<Polynomial> {
    let top = s.take_rows(f.ncols());
    let cols: Vec<Vec<Polynomial>> = top
        .columns()
        .filter(|c| c.iter().any(|p| !p.is_zero()))
        .collect();
    Matrix::from_columns(f.ring().clone(), f.ncols(), cols)
}

/// Coefficient vectors `a` with `f * a` in the column span of `g`: the
/// columns of the result generate the preimage of `im g` under `f`.
///
/// Computed as the syzygies of `[f | g]` restricted to the `f` block, with
/// identically zero columns dropped.
pub fn modulo_base(f: &Matrix<Polynomial>, g: &Matrix<Polynomial>) -> Matrix<Polynomial> {
    modulo_block(f, &syz_base(&f.hconcat(g)))
}

/// Generating (not canonical) variant of [`modulo_base`], built on
/// [`syz_gens_base`]; same contract except that the columns may be
/// redundant.
pub fn modulo_gens_base(f: &Matrix<Polynomial>, g: &Matrix<Polynomial>) -> Matrix<Polynomial> {
    modulo_block(f, &syz_gens_base(&f.hconcat(g)))
}
