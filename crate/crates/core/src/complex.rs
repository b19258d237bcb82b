//! Chain complexes of free modules, pruning to minimal complexes, and
//! free resolutions over the base polynomial ring.
//!
//! Pruning removes a unit entry of a differential by a change of basis:
//! after row and column operations the unit's row and column die, and the
//! mirrored operations on the neighboring differentials keep all compositions
//! unchanged. Iterating until no differential has a unit entry yields a
//! complex isomorphic to the original whose differentials all map into the
//! maximal ideal, which is what makes rank counts meaningful.

use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::syz_base;
use crate::matrix::{Matrix, RingElem};
use crate::poly::Polynomial;

/// A bounded complex of free modules `F_0 <- F_1 <- ... <- F_n`, stored as
/// the list of differentials; `diffs[i]` is the map `F_{i+1} -> F_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainComplex<E: RingElem> {
    ring: E::Ring,
    rank0: usize,
    diffs: Vec<Matrix<E>>,
}

impl<E: RingElem> ChainComplex<E> {
    /// Build and validate a complex: shapes must chain, rings must agree,
    /// and consecutive differentials must compose to zero. Violations are
    /// construction bugs and panic.
    pub fn new(ring: E::Ring, rank0: usize, diffs: Vec<Matrix<E>>) -> ChainComplex<E> {
        if let Some(first) = diffs.first() {
            assert_eq!(first.nrows(), rank0, "first differential does not match rank");
        }
        for d in &diffs {
            assert!(*d.ring() == ring, "ring mismatch in differential");
        }
        for w in diffs.windows(2) {
            assert_eq!(w[0].ncols(), w[1].nrows(), "differential shapes do not chain");
            assert!(
                w[0].mul(&w[1]).is_zero(),
                "consecutive differentials do not compose to zero"
            );
        }
        ChainComplex { ring, rank0, diffs }
    }

    /// The complex consisting of a single free module and no differentials.
    pub fn free(ring: E::Ring, rank0: usize) -> ChainComplex<E> {
        ChainComplex {
            ring,
            rank0,
            diffs: Vec::new(),
        }
    }

    pub fn ring(&self) -> &E::Ring {
        &self.ring
    }

    pub fn rank0(&self) -> usize {
        self.rank0
    }

    /// Number of differentials.
    pub fn len(&self) -> usize {
        self.diffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diffs.is_empty()
    }

    /// The differential `F_i -> F_{i-1}`, 1-based.
    pub fn differential(&self, i: usize) -> &Matrix<E> {
        assert!(i >= 1 && i <= self.diffs.len(), "differential index out of range");
        &self.diffs[i - 1]
    }

    pub fn differentials(&self) -> &[Matrix<E>] {
        &self.diffs
    }

    /// Rank of the free module `F_d`.
    pub fn rank(&self, d: usize) -> usize {
        if d == 0 {
            self.rank0
        } else {
            self.diffs[d - 1].ncols()
        }
    }

    /// All ranks `F_0, F_1, ...` with trailing zero ranks trimmed.
    pub fn ranks(&self) -> Vec<usize> {
        let mut v = vec![self.rank0];
        v.extend(self.diffs.iter().map(|d| d.ncols()));
        while v.len() > 1 && *v.last().unwrap() == 0 {
            v.pop();
        }
        v
    }

    /// Apply a ring homomorphism to every entry. The image of a complex
    /// under a homomorphism is again a complex, so no revalidation happens.
    pub fn map<T, F>(&self, ring: T::Ring, f: F) -> ChainComplex<T>
    where
        T: RingElem,
        F: Fn(&E) -> T,
    {
        ChainComplex {
            ring: ring.clone(),
            rank0: self.rank0,
            diffs: self.diffs.iter().map(|d| d.map(ring.clone(), &f)).collect(),
        }
    }

    /// True when no differential entry is a unit.
    pub fn is_pruned(&self) -> bool {
        self.diffs
            .iter()
            .all(|d| (0..d.nrows()).all(|r| (0..d.ncols()).all(|c| !d.entry(r, c).is_unit())))
    }

    /// Prune every differential until no unit entries remain, returning the
    /// pruned complex together with the accumulated basis changes.
    pub fn prune(&self) -> (ChainComplex<E>, PruningMap<E>) {
        let mut diffs = self.diffs.clone();
        let mut ranks = vec![self.rank0];
        ranks.extend(diffs.iter().map(|d| d.ncols()));
        let mut map = PruningMap::identity(&self.ring, &ranks);
        let rank0 = prune_matrices(self.rank0, &mut diffs, 1, true, Some(&mut map));
        (
            ChainComplex {
                ring: self.ring.clone(),
                rank0,
                diffs,
            },
            map,
        )
    }

    /// Ranks of a pruned complex. For a minimal complex these are the Betti
    /// numbers of the resolved module; unpruned complexes are rejected.
    pub fn betti_ranks(&self) -> Result<Vec<usize>> {
        if !self.is_pruned() {
            return Err(Error::NotPruned);
        }
        Ok(self.ranks())
    }
}

impl<E: RingElem> fmt::Display for ChainComplex<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ranks: Vec<String> = self.ranks().iter().map(|r| r.to_string()).collect();
        write!(f, "{}", ranks.join(" <-- "))
    }
}

/// Basis-change bookkeeping for one free module of a pruned complex.
///
/// `fwd` expresses the working basis in original coordinates (one column per
/// basis vector), `inv` is its inverse, and the first `pruned` basis vectors
/// are the deleted ones: the surviving basis is the column suffix of `fwd`.
#[derive(Debug, Clone)]
pub struct DegreeMap<E: RingElem> {
    fwd: Matrix<E>,
    inv: Matrix<E>,
    pruned: usize,
}

impl<E: RingElem> DegreeMap<E> {
    pub fn fwd(&self) -> &Matrix<E> {
        &self.fwd
    }

    pub fn inv(&self) -> &Matrix<E> {
        &self.inv
    }

    pub fn pruned(&self) -> usize {
        self.pruned
    }

    pub fn original_rank(&self) -> usize {
        self.fwd.nrows()
    }

    /// The surviving basis vectors in original coordinates, one column per
    /// survivor.
    pub fn alive(&self) -> Matrix<E> {
        let cols: Vec<Vec<E>> = (self.pruned..self.fwd.ncols())
            .map(|j| self.fwd.column(j))
            .collect();
        Matrix::from_columns(self.fwd.ring().clone(), self.fwd.nrows(), cols)
    }
}

/// Basis changes accumulated while pruning, one [`DegreeMap`] per degree.
#[derive(Debug, Clone)]
pub struct PruningMap<E: RingElem> {
    degrees: Vec<DegreeMap<E>>,
}

impl<E: RingElem> PruningMap<E> {
    pub(crate) fn identity(ring: &E::Ring, ranks: &[usize]) -> PruningMap<E> {
        PruningMap {
            degrees: ranks
                .iter()
                .map(|&n| DegreeMap {
                    fwd: Matrix::identity(ring.clone(), n),
                    inv: Matrix::identity(ring.clone(), n),
                    pruned: 0,
                })
                .collect(),
        }
    }

    pub fn degree(&self, d: usize) -> &DegreeMap<E> {
        &self.degrees[d]
    }

    pub fn degrees(&self) -> &[DegreeMap<E>] {
        &self.degrees
    }

    /// Every forward matrix composed with its inverse gives the identity.
    pub fn is_consistent(&self) -> bool {
        self.degrees.iter().all(|d| d.fwd.mul(&d.inv).is_identity())
    }

    fn swap_basis(&mut self, d: usize, a: usize, b: usize) {
        let deg = &mut self.degrees[d];
        let (a, b) = (deg.pruned + a, deg.pruned + b);
        deg.fwd.swap_cols(a, b);
        deg.inv.swap_rows(a, b);
    }

    /// Mirror of `col[a] += s * col[b]` on the differential out of degree `d`.
    fn col_op(&mut self, d: usize, a: usize, b: usize, s: &E) {
        let deg = &mut self.degrees[d];
        let (a, b) = (deg.pruned + a, deg.pruned + b);
        deg.fwd.add_multiple_of_col(a, b, s);
        deg.inv.add_multiple_of_row(b, a, &s.neg());
    }

    /// Mirror of `row[a] += t * row[b]` on the differential into degree `d`.
    fn row_op(&mut self, d: usize, a: usize, b: usize, t: &E) {
        let deg = &mut self.degrees[d];
        let (a, b) = (deg.pruned + a, deg.pruned + b);
        deg.fwd.add_multiple_of_col(b, a, &t.neg());
        deg.inv.add_multiple_of_row(a, b, t);
    }

    fn mark_pruned(&mut self, d: usize) {
        self.degrees[d].pruned += 1;
    }
}

/// An entry eligible as a pruning pivot: the unit whose row and column carry
/// the fewest other nonzero entries, ties broken by position, so the
/// compensating operations stay as small as possible and runs deterministic.
fn find_suitable_unit<E: RingElem>(d: &Matrix<E>) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for r in 0..d.nrows() {
        for c in 0..d.ncols() {
            if !d.entry(r, c).is_unit() {
                continue;
            }
            let score = d.row_nonzero_count(r) + d.col_nonzero_count(c);
            if best.is_none_or(|(s, _, _)| score < s) {
                best = Some((score, r, c));
            }
        }
    }
    best.map(|(_, r, c)| (r, c))
}

/// Remove the unit at `(r, c)` of the degree-`i` differential (1-based) by a
/// change of basis, shrinking `F_{i-1}` and `F_i` by one.
///
/// With `check` set, the invariants that make the deletions lossless are
/// asserted: after the compensating operations, the mirrored column of the
/// previous differential and the mirrored row of the next one must vanish,
/// which follows from the compositions being zero. Pseudo-complexes used for
/// generator minimization pass `check = false` because their composition is
/// not zero and the deleted generator column is genuinely discarded.
fn prune_at<E: RingElem>(
    rank0: &mut usize,
    diffs: &mut [Matrix<E>],
    i: usize,
    r: usize,
    c: usize,
    check: bool,
    mut map: Option<&mut PruningMap<E>>,
) {
    let len = diffs.len();
    if r != 0 {
        diffs[i - 1].swap_rows(r, 0);
        if i >= 2 {
            diffs[i - 2].swap_cols(r, 0);
        }
        if let Some(m) = map.as_mut() {
            m.swap_basis(i - 1, r, 0);
        }
    }
    if c != 0 {
        diffs[i - 1].swap_cols(c, 0);
        if i < len {
            diffs[i].swap_rows(c, 0);
        }
        if let Some(m) = map.as_mut() {
            m.swap_basis(i, c, 0);
        }
    }
    let u = diffs[i - 1].entry(0, 0).clone();
    assert!(u.is_unit(), "pruning pivot must be a unit");
    for j in 1..diffs[i - 1].ncols() {
        let e = diffs[i - 1].entry(0, j).clone();
        if e.is_zero() {
            continue;
        }
        let s = e.div_by_unit(&u).neg();
        diffs[i - 1].add_multiple_of_col(j, 0, &s);
        if i < len {
            diffs[i].add_multiple_of_row(0, j, &s.neg());
        }
        if let Some(m) = map.as_mut() {
            m.col_op(i, j, 0, &s);
        }
    }
    for k in 1..diffs[i - 1].nrows() {
        let e = diffs[i - 1].entry(k, 0).clone();
        if e.is_zero() {
            continue;
        }
        let t = e.div_by_unit(&u).neg();
        diffs[i - 1].add_multiple_of_row(k, 0, &t);
        if i >= 2 {
            diffs[i - 2].add_multiple_of_col(0, k, &t.neg());
        }
        if let Some(m) = map.as_mut() {
            m.row_op(i - 1, k, 0, &t);
        }
    }
    if check {
        if i >= 2 {
            assert_eq!(
                diffs[i - 2].col_nonzero_count(0),
                0,
                "pruned basis vector still carries a differential"
            );
        }
        if i < len {
            assert_eq!(
                diffs[i].row_nonzero_count(0),
                0,
                "pruned basis vector still receives a differential"
            );
        }
    }
    diffs[i - 1].delete_row(0);
    diffs[i - 1].delete_col(0);
    if i >= 2 {
        diffs[i - 2].delete_col(0);
    } else {
        *rank0 -= 1;
    }
    if i < len {
        diffs[i].delete_row(0);
    }
    if let Some(m) = map.as_mut() {
        m.mark_pruned(i - 1);
        m.mark_pruned(i);
    }
}

/// Prune the differentials of degrees `from_degree..` in a single upward
/// sweep. Operations triggered at a degree only ever write into parts of the
/// earlier differentials that are deleted in the same step, so once a degree
/// is unit-free it stays unit-free; one sweep suffices.
///
/// Returns the possibly reduced rank of `F_0`.
pub(crate) fn prune_matrices<E: RingElem>(
    mut rank0: usize,
    diffs: &mut [Matrix<E>],
    from_degree: usize,
    check: bool,
    mut map: Option<&mut PruningMap<E>>,
) -> usize {
    for i in from_degree..=diffs.len() {
        while let Some((r, c)) = find_suitable_unit(&diffs[i - 1]) {
            prune_at(&mut rank0, diffs, i, r, c, check, map.as_deref_mut());
        }
    }
    rank0
}

/// Free resolution of the cokernel of `d1` over the base polynomial ring,
/// by iterated syzygies with pruning along the way.
///
/// Each new differential is pruned on arrival: syzygies of Gröbner bases
/// routinely present redundant generators, and discharging the resulting
/// unit entries immediately keeps the ranks from inflating. Exceeding
/// `nvars + 1` differentials is impossible for a complex kept minimal this
/// way and is reported as an error rather than looping.
pub fn resolve_base(d1: &Matrix<Polynomial>) -> Result<ChainComplex<Polynomial>> {
    let ring = d1.ring().clone();
    let bound = ring.nvars() + 1;
    let mut diffs = vec![d1.clone()];
    let mut rank0 = prune_matrices(d1.nrows(), &mut diffs, 1, true, None);
    loop {
        let last = diffs.last().expect("at least one differential");
        if last.ncols() == 0 {
            break;
        }
        let s = syz_base(last);
        if s.ncols() == 0 {
            break;
        }
        if diffs.len() == bound {
            return Err(Error::ResolutionGuard { bound });
        }
        diffs.push(s);
        let degree = diffs.len();
        rank0 = prune_matrices(rank0, &mut diffs, degree, true, None);
    }
    Ok(ChainComplex::new(ring, rank0, diffs))
}
