//! Dense matrices over a commutative ring, with the elementary row and
//! column operations used by complex pruning.
//!
//! Matrices are generic over [`RingElem`], implemented by base-ring
//! polynomials and by local-ring fractions. The unit test of an entry is
//! ring-dispatched through the trait: nonzero constants over the base ring,
//! fractions with numerator outside the prime over a localization. Mutation
//! requires `&mut` access, so shared matrices are immutable by construction.

use std::fmt;
use std::sync::Arc;

use crate::coeff::FieldElem;
use crate::poly::{PolyRing, Polynomial};

/// An element of a commutative ring suitable for matrix arithmetic and
/// pruning: exact arithmetic, a unit predicate, and division by units.
///
/// Arithmetic requires both operands to come from the same ring; violations
/// panic. Matrix constructors validate entries once so internal operations
/// never mix rings.
pub trait RingElem: Clone + PartialEq + fmt::Debug + fmt::Display {
    /// Description of the ring the element lives in.
    type Ring: Clone + PartialEq + fmt::Debug;

    fn ring(&self) -> &Self::Ring;
    fn zero(ring: &Self::Ring) -> Self;
    fn one(ring: &Self::Ring) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    /// True when the element is invertible in its ring.
    fn is_unit(&self) -> bool;

    /// Multiply by the inverse of `u`. Panics when `u` is not a unit.
    fn div_by_unit(&self, u: &Self) -> Self;
}

impl RingElem for Polynomial {
    type Ring = Arc<PolyRing>;

    fn ring(&self) -> &Arc<PolyRing> {
        Polynomial::ring(self)
    }

    fn zero(ring: &Arc<PolyRing>) -> Polynomial {
        Polynomial::zero(ring)
    }

    fn one(ring: &Arc<PolyRing>) -> Polynomial {
        Polynomial::one(ring)
    }

    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }

    fn add(&self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }

    fn sub(&self, rhs: &Polynomial) -> Polynomial {
        Polynomial::sub(self, rhs)
    }

    fn mul(&self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }

    fn neg(&self) -> Polynomial {
        Polynomial::neg(self)
    }

    /// Units of a polynomial ring over a field are the nonzero constants.
    fn is_unit(&self) -> bool {
        self.is_constant()
    }

    fn div_by_unit(&self, u: &Polynomial) -> Polynomial {
        assert!(u.is_constant(), "division by a non-unit polynomial");
        let c: &FieldElem = u.lead_coeff().expect("nonzero constant");
        self.scale(&c.inv().expect("nonzero constant"))
    }
}

/// A dense matrix over a ring, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<E: RingElem> {
    ring: E::Ring,
    nrows: usize,
    ncols: usize,
    entries: Vec<E>,
}

impl<E: RingElem> Matrix<E> {
    /// Build from row-major entries; validates the count and that every
    /// entry belongs to `ring`.
    pub fn new(ring: E::Ring, nrows: usize, ncols: usize, entries: Vec<E>) -> Matrix<E> {
        assert_eq!(entries.len(), nrows * ncols, "entry count mismatch");
        for e in &entries {
            assert!(*e.ring() == ring, "ring mismatch in matrix entry");
        }
        Matrix {
            ring,
            nrows,
            ncols,
            entries,
        }
    }

    /// The zero matrix of the given shape.
    pub fn zero(ring: E::Ring, nrows: usize, ncols: usize) -> Matrix<E> {
        let entries = vec![E::zero(&ring); nrows * ncols];
        Matrix {
            ring,
            nrows,
            ncols,
            entries,
        }
    }

    /// The identity matrix of size `n`.
    pub fn identity(ring: E::Ring, n: usize) -> Matrix<E> {
        let mut m = Matrix::zero(ring, n, n);
        for i in 0..n {
            let one = E::one(&m.ring);
            m.entries[i * n + i] = one;
        }
        m
    }

    /// Build from a list of columns, all of length `nrows`.
    pub fn from_columns(ring: E::Ring, nrows: usize, cols: Vec<Vec<E>>) -> Matrix<E> {
        let ncols = cols.len();
        let mut m = Matrix::zero(ring, nrows, ncols);
        for (j, col) in cols.into_iter().enumerate() {
            assert_eq!(col.len(), nrows, "column length mismatch");
            for (i, e) in col.into_iter().enumerate() {
                assert!(*e.ring() == m.ring, "ring mismatch in matrix entry");
                m.entries[i * ncols + j] = e;
            }
        }
        m
    }

    pub fn ring(&self) -> &E::Ring {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn entry(&self, i: usize, j: usize) -> &E {
        assert!(i < self.nrows && j < self.ncols, "index out of range");
        &self.entries[i * self.ncols + j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, e: E) {
        assert!(i < self.nrows && j < self.ncols, "index out of range");
        assert!(*e.ring() == self.ring, "ring mismatch in matrix entry");
        self.entries[i * self.ncols + j] = e;
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.nrows).map(|i| self.entry(i, j).clone()).collect()
    }

    pub fn columns(&self) -> impl Iterator<Item = Vec<E>> + '_ {
        (0..self.ncols).map(|j| self.column(j))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.nrows == self.ncols
            && (0..self.nrows).all(|i| {
                (0..self.ncols).all(|j| {
                    let e = self.entry(i, j);
                    if i == j {
                        *e == E::one(&self.ring)
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    /// Matrix product. Panics on shape or ring mismatch.
    pub fn mul(&self, rhs: &Matrix<E>) -> Matrix<E> {
        assert!(self.ring == rhs.ring, "ring mismatch in matrix product");
        assert_eq!(self.ncols, rhs.nrows, "shape mismatch in matrix product");
        let mut out = Matrix::zero(self.ring.clone(), self.nrows, rhs.ncols);
        for i in 0..self.nrows {
            for j in 0..rhs.ncols {
                let mut acc = E::zero(&self.ring);
                for k in 0..self.ncols {
                    let a = self.entry(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(rhs.entry(k, j)));
                }
                out.entries[i * out.ncols + j] = acc;
            }
        }
        out
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hconcat(&self, rhs: &Matrix<E>) -> Matrix<E> {
        assert!(self.ring == rhs.ring, "ring mismatch in concatenation");
        assert_eq!(self.nrows, rhs.nrows, "row count mismatch in concatenation");
        let ncols = self.ncols + rhs.ncols;
        let mut out = Matrix::zero(self.ring.clone(), self.nrows, ncols);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                out.entries[i * ncols + j] = self.entry(i, j).clone();
            }
            for j in 0..rhs.ncols {
                out.entries[i * ncols + self.ncols + j] = rhs.entry(i, j).clone();
            }
        }
        out
    }

    /// The submatrix of the first `k` rows.
    pub fn take_rows(&self, k: usize) -> Matrix<E> {
        assert!(k <= self.nrows, "row range out of bounds");
        Matrix {
            ring: self.ring.clone(),
            nrows: k,
            ncols: self.ncols,
            entries: self.entries[..k * self.ncols].to_vec(),
        }
    }

    /// Apply `f` to every entry, producing a matrix over a possibly
    /// different ring.
    pub fn map<F, T>(&self, ring: T::Ring, f: F) -> Matrix<T>
    where
        T: RingElem,
        F: Fn(&E) -> T,
    {
        let entries: Vec<T> = self.entries.iter().map(&f).collect();
        Matrix::new(ring, self.nrows, self.ncols, entries)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        assert!(a < self.nrows && b < self.nrows, "index out of range");
        if a == b {
            return;
        }
        for j in 0..self.ncols {
            self.entries.swap(a * self.ncols + j, b * self.ncols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        assert!(a < self.ncols && b < self.ncols, "index out of range");
        if a == b {
            return;
        }
        for i in 0..self.nrows {
            self.entries.swap(i * self.ncols + a, i * self.ncols + b);
        }
    }

    /// `row[target] += s * row[source]`.
    pub fn add_multiple_of_row(&mut self, target: usize, source: usize, s: &E) {
        assert!(target < self.nrows && source < self.nrows, "index out of range");
        assert!(target != source, "row operation targets its own source");
        for j in 0..self.ncols {
            let add = self.entry(source, j).mul(s);
            if add.is_zero() {
                continue;
            }
            let e = self.entry(target, j).add(&add);
            self.entries[target * self.ncols + j] = e;
        }
    }

    /// `col[target] += s * col[source]`.
    pub fn add_multiple_of_col(&mut self, target: usize, source: usize, s: &E) {
        assert!(target < self.ncols && source < self.ncols, "index out of range");
        assert!(target != source, "column operation targets its own source");
        for i in 0..self.nrows {
            let add = self.entry(i, source).mul(s);
            if add.is_zero() {
                continue;
            }
            let e = self.entry(i, target).add(&add);
            self.entries[i * self.ncols + target] = e;
        }
    }

    pub fn delete_row(&mut self, i: usize) {
        assert!(i < self.nrows, "index out of range");
        let ncols = self.ncols;
        self.entries.drain(i * ncols..(i + 1) * ncols);
        self.nrows -= 1;
    }

    pub fn delete_col(&mut self, j: usize) {
        assert!(j < self.ncols, "index out of range");
        let mut out = Vec::with_capacity(self.entries.len().saturating_sub(self.nrows));
        for (idx, e) in self.entries.drain(..).enumerate() {
            if idx % self.ncols != j {
                out.push(e);
            }
        }
        self.entries = out;
        self.ncols -= 1;
    }

    pub fn row_nonzero_count(&self, i: usize) -> usize {
        (0..self.ncols).filter(|&j| !self.entry(i, j).is_zero()).count()
    }

    pub fn col_nonzero_count(&self, j: usize) -> usize {
        (0..self.nrows).filter(|&i| !self.entry(i, j).is_zero()).count()
    }

    /// Positions of all unit entries, row-major order.
    pub fn unit_positions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                if self.entry(i, j).is_unit() {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

impl<E: RingElem> fmt::Display for Matrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.nrows == 0 || self.ncols == 0 {
            return write!(f, "0");
        }
        let rendered: Vec<Vec<String>> = (0..self.nrows)
            .map(|i| (0..self.ncols).map(|j| self.entry(i, j).to_string()).collect())
            .collect();
        let widths: Vec<usize> = (0..self.ncols)
            .map(|j| rendered.iter().map(|row| row[j].len()).max().unwrap_or(0))
            .collect();
        for (i, row) in rendered.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "|")?;
            for (j, cell) in row.iter().enumerate() {
                write!(f, " {cell:<w$}", w = widths[j])?;
            }
            write!(f, " |")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::CoeffField;
    use crate::poly::MonomialOrder;

    fn ring() -> Arc<PolyRing> {
        PolyRing::new(
            CoeffField::fp(32003).unwrap(),
            &["x", "y"],
            MonomialOrder::Grevlex,
        )
        .unwrap()
    }

    fn x(r: &Arc<PolyRing>) -> Polynomial {
        Polynomial::variable(r, 0)
    }

    fn y(r: &Arc<PolyRing>) -> Polynomial {
        Polynomial::variable(r, 1)
    }

    #[test]
    fn product_against_hand_value() {
        let r = ring();
        // | x y | * | y |   =  | x*y + y*x |  = | 2*x*y |
        //           | x |
        let a = Matrix::new(r.clone(), 1, 2, vec![x(&r), y(&r)]);
        let b = Matrix::new(r.clone(), 2, 1, vec![y(&r), x(&r)]);
        let p = a.mul(&b);
        let two_xy = x(&r).mul(&y(&r)).scale(&r.field().from_int(2));
        assert_eq!(p.entry(0, 0), &two_xy);
    }

    #[test]
    fn identity_is_neutral() {
        let r = ring();
        let m = Matrix::new(r.clone(), 2, 2, vec![x(&r), y(&r), Polynomial::zero(&r), x(&r)]);
        let id = Matrix::identity(r.clone(), 2);
        assert_eq!(id.mul(&m), m);
        assert_eq!(m.mul(&id), m);
        assert!(id.is_identity());
        assert!(!m.is_identity());
    }

    #[test]
    fn elementary_ops_are_invertible() {
        let r = ring();
        let m = Matrix::new(
            r.clone(),
            2,
            2,
            vec![x(&r), y(&r), y(&r).mul(&y(&r)), Polynomial::one(&r)],
        );
        let mut w = m.clone();
        let s = x(&r);
        w.add_multiple_of_row(1, 0, &s);
        w.add_multiple_of_row(1, 0, &s.neg());
        assert_eq!(w, m);
        w.add_multiple_of_col(0, 1, &s);
        w.add_multiple_of_col(0, 1, &s.neg());
        assert_eq!(w, m);
        w.swap_rows(0, 1);
        w.swap_rows(0, 1);
        assert_eq!(w, m);
        w.swap_cols(0, 1);
        w.swap_cols(0, 1);
        assert_eq!(w, m);
    }

    #[test]
    fn deletion_shapes() {
        let r = ring();
        let mut m = Matrix::new(
            r.clone(),
            2,
            3,
            vec![
                x(&r),
                y(&r),
                Polynomial::one(&r),
                Polynomial::zero(&r),
                x(&r),
                y(&r),
            ],
        );
        m.delete_col(1);
        assert_eq!((m.nrows(), m.ncols()), (2, 2));
        assert_eq!(m.entry(0, 1), &Polynomial::one(&r));
        assert_eq!(m.entry(1, 1), &y(&r));
        m.delete_row(0);
        assert_eq!((m.nrows(), m.ncols()), (1, 2));
        assert_eq!(m.entry(0, 0), &Polynomial::zero(&r));
    }

    #[test]
    fn unit_detection_over_base_ring() {
        let r = ring();
        let one_plus_x = Polynomial::one(&r).add(&x(&r));
        assert!(RingElem::is_unit(&Polynomial::one(&r)));
        assert!(RingElem::is_unit(&Polynomial::constant(&r, r.field().from_int(7))));
        assert!(!RingElem::is_unit(&x(&r)));
        assert!(!RingElem::is_unit(&one_plus_x));
        assert!(!RingElem::is_unit(&Polynomial::zero(&r)));
    }

    #[test]
    fn display_rows_as_bars() {
        let r = ring();
        let m = Matrix::new(
            r.clone(),
            2,
            2,
            vec![x(&r), y(&r).neg(), Polynomial::zero(&r), Polynomial::one(&r)],
        );
        assert_eq!(m.to_string(), "| x -y |\n| 0 1  |");
        let empty: Matrix<Polynomial> = Matrix::zero(r, 1, 0);
        assert_eq!(empty.to_string(), "0");
    }
}
