//! Dense exact matrices with deterministic Gaussian elimination.
//!
//! Row-vector convention throughout the crate: a module element is a row
//! vector and maps act by right multiplication, so composing "f then g"
//! multiplies the matrices as `f * g`.

use serde::ser::SerializeSeq;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    pub field: FieldSpec,
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            field,
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Test/readability helper: build from integer literals.
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Matrix::from_rows(field, data).expect("literal rows are rectangular")
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Scalar> {
        self.row(i).to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.field.is_zero(e))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let f = self.field;
        let mut out = Matrix::zero(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let v = f.add(out.get(i, j), &f.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let f = self.field;
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, f.add(self.get(i, j), rhs.get(i, j)));
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Matrix {
        let f = self.field;
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = f.neg(e);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let f = self.field;
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = f.mul(e, c);
        }
        out
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Right-multiply a row vector: `v * self`.
    pub fn apply_row(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows, "row/matrix shape mismatch");
        let f = self.field;
        let mut out = vec![f.zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if f.is_zero(vi) {
                continue;
            }
            for j in 0..self.cols {
                let m = self.get(i, j);
                if f.is_zero(m) {
                    continue;
                }
                out[j] = f.add(&out[j], &f.mul(vi, m));
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot column of each pivot
    /// row. Pivoting is deterministic: columns are scanned left to right and
    /// the first row with a nonzero entry is chosen.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pr = 0;
        for col in 0..m.cols {
            if pr >= m.rows {
                break;
            }
            let mut sel = None;
            for r in pr..m.rows {
                if !f.is_zero(m.get(r, col)) {
                    sel = Some(r);
                    break;
                }
            }
            let Some(sel) = sel else { continue };
            if sel != pr {
                for j in 0..m.cols {
                    let a = m.get(sel, j).clone();
                    let b = m.get(pr, j).clone();
                    m.set(sel, j, b);
                    m.set(pr, j, a);
                }
            }
            let inv = f.inv(m.get(pr, col)).expect("pivot nonzero");
            for j in col..m.cols {
                let v = f.mul(m.get(pr, j), &inv);
                m.set(pr, j, v);
            }
            for r in 0..m.rows {
                if r == pr || f.is_zero(m.get(r, col)) {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in col..m.cols {
                    let v = f.sub(m.get(r, j), &f.mul(&factor, m.get(pr, j)));
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            pr += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of the right kernel: one column per free column of the
    /// reduced echelon form, in ascending free-column order.
    pub fn kernel_basis(&self) -> Matrix {
        let f = self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zero(f, self.cols, free.len());
        for (idx, &fc) in free.iter().enumerate() {
            k.set(fc, idx, f.one());
            for (pr, &pc) in pivots.iter().enumerate() {
                k.set(pc, idx, f.neg(r.get(pr, fc)));
            }
        }
        k
    }

    /// Rows spanning the left kernel `{ v : v * self = 0 }`, in the canonical
    /// echelon order.
    pub fn left_kernel(&self) -> Matrix {
        self.transpose().kernel_basis().transpose()
    }

    /// Deterministic particular solution of `self * x = b` (column
    /// convention): the echelon solution with all free variables zero.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let f = self.field;
        let mut aug = Matrix::zero(f, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (pr, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(pr, self.cols).clone();
        }
        Some(x)
    }

    /// Deterministic particular solution of `x * self = b` (row convention).
    pub fn solve_left(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        self.transpose().solve(b)
    }
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

/// A subspace of a coordinate space, stored as a reduced-echelon row basis.
#[derive(Clone, Debug)]
pub struct RowSpace {
    field: FieldSpec,
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn empty(field: FieldSpec, ambient: usize) -> Self {
        RowSpace {
            field,
            ambient,
            basis: Matrix::zero(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows(m: &Matrix) -> Self {
        let (r, pivots) = m.rref();
        let mut basis = Matrix::zero(m.field, pivots.len(), m.cols);
        for i in 0..pivots.len() {
            for j in 0..m.cols {
                basis.set(i, j, r.get(i, j).clone());
            }
        }
        RowSpace {
            field: m.field,
            ambient: m.cols,
            basis,
            pivots,
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        RowSpace::from_rows(&Matrix::identity(field, ambient))
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the echelon basis, or `None` when `v` is outside
    /// the subspace.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient);
        let f = self.field;
        let mut rem = v.to_vec();
        let mut coords = Vec::with_capacity(self.dim());
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = rem[p].clone();
            if !f.is_zero(&c) {
                for j in 0..self.ambient {
                    let v = f.sub(&rem[j], &f.mul(&c, self.basis.get(i, j)));
                    rem[j] = v;
                }
            }
            coords.push(c);
        }
        if rem.iter().all(|e| f.is_zero(e)) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_space(&self, other: &RowSpace) -> bool {
        (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    pub fn sum(&self, other: &RowSpace) -> RowSpace {
        assert_eq!(self.ambient, other.ambient);
        RowSpace::from_rows(&self.basis.vstack(&other.basis))
    }

    /// Ambient coordinates not used as pivots; the corresponding standard
    /// vectors span a deterministic complement.
    pub fn complement_coords(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// Matrix sending an ambient vector to the complement coordinates of its
    /// class modulo the subspace: `v * R = 0` exactly when `v` lies in the
    /// subspace.
    pub fn reduction_matrix(&self) -> Matrix {
        let f = self.field;
        let comp = self.complement_coords();
        let mut r = Matrix::zero(f, self.ambient, comp.len());
        for k in 0..self.ambient {
            let mut v = vec![f.zero(); self.ambient];
            v[k] = f.one();
            for (i, &p) in self.pivots.iter().enumerate() {
                let c = v[p].clone();
                if !f.is_zero(&c) {
                    for j in 0..self.ambient {
                        let x = f.sub(&v[j], &f.mul(&c, self.basis.get(i, j)));
                        v[j] = x;
                    }
                }
            }
            for (j, &cc) in comp.iter().enumerate() {
                r.set(k, j, v[cc].clone());
            }
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn rank_identity_and_zero() {
        assert_eq!(Matrix::identity(q(), 2).rank(), 2);
        assert_eq!(Matrix::zero(q(), 2, 2).rank(), 0);
    }

    #[test]
    fn rank_dependent_rows() {
        // hand elimination: second row is twice the first
        let m = Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_of_injective_map_is_empty() {
        let k = Matrix::identity(q(), 3).kernel_basis();
        assert_eq!(k.cols, 0);
        assert_eq!(k.rows, 3);
    }

    #[test]
    fn kernel_of_zero_matrix_is_everything() {
        let k = Matrix::zero(q(), 2, 3).kernel_basis();
        assert_eq!(k.cols, 3);
    }

    #[test]
    fn kernel_echelon_basis() {
        // echelon oracle: free columns 1 and 2 give (-1,1,0) and (0,0,1)
        let m = Matrix::from_i64(q(), &[&[1, 1, 0]]);
        let k = m.kernel_basis();
        let expected = Matrix::from_i64(q(), &[&[-1, 0], &[1, 0], &[0, 1]]);
        assert_eq!(k, expected);
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn solve_identity_and_unsolvable() {
        let id = Matrix::identity(q(), 2);
        let b = vec![q().from_i64(3), q().from_i64(-1)];
        assert_eq!(id.solve(&b).unwrap(), b);

        let z = Matrix::zero(q(), 2, 2);
        assert!(z.solve(&b).is_none());
    }

    #[test]
    fn solve_scalar_inverse() {
        let m = Matrix::from_i64(q(), &[&[2]]);
        let x = m.solve(&[q().from_i64(1)]).unwrap();
        assert_eq!(x, vec![q().from_fraction(1, 2).unwrap()]);
    }

    #[test]
    fn rowspace_coords() {
        let m = Matrix::from_i64(q(), &[&[1, 2, 0], &[0, 0, 1]]);
        let sp = RowSpace::from_rows(&m);
        assert_eq!(sp.dim(), 2);
        let v = vec![q().from_i64(2), q().from_i64(4), q().from_i64(-5)];
        let c = sp.coords(&v).unwrap();
        assert_eq!(c, vec![q().from_i64(2), q().from_i64(-5)]);
        assert!(!sp.contains(&[q().one(), q().zero(), q().zero()]));
        assert_eq!(sp.complement_coords(), vec![1]);
    }

    #[test]
    fn left_kernel_annihilates() {
        let m = Matrix::from_i64(q(), &[&[1, 0], &[2, 0], &[0, 1]]);
        let lk = m.left_kernel();
        assert_eq!(lk.rows, 1);
        assert!(lk.mul(&m).is_zero());
    }
}
