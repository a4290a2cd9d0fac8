//! Finite-dimensional right modules over a [`BasicAlgebra`].
//!
//! A module stores one dimension per idempotent and one action matrix per
//! degree-1 basis element ("arrow") of the algebra. Elements are row vectors;
//! the arrow `g = e_t g e_s` acts by a `dims[t] x dims[s]` matrix sending the
//! `t`-component into the `s`-component. Actions of longer basis elements are
//! derived on demand through the algebra's chosen factorizations.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{BasicAlgebra, LinComb};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::{Matrix, RowSpace};

#[derive(Clone, Debug)]
pub struct ModuleRep {
    pub algebra: Arc<BasicAlgebra>,
    pub dims: Vec<usize>,
    /// Keyed by the basis index of each degree-1 algebra element.
    pub actions: BTreeMap<usize, Matrix>,
}

impl ModuleRep {
    /// Validating constructor for user-supplied data: checks shapes and that
    /// the arrow actions satisfy every product relation of the algebra.
    pub fn new(
        algebra: Arc<BasicAlgebra>,
        dims: Vec<usize>,
        actions: BTreeMap<usize, Matrix>,
    ) -> Result<Self> {
        let m = ModuleRep::new_unchecked(algebra, dims, actions)?;
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(
        algebra: Arc<BasicAlgebra>,
        dims: Vec<usize>,
        mut actions: BTreeMap<usize, Matrix>,
    ) -> Result<Self> {
        if dims.len() != algebra.n {
            return Err(Error::DimMismatch(format!(
                "expected {} component dimensions, got {}",
                algebra.n,
                dims.len()
            )));
        }
        let arrow_set = algebra.arrow_elems();
        if actions.keys().any(|k| !arrow_set.contains(k)) {
            return Err(Error::InvalidModule(
                "action given for a non-arrow basis element".into(),
            ));
        }
        for &g in &arrow_set {
            let e = &algebra.elems[g];
            let entry = actions
                .entry(g)
                .or_insert_with(|| Matrix::zero(algebra.field, dims[e.left], dims[e.right]));
            if entry.rows != dims[e.left] || entry.cols != dims[e.right] {
                return Err(Error::DimMismatch(format!(
                    "action of `{}` must be {}x{}",
                    e.label, dims[e.left], dims[e.right]
                )));
            }
        }
        Ok(ModuleRep {
            algebra,
            dims,
            actions,
        })
    }

    /// Full consistency check: evaluated products agree with the
    /// structure-constant table.
    pub fn validate(&self) -> Result<()> {
        let a = &self.algebra;
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                if a.elems[i].right != a.elems[j].left {
                    continue;
                }
                let lhs = self.eval(i).mul(&self.eval(j));
                let rhs = self.eval_comb(a.table(i, j), a.elems[i].left, a.elems[j].right);
                if lhs != rhs {
                    return Err(Error::InvalidModule(format!(
                        "evaluation of `{}`*`{}` disagrees with the table",
                        a.elems[i].label, a.elems[j].label
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn zero(algebra: Arc<BasicAlgebra>) -> Self {
        let dims = vec![0; algebra.n];
        ModuleRep::new_unchecked(algebra, dims, BTreeMap::new()).expect("zero module")
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// Action matrix of an arbitrary basis element, composed along the
    /// algebra's factorization. Shape `dims[left] x dims[right]`.
    pub fn eval(&self, elem: usize) -> Matrix {
        let a = &self.algebra;
        let e = &a.elems[elem];
        match e.degree {
            0 => Matrix::identity(a.field, self.dims[e.left]),
            1 => self.actions[&elem].clone(),
            _ => {
                let (x, y, c) = a.factorization(elem).expect("degree >= 2 factorization");
                let prod = self.eval(*x).mul(&self.eval(*y));
                let inv = a.field.inv(c).expect("factorization scalar nonzero");
                prod.scale(&inv)
            }
        }
    }

    /// Evaluate a linear combination with prescribed endpoints.
    pub fn eval_comb(&self, comb: &LinComb, left: usize, right: usize) -> Matrix {
        let f = self.algebra.field;
        let mut out = Matrix::zero(f, self.dims[left], self.dims[right]);
        for (k, c) in comb {
            out = out.add(&self.eval(*k).scale(c));
        }
        out
    }

    /// The indecomposable projective `e_i A`: spanned by the basis elements
    /// with left idempotent `e_i`, grouped by right idempotent.
    pub fn projective(algebra: Arc<BasicAlgebra>, i: usize) -> Self {
        let field = algebra.field;
        let layout: Vec<Vec<usize>> = (0..algebra.n)
            .map(|c| projective_component_basis(&algebra, i, c))
            .collect();
        let dims: Vec<usize> = layout.iter().map(|v| v.len()).collect();
        let mut actions = BTreeMap::new();
        for g in algebra.arrow_elems() {
            let (t, s) = (algebra.elems[g].left, algebra.elems[g].right);
            let mut m = Matrix::zero(field, dims[t], dims[s]);
            for (row, &b) in layout[t].iter().enumerate() {
                for (k, c) in algebra.table(b, g) {
                    let col = layout[s]
                        .iter()
                        .position(|&x| x == *k)
                        .expect("product stays in the projective");
                    m.set(row, col, c.clone());
                }
            }
            actions.insert(g, m);
        }
        ModuleRep::new_unchecked(algebra, dims, actions).expect("projective module")
    }

    /// The simple module at vertex `i`.
    pub fn simple(algebra: Arc<BasicAlgebra>, i: usize) -> Self {
        let mut dims = vec![0; algebra.n];
        dims[i] = 1;
        ModuleRep::new_unchecked(algebra, dims, BTreeMap::new()).expect("simple module")
    }

    pub fn direct_sum(algebra: Arc<BasicAlgebra>, parts: &[&ModuleRep]) -> Self {
        let field = algebra.field;
        let n = algebra.n;
        let dims: Vec<usize> = (0..n)
            .map(|c| parts.iter().map(|m| m.dims[c]).sum())
            .collect();
        let mut actions = BTreeMap::new();
        for g in algebra.arrow_elems() {
            let (t, s) = (algebra.elems[g].left, algebra.elems[g].right);
            let mut m = Matrix::zero(field, dims[t], dims[s]);
            let mut row_off = 0;
            let mut col_off = 0;
            for p in parts {
                let a = &p.actions[&g];
                for r in 0..a.rows {
                    for c in 0..a.cols {
                        m.set(row_off + r, col_off + c, a.get(r, c).clone());
                    }
                }
                row_off += p.dims[t];
                col_off += p.dims[s];
            }
            actions.insert(g, m);
        }
        ModuleRep::new_unchecked(algebra, dims, actions).expect("direct sum")
    }

    /// Dual module over the supplied opposite algebra: same dimensions,
    /// transposed actions.
    pub fn dual(&self, op: &Arc<BasicAlgebra>) -> ModuleRep {
        let mut actions = BTreeMap::new();
        for (&g, m) in &self.actions {
            actions.insert(g, m.transpose());
        }
        ModuleRep::new_unchecked(Arc::clone(op), self.dims.clone(), actions).expect("dual module")
    }

    /// Smallest action-closed family of subspaces containing the images of
    /// all arrow actions; spans `M rad A`.
    pub fn radical_spaces(&self) -> Vec<RowSpace> {
        let f = self.algebra.field;
        let mut spaces: Vec<RowSpace> = self.dims.iter().map(|&d| RowSpace::empty(f, d)).collect();
        for (&g, m) in &self.actions {
            let s = self.algebra.elems[g].right;
            spaces[s] = spaces[s].sum(&RowSpace::from_rows(m));
        }
        close_under_actions(self, &mut spaces);
        spaces
    }

    pub fn radical_submodule(&self) -> (ModuleRep, ModuleMap) {
        let spaces = self.radical_spaces();
        self.submodule(&spaces)
    }

    /// Submodule spanned by action-closed subspaces, with the induced actions
    /// and the inclusion map.
    pub fn submodule(&self, spaces: &[RowSpace]) -> (ModuleRep, ModuleMap) {
        let f = self.algebra.field;
        let dims: Vec<usize> = spaces.iter().map(|s| s.dim()).collect();
        let mut actions = BTreeMap::new();
        for (&g, m) in &self.actions {
            let (t, s) = (self.algebra.elems[g].left, self.algebra.elems[g].right);
            let mut a = Matrix::zero(f, dims[t], dims[s]);
            for r in 0..dims[t] {
                let img = m.apply_row(spaces[t].basis().row(r));
                let coords = spaces[s]
                    .coords(&img)
                    .expect("subspaces are closed under the action");
                for (c, v) in coords.into_iter().enumerate() {
                    a.set(r, c, v);
                }
            }
            actions.insert(g, a);
        }
        let sub =
            ModuleRep::new_unchecked(Arc::clone(&self.algebra), dims, actions).expect("submodule");
        let mats = spaces.iter().map(|s| s.basis().clone()).collect();
        let incl = ModuleMap::new_unchecked(&sub, self, mats);
        (sub, incl)
    }

    /// Quotient by action-closed subspaces, with the projection map. The
    /// quotient coordinates are the non-pivot ambient coordinates of each
    /// subspace, in ascending order.
    pub fn quotient(&self, spaces: &[RowSpace]) -> (ModuleRep, ModuleMap) {
        let f = self.algebra.field;
        let reps: Vec<Vec<usize>> = spaces.iter().map(|s| s.complement_coords()).collect();
        let dims: Vec<usize> = reps.iter().map(|r| r.len()).collect();

        // class of an ambient vector: remainder after reduction by the
        // subspace, restricted to the representative coordinates
        let class = |c: usize, v: &[Scalar]| -> Vec<Scalar> {
            let mut rem = v.to_vec();
            let sp = &spaces[c];
            for (i, &p) in sp.pivots().iter().enumerate() {
                let coef = rem[p].clone();
                if !f.is_zero(&coef) {
                    for j in 0..rem.len() {
                        let x = f.sub(&rem[j], &f.mul(&coef, sp.basis().get(i, j)));
                        rem[j] = x;
                    }
                }
            }
            reps[c].iter().map(|&k| rem[k].clone()).collect()
        };

        let mut proj_mats = Vec::new();
        for c in 0..self.algebra.n {
            let mut m = Matrix::zero(f, self.dims[c], dims[c]);
            for k in 0..self.dims[c] {
                let mut v = vec![f.zero(); self.dims[c]];
                v[k] = f.one();
                for (j, val) in class(c, &v).into_iter().enumerate() {
                    m.set(k, j, val);
                }
            }
            proj_mats.push(m);
        }

        let mut actions = BTreeMap::new();
        for (&g, m) in &self.actions {
            let (t, s) = (self.algebra.elems[g].left, self.algebra.elems[g].right);
            let mut a = Matrix::zero(f, dims[t], dims[s]);
            for (r, &k) in reps[t].iter().enumerate() {
                let mut v = vec![f.zero(); self.dims[t]];
                v[k] = f.one();
                let img = m.apply_row(&v);
                for (cc, val) in class(s, &img).into_iter().enumerate() {
                    a.set(r, cc, val);
                }
            }
            actions.insert(g, a);
        }
        let quot = ModuleRep::new_unchecked(Arc::clone(&self.algebra), dims, actions)
            .expect("quotient module");
        let proj = ModuleMap::new_unchecked(self, &quot, proj_mats);
        (quot, proj)
    }

    /// Dimensions of the top `M / rad M` per component.
    pub fn top_dims(&self) -> Vec<usize> {
        let rad = self.radical_spaces();
        (0..self.algebra.n)
            .map(|c| self.dims[c] - rad[c].dim())
            .collect()
    }
}

fn close_under_actions(m: &ModuleRep, spaces: &mut [RowSpace]) {
    loop {
        let mut grew = false;
        for (&g, mat) in &m.actions {
            let (t, s) = (m.algebra.elems[g].left, m.algebra.elems[g].right);
            for r in 0..spaces[t].dim() {
                let img = mat.apply_row(spaces[t].basis().row(r));
                if !spaces[s].contains(&img) {
                    let one = Matrix::from_rows(m.algebra.field, vec![img]).unwrap();
                    spaces[s] = spaces[s].sum(&RowSpace::from_rows(&one));
                    grew = true;
                }
            }
        }
        if !grew {
            return;
        }
    }
}

pub fn projective_component_basis(algebra: &BasicAlgebra, i: usize, c: usize) -> Vec<usize> {
    (0..algebra.dim())
        .filter(|&b| algebra.elems[b].left == i && algebra.elems[b].right == c)
        .collect()
}

/// A module map: one matrix per component, commuting with the arrow actions.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub algebra: Arc<BasicAlgebra>,
    pub source_dims: Vec<usize>,
    pub target_dims: Vec<usize>,
    pub mats: Vec<Matrix>,
}

impl ModuleMap {
    pub fn new(source: &ModuleRep, target: &ModuleRep, mats: Vec<Matrix>) -> Result<Self> {
        if !Arc::ptr_eq(&source.algebra, &target.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let m = ModuleMap::new_unchecked(source, target, mats);
        for (&g, am) in &source.actions {
            let e = &source.algebra.elems[g];
            let lhs = m.mats[e.left].mul(&target.actions[&g]);
            let rhs = am.mul(&m.mats[e.right]);
            if lhs != rhs {
                return Err(Error::InvalidMap(format!(
                    "does not commute with `{}`",
                    e.label
                )));
            }
        }
        Ok(m)
    }

    pub(crate) fn new_unchecked(source: &ModuleRep, target: &ModuleRep, mats: Vec<Matrix>) -> Self {
        assert_eq!(mats.len(), source.algebra.n);
        for (c, m) in mats.iter().enumerate() {
            assert_eq!(
                (m.rows, m.cols),
                (source.dims[c], target.dims[c]),
                "component {c} shape"
            );
        }
        ModuleMap {
            algebra: Arc::clone(&source.algebra),
            source_dims: source.dims.clone(),
            target_dims: target.dims.clone(),
            mats,
        }
    }

    pub fn zero(source: &ModuleRep, target: &ModuleRep) -> Self {
        let f = source.algebra.field;
        let mats = (0..source.algebra.n)
            .map(|c| Matrix::zero(f, source.dims[c], target.dims[c]))
            .collect();
        ModuleMap::new_unchecked(source, target, mats)
    }

    pub fn identity(m: &ModuleRep) -> Self {
        let f = m.algebra.field;
        let mats = m.dims.iter().map(|&d| Matrix::identity(f, d)).collect();
        ModuleMap::new_unchecked(m, m, mats)
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &ModuleMap) -> ModuleMap {
        let mats: Vec<Matrix> = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| a.mul(b))
            .collect();
        ModuleMap {
            algebra: Arc::clone(&self.algebra),
            source_dims: self.source_dims.clone(),
            target_dims: other.target_dims.clone(),
            mats,
        }
    }

    pub fn add(&self, other: &ModuleMap) -> ModuleMap {
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| a.add(b))
            .collect();
        ModuleMap {
            mats,
            ..self.clone()
        }
    }

    pub fn scale(&self, c: &Scalar) -> ModuleMap {
        ModuleMap {
            mats: self.mats.iter().map(|m| m.scale(c)).collect(),
            ..self.clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(|m| m.is_zero())
    }

    pub fn rank(&self) -> usize {
        self.mats.iter().map(|m| m.rank()).sum()
    }

    pub fn is_surjective(&self) -> bool {
        self.mats
            .iter()
            .zip(&self.target_dims)
            .all(|(m, &d)| m.rank() == d)
    }

    pub fn is_injective(&self) -> bool {
        self.mats
            .iter()
            .zip(&self.source_dims)
            .all(|(m, &d)| m.rank() == d)
    }

    pub fn image_spaces(&self) -> Vec<RowSpace> {
        self.mats.iter().map(RowSpace::from_rows).collect()
    }

    pub fn kernel_spaces(&self) -> Vec<RowSpace> {
        self.mats
            .iter()
            .map(|m| RowSpace::from_rows(&m.left_kernel()))
            .collect()
    }

    /// Entries flattened component by component, row-major; the coordinate
    /// space used by [`hom_space`].
    pub fn flat(&self) -> Vec<Scalar> {
        let mut out = Vec::new();
        for m in &self.mats {
            for i in 0..m.rows {
                out.extend_from_slice(m.row(i));
            }
        }
        out
    }

    /// Image lies inside `rad(target)`.
    pub fn is_radical(&self, target: &ModuleRep) -> bool {
        let rad = target.radical_spaces();
        self.mats
            .iter()
            .enumerate()
            .all(|(c, m)| (0..m.rows).all(|r| rad[c].contains(m.row(r))))
    }
}

/// Basis of `Hom(M, N)` as the canonical kernel of the intertwining system.
pub fn hom_space(m: &ModuleRep, n: &ModuleRep) -> Result<Vec<ModuleMap>> {
    if !Arc::ptr_eq(&m.algebra, &n.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    let a = Arc::clone(&m.algebra);
    let f = a.field;

    let mut offsets = Vec::with_capacity(a.n);
    let mut total = 0;
    for c in 0..a.n {
        offsets.push(total);
        total += m.dims[c] * n.dims[c];
    }
    let unknown = |c: usize, i: usize, j: usize| offsets[c] + i * n.dims[c] + j;

    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for g in a.arrow_elems() {
        let (t, s) = (a.elems[g].left, a.elems[g].right);
        let am = &m.actions[&g];
        let an = &n.actions[&g];
        for i in 0..m.dims[t] {
            for j in 0..n.dims[s] {
                let mut row = vec![f.zero(); total];
                for k in 0..n.dims[t] {
                    let v = f.add(&row[unknown(t, i, k)], an.get(k, j));
                    row[unknown(t, i, k)] = v;
                }
                for k in 0..m.dims[s] {
                    let v = f.sub(&row[unknown(s, k, j)], am.get(i, k));
                    row[unknown(s, k, j)] = v;
                }
                rows.push(row);
            }
        }
    }
    let system = if rows.is_empty() {
        Matrix::zero(f, 0, total)
    } else {
        Matrix::from_rows(f, rows)?
    };
    let kernel = system.kernel_basis();

    let mut basis = Vec::new();
    for b in 0..kernel.cols {
        let mut mats = Vec::with_capacity(a.n);
        for c in 0..a.n {
            let mut mat = Matrix::zero(f, m.dims[c], n.dims[c]);
            for i in 0..m.dims[c] {
                for j in 0..n.dims[c] {
                    mat.set(i, j, kernel.get(unknown(c, i, j), b).clone());
                }
            }
            mats.push(mat);
        }
        basis.push(ModuleMap::new_unchecked(m, n, mats));
    }
    Ok(basis)
}
