//! Basic algebras with a distinguished degree-tagged basis.
//!
//! Both constructions used by the engine produce the same shape: a complete
//! set of primitive orthogonal idempotents, a basis tagged with (left
//! idempotent, right idempotent, radical degree) and a structure-constant
//! table. Path-backed algebras come from a completed presentation; corner
//! algebras restrict a parent algebra to a kept vertex set.
//!
//! Conventions: for a basis path `p` the left idempotent is its target and
//! the right idempotent is its source, so `e_i A` is spanned by the paths
//! ending at `i`. The radical is the span of the positive-degree basis
//! elements, and degrees satisfy deg(xy) >= deg(x) + deg(y) unless xy = 0.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::groebner::GroebnerData;

/// Sparse linear combination of basis elements, sorted by index.
pub type LinComb = Vec<(usize, Scalar)>;

#[derive(Clone, Debug)]
pub struct BasisElem {
    pub label: String,
    /// Target vertex: `e_left * x = x`.
    pub left: usize,
    /// Source vertex: `x * e_right = x`.
    pub right: usize,
    pub degree: usize,
}

#[derive(Clone, Debug)]
pub struct BasicAlgebra {
    pub field: FieldSpec,
    /// Number of primitive idempotents; `elems[i]` for `i < n` is `e_i`.
    pub n: usize,
    pub vertex_labels: Vec<String>,
    pub elems: Vec<BasisElem>,
    table: Vec<LinComb>,
    /// For each degree >= 2 basis element, a factorization `b = x * y` with
    /// positive-degree factors and a scalar: `x * y = c * b`. Drives module
    /// evaluation.
    factor: Vec<Option<(usize, usize, Scalar)>>,
}

/// An element as a coefficient vector over the basis.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement(pub Vec<Scalar>);

impl BasicAlgebra {
    pub fn dim(&self) -> usize {
        self.elems.len()
    }

    pub fn table(&self, i: usize, j: usize) -> &LinComb {
        &self.table[i * self.elems.len() + j]
    }

    pub fn factorization(&self, i: usize) -> Option<&(usize, usize, Scalar)> {
        self.factor[i].as_ref()
    }

    /// Indices of the degree-1 basis elements: the arrows of the algebra.
    pub fn arrow_elems(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.elems[i].degree == 1).collect()
    }

    /// Basis indices spanning `rad^k`.
    pub fn radical_power_basis(&self, k: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.elems[i].degree >= k)
            .collect()
    }

    /// Nilpotency index: least `N` with `rad^N = 0`.
    pub fn radical_nilpotency(&self) -> usize {
        1 + self.elems.iter().map(|e| e.degree).max().unwrap_or(0)
    }

    pub fn zero_elem(&self) -> AlgebraElement {
        AlgebraElement(vec![self.field.zero(); self.dim()])
    }

    pub fn basis_elem(&self, i: usize) -> AlgebraElement {
        let mut v = self.zero_elem();
        v.0[i] = self.field.one();
        v
    }

    pub fn unit(&self) -> AlgebraElement {
        let mut v = self.zero_elem();
        for i in 0..self.n {
            v.0[i] = self.field.one();
        }
        v
    }

    /// Bilinear extension of the structure-constant table.
    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let f = self.field;
        let mut out = self.zero_elem();
        for (i, ca) in a.0.iter().enumerate() {
            if f.is_zero(ca) {
                continue;
            }
            for (j, cb) in b.0.iter().enumerate() {
                if f.is_zero(cb) {
                    continue;
                }
                let cab = f.mul(ca, cb);
                for (k, c) in self.table(i, j) {
                    out.0[*k] = f.add(&out.0[*k], &f.mul(&cab, c));
                }
            }
        }
        out
    }

    /// Same basis with left/right swapped and the table arguments flipped.
    pub fn opposite(&self) -> BasicAlgebra {
        let d = self.dim();
        let mut table = vec![Vec::new(); d * d];
        for i in 0..d {
            for j in 0..d {
                table[i * d + j] = self.table(j, i).clone();
            }
        }
        let elems = self
            .elems
            .iter()
            .map(|e| BasisElem {
                label: e.label.clone(),
                left: e.right,
                right: e.left,
                degree: e.degree,
            })
            .collect();
        // a factorization x*y = c*b becomes y*x = c*b on the other side
        let factor = self
            .factor
            .iter()
            .map(|f| f.as_ref().map(|(x, y, c)| (*y, *x, c.clone())))
            .collect();
        BasicAlgebra {
            field: self.field,
            n: self.n,
            vertex_labels: self.vertex_labels.clone(),
            elems,
            table,
            factor,
        }
    }

    /// Construct from prevalidated parts, checking the structural invariants
    /// that every consumer relies on.
    pub fn from_parts(
        field: FieldSpec,
        n: usize,
        vertex_labels: Vec<String>,
        elems: Vec<BasisElem>,
        table: Vec<LinComb>,
        factor: Vec<Option<(usize, usize, Scalar)>>,
    ) -> Result<Arc<BasicAlgebra>> {
        let d = elems.len();
        if table.len() != d * d || factor.len() != d {
            return Err(Error::DimMismatch("algebra table size".into()));
        }
        for (i, e) in elems.iter().enumerate() {
            let is_idem = i < n;
            if is_idem != (e.degree == 0) {
                return Err(Error::Other(
                    "degree-0 basis elements must be exactly the idempotents".into(),
                ));
            }
            if is_idem && (e.left != i || e.right != i) {
                return Err(Error::Other("idempotent endpoint tags are wrong".into()));
            }
        }
        let alg = BasicAlgebra {
            field,
            n,
            vertex_labels,
            elems,
            table,
            factor,
        };
        for i in 0..d {
            for j in 0..d {
                let prod = alg.table(i, j);
                if alg.elems[i].right != alg.elems[j].left {
                    if !prod.is_empty() {
                        return Err(Error::Other(format!(
                            "mismatched inner idempotents but nonzero product at ({i},{j})"
                        )));
                    }
                    continue;
                }
                for (k, c) in prod {
                    if field.is_zero(c) {
                        return Err(Error::Other("zero coefficient stored in table".into()));
                    }
                    let e = &alg.elems[*k];
                    if e.left != alg.elems[i].left || e.right != alg.elems[j].right {
                        return Err(Error::Other(format!(
                            "product at ({i},{j}) has wrong endpoints"
                        )));
                    }
                    if e.degree < alg.elems[i].degree + alg.elems[j].degree {
                        return Err(Error::Other(format!(
                            "degree dropped under multiplication at ({i},{j})"
                        )));
                    }
                }
            }
        }
        Ok(Arc::new(alg))
    }
}

/// Build the path-backed algebra on the normal-form basis of a finite
/// completed presentation.
pub fn from_presentation(g: &GroebnerData) -> Result<Arc<BasicAlgebra>> {
    if !g.finite {
        return Err(Error::InfiniteDimensional);
    }
    let field = g.field;
    let d = g.basis.len();
    let n = g.quiver.vertex_count();
    let elems: Vec<BasisElem> = g
        .basis
        .iter()
        .map(|p| BasisElem {
            label: p.display(&g.quiver),
            left: p.target,
            right: p.source,
            degree: p.len(),
        })
        .collect();

    let mut table = vec![Vec::new(); d * d];
    for i in 0..d {
        for j in 0..d {
            let (pi, pj) = (&g.basis[i], &g.basis[j]);
            let Some(prod) = pi.compose(pj) else { continue };
            let nf = g.normal_form(vec![(field.one(), prod)]);
            let mut comb: LinComb = nf
                .into_iter()
                .map(|(c, p)| {
                    let idx = g.basis_index(&p).expect("normal form lies in the basis");
                    (idx, c)
                })
                .collect();
            comb.sort_by_key(|(k, _)| *k);
            table[i * d + j] = comb;
        }
    }

    // each basis path of length >= 2 factors as (rest) * (first arrow)
    let mut factor = vec![None; d];
    for (i, p) in g.basis.iter().enumerate() {
        if p.len() < 2 {
            continue;
        }
        let first = crate::quiver::Path::arrow(&g.quiver, p.word[0]);
        let rest = crate::quiver::Path::from_word(&g.quiver, p.word[1..].to_vec())
            .expect("subpath of a basis path");
        let xi = g.basis_index(&rest).expect("basis closed under subpaths");
        let yi = g.basis_index(&first).expect("arrows are basis elements");
        factor[i] = Some((xi, yi, field.one()));
    }

    BasicAlgebra::from_parts(field, n, g.quiver.vertices.clone(), elems, table, factor)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::groebner::groebner;
    use crate::quiver::{Quiver, RelationIdeal};
    use rand::{Rng, SeedableRng};

    pub(crate) fn four_cycle_algebra() -> Arc<BasicAlgebra> {
        let (q, ideal) = crate::quiver::tests::four_cycle();
        let g = groebner(&q, &ideal, 10).unwrap();
        from_presentation(&g).unwrap()
    }

    fn a2_algebra() -> Arc<BasicAlgebra> {
        let q = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![("a".into(), "1".into(), "2".into())],
        )
        .unwrap();
        let g = groebner(&q, &RelationIdeal::empty(FieldSpec::Rationals), 10).unwrap();
        from_presentation(&g).unwrap()
    }

    fn semisimple2() -> Arc<BasicAlgebra> {
        let q = Quiver::new(vec!["1".into(), "2".into()], vec![]).unwrap();
        let g = groebner(&q, &RelationIdeal::empty(FieldSpec::Rationals), 4).unwrap();
        from_presentation(&g).unwrap()
    }

    #[test]
    fn a2_dimensions_and_nilpotency() {
        let a = a2_algebra();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.radical_nilpotency(), 2);
    }

    #[test]
    fn four_cycle_dim11_and_radical_powers() {
        let a = four_cycle_algebra();
        assert_eq!(a.dim(), 11);
        // rad^3 is spanned by g*b*a, rad^4 = 0
        assert_eq!(a.radical_power_basis(1).len(), 7);
        assert_eq!(a.radical_power_basis(3).len(), 1);
        assert_eq!(a.radical_power_basis(4).len(), 0);
        assert_eq!(a.radical_nilpotency(), 4);
    }

    #[test]
    fn semisimple_has_zero_radical() {
        let a = semisimple2();
        assert_eq!(a.dim(), 2);
        assert!(a.radical_power_basis(1).is_empty());
        assert_eq!(a.radical_power_basis(0).len(), 2);
    }

    #[test]
    fn idempotents_are_orthogonal() {
        let a = four_cycle_algebra();
        for i in 0..a.n {
            for j in 0..a.n {
                let ei = a.basis_elem(i);
                let ej = a.basis_elem(j);
                let prod = a.multiply(&ei, &ej);
                if i == j {
                    assert_eq!(prod, ei);
                } else {
                    assert_eq!(prod, a.zero_elem());
                }
            }
        }
    }

    #[test]
    fn unit_is_two_sided() {
        let a = four_cycle_algebra();
        let one = a.unit();
        for i in 0..a.dim() {
            let b = a.basis_elem(i);
            assert_eq!(a.multiply(&one, &b), b);
            assert_eq!(a.multiply(&b, &one), b);
        }
    }

    #[test]
    fn relation_product_vanishes() {
        // d*g is nonzero in the path algebra but zero in the quotient
        let a = four_cycle_algebra();
        let di = a.elems.iter().position(|e| e.label == "d").unwrap();
        let gi = a.elems.iter().position(|e| e.label == "g").unwrap();
        let prod = a.multiply(&a.basis_elem(di), &a.basis_elem(gi));
        assert_eq!(prod, a.zero_elem());
        // while b*a survives
        let bi = a.elems.iter().position(|e| e.label == "b").unwrap();
        let ai = a.elems.iter().position(|e| e.label == "a").unwrap();
        let prod = a.multiply(&a.basis_elem(bi), &a.basis_elem(ai));
        let bai = a.elems.iter().position(|e| e.label == "b*a").unwrap();
        assert_eq!(prod, a.basis_elem(bai));
    }

    #[test]
    fn associativity_spot_check() {
        let a = four_cycle_algebra();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let x = a.basis_elem(rng.gen_range(0..a.dim()));
            let y = a.basis_elem(rng.gen_range(0..a.dim()));
            let z = a.basis_elem(rng.gen_range(0..a.dim()));
            let left = a.multiply(&a.multiply(&x, &y), &z);
            let right = a.multiply(&x, &a.multiply(&y, &z));
            assert_eq!(left, right);
        }
    }

    #[test]
    fn opposite_is_an_involution_and_antihomomorphism() {
        let a = four_cycle_algebra();
        let op = a.opposite();
        assert_eq!(op.dim(), a.dim());
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                assert_eq!(op.table(i, j), a.table(j, i));
            }
        }
        let opop = op.opposite();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                assert_eq!(opop.table(i, j), a.table(i, j));
            }
        }
    }
}
