//! The corner algebra `(1-e)A(1-e)` and the reduction functor.
//!
//! Removing a set of vertices keeps every basis element whose two endpoints
//! survive; multiplication is inherited from the parent. The corner is never
//! re-presented by a quiver with relations: the homology engine runs on it
//! directly as a [`BasicAlgebra`].
//!
//! Degree tags of the corner are its own radical filtration, not the parent
//! path lengths: a parent path like `g*b` whose interior vertex is removed
//! becomes an arrow of the corner. That `rad G = (1-e)(rad A)(1-e)` is a
//! standard fact for corners of semiperfect algebras; the construction
//! recomputes the filtration and checks nilpotency rather than assuming it.

use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{BasicAlgebra, BasisElem, LinComb};
use crate::error::{Error, Result};
use crate::matrix::{Matrix, RowSpace};
use crate::module::{ModuleMap, ModuleRep};
use crate::quiver::Quiver;

#[derive(Clone, Debug)]
pub struct CornerAlgebra {
    /// The corner as a basic algebra; idempotent `i` is the kept parent
    /// vertex `kept[i]`.
    pub algebra: Arc<BasicAlgebra>,
    pub parent: Arc<BasicAlgebra>,
    /// Removed parent vertex indices (the e-set), ascending.
    pub removed: Vec<usize>,
    /// Kept parent vertex indices, ascending.
    pub kept: Vec<usize>,
    /// Corner basis index -> parent basis index.
    pub parent_elem: Vec<usize>,
}

/// Summary of a corner, serializable for reports.
#[derive(Serialize)]
pub struct CornerReport {
    pub removed: Vec<String>,
    pub kept: Vec<String>,
    pub dim: usize,
    pub basis: Vec<String>,
    pub arrows: Vec<(String, String, String)>,
}

pub fn corner(parent: &Arc<BasicAlgebra>, removed: &[usize]) -> Result<CornerAlgebra> {
    let n = parent.n;
    let mut removed: Vec<usize> = removed.to_vec();
    removed.sort_unstable();
    removed.dedup();
    if removed.is_empty() || removed.iter().any(|&v| v >= n) {
        return Err(Error::BadRemovedSet);
    }
    let kept: Vec<usize> = (0..n).filter(|v| !removed.contains(v)).collect();
    if kept.is_empty() {
        return Err(Error::EmptyKeptSet);
    }
    let vertex_of = |parent_vertex: usize| -> usize {
        kept.iter().position(|&k| k == parent_vertex).unwrap()
    };

    let parent_elem: Vec<usize> = (0..parent.dim())
        .filter(|&b| {
            kept.contains(&parent.elems[b].left) && kept.contains(&parent.elems[b].right)
        })
        .collect();
    let dim = parent_elem.len();
    let corner_index: BTreeMap<usize, usize> = parent_elem
        .iter()
        .enumerate()
        .map(|(c, &p)| (p, c))
        .collect();

    let field = parent.field;
    let mut table: Vec<LinComb> = vec![Vec::new(); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            let comb = parent.table(parent_elem[i], parent_elem[j]);
            table[i * dim + j] = comb
                .iter()
                .map(|(k, c)| {
                    let ck = corner_index
                        .get(k)
                        .expect("products of corner elements stay in the corner");
                    (*ck, c.clone())
                })
                .collect();
        }
    }

    // radical filtration of the corner: R_1 is the span of the
    // positive-parent-degree elements, R_{k+1} = R_k * R_1
    let positive: Vec<usize> = (0..dim)
        .filter(|&i| parent.elems[parent_elem[i]].degree > 0)
        .collect();
    let coord_vec = |i: usize| -> Vec<crate::field::Scalar> {
        let mut v = vec![field.zero(); dim];
        v[i] = field.one();
        v
    };
    let mut filtration: Vec<RowSpace> = Vec::new();
    {
        let rows: Vec<Vec<crate::field::Scalar>> = positive.iter().map(|&i| coord_vec(i)).collect();
        let m = if rows.is_empty() {
            Matrix::zero(field, 0, dim)
        } else {
            Matrix::from_rows(field, rows)?
        };
        filtration.push(RowSpace::from_rows(&m));
    }
    while filtration.last().unwrap().dim() > 0 {
        if filtration.len() > dim + 1 {
            return Err(Error::Other(
                "corner radical is not nilpotent; the parent is not a valid basic algebra".into(),
            ));
        }
        let prev = filtration.last().unwrap();
        let mut rows = Vec::new();
        for r in 0..prev.dim() {
            let v = prev.basis().row(r);
            for &y in &positive {
                // (sum_i v_i b_i) * b_y through the table
                let mut out = vec![field.zero(); dim];
                for (i, coef) in v.iter().enumerate() {
                    if field.is_zero(coef) {
                        continue;
                    }
                    for (k, c) in &table[i * dim + y] {
                        out[*k] = field.add(&out[*k], &field.mul(coef, c));
                    }
                }
                rows.push(out);
            }
        }
        let m = if rows.is_empty() {
            Matrix::zero(field, 0, dim)
        } else {
            Matrix::from_rows(field, rows)?
        };
        filtration.push(RowSpace::from_rows(&m));
    }

    // degree of a basis element: deepest filtration layer containing it
    let mut degree = vec![0usize; dim];
    for (i, d) in degree.iter_mut().enumerate() {
        let v = coord_vec(i);
        for (k, layer) in filtration.iter().enumerate() {
            if layer.contains(&v) {
                *d = k + 1;
            }
        }
    }
    // the filtration must be spanned by basis elements for the degree tags
    // to carry it faithfully
    for (k, layer) in filtration.iter().enumerate() {
        let aligned = degree.iter().filter(|&&d| d >= k + 1).count();
        if aligned != layer.dim() {
            return Err(Error::CornerNotAligned);
        }
    }

    let elems: Vec<BasisElem> = parent_elem
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let e = &parent.elems[p];
            BasisElem {
                label: e.label.clone(),
                left: vertex_of(e.left),
                right: vertex_of(e.right),
                degree: degree[i],
            }
        })
        .collect();

    // factor each degree >= 2 element as a product of two positive-degree
    // elements, required by module evaluation
    let mut factor = vec![None; dim];
    for b in 0..dim {
        if degree[b] < 2 {
            continue;
        }
        let mut found = None;
        'search: for x in 0..dim {
            if degree[x] == 0 {
                continue;
            }
            for y in 0..dim {
                if degree[y] == 0 {
                    continue;
                }
                let comb = &table[x * dim + y];
                if comb.len() == 1 && comb[0].0 == b {
                    found = Some((x, y, comb[0].1.clone()));
                    break 'search;
                }
            }
        }
        factor[b] = Some(found.ok_or(Error::CornerNotAligned)?);
    }

    let vertex_labels: Vec<String> = kept
        .iter()
        .map(|&k| parent.vertex_labels[k].clone())
        .collect();
    let algebra =
        BasicAlgebra::from_parts(field, kept.len(), vertex_labels, elems, table, factor)?;
    Ok(CornerAlgebra {
        algebra,
        parent: Arc::clone(parent),
        removed,
        kept,
        parent_elem,
    })
}

impl CornerAlgebra {
    /// The quiver of the corner read off `rad / rad^2`: one arrow per
    /// degree-1 basis element.
    pub fn gabriel_quiver(&self) -> Quiver {
        let a = &self.algebra;
        let arrows = a
            .arrow_elems()
            .into_iter()
            .map(|g| {
                let e = &a.elems[g];
                (
                    e.label.clone(),
                    a.vertex_labels[e.right].clone(),
                    a.vertex_labels[e.left].clone(),
                )
            })
            .collect();
        Quiver::new(self.algebra.vertex_labels.clone(), arrows).expect("corner quiver")
    }

    pub fn report(&self) -> CornerReport {
        let q = self.gabriel_quiver();
        CornerReport {
            removed: self
                .removed
                .iter()
                .map(|&v| self.parent.vertex_labels[v].clone())
                .collect(),
            kept: self.algebra.vertex_labels.clone(),
            dim: self.algebra.dim(),
            basis: self.algebra.elems.iter().map(|e| e.label.clone()).collect(),
            arrows: q
                .arrows
                .iter()
                .map(|a| {
                    (
                        a.label.clone(),
                        q.vertices[a.source].clone(),
                        q.vertices[a.target].clone(),
                    )
                })
                .collect(),
        }
    }

    /// The reduction functor on objects: restrict to the kept components.
    pub fn reduce(&self, m: &ModuleRep) -> Result<ModuleRep> {
        if !Arc::ptr_eq(&m.algebra, &self.parent) {
            return Err(Error::AlgebraMismatch);
        }
        let dims: Vec<usize> = self.kept.iter().map(|&k| m.dims[k]).collect();
        let mut actions = BTreeMap::new();
        for g in self.algebra.arrow_elems() {
            actions.insert(g, m.eval(self.parent_elem[g]));
        }
        Ok(ModuleRep::new_unchecked(Arc::clone(&self.algebra), dims, actions)
            .expect("reduced module"))
    }

    /// The reduction functor on maps; `src` and `tgt` must be the reductions
    /// of the map's source and target.
    pub fn reduce_map(&self, f: &ModuleMap, src: &ModuleRep, tgt: &ModuleRep) -> ModuleMap {
        let mats: Vec<Matrix> = self.kept.iter().map(|&k| f.mats[k].clone()).collect();
        ModuleMap::new_unchecked(src, tgt, mats)
    }

    /// `F(eA)`: the reduction of the sum of the removed projectives.
    pub fn reduce_removed_projectives(&self) -> ModuleRep {
        let parts: Vec<ModuleRep> = self
            .removed
            .iter()
            .map(|&j| {
                self.reduce(&ModuleRep::projective(Arc::clone(&self.parent), j))
                    .expect("same parent")
            })
            .collect();
        let refs: Vec<&ModuleRep> = parts.iter().collect();
        ModuleRep::direct_sum(Arc::clone(&self.algebra), &refs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests::four_cycle_algebra;
    use crate::homology::{global_dim, proj_dim, Dim};

    pub(crate) fn intro_corner() -> CornerAlgebra {
        let a = four_cycle_algebra();
        corner(&a, &[0, 2]).unwrap()
    }

    #[test]
    fn intro_corner_basis_and_quiver() {
        let c = intro_corner();
        let labels: Vec<&str> = c.algebra.elems.iter().map(|e| e.label.as_str()).collect();
        assert_eq!(labels, vec!["e_2", "e_4", "g*b"]);
        // g*b is an arrow of the corner even though its parent degree is 2
        assert_eq!(c.algebra.elems[2].degree, 1);
        let q = c.gabriel_quiver();
        assert_eq!(q.vertices, vec!["2", "4"]);
        assert_eq!(q.arrows.len(), 1);
        assert_eq!(
            (q.arrows[0].source, q.arrows[0].target),
            (0, 1) // from vertex 2 to vertex 4
        );
        // hereditary: global dimension one
        assert_eq!(global_dim(&c.algebra, 10), Dim::Exact(1));
    }

    #[test]
    fn corner_rejects_bad_vertex_sets() {
        let a = four_cycle_algebra();
        assert!(matches!(corner(&a, &[]), Err(Error::BadRemovedSet)));
        assert!(matches!(corner(&a, &[9]), Err(Error::BadRemovedSet)));
        assert!(matches!(
            corner(&a, &[0, 1, 2, 3]),
            Err(Error::EmptyKeptSet)
        ));
    }

    #[test]
    fn corner_of_a2_is_the_ground_field() {
        let q = crate::quiver::Quiver::new(
            vec!["1".into(), "2".into()],
            vec![("a".into(), "1".into(), "2".into())],
        )
        .unwrap();
        let g = crate::groebner::groebner(
            &q,
            &crate::quiver::RelationIdeal::empty(crate::field::FieldSpec::Rationals),
            10,
        )
        .unwrap();
        let a = crate::algebra::from_presentation(&g).unwrap();
        let c = corner(&a, &[1]).unwrap();
        assert_eq!(c.algebra.dim(), 1);
        assert_eq!(global_dim(&c.algebra, 10), Dim::Exact(0));
    }

    #[test]
    fn functor_kills_removed_simples_and_keeps_kept_ones() {
        let c = intro_corner();
        let a = Arc::clone(&c.parent);
        // F(S_1) = F(S_3) = 0
        for &j in &[0usize, 2] {
            let s = ModuleRep::simple(Arc::clone(&a), j);
            assert!(c.reduce(&s).unwrap().is_zero());
        }
        // F(S_2), F(S_4) are the corner simples
        let f2 = c.reduce(&ModuleRep::simple(Arc::clone(&a), 1)).unwrap();
        assert_eq!(f2.dims, vec![1, 0]);
        assert!(f2.actions.values().all(|m| m.is_zero()));
    }

    #[test]
    fn functor_sends_kept_projectives_to_corner_projectives() {
        let c = intro_corner();
        let a = Arc::clone(&c.parent);
        for (ci, &j) in c.kept.iter().enumerate() {
            let fp = c
                .reduce(&ModuleRep::projective(Arc::clone(&a), j))
                .unwrap();
            let pg = ModuleRep::projective(Arc::clone(&c.algebra), ci);
            assert_eq!(fp.dims, pg.dims);
            for (g, m) in &fp.actions {
                assert_eq!(m, &pg.actions[g]);
            }
        }
    }

    #[test]
    fn reduced_removed_projectives_on_the_fixture() {
        let c = intro_corner();
        // F(e1A) + F(e3A) is S^G_4 + S^G_2, of projective dimension 1
        let feA = c.reduce_removed_projectives();
        assert_eq!(feA.dims, vec![1, 1]);
        assert!(feA.actions.values().all(|m| m.is_zero()));
        assert_eq!(proj_dim(&feA, 10), Dim::Exact(1));
    }

    #[test]
    fn functor_is_exact_on_the_radical_sequence() {
        let c = intro_corner();
        let a = Arc::clone(&c.parent);
        let p4 = ModuleRep::projective(Arc::clone(&a), 3);
        let (rad, incl) = p4.radical_submodule();
        let spaces = p4.radical_spaces();
        let (top, surj) = p4.quotient(&spaces);

        let fr = c.reduce(&rad).unwrap();
        let fp = c.reduce(&p4).unwrap();
        let ft = c.reduce(&top).unwrap();
        let fincl = c.reduce_map(&incl, &fr, &fp);
        let fsurj = c.reduce_map(&surj, &fp, &ft);
        assert!(fincl.is_injective());
        assert!(fsurj.is_surjective());
        assert!(fincl.compose(&fsurj).is_zero());
        for comp in 0..c.algebra.n {
            assert_eq!(
                fincl.mats[comp].rank() + fsurj.mats[comp].rank(),
                fp.dims[comp]
            );
        }
    }

    #[test]
    fn semisimple_corner() {
        let q = crate::quiver::Quiver::new(
            vec!["1".into(), "2".into(), "3".into()],
            vec![],
        )
        .unwrap();
        let g = crate::groebner::groebner(
            &q,
            &crate::quiver::RelationIdeal::empty(crate::field::FieldSpec::Rationals),
            4,
        )
        .unwrap();
        let a = crate::algebra::from_presentation(&g).unwrap();
        let c = corner(&a, &[1]).unwrap();
        assert_eq!(c.algebra.dim(), 2);
        assert!(c.gabriel_quiver().arrows.is_empty());
    }
}
