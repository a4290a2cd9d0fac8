//! Quivers, paths and relation ideals.
//!
//! A path stores its arrows in application order: `word[0]` acts first. The
//! displayed form is the reverse ("`d*g` means first `g`, then `d`"), so a
//! relation like `d*g` is a valid path from the source of `g` to the target
//! of `d`.

use serde::Serialize;
use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Self> {
        let mut seen = HashSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(Error::DuplicateLabel(v.clone()));
            }
        }
        let lookup = |label: &str| -> Result<usize> {
            vertices
                .iter()
                .position(|v| v == label)
                .ok_or_else(|| Error::UnknownVertex(label.to_string()))
        };
        let mut out = Vec::new();
        for (label, s, t) in arrows {
            if !seen.insert(label.clone()) {
                return Err(Error::DuplicateLabel(label));
            }
            out.push(Arrow {
                source: lookup(&s)?,
                target: lookup(&t)?,
                label,
            });
        }
        Ok(Quiver {
            vertices,
            arrows: out,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_index(&self, label: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.label == label)
            .ok_or_else(|| Error::UnknownArrow(label.to_string()))
    }

    /// Reverse every arrow. Applying it twice gives back the original quiver.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    label: a.label.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }
}

/// A path: either a lazy path at a vertex, or a nonempty arrow word stored in
/// application order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    /// Arrow indices, first applied first. Empty for a vertex path.
    pub word: Vec<usize>,
}

impl Path {
    pub fn vertex(v: usize) -> Self {
        Path {
            source: v,
            target: v,
            word: Vec::new(),
        }
    }

    pub fn arrow(q: &Quiver, idx: usize) -> Self {
        let a = &q.arrows[idx];
        Path {
            source: a.source,
            target: a.target,
            word: vec![idx],
        }
    }

    pub fn from_word(q: &Quiver, word: Vec<usize>) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::Other("empty word has no endpoints".into()));
        }
        for w in word.windows(2) {
            if q.arrows[w[0]].target != q.arrows[w[1]].source {
                return Err(Error::Other(format!(
                    "arrows `{}` and `{}` do not compose",
                    q.arrows[w[1]].label, q.arrows[w[0]].label
                )));
            }
        }
        Ok(Path {
            source: q.arrows[word[0]].source,
            target: q.arrows[*word.last().unwrap()].target,
            word,
        })
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_vertex(&self) -> bool {
        self.word.is_empty()
    }

    /// The product `self * other` ("first `other`, then `self`"), defined when
    /// `other` ends where `self` starts.
    pub fn compose(&self, other: &Path) -> Option<Path> {
        if other.target != self.source {
            return None;
        }
        let mut word = other.word.clone();
        word.extend_from_slice(&self.word);
        Some(Path {
            source: other.source,
            target: self.target,
            word,
        })
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.word.is_empty() {
            format!("e_{}", q.vertices[self.source])
        } else {
            self.word
                .iter()
                .rev()
                .map(|&i| q.arrows[i].label.clone())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

/// One relation: a linear combination of parallel paths of a common length
/// at least two.
#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Path)>,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "relation with {} terms", self.terms.len())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationIdeal {
    pub field: FieldSpec,
    pub generators: Vec<Relation>,
}

impl RelationIdeal {
    /// Validates parallelism, the admissibility lower bound (length >= 2) and
    /// length-homogeneity of each generator.
    pub fn new(field: FieldSpec, generators: Vec<Relation>) -> Result<Self> {
        for rel in &generators {
            let Some((_, first)) = rel.terms.first() else {
                return Err(Error::Other("empty relation".into()));
            };
            for (_, p) in &rel.terms {
                if p.len() < 2 {
                    return Err(Error::ShortRelation(p.len()));
                }
                if (p.source, p.target) != (first.source, first.target) {
                    return Err(Error::NonParallelRelation(format!(
                        "paths {}->{} and {}->{}",
                        first.source, first.target, p.source, p.target
                    )));
                }
                if p.len() != first.len() {
                    return Err(Error::MixedLengthRelation(first.len(), p.len()));
                }
            }
        }
        Ok(RelationIdeal { field, generators })
    }

    pub fn empty(field: FieldSpec) -> Self {
        RelationIdeal {
            field,
            generators: Vec::new(),
        }
    }

    pub fn max_generator_length(&self) -> usize {
        self.generators
            .iter()
            .flat_map(|r| r.terms.iter().map(|(_, p)| p.len()))
            .max()
            .unwrap_or(0)
    }

    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(|r| r.terms.len() == 1)
    }
}

/// Opposite presentation: reverse the quiver and every relation word.
pub fn opposite(q: &Quiver, ideal: &RelationIdeal) -> (Quiver, RelationIdeal) {
    let qop = q.opposite();
    let generators = ideal
        .generators
        .iter()
        .map(|rel| Relation {
            terms: rel
                .terms
                .iter()
                .map(|(c, p)| {
                    let word: Vec<usize> = p.word.iter().rev().copied().collect();
                    (
                        c.clone(),
                        Path {
                            source: p.target,
                            target: p.source,
                            word,
                        },
                    )
                })
                .collect(),
        })
        .collect();
    (
        qop,
        RelationIdeal {
            field: ideal.field,
            generators,
        },
    )
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    fn a2() -> Quiver {
        Quiver::new(
            vec!["1".into(), "2".into()],
            vec![("a".into(), "1".into(), "2".into())],
        )
        .unwrap()
    }

    /// The running 4-cycle fixture: a: 1->2, b: 2->3, g: 3->4, d: 4->1 with
    /// relations d*g and a*d.
    pub(crate) fn four_cycle() -> (Quiver, RelationIdeal) {
        let q = Quiver::new(
            vec!["1".into(), "2".into(), "3".into(), "4".into()],
            vec![
                ("a".into(), "1".into(), "2".into()),
                ("b".into(), "2".into(), "3".into()),
                ("g".into(), "3".into(), "4".into()),
                ("d".into(), "4".into(), "1".into()),
            ],
        )
        .unwrap();
        let field = FieldSpec::Rationals;
        let g = q.arrow_index("g").unwrap();
        let d = q.arrow_index("d").unwrap();
        let a = q.arrow_index("a").unwrap();
        // d*g: first g (3->4) then d (4->1); a*d: first d (4->1) then a (1->2)
        let dg = Path::from_word(&q, vec![g, d]).unwrap();
        let ad = Path::from_word(&q, vec![d, a]).unwrap();
        let ideal = RelationIdeal::new(
            field,
            vec![
                Relation {
                    terms: vec![(field.one(), dg)],
                },
                Relation {
                    terms: vec![(field.one(), ad)],
                },
            ],
        )
        .unwrap();
        (q, ideal)
    }

    #[test]
    fn arrows_must_reference_declared_vertices() {
        let r = Quiver::new(
            vec!["1".into()],
            vec![("a".into(), "1".into(), "2".into())],
        );
        assert!(matches!(r, Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn composition_is_right_to_left() {
        let (q, _) = four_cycle();
        let g = Path::arrow(&q, q.arrow_index("g").unwrap());
        let d = Path::arrow(&q, q.arrow_index("d").unwrap());
        // d*g is a path 3 -> 1
        let dg = d.compose(&g).unwrap();
        assert_eq!((dg.source, dg.target), (2, 0));
        assert_eq!(dg.display(&q), "d*g");
        // g*d does not compose (d ends at 1, g starts at 3)
        assert!(g.compose(&d).is_none());
    }

    #[test]
    fn relation_validation() {
        let q = a2();
        let field = FieldSpec::Rationals;
        let a = Path::arrow(&q, 0);
        let short = RelationIdeal::new(
            field,
            vec![Relation {
                terms: vec![(field.one(), a)],
            }],
        );
        assert!(matches!(short, Err(Error::ShortRelation(1))));
    }

    #[test]
    fn opposite_is_involutive() {
        let (q, ideal) = four_cycle();
        let (qop, iop) = opposite(&q, &ideal);
        assert_eq!(qop.arrows[0].source, 1);
        assert_eq!(qop.arrows[0].target, 0);
        let (q2, i2) = opposite(&qop, &iop);
        assert_eq!(q2, q);
        assert_eq!(i2, ideal);
    }

    #[test]
    fn opposite_of_arrowless_quiver_is_itself() {
        let q = Quiver::new(vec!["1".into(), "2".into()], vec![]).unwrap();
        assert_eq!(q.opposite(), q);
    }
}
