//! Rewrite systems for path algebras: completion of length-homogeneous
//! relation ideals, canonical normal forms and the irreducible-path basis.
//!
//! The monomial order is length first, then lexicographic on the arrow word
//! in application order, with arrows compared by declaration index. Since
//! every relation is length-homogeneous, completion proceeds degree by
//! degree: all critical pairs whose ambiguity word fits under the length cap
//! are resolved, and longer ambiguities cannot influence lower degrees.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::quiver::{Path, Quiver, RelationIdeal};

/// Safety valve on basis enumeration for wildly infinite algebras.
const MAX_BASIS: usize = 20_000;

/// A linear combination of paths, kept sorted by the monomial order with no
/// zero coefficients and no repeated paths.
pub type PathComb = Vec<(Scalar, Path)>;

fn cmp_word(a: &Path, b: &Path) -> Ordering {
    a.len()
        .cmp(&b.len())
        .then_with(|| a.word.cmp(&b.word))
        .then_with(|| a.source.cmp(&b.source))
}

/// Sort, merge duplicate paths, drop zeros.
pub fn normalize_comb(field: &FieldSpec, mut terms: PathComb) -> PathComb {
    terms.sort_by(|x, y| cmp_word(&x.1, &y.1));
    let mut out: PathComb = Vec::with_capacity(terms.len());
    for (c, p) in terms {
        if let Some(last) = out.last_mut() {
            if last.1 == p {
                last.0 = field.add(&last.0, &c);
                continue;
            }
        }
        out.push((c, p));
    }
    out.retain(|(c, _)| !field.is_zero(c));
    out
}

/// One rewrite rule: the leading word rewrites to the (strictly smaller)
/// right-hand side.
#[derive(Clone, Debug)]
pub struct RewriteRule {
    pub lead: Path,
    pub rhs: PathComb,
}

#[derive(Clone, Debug)]
pub struct GroebnerData {
    pub quiver: Quiver,
    pub field: FieldSpec,
    pub length_cap: usize,
    pub rules: Vec<RewriteRule>,
    /// Irreducible paths in length-lex order; the k-basis of `kQ/I` when
    /// `finite` is set.
    pub basis: Vec<Path>,
    pub finite: bool,
    index: HashMap<(usize, Vec<usize>), usize>,
}

fn find_factor(word: &[usize], lead: &[usize]) -> Option<usize> {
    if lead.len() > word.len() {
        return None;
    }
    (0..=word.len() - lead.len()).find(|&i| &word[i..i + lead.len()] == lead)
}

fn ends_with(word: &[usize], lead: &[usize]) -> bool {
    lead.len() <= word.len() && &word[word.len() - lead.len()..] == lead
}

impl GroebnerData {
    pub fn dim(&self) -> Option<usize> {
        self.finite.then_some(self.basis.len())
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.index.get(&(p.source, p.word.clone())).copied()
    }

    fn reducible_at(&self, word: &[usize]) -> Option<(usize, usize)> {
        for (ri, rule) in self.rules.iter().enumerate() {
            if let Some(pos) = find_factor(word, &rule.lead.word) {
                return Some((ri, pos));
            }
        }
        None
    }

    /// Canonical representative of a residue class; idempotent.
    pub fn normal_form(&self, comb: PathComb) -> PathComb {
        let field = self.field;
        let mut work = normalize_comb(&field, comb);
        loop {
            // reduce the largest reducible term first
            let mut chosen = None;
            for (ti, (_, p)) in work.iter().enumerate().rev() {
                if let Some((ri, pos)) = self.reducible_at(&p.word) {
                    chosen = Some((ti, ri, pos));
                    break;
                }
            }
            let Some((ti, ri, pos)) = chosen else {
                return work;
            };
            let (coef, path) = work.remove(ti);
            let rule = &self.rules[ri];
            let mut extra: PathComb = Vec::new();
            for (rc, rp) in &rule.rhs {
                let mut word = Vec::with_capacity(path.len() - rule.lead.len() + rp.len());
                word.extend_from_slice(&path.word[..pos]);
                word.extend_from_slice(&rp.word);
                word.extend_from_slice(&path.word[pos + rule.lead.len()..]);
                let newp = if word.is_empty() {
                    Path::vertex(path.source)
                } else {
                    Path::from_word(&self.quiver, word).expect("rewriting preserves composability")
                };
                extra.push((field.mul(&coef, rc), newp));
            }
            work.extend(extra);
            work = normalize_comb(&field, work);
        }
    }
}

/// Complete the relation ideal into a confluent rewrite system and enumerate
/// the irreducible-path basis up to `length_cap`.
pub fn groebner(q: &Quiver, ideal: &RelationIdeal, length_cap: usize) -> Result<GroebnerData> {
    let field = ideal.field;
    let maxlen = ideal.max_generator_length();
    if maxlen > length_cap {
        return Err(Error::CapExceeded {
            cap: length_cap,
            what: format!("a relation has length {maxlen}"),
        });
    }

    let mut data = GroebnerData {
        quiver: q.clone(),
        field,
        length_cap,
        rules: Vec::new(),
        basis: Vec::new(),
        finite: true,
        index: HashMap::new(),
    };

    // generators grouped by degree (each is length-homogeneous)
    let mut gens_by_degree: HashMap<usize, Vec<PathComb>> = HashMap::new();
    for rel in &ideal.generators {
        let comb = normalize_comb(&field, rel.terms.clone());
        if let Some((_, p)) = comb.last() {
            gens_by_degree.entry(p.len()).or_default().push(comb);
        }
    }

    for degree in 2..=length_cap {
        let mut fresh: Vec<PathComb> = Vec::new();
        if let Some(gens) = gens_by_degree.remove(&degree) {
            fresh.extend(gens);
        }
        // critical pairs whose ambiguity word has exactly this length
        let n_rules = data.rules.len();
        for i in 0..n_rules {
            for j in 0..n_rules {
                let (u, v) = (&data.rules[i], &data.rules[j]);
                let (ulen, vlen) = (u.lead.len(), v.lead.len());
                // suffix of u.lead of length k equals prefix of v.lead
                for k in 1..ulen.min(vlen) {
                    if ulen + vlen - k != degree {
                        continue;
                    }
                    if u.lead.word[ulen - k..] != v.lead.word[..k] {
                        continue;
                    }
                    let x = &u.lead.word[..ulen - k];
                    let y = &v.lead.word[k..];
                    let mut spoly: PathComb = Vec::new();
                    for (c, p) in &u.rhs {
                        let mut w = p.word.clone();
                        w.extend_from_slice(y);
                        spoly.push((c.clone(), embed(q, &u.lead, &p.word, &w)?));
                    }
                    for (c, p) in &v.rhs {
                        let mut w = x.to_vec();
                        w.extend_from_slice(&p.word);
                        spoly.push((field.neg(c), embed(q, &v.lead, &p.word, &w)?));
                    }
                    fresh.push(spoly);
                }
            }
        }
        for comb in fresh {
            let rem = data.normal_form(comb);
            if rem.is_empty() {
                continue;
            }
            let (lc, lead) = rem.last().expect("nonzero remainder").clone();
            let inv = field.inv(&lc).expect("leading coefficient nonzero");
            let rhs: PathComb = rem[..rem.len() - 1]
                .iter()
                .map(|(c, p)| (field.neg(&field.mul(c, &inv)), p.clone()))
                .collect();
            data.rules.push(RewriteRule { lead, rhs });
        }
    }

    // canonical form: reduce every right-hand side by the full system
    loop {
        let mut changed = false;
        for ri in 0..data.rules.len() {
            let rhs = data.rules[ri].rhs.clone();
            let reduced = data.normal_form(rhs.clone());
            if reduced != rhs {
                data.rules[ri].rhs = reduced;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    enumerate_basis(&mut data);
    Ok(data)
}

fn embed(q: &Quiver, lead: &Path, inner: &[usize], word: &[usize]) -> Result<Path> {
    // rebuild a Path for a rewritten word; a vertex word inherits an endpoint
    if word.is_empty() {
        let v = if inner.is_empty() {
            lead.source
        } else {
            q.arrows[inner[0]].source
        };
        Ok(Path::vertex(v))
    } else {
        Path::from_word(q, word.to_vec())
    }
}

fn enumerate_basis(data: &mut GroebnerData) {
    let q = &data.quiver;
    let mut level: Vec<Path> = (0..q.vertex_count()).map(Path::vertex).collect();
    data.basis = level.clone();
    for len in 1..=data.length_cap {
        let mut next = Vec::new();
        for p in &level {
            for (ai, arrow) in q.arrows.iter().enumerate() {
                if arrow.source != p.target {
                    continue;
                }
                let mut word = p.word.clone();
                word.push(ai);
                let blocked = data.rules.iter().any(|r| ends_with(&word, &r.lead.word));
                if blocked {
                    continue;
                }
                next.push(Path {
                    source: p.source,
                    target: arrow.target,
                    word,
                });
            }
        }
        if next.is_empty() {
            break;
        }
        if len == data.length_cap || data.basis.len() + next.len() > MAX_BASIS {
            // an irreducible path of maximal length exists: possibly infinite
            data.finite = false;
            break;
        }
        data.basis.extend(next.iter().cloned());
        level = next;
    }
    data.index = data
        .basis
        .iter()
        .enumerate()
        .map(|(i, p)| ((p.source, p.word.clone()), i))
        .collect();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    fn q_field() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn a2() -> (Quiver, RelationIdeal) {
        let q = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![("a".into(), "1".into(), "2".into())],
        )
        .unwrap();
        (q, RelationIdeal::empty(q_field()))
    }

    fn one_loop() -> (Quiver, RelationIdeal) {
        let q = Quiver::new(
            vec!["1".into()],
            vec![("x".into(), "1".into(), "1".into())],
        )
        .unwrap();
        (q, RelationIdeal::empty(q_field()))
    }

    fn four_cycle() -> (Quiver, RelationIdeal) {
        crate::quiver::tests::four_cycle()
    }

    /// Independent oracle for monomial ideals: enumerate all paths up to a
    /// length bound and kill every word containing a relation word.
    fn brute_force_monomial_basis(q: &Quiver, kill: &[Vec<usize>], upto: usize) -> Vec<Vec<usize>> {
        let mut all: Vec<(usize, Vec<usize>)> =
            (0..q.vertex_count()).map(|v| (v, Vec::new())).collect();
        let mut level = all.clone();
        for _ in 1..=upto {
            let mut next = Vec::new();
            for (src, w) in &level {
                let end = if w.is_empty() {
                    *src
                } else {
                    q.arrows[*w.last().unwrap()].target
                };
                for (ai, a) in q.arrows.iter().enumerate() {
                    if a.source == end {
                        let mut nw = w.clone();
                        nw.push(ai);
                        next.push((*src, nw));
                    }
                }
            }
            level = next.clone();
            all.extend(next);
        }
        all.into_iter()
            .filter(|(_, w)| !kill.iter().any(|k| find_factor(w, k).is_some()))
            .map(|(_, w)| w)
            .collect()
    }

    #[test]
    fn hereditary_a2_basis() {
        let (q, ideal) = a2();
        let g = groebner(&q, &ideal, 10).unwrap();
        assert!(g.finite);
        assert_eq!(g.dim(), Some(3));
        let names: Vec<String> = g.basis.iter().map(|p| p.display(&q)).collect();
        assert_eq!(names, vec!["e_1", "e_2", "a"]);
    }

    #[test]
    fn four_cycle_basis_of_eleven_paths() {
        let (q, ideal) = four_cycle();
        let g = groebner(&q, &ideal, 10).unwrap();
        assert!(g.finite);
        let names: Vec<String> = g.basis.iter().map(|p| p.display(&q)).collect();
        assert_eq!(
            names,
            vec!["e_1", "e_2", "e_3", "e_4", "a", "b", "g", "d", "b*a", "g*b", "g*b*a"]
        );

        // cross-check against the brute-force subword-elimination oracle
        let kill: Vec<Vec<usize>> = ideal
            .generators
            .iter()
            .map(|r| r.terms[0].1.word.clone())
            .collect();
        let oracle = brute_force_monomial_basis(&q, &kill, 9);
        assert_eq!(oracle.len(), 11);
    }

    #[test]
    fn loop_algebra_is_flagged_infinite() {
        let (q, ideal) = one_loop();
        let g = groebner(&q, &ideal, 5).unwrap();
        assert!(!g.finite);
        assert_eq!(g.dim(), None);
    }

    #[test]
    fn normal_form_kills_relations_and_fixes_basis() {
        let (q, ideal) = four_cycle();
        let g = groebner(&q, &ideal, 10).unwrap();
        let f = q_field();
        let gi = q.arrow_index("g").unwrap();
        let di = q.arrow_index("d").unwrap();
        let dg = Path::from_word(&q, vec![gi, di]).unwrap();
        assert!(g.normal_form(vec![(f.one(), dg)]).is_empty());

        let e1 = Path::vertex(0);
        let nf = g.normal_form(vec![(f.one(), e1.clone())]);
        assert_eq!(nf, vec![(f.one(), e1)]);

        let ai = q.arrow_index("a").unwrap();
        let bi = q.arrow_index("b").unwrap();
        let ba = Path::from_word(&q, vec![ai, bi]).unwrap();
        let nf = g.normal_form(vec![(f.one(), ba.clone())]);
        assert_eq!(nf, vec![(f.one(), ba)]);
    }

    #[test]
    fn normal_form_is_idempotent_and_linear() {
        let (q, ideal) = four_cycle();
        let g = groebner(&q, &ideal, 10).unwrap();
        let f = q_field();
        let ai = q.arrow_index("a").unwrap();
        let di = q.arrow_index("d").unwrap();
        let ad = Path::from_word(&q, vec![di, ai]).unwrap();
        let comb = vec![
            (f.from_i64(3), ad),
            (f.from_i64(2), Path::vertex(1)),
            (f.from_i64(-2), Path::vertex(1)),
        ];
        let nf = g.normal_form(comb);
        assert!(nf.is_empty());
    }

    #[test]
    fn monomial_ideal_rules_are_the_generators() {
        let (q, ideal) = four_cycle();
        let g = groebner(&q, &ideal, 10).unwrap();
        let leads: Vec<String> = g.rules.iter().map(|r| r.lead.display(&q)).collect();
        assert_eq!(leads, vec!["d*g", "a*d"]);
        assert!(g.rules.iter().all(|r| r.rhs.is_empty()));
    }

    #[test]
    fn basis_count_independent_of_arrow_declaration_order() {
        // same 4-cycle, arrows declared in a different order
        let q = Quiver::new(
            vec!["1".into(), "2".into(), "3".into(), "4".into()],
            vec![
                ("d".into(), "4".into(), "1".into()),
                ("g".into(), "3".into(), "4".into()),
                ("b".into(), "2".into(), "3".into()),
                ("a".into(), "1".into(), "2".into()),
            ],
        )
        .unwrap();
        let f = q_field();
        let gi = q.arrow_index("g").unwrap();
        let di = q.arrow_index("d").unwrap();
        let ai = q.arrow_index("a").unwrap();
        let dg = Path::from_word(&q, vec![gi, di]).unwrap();
        let ad = Path::from_word(&q, vec![di, ai]).unwrap();
        let ideal = RelationIdeal::new(
            f,
            vec![
                crate::quiver::Relation {
                    terms: vec![(f.one(), dg)],
                },
                crate::quiver::Relation {
                    terms: vec![(f.one(), ad)],
                },
            ],
        )
        .unwrap();
        let g = groebner(&q, &ideal, 10).unwrap();
        assert_eq!(g.dim(), Some(11));
    }

    #[test]
    fn cap_smaller_than_relations_is_an_error() {
        let (q, ideal) = four_cycle();
        assert!(matches!(
            groebner(&q, &ideal, 1),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn commuting_square_completion() {
        // two paths 1 -> 4 identified: b*a = d*c
        let q = Quiver::new(
            vec!["1".into(), "2".into(), "3".into(), "4".into()],
            vec![
                ("a".into(), "1".into(), "2".into()),
                ("b".into(), "2".into(), "4".into()),
                ("c".into(), "1".into(), "3".into()),
                ("d".into(), "3".into(), "4".into()),
            ],
        )
        .unwrap();
        let f = q_field();
        let ba = Path::from_word(&q, vec![0, 1]).unwrap();
        let dc = Path::from_word(&q, vec![2, 3]).unwrap();
        let ideal = RelationIdeal::new(
            f,
            vec![crate::quiver::Relation {
                terms: vec![(f.one(), ba), (f.from_i64(-1), dc)],
            }],
        )
        .unwrap();
        let g = groebner(&q, &ideal, 10).unwrap();
        assert!(g.finite);
        // 4 vertices + 4 arrows + one surviving length-2 path
        assert_eq!(g.dim(), Some(9));
    }
}
