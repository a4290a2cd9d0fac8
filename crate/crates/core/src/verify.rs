//! Evaluation of the homological bound statements on a pair (algebra,
//! removed vertex set), plus seeded random search for violations.
//!
//! Verdict propagation: every dimension is an interval — `Exact(n)` is the
//! point `[n, n]`, `AtLeast(n)` is `[n, oo]`, the zero module contributes
//! `-oo`. A bound `x <= y` is *met* when it holds for every value in the
//! intervals, *unmet* when it fails for every value, and *undetermined*
//! otherwise, so a capped computation can refute a bound but never silently
//! confirm one. A statement with unmet hypotheses is vacuous, never failed;
//! a statement with undetermined inputs is undetermined.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::BasicAlgebra;
use crate::corner::{corner, CornerAlgebra};
use crate::dsl;
use crate::error::Result;
use crate::field::FieldSpec;
use crate::groebner::groebner;
use crate::homology::{
    blocks_nilpotent, ext_table, is_section, lift_chain_map, minimal_resolution, proj_dim,
    top_blocks, Dim, ExtTable, ProjSum, Resolution,
};
use crate::matrix::{Matrix, RowSpace};
use crate::module::{hom_space, ModuleMap, ModuleRep};
use crate::quiver::{Path, Quiver, Relation, RelationIdeal};

// ---------------------------------------------------------------------------
// tri-state logic and interval arithmetic over dimension verdicts

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tri {
    Met,
    Unmet,
    Undetermined,
}

impl Tri {
    pub fn and(self, other: Tri) -> Tri {
        match (self, other) {
            (Tri::Unmet, _) | (_, Tri::Unmet) => Tri::Unmet,
            (Tri::Undetermined, _) | (_, Tri::Undetermined) => Tri::Undetermined,
            _ => Tri::Met,
        }
    }

    pub fn from_bool(b: bool) -> Tri {
        if b {
            Tri::Met
        } else {
            Tri::Unmet
        }
    }

    pub fn all(iter: impl IntoIterator<Item = Tri>) -> Tri {
        iter.into_iter().fold(Tri::Met, Tri::and)
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Tri::Met => "met",
            Tri::Unmet => "unmet",
            Tri::Undetermined => "undetermined",
        }
    }
}

impl Serialize for Tri {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Closed interval of possible values; `lo = hi = i64::MIN` encodes -oo and
/// `hi = i64::MAX` encodes an unbounded top.
#[derive(Clone, Copy, Debug)]
pub struct Iv {
    lo: i64,
    hi: i64,
}

impl Iv {
    pub fn of(d: &Dim) -> Iv {
        match d {
            Dim::NegInf => Iv {
                lo: i64::MIN,
                hi: i64::MIN,
            },
            Dim::Exact(n) => Iv { lo: *n, hi: *n },
            Dim::AtLeast(n) => Iv {
                lo: *n,
                hi: i64::MAX,
            },
        }
    }

    pub fn point(n: i64) -> Iv {
        Iv { lo: n, hi: n }
    }

    fn is_neg_inf(&self) -> bool {
        self.lo == i64::MIN && self.hi == i64::MIN
    }

    /// Sum, with -oo absorbing.
    pub fn add(&self, other: &Iv) -> Iv {
        if self.is_neg_inf() || other.is_neg_inf() {
            return Iv {
                lo: i64::MIN,
                hi: i64::MIN,
            };
        }
        Iv {
            lo: self.lo.saturating_add(other.lo),
            hi: if self.hi == i64::MAX || other.hi == i64::MAX {
                i64::MAX
            } else {
                self.hi + other.hi
            },
        }
    }

    pub fn shift(&self, c: i64) -> Iv {
        self.add(&Iv::point(c))
    }

    pub fn max(&self, other: &Iv) -> Iv {
        Iv {
            lo: self.lo.max(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    pub fn min(&self, other: &Iv) -> Iv {
        Iv {
            lo: self.lo.min(other.lo),
            hi: self.hi.min(other.hi),
        }
    }

    pub fn le(&self, other: &Iv) -> Tri {
        if self.hi <= other.lo {
            Tri::Met
        } else if self.lo > other.hi {
            Tri::Unmet
        } else {
            Tri::Undetermined
        }
    }

    pub fn lt(&self, other: &Iv) -> Tri {
        if self.hi < other.lo {
            Tri::Met
        } else if self.lo >= other.hi {
            Tri::Unmet
        } else {
            Tri::Undetermined
        }
    }

    pub fn eq(&self, other: &Iv) -> Tri {
        if self.lo == self.hi && other.lo == other.hi && self.lo == other.lo {
            Tri::Met
        } else if self.hi < other.lo || self.lo > other.hi {
            Tri::Unmet
        } else {
            Tri::Undetermined
        }
    }
}

/// "Is this dimension finite?" — provable only for exact verdicts.
fn finite(d: &Dim) -> Tri {
    match d {
        Dim::Exact(_) | Dim::NegInf => Tri::Met,
        Dim::AtLeast(_) => Tri::Undetermined,
    }
}

/// Resolution-length reading of a projective dimension inside additive
/// bounds: the zero module contributes -1 (its resolution is empty), not the
/// absorbing -oo sentinel, so `r + pd F(syzygy) + 1` degrades to `r` when
/// the syzygy vanishes.
fn as_length(d: &Dim) -> Dim {
    match d {
        Dim::NegInf => Dim::Exact(-1),
        other => *other,
    }
}

// ---------------------------------------------------------------------------
// reports

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Fails,
    Vacuous,
    Undetermined,
}

impl Outcome {
    pub fn as_str(&self) -> &'static str {
        match self {
            Outcome::Holds => "holds",
            Outcome::Fails => "fails",
            Outcome::Vacuous => "vacuous",
            Outcome::Undetermined => "undetermined",
        }
    }
}

impl Serialize for Outcome {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StatementReport {
    pub statement_id: String,
    pub description: String,
    pub hypotheses: Tri,
    pub verdict: Outcome,
    pub witnesses: BTreeMap<String, String>,
}

impl StatementReport {
    fn build(
        id: &str,
        description: &str,
        hyp: Tri,
        conclusion: impl FnOnce() -> Tri,
        witnesses: BTreeMap<String, String>,
    ) -> StatementReport {
        let verdict = match hyp {
            Tri::Unmet => Outcome::Vacuous,
            Tri::Undetermined => Outcome::Undetermined,
            Tri::Met => match conclusion() {
                Tri::Met => Outcome::Holds,
                Tri::Unmet => Outcome::Fails,
                Tri::Undetermined => Outcome::Undetermined,
            },
        };
        StatementReport {
            statement_id: id.into(),
            description: description.into(),
            hypotheses: hyp,
            verdict,
            witnesses,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub e_set: Vec<String>,
    pub cap: usize,
    pub statements: Vec<StatementReport>,
}

impl CheckReport {
    pub fn exit_code(&self) -> i32 {
        if self.statements.iter().any(|s| s.verdict == Outcome::Fails) {
            2
        } else if self
            .statements
            .iter()
            .any(|s| s.verdict == Outcome::Undetermined)
        {
            3
        } else {
            0
        }
    }

    pub fn failures(&self) -> Vec<&StatementReport> {
        self.statements
            .iter()
            .filter(|s| s.verdict == Outcome::Fails)
            .collect()
    }
}

// ---------------------------------------------------------------------------
// per-algebra context, shared across the removal sets of one trial

pub struct TrialContext {
    pub algebra: Arc<BasicAlgebra>,
    pub cap: usize,
    pub simple_tables: Vec<ExtTable>,
    /// Tables of the duals over the opposite algebra; `pd` there is the
    /// injective dimension here.
    pub op_simple_tables: Vec<ExtTable>,
    pub gldim: Dim,
    /// Named test modules with their resolutions and tables.
    pub pool: Vec<PoolModule>,
}

pub struct PoolModule {
    pub name: String,
    pub module: ModuleRep,
    pub resolution: Resolution,
    pub table: ExtTable,
}

impl TrialContext {
    pub fn new(algebra: &Arc<BasicAlgebra>, cap: usize, extra: Vec<(String, ModuleRep)>) -> Self {
        let n = algebra.n;
        let simple_tables: Vec<ExtTable> = (0..n)
            .map(|i| ext_table(&ModuleRep::simple(Arc::clone(algebra), i), cap))
            .collect();
        let op = Arc::new(algebra.opposite());
        let op_simple_tables: Vec<ExtTable> = (0..n)
            .map(|i| {
                ext_table(
                    &ModuleRep::simple(Arc::clone(algebra), i).dual(&op),
                    cap,
                )
            })
            .collect();
        let gldim = simple_tables
            .iter()
            .fold(Dim::NegInf, |acc, t| acc.max(&t.pd));

        let mut pool: Vec<(String, ModuleRep)> = Vec::new();
        for i in 0..n {
            pool.push((
                format!("S_{}", algebra.vertex_labels[i]),
                ModuleRep::simple(Arc::clone(algebra), i),
            ));
        }
        for i in 0..n {
            pool.push((
                format!("P_{}", algebra.vertex_labels[i]),
                ModuleRep::projective(Arc::clone(algebra), i),
            ));
        }
        for i in 0..n {
            let p = ModuleRep::projective(Arc::clone(algebra), i);
            let (rad, _) = p.radical_submodule();
            if !rad.is_zero() {
                pool.push((format!("radP_{}", algebra.vertex_labels[i]), rad));
            }
        }
        pool.extend(extra);

        let pool = pool
            .into_iter()
            .filter(|(_, m)| !m.is_zero())
            .map(|(name, module)| {
                let resolution = minimal_resolution(&module, cap);
                let table = ExtTable {
                    rows: resolution.terms(),
                    capped: resolution.capped,
                    pd: resolution.pd(),
                };
                PoolModule {
                    name,
                    module,
                    resolution,
                    table,
                }
            })
            .collect();

        TrialContext {
            algebra: Arc::clone(algebra),
            cap,
            simple_tables,
            op_simple_tables,
            gldim,
            pool,
        }
    }

    /// id of the semisimple module at the given vertex set.
    pub fn inj_dim_of(&self, e_set: &[usize]) -> Dim {
        e_set
            .iter()
            .fold(Dim::NegInf, |acc, &j| acc.max(&self.op_simple_tables[j].pd))
    }
}

// ---------------------------------------------------------------------------
// check_all

/// Evaluate every statement on `(A, e_set)` with the default module pool.
pub fn check_all(algebra: &Arc<BasicAlgebra>, e_set: &[usize], cap: usize) -> Result<CheckReport> {
    let ctx = TrialContext::new(algebra, cap, Vec::new());
    check_with_context(&ctx, e_set)
}

pub fn check_with_context(ctx: &TrialContext, e_set: &[usize]) -> Result<CheckReport> {
    let algebra = &ctx.algebra;
    let cap = ctx.cap;
    let cor = corner(algebra, e_set)?;
    let e_set = cor.removed.clone();

    let gldim_a = ctx.gldim;
    let gldim_g = crate::homology::global_dim(&cor.algebra, cap);
    let f_ea = cor.reduce_removed_projectives();
    let pd_f_ea = proj_dim(&f_ea, cap);

    let s_e_table = ExtTable::sum(
        &e_set
            .iter()
            .map(|&j| &ctx.simple_tables[j])
            .collect::<Vec<_>>(),
    );
    let pd_s_e = s_e_table.pd;
    let id_s_e = ctx.inj_dim_of(&e_set);
    let d_e_s_e = s_e_table.d_e(&e_set);
    let primitive = e_set.len() == 1;

    // Ext^1(S_e, S_e) = 0 and self-orthogonality, read off the table
    let ext1_zero = {
        let vals: Vec<Option<usize>> = e_set.iter().map(|&j| s_e_table.entry(1, j)).collect();
        if vals.iter().any(|v| matches!(v, Some(x) if *x > 0)) {
            Tri::Unmet
        } else if vals.iter().any(|v| v.is_none()) {
            Tri::Undetermined
        } else {
            Tri::Met
        }
    };
    let self_orth = {
        let found_nonzero = s_e_table
            .rows
            .iter()
            .skip(1)
            .any(|row| e_set.iter().any(|&j| row[j] > 0));
        if found_nonzero {
            Tri::Unmet
        } else if s_e_table.capped {
            Tri::Undetermined
        } else {
            Tri::Met
        }
    };

    // reductions of the pool
    struct PoolData {
        pd_a: Dim,
        d_e: Dim,
        pd_f: Dim,
        f_is_zero: bool,
        in_add_s_e: bool,
    }
    let pool_data: Vec<PoolData> = ctx
        .pool
        .iter()
        .map(|pm| {
            let f_m = cor.reduce(&pm.module).expect("same parent");
            let f_is_zero = f_m.is_zero();
            let pd_f = proj_dim(&f_m, cap);
            let kept_zero = cor.kept.iter().all(|&k| pm.module.dims[k] == 0);
            let rad_zero = pm
                .module
                .radical_spaces()
                .iter()
                .all(|s| s.dim() == 0);
            PoolData {
                pd_a: pm.table.pd,
                d_e: pm.table.d_e(&e_set),
                pd_f,
                f_is_zero,
                in_add_s_e: kept_zero && rad_zero,
            }
        })
        .collect();

    let mut base_witness = BTreeMap::new();
    base_witness.insert("gldim_A".into(), gldim_a.to_string());
    base_witness.insert("gldim_Gamma".into(), gldim_g.to_string());
    base_witness.insert("pd_S_e".into(), pd_s_e.to_string());
    base_witness.insert("id_S_e".into(), id_s_e.to_string());
    base_witness.insert("d_e_S_e".into(), d_e_s_e.to_string());
    base_witness.insert("pd_F_eA".into(), pd_f_ea.to_string());
    base_witness.insert("ext1_S_e".into(), ext1_zero.as_str().into());
    base_witness.insert("self_orthogonal".into(), self_orth.as_str().into());
    base_witness.insert("e_primitive".into(), primitive.to_string());

    let mut statements = Vec::new();

    // S1: pd_G F(M) <= max(d_e(M) + pd_G F(eA), pd_A M), with equality when
    // d_e(M) + pd_G F(eA) < pd_A M - 1 or d_e(M) = -1
    {
        let mut w = base_witness.clone();
        let mut parts = Vec::new();
        let mut violations = Vec::new();
        for (pm, pd) in ctx.pool.iter().zip(&pool_data) {
            let lhs = Iv::of(&pd.pd_f);
            let bound = Iv::of(&pd.d_e)
                .add(&Iv::of(&pd_f_ea))
                .max(&Iv::of(&pd.pd_a));
            let ineq = lhs.le(&bound);
            if ineq == Tri::Unmet {
                violations.push(pm.name.clone());
            }
            parts.push(ineq);
            let trigger_lt = Iv::of(&pd.d_e)
                .add(&Iv::of(&pd_f_ea))
                .lt(&Iv::of(&pd.pd_a).shift(-1));
            let trigger = match (trigger_lt, pd.d_e == Dim::Exact(-1)) {
                (_, true) => Tri::Met,
                (t, false) => t,
            };
            let eqcheck = match trigger {
                Tri::Unmet => Tri::Met,
                Tri::Undetermined => Tri::Undetermined,
                Tri::Met => {
                    let t = lhs.eq(&Iv::of(&pd.pd_a));
                    if t == Tri::Unmet {
                        violations.push(format!("{} (equality clause)", pm.name));
                    }
                    t
                }
            };
            parts.push(eqcheck);
        }
        w.insert("modules_checked".into(), ctx.pool.len().to_string());
        w.insert("violations".into(), violations.join("; "));
        statements.push(StatementReport::build(
            "S1",
            "pd_G F(M) <= max(d_e(M) + pd_G F(eA), pd_A M) for every test module, with the equality clause",
            Tri::Met,
            || Tri::all(parts),
            w,
        ));
    }

    // S2: gl.dim G <= max(id S_e + pd_G F(eA), gl.dim A), equality when
    // id + pd_G F(eA) < gl.dim A - 1
    {
        let bound = Iv::of(&id_s_e).add(&Iv::of(&pd_f_ea)).max(&Iv::of(&gldim_a));
        let ineq = Iv::of(&gldim_g).le(&bound);
        let trigger = Iv::of(&id_s_e)
            .add(&Iv::of(&pd_f_ea))
            .lt(&Iv::of(&gldim_a).shift(-1));
        let eqcheck = match trigger {
            Tri::Unmet => Tri::Met,
            Tri::Undetermined => Tri::Undetermined,
            Tri::Met => Iv::of(&gldim_g).eq(&Iv::of(&gldim_a)),
        };
        statements.push(StatementReport::build(
            "S2",
            "gl.dim G <= max(id S_e + pd_G F(eA), gl.dim A), with the equality clause",
            Tri::Met,
            || ineq.and(eqcheck),
            base_witness.clone(),
        ));
    }

    // S3: under self-orthogonality: (1) pd_G F(eA) = pd S_e - 1 when S_e is
    // not projective, (2) gl.dim G <= max(id + pd - 1, gl.dim A) with the
    // equality clause, (3) gl.dim A finite forces gl.dim G finite
    {
        let part1 = match Iv::point(1).le(&Iv::of(&pd_s_e)) {
            Tri::Unmet => Tri::Met, // S_e projective: no claim
            Tri::Undetermined => Tri::Undetermined,
            Tri::Met => Iv::of(&pd_f_ea).eq(&Iv::of(&pd_s_e).shift(-1)),
        };
        let bound = Iv::of(&id_s_e)
            .add(&Iv::of(&pd_s_e))
            .shift(-1)
            .max(&Iv::of(&gldim_a));
        let part2 = Iv::of(&gldim_g).le(&bound);
        let trigger = Iv::of(&id_s_e).add(&Iv::of(&pd_s_e)).lt(&Iv::of(&gldim_a));
        let part2eq = match trigger {
            Tri::Unmet => Tri::Met,
            Tri::Undetermined => Tri::Undetermined,
            Tri::Met => Iv::of(&gldim_g).eq(&Iv::of(&gldim_a)),
        };
        let part3 = match finite(&gldim_a) {
            Tri::Met => finite(&gldim_g),
            _ => Tri::Met, // no claim when gl.dim A is not known finite
        };
        statements.push(StatementReport::build(
            "S3",
            "self-orthogonal S_e: pd_G F(eA) = pd S_e - 1 (S_e non-projective); gl.dim G <= max(id+pd-1, gl.dim A); finiteness descends",
            self_orth,
            || Tri::all([part1, part2, part2eq, part3]),
            base_witness.clone(),
        ));
    }

    // S4: r = id S_e: pd_A M <= r + pd_G F(syzygy^{r+1} M) + 1 per module,
    // and gl.dim A <= r + gl.dim G + 1
    {
        let mut parts = Vec::new();
        let mut w = base_witness.clone();
        let global = Iv::of(&gldim_a).le(&Iv::of(&id_s_e).add(&Iv::of(&gldim_g)).shift(1));
        parts.push(global);
        match id_s_e {
            Dim::Exact(r) if r >= 0 => {
                let mut violations = Vec::new();
                for pm in &ctx.pool {
                    let omega = crate::homology::syzygy(&pm.module, (r + 1) as usize);
                    let Some(omega) = omega else {
                        parts.push(Tri::Undetermined);
                        continue;
                    };
                    let f_omega = cor.reduce(&omega).expect("same parent");
                    let pd_f_omega = as_length(&proj_dim(&f_omega, cap));
                    let rhs = Iv::point(r).add(&Iv::of(&pd_f_omega)).shift(1);
                    let t = Iv::of(&pm.table.pd).le(&rhs);
                    if t == Tri::Unmet {
                        violations.push(pm.name.clone());
                    }
                    parts.push(t);
                }
                w.insert("violations".into(), violations.join("; "));
            }
            Dim::Exact(_) | Dim::NegInf => {}
            Dim::AtLeast(_) => parts.push(Tri::Undetermined),
        }
        statements.push(StatementReport::build(
            "S4",
            "with r = id S_e: pd_A M <= r + pd_G F(O^{r+1} M) + 1 per module; gl.dim A <= r + gl.dim G + 1",
            Tri::Met,
            || Tri::all(parts),
            w,
        ));
    }

    // S5: gl.dim A <= min(id S_e, pd S_e) + gl.dim G + 1
    {
        let rhs = Iv::of(&id_s_e)
            .min(&Iv::of(&pd_s_e))
            .add(&Iv::of(&gldim_g))
            .shift(1);
        statements.push(StatementReport::build(
            "S5",
            "gl.dim A <= min(id S_e, pd S_e) + gl.dim G + 1",
            Tri::Met,
            || Iv::of(&gldim_a).le(&rhs),
            base_witness.clone(),
        ));
    }

    // S6: with Ext^1(S_e,S_e) = 0: F(M) = 0 iff M is a sum of removed simples
    {
        let mut parts = Vec::new();
        let mut violations = Vec::new();
        for (pm, pd) in ctx.pool.iter().zip(&pool_data) {
            let t = Tri::from_bool(pd.f_is_zero == pd.in_add_s_e);
            if t == Tri::Unmet {
                violations.push(pm.name.clone());
            }
            parts.push(t);
        }
        let mut w = base_witness.clone();
        w.insert("violations".into(), violations.join("; "));
        statements.push(StatementReport::build(
            "S6",
            "with Ext^1(S_e,S_e) = 0: F(M) = 0 iff M lies in add(S_e)",
            ext1_zero,
            || Tri::all(parts),
            w,
        ));
    }

    // S7: with Ext^1(S_e,S_e) = 0: pd_A M <= pd S_e + pd_G F(M) + 1 per
    // module; gl.dim A <= pd S_e + gl.dim G + 1; and the min-form bound
    {
        let mut parts = Vec::new();
        let mut violations = Vec::new();
        for (pm, pd) in ctx.pool.iter().zip(&pool_data) {
            let rhs = Iv::of(&pd_s_e).add(&Iv::of(&as_length(&pd.pd_f))).shift(1);
            let t = Iv::of(&pd.pd_a).le(&rhs);
            if t == Tri::Unmet {
                violations.push(pm.name.clone());
            }
            parts.push(t);
        }
        parts.push(Iv::of(&gldim_a).le(&Iv::of(&pd_s_e).add(&Iv::of(&gldim_g)).shift(1)));
        parts.push(
            Iv::of(&gldim_a).le(
                &Iv::of(&id_s_e)
                    .min(&Iv::of(&pd_s_e))
                    .add(&Iv::of(&gldim_g))
                    .shift(1),
            ),
        );
        let mut w = base_witness.clone();
        w.insert("violations".into(), violations.join("; "));
        statements.push(StatementReport::build(
            "S7",
            "with Ext^1(S_e,S_e) = 0: pd_A M <= pd S_e + pd_G F(M) + 1 per module, and the global bounds",
            ext1_zero,
            || Tri::all(parts),
            w,
        ));
    }

    // S8: self-orthogonal S_e: gl.dim A <= 2 gl.dim G + 2
    {
        let rhs = Iv::of(&gldim_g).add(&Iv::of(&gldim_g)).shift(2);
        statements.push(StatementReport::build(
            "S8",
            "self-orthogonal S_e: gl.dim A <= 2 gl.dim G + 2",
            self_orth,
            || Iv::of(&gldim_a).le(&rhs),
            base_witness.clone(),
        ));
    }

    // S9: self-orthogonal S_e: gl.dim G finite iff gl.dim A finite
    {
        let both = finite(&gldim_a).and(finite(&gldim_g));
        statements.push(StatementReport::build(
            "S9",
            "self-orthogonal S_e: gl.dim G < oo iff gl.dim A < oo",
            self_orth,
            || match both {
                Tri::Met => Tri::Met,
                // a cap can never prove either side infinite
                _ => Tri::Undetermined,
            },
            base_witness.clone(),
        ));
    }

    // S10: e primitive, Ext^1 = 0, both pd's finite: pd_G F(eA) >= pd S_e - 1
    // and d_e(S_e) <= max(0, pd S_e - 2)
    let s10_hyp = Tri::from_bool(primitive)
        .and(ext1_zero)
        .and(finite(&pd_s_e))
        .and(finite(&pd_f_ea));
    {
        let part1 = Iv::of(&pd_s_e).shift(-1).le(&Iv::of(&pd_f_ea));
        let part2 = Iv::of(&d_e_s_e).le(&Iv::point(0).max(&Iv::of(&pd_s_e).shift(-2)));
        statements.push(StatementReport::build(
            "S10",
            "e primitive, Ext^1(S_e,S_e)=0, finite pd's: pd_G F(eA) >= pd S_e - 1 and d_e(S_e) <= max(0, pd S_e - 2)",
            s10_hyp,
            || part1.and(part2),
            base_witness.clone(),
        ));
    }

    // S11: additionally S_e not self-orthogonal: Ext^{d-1}(S_e,S_e) != 0 and
    // pd_G F(eA) >= 3, pd S_e >= 4. Expected vacuous whenever S12 holds.
    {
        let not_self_orth = match self_orth {
            Tri::Met => Tri::Unmet,
            Tri::Unmet => Tri::Met,
            Tri::Undetermined => Tri::Undetermined,
        };
        let hyp = s10_hyp.and(not_self_orth);
        let d = d_e_s_e;
        statements.push(StatementReport::build(
            "S11",
            "additionally S_e not self-orthogonal: Ext^{d_e(S_e)-1}(S_e,S_e) != 0, pd_G F(eA) >= 3, pd S_e >= 4",
            hyp,
            || {
                let ext_prev = match d {
                    Dim::Exact(dv) if dv >= 1 => {
                        let row = (dv - 1) as usize;
                        match e_set
                            .iter()
                            .map(|&j| s_e_table.entry(row, j))
                            .try_fold(0usize, |acc, v| v.map(|x| acc + x))
                        {
                            Some(total) => Tri::from_bool(total > 0),
                            None => Tri::Undetermined,
                        }
                    }
                    _ => Tri::Undetermined,
                };
                let bounds = Iv::point(3)
                    .le(&Iv::of(&pd_f_ea))
                    .and(Iv::point(4).le(&Iv::of(&pd_s_e)));
                ext_prev.and(bounds)
            },
            base_witness.clone(),
        ));
    }

    // S12: e primitive, Ext^1(S_e,S_e) = 0, both pd's finite imply S_e
    // self-orthogonal
    {
        statements.push(StatementReport::build(
            "S12",
            "e primitive, Ext^1(S_e,S_e)=0, pd_A S_e and pd_G F(eA) finite: S_e is self-orthogonal",
            s10_hyp,
            || self_orth,
            base_witness.clone(),
        ));
    }

    // S13: gl.dim A bounds the projective dimension of every test module
    {
        let mut parts = Vec::new();
        let mut violations = Vec::new();
        for pm in &ctx.pool {
            let t = Iv::of(&pm.table.pd).le(&Iv::of(&gldim_a));
            if t == Tri::Unmet {
                violations.push(pm.name.clone());
            }
            parts.push(t);
        }
        let mut w = base_witness.clone();
        w.insert("violations".into(), violations.join("; "));
        statements.push(StatementReport::build(
            "S13",
            "gl.dim A = max over simples of pd, and bounds pd of every test module",
            Tri::Met,
            || Tri::all(parts),
            w,
        ));
    }

    // S14: functor properties: kept projectives and simples map to their
    // corner counterparts, F(S_e) = 0, and resolutions of modules with
    // d_e = -1 reduce to minimal corner resolutions
    {
        let mut parts = Vec::new();
        // (1) + (3): kept projectives hit every corner projective
        for (ci, &j) in cor.kept.iter().enumerate() {
            let fp = cor
                .reduce(&ModuleRep::projective(Arc::clone(algebra), j))
                .expect("same parent");
            let pg = ModuleRep::projective(Arc::clone(&cor.algebra), ci);
            let same = fp.dims == pg.dims
                && fp.actions.iter().all(|(g, m)| m == &pg.actions[g]);
            parts.push(Tri::from_bool(same));
        }
        // (2) kept simples stay simple
        for (ci, &j) in cor.kept.iter().enumerate() {
            let fs = cor
                .reduce(&ModuleRep::simple(Arc::clone(algebra), j))
                .expect("same parent");
            let sg = ModuleRep::simple(Arc::clone(&cor.algebra), ci);
            parts.push(Tri::from_bool(
                fs.dims == sg.dims && fs.actions.values().all(|m| m.is_zero()),
            ));
        }
        // (5) removed simples vanish
        for &j in &e_set {
            let fs = cor
                .reduce(&ModuleRep::simple(Arc::clone(algebra), j))
                .expect("same parent");
            parts.push(Tri::from_bool(fs.is_zero()));
        }
        // (4) modules with no Ext against S_e: F of the minimal resolution
        // is a minimal resolution over the corner
        for (pm, pd) in ctx.pool.iter().zip(&pool_data) {
            if pd.d_e != Dim::Exact(-1) {
                continue;
            }
            parts.push(reduced_resolution_is_minimal(&cor, pm, &pd.pd_f));
        }
        statements.push(StatementReport::build(
            "S14",
            "functor properties: projectives, simples, kernel and preservation of minimal resolutions",
            Tri::Met,
            || Tri::all(parts),
            base_witness.clone(),
        ));
    }

    Ok(CheckReport {
        e_set: e_set
            .iter()
            .map(|&v| algebra.vertex_labels[v].clone())
            .collect(),
        cap,
        statements,
    })
}

/// Apply the reduction functor to a minimal resolution and check it stays a
/// minimal resolution (radical differentials, exact, same length).
fn reduced_resolution_is_minimal(cor: &CornerAlgebra, pm: &PoolModule, pd_f: &Dim) -> Tri {
    let res = &pm.resolution;
    if res.capped {
        return Tri::Undetermined;
    }
    let f_m = cor.reduce(&pm.module).expect("same parent");
    // reduce every term and differential
    let f_terms: Vec<ModuleRep> = res
        .sums
        .iter()
        .map(|s| cor.reduce(&s.module).expect("same parent"))
        .collect();
    let mut ranks = Vec::new();
    for (i, d) in res.diffs.iter().enumerate() {
        let fd = cor.reduce_map(d, &f_terms[i + 1], &f_terms[i]);
        // radical image over the corner
        if !fd.is_radical(&f_terms[i]) {
            return Tri::Unmet;
        }
        ranks.push(fd.rank());
    }
    let aug = res.aug.as_ref().expect("nonzero module");
    let f_aug = cor.reduce_map(aug, &f_terms[0], &f_m);
    if f_aug.rank() != f_m.dim() {
        return Tri::Unmet;
    }
    // exactness by rank bookkeeping
    let mut prev = f_aug.rank();
    for i in 0..res.len() - 1 {
        if ranks[i] + prev != f_terms[i].dim() {
            return Tri::Unmet;
        }
        prev = ranks[i];
    }
    if let Some(last) = f_terms.last() {
        let incoming = if res.len() == 1 {
            f_aug.rank()
        } else {
            ranks[res.len() - 2]
        };
        if incoming != last.dim() {
            return Tri::Unmet;
        }
    }
    // lengths agree: pd_G F(M) equals pd_A M
    match (res.pd(), pd_f) {
        (Dim::Exact(a), Dim::Exact(b)) => Tri::from_bool(a == *b),
        _ => Tri::Undetermined,
    }
}

// ---------------------------------------------------------------------------
// random generation

#[derive(Clone, Debug, Serialize)]
pub struct FuzzConfig {
    pub seed: u64,
    pub trials: usize,
    pub max_vertices: usize,
    pub max_arrows: usize,
    pub max_relations: usize,
    pub rel_len_min: usize,
    pub rel_len_max: usize,
    pub monomial_only: bool,
    pub cap: Option<usize>,
    pub random_modules: usize,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            seed: 0,
            trials: 50,
            max_vertices: 4,
            max_arrows: 6,
            max_relations: 4,
            rel_len_min: 2,
            rel_len_max: 3,
            monomial_only: true,
            cap: None,
            random_modules: 2,
        }
    }
}

/// One random bound quiver presentation.
pub fn random_presentation(cfg: &FuzzConfig, rng: &mut ChaCha8Rng) -> (Quiver, RelationIdeal) {
    let field = FieldSpec::Rationals;
    let v = rng.gen_range(2..=cfg.max_vertices.max(2));
    let vertices: Vec<String> = (1..=v).map(|i| i.to_string()).collect();
    let arrow_count = rng.gen_range(1..=cfg.max_arrows.max(1));
    let mut arrows = Vec::new();
    for i in 0..arrow_count {
        // mostly forward edges, occasionally arbitrary ones to seed cycles
        let (s, t) = if v >= 2 && rng.gen_ratio(3, 4) {
            let s = rng.gen_range(0..v - 1);
            let t = rng.gen_range(s + 1..v);
            (s, t)
        } else {
            (rng.gen_range(0..v), rng.gen_range(0..v))
        };
        arrows.push((
            format!("a{}", i + 1),
            vertices[s].clone(),
            vertices[t].clone(),
        ));
    }
    let quiver = Quiver::new(vertices, arrows).expect("generated labels");

    // enumerate candidate relation words
    let mut paths: Vec<Vec<usize>> = Vec::new();
    let mut frontier: Vec<Vec<usize>> = (0..quiver.arrows.len()).map(|a| vec![a]).collect();
    for len in 2..=cfg.rel_len_max {
        let mut next = Vec::new();
        for w in &frontier {
            let end = quiver.arrows[*w.last().unwrap()].target;
            for (ai, a) in quiver.arrows.iter().enumerate() {
                if a.source == end {
                    let mut nw = w.clone();
                    nw.push(ai);
                    next.push(nw);
                }
            }
        }
        if len >= cfg.rel_len_min {
            paths.extend(next.iter().cloned());
        }
        frontier = next;
        if paths.len() > 500 {
            break;
        }
    }

    let mut generators = Vec::new();
    if !paths.is_empty() {
        let count = rng.gen_range(0..=cfg.max_relations.min(paths.len()));
        let mut used = Vec::new();
        for _ in 0..count {
            let pick = rng.gen_range(0..paths.len());
            if used.contains(&pick) {
                continue;
            }
            used.push(pick);
            let word = paths[pick].clone();
            let p = Path::from_word(&quiver, word).expect("enumerated path");
            if cfg.monomial_only {
                generators.push(Relation {
                    terms: vec![(field.one(), p)],
                });
            } else {
                // try to pair with a distinct parallel path of the same length
                let parallel: Vec<&Vec<usize>> = paths
                    .iter()
                    .filter(|w| {
                        w.len() == p.word.len()
                            && **w != p.word
                            && quiver.arrows[w[0]].source == p.source
                            && quiver.arrows[*w.last().unwrap()].target == p.target
                    })
                    .collect();
                if !parallel.is_empty() && rng.gen_bool(0.5) {
                    let q =
                        Path::from_word(&quiver, parallel[rng.gen_range(0..parallel.len())].clone())
                            .expect("enumerated path");
                    generators.push(Relation {
                        terms: vec![(field.one(), p), (field.from_i64(-1), q)],
                    });
                } else {
                    generators.push(Relation {
                        terms: vec![(field.one(), p)],
                    });
                }
            }
        }
    }
    let ideal = RelationIdeal::new(field, generators).expect("generated relations are admissible");
    (quiver, ideal)
}

/// A random finitely generated module: the cokernel of a random map between
/// small projective sums.
pub fn random_module(algebra: &Arc<BasicAlgebra>, rng: &mut ChaCha8Rng) -> Option<ModuleRep> {
    let n = algebra.n;
    let field = algebra.field;
    for _ in 0..4 {
        let mut tgt_mults = vec![0usize; n];
        for m in tgt_mults.iter_mut() {
            *m = rng.gen_range(0..=1);
        }
        if tgt_mults.iter().all(|&m| m == 0) {
            tgt_mults[rng.gen_range(0..n)] = 1;
        }
        let mut src_mults = vec![0usize; n];
        for m in src_mults.iter_mut() {
            *m = rng.gen_range(0..=1);
        }
        let tgt = ProjSum::new(Arc::clone(algebra), tgt_mults);
        let src = ProjSum::new(Arc::clone(algebra), src_mults.clone());
        if src.slot_count() == 0 {
            return Some(tgt.module);
        }
        let mut images = Vec::new();
        for (j, _) in src.slots() {
            let mut v = vec![field.zero(); tgt.module.dims[j]];
            for x in v.iter_mut() {
                *x = field.from_i64(rng.gen_range(-1..=1));
            }
            images.push(v);
        }
        let f = src.map_from_gen_images(&tgt.module, &images);
        let (quot, _) = tgt.module.quotient(&f.image_spaces());
        if !quot.is_zero() {
            return Some(quot);
        }
    }
    None
}

/// Largest submodule supported away from the kept vertices; its reduction
/// vanishes.
pub fn annihilated_submodule(m: &ModuleRep, kept: &[usize]) -> ModuleRep {
    let f = m.algebra.field;
    let mut spaces: Vec<RowSpace> = (0..m.algebra.n)
        .map(|c| {
            if kept.contains(&c) {
                RowSpace::empty(f, m.dims[c])
            } else {
                RowSpace::full(f, m.dims[c])
            }
        })
        .collect();
    loop {
        let mut changed = false;
        for (&g, mat) in &m.actions {
            let (t, s) = (m.algebra.elems[g].left, m.algebra.elems[g].right);
            // restrict spaces[t] to the preimage of spaces[s]
            let red = spaces[s].reduction_matrix();
            let cond = mat.mul(&red);
            if cond.cols == 0 {
                continue;
            }
            let basis = spaces[t].basis().clone();
            let test = basis.mul(&cond);
            if test.is_zero() {
                continue;
            }
            let keep = test.left_kernel();
            let new_basis = keep.mul(&basis);
            let new_space = RowSpace::from_rows(&new_basis);
            if new_space.dim() != spaces[t].dim() {
                spaces[t] = new_space;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let (sub, _) = m.submodule(&spaces);
    sub
}

// ---------------------------------------------------------------------------
// fuzz driver

#[derive(Clone, Debug, Default, Serialize)]
pub struct StatementTally {
    pub holds: usize,
    pub fails: usize,
    pub vacuous: usize,
    pub undetermined: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleBundle {
    pub trial: usize,
    pub e_set: Vec<String>,
    pub statement_id: String,
    pub witnesses: BTreeMap<String, String>,
    /// A re-runnable input file reproducing the algebra and removal set.
    pub dsl: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FuzzReport {
    pub config: FuzzConfig,
    pub trials_run: usize,
    pub skipped_infinite: usize,
    pub skipped_large: usize,
    pub checks_evaluated: usize,
    pub per_statement: BTreeMap<String, StatementTally>,
    pub failures: Vec<CounterexampleBundle>,
}

/// Ceiling on the algebra size admitted into a fuzz trial.
const FUZZ_DIM_LIMIT: usize = 40;

pub fn fuzz(cfg: &FuzzConfig) -> FuzzReport {
    let mut report = FuzzReport {
        config: cfg.clone(),
        trials_run: 0,
        skipped_infinite: 0,
        skipped_large: 0,
        checks_evaluated: 0,
        per_statement: BTreeMap::new(),
        failures: Vec::new(),
    };
    for trial in 0..cfg.trials {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(trial as u64 + 1);
        let (quiver, ideal) = random_presentation(cfg, &mut rng);
        let Ok(g) = groebner(&quiver, &ideal, 16) else {
            report.skipped_infinite += 1;
            continue;
        };
        if !g.finite {
            report.skipped_infinite += 1;
            continue;
        }
        let algebra = match crate::algebra::from_presentation(&g) {
            Ok(a) => a,
            Err(_) => {
                report.skipped_infinite += 1;
                continue;
            }
        };
        if algebra.dim() > FUZZ_DIM_LIMIT {
            report.skipped_large += 1;
            continue;
        }
        let cap = cfg.cap.unwrap_or(2 * algebra.dim() + 2);
        let mut extra = Vec::new();
        for k in 0..cfg.random_modules {
            if let Some(m) = random_module(&algebra, &mut rng) {
                extra.push((format!("M{}", k + 1), m));
            }
        }
        let ctx = TrialContext::new(&algebra, cap, extra);
        report.trials_run += 1;

        let n = algebra.n;
        for mask in 1u32..((1u32 << n) - 1) {
            let e_set: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
            let check = check_with_context(&ctx, &e_set).expect("valid removal set");
            report.checks_evaluated += 1;
            for st in &check.statements {
                let tally = report.per_statement.entry(st.statement_id.clone()).or_default();
                match st.verdict {
                    Outcome::Holds => tally.holds += 1,
                    Outcome::Fails => tally.fails += 1,
                    Outcome::Vacuous => tally.vacuous += 1,
                    Outcome::Undetermined => tally.undetermined += 1,
                }
                if st.verdict == Outcome::Fails {
                    let file = dsl::AlgebraFile {
                        field: FieldSpec::Rationals,
                        cap: Some(cap),
                        path_cap: Some(16),
                        quiver: quiver.clone(),
                        ideal: ideal.clone(),
                        modules: Vec::new(),
                        e_set: Some(e_set.clone()),
                        tau: None,
                        distinguished: None,
                    };
                    report.failures.push(CounterexampleBundle {
                        trial,
                        e_set: check.e_set.clone(),
                        statement_id: st.statement_id.clone(),
                        witnesses: st.witnesses.clone(),
                        dsl: dsl::emit(&file),
                    });
                }
            }
        }
    }
    report
}

// ---------------------------------------------------------------------------
// lifted-map properties

#[derive(Clone, Debug, Default, Serialize)]
pub struct LiftPropertyReport {
    pub pairs_tested: usize,
    pub nilpotency_violations: usize,
    pub section_violations: usize,
}

/// Basis of the radical endomorphisms of `M` (image inside rad M).
pub fn radical_endo_basis(m: &ModuleRep) -> Vec<ModuleMap> {
    let f = m.algebra.field;
    let homs = hom_space(m, m).expect("same algebra");
    if homs.is_empty() {
        return Vec::new();
    }
    let rad = m.radical_spaces();
    let reducers: Vec<Matrix> = rad.iter().map(|s| s.reduction_matrix()).collect();
    let viol_len: usize = (0..m.algebra.n)
        .map(|c| m.dims[c] * reducers[c].cols)
        .sum();
    if viol_len == 0 {
        return homs;
    }
    let mut rows = Vec::new();
    for h in &homs {
        let mut row = Vec::with_capacity(viol_len);
        for c in 0..m.algebra.n {
            let r = h.mats[c].mul(&reducers[c]);
            for i in 0..r.rows {
                row.extend_from_slice(r.row(i));
            }
        }
        rows.push(row);
    }
    let sys = Matrix::from_rows(f, rows).expect("rect");
    let kernel = sys.kernel_basis();
    let mut out = Vec::new();
    for b in 0..kernel.cols {
        let mut acc: Option<ModuleMap> = None;
        for (i, h) in homs.iter().enumerate() {
            let c = kernel.get(i, b).clone();
            if f.is_zero(&c) {
                continue;
            }
            let term = h.scale(&c);
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term),
            });
        }
        if let Some(a) = acc {
            out.push(a);
        }
    }
    out
}

/// Fuzzed check of the lifted-map properties: tops of lifts of radical
/// endomorphisms are nilpotent, and lifts of radical maps `M^s -> M^t` are
/// never split injections.
pub fn lift_property_trials(cfg: &FuzzConfig, want_pairs: usize) -> LiftPropertyReport {
    let mut report = LiftPropertyReport::default();
    let mut trial = 0usize;
    while report.pairs_tested < want_pairs && trial < cfg.trials.max(want_pairs * 20) {
        trial += 1;
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x6c69_6674);
        rng.set_stream(trial as u64);
        let (quiver, ideal) = random_presentation(cfg, &mut rng);
        let Ok(g) = groebner(&quiver, &ideal, 16) else { continue };
        if !g.finite {
            continue;
        }
        let Ok(algebra) = crate::algebra::from_presentation(&g) else { continue };
        if algebra.dim() > FUZZ_DIM_LIMIT {
            continue;
        }
        let cap = 2 * algebra.dim() + 2;
        let Some(m) = random_module(&algebra, &mut rng) else { continue };
        let res = minimal_resolution(&m, cap);
        if res.capped || res.is_empty() {
            continue; // only finite projective dimension qualifies
        }
        let rad_endos = radical_endo_basis(&m);
        if rad_endos.is_empty() {
            continue;
        }
        // a random radical endomorphism
        let f = {
            let mut acc = ModuleMap::zero(&m, &m);
            for h in &rad_endos {
                let c = algebra.field.from_i64(rng.gen_range(-1..=1));
                if !algebra.field.is_zero(&c) {
                    acc = acc.add(&h.scale(&c));
                }
            }
            acc
        };
        let lifts = lift_chain_map(&f, &res, &res);
        for (i, l) in lifts.iter().enumerate() {
            let blocks = top_blocks(l, &res.sums[i], &res.sums[i]);
            if !blocks_nilpotent(&blocks) {
                report.nilpotency_violations += 1;
            }
        }

        // a radical map M^s -> M^t with random radical components
        let (s, t) = (rng.gen_range(1..=2usize), rng.gen_range(1..=2usize));
        let msrc = ModuleRep::direct_sum(
            Arc::clone(&algebra),
            &std::iter::repeat(&m).take(s).collect::<Vec<_>>(),
        );
        let mtgt = ModuleRep::direct_sum(
            Arc::clone(&algebra),
            &std::iter::repeat(&m).take(t).collect::<Vec<_>>(),
        );
        let mut mats: Vec<Matrix> = (0..algebra.n)
            .map(|c| Matrix::zero(algebra.field, msrc.dims[c], mtgt.dims[c]))
            .collect();
        for u in 0..s {
            for v in 0..t {
                let pick = &rad_endos[rng.gen_range(0..rad_endos.len())];
                let coeff = algebra.field.from_i64(rng.gen_range(-1..=1));
                if algebra.field.is_zero(&coeff) {
                    continue;
                }
                for c in 0..algebra.n {
                    let d = m.dims[c];
                    let block = pick.mats[c].scale(&coeff);
                    for i in 0..d {
                        for j in 0..d {
                            let cur = mats[c].get(u * d + i, v * d + j).clone();
                            mats[c].set(
                                u * d + i,
                                v * d + j,
                                algebra.field.add(&cur, block.get(i, j)),
                            );
                        }
                    }
                }
            }
        }
        let block_map = ModuleMap::new_unchecked(&msrc, &mtgt, mats);
        let res_s = minimal_resolution(&msrc, cap);
        let res_t = minimal_resolution(&mtgt, cap);
        if res_s.capped || res_t.capped {
            continue;
        }
        let lifts = lift_chain_map(&block_map, &res_s, &res_t);
        for (i, l) in lifts.iter().enumerate() {
            let src = &res_s.sums[i];
            if src.is_zero() {
                continue;
            }
            let tgt = res_t.sum_at(i);
            if is_section(l, src, &tgt) {
                report.section_violations += 1;
            }
        }
        report.pairs_tested += 1;
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests::four_cycle_algebra;

    #[test]
    fn intro_fixture_report() {
        let a = four_cycle_algebra();
        let report = check_all(&a, &[0, 2], 24).unwrap();
        let by_id = |id: &str| {
            report
                .statements
                .iter()
                .find(|s| s.statement_id == id)
                .unwrap()
        };
        // non-primitive e: S12 vacuous while Ext^2(S_e, S_e) != 0
        let s12 = by_id("S12");
        assert_eq!(s12.verdict, Outcome::Vacuous);
        assert_eq!(s12.witnesses["self_orthogonal"], "unmet");
        assert_eq!(s12.witnesses["ext1_S_e"], "met");
        assert_eq!(s12.witnesses["gldim_A"], "3");
        assert_eq!(s12.witnesses["gldim_Gamma"], "1");
        assert_eq!(s12.witnesses["pd_S_e"], "2");
        assert_eq!(s12.witnesses["id_S_e"], "3");
        assert_eq!(s12.witnesses["d_e_S_e"], "2");
        assert_eq!(s12.witnesses["pd_F_eA"], "1");
        // the unconditional bounds all hold
        for id in ["S1", "S2", "S4", "S5", "S6", "S7", "S13", "S14"] {
            assert_eq!(by_id(id).verdict, Outcome::Holds, "{id}");
        }
        // self-orthogonality fails, so S3/S8/S9/S11 are vacuous
        for id in ["S3", "S8", "S9", "S11"] {
            assert_eq!(by_id(id).verdict, Outcome::Vacuous, "{id}");
        }
        assert_eq!(report.exit_code(), 0);
    }

    #[test]
    fn semisimple_everything_holds() {
        let q = crate::quiver::Quiver::new(vec!["1".into(), "2".into()], vec![]).unwrap();
        let g = groebner(&q, &RelationIdeal::empty(FieldSpec::Rationals), 4).unwrap();
        let a = crate::algebra::from_presentation(&g).unwrap();
        let report = check_all(&a, &[0], 10).unwrap();
        for s in &report.statements {
            assert!(
                matches!(s.verdict, Outcome::Holds | Outcome::Vacuous),
                "{}: {:?}",
                s.statement_id,
                s.verdict
            );
        }
        // primitive e over a semisimple algebra: S12 applies and holds
        let s12 = report
            .statements
            .iter()
            .find(|s| s.statement_id == "S12")
            .unwrap();
        assert_eq!(s12.verdict, Outcome::Holds);
    }

    #[test]
    fn primitive_removals_on_the_fixture() {
        let a = four_cycle_algebra();
        for v in 0..4 {
            let report = check_all(&a, &[v], 24).unwrap();
            assert!(
                report.failures().is_empty(),
                "vertex {v}: {:?}",
                report
                    .failures()
                    .iter()
                    .map(|s| &s.statement_id)
                    .collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn annihilated_submodule_avoids_kept_support() {
        let a = four_cycle_algebra();
        let p4 = ModuleRep::projective(Arc::clone(&a), 3);
        // keep {2, 4}: the largest submodule of e4A supported on {1, 3}
        let sub = annihilated_submodule(&p4, &[1, 3]);
        assert_eq!(sub.dims[1] + sub.dims[3], 0);
        // g*b*a spans a submodule at vertex 1, and g stays out since
        // g * (b*a...) hmm: the closure must stay within {1, 3} support
        for (g, m) in &sub.actions {
            let e = &a.elems[*g];
            if sub.dims[e.left] > 0 && sub.dims[e.right] > 0 {
                let _ = m;
            }
        }
        assert!(sub.dim() > 0);
    }

    #[test]
    fn fuzz_smoke_run_is_clean_and_deterministic() {
        let cfg = FuzzConfig {
            trials: 6,
            seed: 42,
            ..FuzzConfig::default()
        };
        let r1 = fuzz(&cfg);
        let r2 = fuzz(&cfg);
        assert!(r1.failures.is_empty(), "{:?}", r1.failures);
        assert_eq!(
            serde_json::to_string(&r1).unwrap(),
            serde_json::to_string(&r2).unwrap()
        );
        assert!(r1.trials_run > 0);
    }

    #[test]
    fn lift_properties_smoke() {
        let cfg = FuzzConfig {
            seed: 7,
            trials: 400,
            ..FuzzConfig::default()
        };
        let r = lift_property_trials(&cfg, 5);
        assert!(r.pairs_tested >= 5);
        assert_eq!(r.nilpotency_violations, 0);
        assert_eq!(r.section_violations, 0);
    }
}
