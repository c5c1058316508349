use std::sync::Arc;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::algebra::Algebra;
use crate::module::{dual, dual_regular, Module};

use super::certificate::{DimBound, Truth, Verdict};
use super::context::{inj_dim, AlgebraContext};
use super::membership::{cosyzygy_chain, torsionfree_degree};
use super::pool::{default_pool, ModulePool};
use super::theorems::{
    co_gorenstein_check, extension_closure_sample, finite_injdim_consequences, gnc_witness_scan, hoshino_check,
    left_right_symmetry_report, nakayama_probe, syzygy_ext_closed_test, syzygy_lemma_check, CoGorenstein,
    ExtensionClosure, FiniteInjdim, HoshinoRow, LemmaRecord, NakayamaProbe, SymmetryRow,
};

#[derive(Clone, Copy, Debug)]
pub struct ReportOptions {
    pub depth: usize,
    pub pool_cap: usize,
    /// Extension classes examined by the closure sample and the lemma search.
    pub class_budget: usize,
    /// Largest syzygy dimension of `DΛ` or of `Λ` on the injective side
    /// tolerated before the depth is lowered.
    pub term_budget: usize,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { depth: 6, pool_cap: 64, class_budget: 256, term_budget: 256 }
    }
}

/// First index `k ≤ limit` with `dim Ω^k m > budget`.
fn first_oversized_syzygy(m: &Module, limit: usize, budget: usize) -> Option<usize> {
    let mut x = m.clone();
    for k in 0..=limit {
        if x.dim() > budget {
            return Some(k);
        }
        if x.is_zero() {
            return None;
        }
        x = x.syzygy();
    }
    None
}

/// The largest depth `d ≤ depth` whose resolutions (run to `d + 1`) stay
/// within the budget, with the index that forced a reduction.
pub fn effective_depth(algebra: &Arc<Algebra>, depth: usize, budget: usize) -> (usize, Option<usize>) {
    let sides = [dual_regular(algebra), dual(&Module::regular(algebra))];
    let first = sides.iter().filter_map(|m| first_oversized_syzygy(m, depth + 1, budget)).min();
    match first {
        Some(k) => (k.saturating_sub(2).min(depth), Some(k)),
        None => (depth, None),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AlgebraSummary {
    pub id: String,
    pub field: String,
    pub vertices: Vec<String>,
    pub arrows: Vec<String>,
    pub dimension: usize,
    pub loewy_length: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TermRow {
    pub k: usize,
    /// Summands of `P_k(DΛ)` by vertex name.
    pub dual_projective: Vec<String>,
    pub dual_projective_inj_dim: DimBound,
    /// Summands of `I_k(Λ)` by vertex name.
    pub injective: Vec<String>,
    pub injective_proj_dim: DimBound,
}

#[derive(Clone, Debug, Serialize)]
pub struct MemberRow {
    pub label: String,
    pub dims: Vec<usize>,
    pub projective: bool,
    pub injective: bool,
    /// Length of the greedy cosyzygy chain, `None` when it terminates.
    pub chain_length: Option<usize>,
    pub torsionfree_degree: usize,
    pub omega_infinity: Truth,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossCheck {
    pub name: &'static str,
    pub value: Truth,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub algebra: AlgebraSummary,
    pub depth: usize,
    pub requested_depth: usize,
    pub depth_note: Option<String>,
    pub dominant_dimension: DimBound,
    pub dominant_dimension_note: Option<String>,
    pub inj_dim_regular: DimBound,
    pub selfinjective: bool,
    pub terms: Vec<TermRow>,
    pub gnc_witnesses: Map<String, Value>,
    pub pool: ModulePool,
    pub members: Vec<MemberRow>,
    pub co_gorenstein: CoGorenstein,
    pub syzygy_extension_closed: Vec<Verdict>,
    pub extension_closure_sample: ExtensionClosure,
    pub left_right_symmetry: Vec<SymmetryRow>,
    pub hoshino: Vec<HoshinoRow>,
    pub nakayama: NakayamaProbe,
    pub finite_injdim: FiniteInjdim,
    pub syzygy_lemma: Vec<LemmaRecord>,
    pub cross_checks: Vec<CrossCheck>,
}

impl InvariantReport {
    /// Cross-checks that came out `FALSE`.
    pub fn failures(&self) -> Vec<&CrossCheck> {
        self.cross_checks.iter().filter(|c| c.value == Truth::False).collect()
    }

    pub fn theorem_violation(&self) -> bool {
        !self.failures().is_empty()
    }

    /// Dominant dimension at least the depth while not selfinjective.
    pub fn nc_tension(&self) -> bool {
        self.dominant_dimension.at_least(self.depth) == Some(true) && !self.selfinjective
    }

    /// Some indecomposable projective without a witness up to the depth.
    pub fn gnc_gap(&self) -> bool {
        self.gnc_witnesses.values().any(Value::is_string)
    }
}

fn check(name: &'static str, value: Truth, detail: impl Into<String>) -> CrossCheck {
    CrossCheck { name, value, detail: detail.into() }
}

fn names(alg: &Algebra, summands: &[usize]) -> Vec<String> {
    summands.iter().map(|&v| alg.presentation().vertices[v].clone()).collect()
}

pub fn build_report(id: &str, algebra: &Arc<Algebra>, options: &ReportOptions) -> InvariantReport {
    let (depth, oversized) = effective_depth(algebra, options.depth, options.term_budget);
    let depth_note = oversized.map(|k| {
        format!("depth lowered from {}: a syzygy of index {k} exceeds {} dimensions", options.depth, options.term_budget)
    });
    let ctx = AlgebraContext::new(algebra, depth);
    let pool = default_pool(algebra, depth, options.pool_cap);
    let p = algebra.presentation();

    let summary = AlgebraSummary {
        id: id.to_string(),
        field: algebra.field().label(),
        vertices: p.vertices.clone(),
        arrows: p.arrows.iter().map(|a| format!("{}: {} -> {}", a.name, p.vertices[a.source], p.vertices[a.target])).collect(),
        dimension: algebra.dim(),
        loewy_length: algebra.loewy_length(),
    };

    let dominant_dimension = ctx.dominant_dimension();
    let dominant_dimension_note = match dominant_dimension {
        DimBound::AtLeast { terminated: true, .. } => Some("resolution terminated, all terms projective".to_string()),
        DimBound::AtLeast { .. } => Some("all computed terms projective".to_string()),
        DimBound::Exact(_) => None,
    };
    let selfinjective = ctx.is_selfinjective();
    let inj_dim_regular = ctx.inj_dim_regular();

    let terms = (0..depth)
        .map(|k| TermRow {
            k,
            dual_projective: names(algebra, ctx.dual_term(k)),
            dual_projective_inj_dim: ctx.dual_term_inj_dim(k),
            injective: names(algebra, ctx.injective_term(k)),
            injective_proj_dim: ctx.injective_term_proj_dim(k),
        })
        .collect();

    let witnesses = gnc_witness_scan(&ctx);
    let mut gnc_witnesses = Map::new();
    for (v, w) in witnesses.iter().enumerate() {
        let value = match w {
            Some(n) => Value::from(*n),
            None => Value::from(format!("NONE≤{depth}")),
        };
        gnc_witnesses.insert(format!("P{}", p.vertices[v]), value);
    }

    let co_gorenstein = co_gorenstein_check(&ctx, &pool);
    let members = pool
        .members
        .iter()
        .enumerate()
        .map(|(k, m)| {
            let chain = cosyzygy_chain(&m.module, depth);
            let omega_infinity = if co_gorenstein.certified.contains(&k) {
                Truth::True
            } else if co_gorenstein.excluded.contains(&k) {
                Truth::False
            } else if co_gorenstein.uncertified.contains(&k) {
                Truth::Unknown
            } else {
                // the check stopped early at a counterexample
                super::membership::omega_infty_certificate(&m.module, depth).value
            };
            MemberRow {
                label: m.label.clone(),
                dims: m.module.dims().to_vec(),
                projective: m.module.is_projective(),
                injective: m.module.is_injective(),
                chain_length: if chain.terminated { None } else { Some(chain.length()) },
                torsionfree_degree: torsionfree_degree(&m.module, depth),
                omega_infinity,
            }
        })
        .collect();

    let syzygy_extension_closed = syzygy_ext_closed_test(&ctx, depth);
    let extension_closure = extension_closure_sample(&ctx, 1, &pool, options.class_budget);
    let left_right_symmetry = left_right_symmetry_report(&ctx, depth);
    let hoshino = hoshino_check(&ctx, depth);
    let nakayama = nakayama_probe(&ctx);
    let finite_injdim = finite_injdim_consequences(&ctx, &pool);
    let syzygy_lemma = syzygy_lemma_check(&ctx, &pool, options.class_budget);

    let mut cross_checks = Vec::new();

    let disagreements: Vec<usize> =
        left_right_symmetry.iter().filter(|r| r.agree == Some(false)).map(|r| r.n).collect();
    cross_checks.push(check(
        "left_right_symmetry",
        Truth::from_bool(disagreements.is_empty()),
        format!("disagreeing n: {disagreements:?}"),
    ));

    let disagreements: Vec<usize> = hoshino.iter().filter(|r| r.agree != Some(true)).map(|r| r.d).collect();
    cross_checks.push(check(
        "hoshino",
        Truth::from_bool(disagreements.is_empty()),
        format!("disagreeing d: {disagreements:?}"),
    ));

    let gnc_bound = match witnesses.iter().copied().collect::<Option<Vec<usize>>>() {
        Some(ws) => {
            let s = ws.iter().copied().max().unwrap_or(0);
            let closed = (0..=s).all(|k| syzygy_extension_closed.get(k).is_some_and(Verdict::is_true));
            if closed {
                let bound = inj_dim(&ctx.regular, s + 2);
                check(
                    "gnc_injdim_bound",
                    Truth::from_bool(bound.at_most(s + 1) == Some(true)),
                    format!("max witness {s}, inj.dim Λ {bound}"),
                )
            } else {
                check("gnc_injdim_bound", Truth::Unknown, format!("extension-closure not established up to {s}"))
            }
        }
        None => check("gnc_injdim_bound", Truth::Unknown, "some projective has no witness"),
    };
    cross_checks.push(gnc_bound);

    cross_checks.push(check(
        "finite_injdim_consequences",
        finite_injdim.verdict.value,
        format!("inj.dim Λ {inj_dim_regular}, {} certified members", finite_injdim.checked.len()),
    ));

    let co_gorenstein_consistent = match (inj_dim_regular.exact(), co_gorenstein.verdict.value) {
        (Some(_), Truth::False) => Truth::False,
        (Some(_), _) => Truth::True,
        (None, _) => Truth::Unknown,
    };
    cross_checks.push(check(
        "finite_injdim_co_gorenstein",
        co_gorenstein_consistent,
        format!("inj.dim Λ {inj_dim_regular}, co-Gorenstein {:?}", co_gorenstein.verdict.value),
    ));

    cross_checks.push(check(
        "selfinjective_dominant_dimension",
        Truth::from_bool(!selfinjective || dominant_dimension.at_least(depth) == Some(true)),
        format!("selfinjective {selfinjective}, dominant dimension {dominant_dimension}"),
    ));

    cross_checks.push(check(
        "nakayama_probe",
        Truth::from_bool(nakayama.consistent),
        format!("splits {}, selfinjective {}, dual side {}", nakayama.splits, nakayama.selfinjective, nakayama.hoshino),
    ));

    let closure_consistent = match (&extension_closure.counterexample, syzygy_extension_closed.first()) {
        (Some(_), Some(v)) => Truth::from_bool(!v.is_true()),
        (None, Some(v)) if v.is_false() => Truth::Unknown,
        _ => Truth::True,
    };
    cross_checks.push(check(
        "extension_closure_level_one",
        closure_consistent,
        format!("{} after {} classes", extension_closure.outcome(), extension_closure.classes_checked),
    ));

    let lemma_failures: Vec<usize> = syzygy_lemma.iter().filter(|r| !r.consistent).map(|r| r.module).collect();
    cross_checks.push(check(
        "syzygy_lemma",
        Truth::from_bool(lemma_failures.is_empty()),
        format!("inconsistent members: {lemma_failures:?}"),
    ));

    let mut verdicts: Vec<&Verdict> = vec![&co_gorenstein.verdict, &finite_injdim.verdict];
    verdicts.extend(&syzygy_extension_closed);
    verdicts.extend(nakayama.coker_membership.iter());
    let rejected = verdicts.iter().filter(|v| !v.recheck()).count();
    cross_checks.push(check(
        "certificate_recheck",
        Truth::from_bool(rejected == 0),
        format!("{} verdicts, {rejected} rejected", verdicts.len()),
    ));

    InvariantReport {
        algebra: summary,
        depth,
        requested_depth: options.depth,
        depth_note,
        dominant_dimension,
        dominant_dimension_note,
        inj_dim_regular,
        selfinjective,
        terms,
        gnc_witnesses,
        pool,
        members,
        co_gorenstein,
        syzygy_extension_closed,
        extension_closure_sample: extension_closure,
        left_right_symmetry,
        hoshino,
        nakayama,
        finite_injdim,
        syzygy_lemma,
        cross_checks,
    }
}
