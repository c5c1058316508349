use serde::Serialize;

use crate::homology::{ext, ext_dims, extension_middle_term, syzygy_stable_map, ShortExactSequence};
use crate::linalg::Scalar;
use crate::module::{direct_sum, projective, CoefficientPatterns, Module};

use super::certificate::{Certificate, DimBound, Truth, Verdict};
use super::context::AlgebraContext;
use super::membership::{omega_infty_certificate, omega_membership};
use super::pool::ModulePool;

fn conjunction(values: impl IntoIterator<Item = Truth>) -> Truth {
    let mut unknown = false;
    for v in values {
        match v {
            Truth::False => return Truth::False,
            Truth::Unknown => unknown = true,
            Truth::True => {}
        }
    }
    if unknown {
        Truth::Unknown
    } else {
        Truth::True
    }
}

fn truth(decided: Option<bool>) -> Truth {
    decided.map_or(Truth::Unknown, Truth::from_bool)
}

fn agreement(a: Truth, b: Truth) -> Option<bool> {
    Some(a.decided()? == b.decided()?)
}

/// A nonzero class of `Ext^i(m, Λ)` for the first `i ≤ depth` where one exists.
fn ext_witness(m: &Module, regular: &Module, dims: &[usize]) -> Option<Certificate> {
    let degree = dims.iter().position(|&d| d > 0)? + 1;
    let group = ext(m, regular, degree).expect("same algebra");
    let class = group.basis_classes().into_iter().next()?;
    Some(Certificate::ExtNonzero { module: m.clone(), target: regular.clone(), degree, cocycle: class.cocycle })
}

/// Pool members split by their `Ω^∞` status, and the verdict on
/// `Ω^∞ ⊆ ⊥Λ` restricted to the certified ones.
#[derive(Clone, Debug, Serialize)]
pub struct CoGorenstein {
    pub verdict: Verdict,
    pub certified: Vec<usize>,
    pub uncertified: Vec<usize>,
    pub excluded: Vec<usize>,
}

pub fn co_gorenstein_check(ctx: &AlgebraContext, pool: &ModulePool) -> CoGorenstein {
    let depth = ctx.depth;
    let (mut certified, mut uncertified, mut excluded) = (Vec::new(), Vec::new(), Vec::new());
    let mut rows = Vec::new();
    for (k, member) in pool.members.iter().enumerate() {
        match omega_infty_certificate(&member.module, depth).value {
            Truth::True => certified.push(k),
            Truth::False => {
                excluded.push(k);
                continue;
            }
            Truth::Unknown => {
                uncertified.push(k);
                continue;
            }
        }
        let dims = ext_dims(&member.module, &ctx.regular, depth).expect("same algebra");
        if let Some(cert) = ext_witness(&member.module, &ctx.regular, &dims) {
            let verdict = Verdict::new(Truth::False, depth, cert);
            return CoGorenstein { verdict, certified, uncertified, excluded };
        }
        rows.push((k, dims));
    }
    let verdict = Verdict::new(Truth::True, depth, Certificate::ExtTable { rows });
    CoGorenstein { verdict, certified, uncertified, excluded }
}

/// `inj.dim P_k(DΛ) ≤ k + 1` for `0 ≤ k < n`, which is equivalent to
/// extension-closure of `Ω^{k+1}(mod-Λ)` for all such `k`.
pub fn syzygy_ext_closed_test(ctx: &AlgebraContext, n: usize) -> Vec<Verdict> {
    (0..n)
        .map(|k| {
            if k > ctx.depth && ctx.dual_resolution.terminated.is_none() {
                let exhausted = format!("P_{k}(DΛ) lies past the computed depth {}", ctx.depth);
                return Verdict::new(Truth::Unknown, k, Certificate::Budget { exhausted });
            }
            let mut vertices = ctx.dual_term(k).to_vec();
            vertices.sort_unstable();
            vertices.dedup();
            let steps: Vec<(usize, Truth)> =
                vertices.iter().map(|&v| (v, truth(ctx.projective_inj_dims[v].at_most(k + 1)))).collect();
            let value = conjunction(steps.iter().map(|s| s.1));
            Verdict::new(value, k, Certificate::Steps(steps))
        })
        .collect()
}

/// Both sides of the left-right symmetric condition at one `n`: every
/// `inj.dim P_k(DΛ) ≤ k` and every `proj.dim I_k(Λ) ≤ k` for `k < n`.
#[derive(Clone, Debug, Serialize)]
pub struct SymmetryRow {
    pub n: usize,
    pub injective_side: Truth,
    pub projective_side: Truth,
    pub agree: Option<bool>,
}

pub fn left_right_symmetry_report(ctx: &AlgebraContext, n: usize) -> Vec<SymmetryRow> {
    let known = |k: usize, terminated: Option<usize>| k <= ctx.depth || terminated.is_some();
    let first: Vec<Truth> = (0..n)
        .map(|k| match known(k, ctx.dual_resolution.terminated) {
            true => truth(ctx.dual_term_inj_dim(k).at_most(k)),
            false => Truth::Unknown,
        })
        .collect();
    let second: Vec<Truth> = (0..n)
        .map(|k| match known(k, ctx.injective_resolution.terminated) {
            true => truth(ctx.injective_term_proj_dim(k).at_most(k)),
            false => Truth::Unknown,
        })
        .collect();
    (1..=n)
        .map(|m| {
            let injective_side = conjunction(first[..m].iter().copied());
            let projective_side = conjunction(second[..m].iter().copied());
            SymmetryRow { n: m, injective_side, projective_side, agree: agreement(injective_side, projective_side) }
        })
        .collect()
}

/// `dom.dim Λ ≥ d` against `P_i(DΛ)` injective for all `i < d`.
#[derive(Clone, Debug, Serialize)]
pub struct HoshinoRow {
    pub d: usize,
    pub dominant: Truth,
    pub dual_side: Truth,
    pub agree: Option<bool>,
}

pub fn hoshino_check(ctx: &AlgebraContext, max_d: usize) -> Vec<HoshinoRow> {
    let dominant = ctx.dominant_dimension();
    (0..=max_d)
        .map(|d| {
            let dom = truth(dominant.at_least(d));
            let dual_side = if d > ctx.depth + 1 && ctx.dual_resolution.terminated.is_none() {
                Truth::Unknown
            } else {
                Truth::from_bool((0..d).all(|i| ctx.dual_term(i).iter().all(|&v| ctx.projective_is_injective[v])))
            };
            HoshinoRow { d, dominant: dom, dual_side, agree: agreement(dom, dual_side) }
        })
        .collect()
}

/// For each vertex `v`, the first `n ≤ depth` with `P_v` a summand of
/// `P_n(DΛ)`.
pub fn gnc_witness_scan(ctx: &AlgebraContext) -> Vec<Option<usize>> {
    (0..ctx.algebra.num_vertices())
        .map(|v| (0..=ctx.depth).find(|&n| ctx.dual_term(n).contains(&v)))
        .collect()
}

/// The sequence `0 → Λ → I_0(Λ) → Coker i → 0` probed at depth.
#[derive(Clone, Debug, Serialize)]
pub struct NakayamaProbe {
    pub dominant_dimension: DimBound,
    pub applicable: bool,
    pub coker_dims: Vec<usize>,
    pub coker_membership: Option<Verdict>,
    pub coker_ext_dims: Vec<usize>,
    pub splits: bool,
    pub selfinjective: bool,
    /// `P_i(DΛ)` injective for all `i < depth`.
    pub hoshino: bool,
    pub consistent: bool,
}

pub fn nakayama_probe(ctx: &AlgebraContext) -> NakayamaProbe {
    let depth = ctx.depth;
    let dominant_dimension = ctx.dominant_dimension();
    let applicable = dominant_dimension.at_least(depth) == Some(true);
    let i0 = ctx.injective_resolution.maps[0].clone();
    let (coker, projection) = i0.cokernel();
    let sequence = ShortExactSequence { mono: i0, epi: projection };
    let splits = sequence.splits().expect("same algebra");
    let selfinjective = ctx.is_selfinjective();
    let hoshino = (0..depth).all(|i| ctx.dual_term(i).iter().all(|&v| ctx.projective_is_injective[v]));
    let (coker_membership, coker_ext_dims) = if applicable {
        let m = omega_infty_certificate(&coker, depth.saturating_sub(1));
        (Some(m), ext_dims(&coker, &ctx.regular, depth).expect("same algebra"))
    } else {
        (None, Vec::new())
    };
    let consistent = splits == selfinjective
        && hoshino == applicable
        && coker_membership.as_ref().is_none_or(|v| v.is_true() && v.recheck());
    NakayamaProbe {
        dominant_dimension,
        applicable,
        coker_dims: coker.dims().to_vec(),
        coker_membership,
        coker_ext_dims,
        splits,
        selfinjective,
        hoshino,
        consistent,
    }
}

/// With `s = inj.dim Λ` finite, every certified `Ω^∞` member of the pool
/// satisfies `Ext^{1..depth-s}(m, Λ) = 0`.
#[derive(Clone, Debug, Serialize)]
pub struct FiniteInjdim {
    pub s: Option<usize>,
    pub checked: Vec<usize>,
    pub verdict: Verdict,
}

pub fn finite_injdim_consequences(ctx: &AlgebraContext, pool: &ModulePool) -> FiniteInjdim {
    let depth = ctx.depth;
    let Some(s) = ctx.inj_dim_regular().exact() else {
        let exhausted = format!("inj.dim Λ not decided within depth {depth}");
        return FiniteInjdim { s: None, checked: Vec::new(), verdict: Verdict::new(Truth::Unknown, depth, Certificate::Budget { exhausted }) };
    };
    let span = depth.saturating_sub(s);
    let mut checked = Vec::new();
    let mut rows = Vec::new();
    for (k, member) in pool.members.iter().enumerate() {
        let certificate = omega_infty_certificate(&member.module, depth.max(s));
        if !certificate.is_true() {
            continue;
        }
        checked.push(k);
        let dims = ext_dims(&member.module, &ctx.regular, span).expect("same algebra");
        if let Some(cert) = ext_witness(&member.module, &ctx.regular, &dims) {
            return FiniteInjdim { s: Some(s), checked, verdict: Verdict::new(Truth::False, depth, cert) };
        }
        rows.push((k, dims));
    }
    FiniteInjdim { s: Some(s), checked, verdict: Verdict::new(Truth::True, depth, Certificate::ExtTable { rows }) }
}

/// One extension `0 → X → E → Z → 0` examined by [`extension_closure_sample`].
#[derive(Clone, Debug, Serialize)]
pub struct ExtensionWitness {
    pub x: usize,
    pub z: usize,
    pub class: Vec<String>,
    pub middle_dims: Vec<usize>,
    #[serde(skip)]
    pub middle: Module,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtensionClosure {
    pub level: usize,
    pub members: Vec<usize>,
    pub classes_checked: usize,
    pub exhaustive: bool,
    pub counterexample: Option<ExtensionWitness>,
    pub unknown: Vec<ExtensionWitness>,
}

impl ExtensionClosure {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn outcome(&self) -> &'static str {
        if self.passed() {
            "PASS"
        } else {
            "COUNTEREXAMPLE"
        }
    }
}

/// Classes of a group of dimension `d` to try: all nonzero ones over a
/// finite field when they fit in the budget, otherwise a basis.
fn class_coefficients(field: crate::linalg::Field, d: usize, budget: usize) -> (Vec<Vec<Scalar>>, bool) {
    if let Some(elements) = field.elements() {
        let count = (elements.len() as u128).checked_pow(d as u32).map(|c| c - 1);
        if count.is_some_and(|c| c <= budget as u128) {
            return (CoefficientPatterns::new(&elements, d).collect(), true);
        }
    }
    let basis = (0..d)
        .map(|k| {
            let mut c = vec![field.zero(); d];
            c[k] = field.one();
            c
        })
        .collect();
    (basis, false)
}

/// Searches for an extension of two members of `Ω^k` whose middle term
/// lies outside `Ω^k`. `budget` bounds the number of classes examined.
pub fn extension_closure_sample(ctx: &AlgebraContext, k: usize, pool: &ModulePool, budget: usize) -> ExtensionClosure {
    let field = ctx.algebra.field();
    let members: Vec<usize> =
        (0..pool.len()).filter(|&i| omega_membership(&pool.members[i].module, k).is_true()).collect();
    let mut result = ExtensionClosure {
        level: k,
        members: members.clone(),
        classes_checked: 0,
        exhaustive: true,
        counterexample: None,
        unknown: Vec::new(),
    };
    for &z in &members {
        for &x in &members {
            let group = ext(&pool.members[z].module, &pool.members[x].module, 1).expect("same algebra");
            if group.is_zero() {
                continue;
            }
            let remaining = budget.saturating_sub(result.classes_checked);
            let (classes, all) = class_coefficients(field, group.dim(), remaining);
            result.exhaustive &= all;
            for coeffs in classes {
                if result.classes_checked >= budget {
                    result.exhaustive = false;
                    return result;
                }
                result.classes_checked += 1;
                let sequence = extension_middle_term(&group.class(&coeffs)).expect("degree one");
                let middle = sequence.middle().clone();
                let verdict = omega_membership(&middle, k);
                let witness = ExtensionWitness {
                    x,
                    z,
                    class: coeffs.iter().map(ToString::to_string).collect(),
                    middle_dims: middle.dims().to_vec(),
                    middle,
                };
                match verdict.value {
                    Truth::False => {
                        result.counterexample = Some(witness);
                        return result;
                    }
                    Truth::Unknown => result.unknown.push(witness),
                    Truth::True => {}
                }
            }
        }
    }
    result
}

/// Outcome of the stable-Hom syzygy comparison for one pool member `A`.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaRecord {
    pub module: usize,
    pub ext1_regular: usize,
    /// Pool members `A'` for which `Hom(A, A')/P → Hom(ΩA, ΩA')/P` was tested.
    pub tested: usize,
    /// Members where the map failed to be bijective.
    pub non_bijective: Vec<usize>,
    /// For `Ext^1(A, Λ) ≠ 0`: the extension `0 → P → A' → A → 0` whose
    /// middle term makes the map fail to be bijective.
    pub witness: Option<String>,
    pub consistent: bool,
}

fn stable_map_bijective(a: &Module, b: &Module) -> bool {
    let (before, after, map) = syzygy_stable_map(a, b).expect("same algebra");
    before.dim() == after.dim() && map.rank() == before.dim()
}

/// Checks that `Ext^1(A, Λ) = 0` forces the syzygy map on stable Homs to be
/// bijective, and that otherwise some extension of `A` by a projective
/// exhibits a failure.
pub fn syzygy_lemma_check(ctx: &AlgebraContext, pool: &ModulePool, budget: usize) -> Vec<LemmaRecord> {
    let alg = &ctx.algebra;
    let field = alg.field();
    pool.members
        .iter()
        .enumerate()
        .map(|(i, member)| {
            let a = &member.module;
            let ext1 = ext(a, &ctx.regular, 1).expect("same algebra").dim();
            if ext1 == 0 {
                let non_bijective: Vec<usize> =
                    (0..pool.len()).filter(|&j| !stable_map_bijective(a, &pool.members[j].module)).collect();
                let consistent = non_bijective.is_empty();
                return LemmaRecord { module: i, ext1_regular: 0, tested: pool.len(), non_bijective, witness: None, consistent };
            }
            let mut witness = None;
            let mut tested = 0;
            'search: for v in 0..alg.num_vertices() {
                let p = projective(alg, v);
                let group = ext(a, &p, 1).expect("same algebra");
                if group.is_zero() {
                    continue;
                }
                let split = direct_sum(alg, &[p.clone(), a.clone()]).module;
                tested += 1;
                if !stable_map_bijective(a, &split) {
                    witness = Some(format!("split extension P{} ⊕ A", alg.presentation().vertices[v]));
                    break;
                }
                let (classes, _) = class_coefficients(field, group.dim(), budget);
                for coeffs in classes {
                    let middle = extension_middle_term(&group.class(&coeffs)).expect("degree one").middle().clone();
                    tested += 1;
                    if !stable_map_bijective(a, &middle) {
                        let class: Vec<String> = coeffs.iter().map(ToString::to_string).collect();
                        witness = Some(format!(
                            "extension of A by P{} with class [{}]",
                            alg.presentation().vertices[v],
                            class.join(",")
                        ));
                        break 'search;
                    }
                }
            }
            let consistent = witness.is_some();
            LemmaRecord { module: i, ext1_regular: ext1, tested, non_bijective: Vec::new(), witness, consistent }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::default_pool;
    use crate::invariants::tests::{a2, a3, dual2, loc3, nakayama32};
    use crate::module::simple;

    #[test]
    fn loc3_co_gorenstein_certifies_only_projectives() {
        let a = loc3();
        let ctx = AlgebraContext::new(&a, 4);
        let pool = default_pool(&a, 4, 64);
        let result = co_gorenstein_check(&ctx, &pool);
        assert!(result.verdict.is_true());
        assert!(result.verdict.recheck());
        for &k in &result.certified {
            assert!(pool.members[k].module.is_projective());
        }
        assert!(result.certified.iter().any(|&k| pool.members[k].module.is_projective()));
        for (k, m) in pool.members.iter().enumerate() {
            if m.module.is_projective() {
                assert!(result.certified.contains(&k));
            }
        }
    }

    #[test]
    fn co_gorenstein_on_small_algebras() {
        for alg in [a2(), dual2(), a3()] {
            let ctx = AlgebraContext::new(&alg, 4);
            let pool = default_pool(&alg, 4, 64);
            let result = co_gorenstein_check(&ctx, &pool);
            assert!(result.verdict.is_true());
            assert!(result.verdict.recheck());
        }
    }

    #[test]
    fn extension_closed_tests() {
        let ctx = AlgebraContext::new(&dual2(), 4);
        assert!(syzygy_ext_closed_test(&ctx, 4).iter().all(Verdict::is_true));
        let ctx = AlgebraContext::new(&a2(), 4);
        let v = syzygy_ext_closed_test(&ctx, 2);
        assert!(v.iter().all(|x| x.is_true() && x.recheck()));
        let ctx = AlgebraContext::new(&loc3(), 4);
        let v = syzygy_ext_closed_test(&ctx, 1);
        assert!(v[0].is_false());
        assert!(v[0].recheck());
    }

    #[test]
    fn symmetry_rows() {
        let ctx = AlgebraContext::new(&dual2(), 4);
        for row in left_right_symmetry_report(&ctx, 4) {
            assert_eq!((row.injective_side, row.projective_side), (Truth::True, Truth::True));
        }
        let ctx = AlgebraContext::new(&loc3(), 4);
        let rows = left_right_symmetry_report(&ctx, 1);
        assert_eq!((rows[0].injective_side, rows[0].projective_side), (Truth::False, Truth::False));
        for alg in [a2(), a3(), nakayama32()] {
            let ctx = AlgebraContext::new(&alg, 4);
            for row in left_right_symmetry_report(&ctx, 4) {
                assert_ne!(row.agree, Some(false));
            }
        }
    }

    #[test]
    fn hoshino_rows_agree() {
        for alg in [loc3(), a2(), dual2(), a3(), nakayama32()] {
            let ctx = AlgebraContext::new(&alg, 4);
            for row in hoshino_check(&ctx, 4) {
                assert_eq!(row.agree, Some(true), "d = {}", row.d);
            }
        }
    }

    #[test]
    fn gnc_witnesses() {
        assert_eq!(gnc_witness_scan(&AlgebraContext::new(&dual2(), 4)), vec![Some(0)]);
        assert_eq!(gnc_witness_scan(&AlgebraContext::new(&a2(), 4)), vec![Some(0), Some(1)]);
        assert_eq!(gnc_witness_scan(&AlgebraContext::new(&loc3(), 4)), vec![Some(0)]);
    }

    #[test]
    fn nakayama_probes() {
        let probe = nakayama_probe(&AlgebraContext::new(&dual2(), 6));
        assert!(probe.applicable && probe.splits && probe.selfinjective && probe.consistent);
        assert!(probe.coker_dims.iter().all(|&d| d == 0));
        let probe = nakayama_probe(&AlgebraContext::new(&loc3(), 4));
        assert_eq!(probe.dominant_dimension, DimBound::Exact(0));
        assert!(!probe.applicable && probe.consistent);
        let probe = nakayama_probe(&AlgebraContext::new(&a2(), 4));
        assert_eq!(probe.dominant_dimension, DimBound::Exact(1));
        assert!(!probe.applicable && !probe.splits && probe.consistent);
    }

    #[test]
    fn finite_injdim() {
        for (alg, s) in [(a2(), 1), (dual2(), 0), (a3(), 1)] {
            let ctx = AlgebraContext::new(&alg, 4);
            let pool = default_pool(&alg, 4, 64);
            let r = finite_injdim_consequences(&ctx, &pool);
            assert_eq!(r.s, Some(s));
            assert!(r.verdict.is_true());
            assert!(!r.checked.is_empty());
        }
        let ctx = AlgebraContext::new(&loc3(), 3);
        let r = finite_injdim_consequences(&ctx, &default_pool(&loc3(), 3, 64));
        assert!(r.verdict.is_unknown());
    }

    #[test]
    fn extension_closure() {
        let b = a2();
        let ctx = AlgebraContext::new(&b, 4);
        let r = extension_closure_sample(&ctx, 1, &default_pool(&b, 4, 64), 256);
        assert!(r.passed());

        let a = loc3();
        let ctx = AlgebraContext::new(&a, 4);
        let projectives = ModulePool::from_modules(vec![("P1".into(), Module::regular(&a))]);
        assert!(extension_closure_sample(&ctx, 1, &projectives, 256).passed());

        // the uniserial extension of S by S is not torsionless
        let pool = ModulePool::from_modules(vec![("S".into(), simple(&a, 0)), ("P1".into(), Module::regular(&a))]);
        let r = extension_closure_sample(&ctx, 1, &pool, 256);
        let witness = r.counterexample.expect("non-split self-extension of S");
        assert_eq!(witness.middle_dims, vec![2]);
        assert!(omega_membership(&witness.middle, 1).is_false());
    }

    #[test]
    fn syzygy_lemma() {
        for alg in [loc3(), a2(), dual2()] {
            let ctx = AlgebraContext::new(&alg, 3);
            let pool = default_pool(&alg, 3, 64);
            for record in syzygy_lemma_check(&ctx, &pool, 64) {
                assert!(record.consistent, "{record:?}");
            }
        }
    }
}
