//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Oracles here use their own GF(2) arithmetic on bitmask rows.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::Instant;

use syzygy_lab::algebra::{build_algebra, Algebra};
use syzygy_lab::homology::{ext, ext_dims, min_inj_resolution, min_proj_resolution, syzygy_power};
use syzygy_lab::invariants::{
    build_report, co_gorenstein_check, cosyzygy_chain, default_pool, effective_depth, gnc_witness_scan,
    omega_membership, syzygy_lemma_check, AlgebraContext, DimBound, InvariantReport, ReportOptions, Truth,
};
use syzygy_lab::lab::{self, enumerate_shapes, ScanMode};
use syzygy_lab::linalg::{Field, Matrix};
use syzygy_lab::module::{decompose, dual, dual_regular, injective, is_isomorphic, projective, simple, Module};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn corpus() -> Vec<(&'static str, Arc<Algebra>)> {
    lab::example_names().into_iter().map(|n| (n, lab::example(n).unwrap().build().unwrap())).collect()
}

// ---------------------------------------------------------------- GF(2) oracle

/// Dense GF(2) matrix, one bitmask per row, at most 32 columns.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Bits {
    rows: Vec<u32>,
    cols: usize,
}

impl Bits {
    fn zero(rows: usize, cols: usize) -> Bits {
        Bits { rows: vec![0; rows], cols }
    }

    fn identity(n: usize) -> Bits {
        Bits { rows: (0..n).map(|i| 1 << i).collect(), cols: n }
    }

    fn from_code(rows: usize, cols: usize, code: u64) -> Bits {
        let mask = (1u64 << cols) - 1;
        Bits { rows: (0..rows).map(|i| ((code >> (i * cols)) & mask) as u32).collect(), cols }
    }

    fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    fn mul(&self, other: &Bits) -> Bits {
        let rows = self
            .rows
            .iter()
            .map(|&r| (0..other.rows.len()).filter(|&k| r >> k & 1 == 1).fold(0, |acc, k| acc ^ other.rows[k]))
            .collect();
        Bits { rows, cols: other.cols }
    }

    fn add(&self, other: &Bits) -> Bits {
        Bits { rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a ^ b).collect(), cols: self.cols }
    }

    fn is_zero(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for c in 0..self.cols {
            if let Some(p) = (rank..rows.len()).find(|&i| rows[i] >> c & 1 == 1) {
                rows.swap(rank, p);
                for i in 0..rows.len() {
                    if i != rank && rows[i] >> c & 1 == 1 {
                        rows[i] ^= rows[rank];
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    fn to_matrix(&self) -> Matrix {
        let rows: Vec<Vec<i64>> =
            (0..self.rows.len()).map(|i| (0..self.cols).map(|j| i64::from(self.get(i, j))).collect()).collect();
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        if rows.is_empty() {
            Matrix::zeros(Field::gf2(), 0, self.cols)
        } else {
            Matrix::from_i64(Field::gf2(), &refs)
        }
    }
}

fn invertible(n: usize) -> Vec<Bits> {
    (0..1u64 << (n * n)).map(|c| Bits::from_code(n, n, c)).filter(|g| g.rank() == n).collect()
}

fn inverse(g: &Bits, group: &[Bits]) -> Bits {
    let id = Bits::identity(g.rows.len());
    group.iter().find(|h| g.mul(h) == id).expect("group element").clone()
}

// ------------------------------------------------------------ criterion 1

fn criterion_1() -> Outcome {
    for field in [Field::gf2(), Field::Rationals] {
        let alg = lab::example("loc3").unwrap().with_field(field).build().unwrap();
        let label = field.label();
        ensure!(alg.dim() == 3, "{label}: dim Λ = {}", alg.dim());
        let socle = Module::regular(&alg).socle_dims();
        ensure!(socle == vec![2], "{label}: socle dims {socle:?}");
        let s = simple(&alg, 0);
        for k in 1..=5 {
            let omega = syzygy_power(&s, k);
            let parts = decompose(&omega).unwrap().parts();
            ensure!(parts.len() == 1 << k, "{label}: Ω^{k}(S) has {} summands", parts.len());
            ensure!(parts.iter().all(|p| is_isomorphic(p, &s).unwrap()), "{label}: Ω^{k}(S) has a non-simple summand");
        }
        let ctx = AlgebraContext::new(&alg, 4);
        ensure!(ctx.dominant_dimension() == DimBound::Exact(0), "{label}: dominant dimension {}", ctx.dominant_dimension());
        ensure!(!ctx.is_selfinjective(), "{label}: reported selfinjective");
        let pool = default_pool(&alg, 4, 64);
        let cg = co_gorenstein_check(&ctx, &pool);
        ensure!(cg.verdict.value == Truth::True && cg.verdict.depth == 4, "{label}: co-Gorenstein {:?}", cg.verdict.value);
        let projectives: Vec<usize> = (0..pool.len()).filter(|&k| pool.members[k].module.is_projective()).collect();
        ensure!(cg.certified == projectives, "{label}: certified {:?} vs projectives {projectives:?}", cg.certified);
        let membership = omega_membership(&s, 2);
        ensure!(!membership.is_true(), "{label}: S reported in Ω^2");
    }
    Ok("LOC3 over GF(2) and Q".to_string())
}

// ------------------------------------------------------------ criterion 2

fn criterion_2() -> Outcome {
    let mut members = 0;
    let mut witnesses = 0;
    for (name, alg) in corpus() {
        let ctx = AlgebraContext::new(&alg, 6);
        let pool = default_pool(&alg, 6, 64);
        for record in syzygy_lemma_check(&ctx, &pool, 256) {
            members += 1;
            let label = &pool.members[record.module].label;
            ensure!(record.consistent, "{name} {label}: ext1 {} non-bijective {:?}", record.ext1_regular, record.non_bijective);
            if record.ext1_regular == 0 {
                ensure!(record.tested == pool.len(), "{name} {label}: only {} targets tested", record.tested);
            } else {
                ensure!(record.witness.is_some(), "{name} {label}: no witnessing middle term");
                witnesses += 1;
            }
        }
    }
    Ok(format!("{members} pool modules, {witnesses} with Ext^1(A,Λ) ≠ 0 and a middle-term witness"))
}

// ------------------------------------------------------- criteria 3 and 4

fn scan_set_reports() -> Vec<(String, Arc<Algebra>, InvariantReport)> {
    let options = ReportOptions { depth: 4, ..ReportOptions::default() };
    let mut out: Vec<(String, Arc<Algebra>, InvariantReport)> =
        corpus().into_iter().map(|(n, a)| (n.to_string(), a.clone(), build_report(n, &a, &options))).collect();
    for shape in enumerate_shapes(2, 2, ScanMode::RadCubeZero).unwrap() {
        let alg = build_algebra(&shape.presentation(), Field::gf2()).unwrap();
        let report = build_report(&shape.id(), &alg, &options);
        out.push((shape.id(), alg, report));
    }
    out
}

fn criterion_3(reports: &[(String, Arc<Algebra>, InvariantReport)]) -> Outcome {
    let mut decided = 0;
    for (id, _, report) in reports {
        for row in report.left_right_symmetry.iter().filter(|r| r.n <= 4) {
            let (Some(i), Some(p)) = (row.injective_side.decided(), row.projective_side.decided()) else {
                continue;
            };
            decided += 1;
            ensure!(i == p, "{id} n={}: injective side {i}, projective side {p}", row.n);
        }
    }
    Ok(format!("{} algebras, {decided} decided comparisons, 0 disagreements", reports.len()))
}

fn all_projective(alg: &Arc<Algebra>, terms: &[Vec<usize>]) -> bool {
    terms.iter().flatten().all(|&v| injective(alg, v).is_projective())
}

fn all_injective(alg: &Arc<Algebra>, terms: &[Vec<usize>]) -> bool {
    terms.iter().flatten().all(|&v| projective(alg, v).is_injective())
}

fn criterion_4(reports: &[(String, Arc<Algebra>, InvariantReport)]) -> Outcome {
    let mut checked = 0;
    for (id, alg, report) in reports {
        let (depth, _) = effective_depth(alg, 4, ReportOptions::default().term_budget);
        let inj = min_inj_resolution(&Module::regular(alg), depth);
        let proj = min_proj_resolution(&dual_regular(alg), depth);
        for d in 1..=depth.min(4) {
            let dominant_at_least = all_projective(alg, &inj.summands[..d.min(inj.summands.len())]);
            let dual_injective = all_injective(alg, &proj.summands[..d.min(proj.summands.len())]);
            ensure!(dominant_at_least == dual_injective, "{id} d={d}: dom.dim ≥ d {dominant_at_least}, P_i(DΛ) injective {dual_injective}");
            if let Some(reported) = report.dominant_dimension.at_least(d) {
                ensure!(reported == dominant_at_least, "{id} d={d}: report says dom.dim ≥ d is {reported}");
            }
            checked += 1;
        }
        ensure!(report.hoshino.iter().all(|r| r.agree != Some(false)), "{id}: report lists a Hoshino disagreement");
    }
    Ok(format!("{checked} (algebra, d) pairs"))
}

// ------------------------------------------------------------ criterion 5

fn criterion_5() -> Outcome {
    let mut pairs = 0;
    for (name, alg) in corpus() {
        let pool = default_pool(&alg, 6, 64);
        for x in pool.modules() {
            ensure!(is_isomorphic(&dual(&dual(x)), x).unwrap(), "{name}: DD m ≇ m for dims {:?}", x.dims());
            for y in pool.modules() {
                let left = ext_dims(x, y, 3).unwrap();
                let right = ext_dims(&dual(y), &dual(x), 3).unwrap();
                ensure!(left == right, "{name}: Ext(m,n) {left:?} vs Ext(Dn,Dm) {right:?}");
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pool pairs, degrees 1..3"))
}

// ------------------------------------------------------------ criterion 6

fn criterion_6() -> Outcome {
    let mut checked = 0;
    for name in ["a2", "a3", "nakayama-3-2"] {
        let alg = lab::example(name).unwrap().build().unwrap();
        let ctx = AlgebraContext::new(&alg, 6);
        let Some(s) = ctx.inj_dim_regular().exact() else {
            return Err(format!("{name}: inj.dim Λ undecided"));
        };
        ensure!(s <= 2, "{name}: inj.dim Λ = {s}");
        for member in &default_pool(&alg, 6, 64).members {
            let chain = cosyzygy_chain(&member.module, 6);
            if !chain.certifies(s) {
                continue;
            }
            let dims = ext_dims(&member.module, &ctx.regular, 4 - s).unwrap();
            ensure!(dims.iter().all(|&d| d == 0), "{name} {}: Ext^(1..{})(m,Λ) = {dims:?}", member.label, 4 - s);
            checked += 1;
        }
    }
    Ok(format!("{checked} certified modules"))
}

// ------------------------------------------------------------ criterion 7

/// A right module over a one-vertex algebra: action matrices of x and y.
struct LocalModule {
    dim: usize,
    x: Bits,
    y: Bits,
}

/// An element of LOC3 in the basis 1, x, y.
#[derive(Clone, Copy)]
enum Word {
    X,
    Y,
}

/// `Hom(P_k, N) → Hom(P_{k+1}, N)` for a differential given by the arrow
/// each generator of `P_{k+1}` is sent along: generator `j` goes to
/// `g_{source} · word`.
fn dual_differential(n: &LocalModule, from: usize, edges: &[(usize, Word)]) -> Bits {
    // unknowns: images of the `from` generators, each in N
    let mut m = Bits::zero(from * n.dim, edges.len() * n.dim);
    for (j, &(i, w)) in edges.iter().enumerate() {
        let act = match w {
            Word::X => &n.x,
            Word::Y => &n.y,
        };
        for r in 0..n.dim {
            m.rows[i * n.dim + r] |= act.rows[r] << (j * n.dim);
        }
    }
    m
}

fn loc3_ext1_oracle(n: &LocalModule) -> usize {
    // S ← Λ ← Λ² ← Λ⁴ with d1(g_i) = g·(x, y)_i, d2 sending the four
    // generators to g1·x, g1·y, g2·x, g2·y
    let d1 = dual_differential(n, 1, &[(0, Word::X), (0, Word::Y)]);
    let d2 = dual_differential(n, 2, &[(0, Word::X), (0, Word::Y), (1, Word::X), (1, Word::Y)]);
    let cocycles = 2 * n.dim - d2.rank();
    cocycles - d1.rank()
}

fn loc3_resolution_is_exact() -> bool {
    // Λ in the basis 1, x, y; left multiplication by x and y
    let lx = Bits { rows: vec![0b010, 0, 0], cols: 3 };
    let ly = Bits { rows: vec![0b100, 0, 0], cols: 3 };
    // d1: Λ² → Λ, (λ1, λ2) ↦ xλ1 + yλ2
    let mut d1 = Bits::zero(6, 3);
    for r in 0..3 {
        d1.rows[r] = lx.rows[r];
        d1.rows[3 + r] = ly.rows[r];
    }
    // d2: Λ⁴ → Λ², generators to (x,0), (y,0), (0,x), (0,y)
    let mut d2 = Bits::zero(12, 6);
    for (j, (slot, l)) in [(0, &lx), (0, &ly), (1, &lx), (1, &ly)].into_iter().enumerate() {
        for r in 0..3 {
            d2.rows[3 * j + r] = l.rows[r] << (3 * slot);
        }
    }
    let augmentation_kernel = 2; // rad Λ
    d1.rank() == 3 - (3 - augmentation_kernel) && 6 - d1.rank() == d2.rank() && d2.mul(&d1).is_zero()
}

/// A2 representation: dims at the two vertices and the matrix of `a`.
struct Rep {
    d: [usize; 2],
    a: Bits,
}

/// Per-vertex map between representations, checked to be a homomorphism.
fn hom_rank(src: &Rep, dst: &Rep, f: &[Bits; 2]) -> Option<usize> {
    (src.a.mul(&f[1]) == f[0].mul(&dst.a)).then(|| f[0].rank() + f[1].rank())
}

fn a2_projective(r: &Rep) -> bool {
    // P1 = (k → k), P2 = (0 → k): projective iff a has full row rank
    r.a.rank() == r.d[0]
}

fn a2_injective(r: &Rep) -> bool {
    // I1 = (k → 0), I2 = (k → k): injective iff a has full column rank
    r.a.rank() == r.d[1]
}

fn criterion_7() -> Outcome {
    // LOC3 Ext values from the explicit resolution
    ensure!(loc3_resolution_is_exact(), "LOC3 fixture resolution is not exact");
    let zero = Bits::zero(1, 1);
    let s = LocalModule { dim: 1, x: zero.clone(), y: zero };
    // Λ in the basis 1, x, y; right multiplication by x and y
    let lambda = LocalModule { dim: 3, x: Bits { rows: vec![0b010, 0, 0], cols: 3 }, y: Bits { rows: vec![0b100, 0, 0], cols: 3 } };
    let (oracle_s, oracle_lambda) = (loc3_ext1_oracle(&s), loc3_ext1_oracle(&lambda));
    ensure!(oracle_s == 2 && oracle_lambda == 3, "oracle Ext^1(S,S) {oracle_s}, Ext^1(S,Λ) {oracle_lambda}");
    let loc3 = lab::example("loc3").unwrap().build().unwrap();
    let engine_s = ext(&simple(&loc3, 0), &simple(&loc3, 0), 1).unwrap().dim();
    let engine_lambda = ext(&simple(&loc3, 0), &Module::regular(&loc3), 1).unwrap().dim();
    ensure!(engine_s == oracle_s && engine_lambda == oracle_lambda, "engine Ext^1(S,S) {engine_s}, Ext^1(S,Λ) {engine_lambda}");

    // A2: 0 → Λ → I0 → I1 → 0 with Λ = P1 ⊕ P2, I0 = P1², I1 = S1
    let lambda = Rep { d: [1, 2], a: Bits { rows: vec![0b01], cols: 2 } };
    let i0 = Rep { d: [2, 2], a: Bits::identity(2) };
    let i1 = Rep { d: [1, 0], a: Bits::zero(1, 0) };
    let into = [Bits { rows: vec![0b01], cols: 2 }, Bits::identity(2)];
    let onto = [Bits { rows: vec![0b0, 0b1], cols: 1 }, Bits::zero(2, 0)];
    let (r0, r1) = (hom_rank(&lambda, &i0, &into), hom_rank(&i0, &i1, &onto));
    ensure!(r0 == Some(3) && r1 == Some(1), "A2 injective fixture maps {r0:?} {r1:?}");
    ensure!(into[0].mul(&onto[0]).is_zero(), "A2 injective fixture is not a complex");
    ensure!(a2_injective(&i0) && a2_injective(&i1), "A2 fixture terms not injective");
    let oracle_dominant = if !a2_projective(&i0) { 0 } else if !a2_projective(&i1) { 1 } else { 2 };
    let oracle_injdim = 1;
    // DΛ = S1 ⊕ P1 ← P1² ← P2 ← 0
    let d_lambda = Rep { d: [2, 1], a: Bits { rows: vec![0b0, 0b1], cols: 1 } };
    let p0 = Rep { d: [2, 2], a: Bits::identity(2) };
    let p1 = Rep { d: [0, 1], a: Bits::zero(0, 1) };
    let cover = [Bits::identity(2), Bits { rows: vec![0b0, 0b1], cols: 1 }];
    let kernel = [Bits::zero(0, 2), Bits { rows: vec![0b01], cols: 2 }];
    let (c, k) = (hom_rank(&p0, &d_lambda, &cover), hom_rank(&p1, &p0, &kernel));
    ensure!(c == Some(3) && k == Some(1) && kernel[1].mul(&cover[1]).is_zero(), "A2 projective fixture {c:?} {k:?}");
    ensure!(a2_projective(&p0) && a2_projective(&p1), "A2 projective fixture terms not projective");
    // P0 = P1², P1 = P2
    let oracle_witnesses = vec![Some(0), Some(1)];

    let a2 = lab::example("a2").unwrap().build().unwrap();
    let ctx = AlgebraContext::new(&a2, 4);
    ensure!(ctx.dominant_dimension() == DimBound::Exact(oracle_dominant), "dominant dimension {}", ctx.dominant_dimension());
    ensure!(ctx.inj_dim_regular() == DimBound::Exact(oracle_injdim), "inj.dim Λ {}", ctx.inj_dim_regular());
    let witnesses = gnc_witness_scan(&ctx);
    ensure!(witnesses == oracle_witnesses, "GNC witnesses {witnesses:?}");
    Ok("A2 dom.dim 1, inj.dim 1, GNC {P1:0, P2:1}; LOC3 Ext^1(S,Λ)=3, Ext^1(S,S)=2".to_string())
}

// ------------------------------------------------------------ criterion 8

/// A representation over GF(2): per-vertex dims and one matrix per arrow.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct SmallRep {
    dims: Vec<usize>,
    arrows: Vec<Bits>,
}

struct Shape {
    vertices: usize,
    arrows: Vec<(usize, usize)>,
    /// Monomial relations as pairs of arrow indices.
    relations: Vec<(usize, usize)>,
}

fn satisfies(shape: &Shape, arrows: &[Bits]) -> bool {
    shape.relations.iter().all(|&(a, b)| arrows[a].mul(&arrows[b]).is_zero())
}

/// All representations of total dimension `1..=max` up to isomorphism,
/// deduplicated by the least conjugate under the base-change groups.
fn representatives(shape: &Shape, max: usize) -> Vec<SmallRep> {
    let groups: Vec<Vec<Bits>> = (0..=max).map(invertible).collect();
    let mut out = BTreeSet::new();
    let mut dims = vec![0; shape.vertices];
    loop {
        let total: usize = dims.iter().sum();
        if (1..=max).contains(&total) {
            let sizes: Vec<usize> = shape.arrows.iter().map(|&(s, t)| dims[s] * dims[t]).collect();
            let bits: usize = sizes.iter().sum();
            for code in 0..1u64 << bits {
                let mut shift = 0;
                let arrows: Vec<Bits> = shape
                    .arrows
                    .iter()
                    .zip(&sizes)
                    .map(|(&(s, t), &size)| {
                        let b = Bits::from_code(dims[s], dims[t], code >> shift);
                        shift += size;
                        b
                    })
                    .collect();
                if !satisfies(shape, &arrows) {
                    continue;
                }
                out.insert(canonical(shape, &dims, &arrows, &groups));
            }
        }
        // next dimension vector
        let mut v = 0;
        loop {
            if v == shape.vertices {
                return out.into_iter().collect();
            }
            dims[v] += 1;
            if dims.iter().sum::<usize>() <= max {
                break;
            }
            dims[v] = 0;
            v += 1;
        }
    }
}

fn canonical(shape: &Shape, dims: &[usize], arrows: &[Bits], groups: &[Vec<Bits>]) -> SmallRep {
    let mut best: Option<SmallRep> = None;
    let mut choice = vec![0usize; shape.vertices];
    loop {
        let g: Vec<&Bits> = (0..shape.vertices).map(|v| &groups[dims[v]][choice[v]]).collect();
        let moved: Vec<Bits> = shape
            .arrows
            .iter()
            .zip(arrows)
            .map(|(&(s, t), m)| inverse(g[s], &groups[dims[s]]).mul(m).mul(g[t]))
            .collect();
        let candidate = SmallRep { dims: dims.to_vec(), arrows: moved };
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
        let mut v = 0;
        loop {
            if v == shape.vertices {
                return best.expect("identity is a choice");
            }
            choice[v] += 1;
            if choice[v] < groups[dims[v]].len() {
                break;
            }
            choice[v] = 0;
            v += 1;
        }
    }
}

/// Number of congruence classes of `0 → n → E → m → 0`: middle-term
/// actions `[[n_a, 0], [c_a, m_a]]` satisfying the relations, modulo
/// changes of section.
fn extension_classes(shape: &Shape, m: &SmallRep, n: &SmallRep) -> (u64, u64) {
    let sizes: Vec<usize> = shape.arrows.iter().map(|&(s, t)| m.dims[s] * n.dims[t]).collect();
    let bits: usize = sizes.iter().sum();
    let split = |code: u64| -> Vec<Bits> {
        let mut shift = 0;
        shape
            .arrows
            .iter()
            .zip(&sizes)
            .map(|(&(s, t), &size)| {
                let b = Bits::from_code(m.dims[s], n.dims[t], code >> shift);
                shift += size;
                b
            })
            .collect()
    };
    let mut cocycles = 0u64;
    for code in 0..1u64 << bits {
        let c = split(code);
        let ok = shape.relations.iter().all(|&(a, b)| c[a].mul(&n.arrows[b]).add(&m.arrows[a].mul(&c[b])).is_zero());
        if ok {
            cocycles += 1;
        }
    }
    let h_sizes: Vec<usize> = (0..shape.vertices).map(|v| m.dims[v] * n.dims[v]).collect();
    let h_bits: usize = h_sizes.iter().sum();
    let mut boundaries = BTreeSet::new();
    for code in 0..1u64 << h_bits {
        let mut shift = 0;
        let h: Vec<Bits> = (0..shape.vertices)
            .map(|v| {
                let b = Bits::from_code(m.dims[v], n.dims[v], code >> shift);
                shift += h_sizes[v];
                b
            })
            .collect();
        let boundary: Vec<Bits> = shape
            .arrows
            .iter()
            .enumerate()
            .map(|(a, &(s, t))| h[s].mul(&n.arrows[a]).add(&m.arrows[a].mul(&h[t])))
            .collect();
        boundaries.insert(boundary);
    }
    (cocycles, boundaries.len() as u64)
}

fn to_module(alg: &Arc<Algebra>, r: &SmallRep) -> Module {
    Module::new(alg.clone(), r.dims.clone(), r.arrows.iter().map(Bits::to_matrix).collect()).unwrap()
}

fn criterion_8() -> Outcome {
    let loc3 = Shape { vertices: 1, arrows: vec![(0, 0), (0, 0)], relations: vec![(0, 0), (0, 1), (1, 0), (1, 1)] };
    let a2 = Shape { vertices: 2, arrows: vec![(0, 1)], relations: vec![] };
    let mut summary = Vec::new();
    for (name, shape) in [("loc3", loc3), ("a2", a2)] {
        let alg = lab::example(name).unwrap().build().unwrap();
        let reps = representatives(&shape, 3);
        let modules: Vec<Module> = reps.iter().map(|r| to_module(&alg, r)).collect();
        for (i, x) in modules.iter().enumerate() {
            for y in &modules[..i] {
                ensure!(!is_isomorphic(x, y).unwrap(), "{name}: oracle classes {:?} and {:?} are isomorphic", x.dims(), y.dims());
            }
        }
        let mut pairs = 0;
        for (rm, mm) in reps.iter().zip(&modules) {
            for (rn, mn) in reps.iter().zip(&modules) {
                let (cocycles, boundaries) = extension_classes(&shape, rm, rn);
                ensure!(cocycles % boundaries == 0, "{name}: {cocycles} cocycles, {boundaries} boundaries");
                let classes = cocycles / boundaries;
                let engine = ext(mm, mn, 1).unwrap().dim();
                ensure!(classes == 1 << engine, "{name}: {classes} classes vs dim Ext^1 = {engine} for {rm:?}, {rn:?}");
                pairs += 1;
            }
        }
        summary.push(format!("{name}: {} modules, {pairs} pairs", reps.len()));
    }
    Ok(summary.join("; "))
}

// ------------------------------------------------------------ criterion 9

fn run(args: &[&str]) -> (Vec<u8>, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_syzygy-lab")).args(args).output().expect("binary runs");
    (out.stdout, out.status.code().unwrap_or(-1))
}

fn criterion_9() -> Outcome {
    let dir = std::env::temp_dir().join(format!("syzygy-lab-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for name in lab::example_names() {
        let path = dir.join(format!("{name}.alg"));
        std::fs::write(&path, lab::example_text(name).unwrap()).unwrap();
        let path = path.to_str().unwrap();
        let (first, c1) = run(&["report", path]);
        let (second, c2) = run(&["report", path]);
        ensure!(c1 == 0 && c2 == 0, "{name}: exit codes {c1}, {c2}");
        ensure!(first == second, "{name}: report runs differ");
    }
    std::fs::remove_dir_all(&dir).ok();
    let (one, c1) = run(&["scan", "--jobs", "1"]);
    let (four, c4) = run(&["scan", "--jobs", "4"]);
    ensure!(c1 == 0 && c4 == 0, "scan exit codes {c1}, {c4}");
    ensure!(one == four, "scan streams differ between 1 and 4 jobs");
    let lines = one.iter().filter(|&&b| b == b'\n').count();
    Ok(format!("{} corpus reports repeated byte-identically, scan streams equal ({lines} lines)", lab::example_names().len()))
}

// ------------------------------------------------------------------- main

fn report_line(n: usize, title: &str, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = f();
    let secs = start.elapsed().as_secs_f64();
    let (status, detail) = match (&outcome, secs < 60.0) {
        (Ok(d), true) => ("PASS", d.clone()),
        (Ok(d), false) => ("FAIL", format!("{d}; exceeded 60 s")),
        (Err(e), _) => ("FAIL", e.clone()),
    };
    println!("criterion {n} [{title}]: {status} ({secs:.1} s) {detail}");
    status == "PASS"
}

fn main() -> ExitCode {
    let mut ok = true;
    ok &= report_line(1, "example reproduction", criterion_1);
    ok &= report_line(2, "syzygy isomorphism lemma", criterion_2);
    let mut reports = Vec::new();
    ok &= report_line(3, "left-right symmetry", || {
        reports = scan_set_reports();
        criterion_3(&reports)
    });
    ok &= report_line(4, "Hoshino consistency", || criterion_4(&reports));
    ok &= report_line(5, "duality", criterion_5);
    ok &= report_line(6, "dimension shifting", criterion_6);
    ok &= report_line(7, "derived spot values", criterion_7);
    ok &= report_line(8, "exhaustive Ext^1 oracle", criterion_8);
    ok &= report_line(9, "determinism", criterion_9);
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
