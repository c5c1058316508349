use serde::Serialize;

use crate::module::{dual, injective_envelope_from_socle, projective_cover, Module, Morphism};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ResolutionKind {
    Projective,
    Injective,
}

/// A minimal resolution cut off at a given depth.
///
/// Projective kind: `terms[k] = P_k`, `maps[0]: P_0 → m`, and
/// `maps[k]: P_k → P_{k-1}`. Injective kind: `terms[k] = I_k`,
/// `maps[0]: m → I_0`, and `maps[k]: I_{k-1} → I_k`.
#[derive(Clone, Debug)]
pub struct TruncatedResolution {
    pub kind: ResolutionKind,
    pub target: Module,
    pub terms: Vec<Module>,
    pub maps: Vec<Morphism>,
    /// Vertices of the indecomposable summands of each term.
    pub summands: Vec<Vec<usize>>,
    /// `Ω^k m` (projective kind) or `Ω^{-k} m` (injective kind) for
    /// `k = 0..=terms.len()`.
    pub syzygies: Vec<Module>,
    /// `Some(t)` when the resolution stops with `t` as the last nonzero
    /// term index, i.e. the module has projective (injective) dimension `t`.
    pub terminated: Option<usize>,
    pub minimal: bool,
}

impl TruncatedResolution {
    pub fn depth(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    /// Multiplicity of each indecomposable projective (injective) in term `k`.
    pub fn multiplicities(&self, k: usize) -> Vec<usize> {
        let mut mult = vec![0; self.target.algebra().num_vertices()];
        for &v in &self.summands[k] {
            mult[v] += 1;
        }
        mult
    }

    /// Vertices occurring in term `k`.
    pub fn support(&self, k: usize) -> Vec<usize> {
        let mut s = self.summands[k].clone();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// Checks that consecutive maps compose to zero and that the sequence is
    /// exact at every interior spot, by ranks.
    pub fn is_exact(&self) -> bool {
        let n = self.maps.len();
        for k in 0..n.saturating_sub(1) {
            let (first, second) = match self.kind {
                ResolutionKind::Projective => (&self.maps[k + 1], &self.maps[k]),
                ResolutionKind::Injective => (&self.maps[k], &self.maps[k + 1]),
            };
            if !first.compose(second).is_zero() {
                return false;
            }
            let middle = first.target();
            if first.rank() + second.rank() != middle.dim() {
                return false;
            }
        }
        match (self.kind, self.maps.first()) {
            (ResolutionKind::Projective, Some(aug)) => aug.is_surjective(),
            (ResolutionKind::Injective, Some(aug)) => aug.is_injective(),
            _ => true,
        }
    }
}

/// Minimal projective resolution up to `P_depth`, stopping early when a
/// syzygy vanishes.
pub fn min_proj_resolution(m: &Module, depth: usize) -> TruncatedResolution {
    let mut terms = Vec::new();
    let mut maps: Vec<Morphism> = Vec::new();
    let mut summands = Vec::new();
    let mut syzygies = vec![m.clone()];
    let mut terminated = if m.is_zero() { Some(0) } else { None };
    let mut previous_inclusion: Option<Morphism> = None;
    for k in 0..=depth {
        let current = syzygies[k].clone();
        if current.is_zero() {
            break;
        }
        let cover = projective_cover(&current);
        let map = match &previous_inclusion {
            None => cover.epi.clone(),
            Some(incl) => cover.epi.compose(incl),
        };
        terms.push(cover.module().clone());
        maps.push(map);
        summands.push(cover.summands.clone());
        let next = current.syzygy();
        previous_inclusion = Some(current.syzygy_inclusion());
        if next.is_zero() {
            terminated = Some(k);
        }
        syzygies.push(next);
    }
    TruncatedResolution {
        kind: ResolutionKind::Projective,
        target: m.clone(),
        terms,
        maps,
        summands,
        syzygies,
        terminated,
        minimal: true,
    }
}

/// Minimal injective resolution up to `I_depth`, obtained by dualizing the
/// projective resolution of `D m` over the opposite algebra.
pub fn min_inj_resolution(m: &Module, depth: usize) -> TruncatedResolution {
    let r = min_proj_resolution(&dual(m), depth);
    let terms: Vec<Module> = r.terms.iter().map(dual).collect();
    let mut maps: Vec<Morphism> = Vec::with_capacity(r.maps.len());
    for (k, map) in r.maps.iter().enumerate() {
        let d = map.dual();
        let source = if k == 0 { m.clone() } else { terms[k - 1].clone() };
        maps.push(d.with_endpoints(source, terms[k].clone()));
    }
    let mut syzygies: Vec<Module> = r.syzygies.iter().map(dual).collect();
    syzygies[0] = m.clone();
    TruncatedResolution {
        kind: ResolutionKind::Injective,
        target: m.clone(),
        terms,
        maps,
        summands: r.summands,
        syzygies,
        terminated: r.terminated,
        minimal: true,
    }
}

/// Minimal injective resolution built on the Λ side by iterating
/// envelopes and cokernels.
pub fn min_inj_resolution_by_envelopes(m: &Module, depth: usize) -> TruncatedResolution {
    let mut terms = Vec::new();
    let mut maps: Vec<Morphism> = Vec::new();
    let mut summands = Vec::new();
    let mut syzygies = vec![m.clone()];
    let mut terminated = if m.is_zero() { Some(0) } else { None };
    let mut previous_projection: Option<Morphism> = None;
    for k in 0..=depth {
        let current = syzygies[k].clone();
        if current.is_zero() {
            break;
        }
        let env = injective_envelope_from_socle(&current);
        let map = match &previous_projection {
            None => env.mono.clone(),
            Some(p) => p.compose(&env.mono),
        };
        let (next, projection) = env.mono.cokernel();
        terms.push(env.module().clone());
        maps.push(map);
        summands.push(env.summands.clone());
        if next.is_zero() {
            terminated = Some(k);
        }
        previous_projection = Some(projection);
        syzygies.push(next);
    }
    TruncatedResolution {
        kind: ResolutionKind::Injective,
        target: m.clone(),
        terms,
        maps,
        summands,
        syzygies,
        terminated,
        minimal: true,
    }
}

/// `Ω^n m`, the `n`-th syzygy of the minimal resolution.
pub fn syzygy_power(m: &Module, n: usize) -> Module {
    let mut x = m.clone();
    for _ in 0..n {
        if x.is_zero() {
            break;
        }
        x = x.syzygy();
    }
    x
}
