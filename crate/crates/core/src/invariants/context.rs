use std::sync::Arc;

use crate::algebra::Algebra;
use crate::homology::{min_inj_resolution, min_proj_resolution, TruncatedResolution};
use crate::module::{dual_regular, injective, projective, Module};

use super::certificate::DimBound;

pub fn is_projective(m: &Module) -> bool {
    m.is_projective()
}

pub fn is_injective(m: &Module) -> bool {
    m.is_injective()
}

fn bound_from(resolution: &TruncatedResolution, cap: usize) -> DimBound {
    match resolution.terminated {
        Some(t) if t < cap => DimBound::Exact(t),
        _ => DimBound::AtLeast { bound: cap, terminated: false },
    }
}

/// Projective dimension, exact when the minimal resolution stops before `P_cap`.
pub fn proj_dim(m: &Module, cap: usize) -> DimBound {
    if m.is_zero() {
        return DimBound::Exact(0);
    }
    if cap == 0 {
        return DimBound::AtLeast { bound: 0, terminated: false };
    }
    bound_from(&min_proj_resolution(m, cap - 1), cap)
}

/// Injective dimension, exact when the minimal resolution stops before `I_cap`.
pub fn inj_dim(m: &Module, cap: usize) -> DimBound {
    if m.is_zero() {
        return DimBound::Exact(0);
    }
    if cap == 0 {
        return DimBound::AtLeast { bound: 0, terminated: false };
    }
    bound_from(&min_inj_resolution(m, cap - 1), cap)
}

/// Largest of the given dimensions.
pub(crate) fn max_bound(bounds: impl IntoIterator<Item = DimBound>) -> DimBound {
    let mut exact = 0;
    let mut lower: Option<usize> = None;
    for b in bounds {
        match b {
            DimBound::Exact(n) => exact = exact.max(n),
            DimBound::AtLeast { bound, .. } => lower = Some(lower.map_or(bound, |l: usize| l.max(bound))),
        }
    }
    match lower {
        Some(l) => DimBound::AtLeast { bound: l.max(exact), terminated: false },
        None => DimBound::Exact(exact),
    }
}

fn dominant_from(resolution: &TruncatedResolution, injective_is_projective: &[bool], cap: usize) -> DimBound {
    for (k, summands) in resolution.summands.iter().enumerate().take(cap) {
        if summands.iter().any(|&v| !injective_is_projective[v]) {
            return DimBound::Exact(k);
        }
    }
    DimBound::AtLeast { bound: cap, terminated: resolution.terminated.is_some_and(|t| t < cap) }
}

/// Index of the first non-projective term of the minimal injective
/// resolution of `Λ`, or `≥ cap`.
pub fn dominant_dimension(algebra: &Arc<Algebra>, cap: usize) -> DimBound {
    let flags: Vec<bool> = (0..algebra.num_vertices()).map(|v| injective(algebra, v).is_projective()).collect();
    let resolution = min_inj_resolution(&Module::regular(algebra), cap.saturating_sub(1));
    dominant_from(&resolution, &flags, cap)
}

pub fn is_selfinjective(algebra: &Arc<Algebra>) -> bool {
    (0..algebra.num_vertices()).all(|v| projective(algebra, v).is_injective())
}

/// Shared data for the checks on one algebra at one depth.
#[derive(Clone, Debug)]
pub struct AlgebraContext {
    pub algebra: Arc<Algebra>,
    pub depth: usize,
    pub regular: Module,
    pub dual_regular: Module,
    /// `P_0(DΛ), …, P_depth(DΛ)`.
    pub dual_resolution: TruncatedResolution,
    /// `I_0(Λ), …, I_depth(Λ)`.
    pub injective_resolution: TruncatedResolution,
    pub projective_is_injective: Vec<bool>,
    pub injective_is_projective: Vec<bool>,
    /// `inj.dim P_v` with cap `depth + 2`.
    pub projective_inj_dims: Vec<DimBound>,
    /// `proj.dim I_v` with cap `depth + 2`.
    pub injective_proj_dims: Vec<DimBound>,
}

impl AlgebraContext {
    pub fn new(algebra: &Arc<Algebra>, depth: usize) -> AlgebraContext {
        let nv = algebra.num_vertices();
        let regular = Module::regular(algebra);
        let dual_regular = dual_regular(algebra);
        let projectives: Vec<Module> = (0..nv).map(|v| projective(algebra, v)).collect();
        let injectives: Vec<Module> = (0..nv).map(|v| injective(algebra, v)).collect();
        AlgebraContext {
            algebra: algebra.clone(),
            depth,
            dual_resolution: min_proj_resolution(&dual_regular, depth),
            injective_resolution: min_inj_resolution(&regular, depth),
            projective_is_injective: projectives.iter().map(Module::is_injective).collect(),
            injective_is_projective: injectives.iter().map(Module::is_projective).collect(),
            projective_inj_dims: projectives.iter().map(|p| inj_dim(p, depth + 2)).collect(),
            injective_proj_dims: injectives.iter().map(|i| proj_dim(i, depth + 2)).collect(),
            regular,
            dual_regular,
        }
    }

    pub fn is_selfinjective(&self) -> bool {
        self.projective_is_injective.iter().all(|&b| b)
    }

    pub fn dominant_dimension(&self) -> DimBound {
        dominant_from(&self.injective_resolution, &self.injective_is_projective, self.depth)
    }

    pub fn inj_dim_regular(&self) -> DimBound {
        match self.injective_resolution.terminated {
            Some(t) => DimBound::Exact(t),
            None => DimBound::AtLeast { bound: self.depth + 1, terminated: false },
        }
    }

    /// Summand vertices of `P_k(DΛ)`, empty past termination.
    pub fn dual_term(&self, k: usize) -> &[usize] {
        self.dual_resolution.summands.get(k).map_or(&[], Vec::as_slice)
    }

    /// Summand vertices of `I_k(Λ)`, empty past termination.
    pub fn injective_term(&self, k: usize) -> &[usize] {
        self.injective_resolution.summands.get(k).map_or(&[], Vec::as_slice)
    }

    /// `inj.dim P_k(DΛ)` from the per-vertex values.
    pub fn dual_term_inj_dim(&self, k: usize) -> DimBound {
        max_bound(self.dual_term(k).iter().map(|&v| self.projective_inj_dims[v]))
    }

    /// `proj.dim I_k(Λ)` from the per-vertex values.
    pub fn injective_term_proj_dim(&self, k: usize) -> DimBound {
        max_bound(self.injective_term(k).iter().map(|&v| self.injective_proj_dims[v]))
    }
}
