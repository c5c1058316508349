use std::sync::Arc;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::homology::{min_inj_resolution, transpose};
use crate::module::{decompose, dual, injective, is_isomorphic, projective, simple, Module};

#[derive(Clone, Debug)]
pub struct PoolMember {
    pub label: String,
    pub module: Module,
}

#[derive(Clone, Debug)]
pub struct ModulePool {
    pub members: Vec<PoolMember>,
    pub cap: usize,
    /// Set when the cap stopped the closure before `depth` rounds.
    pub truncated: bool,
    /// Labels of modules too large to decompose, left out of the pool.
    pub skipped: Vec<String>,
}

/// Modules above this dimension are not decomposed into the pool.
pub const MAX_ABSORBED_DIM: usize = 64;

#[derive(Serialize)]
struct MemberSummary<'a> {
    label: &'a str,
    dims: &'a [usize],
}

impl Serialize for ModulePool {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(4))?;
        map.serialize_entry("cap", &self.cap)?;
        map.serialize_entry("truncated", &self.truncated)?;
        map.serialize_entry("skipped", &self.skipped)?;
        let members: Vec<MemberSummary> =
            self.members.iter().map(|m| MemberSummary { label: &m.label, dims: m.module.dims() }).collect();
        map.serialize_entry("members", &members)?;
        map.end()
    }
}

impl ModulePool {
    /// A pool holding exactly the given modules, in order.
    pub fn from_modules(members: Vec<(String, Module)>) -> ModulePool {
        let cap = members.len();
        let members = members.into_iter().map(|(label, module)| PoolMember { label, module }).collect();
        ModulePool { members, cap, truncated: false, skipped: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn modules(&self) -> impl Iterator<Item = &Module> {
        self.members.iter().map(|m| &m.module)
    }

    pub fn position(&self, m: &Module) -> Option<usize> {
        self.members
            .iter()
            .position(|p| p.module.dims() == m.dims() && is_isomorphic(&p.module, m).expect("same algebra"))
    }

    /// Adds the indecomposable summands of `m` not already present. Returns
    /// the indices of the summands of `m`, whether new or old, or `None` once
    /// the cap is hit.
    fn absorb(&mut self, label: &str, m: &Module) -> Option<Vec<usize>> {
        if m.is_zero() {
            return Some(Vec::new());
        }
        if m.dim() > MAX_ABSORBED_DIM {
            self.skipped.push(label.to_string());
            return Some(Vec::new());
        }
        let parts = decompose(m).expect("decomposition over the module's algebra").parts();
        let many = parts.len() > 1;
        let mut indices = Vec::new();
        for (i, part) in parts.into_iter().enumerate() {
            if let Some(k) = self.position(&part) {
                indices.push(k);
                continue;
            }
            if self.members.len() >= self.cap {
                self.truncated = true;
                return None;
            }
            let label = if many { format!("{label}#{}", i + 1) } else { label.to_string() };
            indices.push(self.members.len());
            self.members.push(PoolMember { label, module: part });
        }
        Some(indices)
    }
}

/// Indecomposable summands of simples, projectives, injectives, `rad Λ` and
/// `Coker(Λ → I_0)`, closed under `Ω` and `D Tr Ω` for `depth` rounds,
/// up to isomorphism and at most `cap` members. Modules larger than
/// [`MAX_ABSORBED_DIM`] are recorded as skipped.
pub fn default_pool(algebra: &Arc<Algebra>, depth: usize, cap: usize) -> ModulePool {
    let mut pool = ModulePool { members: Vec::new(), cap, truncated: false, skipped: Vec::new() };
    let name = |v: usize| algebra.presentation().vertices[v].clone();
    let regular = Module::regular(algebra);
    let mut seeds: Vec<(String, Module)> = Vec::new();
    for v in 0..algebra.num_vertices() {
        seeds.push((format!("S{}", name(v)), simple(algebra, v)));
    }
    for v in 0..algebra.num_vertices() {
        seeds.push((format!("P{}", name(v)), projective(algebra, v)));
    }
    for v in 0..algebra.num_vertices() {
        seeds.push((format!("I{}", name(v)), injective(algebra, v)));
    }
    seeds.push(("rad".to_string(), regular.radical().0));
    let i0 = min_inj_resolution(&regular, 0);
    seeds.push(("coker".to_string(), i0.maps[0].cokernel().0));

    let mut frontier = Vec::new();
    for (label, m) in &seeds {
        match pool.absorb(label, m) {
            Some(ix) => frontier.extend(ix),
            None => return pool,
        }
    }
    for _ in 0..depth {
        frontier.sort_unstable();
        frontier.dedup();
        let mut next = Vec::new();
        for k in frontier {
            let (label, m) = (pool.members[k].label.clone(), pool.members[k].module.clone());
            let omega = m.syzygy();
            let shifted = dual(&transpose(&omega));
            for (l, x) in [(format!("Ω({label})"), omega), (format!("DTrΩ({label})"), shifted)] {
                let before = pool.len();
                match pool.absorb(&l, &x) {
                    Some(_) => next.extend(before..pool.len()),
                    None => return pool,
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    pool
}
