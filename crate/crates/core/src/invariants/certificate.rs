use std::fmt;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::homology::{ext, ResolutionKind};
use crate::linalg::Scalar;
use crate::module::{hom_space, projective, projective_sum, Module, Morphism};

/// A dimension that is either known exactly or bounded below by the cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum DimBound {
    Exact(usize),
    /// At least `bound`. `terminated` marks the case where the resolution
    /// stopped and every computed term qualified, so the value is infinite.
    AtLeast { bound: usize, terminated: bool },
}

impl DimBound {
    pub fn exact(&self) -> Option<usize> {
        match self {
            DimBound::Exact(n) => Some(*n),
            DimBound::AtLeast { .. } => None,
        }
    }

    /// Decides `value ≤ k` when the bound allows it.
    pub fn at_most(&self, k: usize) -> Option<bool> {
        match *self {
            DimBound::Exact(n) => Some(n <= k),
            DimBound::AtLeast { bound, .. } if bound > k => Some(false),
            DimBound::AtLeast { .. } => None,
        }
    }

    /// Decides `value ≥ d` when the bound allows it.
    pub fn at_least(&self, d: usize) -> Option<bool> {
        match *self {
            DimBound::Exact(n) => Some(n >= d),
            DimBound::AtLeast { bound, .. } if bound >= d => Some(true),
            DimBound::AtLeast { .. } => None,
        }
    }
}

impl fmt::Display for DimBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimBound::Exact(n) => write!(f, "{n}"),
            DimBound::AtLeast { bound, .. } => write!(f, "≥{bound}"),
        }
    }
}

impl Serialize for DimBound {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            DimBound::Exact(n) => s.serialize_u64(*n as u64),
            DimBound::AtLeast { .. } => s.serialize_str(&self.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Truth {
    #[serde(rename = "TRUE")]
    True,
    #[serde(rename = "FALSE")]
    False,
    #[serde(rename = "UNKNOWN_AT_DEPTH")]
    Unknown,
}

impl Truth {
    pub fn from_bool(b: bool) -> Truth {
        if b {
            Truth::True
        } else {
            Truth::False
        }
    }

    pub fn decided(&self) -> Option<bool> {
        match self {
            Truth::True => Some(true),
            Truth::False => Some(false),
            Truth::Unknown => None,
        }
    }

    /// Membership reading: `IN`, `OUT` or `UNKNOWN_AT_DEPTH`.
    pub fn membership_label(&self) -> &'static str {
        match self {
            Truth::True => "IN",
            Truth::False => "OUT",
            Truth::Unknown => "UNKNOWN_AT_DEPTH",
        }
    }
}

/// An exact sequence `0 → m → Q_0 → Q_1 → ⋯ → Q_{L-1}` with projective
/// terms, built from left `add Λ`-approximations. When `terminated`, the
/// last cokernel is zero and the sequence is a finite projective coresolution.
#[derive(Clone, Debug)]
pub struct CosyzygyChain {
    pub module: Module,
    pub maps: Vec<Morphism>,
    pub summands: Vec<Vec<usize>>,
    pub cokernel_dims: Vec<usize>,
    pub terminated: bool,
    /// Stage at which the approximation failed to be injective, if any.
    pub failed_at: Option<usize>,
}

impl CosyzygyChain {
    /// Number of projective terms that were attached injectively.
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    /// Whether the chain shows `m ∈ Ω^n(mod-Λ)`.
    pub fn certifies(&self, n: usize) -> bool {
        self.terminated || self.length() >= n
    }

    /// Exactness check from the stored maps alone.
    pub fn recheck(&self) -> bool {
        let alg = self.module.algebra();
        if self.maps.is_empty() {
            return !self.terminated || self.module.is_zero();
        }
        if self.maps[0].source() != &self.module || !self.maps[0].is_injective() {
            return false;
        }
        for (map, summands) in self.maps.iter().zip(&self.summands) {
            if map.target() != &projective_sum(alg, summands) {
                return false;
            }
        }
        for k in 0..self.maps.len() - 1 {
            let (f, g) = (&self.maps[k], &self.maps[k + 1]);
            if !f.compose(g).is_zero() || f.rank() + g.rank() != f.target().dim() {
                return false;
            }
        }
        !self.terminated || self.maps.last().expect("nonempty").is_surjective()
    }
}

/// Witness data attached to a verdict.
#[derive(Clone, Debug)]
pub enum Certificate {
    /// The module is projective: its cover is an isomorphism.
    Projective { summands: Vec<usize> },
    Chain(CosyzygyChain),
    /// `Ext^i(Tr m, Λ) = 0` for `1 ≤ i ≤ degree`.
    Torsionfree { degree: usize, transpose_dim: usize, ext_dims: Vec<usize> },
    /// A nonzero vector killed by every map into `Λ`.
    NotTorsionless { module: Module, vertex: usize, witness: Vec<Scalar> },
    /// Terms of a minimal resolution.
    Resolution { kind: ResolutionKind, summands: Vec<Vec<usize>>, terminated: Option<usize> },
    /// A cocycle representing a nonzero class in `Ext^degree(m, target)`.
    ExtNonzero { module: Module, target: Module, degree: usize, cocycle: Morphism },
    /// `dim Ext^i(m_j, Λ)` for every checked member `j`.
    ExtTable { rows: Vec<(usize, Vec<usize>)> },
    /// Per-index sub-verdicts.
    Steps(Vec<(usize, Truth)>),
    /// What was tried before giving up.
    Budget { exhausted: String },
    None,
}

impl Certificate {
    fn kind(&self) -> &'static str {
        match self {
            Certificate::Projective { .. } => "projective",
            Certificate::Chain(_) => "cosyzygy_chain",
            Certificate::Torsionfree { .. } => "torsionfree",
            Certificate::NotTorsionless { .. } => "not_torsionless",
            Certificate::Resolution { .. } => "resolution",
            Certificate::ExtNonzero { .. } => "ext_nonzero",
            Certificate::ExtTable { .. } => "ext_table",
            Certificate::Steps(_) => "steps",
            Certificate::Budget { .. } => "budget",
            Certificate::None => "none",
        }
    }
}

impl Serialize for Certificate {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        map.serialize_entry("kind", self.kind())?;
        match self {
            Certificate::Projective { summands } => map.serialize_entry("summands", summands)?,
            Certificate::Chain(c) => {
                map.serialize_entry("length", &c.length())?;
                map.serialize_entry("terms", &c.summands)?;
                map.serialize_entry("cokernel_dims", &c.cokernel_dims)?;
                map.serialize_entry("terminated", &c.terminated)?;
                map.serialize_entry("failed_at", &c.failed_at)?;
            }
            Certificate::Torsionfree { degree, transpose_dim, ext_dims } => {
                map.serialize_entry("degree", degree)?;
                map.serialize_entry("transpose_dim", transpose_dim)?;
                map.serialize_entry("ext_dims", ext_dims)?;
            }
            Certificate::NotTorsionless { module, vertex, witness } => {
                map.serialize_entry("module_dims", module.dims())?;
                map.serialize_entry("vertex", vertex)?;
                map.serialize_entry("witness", &witness.iter().map(ToString::to_string).collect::<Vec<_>>())?;
            }
            Certificate::Resolution { kind, summands, terminated } => {
                map.serialize_entry("resolution", kind)?;
                map.serialize_entry("terms", summands)?;
                map.serialize_entry("terminated", terminated)?;
            }
            Certificate::ExtNonzero { module, degree, cocycle, .. } => {
                map.serialize_entry("module_dims", module.dims())?;
                map.serialize_entry("degree", degree)?;
                map.serialize_entry("cocycle_rank", &cocycle.rank())?;
            }
            Certificate::ExtTable { rows } => map.serialize_entry("rows", rows)?,
            Certificate::Steps(steps) => map.serialize_entry("steps", steps)?,
            Certificate::Budget { exhausted } => map.serialize_entry("exhausted", exhausted)?,
            Certificate::None => {}
        }
        map.end()
    }
}

/// A three-valued answer at a depth, with its evidence.
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub value: Truth,
    pub depth: usize,
    pub certificate: Certificate,
}

impl Verdict {
    pub fn new(value: Truth, depth: usize, certificate: Certificate) -> Verdict {
        Verdict { value, depth, certificate }
    }

    pub fn is_true(&self) -> bool {
        self.value == Truth::True
    }

    pub fn is_false(&self) -> bool {
        self.value == Truth::False
    }

    pub fn is_unknown(&self) -> bool {
        self.value == Truth::Unknown
    }

    /// Re-validates the certificate against the verdict value. Unknown
    /// verdicts need no evidence and always pass.
    pub fn recheck(&self) -> bool {
        if self.value == Truth::Unknown {
            return true;
        }
        match &self.certificate {
            Certificate::Projective { .. } => self.value == Truth::True,
            Certificate::Chain(c) => self.value == Truth::True && c.recheck() && c.certifies(self.depth),
            Certificate::Torsionfree { ext_dims, .. } => self.value == Truth::True && ext_dims.iter().all(|&d| d == 0),
            Certificate::NotTorsionless { module, vertex, witness } => {
                if self.value != Truth::False || witness.iter().all(Scalar::is_zero) {
                    return false;
                }
                let alg = module.algebra();
                (0..alg.num_vertices()).all(|v| {
                    hom_space(module, &projective(alg, v))
                        .map(|h| h.morphisms().iter().all(|phi| phi.component(*vertex).apply(witness).iter().all(Scalar::is_zero)))
                        .unwrap_or(false)
                })
            }
            Certificate::ExtNonzero { module, target, degree, cocycle } => match ext(module, target, *degree) {
                Ok(group) => group.cocycles.contains(cocycle) && group.class_coordinates(cocycle).iter().any(|c| !c.is_zero()),
                Err(_) => false,
            },
            Certificate::ExtTable { rows } => {
                self.value != Truth::True || rows.iter().all(|(_, dims)| dims.iter().all(|&d| d == 0))
            }
            Certificate::Steps(steps) => {
                let all = steps.iter().all(|(_, t)| *t == Truth::True);
                let any_false = steps.iter().any(|(_, t)| *t == Truth::False);
                match self.value {
                    Truth::True => all,
                    Truth::False => any_false,
                    Truth::Unknown => true,
                }
            }
            Certificate::Resolution { .. } => true,
            Certificate::Budget { .. } | Certificate::None => false,
        }
    }
}
