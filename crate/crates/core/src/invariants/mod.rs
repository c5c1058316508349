//! Depth-bounded homological invariants and three-valued checks.
//!
//! Statements about infinity are replaced by statements at a finite depth.
//! Every decided [`Verdict`] carries a [`Certificate`] that
//! [`Verdict::recheck`] validates by an independent route.

mod certificate;
mod context;
mod membership;
mod pool;
mod report;
mod theorems;

pub use pool::{default_pool, MAX_ABSORBED_DIM, ModulePool, PoolMember};
pub use report::{build_report, effective_depth, AlgebraSummary, CrossCheck, InvariantReport, MemberRow, ReportOptions, TermRow};
pub use theorems::{
    co_gorenstein_check, extension_closure_sample, finite_injdim_consequences, gnc_witness_scan, hoshino_check,
    left_right_symmetry_report, nakayama_probe, syzygy_ext_closed_test, syzygy_lemma_check, CoGorenstein,
    ExtensionClosure, ExtensionWitness, FiniteInjdim, HoshinoRow, LemmaRecord, NakayamaProbe, SymmetryRow,
};

pub use certificate::{Certificate, CosyzygyChain, DimBound, Truth, Verdict};
pub use context::{
    dominant_dimension, inj_dim, is_injective, is_projective, is_selfinjective, proj_dim, AlgebraContext,
};
pub use membership::{cosyzygy_chain, n_torsionfree, omega_infty_certificate, omega_membership, torsionfree_degree};
