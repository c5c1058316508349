//! Resolutions, Ext, the stable category and the transpose.

mod duality;
mod ext;
mod resolution;
mod stable;

pub use duality::{
    dual_differential, evaluation_map, is_torsionless, left_approximation, minimal_presentation, star_dual,
    torsion_spans, transpose, LeftApproximation, MinimalPresentation, StarDual,
};
pub use ext::{ext, ext_dims, extension_middle_term, ExtClass, ExtGroup, ShortExactSequence};
pub use resolution::{
    min_inj_resolution, min_inj_resolution_by_envelopes, min_proj_resolution, syzygy_power, ResolutionKind,
    TruncatedResolution,
};
pub use stable::{stable_hom, syzygy_induced_map, syzygy_stable_map, StableHom};

#[cfg(test)]
pub(crate) mod tests {
    use std::sync::Arc;

    use crate::algebra::{build_algebra, Algebra, QuiverPresentation};
    use crate::linalg::Field;

    pub(crate) fn loc3() -> Arc<Algebra> {
        let mut p = QuiverPresentation::new(&["1"], 2);
        p.add_arrow("x", "1", "1").unwrap();
        p.add_arrow("y", "1", "1").unwrap();
        for r in ["x*x", "x*y", "y*x", "y*y"] {
            p.add_relation(r).unwrap();
        }
        build_algebra(&p, Field::gf2()).unwrap()
    }

    pub(crate) fn a2() -> Arc<Algebra> {
        let mut p = QuiverPresentation::new(&["1", "2"], 2);
        p.add_arrow("a", "1", "2").unwrap();
        build_algebra(&p, Field::gf2()).unwrap()
    }
}
