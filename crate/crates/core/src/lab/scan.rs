use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::algebra::{build_algebra, QuiverPresentation};
use crate::invariants::{build_report, DimBound, InvariantReport, ReportOptions, Truth};
use crate::linalg::Field;

use super::LabError;

pub const MAX_VERTICES: usize = 3;
pub const MAX_ARROWS: usize = 4;
const ARROW_NAMES: [&str; MAX_ARROWS] = ["a", "b", "c", "d"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanMode {
    /// `kQ/J²`, one algebra per quiver.
    RadSquareZero,
    /// `kQ/(M + J³)` for every set `M` of paths of length two.
    RadCubeZero,
}

#[derive(Clone, Debug)]
pub struct ScanOptions {
    pub vertices: usize,
    pub arrows: usize,
    pub mode: ScanMode,
    pub field: Field,
    pub report: ReportOptions,
    pub jobs: Option<usize>,
}

/// A quiver with monomial length-two relations, up to relabeling. With
/// nilpotency 3 the presentation also lists every length-three path not
/// already divisible by a relation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shape {
    pub vertices: usize,
    pub arrows: Vec<(usize, usize)>,
    pub relations: Vec<(usize, usize)>,
    pub nilpotency: usize,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

impl Shape {
    /// Lexicographically least relabeling of vertices and arrows.
    pub fn canonical(&self) -> Shape {
        let mut best: Option<Shape> = None;
        for sigma in permutations(self.vertices) {
            for perm in permutations(self.arrows.len()) {
                // new arrow i is old arrow perm[i]
                let mut inverse = vec![0; perm.len()];
                for (i, &old) in perm.iter().enumerate() {
                    inverse[old] = i;
                }
                let arrows: Vec<(usize, usize)> =
                    perm.iter().map(|&old| (sigma[self.arrows[old].0], sigma[self.arrows[old].1])).collect();
                let mut relations: Vec<(usize, usize)> =
                    self.relations.iter().map(|&(x, y)| (inverse[x], inverse[y])).collect();
                relations.sort_unstable();
                let candidate = Shape { vertices: self.vertices, arrows, relations, nilpotency: self.nilpotency };
                if best.as_ref().is_none_or(|b| candidate < *b) {
                    best = Some(candidate);
                }
            }
        }
        best.expect("at least the identity relabeling")
    }

    pub fn presentation(&self) -> QuiverPresentation {
        let names: Vec<String> = (1..=self.vertices).map(|v| v.to_string()).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let mut p = QuiverPresentation::new(&refs, self.nilpotency);
        for (i, &(s, t)) in self.arrows.iter().enumerate() {
            p.add_arrow(ARROW_NAMES[i], &names[s], &names[t]).expect("fresh names on known vertices");
        }
        for &(x, y) in &self.relations {
            p.add_relation(&format!("{}*{}", ARROW_NAMES[x], ARROW_NAMES[y])).expect("composable pair");
        }
        if self.nilpotency == 3 {
            let na = self.arrows.len();
            for (x, &(_, mid)) in self.arrows.iter().enumerate() {
                for y in (0..na).filter(|&y| mid == self.arrows[y].0) {
                    for z in (0..na).filter(|&z| self.arrows[y].1 == self.arrows[z].0) {
                        if !self.relations.contains(&(x, y)) && !self.relations.contains(&(y, z)) {
                            let path = format!("{}*{}*{}", ARROW_NAMES[x], ARROW_NAMES[y], ARROW_NAMES[z]);
                            p.add_relation(&path).expect("composable triple");
                        }
                    }
                }
            }
        }
        p
    }

    /// Compact identifier such as `v1[1>1,1>1]r[aa,ab,ba,bb]n3`.
    pub fn id(&self) -> String {
        let arrows: Vec<String> = self.arrows.iter().map(|&(s, t)| format!("{}>{}", s + 1, t + 1)).collect();
        let relations: Vec<String> =
            self.relations.iter().map(|&(x, y)| format!("{}{}", ARROW_NAMES[x], ARROW_NAMES[y])).collect();
        format!("v{}[{}]r[{}]n{}", self.vertices, arrows.join(","), relations.join(","), self.nilpotency)
    }
}

fn arrow_multisets(kinds: usize, count: usize, start: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if prefix.len() == count {
        out.push(prefix.clone());
        return;
    }
    for k in start..kinds {
        prefix.push(k);
        arrow_multisets(kinds, count, k, prefix, out);
        prefix.pop();
    }
}

/// All shapes within the bounds, one per relabeling class, in canonical order.
pub fn enumerate_shapes(max_vertices: usize, max_arrows: usize, mode: ScanMode) -> Result<Vec<Shape>, LabError> {
    if max_vertices == 0 || max_vertices > MAX_VERTICES {
        return Err(LabError::Bounds(format!("--vertices must be between 1 and {MAX_VERTICES}, got {max_vertices}")));
    }
    if max_arrows > MAX_ARROWS {
        return Err(LabError::Bounds(format!("--arrows must be at most {MAX_ARROWS}, got {max_arrows}")));
    }
    let mut seen = BTreeSet::new();
    for nv in 1..=max_vertices {
        for na in 0..=max_arrows {
            let mut multisets = Vec::new();
            arrow_multisets(nv * nv, na, 0, &mut Vec::new(), &mut multisets);
            for m in multisets {
                let arrows: Vec<(usize, usize)> = m.iter().map(|&k| (k / nv, k % nv)).collect();
                let pairs: Vec<(usize, usize)> = (0..na)
                    .flat_map(|x| (0..na).map(move |y| (x, y)))
                    .filter(|&(x, y)| arrows[x].1 == arrows[y].0)
                    .collect();
                match mode {
                    ScanMode::RadSquareZero => {
                        let shape = Shape { vertices: nv, arrows, relations: pairs, nilpotency: 2 };
                        seen.insert(shape.canonical());
                    }
                    ScanMode::RadCubeZero => {
                        for mask in 0u64..(1u64 << pairs.len()) {
                            let relations = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
                            let shape = Shape { vertices: nv, arrows: arrows.clone(), relations, nilpotency: 3 };
                            seen.insert(shape.canonical());
                        }
                    }
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// One line of scan output.
#[derive(Clone, Debug, Serialize)]
pub struct ScanRecord {
    pub index: usize,
    pub id: String,
    pub mode: ScanMode,
    pub field: String,
    pub vertices: Vec<String>,
    pub arrows: Vec<String>,
    pub relations: Vec<String>,
    pub nilpotency: usize,
    pub dimension: usize,
    pub dominant_dimension: DimBound,
    pub selfinjective: bool,
    pub inj_dim_regular: DimBound,
    pub gnc_witnesses: Map<String, Value>,
    pub co_gorenstein: Truth,
    pub syzygy_extension_closed: Vec<Truth>,
    pub extension_closure_level_one: &'static str,
    pub cross_checks: Map<String, Value>,
    pub flags: Vec<&'static str>,
}

impl ScanRecord {
    pub fn theorem_violation(&self) -> bool {
        self.flags.contains(&"THEOREM_VIOLATION")
    }
}

pub fn record_from_report(index: usize, mode: ScanMode, report: &InvariantReport, p: &QuiverPresentation) -> ScanRecord {
    let mut flags = Vec::new();
    if report.theorem_violation() {
        flags.push("THEOREM_VIOLATION");
    }
    if report.nc_tension() {
        flags.push("NC_TENSION");
    }
    if report.gnc_gap() {
        flags.push("GNC_GAP");
    }
    let mut cross_checks = Map::new();
    for c in &report.cross_checks {
        cross_checks.insert(c.name.to_string(), serde_json::to_value(c.value).expect("plain enum"));
    }
    ScanRecord {
        index,
        id: report.algebra.id.clone(),
        mode,
        field: report.algebra.field.clone(),
        vertices: report.algebra.vertices.clone(),
        arrows: report.algebra.arrows.clone(),
        relations: p.relations.iter().map(|r| p.relation_text(r)).collect(),
        nilpotency: p.nilpotency,
        dimension: report.algebra.dimension,
        dominant_dimension: report.dominant_dimension,
        selfinjective: report.selfinjective,
        inj_dim_regular: report.inj_dim_regular,
        gnc_witnesses: report.gnc_witnesses.clone(),
        co_gorenstein: report.co_gorenstein.verdict.value,
        syzygy_extension_closed: report.syzygy_extension_closed.iter().map(|v| v.value).collect(),
        extension_closure_level_one: report.extension_closure_sample.outcome(),
        cross_checks,
        flags,
    }
}

fn scan_one(index: usize, shape: &Shape, options: &ScanOptions) -> Result<ScanRecord, LabError> {
    let p = shape.presentation();
    let algebra =
        build_algebra(&p, options.field).map_err(|e| LabError::Semantic { line: None, message: e.to_string() })?;
    let report = build_report(&shape.id(), &algebra, &options.report);
    Ok(record_from_report(index, options.mode, &report, &p))
}

/// Runs the report on every enumerated algebra. Results come back in
/// enumeration order whatever the number of jobs.
pub fn run_scan(options: &ScanOptions) -> Result<Vec<ScanRecord>, LabError> {
    use rayon::prelude::*;
    let shapes = enumerate_shapes(options.vertices, options.arrows, options.mode)?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = options.jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder.build().map_err(|e| LabError::Bounds(e.to_string()))?;
    pool.install(|| shapes.par_iter().enumerate().map(|(i, s)| scan_one(i, s, options)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_bounds() {
        let shapes = enumerate_shapes(1, 0, ScanMode::RadSquareZero).unwrap();
        assert_eq!(shapes.len(), 1);
        // one vertex: 0, 1 or 2 loops
        assert_eq!(enumerate_shapes(1, 2, ScanMode::RadSquareZero).unwrap().len(), 3);
        // two loops: 16 relation sets up to swapping the loops
        let cube = enumerate_shapes(1, 2, ScanMode::RadCubeZero).unwrap();
        assert!(cube.iter().any(|s| s.relations.len() == 4 && s.arrows.len() == 2));
    }

    #[test]
    fn canonical_forms_identify_relabelings() {
        let a = Shape { vertices: 2, arrows: vec![(0, 1)], relations: vec![], nilpotency: 2 };
        let b = Shape { vertices: 2, arrows: vec![(1, 0)], relations: vec![], nilpotency: 2 };
        assert_eq!(a.canonical(), b.canonical());
        let c = Shape { vertices: 1, arrows: vec![(0, 0), (0, 0)], relations: vec![(0, 0)], nilpotency: 3 };
        let d = Shape { vertices: 1, arrows: vec![(0, 0), (0, 0)], relations: vec![(1, 1)], nilpotency: 3 };
        assert_eq!(c.canonical(), d.canonical());
        let shapes = enumerate_shapes(2, 2, ScanMode::RadCubeZero).unwrap();
        let canon: BTreeSet<Shape> = shapes.iter().map(Shape::canonical).collect();
        assert_eq!(canon.len(), shapes.len());
    }

    #[test]
    fn every_shape_builds() {
        for mode in [ScanMode::RadSquareZero, ScanMode::RadCubeZero] {
            for shape in enumerate_shapes(2, 2, mode).unwrap() {
                let a = build_algebra(&shape.presentation(), Field::gf2()).unwrap();
                assert!(a.loewy_length() <= shape.nilpotency, "{}", shape.id());
            }
        }
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(matches!(enumerate_shapes(4, 1, ScanMode::RadSquareZero), Err(LabError::Bounds(_))));
        assert!(matches!(enumerate_shapes(1, 5, ScanMode::RadSquareZero), Err(LabError::Bounds(_))));
    }
}
