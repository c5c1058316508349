use std::collections::HashSet;

use num::{BigInt, BigRational, One, Zero};

use super::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// One summand `c · p` of a relation; `path` lists arrow indices in
/// composition order (first arrow first).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelationTerm {
    pub coefficient: BigRational,
    pub path: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub terms: Vec<RelationTerm>,
}

/// A quiver with relations plus a nilpotency bound `N` with `J^N ⊆ I`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuiverPresentation {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
    pub nilpotency: usize,
}

/// A path in the quiver. Trivial paths have no arrows and equal endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// The same path read in the opposite quiver.
    pub fn reversed(&self) -> Path {
        Path {
            source: self.target,
            target: self.source,
            arrows: self.arrows.iter().rev().copied().collect(),
        }
    }

    pub fn label(&self, quiver: &QuiverPresentation) -> String {
        if self.arrows.is_empty() {
            format!("e{}", quiver.vertices[self.source])
        } else {
            self.arrows.iter().map(|&a| quiver.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
        }
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

fn parse_coefficient(s: &str) -> Option<BigRational> {
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.parse().ok()?;
        let d: BigInt = d.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        s.parse::<BigInt>().ok().map(BigRational::from_integer)
    }
}

impl QuiverPresentation {
    pub fn new(vertices: &[&str], nilpotency: usize) -> QuiverPresentation {
        QuiverPresentation {
            vertices: vertices.iter().map(|v| v.to_string()).collect(),
            arrows: Vec::new(),
            relations: Vec::new(),
            nilpotency,
        }
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn add_arrow(&mut self, name: &str, source: &str, target: &str) -> Result<usize, AlgebraError> {
        let s = self.vertex_index(source).ok_or_else(|| AlgebraError::UnknownVertex(source.into()))?;
        let t = self.vertex_index(target).ok_or_else(|| AlgebraError::UnknownVertex(target.into()))?;
        if self.arrow_index(name).is_some() {
            return Err(AlgebraError::DuplicateName(name.into()));
        }
        self.arrows.push(Arrow { name: name.into(), source: s, target: t });
        Ok(self.arrows.len() - 1)
    }

    /// Parses and appends a relation such as `x*y - y*x` or `2*a*b + 1/2*c`.
    pub fn add_relation(&mut self, expr: &str) -> Result<(), AlgebraError> {
        let rel = self.parse_relation(expr)?;
        self.relations.push(rel);
        Ok(())
    }

    pub fn parse_relation(&self, expr: &str) -> Result<Relation, AlgebraError> {
        let bad = |msg: &str| AlgebraError::Syntax(format!("{msg} in relation `{expr}`"));
        let compact: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(AlgebraError::EmptyRelation);
        }
        // split into signed terms
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut sign = true;
        let mut current = String::new();
        for ch in compact.chars() {
            match ch {
                '+' | '-' => {
                    if !current.is_empty() {
                        pieces.push((sign, std::mem::take(&mut current)));
                        sign = true;
                    }
                    if ch == '-' {
                        sign = !sign;
                    }
                }
                _ => current.push(ch),
            }
        }
        if current.is_empty() {
            return Err(bad("dangling sign"));
        }
        pieces.push((sign, current));

        let mut terms = Vec::new();
        for (positive, text) in pieces {
            let mut factors: Vec<&str> = text.split('*').collect();
            if factors.iter().any(|f| f.is_empty()) {
                return Err(bad("empty factor"));
            }
            let mut coefficient = BigRational::one();
            if let Some(c) = parse_coefficient(factors[0]) {
                coefficient = c;
                factors.remove(0);
            }
            if factors.is_empty() {
                return Err(bad("term without a path"));
            }
            let mut path = Vec::with_capacity(factors.len());
            for name in factors {
                if !is_identifier(name) {
                    return Err(bad(&format!("invalid arrow name `{name}`")));
                }
                let a = self.arrow_index(name).ok_or_else(|| AlgebraError::UnknownArrow(name.into()))?;
                path.push(a);
            }
            if !positive {
                coefficient = -coefficient;
            }
            terms.push(RelationTerm { coefficient, path });
        }
        let rel = Relation { terms };
        self.check_relation(&rel)?;
        Ok(rel)
    }

    /// Source and target of a nonempty arrow sequence, if composable.
    pub fn path_endpoints(&self, arrows: &[usize]) -> Result<(usize, usize), AlgebraError> {
        let first = arrows.first().ok_or(AlgebraError::EmptyRelation)?;
        let a0 = self.arrows.get(*first).ok_or_else(|| AlgebraError::UnknownArrow(first.to_string()))?;
        let mut target = a0.target;
        for &a in &arrows[1..] {
            let arrow = self.arrows.get(a).ok_or_else(|| AlgebraError::UnknownArrow(a.to_string()))?;
            if arrow.source != target {
                return Err(AlgebraError::NonComposable(self.path_text(arrows)));
            }
            target = arrow.target;
        }
        Ok((a0.source, target))
    }

    fn path_text(&self, arrows: &[usize]) -> String {
        arrows
            .iter()
            .map(|&a| self.arrows.get(a).map_or_else(|| format!("#{a}"), |x| x.name.clone()))
            .collect::<Vec<_>>()
            .join("*")
    }

    fn check_relation(&self, rel: &Relation) -> Result<(usize, usize), AlgebraError> {
        let mut ends = None;
        for term in &rel.terms {
            if term.path.is_empty() {
                return Err(AlgebraError::NotAdmissible("relation term of length 0".into()));
            }
            let e = self.path_endpoints(&term.path)?;
            match ends {
                None => ends = Some(e),
                Some(prev) if prev != e => {
                    return Err(AlgebraError::NonParallel(self.path_text(&term.path)));
                }
                _ => {}
            }
        }
        ends.ok_or(AlgebraError::EmptyRelation)
    }

    /// Endpoints of each relation, after validating it.
    pub fn relation_endpoints(&self, rel: &Relation) -> Result<(usize, usize), AlgebraError> {
        self.check_relation(rel)
    }

    pub fn validate(&self) -> Result<(), AlgebraError> {
        if self.vertices.is_empty() {
            return Err(AlgebraError::EmptyQuiver);
        }
        if self.nilpotency == 0 {
            return Err(AlgebraError::ZeroNilpotency);
        }
        let mut seen = HashSet::new();
        for v in &self.vertices {
            if !seen.insert(v.as_str()) {
                return Err(AlgebraError::DuplicateName(v.clone()));
            }
        }
        let mut seen = HashSet::new();
        for a in &self.arrows {
            if !seen.insert(a.name.as_str()) {
                return Err(AlgebraError::DuplicateName(a.name.clone()));
            }
            if a.source >= self.vertices.len() || a.target >= self.vertices.len() {
                return Err(AlgebraError::UnknownVertex(a.name.clone()));
            }
        }
        for rel in &self.relations {
            self.check_relation(rel)?;
        }
        Ok(())
    }

    /// The presentation of the opposite algebra: arrows reversed, relation
    /// paths read backwards.
    pub fn opposite(&self) -> QuiverPresentation {
        QuiverPresentation {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|r| Relation {
                    terms: r
                        .terms
                        .iter()
                        .map(|t| RelationTerm {
                            coefficient: t.coefficient.clone(),
                            path: t.path.iter().rev().copied().collect(),
                        })
                        .collect(),
                })
                .collect(),
            nilpotency: self.nilpotency,
        }
    }

    /// Renders a relation in the syntax accepted by [`Self::parse_relation`].
    pub fn relation_text(&self, rel: &Relation) -> String {
        let mut out = String::new();
        for (i, t) in rel.terms.iter().enumerate() {
            let negative = t.coefficient < BigRational::zero();
            let magnitude = if negative { -t.coefficient.clone() } else { t.coefficient.clone() };
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if !magnitude.is_one() {
                out.push_str(&magnitude.to_string());
                out.push('*');
            }
            out.push_str(&self.path_text(&t.path));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loops() -> QuiverPresentation {
        let mut p = QuiverPresentation::new(&["1"], 2);
        p.add_arrow("x", "1", "1").unwrap();
        p.add_arrow("y", "1", "1").unwrap();
        p
    }

    #[test]
    fn parses_signed_terms() {
        let p = loops();
        let r = p.parse_relation("x*y - y*x").unwrap();
        assert_eq!(r.terms.len(), 2);
        assert_eq!(r.terms[1].coefficient, BigRational::from_integer((-1).into()));
        assert_eq!(r.terms[1].path, vec![1, 0]);
        let r = p.parse_relation("-1/2*x*x + 3*y").unwrap();
        assert_eq!(r.terms[0].coefficient, BigRational::new((-1).into(), 2.into()));
        assert_eq!(p.relation_text(&r), "-1/2*x*x + 3*y");
    }

    #[test]
    fn rejects_unknown_arrow_and_bad_shape() {
        let p = loops();
        assert!(matches!(p.parse_relation("x*z"), Err(AlgebraError::UnknownArrow(_))));
        assert!(matches!(p.parse_relation("x*"), Err(AlgebraError::Syntax(_))));
        assert!(matches!(p.parse_relation(""), Err(AlgebraError::EmptyRelation)));
    }

    #[test]
    fn rejects_non_composable_and_non_parallel() {
        let mut p = QuiverPresentation::new(&["1", "2", "3"], 3);
        p.add_arrow("a", "1", "2").unwrap();
        p.add_arrow("b", "2", "3").unwrap();
        assert!(matches!(p.parse_relation("b*a"), Err(AlgebraError::NonComposable(_))));
        assert!(matches!(p.parse_relation("a*b + a"), Err(AlgebraError::NonParallel(_))));
    }

    #[test]
    fn opposite_is_involutive() {
        let mut p = QuiverPresentation::new(&["1", "2", "3"], 3);
        p.add_arrow("a", "1", "2").unwrap();
        p.add_arrow("b", "2", "3").unwrap();
        p.add_relation("a*b").unwrap();
        assert_eq!(p.opposite().opposite(), p);
        assert_eq!(p.opposite().relations[0].terms[0].path, vec![1, 0]);
    }
}
