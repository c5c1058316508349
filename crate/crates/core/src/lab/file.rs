use std::fmt::Write as _;
use std::sync::Arc;

use crate::algebra::{build_algebra, Algebra, AlgebraError, QuiverPresentation};
use crate::linalg::Field;

use super::LabError;

/// A quiver presentation together with its ground field, as read from the
/// line-oriented algebra format.
///
/// ```text
/// field gf 2
/// vertex 1
/// arrow x 1 1
/// arrow y 1 1
/// relation x*x
/// relation x*y - y*x
/// nilpotency 2
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub field: Field,
    pub presentation: QuiverPresentation,
}

fn parse_error(line: usize, message: impl Into<String>) -> LabError {
    LabError::Parse { line, message: message.into() }
}

fn semantic_error(line: usize, message: impl Into<String>) -> LabError {
    LabError::Semantic { line: Some(line), message: message.into() }
}

fn from_algebra_error(line: usize, e: AlgebraError) -> LabError {
    match e {
        AlgebraError::Syntax(m) => parse_error(line, m),
        other => semantic_error(line, other.to_string()),
    }
}

/// Parses `gf <p>`, `gf<p>`, `GF(p)` or `q`.
pub fn parse_field(text: &str) -> Result<Field, String> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_ascii_lowercase();
    if compact == "q" {
        return Ok(Field::Rationals);
    }
    let digits = compact
        .strip_prefix("gf(")
        .and_then(|r| r.strip_suffix(')'))
        .or_else(|| compact.strip_prefix("gf"))
        .ok_or_else(|| format!("unknown field `{text}`"))?;
    let p: u64 = digits.parse().map_err(|_| format!("bad characteristic in `{text}`"))?;
    Field::prime(p).map_err(|e| e.to_string())
}

fn field_text(field: Field) -> String {
    match field {
        Field::Prime(p) => format!("gf {p}"),
        Field::Rationals => "q".to_string(),
    }
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<AlgebraFile, LabError> {
        let mut field: Option<Field> = None;
        let mut nilpotency: Option<usize> = None;
        let mut p = QuiverPresentation::new(&[], 0);
        let mut last_line = 0;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            last_line = line;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (directive, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
            let rest = rest.trim();
            let words: Vec<&str> = rest.split_whitespace().collect();
            match directive {
                "field" => {
                    if field.is_some() {
                        return Err(semantic_error(line, "field declared twice"));
                    }
                    let f = match words.as_slice() {
                        ["q"] => Field::Rationals,
                        ["gf", n] => {
                            let n: u64 = n.parse().map_err(|_| parse_error(line, format!("bad characteristic `{n}`")))?;
                            Field::prime(n).map_err(|e| semantic_error(line, e.to_string()))?
                        }
                        _ => return Err(parse_error(line, "expected `field gf <p>` or `field q`")),
                    };
                    field = Some(f);
                }
                "vertex" => {
                    let [name] = words.as_slice() else {
                        return Err(parse_error(line, "expected `vertex <id>`"));
                    };
                    if p.vertex_index(name).is_some() {
                        return Err(semantic_error(line, format!("duplicate vertex `{name}`")));
                    }
                    p.vertices.push(name.to_string());
                }
                "arrow" => {
                    let [name, source, target] = words.as_slice() else {
                        return Err(parse_error(line, "expected `arrow <name> <src> <tgt>`"));
                    };
                    if !name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                        || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
                    {
                        return Err(parse_error(line, format!("invalid arrow name `{name}`")));
                    }
                    if p.vertex_index(name).is_some() {
                        return Err(semantic_error(line, format!("arrow `{name}` clashes with a vertex")));
                    }
                    p.add_arrow(name, source, target).map_err(|e| from_algebra_error(line, e))?;
                }
                "relation" => {
                    if rest.is_empty() {
                        return Err(parse_error(line, "empty relation"));
                    }
                    p.add_relation(rest).map_err(|e| from_algebra_error(line, e))?;
                }
                "nilpotency" => {
                    if nilpotency.is_some() {
                        return Err(semantic_error(line, "nilpotency declared twice"));
                    }
                    let [n] = words.as_slice() else {
                        return Err(parse_error(line, "expected `nilpotency <N>`"));
                    };
                    let n: usize = n.parse().map_err(|_| parse_error(line, format!("bad nilpotency `{n}`")))?;
                    if n == 0 {
                        return Err(semantic_error(line, "nilpotency must be positive"));
                    }
                    nilpotency = Some(n);
                }
                other => return Err(parse_error(line, format!("unknown directive `{other}`"))),
            }
        }
        let end = last_line.max(1);
        let field = field.ok_or_else(|| parse_error(end, "missing `field` directive"))?;
        p.nilpotency = nilpotency.ok_or_else(|| parse_error(end, "missing `nilpotency` directive"))?;
        if p.vertices.is_empty() {
            return Err(parse_error(end, "no vertices declared"));
        }
        Ok(AlgebraFile { field, presentation: p })
    }

    /// Canonical text: field, vertices, arrows, relations, nilpotency.
    pub fn to_text(&self) -> String {
        let p = &self.presentation;
        let mut out = String::new();
        writeln!(out, "field {}", field_text(self.field)).expect("string write");
        for v in &p.vertices {
            writeln!(out, "vertex {v}").expect("string write");
        }
        for a in &p.arrows {
            writeln!(out, "arrow {} {} {}", a.name, p.vertices[a.source], p.vertices[a.target]).expect("string write");
        }
        for r in &p.relations {
            writeln!(out, "relation {}", p.relation_text(r)).expect("string write");
        }
        writeln!(out, "nilpotency {}", p.nilpotency).expect("string write");
        out
    }

    pub fn with_field(mut self, field: Field) -> AlgebraFile {
        self.field = field;
        self
    }

    pub fn build(&self) -> Result<Arc<Algebra>, LabError> {
        build_algebra(&self.presentation, self.field)
            .map_err(|e| LabError::Semantic { line: None, message: e.to_string() })
    }
}
