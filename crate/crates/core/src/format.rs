//! Plain-text algebra descriptions, one directive per line.
//!
//! ```text
//! algebra paper_example
//! field rational
//! vertices 4
//! arrow a 1 2
//! arrow b 1 3
//! arrow c 2 3
//! arrow d 3 4
//! relation a*c*d - b*d
//! ```
//!
//! Vertices are 1-based in files. `field Q` (the default) or `field Fp P`
//! picks the coefficients; `nilpotency N` adds all paths of length >= N to
//! the ideal and is mandatory when the quiver has a cycle. Blank lines and
//! `#` comments are skipped. Relation expressions are sums of terms
//! `[k*]label*...*label` with integer coefficients.

use crate::algebra::{build_algebra, Algebra, AlgebraError};
use crate::field::FieldSpec;
use crate::quiver::{Arrow, Quiver, Relation, RelationTerm};
use std::fmt::Write as _;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: unknown directive `{word}`")]
    UnknownDirective { line: usize, word: String },
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: duplicate `{word}` directive")]
    Duplicate { line: usize, word: String },
    #[error("line {line}: `{word}` must come after `vertices`")]
    BeforeVertices { line: usize, word: String },
    #[error("missing `vertices` directive")]
    MissingVertices,
    #[error("line {line}: vertex {vertex} outside 1..={n}")]
    VertexRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: arrow label `{label}` already declared")]
    DuplicateLabel { line: usize, label: String },
    #[error("line {line}: unknown arrow label `{label}`")]
    UnknownLabel { line: usize, label: String },
    #[error("line {line}: non-composable path in relation term")]
    NonComposable { line: usize },
    #[error("line {line}: non-parallel relation terms")]
    NonParallel { line: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Parsed form of an algebra file; `build` turns it into an [`Algebra`].
#[derive(Debug, Clone)]
pub struct AlgebraFile {
    pub name: String,
    pub field: Option<FieldSpec>,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    pub nilpotency: Option<usize>,
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<AlgebraFile, ParseError> {
        let mut name: Option<String> = None;
        let mut field: Option<FieldSpec> = None;
        let mut quiver: Option<Quiver> = None;
        let mut relations: Vec<Relation> = Vec::new();
        let mut nilpotency: Option<usize> = None;

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (word, rest) = match content.split_once(char::is_whitespace) {
                Some((w, r)) => (w, r.trim()),
                None => (content, ""),
            };
            match word {
                "algebra" => {
                    if name.is_some() {
                        return Err(ParseError::Duplicate {
                            line,
                            word: word.into(),
                        });
                    }
                    if rest.is_empty() || rest.split_whitespace().count() != 1 {
                        return Err(malformed(line, "expected `algebra NAME`"));
                    }
                    name = Some(rest.to_string());
                }
                "field" => {
                    if field.is_some() {
                        return Err(ParseError::Duplicate {
                            line,
                            word: word.into(),
                        });
                    }
                    let parts: Vec<&str> = rest.split_whitespace().collect();
                    field = Some(match parts[..] {
                        ["Q"] => FieldSpec::Rational,
                        ["Fp", p] => FieldSpec::Prime(
                            p.parse()
                                .map_err(|_| malformed(line, "expected `field Fp PRIME`"))?,
                        ),
                        _ => return Err(malformed(line, "expected `field Q` or `field Fp PRIME`")),
                    });
                }
                "vertices" => {
                    if quiver.is_some() {
                        return Err(ParseError::Duplicate {
                            line,
                            word: word.into(),
                        });
                    }
                    let n: usize = rest
                        .parse()
                        .ok()
                        .filter(|&n| n >= 1)
                        .ok_or_else(|| malformed(line, "expected `vertices N` with N >= 1"))?;
                    quiver = Some(Quiver {
                        n,
                        arrows: Vec::new(),
                    });
                }
                "arrow" => {
                    let q = quiver.as_mut().ok_or(ParseError::BeforeVertices {
                        line,
                        word: word.into(),
                    })?;
                    let parts: Vec<&str> = rest.split_whitespace().collect();
                    let [label, src, tgt] = parts[..] else {
                        return Err(malformed(line, "expected `arrow LABEL SOURCE TARGET`"));
                    };
                    if !is_label(label) {
                        return Err(malformed(line, "arrow label must be alphanumeric"));
                    }
                    if q.arrow_by_label(label).is_some() {
                        return Err(ParseError::DuplicateLabel {
                            line,
                            label: label.into(),
                        });
                    }
                    let source = parse_vertex(src, line, q.n)?;
                    let target = parse_vertex(tgt, line, q.n)?;
                    q.arrows.push(Arrow {
                        label: label.to_string(),
                        source,
                        target,
                    });
                }
                "relation" => {
                    let q = quiver.as_ref().ok_or(ParseError::BeforeVertices {
                        line,
                        word: word.into(),
                    })?;
                    relations.push(parse_relation(rest, line, q)?);
                }
                "nilpotency" => {
                    if nilpotency.is_some() {
                        return Err(ParseError::Duplicate {
                            line,
                            word: word.into(),
                        });
                    }
                    nilpotency =
                        Some(rest.parse().ok().filter(|&n| n >= 2).ok_or_else(|| {
                            malformed(line, "expected `nilpotency N` with N >= 2")
                        })?);
                }
                other => {
                    return Err(ParseError::UnknownDirective {
                        line,
                        word: other.into(),
                    });
                }
            }
        }

        Ok(AlgebraFile {
            name: name.unwrap_or_else(|| "algebra".into()),
            field,
            quiver: quiver.ok_or(ParseError::MissingVertices)?,
            relations,
            nilpotency,
        })
    }

    /// Builds over the file's declared field (rational when absent).
    pub fn build(&self) -> Result<Arc<Algebra>, ParseError> {
        self.build_over(self.field.unwrap_or(FieldSpec::Rational))
    }

    /// Builds over `field`, ignoring any `field` directive in the file.
    pub fn build_over(&self, field: FieldSpec) -> Result<Arc<Algebra>, ParseError> {
        Ok(build_algebra(
            &self.name,
            self.quiver.clone(),
            self.relations.clone(),
            self.nilpotency,
            field,
        )?)
    }

    /// Canonical text form; `parse(render(f))` reproduces `f` up to the
    /// default name and field.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "algebra {}", self.name);
        match self.field {
            Some(FieldSpec::Prime(p)) => {
                let _ = writeln!(out, "field Fp {p}");
            }
            Some(FieldSpec::Rational) => {
                let _ = writeln!(out, "field Q");
            }
            None => {}
        }
        let _ = writeln!(out, "vertices {}", self.quiver.n);
        for a in &self.quiver.arrows {
            let _ = writeln!(out, "arrow {} {} {}", a.label, a.source + 1, a.target + 1);
        }
        for r in &self.relations {
            let _ = writeln!(out, "relation {}", render_relation(r, &self.quiver));
        }
        if let Some(n) = self.nilpotency {
            let _ = writeln!(out, "nilpotency {n}");
        }
        out
    }
}

fn malformed(line: usize, msg: &str) -> ParseError {
    ParseError::Malformed {
        line,
        msg: msg.into(),
    }
}

fn is_label(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .next()
            .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_vertex(tok: &str, line: usize, n: usize) -> Result<usize, ParseError> {
    let v: usize = tok
        .parse()
        .map_err(|_| malformed(line, "vertex must be a positive integer"))?;
    if v < 1 || v > n {
        return Err(ParseError::VertexRange { line, vertex: v, n });
    }
    Ok(v - 1)
}

/// Splits `expr` at top-level `+`/`-` into signed terms, then each term at
/// `*` into an optional leading integer coefficient and arrow labels.
fn parse_relation(expr: &str, line: usize, quiver: &Quiver) -> Result<Relation, ParseError> {
    if expr.is_empty() {
        return Err(malformed(line, "empty relation"));
    }
    let mut terms = Vec::new();
    let mut sign = 1i64;
    let mut buf = String::new();
    for c in expr.chars() {
        if c == '+' || c == '-' {
            if !buf.trim().is_empty() {
                terms.push(parse_term(buf.trim(), sign, line, quiver)?);
            } else if !terms.is_empty() {
                return Err(malformed(line, "two consecutive signs"));
            }
            sign = if c == '-' { -1 } else { 1 };
            buf.clear();
        } else {
            buf.push(c);
        }
    }
    if buf.trim().is_empty() {
        return Err(malformed(line, "relation ends with a dangling sign"));
    }
    terms.push(parse_term(buf.trim(), sign, line, quiver)?);
    let mut endpoints: Option<(usize, usize)> = None;
    for t in &terms {
        let path = quiver
            .path(&t.arrows)
            .ok_or(ParseError::NonComposable { line })?;
        let ep = (path.source, path.target(quiver));
        if *endpoints.get_or_insert(ep) != ep {
            return Err(ParseError::NonParallel { line });
        }
    }
    Ok(Relation { terms })
}

fn parse_term(
    term: &str,
    sign: i64,
    line: usize,
    quiver: &Quiver,
) -> Result<RelationTerm, ParseError> {
    let tokens: Vec<&str> = term.split('*').map(str::trim).collect();
    if tokens.iter().any(|t| t.is_empty()) {
        return Err(malformed(line, "empty factor in term"));
    }
    let (coeff, labels) = match tokens[0].parse::<i64>() {
        Ok(k) => (sign * k, &tokens[1..]),
        Err(_) => (sign, &tokens[..]),
    };
    if labels.is_empty() {
        return Err(malformed(line, "term has a coefficient but no arrows"));
    }
    let mut arrows = Vec::with_capacity(labels.len());
    for &label in labels {
        if !is_label(label) {
            return Err(malformed(line, "arrow factors must be labels"));
        }
        arrows.push(
            quiver
                .arrow_by_label(label)
                .ok_or_else(|| ParseError::UnknownLabel {
                    line,
                    label: label.into(),
                })?,
        );
    }
    Ok(RelationTerm { coeff, arrows })
}

fn render_relation(r: &Relation, quiver: &Quiver) -> String {
    let mut out = String::new();
    for (i, t) in r.terms.iter().enumerate() {
        if i == 0 {
            if t.coeff < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if t.coeff < 0 { " - " } else { " + " });
        }
        if t.coeff.unsigned_abs() != 1 {
            let _ = write!(out, "{}*", t.coeff.unsigned_abs());
        }
        let labels: Vec<&str> = t
            .arrows
            .iter()
            .map(|&a| quiver.arrows[a].label.as_str())
            .collect();
        out.push_str(&labels.join("*"));
    }
    out
}
