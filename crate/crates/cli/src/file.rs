//! The line-oriented ideal file format.
//!
//! ```text
//! # comment
//! ideal I1
//! vars z1 z2 x
//! params t s
//! row 1 -1 0
//! row 1 1 1
//! gen z1*z2 - x^2
//! ```
//!
//! Blocks start at `ideal`. Variable names shared between blocks identify
//! shared variables; parameter names are local to their block.

use std::fmt;

use num_bigint::BigInt;
use toric_core::{Binomial, IntegerMatrix, Parametrization, VariableSet};

/// One `ideal` block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealBlock {
    pub name: String,
    pub parametrization: Parametrization,
    pub generators: Vec<Binomial>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based source line.
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Default)]
struct Pending {
    name: String,
    line: usize,
    vars: Option<(VariableSet, usize)>,
    params: Option<(VariableSet, usize)>,
    rows: Vec<Vec<BigInt>>,
    gens: Vec<Binomial>,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

fn names(line: usize, what: &str, words: &[&str]) -> Result<VariableSet, ParseError> {
    for w in words {
        let ok = w.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
            && w.chars().all(|c| c.is_alphanumeric() || c == '_');
        if !ok {
            return err(line, format!("invalid {what} name `{w}`"));
        }
    }
    VariableSet::new(words).or_else(|e| err(line, format!("{what}: {e}")))
}

impl Pending {
    fn finish(self) -> Result<IdealBlock, ParseError> {
        let Some((vars, _)) = self.vars else {
            return err(self.line, format!("ideal {} has no `vars` line", self.name));
        };
        let Some((params, params_line)) = self.params else {
            return err(self.line, format!("ideal {} has no `params` line", self.name));
        };
        if self.rows.len() != params.len() {
            return err(
                params_line,
                format!(
                    "ideal {}: {} parameters but {} rows",
                    self.name,
                    params.len(),
                    self.rows.len()
                ),
            );
        }
        let mut matrix = IntegerMatrix::zeros(self.rows.len(), vars.len());
        for (r, row) in self.rows.into_iter().enumerate() {
            for (c, v) in row.into_iter().enumerate() {
                matrix.set(r, c, v);
            }
        }
        let parametrization = Parametrization::new(params, vars, matrix)
            .or_else(|e| err(self.line, format!("ideal {}: {e}", self.name)))?;
        Ok(IdealBlock {
            name: self.name,
            parametrization,
            generators: self.gens,
        })
    }
}

/// Parses an ideal file. An empty file yields no blocks.
pub fn parse_ideal_file(text: &str) -> Result<Vec<IdealBlock>, ParseError> {
    let mut blocks: Vec<IdealBlock> = Vec::new();
    let mut current: Option<Pending> = None;
    let mut seen: Vec<String> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (keyword, rest) = match content.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (content, ""),
        };
        let words: Vec<&str> = rest.split_whitespace().collect();

        if keyword == "ideal" {
            let [name] = words[..] else {
                return err(line, "expected `ideal NAME`");
            };
            names(line, "ideal", &[name])?;
            if seen.iter().any(|n| n == name) {
                return err(line, format!("duplicate ideal name `{name}`"));
            }
            seen.push(name.to_string());
            if let Some(done) = current.take() {
                blocks.push(done.finish()?);
            }
            current = Some(Pending {
                name: name.to_string(),
                line,
                ..Pending::default()
            });
            continue;
        }

        let Some(block) = current.as_mut() else {
            return err(line, format!("`{keyword}` outside an ideal block"));
        };
        match keyword {
            "vars" | "params" => {
                let slot = if keyword == "vars" {
                    &mut block.vars
                } else {
                    &mut block.params
                };
                if slot.is_some() {
                    return err(line, format!("second `{keyword}` line in ideal {}", block.name));
                }
                let what = if keyword == "vars" { "variable" } else { "parameter" };
                *slot = Some((names(line, what, &words)?, line));
            }
            "row" => {
                let Some((vars, _)) = &block.vars else {
                    return err(line, "`row` before `vars`");
                };
                if words.len() != vars.len() {
                    return err(
                        line,
                        format!("row has {} entries, expected {}", words.len(), vars.len()),
                    );
                }
                let row = words
                    .iter()
                    .map(|w| {
                        w.parse::<BigInt>()
                            .or_else(|_| err(line, format!("malformed integer `{w}`")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                block.rows.push(row);
            }
            "gen" => {
                let Some((vars, _)) = &block.vars else {
                    return err(line, "`gen` before `vars`");
                };
                let b = Binomial::parse(rest, vars).or_else(|e| err(line, format!("generator: {e}")))?;
                block.gens.push(b);
            }
            other => return err(line, format!("unknown directive `{other}`")),
        }
    }
    if let Some(done) = current.take() {
        blocks.push(done.finish()?);
    }
    Ok(blocks)
}

/// Prints blocks in the canonical layout: fixed directive order, single
/// spaces, one blank line between blocks, no comments.
pub fn print_ideal_file(blocks: &[IdealBlock]) -> String {
    let mut out = String::new();
    for (k, b) in blocks.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        out.push_str(&print_block(b));
    }
    out
}

pub fn print_block(b: &IdealBlock) -> String {
    let p = &b.parametrization;
    let mut out = format!("ideal {}\n", b.name);
    out.push_str(&directive("vars", p.vars().names()));
    out.push_str(&directive("params", p.params().names()));
    for r in 0..p.matrix().rows() {
        out.push_str(&directive("row", p.matrix().row(r)));
    }
    for g in &b.generators {
        out.push_str(&format!("gen {}\n", g.render(p.vars())));
    }
    out
}

fn directive<T: fmt::Display>(keyword: &str, items: &[T]) -> String {
    let mut s = keyword.to_string();
    for it in items {
        s.push(' ');
        s.push_str(&it.to_string());
    }
    s.push('\n');
    s
}
