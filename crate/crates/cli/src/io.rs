//! Text formats: permutation sets, digraphs and group tables.
//!
//! All formats are line based. `#` starts a comment, blank lines are ignored,
//! and the first remaining line is a header. Writers emit canonical text:
//! single spaces, `\n` line endings, no comments.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use derange_core::twosided::group_from_generators;
use derange_core::{DerangementSet, FiniteGroup, GeneratedGroup, Permutation, SimpleDigraph};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("empty input: expected a header line")]
    MissingHeader,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {error}")]
    Invalid {
        line: usize,
        error: derange_core::Error,
    },
    #[error("{0}")]
    Core(derange_core::Error),
}

impl ParseError {
    pub fn code(&self) -> &'static str {
        match self {
            ParseError::MissingHeader | ParseError::Syntax { .. } => "parse_error",
            ParseError::Invalid { error, .. } | ParseError::Core(error) => error.code(),
        }
    }
}

type Result<T> = std::result::Result<T, ParseError>;

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_usize(line: usize, token: &str) -> Result<usize> {
    token.parse().map_err(|_| {
        syntax(
            line,
            format!("expected a non-negative integer, found `{token}`"),
        )
    })
}

/// Splits the header into its keyword and size.
fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    keywords: &[&str],
) -> Result<(usize, &'a str, usize)> {
    let (line, text) = lines.next().ok_or(ParseError::MissingHeader)?;
    let mut tokens = text.split_whitespace();
    let keyword = tokens.next().unwrap_or("");
    if !keywords.contains(&keyword) {
        return Err(syntax(
            line,
            format!(
                "expected header `{} <n>`, found `{text}`",
                keywords.join(" <n>` or `")
            ),
        ));
    }
    let size = tokens
        .next()
        .ok_or_else(|| syntax(line, "header is missing its size"))
        .and_then(|t| parse_usize(line, t))?;
    if tokens.next().is_some() {
        return Err(syntax(line, "trailing tokens after header"));
    }
    if size == 0 {
        return Err(syntax(line, "size must be positive"));
    }
    Ok((line, keyword, size))
}

/// Parses disjoint-cycle notation such as `(0 1 2)(3 4)`, or `id` when
/// `allow_identity` is set.
pub fn parse_permutation(
    text: &str,
    n: usize,
    allow_identity: bool,
    line: usize,
) -> Result<Permutation> {
    let text = text.trim();
    if text == "id" {
        if !allow_identity {
            return Err(syntax(line, "the identity is not allowed here"));
        }
        return Ok(Permutation::identity(n));
    }
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(syntax(line, format!("expected `(`, found `{rest}`")));
        };
        let close = body
            .find(')')
            .ok_or_else(|| syntax(line, "unclosed cycle"))?;
        let cycle = body[..close]
            .split_whitespace()
            .map(|t| parse_usize(line, t))
            .collect::<Result<Vec<_>>>()?;
        if cycle.is_empty() {
            return Err(syntax(line, "empty cycle"));
        }
        cycles.push(cycle);
        rest = body[close + 1..].trim_start();
    }
    if cycles.is_empty() {
        return Err(syntax(line, "expected a permutation"));
    }
    Permutation::from_cycles(n, &cycles).map_err(|error| ParseError::Invalid { line, error })
}

/// Parses a `perms <n>` file. With `dedupe`, repeated permutations are
/// dropped instead of rejected.
pub fn parse_perm_set(text: &str, dedupe: bool) -> Result<DerangementSet> {
    let mut lines = content_lines(text);
    let (header_line, _, n) = header(&mut lines, &["perms"])?;
    let mut perms = Vec::new();
    let mut line_of = Vec::new();
    for (line, body) in lines {
        perms.push(parse_permutation(body, n, false, line)?);
        line_of.push(line);
    }
    let result = if dedupe {
        DerangementSet::new_dedup(perms)
    } else {
        DerangementSet::new(perms)
    };
    result.map_err(|error| {
        let line = match error {
            derange_core::Error::NotDerangement { index, .. } => line_of[index],
            derange_core::Error::DuplicateElement { second, .. } => line_of[second],
            _ => header_line,
        };
        ParseError::Invalid { line, error }
    })
}

pub fn write_perm_set(set: &DerangementSet) -> String {
    let mut out = format!("perms {}\n", set.domain_size());
    for p in set {
        writeln!(out, "{p}").unwrap();
    }
    out
}

/// Parses a `digraph <n>` file (one arc per line) or a `graph <n>` file (one
/// undirected edge per line).
pub fn parse_digraph(text: &str) -> Result<SimpleDigraph> {
    let mut lines = content_lines(text);
    let (_, keyword, n) = header(&mut lines, &["digraph", "graph"])?;
    let undirected = keyword == "graph";
    let mut arcs = BTreeMap::new();
    for (line, body) in lines {
        let tokens: Vec<&str> = body.split_whitespace().collect();
        let [u, v] = tokens[..] else {
            return Err(syntax(line, format!("expected `u v`, found `{body}`")));
        };
        let (u, v) = (parse_usize(line, u)?, parse_usize(line, v)?);
        let invalid = |error| ParseError::Invalid { line, error };
        for point in [u, v] {
            if point >= n {
                return Err(invalid(derange_core::Error::PointOutOfRange { point, n }));
            }
        }
        if u == v {
            return Err(invalid(derange_core::Error::Loop(u)));
        }
        let expanded: &[(usize, usize)] = if undirected {
            &[(u, v), (v, u)]
        } else {
            &[(u, v)]
        };
        for &arc in expanded {
            if arcs.insert(arc, line).is_some() {
                return Err(invalid(derange_core::Error::DuplicateArc(arc.0, arc.1)));
            }
        }
    }
    SimpleDigraph::new(n, arcs.into_keys()).map_err(ParseError::Core)
}

/// Canonical `digraph <n>` text, arcs ascending.
pub fn write_digraph(g: &SimpleDigraph) -> String {
    let mut out = format!("digraph {}\n", g.vertex_count());
    for &(u, v) in g.arcs() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Canonical `graph <n>` text for a symmetric digraph, edges `u < v` ascending.
pub fn write_graph(g: &SimpleDigraph) -> Option<String> {
    if !g.is_symmetric() {
        return None;
    }
    let mut out = format!("graph {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    Some(out)
}

/// A group read from a file: a bare table, or the closure of permutation
/// generators, which also knows each element's permutation.
#[derive(Debug, Clone)]
pub enum GroupFile {
    Table(FiniteGroup),
    Generated(GeneratedGroup),
}

impl GroupFile {
    pub fn group(&self) -> &FiniteGroup {
        match self {
            GroupFile::Table(g) => g,
            GroupFile::Generated(g) => &g.group,
        }
    }

    /// Parses a comma-separated element list. Elements are indices, or cycle
    /// notation (including `id`) for groups given by generators.
    pub fn parse_elements(&self, text: &str) -> std::result::Result<Vec<usize>, ElementError> {
        text.split(',')
            .map(str::trim)
            .map(|token| {
                if token.bytes().all(|b| b.is_ascii_digit()) && !token.is_empty() {
                    let e: usize = token
                        .parse()
                        .map_err(|_| ElementError::Syntax(token.into()))?;
                    if e >= self.group().order() {
                        return Err(ElementError::Core(derange_core::Error::ElementOutOfRange(
                            e,
                        )));
                    }
                    return Ok(e);
                }
                let GroupFile::Generated(g) = self else {
                    return Err(ElementError::Syntax(token.into()));
                };
                let p = parse_permutation(token, g.elements[0].len(), true, 0)
                    .map_err(|_| ElementError::Syntax(token.into()))?;
                g.index_of(&p)
                    .ok_or(ElementError::Core(derange_core::Error::NotInGroup))
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ElementError {
    #[error("cannot read group element `{0}`")]
    Syntax(String),
    #[error("{0}")]
    Core(derange_core::Error),
}

impl ElementError {
    pub fn code(&self) -> &'static str {
        match self {
            ElementError::Syntax(_) => "parse_error",
            ElementError::Core(e) => e.code(),
        }
    }
}

/// Parses a `group <m>` table file or a `group-gens <n>` generator file.
pub fn parse_group(text: &str) -> Result<GroupFile> {
    let mut lines = content_lines(text);
    let (header_line, keyword, size) = header(&mut lines, &["group", "group-gens"])?;
    if keyword == "group-gens" {
        let gens = lines
            .map(|(line, body)| parse_permutation(body, size, true, line))
            .collect::<Result<Vec<_>>>()?;
        if gens.is_empty() {
            return Err(syntax(header_line, "no generators"));
        }
        return group_from_generators(&gens)
            .map(GroupFile::Generated)
            .map_err(ParseError::Core);
    }
    let mut rows = Vec::with_capacity(size);
    let mut row_lines = Vec::with_capacity(size);
    for (line, body) in lines {
        let row = body
            .split_whitespace()
            .map(|t| parse_usize(line, t))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != size {
            return Err(syntax(
                line,
                format!("row has {} entries, expected {size}", row.len()),
            ));
        }
        if rows.len() == size {
            return Err(syntax(line, format!("more than {size} rows")));
        }
        rows.push(row);
        row_lines.push(line);
    }
    if rows.len() != size {
        return Err(syntax(
            header_line,
            format!("expected {size} rows, found {}", rows.len()),
        ));
    }
    FiniteGroup::from_table(rows)
        .map(GroupFile::Table)
        .map_err(|error| {
            let line = match error {
                derange_core::Error::InvalidGroupTable { row, .. } if row < size => row_lines[row],
                _ => header_line,
            };
            ParseError::Invalid { line, error }
        })
}

/// Canonical `group <m>` table text.
pub fn write_group(g: &FiniteGroup) -> String {
    let m = g.order();
    let mut out = format!("group {m}\n");
    for a in 0..m {
        let row: Vec<String> = g.row(a).iter().map(usize::to_string).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}
