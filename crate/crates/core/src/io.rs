//! Instance formats: the canonical edge list and a strict DOT subset.
//!
//! Edge list: first line `n m`, then `m` lines `tail head`, 0-based. Blank
//! lines and lines starting with `#` are skipped.
//!
//! DOT subset: `digraph [name] { ... }` whose statements are bare numeric
//! edges `a -> b;` (chains `a -> b -> c` allowed) or bare node statements
//! `a;`. The vertex count is one more than the largest id seen. Attributes,
//! subgraphs, `graph`/`strict` headers and quoted ids are rejected.

use std::fmt::Write as _;

use thiserror::Error;

use crate::digraph::Digraph;
use crate::error::Error as GraphError;

/// Upper bound on the vertex count accepted from text, so a hostile header
/// cannot trigger a huge allocation.
pub const MAX_PARSE_VERTICES: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("header declares {declared} arcs but {found} were given")]
    ArcCount { declared: usize, found: usize },
    #[error("vertex count {0} exceeds the parser limit")]
    TooManyVertices(usize),
    #[error("unsupported DOT feature: {0}")]
    UnsupportedDot(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

fn number(tok: &str, line: usize) -> Result<usize, ParseError> {
    tok.parse::<usize>().map_err(|_| {
        syntax(
            line,
            format!("expected a non-negative integer, found `{tok}`"),
        )
    })
}

pub fn parse_edge_list(text: &str) -> Result<Digraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines
        .next()
        .ok_or_else(|| syntax(1, "missing `n m` header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(syntax(hl, "header must be `n m`"));
    }
    let n = number(toks[0], hl)?;
    let m = number(toks[1], hl)?;
    if n > MAX_PARSE_VERTICES {
        return Err(ParseError::TooManyVertices(n));
    }
    let mut d = Digraph::new(n);
    let mut found = 0;
    for (ln, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(syntax(ln, "arc line must be `tail head`"));
        }
        let a = number(toks[0], ln)?;
        let b = number(toks[1], ln)?;
        d.add_arc(a, b)?;
        found += 1;
    }
    if found != m {
        return Err(ParseError::ArcCount { declared: m, found });
    }
    Ok(d)
}

pub fn write_edge_list(d: &Digraph) -> String {
    let arcs = d.arcs();
    let mut s = format!("{} {}\n", d.n(), arcs.len());
    for (a, b) in arcs {
        let _ = writeln!(s, "{a} {b}");
    }
    s
}

pub fn write_dot(d: &Digraph) -> String {
    let mut s = String::from("digraph D {\n");
    for x in 0..d.n() {
        let _ = writeln!(s, "  {x};");
    }
    for (a, b) in d.arcs() {
        let _ = writeln!(s, "  {a} -> {b};");
    }
    s.push_str("}\n");
    s
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(usize),
    Arrow,
    LBrace,
    RBrace,
    Semi,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let code = match raw.find("//") {
            Some(p) => &raw[..p],
            None => raw,
        };
        if code.trim_start().starts_with('#') {
            continue;
        }
        let bytes = code.as_bytes();
        let mut p = 0;
        while p < bytes.len() {
            let c = bytes[p];
            match c {
                b' ' | b'\t' | b'\r' => p += 1,
                b'{' => {
                    out.push((line, Tok::LBrace));
                    p += 1
                }
                b'}' => {
                    out.push((line, Tok::RBrace));
                    p += 1
                }
                b';' => {
                    out.push((line, Tok::Semi));
                    p += 1
                }
                b'-' if bytes.get(p + 1) == Some(&b'>') => {
                    out.push((line, Tok::Arrow));
                    p += 2
                }
                b'0'..=b'9' => {
                    let start = p;
                    while p < bytes.len() && bytes[p].is_ascii_digit() {
                        p += 1;
                    }
                    if p < bytes.len() && (bytes[p].is_ascii_alphabetic() || bytes[p] == b'_') {
                        return Err(ParseError::UnsupportedDot(format!(
                            "non-numeric node id on line {line}"
                        )));
                    }
                    out.push((line, Tok::Num(number(&code[start..p], line)?)));
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    let start = p;
                    while p < bytes.len() && (bytes[p].is_ascii_alphanumeric() || bytes[p] == b'_')
                    {
                        p += 1;
                    }
                    out.push((line, Tok::Ident(code[start..p].to_string())));
                }
                b'/' if bytes.get(p + 1) == Some(&b'*') => {
                    return Err(ParseError::UnsupportedDot("block comments".into()))
                }
                b'[' => return Err(ParseError::UnsupportedDot("attribute lists".into())),
                b'"' => return Err(ParseError::UnsupportedDot("quoted ids".into())),
                b'=' => return Err(ParseError::UnsupportedDot("attribute assignment".into())),
                b'-' if bytes.get(p + 1) == Some(&b'-') => {
                    return Err(ParseError::UnsupportedDot("undirected edges".into()))
                }
                _ => {
                    return Err(syntax(
                        line,
                        format!(
                            "unexpected character `{}`",
                            code[p..].chars().next().unwrap_or('?')
                        ),
                    ))
                }
            }
        }
    }
    Ok(out)
}

pub fn parse_dot(text: &str) -> Result<Digraph, ParseError> {
    let toks = tokenize(text)?;
    let mut it = toks.into_iter().peekable();
    match it.next() {
        Some((_, Tok::Ident(k))) if k == "digraph" => {}
        Some((_, Tok::Ident(k))) if k == "strict" || k == "graph" => {
            return Err(ParseError::UnsupportedDot(format!("`{k}` header")))
        }
        Some((l, _)) => return Err(syntax(l, "expected `digraph`")),
        None => return Err(syntax(1, "empty input")),
    }
    if let Some((_, Tok::Ident(_))) = it.peek() {
        it.next();
    }
    match it.next() {
        Some((_, Tok::LBrace)) => {}
        Some((l, _)) => return Err(syntax(l, "expected `{`")),
        None => return Err(syntax(1, "expected `{`")),
    }
    let mut arcs = Vec::new();
    let mut max_id: Option<usize> = None;
    let mut closed = false;
    while let Some((line, tok)) = it.next() {
        match tok {
            Tok::RBrace => {
                closed = true;
                break;
            }
            Tok::Semi => continue,
            Tok::Num(first) => {
                let mut chain = vec![first];
                loop {
                    match it.peek() {
                        Some((_, Tok::Arrow)) => {
                            it.next();
                            match it.next() {
                                Some((_, Tok::Num(x))) => chain.push(x),
                                Some((_, Tok::Ident(_))) => {
                                    return Err(ParseError::UnsupportedDot(
                                        "non-numeric node id".into(),
                                    ))
                                }
                                other => {
                                    let l = other.map_or(line, |(l, _)| l);
                                    return Err(syntax(l, "expected node id after `->`"));
                                }
                            }
                        }
                        Some((_, Tok::Semi)) => {
                            it.next();
                            break;
                        }
                        Some((_, Tok::RBrace | Tok::Num(_))) => break,
                        Some((l, _)) => return Err(syntax(*l, "expected `->`, `;` or `}`")),
                        None => break,
                    }
                }
                for &x in &chain {
                    if x >= MAX_PARSE_VERTICES {
                        return Err(ParseError::TooManyVertices(x + 1));
                    }
                    max_id = Some(max_id.map_or(x, |m| m.max(x)));
                }
                arcs.extend(chain.windows(2).map(|w| (w[0], w[1])));
            }
            Tok::Ident(k) => {
                return Err(ParseError::UnsupportedDot(format!(
                    "statement starting with `{k}`"
                )))
            }
            Tok::Arrow | Tok::LBrace => return Err(syntax(line, "unexpected token")),
        }
    }
    if !closed {
        return Err(syntax(text.lines().count().max(1), "missing `}`"));
    }
    if let Some((l, _)) = it.next() {
        return Err(syntax(l, "trailing content after `}`"));
    }
    let n = max_id.map_or(0, |m| m + 1);
    Ok(Digraph::from_arcs(n, &arcs)?)
}

/// Chooses the parser from content: DOT if the first token is `digraph`,
/// the edge list otherwise.
pub fn parse_auto(text: &str) -> Result<Digraph, ParseError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with("//"));
    match first {
        Some(l) if l.starts_with(|c: char| c.is_ascii_alphabetic()) => parse_dot(text),
        _ => parse_edge_list(text),
    }
}
