//! Word literals on the command line.
//!
//! A literal is a whitespace-separated list of letters. Each letter is an
//! identifier with an optional trailing `*` for annihilation; a letter over a
//! multi-edge path joins its edge ids with `.`, as in `e1.e2*`. A lone vertex
//! id denotes its projection.

use gwprob::{Error, Graph, Letter, Result};

pub fn parse_letter(g: &Graph, token: &str) -> Result<Letter> {
    let (body, star) = match token.strip_suffix('*') {
        Some(b) => (b, true),
        None => (token, false),
    };
    if body.is_empty() || body.contains('*') {
        return Err(Error::Parse(format!("malformed letter `{token}`")));
    }
    let ids: Vec<&str> = body.split('.').collect();
    if ids.iter().any(|s| s.is_empty()) {
        return Err(Error::Parse(format!("malformed letter `{token}`")));
    }
    Ok(Letter::new(g.word_from_ids(&ids)?, star))
}

pub fn parse_letters(g: &Graph, literal: &str) -> Result<Vec<Letter>> {
    literal
        .split_whitespace()
        .map(|t| parse_letter(g, t))
        .collect()
}
