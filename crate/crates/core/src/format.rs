//! Text and JSON forms of a square.
//!
//! Text: the order on the first line, then one line per row of
//! space-separated symbols. JSON: `{"order": n, "grid": [[..]], "family": ".."}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::square::{Family, LatinSquare};

pub fn to_text(square: &LatinSquare) -> String {
    let mut out = format!("{}\n", square.order());
    for row in square.rows() {
        let line: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_text(input: &str) -> Result<LatinSquare> {
    let mut lines = input.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (header_idx, header) = lines.next().ok_or_else(|| parse_err(1, 1, "empty input"))?;
    let order: usize = header
        .trim()
        .parse()
        .map_err(|_| parse_err(header_idx + 1, 1, format!("expected the order, found `{}`", header.trim())))?;
    if order == 0 {
        return Err(parse_err(header_idx + 1, 1, "order must be positive"));
    }

    let mut grid = Vec::with_capacity(order);
    for (idx, line) in lines {
        if grid.len() == order {
            return Err(parse_err(idx + 1, 1, "trailing data after the last row"));
        }
        let mut row = Vec::with_capacity(order);
        for (col, token) in tokens(line) {
            let value = token
                .parse()
                .map_err(|_| parse_err(idx + 1, col, format!("expected a symbol, found `{token}`")))?;
            row.push(value);
        }
        if row.len() != order {
            return Err(parse_err(idx + 1, 1, format!("expected {order} symbols, found {}", row.len())));
        }
        grid.push(row);
    }
    if grid.len() != order {
        return Err(parse_err(input.lines().count() + 1, 1, format!("expected {order} rows, found {}", grid.len())));
    }
    LatinSquare::new(order, grid)
}

/// Whitespace-separated tokens with their 1-based character column.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut start = None;
    let mut out = Vec::new();
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out.into_iter()
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

#[derive(Serialize, Deserialize)]
struct SquareJson {
    order: usize,
    grid: Vec<Vec<usize>>,
    #[serde(default)]
    family: Family,
}

pub fn to_json(square: &LatinSquare) -> String {
    let doc = SquareJson { order: square.order(), grid: square.to_grid(), family: square.family() };
    serde_json::to_string(&doc).expect("square serializes")
}

pub fn parse_json(input: &str) -> Result<LatinSquare> {
    let doc: SquareJson = serde_json::from_str(input)
        .map_err(|e| parse_err(e.line(), e.column(), e.to_string()))?;
    Ok(LatinSquare::new(doc.order, doc.grid)?.with_family(doc.family))
}

/// Accepts either form, picking JSON when the input starts with `{`.
pub fn parse_any(input: &str) -> Result<LatinSquare> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::square::cayley_table;

    #[test]
    fn order_two_text() {
        let sq = cayley_table(2).unwrap();
        assert_eq!(to_text(&sq), "2\n0 1\n1 0\n");
        assert_eq!(parse_text("2\n0 1\n1 0\n").unwrap(), sq);
    }

    #[test]
    fn not_latin_is_propagated() {
        assert!(matches!(parse_text("2\n0 1\n0 1\n"), Err(Error::NotLatin { .. })));
    }

    #[test]
    fn bad_token_location() {
        match parse_text("3\n0 1 2\n1 x 0\n2 0 1\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (3, 3)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn short_and_long_inputs() {
        assert!(matches!(parse_text("3\n0 1 2\n1 2 0\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_text("2\n0 1\n1 0\n0 1\n"), Err(Error::Parse { line: 4, .. })));
        assert!(matches!(parse_text("2\n0 1 1\n1 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_text(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_text("zero\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn json_keeps_family() {
        let sq = cayley_table(3).unwrap();
        let text = to_json(&sq);
        assert_eq!(text, r#"{"order":3,"grid":[[0,1,2],[1,2,0],[2,0,1]],"family":"CAYLEY"}"#);
        let back = parse_json(&text).unwrap();
        assert_eq!(back, sq);
        assert_eq!(back.family(), Family::Cayley);
        assert_eq!(parse_any(&text).unwrap(), sq);
    }

    #[test]
    fn json_family_defaults_to_custom() {
        let sq = parse_json(r#"{"order":1,"grid":[[0]]}"#).unwrap();
        assert_eq!(sq.family(), Family::Custom);
    }
}
