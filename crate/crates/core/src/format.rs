//! The line-oriented grid file format.
//!
//! ```text
//! # trefoil
//! n=5
//! O=0,1,2,3,4
//! X=2,3,4,0,1
//! ```
//!
//! Lines starting with `#` are comments and whitespace around tokens is
//! ignored. A batch file holds several grids separated by blank lines.

use crate::error::{Error, Result};
use crate::grid::GridDiagram;

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// 1-based column of `part` inside `line`, which it must be a subslice of.
fn column_of(line: &str, part: &str) -> usize {
    part.as_ptr() as usize - line.as_ptr() as usize + 1
}

fn is_skippable(line: &str) -> bool {
    let t = line.trim();
    t.is_empty() || t.starts_with('#')
}

struct Field<'a> {
    line_no: usize,
    line: &'a str,
    value: &'a str,
}

fn expect_field<'a>(line_no: usize, line: &'a str, key: &str) -> Result<Field<'a>> {
    let Some((k, value)) = line.split_once('=') else {
        return Err(syntax(
            line_no,
            column_of(line, line.trim_start()),
            format!("expected `{key}=...`"),
        ));
    };
    if k.trim() != key {
        return Err(syntax(
            line_no,
            column_of(line, line.trim_start()),
            format!("expected key `{key}`, found `{}`", k.trim()),
        ));
    }
    Ok(Field {
        line_no,
        line,
        value,
    })
}

fn parse_rows(field: &Field<'_>) -> Result<Vec<i64>> {
    if field.value.trim().is_empty() {
        return Ok(Vec::new());
    }
    field
        .value
        .split(',')
        .map(|tok| {
            let t = tok.trim();
            let col = column_of(field.line, tok) + (tok.len() - tok.trim_start().len());
            if t.is_empty() {
                return Err(syntax(field.line_no, col, "empty entry"));
            }
            t.parse::<i64>()
                .map_err(|_| syntax(field.line_no, col, format!("`{t}` is not an integer")))
        })
        .collect()
}

fn parse_lines<'a>(lines: impl Iterator<Item = (usize, &'a str)>) -> Result<GridDiagram> {
    let mut content = lines.filter(|(_, l)| !is_skippable(l));
    let mut next = |key: &str, last_line: usize| -> Result<(usize, &'a str)> {
        content
            .next()
            .ok_or_else(|| syntax(last_line + 1, 1, format!("missing `{key}=` line")))
    };

    let (ln, line) = next("n", 0)?;
    let n_field = expect_field(ln, line, "n")?;
    let n_text = n_field.value.trim();
    let n: usize = n_text.parse().map_err(|_| {
        syntax(
            ln,
            column_of(line, n_field.value),
            format!("`{n_text}` is not a grid size"),
        )
    })?;

    let (ln, line) = next("O", ln)?;
    let o_rows = parse_rows(&expect_field(ln, line, "O")?)?;
    let (ln, line) = next("X", ln)?;
    let x_rows = parse_rows(&expect_field(ln, line, "X")?)?;

    if let Some((ln, line)) = content.next() {
        return Err(syntax(
            ln,
            column_of(line, line.trim_start()),
            "unexpected content after the `X=` line",
        ));
    }
    GridDiagram::new(n, &o_rows, &x_rows)
}

pub fn parse_grid(text: &str) -> Result<GridDiagram> {
    parse_lines(text.lines().enumerate().map(|(i, l)| (i + 1, l)))
}

pub fn serialize_grid(grid: &GridDiagram) -> String {
    let join = |v: &[usize]| {
        v.iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    format!(
        "n={}\nO={}\nX={}\n",
        grid.size(),
        join(grid.o_rows()),
        join(grid.x_rows())
    )
}

/// Splits a batch file on blank lines and parses each block. Blocks holding
/// only comments are dropped. Line numbers in errors refer to the whole file.
pub fn parse_batch(text: &str) -> Vec<Result<GridDiagram>> {
    let mut blocks: Vec<Vec<(usize, &str)>> = vec![Vec::new()];
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            if blocks.last().is_some_and(|b| !b.is_empty()) {
                blocks.push(Vec::new());
            }
        } else {
            blocks.last_mut().unwrap().push((i + 1, line));
        }
    }
    blocks
        .into_iter()
        .filter(|b| b.iter().any(|(_, l)| !is_skippable(l)))
        .map(|b| parse_lines(b.into_iter()))
        .collect()
}

pub fn serialize_batch<'a>(grids: impl IntoIterator<Item = &'a GridDiagram>) -> String {
    grids
        .into_iter()
        .map(serialize_grid)
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_minimal_grid() {
        let g = parse_grid("n=2\nO=0,1\nX=1,0").unwrap();
        assert_eq!(g, GridDiagram::new(2, &[0, 1], &[1, 0]).unwrap());
    }

    #[test]
    fn comments_and_whitespace() {
        let g = parse_grid("# unknot\n  n = 2 \n\n O= 0 , 1\n# x next\nX =1,0\n").unwrap();
        assert_eq!(g.size(), 2);
    }

    #[test]
    fn repeated_row_is_not_a_permutation() {
        assert!(matches!(
            parse_grid("n=3\nO=0,0,1\nX=1,2,0"),
            Err(Error::NotAPermutation { .. })
        ));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(
            parse_grid("n=2\nO=0,x\nX=1,0"),
            Err(Error::Syntax {
                line: 2,
                column: 5,
                message: "`x` is not an integer".into()
            })
        );
        assert!(matches!(
            parse_grid("n=2\nX=1,0\nO=0,1"),
            Err(Error::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_grid("n=2\nO=0,1"),
            Err(Error::Syntax { line: 3, .. })
        ));
        assert!(matches!(
            parse_grid("n=2\nO=0,1\nX=1,0\nX=1,0"),
            Err(Error::Syntax { line: 4, .. })
        ));
        assert!(matches!(
            parse_grid("n=2\nO=0,,1\nX=1,0"),
            Err(Error::Syntax { line: 2, column: 5, .. })
        ));
        assert!(matches!(parse_grid("n=-2\nO=\nX="), Err(Error::Syntax { .. })));
    }

    #[test]
    fn batch_splits_on_blank_lines() {
        let text = "# corpus\n\nn=2\nO=0,1\nX=1,0\n\n\nn=2\nO=0,1\nX=0,1\n\n# trailing\n";
        let parsed = parse_batch(text);
        assert_eq!(parsed.len(), 2);
        assert!(parsed[0].is_ok());
        assert_eq!(parsed[1], Err(Error::SharedCell { column: 0, row: 0 }));
    }
}
