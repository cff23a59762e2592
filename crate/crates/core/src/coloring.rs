//! Vertex colorings with positive integer colors.

use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("coloring must cover at least one vertex")]
    Empty,
    #[error("vertex {v}: colors must be positive")]
    NonPositiveColor { v: usize },
    #[error("line {line}: {msg}")]
    BadLine { line: usize, msg: String },
    #[error("vertex {v} assigned twice")]
    DuplicateVertex { v: usize },
    #[error("no color given for vertex {v}")]
    MissingVertex { v: usize },
}

/// Assignment of a positive color to each of the vertices 0, …, n−1.
/// Colors need not be contiguous; only equality between them matters.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(transparent)]
pub struct VertexColoring {
    colors: Vec<usize>,
}

impl VertexColoring {
    pub fn new(colors: Vec<usize>) -> Result<Self, ColoringError> {
        if colors.is_empty() {
            return Err(ColoringError::Empty);
        }
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(ColoringError::NonPositiveColor { v });
        }
        Ok(VertexColoring { colors })
    }

    /// Everything colored 1.
    pub fn uniform(n: usize) -> Self {
        VertexColoring { colors: vec![1; n.max(1)] }
    }

    /// Vertex v gets color v + 1.
    pub fn all_distinct(n: usize) -> Self {
        VertexColoring { colors: (1..=n.max(1)).collect() }
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Number of distinct colors used.
    pub fn palette_size(&self) -> usize {
        let mut cs: Vec<usize> = self.colors.clone();
        cs.sort_unstable();
        cs.dedup();
        cs.len()
    }

    pub fn max_color(&self) -> usize {
        *self.colors.iter().max().expect("nonempty")
    }

    /// Parse `vertex color` lines ('#' comments, blank lines ignored); each
    /// vertex 0, …, n−1 must appear exactly once, n inferred from the input.
    pub fn parse(text: &str) -> Result<Self, ColoringError> {
        let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let item = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            }
            .trim();
            if item.is_empty() {
                continue;
            }
            let fields: Vec<&str> = item.split_whitespace().collect();
            let [v, c] = fields.as_slice() else {
                return Err(ColoringError::BadLine {
                    line,
                    msg: format!("expected `vertex color`, got {item:?}"),
                });
            };
            let parse = |tok: &str| {
                tok.parse::<usize>().map_err(|_| ColoringError::BadLine {
                    line,
                    msg: format!("bad number {tok:?}"),
                })
            };
            pairs.push((parse(v)?, parse(c)?, line));
        }
        if pairs.is_empty() {
            return Err(ColoringError::Empty);
        }
        let n = pairs.iter().map(|&(v, _, _)| v).max().unwrap() + 1;
        let mut colors = vec![0usize; n];
        let mut seen = vec![false; n];
        for (v, c, line) in pairs {
            if seen[v] {
                return Err(ColoringError::DuplicateVertex { v });
            }
            seen[v] = true;
            if c == 0 {
                return Err(ColoringError::BadLine { line, msg: format!("vertex {v}: colors must be positive") });
            }
            colors[v] = c;
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(ColoringError::MissingVertex { v });
        }
        VertexColoring::new(colors)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, c) in self.colors.iter().enumerate() {
            let _ = writeln!(out, "{v} {c}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_accessors() {
        let c = VertexColoring::new(vec![1, 1, 2, 5]).unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c.color(2), 2);
        assert_eq!(c.palette_size(), 3);
        assert_eq!(c.max_color(), 5);
        assert_eq!(VertexColoring::uniform(3).colors(), &[1, 1, 1]);
        assert_eq!(VertexColoring::all_distinct(3).colors(), &[1, 2, 3]);
    }

    #[test]
    fn rejects_bad_colorings() {
        assert_eq!(VertexColoring::new(vec![]), Err(ColoringError::Empty));
        assert_eq!(VertexColoring::new(vec![1, 0]), Err(ColoringError::NonPositiveColor { v: 1 }));
    }

    #[test]
    fn parse_round_trip() {
        let c = VertexColoring::parse("# coloring\n2 7\n0 1\n1 1\n").unwrap();
        assert_eq!(c.colors(), &[1, 1, 7]);
        assert_eq!(VertexColoring::parse(&c.to_text()).unwrap(), c);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            VertexColoring::parse("0 1\n0 2\n"),
            Err(ColoringError::DuplicateVertex { v: 0 })
        );
        assert_eq!(VertexColoring::parse("0 1\n2 1\n"), Err(ColoringError::MissingVertex { v: 1 }));
        assert!(matches!(VertexColoring::parse("0 1 2\n"), Err(ColoringError::BadLine { line: 1, .. })));
        assert!(matches!(VertexColoring::parse("0 0\n"), Err(ColoringError::BadLine { .. })));
        assert_eq!(VertexColoring::parse("  \n"), Err(ColoringError::Empty));
    }
}
