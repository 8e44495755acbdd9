//! Parsers for the compact list syntaxes used on the command line.
//!
//! - integer lists: `1,3,5`
//! - per-component lists: `1,4;1,3`
//! - component groups: `1,2;3,4`
//! - vertex pairs: `1:3=1:10,1:5=1:14`

use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArgError {
    #[error("`{token}` is not a positive integer")]
    Integer { token: String },
    #[error("empty list")]
    Empty,
    #[error("`{0}` is not a vertex pair of the form m:i=m:j")]
    Pair(String),
    #[error(transparent)]
    Vertex(#[from] crate::graph::ParseVertexError),
}

pub fn parse_u32_list(s: &str) -> Result<Vec<u32>, ArgError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ArgError::Empty);
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            match tok.parse::<u32>() {
                Ok(v) if v > 0 => Ok(v),
                _ => Err(ArgError::Integer {
                    token: tok.to_string(),
                }),
            }
        })
        .collect()
}

/// `;`-separated integer lists.
pub fn parse_list_of_lists(s: &str) -> Result<Vec<Vec<u32>>, ArgError> {
    s.split(';').map(parse_u32_list).collect()
}

pub fn parse_component_groups(s: &str) -> Result<Vec<Vec<usize>>, ArgError> {
    Ok(parse_list_of_lists(s)?
        .into_iter()
        .map(|g| g.into_iter().map(|c| c as usize).collect())
        .collect())
}

pub fn parse_vertex_pairs(s: &str) -> Result<Vec<(VertexId, VertexId)>, ArgError> {
    if s.trim().is_empty() {
        return Err(ArgError::Empty);
    }
    s.split(',')
        .map(|tok| {
            let (a, b) = tok
                .split_once('=')
                .ok_or_else(|| ArgError::Pair(tok.to_string()))?;
            Ok((a.parse()?, b.parse()?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists() {
        assert_eq!(parse_u32_list("1, 3,5"), Ok(vec![1, 3, 5]));
        assert_eq!(
            parse_list_of_lists("1,4;1,3"),
            Ok(vec![vec![1, 4], vec![1, 3]])
        );
        assert!(matches!(
            parse_u32_list("1,,3"),
            Err(ArgError::Integer { .. })
        ));
        assert!(matches!(parse_u32_list("0"), Err(ArgError::Integer { .. })));
        assert_eq!(parse_u32_list(" "), Err(ArgError::Empty));
    }

    #[test]
    fn pairs() {
        assert_eq!(
            parse_vertex_pairs("1:3=1:10,2:5=2:14"),
            Ok(vec![
                (VertexId::new(1, 3), VertexId::new(1, 10)),
                (VertexId::new(2, 5), VertexId::new(2, 14))
            ])
        );
        assert!(matches!(
            parse_vertex_pairs("1:3-1:10"),
            Err(ArgError::Pair(_))
        ));
        assert!(matches!(
            parse_vertex_pairs("1:3=x"),
            Err(ArgError::Vertex(_))
        ));
    }
}
