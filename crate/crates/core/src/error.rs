use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed text input. `pos` is a byte offset into the input.
    #[error("parse error at position {pos} near `{token}`: {msg}")]
    Parse { pos: usize, token: String, msg: String },

    #[error("not a partition: {0}")]
    NotAPartition(String),

    #[error("{inner} is not a subpartition of {outer}")]
    NotSubpartition { inner: String, outer: String },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("degree mismatch: permutation has degree {perm}, expected {expected}")]
    DegreeMismatch { perm: usize, expected: usize },

    #[error("empty skew shape has no height")]
    EmptyShape,

    #[error("{0} is not a border strip")]
    NotBorderStrip(String),

    #[error("shape mismatch: {0} vs {1}")]
    ShapeMismatch(String, String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid Garnir box ({row},{col}): {msg}")]
    InvalidBox { row: usize, col: usize, msg: String },

    #[error("multiplicity {0} is not a non-negative integer")]
    NonIntegral(String),

    #[error("unknown suite `{name}`; registered suites: {}", registered.join(", "))]
    UnknownSuite {
        name: String,
        registered: Vec<&'static str>,
    },
}

impl Error {
    pub(crate) fn parse(input: &str, pos: usize, msg: impl Into<String>) -> Self {
        let token: String = input
            .get(pos..)
            .unwrap_or("")
            .chars()
            .take_while(|c| !matches!(c, ',' | '/' | ')' | '('))
            .collect();
        let token = if pos >= input.len() {
            "end of input".to_string()
        } else if token.is_empty() {
            input.get(pos..).unwrap_or("").chars().take(1).collect()
        } else {
            token
        };
        Error::Parse {
            pos,
            token,
            msg: msg.into(),
        }
    }
}
