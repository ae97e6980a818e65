use thiserror::Error;

/// Errors raised by constructions, law checks and the expression front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    /// An output would exceed the configured size cap.
    #[error("size cap exceeded: {what} needs {needed} but the cap is {cap}")]
    SizeCap { what: String, needed: String, cap: u64 },
    /// Two objects that must coincide do not.
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),
    /// A representable polynomial was required.
    #[error("not representable: {0}")]
    NotRepresentable(String),
    #[error(
        "parse error at line {line}, column {column}: {message}{}",
        expected_suffix(expected)
    )]
    Parse {
        line: usize,
        column: usize,
        message: String,
        expected: Vec<String>,
    },
    /// A map table is ill-formed or its endpoints are wrong.
    #[error("invalid map: {0}")]
    InvalidMap(String),
    /// A multiplication table fails the monoid axioms.
    #[error("invalid monoid: {0}")]
    InvalidMonoid(String),
    /// A request names something unknown or is otherwise unusable.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

fn expected_suffix(expected: &[String]) -> String {
    if expected.is_empty() {
        String::new()
    } else {
        format!(" (expected {})", expected.join(", "))
    }
}

pub type Result<T> = std::result::Result<T, PolyError>;
