use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or out-of-range input supplied by the caller.
    #[error("invalid input: {0}")]
    Input(String),

    /// A construction precondition (e.g. on `a`, `p`, `q`) does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The λ ≡ −2 (mod q) requirement of the fusion construction fails.
    #[error("|S ∩ (S+1)| = {lambda} ≡ {residue} (mod {q}), need ≡ −2")]
    CongruenceFails { lambda: u64, q: u64, residue: u64 },

    /// An internal consistency check failed; indicates an arithmetic bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("graph file parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
