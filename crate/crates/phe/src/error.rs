//! Crate-wide error type.

/// Errors produced by key generation, the homomorphic operations, the
/// group-program pipeline and the text serialization.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An argument violates a precondition (bad modulus, mismatched keys,
    /// non-coprime CRT moduli, singular matrix, ...).
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// A plaintext or scalar lies outside the scheme's message space.
    #[error("out of range: {0}")]
    Domain(String),

    /// Randomized generation (primes, keys) exhausted its attempt budget
    /// or the requested constraint is unsatisfiable.
    #[error("generation failed: {0}")]
    Generation(String),

    /// A ciphertext is not a valid element of its scheme's ciphertext
    /// group, or decryption landed outside the expected subgroup.
    #[error("corrupt ciphertext: {0}")]
    Corrupt(String),

    /// The operation is undefined for this scheme (e.g. blinding a
    /// deterministic scheme).
    #[error("unsupported operation: {0}")]
    Unsupported(String),

    /// A homomorphic accumulation could wrap around the message modulus.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// Malformed serialized input. Names the offending field.
    #[error("format error in `{field}`: {reason}")]
    Format { field: String, reason: String },

    /// Syntactically valid input whose values violate an invariant
    /// (residue outside its group, inconsistent key material, ...).
    #[error("validation failed: {0}")]
    Validation(String),

    /// A boolean circuit is malformed or cannot be compiled.
    #[error("circuit error: {0}")]
    Circuit(String),
}

impl Error {
    pub(crate) fn format(field: &str, reason: impl Into<String>) -> Self {
        Error::Format { field: field.to_string(), reason: reason.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
