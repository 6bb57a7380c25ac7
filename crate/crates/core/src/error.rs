use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("operands come from different fields, alphabets or symbol lists")]
    ContextMismatch,
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("coefficients contain extension symbols")]
    SymbolicCoefficients,
    #[error("input is not a Gröbner basis")]
    NotGroebner,
    #[error("search space {needed} exceeds the cap of {cap}")]
    SearchSpaceTooLarge { needed: String, cap: u64 },
    #[error("solutions can only be enumerated over a prime field")]
    UnsupportedField,
    #[error("enumeration budget of {0} exhausted")]
    BudgetExhausted(u64),
    #[error("{0}")]
    InvalidInput(String),
}
