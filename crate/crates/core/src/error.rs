use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("unsupported field F{0}: only the rationals are implemented")]
    UnsupportedField(u64),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("non-admissible ideal: {0}")]
    NonAdmissibleIdeal(String),
    #[error("inconsistent rewriting: {0}")]
    InconsistentRewriting(String),
    #[error("inhomogeneous relations: {0}")]
    InhomogeneousRelations(String),
    #[error("invalid Brauer graph: {0}")]
    InvalidGraph(String),
    #[error("unknown catalogue name `{0}`")]
    UnknownName(String),
    #[error("complexes live over different algebras")]
    AlgebraMismatch,
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("summand {0} is not an indecomposable summand of the complex")]
    NotASummand(usize),
    #[error("complex is not basic: {0}")]
    NotBasic(String),
    #[error("invalid crystal context: {0}")]
    InvalidContext(String),
    #[error("operator string is undefined: {0}")]
    UndefinedOperator(String),
    #[error("bipartition is not Kleshchev")]
    NotKleshchev,
    #[error("invalid bipartition: {0}")]
    InvalidPartition(String),
    #[error("word is not alternating in s0/s1: {0}")]
    NonAlternatingWord(String),
    #[error("no decomposition matrix solves D^T D = C")]
    NoSolution,
    #[error("algebra is not a mutation endomorphism algebra of the expected kind: {0}")]
    WrongAlgebra(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
