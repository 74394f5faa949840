use alloc::string::String;

use crate::symexpr::Symbol;

/// Failure while reading an expression.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{message} at byte {position}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("symbol `{0}` already declared with a different kind")]
    SymbolKindClash(String),
    #[error("cannot differentiate with respect to parameter `{0}`")]
    ParameterDerivative(Symbol),
    #[error("symbol `{0}` has no assigned value")]
    Unassigned(Symbol),
    #[error("`{0}` does not evaluate to a rational number")]
    NotRational(String),
    #[error("cannot substitute into the transcendental argument of `{0}`")]
    TranscendentalSubstitution(Symbol),
    #[error("{0} is not invertible in the scalar ring")]
    NotInvertible(String),
    #[error("chart mismatch")]
    ChartMismatch,
    #[error("invalid chart: {0}")]
    InvalidChart(String),
    #[error("multivector of grade 0 is not a valid Schouten argument")]
    GradeZero,
    #[error("grade {grade} exceeds chart dimension {dim}")]
    GradeOverflow { grade: usize, dim: usize },
    #[error("expected grade {expected}, found {found}")]
    WrongGrade { expected: usize, found: usize },
    #[error("Pfaffian requires an even dimension, got {0}")]
    OddDimension(usize),
    #[error("matrix is not antisymmetric at ({0}, {1})")]
    NotAntisymmetric(usize, usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("structure constants violate the Jacobi identity: {0}")]
    JacobiIdentity(String),
    #[error("matrix is not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("automorphism has zero determinant")]
    SingularAutomorphism,
    #[error("vielbein is singular")]
    SingularVielbein,
    #[error("vielbein does not match algebra `{0}`")]
    VielbeinMismatch(String),
    #[error("chart already contains coordinate `{0}`")]
    ChartHasCoordinate(String),
    #[error("expected {expected} functions, found {found}")]
    WrongFunctionCount { expected: usize, found: usize },
    #[error("realization fails: {0}")]
    Realization(String),
    #[error("Darboux map fails: {0}")]
    Darboux(String),
    #[error("bracket [X{0}, X{1}] given more than once")]
    DuplicateBracket(usize, usize),
    #[error("not a Jacobi structure: {0}")]
    NotJacobi(String),
    #[error("structure constants not reproduced for pair (S{0}, S{1})")]
    StructureConstants(usize, usize),
    #[error("side condition violated: {0}")]
    SideCondition(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
