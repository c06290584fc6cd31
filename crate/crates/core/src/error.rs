use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Shapes of matrices or vectors do not fit together.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("quiver contains an oriented cycle through vertex {0}")]
    Cycle(usize),
    #[error("arrow name `{0}` is used twice")]
    DuplicateArrow(String),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("representations live over different quivers")]
    QuiverMismatch,
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("not a subrepresentation: {0}")]
    InvalidSubrep(String),

    #[error("quiver is not of finite representation type (not a union of ADE Dynkin diagrams)")]
    NotRepresentationFinite,
    #[error("knitting exceeded the cap of {0} modules")]
    IterationCapExceeded(usize),
    #[error("no indecomposable with dimension vector {0:?}")]
    UnknownIndecomposable(Vec<usize>),

    #[error("S({0}) is injective, so there is no BB tilt at vertex {0}")]
    SimpleIsInjective(usize),
    #[error("not a tilting module: {0}")]
    NotTilting(String),
    #[error("tilting module {0} has a summand outside the torsion and torsion-free classes")]
    NotInScope(String),
    #[error("admissibility fails: indecomposable {summand} in {module} is generated by the torsion-free part")]
    AdmissibilityViolation { module: String, summand: usize },
    #[error("cogeneration fails: indecomposable {summand} in {module} is cogenerated by the torsion part")]
    CogenerationViolation { module: String, summand: usize },
    #[error("summand {0} is neither torsion nor torsion-free")]
    SummandNotInScope(usize),
    #[error("the transported construction needs a BB tilt")]
    NotBB,
    #[error("cross-arrow rule disagrees with the Ext criterion: {0}")]
    CrossArrowMismatch(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
