use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field error: {0}")]
    Field(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("associativity fails on basis triple ({0}, {1}, {2})")]
    AssociativityViolation(usize, usize, usize),

    #[error("unit law fails on basis element {0}")]
    UnitViolation(usize),

    #[error("presentation is not admissible: {0}")]
    NotAdmissible(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("module law fails: {0}")]
    ModuleLaw(String),

    #[error("modules are over different algebras")]
    AlgebraMismatch,

    #[error("morphism endpoints do not match: {0}")]
    EndpointMismatch(String),

    #[error("morphism does not intertwine the actions")]
    NotAMorphism,

    #[error("module is not indecomposable")]
    NotIndecomposable,

    #[error("presentation is not Nakayama: {0}")]
    NotNakayama(String),

    #[error("quiver is not of type A: {0}")]
    NotTypeA(String),

    #[error("catalogue invariant violated: {0}")]
    InvariantViolation(String),

    #[error("module is not isomorphic to any catalogue member (dimension {0})")]
    NotInCatalogue(usize),

    #[error("radical is not nilpotent below the cap {0}; the algebra may be of infinite representation type or the catalogue incomplete")]
    RepInfiniteSuspected(usize),

    #[error("level {0} is out of range")]
    OutOfRange(usize),

    #[error("module is projective")]
    IsProjective,

    #[error("module is injective")]
    IsInjective,

    #[error("no extension class certified as almost split: {0}")]
    CertificationFailed(String),

    #[error("morphism is zero")]
    ZeroMorphism,

    #[error("morphism is not irreducible (depth {0})")]
    NotIrreducible(String),

    #[error("path search exhausted: {0}")]
    SearchExhausted(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("precondition failed: {0}")]
    Precondition(String),
}
