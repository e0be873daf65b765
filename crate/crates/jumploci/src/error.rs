use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    CompositeModulus(u64),
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("{0} is not a subset of the vertex set")]
    NotAVertexSubset(String),
    #[error("{0} is not a face of the complex")]
    NotAFace(String),
    #[error("complex is not a flag complex")]
    NotFlag,
    #[error("zero character is not allowed")]
    ZeroCharacter,
    #[error("character has a zero coordinate")]
    ZeroCoordinate,
    #[error("expected {0} coordinates, got {1}")]
    LengthMismatch(usize, usize),
    #[error("presentation has first Betti number zero; no character torus")]
    RankZeroAbelianization,
    #[error("degree {0} out of range (top degree {1})")]
    DegreeOutOfRange(usize, usize),
    #[error("multiplication tables are not shape-consistent: {0}")]
    ShapeMismatch(String),
    #[error("algebra violates graded commutativity: {0}")]
    NotGradedCommutative(String),
    #[error("GF(2) coefficients rejected: H_1 torsion flag is set")]
    CharTwoTorsion,
    #[error("filtration layers defined only through degree {0}, degree {1} requested")]
    DegreeShortfall(usize, usize),
    #[error("parallel lines {0} and {1} after section; arrangement not in normal form")]
    ParallelLines(usize, usize),
    #[error("generic section failed after {0} attempts")]
    SectionRetriesExhausted(usize),
    #[error("unsupported product of a hypersurface with a proper subtorus")]
    UnsupportedHypersurfaceProduct,
    #[error("arrangement rank {0} too small for a planar section")]
    RankTooSmall(usize),
    #[error("complex has {0} vertices, above the configured cap {1}")]
    TooManyVertices(usize, usize),
    #[error("invalid input: {0}")]
    Parse(String),
    #[error("unknown example scenario {0:?}")]
    UnknownScenario(String),
}
