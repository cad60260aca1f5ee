use thiserror::Error;

/// Errors raised by constructors and operations across the crate.
///
/// Faces are reported by vertex names so messages are readable without the
/// owning complex at hand.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("invalid vertex label `{0}`: labels must be non-empty and contain no whitespace or commas")]
    InvalidLabel(String),
    #[error("ground set of {size} vertices exceeds the configured width {limit}")]
    GroundSetTooLarge { size: usize, limit: usize },
    #[error("{0:?} is not a face")]
    NotAFace(Vec<String>),
    #[error("ground sets overlap on `{0}`")]
    GroundSetOverlap(String),
    #[error("vertex name `{0}` already in use")]
    VertexCollision(String),
    #[error("interior face {0:?} is not a face of the complex")]
    InteriorNotSubset(Vec<String>),
    #[error("stellar subdivision needs a nonempty face")]
    EmptyStellarFace,
    #[error("{0:?} is not an edge")]
    NotAnEdge(Vec<String>),

    #[error("face {0:?} has no carrier")]
    MissingCarrier(Vec<String>),
    #[error("carrier {carrier:?} of {face:?} is not a face of the base")]
    CarrierNotInBase { face: Vec<String>, carrier: Vec<String> },
    #[error("the empty face must be carried to the empty face")]
    EmptyFaceCarrier,
    #[error("carrier map is not monotone at {face:?} over {sub:?}")]
    NotMonotone { face: Vec<String>, sub: Vec<String> },
    #[error("carrier of {0:?} has smaller dimension than the face")]
    DimensionDrop(Vec<String>),
    #[error("carrier map misses base face {0:?}")]
    NotSurjective(Vec<String>),
    #[error("base complex is not a full simplex")]
    BaseNotSimplex,
    #[error("inner subdivision's base differs from the outer subdivision's total complex")]
    BaseMismatch,
    #[error("carrier of {0:?} is not the face itself")]
    CarrierMismatch(Vec<String>),
    #[error("not a homology subdivision: {0}")]
    NotHomologySubdivision(String),
    #[error("local h-polynomial is not symmetric at ({low}, {high})")]
    LocalHAsymmetric { low: usize, high: usize },

    #[error("complex is not flag; minimal non-face {0:?}")]
    NotFlag(Vec<String>),
    #[error("complex is not a homology sphere")]
    NotASphere,
    #[error("{0:?} is not a facet")]
    NotAFacet(Vec<String>),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("field characteristic {0} is not prime")]
    NotPrime(u32),
    #[error("unknown field `{0}` (expected gf2, gf<p> or q)")]
    UnknownField(String),

    #[error("instance has {faces} faces, above the guard of {limit}")]
    InstanceTooLarge { faces: usize, limit: usize },
    #[error("malformed instance: {0}")]
    MalformedInstance(String),
    #[error("malformed document: {0}")]
    MalformedDocument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
