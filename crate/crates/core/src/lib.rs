//! Face enumeration for simplicial complexes and their subdivisions:
//! h-, γ-, local h- and local γ-polynomials, homology-based validation of
//! subdivision maps, the cross-polytope and ball-to-sphere constructions,
//! and a seeded harness for testing γ-positivity statements on generated
//! flag spheres.

pub mod complex;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod face;
pub mod harness;
pub mod homology;
pub mod io;
pub mod poly;
pub mod subdivision;

pub use complex::{FVector, Labels, SimplicialComplex};
pub use constructions::{ball_to_sphere, fixture, sigma_cross_polytope_map, FacetChoice, FIXTURE_NAMES};
pub use enumeration::{gamma_vector, h_polynomial, interior_h_polynomial, is_eulerian, reduced_euler_characteristic};
pub use error::{Error, Result};
pub use face::Face;
pub use homology::{classify, classify_with_evidence, reduced_betti, BettiVector, FieldSpec, HomologyClass, Verdict};
pub use poly::{gamma_from_symmetric, GammaVector, IntPolynomial, SymmetryFailure};
pub use subdivision::{
    barycentric_subdivision, edge_subdivision, h_decomposition, interior_stats, join_subdivision, link_subdivision,
    local_gamma, local_h, relative_local_h, stellar_subdivision, validate, InteriorStats, SubdivisionMap,
    SubdivisionVerdict, ValidationMode,
};
