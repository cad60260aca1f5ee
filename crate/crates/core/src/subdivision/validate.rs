//! Subdivision axioms and the quasi-geometric / vertex-induced / flag
//! hierarchy.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use super::SubdivisionMap;
use crate::complex::SimplicialComplex;
use crate::face::Face;
use crate::homology::{classify, unique_facet_boundary, FieldSpec, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValidationMode {
    /// Classify every restriction by homology over the given field.
    Full(FieldSpec),
    /// Combinatorial checks only: purity, ridges in at most two facets, and
    /// the interior read off the unique-facet boundary.
    Fast,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationFailure {
    pub check: &'static str,
    pub face: Vec<String>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubdivisionVerdict {
    pub is_homology_subdivision: bool,
    pub is_quasi_geometric: bool,
    pub is_vertex_induced: bool,
    pub is_flag_subdivision: bool,
    /// False when the homology axioms were only checked combinatorially.
    pub homology_checked: bool,
    pub failures: Vec<ValidationFailure>,
}

fn failure(check: &'static str, k: &SimplicialComplex, f: Face, reason: impl Into<String>) -> ValidationFailure {
    ValidationFailure {
        check,
        face: k.sorted_names(f),
        reason: reason.into(),
    }
}

fn restriction_failure(s: &SubdivisionMap, f: Face, mode: ValidationMode) -> Option<String> {
    let total_f = s.restricted_total(f);
    if f.is_empty() {
        return (total_f.num_faces() != 1).then(|| "faces other than ∅ carried to ∅".to_string());
    }
    let dim = f.dim();
    let boundary = match mode {
        ValidationMode::Full(field) => match classify(&total_f, field).verdict {
            Verdict::Ball { dim: bd, boundary } if bd == dim => Some(boundary),
            Verdict::Ball { dim: bd, .. } => return Some(format!("restriction is a {bd}-ball")),
            Verdict::Sphere { dim: sd } => return Some(format!("restriction is a {sd}-sphere, not a ball")),
            Verdict::Other => return Some("restriction is not a homology ball".to_string()),
        },
        ValidationMode::Fast => {
            if !total_f.is_pure() || total_f.dim() != dim {
                return Some(format!("restriction is not pure of dimension {dim}"));
            }
            let top = f.len();
            let mut incidence: HashMap<Face, usize> = HashMap::new();
            for g in total_f.faces_of_size(top) {
                for r in g.facets_of_boundary() {
                    *incidence.entry(r).or_default() += 1;
                }
            }
            if let Some((r, _)) = incidence.iter().find(|(_, n)| **n > 2) {
                return Some(format!(
                    "ridge {:?} lies in more than two facets",
                    total_f.sorted_names(*r)
                ));
            }
            unique_facet_boundary(&total_f)
        }
    };
    let interior: HashSet<Face> = total_f
        .faces()
        .iter()
        .copied()
        .filter(|g| boundary.as_ref().map_or(true, |b| !b.contains(*g)))
        .collect();
    let preimage: HashSet<Face> = s.preimage(f).into_iter().collect();
    (interior != preimage).then(|| "faces carried onto the face differ from the interior".to_string())
}

/// Failures of the homology-subdivision axioms, one per offending base face.
pub fn check_homology_axioms(s: &SubdivisionMap, mode: ValidationMode) -> Vec<ValidationFailure> {
    let found: Vec<ValidationFailure> = s
        .base()
        .faces()
        .par_iter()
        .filter_map(|&f| restriction_failure(s, f, mode).map(|r| failure("homology-subdivision", s.base(), f, r)))
        .collect();
    found
}

/// Faces `E` of the total complex whose vertex carriers span fewer than
/// `|E|` base vertices.
pub fn check_quasi_geometric(s: &SubdivisionMap) -> Vec<ValidationFailure> {
    s.total()
        .faces()
        .iter()
        .filter(|e| s.vertex_carrier_union(**e).len() < e.len())
        .map(|&e| {
            failure(
                "quasi-geometric",
                s.total(),
                e,
                "vertex carriers lie in a smaller base face",
            )
        })
        .collect()
}

/// Base faces whose restriction is not the induced subcomplex on its own
/// vertex set.
pub fn check_vertex_induced(s: &SubdivisionMap) -> Vec<ValidationFailure> {
    s.base()
        .faces()
        .iter()
        .filter_map(|&f| {
            let restricted = s.restricted_total(f);
            let induced = s.total().induced(restricted.vertex_set());
            (induced.num_faces() != restricted.num_faces())
                .then(|| failure("vertex-induced", s.base(), f, "restriction is not induced"))
        })
        .collect()
}

/// Base faces whose restriction is not flag.
pub fn is_flag_subdivision(s: &SubdivisionMap) -> Vec<ValidationFailure> {
    s.base()
        .faces()
        .iter()
        .filter_map(|&f| {
            let restricted = s.restricted_total(f);
            restricted.first_non_flag_witness().map(|w| {
                failure(
                    "flag",
                    s.base(),
                    f,
                    format!("minimal non-face {:?}", restricted.sorted_names(w)),
                )
            })
        })
        .collect()
}

pub fn validate(s: &SubdivisionMap, mode: ValidationMode) -> SubdivisionVerdict {
    let homology = check_homology_axioms(s, mode);
    let qg = check_quasi_geometric(s);
    let vi = check_vertex_induced(s);
    let flag = is_flag_subdivision(s);
    SubdivisionVerdict {
        is_homology_subdivision: homology.is_empty(),
        is_quasi_geometric: qg.is_empty(),
        is_vertex_induced: vi.is_empty(),
        is_flag_subdivision: flag.is_empty(),
        homology_checked: matches!(mode, ValidationMode::Full(_)),
        failures: homology.into_iter().chain(qg).chain(vi).chain(flag).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subdivision::{barycentric_subdivision, stellar_subdivision};
    use proptest::prelude::*;

    const FULL: ValidationMode = ValidationMode::Full(FieldSpec::Gf2);

    /// Literal form: no face `E` and base face `F` with every vertex carrier
    /// of `E` inside `F` and `dim F < dim E`.
    fn qg_literal(s: &SubdivisionMap) -> bool {
        s.total().faces().iter().all(|&e| {
            !s.base()
                .faces()
                .iter()
                .any(|&f| f.len() < e.len() && e.iter().all(|v| s.carrier(Face::singleton(v)).unwrap().is_subset(f)))
        })
    }

    /// Literal form of vertex-induced: every face of the total complex whose
    /// vertices all lie in the restriction belongs to the restriction.
    fn vi_literal(s: &SubdivisionMap) -> bool {
        s.base().faces().iter().all(|&f| {
            let r = s.restricted_total(f);
            s.total()
                .faces()
                .iter()
                .filter(|e| e.is_subset(r.vertex_set()))
                .all(|e| r.contains(*e))
        })
    }

    #[test]
    fn trivial_passes_everything() {
        for k in [
            SimplicialComplex::simplex(&["a", "b", "c", "d"]).unwrap(),
            SimplicialComplex::cross_polytope(3),
        ] {
            let s = SubdivisionMap::trivial(&k);
            for mode in [FULL, ValidationMode::Fast] {
                let v = validate(&s, mode);
                assert!(
                    v.is_homology_subdivision && v.is_quasi_geometric && v.is_vertex_induced && v.is_flag_subdivision,
                    "{v:?}"
                );
            }
        }
    }

    #[test]
    fn wrong_interior_is_caught() {
        // the identity on a triangle, but claiming the edge ab is interior
        let k = SimplicialComplex::simplex(&["a", "b", "c"]).unwrap();
        let ab = Face::prefix(2);
        let s = SubdivisionMap::from_fn(k.clone(), k, |e| if e == ab { Face::prefix(3) } else { e });
        // the edge ab is then never hit
        assert!(matches!(s, Err(crate::Error::NotSurjective(_))));
    }

    #[test]
    fn non_ball_restriction_fails() {
        // two triangles glued along an edge, mapped onto a single triangle
        let total =
            SimplicialComplex::from_facets(&["a", "b", "c", "x"], &[vec!["a", "b", "c"], vec!["a", "b", "x"]]).unwrap();
        let base = SimplicialComplex::simplex(&["a", "b", "c"]).unwrap();
        let s = SubdivisionMap::from_fn(total, base, |e| {
            if e.contains(3) || e.len() == 3 {
                Face::prefix(3)
            } else {
                e
            }
        })
        .unwrap();
        for mode in [FULL, ValidationMode::Fast] {
            let v = validate(&s, mode);
            assert!(!v.is_homology_subdivision, "{mode:?}");
        }
    }

    #[test]
    fn stellar_and_barycentric_validate() {
        let tri = SimplicialComplex::simplex(&["a", "b", "c"]).unwrap();
        let s = stellar_subdivision(&tri, Face::prefix(2), None).unwrap();
        let v = validate(&s, ValidationMode::Full(FieldSpec::Rationals));
        assert!(v.is_homology_subdivision && v.is_vertex_induced && v.is_flag_subdivision);
        let b = barycentric_subdivision(&["a", "b", "c", "d"]).unwrap();
        let v = validate(&b, FULL);
        assert!(
            v.is_homology_subdivision && v.is_quasi_geometric && v.is_vertex_induced && v.is_flag_subdivision,
            "{v:?}"
        );
        // the restriction to V is a cone over a hollow triangle
        let s = stellar_subdivision(&tri, Face::prefix(3), None).unwrap();
        let v = validate(&s, FULL);
        assert!(v.is_homology_subdivision && v.is_vertex_induced);
        assert!(!v.is_flag_subdivision);
    }

    fn random_stellar_chain() -> impl Strategy<Value = SubdivisionMap> {
        proptest::collection::vec((0usize..64, 0u8..3), 0..4).prop_map(|steps| {
            let tri = SimplicialComplex::simplex(&["a", "b", "c"]).unwrap();
            let mut s = SubdivisionMap::trivial(&tri);
            for (pick, size) in steps {
                let size = size as usize + 1;
                let candidates = s.total().faces_of_size(size).to_vec();
                let f = candidates[pick % candidates.len()];
                let step = stellar_subdivision(s.total(), f, None).unwrap();
                s = SubdivisionMap::compose(&s, &step).unwrap();
            }
            s
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn qg_criterion_matches_literal(s in random_stellar_chain()) {
            prop_assert_eq!(check_quasi_geometric(&s).is_empty(), qg_literal(&s));
            prop_assert_eq!(check_vertex_induced(&s).is_empty(), vi_literal(&s));
            let v = validate(&s, ValidationMode::Fast);
            prop_assert!(v.is_homology_subdivision);
            prop_assert!(!v.is_vertex_induced || v.is_quasi_geometric);
        }
    }
}
