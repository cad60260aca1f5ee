//! Subdivision maps `σ: Δ′ → Δ` with an explicit carrier on every face.

mod local;
mod stellar;
mod validate;

use std::collections::HashSet;
use std::fmt;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;

pub use local::{
    check_edge_recursion, check_locality, h_decomposition, interior_stats, local_gamma, local_h, relative_local_h,
    Decomposition, GammaForm, InteriorStats,
};
pub use stellar::{
    barycentric_subdivision, edge_subdivision, join_subdivision, link_subdivision, stellar_subdivision,
    stellar_vertex_name,
};
pub use validate::{
    check_homology_axioms, check_quasi_geometric, check_vertex_induced, is_flag_subdivision, validate,
    SubdivisionVerdict, ValidationFailure, ValidationMode,
};

/// A carrier map from the faces of `total` onto the faces of `base`.
///
/// Carriers are stored per face of `total`, aligned with `total.faces()`,
/// as faces in `base`'s indexing. Construction checks that `∅ ↦ ∅`, that
/// every carrier is a face of `base`, that carriers are monotone and never
/// drop dimension, and that every face of `base` is hit.
#[derive(Clone)]
pub struct SubdivisionMap {
    total: SimplicialComplex,
    base: SimplicialComplex,
    carrier: Vec<Face>,
}

impl SubdivisionMap {
    pub fn from_fn(total: SimplicialComplex, base: SimplicialComplex, sigma: impl Fn(Face) -> Face) -> Result<Self> {
        let carrier = total.faces().iter().map(|&e| sigma(e)).collect();
        Self::from_carriers(total, base, carrier)
    }

    pub fn from_carriers(total: SimplicialComplex, base: SimplicialComplex, carrier: Vec<Face>) -> Result<Self> {
        if carrier.len() != total.num_faces() {
            let missing = total.faces()[carrier.len().min(total.num_faces() - 1)];
            return Err(Error::MissingCarrier(total.names(missing)));
        }
        if carrier[0] != Face::EMPTY {
            return Err(Error::EmptyFaceCarrier);
        }
        let mut hit: HashSet<Face> = HashSet::with_capacity(base.num_faces());
        for (i, &e) in total.faces().iter().enumerate() {
            let c = carrier[i];
            if !base.contains(c) {
                return Err(Error::CarrierNotInBase {
                    face: total.names(e),
                    carrier: base.names(c),
                });
            }
            if c.len() < e.len() {
                return Err(Error::DimensionDrop(total.names(e)));
            }
            for sub in e.facets_of_boundary() {
                let j = total.index_of(sub).expect("total complex is closed");
                if !carrier[j].is_subset(c) {
                    return Err(Error::NotMonotone {
                        face: total.names(e),
                        sub: total.names(sub),
                    });
                }
            }
            hit.insert(c);
        }
        if let Some(f) = base.faces().iter().find(|f| !hit.contains(f)) {
            return Err(Error::NotSurjective(base.names(*f)));
        }
        Ok(SubdivisionMap { total, base, carrier })
    }

    /// Assembles a map whose invariants hold by construction.
    pub(crate) fn from_parts_unchecked(total: SimplicialComplex, base: SimplicialComplex, carrier: Vec<Face>) -> Self {
        debug_assert_eq!(carrier.len(), total.num_faces());
        SubdivisionMap { total, base, carrier }
    }

    /// The identity map of `k` onto itself.
    pub fn trivial(k: &SimplicialComplex) -> Self {
        let carrier = k.faces().to_vec();
        SubdivisionMap {
            total: k.clone(),
            base: k.clone(),
            carrier,
        }
    }

    pub fn total(&self) -> &SimplicialComplex {
        &self.total
    }

    pub fn base(&self) -> &SimplicialComplex {
        &self.base
    }

    /// Carriers aligned with `total().faces()`.
    pub fn carriers(&self) -> &[Face] {
        &self.carrier
    }

    pub fn carrier(&self, e: Face) -> Option<Face> {
        self.total.index_of(e).map(|i| self.carrier[i])
    }

    /// Union of the vertex carriers of `e`.
    pub fn vertex_carrier_union(&self, e: Face) -> Face {
        e.iter()
            .map(|v| self.carrier(Face::singleton(v)).expect("vertex of a face"))
            .fold(Face::EMPTY, Face::union)
    }

    /// `V` when the base is the full simplex `2^V`.
    pub fn simplex_base(&self) -> Result<Face> {
        match self.base.facets() {
            [v] => Ok(*v),
            _ => Err(Error::BaseNotSimplex),
        }
    }

    /// `Δ′_F = σ^{-1}(2^F)` as a complex.
    pub fn restricted_total(&self, f: Face) -> SimplicialComplex {
        let faces = self
            .total
            .faces()
            .iter()
            .zip(&self.carrier)
            .filter(|(_, c)| c.is_subset(f))
            .map(|(e, _)| *e)
            .collect();
        SimplicialComplex::from_closed(self.total.label_table().clone(), faces)
    }

    /// Faces carried exactly onto `f`.
    pub fn preimage(&self, f: Face) -> Vec<Face> {
        self.total
            .faces()
            .iter()
            .zip(&self.carrier)
            .filter(|(_, c)| **c == f)
            .map(|(e, _)| *e)
            .collect()
    }

    /// The restriction `Δ′_F → 2^F`.
    pub fn restriction(&self, f: Face) -> Result<Self> {
        if !self.base.contains(f) {
            return Err(Error::NotAFace(self.base.names(f)));
        }
        let total = self.restricted_total(f);
        let carrier = self.carrier.iter().copied().filter(|c| c.is_subset(f)).collect();
        let base = SimplicialComplex::simplex_on(self.base.label_table().clone(), f);
        Ok(Self::from_parts_unchecked(total, base, carrier))
    }

    /// `outer ∘ inner`, where `inner` subdivides `outer.total()`.
    pub fn compose(outer: &SubdivisionMap, inner: &SubdivisionMap) -> Result<Self> {
        if inner.base != outer.total {
            return Err(Error::BaseMismatch);
        }
        let mut carrier = Vec::with_capacity(inner.carrier.len());
        for &c in &inner.carrier {
            let c = inner.base.translate_face(c, &outer.total).ok_or(Error::BaseMismatch)?;
            carrier.push(outer.carrier(c).ok_or(Error::BaseMismatch)?);
        }
        Self::from_carriers(inner.total.clone(), outer.base.clone(), carrier)
    }

    /// Carrier entries as `(face names, carrier names)` in face order.
    pub fn named_carriers(&self) -> Vec<(Vec<String>, Vec<String>)> {
        self.total
            .faces()
            .iter()
            .zip(&self.carrier)
            .map(|(e, c)| (self.total.sorted_names(*e), self.base.sorted_names(*c)))
            .collect()
    }
}

impl PartialEq for SubdivisionMap {
    fn eq(&self, other: &Self) -> bool {
        if self.total != other.total || self.base != other.base {
            return false;
        }
        let mut a = self.named_carriers();
        let mut b = other.named_carriers();
        a.sort();
        b.sort();
        a == b
    }
}

impl fmt::Debug for SubdivisionMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SubdivisionMap")
            .field("total", &self.total)
            .field("base", &self.base)
            .finish_non_exhaustive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> SimplicialComplex {
        SimplicialComplex::simplex(&["a", "b", "c"]).unwrap()
    }

    #[test]
    fn trivial_restrictions_are_trivial() {
        let s = SubdivisionMap::trivial(&triangle());
        let f = Face::from_indices([0, 2]);
        let r = s.restriction(f).unwrap();
        assert_eq!(
            r,
            SubdivisionMap::trivial(&SimplicialComplex::simplex(&["a", "c"]).unwrap())
        );
        let e = s.restriction(Face::EMPTY).unwrap();
        assert_eq!(e.total().faces(), &[Face::EMPTY]);
        assert!(matches!(s.restriction(Face::singleton(5)), Err(Error::NotAFace(_))));
    }

    #[test]
    fn restriction_keeps_carriers() {
        let s = stellar_subdivision(&triangle(), Face::prefix(3), None).unwrap();
        let f = Face::from_indices([0, 1]);
        let r = s.restriction(f).unwrap();
        for &e in r.total().faces() {
            assert_eq!(r.carrier(e), s.carrier(e));
        }
    }

    #[test]
    fn constructor_rejects_bad_carriers() {
        let k = triangle();
        // collapsing an edge onto a vertex drops dimension
        let err = SubdivisionMap::from_fn(k.clone(), k.clone(), |e| {
            if e.len() == 2 && e.contains(0) && e.contains(1) {
                Face::singleton(0)
            } else {
                e
            }
        });
        assert!(matches!(err, Err(Error::DimensionDrop(_))));
        // every vertex to the whole triangle, edges to themselves: not monotone
        let err = SubdivisionMap::from_fn(k.clone(), k.clone(), |e| if e.len() == 1 { Face::prefix(3) } else { e });
        assert!(matches!(err, Err(Error::NotMonotone { .. })));
        // all faces to the top face: never hits the vertices
        let err = SubdivisionMap::from_fn(k.clone(), k.clone(), |e| if e.is_empty() { e } else { Face::prefix(3) });
        assert!(matches!(err, Err(Error::NotSurjective(_))));
        let err = SubdivisionMap::from_fn(k.clone(), k.clone(), |_| Face::prefix(3));
        assert_eq!(err.unwrap_err(), Error::EmptyFaceCarrier);
        let err = SubdivisionMap::from_fn(k.clone(), k.clone(), |e| e.with(7));
        assert!(matches!(
            err,
            Err(Error::EmptyFaceCarrier | Error::CarrierNotInBase { .. })
        ));
    }

    #[test]
    fn compose_with_trivial_is_identity() {
        let s = stellar_subdivision(&triangle(), Face::prefix(3), None).unwrap();
        let left = SubdivisionMap::compose(&SubdivisionMap::trivial(s.base()), &s).unwrap();
        let right = SubdivisionMap::compose(&s, &SubdivisionMap::trivial(s.total())).unwrap();
        assert_eq!(left, s);
        assert_eq!(right, s);
        assert_eq!(SubdivisionMap::compose(&s, &s).unwrap_err(), Error::BaseMismatch);
    }
}
