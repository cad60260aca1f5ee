//! Stellar, edge, barycentric, join and link subdivisions.

use std::sync::Arc;

use super::SubdivisionMap;
use crate::complex::{shift_face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::{Face, MAX_GROUND_SET};

/// Default name of the vertex created by subdividing `f`: `b{x;y;z}` over
/// the sorted member names.
pub fn stellar_vertex_name(k: &SimplicialComplex, f: Face) -> String {
    format!("b{{{}}}", k.sorted_names(f).join(";"))
}

/// Stellar subdivision of `k` on the face `f`, mapped onto `k`.
///
/// Faces not containing `f` are kept and carried to themselves; the closed
/// star of `f` is replaced by the cone from the new vertex over
/// `∂(2^f) * link(f)`, with `σ(E) = (E ∖ {v}) ∪ f` on the cone faces.
pub fn stellar_subdivision(k: &SimplicialComplex, f: Face, name: Option<&str>) -> Result<SubdivisionMap> {
    if f.is_empty() {
        return Err(Error::EmptyStellarFace);
    }
    if !k.contains(f) {
        return Err(Error::NotAFace(k.names(f)));
    }
    let name = name.map_or_else(|| stellar_vertex_name(k, f), str::to_string);
    if k.labels().contains(&name) {
        return Err(Error::VertexCollision(name));
    }
    let n = k.ground_size();
    if n + 1 > MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge {
            size: n + 1,
            limit: MAX_GROUND_SET,
        });
    }
    let labels: Arc<[String]> = k.labels().iter().cloned().chain([name]).collect();
    crate::complex::validate_labels(&labels, MAX_GROUND_SET)?;
    let apex = Face::singleton(n);

    let mut faces: Vec<Face> = k.faces().iter().copied().filter(|g| !f.is_subset(*g)).collect();
    let link: Vec<Face> = k
        .faces()
        .iter()
        .filter(|g| f.is_subset(**g))
        .map(|g| g.difference(f))
        .collect();
    for g in f.subsets().filter(|g| *g != f) {
        for h in &link {
            faces.push(g.union(*h).union(apex));
        }
    }
    let total = SimplicialComplex::from_closed(labels, faces);
    let carrier = total
        .faces()
        .iter()
        .map(|e| if e.contains(n) { e.without(n).union(f) } else { *e })
        .collect();
    Ok(SubdivisionMap::from_parts_unchecked(total, k.clone(), carrier))
}

/// Stellar subdivision on an edge.
pub fn edge_subdivision(k: &SimplicialComplex, e: Face, name: Option<&str>) -> Result<SubdivisionMap> {
    if e.len() != 2 {
        return Err(Error::NotAnEdge(k.names(e)));
    }
    stellar_subdivision(k, e, name)
}

/// First barycentric subdivision of the simplex on `names`, built by
/// stellar subdivisions on every face with at least two vertices, largest
/// faces first.
pub fn barycentric_subdivision<S: AsRef<str>>(names: &[S]) -> Result<SubdivisionMap> {
    let simplex = SimplicialComplex::simplex(names)?;
    let mut s = SubdivisionMap::trivial(&simplex);
    let mut targets: Vec<Face> = simplex.faces().iter().copied().filter(|f| f.len() >= 2).collect();
    targets.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    for f in targets {
        // the original vertices keep their indices in every intermediate total
        let step = stellar_subdivision(s.total(), f, Some(&stellar_vertex_name(&simplex, f)))?;
        s = SubdivisionMap::compose(&s, &step)?;
    }
    Ok(s)
}

/// Subdivision of `base1 * base2` with `σ(E1 ∪ E2) = σ1(E1) ∪ σ2(E2)`.
pub fn join_subdivision(s1: &SubdivisionMap, s2: &SubdivisionMap) -> Result<SubdivisionMap> {
    let total = s1.total().join(s2.total())?;
    let base = s1.base().join(s2.base())?;
    let t_off = s1.total().ground_size();
    let b_off = s1.base().ground_size();
    let low = Face::prefix(t_off);
    let carrier = total
        .faces()
        .iter()
        .map(|&e| {
            let c1 = s1.carrier(e.intersection(low)).expect("join factor face");
            let c2 = s2
                .carrier(Face::from_bits(e.bits() >> t_off))
                .expect("join factor face");
            c1.union(shift_face(c2, b_off))
        })
        .collect();
    SubdivisionMap::from_carriers(total, base, carrier)
}

/// The induced subdivision `σ_F(E) = σ(E ∪ F) ∖ F` of `link_Δ(F)`, for a
/// face `f` of the total complex carried onto itself.
pub fn link_subdivision(s: &SubdivisionMap, f: Face) -> Result<SubdivisionMap> {
    let total_full = s.total();
    if !total_full.contains(f) {
        return Err(Error::NotAFace(total_full.names(f)));
    }
    let fb = total_full
        .translate_face(f, s.base())
        .filter(|fb| s.base().contains(*fb))
        .ok_or_else(|| Error::CarrierMismatch(total_full.names(f)))?;
    if s.carrier(f) != Some(fb) {
        return Err(Error::CarrierMismatch(total_full.names(f)));
    }
    let total = total_full.link_unchecked(f);
    let base = s.base().link_unchecked(fb);
    let carrier = total
        .faces()
        .iter()
        .map(|e| s.carrier(e.union(f)).expect("link face").difference(fb))
        .collect();
    SubdivisionMap::from_carriers(total, base, carrier)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{gamma_vector, h_polynomial};
    use crate::homology::{classify, FieldSpec};
    use crate::poly::IntPolynomial;
    use crate::subdivision::{validate, ValidationMode};
    use std::collections::BTreeSet;

    fn cycle(n: usize) -> SimplicialComplex {
        let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let edges: Vec<Vec<String>> = (0..n)
            .map(|i| vec![names[i].clone(), names[(i + 1) % n].clone()])
            .collect();
        SimplicialComplex::from_facets(&names, &edges).unwrap()
    }

    #[test]
    fn edge_subdivision_of_cycle() {
        let c4 = cycle(4);
        let e = c4.face_by_names(&["x0", "x1"]).unwrap();
        let s = edge_subdivision(&c4, e, Some("m")).unwrap();
        assert_eq!(s.total(), &{
            let names = ["x0", "m", "x1", "x2", "x3"];
            let edges: Vec<Vec<&str>> = (0..5).map(|i| vec![names[i], names[(i + 1) % 5]]).collect();
            SimplicialComplex::from_facets(&names, &edges).unwrap()
        });
        assert!(s.total().is_flag());
        assert_eq!(s.carrier(s.total().face_by_names(&["m"]).unwrap()), Some(e));
        assert!(matches!(
            edge_subdivision(&c4, Face::prefix(1), None),
            Err(Error::NotAnEdge(_))
        ));
        assert!(matches!(
            stellar_subdivision(&c4, e, Some("x2")),
            Err(Error::VertexCollision(_))
        ));
        assert!(matches!(
            stellar_subdivision(&c4, Face::from_indices([0, 2]), None),
            Err(Error::NotAFace(_))
        ));
    }

    #[test]
    fn stellar_on_octahedron_edge() {
        let oct = SimplicialComplex::cross_polytope(3);
        let e = oct.face_by_names(&["u1", "u2"]).unwrap();
        let s = stellar_subdivision(&oct, e, None).unwrap();
        assert_eq!(s.total().num_vertices(), 7);
        assert!(s.total().is_flag());
        assert_eq!(h_polynomial(s.total()), IntPolynomial::from_coeffs([1, 4, 4, 1]));
        assert_eq!(
            gamma_vector(s.total()).unwrap().as_polynomial(),
            IntPolynomial::from_coeffs([1, 1])
        );
        assert!(classify(s.total(), FieldSpec::Gf2).is_sphere());
        assert!(s.total().labels().contains(&"b{u1;u2}".to_string()));
    }

    /// Chain-complex description: faces are chains of nonempty subsets of V
    /// ordered by inclusion, carried to their largest member.
    #[test]
    fn barycentric_matches_chain_oracle() {
        for n in 1..=4 {
            let names: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
            let s = barycentric_subdivision(&names).unwrap();
            let simplex = s.base().clone();
            let vertex_name = |f: Face| {
                if f.len() == 1 {
                    simplex.names(f)[0].clone()
                } else {
                    stellar_vertex_name(&simplex, f)
                }
            };
            let subsets: Vec<Face> = Face::prefix(n).subsets().filter(|f| !f.is_empty()).collect();
            let mut chains: BTreeSet<(BTreeSet<String>, BTreeSet<String>)> = BTreeSet::new();
            for mask in 1u32..(1 << subsets.len()) {
                let mut members: Vec<Face> = (0..subsets.len())
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| subsets[i])
                    .collect();
                members.sort_by_key(|f| f.len());
                if members.windows(2).all(|w| w[0].is_subset(w[1]) && w[0] != w[1]) {
                    let top = *members.last().unwrap();
                    chains.insert((
                        members.iter().map(|f| vertex_name(*f)).collect(),
                        simplex.names(top).into_iter().collect(),
                    ));
                }
            }
            let got: BTreeSet<(BTreeSet<String>, BTreeSet<String>)> = s
                .named_carriers()
                .into_iter()
                .filter(|(e, _)| !e.is_empty())
                .map(|(e, c)| (e.into_iter().collect(), c.into_iter().collect()))
                .collect();
            assert_eq!(got, chains, "n = {n}");
            let v = validate(&s, ValidationMode::Fast);
            assert!(v.is_vertex_induced && v.is_flag_subdivision);
        }
    }

    #[test]
    fn join_and_link() {
        let a = barycentric_subdivision(&["a", "b"]).unwrap();
        let b = barycentric_subdivision(&["c", "d", "e"]).unwrap();
        let j = join_subdivision(&a, &b).unwrap();
        let v = validate(&j, ValidationMode::Full(FieldSpec::Gf2));
        assert!(v.is_homology_subdivision && v.is_vertex_induced && v.is_flag_subdivision);
        assert!(matches!(join_subdivision(&a, &a), Err(Error::GroundSetOverlap(_))));

        // the link of an end of the split edge is the midpoint joined with
        // the subdivided triangle, over the other end joined with the triangle
        let l = link_subdivision(&j, j.total().face_by_names(&["a"]).unwrap()).unwrap();
        assert_eq!(l.base(), &SimplicialComplex::simplex(&["b", "c", "d", "e"]).unwrap());
        assert_eq!(l.total().num_vertices(), 8);
        let v = validate(&l, ValidationMode::Full(FieldSpec::Gf2));
        assert!(v.is_homology_subdivision && v.is_vertex_induced && v.is_flag_subdivision);
        assert_eq!(link_subdivision(&j, Face::EMPTY).unwrap(), j);
        let mid = j.total().face_by_names(&["b{a;b}"]).unwrap();
        assert!(matches!(link_subdivision(&j, mid), Err(Error::CarrierMismatch(_))));
    }

    #[test]
    fn link_outside_the_star_is_trivial() {
        let oct = SimplicialComplex::cross_polytope(3);
        let e = oct.face_by_names(&["u1", "u2"]).unwrap();
        let s = stellar_subdivision(&oct, e, None).unwrap();
        let v3 = s.total().face_by_names(&["u3"]).unwrap();
        // u3 lies in the star of u1u2, so its link is subdivided
        let l = link_subdivision(&s, v3).unwrap();
        assert_eq!(l.total().num_vertices(), 5);
        // v1 is outside the star of u1u2
        let v1 = s.total().face_by_names(&["v1"]).unwrap();
        let l = link_subdivision(&s, v1).unwrap();
        let base_link = oct.link(oct.face_by_names(&["v1"]).unwrap()).unwrap();
        assert_eq!(l, SubdivisionMap::trivial(&base_link));
    }
}
