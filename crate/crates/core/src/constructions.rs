//! The cross-polytope map of a flag sphere, the ball-to-sphere extension of
//! a simplex subdivision, and a few small named subdivisions.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::complex::{validate_labels, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::{Face, MAX_GROUND_SET};
use crate::homology::{classify, FieldSpec};
use crate::subdivision::{check_homology_axioms, SubdivisionMap, ValidationMode};

/// A facet `{x_1, .., x_d}` of the source complex with its ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetChoice {
    order: Vec<usize>,
}

impl FacetChoice {
    /// The facet spelled by `names`, ordered as given.
    pub fn from_names<S: AsRef<str>>(k: &SimplicialComplex, names: &[S]) -> Result<Self> {
        let mut order = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref();
            order.push(k.vertex_index(n).ok_or_else(|| Error::UnknownVertex(n.to_string()))?);
        }
        let choice = FacetChoice { order };
        choice.check(k)?;
        Ok(choice)
    }

    /// The first facet of `k` in face order, vertices by index.
    pub fn first(k: &SimplicialComplex) -> Result<Self> {
        let top = (k.dim() + 1) as usize;
        let facet = k
            .faces_of_size(top)
            .first()
            .copied()
            .ok_or_else(|| Error::NotAFacet(Vec::new()))?;
        Ok(FacetChoice {
            order: facet.iter().collect(),
        })
    }

    pub fn facet(&self) -> Face {
        Face::from_indices(self.order.iter().copied())
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    fn check(&self, k: &SimplicialComplex) -> Result<()> {
        let f = self.facet();
        let top = (k.dim() + 1) as usize;
        if f.len() != self.order.len() || f.len() != top || !k.contains(f) {
            return Err(Error::NotAFacet(
                self.order.iter().map(|i| k.labels()[*i].clone()).collect(),
            ));
        }
        Ok(())
    }
}

/// The map `σ(E) = {u_i : x_i ∈ E} ∪ {v_i : E ∪ {x_i} ∉ K}` from a flag
/// complex onto the boundary of the cross-polytope.
///
/// Flagness is always checked. With `verify` set, `k` must also classify
/// as a homology sphere over that field.
pub fn sigma_cross_polytope_map(
    k: &SimplicialComplex,
    choice: &FacetChoice,
    verify: Option<FieldSpec>,
) -> Result<SubdivisionMap> {
    if let Some(w) = k.first_non_flag_witness() {
        return Err(Error::NotFlag(k.sorted_names(w)));
    }
    choice.check(k)?;
    if let Some(field) = verify {
        if !classify(k, field).is_sphere() {
            return Err(Error::NotASphere);
        }
    }
    let d = choice.order.len();
    let base = SimplicialComplex::cross_polytope(d);
    SubdivisionMap::from_fn(k.clone(), base, |e| {
        choice.order.iter().enumerate().fold(Face::EMPTY, |acc, (i, &x)| {
            let acc = if e.contains(x) { acc.with(i) } else { acc };
            if k.contains(e.with(x)) {
                acc
            } else {
                acc.with(d + i)
            }
        })
    })
}

fn fresh_name(stem: String, taken: &HashSet<String>) -> String {
    let mut name = stem;
    while taken.contains(&name) {
        name.push('\'');
    }
    name
}

/// Extends a subdivision `Γ → 2^V` to a subdivision of the cross-polytope
/// boundary on `V` and fresh vertices `U`, as the union of `2^E * Γ_G` over
/// disjoint index sets with `E ⊆ U` and `G ⊆ V`. The map is
/// `σ_0(E ∪ F) = E ∪ σ(F)`.
pub fn ball_to_sphere(s: &SubdivisionMap) -> Result<SubdivisionMap> {
    let v = s.simplex_base()?;
    if let Some(f) = check_homology_axioms(s, ValidationMode::Fast).first() {
        return Err(Error::NotHomologySubdivision(format!("{:?}: {}", f.face, f.reason)));
    }
    let vs: Vec<usize> = v.iter().collect();
    let d = vs.len();
    let gamma = s.total();
    let mut taken: HashSet<String> = gamma.labels().iter().cloned().collect();
    taken.extend(s.base().labels().iter().cloned());
    let mut u_names = Vec::with_capacity(d);
    for i in 1..=d {
        let name = fresh_name(format!("u{i}"), &taken);
        taken.insert(name.clone());
        u_names.push(name);
    }

    let n = gamma.ground_size();
    if n + d > MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge {
            size: n + d,
            limit: MAX_GROUND_SET,
        });
    }
    let total_labels: Arc<[String]> = gamma.labels().iter().cloned().chain(u_names.iter().cloned()).collect();
    let pairs: Vec<(String, String)> = u_names
        .iter()
        .zip(&vs)
        .map(|(u, j)| (u.clone(), s.base().labels()[*j].clone()))
        .collect();
    let base = SimplicialComplex::cross_polytope_on(&pairs)?;
    // old base index -> new base index
    let relabel: HashMap<usize, usize> = vs.iter().enumerate().map(|(i, j)| (*j, d + i)).collect();
    let lift = |c: Face| Face::from_indices(c.iter().map(|j| relabel[&j]));

    let restrictions: Vec<SimplicialComplex> = (0..1usize << d)
        .map(|mask| {
            let g = Face::from_indices((0..d).filter(|i| mask & (1 << i) != 0).map(|i| vs[i]));
            s.restricted_total(g)
        })
        .collect();
    let mut faces: HashSet<Face> = HashSet::new();
    for i_mask in 0..1usize << d {
        let e = Face::from_indices((0..d).filter(|i| i_mask & (1 << i) != 0).map(|i| n + i));
        let rest = ((1usize << d) - 1) & !i_mask;
        // every J ⊆ complement of I, literally
        let mut j_mask = rest;
        loop {
            for &f in restrictions[j_mask].faces() {
                for sub in e.subsets() {
                    faces.insert(sub.union(f));
                }
            }
            if j_mask == 0 {
                break;
            }
            j_mask = (j_mask - 1) & rest;
        }
    }
    let total = SimplicialComplex::from_closed(total_labels, faces.into_iter().collect());
    validate_labels(total.labels(), MAX_GROUND_SET)?;
    let low = Face::prefix(n);
    let carrier = total
        .faces()
        .iter()
        .map(|&w| {
            let f = w.intersection(low);
            let e = Face::from_bits(w.bits() >> n);
            e.union(lift(s.carrier(f).expect("Γ part of a face of Δ")))
        })
        .collect();
    SubdivisionMap::from_carriers(total, base, carrier)
}

/// Union of the closed stars of the vertices of `f`, with the union of
/// their open stars.
pub fn vertex_star_union(k: &SimplicialComplex, f: Face) -> Result<(SimplicialComplex, Vec<Face>)> {
    if !k.contains(f) {
        return Err(Error::NotAFace(k.names(f)));
    }
    let open: Vec<Face> = k.faces().iter().copied().filter(|g| !g.is_disjoint(f)).collect();
    let closed = SimplicialComplex::from_generators(k.label_table().clone(), open.iter().copied());
    Ok((closed, open))
}

pub const FIXTURE_NAMES: [&str; 4] = ["pushed-facet", "negative-xi", "flag-octahedral", "pushed-triangle"];

fn named(k: &SimplicialComplex, names: &[&str]) -> Face {
    k.face_by_names(names).expect("fixture names")
}

/// Pushes `2^V ∪ 2^{F ∪ {e}}` into `2^V`: `F` goes to the interior of `V` and
/// `e` to the interior of `F`.
fn pushed(v_names: &[&str], f_names: &[&str], e_name: &str) -> Result<SubdivisionMap> {
    let labels: Vec<&str> = v_names.iter().copied().chain([e_name]).collect();
    let fe: Vec<&str> = f_names.iter().copied().chain([e_name]).collect();
    let total = SimplicialComplex::from_facets(&labels, &[v_names.to_vec(), fe])?;
    let base = SimplicialComplex::simplex(v_names)?;
    let f = named(&base, f_names);
    let v = named(&base, v_names);
    let e = total.vertex_index(e_name).expect("fixture names");
    SubdivisionMap::from_fn(total, base, |x| {
        if f.is_subset(x) {
            v
        } else if x.contains(e) {
            f
        } else {
            x
        }
    })
}

fn negative_xi() -> Result<SubdivisionMap> {
    let labels = ["a", "b", "c", "d", "e", "v"];
    let mut gens = vec![vec!["a", "b", "c", "d"]];
    for skip in ["b", "c", "d", "e"] {
        let mut g: Vec<&str> = ["b", "c", "d", "e"].into_iter().filter(|x| *x != skip).collect();
        g.push("v");
        gens.push(g);
    }
    let total = SimplicialComplex::from_facets(&labels, &gens)?;
    let base = SimplicialComplex::simplex(&["a", "b", "c", "d"])?;
    let f = named(&base, &["b", "c", "d"]);
    let v = named(&base, &["a", "b", "c", "d"]);
    let (e, apex) = (named(&total, &["e"]), named(&total, &["v"]));
    SubdivisionMap::from_fn(total, base, |x| {
        if !x.is_disjoint(apex) || f.is_subset(x) {
            v
        } else if !x.is_disjoint(e) {
            f
        } else {
            x
        }
    })
}

/// `2^V` together with the cone from `v` over the boundary of the
/// octahedron on the pairs `(b, b')`, `(c, c')`, `(d, d')`. The octahedron
/// minus the triangle `bcd` subdivides `2^F` with interior vertices
/// `b', c', d'`.
fn flag_octahedral_total() -> Result<SimplicialComplex> {
    let labels = ["a", "b", "c", "d", "b'", "c'", "d'", "v"];
    let mut gens = vec![vec!["a", "b", "c", "d"]];
    for x in ["b", "b'"] {
        for y in ["c", "c'"] {
            for z in ["d", "d'"] {
                gens.push(vec![x, y, z, "v"]);
            }
        }
    }
    SimplicialComplex::from_facets(&labels, &gens)
}

fn flag_octahedral_map() -> Result<SubdivisionMap> {
    let total = flag_octahedral_total()?;
    let base = SimplicialComplex::simplex(&["a", "b", "c", "d"])?;
    let f = named(&base, &["b", "c", "d"]);
    let v = named(&base, &["a", "b", "c", "d"]);
    let primed = named(&total, &["b'", "c'", "d'"]);
    let apex = named(&total, &["v"]);
    SubdivisionMap::from_fn(total, base, |x| {
        if !x.is_disjoint(apex) || f.is_subset(x) {
            v
        } else if !x.is_disjoint(primed) {
            f
        } else {
            x
        }
    })
}

/// Named subdivisions of a simplex used as reference cases.
pub fn fixture(name: &str) -> Result<SubdivisionMap> {
    match name {
        "pushed-facet" => pushed(&["a", "b", "c", "d"], &["b", "c", "d"], "e"),
        "negative-xi" => negative_xi(),
        "flag-octahedral" => flag_octahedral_map(),
        "pushed-triangle" => pushed(&["v1", "v2", "v3"], &["v2", "v3"], "v4"),
        other => Err(Error::UnknownFixture(other.to_string())),
    }
}
