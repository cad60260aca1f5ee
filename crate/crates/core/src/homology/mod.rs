//! Reduced simplicial homology over a field, and homology sphere / ball
//! recognition through links.

mod rank;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;

/// Coefficient field for homology computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum FieldSpec {
    #[default]
    Gf2,
    /// GF(p) for an odd prime `p`.
    Gf(u32),
    Rationals,
}

impl FieldSpec {
    pub fn gf(p: u32) -> Result<Self> {
        let prime = p >= 2 && (2..).take_while(|i| i * i <= p).all(|i| p % i != 0);
        if !prime {
            return Err(Error::NotPrime(p));
        }
        // keeps the field arithmetic within u64
        if p > (1 << 31) {
            return Err(Error::UnknownField(format!("gf{p}")));
        }
        Ok(if p == 2 { FieldSpec::Gf2 } else { FieldSpec::Gf(p) })
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "gf2" => Ok(FieldSpec::Gf2),
            "q" | "qq" | "rationals" => Ok(FieldSpec::Rationals),
            _ => match lower.strip_prefix("gf").map(str::parse::<u32>) {
                Some(Ok(p)) => FieldSpec::gf(p),
                _ => Err(Error::UnknownField(s.to_string())),
            },
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Gf2 => write!(f, "gf2"),
            FieldSpec::Gf(p) => write!(f, "gf{p}"),
            FieldSpec::Rationals => write!(f, "q"),
        }
    }
}

/// Reduced Betti numbers `β̃_{-1}, β̃_0, .., β̃_{dim}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BettiVector {
    values: Vec<usize>,
}

impl BettiVector {
    /// `β̃_i`, zero outside the stored range.
    pub fn get(&self, i: isize) -> usize {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.values.get(k).copied())
            .unwrap_or(0)
    }

    /// Values from index -1 upwards.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Homology of a sphere of dimension `dim`: one copy of the field in
    /// degree `dim`, nothing elsewhere.
    pub fn is_sphere_like(&self, dim: isize) -> bool {
        self.values
            .iter()
            .enumerate()
            .all(|(k, &b)| b == usize::from(k as isize - 1 == dim))
            && self.get(dim) == 1
    }

    pub fn is_acyclic(&self) -> bool {
        self.values.iter().all(|b| *b == 0)
    }

    /// As a map from degree to rank, the JSON shape used by the CLI.
    pub fn to_map(&self) -> BTreeMap<String, usize> {
        self.values
            .iter()
            .enumerate()
            .map(|(k, b)| ((k as isize - 1).to_string(), *b))
            .collect()
    }
}

fn boundary_columns(k: &SimplicialComplex, size: usize) -> (Vec<rank::Column>, usize) {
    let rows = k.faces_of_size(size - 1);
    let row_start = k.index_of(rows[0]).expect("face present");
    let cols = k
        .faces_of_size(size)
        .iter()
        .map(|&g| {
            g.iter()
                .enumerate()
                .map(|(j, v)| {
                    let r = k.index_of(g.without(v)).expect("complex is closed") - row_start;
                    (r, if j % 2 == 0 { 1 } else { -1 })
                })
                .collect()
        })
        .collect();
    (cols, rows.len())
}

/// Reduced Betti numbers from exact ranks of the augmented boundary maps.
pub fn reduced_betti(k: &SimplicialComplex, field: FieldSpec) -> BettiVector {
    let top = (k.dim() + 1) as usize;
    // ranks[s] = rank of the boundary map from faces of size s to size s-1
    let mut ranks = vec![0usize; top + 2];
    for (size, slot) in ranks.iter_mut().enumerate().take(top + 1).skip(1) {
        let (cols, nrows) = boundary_columns(k, size);
        *slot = match field {
            FieldSpec::Gf2 => rank::rank_gf2(&cols, nrows),
            FieldSpec::Gf(p) => rank::rank_gfp(&cols, nrows, p),
            FieldSpec::Rationals => rank::rank_rational(&cols, nrows),
        };
    }
    let values = (0..=top)
        .map(|size| k.faces_of_size(size).len() - ranks[size] - ranks[size + 1])
        .collect();
    BettiVector { values }
}

/// Homological type of a complex.
#[derive(Clone, PartialEq, Eq)]
pub enum Verdict {
    Sphere { dim: isize },
    Ball { dim: isize, boundary: SimplicialComplex },
    Other,
}

impl fmt::Debug for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Sphere { dim } => write!(f, "Sphere({dim})"),
            Verdict::Ball { dim, boundary } => write!(f, "Ball({dim}, ∂ = {boundary:?})"),
            Verdict::Other => write!(f, "Other"),
        }
    }
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Sphere { .. } => "sphere",
            Verdict::Ball { .. } => "ball",
            Verdict::Other => "other",
        }
    }
}

#[derive(Debug, Clone)]
pub struct HomologyClass {
    pub verdict: Verdict,
    /// Reduced Betti numbers of the complex itself.
    pub betti: BettiVector,
    /// Link Betti numbers per face; filled by [`classify_with_evidence`].
    pub evidence: BTreeMap<Face, BettiVector>,
}

impl HomologyClass {
    pub fn is_sphere(&self) -> bool {
        matches!(self.verdict, Verdict::Sphere { .. })
    }

    pub fn is_ball(&self) -> bool {
        matches!(self.verdict, Verdict::Ball { .. })
    }

    pub fn boundary(&self) -> Option<&SimplicialComplex> {
        match &self.verdict {
            Verdict::Ball { boundary, .. } => Some(boundary),
            _ => None,
        }
    }

    /// Interior faces: everything for a sphere, the complement of the
    /// boundary for a ball, nothing otherwise.
    pub fn interior(&self, k: &SimplicialComplex) -> Option<Vec<Face>> {
        match &self.verdict {
            Verdict::Sphere { .. } => Some(k.faces().to_vec()),
            Verdict::Ball { boundary, .. } => {
                Some(k.faces().iter().copied().filter(|f| !boundary.contains(*f)).collect())
            }
            Verdict::Other => None,
        }
    }
}

/// Closure of the codimension-one faces lying in exactly one facet.
///
/// Returns `None` when no such face exists.
pub fn unique_facet_boundary(k: &SimplicialComplex) -> Option<SimplicialComplex> {
    let top = (k.dim() + 1) as usize;
    if top == 0 {
        return None;
    }
    let mut incidence: HashMap<Face, usize> = HashMap::new();
    for f in k.faces_of_size(top) {
        for r in f.facets_of_boundary() {
            *incidence.entry(r).or_default() += 1;
        }
    }
    let ridges: Vec<Face> = k
        .faces_of_size(top - 1)
        .iter()
        .copied()
        .filter(|r| incidence.get(r) == Some(&1))
        .collect();
    if ridges.is_empty() {
        return None;
    }
    Some(SimplicialComplex::from_generators(k.label_table().clone(), ridges))
}

fn link_bettis(k: &SimplicialComplex, field: FieldSpec) -> Vec<BettiVector> {
    k.faces()
        .par_iter()
        .map(|&f| reduced_betti(&k.link_unchecked(f), field))
        .collect()
}

fn sphere_condition(k: &SimplicialComplex, bettis: &[BettiVector]) -> bool {
    let d = k.dim();
    k.is_pure()
        && k.faces()
            .iter()
            .zip(bettis)
            .all(|(f, b)| b.is_sphere_like(d - f.len() as isize))
}

fn classify_inner(k: &SimplicialComplex, field: FieldSpec, keep_evidence: bool) -> HomologyClass {
    let bettis = link_bettis(k, field);
    let betti = bettis[0].clone();
    let evidence = if keep_evidence {
        k.faces().iter().copied().zip(bettis.iter().cloned()).collect()
    } else {
        BTreeMap::new()
    };
    let d = k.dim();
    let verdict = if sphere_condition(k, &bettis) {
        Verdict::Sphere { dim: d }
    } else if let Some(boundary) = k.is_pure().then(|| unique_facet_boundary(k)).flatten() {
        let boundary_ok = boundary.dim() == d - 1
            && matches!(classify_inner(&boundary, field, false).verdict, Verdict::Sphere { .. });
        let links_ok = boundary_ok
            && k.faces().iter().zip(&bettis).all(|(f, b)| {
                if boundary.contains(*f) {
                    b.is_acyclic()
                } else {
                    b.is_sphere_like(d - f.len() as isize)
                }
            });
        if links_ok {
            Verdict::Ball { dim: d, boundary }
        } else {
            Verdict::Other
        }
    } else {
        Verdict::Other
    };
    HomologyClass {
        verdict,
        betti,
        evidence,
    }
}

/// Decides whether `k` is a homology sphere, a homology ball (with its
/// boundary), or neither, by checking the reduced homology of every link.
pub fn classify(k: &SimplicialComplex, field: FieldSpec) -> HomologyClass {
    classify_inner(k, field, false)
}

pub fn classify_with_evidence(k: &SimplicialComplex, field: FieldSpec) -> HomologyClass {
    classify_inner(k, field, true)
}

/// Faces of `k` outside `interior`; a subcomplex whenever `interior` is
/// upward closed in `k`.
pub fn complement_of(k: &SimplicialComplex, interior: &[Face]) -> SimplicialComplex {
    let drop: HashSet<Face> = interior.iter().copied().collect();
    SimplicialComplex::from_generators(
        k.label_table().clone(),
        k.faces().iter().copied().filter(|f| !drop.contains(f)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{h_polynomial, interior_h_polynomial};
    use std::sync::Arc;

    fn two_points() -> SimplicialComplex {
        SimplicialComplex::from_facets(&["a", "b"], &[vec!["a"], vec!["b"]]).unwrap()
    }

    #[test]
    fn field_parsing() {
        assert_eq!("gf2".parse::<FieldSpec>().unwrap(), FieldSpec::Gf2);
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("gf7".parse::<FieldSpec>().unwrap(), FieldSpec::Gf(7));
        assert_eq!("gf9".parse::<FieldSpec>(), Err(Error::NotPrime(9)));
        assert!("reals".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn betti_examples() {
        for field in [FieldSpec::Gf2, FieldSpec::Gf(3), FieldSpec::Rationals] {
            let oct = SimplicialComplex::cross_polytope(3);
            assert_eq!(reduced_betti(&oct, field).values(), &[0, 0, 0, 1]);
            assert_eq!(reduced_betti(&two_points(), field).values(), &[0, 1]);
            let cone = oct.cone("apex").unwrap();
            assert!(reduced_betti(&cone, field).is_acyclic());
            let empty = SimplicialComplex::empty(Arc::from(Vec::<String>::new()));
            assert_eq!(reduced_betti(&empty, field).values(), &[1]);
        }
    }

    /// Betti numbers from boundary-matrix ranks computed independently by
    /// dense GF(2) row reduction over the face list.
    #[test]
    fn betti_rank_oracle_on_octahedron() {
        let oct = SimplicialComplex::cross_polytope(3);
        let faces = oct.faces();
        let mut ranks = [0usize; 5];
        #[allow(clippy::needless_range_loop)]
        for s in 1..=3 {
            let rows: Vec<Face> = faces.iter().copied().filter(|f| f.len() == s - 1).collect();
            let cols: Vec<Face> = faces.iter().copied().filter(|f| f.len() == s).collect();
            let mut m: Vec<Vec<u8>> = rows
                .iter()
                .map(|r| cols.iter().map(|c| u8::from(r.is_subset(*c))).collect())
                .collect();
            let mut rank = 0;
            for c in 0..cols.len() {
                if let Some(p) = (rank..m.len()).find(|&r| m[r][c] == 1) {
                    m.swap(rank, p);
                    for r in 0..m.len() {
                        if r != rank && m[r][c] == 1 {
                            let pivot = m[rank].clone();
                            for (a, b) in m[r].iter_mut().zip(pivot) {
                                *a ^= b;
                            }
                        }
                    }
                    rank += 1;
                }
            }
            ranks[s] = rank;
        }
        let f = oct.f_vector().counts;
        let oracle: Vec<usize> = (0..=3).map(|s| f[s] as usize - ranks[s] - ranks[s + 1]).collect();
        assert_eq!(oracle, vec![0, 0, 0, 1]);
        assert_eq!(reduced_betti(&oct, FieldSpec::Gf2).values(), oracle.as_slice());
    }

    #[test]
    fn projective_plane_distinguishes_fields() {
        // 6-vertex real projective plane: H̃_1 = H̃_2 = GF(2), acyclic over Q.
        let names = ["1", "2", "3", "4", "5", "6"];
        let tris = [
            [1, 2, 3],
            [1, 3, 4],
            [1, 4, 5],
            [1, 5, 6],
            [1, 6, 2],
            [2, 3, 5],
            [3, 4, 6],
            [4, 5, 2],
            [5, 6, 3],
            [6, 2, 4],
        ];
        let facets: Vec<Vec<&str>> = tris.iter().map(|t| t.iter().map(|i| names[i - 1]).collect()).collect();
        let rp2 = SimplicialComplex::from_facets(&names, &facets).unwrap();
        assert_eq!(reduced_betti(&rp2, FieldSpec::Gf2).values(), &[0, 0, 1, 1]);
        assert!(reduced_betti(&rp2, FieldSpec::Rationals).is_acyclic());
        assert!(reduced_betti(&rp2, FieldSpec::Gf(3)).is_acyclic());
        assert_eq!(classify(&rp2, FieldSpec::Gf2).verdict, Verdict::Other);
        assert_eq!(classify(&rp2, FieldSpec::Rationals).verdict, Verdict::Other);
    }

    #[test]
    fn simplex_is_ball() {
        let tri = SimplicialComplex::simplex(&["a", "b", "c"]).unwrap();
        let class = classify(&tri, FieldSpec::Gf2);
        let hollow = SimplicialComplex::simplex_boundary(&["a", "b", "c"]).unwrap();
        match &class.verdict {
            Verdict::Ball { dim, boundary } => {
                assert_eq!(*dim, 2);
                assert_eq!(boundary, &hollow);
            }
            v => panic!("expected ball, got {v:?}"),
        }
        assert_eq!(class.interior(&tri).unwrap(), vec![Face::prefix(3)]);
    }

    #[test]
    fn point_is_zero_ball() {
        let pt = SimplicialComplex::simplex(&["v"]).unwrap();
        let class = classify(&pt, FieldSpec::Gf2);
        assert!(class.is_ball());
        assert_eq!(class.boundary().unwrap().faces(), &[Face::EMPTY]);
        assert_eq!(class.interior(&pt).unwrap(), vec![Face::singleton(0)]);
    }

    #[test]
    fn spheres_and_others() {
        for d in 1..=4 {
            for field in [FieldSpec::Gf2, FieldSpec::Rationals] {
                let c = SimplicialComplex::cross_polytope(d);
                assert_eq!(classify(&c, field).verdict, Verdict::Sphere { dim: d as isize - 1 });
            }
        }
        let empty = SimplicialComplex::empty(Arc::from(Vec::<String>::new()));
        assert_eq!(classify(&empty, FieldSpec::Gf2).verdict, Verdict::Sphere { dim: -1 });
        let two_edges =
            SimplicialComplex::from_facets(&["a", "b", "c", "d"], &[vec!["a", "b"], vec!["c", "d"]]).unwrap();
        assert_eq!(classify(&two_edges, FieldSpec::Gf2).verdict, Verdict::Other);
        // a triangle with a dangling edge is not pure
        let mixed =
            SimplicialComplex::from_facets(&["a", "b", "c", "d"], &[vec!["a", "b", "c"], vec!["c", "d"]]).unwrap();
        assert_eq!(classify(&mixed, FieldSpec::Gf2).verdict, Verdict::Other);
    }

    #[test]
    fn reciprocity_on_balls_and_spheres() {
        let cases = [
            SimplicialComplex::simplex(&["a", "b", "c", "d"]).unwrap(),
            SimplicialComplex::cross_polytope(3),
            SimplicialComplex::cross_polytope(2).cone("z").unwrap(),
        ];
        for k in cases {
            let class = classify(&k, FieldSpec::Gf2);
            let d = (k.dim() + 1) as usize;
            let interior = class.interior(&k).unwrap();
            assert_eq!(
                h_polynomial(&k).reciprocal(d).unwrap(),
                interior_h_polynomial(&k, &interior).unwrap()
            );
        }
    }

    #[test]
    fn joins_follow_ball_sphere_rules() {
        let sphere = two_points();
        let ball = SimplicialComplex::simplex(&["x", "y"]).unwrap();
        let ball2 = SimplicialComplex::simplex(&["p"]).unwrap();
        let s2 = SimplicialComplex::from_facets(&["c", "d"], &[vec!["c"], vec!["d"]]).unwrap();

        assert!(classify(&sphere.join(&s2).unwrap(), FieldSpec::Gf2).is_sphere());

        let sb = sphere.join(&ball).unwrap();
        let class = classify(&sb, FieldSpec::Gf2);
        assert!(class.is_ball());
        // interior(join) = interior * interior
        let int_s = classify(&sphere, FieldSpec::Gf2).interior(&sphere).unwrap();
        let int_b = classify(&ball, FieldSpec::Gf2).interior(&ball).unwrap();
        let mut expected: Vec<Face> = int_s
            .iter()
            .flat_map(|a| int_b.iter().map(move |b| a.union(Face::from_bits(b.bits() << 2))))
            .collect();
        expected.sort();
        assert_eq!(class.interior(&sb).unwrap(), expected);

        assert!(classify(&ball.join(&ball2).unwrap(), FieldSpec::Gf2).is_ball());
    }

    #[test]
    fn evidence_is_recorded() {
        let tri = SimplicialComplex::simplex(&["a", "b", "c"]).unwrap();
        let class = classify_with_evidence(&tri, FieldSpec::Gf2);
        assert_eq!(class.evidence.len(), tri.num_faces());
        assert!(class.evidence[&Face::EMPTY].is_acyclic());
    }
}
