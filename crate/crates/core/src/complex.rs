//! Finite abstract simplicial complexes over a labeled ground set.
//!
//! A complex owns a shared label table (its ground set) and the full,
//! eagerly enumerated list of its faces. Complexes derived from another one
//! (links, stars, restrictions, induced subcomplexes) share the parent's
//! label table so that faces can be compared bit for bit across them.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::face::{Face, DEFAULT_GROUND_SET_LIMIT, MAX_GROUND_SET};

/// Ground set shared between a complex and everything derived from it.
pub type Labels = Arc<[String]>;

/// Face counts by cardinality: `counts[i]` is the number of faces with `i`
/// vertices, so `counts[0] == 1` always.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector {
    pub counts: Vec<u64>,
}

impl FVector {
    /// `f_{i}` in the usual dimension indexing (`f_{-1} = 1`).
    pub fn f(&self, dim: isize) -> u64 {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|i| self.counts.get(i).copied())
            .unwrap_or(0)
    }
}

#[derive(Clone)]
pub struct SimplicialComplex {
    labels: Labels,
    facets: Vec<Face>,
    faces: Vec<Face>,
    index: HashMap<Face, usize>,
    vertices: Face,
}

pub(crate) fn validate_labels<S: AsRef<str>>(labels: &[S], limit: usize) -> Result<Labels> {
    let limit = limit.min(MAX_GROUND_SET);
    if labels.len() > limit {
        return Err(Error::GroundSetTooLarge {
            size: labels.len(),
            limit,
        });
    }
    let mut seen = HashSet::new();
    for l in labels {
        let l = l.as_ref();
        if l.is_empty() || l.chars().any(|c| c.is_whitespace() || c == ',') {
            return Err(Error::InvalidLabel(l.to_string()));
        }
        if !seen.insert(l) {
            return Err(Error::DuplicateLabel(l.to_string()));
        }
    }
    Ok(labels.iter().map(|l| l.as_ref().to_string()).collect())
}

impl SimplicialComplex {
    /// Downward closure of `generators` over the ground set `labels`.
    ///
    /// Dominated generators are dropped silently, so the stored facets always
    /// form an antichain.
    pub fn from_facets<S, G>(labels: &[S], generators: &[G]) -> Result<Self>
    where
        S: AsRef<str>,
        G: AsRef<[S]>,
    {
        Self::from_facets_with_limit(labels, generators, DEFAULT_GROUND_SET_LIMIT)
    }

    pub fn from_facets_with_limit<S, G>(labels: &[S], generators: &[G], limit: usize) -> Result<Self>
    where
        S: AsRef<str>,
        G: AsRef<[S]>,
    {
        let labels = validate_labels(labels, limit)?;
        let lookup: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            let mut face = Face::EMPTY;
            for name in g.as_ref() {
                let name = name.as_ref();
                let i = *lookup.get(name).ok_or_else(|| Error::UnknownVertex(name.to_string()))?;
                face = face.with(i);
            }
            gens.push(face);
        }
        Ok(Self::from_generators(labels.clone(), gens))
    }

    /// Downward closure of faces given directly as bitsets over `labels`.
    pub fn from_generators<I: IntoIterator<Item = Face>>(labels: Labels, generators: I) -> Self {
        let mut gens: Vec<Face> = generators.into_iter().collect();
        debug_assert!(gens.iter().all(|g| g.max_index().map_or(true, |m| m < labels.len())));
        gens.sort_by(|a, b| b.cmp(a));
        gens.dedup();
        let mut facets: Vec<Face> = Vec::new();
        for g in gens {
            if !facets.iter().any(|f| g.is_subset(*f)) {
                facets.push(g);
            }
        }
        let mut seen: HashSet<Face> = HashSet::new();
        seen.insert(Face::EMPTY);
        let mut stack: Vec<Face> = Vec::new();
        for f in &facets {
            if seen.insert(*f) {
                stack.push(*f);
            }
        }
        while let Some(f) = stack.pop() {
            for g in f.facets_of_boundary() {
                if seen.insert(g) {
                    stack.push(g);
                }
            }
        }
        facets.sort();
        Self::assemble(labels, facets, seen.into_iter().collect())
    }

    /// Builds a complex from a face set that is already downward closed.
    pub(crate) fn from_closed(labels: Labels, faces: Vec<Face>) -> Self {
        let set: HashSet<Face> = faces.iter().copied().collect();
        debug_assert!(set.contains(&Face::EMPTY));
        debug_assert!(faces.iter().all(|f| f.facets_of_boundary().all(|g| set.contains(&g))));
        let mut covered: HashSet<Face> = HashSet::with_capacity(set.len());
        for f in &set {
            covered.extend(f.facets_of_boundary());
        }
        let mut facets: Vec<Face> = set.iter().copied().filter(|f| !covered.contains(f)).collect();
        facets.sort();
        Self::assemble(labels, facets, set.into_iter().collect())
    }

    fn assemble(labels: Labels, facets: Vec<Face>, mut faces: Vec<Face>) -> Self {
        faces.sort();
        let index = faces.iter().enumerate().map(|(i, f)| (*f, i)).collect();
        let vertices = faces
            .iter()
            .filter(|f| f.len() == 1)
            .fold(Face::EMPTY, |acc, f| acc.union(*f));
        SimplicialComplex {
            labels,
            facets,
            faces,
            index,
            vertices,
        }
    }

    /// The complex `{∅}` over the given ground set.
    pub fn empty(labels: Labels) -> Self {
        Self::assemble(labels, vec![Face::EMPTY], vec![Face::EMPTY])
    }

    /// The full simplex `2^face` over the given ground set.
    pub fn simplex_on(labels: Labels, face: Face) -> Self {
        Self::from_generators(labels, [face])
    }

    /// The full simplex on freshly named vertices.
    pub fn simplex<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let labels = validate_labels(names, MAX_GROUND_SET)?;
        let n = labels.len();
        Ok(Self::simplex_on(labels, Face::prefix(n)))
    }

    /// Boundary `2^V ∖ {V}` of the simplex on the given names.
    pub fn simplex_boundary<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let labels = validate_labels(names, MAX_GROUND_SET)?;
        let full = Face::prefix(labels.len());
        if full.is_empty() {
            // ∂(2^∅) would be void; {∅} is the smallest representable complex.
            return Ok(Self::empty(labels));
        }
        Ok(Self::from_generators(labels, full.facets_of_boundary()))
    }

    /// Boundary of the `d`-dimensional cross-polytope on `u1..ud, v1..vd`.
    pub fn cross_polytope(d: usize) -> Self {
        let pairs: Vec<(String, String)> = (1..=d).map(|i| (format!("u{i}"), format!("v{i}"))).collect();
        Self::cross_polytope_on(&pairs).expect("generated cross-polytope labels are valid")
    }

    /// Cross-polytope boundary with explicit antipodal pairs. The label table
    /// lists all first members, then all second members.
    pub fn cross_polytope_on<S: AsRef<str>>(pairs: &[(S, S)]) -> Result<Self> {
        let d = pairs.len();
        let names: Vec<&str> = pairs
            .iter()
            .map(|p| p.0.as_ref())
            .chain(pairs.iter().map(|p| p.1.as_ref()))
            .collect();
        let labels = validate_labels(&names, MAX_GROUND_SET)?;
        let mut faces = Vec::with_capacity(3usize.pow(d as u32));
        faces.push(Face::EMPTY);
        for i in 0..d {
            let current = faces.len();
            for k in 0..current {
                faces.push(faces[k].with(i));
                faces.push(faces[k].with(d + i));
            }
        }
        Ok(Self::from_closed(labels, faces))
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_table(&self) -> &Labels {
        &self.labels
    }

    pub fn ground_size(&self) -> usize {
        self.labels.len()
    }

    /// Whether the two complexes index vertices identically.
    pub fn shares_labels(&self, other: &SimplicialComplex) -> bool {
        Arc::ptr_eq(&self.labels, &other.labels) || self.labels == other.labels
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// All faces including ∅, in (cardinality, bitset) order.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    #[inline]
    pub fn contains(&self, face: Face) -> bool {
        self.index.contains_key(&face)
    }

    #[inline]
    pub fn index_of(&self, face: Face) -> Option<usize> {
        self.index.get(&face).copied()
    }

    /// Union of all vertices actually used by the complex.
    pub fn vertex_set(&self) -> Face {
        self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn dim(&self) -> isize {
        self.faces.last().map_or(-1, |f| f.dim())
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets.iter().all(|f| f.dim() == d)
    }

    pub fn f_vector(&self) -> FVector {
        let mut counts = vec![0u64; (self.dim() + 2) as usize];
        for f in &self.faces {
            counts[f.len()] += 1;
        }
        FVector { counts }
    }

    /// Faces with exactly `k` vertices.
    pub fn faces_of_size(&self, k: usize) -> &[Face] {
        let lo = self.faces.partition_point(|f| f.len() < k);
        let hi = self.faces.partition_point(|f| f.len() <= k);
        &self.faces[lo..hi]
    }

    pub fn face_by_names<S: AsRef<str>>(&self, names: &[S]) -> Result<Face> {
        let mut face = Face::EMPTY;
        for name in names {
            let name = name.as_ref();
            let i = self
                .labels
                .iter()
                .position(|l| l == name)
                .ok_or_else(|| Error::UnknownVertex(name.to_string()))?;
            face = face.with(i);
        }
        Ok(face)
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == name)
    }

    /// Vertex names of `face` in label-table order.
    /// Vertex names of `face`; indices outside the ground set print as `#i`.
    pub fn names(&self, face: Face) -> Vec<String> {
        face.iter()
            .map(|i| self.labels.get(i).cloned().unwrap_or_else(|| format!("#{i}")))
            .collect()
    }

    /// Vertex names of `face` sorted as strings.
    pub fn sorted_names(&self, face: Face) -> Vec<String> {
        let mut n = self.names(face);
        n.sort();
        n
    }

    fn require_face(&self, face: Face) -> Result<()> {
        if self.contains(face) {
            Ok(())
        } else {
            Err(Error::NotAFace(self.names(face)))
        }
    }

    /// Subcomplex of faces satisfying `keep`; `keep` must select a
    /// downward-closed family containing ∅.
    pub(crate) fn filter_closed(&self, keep: impl Fn(Face) -> bool) -> Self {
        let faces = self.faces.iter().copied().filter(|f| keep(*f)).collect();
        Self::from_closed(self.labels.clone(), faces)
    }

    /// `{G ∖ F : F ⊆ G ∈ K}` over the same label table.
    pub fn link(&self, face: Face) -> Result<Self> {
        self.require_face(face)?;
        Ok(self.link_unchecked(face))
    }

    pub(crate) fn link_unchecked(&self, face: Face) -> Self {
        let faces = self
            .faces
            .iter()
            .filter(|g| face.is_subset(**g))
            .map(|g| g.difference(face))
            .collect();
        Self::from_closed(self.labels.clone(), faces)
    }

    /// Faces containing `face`. Not downward closed in general.
    pub fn open_star(&self, face: Face) -> Result<Vec<Face>> {
        self.require_face(face)?;
        Ok(self.faces.iter().copied().filter(|g| face.is_subset(*g)).collect())
    }

    pub fn closed_star(&self, face: Face) -> Result<Self> {
        let star = self.open_star(face)?;
        Ok(Self::from_generators(self.labels.clone(), star))
    }

    /// Induced subcomplex on the vertex set `w`.
    pub fn induced(&self, w: Face) -> Self {
        self.filter_closed(|f| f.is_subset(w))
    }

    /// Simplicial join; the result's label table is `self`'s followed by
    /// `other`'s.
    pub fn join(&self, other: &SimplicialComplex) -> Result<Self> {
        let (labels, offset) = concat_labels(&self.labels, &other.labels)?;
        let mut faces = Vec::with_capacity(self.faces.len() * other.faces.len());
        for a in &self.faces {
            for b in &other.faces {
                faces.push(a.union(shift_face(*b, offset)));
            }
        }
        Ok(Self::from_closed(labels, faces))
    }

    /// Cone over `self` with a new apex.
    pub fn cone(&self, apex: &str) -> Result<Self> {
        let point = Self::simplex(&[apex])?;
        self.join(&point)
    }

    /// Inclusion-minimal vertex sets that are not faces.
    ///
    /// Only vertices of the complex are considered: ground-set labels that
    /// carry no vertex are not reported as one-element non-faces. This keeps
    /// links and restrictions, which share their parent's ground set, flag
    /// whenever the parent is.
    pub fn minimal_non_faces(&self) -> Vec<Face> {
        let mut out = Vec::new();
        for &f in &self.faces {
            let start = f.max_index().map_or(0, |m| m + 1);
            for v in self.vertices.iter().filter(|&v| v >= start) {
                let s = f.with(v);
                if !self.contains(s) && s.facets_of_boundary().all(|g| self.contains(g)) {
                    out.push(s);
                }
            }
        }
        out.sort();
        out
    }

    pub fn is_flag(&self) -> bool {
        self.first_non_flag_witness().is_none()
    }

    /// A minimal non-face with more than two vertices, if one exists.
    pub fn first_non_flag_witness(&self) -> Option<Face> {
        self.minimal_non_faces().into_iter().find(|f| f.len() != 2)
    }

    /// Maps a face of `self` to the same vertex names in `target`'s indexing.
    pub fn translate_face(&self, face: Face, target: &SimplicialComplex) -> Option<Face> {
        if self.shares_labels(target) {
            return Some(face);
        }
        face.iter()
            .map(|i| target.vertex_index(&self.labels[i]))
            .collect::<Option<Vec<_>>>()
            .map(Face::from_indices)
    }

    /// Facets as sets of names, for label-table independent comparison.
    pub fn named_facets(&self) -> BTreeSet<BTreeSet<String>> {
        self.facets
            .iter()
            .map(|f| self.names(*f).into_iter().collect())
            .collect()
    }
}

pub(crate) fn shift_face(face: Face, offset: usize) -> Face {
    Face::from_bits(face.bits() << offset)
}

pub(crate) fn concat_labels(a: &[String], b: &[String]) -> Result<(Labels, usize)> {
    let left: HashSet<&str> = a.iter().map(String::as_str).collect();
    if let Some(clash) = b.iter().find(|n| left.contains(n.as_str())) {
        return Err(Error::GroundSetOverlap(clash.clone()));
    }
    if a.len() + b.len() > MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge {
            size: a.len() + b.len(),
            limit: MAX_GROUND_SET,
        });
    }
    let labels: Labels = a.iter().chain(b.iter()).cloned().collect();
    Ok((labels, a.len()))
}

impl PartialEq for SimplicialComplex {
    /// Equal when the facets agree as sets of vertex names.
    fn eq(&self, other: &Self) -> bool {
        if self.shares_labels(other) {
            self.facets == other.facets
        } else {
            self.facets.len() == other.facets.len() && self.named_facets() == other.named_facets()
        }
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let facets: Vec<Vec<String>> = self.facets.iter().map(|x| self.names(*x)).collect();
        f.debug_struct("SimplicialComplex").field("facets", &facets).finish()
    }
}
