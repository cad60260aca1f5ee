//! Local and relative local h-polynomials, local γ, and the identities
//! relating them to h of the total complex.

use rayon::prelude::*;
use serde::Serialize;

use super::{stellar::edge_subdivision, validate, SubdivisionMap, ValidationMode};
use crate::enumeration::{h_from_counts, is_eulerian};
use crate::error::{Error, Result};
use crate::face::Face;
use crate::poly::{gamma_from_symmetric, GammaVector, IntPolynomial, SymmetryFailure};

/// Positions of `v`'s members, so subsets of `v` become masks `0..2^|v|`.
fn compress(f: Face, positions: &[usize]) -> usize {
    positions
        .iter()
        .enumerate()
        .filter(|(_, p)| f.contains(**p))
        .fold(0, |acc, (i, _)| acc | (1 << i))
}

/// `counts[mask][k]` = number of items with carrier inside `mask` and size
/// `k`, by a subset-sum (zeta) transform over the carrier masks.
fn zeta_counts(items: impl Iterator<Item = (usize, usize)>, d: usize, width: usize) -> Vec<Vec<u64>> {
    let mut table = vec![vec![0u64; width]; 1 << d];
    for (mask, size) in items {
        table[mask][size] += 1;
    }
    for bit in 0..d {
        for mask in 0..1usize << d {
            if mask & (1 << bit) != 0 {
                let (lo, hi) = table.split_at_mut(mask);
                for (a, b) in hi[0].iter_mut().zip(&lo[mask ^ (1 << bit)]) {
                    *a += b;
                }
            }
        }
    }
    table
}

fn sign_term(p: IntPolynomial, negative: bool) -> IntPolynomial {
    if negative {
        -p
    } else {
        p
    }
}

/// `ℓ_V(Γ, x) = Σ_{F ⊆ V} (-1)^{d-|F|} h(Γ_F, x)` for a subdivision of `2^V`.
pub fn local_h(s: &SubdivisionMap) -> Result<IntPolynomial> {
    let v = s.simplex_base()?;
    let positions: Vec<usize> = v.iter().collect();
    let d = positions.len();
    let items = s
        .total()
        .faces()
        .iter()
        .zip(s.carriers())
        .map(|(e, c)| (compress(*c, &positions), e.len()));
    let table = zeta_counts(items, d, d + 1);
    Ok((0..1usize << d)
        .map(|mask| {
            let size = mask.count_ones() as usize;
            sign_term(h_from_counts(&table[mask], size), (d - size) % 2 == 1)
        })
        .sum())
}

/// `ℓ_V(Γ, E, x) = Σ_{σ(E) ⊆ F ⊆ V} (-1)^{d-|F|} h(link_{Γ_F}(E), x)`.
pub fn relative_local_h(s: &SubdivisionMap, e: Face) -> Result<IntPolynomial> {
    let v = s.simplex_base()?;
    let sigma_e = s.carrier(e).ok_or_else(|| Error::NotAFace(s.total().names(e)))?;
    let positions: Vec<usize> = v.iter().collect();
    let d = positions.len();
    let items = s
        .total()
        .faces()
        .iter()
        .zip(s.carriers())
        .filter(|(g, _)| e.is_subset(**g))
        .map(|(g, c)| (compress(*c, &positions), g.len() - e.len()));
    let table = zeta_counts(items, d, d + 1);
    let low = compress(sigma_e, &positions);
    Ok((0..1usize << d)
        .filter(|mask| mask & low == low)
        .map(|mask| {
            let size = mask.count_ones() as usize;
            sign_term(h_from_counts(&table[mask], size - e.len()), (d - size) % 2 == 1)
        })
        .sum())
}

fn asymmetry(failure: SymmetryFailure) -> Error {
    match failure {
        SymmetryFailure::Mismatch { low, high } => Error::LocalHAsymmetric { low, high },
        SymmetryFailure::DegreeExceeds { degree, d } => Error::LocalHAsymmetric { low: d, high: degree },
    }
}

/// The γ-vector of `ℓ_V(Γ, x)` centred at `d/2`.
pub fn local_gamma(s: &SubdivisionMap) -> Result<GammaVector> {
    let d = s.simplex_base()?.len();
    gamma_from_symmetric(&local_h(s)?, d).map_err(asymmetry)
}

/// Interior face counts of a subdivision of `2^V`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InteriorStats {
    /// Vertices carried onto `V`.
    pub f0_interior: u64,
    /// Edges carried onto `V`.
    pub f1_interior: u64,
    /// Vertices carried onto a face of `V` with `|V| - 1` elements.
    pub f0_codim1_relint: u64,
}

pub fn interior_stats(s: &SubdivisionMap) -> Result<InteriorStats> {
    let v = s.simplex_base()?;
    let mut stats = InteriorStats {
        f0_interior: 0,
        f1_interior: 0,
        f0_codim1_relint: 0,
    };
    for (e, c) in s.total().faces().iter().zip(s.carriers()) {
        match (e.len(), *c == v) {
            (1, true) => stats.f0_interior += 1,
            (2, true) => stats.f1_interior += 1,
            (1, false) if c.len() + 1 == v.len() => stats.f0_codim1_relint += 1,
            _ => {}
        }
    }
    Ok(stats)
}

/// Both sides of `γ(Δ′) = Σ_F ξ_F(Δ′_F) γ(link_Δ F)`. `lhs` is `None` when
/// `h(Δ′)` has no γ-vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaForm {
    pub lhs: Option<IntPolynomial>,
    pub rhs: IntPolynomial,
}

/// Both sides of `h(Δ′) = Σ_{F ∈ Δ} ℓ_F(Δ′_F) h(link_Δ F)`, plus the γ form
/// when the base is Eulerian.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub lhs: IntPolynomial,
    pub rhs: IntPolynomial,
    pub gamma: Option<GammaForm>,
}

impl Decomposition {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs && self.gamma.as_ref().map_or(true, |g| g.lhs.as_ref() == Some(&g.rhs))
    }
}

/// Evaluates both sides of the decomposition of `h(Δ′)` over the faces of
/// the base. Runs the combinatorial validation first.
pub fn h_decomposition(s: &SubdivisionMap) -> Result<Decomposition> {
    let failures = validate::check_homology_axioms(s, ValidationMode::Fast);
    if let Some(f) = failures.first() {
        return Err(Error::NotHomologySubdivision(format!("{:?}: {}", f.face, f.reason)));
    }
    let base = s.base();
    let d = (base.dim() + 1) as usize;
    let eulerian = is_eulerian(base);
    let terms: Vec<(IntPolynomial, Option<IntPolynomial>)> = base
        .faces()
        .par_iter()
        .map(|&f| -> Result<_> {
            let local = s.restriction(f)?;
            let ell = local_h(&local)?;
            let link = base.link_unchecked(f);
            let h_link = h_from_counts(&link.f_vector().counts, d - f.len());
            let gamma_term = if eulerian {
                let xi = gamma_from_symmetric(&ell, f.len()).map_err(asymmetry)?;
                let g_link = gamma_from_symmetric(&h_link, d - f.len())
                    .map_err(|_| Error::NotHomologySubdivision("link of an Eulerian base is not symmetric".into()))?;
                Some(&xi.as_polynomial() * &g_link.as_polynomial())
            } else {
                None
            };
            Ok((&ell * &h_link, gamma_term))
        })
        .collect::<Result<_>>()?;
    let lhs = h_from_counts(&s.total().f_vector().counts, d);
    let gamma = eulerian.then(|| GammaForm {
        lhs: gamma_from_symmetric(&lhs, d).ok().map(|g| g.as_polynomial()),
        rhs: terms.iter().filter_map(|t| t.1.clone()).sum(),
    });
    let rhs = terms.into_iter().map(|t| t.0).sum();
    Ok(Decomposition { lhs, rhs, gamma })
}

/// Both sides of `ℓ_V(Γ′) = Σ_{E ∈ Γ} ℓ_E(Γ′_E) ℓ_V(Γ, E)` where `inner`
/// subdivides `Γ = outer.total()` and `outer` subdivides `2^V`.
pub fn check_locality(outer: &SubdivisionMap, inner: &SubdivisionMap) -> Result<(IntPolynomial, IntPolynomial)> {
    let composed = SubdivisionMap::compose(outer, inner)?;
    let lhs = local_h(&composed)?;
    let gamma = outer.total();
    let terms: Vec<IntPolynomial> = gamma
        .faces()
        .par_iter()
        .map(|&e| -> Result<_> {
            let inner_e = gamma.translate_face(e, inner.base()).ok_or(Error::BaseMismatch)?;
            let ell_e = local_h(&inner.restriction(inner_e)?)?;
            if ell_e.is_zero() {
                return Ok(IntPolynomial::zero());
            }
            Ok(&ell_e * &relative_local_h(outer, e)?)
        })
        .collect::<Result<_>>()?;
    Ok((lhs, terms.into_iter().sum()))
}

/// Both sides of `ℓ_V(Γ′) = ℓ_V(Γ) + x ℓ_V(Γ, e)` where `Γ′` is the edge
/// subdivision of `Γ` at `e`.
pub fn check_edge_recursion(s: &SubdivisionMap, e: Face) -> Result<(IntPolynomial, IntPolynomial)> {
    let step = edge_subdivision(s.total(), e, None)?;
    let after = SubdivisionMap::compose(s, &step)?;
    let lhs = local_h(&after)?;
    let rhs = &local_h(s)? + &relative_local_h(s, e)?.shift(1);
    Ok((lhs, rhs))
}
