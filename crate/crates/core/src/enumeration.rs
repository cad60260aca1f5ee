//! h-polynomials, reduced Euler characteristics and the Eulerian test.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::poly::{gamma_from_symmetric, GammaVector, IntPolynomial, SymmetryFailure};

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `Σ_i counts[i] · x^i (1-x)^{d-i}`, where `counts[i]` is a number of faces
/// with `i` vertices.
pub fn h_from_counts(counts: &[u64], d: usize) -> IntPolynomial {
    let mut coeffs = vec![BigInt::zero(); d + 1];
    for (i, &f) in counts.iter().enumerate().take(d + 1) {
        if f == 0 {
            continue;
        }
        let f = BigInt::from(f);
        for (j, c) in coeffs[i..].iter_mut().enumerate() {
            let term = &f * binomial(d - i, j);
            if j % 2 == 0 {
                *c += term;
            } else {
                *c -= term;
            }
        }
    }
    IntPolynomial::from_bigints(coeffs)
}

/// Face-count vector to dimension `d = dim + 1` of the complex it came from.
fn natural_d(counts: &[u64]) -> usize {
    counts.iter().rposition(|c| *c != 0).unwrap_or(0)
}

/// `h(K, x) = Σ_{F ∈ K} x^{|F|} (1-x)^{d-|F|}` with `d = dim K + 1`.
pub fn h_polynomial(k: &SimplicialComplex) -> IntPolynomial {
    let f = k.f_vector();
    h_from_counts(&f.counts, natural_d(&f.counts))
}

/// The same face sum restricted to `interior`, with `d` taken from `k`.
pub fn interior_h_polynomial(k: &SimplicialComplex, interior: &[Face]) -> Result<IntPolynomial> {
    let d = (k.dim() + 1) as usize;
    let mut counts = vec![0u64; d + 1];
    for f in interior {
        if !k.contains(*f) {
            return Err(Error::InteriorNotSubset(k.names(*f)));
        }
        counts[f.len()] += 1;
    }
    Ok(h_from_counts(&counts, d))
}

/// `Σ_{F ∈ K} (-1)^{|F|-1}`.
pub fn reduced_euler_characteristic(k: &SimplicialComplex) -> i64 {
    k.faces().iter().map(|f| if f.len() % 2 == 1 { 1 } else { -1 }).sum()
}

/// True iff every link (∅ included) has reduced Euler characteristic
/// `(-1)^{dim link}`.
pub fn is_eulerian(k: &SimplicialComplex) -> bool {
    k.faces().iter().all(|&f| {
        let mut chi = 0i64;
        let mut top = 0usize;
        for &g in k.faces().iter().filter(|g| f.is_subset(**g)) {
            let size = g.len() - f.len();
            chi += if size % 2 == 1 { 1 } else { -1 };
            top = top.max(size);
        }
        // dim link = top - 1
        let expected = if (top + 1) % 2 == 0 { 1 } else { -1 };
        chi == expected
    })
}

/// γ-vector of `h(K)` centred at `(dim K + 1)/2`.
pub fn gamma_vector(k: &SimplicialComplex) -> Result<GammaVector, SymmetryFailure> {
    gamma_from_symmetric(&h_polynomial(k), (k.dim() + 1) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SimplicialComplex;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(c.iter().copied())
    }

    fn cycle(n: usize) -> SimplicialComplex {
        let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let edges: Vec<Vec<String>> = (0..n)
            .map(|i| vec![names[i].clone(), names[(i + 1) % n].clone()])
            .collect();
        SimplicialComplex::from_facets(&names, &edges).unwrap()
    }

    /// Literal face sum `Σ x^{|F|} (1-x)^{d-|F|}` with polynomial products.
    fn h_oracle(k: &SimplicialComplex) -> IntPolynomial {
        let d = (k.dim() + 1) as usize;
        let one_minus_x = p(&[1, -1]);
        k.faces()
            .iter()
            .map(|f| {
                let mut term = IntPolynomial::monomial(1, f.len());
                for _ in 0..d - f.len() {
                    term = &term * &one_minus_x;
                }
                term
            })
            .sum()
    }

    #[test]
    fn h_examples() {
        let oct = SimplicialComplex::cross_polytope(3);
        assert_eq!(h_polynomial(&oct), p(&[1, 3, 3, 1]));
        assert_eq!(h_oracle(&oct), p(&[1, 3, 3, 1]));
        assert_eq!(
            h_polynomial(&SimplicialComplex::simplex(&["a", "b", "c"]).unwrap()),
            p(&[1])
        );
        let path = SimplicialComplex::from_facets(&["a", "b", "c"], &[vec!["a", "b"], vec!["b", "c"]]).unwrap();
        assert_eq!(h_polynomial(&path), p(&[1, 1]));
        assert_eq!(h_oracle(&path), p(&[1, 1]));
        let empty = SimplicialComplex::simplex::<&str>(&[]).unwrap();
        assert_eq!(h_polynomial(&empty), p(&[1]));
    }

    #[test]
    fn h_basic_properties() {
        for k in [
            SimplicialComplex::cross_polytope(4),
            cycle(7),
            SimplicialComplex::simplex_boundary(&["a", "b", "c", "d"]).unwrap(),
        ] {
            let h = h_polynomial(&k);
            let d = (k.dim() + 1) as usize;
            assert!(h.degree().unwrap() <= d);
            assert_eq!(h.coeff(0), BigInt::from(1));
            // h(1) = number of facets of full size
            assert_eq!(h.eval(&BigInt::from(1)), BigInt::from(k.faces_of_size(d).len()));
            let chi = reduced_euler_characteristic(&k);
            let sign = if (d - 1) % 2 == 0 { 1 } else { -1 };
            assert_eq!(h.coeff(d) * sign, BigInt::from(chi));
        }
    }

    #[test]
    fn interior_h() {
        let edge = SimplicialComplex::simplex(&["a", "b"]).unwrap();
        let ab = Face::prefix(2);
        assert_eq!(interior_h_polynomial(&edge, &[ab]).unwrap(), p(&[0, 0, 1]));
        let oct = SimplicialComplex::cross_polytope(3);
        let all = oct.faces().to_vec();
        let h = h_polynomial(&oct);
        assert_eq!(interior_h_polynomial(&oct, &all).unwrap(), h.reciprocal(3).unwrap());
        let bad = Face::from_indices([0, 3]);
        assert!(matches!(
            interior_h_polynomial(&oct, &[bad]),
            Err(Error::InteriorNotSubset(_))
        ));
    }

    #[test]
    fn eulerian() {
        assert!(is_eulerian(&cycle(4)));
        assert!(!is_eulerian(&SimplicialComplex::simplex(&["a", "b", "c"]).unwrap()));
        assert!(is_eulerian(&SimplicialComplex::cross_polytope(4)));
        let path = SimplicialComplex::from_facets(&["a", "b", "c"], &[vec!["a", "b"], vec!["b", "c"]]).unwrap();
        assert!(!is_eulerian(&path));
    }

    #[test]
    fn gammas_of_small_spheres() {
        assert_eq!(
            gamma_vector(&SimplicialComplex::cross_polytope(3))
                .unwrap()
                .as_polynomial(),
            p(&[1])
        );
        assert_eq!(gamma_vector(&cycle(6)).unwrap().as_polynomial(), p(&[1, 2]));
        // γ_1 = f_0 - 2d for cycles
        for n in 4..10 {
            assert_eq!(gamma_vector(&cycle(n)).unwrap().as_polynomial(), p(&[1, n as i64 - 4]));
        }
    }

    fn random_complex() -> impl Strategy<Value = SimplicialComplex> {
        (1usize..6).prop_flat_map(|n| {
            proptest::collection::vec(1u32..(1 << n), 1..5).prop_map(move |masks| {
                let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
                SimplicialComplex::from_generators(names.into(), masks.into_iter().map(|m| Face::from_bits(m as u128)))
            })
        })
    }

    proptest! {
        #[test]
        fn h_matches_face_sum(k in random_complex()) {
            prop_assert_eq!(h_polynomial(&k), h_oracle(&k));
        }

        #[test]
        fn h_of_join_is_product(a in random_complex(), b in random_complex()) {
            let names: Vec<String> = b.labels().iter().map(|l| format!("{l}'")).collect();
            let b2 = SimplicialComplex::from_generators(names.into(), b.facets().iter().copied());
            let j = a.join(&b2).unwrap();
            prop_assert_eq!(h_polynomial(&j), &h_polynomial(&a) * &h_polynomial(&b2));
        }

        #[test]
        fn eulerian_implies_dehn_sommerville(k in random_complex()) {
            if is_eulerian(&k) {
                let d = (k.dim() + 1) as usize;
                prop_assert!(h_polynomial(&k).check_symmetric(d).is_ok());
            }
        }
    }
}
