//! Exact integer polynomials and the γ basis change.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Polynomial with arbitrary-precision integer coefficients, indexed by
/// degree. Trailing zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_bigints(vec![c])
    }

    pub fn from_bigints(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_coeffs<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Self::from_bigints(coeffs.into_iter().map(BigInt::from).collect())
    }

    /// `c · x^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::from_bigints(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(1, 1)
    }

    /// `(1 + x)^n`.
    pub fn one_plus_x_pow(n: usize) -> Self {
        let mut row = vec![BigInt::one()];
        for _ in 0..n {
            let mut next = vec![BigInt::zero(); row.len() + 1];
            for (i, c) in row.iter().enumerate() {
                next[i] += c;
                next[i + 1] += c;
            }
            row = next;
        }
        Self::from_bigints(row)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `x^k · self`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_bigints(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `x^d · p(1/x)`, or `None` when the degree exceeds `d`.
    pub fn reciprocal(&self, d: usize) -> Option<Self> {
        if self.degree().is_some_and(|deg| deg > d) {
            return None;
        }
        Some(Self::from_bigints((0..=d).map(|i| self.coeff(d - i)).collect()))
    }

    /// Checks `p_i = p_{d-i}` for all `i`; the error names the first
    /// violated pair.
    pub fn check_symmetric(&self, d: usize) -> Result<(), SymmetryFailure> {
        if let Some(deg) = self.degree().filter(|deg| *deg > d) {
            return Err(SymmetryFailure::DegreeExceeds { degree: deg, d });
        }
        for low in 0..=d / 2 {
            let high = d - low;
            if self.coeff(low) != self.coeff(high) {
                return Err(SymmetryFailure::Mismatch { low, high });
            }
        }
        Ok(())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Coefficientwise `self ≥ other`.
    pub fn dominates(&self, other: &IntPolynomial) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|i| self.coeff(i) >= other.coeff(i))
    }

    /// Weakly increasing up to some index and weakly decreasing after it,
    /// over the stored coefficient range.
    pub fn is_unimodal(&self) -> bool {
        let c = &self.coeffs;
        let mut i = 0;
        while i + 1 < c.len() && c[i] <= c[i + 1] {
            i += 1;
        }
        while i + 1 < c.len() && c[i] >= c[i + 1] {
            i += 1;
        }
        i + 1 >= c.len()
    }

    /// Coefficients as `i64`, if they all fit.
    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;
    fn add(mut self, rhs: IntPolynomial) -> IntPolynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&IntPolynomial> for IntPolynomial {
    fn add_assign(&mut self, rhs: &IntPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        let c = std::mem::take(&mut self.coeffs);
        *self = Self::from_bigints(c);
    }
}

impl SubAssign<&IntPolynomial> for IntPolynomial {
    fn sub_assign(&mut self, rhs: &IntPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        let c = std::mem::take(&mut self.coeffs);
        *self = Self::from_bigints(c);
    }
}

impl Sub<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;
    fn sub(mut self, rhs: IntPolynomial) -> IntPolynomial {
        self -= &rhs;
        self
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_bigints(out)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for IntPolynomial {
    fn sum<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

/// Serializes one big integer as a plain JSON integer when it fits in 128
/// bits, falling back to a decimal string.
fn serialize_bigint<S: Serializer>(c: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match c.to_i128() {
        Some(v) => match i64::try_from(v) {
            Ok(small) => s.serialize_i64(small),
            Err(_) => s.serialize_i128(v),
        },
        None => s.serialize_str(&c.to_string()),
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum WireInt {
    Int(i64),
    Wide(i128),
    Text(String),
}

impl WireInt {
    fn into_bigint<E: serde::de::Error>(self) -> Result<BigInt, E> {
        match self {
            WireInt::Int(v) => Ok(v.into()),
            WireInt::Wide(v) => Ok(v.into()),
            WireInt::Text(t) => t.parse().map_err(|_| E::custom(format!("not an integer: {t}"))),
        }
    }
}

struct BigIntSeq<'a>(&'a [BigInt]);

impl Serialize for BigIntSeq<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        struct One<'b>(&'b BigInt);
        impl Serialize for One<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                serialize_bigint(self.0, s)
            }
        }
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for c in self.0 {
            seq.serialize_element(&One(c))?;
        }
        seq.end()
    }
}

fn deserialize_bigints<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
    let raw: Vec<WireInt> = Vec::deserialize(d)?;
    raw.into_iter().map(WireInt::into_bigint::<D::Error>).collect()
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        BigIntSeq(&self.coeffs).serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        deserialize_bigints(d).map(Self::from_bigints)
    }
}

/// Why a polynomial has no γ-vector with respect to a given centre.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SymmetryFailure {
    #[error("coefficients {low} and {high} differ")]
    Mismatch { low: usize, high: usize },
    #[error("degree {degree} exceeds {d}")]
    DegreeExceeds { degree: usize, d: usize },
}

/// Coordinates `γ_0 .. γ_{⌊d/2⌋}` of a polynomial symmetric about `d/2` in
/// the basis `x^i (1+x)^{d-2i}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GammaVector {
    d: usize,
    gammas: Vec<BigInt>,
}

impl GammaVector {
    pub fn new(d: usize, mut gammas: Vec<BigInt>) -> Self {
        gammas.resize(d / 2 + 1, BigInt::zero());
        GammaVector { d, gammas }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn gammas(&self) -> &[BigInt] {
        &self.gammas
    }

    pub fn get(&self, i: usize) -> BigInt {
        self.gammas.get(i).cloned().unwrap_or_default()
    }

    /// The γ-polynomial `Σ γ_i x^i`.
    pub fn as_polynomial(&self) -> IntPolynomial {
        IntPolynomial::from_bigints(self.gammas.clone())
    }

    /// `Σ γ_i x^i (1+x)^{d-2i}`.
    pub fn expand(&self) -> IntPolynomial {
        self.gammas
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.is_zero())
            .map(|(i, g)| IntPolynomial::one_plus_x_pow(self.d - 2 * i).shift(i).scale(g))
            .sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.gammas.iter().all(|g| !g.is_negative())
    }
}

impl fmt::Debug for GammaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "γ[d={}]({})", self.d, self.as_polynomial())
    }
}

impl Serialize for GammaVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("GammaVector", 2)?;
        st.serialize_field("d", &self.d)?;
        st.serialize_field("gamma", &BigIntSeq(&self.gammas))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for GammaVector {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            d: usize,
            gamma: Vec<WireInt>,
        }
        let w = Wire::deserialize(de)?;
        if w.gamma.len() > w.d / 2 + 1 {
            return Err(D::Error::custom("too many γ coordinates for d"));
        }
        let gammas = w
            .gamma
            .into_iter()
            .map(WireInt::into_bigint::<D::Error>)
            .collect::<Result<_, _>>()?;
        Ok(GammaVector::new(w.d, gammas))
    }
}

/// Solves `h(x) = Σ γ_i x^i (1+x)^{d-2i}` by peeling off `γ_0, γ_1, ..` in
/// turn: each `γ_i` is the coefficient of `x^i` in what remains.
pub fn gamma_from_symmetric(h: &IntPolynomial, d: usize) -> Result<GammaVector, SymmetryFailure> {
    h.check_symmetric(d)?;
    let mut residual = h.clone();
    let mut gammas = Vec::with_capacity(d / 2 + 1);
    for i in 0..=d / 2 {
        let g = residual.coeff(i);
        if !g.is_zero() {
            residual -= &IntPolynomial::one_plus_x_pow(d - 2 * i).shift(i).scale(&g);
        }
        gammas.push(g);
    }
    debug_assert!(residual.is_zero());
    Ok(GammaVector::new(d, gammas))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(c.iter().copied())
    }

    #[test]
    fn normalization_and_display() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0, 1, -2]).to_string(), "x - 2x^2");
        assert_eq!(p(&[0, 0, -1]).to_string(), "-x^2");
        assert_eq!(p(&[]).to_string(), "0");
    }

    #[test]
    fn arithmetic() {
        assert_eq!(IntPolynomial::one_plus_x_pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1]), p(&[1, 0, -1]));
        assert_eq!(&p(&[1, 1]) - &p(&[1, 1]), IntPolynomial::zero());
        assert_eq!(p(&[1, 2]).reciprocal(3), Some(p(&[0, 0, 2, 1])));
        assert_eq!(p(&[1, 2, 3]).reciprocal(1), None);
        assert_eq!(p(&[1, 2, 3]).eval(&BigInt::from(2)), BigInt::from(17));
    }

    #[test]
    fn unimodality() {
        assert!(p(&[0, 1, 1, 1]).is_unimodal());
        assert!(p(&[1, 3, 3, 1]).is_unimodal());
        assert!(!p(&[0, 1, 0, 1]).is_unimodal());
        assert!(IntPolynomial::zero().is_unimodal());
    }

    #[test]
    fn gamma_examples() {
        let g = gamma_from_symmetric(&p(&[1, 3, 3, 1]), 3).unwrap();
        assert_eq!(g.as_polynomial(), p(&[1]));
        assert_eq!(g.gammas().len(), 2);
        let g = gamma_from_symmetric(&p(&[1, 4, 4, 1]), 3).unwrap();
        assert_eq!(g.as_polynomial(), p(&[1, 1]));
        assert_eq!(
            gamma_from_symmetric(&p(&[1, 1, 0]), 2),
            Err(SymmetryFailure::Mismatch { low: 0, high: 2 })
        );
        assert_eq!(
            gamma_from_symmetric(&p(&[1, 1, 1]), 1),
            Err(SymmetryFailure::DegreeExceeds { degree: 2, d: 1 })
        );
        // x + x^3 centred at 2 gives x - 2x^2.
        let g = gamma_from_symmetric(&p(&[0, 1, 0, 1]), 4).unwrap();
        assert_eq!(g.as_polynomial(), p(&[0, 1, -2]));
        // Zero polynomial and the d = 0 case.
        assert_eq!(
            gamma_from_symmetric(&IntPolynomial::zero(), 3).unwrap().as_polynomial(),
            IntPolynomial::zero()
        );
        assert_eq!(
            gamma_from_symmetric(&IntPolynomial::one(), 0).unwrap().as_polynomial(),
            IntPolynomial::one()
        );
    }

    #[test]
    fn json_shapes() {
        let poly = p(&[1, -3, 0, 7]);
        assert_eq!(serde_json::to_string(&poly).unwrap(), "[1,-3,0,7]");
        let back: IntPolynomial = serde_json::from_str("[1,-3,0,7,0]").unwrap();
        assert_eq!(back, poly);
        let g = gamma_from_symmetric(&p(&[1, 4, 4, 1]), 3).unwrap();
        assert_eq!(serde_json::to_string(&g).unwrap(), r#"{"d":3,"gamma":[1,1]}"#);
        let big = IntPolynomial::monomial(BigInt::from(10).pow(40), 0);
        let s = serde_json::to_string(&big).unwrap();
        assert_eq!(serde_json::from_str::<IntPolynomial>(&s).unwrap(), big);
    }

    fn symmetric_poly() -> impl Strategy<Value = (IntPolynomial, usize)> {
        (0usize..12).prop_flat_map(|d| {
            proptest::collection::vec(-1_000_000i64..=1_000_000, d / 2 + 1).prop_map(move |half| {
                let mut c = vec![0i64; d + 1];
                for (i, v) in half.iter().enumerate() {
                    c[i] = *v;
                    c[d - i] = *v;
                }
                (IntPolynomial::from_coeffs(c), d)
            })
        })
    }

    proptest! {
        #[test]
        fn gamma_round_trip((h, d) in symmetric_poly()) {
            let g = gamma_from_symmetric(&h, d).unwrap();
            prop_assert_eq!(g.expand(), h);
        }

        #[test]
        fn expand_then_extract(d in 0usize..12, raw in proptest::collection::vec(-1000i64..1000, 7)) {
            let gammas: Vec<BigInt> = raw.into_iter().take(d / 2 + 1).map(BigInt::from).collect();
            let g = GammaVector::new(d, gammas);
            prop_assert_eq!(gamma_from_symmetric(&g.expand(), d).unwrap(), g);
        }
    }
}
