//! Integer Laurent polynomials and Hilbert-series bookkeeping.
//!
//! Every backend reduces its output to a [`LaurentPoly`]: h-vectors, graded
//! dimension vectors of hom spaces, socle dimensions. Coefficients are
//! arbitrary-precision integers and zero coefficients are never stored, so
//! `==` is structural equality of polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Default number of trailing zero coefficients required by
/// [`fit_h_polynomial`] before the fit is accepted.
pub const DEFAULT_WINDOW: usize = 5;

/// A finite sum `Σ c_i z^i` with `i ∈ ℤ` and integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c·z^degree`.
    pub fn monomial(degree: i64, c: impl Into<BigInt>) -> Self {
        Self::from_terms([(degree, c.into())])
    }

    /// Builds a polynomial from `(degree, coefficient)` pairs. Repeated
    /// degrees are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (d, c) in terms {
            p.add_term(d, c.into());
        }
        p
    }

    /// Dense constructor: `coeffs[k]` is the coefficient of `z^(start + k)`.
    pub fn from_coeffs<C>(start: i64, coeffs: impl IntoIterator<Item = C>) -> Self
    where
        C: Into<BigInt>,
    {
        Self::from_terms(
            coeffs
                .into_iter()
                .enumerate()
                .map(|(k, c)| (start + k as i64, c.into())),
        )
    }

    fn add_term(&mut self, degree: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(degree).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&degree);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, degree: i64) -> BigInt {
        self.coeffs.get(&degree).cloned().unwrap_or_default()
    }

    /// Lowest degree with a nonzero coefficient (`−p` in the usual notation).
    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Highest degree with a nonzero coefficient (`s`).
    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Nonzero terms in increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    /// Coefficients on `[min_degree, max_degree]`, zeros included. Empty for
    /// the zero polynomial.
    pub fn dense(&self) -> Vec<BigInt> {
        match (self.min_degree(), self.max_degree()) {
            (Some(lo), Some(hi)) => (lo..=hi).map(|d| self.coeff(d)).collect(),
            _ => Vec::new(),
        }
    }

    /// Sum of all coefficients, i.e. the value at `z = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Multiplication by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(d, c)| (d + k, c.clone())).collect(),
        }
    }

    /// `z^r · h(z⁻¹)`.
    pub fn reverse(&self, r: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(d, c)| (r - d, c.clone())).collect(),
        }
    }

    /// True iff the coefficient list read over the support interval is a
    /// palindrome. The zero polynomial is not symmetric.
    pub fn is_symmetric(&self) -> bool {
        match (self.min_degree(), self.max_degree()) {
            (Some(lo), Some(hi)) => self.reverse(lo + hi) == *self,
            _ => false,
        }
    }

    /// The multiplicity `e₀ = h(1)`.
    pub fn multiplicity(&self) -> BigInt {
        self.eval_at_one()
    }

    /// `e_i = Σ_j C(j, i)·h_j`, the i-th derivative at 1 divided by `i!`.
    ///
    /// Only defined for polynomials supported in nonnegative degrees.
    pub fn hilbert_coefficient(&self, i: u32) -> Result<BigInt> {
        if let Some(lo) = self.min_degree() {
            if lo < 0 {
                return Err(Error::Precondition(format!(
                    "Hilbert coefficients need support in degrees >= 0, lowest degree is {lo}"
                )));
            }
        }
        let i = BigInt::from(i);
        Ok(self
            .coeffs
            .iter()
            .map(|(j, c)| binomial(BigInt::from(*j), i.clone()) * c)
            .sum())
    }

    /// Coefficient as `i64`, for callers that know the values are small.
    pub fn coeff_i64(&self, degree: i64) -> Option<i64> {
        self.coeff(degree).to_i64()
    }

    /// `(1 - z)^k`.
    pub fn one_minus_z_pow(k: u32) -> Self {
        let k_big = BigInt::from(k);
        Self::from_terms((0..=k).map(|j| {
            let c = binomial(k_big.clone(), BigInt::from(j));
            (j as i64, if j % 2 == 0 { c } else { -c })
        }))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (d, c)) in self.terms().enumerate() {
            let abs = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = d == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match d {
                0 => {}
                1 => write!(f, "z")?,
                _ => write!(f, "z^{d}")?,
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (d, c) in rhs.terms() {
            out.add_term(d, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (d, c) in rhs.terms() {
            out.add_term(d, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (a, x) in self.terms() {
            for (b, y) in rhs.terms() {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(d, c)| (*d, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

// JSON form: {"terms": [[degree, coeff], ...]} sorted by degree. Coefficients
// outside the i64 range are written as decimal strings.

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonCoeff {
    Int(i64),
    Big(String),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonPoly {
    terms: Vec<(i64, JsonCoeff)>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        JsonPoly {
            terms: self
                .terms()
                .map(|(d, c)| {
                    let c = match c.to_i64() {
                        Some(v) => JsonCoeff::Int(v),
                        None => JsonCoeff::Big(c.to_string()),
                    };
                    (d, c)
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = JsonPoly::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for (deg, c) in raw.terms {
            let c = match c {
                JsonCoeff::Int(v) => BigInt::from(v),
                JsonCoeff::Big(s) => s.parse().map_err(serde::de::Error::custom)?,
            };
            terms.push((deg, c));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

/// `h(z) / (1 - z)^dim`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HilbertSeries {
    pub h: LaurentPoly,
    pub dim: u32,
}

impl HilbertSeries {
    pub fn new(h: LaurentPoly, dim: u32) -> Self {
        Self { h, dim }
    }

    /// Coefficients `H(0..=n)` of the power-series expansion.
    pub fn expand(&self, n: usize) -> Vec<BigInt> {
        let lo = self.h.min_degree().unwrap_or(0).min(0);
        let len = (n as i64 - lo + 1).max(0) as usize;
        let mut v: Vec<BigInt> = (0..len).map(|k| self.h.coeff(lo + k as i64)).collect();
        for _ in 0..self.dim {
            for k in 1..v.len() {
                let prev = v[k - 1].clone();
                v[k] += prev;
            }
        }
        v.split_off((-lo) as usize)
    }

    /// Series of the idealization `A ⋉ M` with `M` placed in degree 1:
    /// `H_A(z) + z·H_M(z)` over the common denominator `(1 - z)^{dim A}`.
    pub fn idealization(ring: &HilbertSeries, module: &HilbertSeries) -> Result<HilbertSeries> {
        if module.dim > ring.dim {
            return Err(Error::Precondition(format!(
                "module dimension {} exceeds ring dimension {}",
                module.dim, ring.dim
            )));
        }
        let lifted = &module.h.shift(1) * &LaurentPoly::one_minus_z_pow(ring.dim - module.dim);
        Ok(HilbertSeries::new(&ring.h + &lifted, ring.dim))
    }
}

/// Recovers the h-polynomial from the first `N + 1` values of a Hilbert
/// function of a module of dimension `dim`.
///
/// Computes `(1 - z)^dim · Σ_{n≤N} H(n) z^n` truncated at degree `N` and
/// requires the top `window` coefficients of that truncation to vanish.
/// Terms above `N` are artifacts of cutting off the series and are ignored.
pub fn fit_h_polynomial<T>(values: &[T], dim: u32, window: usize) -> Result<LaurentPoly>
where
    T: Clone + Into<BigInt>,
{
    if values.len() < 2 {
        return Err(Error::Precondition(
            "need at least two Hilbert function values".into(),
        ));
    }
    if window == 0 {
        return Err(Error::Precondition("stabilization window must be >= 1".into()));
    }
    let mut v: Vec<BigInt> = values.iter().cloned().map(Into::into).collect();
    for _ in 0..dim {
        for k in (1..v.len()).rev() {
            let prev = v[k - 1].clone();
            v[k] -= prev;
        }
    }
    let n = v.len();
    let tail_start = n.saturating_sub(window);
    if tail_start == 0 || v[tail_start..].iter().any(|c| !c.is_zero()) {
        return Err(Error::NotStabilized(format!(
            "last {window} of {n} numerator coefficients are not all zero"
        )));
    }
    Ok(LaurentPoly::from_coeffs(0, v))
}
