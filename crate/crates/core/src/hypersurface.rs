//! Modules over the Artinian hypersurface `A = Q/(Π^e)`, `(Q, Π)` a DVR.
//!
//! Every finitely generated `A`-module decomposes as `⊕ Q/(Π^{a_i})` with
//! `1 ≤ a_1 ≤ … ≤ a_μ ≤ e`, and the multiset of `a_i` is a complete
//! isomorphism invariant. All invariants below are closed forms in `(e, a)`.
//! The matrix-level cross-check lives in [`crate::gradedhom`].

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HypersurfaceModule {
    e: i64,
    a: Vec<i64>,
}

impl HypersurfaceModule {
    pub fn new(e: i64, mut a: Vec<i64>) -> Result<Self> {
        if e < 1 {
            return Err(Error::InvalidInput(format!("ring exponent e = {e} must be >= 1")));
        }
        if a.is_empty() {
            return Err(Error::InvalidInput("module needs at least one cyclic summand".into()));
        }
        if let Some(bad) = a.iter().find(|&&x| x < 1 || x > e) {
            return Err(Error::InvalidInput(format!(
                "summand exponent {bad} outside 1..={e}"
            )));
        }
        a.sort_unstable();
        Ok(Self { e, a })
    }

    /// Every module with `2 ≤ e ≤ max_e` and `1 ≤ μ ≤ max_mu`, ordered by
    /// `e`, then `μ`, then lexicographically in `a`.
    pub fn corpus(max_e: i64, max_mu: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for e in 2..=max_e {
            for mu in 1..=max_mu {
                let mut a = vec![1i64; mu];
                loop {
                    out.push(Self { e, a: a.clone() });
                    // next nondecreasing sequence in 1..=e
                    let Some(k) = (0..mu).rev().find(|&k| a[k] < e) else { break };
                    let v = a[k] + 1;
                    a[k..].iter_mut().for_each(|x| *x = v);
                }
            }
        }
        out
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    pub fn a(&self) -> &[i64] {
        &self.a
    }

    /// Minimal number of generators.
    pub fn mu(&self) -> usize {
        self.a.len()
    }

    fn a_max(&self) -> i64 {
        *self.a.last().unwrap()
    }

    /// `Σ_i (1 + z + … + z^{a_i − 1})`.
    pub fn hilbert_series(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.a.iter().flat_map(|&ai| (0..ai).map(|d| (d, 1))))
    }

    /// `e_0(M) = Σ a_i`.
    pub fn e0(&self) -> i64 {
        self.a.iter().sum()
    }

    /// `i(M) = a_1`.
    pub fn i_invariant(&self) -> i64 {
        self.a[0]
    }

    /// Graded dimensions of `G(F_M, M*)`: summand `a_i` contributes
    /// `z^{e−a_i} + … + z^{e−1}`.
    pub fn dual_filtration_dims(&self) -> LaurentPoly {
        let e = self.e;
        LaurentPoly::from_terms(self.a.iter().flat_map(|&ai| (e - ai..e).map(|d| (d, 1))))
    }

    /// `α(M) = e − a_μ`, the initial degree of the dual filtration.
    pub fn alpha(&self) -> i64 {
        self.e - self.a_max()
    }

    /// `red(A) = e − 1`, since `m^{e−1} ≠ 0 = m^e`.
    pub fn ring_reduction_number(&self) -> i64 {
        self.e - 1
    }

    /// `a(G(M)) = max{n : G(M)_n ≠ 0} = a_μ − 1`.
    pub fn a_invariant(&self) -> i64 {
        self.a_max() - 1
    }

    pub fn is_ulrich(&self) -> bool {
        self.a.iter().all(|&x| x == 1)
    }

    pub fn baby_ulrich_check(&self) -> BabyUlrich {
        BabyUlrich {
            alpha_equals_red: self.alpha() == self.ring_reduction_number(),
            ulrich: self.is_ulrich(),
            a_invariant_is_minus_dim: self.a_invariant() == 0,
        }
    }

    /// Whether the dual filtration is a shift of the adic filtration on
    /// `M*`: all `a_i` equal.
    pub fn dual_is_adic_shift(&self) -> bool {
        self.a.iter().all(|&x| x == self.a[0])
    }

    /// `h_{a_1}(M) < μ(M)`: the coefficient of `z^{a_1}` counts the summands
    /// with `a_i > a_1`.
    pub fn lemma_halpha_check(&self) -> bool {
        self.hilbert_series().coeff(self.i_invariant()) < BigInt::from(self.mu())
    }
}

impl fmt::Display for HypersurfaceModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.a.iter().map(|x| format!("Q/(Π^{x})")).collect();
        write!(f, "{} over Q/(Π^{})", parts.join(" ⊕ "), self.e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BabyUlrich {
    pub alpha_equals_red: bool,
    pub ulrich: bool,
    pub a_invariant_is_minus_dim: bool,
}

impl BabyUlrich {
    pub fn consistent(&self) -> bool {
        self.alpha_equals_red == self.ulrich && self.ulrich == self.a_invariant_is_minus_dim
    }
}

/// Returns `s ≥ 1` when `h = ell·(1 + z + … + z^{s−1})`.
pub fn gorenstein_shape_check(h: &LaurentPoly, ell: i64) -> Option<i64> {
    if ell == 0 || h.min_degree() != Some(0) {
        return None;
    }
    let s = h.max_degree()? + 1;
    let target = BigInt::from(ell);
    h.dense().iter().all(|c| *c == target).then_some(s)
}
