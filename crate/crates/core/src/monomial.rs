//! Primary monomial ideals in `k[X_1, …, X_d]_{(X)}`, `d ∈ {2, 3}`.
//!
//! `ℓ(A/I)` is the number of lattice points of `ℕ^d` outside the staircase of
//! `I`. The count runs over the box cut out by the pure-power generators,
//! one column at a time along the last coordinate: a column over the prefix
//! `p` contributes the least last exponent among generators whose prefix
//! divides `p`.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{fit_h_polynomial, LaurentPoly};
use crate::par::Execution;

/// Largest `N` the adaptive fit will try.
pub const DEFAULT_MAX_N: usize = 128;

pub type Exponent = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Exponent>,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Drops duplicates and generators divisible by another one.
fn minimalize(mut gens: Vec<Exponent>) -> Vec<Exponent> {
    // sorting by total degree puts every divisor before its multiples
    gens.sort_unstable_by(|a, b| {
        let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
        da.cmp(&db).then_with(|| a.cmp(b))
    });
    gens.dedup();
    let mut kept: Vec<Exponent> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| divides(k, &g)) {
            kept.push(g);
        }
    }
    kept.sort_unstable();
    kept
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Exponent>) -> Result<Self> {
        if !(2..=3).contains(&nvars) {
            return Err(Error::InvalidInput(format!(
                "only 2 or 3 variables are supported, got {nvars}"
            )));
        }
        if let Some(g) = gens.iter().find(|g| g.len() != nvars) {
            return Err(Error::InvalidInput(format!(
                "exponent vector {g:?} does not have {nvars} entries"
            )));
        }
        let ideal = Self { nvars, gens: minimalize(gens) };
        for i in 0..nvars {
            if ideal.pure_power(i).is_none() {
                return Err(Error::NotPrimary(format!("no pure power of variable {}", i + 1)));
            }
        }
        Ok(ideal)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Exponent] {
        &self.gens
    }

    /// Exponent of the pure power of variable `i` among the generators.
    pub fn pure_power(&self, i: usize) -> Option<u32> {
        self.gens
            .iter()
            .find(|g| g.iter().enumerate().all(|(j, &x)| (j == i) == (x > 0)))
            .map(|g| g[i])
    }

    fn box_bounds(&self) -> Vec<u32> {
        (0..self.nvars).map(|i| self.pure_power(i).unwrap()).collect()
    }

    /// `I·J`.
    pub fn product(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.iter().zip(b).map(|(x, y)| x + y).collect()))
            .collect();
        Self { nvars: self.nvars, gens: minimalize(gens) }
    }

    /// `I^n`, `n ≥ 1`.
    pub fn power(&self, n: usize) -> Self {
        assert!(n >= 1, "I^0 is the unit ideal");
        let mut out = self.clone();
        for _ in 1..n {
            out = out.product(self);
        }
        out
    }

    /// `[I, I^2, …, I^n]`.
    pub fn powers(&self, n: usize) -> Vec<Self> {
        let mut out: Vec<Self> = Vec::with_capacity(n);
        for _ in 0..n {
            let next = match out.last() {
                None => self.clone(),
                Some(prev) => prev.product(self),
            };
            out.push(next);
        }
        out
    }

    /// `ℓ(A/I)`.
    pub fn colength(&self) -> u64 {
        let bounds = self.box_bounds();
        let (prefix_bounds, last_bound) = bounds.split_at(self.nvars - 1);
        let last = self.nvars - 1;
        let mut total = 0u64;
        let mut prefix = vec![0u32; last];
        loop {
            let height = self
                .gens
                .iter()
                .filter(|g| divides(&g[..last], &prefix))
                .map(|g| g[last])
                .min()
                .unwrap_or(last_bound[0]);
            total += u64::from(height);
            // odometer over the prefix box
            let mut k = 0;
            loop {
                if k == last {
                    return total;
                }
                prefix[k] += 1;
                if prefix[k] < prefix_bounds[k] {
                    break;
                }
                prefix[k] = 0;
                k += 1;
            }
        }
    }

    /// `H(n) = ℓ(I^n / I^{n+1})`.
    pub fn hilbert_function(&self, n: usize) -> u64 {
        let upper = self.power(n + 1).colength();
        let lower = if n == 0 { 0 } else { self.power(n).colength() };
        upper - lower
    }

    /// `H(0..=n)`, computing the colengths of the powers in parallel.
    pub fn hilbert_function_values(&self, n: usize, exec: Execution) -> Vec<u64> {
        let powers = self.powers(n + 1);
        let mut colengths = vec![0u64];
        colengths.extend(exec.map(&powers, MonomialIdeal::colength));
        colengths.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// h-polynomial of `G_I(A)`, doubling the number of Hilbert function
    /// values from `4·max pure power` until the fit stabilizes or `max_n`
    /// is reached.
    pub fn h_polynomial(&self, window: usize, max_n: usize, exec: Execution) -> Result<LaurentPoly> {
        let start = 4 * self.box_bounds().into_iter().max().unwrap() as usize;
        let mut n = start.min(max_n).max(1);
        loop {
            let values = self.hilbert_function_values(n, exec);
            match fit_h_polynomial(&values, self.nvars as u32, window) {
                Err(Error::NotStabilized(_)) if n < max_n => n = (2 * n).min(max_n),
                Err(Error::NotStabilized(msg)) => {
                    return Err(Error::NotStabilized(format!("{msg} (N = {n} reached the cap)")))
                }
                other => return other,
            }
        }
    }

    pub fn is_parameter_ideal(&self) -> bool {
        self.gens.len() == self.nvars
    }

    pub fn classify_dim2(&self, window: usize, max_n: usize, exec: Execution) -> Result<Dim2Classification> {
        if self.nvars != 2 {
            return Err(Error::WrongDimension { expected: 2, found: self.nvars });
        }
        let h = self.h_polynomial(window, max_n, exec)?;
        let e = |i| h.hilbert_coefficient(i);
        let (e0, e1, e2) = (e(0)?, e(1)?, e(2)?);
        let parameter = self.is_parameter_ideal();
        let a_invariant = if parameter {
            AInvariant::Exact(-2)
        } else if e2 == BigInt::from(0) {
            AInvariant::Exact(-1)
        } else {
            AInvariant::AtLeast(0)
        };
        let minimal_multiplicity = h.max_degree().is_some_and(|d| d <= 1);
        Ok(Dim2Classification {
            h,
            e0,
            e1,
            e2,
            parameter,
            a_invariant,
            minimal_multiplicity,
        })
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const VARS: [&str; 3] = ["X", "Y", "Z"];
        let mono = |g: &Exponent| {
            let s: String = g
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| if x == 1 { VARS[i].to_string() } else { format!("{}^{x}", VARS[i]) })
                .collect();
            if s.is_empty() { "1".to_string() } else { s }
        };
        let parts: Vec<String> = self.gens.iter().map(mono).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// What the Hilbert data say about `a(G)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum AInvariant {
    Exact(i64),
    AtLeast(i64),
    Unknown,
}

impl fmt::Display for AInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AInvariant::Exact(a) => write!(f, "a(G) = {a}"),
            AInvariant::AtLeast(a) => write!(f, "a(G) >= {a}"),
            AInvariant::Unknown => write!(f, "a(G) unknown"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dim2Classification {
    pub h: LaurentPoly,
    pub e0: BigInt,
    pub e1: BigInt,
    pub e2: BigInt,
    pub parameter: bool,
    pub a_invariant: AInvariant,
    /// `h = h_0 + h_1 z`; sufficient for minimal multiplicity, the converse
    /// needs integral closedness, which is not checked.
    pub minimal_multiplicity: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::DEFAULT_WINDOW as W;

    const SEQ: Execution = Execution::Sequential;

    fn ideal(gens: &[[u32; 2]]) -> MonomialIdeal {
        MonomialIdeal::new(2, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    fn marley() -> MonomialIdeal {
        ideal(&[[7, 0], [6, 1], [1, 6], [0, 7]])
    }

    fn p(cs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(0, cs.iter().copied())
    }

    #[test]
    fn construction() {
        let i = ideal(&[[2, 0], [3, 1], [0, 2], [2, 0]]);
        assert_eq!(i.gens(), &[vec![0, 2], vec![2, 0]]);
        assert!(matches!(
            MonomialIdeal::new(2, vec![vec![2, 0], vec![1, 1]]),
            Err(Error::NotPrimary(_))
        ));
        assert!(MonomialIdeal::new(4, vec![vec![1, 0, 0, 0]]).is_err());
        assert!(MonomialIdeal::new(2, vec![vec![1, 0, 0]]).is_err());
    }

    #[test]
    fn colengths() {
        assert_eq!(marley().colength(), 38);
        assert_eq!(ideal(&[[1, 0], [0, 1]]).colength(), 1);
        assert_eq!(ideal(&[[2, 0], [0, 2]]).colength(), 4);
        let cube = MonomialIdeal::new(3, vec![vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 4]]).unwrap();
        assert_eq!(cube.colength(), 24);
        let m3 = MonomialIdeal::new(3, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        // ℓ(A/m^n) = C(n+2, 3)
        assert_eq!(m3.power(4).colength(), 20);
    }

    #[test]
    fn powers() {
        let m = ideal(&[[1, 0], [0, 1]]);
        assert_eq!(m.power(2), ideal(&[[2, 0], [1, 1], [0, 2]]));
        assert_eq!(ideal(&[[2, 0], [0, 2]]).power(2), ideal(&[[4, 0], [2, 2], [0, 4]]));
        assert_eq!(marley().power(2).power(2), marley().power(4));
        let ps = marley().powers(3);
        assert_eq!(ps[2], marley().power(3));
    }

    #[test]
    fn hilbert_functions() {
        assert_eq!(ideal(&[[1, 0], [0, 1]]).hilbert_function(3), 4);
        assert_eq!(ideal(&[[2, 0], [0, 2]]).hilbert_function(1), 8);
        assert_eq!(marley().hilbert_function(0), 38);
        assert_eq!(
            marley().hilbert_function_values(7, Execution::Parallel),
            vec![38, 79, 123, 170, 220, 273, 322, 371]
        );
    }

    #[test]
    fn h_polynomials() {
        assert_eq!(marley().h_polynomial(W, DEFAULT_MAX_N, SEQ).unwrap(), p(&[38, 3, 3, 3, 3, 3, -4]));
        assert_eq!(ideal(&[[3, 0], [0, 5]]).h_polynomial(W, DEFAULT_MAX_N, SEQ).unwrap(), p(&[15]));
        assert_eq!(
            ideal(&[[2, 0], [1, 1], [0, 2]]).h_polynomial(W, DEFAULT_MAX_N, SEQ).unwrap(),
            p(&[3, 1])
        );
    }

    #[test]
    fn stabilization_cap() {
        // deg h = 6 cannot be confirmed with only 8 values and a window of 5
        let err = marley().h_polynomial(W, 7, SEQ).unwrap_err();
        assert!(matches!(err, Error::NotStabilized(_)));
    }

    #[test]
    fn parameter_ideals() {
        assert!(ideal(&[[3, 0], [0, 5]]).is_parameter_ideal());
        assert!(!marley().is_parameter_ideal());
        assert!(!ideal(&[[2, 0], [1, 1], [0, 2]]).is_parameter_ideal());
    }

    #[test]
    fn classification() {
        let c = marley().classify_dim2(W, DEFAULT_MAX_N, SEQ).unwrap();
        assert_eq!(c.e2, BigInt::from(0));
        assert!(!c.parameter);
        assert_eq!(c.a_invariant, AInvariant::Exact(-1));
        assert!(!c.minimal_multiplicity);

        let c = ideal(&[[3, 0], [0, 3]]).classify_dim2(W, DEFAULT_MAX_N, SEQ).unwrap();
        assert_eq!(c.a_invariant, AInvariant::Exact(-2));

        let c = ideal(&[[2, 0], [1, 1], [0, 2]]).classify_dim2(W, DEFAULT_MAX_N, SEQ).unwrap();
        assert_eq!(c.h, p(&[3, 1]));
        assert!(c.minimal_multiplicity);
        assert_eq!(c.a_invariant, AInvariant::Exact(-1));

        let three = MonomialIdeal::new(3, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(
            three.classify_dim2(W, DEFAULT_MAX_N, SEQ).unwrap_err(),
            Error::WrongDimension { expected: 2, found: 3 }
        );
    }

    #[test]
    fn display() {
        assert_eq!(marley().to_string(), "(Y^7, XY^6, X^6Y, X^7)");
    }
}
