//! Numerical semigroup rings `A = k[[t^s : s ∈ S]]` and their filtrations.
//!
//! Ideals and fractional ideals of `A` generated by monomials are modeled by
//! their exponent sets, which are `S`-stable subsets of `ℤ` that contain a
//! tail `[T, ∞)`. Lengths of quotients become counts of exponents, so every
//! Hilbert function here is an exact set-cardinality computation.
//!
//! The minimal reduction of the maximal ideal is always taken to be the
//! principal ideal `(t^a)` with `a` the smallest generator. Over an infinite
//! residue field this realizes the reduction number of `m`.

use std::fmt;
use std::sync::RwLock;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::gradedhom::{GradedAlgebra, Matrix};
use crate::laurent::{fit_h_polynomial, LaurentPoly};

/// An `S`-stable subset `E ⊆ ℤ` with `[threshold, ∞) ⊆ E`.
///
/// The representation is canonical: `threshold` is minimal and `sporadic`
/// holds exactly the (sorted) elements below it, so derived equality is set
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SemigroupModule {
    sporadic: Vec<i64>,
    threshold: i64,
}

impl SemigroupModule {
    /// Collects `{x ∈ [lo, bound) : member(x)} ∪ [bound, ∞)` and normalizes.
    pub fn from_predicate(lo: i64, bound: i64, member: impl Fn(i64) -> bool) -> Self {
        let mut sporadic: Vec<i64> = (lo..bound).filter(|&x| member(x)).collect();
        let mut threshold = bound;
        while sporadic.last() == Some(&(threshold - 1)) {
            sporadic.pop();
            threshold -= 1;
        }
        Self { sporadic, threshold }
    }

    pub fn sporadic(&self) -> &[i64] {
        &self.sporadic
    }

    pub fn threshold(&self) -> i64 {
        self.threshold
    }

    pub fn min_element(&self) -> i64 {
        self.sporadic.first().copied().unwrap_or(self.threshold)
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= self.threshold || self.sporadic.binary_search(&x).is_ok()
    }

    /// Elements strictly below `bound`, increasing.
    pub fn elements_below(&self, bound: i64) -> impl Iterator<Item = i64> + '_ {
        let tail = self.threshold..bound.max(self.threshold);
        self.sporadic
            .iter()
            .copied()
            .take_while(move |&x| x < bound)
            .chain(tail)
    }

    /// `a + E`.
    pub fn translate(&self, a: i64) -> Self {
        Self {
            sporadic: self.sporadic.iter().map(|x| x + a).collect(),
            threshold: self.threshold + a,
        }
    }

    /// Minkowski sum `E + F`.
    pub fn sum(&self, other: &Self) -> Self {
        let lo = self.min_element() + other.min_element();
        let bound = (self.threshold + other.min_element()).min(other.threshold + self.min_element());
        let mut hit = vec![false; (bound - lo).max(0) as usize];
        for x in self.elements_below(bound - other.min_element()) {
            for y in other.elements_below(bound - x) {
                hit[(x + y - lo) as usize] = true;
            }
        }
        Self::from_predicate(lo, bound, |z| hit[(z - lo) as usize])
    }

    /// `E + {g_1, …, g_k}`: the exponent set of `m·E` when the `g_i`
    /// generate `m`.
    pub fn add_generators(&self, gens: &[i64]) -> Self {
        let g_min = gens.iter().copied().min().expect("at least one generator");
        let lo = self.min_element() + g_min;
        let bound = self.threshold + g_min;
        Self::from_predicate(lo, bound, |x| gens.iter().any(|&g| self.contains(x - g)))
    }

    pub fn union(&self, other: &Self) -> Self {
        let lo = self.min_element().min(other.min_element());
        let bound = self.threshold.min(other.threshold);
        Self::from_predicate(lo, bound, |x| self.contains(x) || other.contains(x))
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let lo = self.min_element().max(other.min_element());
        let bound = self.threshold.max(other.threshold);
        Self::from_predicate(lo, bound, |x| self.contains(x) && other.contains(x))
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.elements_below(other.threshold).all(|x| other.contains(x))
    }

    /// `#(E \ (F_1 ∪ … ∪ F_k))`; always finite since every `F_i` has a tail.
    pub fn count_outside(&self, others: &[&Self]) -> usize {
        let bound = others.iter().map(|f| f.threshold).min().unwrap_or(i64::MAX);
        assert!(bound < i64::MAX, "complement of nothing is infinite");
        self.elements_below(bound)
            .filter(|&x| !others.iter().any(|f| f.contains(x)))
            .count()
    }

    /// `ℓ(E/F) = #(E \ F)` for `F ⊆ E`.
    pub fn quotient_length(&self, sub: &Self) -> Result<usize> {
        if !sub.is_subset_of(self) {
            return Err(Error::NotSubmodule);
        }
        Ok(self.count_outside(&[sub]))
    }
}

impl fmt::Display for SemigroupModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for x in &self.sporadic {
            write!(f, "{x}, ")?;
        }
        write!(f, "{}→}}", self.threshold)
    }
}

/// A numerical semigroup given by its minimal generators.
///
/// Powers of the maximal ideal are cached per value; the cache is behind a
/// lock so shared references can be used from several threads.
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    /// `apery[r]` is the least element of `S` congruent to `r` mod the
    /// multiplicity.
    apery: Vec<i64>,
    frobenius: i64,
    powers: RwLock<Vec<SemigroupModule>>,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`, reducing to a minimal
    /// generating set. Fails unless the generators are positive and coprime.
    pub fn new(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::InvalidInput("no generators".into()));
        }
        if let Some(&g) = gens.iter().find(|&&g| g <= 0) {
            return Err(Error::InvalidInput(format!("generator {g} is not positive")));
        }
        let g = gens.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::InvalidInput(format!(
                "generators have gcd {g}, the semigroup is not cofinite in ℕ"
            )));
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();

        let mut minimal: Vec<i64> = Vec::new();
        for &g in &sorted {
            if !generated_by(&minimal, g) {
                minimal.push(g);
            }
        }

        let apery = apery_by_shortest_paths(&minimal);
        let frobenius = apery.iter().max().copied().unwrap() - minimal[0];
        Ok(Self {
            generators: minimal,
            apery,
            frobenius,
            powers: RwLock::new(Vec::new()),
        })
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    /// Smallest generator; the multiplicity of `A`.
    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    pub fn max_generator(&self) -> i64 {
        *self.generators.last().unwrap()
    }

    /// Largest gap, `-1` for `ℕ`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> i64 {
        self.frobenius + 1
    }

    pub fn is_natural_numbers(&self) -> bool {
        self.generators == [1]
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && x >= self.apery[x.rem_euclid(self.multiplicity()) as usize]
    }

    pub fn gaps(&self) -> Vec<i64> {
        (0..self.conductor()).filter(|&x| !self.contains(x)).collect()
    }

    /// `S` itself as a module over `S`.
    pub fn as_module(&self) -> SemigroupModule {
        SemigroupModule::from_predicate(0, self.conductor(), |x| self.contains(x))
    }

    /// Apéry set of `a`: entry `r` is the least element of `S` that is
    /// congruent to `r` modulo `a`.
    pub fn apery_set(&self, a: i64) -> Result<Vec<i64>> {
        if a <= 0 || !self.contains(a) {
            return Err(Error::NotMember(a));
        }
        let mut out = vec![-1i64; a as usize];
        let mut missing = a as usize;
        let mut x = 0;
        while missing > 0 {
            let r = (x % a) as usize;
            if out[r] < 0 && self.contains(x) {
                out[r] = x;
                missing -= 1;
            }
            x += 1;
        }
        Ok(out)
    }

    /// Exponent set of `m^n`.
    ///
    /// `M_n ⊇ [n·a_max + c, ∞)` with `c` the conductor, so every window used
    /// below stays under `c + (n + 1)·a_max`.
    pub fn power_module(&self, n: usize) -> SemigroupModule {
        if let Some(m) = self.powers.read().unwrap().get(n) {
            return m.clone();
        }
        let mut cache = self.powers.write().unwrap();
        if cache.is_empty() {
            cache.push(self.as_module());
        }
        while cache.len() <= n {
            let next = cache.last().unwrap().add_generators(&self.generators);
            cache.push(next);
        }
        cache[n].clone()
    }

    /// `a_min + M_n`, the exponent set of `t^a·m^n`.
    fn reduced_power(&self, n: usize) -> SemigroupModule {
        self.power_module(n).translate(self.multiplicity())
    }

    /// `ℓ(m^n / m^{n+1})`.
    pub fn hilbert_function_ring(&self, n: usize) -> usize {
        self.power_module(n)
            .quotient_length(&self.power_module(n + 1))
            .expect("powers of m are nested")
    }

    /// Hilbert function of `B = A/(t^a)` with respect to its maximal ideal.
    pub fn artin_quotient_hf(&self, n: usize) -> usize {
        let principal = self.reduced_power(0);
        self.power_module(n)
            .count_outside(&[&self.power_module(n + 1), &principal])
    }

    /// Least `n` with `m^{n+1} = t^a·m^n`.
    pub fn reduction_number(&self) -> usize {
        (0..)
            .find(|&n| self.power_module(n + 1) == self.reduced_power(n))
            .unwrap()
    }

    /// `δ = Σ_n ℓ((m^{n+1} ∩ (t^a)) / t^a·m^n)`.
    ///
    /// The summands vanish from the reduction number on, where
    /// `m^{n+1} = t^a·m^n`.
    pub fn delta_invariant(&self) -> usize {
        let principal = self.reduced_power(0);
        (0..=self.reduction_number())
            .map(|n| {
                self.power_module(n + 1)
                    .intersection(&principal)
                    .count_outside(&[&self.reduced_power(n)])
            })
            .sum()
    }

    /// Whether the associated graded ring `G_m(A)` is Cohen-Macaulay,
    /// i.e. `δ = 0`.
    pub fn assoc_graded_is_cm(&self) -> bool {
        self.delta_invariant() == 0
    }

    /// Number of Hilbert function values to hand to the fitter: the function
    /// is constant from the reduction number on.
    fn fit_length(&self, window: usize) -> usize {
        self.reduction_number() + window.max(1) + 1
    }

    /// h-polynomial of `G_m(A)`.
    pub fn h_ring(&self, window: usize) -> Result<LaurentPoly> {
        let hf: Vec<usize> = (0..self.fit_length(window))
            .map(|n| self.hilbert_function_ring(n))
            .collect();
        fit_h_polynomial(&hf, 1, window)
    }

    /// h-polynomial of `G(B)`, `B = A/(t^a)`.
    pub fn h_artin(&self, window: usize) -> Result<LaurentPoly> {
        let hf: Vec<usize> = (0..self.fit_length(window))
            .map(|n| self.artin_quotient_hf(n))
            .collect();
        fit_h_polynomial(&hf, 0, window)
    }

    /// The standard canonical fractional ideal `K = {z : f − z ∉ S}`.
    pub fn canonical_module(&self) -> SemigroupModule {
        let f = self.frobenius;
        SemigroupModule::from_predicate(0, f + 1, |z| !self.contains(f - z))
    }

    /// Gap-set symmetry `z ∉ S ⟺ f − z ∈ S`, checked directly on `[0, f]`.
    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius;
        (0..=f).all(|z| self.contains(z) != self.contains(f - z))
    }

    /// Exponent set of `m^n·ω`.
    pub fn canonical_power(&self, n: usize) -> SemigroupModule {
        self.power_module(n).sum(&self.canonical_module())
    }

    /// Hilbert function of `ω_B = ω/t^a·ω` with respect to `m`:
    /// `#(K_n \ (K_{n+1} ∪ (a + K)))`.
    pub fn canonical_quotient_hf(&self, n: usize) -> usize {
        let principal = self.canonical_module().translate(self.multiplicity());
        self.canonical_power(n)
            .count_outside(&[&self.canonical_power(n + 1), &principal])
    }

    pub fn h_canonical_artin(&self, window: usize) -> Result<LaurentPoly> {
        let hf: Vec<usize> = (0..self.fit_length(window))
            .map(|n| self.canonical_quotient_hf(n))
            .collect();
        fit_h_polynomial(&hf, 0, window)
    }

    /// Cohen-Macaulay type: minimal number of generators of `ω`.
    pub fn cm_type(&self) -> usize {
        self.canonical_power(0).count_outside(&[&self.canonical_power(1)])
    }

    /// `h(ω_B, z) = z^r·h(B, z⁻¹)` with `r` the reduction number.
    pub fn canonical_criterion(&self, window: usize) -> Result<bool> {
        let r = self.reduction_number() as i64;
        Ok(self.h_canonical_artin(window)? == self.h_artin(window)?.reverse(r))
    }

    /// a-invariant and borderline flags in dimension one. Only defined when
    /// `G_m(A)` is Cohen-Macaulay, where `a(G) = deg h − 1`.
    pub fn classify_dim1(&self, window: usize) -> Result<Dim1Classification> {
        if !self.assoc_graded_is_cm() {
            return Err(Error::Precondition(
                "associated graded ring is not Cohen-Macaulay; a-invariant not read from h".into(),
            ));
        }
        let h = self.h_ring(window)?;
        let a_invariant = h.max_degree().unwrap() - 1;
        Ok(Dim1Classification {
            a_invariant,
            regular: a_invariant == -1,
            minimal_multiplicity: a_invariant == 0,
        })
    }

    /// Degree of an Apéry element in `G(B)`: the largest `n` with `s ∈ M_n`.
    fn initial_degree(&self, s: i64) -> usize {
        (0..).take_while(|&n| self.power_module(n).contains(s)).last().unwrap()
    }

    /// Matrix presentation of `G(B)` over `ℚ`, with the Apéry set of the
    /// multiplicity as monomial basis. Requires `δ = 0`.
    pub fn build_artinian_graded(&self) -> Result<GradedAlgebra> {
        if !self.assoc_graded_is_cm() {
            return Err(Error::Precondition(
                "δ ≠ 0: G(A)/(t^a)* does not present the Artinian reduction".into(),
            ));
        }
        let a = self.multiplicity();
        let mut by_degree: Vec<Vec<i64>> = Vec::new();
        let mut ap = self.apery_set(a)?;
        ap.sort_unstable();
        for s in ap {
            let d = self.initial_degree(s);
            if by_degree.len() <= d {
                by_degree.resize(d + 1, Vec::new());
            }
            by_degree[d].push(s);
        }
        let dims: Vec<usize> = by_degree.iter().map(Vec::len).collect();
        let degree_one = by_degree.get(1).cloned().unwrap_or_default();
        let gen_action = degree_one
            .iter()
            .map(|&g| {
                (0..dims.len().saturating_sub(1))
                    .map(|j| {
                        let mut m = Matrix::zeros(dims[j + 1], dims[j]);
                        for (col, &s) in by_degree[j].iter().enumerate() {
                            if let Some(row) = by_degree[j + 1].iter().position(|&t| t == g + s) {
                                m.set(row, col, 1);
                            }
                        }
                        m
                    })
                    .collect()
            })
            .collect();
        GradedAlgebra::new(dims, gen_action)
    }
}

/// `S ∌ g` check against the semigroup generated by `gens` (a DP up to `g`).
fn generated_by(gens: &[i64], g: i64) -> bool {
    if gens.is_empty() {
        return g == 0;
    }
    let mut reach = vec![false; g as usize + 1];
    reach[0] = true;
    for x in 1..=g as usize {
        reach[x] = gens.iter().any(|&h| h as usize <= x && reach[x - h as usize]);
    }
    reach[g as usize]
}

/// Apéry set of the smallest generator via Dijkstra on residue classes.
fn apery_by_shortest_paths(gens: &[i64]) -> Vec<i64> {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;
    let a = gens[0];
    let mut dist = vec![i64::MAX; a as usize];
    dist[0] = 0;
    let mut heap = BinaryHeap::from([Reverse((0i64, 0usize))]);
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in &gens[1..] {
            let nr = ((r as i64 + g) % a) as usize;
            if d + g < dist[nr] {
                dist[nr] = d + g;
                heap.push(Reverse((d + g, nr)));
            }
        }
    }
    dist
}

impl Clone for NumericalSemigroup {
    fn clone(&self) -> Self {
        Self {
            generators: self.generators.clone(),
            apery: self.apery.clone(),
            frobenius: self.frobenius,
            powers: RwLock::new(self.powers.read().unwrap().clone()),
        }
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for NumericalSemigroup {}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NumericalSemigroup")
            .field("generators", &self.generators)
            .field("frobenius", &self.frobenius)
            .finish()
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(i64::to_string).collect();
        write!(f, "⟨{}⟩", gens.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dim1Classification {
    pub a_invariant: i64,
    pub regular: bool,
    pub minimal_multiplicity: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::DEFAULT_WINDOW as W;

    fn sg(g: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::new(g).unwrap()
    }

    fn p(cs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(0, cs.iter().copied())
    }

    const MONOMIAL_CURVE: [i64; 5] = [13, 18, 23, 28, 33];

    #[test]
    fn construction() {
        let s = sg(&[5, 3, 6, 10]);
        assert_eq!(s.generators(), &[3, 5]);
        assert_eq!(s.frobenius(), 7);
        assert_eq!(s.gaps(), vec![1, 2, 4, 7]);
        assert_eq!(sg(&[1, 4]).generators(), &[1]);
        assert_eq!(sg(&[1]).frobenius(), -1);
        assert!(matches!(NumericalSemigroup::new(&[2, 4]), Err(Error::InvalidInput(_))));
        assert!(NumericalSemigroup::new(&[0, 1]).is_err());
        assert!(NumericalSemigroup::new(&[]).is_err());
    }

    #[test]
    fn apery() {
        assert_eq!(sg(&[3, 5]).apery_set(3).unwrap(), vec![0, 10, 5]);
        assert_eq!(sg(&[1]).apery_set(1).unwrap(), vec![0]);
        let s = sg(&MONOMIAL_CURVE);
        let ap = s.apery_set(13).unwrap();
        assert_eq!(ap.len(), 13);
        for (r, &w) in ap.iter().enumerate() {
            assert_eq!(w % 13, r as i64);
            assert!(s.contains(w) && !s.contains(w - 13));
        }
        assert_eq!(sg(&[3, 5]).apery_set(5).unwrap(), vec![0, 6, 12, 3, 9]);
        assert!(matches!(sg(&[3, 5]).apery_set(4), Err(Error::NotMember(4))));
    }

    #[test]
    fn powers_of_three_five() {
        let s = sg(&[3, 5]);
        // {6, 8, 10} + S = {6} ∪ [8, ∞)
        let m2 = s.power_module(2);
        assert_eq!((m2.sporadic(), m2.threshold()), (&[6][..], 8));
        let m3 = s.power_module(3);
        assert_eq!((m3.sporadic(), m3.threshold()), (&[9][..], 11));
        assert_eq!(s.power_module(0), s.as_module());
    }

    #[test]
    fn quotient_lengths() {
        let s = sg(&[3, 5]);
        let (m0, m1) = (s.power_module(0), s.power_module(1));
        assert_eq!(m0.quotient_length(&m1).unwrap(), 1);
        assert_eq!(s.power_module(2).quotient_length(&s.power_module(3)).unwrap(), 3);
        assert_eq!(m0.quotient_length(&m0).unwrap(), 0);
        assert_eq!(m1.quotient_length(&m0), Err(Error::NotSubmodule));
    }

    #[test]
    fn hilbert_functions() {
        let s = sg(&[3, 5]);
        let hf: Vec<usize> = (0..6).map(|n| s.hilbert_function_ring(n)).collect();
        assert_eq!(hf, vec![1, 2, 3, 3, 3, 3]);
        let hb: Vec<usize> = (0..5).map(|n| s.artin_quotient_hf(n)).collect();
        assert_eq!(hb, vec![1, 1, 1, 0, 0]);
        let n = sg(&[1]);
        assert!((0..5).all(|k| n.hilbert_function_ring(k) == 1));
        assert_eq!(n.artin_quotient_hf(0), 1);
        assert_eq!(n.artin_quotient_hf(1), 0);
        let c = sg(&MONOMIAL_CURVE);
        assert_eq!(c.h_ring(W).unwrap(), p(&[1, 4, 4, 4]));
        assert_eq!(c.h_artin(W).unwrap(), p(&[1, 4, 4, 4]));
    }

    #[test]
    fn reduction_numbers() {
        assert_eq!(sg(&[1]).reduction_number(), 0);
        assert_eq!(sg(&[3, 5]).reduction_number(), 2);
        assert_eq!(sg(&MONOMIAL_CURVE).reduction_number(), 3);
    }

    #[test]
    fn delta() {
        assert_eq!(sg(&[3, 5]).delta_invariant(), 0);
        assert_eq!(sg(&[1]).delta_invariant(), 0);
        assert_eq!(sg(&MONOMIAL_CURVE).delta_invariant(), 0);
        // Values from the brute-force δ oracle in tests/semigroup_oracle.rs.
        assert!(sg(&[4, 6, 11]).assoc_graded_is_cm());
        assert_eq!(sg(&[4, 5, 11]).delta_invariant(), 1);
        assert!(!sg(&[4, 5, 11]).assoc_graded_is_cm());
    }

    #[test]
    fn canonical_modules() {
        let s = sg(&[3, 5]);
        assert_eq!(s.canonical_module(), s.as_module());
        assert!(s.is_symmetric());
        let n = sg(&[1]);
        assert_eq!(n.canonical_module(), n.as_module());
        // f = 2: z ∈ K iff 2 − z ∉ S, so K = {0, 1} ∪ [3, ∞)
        let k = sg(&[3, 4, 5]).canonical_module();
        assert_eq!((k.sporadic(), k.threshold()), (&[0, 1][..], 3));
        assert!(!sg(&[3, 4, 5]).is_symmetric());
    }

    #[test]
    fn canonical_quotient() {
        let c = sg(&MONOMIAL_CURVE);
        assert_eq!(c.h_canonical_artin(W).unwrap(), p(&[4, 4, 4, 1]));
        assert_eq!(c.cm_type(), 4);
        let s = sg(&[3, 5]);
        let hf: Vec<usize> = (0..4).map(|n| s.canonical_quotient_hf(n)).collect();
        assert_eq!(hf, vec![1, 1, 1, 0]);
        let n = sg(&[1]);
        assert_eq!((n.canonical_quotient_hf(0), n.canonical_quotient_hf(1)), (1, 0));
    }

    #[test]
    fn canonical_criteria() {
        assert!(sg(&MONOMIAL_CURVE).canonical_criterion(W).unwrap());
        assert!(sg(&[3, 5]).canonical_criterion(W).unwrap());
        // h(B) = 1 + 2z, h(ω_B) = 2 + z, r = 1.
        let s = sg(&[3, 4, 5]);
        assert_eq!(s.h_artin(W).unwrap(), p(&[1, 2]));
        assert_eq!(s.h_canonical_artin(W).unwrap(), p(&[2, 1]));
        assert!(s.canonical_criterion(W).unwrap());
    }

    #[test]
    fn dim1_classification() {
        let c = sg(&[1]).classify_dim1(W).unwrap();
        assert_eq!((c.a_invariant, c.regular, c.minimal_multiplicity), (-1, true, false));
        let c = sg(&[2, 3]).classify_dim1(W).unwrap();
        assert_eq!((c.a_invariant, c.regular, c.minimal_multiplicity), (0, false, true));
        let c = sg(&[3, 5]).classify_dim1(W).unwrap();
        assert_eq!((c.a_invariant, c.regular, c.minimal_multiplicity), (1, false, false));
        assert!(matches!(sg(&[4, 5, 11]).classify_dim1(W), Err(Error::Precondition(_))));
    }

    #[test]
    fn artinian_graded() {
        let g = sg(&[3, 5]).build_artinian_graded().unwrap();
        assert_eq!(g.dims(), &[1, 1, 1]);
        assert_eq!(g.socle_dims(), LaurentPoly::monomial(2, 1));
        let g = sg(&[1]).build_artinian_graded().unwrap();
        assert_eq!(g.dims(), &[1]);
        let g = sg(&[3, 4, 5]).build_artinian_graded().unwrap();
        assert_eq!(g.dims(), &[1, 2]);
        assert_eq!(g.socle_dims(), LaurentPoly::monomial(1, 2));
        assert!(matches!(
            sg(&[4, 5, 11]).build_artinian_graded(),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn module_set_ops() {
        let s = sg(&[3, 5]);
        let k = s.as_module();
        assert_eq!(k.sum(&k), k);
        assert_eq!(k.union(&s.power_module(1)), k);
        assert_eq!(k.intersection(&s.power_module(1)), s.power_module(1));
        let shifted = k.translate(-2);
        assert_eq!(shifted.min_element(), -2);
        assert!(shifted.contains(1) && !shifted.contains(0));
        let e: Vec<i64> = s.power_module(1).elements_below(12).collect();
        assert_eq!(e, vec![3, 5, 6, 8, 9, 10, 11]);
    }
}
