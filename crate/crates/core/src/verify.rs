//! Corpus sweeps that check the closed forms against the brute-force oracle
//! and against each other.
//!
//! Two corpora are swept: every hypersurface module up to given bounds on
//! `e` and `μ`, and a seeded family of random numerical semigroups. Each
//! instance is checked independently, so both sweeps go through
//! [`Execution::map`]; the tallies are folded in input order.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::gradedhom::{from_hypersurface, hom_dims, verify_app5};
use crate::hypersurface::{gorenstein_shape_check, HypersurfaceModule};
use crate::laurent::LaurentPoly;
use crate::par::Execution;
use crate::semigroup::NumericalSemigroup;

pub const DEFAULT_SEED: u64 = 1729;
pub const DEFAULT_SEMIGROUP_COUNT: usize = 100;
pub const DEFAULT_MAX_GENERATOR: i64 = 30;

/// Outcome of one named check on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
}

fn check(name: &'static str, passed: bool) -> Check {
    Check { name, passed }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
}

/// Aggregated results of a sweep: per-check tallies and the instances that
/// failed anything.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub instances: usize,
    pub checks: BTreeMap<&'static str, Tally>,
    pub failures: Vec<Failure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: String,
    pub checks: Vec<&'static str>,
}

impl CorpusReport {
    fn from_results(results: Vec<(String, Vec<Check>)>) -> Self {
        let mut report = CorpusReport { instances: results.len(), ..Default::default() };
        for (instance, checks) in results {
            let mut failed = Vec::new();
            for c in checks {
                let tally = report.checks.entry(c.name).or_default();
                if c.passed {
                    tally.passed += 1;
                } else {
                    tally.failed += 1;
                    failed.push(c.name);
                }
            }
            if !failed.is_empty() {
                report.failures.push(Failure { instance, checks: failed });
            }
        }
        report
    }

    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn tally(&self, name: &str) -> Tally {
        self.checks.get(name).copied().unwrap_or_default()
    }
}

/// Coefficientwise `a ≤ b`.
fn dominated(a: &LaurentPoly, b: &LaurentPoly) -> bool {
    a.terms().all(|(d, c)| *c <= b.coeff(d)) && b.terms().all(|(_, c)| *c >= BigInt::from(0))
}

/// All checks on one hypersurface module.
pub fn check_hypersurface(m: &HypersurfaceModule) -> Result<Vec<Check>> {
    let (ring, module) = from_hypersurface(m);
    let hom = hom_dims(&module, &ring, Execution::Sequential)?;
    let dual = m.dual_filtration_dims();
    let h = m.hilbert_series();
    let alpha = m.alpha();
    let red = m.ring_reduction_number();
    let baby = m.baby_ulrich_check();
    let shape = gorenstein_shape_check(&h, m.mu() as i64);

    let mut checks = vec![
        check("oracle_equivalence", hom == dual),
        check("hom_injectivity_bound", dominated(&dual, &hom)),
        check("length_inequality", verify_app5(&module, &ring, Execution::Sequential)?),
        check("length_equality", BigInt::from(module.total_dim()) == hom.eval_at_one()),
        check("dual_length", dual.eval_at_one() == BigInt::from(m.e0())),
        check("series_at_one", h.eval_at_one() == BigInt::from(m.e0())),
        check("alpha_is_initial_degree", dual.min_degree() == Some(alpha)),
        check("alpha_bound", alpha <= red),
        check("a_invariant_bound", m.a_invariant() >= red - alpha),
        check("a_invariant_equality", m.a_invariant() == red - alpha),
        check("baby_ulrich", baby.consistent() && baby.ulrich == (m.e0() == m.mu() as i64)),
        check(
            "adic_shift_shape",
            m.dual_is_adic_shift() == (shape == Some(m.i_invariant())),
        ),
        check("adic_shift_some_shape", m.dual_is_adic_shift() == shape.is_some()),
        check("initial_summand_bound", m.lemma_halpha_check()),
        check("hom_ring_self", hom_dims(ring.as_module(), &ring, Execution::Sequential)? == ring.dims_poly()),
    ];
    let a = m.a();
    if a.iter().all(|&x| x <= 2) && a.contains(&2) {
        let twos = a.iter().filter(|&&x| x == 2).count() as i64;
        let all_two = a.iter().all(|&x| x == 2);
        checks.push(check(
            "min_mult_type_link",
            m.dual_is_adic_shift() == all_two
                && twos == m.e0() - m.mu() as i64
                && all_two == (twos == m.mu() as i64),
        ));
    }
    Ok(checks)
}

pub fn hypersurface_corpus(max_e: i64, max_mu: usize, exec: Execution) -> Result<CorpusReport> {
    let corpus = HypersurfaceModule::corpus(max_e, max_mu);
    let results = exec.map(&corpus, |m| check_hypersurface(m).map(|c| (m.to_string(), c)));
    Ok(CorpusReport::from_results(results.into_iter().collect::<Result<_>>()?))
}

/// `count` numerical semigroups with 2 to 5 generators drawn from
/// `2..=max_generator`, deterministic in `seed`.
pub fn random_semigroups(count: usize, max_generator: i64, seed: u64) -> Vec<NumericalSemigroup> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    if max_generator < 3 {
        return out;
    }
    while out.len() < count {
        let k = rng.gen_range(2..=5);
        let gens: Vec<i64> = (0..k).map(|_| rng.gen_range(2..=max_generator)).collect();
        if let Ok(s) = NumericalSemigroup::new(&gens) {
            out.push(s);
        }
    }
    out
}

/// All checks on one semigroup ring.
pub fn check_semigroup(s: &NumericalSemigroup, window: usize) -> Result<Vec<Check>> {
    let h_ring = s.h_ring(window)?;
    let h_artin = s.h_artin(window)?;
    let delta = s.delta_invariant();
    let r = s.reduction_number();
    let e0 = h_ring.multiplicity();
    let e1 = h_ring.hilbert_coefficient(1)?;
    let a_min = BigInt::from(s.multiplicity());

    let artin_length: usize = (0..=r).map(|n| s.artin_quotient_hf(n)).sum();
    let mut checks = vec![
        check("e1_bound", e1 <= &e0 * BigInt::from(r)),
        check("valabrega_valla", (delta == 0) == (h_ring == h_artin)),
        check("symmetric_canonical", (s.canonical_module() == s.as_module()) == s.is_symmetric()),
        check("multiplicity", e0 == a_min),
        check("artin_length", BigInt::from(artin_length) == a_min),
        check("canonical_length", h_canonical_length(s, window)? == a_min),
        check("stable_modules", stable_modules(s, r)),
        check("monotone_filtration", monotone_filtration(s, r)),
    ];
    if delta == 0 {
        checks.push(check("reduction_is_degree", h_ring.max_degree() == Some(r as i64)));
        let g = s.build_artinian_graded()?;
        checks.push(check("artinian_dims", g.dims_poly() == h_artin));
        checks.push(check(
            "artinian_hom_self",
            hom_dims(g.as_module(), &g, Execution::Sequential)? == g.dims_poly(),
        ));
        checks.push(check("gorenstein_symmetric", !g.is_gorenstein() || h_artin.is_symmetric()));
    }
    if r == 2 {
        let h1 = h_ring.coeff(1);
        let ty = BigInt::from(s.cm_type());
        checks.push(check(
            "reduction_two_type",
            s.canonical_criterion(window)? == (ty == &e0 - h1 - 1),
        ));
    }
    Ok(checks)
}

fn h_canonical_length(s: &NumericalSemigroup, window: usize) -> Result<BigInt> {
    Ok(s.h_canonical_artin(window)?.eval_at_one())
}

fn stable_modules(s: &NumericalSemigroup, r: usize) -> bool {
    let mut modules: Vec<_> = (0..=r + 1).map(|n| s.power_module(n)).collect();
    modules.push(s.canonical_module());
    modules.iter().all(|e| {
        e.sporadic()
            .iter()
            .all(|&x| s.generators().iter().all(|&g| e.contains(x + g)))
    })
}

fn monotone_filtration(s: &NumericalSemigroup, r: usize) -> bool {
    (0..=r + 1).all(|n| {
        let (cur, next) = (s.power_module(n), s.power_module(n + 1));
        next.is_subset_of(&cur)
            && cur.translate(s.multiplicity()).is_subset_of(&next)
            && cur.threshold() <= s.conductor() + n as i64 * s.max_generator()
    })
}

pub fn semigroup_corpus(semigroups: &[NumericalSemigroup], window: usize, exec: Execution) -> Result<CorpusReport> {
    let results = exec.map(semigroups, |s| check_semigroup(s, window).map(|c| (s.to_string(), c)));
    Ok(CorpusReport::from_results(results.into_iter().collect::<Result<_>>()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::DEFAULT_WINDOW;

    #[test]
    fn small_hypersurface_corpus_is_green() {
        let r = hypersurface_corpus(3, 2, Execution::Sequential).unwrap();
        assert_eq!(r.instances, 14);
        assert!(r.all_passed(), "{:?}", r.failures);
        assert_eq!(r.tally("oracle_equivalence").passed, 14);
    }

    #[test]
    fn empty_corpus() {
        let r = hypersurface_corpus(1, 3, Execution::Parallel).unwrap();
        assert_eq!(r.instances, 0);
        assert!(r.all_passed());
    }

    #[test]
    fn random_semigroups_are_reproducible() {
        let a = random_semigroups(10, 30, 7);
        let b = random_semigroups(10, 30, 7);
        assert_eq!(a, b);
        assert!(a.iter().all(|s| s.max_generator() <= 30));
        assert_ne!(a, random_semigroups(10, 30, 8));
    }

    #[test]
    fn semigroup_checks() {
        let corpus: Vec<_> = [vec![3, 5], vec![4, 5, 11], vec![13, 18, 23, 28, 33], vec![1]]
            .iter()
            .map(|g| NumericalSemigroup::new(g).unwrap())
            .collect();
        let r = semigroup_corpus(&corpus, DEFAULT_WINDOW, Execution::Sequential).unwrap();
        assert!(r.all_passed(), "{:?}", r.failures);
        assert_eq!(r.tally("reduction_two_type").passed, 1);
    }

    #[test]
    fn failures_are_recorded() {
        let r = CorpusReport::from_results(vec![
            ("x".into(), vec![check("a", true), check("b", false)]),
            ("y".into(), vec![check("a", true)]),
        ]);
        assert!(!r.all_passed());
        assert_eq!(r.failures, vec![Failure { instance: "x".into(), checks: vec!["b"] }]);
        assert_eq!(r.tally("a"), Tally { passed: 2, failed: 0 });
    }
}
