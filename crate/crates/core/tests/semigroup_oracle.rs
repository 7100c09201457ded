//! Brute-force cross-checks for the semigroup backend.
//!
//! The oracle works on plain membership tables up to a fixed horizon and
//! never touches `SemigroupModule`: `m^n` is built as the set of sums of
//! `n` generators plus `S`, and every length is a direct count.

use assocgr::verify::random_semigroups;
use assocgr::{LaurentPoly, NumericalSemigroup, DEFAULT_WINDOW};

struct Oracle {
    a: usize,
    horizon: usize,
    powers: Vec<Vec<bool>>,
    canonical_powers: Vec<Vec<bool>>,
    canonical: Vec<bool>,
}

impl Oracle {
    fn new(gens: &[usize], levels: usize) -> Self {
        let a = *gens.iter().min().unwrap();
        let g_max = *gens.iter().max().unwrap();
        // Frobenius number < a·g_max, and m^n contains everything from
        // n·g_max + conductor on.
        let horizon = a * g_max + (levels + 2) * g_max + 2 * a;
        let big = horizon + a * g_max;
        let mut s = vec![false; big];
        s[0] = true;
        for x in 0..big {
            if s[x] {
                for &g in gens {
                    if x + g < big {
                        s[x + g] = true;
                    }
                }
            }
        }
        let f = (0..big).rev().find(|&x| !s[x]).map_or(-1, |x| x as i64);
        let canonical: Vec<bool> = (0..big as i64)
            .map(|z| {
                let w = f - z;
                !(w >= 0 && s[w as usize])
            })
            .collect();
        let mut powers = vec![s.clone()];
        for _ in 0..levels {
            let prev = powers.last().unwrap();
            let mut next = vec![false; big];
            for x in 0..big {
                if prev[x] {
                    for &g in gens {
                        if x + g < big {
                            next[x + g] = true;
                        }
                    }
                }
            }
            powers.push(next);
        }
        let canonical_powers = powers
            .iter()
            .map(|p| {
                let mut out = vec![false; big];
                for x in (0..big).filter(|&x| p[x]) {
                    for k in (0..big - x).filter(|&k| canonical[k]) {
                        out[x + k] = true;
                    }
                }
                out
            })
            .collect();
        Self { a, horizon, powers, canonical_powers, canonical }
    }

    fn count(&self, pred: impl Fn(usize) -> bool) -> usize {
        (0..self.horizon).filter(|&x| pred(x)).count()
    }

    fn shifted(&self, set: &[bool], x: usize) -> bool {
        x >= self.a && set[x - self.a]
    }

    fn h_ring(&self, n: usize) -> usize {
        self.count(|x| self.powers[n][x] && !self.powers[n + 1][x])
    }

    fn h_artin(&self, n: usize) -> usize {
        let s = &self.powers[0];
        self.count(|x| self.powers[n][x] && !self.powers[n + 1][x] && !self.shifted(s, x))
    }

    fn h_canonical(&self, n: usize) -> usize {
        let (k, k1) = (&self.canonical_powers[n], &self.canonical_powers[n + 1]);
        self.count(|x| k[x] && !k1[x] && !self.shifted(&self.canonical, x))
    }

    fn delta(&self, levels: usize) -> usize {
        let s = &self.powers[0];
        (0..levels)
            .map(|n| {
                self.count(|x| {
                    self.powers[n + 1][x] && self.shifted(s, x) && !self.shifted(&self.powers[n], x)
                })
            })
            .sum()
    }

    fn reduction_number(&self, levels: usize) -> usize {
        (0..levels)
            .find(|&n| (0..self.horizon).all(|x| self.powers[n + 1][x] == self.shifted(&self.powers[n], x)))
            .expect("reduction number below the oracle's level count")
    }
}

fn seq(values: impl Iterator<Item = usize>) -> Vec<usize> {
    values.collect()
}

fn compare(gens: &[i64]) {
    let s = NumericalSemigroup::new(gens).unwrap();
    let ugens: Vec<usize> = s.generators().iter().map(|&g| g as usize).collect();
    let levels = s.multiplicity() as usize + 2;
    let o = Oracle::new(&ugens, levels + 1);
    let n = levels - 1;
    assert_eq!(seq((0..n).map(|k| s.hilbert_function_ring(k))), seq((0..n).map(|k| o.h_ring(k))), "{s} H_A");
    assert_eq!(seq((0..n).map(|k| s.artin_quotient_hf(k))), seq((0..n).map(|k| o.h_artin(k))), "{s} H_B");
    assert_eq!(
        seq((0..n).map(|k| s.canonical_quotient_hf(k))),
        seq((0..n).map(|k| o.h_canonical(k))),
        "{s} H_omega"
    );
    assert_eq!(s.reduction_number(), o.reduction_number(levels), "{s} r");
    assert_eq!(s.delta_invariant(), o.delta(levels), "{s} delta");
}

#[test]
fn named_semigroups_match_oracle() {
    for g in [
        &[1][..],
        &[2, 3],
        &[3, 5],
        &[3, 4, 5],
        &[4, 6, 11],
        &[4, 5, 11],
        &[13, 18, 23, 28, 33],
        &[5, 7, 9],
        &[6, 7, 15],
    ] {
        compare(g);
    }
}

#[test]
fn random_semigroups_match_oracle() {
    for s in random_semigroups(25, 20, 99) {
        compare(s.generators());
    }
}

#[test]
fn frozen_oracle_values() {
    // ⟨4,6,11⟩: δ = 0 by the oracle, so G is Cohen-Macaulay.
    let o = Oracle::new(&[4, 6, 11], 8);
    assert_eq!(o.delta(7), 0);
    let s = NumericalSemigroup::new(&[4, 6, 11]).unwrap();
    assert!(s.assoc_graded_is_cm());
    assert_eq!(s.h_ring(DEFAULT_WINDOW).unwrap(), LaurentPoly::from_coeffs(0, [1, 2, 1]));
    // ⟨4,5,11⟩: δ = 1, h_A = 1 + 2z + z^3 ≠ h_B = 1 + 2z + z^2.
    let o = Oracle::new(&[4, 5, 11], 8);
    assert_eq!(o.delta(7), 1);
    let s = NumericalSemigroup::new(&[4, 5, 11]).unwrap();
    assert_eq!(s.h_ring(DEFAULT_WINDOW).unwrap(), LaurentPoly::from_coeffs(0, [1, 2, 0, 1]));
    assert_eq!(s.h_artin(DEFAULT_WINDOW).unwrap(), LaurentPoly::from_coeffs(0, [1, 2, 1]));
}

#[test]
fn enumeration_bound_holds() {
    for s in random_semigroups(30, 30, 5) {
        for n in 0..6 {
            let m = s.power_module(n);
            assert!(m.threshold() <= s.conductor() + n as i64 * s.max_generator(), "{s} n={n}");
        }
    }
}

#[test]
fn concurrent_cache_reads_agree() {
    let s = NumericalSemigroup::new(&[13, 18, 23, 28, 33]).unwrap();
    let expected: Vec<usize> = (0..8).map(|n| NumericalSemigroup::new(s.generators()).unwrap().hilbert_function_ring(n)).collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..4)
            .map(|_| scope.spawn(|| (0..8).rev().map(|n| s.hilbert_function_ring(n)).collect::<Vec<_>>()))
            .collect();
        for h in handles {
            let mut got = h.join().unwrap();
            got.reverse();
            assert_eq!(got, expected);
        }
    });
}
