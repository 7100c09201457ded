//! Brute-force graded linear algebra over finite-dimensional standard-graded
//! algebras.
//!
//! An algebra `G = ⊕_{j=0}^{D} G_j` is stored as its dimension vector and,
//! for every degree-one basis element `g`, the matrices of multiplication by
//! `g` from `G_j` to `G_{j+1}`. Since `G` is generated in degree one, a linear
//! map between graded modules is `G`-linear as soon as it commutes with these
//! generators, so `*Hom` spaces reduce to kernels of explicit linear systems.
//!
//! This module deliberately shares nothing with the closed-form backends
//! except [`LaurentPoly`], so agreement between the two is a real check.

use num_rational::BigRational;
use num_traits::Zero;

pub use crate::linalg::Matrix;

use crate::error::{Error, Result};
use crate::hypersurface::HypersurfaceModule;
use crate::laurent::LaurentPoly;
use crate::par::Execution;

/// A finitely generated graded module over a [`GradedAlgebra`], concentrated
/// in degrees `0..dims.len()`.
///
/// `gen_action[g][j]` is a `dims[j+1] × dims[j]` matrix (columns are images
/// of basis vectors). Actions out of the top degree are zero and not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedModuleRep {
    dims: Vec<usize>,
    gen_action: Vec<Vec<Matrix>>,
}

impl GradedModuleRep {
    /// Checks shapes and that the generator actions commute.
    pub fn new(dims: Vec<usize>, gen_action: Vec<Vec<Matrix>>) -> Result<Self> {
        let m = Self { dims, gen_action };
        m.check_shapes()?;
        m.check_commuting()?;
        Ok(m)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn num_generators(&self) -> usize {
        self.gen_action.len()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn dims_poly(&self) -> LaurentPoly {
        LaurentPoly::from_coeffs(0, self.dims.iter().map(|&d| d as i64))
    }

    fn dim(&self, j: i64) -> usize {
        if j < 0 {
            0
        } else {
            self.dims.get(j as usize).copied().unwrap_or(0)
        }
    }

    /// Multiplication by generator `g` from degree `j` to `j + 1`, with the
    /// zero map filled in at the top.
    fn action(&self, g: usize, j: i64) -> Matrix {
        match self.gen_action[g].get(j as usize) {
            Some(m) if j >= 0 => m.clone(),
            _ => Matrix::zeros(self.dim(j + 1), self.dim(j)),
        }
    }

    fn check_shapes(&self) -> Result<()> {
        let top = self.dims.len().saturating_sub(1);
        for (g, per_degree) in self.gen_action.iter().enumerate() {
            if per_degree.len() != top {
                return Err(Error::InvalidInput(format!(
                    "generator {g} has {} action matrices, expected {top}",
                    per_degree.len()
                )));
            }
            for (j, m) in per_degree.iter().enumerate() {
                if (m.rows(), m.cols()) != (self.dims[j + 1], self.dims[j]) {
                    return Err(Error::InvalidInput(format!(
                        "generator {g} in degree {j}: matrix is {}x{}, expected {}x{}",
                        m.rows(),
                        m.cols(),
                        self.dims[j + 1],
                        self.dims[j]
                    )));
                }
            }
        }
        Ok(())
    }

    fn check_commuting(&self) -> Result<()> {
        let n = self.num_generators();
        for j in 0..self.dims.len() as i64 {
            for a in 0..n {
                for b in a + 1..n {
                    let ab = self.action(a, j + 1).mul(&self.action(b, j));
                    let ba = self.action(b, j + 1).mul(&self.action(a, j));
                    if ab != ba {
                        return Err(Error::InvalidInput(format!(
                            "generators {a} and {b} do not commute on degree {j}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A standard-graded Artinian algebra with `G_0 = ℚ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    inner: GradedModuleRep,
}

impl GradedAlgebra {
    /// Validates the presentation: `dims[0] = 1`, one generator per basis
    /// vector of `G_1` acting on `1` as that basis vector, commuting actions,
    /// and generation in degree one (the images of `G_j` under the generators
    /// span `G_{j+1}`).
    pub fn new(dims: Vec<usize>, gen_action: Vec<Vec<Matrix>>) -> Result<Self> {
        if dims.first() != Some(&1) {
            return Err(Error::InvalidInput("degree-0 part must be one-dimensional".into()));
        }
        let n_gens = dims.get(1).copied().unwrap_or(0);
        if gen_action.len() != n_gens {
            return Err(Error::InvalidInput(format!(
                "{} generator actions for a {n_gens}-dimensional degree-1 part",
                gen_action.len()
            )));
        }
        let inner = GradedModuleRep::new(dims, gen_action)?;
        for g in 0..n_gens {
            let unit = inner.action(g, 0);
            let expected: Vec<BigRational> = (0..n_gens)
                .map(|i| BigRational::from_integer(u8::from(i == g).into()))
                .collect();
            if unit.column(0) != expected {
                return Err(Error::InvalidInput(format!(
                    "generator {g} does not act on 1 as basis vector {g}"
                )));
            }
        }
        for j in 1..inner.dims.len().saturating_sub(1) {
            let parts: Vec<Matrix> = (0..n_gens).map(|g| inner.action(g, j as i64)).collect();
            let refs: Vec<&Matrix> = parts.iter().collect();
            let span = Matrix::hstack(&refs, inner.dims[j + 1]);
            if span.rank() != inner.dims[j + 1] {
                return Err(Error::InvalidInput(format!(
                    "degree {} is not generated by degree 1",
                    j + 1
                )));
            }
        }
        Ok(Self { inner })
    }

    /// `ℚ[x]/(x^len)` graded by `deg x = 1`.
    pub fn truncated_polynomial(len: usize) -> Self {
        let len = len.max(1);
        let dims = vec![1; len];
        let action = if len > 1 {
            vec![(0..len - 1).map(|_| Matrix::identity(1)).collect()]
        } else {
            Vec::new()
        };
        Self::new(dims, action).expect("truncated polynomial ring is standard graded")
    }

    pub fn dims(&self) -> &[usize] {
        self.inner.dims()
    }

    pub fn num_generators(&self) -> usize {
        self.inner.num_generators()
    }

    pub fn total_dim(&self) -> usize {
        self.inner.total_dim()
    }

    pub fn dims_poly(&self) -> LaurentPoly {
        self.inner.dims_poly()
    }

    /// `G` as a module over itself.
    pub fn as_module(&self) -> &GradedModuleRep {
        &self.inner
    }

    /// Dimension of the socle `{v : g·v = 0 for all g}` in each degree.
    pub fn socle_dims(&self) -> LaurentPoly {
        let m = &self.inner;
        LaurentPoly::from_terms((0..m.dims.len()).map(|j| {
            let parts: Vec<Matrix> = (0..m.num_generators()).map(|g| m.action(g, j as i64)).collect();
            let refs: Vec<&Matrix> = parts.iter().collect();
            let stacked = Matrix::vstack(&refs, m.dims[j]);
            (j as i64, (m.dims[j] - stacked.rank()) as i64)
        }))
    }

    pub fn is_gorenstein(&self) -> bool {
        self.socle_dims().eval_at_one() == 1.into()
    }
}

/// The linear system whose kernel is `*Hom_G(M, G)_n`.
///
/// Unknowns are the entries of the blocks `λ_j : M_j → G_{j+n}`, laid out
/// block by block in column-major order; rows are the entries of
/// `λ_{j+1}∘g_M − g_G∘λ_j` for every generator `g` and degree `j`.
pub struct HomSystem {
    pub shift: i64,
    pub matrix: Matrix,
}

impl HomSystem {
    pub fn new(module: &GradedModuleRep, ring: &GradedAlgebra, shift: i64) -> Result<Self> {
        let g_mod = ring.as_module();
        if module.num_generators() != g_mod.num_generators() {
            return Err(Error::InvalidInput(format!(
                "module carries {} generator actions, algebra has {} generators",
                module.num_generators(),
                g_mod.num_generators()
            )));
        }
        let top = module.dims.len() as i64;
        // offsets[j] = index of the first unknown in block λ_j
        let mut offsets = Vec::with_capacity(top as usize + 1);
        let mut n_unknowns = 0;
        for j in 0..top {
            offsets.push(n_unknowns);
            n_unknowns += g_mod.dim(j + shift) * module.dim(j);
        }
        offsets.push(n_unknowns);
        let var = |j: i64, row: usize, col: usize| -> usize {
            offsets[j as usize] + col * g_mod.dim(j + shift) + row
        };

        let mut equations: Vec<Vec<(usize, BigRational)>> = Vec::new();
        for g in 0..module.num_generators() {
            for j in 0..top {
                let g_m = module.action(g, j); // M_j → M_{j+1}
                let g_g = g_mod.action(g, j + shift); // G_{j+n} → G_{j+n+1}
                let out_dim = g_mod.dim(j + shift + 1);
                for r in 0..out_dim {
                    for c in 0..module.dim(j) {
                        let mut eq = Vec::new();
                        // (λ_{j+1} g_M)[r][c] = Σ_k λ_{j+1}[r][k] g_M[k][c]
                        if j + 1 < top {
                            for k in 0..module.dim(j + 1) {
                                let coef = g_m.get(k, c);
                                if !coef.is_zero() {
                                    eq.push((var(j + 1, r, k), coef.clone()));
                                }
                            }
                        }
                        // (g_G λ_j)[r][c] = Σ_k g_G[r][k] λ_j[k][c]
                        for k in 0..g_mod.dim(j + shift) {
                            let coef = g_g.get(r, k);
                            if !coef.is_zero() {
                                eq.push((var(j, k, c), -coef.clone()));
                            }
                        }
                        if !eq.is_empty() {
                            equations.push(eq);
                        }
                    }
                }
            }
        }
        let mut matrix = Matrix::zeros(equations.len(), n_unknowns);
        for (i, eq) in equations.into_iter().enumerate() {
            for (v, coef) in eq {
                let cur = matrix.get(i, v) + coef;
                matrix.set_rational(i, v, cur);
            }
        }
        Ok(Self { shift, matrix })
    }

    pub fn num_unknowns(&self) -> usize {
        self.matrix.cols()
    }

    pub fn solution_dim(&self) -> usize {
        self.num_unknowns() - self.matrix.rank()
    }

    pub fn solution_basis(&self) -> Vec<Vec<BigRational>> {
        self.matrix.kernel()
    }
}

/// `dim *Hom_G(M, G)_n` for every shift `n`, one linear system per degree.
pub fn hom_dims(module: &GradedModuleRep, ring: &GradedAlgebra, exec: Execution) -> Result<LaurentPoly> {
    let lo = -(module.dims.len() as i64 - 1);
    let hi = ring.dims().len() as i64 - 1;
    let shifts: Vec<i64> = (lo..=hi).collect();
    let dims = exec.map(&shifts, |&n| {
        HomSystem::new(module, ring, n).map(|s| (n, s.solution_dim() as i64))
    });
    Ok(LaurentPoly::from_terms(dims.into_iter().collect::<Result<Vec<_>>>()?))
}

/// `ℓ(M) ≤ ℓ(*Hom_G(M, G))`.
pub fn verify_app5(module: &GradedModuleRep, ring: &GradedAlgebra, exec: Execution) -> Result<bool> {
    let hom = hom_dims(module, ring, exec)?;
    Ok(num_bigint::BigInt::from(module.total_dim()) <= hom.eval_at_one())
}

/// Matrix realization of `G(A)` and `G(M)` for `A = Q/(Π^e)` and
/// `M = ⊕ Q/(Π^{a_i})`: a truncated polynomial ring and a direct sum of
/// truncated polynomial rings.
pub fn from_hypersurface(m: &HypersurfaceModule) -> (GradedAlgebra, GradedModuleRep) {
    let ring = GradedAlgebra::truncated_polynomial(m.e() as usize);
    let a = m.a();
    let top = *a.iter().max().unwrap() as usize;
    // basis of M_j: summands with a_i > j, in summand order
    let basis: Vec<Vec<usize>> = (0..top)
        .map(|j| (0..a.len()).filter(|&i| a[i] as usize > j).collect())
        .collect();
    let dims: Vec<usize> = basis.iter().map(Vec::len).collect();
    let action = (0..top - 1)
        .map(|j| {
            let mut mat = Matrix::zeros(dims[j + 1], dims[j]);
            for (col, i) in basis[j].iter().enumerate() {
                if let Some(row) = basis[j + 1].iter().position(|k| k == i) {
                    mat.set(row, col, 1);
                }
            }
            mat
        })
        .collect();
    // over e = 1 the ring is the field and has no generators
    let actions = if ring.num_generators() == 1 { vec![action] } else { Vec::new() };
    let module = GradedModuleRep::new(dims, actions).expect("cyclic summands commute");
    (ring, module)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SEQ: Execution = Execution::Sequential;

    fn p(start: i64, cs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(start, cs.iter().copied())
    }

    /// `ℚ[x,y]/(x,y)^2`.
    fn square_of_maximal() -> GradedAlgebra {
        GradedAlgebra::new(
            vec![1, 2],
            vec![
                vec![Matrix::from_rows(&[[1], [0]])],
                vec![Matrix::from_rows(&[[0], [1]])],
            ],
        )
        .unwrap()
    }

    #[test]
    fn hom_of_truncations() {
        let g = GradedAlgebra::truncated_polynomial(3);
        let m = GradedAlgebra::truncated_polynomial(2);
        assert_eq!(hom_dims(m.as_module(), &g, SEQ).unwrap(), p(1, &[1, 1]));
        assert!(verify_app5(m.as_module(), &g, SEQ).unwrap());
    }

    #[test]
    fn hom_of_ring_to_itself() {
        let g = GradedAlgebra::truncated_polynomial(3);
        assert_eq!(hom_dims(g.as_module(), &g, SEQ).unwrap(), g.dims_poly());
        let k = GradedAlgebra::truncated_polynomial(1);
        assert_eq!(hom_dims(k.as_module(), &k, SEQ).unwrap(), LaurentPoly::one());
        let q = square_of_maximal();
        assert_eq!(hom_dims(q.as_module(), &q, SEQ).unwrap(), p(0, &[1, 2]));
    }

    #[test]
    fn hom_into_non_gorenstein() {
        // Hom(k, k[x,y]/(x,y)^2) is the socle: two copies of k in degree 1.
        let q = square_of_maximal();
        let k = GradedModuleRep::new(vec![1], vec![vec![], vec![]]).unwrap();
        assert_eq!(hom_dims(&k, &q, SEQ).unwrap(), p(1, &[2]));
    }

    #[test]
    fn socles() {
        assert_eq!(GradedAlgebra::truncated_polynomial(3).socle_dims(), p(2, &[1]));
        assert_eq!(square_of_maximal().socle_dims(), p(1, &[2]));
        assert_eq!(GradedAlgebra::truncated_polynomial(1).socle_dims(), LaurentPoly::one());
        assert!(GradedAlgebra::truncated_polynomial(4).is_gorenstein());
        assert!(!square_of_maximal().is_gorenstein());
    }

    #[test]
    fn hypersurface_realizations() {
        let (g, m) = from_hypersurface(&HypersurfaceModule::new(3, vec![2]).unwrap());
        assert_eq!((g.dims(), m.dims()), (&[1, 1, 1][..], &[1, 1][..]));
        let (_, m) = from_hypersurface(&HypersurfaceModule::new(4, vec![1, 2]).unwrap());
        assert_eq!(m.dims(), &[2, 1]);
        let (_, m) = from_hypersurface(&HypersurfaceModule::new(5, vec![1, 1, 1]).unwrap());
        assert_eq!(m.dims(), &[3]);
    }

    #[test]
    fn solutions_satisfy_system() {
        let (g, m) = from_hypersurface(&HypersurfaceModule::new(5, vec![2, 3, 5]).unwrap());
        for n in -2..=4 {
            let sys = HomSystem::new(&m, &g, n).unwrap();
            for v in sys.solution_basis() {
                assert!(sys.matrix.mul_vec(&v).iter().all(Zero::is_zero));
            }
        }
    }

    #[test]
    fn rejects_bad_presentations() {
        // x acting on 1 as 2x
        let bad_unit = GradedAlgebra::new(vec![1, 1], vec![vec![Matrix::from_rows(&[[2]])]]);
        assert!(matches!(bad_unit, Err(Error::InvalidInput(_))));
        // degree 2 not generated: x·x = 0 but dims[2] = 1
        let not_standard = GradedAlgebra::new(
            vec![1, 1, 1],
            vec![vec![Matrix::identity(1), Matrix::zeros(1, 1)]],
        );
        assert!(not_standard.is_err());
        // non-commuting actions on a module
        let nc = GradedModuleRep::new(
            vec![2, 2, 2],
            vec![
                vec![Matrix::from_rows(&[[0, 1], [1, 0]]), Matrix::identity(2)],
                vec![Matrix::from_rows(&[[1, 1], [0, 1]]), Matrix::from_rows(&[[1, 0], [1, 1]])],
            ],
        );
        assert!(nc.is_err());
        let wrong_shape = GradedModuleRep::new(vec![1, 2], vec![vec![Matrix::zeros(1, 1)]]);
        assert!(wrong_shape.is_err());
    }
}
