//! Density matrices and the standard entanglement and correlation measures
//! used by every other module.
//!
//! Conventions:
//!
//! - all entropies are in nats (natural logarithm);
//! - eigenvalues of Hermitian operators are computed on the explicitly
//!   hermitized matrix (M + M†)/2 so floating-point asymmetry cannot leak
//!   into spectra;
//! - eigenvalues in [-1e-8, 0) are clamped to 0 inside entropy computations,
//!   anything more negative is rejected as unphysical;
//! - 0·ln 0 := 0 by explicit branch.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerance for Hermiticity checks on construction.
pub const HERMITICITY_TOL: f64 = 1e-12;
/// Tolerance for trace-one checks on normalized states.
pub const TRACE_TOL: f64 = 1e-12;
/// Eigenvalues at or above this floor are treated as roundoff and clamped to
/// zero in entropy computations; anything below fails as not-a-state.
pub const EIGENVALUE_FLOOR: f64 = -1e-8;

/// (M + M†)/2.
pub fn hermitize(m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    (m + m.adjoint()).scale(0.5)
}

/// max_ij |M[i,j] - conj(M[j,i])|.
pub fn hermiticity_residual(m: &DMatrix<Complex64>) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i..n {
            let d = (m[(i, j)] - m[(j, i)].conj()).norm();
            worst = worst.max(d);
        }
    }
    worst
}

/// -Σ w ln w over the given weights, with zero terms skipped.
///
/// The weights are not required to sum to one; callers that want a proper
/// Shannon entropy must pass a probability vector.
pub fn weight_entropy<I: IntoIterator<Item = f64>>(weights: I) -> f64 {
    weights
        .into_iter()
        .filter(|&w| w > 0.0)
        .map(|w| -w * w.ln())
        .sum()
}

/// Binary entropy h(x) = -x ln x - (1-x) ln(1-x) in nats.
pub fn binary_entropy(x: f64) -> f64 {
    weight_entropy([x, 1.0 - x])
}

/// A complex Hermitian matrix carrying its normalization state.
///
/// `raw` constructors accept any Hermitian matrix (paper-reproduction
/// matrices may be unnormalized or indefinite); `new` additionally demands
/// unit trace and positive semidefiniteness. The `normalized` flag is set
/// exactly when the trace is within [`TRACE_TOL`] of one.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    mat: DMatrix<Complex64>,
    normalized: bool,
}

impl DensityMatrix {
    /// Wrap a Hermitian matrix without physicality checks.
    pub fn raw(mat: DMatrix<Complex64>) -> Result<Self> {
        if mat.nrows() != mat.ncols() {
            return Err(Error::NotSquare {
                rows: mat.nrows(),
                cols: mat.ncols(),
            });
        }
        if mat.nrows() == 0 {
            return Err(Error::Validation("empty matrix".into()));
        }
        if mat.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Validation("non-finite matrix entry".into()));
        }
        let asym = hermiticity_residual(&mat);
        if asym > HERMITICITY_TOL {
            return Err(Error::NotHermitian {
                max_asymmetry: asym,
            });
        }
        let trace: Complex64 = mat.diagonal().iter().sum();
        let normalized = (trace.re - 1.0).abs() <= TRACE_TOL;
        Ok(Self { mat, normalized })
    }

    /// Wrap a full physical state: Hermitian, unit trace, positive
    /// semidefinite.
    pub fn new(mat: DMatrix<Complex64>) -> Result<Self> {
        let rho = Self::raw(mat)?;
        if !rho.normalized {
            return Err(Error::NotNormalized { trace: rho.trace() });
        }
        let min = rho.min_eigenvalue();
        if min < -1e-10 {
            return Err(Error::NotPositive {
                min_eigenvalue: min,
            });
        }
        Ok(rho)
    }

    /// |ψ⟩⟨ψ| for the given amplitude vector, normalized.
    pub fn from_pure(psi: &DVector<Complex64>) -> Result<Self> {
        let norm = psi.norm();
        if !(norm.is_finite() && norm > 0.0) {
            return Err(Error::Validation("zero or non-finite state vector".into()));
        }
        let v = psi.unscale(norm);
        let mat = &v * v.adjoint();
        Self::raw(hermitize(&mat))
    }

    /// I/d.
    pub fn maximally_mixed(dim: usize) -> Self {
        let mat = DMatrix::from_diagonal_element(
            dim,
            dim,
            Complex64::new(1.0 / dim as f64, 0.0),
        );
        Self {
            mat,
            normalized: true,
        }
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.mat
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    /// Real part of the trace (the imaginary part vanishes by Hermiticity).
    pub fn trace(&self) -> f64 {
        self.mat.diagonal().iter().map(|z| z.re).sum()
    }

    /// Divide by the trace. Fails on (near-)traceless matrices.
    pub fn normalize(&self) -> Result<Self> {
        let tr = self.trace();
        if !tr.is_finite() || tr.abs() < 1e-300 {
            return Err(Error::Validation(format!(
                "cannot normalize matrix with trace {tr:.3e}"
            )));
        }
        Ok(Self {
            mat: self.mat.unscale(tr),
            normalized: true,
        })
    }

    /// Eigenvalues of the hermitized matrix, ascending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let eig = hermitize(&self.mat).symmetric_eigenvalues();
        let mut vals: Vec<f64> = eig.iter().copied().collect();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        vals
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues()[0]
    }

    /// tr(ρ²).
    pub fn purity(&self) -> f64 {
        self.mat.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Tensor product ρ ⊗ σ.
    pub fn kronecker(&self, other: &Self) -> Self {
        Self {
            mat: self.mat.kronecker(&other.mat),
            normalized: self.normalized && other.normalized,
        }
    }
}

/// A normalized pure state of a bipartite system, stored as its d₁×d₂
/// amplitude matrix A with |ψ⟩ = Σ A[i,j] |i⟩⊗|j⟩.
#[derive(Debug, Clone)]
pub struct PureBipartiteState {
    amps: DMatrix<Complex64>,
}

impl PureBipartiteState {
    /// Normalize and wrap an amplitude matrix. The zero matrix is rejected.
    pub fn new(amps: DMatrix<Complex64>) -> Result<Self> {
        if amps.nrows() == 0 || amps.ncols() == 0 {
            return Err(Error::Validation("empty amplitude matrix".into()));
        }
        let norm = amps.norm();
        if !(norm.is_finite() && norm > 0.0) {
            return Err(Error::Validation(
                "zero or non-finite amplitude matrix".into(),
            ));
        }
        Ok(Self {
            amps: amps.unscale(norm),
        })
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.amps.nrows(), self.amps.ncols())
    }

    pub fn amplitudes(&self) -> &DMatrix<Complex64> {
        &self.amps
    }

    /// Squared Schmidt coefficients, descending. Computed from the Gram
    /// matrix on the smaller factor; tiny negative roundoff is clamped.
    pub fn schmidt_weights(&self) -> Vec<f64> {
        let gram = if self.amps.nrows() <= self.amps.ncols() {
            &self.amps * self.amps.adjoint()
        } else {
            self.amps.adjoint() * &self.amps
        };
        let mut w: Vec<f64> = hermitize(&gram)
            .symmetric_eigenvalues()
            .iter()
            .map(|&x| x.max(0.0))
            .collect();
        w.sort_by(|a, b| b.partial_cmp(a).unwrap());
        w
    }

    /// Reduced state of one factor (0 = first, 1 = second).
    pub fn reduced(&self, which: usize) -> Result<DensityMatrix> {
        let gram = match which {
            0 => &self.amps * self.amps.adjoint(),
            1 => (self.amps.adjoint() * &self.amps).transpose(),
            _ => {
                return Err(Error::Validation(format!(
                    "subsystem index {which} out of range (expected 0 or 1)"
                )))
            }
        };
        DensityMatrix::raw(hermitize(&gram))
    }

    /// |ψ⟩⟨ψ| on the joint d₁d₂-dimensional space.
    pub fn joint_density(&self) -> DensityMatrix {
        let (d1, d2) = self.dims();
        let v = DVector::from_fn(d1 * d2, |k, _| self.amps[(k / d2, k % d2)]);
        DensityMatrix::from_pure(&v).expect("normalized by construction")
    }
}

/// Entropy of entanglement of a bipartite pure state: the Shannon entropy of
/// its squared Schmidt coefficients, in nats.
pub fn schmidt_entropy(psi: &PureBipartiteState) -> f64 {
    weight_entropy(psi.schmidt_weights())
}

/// Von Neumann entropy -Σ λ ln λ in nats.
///
/// Requires a normalized state; eigenvalues below [`EIGENVALUE_FLOOR`] fail
/// as not-a-state, anything in [floor, 0) is clamped to zero.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    if !rho.is_normalized() {
        return Err(Error::NotNormalized { trace: rho.trace() });
    }
    let eigs = rho.eigenvalues();
    if eigs[0] < EIGENVALUE_FLOOR {
        return Err(Error::NotPositive {
            min_eigenvalue: eigs[0],
        });
    }
    Ok(weight_entropy(eigs.into_iter().map(|p| p.max(0.0))))
}

fn check_factors(rho: &DensityMatrix, dims: (usize, usize)) -> Result<()> {
    if dims.0 == 0 || dims.1 == 0 || dims.0 * dims.1 != rho.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            actual: dims.0 * dims.1,
        });
    }
    Ok(())
}

/// Partial transpose on one tensor factor. The result is Hermitian with the
/// same trace but is generally not positive, so it is returned raw.
pub fn partial_transpose(
    rho: &DensityMatrix,
    dims: (usize, usize),
    which: usize,
) -> Result<DensityMatrix> {
    check_factors(rho, dims)?;
    if which > 1 {
        return Err(Error::Validation(format!(
            "subsystem index {which} out of range (expected 0 or 1)"
        )));
    }
    let (d1, d2) = dims;
    let m = rho.matrix();
    let mut out = DMatrix::zeros(rho.dim(), rho.dim());
    for a in 0..d1 {
        for b in 0..d2 {
            for c in 0..d1 {
                for d in 0..d2 {
                    out[(a * d2 + b, c * d2 + d)] = if which == 0 {
                        m[(c * d2 + b, a * d2 + d)]
                    } else {
                        m[(a * d2 + d, c * d2 + b)]
                    };
                }
            }
        }
    }
    Ok(DensityMatrix {
        mat: out,
        normalized: rho.normalized,
    })
}

/// Smallest eigenvalue of the partial transpose; negative iff the state
/// fails the positive-partial-transpose test.
pub fn min_partial_transpose_eigenvalue(
    rho: &DensityMatrix,
    dims: (usize, usize),
    which: usize,
) -> Result<f64> {
    Ok(partial_transpose(rho, dims, which)?.min_eigenvalue())
}

/// Sum of the absolute values of the negative partial-transpose eigenvalues.
pub fn negativity(rho: &DensityMatrix, dims: (usize, usize), which: usize) -> Result<f64> {
    if !rho.is_normalized() {
        return Err(Error::NotNormalized { trace: rho.trace() });
    }
    let pt = partial_transpose(rho, dims, which)?;
    Ok(pt.eigenvalues().iter().filter(|&&x| x < 0.0).map(|x| -x).sum())
}

/// U √D U† of a Hermitian PSD matrix, with tiny negative roundoff clamped.
fn matrix_sqrt_psd(m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let eig = hermitize(m).symmetric_eigen();
    let u = eig.eigenvectors;
    let mut scaled = u.clone();
    for (j, lambda) in eig.eigenvalues.iter().enumerate() {
        let root = lambda.max(0.0).sqrt();
        for i in 0..scaled.nrows() {
            scaled[(i, j)] *= Complex64::new(root, 0.0);
        }
    }
    &scaled * u.adjoint()
}

/// The two-qubit spin flip (σy⊗σy) M* (σy⊗σy): conjugate entries in the
/// computational basis, then sandwich with the antidiagonal flip carrying
/// signs (-1, +1, +1, -1).
fn spin_flip(m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let mut y2 = DMatrix::zeros(4, 4);
    let signs = [-1.0, 1.0, 1.0, -1.0];
    for (i, s) in signs.iter().enumerate() {
        y2[(i, 3 - i)] = Complex64::new(*s, 0.0);
    }
    let conj = m.map(|z| z.conj());
    &y2 * conj * &y2
}

/// Wootters concurrence of a two-qubit state, in [0, 1].
///
/// Computed as max(0, λ₁-λ₂-λ₃-λ₄) with λᵢ the descending square roots of
/// the eigenvalues of √ρ ρ̃ √ρ, ρ̃ the spin-flipped state. Eigenvalues below
/// 1e-12 of the largest are genuine roundoff on rank-deficient states and
/// are set to zero before the square root.
pub fn concurrence(rho: &DensityMatrix) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            actual: rho.dim(),
        });
    }
    if !rho.is_normalized() {
        return Err(Error::NotNormalized { trace: rho.trace() });
    }
    let eigs = rho.eigenvalues();
    if eigs[0] < EIGENVALUE_FLOOR {
        return Err(Error::NotPositive {
            min_eigenvalue: eigs[0],
        });
    }
    let root = matrix_sqrt_psd(rho.matrix());
    let m = &root * spin_flip(rho.matrix()) * &root;
    let mut vals: Vec<f64> = hermitize(&m)
        .symmetric_eigenvalues()
        .iter()
        .map(|&x| x.max(0.0))
        .collect();
    vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let floor = (vals[0] * 1e-12).max(1e-24);
    let lambdas: Vec<f64> = vals
        .iter()
        .map(|&x| if x < floor { 0.0 } else { x.sqrt() })
        .collect();
    let c = lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3];
    Ok(c.clamp(0.0, 1.0))
}

/// Entanglement of formation of a two-qubit state in nats:
/// h((1 + √(1-C²))/2) with C the concurrence.
pub fn entanglement_of_formation(rho: &DensityMatrix) -> Result<f64> {
    let c = concurrence(rho)?;
    let x = 0.5 * (1.0 + (1.0 - c * c).max(0.0).sqrt());
    Ok(binary_entropy(x))
}

/// Mutual information S(ρ₁) + S(ρ₂) - S(ρ₁₂) in nats.
pub fn mutual_information(rho: &DensityMatrix, dims: (usize, usize)) -> Result<f64> {
    check_factors(rho, dims)?;
    let all = [dims.0, dims.1];
    let rho1 = partial_trace(rho, &all, &[0])?;
    let rho2 = partial_trace(rho, &all, &[1])?;
    Ok(von_neumann_entropy(&rho1)? + von_neumann_entropy(&rho2)? - von_neumann_entropy(rho)?)
}

/// Partial trace over the factors not listed in `keep`.
///
/// `dims` lists the factor dimensions in row-major (big-endian) index order;
/// `keep` must be strictly increasing, non-empty, and in range. Trace and
/// positivity are preserved.
pub fn partial_trace(
    rho: &DensityMatrix,
    dims: &[usize],
    keep: &[usize],
) -> Result<DensityMatrix> {
    let total: usize = dims.iter().product();
    if dims.is_empty() || total != rho.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            actual: total,
        });
    }
    if keep.is_empty()
        || keep.windows(2).any(|w| w[0] >= w[1])
        || keep.iter().any(|&k| k >= dims.len())
    {
        return Err(Error::Validation(format!(
            "bad keep set {keep:?} for {} factors",
            dims.len()
        )));
    }

    let strides: Vec<usize> = (0..dims.len())
        .map(|i| dims[i + 1..].iter().product())
        .collect();
    let traced: Vec<usize> = (0..dims.len()).filter(|i| !keep.contains(i)).collect();
    let kept_dim: usize = keep.iter().map(|&k| dims[k]).product();
    let traced_dim: usize = traced.iter().map(|&k| dims[k]).product();

    // Expand a joint index over the listed factors into a full-space index.
    let compose = |factors: &[usize], mut joint: usize| -> usize {
        let mut idx = 0;
        for &f in factors.iter().rev() {
            idx += (joint % dims[f]) * strides[f];
            joint /= dims[f];
        }
        idx
    };

    let m = rho.matrix();
    let mut out = DMatrix::zeros(kept_dim, kept_dim);
    for row in 0..kept_dim {
        let row_base = compose(keep, row);
        for col in 0..kept_dim {
            let col_base = compose(keep, col);
            let mut acc = Complex64::new(0.0, 0.0);
            for t in 0..traced_dim {
                let offset = compose(&traced, t);
                acc += m[(row_base + offset, col_base + offset)];
            }
            out[(row, col)] = acc;
        }
    }
    Ok(DensityMatrix {
        mat: out,
        normalized: rho.normalized,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    const LN2: f64 = std::f64::consts::LN_2;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    pub fn singlet() -> DensityMatrix {
        let amp = 1.0 / 2.0f64.sqrt();
        let v = DVector::from_vec(vec![c(0.0), c(amp), c(-amp), c(0.0)]);
        DensityMatrix::from_pure(&v).unwrap()
    }

    fn diag(entries: &[f64]) -> DensityMatrix {
        let mat = DMatrix::from_diagonal(&DVector::from_iterator(
            entries.len(),
            entries.iter().map(|&x| c(x)),
        ));
        DensityMatrix::raw(mat).unwrap()
    }

    #[test]
    fn entropy_of_pure_projector_is_zero() {
        let v = DVector::from_vec(vec![c(1.0), c(0.0), c(0.0)]);
        let rho = DensityMatrix::from_pure(&v).unwrap();
        assert_abs_diff_eq!(von_neumann_entropy(&rho).unwrap(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn entropy_of_maximally_mixed_qubit_is_ln2() {
        let rho = DensityMatrix::maximally_mixed(2);
        assert_abs_diff_eq!(von_neumann_entropy(&rho).unwrap(), LN2, epsilon = 1e-14);
    }

    #[test]
    fn entropy_of_exchange_spectrum() {
        // Spectrum of the normalized two-electron exchange state at f = 1/2.
        let rho = diag(&[3.0 / 14.0, 3.0 / 14.0, 3.0 / 14.0, 5.0 / 14.0]);
        let oracle = -(3.0 * (3.0 / 14.0) * (3.0f64 / 14.0).ln() + 5.0 / 14.0 * (5.0f64 / 14.0).ln());
        let s = von_neumann_entropy(&rho).unwrap();
        assert_abs_diff_eq!(s, oracle, epsilon = 1e-13);
        assert_abs_diff_eq!(s, 1.358_007_318_173_580_8, epsilon = 1e-12);
    }

    #[test]
    fn entropy_rejects_unnormalized_input() {
        let rho = diag(&[1.0, 1.0]);
        assert!(matches!(
            von_neumann_entropy(&rho),
            Err(Error::NotNormalized { .. })
        ));
    }

    #[test]
    fn entropy_rejects_indefinite_input() {
        let rho = diag(&[1.5, -0.5]);
        assert!(matches!(
            von_neumann_entropy(&rho),
            Err(Error::NotPositive { .. })
        ));
    }

    #[test]
    fn raw_rejects_non_hermitian_input() {
        let mut m = DMatrix::zeros(2, 2);
        m[(0, 1)] = c(1.0);
        assert!(matches!(
            DensityMatrix::raw(m),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn schmidt_entropy_of_product_state_is_zero() {
        let mut amps = DMatrix::zeros(2, 2);
        amps[(0, 0)] = c(1.0);
        let psi = PureBipartiteState::new(amps).unwrap();
        assert_eq!(schmidt_entropy(&psi), 0.0);
    }

    #[test]
    fn schmidt_entropy_of_bell_pair_is_ln2() {
        let mut amps = DMatrix::zeros(2, 2);
        amps[(0, 0)] = c(1.0);
        amps[(1, 1)] = c(1.0);
        let psi = PureBipartiteState::new(amps).unwrap();
        assert_abs_diff_eq!(schmidt_entropy(&psi), LN2, epsilon = 1e-14);
    }

    #[test]
    fn schmidt_entropy_of_geometric_amplitudes() {
        // Amplitudes ∝ (-i √t)^n on |n,n⟩ at t = 1/2 give the geometric
        // spectrum p_n = (1-t) t^n with entropy 2 ln 2.
        let n = 200;
        let t: f64 = 0.5;
        let mut amps = DMatrix::zeros(n, n);
        let mut a = Complex64::new(1.0, 0.0);
        let step = Complex64::new(0.0, -t.sqrt());
        for i in 0..n {
            amps[(i, i)] = a;
            a *= step;
        }
        let psi = PureBipartiteState::new(amps).unwrap();
        assert_abs_diff_eq!(schmidt_entropy(&psi), 2.0 * LN2, epsilon = 1e-12);
    }

    #[test]
    fn zero_vector_is_rejected() {
        let amps: DMatrix<Complex64> = DMatrix::zeros(2, 2);
        assert!(PureBipartiteState::new(amps).is_err());
        let v: DVector<Complex64> = DVector::zeros(3);
        assert!(DensityMatrix::from_pure(&v).is_err());
    }

    #[test]
    fn partial_transpose_of_product_state_keeps_spectrum() {
        let a = diag(&[0.25, 0.75]);
        let b = diag(&[0.6, 0.4]);
        let rho = a.kronecker(&b);
        let pt = partial_transpose(&rho, (2, 2), 1).unwrap();
        let before = rho.eigenvalues();
        let after = pt.eigenvalues();
        for (x, y) in before.iter().zip(after.iter()) {
            assert_abs_diff_eq!(x, y, epsilon = 1e-14);
        }
        assert!(after[0] >= -1e-14);
    }

    #[test]
    fn partial_transpose_of_singlet_has_minus_half() {
        let pt = partial_transpose(&singlet(), (2, 2), 1).unwrap();
        assert_abs_diff_eq!(pt.min_eigenvalue(), -0.5, epsilon = 1e-14);
    }

    #[test]
    fn partial_transpose_rejects_bad_factors() {
        let rho = DensityMatrix::maximally_mixed(4);
        assert!(partial_transpose(&rho, (3, 2), 0).is_err());
        assert!(partial_transpose(&rho, (2, 2), 2).is_err());
    }

    #[test]
    fn negativity_of_product_state_is_zero() {
        let rho = diag(&[0.5, 0.5]).kronecker(&diag(&[0.3, 0.7]));
        assert_abs_diff_eq!(negativity(&rho, (2, 2), 1).unwrap(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn negativity_of_singlet_is_half() {
        assert_abs_diff_eq!(
            negativity(&singlet(), (2, 2), 1).unwrap(),
            0.5,
            epsilon = 1e-14
        );
    }

    #[test]
    fn concurrence_of_maximally_mixed_is_zero() {
        let rho = DensityMatrix::maximally_mixed(4);
        assert_eq!(concurrence(&rho).unwrap(), 0.0);
    }

    #[test]
    fn concurrence_of_singlet_is_one() {
        assert_abs_diff_eq!(concurrence(&singlet()).unwrap(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn concurrence_rejects_wrong_dimension() {
        let rho = DensityMatrix::maximally_mixed(2);
        assert!(concurrence(&rho).is_err());
    }

    #[test]
    fn eof_of_singlet_is_ln2() {
        assert_abs_diff_eq!(
            entanglement_of_formation(&singlet()).unwrap(),
            LN2,
            epsilon = 1e-12
        );
    }

    #[test]
    fn mutual_information_of_product_state_is_zero() {
        let rho = diag(&[0.2, 0.8]).kronecker(&diag(&[0.9, 0.1]));
        assert_abs_diff_eq!(
            mutual_information(&rho, (2, 2)).unwrap(),
            0.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn mutual_information_of_singlet_is_two_ln2() {
        assert_abs_diff_eq!(
            mutual_information(&singlet(), (2, 2)).unwrap(),
            2.0 * LN2,
            epsilon = 1e-12
        );
    }

    #[test]
    fn partial_trace_of_product_recovers_factors() {
        let a = diag(&[0.25, 0.75]);
        let b = diag(&[0.6, 0.1, 0.3]);
        let rho = a.kronecker(&b);
        let ra = partial_trace(&rho, &[2, 3], &[0]).unwrap();
        let rb = partial_trace(&rho, &[2, 3], &[1]).unwrap();
        assert_abs_diff_eq!((ra.matrix() - a.matrix()).norm(), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!((rb.matrix() - b.matrix()).norm(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn partial_trace_of_singlet_is_maximally_mixed() {
        let r = partial_trace(&singlet(), &[2, 2], &[0]).unwrap();
        let expect = DensityMatrix::maximally_mixed(2);
        assert_abs_diff_eq!((r.matrix() - expect.matrix()).norm(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn partial_trace_rejects_bad_keep_sets() {
        let rho = DensityMatrix::maximally_mixed(4);
        assert!(partial_trace(&rho, &[2, 2], &[]).is_err());
        assert!(partial_trace(&rho, &[2, 2], &[1, 0]).is_err());
        assert!(partial_trace(&rho, &[2, 2], &[2]).is_err());
        assert!(partial_trace(&rho, &[2, 3], &[0]).is_err());
    }

    #[test]
    fn binary_entropy_endpoints() {
        assert_eq!(binary_entropy(0.0), 0.0);
        assert_eq!(binary_entropy(1.0), 0.0);
        assert_abs_diff_eq!(binary_entropy(0.5), LN2, epsilon = 1e-15);
    }
}
