//! Brute-force truncated-Fock-space simulator, used as the independent
//! oracle for the closed forms in [`crate::mode_transform`].
//!
//! Everything here is dense and exact-by-construction on the truncated
//! space: ladder matrices carry the usual √n elements, transformed modes are
//! assembled literally as b_m = Σ_n α_mn a_n + β_mn a_n†, and the vacuum of
//! the b modes is found as the minimal eigenvector of Σ_m b_m† b_m (the
//! quadratic form degrades gracefully under truncation, unlike exact kernel
//! solving). The contract is correctness at desk scale, not performance.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::measures::{hermitize, weight_entropy, PureBipartiteState};
use crate::mode_transform::BogoliubovMap;

/// Hard cap on the truncated-space dimension (N+1)^M.
pub const DEFAULT_DIMENSION_LIMIT: usize = 20_000;
/// Tail mass above which vacuum construction refuses to report a result.
pub const TAIL_MASS_LIMIT: f64 = 1e-6;
/// Minimal spectral gap below which the vacuum search reports ambiguity.
pub const DEGENERACY_GAP: f64 = 1e-6;

/// Per-mode annihilation matrices on the truncated M-mode Fock space, with
/// mode 0 carried by the most significant occupation digit.
#[derive(Debug, Clone)]
pub struct LadderOperatorSet {
    modes: usize,
    cutoff: usize,
    lowering: Vec<DMatrix<Complex64>>,
}

impl LadderOperatorSet {
    /// Build ladder matrices for `modes` modes with per-mode occupations
    /// 0..=`cutoff`, subject to [`DEFAULT_DIMENSION_LIMIT`].
    pub fn new(modes: usize, cutoff: usize) -> Result<Self> {
        Self::with_limit(modes, cutoff, DEFAULT_DIMENSION_LIMIT)
    }

    /// As [`LadderOperatorSet::new`] with an explicit dimension limit.
    pub fn with_limit(modes: usize, cutoff: usize, limit: usize) -> Result<Self> {
        if modes == 0 {
            return Err(Error::Validation("at least one mode is required".into()));
        }
        let per_mode = cutoff + 1;
        let mut dim: usize = 1;
        for _ in 0..modes {
            dim = dim
                .checked_mul(per_mode)
                .filter(|&d| d <= limit)
                .ok_or(Error::ResourceLimit {
                    requested: per_mode.pow(modes as u32),
                    limit,
                })?;
        }

        let mut single = DMatrix::zeros(per_mode, per_mode);
        for n in 1..per_mode {
            single[(n - 1, n)] = Complex64::new((n as f64).sqrt(), 0.0);
        }
        let lowering = (0..modes)
            .map(|mode| {
                let left = DMatrix::identity(per_mode.pow(mode as u32), per_mode.pow(mode as u32));
                let right = DMatrix::identity(
                    per_mode.pow((modes - 1 - mode) as u32),
                    per_mode.pow((modes - 1 - mode) as u32),
                );
                left.kronecker(&single).kronecker(&right)
            })
            .collect();
        Ok(Self {
            modes,
            cutoff,
            lowering,
        })
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    /// Dimension (cutoff+1)^modes of the truncated space.
    pub fn dim(&self) -> usize {
        self.lowering[0].nrows()
    }

    pub fn lowering(&self, mode: usize) -> &DMatrix<Complex64> {
        &self.lowering[mode]
    }

    pub fn raising(&self, mode: usize) -> DMatrix<Complex64> {
        self.lowering[mode].adjoint()
    }

    /// a_i† a_i.
    pub fn number_operator(&self, mode: usize) -> DMatrix<Complex64> {
        self.raising(mode) * self.lowering(mode)
    }

    /// The transformed annihilation operator b_m = Σ_n α_mn a_n + β_mn a_n†.
    pub fn transformed_lowering(
        &self,
        map: &BogoliubovMap,
        mode: usize,
    ) -> Result<DMatrix<Complex64>> {
        if map.modes() != self.modes {
            return Err(Error::DimensionMismatch {
                expected: self.modes,
                actual: map.modes(),
            });
        }
        if mode >= self.modes {
            return Err(Error::Validation(format!(
                "mode index {mode} out of range for {} modes",
                self.modes
            )));
        }
        let mut b = DMatrix::zeros(self.dim(), self.dim());
        for n in 0..self.modes {
            let alpha = map.alpha()[(mode, n)];
            let beta = map.beta()[(mode, n)];
            if alpha != Complex64::new(0.0, 0.0) {
                b += self.lowering(n).scale_complex(alpha);
            }
            if beta != Complex64::new(0.0, 0.0) {
                b += self.raising(n).scale_complex(beta);
            }
        }
        Ok(b)
    }
}

trait ScaleComplex {
    fn scale_complex(&self, z: Complex64) -> DMatrix<Complex64>;
}

impl ScaleComplex for DMatrix<Complex64> {
    fn scale_complex(&self, z: Complex64) -> DMatrix<Complex64> {
        self.map(|x| x * z)
    }
}

/// A normalized state on the truncated M-mode Fock space, indexed by
/// occupation tuples (n₀, …, n_{M-1}) with mode 0 most significant.
#[derive(Debug, Clone)]
pub struct TruncatedFockState {
    modes: usize,
    cutoff: usize,
    amplitudes: DVector<Complex64>,
}

impl TruncatedFockState {
    /// Normalize and wrap an amplitude vector of length (cutoff+1)^modes.
    pub fn new(modes: usize, cutoff: usize, amplitudes: DVector<Complex64>) -> Result<Self> {
        let dim = (cutoff + 1).pow(modes as u32);
        if modes == 0 {
            return Err(Error::Validation("at least one mode is required".into()));
        }
        if amplitudes.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                actual: amplitudes.len(),
            });
        }
        let norm = amplitudes.norm();
        if !(norm.is_finite() && norm > 0.0) {
            return Err(Error::Validation(
                "zero or non-finite amplitude vector".into(),
            ));
        }
        Ok(Self {
            modes,
            cutoff,
            amplitudes: amplitudes.unscale(norm),
        })
    }

    /// View a two-factor pure state as a two-mode Fock state. Rectangular
    /// amplitude matrices are zero-padded to the larger cutoff.
    pub fn from_bipartite(psi: &PureBipartiteState) -> Result<Self> {
        let (d1, d2) = psi.dims();
        let per_mode = d1.max(d2);
        let mut amplitudes = DVector::zeros(per_mode * per_mode);
        for i in 0..d1 {
            for j in 0..d2 {
                amplitudes[i * per_mode + j] = psi.amplitudes()[(i, j)];
            }
        }
        Self::new(2, per_mode - 1, amplitudes)
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &DVector<Complex64> {
        &self.amplitudes
    }

    /// Amplitude of one occupation tuple.
    pub fn amplitude(&self, occupations: &[usize]) -> Result<Complex64> {
        if occupations.len() != self.modes || occupations.iter().any(|&n| n > self.cutoff) {
            return Err(Error::Validation(format!(
                "bad occupation tuple {occupations:?} for {} modes at cutoff {}",
                self.modes, self.cutoff
            )));
        }
        let per_mode = self.cutoff + 1;
        let idx = occupations.iter().fold(0, |acc, &n| acc * per_mode + n);
        Ok(self.amplitudes[idx])
    }

    /// Probability mass on tuples with any occupation above cutoff-2; the
    /// truncation-error indicator for oracle results.
    pub fn tail_mass(&self) -> f64 {
        let per_mode = self.cutoff + 1;
        let threshold = self.cutoff.saturating_sub(2);
        let mut mass = 0.0;
        for (idx, amp) in self.amplitudes.iter().enumerate() {
            let mut rest = idx;
            let mut tail = false;
            for _ in 0..self.modes {
                if rest % per_mode > threshold {
                    tail = true;
                    break;
                }
                rest /= per_mode;
            }
            if tail {
                mass += amp.norm_sqr();
            }
        }
        mass
    }
}

/// Result of a vacuum search: the state, the annihilation residual
/// Σ_m ‖b_m ψ‖², and the truncation tail mass.
#[derive(Debug, Clone)]
pub struct VacuumSolution {
    pub state: TruncatedFockState,
    pub residual: f64,
    pub tail_mass: f64,
}

/// Vacuum of the transformed modes: the unit vector minimizing Σ_m ‖b_m ψ‖²,
/// i.e. the minimal eigenvector of the PSD form K = Σ_m b_m† b_m.
///
/// The reported residual is evaluated with operators rebuilt two occupation
/// levels above the working cutoff, so that amplitude leaking through the
/// truncation boundary is visible (inside the working space the boundary
/// terms are cut off and the residual would be an uninformative zero).
pub fn numeric_vacuum(ops: &LadderOperatorSet, map: &BogoliubovMap) -> Result<VacuumSolution> {
    map.ensure_canonical()?;
    let dim = ops.dim();
    let mut quad: DMatrix<Complex64> = DMatrix::zeros(dim, dim);
    for m in 0..ops.modes() {
        let b = ops.transformed_lowering(map, m)?;
        accumulate_gram(&mut quad, &b);
    }
    let quad = hermitize(&quad);

    // Real-coefficient maps produce a real symmetric form; the real
    // eigensolve is several times cheaper and bit-deterministic all the same.
    let (eigenvalues, eigenvectors) = if quad.iter().all(|z| z.im == 0.0) {
        let eig = quad.map(|z| z.re).symmetric_eigen();
        (
            eig.eigenvalues,
            eig.eigenvectors.map(|x| Complex64::new(x, 0.0)),
        )
    } else {
        let eig = quad.symmetric_eigen();
        (eig.eigenvalues, eig.eigenvectors)
    };

    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&i, &j| eigenvalues[i].partial_cmp(&eigenvalues[j]).unwrap());
    let gap = eigenvalues[order[1]] - eigenvalues[order[0]];
    if gap < DEGENERACY_GAP {
        return Err(Error::DegenerateVacuum { gap });
    }

    let mut amplitudes: DVector<Complex64> = eigenvectors.column(order[0]).into();
    // Deterministic global phase: largest-magnitude amplitude real positive.
    let pivot = amplitudes
        .iter()
        .copied()
        .max_by(|a, b| a.norm_sqr().partial_cmp(&b.norm_sqr()).unwrap())
        .unwrap();
    amplitudes *= pivot.conj() / pivot.norm();

    let state = TruncatedFockState::new(ops.modes(), ops.cutoff(), amplitudes)?;
    let tail_mass = state.tail_mass();
    if tail_mass > TAIL_MASS_LIMIT {
        return Err(Error::Truncation {
            tail_mass,
            limit: TAIL_MASS_LIMIT,
        });
    }
    let residual = annihilation_residual(ops, map, &state)?;
    Ok(VacuumSolution {
        state,
        residual,
        tail_mass,
    })
}

/// gram += b† b, exploiting that ladder-built operators carry only a few
/// nonzeros per row (a dense product would dominate the whole solve).
fn accumulate_gram(gram: &mut DMatrix<Complex64>, b: &DMatrix<Complex64>) {
    let dim = b.nrows();
    let zero = Complex64::new(0.0, 0.0);
    let mut row = Vec::new();
    for r in 0..dim {
        row.clear();
        for c in 0..dim {
            if b[(r, c)] != zero {
                row.push((c, b[(r, c)]));
            }
        }
        for &(c1, v1) in &row {
            for &(c2, v2) in &row {
                gram[(c1, c2)] += v1.conj() * v2;
            }
        }
    }
}

/// Σ_m ‖b_m ψ‖² evaluated in a space two levels taller than the state's
/// cutoff (falling back to the working space if that would exceed the
/// dimension limit).
fn annihilation_residual(
    ops: &LadderOperatorSet,
    map: &BogoliubovMap,
    state: &TruncatedFockState,
) -> Result<f64> {
    let padded = LadderOperatorSet::new(ops.modes(), ops.cutoff() + 2);
    let (ops_eval, psi) = match padded {
        Ok(ref p) => (p, embed(state, ops.cutoff() + 2)),
        Err(Error::ResourceLimit { .. }) => (ops, state.amplitudes.clone()),
        Err(e) => return Err(e),
    };
    let mut residual = 0.0;
    for m in 0..ops_eval.modes() {
        let b = ops_eval.transformed_lowering(map, m)?;
        residual += (&b * &psi).norm_squared();
    }
    Ok(residual)
}

/// Zero-pad a state's amplitude vector onto a taller per-mode cutoff.
fn embed(state: &TruncatedFockState, new_cutoff: usize) -> DVector<Complex64> {
    let old = state.cutoff + 1;
    let new = new_cutoff + 1;
    let mut out = DVector::zeros(new.pow(state.modes as u32));
    for (idx, amp) in state.amplitudes.iter().enumerate() {
        let mut rest = idx;
        let mut digits = vec![0usize; state.modes];
        for d in digits.iter_mut().rev() {
            *d = rest % old;
            rest /= old;
        }
        let target = digits.iter().fold(0, |acc, &n| acc * new + n);
        out[target] = *amp;
    }
    out
}

/// ⟨ψ|O|ψ⟩ for an observable on the state's truncated space.
pub fn expectation(state: &TruncatedFockState, observable: &DMatrix<Complex64>) -> Result<Complex64> {
    if observable.nrows() != state.dim() || observable.ncols() != state.dim() {
        return Err(Error::DimensionMismatch {
            expected: state.dim(),
            actual: observable.nrows(),
        });
    }
    let transformed = observable * &state.amplitudes;
    Ok(state.amplitudes.dotc(&transformed))
}

/// Schmidt entropy across a mode bipartition, in nats. `left_modes` must be
/// a non-empty proper subset of the modes, strictly increasing.
pub fn bipartition_entropy(state: &TruncatedFockState, left_modes: &[usize]) -> Result<f64> {
    let m = state.modes;
    if left_modes.is_empty()
        || left_modes.len() >= m
        || left_modes.windows(2).any(|w| w[0] >= w[1])
        || left_modes.iter().any(|&k| k >= m)
    {
        return Err(Error::Validation(format!(
            "left modes {left_modes:?} must be a non-empty proper subset of 0..{m}"
        )));
    }
    let per_mode = state.cutoff + 1;
    let right_modes: Vec<usize> = (0..m).filter(|k| !left_modes.contains(k)).collect();
    let rows = per_mode.pow(left_modes.len() as u32);
    let cols = per_mode.pow(right_modes.len() as u32);

    let mut a = DMatrix::zeros(rows, cols);
    for (idx, amp) in state.amplitudes.iter().enumerate() {
        let mut rest = idx;
        let mut digits = vec![0usize; m];
        for d in digits.iter_mut().rev() {
            *d = rest % per_mode;
            rest /= per_mode;
        }
        let row = left_modes.iter().fold(0, |acc, &k| acc * per_mode + digits[k]);
        let col = right_modes.iter().fold(0, |acc, &k| acc * per_mode + digits[k]);
        a[(row, col)] = *amp;
    }
    let psi = PureBipartiteState::new(a)?;
    Ok(weight_entropy(psi.schmidt_weights()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mode_transform::{geometric_entropy, CondensatePair, GeometricParameter};
    use approx::assert_abs_diff_eq;

    const LN2: f64 = std::f64::consts::LN_2;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    /// The analytic squeeze vacuum Σ tanhⁿr |n,n⟩, truncated.
    fn squeeze_vacuum(r: f64, cutoff: usize) -> TruncatedFockState {
        let per_mode = cutoff + 1;
        let t = r.tanh();
        let mut amplitudes = DVector::zeros(per_mode * per_mode);
        let mut a = 1.0;
        for n in 0..per_mode {
            amplitudes[n * per_mode + n] = c(a);
            a *= t;
        }
        TruncatedFockState::new(2, cutoff, amplitudes).unwrap()
    }

    #[test]
    fn single_mode_qubit_truncation() {
        let ops = LadderOperatorSet::new(1, 1).unwrap();
        let a = ops.lowering(0);
        assert_eq!(a.nrows(), 2);
        assert_eq!(a[(0, 1)], c(1.0));
        assert_eq!(a[(0, 0)], c(0.0));
        assert_eq!(a[(1, 0)], c(0.0));
        assert_eq!(a[(1, 1)], c(0.0));
    }

    #[test]
    fn number_operator_is_diagonal_0_to_n() {
        let ops = LadderOperatorSet::new(1, 5).unwrap();
        let num = ops.number_operator(0);
        for n in 0..=5 {
            assert_abs_diff_eq!(num[(n, n)].re, n as f64, epsilon = 1e-14);
        }
    }

    #[test]
    fn distinct_modes_commute_exactly() {
        let ops = LadderOperatorSet::new(2, 3).unwrap();
        let comm = ops.lowering(0) * ops.raising(1) - ops.raising(1) * ops.lowering(0);
        assert_eq!(comm.norm(), 0.0);
    }

    #[test]
    fn same_mode_commutator_is_identity_below_the_boundary() {
        let ops = LadderOperatorSet::new(2, 4).unwrap();
        let comm = ops.lowering(0) * ops.raising(0) - ops.raising(0) * ops.lowering(0);
        let per_mode = 5;
        for i in 0..ops.dim() {
            for j in 0..ops.dim() {
                let (n0i, n0j) = (i / per_mode, j / per_mode);
                if n0i <= 2 && n0j <= 2 {
                    let expect = if i == j { 1.0 } else { 0.0 };
                    assert_abs_diff_eq!(comm[(i, j)].re, expect, epsilon = 1e-12);
                    assert_abs_diff_eq!(comm[(i, j)].im, 0.0, epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn dimension_limit_is_enforced() {
        assert!(matches!(
            LadderOperatorSet::new(3, 30),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn identity_vacuum_is_the_bare_vacuum_with_zero_residual() {
        let ops = LadderOperatorSet::new(2, 4).unwrap();
        let sol = numeric_vacuum(&ops, &BogoliubovMap::identity(2)).unwrap();
        assert_abs_diff_eq!(sol.state.amplitude(&[0, 0]).unwrap().norm(), 1.0, epsilon = 1e-12);
        assert!(sol.residual <= 1e-24, "residual {}", sol.residual);
        assert!(sol.tail_mass <= 1e-24);
    }

    #[test]
    fn squeeze_vacuum_amplitudes_are_geometric() {
        let r = 0.5f64;
        let ops = LadderOperatorSet::new(2, 30).unwrap();
        let map = BogoliubovMap::two_mode_squeeze(r).unwrap();
        let sol = numeric_vacuum(&ops, &map).unwrap();
        let t = r.tanh();
        let base = sol.state.amplitude(&[0, 0]).unwrap();
        for n in 1..=10 {
            let amp = sol.state.amplitude(&[n, n]).unwrap();
            assert_abs_diff_eq!((amp / base).re, t.powi(n as i32), epsilon = 1e-8);
            assert_abs_diff_eq!((amp / base).im, 0.0, epsilon = 1e-10);
        }
        // Off-diagonal occupations carry no amplitude.
        assert_abs_diff_eq!(sol.state.amplitude(&[1, 2]).unwrap().norm(), 0.0, epsilon = 1e-10);
        let occ = expectation(&sol.state, &ops.number_operator(0)).unwrap();
        assert_abs_diff_eq!(occ.re, r.sinh().powi(2), epsilon = 1e-8);
        assert_abs_diff_eq!(occ.im, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn vacuum_search_rejects_non_canonical_maps() {
        let s = 1.0 / 2.0f64.sqrt();
        let alpha = DMatrix::from_row_slice(2, 2, &[c(s), c(0.0), c(0.0), c(-s)]);
        let beta = DMatrix::from_row_slice(2, 2, &[c(0.0), c(s), c(s), c(0.0)]);
        let map = BogoliubovMap::new(alpha, beta).unwrap();
        let ops = LadderOperatorSet::new(2, 4).unwrap();
        assert!(matches!(
            numeric_vacuum(&ops, &map),
            Err(Error::NotCanonical { .. })
        ));
    }

    #[test]
    fn vacuum_search_reports_excessive_truncation() {
        // r = 1.5 at cutoff 8 leaves ~1e-3 of mass above the boundary.
        let ops = LadderOperatorSet::new(2, 8).unwrap();
        let map = BogoliubovMap::two_mode_squeeze(1.5).unwrap();
        assert!(matches!(
            numeric_vacuum(&ops, &map),
            Err(Error::Truncation { .. })
        ));
    }

    #[test]
    fn expectation_on_number_states() {
        let ops = LadderOperatorSet::new(1, 6).unwrap();
        let num = ops.number_operator(0);
        let mut vac = DVector::zeros(7);
        vac[0] = c(1.0);
        let vac = TruncatedFockState::new(1, 6, vac).unwrap();
        assert_eq!(expectation(&vac, &num).unwrap(), c(0.0));
        for n in 0..=6 {
            let mut v = DVector::zeros(7);
            v[n] = c(1.0);
            let state = TruncatedFockState::new(1, 6, v).unwrap();
            assert_abs_diff_eq!(expectation(&state, &num).unwrap().re, n as f64, epsilon = 1e-14);
        }
    }

    #[test]
    fn expectation_of_strong_squeeze_occupation() {
        let ops = LadderOperatorSet::new(2, 40).unwrap();
        let state = squeeze_vacuum(1.0, 40);
        let occ = expectation(&state, &ops.number_operator(0)).unwrap();
        assert_abs_diff_eq!(occ.re, 1.381_097_845_541_815_7, epsilon = 1e-5);
    }

    #[test]
    fn expectation_rejects_dimension_mismatch() {
        let ops = LadderOperatorSet::new(1, 3).unwrap();
        let state = squeeze_vacuum(0.2, 10);
        assert!(expectation(&state, ops.lowering(0)).is_err());
    }

    #[test]
    fn bipartition_entropy_of_product_state_is_zero() {
        let per_mode = 6;
        let mut amplitudes = DVector::zeros(per_mode * per_mode);
        for i in 0..per_mode {
            for j in 0..per_mode {
                amplitudes[i * per_mode + j] = c(0.7f64.powi(i as i32) * 0.3f64.powi(j as i32));
            }
        }
        let state = TruncatedFockState::new(2, per_mode - 1, amplitudes).unwrap();
        assert_abs_diff_eq!(bipartition_entropy(&state, &[0]).unwrap(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn bipartition_entropy_of_balanced_squeeze_is_two_ln2() {
        // tanh² r = 1/2.
        let r = (0.5f64).sqrt().atanh();
        let state = squeeze_vacuum(r, 40);
        assert_abs_diff_eq!(
            bipartition_entropy(&state, &[0]).unwrap(),
            2.0 * LN2,
            epsilon = 1e-6
        );
    }

    #[test]
    fn bipartition_entropy_matches_pair_state_kernel() {
        // (v/u)² = 0.3.
        let t: f64 = 0.3;
        let u = (1.0 / (1.0 - t)).sqrt();
        let pair = CondensatePair::new(u, u * t.sqrt()).unwrap();
        let psi = crate::mode_transform::condensate_pair_state(&pair, 60).unwrap();
        let state = TruncatedFockState::from_bipartite(&psi).unwrap();
        assert_abs_diff_eq!(
            bipartition_entropy(&state, &[1]).unwrap(),
            geometric_entropy(GeometricParameter::new(t).unwrap()),
            epsilon = 1e-8
        );
    }

    #[test]
    fn bipartition_rejects_trivial_partitions() {
        let state = squeeze_vacuum(0.3, 10);
        assert!(bipartition_entropy(&state, &[]).is_err());
        assert!(bipartition_entropy(&state, &[0, 1]).is_err());
        assert!(bipartition_entropy(&state, &[2]).is_err());
    }

    #[test]
    fn tail_mass_flags_boundary_occupation() {
        let mut amplitudes = DVector::zeros(36);
        amplitudes[0] = c(1.0);
        amplitudes[5 * 6 + 5] = c(1.0); // |5,5⟩ at cutoff 5
        let state = TruncatedFockState::new(2, 5, amplitudes).unwrap();
        assert_abs_diff_eq!(state.tail_mass(), 0.5, epsilon = 1e-15);
    }
}
