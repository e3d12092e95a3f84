//! Bogoliubov mode-transformation algebra and the closed-form entanglement
//! expressions it generates.
//!
//! A linear mode change b_m = Σ_n α_mn a_n + β_mn a_n† preserves the bosonic
//! commutation relations exactly when
//!
//! ```text
//! Σ_k (α_ik α*_jk - β_ik β*_jk) = δ_ij      (commutator condition)
//! Σ_k (α_ik β_jk  - β_ik α_jk) = 0          (pairing condition)
//! ```
//!
//! The vacuum of the b modes then carries ⟨a_i†a_i⟩ = Σ_j |β_ij|² particles
//! per old mode, and for a two-mode squeeze its Schmidt spectrum is
//! geometric: p_n = (1-t) tⁿ. Every thermal/squeezed entropy in this module
//! reduces to that one-parameter kernel, [`geometric_entropy`].

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::measures::{weight_entropy, PureBipartiteState};

/// Default residual tolerance below which a map is accepted as canonical by
/// the physics operations.
pub const CANONICAL_TOL: f64 = 1e-10;

/// Coefficients (α, β) of a linear mode transformation
/// b_m = Σ_n α_mn a_n + β_mn a_n†.
///
/// Maps are stored un-validated; operations that require canonicity check it
/// first via [`BogoliubovMap::check_canonical`].
#[derive(Debug, Clone)]
pub struct BogoliubovMap {
    alpha: DMatrix<Complex64>,
    beta: DMatrix<Complex64>,
}

/// Max-norm residuals of the two canonicity conditions.
#[derive(Debug, Clone, Copy)]
pub struct CanonicalReport {
    /// max |Σ_k (α_ik α*_jk - β_ik β*_jk) - δ_ij|
    pub commutator: f64,
    /// max |Σ_k (α_ik β_jk - β_ik α_jk)|
    pub pairing: f64,
    /// Tolerance the report was evaluated against.
    pub tol: f64,
}

impl CanonicalReport {
    pub fn is_canonical(&self) -> bool {
        self.commutator <= self.tol && self.pairing <= self.tol
    }
}

impl BogoliubovMap {
    pub fn new(alpha: DMatrix<Complex64>, beta: DMatrix<Complex64>) -> Result<Self> {
        let m = alpha.nrows();
        if alpha.ncols() != m {
            return Err(Error::NotSquare {
                rows: alpha.nrows(),
                cols: alpha.ncols(),
            });
        }
        if beta.nrows() != m || beta.ncols() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                actual: beta.nrows(),
            });
        }
        if m == 0 {
            return Err(Error::Validation("empty mode map".into()));
        }
        if alpha
            .iter()
            .chain(beta.iter())
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::Validation("non-finite map coefficient".into()));
        }
        Ok(Self { alpha, beta })
    }

    /// The trivial map b = a.
    pub fn identity(modes: usize) -> Self {
        Self {
            alpha: DMatrix::identity(modes, modes),
            beta: DMatrix::zeros(modes, modes),
        }
    }

    /// Canonical two-mode squeeze b₁ = cosh r a₁ - sinh r a₂†,
    /// b₂ = cosh r a₂ - sinh r a₁†.
    ///
    /// Its vacuum has amplitudes ∝ tanhⁿ r on |n,n⟩ and per-mode occupation
    /// sinh² r.
    pub fn two_mode_squeeze(r: f64) -> Result<Self> {
        if !r.is_finite() || r < 0.0 {
            return Err(Error::Domain(format!("squeeze parameter r = {r} must be ≥ 0")));
        }
        let (ch, sh) = (r.cosh(), r.sinh());
        let alpha = DMatrix::from_diagonal_element(2, 2, Complex64::new(ch, 0.0));
        let mut beta = DMatrix::zeros(2, 2);
        beta[(0, 1)] = Complex64::new(-sh, 0.0);
        beta[(1, 0)] = Complex64::new(-sh, 0.0);
        Ok(Self { alpha, beta })
    }

    pub fn modes(&self) -> usize {
        self.alpha.nrows()
    }

    pub fn alpha(&self) -> &DMatrix<Complex64> {
        &self.alpha
    }

    pub fn beta(&self) -> &DMatrix<Complex64> {
        &self.beta
    }

    /// Evaluate both canonicity residuals against the given tolerance.
    pub fn check_canonical(&self, tol: f64) -> CanonicalReport {
        let m = self.modes();
        let comm = &self.alpha * self.alpha.adjoint() - &self.beta * self.beta.adjoint();
        let pair = &self.alpha * self.beta.transpose() - &self.beta * self.alpha.transpose();
        let mut commutator = 0.0f64;
        let mut pairing = 0.0f64;
        for i in 0..m {
            for j in 0..m {
                let delta = if i == j { 1.0 } else { 0.0 };
                commutator = commutator.max((comm[(i, j)] - Complex64::new(delta, 0.0)).norm());
                pairing = pairing.max(pair[(i, j)].norm());
            }
        }
        CanonicalReport {
            commutator,
            pairing,
            tol,
        }
    }

    pub(crate) fn ensure_canonical(&self) -> Result<CanonicalReport> {
        let report = self.check_canonical(CANONICAL_TOL);
        if report.is_canonical() {
            Ok(report)
        } else {
            Err(Error::NotCanonical {
                commutator: report.commutator,
                pairing: report.pairing,
            })
        }
    }

    fn check_mode(&self, mode: usize) -> Result<()> {
        if mode >= self.modes() {
            return Err(Error::Validation(format!(
                "mode index {mode} out of range for {} modes",
                self.modes()
            )));
        }
        Ok(())
    }
}

/// Particle content ⟨0̃| a_i† a_i |0̃⟩ = Σ_j |β_ij|² of the new vacuum in the
/// i-th old mode. Requires a canonical map.
pub fn vacuum_occupation(map: &BogoliubovMap, mode: usize) -> Result<f64> {
    map.ensure_canonical()?;
    map.check_mode(mode)?;
    Ok(map.beta.row(mode).iter().map(|z| z.norm_sqr()).sum())
}

/// The per-mode expression -Σ_j |β_ij|² ln |β_ij|², with zero terms skipped.
///
/// This is reported exactly as defined; note that for strong squeezes some
/// |β|² exceed one and the value can go negative. The reduced-state entropy
/// computed by the Fock oracle (or, for squeezes, [`geometric_entropy`]) is
/// the companion diagnostic.
pub fn mode_entanglement(map: &BogoliubovMap, mode: usize) -> Result<f64> {
    map.ensure_canonical()?;
    map.check_mode(mode)?;
    Ok(weight_entropy(map.beta.row(mode).iter().map(|z| z.norm_sqr())))
}

/// The ratio t ∈ [0, 1) that parametrizes a geometric Schmidt spectrum
/// p_n = (1-t) tⁿ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometricParameter(f64);

impl GeometricParameter {
    pub fn new(t: f64) -> Result<Self> {
        if !t.is_finite() || !(0.0..1.0).contains(&t) {
            return Err(Error::Domain(format!(
                "geometric parameter t = {t} outside [0, 1)"
            )));
        }
        Ok(Self(t))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Entropy of the geometric spectrum p_n = (1-t) tⁿ:
/// S(t) = -t ln t / (1-t) - ln(1-t), in nats.
///
/// S(0) = 0 and S is strictly increasing on [0, 1).
pub fn geometric_entropy(t: GeometricParameter) -> f64 {
    let t = t.value();
    if t == 0.0 {
        return 0.0;
    }
    -t * t.ln() / (1.0 - t) - (-t).ln_1p()
}

/// Two oscillators of common frequency `omega` with mixing coupling
/// `lambda`, as produced by the symmetric mode change of a pair of free
/// oscillators at frequencies ω ∓ λ.
#[derive(Debug, Clone, Copy)]
pub struct OscillatorPair {
    omega: f64,
    lambda: f64,
}

impl OscillatorPair {
    pub fn new(omega: f64, lambda: f64) -> Result<Self> {
        if !omega.is_finite() || omega <= 0.0 {
            return Err(Error::Domain(format!("omega = {omega} must be > 0")));
        }
        if !lambda.is_finite() || lambda < 0.0 {
            return Err(Error::Domain(format!("lambda = {lambda} must be ≥ 0")));
        }
        Ok(Self { omega, lambda })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// tanh(4λ/ω), the Schmidt ratio of the coupled ground state.
    pub fn schmidt_ratio(&self) -> f64 {
        (4.0 * self.lambda / self.omega).tanh()
    }

    /// t = tanh²(4λ/ω). Always in [0, 1) for finite coupling.
    pub fn geometric_parameter(&self) -> GeometricParameter {
        let r = self.schmidt_ratio();
        GeometricParameter::new(r * r).expect("tanh² stays inside [0, 1)")
    }
}

/// Ground-state entanglement of the coupled pair: S(tanh²(4λ/ω)) in nats.
pub fn coupled_oscillator_entanglement(pair: &OscillatorPair) -> f64 {
    geometric_entropy(pair.geometric_parameter())
}

/// Effective temperature T solving tanh²(4λ/ω) = exp(-ħω/kT), given the
/// energy quantum ħω/k in kelvin (or any consistent unit). Returns 0 in the
/// λ = 0 limit.
pub fn effective_temperature(pair: &OscillatorPair, hbar_omega_over_k: f64) -> Result<f64> {
    if !hbar_omega_over_k.is_finite() || hbar_omega_over_k <= 0.0 {
        return Err(Error::Domain(format!(
            "hbar_omega_over_k = {hbar_omega_over_k} must be > 0"
        )));
    }
    let t = pair.geometric_parameter().value();
    if t == 0.0 {
        return Ok(0.0);
    }
    Ok(hbar_omega_over_k / (-t.ln()))
}

/// Thermal-oscillator entropy x/(eˣ-1) - ln(1-e⁻ˣ) at x = ħω/kT, in nats.
///
/// Identically equal to `geometric_entropy(e⁻ˣ)`; kept as an independent
/// implementation so the identity is checkable.
pub fn planck_entropy(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!("x = {x} must be > 0")));
    }
    let em = x.exp_m1();
    let first = if em.is_infinite() { 0.0 } else { x / em };
    Ok(first - (-(-x).exp_m1()).ln())
}

/// One (u, v) coefficient pair of a momentum-diagonal Bogoliubov
/// transformation a = u b + v b†₋. Canonical pairs satisfy u² - v² = 1.
#[derive(Debug, Clone, Copy)]
pub struct CondensatePair {
    u: f64,
    v: f64,
}

/// Tolerance on |u² - v² - 1| for a pair to count as canonical.
pub const PAIR_CANONICAL_TOL: f64 = 1e-12;

impl CondensatePair {
    pub fn new(u: f64, v: f64) -> Result<Self> {
        if !u.is_finite() || u <= 0.0 {
            return Err(Error::Domain(format!("u = {u} must be > 0")));
        }
        if !v.is_finite() || v < 0.0 {
            return Err(Error::Domain(format!("v = {v} must be ≥ 0")));
        }
        Ok(Self { u, v })
    }

    /// The canonical pair (cosh r, sinh r).
    pub fn from_squeeze(r: f64) -> Result<Self> {
        if !r.is_finite() || r < 0.0 {
            return Err(Error::Domain(format!("squeeze parameter r = {r} must be ≥ 0")));
        }
        Ok(Self {
            u: r.cosh(),
            v: r.sinh(),
        })
    }

    pub fn u(&self) -> f64 {
        self.u
    }

    pub fn v(&self) -> f64 {
        self.v
    }

    /// |u² - v² - 1|.
    pub fn canonical_defect(&self) -> f64 {
        (self.u * self.u - self.v * self.v - 1.0).abs()
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical_defect() <= PAIR_CANONICAL_TOL
    }

    /// (v/u)², the geometric parameter of the pair state.
    pub fn ratio_squared(&self) -> f64 {
        (self.v / self.u) * (self.v / self.u)
    }

    fn geometric_parameter(&self) -> Result<GeometricParameter> {
        GeometricParameter::new(self.ratio_squared()).map_err(|_| {
            Error::Domain(format!(
                "pair (u, v) = ({}, {}) has v ≥ u; no normalizable pair state",
                self.u, self.v
            ))
        })
    }
}

/// Ground state of one (p, -p) mode pair: amplitudes ∝ (-v/u)ⁱ on
/// |n₋ = i; n₊ = i⟩ up to `cutoff`, normalized.
///
/// The unnormalized geometric series has squared norm
/// (1/u²)/(1 - (v/u)²) → 1 exactly when u² - v² = 1, which is required here.
pub fn condensate_pair_state(pair: &CondensatePair, cutoff: usize) -> Result<PureBipartiteState> {
    if !pair.is_canonical() {
        return Err(Error::Validation(format!(
            "pair (u, v) = ({}, {}) is not canonical: |u² - v² - 1| = {:.3e}",
            pair.u,
            pair.v,
            pair.canonical_defect()
        )));
    }
    if cutoff < 1 {
        return Err(Error::Validation("cutoff must be ≥ 1".into()));
    }
    let dim = cutoff + 1;
    let ratio = -pair.v / pair.u;
    let mut amps = DMatrix::zeros(dim, dim);
    let mut a = 1.0 / pair.u;
    for i in 0..dim {
        amps[(i, i)] = Complex64::new(a, 0.0);
        a *= ratio;
    }
    PureBipartiteState::new(amps)
}

/// Entanglement of a single pair: the geometric kernel at t = (v/u)².
pub fn pair_entanglement(pair: &CondensatePair) -> Result<f64> {
    Ok(geometric_entropy(pair.geometric_parameter()?))
}

/// The same quantity through the logarithmic-ratio route
/// ln((u/v)²)/((u/v)² - 1) - ln(1 - (v/u)²); algebraically identical to
/// [`pair_entanglement`] and kept as a redundant cross-check.
pub fn pair_entanglement_log_form(pair: &CondensatePair) -> Result<f64> {
    let t = pair.geometric_parameter()?.value();
    if t == 0.0 {
        return Ok(0.0);
    }
    let inv = 1.0 / t;
    Ok(inv.ln() / (inv - 1.0) - (-t).ln_1p())
}

/// Total entanglement of a set of pair modes: the sum of the per-pair
/// geometric entropies. Fails if any pair has v ≥ u.
pub fn condensate_entanglement(pairs: &[CondensatePair]) -> Result<f64> {
    let mut total = 0.0;
    for pair in pairs {
        let kernel = pair_entanglement(pair)?;
        debug_assert!((kernel - pair_entanglement_log_form(pair).unwrap()).abs() < 1e-9);
        total += kernel;
    }
    Ok(total)
}

/// Unit system for the horizon-temperature formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Units {
    /// ħ = c = k = 1: T = a/2π.
    Natural,
    /// SI: T = ħ a / (2π c k_B) in kelvin for a in m/s².
    Si,
}

const HBAR: f64 = 1.054_571_817e-34; // J s
const LIGHT_SPEED: f64 = 299_792_458.0; // m/s
const BOLTZMANN: f64 = 1.380_649e-23; // J/K

fn horizon_temperature(value: f64, name: &str, units: Units) -> Result<f64> {
    if !value.is_finite() || value < 0.0 {
        return Err(Error::Domain(format!("{name} = {value} must be ≥ 0")));
    }
    let tau = 2.0 * std::f64::consts::PI;
    Ok(match units {
        Units::Natural => value / tau,
        Units::Si => HBAR * value / (tau * LIGHT_SPEED * BOLTZMANN),
    })
}

/// Temperature seen by a uniformly accelerated observer: a/2π in natural
/// units, ħa/(2πck_B) in SI.
pub fn unruh_temperature(acceleration: f64, units: Units) -> Result<f64> {
    horizon_temperature(acceleration, "acceleration", units)
}

/// Horizon temperature for surface gravity κ; same formula shape as
/// [`unruh_temperature`].
pub fn hawking_temperature(surface_gravity: f64, units: Units) -> Result<f64> {
    horizon_temperature(surface_gravity, "surface gravity", units)
}

/// Normalized two-mode squeezed state with amplitudes ∝ (-iτ)ⁿ on |n,n⟩ up
/// to `cutoff`. Its Schmidt entropy equals `geometric_entropy(τ²)` up to
/// truncation error.
pub fn two_mode_squeezed_state(tau: f64, cutoff: usize) -> Result<PureBipartiteState> {
    if !tau.is_finite() || !(0.0..1.0).contains(&tau) {
        return Err(Error::Domain(format!("tau = {tau} outside [0, 1)")));
    }
    let dim = cutoff + 1;
    let mut amps = DMatrix::zeros(dim, dim);
    let step = Complex64::new(0.0, -tau);
    let mut a = Complex64::new(1.0, 0.0);
    for n in 0..dim {
        amps[(n, n)] = a;
        a *= step;
    }
    PureBipartiteState::new(amps)
}
