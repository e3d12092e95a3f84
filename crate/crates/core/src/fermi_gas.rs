//! Spin correlations of an ideal Fermi gas at zero temperature.
//!
//! Exclusion statistics alone correlate the spins of electrons drawn from a
//! filled Fermi sea. Everything is controlled by the exchange kernel
//!
//! ```text
//! f(x) = 3 (sin x - x cos x) / x³,   x = k_F |r - r'|,
//! ```
//!
//! with f(0) = 1 and f → 0 at large separation. The unnormalized n-electron
//! spin density matrix is a signed sum over permutations σ,
//!
//! ```text
//! ⟨s₁…s_n| ρ |t₁…t_n⟩ = Σ_σ sgn(σ) Π_i δ(s_i, t_{σ(i)}) Π_{i: σ(i)≠i} f(k_F|r_i - r_{σ(i)}|),
//! ```
//!
//! so a transposition contributes -f² over its pair and a 3-cycle +f₁f₂f₃.
//! Density prefactors (n², n³, …) are dropped throughout: matrices are built
//! unnormalized and normalized by trace on demand, and the prefactor cancels
//! in every normalized quantity.

use itertools::Itertools;
use nalgebra::{DMatrix, Vector3};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::measures::{
    concurrence, entanglement_of_formation, min_partial_transpose_eigenvalue,
    mutual_information, negativity, partial_trace, partial_transpose, DensityMatrix,
};

/// Largest electron count accepted by [`n_electron_rho`] (2^n matrix rows).
pub const MAX_ELECTRONS: usize = 10;
/// Kernel magnitude below which a third electron counts as "far" for the
/// spatial-trace consistency reduction.
pub const FAR_KERNEL_TOL: f64 = 1e-8;
/// Crossover between the Taylor branch and the closed form of the kernel,
/// placed where the two evaluations agree to 1e-14.
pub const SERIES_SWITCH: f64 = 0.2;

/// A value of the exchange kernel, guaranteed to lie in [-1, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExchangeValue(f64);

impl ExchangeValue {
    pub fn new(f: f64) -> Result<Self> {
        if !f.is_finite() || f.abs() > 1.0 {
            return Err(Error::Domain(format!(
                "exchange value f = {f} outside [-1, 1]"
            )));
        }
        Ok(Self(f))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// The exchange kernel 3 (sin x - x cos x)/x³ at dimensionless separation
/// x = k_F·|r - r'| ≥ 0.
///
/// Below [`SERIES_SWITCH`] the closed form loses digits to cancellation and
/// a five-term Taylor expansion is used instead.
pub fn exchange_f(x: f64) -> Result<ExchangeValue> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::Domain(format!("separation x = {x} must be ≥ 0")));
    }
    let f = if x <= SERIES_SWITCH {
        let x2 = x * x;
        1.0 - x2 / 10.0 + x2 * x2 / 280.0 - x2 * x2 * x2 / 15120.0
            + x2 * x2 * x2 * x2 / 1_330_560.0
    } else {
        3.0 * (x.sin() - x * x.cos()) / (x * x * x)
    };
    ExchangeValue::new(f.clamp(-1.0, 1.0))
}

/// Product with the factors multiplied in sorted order, so that any
/// permutation of the same factor multiset yields a bit-identical result.
fn sorted_product(factors: &mut Vec<f64>) -> f64 {
    factors.sort_by(|a, b| a.partial_cmp(b).unwrap());
    factors.iter().product()
}

fn real_matrix(dim: usize, fill: impl Fn(usize, usize) -> f64) -> DMatrix<Complex64> {
    DMatrix::from_fn(dim, dim, |i, j| Complex64::new(fill(i, j), 0.0))
}

/// Unnormalized two-electron spin density matrix in the basis
/// |↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩:
///
/// ```text
/// ⎛ 1-f²   0     0    0   ⎞
/// ⎜  0     1   -f²    0   ⎟
/// ⎜  0    -f²    1    0   ⎟
/// ⎝  0     0     0   1-f² ⎠
/// ```
///
/// Trace 4-2f²; normalize on demand. At f = 1 the normalized state is the
/// spin singlet projector; at f = 0 it is maximally mixed.
pub fn two_electron_rho(f: ExchangeValue) -> DensityMatrix {
    let f = f.value();
    let ff = f * f;
    let mut m = DMatrix::zeros(4, 4);
    m[(0, 0)] = Complex64::new(1.0 - ff, 0.0);
    m[(1, 1)] = Complex64::new(1.0, 0.0);
    m[(2, 2)] = Complex64::new(1.0, 0.0);
    m[(3, 3)] = Complex64::new(1.0 - ff, 0.0);
    m[(1, 2)] = Complex64::new(-ff, 0.0);
    m[(2, 1)] = Complex64::new(-ff, 0.0);
    DensityMatrix::raw(m).expect("hermitian by construction")
}

/// Partial-transpose spectrum of the raw two-electron matrix, both as the
/// closed form {1-2f², 1, 1, 1} and as the numerically computed eigenvalues
/// of the transposed matrix. Both lists are ascending and must agree to
/// machine precision.
#[derive(Debug, Clone, Copy)]
pub struct PptSpectrum {
    pub analytic: [f64; 4],
    pub numeric: [f64; 4],
}

impl PptSpectrum {
    /// Largest absolute difference between the two routes.
    pub fn max_disagreement(&self) -> f64 {
        self.analytic
            .iter()
            .zip(self.numeric.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

pub fn ppt_spectrum_two_electron(f: ExchangeValue) -> PptSpectrum {
    let ff = f.value() * f.value();
    let analytic = [1.0 - 2.0 * ff, 1.0, 1.0, 1.0];
    let rho = two_electron_rho(f);
    let pt = partial_transpose(&rho, (2, 2), 1).expect("4 = 2·2");
    let eigs = pt.eigenvalues();
    PptSpectrum {
        analytic,
        numeric: [eigs[0], eigs[1], eigs[2], eigs[3]],
    }
}

/// The separation solving f(x)² = 1/2, in kernel units and in length units.
#[derive(Debug, Clone, Copy)]
pub struct EntanglementRadius {
    /// Dimensionless root x* of f(x)² = 1/2.
    pub x_star: f64,
    /// x*/k_F.
    pub r_e: f64,
    /// |f(x*)² - 1/2| at the returned root.
    pub residual: f64,
}

/// Bisection root of f(x)² = 1/2 on (0, first zero of f): the separation
/// below which the two-spin state fails the positive-partial-transpose test
/// (min eigenvalue 1-2f² < 0 ⟺ f² > 1/2).
pub fn entanglement_radius(k_fermi: f64) -> Result<EntanglementRadius> {
    if !k_fermi.is_finite() || k_fermi <= 0.0 {
        return Err(Error::Domain(format!("k_fermi = {k_fermi} must be > 0")));
    }
    let g = |x: f64| {
        let f = exchange_f(x).expect("positive x").value();
        f * f - 0.5
    };
    // f is strictly decreasing from 1 to its first zero near 4.49, so the
    // root is bracketed well inside (0.5, 4.0).
    let (mut lo, mut hi) = (0.5f64, 4.0f64);
    debug_assert!(g(lo) > 0.0 && g(hi) < 0.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let x_star = 0.5 * (lo + hi);
    Ok(EntanglementRadius {
        x_star,
        r_e: x_star / k_fermi,
        residual: g(x_star).abs(),
    })
}

fn spin(index: usize, slot: usize, n: usize) -> usize {
    (index >> (n - 1 - slot)) & 1
}

/// Unnormalized three-electron spin density matrix (8×8) for pairwise
/// kernels f1 = f(r₁,r₂), f2 = f(r₁,r₃), f3 = f(r₂,r₃).
///
/// Transcribes the six-term arrangement sum directly: the direct term is
/// positive, single exchanges carry -f² of their pair, and the two triple
/// exchanges carry +f1·f2·f3. Nothing here asserts positivity — arbitrary
/// kernel triples need not be geometrically realizable.
pub fn three_electron_rho(
    f1: ExchangeValue,
    f2: ExchangeValue,
    f3: ExchangeValue,
) -> DensityMatrix {
    let (f1, f2, f3) = (f1.value(), f2.value(), f3.value());
    let cycle = sorted_product(&mut vec![f1, f2, f3]);
    // (σ(0), σ(1), σ(2)) and signed weight, in lexicographic order.
    let terms: [([usize; 3], f64); 6] = [
        ([0, 1, 2], 1.0),
        ([0, 2, 1], -(f3 * f3)),
        ([1, 0, 2], -(f1 * f1)),
        ([1, 2, 0], cycle),
        ([2, 0, 1], cycle),
        ([2, 1, 0], -(f2 * f2)),
    ];
    let mut entries = [[0.0f64; 8]; 8];
    for (perm, weight) in &terms {
        for t in 0..8usize {
            let mut s = 0usize;
            for slot in 0..3 {
                s = (s << 1) | spin(t, perm[slot], 3);
            }
            if s <= t {
                entries[s][t] += weight;
            }
        }
    }
    DensityMatrix::raw(real_matrix(8, |i, j| {
        if i <= j {
            entries[i][j]
        } else {
            entries[j][i]
        }
    }))
    .expect("hermitian by construction")
}

/// Fermi wavenumber and detector positions; the source of every pairwise
/// kernel value. In dimensionless mode coordinates are taken as already
/// multiplied by k_F.
#[derive(Debug, Clone)]
pub struct ExchangeGeometry {
    k_fermi: f64,
    positions: Vec<Vector3<f64>>,
}

impl ExchangeGeometry {
    /// Coordinates already scaled by k_F.
    pub fn dimensionless(positions: &[[f64; 3]]) -> Result<Self> {
        Self::with_k_fermi(1.0, positions)
    }

    pub fn with_k_fermi(k_fermi: f64, positions: &[[f64; 3]]) -> Result<Self> {
        if !k_fermi.is_finite() || k_fermi <= 0.0 {
            return Err(Error::Domain(format!("k_fermi = {k_fermi} must be > 0")));
        }
        if positions.is_empty() {
            return Err(Error::Validation("at least one position is required".into()));
        }
        if positions.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::Validation("non-finite position coordinate".into()));
        }
        Ok(Self {
            k_fermi,
            positions: positions.iter().map(|p| Vector3::from(*p)).collect(),
        })
    }

    pub fn k_fermi(&self) -> f64 {
        self.k_fermi
    }

    pub fn electrons(&self) -> usize {
        self.positions.len()
    }

    pub fn position(&self, i: usize) -> [f64; 3] {
        self.positions[i].into()
    }

    /// k_F |r_i - r_j|.
    pub fn scaled_separation(&self, i: usize, j: usize) -> f64 {
        self.k_fermi * (self.positions[i] - self.positions[j]).norm()
    }

    /// Exchange kernel between electrons i and j.
    pub fn pair_exchange(&self, i: usize, j: usize) -> Result<ExchangeValue> {
        exchange_f(self.scaled_separation(i, j))
    }
}

/// Unnormalized 2^n × 2^n spin density matrix of n electrons by the signed
/// permutation sum, with each non-fixed point contributing one directed
/// kernel factor f(k_F|r_i - r_{σ(i)}|).
///
/// Reproduces [`two_electron_rho`] at n = 2 and [`three_electron_rho`] at
/// n = 3 entrywise. Hermitian by construction; positive semidefinite for
/// position-derived kernels.
pub fn n_electron_rho(geom: &ExchangeGeometry) -> Result<DensityMatrix> {
    let n = geom.electrons();
    if n > MAX_ELECTRONS {
        return Err(Error::ResourceLimit {
            requested: 1usize << n,
            limit: 1usize << MAX_ELECTRONS,
        });
    }
    let mut kernel = vec![vec![1.0f64; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let f = geom.pair_exchange(i, j)?.value();
            kernel[i][j] = f;
            kernel[j][i] = f;
        }
    }

    let dim = 1usize << n;
    let mut entries = vec![vec![0.0f64; dim]; dim];
    for perm in (0..n).permutations(n) {
        let sign = permutation_parity(&perm) as f64;
        let mut factors: Vec<f64> = perm
            .iter()
            .enumerate()
            .filter(|&(i, &target)| i != target)
            .map(|(i, &target)| kernel[i][target])
            .collect();
        let weight = sign * sorted_product(&mut factors);
        for t in 0..dim {
            let mut s = 0usize;
            for slot in 0..n {
                s = (s << 1) | spin(t, perm[slot], n);
            }
            if s <= t {
                entries[s][t] += weight;
            }
        }
    }
    DensityMatrix::raw(real_matrix(dim, |i, j| {
        if i <= j {
            entries[i][j]
        } else {
            entries[j][i]
        }
    }))
}

/// Sign of a permutation given in one-line notation: (-1)^(n - #cycles).
pub fn permutation_parity(perm: &[usize]) -> i32 {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut cycles = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut at = start;
        while !seen[at] {
            seen[at] = true;
            at = perm[at];
        }
    }
    if (n - cycles) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Spatial trace of a three-electron state with a far third electron,
/// realized as the far-separation limit: with both kernels to the third
/// electron below [`FAR_KERNEL_TOL`], the spin-partial trace of the
/// normalized three-electron matrix reduces to the normalized two-electron
/// matrix of the close pair.
pub fn far_trace_reduction(geom: &ExchangeGeometry) -> Result<DensityMatrix> {
    if geom.electrons() != 3 {
        return Err(Error::Validation(format!(
            "expected exactly 3 electrons, got {}",
            geom.electrons()
        )));
    }
    let f1 = geom.pair_exchange(0, 1)?;
    let f2 = geom.pair_exchange(0, 2)?;
    let f3 = geom.pair_exchange(1, 2)?;
    if f2.value().abs() > FAR_KERNEL_TOL || f3.value().abs() > FAR_KERNEL_TOL {
        return Err(Error::Precondition(format!(
            "third electron is not far: |f2| = {:.3e}, |f3| = {:.3e} exceed {FAR_KERNEL_TOL:.0e}",
            f2.value().abs(),
            f3.value().abs()
        )));
    }
    let rho = three_electron_rho(f1, f2, f3).normalize()?;
    partial_trace(&rho, &[2, 2, 2], &[0, 1])
}

/// Unnormalized two-spin state of the antisymmetrized first-quantized model
/// with spatial overlap ⟨ψ₁|ψ₂⟩ = ε:
/// |01⟩⟨01| + |10⟩⟨10| - ε²(|01⟩⟨10| + |10⟩⟨01|).
///
/// Entangled for every ε > 0 by the partial-transpose criterion; the
/// normalized minimum partial-transpose eigenvalue is -ε²/2.
pub fn overlap_model_rho(epsilon: f64) -> Result<DensityMatrix> {
    if !epsilon.is_finite() || !(0.0..=1.0).contains(&epsilon) {
        return Err(Error::Domain(format!("epsilon = {epsilon} outside [0, 1]")));
    }
    let e2 = epsilon * epsilon;
    let mut m = DMatrix::zeros(4, 4);
    m[(1, 1)] = Complex64::new(1.0, 0.0);
    m[(2, 2)] = Complex64::new(1.0, 0.0);
    m[(1, 2)] = Complex64::new(-e2, 0.0);
    m[(2, 1)] = Complex64::new(-e2, 0.0);
    DensityMatrix::raw(m)
}

/// Polarization state of two non-interacting bosons: all 16 entries equal
/// to 1/4, the pure product projector onto (|H⟩+|V⟩)⊗(|H⟩+|V⟩)/2.
pub fn boson_polarization_rho() -> DensityMatrix {
    DensityMatrix::raw(real_matrix(4, |_, _| 0.25)).expect("hermitian by construction")
}

/// One separation of a correlation scan: the kernel and every two-spin
/// measure of the normalized exchange state at that distance.
#[derive(Debug, Clone, Copy)]
pub struct ScanRow {
    pub r: f64,
    pub f: f64,
    pub min_ppt_eig: f64,
    pub concurrence: f64,
    pub eof_nats: f64,
    pub mutual_info_nats: f64,
    pub negativity: f64,
}

/// Evaluate every scan column for a single kernel value.
pub fn scan_row(r: f64, f: ExchangeValue) -> Result<ScanRow> {
    let rho = two_electron_rho(f).normalize()?;
    Ok(ScanRow {
        r,
        f: f.value(),
        min_ppt_eig: min_partial_transpose_eigenvalue(&rho, (2, 2), 1)?,
        concurrence: concurrence(&rho)?,
        eof_nats: entanglement_of_formation(&rho)?,
        mutual_info_nats: mutual_information(&rho, (2, 2))?,
        negativity: negativity(&rho, (2, 2), 1)?,
    })
}

/// Scan the two-electron correlation measures over `steps` equally spaced
/// separations in [r_min, r_max]. Separations are dimensionless (already
/// k_F·r) when `k_fermi` is `None`.
pub fn correlation_scan(
    k_fermi: Option<f64>,
    r_min: f64,
    r_max: f64,
    steps: usize,
) -> Result<Vec<ScanRow>> {
    if steps < 2 {
        return Err(Error::Validation(format!("steps = {steps} must be ≥ 2")));
    }
    if !r_min.is_finite() || !r_max.is_finite() || r_min < 0.0 || r_max <= r_min {
        return Err(Error::Validation(format!(
            "bad scan range [{r_min}, {r_max}]"
        )));
    }
    let kf = match k_fermi {
        Some(k) if !k.is_finite() || k <= 0.0 => {
            return Err(Error::Domain(format!("k_fermi = {k} must be > 0")))
        }
        Some(k) => k,
        None => 1.0,
    };
    let mut rows = Vec::with_capacity(steps);
    for i in 0..steps {
        let r = r_min + (r_max - r_min) * i as f64 / (steps - 1) as f64;
        rows.push(scan_row(r, exchange_f(kf * r)?)?);
    }
    Ok(rows)
}
