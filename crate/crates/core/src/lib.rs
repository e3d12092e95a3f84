//! Entanglement and correlation numerics for mode-based (second-quantized)
//! descriptions of quantum systems.
//!
//! The crate has four parts:
//!
//! - [`measures`]: density matrices, pure bipartite states, and the standard
//!   entanglement/correlation measures (von Neumann entropy, Schmidt entropy,
//!   partial transpose, negativity, Wootters concurrence, entanglement of
//!   formation, mutual information, partial trace).
//! - [`mode_transform`]: Bogoliubov mode-transformation algebra and the
//!   closed-form entanglement expressions it generates — coupled oscillators,
//!   general mode changes, condensate pair modes, and the Unruh/Hawking
//!   temperatures.
//! - [`fock_oracle`]: a brute-force truncated-Fock-space simulator used as an
//!   independent oracle for the closed forms in [`mode_transform`].
//! - [`fermi_gas`]: spin correlations of an ideal Fermi gas at zero
//!   temperature — the exchange kernel, two/three/n-electron spin density
//!   matrices from signed permutation sums, separability diagnostics, the
//!   entanglement radius, a first-quantized overlap model, and the bosonic
//!   polarization counterpart.
//!
//! All entropies are returned in nats. Everything is a pure function of its
//! inputs; values are freely shareable across threads and results are
//! deterministic for fixed inputs on a given platform.

pub mod error;
pub mod fermi_gas;
pub mod fock_oracle;
pub mod measures;
pub mod mode_transform;

pub use error::{Error, Result};
pub use fermi_gas::{ExchangeGeometry, ExchangeValue};
pub use fock_oracle::{LadderOperatorSet, TruncatedFockState};
pub use measures::{DensityMatrix, PureBipartiteState};
pub use mode_transform::{
    BogoliubovMap, CondensatePair, GeometricParameter, OscillatorPair, Units,
};
