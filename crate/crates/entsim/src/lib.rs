//! Simulation of multiqubit entanglement dynamics under local noise.
//!
//! The crate builds GHZ, W and W-like states, evolves them under per-qubit
//! dephasing or amplitude-damping Kraus channels, and quantifies the
//! surviving entanglement with negativity, concurrence, Meyer-Wallach and
//! generalized-concurrence measures. A boundary-reduction technique maps the
//! bipartite entanglement of noisy W states onto a two-qubit problem with
//! closed-form decay laws, cross-validated here against brute-force
//! computation on the full register. On top of that sit simulations of
//! teleportation and of splitting quantum information among many receivers,
//! with exact average fidelities and the negativity-based fidelity bound.
//!
//! Start with the runnable examples (`cargo run --example ...`) or the
//! `entsim` binary, which exposes `sweep`, `verify` and `protocol`
//! subcommands emitting CSV.

pub mod channels;
pub mod error;
pub mod linalg;
pub mod measures;
pub mod protocols;
pub mod reduction;
pub mod states;
pub mod sweep;
pub mod verify;

pub use channels::{
    amplitude_damping, channel, dephasing, ChannelKind, DensityOperator, NoiseClock, QubitChannel,
};
pub use error::{Error, Result};
pub use linalg::{CMatrix, CVector, QubitIndexing};
pub use measures::Bipartition;
pub use states::{PureState, TwoQubitGateStep, WLikeSpec, WLikeVariant};
