//! Second-degree polynomial Heisenberg algebra realized on the harmonic
//! oscillator with `a_g = a^3`: algebra checks in a truncated Fock space,
//! the three Painlevé IV solutions seeded by the extremal states, and the
//! three families of `a^3` coherent states with their wave packets.

pub mod cli;
pub mod coherent;
pub mod error;
pub mod fock;
pub mod grid;
pub mod output;
pub mod painleve;
pub mod series;
pub mod verify;
pub mod wavepacket;

pub use error::{Error, Result};
pub use num_complex::Complex64 as C64;
