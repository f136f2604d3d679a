//! Exact engine for counting configurations of homologous saddle
//! connections on strata of abelian differentials and evaluating their
//! Siegel-Veech constants.
//!
//! The crate is organized around the two counting problems: saddle
//! connections joining two distinct zeros ([`distinct`], [`sv::distinct`])
//! and closed saddle connections joining a zero to itself ([`closed`],
//! [`sv::closed`]). Constants are exact rationals built from the bundled
//! volume table ([`volumes`]); configurations have a text notation
//! ([`notation`]) used by the command-line front end.

pub mod closed;
pub mod distinct;
pub mod error;
pub mod notation;
pub mod rat;
pub mod stratum;
pub mod sv;
pub mod volumes;

pub use error::{Error, Result};
pub use rat::Rat;
pub use stratum::{
    classify_components, delta, genus_of, hyperelliptic_spin_parity, ComponentLabel, Parity,
    Partition, Stratum, StratumComponent,
};
pub use sv::{ConstantKind, SVConstant};
pub use volumes::{load_volume_table, StratumVolume, VolumeTable};
