//! Command-line front end, instance generators, independent oracles and
//! verification sweeps.

pub mod cli;
pub mod generate;
pub mod oracle;
pub mod verify;

pub use generate::{InstanceSpec, Mode};
pub use oracle::{oracle_rim_hook_core, oracle_young_hooks};
pub use verify::{verify, Failure, TheoremId, VerifyReport};
