//! Benchmark registry, scenario recommender, and stabilizer verifier for
//! quantum error-correction codes.
//!
//! * [`registry`] holds the eight-parameter records for each code and answers
//!   overhead and budget questions exactly.
//! * [`recommender`] filters and ranks codes for a hardware scenario.
//! * [`stabverify`] checks protection claims by brute-force enumeration over
//!   the binary-symplectic Pauli group.
//! * [`benchdata`] exports comparison curves, radar axes, and logical error
//!   rate models as CSV or JSON.
//! * [`cli`] is the command-line front end.

pub mod registry;
pub mod recommender;
pub mod stabverify;
pub mod benchdata;
pub mod cli;
