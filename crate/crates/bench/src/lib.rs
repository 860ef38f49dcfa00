//! Benchmarks live in `benches/`; this crate only hosts them.

pub use hurwitz_core;
