//! Benchmark-only crate; see `benches/decomposition.rs`.
