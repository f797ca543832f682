//! Criterion benchmarks for the core crate; see `benches/center.rs`.
