//! Criterion benchmarks for `tforce-core`; see `benches/operations.rs`.
