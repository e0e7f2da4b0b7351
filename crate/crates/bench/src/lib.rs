//! Benchmarks for the core engine; see `benches/engine.rs`.
