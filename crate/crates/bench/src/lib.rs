//! Benchmarks for the `triring` crate live under `benches/`.
