//! Criterion benchmarks for indcx; see `benches/`.
