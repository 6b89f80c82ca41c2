//! Criterion benchmarks for doublekit; see `benches/`.
