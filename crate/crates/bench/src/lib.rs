//! Criterion benchmarks for the transversal toolkit; see `benches/`.
