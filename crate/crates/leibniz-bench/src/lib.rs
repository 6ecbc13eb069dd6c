//! Benchmark-only crate. The benchmarks live in `benches/kernels.rs`;
//! this library intentionally exports nothing.
