//! Benchmark-only crate; see `benches/skein.rs`.
