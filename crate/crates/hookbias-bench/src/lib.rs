//! Benchmark-only crate; see `benches/hot_paths.rs`. The library itself is
//! empty so that `cargo test --workspace` has nothing extra to build here.
