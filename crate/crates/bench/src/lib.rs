//! Workloads shared by the benchmarks.

use hcchar_core::partitions::{odd_partitions, strict_partitions};
use hcchar_core::{Engine, Method, Partition, StrictPartition};

/// Every `(λ, μ)` cell of the table for `n`.
pub fn table_cells(n: u32) -> Vec<(StrictPartition, Partition)> {
    let mus = odd_partitions(n);
    strict_partitions(n)
        .into_iter()
        .flat_map(|l| mus.iter().map(move |m| (l.clone(), m.clone())))
        .collect()
}

/// Computes every cell with a fresh engine so memo tables start empty.
pub fn cold_table(n: u32, method: Method) -> usize {
    let engine = Engine::new();
    table_cells(n)
        .iter()
        .map(|(l, m)| engine.character(method, l, m).expect("table cell"))
        .filter(|v| !v.is_zero())
        .count()
}
