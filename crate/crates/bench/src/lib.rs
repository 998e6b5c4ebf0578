//! Benchmark fixtures shared by the criterion targets.

use hookpoly::{enumerate_partitions, Partition};

/// Every partition of `n`, largest first in reverse lexicographic order.
pub fn shapes(n: usize) -> Vec<Partition> {
    enumerate_partitions(n)
}

/// The staircase partition `(k, k-1, ..., 1)`.
pub fn staircase(k: usize) -> Partition {
    Partition::new((1..=k).rev().collect()).expect("staircase is a partition")
}
