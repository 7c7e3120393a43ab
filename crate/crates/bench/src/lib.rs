//! Seeded workloads shared by the benchmarks.

use sbtg_core::random::{random_canonical_space, random_sbtg_instance, seeded};
use sbtg_core::{SbtgInstance, SoftBitopSpace};

/// `count` random instances with at most `max_se` soft elements, from a fixed seed.
pub fn sbtg_instances(count: u64, max_se: usize) -> Vec<SbtgInstance> {
    (0..count)
        .map(|s| random_sbtg_instance(&mut seeded(s), max_se))
        .collect()
}

/// `count` random spaces of canonical topologies, from a fixed seed.
pub fn canonical_spaces(count: u64, max_se: usize) -> Vec<SoftBitopSpace> {
    (0..count)
        .map(|s| random_canonical_space(&mut seeded(1_000 + s), max_se))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn workloads_are_reproducible() {
        let a = sbtg_instances(4, 12);
        let b = sbtg_instances(4, 12);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.space().index().len(), y.space().index().len());
        }
        assert_eq!(canonical_spaces(3, 64).len(), 3);
    }
}
