//! Property tests for the combinatorial pieces: block partitions over
//! arbitrary ordinate sets and Möbius multiplicativity.

use proptest::prelude::*;

use zetalab::zero_series::moebius_sieve;
use zetalab::zeta::block_partition;

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

proptest! {
    /// T_n > n, strict increase, and distance at least 0.3 from every
    /// ordinate, for arbitrary ascending ordinate sets.
    #[test]
    fn block_partition_invariants(gaps in prop::collection::vec(0.05f64..4.0, 1..60)) {
        let mut ordinates = Vec::with_capacity(gaps.len());
        let mut t = 14.0;
        for gap in gaps {
            t += gap;
            ordinates.push(t);
        }
        let bounds = block_partition(&ordinates);
        for (k, w) in bounds.windows(2).enumerate() {
            prop_assert!(w[0] < w[1], "bounds not increasing at {k}");
        }
        for (k, &t_n) in bounds.iter().enumerate() {
            prop_assert!(t_n > (k + 1) as f64, "T_{} = {t_n}", k + 1);
            for &gamma in &ordinates {
                prop_assert!((gamma - t_n).abs() >= 0.3 - 1e-12);
            }
        }
    }

    /// μ(mn) = μ(m)μ(n) for coprime m, n.
    #[test]
    fn moebius_multiplicativity(m in 1u64..400, n in 1u64..400) {
        prop_assume!(gcd(m, n) == 1);
        let table = moebius_sieve(m * n).unwrap();
        prop_assert_eq!(table.mu(m * n), table.mu(m) * table.mu(n));
    }
}
