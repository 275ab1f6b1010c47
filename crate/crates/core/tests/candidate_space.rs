//! Exhaustive checks of the Betti-data identities over small candidate spaces.

use milnor::invariants::{
    classify, dpw_bounds, e_invariant, enumerate_admissible, enumerate_partitions, gap_to_max,
    gap_to_max_prime, partition_count, tjurina_formula, validate_candidate, NearlyMaximalCase,
};
use milnor::BettiData;

fn accepted(max_d: i64, max_t: i64) -> Vec<BettiData> {
    let mut out = Vec::new();
    for d in 3..=max_d {
        for t in 1..=max_t {
            for c in enumerate_admissible(d, t).unwrap() {
                assert!(validate_candidate(&c).accepted());
                let b = BettiData::new(c.exponents, c.epsilons).unwrap();
                assert_eq!(b.degree(), d);
                out.push(b);
            }
        }
    }
    out
}

#[test]
fn candidate_space_is_large_enough() {
    assert!(accepted(9, 4).len() >= 100);
}

#[test]
fn gap_identities() {
    for b in accepted(9, 4) {
        let d1 = b.exponents()[0];
        let tau = tjurina_formula(&b).unwrap();
        let bounds = dpw_bounds(b.degree(), d1).unwrap();
        assert_eq!(gap_to_max(&b).unwrap(), bounds.tau_max - tau, "{b}");
        match bounds.tau_max_prime {
            Some(p) => assert_eq!(gap_to_max_prime(&b).unwrap(), p - tau, "{b}"),
            None => assert!(gap_to_max_prime(&b).is_err()),
        }
        assert_eq!(e_invariant(&b).unwrap(), tau - bounds.tau_min, "{b}");
    }
}

#[test]
fn gap_one_and_two_characterize_nearly_free_and_mpog() {
    for b in accepted(9, 4) {
        let gap = gap_to_max(&b).unwrap();
        let c = classify(&b);
        assert_eq!(gap == 1, c.nearly_free, "{b}");
        assert_eq!(gap == 2, c.mpog, "{b}");
    }
}

#[test]
fn gap_prime_zero_and_one_characterize_maximal_shapes() {
    let mut seen = [0usize; 3];
    for b in accepted(9, 4) {
        let Ok(gap) = gap_to_max_prime(&b) else { continue };
        let c = classify(&b);
        assert_eq!(gap == 0, c.maximal_tjurina, "{b}");
        assert_eq!(gap == 1, c.nearly_maximal_tjurina.is_some(), "{b}");
        if c.maximal_tjurina {
            seen[0] += 1;
        }
        match c.nearly_maximal_tjurina {
            Some(NearlyMaximalCase::One) => seen[1] += 1,
            Some(NearlyMaximalCase::Two) => seen[2] += 1,
            None => {}
        }
    }
    assert!(seen.iter().all(|&n| n > 0), "{seen:?}");
}

#[test]
fn partition_counts_up_to_12() {
    for t in 1..=12i64 {
        let all = enumerate_partitions(t).unwrap();
        assert_eq!(all.len(), 1 << (t - 1));
        for s in 1..=t as usize {
            let n = all.iter().filter(|p| p.len() == s).count() as u64;
            assert_eq!(n, partition_count(t as u64, s as u64));
        }
        assert!(all.iter().all(|p| p.total() == t));
    }
}
