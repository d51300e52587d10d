use pacsim::polar::{polar_transform, ScState};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `ln P(y, u_prefix | u_j = 0) / P(y, u_prefix | u_j = 1)` by summing over
/// every completion of the input vector.
fn brute_force_llr(llrs: &[f64], prefix: &[u8]) -> f64 {
    let len = llrs.len();
    let j = prefix.len();
    let free = len - j - 1;
    let mut sums = [0.0f64; 2];
    for bit in 0..2u8 {
        for tail in 0..(1u32 << free) {
            let mut u = prefix.to_vec();
            u.push(bit);
            u.extend((0..free).map(|t| ((tail >> t) & 1) as u8));
            let x = polar_transform(&u).unwrap();
            let log_w: f64 = x.iter().zip(llrs).map(|(&b, &l)| if b == 0 { l / 2.0 } else { -l / 2.0 }).sum();
            sums[bit as usize] += log_w.exp();
        }
    }
    (sums[0] / sums[1]).ln()
}

fn replay(llrs: &[f64], prefix: &[u8]) -> ScState {
    let mut sc = ScState::new(llrs).unwrap();
    for &b in prefix {
        sc.commit_bit(b).unwrap();
    }
    sc
}

#[test]
fn sc_recursion_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for len in [1usize, 2, 4, 8] {
        for _ in 0..25 {
            let llrs: Vec<f64> = (0..len).map(|_| rng.random_range(-4.0..4.0)).collect();
            let u: Vec<u8> = (0..len).map(|_| rng.random_range(0..2)).collect();
            let mut sc = ScState::new(&llrs).unwrap();
            for j in 0..len {
                let lam = sc.next_bit_llr().unwrap();
                let oracle = brute_force_llr(&llrs, &u[..j]);
                assert!(
                    (lam - oracle).abs() <= 1e-9 * oracle.abs().max(1.0),
                    "N={len} j={j}: {lam} vs {oracle}"
                );
                let p0 = 1.0 / (1.0 + (-lam).exp());
                let p1 = 1.0 / (1.0 + lam.exp());
                assert!((p0 + p1 - 1.0).abs() < 1e-12);
                sc.commit_bit(u[j]).unwrap();
            }
        }
    }
}

#[test]
fn first_bit_is_full_check_node_tree() {
    let llrs = [0.9, -1.3, 2.2, 0.4];
    let f = pacsim::polar::f_combine;
    let direct = f(f(llrs[0], llrs[2]), f(llrs[1], llrs[3]));
    let mut sc = ScState::new(&llrs).unwrap();
    assert_eq!(sc.next_bit_llr().unwrap(), direct);
    // re-initialising is idempotent
    sc.commit_bit(1).unwrap();
    sc.reset(&llrs).unwrap();
    assert_eq!(sc.next_bit_llr().unwrap(), direct);
    sc.rewind_to(0).unwrap();
    assert_eq!(sc.next_bit_llr().unwrap(), direct);
}

#[test]
fn noiseless_signs_follow_the_input() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let u: Vec<u8> = (0..64).map(|_| rng.random_range(0..2)).collect();
    let x = polar_transform(&u).unwrap();
    let llrs: Vec<f64> = x.iter().map(|&b| if b == 0 { 1e4 } else { -1e4 }).collect();
    let mut sc = ScState::new(&llrs).unwrap();
    for &bit in &u {
        let lam = sc.next_bit_llr().unwrap();
        assert_eq!(lam < 0.0, bit == 1);
        sc.commit_bit(bit).unwrap();
    }
}

#[derive(Debug, Clone)]
enum Op {
    Commit(u8),
    Rewind(usize),
}

fn op() -> impl Strategy<Value = Op> {
    prop_oneof![
        3 => (0u8..2).prop_map(Op::Commit),
        1 => (0usize..64).prop_map(Op::Rewind),
    ]
}

proptest! {
    #[test]
    fn commit_rewind_walk_matches_replay(
        llrs in prop::collection::vec(-6.0f64..6.0, 32),
        ops in prop::collection::vec(op(), 1..200),
    ) {
        let mut sc = ScState::new(&llrs).unwrap();
        let mut prefix: Vec<u8> = Vec::new();
        for op in ops {
            match op {
                Op::Commit(b) if prefix.len() < 32 => {
                    sc.next_bit_llr().unwrap();
                    sc.commit_bit(b).unwrap();
                    prefix.push(b);
                }
                Op::Commit(_) => {}
                Op::Rewind(d) => {
                    let d = d % (prefix.len() + 1);
                    sc.rewind_to(d).unwrap();
                    prefix.truncate(d);
                }
            }
            prop_assert_eq!(sc.committed(), prefix.as_slice());
            if prefix.len() < 32 {
                let mut fresh = replay(&llrs, &prefix);
                prop_assert_eq!(sc.next_bit_llr().unwrap(), fresh.next_bit_llr().unwrap());
            }
        }
    }

    #[test]
    fn polar_transform_is_linear_involution(
        a in prop::collection::vec(0u8..2, 64),
        b in prop::collection::vec(0u8..2, 64),
    ) {
        let ta = polar_transform(&a).unwrap();
        let tb = polar_transform(&b).unwrap();
        let sum: Vec<u8> = a.iter().zip(&b).map(|(x, y)| x ^ y).collect();
        let tsum: Vec<u8> = ta.iter().zip(&tb).map(|(x, y)| x ^ y).collect();
        prop_assert_eq!(polar_transform(&sum).unwrap(), tsum);
        prop_assert_eq!(polar_transform(&ta).unwrap(), a);
    }
}
