//! Randomised checks at sizes beyond exhaustive enumeration. Every expected
//! value here is recomputed locally from membership tests.

use fibcube::bijections::{
    phi_gamma_left, phi_gamma_left_inverse, theta_gamma_right, theta_gamma_right_inverse,
    theta_lambda, theta_lambda_inverse, ImbalancedCouple,
};
use fibcube::complement::{classify_complement_vertex, embed_gamma_into_complement, sigma};
use fibcube::imbalance::{imbalance_gamma, imbalance_lambda, Side};
use fibcube::strings::is_member;
use fibcube::{BitString, Family, StringClass};
use proptest::prelude::*;

fn no_11(bits: u64, n: u32) -> bool {
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let b = bits & mask;
    b & (b >> 1) == 0
}

fn in_lucas(bits: u64, n: u32) -> bool {
    no_11(bits, n) && !(n > 1 && bits & 1 == 1 && (bits >> (n - 1)) & 1 == 1)
}

fn member(x: &BitString, f: Family) -> bool {
    match f {
        Family::Fibonacci => no_11(x.value(), x.len()),
        Family::Lucas => in_lucas(x.value(), x.len()),
        Family::FibComplement => !no_11(x.value(), x.len()),
        Family::Hypercube => true,
    }
}

fn deg(x: &BitString, f: Family) -> u32 {
    (1..=x.len()).filter(|&j| member(&x.flip(j), f)).count() as u32
}

/// Keeps only the highest bit of each run of ones.
fn fib_string(raw: u64, n: u32) -> BitString {
    let b = raw & ((1u64 << n) - 1);
    BitString::new(b & !(b >> 1), n).unwrap()
}

fn lucas_string(raw: u64, n: u32) -> BitString {
    let x = fib_string(raw, n);
    if x.bit(1) && x.bit(n) {
        x.flip(n)
    } else {
        x
    }
}

fn edge_strategy() -> impl Strategy<Value = (u32, u64, u32)> {
    (4u32..=40).prop_flat_map(|n| (Just(n), any::<u64>(), 1..=n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn gamma_classifier_matches_degrees((n, raw, i) in edge_strategy()) {
        let x = fib_string(raw, n).with_bit(i, true);
        prop_assume!(member(&x, Family::Fibonacci));
        let y = x.flip(i);
        let v = imbalance_gamma(&x, i).unwrap();
        prop_assert_eq!(v.value(), deg(&y, Family::Fibonacci) - deg(&x, Family::Fibonacci));
    }

    #[test]
    fn lambda_classifier_matches_degrees((n, raw, i) in edge_strategy()) {
        let x = lucas_string(raw, n).with_bit(i, true);
        prop_assume!(member(&x, Family::Lucas));
        let y = x.flip(i);
        let v = imbalance_lambda(&x, i).unwrap();
        prop_assert_eq!(v.value(), deg(&y, Family::Lucas) - deg(&x, Family::Lucas));
    }

    #[test]
    fn locality((n, raw, i) in edge_strategy()) {
        let x = fib_string(raw, n).with_bit(i, true);
        prop_assume!(member(&x, Family::Fibonacci));
        let y = x.flip(i);
        for j in (1..=n).filter(|&j| j.abs_diff(i) > 1) {
            prop_assert_eq!(member(&x.flip(j), Family::Fibonacci), member(&y.flip(j), Family::Fibonacci));
        }
        if member(&x, Family::Lucas) {
            for j in 1..=n {
                let d = j.abs_diff(i);
                if d > 1 && d < n - 1 {
                    prop_assert_eq!(member(&x.flip(j), Family::Lucas), member(&y.flip(j), Family::Lucas));
                }
            }
        }
    }

    #[test]
    fn gamma_maps_round_trip((n, raw, i) in edge_strategy(), right in any::<bool>()) {
        let y = fib_string(raw, n).with_bit(i, false);
        let side = if right { Side::Right } else { Side::Left };
        if let Ok(c) = ImbalancedCouple::new(Family::Fibonacci, y, i, side) {
            let image = if right { theta_gamma_right(&c) } else { phi_gamma_left(&c) }.unwrap();
            prop_assert_eq!(image.n(), n - 1);
            prop_assert!(member(&image.lower, Family::Fibonacci) && member(&image.upper(), Family::Fibonacci));
            let back = if right { theta_gamma_right_inverse(&image) } else { phi_gamma_left_inverse(&image) }.unwrap();
            prop_assert_eq!(back, c);
        }
    }

    #[test]
    fn lambda_maps_round_trip((n, raw, i) in edge_strategy(), right in any::<bool>()) {
        let y = lucas_string(raw, n).with_bit(i, false);
        let side = if right { Side::Right } else { Side::Left };
        if let Ok(c) = ImbalancedCouple::new(Family::Lucas, y, i, side) {
            let z = theta_lambda(&c).unwrap();
            prop_assert_eq!(z.len(), n - 4);
            prop_assert!(is_member(&z, StringClass::Fib));
            prop_assert_eq!(theta_lambda_inverse(&z, n, i, side).unwrap(), c);
        }
    }

    #[test]
    fn embedding_carries_edges((n, raw, i) in edge_strategy()) {
        let x = fib_string(raw, n);
        let t = embed_gamma_into_complement(&x).unwrap();
        prop_assert!(member(&t, Family::FibComplement));
        let u = x.flip(i);
        if member(&u, Family::Fibonacci) {
            prop_assert_eq!(embed_gamma_into_complement(&u).unwrap(), t.flip(sigma(i)));
        }
    }

    #[test]
    fn complement_degree_class((n, raw, i) in edge_strategy()) {
        let x = BitString::new(raw & ((1u64 << n) - 1), n).unwrap();
        let x = if member(&x, Family::FibComplement) { x } else { x.with_bit(i, true).with_bit(i.max(2) - 1, true) };
        prop_assume!(member(&x, Family::FibComplement));
        let class = classify_complement_vertex(&x).unwrap();
        prop_assert_eq!(class.degree(n), deg(&x, Family::FibComplement));
    }
}
