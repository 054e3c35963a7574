//! Randomized structural invariants of the series algebra.

use fishburn::{IntegerRing, Mode, ModularRing, Series};
use num_bigint::BigInt;
use proptest::prelude::*;

fn int_poly(max_deg: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-50i64..=50, 1..=max_deg + 1)
}

proptest! {
    /// Splitting by exponent residue class and reassembling is the identity.
    #[test]
    fn dissection_reassembles(coeffs in int_poly(60), p in prop::sample::select(vec![2u64, 3, 5, 7, 11])) {
        let f = Series::from_i64_coeffs(IntegerRing, &coeffs, Mode::Exact);
        let table = f.dissect(p).unwrap();
        prop_assert_eq!(table.reassemble().unwrap(), f);
    }

    /// Arithmetic over Z followed by reduction mod m matches arithmetic in Z/m.
    #[test]
    fn reduction_is_a_ring_homomorphism(
        a in int_poly(20),
        b in int_poly(20),
        m in prop::sample::select(vec![2u64, 5, 24, 97, 1 << 20]),
    ) {
        let za = Series::from_i64_coeffs(IntegerRing, &a, Mode::Exact);
        let zb = Series::from_i64_coeffs(IntegerRing, &b, Mode::Exact);
        let ring = ModularRing::new(m);
        let ma = Series::from_i64_coeffs(ring.clone(), &a, Mode::Exact);
        let mb = Series::from_i64_coeffs(ring.clone(), &b, Mode::Exact);

        let reduce = |f: &Series<IntegerRing>| {
            let coeffs: Vec<u64> = (0..f.coeffs().len())
                .map(|k| {
                    let r: BigInt = f.coeff(k) % BigInt::from(m);
                    let r = if r < BigInt::from(0) { r + BigInt::from(m) } else { r };
                    u64::try_from(r).unwrap()
                })
                .collect();
            Series::from_coeffs(ring.clone(), coeffs, Mode::Exact)
        };

        prop_assert_eq!(reduce(&za.mul(&zb).unwrap()), ma.mul(&mb).unwrap());
        prop_assert_eq!(reduce(&za.add(&zb).unwrap()), ma.add(&mb).unwrap());
        prop_assert_eq!(reduce(&za.sub(&zb).unwrap()), ma.sub(&mb).unwrap());
    }

    /// q -> 1-q is an involution on exact polynomials.
    #[test]
    fn one_minus_q_substitution_is_an_involution(coeffs in int_poly(40)) {
        let f = Series::from_i64_coeffs(IntegerRing, &coeffs, Mode::Exact);
        let twice = f.substitute_one_minus_q().unwrap().substitute_one_minus_q().unwrap();
        prop_assert_eq!(twice, f);
    }

    /// theta f = q * df/dq, coefficient by coefficient.
    #[test]
    fn theta_is_q_times_derivative(coeffs in int_poly(30)) {
        let f = Series::from_i64_coeffs(IntegerRing, &coeffs, Mode::Exact);
        let theta = f.theta_operator(1);
        let qdq = f.derivative(1).shift(1);
        prop_assert_eq!(theta, qdq);
    }

    /// Truncated products agree with exact products on every kept coefficient.
    #[test]
    fn truncated_mul_agrees_with_exact(a in int_poly(25), b in int_poly(25), order in 0usize..40) {
        let za = Series::from_i64_coeffs(IntegerRing, &a, Mode::Exact);
        let zb = Series::from_i64_coeffs(IntegerRing, &b, Mode::Exact);
        let exact = za.mul(&zb).unwrap();
        let truncated = za.truncate(order).mul(&zb.truncate(order)).unwrap();
        for k in 0..=order {
            prop_assert_eq!(truncated.coeff(k), exact.coeff(k), "coefficient {}", k);
        }
    }

    /// Exact division undoes multiplication with no remainder.
    #[test]
    fn divide_exact_inverts_mul(a in int_poly(20), b in int_poly(20)) {
        let za = Series::from_i64_coeffs(IntegerRing, &a, Mode::Exact);
        let zb = Series::from_i64_coeffs(IntegerRing, &b, Mode::Exact);
        prop_assume!(!zb.is_zero());
        let product = za.mul(&zb).unwrap();
        let (q, exact) = product.divide_exact(&zb).unwrap();
        prop_assert!(exact);
        prop_assert_eq!(q, za);
    }
}
