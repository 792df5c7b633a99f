use hopf_core::cyclofield::{order_of, ScalarJson};
use hopf_core::{make_field, CycScalar, Field, RootOfUnity};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

const ORDERS: [usize; 6] = [1, 2, 4, 6, 12, 20];

fn scalar(field: &Field, coeffs: &[(i64, i64)]) -> CycScalar {
    let c: Vec<BigRational> =
        coeffs.iter().map(|&(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q.max(1)))).collect();
    CycScalar::from_coefficients(field, &c[..c.len().min(field.degree())])
}

fn arb_field_and(k: usize) -> impl Strategy<Value = (Field, Vec<CycScalar>)> {
    (prop::sample::select(ORDERS.to_vec()), prop::collection::vec(prop::collection::vec((-9i64..=9, 1i64..=5), 8), k))
        .prop_map(|(n, raw)| {
            let f = make_field(n).unwrap();
            let xs = raw.iter().map(|c| scalar(&f, c)).collect();
            (f, xs)
        })
}

proptest! {
    #[test]
    fn field_axioms((_f, xs) in arb_field_and(3)) {
        let (a, b, c) = (&xs[0], &xs[1], &xs[2]);
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
        prop_assert_eq!(&(a + b) + c, a + &(b + c));
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        prop_assert!((&(a - a)).is_zero());
    }

    #[test]
    fn nonzero_elements_invert((f, xs) in arb_field_and(1)) {
        let a = &xs[0];
        if a.is_zero() {
            prop_assert!(a.inv().is_err());
        } else {
            prop_assert_eq!(a * &a.inv().unwrap(), CycScalar::one(&f));
        }
    }

    #[test]
    fn serialization_is_canonical((f, xs) in arb_field_and(1)) {
        let a = &xs[0];
        prop_assert_eq!(CycScalar::from_compact(&f, &a.to_compact()).unwrap(), a.clone());
        let json = serde_json::to_string(&a.to_json()).unwrap();
        let back: ScalarJson = serde_json::from_str(&json).unwrap();
        let b = CycScalar::from_json(&f, &back).unwrap();
        prop_assert_eq!(b.coefficients(), a.coefficients());
        prop_assert_eq!(b.to_compact(), a.to_compact());
    }

    #[test]
    fn root_exponents_add(n in prop::sample::select(ORDERS.to_vec()), e1 in 0i64..40, e2 in 0i64..40) {
        let f = make_field(n).unwrap();
        let r = RootOfUnity::from_signed(e1, n).mul(&RootOfUnity::from_signed(e2, n));
        prop_assert_eq!(r.to_scalar(&f), &CycScalar::root(&f, e1) * &CycScalar::root(&f, e2));
        prop_assert_eq!(CycScalar::root(&f, e1).pow(n as i64).unwrap(), CycScalar::one(&f));
    }
}

/// Polynomial long division of x^4 - 1 by (x - 1)(x + 1) = x^2 - 1 gives x^2 + 1.
#[test]
fn phi_4_by_hand() {
    let f = make_field(4).unwrap();
    let expected: Vec<BigInt> = [1, 0, 1].iter().map(|&c| BigInt::from(c)).collect();
    assert_eq!(f.modulus(), expected.as_slice());
    let i = CycScalar::zeta(&f);
    assert_eq!(&i * &i, CycScalar::from_integer(&f, -1));
}

#[test]
fn degrees_match_totient_by_factorization() {
    // 12 = 2^2 · 3, so φ(12) = 12 · (1/2) · (2/3) = 4.
    assert_eq!(make_field(12).unwrap().degree(), 4);
    assert_eq!(make_field(1).unwrap().degree(), 1);
    // Brute-force count of units as an independent check.
    for n in 1..=40usize {
        let units = (1..=n).filter(|k| num_integer::gcd(*k, n) == 1).count();
        assert_eq!(make_field(n).unwrap().degree(), units, "N = {n}");
    }
}

#[test]
fn primitive_roots_are_zeros_of_modulus() {
    for n in [3, 4, 6, 8, 12, 15] {
        let f = make_field(n).unwrap();
        for e in (1..n).filter(|e| num_integer::gcd(*e, n) == 1) {
            let z = CycScalar::root(&f, e as i64);
            let mut acc = CycScalar::zero(&f);
            for c in f.modulus().iter().rev() {
                acc = &(&acc * &z) + &CycScalar::from_rational(&f, &BigRational::from_integer(c.clone()));
            }
            assert!(acc.is_zero(), "Φ_{n}(ζ^{e}) != 0");
        }
    }
}

#[test]
fn root_subgroups() {
    let f = make_field(12).unwrap();
    let exps = |d| f.roots_of_unity(d).iter().map(RootOfUnity::exponent).collect::<Vec<_>>();
    assert_eq!(exps(2), vec![0, 6]);
    assert_eq!(exps(3), vec![0, 4, 8]);
    assert_eq!(exps(1), vec![0]);
    for d in 1..=30 {
        assert_eq!(f.roots_of_unity(d).len(), num_integer::gcd(d, 12));
    }
    assert_eq!(order_of(&RootOfUnity::new(0, 12)), 1);
    assert_eq!(order_of(&RootOfUnity::new(6, 12)), 2);
    assert_eq!(order_of(&RootOfUnity::new(4, 12)), 3);
}

#[test]
fn inverse_of_zero_fails() {
    let f = make_field(6).unwrap();
    assert!(matches!(CycScalar::zero(&f).inv(), Err(hopf_core::Error::DivisionByZero)));
    let z = CycScalar::zeta(&f);
    assert_eq!(&z * &CycScalar::root(&f, 5), CycScalar::one(&f));
}
