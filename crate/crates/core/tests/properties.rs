// Copyright 2026 the compass authors
// SPDX-License-Identifier: Apache-2.0

mod common;

use common::{eval, expr, Dec};
use compass_core::construct::{construct_polygon, double_polygon};
use compass_core::Constructible;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, ..ProptestConfig::default() })]

    #[test]
    fn sign_matches_decimal_oracle(e in expr(4)) {
        let (x, d) = eval(&e);
        let oracle = d.sign_above(200);
        prop_assert_eq!(x.signum(), oracle, "{:?} = {} ~ {}", e, x, d.to_text(30));
    }

    #[test]
    fn value_matches_decimal_oracle(e in expr(4)) {
        let (x, d) = eval(&e);
        prop_assert!(Dec::parse(&x.approx(60)).close(&d, 59), "{:?}", e);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn sqrt_of_square_is_identity(e in expr(3)) {
        let (x, _) = eval(&e);
        let y = x.abs();
        prop_assert_eq!(y.square().sqrt().unwrap(), y);
    }

    #[test]
    fn field_axioms(a in expr(2), b in expr(2), c in expr(2)) {
        let (x, _) = eval(&a);
        let (y, _) = eval(&b);
        let (z, _) = eval(&c);
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).signum() == 0);
        if y.signum() != 0 {
            prop_assert_eq!(&x.checked_div(&y).unwrap() * &y, x.clone());
            prop_assert_eq!(&y * &y.recip().unwrap(), Constructible::one());
        }
    }

    #[test]
    fn normalization_is_idempotent(e in expr(3)) {
        let (x, _) = eval(&e);
        let text = x.to_string();
        let back: Constructible = text.parse().unwrap();
        prop_assert!(back.structurally_eq(&x), "{} -> {}", text, back);
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back.pretty(), x.pretty());
    }
}

#[test]
fn doubling_the_pentagon_twice_gives_the_icosagon() {
    let p5 = construct_polygon(5).unwrap().0;
    let p20 = double_polygon(&double_polygon(&p5).unwrap()).unwrap();
    assert!(p20.same_vertex_set(&construct_polygon(20).unwrap().0));
}
