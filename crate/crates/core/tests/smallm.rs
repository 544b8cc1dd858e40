use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

use regmatch::expectations::sample_configuration_model;
use regmatch::families::Atom;
use regmatch::matchpoly::matching_polynomial;
use regmatch::smallm::{a4_max, four_cycle_monte_carlo, p1, phi_closed, SmallMError, SmallMInput};

fn phi(n: u64, r: u64, a4: Option<u64>, m: u64) -> Result<BigUint, SmallMError> {
    phi_closed(&SmallMInput::new(n, r, a4)?, m)
}

#[test]
fn named_graph_values() {
    assert_eq!(phi(3, 3, None, 1).unwrap(), 9u32.into());
    assert_eq!(phi(3, 3, None, 2).unwrap(), 18u32.into());
    assert_eq!(phi(3, 3, None, 3).unwrap(), 6u32.into());
    assert_eq!(p1(4, 3), BigInt::from(3));
    assert_eq!(phi(4, 3, Some(6), 4).unwrap(), 9u32.into());
    assert_eq!(
        matching_polynomial(&Atom::Hypercube3.realize()).coeff(4),
        9u32.into()
    );
    for (n, r) in [(5, 2), (9, 4), (1000, 7)] {
        assert_eq!(phi(n, r, None, 1).unwrap(), BigUint::from(n * r));
    }
}

#[test]
fn four_cycle_maximum() {
    let k33 = a4_max(3, 3);
    assert_eq!((k33.value, k33.exact), (9u32.into(), true));
    for n in [2u64, 4, 6, 10] {
        let m = a4_max(n, 2);
        assert_eq!((m.value, m.exact), (BigUint::from(n / 2), true));
        let copies = Atom::Cycle(4).realize().repeat(n as usize / 2);
        assert_eq!(
            BigUint::from(copies.count_4cycles().unwrap()),
            a4_max(n, 2).value
        );
    }
    assert!(!a4_max(3, 2).exact);
    assert!(matches!(
        SmallMInput::new(3, 3, Some(10)),
        Err(SmallMError::A4TooLarge { .. })
    ));
}

#[test]
fn errors() {
    assert!(matches!(phi(3, 3, None, 4), Err(SmallMError::MissingA4)));
    assert!(matches!(
        phi(3, 3, None, 0),
        Err(SmallMError::MOutOfRange(0))
    ));
    assert!(matches!(
        phi(2, 2, Some(0), 4),
        Err(SmallMError::Infeasible(_))
    ));
    assert!(matches!(
        SmallMInput::new(2, 5, None),
        Err(SmallMError::Domain(_))
    ));
}

#[test]
fn formulas_match_the_engine_on_random_simple_graphs() {
    let mut checked = 0;
    for seed in 0..600 {
        for (n, r) in [(7usize, 3usize), (12, 3), (10, 2), (6, 4)] {
            let g = sample_configuration_model(n, r, seed);
            let Ok(a4) = g.count_4cycles() else { continue };
            let poly = matching_polynomial(&g);
            for m in 1..=4 {
                assert_eq!(
                    phi(n as u64, r as u64, Some(a4), m).unwrap(),
                    poly.coeff(m as usize)
                );
            }
            checked += 1;
        }
    }
    assert!(checked > 150, "{checked}");
}

#[test]
fn monte_carlo_is_seeded() {
    let a = four_cycle_monte_carlo(30, 3, 500, 3);
    let b = four_cycle_monte_carlo(30, 3, 500, 3);
    assert_eq!(a, b);
    assert_eq!(a.estimate.samples, 500);
    assert_ne!(a, four_cycle_monte_carlo(30, 3, 500, 4));
}

proptest! {
    #[test]
    fn p1_is_an_integer_polynomial(n in 1..5000u64, r in 1..40u64) {
        // evaluating with i128 arithmetic gives the same integer
        let (n, r) = (n as i128, r as i128);
        let nr = n * r;
        let total = nr.pow(4) * 2 + nr.pow(3) * (1 - 2 * r) * 12 + nr.pow(2) * (19 - 60 * r + 52 * r * r) * 2
            + nr * (60 - 240 * r + 336 * r * r - 168 * r * r * r);
        prop_assert_eq!(total % 48, 0);
        prop_assert_eq!(p1(n as u64, r as u64), BigInt::from(total / 48));
    }
}
