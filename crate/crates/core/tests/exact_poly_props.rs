mod common;

use common::*;
use num_traits::Zero;
use polya::exact_poly::{
    count_roots_in_interval, int, is_real_rooted, ratio, shift_argument, square_free_part, Bound,
    Interval, Rational, RootCounter,
};
use polya::{Error, Polynomial};
use proptest::prelude::*;
use rand::Rng;

fn grid_point(rng: &mut rand_chacha::ChaCha8Rng) -> Rational {
    // Quarter-integers in [-3, 3] so query endpoints often hit roots.
    ratio(rng.gen_range(-12..=12), 4)
}

fn random_bound(rng: &mut rand_chacha::ChaCha8Rng, x: Rational) -> Bound {
    match rng.gen_range(0..5) {
        0 => Bound::Unbounded,
        1 | 2 => Bound::Closed(x),
        _ => Bound::Open(x),
    }
}

#[test]
fn linear_products_match_root_bookkeeping() {
    let mut rng = rng(11);
    for case in 0..500 {
        let deg = rng.gen_range(1..=7);
        let roots: Vec<Rational> = (0..deg).map(|_| grid_point(&mut rng)).collect();
        let lead = loop {
            let c = rational_in(&mut rng, 5, 3);
            if !c.is_zero() {
                break c;
            }
        };
        let p = Polynomial::from_roots(lead, &roots);
        let rc = RootCounter::new(&p).unwrap();
        assert_eq!(rc.total_real_roots(), deg, "case {case}");
        for _ in 0..8 {
            let (mut a, mut b) = (grid_point(&mut rng), grid_point(&mut rng));
            if a > b {
                std::mem::swap(&mut a, &mut b);
            }
            let interval = Interval::new(random_bound(&mut rng, a), random_bound(&mut rng, b));
            let Ok(interval) = interval else { continue };
            let expected = roots.iter().filter(|r| interval.contains(r)).count();
            let report = count_roots_in_interval(&p, &interval).unwrap();
            assert_eq!(
                report.roots_in_region_with_multiplicity, expected,
                "case {case}: {p} on {interval}"
            );
            assert_eq!(report.all_roots_in_region, expected == deg);
        }
    }
}

#[test]
fn quadratic_pairs_reduce_real_count() {
    let mut rng = rng(12);
    for case in 0..200 {
        let pairs = rng.gen_range(0..=3);
        let linear = rng.gen_range(0..=3);
        let mut p = Polynomial::one();
        for _ in 0..pairs {
            // (x - a)^2 + b^2 with b != 0
            let a = rational_in(&mut rng, 6, 3);
            let b = loop {
                let b = rational_in(&mut rng, 4, 3);
                if !b.is_zero() {
                    break b;
                }
            };
            let q = &Polynomial::linear_factor(a.clone()).pow(2) + &Polynomial::constant(&b * &b);
            p = &p * &q;
        }
        for _ in 0..linear {
            p = &p * &Polynomial::linear_factor(grid_point(&mut rng));
        }
        let report = count_roots_in_interval(&p, &Interval::real_line()).unwrap();
        assert_eq!(report.degree, 2 * pairs + linear, "case {case}");
        assert_eq!(
            report.total_real_roots_with_multiplicity,
            report.degree - 2 * pairs,
            "case {case}: {p}"
        );
        assert_eq!(is_real_rooted(&p).unwrap(), pairs == 0);
    }
}

#[test]
fn spec_examples() {
    let p = Polynomial::from_ints(&[1, 2, 1]);
    let r = count_roots_in_interval(&p, &Interval::closed(int(-1), int(0)).unwrap()).unwrap();
    assert_eq!(
        (r.roots_in_region_with_multiplicity, r.all_roots_in_region),
        (2, true)
    );

    let e_cube = Polynomial::from_ints(&[0, 1, 6, 6]);
    let r = count_roots_in_interval(&e_cube, &Interval::closed(int(-1), int(0)).unwrap()).unwrap();
    assert_eq!(r.roots_in_region_with_multiplicity, 3);

    let r = count_roots_in_interval(&Polynomial::from_ints(&[1, 0, 1]), &Interval::real_line())
        .unwrap();
    assert_eq!(r.total_real_roots_with_multiplicity, 0);

    assert!(is_real_rooted(&Polynomial::from_ints(&[2, 3, 1])).unwrap());
    assert!(!is_real_rooted(&Polynomial::from_ints(&[1, 0, 36, 108, 72])).unwrap());

    let cubic = Polynomial::from_ints(&[1, 36, 386, 1331]);
    assert!(cubic_discriminant(&cubic) < Rational::zero());
    assert!(!is_real_rooted(&cubic).unwrap());

    assert_eq!(
        count_roots_in_interval(&Polynomial::zero(), &Interval::real_line()),
        Err(Error::ZeroPolynomial)
    );
    assert_eq!(
        is_real_rooted(&Polynomial::zero()),
        Err(Error::ZeroPolynomial)
    );
}

#[test]
fn cubic_discriminant_agrees_with_sturm() {
    let mut rng = rng(13);
    for _ in 0..300 {
        let c: Vec<Rational> = (0..4).map(|_| rational_in(&mut rng, 20, 3)).collect();
        if c[3].is_zero() {
            continue;
        }
        let p = Polynomial::new(c);
        let disc = cubic_discriminant(&p);
        let real = RootCounter::new(&p).unwrap().total_real_roots();
        if disc < Rational::zero() {
            assert_eq!(real, 1, "{p}");
        } else {
            assert_eq!(real, 3, "{p}");
        }
    }
}

#[test]
fn square_free_examples() {
    let p = Polynomial::from_ints(&[1, 2, 1]);
    assert_eq!(
        square_free_part(&p).unwrap(),
        Polynomial::from_ints(&[1, 1])
    );
    let q = Polynomial::from_ints(&[0, 1, 1]);
    assert_eq!(square_free_part(&q).unwrap(), q);
    let r = Polynomial::from_roots(int(7), &ints(&[0, -1, -1, -2, -2, -2]));
    assert_eq!(
        square_free_part(&r).unwrap(),
        Polynomial::from_roots(int(1), &ints(&[0, -1, -2]))
    );
    assert_eq!(
        square_free_part(&Polynomial::zero()),
        Err(Error::ZeroPolynomial)
    );
}

#[test]
fn square_free_idempotent_seeded() {
    let mut rng = rng(14);
    for _ in 0..200 {
        let roots: Vec<Rational> = (0..rng.gen_range(1..=6))
            .map(|_| grid_point(&mut rng))
            .collect();
        let p = &Polynomial::from_roots(int(3), &roots) * &Polynomial::from_ints(&[1, 0, 1]);
        let s = square_free_part(&p).unwrap();
        assert_eq!(square_free_part(&s).unwrap(), s);
        let mut distinct = roots.clone();
        distinct.sort();
        distinct.dedup();
        assert_eq!(s.degree(), Some(distinct.len() + 2));
    }
}

#[test]
fn shift_examples() {
    assert_eq!(
        shift_argument(&Polynomial::from_ints(&[0, 0, 1]), &int(1)),
        Polynomial::from_ints(&[1, 2, 1])
    );
    let p = Polynomial::from_ints(&[4, -1, 7]);
    assert_eq!(shift_argument(&p, &int(0)), p);
    assert_eq!(
        shift_argument(&Polynomial::from_ints(&[0, 0, 0, 1]), &int(-1)),
        Polynomial::from_ints(&[-1, 3, -3, 1])
    );
}

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=9).prop_map(|(n, d)| ratio(n, d))
}

fn arb_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(arb_rational(), 0..9).prop_map(Polynomial::new)
}

proptest! {
    #[test]
    fn shift_round_trip(p in arb_poly(), t in arb_rational()) {
        prop_assert_eq!(shift_argument(&shift_argument(&p, &t), &-t.clone()), p);
    }

    #[test]
    fn shift_is_evaluation_at_translate(p in arb_poly(), t in arb_rational(), x in arb_rational()) {
        prop_assert_eq!(shift_argument(&p, &t).eval(&x), p.eval(&(&x + &t)));
    }

    #[test]
    fn square_free_is_idempotent(p in arb_poly()) {
        prop_assume!(!p.is_zero());
        let s = square_free_part(&p).unwrap();
        prop_assert_eq!(square_free_part(&s).unwrap(), s.clone());
        // same real roots, each once
        let rc = RootCounter::new(&s).unwrap();
        let real = rc.total_real_roots();
        prop_assert!(real <= rc.degree());
    }

    #[test]
    fn report_invariants(p in arb_poly(), a in arb_rational(), w in 0i64..20) {
        prop_assume!(!p.is_zero());
        let b = &a + int(w);
        let r = count_roots_in_interval(&p, &Interval::closed(a, b).unwrap()).unwrap();
        prop_assert!(r.roots_in_region_with_multiplicity <= r.total_real_roots_with_multiplicity);
        prop_assert!(r.total_real_roots_with_multiplicity <= r.degree);
        prop_assert_eq!(r.all_roots_in_region, r.roots_in_region_with_multiplicity == r.degree);
    }

    #[test]
    fn division_reconstructs(a in arb_poly(), b in arb_poly()) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn text_format_round_trips(p in arb_poly()) {
        let s = p.to_string();
        prop_assert_eq!(s.parse::<Polynomial>().unwrap(), p);
    }
}
