use std::cmp::Ordering;
use std::sync::OnceLock;

use num_bigint::BigInt;
use proptest::prelude::*;

use negabase::automata::Automaton;
use negabase::expansion::{d_minus_beta, int_negabase, orbit_expansion, NegInterval, DEFAULT_CAP};
use negabase::numberfield::{FieldElement, IntPolynomial, NumberField, Rat};
use negabase::shift_automata::build_shift_automaton;
use negabase::transducers::{
    build_int_converter, build_normalization_transducer, build_quadratic_converter, int_convert, normalize_exact,
    normalize_with, online_run, positive_digits, quadratic_convert, Transducer,
};
use negabase::words::{alt_compare_finite, canonicalize, eval_ep, eval_finite, short_alt_compare, BaseSign, Digit, EpWord};

fn tribonacci() -> NumberField {
    NumberField::from_coeffs("-1,-1,-1,1").unwrap()
}

fn fields() -> Vec<NumberField> {
    vec![NumberField::golden(), NumberField::golden_squared(), tribonacci(), NumberField::integer(3).unwrap()]
}

fn element(f: &NumberField, coords: &[(i64, i64)]) -> FieldElement {
    f.element((0..f.degree()).map(|i| Rat::new(coords[i].0.into(), coords[i].1.into())).collect())
}

fn coords() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-50i64..=50, 1i64..=12), 3)
}

fn word(c: Digit, max: usize) -> impl Strategy<Value = Vec<Digit>> {
    prop::collection::vec(-c..=c, 0..=max)
}

fn ep_word(c: Digit) -> impl Strategy<Value = EpWord> {
    (word(c, 5), prop::collection::vec(-c..=c, 1..=5)).prop_map(|(u, v)| canonicalize(&u, &v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(k in 0usize..4, a in coords(), b in coords(), c in coords()) {
        let f = &fields()[k];
        let (a, b, c) = (element(f, &a), element(f, &b), element(f, &c));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        prop_assert_eq!(f.mul(&(&a + &b), &c), &f.mul(&a, &c) + &f.mul(&b, &c));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        if !a.is_zero() {
            prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
        }
    }

    #[test]
    fn sign_and_floor_agree_with_floating_point(k in 0usize..4, a in coords()) {
        let f = &fields()[k];
        let x = element(f, &a);
        let b = f.beta_f64();
        let approx: f64 = x.coords().iter().enumerate()
            .map(|(i, c)| num_traits::ToPrimitive::to_f64(c).unwrap() * b.powi(i as i32))
            .sum();
        if approx.abs() > 1e-6 {
            prop_assert_eq!(f.sign(&x), if approx > 0.0 { 1 } else { -1 });
        }
        let fl = f.floor_i64(&x);
        prop_assert!(f.le(&f.from_int(fl), &x));
        prop_assert!(f.lt(&x, &f.from_int(fl + 1)));
    }

    #[test]
    fn canonical_form_is_stable(w in ep_word(3)) {
        let again = canonicalize(&w.prefix(w.preperiod().len() + 3 * w.period().len()), w.period()).unwrap();
        prop_assert_eq!(&again, &w);
        let parsed: EpWord = w.to_string().parse().unwrap();
        prop_assert_eq!(parsed, w);
    }

    #[test]
    fn alternate_order_is_a_total_order(u in prop::collection::vec(0..3, 6), v in prop::collection::vec(0..3, 6), t in prop::collection::vec(0..3, 6)) {
        let uv = alt_compare_finite(&u, &v).unwrap();
        prop_assert_eq!(uv.reverse(), alt_compare_finite(&v, &u).unwrap());
        prop_assert_eq!(uv == Ordering::Equal, u == v);
        let vt = alt_compare_finite(&v, &t).unwrap();
        if uv.is_le() && vt.is_le() {
            prop_assert!(alt_compare_finite(&u, &t).unwrap().is_le());
        }
    }

    #[test]
    fn alternate_order_follows_value(k in 0usize..2, p in -30i64..30, q in -30i64..30) {
        let f = &fields()[k];
        let i = NegInterval::new(f);
        let (x, y) = (f.from_ratio(p, 47), f.from_ratio(q, 47));
        prop_assume!(i.contains(f, &x) && i.contains(f, &y) && p != q);
        let (dx, dy) = (d_minus_beta(&x, f, 60).unwrap(), d_minus_beta(&y, f, 60).unwrap());
        prop_assert_eq!(alt_compare_finite(&dx, &dy).unwrap(), p.cmp(&q));
    }

    #[test]
    fn negabase_round_trip_and_short_alternate_order(m in -100_000i64..100_000, n in -100_000i64..100_000, b in 2u32..11) {
        let f = NumberField::integer(b as i64).unwrap();
        let (wm, wn) = (int_negabase(&BigInt::from(m), b), int_negabase(&BigInt::from(n), b));
        prop_assert_eq!(eval_finite(&wm, BaseSign::Negative, &f, 0), f.from_int(m));
        prop_assert_eq!(short_alt_compare(&wm, &wn), m.cmp(&n));
    }

    #[test]
    fn block_converter_on_large_integers(n in 0u64..u64::MAX, b in 2u32..17) {
        let n = BigInt::from(n);
        let t = build_int_converter(b);
        prop_assert_eq!(int_convert(&t, &positive_digits(&n, b)).unwrap(), int_negabase(&n, b));
    }

    #[test]
    fn expansions_round_trip(k in 0usize..3, p in -400i64..400, q in 1i64..400) {
        let f = &fields()[k];
        // rational orbits in the cubic field have long periods
        let (p, q) = if k == 2 { (p % 12, q % 12 + 1) } else { (p, q) };
        let x = f.from_ratio(p, q);
        prop_assume!(NegInterval::new(f).contains(f, &x));
        let w = orbit_expansion(&x, f, DEFAULT_CAP).unwrap().periodic(DEFAULT_CAP).unwrap();
        prop_assert_eq!(eval_ep(&w, BaseSign::Negative, f), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normalization_paths_agree_in_base_minus_three(w in ep_word(3)) {
        let f = NumberField::integer(3).unwrap();
        prop_assume!(NegInterval::new(&f).contains(&f, &eval_ep(&w, BaseSign::Negative, &f)));
        static T: OnceLock<Transducer> = OnceLock::new();
        let t = T.get_or_init(|| build_normalization_transducer(&f, 3, 100_000).unwrap());
        prop_assert_eq!(normalize_with(t, &w).unwrap(), normalize_exact(&f, &w, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn normalization_paths_agree_for_the_golden_square(w in ep_word(2)) {
        let f = NumberField::golden_squared();
        prop_assume!(NegInterval::new(&f).contains(&f, &eval_ep(&w, BaseSign::Negative, &f)));
        static T: OnceLock<Transducer> = OnceLock::new();
        let t = T.get_or_init(|| build_normalization_transducer(&f, 2, 100_000).unwrap());
        prop_assert_eq!(normalize_with(t, &w).unwrap(), normalize_exact(&f, &w, DEFAULT_CAP).unwrap());
    }
}

/// Forces a 0 after every `a`, the only forbidden pattern for
/// `beta^2 = a beta + 1`, including across the period boundary.
fn quadratic_admissible(a: Digit, mut pre: Vec<Digit>, mut per: Vec<Digit>) -> EpWord {
    fn fix(a: Digit, w: &mut [Digit]) {
        for i in 1..w.len() {
            if w[i - 1] == a {
                w[i] = 0;
            }
        }
    }
    fix(a, &mut per);
    if per[per.len() - 1] == a {
        if per.len() == 1 {
            per[0] = 0;
        } else {
            per[0] = 0;
            fix(a, &mut per);
        }
    }
    fix(a, &mut pre);
    if pre.last() == Some(&a) && per[0] != 0 {
        *pre.last_mut().unwrap() = 0;
    }
    canonicalize(&pre, &per).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quadratic_conversion_keeps_the_value(
        a in 1u32..5,
        pre in prop::collection::vec(0i64..5, 0..6),
        per in prop::collection::vec(0i64..5, 1..6),
    ) {
        let ad = a as Digit;
        let clip = |w: Vec<i64>| w.into_iter().map(|d| (d as Digit).min(ad)).collect::<Vec<_>>();
        let x = quadratic_admissible(ad, clip(pre), clip(per));
        let f = NumberField::new(IntPolynomial::from_i64(&[-1, -(a as i64), 1]).unwrap()).unwrap();
        let y = quadratic_convert(&build_quadratic_converter(a), &x).unwrap();
        prop_assert!(y.preperiod().iter().chain(y.period()).all(|&d| (0..=ad).contains(&d)));
        let point = |w: &EpWord, sign: BaseSign| f.mul(&sign.base(&f), &eval_ep(w, sign, &f));
        prop_assert_eq!(point(&x, BaseSign::Positive), point(&y, BaseSign::Negative));
    }

    #[test]
    fn online_residual_stays_bounded(bits in prop::collection::vec(0i64..2, 1..14), n in 1usize..16) {
        let f = NumberField::golden();
        let mut digits: Vec<Digit> = vec![0, 0];
        for b in bits {
            let prev = *digits.last().unwrap();
            digits.push(if prev == 1 { 0 } else { b as Digit });
        }
        let x = eval_finite(&digits, BaseSign::Positive, &f, digits.len());
        let run = online_run(&f, &digits, n).unwrap();
        let y = eval_finite(&run.output, BaseSign::Negative, &f, n);
        let r = f.mul(&(&x - &y), &f.pow(&f.beta(), n as i64).unwrap());
        let slack = f.mul(&f.from_int(f.max_neg_digit()), &f.pow(&f.beta(), -(run.delay as i64)).unwrap());
        let bound = &f.div(&f.beta(), &(&f.beta() + &f.one())).unwrap() + &slack;
        prop_assert!(f.le(&(-&bound), &r) && f.le(&r, &bound));
    }
}

#[test]
fn shift_automata_serialize_without_loss() {
    for f in fields() {
        let a = build_shift_automaton(&f, DEFAULT_CAP).unwrap();
        assert_eq!(Automaton::from_dot(&a.to_dot()).unwrap().to_dot(), a.to_dot());
        assert_eq!(Automaton::from_json(&a.to_json()).unwrap().to_json(), a.to_json());
    }
}
