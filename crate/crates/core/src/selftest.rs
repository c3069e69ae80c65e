//! The acceptance suite: twelve end-to-end checks, each with a time budget,
//! shared by the `acceptance` test target and the `selftest` subcommand.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automata::Automaton;
use crate::error::Error;
use crate::expansion::{
    d_beta, d_star, d_word, int_negabase, is_admissible, orbit_expansion, NegInterval, OrbitResult, DEFAULT_CAP,
};
use crate::numberfield::{FieldElement, IntPolynomial, NumberField, Rat};
use crate::shift_automata::{build_shift_automaton, classify, ShiftKind};
use crate::transducers::{
    build_int_converter, build_normalization_transducer, build_online_transducer, build_quadratic_converter,
    conjugate_bounds, int_convert, normalize, normalize_exact, normalize_with, online_convert, online_delay,
    online_run, quadratic_convert, Redundancy, DEFAULT_STATE_CAP,
};
use crate::words::{alt_compare_finite, canonicalize, eval_ep, eval_finite, BaseSign, Digit, EpWord, FiniteWord};

const SEED: u64 = 0x5eed_2024;

/// Outcome of one acceptance criterion.
#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl std::fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] {:>2}. {} ({:.3}s of {}s){}{}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs(),
            if self.detail.is_empty() { "" } else { ": " },
            self.detail
        )
    }
}

type Check = fn() -> Result<String, String>;

pub const CRITERIA: [(u8, &str, u64, Check); 12] = [
    (1, "integer negabase golden set and round trip", 1, integer_negabase),
    (2, "block converter equals direct negabase", 1, int_converter),
    (3, "golden mean shift is the even shift", 1, golden_shift),
    (4, "golden square shift has forbidden set {20}", 1, golden_square_shift),
    (5, "entropy equals log beta", 1, entropy),
    (6, "shift automaton equals the factor condition", 10, admissibility),
    (7, "expansions of rationals are eventually periodic", 30, pisot_periodicity),
    (8, "on-line conversion delay and residual bound", 30, online_algorithm),
    (9, "finite on-line transducer", 60, online_transducer),
    (10, "normalization", 60, normalization),
    (11, "quadratic converter preserves value", 10, quadratic),
    (12, "non-Pisot base is reported", 10, non_pisot),
];

/// Runs criterion `id` (1-based).
pub fn run_one(id: u8) -> CriterionReport {
    let (id, title, secs, check) = CRITERIA[(id - 1) as usize];
    let start = Instant::now();
    let outcome = check();
    let elapsed = start.elapsed();
    let budget = Duration::from_secs(secs);
    let (ok, mut detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    let in_time = elapsed <= budget;
    if ok && !in_time {
        detail = format!("over time budget; {detail}");
    }
    CriterionReport { id, title, passed: ok && in_time, detail, elapsed, budget }
}

pub fn run_all() -> Vec<CriterionReport> {
    (1..=CRITERIA.len() as u8).map(run_one).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn figure(edges: &[(usize, Digit, usize)], n: usize, top: Digit) -> Automaton {
    let mut a = Automaton::new(0, top, n);
    for &(x, d, y) in edges {
        a.set_edge(x, d, y);
    }
    for s in 0..n {
        a.set_final(s, true);
    }
    a.set_initial((0..n).collect());
    a
}

fn integer_negabase() -> Result<String, String> {
    for (n, w) in [(3, "111"), (4, "100"), (6, "11010")] {
        let got = int_negabase(&BigInt::from(n), 2).to_string();
        ensure(got == w, || format!("<{n}>_-2 = {got}, expected {w}"))?;
    }
    for b in [2u32, 3, 10] {
        let f = NumberField::integer(b as i64).map_err(err)?;
        for n in -300i64..=300 {
            let w = int_negabase(&BigInt::from(n), b);
            let v = eval_finite(&w, BaseSign::Negative, &f, 0);
            ensure(v == f.from_int(n), || format!("eval(<{n}>_-{b}) = {v}"))?;
        }
    }
    Ok("3 golden values, 1803 round trips".into())
}

fn int_converter() -> Result<String, String> {
    for b in [2u32, 3, 5] {
        let t = build_int_converter(b);
        for n in 0..=500u32 {
            let n = BigInt::from(n);
            let digits: Vec<Digit> = n.to_radix_be(b).1.into_iter().map(Digit::from).collect();
            let got = int_convert(&t, &digits).map_err(err)?;
            let want = int_negabase(&n, b);
            ensure(got == want, || format!("b={b}, n={n}: {got} vs {want}"))?;
        }
    }
    Ok("1503 conversions".into())
}

fn golden_shift() -> Result<String, String> {
    let f = NumberField::golden();
    let d = d_word(&f, DEFAULT_CAP).map_err(err)?;
    ensure(d.preperiod() == [1] && d.period() == [0], || format!("d = {d}"))?;
    let a = build_shift_automaton(&f, DEFAULT_CAP).map_err(err)?;
    ensure(a.num_states() == 2, || format!("{} states", a.num_states()))?;
    let even = figure(&[(0, 1, 0), (0, 0, 1), (1, 0, 0)], 2, 1);
    ensure(a.is_isomorphic(&even), || "not the even shift".into())?;
    let c = classify(&f, DEFAULT_CAP);
    ensure(c.kind == ShiftKind::SoficNotFiniteType, || format!("{:?}", c.kind))?;
    Ok("d = 1(0), 2 states, sofic".into())
}

fn golden_square_shift() -> Result<String, String> {
    let f = NumberField::golden_squared();
    let d = d_word(&f, DEFAULT_CAP).map_err(err)?;
    ensure(d.preperiod().is_empty() && d.period() == [2, 1], || format!("d = {d}"))?;
    let c = classify(&f, DEFAULT_CAP);
    ensure(c.kind == ShiftKind::FiniteType, || format!("{:?}", c.kind))?;
    let forbidden = c.forbidden_factors.unwrap_or_default();
    ensure(forbidden == vec![FiniteWord(vec![2, 0])], || format!("forbidden {forbidden:?}"))?;
    let a = build_shift_automaton(&f, DEFAULT_CAP).map_err(err)?;
    let fig = figure(&[(0, 0, 0), (0, 1, 0), (0, 2, 1), (1, 2, 1), (1, 1, 0)], 2, 2);
    ensure(a.is_isomorphic(&fig), || "automaton differs from the figure".into())?;
    Ok("d = (21), finite type, forbidden {20}".into())
}

fn entropy() -> Result<String, String> {
    let mut worst = 0.0f64;
    for f in [NumberField::golden(), NumberField::golden_squared(), int_field(2), int_field(3)] {
        let a = build_shift_automaton(&f, DEFAULT_CAP).map_err(err)?;
        let h = a.entropy().map_err(err)?;
        let gap = (h - f.beta_f64().ln()).abs();
        worst = worst.max(gap);
        ensure(gap <= 1e-9, || format!("beta = {}: entropy {h}", f.beta_f64()))?;
    }
    Ok(format!("max deviation {worst:.1e}"))
}

fn int_field(b: i64) -> NumberField {
    NumberField::integer(b).expect("integer base")
}

/// Every word over `{0..top}` of length at most `n`.
fn all_words(top: Digit, n: usize) -> Vec<Vec<Digit>> {
    let mut layer = vec![Vec::new()];
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        layer = layer.iter().flat_map(|w| (0..=top).map(move |d| [w.clone(), vec![d]].concat())).collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn admissibility() -> Result<String, String> {
    let mut total = 0;
    for f in [NumberField::golden(), NumberField::golden_squared(), int_field(2)] {
        let a = build_shift_automaton(&f, DEFAULT_CAP).map_err(err)?;
        let d = d_word(&f, DEFAULT_CAP).map_err(err)?;
        let ds = d_star(&f, DEFAULT_CAP).map_err(err)?;
        let top = f.max_neg_digit() as Digit;
        let factor = |w: &[Digit]| {
            (0..w.len()).all(|i| {
                let u = &w[i..];
                let lo = alt_compare_finite(&d.prefix(u.len()), u).unwrap();
                let hi = alt_compare_finite(u, &ds.prefix(u.len())).unwrap();
                lo.is_le() && hi.is_le()
            })
        };
        for w in all_words(top, 8) {
            ensure(a.accepts(&w) == factor(&w), || format!("beta = {}: word {w:?}", f.beta_f64()))?;
            total += 1;
        }
    }
    Ok(format!("{total} words"))
}

/// A rational in `[lo, hi)` with denominator at most `max_den`.
fn random_rational(rng: &mut ChaCha8Rng, f: &NumberField, lo: &FieldElement, hi: &FieldElement, max_den: i64) -> FieldElement {
    loop {
        let den = rng.gen_range(1..=max_den);
        let num = rng.gen_range(-den..=den);
        let x = f.from_ratio(num, den);
        if f.le(lo, &x) && f.lt(&x, hi) {
            return x;
        }
    }
}

fn pisot_periodicity() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut longest = 0;
    for f in [NumberField::golden(), NumberField::golden_squared()] {
        let interval = NegInterval::new(&f);
        for _ in 0..100 {
            let x = random_rational(&mut rng, &f, &interval.lo, &interval.hi, 50);
            match orbit_expansion(&x, &f, DEFAULT_CAP).map_err(err)? {
                OrbitResult::Periodic(w) => {
                    ensure(eval_ep(&w, BaseSign::Negative, &f) == x, || format!("{x} -> {w} does not round trip"))?;
                    longest = longest.max(w.preperiod().len() + w.period().len());
                }
                OrbitResult::CapExceeded(_) => return Err(format!("{x}: no period within the cap")),
            }
        }
    }
    Ok(format!("200 expansions, longest m+p = {longest}"))
}

/// A random element of `[0, 1/(beta+1))` with small coordinates.
fn random_online_input(rng: &mut ChaCha8Rng, f: &NumberField) -> FieldElement {
    let hi = NegInterval::new(f).hi;
    loop {
        let den = rng.gen_range(1..=60i64);
        let coords: Vec<Rat> =
            (0..f.degree()).map(|_| Rat::new(rng.gen_range(-40..=40i64).into(), den.into())).collect();
        let x = f.element(coords);
        if f.sign(&x) >= 0 && f.lt(&x, &hi) {
            return x;
        }
    }
}

fn online_algorithm() -> Result<String, String> {
    let g = NumberField::golden();
    ensure(online_delay(&g) == 4, || format!("delay(G) = {}", online_delay(&g)))?;
    for b in 2..=10 {
        let d = online_delay(&int_field(b));
        ensure(d == 2, || format!("delay({b}) = {d}"))?;
    }
    let n = 20;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 8);
    for f in [g, NumberField::golden_squared(), int_field(2), int_field(3)] {
        let delta = online_delay(&f);
        let beta = f.beta();
        let bound = &f.div(&beta, &(&beta + &f.one())).unwrap()
            + &f.mul(&f.from_int(f.max_neg_digit()), &f.pow(&beta, -(delta as i64)).unwrap());
        for _ in 0..100 {
            let x = random_online_input(&mut rng, &f);
            let digits = d_beta(&x, &f, n + delta + 40).map_err(err)?;
            let run = online_run(&f, &digits, n).map_err(err)?;
            let y = eval_finite(&run.output, BaseSign::Negative, &f, n);
            let scaled = f.mul(&(&x - &y), &f.pow(&beta, n as i64).unwrap());
            ensure(f.le(&(-&bound), &scaled) && f.le(&scaled, &bound), || {
                format!("beta = {}: x = {x}, residual {}", f.beta_f64(), f.to_f64(&scaled))
            })?;
        }
    }
    Ok("delays 4 and 2, 400 residuals within bound".into())
}

fn online_transducer() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 9);
    let mut sizes = Vec::new();
    for f in [int_field(2), NumberField::golden()] {
        let t = build_online_transducer(&f, DEFAULT_STATE_CAP).map_err(err)?;
        let delta = t.delay().expect("on-line shape");
        sizes.push(t.num_states());
        let bounds = conjugate_bounds(&f, delta);
        for s in 0..t.num_states() {
            let q = t.payload(s).expect("states carry remainders");
            for (z, m) in f.conjugate_values(q).iter().zip(&bounds) {
                ensure(z.norm() <= m * (1.0 + 1e-9), || format!("state {s}: |q(beta_i)| = {} > {m}", z.norm()))?;
            }
        }
        for _ in 0..100 {
            let x = random_online_input(&mut rng, &f);
            let digits = d_beta(&x, &f, delta + 30).map_err(err)?;
            let want = online_convert(&f, &digits, 30).map_err(err)?;
            let (got, _) = t.run_left(&digits, 1).map_err(err)?;
            ensure(got == want.0, || format!("x = {x}: transducer {got:?} vs algorithm {want}"))?;
        }
    }
    Ok(format!("state counts {sizes:?}"))
}

/// A random word `u (v)` over `{-c..c}`.
fn random_ep(rng: &mut ChaCha8Rng, c: Digit, max_pre: usize, max_per: usize) -> EpWord {
    let pre: Vec<Digit> = (0..rng.gen_range(0..=max_pre)).map(|_| rng.gen_range(-c..=c)).collect();
    let per: Vec<Digit> = (0..rng.gen_range(1..=max_per)).map(|_| rng.gen_range(-c..=c)).collect();
    canonicalize(&pre, &per).expect("nonempty period")
}

fn normalization() -> Result<String, String> {
    let two = int_field(2);
    let w: EpWord = "0(01)".parse().unwrap();
    let got = normalize(&two, &w, DEFAULT_STATE_CAP).map_err(err)?;
    ensure(got.to_string() == "1(10)", || format!(".0(01) -> .{got}"))?;

    let f = NumberField::golden();
    let t = build_normalization_transducer(&f, 1, DEFAULT_STATE_CAP).map_err(err)?;
    let interval = NegInterval::new(&f);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 10);
    let mut done = 0;
    let mut tried = 0;
    while done < 100 {
        tried += 1;
        let w = random_ep(&mut rng, 1, 6, 6);
        let v = eval_ep(&w, BaseSign::Negative, &f);
        if !interval.contains(&f, &v) {
            continue;
        }
        let a = normalize_with(&t, &w).map_err(err)?;
        let b = normalize_exact(&f, &w, DEFAULT_CAP).map_err(err)?;
        ensure(a == b, || format!("{w}: transducer {a}, exact {b}"))?;
        ensure(is_admissible(&a, &f, DEFAULT_CAP).map_err(err)?, || format!("{w} -> {a} not admissible"))?;
        ensure(eval_ep(&a, BaseSign::Negative, &f) == v, || format!("{w} -> {a} changes value"))?;
        done += 1;
    }
    Ok(format!("base -2 identity, 100 of {tried} random words in range, {} states", t.num_states()))
}

/// Random words over `{0..a}` with no factor `a e`, `e >= 1`, also across
/// the period boundary.
fn random_quadratic_input(rng: &mut ChaCha8Rng, a: Digit) -> EpWord {
    loop {
        let pre: Vec<Digit> = (0..rng.gen_range(0..=5)).map(|_| rng.gen_range(0..=a)).collect();
        let per: Vec<Digit> = (0..rng.gen_range(1..=5)).map(|_| rng.gen_range(0..=a)).collect();
        let w = canonicalize(&pre, &per).unwrap();
        let probe = w.prefix(w.preperiod().len() + 2 * w.period().len() + 1);
        if probe.windows(2).all(|p| !(p[0] == a && p[1] >= 1)) {
            return w;
        }
    }
}

fn quadratic() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 11);
    const DIGITS: usize = 30;
    for a in [1i64, 2] {
        let f = NumberField::new(IntPolynomial::from_i64(&[-1, -a, 1]).unwrap()).map_err(err)?;
        let t = build_quadratic_converter(a as u32);
        let beta = f.beta();
        // both tails after DIGITS positions are at most a beta^-DIGITS * beta/(beta-1)
        let tail = f.mul(
            &f.from_int(2 * a),
            &f.div(&f.pow(&beta, 1 - DIGITS as i64).unwrap(), &(&beta - &f.one())).unwrap(),
        );
        for _ in 0..100 {
            let x = random_quadratic_input(&mut rng, a as Digit);
            let y = quadratic_convert(&t, &x).map_err(err)?;
            ensure(y.prefix(64).iter().all(|&d| (0..=a as Digit).contains(&d)), || format!("{x} -> {y}"))?;
            // x_0 . x_1 ... x_29 against y_0 . y_1 ... y_29
            let xs = eval_finite(&x.prefix(DIGITS), BaseSign::Positive, &f, DIGITS - 1);
            let ys = eval_finite(&y.prefix(DIGITS), BaseSign::Negative, &f, DIGITS - 1);
            let gap = &xs - &ys;
            ensure(f.le(&(-&tail), &gap) && f.le(&gap, &tail), || format!("a={a}: {x} -> {y} off by {}", f.to_f64(&gap)))?;
            let exact = f.mul(&beta, &eval_ep(&x, BaseSign::Positive, &f))
                == f.mul(&(-&beta), &eval_ep(&y, BaseSign::Negative, &f));
            ensure(exact, || format!("a={a}: {x} -> {y} changes value"))?;
        }
    }
    Ok("200 conversions, exact and within the 30-digit tail bound".into())
}

fn non_pisot() -> Result<String, String> {
    let f = NumberField::new(IntPolynomial::from_i64(&[-2, 0, 1]).unwrap()).map_err(err)?;
    ensure(!f.is_pisot(), || "sqrt 2 reported Pisot".into())?;
    match Redundancy::build(&f, BaseSign::Negative, 1, 10_000) {
        Err(Error::StateCapExceeded(n)) => Ok(format!("redundancy BFS stopped at the {n}-state cap")),
        Err(e) => Err(e.to_string()),
        Ok(r) => Err(format!("finished with {} states", r.num_states())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_inputs_are_in_range() {
        let f = NumberField::golden();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let hi = NegInterval::new(&f).hi;
        for _ in 0..20 {
            let x = random_online_input(&mut rng, &f);
            assert!(f.sign(&x) >= 0 && f.lt(&x, &hi));
        }
        for _ in 0..20 {
            let w = random_quadratic_input(&mut rng, 2);
            assert!(w.prefix(40).windows(2).all(|p| p[0] != 2 || p[1] == 0), "{w}");
        }
    }
}
