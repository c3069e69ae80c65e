use std::collections::{HashMap, VecDeque};

use super::{Transducer, TransducerKind};
use crate::automata::StateId;
use crate::error::{Error, Result};
use crate::expansion::NegInterval;
use crate::numberfield::{FieldElement, NumberField};
use crate::words::{Digit, FiniteWord};

/// Smallest `delta >= 1` with `c/beta^(delta-1) + c/beta^delta <= 1 - {beta}`,
/// where `c = ceil(beta) - 1` is the largest input digit.
pub fn online_delay(f: &NumberField) -> usize {
    let c = f.from_int(f.max_beta_digit());
    let frac = &f.beta() - &f.from_rational(f.floor_beta().clone().into());
    let rhs = &f.one() - &frac;
    let inv = f.inv(&f.beta()).expect("beta is nonzero");
    let mut p = f.one(); // beta^-(delta-1)
    let mut delta = 1;
    loop {
        let next = f.mul(&p, &inv);
        let lhs = f.mul(&c, &(&p + &next));
        if f.le(&lhs, &rhs) {
            return delta;
        }
        p = next;
        delta += 1;
    }
}

/// A remainder of the on-line algorithm together with the parity of the
/// next step, which fixes the sign of the incoming digit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OnlineState {
    pub value: FieldElement,
    pub next_odd: bool,
}

/// Digits emitted by the on-line algorithm and the final remainder.
#[derive(Clone, Debug)]
pub struct OnlineRun {
    pub delay: usize,
    pub output: FiniteWord,
    /// `q_{delta+n}` after `n` output digits.
    pub remainder: FieldElement,
}

/// Constants shared by every step of the algorithm.
struct Machine<'a> {
    f: &'a NumberField,
    delay: usize,
    max_in: Digit,
    max_out: i64,
    shift: FieldElement,
    lo: FieldElement,
    hi: FieldElement,
    /// `beta^-j` for `0 <= j <= delay`.
    inv_powers: Vec<FieldElement>,
}

impl<'a> Machine<'a> {
    fn new(f: &'a NumberField) -> Self {
        let delay = online_delay(f);
        let interval = NegInterval::new(f);
        let inv = f.inv(&f.beta()).expect("beta is nonzero");
        let mut inv_powers = vec![f.one()];
        for j in 0..delay {
            inv_powers.push(f.mul(&inv_powers[j], &inv));
        }
        let max_out = f.max_neg_digit();
        let slack = f.mul(&f.from_int(max_out), &inv_powers[delay]);
        Machine {
            f,
            delay,
            max_in: f.max_beta_digit() as Digit,
            max_out,
            shift: interval.shift(),
            lo: &interval.lo - &slack,
            hi: interval.hi,
            inv_powers,
        }
    }

    fn check_digit(&self, x: Digit) -> Result<()> {
        if (0..=self.max_in).contains(&x) {
            Ok(())
        } else {
            Err(Error::DigitOutOfRange(x as i64))
        }
    }

    /// `q_j = q_{j-1} + x_j / beta^j`; `None` once the prefix value reaches
    /// `1/(beta+1)`.
    fn transient(&self, q: &FieldElement, j: usize, x: Digit) -> Option<FieldElement> {
        let next = q + &self.inv_powers[j].scale_int(x as i64);
        self.f.lt(&next, &self.hi).then_some(next)
    }

    /// One synchronous step; `None` when the remainder leaves its bounds.
    fn step(&self, s: &OnlineState, x: Digit) -> Option<(Digit, OnlineState)> {
        let f = self.f;
        let mut incoming = self.inv_powers[self.delay].scale_int(x as i64);
        if s.next_odd {
            incoming = -incoming;
        }
        let z = &(-f.mul_beta(&s.value)) + &incoming;
        let y = f.floor_i64(&(&z + &self.shift)).clamp(0, self.max_out);
        let q = &z - &f.from_int(y);
        if f.lt(&q, &self.lo) || !f.lt(&q, &self.hi) {
            return None;
        }
        Some((y as Digit, OnlineState { value: q, next_odd: !s.next_odd }))
    }
}

/// Runs the on-line conversion from base `beta` to base `-beta` on the
/// digits `x_1 x_2 ...` of some `0 <= x < 1/(beta+1)`, emitting `n` digits.
/// Missing input digits are read as 0.
pub fn online_run(f: &NumberField, x: &[Digit], n: usize) -> Result<OnlineRun> {
    let m = Machine::new(f);
    let digit = |i: usize| x.get(i).copied().unwrap_or(0);
    let mut q = f.zero();
    for j in 1..=m.delay {
        m.check_digit(digit(j - 1))?;
        q = m.transient(&q, j, digit(j - 1)).ok_or(Error::OutOfDomain(j))?;
    }
    let mut s = OnlineState { value: q, next_odd: true };
    let mut out = Vec::with_capacity(n);
    for j in 1..=n {
        let xd = digit(m.delay + j - 1);
        m.check_digit(xd)?;
        let (y, next) = m.step(&s, xd).ok_or(Error::OutOfDomain(m.delay + j))?;
        out.push(y);
        s = next;
    }
    Ok(OnlineRun { delay: m.delay, output: FiniteWord(out), remainder: s.value })
}

/// The first `n` digits of a (-beta)-representation of the value of `x`.
/// The result is generally not admissible.
pub fn online_convert(f: &NumberField, x: &[Digit], n: usize) -> Result<FiniteWord> {
    Ok(online_run(f, x, n)?.output)
}

/// `M_i = floor(beta)/(1 - |beta_i|) (1 + 1/|beta_i|^delta)` for each
/// conjugate, in the order of [`NumberField::conjugates_approx`].
pub fn conjugate_bounds(f: &NumberField, delay: usize) -> Vec<f64> {
    let fb = f.max_neg_digit() as f64;
    f.conjugates_approx()
        .iter()
        .map(|z| {
            let r = z.norm();
            fb / (1.0 - r) * (1.0 + r.powi(-(delay as i32)))
        })
        .collect()
}

/// Breadth-first construction of the on-line transducer: transient states
/// are the prefix sums `q_j`, `j < delta`, and synchronous states the
/// remainders reachable from `q_delta`. Inputs whose remainder leaves the
/// proven bounds have no edge.
pub fn build_online_transducer(f: &NumberField, state_cap: usize) -> Result<Transducer> {
    let m = Machine::new(f);
    let mut t = Transducer::new(TransducerKind::OnLine { delay: m.delay, transient: Vec::new() });
    let mut transient = vec![t.add_state("t0", Some(f.zero()))];
    let mut level: Vec<(StateId, FieldElement)> = vec![(0, f.zero())];
    t.set_initial(vec![0]);
    let over = |t: &Transducer| t.num_states() > state_cap;

    let mut sync: HashMap<OnlineState, StateId> = HashMap::new();
    let mut queue = VecDeque::new();
    for j in 1..=m.delay {
        let mut seen: HashMap<FieldElement, StateId> = HashMap::new();
        let mut next_level = Vec::new();
        for (from, q) in &level {
            for x in 0..=m.max_in {
                let Some(q2) = m.transient(q, j, x) else { continue };
                let to = if j == m.delay {
                    let st = OnlineState { value: q2, next_odd: true };
                    match sync.get(&st) {
                        Some(&id) => id,
                        None => {
                            let id = t.add_state(format!("s{}", sync.len()), Some(st.value.clone()));
                            t.set_final(id, Vec::new());
                            sync.insert(st.clone(), id);
                            queue.push_back(st);
                            id
                        }
                    }
                } else {
                    match seen.get(&q2) {
                        Some(&id) => id,
                        None => {
                            let id = t.add_state(format!("t{j}.{}", seen.len()), Some(q2.clone()));
                            transient.push(id);
                            seen.insert(q2.clone(), id);
                            next_level.push((id, q2));
                            id
                        }
                    }
                };
                t.add_edge(*from, vec![x], Vec::new(), to);
                if over(&t) {
                    return Err(Error::StateCapExceeded(state_cap));
                }
            }
        }
        level = next_level;
    }
    while let Some(st) = queue.pop_front() {
        let from = sync[&st];
        for x in 0..=m.max_in {
            let Some((y, next)) = m.step(&st, x) else { continue };
            let to = match sync.get(&next) {
                Some(&id) => id,
                None => {
                    let id = t.add_state(format!("s{}", sync.len()), Some(next.value.clone()));
                    t.set_final(id, Vec::new());
                    sync.insert(next.clone(), id);
                    queue.push_back(next);
                    id
                }
            };
            t.add_edge(from, vec![x], vec![y], to);
            if over(&t) {
                return Err(Error::StateCapExceeded(state_cap));
            }
        }
    }
    t.kind = TransducerKind::OnLine { delay: m.delay, transient };
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numberfield::IntPolynomial;
    use crate::words::{eval_finite, BaseSign};

    #[test]
    fn delays() {
        assert_eq!(online_delay(&NumberField::golden()), 4);
        assert_eq!(online_delay(&NumberField::golden_squared()), 4);
        for b in 2..=7 {
            assert_eq!(online_delay(&NumberField::integer(b).unwrap()), 2);
        }
    }

    #[test]
    fn zero_input_gives_zero_output() {
        let f = NumberField::golden();
        assert_eq!(online_convert(&f, &[], 8).unwrap(), FiniteWord::zeros(8));
    }

    fn residual_ok(f: &NumberField, x: &FieldElement, digits: &[Digit], n: usize) {
        let run = online_run(f, digits, n).unwrap();
        let y = eval_finite(&run.output, BaseSign::Negative, f, n);
        let r = f.mul(&(x - &y), &f.pow(&f.beta(), n as i64).unwrap());
        let delta = run.delay as i64;
        let inv_d = f.pow(&f.beta(), -delta).unwrap();
        let bound = &f.div(&f.beta(), &(&f.beta() + &f.one())).unwrap()
            + &f.mul(&f.from_int(f.max_neg_digit()), &inv_d);
        assert!(f.le(&(-&bound), &r) && f.le(&r, &bound), "residual {} too large", f.to_f64(&r));
    }

    #[test]
    fn golden_quarter() {
        let f = NumberField::golden();
        let x = f.from_ratio(1, 4);
        let digits = crate::expansion::d_beta(&x, &f, 40).unwrap();
        residual_ok(&f, &x, &digits, 12);
    }

    #[test]
    fn binary_third() {
        let f = NumberField::integer(2).unwrap();
        let x = f.from_ratio(1, 3);
        let digits: Vec<Digit> = (0..40).map(|i| (i % 2) as Digit).collect();
        let run = online_run(&f, &digits, 10).unwrap();
        assert!(run.output.iter().all(|&d| (0..=2).contains(&d)));
        residual_ok(&f, &x, &digits, 10);
    }

    #[test]
    fn out_of_domain_is_reported() {
        let f = NumberField::golden();
        // 0.1 in base G is 1/G, far above 1/(G+1)
        let err = online_convert(&f, &[1, 0, 0, 0, 0, 0], 2).unwrap_err();
        assert_eq!(err.name(), "OutOfDomain");
    }

    #[test]
    fn transducer_agrees_with_algorithm() {
        for f in [NumberField::integer(2).unwrap(), NumberField::golden()] {
            let t = build_online_transducer(&f, 100_000).unwrap();
            assert!(t.is_input_deterministic());
            let delay = t.delay().unwrap();
            let top = f.max_beta_digit() as Digit;
            // every input of length 10 that the algorithm accepts
            for code in 0..(top as u32 + 1).pow(10) {
                let mut digits = Vec::new();
                let mut c = code;
                for _ in 0..10 {
                    digits.push((c % (top as u32 + 1)) as Digit);
                    c /= top as u32 + 1;
                }
                let n = digits.len() - delay;
                match online_convert(&f, &digits, n) {
                    Ok(y) => assert_eq!(t.run_left(&digits, 1).unwrap().0, y.0),
                    Err(_) => assert!(t.run_left(&digits, 1).is_err()),
                }
            }
            let bounds = conjugate_bounds(&f, delay);
            for s in 0..t.num_states() {
                let v = f.conjugate_values(t.payload(s).unwrap());
                for (z, m) in v.iter().zip(&bounds) {
                    assert!(z.norm() <= m * (1.0 + 1e-9));
                }
            }
        }
    }

    #[test]
    fn non_pisot_blows_up() {
        let f = NumberField::new(IntPolynomial::from_i64(&[-2, 0, 1]).unwrap()).unwrap();
        assert!(matches!(build_online_transducer(&f, 2_000), Err(Error::StateCapExceeded(2_000))));
    }
}
