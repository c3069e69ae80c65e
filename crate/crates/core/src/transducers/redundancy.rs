use std::collections::{HashMap, HashSet, VecDeque};

use super::{Transducer, TransducerKind};
use crate::automata::{Automaton, StateId};
use crate::error::{Error, Result};
use crate::expansion::{d_star_beta_one, orbit_expansion, NegInterval, DEFAULT_CAP};
use crate::numberfield::{FieldElement, NumberField};
use crate::shift_automata::{factor_recognizer, order_bounded_automaton, Bound};
use crate::words::{canonicalize, eval_ep, BaseSign, Digit, EpWord};

/// The automaton of zero-valued words on `{-2c, ..., 2c}`: states are the
/// elements `s` of Z[beta] with `|s| <= 2c/(beta-1)`, and reading `e` moves
/// `s` to `base * s + e`. Every path from 0 that stays inside the bound
/// spells a word of value zero.
#[derive(Clone, Debug)]
pub struct Redundancy {
    pub sign: BaseSign,
    pub c: Digit,
    states: Vec<FieldElement>,
    /// `next[s][e + 2c]`.
    next: Vec<Vec<Option<StateId>>>,
}

impl Redundancy {
    pub fn build(f: &NumberField, sign: BaseSign, c: Digit, state_cap: usize) -> Result<Self> {
        assert!(c >= 1, "alphabet bound must be positive");
        let base = sign.base(f);
        let bound = f.div(&f.from_int(2 * c as i64), &(&f.beta() - &f.one())).expect("beta > 1");
        let inside = |s: &FieldElement| f.le(&(-&bound), s) && f.le(s, &bound);
        let mut states = vec![f.zero()];
        let mut index: HashMap<FieldElement, StateId> = HashMap::from([(f.zero(), 0)]);
        let mut next = Vec::new();
        let mut queue = VecDeque::from([0]);
        while let Some(s) = queue.pop_front() {
            let scaled = f.mul(&base, &states[s]);
            let mut row = Vec::with_capacity(4 * c as usize + 1);
            for e in -2 * c..=2 * c {
                let t = &scaled + &f.from_int(e as i64);
                if !inside(&t) {
                    row.push(None);
                    continue;
                }
                let id = match index.get(&t) {
                    Some(&id) => id,
                    None => {
                        if states.len() >= state_cap {
                            return Err(Error::StateCapExceeded(state_cap));
                        }
                        states.push(t.clone());
                        index.insert(t, states.len() - 1);
                        queue.push_back(states.len() - 1);
                        states.len() - 1
                    }
                };
                row.push(Some(id));
            }
            next.push(row);
        }
        Ok(Redundancy { sign, c, states, next })
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn state_value(&self, s: StateId) -> &FieldElement {
        &self.states[s]
    }

    pub fn next(&self, s: StateId, e: Digit) -> Option<StateId> {
        if e.abs() > 2 * self.c {
            return None;
        }
        self.next[s][(e + 2 * self.c) as usize]
    }

    /// Runs the pair `(u, v)` letter by letter from state 0.
    pub fn accepts_pair(&self, u: &[Digit], v: &[Digit]) -> bool {
        if u.len() != v.len() {
            return false;
        }
        let mut s = 0;
        for (&a, &b) in u.iter().zip(v) {
            if a.abs() > self.c || b.abs() > self.c {
                return false;
            }
            match self.next(s, a - b) {
                Some(t) => s = t,
                None => return false,
            }
        }
        true
    }

    /// Every state satisfies `|s(beta_i)| <= 2c/(1 - |beta_i|)` at each
    /// conjugate, checked in floating point with a relative slack.
    pub fn conjugate_bounds_hold(&self, f: &NumberField) -> bool {
        let bounds: Vec<f64> =
            f.conjugates_approx().iter().map(|z| 2.0 * self.c as f64 / (1.0 - z.norm())).collect();
        self.states.iter().all(|s| {
            f.conjugate_values(s).iter().zip(&bounds).all(|(v, m)| *m > 0.0 && v.norm() <= m * (1.0 + 1e-9))
        })
    }

    /// The redundancy transducer: `s --a|b--> s'` for `a, b` in `{-c..c}`
    /// whenever `s --(a-b)--> s'`. State 0 is initial; all states are final.
    pub fn transducer(&self) -> Transducer {
        let mut t = Transducer::new(TransducerKind::General);
        for (i, s) in self.states.iter().enumerate() {
            let id = t.add_state(format!("{i}"), Some(s.clone()));
            t.set_final(id, Vec::new());
        }
        t.set_initial(vec![0]);
        for s in 0..self.states.len() {
            for a in -self.c..=self.c {
                for b in -self.c..=self.c {
                    if let Some(to) = self.next(s, a - b) {
                        t.add_edge(s, vec![a], vec![b], to);
                    }
                }
            }
        }
        t
    }

    /// Keeps only outputs at most `top` read by `output_dfa` (single
    /// initial state).
    fn restrict_outputs(&self, output_dfa: &Automaton, top: Digit) -> Transducer {
        let mut t = Transducer::new(TransducerKind::General);
        let start = (0, output_dfa.initial()[0]);
        let mut ids: HashMap<(StateId, StateId), StateId> = HashMap::new();
        let mut queue = VecDeque::from([start]);
        ids.insert(start, t.add_state(format!("{}/{}", start.0, start.1), Some(self.states[0].clone())));
        while let Some((r, d)) = queue.pop_front() {
            let from = ids[&(r, d)];
            for a in -self.c..=self.c {
                for b in *output_dfa.alphabet().start()..=top {
                    let (Some(r2), Some(d2)) = (self.next(r, a - b), output_dfa.next(d, b)) else { continue };
                    let to = *ids.entry((r2, d2)).or_insert_with(|| {
                        queue.push_back((r2, d2));
                        t.add_state(format!("{r2}/{d2}"), Some(self.states[r2].clone()))
                    });
                    t.add_edge(from, vec![a], vec![b], to);
                }
            }
        }
        for s in 0..t.num_states() {
            t.set_final(s, Vec::new());
        }
        t.set_initial(vec![0]);
        t
    }
}

/// Redundancy transducer for base `-beta` on `{-c, ..., c}`.
pub fn build_redundancy_transducer(f: &NumberField, c: Digit, state_cap: usize) -> Result<Transducer> {
    Ok(Redundancy::build(f, BaseSign::Negative, c, state_cap)?.transducer())
}

/// Largest output digit of normalization in base `-beta`. For an integer
/// base `b` the digit `b` only ever starts the tail `b^omega` of the left
/// end point, and the classical digit set `{0, ..., b-1}` is used instead,
/// with that tail written `((b-1)0)^omega`.
fn normal_top(f: &NumberField) -> Digit {
    if f.is_integer_base() {
        f.max_neg_digit() as Digit - 1
    } else {
        f.max_neg_digit() as Digit
    }
}

/// Normalization in base `-beta`: the redundancy transducer with outputs
/// restricted to factors of the (-beta)-shift.
pub fn build_normalization_transducer(f: &NumberField, c: Digit, state_cap: usize) -> Result<Transducer> {
    let red = Redundancy::build(f, BaseSign::Negative, c, state_cap)?;
    let dfa = factor_recognizer(f, DEFAULT_CAP)?;
    Ok(red.restrict_outputs(&dfa, normal_top(f)))
}

/// Normalization in base `beta`: outputs restricted to factors of the
/// beta-shift.
pub fn build_positive_normalization_transducer(f: &NumberField, c: Digit, state_cap: usize) -> Result<Transducer> {
    let red = Redundancy::build(f, BaseSign::Positive, c, state_cap)?;
    let ds = d_star_beta_one(f, DEFAULT_CAP)?;
    let dfa = order_bounded_automaton(&ds, Bound::LexUpper, 0, f.max_beta_digit() as Digit).minimize();
    Ok(red.restrict_outputs(&dfa, f.max_beta_digit() as Digit))
}

/// Runs a normalization transducer on `w` and returns the admissible
/// output.
///
/// The words in the closure of the shift with a given value differ only
/// where one continues with the left end point and the other with the
/// right one, and the latter always carries the smaller digit there. The
/// admissible representative is therefore the lexicographically greatest
/// infinite output, found greedily among moves that can still be extended
/// forever.
pub fn normalize_with(t: &Transducer, w: &EpWord) -> Result<EpWord> {
    let m = w.preperiod().len();
    let len = m + w.period().len();
    let succ = |i: usize| if i + 1 < len { i + 1 } else { m };
    type Node = (StateId, usize);
    let moves = |(q, i): Node| -> Vec<(Digit, Node)> {
        t.edges_on(q, &[w.digit(i)])
            .map(|e| (e.output[0], (e.to, succ(i))))
            .collect()
    };

    let start: Node = (t.initial()[0], 0);
    let mut order = vec![start];
    let mut seen: HashSet<Node> = HashSet::from([start]);
    let mut k = 0;
    while k < order.len() {
        for (_, n) in moves(order[k]) {
            if seen.insert(n) {
                order.push(n);
            }
        }
        k += 1;
    }
    // prune nodes without successors until every node can move forever
    let mut live: HashSet<Node> = seen;
    loop {
        let dead: Vec<Node> =
            live.iter().copied().filter(|&n| !moves(n).iter().any(|(_, s)| live.contains(s))).collect();
        if dead.is_empty() {
            break;
        }
        for n in dead {
            live.remove(&n);
        }
    }
    if !live.contains(&start) {
        return Err(Error::ValueOutOfInterval);
    }
    let mut visited: HashMap<Node, usize> = HashMap::new();
    let mut out = Vec::new();
    let mut cur = start;
    loop {
        if let Some(&at) = visited.get(&cur) {
            let (head, tail) = out.split_at(at);
            return canonicalize(head, tail);
        }
        visited.insert(cur, out.len());
        let (d, n) = moves(cur)
            .into_iter()
            .filter(|(_, s)| live.contains(s))
            .max_by_key(|(d, _)| *d)
            .expect("live node has a live successor");
        out.push(d);
        cur = n;
    }
}

fn alphabet_bound(f: &NumberField, w: &EpWord) -> Digit {
    let top = w.preperiod().iter().chain(w.period()).map(|d| d.abs()).max().unwrap_or(0);
    top.max(f.max_neg_digit() as Digit).max(1)
}

/// Admissible (-beta)-expansion of the value of `w`, through the
/// normalization transducer.
pub fn normalize(f: &NumberField, w: &EpWord, state_cap: usize) -> Result<EpWord> {
    let value = eval_ep(w, BaseSign::Negative, f);
    if !NegInterval::new(f).contains(f, &value) {
        return Err(Error::ValueOutOfInterval);
    }
    let t = build_normalization_transducer(f, alphabet_bound(f, w), state_cap)?;
    normalize_with(&t, w)
}

/// Admissible (-beta)-expansion of the value of `w`, by evaluating and
/// re-expanding.
pub fn normalize_exact(f: &NumberField, w: &EpWord, cap: usize) -> Result<EpWord> {
    let value = eval_ep(w, BaseSign::Negative, f);
    if !NegInterval::new(f).contains(f, &value) {
        return Err(Error::ValueOutOfInterval);
    }
    let w = orbit_expansion(&value, f, cap)?.periodic(cap)?;
    let b = f.max_neg_digit() as Digit;
    if f.is_integer_base() && w.period() == [b] {
        return EpWord::new(w.preperiod().to_vec(), vec![b - 1, 0]);
    }
    Ok(w)
}

/// Converts an admissible (-beta)-expansion of `x >= 0` into the
/// beta-expansion of `x`: negate the digits at odd positions, then
/// normalize in base `beta`.
pub fn convert_neg_to_pos(f: &NumberField, w: &EpWord, state_cap: usize) -> Result<EpWord> {
    let value = eval_ep(w, BaseSign::Negative, f);
    if f.sign(&value) < 0 || !NegInterval::new(f).contains(f, &value) {
        return Err(Error::ValueOutOfInterval);
    }
    let flipped = w.map_with_parity(|i, d| if i % 2 == 0 { -d } else { d });
    let t = build_positive_normalization_transducer(f, alphabet_bound(f, w), state_cap)?;
    normalize_with(&t, &flipped)
}
