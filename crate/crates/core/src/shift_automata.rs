//! Automata for subshifts defined by the alternate order, the (-beta)-shift
//! automaton, its classification, and the positive-base counterpart.

use std::collections::BTreeSet;

use crate::automata::Automaton;
use crate::error::{Error, Result};
use crate::expansion::{d_star_beta_one, Bounds};
use crate::numberfield::NumberField;
use crate::words::{is_asmax, is_asmin, Digit, EpWord, FiniteWord};

/// Which comparison every suffix of an accepted word must satisfy against
/// the reference word `s`, read prefix by prefix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    /// `s <=alt suffix`.
    AltLower,
    /// `suffix <=alt s`.
    AltUpper,
    /// `suffix <=lex s`.
    LexUpper,
}

impl Bound {
    /// Whether digit `b` in place of `s_k` at 1-based position `k` puts the
    /// word strictly on the allowed side.
    fn escapes(self, k: usize, b: Digit, sk: Digit) -> bool {
        let sign = if k.is_multiple_of(2) { 1 } else { -1 };
        match self {
            Bound::AltLower => sign * (b - sk) > 0,
            Bound::AltUpper => sign * (b - sk) < 0,
            Bound::LexUpper => b < sk,
        }
    }

    fn alternating(self) -> bool {
        self != Bound::LexUpper
    }
}

/// Number of states of the construction for `s`: the preperiod plus one
/// period, or two periods when the period is odd and parity matters.
pub fn unrolled_len(s: &EpWord, bound: Bound) -> usize {
    let (m, p) = (s.preperiod().len(), s.period().len());
    if bound.alternating() && p % 2 == 1 {
        m + 2 * p
    } else {
        m + p
    }
}

/// The automaton whose state `i` stands for the prefix `s_1 ... s_i`.
///
/// Reading `b` from state `i`, every suffix of `s_1 ... s_i` that is still
/// a prefix of `s` (a border, including the empty one and the whole
/// prefix) must either continue to match or be decided on the allowed
/// side by `b`; the target is the longest border of `s_1 ... s_i b`. When
/// `s_1 > s_j` for all `j > 1` the only live border is the whole prefix
/// and this is the classical construction. The forward edge out of the
/// last state goes to the state equivalent to the full unrolled prefix,
/// normally the state at the start of the (possibly doubled) period.
pub fn order_bounded_automaton(s: &EpWord, bound: Bound, lo: Digit, hi: Digit) -> Automaton {
    let len = unrolled_len(s, bound);
    let u = s.prefix(len + 2);
    let m = s.preperiod().len();
    // state `len` is the full unrolled prefix; reading on from it is
    // reading on from state `m` shifted by a whole number of periods
    let mut a = Automaton::new(lo, hi, len + 1);
    for i in 0..=len {
        a.set_final(i, true);
        let live = borders(&u[..i], &u);
        for b in lo..=hi {
            let ok = live.iter().all(|&j| b == u[j] || bound.escapes(j + 1, b, u[j]));
            if !ok {
                continue;
            }
            let target = live.iter().filter(|&&j| b == u[j]).map(|&j| j + 1).max().unwrap_or(0);
            a.set_edge(i, b, if target > len { m + 1 } else { target });
        }
    }
    a.set_initial(vec![0]);
    match a.equivalent_state(len) {
        Some(j) => a.merge_into(len, j),
        None => a,
    }
}

/// Lengths `j` with `w[|w|-j..] == u[..j]`, from `|w|` down to 0.
fn borders(w: &[Digit], u: &[Digit]) -> Vec<usize> {
    (0..=w.len()).rev().filter(|&j| w[w.len() - j..] == u[..j]).collect()
}

pub fn build_asmin_automaton(s: &EpWord, lo: Digit, hi: Digit) -> Result<Automaton> {
    if !is_asmin(s, hi) {
        return Err(Error::NotAsmin);
    }
    Ok(order_bounded_automaton(s, Bound::AltLower, lo, hi))
}

pub fn build_asmax_automaton(s: &EpWord, lo: Digit, hi: Digit) -> Result<Automaton> {
    if !is_asmax(s, lo) {
        return Err(Error::NotAsmax);
    }
    Ok(order_bounded_automaton(s, Bound::AltUpper, lo, hi))
}

fn needs_upper_bound(d: &EpWord) -> bool {
    d.is_purely_periodic() && d.period().len() % 2 == 1
}

/// Minimal deterministic automaton of the factor language of the
/// (-beta)-shift, reading from a single initial state.
pub fn factor_recognizer(f: &NumberField, cap: usize) -> Result<Automaton> {
    let bounds = Bounds::new(f, cap)?;
    Ok(recognizer_from_bounds(&bounds, f.max_neg_digit() as Digit))
}

fn recognizer_from_bounds(bounds: &Bounds, top: Digit) -> Automaton {
    let lower = order_bounded_automaton(&bounds.d, Bound::AltLower, 0, top);
    if needs_upper_bound(&bounds.d) {
        let upper = order_bounded_automaton(&bounds.d_star, Bound::AltUpper, 0, top);
        lower.product(&upper).minimize()
    } else {
        lower.minimize()
    }
}

/// Right-resolving presentation of a factorial language: the terminal
/// strongly connected part of its minimal automaton with every state
/// initial, when that part already carries the whole language.
pub fn presentation(min_dfa: &Automaton) -> Automaton {
    let core = min_dfa.terminal_part();
    if core.num_states() > 0 && core.language_equal(min_dfa) {
        core
    } else {
        min_dfa.clone()
    }
}

/// The (-beta)-shift automaton: the minimal factor recognizer reduced to
/// its presentation part.
pub fn build_shift_automaton(f: &NumberField, cap: usize) -> Result<Automaton> {
    Ok(presentation(&factor_recognizer(f, cap)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftKind {
    FiniteType,
    SoficNotFiniteType,
    NotSoficOrUndetected,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub kind: ShiftKind,
    /// Minimal forbidden factors, present for shifts of finite type.
    pub forbidden_factors: Option<Vec<FiniteWord>>,
    /// Absent when `d` was not found to be eventually periodic.
    pub shift_automaton: Option<Automaton>,
}

pub fn classify(f: &NumberField, cap: usize) -> Classification {
    let bounds = match Bounds::new(f, cap) {
        Ok(b) => b,
        Err(_) => {
            return Classification {
                kind: ShiftKind::NotSoficOrUndetected,
                forbidden_factors: None,
                shift_automaton: None,
            }
        }
    };
    let top = f.max_neg_digit() as Digit;
    let dfa = recognizer_from_bounds(&bounds, top);
    let automaton = Some(presentation(&dfa));
    if !bounds.d.is_purely_periodic() {
        return Classification { kind: ShiftKind::SoficNotFiniteType, forbidden_factors: None, shift_automaton: automaton };
    }
    let mut candidates = forbidden_candidates(&bounds.d, Bound::AltLower, top);
    if needs_upper_bound(&bounds.d) {
        candidates.extend(forbidden_candidates(&bounds.d_star, Bound::AltUpper, top));
    }
    let forbidden = minimal_forbidden(&candidates, &dfa);
    Classification { kind: ShiftKind::FiniteType, forbidden_factors: Some(forbidden), shift_automaton: automaton }
}

/// Words `s_1 ... s_{n-1} b` where `b` decides the comparison the wrong
/// way, for `n` up to the unrolled length.
pub fn forbidden_candidates(s: &EpWord, bound: Bound, top: Digit) -> Vec<Vec<Digit>> {
    let len = unrolled_len(s, bound);
    let mut out = Vec::new();
    for n in 1..=len {
        let sn = s.digit(n - 1);
        for b in 0..=top {
            let wrong = match bound {
                Bound::AltLower => Bound::AltUpper.escapes(n, b, sn),
                Bound::AltUpper => Bound::AltLower.escapes(n, b, sn),
                Bound::LexUpper => b > sn,
            };
            if wrong {
                let mut w = s.prefix(n - 1);
                w.push(b);
                out.push(w);
            }
        }
    }
    out
}

/// Reduces forbidden words to the minimal forbidden factors they contain:
/// factors rejected by `dfa` whose two maximal proper factors are accepted.
fn minimal_forbidden(candidates: &[Vec<Digit>], dfa: &Automaton) -> Vec<FiniteWord> {
    let mut found: BTreeSet<Vec<Digit>> = BTreeSet::new();
    for w in candidates {
        for i in 0..w.len() {
            for j in i + 1..=w.len() {
                let u = &w[i..j];
                if !dfa.accepts(u) && dfa.accepts(&u[1..]) && dfa.accepts(&u[..u.len() - 1]) {
                    found.insert(u.to_vec());
                }
            }
        }
    }
    let mut out: Vec<Vec<Digit>> = found.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    out.into_iter().map(FiniteWord).collect()
}

/// Natural log of the spectral radius of the automaton's adjacency matrix.
pub fn entropy(a: &Automaton) -> Result<f64> {
    a.entropy()
}

/// The beta-shift automaton from Parry's condition: every suffix is
/// lexicographically at most `d*_beta(1)`.
pub fn beta_shift_automaton(f: &NumberField, cap: usize) -> Result<Automaton> {
    let ds = d_star_beta_one(f, cap)?;
    let top = f.max_beta_digit() as Digit;
    let dfa = order_bounded_automaton(&ds, Bound::LexUpper, 0, top).minimize();
    Ok(presentation(&dfa))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansion::DEFAULT_CAP;
    use std::cmp::Ordering;

    fn ep(s: &str) -> EpWord {
        s.parse().unwrap()
    }

    fn words(top: Digit, n: usize) -> Vec<Vec<Digit>> {
        let mut layer = vec![Vec::new()];
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            layer = layer
                .iter()
                .flat_map(|w| (0..=top).map(move |d| [w.clone(), vec![d]].concat()))
                .collect();
            out.extend(layer.iter().cloned());
        }
        out
    }

    /// Every suffix compared with the equal-length prefix of `s`.
    fn suffix_oracle(w: &[Digit], s: &EpWord, keep: impl Fn(Ordering) -> bool) -> bool {
        (0..w.len()).all(|i| {
            let u = &w[i..];
            keep(crate::words::alt_compare_finite(u, &s.prefix(u.len())).unwrap())
        })
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

    #[test]
    fn state_counts() {
        assert_eq!(build_asmin_automaton(&ep("1(0)"), 0, 1).unwrap().num_states(), 3);
        assert_eq!(build_asmin_automaton(&ep("(21)"), 0, 2).unwrap().num_states(), 2);
        assert_eq!(build_asmin_automaton(&ep("(2)"), 0, 2).unwrap().num_states(), 2);
        assert_eq!(build_asmin_automaton(&ep("0(1)"), 0, 1).unwrap_err(), Error::NotAsmin);
        assert_eq!(build_asmax_automaton(&ep("(1)"), 0, 1).unwrap_err(), Error::NotAsmax);
    }

    #[test]
    fn asmin_automaton_language() {
        for (s, top) in [("1(0)", 1), ("(21)", 2), ("(2)", 2), ("2(10)", 2), ("21(1)", 2)] {
            let s = ep(s);
            let a = build_asmin_automaton(&s, 0, top).unwrap();
            for w in words(top, 8) {
                assert_eq!(a.accepts(&w), suffix_oracle(&w, &s, |o| o != Ordering::Less), "{s} {w:?}");
            }
        }
    }

    #[test]
    fn asmax_automaton_language() {
        for (s, top) in [("(01)", 2), ("0(21)", 2), ("01(0)", 1)] {
            let s = ep(s);
            let a = build_asmax_automaton(&s, 0, top).unwrap();
            for w in words(top, 8) {
                assert_eq!(a.accepts(&w), suffix_oracle(&w, &s, |o| o != Ordering::Greater), "{s} {w:?}");
            }
        }
    }

    /// The textbook rule sends the maximal digit from an odd state to state 1.
    #[test]
    fn max_digit_edges_match_the_textbook_rule() {
        for (s, top) in [("1(0)", 1), ("(21)", 2), ("2(10)", 2), ("(2)", 2)] {
            let s = ep(s);
            let a = build_asmin_automaton(&s, 0, top).unwrap();
            for i in (1..a.num_states()).step_by(2) {
                if s.digit(i) < top {
                    assert_eq!(a.next(i, top), Some(1), "{s} state {i}");
                }
            }
        }
    }

    #[test]
    fn golden_mean_is_the_even_shift() {
        let f = NumberField::golden();
        let a = build_shift_automaton(&f, DEFAULT_CAP).unwrap();
        assert_eq!(a.num_states(), 2);
        let even = figure(&[(0, 1, 0), (0, 0, 1), (1, 0, 0)], 2, 1);
        assert!(a.is_isomorphic(&even));
        let c = classify(&f, DEFAULT_CAP);
        assert_eq!(c.kind, ShiftKind::SoficNotFiniteType);
        assert!(c.forbidden_factors.is_none());
    }

    #[test]
    fn golden_square_shift() {
        let f = NumberField::golden_squared();
        let a = build_shift_automaton(&f, DEFAULT_CAP).unwrap();
        let fig = figure(&[(0, 0, 0), (0, 1, 0), (0, 2, 1), (1, 2, 1), (1, 1, 0)], 2, 2);
        assert!(a.is_isomorphic(&fig));
        let c = classify(&f, DEFAULT_CAP);
        assert_eq!(c.kind, ShiftKind::FiniteType);
        assert_eq!(c.forbidden_factors.unwrap(), vec![FiniteWord(vec![2, 0])]);
    }

    #[test]
    fn base_minus_two_shift() {
        let f = NumberField::integer(2).unwrap();
        let c = classify(&f, DEFAULT_CAP);
        assert_eq!(c.kind, ShiftKind::FiniteType);
        let x = c.forbidden_factors.unwrap();
        let as_set: BTreeSet<Vec<Digit>> = x.iter().map(|w| w.0.clone()).collect();
        let expected: BTreeSet<Vec<Digit>> = [vec![2, 0], vec![2, 1], vec![0, 2]].into_iter().collect();
        assert_eq!(as_set, expected);
        let dfa = factor_recognizer(&f, DEFAULT_CAP).unwrap();
        // the shift is exactly the set of words avoiding the forbidden factors
        for w in words(2, 6) {
            let avoids = x.iter().all(|u| !w.windows(u.len()).any(|v| v == &u[..]));
            assert_eq!(dfa.accepts(&w), avoids, "{w:?}");
        }
    }

    #[test]
    fn entropy_is_log_beta() {
        for f in [NumberField::golden(), NumberField::golden_squared(), NumberField::integer(2).unwrap(), NumberField::integer(3).unwrap()] {
            let e = entropy(&build_shift_automaton(&f, DEFAULT_CAP).unwrap()).unwrap();
            assert!((e - f.beta_f64().ln()).abs() < 1e-9, "{e}");
        }
    }

    #[test]
    fn positive_base_shifts() {
        let g = NumberField::golden();
        let a = beta_shift_automaton(&g, DEFAULT_CAP).unwrap();
        let fig = figure(&[(0, 0, 0), (0, 1, 1), (1, 0, 0)], 2, 1);
        assert!(a.is_isomorphic(&fig));
        let g2 = NumberField::golden_squared();
        let a = beta_shift_automaton(&g2, DEFAULT_CAP).unwrap();
        let fig = figure(&[(0, 0, 0), (0, 1, 0), (0, 2, 1), (1, 1, 1), (1, 0, 0)], 2, 2);
        assert!(a.is_isomorphic(&fig));
        assert!((entropy(&a).unwrap() - g2.beta_f64().ln()).abs() < 1e-9);
    }
}
