//! Digit words, the alternate and short-alternate orders, and exact
//! evaluation of words in base `beta` or `-beta`.
//!
//! Digits are signed so that the same types carry both the canonical
//! alphabets `{0, ..., floor(beta)}` and the symmetric alphabets `{-c, ..., c}`
//! used for normalization.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::numberfield::{FieldElement, NumberField};

pub type Digit = i32;

/// A finite word, most significant digit first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteWord(pub Vec<Digit>);

impl FiniteWord {
    pub fn new(digits: Vec<Digit>) -> Self {
        FiniteWord(digits)
    }

    pub fn empty() -> Self {
        FiniteWord(Vec::new())
    }

    pub fn zeros(n: usize) -> Self {
        FiniteWord(vec![0; n])
    }

    pub fn into_vec(self) -> Vec<Digit> {
        self.0
    }
}

impl Deref for FiniteWord {
    type Target = [Digit];
    fn deref(&self) -> &[Digit] {
        &self.0
    }
}

impl From<Vec<Digit>> for FiniteWord {
    fn from(v: Vec<Digit>) -> Self {
        FiniteWord(v)
    }
}

impl From<&[Digit]> for FiniteWord {
    fn from(v: &[Digit]) -> Self {
        FiniteWord(v.to_vec())
    }
}

impl fmt::Display for FiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_digits(&self.0))
    }
}

impl FromStr for FiniteWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('.').trim_end_matches('.');
        Ok(FiniteWord(parse_digits(s)?))
    }
}

/// An eventually periodic infinite word `pre (per)^omega`, always kept in
/// canonical form: the period is primitive and the preperiod is as short
/// as possible.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EpWord {
    pre: Vec<Digit>,
    per: Vec<Digit>,
}

impl EpWord {
    pub fn new(pre: Vec<Digit>, per: Vec<Digit>) -> Result<Self> {
        if per.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        let mut w = EpWord { pre, per };
        w.canonicalize_in_place();
        Ok(w)
    }

    /// The constant word `d^omega`.
    pub fn constant(d: Digit) -> Self {
        EpWord { pre: Vec::new(), per: vec![d] }
    }

    pub fn zero() -> Self {
        Self::constant(0)
    }

    /// `w 0^omega` for a finite word `w`.
    pub fn from_finite(w: &[Digit]) -> Self {
        EpWord::new(w.to_vec(), vec![0]).expect("nonempty period")
    }

    pub fn preperiod(&self) -> &[Digit] {
        &self.pre
    }

    pub fn period(&self) -> &[Digit] {
        &self.per
    }

    pub fn is_purely_periodic(&self) -> bool {
        self.pre.is_empty()
    }

    /// Digit at 0-based index `i`.
    pub fn digit(&self, i: usize) -> Digit {
        if i < self.pre.len() {
            self.pre[i]
        } else {
            self.per[(i - self.pre.len()) % self.per.len()]
        }
    }

    pub fn prefix(&self, n: usize) -> Vec<Digit> {
        (0..n).map(|i| self.digit(i)).collect()
    }

    /// The shifted word `w_{n+1} w_{n+2} ...`.
    pub fn shift(&self, n: usize) -> EpWord {
        if n <= self.pre.len() {
            return EpWord { pre: self.pre[n..].to_vec(), per: self.per.clone() };
        }
        let r = (n - self.pre.len()) % self.per.len();
        let mut per = self.per[r..].to_vec();
        per.extend_from_slice(&self.per[..r]);
        EpWord { pre: Vec::new(), per }
    }

    /// `u w` for a finite word `u`.
    pub fn prepend(&self, u: &[Digit]) -> EpWord {
        let mut pre = u.to_vec();
        pre.extend_from_slice(&self.pre);
        EpWord::new(pre, self.per.clone()).expect("nonempty period")
    }

    /// Applies `f` to every digit together with its 0-based index parity.
    pub fn map_with_parity(&self, f: impl Fn(usize, Digit) -> Digit) -> EpWord {
        // unroll the period twice so index parity is periodic
        let m = self.pre.len();
        let pre: Vec<Digit> = self.pre.iter().enumerate().map(|(i, &d)| f(i, d)).collect();
        let reps = if self.per.len() % 2 == 1 { 2 } else { 1 };
        let per: Vec<Digit> = (0..self.per.len() * reps).map(|j| f(m + j, self.digit(m + j))).collect();
        EpWord::new(pre, per).expect("nonempty period")
    }

    /// Number of digits after which two words agreeing so far agree forever.
    fn agreement_bound(&self, other: &EpWord) -> usize {
        self.pre.len().max(other.pre.len()) + self.per.len().lcm(&other.per.len())
    }

    fn canonicalize_in_place(&mut self) {
        let p = self.per.len();
        for q in 1..=p {
            if p.is_multiple_of(q) && (q..p).all(|i| self.per[i] == self.per[i - q]) {
                self.per.truncate(q);
                break;
            }
        }
        while let Some(&last) = self.pre.last() {
            if last != *self.per.last().unwrap() {
                break;
            }
            self.pre.pop();
            self.per.rotate_right(1);
        }
    }
}

/// Canonical form of `pre (per)^omega`.
pub fn canonicalize(pre: &[Digit], per: &[Digit]) -> Result<EpWord> {
    EpWord::new(pre.to_vec(), per.to_vec())
}

impl fmt::Display for EpWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comma = needs_commas(&self.pre) || needs_commas(&self.per);
        let render = |d: &[Digit]| if comma { join_commas(d) } else { format_digits(d) };
        if comma && !self.pre.is_empty() {
            write!(f, "{},({})", render(&self.pre), render(&self.per))
        } else {
            write!(f, "{}({})", render(&self.pre), render(&self.per))
        }
    }
}

impl FromStr for EpWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('.');
        let open = s.find('(').ok_or_else(|| Error::Parse(format!("missing '(' in {s:?}")))?;
        let close = s.rfind(')').ok_or_else(|| Error::Parse(format!("missing ')' in {s:?}")))?;
        if close != s.len() - 1 || close < open {
            return Err(Error::Parse(format!("malformed periodic word {s:?}")));
        }
        let parse = if s.contains(',') { parse_list } else { parse_digits };
        let pre = parse(s[..open].trim_end_matches(','))?;
        let per = parse(&s[open + 1..close])?;
        EpWord::new(pre, per)
    }
}

fn needs_commas(d: &[Digit]) -> bool {
    d.iter().any(|&x| !(-9..=9).contains(&x))
}

fn join_commas(d: &[Digit]) -> String {
    d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Compact rendering when every digit fits in one character (negative
/// digits take a `~` prefix), comma-separated otherwise.
pub fn format_digits(d: &[Digit]) -> String {
    if needs_commas(d) {
        return join_commas(d);
    }
    let mut s = String::with_capacity(d.len());
    for &x in d {
        if x < 0 {
            s.push('~');
        }
        s.push(char::from_digit(x.unsigned_abs(), 10).unwrap());
    }
    s
}

fn parse_list(s: &str) -> Result<Vec<Digit>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            let t = t.trim();
            let t = t.strip_prefix('~').map(|r| format!("-{r}")).unwrap_or_else(|| t.to_string());
            t.parse::<Digit>().map_err(|_| Error::Parse(format!("bad digit {t:?}")))
        })
        .collect()
}

/// Parses either the compact form (`1~10`) or a comma list (`1,-1,10`).
pub fn parse_digits(s: &str) -> Result<Vec<Digit>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s.contains(',') {
        return parse_list(s);
    }
    let mut out = Vec::with_capacity(s.len());
    let mut neg = false;
    for ch in s.chars() {
        match ch {
            '~' | '-' if !neg => neg = true,
            c if c.is_ascii_digit() => {
                let v = c.to_digit(10).unwrap() as Digit;
                out.push(if neg { -v } else { v });
                neg = false;
            }
            c => return Err(Error::Parse(format!("unexpected character {c:?}"))),
        }
    }
    if neg {
        return Err(Error::Parse("dangling sign".into()));
    }
    Ok(out)
}

// ---- orders ----

/// Order decided at the 1-based position `k` where `a` and `b` first differ.
fn alt_at(k: usize, a: Digit, b: Digit) -> Ordering {
    let c = a.cmp(&b);
    if k % 2 == 1 {
        c.reverse()
    } else {
        c
    }
}

/// Alternate order on finite words of equal length.
pub fn alt_compare_finite(u: &[Digit], v: &[Digit]) -> Result<Ordering> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch(u.len(), v.len()));
    }
    Ok(alt_compare_slices(u, v))
}

fn alt_compare_slices(u: &[Digit], v: &[Digit]) -> Ordering {
    for (i, (a, b)) in u.iter().zip(v).enumerate() {
        if a != b {
            return alt_at(i + 1, *a, *b);
        }
    }
    Ordering::Equal
}

/// Alternate order on infinite eventually periodic words.
pub fn alt_compare(u: &EpWord, v: &EpWord) -> Ordering {
    let n = u.agreement_bound(v);
    for i in 0..n {
        let (a, b) = (u.digit(i), v.digit(i));
        if a != b {
            return alt_at(i + 1, a, b);
        }
    }
    Ordering::Equal
}

/// Short-alternate order; `0` is the padding letter.
pub fn short_alt_compare(u: &[Digit], v: &[Digit]) -> Ordering {
    if sa_less(u, v) {
        Ordering::Less
    } else if sa_less(v, u) {
        Ordering::Greater
    } else {
        Ordering::Equal
    }
}

fn sa_less(u: &[Digit], v: &[Digit]) -> bool {
    let (l, m) = (u.len(), v.len());
    if l % 2 == 1 && m % 2 == 1 {
        // a common leading 0 flips every parity
        return l < m || (l == m && alt_compare_slices(u, v) == Ordering::Greater);
    }
    if l % 2 == 0 && m % 2 == 0 {
        return l > m || (l == m && alt_compare_slices(u, v) == Ordering::Less);
    }
    if l < m {
        let mut padded = vec![0; m - l];
        padded.extend_from_slice(u);
        sa_less(&padded, v)
    } else {
        let mut padded = vec![0; l - m];
        padded.extend_from_slice(v);
        sa_less(u, &padded)
    }
}

/// Alternately shift minimal: starts with `max_digit` and is below or
/// equal to each of its shifts.
pub fn is_asmin(s: &EpWord, max_digit: Digit) -> bool {
    if s.digit(0) != max_digit {
        return false;
    }
    let n = s.preperiod().len() + s.period().len();
    (1..n).all(|k| alt_compare(s, &s.shift(k)) != Ordering::Greater)
}

/// Alternately shift maximal: starts with `min_digit` and is above or
/// equal to each of its shifts.
pub fn is_asmax(s: &EpWord, min_digit: Digit) -> bool {
    if s.digit(0) != min_digit {
        return false;
    }
    let n = s.preperiod().len() + s.period().len();
    (1..n).all(|k| alt_compare(s, &s.shift(k)) != Ordering::Less)
}

// ---- evaluation ----

/// Sign of the base a word is read in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseSign {
    Positive,
    Negative,
}

impl BaseSign {
    pub fn base(self, f: &NumberField) -> FieldElement {
        match self {
            BaseSign::Positive => f.beta(),
            BaseSign::Negative => -f.beta(),
        }
    }
}

fn horner(w: &[Digit], base: &FieldElement, f: &NumberField) -> FieldElement {
    let mut acc = f.zero();
    for &d in w {
        acc = &f.mul(&acc, base) + &f.from_int(d as i64);
    }
    acc
}

/// Value of `w` with `scale` digits after the radix point: `scale = 0`
/// reads `w.` as an integer, `scale = |w|` reads `.w`.
pub fn eval_finite(w: &[Digit], sign: BaseSign, f: &NumberField, scale: usize) -> FieldElement {
    let base = sign.base(f);
    let v = horner(w, &base, f);
    if scale == 0 {
        return v;
    }
    let p = f.pow(&base, -(scale as i64)).expect("base is invertible");
    f.mul(&v, &p)
}

/// Value of the fractional expansion `.pre (per)^omega`.
pub fn eval_ep(w: &EpWord, sign: BaseSign, f: &NumberField) -> FieldElement {
    let base = sign.base(f);
    let hp = horner(w.preperiod(), &base, f);
    let hq = horner(w.period(), &base, f);
    let bp = f.pow(&base, w.period().len() as i64).unwrap();
    let tail = f.div(&hq, &(&bp - &f.one())).expect("|base| > 1");
    let scale = f.pow(&base, -(w.preperiod().len() as i64)).unwrap();
    f.mul(&(&hp + &tail), &scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ep(s: &str) -> EpWord {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(ep("1(00)"), EpWord::new(vec![1], vec![0]).unwrap());
        assert_eq!(ep("10(0)"), ep("1(0)"));
        assert_eq!(ep("(2121)").period(), &[2, 1]);
        assert_eq!(EpWord::new(vec![1], vec![]).unwrap_err(), Error::EmptyPeriod);
        // rotation while absorbing: 0 1 (0 1)^w = (01)^w
        assert_eq!(ep("01(01)"), ep("(01)"));
        assert_eq!(ep("1(21)").to_string(), "(12)");
    }

    #[test]
    fn canonical_form_denotes_same_word() {
        let raw_pre = vec![3, 1, 2, 1, 2];
        let raw_per = vec![1, 2, 1, 2];
        let w = EpWord::new(raw_pre.clone(), raw_per.clone()).unwrap();
        for i in 0..40 {
            let expect = if i < 5 { raw_pre[i] } else { raw_per[(i - 5) % 4] };
            assert_eq!(w.digit(i), expect);
        }
        assert_eq!(w.preperiod(), &[3]);
    }

    #[test]
    fn text_format() {
        assert_eq!(ep(".1(10)").to_string(), "1(10)");
        assert_eq!(ep("~1(1~1)").prefix(3), vec![-1, 1, -1]);
        let w = EpWord::new(vec![12], vec![-3]).unwrap();
        assert_eq!(w.to_string(), "12,(-3)");
        assert_eq!(w.to_string().parse::<EpWord>().unwrap(), w);
        assert_eq!("1,-1,0".parse::<FiniteWord>().unwrap().0, vec![1, -1, 0]);
        assert!("1x".parse::<FiniteWord>().is_err());
    }

    #[test]
    fn alternate_order() {
        assert_eq!(alt_compare_finite(&[1, 0, 0], &[1, 1, 1]).unwrap(), Ordering::Less);
        assert_eq!(alt_compare_finite(&[1], &[1, 1]).unwrap_err(), Error::LengthMismatch(1, 2));
        assert_eq!(alt_compare(&ep("1(0)"), &ep("0(01)")), Ordering::Less);
        assert_eq!(alt_compare(&ep("(21)"), &ep("2(12)")), Ordering::Equal);
    }

    #[test]
    fn short_alternate_order() {
        assert_eq!(short_alt_compare(&[1, 1, 1], &[1, 0, 0]), Ordering::Less);
        assert_eq!(short_alt_compare(&[1, 0, 0], &[1, 1, 0, 1, 0]), Ordering::Less);
        assert_eq!(short_alt_compare(&[], &[]), Ordering::Equal);
    }

    fn negabase2(mut n: i64) -> Vec<Digit> {
        // independent oracle: repeated division by -2
        if n == 0 {
            return vec![0];
        }
        let mut out = Vec::new();
        while n != 0 {
            let r = n.rem_euclid(2);
            out.push(r as Digit);
            n = (n - r) / -2;
        }
        out.reverse();
        out
    }

    #[test]
    fn short_alternate_order_matches_integer_order() {
        let mut v: Vec<i64> = (-300..=300).collect();
        v.sort_by(|a, b| short_alt_compare(&negabase2(*a), &negabase2(*b)));
        assert_eq!(v, (-300..=300).collect::<Vec<_>>());
    }

    #[test]
    fn asmin_and_asmax() {
        assert!(is_asmin(&ep("1(0)"), 1));
        assert!(is_asmin(&ep("(21)"), 2));
        assert!(!is_asmin(&ep("0(1)"), 1));
        assert!(is_asmin(&ep("(2)"), 2));
        assert!(is_asmax(&ep("(01)"), 0));
        assert!(is_asmax(&ep("01(0)"), 0));
        assert!(!is_asmax(&ep("(1)"), 0));
    }

    #[test]
    fn evaluation_in_base_minus_two() {
        let f = NumberField::integer(2).unwrap();
        assert_eq!(eval_finite(&[1, 1, 1], BaseSign::Negative, &f, 0), f.from_int(3));
        assert_eq!(eval_finite(&[1, 0, 0], BaseSign::Negative, &f, 0), f.from_int(4));
        assert_eq!(eval_finite(&[], BaseSign::Negative, &f, 0), f.zero());
        let sixth = f.from_ratio(-1, 6);
        assert_eq!(eval_ep(&ep("1(10)"), BaseSign::Negative, &f), sixth);
        assert_eq!(eval_ep(&ep("0(01)"), BaseSign::Negative, &f), sixth);
        assert_eq!(eval_ep(&ep("(0)"), BaseSign::Negative, &f), f.zero());
        // .1 in base -2 is -1/2
        assert_eq!(eval_finite(&[1], BaseSign::Negative, &f, 1), f.from_ratio(-1, 2));
        assert_eq!(eval_ep(&ep("(1)"), BaseSign::Positive, &f), f.one());
    }

    #[test]
    fn golden_evaluation() {
        let f = NumberField::golden();
        // closed form against a direct partial sum
        let w = ep("(10)");
        let exact = eval_ep(&w, BaseSign::Negative, &f);
        let g = f.beta_f64();
        let approx: f64 = (1..60).map(|i| w.digit(i - 1) as f64 * (-g).powi(-(i as i32))).sum();
        assert!((f.to_f64(&exact) - approx).abs() < 1e-12);
    }
}
