//! The (-beta)- and beta-transformations, eventually periodic orbit
//! detection, the reference words `d` and `d*`, and admissibility.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numberfield::{FieldElement, NumberField};
use crate::words::{alt_compare, Digit, EpWord, FiniteWord};

pub const DEFAULT_CAP: usize = 100_000;

/// Outcome of iterating a transformation until an orbit point repeats.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrbitResult {
    /// The orbit is eventually periodic; the word is in canonical form, so
    /// its preperiod and period lengths are the minimal `m` and `p`.
    Periodic(EpWord),
    /// No repetition within the cap; the digits produced so far.
    CapExceeded(FiniteWord),
}

impl OrbitResult {
    pub fn periodic(self, cap: usize) -> Result<EpWord> {
        match self {
            OrbitResult::Periodic(w) => Ok(w),
            OrbitResult::CapExceeded(_) => Err(Error::CapExceeded(cap)),
        }
    }
}

/// The interval `I = [-beta/(beta+1), 1/(beta+1))` together with the
/// constant `beta/(beta+1)` used by every step.
#[derive(Clone, Debug)]
pub struct NegInterval {
    pub lo: FieldElement,
    pub hi: FieldElement,
}

impl NegInterval {
    pub fn new(f: &NumberField) -> Self {
        let b = f.beta();
        let hi = f.inv(&(&b + &f.one())).expect("beta + 1 is nonzero");
        let lo = -f.mul(&b, &hi);
        NegInterval { lo, hi }
    }

    /// `beta/(beta+1)`, the shift inside the floor.
    pub fn shift(&self) -> FieldElement {
        -&self.lo
    }

    pub fn contains(&self, f: &NumberField, x: &FieldElement) -> bool {
        f.le(&self.lo, x) && f.lt(x, &self.hi)
    }
}

fn step_unchecked(f: &NumberField, shift: &FieldElement, x: &FieldElement) -> (Digit, FieldElement) {
    let y = -f.mul_beta(x);
    let digit = f.floor_i64(&(&y + shift));
    let next = &y - &f.from_int(digit);
    (digit as Digit, next)
}

/// One application of `T(x) = -beta x - floor(-beta x + beta/(beta+1))`,
/// returning the emitted digit and the image.
pub fn t_minus_beta_step(x: &FieldElement, f: &NumberField) -> Result<(Digit, FieldElement)> {
    let iv = NegInterval::new(f);
    if !iv.contains(f, x) {
        return Err(Error::OutOfInterval);
    }
    Ok(step_unchecked(f, &iv.shift(), x))
}

/// The first `n` digits of the (-beta)-expansion of `x`.
pub fn d_minus_beta(x: &FieldElement, f: &NumberField, n: usize) -> Result<FiniteWord> {
    let iv = NegInterval::new(f);
    if !iv.contains(f, x) {
        return Err(Error::OutOfInterval);
    }
    let shift = iv.shift();
    let mut cur = x.clone();
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let (d, next) = step_unchecked(f, &shift, &cur);
        out.push(d);
        cur = next;
    }
    Ok(FiniteWord(out))
}

fn detect_orbit(
    x: &FieldElement,
    cap: usize,
    mut step: impl FnMut(&FieldElement) -> (Digit, FieldElement),
) -> OrbitResult {
    let mut seen: HashMap<FieldElement, usize> = HashMap::new();
    let mut digits = Vec::new();
    let mut cur = x.clone();
    for i in 0..cap {
        if let Some(&m) = seen.get(&cur) {
            let per = digits[m..].to_vec();
            digits.truncate(m);
            return OrbitResult::Periodic(EpWord::new(digits, per).expect("nonempty period"));
        }
        seen.insert(cur.clone(), i);
        let (d, next) = step(&cur);
        digits.push(d);
        cur = next;
    }
    OrbitResult::CapExceeded(FiniteWord(digits))
}

/// Iterates the (-beta)-transformation, storing exact orbit points, until
/// one repeats.
pub fn orbit_expansion(x: &FieldElement, f: &NumberField, cap: usize) -> Result<OrbitResult> {
    let iv = NegInterval::new(f);
    if !iv.contains(f, x) {
        return Err(Error::OutOfInterval);
    }
    let shift = iv.shift();
    Ok(detect_orbit(x, cap, |c| step_unchecked(f, &shift, c)))
}

/// `d = d_{-beta}(-beta/(beta+1))`, the expansion of the left endpoint.
pub fn d_word(f: &NumberField, cap: usize) -> Result<EpWord> {
    let iv = NegInterval::new(f);
    orbit_expansion(&iv.lo, f, cap)?.periodic(cap)
}

/// `d*` derived from `d`: `(0 d_1 ... d_{2p} (d_{2p+1} - 1))^omega` when `d`
/// is purely periodic with odd period `2p+1`, and `0 d` otherwise.
pub fn d_star_from(d: &EpWord) -> EpWord {
    if d.is_purely_periodic() && d.period().len() % 2 == 1 {
        let mut per = vec![0];
        per.extend_from_slice(d.period());
        *per.last_mut().unwrap() -= 1;
        EpWord::new(Vec::new(), per).expect("nonempty period")
    } else {
        d.prepend(&[0])
    }
}

pub fn d_star(f: &NumberField, cap: usize) -> Result<EpWord> {
    Ok(d_star_from(&d_word(f, cap)?))
}

/// The two reference words bounding admissible words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub d: EpWord,
    pub d_star: EpWord,
}

impl Bounds {
    pub fn new(f: &NumberField, cap: usize) -> Result<Self> {
        let d = d_word(f, cap)?;
        let d_star = d_star_from(&d);
        Ok(Bounds { d, d_star })
    }

    /// `d <=alt s <alt d*` for every shift `s` of `w`.
    pub fn admits(&self, w: &EpWord) -> bool {
        let n = w.preperiod().len() + w.period().len();
        (0..n).all(|k| {
            let s = w.shift(k);
            alt_compare(&self.d, &s) != Ordering::Greater && alt_compare(&s, &self.d_star) == Ordering::Less
        })
    }
}

/// Whether an infinite word is the (-beta)-expansion of some point.
pub fn is_admissible(w: &EpWord, f: &NumberField, cap: usize) -> Result<bool> {
    Ok(Bounds::new(f, cap)?.admits(w))
}

/// Whether a finite word is a factor of the (-beta)-shift.
pub fn is_admissible_finite(w: &[Digit], f: &NumberField, cap: usize) -> Result<bool> {
    let a = crate::shift_automata::factor_recognizer(f, cap)?;
    Ok(a.accepts(w))
}

// ---- positive base ----

fn beta_step(f: &NumberField, x: &FieldElement) -> (Digit, FieldElement) {
    let y = f.mul_beta(x);
    let digit = f.floor_i64(&y);
    (digit as Digit, &y - &f.from_int(digit))
}

fn check_unit(f: &NumberField, x: &FieldElement) -> Result<()> {
    if f.sign(x) < 0 || f.sign(&(x - &f.one())) > 0 {
        return Err(Error::OutOfInterval);
    }
    Ok(())
}

/// The first `n` digits of the greedy beta-expansion of `x` in `[0, 1]`.
pub fn d_beta(x: &FieldElement, f: &NumberField, n: usize) -> Result<FiniteWord> {
    check_unit(f, x)?;
    let mut cur = x.clone();
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let (d, next) = beta_step(f, &cur);
        out.push(d);
        cur = next;
    }
    Ok(FiniteWord(out))
}

/// Orbit of `x` under the beta-transformation; a finite expansion shows
/// up as a `0` period.
pub fn beta_orbit(x: &FieldElement, f: &NumberField, cap: usize) -> Result<OrbitResult> {
    check_unit(f, x)?;
    Ok(detect_orbit(x, cap, |c| beta_step(f, c)))
}

/// `d*_beta(1)`: the expansion of 1 itself when it is infinite, otherwise
/// `(t_1 ... t_{m-1} (t_m - 1))^omega` for `d_beta(1) = t_1 ... t_m`.
pub fn d_star_beta_one(f: &NumberField, cap: usize) -> Result<EpWord> {
    let d = beta_orbit(&f.one(), f, cap)?.periodic(cap)?;
    if d.period() == [0] {
        let mut t = d.preperiod().to_vec();
        *t.last_mut().expect("d_beta(1) is nonzero") -= 1;
        return EpWord::new(Vec::new(), t);
    }
    Ok(d)
}

/// Parry's condition: every shift of `w` is lexicographically below
/// `d*_beta(1)`.
pub fn is_beta_admissible(w: &EpWord, f: &NumberField, cap: usize) -> Result<bool> {
    let ds = d_star_beta_one(f, cap)?;
    Ok(parry_admits(&ds, w))
}

pub(crate) fn lex_compare(u: &EpWord, v: &EpWord) -> Ordering {
    let n = u.preperiod().len().max(v.preperiod().len()) + u.period().len().lcm(&v.period().len());
    for i in 0..n {
        match u.digit(i).cmp(&v.digit(i)) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

pub(crate) fn parry_admits(ds: &EpWord, w: &EpWord) -> bool {
    let n = w.preperiod().len() + w.period().len();
    (0..n).all(|k| w.digit(k) >= 0 && lex_compare(&w.shift(k), ds) == Ordering::Less)
}

// ---- integers ----

/// The (-b)-representation of `n` without leading zeros (`0` for zero).
pub fn int_negabase(n: &BigInt, b: u32) -> FiniteWord {
    assert!(b >= 2, "base must be at least 2");
    if n.is_zero() {
        return FiniteWord(vec![0]);
    }
    let base = BigInt::from(b);
    let neg = -&base;
    let mut n = n.clone();
    let mut out = Vec::new();
    while !n.is_zero() {
        let r = n.mod_floor(&base);
        out.push(r.to_i32().unwrap());
        n = (n - r) / &neg;
    }
    out.reverse();
    FiniteWord(out)
}
