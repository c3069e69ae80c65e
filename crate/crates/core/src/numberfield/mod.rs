//! Exact arithmetic in Q(beta) for an algebraic integer beta > 1 given by
//! its monic minimal polynomial.
//!
//! Elements are stored on the power basis `1, beta, ..., beta^(d-1)` with
//! rational coordinates. Signs and floors of the real embedding are decided
//! by evaluating on a dyadic isolating interval of beta and bisecting it
//! until the enclosure excludes zero; a nonzero element of degree below `d`
//! cannot vanish at beta, so the refinement always terminates.
//!
//! Conjugate moduli are located with Schur–Cohn root counts in disks of
//! rational radius, which only needs rational arithmetic.

mod element;
mod poly;

pub use element::FieldElement;
pub use poly::{IntPolynomial, Rat, RootInterval};

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use poly::{count_in_disk, floor_rat, isolate_real_roots, rat};

/// Bits of precision the cached beta enclosure is refined to at construction.
const BASE_PRECISION_BITS: u32 = 96;
/// Hard cap on refinement rounds in sign decisions.
const MAX_REFINEMENT_ROUNDS: usize = 4096;

/// The number field Q(beta) together with an isolating interval for beta.
#[derive(Clone, Debug)]
pub struct NumberField {
    poly: IntPolynomial,
    rpoly: Vec<Rat>,
    beta: RootInterval,
    /// Enclosures `[lo^i, hi^i]` of `beta^i`, `0 <= i < d`.
    powers: Vec<(Rat, Rat)>,
    /// Annuli `lo < |beta_j| <= hi`, one per conjugate, sorted by modulus.
    conjugate_moduli: Vec<RootInterval>,
    conjugates_approx: Vec<Complex64>,
    floor_beta: BigInt,
}

impl NumberField {
    /// Validates `p` and isolates its unique real root above 1.
    pub fn new(p: IntPolynomial) -> Result<Self> {
        let d = p.degree();
        let rpoly = p.to_rational();
        let deriv = poly::derivative(&rpoly);
        if poly::gcd(&rpoly, &deriv).len() > 1 {
            return Err(Error::NotSquarefree);
        }
        let bound = Rat::from_integer(p.cauchy_bound());
        let mut roots = if d == 1 {
            let r = -rpoly[0].clone();
            vec![RootInterval { lo: r.clone(), hi: r }]
        } else {
            isolate_real_roots(&rpoly, &bound)
        };
        if d > 1 {
            for r in roots.iter_mut() {
                while r.width() >= Rat::new(1.into(), 4.into()) {
                    r.bisect(&rpoly);
                }
                let lo = floor_rat(&r.lo);
                let mut k = lo;
                while Rat::from_integer(k.clone()) <= r.hi {
                    let kr = Rat::from_integer(k.clone());
                    if kr >= r.lo && poly::eval(&rpoly, &kr).is_zero() {
                        return Err(Error::ReducibleDetected(k.to_string()));
                    }
                    k += 1;
                }
            }
        }
        let one = Rat::one();
        let above: Vec<RootInterval> = roots
            .into_iter()
            .filter_map(|mut r| {
                while r.lo < one && r.hi > one {
                    r.bisect(&rpoly);
                }
                // intervals are (lo, hi] unless exact, and 1 is never a root here
                (r.lo > one || (r.lo == one && !r.is_exact())).then_some(r)
            })
            .collect();
        let mut beta = match above.len() {
            0 => return Err(Error::NoRootAboveOne),
            1 => above.into_iter().next().unwrap(),
            n => return Err(Error::SeveralRootsAboveOne(n)),
        };
        let target = Rat::new(BigInt::one(), BigInt::one() << BASE_PRECISION_BITS);
        while !beta.is_exact() && beta.width() > target {
            beta.bisect(&rpoly);
        }
        let powers = powers_of(&beta, d);
        let floor_beta = floor_rat(&beta.lo);
        let mut field = NumberField {
            poly: p,
            rpoly,
            beta,
            powers,
            conjugate_moduli: Vec::new(),
            conjugates_approx: Vec::new(),
            floor_beta,
        };
        if !field.beta.is_exact() && floor_rat(&field.beta.hi) != field.floor_beta {
            // beta is irrational so this cannot persist
            while floor_rat(&field.beta.hi) != floor_rat(&field.beta.lo) {
                field.beta.bisect(&field.rpoly);
            }
            field.floor_beta = floor_rat(&field.beta.lo);
            field.powers = powers_of(&field.beta, d);
        }
        field.conjugate_moduli = field.isolate_conjugate_moduli(&Rat::new(1.into(), (1u64 << 24).into()));
        field.conjugates_approx = field.approximate_conjugates();
        Ok(field)
    }

    /// Parses a comma-separated coefficient list (constant term first).
    pub fn from_coeffs(s: &str) -> Result<Self> {
        Self::new(s.parse()?)
    }

    /// The field Q with beta = b for an integer base b >= 2.
    pub fn integer(b: i64) -> Result<Self> {
        Self::new(IntPolynomial::from_i64(&[-b, 1])?)
    }

    pub fn golden() -> Self {
        Self::new(IntPolynomial::from_i64(&[-1, -1, 1]).unwrap()).unwrap()
    }

    pub fn golden_squared() -> Self {
        Self::new(IntPolynomial::from_i64(&[1, -3, 1]).unwrap()).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.poly.degree()
    }

    pub fn min_poly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn beta_interval(&self) -> &RootInterval {
        &self.beta
    }

    /// Isolating annuli for the conjugate moduli.
    pub fn conjugate_moduli(&self) -> &[RootInterval] {
        &self.conjugate_moduli
    }

    /// Floating-point approximations of the conjugates `beta_2, ..., beta_d`.
    pub fn conjugates_approx(&self) -> &[Complex64] {
        &self.conjugates_approx
    }

    pub fn beta_f64(&self) -> f64 {
        let mid = (&self.beta.lo + &self.beta.hi) / rat(2);
        mid.to_f64().unwrap_or(f64::NAN)
    }

    /// The integer part of beta.
    pub fn floor_beta(&self) -> &BigInt {
        &self.floor_beta
    }

    pub fn is_integer_base(&self) -> bool {
        self.beta.is_exact()
    }

    /// Largest digit of the greedy positive-base alphabet, `ceil(beta) - 1`.
    pub fn max_beta_digit(&self) -> i64 {
        let f = self.floor_beta.to_i64().expect("base too large");
        if self.is_integer_base() {
            f - 1
        } else {
            f
        }
    }

    /// Largest digit of the negative-base alphabet, `floor(beta)`.
    pub fn max_neg_digit(&self) -> i64 {
        self.floor_beta.to_i64().expect("base too large")
    }

    // ---- element constructors ----

    pub fn zero(&self) -> FieldElement {
        FieldElement::zero(self.degree())
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        self.from_rational(rat(n))
    }

    pub fn from_rational(&self, q: Rat) -> FieldElement {
        let mut c = vec![Rat::zero(); self.degree()];
        c[0] = q;
        FieldElement::from_coords(c)
    }

    pub fn from_ratio(&self, n: i64, d: i64) -> FieldElement {
        self.from_rational(Rat::new(n.into(), d.into()))
    }

    /// beta itself.
    pub fn beta(&self) -> FieldElement {
        if self.degree() == 1 {
            return self.from_rational(self.beta.lo.clone());
        }
        let mut c = vec![Rat::zero(); self.degree()];
        c[1] = Rat::one();
        FieldElement::from_coords(c)
    }

    /// Element with the given coordinates; the length must equal the degree.
    pub fn element(&self, coords: Vec<Rat>) -> FieldElement {
        assert_eq!(coords.len(), self.degree(), "coordinate count must equal the degree");
        FieldElement::from_coords(coords)
    }

    // ---- arithmetic ----

    pub fn add(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        x + y
    }

    pub fn sub(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        x - y
    }

    pub fn mul(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let d = self.degree();
        let prod = poly::mul(x.coords(), y.coords());
        self.reduce(prod, d)
    }

    fn reduce(&self, mut p: Vec<Rat>, d: usize) -> FieldElement {
        let c = self.poly.coeffs();
        while p.len() > d {
            let top = p.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = p.len() - d;
            for i in 0..d {
                if !c[i].is_zero() {
                    p[shift + i] -= &top * Rat::from_integer(c[i].clone());
                }
            }
        }
        p.resize(d, Rat::zero());
        FieldElement::from_coords(p)
    }

    pub fn mul_beta(&self, x: &FieldElement) -> FieldElement {
        let mut p = Vec::with_capacity(self.degree() + 1);
        if self.degree() == 1 {
            return x.scale(&self.beta.lo);
        }
        p.push(Rat::zero());
        p.extend(x.coords().iter().cloned());
        self.reduce(p, self.degree())
    }

    /// Multiplicative inverse by the extended Euclidean algorithm modulo
    /// the minimal polynomial.
    pub fn inv(&self, x: &FieldElement) -> Result<FieldElement> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut a = x.coords().to_vec();
        poly::trim(&mut a);
        let m = self.rpoly.clone();
        // invariant: s * a0 ≡ r (mod m)
        let (mut r0, mut r1) = (m, a);
        let (mut s0, mut s1): (Vec<Rat>, Vec<Rat>) = (Vec::new(), vec![Rat::one()]);
        while r1.len() > 1 {
            let (q, r) = poly::divrem(&r0, &r1);
            let s = poly::sub(&s0, &poly::mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        if r1.is_empty() {
            return Err(Error::NotInvertible);
        }
        let c = r1[0].clone();
        let s: Vec<Rat> = s1.into_iter().map(|v| v / &c).collect();
        Ok(self.reduce(s, self.degree()))
    }

    pub fn div(&self, x: &FieldElement, y: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(x, &self.inv(y)?))
    }

    pub fn pow(&self, x: &FieldElement, n: i64) -> Result<FieldElement> {
        let base = if n < 0 { self.inv(x)? } else { x.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = self.one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        Ok(acc)
    }

    // ---- order ----

    fn enclose(&self, x: &FieldElement, powers: &[(Rat, Rat)]) -> (Rat, Rat) {
        let mut lo = Rat::zero();
        let mut hi = Rat::zero();
        for (c, (pl, ph)) in x.coords().iter().zip(powers) {
            if c.is_zero() {
                continue;
            }
            if c.is_positive() {
                lo += c * pl;
                hi += c * ph;
            } else {
                lo += c * ph;
                hi += c * pl;
            }
        }
        (lo, hi)
    }

    /// An interval known to contain the real value of `x`.
    pub fn enclosure(&self, x: &FieldElement) -> (Rat, Rat) {
        self.enclose(x, &self.powers)
    }

    /// Exact sign of the real embedding of `x`.
    pub fn sign(&self, x: &FieldElement) -> i32 {
        self.try_sign(x).expect("sign refinement exceeded its cap")
    }

    pub fn try_sign(&self, x: &FieldElement) -> Result<i32> {
        if x.is_rational() {
            return Ok(sign_of(&x.coords()[0]));
        }
        let (lo, hi) = self.enclosure(x);
        if lo.is_positive() {
            return Ok(1);
        }
        if hi.is_negative() {
            return Ok(-1);
        }
        let mut iv = self.beta.clone();
        let mut steps = 8usize;
        for _ in 0..MAX_REFINEMENT_ROUNDS {
            for _ in 0..steps {
                iv.bisect(&self.rpoly);
            }
            steps = (steps * 2).min(4096);
            let pw = powers_of(&iv, self.degree());
            let (lo, hi) = self.enclose(x, &pw);
            if lo.is_positive() {
                return Ok(1);
            }
            if hi.is_negative() {
                return Ok(-1);
            }
        }
        Err(Error::RefinementLimit)
    }

    pub fn cmp(&self, x: &FieldElement, y: &FieldElement) -> Ordering {
        match self.sign(&(x - y)) {
            s if s < 0 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }

    pub fn lt(&self, x: &FieldElement, y: &FieldElement) -> bool {
        self.cmp(x, y) == Ordering::Less
    }

    pub fn le(&self, x: &FieldElement, y: &FieldElement) -> bool {
        self.cmp(x, y) != Ordering::Greater
    }

    /// The unique integer `n` with `n <= x < n + 1`.
    pub fn floor(&self, x: &FieldElement) -> BigInt {
        if x.is_rational() {
            return floor_rat(&x.coords()[0]);
        }
        let (lo, hi) = self.enclosure(x);
        let mut n = floor_rat(&lo);
        let top = floor_rat(&hi);
        loop {
            let next = self.from_rational(Rat::from_integer(&n + 1));
            if n >= top || self.sign(&(x - &next)) < 0 {
                // x >= lo >= n holds by construction
                return n;
            }
            n += 1;
        }
    }

    pub fn floor_i64(&self, x: &FieldElement) -> i64 {
        self.floor(x).to_i64().expect("floor out of i64 range")
    }

    /// Approximate real value.
    pub fn to_f64(&self, x: &FieldElement) -> f64 {
        let (lo, hi) = self.enclosure(x);
        ((lo + hi) / rat(2)).to_f64().unwrap_or(f64::NAN)
    }

    /// Approximate values of `x` at the conjugates `beta_2..beta_d`.
    pub fn conjugate_values(&self, x: &FieldElement) -> Vec<Complex64> {
        let coeffs: Vec<f64> = x.coords().iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect();
        self.conjugates_approx
            .iter()
            .map(|z| {
                let mut acc = Complex64::new(0.0, 0.0);
                for c in coeffs.iter().rev() {
                    acc = acc * z + c;
                }
                acc
            })
            .collect()
    }

    // ---- conjugates ----

    /// Roots (other than beta) strictly inside `|z| < r`, or `None` if the
    /// radius is degenerate for the Schur–Cohn test.
    fn conjugates_inside(&self, r: &Rat) -> Option<usize> {
        let total = count_in_disk(&self.rpoly, r)?;
        let mut b = self.beta.clone();
        let beta_inside = loop {
            if b.is_exact() {
                break b.lo < *r;
            }
            if b.hi < *r {
                break true;
            }
            if b.lo >= *r {
                break false;
            }
            b.bisect(&self.rpoly);
        };
        Some(total - usize::from(beta_inside))
    }

    fn count_perturbed(&self, r: &Rat, spread: &Rat) -> (Rat, usize) {
        if let Some(n) = self.conjugates_inside(r) {
            return (r.clone(), n);
        }
        let mut k = 1i64;
        loop {
            let delta = spread / Rat::from_integer(BigInt::from(7 * k + 3));
            for cand in [r + &delta, r - &delta] {
                if cand.is_positive() {
                    if let Some(n) = self.conjugates_inside(&cand) {
                        return (cand, n);
                    }
                }
            }
            k += 1;
        }
    }

    fn isolate_conjugate_moduli(&self, eps: &Rat) -> Vec<RootInterval> {
        let d = self.degree();
        if d == 1 {
            return Vec::new();
        }
        let top = Rat::from_integer(self.poly.cauchy_bound());
        let mut out = Vec::new();
        let mut stack = vec![(Rat::zero(), 0usize, top, d - 1)];
        while let Some((lo, nlo, hi, nhi)) = stack.pop() {
            if nhi == nlo {
                continue;
            }
            if &hi - &lo <= *eps {
                for _ in 0..(nhi - nlo) {
                    out.push(RootInterval { lo: lo.clone(), hi: hi.clone() });
                }
                continue;
            }
            let width = &hi - &lo;
            let mid = (&lo + &hi) / rat(2);
            let (m, nm) = self.count_perturbed(&mid, &(width / rat(4)));
            stack.push((lo, nlo, m.clone(), nm));
            stack.push((m, nm, hi, nhi));
        }
        out.sort_by(|a, b| a.lo.cmp(&b.lo));
        out
    }

    /// Rational upper bounds on the conjugate moduli, each within `eps`
    /// of the true modulus.
    pub fn conjugate_abs_bounds(&self, eps: &Rat) -> Vec<Rat> {
        self.isolate_conjugate_moduli(eps).into_iter().map(|r| r.hi).collect()
    }

    /// Every conjugate has modulus strictly below one.
    pub fn is_pisot(&self) -> bool {
        let d = self.degree();
        if d == 1 {
            return true;
        }
        if let Some(n) = count_in_disk(&self.rpoly, &Rat::one()) {
            return n == d - 1;
        }
        if self.poly.is_self_reciprocal() {
            // roots come in pairs z, 1/z: only {beta, 1/beta} can be Pisot
            return d == 2;
        }
        let mut eps = Rat::new(1.into(), 1024.into());
        let tiny = Rat::new(BigInt::one(), BigInt::one() << 60u32);
        loop {
            let moduli = self.isolate_conjugate_moduli(&eps);
            if moduli.iter().all(|m| m.hi < Rat::one()) {
                return true;
            }
            if moduli.iter().any(|m| m.lo >= Rat::one()) {
                return false;
            }
            if eps < tiny {
                return false;
            }
            eps = &eps / rat(1 << 8);
        }
    }

    fn approximate_conjugates(&self) -> Vec<Complex64> {
        let d = self.degree();
        if d == 1 {
            return Vec::new();
        }
        let coeffs: Vec<f64> = self.poly.coeffs().iter().map(|c| c.to_f64().unwrap()).collect();
        let roots = aberth(&coeffs);
        let b = self.beta_f64();
        let mut best = 0;
        for (i, z) in roots.iter().enumerate() {
            if (z - b).norm() < (roots[best] - b).norm() {
                best = i;
            }
        }
        roots
            .into_iter()
            .enumerate()
            .filter(|(i, _)| *i != best)
            .map(|(_, z)| z)
            .collect()
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.poly == other.poly
    }
}

/// Builds the field for a polynomial; alias kept for callers that think in
/// terms of an operation rather than a constructor.
pub fn make_field(p: IntPolynomial) -> Result<NumberField> {
    NumberField::new(p)
}

fn sign_of(q: &Rat) -> i32 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

fn powers_of(iv: &RootInterval, d: usize) -> Vec<(Rat, Rat)> {
    let mut out = Vec::with_capacity(d);
    let mut lo = Rat::one();
    let mut hi = Rat::one();
    for _ in 0..d {
        out.push((lo.clone(), hi.clone()));
        lo *= &iv.lo;
        hi *= &iv.hi;
    }
    out
}

/// Simultaneous root approximation (Aberth–Ehrlich) for a monic real
/// polynomial given constant term first.
fn aberth(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let radius = 1.0 + coeffs[..n].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius * 0.5, 0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64))
        .collect();
    let eval = |x: Complex64| {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for c in coeffs.iter().rev() {
            dp = dp * x + p;
            p = p * x + c;
        }
        (p, dp)
    };
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (p, dp) = eval(z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..n).filter(|&j| j != i).map(|j| 1.0 / (z[i] - z[j])).sum();
            let w = ratio / (1.0 - ratio * s);
            z[i] -= w;
            moved = moved.max(w.norm());
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    #[test]
    fn golden_field() {
        let f = NumberField::golden();
        assert_eq!(f.degree(), 2);
        assert!(f.beta_interval().lo > q(16, 10) && f.beta_interval().hi < q(17, 10));
        assert_eq!(f.conjugate_moduli().len(), 1);
        let b = f.beta();
        assert_eq!(f.mul(&b, &b), &b + &f.one());
    }

    #[test]
    fn golden_squared_interval() {
        let f = NumberField::golden_squared();
        assert!(f.beta_interval().lo > q(26, 10) && f.beta_interval().hi < q(27, 10));
    }

    #[test]
    fn construction_errors() {
        let e = |c: &[i64]| NumberField::new(IntPolynomial::from_i64(c).unwrap()).unwrap_err();
        assert_eq!(e(&[1, 1]), Error::NoRootAboveOne); // x + 1
        assert_eq!(e(&[1, 0, 1]), Error::NoRootAboveOne); // x^2 + 1
        assert_eq!(e(&[1, -2, 1]), Error::NotSquarefree); // (x-1)^2
        assert!(matches!(e(&[-6, 1, 1]), Error::ReducibleDetected(_))); // (x+3)(x-2)
        assert!(matches!(e(&[6, -5, 1]), Error::ReducibleDetected(_))); // (x-2)(x-3)
        assert_eq!(e(&[5, -5, 1]), Error::SeveralRootsAboveOne(2));
    }

    #[test]
    fn integer_field() {
        let f = NumberField::integer(2).unwrap();
        assert!(f.is_integer_base());
        assert_eq!(f.max_neg_digit(), 2);
        assert_eq!(f.max_beta_digit(), 1);
        assert_eq!(f.beta(), f.from_int(2));
        assert!(f.conjugate_abs_bounds(&q(1, 100)).is_empty());
    }

    #[test]
    fn division_in_golden_field() {
        let f = NumberField::golden();
        let b = f.beta();
        let r = f.div(&f.one(), &(&b + &f.one())).unwrap();
        assert_eq!(r, &f.from_int(2) - &b);
        assert_eq!(f.inv(&f.zero()).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn signs_and_floors() {
        let f = NumberField::golden();
        let b = f.beta();
        assert_eq!(f.sign(&f.zero()), 0);
        assert_eq!(f.sign(&(&b - &f.one())), 1);
        assert_eq!(f.sign(&(&b.scale(&rat(2)) - &f.from_int(4))), -1);
        assert_eq!(f.floor(&b), BigInt::from(1));
        assert_eq!(f.floor(&f.from_ratio(7, 2)), BigInt::from(3));
        assert_eq!(f.floor(&f.from_ratio(-7, 2)), BigInt::from(-4));
        let g2 = NumberField::golden_squared();
        assert_eq!(g2.floor(&g2.beta()), BigInt::from(2));
        // sign of a tiny element: F_30 * beta - F_31 (about 1e-6)
        let x = &b.scale(&rat(832040)) - &f.from_int(1346269);
        assert_eq!(f.sign(&x), if 832040.0 * 1.618033988749895 > 1346269.0 { 1 } else { -1 });
    }

    #[test]
    fn conjugate_bounds() {
        let f = NumberField::golden();
        let b = f.conjugate_abs_bounds(&q(1, 1000));
        assert_eq!(b.len(), 1);
        let v = b[0].to_f64().unwrap();
        assert!((0.6180339..=0.6180339 + 0.001).contains(&v), "{v}");
        let g2 = NumberField::golden_squared();
        let v = g2.conjugate_abs_bounds(&q(1, 1000))[0].to_f64().unwrap();
        assert!((0.381966..=0.381966 + 0.001).contains(&v), "{v}");
    }

    #[test]
    fn pisot_decisions() {
        assert!(NumberField::golden().is_pisot());
        assert!(NumberField::golden_squared().is_pisot());
        assert!(NumberField::integer(3).unwrap().is_pisot());
        let sqrt2 = NumberField::from_coeffs("-2,0,1").unwrap();
        assert!(!sqrt2.is_pisot());
        assert!(sqrt2.conjugate_abs_bounds(&q(1, 1000)).iter().any(|b| *b >= Rat::one()));
        // tribonacci: Pisot with a complex conjugate pair
        let trib = NumberField::from_coeffs("-1,-1,-1,1").unwrap();
        assert!(trib.is_pisot());
        assert_eq!(trib.conjugate_abs_bounds(&q(1, 1000)).len(), 2);
        // smallest Pisot number, x^3 - x - 1
        assert!(NumberField::from_coeffs("-1,-1,0,1").unwrap().is_pisot());
        // Lehmer-like non-Pisot: x^3 - 2x - 2 has conjugate modulus > 1
        let f = NumberField::from_coeffs("-2,-2,0,1").unwrap();
        let mods: Vec<f64> = f.conjugates_approx().iter().map(|z| z.norm()).collect();
        assert_eq!(f.is_pisot(), mods.iter().all(|m| *m < 1.0));
    }
}
