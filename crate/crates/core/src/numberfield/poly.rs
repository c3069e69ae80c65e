//! Integer and rational univariate polynomials, constant term first.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub(crate) fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// A monic integer polynomial of degree at least one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Builds a polynomial from coefficients listed constant term first.
    /// Trailing zero coefficients are dropped before the monic check.
    pub fn new(mut coeffs: Vec<BigInt>) -> Result<Self> {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.len() < 2 {
            return Err(Error::NotMonic("degree must be at least 1".into()));
        }
        if !coeffs.last().unwrap().is_one() {
            return Err(Error::NotMonic("leading coefficient must be 1".into()));
        }
        Ok(IntPolynomial { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn to_rational(&self) -> Vec<Rat> {
        self.coeffs.iter().map(|c| Rat::from_integer(c.clone())).collect()
    }

    /// Reversed coefficients equal plus or minus the coefficients.
    pub fn is_self_reciprocal(&self) -> bool {
        let rev: Vec<BigInt> = self.coeffs.iter().rev().cloned().collect();
        rev == self.coeffs || rev.iter().zip(&self.coeffs).all(|(a, b)| *a == -b)
    }

    /// `1 + max |a_i|`, a strict bound on the modulus of every root.
    pub fn cauchy_bound(&self) -> BigInt {
        let m = self.coeffs[..self.degree()]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero);
        m + 1
    }
}

impl fmt::Display for IntPolynomial {
    /// Comma-separated coefficients, constant term first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl std::str::FromStr for IntPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(coeffs)
    }
}

// ---- rational polynomial helpers (Vec<Rat>, constant first, trimmed) ----

pub(crate) fn trim(p: &mut Vec<Rat>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn eval(p: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

pub(crate) fn derivative(p: &[Rat]) -> Vec<Rat> {
    let mut d: Vec<Rat> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * rat(i as i64))
        .collect();
    trim(&mut d);
    d
}

/// Euclidean division over Q; `b` must be nonzero.
pub(crate) fn divrem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut r: Vec<Rat> = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![Rat::zero(); r.len() - db];
    while r.len() >= b.len() {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap() / &lead;
        for (i, bc) in b.iter().enumerate() {
            r[k + i] -= &c * bc;
        }
        q[k] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

pub(crate) fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out: Vec<Rat> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rat::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rat::zero);
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    x
}

/// Sturm sequence of a squarefree polynomial.
#[derive(Clone, Debug)]
pub(crate) struct Sturm {
    seq: Vec<Vec<Rat>>,
}

impl Sturm {
    pub(crate) fn new(p: &[Rat]) -> Self {
        let mut seq = vec![p.to_vec(), derivative(p)];
        loop {
            let n = seq.len();
            if seq[n - 1].is_empty() {
                seq.pop();
                break;
            }
            let (_, r) = divrem(&seq[n - 2], &seq[n - 1]);
            if r.is_empty() {
                break;
            }
            seq.push(r.into_iter().map(|c| -c).collect());
        }
        Sturm { seq }
    }

    fn variations(&self, x: &Rat) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.seq {
            let v = eval(p, x);
            let s = if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            };
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct real roots in `(a, b]`.
    pub(crate) fn count(&self, a: &Rat, b: &Rat) -> usize {
        self.variations(a) - self.variations(b)
    }
}

/// A root enclosed by `lo <= root <= hi`; exact when `lo == hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    /// Halves the interval around the unique root of `p` it contains,
    /// using the sign of `p` at the midpoint and the upper end.
    pub(crate) fn bisect(&mut self, p: &[Rat]) {
        if self.is_exact() {
            return;
        }
        let mid = (&self.lo + &self.hi) / rat(2);
        let vm = eval(p, &mid);
        if vm.is_zero() {
            self.lo = mid.clone();
            self.hi = mid;
            return;
        }
        let vh = eval(p, &self.hi);
        if vh.is_zero() {
            self.lo = self.hi.clone();
            return;
        }
        if vh.is_positive() == vm.is_positive() {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }
}

/// Isolates all real roots of a squarefree polynomial into disjoint
/// intervals `(lo, hi]` (or exact points), sorted increasingly.
pub(crate) fn isolate_real_roots(p: &[Rat], bound: &Rat) -> Vec<RootInterval> {
    let sturm = Sturm::new(p);
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound.clone())];
    while let Some((a, b)) = stack.pop() {
        let n = sturm.count(&a, &b);
        if n == 0 {
            continue;
        }
        if eval(p, &b).is_zero() {
            out.push(RootInterval { lo: b.clone(), hi: b.clone() });
            if n > 1 {
                // remaining roots are strictly inside (a, b)
                let mid = (&a + &b) / rat(2);
                stack.push((a.clone(), mid.clone()));
                stack.push((mid, b.clone()));
                // the root at b is counted by the right half; drop it later
            }
            continue;
        }
        if n == 1 {
            out.push(RootInterval { lo: a, hi: b });
            continue;
        }
        let mid = (&a + &b) / rat(2);
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo).then(x.hi.cmp(&y.hi)));
    out.dedup();
    out
}

/// Counts the roots of `p` strictly inside the circle `|z| = r` via the
/// Schur–Cohn recursion. Returns `None` in the singular case (some
/// intermediate leading determinant vanishes), which includes every
/// polynomial with a root on the circle.
pub(crate) fn count_in_disk(p: &[Rat], r: &Rat) -> Option<usize> {
    // g(z) = p(r z)
    let mut f: Vec<Rat> = Vec::with_capacity(p.len());
    let mut pow = Rat::one();
    for c in p {
        f.push(c * &pow);
        pow *= r;
    }
    trim(&mut f);
    let n = f.len() - 1;
    let mut product_sign = 1i8;
    let mut negatives = 0;
    for _ in 0..n {
        let m = f.len() - 1;
        let a0 = f[0].clone();
        let am = f[m].clone();
        // f_{j+1} = a0 f - am f*, degree drops by one
        let next: Vec<Rat> = (0..m).map(|k| &a0 * &f[k] - &am * &f[m - k]).collect();
        let delta = next[0].clone();
        if delta.is_zero() {
            return None;
        }
        if delta.is_negative() {
            product_sign = -product_sign;
        }
        if product_sign < 0 {
            negatives += 1;
        }
        // keep the formal degree even if the leading coefficient vanished
        f = next;
    }
    Some(negatives)
}

pub(crate) fn floor_rat(x: &Rat) -> BigInt {
    x.numer().div_floor(x.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp(c: &[i64]) -> Vec<Rat> {
        c.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn parse_and_display() {
        let p: IntPolynomial = "-1,-1,1".parse().unwrap();
        assert_eq!(p.degree(), 2);
        assert_eq!(p.to_string(), "-1,-1,1");
        assert!("1,2".parse::<IntPolynomial>().is_err());
        assert!("1,x,1".parse::<IntPolynomial>().is_err());
    }

    #[test]
    fn division_identity() {
        let a = rp(&[1, 2, 3, 4]);
        let b = rp(&[-1, 1]);
        let (q, r) = divrem(&a, &b);
        let back = sub(&a, &r);
        assert_eq!(mul(&q, &b), back);
        assert_eq!(r, rp(&[10]));
    }

    #[test]
    fn sturm_counts_roots() {
        // (x-1)(x-2)(x+3) = x^3 - 7x + 6
        let p = rp(&[6, -7, 0, 1]);
        let s = Sturm::new(&p);
        assert_eq!(s.count(&rat(-10), &rat(10)), 3);
        assert_eq!(s.count(&rat(0), &rat(10)), 2);
        let roots = isolate_real_roots(&p, &rat(8));
        assert_eq!(roots.len(), 3);
    }

    #[test]
    fn schur_cohn_counts() {
        // roots 1/2, -3
        let p = rp(&[-3, 5, 2]);
        assert_eq!(count_in_disk(&p, &rat(1)), Some(1));
        assert_eq!(count_in_disk(&p, &rat(4)), Some(2));
        assert_eq!(count_in_disk(&p, &Rat::new(1.into(), 4.into())), Some(0));
        // x^2 + 1 has both roots on the unit circle
        assert_eq!(count_in_disk(&rp(&[1, 0, 1]), &rat(1)), None);
        // x^2 - 3x + 1: roots symmetric about the unit circle
        assert_eq!(count_in_disk(&rp(&[1, -3, 1]), &rat(1)), None);
        assert_eq!(count_in_disk(&rp(&[-2, 0, 1]), &rat(1)), Some(0));
        assert_eq!(count_in_disk(&rp(&[-2, 0, 1]), &rat(2)), Some(2));
        assert_eq!(count_in_disk(&rp(&[1, -3, 1]), &rat(2)), Some(1));
        // complex pair of modulus sqrt(2): x^2 - 2x + 2
        assert_eq!(count_in_disk(&rp(&[2, -2, 1]), &rat(1)), Some(0));
        assert_eq!(count_in_disk(&rp(&[2, -2, 1]), &rat(2)), Some(2));
    }
}
