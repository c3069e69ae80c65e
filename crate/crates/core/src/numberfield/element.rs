use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use super::poly::Rat;

/// An element of Q(beta) as rational coordinates on `1, beta, ..., beta^(d-1)`.
///
/// Addition and subtraction are coordinate-wise and need no field context;
/// products, inverses and order go through [`super::NumberField`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    coords: Vec<Rat>,
}

impl FieldElement {
    pub(crate) fn from_coords(coords: Vec<Rat>) -> Self {
        FieldElement { coords }
    }

    pub fn zero(d: usize) -> Self {
        FieldElement { coords: vec![Rat::zero(); d] }
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// True when only the constant coordinate may be nonzero.
    pub fn is_rational(&self) -> bool {
        self.coords.iter().skip(1).all(Zero::is_zero)
    }

    pub fn scale(&self, k: &Rat) -> Self {
        FieldElement { coords: self.coords.iter().map(|c| c * k).collect() }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&Rat::from_integer(k.into()))
    }

    /// True when every coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        debug_assert_eq!(self.coords.len(), rhs.coords.len());
        FieldElement { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        debug_assert_eq!(self.coords.len(), rhs.coords.len());
        FieldElement { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect() }
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        &self + &rhs
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        &self - &rhs
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { coords: self.coords.iter().map(|c| -c).collect() }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})b")?,
                _ => write!(f, "({c})b^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
