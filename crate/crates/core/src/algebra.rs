//! Group algebra: finite sums of monomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigRational, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Mask, Monomial, Sign};

pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Parses `"3"`, `"-4"` or `"3/2"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let r: Rational = s
        .trim()
        .parse()
        .map_err(|_| Error::parse(s, "expected an integer or a fraction p/q"))?;
    Ok(r)
}

/// Sign of a basis monomial is folded into its coefficient; zero
/// coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    terms: BTreeMap<Mask, Rational>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(rational(1))
    }

    pub fn scalar(q: Rational) -> Self {
        Self::term(q, Monomial::ONE)
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(rational(1), m)
    }

    pub fn term(q: Rational, m: Monomial) -> Self {
        let mut x = Self::zero();
        x.add_term(m.mask(), if m.sign().is_minus() { -q } else { q });
        x
    }

    pub fn from_terms<I: IntoIterator<Item = (Rational, Monomial)>>(terms: I) -> Self {
        let mut x = Self::zero();
        for (q, m) in terms {
            let q = if m.sign().is_minus() { -q } else { q };
            x.add_term(m.mask(), q);
        }
        x
    }

    fn add_term(&mut self, mask: Mask, q: Rational) {
        if q.is_zero() {
            return;
        }
        let slot = self.terms.entry(mask).or_insert_with(Rational::zero);
        *slot += q;
        if slot.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coefficient(&self, mask: Mask) -> Rational {
        self.terms
            .get(&mask)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// `Some(q)` when the element is `q·1` (including `q = 0`).
    pub fn as_scalar(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Mask::EMPTY).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (Mask, &Rational)> {
        self.terms.iter().map(|(m, q)| (*m, q))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        AlgebraElement {
            terms: self.terms.iter().map(|(m, c)| (*m, c * q)).collect(),
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&a, p) in &self.terms {
            for (&b, q) in &other.terms {
                let m = Monomial::positive(a) * Monomial::positive(b);
                let c = p * q;
                out.add_term(m.mask(), if m.sign().is_minus() { -c } else { c });
            }
        }
        out
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&m, q) in &other.terms {
            out.add_term(m, q.clone());
        }
        out
    }

    pub fn square(&self) -> Self {
        self.mul_ref(self)
    }

    /// `x*y + y*x`.
    pub fn anticommutator(&self, other: &Self) -> Self {
        self.mul_ref(other).add_ref(&other.mul_ref(self))
    }
}

impl From<Monomial> for AlgebraElement {
    fn from(m: Monomial) -> Self {
        Self::monomial(m)
    }
}

impl Add for AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: Self) -> AlgebraElement {
        self.add_ref(rhs)
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(mut self) -> Self {
        for q in self.terms.values_mut() {
            *q = -q.clone();
        }
        self
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        -self.clone()
    }
}

impl Sub for AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: Self) -> Self {
        self.add_ref(&-rhs)
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: Self) -> AlgebraElement {
        self.add_ref(&-rhs)
    }
}

impl Mul for AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: Self) -> AlgebraElement {
        self.mul_ref(rhs)
    }
}

/// `5*i1j1 - 4*i2j2i3 + 3*j1i3`; `0` for the zero element.
impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (mask, q)) in self.terms.iter().enumerate() {
            let sign = if q.is_negative() {
                Sign::Minus
            } else {
                Sign::Plus
            };
            match (n, sign) {
                (0, Sign::Minus) => f.write_str("-")?,
                (0, Sign::Plus) => {}
                (_, s) => write!(f, " {} ", s.symbol())?,
            }
            write!(f, "{}*{}", q.abs(), mask)?;
        }
        Ok(())
    }
}
