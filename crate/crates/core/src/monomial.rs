//! Signed monomials over the generator pairs `i₁, j₁, i₂, j₂, …`.
//!
//! Every generator squares to `-1`. The two members of a pair `(iₙ, jₙ)`
//! anticommute; generators from different pairs commute. A monomial is a sign
//! together with a set of distinct generators written in the canonical order
//! `i₁ < j₁ < i₂ < j₂ < …`, so generator `iₙ` sits at bit `2(n-1)` of the mask
//! and `jₙ` at bit `2(n-1) + 1`.

use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Number of generator positions a [`Mask`] can hold.
pub const MAX_GENERATORS: u32 = 32;

/// Largest pair index expressible in a mask.
pub const MAX_PAIR_INDEX: u32 = MAX_GENERATORS / 2;

/// Bits holding the `iₙ` generators.
const I_BITS: u32 = 0x5555_5555;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    I,
    J,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    index: u32,
    kind: Kind,
}

impl Generator {
    pub fn new(index: u32, kind: Kind) -> Result<Self> {
        if index == 0 || index > MAX_PAIR_INDEX {
            return Err(Error::Precondition(format!(
                "generator index {index} outside 1..={MAX_PAIR_INDEX}"
            )));
        }
        Ok(Generator { index, kind })
    }

    pub fn i(index: u32) -> Self {
        Self::new(index, Kind::I).expect("generator index in range")
    }

    pub fn j(index: u32) -> Self {
        Self::new(index, Kind::J).expect("generator index in range")
    }

    /// The generator at canonical position `pos` (0-based).
    pub fn from_position(pos: u32) -> Self {
        assert!(
            pos < MAX_GENERATORS,
            "generator position {pos} out of range"
        );
        let kind = if pos.is_multiple_of(2) {
            Kind::I
        } else {
            Kind::J
        };
        Generator {
            index: pos / 2 + 1,
            kind,
        }
    }

    pub fn index(self) -> u32 {
        self.index
    }

    pub fn kind(self) -> Kind {
        self.kind
    }

    pub fn position(self) -> u32 {
        2 * (self.index - 1) + u32::from(self.kind == Kind::J)
    }

    pub fn partner(self) -> Self {
        let kind = match self.kind {
            Kind::I => Kind::J,
            Kind::J => Kind::I,
        };
        Generator {
            index: self.index,
            kind,
        }
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Generator {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.position().cmp(&other.position())
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            Kind::I => 'i',
            Kind::J => 'j',
        };
        write!(f, "{c}{}", self.index)
    }
}

/// A set of distinct generators, one bit per canonical position.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mask(u32);

impl Mask {
    pub const EMPTY: Mask = Mask(0);

    pub const fn from_bits(bits: u32) -> Self {
        Mask(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub fn from_generators<I: IntoIterator<Item = Generator>>(gens: I) -> Self {
        Mask(gens.into_iter().fold(0, |acc, g| acc ^ (1 << g.position())))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, g: Generator) -> bool {
        self.0 >> g.position() & 1 == 1
    }

    /// Number of generator positions needed to hold this mask.
    pub fn span(self) -> u32 {
        MAX_GENERATORS - self.0.leading_zeros()
    }

    pub fn symmetric_difference(self, other: Mask) -> Mask {
        Mask(self.0 ^ other.0)
    }

    pub fn generators(self) -> impl Iterator<Item = Generator> {
        let bits = self.0;
        (0..MAX_GENERATORS)
            .filter(move |p| bits >> p & 1 == 1)
            .map(Generator::from_position)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self.is_minus() != rhs.is_minus())
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i8(self.to_i8())
    }
}

/// A signed product of distinct generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    mask: Mask,
    sign: Sign,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        mask: Mask::EMPTY,
        sign: Sign::Plus,
    };
    pub const MINUS_ONE: Monomial = Monomial {
        mask: Mask::EMPTY,
        sign: Sign::Minus,
    };

    pub fn new(sign: Sign, mask: Mask) -> Self {
        Monomial { mask, sign }
    }

    pub fn positive(mask: Mask) -> Self {
        Monomial::new(Sign::Plus, mask)
    }

    pub fn generator(g: Generator) -> Self {
        Monomial::positive(Mask::from_generators([g]))
    }

    /// Product of the given generators taken in the order supplied.
    pub fn product_of<I: IntoIterator<Item = Generator>>(gens: I) -> Self {
        gens.into_iter()
            .fold(Monomial::ONE, |acc, g| acc * Monomial::generator(g))
    }

    pub fn sign(self) -> Sign {
        self.sign
    }

    pub fn mask(self) -> Mask {
        self.mask
    }

    pub fn is_scalar(self) -> bool {
        self.mask.is_empty()
    }

    /// Same mask with a `+` sign.
    pub fn unsigned(self) -> Self {
        Monomial::positive(self.mask)
    }

    pub fn multiply(self, other: Monomial) -> Monomial {
        let (a, b) = (self.mask.bits(), other.mask.bits());
        // jₙ in a must pass iₙ in b; each shared generator squares to -1.
        let crossings = (b & (a >> 1) & I_BITS).count_ones();
        let shared = (a & b).count_ones();
        let sign = self.sign * other.sign * Sign::from_parity((crossings + shared) % 2 == 1);
        Monomial::new(sign, self.mask.symmetric_difference(other.mask))
    }

    /// Sign-independent: the answer depends only on the masks.
    pub fn anticommutes(self, other: Monomial) -> bool {
        anticommuting_masks(self.mask, other.mask)
    }

    pub fn square(self) -> Monomial {
        self.multiply(self)
    }

    /// The `Sign` of `self * self`.
    pub fn square_sign(self) -> Sign {
        self.square().sign
    }

    pub fn inverse(self) -> Monomial {
        // a * a = ±1, so a⁻¹ = (±1) * a.
        Monomial::new(self.sign * self.square_sign(), self.mask)
    }
}

pub fn anticommuting_masks(a: Mask, b: Mask) -> bool {
    let (a, b) = (a.bits(), b.bits());
    let count = (a & I_BITS & (b >> 1)).count_ones() + ((a >> 1) & I_BITS & b).count_ones();
    count % 2 == 1
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        self.multiply(rhs)
    }
}

impl Neg for Monomial {
    type Output = Monomial;

    fn neg(self) -> Monomial {
        Monomial::new(-self.sign, self.mask)
    }
}

impl fmt::Display for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for g in self.generators() {
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign.is_minus() {
            f.write_str("-")?;
        }
        write!(f, "{}", self.mask)
    }
}

impl FromStr for Mask {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mask> {
        if s == "1" {
            return Ok(Mask::EMPTY);
        }
        if s.is_empty() {
            return Err(Error::parse(s, "empty monomial name"));
        }
        let bytes = s.as_bytes();
        let mut bits = 0u32;
        let mut last: Option<u32> = None;
        let mut pos = 0;
        while pos < bytes.len() {
            let kind = match bytes[pos] {
                b'i' => Kind::I,
                b'j' => Kind::J,
                other => {
                    return Err(Error::parse(
                        s,
                        format!("unexpected character {:?}", other as char),
                    ))
                }
            };
            pos += 1;
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let digits = &s[start..pos];
            if digits.is_empty() || digits.starts_with('0') {
                return Err(Error::parse(s, "generator needs a positive decimal index"));
            }
            let index: u32 = digits
                .parse()
                .map_err(|_| Error::parse(s, "generator index too large"))?;
            let g = Generator::new(index, kind).map_err(|e| Error::parse(s, e.to_string()))?;
            let p = g.position();
            if last.is_some_and(|l| p <= l) {
                return Err(Error::parse(
                    s,
                    format!("generator {g} is out of canonical order or repeated"),
                ));
            }
            last = Some(p);
            bits |= 1 << p;
        }
        Ok(Mask(bits))
    }
}

impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Monomial> {
        let (sign, body) = match s.strip_prefix('-') {
            Some(rest) => (Sign::Minus, rest),
            None => (Sign::Plus, s),
        };
        let mask = body.parse::<Mask>().map_err(|e| match e {
            Error::Parse { reason, .. } => Error::parse(s, reason),
            other => other,
        })?;
        Ok(Monomial::new(sign, mask))
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
