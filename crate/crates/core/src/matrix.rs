//! Exact complex matrix images of the monomial groups.
//!
//! Pair `n` acts on tensor factor `n` with `iₙ ↦ i·σ₁` and `jₙ ↦ i·σ₂`, both
//! squaring to `-1` and anticommuting; an unpaired trailing `i` maps to
//! `i·1`. The images are computed independently of the bitmask sign rule, so
//! comparing the two checks the monomial arithmetic.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::complex::Complex;
use num::{One, ToPrimitive, Zero};
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::algebra::{AlgebraElement, Rational};
use crate::error::{Error, Result};
use crate::group;
use crate::monomial::{Generator, Kind, Monomial};
use crate::pentad::Pentad;

pub const MAX_REPRESENTED_LEVEL: u32 = 6;

pub type ExactComplex = Complex<Rational>;

fn c_int(re: i64, im: i64) -> ExactComplex {
    Complex::new(
        Rational::from_integer(re.into()),
        Rational::from_integer(im.into()),
    )
}

/// Dense square matrix over exact complex rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<ExactComplex>,
}

impl ExactMatrix {
    pub fn zero(dim: usize) -> Self {
        ExactMatrix {
            dim,
            entries: vec![ExactComplex::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for k in 0..dim {
            m.entries[k * dim + k] = ExactComplex::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<ExactComplex>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        ExactMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &ExactComplex {
        &self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[ExactComplex] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &ExactComplex) -> Self {
        ExactMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn kron(&self, other: &Self) -> Self {
        let dim = self.dim * other.dim;
        let mut out = Self::zero(dim);
        for (ar, ac) in (0..self.dim).flat_map(|r| (0..self.dim).map(move |c| (r, c))) {
            let a = self.get(ar, ac);
            if a.is_zero() {
                continue;
            }
            for (br, bc) in (0..other.dim).flat_map(|r| (0..other.dim).map(move |c| (r, c))) {
                out.entries[(ar * other.dim + br) * dim + ac * other.dim + bc] =
                    a * other.get(br, bc);
            }
        }
        out
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = Self::zero(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * n + c] = &out.entries[r * n + c] + a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        ExactMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        self.mul_ref(other).add_ref(&other.mul_ref(self))
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: Self) -> ExactMatrix {
        self.mul_ref(rhs)
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: Self) -> ExactMatrix {
        self.add_ref(rhs)
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: Self) -> ExactMatrix {
        self.add_ref(&-rhs)
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        ExactMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Integers that fit an `i64` are written as numbers, larger ones as strings.
fn serialize_big<S: SerializeSeq>(
    seq: &mut S,
    n: &num::BigInt,
) -> std::result::Result<(), S::Error> {
    match n.to_i64() {
        Some(v) => seq.serialize_element(&v),
        None => seq.serialize_element(&n.to_string()),
    }
}

struct EntryJson<'a>(&'a ExactComplex);

impl Serialize for EntryJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(4))?;
        serialize_big(&mut seq, self.0.re.numer())?;
        serialize_big(&mut seq, self.0.re.denom())?;
        serialize_big(&mut seq, self.0.im.numer())?;
        serialize_big(&mut seq, self.0.im.denom())?;
        seq.end()
    }
}

/// Rows of `[re_num, re_den, im_num, im_den]` entries.
impl Serialize for ExactMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<EntryJson<'_>>> = (0..self.dim)
            .map(|r| (0..self.dim).map(|c| EntryJson(self.get(r, c))).collect())
            .collect();
        rows.serialize(s)
    }
}

/// `2^(complete generator pairs)`.
pub fn rep_dimension(level: u32) -> usize {
    1 << (level / 2)
}

#[derive(Clone, Debug)]
pub struct Representation {
    level: u32,
    dim: usize,
    generators: Vec<ExactMatrix>,
}

impl Representation {
    pub fn new(level: u32) -> Result<Self> {
        if level > MAX_REPRESENTED_LEVEL {
            return Err(Error::LevelTooHigh {
                level,
                max: MAX_REPRESENTED_LEVEL,
            });
        }
        let pairs = (level / 2) as usize;
        let dim = rep_dimension(level);
        let id2 = ExactMatrix::identity(2);
        let i_sigma1 = ExactMatrix::from_rows(vec![
            vec![c_int(0, 0), c_int(0, 1)],
            vec![c_int(0, 1), c_int(0, 0)],
        ]);
        let i_sigma2 = ExactMatrix::from_rows(vec![
            vec![c_int(0, 0), c_int(1, 0)],
            vec![c_int(-1, 0), c_int(0, 0)],
        ]);
        let generators = (0..level)
            .map(|pos| {
                let g = Generator::from_position(pos);
                let factor = (g.index() - 1) as usize;
                if factor >= pairs {
                    return ExactMatrix::identity(dim).scale(&c_int(0, 1));
                }
                let local = match g.kind() {
                    Kind::I => &i_sigma1,
                    Kind::J => &i_sigma2,
                };
                (0..pairs).fold(ExactMatrix::identity(1), |acc, f| {
                    acc.kron(if f == factor { local } else { &id2 })
                })
            })
            .collect();
        Ok(Representation {
            level,
            dim,
            generators,
        })
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generator_images(&self) -> &[ExactMatrix] {
        &self.generators
    }

    /// Product of the generator images in canonical order, negated for a
    /// minus sign.
    pub fn image(&self, m: Monomial) -> ExactMatrix {
        assert!(
            m.mask().span() <= self.level,
            "{m} lies outside level {}",
            self.level
        );
        let product = m
            .mask()
            .generators()
            .fold(ExactMatrix::identity(self.dim), |acc, g| {
                acc.mul_ref(&self.generators[g.position() as usize])
            });
        if m.sign().is_minus() {
            -&product
        } else {
            product
        }
    }

    pub fn image_of(&self, x: &AlgebraElement) -> ExactMatrix {
        x.terms()
            .fold(ExactMatrix::zero(self.dim), |acc, (mask, q)| {
                let c = Complex::new(q.clone(), Rational::zero());
                acc.add_ref(&self.image(Monomial::positive(mask)).scale(&c))
            })
    }

    /// Images of every group element, in the group's element order.
    pub fn images(&self) -> Result<Vec<(Monomial, ExactMatrix)>> {
        Ok(group::enumerate(self.level)?
            .elements()
            .iter()
            .map(|&m| (m, self.image(m)))
            .collect())
    }
}

pub fn represent(level: u32) -> Result<Representation> {
    Representation::new(level)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomomorphismReport {
    pub level: u32,
    pub distinct_images: usize,
    pub faithful: bool,
    pub products_checked: usize,
    pub products_matched: usize,
    pub first_counterexample: Option<(String, String)>,
}

impl HomomorphismReport {
    pub fn passed(&self) -> bool {
        self.faithful && self.products_matched == self.products_checked
    }
}

/// Faithfulness plus `image(a·b) = image(a)·image(b)` over every ordered pair.
pub fn verify_homomorphism(level: u32) -> Result<HomomorphismReport> {
    let rep = Representation::new(level)?;
    let images = rep.images()?;
    let distinct_images = images.iter().map(|(_, m)| m).collect::<HashSet<_>>().len();

    let group = group::enumerate(level)?;
    let mut matched = 0;
    let mut first = None;
    for (a, ma) in &images {
        for (b, mb) in &images {
            let ab = group.index_of(*a * *b).expect("group is closed");
            if images[ab].1 == ma.mul_ref(mb) {
                matched += 1;
            } else if first.is_none() {
                first = Some((a.to_string(), b.to_string()));
            }
        }
    }
    Ok(HomomorphismReport {
        level,
        distinct_images,
        faithful: distinct_images == images.len(),
        products_checked: images.len() * images.len(),
        products_matched: matched,
        first_counterexample: first,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaReport {
    pub members: Vec<String>,
    /// Off-diagonal anticommutators that vanish, out of 10.
    pub vanishing_off_diagonal: usize,
    /// `k` where the anticommutator of a member with itself is `2k·1`; `None`
    /// if it is not a multiple of the identity.
    pub diagonal: Vec<Option<i64>>,
    pub signature_matches: bool,
    /// Complex dimension of the span of all products of member images.
    pub span_dimension: usize,
    pub full_matrix_algebra: bool,
}

impl GammaReport {
    pub fn passed(&self) -> bool {
        self.vanishing_off_diagonal == 10 && self.signature_matches
    }
}

/// Clifford relations `ΓᵤΓᵥ + ΓᵥΓᵤ = 2·sᵤ·δᵤᵥ·1` for the pentad's images, plus
/// the dimension of the algebra they span.
pub fn gamma_relations_check(pentad: &Pentad) -> Result<GammaReport> {
    let rep = Representation::new(pentad.level())?;
    let gammas: Vec<ExactMatrix> = pentad.members().iter().map(|&m| rep.image(m)).collect();
    let id = ExactMatrix::identity(rep.dim());

    let mut vanishing = 0;
    for u in 0..5 {
        for v in u + 1..5 {
            if gammas[u].anticommutator(&gammas[v]).is_zero() {
                vanishing += 1;
            }
        }
    }
    let diagonal: Vec<Option<i64>> = gammas
        .iter()
        .map(|g| {
            let half = g.mul_ref(g);
            [1i64, -1]
                .into_iter()
                .find(|&s| half == id.scale(&c_int(s, 0)))
        })
        .collect();
    let signature_matches = diagonal
        .iter()
        .zip(pentad.signature())
        .all(|(d, s)| *d == Some(i64::from(s.to_i8())));

    let products: Vec<ExactMatrix> = (0u32..32)
        .map(|subset| {
            (0..5)
                .filter(|k| subset >> k & 1 == 1)
                .fold(id.clone(), |acc, k| acc.mul_ref(&gammas[k]))
        })
        .collect();
    let span_dimension = complex_rank(products.iter().map(|m| m.entries().to_vec()).collect());

    Ok(GammaReport {
        members: pentad.members().iter().map(|m| m.to_string()).collect(),
        vanishing_off_diagonal: vanishing,
        diagonal,
        signature_matches,
        span_dimension,
        full_matrix_algebra: span_dimension == rep.dim() * rep.dim(),
    })
}

/// Rank of a list of row vectors by exact Gaussian elimination.
pub fn complex_rank(mut rows: Vec<Vec<ExactComplex>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = ExactComplex::one() / &rows[rank][col];
        let pivot_row: Vec<ExactComplex> = rows[rank].iter().map(|x| x * &inv).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = &*x - &factor * p;
                }
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(rep_dimension(0), 1);
        assert_eq!(rep_dimension(2), 2);
        assert_eq!(rep_dimension(5), 4);
        assert_eq!(rep_dimension(6), 8);
        assert_eq!(represent(5).unwrap().dim(), 4);
        assert!(represent(7).is_err());
    }

    #[test]
    fn level_zero_images() {
        let rep = represent(0).unwrap();
        assert_eq!(rep.image(Monomial::ONE), ExactMatrix::identity(1));
        assert_eq!(rep.image(Monomial::MINUS_ONE), -&ExactMatrix::identity(1));
        assert!(verify_homomorphism(0).unwrap().passed());
    }

    #[test]
    fn generator_images_square_to_minus_one() {
        let rep = represent(6).unwrap();
        let minus = -&ExactMatrix::identity(8);
        for g in rep.generator_images() {
            assert_eq!(g.mul_ref(g), minus);
        }
        let k = rep.image(m("i1j1"));
        assert_eq!(k.mul_ref(&k), minus);
    }

    #[test]
    fn pseudoscalar_is_central_imaginary_unit() {
        let rep = represent(5).unwrap();
        assert_eq!(
            rep.image(m("i3")),
            ExactMatrix::identity(4).scale(&c_int(0, 1))
        );
    }

    #[test]
    fn quaternion_level_is_homomorphic() {
        let r = verify_homomorphism(2).unwrap();
        assert!(r.passed());
        assert_eq!(r.products_checked, 64);
    }

    #[test]
    fn rank_of_simple_rows() {
        let rows = vec![
            vec![c_int(1, 0), c_int(0, 1)],
            vec![c_int(0, 1), c_int(-1, 0)],
            vec![c_int(0, 0), c_int(2, 0)],
        ];
        assert_eq!(complex_rank(rows), 2);
        assert_eq!(complex_rank(vec![vec![c_int(0, 0); 3]]), 0);
    }

    #[test]
    fn matrix_json_entries() {
        let v = serde_json::to_value(ExactMatrix::identity(1).scale(&c_int(0, -1))).unwrap();
        assert_eq!(v, serde_json::json!([[[0, 1, -1, 1]]]));
    }
}
