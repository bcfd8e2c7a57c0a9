//! Seeded generators of rational test data.

use num::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{ratio, rational, AlgebraElement, Rational};
use crate::monomial::{Mask, Monomial};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Numerator in `-12..=12`, denominator in `1..=6`.
pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    ratio(rng.random_range(-12..=12), rng.random_range(1..=6))
}

pub fn vector3<R: Rng>(rng: &mut R) -> [Rational; 3] {
    std::array::from_fn(|_| small_rational(rng))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kinematics {
    pub energy: Rational,
    pub momentum: [Rational; 3],
    pub mass: Rational,
}

impl Kinematics {
    pub fn new(energy: Rational, momentum: [Rational; 3], mass: Rational) -> Self {
        Kinematics {
            energy,
            momentum,
            mass,
        }
    }

    pub fn from_ints(energy: i64, momentum: [i64; 3], mass: i64) -> Self {
        Kinematics::new(rational(energy), momentum.map(rational), rational(mass))
    }

    pub fn shell_defect(&self) -> Rational {
        crate::nilpotent::shell_defect(&self.energy, &self.momentum, &self.mass)
    }

    /// On shell with `E, m > 0` and `p ≠ 0`.
    pub fn is_massive_moving(&self) -> bool {
        self.shell_defect().is_zero()
            && self.energy.is_positive()
            && self.mass.is_positive()
            && self.momentum.iter().any(|p| !p.is_zero())
    }
}

/// A rational point with `E² = p² + m²`, from inverse stereographic
/// projection of a random rational point onto the unit 3-sphere.
pub fn on_shell<R: Rng>(rng: &mut R) -> Kinematics {
    loop {
        let t = vector3(rng);
        let s: Rational = t.iter().map(|x| x * x).sum();
        if s.is_zero() {
            continue;
        }
        let denom = Rational::one() + &s;
        let scale = rational(rng.random_range(1..=9));
        let mass = (&scale * (Rational::one() - &s) / &denom).abs();
        let momentum = t.map(|x| &scale * rational(2) * x / &denom);
        return Kinematics::new(scale, momentum, mass);
    }
}

/// Random `(E, p, m)` with non-negative `E, m`; almost surely off shell.
pub fn any_kinematics<R: Rng>(rng: &mut R) -> Kinematics {
    Kinematics::new(
        small_rational(rng).abs(),
        vector3(rng),
        small_rational(rng).abs(),
    )
}

/// Up to `max_terms` random rational terms over the first `level` generators.
pub fn element<R: Rng>(rng: &mut R, level: u32, max_terms: usize) -> AlgebraElement {
    let n = rng.random_range(0..=max_terms);
    AlgebraElement::from_terms((0..n).map(|_| {
        let mask = Mask::from_bits(rng.random_range(0..1u32 << level));
        (small_rational(rng), Monomial::positive(mask))
    }))
}
