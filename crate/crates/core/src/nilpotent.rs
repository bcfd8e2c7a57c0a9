//! Nilpotent operators `s_E·α·E + s_p·(β₁p₁ + β₂p₂ + β₃p₃) + δ·m` built
//! from a pentad whose squares read `(+1, -1, -1, -1, -1)`.
//!
//! Because the five units pairwise anticommute, every cross term cancels and
//! the square is `(E² - p² - m²)·1`, which vanishes on the mass shell.

use num::{Signed, Zero};
use serde::Serialize;

use crate::algebra::{AlgebraElement, Rational};
use crate::error::{Error, Result};
use crate::group;
use crate::monomial::{Monomial, Sign};
use crate::pentad::{format_signature, Pentad, NILPOTENT_SIGNATURE};

/// `(s_E, s_p)`.
pub type SignPair = (Sign, Sign);

/// The four sign variants in the order used by annihilation tables.
pub const SIGN_VARIANTS: [SignPair; 4] = [
    (Sign::Plus, Sign::Plus),
    (Sign::Plus, Sign::Minus),
    (Sign::Minus, Sign::Plus),
    (Sign::Minus, Sign::Minus),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentOperator {
    pentad: Pentad,
    energy: Rational,
    momentum: [Rational; 3],
    mass: Rational,
    signs: SignPair,
}

impl NilpotentOperator {
    pub fn build(
        pentad: &Pentad,
        energy: Rational,
        momentum: [Rational; 3],
        mass: Rational,
        signs: SignPair,
    ) -> Result<Self> {
        if pentad.signature() != NILPOTENT_SIGNATURE {
            return Err(Error::Signature {
                expected: format_signature(&NILPOTENT_SIGNATURE),
                found: format_signature(&pentad.signature()),
            });
        }
        if energy.is_negative() || mass.is_negative() {
            return Err(Error::Precondition(
                "energy and mass must be non-negative".into(),
            ));
        }
        Ok(NilpotentOperator {
            pentad: pentad.clone(),
            energy,
            momentum,
            mass,
            signs,
        })
    }

    pub fn pentad(&self) -> &Pentad {
        &self.pentad
    }

    pub fn energy(&self) -> &Rational {
        &self.energy
    }

    pub fn momentum(&self) -> &[Rational; 3] {
        &self.momentum
    }

    pub fn mass(&self) -> &Rational {
        &self.mass
    }

    pub fn signs(&self) -> SignPair {
        self.signs
    }

    pub fn with_signs(&self, signs: SignPair) -> Self {
        NilpotentOperator {
            signs,
            ..self.clone()
        }
    }

    pub fn element(&self) -> AlgebraElement {
        operator_element(
            &self.pentad,
            &self.energy,
            &self.momentum,
            &self.mass,
            self.signs,
        )
    }

    pub fn square(&self) -> AlgebraElement {
        self.element().square()
    }

    /// `E² - p² - m²`.
    pub fn shell_defect(&self) -> Rational {
        shell_defect(&self.energy, &self.momentum, &self.mass)
    }

    pub fn is_on_shell(&self) -> bool {
        self.shell_defect().is_zero()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.square().is_zero()
    }

    /// The antifermion flips the sign on the energy term.
    pub fn antifermion(&self) -> Self {
        self.with_signs((-self.signs.0, self.signs.1))
    }
}

pub fn shell_defect(energy: &Rational, momentum: &[Rational; 3], mass: &Rational) -> Rational {
    let p2: Rational = momentum.iter().map(|p| p * p).sum();
    energy * energy - p2 - mass * mass
}

fn operator_element(
    pentad: &Pentad,
    energy: &Rational,
    momentum: &[Rational; 3],
    mass: &Rational,
    (s_e, s_p): SignPair,
) -> AlgebraElement {
    let [alpha, b1, b2, b3, delta] = *pentad.members();
    let signed = |s: Sign, q: &Rational| if s.is_minus() { -q.clone() } else { q.clone() };
    AlgebraElement::from_terms([
        (signed(s_e, energy), alpha),
        (signed(s_p, &momentum[0]), b1),
        (signed(s_p, &momentum[1]), b2),
        (signed(s_p, &momentum[2]), b3),
        (mass.clone(), delta),
    ])
}

fn same_pentad(a: &NilpotentOperator, b: &NilpotentOperator) -> Result<()> {
    if a.pentad.members() != b.pentad.members() {
        return Err(Error::Precondition(
            "operators are built on different pentads".into(),
        ));
    }
    Ok(())
}

/// The product `a·b`. Two identical on-shell operators multiply to zero.
pub fn exclusion_product(a: &NilpotentOperator, b: &NilpotentOperator) -> Result<AlgebraElement> {
    same_pentad(a, b)?;
    Ok(a.element().mul_ref(&b.element()))
}

/// Product of a fermion operator with an antifermion operator.
pub fn boson_product(
    fermion: &NilpotentOperator,
    antifermion: &NilpotentOperator,
) -> Result<AlgebraElement> {
    same_pentad(fermion, antifermion)?;
    Ok(fermion.element().mul_ref(&antifermion.element()))
}

/// Which plane-wave amplitudes each sign variant of the differential
/// operator annihilates.
///
/// Row `(s_E, s_p)` is the operator `s_E·ι·α·∂ₜ + s_p·ι·β·∇ + δ·m` with the
/// plane-wave substitutions `∂ₜ ↦ -ι·E` and `∂ᵣ ↦ ι·pᵣ`; column `(t_E, t_p)`
/// is the amplitude built with those signs. Rows and columns both follow
/// [`SIGN_VARIANTS`]. `ι` is the central pseudoscalar of the pentad's level.
pub fn dirac_annihilation_table(
    pentad: &Pentad,
    energy: &Rational,
    momentum: &[Rational; 3],
    mass: &Rational,
) -> Result<[[bool; 4]; 4]> {
    if !shell_defect(energy, momentum, mass).is_zero() {
        return Err(Error::Precondition(
            "annihilation table needs E² = p² + m²".into(),
        ));
    }
    if !energy.is_positive() || !mass.is_positive() || momentum.iter().all(Zero::is_zero) {
        return Err(Error::Precondition(
            "annihilation table needs E > 0, m > 0 and p ≠ 0".into(),
        ));
    }
    let roles = group::classify_units(pentad.level())?;
    let iota = AlgebraElement::monomial(roles.pseudoscalar()?);
    if iota.square() != -AlgebraElement::one() {
        return Err(Error::Precondition("pseudoscalar must square to -1".into()));
    }

    let [alpha, b1, b2, b3, delta] = pentad.members().map(AlgebraElement::monomial);
    let time_derivative = iota.scale(&-energy.clone());
    let space_derivative: Vec<AlgebraElement> = momentum.iter().map(|p| iota.scale(p)).collect();
    let sign = |s: Sign, x: AlgebraElement| if s.is_minus() { -x } else { x };

    let mut table = [[false; 4]; 4];
    for (row, &(s_e, s_p)) in SIGN_VARIANTS.iter().enumerate() {
        let time_part = sign(s_e, &(&iota * &alpha) * &time_derivative);
        let space_part = [b1.clone(), b2.clone(), b3.clone()]
            .iter()
            .zip(&space_derivative)
            .fold(AlgebraElement::zero(), |acc, (b, d)| acc + &(&iota * b) * d);
        let operator = time_part + sign(s_p, space_part) + delta.scale(mass);
        for (col, &variant) in SIGN_VARIANTS.iter().enumerate() {
            let amplitude = operator_element(pentad, energy, momentum, mass, variant);
            table[row][col] = (&operator * &amplitude).is_zero();
        }
    }
    Ok(table)
}

pub fn is_permutation_matrix(table: &[[bool; 4]; 4]) -> bool {
    let rows_ok = table.iter().all(|r| r.iter().filter(|&&x| x).count() == 1);
    let cols_ok = (0..4).all(|c| table.iter().filter(|r| r[c]).count() == 1);
    rows_ok && cols_ok
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parameter {
    Space,
    Time,
    Mass,
    Charge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlgebraKind {
    MultivariateVector,
    Pseudoscalar,
    RealScalar,
    Quaternion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParameterRow {
    pub name: Parameter,
    pub conjugated: bool,
    pub complex: bool,
    pub dimensional: bool,
    pub algebra: AlgebraKind,
}

pub fn parameter_table() -> [ParameterRow; 4] {
    let row = |name, conjugated, complex, dimensional, algebra| ParameterRow {
        name,
        conjugated,
        complex,
        dimensional,
        algebra,
    };
    [
        row(
            Parameter::Space,
            false,
            false,
            true,
            AlgebraKind::MultivariateVector,
        ),
        row(
            Parameter::Time,
            false,
            true,
            false,
            AlgebraKind::Pseudoscalar,
        ),
        row(Parameter::Mass, true, false, false, AlgebraKind::RealScalar),
        row(Parameter::Charge, true, true, true, AlgebraKind::Quaternion),
    ]
}

/// The first pentad at `level` whose squares can be arranged as
/// `(+1, -1, -1, -1, -1)`.
pub fn first_nilpotent_pentad(level: u32) -> Result<Pentad> {
    crate::pentad::find_pentads(level, Some(&NILPOTENT_SIGNATURE))?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Precondition(format!("no (+,-,-,-,-) pentad at level {level}")))
}

#[derive(Clone, Debug, Serialize)]
pub struct NilpotentJson {
    pub pentad: Vec<String>,
    #[serde(rename = "E")]
    pub energy: String,
    pub p: Vec<String>,
    pub m: String,
    pub square: String,
    pub nilpotent: bool,
    /// `None` when the inputs are off shell or degenerate.
    pub annihilation: Option<[[bool; 4]; 4]>,
}

impl NilpotentJson {
    pub fn from_operator(op: &NilpotentOperator) -> Self {
        let annihilation =
            dirac_annihilation_table(op.pentad(), op.energy(), op.momentum(), op.mass()).ok();
        NilpotentJson {
            pentad: op
                .pentad()
                .members()
                .iter()
                .map(Monomial::to_string)
                .collect(),
            energy: op.energy().to_string(),
            p: op.momentum().iter().map(|x| x.to_string()).collect(),
            m: op.mass().to_string(),
            square: op.square().to_string(),
            nilpotent: op.is_nilpotent(),
            annihilation,
        }
    }
}
