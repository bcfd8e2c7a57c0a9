//! Finite groups of signed monomials, one per generator count.
//!
//! Level `g` uses the first `g` generators of `i₁, j₁, i₂, j₂, …` and holds
//! all `2^(g+1)` signed monomials over them. Elements are kept in a fixed
//! order: masks ascending, `+` before `-` within each mask.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{Generator, Mask, Monomial, Sign};

pub const DEFAULT_MAX_LEVEL: u32 = 7;

/// Hard ceiling for levels; beyond this the exhaustive checks stop being cheap.
pub const LEVEL_CEILING: u32 = 12;

#[derive(Clone, Copy, Debug)]
pub struct Catalog {
    max_level: u32,
}

impl Default for Catalog {
    fn default() -> Self {
        Catalog {
            max_level: DEFAULT_MAX_LEVEL,
        }
    }
}

impl Catalog {
    pub fn new(max_level: u32) -> Result<Self> {
        if max_level > LEVEL_CEILING {
            return Err(Error::LevelTooHigh {
                level: max_level,
                max: LEVEL_CEILING,
            });
        }
        Ok(Catalog { max_level })
    }

    pub fn max_level(&self) -> u32 {
        self.max_level
    }

    pub fn check_level(&self, level: u32) -> Result<()> {
        if level > self.max_level {
            return Err(Error::LevelTooHigh {
                level,
                max: self.max_level,
            });
        }
        Ok(())
    }

    pub fn enumerate(&self, level: u32) -> Result<GroupLevel> {
        self.check_level(level)?;
        Ok(GroupLevel::build(level))
    }

    pub fn verify_group(&self, level: u32) -> Result<GroupReport> {
        let group = self.enumerate(level)?;
        Ok(group.verify())
    }

    pub fn center(&self, level: u32) -> Result<Vec<Monomial>> {
        Ok(self.enumerate(level)?.center())
    }

    pub fn classify_units(&self, level: u32) -> Result<UnitRoles> {
        Ok(self.enumerate(level)?.classify_units())
    }
}

pub fn enumerate(level: u32) -> Result<GroupLevel> {
    Catalog::default().enumerate(level)
}

pub fn center(level: u32) -> Result<Vec<Monomial>> {
    Catalog::default().center(level)
}

pub fn verify_group(level: u32) -> Result<GroupReport> {
    Catalog::default().verify_group(level)
}

pub fn classify_units(level: u32) -> Result<UnitRoles> {
    Catalog::default().classify_units(level)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupLevel {
    level: u32,
    elements: Vec<Monomial>,
}

impl GroupLevel {
    fn build(level: u32) -> Self {
        let elements = (0..1u32 << level)
            .flat_map(|bits| {
                let mask = Mask::from_bits(bits);
                [
                    Monomial::new(Sign::Plus, mask),
                    Monomial::new(Sign::Minus, mask),
                ]
            })
            .collect();
        GroupLevel { level, elements }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> {
        (0..self.level).map(Generator::from_position)
    }

    pub fn index_of(&self, m: Monomial) -> Option<usize> {
        let bits = m.mask().bits() as usize;
        (bits < 1 << self.level).then(|| 2 * bits + usize::from(m.sign().is_minus()))
    }

    pub fn contains(&self, m: Monomial) -> bool {
        self.index_of(m).is_some()
    }

    /// `table[a][b]` is the index of `elements[a] * elements[b]`, or `None`
    /// if the product escaped the level.
    pub fn product_table(&self) -> Vec<Vec<Option<usize>>> {
        self.elements
            .iter()
            .map(|&a| {
                self.elements
                    .iter()
                    .map(|&b| self.index_of(a * b))
                    .collect()
            })
            .collect()
    }

    pub fn center(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .copied()
            .filter(|&z| self.elements.iter().all(|&x| z * x == x * z))
            .collect()
    }

    pub fn verify(&self) -> GroupReport {
        let order = self.order();
        let mut first_failure = None;
        let mut note = |ok: bool, msg: &dyn Fn() -> String| {
            if !ok && first_failure.is_none() {
                first_failure = Some(msg());
            }
            ok
        };

        let table = self.product_table();
        let mut closure = true;
        for (a, row) in table.iter().enumerate() {
            for (b, cell) in row.iter().enumerate() {
                if cell.is_none() {
                    closure = note(false, &|| {
                        format!(
                            "{} * {} leaves the level",
                            self.elements[a], self.elements[b]
                        )
                    });
                }
            }
        }

        let mut associativity = closure;
        let mut products = (order * order) as u64;
        if closure {
            let t = |a: usize, b: usize| table[a][b].expect("closed");
            'outer: for a in 0..order {
                for b in 0..order {
                    let ab = t(a, b);
                    for c in 0..order {
                        products += 2;
                        if t(ab, c) != t(a, t(b, c)) {
                            associativity = note(false, &|| {
                                format!(
                                    "({} {} {}) not associative",
                                    self.elements[a], self.elements[b], self.elements[c]
                                )
                            });
                            break 'outer;
                        }
                    }
                }
            }
        }

        let one = self.index_of(Monomial::ONE);
        let identity = one.is_some_and(|e| {
            closure && (0..order).all(|a| table[e][a] == Some(a) && table[a][e] == Some(a))
        });
        let identity = note(identity, &|| "identity element missing".to_owned());

        let inverses = identity
            && (0..order).all(|a| {
                let found = (0..order).any(|b| table[a][b] == one && table[b][a] == one);
                note(found, &|| format!("{} has no inverse", self.elements[a]))
            });

        let order_doubling = (self.level >= 1).then(|| {
            let previous = GroupLevel::build(self.level - 1).order();
            note(order == 2 * previous, &|| {
                format!("order {order} is not twice {previous}")
            })
        });

        GroupReport {
            level: self.level,
            order,
            closure,
            associativity,
            identity,
            inverses,
            order_doubling,
            products_checked: products,
            first_failure,
        }
    }

    /// Structural identification of the scalar, pseudoscalar, quaternion and
    /// vector units.
    ///
    /// An odd level `2k+1` ends in an unpaired `i_{k+1}`, which commutes with
    /// everything and squares to `-1`: that is the pseudoscalar. Its products
    /// with the quaternion units of the last complete pair square to `+1` and
    /// pairwise anticommute, giving the vector triple. Earlier pairs remain
    /// quaternion triples. Even levels have a trivial center and no
    /// pseudoscalar.
    pub fn classify_units(&self) -> UnitRoles {
        let pairs = self.level / 2;
        let pseudoscalar = self
            .center()
            .into_iter()
            .find(|z| z.sign() == Sign::Plus && !z.is_scalar() && z.square_sign() == Sign::Minus);

        let quaternion_triple = |n: u32| {
            let i = Monomial::generator(Generator::i(n));
            let j = Monomial::generator(Generator::j(n));
            [i, j, i * j]
        };

        let (quaternions, vectors) = match pseudoscalar {
            Some(iota) if pairs >= 1 => {
                let vectors = quaternion_triple(pairs).map(|q| iota * q);
                ((1..pairs).map(quaternion_triple).collect(), Some(vectors))
            }
            _ => ((1..=pairs).map(quaternion_triple).collect(), None),
        };
        let pseudovectors = pseudoscalar
            .zip(vectors)
            .map(|(iota, v)| v.map(|x| iota * x));

        UnitRoles {
            level: self.level,
            pseudoscalar,
            quaternions,
            vectors,
            pseudovectors,
        }
    }

    /// CSV with a header row and column of element names; cells hold products.
    pub fn table_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec![String::new()];
        header.extend(self.elements.iter().map(|e| e.to_string()));
        w.write_record(&header)?;
        for &a in &self.elements {
            let mut row = vec![a.to_string()];
            row.extend(self.elements.iter().map(|&b| (a * b).to_string()));
            w.write_record(&row)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("names are ASCII"))
    }

    pub fn table_json(&self) -> TableJson {
        TableJson {
            level: self.level,
            order: self.order(),
            elements: self.elements.iter().map(|e| e.to_string()).collect(),
            table: self
                .elements
                .iter()
                .map(|&a| self.elements.iter().map(|&b| (a * b).to_string()).collect())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TableJson {
    pub level: u32,
    pub order: usize,
    pub elements: Vec<String>,
    pub table: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupReport {
    pub level: u32,
    pub order: usize,
    pub closure: bool,
    pub associativity: bool,
    pub identity: bool,
    pub inverses: bool,
    /// `None` at level 0, which has no predecessor.
    pub order_doubling: Option<bool>,
    pub products_checked: u64,
    pub first_failure: Option<String>,
}

impl GroupReport {
    pub fn passed(&self) -> bool {
        self.closure
            && self.associativity
            && self.identity
            && self.inverses
            && self.order_doubling.unwrap_or(true)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Role {
    Scalar,
    Pseudoscalar,
    QuaternionUnit,
    VectorUnit,
    PseudovectorUnit,
    Other,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UnitRole {
    pub role: Role,
    pub monomial: Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitRoles {
    pub level: u32,
    pub pseudoscalar: Option<Monomial>,
    pub quaternions: Vec<[Monomial; 3]>,
    pub vectors: Option<[Monomial; 3]>,
    pub pseudovectors: Option<[Monomial; 3]>,
}

impl UnitRoles {
    pub fn pseudoscalar(&self) -> Result<Monomial> {
        self.pseudoscalar
            .ok_or_else(|| Error::Precondition(format!("level {}: no pseudoscalar", self.level)))
    }

    /// Every positive monomial of the level with its role; unnamed ones are `Other`.
    pub fn roles(&self) -> Vec<UnitRole> {
        let named = |m: Monomial| -> Option<Role> {
            if m.is_scalar() {
                return Some(Role::Scalar);
            }
            if self.pseudoscalar == Some(m) {
                return Some(Role::Pseudoscalar);
            }
            if self.quaternions.iter().any(|t| t.contains(&m)) {
                return Some(Role::QuaternionUnit);
            }
            let signed_in = |t: &Option<[Monomial; 3]>| {
                t.is_some_and(|t| t.iter().any(|x| x.mask() == m.mask()))
            };
            if signed_in(&self.vectors) {
                return Some(Role::VectorUnit);
            }
            if signed_in(&self.pseudovectors) {
                return Some(Role::PseudovectorUnit);
            }
            None
        };
        (0..1u32 << self.level)
            .map(|bits| {
                let m = Monomial::positive(Mask::from_bits(bits));
                UnitRole {
                    role: named(m).unwrap_or(Role::Other),
                    monomial: m,
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    #[test]
    fn orders_double() {
        for g in 0..=7 {
            assert_eq!(enumerate(g).unwrap().order(), 1 << (g + 1));
        }
    }

    #[test]
    fn level_above_maximum_is_rejected() {
        assert!(matches!(
            enumerate(8),
            Err(Error::LevelTooHigh { level: 8, max: 7 })
        ));
        let c = Catalog::new(3).unwrap();
        assert!(c.enumerate(4).is_err());
        assert!(Catalog::new(LEVEL_CEILING + 1).is_err());
    }

    #[test]
    fn level_zero_is_signs() {
        let g = enumerate(0).unwrap();
        assert_eq!(g.elements(), [Monomial::ONE, Monomial::MINUS_ONE]);
        let r = g.verify();
        assert!(r.passed());
        assert_eq!(r.order_doubling, None);
    }

    #[test]
    fn verify_levels_pass() {
        for g in 1..=5 {
            let r = verify_group(g).unwrap();
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.order_doubling, Some(true));
        }
    }

    #[test]
    fn centers() {
        assert_eq!(center(0).unwrap(), [m("1"), m("-1")]);
        assert_eq!(center(2).unwrap(), [m("1"), m("-1")]);
        assert_eq!(center(5).unwrap(), [m("1"), m("-1"), m("i3"), m("-i3")]);
    }

    #[test]
    fn quaternion_subgroup() {
        let (i, j, k) = (m("i1"), m("j1"), m("i1j1"));
        for u in [i, j, k] {
            assert_eq!(u.square(), Monomial::MINUS_ONE);
        }
        assert_eq!(i * j, k);
        assert_eq!(j * k, i);
        assert_eq!(k * i, j);
    }

    #[test]
    fn level_three_roles() {
        let r = classify_units(3).unwrap();
        assert_eq!(r.pseudoscalar, Some(m("i2")));
        assert_eq!(r.vectors, Some([m("i1i2"), m("j1i2"), m("i1j1i2")]));
        assert!(r.quaternions.is_empty());
        let [i, j, k] = r.vectors.unwrap();
        let iota = r.pseudoscalar.unwrap();
        assert_eq!(i * j, iota * k);
        assert_eq!(j * i, -(iota * k));
        assert_eq!(j * k, iota * i);
        assert_eq!(k * i, iota * j);
        assert_eq!(r.pseudovectors, Some([iota * i, iota * j, iota * k]));
    }

    #[test]
    fn level_three_vectors_are_the_square_plus_one_units() {
        let g = enumerate(3).unwrap();
        let mut plus: Vec<Monomial> = g
            .elements()
            .iter()
            .copied()
            .filter(|e| e.sign() == Sign::Plus && !e.is_scalar() && e.square() == Monomial::ONE)
            .collect();
        plus.sort();
        let mut v = classify_units(3).unwrap().vectors.unwrap().to_vec();
        v.sort();
        assert_eq!(plus, v);
    }

    #[test]
    fn level_five_decomposition_covers_the_group() {
        let r = classify_units(5).unwrap();
        assert_eq!(r.pseudoscalar, Some(m("i3")));
        assert_eq!(r.quaternions, vec![[m("i1"), m("j1"), m("i1j1")]]);
        assert_eq!(r.vectors, Some([m("i2i3"), m("j2i3"), m("i2j2i3")]));
        let iota = r.pseudoscalar.unwrap();
        let scalars = [Monomial::ONE, Monomial::MINUS_ONE, iota, -iota];
        let quats = [Monomial::ONE, m("i1"), m("j1"), m("i1j1")];
        let mut vecs = vec![Monomial::ONE];
        vecs.extend(r.vectors.unwrap());
        let mut all = Vec::new();
        for &s in &scalars {
            for &q in &quats {
                for &v in &vecs {
                    all.push(s * q * v);
                }
            }
        }
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 64);
    }

    #[test]
    fn even_levels_have_no_pseudoscalar() {
        let r = classify_units(4).unwrap();
        assert!(r.pseudoscalar().is_err());
        assert_eq!(r.quaternions.len(), 2);
        assert!(r.vectors.is_none());
    }

    #[test]
    fn roles_cover_every_positive_element() {
        let roles = classify_units(3).unwrap().roles();
        assert_eq!(roles.len(), 8);
        let count = |r: Role| roles.iter().filter(|u| u.role == r).count();
        assert_eq!(count(Role::Scalar), 1);
        assert_eq!(count(Role::Pseudoscalar), 1);
        assert_eq!(count(Role::VectorUnit), 3);
        assert_eq!(count(Role::PseudovectorUnit), 3);
    }

    #[test]
    fn table_exports() {
        let g = enumerate(0).unwrap();
        assert_eq!(g.table_csv().unwrap(), ",1,-1\n1,1,-1\n-1,-1,1\n");
        let json = serde_json::to_value(enumerate(2).unwrap().table_json()).unwrap();
        assert_eq!(json["order"], 8);
        assert_eq!(json["table"].as_array().unwrap().len(), 8);
        assert_eq!(json["table"][2][4], "i1j1");
    }
}
