//! Mutually anticommuting monomial sets.
//!
//! Anticommutation ignores signs, so the search runs over unsigned
//! non-identity masks. Sets are cliques in the anticommutation graph; the
//! graph is small (at most 127 vertices) and every search here is exhaustive.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{anticommuting_masks, Mask, Monomial, Sign};

/// Largest level whose graph fits the 128-bit vertex sets.
pub const MAX_SEARCH_LEVEL: u32 = 7;

type VertexSet = u128;

fn check_level(level: u32) -> Result<()> {
    if level > MAX_SEARCH_LEVEL {
        return Err(Error::LevelTooHigh {
            level,
            max: MAX_SEARCH_LEVEL,
        });
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct AnticommutationGraph {
    level: u32,
    vertices: Vec<Mask>,
    adjacency: Vec<VertexSet>,
}

impl AnticommutationGraph {
    pub fn new(level: u32) -> Result<Self> {
        check_level(level)?;
        let vertices: Vec<Mask> = (1..1u32 << level).map(Mask::from_bits).collect();
        let adjacency = vertices
            .iter()
            .map(|&a| {
                vertices
                    .iter()
                    .enumerate()
                    .filter(|(_, &b)| anticommuting_masks(a, b))
                    .fold(0, |set, (v, _)| set | 1 << v)
            })
            .collect();
        Ok(AnticommutationGraph {
            level,
            vertices,
            adjacency,
        })
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Mask] {
        &self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    fn vertex(&self, mask: Mask) -> Option<usize> {
        let bits = mask.bits() as usize;
        (bits >= 1 && bits <= self.vertices.len()).then(|| bits - 1)
    }

    pub fn has_edge(&self, a: Mask, b: Mask) -> bool {
        match (self.vertex(a), self.vertex(b)) {
            (Some(a), Some(b)) => self.adjacency[a] >> b & 1 == 1,
            _ => false,
        }
    }

    /// Size of the largest clique, by branch and bound with a
    /// candidate-count bound.
    pub fn max_clique_size(&self) -> usize {
        let all = if self.vertices.is_empty() {
            0
        } else {
            VertexSet::MAX >> (128 - self.vertices.len())
        };
        let mut best = 0;
        self.expand(0, all, &mut best);
        best
    }

    fn expand(&self, size: usize, mut candidates: VertexSet, best: &mut usize) {
        if candidates == 0 {
            *best = (*best).max(size);
            return;
        }
        while candidates != 0 {
            if size + candidates.count_ones() as usize <= *best {
                return;
            }
            let v = candidates.trailing_zeros() as usize;
            candidates &= !(1 << v);
            self.expand(size + 1, candidates & self.adjacency[v], best);
        }
        *best = (*best).max(size);
    }

    /// All cliques of exactly `k` vertices, each in ascending mask order,
    /// listed lexicographically. Partitioned by first vertex.
    pub fn cliques_of_size(&self, k: usize) -> Vec<Vec<Mask>> {
        if k == 0 {
            return vec![Vec::new()];
        }
        (0..self.vertices.len())
            .into_par_iter()
            .map(|first| {
                let mut out = Vec::new();
                let later = !((2 as VertexSet) << first).wrapping_sub(1);
                let mut stack = vec![first];
                self.extend_cliques(&mut stack, self.adjacency[first] & later, k, &mut out);
                out
            })
            .flatten()
            .collect()
    }

    fn extend_cliques(
        &self,
        stack: &mut Vec<usize>,
        mut candidates: VertexSet,
        k: usize,
        out: &mut Vec<Vec<Mask>>,
    ) {
        if stack.len() == k {
            out.push(stack.iter().map(|&v| self.vertices[v]).collect());
            return;
        }
        while candidates != 0 && stack.len() + (candidates.count_ones() as usize) >= k {
            let v = candidates.trailing_zeros() as usize;
            candidates &= !(1 << v);
            stack.push(v);
            self.extend_cliques(stack, candidates & self.adjacency[v], k, out);
            stack.pop();
        }
    }
}

pub fn anticommutation_graph(level: u32) -> Result<AnticommutationGraph> {
    AnticommutationGraph::new(level)
}

pub fn max_anticommuting_set_size(level: u32) -> Result<usize> {
    Ok(AnticommutationGraph::new(level)?.max_clique_size())
}

pub type Signature = [Sign; 5];

pub const NILPOTENT_SIGNATURE: Signature = [
    Sign::Plus,
    Sign::Minus,
    Sign::Minus,
    Sign::Minus,
    Sign::Minus,
];
pub const GAMMA_SIGNATURE: Signature = [
    Sign::Plus,
    Sign::Minus,
    Sign::Minus,
    Sign::Minus,
    Sign::Plus,
];

pub fn format_signature(s: &Signature) -> String {
    s.iter().map(|x| x.symbol()).collect()
}

/// Accepts `+----`, `(+,-,-,-,-)` or `1,-1,-1,-1,-1`.
pub fn parse_signature(text: &str) -> Result<Signature> {
    let cleaned: String = text
        .chars()
        .filter(|c| !matches!(c, '(' | ')' | '[' | ']' | ' '))
        .collect();
    let parts: Vec<&str> = if cleaned.contains(',') {
        cleaned.split(',').collect()
    } else {
        cleaned
            .char_indices()
            .map(|(i, c)| &cleaned[i..i + c.len_utf8()])
            .collect()
    };
    let signs: Vec<Sign> = parts
        .iter()
        .map(|p| match *p {
            "+" | "+1" | "1" => Ok(Sign::Plus),
            "-" | "-1" => Ok(Sign::Minus),
            _ => Err(Error::parse(text, format!("bad signature entry {p:?}"))),
        })
        .collect::<Result<_>>()?;
    signs
        .try_into()
        .map_err(|_| Error::parse(text, "a signature has exactly five entries"))
}

/// Five pairwise anticommuting non-scalar monomials, in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pentad {
    level: u32,
    members: [Monomial; 5],
    signature: Signature,
    generates_full_group: bool,
}

impl Pentad {
    /// `level` is the group the members live in; it decides what "full
    /// group" means.
    pub fn new(level: u32, members: [Monomial; 5]) -> Result<Self> {
        check_level(level)?;
        for (n, a) in members.iter().enumerate() {
            if a.is_scalar() {
                return Err(Error::Precondition(format!(
                    "pentad member {a} is a scalar"
                )));
            }
            if a.mask().span() > level {
                return Err(Error::Precondition(format!(
                    "{a} lies outside level {level}"
                )));
            }
            for b in &members[n + 1..] {
                if !a.anticommutes(*b) {
                    return Err(Error::Precondition(format!(
                        "{a} and {b} do not anticommute"
                    )));
                }
            }
        }
        let signature = members.map(Monomial::square_sign);
        let generates_full_group = closure_order(&members) == 1usize << (level + 1);
        Ok(Pentad {
            level,
            members,
            signature,
            generates_full_group,
        })
    }

    pub fn from_names(level: u32, names: [&str; 5]) -> Result<Self> {
        let mut members = [Monomial::ONE; 5];
        for (slot, name) in members.iter_mut().zip(names) {
            *slot = name.parse()?;
        }
        Pentad::new(level, members)
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn members(&self) -> &[Monomial; 5] {
        &self.members
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn generates_full_group(&self) -> bool {
        self.generates_full_group
    }

    /// Same signature up to order.
    pub fn matches_signature(&self, wanted: &Signature) -> bool {
        let mut a = self.signature;
        let mut b = *wanted;
        a.sort();
        b.sort();
        a == b
    }

    /// Reorders the members so their squares read `wanted`; ties keep mask
    /// order. `None` if the multisets differ.
    pub fn arranged(&self, wanted: &Signature) -> Option<Pentad> {
        if !self.matches_signature(wanted) {
            return None;
        }
        let mut used = [false; 5];
        let mut members = [Monomial::ONE; 5];
        for (slot, want) in members.iter_mut().zip(wanted) {
            let n = (0..5).find(|&n| !used[n] && self.signature[n] == *want)?;
            used[n] = true;
            *slot = self.members[n];
        }
        Some(Pentad {
            members,
            signature: *wanted,
            ..self.clone()
        })
    }

    /// Generation test by linear algebra over GF(2): the masks must be
    /// independent and some pair must anticommute (always true here) so that
    /// `-1` is reachable.
    pub fn masks_independent(&self) -> bool {
        gf2_rank(self.members.iter().map(|m| m.mask().bits())) == 5
    }

    pub fn mask_parity(&self) -> Mask {
        self.members
            .iter()
            .fold(Mask::EMPTY, |acc, m| acc.symmetric_difference(m.mask()))
    }

    pub fn json(&self) -> PentadJson {
        PentadJson {
            members: self.members.iter().map(|m| m.to_string()).collect(),
            signature: self.signature.map(Sign::to_i8).to_vec(),
            generates: self.generates_full_group,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PentadJson {
    pub members: Vec<String>,
    pub signature: Vec<i8>,
    pub generates: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PentadSearchJson {
    pub level: u32,
    pub max_set: usize,
    pub pentads: Vec<PentadJson>,
}

pub fn search_json(level: u32, pentads: &[Pentad]) -> Result<PentadSearchJson> {
    Ok(PentadSearchJson {
        level,
        max_set: max_anticommuting_set_size(level)?,
        pentads: pentads.iter().map(Pentad::json).collect(),
    })
}

/// Order of the subgroup generated by `gens` (signs included), by closure.
pub fn closure_order(gens: &[Monomial]) -> usize {
    let mut seen: HashSet<Monomial> = HashSet::from([Monomial::ONE]);
    let mut frontier = vec![Monomial::ONE];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = x * g;
            if seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    seen.len()
}

fn gf2_rank<I: IntoIterator<Item = u32>>(rows: I) -> usize {
    let mut basis: Vec<u32> = Vec::new();
    for mut r in rows {
        for &b in &basis {
            r = r.min(r ^ b);
        }
        if r != 0 {
            basis.push(r);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

/// Every 5-clique at `level` as a [`Pentad`]. With a filter, only pentads
/// whose squares match it (as a multiset) are kept, and their members are
/// arranged to read the filter in order. Output order is deterministic.
pub fn find_pentads(level: u32, signature_filter: Option<&Signature>) -> Result<Vec<Pentad>> {
    let graph = AnticommutationGraph::new(level)?;
    graph
        .cliques_of_size(5)
        .into_iter()
        .map(|masks| {
            let members: [Monomial; 5] = std::array::from_fn(|n| Monomial::positive(masks[n]));
            Pentad::new(level, members)
        })
        .filter_map(|p| match (p, signature_filter) {
            (Err(e), _) => Some(Err(e)),
            (Ok(p), None) => Some(Ok(p)),
            (Ok(p), Some(f)) => p.arranged(f).map(Ok),
        })
        .collect()
}

/// A pentad spelled with the scalar/pseudoscalar/quaternion/vector units of
/// the order-64 group, as `k, x·𝐢, x·𝐣, x·𝐤, ι·j` for a chosen prefix `x`.
#[derive(Clone, Debug, Serialize)]
pub struct SymbolicPentadReading {
    pub prefix: &'static str,
    pub members: Vec<Monomial>,
    pub anticommuting_pairs: usize,
    pub squares: Vec<i8>,
}

/// The written gamma set `k, i𝐢, i𝐣, i𝐤, ij` under the two possible
/// meanings of the bare `i` in front of the vector units: the pseudoscalar
/// `ι` or the quaternion unit `i`. The trailing `ij` is read as `ι·j`.
pub fn symbolic_gamma_readings() -> Result<Vec<SymbolicPentadReading>> {
    let roles = crate::group::classify_units(5)?;
    let iota = roles.pseudoscalar()?;
    let [qi, qj, qk] = roles.quaternions[0];
    let vectors = roles
        .vectors
        .ok_or_else(|| Error::Precondition("level 5 has no vector triple".into()))?;
    let reading = |prefix: &'static str, x: Monomial| {
        let members: Vec<Monomial> = std::iter::once(qk)
            .chain(vectors.iter().map(|&v| x * v))
            .chain(std::iter::once(iota * qj))
            .collect();
        let mut pairs = 0;
        for (n, a) in members.iter().enumerate() {
            pairs += members[n + 1..]
                .iter()
                .filter(|b| a.anticommutes(**b))
                .count();
        }
        SymbolicPentadReading {
            prefix,
            squares: members.iter().map(|m| m.square_sign().to_i8()).collect(),
            members,
            anticommuting_pairs: pairs,
        }
    };
    Ok(vec![
        reading("pseudoscalar", iota),
        reading("quaternion-i", qi),
    ])
}
