//! The create/conserve rewrite system over subset alphabets.
//!
//! The object being rewritten is an alphabet. `create` appends a symbol;
//! `conserve` inspects every ordered pair of symbols and flags the ones that
//! do not cancel back to zero. Off-diagonal transitions cancel in conjugate
//! pairs, the newest symbol's self-transition never does, so every
//! `conserve` on a non-trivial alphabet demands another `create`. The loop
//! never stops on its own; [`run`] halts after a fixed number of steps.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::{Catalog, GroupLevel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Zero,
    /// Every character at once; the result of the recursive create.
    Every,
    /// The n-th iteratively created symbol, counting from 1.
    Created(u32),
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Zero => f.write_str("0"),
            Symbol::Every => f.write_str("E"),
            Symbol::Created(n) => write!(f, "A{n}"),
        }
    }
}

impl Serialize for Symbol {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct SubsetAlphabet {
    symbols: Vec<Symbol>,
}

impl SubsetAlphabet {
    /// The ü-state `{0}`.
    pub fn initial() -> Self {
        SubsetAlphabet {
            symbols: vec![Symbol::Zero],
        }
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.symbols.contains(&s)
    }

    pub fn is_initial(&self) -> bool {
        self.symbols == [Symbol::Zero]
    }

    /// Number of iteratively created symbols.
    pub fn created(&self) -> u32 {
        self.symbols
            .iter()
            .filter(|s| matches!(s, Symbol::Created(_)))
            .count() as u32
    }

    /// The one-step recursive create, `{0} → {0, E}`. Only the ü-state can be
    /// refined this way.
    pub fn create_recursive(&self) -> Result<Self> {
        if !self.is_initial() {
            return Err(Error::InvalidMode(format!(
                "recursive create needs the initial state {{0}}, got {self}"
            )));
        }
        Ok(SubsetAlphabet {
            symbols: vec![Symbol::Zero, Symbol::Every],
        })
    }

    pub fn create_iterative(&self) -> Result<Self> {
        if self.contains(Symbol::Every) {
            return Err(Error::InvalidMode(
                "cannot iterate on an alphabet holding the recursive symbol E".into(),
            ));
        }
        let mut symbols = self.symbols.clone();
        symbols.push(Symbol::Created(self.created() + 1));
        Ok(SubsetAlphabet { symbols })
    }

    pub fn conserve(&self) -> (TransitionTable, Verdict) {
        let table = TransitionTable::classify(self);
        let verdict = if table.novel_cells() > 0 {
            Verdict::RequiresCreate
        } else {
            Verdict::Consistent
        };
        (table, verdict)
    }
}

impl fmt::Display for SubsetAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, s) in self.symbols.iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("}")
    }
}

pub fn initial_state() -> SubsetAlphabet {
    SubsetAlphabet::initial()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CellClass {
    ZeroZero,
    ConjugatePair,
    NovelDiagonal,
    BalancedDiagonal,
}

impl CellClass {
    pub fn as_str(self) -> &'static str {
        match self {
            CellClass::ZeroZero => "00",
            CellClass::ConjugatePair => "conj",
            CellClass::NovelDiagonal => "novel",
            CellClass::BalancedDiagonal => "balanced",
        }
    }
}

impl Serialize for CellClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Consistent,
    RequiresCreate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionTable {
    cells: Vec<Vec<CellClass>>,
}

impl TransitionTable {
    fn classify(alphabet: &SubsetAlphabet) -> Self {
        let n = alphabet.len();
        let cells = (0..n)
            .map(|row| {
                (0..n)
                    .map(|col| match (row, col) {
                        (0, 0) => CellClass::ZeroZero,
                        (r, c) if r != c => CellClass::ConjugatePair,
                        // the newest symbol is the last one
                        (r, _) if r == n - 1 => CellClass::NovelDiagonal,
                        _ => CellClass::BalancedDiagonal,
                    })
                    .collect()
            })
            .collect();
        TransitionTable { cells }
    }

    /// Number of rows (equal to the alphabet size).
    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn cell_count(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    pub fn class(&self, row: usize, col: usize) -> CellClass {
        self.cells[row][col]
    }

    pub fn rows(&self) -> &[Vec<CellClass>] {
        &self.cells
    }

    fn count(&self, class: CellClass) -> usize {
        self.cells.iter().flatten().filter(|&&c| c == class).count()
    }

    /// Unordered `{XY, YX}` pairs that cancel each other.
    pub fn cancelling_pairs(&self) -> usize {
        self.count(CellClass::ConjugatePair) / 2
    }

    pub fn novel_cells(&self) -> usize {
        self.count(CellClass::NovelDiagonal)
    }
}

impl Serialize for TransitionTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.cells.serialize(s)
    }
}

pub fn conserve(state: &SubsetAlphabet) -> (TransitionTable, Verdict) {
    state.conserve()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProcessLabel {
    Conjugation,
    Complexification,
    Dimensionalization,
    Repetition,
}

impl ProcessLabel {
    pub fn for_step(step: u32) -> Self {
        match step {
            0 | 1 => ProcessLabel::Conjugation,
            2 => ProcessLabel::Complexification,
            3 => ProcessLabel::Dimensionalization,
            _ => ProcessLabel::Repetition,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Action {
    Created,
    Halted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub step: u32,
    pub label: ProcessLabel,
    pub alphabet: SubsetAlphabet,
    pub table: TransitionTable,
    pub verdict: Verdict,
    pub action: Action,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RewriteTrace {
    pub steps: Vec<TraceStep>,
}

impl RewriteTrace {
    pub fn final_alphabet(&self) -> &SubsetAlphabet {
        &self
            .steps
            .last()
            .expect("a trace has at least one step")
            .alphabet
    }

    pub fn labels(&self) -> Vec<ProcessLabel> {
        self.steps.iter().map(|s| s.label).collect()
    }
}

/// Alternates create and conserve from the ü-state for `max_steps` steps.
///
/// Step `k` records the alphabet after the k-th create (so `k + 1` symbols)
/// together with its transition table. The last step is marked halted.
pub fn run(max_steps: u32) -> Result<RewriteTrace> {
    if max_steps == 0 {
        return Err(Error::Usage("max_steps must be at least 1".into()));
    }
    let mut state = SubsetAlphabet::initial();
    let mut steps = Vec::with_capacity(max_steps as usize);
    for step in 1..=max_steps {
        state = state.create_iterative()?;
        let (table, verdict) = state.conserve();
        steps.push(TraceStep {
            step,
            label: ProcessLabel::for_step(step),
            alphabet: state.clone(),
            table,
            verdict,
            action: if step < max_steps {
                Action::Created
            } else {
                Action::Halted
            },
        });
    }
    Ok(RewriteTrace { steps })
}

/// Step `k` has `k` created symbols and corresponds to the group on `k - 1`
/// generators, of order `2^k`.
pub fn map_to_group(step: u32) -> Result<GroupLevel> {
    map_to_group_with(&Catalog::default(), step)
}

pub fn map_to_group_with(catalog: &Catalog, step: u32) -> Result<GroupLevel> {
    if step == 0 {
        return Err(Error::Precondition("step ordinals start at 1".into()));
    }
    catalog.enumerate(step - 1)
}
