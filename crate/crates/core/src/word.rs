//! Alphabets, words and the two reflected Gray code orders.
//!
//! Contracts use 1-indexed positions; storage is an ordinary 0-indexed slice.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Deref;
use core::str::FromStr;

use crate::error::{Error, Result};

pub type Symbol = u16;

/// Largest supported alphabet: every symbol must fit in a [`Symbol`].
pub const MAX_Q: u32 = 1 << 16;

/// The alphabet `{0, 1, ..., q-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet(u32);

impl Alphabet {
    pub fn new(q: u32) -> Result<Self> {
        if (2..=MAX_Q).contains(&q) {
            Ok(Alphabet(q))
        } else {
            Err(Error::AlphabetSize(q))
        }
    }

    #[inline]
    pub fn q(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_even(self) -> bool {
        self.0.is_multiple_of(2)
    }

    /// The largest symbol, `q - 1`.
    #[inline]
    pub fn max_symbol(self) -> Symbol {
        (self.0 - 1) as Symbol
    }

    /// Checks that every symbol of `w` is below `q`.
    pub fn check(self, w: &[Symbol]) -> Result<()> {
        match w.iter().position(|&s| u32::from(s) >= self.0) {
            Some(position) => Err(Error::SymbolOutOfRange {
                symbol: u32::from(w[position]),
                position: position + 1,
                q: self.0,
            }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A_{}", self.0)
    }
}

/// A finite word over some alphabet. The alphabet is not stored; callers
/// validate against an [`Alphabet`] where it matters.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn repeat(symbol: Symbol, n: usize) -> Self {
        Word(alloc::vec![symbol; n])
    }

    pub fn as_slice(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Symbol> {
        self.0
    }

    /// Does `factor` occur as a contiguous block of `self`?
    pub fn contains_factor(&self, factor: &[Symbol]) -> bool {
        !factor.is_empty() && self.0.windows(factor.len()).any(|w| w == factor)
    }

    /// Symbols joined by `sep`, without any packing.
    pub fn to_separated(&self, sep: &str) -> String {
        use core::fmt::Write;
        let mut out = String::with_capacity(self.0.len() * 2);
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                out.push_str(sep);
            }
            let _ = write!(out, "{}", s);
        }
        out
    }
}

impl Deref for Word {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

impl From<&[Symbol]> for Word {
    fn from(v: &[Symbol]) -> Self {
        Word(v.to_vec())
    }
}

/// Packed digits when every symbol is a single decimal digit, otherwise
/// comma-separated decimals.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&s| s < 10) {
            for s in &self.0 {
                write!(f, "{}", s)?;
            }
            Ok(())
        } else {
            f.write_str(&self.to_separated(","))
        }
    }
}

/// Accepts either packed digits (`"0120"`) or comma-separated decimals
/// (`"0,1,12,0"`). Whitespace around items is ignored.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.contains(',') {
            s.split(',')
                .map(|item| {
                    item.trim()
                        .parse::<Symbol>()
                        .map_err(|_| Error::Parse("expected decimal symbols separated by ','"))
                })
                .collect::<Result<Vec<_>>>()
                .map(Word)
        } else {
            s.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as Symbol)
                        .ok_or(Error::Parse("expected packed decimal digits"))
                })
                .collect::<Result<Vec<_>>>()
                .map(Word)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    #[inline]
    pub fn from_bit(bit: u8) -> Self {
        if bit & 1 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    #[inline]
    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

/// How a prefix contributes to the direction bit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParityRule {
    /// Parity of the symbol sum (the `≺` order).
    SumOnly,
    /// Parity of the symbol sum plus the number of non-zero symbols (`◁`).
    SumPlusNonzero,
}

impl ParityRule {
    /// Parity bit contributed by a single symbol.
    #[inline]
    pub fn contribution(self, s: Symbol) -> u8 {
        let sum = (s & 1) as u8;
        match self {
            ParityRule::SumOnly => sum,
            ParityRule::SumPlusNonzero => sum ^ (s != 0) as u8,
        }
    }

    pub fn parity_of(self, w: &[Symbol]) -> Parity {
        Parity::from_bit(w.iter().fold(0u8, |acc, &s| acc ^ self.contribution(s)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Reflected Gray Code order, `≺`.
    Rgc,
    /// Dual Reflected Gray Code order, `◁`.
    DualRgc,
}

impl OrderKind {
    /// `≺` for even q, `◁` for odd q.
    pub fn natural(q: Alphabet) -> Self {
        if q.is_even() {
            OrderKind::Rgc
        } else {
            OrderKind::DualRgc
        }
    }

    pub fn parity_rule(self) -> ParityRule {
        match self {
            OrderKind::Rgc => ParityRule::SumOnly,
            OrderKind::DualRgc => ParityRule::SumPlusNonzero,
        }
    }

    pub fn compare(self, s: &[Symbol], t: &[Symbol]) -> Result<Ordering> {
        cmp_reflected(s, t, self.parity_rule())
    }

    pub fn symbol(self) -> &'static str {
        match self {
            OrderKind::Rgc => "≺",
            OrderKind::DualRgc => "◁",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Rgc => "rgc",
            OrderKind::DualRgc => "dual",
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parity of `w` with the rule fixed by the parity of `q`.
pub fn parity(w: &[Symbol], q: Alphabet) -> Result<Parity> {
    q.check(w)?;
    Ok(OrderKind::natural(q).parity_rule().parity_of(w))
}

fn same_length(s: &[Symbol], t: &[Symbol]) -> Result<()> {
    if s.len() == t.len() {
        Ok(())
    } else {
        Err(Error::LengthMismatch {
            left: s.len(),
            right: t.len(),
        })
    }
}

fn cmp_reflected(s: &[Symbol], t: &[Symbol], rule: ParityRule) -> Result<Ordering> {
    same_length(s, t)?;
    let mut odd = 0u8;
    for (&a, &b) in s.iter().zip(t) {
        if a != b {
            let o = a.cmp(&b);
            return Ok(if odd == 1 { o.reverse() } else { o });
        }
        odd ^= rule.contribution(a);
    }
    Ok(Ordering::Equal)
}

/// Compare in `≺` order: at the leftmost difference the smaller symbol wins
/// unless the common prefix has odd sum.
pub fn cmp_rgc(s: &[Symbol], t: &[Symbol]) -> Result<Ordering> {
    cmp_reflected(s, t, ParityRule::SumOnly)
}

/// Compare in `◁` order: as [`cmp_rgc`] but keyed on sum plus non-zero count.
pub fn cmp_dual_rgc(s: &[Symbol], t: &[Symbol]) -> Result<Ordering> {
    cmp_reflected(s, t, ParityRule::SumPlusNonzero)
}

pub fn hamming(s: &[Symbol], t: &[Symbol]) -> Result<usize> {
    same_length(s, t)?;
    Ok(s.iter().zip(t).filter(|(a, b)| a != b).count())
}

/// Rightmost minus leftmost differing position. A list is e-close iff every
/// adjacent pair has span at most e.
pub fn diff_span(s: &[Symbol], t: &[Symbol]) -> Result<usize> {
    same_length(s, t)?;
    let first = s.iter().zip(t).position(|(a, b)| a != b);
    let last = s.iter().zip(t).rposition(|(a, b)| a != b);
    match (first, last) {
        (Some(i), Some(j)) => Ok(j - i),
        _ => Err(Error::IdenticalWords),
    }
}

pub fn reverse(w: &[Symbol]) -> Word {
    Word(w.iter().rev().copied().collect())
}

/// Binary complement, 0 <-> 1.
pub fn complement(w: &[Symbol], q: Alphabet) -> Result<Word> {
    if q.q() != 2 {
        return Err(Error::ComplementNeedsBinary(q.q()));
    }
    q.check(w)?;
    Ok(Word(w.iter().map(|&s| 1 - s).collect()))
}
