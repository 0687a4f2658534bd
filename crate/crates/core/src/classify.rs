//! Classification of a forbidden factor.
//!
//! The factors that fail to induce zero periodicity are exactly the members of
//! three families, each built from a left-infinite periodic word:
//!
//! * `U_q` (even q): `b·0` with `b` a suffix of `(1 (q-1) 0^m)^{-∞}`,
//! * `V` (odd q): `b·0` with `b` a suffix of `(1 0^m)^{-∞}`,
//! * `W_q` (q ≥ 3): `(q-2)^j (q-1)`.
//!
//! Everything else yields a bounded-distance listing in the natural order
//! (`≺` for even q, `◁` for odd q). Two members of `U_q`, `0^ℓ` and
//! `(q-1)0^ℓ`, are still 1-Gray under `≺`. The rest are rescued by the symbol
//! swap [`phi`].

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::word::{Alphabet, OrderKind, Symbol, Word};

/// A nonempty word designated as the pattern to avoid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ForbiddenFactor {
    word: Word,
    zero_suffix_len: usize,
}

impl ForbiddenFactor {
    pub fn new(word: Word) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::EmptyFactor);
        }
        let zero_suffix_len = word.iter().rev().take_while(|&&s| s == 0).count();
        Ok(ForbiddenFactor {
            word,
            zero_suffix_len,
        })
    }

    /// Like [`ForbiddenFactor::new`], also checking every symbol against `q`.
    pub fn over(word: Word, q: Alphabet) -> Result<Self> {
        q.check(&word)?;
        Self::new(word)
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.word
    }

    /// `ℓ`.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Length of the maximal all-zero suffix.
    pub fn zero_suffix_len(&self) -> usize {
        self.zero_suffix_len
    }

    pub fn last_symbol(&self) -> Symbol {
        self.word[self.word.len() - 1]
    }

    pub fn is_zero_run(&self) -> bool {
        self.zero_suffix_len == self.word.len()
    }

    /// `(q-1) 0^k` with `k >= 1`.
    pub fn is_max_then_zeros(&self, q: Alphabet) -> bool {
        self.len() >= 2 && self.word[0] == q.max_symbol() && self.zero_suffix_len == self.len() - 1
    }

    /// The binary factors `0^{ℓ-1}1` and `1^{ℓ-1}0` whose generation tree has
    /// chains of degree-one calls.
    pub fn is_binary_chain(&self, q: Alphabet) -> bool {
        if q.q() != 2 || self.len() < 2 {
            return false;
        }
        let (head, last) = self.word.split_at(self.len() - 1);
        head.iter().all(|&s| s != last[0])
    }
}

impl fmt::Display for ForbiddenFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}

/// Is `b` a suffix of the left-infinite word `period^{-∞}`?
fn suffix_of_left_periodic(b: &[Symbol], period: &[Symbol]) -> bool {
    let p = period.len();
    b.iter()
        .rev()
        .enumerate()
        .all(|(t, &s)| s == period[p - 1 - t % p])
}

/// Smallest `m` for which `f = b·0` with `b` a suffix of `(head 0^m)^{-∞}`.
fn smallest_zero_padded_period(f: &[Symbol], head: &[Symbol]) -> Option<usize> {
    let (&last, b) = f.split_last()?;
    if last != 0 {
        return None;
    }
    // Any m >= |b| only constrains b to be all zeros, same as m = |b|.
    let mut period = head.to_vec();
    for m in 0..=b.len() {
        if m > 0 {
            period.push(0);
        }
        if suffix_of_left_periodic(b, &period) {
            return Some(m);
        }
    }
    None
}

/// Membership in `U_q`, returning the smallest witnessing `m`.
pub fn in_u(f: &ForbiddenFactor, q: Alphabet) -> Option<usize> {
    smallest_zero_padded_period(f.symbols(), &[1, q.max_symbol()])
}

/// Membership in `V` (alphabet independent), returning the smallest `m`.
pub fn in_v(f: &ForbiddenFactor) -> Option<usize> {
    smallest_zero_padded_period(f.symbols(), &[1])
}

/// Membership in `W_q = {(q-2)^j (q-1)}`; always false for q = 2.
pub fn in_w(f: &ForbiddenFactor, q: Alphabet) -> bool {
    if q.q() < 3 {
        return false;
    }
    let max = q.max_symbol();
    let (&last, head) = f.symbols().split_last().expect("factor is nonempty");
    last == max && head.iter().all(|&s| s == max - 1)
}

/// Whether every factor-free prefix has first and last infinite
/// continuations (in the natural order) ending in `0^∞`.
pub fn induces_zero_periodicity(f: &ForbiddenFactor, q: Alphabet) -> bool {
    let last = f.last_symbol();
    if last != 0 && last != q.max_symbol() {
        return true;
    }
    match q.q() {
        2 => in_u(f, q).is_none(),
        _ if q.is_even() => in_u(f, q).is_none() && !in_w(f, q),
        _ => in_v(f).is_none() && !in_w(f, q),
    }
}

/// Non-zero ultimate periods that extreme continuations can have. Empty
/// exactly when `f` induces zero periodicity; the period `0` itself is not
/// listed.
pub fn nonzero_period_profile(f: &ForbiddenFactor, q: Alphabet) -> Vec<Word> {
    if induces_zero_periodicity(f, q) {
        return Vec::new();
    }
    if in_w(f, q) {
        return alloc::vec![Word::new(alloc::vec![q.max_symbol() - 1])];
    }
    let (head, m): (&[Symbol], usize) = if q.is_even() {
        (
            &[1, q.max_symbol()],
            in_u(f, q).expect("non zero-periodic end-0 factor is in U_q"),
        )
    } else {
        (
            &[1],
            in_v(f).expect("non zero-periodic end-0 factor is in V"),
        )
    };
    let mut period = head.to_vec();
    period.resize(head.len() + m, 0);
    alloc::vec![Word::new(period)]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Ends in neither `0` nor `q-1`.
    MidSymbol,
    /// Ends in `0`, zero-periodic.
    EndZero,
    /// Ends in `q-1` with q ≥ 3, zero-periodic.
    EndMax,
    /// q = 2 and ends in `1`; always zero-periodic.
    EndMaxBinary,
    /// `0^ℓ`.
    ZeroRun,
    /// `(q-1) 0^k`, q even, k ≥ 1.
    MaxThenZeros,
    /// Remaining members of `U_q` (q even).
    InU,
    /// Remaining members of `V` (q odd).
    InV,
    /// Members of `W_q` (q ≥ 3).
    InW,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::MidSymbol => "mid-symbol",
            Family::EndZero => "end-zero",
            Family::EndMax => "end-max",
            Family::EndMaxBinary => "end-max-binary",
            Family::ZeroRun => "zero-run",
            Family::MaxThenZeros => "max-then-zeros",
            Family::InU => "U_q",
            Family::InV => "V",
            Family::InW => "W_q",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub family: Family,
    /// The `m` of the `U_q` / `V` template, when `f` belongs to one of them.
    pub family_param: Option<usize>,
    pub induces_zero_periodicity: bool,
    pub nonzero_periods: Vec<Word>,
}

impl Classification {
    pub fn of(f: &ForbiddenFactor, q: Alphabet) -> Self {
        let max = q.max_symbol();
        let last = f.last_symbol();
        let template_m = if q.is_even() { in_u(f, q) } else { in_v(f) };
        let family = if f.is_zero_run() {
            Family::ZeroRun
        } else if q.is_even() && f.is_max_then_zeros(q) {
            Family::MaxThenZeros
        } else if last != 0 && last != max {
            Family::MidSymbol
        } else if last == 0 {
            match (template_m, q.is_even()) {
                (Some(_), true) => Family::InU,
                (Some(_), false) => Family::InV,
                (None, _) => Family::EndZero,
            }
        } else if q.q() == 2 {
            Family::EndMaxBinary
        } else if in_w(f, q) {
            Family::InW
        } else {
            Family::EndMax
        };
        Classification {
            family,
            family_param: template_m,
            induces_zero_periodicity: induces_zero_periodicity(f, q),
            nonzero_periods: nonzero_period_profile(f, q),
        }
    }
}

/// An eventually periodic infinite word `prefix · period^∞`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TailForm {
    pub prefix: Word,
    pub period: Word,
}

impl TailForm {
    pub fn new(prefix: Word, period: Word) -> Self {
        assert!(!period.is_empty(), "period must be nonempty");
        TailForm { prefix, period }
    }

    /// `r · 0^∞`.
    pub fn zero_tail(prefix: Word) -> Self {
        Self::new(prefix, Word::new(alloc::vec![0]))
    }

    pub fn symbol_at(&self, i: usize) -> Symbol {
        if i < self.prefix.len() {
            self.prefix[i]
        } else {
            let p = &self.period;
            p[(i - self.prefix.len()) % p.len()]
        }
    }

    /// The first `n` symbols.
    pub fn take(&self, n: usize) -> Word {
        Word::new((0..n).map(|i| self.symbol_at(i)).collect())
    }

    /// Is `w` the length-|w| prefix of this infinite word?
    pub fn starts(&self, w: &[Symbol]) -> bool {
        w.iter().enumerate().all(|(i, &s)| s == self.symbol_at(i))
    }
}

/// The shapes `r · 0^∞` that the first and last continuation of any
/// factor-free prefix can take when `f` induces zero periodicity. Empty
/// otherwise.
pub fn tail_templates(f: &ForbiddenFactor, q: Alphabet) -> Vec<TailForm> {
    if !induces_zero_periodicity(f, q) {
        return Vec::new();
    }
    let max = q.max_symbol();
    let zeros = f.zero_suffix_len();
    let last = f.last_symbol();
    let mut rs: Vec<Vec<Symbol>> = alloc::vec![alloc::vec![], alloc::vec![max]];
    if last == 0 {
        // 0^i 1 (q-1) and (q-1) 0^{ℓ0-1} 1 (q-1) for even q; drop the trailing
        // (q-1) for odd q.
        let tail: &[Symbol] = if q.is_even() { &[1, max] } else { &[1] };
        for i in 0..zeros {
            let mut r = alloc::vec![0; i];
            r.extend_from_slice(tail);
            rs.push(r);
        }
        let mut r = alloc::vec![max];
        r.resize(zeros, 0);
        r.extend_from_slice(tail);
        rs.push(r);
    } else if last == max {
        rs.push(alloc::vec![max - 1, max]);
    }
    rs.into_iter()
        .map(|r| TailForm::zero_tail(Word::new(r)))
        .collect()
}

/// Which symbol swap `φ` performs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PhiMode {
    /// `0 <-> 1`, for factors ending in `0`.
    End0,
    /// `(q-2) <-> (q-1)`, for factors ending in `q-1` (q ≥ 3).
    EndMax,
}

impl PhiMode {
    /// The swap that applies to `f`, if it ends in `0` or (for q ≥ 3) `q-1`.
    pub fn for_factor(f: &ForbiddenFactor, q: Alphabet) -> Option<Self> {
        let last = f.last_symbol();
        if last == 0 {
            Some(PhiMode::End0)
        } else if last == q.max_symbol() && q.q() >= 3 {
            Some(PhiMode::EndMax)
        } else {
            None
        }
    }

    pub fn check(self, q: Alphabet) -> Result<()> {
        match self {
            PhiMode::EndMax if q.q() < 3 => Err(Error::PhiNeedsTernary(q.q())),
            _ => Ok(()),
        }
    }

    /// The swap on a single symbol. The caller guarantees `check` passed.
    #[inline]
    pub fn map_symbol(self, s: Symbol, q: Alphabet) -> Symbol {
        let (a, b) = match self {
            PhiMode::End0 => (0, 1),
            PhiMode::EndMax => (q.max_symbol() - 1, q.max_symbol()),
        };
        if s == a {
            b
        } else if s == b {
            a
        } else {
            s
        }
    }
}

/// Symbolwise involution `φ`.
pub fn phi(w: &[Symbol], q: Alphabet, mode: PhiMode) -> Result<Word> {
    mode.check(q)?;
    q.check(w)?;
    Ok(Word::new(
        w.iter().map(|&s| mode.map_symbol(s, q)).collect(),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// List `A_q^n(f)` itself in the verdict's order.
    Direct,
    /// List `A_q^n(φ(f))`, then apply `φ` to every word.
    PhiConjugate,
    /// Binary chain factors: list `A_2^n(0 1^{ℓ-1})`, then reverse (and
    /// complement) every word.
    ReverseComplement,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Direct => "direct",
            Strategy::PhiConjugate => "phi",
            Strategy::ReverseComplement => "revcomp",
        }
    }
}

/// Whether the natural-order listing of `A_q^n(f)` is a Gray code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Graycodeness {
    Gray,
    /// Adjacent words differ in unboundedly many positions as n grows.
    NotGray,
    /// No established result either way; handled through `φ`.
    Unclaimed,
}

impl Graycodeness {
    pub fn name(self) -> &'static str {
        match self {
            Graycodeness::Gray => "yes",
            Graycodeness::NotGray => "no",
            Graycodeness::Unclaimed => "unclaimed",
        }
    }
}

/// Upper bounds on the adjacent-pair distance `d` and closeness `e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GrayBounds {
    pub distance: usize,
    pub closeness: usize,
}

impl GrayBounds {
    pub const fn new(distance: usize, closeness: usize) -> Self {
        GrayBounds {
            distance,
            closeness,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GrayVerdict {
    /// Order in which the natural listing is taken.
    pub order: OrderKind,
    pub natural: Graycodeness,
    /// Bounds that hold for the listing produced by `strategy`.
    pub bounds: Option<GrayBounds>,
    pub strategy: Strategy,
    /// Adjacent words differ in exactly one position, by ±1.
    pub one_gray: bool,
}

impl GrayVerdict {
    pub fn is_gray(&self) -> bool {
        self.natural == Graycodeness::Gray
    }

    fn direct(order: OrderKind, distance: usize, closeness: usize) -> Self {
        GrayVerdict {
            order,
            natural: Graycodeness::Gray,
            bounds: Some(GrayBounds::new(distance, closeness)),
            strategy: Strategy::Direct,
            one_gray: distance == 1,
        }
    }
}

pub fn gray_verdict(f: &ForbiddenFactor, q: Alphabet) -> GrayVerdict {
    let natural = OrderKind::natural(q);
    let class = Classification::of(f, q);
    match class.family {
        Family::ZeroRun | Family::MaxThenZeros => GrayVerdict::direct(OrderKind::Rgc, 1, 1),
        Family::MidSymbol => GrayVerdict::direct(natural, 2, 1),
        Family::EndZero => {
            let zeros = f.zero_suffix_len();
            let closeness = if q.is_even() { zeros + 2 } else { zeros + 1 };
            GrayVerdict::direct(natural, 3, closeness)
        }
        Family::EndMax | Family::EndMaxBinary => GrayVerdict::direct(natural, 3, 2),
        Family::InU | Family::InV | Family::InW => {
            let mode =
                PhiMode::for_factor(f, q).expect("non zero-periodic factors end in 0 or q-1");
            let image = phi(f.symbols(), q, mode).expect("factor symbols are below q");
            let image = ForbiddenFactor::new(image).expect("phi preserves length");
            let rescued = gray_verdict(&image, q);
            debug_assert_eq!(rescued.strategy, Strategy::Direct);
            let natural_status = if class.family == Family::InW && f.len() == 1 && q.is_even() {
                Graycodeness::Unclaimed
            } else {
                Graycodeness::NotGray
            };
            GrayVerdict {
                order: natural,
                natural: natural_status,
                bounds: rescued.bounds,
                strategy: Strategy::PhiConjugate,
                one_gray: false,
            }
        }
    }
}
