//! Ground truth by exhaustion, and adjacent-pair verification of listings.
//!
//! Nothing here touches the automaton or the generator: avoidance is a naive
//! window scan and ordering is either a comparison sort or a plain reflected
//! odometer over all of `A_q^n`.

use alloc::vec::Vec;

use crate::classify::{ForbiddenFactor, GrayBounds};
use crate::error::{Error, Result};
use crate::word::{diff_span, hamming, Alphabet, OrderKind, Symbol, Word};

/// Default cap on `q^n` for [`brute_force_list`].
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Default cap on `q^n` for the streaming scan in [`smallest_counterexample_n`].
pub const DEFAULT_SCAN_BUDGET: u64 = 1 << 26;

fn naive_contains(w: &[Symbol], f: &[Symbol]) -> bool {
    w.len() >= f.len() && w.windows(f.len()).any(|win| win == f)
}

fn check_budget(q: Alphabet, n: usize, budget: u64) -> Result<()> {
    let required = u32::try_from(n)
        .ok()
        .and_then(|n| u128::from(q.q()).checked_pow(n))
        .unwrap_or(u128::MAX);
    if required > u128::from(budget) {
        Err(Error::BudgetExceeded { required, budget })
    } else {
        Ok(())
    }
}

/// All of `A_q^n(f)`, sorted in `order` by comparison.
pub fn brute_force_list(
    f: &ForbiddenFactor,
    q: Alphabet,
    n: usize,
    order: OrderKind,
    budget: u64,
) -> Result<Vec<Word>> {
    q.check(f.symbols())?;
    check_budget(q, n, budget)?;
    let top = q.max_symbol();
    let mut w = alloc::vec![0 as Symbol; n];
    let mut out = Vec::new();
    loop {
        if !naive_contains(&w, f.symbols()) {
            out.push(Word::from(&w[..]));
        }
        // Lexicographic odometer.
        let Some(i) = w.iter().rposition(|&s| s != top) else {
            break;
        };
        w[i] += 1;
        w[i + 1..].iter_mut().for_each(|s| *s = 0);
    }
    out.sort_by(|a, b| order.compare(a, b).expect("equal lengths"));
    Ok(out)
}

/// Every word of `A_q^n` in `order`, by a reflected odometer: advance the
/// rightmost position that can still move in its direction, then reset the
/// suffix to its first completion.
pub struct ReflectedOdometer {
    word: Vec<Symbol>,
    top: Symbol,
    order: OrderKind,
    started: bool,
    done: bool,
}

impl ReflectedOdometer {
    pub fn new(q: Alphabet, n: usize, order: OrderKind) -> Self {
        ReflectedOdometer {
            word: alloc::vec![0; n],
            top: q.max_symbol(),
            order,
            started: false,
            done: false,
        }
    }

    pub fn next_word(&mut self) -> Option<&[Symbol]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.word);
        }
        let rule = self.order.parity_rule();
        let mut dirs = Vec::with_capacity(self.word.len());
        let mut d = 0u8;
        for &s in &self.word {
            dirs.push(d);
            d ^= rule.contribution(s);
        }
        let movable = (0..self.word.len()).rev().find(|&k| {
            if dirs[k] == 0 {
                self.word[k] < self.top
            } else {
                self.word[k] > 0
            }
        });
        let Some(k) = movable else {
            self.done = true;
            return None;
        };
        if dirs[k] == 0 {
            self.word[k] += 1;
        } else {
            self.word[k] -= 1;
        }
        let mut d = dirs[k] ^ rule.contribution(self.word[k]);
        for s in &mut self.word[k + 1..] {
            *s = if d == 0 { 0 } else { self.top };
            d ^= rule.contribution(*s);
        }
        Some(&self.word)
    }
}

/// Smallest n in `1..=cap` at which two adjacent words of `A_q^n(f)`, listed
/// in `order`, differ in more than `d` positions.
pub fn smallest_counterexample_n(
    f: &ForbiddenFactor,
    q: Alphabet,
    order: OrderKind,
    d: usize,
    cap: usize,
    budget: u64,
) -> Result<Option<usize>> {
    q.check(f.symbols())?;
    for n in 1..=cap {
        check_budget(q, n, budget)?;
        let mut odo = ReflectedOdometer::new(q, n, order);
        let mut prev: Option<Vec<Symbol>> = None;
        while let Some(w) = odo.next_word() {
            if naive_contains(w, f.symbols()) {
                continue;
            }
            if let Some(p) = &mut prev {
                if hamming(p, w)? > d {
                    return Ok(Some(n));
                }
                p.copy_from_slice(w);
            } else {
                prev = Some(w.to_vec());
            }
        }
    }
    Ok(None)
}

/// An adjacent pair `(index of the first word, first, second)`.
pub type Pair = (usize, Word, Word);

/// Adjacent-pair statistics and any violations found in a listing.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GrayReport {
    pub word_count: usize,
    pub max_hamming: usize,
    pub max_span: usize,
    pub worst_hamming: Option<Pair>,
    pub worst_span: Option<Pair>,
    pub claim: Option<GrayBounds>,
    /// Pairs exceeding the claimed distance or closeness.
    pub bound_violations: usize,
    pub first_bound_violation: Option<Pair>,
    /// Words containing the factor or using symbols outside the alphabet.
    pub avoidance_violations: usize,
    /// Adjacent pairs out of order, or equal.
    pub order_violations: usize,
    /// Pairs whose leftmost differing symbols are not one apart.
    pub step_violations: usize,
}

impl GrayReport {
    pub fn is_clean(&self) -> bool {
        self.bound_violations == 0
            && self.avoidance_violations == 0
            && self.order_violations == 0
            && self.step_violations == 0
    }
}

/// Checks every adjacent pair of `list`. Order and the leftmost ±1 step are
/// checked only when `order` is given and `f` ends in `0` or `q-1`.
pub fn verify(
    list: &[Word],
    claim: Option<GrayBounds>,
    f: Option<&ForbiddenFactor>,
    q: Alphabet,
    order: Option<OrderKind>,
) -> Result<GrayReport> {
    let first = list.first().ok_or(Error::EmptyList)?;
    let len = first.len();
    let mut report = GrayReport {
        word_count: list.len(),
        claim,
        ..GrayReport::default()
    };
    let step_order = order
        .filter(|_| f.is_none_or(|f| f.last_symbol() == 0 || f.last_symbol() == q.max_symbol()));
    for (index, w) in list.iter().enumerate() {
        if w.len() != len {
            return Err(Error::RaggedList {
                expected: len,
                found: w.len(),
                index,
            });
        }
        let bad_symbol = q.check(w).is_err();
        if bad_symbol || f.is_some_and(|f| naive_contains(w, f.symbols())) {
            report.avoidance_violations += 1;
        }
    }
    for (i, pair) in list.windows(2).enumerate() {
        let (a, b) = (&pair[0], &pair[1]);
        let pair = || (i, a.clone(), b.clone());
        if a == b {
            report.order_violations += 1;
            continue;
        }
        let h = hamming(a, b)?;
        let s = diff_span(a, b)?;
        if h > report.max_hamming {
            report.max_hamming = h;
            report.worst_hamming = Some(pair());
        }
        if s > report.max_span || report.worst_span.is_none() {
            report.max_span = s;
            report.worst_span = Some(pair());
        }
        if let Some(c) = claim {
            if h > c.distance || s > c.closeness {
                report.bound_violations += 1;
                report.first_bound_violation.get_or_insert_with(pair);
            }
        }
        if let Some(o) = order {
            if o.compare(a, b)? != core::cmp::Ordering::Less {
                report.order_violations += 1;
            }
        }
        if step_order.is_some() {
            let k = a
                .iter()
                .zip(b.iter())
                .position(|(x, y)| x != y)
                .expect("distinct");
            if a[k].abs_diff(b[k]) != 1 {
                report.step_violations += 1;
            }
        }
    }
    Ok(report)
}
