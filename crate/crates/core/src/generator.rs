//! Planning and enumeration of `A_q^n(f)`.
//!
//! The enumeration walks the prefix tree of factor-free words, visiting the
//! children of a node in increasing or decreasing symbol order depending on
//! the parity of the prefix. Only transitions of the KMP automaton into the
//! terminal state are cut, so every visited node has a descendant leaf.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::classify::{
    gray_verdict, phi, ForbiddenFactor, GrayBounds, GrayVerdict, PhiMode, Strategy,
};
use crate::error::{Error, Result};
use crate::matcher::TransitionTable;
use crate::word::{Alphabet, OrderKind, ParityRule, Symbol, Word};

/// A symbolwise or positional transformation applied to every emitted word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WordMap {
    Phi(PhiMode),
    Reverse,
    /// `0 <-> 1`; binary only.
    Complement,
}

impl WordMap {
    pub fn check(self, q: Alphabet) -> Result<()> {
        match self {
            WordMap::Phi(mode) => mode.check(q),
            WordMap::Complement if q.q() != 2 => Err(Error::ComplementNeedsBinary(q.q())),
            _ => Ok(()),
        }
    }

    /// In-place application; `check` must have passed.
    pub fn apply_in_place(self, w: &mut [Symbol], q: Alphabet) {
        match self {
            WordMap::Phi(mode) => w.iter_mut().for_each(|s| *s = mode.map_symbol(*s, q)),
            WordMap::Reverse => w.reverse(),
            WordMap::Complement => w.iter_mut().for_each(|s| *s ^= 1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            WordMap::Phi(PhiMode::End0) => "phi-end0",
            WordMap::Phi(PhiMode::EndMax) => "phi-endmax",
            WordMap::Reverse => "reverse",
            WordMap::Complement => "complement",
        }
    }
}

/// Maps every word of a stream.
pub fn apply_word_map<I>(words: I, map: WordMap, q: Alphabet) -> Result<impl Iterator<Item = Word>>
where
    I: IntoIterator<Item = Word>,
{
    map.check(q)?;
    Ok(words.into_iter().map(move |w| {
        let mut v = w.into_inner();
        map.apply_in_place(&mut v, q);
        Word::new(v)
    }))
}

/// Strategy as requested by a caller; `Auto` defers to the verdict.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum StrategyChoice {
    #[default]
    Auto,
    Direct,
    Phi,
    RevComp,
}

/// The two binary factors of length 2 with degree-one chains everywhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Staircase {
    /// `A_2^n(10) = {0^{n-k} 1^k}`.
    ZerosThenOnes,
    /// `A_2^n(01) = {1^k 0^{n-k}}`.
    OnesThenZeros,
}

/// Everything needed to emit a listing for one `(f, q)` pair, independent of n.
#[derive(Clone, Debug)]
pub struct GenerationPlan {
    alphabet: Alphabet,
    factor: Option<ForbiddenFactor>,
    verdict: Option<GrayVerdict>,
    strategy: Strategy,
    effective: Option<ForbiddenFactor>,
    table: Option<TransitionTable>,
    order: OrderKind,
    post_map: Vec<WordMap>,
    staircase: Option<Staircase>,
    bounds: Option<GrayBounds>,
    one_gray: bool,
}

/// Bounds of the direct listing of `f` in `order`, if its verdict covers it.
fn direct_bounds(f: &ForbiddenFactor, q: Alphabet, order: OrderKind) -> (Option<GrayBounds>, bool) {
    let v = gray_verdict(f, q);
    if v.strategy == Strategy::Direct && v.order == order {
        (v.bounds, v.one_gray)
    } else {
        (None, false)
    }
}

fn unavailable(strategy: Strategy) -> Error {
    Error::StrategyUnavailable {
        strategy: strategy.name(),
    }
}

/// Chooses order, strategy and post-maps for avoiding `f` over `q`.
pub fn plan(
    f: &ForbiddenFactor,
    q: Alphabet,
    order_override: Option<OrderKind>,
    choice: StrategyChoice,
) -> Result<GenerationPlan> {
    q.check(f.symbols())?;
    let verdict = gray_verdict(f, q);
    let strategy = match choice {
        StrategyChoice::Auto if q.q() == 2 && f.len() >= 3 && f.is_binary_chain(q) => {
            Strategy::ReverseComplement
        }
        StrategyChoice::Auto => verdict.strategy,
        StrategyChoice::Direct => Strategy::Direct,
        StrategyChoice::Phi => Strategy::PhiConjugate,
        StrategyChoice::RevComp => Strategy::ReverseComplement,
    };

    let (effective, post_map) = match strategy {
        Strategy::Direct => (f.clone(), Vec::new()),
        Strategy::PhiConjugate => {
            let mode = PhiMode::for_factor(f, q).ok_or(unavailable(strategy))?;
            let image = ForbiddenFactor::new(phi(f.symbols(), q, mode)?)?;
            (image, alloc::vec![WordMap::Phi(mode)])
        }
        Strategy::ReverseComplement => {
            let chain = f.len() == 1 || f.is_binary_chain(q);
            if q.q() != 2 || !chain {
                return Err(unavailable(strategy));
            }
            let mut base = alloc::vec![1; f.len()];
            base[0] = 0;
            let maps = if f.last_symbol() == 0 {
                alloc::vec![WordMap::Reverse]
            } else {
                alloc::vec![WordMap::Reverse, WordMap::Complement]
            };
            (ForbiddenFactor::new(Word::new(base))?, maps)
        }
    };

    let order = order_override.unwrap_or_else(|| gray_verdict(&effective, q).order);
    let (bounds, one_gray) = direct_bounds(&effective, q, order);
    let staircase = match (choice, order, q.q(), f.symbols()) {
        (StrategyChoice::Auto, OrderKind::Rgc, 2, [1, 0]) => Some(Staircase::ZerosThenOnes),
        (StrategyChoice::Auto, OrderKind::Rgc, 2, [0, 1]) => Some(Staircase::OnesThenZeros),
        _ => None,
    };
    let table = TransitionTable::new(effective.symbols(), q)?;
    Ok(GenerationPlan {
        alphabet: q,
        factor: Some(f.clone()),
        verdict: Some(verdict),
        strategy,
        effective: Some(effective),
        table: Some(table),
        order,
        post_map,
        staircase,
        bounds,
        one_gray,
    })
}

/// Plan for listing all of `A_q^n` with no factor removed.
pub fn plan_unrestricted(q: Alphabet, order_override: Option<OrderKind>) -> GenerationPlan {
    let order = order_override.unwrap_or(OrderKind::natural(q));
    let (bounds, one_gray) = match order {
        OrderKind::Rgc => (Some(GrayBounds::new(1, 1)), true),
        OrderKind::DualRgc if !q.is_even() => (Some(GrayBounds::new(2, 1)), false),
        OrderKind::DualRgc => (None, false),
    };
    GenerationPlan {
        alphabet: q,
        factor: None,
        verdict: None,
        strategy: Strategy::Direct,
        effective: None,
        table: None,
        order,
        post_map: Vec::new(),
        staircase: None,
        bounds,
        one_gray,
    }
}

impl GenerationPlan {
    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn factor(&self) -> Option<&ForbiddenFactor> {
        self.factor.as_ref()
    }

    /// Verdict for the requested factor (not for the effective one).
    pub fn verdict(&self) -> Option<&GrayVerdict> {
        self.verdict.as_ref()
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    /// The factor whose tree is actually walked.
    pub fn effective_factor(&self) -> Option<&ForbiddenFactor> {
        self.effective.as_ref()
    }

    pub fn table(&self) -> Option<&TransitionTable> {
        self.table.as_ref()
    }

    /// Order of the walked tree, before any post-map.
    pub fn order(&self) -> OrderKind {
        self.order
    }

    pub fn post_map(&self) -> &[WordMap] {
        &self.post_map
    }

    pub fn uses_staircase(&self) -> bool {
        self.staircase.is_some()
    }

    /// Bounds guaranteed for the emitted list; `None` when not Gray.
    pub fn bounds(&self) -> Option<GrayBounds> {
        self.bounds
    }

    pub fn is_one_gray(&self) -> bool {
        self.one_gray
    }

    /// Whether the emitted list is the requested set sorted in [`Self::order`].
    pub fn emits_sorted(&self) -> bool {
        self.post_map.is_empty()
    }

    pub fn generate(&self, n: usize) -> Generator<'_> {
        let source = match self.staircase {
            Some(kind) => Source::Staircase(StairWalk { kind, n, step: 0 }),
            None => Source::Tree(TreeWalk::new(
                self.table.as_ref(),
                self.alphabet,
                n,
                self.order.parity_rule(),
            )),
        };
        Generator {
            plan: self,
            source,
            out: Vec::with_capacity(n),
        }
    }
}

/// Streaming enumeration; reuses one buffer, so prefer [`Generator::next_word`]
/// over the allocating `Iterator` impl in hot loops.
pub struct Generator<'a> {
    plan: &'a GenerationPlan,
    source: Source<'a>,
    out: Vec<Symbol>,
}

enum Source<'a> {
    Tree(TreeWalk<'a>),
    Staircase(StairWalk),
}

impl<'a> Generator<'a> {
    pub fn next_word(&mut self) -> Option<&[Symbol]> {
        let q = self.plan.alphabet;
        let raw = match &mut self.source {
            Source::Tree(t) => t.next_raw()?,
            Source::Staircase(s) => {
                s.fill(&mut self.out)?;
                return Some(&self.out);
            }
        };
        self.out.clear();
        self.out.extend_from_slice(raw);
        for map in &self.plan.post_map {
            map.apply_in_place(&mut self.out, q);
        }
        Some(&self.out)
    }

    /// Tree nodes visited so far: the root plus every accepted child. For the
    /// staircase source, one per emitted word.
    pub fn nodes_visited(&self) -> u64 {
        match &self.source {
            Source::Tree(t) => t.nodes,
            Source::Staircase(s) => s.step as u64,
        }
    }
}

impl Iterator for Generator<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        self.next_word().map(Word::from)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Phase {
    Fresh,
    Running,
    Done,
}

/// Iterative depth-first walk with explicit per-depth direction, automaton
/// state and child cursor.
struct TreeWalk<'a> {
    table: Option<&'a TransitionTable>,
    q: u32,
    n: usize,
    rule: ParityRule,
    word: Vec<Symbol>,
    dir: Vec<u8>,
    state: Vec<u32>,
    cursor: Vec<u32>,
    depth: usize,
    phase: Phase,
    nodes: u64,
}

impl<'a> TreeWalk<'a> {
    fn new(table: Option<&'a TransitionTable>, q: Alphabet, n: usize, rule: ParityRule) -> Self {
        TreeWalk {
            table,
            q: q.q(),
            n,
            rule,
            word: alloc::vec![0; n],
            dir: alloc::vec![0; n + 1],
            state: alloc::vec![0; n + 1],
            cursor: alloc::vec![0; n + 1],
            depth: 0,
            phase: Phase::Fresh,
            nodes: 0,
        }
    }

    fn next_raw(&mut self) -> Option<&[Symbol]> {
        match self.phase {
            Phase::Done => return None,
            Phase::Fresh => {
                self.nodes = 1;
                if self.n == 0 {
                    self.phase = Phase::Done;
                    return Some(&self.word);
                }
                self.phase = Phase::Running;
            }
            Phase::Running => {}
        }
        loop {
            let k = self.depth;
            let t = self.cursor[k];
            if t == self.q {
                if k == 0 {
                    self.phase = Phase::Done;
                    return None;
                }
                self.depth -= 1;
                continue;
            }
            self.cursor[k] = t + 1;
            let j = if self.dir[k] == 0 { t } else { self.q - 1 - t } as Symbol;
            let h = match self.table {
                Some(m) => {
                    let h = m.step(self.state[k] as usize, j);
                    if h == m.factor_len() {
                        continue;
                    }
                    h as u32
                }
                None => 0,
            };
            self.word[k] = j;
            self.nodes += 1;
            if k + 1 == self.n {
                return Some(&self.word);
            }
            self.dir[k + 1] = self.dir[k] ^ self.rule.contribution(j);
            self.state[k + 1] = h;
            self.cursor[k + 1] = 0;
            self.depth = k + 1;
        }
    }
}

struct StairWalk {
    kind: Staircase,
    n: usize,
    step: usize,
}

impl StairWalk {
    fn fill(&mut self, out: &mut Vec<Symbol>) -> Option<()> {
        if self.step > self.n {
            return None;
        }
        let n = self.n;
        let ones = match self.kind {
            Staircase::ZerosThenOnes => self.step,
            // Even counts ascending, then odd counts descending.
            Staircase::OnesThenZeros => {
                let evens = n / 2 + 1;
                if self.step < evens {
                    2 * self.step
                } else {
                    let largest_odd = if n % 2 == 1 { n } else { n - 1 };
                    largest_odd - 2 * (self.step - evens)
                }
            }
        };
        out.clear();
        match self.kind {
            Staircase::ZerosThenOnes => {
                out.resize(n - ones, 0);
                out.resize(n, 1);
            }
            Staircase::OnesThenZeros => {
                out.resize(ones, 1);
                out.resize(n, 0);
            }
        }
        self.step += 1;
        Some(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Extreme {
    First,
    Last,
}

/// The first or last length-n word of `A_q^n(f)` (in `order`) that extends `p`.
pub fn extreme_word(
    p: &[Symbol],
    f: &ForbiddenFactor,
    q: Alphabet,
    n: usize,
    which: Extreme,
    order: OrderKind,
) -> Result<Word> {
    if p.len() > n {
        return Err(Error::PrefixTooLong { prefix: p.len(), n });
    }
    q.check(p)?;
    let table = TransitionTable::new(f.symbols(), q)?;
    let mut state = table.run(p).map_err(|_| Error::PrefixContainsFactor)?;
    let rule = order.parity_rule();
    let mut dir = rule.parity_of(p).bit();
    let mut w = p.to_vec();
    let top = q.max_symbol();
    while w.len() < n {
        // Scanning in list order from the front gives the first child, from
        // the back the last one.
        let from_low = (dir == 0) == (which == Extreme::First);
        let mut pick = None;
        for t in 0..=top {
            let j = if from_low { t } else { top - t };
            let h = table.step(state, j);
            if h != table.factor_len() {
                pick = Some((j, h));
                break;
            }
        }
        let (j, h) = pick.expect("every factor-free prefix has a factor-free child");
        w.push(j);
        state = h;
        dir ^= rule.contribution(j);
    }
    Ok(Word::new(w))
}

/// Per-length counts `|A_q^k(f)|` for `k = 0..=n`.
fn counts_by_length(f: &ForbiddenFactor, q: Alphabet, n: usize) -> Result<Vec<BigUint>> {
    let table = TransitionTable::new(f.symbols(), q)?;
    let fan = table.fan_out();
    let mut cur: Vec<BigUint> = alloc::vec![BigUint::zero(); table.factor_len()];
    cur[0] = BigUint::one();
    let mut out = Vec::with_capacity(n + 1);
    out.push(BigUint::one());
    for _ in 0..n {
        let mut next = alloc::vec![BigUint::zero(); cur.len()];
        for (i, c) in cur.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(h, mult) in &fan[i] {
                next[h] += c * mult;
            }
        }
        out.push(next.iter().sum());
        cur = next;
    }
    Ok(out)
}

/// `|A_q^n(f)|` by dynamic programming over automaton states.
pub fn count_avoiding(f: &ForbiddenFactor, q: Alphabet, n: usize) -> Result<BigUint> {
    Ok(counts_by_length(f, q, n)?.pop().expect("nonempty"))
}

/// Number of nodes the tree walk visits for length n: `Σ_{k<=n} |A_q^k(f)|`.
pub fn tree_size(f: &ForbiddenFactor, q: Alphabet, n: usize) -> Result<BigUint> {
    Ok(counts_by_length(f, q, n)?.into_iter().sum())
}
