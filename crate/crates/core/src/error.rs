use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size {0} is outside 2..=65536")]
    AlphabetSize(u32),
    #[error("symbol {symbol} at position {position} is not below q = {q}")]
    SymbolOutOfRange {
        symbol: u32,
        position: usize,
        q: u32,
    },
    #[error("word lengths differ ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("words are identical, so the span of their differences is undefined")]
    IdenticalWords,
    #[error("the forbidden factor must be nonempty")]
    EmptyFactor,
    #[error("complement is only defined for q = 2 (got q = {0})")]
    ComplementNeedsBinary(u32),
    #[error("the (q-2)<->(q-1) swap needs q >= 3 (got q = {0})")]
    PhiNeedsTernary(u32),
    #[error("prefix already contains the forbidden factor")]
    PrefixContainsFactor,
    #[error("prefix of length {prefix} is longer than the target length {n}")]
    PrefixTooLong { prefix: usize, n: usize },
    #[error("{required} words exceed the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("list mixes word lengths {expected} and {found} (at index {index})")]
    RaggedList {
        expected: usize,
        found: usize,
        index: usize,
    },
    #[error("list is empty")]
    EmptyList,
    #[error("strategy {strategy} does not apply to this factor and alphabet")]
    StrategyUnavailable { strategy: &'static str },
    #[error("cannot parse word: {0}")]
    Parse(&'static str),
}
