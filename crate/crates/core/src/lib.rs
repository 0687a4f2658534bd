//! Gray-code listings of q-ary words that avoid a forbidden factor.
//!
//! The crate is split along the lines of the problem:
//!
//! * [`word`]: alphabet, words, parity and the two reflected orders `≺` / `◁`.
//! * [`matcher`]: KMP border array and the `ℓ × q` transition table.
//! * [`classify`]: factor families, zero periodicity and the Gray verdict.
//! * [`generator`]: planning and the prefix-tree enumeration itself.
//! * [`oracle`]: brute-force ground truth and adjacent-pair verification.
//!
//! Everything here is `no_std` (with `alloc`); IO lives in the CLI crate.

#![no_std]

extern crate alloc;

pub mod classify;
pub mod error;
pub mod generator;
pub mod matcher;
pub mod oracle;
pub mod word;

pub use classify::{
    gray_verdict, in_u, in_v, in_w, induces_zero_periodicity, nonzero_period_profile, phi,
    tail_templates, Classification, Family, ForbiddenFactor, GrayBounds, GrayVerdict, Graycodeness,
    PhiMode, Strategy, TailForm,
};
pub use error::{Error, Result};
pub use generator::{
    apply_word_map, count_avoiding, extreme_word, plan, plan_unrestricted, tree_size, Extreme,
    GenerationPlan, Generator, StrategyChoice, WordMap,
};
pub use matcher::{BorderArray, TransitionTable};
pub use oracle::{brute_force_list, smallest_counterexample_n, verify, GrayReport};
pub use word::{
    cmp_dual_rgc, cmp_rgc, complement, diff_span, hamming, parity, reverse, Alphabet, OrderKind,
    Parity, ParityRule, Symbol, Word,
};
