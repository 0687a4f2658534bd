//! Command-line front end for `gray-avoid`.
//!
//! Data goes to stdout one word per line; every other line is prefixed with
//! `#`. Exit codes: 0 ok, 1 verification failed, 2 invalid input, 3 budget
//! exceeded.

use std::fmt;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use gray_avoid::oracle::{GrayReport, Pair};
use gray_avoid::{
    brute_force_list, count_avoiding, plan, plan_unrestricted, verify, Alphabet, BorderArray,
    Classification, Family, ForbiddenFactor, GenerationPlan, OrderKind, Strategy, StrategyChoice,
    TransitionTable, Word,
};
use num_bigint::BigUint;

pub mod format;

use format::{plan_summary, WordFormat};

/// Default cap on the number of words a command may emit or enumerate.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "GRAY_AVOID_BUDGET";

#[derive(Parser, Debug)]
#[command(
    name = "gray-avoid",
    version,
    about = "Gray codes for words avoiding a factor"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List A_q^n(f), one word per line.
    Generate(GenerateArgs),
    /// Report family, zero periodicity and Gray verdict of a factor.
    Classify(ClassifyArgs),
    /// Generate, then check the listing against the brute-force oracle.
    Verify(GenerateArgs),
    /// Print |A_q^n(f)|.
    Count(GenerateArgs),
    /// Print tree nodes visited per emitted word over a range of n.
    Bench(BenchArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Alphabet size.
    #[arg(long)]
    pub q: u32,
    /// Forbidden factor: packed digits (`0110`) or comma-separated (`0,12,3`).
    #[arg(long)]
    pub factor: Option<String>,
    #[arg(long, value_enum, default_value_t = OrderArg::Auto)]
    pub order: OrderArg,
    #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
    pub strategy: StrategyArg,
    /// Word budget; defaults to $GRAY_AVOID_BUDGET, then 10^7.
    #[arg(long)]
    pub budget: Option<u64>,
}

#[derive(Args, Debug, Clone)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub common: Common,
    /// Word length.
    #[arg(long)]
    pub n: usize,
    /// Output format; packed needs q <= 10 and is the default there.
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
}

#[derive(Args, Debug, Clone)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub q: u32,
    #[arg(long)]
    pub factor: String,
    #[arg(long, value_enum, default_value_t = OrderArg::Auto)]
    pub order: OrderArg,
    #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
    pub strategy: StrategyArg,
    /// Also print the border array and the transition table.
    #[arg(long)]
    pub dump_automaton: bool,
}

#[derive(Args, Debug, Clone)]
pub struct BenchArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value_t = 8)]
    pub n_min: usize,
    #[arg(long, default_value_t = 18)]
    pub n_max: usize,
    #[arg(long, default_value_t = 2)]
    pub n_step: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderArg {
    Auto,
    Rgc,
    Dual,
}

impl OrderArg {
    fn resolve(self) -> Option<OrderKind> {
        match self {
            OrderArg::Auto => None,
            OrderArg::Rgc => Some(OrderKind::Rgc),
            OrderArg::Dual => Some(OrderKind::DualRgc),
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrategyArg {
    Auto,
    Direct,
    Phi,
    Revcomp,
}

impl StrategyArg {
    fn resolve(self) -> StrategyChoice {
        match self {
            StrategyArg::Auto => StrategyChoice::Auto,
            StrategyArg::Direct => StrategyChoice::Direct,
            StrategyArg::Phi => StrategyChoice::Phi,
            StrategyArg::Revcomp => StrategyChoice::RevComp,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormatArg {
    Packed,
    Separated,
}

/// Failure with its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub const VERIFY: u8 = 1;
    pub const INPUT: u8 = 2;
    pub const BUDGET: u8 = 3;

    fn input(message: impl Into<String>) -> Self {
        CliError {
            code: Self::INPUT,
            message: message.into(),
        }
    }

    /// The reader went away; nothing left to report.
    fn closed_output() -> Self {
        CliError {
            code: 0,
            message: String::new(),
        }
    }

    fn budget(required: impl fmt::Display, budget: u64) -> Self {
        CliError {
            code: Self::BUDGET,
            message: format!(
                "{required} words exceed the budget of {budget} (raise --budget or ${BUDGET_ENV})"
            ),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<gray_avoid::Error> for CliError {
    fn from(e: gray_avoid::Error) -> Self {
        match e {
            gray_avoid::Error::BudgetExceeded { required, budget } => {
                CliError::budget(required, budget)
            }
            other => CliError::input(other.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            return CliError::closed_output();
        }
        CliError {
            code: Self::INPUT,
            message: format!("write failed: {e}"),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Runs a parsed command, writing data to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    let result = match &cli.command {
        Command::Generate(a) => cmd_generate(a, out),
        Command::Classify(a) => cmd_classify(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Count(a) => cmd_count(a, out),
        Command::Bench(a) => cmd_bench(a, out),
    };
    match result {
        Err(e) if e.code == 0 => Ok(()),
        other => other.and_then(|()| Ok(out.flush()?)),
    }
}

fn alphabet(q: u32) -> CliResult<Alphabet> {
    Ok(Alphabet::new(q)?)
}

fn parse_factor(text: &str, q: Alphabet) -> CliResult<ForbiddenFactor> {
    let word: Word = text.parse()?;
    Ok(ForbiddenFactor::over(word, q)?)
}

fn resolve_budget(flag: Option<u64>) -> CliResult<u64> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::input(format!(
                "${BUDGET_ENV} is not a non-negative integer: {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

struct Setup {
    q: Alphabet,
    factor: Option<ForbiddenFactor>,
    plan: GenerationPlan,
    budget: u64,
}

fn setup(c: &Common) -> CliResult<Setup> {
    let q = alphabet(c.q)?;
    let factor = c
        .factor
        .as_deref()
        .map(|f| parse_factor(f, q))
        .transpose()?;
    let plan = match &factor {
        Some(f) => plan(f, q, c.order.resolve(), c.strategy.resolve())?,
        None if matches!(c.strategy, StrategyArg::Auto | StrategyArg::Direct) => {
            plan_unrestricted(q, c.order.resolve())
        }
        None => return Err(CliError::input("--strategy phi/revcomp needs a --factor")),
    };
    Ok(Setup {
        q,
        factor,
        plan,
        budget: resolve_budget(c.budget)?,
    })
}

/// `|A_q^n(f)|` if it fits the budget.
fn checked_count(s: &Setup, n: usize) -> CliResult<u64> {
    let count = match &s.factor {
        Some(f) => count_avoiding(f, s.q, n)?,
        None => full_space(s.q.q(), n),
    };
    match u64::try_from(&count) {
        Ok(c) if c <= s.budget => Ok(c),
        _ => Err(CliError::budget(count, s.budget)),
    }
}

fn full_space(q: u32, n: usize) -> BigUint {
    BigUint::from(q).pow(n as u32)
}

fn header(s: &Setup, n: Option<usize>) -> String {
    let mut h = format!("# q={}", s.q.q());
    if let Some(n) = n {
        h.push_str(&format!(" n={n}"));
    }
    match &s.factor {
        Some(f) => h.push_str(&format!(
            " factor={}",
            f.word().to_separated(if s.q.q() <= 10 { "" } else { "," })
        )),
        None => h.push_str(" factor=none"),
    }
    h.push(' ');
    h.push_str(&plan_summary(&s.plan));
    h
}

fn cmd_generate(a: &GenerateArgs, out: &mut dyn Write) -> CliResult<()> {
    let s = setup(&a.common)?;
    let fmt = WordFormat::resolve(a.format, s.q)?;
    checked_count(&s, a.n)?;
    writeln!(out, "{}", header(&s, Some(a.n)))?;
    let mut g = s.plan.generate(a.n);
    let mut line = String::new();
    while let Some(w) = g.next_word() {
        line.clear();
        fmt.write(&mut line, w);
        writeln!(out, "{line}")?;
    }
    Ok(())
}

fn family_label(family: Family, q: Alphabet) -> String {
    match family {
        Family::InU => format!("U_{}", q.q()),
        Family::InW => format!("W_{}", q.q()),
        other => other.name().to_string(),
    }
}

fn cmd_classify(a: &ClassifyArgs, out: &mut dyn Write) -> CliResult<()> {
    let q = alphabet(a.q)?;
    let f = parse_factor(&a.factor, q)?;
    let class = Classification::of(&f, q);
    let p = plan(&f, q, a.order.resolve(), a.strategy.resolve())?;
    let v = p.verdict().copied().expect("factor plans carry a verdict");
    let sep = if q.q() <= 10 { "" } else { "," };
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let periods: Vec<String> = class
        .nonzero_periods
        .iter()
        .map(|w| w.to_separated(sep))
        .collect();
    writeln!(out, "factor: {}", f.word().to_separated(sep))?;
    writeln!(out, "q: {}", q.q())?;
    writeln!(out, "length: {}", f.len())?;
    writeln!(out, "zero-suffix: {}", f.zero_suffix_len())?;
    writeln!(out, "family: {}", family_label(class.family, q))?;
    match class.family_param {
        Some(m) => writeln!(out, "m: {m}")?,
        None => writeln!(out, "m: -")?,
    }
    writeln!(
        out,
        "zero-periodic: {}",
        yes_no(class.induces_zero_periodicity)
    )?;
    writeln!(
        out,
        "periods: {}",
        if periods.is_empty() {
            "-".into()
        } else {
            periods.join(" ")
        }
    )?;
    writeln!(out, "natural-order: {}", v.order)?;
    writeln!(out, "natural-gray: {}", v.natural.name())?;
    writeln!(out, "plan: {}", plan_summary(&p))?;
    if p.strategy() != Strategy::Direct {
        let eff = p
            .effective_factor()
            .expect("factor plans have an effective factor");
        let maps: Vec<&str> = p.post_map().iter().map(|m| m.name()).collect();
        writeln!(out, "effective-factor: {}", eff.word().to_separated(sep))?;
        writeln!(out, "post-map: {}", maps.join(","))?;
    }
    if a.dump_automaton {
        let border = BorderArray::new(f.symbols())?;
        let table = TransitionTable::with_border(f.symbols(), q, &border)?;
        writeln!(out, "# border array, entries 0..={}", f.len())?;
        writeln!(out, "{}", join(border.as_slice()))?;
        writeln!(
            out,
            "# transition table, {} rows x {} columns",
            table.factor_len(),
            table.q()
        )?;
        for row in table.rows() {
            writeln!(out, "{}", join(row))?;
        }
    }
    Ok(())
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn write_pair(out: &mut dyn Write, label: &str, pair: &Option<Pair>, sep: &str) -> io::Result<()> {
    match pair {
        Some((i, a, b)) => writeln!(
            out,
            "{label}: #{i} {} {}",
            a.to_separated(sep),
            b.to_separated(sep)
        ),
        None => writeln!(out, "{label}: -"),
    }
}

fn cmd_verify(a: &GenerateArgs, out: &mut dyn Write) -> CliResult<()> {
    let s = setup(&a.common)?;
    checked_count(&s, a.n)?;
    let list: Vec<Word> = s.plan.generate(a.n).collect();
    let claim = s.plan.bounds();
    // Order and step checks only make sense for an ordered, claimed listing.
    let order = (s.plan.emits_sorted() && claim.is_some()).then(|| s.plan.order());
    let report = verify(&list, claim, s.factor.as_ref(), s.q, order)?;

    let oracle = oracle_check(&s, a.n, &list);
    let sep = if s.q.q() <= 10 { "" } else { "," };
    writeln!(out, "{}", header(&s, Some(a.n)))?;
    write_report(out, &report, sep)?;
    let oracle_ok = match oracle {
        Oracle::Match => {
            writeln!(out, "oracle: match")?;
            true
        }
        Oracle::Mismatch => {
            writeln!(out, "oracle: mismatch")?;
            false
        }
        Oracle::Skipped => {
            writeln!(out, "oracle: skipped (over budget)")?;
            true
        }
    };
    let ok = report.is_clean() && oracle_ok;
    writeln!(out, "status: {}", if ok { "ok" } else { "violation" })?;
    if ok {
        Ok(())
    } else {
        out.flush()?;
        Err(CliError {
            code: CliError::VERIFY,
            message: "listing failed verification".into(),
        })
    }
}

enum Oracle {
    Match,
    Mismatch,
    Skipped,
}

fn oracle_check(s: &Setup, n: usize, list: &[Word]) -> Oracle {
    let unrestricted;
    let f = match &s.factor {
        Some(f) => f,
        None => {
            unrestricted = ForbiddenFactor::new(Word::repeat(0, n + 1)).expect("nonempty");
            &unrestricted
        }
    };
    let Ok(mut truth) = brute_force_list(f, s.q, n, s.plan.order(), s.budget) else {
        return Oracle::Skipped;
    };
    let same = if s.plan.emits_sorted() {
        truth == list
    } else {
        let mut got = list.to_vec();
        got.sort();
        truth.sort();
        got == truth
    };
    if same {
        Oracle::Match
    } else {
        Oracle::Mismatch
    }
}

fn write_report(out: &mut dyn Write, r: &GrayReport, sep: &str) -> io::Result<()> {
    writeln!(out, "words: {}", r.word_count)?;
    writeln!(out, "max_hamming: {}", r.max_hamming)?;
    writeln!(out, "max_span: {}", r.max_span)?;
    match r.claim {
        Some(c) => writeln!(out, "claimed: d={} e={}", c.distance, c.closeness)?,
        None => writeln!(out, "claimed: none")?,
    }
    writeln!(out, "bound_violations: {}", r.bound_violations)?;
    writeln!(out, "avoidance_violations: {}", r.avoidance_violations)?;
    writeln!(out, "order_violations: {}", r.order_violations)?;
    writeln!(out, "step_violations: {}", r.step_violations)?;
    write_pair(out, "worst_hamming", &r.worst_hamming, sep)?;
    write_pair(out, "worst_span", &r.worst_span, sep)?;
    if r.bound_violations > 0 {
        write_pair(out, "first_violation", &r.first_bound_violation, sep)?;
    }
    Ok(())
}

fn cmd_count(a: &GenerateArgs, out: &mut dyn Write) -> CliResult<()> {
    let s = setup(&a.common)?;
    let count = match &s.factor {
        Some(f) => count_avoiding(f, s.q, a.n)?,
        None => full_space(s.q.q(), a.n),
    };
    writeln!(out, "{count}")?;
    match u64::try_from(&count) {
        Ok(c) if c <= s.budget => {
            let streamed = s.plan.generate(a.n).count();
            writeln!(out, "# stream-length: {streamed}")?;
            if streamed as u64 != c {
                return Err(CliError {
                    code: CliError::VERIFY,
                    message: format!("stream emitted {streamed} words, expected {c}"),
                });
            }
        }
        _ => writeln!(out, "# stream-length: skipped (over budget)")?,
    }
    Ok(())
}

fn cmd_bench(a: &BenchArgs, out: &mut dyn Write) -> CliResult<()> {
    let s = setup(&a.common)?;
    if a.n_step == 0 || a.n_min > a.n_max {
        return Err(CliError::input("need n-min <= n-max and n-step >= 1"));
    }
    writeln!(out, "{}", header(&s, None))?;
    writeln!(out, "# n words nodes nodes/word")?;
    for n in (a.n_min..=a.n_max).step_by(a.n_step) {
        if checked_count(&s, n).is_err() {
            writeln!(out, "# n={n} skipped: over budget")?;
            break;
        }
        let mut g = s.plan.generate(n);
        let mut words = 0u64;
        while g.next_word().is_some() {
            words += 1;
        }
        let nodes = g.nodes_visited();
        writeln!(
            out,
            "{n} {words} {nodes} {:.4}",
            nodes as f64 / words as f64
        )?;
    }
    Ok(())
}
