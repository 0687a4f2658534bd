//! Text formats shared by the subcommands.

use gray_avoid::{Alphabet, GenerationPlan, Graycodeness, Strategy, Symbol};

use crate::{CliError, CliResult, FormatArg};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordFormat {
    /// Contiguous digits; only for q <= 10.
    Packed,
    /// Comma-separated decimal symbols.
    Separated,
}

impl WordFormat {
    pub fn resolve(arg: Option<FormatArg>, q: Alphabet) -> CliResult<Self> {
        match arg {
            Some(FormatArg::Packed) if q.q() > 10 => Err(CliError::input(format!(
                "packed format needs q <= 10 (got q = {})",
                q.q()
            ))),
            Some(FormatArg::Packed) => Ok(WordFormat::Packed),
            Some(FormatArg::Separated) => Ok(WordFormat::Separated),
            None if q.q() <= 10 => Ok(WordFormat::Packed),
            None => Ok(WordFormat::Separated),
        }
    }

    pub fn write(self, buf: &mut String, w: &[Symbol]) {
        use std::fmt::Write;
        for (i, s) in w.iter().enumerate() {
            if self == WordFormat::Separated && i > 0 {
                buf.push(',');
            }
            write!(buf, "{s}").expect("writing to a String");
        }
    }
}

/// `order=.. strategy=.. gray=.. d=.. e=..` describing what a plan emits.
pub fn plan_summary(p: &GenerationPlan) -> String {
    let gray = match p.bounds() {
        Some(_) => "yes",
        None => {
            let unclaimed = p.verdict().is_some_and(|v| {
                v.natural == Graycodeness::Unclaimed
                    && p.strategy() == Strategy::Direct
                    && p.order() == v.order
            });
            if unclaimed {
                "unclaimed"
            } else {
                "no"
            }
        }
    };
    let (d, e) = match p.bounds() {
        Some(b) => (b.distance.to_string(), b.closeness.to_string()),
        None => ("-".into(), "-".into()),
    };
    let mut s = format!(
        "order={} strategy={} gray={gray} d={d} e={e}",
        p.order(),
        p.strategy().name()
    );
    if p.is_one_gray() {
        s.push_str(" one-gray=yes");
    }
    s
}
