//! KMP preprocessing of the forbidden factor.
//!
//! [`TransitionTable`] is the automaton that drives the generator: state `i`
//! means "the longest suffix of the current prefix that is also a prefix of
//! f has length i". Reading symbol `j` moves to `M[i][j]`; reaching `ℓ` means
//! the factor just occurred.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::word::{Alphabet, Symbol};

/// `b[0] = -1`, and for `i >= 1`, `b[i]` is the length of the longest proper
/// border of `f_1 .. f_i`. Holds `ℓ + 1` entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorderArray(Vec<i32>);

impl BorderArray {
    pub fn new(f: &[Symbol]) -> Result<Self> {
        if f.is_empty() {
            return Err(Error::EmptyFactor);
        }
        let len = f.len();
        let mut b = alloc::vec![0i32; len + 1];
        b[0] = -1;
        let mut i: i32 = 0;
        for j in 1..len {
            b[j] = i;
            // f is 0-indexed here: f[j + 1] in 1-indexed terms is f[j].
            while i >= 0 && f[j] != f[i as usize] {
                i = b[i as usize];
            }
            i += 1;
        }
        b[len] = i;
        Ok(BorderArray(b))
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.0
    }

    /// Border length at index `i` (`i >= 1`).
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        debug_assert!(i >= 1);
        self.0[i] as usize
    }
}

/// Dense row-major `ℓ × q` table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionTable {
    factor_len: usize,
    q: usize,
    cells: Vec<u32>,
}

impl TransitionTable {
    pub fn new(f: &[Symbol], q: Alphabet) -> Result<Self> {
        let border = BorderArray::new(f)?;
        Self::with_border(f, q, &border)
    }

    pub fn with_border(f: &[Symbol], q: Alphabet, border: &BorderArray) -> Result<Self> {
        if f.is_empty() {
            return Err(Error::EmptyFactor);
        }
        q.check(f)?;
        let len = f.len();
        let width = q.q() as usize;
        let mut cells = alloc::vec![0u32; len * width];
        for j in 0..width {
            for i in 0..len {
                cells[i * width + j] = if usize::from(f[i]) == j {
                    (i + 1) as u32
                } else if i > 0 {
                    cells[border.at(i) * width + j]
                } else {
                    0
                };
            }
        }
        Ok(TransitionTable {
            factor_len: len,
            q: width,
            cells,
        })
    }

    /// `ℓ`, the length of the factor; also the "occurred" state.
    #[inline]
    pub fn factor_len(&self) -> usize {
        self.factor_len
    }

    #[inline]
    pub fn q(&self) -> usize {
        self.q
    }

    #[inline]
    pub fn step(&self, state: usize, symbol: Symbol) -> usize {
        self.cells[state * self.q + usize::from(symbol)] as usize
    }

    pub fn row(&self, state: usize) -> &[u32] {
        &self.cells[state * self.q..(state + 1) * self.q]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.cells.chunks(self.q)
    }

    /// Runs the automaton over `w`; `Ok(state)` is the final state, `Err(pos)`
    /// the 1-indexed position at which the factor first ends.
    pub fn run(&self, w: &[Symbol]) -> core::result::Result<usize, usize> {
        self.run_from(0, w)
    }

    pub fn run_from(&self, mut state: usize, w: &[Symbol]) -> core::result::Result<usize, usize> {
        for (pos, &s) in w.iter().enumerate() {
            state = self.step(state, s);
            if state == self.factor_len {
                return Err(pos + 1);
            }
        }
        Ok(state)
    }

    pub fn contains_factor(&self, w: &[Symbol]) -> bool {
        self.run(w).is_err()
    }

    /// For each state, the surviving transitions grouped by target state as
    /// `(target, how many symbols lead there)`.
    pub fn fan_out(&self) -> Vec<Vec<(usize, u64)>> {
        let mut out = Vec::with_capacity(self.factor_len);
        let mut tally = alloc::vec![0u64; self.factor_len];
        for row in self.rows() {
            for &h in row {
                let h = h as usize;
                if h != self.factor_len {
                    tally[h] += 1;
                }
            }
            let mut targets = Vec::new();
            for (h, c) in tally.iter_mut().enumerate() {
                if *c > 0 {
                    targets.push((h, *c));
                    *c = 0;
                }
            }
            out.push(targets);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: u32) -> Alphabet {
        Alphabet::new(n).unwrap()
    }

    #[test]
    fn border_fixtures() {
        let b = BorderArray::new(&[0, 1, 0, 0, 1, 0, 1, 0]).unwrap();
        assert_eq!(b.as_slice(), &[-1, 0, 0, 1, 1, 2, 3, 2, 3]);
        let b = BorderArray::new(&[0, 0, 0, 0]).unwrap();
        assert_eq!(b.as_slice(), &[-1, 0, 1, 2, 3]);
        let b = BorderArray::new(&[2]).unwrap();
        assert_eq!(b.as_slice(), &[-1, 0]);
        assert_eq!(BorderArray::new(&[]), Err(Error::EmptyFactor));
    }

    #[test]
    fn table_fixture() {
        let m = TransitionTable::new(&[0, 1, 2, 0, 1, 1], q(4)).unwrap();
        let rows: Vec<&[u32]> = m.rows().collect();
        assert_eq!(
            rows,
            [
                &[1, 0, 0, 0][..],
                &[1, 2, 0, 0],
                &[1, 0, 3, 0],
                &[4, 0, 0, 0],
                &[1, 5, 0, 0],
                &[1, 6, 3, 0],
            ]
        );
        assert_eq!(m.step(2, 0), 1);
        assert_eq!(m.step(2, 1), 0);
        assert_eq!(m.step(2, 2), 3);
    }

    #[test]
    fn first_row_is_forced() {
        for f in [&[2u16, 0][..], &[0, 0, 1], &[3]] {
            let m = TransitionTable::new(f, q(4)).unwrap();
            for j in 0..4u16 {
                assert_eq!(m.step(0, j), usize::from(j == f[0]));
            }
        }
    }

    #[test]
    fn table_rejects_bad_symbols() {
        assert!(matches!(
            TransitionTable::new(&[0, 3], q(3)),
            Err(Error::SymbolOutOfRange {
                symbol: 3,
                position: 2,
                q: 3
            })
        ));
        assert_eq!(TransitionTable::new(&[], q(3)), Err(Error::EmptyFactor));
    }

    #[test]
    fn run_reports_first_occurrence() {
        let m = TransitionTable::new(&[1, 1], q(2)).unwrap();
        assert_eq!(m.run(&[0, 1, 0, 1, 1, 1]), Err(5));
        assert_eq!(m.run(&[0, 1, 0, 1]), Ok(1));
        assert!(!m.contains_factor(&[]));
    }

    #[test]
    fn fan_out_groups_targets() {
        let m = TransitionTable::new(&[0, 1], q(3)).unwrap();
        // state 0: 0 -> 1, {1,2} -> 0; state 1: 0 -> 1, 1 -> 2 (pruned), 2 -> 0
        assert_eq!(
            m.fan_out(),
            alloc::vec![alloc::vec![(0, 2), (1, 1)], alloc::vec![(0, 1), (1, 1)]]
        );
    }
}
