//! Strictly increasing sequences of positive indices.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A strictly increasing sequence of indices `>= 1`. The empty sequence is
/// valid. Text form is comma-separated, e.g. `1,3,5`; empty renders as `""`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IndexSequence(Box<[u32]>);

impl IndexSequence {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let increasing = entries.windows(2).all(|w| w[0] < w[1]);
        if !increasing || entries.first().is_some_and(|&e| e == 0) {
            return Err(Error::InvalidSequence(entries));
        }
        Ok(Self(entries.into_boxed_slice()))
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub(crate) fn from_sorted_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(entries.first().is_none_or(|&e| e > 0));
        Self(entries.into_boxed_slice())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the entries.
    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    /// Degree of the associated Schur class: `weight - e(e+1)/2` for length `e`.
    pub fn schur_degree(&self) -> i64 {
        let e = self.len() as i64;
        self.weight() as i64 - e * (e + 1) / 2
    }

    /// `{1..n} \ self`.
    pub fn complement(&self, n: u32) -> Result<Self> {
        if let Some(&bad) = self.0.iter().find(|&&e| e > n) {
            return Err(Error::IndexOutOfRange { index: bad, n });
        }
        let mut out = Vec::with_capacity(n as usize - self.len());
        let mut it = self.0.iter().peekable();
        for k in 1..=n {
            if it.peek() == Some(&&k) {
                it.next();
            } else {
                out.push(k);
            }
        }
        Ok(Self::from_sorted_unchecked(out))
    }

    /// The sequence with the entry at `pos` removed.
    pub fn without(&self, pos: usize) -> Self {
        let mut v = self.0.to_vec();
        v.remove(pos);
        Self(v.into_boxed_slice())
    }

    /// The sequence with the entries at `a < b` removed.
    pub fn without_pair(&self, a: usize, b: usize) -> Self {
        debug_assert!(a < b);
        let v: Vec<u32> = self
            .0
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != a && k != b)
            .map(|(_, &e)| e)
            .collect();
        Self(v.into_boxed_slice())
    }
}

impl fmt::Display for IndexSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for IndexSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parse_err = || Error::Parse {
            what: "index sequence",
            input: s.to_owned(),
        };
        let entries = s
            .split(',')
            .map(|part| {
                if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(parse_err());
                }
                part.parse::<u32>().map_err(|_| parse_err())
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }
}

/// Strictly increasing sequences drawn from `1..=n` with a fixed length and sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationQuery {
    pub n: u32,
    pub length: u32,
    pub target_sum: u64,
}

impl EnumerationQuery {
    pub fn new(n: u32, length: u32, target_sum: u64) -> Result<Self> {
        if length > n {
            return Err(Error::InvalidEnumeration { n, length });
        }
        Ok(Self { n, length, target_sum })
    }
}

/// Lazily yields the sequences matching `q` in lexicographic order.
pub fn enumerate(q: EnumerationQuery) -> Enumeration {
    Enumeration {
        q,
        prefix: Vec::with_capacity(q.length as usize),
        prefix_sum: 0,
        state: State::Fresh,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

/// Backtracking generator behind [`enumerate`]. Every candidate is checked
/// against the smallest and largest sums still reachable, so no branch is
/// entered unless it completes to at least one sequence.
#[derive(Debug, Clone)]
pub struct Enumeration {
    q: EnumerationQuery,
    prefix: Vec<u32>,
    prefix_sum: u64,
    state: State,
}

/// Sum of `count` consecutive integers starting at `from`.
fn run_sum(from: u64, count: u64) -> u64 {
    count * from + count * count.saturating_sub(1) / 2
}

impl Enumeration {
    /// Extends `prefix` to a full sequence, trying values from `start` at the
    /// current position. Returns false if no completion exists.
    fn extend(&mut self, start: u32) -> bool {
        let n = u64::from(self.q.n);
        let len = self.q.length as usize;
        let mut start = u64::from(start);
        while self.prefix.len() < len {
            let rem = (len - self.prefix.len()) as u64;
            let need = match self.q.target_sum.checked_sub(self.prefix_sum) {
                Some(need) => need,
                None => return false,
            };
            let mut chosen = None;
            // v leads, the remaining rem-1 values are chosen from v+1..=n
            let mut v = start;
            while v + rem - 1 <= n {
                let lo = v + run_sum(v + 1, rem - 1);
                if lo > need {
                    break;
                }
                let hi = v + run_sum(n + 2 - rem, rem - 1);
                if hi >= need {
                    chosen = Some(v);
                    break;
                }
                v += 1;
            }
            let Some(v) = chosen else {
                return false;
            };
            self.prefix.push(v as u32);
            self.prefix_sum += v;
            start = v + 1;
        }
        self.prefix_sum == self.q.target_sum
    }
}

impl Iterator for Enumeration {
    type Item = IndexSequence;

    fn next(&mut self) -> Option<IndexSequence> {
        match self.state {
            State::Done => return None,
            State::Fresh => {
                self.state = State::Running;
                if self.extend(1) {
                    return Some(IndexSequence::from_sorted_unchecked(self.prefix.clone()));
                }
            }
            State::Running => {
                while let Some(last) = self.prefix.pop() {
                    self.prefix_sum -= u64::from(last);
                    if self.extend(last + 1) {
                        return Some(IndexSequence::from_sorted_unchecked(self.prefix.clone()));
                    }
                }
            }
        }
        self.state = State::Done;
        None
    }
}

/// Splits `items` into at most `parts` contiguous, nearly equal chunks,
/// preserving order.
pub fn split_contiguous<T>(items: &[T], parts: usize) -> Vec<&[T]> {
    let parts = parts.max(1).min(items.len().max(1));
    let base = items.len() / parts;
    let extra = items.len() % parts;
    let mut out = Vec::with_capacity(parts);
    let mut at = 0;
    for p in 0..parts {
        let size = base + usize::from(p < extra);
        out.push(&items[at..at + size]);
        at += size;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[u32]) -> IndexSequence {
        IndexSequence::new(v.to_vec()).unwrap()
    }

    fn all(n: u32, length: u32, sum: u64) -> Vec<IndexSequence> {
        enumerate(EnumerationQuery::new(n, length, sum).unwrap()).collect()
    }

    /// Independent oracle: filter all subsets of 1..=n by bitmask.
    fn brute(n: u32, length: u32, sum: u64) -> Vec<IndexSequence> {
        let mut out: Vec<IndexSequence> = (0u32..1 << n)
            .filter(|m| m.count_ones() == length)
            .map(|m| seq(&(1..=n).filter(|k| m >> (k - 1) & 1 == 1).collect::<Vec<_>>()))
            .filter(|s| s.weight() == sum)
            .collect();
        out.sort();
        out
    }

    #[test]
    fn complement_examples() {
        assert_eq!(seq(&[1, 4]).complement(5).unwrap(), seq(&[2, 3, 5]));
        assert_eq!(IndexSequence::empty().complement(3).unwrap(), seq(&[1, 2, 3]));
        assert_eq!(seq(&[2, 3]).complement(5).unwrap(), seq(&[1, 4, 5]));
        assert_eq!(
            seq(&[2, 6]).complement(5),
            Err(Error::IndexOutOfRange { index: 6, n: 5 })
        );
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(all(5, 2, 5), vec![seq(&[1, 4]), seq(&[2, 3])]);
        assert_eq!(all(5, 1, 3), vec![seq(&[3])]);
        assert_eq!(all(5, 2, 9), vec![seq(&[4, 5])]);
        assert!(all(5, 2, 2).is_empty());
        assert!(all(5, 2, 10).is_empty());
        assert_eq!(all(4, 0, 0), vec![IndexSequence::empty()]);
        assert!(all(4, 0, 1).is_empty());
        assert_eq!(all(3, 3, 6), vec![seq(&[1, 2, 3])]);
        assert!(all(0, 0, 1).is_empty());
    }

    #[test]
    fn enumerate_matches_brute_force() {
        for n in 0..=12u32 {
            for length in 0..=n {
                let max = run_sum(u64::from(n + 1 - length), u64::from(length));
                for sum in 0..=max + 1 {
                    assert_eq!(
                        all(n, length, sum),
                        brute(n, length, sum),
                        "n={n} len={length} sum={sum}"
                    );
                }
            }
        }
    }

    #[test]
    fn enumeration_query_rejects_overlong() {
        assert!(EnumerationQuery::new(3, 4, 10).is_err());
    }

    #[test]
    fn weight_and_schur_degree() {
        assert_eq!(seq(&[1, 4]).weight(), 5);
        assert_eq!(IndexSequence::empty().weight(), 0);
        assert_eq!(seq(&[2, 3, 5]).weight(), 10);
        assert_eq!(seq(&[1, 2, 3]).schur_degree(), 0);
        assert_eq!(seq(&[2, 3, 5]).schur_degree(), 4);
        assert_eq!(seq(&[3]).schur_degree(), 2);
        assert_eq!(IndexSequence::empty().schur_degree(), 0);
    }

    #[test]
    fn validation_and_text_form() {
        assert!(IndexSequence::new(vec![2, 2]).is_err());
        assert!(IndexSequence::new(vec![3, 1]).is_err());
        assert!(IndexSequence::new(vec![0, 1]).is_err());
        assert_eq!("1,3,5".parse::<IndexSequence>().unwrap(), seq(&[1, 3, 5]));
        assert_eq!("".parse::<IndexSequence>().unwrap(), IndexSequence::empty());
        assert_eq!(seq(&[1, 3, 5]).to_string(), "1,3,5");
        assert_eq!(IndexSequence::empty().to_string(), "");
        for bad in ["1,,2", ",1", "1,", "a", "1, 2", "+1", "4294967296", "2,1"] {
            assert!(bad.parse::<IndexSequence>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn split_contiguous_preserves_order() {
        let v: Vec<u32> = (0..10).collect();
        let parts = split_contiguous(&v, 3);
        assert_eq!(parts.iter().map(|p| p.len()).collect::<Vec<_>>(), vec![4, 3, 3]);
        assert_eq!(parts.concat(), v);
        assert_eq!(split_contiguous(&v, 50).len(), 10);
        assert_eq!(split_contiguous::<u32>(&[], 4), vec![&[] as &[u32]]);
    }
}
