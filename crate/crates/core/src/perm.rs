//! Permutations in one-line notation, classical pattern containment, the
//! symmetry operations, permutation statistics and cycle decomposition.
//!
//! Positions and values are 1-based throughout. The empty permutation is a
//! valid value of length 0; it avoids every nonempty pattern and all of its
//! statistics are 0.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}` written in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    /// Validates that `word` is a rearrangement of `1..=word.len()`.
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::Parse {
                    what: "permutation",
                    input: format!("{word:?}"),
                    reason: format!("not a rearrangement of 1..={n}"),
                });
            }
            seen[v] = true;
        }
        Ok(Self { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<u32>) -> Self {
        debug_assert!(Self::new(word.clone()).is_ok(), "invalid word {word:?}");
        Self { word }
    }

    pub fn empty() -> Self {
        Self { word: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            word: (1..=n as u32).collect(),
        }
    }

    /// The permutation order-isomorphic to `values` (values must be distinct).
    pub fn standardize(values: &[u32]) -> Self {
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by_key(|&i| values[i]);
        let mut word = vec![0; values.len()];
        for (rank, &i) in order.iter().enumerate() {
            word[i] = rank as u32 + 1;
        }
        Self { word }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn into_word(self) -> Vec<u32> {
        self.word
    }

    /// `π(i)` for a 1-based position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.word[i - 1]
    }

    pub fn contains(&self, pattern: &Permutation) -> bool {
        contains_word(&self.word, &pattern.word)
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !self.contains(pattern)
    }

    pub fn avoids_all<'a, I>(&self, patterns: I) -> bool
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        patterns.into_iter().all(|p| self.avoids(p))
    }

    pub fn apply(&self, op: Symmetry) -> Permutation {
        match op {
            Symmetry::Reverse => self.reverse(),
            Symmetry::Complement => self.complement(),
            Symmetry::ReverseComplement => self.complement().reverse(),
            Symmetry::Inverse => self.inverse(),
        }
    }

    pub fn reverse(&self) -> Permutation {
        let mut word = self.word.clone();
        word.reverse();
        Self { word }
    }

    pub fn complement(&self) -> Permutation {
        let n = self.len() as u32;
        Self {
            word: self.word.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    pub fn reverse_complement(&self) -> Permutation {
        self.apply(Symmetry::ReverseComplement)
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0; self.len()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v as usize - 1] = i as u32 + 1;
        }
        Self { word }
    }

    pub fn statistics(&self) -> StatRecord {
        let mut rec = StatRecord::default();
        for (i, &v) in self.word.iter().enumerate() {
            let pos = i as u32 + 1;
            if v == pos {
                rec.fix += 1;
            } else if v > pos {
                rec.exc += 1;
            } else {
                rec.def += 1;
            }
            if v + 1 == pos {
                rec.fix_minus1 += 1;
            }
        }
        rec.lis = longest_increasing(&self.word);
        rec.lds = longest_decreasing(&self.word);
        rec.rlm = right_to_left_minima(&self.word);
        rec.two_cycles = self
            .word
            .iter()
            .enumerate()
            .filter(|&(i, &v)| {
                let pos = i as u32 + 1;
                v > pos && self.word[v as usize - 1] == pos
            })
            .count();
        rec
    }

    /// Disjoint cycles sorted by their minimum element, each one written
    /// starting from its maximum element.
    pub fn cycles(&self) -> Vec<Cycle> {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut elems = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                elems.push(cur as u32);
                cur = self.word[cur - 1] as usize;
            }
            let max_at = elems
                .iter()
                .enumerate()
                .max_by_key(|&(_, &v)| v)
                .map(|(i, _)| i)
                .unwrap_or(0);
            elems.rotate_left(max_at);
            cycles.push(Cycle { elements: elems });
        }
        // `start` scans upward, so the cycles are already ordered by minimum.
        cycles
    }

    /// Values of the permutation that are even, in order of appearance.
    /// Cycles in canonical order, with commas inside cycles whenever the
    /// permutation has a value above 9.
    pub fn cycle_notation(&self) -> String {
        let commas = self.len() > 9;
        let mut out = String::new();
        for c in self.cycles() {
            write_cycle(&mut out, &c, commas);
        }
        out
    }

    pub fn even_subsequence(&self) -> Vec<u32> {
        self.word.iter().copied().filter(|v| v % 2 == 0).collect()
    }

    /// Values of the permutation that are odd, in order of appearance.
    pub fn odd_subsequence(&self) -> Vec<u32> {
        self.word.iter().copied().filter(|v| v % 2 == 1).collect()
    }

    /// True for permutations with no fixed point.
    pub fn is_derangement(&self) -> bool {
        self.word
            .iter()
            .enumerate()
            .all(|(i, &v)| v != i as u32 + 1)
    }
}

impl fmt::Display for Permutation {
    /// Contiguous digits when every value is at most 9, commas otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_values(f, &self.word)
    }
}

pub(crate) fn write_values(f: &mut fmt::Formatter<'_>, values: &[u32]) -> fmt::Result {
    if values.iter().all(|&v| v <= 9) {
        for v in values {
            write!(f, "{v}")?;
        }
        Ok(())
    } else {
        for (i, v) in values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let word = parse_values(s, "permutation")?;
        Permutation::new(word).map_err(|_| Error::Parse {
            what: "permutation",
            input: s.to_string(),
            reason: "values are not a rearrangement of 1..=n".into(),
        })
    }
}

/// Parses comma/space separated naturals, or a bare digit string.
pub(crate) fn parse_values(s: &str, what: &'static str) -> Result<Vec<u32>> {
    let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
    if trimmed.is_empty() || trimmed == "ε" {
        return Ok(Vec::new());
    }
    let err = |reason: &str| Error::Parse {
        what,
        input: s.to_string(),
        reason: reason.to_string(),
    };
    if trimmed.contains(|c: char| c == ',' || c.is_whitespace()) {
        trimmed
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| err("expected natural numbers")))
            .collect()
    } else if trimmed.chars().all(|c| c.is_ascii_digit()) {
        Ok(trimmed.chars().map(|c| c as u32 - '0' as u32).collect())
    } else {
        Err(err("expected digits, commas or spaces"))
    }
}

/// The four symmetry operations of the square used on patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Reverse,
    Complement,
    ReverseComplement,
    Inverse,
}

impl Symmetry {
    pub const ALL: [Symmetry; 4] = [
        Symmetry::Reverse,
        Symmetry::Complement,
        Symmetry::ReverseComplement,
        Symmetry::Inverse,
    ];
}

/// A cycle of a permutation, written starting from its largest element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    pub elements: Vec<u32>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn min(&self) -> u32 {
        self.elements.iter().copied().min().unwrap_or(0)
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_values(f, &self.elements)?;
        f.write_str(")")
    }
}

fn write_cycle(out: &mut String, c: &Cycle, commas: bool) {
    let parts: Vec<String> = c.elements.iter().map(|v| v.to_string()).collect();
    out.push('(');
    out.push_str(&parts.join(if commas { "," } else { "" }));
    out.push(')');
}

/// All eight statistics of a single permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct StatRecord {
    pub fix: usize,
    pub fix_minus1: usize,
    pub exc: usize,
    pub def: usize,
    pub lis: usize,
    pub lds: usize,
    pub rlm: usize,
    pub two_cycles: usize,
}

impl StatRecord {
    pub fn get(&self, stat: Statistic) -> usize {
        match stat {
            Statistic::Fix => self.fix,
            Statistic::FixMinus1 => self.fix_minus1,
            Statistic::Exc => self.exc,
            Statistic::Def => self.def,
            Statistic::Lis => self.lis,
            Statistic::Lds => self.lds,
            Statistic::Rlm => self.rlm,
            Statistic::TwoCycles => self.two_cycles,
        }
    }
}

/// Names of the fields of [`StatRecord`], usable as distribution keys.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statistic {
    Fix,
    FixMinus1,
    Exc,
    Def,
    Lis,
    Lds,
    Rlm,
    TwoCycles,
}

impl Statistic {
    pub const ALL: [Statistic; 8] = [
        Statistic::Fix,
        Statistic::FixMinus1,
        Statistic::Exc,
        Statistic::Def,
        Statistic::Lis,
        Statistic::Lds,
        Statistic::Rlm,
        Statistic::TwoCycles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Fix => "fix",
            Statistic::FixMinus1 => "fix_minus1",
            Statistic::Exc => "exc",
            Statistic::Def => "def",
            Statistic::Lis => "lis",
            Statistic::Lds => "lds",
            Statistic::Rlm => "rlm",
            Statistic::TwoCycles => "two_cycles",
        }
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "fix-1" | "fix_-1" | "fixm1" => return Ok(Statistic::FixMinus1),
            "2cycles" | "two-cycles" => return Ok(Statistic::TwoCycles),
            _ => {}
        }
        Statistic::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::UnknownStatistic(s.to_string()))
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Depth-first search for an occurrence of `pattern` in `word`.
pub(crate) fn contains_word(word: &[u32], pattern: &[u32]) -> bool {
    if pattern.is_empty() {
        return true;
    }
    if pattern.len() > word.len() {
        return false;
    }
    let mut chosen = Vec::with_capacity(pattern.len());
    extend_occurrence(word, pattern, 0, &mut chosen, None)
}

/// True if the last entry of `prefix` completes an occurrence of `pattern`
/// that uses it as the pattern's final letter. Since containment is monotone
/// under extension, checking this at each placement is enough to keep a
/// prefix pattern-free.
pub(crate) fn completes_occurrence(prefix: &[u32], pattern: &[u32]) -> bool {
    let k = pattern.len();
    if k == 0 {
        return true;
    }
    let Some((&last, head)) = prefix.split_last() else {
        return false;
    };
    if k == 1 {
        return true;
    }
    if head.len() < k - 1 {
        return false;
    }
    let mut chosen = Vec::with_capacity(k);
    extend_occurrence(head, &pattern[..k - 1], 0, &mut chosen, Some((last, pattern[k - 1])))
}

fn extend_occurrence(
    word: &[u32],
    pattern: &[u32],
    from: usize,
    chosen: &mut Vec<u32>,
    tail: Option<(u32, u32)>,
) -> bool {
    let j = chosen.len();
    if j == pattern.len() {
        return true;
    }
    let needed = pattern.len() - j;
    for pos in from..=word.len() - needed {
        let v = word[pos];
        let consistent = chosen
            .iter()
            .zip(pattern)
            .all(|(&c, &p)| (c < v) == (p < pattern[j]))
            && tail.is_none_or(|(tv, tp)| (v < tv) == (pattern[j] < tp));
        if consistent {
            chosen.push(v);
            if extend_occurrence(word, pattern, pos + 1, chosen, tail) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

pub(crate) fn longest_increasing(word: &[u32]) -> usize {
    let mut tails: Vec<u32> = Vec::new();
    for &v in word {
        match tails.binary_search(&v) {
            Ok(_) => {}
            Err(i) if i == tails.len() => tails.push(v),
            Err(i) => tails[i] = v,
        }
    }
    tails.len()
}

pub(crate) fn longest_decreasing(word: &[u32]) -> usize {
    let max = word.iter().copied().max().unwrap_or(0);
    let flipped: Vec<u32> = word.iter().map(|&v| max + 1 - v).collect();
    longest_increasing(&flipped)
}

pub(crate) fn right_to_left_minima(word: &[u32]) -> usize {
    let mut min = u32::MAX;
    let mut count = 0;
    for &v in word.iter().rev() {
        if v < min {
            min = v;
            count += 1;
        }
    }
    count
}

/// Shorthand used heavily in tests and the harness: parse a permutation that
/// is known to be well formed.
pub fn perm(s: &str) -> Permutation {
    s.parse()
        .unwrap_or_else(|e| panic!("invalid permutation literal {s:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pi_hat() -> Permutation {
        perm("12,1,6,3,5,4,7,2,10,9,11,8,16,13,15,14")
    }

    #[test]
    fn containment_examples() {
        assert!(perm("2143").contains(&perm("21")));
        assert!(!perm("64357821").contains(&perm("132")));
        assert!(!perm("4213").contains(&perm("2413")));
        assert!(perm("3142").contains(&perm("3142")));
        assert!(perm("123").contains(&Permutation::empty()));
        assert!(Permutation::empty().contains(&Permutation::empty()));
        assert!(!Permutation::empty().contains(&perm("1")));
    }

    #[test]
    fn avoids_all_examples() {
        assert!(perm("2143").avoids_all(&[perm("1342"), perm("1423")]));
        assert!(Permutation::empty().avoids_all(&[perm("1"), perm("21")]));
        assert!(!perm("3142").avoids_all(&[perm("3142")]));
    }

    #[test]
    fn symmetry_examples() {
        assert_eq!(perm("123").reverse(), perm("321"));
        assert_eq!(perm("2143").complement(), perm("3412"));
        assert_eq!(perm("3142").inverse(), perm("2413"));
        assert_eq!(perm("132").reverse_complement(), perm("213"));
    }

    #[test]
    fn statistics_examples() {
        let p = perm("3,1,5,2,6,4,9,7,10,8");
        let st = p.statistics();
        assert_eq!(st.fix, 0);
        assert_eq!(st.lis, 5);
        assert_eq!(pi_hat().statistics().fix, 4);
        let e = Permutation::empty().statistics();
        assert_eq!(e, StatRecord::default());
        assert_eq!(perm("2143").statistics().two_cycles, 2);
        assert_eq!(perm("4132").statistics().two_cycles, 0);
        assert_eq!(perm("21").statistics().fix_minus1, 1);
    }

    #[test]
    fn cycle_examples() {
        let render = |p: &Permutation| p.cycles().iter().map(|c| c.to_string()).collect::<String>();
        assert_eq!(render(&Permutation::identity(3)), "(1)(2)(3)");
        assert_eq!(render(&perm("63215487")), "(641)(32)(5)(87)");
        // Canonical order is by minimum element; compare as sets against the
        // order in which these cycles are usually printed.
        let notation = pi_hat().cycle_notation();
        let mut got: Vec<String> = notation.split_inclusive(')').map(|s| s.to_string()).collect();
        let mut want: Vec<String> = ["(12,8,2,1)", "(6,4,3)", "(10,9)", "(16,14,13)", "(15)", "(11)", "(7)", "(5)"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        got.sort();
        want.sort();
        assert_eq!(got, want);
        let mins: Vec<u32> = pi_hat().cycles().iter().map(Cycle::min).collect();
        assert!(mins.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn parity_subsequences() {
        assert_eq!(perm("64357821").even_subsequence(), vec![6, 4, 8, 2]);
        assert_eq!(perm("61325487").even_subsequence(), vec![6, 2, 4, 8]);
        assert_eq!(perm("21").odd_subsequence(), vec![1]);
    }

    #[test]
    fn parse_formats() {
        assert_eq!(perm("2143"), perm("2,1,4,3"));
        assert_eq!(perm("2 1 4 3"), perm("(2,1,4,3)"));
        assert_eq!(perm(""), Permutation::empty());
        assert!("2243".parse::<Permutation>().is_err());
        assert!("21a".parse::<Permutation>().is_err());
        assert_eq!(pi_hat().to_string(), "12,1,6,3,5,4,7,2,10,9,11,8,16,13,15,14");
        assert_eq!(perm("3142").to_string(), "3142");
    }

    #[test]
    fn statistic_names() {
        for st in Statistic::ALL {
            assert_eq!(st.name().parse::<Statistic>().unwrap(), st);
        }
        assert!(matches!("bogus".parse::<Statistic>(), Err(Error::UnknownStatistic(_))));
    }

    #[test]
    fn incremental_check_matches_full_check() {
        let pat = perm("132");
        let w = perm("2143").into_word();
        for end in 1..=w.len() {
            let full = contains_word(&w[..end], pat.word());
            let inc = (1..=end).any(|e| completes_occurrence(&w[..e], pat.word()));
            assert_eq!(full, inc);
        }
    }
}
