//! Dumont permutations of the first and second kind.
//!
//! Generation is a position-by-position backtracking search. The defining
//! conditions are enforced as each entry is placed, and pattern avoidance is
//! pruned by checking only occurrences that end at the newest entry.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::{completes_occurrence, Permutation, Statistic};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DumontKind {
    /// Every even value is followed by a descent, every odd value by an
    /// ascent or the end of the word.
    First,
    /// Even positions are deficiencies, odd positions weak excedances.
    Second,
}

impl FromStr for DumontKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "d1" | "first" | "1" => Ok(DumontKind::First),
            "d2" | "second" | "2" => Ok(DumontKind::Second),
            _ => Err(Error::Parse {
                what: "Dumont kind",
                input: s.to_string(),
                reason: "expected d1 or d2".into(),
            }),
        }
    }
}

impl fmt::Display for DumontKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DumontKind::First => "d1",
            DumontKind::Second => "d2",
        })
    }
}

pub fn is_dumont(perm: &Permutation, kind: DumontKind) -> bool {
    let w = perm.word();
    if !w.len().is_multiple_of(2) {
        return false;
    }
    match kind {
        DumontKind::First => w.iter().enumerate().all(|(i, &v)| match w.get(i + 1) {
            Some(&next) if v % 2 == 0 => next < v,
            Some(&next) => next > v,
            None => v % 2 == 1,
        }),
        DumontKind::Second => w.iter().enumerate().all(|(i, &v)| {
            let pos = i as u32 + 1;
            if pos.is_multiple_of(2) {
                v < pos
            } else {
                v >= pos
            }
        }),
    }
}

/// Backtracking state shared by the streaming iterator and the counters.
#[derive(Debug, Clone)]
struct Search {
    kind: DumontKind,
    len: usize,
    avoid: Vec<Vec<u32>>,
    word: Vec<u32>,
    used: Vec<bool>,
}

impl Search {
    fn new(kind: DumontKind, n: usize, avoid: &[Permutation]) -> Self {
        Self {
            kind,
            len: 2 * n,
            avoid: avoid.iter().map(|p| p.word().to_vec()).collect(),
            word: Vec::with_capacity(2 * n),
            used: vec![false; 2 * n + 1],
        }
    }

    /// Every word contains the empty pattern.
    fn blocked(&self) -> bool {
        self.avoid.iter().any(|p| p.is_empty())
    }

    /// Whether `v` may occupy the next position as far as the Dumont
    /// conditions are concerned.
    fn shape_allows(&self, v: u32) -> bool {
        let pos = self.word.len() as u32 + 1;
        match self.kind {
            DumontKind::Second => {
                if pos.is_multiple_of(2) {
                    v < pos
                } else {
                    v >= pos
                }
            }
            DumontKind::First => {
                if pos as usize == self.len && v.is_multiple_of(2) {
                    return false;
                }
                match self.word.last() {
                    Some(&prev) if prev % 2 == 0 => v < prev,
                    Some(&prev) => v > prev,
                    None => true,
                }
            }
        }
    }

    /// Places `v` if allowed, returning whether it was placed.
    fn try_push(&mut self, v: u32) -> bool {
        if self.used[v as usize] || !self.shape_allows(v) {
            return false;
        }
        self.word.push(v);
        if self
            .avoid
            .iter()
            .any(|pat| completes_occurrence(&self.word, pat))
        {
            self.word.pop();
            return false;
        }
        self.used[v as usize] = true;
        true
    }

    fn pop(&mut self) {
        if let Some(v) = self.word.pop() {
            self.used[v as usize] = false;
        }
    }

    fn visit(&mut self, out: &mut impl FnMut(&[u32])) {
        if self.word.len() == self.len {
            out(&self.word);
            return;
        }
        for v in 1..=self.len as u32 {
            if self.try_push(v) {
                self.visit(out);
                self.pop();
            }
        }
    }

    /// Candidate first entries, used to split work across threads.
    fn first_entries(&self) -> Vec<u32> {
        let mut probe = self.clone();
        (1..=self.len as u32)
            .filter(|&v| {
                let ok = probe.try_push(v);
                if ok {
                    probe.pop();
                }
                ok
            })
            .collect()
    }
}

/// Lexicographic stream of the Dumont permutations of length `2n` that avoid
/// every pattern in the avoidance set.
#[derive(Debug, Clone)]
pub struct DumontIter {
    search: Search,
    cursor: Vec<u32>,
    started: bool,
    done: bool,
}

impl Iterator for DumontIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        if self.search.blocked() {
            self.done = true;
            return None;
        }
        if self.search.len == 0 {
            self.done = true;
            return Some(Permutation::empty());
        }
        if !self.started {
            self.started = true;
            self.cursor[0] = 1;
        }
        let max = self.search.len as u32;
        loop {
            let depth = self.search.word.len();
            let mut placed = false;
            while self.cursor[depth] <= max {
                let v = self.cursor[depth];
                self.cursor[depth] += 1;
                if self.search.try_push(v) {
                    placed = true;
                    break;
                }
            }
            if placed {
                if self.search.word.len() == self.search.len {
                    let out = Permutation::from_word_unchecked(self.search.word.clone());
                    self.search.pop();
                    return Some(out);
                }
                self.cursor[depth + 1] = 1;
            } else {
                if depth == 0 {
                    self.done = true;
                    return None;
                }
                self.search.pop();
            }
        }
    }
}

pub fn generate(kind: DumontKind, n: usize, avoid: &[Permutation]) -> DumontIter {
    DumontIter {
        search: Search::new(kind, n, avoid),
        cursor: vec![1; 2 * n + 1],
        started: false,
        done: false,
    }
}

/// Same members as [`generate`], collected in lexicographic order with the
/// search split over the first entry.
pub fn generate_all(kind: DumontKind, n: usize, avoid: &[Permutation]) -> Vec<Permutation> {
    let root = Search::new(kind, n, avoid);
    if root.blocked() {
        return Vec::new();
    }
    if root.len == 0 {
        return vec![Permutation::empty()];
    }
    root.first_entries()
        .into_par_iter()
        .map(|v| {
            let mut s = root.clone();
            s.try_push(v);
            let mut found = Vec::new();
            s.visit(&mut |w| found.push(Permutation::from_word_unchecked(w.to_vec())));
            found
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

pub fn count(kind: DumontKind, n: usize, avoid: &[Permutation]) -> BigUint {
    BigUint::from(count_u64(kind, n, avoid))
}

pub(crate) fn count_u64(kind: DumontKind, n: usize, avoid: &[Permutation]) -> u64 {
    let root = Search::new(kind, n, avoid);
    if root.blocked() {
        return 0;
    }
    if root.len == 0 {
        return 1;
    }
    root.first_entries()
        .into_par_iter()
        .map(|v| {
            let mut s = root.clone();
            s.try_push(v);
            let mut c = 0u64;
            s.visit(&mut |_| c += 1);
            c
        })
        .sum()
}

/// Joint frequency table of the requested statistics.
pub fn distribution(
    kind: DumontKind,
    n: usize,
    avoid: &[Permutation],
    stats: &[Statistic],
) -> BTreeMap<Vec<usize>, u64> {
    let mut table = BTreeMap::new();
    for p in generate_all(kind, n, avoid) {
        let rec = p.statistics();
        let key = stats.iter().map(|&s| rec.get(s)).collect();
        *table.entry(key).or_insert(0) += 1;
    }
    table
}

/// Like [`distribution`] but with statistic names, rejecting unknown ones.
pub fn distribution_by_name(
    kind: DumontKind,
    n: usize,
    avoid: &[Permutation],
    names: &[&str],
) -> Result<BTreeMap<Vec<usize>, u64>> {
    let stats = names
        .iter()
        .map(|s| s.parse())
        .collect::<Result<Vec<Statistic>>>()?;
    Ok(distribution(kind, n, avoid, &stats))
}

/// Rows `R_0, R_1, ..., R_rows` of the Seidel-style triangle. Odd rows are
/// running sums from the left, even rows are running sums from the right
/// with the leading entry doubled.
fn seidel_rows(rows: usize) -> Vec<Vec<BigUint>> {
    let mut out = vec![vec![BigUint::from(1u32)]];
    for i in 1..=rows {
        let prev = &out[i - 1];
        let mut next = Vec::with_capacity(prev.len() + 1);
        if i % 2 == 1 {
            let mut acc = BigUint::default();
            for v in prev {
                acc += v;
                next.push(acc.clone());
            }
        } else {
            let mut acc = BigUint::default();
            for v in prev.iter().rev() {
                acc += v;
                next.push(acc.clone());
            }
            next.reverse();
            next.insert(0, next[0].clone());
        }
        out.push(next);
    }
    out
}

/// Unsigned Genocchi number `G_m` for even `m >= 2`.
pub fn genocchi(m: usize) -> Result<BigUint> {
    if m < 2 || !m.is_multiple_of(2) {
        return Err(crate::error::precondition(
            "genocchi",
            format!("index must be even and at least 2, got {m}"),
        ));
    }
    Ok(seidel_rows(m - 2)[m - 2][0].clone())
}

/// Median Genocchi number `H_n` for `n >= 1`, read off the same triangle.
pub fn median_genocchi(n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(crate::error::precondition(
            "median_genocchi",
            "index must be at least 1",
        ));
    }
    let rows = seidel_rows(2 * n - 1);
    Ok(rows[2 * n - 1].last().cloned().unwrap_or_default())
}

/// Number of fixed-point-free members of the second kind of length `2n`.
pub fn count_dumont_derangements(n: usize) -> u64 {
    let root = Search::new(DumontKind::Second, n, &[]);
    if root.len == 0 {
        return 1;
    }
    let mut s = root;
    let mut c = 0u64;
    s.visit(&mut |w| {
        if w.iter().enumerate().all(|(i, &v)| v != i as u32 + 1) {
            c += 1;
        }
    });
    c
}

/// `H_n` computed from the triangle and confirmed against the derangement
/// count among Dumont permutations of the second kind.
pub fn median_genocchi_checked(n: usize) -> Result<BigUint> {
    let tri = median_genocchi(n)?;
    let brute = BigUint::from(count_dumont_derangements(n));
    if tri != brute {
        return Err(Error::Disagreement {
            what: "median Genocchi",
            detail: format!("triangle gives {tri}, derangement count gives {brute}"),
        });
    }
    Ok(tri)
}

/// `G_2, G_4, ...` and `H_1, H_2, ...` up to a given number of terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenocchiTable {
    pub unsigned_values: Vec<BigUint>,
    pub median_values: Vec<BigUint>,
}

impl GenocchiTable {
    pub fn new(terms: usize) -> Self {
        if terms == 0 {
            return Self {
                unsigned_values: Vec::new(),
                median_values: Vec::new(),
            };
        }
        let rows = seidel_rows(2 * terms - 1);
        Self {
            unsigned_values: (0..terms).map(|j| rows[2 * j][0].clone()).collect(),
            median_values: (1..=terms)
                .map(|j| rows[2 * j - 1].last().cloned().unwrap_or_default())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::perm;

    fn words(ps: &[Permutation]) -> Vec<String> {
        ps.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn recognition() {
        assert!(is_dumont(&perm("2143"), DumontKind::First));
        assert!(!is_dumont(&perm("3142"), DumontKind::First));
        assert!(is_dumont(&perm("4132"), DumontKind::Second));
        assert!(is_dumont(&Permutation::empty(), DumontKind::First));
        assert!(!is_dumont(&perm("1"), DumontKind::Second));
    }

    #[test]
    fn small_lists() {
        let d2: Vec<_> = generate(DumontKind::Second, 2, &[]).collect();
        assert_eq!(words(&d2), ["2143", "3142", "4132"]);
        let d1: Vec<_> = generate(DumontKind::First, 2, &[]).collect();
        assert_eq!(words(&d1), ["2143", "3421", "4213"]);
        let filtered: Vec<_> = generate(DumontKind::Second, 2, &[perm("2143")]).collect();
        assert_eq!(words(&filtered), ["3142", "4132"]);
        let empty: Vec<_> = generate(DumontKind::First, 0, &[]).collect();
        assert_eq!(empty, vec![Permutation::empty()]);
    }

    #[test]
    fn counts() {
        assert_eq!(count(DumontKind::First, 2, &[]), BigUint::from(3u32));
        assert_eq!(count(DumontKind::Second, 3, &[perm("3142")]), BigUint::from(5u32));
        assert_eq!(count(DumontKind::First, 3, &[]), BigUint::from(17u32));
        assert_eq!(count(DumontKind::Second, 4, &[]), BigUint::from(155u32));
    }

    #[test]
    fn stream_matches_parallel_collection() {
        for kind in [DumontKind::First, DumontKind::Second] {
            for n in 0..=4 {
                let a: Vec<_> = generate(kind, n, &[perm("132")]).collect();
                let b = generate_all(kind, n, &[perm("132")]);
                assert_eq!(a, b);
                assert!(a.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn genocchi_values() {
        let g: Vec<u64> = [2, 4, 6, 8, 10, 12, 14]
            .iter()
            .map(|&m| genocchi(m).unwrap().try_into().unwrap())
            .collect();
        assert_eq!(g, [1, 1, 3, 17, 155, 2073, 38227]);
        assert!(genocchi(5).is_err());
        assert_eq!(median_genocchi(2).unwrap(), BigUint::from(2u32));
        let table = GenocchiTable::new(6);
        let h: Vec<u64> = table.median_values.iter().map(|v| v.try_into().unwrap()).collect();
        assert_eq!(h, [1, 2, 8, 56, 608, 9440]);
        for n in 1..=4 {
            median_genocchi_checked(n).unwrap();
        }
    }

    #[test]
    fn distributions() {
        let d = distribution(DumontKind::Second, 2, &[perm("3142")], &[Statistic::Fix]);
        assert_eq!(d, BTreeMap::from([(vec![0], 1), (vec![1], 1)]));
        let d = distribution(DumontKind::Second, 1, &[], &[Statistic::TwoCycles]);
        assert_eq!(d, BTreeMap::from([(vec![1], 1)]));
        let d = distribution(DumontKind::Second, 2, &[perm("2143")], &[Statistic::Fix]);
        assert_eq!(d, BTreeMap::from([(vec![0], 1), (vec![1], 1)]));
        assert!(distribution_by_name(DumontKind::Second, 2, &[], &["nope"]).is_err());
    }
}
