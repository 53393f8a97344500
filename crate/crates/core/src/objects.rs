//! Noncrossing partitions, the permutation family `E_n`, upper and lower
//! boards, and lattice paths.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::binomial;

use crate::error::{precondition, Error, Result};
use crate::perm::{completes_occurrence, parse_values, write_values, Permutation};

/// A noncrossing set partition of `{1, ..., n}`. Blocks are kept sorted by
/// their minimum, each block listed in decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NoncrossingPartition {
    n: usize,
    blocks: Vec<Vec<u32>>,
}

impl NoncrossingPartition {
    pub fn new(n: usize, blocks: Vec<Vec<u32>>) -> Result<Self> {
        let bad = |reason: String| Error::Parse {
            what: "noncrossing partition",
            input: format!("{blocks:?}"),
            reason,
        };
        let mut seen = vec![false; n + 1];
        for b in &blocks {
            if b.is_empty() {
                return Err(bad("empty block".into()));
            }
            for &v in b {
                if v == 0 || v as usize > n || seen[v as usize] {
                    return Err(bad(format!("{v} is out of range or repeated")));
                }
                seen[v as usize] = true;
            }
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(bad(format!("blocks do not cover 1..={n}")));
        }
        if !is_noncrossing(&blocks) {
            return Err(bad("two blocks cross".into()));
        }
        let mut blocks = blocks;
        for b in &mut blocks {
            b.sort_unstable_by(|a, b| b.cmp(a));
        }
        blocks.sort_by_key(|b| *b.last().expect("nonempty"));
        Ok(Self { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn parts(&self) -> usize {
        self.blocks.len()
    }
}

/// True when no `a < b < c < d` has `a, c` in one block and `b, d` in another.
pub fn is_noncrossing(blocks: &[Vec<u32>]) -> bool {
    let n = blocks.iter().flatten().copied().max().unwrap_or(0) as usize;
    let mut owner = vec![usize::MAX; n + 1];
    for (i, b) in blocks.iter().enumerate() {
        for &v in b {
            owner[v as usize] = i;
        }
    }
    // Scanning left to right, a crossing shows up as returning to a block
    // that is not on top of the stack of currently open blocks.
    let mut last = vec![0u32; blocks.len()];
    for (i, b) in blocks.iter().enumerate() {
        last[i] = b.iter().copied().max().unwrap_or(0);
    }
    let mut stack: Vec<usize> = Vec::new();
    for v in 1..=n as u32 {
        let o = owner[v as usize];
        if o == usize::MAX {
            continue;
        }
        if let Some(pos) = stack.iter().position(|&s| s == o) {
            if pos != stack.len() - 1 {
                return false;
            }
        } else {
            stack.push(o);
        }
        if last[o] == v {
            stack.pop();
        }
    }
    true
}

impl fmt::Display for NoncrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.n > 9;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            if wide {
                let s: Vec<String> = b.iter().map(u32::to_string).collect();
                f.write_str(&s.join(","))?;
            } else {
                write_values(f, b)?;
            }
        }
        Ok(())
    }
}

impl FromStr for NoncrossingPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let blocks = s
            .trim()
            .split('/')
            .filter(|b| !b.trim().is_empty())
            .map(|b| parse_values(b, "noncrossing partition"))
            .collect::<Result<Vec<_>>>()?;
        let n = blocks.iter().map(Vec::len).sum();
        NoncrossingPartition::new(n, blocks)
    }
}

/// All noncrossing partitions of `{1, ..., n}`, built by deciding for each
/// element whether it opens a block or joins one that can still be reached.
pub fn enumerate_nc(n: usize) -> Vec<NoncrossingPartition> {
    fn rec(v: u32, n: u32, blocks: &mut Vec<Vec<u32>>, open: &mut Vec<usize>, out: &mut Vec<NoncrossingPartition>) {
        if v > n {
            out.push(NoncrossingPartition::new(n as usize, blocks.clone()).expect("noncrossing by construction"));
            return;
        }
        // Joining an open block closes every block opened after it.
        for depth in (0..open.len()).rev() {
            let b = open[depth];
            let saved: Vec<usize> = open.drain(depth + 1..).collect();
            blocks[b].push(v);
            rec(v + 1, n, blocks, open, out);
            blocks[b].pop();
            open.extend(saved);
        }
        blocks.push(vec![v]);
        open.push(blocks.len() - 1);
        rec(v + 1, n, blocks, open, out);
        open.pop();
        blocks.pop();
    }
    let mut out = Vec::new();
    rec(1, n as u32, &mut Vec::new(), &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// `N(n, k) = (1/n) C(n, k) C(n, k + 1)`, the number of noncrossing
/// partitions of `[n]` into `n - k` parts.
pub fn narayana(n: usize, k: usize) -> Result<BigUint> {
    if n == 0 || k + 1 > n {
        return Err(precondition("narayana", format!("need 1 <= k + 1 <= n, got n = {n}, k = {k}")));
    }
    let n_big = BigUint::from(n);
    let a = binomial(n_big.clone(), BigUint::from(k));
    let b = binomial(n_big.clone(), BigUint::from(k + 1));
    Ok(a * b / n_big)
}

/// Membership in `E_n` via `σ = (k, rc(σ'), k + σ'')` with `σ' ∈ E_{k-1}` on
/// positions `2..=k` and `σ'' ∈ E_{n-k}` on the rest.
pub fn is_e(sigma: &Permutation) -> bool {
    is_e_word(sigma.word())
}

fn is_e_word(w: &[u32]) -> bool {
    let Some(&k) = w.first() else {
        return true;
    };
    let k = k as usize;
    if k == 0 || k > w.len() {
        return false;
    }
    let inner = &w[1..k];
    if inner.iter().any(|&v| v as usize >= k) {
        return false;
    }
    let m = inner.len() as u32;
    let flipped: Vec<u32> = inner.iter().rev().map(|&v| m + 1 - v).collect();
    let rest: Vec<u32> = w[k..].iter().map(|&v| v - k as u32).collect();
    is_e_word(&flipped) && is_e_word(&rest)
}

pub fn enumerate_e(n: usize) -> Vec<Permutation> {
    let mut table: Vec<Vec<Vec<u32>>> = vec![vec![Vec::new()]];
    for m in 1..=n {
        let mut here = Vec::new();
        for k in 1..=m {
            for inner in &table[k - 1] {
                let len = inner.len() as u32;
                let flipped: Vec<u32> = inner.iter().rev().map(|&v| len + 1 - v).collect();
                for rest in &table[m - k] {
                    let mut w = Vec::with_capacity(m);
                    w.push(k as u32);
                    w.extend(&flipped);
                    w.extend(rest.iter().map(|&v| v + k as u32));
                    here.push(w);
                }
            }
        }
        here.sort();
        table.push(here);
    }
    table
        .swap_remove(n)
        .into_iter()
        .map(Permutation::from_word_unchecked)
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoardKind {
    /// 132-avoiding with `σ(i) >= max(2i - 1 - n, 1)`.
    Upper,
    /// 213-avoiding with `σ(i) <= min(2i - 1, n)`.
    Lower,
}

impl BoardKind {
    fn pattern(self) -> [u32; 3] {
        match self {
            BoardKind::Upper => [1, 3, 2],
            BoardKind::Lower => [2, 1, 3],
        }
    }

    /// Whether value `v` may sit at 1-based position `pos` on a board of size `n`.
    pub fn cell_allowed(self, n: usize, pos: usize, v: u32) -> bool {
        let (n, pos, v) = (n as i64, pos as i64, v as i64);
        match self {
            BoardKind::Upper => v >= (2 * pos - 1 - n).max(1),
            BoardKind::Lower => v <= (2 * pos - 1).min(n),
        }
    }
}

pub fn is_board(sigma: &Permutation, kind: BoardKind) -> bool {
    let n = sigma.len();
    let w = sigma.word();
    let pat = kind.pattern();
    w.iter().enumerate().all(|(i, &v)| kind.cell_allowed(n, i + 1, v))
        && (1..=n).all(|end| !completes_occurrence(&w[..end], &pat))
}

pub fn is_upper_board(sigma: &Permutation) -> bool {
    is_board(sigma, BoardKind::Upper)
}

pub fn is_lower_board(sigma: &Permutation) -> bool {
    is_board(sigma, BoardKind::Lower)
}

/// Boards of the given kind in `S_n`, lexicographic, by pruned backtracking.
pub fn enumerate_boards(n: usize, kind: BoardKind) -> Vec<Permutation> {
    fn rec(n: usize, kind: BoardKind, word: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if word.len() == n {
            out.push(Permutation::from_word_unchecked(word.clone()));
            return;
        }
        let pos = word.len() + 1;
        let pat = kind.pattern();
        for v in 1..=n as u32 {
            if used[v as usize] || !kind.cell_allowed(n, pos, v) {
                continue;
            }
            word.push(v);
            if !completes_occurrence(word, &pat) {
                used[v as usize] = true;
                rec(n, kind, word, used, out);
                used[v as usize] = false;
            }
            word.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, kind, &mut Vec::with_capacity(n), &mut vec![false; n + 1], &mut out);
    out
}

pub fn count_boards(n: usize, kind: BoardKind) -> usize {
    enumerate_boards(n, kind).len()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LatticeStep {
    N,
    E,
    W,
}

/// A lattice path given by its starting point and unit steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    pub start: (i64, i64),
    pub steps: Vec<LatticeStep>,
}

impl LatticePath {
    pub fn end(&self) -> (i64, i64) {
        self.points().last().copied().unwrap_or(self.start)
    }

    /// Every lattice point visited, starting point included.
    pub fn points(&self) -> Vec<(i64, i64)> {
        let mut p = self.start;
        let mut out = vec![p];
        for s in &self.steps {
            match s {
                LatticeStep::N => p.1 += 1,
                LatticeStep::E => p.0 += 1,
                LatticeStep::W => p.0 -= 1,
            }
            out.push(p);
        }
        out
    }

    pub fn parse(start: (i64, i64), s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'N' => Ok(LatticeStep::N),
                'E' => Ok(LatticeStep::E),
                'W' => Ok(LatticeStep::W),
                _ => Err(Error::Parse {
                    what: "lattice path",
                    input: s.to_string(),
                    reason: format!("unexpected character {c:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { start, steps })
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                LatticeStep::N => "N",
                LatticeStep::E => "E",
                LatticeStep::W => "W",
            })?;
        }
        Ok(())
    }
}

/// Northeast paths from `(0, 0)` to `(n, ⌊n/2⌋)` never going above
/// `y = x/2`, counted by dynamic programming over columns.
pub fn count_ne_paths(n: usize) -> BigUint {
    let top = n / 2;
    let mut col = vec![BigUint::default(); top + 1];
    col[0] = BigUint::from(1u32);
    // Moving to column x keeps every count (an east step), then north
    // steps inside the column accumulate from below.
    for x in 1..=n {
        for y in 1..=top.min(x / 2) {
            let below = col[y - 1].clone();
            col[y] += below;
        }
    }
    col[top].clone()
}

/// Explicit enumeration of the same family, for cross-checking the DP.
pub fn enumerate_ne_paths(n: usize) -> Vec<LatticePath> {
    fn rec(n: usize, x: usize, y: usize, cur: &mut Vec<LatticeStep>, out: &mut Vec<LatticePath>) {
        let top = n / 2;
        if x == n && y == top {
            out.push(LatticePath { start: (0, 0), steps: cur.clone() });
            return;
        }
        if y < top && 2 * (y + 1) <= x {
            cur.push(LatticeStep::N);
            rec(n, x, y + 1, cur, out);
            cur.pop();
        }
        if x < n {
            cur.push(LatticeStep::E);
            rec(n, x + 1, y, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 0, 0, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::perm;

    #[test]
    fn noncrossing_predicate() {
        assert!(!is_noncrossing(&[vec![1, 3], vec![2, 4]]));
        assert!(is_noncrossing(&[vec![1, 4], vec![2, 3]]));
        assert!(is_noncrossing(&[vec![6, 4, 1], vec![3, 2], vec![5], vec![8, 7]]));
    }

    #[test]
    fn partition_format() {
        let p: NoncrossingPartition = "641/32/5/87".parse().unwrap();
        assert_eq!(p.n(), 8);
        assert_eq!(p.parts(), 4);
        assert_eq!(p.to_string(), "641/32/5/87");
        assert!("13/24".parse::<NoncrossingPartition>().is_err());
    }

    #[test]
    fn narayana_values() {
        assert_eq!(narayana(3, 1).unwrap(), BigUint::from(3u32));
        assert!(narayana(3, 3).is_err());
        assert!(narayana(0, 0).is_err());
        let catalan = [1u32, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for n in 1..=10 {
            let s: BigUint = (0..n).map(|k| narayana(n, k).unwrap()).sum();
            assert_eq!(s, BigUint::from(catalan[n]));
        }
    }

    #[test]
    fn nc_enumeration_refines_narayana() {
        for n in 1..=8 {
            let all = enumerate_nc(n);
            for k in 0..n {
                let c = all.iter().filter(|p| p.parts() == n - k).count();
                assert_eq!(BigUint::from(c), narayana(n, k).unwrap());
            }
        }
        assert_eq!(enumerate_nc(0).len(), 1);
    }

    #[test]
    fn e_family() {
        assert!(is_e(&perm("3124")));
        assert!(is_e(&perm("1")));
        assert!(is_e(&perm("2143")));
        assert!(!is_e(&perm("3412")));
        assert_eq!(enumerate_e(4).len(), 14);
        for n in 0..=7 {
            let all = enumerate_e(n);
            assert!(all.iter().all(is_e));
            let brute = crate::harness::oracle::all_permutations(n)
                .into_iter()
                .filter(is_e)
                .count();
            assert_eq!(brute, all.len());
        }
    }

    #[test]
    fn board_examples() {
        assert!(is_lower_board(&perm("1342")));
        assert!(is_upper_board(&perm("3214")));
        let lower: Vec<usize> = (0..=6).map(|n| count_boards(n, BoardKind::Lower)).collect();
        assert_eq!(lower, [1, 1, 1, 2, 3, 7, 12]);
    }

    #[test]
    fn boards_match_brute_force() {
        for n in 0..=7 {
            for kind in [BoardKind::Upper, BoardKind::Lower] {
                let brute: Vec<Permutation> = crate::harness::oracle::all_permutations(n)
                    .into_iter()
                    .filter(|p| is_board(p, kind))
                    .collect();
                assert_eq!(brute, enumerate_boards(n, kind));
            }
        }
    }

    #[test]
    fn ne_paths() {
        assert_eq!(count_ne_paths(0), BigUint::from(1u32));
        assert_eq!(count_ne_paths(4), BigUint::from(3u32));
        assert_eq!(count_ne_paths(5), BigUint::from(7u32));
        for n in 0..=14 {
            assert_eq!(count_ne_paths(n), BigUint::from(enumerate_ne_paths(n).len()));
        }
    }
}
