//! Brute-force sides of the checks. Nothing here touches the series code.

use std::collections::BTreeMap;

use crate::dumont::{count_u64, generate_all, DumontKind};
use crate::perm::{perm, Permutation, Statistic};

/// All permutations of `{1..n}` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut word: Vec<u32> = (1..=n as u32).collect();
    let mut out = vec![Permutation::from_word_unchecked(word.clone())];
    loop {
        let Some(i) = (1..word.len()).rev().find(|&i| word[i - 1] < word[i]) else {
            return out;
        };
        let j = (i..word.len()).rev().find(|&j| word[j] > word[i - 1]).expect("successor exists");
        word.swap(i - 1, j);
        word[i..].reverse();
        out.push(Permutation::from_word_unchecked(word.clone()));
    }
}

pub fn patterns(list: &[&str]) -> Vec<Permutation> {
    list.iter().map(|p| perm(p)).collect()
}

/// Number of Dumont permutations of length `2n` avoiding every listed
/// pattern.
pub fn count(kind: DumontKind, n: usize, avoid: &[&str]) -> u64 {
    count_u64(kind, n, &patterns(avoid))
}

pub fn members(kind: DumontKind, n: usize, avoid: &[&str]) -> Vec<Permutation> {
    generate_all(kind, n, &patterns(avoid))
}

/// Frequency of each value of one statistic.
pub fn stat_distribution(kind: DumontKind, n: usize, avoid: &[&str], stat: Statistic) -> BTreeMap<usize, u64> {
    let mut out = BTreeMap::new();
    for p in members(kind, n, avoid) {
        *out.entry(p.statistics().get(stat)).or_insert(0) += 1;
    }
    out
}
