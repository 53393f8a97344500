//! Generating functions for Dumont permutations of the first kind avoiding a
//! pair of 4-letter patterns together with one more pattern `τ`:
//!
//! * `A_τ` for the pair {1342, 1423},
//! * `B_τ` for the pair {2341, 2413},
//! * `C_τ` for the pair {1342, 2413}.
//!
//! Each family is computed by recursion on the shape of `τ`. A rule is only
//! applied when its hypotheses hold; anything else is rejected.

use std::fmt;

use num_rational::BigRational;

use super::gf::{catalan_series, schroder_s};
use super::ring::int;
use super::truncated::Series;
use crate::error::{Error, Result};
use crate::perm::{perm, Permutation};

/// Which recursion produced a series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    Base,
    /// `τ` contains one of the two fixed patterns, so avoiding the pair
    /// already forces avoiding `τ`.
    ContainsPair,
    /// `τ = τ'ℓ` with `τ'` not decreasing-decomposable, `τ'_{ℓ-1} ≠ ℓ-1`.
    AppendMax,
    /// `τ = τ'(ℓ-1)ℓ`.
    AppendRise,
    /// `τ = τ'ℓ(ℓ-1)`.
    AppendFall,
    /// `τ = ℓτ'` with `τ'` not decreasing-decomposable, `τ_ℓ ≠ ℓ-1`.
    PrependMax,
    /// `τ` not decreasing-decomposable with `τ_1, τ_{ℓ-1}, τ_ℓ ≠ ℓ`.
    Schroder,
    /// `213`, where the tail rule applies although `21` is decreasing-
    /// decomposable.
    AppendMaxRelaxed,
    /// `τ = ℓτ'(ℓ-1)`.
    WrapMax,
    /// Increasing pattern `12...k`.
    Increasing,
    /// Decreasing pattern `k...21`.
    Decreasing,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Split point with every entry of the prefix above every entry of the
/// suffix.
pub fn is_decreasing_decomposable(tau: &[u32]) -> bool {
    (1..tau.len()).any(|k| tau[..k].iter().min() > tau[k..].iter().max())
}

pub fn is_increasing_decomposable(tau: &[u32]) -> bool {
    (1..tau.len()).any(|k| tau[..k].iter().max() < tau[k..].iter().min())
}

fn standardized(values: &[u32]) -> Vec<u32> {
    Permutation::standardize(values).into_word()
}

fn contains_any(tau: &[u32], pats: &[&str]) -> bool {
    let t = Permutation::from_word_unchecked(tau.to_vec());
    pats.iter().any(|p| t.contains(&perm(p)))
}

/// `(1 + x(1 - B) - sqrt((1 + x(1 - B))^2 - 4x)) / (2x)`, one order lower
/// than `B`.
fn quadratic_rule(b: &Series) -> Result<Series> {
    let n = b.order();
    let p = Series::one(n).sub(b).shift_up(1).add_constant(&int(1));
    let disc = p.mul(&p).sub(&Series::x(n).scale(&int(4)));
    let num = p.sub(&disc.sqrt()?);
    Ok(num.shift_down(1)?.scale(&BigRational::new(1.into(), 2.into())))
}

/// `1 + x A^2 / (1 - x B)`.
fn append_rule(a: &Series, b: &Series) -> Result<Series> {
    let order = a.order().min(b.order());
    let num = a.mul(a).shift_up(1);
    let den = Series::one(order).sub(&b.shift_up(1));
    Ok(num.div(&den)?.add_constant(&int(1)))
}

/// `1 / (1 + x - 2x A)`.
fn prepend_rule(a: &Series) -> Result<Series> {
    let order = a.order();
    let den = Series::from_i64s(&[1, 1], order).sub(&a.shift_up(1).scale(&int(2)));
    den.invert()
}

/// `A_τ` together with the rule used at the top level.
pub fn a_tau_with_rule(tau: &Permutation, order: usize) -> Result<(Series, Rule)> {
    a_tau_derivation(tau, order).map(|(s, rules)| (s, *rules.last().expect("at least one rule")))
}

/// The series together with every rule applied, innermost first.
pub fn a_tau_derivation(tau: &Permutation, order: usize) -> Result<(Series, Vec<Rule>)> {
    let mut trace = Vec::new();
    let (s, _) = a_rec(tau.word(), order + 1, &mut trace)?;
    Ok((s.truncate(order), trace))
}

pub fn a_tau(tau: &Permutation, order: usize) -> Result<Series> {
    a_tau_with_rule(tau, order).map(|(s, _)| s)
}

fn a_rec(tau: &[u32], order: usize, trace: &mut Vec<Rule>) -> Result<(Series, Rule)> {
    let (s, rule) = a_step(tau, order, trace)?;
    trace.push(rule);
    Ok((s, rule))
}

fn a_step(tau: &[u32], order: usize, trace: &mut Vec<Rule>) -> Result<(Series, Rule)> {
    let l = tau.len();
    let rejected = || Error::NoApplicableTheorem(Permutation::from_word_unchecked(tau.to_vec()).to_string());
    match tau {
        [] => return Ok((Series::zero(order), Rule::Base)),
        [1] => return Ok((Series::one(order), Rule::Base)),
        [1, 2] => return Ok((Series::from_i64s(&[1, 1], order), Rule::Base)),
        [2, 1] => return Ok((Series::one(order), Rule::Base)),
        _ => {}
    }
    if contains_any(tau, &["1342", "1423"]) {
        return Ok((schroder_s(order), Rule::ContainsPair));
    }
    let lu = l as u32;
    if tau[l - 2] == lu - 1 && tau[l - 1] == lu {
        let (with_prev, _) = a_rec(&tau[..l - 1], order + 1, trace)?;
        let (head, _) = a_rec(&tau[..l - 2], order + 1, trace)?;
        return Ok((append_rule(&with_prev, &head)?.truncate(order), Rule::AppendRise));
    }
    if tau[l - 2] == lu && tau[l - 1] == lu - 1 {
        let (head, _) = a_rec(&tau[..l - 2], order + 1, trace)?;
        return Ok((quadratic_rule(&head)?.truncate(order), Rule::AppendFall));
    }
    if tau[l - 1] == lu {
        let head = &tau[..l - 1];
        if !is_decreasing_decomposable(head) && head[l - 2] != lu - 1 {
            let (a, _) = a_rec(head, order + 1, trace)?;
            return Ok((append_rule(&a, &a)?.truncate(order), Rule::AppendMax));
        }
    }
    if tau[0] == lu {
        let tail = standardized(&tau[1..]);
        if !is_decreasing_decomposable(&tail) && tau[l - 1] != lu - 1 {
            let (a, _) = a_rec(&tail, order, trace)?;
            return Ok((prepend_rule(&a)?, Rule::PrependMax));
        }
    }
    if !is_decreasing_decomposable(tau) && tau[0] != lu && tau[l - 2] != lu && tau[l - 1] != lu {
        return Ok((schroder_s(order), Rule::Schroder));
    }
    if tau == [2, 1, 3] {
        let (a, _) = a_rec(&[2, 1], order + 1, trace)?;
        return Ok((append_rule(&a, &a)?.truncate(order), Rule::AppendMaxRelaxed));
    }
    Err(rejected())
}

/// Closed forms listed for single patterns of length 4 next to the pair
/// {1342, 1423}.
pub fn a_tau_table_closed_form(tau: &Permutation, order: usize) -> Option<Series> {
    let n = order + 4;
    let x = Series::x(n);
    let one_minus_x = Series::from_i64s(&[1, -1], n);
    let form = match tau.to_string().as_str() {
        "1234" => {
            // 1 + x^5 (x + 2)^2 / ((1 - x)^2 (1 - x - x^2))
            let xp2 = Series::from_i64s(&[2, 1], n);
            let num = xp2.mul(&xp2).shift_up(5);
            let den = one_minus_x.mul(&one_minus_x).mul(&Series::from_i64s(&[1, -1, -1], n));
            num.div(&den).ok()?.add_constant(&int(1))
        }
        "1243" => {
            // C(x / (1 - x^2)^2) / (1 - x^2)
            let omx2 = Series::from_i64s(&[1, 0, -1], n);
            let u = x.div(&omx2.mul(&omx2)).ok()?;
            catalan_series(n).compose(&u).ok()?.div(&omx2).ok()?
        }
        "1324" => {
            let c = catalan_series(n);
            c.pow(3).shift_up(1).add_constant(&int(1))
        }
        "1342" | "1423" | "1432" => schroder_s(n),
        "2134" => {
            let den = one_minus_x.pow(3);
            x.div(&den).ok()?.add_constant(&int(1))
        }
        "2143" => catalan_series(n),
        _ => return None,
    };
    Some(form.truncate(order))
}

pub fn b_tau_with_rule(tau: &Permutation, order: usize) -> Result<(Series, Rule)> {
    b_tau_derivation(tau, order).map(|(s, rules)| (s, *rules.last().expect("at least one rule")))
}

/// The series together with every rule applied, innermost first.
pub fn b_tau_derivation(tau: &Permutation, order: usize) -> Result<(Series, Vec<Rule>)> {
    let mut trace = Vec::new();
    let (s, _) = b_rec(tau.word(), order + 1, &mut trace)?;
    Ok((s.truncate(order), trace))
}

pub fn b_tau(tau: &Permutation, order: usize) -> Result<Series> {
    b_tau_with_rule(tau, order).map(|(s, _)| s)
}

fn b_rec(tau: &[u32], order: usize, trace: &mut Vec<Rule>) -> Result<(Series, Rule)> {
    let (s, rule) = b_step(tau, order, trace)?;
    trace.push(rule);
    Ok((s, rule))
}

fn b_step(tau: &[u32], order: usize, trace: &mut Vec<Rule>) -> Result<(Series, Rule)> {
    let l = tau.len();
    let lu = l as u32;
    match tau {
        [] => return Ok((Series::zero(order), Rule::Base)),
        [1] | [2, 1] => return Ok((Series::one(order), Rule::Base)),
        [1, 2] => return Ok((Series::from_i64s(&[1, 1], order), Rule::Base)),
        _ => {}
    }
    if contains_any(tau, &["2341", "2413"]) {
        return Ok((schroder_s(order), Rule::ContainsPair));
    }
    if tau[0] == lu && tau[l - 1] == lu - 1 {
        let (b, _) = b_rec(&tau[1..l - 1], order + 1, trace)?;
        return Ok((quadratic_rule(&b)?.truncate(order), Rule::WrapMax));
    }
    if tau[0] == lu && tau[l - 1] != lu - 1 {
        let (b, _) = b_rec(&tau[1..], order, trace)?;
        return Ok((prepend_rule(&b)?, Rule::PrependMax));
    }
    Err(Error::NoApplicableTheorem(Permutation::from_word_unchecked(tau.to_vec()).to_string()))
}

/// `B_τ = C(x)` as stated for `τ = 312` and `τ = 4123`.
pub fn b_tau_stated_catalan(tau: &Permutation, order: usize) -> Option<Series> {
    matches!(tau.to_string().as_str(), "312" | "4123").then(|| catalan_series(order))
}

fn increasing(k: usize) -> Vec<u32> {
    (1..=k as u32).collect()
}

fn decreasing(k: usize) -> Vec<u32> {
    (1..=k as u32).rev().collect()
}

pub fn c_tau_with_rule(tau: &Permutation, order: usize) -> Result<(Series, Rule)> {
    let w = tau.word();
    let k = w.len();
    if w == increasing(k).as_slice() {
        return Ok((c_increasing(k, order), if k <= 2 { Rule::Base } else { Rule::Increasing }));
    }
    if w == decreasing(k).as_slice() {
        return Ok((c_decreasing(k, order), if k <= 2 { Rule::Base } else { Rule::Decreasing }));
    }
    Err(Error::NoApplicableTheorem(tau.to_string()))
}

pub fn c_tau(tau: &Permutation, order: usize) -> Result<Series> {
    c_tau_with_rule(tau, order).map(|(s, _)| s)
}

/// `C_{12...k}` for all `k` up to the requested one, from
/// `C_k = 1 + x Σ_{j=1}^{k-1} (C_j - C_{j-1}) C_{k-j} / (1 - x C_{k-2})`.
fn c_increasing(k: usize, order: usize) -> Series {
    let mut c = vec![Series::zero(order), Series::one(order), Series::from_i64s(&[1, 1], order)];
    for m in 3..=k {
        let mut sum = Series::zero(order);
        for j in 1..m {
            sum = sum.add(&c[j].sub(&c[j - 1]).mul(&c[m - j]));
        }
        let den = Series::one(order).sub(&c[m - 2].shift_up(1));
        let next = sum.shift_up(1).div(&den).expect("unit constant").add_constant(&int(1));
        c.push(next);
    }
    c.swap_remove(k)
}

/// `C_{k...21} = (1 + x Σ_{j=2}^{k-1} (C_j - C_{j-1}) C_{k+1-j}) / (1 - x C_{k-1})`.
fn c_decreasing(k: usize, order: usize) -> Series {
    let mut c = vec![Series::zero(order), Series::one(order), Series::one(order)];
    for m in 3..=k {
        let mut sum = Series::zero(order);
        for j in 2..m {
            sum = sum.add(&c[j].sub(&c[j - 1]).mul(&c[m + 1 - j]));
        }
        let den = Series::one(order).sub(&c[m - 1].shift_up(1));
        let next = sum.shift_up(1).add_constant(&int(1)).div(&den).expect("unit constant");
        c.push(next);
    }
    c.swap_remove(k)
}

/// Rational closed forms printed for `C_{123}`, `C_{1234}`, `C_{321}`,
/// `C_{4321}`.
pub fn c_tau_printed_form(tau: &Permutation, order: usize) -> Option<Series> {
    let n = order;
    let s = |v: &[i64]| Series::from_i64s(v, n);
    let ratio = |num: Series, den: Series| num.div(&den).ok();
    match tau.to_string().as_str() {
        "123" => ratio(s(&[1, 0, 2]), s(&[1, -1])),
        "1234" => ratio(s(&[1, -1, 1, 4, 1]), s(&[1, -1]).mul(&s(&[1, -1, -1]))),
        "321" => ratio(s(&[1]), s(&[1, -1])),
        "4321" => ratio(s(&[1, -1, 1]), s(&[1, -2])),
        _ => None,
    }
}

/// `1 + x (1 + x + 5x^2 - x^3) / ((1 - x)(1 - x - x^2))`, the value of
/// the increasing recursion at `k = 4`.
pub fn c_1234_from_recursion_closed(order: usize) -> Series {
    let s = |v: &[i64]| Series::from_i64s(v, order);
    s(&[1, 1, 5, -1])
        .div(&s(&[1, -1]).mul(&s(&[1, -1, -1])))
        .expect("unit constant")
        .shift_up(1)
        .add_constant(&int(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(s: &Series) -> Vec<u64> {
        s.counts().expect("nonnegative integers")
    }

    #[test]
    fn decomposability() {
        assert!(is_decreasing_decomposable(&[2, 1]));
        assert!(!is_decreasing_decomposable(&[1, 3, 2]));
        assert!(is_increasing_decomposable(&[1, 3, 2]));
        assert!(!is_decreasing_decomposable(&[2, 1, 3]));
    }

    #[test]
    fn a_examples() {
        assert_eq!(counts(&a_tau(&perm("2134"), 4).unwrap()), [1, 1, 3, 6, 10]);
        assert_eq!(a_tau(&perm("132"), 10).unwrap(), catalan_series(10));
        assert_eq!(a_tau(&perm("2143"), 10).unwrap(), catalan_series(10));
        let (_, rule) = a_tau_with_rule(&perm("1342"), 3).unwrap();
        assert_eq!(rule, Rule::ContainsPair);
        let (_, rule) = a_tau_with_rule(&perm("1432"), 3).unwrap();
        assert_eq!(rule, Rule::Schroder);
        assert!(matches!(a_tau(&perm("321"), 3), Err(Error::NoApplicableTheorem(_))));
    }

    fn brute(avoid: &[&str], n: usize) -> Vec<u64> {
        let avoid: Vec<Permutation> = avoid.iter().map(|p| perm(p)).collect();
        (0..=n).map(|m| crate::dumont::count_u64(crate::DumontKind::First, m, &avoid)).collect()
    }

    #[test]
    fn a_matches_enumeration() {
        for t in ["132", "213", "1243", "1324", "2134", "2143", "13245"] {
            assert_eq!(counts(&a_tau(&perm(t), 4).unwrap()), brute(&["1342", "1423", t], 4), "{t}");
        }
    }

    #[test]
    fn table_forms_agree_with_recursion() {
        for t in ["1243", "1324", "1342", "1423", "1432", "2134", "2143"] {
            let p = perm(t);
            assert_eq!(a_tau_table_closed_form(&p, 12).unwrap(), a_tau(&p, 12).unwrap(), "{t}");
        }
        let p = perm("1234");
        assert_ne!(a_tau_table_closed_form(&p, 6).unwrap(), a_tau(&p, 6).unwrap());
    }

    #[test]
    fn b_examples() {
        assert_eq!(b_tau(&perm("321"), 8).unwrap(), Series::one(8).sub(&Series::x(8)).invert().unwrap());
        for t in ["321", "4321", "54321"] {
            assert_eq!(counts(&b_tau(&perm(t), 4).unwrap()), brute(&["2341", "2413", t], 4), "{t}");
        }
        let (_, rule) = b_tau_with_rule(&perm("312"), 3).unwrap();
        assert_eq!(rule, Rule::WrapMax);
        assert_ne!(counts(&b_tau_stated_catalan(&perm("312"), 5).unwrap()), brute(&["2341", "2413", "312"], 5));
    }

    #[test]
    fn c_examples() {
        assert_eq!(counts(&c_tau(&perm("321"), 6).unwrap()), [1; 7]);
        assert_eq!(counts(&c_tau(&perm("123"), 4).unwrap()), [1, 1, 3, 3, 3]);
        for t in ["123", "321", "4321"] {
            let p = perm(t);
            assert_eq!(c_tau_printed_form(&p, 15).unwrap(), c_tau(&p, 15).unwrap(), "{t}");
        }
        assert_eq!(c_tau(&perm("1234"), 15).unwrap(), c_1234_from_recursion_closed(15));
        assert_ne!(c_tau_printed_form(&perm("1234"), 6).unwrap(), c_tau(&perm("1234"), 6).unwrap());
        assert!(c_tau(&perm("132"), 4).is_err());
    }
}
