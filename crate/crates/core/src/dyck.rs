//! Dyck paths, their statistics, and the doubling transforms `g1` and `g2`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    U,
    D,
}

/// A balanced word over `U`/`D` whose prefixes never go below the axis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DyckPath {
    steps: Vec<Step>,
}

/// A horizontal segment under the path joining an up-step to its matching
/// down-step. Indices are 1-based step positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Tunnel {
    pub left_index: usize,
    pub right_index: usize,
    pub level: usize,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut level = 0i64;
        for (i, s) in steps.iter().enumerate() {
            level += if *s == Step::U { 1 } else { -1 };
            if level < 0 {
                return Err(Error::NotDyck { index: i + 1 });
            }
        }
        if level != 0 {
            return Err(Error::NotDyck { index: steps.len() });
        }
        Ok(Self { steps })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Level after each step.
    pub fn levels(&self) -> Vec<usize> {
        let mut level = 0usize;
        self.steps
            .iter()
            .map(|s| {
                match s {
                    Step::U => level += 1,
                    Step::D => level -= 1,
                }
                level
            })
            .collect()
    }

    pub fn height(&self) -> usize {
        self.levels().into_iter().max().unwrap_or(0)
    }

    pub fn peaks(&self) -> usize {
        self.steps
            .windows(2)
            .filter(|w| w == &[Step::U, Step::D])
            .count()
    }

    pub fn valleys(&self) -> usize {
        self.steps
            .windows(2)
            .filter(|w| w == &[Step::D, Step::U])
            .count()
    }

    /// Index (0-based) of the down-step matching each up-step.
    fn matching(&self) -> Vec<Option<usize>> {
        let mut partner = vec![None; self.steps.len()];
        let mut open = Vec::new();
        for (i, s) in self.steps.iter().enumerate() {
            match s {
                Step::U => open.push(i),
                Step::D => {
                    let j = open.pop().expect("validated path");
                    partner[j] = Some(i);
                    partner[i] = Some(j);
                }
            }
        }
        partner
    }

    pub fn tunnels(&self) -> Vec<Tunnel> {
        let partner = self.matching();
        let mut level = 0usize;
        let mut out = Vec::new();
        for (i, s) in self.steps.iter().enumerate() {
            match s {
                Step::U => {
                    out.push(Tunnel {
                        left_index: i + 1,
                        right_index: partner[i].expect("matched") + 1,
                        level,
                    });
                    level += 1;
                }
                Step::D => level -= 1,
            }
        }
        out
    }

    /// 0-based indices of up-steps that immediately follow a down-step.
    fn valley_ups(&self) -> Vec<usize> {
        (1..self.steps.len())
            .filter(|&i| self.steps[i - 1] == Step::D && self.steps[i] == Step::U)
            .collect()
    }

    /// Largest value, over all peaks, of the peak height plus the number of
    /// valley tunnels passing under that peak.
    pub fn lambda_stat(&self) -> usize {
        let partner = self.matching();
        let valley_tunnels: Vec<(usize, usize)> = self
            .valley_ups()
            .into_iter()
            .map(|i| (i, partner[i].expect("matched")))
            .collect();
        let levels = self.levels();
        (0..self.steps.len().saturating_sub(1))
            .filter(|&i| self.steps[i] == Step::U && self.steps[i + 1] == Step::D)
            .map(|p| {
                let under = valley_tunnels
                    .iter()
                    .filter(|&&(l, r)| l <= p && p < r)
                    .count();
                levels[p] + under
            })
            .max()
            .unwrap_or(0)
    }

    /// Doubles the semilength, turning the statistic `lambda_stat` into the
    /// height. Each valley marks the up-step after it and that step's
    /// matching down-step; then unmarked `D -> DUD`, marked `U -> UU`,
    /// marked `D -> DD`.
    pub fn g1(&self) -> DyckPath {
        let partner = self.matching();
        let mut marked = vec![false; self.steps.len()];
        for i in self.valley_ups() {
            marked[i] = true;
            marked[partner[i].expect("matched")] = true;
        }
        let mut out = Vec::with_capacity(self.steps.len() * 2);
        for (s, m) in self.steps.iter().zip(&marked) {
            match (s, m) {
                (Step::U, false) => out.push(Step::U),
                (Step::U, true) => out.extend([Step::U, Step::U]),
                (Step::D, false) => out.extend([Step::D, Step::U, Step::D]),
                (Step::D, true) => out.extend([Step::D, Step::D]),
            }
        }
        DyckPath { steps: out }
    }

    pub fn g1_inverse(&self) -> Result<DyckPath> {
        let not_image = || Error::NotInImage { map: "g1" };
        let steps = g1_inverse_steps(&self.steps).ok_or_else(not_image)?;
        let candidate = DyckPath::new(steps).map_err(|_| not_image())?;
        if candidate.g1() != *self {
            return Err(not_image());
        }
        Ok(candidate)
    }

    /// Replaces each down-step by `UDD`.
    pub fn g2(&self) -> DyckPath {
        let mut out = Vec::with_capacity(self.steps.len() * 2);
        for s in &self.steps {
            match s {
                Step::U => out.push(Step::U),
                Step::D => out.extend([Step::U, Step::D, Step::D]),
            }
        }
        DyckPath { steps: out }
    }

    /// Replaces each `UDD` factor by `D`; every down-step must belong to one.
    pub fn g2_inverse(&self) -> Result<DyckPath> {
        let not_image = || Error::NotInImage { map: "g2" };
        let s = &self.steps;
        let mut out = Vec::with_capacity(s.len() / 2);
        let mut i = 0;
        while i < s.len() {
            match (s[i], s.get(i + 1), s.get(i + 2)) {
                (Step::U, Some(Step::D), Some(Step::D)) => {
                    out.push(Step::D);
                    i += 3;
                }
                (Step::U, Some(Step::D), _) => return Err(not_image()),
                (Step::U, _, _) => {
                    out.push(Step::U);
                    i += 1;
                }
                (Step::D, _, _) => return Err(not_image()),
            }
        }
        DyckPath::new(out).map_err(|_| not_image())
    }
}

/// Splits a Dyck word into its prime components `U ... D`.
fn primes(steps: &[Step]) -> Vec<&[Step]> {
    let mut out = Vec::new();
    let mut level = 0i64;
    let mut start = 0;
    for (i, s) in steps.iter().enumerate() {
        level += if *s == Step::U { 1 } else { -1 };
        if level == 0 {
            out.push(&steps[start..=i]);
            start = i + 1;
        }
    }
    out
}

/// Recursive decoding along the last prime component `u Y d`:
/// `X u d` with `X = u A d` comes from `u g1⁻¹(A) d`, and `X u u B d d`
/// comes from `g1⁻¹(X) u g1⁻¹(B) d`.
fn g1_inverse_steps(steps: &[Step]) -> Option<Vec<Step>> {
    if steps.is_empty() {
        return Some(Vec::new());
    }
    let comps = primes(steps);
    let last = *comps.last()?;
    let prefix_len = steps.len() - last.len();
    let x = &steps[..prefix_len];
    let y = &last[1..last.len() - 1];
    if y.is_empty() {
        let xc = primes(x);
        if xc.len() != 1 {
            return None;
        }
        let a = &x[1..x.len() - 1];
        let mut out = vec![Step::U];
        out.extend(g1_inverse_steps(a)?);
        out.push(Step::D);
        Some(out)
    } else {
        let yc = primes(y);
        if yc.len() != 1 {
            return None;
        }
        let b = &y[1..y.len() - 1];
        let mut out = g1_inverse_steps(x)?;
        out.push(Step::U);
        out.extend(g1_inverse_steps(b)?);
        out.push(Step::D);
        Some(out)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::U => "U",
                Step::D => "D",
            })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'U' | 'u' => Ok(Step::U),
                'D' | 'd' => Ok(Step::D),
                _ => Err(Error::Parse {
                    what: "Dyck path",
                    input: s.to_string(),
                    reason: format!("unexpected character {c:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

/// All Dyck paths of semilength `n`, lexicographic with `U < D`.
pub fn enumerate_dyck(n: usize) -> Vec<DyckPath> {
    fn rec(n: usize, ups: usize, downs: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
        if ups == n && downs == n {
            out.push(DyckPath { steps: cur.clone() });
            return;
        }
        if ups < n {
            cur.push(Step::U);
            rec(n, ups + 1, downs, cur, out);
            cur.pop();
        }
        if downs < ups {
            cur.push(Step::D);
            rec(n, ups, downs + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 0, 0, &mut Vec::with_capacity(2 * n), &mut out);
    out
}

/// Shorthand for a path literal known to be valid.
pub fn dyck(s: &str) -> DyckPath {
    s.parse()
        .unwrap_or_else(|e| panic!("invalid Dyck literal {s:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        assert_eq!(dyck("UUDD").semilength(), 2);
        assert_eq!("UDDU".parse::<DyckPath>(), Err(Error::NotDyck { index: 3 }));
        assert_eq!("UU".parse::<DyckPath>(), Err(Error::NotDyck { index: 2 }));
        assert_eq!(dyck("uduudUdd").to_string(), "UDUUDUDD");
        assert!("UXD".parse::<DyckPath>().is_err());
    }

    #[test]
    fn basic_statistics() {
        assert_eq!(dyck("UUDD").height(), 2);
        assert_eq!(dyck("UDUD").peaks(), 2);
        assert_eq!(dyck("UDUD").valleys(), 1);
        assert_eq!(dyck("UDUDUUUDUDUUDDDD").height(), 4);
        assert_eq!(DyckPath::empty().height(), 0);
    }

    #[test]
    fn tunnel_examples() {
        let t = |l, r, level| Tunnel { left_index: l, right_index: r, level };
        assert_eq!(dyck("UD").tunnels(), vec![t(1, 2, 0)]);
        assert_eq!(dyck("UUDD").tunnels(), vec![t(1, 4, 0), t(2, 3, 1)]);
        assert!(dyck("UDUUDUDD").tunnels().contains(&t(3, 8, 0)));
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(dyck("UD").lambda_stat(), 1);
        assert_eq!(dyck("UDUUDUDD").lambda_stat(), 4);
        assert_eq!(dyck("UUDD").lambda_stat(), 2);
    }

    #[test]
    fn g1_examples() {
        assert_eq!(dyck("UDUUDUDD").g1(), dyck("UDUDUUUDUDUUDDDD"));
        assert_eq!(dyck("UD").g1(), dyck("UDUD"));
        assert_eq!(dyck("UDUDUUUDUDUUDDDD").g1_inverse().unwrap(), dyck("UDUUDUDD"));
        assert_eq!(dyck("UD").g1_inverse(), Err(Error::NotInImage { map: "g1" }));
        assert!(dyck("UUDD").g1_inverse().is_err());
    }

    #[test]
    fn g2_examples() {
        assert_eq!(dyck("UDUUUDUDDD").g2(), dyck("UUDDUUUUDDUUDDUDDUDD"));
        assert_eq!(dyck("UD").g2(), dyck("UUDD"));
        assert_eq!(dyck("UUUDDUUDDUDDUUUDDUDD").g2_inverse().unwrap(), dyck("UUDUDDUUDD"));
        assert!(dyck("UDUD").g2_inverse().is_err());
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_dyck(0), vec![DyckPath::empty()]);
        let two: Vec<String> = enumerate_dyck(2).iter().map(|p| p.to_string()).collect();
        assert_eq!(two, ["UUDD", "UDUD"]);
        assert_eq!(enumerate_dyck(5).len(), 42);
    }

    #[test]
    fn transform_laws_small() {
        for n in 1..=7 {
            let image: std::collections::HashSet<_> = enumerate_dyck(n).iter().map(DyckPath::g1).collect();
            assert_eq!(image.len(), enumerate_dyck(n).len());
            for p in enumerate_dyck(n) {
                let q = p.g1();
                assert_eq!(q.height(), p.lambda_stat());
                assert_eq!(q.peaks(), n + 1);
                assert_eq!(q.g1_inverse().unwrap(), p);
                let r = p.g2();
                assert_eq!(r.peaks(), n);
                assert_eq!(r.height(), p.height() + 1);
                assert_eq!(r.g2_inverse().unwrap(), p);
            }
        }
    }
}
