//! Bijections between pattern-avoiding Dumont permutations, ordinary
//! pattern classes, Dyck paths, noncrossing partitions and boards.
//!
//! Every map validates its input domain and returns [`Error::Domain`] naming
//! the violated condition.

use crate::dumont::{is_dumont, DumontKind};
use crate::dyck::{DyckPath, Step};
use crate::error::{domain, Error, Result};
use crate::objects::{is_e, is_lower_board, is_upper_board, LatticePath, LatticeStep, NoncrossingPartition};
use crate::perm::{perm, Permutation};

fn require_avoids(map: &'static str, p: &Permutation, pattern: &str) -> Result<()> {
    if p.contains(&perm(pattern)) {
        return Err(domain(map, format!("{p} contains {pattern}")));
    }
    Ok(())
}

fn require_dumont(map: &'static str, p: &Permutation, kind: DumontKind) -> Result<()> {
    if !is_dumont(p, kind) {
        let which = match kind {
            DumontKind::First => "first",
            DumontKind::Second => "second",
        };
        return Err(domain(map, format!("{p} is not a Dumont permutation of the {which} kind")));
    }
    Ok(())
}

/// Keeps the odd entries of a 132-avoiding Dumont permutation of the first
/// kind and maps each `v` to `(v + 1) / 2`.
pub fn f1(pi: &Permutation) -> Result<Permutation> {
    require_dumont("f1", pi, DumontKind::First)?;
    require_avoids("f1", pi, "132")?;
    let word = pi.odd_subsequence().into_iter().map(|v| v.div_ceil(2)).collect();
    Ok(Permutation::from_word_unchecked(word))
}

pub fn f1_inverse(sigma: &Permutation) -> Result<Permutation> {
    require_avoids("f1_inverse", sigma, "132")?;
    let odd: Vec<u32> = sigma.word().iter().map(|&v| 2 * v - 1).collect();
    let mut seq = odd.clone();
    for (i, &v) in odd.iter().enumerate() {
        let at = seq.iter().position(|&x| x == v).expect("present");
        let insert_at = match odd.get(i + 1) {
            Some(&next) if v > next => at + 1,
            _ => seq[..at]
                .iter()
                .rposition(|&x| x > v)
                .map_or(0, |j| j + 1),
        };
        seq.insert(insert_at, v + 1);
    }
    Ok(Permutation::from_word_unchecked(seq))
}

/// Keeps the even entries of a 231-avoiding Dumont permutation of the first
/// kind and halves them.
pub fn f2(pi: &Permutation) -> Result<Permutation> {
    require_dumont("f2", pi, DumontKind::First)?;
    require_avoids("f2", pi, "231")?;
    let word = pi.even_subsequence().into_iter().map(|v| v / 2).collect();
    Ok(Permutation::from_word_unchecked(word))
}

pub fn f2_inverse(sigma: &Permutation) -> Result<Permutation> {
    require_avoids("f2_inverse", sigma, "231")?;
    let n = sigma.len() as u32;
    let mut seq: Vec<u32> = sigma.word().iter().map(|&v| 2 * v).collect();
    for i in 1..=n {
        let at = seq.iter().position(|&x| x == 2 * i).expect("present");
        let insert_at = seq[at + 1..]
            .iter()
            .position(|&x| x > 2 * i)
            .map_or(seq.len(), |j| at + 1 + j);
        seq.insert(insert_at, 2 * i - 1);
    }
    Ok(Permutation::from_word_unchecked(seq))
}

/// Krattenthaler's map `S_n(132) -> D_n`. Reading rows bottom to top, the
/// path keeps every dot to its right while staying as low as possible:
/// before the down-step of row `r` it has risen to `n - c_r`, where `c_r + 1`
/// is the smallest column used in rows `1..=r`.
pub fn phi_krat(sigma: &Permutation) -> Result<DyckPath> {
    require_avoids("phi_krat", sigma, "132")?;
    let rows = sigma.inverse();
    let n = sigma.len() as u32;
    let mut steps = Vec::with_capacity(2 * sigma.len());
    let mut c_prev = n;
    for &col in rows.word() {
        let c = c_prev.min(col - 1);
        steps.extend(std::iter::repeat_n(Step::U, (c_prev - c) as usize));
        steps.push(Step::D);
        c_prev = c;
    }
    DyckPath::new(steps)
}

pub fn phi_krat_inverse(path: &DyckPath) -> Result<Permutation> {
    let n = path.semilength() as u32;
    let mut ups = 0u32;
    let mut minima = Vec::with_capacity(n as usize);
    for s in path.steps() {
        match s {
            Step::U => ups += 1,
            Step::D => minima.push(n - ups + 1),
        }
    }
    let mut used = vec![false; n as usize + 2];
    let mut rows = Vec::with_capacity(n as usize);
    let mut current = u32::MAX;
    for m in minima {
        let v = if m < current {
            current = m;
            m
        } else {
            (current + 1..=n).find(|&v| !used[v as usize]).ok_or(Error::NotInImage { map: "phi_krat" })?
        };
        used[v as usize] = true;
        rows.push(v);
    }
    let rho = Permutation::new(rows).map_err(|_| Error::NotInImage { map: "phi_krat" })?;
    Ok(rho.inverse())
}

/// `phi_krat ∘ reverse` on `S_n(231)`.
pub fn phi_r(sigma: &Permutation) -> Result<DyckPath> {
    require_avoids("phi_R", sigma, "231")?;
    phi_krat(&sigma.reverse())
}

pub fn phi_r_inverse(path: &DyckPath) -> Result<Permutation> {
    Ok(phi_krat_inverse(path)?.reverse())
}

/// Elizalde's map `S_n(321) -> D_n`. Reading rows bottom to top, row `r`
/// contributes an up-step after the path has moved right to `e_r`, one less
/// than the smallest column used in rows `r..=n`.
pub fn psi_eli(sigma: &Permutation) -> Result<DyckPath> {
    require_avoids("psi_eli", sigma, "321")?;
    let rows = sigma.inverse().into_word();
    let n = rows.len();
    let mut suffix_min = vec![0u32; n];
    let mut m = u32::MAX;
    for r in (0..n).rev() {
        m = m.min(rows[r]);
        suffix_min[r] = m;
    }
    let mut steps = Vec::with_capacity(2 * n);
    let mut e_prev = 0u32;
    for &sm in &suffix_min {
        let e = sm - 1;
        steps.extend(std::iter::repeat_n(Step::D, (e - e_prev) as usize));
        steps.push(Step::U);
        e_prev = e;
    }
    steps.extend(std::iter::repeat_n(Step::D, n - e_prev as usize));
    DyckPath::new(steps)
}

pub fn psi_eli_inverse(path: &DyckPath) -> Result<Permutation> {
    let n = path.semilength();
    let mut downs = 0u32;
    let mut mins = Vec::with_capacity(n);
    for s in path.steps() {
        match s {
            Step::U => mins.push(downs + 1),
            Step::D => downs += 1,
        }
    }
    let mut rows = vec![0u32; n];
    let mut used = vec![false; n + 2];
    for r in 0..n {
        if r + 1 == n || mins[r] < mins[r + 1] {
            rows[r] = mins[r];
            if used[mins[r] as usize] {
                return Err(Error::NotInImage { map: "psi_eli" });
            }
            used[mins[r] as usize] = true;
        }
    }
    let mut free = (1..=n as u32).filter(|&v| !used[v as usize]);
    for slot in rows.iter_mut().filter(|s| **s == 0) {
        *slot = free.next().ok_or(Error::NotInImage { map: "psi_eli" })?;
    }
    let rho = Permutation::new(rows).map_err(|_| Error::NotInImage { map: "psi_eli" })?;
    let sigma = rho.inverse();
    if psi_eli(&sigma).ok().as_ref() != Some(path) {
        return Err(Error::NotInImage { map: "psi_eli" });
    }
    Ok(sigma)
}

/// `g2⁻¹ ∘ psi_eli`, a bijection from 321-avoiding Dumont permutations of
/// the second kind onto Dyck paths of semilength `n`.
pub fn d2_321_to_dyck(pi: &Permutation) -> Result<DyckPath> {
    require_dumont("d2_321_to_dyck", pi, DumontKind::Second)?;
    require_avoids("d2_321_to_dyck", pi, "321")?;
    psi_eli(pi)?.g2_inverse()
}

pub fn d2_321_from_dyck(path: &DyckPath) -> Result<Permutation> {
    psi_eli_inverse(&path.g2())
}

/// Halves the subsequence of even values of a 3142-avoiding Dumont
/// permutation of the second kind.
pub fn phi_even(pi: &Permutation) -> Result<Permutation> {
    require_dumont("phi_even", pi, DumontKind::Second)?;
    require_avoids("phi_even", pi, "3142")?;
    let word = pi.even_subsequence().into_iter().map(|v| v / 2).collect();
    Ok(Permutation::from_word_unchecked(word))
}

pub fn phi_even_inverse(sigma: &Permutation) -> Result<Permutation> {
    if !is_e(sigma) {
        return Err(domain("phi_even_inverse", format!("{sigma} is not in E_n")));
    }
    let mut out = Vec::with_capacity(2 * sigma.len());
    // The odd value 2i - 1 lands next to 2σ(i): before it when σ(i) < i.
    let inv = sigma.inverse();
    for &v in sigma.word() {
        let i = inv.at(v as usize);
        if v < i {
            out.push(2 * i - 1);
            out.push(2 * v);
        } else {
            out.push(2 * v);
            out.push(2 * i - 1);
        }
    }
    Ok(Permutation::from_word_unchecked(out))
}

/// The partition of `[n]` into the cycles of `phi_even(π)`.
pub fn psi_nc(pi: &Permutation) -> Result<NoncrossingPartition> {
    let sigma = phi_even(pi)?;
    let blocks = sigma.cycles().into_iter().map(|c| c.elements).collect();
    NoncrossingPartition::new(sigma.len(), blocks).map_err(|e| Error::Disagreement {
        what: "psi_nc",
        detail: e.to_string(),
    })
}

/// Rebuilds the permutation whose cycles are the blocks, each traversed in
/// decreasing order, and applies `phi_even_inverse`.
pub fn psi_nc_inverse(p: &NoncrossingPartition) -> Result<Permutation> {
    let n = p.n();
    let mut word = vec![0u32; n];
    for b in p.blocks() {
        for (j, &v) in b.iter().enumerate() {
            word[v as usize - 1] = b[(j + 1) % b.len()];
        }
    }
    phi_even_inverse(&Permutation::from_word_unchecked(word))
}

/// Odd-position and even-position halves of a 2143-avoiding Dumont
/// permutation of the second kind.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoardPair {
    pub upper: Permutation,
    pub lower: Permutation,
    pub n: usize,
}

impl BoardPair {
    pub fn new(upper: Permutation, lower: Permutation) -> Result<Self> {
        if upper.len() != lower.len() {
            return Err(domain("board pair", "boards have different sizes"));
        }
        if !is_upper_board(&upper) {
            return Err(domain("board pair", format!("{upper} is not an upper board")));
        }
        if !is_lower_board(&lower) {
            return Err(domain("board pair", format!("{lower} is not a lower board")));
        }
        let n = upper.len();
        Ok(Self { upper, lower, n })
    }
}

pub fn split_boards(pi: &Permutation) -> Result<BoardPair> {
    require_dumont("split_boards", pi, DumontKind::Second)?;
    require_avoids("split_boards", pi, "2143")?;
    let n = pi.len() / 2;
    let w = pi.word();
    let upper = (0..n).map(|i| w[2 * i] - n as u32).collect();
    let lower = (0..n).map(|i| w[2 * i + 1]).collect();
    BoardPair::new(Permutation::from_word_unchecked(upper), Permutation::from_word_unchecked(lower))
}

pub fn merge_boards(bp: &BoardPair) -> Result<Permutation> {
    let checked = BoardPair::new(bp.upper.clone(), bp.lower.clone())?;
    let n = checked.n as u32;
    let mut word = Vec::with_capacity(2 * checked.n);
    for (&u, &l) in checked.upper.word().iter().zip(checked.lower.word()) {
        word.push(u + n);
        word.push(l);
    }
    Ok(Permutation::from_word_unchecked(word))
}

/// The northwest path from `(n, 0)` to `(⌈n/2⌉, n)` on or above
/// `y = 2n - 2x` that keeps every dot of the board to its left while staying
/// as close to that line as possible. Row `r` holds the dot of value `r`,
/// in the column given by its position.
pub fn lower_board_to_path(lower: &Permutation) -> Result<LatticePath> {
    if !is_lower_board(lower) {
        return Err(domain("lower_board_to_path", format!("{lower} is not a lower board")));
    }
    let n = lower.len();
    let cols = lower.inverse().into_word();
    let mut suffix_max = vec![0u32; n + 1];
    for r in (0..n).rev() {
        suffix_max[r] = suffix_max[r + 1].max(cols[r]);
    }
    let mut steps = Vec::new();
    let mut w_prev = n as u32;
    for r in 0..n {
        let bound = line_bound(n, r);
        let w = bound.max(suffix_max[r]).min(w_prev);
        steps.extend(std::iter::repeat_n(LatticeStep::W, (w_prev - w) as usize));
        steps.push(LatticeStep::N);
        w_prev = w;
    }
    steps.extend(std::iter::repeat_n(LatticeStep::W, (w_prev - n.div_ceil(2) as u32) as usize));
    Ok(LatticePath {
        start: (n as i64, 0),
        steps,
    })
}

/// Smallest column the vertical step of row `r + 1` may use:
/// `⌈n - r/2⌉`.
fn line_bound(n: usize, r: usize) -> u32 {
    (2 * n - r).div_ceil(2) as u32
}

pub fn path_to_lower_board(path: &LatticePath) -> Result<Permutation> {
    let bad = |why: &str| domain("path_to_lower_board", why.to_string());
    let (sx, sy) = path.start;
    if sx < 0 || sy != 0 {
        return Err(bad("path must start at (n, 0)"));
    }
    let n = sx as usize;
    let mut widths = Vec::with_capacity(n);
    let mut x = sx;
    for (px, py) in path.points() {
        if 2 * px + py < 2 * n as i64 {
            return Err(bad("path goes below the line y = 2n - 2x"));
        }
    }
    for s in &path.steps {
        match s {
            LatticeStep::N => widths.push(x as u32),
            LatticeStep::W => x -= 1,
            LatticeStep::E => return Err(bad("east steps are not allowed")),
        }
    }
    if widths.len() != n || path.end() != (n.div_ceil(2) as i64, n as i64) {
        return Err(bad("path must end at (⌈n/2⌉, n)"));
    }
    let mut used = vec![false; n + 1];
    let mut cols = vec![0u32; n];
    for r in (0..n).rev() {
        let c = (1..=widths[r])
            .rev()
            .find(|&c| !used[c as usize])
            .ok_or(Error::NotInImage { map: "lower_board_to_path" })?;
        used[c as usize] = true;
        cols[r] = c;
    }
    let lower = Permutation::from_word_unchecked(cols).inverse();
    match lower_board_to_path(&lower) {
        Ok(p) if p == *path => Ok(lower),
        _ => Err(Error::NotInImage { map: "lower_board_to_path" }),
    }
}

/// Upper boards whose merged permutation has no fixed point, that is with
/// `σ(i) >= max(2i - n, 1)`, correspond to lower boards under
/// reverse-complement.
pub fn derangement_upper_to_lower(upper: &Permutation) -> Result<Permutation> {
    let n = upper.len() as i64;
    let strict = upper
        .word()
        .iter()
        .enumerate()
        .all(|(i, &v)| v as i64 >= (2 * (i as i64 + 1) - n).max(1));
    if !is_upper_board(upper) || !strict {
        return Err(domain(
            "derangement_upper_to_lower",
            format!("{upper} is not an upper board without diagonal cells"),
        ));
    }
    Ok(upper.reverse_complement())
}

pub fn derangement_lower_to_upper(lower: &Permutation) -> Result<Permutation> {
    if !is_lower_board(lower) {
        return Err(domain("derangement_lower_to_upper", format!("{lower} is not a lower board")));
    }
    Ok(lower.reverse_complement())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::{dyck, enumerate_dyck};
    use crate::harness::oracle::all_permutations;
    use crate::objects::{enumerate_boards, BoardKind};

    fn avoiders(n: usize, pattern: &str) -> Vec<Permutation> {
        all_permutations(n)
            .into_iter()
            .filter(|p| p.avoids(&perm(pattern)))
            .collect()
    }

    #[test]
    fn f1_examples() {
        assert_eq!(f1(&perm("64357821")).unwrap(), perm("2341"));
        assert_eq!(f1_inverse(&perm("546231")).unwrap(), perm("9,10,8,7,11,12,4,3,5,6,2,1"));
        assert_eq!(f1(&perm("21")).unwrap(), perm("1"));
        assert!(matches!(f1(&perm("3142")), Err(Error::Domain { .. })));
    }

    #[test]
    fn f2_examples() {
        assert_eq!(f2(&perm("2,1,10,8,4,3,6,5,7,9")).unwrap(), perm("15423"));
        assert_eq!(
            f2_inverse(&perm("7215346")).unwrap(),
            perm("14,4,2,1,3,10,6,5,8,7,9,12,11,13")
        );
        assert_eq!(f2(&perm("21")).unwrap(), perm("1"));
    }

    #[test]
    fn path_maps_examples() {
        assert_eq!(phi_krat(&perm("1")).unwrap(), dyck("UD"));
        assert_eq!(phi_r(&perm("1")).unwrap(), dyck("UD"));
        assert_eq!(
            psi_eli(&perm("3,1,5,2,6,4,9,7,10,8")).unwrap(),
            dyck("UUUDDUUDDUDDUUUDDUDD")
        );
        assert_eq!(d2_321_to_dyck(&perm("3,1,5,2,6,4,9,7,10,8")).unwrap(), dyck("UUDUDDUUDD"));
        assert_eq!(d2_321_to_dyck(&perm("21")).unwrap(), dyck("UD"));
        assert!(phi_krat(&perm("132")).is_err());
        assert!(psi_eli(&perm("321")).is_err());
    }

    #[test]
    fn path_maps_are_bijections() {
        for n in 0..=6 {
            let paths: std::collections::BTreeSet<_> = enumerate_dyck(n).into_iter().collect();
            for (pat, fwd, inv) in [
                ("132", phi_krat as fn(&Permutation) -> Result<DyckPath>, phi_krat_inverse as fn(&DyckPath) -> Result<Permutation>),
                ("231", phi_r, phi_r_inverse),
                ("321", psi_eli, psi_eli_inverse),
            ] {
                let class = avoiders(n, pat);
                let image: std::collections::BTreeSet<_> = class.iter().map(|s| fwd(s).unwrap()).collect();
                assert_eq!(image, paths, "pattern {pat}, n = {n}");
                for s in &class {
                    assert_eq!(&inv(&fwd(s).unwrap()).unwrap(), s);
                }
            }
        }
    }

    #[test]
    fn krattenthaler_height_is_lis() {
        for s in avoiders(5, "132") {
            assert_eq!(phi_krat(&s).unwrap().height(), s.statistics().lis);
        }
        for s in avoiders(5, "231") {
            assert_eq!(phi_r(&s).unwrap().peaks(), s.statistics().lis);
        }
    }

    #[test]
    fn even_map_examples() {
        assert_eq!(phi_even_inverse(&perm("3124")).unwrap(), perm("61325487"));
        assert_eq!(phi_even(&perm("61325487")).unwrap(), perm("3124"));
        assert_eq!(phi_even(&perm("21")).unwrap(), perm("1"));
        assert!(phi_even_inverse(&perm("3412")).is_err());
        assert_eq!(phi_even_inverse(&perm("2143")).unwrap(), perm("41328576"));
    }

    #[test]
    fn noncrossing_examples() {
        let hat = perm("12,1,6,3,5,4,7,2,10,9,11,8,16,13,15,14");
        let p = psi_nc(&hat).unwrap();
        assert_eq!(p.to_string(), "641/32/5/87");
        assert_eq!(p.parts(), 8 - hat.statistics().fix);
        assert_eq!(psi_nc(&perm("21")).unwrap().to_string(), "1");
        assert_eq!(psi_nc_inverse(&p).unwrap(), hat);
    }

    #[test]
    fn board_examples() {
        let bp = split_boards(&perm("71635482")).unwrap();
        assert_eq!((bp.upper.to_string(), bp.lower.to_string()), ("3214".into(), "1342".into()));
        assert_eq!(merge_boards(&bp).unwrap(), perm("71635482"));
        let one = split_boards(&perm("21")).unwrap();
        assert_eq!((one.upper, one.lower), (perm("1"), perm("1")));
    }

    #[test]
    fn lower_board_paths() {
        let p = lower_board_to_path(&perm("1")).unwrap();
        assert_eq!(p.to_string(), "N");
        assert_eq!(p.end(), (1, 1));
        for n in 0..=8 {
            let boards = enumerate_boards(n, BoardKind::Lower);
            let mut seen = std::collections::HashSet::new();
            for b in &boards {
                let path = lower_board_to_path(b).unwrap();
                assert!(seen.insert(path.clone()));
                assert_eq!(&path_to_lower_board(&path).unwrap(), b);
            }
        }
        assert_eq!(enumerate_boards(6, BoardKind::Lower).len(), 12);
    }

    #[test]
    fn derangement_boards() {
        for n in 0..=7 {
            let uppers: Vec<_> = enumerate_boards(n, BoardKind::Upper)
                .into_iter()
                .filter_map(|u| derangement_upper_to_lower(&u).ok())
                .collect();
            let lowers = enumerate_boards(n, BoardKind::Lower);
            let mut a = uppers.clone();
            a.sort();
            assert_eq!(a, lowers);
        }
    }
}
