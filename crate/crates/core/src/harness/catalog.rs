//! The static list of checks. Formula sides call into `series` and the
//! closed-form counters; oracle sides call only the generator, the
//! bijections and explicit enumeration.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::One;

use super::oracle::{self, all_permutations, members};
use super::{no_documented_mismatches, CheckSpec, Expectation, Row};
use crate::bijections as bij;
use crate::dumont::{genocchi, median_genocchi, DumontKind};
use crate::dyck::enumerate_dyck;
use crate::error::Result;
use crate::objects::{count_boards, count_ne_paths, enumerate_boards, enumerate_nc, narayana, BoardKind};
use crate::perm::{perm, Permutation, Statistic};
use crate::series::gf;
use crate::series::ring::QtPoly;
use crate::series::tau;
use crate::series::Series;

use DumontKind::{First, Second};

const COUNTING: usize = 6;
const COUNTING_CAP: usize = 7;

fn spec(id: &'static str, description: &'static str, default_max_n: usize, max_feasible_n: usize, run: super::CheckFn) -> CheckSpec {
    CheckSpec {
        id,
        description,
        default_max_n,
        max_feasible_n,
        expectation: Expectation::MustPass,
        documented_mismatches: no_documented_mismatches,
        run,
    }
}

fn suspect(mut s: CheckSpec, documented: fn(usize) -> BTreeSet<usize>) -> CheckSpec {
    s.expectation = Expectation::Suspect;
    s.documented_mismatches = documented;
    s
}

fn counting(id: &'static str, description: &'static str, run: super::CheckFn) -> CheckSpec {
    spec(id, description, COUNTING, COUNTING_CAP, run)
}

pub fn catalog() -> Vec<CheckSpec> {
    vec![
        counting("genocchi-count", "both kinds of Dumont permutations of length 2n are counted by G_{2n+2}", genocchi_count),
        counting("genocchi-bernoulli", "the Genocchi triangle agrees with |2(1-2^{2n+2})B_{2n+2}|", genocchi_bernoulli),
        spec("median-genocchi", "derangements of the second kind are counted by the median Genocchi numbers", 5, 6, median_genocchi_count),
        counting("d1-132-catalan", "first kind avoiding 132: C_n", |m| d1_catalan(m, "132")),
        counting("d1-231-catalan", "first kind avoiding 231: C_n", |m| d1_catalan(m, "231")),
        counting("d1-312-catalan", "first kind avoiding 312: C_n", |m| d1_catalan(m, "312")),
        counting("d1-213-catalan-shift", "first kind avoiding 213: C_{n-1}", d1_213),
        counting("d1-321-one", "first kind avoiding 321: exactly one", |m| constant_count(m, 0, First, "321", 1)),
        counting("d2-321-catalan", "second kind avoiding 321: C_n", |m| {
            let c = gf::catalan_series(m);
            count_rows(m, 0, Second, &["321"], |n| c.coeff(n).to_string())
        }),
        counting("d2-231-powers", "second kind avoiding 231: 2^{n-1}", |m| count_rows(m, 0, Second, &["231"], power_of_two_shifted)),
        counting("d2-312-one", "second kind avoiding 312: exactly one", |m| constant_count(m, 0, Second, "312", 1)),
        counting("d2-132-zero", "second kind avoiding 132: none for n >= 3", |m| constant_count(m, 3, Second, "132", 0)),
        counting("d2-213-zero", "second kind avoiding 213: none for n >= 3", |m| constant_count(m, 3, Second, "213", 0)),
        counting("d2-3142-catalan", "second kind avoiding 3142: C_n", |m| {
            let c = gf::catalan_series(m);
            count_rows(m, 0, Second, &["3142"], |n| c.coeff(n).to_string())
        }),
        counting("d2-3142-narayana-fix", "fixed points over 3142-avoiders follow the Narayana numbers, as do block counts of the noncrossing images", narayana_fix),
        counting("d2-3142-joint-qt", "joint fixed point and 2-cycle distribution over 3142-avoiders is [x^n]A(q,t,x)", joint_qt),
        spec("theorem31-identities", "fixed point, subdiagonal, excedance and 2-cycle identities between a 3142-avoider and its halved even part", 5, 6, theorem31),
        spec("d2-4132-set-equality", "second kind: avoiding 4132 is the same set as avoiding 321", 5, 6, set_4132),
        counting("d2-2143-product", "second kind avoiding 2143: a_n a_{n+1}", d2_2143_product),
        spec("d2-2143-derangements", "derangements among 2143-avoiders of the second kind: a_n^2", 5, 6, d2_2143_derangements),
        spec("d2-2143-boards", "splitting a 2143-avoider into its odd and even boards is a bijection onto board pairs", 5, 6, d2_2143_boards),
        spec("lower-board-count", "lower boards are counted by a_n and by the lattice-path recursion", 14, 16, lower_board_count),
        spec("upper-board-count", "upper boards of size n are counted by b_{n+1}", 7, 8, upper_board_count),
        spec("b-seq-equals-a-seq", "the board convolution b_n agrees with the binomial a_n", 14, 40, b_equals_a),
        suspect(
            counting("d2-2143-fix-formula", "fixed points over 2143-avoiders against a_n [x^{n+1}] of the stated product", fix_formula),
            |m| (1..=m).collect(),
        ),
        counting("d2-2143-fix-formula-shifted", "fixed points over 2143-avoiders against a_n [x^n] of the same product", fix_formula_shifted),
        counting("pairs-1342-1423-schroder", "first kind avoiding 1342 and 1423: s_{n+1}", |m| pair_schroder(m, "1342", "1423")),
        counting("pairs-2341-2413-schroder", "first kind avoiding 2341 and 2413: s_{n+1}", |m| pair_schroder(m, "2341", "2413")),
        counting("pairs-1342-2413-schroder", "first kind avoiding 1342 and 2413: s_{n+1}", |m| pair_schroder(m, "1342", "2413")),
        counting("pairs-2341-1423-b", "first kind avoiding 2341 and 1423: b_n = 3b_{n-1} + 2b_{n-2}", |m| {
            count_rows(m, 0, First, &["2341", "1423"], |n| gf::pair_b(n).to_string())
        }),
        counting("pairs-1342-4213-powers", "first kind avoiding 1342 and 4213: 2^{n-1}", |m| count_rows(m, 0, First, &["1342", "4213"], power_of_two_shifted)),
        counting("pairs-2413-3142-C2", "first kind avoiding 2413 and 3142: C(2;n)", |m| {
            count_rows(m, 0, First, &["2413", "3142"], |n| gf::generalized_catalan_c2(n).to_string())
        }),
        counting("sec4-A-table:A_{2134}", "table closed form for 2134 next to 1342, 1423", |m| a_table(m, "2134")),
        counting("sec4-A-table:A_{1324}", "table closed form for 1324 next to 1342, 1423", |m| a_table(m, "1324")),
        counting("sec4-A-table:A_{1243}", "table closed form for 1243 next to 1342, 1423", |m| a_table(m, "1243")),
        counting("sec4-A-table:A_{1432}", "table closed form for 1432 next to 1342, 1423", |m| a_table(m, "1432")),
        counting("sec4-A-table:A_{1342}", "table closed form for 1342 next to 1342, 1423", |m| a_table(m, "1342")),
        counting("sec4-A-table:A_{1423}", "table closed form for 1423 next to 1342, 1423", |m| a_table(m, "1423")),
        suspect(
            counting("sec4-A-table:A_{1234}", "table closed form for 1234 next to 1342, 1423", |m| a_table(m, "1234")),
            |m| (1..=m).collect(),
        ),
        counting("sec4-A-2143-catalan-and-set-equality", "A_2143 = C(x), and avoiding 1342, 1423, 2143 is avoiding 132", a_2143),
        counting("sec4-A-recursions", "the A_tau recursions against enumeration for every applicable pattern of length at most 4", a_recursions),
        counting("sec4-B-312-catalan", "B_312 = B_4123 = C(x) as stated", b_312),
        counting("sec4-B-prepend-max", "the B_tau recursion for patterns starting with their maximum, built from that rule alone", |m| b_recursions(m, tau::Rule::PrependMax)),
        counting("sec4-B-wrap-max", "the B_tau recursion wherever the rule for l tau' (l-1) is used", |m| b_recursions(m, tau::Rule::WrapMax)),
        spec("sec4-B-chebyshev", "Chebyshev closed form for decreasing patterns against the B_tau recursion, numerically", 5, 5, b_chebyshev),
        spec("sec4-lbb-chebyshev", "continued fraction a_m = 1/(u - v a_{m-1}) against its Chebyshev form", 5, 30, lbb),
        counting("sec4-C-123", "printed closed form of C_123", |m| c_printed(m, "123")),
        counting("sec4-C-1234", "printed closed form of C_1234", |m| c_printed(m, "1234")),
        counting("sec4-C-321", "printed closed form of C_321", |m| c_printed(m, "321")),
        counting("sec4-C-4321", "printed closed form of C_4321", |m| c_printed(m, "4321")),
        counting("sec4-C-recursions", "the C_tau recursions for monotone patterns of length up to 5 against enumeration", c_recursions),
        spec("bijection-roundtrips", "every bijection lands in its codomain and is undone by its inverse", 5, 6, roundtrips),
        spec("statistic-transport", "statistics carried by the bijections", 6, 7, transport),
        spec("L_k-coefficients", "[z^n]L_k counts 132-avoiders of the first kind with lis at most k", 6, 7, l_k),
        spec("series-identities", "functional equations of the named series and auxiliary sequences", 20, 60, series_identities),
    ]
}

fn count_rows(max_n: usize, from: usize, kind: DumontKind, avoid: &[&str], formula: impl Fn(usize) -> String) -> Result<Vec<Row>> {
    Ok((from..=max_n).map(|n| Row::new(n, formula(n), oracle::count(kind, n, avoid))).collect())
}

fn constant_count(max_n: usize, from: usize, kind: DumontKind, pattern: &str, value: u64) -> Result<Vec<Row>> {
    count_rows(max_n, from, kind, &[pattern], |_| value.to_string())
}

fn power_of_two_shifted(n: usize) -> String {
    if n == 0 {
        "1".into()
    } else {
        (BigUint::one() << (n - 1)).to_string()
    }
}

fn genocchi_count(max_n: usize) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for n in 0..=max_n {
        let g = genocchi(2 * n + 2)?;
        rows.push(Row::labeled(n, "first kind", &g, oracle::count(First, n, &[])));
        rows.push(Row::labeled(n, "second kind", &g, oracle::count(Second, n, &[])));
    }
    Ok(rows)
}

fn genocchi_bernoulli(max_n: usize) -> Result<Vec<Row>> {
    (0..=max_n)
        .map(|n| Ok(Row::new(n, gf::genocchi_from_bernoulli(n), genocchi(2 * n + 2)?)))
        .collect()
}

fn median_genocchi_count(max_n: usize) -> Result<Vec<Row>> {
    (1..=max_n)
        .map(|n| {
            let oracle = members(Second, n, &[]).iter().filter(|p| p.is_derangement()).count();
            Ok(Row::new(n, median_genocchi(n)?, oracle))
        })
        .collect()
}

fn d1_catalan(max_n: usize, pattern: &str) -> Result<Vec<Row>> {
    let c = gf::catalan_series(max_n);
    count_rows(max_n, 0, First, &[pattern], |n| c.coeff(n).to_string())
}

fn d1_213(max_n: usize) -> Result<Vec<Row>> {
    let c = gf::catalan_series(max_n);
    count_rows(max_n, 0, First, &["213"], |n| if n == 0 { "1".into() } else { c.coeff(n - 1).to_string() })
}

fn narayana_fix(max_n: usize) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let ms = members(Second, n, &["3142"]);
        let mut fix: BTreeMap<usize, u64> = BTreeMap::new();
        let mut parts: BTreeMap<usize, u64> = BTreeMap::new();
        for p in &ms {
            *fix.entry(p.statistics().fix).or_default() += 1;
            *parts.entry(bij::psi_nc(p)?.parts()).or_default() += 1;
        }
        for k in 0..n {
            let nk = narayana(n, k)?;
            rows.push(Row::labeled(n, format!("fix = {k}"), &nk, fix.get(&k).copied().unwrap_or(0)));
            rows.push(Row::labeled(n, format!("parts = {}", n - k), &nk, parts.get(&(n - k)).copied().unwrap_or(0)));
        }
        let beyond: u64 = fix.range(n..).map(|(_, c)| c).sum();
        rows.push(Row::labeled(n, format!("fix >= {n}"), 0, beyond));
    }
    Ok(rows)
}

fn qt_distribution(n: usize, avoid: &[&str]) -> QtPoly {
    let mut counts: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    for p in members(Second, n, avoid) {
        let s = p.statistics();
        *counts.entry((s.fix as u32, s.two_cycles as u32)).or_default() += 1;
    }
    QtPoly::from_counts(counts)
}

fn joint_qt(max_n: usize) -> Result<Vec<Row>> {
    let fixpoint = gf::a_qtx_fixpoint(max_n);
    let closed = gf::a_qtx_closed_form(max_n)?;
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let brute = qt_distribution(n, &["3142"]);
        rows.push(Row::labeled(n, "fixpoint", fixpoint.coeff(n), &brute));
        rows.push(Row::labeled(n, "closed form", closed.coeff(n), &brute));
    }
    Ok(rows)
}

fn theorem31(max_n: usize) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let ms = members(Second, n, &["3142"]);
        let mut ok = [0usize; 4];
        for p in &ms {
            let sp = p.statistics();
            let ss = bij::phi_even(p)?.statistics();
            let holds = [
                sp.fix + sp.fix_minus1 == n,
                sp.fix == ss.def,
                sp.fix_minus1 == ss.exc + ss.fix,
                ss.fix == sp.two_cycles,
            ];
            for (slot, h) in ok.iter_mut().zip(holds) {
                *slot += usize::from(h);
            }
        }
        let names = ["fix + fix_-1 = n", "fix = def(sigma)", "fix_-1 = exc(sigma) + fix(sigma)", "fix(sigma) = 2-cycles"];
        for (name, c) in names.iter().zip(ok) {
            rows.push(Row::labeled(n, *name, ms.len(), c));
        }
    }
    Ok(rows)
}

fn render_set(ps: &[Permutation]) -> String {
    let words: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
    words.join(" ")
}

fn set_4132(max_n: usize) -> Result<Vec<Row>> {
    Ok((1..=max_n)
        .map(|n| Row::new(n, render_set(&members(Second, n, &["321"])), render_set(&members(Second, n, &["4132"]))))
        .collect())
}

fn d2_2143_product(max_n: usize) -> Result<Vec<Row>> {
    count_rows(max_n, 0, Second, &["2143"], |n| (gf::a_seq(n) * gf::a_seq(n + 1)).to_string())
}

fn d2_2143_derangements(max_n: usize) -> Result<Vec<Row>> {
    Ok((0..=max_n)
        .map(|n| {
            let a = gf::a_seq(n);
            let oracle = members(Second, n, &["2143"]).iter().filter(|p| p.is_derangement()).count();
            Row::new(n, &a * &a, oracle)
        })
        .collect())
}

fn d2_2143_boards(max_n: usize) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for n in 0..=max_n {
        let ms = members(Second, n, &["2143"]);
        let mut images = BTreeSet::new();
        let mut roundtrips = 0usize;
        for p in &ms {
            let bp = bij::split_boards(p)?;
            if bij::merge_boards(&bp)? == *p {
                roundtrips += 1;
            }
            images.insert((bp.upper.clone(), bp.lower.clone()));
        }
        let pairs = count_boards(n, BoardKind::Upper) * count_boards(n, BoardKind::Lower);
        rows.push(Row::labeled(n, "roundtrips", ms.len(), roundtrips));
        rows.push(Row::labeled(n, "distinct images = board pairs", pairs, images.len()));
        let merged = enumerate_boards(n, BoardKind::Upper)
            .into_iter()
            .flat_map(|u| enumerate_boards(n, BoardKind::Lower).into_iter().map(move |l| (u.clone(), l)))
            .filter_map(|(u, l)| bij::BoardPair::new(u, l).ok())
            .filter_map(|bp| bij::merge_boards(&bp).ok())
            .filter(|p| crate::dumont::is_dumont(p, Second) && p.avoids(&perm("2143")))
            .count();
        rows.push(Row::labeled(n, "board pairs merging to avoiders", pairs, merged));
    }
    Ok(rows)
}

fn lower_board_count(max_n: usize) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for n in 0..=max_n {
        let a = gf::a_seq(n);
        rows.push(Row::labeled(n, "boards", &a, count_boards(n, BoardKind::Lower)));
        rows.push(Row::labeled(n, "lattice paths", &a, count_ne_paths(n)));
    }
    Ok(rows)
}

fn upper_board_count(max_n: usize) -> Result<Vec<Row>> {
    let b = gf::b_seq_table(max_n + 1);
    Ok((0..=max_n).map(|n| Row::new(n, &b[n + 1], count_boards(n, BoardKind::Upper))).collect())
}

fn b_equals_a(max_n: usize) -> Result<Vec<Row>> {
    let b = gf::b_seq_table(max_n);
    Ok((0..=max_n).map(|n| Row::new(n, &b[n], gf::a_seq(n))).collect())
}

fn fix_distribution(n: usize) -> QtPoly {
    let mut counts: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    for p in members(Second, n, &["2143"]) {
        *counts.entry((p.statistics().fix as u32, 0)).or_default() += 1;
    }
    QtPoly::from_counts(counts)
}

fn fix_formula(max_n: usize) -> Result<Vec<Row>> {
    Ok((0..=max_n).map(|n| Row::new(n, gf::fix2143_formula(n), fix_distribution(n))).collect())
}

fn fix_formula_shifted(max_n: usize) -> Result<Vec<Row>> {
    Ok((0..=max_n).map(|n| Row::new(n, gf::fix2143_formula_shifted(n), fix_distribution(n))).collect())
}

fn pair_schroder(max_n: usize, a: &str, b: &str) -> Result<Vec<Row>> {
    let s = gf::schroder_s(max_n);
    count_rows(max_n, 0, First, &[a, b], |n| s.coeff(n).to_string())
}

fn series_rows(max_n: usize, avoid: &[&str], formula: &Series) -> Vec<Row> {
    (0..=max_n).map(|n| Row::new(n, formula.coeff(n), oracle::count(First, n, avoid))).collect()
}

fn a_table(max_n: usize, t: &str) -> Result<Vec<Row>> {
    let form = tau::a_tau_table_closed_form(&perm(t), max_n).expect("pattern listed in the table");
    Ok(series_rows(max_n, &["1342", "1423", t], &form))
}

fn a_2143(max_n: usize) -> Result<Vec<Row>> {
    let c = tau::a_tau_table_closed_form(&perm("2143"), max_n).expect("listed");
    let mut rows = Vec::new();
    for n in 0..=max_n {
        rows.push(Row::labeled(n, "count", c.coeff(n), oracle::count(First, n, &["1342", "1423", "2143"])));
        rows.push(Row::labeled(
            n,
            "set",
            render_set(&members(First, n, &["132"])),
            render_set(&members(First, n, &["1342", "1423", "2143"])),
        ));
    }
    Ok(rows)
}

fn recursion_rows(
    max_n: usize,
    pair: [&str; 2],
    patterns: &[Permutation],
    series: impl Fn(&Permutation, usize) -> Result<(Series, Vec<tau::Rule>)>,
    keep: impl Fn(&[tau::Rule]) -> bool,
) -> Vec<Row> {
    let mut rows = Vec::new();
    for t in patterns {
        let Ok((s, rules)) = series(t, max_n) else { continue };
        if !keep(&rules) {
            continue;
        }
        let rule = rules.last().copied().unwrap_or(tau::Rule::Base);
        let ts = t.to_string();
        for n in 0..=max_n {
            let brute = oracle::count(First, n, &[pair[0], pair[1], &ts]);
            rows.push(Row::labeled(n, format!("{ts} ({rule})"), s.coeff(n), brute));
        }
    }
    rows
}

fn patterns_up_to(len: usize) -> Vec<Permutation> {
    (1..=len).flat_map(all_permutations).collect()
}

fn a_recursions(max_n: usize) -> Result<Vec<Row>> {
    Ok(recursion_rows(max_n, ["1342", "1423"], &patterns_up_to(4), tau::a_tau_derivation, |r| {
        r.last() != Some(&tau::Rule::Base)
    }))
}

fn b_312(max_n: usize) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for t in ["312", "4123"] {
        let c = tau::b_tau_stated_catalan(&perm(t), max_n).expect("stated");
        for n in 0..=max_n {
            rows.push(Row::labeled(n, format!("B_{t}"), c.coeff(n), oracle::count(First, n, &["2341", "2413", t])));
        }
    }
    Ok(rows)
}

/// Patterns whose derivation ends in `rule`, and for `PrependMax` uses no
/// other recursion on the way.
fn b_recursions(max_n: usize, rule: tau::Rule) -> Result<Vec<Row>> {
    use tau::Rule::{Base, ContainsPair, PrependMax};
    Ok(recursion_rows(max_n, ["2341", "2413"], &patterns_up_to(5), tau::b_tau_derivation, |rs| match rule {
        PrependMax => rs.last() == Some(&PrependMax) && rs.iter().all(|r| matches!(r, Base | ContainsPair | PrependMax)),
        _ => rs.contains(&rule),
    }))
}

/// Sample points in (0, 1/8) and the truncation order for the series side.
const CBA_POINTS: [f64; 5] = [0.01, 0.03, 0.05, 0.08, 0.11];
const CBA_ORDER: usize = 120;
const CBA_TOLERANCE: f64 = 1e-9;

fn b_chebyshev(max_k: usize) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for k in 0..=max_k {
        let tau_word: Vec<u32> = (1..=k as u32 + 2).rev().collect();
        let series = tau::b_tau(&Permutation::new(tau_word)?, CBA_ORDER)?;
        for x in CBA_POINTS {
            let closed = gf::cba_closed_form(k, x)?;
            let summed = series.eval_f64(x);
            let ok = (closed - summed).abs() <= CBA_TOLERANCE;
            rows.push(Row::judged(k, format!("x = {x}"), format!("{closed:.15}"), format!("{summed:.15}"), ok));
        }
    }
    Ok(rows)
}

const LBB_TOLERANCE: f64 = 1e-12;

fn lbb(max_m: usize) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for (u, v, r) in [(2.0, 1.0, 0.0), (3.0, 1.0, 0.5), (4.0, 2.0, 0.1)] {
        for m in 1..=max_m {
            let it = gf::lbb_iterate(u, v, r, m);
            let cf = gf::lbb_closed_form(u, v, r, m);
            let ok = (it - cf).abs() <= LBB_TOLERANCE;
            rows.push(Row::judged(m, format!("(u, v, r) = ({u}, {v}, {r})"), format!("{cf:.15}"), format!("{it:.15}"), ok));
        }
    }
    Ok(rows)
}

fn c_printed(max_n: usize, t: &str) -> Result<Vec<Row>> {
    let p = perm(t);
    let printed = tau::c_tau_printed_form(&p, max_n).expect("printed form listed");
    let recursion = tau::c_tau(&p, max_n)?;
    let mut rows = Vec::new();
    for n in 0..=max_n {
        let brute = oracle::count(First, n, &["1342", "2413", t]);
        rows.push(Row::labeled(n, "printed form", printed.coeff(n), brute));
        rows.push(Row::labeled(n, "recursion", recursion.coeff(n), brute));
    }
    Ok(rows)
}

fn c_recursions(max_n: usize) -> Result<Vec<Row>> {
    let monotone: Vec<Permutation> = (3..=5)
        .flat_map(|k| [Permutation::identity(k), Permutation::identity(k).reverse()])
        .collect();
    let derivation = |t: &Permutation, order| tau::c_tau_with_rule(t, order).map(|(s, r)| (s, vec![r]));
    Ok(recursion_rows(max_n, ["1342", "2413"], &monotone, derivation, |_| true))
}

/// Counts how many members of `domain` satisfy `ok`.
fn tally<T>(domain: &[T], ok: impl Fn(&T) -> Result<bool>) -> Result<usize> {
    let mut c = 0;
    for d in domain {
        if ok(d)? {
            c += 1;
        }
    }
    Ok(c)
}

fn roundtrips(max_n: usize) -> Result<Vec<Row>> {
    use crate::dumont::is_dumont;
    let mut rows = Vec::new();
    for n in 0..=max_n {
        let paths = enumerate_dyck(n);
        let mut push = |label: &str, formula: usize, oracle: usize| rows.push(Row::labeled(n, label, formula, oracle));

        let d132 = members(First, n, &["132"]);
        let s132: Vec<Permutation> = all_permutations(n).into_iter().filter(|p| p.avoids(&perm("132"))).collect();
        let s231: Vec<Permutation> = all_permutations(n).into_iter().filter(|p| p.avoids(&perm("231"))).collect();
        let d231 = members(First, n, &["231"]);
        let d321 = members(Second, n, &["321"]);

        push("f1", d132.len(), tally(&d132, |p| {
            let s = bij::f1(p)?;
            Ok(s.len() == n && s.avoids(&perm("132")) && bij::f1_inverse(&s)? == *p)
        })?);
        push("f1 inverse", s132.len(), tally(&s132, |s| {
            let p = bij::f1_inverse(s)?;
            Ok(is_dumont(&p, First) && p.avoids(&perm("132")) && bij::f1(&p)? == *s)
        })?);
        push("f2", d231.len(), tally(&d231, |p| {
            let s = bij::f2(p)?;
            Ok(s.len() == n && s.avoids(&perm("231")) && bij::f2_inverse(&s)? == *p)
        })?);
        push("f2 inverse", s231.len(), tally(&s231, |s| {
            let p = bij::f2_inverse(s)?;
            Ok(is_dumont(&p, First) && p.avoids(&perm("231")) && bij::f2(&p)? == *s)
        })?);
        push("phi", s132.len(), tally(&s132, |s| Ok(bij::phi_krat_inverse(&bij::phi_krat(s)?)? == *s))?);
        push("phi inverse", paths.len(), tally(&paths, |d| Ok(bij::phi_krat(&bij::phi_krat_inverse(d)?)? == *d))?);
        push("phi^R", s231.len(), tally(&s231, |s| Ok(bij::phi_r_inverse(&bij::phi_r(s)?)? == *s))?);
        push("phi^R inverse", paths.len(), tally(&paths, |d| Ok(bij::phi_r(&bij::phi_r_inverse(d)?)? == *d))?);
        let s321: Vec<Permutation> = all_permutations(n).into_iter().filter(|p| p.avoids(&perm("321"))).collect();
        push("psi", s321.len(), tally(&s321, |s| Ok(bij::psi_eli_inverse(&bij::psi_eli(s)?)? == *s))?);
        push("psi inverse", paths.len(), tally(&paths, |d| Ok(bij::psi_eli(&bij::psi_eli_inverse(d)?)? == *d))?);
        push("second kind 321 to paths", d321.len(), tally(&d321, |p| Ok(bij::d2_321_from_dyck(&bij::d2_321_to_dyck(p)?)? == *p))?);
        push("paths to second kind 321", paths.len(), tally(&paths, |d| {
            let p = bij::d2_321_from_dyck(d)?;
            Ok(is_dumont(&p, Second) && p.avoids(&perm("321")) && bij::d2_321_to_dyck(&p)? == *d)
        })?);
        push("g1", paths.len(), tally(&paths, |d| Ok(d.g1().g1_inverse()? == *d))?);
        push("g2", paths.len(), tally(&paths, |d| Ok(d.g2().g2_inverse()? == *d))?);

        let d3142 = members(Second, n, &["3142"]);
        let e: BTreeSet<Permutation> = crate::objects::enumerate_e(n).into_iter().collect();
        push("phi_even", d3142.len(), tally(&d3142, |p| {
            let s = bij::phi_even(p)?;
            Ok(e.contains(&s) && bij::phi_even_inverse(&s)? == *p)
        })?);
        let ev: Vec<Permutation> = e.iter().cloned().collect();
        push("phi_even inverse", ev.len(), tally(&ev, |s| {
            let p = bij::phi_even_inverse(s)?;
            Ok(is_dumont(&p, Second) && p.avoids(&perm("3142")) && bij::phi_even(&p)? == *s)
        })?);
        let nc = enumerate_nc(n);
        push("psi_nc", d3142.len(), tally(&d3142, |p| {
            let part = bij::psi_nc(p)?;
            Ok(part.parts() == n - p.statistics().fix && bij::psi_nc_inverse(&part)? == *p)
        })?);
        let images: BTreeSet<_> = d3142.iter().map(bij::psi_nc).collect::<Result<_>>()?;
        push("psi_nc onto NC(n)", nc.len(), images.len());

        let d2143 = members(Second, n, &["2143"]);
        push("split boards", d2143.len(), tally(&d2143, |p| Ok(bij::merge_boards(&bij::split_boards(p)?)? == *p))?);
        let lower = enumerate_boards(n, BoardKind::Lower);
        push("lower board to path", lower.len(), tally(&lower, |b| Ok(bij::path_to_lower_board(&bij::lower_board_to_path(b)?)? == *b))?);
        let upper = enumerate_boards(n, BoardKind::Upper);
        let ok = tally(&upper, |b| {
            let Ok(l) = bij::derangement_upper_to_lower(b) else { return Ok(false) };
            Ok(crate::objects::is_lower_board(&l) && bij::derangement_lower_to_upper(&l)? == *b)
        })?;
        push("derangement upper to lower", gf::a_seq(n).to_string().parse().unwrap_or(usize::MAX), ok);
    }
    Ok(rows)
}

fn transport(max_n: usize) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    // From n = 1: the empty permutation has lds 0.
    for n in 1..=max_n {
        let mut push = |label: &str, formula: usize, oracle: usize| rows.push(Row::labeled(n, label, formula, oracle));
        let d132 = members(First, n, &["132"]);
        push("lds = n + 1 on first kind 132", d132.len(), d132.iter().filter(|p| p.statistics().lds == n + 1).count());
        let d231 = members(First, n, &["231"]);
        push("rlm = n on first kind 231", d231.len(), d231.iter().filter(|p| p.statistics().rlm == n).count());
        push("lds drops by one under f2", d231.len(), tally(&d231, |p| Ok(bij::f2(p)?.statistics().lds + 1 == p.statistics().lds))?);
        let d321 = members(Second, n, &["321"]);
        push("lis = n on second kind 321", d321.len(), d321.iter().filter(|p| p.statistics().lis == n).count());
        if n <= 8 {
            let paths = enumerate_dyck(n);
            push("height(g1) = lambda", paths.len(), paths.iter().filter(|d| d.g1().height() == d.lambda_stat()).count());
            push("peaks(g1) = n + 1", paths.len(), paths.iter().filter(|d| d.g1().peaks() == n + 1).count());
            push("peaks(g2) = n", paths.len(), paths.iter().filter(|d| d.g2().peaks() == n).count());
            push("height(g2) = height + 1", paths.len(), paths.iter().filter(|d| d.g2().height() == d.height() + 1).count());
        }
        push("g1 of phi(f1(pi)) = phi(pi)", d132.len(), tally(&d132, |p| {
            Ok(bij::phi_krat(&bij::f1(p)?)?.g1() == bij::phi_krat(p)?)
        })?);
    }
    Ok(rows)
}

fn l_k(max_n: usize) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    let lis: Vec<Vec<usize>> = (0..=max_n)
        .map(|n| members(First, n, &["132"]).iter().map(|p| p.statistics().get(Statistic::Lis)).collect())
        .collect();
    for k in 0..=max_n + 1 {
        let l = gf::l_k_series(k as i64, max_n)?;
        for (n, values) in lis.iter().enumerate() {
            let brute = values.iter().filter(|&&v| v <= k).count();
            rows.push(Row::labeled(n, format!("k = {k}"), l.coeff(n), brute));
        }
    }
    Ok(rows)
}

fn series_identities(order: usize) -> Result<Vec<Row>> {
    let x = Series::x(order);
    let c = gf::catalan_series(order);
    let s = gf::schroder_s(order);
    let f = gf::ternary_f(order);
    let one = crate::series::ring::int(1);
    let mut rows = Vec::new();
    let mut cmp = |label: &str, a: &Series, b: &Series| {
        for n in 0..=order.min(a.order()).min(b.order()) {
            rows.push(Row::labeled(n, label, a.coeff(n), b.coeff(n)));
        }
    };
    cmp("C = 1 + xC^2", &c, &c.mul(&c).mul(&x).add_constant(&one));
    cmp("C by fixpoint", &c, &gf::catalan_fixpoint(order));
    let rhs = s.mul(&s).mul(&x).add(&s.mul(&s.add_constant(&crate::series::ring::int(-1))).mul(&x)).add_constant(&one);
    cmp("s = 1 + xs^2 + xs(s - 1)", &s, &rhs);
    cmp("s by fixpoint", &s, &gf::schroder_fixpoint(order));
    cmp("f = 1 + xf^3", &f, &f.pow(3).mul(&x).add_constant(&one));
    let a: Vec<i64> = (0..=order).map(|m| gf::a_seq(2 * m).to_string().parse().unwrap_or(-1)).collect();
    cmp("[x^m]f = a_{2m}", &f, &Series::from_i64s(&a, order));
    let fp = gf::a_qtx_fixpoint(order.min(10));
    let cf = gf::a_qtx_closed_form(order.min(10))?;
    for n in 0..=fp.order() {
        rows.push(Row::labeled(n, "A(q,t,x) fixpoint = closed form", fp.coeff(n), cf.coeff(n)));
    }
    let r = gf::large_schroder_recurrence(order);
    for n in 0..=order {
        rows.push(Row::labeled(n, "r_n = 2 s_{n+1}", gf::large_schroder(n), &r[n]));
    }
    Ok(rows)
}
