//! Direct enumeration of the closed summation formulas for the minors in
//! all four families, including the spin cases: factor-monomial tables
//! indexed over `J` plus the formal index `r+1`, and the family-specific
//! condition sets.

use num_bigint::BigInt;
use thiserror::Error;

use crate::fund_rep::{j_ge, Letter};
use crate::laurent::{LaurentPoly, Monomial};
use crate::root_data::{Family, GroupType};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClosedFormError {
    #[error("index {0:?} is illegal for family {1:?}")]
    IllegalIndex(FactorIndex, Family),
    #[error("parameters m={m}, d={d} out of range for {group:?}")]
    OutOfRange { group: GroupType, m: usize, d: usize },
}

/// Index of a factor monomial: an element of `J`, or the formal `r+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorIndex {
    J(Letter),
    RPlus1,
}

impl std::fmt::Display for FactorIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FactorIndex::J(l) => write!(f, "{l}"),
            FactorIndex::RPlus1 => write!(f, "r+1"),
        }
    }
}

/// `a <= b` in the family's order on `J`; false for the incomparable
/// type-D pair.
fn j_le(group: GroupType, a: Letter, b: Letter) -> bool {
    j_ge(group, b, a)
}

/// The factor monomial at row `l`, per the family's case table.
pub fn factor(group: GroupType, l: i32, k: FactorIndex) -> Result<Monomial, ClosedFormError> {
    let r = group.rank();
    let ri = r as i32;
    let y = |row: i32, col: i32| Monomial::y(r, row, col);
    let bad = || ClosedFormError::IllegalIndex(k, group.family());
    let m = match (group.family(), k) {
        (Family::A, FactorIndex::J(Letter::Pos(j))) if j <= r => {
            y(l, j as i32 - 1).mul(&y(l, j as i32).inv())
        }
        (Family::C, FactorIndex::J(Letter::Pos(j))) if j <= r => {
            y(l, j as i32 - 1).mul(&y(l, j as i32).inv())
        }
        (Family::C, FactorIndex::J(Letter::Neg(j))) if j <= r => {
            y(l, j as i32).mul(&y(l + 1, j as i32 - 1).inv())
        }
        (Family::B, FactorIndex::J(Letter::Pos(j))) if j < r => {
            y(l, j as i32 - 1).mul(&y(l, j as i32).inv())
        }
        (Family::B, FactorIndex::J(Letter::Pos(j))) if j == r => {
            y(l, ri - 1).mul(&y(l, ri).powi(-2))
        }
        (Family::B, FactorIndex::J(Letter::Zero)) => y(l, ri).mul(&y(l + 1, ri).inv()),
        (Family::B, FactorIndex::J(Letter::Neg(j))) if j == r => {
            y(l, ri).powi(2).mul(&y(l + 1, ri - 1).inv())
        }
        (Family::B, FactorIndex::J(Letter::Neg(j))) if j < r => {
            y(l, j as i32).mul(&y(l + 1, j as i32 - 1).inv())
        }
        (Family::B, FactorIndex::RPlus1) => y(l, ri).inv(),
        (Family::D, FactorIndex::J(Letter::Pos(j))) if j <= r - 2 => {
            y(l, j as i32 - 1).mul(&y(l, j as i32).inv())
        }
        (Family::D, FactorIndex::J(Letter::Pos(j))) if j == r - 1 => y(l, ri - 2)
            .mul(&y(l, ri - 1).inv())
            .mul(&y(l, ri).inv()),
        (Family::D, FactorIndex::J(Letter::Pos(j))) if j == r => {
            y(l, ri - 1).mul(&y(l + 1, ri).inv())
        }
        (Family::D, FactorIndex::J(Letter::Neg(j))) if j == r - 1 => y(l, ri)
            .mul(&y(l, ri - 1))
            .mul(&y(l + 1, ri - 2).inv()),
        (Family::D, FactorIndex::J(Letter::Neg(j))) if j <= r - 2 || j == r => {
            y(l, j as i32).mul(&y(l + 1, j as i32 - 1).inv())
        }
        (Family::D, FactorIndex::RPlus1) => y(l, ri).inv(),
        _ => return Err(bad()),
    };
    Ok(m)
}

/// One enumerated summand: rows and indices of its factors, the
/// simplified product, and the sequence-level coefficient.
#[derive(Debug, Clone)]
pub struct Summand {
    pub rows: Vec<i32>,
    pub indices: Vec<FactorIndex>,
    pub product: Monomial,
    pub coeff: i64,
}

/// A closed-form evaluation: the unsimplified summands and their sum.
#[derive(Debug, Clone)]
pub struct ClosedForm {
    pub summands: Vec<Summand>,
    pub poly: LaurentPoly,
}

impl ClosedForm {
    fn from_summands(summands: Vec<Summand>) -> ClosedForm {
        let mut poly = LaurentPoly::zero();
        for s in &summands {
            poly.add_term(s.product.clone(), &BigInt::from(s.coeff));
        }
        ClosedForm { summands, poly }
    }
}

fn summand(group: GroupType, rows: Vec<i32>, indices: Vec<FactorIndex>, coeff: i64) -> Summand {
    let mut product = Monomial::one();
    for (row, idx) in rows.iter().zip(&indices) {
        product = product.mul(&factor(group, *row, *idx).expect("legal factor"));
    }
    Summand {
        rows,
        indices,
        product,
        coeff,
    }
}

fn increasing_subsets(low: usize, high: usize, d: usize) -> Vec<Vec<usize>> {
    fn rec(next: usize, high: usize, d: usize, buf: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if buf.len() == d {
            out.push(buf.clone());
            return;
        }
        for k in next..=high {
            buf.push(k);
            rec(k + 1, high, d, buf, out);
            buf.pop();
        }
    }
    let mut out = Vec::new();
    rec(low, high, d, &mut Vec::new(), &mut out);
    out
}

/// Letters of `J` in the family's bookkeeping order.
fn j_letters(group: GroupType) -> Vec<Letter> {
    let r = group.rank();
    match group.family() {
        Family::A => (1..=r + 1).map(Letter::Pos).collect(),
        Family::C => (1..=r)
            .map(Letter::Pos)
            .chain((1..=r).rev().map(Letter::Neg))
            .collect(),
        Family::B => (1..=r)
            .map(Letter::Pos)
            .chain(std::iter::once(Letter::Zero))
            .chain((1..=r).rev().map(Letter::Neg))
            .collect(),
        Family::D => (1..=r)
            .map(Letter::Pos)
            .chain(std::iter::once(Letter::Neg(r)))
            .chain((1..=r - 1).rev().map(Letter::Neg))
            .collect(),
    }
}

fn chains(
    letters: &[Letter],
    d: usize,
    step_ok: &dyn Fn(Letter, Letter) -> bool,
    pos_ok: &dyn Fn(usize, Letter) -> bool,
) -> Vec<Vec<Letter>> {
    fn rec(
        letters: &[Letter],
        d: usize,
        step_ok: &dyn Fn(Letter, Letter) -> bool,
        pos_ok: &dyn Fn(usize, Letter) -> bool,
        buf: &mut Vec<Letter>,
        out: &mut Vec<Vec<Letter>>,
    ) {
        if buf.len() == d {
            out.push(buf.clone());
            return;
        }
        for &k in letters {
            if !pos_ok(buf.len() + 1, k) {
                continue;
            }
            if let Some(&prev) = buf.last() {
                if !step_ok(prev, k) {
                    continue;
                }
            }
            buf.push(k);
            rec(letters, d, step_ok, pos_ok, buf, out);
            buf.pop();
        }
    }
    let mut out = Vec::new();
    rec(letters, d, step_ok, pos_ok, &mut Vec::new(), &mut out);
    out
}

/// Type A: sum over `k_1 < ... < k_d <= m-1+d` of products of
/// `A`-factors at rows `m - k_t + t`.
pub fn closed_a(group: GroupType, m: usize, d: usize) -> Result<ClosedForm, ClosedFormError> {
    let r = group.rank();
    if group.family() != Family::A || m < 2 || m > r || d < 1 || d > r - m + 1 {
        return Err(ClosedFormError::OutOfRange { group, m, d });
    }
    let summands = increasing_subsets(1, m - 1 + d, d)
        .into_iter()
        .map(|ks| {
            let rows: Vec<i32> = ks
                .iter()
                .enumerate()
                .map(|(t, k)| (m + t + 1 - k) as i32)
                .collect();
            let indices: Vec<FactorIndex> =
                ks.iter().map(|k| FactorIndex::J(Letter::Pos(*k))).collect();
            summand(group, rows, indices, 1)
        })
        .collect();
    Ok(ClosedForm::from_summands(summands))
}

/// Row index shared by the B and C tables: `m - j + i` for an unbarred
/// `j`, and `m - r - 1 + i` at the index `0` or above the bar.
fn bc_row(m: usize, r: usize, i: usize, k: Letter) -> i32 {
    match k {
        Letter::Pos(j) => (m + i) as i32 - j as i32,
        _ => (m + i) as i32 - r as i32 - 1,
    }
}

/// Type C: strictly increasing chains in `J_C` with per-position caps.
pub fn closed_c(group: GroupType, m: usize, d: usize) -> Result<ClosedForm, ClosedFormError> {
    let r = group.rank();
    if group.family() != Family::C || m < 2 || m > r || d < 1 || d > r {
        return Err(ClosedFormError::OutOfRange { group, m, d });
    }
    let letters = j_letters(group);
    let cap = move |i: usize| -> Letter {
        if i <= r + 1 - m {
            Letter::Pos(m - 1 + i)
        } else {
            Letter::Neg(d - i + 1)
        }
    };
    let seqs = chains(
        &letters,
        d,
        &(|prev: Letter, next: Letter| next.position(group) > prev.position(group)),
        &(move |i: usize, k: Letter| j_le(group, k, cap(i))),
    );
    let summands = seqs
        .into_iter()
        .map(|ks| {
            let rows: Vec<i32> = ks
                .iter()
                .enumerate()
                .map(|(t, k)| bc_row(m, r, t + 1, *k))
                .collect();
            let indices: Vec<FactorIndex> = ks.iter().map(|k| FactorIndex::J(*k)).collect();
            summand(group, rows, indices, 1)
        })
        .collect();
    Ok(ClosedForm::from_summands(summands))
}

/// Type B below the spin node: weakly increasing chains where equality is
/// allowed only at the index `0`, with coefficient 2 whenever `0` occurs.
pub fn closed_b(group: GroupType, m: usize, d: usize) -> Result<ClosedForm, ClosedFormError> {
    let r = group.rank();
    if group.family() != Family::B || m < 2 || m > r || d < 1 || d >= r {
        return Err(ClosedFormError::OutOfRange { group, m, d });
    }
    let letters = j_letters(group);
    let cap = move |i: usize| -> Letter {
        if i <= r + 1 - m {
            Letter::Pos(m - 1 + i)
        } else {
            Letter::Neg(d - i + 1)
        }
    };
    let seqs = chains(
        &letters,
        d,
        &(|prev: Letter, next: Letter| {
            next.position(group) > prev.position(group)
                || (prev == Letter::Zero && next == Letter::Zero)
        }),
        &(move |i: usize, k: Letter| j_le(group, k, cap(i))),
    );
    let summands = seqs
        .into_iter()
        .map(|ks| {
            let rows: Vec<i32> = ks
                .iter()
                .enumerate()
                .map(|(t, k)| bc_row(m, r, t + 1, *k))
                .collect();
            let coeff = if ks.contains(&Letter::Zero) { 2 } else { 1 };
            let indices: Vec<FactorIndex> = ks.iter().map(|k| FactorIndex::J(*k)).collect();
            summand(group, rows, indices, coeff)
        })
        .collect();
    Ok(ClosedForm::from_summands(summands))
}

fn spin_summands(group: GroupType, m: usize, parity: Option<usize>) -> Vec<Summand> {
    let r = group.rank();
    let mut summands = Vec::new();
    for s in 0..m {
        if let Some(p) = parity {
            if s % 2 != p {
                continue;
            }
        }
        for ks in increasing_subsets(1, r, s) {
            let mut rows: Vec<i32> = (1..=s).map(|i| (m - i) as i32).collect();
            let mut indices: Vec<FactorIndex> = ks
                .iter()
                .map(|k| FactorIndex::J(Letter::Neg(*k)))
                .collect();
            rows.push((m - s) as i32);
            indices.push(FactorIndex::RPlus1);
            summands.push(summand(group, rows, indices, 1));
        }
    }
    summands
}

/// Type B spin column: barred strictly increasing sequences of every
/// length `s <= m-1`, closed by the formal `r+1` factor.
pub fn closed_b_spin(group: GroupType, m: usize) -> Result<ClosedForm, ClosedFormError> {
    let r = group.rank();
    if group.family() != Family::B || m < 2 || m > r {
        return Err(ClosedFormError::OutOfRange { group, m, d: r });
    }
    Ok(ClosedForm::from_summands(spin_summands(group, m, None)))
}

/// Type D spin columns: as for B, with the parity of `s` fixed by the
/// requested spin node (`r` wants even `s`, `r-1` odd).
pub fn closed_d_spin(
    group: GroupType,
    m: usize,
    which: usize,
) -> Result<ClosedForm, ClosedFormError> {
    let r = group.rank();
    if group.family() != Family::D || m < 2 || m > r - 1 || (which != r && which != r - 1) {
        return Err(ClosedFormError::OutOfRange { group, m, d: which });
    }
    let parity = if which == r { 0 } else { 1 };
    Ok(ClosedForm::from_summands(spin_summands(group, m, Some(parity))))
}

/// Type D below the spin nodes: chains `k_1 !>= k_2 !>= ... !>= k_d` in
/// the partial order where `r` and `r-bar` are incomparable, with the
/// per-position window `i <= k_i <= cap(i)`.
pub fn closed_d(group: GroupType, m: usize, d: usize) -> Result<ClosedForm, ClosedFormError> {
    let r = group.rank();
    if group.family() != Family::D || m < 2 || m > r - 1 || d < 1 || d >= r - 1 {
        return Err(ClosedFormError::OutOfRange { group, m, d });
    }
    let letters = j_letters(group);
    let cap = move |i: usize| -> Letter {
        if i <= r - m {
            Letter::Pos(m - 1 + i)
        } else {
            Letter::Neg(d - i + 1)
        }
    };
    let seqs = chains(
        &letters,
        d,
        &(move |prev: Letter, next: Letter| !j_ge(group, prev, next)),
        &(move |i: usize, k: Letter| {
            j_le(group, Letter::Pos(i), k) && j_le(group, k, cap(i))
        }),
    );
    let summands = seqs
        .into_iter()
        .map(|ks| {
            let rows: Vec<i32> = ks
                .iter()
                .enumerate()
                .map(|(t, k)| match k {
                    Letter::Pos(j) if *j <= r - 1 => (m + t + 1 - j) as i32,
                    _ => (m + t + 1) as i32 - r as i32,
                })
                .collect();
            let indices: Vec<FactorIndex> = ks.iter().map(|k| FactorIndex::J(*k)).collect();
            summand(group, rows, indices, 1)
        })
        .collect();
    Ok(ClosedForm::from_summands(summands))
}

/// Dispatch on the family and weight index `d`.
pub fn closed_for(group: GroupType, m: usize, d: usize) -> Result<ClosedForm, ClosedFormError> {
    let r = group.rank();
    match group.family() {
        Family::A => closed_a(group, m, d),
        Family::C => closed_c(group, m, d),
        Family::B => {
            if d == r {
                closed_b_spin(group, m)
            } else {
                closed_b(group, m, d)
            }
        }
        Family::D => {
            if d >= r - 1 {
                closed_d_spin(group, m, d)
            } else {
                closed_d(group, m, d)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minors::{delta_l, demazure_scope_request};

    fn gt(f: Family, r: usize) -> GroupType {
        GroupType::new(f, r).unwrap()
    }

    fn mono(s: &str) -> Monomial {
        let p: LaurentPoly = s.parse().unwrap();
        p.as_unit_monomial().unwrap().0
    }

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn factor_examples() {
        let d4 = gt(Family::D, 4);
        assert_eq!(
            factor(d4, 2, FactorIndex::J(Letter::Pos(3))).unwrap(),
            mono("Y[2,2]*Y[2,3]^-1*Y[2,4]^-1")
        );
        let c3 = gt(Family::C, 3);
        assert_eq!(
            factor(c3, 2, FactorIndex::J(Letter::Pos(1))).unwrap(),
            mono("Y[2,1]^-1")
        );
        let b3 = gt(Family::B, 3);
        assert_eq!(
            factor(b3, 1, FactorIndex::J(Letter::Zero)).unwrap(),
            mono("Y[1,3]*Y[2,3]^-1")
        );
        assert!(factor(c3, 1, FactorIndex::J(Letter::Zero)).is_err());
        assert!(factor(gt(Family::A, 3), 1, FactorIndex::J(Letter::Neg(1))).is_err());
    }

    #[test]
    fn closed_a_small_case_and_count() {
        let g = gt(Family::A, 2);
        let cf = closed_a(g, 2, 1).unwrap();
        assert_eq!(cf.poly, poly("Y[2,1]^-1 + Y[1,1]*Y[1,2]^-1"));
        // term count is binomial(m-1+d, d)
        let g4 = gt(Family::A, 4);
        for (m, d) in [(2usize, 2usize), (2, 3), (3, 2), (4, 1)] {
            let cf = closed_a(g4, m, d).unwrap();
            let expect = increasing_subsets(1, m - 1 + d, d).len();
            assert_eq!(cf.summands.len(), expect);
        }
        assert!(closed_a(g, 2, 2).is_err());
    }

    #[test]
    fn closed_c2_matches_displayed_sequences() {
        let g = gt(Family::C, 2);
        let cf = closed_c(g, 2, 2).unwrap();
        // C(2,1)C(2,2) + C(2,1)C(1,-2) + C(2,1)C(1,-1) + C(1,2)C(1,-2) + C(1,2)C(1,-1)
        let expect: Vec<(Vec<i32>, Vec<Letter>)> = vec![
            (vec![2, 2], vec![Letter::Pos(1), Letter::Pos(2)]),
            (vec![2, 1], vec![Letter::Pos(1), Letter::Neg(2)]),
            (vec![2, 1], vec![Letter::Pos(1), Letter::Neg(1)]),
            (vec![1, 1], vec![Letter::Pos(2), Letter::Neg(2)]),
            (vec![1, 1], vec![Letter::Pos(2), Letter::Neg(1)]),
        ];
        let got: Vec<(Vec<i32>, Vec<Letter>)> = cf
            .summands
            .iter()
            .map(|s| {
                (
                    s.rows.clone(),
                    s.indices
                        .iter()
                        .map(|i| match i {
                            FactorIndex::J(l) => *l,
                            _ => panic!(),
                        })
                        .collect(),
                )
            })
            .collect();
        for e in &expect {
            assert!(got.contains(e), "missing sequence {e:?}");
        }
        assert_eq!(got.len(), 5);
        assert_eq!(
            cf.poly,
            poly("Y[1,1]^2*Y[1,2]^-1 + 2*Y[1,1]*Y[2,1]^-1 + Y[1,2]*Y[2,1]^-2 + Y[2,2]^-1")
        );
    }

    #[test]
    fn closed_b_spin_has_seven_terms_at_rank_3() {
        let g = gt(Family::B, 3);
        let cf = closed_b_spin(g, 3).unwrap();
        assert_eq!(cf.summands.len(), 7);
        // the s = 0 summand is 1/Y[3,3]
        assert!(cf
            .summands
            .iter()
            .any(|s| s.indices.len() == 1 && s.product == mono("Y[3,3]^-1")));
        let expect = poly(
            "Y[1,2]*Y[1,3]^-1 + Y[1,3]*Y[2,1]*Y[2,2]^-1 + Y[1,3]*Y[3,1]^-1 \
             + Y[2,1]*Y[2,3]^-1 + Y[2,2]*Y[2,3]^-1*Y[3,1]^-1 + Y[2,3]*Y[3,2]^-1 \
             + Y[3,3]^-1",
        );
        assert_eq!(cf.poly, expect);
    }

    #[test]
    fn b_sequence_coefficients_stay_in_one_two() {
        let g = gt(Family::B, 3);
        for m in 2..=3 {
            for d in 1..=2 {
                let cf = closed_b(g, m, d).unwrap();
                for s in &cf.summands {
                    assert!(s.coeff == 1 || s.coeff == 2);
                    let has_zero = s
                        .indices
                        .iter()
                        .any(|i| matches!(i, FactorIndex::J(Letter::Zero)));
                    assert_eq!(s.coeff == 2, has_zero);
                }
            }
        }
    }

    #[test]
    fn closed_forms_match_bilinear_minors_small() {
        for (f, r) in [(Family::C, 2), (Family::C, 3), (Family::B, 2), (Family::B, 3)] {
            let g = gt(f, r);
            for m in 2..=r {
                for d in 1..=r {
                    let req = demazure_scope_request(g, m, d).unwrap();
                    let direct = delta_l(&req).unwrap();
                    let cf = closed_for(g, m, d).unwrap();
                    assert_eq!(cf.poly, direct, "{f:?}_{r} m={m} d={d}");
                }
            }
        }
    }

    #[test]
    fn closed_d_matches_bilinear_minor() {
        let g = gt(Family::D, 4);
        let req = demazure_scope_request(g, 2, 1).unwrap();
        assert_eq!(req.word().letters(), &[1, 2, 3, 4, 1]);
        assert_eq!(req.k(), 1);
        let direct = delta_l(&req).unwrap();
        let cf = closed_d(g, 2, 1).unwrap();
        assert_eq!(cf.poly, direct);
        assert_eq!(cf.poly, poly("Y[2,1]^-1 + Y[1,1]*Y[1,2]^-1"));
    }

    #[test]
    fn closed_d_spin_matches_bilinear_minor() {
        let g = gt(Family::D, 4);
        for which in [3usize, 4] {
            for m in 2..=3 {
                let req = demazure_scope_request(g, m, which).unwrap();
                let direct = delta_l(&req).unwrap();
                let cf = closed_d_spin(g, m, which).unwrap();
                assert_eq!(cf.poly, direct, "which={which} m={m}");
            }
        }
    }

    #[test]
    fn c_condition_set_counts_weighted_multiplicities() {
        use crate::minors::verify_demazure_match;
        let g = gt(Family::C, 3);
        for m in 2..=3 {
            for d in 1..=3 {
                let cf = closed_c(g, m, d).unwrap();
                let req = demazure_scope_request(g, m, d).unwrap();
                let report = verify_demazure_match(&req, false).unwrap();
                let weighted: BigInt = report
                    .multiplicities
                    .iter()
                    .map(|(_, c)| c.clone())
                    .sum();
                assert_eq!(BigInt::from(cf.summands.len()), weighted);
            }
        }
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(closed_c(gt(Family::C, 2), 1, 1).is_err());
        assert!(closed_b(gt(Family::B, 3), 2, 3).is_err());
        assert!(closed_d(gt(Family::D, 4), 2, 3).is_err());
        assert!(closed_d_spin(gt(Family::D, 4), 2, 2).is_err());
    }
}
