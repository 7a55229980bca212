//! Explicit fundamental representations over the Laurent ring: wedge
//! powers of the vector representation and the spin representations,
//! with exact generator actions, one-parameter subgroup factors, Weyl
//! representatives, and the invariant bilinear form.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::laurent::{LaurentPoly, Monomial};
use crate::root_data::{Family, GroupType, ReducedWord, Weight};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("realization {real:?} is not defined for {family:?} rank {rank}")]
    IllegalModule {
        real: Realization,
        family: Family,
        rank: usize,
    },
    #[error("no fundamental module for weight index {d} in {family:?} rank {rank}")]
    NoModule {
        d: usize,
        family: Family,
        rank: usize,
    },
}

/// An element of the index set `J` of the vector representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    Pos(usize),
    Zero,
    Neg(usize),
}

impl Letter {
    /// Position in the family's linear bookkeeping order, starting at 1.
    /// For type D the incomparable pair is booked with `r` before `r-bar`.
    pub fn position(&self, group: GroupType) -> usize {
        let r = group.rank();
        match (group.family(), *self) {
            (_, Letter::Pos(j)) => j,
            (Family::B, Letter::Zero) => r + 1,
            (Family::B, Letter::Neg(j)) => 2 * r + 2 - j,
            (Family::C, Letter::Neg(j)) => 2 * r + 1 - j,
            (Family::D, Letter::Neg(j)) => {
                if j == r {
                    r + 1
                } else {
                    2 * r + 1 - j
                }
            }
            _ => panic!("letter {self:?} not in J for {:?}", group.family()),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Pos(j) => write!(f, "{j}"),
            Letter::Zero => write!(f, "0"),
            Letter::Neg(j) => write!(f, "-{j}"),
        }
    }
}

/// Comparison in the type-D order where `r` and `r-bar` are incomparable;
/// total for every other pair and for the other families.
pub fn j_partial_cmp(group: GroupType, a: Letter, b: Letter) -> Option<Ordering> {
    if group.family() == Family::D {
        let r = group.rank();
        let pair = (a, b);
        if pair == (Letter::Pos(r), Letter::Neg(r)) || pair == (Letter::Neg(r), Letter::Pos(r)) {
            return None;
        }
    }
    Some(a.position(group).cmp(&b.position(group)))
}

/// `a >= b` in the family order; false for incomparable type-D pairs.
pub fn j_ge(group: GroupType, a: Letter, b: Letter) -> bool {
    matches!(
        j_partial_cmp(group, a, b),
        Some(Ordering::Greater) | Some(Ordering::Equal)
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Realization {
    /// `d`-th wedge power of the vector representation (`d = 1` is the
    /// vector representation itself).
    Wedge(usize),
    SpinB,
    SpinDPlus,
    SpinDMinus,
}

/// Basis element: a strictly increasing tuple of letter positions, or a
/// sign vector for spin modules.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisKey {
    Wedge(Vec<u8>),
    Spin(Vec<i8>),
}

impl fmt::Display for BasisKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisKey::Wedge(ps) => {
                write!(f, "v[")?;
                for (i, p) in ps.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, "]")
            }
            BasisKey::Spin(signs) => {
                write!(f, "(")?;
                for (i, s) in signs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", if *s > 0 { "+" } else { "-" })?;
                }
                write!(f, ")")
            }
        }
    }
}

/// A module element: a finite sum of basis vectors with Laurent
/// polynomial coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RepVector {
    terms: BTreeMap<BasisKey, LaurentPoly>,
}

impl RepVector {
    pub fn zero() -> Self {
        RepVector::default()
    }

    pub fn from_key(key: BasisKey) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(key, LaurentPoly::one());
        RepVector { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, key: &BasisKey) -> LaurentPoly {
        self.terms.get(key).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisKey, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    pub fn add_term(&mut self, key: BasisKey, poly: &LaurentPoly) {
        if poly.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry(key.clone())
            .or_insert_with(LaurentPoly::zero);
        *entry = entry.add(poly);
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, rhs: &RepVector) -> RepVector {
        let mut out = self.clone();
        for (k, p) in rhs.iter() {
            out.add_term(k.clone(), p);
        }
        out
    }

    pub fn scale_poly(&self, t: &LaurentPoly) -> RepVector {
        let mut out = RepVector::zero();
        for (k, p) in self.iter() {
            out.add_term(k.clone(), &p.mul(t));
        }
        out
    }

    fn div_int_exact(&self, k: i64) -> Option<RepVector> {
        let mut out = RepVector::zero();
        for (key, p) in self.iter() {
            out.add_term(key.clone(), &p.div_int_exact(k)?);
        }
        Some(out)
    }
}

impl fmt::Display for RepVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, p) in self.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({p})*{k}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Gen {
    E,
    F,
}

/// A fundamental representation with its basis and action tables.
#[derive(Debug, Clone)]
pub struct Module {
    group: GroupType,
    realization: Realization,
    letters: Vec<Letter>,
    letter_weights: Vec<Weight>,
    letter_norms: Vec<i64>,
}

impl Module {
    pub fn new(group: GroupType, realization: Realization) -> Result<Module, RepError> {
        let r = group.rank();
        let fam = group.family();
        let ok = match realization {
            Realization::Wedge(d) => {
                d >= 1
                    && match fam {
                        Family::A | Family::C => d <= r,
                        Family::B => d <= r - 1,
                        Family::D => d <= r - 2,
                    }
            }
            Realization::SpinB => fam == Family::B,
            Realization::SpinDPlus | Realization::SpinDMinus => fam == Family::D,
        };
        if !ok {
            return Err(RepError::IllegalModule {
                real: realization,
                family: fam,
                rank: r,
            });
        }
        let letters = letter_table(group);
        let letter_weights = letters.iter().map(|l| letter_weight(group, *l)).collect();
        let letter_norms = letters
            .iter()
            .map(|l| if *l == Letter::Zero { 2 } else { 1 })
            .collect();
        Ok(Module {
            group,
            realization,
            letters,
            letter_weights,
            letter_norms,
        })
    }

    pub fn vector(group: GroupType) -> Result<Module, RepError> {
        Module::new(group, Realization::Wedge(1))
    }

    /// The realization of `V(Lambda_d)` prescribed per family: wedge
    /// powers below the spin thresholds, spin modules at them.
    pub fn fundamental(group: GroupType, d: usize) -> Result<Module, RepError> {
        let r = group.rank();
        if d < 1 || d > r {
            return Err(RepError::NoModule {
                d,
                family: group.family(),
                rank: r,
            });
        }
        let real = match group.family() {
            Family::A | Family::C => Realization::Wedge(d),
            Family::B => {
                if d == r {
                    Realization::SpinB
                } else {
                    Realization::Wedge(d)
                }
            }
            Family::D => {
                if d == r {
                    Realization::SpinDPlus
                } else if d == r - 1 {
                    Realization::SpinDMinus
                } else {
                    Realization::Wedge(d)
                }
            }
        };
        Module::new(group, real)
    }

    pub fn group(&self) -> GroupType {
        self.group
    }

    pub fn realization(&self) -> Realization {
        self.realization
    }

    pub fn dim_vector_rep(&self) -> usize {
        self.letters.len()
    }

    pub fn letter_at(&self, pos: u8) -> Letter {
        self.letters[(pos - 1) as usize]
    }

    pub fn position_of(&self, l: Letter) -> u8 {
        l.position(self.group) as u8
    }

    /// Index of the fundamental weight this module realizes.
    pub fn weight_index(&self) -> usize {
        match self.realization {
            Realization::Wedge(d) => d,
            Realization::SpinB | Realization::SpinDPlus => self.group.rank(),
            Realization::SpinDMinus => self.group.rank() - 1,
        }
    }

    pub fn highest_key(&self) -> BasisKey {
        match self.realization {
            Realization::Wedge(d) => BasisKey::Wedge((1..=d as u8).collect()),
            Realization::SpinB | Realization::SpinDPlus => {
                BasisKey::Spin(vec![1; self.group.rank()])
            }
            Realization::SpinDMinus => {
                let mut signs = vec![1; self.group.rank()];
                signs[self.group.rank() - 1] = -1;
                BasisKey::Spin(signs)
            }
        }
    }

    pub fn highest_vector(&self) -> RepVector {
        RepVector::from_key(self.highest_key())
    }

    /// All basis keys of the module.
    pub fn basis(&self) -> Vec<BasisKey> {
        match self.realization {
            Realization::Wedge(d) => {
                let n = self.dim_vector_rep() as u8;
                let mut out = Vec::new();
                let mut tuple: Vec<u8> = (1..=d as u8).collect();
                loop {
                    out.push(BasisKey::Wedge(tuple.clone()));
                    // next strictly increasing tuple
                    let mut idx = d;
                    loop {
                        if idx == 0 {
                            return out;
                        }
                        idx -= 1;
                        let max = n - (d as u8 - 1 - idx as u8);
                        if tuple[idx] < max {
                            tuple[idx] += 1;
                            for j in idx + 1..d {
                                tuple[j] = tuple[j - 1] + 1;
                            }
                            break;
                        }
                    }
                }
            }
            _ => {
                let r = self.group.rank();
                let parity = match self.realization {
                    Realization::SpinDPlus => Some(1),
                    Realization::SpinDMinus => Some(-1),
                    _ => None,
                };
                let mut out = Vec::new();
                for mask in 0..(1u32 << r) {
                    let signs: Vec<i8> = (0..r)
                        .map(|i| if mask & (1 << i) == 0 { 1 } else { -1 })
                        .collect();
                    if let Some(p) = parity {
                        let prod: i8 = signs.iter().product();
                        if prod != p {
                            continue;
                        }
                    }
                    out.push(BasisKey::Spin(signs));
                }
                out
            }
        }
    }

    pub fn weight_of(&self, key: &BasisKey) -> Weight {
        let r = self.group.rank();
        match key {
            BasisKey::Wedge(ps) => {
                let mut w = Weight::zero(r);
                for p in ps {
                    w = w.add(&self.letter_weights[(*p - 1) as usize]);
                }
                w
            }
            BasisKey::Spin(signs) => {
                let mut coords = vec![0i64; r];
                for i in 1..r {
                    coords[i - 1] = ((signs[i - 1] - signs[i]) / 2) as i64;
                }
                coords[r - 1] = match self.group.family() {
                    Family::B => signs[r - 1] as i64,
                    Family::D => ((signs[r - 2] + signs[r - 1]) / 2) as i64,
                    _ => unreachable!(),
                };
                Weight(coords)
            }
        }
    }

    fn norm_of(&self, key: &BasisKey) -> i64 {
        match key {
            BasisKey::Wedge(ps) => ps
                .iter()
                .map(|p| self.letter_norms[(*p - 1) as usize])
                .product(),
            BasisKey::Spin(_) => 1,
        }
    }

    /// Generator action on a single letter of the vector representation.
    fn letter_action(&self, gen: Gen, i: usize, l: Letter) -> Option<(Letter, i64)> {
        let r = self.group.rank();
        let fam = self.group.family();
        match (gen, fam) {
            (Gen::F, Family::A) => match l {
                Letter::Pos(j) if j == i => Some((Letter::Pos(i + 1), 1)),
                _ => None,
            },
            (Gen::E, Family::A) => match l {
                Letter::Pos(j) if j == i + 1 => Some((Letter::Pos(i), 1)),
                _ => None,
            },
            (Gen::F, Family::C) if i < r => match l {
                Letter::Pos(j) if j == i => Some((Letter::Pos(i + 1), 1)),
                Letter::Neg(j) if j == i + 1 => Some((Letter::Neg(i), 1)),
                _ => None,
            },
            (Gen::F, Family::C) => match l {
                Letter::Pos(j) if j == r => Some((Letter::Neg(r), 1)),
                _ => None,
            },
            (Gen::E, Family::C) if i < r => match l {
                Letter::Pos(j) if j == i + 1 => Some((Letter::Pos(i), 1)),
                Letter::Neg(j) if j == i => Some((Letter::Neg(i + 1), 1)),
                _ => None,
            },
            (Gen::E, Family::C) => match l {
                Letter::Neg(j) if j == r => Some((Letter::Pos(r), 1)),
                _ => None,
            },
            (Gen::F, Family::B) if i < r => match l {
                Letter::Pos(j) if j == i => Some((Letter::Pos(i + 1), 1)),
                Letter::Neg(j) if j == i + 1 => Some((Letter::Neg(i), 1)),
                _ => None,
            },
            (Gen::F, Family::B) => match l {
                Letter::Pos(j) if j == r => Some((Letter::Zero, 1)),
                Letter::Zero => Some((Letter::Neg(r), 2)),
                _ => None,
            },
            (Gen::E, Family::B) if i < r => match l {
                Letter::Pos(j) if j == i + 1 => Some((Letter::Pos(i), 1)),
                Letter::Neg(j) if j == i => Some((Letter::Neg(i + 1), 1)),
                _ => None,
            },
            (Gen::E, Family::B) => match l {
                Letter::Neg(j) if j == r => Some((Letter::Zero, 1)),
                Letter::Zero => Some((Letter::Pos(r), 2)),
                _ => None,
            },
            (Gen::F, Family::D) if i < r => match l {
                Letter::Pos(j) if j == i => Some((Letter::Pos(i + 1), 1)),
                Letter::Neg(j) if j == i + 1 => Some((Letter::Neg(i), 1)),
                _ => None,
            },
            (Gen::F, Family::D) => match l {
                Letter::Pos(j) if j == r => Some((Letter::Neg(r - 1), 1)),
                Letter::Pos(j) if j == r - 1 => Some((Letter::Neg(r), 1)),
                _ => None,
            },
            (Gen::E, Family::D) if i < r => match l {
                Letter::Pos(j) if j == i + 1 => Some((Letter::Pos(i), 1)),
                Letter::Neg(j) if j == i => Some((Letter::Neg(i + 1), 1)),
                _ => None,
            },
            (Gen::E, Family::D) => match l {
                Letter::Neg(j) if j == r => Some((Letter::Pos(r - 1), 1)),
                Letter::Neg(j) if j == r - 1 => Some((Letter::Pos(r), 1)),
                _ => None,
            },
        }
    }

    /// Exact generator action on a basis vector.
    fn act_gen(&self, gen: Gen, i: usize, key: &BasisKey) -> Vec<(BasisKey, i64)> {
        match key {
            BasisKey::Wedge(ps) => {
                let mut out = Vec::new();
                for (slot, p) in ps.iter().enumerate() {
                    let letter = self.letter_at(*p);
                    if let Some((target, c)) = self.letter_action(gen, i, letter) {
                        let q = self.position_of(target);
                        if ps.contains(&q) {
                            continue; // repeated factor, wedge vanishes
                        }
                        let mut rest: Vec<u8> = ps.clone();
                        rest.remove(slot);
                        let insert_at = rest.partition_point(|&x| x < q);
                        rest.insert(insert_at, q);
                        let swaps = (slot as i64 - insert_at as i64).unsigned_abs();
                        let sign = if swaps % 2 == 0 { 1 } else { -1 };
                        out.push((BasisKey::Wedge(rest), c * sign));
                    }
                }
                out
            }
            BasisKey::Spin(signs) => {
                let r = self.group.rank();
                let fam = self.group.family();
                let flip = |signs: &Vec<i8>, a: usize, b: usize| {
                    let mut s = signs.clone();
                    s[a] = -s[a];
                    if b != a {
                        s[b] = -s[b];
                    }
                    s
                };
                let hit = match (gen, fam, i < r) {
                    (Gen::F, _, true) => (signs[i - 1] == 1 && signs[i] == -1)
                        .then(|| flip(signs, i - 1, i)),
                    (Gen::E, _, true) => (signs[i - 1] == -1 && signs[i] == 1)
                        .then(|| flip(signs, i - 1, i)),
                    (Gen::F, Family::B, false) => {
                        (signs[r - 1] == 1).then(|| flip(signs, r - 1, r - 1))
                    }
                    (Gen::E, Family::B, false) => {
                        (signs[r - 1] == -1).then(|| flip(signs, r - 1, r - 1))
                    }
                    (Gen::F, Family::D, false) => (signs[r - 2] == 1 && signs[r - 1] == 1)
                        .then(|| flip(signs, r - 2, r - 1)),
                    (Gen::E, Family::D, false) => (signs[r - 2] == -1 && signs[r - 1] == -1)
                        .then(|| flip(signs, r - 2, r - 1)),
                    _ => unreachable!(),
                };
                hit.map(|s| vec![(BasisKey::Spin(s), 1)]).unwrap_or_default()
            }
        }
    }

    pub fn act_f(&self, i: usize, key: &BasisKey) -> RepVector {
        self.act_to_vector(Gen::F, i, key)
    }

    pub fn act_e(&self, i: usize, key: &BasisKey) -> RepVector {
        self.act_to_vector(Gen::E, i, key)
    }

    fn act_to_vector(&self, gen: Gen, i: usize, key: &BasisKey) -> RepVector {
        let mut out = RepVector::zero();
        for (k, c) in self.act_gen(gen, i, key) {
            out.add_term(k, &LaurentPoly::constant(c));
        }
        out
    }

    fn apply_gen(&self, gen: Gen, i: usize, v: &RepVector) -> RepVector {
        let mut out = RepVector::zero();
        for (key, p) in v.iter() {
            for (k, c) in self.act_gen(gen, i, key) {
                out.add_term(k, &p.scale(&BigInt::from(c)));
            }
        }
        out
    }

    fn exp_gen(&self, gen: Gen, i: usize, t: &LaurentPoly, v: &RepVector) -> RepVector {
        let mut acc = v.clone();
        let mut term = v.clone();
        let mut k = 1i64;
        loop {
            term = self.apply_gen(gen, i, &term);
            if term.is_zero() {
                return acc;
            }
            term = term
                .div_int_exact(k)
                .expect("exponential series must stay integral");
            term = term.scale_poly(t);
            acc = acc.add(&term);
            k += 1;
        }
    }

    /// `x_i(t) = exp(t e_i)`; the series truncates exactly.
    pub fn x_op(&self, i: usize, t: &LaurentPoly, v: &RepVector) -> RepVector {
        self.exp_gen(Gen::E, i, t, v)
    }

    /// `y_i(t) = exp(t f_i)`.
    pub fn y_op(&self, i: usize, t: &LaurentPoly, v: &RepVector) -> RepVector {
        self.exp_gen(Gen::F, i, t, v)
    }

    /// `alpha_i^vee(t)`: scales each weight vector by `t^{wt(h_i)}`.
    pub fn alpha_check(&self, i: usize, t: &Monomial, v: &RepVector) -> RepVector {
        let mut out = RepVector::zero();
        for (key, p) in v.iter() {
            let e = self.weight_of(key).pairing(i);
            out.add_term(key.clone(), &p.mul_monomial(&t.powi(e as i32)));
        }
        out
    }

    /// `x_{-i}(t) = y_i(t) alpha_i^vee(t^{-1})` for an invertible monomial `t`.
    pub fn x_minus(&self, i: usize, t: &Monomial, v: &RepVector) -> RepVector {
        let scaled = self.alpha_check(i, &t.inv(), v);
        self.y_op(i, &LaurentPoly::from(t.clone()), &scaled)
    }

    /// The Weyl representative `sbar_i = x_i(-1) y_i(1) x_i(-1)`.
    pub fn sbar(&self, i: usize, v: &RepVector) -> RepVector {
        let minus_one = LaurentPoly::constant(-1);
        let one = LaurentPoly::one();
        let v = self.x_op(i, &minus_one, v);
        let v = self.y_op(i, &one, &v);
        self.x_op(i, &minus_one, &v)
    }

    /// `sbar_{i_1} ... sbar_{i_n}` applied to `v` (rightmost factor first).
    pub fn sbar_word(&self, word: &ReducedWord, v: &RepVector) -> RepVector {
        let mut out = v.clone();
        for &i in word.letters().iter().rev() {
            out = self.sbar(i, &out);
        }
        out
    }

    /// `x_{-i_1}(t_1) ... x_{-i_n}(t_n) v` (rightmost factor first).
    pub fn xl_apply(&self, letters: &[usize], vars: &[Monomial], v: &RepVector) -> RepVector {
        assert_eq!(letters.len(), vars.len());
        let mut out = v.clone();
        for (&i, t) in letters.iter().zip(vars.iter()).rev() {
            out = self.x_minus(i, t, &out);
        }
        out
    }

    /// The invariant bilinear form; diagonal on the canonical basis with
    /// the diagonal entries forced by `<f_i u, v> = <u, e_i v>` from the
    /// normalized highest vector.
    pub fn gram(&self, u: &RepVector, v: &RepVector) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (key, p) in u.iter() {
            let q = v.coeff(key);
            if q.is_zero() {
                continue;
            }
            let norm = LaurentPoly::constant(self.norm_of(key));
            out = out.add(&p.mul(&q).mul(&norm));
        }
        out
    }
}

/// Every fundamental realization defined for the group.
pub fn legal_modules(group: GroupType) -> Vec<Module> {
    let r = group.rank();
    let mut out = Vec::new();
    let wedge_max = match group.family() {
        Family::A | Family::C => r,
        Family::B => r - 1,
        Family::D => r - 2,
    };
    for d in 1..=wedge_max {
        out.push(Module::new(group, Realization::Wedge(d)).unwrap());
    }
    match group.family() {
        Family::B => out.push(Module::new(group, Realization::SpinB).unwrap()),
        Family::D => {
            out.push(Module::new(group, Realization::SpinDPlus).unwrap());
            out.push(Module::new(group, Realization::SpinDMinus).unwrap());
        }
        _ => {}
    }
    out
}

fn letter_table(group: GroupType) -> Vec<Letter> {
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

fn letter_weight(group: GroupType, l: Letter) -> Weight {
    let r = group.rank();
    let fam = group.family();
    let lam = |j: usize| -> Weight {
        if j == 0 || (fam == Family::A && j == r + 1) {
            Weight::zero(r)
        } else {
            Weight::fundamental(r, j)
        }
    };
    match (fam, l) {
        (Family::A, Letter::Pos(j)) => lam(j).sub(&lam(j - 1)),
        (Family::C, Letter::Pos(j)) => lam(j).sub(&lam(j - 1)),
        (Family::C, Letter::Neg(j)) => lam(j - 1).sub(&lam(j)),
        (Family::B, Letter::Pos(j)) if j < r => lam(j).sub(&lam(j - 1)),
        (Family::B, Letter::Pos(_)) => {
            let mut w = lam(r);
            w = w.add(&lam(r)).sub(&lam(r - 1));
            w
        }
        (Family::B, Letter::Zero) => Weight::zero(r),
        (Family::B, Letter::Neg(j)) if j < r => lam(j - 1).sub(&lam(j)),
        (Family::B, Letter::Neg(_)) => lam(r - 1).sub(&lam(r)).sub(&lam(r)),
        (Family::D, Letter::Pos(j)) if j == r - 1 => lam(r).add(&lam(r - 1)).sub(&lam(r - 2)),
        (Family::D, Letter::Pos(j)) => lam(j).sub(&lam(j - 1)),
        (Family::D, Letter::Neg(j)) if j == r - 1 => lam(r - 2).sub(&lam(r - 1)).sub(&lam(r)),
        (Family::D, Letter::Neg(j)) => lam(j - 1).sub(&lam(j)),
        _ => panic!("letter {l:?} not in J for {fam:?}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::i0;

    fn gt(f: Family, r: usize) -> GroupType {
        GroupType::new(f, r).unwrap()
    }

    fn pos_key(m: &Module, letters: &[Letter]) -> BasisKey {
        BasisKey::Wedge(letters.iter().map(|l| m.position_of(*l)).collect())
    }

    fn mono(s: &str) -> Monomial {
        let p: LaurentPoly = s.parse().unwrap();
        p.as_unit_monomial().unwrap().0
    }

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn b_vector_f_r_on_zero_vector() {
        let m = Module::vector(gt(Family::B, 3)).unwrap();
        let zero_key = pos_key(&m, &[Letter::Zero]);
        let image = m.act_f(3, &zero_key);
        let expect_key = pos_key(&m, &[Letter::Neg(3)]);
        assert_eq!(image.coeff(&expect_key), LaurentPoly::constant(2));
        assert_eq!(image.num_terms(), 1);
    }

    #[test]
    fn d_spin_f_r_flips_last_two_plusses() {
        let m = Module::new(gt(Family::D, 4), Realization::SpinDPlus).unwrap();
        let key = BasisKey::Spin(vec![1, -1, 1, 1]);
        let image = m.act_f(4, &key);
        let expect = BasisKey::Spin(vec![1, -1, -1, -1]);
        assert_eq!(image.coeff(&expect), LaurentPoly::one());
        assert_eq!(image.num_terms(), 1);
    }

    #[test]
    fn highest_vector_is_killed_by_e() {
        for group in [gt(Family::A, 3), gt(Family::B, 3), gt(Family::C, 2)] {
            let m = Module::vector(group).unwrap();
            let v1 = m.highest_key();
            assert!(m.act_e(1, &v1).is_zero());
        }
    }

    #[test]
    fn y_op_examples() {
        // C_2: y_1(t) v_1 = v_1 + t v_2
        let m = Module::vector(gt(Family::C, 2)).unwrap();
        let t = LaurentPoly::from(mono("Y[7,1]"));
        let v1 = m.highest_vector();
        let image = m.y_op(1, &t, &v1);
        assert_eq!(image.coeff(&pos_key(&m, &[Letter::Pos(1)])), LaurentPoly::one());
        assert_eq!(image.coeff(&pos_key(&m, &[Letter::Pos(2)])), t);
        assert_eq!(image.num_terms(), 2);

        // B_r: y_r(t) v_r = v_r + t v_0 + t^2 v_rbar
        let m = Module::vector(gt(Family::B, 3)).unwrap();
        let vr = RepVector::from_key(pos_key(&m, &[Letter::Pos(3)]));
        let image = m.y_op(3, &t, &vr);
        assert_eq!(image.coeff(&pos_key(&m, &[Letter::Pos(3)])), LaurentPoly::one());
        assert_eq!(image.coeff(&pos_key(&m, &[Letter::Zero])), t);
        assert_eq!(
            image.coeff(&pos_key(&m, &[Letter::Neg(3)])),
            t.mul(&t)
        );
    }

    #[test]
    fn alpha_check_scales_by_weight_pairing() {
        let m = Module::vector(gt(Family::A, 2)).unwrap();
        let t = mono("Y[7,1]");
        let image = m.alpha_check(1, &t, &m.highest_vector());
        assert_eq!(
            image.coeff(&pos_key(&m, &[Letter::Pos(1)])),
            LaurentPoly::from(t)
        );
    }

    #[test]
    fn x_minus_examples() {
        // A_r: x_{-1}(t) v_1 = t^{-1} v_1 + v_2
        let m = Module::vector(gt(Family::A, 2)).unwrap();
        let t = mono("Y[7,1]");
        let image = m.x_minus(1, &t, &m.highest_vector());
        assert_eq!(
            image.coeff(&pos_key(&m, &[Letter::Pos(1)])),
            LaurentPoly::from(t.inv())
        );
        assert_eq!(image.coeff(&pos_key(&m, &[Letter::Pos(2)])), LaurentPoly::one());

        // C_2: x_{-1}(Y[2,1]) v_1 = (1/Y[2,1]) v_1 + v_2
        let m = Module::vector(gt(Family::C, 2)).unwrap();
        let image = m.x_minus(1, &mono("Y[2,1]"), &m.highest_vector());
        assert_eq!(
            image.coeff(&pos_key(&m, &[Letter::Pos(1)])),
            poly("Y[2,1]^-1")
        );
        assert_eq!(image.coeff(&pos_key(&m, &[Letter::Pos(2)])), LaurentPoly::one());

        // neutral letter: wt(v)(h_i) = 0 and f_i v = 0 leaves v fixed
        let image = m.x_minus(2, &mono("Y[2,2]"), &m.highest_vector());
        assert_eq!(image, m.highest_vector());
    }

    #[test]
    fn sbar_examples() {
        let m = Module::vector(gt(Family::A, 2)).unwrap();
        let image = m.sbar(1, &m.highest_vector());
        assert_eq!(image, RepVector::from_key(pos_key(&m, &[Letter::Pos(2)])));

        // neutral: e_i v = f_i v = 0, wt(v)(h_i) = 0
        let image = m.sbar(2, &m.highest_vector());
        assert_eq!(image, m.highest_vector());

        // C_2 wedge: sbar_1 sbar_2 (v_1 ^ v_2) = v_2 ^ v_1bar
        let m = Module::new(gt(Family::C, 2), Realization::Wedge(2)).unwrap();
        let word = ReducedWord::new(gt(Family::C, 2), vec![1, 2]).unwrap();
        let image = m.sbar_word(&word, &m.highest_vector());
        let expect = pos_key(&m, &[Letter::Pos(2), Letter::Neg(1)]);
        assert_eq!(image, RepVector::from_key(expect));
    }

    #[test]
    fn gram_examples() {
        let m = Module::vector(gt(Family::B, 3)).unwrap();
        let v0 = RepVector::from_key(pos_key(&m, &[Letter::Zero]));
        assert_eq!(m.gram(&v0, &v0), LaurentPoly::constant(2));
        let v1 = m.highest_vector();
        assert_eq!(m.gram(&v1, &v1), LaurentPoly::one());

        let m = Module::new(gt(Family::C, 2), Realization::Wedge(2)).unwrap();
        let u = m.highest_vector();
        let w = RepVector::from_key(pos_key(&m, &[Letter::Pos(2), Letter::Neg(1)]));
        assert_eq!(m.gram(&u, &w), LaurentPoly::zero());
    }

    #[test]
    fn xl_apply_on_c2_vector_matches_hand_expansion() {
        // x^L over (1,2,1,2) with Y[1,1],Y[1,2],Y[2,1],Y[2,2] applied to v_1
        let g = gt(Family::C, 2);
        let m = Module::vector(g).unwrap();
        let letters = [1, 2, 1, 2];
        let vars = [mono("Y[1,1]"), mono("Y[1,2]"), mono("Y[2,1]"), mono("Y[2,2]")];
        let image = m.xl_apply(&letters, &vars, &m.highest_vector());
        assert_eq!(
            image.coeff(&pos_key(&m, &[Letter::Pos(1)])),
            poly("Y[1,1]^-1*Y[2,1]^-1")
        );
        assert_eq!(
            image.coeff(&pos_key(&m, &[Letter::Pos(2)])),
            poly("Y[2,1]^-1 + Y[1,1]*Y[1,2]^-1")
        );
        assert_eq!(
            image.coeff(&pos_key(&m, &[Letter::Neg(2)])),
            poly("Y[1,1]^-1")
        );
        assert_eq!(
            image.coeff(&pos_key(&m, &[Letter::Neg(1)])),
            LaurentPoly::one()
        );
        assert_eq!(image.num_terms(), 4);
    }

    #[test]
    fn d_row_block_action_on_small_letters() {
        // x^{(s)}_{-[1,r]} v_j = (Y[s,j-1]/Y[s,j]) v_j + v_{j+1} for j <= r-2
        let g = gt(Family::D, 4);
        let m = Module::vector(g).unwrap();
        let letters: Vec<usize> = (1..=4).collect();
        let s = 2;
        let vars: Vec<Monomial> = (1..=4).map(|i| mono(&format!("Y[{s},{i}]"))).collect();
        for j in 1..=2usize {
            let vj = RepVector::from_key(pos_key(&m, &[Letter::Pos(j)]));
            let image = m.xl_apply(&letters, &vars, &vj);
            let self_coeff = if j == 1 {
                poly(&format!("Y[{s},1]^-1"))
            } else {
                poly(&format!("Y[{s},{}]*Y[{s},{j}]^-1", j - 1))
            };
            assert_eq!(image.coeff(&pos_key(&m, &[Letter::Pos(j)])), self_coeff);
            assert_eq!(
                image.coeff(&pos_key(&m, &[Letter::Pos(j + 1)])),
                LaurentPoly::one()
            );
            assert_eq!(image.num_terms(), 2);
        }
    }

    #[test]
    fn serre_commutator_identity_all_modules() {
        for group in [
            gt(Family::A, 3),
            gt(Family::B, 3),
            gt(Family::C, 3),
            gt(Family::D, 4),
        ] {
            for module in legal_modules(group) {
                let r = group.rank();
                for key in module.basis() {
                    for i in 1..=r {
                        for j in 1..=r {
                            let ef = apply_to(&module, Gen::E, i, &module.act_f(j, &key));
                            let fe = apply_to(&module, Gen::F, j, &module.act_e(i, &key));
                            let mut comm = ef;
                            for (k, p) in fe.iter() {
                                comm.add_term(k.clone(), &p.neg());
                            }
                            let mut expect = RepVector::zero();
                            if i == j {
                                let h = module.weight_of(&key).pairing(i);
                                expect.add_term(key.clone(), &LaurentPoly::constant(h));
                            }
                            assert_eq!(comm, expect, "module {:?}", module.realization());
                        }
                    }
                }
            }
        }
    }

    fn apply_to(m: &Module, gen: Gen, i: usize, v: &RepVector) -> RepVector {
        m.apply_gen(gen, i, v)
    }

    #[test]
    fn gram_invariance_symbolically() {
        let t = mono("Y[9,1]");
        let tp = LaurentPoly::from(t);
        for group in [gt(Family::A, 2), gt(Family::B, 3), gt(Family::C, 2), gt(Family::D, 4)] {
            for module in legal_modules(group) {
                let basis = module.basis();
                for i in 1..=group.rank() {
                    for u in &basis {
                        let uv = RepVector::from_key(u.clone());
                        let yu = module.y_op(i, &tp, &uv);
                        for w in &basis {
                            let wv = RepVector::from_key(w.clone());
                            let xw = module.x_op(i, &tp, &wv);
                            assert_eq!(
                                module.gram(&yu, &wv),
                                module.gram(&uv, &xw),
                                "invariance fails at {:?} i={i}",
                                module.realization()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn weight_additivity_under_f() {
        for group in [gt(Family::B, 3), gt(Family::D, 4), gt(Family::C, 3)] {
            for module in legal_modules(group) {
                for key in module.basis() {
                    for i in 1..=group.rank() {
                        let image = module.act_f(i, &key);
                        for (k, _) in image.iter() {
                            let alpha: Vec<i64> = (1..=group.rank())
                                .map(|j| group.cartan_entry(j, i))
                                .collect();
                            let expect = Weight(
                                module
                                    .weight_of(&key)
                                    .0
                                    .iter()
                                    .zip(&alpha)
                                    .map(|(a, b)| a - b)
                                    .collect(),
                            );
                            assert_eq!(module.weight_of(k), expect);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn wedge_dimensions() {
        let m = Module::new(gt(Family::C, 2), Realization::Wedge(2)).unwrap();
        assert_eq!(m.basis().len(), 6);
        let m = Module::new(gt(Family::B, 3), Realization::SpinB).unwrap();
        assert_eq!(m.basis().len(), 8);
        let m = Module::new(gt(Family::D, 4), Realization::SpinDPlus).unwrap();
        assert_eq!(m.basis().len(), 8);
        for key in m.basis() {
            if let BasisKey::Spin(s) = key {
                assert_eq!(s.iter().product::<i8>(), 1);
            }
        }
    }

    #[test]
    fn sbar_word_reaches_extremal_wedges_type_d() {
        // u_{<=k}(v_1 ^ ... ^ v_d) for k in the (m-1)th cycle:
        // the pure wedge v_m ^ ... ^ v_{m+d-1} when d <= r-m, and
        // v_m ^ ... ^ v_{r-1} ^ v_{(d-r+m)bar} ^ ... ^ v_{1bar} otherwise
        let g = gt(Family::D, 4);
        let r = 4usize;
        for (m_cycles, d) in [(2usize, 1usize), (2, 2), (3, 1), (3, 2)] {
            let module = Module::new(g, Realization::Wedge(d)).unwrap();
            let k = (m_cycles - 2) * r + d;
            let full = i0(g);
            let prefix = full.u_leq(k as i64).unwrap();
            let image = module.sbar_word(&prefix, &module.highest_vector());
            let expect: Vec<Letter> = if d <= r - m_cycles {
                (m_cycles..m_cycles + d).map(Letter::Pos).collect()
            } else {
                (m_cycles..r)
                    .map(Letter::Pos)
                    .chain((1..=d + m_cycles - r).rev().map(Letter::Neg))
                    .collect()
            };
            assert_eq!(
                image,
                RepVector::from_key(pos_key(&module, &expect)),
                "m={m_cycles} d={d}"
            );
        }
    }

    #[test]
    fn illegal_modules_rejected() {
        assert!(Module::new(gt(Family::C, 2), Realization::SpinB).is_err());
        assert!(Module::new(gt(Family::B, 3), Realization::Wedge(3)).is_err());
        assert!(Module::new(gt(Family::D, 4), Realization::Wedge(3)).is_err());
        assert!(Module::fundamental(gt(Family::D, 4), 3).is_ok());
        assert!(Module::fundamental(gt(Family::B, 3), 3).is_ok());
    }
}
