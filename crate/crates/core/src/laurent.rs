//! Exact integer-coefficient Laurent polynomials in the doubly indexed
//! variables `Y[s,i]`.
//!
//! The column index `i` of a variable runs over `[1, r]` for a fixed rank
//! `r`; the indices `0` and `r+1` are sentinels identified with the
//! constant `1` at construction time, so table-driven formulas never need
//! to special-case boundary columns.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("negative power of a polynomial with {terms} terms (only unit monomials are invertible)")]
    NegativePower { terms: usize },
    #[error("evaluation point is missing variable Y[{0},{1}]")]
    MissingAssignment(i32, i32),
    #[error("evaluation point assigns zero to Y[{0},{1}]")]
    ZeroAssignment(i32, i32),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("variable column {col} outside [0, {max}]")]
    ColumnRange { col: i32, max: i32 },
}

/// Index of a variable `Y[row, col]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarIndex {
    pub row: i32,
    pub col: i32,
}

impl VarIndex {
    pub fn new(row: i32, col: i32) -> Self {
        VarIndex { row, col }
    }
}

impl fmt::Display for VarIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y[{},{}]", self.row, self.col)
    }
}

/// A Laurent monomial: finite map from variables to nonzero exponents.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: BTreeMap<VarIndex, i32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// The bare variable `Y[row, col]`, with no sentinel logic.
    pub fn var(row: i32, col: i32) -> Self {
        let mut exps = BTreeMap::new();
        exps.insert(VarIndex::new(row, col), 1);
        Monomial { exps }
    }

    /// The variable `Y[row, col]` in rank-`rank` context: columns `0` and
    /// `rank+1` are identified with the constant `1`.
    pub fn y(rank: usize, row: i32, col: i32) -> Self {
        let r = rank as i32;
        assert!(
            (0..=r + 1).contains(&col),
            "column {col} outside [0, {}]",
            r + 1
        );
        if col == 0 || col == r + 1 {
            Monomial::one()
        } else {
            Monomial::var(row, col)
        }
    }

    pub fn exponent(&self, v: VarIndex) -> i32 {
        self.exps.get(&v).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarIndex, i32)> + '_ {
        self.exps.iter().map(|(v, e)| (*v, *e))
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (v, e) in rhs.iter() {
            let entry = exps.entry(v).or_insert(0);
            *entry += e;
            if *entry == 0 {
                exps.remove(&v);
            }
        }
        Monomial { exps }
    }

    pub fn inv(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|(v, e)| (*v, -e)).collect(),
        }
    }

    pub fn powi(&self, n: i32) -> Monomial {
        if n == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: self.exps.iter().map(|(v, e)| (*v, e * n)).collect(),
        }
    }

    /// Exponents of color `col` keyed by row, ascending.
    pub fn column_profile(&self, col: i32) -> Vec<(i32, i32)> {
        self.iter()
            .filter(|(v, _)| v.col == col)
            .map(|(v, e)| (v.row, e))
            .collect()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in self.iter() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{v}")?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A Laurent polynomial with exact `BigInt` coefficients, stored with
/// canonically ordered terms.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(Monomial::one(), BigInt::from(c));
        }
        LaurentPoly { terms }
    }

    pub fn term(m: Monomial, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.terms.keys()
    }

    /// The single monomial of a one-term polynomial with coefficient `±1`.
    pub fn as_unit_monomial(&self) -> Option<(Monomial, BigInt)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        if c.magnitude().is_one() {
            Some((m.clone(), c.clone()))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn add(&self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in rhs.iter() {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m1, c1) in self.iter() {
            for (m2, c2) in rhs.iter() {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// `self^n`; negative `n` requires a single term with coefficient `±1`.
    pub fn pow(&self, n: i32) -> Result<LaurentPoly, LaurentError> {
        if n >= 0 {
            let mut out = LaurentPoly::one();
            for _ in 0..n {
                out = out.mul(self);
            }
            return Ok(out);
        }
        match self.as_unit_monomial() {
            Some((m, c)) => {
                let coeff = if n % 2 == 0 { BigInt::one() } else { c };
                Ok(LaurentPoly::term(m.powi(n), coeff))
            }
            None => Err(LaurentError::NegativePower {
                terms: self.num_terms(),
            }),
        }
    }

    /// Exact division of every coefficient by `k`; `None` if any fails.
    pub fn div_int_exact(&self, k: i64) -> Option<LaurentPoly> {
        assert!(k != 0);
        let kk = BigInt::from(k);
        let mut terms = BTreeMap::new();
        for (m, c) in self.iter() {
            if (c % &kk).is_zero() {
                terms.insert(m.clone(), c / &kk);
            } else {
                return None;
            }
        }
        Some(LaurentPoly { terms })
    }

    /// Monomial content: per-variable minimum exponent over all terms.
    fn content_monomial(&self) -> Monomial {
        let mut mins: BTreeMap<VarIndex, i32> = BTreeMap::new();
        for (idx, m) in self.support().enumerate() {
            let mut seen: BTreeMap<VarIndex, i32> = m.iter().collect();
            if idx == 0 {
                mins = seen;
            } else {
                for (v, e) in mins.clone() {
                    let other = seen.remove(&v).unwrap_or(0);
                    let new = e.min(other);
                    if new == 0 {
                        mins.remove(&v);
                    } else {
                        mins.insert(v, new);
                    }
                }
                for (v, e) in seen {
                    if e < 0 {
                        mins.insert(v, e);
                    }
                }
            }
        }
        let mut out = Monomial::one();
        for (v, e) in mins {
            out = out.mul(&Monomial::var(v.row, v.col).powi(e));
        }
        out
    }

    /// Exact single-divisor division over `Z[Y^{±1}]`; `None` if `rhs`
    /// does not divide `self` exactly.
    ///
    /// Both operands are first divided by their monomial content, which
    /// reduces to classical division of ordinary polynomials over a dense
    /// exponent grid where the lex lead-term order is a well order.
    pub fn div_exact(&self, rhs: &LaurentPoly) -> Option<LaurentPoly> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let num_content = self.content_monomial();
        let den_content = rhs.content_monomial();
        let num = self.mul_monomial(&num_content.inv());
        let den = rhs.mul_monomial(&den_content.inv());
        let mut vars: Vec<VarIndex> = Vec::new();
        for m in num.support().chain(den.support()) {
            for (v, _) in m.iter() {
                if !vars.contains(&v) {
                    vars.push(v);
                }
            }
        }
        vars.sort();
        let dense = |m: &Monomial| -> Vec<i32> {
            vars.iter().map(|v| m.exponent(*v)).collect()
        };
        let num: BTreeMap<Vec<i32>, BigInt> =
            num.iter().map(|(m, c)| (dense(m), c.clone())).collect();
        let den: BTreeMap<Vec<i32>, BigInt> =
            den.iter().map(|(m, c)| (dense(m), c.clone())).collect();
        let (dm, dc) = {
            let (m, c) = den.iter().next_back().unwrap();
            (m.clone(), c.clone())
        };
        let mut rem = num;
        let mut quot: Vec<(Vec<i32>, BigInt)> = Vec::new();
        while let Some((rm, rc)) = rem.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            if !(&rc % &dc).is_zero() {
                return None;
            }
            // lead monomials must divide componentwise in the
            // content-free polynomial ring
            if rm.iter().zip(&dm).any(|(a, b)| a < b) {
                return None;
            }
            let qc = &rc / &dc;
            let qm: Vec<i32> = rm.iter().zip(&dm).map(|(a, b)| a - b).collect();
            for (m, c) in &den {
                let shifted: Vec<i32> = m.iter().zip(&qm).map(|(a, b)| a + b).collect();
                let entry = rem.entry(shifted.clone()).or_insert_with(BigInt::zero);
                *entry -= c * &qc;
                if entry.is_zero() {
                    rem.remove(&shifted);
                }
            }
            quot.push((qm, qc));
        }
        let shift = num_content.mul(&den_content.inv());
        let mut out = LaurentPoly::zero();
        for (qm, qc) in quot {
            let mut m = shift.clone();
            for (v, e) in vars.iter().zip(qm) {
                m = m.mul(&Monomial::var(v.row, v.col).powi(e));
            }
            out.add_term(m, &qc);
        }
        Some(out)
    }

    /// Exact evaluation at a point assigning a nonzero rational to every
    /// variable that occurs.
    pub fn eval(
        &self,
        point: &BTreeMap<VarIndex, BigRational>,
    ) -> Result<BigRational, LaurentError> {
        let mut total = BigRational::zero();
        for (m, c) in self.iter() {
            let mut val = BigRational::from(c.clone());
            for (v, e) in m.iter() {
                let x = point
                    .get(&v)
                    .ok_or(LaurentError::MissingAssignment(v.row, v.col))?;
                if x.is_zero() {
                    return Err(LaurentError::ZeroAssignment(v.row, v.col));
                }
                val *= pow_rational(x, e);
            }
            total += val;
        }
        Ok(total)
    }

    /// Evaluation with every variable set to 1.
    pub fn eval_all_ones(&self) -> BigInt {
        let mut total = BigInt::zero();
        for (_, c) in self.iter() {
            total += c;
        }
        total
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .iter()
            .map(|(m, c)| {
                let vars: Vec<serde_json::Value> = m
                    .iter()
                    .map(|(v, e)| serde_json::json!([v.row, v.col, e]))
                    .collect();
                serde_json::json!({ "coeff": c.to_string(), "vars": vars })
            })
            .collect();
        serde_json::json!({ "terms": terms })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<LaurentPoly, LaurentError> {
        let terms = v
            .get("terms")
            .and_then(|t| t.as_array())
            .ok_or_else(|| LaurentError::Parse("missing terms array".into()))?;
        let mut out = LaurentPoly::zero();
        for t in terms {
            let coeff = t
                .get("coeff")
                .and_then(|c| c.as_str())
                .ok_or_else(|| LaurentError::Parse("missing coeff".into()))?;
            let coeff = BigInt::from_str(coeff)
                .map_err(|e| LaurentError::Parse(format!("bad coeff: {e}")))?;
            let vars = t
                .get("vars")
                .and_then(|v| v.as_array())
                .ok_or_else(|| LaurentError::Parse("missing vars".into()))?;
            let mut m = Monomial::one();
            for triple in vars {
                let a = triple
                    .as_array()
                    .filter(|a| a.len() == 3)
                    .ok_or_else(|| LaurentError::Parse("var triple".into()))?;
                let (s, i, e) = (
                    a[0].as_i64().ok_or_else(|| LaurentError::Parse("row".into()))? as i32,
                    a[1].as_i64().ok_or_else(|| LaurentError::Parse("col".into()))? as i32,
                    a[2].as_i64().ok_or_else(|| LaurentError::Parse("exp".into()))? as i32,
                );
                m = m.mul(&Monomial::var(s, i).powi(e));
            }
            out.add_term(m, &coeff);
        }
        Ok(out)
    }
}

fn pow_rational(x: &BigRational, e: i32) -> BigRational {
    let mut out = BigRational::one();
    let b = if e >= 0 { x.clone() } else { x.recip() };
    for _ in 0..e.unsigned_abs() {
        out *= &b;
    }
    out
}

impl From<Monomial> for LaurentPoly {
    fn from(m: Monomial) -> Self {
        LaurentPoly::term(m, BigInt::one())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.iter() {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            let a = c.magnitude();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = LaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}

/// Parses the canonical text form, e.g. `Y[1,1]^2*Y[1,2]^-1 + 2*Y[2,1]`.
fn parse_poly(s: &str) -> Result<LaurentPoly, LaurentError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(LaurentError::Parse("empty input".into()));
    }
    let mut out = LaurentPoly::zero();
    let mut rest = s;
    let mut sign = BigInt::one();
    // leading sign
    if let Some(r) = rest.strip_prefix('-') {
        sign = -sign;
        rest = r.trim_start();
    }
    loop {
        let (term_str, tail) = split_term(rest);
        let (m, c) = parse_term(term_str.trim())?;
        out.add_term(m, &(c * &sign));
        match tail {
            None => break,
            Some((next_sign, tail)) => {
                sign = if next_sign == '-' {
                    -BigInt::one()
                } else {
                    BigInt::one()
                };
                rest = tail.trim_start();
            }
        }
    }
    Ok(out)
}

/// Splits at the first top-level ` + ` or ` - ` separator.
fn split_term(s: &str) -> (&str, Option<(char, &str)>) {
    let bytes = s.as_bytes();
    for i in 0..bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-')
            && i > 0
            && bytes[i - 1] == b' '
            && i + 1 < bytes.len()
            && bytes[i + 1] == b' '
        {
            return (&s[..i - 1], Some((bytes[i] as char, &s[i + 1..])));
        }
    }
    (s, None)
}

fn parse_term(s: &str) -> Result<(Monomial, BigInt), LaurentError> {
    if s.is_empty() {
        return Err(LaurentError::Parse("empty term".into()));
    }
    let mut coeff = BigInt::one();
    let mut m = Monomial::one();
    for factor in s.split('*') {
        let factor = factor.trim();
        if let Some(rest) = factor.strip_prefix("Y[") {
            let (inside, tail) = rest
                .split_once(']')
                .ok_or_else(|| LaurentError::Parse(format!("unclosed Y[ in {factor:?}")))?;
            let (row, col) = inside
                .split_once(',')
                .ok_or_else(|| LaurentError::Parse(format!("bad index in {factor:?}")))?;
            let row: i32 = row
                .trim()
                .parse()
                .map_err(|_| LaurentError::Parse(format!("bad row in {factor:?}")))?;
            let col: i32 = col
                .trim()
                .parse()
                .map_err(|_| LaurentError::Parse(format!("bad col in {factor:?}")))?;
            let exp: i32 = match tail.strip_prefix('^') {
                Some(e) => e
                    .parse()
                    .map_err(|_| LaurentError::Parse(format!("bad exponent in {factor:?}")))?,
                None if tail.is_empty() => 1,
                _ => return Err(LaurentError::Parse(format!("trailing junk in {factor:?}"))),
            };
            m = m.mul(&Monomial::var(row, col).powi(exp));
        } else {
            let c = BigInt::from_str(factor)
                .map_err(|_| LaurentError::Parse(format!("bad factor {factor:?}")))?;
            coeff *= c;
        }
    }
    Ok((m, coeff))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn y(s: i32, i: i32) -> LaurentPoly {
        Monomial::var(s, i).into()
    }

    #[test]
    fn monomial_inverse_cancels() {
        let a = Monomial::var(1, 1);
        assert!(a.mul(&a.inv()).is_one());
        let p = y(1, 1).mul(&LaurentPoly::from(Monomial::var(1, 1).inv()));
        assert_eq!(p, LaurentPoly::one());
    }

    #[test]
    fn addition_cancels_to_zero() {
        let m = Monomial::var(1, 1).mul(&Monomial::var(2, 1).inv());
        let p = LaurentPoly::term(m.clone(), BigInt::from(2));
        let q = LaurentPoly::term(m, BigInt::from(-2));
        assert!(p.add(&q).is_zero());
    }

    #[test]
    fn sentinel_columns_are_one() {
        assert!(Monomial::y(2, 1, 0).is_one());
        assert!(Monomial::y(2, 1, 3).is_one());
        assert!(!Monomial::y(2, 1, 2).is_one());
    }

    #[test]
    fn first_term_of_c2_minor_example() {
        // Y[1,1]^2 / Y[1,2]
        let m = Monomial::var(1, 1).powi(2).mul(&Monomial::var(1, 2).inv());
        assert_eq!(m.to_string(), "Y[1,1]^2*Y[1,2]^-1");
        assert_eq!(m.exponent(VarIndex::new(1, 1)), 2);
        assert_eq!(m.exponent(VarIndex::new(1, 2)), -1);
    }

    #[test]
    fn negative_power_requires_unit_monomial() {
        let p = y(1, 1).add(&y(1, 2));
        assert!(matches!(
            p.pow(-1),
            Err(LaurentError::NegativePower { terms: 2 })
        ));
        let q = y(1, 1).pow(-2).unwrap();
        assert_eq!(q, Monomial::var(1, 1).powi(-2).into());
    }

    #[test]
    fn eval_examples() {
        let one = LaurentPoly::one();
        assert_eq!(one.eval(&BTreeMap::new()).unwrap(), BigRational::one());

        // Y[1,1]^2 / Y[1,2] at Y[1,1]=2, Y[1,2]=4 -> 1
        let m = Monomial::var(1, 1).powi(2).mul(&Monomial::var(1, 2).inv());
        let p = LaurentPoly::from(m);
        let mut pt = BTreeMap::new();
        pt.insert(VarIndex::new(1, 1), BigRational::from(BigInt::from(2)));
        pt.insert(VarIndex::new(1, 2), BigRational::from(BigInt::from(4)));
        assert_eq!(p.eval(&pt).unwrap(), BigRational::one());

        let q = y(9, 9);
        assert!(matches!(
            q.eval(&pt),
            Err(LaurentError::MissingAssignment(9, 9))
        ));
        pt.insert(VarIndex::new(9, 9), BigRational::zero());
        assert!(matches!(q.eval(&pt), Err(LaurentError::ZeroAssignment(9, 9))));
    }

    #[test]
    fn json_round_trip() {
        let p = y(1, 1)
            .mul(&y(2, 1).pow(-1).unwrap())
            .scale(&BigInt::from(2))
            .add(&LaurentPoly::constant(-3));
        let back = LaurentPoly::from_json(&p.to_json()).unwrap();
        assert_eq!(p, back);
    }

    #[test]
    fn display_format_is_pinned() {
        let p = y(1, 1)
            .mul(&y(2, 1).pow(-1).unwrap())
            .scale(&BigInt::from(2))
            .add(&LaurentPoly::constant(1));
        assert_eq!(p.to_string(), "1 + 2*Y[1,1]*Y[2,1]^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(
            y(1, 1).sub(&y(1, 2)).to_string(),
            "Y[1,1] - Y[1,2]"
        );
    }

    #[test]
    fn div_exact_detects_non_divisibility() {
        let a = y(1, 1).add(&y(1, 2));
        let b = y(1, 1).add(&LaurentPoly::constant(1));
        let prod = a.mul(&b);
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert!(a.div_exact(&b).is_none());
        assert!(y(1, 1).scale(&BigInt::from(3)).div_exact(&y(1, 1).scale(&BigInt::from(2))).is_none());
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        let term = (0..3i32, 1..3i32, -2..3i32, -4..5i64);
        proptest::collection::vec(term, 0..5).prop_map(|ts| {
            let mut p = LaurentPoly::zero();
            for (s, i, e, c) in ts {
                p.add_term(Monomial::var(s, i).powi(e), &BigInt::from(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn eval_is_ring_hom(a in arb_poly(), b in arb_poly()) {
            let mut pt = BTreeMap::new();
            for s in 0..3 {
                for i in 1..3 {
                    pt.insert(VarIndex::new(s, i), BigRational::new(
                        BigInt::from((s * 7 + i * 3 + 2) as i64),
                        BigInt::from((s + 2 * i + 1) as i64),
                    ));
                }
            }
            let lhs = a.mul(&b).eval(&pt).unwrap();
            let rhs = a.eval(&pt).unwrap() * b.eval(&pt).unwrap();
            prop_assert_eq!(lhs, rhs);
            let lhs = a.add(&b).eval(&pt).unwrap();
            let rhs = a.eval(&pt).unwrap() + b.eval(&pt).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn print_parse_round_trip(a in arb_poly()) {
            let s = a.to_string();
            let back: LaurentPoly = s.parse().unwrap();
            prop_assert_eq!(a, back);
        }

        #[test]
        fn div_exact_inverts_mul(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let prod = a.mul(&b);
            prop_assert_eq!(prod.div_exact(&b).unwrap(), a);
        }
    }
}
