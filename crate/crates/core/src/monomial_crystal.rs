//! The monomial model of crystals: weight, string statistics, Kashiwara
//! operators acting by `A[s,i]` multipliers, connected components, and
//! Demazure subsets generated along reduced words.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::laurent::Monomial;
use crate::root_data::{GroupType, ReducedWord, Weight};

pub const DEFAULT_VERTEX_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CrystalError {
    #[error("closure exceeded the vertex cap of {0}")]
    VertexCap(usize),
    #[error("seed monomial is not extremal: {stat}_{i} = {value} != 0 for {monomial}")]
    SeedNotExtremal {
        stat: &'static str,
        i: usize,
        value: i64,
        monomial: String,
    },
    #[error("word {0} is not reduced")]
    NotReduced(String),
    #[error("inverse-consistency violation: {0}")]
    Collision(String),
}

/// A Laurent monomial carrying its group context, viewed as a crystal
/// element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CrystalMonomial {
    group: GroupType,
    monomial: Monomial,
}

impl CrystalMonomial {
    pub fn new(group: GroupType, monomial: Monomial) -> Self {
        debug_assert!(monomial
            .iter()
            .all(|(v, _)| v.col >= 1 && v.col <= group.rank() as i32));
        CrystalMonomial { group, monomial }
    }

    /// The generator `Y[s,i]`.
    pub fn generator(group: GroupType, s: i32, i: usize) -> Self {
        CrystalMonomial::new(group, Monomial::var(s, i as i32))
    }

    pub fn monomial(&self) -> &Monomial {
        &self.monomial
    }

    pub fn group(&self) -> GroupType {
        self.group
    }

    pub fn weight(&self) -> Weight {
        let rank = self.group.rank();
        let mut coords = vec![0i64; rank];
        for (v, e) in self.monomial.iter() {
            coords[(v.col - 1) as usize] += e as i64;
        }
        Weight(coords)
    }

    /// `phi_i`: the maximum over `s` of the partial sums of the color-`i`
    /// exponents up to row `s` (the empty sum 0 included).
    pub fn phi(&self, i: usize) -> i64 {
        let mut best = 0i64;
        let mut acc = 0i64;
        for (_, e) in self.monomial.column_profile(i as i32) {
            acc += e as i64;
            best = best.max(acc);
        }
        best
    }

    pub fn eps(&self, i: usize) -> i64 {
        self.phi(i) - self.weight().pairing(i)
    }

    /// Row achieving `phi_i` first (the minimal achieving index).
    fn n_f(&self, i: usize) -> i32 {
        let phi = self.phi(i);
        debug_assert!(phi > 0);
        let mut acc = 0i64;
        for (row, e) in self.monomial.column_profile(i as i32) {
            acc += e as i64;
            if acc == phi {
                return row;
            }
        }
        unreachable!("phi > 0 must be attained at a support row");
    }

    /// Largest row index whose partial sum still equals `phi_i`; finite
    /// exactly when `eps_i > 0`.
    fn n_e(&self, i: usize) -> i32 {
        let phi = self.phi(i);
        let profile = self.monomial.column_profile(i as i32);
        let mut acc = 0i64;
        let mut best: Option<i32> = if phi == 0 {
            Some(profile.first().map(|&(r, _)| r - 1).unwrap_or(0))
        } else {
            None
        };
        for (idx, &(row, e)) in profile.iter().enumerate() {
            acc += e as i64;
            if acc == phi {
                let next = profile.get(idx + 1).map(|&(r, _)| r - 1);
                // the partial sum stays at phi on [row, next_row - 1]
                best = Some(next.unwrap_or(row));
            }
        }
        best.expect("eps > 0 guarantees an achieving interval")
    }

    pub fn f_tilde(&self, i: usize) -> Option<CrystalMonomial> {
        if self.phi(i) <= 0 {
            return None;
        }
        let n = self.n_f(i);
        let a = a_var(self.group, n, i);
        Some(CrystalMonomial::new(
            self.group,
            self.monomial.mul(&a.inv()),
        ))
    }

    pub fn e_tilde(&self, i: usize) -> Option<CrystalMonomial> {
        if self.eps(i) <= 0 {
            return None;
        }
        let n = self.n_e(i);
        let a = a_var(self.group, n, i);
        Some(CrystalMonomial::new(self.group, self.monomial.mul(&a)))
    }

    pub fn is_lowest(&self) -> bool {
        (1..=self.group.rank()).all(|i| self.phi(i) == 0)
    }

    pub fn is_highest(&self) -> bool {
        (1..=self.group.rank()).all(|i| self.eps(i) == 0)
    }
}

/// `A[s,i] = Y[s,i] Y[s+1,i] prod_{j != i} Y[s + p_{ji}, j]^{a_{ji}}`
/// with `p_{ji} = 1` exactly when `j < i`.
pub fn a_var(group: GroupType, s: i32, i: usize) -> Monomial {
    let rank = group.rank();
    let mut m = Monomial::var(s, i as i32).mul(&Monomial::var(s + 1, i as i32));
    for j in 1..=rank {
        if j == i {
            continue;
        }
        let a = group.cartan_entry(j, i);
        if a != 0 {
            let row = if j < i { s + 1 } else { s };
            m = m.mul(&Monomial::var(row, j as i32).powi(a as i32));
        }
    }
    m
}

/// The closure of a seed under both Kashiwara operators, with the colored
/// `f`-edges.
#[derive(Debug, Clone)]
pub struct CrystalGraph {
    pub group: GroupType,
    pub vertices: Vec<Monomial>,
    /// `(source, color, target)` with `f_tilde_color(source) = target`.
    pub edges: Vec<(Monomial, usize, Monomial)>,
    /// Inverse-consistency violations seen during closure (never merged
    /// silently; empty for every valid seed).
    pub anomalies: Vec<String>,
}

impl CrystalGraph {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        for v in &self.vertices {
            out.push_str(&format!("  \"{v}\";\n"));
        }
        for (src, i, dst) in &self.edges {
            out.push_str(&format!("  \"{src}\" -> \"{dst}\" [label=\"i={i}\"];\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Breadth-first closure of `seed` under all `f_tilde` and `e_tilde`.
pub fn component(seed: &CrystalMonomial, cap: usize) -> Result<CrystalGraph, CrystalError> {
    let group = seed.group();
    let rank = group.rank();
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let mut edges: BTreeSet<(Monomial, usize, Monomial)> = BTreeSet::new();
    let mut anomalies = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(seed.monomial().clone());
    queue.push_back(seed.clone());
    while let Some(y) = queue.pop_front() {
        for i in 1..=rank {
            if let Some(z) = y.f_tilde(i) {
                match z.e_tilde(i) {
                    Some(back) if back.monomial() == y.monomial() => {}
                    other => anomalies.push(format!(
                        "e_{i} f_{i} {} = {:?} != original",
                        y.monomial(),
                        other.map(|b| b.monomial().to_string())
                    )),
                }
                edges.insert((y.monomial().clone(), i, z.monomial().clone()));
                if seen.insert(z.monomial().clone()) {
                    if seen.len() > cap {
                        return Err(CrystalError::VertexCap(cap));
                    }
                    queue.push_back(z);
                }
            }
            if let Some(z) = y.e_tilde(i) {
                match z.f_tilde(i) {
                    Some(back) if back.monomial() == y.monomial() => {}
                    other => anomalies.push(format!(
                        "f_{i} e_{i} {} = {:?} != original",
                        y.monomial(),
                        other.map(|b| b.monomial().to_string())
                    )),
                }
                edges.insert((z.monomial().clone(), i, y.monomial().clone()));
                if seen.insert(z.monomial().clone()) {
                    if seen.len() > cap {
                        return Err(CrystalError::VertexCap(cap));
                    }
                    queue.push_back(z);
                }
            }
        }
    }
    Ok(CrystalGraph {
        group,
        vertices: seen.into_iter().collect(),
        edges: edges.into_iter().collect(),
        anomalies,
    })
}

/// Demazure subset computed by folding string closures over the reversed
/// word, so the exponent of the word's last letter is applied first.
fn demazure_closure(
    seed: &CrystalMonomial,
    word: &ReducedWord,
    lower: bool,
) -> Result<BTreeSet<Monomial>, CrystalError> {
    if !word.is_reduced() {
        return Err(CrystalError::NotReduced(word.to_string()));
    }
    let group = seed.group();
    for i in 1..=group.rank() {
        let (stat, value) = if lower {
            ("phi", seed.phi(i))
        } else {
            ("eps", seed.eps(i))
        };
        if value != 0 {
            return Err(CrystalError::SeedNotExtremal {
                stat,
                i,
                value,
                monomial: seed.monomial().to_string(),
            });
        }
    }
    let mut set: BTreeMap<Monomial, CrystalMonomial> = BTreeMap::new();
    set.insert(seed.monomial().clone(), seed.clone());
    for &i in word.letters().iter().rev() {
        let mut grown = set.clone();
        for y in set.values() {
            let mut cur = y.clone();
            loop {
                let next = if lower { cur.e_tilde(i) } else { cur.f_tilde(i) };
                match next {
                    Some(z) => {
                        let back = if lower { z.f_tilde(i) } else { z.e_tilde(i) };
                        match back {
                            Some(b) if b.monomial() == cur.monomial() => {}
                            other => {
                                return Err(CrystalError::Collision(format!(
                                    "string through {} at color {i} returned {:?}",
                                    cur.monomial(),
                                    other.map(|b| b.monomial().to_string())
                                )))
                            }
                        }
                        grown.insert(z.monomial().clone(), z.clone());
                        cur = z;
                    }
                    None => break,
                }
            }
        }
        set = grown;
    }
    Ok(set.into_keys().collect())
}

/// Lower Demazure subset from a lowest-weight monomial: all monomials
/// reachable by iterated raising strings along the reduced word.
pub fn lower_demazure(
    seed: &CrystalMonomial,
    word: &ReducedWord,
) -> Result<BTreeSet<Monomial>, CrystalError> {
    demazure_closure(seed, word, true)
}

/// Upper Demazure subset from a highest-weight monomial.
pub fn upper_demazure(
    seed: &CrystalMonomial,
    word: &ReducedWord,
) -> Result<BTreeSet<Monomial>, CrystalError> {
    demazure_closure(seed, word, false)
}
