//! Cartan data for the classical families, weight arithmetic in the
//! fundamental-weight basis, Weyl-group words with root-counting length,
//! and the fixed cyclic reduced words used for left factors.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootDataError {
    #[error("rank {rank} is not allowed for family {family:?} (A/B/C need rank >= 2, D needs rank >= 3)")]
    InvalidRank { family: Family, rank: usize },
    #[error("letter {letter} outside [1, {rank}]")]
    LetterRange { letter: usize, rank: usize },
    #[error("index {k} outside [-1,-{rank}] U [1,{len}]")]
    IndexRange { k: i64, rank: usize, len: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A classical group type: family plus rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupType {
    family: Family,
    rank: usize,
}

impl GroupType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootDataError> {
        let min = match family {
            Family::D => 3,
            _ => 2,
        };
        if rank < min {
            return Err(RootDataError::InvalidRank { family, rank });
        }
        Ok(GroupType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Cartan matrix entry `a[i][j] = alpha_j(h_i)`, 1-based indices.
    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        let r = self.rank;
        debug_assert!(i >= 1 && i <= r && j >= 1 && j <= r);
        if i == j {
            return 2;
        }
        match self.family {
            Family::A => {
                if i.abs_diff(j) == 1 {
                    -1
                } else {
                    0
                }
            }
            Family::C => {
                if (i, j) == (r - 1, r) {
                    -2
                } else if i.abs_diff(j) == 1 {
                    -1
                } else {
                    0
                }
            }
            Family::B => {
                if (i, j) == (r, r - 1) {
                    -2
                } else if i.abs_diff(j) == 1 {
                    -1
                } else {
                    0
                }
            }
            Family::D => {
                if (i, j) == (r - 2, r) || (i, j) == (r, r - 2) {
                    -1
                } else if i.abs_diff(j) == 1 && (i, j) != (r - 1, r) && (i, j) != (r, r - 1) {
                    -1
                } else {
                    0
                }
            }
        }
    }

    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let r = self.rank;
        (1..=r)
            .map(|i| (1..=r).map(|j| self.cartan_entry(i, j)).collect())
            .collect()
    }

    /// Positive diagonal `d` with `d_i a_ij = d_j a_ji`.
    pub fn symmetrizers(&self) -> Vec<i64> {
        let r = self.rank;
        match self.family {
            Family::A | Family::D => vec![1; r],
            Family::C => {
                // alpha_r is the long root
                let mut d = vec![1; r];
                d[r - 1] = 2;
                d
            }
            Family::B => {
                // alpha_r is the short root
                let mut d = vec![2; r];
                d[r - 1] = 1;
                d
            }
        }
    }

    /// All positive roots, in simple-root coordinates.
    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        let r = self.rank;
        let mut seen: std::collections::BTreeSet<Vec<i64>> = std::collections::BTreeSet::new();
        let mut queue: Vec<Vec<i64>> = Vec::new();
        for i in 0..r {
            let mut root = vec![0i64; r];
            root[i] = 1;
            seen.insert(root.clone());
            queue.push(root);
        }
        while let Some(root) = queue.pop() {
            for i in 1..=r {
                let refl = self.reflect_root(i, &root);
                if refl.iter().all(|&c| c >= 0) && seen.insert(refl.clone()) {
                    queue.push(refl);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// `s_i` acting on a root in simple-root coordinates.
    pub fn reflect_root(&self, i: usize, root: &[i64]) -> Vec<i64> {
        let r = self.rank;
        let pairing: i64 = (1..=r).map(|j| self.cartan_entry(i, j) * root[j - 1]).sum();
        let mut out = root.to_vec();
        out[i - 1] -= pairing;
        out
    }

    /// Dimension of the fundamental representation `V(Lambda_d)`.
    pub fn fundamental_dim(&self, d: usize) -> u64 {
        let r = self.rank as u64;
        let d64 = d as u64;
        match self.family {
            Family::A => binomial(r + 1, d64),
            // symplectic wedge powers split off a contraction summand
            Family::C => {
                let lower = if d >= 2 { binomial(2 * r, d64 - 2) } else { 0 };
                binomial(2 * r, d64) - lower
            }
            Family::B => {
                if d == self.rank {
                    1 << r
                } else {
                    binomial(2 * r + 1, d64)
                }
            }
            Family::D => {
                if d + 1 >= self.rank {
                    1 << (r - 1)
                } else {
                    binomial(2 * r, d64)
                }
            }
        }
    }

    /// Lengths of the cycles making up the fixed longest word.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let r = self.rank;
        match self.family {
            Family::A => (0..r).map(|c| r - c).collect(),
            Family::B | Family::C => vec![r; r],
            Family::D => vec![r; r - 1],
        }
    }

    /// `(cycle, letter)` of the 1-based position `pos` in the fixed word.
    pub fn cycle_of_position(&self, pos: usize) -> Option<(usize, usize)> {
        let mut acc = 0usize;
        for (c, len) in self.cycle_lengths().into_iter().enumerate() {
            if pos <= acc + len {
                return Some((c + 1, pos - acc));
            }
            acc += len;
        }
        None
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out: u64 = 1;
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

/// A weight written in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = vec![0; rank];
        w[i - 1] = 1;
        Weight(w)
    }

    /// Pairing with the simple coroot `h_i`.
    pub fn pairing(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn add(&self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A word in the simple reflections; reducedness is checked lazily.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    group: GroupType,
    letters: Vec<usize>,
}

impl ReducedWord {
    pub fn new(group: GroupType, letters: Vec<usize>) -> Result<Self, RootDataError> {
        for &l in &letters {
            if l < 1 || l > group.rank() {
                return Err(RootDataError::LetterRange {
                    letter: l,
                    rank: group.rank(),
                });
            }
        }
        Ok(ReducedWord { group, letters })
    }

    pub fn empty(group: GroupType) -> Self {
        ReducedWord {
            group,
            letters: Vec::new(),
        }
    }

    pub fn group(&self) -> GroupType {
        self.group
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letter(&self, k: usize) -> usize {
        self.letters[k - 1]
    }

    /// Length of the Weyl element: positive roots sent to negative ones.
    pub fn weyl_length(&self) -> usize {
        self.group
            .positive_roots()
            .into_iter()
            .filter(|root| {
                let mut r = root.clone();
                for &i in self.letters.iter().rev() {
                    r = self.group.reflect_root(i, &r);
                }
                r.iter().all(|&c| c <= 0)
            })
            .count()
    }

    pub fn is_reduced(&self) -> bool {
        self.weyl_length() == self.letters.len()
    }

    /// Left action `s_{i_1} ... s_{i_n} . w` on a weight.
    pub fn apply(&self, w: &Weight) -> Weight {
        let mut out = w.clone();
        for &i in self.letters.iter().rev() {
            out = self.reflect_weight(i, &out);
        }
        out
    }

    fn reflect_weight(&self, i: usize, w: &Weight) -> Weight {
        let r = self.group.rank();
        let p = w.pairing(i);
        let mut out = w.0.clone();
        for (j, c) in out.iter_mut().enumerate().take(r) {
            *c -= p * self.group.cartan_entry(j + 1, i);
        }
        Weight(out)
    }

    /// `u_{<=k}`: the length-`k` prefix for `k >= 1`; the identity for
    /// `k` in `[-1, -r]`.
    pub fn u_leq(&self, k: i64) -> Result<ReducedWord, RootDataError> {
        let r = self.group.rank() as i64;
        if (-r..=-1).contains(&k) {
            return Ok(ReducedWord::empty(self.group));
        }
        if k >= 1 && (k as usize) <= self.letters.len() {
            return Ok(ReducedWord {
                group: self.group,
                letters: self.letters[..k as usize].to_vec(),
            });
        }
        Err(RootDataError::IndexRange {
            k,
            rank: self.group.rank(),
            len: self.letters.len(),
        })
    }

    pub fn concat_letter(&self, letter: usize) -> Result<ReducedWord, RootDataError> {
        let mut letters = self.letters.clone();
        letters.push(letter);
        ReducedWord::new(self.group, letters)
    }

    pub fn reversed(&self) -> ReducedWord {
        ReducedWord {
            group: self.group,
            letters: self.letters.iter().rev().copied().collect(),
        }
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

/// The fixed reduced word for the longest element: cyclic `(1..r)` blocks,
/// with shrinking blocks in type A.
pub fn i0(group: GroupType) -> ReducedWord {
    let mut letters = Vec::new();
    for len in group.cycle_lengths() {
        letters.extend(1..=len);
    }
    ReducedWord { group, letters }
}

/// A lengths-`n` left factor of the fixed longest word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftFactor {
    pub word: ReducedWord,
    /// 1-based index of the cycle containing the last letter.
    pub m: usize,
    pub last_letter: usize,
}

pub fn left_factor(group: GroupType, n: usize) -> Result<LeftFactor, RootDataError> {
    let full = i0(group);
    if n < 1 || n > full.len() {
        return Err(RootDataError::IndexRange {
            k: n as i64,
            rank: group.rank(),
            len: full.len(),
        });
    }
    let word = ReducedWord {
        group,
        letters: full.letters[..n].to_vec(),
    };
    let (m, last_letter) = group.cycle_of_position(n).unwrap();
    Ok(LeftFactor {
        word,
        m,
        last_letter,
    })
}

pub fn is_left_factor(word: &ReducedWord) -> bool {
    let full = i0(word.group());
    word.len() <= full.len() && full.letters[..word.len()] == *word.letters()
}

/// All Weyl-group elements, each with one reduced word, found by breadth
/// first search on the orbit of a regular weight.
pub fn all_weyl_words(group: GroupType) -> Vec<ReducedWord> {
    use std::collections::BTreeMap;
    let rank = group.rank();
    let rho = Weight((1..=rank as i64).map(|_| 1).collect());
    let mut seen: BTreeMap<Weight, ReducedWord> = BTreeMap::new();
    let id = ReducedWord::empty(group);
    seen.insert(rho.clone(), id.clone());
    let mut frontier = vec![(rho, id)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (w, word) in &frontier {
            for i in 1..=rank {
                let image = word.reflect_weight(i, w);
                if !seen.contains_key(&image) {
                    // prepend: s_i * (s_{j_1}...s_{j_l}) has the new letter first
                    let mut letters = vec![i];
                    letters.extend_from_slice(word.letters());
                    let longer = ReducedWord { group, letters };
                    seen.insert(image.clone(), longer.clone());
                    next.push((image, longer));
                }
            }
        }
        frontier = next;
    }
    let mut words: Vec<ReducedWord> = seen.into_values().collect();
    words.sort_by_key(|w| (w.len(), w.letters().to_vec()));
    words
}
