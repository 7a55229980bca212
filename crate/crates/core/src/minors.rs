//! Generalized minors evaluated through the one-parameter factorization
//! of a reduced word, their torus-scaled variants, and the verification
//! machinery comparing a minor's monomials with Demazure subsets.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Signed;
use thiserror::Error;

use crate::fund_rep::{Module, RepError};
use crate::laurent::{LaurentPoly, Monomial};
use crate::monomial_crystal::{
    component, lower_demazure, CrystalError, CrystalMonomial, DEFAULT_VERTEX_CAP,
};
use crate::root_data::{
    all_weyl_words, is_left_factor, GroupType, ReducedWord, RootDataError, Weight,
};

#[derive(Debug, Error)]
pub enum MinorError {
    #[error("k = {k} outside [-1,-{rank}] U [1,{len}] (0 excluded)")]
    IllegalK { k: i64, rank: usize, len: usize },
    #[error("word {0} is not a left factor of the fixed longest word")]
    NotLeftFactor(String),
    #[error("module error: {0}")]
    Rep(#[from] RepError),
    #[error("root data error: {0}")]
    RootData(#[from] RootDataError),
    #[error("crystal error: {0}")]
    Crystal(#[from] CrystalError),
    #[error("outside the Demazure-expansion scope: {0}; rerun with force to compute diagnostics")]
    ScopeViolation(String),
    #[error("append precondition failed: {0}")]
    AppendPrecondition(String),
    #[error("no parameters (m={m}, d={d}) in range for {group:?}")]
    BadParameters { group: GroupType, m: usize, d: usize },
}

/// A request for the minor `Delta(k; word)` composed with the reduced
/// cell's factorization.
#[derive(Debug, Clone)]
pub struct MinorRequest {
    group: GroupType,
    word: ReducedWord,
    k: i64,
}

impl MinorRequest {
    pub fn new(group: GroupType, word: ReducedWord, k: i64) -> Result<Self, MinorError> {
        if !is_left_factor(&word) {
            return Err(MinorError::NotLeftFactor(word.to_string()));
        }
        let r = group.rank() as i64;
        let n = word.len() as i64;
        let legal = (-r..=-1).contains(&k) || (1..=n).contains(&k);
        if !legal {
            return Err(MinorError::IllegalK {
                k,
                rank: group.rank(),
                len: word.len(),
            });
        }
        Ok(MinorRequest { group, word, k })
    }

    pub fn group(&self) -> GroupType {
        self.group
    }

    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    /// The fundamental-weight index `d = |i_k|`.
    pub fn weight_index(&self) -> usize {
        if self.k < 0 {
            (-self.k) as usize
        } else {
            self.word.letter(self.k as usize)
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "family": self.group.family().to_string(),
            "rank": self.group.rank(),
            "word": self.word.letters(),
            "k": self.k,
        })
    }
}

/// Variables `Y[s, i_t]` attached to the word positions, row `s` being
/// the cycle containing the position.
pub fn y_variables(group: GroupType, word: &ReducedWord) -> Vec<Monomial> {
    (1..=word.len())
        .map(|t| {
            let (cycle, _) = group
                .cycle_of_position(t)
                .expect("left factors fit inside the fixed longest word");
            Monomial::var(cycle as i32, word.letter(t) as i32)
        })
        .collect()
}

fn pair_against_extremal(
    module: &Module,
    gu: &crate::fund_rep::RepVector,
    target: &crate::fund_rep::RepVector,
) -> LaurentPoly {
    let num = module.gram(gu, target);
    let den = module.gram(target, target);
    num.div_exact(&den)
        .expect("extremal-vector pairing must divide the minor exactly")
}

fn delta_l_raw(
    group: GroupType,
    letters: &[usize],
    vars: &[Monomial],
    u_word: &ReducedWord,
    d: usize,
) -> Result<LaurentPoly, MinorError> {
    let module = Module::fundamental(group, d)?;
    let highest = module.highest_vector();
    let target = module.sbar_word(u_word, &highest);
    let gu = module.xl_apply(letters, vars, &highest);
    Ok(pair_against_extremal(&module, &gu, &target))
}

/// The minor on the reduced cell: exact Laurent polynomial in the word's
/// variables.
pub fn delta_l(req: &MinorRequest) -> Result<LaurentPoly, MinorError> {
    let vars = y_variables(req.group, &req.word);
    let u_word = req.word.u_leq(req.k)?;
    delta_l_raw(
        req.group,
        req.word.letters(),
        &vars,
        &u_word,
        req.weight_index(),
    )
}

/// A minor on the unreduced cell: the torus factor contributes the
/// character `u_{<=k} Lambda_d` scaling the reduced-cell polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusScaledMinor {
    pub character: Weight,
    pub poly: LaurentPoly,
}

pub fn delta_g(req: &MinorRequest) -> Result<TorusScaledMinor, MinorError> {
    let d = req.weight_index();
    let u_word = req.word.u_leq(req.k)?;
    let character = u_word.apply(&Weight::fundamental(req.group.rank(), d));
    let poly = delta_l(req)?;
    Ok(TorusScaledMinor { character, poly })
}

/// Outcome of recomputing a minor after appending one letter with a fresh
/// variable: the polynomial must be unchanged and free of the variable.
#[derive(Debug, Clone)]
pub struct AppendReport {
    pub base: LaurentPoly,
    pub extended: LaurentPoly,
    pub fresh_variable: Monomial,
    pub equal: bool,
    pub uses_fresh_variable: bool,
}

impl AppendReport {
    pub fn holds(&self) -> bool {
        self.equal && !self.uses_fresh_variable
    }
}

/// Appends `extra` (which must differ from `i_k` and lengthen the Weyl
/// element) and recomputes the same minor with a fresh variable.
pub fn append_invariance(req: &MinorRequest, extra: usize) -> Result<AppendReport, MinorError> {
    if req.k < 0 {
        return Err(MinorError::AppendPrecondition(
            "k must index a word position".into(),
        ));
    }
    let d = req.weight_index();
    if extra == d {
        return Err(MinorError::AppendPrecondition(format!(
            "appended letter {extra} equals i_k"
        )));
    }
    let longer = req.word.concat_letter(extra)?;
    if longer.weyl_length() != req.word.len() + 1 {
        return Err(MinorError::AppendPrecondition(format!(
            "appending {extra} does not lengthen the element"
        )));
    }
    let base = delta_l(req)?;
    let mut vars = y_variables(req.group, &req.word);
    let fresh_row = vars
        .iter()
        .flat_map(|m| m.iter().map(|(v, _)| v.row))
        .max()
        .unwrap_or(0)
        + 1;
    let fresh = Monomial::var(fresh_row, extra as i32);
    vars.push(fresh.clone());
    let u_word = req.word.u_leq(req.k)?;
    let extended = delta_l_raw(req.group, longer.letters(), &vars, &u_word, d)?;
    let uses_fresh = extended
        .support()
        .any(|m| m.iter().any(|(v, _)| v.row == fresh_row));
    Ok(AppendReport {
        equal: base == extended,
        base,
        extended,
        fresh_variable: fresh,
        uses_fresh_variable: uses_fresh,
    })
}

/// Builds the request whose minor the Demazure expansion describes: the
/// word runs through `m` cycles ending at letter `d`, and `k` points at
/// the letter `d` inside the `(m-1)`-th cycle.
pub fn demazure_scope_request(
    group: GroupType,
    m: usize,
    d: usize,
) -> Result<MinorRequest, MinorError> {
    let cycles = group.cycle_lengths();
    let bad = || MinorError::BadParameters { group, m, d };
    if m < 2 || m > cycles.len() || d < 1 {
        return Err(bad());
    }
    if d > cycles[m - 1] || d > cycles[m - 2] {
        return Err(bad());
    }
    let prefix_len = |c: usize| -> usize { cycles[..c].iter().sum() };
    let n = prefix_len(m - 1) + d;
    let k = (prefix_len(m - 2) + d) as i64;
    let word = crate::root_data::left_factor(group, n)?.word;
    MinorRequest::new(group, word, k)
}

/// Scope check for the Demazure expansion: `i_k` sits in the next-to-last
/// cycle and the word ends with the same letter.
pub fn in_demazure_scope(req: &MinorRequest) -> Result<(), String> {
    if req.k < 1 {
        return Err("k must index a word position".into());
    }
    let n = req.word.len();
    let (m, _) = req.group.cycle_of_position(n).unwrap();
    let (kc, _) = req.group.cycle_of_position(req.k as usize).unwrap();
    if m < 2 {
        return Err(format!("word ends in cycle {m}; need at least two cycles"));
    }
    if kc != m - 1 {
        return Err(format!(
            "i_k lies in cycle {kc}, not the next-to-last cycle {}",
            m - 1
        ));
    }
    if req.word.letter(n) != req.word.letter(req.k as usize) {
        return Err(format!(
            "word ends with letter {} but i_k = {}",
            req.word.letter(n),
            req.word.letter(req.k as usize)
        ));
    }
    Ok(())
}

/// Result of matching a minor's monomials against the Demazure subset
/// grown from the lowest-weight seed `1/Y[m,d]`.
#[derive(Debug, Clone)]
pub struct DemazureMatchReport {
    pub request: serde_json::Value,
    pub matched: bool,
    pub multiplicities: Vec<(Monomial, BigInt)>,
    pub demazure_size: usize,
    pub minor_terms: usize,
    pub scope_ok: bool,
}

impl DemazureMatchReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "request": self.request,
            "match": self.matched,
            "multiplicities": self.multiplicities.iter().map(|(m, c)| {
                serde_json::json!({"monomial": m.to_string(), "coeff": c.to_string()})
            }).collect::<Vec<_>>(),
            "demazure_size": self.demazure_size,
            "minor_terms": self.minor_terms,
            "scope_ok": self.scope_ok,
        })
    }
}

/// Checks that the minor equals a positively weighted sum over the
/// Demazure subset `B^-(Lambda_d)_{u_{<=k}}` realized from `1/Y[m,d]`.
pub fn verify_demazure_match(
    req: &MinorRequest,
    force: bool,
) -> Result<DemazureMatchReport, MinorError> {
    let scope = in_demazure_scope(req);
    if let Err(reason) = &scope {
        if !force {
            return Err(MinorError::ScopeViolation(reason.clone()));
        }
    }
    let d = req.weight_index();
    let n = req.word.len();
    let (m, _) = req.group.cycle_of_position(n).unwrap();
    let seed = CrystalMonomial::new(req.group, Monomial::var(m as i32, d as i32).inv());
    let u_word = req.word.u_leq(req.k)?;
    let set = lower_demazure(&seed, &u_word)?;
    let poly = delta_l(req)?;
    let support: BTreeSet<Monomial> = poly.support().cloned().collect();
    let positive = poly.iter().all(|(_, c)| c.is_positive());
    let matched = support == set && positive;
    Ok(DemazureMatchReport {
        request: req.to_json(),
        matched,
        multiplicities: poly.iter().map(|(m, c)| (m.clone(), c.clone())).collect(),
        demazure_size: set.len(),
        minor_terms: poly.num_terms(),
        scope_ok: scope.is_ok(),
    })
}

/// Certificate that a monomial set matches no lower Demazure subset of
/// its crystal component, over the whole Weyl group.
#[derive(Debug, Clone)]
pub struct NoMatchCertificate {
    pub lowest: Monomial,
    pub set_inside_component: bool,
    pub component_size: usize,
    pub weyl_order: usize,
    pub matching_elements: Vec<ReducedWord>,
}

impl NoMatchCertificate {
    pub fn certified(&self) -> bool {
        self.set_inside_component && self.matching_elements.is_empty()
    }
}

/// Descends from any member of `set` to the lowest-weight monomial of its
/// component, then compares `set` against the Demazure subset of every
/// Weyl element.
pub fn certify_no_demazure_match(
    group: GroupType,
    set: &BTreeSet<Monomial>,
) -> Result<NoMatchCertificate, MinorError> {
    let start = set
        .iter()
        .next()
        .ok_or_else(|| MinorError::AppendPrecondition("empty monomial set".into()))?;
    let mut cur = CrystalMonomial::new(group, start.clone());
    'descend: loop {
        for i in 1..=group.rank() {
            if let Some(next) = cur.f_tilde(i) {
                cur = next;
                continue 'descend;
            }
        }
        break;
    }
    let lowest = cur;
    let graph = component(&lowest, DEFAULT_VERTEX_CAP)?;
    let vertices: BTreeSet<Monomial> = graph.vertices.iter().cloned().collect();
    let set_inside_component = set.iter().all(|m| vertices.contains(m));
    let words = all_weyl_words(group);
    let weyl_order = words.len();
    let mut matching = Vec::new();
    for w in words {
        let dem = lower_demazure(&lowest, &w)?;
        if dem == *set {
            matching.push(w);
        }
    }
    Ok(NoMatchCertificate {
        lowest: lowest.monomial().clone(),
        set_inside_component,
        component_size: graph.vertices.len(),
        weyl_order,
        matching_elements: matching,
    })
}

/// Diagnostics for a minor outside the Demazure-expansion scope: the part
/// of its support explained by the Demazure subset of its unique lowest
/// monomial, and the residual set with its certificate.
#[derive(Debug, Clone)]
pub struct ResidualAnalysis {
    pub poly: LaurentPoly,
    pub demazure_part: BTreeSet<Monomial>,
    pub residual: Vec<(Monomial, BigInt)>,
    pub certificate: NoMatchCertificate,
}

pub fn residual_analysis(req: &MinorRequest) -> Result<ResidualAnalysis, MinorError> {
    let poly = delta_l(req)?;
    let lowest: Vec<Monomial> = poly
        .support()
        .filter(|m| CrystalMonomial::new(req.group, (*m).clone()).is_lowest())
        .cloned()
        .collect();
    if lowest.len() != 1 {
        return Err(MinorError::ScopeViolation(format!(
            "expected a unique lowest-weight monomial in the support, found {}",
            lowest.len()
        )));
    }
    let seed = CrystalMonomial::new(req.group, lowest[0].clone());
    let u_word = req.word.u_leq(req.k)?;
    let demazure_part = lower_demazure(&seed, &u_word)?;
    let residual: Vec<(Monomial, BigInt)> = poly
        .iter()
        .filter(|(m, _)| !demazure_part.contains(*m))
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect();
    let residual_set: BTreeSet<Monomial> = residual.iter().map(|(m, _)| m.clone()).collect();
    let certificate = certify_no_demazure_match(req.group, &residual_set)?;
    Ok(ResidualAnalysis {
        poly,
        demazure_part,
        residual,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::{i0, Family};

    fn gt(f: Family, r: usize) -> GroupType {
        GroupType::new(f, r).unwrap()
    }

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn c2_minor_matches_paper_display() {
        let g = gt(Family::C, 2);
        let req = MinorRequest::new(g, i0(g), 2).unwrap();
        let p = delta_l(&req).unwrap();
        let expect = poly(
            "Y[1,1]^2*Y[1,2]^-1 + 2*Y[1,1]*Y[2,1]^-1 + Y[1,2]*Y[2,1]^-2 + Y[2,2]^-1",
        );
        assert_eq!(p, expect);
    }

    #[test]
    fn b3_spin_minor_matches_paper_display() {
        let g = gt(Family::B, 3);
        let req = MinorRequest::new(g, i0(g), 6).unwrap();
        let p = delta_l(&req).unwrap();
        let expect = poly(
            "Y[1,2]*Y[1,3]^-1 + Y[1,3]*Y[2,1]*Y[2,2]^-1 + Y[1,3]*Y[3,1]^-1 \
             + Y[2,1]*Y[2,3]^-1 + Y[2,2]*Y[2,3]^-1*Y[3,1]^-1 + Y[2,3]*Y[3,2]^-1 \
             + Y[3,3]^-1",
        );
        assert_eq!(p, expect);
    }

    #[test]
    fn principal_minor_at_identity_is_one() {
        let g = gt(Family::D, 4);
        // empty word: x^L is the identity, so the principal minor is 1
        let word = ReducedWord::empty(g);
        for k in 1..=4 {
            let req = MinorRequest::new(g, word.clone(), -k).unwrap();
            assert_eq!(delta_l(&req).unwrap(), LaurentPoly::one());
        }
    }

    #[test]
    fn negative_k_gives_principal_minor() {
        let g = gt(Family::C, 2);
        let req = MinorRequest::new(g, i0(g), -1).unwrap();
        let p = delta_l(&req).unwrap();
        assert!(!p.is_zero());
        let tsm = delta_g(&req).unwrap();
        assert_eq!(tsm.character, Weight::fundamental(2, 1));
    }

    #[test]
    fn request_validation() {
        let g = gt(Family::C, 2);
        assert!(MinorRequest::new(g, i0(g), 0).is_err());
        assert!(MinorRequest::new(g, i0(g), 5).is_err());
        assert!(MinorRequest::new(g, i0(g), -3).is_err());
        let not_factor = ReducedWord::new(g, vec![2, 1]).unwrap();
        assert!(matches!(
            MinorRequest::new(g, not_factor, 1),
            Err(MinorError::NotLeftFactor(_))
        ));
    }

    #[test]
    fn delta_g_character_is_weyl_image() {
        let g = gt(Family::C, 2);
        let req = MinorRequest::new(g, i0(g), 2).unwrap();
        let tsm = delta_g(&req).unwrap();
        assert_eq!(tsm.character, Weight(vec![-2, 1]));
        assert_eq!(tsm.poly, delta_l(&req).unwrap());
        assert_eq!(tsm.poly.eval_all_ones(), BigInt::from(5));
    }

    #[test]
    fn append_invariance_examples() {
        let g = gt(Family::C, 2);
        let word = ReducedWord::new(g, vec![1, 2, 1]).unwrap();

        // appending the letter i_k is rejected
        let req = MinorRequest::new(g, word.clone(), 2).unwrap();
        assert!(matches!(
            append_invariance(&req, 2),
            Err(MinorError::AppendPrecondition(_))
        ));
        // appending a letter that fails to lengthen the element is rejected
        assert!(matches!(
            append_invariance(&req, 1),
            Err(MinorError::AppendPrecondition(_))
        ));

        // C_2, word (1,2,1), k = 3 (i_k = 1), append 2: unchanged
        let req = MinorRequest::new(g, word, 3).unwrap();
        let report = append_invariance(&req, 2).unwrap();
        assert!(report.holds(), "base {} ext {}", report.base, report.extended);

        let g = gt(Family::A, 3);
        let word = ReducedWord::new(g, vec![1, 2]).unwrap();
        let req = MinorRequest::new(g, word, 1).unwrap();
        let report = append_invariance(&req, 3).unwrap();
        assert!(report.holds());
    }

    #[test]
    fn demazure_match_on_paper_examples() {
        // C_2, k = 2: multiplicity 2 on Y[1,1]/Y[2,1], 1 elsewhere
        let req = demazure_scope_request(gt(Family::C, 2), 2, 2).unwrap();
        assert_eq!(req.k(), 2);
        assert_eq!(req.word().letters(), &[1, 2, 1, 2]);
        let report = verify_demazure_match(&req, false).unwrap();
        assert!(report.matched);
        assert_eq!(report.demazure_size, 4);
        let two = BigInt::from(2);
        let ones = report
            .multiplicities
            .iter()
            .filter(|(_, c)| *c == BigInt::from(1))
            .count();
        assert_eq!(ones, 3);
        assert!(report
            .multiplicities
            .iter()
            .any(|(m, c)| *c == two && m.to_string() == "Y[1,1]*Y[2,1]^-1"));

        // B_3, k = 6: all multiplicities 1
        let req = demazure_scope_request(gt(Family::B, 3), 3, 3).unwrap();
        assert_eq!(req.k(), 6);
        let report = verify_demazure_match(&req, false).unwrap();
        assert!(report.matched);
        assert_eq!(report.demazure_size, 7);
        assert!(report
            .multiplicities
            .iter()
            .all(|(_, c)| *c == BigInt::from(1)));
    }

    #[test]
    fn scope_violation_is_reported() {
        let g = gt(Family::C, 3);
        let req = MinorRequest::new(g, i0(g), 3).unwrap();
        assert!(matches!(
            verify_demazure_match(&req, false),
            Err(MinorError::ScopeViolation(_))
        ));
        let forced = verify_demazure_match(&req, true).unwrap();
        assert!(!forced.matched);
        assert!(!forced.scope_ok);
    }
}
