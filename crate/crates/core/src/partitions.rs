//! Partition and tableau combinatorics: conjugation, Frobenius notation,
//! the Euler bijection, Schur polynomial machinery, and the self-conjugate
//! Littlewood-Richardson check.

use crate::report::{Check, Report};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    InvalidParts(Vec<u32>),
    #[error("partition {0} is not self-conjugate")]
    NotSelfConjugate(Partition),
    #[error("Frobenius arms must be strictly decreasing and non-negative, got {0:?}")]
    InvalidArms(Vec<u32>),
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
}

/// An integer partition: weakly decreasing positive parts. Empty = the zero partition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = PartitionError;
    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            write!(f, "0")
        } else {
            let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
            write!(f, "{}", s.join(","))
        }
    }
}

impl FromStr for Partition {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<u32>, _> = s.split(',').map(|t| t.trim().parse::<u32>()).collect();
        let parts = parts.map_err(|_| PartitionError::Parse(s.to_string()))?;
        Partition::new(parts).map_err(|_| PartitionError::Parse(s.to_string()))
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::InvalidParts(parts));
        }
        Ok(Partition { parts })
    }

    /// From any multiset of non-negative integers: sort descending, drop zeros.
    pub fn from_exponents(mut e: Vec<u32>) -> Self {
        e.sort_unstable_by(|a, b| b.cmp(a));
        while e.last() == Some(&0) {
            e.pop();
        }
        Partition { parts: e }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p as usize >= c).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Durfee square size: the largest i with lambda_i >= i.
    pub fn durfee(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .filter(|(i, &p)| p as usize >= i + 1)
            .count()
    }

    /// All partitions of weight w.
    pub fn all_of_weight(w: u32) -> Vec<Partition> {
        fn rec(remaining: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: acc.clone() });
                return;
            }
            let top = max.min(remaining);
            for p in (1..=top).rev() {
                acc.push(p);
                rec(remaining - p, p, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        rec(w, w.max(1), &mut Vec::new(), &mut out);
        if w == 0 {
            return vec![Partition::empty()];
        }
        out
    }
}

/// Frobenius notation for a self-conjugate partition: strictly decreasing
/// diagonal arm lengths mu_1 > ... > mu_s >= 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusForm {
    arms: Vec<u32>,
}

impl FrobeniusForm {
    pub fn new(arms: Vec<u32>) -> Result<Self, PartitionError> {
        if arms.windows(2).any(|w| w[0] <= w[1]) {
            return Err(PartitionError::InvalidArms(arms));
        }
        Ok(FrobeniusForm { arms })
    }

    pub fn arms(&self) -> &[u32] {
        &self.arms
    }

    /// Durfee square size.
    pub fn durfee(&self) -> usize {
        self.arms.len()
    }

    pub fn weight(&self) -> u32 {
        self.arms.iter().sum()
    }

    /// The self-conjugate partition with these diagonal arms.
    pub fn to_partition(&self) -> Partition {
        let s = self.arms.len();
        let len = if s == 0 {
            0
        } else {
            self.arms[0] as usize + 1
        };
        let mut parts = vec![0u32; len];
        for (i, &m) in self.arms.iter().enumerate() {
            // row i: diagonal cell + arm of length m to the right
            parts[i] = (i as u32 + 1) + m;
            // leg of length m below the diagonal contributes to column counts
            for r in (i + 1)..=(i + m as usize) {
                parts[r] = parts[r].max(i as u32 + 1);
            }
        }
        // rows s..: determined by the legs alone, already set above
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }
}

/// Frobenius form of a self-conjugate partition; rejects anything else.
pub fn frobenius(p: &Partition) -> Result<FrobeniusForm, PartitionError> {
    if !p.is_self_conjugate() {
        return Err(PartitionError::NotSelfConjugate(p.clone()));
    }
    let s = p.durfee();
    let arms = (0..s).map(|i| p.part(i) - (i as u32 + 1)).collect();
    Ok(FrobeniusForm { arms })
}

/// Euler's bijection: the distinct odd hook sizes (2 mu_i + 1) of the diagonal cells.
pub fn euler_image(mu: &FrobeniusForm) -> Vec<u32> {
    mu.arms.iter().map(|&m| 2 * m + 1).collect()
}

/// All self-conjugate partitions lambda with length <= n, |lambda| = j and
/// Frobenius weight |mu| = i.
pub fn self_conjugate_enum(n: usize, i: u32, j: u32) -> Vec<Partition> {
    // |lambda| = 2|mu| + s, so s is forced.
    if j < 2 * i {
        return Vec::new();
    }
    let s = (j - 2 * i) as usize;
    if s == 0 {
        return if i == 0 && j == 0 {
            vec![Partition::empty()]
        } else {
            Vec::new()
        };
    }
    // strictly decreasing arms of length s summing to i, with mu_1 + 1 <= n
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let max_first = (n - 1) as u32;
    fn rec(remaining: u32, slots: usize, max: i64, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 0 {
            if remaining == 0 {
                out.push(acc.clone());
            }
            return;
        }
        // remaining slots need at least 0 + 1 + ... + (slots-1)
        let min_needed = (slots as u32 * (slots as u32 - 1)) / 2;
        if remaining < min_needed {
            return;
        }
        let hi = max.min(remaining as i64);
        for v in (0..=hi).rev() {
            acc.push(v as u32);
            rec(remaining - v as u32, slots - 1, v - 1, acc, out);
            acc.pop();
        }
    }
    let mut arms_list = Vec::new();
    rec(i, s, max_first as i64, &mut Vec::new(), &mut arms_list);
    for arms in arms_list {
        let f = FrobeniusForm { arms };
        out.push(f.to_partition());
    }
    out.sort();
    out
}

/// All self-conjugate partitions of weight w (no length bound).
pub fn self_conjugate_of_weight(w: u32) -> Vec<Partition> {
    Partition::all_of_weight(w)
        .into_iter()
        .filter(|p| p.is_self_conjugate())
        .collect()
}

/// Dimension of the Schur module of shape lambda over n variables, by the
/// hook-content formula; 0 when the shape has more than n rows.
pub fn schur_dim(lambda: &Partition, n: usize) -> BigInt {
    if lambda.len() > n {
        return BigInt::zero();
    }
    let conj = lambda.conjugate();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (r, &row_len) in lambda.parts().iter().enumerate() {
        for c in 0..row_len as usize {
            let content = c as i64 - r as i64;
            let hook = (row_len as i64 - c as i64) + (conj.part(c) as i64 - r as i64) - 1;
            num *= BigInt::from(n as i64 + content);
            den *= BigInt::from(hook);
        }
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// Symmetric polynomial in n variables with integer coefficients, stored as
/// exponent vector -> coefficient.
pub type SymPoly = BTreeMap<Vec<u32>, BigInt>;

pub fn sympoly_add_term(f: &mut SymPoly, e: Vec<u32>, c: BigInt) {
    let entry = f.entry(e).or_insert_with(BigInt::zero);
    *entry += c;
    if entry.is_zero() {
        // re-fetch key to remove; easiest is a sweep at the end, but do it now
    }
}

fn sympoly_prune(f: &mut SymPoly) {
    f.retain(|_, c| !c.is_zero());
}

pub fn sympoly_mul(f: &SymPoly, g: &SymPoly, n: usize) -> SymPoly {
    let mut out = SymPoly::new();
    for (ef, cf) in f {
        for (eg, cg) in g {
            let e: Vec<u32> = (0..n).map(|i| ef[i] + eg[i]).collect();
            *out.entry(e).or_insert_with(BigInt::zero) += cf * cg;
        }
    }
    sympoly_prune(&mut out);
    out
}

pub fn sympoly_sub_scaled(f: &mut SymPoly, g: &SymPoly, c: &BigInt) {
    for (e, cg) in g {
        let entry = f.entry(e.clone()).or_insert_with(BigInt::zero);
        *entry -= c * cg;
    }
    sympoly_prune(f);
}

/// Enumerate semistandard Young tableaux of the given shape with entries in 1..=n.
pub fn ssyt(lambda: &Partition, n: usize) -> Vec<Vec<Vec<u32>>> {
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let mut out = Vec::new();
    if lambda.len() > n {
        return out;
    }
    let mut t: Vec<Vec<u32>> = shape.iter().map(|&l| vec![0; l]).collect();
    fn fill(
        t: &mut Vec<Vec<u32>>,
        shape: &[usize],
        r: usize,
        c: usize,
        n: usize,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        if r == shape.len() {
            out.push(t.clone());
            return;
        }
        let (nr, nc) = if c + 1 < shape[r] { (r, c + 1) } else { (r + 1, 0) };
        let min_row = if c > 0 { t[r][c - 1] } else { 1 };
        let min_col = if r > 0 && shape[r - 1] > c { t[r - 1][c] + 1 } else { 1 };
        let lo = min_row.max(min_col);
        for v in lo..=(n as u32) {
            t[r][c] = v;
            fill(t, shape, nr, nc, n, out);
        }
        t[r][c] = 0;
    }
    if shape.is_empty() {
        out.push(Vec::new());
        return out;
    }
    fill(&mut t, &shape, 0, 0, n, &mut out);
    out
}

/// Schur polynomial: monomial generating function of SSYT of shape lambda.
pub fn schur_poly(lambda: &Partition, n: usize) -> SymPoly {
    let mut f = SymPoly::new();
    for t in ssyt(lambda, n) {
        let mut e = vec![0u32; n];
        for row in &t {
            for &v in row {
                e[(v - 1) as usize] += 1;
            }
        }
        *f.entry(e).or_insert_with(BigInt::zero) += BigInt::one();
    }
    f
}

/// Multiset of (partition, multiplicity) pairs from a Schur-basis expansion.
/// Negative multiplicities are representable (the input need not be
/// Schur-positive).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    pub entries: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn multiplicity(&self, lambda: &Partition) -> BigInt {
        self.entries.get(lambda).cloned().unwrap_or_else(BigInt::zero)
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .entries
            .iter()
            .map(|(p, c)| format!("{c}*s[{p}]"))
            .collect();
        write!(f, "{}", if items.is_empty() { "0".to_string() } else { items.join(" + ") })
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExpandError {
    #[error("input not symmetric: exponents {0:?} and {1:?} carry different coefficients")]
    NotSymmetric(Vec<u32>, Vec<u32>),
    #[error("exponent vector of wrong arity: {0:?} (expected {1} variables)")]
    BadArity(Vec<u32>, usize),
}

fn permutations_of(sorted_desc: &[u32]) -> Vec<Vec<u32>> {
    use itertools::Itertools;
    sorted_desc
        .iter()
        .copied()
        .permutations(sorted_desc.len())
        .unique()
        .collect()
}

/// True iff a dominates b (same weight assumed).
fn dominates(a: &Partition, b: &Partition) -> bool {
    let mut sa = 0u32;
    let mut sb = 0u32;
    for i in 0..a.len().max(b.len()) {
        sa += a.part(i);
        sb += b.part(i);
        if sa < sb {
            return false;
        }
    }
    true
}

/// Expand a symmetric polynomial in the Schur basis by repeatedly stripping
/// the dominance-maximal surviving leading term.
pub fn schur_expand(f: &SymPoly, n: usize) -> Result<SchurExpansion, ExpandError> {
    for e in f.keys() {
        if e.len() != n {
            return Err(ExpandError::BadArity(e.clone(), n));
        }
    }
    // symmetry check with witness
    for (e, c) in f {
        let mut sorted = e.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        for perm in permutations_of(&sorted) {
            let cp = f.get(&perm).cloned().unwrap_or_else(BigInt::zero);
            if cp != *c {
                return Err(ExpandError::NotSymmetric(e.clone(), perm));
            }
        }
    }
    let mut rem = f.clone();
    sympoly_prune(&mut rem);
    let mut out = SchurExpansion::default();
    while !rem.is_empty() {
        // candidate leading exponents: weakly decreasing ones
        let mut candidates: Vec<Partition> = rem
            .keys()
            .filter(|e| e.windows(2).all(|w| w[0] >= w[1]))
            .map(|e| Partition::from_exponents(e.clone()))
            .collect();
        debug_assert!(!candidates.is_empty(), "symmetric polynomial with no sorted monomial");
        // dominance-maximal within each weight, lex-greatest for determinism
        candidates.sort_by(|a, b| b.cmp(a));
        let lead = candidates
            .iter()
            .find(|cand| {
                candidates
                    .iter()
                    .all(|o| *o == **cand || o.weight() != cand.weight() || !dominates(o, cand) || dominates(cand, o))
            })
            .cloned()
            .expect("no dominance-maximal candidate");
        let mut key = vec![0u32; n];
        for (i, &p) in lead.parts().iter().enumerate() {
            key[i] = p;
        }
        let c = rem.get(&key).cloned().unwrap_or_else(BigInt::zero);
        debug_assert!(!c.is_zero());
        let sp = schur_poly(&lead, n);
        sympoly_sub_scaled(&mut rem, &sp, &c);
        *out.entries.entry(lead).or_insert_with(BigInt::zero) += c;
    }
    out.entries.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// The self-conjugate Littlewood-Richardson check: with dim V = mu_1 + 1,
/// the product of the hook s_nu and s_lambda_hat contains s_lambda and no
/// other self-conjugate constituent.
pub fn lr_selfconjugate_check(lambda: &Partition) -> Result<Report, PartitionError> {
    let mu = frobenius(lambda)?;
    if mu.durfee() == 0 {
        return Err(PartitionError::NotSelfConjugate(lambda.clone()));
    }
    let m1 = mu.arms()[0];
    let nvars = (m1 + 1) as usize;
    let nu = FrobeniusForm::new(vec![m1]).unwrap().to_partition();
    let hat = FrobeniusForm::new(mu.arms()[1..].to_vec()).unwrap().to_partition();
    let prod = sympoly_mul(&schur_poly(&nu, nvars), &schur_poly(&hat, nvars), nvars);
    let exp = schur_expand(&prod, nvars).expect("product of Schur polynomials is symmetric");
    let mut report = Report::new();
    let inputs = serde_json::json!({
        "lambda": lambda.to_string(),
        "nu": nu.to_string(),
        "lambda_hat": hat.to_string(),
        "dim_v": nvars,
    });
    report.push(Check::bool(
        format!("lr: s[{lambda}] occurs in s[{nu}]*s[{hat}]"),
        inputs.clone(),
        exp.multiplicity(lambda) >= BigInt::one(),
    ));
    let offenders: Vec<String> = exp
        .entries
        .keys()
        .filter(|rho| rho.is_self_conjugate() && *rho != lambda)
        .map(|rho| rho.to_string())
        .collect();
    report.push(Check::new(
        format!("lr: no other self-conjugate constituent for {lambda}"),
        inputs,
        serde_json::json!([] as [String; 0]),
        serde_json::json!(offenders),
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        let lam = p(&[7, 7, 6, 3, 3, 3, 2]);
        assert_eq!(lam.conjugate(), lam);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn conjugate_involution() {
        for w in 0..=10 {
            for lam in Partition::all_of_weight(w) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn frobenius_example() {
        let lam = p(&[7, 7, 6, 3, 3, 3, 2]);
        let f = frobenius(&lam).unwrap();
        assert_eq!(f.arms(), &[6, 5, 3]);
        assert_eq!(f.durfee(), 3);
        assert_eq!(f.to_partition(), lam);
    }

    #[test]
    fn frobenius_trivial_and_roundtrip() {
        let f = frobenius(&p(&[1])).unwrap();
        assert_eq!(f.arms(), &[0]);
        for w in 0..=20 {
            for lam in self_conjugate_of_weight(w) {
                let f = frobenius(&lam).unwrap();
                assert_eq!(f.to_partition(), lam, "roundtrip for {lam}");
                assert_eq!(lam.weight(), 2 * f.weight() + f.durfee() as u32);
            }
        }
    }

    #[test]
    fn frobenius_rejects_non_self_conjugate() {
        assert!(frobenius(&p(&[3, 1])).is_err());
    }

    #[test]
    fn self_conjugate_iff_roundtrip() {
        for w in 0..=14 {
            for lam in Partition::all_of_weight(w) {
                assert_eq!(lam.is_self_conjugate(), frobenius(&lam).is_ok());
            }
        }
    }

    #[test]
    fn euler_image_examples() {
        // (7,7,6,3,3,3,2) has mu=(6,5,3); the image under the formula is (13,11,7)
        let f = frobenius(&p(&[7, 7, 6, 3, 3, 3, 2])).unwrap();
        assert_eq!(euler_image(&f), vec![13, 11, 7]);
        assert_eq!(13 + 11 + 7, 31);
        let f = FrobeniusForm::new(vec![0]).unwrap();
        assert_eq!(euler_image(&f), vec![1]);
        let f = FrobeniusForm::new(vec![1, 0]).unwrap();
        assert_eq!(euler_image(&f), vec![3, 1]);
    }

    #[test]
    fn euler_bijection_counts() {
        // parts distinct, odd, summing to |lambda|; counts match distinct-odd partitions
        for w in 0..=20u32 {
            let sc = self_conjugate_of_weight(w);
            let mut images = std::collections::BTreeSet::new();
            for lam in &sc {
                let img = euler_image(&frobenius(lam).unwrap());
                assert!(img.iter().all(|x| x % 2 == 1));
                assert!(img.windows(2).all(|w| w[0] > w[1]));
                assert_eq!(img.iter().sum::<u32>(), w);
                assert!(images.insert(img), "injectivity at weight {w}");
            }
            let odd_distinct = Partition::all_of_weight(w)
                .into_iter()
                .filter(|p| {
                    p.parts().iter().all(|x| x % 2 == 1)
                        && p.parts().windows(2).all(|w| w[0] > w[1])
                })
                .count();
            assert_eq!(sc.len(), odd_distinct, "Euler count at weight {w}");
        }
    }

    #[test]
    fn self_conjugate_enum_examples() {
        assert_eq!(self_conjugate_enum(2, 1, 3), vec![p(&[2, 1])]);
        assert_eq!(self_conjugate_enum(2, 1, 4), vec![p(&[2, 2])]);
        for j in 0..=12 {
            assert!(self_conjugate_enum(2, 2, j).is_empty(), "j={j}");
        }
        assert_eq!(self_conjugate_enum(1, 0, 1), vec![p(&[1])]);
        assert_eq!(self_conjugate_enum(3, 3, 9), vec![p(&[3, 3, 3])]);
    }

    #[test]
    fn self_conjugate_enum_matches_bruteforce() {
        for n in 1..=4usize {
            for i in 0..=6u32 {
                for j in 0..=12u32 {
                    let fast = self_conjugate_enum(n, i, j);
                    let mut brute: Vec<Partition> = Partition::all_of_weight(j)
                        .into_iter()
                        .filter(|lam| {
                            lam.is_self_conjugate()
                                && lam.len() <= n
                                && frobenius(lam).unwrap().weight() == i
                        })
                        .collect();
                    brute.sort();
                    assert_eq!(fast, brute, "n={n} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn schur_dim_examples() {
        assert_eq!(schur_dim(&p(&[1]), 7), BigInt::from(7));
        assert_eq!(schur_dim(&p(&[2, 1]), 2), BigInt::from(2));
        assert_eq!(schur_dim(&p(&[3, 2, 1]), 3), BigInt::from(8));
        assert_eq!(schur_dim(&p(&[1, 1, 1]), 2), BigInt::from(0));
    }

    #[test]
    fn schur_dim_counts_ssyt() {
        for w in 0..=8u32 {
            for lam in Partition::all_of_weight(w) {
                for n in 1..=4usize {
                    let d = schur_dim(&lam, n);
                    assert_eq!(d, BigInt::from(ssyt(&lam, n).len()), "{lam} n={n}");
                }
            }
        }
    }

    #[test]
    fn schur_poly_examples() {
        // (1^k) = elementary symmetric e_k
        let e2 = schur_poly(&p(&[1, 1]), 3);
        assert_eq!(e2.len(), 3);
        assert!(e2.contains_key(&vec![1, 1, 0]));
        // (2,1), n=2 -> x1^2 x2 + x1 x2^2
        let s21 = schur_poly(&p(&[2, 1]), 2);
        assert_eq!(s21.len(), 2);
        assert_eq!(s21[&vec![2, 1]], BigInt::one());
        assert_eq!(s21[&vec![1, 2]], BigInt::one());
        // (2), n=2 -> h2
        let s2 = schur_poly(&p(&[2]), 2);
        assert_eq!(s2.len(), 3);
        assert_eq!(s2[&vec![1, 1]], BigInt::one());
    }

    #[test]
    fn schur_expand_roundtrip_and_square() {
        for w in 0..=5u32 {
            for lam in Partition::all_of_weight(w) {
                if lam.len() > 3 {
                    continue;
                }
                let f = schur_poly(&lam, 3);
                let exp = schur_expand(&f, 3).unwrap();
                assert_eq!(exp.entries.len(), if f.is_empty() { 0 } else { 1 });
                if !f.is_empty() {
                    assert_eq!(exp.multiplicity(&lam), BigInt::one());
                }
            }
        }
        // (x1+x2)^2 = s_(2) + s_(1,1)
        let mut e1 = SymPoly::new();
        e1.insert(vec![1, 0], BigInt::one());
        e1.insert(vec![0, 1], BigInt::one());
        let sq = sympoly_mul(&e1, &e1, 2);
        let exp = schur_expand(&sq, 2).unwrap();
        assert_eq!(exp.multiplicity(&p(&[2])), BigInt::one());
        assert_eq!(exp.multiplicity(&p(&[1, 1])), BigInt::one());
        assert_eq!(exp.entries.len(), 2);
    }

    #[test]
    fn schur_expand_rejects_asymmetric() {
        let mut f = SymPoly::new();
        f.insert(vec![1, 0], BigInt::one());
        match schur_expand(&f, 2) {
            Err(ExpandError::NotSymmetric(_, _)) => {}
            other => panic!("expected symmetry failure, got {other:?}"),
        }
    }

    #[test]
    fn lr_positivity() {
        for wa in 0..=5u32 {
            for wb in 0..=(10 - wa).min(5) {
                for la in Partition::all_of_weight(wa) {
                    if la.len() > 3 {
                        continue;
                    }
                    for lb in Partition::all_of_weight(wb) {
                        if lb.len() > 3 {
                            continue;
                        }
                        let f = sympoly_mul(&schur_poly(&la, 3), &schur_poly(&lb, 3), 3);
                        let exp = schur_expand(&f, 3).unwrap();
                        assert!(
                            exp.entries.values().all(|c| c.is_positive()),
                            "negative LR multiplicity for {la} * {lb}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn lr_selfconjugate_small() {
        for lam in [p(&[2, 1]), p(&[2, 2]), p(&[3, 3, 2])] {
            let r = lr_selfconjugate_check(&lam).unwrap();
            assert!(r.all_passed(), "{lam}: {:?}", r.checks);
        }
        // (2,2): expansion of s_(2,1)*s_(1) over 2 vars is {(3,1), (2,2)}
        let nu = p(&[2, 1]);
        let hat = p(&[1]);
        let prod = sympoly_mul(&schur_poly(&nu, 2), &schur_poly(&hat, 2), 2);
        let exp = schur_expand(&prod, 2).unwrap();
        assert_eq!(exp.multiplicity(&p(&[3, 1])), BigInt::one());
        assert_eq!(exp.multiplicity(&p(&[2, 2])), BigInt::one());
        assert_eq!(exp.entries.len(), 2);
    }

    #[test]
    fn partition_text_roundtrip() {
        for s in ["0", "3,1", "7,7,6,3,3,3,2"] {
            let lam: Partition = s.parse().unwrap();
            assert_eq!(lam.to_string(), s);
        }
        assert!("1,3".parse::<Partition>().is_err());
    }
}
