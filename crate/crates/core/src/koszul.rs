//! The Koszul complex of the square of the maximal ideal: the DGA on
//! S (x) /\* S_2, its bases per degree slice, the differential, products,
//! and homology dimensions and representatives.

use crate::linalg::{
    in_span, kernel_basis, rank, Echelon, ExactField, Scalar, SparseMatrix,
};
use crate::report::{Check, Report};
use itertools::Itertools;
use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// A quadratic monomial x_a x_b with 1 <= a <= b <= n. The global order on
/// these (lexicographic on (a, b)) fixes every sign downstream.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct QuadMonomial {
    a: u8,
    b: u8,
}

impl QuadMonomial {
    pub fn new(a: u8, b: u8) -> Self {
        assert!(a >= 1 && b >= 1, "1-based variable indices");
        if a <= b {
            QuadMonomial { a, b }
        } else {
            QuadMonomial { a: b, b: a }
        }
    }

    pub fn a(&self) -> u8 {
        self.a
    }

    pub fn b(&self) -> u8 {
        self.b
    }

    pub fn exponents(&self, n: usize) -> Vec<u32> {
        let mut e = vec![0u32; n];
        e[(self.a - 1) as usize] += 1;
        e[(self.b - 1) as usize] += 1;
        e
    }
}

impl fmt::Display for QuadMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.a, self.b)
    }
}

/// All quadratic monomials in n variables, in the global order.
pub fn all_quads(n: usize) -> Vec<QuadMonomial> {
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for a in 1..=n as u8 {
        for b in a..=n as u8 {
            out.push(QuadMonomial::new(a, b));
        }
    }
    out
}

pub type Exponents = Vec<u32>;
pub type Wedge = Vec<QuadMonomial>;
pub type BasisKey = (Exponents, Wedge);

fn wedge_exponents(w: &[QuadMonomial], n: usize) -> Vec<u32> {
    let mut e = vec![0u32; n];
    for q in w {
        e[(q.a - 1) as usize] += 1;
        e[(q.b - 1) as usize] += 1;
    }
    e
}

/// Sort a wedge into strictly increasing order; None if a factor repeats.
/// Returns the sign of the sorting permutation.
fn normalize_wedge(mut w: Wedge) -> Option<(Wedge, i8)> {
    let mut sign = 1i8;
    // insertion sort, counting transpositions
    for i in 1..w.len() {
        let mut j = i;
        while j > 0 && w[j - 1] > w[j] {
            w.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if w.windows(2).any(|p| p[0] == p[1]) {
        return None;
    }
    Some((w, sign))
}

/// An exact-scalar combination of basis terms, kept in canonical normalized
/// form (merged, sorted, zero-pruned), so equality is syntactic.
#[derive(Clone, Debug, PartialEq)]
pub struct KoszulElement {
    n: usize,
    field: ExactField,
    terms: BTreeMap<BasisKey, Scalar>,
}

impl KoszulElement {
    pub fn zero(n: usize, field: ExactField) -> Self {
        KoszulElement {
            n,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize, field: ExactField) -> Self {
        let mut e = Self::zero(n, field);
        e.add_term(Scalar::one(), vec![0; n], Vec::new());
        e
    }

    /// x_c (x) 1, 1-based.
    pub fn variable(c: usize, n: usize, field: ExactField) -> Self {
        let mut exps = vec![0u32; n];
        exps[c - 1] = 1;
        let mut e = Self::zero(n, field);
        e.add_term(Scalar::one(), exps, Vec::new());
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> ExactField {
        self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisKey, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Add c * x^exps (x) wedge, normalizing the wedge order and merging.
    pub fn add_term(&mut self, coeff: Scalar, exps: Exponents, wedge: Wedge) {
        assert_eq!(exps.len(), self.n);
        let coeff = self.field.reduce(&coeff);
        if coeff.is_zero() {
            return;
        }
        let Some((w, sign)) = normalize_wedge(wedge) else {
            return;
        };
        let coeff = if sign < 0 { self.field.neg(&coeff) } else { coeff };
        let key = (exps, w);
        let f = self.field;
        let entry = self.terms.entry(key.clone()).or_insert_with(Scalar::zero);
        *entry = f.add(entry, &coeff);
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&mut self, other: &KoszulElement) {
        assert_eq!(self.field, other.field, "field mismatch");
        for ((e, w), c) in &other.terms {
            self.add_term(c.clone(), e.clone(), w.clone());
        }
    }

    pub fn scale(&mut self, c: &Scalar) {
        let f = self.field;
        let c = f.reduce(c);
        if c.is_zero() {
            self.terms.clear();
            return;
        }
        for v in self.terms.values_mut() {
            *v = f.mul(v, &c);
        }
    }

    pub fn negated(&self) -> KoszulElement {
        let mut out = self.clone();
        out.scale(&-Scalar::one());
        out
    }

    pub fn sum(parts: impl IntoIterator<Item = KoszulElement>, n: usize, field: ExactField) -> Self {
        let mut acc = Self::zero(n, field);
        for p in parts {
            acc.add(&p);
        }
        acc
    }

    /// The Koszul differential: each wedge factor is peeled into the
    /// polynomial part with an alternating sign.
    pub fn differential(&self) -> KoszulElement {
        let mut out = Self::zero(self.n, self.field);
        for ((exps, wedge), c) in &self.terms {
            for k in 0..wedge.len() {
                let q = wedge[k];
                let mut e = exps.clone();
                e[(q.a - 1) as usize] += 1;
                e[(q.b - 1) as usize] += 1;
                let mut w = wedge.clone();
                w.remove(k);
                let sign = if k % 2 == 0 { c.clone() } else { self.field.neg(c) };
                out.add_term(sign, e, w);
            }
        }
        out
    }

    /// The DGA product: multiply polynomial parts, concatenate wedges with
    /// the sign of the sorting permutation.
    pub fn wedge_multiply(&self, other: &KoszulElement) -> KoszulElement {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(self.n, other.n, "variable count mismatch");
        let mut out = Self::zero(self.n, self.field);
        for ((e1, w1), c1) in &self.terms {
            for ((e2, w2), c2) in &other.terms {
                let e: Exponents = (0..self.n).map(|i| e1[i] + e2[i]).collect();
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(self.field.mul(c1, c2), e, w);
            }
        }
        out
    }

    /// (homological degree, internal degree) when all terms agree.
    pub fn bidegree(&self) -> Option<(usize, u32)> {
        let mut it = self.terms.keys();
        let (e0, w0) = it.next()?;
        let i = w0.len();
        let j = e0.iter().sum::<u32>() + 2 * i as u32;
        for (e, w) in it {
            if w.len() != i || e.iter().sum::<u32>() + 2 * w.len() as u32 != j {
                return None;
            }
        }
        Some((i, j))
    }

    pub fn term_multidegree(key: &BasisKey, n: usize) -> Vec<u32> {
        let (e, w) = key;
        let we = wedge_exponents(w, n);
        (0..n).map(|i| e[i] + we[i]).collect()
    }

    /// The common multidegree, when all terms agree.
    pub fn multidegree(&self) -> Option<Vec<u32>> {
        let mut it = self.terms.keys();
        let first = Self::term_multidegree(it.next()?, self.n);
        for k in it {
            if Self::term_multidegree(k, self.n) != first {
                return None;
            }
        }
        Some(first)
    }

    /// Split into multidegree-homogeneous components.
    pub fn split_by_multidegree(&self) -> BTreeMap<Vec<u32>, KoszulElement> {
        let mut out: BTreeMap<Vec<u32>, KoszulElement> = BTreeMap::new();
        for ((e, w), c) in &self.terms {
            let d = Self::term_multidegree(&(e.clone(), w.clone()), self.n);
            out.entry(d)
                .or_insert_with(|| Self::zero(self.n, self.field))
                .add_term(c.clone(), e.clone(), w.clone());
        }
        out
    }

    /// Coordinates with respect to an indexed basis; terms outside the basis
    /// are an error (the caller picked the wrong slice).
    pub fn to_vector(&self, index: &BTreeMap<BasisKey, usize>) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); index.len()];
        for (key, c) in &self.terms {
            let idx = index
                .get(key)
                .unwrap_or_else(|| panic!("term {key:?} outside the basis slice"));
            v[*idx] = c.clone();
        }
        v
    }

    pub fn from_vector(
        v: &[Scalar],
        basis: &[BasisKey],
        n: usize,
        field: ExactField,
    ) -> KoszulElement {
        let mut out = Self::zero(n, field);
        for (idx, c) in v.iter().enumerate() {
            if !c.is_zero() {
                let (e, w) = &basis[idx];
                out.add_term(c.clone(), e.clone(), w.clone());
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|((e, w), c)| {
                serde_json::json!({
                    "coeff": c.to_string(),
                    "exps": e,
                    "wedge": w.iter().map(|q| [q.a, q.b]).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({ "n": self.n, "char": self.field.characteristic(), "terms": terms })
    }
}

impl fmt::Display for KoszulElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((e, w), c)| {
                let exps = e.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
                let wedge = w.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(" ^ ");
                format!("{c} * x^({exps}) \u{2297} [{wedge}]")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A degree slice: a whole internal degree, or one multidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegreeSlice {
    Internal(u32),
    Multi(Vec<u32>),
}

/// All exponent vectors of length n with the given total degree.
pub fn compositions(total: u32, n: usize) -> Vec<Vec<u32>> {
    fn rec(total: u32, slots: usize, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            acc.push(total);
            out.push(acc.clone());
            acc.pop();
            return;
        }
        for v in 0..=total {
            acc.push(v);
            rec(total - v, slots - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, n, &mut Vec::new(), &mut out);
    out
}

/// Basis keys of the Koszul complex in homological degree i within a slice,
/// in a deterministic order.
pub fn component_basis(n: usize, i: usize, slice: &DegreeSlice) -> Vec<BasisKey> {
    let quads = all_quads(n);
    let mut out = Vec::new();
    match slice {
        DegreeSlice::Multi(delta) => {
            assert_eq!(delta.len(), n);
            let total: u32 = delta.iter().sum();
            if total < 2 * i as u32 {
                return out;
            }
            for w in quads.iter().copied().combinations(i) {
                let we = wedge_exponents(&w, n);
                if (0..n).all(|k| we[k] <= delta[k]) {
                    let mono: Vec<u32> = (0..n).map(|k| delta[k] - we[k]).collect();
                    out.push((mono, w));
                }
            }
        }
        DegreeSlice::Internal(j) => {
            if *j < 2 * i as u32 {
                return out;
            }
            let d = *j - 2 * i as u32;
            let monos = compositions(d, n);
            for w in quads.iter().copied().combinations(i) {
                for m in &monos {
                    out.push((m.clone(), w.clone()));
                }
            }
        }
    }
    out.sort();
    out
}

pub fn basis_index(basis: &[BasisKey]) -> BTreeMap<BasisKey, usize> {
    basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, k)| (k, i))
        .collect()
}

/// Matrix of the differential d_i : K_i -> K_{i-1} restricted to a slice.
/// Columns are indexed by the degree-i basis, rows by the degree-(i-1) basis.
pub fn differential_matrix(
    n: usize,
    i: usize,
    slice: &DegreeSlice,
    field: ExactField,
) -> (SparseMatrix, Vec<BasisKey>, Vec<BasisKey>) {
    let basis_i = component_basis(n, i, slice);
    let basis_lo = if i == 0 {
        Vec::new()
    } else {
        component_basis(n, i - 1, slice)
    };
    let index_lo = basis_index(&basis_lo);
    let mut m = SparseMatrix::zero(basis_lo.len(), basis_i.len());
    for (col, (e, w)) in basis_i.iter().enumerate() {
        let mut u = KoszulElement::zero(n, field);
        u.add_term(Scalar::one(), e.clone(), w.clone());
        for (key, c) in u.differential().terms() {
            let row = index_lo[key];
            m.set(row, col, c.clone());
        }
    }
    (m, basis_i, basis_lo)
}

/// dim H_i of the slice = dim ker d_i - rank d_{i+1}, computed per
/// multidegree slice and summed for internal-degree queries.
pub fn homology_dim(n: usize, i: usize, slice: &DegreeSlice, field: ExactField) -> usize {
    match slice {
        DegreeSlice::Internal(j) => compositions(*j, n)
            .into_iter()
            .map(|d| homology_dim(n, i, &DegreeSlice::Multi(d), field))
            .sum(),
        DegreeSlice::Multi(_) => {
            let (d_i, basis_i, _) = differential_matrix(n, i, slice, field);
            let (d_next, _, _) = differential_matrix(n, i + 1, slice, field);
            let r_i = rank(&d_i, &field);
            let r_next = rank(&d_next, &field);
            basis_i.len() - r_i - r_next
        }
    }
}

/// Echelonized boundary image for one multidegree slice, with the slice
/// basis alongside; supports canonical reduction of cycles mod boundaries.
pub struct BoundaryReducer {
    pub basis: Vec<BasisKey>,
    pub index: BTreeMap<BasisKey, usize>,
    pub echelon: Echelon,
    n: usize,
    field: ExactField,
}

impl BoundaryReducer {
    pub fn new(n: usize, i: usize, delta: &[u32], field: ExactField) -> Self {
        let slice = DegreeSlice::Multi(delta.to_vec());
        let basis = component_basis(n, i, &slice);
        let index = basis_index(&basis);
        let (d_next, _, _) = differential_matrix(n, i + 1, &slice, field);
        let mut echelon = Echelon::new(field, basis.len());
        for c in 0..d_next.cols() {
            echelon.insert(&d_next.column(c));
        }
        BoundaryReducer {
            basis,
            index,
            echelon,
            n,
            field,
        }
    }

    pub fn reduce_vector(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.echelon.reduce(v)
    }

    pub fn reduce_element(&self, u: &KoszulElement) -> KoszulElement {
        let v = u.to_vector(&self.index);
        let r = self.echelon.reduce(&v);
        KoszulElement::from_vector(&r, &self.basis, self.n, self.field)
    }
}

pub fn is_cycle(u: &KoszulElement) -> bool {
    u.differential().is_zero()
}

/// Span membership against the boundary image, per multidegree component.
pub fn is_boundary(u: &KoszulElement) -> bool {
    if u.is_zero() {
        return true;
    }
    let field = u.field();
    let n = u.n();
    for (delta, comp) in u.split_by_multidegree() {
        let i = comp.bidegree().expect("component is homogeneous").0;
        let slice = DegreeSlice::Multi(delta);
        let basis = component_basis(n, i, &slice);
        let index = basis_index(&basis);
        let (d_next, _, _) = differential_matrix(n, i + 1, &slice, field);
        let v = comp.to_vector(&index);
        if !in_span(&v, &d_next, &field).is_in_span() {
            return false;
        }
    }
    true
}

pub fn class_is_nonzero(u: &KoszulElement) -> bool {
    is_cycle(u) && !u.is_zero() && !is_boundary(u)
}

/// Cycles whose classes form a basis of the homology slice, each reduced to
/// its canonical representative mod boundaries.
pub fn homology_rep_basis(
    n: usize,
    i: usize,
    slice: &DegreeSlice,
    field: ExactField,
) -> Vec<KoszulElement> {
    match slice {
        DegreeSlice::Internal(j) => compositions(*j, n)
            .into_iter()
            .flat_map(|d| homology_rep_basis(n, i, &DegreeSlice::Multi(d), field))
            .collect(),
        DegreeSlice::Multi(delta) => {
            let ms = DegreeSlice::Multi(delta.clone());
            let (d_i, basis_i, _) = differential_matrix(n, i, &ms, field);
            let reducer = BoundaryReducer::new(n, i, delta, field);
            let mut homology = Echelon::new(field, basis_i.len());
            let mut reps = Vec::new();
            for kv in kernel_basis(&d_i, &field) {
                let reduced = reducer.reduce_vector(&kv);
                if homology.insert(&reduced) {
                    reps.push(KoszulElement::from_vector(&reduced, &basis_i, n, field));
                }
            }
            reps
        }
    }
}

/// Verify that every even-internal-degree homology slice with i <= i_max is
/// spanned by products of lowest-strand representatives.
pub fn lowest_strand_span_check(n: usize, i_max: usize, field: ExactField) -> Report {
    assert_eq!(field.characteristic(), 0, "theorem regime is characteristic 0");
    let mut report = Report::new();
    // lowest-strand representatives per homological degree
    let strand: Vec<Vec<KoszulElement>> = (0..=i_max)
        .map(|t| homology_rep_basis(n, t, &DegreeSlice::Internal(2 * t as u32 + 1), field))
        .collect();
    for i in 0..=i_max {
        let j_lo = 2 * i as u32;
        let j_hi = 2 * i as u32 + n as u32;
        for j in (j_lo..=j_hi).filter(|j| j % 2 == 0) {
            let total = homology_dim(n, i, &DegreeSlice::Internal(j), field);
            let inputs = serde_json::json!({ "n": n, "i": i, "j": j, "dim": total });
            if total == 0 {
                report.push(Check::bool(
                    format!("lowest-strand: empty slice i={i} j={j} (vacuous)"),
                    inputs,
                    true,
                ));
                continue;
            }
            if i == 0 && j == 0 {
                // the unit class; spanned by the empty product
                report.push(Check::bool(
                    "lowest-strand: unit class in degree (0,0)".to_string(),
                    inputs,
                    true,
                ));
                continue;
            }
            // number of strand factors forced by the degrees
            let m = (j - 2 * i as u32) as usize;
            let mut products: Vec<KoszulElement> = Vec::new();
            if m >= 1 {
                // multisets t_1 <= ... <= t_m with sum i
                let mut stack = Vec::new();
                collect_multisets(i, m, 0, &mut stack, &mut |ts: &[usize]| {
                    let mut factor_sets: Vec<KoszulElement> = vec![KoszulElement::one(n, field)];
                    for &t in ts {
                        let mut next = Vec::new();
                        for f in &factor_sets {
                            for r in &strand[t] {
                                next.push(f.wedge_multiply(r));
                            }
                        }
                        factor_sets = next;
                    }
                    products.extend(factor_sets);
                });
            }
            // span the slice, per multidegree
            let mut per_delta: BTreeMap<Vec<u32>, (BoundaryReducer, Echelon)> = BTreeMap::new();
            let mut spanned = 0usize;
            for u in &products {
                if u.is_zero() {
                    continue;
                }
                for (delta, comp) in u.split_by_multidegree() {
                    let entry = per_delta.entry(delta.clone()).or_insert_with(|| {
                        let reducer = BoundaryReducer::new(n, i, &delta, field);
                        let dim = reducer.basis.len();
                        (reducer, Echelon::new(field, dim))
                    });
                    let v = comp.to_vector(&entry.0.index);
                    let r = entry.0.reduce_vector(&v);
                    if entry.1.insert(&r) {
                        spanned += 1;
                    }
                }
            }
            report.push(Check::new(
                format!("lowest-strand: H_{i} in internal degree {j} spanned by {m}-fold strand products"),
                inputs,
                serde_json::json!(total),
                serde_json::json!(spanned),
            ));
        }
    }
    report
}

fn collect_multisets(
    sum: usize,
    slots: usize,
    min: usize,
    stack: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if slots == 0 {
        if sum == 0 {
            f(stack);
        }
        return;
    }
    for t in min..=sum {
        stack.push(t);
        collect_multisets(sum - t, slots - 1, t, stack, f);
        stack.pop();
    }
}

/// Random homogeneous element of bidegree (i, j): a handful of random basis
/// terms with small integer coefficients.
pub fn random_homogeneous(
    n: usize,
    i: usize,
    j: u32,
    field: ExactField,
    rng: &mut impl Rng,
) -> KoszulElement {
    let basis = component_basis(n, i, &DegreeSlice::Internal(j));
    let mut u = KoszulElement::zero(n, field);
    if basis.is_empty() {
        return u;
    }
    let terms = rng.gen_range(1..=4usize);
    for _ in 0..terms {
        let (e, w) = basis[rng.gen_range(0..basis.len())].clone();
        let c = crate::linalg::scalar_from_i64(rng.gen_range(-5i64..=5));
        u.add_term(c, e, w);
    }
    u
}
