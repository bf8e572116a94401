//! The infinitesimal gl(n) action on the Koszul complex: derivation
//! operators E_{ij} sending x_j to x_i, closures of homology classes under
//! the action, and the resulting isotypic and decomposition verifications.

use crate::cycles::squarefree_z_product;
use crate::koszul::{
    basis_index, class_is_nonzero, component_basis, differential_matrix, homology_dim, is_cycle,
    BasisKey, DegreeSlice, KoszulElement,
};
use crate::linalg::{Echelon, ExactField, Scalar};
use crate::partitions::{
    frobenius, schur_dim, schur_expand, schur_poly, self_conjugate_enum, Partition, SymPoly,
};
use crate::report::{Check, Report};
use num_bigint::BigInt;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GlError {
    #[error("seed is not a cycle")]
    NonCycleSeed,
    #[error("seed bidegree {0:?} does not match requested {1:?}")]
    BidegreeMismatch(Option<(usize, u32)>, (usize, u32)),
    #[error("operator index out of range: E_{0},{1} with n = {2}")]
    IndexRange(u8, u8, usize),
}

/// The derivation sending x_j to x_i (1-based indices).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ElementaryOperator {
    pub i: u8,
    pub j: u8,
}

impl ElementaryOperator {
    pub fn new(i: u8, j: u8) -> Self {
        assert!(i >= 1 && j >= 1);
        ElementaryOperator { i, j }
    }
}

/// Leibniz action on the polynomial factor and on each wedge slot, each
/// quadratic monomial treated as a degree-2 polynomial.
pub fn act(e: ElementaryOperator, u: &KoszulElement) -> KoszulElement {
    let n = u.n();
    let field = u.field();
    assert!((e.i as usize) <= n && (e.j as usize) <= n, "operator out of range");
    let src = (e.j - 1) as usize;
    let dst = (e.i - 1) as usize;
    let mut out = KoszulElement::zero(n, field);
    for ((exps, wedge), c) in u.terms() {
        // polynomial factor
        if exps[src] > 0 {
            let mut ne = exps.clone();
            ne[src] -= 1;
            ne[dst] += 1;
            let coeff = field.mul(c, &crate::linalg::scalar_from_i64(exps[src] as i64));
            out.add_term(coeff, ne, wedge.clone());
        }
        // each wedge slot
        for (k, q) in wedge.iter().enumerate() {
            let (a, b) = (q.a(), q.b());
            let mult_and_new = if a == e.j && b == e.j {
                Some((2i64, crate::koszul::QuadMonomial::new(e.i, e.j)))
            } else if a == e.j {
                Some((1, crate::koszul::QuadMonomial::new(e.i, b)))
            } else if b == e.j {
                Some((1, crate::koszul::QuadMonomial::new(a, e.i)))
            } else {
                None
            };
            if let Some((mult, nq)) = mult_and_new {
                let mut w = wedge.clone();
                w[k] = nq;
                let coeff = field.mul(c, &crate::linalg::scalar_from_i64(mult));
                out.add_term(coeff, exps.clone(), w);
            }
        }
    }
    out
}

/// A homology slice of fixed bidegree with its boundary echelon, for doing
/// homology arithmetic on canonical representatives.
pub struct HomologySlice {
    pub n: usize,
    pub bidegree: (usize, u32),
    pub basis: Vec<BasisKey>,
    pub index: BTreeMap<BasisKey, usize>,
    pub boundaries: Echelon,
    field: ExactField,
}

impl HomologySlice {
    pub fn new(n: usize, i: usize, j: u32, field: ExactField) -> Self {
        let slice = DegreeSlice::Internal(j);
        let basis = component_basis(n, i, &slice);
        let index = basis_index(&basis);
        let (d_next, _, _) = differential_matrix(n, i + 1, &slice, field);
        let mut boundaries = Echelon::new(field, basis.len());
        for c in 0..d_next.cols() {
            boundaries.insert(&d_next.column(c));
        }
        HomologySlice {
            n,
            bidegree: (i, j),
            basis,
            index,
            boundaries,
            field,
        }
    }

    pub fn reduce(&self, u: &KoszulElement) -> Vec<Scalar> {
        self.boundaries.reduce(&u.to_vector(&self.index))
    }

    pub fn element(&self, v: &[Scalar]) -> KoszulElement {
        KoszulElement::from_vector(v, &self.basis, self.n, self.field)
    }
}

/// The smallest gl(n)-stable subspace of homology containing the seed
/// classes: closure basis (echelon rows over the slice coordinates) plus the
/// slice it lives in.
pub fn gl_closure(
    seeds: &[KoszulElement],
    n: usize,
    bidegree: (usize, u32),
    field: ExactField,
) -> Result<(Echelon, HomologySlice), GlError> {
    let (i, j) = bidegree;
    let slice = HomologySlice::new(n, i, j, field);
    let mut span = Echelon::new(field, slice.basis.len());
    let mut queue: Vec<KoszulElement> = Vec::new();
    for s in seeds {
        if !is_cycle(s) {
            return Err(GlError::NonCycleSeed);
        }
        if !s.is_zero() && s.bidegree() != Some(bidegree) {
            return Err(GlError::BidegreeMismatch(s.bidegree(), bidegree));
        }
        let r = slice.reduce(s);
        if span.insert(&r) {
            queue.push(slice.element(&r));
        }
    }
    // breadth-first over operators (a, b) in lex order until the span stops growing
    while let Some(u) = queue.pop() {
        for a in 1..=n as u8 {
            for b in 1..=n as u8 {
                let v = act(ElementaryOperator::new(a, b), &u);
                if v.is_zero() {
                    continue;
                }
                let r = slice.reduce(&v);
                if span.insert(&r) {
                    queue.push(slice.element(&r));
                }
            }
        }
    }
    Ok((span, slice))
}

pub fn gl_module_dim(
    seeds: &[KoszulElement],
    n: usize,
    bidegree: (usize, u32),
    field: ExactField,
) -> Result<usize, GlError> {
    gl_closure(seeds, n, bidegree, field).map(|(span, _)| span.rank())
}

/// Weight multiset of a multidegree-graded subspace: multidegree -> dimension
/// of the corresponding weight space.
pub fn weight_multiset(span: &Echelon, slice: &HomologySlice) -> BTreeMap<Vec<u32>, usize> {
    let n = slice.n;
    // group coordinates by the multidegree of their basis key
    let mut coords_by_delta: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
    for (idx, key) in slice.basis.iter().enumerate() {
        let d = KoszulElement::term_multidegree(key, n);
        coords_by_delta.entry(d).or_default().push(idx);
    }
    let mut out = BTreeMap::new();
    for (delta, coords) in coords_by_delta {
        let mut ech = Echelon::new(slice.field, coords.len());
        for row in span.rows() {
            let restricted: Vec<Scalar> = coords.iter().map(|&c| row[c].clone()).collect();
            ech.insert(&restricted);
        }
        if ech.rank() > 0 {
            out.insert(delta, ech.rank());
        }
    }
    out
}

/// Verify that the hook-cycle product for a self-conjugate lambda generates
/// a gl(n)-module of the right dimension and weight multiset, from a nonzero
/// homology class.
pub fn isotypic_verify(lambda: &Partition, n: usize, field: ExactField) -> Report {
    let mut report = Report::new();
    let inputs = serde_json::json!({ "lambda": lambda.to_string(), "n": n });
    let mu = match frobenius(lambda) {
        Ok(m) => m,
        Err(e) => {
            report.push(Check::new(
                format!("isotypic: {lambda} must be self-conjugate"),
                inputs,
                serde_json::json!("self-conjugate"),
                serde_json::json!(e.to_string()),
            ));
            return report;
        }
    };
    assert!(lambda.len() <= n, "length of lambda exceeds n");
    let subset: Vec<usize> = mu.arms().iter().map(|&m| m as usize).collect();
    let seed = squarefree_z_product(&subset, n, field).unwrap();
    let bidegree = (mu.weight() as usize, lambda.weight());
    report.push(Check::bool(
        format!("isotypic: seed product for {lambda} has a nonzero class"),
        inputs.clone(),
        class_is_nonzero(&seed),
    ));
    let expected_dim = schur_dim(lambda, n);
    let (span, slice) = gl_closure(&[seed], n, bidegree, field).expect("seed is a cycle");
    report.push(Check::new(
        format!("isotypic: closure dimension for {lambda} equals Schur dimension"),
        inputs.clone(),
        serde_json::json!(expected_dim.to_string()),
        serde_json::json!(BigInt::from(span.rank()).to_string()),
    ));
    let weights = weight_multiset(&span, &slice);
    let mut expected_weights: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    for (e, c) in schur_poly(lambda, n) {
        let c: usize = c.to_string().parse().expect("positive SSYT count");
        expected_weights.insert(e, c);
    }
    report.push(Check::new(
        format!("isotypic: weight multiset for {lambda} matches Schur polynomial"),
        inputs,
        serde_json::json!(expected_weights
            .iter()
            .map(|(k, v)| (format!("{k:?}"), *v))
            .collect::<Vec<_>>()),
        serde_json::json!(weights
            .iter()
            .map(|(k, v)| (format!("{k:?}"), *v))
            .collect::<Vec<_>>()),
    ));
    report
}

/// Assemble the multigraded character of a homology bidegree, Schur-expand
/// it, and compare against the predicted multiplicity-free self-conjugate set.
pub fn decomposition_verify(n: usize, i: usize, j: u32, field: ExactField) -> Report {
    let mut report = Report::new();
    let mut character = SymPoly::new();
    for delta in crate::koszul::compositions(j, n) {
        let d = homology_dim(n, i, &DegreeSlice::Multi(delta.clone()), field);
        if d > 0 {
            character.insert(delta, BigInt::from(d));
        }
    }
    let expansion = schur_expand(&character, n).expect("character is symmetric");
    let got: BTreeMap<String, String> = expansion
        .entries
        .iter()
        .map(|(p, c)| (p.to_string(), c.to_string()))
        .collect();
    let expected: BTreeMap<String, String> = self_conjugate_enum(n, i as u32, j)
        .into_iter()
        .map(|p| (p.to_string(), "1".to_string()))
        .collect();
    report.push(Check::new(
        format!("decomposition: H_{i} internal degree {j} over n={n}"),
        serde_json::json!({ "n": n, "i": i, "j": j }),
        serde_json::json!(expected),
        serde_json::json!(got),
    ));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::hook_cycle;
    use crate::linalg::scalar_from_i64 as q;
    use crate::partitions::Partition;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rat() -> ExactField {
        ExactField::rationals()
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn act_on_variable() {
        let f = rat();
        let u = KoszulElement::variable(2, 2, f);
        let v = act(ElementaryOperator::new(1, 2), &u);
        assert_eq!(v, KoszulElement::variable(1, 2, f));
    }

    #[test]
    fn act_on_square_wedge() {
        // E_{1,2} on 1 (x) x2^2 = 2 * (1 (x) x1x2)
        let f = rat();
        let mut u = KoszulElement::zero(2, f);
        u.add_term(q(1), vec![0, 0], vec![crate::koszul::QuadMonomial::new(2, 2)]);
        let v = act(ElementaryOperator::new(1, 2), &u);
        let mut expected = KoszulElement::zero(2, f);
        expected.add_term(q(2), vec![0, 0], vec![crate::koszul::QuadMonomial::new(1, 2)]);
        assert_eq!(v, expected);
    }

    #[test]
    fn act_equivariance_z1() {
        let f = rat();
        let z1 = hook_cycle(1, 2, f).unwrap();
        let moved = act(ElementaryOperator::new(2, 1), &z1);
        assert!(is_cycle(&moved));
    }

    #[test]
    fn act_commutes_with_differential() {
        let f = rat();
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..40 {
            let n = rng.gen_range(2..=4usize);
            let i = rng.gen_range(1..=3usize);
            let u = crate::koszul::random_homogeneous(n, i, 2 * i as u32 + 2, f, &mut rng);
            let a = rng.gen_range(1..=n as u8);
            let b = rng.gen_range(1..=n as u8);
            let e = ElementaryOperator::new(a, b);
            let mut lhs = act(e, &u).differential();
            let rhs = act(e, &u.differential());
            lhs.add(&rhs.negated());
            assert!(lhs.is_zero(), "n={n} i={i} E_{a},{b}");
        }
    }

    #[test]
    fn commutator_identity() {
        // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb on random elements
        let f = rat();
        let mut rng = ChaCha8Rng::seed_from_u64(57);
        for _ in 0..30 {
            let n = 3usize;
            let i = rng.gen_range(0..=2usize);
            let u = crate::koszul::random_homogeneous(n, i, 2 * i as u32 + 2, f, &mut rng);
            let (a, b, c, d) = (
                rng.gen_range(1..=3u8),
                rng.gen_range(1..=3u8),
                rng.gen_range(1..=3u8),
                rng.gen_range(1..=3u8),
            );
            let eab = ElementaryOperator::new(a, b);
            let ecd = ElementaryOperator::new(c, d);
            let mut lhs = act(eab, &act(ecd, &u));
            lhs.add(&act(ecd, &act(eab, &u)).negated());
            let mut rhs = KoszulElement::zero(n, f);
            if b == c {
                rhs.add(&act(ElementaryOperator::new(a, d), &u));
            }
            if d == a {
                rhs.add(&act(ElementaryOperator::new(c, b), &u).negated());
            }
            lhs.add(&rhs.negated());
            assert!(lhs.is_zero(), "E_{a}{b}, E_{c}{d}");
        }
    }

    #[test]
    fn closure_dim_z1_n2() {
        let f = rat();
        let z1 = hook_cycle(1, 2, f).unwrap();
        let d = gl_module_dim(&[z1], 2, (1, 3), f).unwrap();
        assert_eq!(d, 2);
    }

    #[test]
    fn closure_dim_z0z1_n2() {
        let f = rat();
        let seed = squarefree_z_product(&[0, 1], 2, f).unwrap();
        let d = gl_module_dim(&[seed], 2, (1, 4), f).unwrap();
        assert_eq!(d, 1);
    }

    #[test]
    fn closure_zero_seed() {
        let f = rat();
        let z = KoszulElement::zero(2, f);
        assert_eq!(gl_module_dim(&[z], 2, (1, 3), f).unwrap(), 0);
    }

    #[test]
    fn closure_rejects_non_cycle() {
        let f = rat();
        let mut u = KoszulElement::zero(2, f);
        u.add_term(q(1), vec![0, 0], vec![crate::koszul::QuadMonomial::new(1, 2)]);
        assert_eq!(
            gl_module_dim(&[u], 2, (1, 2), f),
            Err(GlError::NonCycleSeed)
        );
    }

    #[test]
    fn isotypic_small() {
        let f = rat();
        for (lam, n) in [(p(&[2, 1]), 2), (p(&[2, 2]), 2), (p(&[3, 2, 1]), 3)] {
            let r = isotypic_verify(&lam, n, f);
            assert!(r.all_passed(), "{lam}: {:#?}", r.checks);
        }
    }

    #[test]
    fn decomposition_n2() {
        let f = rat();
        let r = decomposition_verify(2, 1, 3, f);
        assert!(r.all_passed(), "{:?}", r.checks);
        for j in 0..=8u32 {
            let r = decomposition_verify(2, 2, j, f);
            assert!(r.all_passed(), "j={j}: {:?}", r.checks);
        }
    }

    #[test]
    fn decomposition_n3_top() {
        let f = rat();
        let r = decomposition_verify(3, 3, 9, f);
        assert!(r.all_passed(), "{:?}", r.checks);
    }
}
