//! The matching complex of the complete graph, its reduced simplicial
//! homology, the square-free comparison with Koszul homology, and the
//! characteristic-2 counterexample.

use crate::cycles::z_cycle_vars;
use crate::koszul::{
    basis_index, class_is_nonzero, component_basis, homology_dim, is_cycle, DegreeSlice,
    KoszulElement, QuadMonomial,
};
use crate::linalg::{in_span, rank, smith_invariant_factors, ExactField, Scalar, SparseMatrix};
use crate::report::{Check, Report};
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// A face: pairwise-disjoint unordered pairs from {1, ..., n}, kept sorted.
pub type MatchingFace = Vec<(u8, u8)>;

/// The matching complex as a chain complex with the empty face included,
/// so homology is reduced. `faces[k]` holds the k-edge faces (dimension k-1).
pub struct MatchingComplex {
    pub n: usize,
    pub faces: Vec<Vec<MatchingFace>>,
}

pub fn matching_complex(n: usize) -> MatchingComplex {
    let pairs: Vec<(u8, u8)> = (1..=n as u8)
        .flat_map(|a| ((a + 1)..=n as u8).map(move |b| (a, b)))
        .collect();
    let max_edges = n / 2;
    let mut faces: Vec<Vec<MatchingFace>> = vec![vec![Vec::new()]];
    for k in 1..=max_edges {
        let level: Vec<MatchingFace> = pairs
            .iter()
            .copied()
            .combinations(k)
            .filter(|m| {
                let mut seen = BTreeSet::new();
                m.iter().all(|&(a, b)| seen.insert(a) && seen.insert(b))
            })
            .collect();
        if level.is_empty() {
            break;
        }
        faces.push(level);
    }
    MatchingComplex { n, faces }
}

impl MatchingComplex {
    pub fn num_faces(&self, k: usize) -> usize {
        self.faces.get(k).map_or(0, |f| f.len())
    }

    /// Boundary matrix from k-edge faces to (k-1)-edge faces, alternating
    /// signs under the lexicographic pair order.
    pub fn boundary_matrix(&self, k: usize) -> SparseMatrix {
        if k == 0 {
            return SparseMatrix::zero(0, self.num_faces(0));
        }
        if k >= self.faces.len() {
            return SparseMatrix::zero(self.num_faces(k - 1), 0);
        }
        let lower = &self.faces[k - 1];
        let index: BTreeMap<&MatchingFace, usize> =
            lower.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let mut m = SparseMatrix::zero(lower.len(), self.faces[k].len());
        for (col, face) in self.faces[k].iter().enumerate() {
            for (i, _) in face.iter().enumerate() {
                let mut sub = face.clone();
                sub.remove(i);
                let row = index[&sub];
                let sign = if i % 2 == 0 { Scalar::one() } else { -Scalar::one() };
                m.set(row, col, sign);
            }
        }
        m
    }

    pub fn euler_characteristic_reduced(&self) -> i64 {
        // alternating sum over dimensions including the empty face
        let mut chi = 0i64;
        for (k, level) in self.faces.iter().enumerate() {
            let sign = if k % 2 == 0 { -1 } else { 1 };
            chi += sign * level.len() as i64;
        }
        chi
    }

    pub fn faces_json(&self) -> serde_json::Value {
        serde_json::json!(self
            .faces
            .iter()
            .map(|level| level
                .iter()
                .map(|f| f.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>())
                .collect::<Vec<_>>())
            .collect::<Vec<_>>())
    }
}

/// Rank of the reduced homology of the matching complex in the given
/// dimension (-1 allowed).
pub fn reduced_homology(n: usize, dim: i64, field: ExactField) -> usize {
    let mc = matching_complex(n);
    let k = (dim + 1) as usize;
    if dim < -1 || k >= mc.faces.len() {
        return 0;
    }
    let d_k = mc.boundary_matrix(k);
    let d_next = mc.boundary_matrix(k + 1);
    mc.num_faces(k) - rank(&d_k, &field) - rank(&d_next, &field)
}

/// Z-torsion of the reduced homology in the given dimension: the invariant
/// factors > 1 of the incoming boundary matrix.
pub fn torsion(n: usize, dim: i64) -> Vec<BigInt> {
    let mc = matching_complex(n);
    let k = (dim + 1) as usize;
    if dim < -1 || k >= mc.faces.len() {
        return Vec::new();
    }
    let d_next = mc.boundary_matrix(k + 1);
    smith_invariant_factors(&d_next)
        .into_iter()
        .filter(|f| *f > BigInt::one())
        .collect()
}

fn one_skeleton(n: usize) -> (Vec<MatchingFace>, Vec<(usize, usize)>) {
    let mc = matching_complex(n);
    let vertices = mc.faces.get(1).cloned().unwrap_or_default();
    let index: BTreeMap<&MatchingFace, usize> =
        vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut edges = Vec::new();
    for face in mc.faces.get(2).unwrap_or(&Vec::new()) {
        let u = index[&vec![face[0]]];
        let v = index[&vec![face[1]]];
        edges.push((u.min(v), u.max(v)));
    }
    (vertices, edges)
}

fn bfs_distances(adj: &[Vec<usize>], start: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    dist[start] = Some(0);
    let mut q = VecDeque::from([start]);
    while let Some(u) = q.pop_front() {
        for &v in &adj[u] {
            if dist[v].is_none() {
                dist[v] = Some(dist[u].unwrap() + 1);
                q.push_back(v);
            }
        }
    }
    dist
}

fn graph_girth(adj: &[Vec<usize>]) -> Option<usize> {
    // BFS from every vertex; a cross or back edge closes a shortest cycle
    let mut best: Option<usize> = None;
    for start in 0..adj.len() {
        let mut dist = vec![usize::MAX; adj.len()];
        let mut parent = vec![usize::MAX; adj.len()];
        dist[start] = 0;
        let mut q = VecDeque::from([start]);
        while let Some(u) = q.pop_front() {
            for &v in &adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push_back(v);
                } else if parent[u] != v {
                    let cycle = dist[u] + dist[v] + 1;
                    if best.map_or(true, |b| cycle < b) {
                        best = Some(cycle);
                    }
                }
            }
        }
    }
    best
}

/// The one-skeleton of the matching complex on 5 points: 10 vertices,
/// 15 edges, 3-regular, girth 5, diameter 2 (the Petersen graph).
pub fn petersen_check() -> Report {
    let mut report = Report::new();
    let (vertices, edges) = one_skeleton(5);
    let inputs = serde_json::json!({ "n": 5 });
    report.push(Check::new(
        "petersen: 10 vertices",
        inputs.clone(),
        serde_json::json!(10),
        serde_json::json!(vertices.len()),
    ));
    report.push(Check::new(
        "petersen: 15 edges",
        inputs.clone(),
        serde_json::json!(15),
        serde_json::json!(edges.len()),
    ));
    let mut adj = vec![Vec::new(); vertices.len()];
    for &(u, v) in &edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    report.push(Check::bool(
        "petersen: 3-regular",
        inputs.clone(),
        adj.iter().all(|a| a.len() == 3),
    ));
    report.push(Check::new(
        "petersen: girth 5",
        inputs.clone(),
        serde_json::json!(5),
        serde_json::json!(graph_girth(&adj)),
    ));
    let diameter = (0..vertices.len())
        .map(|s| {
            bfs_distances(&adj, s)
                .into_iter()
                .map(|d| d.expect("connected"))
                .max()
                .unwrap()
        })
        .max()
        .unwrap();
    report.push(Check::new(
        "petersen: diameter 2",
        inputs,
        serde_json::json!(2),
        serde_json::json!(diameter),
    ));
    report
}

/// The square-free multidegree component of Koszul homology against reduced
/// matching-complex homology, degree by degree.
pub fn squarefree_slice_compare(n: usize, i_max: usize, field: ExactField) -> Report {
    let mut report = Report::new();
    let delta = vec![1u32; n];
    for i in 0..=i_max {
        let koszul_side = homology_dim(n, i, &DegreeSlice::Multi(delta.clone()), field);
        let simplicial_side = reduced_homology(n, i as i64 - 1, field);
        report.push(Check::new(
            format!(
                "squarefree slice: H_{i} of the Koszul side vs reduced H_{} of the matching complex (n={n}, char={})",
                i as i64 - 1,
                field.characteristic()
            ),
            serde_json::json!({ "n": n, "i": i, "char": field.characteristic() }),
            serde_json::json!(simplicial_side),
            serde_json::json!(koszul_side),
        ));
    }
    report
}

/// The displayed five-term element of Sym^1 (x) /\^2 Sym^2 for n = 5.
pub fn pentagon_witness(field: ExactField) -> KoszulElement {
    let n = 5;
    let mut z = KoszulElement::zero(n, field);
    let terms: [(usize, (u8, u8), (u8, u8)); 5] = [
        (1, (2, 3), (4, 5)),
        (3, (4, 5), (1, 2)),
        (5, (1, 2), (3, 4)),
        (2, (3, 4), (1, 5)),
        (4, (1, 5), (2, 3)),
    ];
    for (v, q1, q2) in terms {
        let mut e = vec![0u32; n];
        e[v - 1] = 1;
        z.add_term(
            Scalar::one(),
            e,
            vec![QuadMonomial::new(q1.0, q1.1), QuadMonomial::new(q2.0, q2.1)],
        );
    }
    z
}

/// The square-free t=2 generators with multidegree (1,1,1,1,1): a-sequences
/// of three distinct variables, b the two remaining variables.
fn squarefree_generators(field: ExactField) -> Vec<KoszulElement> {
    let n = 5;
    let mut out = Vec::new();
    for a in (1..=n as u8).combinations(3) {
        let b: Vec<u8> = (1..=n as u8).filter(|v| !a.contains(v)).collect();
        out.push(z_cycle_vars(&a, &b, n, field).unwrap());
    }
    out
}

/// The characteristic-2 counterexample: the pentagon class is a nonzero
/// GF(2) cycle outside the span of the hexagon generators, certified by the
/// all-ones coefficient functional, yet inside their span over Q.
pub fn char2_witness() -> Report {
    let mut report = Report::new();
    let gf2 = ExactField::prime(2).unwrap();
    let rat = ExactField::rationals();
    let n = 5;
    let z2 = pentagon_witness(gf2);
    let inputs = serde_json::json!({ "n": n });
    report.push(Check::bool(
        "char2: pentagon element is a cycle over GF(2)",
        inputs.clone(),
        is_cycle(&z2),
    ));
    report.push(Check::bool(
        "char2: pentagon class is nonzero over GF(2)",
        inputs.clone(),
        class_is_nonzero(&z2),
    ));
    // slice coordinates
    let delta = vec![1u32; n];
    let slice = DegreeSlice::Multi(delta);
    let basis = component_basis(n, 2, &slice);
    let index = basis_index(&basis);
    // each generator has coefficient sum 0 mod 2; the witness has sum 1
    let gens2 = squarefree_generators(gf2);
    let mut gen_sums_even = true;
    for g in &gens2 {
        let sum: Scalar = g
            .to_vector(&index)
            .iter()
            .fold(Scalar::zero(), |acc, c| gf2.add(&acc, c));
        if !gf2.is_zero(&sum) {
            gen_sums_even = false;
        }
    }
    report.push(Check::bool(
        "char2: all-ones functional vanishes on every hexagon generator mod 2",
        inputs.clone(),
        gen_sums_even,
    ));
    let z_sum: Scalar = z2
        .to_vector(&index)
        .iter()
        .fold(Scalar::zero(), |acc, c| gf2.add(&acc, c));
    report.push(Check::new(
        "char2: all-ones functional equals 1 on the pentagon element mod 2",
        inputs.clone(),
        serde_json::json!("1"),
        serde_json::json!(gf2.reduce(&z_sum).to_string()),
    ));
    // span membership fails over GF(2)
    let cols2: Vec<Vec<Scalar>> = gens2.iter().map(|g| g.to_vector(&index)).collect();
    let m2 = SparseMatrix::from_columns(basis.len(), &cols2);
    report.push(Check::bool(
        "char2: pentagon element outside the generator span over GF(2)",
        inputs.clone(),
        !in_span(&z2.to_vector(&index), &m2, &gf2).is_in_span(),
    ));
    // ... but membership holds over Q
    let zq = pentagon_witness(rat);
    let gensq = squarefree_generators(rat);
    let colsq: Vec<Vec<Scalar>> = gensq.iter().map(|g| g.to_vector(&index)).collect();
    let mq = SparseMatrix::from_columns(basis.len(), &colsq);
    report.push(Check::bool(
        "char2: pentagon element inside the generator span over Q",
        inputs,
        in_span(&zq.to_vector(&index), &mq, &rat).is_in_span(),
    ));
    report
}
