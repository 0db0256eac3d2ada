//! The simplex category, standard simplices, finite complexes, and normalized
//! chains/cochains over F₂.
//!
//! Morphisms `[n] -> [d]` are order-preserving value tables generated by the
//! coface maps `delta(i, d)` and codegeneracy maps `sigma(i, d)`. Basis elements
//! of normalized chains are the non-degenerate simplices, represented as strictly
//! increasing vertex tuples; applying a vertex map that fails to be injective on
//! a simplex sends it to zero, which is exactly the normalization quotient.
//!
//! The vertex order is part of the data of a complex: cup-i products at the
//! cochain level depend on it by design.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::f2::F2Vector;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SimplicialError {
    #[error("vertex tuple {0:?} is not strictly increasing")]
    NotStrictlyIncreasing(Vec<usize>),
    #[error("a simplex needs at least one vertex")]
    EmptySimplex,
    #[error("morphism values {values:?} are not an order-preserving map into [{target_dim}]")]
    InvalidMorphism {
        values: Vec<usize>,
        target_dim: usize,
    },
    #[error("cannot compose: source dimension {lhs_source} does not match target dimension {rhs_target}")]
    CompositionMismatch {
        lhs_source: usize,
        rhs_target: usize,
    },
    #[error("vertex {vertex} is outside the vertex range 0..{vertex_count}")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("maximal simplex {outer:?} contains maximal simplex {inner:?}")]
    MaximalContainment {
        outer: Vec<usize>,
        inner: Vec<usize>,
    },
    #[error("simplex {simplex:?} has dimension {got}, expected {expected}")]
    DegreeMismatch {
        simplex: Vec<usize>,
        expected: usize,
        got: usize,
    },
    #[error("vertex map is not order-preserving on simplex {simplex:?}")]
    NotOrderPreserving { simplex: Vec<usize> },
    #[error("vertex map of length {len} does not cover vertex {vertex}")]
    MapTooShort { vertex: usize, len: usize },
    #[error("permutation {perm:?} is not a bijection on 0..{vertex_count}")]
    NotAPermutation {
        perm: Vec<usize>,
        vertex_count: usize,
    },
}

/// An order-preserving map `[n] -> [d]` in the simplex category.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimplexMorphism {
    target_dim: usize,
    values: Vec<usize>,
}

impl SimplexMorphism {
    pub fn new(target_dim: usize, values: Vec<usize>) -> Result<Self, SimplicialError> {
        let weakly_increasing = values.windows(2).all(|w| w[0] <= w[1]);
        if values.is_empty() || !weakly_increasing || values.iter().any(|&v| v > target_dim) {
            return Err(SimplicialError::InvalidMorphism { values, target_dim });
        }
        Ok(Self { target_dim, values })
    }

    pub fn identity(d: usize) -> Self {
        Self {
            target_dim: d,
            values: (0..=d).collect(),
        }
    }

    /// The coface `delta(i, d): [d-1] -> [d]` skipping the value `i`.
    pub fn delta(i: usize, d: usize) -> Self {
        assert!(i <= d && d >= 1, "delta({i}, {d}) is undefined");
        let values = (0..d).map(|k| if k < i { k } else { k + 1 }).collect();
        Self {
            target_dim: d,
            values,
        }
    }

    /// The codegeneracy `sigma(i, d): [d+1] -> [d]` repeating the value `i`.
    pub fn sigma(i: usize, d: usize) -> Self {
        assert!(i <= d, "sigma({i}, {d}) is undefined");
        let values = (0..=d + 1)
            .map(|k| if k <= i { k } else { k - 1 })
            .collect();
        Self {
            target_dim: d,
            values,
        }
    }

    pub fn source_dim(&self) -> usize {
        self.values.len() - 1
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    /// `self ∘ other`, applying `other` first.
    pub fn compose(&self, other: &SimplexMorphism) -> Result<SimplexMorphism, SimplicialError> {
        if other.target_dim != self.source_dim() {
            return Err(SimplicialError::CompositionMismatch {
                lhs_source: self.source_dim(),
                rhs_target: other.target_dim,
            });
        }
        let values = other.values.iter().map(|&v| self.values[v]).collect();
        Ok(SimplexMorphism {
            target_dim: self.target_dim,
            values,
        })
    }

    /// Unique factorization into cofaces after codegeneracies.
    ///
    /// Returns `(deltas, sigmas)`, both strictly increasing, such that the
    /// morphism equals `delta(u_p) ∘ ... ∘ delta(u_1) ∘ sigma(v_1) ∘ ... ∘ sigma(v_q)`
    /// with `deltas = [u_1, ..., u_p]` and `sigmas = [v_1, ..., v_q]`.
    pub fn normal_form(&self) -> (Vec<usize>, Vec<usize>) {
        let image: BTreeSet<usize> = self.values.iter().copied().collect();
        let deltas = (0..=self.target_dim)
            .filter(|v| !image.contains(v))
            .collect();
        let sigmas = self
            .values
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == w[1])
            .map(|(j, _)| j)
            .collect();
        (deltas, sigmas)
    }

    /// The image as a simplex, when the morphism is injective.
    pub fn image_simplex(&self) -> Option<Simplex> {
        self.is_injective().then(|| Simplex {
            vertices: self.values.clone(),
        })
    }
}

/// A non-degenerate simplex: a strictly increasing, nonempty vertex tuple.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Simplex {
    vertices: Vec<usize>,
}

impl Simplex {
    pub fn new(vertices: Vec<usize>) -> Result<Self, SimplicialError> {
        if vertices.is_empty() {
            return Err(SimplicialError::EmptySimplex);
        }
        if !vertices.windows(2).all(|w| w[0] < w[1]) {
            return Err(SimplicialError::NotStrictlyIncreasing(vertices));
        }
        Ok(Self { vertices })
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.vertices.iter().all(|v| other.contains_vertex(*v))
    }

    /// The i-th face, removing the vertex at position `i`.
    pub fn face(&self, i: usize) -> Simplex {
        assert!(
            self.dim() >= 1,
            "a vertex has no faces in normalized chains"
        );
        assert!(i <= self.dim(), "face index {i} out of range for {self}");
        let mut vertices = self.vertices.clone();
        vertices.remove(i);
        Simplex { vertices }
    }

    /// All codimension-1 faces, in face-index order.
    pub fn faces(&self) -> Vec<Simplex> {
        if self.dim() == 0 {
            return Vec::new();
        }
        (0..=self.dim()).map(|i| self.face(i)).collect()
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.vertices.iter().join(","))
    }
}

impl From<Simplex> for Vec<usize> {
    fn from(s: Simplex) -> Vec<usize> {
        s.vertices
    }
}

impl TryFrom<Vec<usize>> for Simplex {
    type Error = SimplicialError;

    fn try_from(vertices: Vec<usize>) -> Result<Self, Self::Error> {
        Simplex::new(vertices)
    }
}

/// All strictly increasing `(n+1)`-subsets of `{0, ..., d}`, in lexicographic
/// order: the degree-`n` basis of the normalized chains of the standard
/// `d`-simplex.
pub fn standard_basis(d: usize, n: usize) -> Vec<Simplex> {
    if n > d {
        return Vec::new();
    }
    (0..=d)
        .combinations(n + 1)
        .map(|vertices| Simplex { vertices })
        .collect()
}

/// Every basis simplex of the standard `d`-simplex, ordered by degree then
/// lexicographically.
pub fn all_standard_simplices(d: usize) -> Vec<Simplex> {
    (0..=d).flat_map(|n| standard_basis(d, n)).collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawComplex {
    vertex_count: usize,
    maximal_simplices: Vec<Vec<usize>>,
}

/// A finite simplicial complex given by its maximal faces over an ordered
/// vertex set `{0, ..., vertex_count - 1}`. Lower faces are generated on
/// demand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawComplex", into = "RawComplex")]
pub struct SimplicialComplex {
    vertex_count: usize,
    maximal_simplices: Vec<Simplex>,
}

impl SimplicialComplex {
    pub fn new(
        vertex_count: usize,
        maximal_simplices: Vec<Simplex>,
    ) -> Result<Self, SimplicialError> {
        for s in &maximal_simplices {
            for &v in s.vertices() {
                if v >= vertex_count {
                    return Err(SimplicialError::VertexOutOfRange {
                        vertex: v,
                        vertex_count,
                    });
                }
            }
        }
        let mut maximal = maximal_simplices;
        maximal.sort();
        for (a, b) in maximal.iter().tuple_combinations() {
            if a.is_face_of(b) {
                return Err(SimplicialError::MaximalContainment {
                    outer: b.vertices().to_vec(),
                    inner: a.vertices().to_vec(),
                });
            }
            if b.is_face_of(a) {
                return Err(SimplicialError::MaximalContainment {
                    outer: a.vertices().to_vec(),
                    inner: b.vertices().to_vec(),
                });
            }
        }
        Ok(Self {
            vertex_count,
            maximal_simplices: maximal,
        })
    }

    /// The full standard `d`-simplex as a complex.
    pub fn standard(d: usize) -> Self {
        Self {
            vertex_count: d + 1,
            maximal_simplices: vec![Simplex {
                vertices: (0..=d).collect(),
            }],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn maximal_simplices(&self) -> &[Simplex] {
        &self.maximal_simplices
    }

    /// Dimension of the complex; `None` when there are no simplices at all.
    pub fn dim(&self) -> Option<usize> {
        self.maximal_simplices.iter().map(Simplex::dim).max()
    }

    /// All `n`-faces, in lexicographic order.
    pub fn simplices_of_dim(&self, n: usize) -> Vec<Simplex> {
        let mut out: BTreeSet<Simplex> = BTreeSet::new();
        for m in &self.maximal_simplices {
            if m.dim() < n {
                continue;
            }
            for vertices in m.vertices().iter().copied().combinations(n + 1) {
                out.insert(Simplex { vertices });
            }
        }
        out.into_iter().collect()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.maximal_simplices.iter().any(|m| s.is_face_of(m))
    }

    /// The complex with vertices renamed through a permutation of the vertex
    /// set; simplices are re-sorted into increasing order.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self, SimplicialError> {
        let valid = perm.len() == self.vertex_count
            && perm.iter().copied().collect::<BTreeSet<_>>().len() == self.vertex_count
            && perm.iter().all(|&v| v < self.vertex_count);
        if !valid {
            return Err(SimplicialError::NotAPermutation {
                perm: perm.to_vec(),
                vertex_count: self.vertex_count,
            });
        }
        let maximal = self
            .maximal_simplices
            .iter()
            .map(|s| {
                let mut vertices: Vec<usize> = s.vertices().iter().map(|&v| perm[v]).collect();
                vertices.sort_unstable();
                Simplex { vertices }
            })
            .collect();
        Self::new(self.vertex_count, maximal)
    }
}

impl From<SimplicialComplex> for RawComplex {
    fn from(c: SimplicialComplex) -> RawComplex {
        RawComplex {
            vertex_count: c.vertex_count,
            maximal_simplices: c.maximal_simplices.into_iter().map(Vec::from).collect(),
        }
    }
}

impl TryFrom<RawComplex> for SimplicialComplex {
    type Error = SimplicialError;

    fn try_from(raw: RawComplex) -> Result<Self, Self::Error> {
        let maximal = raw
            .maximal_simplices
            .into_iter()
            .map(Simplex::new)
            .collect::<Result<Vec<_>, _>>()?;
        SimplicialComplex::new(raw.vertex_count, maximal)
    }
}

/// A homogeneous mod-2 chain: an F₂ sum of simplices of one degree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Chain {
    degree: usize,
    support: F2Vector<Simplex>,
}

impl Chain {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            support: F2Vector::zero(),
        }
    }

    pub fn new(degree: usize, support: F2Vector<Simplex>) -> Result<Self, SimplicialError> {
        check_degree(degree, &support)?;
        Ok(Self { degree, support })
    }

    pub fn singleton(s: Simplex) -> Self {
        Self {
            degree: s.dim(),
            support: F2Vector::singleton(s),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn support(&self) -> &F2Vector<Simplex> {
        &self.support
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_zero()
    }

    pub fn add(&self, other: &Chain) -> Chain {
        assert_eq!(self.degree, other.degree, "chain degrees must agree");
        let mut support = self.support.clone();
        support += &other.support;
        Chain {
            degree: self.degree,
            support,
        }
    }

    /// The mod-2 boundary: the sum of all codimension-1 faces of every support
    /// simplex. Zero in degree 0.
    pub fn boundary(&self) -> Chain {
        if self.degree == 0 {
            return Chain::zero(0);
        }
        let support = self.support.iter().flat_map(|s| s.faces()).collect();
        Chain {
            degree: self.degree - 1,
            support,
        }
    }
}

/// A homogeneous mod-2 cochain, stored by its support on the degree-`n` basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cochain {
    degree: usize,
    support: F2Vector<Simplex>,
}

impl Cochain {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            support: F2Vector::zero(),
        }
    }

    pub fn new(degree: usize, support: F2Vector<Simplex>) -> Result<Self, SimplicialError> {
        check_degree(degree, &support)?;
        Ok(Self { degree, support })
    }

    /// The dual basis cochain of a single simplex.
    pub fn dual(s: Simplex) -> Self {
        Self {
            degree: s.dim(),
            support: F2Vector::singleton(s),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn support(&self) -> &F2Vector<Simplex> {
        &self.support
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_zero()
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert_eq!(self.degree, other.degree, "cochain degrees must agree");
        let mut support = self.support.clone();
        support += &other.support;
        Cochain {
            degree: self.degree,
            support,
        }
    }

    /// Evaluation on a single simplex; zero on degree mismatch.
    pub fn evaluate(&self, s: &Simplex) -> bool {
        s.dim() == self.degree && self.support.contains(s)
    }

    /// Evaluation on a chain: the parity of the overlap of supports.
    pub fn evaluate_chain(&self, c: &Chain) -> bool {
        if c.degree() != self.degree {
            return false;
        }
        c.support()
            .iter()
            .filter(|s| self.support.contains(s))
            .count()
            % 2
            == 1
    }

    /// The coboundary inside `complex`: the dual of the boundary operator,
    /// `(δα)(c) = α(∂c)` for every (n+1)-simplex `c` of the complex.
    pub fn coboundary(&self, complex: &SimplicialComplex) -> Cochain {
        let degree = self.degree + 1;
        let support = complex
            .simplices_of_dim(degree)
            .into_iter()
            .filter(|c| {
                c.faces()
                    .iter()
                    .filter(|f| self.support.contains(f))
                    .count()
                    % 2
                    == 1
            })
            .collect();
        Cochain { degree, support }
    }
}

fn check_degree(degree: usize, support: &F2Vector<Simplex>) -> Result<(), SimplicialError> {
    for s in support.iter() {
        if s.dim() != degree {
            return Err(SimplicialError::DegreeMismatch {
                simplex: s.vertices().to_vec(),
                expected: degree,
                got: s.dim(),
            });
        }
    }
    Ok(())
}

/// Pushes a single simplex through a vertex map.
///
/// Returns `Ok(None)` when the map is not injective on the simplex (the image
/// is degenerate, hence zero in normalized chains), and an error when the map
/// fails to be order-preserving on it or does not cover its vertices.
pub fn pushforward_simplex(map: &[usize], s: &Simplex) -> Result<Option<Simplex>, SimplicialError> {
    let mut image = Vec::with_capacity(s.vertices().len());
    for &v in s.vertices() {
        let w = *map.get(v).ok_or(SimplicialError::MapTooShort {
            vertex: v,
            len: map.len(),
        })?;
        image.push(w);
    }
    if image.windows(2).any(|w| w[0] > w[1]) {
        return Err(SimplicialError::NotOrderPreserving {
            simplex: s.vertices().to_vec(),
        });
    }
    if image.windows(2).any(|w| w[0] == w[1]) {
        return Ok(None);
    }
    Ok(Some(Simplex { vertices: image }))
}

/// Linear extension of [`pushforward_simplex`] to chains.
pub fn pushforward(map: &[usize], chain: &Chain) -> Result<Chain, SimplicialError> {
    let mut support = F2Vector::zero();
    for s in chain.support().iter() {
        if let Some(image) = pushforward_simplex(map, s)? {
            support.toggle(image);
        }
    }
    Ok(Chain {
        degree: chain.degree(),
        support,
    })
}

/// The linear dual of the pushforward: `(φ*α)(x) = α(φ_* x)` for the
/// degree-matching simplices `x` of the source complex.
pub fn pullback(
    map: &[usize],
    alpha: &Cochain,
    source: &SimplicialComplex,
) -> Result<Cochain, SimplicialError> {
    let mut support = F2Vector::zero();
    for x in source.simplices_of_dim(alpha.degree()) {
        if let Some(image) = pushforward_simplex(map, &x)? {
            if alpha.evaluate(&image) {
                support.toggle(x);
            }
        }
    }
    Ok(Cochain {
        degree: alpha.degree(),
        support,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn simplex(vertices: &[usize]) -> Simplex {
        Simplex::new(vertices.to_vec()).unwrap()
    }

    #[test]
    fn delta_generator_values() {
        assert_eq!(SimplexMorphism::delta(1, 2).values(), &[0, 2]);
        assert_eq!(SimplexMorphism::delta(0, 1).values(), &[1]);
    }

    #[test]
    fn sigma_generator_values() {
        assert_eq!(SimplexMorphism::sigma(0, 1).values(), &[0, 0, 1]);
        assert_eq!(SimplexMorphism::sigma(2, 2).values(), &[0, 1, 2, 2]);
    }

    #[test]
    fn sigma_after_delta_is_identity() {
        for d in 0..=4usize {
            for j in 0..=d {
                let sigma = SimplexMorphism::sigma(j, d);
                for i in [j, j + 1] {
                    let delta = SimplexMorphism::delta(i, d + 1);
                    assert_eq!(sigma.compose(&delta).unwrap(), SimplexMorphism::identity(d));
                }
            }
        }
    }

    #[test]
    fn cosimplicial_identities() {
        for d in 1..=4usize {
            // delta_j delta_i = delta_i delta_{j-1} for i < j
            for j in 0..=d {
                for i in 0..j {
                    let lhs = SimplexMorphism::delta(j, d + 1)
                        .compose(&SimplexMorphism::delta(i, d))
                        .unwrap();
                    let rhs = SimplexMorphism::delta(i, d + 1)
                        .compose(&SimplexMorphism::delta(j - 1, d))
                        .unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
            // sigma_j sigma_i = sigma_i sigma_{j+1} for i <= j
            for j in 0..d {
                for i in 0..=j {
                    let lhs = SimplexMorphism::sigma(j, d - 1)
                        .compose(&SimplexMorphism::sigma(i, d))
                        .unwrap();
                    let rhs = SimplexMorphism::sigma(i, d - 1)
                        .compose(&SimplexMorphism::sigma(j + 1, d))
                        .unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
            // mixed identities away from the identity cases
            for j in 0..=d {
                let sigma = SimplexMorphism::sigma(j, d);
                for i in 0..=d + 1 {
                    let lhs = sigma.compose(&SimplexMorphism::delta(i, d + 1)).unwrap();
                    if i < j {
                        let rhs = SimplexMorphism::delta(i, d)
                            .compose(&SimplexMorphism::sigma(j - 1, d - 1))
                            .unwrap();
                        assert_eq!(lhs, rhs);
                    } else if i > j + 1 {
                        let rhs = SimplexMorphism::delta(i - 1, d)
                            .compose(&SimplexMorphism::sigma(j, d - 1))
                            .unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn compose_dimension_mismatch_is_an_error() {
        let f = SimplexMorphism::delta(0, 2);
        let g = SimplexMorphism::delta(0, 3);
        assert!(matches!(
            f.compose(&g),
            Err(SimplicialError::CompositionMismatch { .. })
        ));
    }

    /// Every order-preserving map recomposes from its normal form.
    #[test]
    fn normal_form_refactors_every_morphism() {
        for d in 0..=4usize {
            for n in 0..=4usize {
                for values in (0..=d).combinations_with_replacement(n + 1) {
                    let f = SimplexMorphism::new(d, values).unwrap();
                    let (deltas, sigmas) = f.normal_form();
                    assert!(deltas.windows(2).all(|w| w[0] < w[1]));
                    assert!(sigmas.windows(2).all(|w| w[0] < w[1]));

                    let m = f.source_dim() - sigmas.len();
                    let mut g = SimplexMorphism::identity(f.source_dim());
                    for (step, &v) in sigmas.iter().rev().enumerate() {
                        // later sigmas in the list act first, from dimension n down
                        let target = f.source_dim() - 1 - step;
                        g = SimplexMorphism::sigma(v, target).compose(&g).unwrap();
                    }
                    for (step, &u) in deltas.iter().enumerate() {
                        g = SimplexMorphism::delta(u, m + step + 1).compose(&g).unwrap();
                    }
                    assert_eq!(g, f, "normal form of {:?}", f.values());
                }
            }
        }
    }

    #[test]
    fn face_removes_position() {
        assert_eq!(simplex(&[0, 1, 2]).face(1), simplex(&[0, 2]));
        assert_eq!(simplex(&[0, 1]).face(0), simplex(&[1]));
        assert_eq!(simplex(&[0, 1, 2, 3]).face(2).face(0), simplex(&[1, 3]));
    }

    #[test]
    fn boundary_of_triangle() {
        let b = Chain::singleton(simplex(&[0, 1, 2])).boundary();
        let expected: F2Vector<Simplex> = [simplex(&[1, 2]), simplex(&[0, 2]), simplex(&[0, 1])]
            .into_iter()
            .collect();
        assert_eq!(b, Chain::new(1, expected).unwrap());
    }

    #[test]
    fn boundary_of_vertex_is_zero() {
        assert!(Chain::singleton(simplex(&[0])).boundary().is_zero());
    }

    #[test]
    fn boundary_squares_to_zero_up_to_dim_seven() {
        for s in all_standard_simplices(7) {
            let bb = Chain::singleton(s).boundary().boundary();
            assert!(bb.is_zero());
        }
    }

    #[test]
    fn standard_basis_counts() {
        // brute-force subset oracle: count nonempty subsets of {0,...,d}
        for d in 0..=6usize {
            let mut count = 0usize;
            for mask in 1u32..(1 << (d + 1)) {
                count += 1;
                let n = mask.count_ones() as usize - 1;
                let vertices: Vec<usize> = (0..=d).filter(|&v| mask >> v & 1 == 1).collect();
                let s = Simplex::new(vertices).unwrap();
                assert!(standard_basis(d, n).contains(&s));
            }
            assert_eq!(all_standard_simplices(d).len(), count);
            assert_eq!(count, (1 << (d + 1)) - 1);
        }
    }

    #[test]
    fn standard_basis_of_interval() {
        assert_eq!(standard_basis(1, 0), vec![simplex(&[0]), simplex(&[1])]);
        assert_eq!(standard_basis(1, 1), vec![simplex(&[0, 1])]);
        assert_eq!(all_standard_simplices(1).len(), 3);
    }

    #[test]
    fn hollow_triangle_edges() {
        let k = SimplicialComplex::new(
            3,
            vec![simplex(&[0, 1]), simplex(&[0, 2]), simplex(&[1, 2])],
        )
        .unwrap();
        assert_eq!(
            k.simplices_of_dim(1),
            vec![simplex(&[0, 1]), simplex(&[0, 2]), simplex(&[1, 2])]
        );
        assert_eq!(k.simplices_of_dim(0).len(), 3);
        assert_eq!(k.dim(), Some(1));
    }

    #[test]
    fn complex_rejects_contained_maximal_faces() {
        let err = SimplicialComplex::new(3, vec![simplex(&[0, 1, 2]), simplex(&[0, 1])]);
        assert!(matches!(
            err,
            Err(SimplicialError::MaximalContainment { .. })
        ));
    }

    #[test]
    fn complex_rejects_out_of_range_vertices() {
        let err = SimplicialComplex::new(2, vec![simplex(&[0, 2])]);
        assert!(matches!(
            err,
            Err(SimplicialError::VertexOutOfRange { vertex: 2, .. })
        ));
    }

    #[test]
    fn pushforward_collapse_kills_the_edge() {
        // sigma_0 on the interval: both vertices map to 0
        let c = Chain::singleton(simplex(&[0, 1]));
        let image = pushforward(&[0, 0], &c).unwrap();
        assert!(image.is_zero());
    }

    #[test]
    fn pushforward_inclusion_relabels() {
        let c = Chain::singleton(simplex(&[0, 1]));
        let image = pushforward(&[0, 2], &c).unwrap();
        assert_eq!(image, Chain::singleton(simplex(&[0, 2])));
    }

    #[test]
    fn pushforward_rejects_order_reversal() {
        let c = Chain::singleton(simplex(&[0, 1]));
        assert!(matches!(
            pushforward(&[1, 0], &c),
            Err(SimplicialError::NotOrderPreserving { .. })
        ));
    }

    /// Boundary commutes with pushforward along every generator up to dim 4.
    #[test]
    fn pushforward_commutes_with_boundary() {
        let mut generators: Vec<Vec<usize>> = Vec::new();
        for d in 1..=4usize {
            for i in 0..=d {
                generators.push(SimplexMorphism::delta(i, d).values().to_vec());
            }
        }
        for d in 0..=3usize {
            for i in 0..=d {
                generators.push(SimplexMorphism::sigma(i, d).values().to_vec());
            }
        }
        for map in &generators {
            let source_dim = map.len() - 1;
            for x in all_standard_simplices(source_dim) {
                let c = Chain::singleton(x);
                let lhs = pushforward(map, &c.boundary()).unwrap();
                let rhs = pushforward(map, &c).unwrap().boundary();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn coboundary_is_dual_to_boundary() {
        // (δα)(c) = α(∂c) on the full tetrahedron, all degrees, all basis duals
        let k = SimplicialComplex::standard(3);
        for n in 0..=2usize {
            for s in k.simplices_of_dim(n) {
                let alpha = Cochain::dual(s);
                let delta_alpha = alpha.coboundary(&k);
                for c in k.simplices_of_dim(n + 1) {
                    let chain = Chain::singleton(c.clone());
                    assert_eq!(
                        delta_alpha.evaluate(&c),
                        alpha.evaluate_chain(&chain.boundary())
                    );
                }
            }
        }
    }

    #[test]
    fn complex_json_round_trip() {
        let k = SimplicialComplex::new(4, vec![simplex(&[0, 1, 2]), simplex(&[2, 3])]).unwrap();
        let text = serde_json::to_string(&k).unwrap();
        let back: SimplicialComplex = serde_json::from_str(&text).unwrap();
        assert_eq!(back, k);
    }

    #[test]
    fn complex_json_rejects_unsorted_simplex() {
        let text = r#"{"vertex_count": 3, "maximal_simplices": [[1, 0]]}"#;
        assert!(serde_json::from_str::<SimplicialComplex>(text).is_err());
    }

    fn arb_simplex() -> impl Strategy<Value = Simplex> {
        proptest::collection::btree_set(0usize..8, 1..5)
            .prop_map(|s| Simplex::new(s.into_iter().collect()).unwrap())
    }

    fn arb_cochain(degree: usize) -> impl Strategy<Value = Cochain> {
        proptest::collection::btree_set(
            proptest::collection::btree_set(0usize..6, degree + 1),
            0..4,
        )
        .prop_map(move |sets| {
            let support = sets
                .into_iter()
                .filter(|s| s.len() == degree + 1)
                .map(|s| Simplex::new(s.into_iter().collect()).unwrap())
                .collect();
            Cochain::new(degree, support).unwrap()
        })
    }

    proptest! {
        #[test]
        fn boundary_squared_zero_on_random_chains(simplices in proptest::collection::vec(arb_simplex(), 1..6)) {
            let degree = simplices[0].dim();
            let support: F2Vector<Simplex> =
                simplices.into_iter().filter(|s| s.dim() == degree).collect();
            let chain = Chain::new(degree, support).unwrap();
            prop_assert!(chain.boundary().boundary().is_zero());
        }

        /// Pulling back along a composite equals pulling back in two steps.
        #[test]
        fn pullback_functoriality(alpha in arb_cochain(1)) {
            // psi: [2] -> [3] misses 1; phi: [3] -> [5] doubles gaps
            let psi = vec![0usize, 2, 3];
            let phi = vec![0usize, 2, 3, 5];
            let composite: Vec<usize> = psi.iter().map(|&v| phi[v]).collect();
            let mid = SimplicialComplex::standard(3);
            let source = SimplicialComplex::standard(2);
            let two_step = pullback(&psi, &pullback(&phi, &alpha, &mid).unwrap(), &source).unwrap();
            let one_step = pullback(&composite, &alpha, &source).unwrap();
            prop_assert_eq!(two_step, one_step);
        }

        /// (δα)(c) = α(∂c) for random cochains on the standard 4-simplex.
        #[test]
        fn coboundary_duality_random(alpha in arb_cochain(1)) {
            let k = SimplicialComplex::standard(4);
            let delta_alpha = alpha.coboundary(&k);
            for c in k.simplices_of_dim(2) {
                let chain = Chain::singleton(c.clone());
                prop_assert_eq!(
                    delta_alpha.evaluate(&c),
                    alpha.evaluate_chain(&chain.boundary())
                );
            }
        }
    }
}
