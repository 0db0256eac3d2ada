//! Exact linear algebra over the two-element field.
//!
//! Vectors are finite sets of basis keys; addition is symmetric difference, so
//! every vector is its own negative. Keys are an arbitrary totally ordered type
//! (simplices, tensor pairs, plain integers), which keeps the same elimination
//! code usable for chains, cochains and class coordinates. Gaussian elimination
//! always pivots on the lowest key first, so all outputs are reproducible.

use std::collections::BTreeSet;
use std::ops::{Add, AddAssign};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum F2Error {
    #[error("row {row} has support outside the declared column keys")]
    RowOutsideColumns { row: usize },
    #[error("duplicate column key at position {index}")]
    DuplicateColumn { index: usize },
    #[error("boundary {index} is not in the span of the given cycles")]
    BoundaryOutsideCycleSpan { index: usize },
    #[error("vector is not in the span of the cycles modulo the boundaries")]
    NotInSpan,
}

/// A vector over F₂, stored as its support set.
///
/// `FromIterator` and `Extend` toggle membership per occurrence, so collecting
/// a term stream performs mod-2 cancellation. Serialization is the sorted
/// support list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct F2Vector<K: Ord> {
    support: BTreeSet<K>,
}

impl<K: Ord + Clone> F2Vector<K> {
    pub fn zero() -> Self {
        Self {
            support: BTreeSet::new(),
        }
    }

    pub fn singleton(key: K) -> Self {
        let mut support = BTreeSet::new();
        support.insert(key);
        Self { support }
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn contains(&self, key: &K) -> bool {
        self.support.contains(key)
    }

    /// Flips the coefficient of `key`.
    pub fn toggle(&mut self, key: K) {
        if !self.support.remove(&key) {
            self.support.insert(key);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &K> {
        self.support.iter()
    }

    pub fn support(&self) -> &BTreeSet<K> {
        &self.support
    }

    /// Smallest key of the support, if any.
    pub fn pivot(&self) -> Option<&K> {
        self.support.iter().next()
    }
}

impl<K: Ord + Clone> FromIterator<K> for F2Vector<K> {
    fn from_iter<I: IntoIterator<Item = K>>(iter: I) -> Self {
        let mut v = Self::zero();
        for key in iter {
            v.toggle(key);
        }
        v
    }
}

impl<K: Ord + Clone> Extend<K> for F2Vector<K> {
    fn extend<I: IntoIterator<Item = K>>(&mut self, iter: I) {
        for key in iter {
            self.toggle(key);
        }
    }
}

impl<K: Ord + Clone> AddAssign<&F2Vector<K>> for F2Vector<K> {
    fn add_assign(&mut self, rhs: &F2Vector<K>) {
        for key in &rhs.support {
            self.toggle(key.clone());
        }
    }
}

impl<K: Ord + Clone> Add for F2Vector<K> {
    type Output = F2Vector<K>;

    fn add(mut self, rhs: F2Vector<K>) -> F2Vector<K> {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone> Add<&F2Vector<K>> for F2Vector<K> {
    type Output = F2Vector<K>;

    fn add(mut self, rhs: &F2Vector<K>) -> F2Vector<K> {
        self += rhs;
        self
    }
}

/// Rows over an explicitly ordered set of column keys.
///
/// The matrix represents the linear map sending a coordinate vector indexed by
/// `columns` to the vector of row evaluations, i.e. entry `(r, c)` is 1 exactly
/// when `rows[r]` contains `columns[c]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F2Matrix<K: Ord> {
    columns: Vec<K>,
    rows: Vec<F2Vector<K>>,
}

impl<K: Ord + Clone> F2Matrix<K> {
    pub fn new(columns: Vec<K>, rows: Vec<F2Vector<K>>) -> Result<Self, F2Error> {
        let mut seen = BTreeSet::new();
        for (index, key) in columns.iter().enumerate() {
            if !seen.insert(key.clone()) {
                return Err(F2Error::DuplicateColumn { index });
            }
        }
        for (row, vector) in rows.iter().enumerate() {
            if !vector.iter().all(|key| seen.contains(key)) {
                return Err(F2Error::RowOutsideColumns { row });
            }
        }
        Ok(Self { columns, rows })
    }

    pub fn columns(&self) -> &[K] {
        &self.columns
    }

    pub fn rows(&self) -> &[F2Vector<K>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Rank, kernel basis and image basis of the represented map.
    ///
    /// The kernel basis is expressed over the column keys; the image basis is the
    /// set of pivot columns of the matrix, expressed over row indices. Always
    /// `rank + kernel.len() == columns.len()` and `rank == image.len()`.
    pub fn rank_kernel_image(&self) -> (usize, Vec<F2Vector<K>>, Vec<F2Vector<usize>>) {
        let mut rre: Rre<K> = Rre::new();
        for row in &self.rows {
            rre.insert(row.clone(), F2Vector::zero());
        }
        let rank = rre.rows.len();
        let pivots: BTreeSet<K> = rre
            .rows
            .iter()
            .map(|(vec, _)| vec.pivot().expect("reduced rows are nonzero").clone())
            .collect();

        let mut kernel = Vec::new();
        for key in &self.columns {
            if pivots.contains(key) {
                continue;
            }
            let mut v = F2Vector::singleton(key.clone());
            for (vec, _) in &rre.rows {
                if vec.contains(key) {
                    v.toggle(vec.pivot().expect("nonzero").clone());
                }
            }
            kernel.push(v);
        }

        let image = pivots
            .iter()
            .map(|p| {
                self.rows
                    .iter()
                    .enumerate()
                    .filter(|(_, row)| row.contains(p))
                    .map(|(r, _)| r)
                    .collect()
            })
            .collect();
        (rank, kernel, image)
    }
}

/// Reduced row echelon accumulator with coordinate tracking.
///
/// Rows keep pairwise distinct pivots (their minimal keys) and each pivot occurs
/// in no other stored row. The tag of a row records which inputs were combined
/// to produce it.
struct Rre<K: Ord> {
    rows: Vec<(F2Vector<K>, F2Vector<usize>)>,
}

impl<K: Ord + Clone> Rre<K> {
    fn new() -> Self {
        Self { rows: Vec::new() }
    }

    /// Fully reduces `v`, returning the remainder and the tags consumed.
    ///
    /// Stored pivots occur in no row but their own, so a single pass clears
    /// every stored pivot from the remainder.
    fn reduce(&self, v: &F2Vector<K>) -> (F2Vector<K>, F2Vector<usize>) {
        let mut rem = v.clone();
        let mut tag = F2Vector::zero();
        for (vec, t) in &self.rows {
            let pivot = vec.pivot().expect("stored rows are nonzero");
            if rem.contains(pivot) {
                rem += vec;
                tag += t;
            }
        }
        (rem, tag)
    }

    /// Inserts `v` if independent of the stored rows. Returns true on insertion.
    fn insert(&mut self, v: F2Vector<K>, tag: F2Vector<usize>) -> bool {
        let (rem, consumed) = self.reduce(&v);
        if rem.is_zero() {
            return false;
        }
        let mut new_tag = tag;
        new_tag += &consumed;
        let pivot = rem.pivot().expect("nonzero").clone();
        for (vec, t) in &mut self.rows {
            if vec.contains(&pivot) {
                *vec += &rem;
                *t += &new_tag;
            }
        }
        self.rows.push((rem, new_tag));
        self.rows.sort_by(|a, b| a.0.pivot().cmp(&b.0.pivot()));
        true
    }
}

/// Basis data for a quotient of spans cycles/boundaries, with a reduction
/// procedure expressing any vector of the cycle span in class coordinates.
#[derive(Debug, Clone)]
pub struct QuotientBasis<K: Ord> {
    ambient_keys: Vec<K>,
    cycle_basis: Vec<F2Vector<K>>,
    boundary_basis: Vec<F2Vector<K>>,
    class_representatives: Vec<F2Vector<K>>,
    boundary_rre: Vec<F2Vector<K>>,
    rep_rre: Vec<(F2Vector<K>, F2Vector<usize>)>,
}

impl<K: Ord + Clone> QuotientBasis<K> {
    pub fn ambient_keys(&self) -> &[K] {
        &self.ambient_keys
    }

    pub fn cycle_basis(&self) -> &[F2Vector<K>] {
        &self.cycle_basis
    }

    pub fn boundary_basis(&self) -> &[F2Vector<K>] {
        &self.boundary_basis
    }

    pub fn class_representatives(&self) -> &[F2Vector<K>] {
        &self.class_representatives
    }

    /// Dimension of the quotient.
    pub fn dim(&self) -> usize {
        self.class_representatives.len()
    }

    /// Coordinates of `v` over the class representatives, modulo boundaries.
    ///
    /// Fails when `v` does not lie in the span of the cycles plus boundaries.
    pub fn reduce(&self, v: &F2Vector<K>) -> Result<F2Vector<usize>, F2Error> {
        let mut rem = v.clone();
        for row in &self.boundary_rre {
            let p = row.pivot().expect("nonzero");
            if rem.contains(p) {
                rem += row;
            }
        }
        let mut coords = F2Vector::zero();
        for (vec, tag) in &self.rep_rre {
            let p = vec.pivot().expect("nonzero");
            if rem.contains(p) {
                rem += vec;
                coords += tag;
            }
        }
        if rem.is_zero() {
            Ok(coords)
        } else {
            Err(F2Error::NotInSpan)
        }
    }
}

/// Selects class representatives for the span of `cycles` modulo the span of
/// `boundaries`.
///
/// Representatives are drawn from the input cycles in order: a cycle becomes a
/// representative exactly when it is independent of the boundaries and of the
/// representatives chosen before it.
pub fn quotient_basis<K: Ord + Clone>(
    cycles: &[F2Vector<K>],
    boundaries: &[F2Vector<K>],
) -> Result<QuotientBasis<K>, F2Error> {
    let mut ambient: BTreeSet<K> = BTreeSet::new();
    for v in cycles.iter().chain(boundaries) {
        ambient.extend(v.iter().cloned());
    }

    let mut cycle_rre: Rre<K> = Rre::new();
    let mut cycle_basis = Vec::new();
    for cycle in cycles {
        if cycle_rre.insert(cycle.clone(), F2Vector::zero()) {
            cycle_basis.push(cycle.clone());
        }
    }
    for (index, boundary) in boundaries.iter().enumerate() {
        let (rem, _) = cycle_rre.reduce(boundary);
        if !rem.is_zero() {
            return Err(F2Error::BoundaryOutsideCycleSpan { index });
        }
    }

    let mut boundary_rre: Rre<K> = Rre::new();
    let mut boundary_basis = Vec::new();
    for boundary in boundaries {
        if boundary_rre.insert(boundary.clone(), F2Vector::zero()) {
            boundary_basis.push(boundary.clone());
        }
    }
    let boundary_rows: Vec<F2Vector<K>> = boundary_rre
        .rows
        .iter()
        .map(|(vec, _)| vec.clone())
        .collect();

    let mut rep_rre: Rre<K> = Rre::new();
    let mut class_representatives: Vec<F2Vector<K>> = Vec::new();
    for cycle in cycles {
        let mut rem = cycle.clone();
        for row in &boundary_rows {
            let p = row.pivot().expect("nonzero");
            if rem.contains(p) {
                rem += row;
            }
        }
        let next_index = class_representatives.len();
        if rep_rre.insert(rem, F2Vector::singleton(next_index)) {
            class_representatives.push(cycle.clone());
        }
    }

    Ok(QuotientBasis {
        ambient_keys: ambient.into_iter().collect(),
        cycle_basis,
        boundary_basis,
        class_representatives,
        boundary_rre: boundary_rows,
        rep_rre: rep_rre.rows,
    })
}
