//! Cup-i products built from partitioned composite face maps.
//!
//! A strictly increasing tuple `U = (u_1, ..., u_q)` names the composite face
//! map that deletes the listed vertex positions. Splitting `U` by the parity of
//! `u_i + i` (1-based `i`) routes the two composite faces into the tensor
//! factors, and summing over all tuples of a fixed size yields a family of
//! degree-raising diagonals, one for each resolution degree `i`. Their duals
//! are the cup-i products on cochains.
//!
//! The tensor-factor transposition `T` acts by [`transpose`]; the family lives
//! behind [`DiagonalFamily`] so that verification code treats this construction
//! and the classical one of [`crate::classic`] uniformly.

use itertools::Itertools;

use crate::f2::F2Vector;
use crate::simplicial::{
    pushforward_simplex, Cochain, Simplex, SimplicialComplex, SimplicialError,
};

/// A strictly increasing tuple of vertex positions, possibly empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FaceTuple {
    entries: Vec<usize>,
}

impl FaceTuple {
    pub fn new(entries: Vec<usize>) -> Self {
        assert!(
            entries.windows(2).all(|w| w[0] < w[1]),
            "face tuple entries must be strictly increasing: {entries:?}"
        );
        Self { entries }
    }

    pub fn empty() -> Self {
        Self {
            entries: Vec::new(),
        }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// All strictly increasing `q`-tuples with entries in `0..=n`, in
    /// lexicographic order. For `q = 0` this is the single empty tuple.
    pub fn enumerate(q: usize, n: usize) -> Vec<FaceTuple> {
        if q == 0 {
            return vec![FaceTuple::empty()];
        }
        if q > n + 1 {
            return Vec::new();
        }
        (0..=n)
            .combinations(q)
            .map(|entries| FaceTuple { entries })
            .collect()
    }

    /// Splits the tuple by the parity of `u_i + i` with 1-based positions:
    /// even goes to the first factor, odd to the second.
    pub fn partition(&self) -> (FaceTuple, FaceTuple) {
        let mut minus = Vec::new();
        let mut plus = Vec::new();
        for (index, &u) in self.entries.iter().enumerate() {
            if (u + index + 1) % 2 == 0 {
                minus.push(u);
            } else {
                plus.push(u);
            }
        }
        (FaceTuple { entries: minus }, FaceTuple { entries: plus })
    }

    /// The composite face deleting the listed vertex positions of `x`.
    ///
    /// Returns `None` (the zero chain) when some entry exceeds the dimension of
    /// `x`, and also when the tuple deletes every vertex: normalized chains
    /// have no simplices below degree zero.
    pub fn apply(&self, x: &Simplex) -> Option<Simplex> {
        if let Some(&last) = self.entries.last() {
            if last > x.dim() {
                return None;
            }
        }
        if self.entries.len() == x.vertices().len() {
            return None;
        }
        let vertices = x
            .vertices()
            .iter()
            .enumerate()
            .filter(|(position, _)| self.entries.binary_search(position).is_err())
            .map(|(_, &v)| v)
            .collect();
        Some(Simplex::new(vertices).expect("deleting positions keeps the order strict"))
    }

    /// Positions of `0..=n` not listed in the tuple.
    pub fn complement(&self, n: usize) -> Vec<usize> {
        (0..=n)
            .filter(|p| self.entries.binary_search(p).is_err())
            .collect()
    }

    /// The tuple with one extra entry inserted in order.
    pub fn inserted(&self, x: usize) -> FaceTuple {
        debug_assert!(self.entries.binary_search(&x).is_err());
        let mut entries = self.entries.clone();
        let at = entries.partition_point(|&u| u < x);
        entries.insert(at, x);
        FaceTuple { entries }
    }
}

/// A basis term of the tensor square of normalized chains.
pub type TensorTerm = (Simplex, Simplex);

/// An F₂ sum of tensor terms.
pub type TensorF2 = F2Vector<TensorTerm>;

/// The tensor-factor transposition.
pub fn transpose(t: &TensorF2) -> TensorF2 {
    t.iter().map(|(a, b)| (b.clone(), a.clone())).collect()
}

/// Mod-2 boundary of the tensor square: faces of one factor at a time.
pub fn tensor_boundary(t: &TensorF2) -> TensorF2 {
    let mut out = TensorF2::zero();
    for (a, b) in t.iter() {
        for fa in a.faces() {
            out.toggle((fa, b.clone()));
        }
        for fb in b.faces() {
            out.toggle((a.clone(), fb));
        }
    }
    out
}

/// Applies a vertex map to both factors, dropping terms with a degenerate
/// image.
pub fn tensor_pushforward(map: &[usize], t: &TensorF2) -> Result<TensorF2, SimplicialError> {
    let mut out = TensorF2::zero();
    for (a, b) in t.iter() {
        let (Some(ia), Some(ib)) = (pushforward_simplex(map, a)?, pushforward_simplex(map, b)?)
        else {
            continue;
        };
        out.toggle((ia, ib));
    }
    Ok(out)
}

/// A natural family of degree-raising diagonals indexed by resolution degree.
///
/// `diagonal(i, x)` raises total dimension by `i`: every output term `(a, b)`
/// satisfies `a.dim() + b.dim() == x.dim() + i`.
pub trait DiagonalFamily {
    /// Short name used in verification reports.
    fn label(&self) -> &'static str;

    fn diagonal(&self, i: usize, x: &Simplex) -> TensorF2;
}

/// The cup-i diagonals of this module: composite faces of partitioned tuples.
pub struct Family;

impl DiagonalFamily for Family {
    fn label(&self) -> &'static str {
        "new"
    }

    fn diagonal(&self, i: usize, x: &Simplex) -> TensorF2 {
        diagonal(i, x)
    }
}

/// The degree-`i` diagonal of a simplex: the sum over all tuples of size
/// `dim(x) - i` of the partitioned composite face pairs. Zero when
/// `dim(x) < i`.
pub fn diagonal(i: usize, x: &Simplex) -> TensorF2 {
    let n = x.dim();
    if n < i {
        return TensorF2::zero();
    }
    let mut out = TensorF2::zero();
    for tuple in FaceTuple::enumerate(n - i, n) {
        let (minus, plus) = tuple.partition();
        let left = minus
            .apply(x)
            .expect("at most n deletions from n+1 vertices");
        let right = plus
            .apply(x)
            .expect("at most n deletions from n+1 vertices");
        out.toggle((left, right));
    }
    out
}

/// Expansion of the boundary of a composite face: the sum of the composite
/// faces of all one-entry-larger tuples. Test oracle for
/// `∂(U.apply(x)) == composite_face_boundary(U, x)`.
pub fn composite_face_boundary(tuple: &FaceTuple, x: &Simplex) -> F2Vector<Simplex> {
    let mut out = F2Vector::zero();
    for y in tuple.complement(x.dim()) {
        if let Some(s) = tuple.inserted(y).apply(x) {
            out.toggle(s);
        }
    }
    out
}

/// The cup-i product of two homogeneous cochains over a complex, evaluated
/// with an arbitrary diagonal family.
///
/// The value on each simplex `c` of degree `p + q - i` is the pairing of
/// `alpha ⊗ beta` with `family.diagonal(i, c)`. When `i > p + q` there is no
/// valid output degree and the zero cochain in degree 0 is returned.
pub fn cup_i_with(
    family: &dyn DiagonalFamily,
    alpha: &Cochain,
    beta: &Cochain,
    i: usize,
    complex: &SimplicialComplex,
) -> Cochain {
    let (p, q) = (alpha.degree(), beta.degree());
    let Some(n) = (p + q).checked_sub(i) else {
        return Cochain::zero(0);
    };
    let support = complex
        .simplices_of_dim(n)
        .into_iter()
        .filter(|c| {
            family
                .diagonal(i, c)
                .iter()
                .filter(|(a, b)| alpha.evaluate(a) && beta.evaluate(b))
                .count()
                % 2
                == 1
        })
        .collect();
    Cochain::new(n, support).expect("support simplices have degree n")
}

/// The cup-i product with this module's diagonals.
pub fn cup_i(alpha: &Cochain, beta: &Cochain, i: usize, complex: &SimplicialComplex) -> Cochain {
    cup_i_with(&Family, alpha, beta, i, complex)
}
