//! Steenrod's original cup-i construction, assembled from two maps: the
//! Alexander-Whitney diagonal (front face tensor back face) and the join
//! (union of vertex-disjoint simplices, zero on overlap).
//!
//! Iterating the diagonal on the first tensor factor produces words of `k + 1`
//! simplices; routing the odd-position factors through one join and the
//! even-position factors through the other yields the degree-`i` diagonal.
//! Words whose joins overlap drop out.

use crate::f2::F2Vector;
use crate::simplicial::{Cochain, Simplex, SimplicialComplex};

use crate::cupi::{cup_i_with, DiagonalFamily, TensorF2};

/// The front/back splitting: all ways to cut the vertex list in two pieces
/// sharing one pivot vertex.
pub fn aw_diagonal(x: &Simplex) -> TensorF2 {
    let vertices = x.vertices();
    let mut out = TensorF2::zero();
    for pivot in 0..vertices.len() {
        let front = Simplex::new(vertices[..=pivot].to_vec()).expect("nonempty front");
        let back = Simplex::new(vertices[pivot..].to_vec()).expect("nonempty back");
        out.toggle((front, back));
    }
    out
}

/// The join: the union when all parts are pairwise vertex-disjoint, zero
/// (`None`) otherwise.
pub fn join(parts: &[Simplex]) -> Option<Simplex> {
    assert!(!parts.is_empty(), "the join needs at least one factor");
    let mut vertices: Vec<usize> = parts
        .iter()
        .flat_map(|s| s.vertices().iter().copied())
        .collect();
    vertices.sort_unstable();
    if vertices.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(Simplex::new(vertices).expect("sorted distinct vertices"))
}

/// A tensor word: an ordered list of simplex factors.
pub type TensorWord = Vec<Simplex>;

/// The `k`-fold iterated diagonal, always re-splitting the first factor.
/// Yields words of `k + 1` factors.
pub fn iterated_aw(k: usize, x: &Simplex) -> F2Vector<TensorWord> {
    assert!(k >= 1, "the iterated diagonal needs at least one split");
    let mut words: F2Vector<TensorWord> = aw_diagonal(x)
        .iter()
        .map(|(a, b)| vec![a.clone(), b.clone()])
        .collect();
    for _ in 1..k {
        words = words
            .iter()
            .flat_map(|word| {
                aw_diagonal(&word[0])
                    .iter()
                    .map(|(a, b)| {
                        let mut next = Vec::with_capacity(word.len() + 1);
                        next.push(a.clone());
                        next.push(b.clone());
                        next.extend(word[1..].iter().cloned());
                        next
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    words
}

/// The classical degree-`i` diagonal: split `i + 1` times, then join the
/// factors in odd positions into the first tensor slot and the factors in
/// even positions into the second (positions are 1-based).
pub fn diagonal(i: usize, x: &Simplex) -> TensorF2 {
    let mut out = TensorF2::zero();
    for word in iterated_aw(i + 1, x).iter() {
        let odd: Vec<Simplex> = word.iter().step_by(2).cloned().collect();
        let even: Vec<Simplex> = word.iter().skip(1).step_by(2).cloned().collect();
        let (Some(left), Some(right)) = (join(&odd), join(&even)) else {
            continue;
        };
        out.toggle((left, right));
    }
    out
}

/// Steenrod's original cup-i diagonals as a [`DiagonalFamily`].
pub struct Family;

impl DiagonalFamily for Family {
    fn label(&self) -> &'static str {
        "classic"
    }

    fn diagonal(&self, i: usize, x: &Simplex) -> TensorF2 {
        diagonal(i, x)
    }
}

/// The cup-i product driven by the classical diagonals.
pub fn cup_i(alpha: &Cochain, beta: &Cochain, i: usize, complex: &SimplicialComplex) -> Cochain {
    cup_i_with(&Family, alpha, beta, i, complex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cupi;
    use crate::simplicial::all_standard_simplices;

    fn simplex(vertices: &[usize]) -> Simplex {
        Simplex::new(vertices.to_vec()).unwrap()
    }

    fn pair(a: &[usize], b: &[usize]) -> (Simplex, Simplex) {
        (simplex(a), simplex(b))
    }

    #[test]
    fn aw_of_an_edge() {
        let expected: TensorF2 = [pair(&[0], &[0, 1]), pair(&[0, 1], &[1])]
            .into_iter()
            .collect();
        assert_eq!(aw_diagonal(&simplex(&[0, 1])), expected);
    }

    #[test]
    fn aw_of_a_vertex() {
        let expected: TensorF2 = [pair(&[0], &[0])].into_iter().collect();
        assert_eq!(aw_diagonal(&simplex(&[0])), expected);
    }

    #[test]
    fn aw_of_a_triangle() {
        let expected: TensorF2 = [
            pair(&[0], &[0, 1, 2]),
            pair(&[0, 1], &[1, 2]),
            pair(&[0, 1, 2], &[2]),
        ]
        .into_iter()
        .collect();
        assert_eq!(aw_diagonal(&simplex(&[0, 1, 2])), expected);
    }

    #[test]
    fn join_of_disjoint_parts() {
        assert_eq!(
            join(&[simplex(&[0, 1]), simplex(&[2, 3])]),
            Some(simplex(&[0, 1, 2, 3]))
        );
    }

    #[test]
    fn join_with_overlap_is_zero() {
        assert_eq!(join(&[simplex(&[0, 1]), simplex(&[1, 2])]), None);
    }

    #[test]
    fn join_of_a_single_factor() {
        assert_eq!(join(&[simplex(&[5])]), Some(simplex(&[5])));
    }

    #[test]
    fn iterated_aw_once_is_aw() {
        for x in all_standard_simplices(4) {
            let once: F2Vector<TensorWord> = aw_diagonal(&x)
                .iter()
                .map(|(a, b)| vec![a.clone(), b.clone()])
                .collect();
            assert_eq!(iterated_aw(1, &x), once);
        }
    }

    /// Hand expansion of the double splitting of an edge: split once, then
    /// re-split the first factor of each word.
    #[test]
    fn iterated_aw_twice_on_an_edge() {
        let expected: F2Vector<TensorWord> = [
            vec![simplex(&[0]), simplex(&[0]), simplex(&[0, 1])],
            vec![simplex(&[0]), simplex(&[0, 1]), simplex(&[1])],
            vec![simplex(&[0, 1]), simplex(&[1]), simplex(&[1])],
        ]
        .into_iter()
        .collect();
        assert_eq!(iterated_aw(2, &simplex(&[0, 1])), expected);
    }

    /// Each word's factor dimensions add up to the input dimension: every
    /// split shares exactly one pivot vertex.
    #[test]
    fn iterated_aw_words_preserve_total_dimension() {
        for x in all_standard_simplices(4) {
            for k in 1..=3usize {
                for word in iterated_aw(k, &x).iter() {
                    assert_eq!(word.len(), k + 1);
                    let total: usize = word.iter().map(Simplex::dim).sum();
                    assert_eq!(total, x.dim());
                }
            }
        }
    }

    #[test]
    fn diagonal_on_the_top_face_doubles() {
        for i in 0..=5usize {
            let x = Simplex::new((0..=i).collect()).unwrap();
            let expected: TensorF2 = [(x.clone(), x.clone())].into_iter().collect();
            assert_eq!(diagonal(i, &x), expected);
        }
    }

    #[test]
    fn diagonal_zero_is_aw() {
        for x in all_standard_simplices(5) {
            assert_eq!(diagonal(0, &x), aw_diagonal(&x));
        }
    }

    /// Frozen hand expansion of the double split with joins on the triangle;
    /// agrees with the partitioned-tuple diagonal.
    #[test]
    fn diagonal_one_on_the_triangle() {
        let x = simplex(&[0, 1, 2]);
        let expected: TensorF2 = [
            pair(&[0, 1, 2], &[0, 1]),
            pair(&[0, 2], &[0, 1, 2]),
            pair(&[0, 1, 2], &[1, 2]),
        ]
        .into_iter()
        .collect();
        assert_eq!(diagonal(1, &x), expected);
        assert_eq!(diagonal(1, &x), cupi::diagonal(1, &x));
    }

    /// Every surviving tensor factor is a union of intervals of the input's
    /// vertex sequence, and the two factors cover all of it.
    #[test]
    fn diagonal_factors_are_interval_unions() {
        for x in all_standard_simplices(4) {
            for i in 0..=x.dim() {
                for (a, b) in diagonal(i, &x).iter() {
                    let mut covered: Vec<usize> =
                        a.vertices().iter().chain(b.vertices()).copied().collect();
                    covered.sort_unstable();
                    covered.dedup();
                    assert_eq!(covered, x.vertices().to_vec());
                    for factor in [a, b] {
                        assert!(
                            interval_blocks(factor, &x) <= (i + 3) / 2,
                            "i={i} x={x} factor={factor}"
                        );
                    }
                }
            }
        }
    }

    /// Number of maximal runs of consecutive positions of `x` in `factor`.
    fn interval_blocks(factor: &Simplex, x: &Simplex) -> usize {
        let positions: Vec<usize> = factor
            .vertices()
            .iter()
            .map(|v| x.vertices().iter().position(|w| w == v).unwrap())
            .collect();
        1 + positions.windows(2).filter(|w| w[1] != w[0] + 1).count()
    }

    #[test]
    fn classic_cup_one_pairs_edge_with_triangle() {
        let k = SimplicialComplex::standard(2);
        let alpha = Cochain::dual(simplex(&[0, 2]));
        let beta = Cochain::dual(simplex(&[0, 1, 2]));
        let out = cup_i(&alpha, &beta, 1, &k);
        assert!(out.evaluate(&simplex(&[0, 1, 2])));
        assert_eq!(out.support().len(), 1);
    }

    #[test]
    fn classic_cup_self_product_of_a_face_is_nonzero() {
        let k = SimplicialComplex::standard(3);
        for i in 0..=3usize {
            for f in crate::simplicial::standard_basis(3, i) {
                let alpha = Cochain::dual(f.clone());
                assert!(cup_i(&alpha, &alpha, i, &k).evaluate(&f), "i={i} f={f}");
            }
        }
    }

    #[test]
    fn classic_cup_with_excess_i_is_empty() {
        let k = SimplicialComplex::standard(2);
        let alpha = Cochain::dual(simplex(&[0]));
        let beta = Cochain::dual(simplex(&[1, 2]));
        assert!(cup_i(&alpha, &beta, 4, &k).is_zero());
    }
}
