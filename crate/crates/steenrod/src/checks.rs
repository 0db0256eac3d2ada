//! Exhaustive desk-scale verification of the structural properties a cup-i
//! construction must satisfy, plus elementwise comparison of two
//! constructions.
//!
//! Every check quantifies over a finite, explicitly ordered range (standard
//! simplices up to a dimension bound) and collects counterexample witnesses;
//! a report passes exactly when its witness list is empty. No sampling is
//! involved, so reports are deterministic across runs.

use std::collections::HashMap;

use serde::Serialize;

use crate::cupi::{tensor_boundary, tensor_pushforward, transpose, DiagonalFamily, TensorF2};
use crate::simplicial::{
    all_standard_simplices, pushforward_simplex, standard_basis, Simplex, SimplexMorphism,
};

/// The finite range a check quantified over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CheckRange {
    pub d_max: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i_max: Option<usize>,
}

/// A counterexample: the cell of the quantification range where the checked
/// identity failed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Witness {
    pub d: usize,
    pub simplex: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub family: String,
    pub range: CheckRange,
    pub pass: bool,
    pub witnesses: Vec<Witness>,
}

impl VerificationReport {
    fn collect(check: &str, family: &str, range: CheckRange, mut witnesses: Vec<Witness>) -> Self {
        witnesses.sort();
        witnesses.dedup();
        Self {
            check: check.to_string(),
            family: family.to_string(),
            range,
            pass: witnesses.is_empty(),
            witnesses,
        }
    }
}

/// Outcome of comparing two families at one resolution degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Equal,
    EqualAfterT,
    Distinct,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictEntry {
    pub i: usize,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComparisonReport {
    pub check: String,
    pub family: String,
    pub range: CheckRange,
    pub pass: bool,
    pub witnesses: Vec<Witness>,
    pub verdicts: Vec<VerdictEntry>,
}

fn eval(family: &dyn DiagonalFamily, i: isize, x: &Simplex) -> TensorF2 {
    if i < 0 {
        TensorF2::zero()
    } else {
        family.diagonal(i as usize, x)
    }
}

fn within_cap(i: isize, i_max: Option<usize>) -> bool {
    match i_max {
        Some(cap) => i <= cap as isize,
        None => true,
    }
}

/// The chain-map identity: boundary of the degree-`i` diagonal plus the
/// diagonal of the boundary equals `(1 + T)` of the degree-`i-1` diagonal, on
/// every basis simplex of every standard simplex up to `d_max`.
pub fn check_chain_map(
    family: &dyn DiagonalFamily,
    d_max: usize,
    i_max: Option<usize>,
) -> VerificationReport {
    let mut witnesses = Vec::new();
    for d in 0..=d_max {
        for n in 0..=d {
            for x in standard_basis(d, n) {
                for q in 0..=n + 1 {
                    let i = n as isize - q as isize;
                    if !within_cap(i, i_max) {
                        continue;
                    }
                    let mut lhs = tensor_boundary(&eval(family, i, &x));
                    for face in x.faces() {
                        lhs += &eval(family, i, &face);
                    }
                    let lower = eval(family, i - 1, &x);
                    let mut rhs = lower.clone();
                    rhs += &transpose(&lower);
                    if lhs != rhs {
                        witnesses.push(Witness {
                            d,
                            simplex: x.vertices().to_vec(),
                            i: usize::try_from(i).ok(),
                            q: Some(q),
                            generator: None,
                            detail: format!(
                                "boundary of the diagonal disagrees with (1+T) at q={q}"
                            ),
                        });
                    }
                }
            }
        }
    }
    VerificationReport::collect(
        "chain_map",
        family.label(),
        CheckRange { d_max, i_max },
        witnesses,
    )
}

/// Non-degeneracy: the coefficient of `f ⊗ f` in the degree-`i` diagonal of
/// every `i`-dimensional face `f` is 1.
pub fn check_nondegeneracy(
    family: &dyn DiagonalFamily,
    d_max: usize,
    i_max: Option<usize>,
) -> VerificationReport {
    let mut witnesses = Vec::new();
    for d in 0..=d_max {
        for i in 0..=d {
            if !within_cap(i as isize, i_max) {
                continue;
            }
            for f in standard_basis(d, i) {
                if !family.diagonal(i, &f).contains(&(f.clone(), f.clone())) {
                    witnesses.push(Witness {
                        d,
                        simplex: f.vertices().to_vec(),
                        i: Some(i),
                        q: None,
                        generator: None,
                        detail: "self-pairing coefficient vanishes".to_string(),
                    });
                }
            }
        }
    }
    VerificationReport::collect(
        "nondegeneracy",
        family.label(),
        CheckRange { d_max, i_max },
        witnesses,
    )
}

/// Freeness: whenever the two mixed products of a pair of face duals agree on
/// every basis simplex and are somewhere nonzero, both faces have dimension
/// `i`.
///
/// The coefficient of `(f1, f2)` in the degree-`i` diagonal of `g` is the
/// evaluation of `f1* cup_i f2*` on `g`, so the check compares those
/// coefficients against the swapped pair across all basis simplices `g` of the
/// matching dimension.
pub fn check_freeness(
    family: &dyn DiagonalFamily,
    d_max: usize,
    i_max: Option<usize>,
) -> VerificationReport {
    let mut witnesses = Vec::new();
    for d in 0..=d_max {
        let basis = all_standard_simplices(d);
        let mut memo: HashMap<(usize, Simplex), TensorF2> = HashMap::new();
        for f1 in &basis {
            for f2 in &basis {
                let (n1, n2) = (f1.dim(), f2.dim());
                for i in 0..=n1 + n2 {
                    if !within_cap(i as isize, i_max) {
                        continue;
                    }
                    let n = n1 + n2 - i;
                    if n > d {
                        continue;
                    }
                    let mut symmetric = true;
                    let mut nonzero = false;
                    for g in standard_basis(d, n) {
                        let diag = memo
                            .entry((i, g.clone()))
                            .or_insert_with(|| family.diagonal(i, &g));
                        let forward = diag.contains(&(f1.clone(), f2.clone()));
                        let backward = diag.contains(&(f2.clone(), f1.clone()));
                        symmetric &= forward == backward;
                        nonzero |= forward;
                    }
                    if symmetric && nonzero && (i != n1 || i != n2) {
                        witnesses.push(Witness {
                            d,
                            simplex: f1.vertices().to_vec(),
                            i: Some(i),
                            q: None,
                            generator: None,
                            detail: format!(
                                "symmetric nonzero pairing with {f2} of dimensions ({n1}, {n2})"
                            ),
                        });
                    }
                }
            }
        }
    }
    VerificationReport::collect(
        "freeness",
        family.label(),
        CheckRange { d_max, i_max },
        witnesses,
    )
}

/// Naturality: the diagonals commute with pushforward along every coface and
/// codegeneracy generator between standard simplices up to `d_max`.
pub fn check_naturality(
    family: &dyn DiagonalFamily,
    d_max: usize,
    i_max: Option<usize>,
) -> VerificationReport {
    let mut generators: Vec<(String, usize, SimplexMorphism)> = Vec::new();
    for d in 1..=d_max {
        for j in 0..=d {
            generators.push((format!("delta_{j}"), d, SimplexMorphism::delta(j, d)));
        }
    }
    for d in 0..d_max {
        for j in 0..=d {
            generators.push((format!("sigma_{j}"), d, SimplexMorphism::sigma(j, d)));
        }
    }

    let mut witnesses = Vec::new();
    for (name, target_d, morphism) in &generators {
        let map = morphism.values();
        for x in all_standard_simplices(morphism.source_dim()) {
            for i in 0..=x.dim() {
                if !within_cap(i as isize, i_max) {
                    continue;
                }
                let lhs = match pushforward_simplex(map, &x)
                    .expect("generator maps are defined on the whole source")
                {
                    Some(image) => family.diagonal(i, &image),
                    None => TensorF2::zero(),
                };
                let rhs = tensor_pushforward(map, &family.diagonal(i, &x))
                    .expect("generator maps are defined on the whole source");
                if lhs != rhs {
                    witnesses.push(Witness {
                        d: *target_d,
                        simplex: x.vertices().to_vec(),
                        i: Some(i),
                        q: None,
                        generator: Some(name.clone()),
                        detail: format!("diagonal does not commute with {name}"),
                    });
                }
            }
        }
    }
    VerificationReport::collect(
        "naturality",
        family.label(),
        CheckRange { d_max, i_max },
        witnesses,
    )
}

/// Elementwise comparison of two families on every basis simplex of the
/// standard `d_max`-simplex, per resolution degree.
///
/// Plain equality is reported in preference to equality after transposition
/// when both hold (as they do wherever all values are symmetric).
pub fn compare_constructions(
    a: &dyn DiagonalFamily,
    b: &dyn DiagonalFamily,
    d_max: usize,
    i_max: Option<usize>,
) -> ComparisonReport {
    let basis = all_standard_simplices(d_max);
    let mut verdicts = Vec::new();
    let top = i_max.unwrap_or(d_max);
    for i in 0..=top {
        let mut equal = true;
        let mut equal_after_t = true;
        for x in &basis {
            let va = a.diagonal(i, x);
            let vb = b.diagonal(i, x);
            equal &= va == vb;
            equal_after_t &= va == transpose(&vb);
            if !equal && !equal_after_t {
                break;
            }
        }
        let verdict = if equal {
            Verdict::Equal
        } else if equal_after_t {
            Verdict::EqualAfterT
        } else {
            Verdict::Distinct
        };
        verdicts.push(VerdictEntry { i, verdict });
    }
    let pass = verdicts.iter().all(|v| v.verdict != Verdict::Distinct);
    ComparisonReport {
        check: "compare".to_string(),
        family: format!("{} vs {}", a.label(), b.label()),
        range: CheckRange { d_max, i_max },
        pass,
        witnesses: Vec::new(),
        verdicts,
    }
}

/// Deliberately broken families used to exercise the checks.
pub mod mutants {
    use super::*;
    use crate::cupi::TensorTerm;

    /// Sends everything to zero.
    pub struct ZeroFamily;

    impl DiagonalFamily for ZeroFamily {
        fn label(&self) -> &'static str {
            "zero"
        }

        fn diagonal(&self, _i: usize, _x: &Simplex) -> TensorF2 {
            TensorF2::zero()
        }
    }

    /// `Δ + TΔ`: symmetrizes every value, killing all self-pairings mod 2.
    pub struct Symmetrized<'a>(pub &'a dyn DiagonalFamily);

    impl DiagonalFamily for Symmetrized<'_> {
        fn label(&self) -> &'static str {
            "symmetrized"
        }

        fn diagonal(&self, i: usize, x: &Simplex) -> TensorF2 {
            let mut v = self.0.diagonal(i, x);
            v += &transpose(&v.clone());
            v
        }
    }

    /// `TΔ`: the transposed family.
    pub struct Transposed<'a>(pub &'a dyn DiagonalFamily);

    impl DiagonalFamily for Transposed<'_> {
        fn label(&self) -> &'static str {
            "transposed"
        }

        fn diagonal(&self, i: usize, x: &Simplex) -> TensorF2 {
            transpose(&self.0.diagonal(i, x))
        }
    }

    /// Deletes one tensor term from one value of the base family.
    pub struct DeletedTerm<'a> {
        pub base: &'a dyn DiagonalFamily,
        pub at_i: usize,
        pub at: Simplex,
        pub term: TensorTerm,
    }

    impl DiagonalFamily for DeletedTerm<'_> {
        fn label(&self) -> &'static str {
            "deleted-term"
        }

        fn diagonal(&self, i: usize, x: &Simplex) -> TensorF2 {
            let mut v = self.base.diagonal(i, x);
            if i == self.at_i && *x == self.at {
                v.toggle(self.term.clone());
            }
            v
        }
    }

    /// Transposes values exactly on simplices containing vertex 0; breaks
    /// naturality along maps that change vertex-0 membership.
    pub struct VertexZeroBiased<'a>(pub &'a dyn DiagonalFamily);

    impl DiagonalFamily for VertexZeroBiased<'_> {
        fn label(&self) -> &'static str {
            "vertex-zero-biased"
        }

        fn diagonal(&self, i: usize, x: &Simplex) -> TensorF2 {
            let v = self.0.diagonal(i, x);
            if x.contains_vertex(0) {
                transpose(&v)
            } else {
                v
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{classic, cupi};

    #[test]
    fn chain_map_holds_for_the_partition_family() {
        let report = check_chain_map(&cupi::Family, 4, None);
        assert!(report.pass, "witnesses: {:?}", report.witnesses);
    }

    #[test]
    fn chain_map_holds_for_the_classic_family() {
        let report = check_chain_map(&classic::Family, 3, None);
        assert!(report.pass, "witnesses: {:?}", report.witnesses);
    }

    #[test]
    fn chain_map_catches_a_deleted_term() {
        let x = Simplex::new(vec![0, 1, 2]).unwrap();
        let term = (
            Simplex::new(vec![0, 1, 2]).unwrap(),
            Simplex::new(vec![1, 2]).unwrap(),
        );
        let mutant = mutants::DeletedTerm {
            base: &cupi::Family,
            at_i: 1,
            at: x,
            term,
        };
        let report = check_chain_map(&mutant, 3, None);
        assert!(!report.pass);
        assert!(
            report
                .witnesses
                .iter()
                .any(|w| w.d == 2 && w.q == Some(1) && w.simplex == vec![0, 1, 2]),
            "witnesses: {:?}",
            report.witnesses
        );
    }

    #[test]
    fn nondegeneracy_holds_for_both_families() {
        assert!(check_nondegeneracy(&cupi::Family, 3, None).pass);
        assert!(check_nondegeneracy(&classic::Family, 3, None).pass);
    }

    #[test]
    fn nondegeneracy_fails_for_the_zero_family() {
        let report = check_nondegeneracy(&mutants::ZeroFamily, 2, None);
        assert!(!report.pass);
        assert!(!report.witnesses.is_empty());
    }

    #[test]
    fn freeness_holds_for_both_families() {
        assert!(check_freeness(&cupi::Family, 3, None).pass);
        assert!(check_freeness(&classic::Family, 3, None).pass);
    }

    #[test]
    fn freeness_fails_for_the_symmetrized_family() {
        let mutant = mutants::Symmetrized(&cupi::Family);
        let report = check_freeness(&mutant, 2, None);
        assert!(!report.pass);
        assert!(!report.witnesses.is_empty());
    }

    #[test]
    fn symmetrized_family_also_fails_nondegeneracy() {
        let mutant = mutants::Symmetrized(&cupi::Family);
        assert!(!check_nondegeneracy(&mutant, 2, None).pass);
    }

    #[test]
    fn naturality_holds_for_both_families() {
        assert!(check_naturality(&cupi::Family, 3, None).pass);
        assert!(check_naturality(&classic::Family, 3, None).pass);
    }

    #[test]
    fn naturality_fails_for_the_vertex_biased_family() {
        let mutant = mutants::VertexZeroBiased(&cupi::Family);
        let report = check_naturality(&mutant, 3, None);
        assert!(!report.pass);
        assert!(
            report
                .witnesses
                .iter()
                .any(|w| w.generator.as_deref() == Some("sigma_0")),
            "witnesses: {:?}",
            report.witnesses
        );
    }

    #[test]
    fn compare_family_with_itself_is_equal_everywhere() {
        let report = compare_constructions(&cupi::Family, &cupi::Family, 3, None);
        assert!(report.pass);
        assert!(report.verdicts.iter().all(|v| v.verdict == Verdict::Equal));
    }

    #[test]
    fn compare_against_the_transposed_family() {
        let t = mutants::Transposed(&cupi::Family);
        let report = compare_constructions(&cupi::Family, &t, 3, None);
        assert!(report.pass);
        for entry in &report.verdicts {
            if entry.i < 3 {
                // asymmetric values exist below the top degree
                assert_eq!(entry.verdict, Verdict::EqualAfterT, "i={}", entry.i);
            } else {
                // at the top degree only the symmetric doubling survives
                assert_eq!(entry.verdict, Verdict::Equal, "i={}", entry.i);
            }
        }
    }

    #[test]
    fn compare_classic_with_partition_family() {
        let report = compare_constructions(&classic::Family, &cupi::Family, 3, None);
        assert!(report.pass, "verdicts: {:?}", report.verdicts);
        for entry in &report.verdicts {
            assert_ne!(entry.verdict, Verdict::Distinct);
        }
    }

    /// The symmetry of the comparison: swapping the arguments cannot change
    /// any verdict, because `a = Tb` iff `b = Ta`.
    #[test]
    fn compare_is_symmetric_in_its_arguments() {
        let ab = compare_constructions(&classic::Family, &cupi::Family, 3, None);
        let ba = compare_constructions(&cupi::Family, &classic::Family, 3, None);
        let verdicts_ab: Vec<Verdict> = ab.verdicts.iter().map(|v| v.verdict).collect();
        let verdicts_ba: Vec<Verdict> = ba.verdicts.iter().map(|v| v.verdict).collect();
        assert_eq!(verdicts_ab, verdicts_ba);
    }

    #[test]
    fn reports_serialize_deterministically() {
        let a = serde_json::to_string(&check_chain_map(&cupi::Family, 3, None)).unwrap();
        let b = serde_json::to_string(&check_chain_map(&cupi::Family, 3, None)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn report_json_shape() {
        let report = check_nondegeneracy(&mutants::ZeroFamily, 1, Some(1));
        let value = serde_json::to_value(&report).unwrap();
        assert_eq!(value["check"], "nondegeneracy");
        assert_eq!(value["pass"], false);
        assert_eq!(value["range"]["d_max"], 1);
        assert_eq!(value["range"]["i_max"], 1);
        assert!(!value["witnesses"].as_array().unwrap().is_empty());
    }
}
