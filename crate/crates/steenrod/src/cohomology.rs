//! Mod-2 simplicial cohomology, the cup product on classes, and Steenrod
//! square matrices.
//!
//! Cocycle and coboundary spaces are computed per degree with exact Gaussian
//! elimination; class representatives are the deterministic elimination
//! outputs. Steenrod squares are matrices of the maps sending a degree-`n`
//! class to the class of the cup-`(n-k)` self-product of its representative;
//! every entry is cross-checked once against a perturbed representative, so a
//! representative-dependent result is reported as an error rather than
//! returned.

use serde::Serialize;
use thiserror::Error;

use crate::cupi::{cup_i_with, DiagonalFamily};
use crate::f2::{quotient_basis, F2Error, F2Matrix, F2Vector, QuotientBasis};
use crate::simplicial::{Cochain, Simplex, SimplicialComplex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CohomologyError {
    #[error(transparent)]
    Linear(#[from] F2Error),
    #[error("cup square of a degree-{degree} cocycle representative is not a cocycle")]
    NotACocycle { degree: usize },
    #[error("square of class {class} in degree {degree} depends on the representative")]
    RepresentativeDependent { degree: usize, class: usize },
    #[error("no cohomology stored in degree {degree}")]
    DegreeOutOfRange { degree: usize },
}

/// Per-degree cocycle/coboundary quotients of a fixed complex.
#[derive(Debug, Clone)]
pub struct CohomologyF2 {
    degrees: Vec<QuotientBasis<Simplex>>,
}

/// An element of one cohomology degree, in coordinates over the class
/// representatives of that degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassVector {
    pub degree: usize,
    pub coords: F2Vector<usize>,
}

impl ClassVector {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            coords: F2Vector::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }

    pub fn add(&self, other: &ClassVector) -> ClassVector {
        assert_eq!(self.degree, other.degree, "class degrees must agree");
        let mut coords = self.coords.clone();
        coords += &other.coords;
        ClassVector {
            degree: self.degree,
            coords,
        }
    }
}

impl CohomologyF2 {
    /// Dimension of each degree from 0 through the dimension of the complex.
    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(QuotientBasis::dim).collect()
    }

    pub fn dim_in_degree(&self, degree: usize) -> usize {
        self.degrees.get(degree).map_or(0, QuotientBasis::dim)
    }

    pub fn quotient(&self, degree: usize) -> Option<&QuotientBasis<Simplex>> {
        self.degrees.get(degree)
    }

    /// The stored representative cocycle of one class.
    pub fn representative(&self, degree: usize, class: usize) -> Option<Cochain> {
        let rep = self
            .degrees
            .get(degree)?
            .class_representatives()
            .get(class)?;
        Some(Cochain::new(degree, rep.clone()).expect("representatives are homogeneous"))
    }

    /// A cochain representing a class vector.
    pub fn cochain_of(&self, class: &ClassVector) -> Cochain {
        let mut out = Cochain::zero(class.degree);
        for j in class.coords.iter() {
            let rep = self
                .representative(class.degree, *j)
                .expect("class coordinates index stored representatives");
            out = out.add(&rep);
        }
        out
    }

    /// The class of a cocycle, by reduction against the stored bases.
    ///
    /// Degrees above the stored range are accepted for the zero cochain only.
    pub fn class_of(&self, cocycle: &Cochain) -> Result<ClassVector, CohomologyError> {
        let degree = cocycle.degree();
        match self.degrees.get(degree) {
            Some(q) => Ok(ClassVector {
                degree,
                coords: q.reduce(cocycle.support())?,
            }),
            None if cocycle.is_zero() => Ok(ClassVector::zero(degree)),
            None => Err(CohomologyError::DegreeOutOfRange { degree }),
        }
    }
}

/// Cocycle, coboundary and class data of every degree of the complex.
pub fn cohomology_basis(complex: &SimplicialComplex) -> Result<CohomologyF2, CohomologyError> {
    let Some(top) = complex.dim() else {
        return Ok(CohomologyF2 {
            degrees: Vec::new(),
        });
    };
    let mut degrees = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let basis = complex.simplices_of_dim(n);
        let rows: Vec<F2Vector<Simplex>> = complex
            .simplices_of_dim(n + 1)
            .into_iter()
            .map(|c| c.faces().into_iter().collect())
            .collect();
        let matrix = F2Matrix::new(basis, rows)?;
        let (_, cocycles, _) = matrix.rank_kernel_image();

        let coboundaries: Vec<F2Vector<Simplex>> = if n == 0 {
            Vec::new()
        } else {
            complex
                .simplices_of_dim(n - 1)
                .into_iter()
                .map(|y| Cochain::dual(y).coboundary(complex).support().clone())
                .collect()
        };
        degrees.push(quotient_basis(&cocycles, &coboundaries)?);
    }
    Ok(CohomologyF2 { degrees })
}

/// The cup product of two classes, computed on representatives and reduced
/// back to class coordinates.
pub fn cup_product_class(
    cohomology: &CohomologyF2,
    complex: &SimplicialComplex,
    a: &ClassVector,
    b: &ClassVector,
) -> Result<ClassVector, CohomologyError> {
    let alpha = cohomology.cochain_of(a);
    let beta = cohomology.cochain_of(b);
    let product = crate::cupi::cup_i(&alpha, &beta, 0, complex);
    cohomology.class_of(&product)
}

/// Steenrod squares with the partition-formula diagonals. One matrix per
/// source degree `n`, mapping coordinates on the degree-`n` classes to
/// coordinates on the degree-`n+k` classes.
pub fn steenrod_square(
    k: usize,
    complex: &SimplicialComplex,
) -> Result<Vec<F2Matrix<usize>>, CohomologyError> {
    let cohomology = cohomology_basis(complex)?;
    steenrod_square_on(&crate::cupi::Family, &cohomology, complex, k)
}

/// Steenrod squares with an arbitrary diagonal family on a precomputed
/// cohomology basis.
pub fn steenrod_square_on(
    family: &dyn DiagonalFamily,
    cohomology: &CohomologyF2,
    complex: &SimplicialComplex,
    k: usize,
) -> Result<Vec<F2Matrix<usize>>, CohomologyError> {
    let dims = cohomology.dims();
    let mut matrices = Vec::with_capacity(dims.len());
    for n in 0..dims.len() {
        let target_dim = dims.get(n + k).copied().unwrap_or(0);
        let columns: Vec<usize> = (0..target_dim).collect();
        let mut rows = Vec::with_capacity(dims[n]);
        for class in 0..dims[n] {
            rows.push(square_class(family, cohomology, complex, k, n, class)?);
        }
        matrices.push(F2Matrix::new(columns, rows)?);
    }
    Ok(matrices)
}

fn square_class(
    family: &dyn DiagonalFamily,
    cohomology: &CohomologyF2,
    complex: &SimplicialComplex,
    k: usize,
    n: usize,
    class: usize,
) -> Result<F2Vector<usize>, CohomologyError> {
    // cup_{n-k} with a negative index is zero
    let Some(i) = n.checked_sub(k) else {
        return Ok(F2Vector::zero());
    };
    let alpha = cohomology
        .representative(n, class)
        .expect("class index is within the stored dimension");
    let coords = square_of(family, cohomology, complex, &alpha, i)?;

    // recompute once with a perturbed representative; the class cannot change
    if n >= 1 {
        let gamma = Cochain::dual(
            complex
                .simplices_of_dim(n - 1)
                .into_iter()
                .next()
                .expect("a degree-n class needs (n-1)-simplices below it"),
        );
        let perturbed = alpha.add(&gamma.coboundary(complex));
        let perturbed_coords = square_of(family, cohomology, complex, &perturbed, i)?;
        if perturbed_coords != coords {
            return Err(CohomologyError::RepresentativeDependent { degree: n, class });
        }
    }
    Ok(coords)
}

fn square_of(
    family: &dyn DiagonalFamily,
    cohomology: &CohomologyF2,
    complex: &SimplicialComplex,
    alpha: &Cochain,
    i: usize,
) -> Result<F2Vector<usize>, CohomologyError> {
    let square = cup_i_with(family, alpha, alpha, i, complex);
    if !square.coboundary(complex).is_zero() {
        return Err(CohomologyError::NotACocycle {
            degree: alpha.degree(),
        });
    }
    Ok(cohomology.class_of(&square)?.coords)
}

/// Applies a Steenrod square matrix to class coordinates.
pub fn apply_square(matrix: &F2Matrix<usize>, class: &ClassVector, k: usize) -> ClassVector {
    let mut coords = F2Vector::zero();
    for j in class.coords.iter() {
        coords += &matrix.rows()[*j];
    }
    ClassVector {
        degree: class.degree + k,
        coords,
    }
}

/// The bundled example complexes, shipped as JSON files.
pub mod fixtures {
    use super::SimplicialComplex;

    fn parse(name: &str, text: &str) -> SimplicialComplex {
        serde_json::from_str(text).unwrap_or_else(|e| panic!("fixture {name} is invalid: {e}"))
    }

    /// A single vertex.
    pub fn point() -> SimplicialComplex {
        parse("point", include_str!("../fixtures/point.json"))
    }

    /// The hollow triangle: a circle on three vertices.
    pub fn circle() -> SimplicialComplex {
        parse("circle", include_str!("../fixtures/circle.json"))
    }

    /// The boundary of the tetrahedron: a 2-sphere on four vertices.
    pub fn sphere() -> SimplicialComplex {
        parse("sphere", include_str!("../fixtures/sphere.json"))
    }

    /// The minimal 6-vertex triangulation of the real projective plane.
    pub fn rp2() -> SimplicialComplex {
        parse("rp2", include_str!("../fixtures/rp2.json"))
    }

    /// The 7-vertex torus: triangles `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
    pub fn torus() -> SimplicialComplex {
        parse("torus", include_str!("../fixtures/torus.json"))
    }

    /// An 8-vertex Klein bottle (16 triangles, 24 edges).
    pub fn klein_bottle() -> SimplicialComplex {
        parse("klein", include_str!("../fixtures/klein.json"))
    }

    /// All bundled fixtures with their names.
    pub fn all() -> Vec<(&'static str, SimplicialComplex)> {
        vec![
            ("point", point()),
            ("circle", circle()),
            ("sphere", sphere()),
            ("rp2", rp2()),
            ("torus", torus()),
            ("klein", klein_bottle()),
        ]
    }
}
