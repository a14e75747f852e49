//! The group `SL(n+1, K)` acting on the right: generators, sampling,
//! the adjoint action `a . g = g^-1 a g`, and entrywise derivations.
//!
//! Row and column indices are 0-based throughout.

use rand::Rng;
use serde::Serialize;

use crate::embeddings::TracelessMatrix;
use crate::error::{Error, Result};
use crate::field::{Derivation, FieldElem, FieldSpec};
use crate::linalg::Matrix;

/// An element of `SL(n+1, K)` with its inverse cached.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElem {
    matrix: Matrix,
    inverse: Matrix,
}

impl GroupElem {
    /// Checks `det = 1` and computes the inverse by elimination.
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch("group elements are square".into()));
        }
        if !matrix.determinant()?.is_one() {
            return Err(Error::NotSpecialLinear);
        }
        let inverse = matrix.inverse()?;
        Ok(GroupElem { matrix, inverse })
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let id = Matrix::identity(field, n + 1);
        GroupElem {
            matrix: id.clone(),
            inverse: id,
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn inverse_matrix(&self) -> &Matrix {
        &self.inverse
    }

    pub fn field(&self) -> FieldSpec {
        self.matrix.field()
    }

    /// Projective dimension `n` of the space the group acts on.
    pub fn n(&self) -> usize {
        self.matrix.rows() - 1
    }

    pub fn inverse(&self) -> GroupElem {
        GroupElem {
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
        }
    }

    pub fn mul(&self, other: &GroupElem) -> Result<GroupElem> {
        Ok(GroupElem {
            matrix: self.matrix.mul(&other.matrix)?,
            inverse: other.inverse.mul(&self.inverse)?,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == Matrix::identity(self.field(), self.matrix.rows())
    }
}

impl Serialize for GroupElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.matrix.serialize(s)
    }
}

/// `I + s e_{i,j}` in `SL(n+1, K)`; its inverse is `I - s e_{i,j}`.
pub fn transvection(n: usize, i: usize, j: usize, s: &FieldElem) -> Result<GroupElem> {
    if i == j {
        return Err(Error::IndexError(format!("transvection needs i != j, got {i} = {j}")));
    }
    if i > n || j > n {
        return Err(Error::IndexError(format!(
            "index ({i},{j}) outside a {}x{} matrix",
            n + 1,
            n + 1
        )));
    }
    let field = s.field();
    let mut matrix = Matrix::identity(field, n + 1);
    let mut inverse = matrix.clone();
    matrix[(i, j)] = s.clone();
    inverse[(i, j)] = -s;
    Ok(GroupElem { matrix, inverse })
}

/// A product of `word_length` random transvections. Over the function
/// fields the parameters are polynomials of degree at most `degree_bound`,
/// so both the element and its inverse have polynomial entries.
pub fn sample_element<R: Rng + ?Sized>(
    field: FieldSpec,
    n: usize,
    rng: &mut R,
    word_length: usize,
    degree_bound: usize,
) -> Result<GroupElem> {
    if word_length == 0 {
        return Err(Error::Config("word length must be at least 1".into()));
    }
    let mut g = GroupElem::identity(field, n);
    for _ in 0..word_length {
        let i = rng.random_range(0..=n);
        let j = (i + rng.random_range(1..=n)) % (n + 1);
        let s = field.sample_polynomial(rng, degree_bound);
        g = g.mul(&transvection(n, i, j, &s)?)?;
    }
    Ok(g)
}

/// The adjoint right action `a . g = g^-1 a g`.
pub fn adjoint(g: &GroupElem, a: &TracelessMatrix) -> Result<TracelessMatrix> {
    let m = g.inverse.mul(a.matrix())?.mul(&g.matrix)?;
    Ok(TracelessMatrix::new_unchecked(m))
}

/// Applies `d_omega` to every entry of `m`.
pub fn derive_matrix(m: &Matrix, omega: usize) -> Result<Matrix> {
    let field = m.field();
    if field.derivation_rank() == 0 {
        return Err(Error::NoDerivations(field.to_string()));
    }
    if omega >= field.derivation_rank() {
        return Err(Error::IndexOutOfRange {
            index: omega,
            len: field.derivation_rank(),
        });
    }
    Ok(m.map(|x| x.derive(omega).expect("index checked")))
}

/// Applies an arbitrary derivation entrywise.
pub fn apply_derivation(m: &Matrix, d: &Derivation) -> Matrix {
    m.map(|x| d.apply(x))
}

/// `d_omega(g)`, the entrywise derivative of `g`'s matrix.
pub fn derive_group_elem(g: &GroupElem, omega: usize) -> Result<Matrix> {
    derive_matrix(&g.matrix, omega)
}
