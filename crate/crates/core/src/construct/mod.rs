//! Constructions that turn one algebraic structure into another.
//!
//! Linear maps act on coordinate columns: column `j` of the matrix holds the
//! coordinates of the image of `e_j`.

mod derivations;
mod np;
mod rota_baxter;

pub use derivations::{
    derivation_delta_spectrum, derivation_system, is_delta_derivation, solve_delta_derivations,
    DerivationSpace, SpectrumEntry, SpectrumReport,
};
pub use np::{
    build_a_phi, kantor_product, np_check, np_commutator_bracket, np_deform_h, np_from_derivation,
    poisson_from_two_derivations, scale_q, tensor_np, Side,
};
pub use rota_baxter::{
    check_rota_baxter, induced_is_left_symmetric, rb_induced_products, RbProduct, RbVariant,
};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{add_scaled, Table, Vector};
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::scalar::Scalar;

/// A square matrix acting on coordinate columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    matrix: ExactMatrix,
}

impl LinearMap {
    pub fn new(matrix: ExactMatrix) -> Result<LinearMap> {
        if matrix.rows() != matrix.cols() {
            return Err(Error::DimensionMismatch {
                expected: matrix.rows(),
                got: matrix.cols(),
            });
        }
        Ok(LinearMap { matrix })
    }

    pub fn zero(n: usize) -> LinearMap {
        LinearMap {
            matrix: ExactMatrix::zeros(n, n),
        }
    }

    pub fn identity(n: usize) -> LinearMap {
        LinearMap {
            matrix: ExactMatrix::identity(n),
        }
    }

    /// Rows of the matrix as scalar strings.
    pub fn parse(rows: &[&[&str]]) -> Result<LinearMap> {
        LinearMap::new(ExactMatrix::parse(rows)?)
    }

    /// `images[j]` is the image of `e_j`.
    pub fn from_images(images: &[Vector]) -> Result<LinearMap> {
        let n = images.len();
        let mut m = ExactMatrix::zeros(n, n);
        for (j, col) in images.iter().enumerate() {
            if col.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: col.len(),
                });
            }
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(LinearMap { matrix: m })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        self.matrix.get(i, j)
    }

    /// Image of `e_j`.
    pub fn image(&self, j: usize) -> Vector {
        (0..self.dim())
            .map(|i| self.matrix.get(i, j).clone())
            .collect()
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vector> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: v.len(),
            });
        }
        Ok(self.matrix.mul_vec(v))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        LinearMap::new(self.matrix.mul(&other.matrix)?)
    }

    pub fn commutes_with(&self, other: &LinearMap) -> Result<bool> {
        Ok(self.compose(other)? == other.compose(self)?)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        if self.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: self.dim(),
            });
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MapJson {
    matrix: Vec<Vec<Scalar>>,
}

impl Serialize for LinearMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n = self.dim();
        MapJson {
            matrix: (0..n).map(|i| self.matrix.row(i).to_vec()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LinearMap {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = MapJson::deserialize(d)?;
        let m = ExactMatrix::from_rows(j.matrix).map_err(serde::de::Error::custom)?;
        LinearMap::new(m).map_err(serde::de::Error::custom)
    }
}

/// Table of the bilinear map with `e_i * e_j = f(i, j)`.
pub(crate) fn table_from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Table {
    let mut t = Table::zero(n);
    for i in 0..n {
        for j in 0..n {
            t.set_basis_product(i, j, &f(i, j));
        }
    }
    t
}

/// Product `x y` in `t` for arbitrary vectors of matching length.
pub(crate) fn mul(t: &Table, x: &[Scalar], y: &[Scalar]) -> Vector {
    t.mul(x, y).expect("dimensions checked by caller")
}

pub(crate) fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    let mut out = a.to_vec();
    add_scaled(&mut out, &Scalar::from_int(-1), b);
    out
}

pub(crate) fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    let mut out = a.to_vec();
    add_scaled(&mut out, &Scalar::one(), b);
    out
}
