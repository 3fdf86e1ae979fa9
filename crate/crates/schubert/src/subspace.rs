//! Linear subspaces of k^d held in a canonical form: the RREF basis of the
//! row space, zero rows dropped. Canonicality makes equality of subspaces a
//! plain entrywise comparison, which the flag and Schubert layers rely on.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix, // RREF, no zero rows
}

impl Subspace {
    /// Row space of `spanning`, canonicalized.
    pub fn from_spanning(spanning: &Matrix) -> Subspace {
        let (r, _) = spanning.rref();
        Subspace {
            ambient: spanning.cols(),
            basis: r.drop_zero_rows(),
        }
    }

    pub fn zero(field: FieldSpec, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(
                self.field().name(),
                other.field().name(),
            ));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(Subspace::from_spanning(&self.basis.stack(&other.basis)?))
    }

    /// Rows spanning the annihilator `{y : B y = 0}` of this subspace. A
    /// vector lies in the subspace iff it pairs to zero with every
    /// annihilator row.
    pub fn annihilator(&self) -> Matrix {
        if self.dim() == 0 {
            return Matrix::identity(self.field(), self.ambient);
        }
        self.basis.kernel()
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let eqs = self.annihilator().stack(&other.annihilator())?;
        Ok(Subspace {
            ambient: self.ambient,
            basis: eqs.kernel(),
        })
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.sum(other)?.dim() == self.dim())
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient);
        self.reduce(v).is_some()
    }

    /// Coordinates of `v` with respect to the canonical basis, or `None`
    /// when `v` is outside the subspace. Because the basis is in RREF, the
    /// coordinates are just the entries of `v` at the pivot columns.
    pub fn reduce(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let mut coords = Vec::with_capacity(self.dim());
        let mut rem: Vec<Scalar> = v.to_vec();
        for i in 0..self.dim() {
            let pivot = self
                .basis
                .row(i)
                .iter()
                .position(|e| !e.is_zero())
                .expect("no zero rows in a canonical basis");
            let c = rem[pivot].clone();
            if !c.is_zero() {
                for j in 0..self.ambient {
                    rem[j] = rem[j].sub(&c.mul(self.basis.get(i, j)));
                }
            }
            coords.push(c);
        }
        if rem.iter().all(|e| e.is_zero()) {
            Some(coords)
        } else {
            None
        }
    }

    /// Rewrites a subspace of `self` in coordinates of `self`'s basis,
    /// producing a subspace of k^{dim self}.
    pub fn coordinates_of(&self, sub: &Subspace) -> Result<Subspace> {
        self.check_compatible(sub)?;
        let mut rows = Vec::with_capacity(sub.dim());
        for i in 0..sub.dim() {
            let coords = self.reduce(sub.basis.row(i)).ok_or_else(|| {
                Error::Precondition("subspace is not contained in the reference space".into())
            })?;
            rows.push(coords);
        }
        let m = if rows.is_empty() {
            Matrix::zeros(self.field(), 0, self.dim())
        } else {
            Matrix::from_rows(self.field(), rows)?
        };
        Ok(Subspace::from_spanning(&m))
    }

    /// A random vector of the subspace; zero only when the subspace is zero.
    pub fn random_vector(&self, rng: &mut impl rand::Rng) -> Vec<Scalar> {
        let field = self.field();
        loop {
            let mut v = vec![field.zero(); self.ambient];
            for i in 0..self.dim() {
                let c = field.random(rng);
                if c.is_zero() {
                    continue;
                }
                for j in 0..self.ambient {
                    v[j] = v[j].add(&c.mul(self.basis.get(i, j)));
                }
            }
            if self.dim() == 0 || !v.iter().all(|e| e.is_zero()) {
                return v;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rational;

    fn span(rows: &[&[i64]]) -> Subspace {
        Subspace::from_spanning(&Matrix::from_i64(Q, rows))
    }

    #[test]
    fn canonical_equality() {
        let u = span(&[&[1, 0, 1], &[0, 1, 1]]);
        let v = span(&[&[1, 1, 2], &[1, -1, 0]]);
        assert_eq!(u, v);
        assert_eq!(u.dim(), 2);
    }

    #[test]
    fn modular_law_on_fixed_instance() {
        let u = span(&[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let v = span(&[&[0, 1, 1, 0], &[0, 0, 0, 1]]);
        let s = u.sum(&v).unwrap();
        let i = u.intersect(&v).unwrap();
        assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
    }

    #[test]
    fn intersection_is_the_common_locus() {
        let u = span(&[&[1, 0, 0], &[0, 1, 0]]);
        let v = span(&[&[0, 1, 0], &[0, 0, 1]]);
        let i = u.intersect(&v).unwrap();
        assert_eq!(i, span(&[&[0, 1, 0]]));
    }

    #[test]
    fn containment_and_reduce() {
        let u = span(&[&[1, 0, 1], &[0, 1, 1]]);
        assert!(u.contains_vector(&[
            Q.from_i64(2),
            Q.from_i64(3),
            Q.from_i64(5)
        ]));
        assert!(!u.contains_vector(&[
            Q.from_i64(0),
            Q.from_i64(0),
            Q.from_i64(1)
        ]));
        let sub = span(&[&[1, 1, 2]]);
        let coords = u.coordinates_of(&sub).unwrap();
        assert_eq!(coords.dim(), 1);
        assert_eq!(coords.ambient_dim(), 2);
    }

    #[test]
    fn zero_and_full() {
        let z = Subspace::zero(Q, 4);
        let f = Subspace::full(Q, 4);
        assert_eq!(z.dim(), 0);
        assert_eq!(f.dim(), 4);
        assert!(f.contains(&z).unwrap());
        assert_eq!(f.intersect(&z).unwrap(), z);
        assert_eq!(f.sum(&z).unwrap(), f);
        assert_eq!(z.annihilator().rows(), 4);
        assert_eq!(f.annihilator().rows(), 0);
    }
}
