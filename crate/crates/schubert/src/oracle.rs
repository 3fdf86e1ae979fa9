//! Brute-force tangent dimensions, independent of the closed formulas.
//!
//! A Schubert condition `dim(L /\ P^{a_i}) >= r+1-i` says the composite
//! `L -> H -> H/P^{a_i}` has rank at most `i`, i.e. all `(i+1)`-minors of
//! an `(r+1) x a_i` matrix vanish. On the affine chart of the Grassmannian
//! centered at the point, those minors are polynomials in the chart
//! coordinates; the Zariski tangent space of the scheme they cut out is the
//! kernel of their differentials. This module expands every such minor with
//! first-order (dual-number) arithmetic and row-reduces the collected
//! gradients — no active sets, no induced permutations, no case analysis.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::flag::Flag;
use crate::matrix::Matrix;
use crate::schubert::{in_sigma, GrassPoint, SchubertIndex};

/// First-order jet `val + sum_t grad[t] eps_t` with all `eps` products zero.
#[derive(Clone)]
struct Dual {
    val: Scalar,
    grad: Vec<Scalar>,
}

impl Dual {
    fn zero(field: FieldSpec, n: usize) -> Dual {
        Dual {
            val: field.zero(),
            grad: vec![field.zero(); n],
        }
    }

    fn is_zero(&self) -> bool {
        self.val.is_zero() && self.grad.iter().all(|g| g.is_zero())
    }

    fn add(&self, o: &Dual) -> Dual {
        Dual {
            val: self.val.add(&o.val),
            grad: self
                .grad
                .iter()
                .zip(&o.grad)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    fn sub(&self, o: &Dual) -> Dual {
        Dual {
            val: self.val.sub(&o.val),
            grad: self
                .grad
                .iter()
                .zip(&o.grad)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    fn mul(&self, o: &Dual) -> Dual {
        Dual {
            val: self.val.mul(&o.val),
            grad: self
                .grad
                .iter()
                .zip(&o.grad)
                .map(|(a, b)| self.val.mul(b).add(&o.val.mul(a)))
                .collect(),
        }
    }
}

/// Cofactor expansion along the first row.
fn dual_det(m: &[Vec<Dual>], field: FieldSpec, n: usize) -> Dual {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut acc = Dual::zero(field, n);
    for (c, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Dual>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != c)
                    .map(|(_, d)| d.clone())
                    .collect()
            })
            .collect();
        let term = entry.mul(&dual_det(&minor, field, n));
        acc = if c % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

/// Zariski tangent dimension at `point` of the scheme cut out by all the
/// given Schubert conditions, by differentiating every defining minor.
/// The point must lie in every (closed) variety.
pub fn tangent_dim_determinantal(
    point: &GrassPoint,
    conditions: &[(&Flag, &SchubertIndex)],
) -> Result<usize> {
    for (flag, idx) in conditions {
        if !in_sigma(point, flag, idx)? {
            return Err(Error::Precondition(
                "point is outside one of the Schubert varieties".into(),
            ));
        }
    }
    let field = point.space().field();
    let d = point.ambient_dim();
    let r1 = point.r() + 1;
    let n = r1 * (d - r1);

    // affine chart at the point: basis rows L0_j + sum_t M[j,t] e_{c_t},
    // where c_t runs over the non-pivot columns of the canonical basis
    let l0 = point.space().basis();
    let pivots: Vec<usize> = (0..r1)
        .map(|j| {
            l0.row(j)
                .iter()
                .position(|e| !e.is_zero())
                .expect("canonical bases have no zero rows")
        })
        .collect();
    let complement: Vec<usize> = (0..d).filter(|c| !pivots.contains(c)).collect();

    let mut gradients: Vec<Vec<Scalar>> = Vec::new();
    for (flag, idx) in conditions {
        for i in 0..r1 {
            let a = idx.get(i);
            let k = i + 1; // minor size for the rank-at-most-i condition
            if a == 0 || k > r1 || k > a {
                continue;
            }
            // pairing rows y with ker = P^a identify H/P^a with k^a
            let ann = flag.step(a).annihilator();
            debug_assert_eq!(ann.rows(), a);
            let entry = |j: usize, col: usize| -> Dual {
                let mut val = field.zero();
                for t in 0..d {
                    val = val.add(&l0.get(j, t).mul(ann.get(col, t)));
                }
                let mut grad = vec![field.zero(); n];
                for (t, &c) in complement.iter().enumerate() {
                    grad[j * (d - r1) + t] = ann.get(col, c).clone();
                }
                Dual { val, grad }
            };
            let nmat: Vec<Vec<Dual>> = (0..r1)
                .map(|j| (0..a).map(|col| entry(j, col)).collect())
                .collect();
            for rows in (0..r1).combinations(k) {
                for cols in (0..a).combinations(k) {
                    let sub: Vec<Vec<Dual>> = rows
                        .iter()
                        .map(|&rr| cols.iter().map(|&cc| nmat[rr][cc].clone()).collect())
                        .collect();
                    let det = dual_det(&sub, field, n);
                    assert!(
                        det.val.is_zero(),
                        "membership guarantees every defining minor vanishes"
                    );
                    if !det.grad.iter().all(|g| g.is_zero()) {
                        gradients.push(det.grad);
                    }
                }
            }
        }
    }

    if gradients.is_empty() {
        return Ok(n);
    }
    let jac = Matrix::from_rows(field, gradients)?;
    Ok(n - jac.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schubert::{tangent_dim_single, tangent_report};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const Q: FieldSpec = FieldSpec::Rational;

    fn point(rows: &[&[i64]]) -> GrassPoint {
        GrassPoint::from_rows(&Matrix::from_i64(Q, rows)).unwrap()
    }

    #[test]
    fn single_point_variety_in_the_projective_line() {
        // G(1,2) with a = (1): the variety is the single point P^1, smooth
        // of dimension 0
        let p = Flag::standard(Q, 2);
        let a = SchubertIndex::new(2, vec![1]).unwrap();
        let l = point(&[&[0, 1]]);
        assert_eq!(tangent_dim_determinantal(&l, &[(&p, &a)]).unwrap(), 0);
    }

    #[test]
    fn matches_chain_formula_on_and_off_the_stratum() {
        let p = Flag::standard(Q, 4);
        let a = SchubertIndex::new(4, vec![0, 2]).unwrap();
        // stratum point
        let generic = point(&[&[0, 0, 1, 0], &[1, 0, 0, 1]]);
        assert_eq!(tangent_dim_determinantal(&generic, &[(&p, &a)]).unwrap(), 3);
        assert_eq!(tangent_dim_single(&generic, &p, &a).unwrap(), 3);
        // excess point L = P^2: every minor of the degenerate block has a
        // vanishing differential, so nothing is imposed
        let excess = point(&[&[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert_eq!(tangent_dim_determinantal(&excess, &[(&p, &a)]).unwrap(), 4);
        assert_eq!(tangent_dim_single(&excess, &p, &a).unwrap(), 4);
    }

    #[test]
    fn matches_pair_formula_at_a_crossing() {
        let p = Flag::standard(Q, 4);
        let rows = Matrix::from_i64(
            Q,
            &[
                &[0, 0, 0, 1],
                &[0, 1, 0, 0],
                &[0, 0, 1, 0],
                &[1, 0, 0, 0],
            ],
        );
        let q = Flag::from_basis(&rows).unwrap();
        let a = SchubertIndex::new(4, vec![0, 2]).unwrap();

        let crossing = point(&[&[0, 0, 1, 0], &[1, 0, 0, 1]]);
        let oracle = tangent_dim_determinantal(&crossing, &[(&p, &a), (&q, &a)]).unwrap();
        let rep = tangent_report(&crossing, &p, &a, &q, &a).unwrap();
        assert_eq!(oracle, 3);
        assert_eq!(rep.dim, oracle);

        // at the excess point P^2 the first condition imposes nothing but
        // the second still cuts one direction: Zariski tangent 3 > the
        // component dimension 2, i.e. the point is singular in the fiber
        let excess = point(&[&[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let oracle = tangent_dim_determinantal(&excess, &[(&p, &a), (&q, &a)]).unwrap();
        assert_eq!(oracle, 3);
    }

    #[test]
    fn more_conditions_never_grow_the_tangent_space() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let p = Flag::standard(Q, 4);
        let rows = Matrix::from_i64(
            Q,
            &[
                &[0, 0, 0, 1],
                &[0, 1, 0, 0],
                &[0, 0, 1, 0],
                &[1, 0, 0, 0],
            ],
        );
        let q = Flag::from_basis(&rows).unwrap();
        let a = SchubertIndex::new(4, vec![0, 2]).unwrap();
        let pt = crate::schubert::sample_intersection_point(&p, &a, &q, &a, &mut rng)
            .unwrap()
            .expect("nonempty");
        let one = tangent_dim_determinantal(&pt, &[(&p, &a)]).unwrap();
        let both = tangent_dim_determinantal(&pt, &[(&p, &a), (&q, &a)]).unwrap();
        assert!(both <= one);
    }
}
