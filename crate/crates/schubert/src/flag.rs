//! Complete flags indexed by codimension, their pairwise relative position,
//! and coarse classification of flag pairs.
//!
//! A flag stores every step: `step(0)` is the whole space, `step(i)` has
//! dimension `d - i`, `step(d)` is zero. The relative position of two flags
//! is the permutation extracted from the jump table of intersection
//! dimensions, together with a basis adapted to both flags at once.

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;
use crate::perm::Perm;
use crate::subspace::Subspace;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Flag {
    ambient: usize,
    steps: Vec<Subspace>,
}

impl Flag {
    /// Builds the flag whose codimension-`i` step is spanned by the last
    /// `d - i` rows of `basis`. Fails when the rows are dependent.
    pub fn from_basis(basis: &Matrix) -> Result<Flag> {
        let d = basis.cols();
        if basis.rows() != d {
            return Err(Error::ShapeMismatch(basis.rows(), basis.cols(), d, d));
        }
        if basis.rank() != d {
            return Err(Error::DependentVectors);
        }
        let field = basis.field();
        let mut steps = Vec::with_capacity(d + 1);
        for i in 0..d {
            let rows: Vec<Vec<Scalar>> = (i..d).map(|r| basis.row_vec(r)).collect();
            steps.push(Subspace::from_spanning(&Matrix::from_rows(field, rows)?));
        }
        steps.push(Subspace::zero(field, d));
        Ok(Flag { ambient: d, steps })
    }

    /// Builds a flag from explicit steps, `steps[i]` of dimension `d - i`.
    pub fn from_steps(steps: Vec<Subspace>) -> Result<Flag> {
        let Some(first) = steps.first() else {
            return Err(Error::Config("a flag needs at least the full step".into()));
        };
        let d = first.ambient_dim();
        if steps.len() != d + 1 {
            return Err(Error::Config(format!(
                "expected {} steps for ambient dimension {d}, got {}",
                d + 1,
                steps.len()
            )));
        }
        for (i, s) in steps.iter().enumerate() {
            if s.dim() != d - i {
                return Err(Error::Config(format!(
                    "step {i} has dimension {}, expected {}",
                    s.dim(),
                    d - i
                )));
            }
            if i > 0 && !steps[i - 1].contains(s)? {
                return Err(Error::Config(format!("step {i} is not nested in step {}", i - 1)));
            }
        }
        Ok(Flag { ambient: d, steps })
    }

    pub fn standard(field: FieldSpec, d: usize) -> Flag {
        Flag::from_basis(&Matrix::identity(field, d)).expect("identity basis")
    }

    pub fn field(&self) -> FieldSpec {
        self.steps[0].field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn step(&self, i: usize) -> &Subspace {
        &self.steps[i]
    }

    /// Image of the flag under an invertible change of basis acting on row
    /// vectors from the right.
    pub fn transformed(&self, g: &Matrix) -> Result<Flag> {
        let steps = self
            .steps
            .iter()
            .map(|s| Ok(Subspace::from_spanning(&s.basis().mul(g)?)))
            .collect::<Result<Vec<_>>>()?;
        Flag::from_steps(steps)
    }

    fn check_compatible(&self, other: &Flag) -> Result<()> {
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
}

/// Relative position of an ordered flag pair: the permutation, plus a basis
/// with `e_l` in `P^l \ P^{l+1}` and in `Q^{sigma(l)} \ Q^{sigma(l)+1}`
/// whose members span every pairwise intersection of steps.
#[derive(Clone, Debug)]
pub struct RelPosition {
    pub sigma: Perm,
    pub basis: Matrix,
}

/// `table[i][j] = dim(P^i /\ Q^j)` for `0 <= i, j <= d`.
pub fn dim_table(p: &Flag, q: &Flag) -> Result<Vec<Vec<usize>>> {
    p.check_compatible(q)?;
    let d = p.ambient_dim();
    let mut table = vec![vec![0usize; d + 1]; d + 1];
    for i in 0..=d {
        for j in 0..=d {
            table[i][j] = p.step(i).intersect(q.step(j))?.dim();
        }
    }
    Ok(table)
}

pub fn relative_position(p: &Flag, q: &Flag) -> Result<RelPosition> {
    p.check_compatible(q)?;
    let d = p.ambient_dim();
    let table = dim_table(p, q)?;
    let mut images = Vec::with_capacity(d);
    for i in 0..d {
        let j = (0..d)
            .find(|&j| {
                table[i][j] + table[i + 1][j + 1] == table[i + 1][j] + table[i][j + 1] + 1
            })
            .expect("every row of the jump table has exactly one increment");
        images.push(j);
    }
    let sigma = Perm::new(images).expect("jump table increments form a permutation");

    let field = p.field();
    let mut rows = Vec::with_capacity(d);
    for l in 0..d {
        let j = sigma.apply(l);
        let w = p.step(l).intersect(q.step(j))?;
        let w_deeper = p
            .step(l + 1)
            .intersect(q.step(j))?
            .sum(&p.step(l).intersect(q.step(j + 1))?)?;
        // W' has codimension one in W; the first canonical basis row of W
        // outside W' is the canonical witness.
        let row = (0..w.dim())
            .map(|r| w.basis().row_vec(r))
            .find(|r| !w_deeper.contains_vector(r))
            .expect("W' is a proper subspace of W");
        rows.push(row);
    }
    Ok(RelPosition {
        sigma,
        basis: Matrix::from_rows(field, rows)?,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum FlagPairClass {
    Identical,
    Transverse,
    /// Exactly one nonzero complementary-codimension intersection,
    /// `dim(P^t /\ Q^{d-t}) = 1`; the payload is `t`.
    AlmostTransverse(usize),
    General,
}

impl FlagPairClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            FlagPairClass::Identical => "identical",
            FlagPairClass::Transverse => "transverse",
            FlagPairClass::AlmostTransverse(_) => "almost",
            FlagPairClass::General => "general",
        }
    }
}

/// Classifies a flag pair from its complementary-codimension intersections.
/// For tiny ambient dimensions the classes overlap (identical flags in
/// d <= 2 also satisfy the transverse or almost-transverse predicate); the
/// check order here, identical first, picks the most specific label.
pub fn classify(p: &Flag, q: &Flag) -> Result<FlagPairClass> {
    p.check_compatible(q)?;
    if p == q {
        return Ok(FlagPairClass::Identical);
    }
    let d = p.ambient_dim();
    let mut nonzero = Vec::new();
    for t in 1..d {
        let dim = p.step(t).intersect(q.step(d - t))?.dim();
        if dim > 0 {
            nonzero.push((t, dim));
        }
    }
    Ok(match nonzero.as_slice() {
        [] => FlagPairClass::Transverse,
        [(t, 1)] => FlagPairClass::AlmostTransverse(*t),
        _ => FlagPairClass::General,
    })
}

/// A uniformly random invertible matrix, by rejection.
pub fn random_invertible(field: FieldSpec, d: usize, rng: &mut impl Rng) -> Matrix {
    loop {
        let entries = (0..d * d).map(|_| field.random(rng)).collect();
        let m = Matrix::new(field, d, d, entries).expect("shape is consistent");
        if m.rank() == d {
            return m;
        }
    }
}

/// A flag pair realizing the permutation `sigma`, obtained from coordinate
/// flags and a common random change of basis (which leaves the relative
/// position untouched).
pub fn pair_with_sigma(
    field: FieldSpec,
    sigma: &Perm,
    rng: &mut impl Rng,
) -> Result<(Flag, Flag)> {
    let d = sigma.len();
    let g = random_invertible(field, d, rng);
    let p = Flag::standard(field, d).transformed(&g)?;
    let inv = sigma.inverse();
    let rows: Vec<Vec<Scalar>> = (0..d)
        .map(|j| Matrix::identity(field, d).row_vec(inv.apply(j)))
        .collect();
    let q = Flag::from_basis(&Matrix::from_rows(field, rows)?)?.transformed(&g)?;
    Ok((p, q))
}

/// The permutation whose flag pairs land in `class`.
pub fn sigma_for_class(d: usize, class: FlagPairClass, rng: &mut impl Rng) -> Result<Perm> {
    match class {
        FlagPairClass::Identical => Ok(Perm::identity(d)),
        FlagPairClass::Transverse => Ok(Perm::reversal(d)),
        FlagPairClass::AlmostTransverse(t) => {
            if t == 0 || t >= d {
                return Err(Error::Config(format!("defect position {t} outside 1..{d}")));
            }
            Ok(Perm::reversal(d).compose(&Perm::adjacent_transposition(d, t - 1)))
        }
        FlagPairClass::General => {
            if d < 3 {
                return Err(Error::Config(
                    "general-position pairs need ambient dimension at least 3".into(),
                ));
            }
            loop {
                let mut images: Vec<usize> = (0..d).collect();
                for i in (1..d).rev() {
                    images.swap(i, rng.gen_range(0..=i));
                }
                let s = Perm::new(images)?;
                let w = Perm::reversal(d);
                let special = s.is_identity()
                    || s == w
                    || (1..d).any(|t| s == w.compose(&Perm::adjacent_transposition(d, t - 1)));
                if !special {
                    return Ok(s);
                }
            }
        }
    }
}
