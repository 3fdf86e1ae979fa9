//! Schubert indices, membership predicates, and the closed-form tangent
//! dimensions: the chain formula for a single Schubert condition and the
//! permutation formula for a pair of conditions with respect to flags in
//! arbitrary relative position. Everything here is exact; the independent
//! brute-force counterpart lives in [`crate::oracle`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::flag::{self, Flag, FlagPairClass};
use crate::matrix::Matrix;
use crate::perm::Perm;
use crate::subspace::Subspace;

/// A Schubert index for `G(r+1, d)`: a strictly increasing sequence
/// `0 <= a_0 < a_1 < ... < a_r <= d-1`. The variety it cuts out is
/// `{L : dim(L /\ P^{a_i}) >= r+1-i for all i}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchubertIndex {
    ambient: usize,
    seq: Vec<usize>,
}

impl SchubertIndex {
    pub fn new(ambient: usize, seq: Vec<usize>) -> Result<SchubertIndex> {
        if seq.is_empty() {
            return Err(Error::InvalidIndex("index sequence is empty".into()));
        }
        if seq.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidIndex(format!(
                "index sequence {seq:?} is not strictly increasing"
            )));
        }
        let last = *seq.last().expect("nonempty");
        if last >= ambient {
            return Err(Error::InvalidIndex(format!(
                "index sequence ends at {last}, past the ambient bound {}",
                ambient.saturating_sub(1)
            )));
        }
        if seq.len() > ambient {
            return Err(Error::InvalidIndex(format!(
                "{} indices do not fit in ambient dimension {ambient}",
                seq.len()
            )));
        }
        Ok(SchubertIndex { ambient, seq })
    }

    /// The minimal index `(0, 1, ..., r)`, whose variety is the whole
    /// Grassmannian.
    pub fn minimal(r: usize, ambient: usize) -> Result<SchubertIndex> {
        SchubertIndex::new(ambient, (0..=r).collect())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn r(&self) -> usize {
        self.seq.len() - 1
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    pub fn get(&self, i: usize) -> usize {
        self.seq[i]
    }

    /// Codimension of the Schubert variety: `sum_i (a_i - i)`.
    pub fn codim(&self) -> usize {
        self.seq.iter().enumerate().map(|(i, &a)| a - i).sum()
    }

    /// An index position is active when its condition is not implied by the
    /// next one: `a_0 > 0`, or `a_i > a_{i-1} + 1`.
    pub fn is_active(&self, i: usize) -> bool {
        if i == 0 {
            self.seq[0] > 0
        } else {
            self.seq[i] > self.seq[i - 1] + 1
        }
    }

    pub fn active_indices(&self) -> Vec<usize> {
        (0..self.seq.len()).filter(|&i| self.is_active(i)).collect()
    }
}

impl std::fmt::Display for SchubertIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.seq.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A point of the Grassmannian `G(r+1, d)`: an `(r+1)`-dimensional subspace.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GrassPoint {
    space: Subspace,
}

impl GrassPoint {
    pub fn new(space: Subspace) -> Result<GrassPoint> {
        if space.dim() == 0 {
            return Err(Error::Precondition(
                "a Grassmannian point spans at least a line".into(),
            ));
        }
        Ok(GrassPoint { space })
    }

    /// From a spanning matrix whose rows must be independent.
    pub fn from_rows(m: &Matrix) -> Result<GrassPoint> {
        let space = Subspace::from_spanning(m);
        if space.dim() != m.rows() {
            return Err(Error::DependentVectors);
        }
        GrassPoint::new(space)
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn ambient_dim(&self) -> usize {
        self.space.ambient_dim()
    }

    pub fn r(&self) -> usize {
        self.space.dim() - 1
    }
}

fn check_point_flag(point: &GrassPoint, flag: &Flag) -> Result<()> {
    if point.ambient_dim() != flag.ambient_dim() {
        return Err(Error::AmbientMismatch {
            expected: flag.ambient_dim(),
            found: point.ambient_dim(),
        });
    }
    if point.space.field() != flag.field() {
        return Err(Error::FieldMismatch(
            flag.field().name(),
            point.space.field().name(),
        ));
    }
    Ok(())
}

fn check_index(point: &GrassPoint, flag: &Flag, idx: &SchubertIndex) -> Result<()> {
    check_point_flag(point, flag)?;
    if idx.ambient_dim() != flag.ambient_dim() {
        return Err(Error::AmbientMismatch {
            expected: flag.ambient_dim(),
            found: idx.ambient_dim(),
        });
    }
    if idx.r() != point.r() {
        return Err(Error::Precondition(format!(
            "index length {} does not match point dimension {}",
            idx.r() + 1,
            point.r() + 1
        )));
    }
    Ok(())
}

/// The vanishing sequence of a point with respect to a flag:
/// `v_i = max { c : dim(L /\ P^c) >= r+1-i }`. Always a valid Schubert
/// index, and the maximal one whose variety contains the point.
pub fn vanishing_sequence(point: &GrassPoint, flag: &Flag) -> Result<SchubertIndex> {
    check_point_flag(point, flag)?;
    let d = flag.ambient_dim();
    let r1 = point.space.dim();
    let mut dims = Vec::with_capacity(d + 1);
    for c in 0..=d {
        dims.push(point.space.intersect(flag.step(c))?.dim());
    }
    let seq = (0..r1)
        .map(|i| {
            let need = r1 - i;
            (0..=d)
                .rev()
                .find(|&c| dims[c] >= need)
                .expect("the full step meets the point in full dimension")
        })
        .collect();
    SchubertIndex::new(d, seq)
}

/// Per-position intersection dimensions `e_i = dim(L /\ P^{a_i})`.
fn condition_dims(point: &GrassPoint, flag: &Flag, idx: &SchubertIndex) -> Result<Vec<usize>> {
    (0..=idx.r())
        .map(|i| Ok(point.space.intersect(flag.step(idx.get(i)))?.dim()))
        .collect()
}

/// Membership in the (closed) Schubert variety.
pub fn in_sigma(point: &GrassPoint, flag: &Flag, idx: &SchubertIndex) -> Result<bool> {
    check_index(point, flag, idx)?;
    let r1 = point.space.dim();
    let dims = condition_dims(point, flag, idx)?;
    Ok(dims.iter().enumerate().all(|(i, &e)| e >= r1 - i))
}

/// Membership in the open stratum: in the variety, with equality at every
/// active index position.
pub fn in_sigma_circ(point: &GrassPoint, flag: &Flag, idx: &SchubertIndex) -> Result<bool> {
    check_index(point, flag, idx)?;
    let r1 = point.space.dim();
    let dims = condition_dims(point, flag, idx)?;
    if dims.iter().enumerate().any(|(i, &e)| e < r1 - i) {
        return Ok(false);
    }
    Ok((0..=idx.r()).all(|i| !idx.is_active(i) || dims[i] == r1 - i))
}

/// Tangent dimension of a single Schubert variety at any of its points, by
/// the chain formula. With `S = {i_1 < ... < i_k}` the active positions
/// where the intersection dimension is exactly `r+1-i`, and `i_{k+1} = r+1`:
///
/// `dim = i_1 (d-r-1) + sum_j (i_{j+1} - i_j) (dim(P^{a_{i_j}} + L) - (r+1))`
///
/// For `S` empty this is `(r+1)(d-r-1)`, the whole tangent space of the
/// Grassmannian.
pub fn tangent_dim_single(point: &GrassPoint, flag: &Flag, idx: &SchubertIndex) -> Result<usize> {
    if !in_sigma(point, flag, idx)? {
        return Err(Error::Precondition(
            "point is outside the Schubert variety".into(),
        ));
    }
    let d = flag.ambient_dim();
    let r1 = point.space.dim();
    let h = d - r1;
    let dims = condition_dims(point, flag, idx)?;
    let s: Vec<usize> = idx
        .active_indices()
        .into_iter()
        .filter(|&i| dims[i] == r1 - i)
        .collect();
    let Some(&first) = s.first() else {
        return Ok(r1 * h);
    };
    let mut dim = first * h;
    for (k, &i) in s.iter().enumerate() {
        let next = s.get(k + 1).copied().unwrap_or(r1);
        let span = flag.step(idx.get(i)).sum(&point.space)?.dim();
        dim += (next - i) * (span - r1);
    }
    Ok(dim)
}

/// The flag induced on the point by intersecting with every step and
/// keeping the first occurrence of each dimension, rewritten in coordinates
/// of the point's canonical basis.
pub fn induced_flag(point: &GrassPoint, flag: &Flag) -> Result<Flag> {
    check_point_flag(point, flag)?;
    let d = flag.ambient_dim();
    let r1 = point.space.dim();
    let mut steps = Vec::with_capacity(r1 + 1);
    let mut want = r1;
    for c in 0..=d {
        let w = point.space.intersect(flag.step(c))?;
        // dims fall from r+1 to 0 in steps of at most one, so every value
        // is hit and the loop records each exactly once
        if w.dim() == want {
            steps.push(point.space.coordinates_of(&w)?);
            if want == 0 {
                break;
            }
            want -= 1;
        }
    }
    Flag::from_steps(steps)
}

#[derive(Clone, Debug, Serialize)]
pub struct TangentTerm {
    /// basis position on the point, `0..=r`
    pub j: usize,
    /// deepest active first-flag index at or below `j`
    pub m: usize,
    /// deepest active second-flag index at or below `sigma(j)`
    pub n: usize,
    /// `codim_H(P^m + Q^n + L)`
    pub codim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct JumpWitness {
    /// active position of the first index with `a_i = t`
    pub i: usize,
    /// active position of the second index with `b_i = d - t`
    pub i_prime: usize,
    pub t: usize,
    pub t_prime: usize,
}

/// The full two-condition tangent computation at a point of the open
/// intersection, with everything needed to audit it: the per-position
/// codimension terms, the permutation linking the two induced flags, the
/// ambient flag-pair class, the inversion bound, and — for almost-transverse
/// pairs — whether the dimension jumps and why.
#[derive(Clone, Debug, Serialize)]
pub struct TangentReport {
    pub dim: usize,
    /// `(r+1)(d-r-1) - codim(a) - codim(b)`; negative values are possible
    /// for far-from-transverse pairs
    pub rho_minus_1: i64,
    pub terms: Vec<TangentTerm>,
    /// permutation between the two induced flags, 1-based images
    pub sigma_on_point: Vec<usize>,
    /// ambient flag-pair class
    pub class: String,
    /// defect position for almost-transverse pairs
    #[serde(skip_serializing_if = "Option::is_none")]
    pub defect: Option<usize>,
    /// `rho_minus_1 + inversions(reversal . tau)` for the ambient pair
    /// permutation `tau`: an upper bound for `dim`
    pub bound: i64,
    pub jump: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jump_witness: Option<JumpWitness>,
}

/// Deepest active index value at or below position `j`, or 0 when no
/// active position lies there.
fn active_depth(idx: &SchubertIndex, j: usize) -> usize {
    idx.active_indices()
        .into_iter()
        .filter(|&i| i <= j)
        .map(|i| idx.get(i))
        .max()
        .unwrap_or(0)
}

/// Tangent dimension of the intersection of two Schubert varieties at a
/// point of the open intersection, via the permutation formula
///
/// `dim = rho_minus_1 + sum_j codim_H(P^{m(j)} + Q^{n(j)} + L)`.
pub fn tangent_report(
    point: &GrassPoint,
    p: &Flag,
    a: &SchubertIndex,
    q: &Flag,
    b: &SchubertIndex,
) -> Result<TangentReport> {
    if !in_sigma_circ(point, p, a)? {
        return Err(Error::Precondition(
            "point is outside the open stratum of the first condition".into(),
        ));
    }
    if !in_sigma_circ(point, q, b)? {
        return Err(Error::Precondition(
            "point is outside the open stratum of the second condition".into(),
        ));
    }
    let d = p.ambient_dim();
    let r1 = point.space.dim();

    let ip = induced_flag(point, p)?;
    let iq = induced_flag(point, q)?;
    let sigma = flag::relative_position(&ip, &iq)?.sigma;

    let mut terms = Vec::with_capacity(r1);
    let mut total: i64 = 0;
    for j in 0..r1 {
        let m = active_depth(a, j);
        let n = active_depth(b, sigma.apply(j));
        let span = p.step(m).sum(q.step(n))?.sum(&point.space)?.dim();
        let codim = d - span;
        total += codim as i64;
        terms.push(TangentTerm { j, m, n, codim });
    }

    let rho_minus_1 =
        (r1 as i64) * ((d - r1) as i64) - a.codim() as i64 - b.codim() as i64;
    let dim = rho_minus_1 + total;
    assert!(dim >= 0, "tangent dimension came out negative");

    let class = flag::classify(p, q)?;
    let tau = flag::relative_position(p, q)?.sigma;
    let bound = rho_minus_1 + Perm::reversal(d).compose(&tau).inversions() as i64;

    let (jump, jump_witness, defect) = match class {
        FlagPairClass::AlmostTransverse(t) => {
            let t_prime = d - t;
            let ia = a.active_indices().into_iter().find(|&i| a.get(i) == t);
            let ib = b
                .active_indices()
                .into_iter()
                .find(|&i| b.get(i) == t_prime);
            let witness = match (ia, ib) {
                (Some(i), Some(i_prime)) => {
                    let line = p.step(t).intersect(q.step(t_prime))?;
                    let inside = point.space.contains(&line)?;
                    let spanned = p.step(t).sum(q.step(t_prime))?.contains(&point.space)?;
                    (inside && spanned).then_some(JumpWitness {
                        i,
                        i_prime,
                        t,
                        t_prime,
                    })
                }
                _ => None,
            };
            (witness.is_some(), witness, Some(t))
        }
        _ => (false, None, None),
    };

    Ok(TangentReport {
        dim: dim as usize,
        rho_minus_1,
        terms,
        sigma_on_point: sigma.one_based(),
        class: class.as_str().into(),
        defect,
        bound,
        jump,
        jump_witness,
    })
}

/// Retry budget shared by the randomized samplers.
pub const SAMPLE_RETRY_BUDGET: usize = 64;

/// A random point of the open intersection of two Schubert varieties, or
/// `None` when none was found within the retry budget — in particular when
/// the intersection is structurally empty (no system of distinct
/// representatives among the pairwise step intersections).
pub fn sample_intersection_point(
    p: &Flag,
    a: &SchubertIndex,
    q: &Flag,
    b: &SchubertIndex,
    rng: &mut impl rand::Rng,
) -> Result<Option<GrassPoint>> {
    use itertools::Itertools;

    if a.r() != b.r() {
        return Err(Error::Precondition(
            "the two index sequences have different lengths".into(),
        ));
    }
    let r1 = a.r() + 1;
    let field = p.field();

    let mut w = Vec::with_capacity(r1);
    for j in 0..r1 {
        let mut row = Vec::with_capacity(r1);
        for k in 0..r1 {
            row.push(p.step(a.get(j)).intersect(q.step(b.get(k)))?);
        }
        w.push(row);
    }
    let feasible: Vec<Vec<usize>> = (0..r1)
        .permutations(r1)
        .filter(|pi| (0..r1).all(|j| w[j][pi[j]].dim() > 0))
        .collect();
    if feasible.is_empty() {
        return Ok(None);
    }

    for _ in 0..SAMPLE_RETRY_BUDGET {
        let pi = &feasible[rng.gen_range(0..feasible.len())];
        let rows: Vec<Vec<crate::field::Scalar>> = (0..r1)
            .map(|j| w[j][pi[j]].random_vector(rng))
            .collect();
        let m = Matrix::from_rows(field, rows)?;
        if m.rank() < r1 {
            continue;
        }
        let cand = GrassPoint::new(Subspace::from_spanning(&m))?;
        if in_sigma_circ(&cand, p, a)? && in_sigma_circ(&cand, q, b)? {
            return Ok(Some(cand));
        }
    }
    Ok(None)
}

/// A random point of the open stratum of a single Schubert variety.
pub fn sample_stratum_point(
    p: &Flag,
    a: &SchubertIndex,
    rng: &mut impl rand::Rng,
) -> Result<Option<GrassPoint>> {
    let r1 = a.r() + 1;
    let field = p.field();
    for _ in 0..SAMPLE_RETRY_BUDGET {
        let rows: Vec<Vec<crate::field::Scalar>> = (0..r1)
            .map(|j| p.step(a.get(j)).random_vector(rng))
            .collect();
        let m = Matrix::from_rows(field, rows)?;
        if m.rank() < r1 {
            continue;
        }
        let cand = GrassPoint::new(Subspace::from_spanning(&m))?;
        if in_sigma_circ(&cand, p, a)? {
            return Ok(Some(cand));
        }
    }
    Ok(None)
}

/// A point whose vanishing sequence with respect to `p` is exactly
/// `target`. Random attempts first; on exhaustion, the deterministic
/// staircase (one basis vector per depth) which always has the exact
/// sequence.
pub fn sample_with_vanishing(
    p: &Flag,
    target: &SchubertIndex,
    rng: &mut impl rand::Rng,
) -> Result<GrassPoint> {
    let r1 = target.r() + 1;
    let field = p.field();
    for _ in 0..SAMPLE_RETRY_BUDGET {
        let rows: Vec<Vec<crate::field::Scalar>> = (0..r1)
            .map(|i| p.step(target.get(i)).random_vector(rng))
            .collect();
        let Ok(m) = Matrix::from_rows(field, rows) else {
            continue;
        };
        if m.rank() < r1 {
            continue;
        }
        let cand = GrassPoint::new(Subspace::from_spanning(&m))?;
        if vanishing_sequence(&cand, p)? == *target {
            return Ok(cand);
        }
    }
    // staircase fallback: rows of pairwise distinct depth are independent
    // and give the exact target sequence
    let mut rows = Vec::with_capacity(r1);
    for i in 0..r1 {
        let v = target.get(i);
        let step = p.step(v);
        let deeper = p.step(v + 1);
        let row = (0..step.dim())
            .map(|k| step.basis().row_vec(k))
            .find(|row| !deeper.contains_vector(row))
            .expect("a codimension-one substep misses some basis row");
        rows.push(row);
    }
    let point = GrassPoint::from_rows(&Matrix::from_rows(field, rows)?)?;
    let got = vanishing_sequence(&point, p)?;
    assert_eq!(got, *target, "staircase construction has exact vanishing");
    Ok(point)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const Q: FieldSpec = FieldSpec::Rational;

    fn point(rows: &[&[i64]]) -> GrassPoint {
        GrassPoint::from_rows(&Matrix::from_i64(Q, rows)).unwrap()
    }

    #[test]
    fn index_validation_and_invariants() {
        assert!(SchubertIndex::new(4, vec![]).is_err());
        assert!(SchubertIndex::new(4, vec![0, 0]).is_err());
        assert!(SchubertIndex::new(4, vec![0, 4]).is_err());
        let min = SchubertIndex::minimal(2, 4).unwrap();
        assert_eq!(min.codim(), 0);
        assert!(min.active_indices().is_empty());
        let a = SchubertIndex::new(4, vec![0, 2]).unwrap();
        assert_eq!(a.codim(), 1);
        assert_eq!(a.active_indices(), vec![1]);
        assert_eq!(a.to_string(), "(0, 2)");
    }

    #[test]
    fn vanishing_sequence_fixture() {
        // L = span{e_3, e_1 + e_4} against the standard flag in k^4 has
        // intersection dims (2, 1, 1, 0, 0) along the steps, hence (0, 2).
        let p = Flag::standard(Q, 4);
        let l = point(&[&[0, 0, 1, 0], &[1, 0, 0, 1]]);
        let v = vanishing_sequence(&l, &p).unwrap();
        assert_eq!(v.seq(), &[0, 2]);
    }

    #[test]
    fn membership_and_stratum() {
        let p = Flag::standard(Q, 4);
        let a = SchubertIndex::new(4, vec![0, 2]).unwrap();
        let generic = point(&[&[0, 0, 1, 0], &[1, 0, 0, 1]]);
        assert!(in_sigma(&generic, &p, &a).unwrap());
        assert!(in_sigma_circ(&generic, &p, &a).unwrap());
        // L = P^2 itself exceeds the active condition: in the variety,
        // outside the open stratum
        let excess = point(&[&[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert!(in_sigma(&excess, &p, &a).unwrap());
        assert!(!in_sigma_circ(&excess, &p, &a).unwrap());
        let outside = point(&[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        assert!(!in_sigma(&outside, &p, &a).unwrap());
    }

    #[test]
    fn single_tangent_chain_formula() {
        let p = Flag::standard(Q, 4);
        let a = SchubertIndex::new(4, vec![0, 2]).unwrap();
        // stratum point: dim = dim Gr - codim = 4 - 1
        let generic = point(&[&[0, 0, 1, 0], &[1, 0, 0, 1]]);
        assert_eq!(tangent_dim_single(&generic, &p, &a).unwrap(), 3);
        // excess point: no active equality survives, full tangent space
        let excess = point(&[&[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert_eq!(tangent_dim_single(&excess, &p, &a).unwrap(), 4);
        // whole-Grassmannian index
        let min = SchubertIndex::minimal(1, 4).unwrap();
        assert_eq!(tangent_dim_single(&generic, &p, &min).unwrap(), 4);
        // membership is a precondition
        let outside = point(&[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        assert!(tangent_dim_single(&outside, &p, &a).is_err());
    }

    /// The two-line fixture: P standard, Q built from the basis
    /// (e_4, e_2, e_3, e_1), an almost-transverse pair with defect at 2.
    fn two_line_pair() -> (Flag, Flag) {
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
        (p, q)
    }

    #[test]
    fn pair_formula_on_crossing_and_component_points() {
        let (p, q) = two_line_pair();
        let a = SchubertIndex::new(4, vec![0, 2]).unwrap();

        // crossing point of the two components: dimension jumps to 3
        let crossing = point(&[&[0, 0, 1, 0], &[1, 0, 0, 1]]);
        let rep = tangent_report(&crossing, &p, &a, &q, &a).unwrap();
        assert_eq!(rep.rho_minus_1, 2);
        assert_eq!(rep.dim, 3);
        assert_eq!(rep.class, "almost");
        assert_eq!(rep.defect, Some(2));
        assert!(rep.jump);
        let w = rep.jump_witness.unwrap();
        assert_eq!((w.i, w.i_prime, w.t, w.t_prime), (1, 1, 2, 2));

        // generic point of the component through the defect line: dim 2
        let z1 = point(&[&[0, 0, 1, 0], &[0, 1, 0, 1]]);
        let rep = tangent_report(&z1, &p, &a, &q, &a).unwrap();
        assert_eq!(rep.dim, 2);
        assert!(!rep.jump);

        // generic point of the other component: dim 2
        let z2 = point(&[&[1, 0, 1, 0], &[0, 0, 0, 1]]);
        let rep = tangent_report(&z2, &p, &a, &q, &a).unwrap();
        assert_eq!(rep.dim, 2);
        assert!(!rep.jump);

        // bound: rho-1 + one inversion for an almost-transverse pair
        assert_eq!(rep.bound, 3);
        assert!(rep.dim as i64 <= rep.bound);
    }

    #[test]
    fn pair_formula_rejects_non_stratum_points() {
        let (p, q) = two_line_pair();
        let a = SchubertIndex::new(4, vec![0, 2]).unwrap();
        // P^2 itself is in both closed varieties but exceeds the first
        let excess = point(&[&[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert!(in_sigma(&excess, &p, &a).unwrap());
        assert!(tangent_report(&excess, &p, &a, &q, &a).is_err());
    }

    #[test]
    fn identical_pair_matches_single_variety() {
        // with p = q and a = b the intersection is the variety itself, so
        // the pair formula must reproduce the single-condition dimension
        let p = Flag::standard(Q, 4);
        let a = SchubertIndex::new(4, vec![0, 2]).unwrap();
        let l = point(&[&[0, 0, 1, 0], &[1, 0, 0, 1]]);
        let rep = tangent_report(&l, &p, &a, &p, &a).unwrap();
        assert_eq!(rep.dim, tangent_dim_single(&l, &p, &a).unwrap());
        assert_eq!(rep.class, "identical");
        // bound for identical flags: rho-1 + d(d-1)/2
        assert_eq!(rep.bound, rep.rho_minus_1 + 6);
    }

    #[test]
    fn samplers_land_where_asked() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let (p, q) = two_line_pair();
        let a = SchubertIndex::new(4, vec![0, 2]).unwrap();
        let pt = sample_intersection_point(&p, &a, &q, &a, &mut rng)
            .unwrap()
            .expect("nonempty intersection");
        assert!(in_sigma_circ(&pt, &p, &a).unwrap());
        assert!(in_sigma_circ(&pt, &q, &a).unwrap());

        let st = sample_stratum_point(&p, &a, &mut rng).unwrap().unwrap();
        assert!(in_sigma_circ(&st, &p, &a).unwrap());

        let target = SchubertIndex::new(4, vec![2, 3]).unwrap();
        let ex = sample_with_vanishing(&p, &target, &mut rng).unwrap();
        assert_eq!(vanishing_sequence(&ex, &p).unwrap(), target);
    }

    #[test]
    fn structurally_empty_intersection_returns_none() {
        // transverse flags in k^2: the two point conditions pick different
        // points of the projective line, so the intersection is empty
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let p = Flag::standard(Q, 2);
        let rows = Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]);
        let q = Flag::from_basis(&rows).unwrap();
        let a = SchubertIndex::new(2, vec![1]).unwrap();
        assert!(sample_intersection_point(&p, &a, &q, &a, &mut rng)
            .unwrap()
            .is_none());
    }
}
