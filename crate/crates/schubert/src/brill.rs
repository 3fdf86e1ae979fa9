//! Brill-Noether numerology for a twice-marked curve — the adjusted count
//! `rho`, the modified count `rho_hat` that detects emptiness — plus
//! concrete linear-algebra models of the fibers for a twice-marked curve of
//! genus one, keyed by how the line bundle sits relative to the two marked
//! points.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::flag::{self, Flag, FlagPairClass};
use crate::perm::Perm;
use crate::schubert::{self, SchubertIndex};
use crate::subspace::Subspace;

/// Degree-`d`, rank-`r` series data on a genus-`g` curve with ramification
/// sequences `a`, `b` at two marked points. Unlike a Schubert index, the
/// entries may reach `d` (a section vanishing to full degree).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BnData {
    g: usize,
    r: usize,
    d: usize,
    a: Vec<usize>,
    b: Vec<usize>,
}

fn check_sequence(label: &str, seq: &[usize], r: usize, d: usize) -> Result<()> {
    if seq.len() != r + 1 {
        return Err(Error::InvalidIndex(format!(
            "{label} has {} entries, expected r+1 = {}",
            seq.len(),
            r + 1
        )));
    }
    if seq.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidIndex(format!(
            "{label} = {seq:?} is not strictly increasing"
        )));
    }
    if *seq.last().expect("nonempty") > d {
        return Err(Error::InvalidIndex(format!(
            "{label} = {seq:?} exceeds the degree {d}"
        )));
    }
    Ok(())
}

impl BnData {
    pub fn new(g: usize, r: usize, d: usize, a: Vec<usize>, b: Vec<usize>) -> Result<BnData> {
        check_sequence("a", &a, r, d)?;
        check_sequence("b", &b, r, d)?;
        Ok(BnData { g, r, d, a, b })
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn a(&self) -> &[usize] {
        &self.a
    }

    pub fn b(&self) -> &[usize] {
        &self.b
    }

    /// The adjusted Brill-Noether number
    /// `rho = g - (r+1)(g+r-d) - sum(a_i - i) - sum(b_i - i)`.
    pub fn rho(&self) -> i64 {
        let g = self.g as i64;
        let r = self.r as i64;
        let d = self.d as i64;
        let ram = |s: &[usize]| -> i64 {
            s.iter()
                .enumerate()
                .map(|(i, &v)| v as i64 - i as i64)
                .sum()
        };
        g - (r + 1) * (g + r - d) - ram(&self.a) - ram(&self.b)
    }

    /// The modified count
    /// `rho_hat = g - sum_j max(0, a_j + b_{r-j} - (d-g))`,
    /// nonnegative exactly when series with this ramification exist.
    pub fn rho_hat(&self) -> i64 {
        let slack = self.d as i64 - self.g as i64;
        let excess: i64 = (0..=self.r)
            .map(|j| {
                let s = self.a[j] as i64 + self.b[self.r - j] as i64;
                (s - slack).max(0)
            })
            .sum();
        self.g as i64 - excess
    }
}

/// Whether an attained vanishing sequence sits in the open stratum of the
/// required one: at every active position `j` of `required`, exactly
/// `r+1-j` attained entries reach `required[j]`. Requires pointwise
/// domination (`attained >= required`), i.e. membership in the closed
/// variety.
pub fn gcirc_membership(attained: &[usize], required: &[usize]) -> Result<bool> {
    if attained.len() != required.len() {
        return Err(Error::Precondition(
            "sequences have different lengths".into(),
        ));
    }
    if attained.iter().zip(required).any(|(&x, &y)| x < y) {
        return Err(Error::Precondition(
            "attained sequence does not dominate the required one".into(),
        ));
    }
    let r1 = required.len();
    for j in 0..r1 {
        let active = if j == 0 {
            required[0] > 0
        } else {
            required[j] > required[j - 1] + 1
        };
        if !active {
            continue;
        }
        let reach = attained.iter().filter(|&&x| x >= required[j]).count();
        if reach != r1 - j {
            return Ok(false);
        }
    }
    Ok(true)
}

/// How a degree-`d` line bundle on a genus-1 curve sits relative to the two
/// marked points: not of the form `O(t p + (d-t) q)` at all, concentrated
/// at one point, or split as `t p + (d-t) q` with `0 < t < d`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FiberKind {
    Generic,
    AllP,
    AllQ,
    Mixed(usize),
}

impl FiberKind {
    pub fn label(&self) -> String {
        match self {
            FiberKind::Generic => "generic".into(),
            FiberKind::AllP => "allp".into(),
            FiberKind::AllQ => "allq".into(),
            FiberKind::Mixed(t) => format!("mixed:{t}"),
        }
    }
}

impl std::str::FromStr for FiberKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<FiberKind> {
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "generic" => Ok(FiberKind::Generic),
            "allp" => Ok(FiberKind::AllP),
            "allq" => Ok(FiberKind::AllQ),
            _ => {
                if let Some(t) = lower.strip_prefix("mixed:") {
                    let t: usize = t
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad split position in {s:?}")))?;
                    Ok(FiberKind::Mixed(t))
                } else {
                    Err(Error::Parse(format!(
                        "unknown fiber kind {s:?}; expected generic, allp, allq, or mixed:<t>"
                    )))
                }
            }
        }
    }
}

/// Predicted tangent dimensions at stratum points of a nonempty fiber.
#[derive(Clone, Copy, Debug, Serialize)]
pub enum Expected {
    Exact(i64),
    /// `lo` off the jump locus, `hi` on it.
    JumpPair { lo: i64, hi: i64 },
}

/// A concrete realization of one fiber as a Schubert intersection problem:
/// flags for the vanishing filtrations at the two points and (possibly
/// reindexed) Schubert indices.
pub enum FiberModel {
    Empty { reason: String },
    Nonempty(Box<FiberProblem>),
}

pub struct FiberProblem {
    pub p: Flag,
    pub q: Flag,
    pub a: SchubertIndex,
    pub b: SchubertIndex,
    pub class: FlagPairClass,
    pub expected: Expected,
}

/// First index where the transverse feasibility bound fails, i.e.
/// `a_j + b_{r-j} >= d`.
fn infeasible_at(d: usize, a: &[usize], b: &[usize]) -> Option<usize> {
    let r = a.len() - 1;
    (0..=r).find(|&j| a[j] + b[r - j] >= d)
}

fn pair_rho_minus_1(d: usize, a: &SchubertIndex, b: &SchubertIndex) -> i64 {
    let r1 = (a.r() + 1) as i64;
    r1 * (d as i64 - r1) - a.codim() as i64 - b.codim() as i64
}

/// Builds the linear-algebra model of the genus-1 twice-marked fiber for
/// the given bundle kind, or reports why it is empty. Every emptiness
/// branch is elementary:
///
/// * full vanishing (`a_r = d` or `b_r = d`) needs the bundle concentrated
///   at that point, and then the vanishing flag stalls at the last step, so
///   the index is reshifted `d -> d-1` — or the fiber is empty when two
///   sections would have to vanish fully;
/// * against transverse flags, `a_j + b_{r-j} >= d` starves the `j`-th
///   basis vector (no system of distinct representatives);
/// * for a split bundle, a pair summing exactly to `d` survives only when
///   it matches the split `(t, d-t)`, and at most one position can use the
///   one section supported on the marked points. When one does, the fiber
///   is the support case: every member contains that section's line, and
///   the model replaces the `t`-th step of the first flag so that the
///   problem becomes transverse with index `a_j -> t-1`.
pub fn genus1_fiber_model(
    field: FieldSpec,
    d: usize,
    kind: FiberKind,
    a: &[usize],
    b: &[usize],
    rng: &mut impl rand::Rng,
) -> Result<FiberModel> {
    if a.len() != b.len() {
        return Err(Error::Precondition(
            "the two ramification sequences have different lengths".into(),
        ));
    }
    let r = a.len().checked_sub(1).ok_or_else(|| {
        Error::InvalidIndex("ramification sequences are empty".into())
    })?;
    check_sequence("a", a, r, d)?;
    check_sequence("b", b, r, d)?;
    if r + 1 > d {
        return Err(Error::Precondition(format!(
            "a rank-{r} series needs degree at least {}, got {d}",
            r + 1
        )));
    }
    let empty = |reason: &str| Ok(FiberModel::Empty {
        reason: reason.into(),
    });

    match kind {
        FiberKind::Generic => {
            if a[r] == d {
                return empty("full vanishing at the first point needs the bundle O(d p)");
            }
            if b[r] == d {
                return empty("full vanishing at the second point needs the bundle O(d q)");
            }
            if infeasible_at(d, a, b).is_some() {
                return empty("opposite vanishing orders oversubscribe the degree");
            }
            let (p, q) = flag::pair_with_sigma(field, &Perm::reversal(d), rng)?;
            let ai = SchubertIndex::new(d, a.to_vec())?;
            let bi = SchubertIndex::new(d, b.to_vec())?;
            let expected = Expected::Exact(pair_rho_minus_1(d, &ai, &bi));
            let class = flag::classify(&p, &q)?;
            Ok(FiberModel::Nonempty(Box::new(FiberProblem {
                p,
                q,
                a: ai,
                b: bi,
                class,
                expected,
            })))
        }
        FiberKind::AllP | FiberKind::AllQ => {
            // by symmetry: rename so the bundle concentrates at the first
            // point, build, then swap back
            let (first, second, swapped) = match kind {
                FiberKind::AllP => (a, b, false),
                _ => (b, a, true),
            };
            if second[r] == d {
                return empty("the bundle concentrates at one point; sections cannot fully vanish at the other");
            }
            let mut aa = first.to_vec();
            if aa[r] == d {
                if r >= 1 && aa[r - 1] == d - 1 {
                    return empty("only one section vanishes fully at the supporting point");
                }
                // the vanishing flag stalls: order d-1 already implies d
                aa[r] = d - 1;
            }
            if infeasible_at(d, &aa, second).is_some() {
                return empty("opposite vanishing orders oversubscribe the degree");
            }
            let (p, q) = flag::pair_with_sigma(field, &Perm::reversal(d), rng)?;
            let (fa, fb) = if swapped {
                (second.to_vec(), aa)
            } else {
                (aa, second.to_vec())
            };
            let ai = SchubertIndex::new(d, fa)?;
            let bi = SchubertIndex::new(d, fb)?;
            let expected = Expected::Exact(pair_rho_minus_1(d, &ai, &bi));
            let class = flag::classify(&p, &q)?;
            Ok(FiberModel::Nonempty(Box::new(FiberProblem {
                p,
                q,
                a: ai,
                b: bi,
                class,
                expected,
            })))
        }
        FiberKind::Mixed(t) => {
            if t == 0 || t >= d {
                return Err(Error::Config(format!(
                    "split position {t} outside 1..{d}"
                )));
            }
            if a[r] == d {
                return empty("full vanishing at the first point needs the bundle O(d p)");
            }
            if b[r] == d {
                return empty("full vanishing at the second point needs the bundle O(d q)");
            }
            let sums: Vec<usize> = (0..=r).map(|j| a[j] + b[r - j]).collect();
            if sums.iter().any(|&s| s > d) {
                return empty("opposite vanishing orders oversubscribe the degree");
            }
            let at_degree: Vec<usize> = (0..=r).filter(|&j| sums[j] == d).collect();
            match at_degree.as_slice() {
                [] => {
                    // no position touches the special section: the flags
                    // keep their almost-transverse defect and the dimension
                    // may jump on the locus through the defect line
                    let sigma = Perm::reversal(d)
                        .compose(&Perm::adjacent_transposition(d, t - 1));
                    let (p, q) = flag::pair_with_sigma(field, &sigma, rng)?;
                    let ai = SchubertIndex::new(d, a.to_vec())?;
                    let bi = SchubertIndex::new(d, b.to_vec())?;
                    let lo = pair_rho_minus_1(d, &ai, &bi);
                    let class = flag::classify(&p, &q)?;
                    Ok(FiberModel::Nonempty(Box::new(FiberProblem {
                        p,
                        q,
                        a: ai,
                        b: bi,
                        class,
                        expected: Expected::JumpPair { lo, hi: lo + 1 },
                    })))
                }
                [j] => {
                    let j = *j;
                    if (a[j], b[r - j]) != (t, d - t) {
                        return empty(
                            "a full-degree pair exists but misses the split of the bundle",
                        );
                    }
                    // support case: every member contains the line of the
                    // section with divisor t p + (d-t) q
                    let sigma = Perm::reversal(d)
                        .compose(&Perm::adjacent_transposition(d, t - 1));
                    let (p0, q) = flag::pair_with_sigma(field, &sigma, rng)?;
                    let p = replace_step_avoiding_defect(&p0, t)?;
                    let mut aa = a.to_vec();
                    // a_{j-1} = t-1 would force a second full-degree pair,
                    // already rejected above
                    if j > 0 {
                        assert!(aa[j - 1] < t - 1, "collision is unreachable");
                    }
                    aa[j] = t - 1;
                    let ai = SchubertIndex::new(d, aa)?;
                    let bi = SchubertIndex::new(d, b.to_vec())?;
                    let class = flag::classify(&p, &q)?;
                    debug_assert!(
                        !matches!(class, FlagPairClass::AlmostTransverse(_) | FlagPairClass::General),
                        "the replaced step removes the defect"
                    );
                    let expected = Expected::Exact(pair_rho_minus_1(d, &ai, &bi));
                    Ok(FiberModel::Nonempty(Box::new(FiberProblem {
                        p,
                        q,
                        a: ai,
                        b: bi,
                        class,
                        expected,
                    })))
                }
                _ => empty(
                    "two positions both demand the unique section supported on the marked points",
                ),
            }
        }
    }
}

/// Replaces step `t` of the flag by a different intermediate space between
/// steps `t+1` and `t-1`: the preimage of a line in the two-dimensional
/// quotient other than the line of the old step. The old step's line is
/// the class of the defect direction, so the new flag pair is transverse.
fn replace_step_avoiding_defect(p: &Flag, t: usize) -> Result<Flag> {
    let d = p.ambient_dim();
    let above = p.step(t - 1);
    let old = p.step(t);
    let below = p.step(t + 1);
    let v = (0..above.dim())
        .map(|k| above.basis().row_vec(k))
        .find(|row| !old.contains_vector(row))
        .expect("a proper substep misses some basis row");
    let line = Subspace::from_spanning(&crate::matrix::Matrix::from_rows(
        p.field(),
        vec![v],
    )?);
    let replaced = below.sum(&line)?;
    let steps: Vec<Subspace> = (0..=d)
        .map(|c| {
            if c == t {
                replaced.clone()
            } else {
                p.step(c).clone()
            }
        })
        .collect();
    Flag::from_steps(steps)
}

/// One sampled fiber point.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SamplePoint {
    pub dim: usize,
    pub jump: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModelSummary {
    pub class: String,
    pub model_a: Vec<usize>,
    pub model_b: Vec<usize>,
    pub expected: Expected,
    pub samples: Vec<SamplePoint>,
    /// at least one point was found (nonempty models always admit one)
    pub point_found: bool,
    /// every sampled dimension matches the expectation (exactly, or within
    /// the jump pair as decided by the jump classifier)
    pub dims_match: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FiberAnalysis {
    pub kind: String,
    pub d: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub rho: i64,
    pub rho_hat: i64,
    pub empty: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub model: Option<ModelSummary>,
}

/// Builds the fiber model and, when nonempty, samples stratum points and
/// compares their tangent dimensions against the model's expectation.
pub fn analyze_genus1_fiber(
    field: FieldSpec,
    d: usize,
    kind: FiberKind,
    a: &[usize],
    b: &[usize],
    samples: usize,
    rng: &mut impl rand::Rng,
) -> Result<FiberAnalysis> {
    let r = a.len().saturating_sub(1);
    let bn = BnData::new(1, r, d, a.to_vec(), b.to_vec())?;
    let base = FiberAnalysis {
        kind: kind.label(),
        d,
        a: a.to_vec(),
        b: b.to_vec(),
        rho: bn.rho(),
        rho_hat: bn.rho_hat(),
        empty: false,
        reason: None,
        model: None,
    };
    match genus1_fiber_model(field, d, kind, a, b, rng)? {
        FiberModel::Empty { reason } => Ok(FiberAnalysis {
            empty: true,
            reason: Some(reason),
            ..base
        }),
        FiberModel::Nonempty(prob) => {
            let mut pts = Vec::new();
            for _ in 0..samples.max(1) {
                if let Some(pt) =
                    schubert::sample_intersection_point(&prob.p, &prob.a, &prob.q, &prob.b, rng)?
                {
                    pts.push(pt);
                }
            }
            let mut sample_rows = Vec::new();
            let mut dims_match = true;
            for pt in &pts {
                let rep = schubert::tangent_report(pt, &prob.p, &prob.a, &prob.q, &prob.b)?;
                let ok = match prob.expected {
                    Expected::Exact(e) => rep.dim as i64 == e,
                    Expected::JumpPair { lo, hi } => {
                        rep.dim as i64 == if rep.jump { hi } else { lo }
                    }
                };
                dims_match &= ok;
                sample_rows.push(SamplePoint {
                    dim: rep.dim,
                    jump: rep.jump,
                });
            }
            Ok(FiberAnalysis {
                model: Some(ModelSummary {
                    class: prob.class.as_str().into(),
                    model_a: prob.a.seq().to_vec(),
                    model_b: prob.b.seq().to_vec(),
                    expected: prob.expected,
                    samples: sample_rows,
                    point_found: !pts.is_empty(),
                    dims_match,
                }),
                ..base
            })
        }
    }
}
