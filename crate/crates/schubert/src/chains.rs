//! Chains of components carrying compatible series data: enumeration of
//! refined profiles and a dynamic program for the maximal total `rho`.
//!
//! A profile assigns each component `i` of the chain a pair of sequences
//! `(a^i, b^i)` with `rho_hat(g_i, r, d, a^i, b^i) >= 0`, linked at the
//! nodes by complementarity `a^{i+1}_k = d - b^i_{r-k}`. The first
//! component's `a^1` must dominate the prescribed `a`, the last outgoing
//! `b^n` must dominate `b`.

use std::collections::HashMap;

use itertools::Itertools;
use serde::Serialize;

use crate::brill::BnData;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct ComponentProfile {
    pub genus: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub rho: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainProfile {
    pub components: Vec<ComponentProfile>,
    pub total_rho: i64,
}

/// The component genera modeling a genus-`g` chain: `g` components of
/// genus one, or a single rational component for `g = 0`.
pub fn chain_genera(g: usize) -> Vec<usize> {
    if g == 0 {
        vec![0]
    } else {
        vec![1; g]
    }
}

fn dominates(x: &[usize], y: &[usize]) -> bool {
    x.iter().zip(y).all(|(a, b)| a >= b)
}

/// Sequence carried across a node: `a^{next}_k = d - b_{r-k}`.
fn node_transfer(d: usize, b: &[usize]) -> Vec<usize> {
    let r = b.len() - 1;
    (0..=r).map(|k| d - b[r - k]).collect()
}

fn all_sequences(d: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..=d).combinations(len)
}

fn validate_inputs(genera: &[usize], r: usize, d: usize, a: &[usize], b: &[usize]) -> Result<()> {
    if genera.is_empty() {
        return Err(Error::Precondition("a chain needs at least one component".into()));
    }
    // validates both boundary sequences
    BnData::new(genera[0], r, d, a.to_vec(), b.to_vec())?;
    Ok(())
}

/// All refined chain profiles, endpoints free up to domination. Intended
/// for small inputs; errs out past `limit` profiles rather than filling
/// memory.
pub fn enumerate_refined_chains(
    genera: &[usize],
    r: usize,
    d: usize,
    a: &[usize],
    b: &[usize],
    limit: usize,
) -> Result<Vec<ChainProfile>> {
    validate_inputs(genera, r, d, a, b)?;
    let mut out = Vec::new();
    let mut acc: Vec<ComponentProfile> = Vec::new();
    for a1 in all_sequences(d, r + 1).filter(|s| dominates(s, a)) {
        extend(genera, r, d, b, 0, a1, &mut acc, &mut out, limit)?;
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    genera: &[usize],
    r: usize,
    d: usize,
    b_target: &[usize],
    i: usize,
    incoming: Vec<usize>,
    acc: &mut Vec<ComponentProfile>,
    out: &mut Vec<ChainProfile>,
    limit: usize,
) -> Result<()> {
    let last = i + 1 == genera.len();
    for beta in all_sequences(d, r + 1) {
        if last && !dominates(&beta, b_target) {
            continue;
        }
        let bn = BnData::new(genera[i], r, d, incoming.clone(), beta.clone())?;
        if bn.rho_hat() < 0 {
            continue;
        }
        acc.push(ComponentProfile {
            genus: genera[i],
            a: incoming.clone(),
            b: beta.clone(),
            rho: bn.rho(),
        });
        if last {
            if out.len() >= limit {
                return Err(Error::Precondition(format!(
                    "more than {limit} chain profiles; tighten the input"
                )));
            }
            out.push(ChainProfile {
                components: acc.clone(),
                total_rho: acc.iter().map(|c| c.rho).sum(),
            });
        } else {
            extend(genera, r, d, b_target, i + 1, node_transfer(d, &beta), acc, out, limit)?;
        }
        acc.pop();
    }
    Ok(())
}

/// Maximal total `rho` over admissible chains, or `None` when no chain is
/// admissible. Both endpoint sequences are pinned to `a` and `b`: growing
/// a boundary sequence can only lower that component's `rho` and `rho_hat`
/// (every term of both is non-increasing in the entries), so the pinned
/// problem has the same maximum and the same emptiness as the free one.
pub fn best_total_rho(
    genera: &[usize],
    r: usize,
    d: usize,
    a: &[usize],
    b: &[usize],
) -> Result<Option<i64>> {
    validate_inputs(genera, r, d, a, b)?;
    let mut memo: HashMap<(usize, Vec<usize>), Option<i64>> = HashMap::new();
    best_suffix(genera, r, d, b, 0, a.to_vec(), &mut memo)
}

fn best_suffix(
    genera: &[usize],
    r: usize,
    d: usize,
    b_target: &[usize],
    i: usize,
    incoming: Vec<usize>,
    memo: &mut HashMap<(usize, Vec<usize>), Option<i64>>,
) -> Result<Option<i64>> {
    if let Some(&hit) = memo.get(&(i, incoming.clone())) {
        return Ok(hit);
    }
    let last = i + 1 == genera.len();
    let mut best: Option<i64> = None;
    let choices: Vec<Vec<usize>> = if last {
        vec![b_target.to_vec()]
    } else {
        all_sequences(d, r + 1).collect()
    };
    for beta in choices {
        let bn = BnData::new(genera[i], r, d, incoming.clone(), beta.clone())?;
        if bn.rho_hat() < 0 {
            continue;
        }
        let total = if last {
            Some(bn.rho())
        } else {
            best_suffix(genera, r, d, b_target, i + 1, node_transfer(d, &beta), memo)?
                .map(|suffix| bn.rho() + suffix)
        };
        if let Some(t) = total {
            best = Some(best.map_or(t, |cur| cur.max(t)));
        }
    }
    memo.insert((i, incoming), best);
    Ok(best)
}

/// The dimension bookkeeping for one chain problem: existence of an
/// admissible profile against the sign of `rho_hat`, and the maximal total
/// against the adjusted count `rho` of the smooth problem.
#[derive(Clone, Debug, Serialize)]
pub struct ChainVerdict {
    pub g: usize,
    pub r: usize,
    pub d: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub genera: Vec<usize>,
    pub exists: bool,
    pub max_total: Option<i64>,
    pub rho: i64,
    pub rho_hat: i64,
    /// an admissible chain exists exactly when `rho_hat >= 0`
    pub exists_iff_rho_hat: bool,
    /// when chains exist, the best total equals `rho` (vacuously true
    /// otherwise)
    pub max_equals_rho: bool,
}

impl ChainVerdict {
    pub fn ok(&self) -> bool {
        self.exists_iff_rho_hat && self.max_equals_rho
    }
}

pub fn chain_dimension_check(
    g: usize,
    r: usize,
    d: usize,
    a: &[usize],
    b: &[usize],
) -> Result<ChainVerdict> {
    let bn = BnData::new(g, r, d, a.to_vec(), b.to_vec())?;
    let genera = chain_genera(g);
    let max_total = best_total_rho(&genera, r, d, a, b)?;
    let exists = max_total.is_some();
    let rho = bn.rho();
    let rho_hat = bn.rho_hat();
    Ok(ChainVerdict {
        g,
        r,
        d,
        a: a.to_vec(),
        b: b.to_vec(),
        genera,
        exists,
        max_total,
        rho,
        rho_hat,
        exists_iff_rho_hat: exists == (rho_hat >= 0),
        max_equals_rho: max_total.map_or(true, |m| m == rho),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hyperelliptic_pencil_on_a_two_component_chain() {
        // g=2, r=1, d=2, no ramification: rho = 0 and the unique
        // admissible profile has b^1 = (0,2), a^2 = (0,2), total 0
        let v = chain_dimension_check(2, 1, 2, &[0, 1], &[0, 1]).unwrap();
        assert!(v.exists);
        assert_eq!(v.max_total, Some(0));
        assert_eq!(v.rho, 0);
        assert!(v.ok());

        let chains = enumerate_refined_chains(&[1, 1], 1, 2, &[0, 1], &[0, 1], 1000).unwrap();
        let best = chains.iter().map(|c| c.total_rho).max().unwrap();
        assert_eq!(best, 0);
        let pinned: Vec<_> = chains
            .iter()
            .filter(|c| {
                c.components[0].a == [0, 1] && c.components.last().unwrap().b == [0, 1]
            })
            .collect();
        assert_eq!(pinned.len(), 1);
        assert_eq!(pinned[0].components[0].b, [0, 2]);
    }

    #[test]
    fn rational_chain_is_the_plain_schubert_problem() {
        // g=0 chains have one component; rho_hat(0, ...) >= 0 is the
        // transversality count
        let v = chain_dimension_check(0, 1, 3, &[0, 1], &[0, 2]).unwrap();
        assert!(v.exists);
        assert_eq!(v.rho, 3);
        assert_eq!(v.max_total, Some(3));
        assert!(v.ok());

        // oversubscribed: a_0 + b_1 = 1 + 3 > d
        let v = chain_dimension_check(0, 1, 3, &[1, 2], &[2, 3]).unwrap();
        assert!(!v.exists);
        assert!(v.rho_hat < 0);
        assert!(v.ok());
    }

    #[test]
    fn enumeration_agrees_with_the_dynamic_program() {
        for (g, r, d, a, b) in [
            (1usize, 1usize, 3usize, vec![0, 1], vec![0, 1]),
            (2, 1, 3, vec![0, 1], vec![0, 2]),
            (3, 0, 2, vec![0], vec![1]),
            (2, 2, 4, vec![0, 1, 2], vec![0, 1, 2]),
        ] {
            let genera = chain_genera(g);
            let dp = best_total_rho(&genera, r, d, &a, &b).unwrap();
            let listed = enumerate_refined_chains(&genera, r, d, &a, &b, 100_000).unwrap();
            let free_best = listed.iter().map(|c| c.total_rho).max();
            assert_eq!(dp, free_best, "g={g} r={r} d={d} a={a:?} b={b:?}");
        }
    }

    #[test]
    fn node_transfer_is_an_involution() {
        let b = vec![0, 2, 3];
        assert_eq!(node_transfer(5, &node_transfer(5, &b)), b);
        assert_eq!(node_transfer(5, &b), vec![2, 3, 5]);
    }
}
