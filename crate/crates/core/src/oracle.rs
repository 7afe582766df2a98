//! Exhaustive ground truth for small graphs: maximal stable set enumeration,
//! definition-level structure verification over all vertex subsets, and
//! minimal weight bound search. Everything here is exponential in `n` and
//! guarded by [`OracleLimits`].

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::recognizer::{
    assignment_from_structure, check_weight_assignment, compute_target, enumerate_candidates,
    EquistableStructure, StructureError,
};
use crate::twins::{quotient_graph, twin_partition, TwinPartition};

/// Hard ceiling from the 64-bit subset masks.
pub const MASK_BITS: usize = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest `n` for 2^n subset enumeration.
    pub max_n_subsets: usize,
    /// Largest `n` for minimal-k search.
    pub max_n_candidates: usize,
    /// Largest `n` for the k^n naive function enumeration.
    pub max_n_naive: usize,
    /// Ignore the caps above (the 64-bit mask ceiling still applies).
    pub force: bool,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_n_subsets: 24,
            max_n_candidates: 12,
            max_n_naive: 8,
            force: false,
        }
    }
}

impl OracleLimits {
    fn admit(&self, n: usize, cap: usize) -> Result<(), OracleError> {
        if n > MASK_BITS || (n > cap && !self.force) {
            return Err(OracleError::TooLarge {
                n,
                cap: if n > MASK_BITS { MASK_BITS } else { cap },
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, oracle cap is {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error(transparent)]
    Structure(#[from] StructureError),
}

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect()
}

fn to_set(mask: u64) -> VertexSet {
    VertexSet::from_sorted((0..64).filter(|&v| mask >> v & 1 == 1).collect())
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// All maximal stable sets, sorted lexicographically.
pub fn enumerate_maximal_stable_sets(
    g: &Graph,
    limits: &OracleLimits,
) -> Result<Vec<VertexSet>, OracleError> {
    limits.admit(g.n(), limits.max_n_subsets)?;
    let adj = masks(g);
    let mut out = Vec::new();
    branch(&adj, 0, 0, 0, &mut out);
    let mut sets: Vec<VertexSet> = out.into_iter().map(to_set).collect();
    sets.sort();
    Ok(sets)
}

// Decide the lowest undecided vertex: take it if possible, and skip it only
// if some later vertex could still dominate it.
fn branch(adj: &[u64], v: usize, chosen: u64, dominated: u64, out: &mut Vec<u64>) {
    let n = adj.len();
    if v == n {
        if (chosen | dominated) == full_mask(n) {
            out.push(chosen);
        }
        return;
    }
    let bit = 1u64 << v;
    if adj[v] & chosen == 0 {
        branch(adj, v + 1, chosen | bit, dominated | adj[v], out);
    }
    let later = full_mask(n) & !full_mask(v + 1);
    if dominated & bit != 0 || adj[v] & later & !dominated != 0 {
        branch(adj, v + 1, chosen, dominated, out);
    }
}

fn is_maximal_stable_mask(adj: &[u64], full: u64, mask: u64) -> bool {
    let mut dominated = mask;
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        if adj[v] & mask != 0 {
            return false;
        }
        dominated |= adj[v];
        rest &= rest - 1;
    }
    dominated == full
}

/// Checks the definition directly: every subset of `V` has weight `t`
/// exactly when it is a maximal stable set.
pub fn verify_structure_exhaustive(
    g: &Graph,
    s: &EquistableStructure,
    limits: &OracleLimits,
) -> Result<bool, OracleError> {
    let n = g.n();
    s.validate(n)?;
    limits.admit(n, limits.max_n_subsets)?;
    let adj = masks(g);
    let full = full_mask(n);
    let mut mask = 0u64;
    loop {
        let mut weight = 0u64;
        let mut rest = mask;
        while rest != 0 {
            weight += s.weights[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        if (weight == s.target) != is_maximal_stable_mask(&adj, full, mask) {
            return Ok(false);
        }
        if mask == full {
            return Ok(true);
        }
        mask += 1;
    }
}

/// Polynomial-time verification through the twin partition: reject weight
/// patterns no equistable function has, then run the count-vector check with
/// the structure's own target.
pub fn verify_structure_quotient(
    g: &Graph,
    s: &EquistableStructure,
) -> Result<bool, StructureError> {
    s.validate(g.n())?;
    let tp = twin_partition(g);
    let Some(wa) = assignment_from_structure(&tp, s) else {
        return Ok(false);
    };
    let q = quotient_graph(g, &tp);
    let mss = g.greedy_maximal_stable_set(None);
    Ok(check_weight_assignment(g, &q, &tp, &wa, &mss, Some(s.target)).is_some())
}

/// Smallest `k <= k_max` with a candidate that passes exhaustive
/// verification, together with that witness.
pub fn min_k_exhaustive(
    g: &Graph,
    k_max: u64,
    limits: &OracleLimits,
) -> Result<Option<(u64, EquistableStructure)>, OracleError> {
    limits.admit(g.n(), limits.max_n_candidates)?;
    let tp = twin_partition(g);
    let mss = g.greedy_maximal_stable_set(None);
    for k in 1..=k_max {
        if tp.pi() as u64 > k {
            continue;
        }
        for wa in enumerate_candidates(&tp, k, None) {
            let s = EquistableStructure {
                weights: wa.materialize(&tp),
                target: compute_target(g, &tp, &wa, &mss),
            };
            if verify_structure_exhaustive(
                g,
                &s,
                &OracleLimits {
                    force: true,
                    ..*limits
                },
            )? {
                return Ok(Some((k, s)));
            }
        }
    }
    Ok(None)
}

/// Some structure with target exactly `t`, or `None`. Weights never exceed
/// the target since every vertex lies in a maximal stable set.
pub fn target_exhaustive(
    g: &Graph,
    t: u64,
    limits: &OracleLimits,
) -> Result<Option<EquistableStructure>, OracleError> {
    limits.admit(g.n(), limits.max_n_candidates)?;
    let tp = twin_partition(g);
    if tp.pi() as u64 > t {
        return Ok(None);
    }
    let mss = g.greedy_maximal_stable_set(None);
    for wa in enumerate_candidates(&tp, t, Some(t)) {
        if compute_target(g, &tp, &wa, &mss) != t {
            continue;
        }
        let s = EquistableStructure {
            weights: wa.materialize(&tp),
            target: t,
        };
        if verify_structure_exhaustive(
            g,
            &s,
            &OracleLimits {
                force: true,
                ..*limits
            },
        )? {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

fn naive_functions(n: usize, k: u64) -> impl Iterator<Item = Vec<u64>> {
    let total = (k as u128).pow(n as u32);
    (0..total).map(move |mut code| {
        (0..n)
            .map(|_| {
                let w = (code % k as u128) as u64 + 1;
                code /= k as u128;
                w
            })
            .collect()
    })
}

/// Smallest `k <= k_max` admitting an equistable function, trying all k^n
/// functions with no structural pruning at all.
pub fn min_k_naive(
    g: &Graph,
    k_max: u64,
    limits: &OracleLimits,
) -> Result<Option<(u64, EquistableStructure)>, OracleError> {
    limits.admit(g.n(), limits.max_n_naive)?;
    let mss = g.greedy_maximal_stable_set(None);
    for k in 1..=k_max {
        for weights in naive_functions(g.n(), k) {
            let target = mss.iter().map(|v| weights[v]).sum();
            let s = EquistableStructure { weights, target };
            if verify_structure_exhaustive(
                g,
                &s,
                &OracleLimits {
                    force: true,
                    ..*limits
                },
            )? {
                return Ok(Some((k, s)));
            }
        }
    }
    Ok(None)
}

/// A weight function up to permutation inside twin classes: for each class,
/// the sorted `(weight, multiplicity)` pairs.
pub type Profile = Vec<Vec<(u64, usize)>>;

pub fn profile_of(tp: &TwinPartition, weights: &[u64]) -> Profile {
    tp.classes()
        .iter()
        .map(|c| {
            let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
            for v in c.members.iter() {
                *counts.entry(weights[v]).or_default() += 1;
            }
            counts.into_iter().collect()
        })
        .collect()
}

/// Profiles of all functions `V -> 1..=k` whose weight classes each sit in
/// one twin class and which are constant on clique classes, found by
/// enumerating all k^n functions.
pub fn naive_candidate_profiles(
    g: &Graph,
    k: u64,
    limits: &OracleLimits,
) -> Result<BTreeSet<Profile>, OracleError> {
    limits.admit(g.n(), limits.max_n_naive)?;
    let tp = twin_partition(g);
    let mut out = BTreeSet::new();
    'functions: for weights in naive_functions(g.n(), k) {
        let mut owner: BTreeMap<u64, usize> = BTreeMap::new();
        for (v, &w) in weights.iter().enumerate() {
            if *owner.entry(w).or_insert(tp.class_of(v)) != tp.class_of(v) {
                continue 'functions;
            }
        }
        for c in tp.classes().iter().filter(|c| c.kind.is_clique_like()) {
            let first = weights[c.representative()];
            if c.members.iter().any(|v| weights[v] != first) {
                continue 'functions;
            }
        }
        out.insert(profile_of(&tp, &weights));
    }
    Ok(out)
}

/// Profiles of the block-based candidate family.
pub fn candidate_profiles(tp: &TwinPartition, k: u64) -> BTreeSet<Profile> {
    enumerate_candidates(tp, k, None)
        .map(|wa| profile_of(tp, &wa.materialize(tp)))
        .collect()
}
