//! Exponential search for bounded equistable structures.
//!
//! Candidates come from [`enumerate_candidates`]. For each one the target is
//! read off a fixed maximal stable set, and every count vector in the
//! capacity box is checked: its weight must hit the target exactly when the
//! sets it encodes are maximal stable.

mod candidates;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::twins::{quotient_graph, twin_partition, ClassKind, QuotientGraph, TwinPartition};

pub use candidates::{enumerate_candidates, Compositions};

/// A nonempty set of vertices of one twin class sharing one weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightBlock {
    pub class_id: usize,
    pub size: usize,
    pub weight: u64,
}

/// A candidate weight function up to permutation inside twin classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightAssignment {
    pub k: u64,
    pub blocks: Vec<WeightBlock>,
}

impl WeightAssignment {
    /// Checks the structural invariants against a twin partition: distinct
    /// weights in `1..=k`, sizes summing to class sizes, one block per
    /// clique-like class, at most `k` blocks.
    pub fn is_well_formed(&self, tp: &TwinPartition) -> bool {
        let mut weights: Vec<u64> = self.blocks.iter().map(|b| b.weight).collect();
        weights.sort_unstable();
        weights.dedup();
        if weights.len() != self.blocks.len() || self.blocks.len() as u64 > self.k {
            return false;
        }
        let mut filled = vec![0usize; tp.pi()];
        let mut count = vec![0usize; tp.pi()];
        for b in &self.blocks {
            if b.size == 0 || b.weight == 0 || b.weight > self.k || b.class_id >= tp.pi() {
                return false;
            }
            filled[b.class_id] += b.size;
            count[b.class_id] += 1;
        }
        tp.classes()
            .iter()
            .all(|c| filled[c.id] == c.len() && (!c.kind.is_clique_like() || count[c.id] == 1))
    }

    /// Per-vertex weights: inside each class, block weights are laid out on
    /// the members in ascending vertex order.
    pub fn materialize(&self, tp: &TwinPartition) -> Vec<u64> {
        let n = tp.classes().iter().map(|c| c.len()).sum();
        let mut weights = vec![0; n];
        let mut offset = vec![0usize; tp.pi()];
        for b in &self.blocks {
            let members = tp.class(b.class_id).members.as_slice();
            let start = offset[b.class_id];
            for &v in &members[start..start + b.size] {
                weights[v] = b.weight;
            }
            offset[b.class_id] += b.size;
        }
        weights
    }

    /// Vertex ranges of each block, matching [`Self::materialize`].
    pub fn block_members<'a>(&self, tp: &'a TwinPartition) -> Vec<&'a [usize]> {
        let mut offset = vec![0usize; tp.pi()];
        self.blocks
            .iter()
            .map(|b| {
                let start = offset[b.class_id];
                offset[b.class_id] += b.size;
                &tp.class(b.class_id).members.as_slice()[start..start + b.size]
            })
            .collect()
    }
}

/// Number of chosen vertices per block of a [`WeightAssignment`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CountVector(pub Vec<usize>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("structure has {found} weights but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("weight of vertex {0} is not positive")]
    NonPositiveWeight(usize),
    #[error("target must be positive")]
    NonPositiveTarget,
}

/// Per-vertex positive weights and a target value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquistableStructure {
    pub weights: Vec<u64>,
    pub target: u64,
}

impl EquistableStructure {
    pub fn validate(&self, n: usize) -> Result<(), StructureError> {
        if self.weights.len() != n {
            return Err(StructureError::LengthMismatch {
                expected: n,
                found: self.weights.len(),
            });
        }
        if let Some(v) = self.weights.iter().position(|&w| w == 0) {
            return Err(StructureError::NonPositiveWeight(v));
        }
        if self.target == 0 {
            return Err(StructureError::NonPositiveTarget);
        }
        Ok(())
    }

    pub fn max_weight(&self) -> u64 {
        self.weights.iter().copied().max().unwrap_or(0)
    }

    pub fn weight_of(&self, s: &VertexSet) -> u64 {
        s.iter().map(|v| self.weights[v]).sum()
    }
}

/// Regroups per-vertex weights into blocks. Returns `None` when some weight
/// value spans two twin classes or a clique class carries two weights; no
/// equistable function does either.
pub fn assignment_from_structure(
    tp: &TwinPartition,
    s: &EquistableStructure,
) -> Option<WeightAssignment> {
    let mut owner: std::collections::BTreeMap<u64, (usize, usize)> = Default::default();
    for (v, &w) in s.weights.iter().enumerate() {
        let c = tp.class_of(v);
        let entry = owner.entry(w).or_insert((c, 0));
        if entry.0 != c {
            return None;
        }
        entry.1 += 1;
    }
    let mut blocks: Vec<WeightBlock> = owner
        .into_iter()
        .map(|(weight, (class_id, size))| WeightBlock {
            class_id,
            size,
            weight,
        })
        .collect();
    blocks.sort_by_key(|b| (b.class_id, b.weight));
    let per_class = blocks.iter().fold(vec![0usize; tp.pi()], |mut acc, b| {
        acc[b.class_id] += 1;
        acc
    });
    if tp
        .classes()
        .iter()
        .any(|c| c.kind.is_clique_like() && per_class[c.id] != 1)
    {
        return None;
    }
    Some(WeightAssignment {
        k: s.max_weight(),
        blocks,
    })
}

/// Weight of `fixed_mss` under `wa`, computed per block. A stable class lies
/// entirely inside or outside a maximal stable set; a clique-like class meets
/// it in at most one vertex.
pub fn compute_target(
    g: &Graph,
    tp: &TwinPartition,
    wa: &WeightAssignment,
    fixed_mss: &VertexSet,
) -> u64 {
    debug_assert!(g.is_maximal_stable(fixed_mss));
    target_from_hits(tp, wa, &class_hits(tp, fixed_mss))
}

fn class_hits(tp: &TwinPartition, mss: &VertexSet) -> Vec<bool> {
    let mut hits = vec![false; tp.pi()];
    for v in mss.iter() {
        hits[tp.class_of(v)] = true;
    }
    hits
}

fn target_from_hits(tp: &TwinPartition, wa: &WeightAssignment, hits: &[bool]) -> u64 {
    wa.blocks
        .iter()
        .filter(|b| hits[b.class_id])
        .map(|b| match tp.class(b.class_id).kind {
            ClassKind::Stable => b.weight * b.size as u64,
            ClassKind::Clique | ClassKind::Singleton => b.weight,
        })
        .sum()
}

/// Class-level view used by the count-vector predicate.
struct ClassView {
    kinds: Vec<ClassKind>,
    sizes: Vec<usize>,
    adjacent: Vec<Vec<bool>>,
}

impl ClassView {
    fn new(q: &QuotientGraph, tp: &TwinPartition) -> Self {
        ClassView {
            kinds: tp.classes().iter().map(|c| c.kind).collect(),
            sizes: tp.classes().iter().map(|c| c.len()).collect(),
            adjacent: q.matrix(),
        }
    }

    /// Whether every set with `selected[c]` vertices from class `c` is a
    /// maximal stable set.
    fn encodes_maximal_stable(&self, selected: &[usize]) -> bool {
        let p = self.kinds.len();
        for c in 0..p {
            if self.kinds[c].is_clique_like() && selected[c] > 1 {
                return false;
            }
            if selected[c] > 0 && (c + 1..p).any(|d| selected[d] > 0 && self.adjacent[c][d]) {
                return false;
            }
        }
        (0..p).all(|c| {
            selected[c] == self.sizes[c]
                || (self.kinds[c] == ClassKind::Clique && selected[c] >= 1)
                || (0..p).any(|d| selected[d] > 0 && self.adjacent[c][d])
        })
    }
}

/// Whether every vertex set taking `x[j]` vertices from block `j` of `wa` is
/// a maximal stable set. All such sets agree, since vertices of a twin class
/// are interchangeable.
pub fn vector_is_max_stable(
    q: &QuotientGraph,
    tp: &TwinPartition,
    wa: &WeightAssignment,
    x: &CountVector,
) -> bool {
    let view = ClassView::new(q, tp);
    let mut selected = vec![0; tp.pi()];
    for (b, &c) in wa.blocks.iter().zip(&x.0) {
        debug_assert!(c <= b.size);
        selected[b.class_id] += c;
    }
    view.encodes_maximal_stable(&selected)
}

/// A graph prepared for repeated candidate checks: twin partition, quotient
/// and one fixed maximal stable set.
pub struct Instance<'g> {
    graph: &'g Graph,
    partition: TwinPartition,
    quotient: QuotientGraph,
    fixed_mss: VertexSet,
    hits: Vec<bool>,
    view: ClassView,
}

impl<'g> Instance<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        let partition = twin_partition(graph);
        let quotient = quotient_graph(graph, &partition);
        let fixed_mss = graph.greedy_maximal_stable_set(None);
        let hits = class_hits(&partition, &fixed_mss);
        let view = ClassView::new(&quotient, &partition);
        Instance {
            graph,
            partition,
            quotient,
            fixed_mss,
            hits,
            view,
        }
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn partition(&self) -> &TwinPartition {
        &self.partition
    }

    pub fn quotient(&self) -> &QuotientGraph {
        &self.quotient
    }

    pub fn fixed_mss(&self) -> &VertexSet {
        &self.fixed_mss
    }

    pub fn target_of(&self, wa: &WeightAssignment) -> u64 {
        target_from_hits(&self.partition, wa, &self.hits)
    }

    /// Runs the count-vector biconditional over the whole capacity box.
    pub fn check(
        &self,
        wa: &WeightAssignment,
        prescribed_target: Option<u64>,
    ) -> Option<EquistableStructure> {
        let t = self.target_of(wa);
        if prescribed_target.is_some_and(|p| p != t) {
            return None;
        }
        let q = wa.blocks.len();
        let mut x = vec![0usize; q];
        let mut selected = vec![0usize; self.partition.pi()];
        let mut sum = 0u64;
        loop {
            if (sum == t) != self.view.encodes_maximal_stable(&selected) {
                return None;
            }
            // Odometer step over the capacity box.
            let mut j = 0;
            loop {
                if j == q {
                    return Some(EquistableStructure {
                        weights: wa.materialize(&self.partition),
                        target: t,
                    });
                }
                let b = &wa.blocks[j];
                if x[j] < b.size {
                    x[j] += 1;
                    selected[b.class_id] += 1;
                    sum += b.weight;
                    break;
                }
                selected[b.class_id] -= x[j];
                sum -= b.weight * x[j] as u64;
                x[j] = 0;
                j += 1;
            }
        }
    }

    /// First accepted candidate in enumeration order.
    pub fn search(
        &self,
        k: u64,
        prescribed_target: Option<u64>,
        options: &SearchOptions,
    ) -> Option<EquistableStructure> {
        if self.partition.pi() as u64 > k {
            return None;
        }
        if let Some(t) = prescribed_target {
            let too_big = self
                .partition
                .classes()
                .iter()
                .any(|c| c.kind == ClassKind::Stable && c.len() as u64 > t);
            if self.partition.pi() as u64 > t || too_big {
                return None;
            }
        }
        let mut stream = enumerate_candidates(&self.partition, k, prescribed_target);
        if options.threads <= 1 {
            return stream.find_map(|wa| self.check(&wa, prescribed_target));
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.threads)
            .build()
            .expect("thread pool");
        loop {
            let chunk: Vec<WeightAssignment> = stream.by_ref().take(options.chunk.max(1)).collect();
            if chunk.is_empty() {
                return None;
            }
            let found = pool.install(|| {
                chunk
                    .par_iter()
                    .find_map_first(|wa| self.check(wa, prescribed_target))
            });
            if found.is_some() {
                return found;
            }
        }
    }
}

/// Knobs for the candidate search. Results do not depend on them.
#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub threads: usize,
    pub chunk: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            threads: 1,
            chunk: 4096,
        }
    }
}

/// Runs the count-vector check for one candidate on `g`.
pub fn check_weight_assignment(
    g: &Graph,
    q: &QuotientGraph,
    tp: &TwinPartition,
    wa: &WeightAssignment,
    fixed_mss: &VertexSet,
    prescribed_target: Option<u64>,
) -> Option<EquistableStructure> {
    let instance = Instance {
        graph: g,
        partition: tp.clone(),
        quotient: q.clone(),
        fixed_mss: fixed_mss.clone(),
        hits: class_hits(tp, fixed_mss),
        view: ClassView::new(q, tp),
    };
    instance.check(wa, prescribed_target)
}

/// Decides whether `g` has an equistable structure with weights in `1..=k`
/// (and target `prescribed_target`, if given), returning the first one found
/// in candidate order.
pub fn recognize(g: &Graph, k: u64, prescribed_target: Option<u64>) -> Option<EquistableStructure> {
    recognize_with(g, k, prescribed_target, &SearchOptions::default())
}

pub fn recognize_with(
    g: &Graph,
    k: u64,
    prescribed_target: Option<u64>,
    options: &SearchOptions,
) -> Option<EquistableStructure> {
    assert!(k >= 1, "k must be positive");
    Instance::new(g).search(k, prescribed_target, options)
}
