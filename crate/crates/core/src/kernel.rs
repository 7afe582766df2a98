//! Linear-time kernels for k-equistability and target-t equistability, and
//! lifting of structures found on a kernel back to the input graph.
//!
//! Two reduction steps occur:
//!
//! * clique truncation keeps the `r` lowest-indexed members of a clique class
//!   larger than `r`; lifting copies the weight of a surviving member and
//!   leaves the target alone;
//! * stable truncation (only for a big stable class that is isolated in the
//!   quotient graph) keeps `k^5` members; lifting needs the kernel structure
//!   to be constant on the survivors and raises the target by that weight
//!   times the number of deleted vertices.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::recognizer::{recognize_with, EquistableStructure, SearchOptions};
use crate::twins::{quotient_graph, twin_partition, ClassKind, TwinClass, TwinPartition};

/// Why an instance was rejected without search. Each is a necessary
/// condition for a yes-instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RejectReason {
    /// More twin classes than the parameter.
    TooManyClasses,
    /// A stable class with more vertices than the target.
    BigStableClass,
    /// Two classes of size at least `k(k+1)`, one of them stable.
    TwoBigClasses,
    /// A big stable class outweighs a maximal stable set avoiding it.
    HeavyStableClass,
}

impl RejectReason {
    pub fn code(self) -> &'static str {
        match self {
            RejectReason::TooManyClasses => "TooManyClasses",
            RejectReason::BigStableClass => "BigStableClass",
            RejectReason::TwoBigClasses => "TwoBigClasses",
            RejectReason::HeavyStableClass => "HeavyStableClass",
        }
    }
}

/// One recorded reduction, in original-graph vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum ReductionStep {
    CliqueTruncation {
        /// Surviving member whose weight the deleted members inherit.
        representative: usize,
        kept: Vec<usize>,
        deleted: Vec<usize>,
    },
    StableTruncation {
        kept: Vec<usize>,
        deleted: Vec<usize>,
        /// Weight bound the kernel was built for.
        k: u64,
    },
}

impl ReductionStep {
    pub fn deleted(&self) -> &[usize] {
        match self {
            ReductionStep::CliqueTruncation { deleted, .. }
            | ReductionStep::StableTruncation { deleted, .. } => deleted,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftingRecipe {
    pub original_n: usize,
    pub steps: Vec<ReductionStep>,
}

impl LiftingRecipe {
    /// Replays the recorded deletions; yields the kernel and the vertex map.
    pub fn replay(&self, g: &Graph) -> Result<(Graph, Vec<Option<usize>>), ContractError> {
        if g.n() != self.original_n {
            return Err(ContractError::GraphSize {
                expected: self.original_n,
                found: g.n(),
            });
        }
        let victims =
            VertexSet::from_unsorted(self.steps.iter().flat_map(|s| s.deleted().iter().copied()));
        g.delete_vertices(&victims)
            .map_err(|_| ContractError::BadRecipe)
    }

    fn mapping(&self) -> Vec<Option<usize>> {
        let mut gone = vec![false; self.original_n];
        for s in &self.steps {
            for &v in s.deleted() {
                gone[v] = true;
            }
        }
        let mut next = 0;
        gone.iter()
            .map(|&d| {
                (!d).then(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect()
    }
}

/// Which branch of the kernelization produced a kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KernelCase {
    /// Target mode: clique classes truncated to `t`.
    TargetCliqueReduction,
    /// No big stable class; clique classes truncated to `k^3 (k+1)`.
    CliqueReduction,
    /// A big stable class isolated in the quotient graph.
    IsolatedStableClass,
    /// A big stable class seen by another class, small enough to keep.
    AttachedStableClass,
}

#[derive(Debug, Clone)]
pub struct Kernel {
    pub graph: Graph,
    /// Original vertex -> kernel vertex, `None` if deleted.
    pub mapping: Vec<Option<usize>>,
    pub recipe: LiftingRecipe,
    pub case: KernelCase,
}

#[derive(Debug, Clone)]
pub enum KernelOutcome {
    Reject(RejectReason),
    Kernel(Kernel),
}

impl KernelOutcome {
    pub fn kernel(&self) -> Option<&Kernel> {
        match self {
            KernelOutcome::Kernel(k) => Some(k),
            KernelOutcome::Reject(_) => None,
        }
    }

    pub fn reject_reason(&self) -> Option<RejectReason> {
        match self {
            KernelOutcome::Reject(r) => Some(*r),
            KernelOutcome::Kernel(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContractError {
    #[error("recipe expects a graph on {expected} vertices, got {found}")]
    GraphSize { expected: usize, found: usize },
    #[error("structure has {found} weights, kernel has {expected} vertices")]
    StructureSize { expected: usize, found: usize },
    #[error("structure is not constant on truncated stable class (weights {0} and {1})")]
    NotConstant(u64, u64),
    #[error("class is not a stable class isolated in the quotient graph")]
    NotIsolatedStable,
    #[error("class has {size} vertices, fewer than k^5 = {needed}")]
    ClassTooSmall { size: usize, needed: u64 },
    #[error("{outside} vertices outside the class, more than k^3 = {allowed}")]
    TooManyOutside { outside: usize, allowed: u64 },
    #[error("weight {weight} exceeds the bound k = {k}")]
    WeightAboveBound { weight: u64, k: u64 },
    #[error("recipe deletes every vertex")]
    BadRecipe,
}

/// `k^5 + k^4`, the vertex bound for k-kernels.
pub fn k_kernel_bound(k: u64) -> u64 {
    k.saturating_pow(5).saturating_add(k.saturating_pow(4))
}

/// `t^2`, the vertex bound for target-t kernels.
pub fn target_kernel_bound(t: u64) -> u64 {
    t.saturating_mul(t)
}

/// Size threshold `k(k+1)` above which classes count as big.
pub fn big_class_threshold(k: u64) -> u64 {
    k.saturating_mul(k.saturating_add(1))
}

/// Keeps the `r` lowest-indexed members of every clique class with more
/// than `r` members. Stable and singleton classes are untouched.
pub fn clique_reduce(
    g: &Graph,
    tp: &TwinPartition,
    r: u64,
) -> (Graph, Vec<Option<usize>>, Vec<ReductionStep>) {
    assert!(r >= 1, "r must be positive");
    let mut steps = Vec::new();
    for c in tp.classes() {
        if c.kind == ClassKind::Clique && c.len() as u64 > r {
            let members = c.members.as_slice();
            let (kept, deleted) = members.split_at(r as usize);
            steps.push(ReductionStep::CliqueTruncation {
                representative: kept[0],
                kept: kept.to_vec(),
                deleted: deleted.to_vec(),
            });
        }
    }
    let victims = VertexSet::from_unsorted(steps.iter().flat_map(|s| s.deleted().iter().copied()));
    let (kernel, mapping) = g
        .delete_vertices(&victims)
        .expect("each clique class keeps r >= 1 members");
    (kernel, mapping, steps)
}

fn build_kernel(g: &Graph, steps: Vec<ReductionStep>, case: KernelCase) -> Kernel {
    let recipe = LiftingRecipe {
        original_n: g.n(),
        steps,
    };
    let (graph, mapping) = recipe.replay(g).expect("recipe built from this graph");
    Kernel {
        graph,
        mapping,
        recipe,
        case,
    }
}

/// Kernel with at most `t^2` vertices for target-t equistability.
pub fn kernel_target_t(g: &Graph, t: u64) -> KernelOutcome {
    assert!(t >= 1, "t must be positive");
    let tp = twin_partition(g);
    if tp.pi() as u64 > t {
        return KernelOutcome::Reject(RejectReason::TooManyClasses);
    }
    if tp
        .classes()
        .iter()
        .any(|c| c.kind == ClassKind::Stable && c.len() as u64 > t)
    {
        return KernelOutcome::Reject(RejectReason::BigStableClass);
    }
    let (graph, mapping, steps) = clique_reduce(g, &tp, t);
    let recipe = LiftingRecipe {
        original_n: g.n(),
        steps,
    };
    let kernel = Kernel {
        graph,
        mapping,
        recipe,
        case: KernelCase::TargetCliqueReduction,
    };
    assert!(kernel.graph.n() as u64 <= target_kernel_bound(t));
    KernelOutcome::Kernel(kernel)
}

/// Kernel with at most `k^5 + k^4` vertices for k-equistability.
pub fn kernel_k(g: &Graph, k: u64) -> KernelOutcome {
    assert!(k >= 1, "k must be positive");
    let tp = twin_partition(g);
    if tp.pi() as u64 > k {
        return KernelOutcome::Reject(RejectReason::TooManyClasses);
    }
    let threshold = big_class_threshold(k);
    let big: Vec<&TwinClass> = tp
        .classes()
        .iter()
        .filter(|c| c.len() as u64 >= threshold)
        .collect();
    let big_stable: Vec<&TwinClass> = big
        .iter()
        .copied()
        .filter(|c| c.kind == ClassKind::Stable)
        .collect();
    if big.len() >= 2 && !big_stable.is_empty() {
        return KernelOutcome::Reject(RejectReason::TwoBigClasses);
    }

    let kernel = match big_stable.first() {
        None => {
            let r = k.saturating_pow(3).saturating_mul(k + 1);
            let (graph, mapping, steps) = clique_reduce(g, &tp, r);
            let recipe = LiftingRecipe {
                original_n: g.n(),
                steps,
            };
            Kernel {
                graph,
                mapping,
                recipe,
                case: KernelCase::CliqueReduction,
            }
        }
        Some(&x) => {
            let q = quotient_graph(g, &tp);
            if q.is_isolated(x.id) {
                let keep = k.saturating_pow(5);
                let mut steps = Vec::new();
                if x.len() as u64 > keep {
                    let (kept, deleted) = x.members.as_slice().split_at(keep as usize);
                    steps.push(ReductionStep::StableTruncation {
                        kept: kept.to_vec(),
                        deleted: deleted.to_vec(),
                        k,
                    });
                }
                build_kernel(g, steps, KernelCase::IsolatedStableClass)
            } else {
                let y = tp.class(q.neighbors(x.id)[0]);
                let s = g.greedy_maximal_stable_set(Some(y.representative()));
                debug_assert!(s.iter().all(|v| tp.class_of(v) != x.id));
                if x.len() as u64 > k.saturating_mul(s.len() as u64) {
                    return KernelOutcome::Reject(RejectReason::HeavyStableClass);
                }
                build_kernel(g, Vec::new(), KernelCase::AttachedStableClass)
            }
        }
    };
    assert!(kernel.graph.n() as u64 <= k_kernel_bound(k));
    KernelOutcome::Kernel(kernel)
}

/// Rewrites `s` to be constant on the isolated stable class `x`, using the
/// smallest weight carried by at least `|x|/k` members of `x`. The target
/// moves by the change in weight of `x`.
pub fn normalize_constant_on_class(
    g: &Graph,
    s: &EquistableStructure,
    x: &TwinClass,
    k: u64,
) -> Result<EquistableStructure, ContractError> {
    let n = g.n();
    if s.weights.len() != n {
        return Err(ContractError::StructureSize {
            expected: n,
            found: s.weights.len(),
        });
    }
    if x.len() > 1 && x.kind != ClassKind::Stable || x.members.iter().any(|v| g.degree(v) > 0) {
        return Err(ContractError::NotIsolatedStable);
    }
    let needed = k.saturating_pow(5);
    if (x.len() as u64) < needed {
        return Err(ContractError::ClassTooSmall {
            size: x.len(),
            needed,
        });
    }
    let allowed = k.saturating_pow(3);
    if ((n - x.len()) as u64) > allowed {
        return Err(ContractError::TooManyOutside {
            outside: n - x.len(),
            allowed,
        });
    }
    let mut counts = vec![0u64; k as usize + 1];
    for v in x.members.iter() {
        let w = s.weights[v];
        if w == 0 || w > k {
            return Err(ContractError::WeightAboveBound { weight: w, k });
        }
        counts[w as usize] += 1;
    }
    let size = x.len() as u64;
    let i = (1..=k)
        .find(|&i| counts[i as usize] * k >= size)
        .expect("pigeonhole over k weights");
    let old: u64 = x.members.iter().map(|v| s.weights[v]).sum();
    let mut weights = s.weights.clone();
    for v in x.members.iter() {
        weights[v] = i;
    }
    Ok(EquistableStructure {
        weights,
        target: s.target + i * size - old,
    })
}

/// Extends a structure on the kernel to the original graph by replaying the
/// recipe backwards.
pub fn lift_structure(
    s_kernel: &EquistableStructure,
    recipe: &LiftingRecipe,
    g_original: &Graph,
) -> Result<EquistableStructure, ContractError> {
    if g_original.n() != recipe.original_n {
        return Err(ContractError::GraphSize {
            expected: recipe.original_n,
            found: g_original.n(),
        });
    }
    let mapping = recipe.mapping();
    let kernel_n = mapping.iter().flatten().count();
    if s_kernel.weights.len() != kernel_n {
        return Err(ContractError::StructureSize {
            expected: kernel_n,
            found: s_kernel.weights.len(),
        });
    }
    let mut weights: Vec<u64> = mapping
        .iter()
        .map(|m| m.map_or(0, |i| s_kernel.weights[i]))
        .collect();
    let mut target = s_kernel.target;
    for step in recipe.steps.iter().rev() {
        match step {
            ReductionStep::CliqueTruncation {
                representative,
                deleted,
                ..
            } => {
                let w = weights[*representative];
                for &d in deleted {
                    weights[d] = w;
                }
            }
            ReductionStep::StableTruncation { kept, deleted, .. } => {
                let i = weights[kept[0]];
                if let Some(&v) = kept.iter().find(|&&v| weights[v] != i) {
                    return Err(ContractError::NotConstant(i, weights[v]));
                }
                for &d in deleted {
                    weights[d] = i;
                }
                target += i * deleted.len() as u64;
            }
        }
    }
    Ok(EquistableStructure { weights, target })
}

/// Lifts a structure found on `kernel`, first normalizing it on the
/// truncated stable class when there is one.
pub fn normalize_and_lift(
    kernel: &Kernel,
    s_kernel: &EquistableStructure,
    g_original: &Graph,
) -> Result<EquistableStructure, ContractError> {
    let mut s = s_kernel.clone();
    for step in &kernel.recipe.steps {
        if let ReductionStep::StableTruncation { kept, k, .. } = step {
            let tp = twin_partition(&kernel.graph);
            let rep = kernel.mapping[kept[0]].ok_or(ContractError::BadRecipe)?;
            let x = tp.class(tp.class_of(rep));
            s = normalize_constant_on_class(&kernel.graph, &s, x, *k)?;
        }
    }
    lift_structure(&s, &kernel.recipe, g_original)
}

/// Solves k-equistability: kernelize, search the kernel, lift.
pub fn recognize_fpt(g: &Graph, k: u64) -> Option<EquistableStructure> {
    recognize_fpt_with(g, k, &SearchOptions::default())
}

pub fn recognize_fpt_with(
    g: &Graph,
    k: u64,
    options: &SearchOptions,
) -> Option<EquistableStructure> {
    let kernel = match kernel_k(g, k) {
        KernelOutcome::Reject(_) => return None,
        KernelOutcome::Kernel(kernel) => kernel,
    };
    let found = recognize_with(&kernel.graph, k, None, options)?;
    if kernel.case == KernelCase::CliqueReduction {
        debug_assert!(found.target <= k.pow(3) * (k + 1));
    }
    Some(
        normalize_and_lift(&kernel, &found, g)
            .expect("kernel structure satisfies lifting contract"),
    )
}

/// Solves target-t equistability (weights bounded by `t`).
pub fn recognize_target_fpt(g: &Graph, t: u64) -> Option<EquistableStructure> {
    recognize_bounded_target_fpt(g, t, t, &SearchOptions::default())
}

/// Target-t equistability with weights additionally bounded by `k`. Clique
/// truncation to `t` preserves target-t structures for every weight bound.
pub fn recognize_bounded_target_fpt(
    g: &Graph,
    k: u64,
    t: u64,
    options: &SearchOptions,
) -> Option<EquistableStructure> {
    let kernel = match kernel_target_t(g, t) {
        KernelOutcome::Reject(_) => return None,
        KernelOutcome::Kernel(kernel) => kernel,
    };
    let found = recognize_with(&kernel.graph, k, Some(t), options)?;
    let lifted = lift_structure(&found, &kernel.recipe, g).expect("clique lifting cannot fail");
    debug_assert_eq!(lifted.target, t);
    Some(lifted)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kernel_of(out: KernelOutcome) -> Kernel {
        match out {
            KernelOutcome::Kernel(k) => k,
            KernelOutcome::Reject(r) => panic!("unexpected reject {r:?}"),
        }
    }

    fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges: Vec<_> = (0..a)
            .flat_map(|u| (a..a + b).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(a + b, &edges).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    #[test]
    fn clique_reduce_examples() {
        let k5 = Graph::complete(5);
        let (g, map, steps) = clique_reduce(&k5, &twin_partition(&k5), 2);
        assert_eq!(g, Graph::complete(2));
        assert_eq!(map, vec![Some(0), Some(1), None, None, None]);
        assert_eq!(steps.len(), 1);

        let c4 = Graph::cycle(4);
        let (g, _, steps) = clique_reduce(&c4, &twin_partition(&c4), 1);
        assert_eq!(g, c4);
        assert!(steps.is_empty());

        let k3_plus = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let (g, map, steps) = clique_reduce(&k3_plus, &twin_partition(&k3_plus), 1);
        assert_eq!(g, Graph::edgeless(2));
        assert_eq!(map, vec![Some(0), None, None, Some(1)]);
        assert_eq!(
            steps,
            vec![ReductionStep::CliqueTruncation {
                representative: 0,
                kept: vec![0],
                deleted: vec![1, 2]
            }]
        );
    }

    #[test]
    fn target_kernel_examples() {
        let k = kernel_of(kernel_target_t(&Graph::complete(100), 1));
        assert_eq!(k.graph, Graph::complete(1));
        assert_eq!(
            kernel_target_t(&Graph::edgeless(5), 3).reject_reason(),
            Some(RejectReason::BigStableClass)
        );
        assert_eq!(
            kernel_target_t(&Graph::path(4), 3).reject_reason(),
            Some(RejectReason::TooManyClasses)
        );
    }

    #[test]
    fn k_kernel_examples() {
        let k = kernel_of(kernel_k(&Graph::complete(100), 2));
        assert_eq!(k.graph, Graph::complete(24));
        assert_eq!(k.case, KernelCase::CliqueReduction);
        assert!(k.graph.n() as u64 <= k_kernel_bound(2));

        assert_eq!(
            kernel_k(&star(50), 2).reject_reason(),
            Some(RejectReason::HeavyStableClass)
        );
        assert_eq!(
            kernel_k(&complete_bipartite(10, 10), 2).reject_reason(),
            Some(RejectReason::TwoBigClasses)
        );
        assert_eq!(
            kernel_k(&Graph::path(4), 3).reject_reason(),
            Some(RejectReason::TooManyClasses)
        );
    }

    #[test]
    fn attached_stable_class_kept_when_light() {
        // Star with 4 leaves, k = 2: leaves form a stable class of size 4 < 6,
        // so no big class; plain clique reduction applies.
        let k = kernel_of(kernel_k(&star(4), 2));
        assert_eq!(k.case, KernelCase::CliqueReduction);
        // K_{2,6}, k = 2: class of 6 leaves is big, its partner has 2 members.
        // S from the partner side has 2 vertices, 6 > 2*2 rejects.
        assert_eq!(
            kernel_k(&complete_bipartite(2, 6), 2).reject_reason(),
            Some(RejectReason::HeavyStableClass)
        );
        // K_{3,6} with k = 2: 6 <= 2*3, kept as is.
        let k = kernel_of(kernel_k(&complete_bipartite(3, 6), 2));
        assert_eq!(k.case, KernelCase::AttachedStableClass);
        assert_eq!(k.graph.n(), 9);
    }

    #[test]
    fn isolated_stable_class_truncated_to_k5() {
        let g = Graph::edgeless(40);
        let k = kernel_of(kernel_k(&g, 2));
        assert_eq!(k.case, KernelCase::IsolatedStableClass);
        assert_eq!(k.graph, Graph::edgeless(32));
        let s = recognize_fpt(&g, 2).unwrap();
        assert_eq!(s.weights, vec![1; 40]);
        assert_eq!(s.target, 40);

        let g = Graph::edgeless(5);
        let k = kernel_of(kernel_k(&g, 1));
        assert_eq!(k.graph.n(), 1);
        assert_eq!(
            recognize_fpt(&g, 1),
            Some(EquistableStructure {
                weights: vec![1; 5],
                target: 5
            })
        );
    }

    #[test]
    fn normalize_examples() {
        // k = 1 keeps everything trivially constant.
        let g = Graph::edgeless(3);
        let tp = twin_partition(&g);
        let s = EquistableStructure {
            weights: vec![1, 1, 1],
            target: 3,
        };
        assert_eq!(
            normalize_constant_on_class(&g, &s, tp.class(0), 1).unwrap(),
            s
        );

        // |X| = 32 = 2^5, one vertex at weight 1, rest at 2.
        let g = Graph::edgeless(32);
        let tp = twin_partition(&g);
        let mut weights = vec![2; 32];
        weights[0] = 1;
        let s = EquistableStructure {
            weights,
            target: 63,
        };
        let out = normalize_constant_on_class(&g, &s, tp.class(0), 2).unwrap();
        assert_eq!(out.weights, vec![2; 32]);
        assert_eq!(out.target, 64);

        // Too small for k = 2.
        let g = Graph::edgeless(10);
        let tp = twin_partition(&g);
        let s = EquistableStructure {
            weights: vec![1; 10],
            target: 10,
        };
        assert!(matches!(
            normalize_constant_on_class(&g, &s, tp.class(0), 2),
            Err(ContractError::ClassTooSmall { .. })
        ));
    }

    #[test]
    fn lift_examples() {
        let g = Graph::complete(3);
        let s = EquistableStructure {
            weights: vec![1; 3],
            target: 1,
        };
        let empty = LiftingRecipe {
            original_n: 3,
            steps: vec![],
        };
        assert_eq!(lift_structure(&s, &empty, &g).unwrap(), s);

        let k5 = Graph::complete(5);
        let kernel = kernel_of(kernel_k(&k5, 1));
        assert_eq!(kernel.graph, Graph::complete(2));
        let lifted = lift_structure(
            &EquistableStructure {
                weights: vec![1, 1],
                target: 1,
            },
            &kernel.recipe,
            &k5,
        )
        .unwrap();
        assert_eq!(
            lifted,
            EquistableStructure {
                weights: vec![1; 5],
                target: 1
            }
        );

        // Isolated stable class: 3 deleted members, constant weight 2, t' = 10.
        let recipe = LiftingRecipe {
            original_n: 7,
            steps: vec![ReductionStep::StableTruncation {
                kept: vec![0, 1, 2],
                deleted: vec![3, 4, 5],
                k: 2,
            }],
        };
        let s = EquistableStructure {
            weights: vec![2, 2, 2, 4],
            target: 10,
        };
        let g = Graph::edgeless(7);
        let lifted = lift_structure(&s, &recipe, &g).unwrap();
        assert_eq!(lifted.target, 16);
        assert_eq!(lifted.weights, vec![2, 2, 2, 2, 2, 2, 4]);

        let bad = EquistableStructure {
            weights: vec![2, 1, 2, 4],
            target: 10,
        };
        assert_eq!(
            lift_structure(&bad, &recipe, &g),
            Err(ContractError::NotConstant(2, 1))
        );
        let short = EquistableStructure {
            weights: vec![2],
            target: 10,
        };
        assert!(matches!(
            lift_structure(&short, &recipe, &g),
            Err(ContractError::StructureSize { .. })
        ));
    }

    #[test]
    fn fpt_examples() {
        for k in 1..=6 {
            assert_eq!(recognize_fpt(&Graph::path(4), k), None);
        }
        assert_eq!(
            recognize_fpt(&Graph::complete(100), 1),
            Some(EquistableStructure {
                weights: vec![1; 100],
                target: 1
            })
        );
        assert_eq!(
            recognize_target_fpt(&Graph::complete(100), 1),
            Some(EquistableStructure {
                weights: vec![1; 100],
                target: 1
            })
        );
        assert_eq!(
            recognize_target_fpt(&Graph::edgeless(5), 5),
            Some(EquistableStructure {
                weights: vec![1; 5],
                target: 5
            })
        );
        assert_eq!(recognize_target_fpt(&Graph::path(4), 4), None);
        assert_eq!(recognize_fpt(&Graph::cycle(4), 2), None);
        assert_eq!(recognize_fpt(&Graph::cycle(4), 3).unwrap().target, 4);
    }
}
