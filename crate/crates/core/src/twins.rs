//! Twin partition and quotient graph.
//!
//! Two vertices are twins when their neighborhoods agree outside the pair.
//! Twin classes with at least two members are either false twins (equal open
//! neighborhoods, pairwise non-adjacent) or true twins (equal closed
//! neighborhoods, pairwise adjacent); a vertex never has both kinds of twin.
//! Distinct classes either see or miss each other, which makes the quotient
//! graph well defined.

use rustc_hash::FxHashMap;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    Clique,
    Stable,
    Singleton,
}

impl ClassKind {
    /// Singletons behave like one-block cliques for weight assignment.
    pub fn is_clique_like(self) -> bool {
        matches!(self, ClassKind::Clique | ClassKind::Singleton)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwinClass {
    pub id: usize,
    pub members: VertexSet,
    pub kind: ClassKind,
}

impl TwinClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn representative(&self) -> usize {
        self.members.as_slice()[0]
    }
}

/// Equivalence classes of the twin relation, ordered by smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPartition {
    classes: Vec<TwinClass>,
    class_of: Vec<usize>,
}

impl TwinPartition {
    pub fn classes(&self) -> &[TwinClass] {
        &self.classes
    }

    pub fn class(&self, id: usize) -> &TwinClass {
        &self.classes[id]
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    /// Number of twin classes.
    pub fn pi(&self) -> usize {
        self.classes.len()
    }
}

/// Graph on twin classes; two classes are adjacent iff they see each other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientGraph {
    adj: Vec<Vec<usize>>,
}

impl QuotientGraph {
    pub fn p(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, c: usize) -> &[usize] {
        &self.adj[c]
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn is_isolated(&self, c: usize) -> bool {
        self.adj[c].is_empty()
    }

    /// Dense adjacency matrix, handy for the O(p^2) count-vector checks.
    pub fn matrix(&self) -> Vec<Vec<bool>> {
        let p = self.p();
        let mut mat = vec![vec![false; p]; p];
        for (a, list) in self.adj.iter().enumerate() {
            for &b in list {
                mat[a][b] = true;
            }
        }
        mat
    }
}

// splitmix64 finalizer; the per-vertex keys only need to spread well.
fn vertex_key(v: usize) -> u64 {
    let mut z = (v as u64).wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn closed_equal(g: &Graph, u: usize, v: usize) -> bool {
    if g.degree(u) != g.degree(v) || !g.has_edge(u, v) {
        return false;
    }
    let a = itertools::merge(g.neighbors(u).iter().copied(), std::iter::once(u));
    let b = itertools::merge(g.neighbors(v).iter().copied(), std::iter::once(v));
    a.eq(b)
}

fn open_equal(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u) == g.neighbors(v)
}

/// Groups vertices whose fingerprints collide, then splits each bucket by
/// exact comparison. Returns a group id per vertex and the group sizes.
fn group_by(
    g: &Graph,
    fingerprint: impl Fn(usize) -> u64,
    same: impl Fn(&Graph, usize, usize) -> bool,
) -> (Vec<usize>, Vec<usize>) {
    const NONE: usize = usize::MAX;
    let n = g.n();
    // Bucket -> first group; groups sharing a bucket form a chain.
    let mut buckets: FxHashMap<(u64, usize), usize> =
        FxHashMap::with_capacity_and_hasher(n, Default::default());
    let mut reps: Vec<usize> = Vec::new();
    let mut next: Vec<usize> = Vec::new();
    let mut sizes: Vec<usize> = Vec::new();
    let group = (0..n)
        .map(|v| {
            let head = buckets.entry((fingerprint(v), g.degree(v))).or_insert(NONE);
            let mut gid = *head;
            while gid != NONE && !same(g, reps[gid], v) {
                gid = next[gid];
            }
            if gid == NONE {
                gid = sizes.len();
                reps.push(v);
                next.push(*head);
                sizes.push(0);
                *head = gid;
            }
            sizes[gid] += 1;
            gid
        })
        .collect();
    (group, sizes)
}

/// Computes the twin partition in expected O(n + m) time.
pub fn twin_partition(g: &Graph) -> TwinPartition {
    let n = g.n();
    let open_hash: Vec<u64> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(0u64, |acc, &u| acc.wrapping_add(vertex_key(u)))
        })
        .collect();
    let (open_group, open_sizes) = group_by(g, |v| open_hash[v], open_equal);
    let (closed_group, closed_sizes) = group_by(
        g,
        |v| open_hash[v].wrapping_add(vertex_key(v)),
        closed_equal,
    );

    // A vertex joins the class of its nontrivial group, if it has one.
    let mut open_class = vec![usize::MAX; open_sizes.len()];
    let mut closed_class = vec![usize::MAX; closed_sizes.len()];
    let mut classes: Vec<(Vec<usize>, ClassKind)> = Vec::new();
    let mut class_of = vec![0; n];
    for v in 0..n {
        let (slot, kind) = if open_sizes[open_group[v]] > 1 {
            (Some(&mut open_class[open_group[v]]), ClassKind::Stable)
        } else if closed_sizes[closed_group[v]] > 1 {
            (Some(&mut closed_class[closed_group[v]]), ClassKind::Clique)
        } else {
            (None, ClassKind::Singleton)
        };
        let id = match slot {
            Some(id) if *id != usize::MAX => *id,
            slot => {
                classes.push((Vec::new(), kind));
                if let Some(id) = slot {
                    *id = classes.len() - 1;
                }
                classes.len() - 1
            }
        };
        classes[id].0.push(v);
        class_of[v] = id;
    }
    let classes = classes
        .into_iter()
        .enumerate()
        .map(|(id, (members, kind))| TwinClass {
            id,
            members: VertexSet::from_sorted(members),
            kind,
        })
        .collect();
    TwinPartition { classes, class_of }
}

/// Quotient graph of `g` with respect to its twin partition `tp`. One
/// representative per class suffices since classes see or miss each other.
pub fn quotient_graph(g: &Graph, tp: &TwinPartition) -> QuotientGraph {
    let adj = tp
        .classes()
        .iter()
        .map(|c| {
            let mut list: Vec<usize> = g
                .neighbors(c.representative())
                .iter()
                .map(|&u| tp.class_of(u))
                .filter(|&d| d != c.id)
                .collect();
            list.sort_unstable();
            list.dedup();
            list
        })
        .collect();
    QuotientGraph { adj }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn members(tp: &TwinPartition) -> Vec<(Vec<usize>, ClassKind)> {
        tp.classes()
            .iter()
            .map(|c| (c.members.as_slice().to_vec(), c.kind))
            .collect()
    }

    #[test]
    fn c4_has_two_stable_classes() {
        let g = Graph::cycle(4);
        let tp = twin_partition(&g);
        assert_eq!(
            members(&tp),
            vec![
                (vec![0, 2], ClassKind::Stable),
                (vec![1, 3], ClassKind::Stable)
            ]
        );
        let q = quotient_graph(&g, &tp);
        assert_eq!(q.p(), 2);
        assert!(q.adjacent(0, 1));
    }

    #[test]
    fn k4_is_one_clique() {
        let g = Graph::complete(4);
        let tp = twin_partition(&g);
        assert_eq!(members(&tp), vec![(vec![0, 1, 2, 3], ClassKind::Clique)]);
        let q = quotient_graph(&g, &tp);
        assert_eq!(q.p(), 1);
        assert!(q.is_isolated(0));
    }

    #[test]
    fn p4_is_all_singletons() {
        let tp = twin_partition(&Graph::path(4));
        assert_eq!(tp.pi(), 4);
        assert!(tp.classes().iter().all(|c| c.kind == ClassKind::Singleton));
    }

    #[test]
    fn edgeless_is_one_stable_class() {
        let g = Graph::edgeless(5);
        let tp = twin_partition(&g);
        assert_eq!(members(&tp), vec![(vec![0, 1, 2, 3, 4], ClassKind::Stable)]);
        assert_eq!(quotient_graph(&g, &tp).p(), 1);
    }

    #[test]
    fn single_vertex_and_edge() {
        let tp = twin_partition(&Graph::edgeless(1));
        assert_eq!(members(&tp), vec![(vec![0], ClassKind::Singleton)]);
        let tp = twin_partition(&Graph::complete(2));
        assert_eq!(members(&tp), vec![(vec![0, 1], ClassKind::Clique)]);
    }

    fn pairwise_twins(g: &Graph, u: usize, v: usize) -> bool {
        let nu: Vec<usize> = g.neighbors(u).iter().copied().filter(|&x| x != v).collect();
        let nv: Vec<usize> = g.neighbors(v).iter().copied().filter(|&x| x != u).collect();
        nu == nv
    }

    #[allow(clippy::needless_range_loop)]
    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n, any::<u64>()).prop_map(|(n, seed)| {
            use rand::{Rng, SeedableRng};
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            // Blow up a small random base graph so that twins actually occur.
            let base = rng.gen_range(1..=n.min(6));
            let p = rng.gen_range(0.0..1.0);
            let mut base_adj = vec![vec![false; base]; base];
            for a in 0..base {
                for b in a + 1..base {
                    let e = rng.gen_bool(p);
                    base_adj[a][b] = e;
                    base_adj[b][a] = e;
                }
            }
            let clique: Vec<bool> = (0..base).map(|_| rng.gen_bool(0.5)).collect();
            let owner: Vec<usize> = (0..n).map(|_| rng.gen_range(0..base)).collect();
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    let (a, b) = (owner[u], owner[v]);
                    let e = if a == b { clique[a] } else { base_adj[a][b] };
                    // Occasional noise edge flips.
                    if e ^ rng.gen_bool(0.03) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    }

    proptest! {
        #[test]
        fn matches_pairwise_definition(g in arb_graph(24)) {
            let tp = twin_partition(&g);
            let n = g.n();
            for u in 0..n {
                for v in 0..n {
                    let same = tp.class_of(u) == tp.class_of(v);
                    prop_assert_eq!(same, u == v || pairwise_twins(&g, u, v), "{} {}", u, v);
                }
            }
            let mut seen = vec![false; n];
            for (id, c) in tp.classes().iter().enumerate() {
                prop_assert_eq!(c.id, id);
                prop_assert!(!c.is_empty());
                prop_assert_eq!(c.kind == ClassKind::Singleton, c.len() == 1);
                for v in c.members.iter() {
                    prop_assert!(!seen[v]);
                    seen[v] = true;
                    prop_assert_eq!(tp.class_of(v), id);
                }
                for a in c.members.iter() {
                    for b in c.members.iter().filter(|&b| b != a) {
                        prop_assert_eq!(g.has_edge(a, b), c.kind == ClassKind::Clique);
                    }
                }
            }
            // Ordered by smallest member.
            prop_assert!(tp.classes().windows(2).all(|w| w[0].representative() < w[1].representative()));
        }

        #[test]
        fn quotient_sees_or_misses(g in arb_graph(24)) {
            let tp = twin_partition(&g);
            let q = quotient_graph(&g, &tp);
            prop_assert_eq!(q.p(), tp.pi());
            for x in tp.classes() {
                prop_assert!(!q.adjacent(x.id, x.id));
                for y in tp.classes().iter().filter(|y| y.id != x.id) {
                    let adj = q.adjacent(x.id, y.id);
                    prop_assert_eq!(adj, q.adjacent(y.id, x.id));
                    for a in x.members.iter() {
                        for b in y.members.iter() {
                            prop_assert_eq!(g.has_edge(a, b), adj);
                        }
                    }
                }
            }
        }
    }
}
