#![allow(dead_code)]

use std::collections::HashSet;

use equistable::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Every labeled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |bits| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

/// A base graph whose vertices are replaced by cliques or stable sets.
#[derive(Debug, Clone)]
pub struct Blowup {
    pub sizes: Vec<usize>,
    pub clique: Vec<bool>,
    pub base_edges: Vec<(usize, usize)>,
}

impl Blowup {
    pub fn n(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Builds the graph; `labels` optionally permutes vertex indices.
    pub fn build(&self, labels: Option<&[usize]>) -> Graph {
        let n = self.n();
        let mut owner = Vec::with_capacity(n);
        for (b, &s) in self.sizes.iter().enumerate() {
            owner.extend(std::iter::repeat_n(b, s));
        }
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); self.sizes.len()];
        for (v, &b) in owner.iter().enumerate() {
            members[b].push(v);
        }
        let mut base_adj = vec![Vec::new(); self.sizes.len()];
        for &(a, b) in &self.base_edges {
            base_adj[a].push(b);
            base_adj[b].push(a);
        }
        let label = |v: usize| labels.map_or(v, |l| l[v]);
        let mut adj = vec![Vec::new(); n];
        for v in 0..n {
            let b = owner[v];
            let list = &mut adj[label(v)];
            if self.clique[b] {
                list.extend(members[b].iter().filter(|&&u| u != v).map(|&u| label(u)));
            }
            for &c in &base_adj[b] {
                list.extend(members[c].iter().map(|&u| label(u)));
            }
        }
        Graph::from_adjacency(adj).unwrap()
    }

    pub fn build_shuffled<R: Rng>(&self, rng: &mut R) -> Graph {
        let mut labels: Vec<usize> = (0..self.n()).collect();
        labels.shuffle(rng);
        self.build(Some(&labels))
    }
}

/// Random blowup with `base` classes and at most `max_n` vertices.
pub fn random_blowup<R: Rng>(rng: &mut R, max_base: usize, max_n: usize) -> Blowup {
    let base = rng.gen_range(1..=max_base.min(max_n));
    let n = rng.gen_range(base..=max_n);
    let mut sizes = vec![1; base];
    // Skew sizes now and then so that one class gets big.
    let heavy = rng.gen_bool(0.4).then(|| rng.gen_range(0..base));
    for _ in base..n {
        let b = match heavy {
            Some(h) if rng.gen_bool(0.8) => h,
            _ => rng.gen_range(0..base),
        };
        sizes[b] += 1;
    }
    let clique = (0..base).map(|_| rng.gen_bool(0.5)).collect();
    let p = rng.gen_range(0.0..1.0);
    let base_edges = (0..base)
        .flat_map(|a| (a + 1..base).map(move |b| (a, b)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Blowup {
        sizes,
        clique,
        base_edges,
    }
}

/// Random simple graph with exactly `m` edges.
pub fn sparse_random<R: Rng>(rng: &mut R, n: usize, m: usize) -> Graph {
    let mut seen = HashSet::with_capacity(m * 2);
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        let e = (u.min(v), u.max(v));
        if seen.insert(e) {
            edges.push(e);
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}
