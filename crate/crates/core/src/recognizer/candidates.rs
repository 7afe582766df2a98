//! Enumeration of candidate weight assignments over the twin partition.
//!
//! Every equistable function gives each weight value to vertices of a single
//! twin class and keeps clique classes monochromatic. Up to permuting weights
//! inside a class, such a function is a list of blocks: clique and singleton
//! classes contribute one block, a stable class of size `s` contributes an
//! ordered composition of `s`, and blocks get pairwise distinct weights.

use std::rc::Rc;

use itertools::Itertools;

use super::{WeightAssignment, WeightBlock};
use crate::twins::{ClassKind, TwinPartition};

/// Ordered compositions of `total` into at most `max_parts` positive parts,
/// by number of parts and then lexicographically.
#[derive(Debug, Clone)]
pub struct Compositions {
    total: usize,
    max_parts: usize,
    current: Option<Vec<usize>>,
}

impl Compositions {
    pub fn new(total: usize, max_parts: usize) -> Self {
        let current = (total >= 1 && max_parts >= 1).then(|| vec![total]);
        Compositions {
            total,
            max_parts: max_parts.min(total),
            current,
        }
    }

    fn advance(&mut self, cur: &mut Vec<usize>) -> bool {
        let p = cur.len();
        let mut tail: usize = cur[p - 1];
        for i in (0..p.saturating_sub(1)).rev() {
            // Bump part i and rebuild the smallest tail: ones, remainder last.
            if tail > p - 1 - i {
                cur[i] += 1;
                let rest = tail - 1;
                for c in cur[i + 1..p - 1].iter_mut() {
                    *c = 1;
                }
                cur[p - 1] = rest - (p - 2 - i);
                return true;
            }
            tail += cur[i];
        }
        if p < self.max_parts {
            let q = p + 1;
            cur.clear();
            cur.resize(q - 1, 1);
            cur.push(self.total - (q - 1));
            return true;
        }
        false
    }
}

impl Iterator for Compositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let mut cur = self.current.take()?;
        let out = cur.clone();
        if self.advance(&mut cur) {
            self.current = Some(cur);
        }
        Some(out)
    }
}

type Shape = Vec<Vec<usize>>;
type Classes = Rc<[(ClassKind, usize)]>;

/// Per-class compositions for classes `idx..`, using at most `budget` blocks.
fn shapes(classes: Classes, idx: usize, budget: usize) -> Box<dyn Iterator<Item = Shape>> {
    if idx == classes.len() {
        return Box::new(std::iter::once(Vec::new()));
    }
    let remaining = classes.len() - idx - 1;
    if budget <= remaining {
        return Box::new(std::iter::empty());
    }
    let (kind, size) = classes[idx];
    let max_parts = if kind.is_clique_like() {
        1
    } else {
        budget - remaining
    };
    Box::new(Compositions::new(size, max_parts).flat_map(move |comp| {
        let used = comp.len();
        shapes(classes.clone(), idx + 1, budget - used).map(move |mut rest| {
            rest.insert(0, comp.clone());
            rest
        })
    }))
}

/// Streams every candidate assignment with weights in `1..=k`, in a fixed
/// order: class compositions (classes in partition order, fewer parts
/// first, then lexicographic), then weight injections in lexicographic
/// order. With a prescribed target, candidates in which a stable class
/// alone outweighs the target are skipped; a stable class lies inside or
/// outside every maximal stable set as a whole.
pub fn enumerate_candidates(
    tp: &TwinPartition,
    k: u64,
    prescribed_target: Option<u64>,
) -> impl Iterator<Item = WeightAssignment> {
    let classes: Classes = tp.classes().iter().map(|c| (c.kind, c.len())).collect();
    let n: usize = classes.iter().map(|c| c.1).sum();
    let budget = usize::try_from(k).unwrap_or(usize::MAX).min(n);
    let stable: Rc<[bool]> = classes.iter().map(|c| c.0 == ClassKind::Stable).collect();
    shapes(classes, 0, budget).flat_map(move |shape| {
        let layout: Vec<(usize, usize)> = shape
            .iter()
            .enumerate()
            .flat_map(|(c, comp)| comp.iter().map(move |&s| (c, s)))
            .collect();
        let q = layout.len();
        let stable = stable.clone();
        (1..=k).permutations(q).filter_map(move |weights| {
            if let Some(t) = prescribed_target {
                let mut class_weight = vec![0u64; stable.len()];
                for (&(c, s), &w) in layout.iter().zip(&weights) {
                    class_weight[c] = class_weight[c].saturating_add(w.saturating_mul(s as u64));
                }
                if class_weight
                    .iter()
                    .zip(stable.iter())
                    .any(|(&cw, &st)| st && cw > t)
                {
                    return None;
                }
            }
            Some(WeightAssignment {
                k,
                blocks: layout
                    .iter()
                    .zip(weights)
                    .map(|(&(class_id, size), weight)| WeightBlock {
                        class_id,
                        size,
                        weight,
                    })
                    .collect(),
            })
        })
    })
}
