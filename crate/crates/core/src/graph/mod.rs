//! Finite simple graphs on vertices `0..n`, stored as a bit-packed symmetric
//! adjacency matrix.

mod clique;
mod io;
mod regularity;

pub use clique::{cliques_of_size, max_clique, max_clique_size};
pub use io::{read_graph, write_graph};
pub use regularity::{
    edge_regularity, is_regular_subset, is_strictly_neumaier, neumaier_check, regularity_report,
    verify_neumaier, EdgeRegularity, NeumaierCheck, PairCount, RegularityReport,
};

use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edge_count())
            .finish()
    }
}

impl Graph {
    /// The empty graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        Graph {
            n,
            words,
            bits: vec![0; words * n],
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    pub fn cycle(n: usize) -> Self {
        Graph::from_edges(n, (0..n).map(|u| (u, (u + 1) % n))).unwrap()
    }

    #[inline]
    pub fn n_vertices(&self) -> usize {
        self.n
    }

    fn check_vertex(&self, u: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::Input(format!(
                "vertex {u} out of range for a graph on {} vertices",
                self.n
            )));
        }
        Ok(())
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Input(format!("self-loop at vertex {u}")));
        }
        self.add_edge(u, v);
        Ok(())
    }

    /// Adds `{u, v}`. Panics on a self-loop; indices are trusted.
    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-loop");
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Adjacency row of `u` as packed words.
    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn common_neighbours(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn neighbours(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(u))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbours(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            let (src, dst) = (self.row(u), &mut g.bits[u * g.words..(u + 1) * g.words]);
            for (d, s) in dst.iter_mut().zip(src) {
                *d = !s;
            }
            dst[u / 64] &= !(1 << (u % 64));
            if self.n % 64 != 0 {
                dst[self.words - 1] &= (1u64 << (self.n % 64)) - 1;
            }
        }
        g
    }

    /// BFS distances from `src`; `None` for unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.neighbours(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Connected-component label of every vertex, numbered from 0 in order
    /// of their least vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in self.neighbours(u) {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    /// Packed mask of the vertices at distance at most 2 from `u`.
    pub fn ball2(&self, u: usize) -> Vec<u64> {
        let mut ball = self.row(u).to_vec();
        ball[u / 64] |= 1 << (u % 64);
        for w in self.neighbours(u) {
            for (b, r) in ball.iter_mut().zip(self.row(w)) {
                *b |= r;
            }
        }
        ball
    }

    /// Packed membership mask over the vertex set.
    pub fn mask(&self, members: &[usize]) -> Vec<u64> {
        let mut mask = vec![0u64; self.words];
        for &m in members {
            mask[m / 64] |= 1 << (m % 64);
        }
        mask
    }
}

pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(i * 64 + b)
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SubsetKind {
    Clique,
    Coclique,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexSubset {
    pub members: Vec<usize>,
    pub kind: SubsetKind,
}

impl VertexSubset {
    pub fn clique(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSubset {
            members,
            kind: SubsetKind::Clique,
        }
    }

    pub fn coclique(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSubset {
            members,
            kind: SubsetKind::Coclique,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Whether the members really form a clique (resp. coclique) in `g`.
    pub fn holds_in(&self, g: &Graph) -> bool {
        let want = self.kind == SubsetKind::Clique;
        self.members.iter().enumerate().all(|(i, &u)| {
            self.members[i + 1..]
                .iter()
                .all(|&v| u < g.n_vertices() && v < g.n_vertices() && g.has_edge(u, v) == want)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn balls_and_components() {
        let mut g = Graph::cycle(8);
        assert_eq!(iter_bits(&g.ball2(0)).collect::<Vec<_>>(), vec![0, 1, 2, 6, 7]);
        assert_eq!(g.components(), vec![0; 8]);
        g = Graph::from_edges(5, [(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![0, 0, 1, 2, 2]);
        for u in 0..5 {
            let d = g.distances_from(u);
            let ball: Vec<usize> = (0..5).filter(|&w| d[w].is_some_and(|d| d <= 2)).collect();
            assert_eq!(iter_bits(&g.ball2(u)).collect::<Vec<_>>(), ball);
        }
    }

    #[test]
    fn complement_examples() {
        let empty = Graph::new(3);
        assert_eq!(empty.complement(), Graph::complete(3));
        let c5 = Graph::cycle(5);
        let comp = c5.complement();
        assert_eq!(comp.edge_count(), 5);
        assert!((0..5).all(|u| comp.degree(u) == 2));
        assert!(!comp.has_edge(0, 1) && comp.has_edge(0, 2));
    }

    #[test]
    fn self_loops_and_range_rejected() {
        let mut g = Graph::new(4);
        assert!(g.try_add_edge(1, 1).is_err());
        assert!(g.try_add_edge(0, 4).is_err());
    }

    #[test]
    fn distances_on_path() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.distances_from(0), vec![Some(0), Some(1), Some(2), Some(3)]);
        let h = Graph::new(2);
        assert_eq!(h.distances_from(0), vec![Some(0), None]);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (2usize..80).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::new(n);
                let mut it = bits.into_iter();
                for u in 0..n {
                    for v in u + 1..n {
                        if it.next().unwrap() {
                            g.add_edge(u, v);
                        }
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn complement_is_involution(g in arb_graph()) {
            let c = g.complement();
            prop_assert_eq!(c.complement(), g.clone());
            for u in 0..g.n_vertices() {
                prop_assert!(!c.has_edge(u, u));
                for v in 0..g.n_vertices() {
                    prop_assert_eq!(c.has_edge(u, v), c.has_edge(v, u));
                    if u != v {
                        prop_assert_eq!(c.has_edge(u, v), !g.has_edge(u, v));
                    }
                }
            }
        }
    }
}
