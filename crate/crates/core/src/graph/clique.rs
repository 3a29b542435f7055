use super::{iter_bits, Graph};

struct Search<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Search<'_> {
    /// Greedy colouring of the candidate set; returns vertices with their colour
    /// bound, ordered so that the last entry has the largest bound.
    fn colour_order(&self, cand: &[u64]) -> Vec<(usize, usize)> {
        let mut uncoloured = cand.to_vec();
        let mut order = Vec::new();
        let mut colour = 0;
        while uncoloured.iter().any(|&w| w != 0) {
            colour += 1;
            let mut avail = uncoloured.clone();
            loop {
                let Some(v) = iter_bits(&avail).next() else { break };
                order.push((v, colour));
                uncoloured[v / 64] &= !(1 << (v % 64));
                avail[v / 64] &= !(1 << (v % 64));
                for (a, r) in avail.iter_mut().zip(self.g.row(v)) {
                    *a &= !r;
                }
            }
        }
        order
    }

    fn expand(&mut self, mut cand: Vec<u64>) {
        let order = self.colour_order(&cand);
        for &(v, bound) in order.iter().rev() {
            if self.current.len() + bound <= self.best.len() {
                return;
            }
            self.current.push(v);
            let next: Vec<u64> = cand.iter().zip(self.g.row(v)).map(|(a, b)| a & b).collect();
            if next.iter().all(|&w| w == 0) {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            cand[v / 64] &= !(1 << (v % 64));
        }
    }
}

/// A maximum clique, found by colour-bounded branch and bound. Exponential in
/// the worst case; intended for graphs of at most a few hundred vertices.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    let n = g.n_vertices();
    if n == 0 {
        return Vec::new();
    }
    let all = g.mask(&(0..n).collect::<Vec<_>>());
    let mut search = Search {
        g,
        best: vec![0],
        current: Vec::new(),
    };
    search.expand(all);
    search.best.sort_unstable();
    search.best
}

pub fn max_clique_size(g: &Graph) -> usize {
    max_clique(g).len()
}

/// All cliques with exactly `size` vertices, each sorted, in lexicographic order.
pub fn cliques_of_size(g: &Graph, size: usize) -> Vec<Vec<usize>> {
    fn rec(g: &Graph, size: usize, current: &mut Vec<usize>, cand: Vec<u64>, out: &mut Vec<Vec<usize>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        let need = size - current.len();
        let avail: Vec<usize> = iter_bits(&cand).collect();
        for (i, &v) in avail.iter().enumerate() {
            if avail.len() - i < need {
                break;
            }
            let mut next: Vec<u64> = cand.iter().zip(g.row(v)).map(|(a, b)| a & b).collect();
            // keep only candidates after v
            for u in avail[..=i].iter() {
                next[u / 64] &= !(1 << (u % 64));
            }
            current.push(v);
            rec(g, size, current, next, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if size == 0 {
        return vec![Vec::new()];
    }
    let all = g.mask(&(0..g.n_vertices()).collect::<Vec<_>>());
    rec(g, size, &mut Vec::new(), all, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_max(g: &Graph) -> usize {
        let n = g.n_vertices();
        (0u32..1 << n)
            .filter(|m| {
                let vs: Vec<usize> = (0..n).filter(|&i| m >> i & 1 == 1).collect();
                vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn small_cases() {
        assert_eq!(max_clique_size(&Graph::cycle(5)), 2);
        assert_eq!(max_clique(&Graph::complete(6)), vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(max_clique_size(&Graph::new(3)), 1);
        assert_eq!(cliques_of_size(&Graph::complete(4), 3).len(), 4);
        assert_eq!(cliques_of_size(&Graph::cycle(5), 2).len(), 5);
    }

    proptest! {
        #[test]
        fn matches_brute_force(n in 1usize..13, bits in proptest::collection::vec(any::<bool>(), 78)) {
            let mut g = Graph::new(n);
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(u, v);
                    }
                }
            }
            let best = max_clique(&g);
            prop_assert_eq!(best.len(), brute_max(&g));
            prop_assert!(best.iter().enumerate().all(|(i, &u)| best[i + 1..].iter().all(|&v| g.has_edge(u, v))));
            let k = best.len();
            prop_assert!(cliques_of_size(&g, k + 1).is_empty());
            prop_assert!(cliques_of_size(&g, k).contains(&best));
        }
    }
}
