use rayon::prelude::*;
use serde::Serialize;

use super::{Graph, SubsetKind, VertexSubset};
use crate::error::{Error, Result};
use crate::feasibility::NeumaierParams;

/// A vertex pair together with its number of common neighbours.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairCount {
    pub u: usize,
    pub v: usize,
    pub common: usize,
}

/// Result of scanning one pair class (adjacent or non-adjacent pairs).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EdgeRegularity {
    /// The class is empty or the graph is not regular.
    NotApplicable,
    Uniform(usize),
    /// The reference pair and the first pair that disagrees with it.
    Violated { reference: PairCount, witness: PairCount },
}

impl EdgeRegularity {
    pub fn value(&self) -> Option<usize> {
        match self {
            EdgeRegularity::Uniform(x) => Some(*x),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub n_vertices: usize,
    pub is_regular: bool,
    pub k: Option<usize>,
    pub is_edge_regular: bool,
    pub lambda: Option<usize>,
    pub is_co_edge_regular: bool,
    pub mu: Option<usize>,
    pub is_strongly_regular: bool,
    pub is_complete: bool,
    /// First pair of vertices with different degrees, if any.
    pub degree_violation: Option<(usize, usize)>,
    pub edge_scan: EdgeRegularity,
    pub co_edge_scan: EdgeRegularity,
}

fn common_degree(g: &Graph) -> std::result::Result<usize, (usize, usize)> {
    let n = g.n_vertices();
    if n == 0 {
        return Ok(0);
    }
    let k = g.degree(0);
    match (1..n).into_par_iter().find_first(|&u| g.degree(u) != k) {
        Some(u) => Err((0, u)),
        None => Ok(k),
    }
}

fn scan_pairs(g: &Graph, adjacent: bool) -> EdgeRegularity {
    let n = g.n_vertices();
    let pair_ok = |u: usize, v: usize| g.has_edge(u, v) == adjacent;
    let reference = (0..n).find_map(|u| {
        (u + 1..n).find(|&v| pair_ok(u, v)).map(|v| PairCount {
            u,
            v,
            common: g.common_neighbours(u, v),
        })
    });
    let Some(reference) = reference else {
        return EdgeRegularity::NotApplicable;
    };
    let witness = (0..n).into_par_iter().find_map_first(|u| {
        let candidates: Box<dyn Iterator<Item = usize>> = if adjacent {
            Box::new(g.neighbours(u).filter(move |&v| v > u))
        } else {
            Box::new((u + 1..n).filter(move |&v| !g.has_edge(u, v)))
        };
        candidates.map(|v| (v, g.common_neighbours(u, v))).find_map(|(v, c)| {
            (c != reference.common).then_some(PairCount { u, v, common: c })
        })
    });
    match witness {
        Some(witness) => EdgeRegularity::Violated { reference, witness },
        None => EdgeRegularity::Uniform(reference.common),
    }
}

/// Edge-regularity only: `Some((k, λ))` when `g` is regular, non-empty and
/// every adjacent pair has λ common neighbours.
pub fn edge_regularity(g: &Graph) -> Option<(usize, usize)> {
    let k = common_degree(g).ok()?;
    if k == 0 {
        return None;
    }
    scan_pairs(g, true).value().map(|l| (k, l))
}

/// Exhaustive regularity analysis. Each pair scan stops at the first
/// disagreeing pair, which is recorded in the report.
pub fn regularity_report(g: &Graph) -> RegularityReport {
    let n = g.n_vertices();
    let degree = common_degree(g);
    let is_regular = degree.is_ok();
    let k = degree.ok();
    let is_complete = n > 0 && k == Some(n - 1);
    let edge_scan = match k {
        Some(k) if k > 0 => scan_pairs(g, true),
        _ => EdgeRegularity::NotApplicable,
    };
    let co_edge_scan = match k {
        Some(_) if !is_complete => scan_pairs(g, false),
        _ => EdgeRegularity::NotApplicable,
    };
    let lambda = edge_scan.value();
    let mu = co_edge_scan.value();
    RegularityReport {
        n_vertices: n,
        is_regular,
        k,
        is_edge_regular: lambda.is_some(),
        lambda,
        is_co_edge_regular: mu.is_some(),
        mu,
        is_strongly_regular: lambda.is_some() && mu.is_some(),
        is_complete,
        degree_violation: degree.err(),
        edge_scan,
        co_edge_scan,
    }
}

/// `Some(e)` iff every vertex outside `s` has exactly `e > 0` neighbours in `s`.
pub fn is_regular_subset(g: &Graph, s: &VertexSubset) -> Result<Option<usize>> {
    let n = g.n_vertices();
    if let Some(&bad) = s.members.iter().find(|&&m| m >= n) {
        return Err(Error::Input(format!("vertex {bad} out of range (n = {n})")));
    }
    if s.members.is_empty() || s.members.len() >= n {
        return Err(Error::Input("subset must be nonempty and proper".into()));
    }
    let mask = g.mask(&s.members);
    let inside = |u: usize| mask[u / 64] >> (u % 64) & 1 == 1;
    let count = |u: usize| -> usize {
        g.row(u)
            .iter()
            .zip(&mask)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    };
    let first_outside = (0..n).find(|&u| !inside(u)).unwrap();
    let e = count(first_outside);
    if e == 0 {
        return Ok(None);
    }
    let uniform = (0..n)
        .into_par_iter()
        .filter(|&u| !inside(u))
        .all(|u| count(u) == e);
    Ok(uniform.then_some(e))
}

/// Diagnostic breakdown behind [`verify_neumaier`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NeumaierCheck {
    pub edge_regular: Option<(usize, usize)>,
    pub witness_is_clique: bool,
    pub witness_e: Option<usize>,
    pub params_match: bool,
}

pub fn neumaier_check(g: &Graph, claimed: &NeumaierParams, witness: &VertexSubset) -> NeumaierCheck {
    let edge_regular = edge_regularity(g);
    let witness_is_clique = witness.kind == SubsetKind::Clique && witness.holds_in(g);
    let witness_e = if witness_is_clique {
        is_regular_subset(g, witness).ok().flatten()
    } else {
        None
    };
    let params_match = g.n_vertices() as u64 == claimed.v
        && edge_regular == Some((claimed.k as usize, claimed.lambda as usize))
        && witness_is_clique
        && witness.len() as u64 == claimed.s
        && witness_e == Some(claimed.e as usize);
    NeumaierCheck {
        edge_regular,
        witness_is_clique,
        witness_e,
        params_match,
    }
}

/// True iff `g` is edge-regular with the claimed `(v, k, λ)` and the witness is
/// an `e`-regular clique of size `s`.
pub fn verify_neumaier(g: &Graph, claimed: &NeumaierParams, witness: &VertexSubset) -> bool {
    neumaier_check(g, claimed, witness).params_match
}

pub fn is_strictly_neumaier(g: &Graph, claimed: &NeumaierParams, witness: &VertexSubset) -> bool {
    verify_neumaier(g, claimed, witness) && !regularity_report(g).is_strongly_regular
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cliques_of_size, max_clique_size};
    use proptest::prelude::*;

    /// 4x4 rook's graph: (16, 6, 2, 2).
    fn rook4() -> Graph {
        let idx = |r: usize, c: usize| 4 * r + c;
        let mut g = Graph::new(16);
        for r in 0..4 {
            for c in 0..4 {
                for c2 in c + 1..4 {
                    g.add_edge(idx(r, c), idx(r, c2));
                    g.add_edge(idx(c, r), idx(c2, r));
                }
            }
        }
        g
    }

    /// SRG(16, 9, 4, 6).
    fn srg_16_9_4_6() -> Graph {
        rook4().complement()
    }

    #[test]
    fn pentagon_is_srg_5_2_0_1() {
        let r = regularity_report(&Graph::cycle(5));
        assert_eq!((r.k, r.lambda, r.mu), (Some(2), Some(0), Some(1)));
        assert!(r.is_strongly_regular && !r.is_complete);
    }

    #[test]
    fn complete_graph_not_co_edge_regular() {
        let r = regularity_report(&Graph::complete(4));
        assert!(r.is_complete && r.is_edge_regular);
        assert!(!r.is_co_edge_regular && !r.is_strongly_regular);
    }

    #[test]
    fn violation_is_reported() {
        // Triangle with a pendant path: regular? no.
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let r = regularity_report(&g);
        assert!(!r.is_regular);
        assert_eq!(r.degree_violation, Some((0, 2)));
        // 2-regular but not edge-regular: triangle + square.
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3)]).unwrap();
        let r = regularity_report(&g);
        assert!(r.is_regular && !r.is_edge_regular);
        assert!(matches!(r.edge_scan, EdgeRegularity::Violated { witness: PairCount { u: 3, v: 4, common: 0 }, .. }));
    }

    #[test]
    fn single_vertex_subset_of_pentagon_not_regular() {
        let s = VertexSubset::coclique(vec![0]);
        assert_eq!(is_regular_subset(&Graph::cycle(5), &s).unwrap(), None);
        let bad = VertexSubset::clique(vec![7]);
        assert!(is_regular_subset(&Graph::cycle(5), &bad).is_err());
    }

    #[test]
    fn srg_16_with_4_clique_is_neumaier_not_strict() {
        let g = srg_16_9_4_6();
        let r = regularity_report(&g);
        assert_eq!((r.k, r.lambda, r.mu), (Some(9), Some(4), Some(6)));
        // A transversal of the rook grid is a clique of size 4 in the complement.
        let w = VertexSubset::clique(vec![0, 5, 10, 15]);
        let p = NeumaierParams::new(16, 9, 4, 2, 4);
        assert!(verify_neumaier(&g, &p, &w));
        assert!(!is_strictly_neumaier(&g, &p, &w));
        assert!(!verify_neumaier(&g, &NeumaierParams::new(16, 9, 4, 1, 4), &w));
    }

    #[test]
    fn pentagon_complement_triangle_free_witness_fails() {
        let g = Graph::cycle(5).complement();
        let w = VertexSubset::clique(vec![0, 2]);
        let p = NeumaierParams::new(5, 2, 0, 1, 2);
        // Strongly regular pentagon: never strictly Neumaier.
        assert!(!is_strictly_neumaier(&g, &p, &w));
        let tri = VertexSubset::clique(vec![0, 1, 2]);
        assert!(!is_strictly_neumaier(&Graph::cycle(5), &NeumaierParams::new(5, 2, 0, 1, 3), &tri));
    }

    #[test]
    fn srg_regular_cliques_are_max_cliques() {
        let g = srg_16_9_4_6();
        assert_eq!(max_clique_size(&g), 4);
        for c in cliques_of_size(&g, 4) {
            let s = VertexSubset::clique(c);
            assert_eq!(is_regular_subset(&g, &s).unwrap(), Some(2));
        }
    }

    fn brute_common(g: &Graph, u: usize, v: usize) -> usize {
        (0..g.n_vertices()).filter(|&w| g.has_edge(u, w) && g.has_edge(v, w)).count()
    }

    fn arb_regular_ish() -> impl Strategy<Value = Graph> {
        // Circulants are always regular, so edge-regularity is exercised often.
        (5usize..13, proptest::collection::vec(any::<bool>(), 6)).prop_map(|(n, jumps)| {
            let mut g = Graph::new(n);
            for (j, &on) in jumps.iter().enumerate() {
                let d = j + 1;
                if on && d <= n / 2 {
                    for u in 0..n {
                        g.add_edge(u, (u + d) % n);
                    }
                }
            }
            g
        })
    }

    proptest! {
        #[test]
        fn complement_swaps_edge_and_co_edge_regularity(g in arb_regular_ish()) {
            let n = g.n_vertices();
            let r = regularity_report(&g);
            let rc = regularity_report(&g.complement());
            // Brute-force oracle for λ.
            let lambdas: std::collections::BTreeSet<usize> =
                g.edges().map(|(u, v)| brute_common(&g, u, v)).collect();
            prop_assert_eq!(r.is_edge_regular, r.is_regular && lambdas.len() == 1);
            if let (Some(k), Some(l)) = (r.k, r.lambda) {
                if k < n - 1 {
                    prop_assert!(rc.is_co_edge_regular);
                    prop_assert_eq!(rc.k, Some(n - k - 1));
                    prop_assert_eq!(rc.mu, Some(n + l - 2 * k));
                }
            }
            if rc.is_co_edge_regular && rc.k.unwrap() > 0 && r.k.unwrap() > 0 {
                prop_assert!(r.is_edge_regular);
            }
        }
    }
}
