use neumaier_core::cayley::{construct_neumaier, strictness_check, Permutation};
use neumaier_core::charsums::{count_direct, count_jacobi};
use neumaier_core::feasibility::{full_verdict, Status};
use neumaier_core::graph::{cliques_of_size, is_regular_subset, max_clique_size, read_graph, verify_neumaier, write_graph};
use neumaier_core::search::search_triples;
use neumaier_core::{NeumaierParams, VertexSubset};
use proptest::prelude::*;

#[test]
fn search_rows_build_and_verify() {
    for q in [5u64, 7, 11] {
        let outcome = search_triples(q, 200).unwrap();
        for r in outcome.rows.iter().filter(|r| r.params.v <= 6000) {
            let c = construct_neumaier(q, r.p, r.a, &[]).unwrap();
            assert_eq!(c.params, r.params);
            assert!(verify_neumaier(&c.graph, &r.params, &c.witness), "q={q} p={}", r.p);
            assert!(strictness_check(&c.fusion, &c.graph).unwrap().is_strict());
            assert_eq!(count_jacobi(r.p, q, r.a).unwrap(), r.lambda);
        }
    }
}

#[test]
fn constructed_parameters_pass_the_necessary_conditions() {
    for q in [5u64, 7, 13, 17] {
        for r in search_triples(q, 1000).unwrap().rows {
            let v = full_verdict(&r.params);
            assert_ne!(v.status, Status::Infeasible, "{} {:?}", r.params, v.reasons);
        }
    }
}

#[test]
fn smallest_graph_has_only_regular_maximum_cliques() {
    let c = construct_neumaier(5, 13, 2, &[]).unwrap();
    let s = c.params.s as usize;
    assert_eq!(max_clique_size(&c.graph), s);
    let cliques = cliques_of_size(&c.graph, s);
    assert!(!cliques.is_empty());
    for k in cliques {
        assert_eq!(is_regular_subset(&c.graph, &VertexSubset::clique(k)).unwrap(), Some(1));
    }
}

#[test]
fn graph_files_round_trip() {
    let c = construct_neumaier(5, 13, 2, &[]).unwrap();
    let mut buf = Vec::new();
    write_graph(&c.graph, &mut buf).unwrap();
    let g = read_graph(buf.as_slice()).unwrap();
    assert_eq!(g, c.graph);
    assert!(verify_neumaier(&g, &NeumaierParams::new(65, 16, 3, 1, 5), &c.witness));
    assert!(!verify_neumaier(&g, &NeumaierParams::new(65, 16, 3, 2, 5), &c.witness));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    // p = 61, q = 5, a = 17 gives t = 4; any gluing keeps the parameters.
    #[test]
    fn any_gluing_gives_the_same_parameters(seeds in proptest::collection::vec(any::<u64>(), 3)) {
        let m = 61usize;
        let perms: Vec<Permutation> = seeds
            .iter()
            .map(|&s| {
                let mut images: Vec<usize> = (0..m).collect();
                let mut x = s | 1;
                for i in (1..m).rev() {
                    x ^= x << 13;
                    x ^= x >> 7;
                    x ^= x << 17;
                    images.swap(i, (x % (i as u64 + 1)) as usize);
                }
                Permutation::from_images(images).unwrap()
            })
            .collect();
        let c = construct_neumaier(5, 61, 17, &perms).unwrap();
        prop_assert_eq!(c.params, NeumaierParams::new(1220, 79, 18, 1, 20));
        prop_assert!(verify_neumaier(&c.graph, &c.params, &c.witness));
        prop_assert_eq!(count_direct(61, 5, 17).unwrap(), 18);
    }
}
