mod common;

use common::*;
use dcl_core::forbidden::{find_forbidden_configuration, scan_forbidden_configuration};
use dcl_core::labeling::{label_graph, LabelOutcome};
use dcl_core::{
    generate, has_degree_complete_labeling, Family, GeneratorSpec, Graph, LabeledGraph, Labeling,
    Route,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn random_dcl(n: usize, seed: u64) -> Graph {
    generate(&GeneratorSpec::new(Family::RandomDcl, n).with_seed(seed)).unwrap()
}

fn labelable(g: &Graph) -> bool {
    has_degree_complete_labeling(g).unwrap().is_labelable()
}

fn labeled(g: &Graph, route: Route) -> Labeling {
    match label_graph(g, route).unwrap() {
        LabelOutcome::Labeled { labeling, .. } => labeling,
        LabelOutcome::Obstructed(w) => panic!("{w} on {g:?}"),
    }
}

/// A forest of random caterpillars with pendant triangles, plus isolated
/// vertices, with shuffled ids.
fn random_forest(rng: &mut rand_chacha::ChaCha8Rng, n: usize) -> Graph {
    let mut edges = Vec::new();
    let mut next = 0;
    while next < n {
        let size = rng.random_range(1..=(n - next).min(40));
        let part = random_dcl(size, rng.random());
        edges.extend(part.edges().iter().map(|e| (e.lo() + next, e.hi() + next)));
        next += size;
    }
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.shuffle(rng);
    Graph::from_edges(
        n,
        edges.into_iter().map(|(u, v)| (perm[u - 1], perm[v - 1])),
    )
    .unwrap()
}

#[test]
fn labelings_are_degree_complete_up_to_200() {
    let mut rng = rng(23);
    for i in 0..400 {
        let n = rng.random_range(1..=200);
        let g = if i % 2 == 0 {
            random_dcl(n, rng.random())
        } else {
            random_forest(&mut rng, n)
        };
        for route in [Route::RemoveX2, Route::RemoveF] {
            let f = labeled(&g, route);
            let lg = g.apply_labeling(&f).unwrap();
            assert_eq!(scan_forbidden_configuration(&lg), None, "{route} on {g:?}");
        }
    }
}

#[test]
fn heredity_on_random_dcl() {
    let mut rng = rng(29);
    for _ in 0..150 {
        let n = rng.random_range(1..=40);
        let g = random_dcl(n, rng.random());
        assert!(labelable(&g));
        for v in g.vertices() {
            let (h, _) = g.remove_vertices(&[v]).unwrap();
            assert!(labelable(&h), "deleting {v} from {g:?}");
        }
        for &e in g.edges() {
            let h = g.remove_edges(&[e]).unwrap();
            assert!(labelable(&h), "deleting {e} from {g:?}");
        }
    }
}

#[test]
fn obstructed_graphs_stay_obstructed_under_supergraphs() {
    let mut rng = rng(31);
    for _ in 0..300 {
        let n = rng.random_range(4..=12);
        let g = random_graph(n, 0.3, &mut rng);
        if labelable(&g) {
            continue;
        }
        let extra: Vec<_> = pairs(n)
            .into_iter()
            .filter(|_| rng.random_bool(0.2))
            .collect();
        let mut es: Vec<_> = g.edges().iter().map(|e| (e.lo(), e.hi())).collect();
        es.extend(extra);
        es.sort_unstable();
        es.dedup();
        assert!(!labelable(&Graph::from_edges(n, es).unwrap()));
    }
}

fn random_labeled(rng: &mut rand_chacha::ChaCha8Rng, n: usize, m: usize) -> LabeledGraph {
    let m = m.min(n * (n - 1) / 2);
    let mut es = std::collections::BTreeSet::new();
    while es.len() < m {
        let (u, v) = (rng.random_range(1..=n), rng.random_range(1..=n));
        if u != v {
            es.insert((u.min(v), u.max(v)));
        }
    }
    LabeledGraph::new(Graph::from_edges(n, es).unwrap())
}

#[test]
fn sweep_matches_scan_up_to_2000() {
    let mut rng = rng(37);
    for _ in 0..60 {
        let n = rng.random_range(2..=2000);
        let m = rng.random_range(0..=2 * n);
        let lg = random_labeled(&mut rng, n, m);
        assert_eq!(
            find_forbidden_configuration(&lg),
            scan_forbidden_configuration(&lg)
        );
    }
    for _ in 0..40 {
        let n = rng.random_range(1..=2000);
        let g = random_dcl(n, rng.random());
        let f = labeled(&g, Route::RemoveX2);
        let lg = g.apply_labeling(&f).unwrap();
        assert_eq!(find_forbidden_configuration(&lg), None);
        assert_eq!(scan_forbidden_configuration(&lg), None);
        // Swapping two labels usually creates configurations.
        let mut labels = f.labels().to_vec();
        let (i, j) = (rng.random_range(0..n), rng.random_range(0..n));
        labels.swap(i, j);
        let lg = g
            .apply_labeling(&Labeling::from_labels(labels).unwrap())
            .unwrap();
        assert_eq!(
            find_forbidden_configuration(&lg),
            scan_forbidden_configuration(&lg)
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn routes_agree_on_random_graphs(n in 1usize..14, p in 0.05f64..0.5, seed: u64) {
        let g = random_graph(n, p, &mut rng(seed));
        let iii = has_degree_complete_labeling(&g).unwrap().is_labelable();
        let iv = dcl_core::recognize(&g, Route::RemoveF).unwrap().is_labelable();
        prop_assert_eq!(iii, iv);
    }

    #[test]
    fn relabeling_ids_preserves_the_answer(n in 1usize..30, seed: u64) {
        let mut r = rng(seed);
        let g = random_graph(n, (3.0 / n as f64).min(1.0), &mut r);
        let mut perm: Vec<usize> = (1..=n).collect();
        perm.shuffle(&mut r);
        let h = Graph::from_edges(n, g.edges().iter().map(|e| (perm[e.lo() - 1], perm[e.hi() - 1]))).unwrap();
        prop_assert_eq!(labelable(&g), labelable(&h));
    }
}
