use super::*;
use crate::binseries::SeriesFamily;
use crate::golden;
use crate::riordan::is_io_pattern;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn catalan_graph(n: usize) -> RiordanGraph {
    RiordanGraph::build(&RiordanPair::catalan(n), n).unwrap()
}

fn pascal_graph(n: usize) -> RiordanGraph {
    RiordanGraph::build(&RiordanPair::pascal(n), n).unwrap()
}

fn literal_pair(g: &str, f: &str, n: usize) -> RiordanPair {
    let g = BinarySeries::named(&g.parse::<SeriesFamily>().unwrap(), n).unwrap();
    let f = BinarySeries::named(&f.parse::<SeriesFamily>().unwrap(), n).unwrap();
    RiordanPair::new(g, f).unwrap()
}

fn random_io_aseq(rng: &mut impl Rng, len: usize) -> ASequence {
    let mut bits = vec![true, true];
    while bits.len() < len {
        let b = rng.gen::<bool>();
        bits.push(b);
        bits.push(b);
    }
    bits.truncate(len);
    ASequence::from_bools(bits).unwrap()
}

fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.toggle_edge(v, v + 1);
    }
    g
}

// Floyd–Warshall over the boolean matrix; independent of the BFS path.
fn floyd(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.order();
    let mut d = vec![vec![None; n]; n];
    for i in 0..n {
        d[i][i] = Some(0);
        for j in 0..n {
            if g.has_edge(i + 1, j + 1) {
                d[i][j] = Some(1);
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

fn brute_clique(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 16);
    (0u32..1 << n)
        .filter(|&mask| {
            let vs: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
            vs.iter()
                .enumerate()
                .all(|(x, &u)| vs[x + 1..].iter().all(|&v| g.has_edge(u, v)))
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

#[test]
fn build_catalan_six_matches_printed_matrix() {
    assert_eq!(*catalan_graph(6).graph(), golden::matrix(golden::FIGURE1_CG6));
}

#[test]
fn identity_pair_gives_path() {
    for n in 1..12 {
        let g = RiordanGraph::build(&literal_pair("one", "z", n), n).unwrap();
        assert_eq!(*g.graph(), path(n));
        assert_eq!(*RiordanGraph::build_bell_aseq(&ASequence::identity(n), n).unwrap().graph(), path(n));
    }
}

#[test]
fn pascal_vertex_one_is_universal() {
    let g = pascal_graph(8);
    assert!(g.is_universal(1));
    assert_eq!(g.neighbors(1).unwrap(), (2..=8).collect::<Vec<_>>());
}

#[test]
fn build_needs_precision() {
    assert!(matches!(
        RiordanGraph::build(&RiordanPair::catalan(5), 7),
        Err(Error::Precision { .. })
    ));
    assert!(matches!(
        RiordanGraph::build_bell_aseq(&ASequence::catalan(6), 8),
        Err(Error::Length { needed: 7, got: 6 })
    ));
}

#[test]
fn bell_aseq_matches_pair_construction() {
    for n in 1..=64 {
        assert_eq!(
            RiordanGraph::build_bell_aseq(&ASequence::catalan(n), n).unwrap().graph(),
            catalan_graph(n).graph()
        );
        assert_eq!(
            RiordanGraph::build_bell_aseq(&ASequence::pascal(n.max(2)), n).unwrap().graph(),
            pascal_graph(n).graph()
        );
    }
}

#[test]
fn distance_examples() {
    let cg8r = catalan_graph(8).reverse();
    assert_eq!(cg8r.distance(1, 8).unwrap(), Some(3));
    assert_eq!(cg8r.distance(5, 5).unwrap(), Some(0));
    let cg16 = catalan_graph(16);
    for i in 1..=8 {
        assert_eq!(cg16.distance(i, 16).unwrap(), Some(4), "i={i}");
    }
    assert!(matches!(cg16.distance(0, 3), Err(Error::VertexRange { .. })));
    assert!(matches!(cg16.distance(3, 17), Err(Error::VertexRange { .. })));
}

#[test]
fn bfs_agrees_with_floyd_warshall() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let n = rng.gen_range(1..40);
        let a = random_io_aseq(&mut rng, n.max(2));
        let g = RiordanGraph::build_bell_aseq(&a, n).unwrap();
        let fw = floyd(&g);
        for u in 1..=n {
            let r = g.bfs(u).unwrap();
            for v in 1..=n {
                assert_eq!(r.to(v), fw[u - 1][v - 1]);
            }
        }
    }
}

#[test]
fn diameter_examples() {
    assert_eq!(pascal_graph(8).diameter().unwrap(), 2);
    assert_eq!(catalan_graph(64).diameter().unwrap(), 6);
    assert_eq!(catalan_graph(1).diameter().unwrap(), 0);
    assert!(matches!(
        Graph::empty(3).diameter(),
        Err(Error::Disconnected { u: 1, v: 2 })
    ));
}

#[test]
fn universal_vertex_examples() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..10 {
        let a = random_io_aseq(&mut rng, 8);
        let g = RiordanGraph::build_bell_aseq(&a, 9).unwrap();
        assert!(g.universal_vertices().contains(&9), "{a}");
    }
    assert!(path(6).universal_vertices().is_empty());
    assert_eq!(catalan_graph(6).universal_vertices(), vec![3, 5]);
}

#[test]
fn neighbor_formulas_in_mixed_size_catalan_graphs() {
    for k in 2..=7usize {
        for m in 1..k {
            let n = (1 << k) + (1 << m) + 1;
            let g = catalan_graph(n);
            let n1: Vec<usize> = (0..=k).map(|s| (1 << s) + 1).collect();
            assert_eq!(g.neighbors(1).unwrap(), n1, "k={k} m={m}");
            let v = (1 << k) + (1 << m);
            let mut expect: Vec<usize> = (0..(1usize << (k - m)))
                .map(|t| (1 << (m + 1)) + t * (1 << m) - 1)
                .collect();
            expect.push(n);
            expect.sort_unstable();
            assert_eq!(g.neighbors(v).unwrap(), expect, "k={k} m={m}");
        }
    }
    assert_eq!(catalan_graph(6).neighbors(4).unwrap(), vec![3, 5]);
    assert!(matches!(catalan_graph(6).neighbors(7), Err(Error::VertexRange { .. })));
}

#[test]
fn induced_examples() {
    let cg6 = catalan_graph(6);
    assert_eq!(cg6.induced(&[1, 2, 3, 4, 5, 6]).unwrap(), *cg6.graph());
    let odd = cg6.induced(&[1, 3, 5]).unwrap();
    assert_eq!(odd, *catalan_graph(3).graph());
    assert_eq!(odd.edge_count(), 3);
    assert_eq!(cg6.induced(&[2, 4, 6]).unwrap().edge_count(), 0);
    assert!(cg6.induced(&[3, 1]).is_err());
}

#[test]
fn reverse_direct_examples() {
    let cg4r = catalan_graph(4).reverse();
    assert_eq!(cg4r, golden::matrix(golden::CG4_REVERSE));
    assert_eq!(catalan_graph(8).reverse(), golden::matrix(golden::CG8_REVERSE));
    let g = catalan_graph(13);
    assert_eq!(g.reverse().reverse(), *g.graph());
}

#[test]
fn reverse_formula_catalan_closed_forms() {
    for k in 1..=7 {
        let n = 1 << k;
        let rf = reverse_formula(&ASequence::catalan(n.max(2)), n).unwrap();
        let closed = RiordanGraph::build(&literal_pair("1", "011", n), n).unwrap();
        assert_eq!(rf.graph(), closed.graph(), "2^{k}");
        assert_eq!(*rf.graph(), catalan_graph(n).reverse());

        let n = (1 << k) - 1;
        let rf = reverse_formula(&ASequence::catalan(n.max(2)), n).unwrap();
        let closed = RiordanGraph::build(&literal_pair("11", "011", n.max(2)), n).unwrap();
        assert_eq!(rf.graph(), closed.graph(), "2^{k}-1");
        assert_eq!(*rf.graph(), catalan_graph(n).reverse());
    }
    assert!(matches!(
        reverse_formula(&ASequence::parse("1110000").unwrap(), 8),
        Err(Error::Domain(_))
    ));
}

#[test]
fn reverse_formula_matches_relabelling_on_random_io_sequences() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..100 {
        let n = rng.gen_range(1..=64);
        let a = random_io_aseq(&mut rng, (n - 1).max(2));
        let direct = RiordanGraph::build_bell_aseq(&a, n).unwrap().reverse();
        let formula = reverse_formula(&a, n).unwrap();
        assert_eq!(*formula.graph(), direct, "{a} n={n}");
    }
}

#[test]
fn m_profile_of_reversed_catalan() {
    for k in 1..=7 {
        let n = 1 << k;
        let r = catalan_graph(n).reverse();
        for i in 1..=n / 2 {
            assert_eq!(r.neighbors(i).unwrap().last().copied(), Some(2 * i));
        }
    }
}

#[test]
fn max_clique_examples() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..5 {
        let a = random_io_aseq(&mut rng, 31);
        let g = RiordanGraph::build_bell_aseq(&a, 32).unwrap();
        assert_eq!(g.max_clique_size().unwrap(), 6);
    }
    assert_eq!(Graph::empty(5).max_clique_size().unwrap(), 1);
    assert_eq!(brute_clique(catalan_graph(6).graph()), 4);
    assert_eq!(catalan_graph(6).max_clique_size().unwrap(), 4);
    assert!(matches!(
        catalan_graph(65).max_clique_size(),
        Err(Error::Scale { order: 65, cap: 64 })
    ));
    assert_eq!(catalan_graph(65).max_clique_size_capped(128).unwrap(), 8);
}

#[test]
fn io_coloring_examples() {
    let c = catalan_graph(8).io_coloring().unwrap();
    assert_eq!(
        c.classes(),
        vec![vec![2, 4, 6, 8], vec![3, 7], vec![5], vec![1]]
    );
    assert_eq!(catalan_graph(1).io_coloring().unwrap().count, 1);
    assert_eq!(pascal_graph(33).io_coloring().unwrap().count, 7);
    // Not io-decomposable: A = (1,1,1,0,...) puts an edge between even vertices.
    let bad = RiordanGraph::build_bell_aseq(&ASequence::parse("1110000").unwrap(), 8).unwrap();
    match bad.io_coloring() {
        Err(Error::IoViolation { u, v, .. }) => assert!(bad.has_edge(u, v)),
        other => panic!("expected violation, got {other:?}"),
    }
}

#[test]
fn io_decomposable_catalan_and_pascal() {
    for n in 1..=64 {
        assert!(catalan_graph(n).is_io_decomposable_by_definition().unwrap(), "CG_{n}");
        assert!(pascal_graph(n).is_io_decomposable_by_definition().unwrap(), "PG_{n}");
    }
}

#[test]
fn definition_agrees_with_pattern_on_all_prefixes() {
    // a_1..a_6 free: every binary A-sequence that determines G_8.
    for bits in 0u32..64 {
        let a = ASequence::from_bools(
            std::iter::once(true).chain((0..6).map(|k| bits >> k & 1 == 1)),
        )
        .unwrap();
        let g = RiordanGraph::build_bell_aseq(&a, 8).unwrap();
        assert_eq!(
            g.is_io_decomposable_by_definition().unwrap(),
            is_io_pattern(&a),
            "{a}"
        );
    }
}

#[test]
fn proper_bell_graphs_contain_the_path() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..30 {
        let n = rng.gen_range(2..60);
        let a = ASequence::from_bools(
            std::iter::once(true).chain((1..n - 1).map(|_| rng.gen::<bool>())),
        )
        .unwrap();
        let g = RiordanGraph::build_bell_aseq(&a, n).unwrap();
        assert!((1..n).all(|i| g.has_edge(i + 1, i)));
        assert!(g.diameter().is_ok());
    }
}

#[test]
fn general_reverse_formula_on_arbitrary_bell_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let n = rng.gen_range(2..50);
        let a = ASequence::from_bools(
            std::iter::once(true).chain((1..n - 1).map(|_| rng.gen::<bool>())),
        )
        .unwrap();
        let direct = RiordanGraph::build_bell_aseq(&a, n).unwrap().reverse();
        assert_eq!(*reverse_formula_general(&a, n).unwrap().graph(), direct, "{a}");
    }
}

#[test]
fn export_formats() {
    let g = catalan_graph(3);
    assert_eq!(g.to_matrix_string(), "011\n101\n110\n");
    assert_eq!(g.to_edge_csv(), "u,v\n1,2\n1,3\n2,3\n");
    assert!(g.to_dot("CG3").contains("  2 -- 3;"));
    assert_eq!(
        path(3).to_distance_csv(),
        "vertex,1,2,3\n1,0,1,2\n2,1,0,1\n3,2,1,0\n"
    );
    assert_eq!(Graph::empty(2).to_distance_csv(), "vertex,1,2\n1,0,\n2,,0\n");
}

#[test]
fn log_helpers() {
    assert_eq!(ceil_log2(1), 0);
    assert_eq!(ceil_log2(8), 3);
    assert_eq!(ceil_log2(9), 4);
    assert_eq!(floor_log2(1), 0);
    assert_eq!(floor_log2(15), 3);
    assert_eq!(floor_log2(16), 4);
}

fn random_graph() -> impl Strategy<Value = Graph> {
    (1usize..14).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut it = bits.into_iter();
            for u in 1..=n {
                for v in u + 1..=n {
                    if it.next().unwrap() {
                        g.toggle_edge(u, v);
                    }
                }
            }
            g
        })
    })
}

fn proper_pair() -> impl Strategy<Value = (RiordanPair, usize)> {
    (2usize..24).prop_flat_map(|n| {
        (
            proptest::collection::vec(any::<bool>(), n),
            proptest::collection::vec(any::<bool>(), n - 2),
        )
            .prop_map(move |(g, f)| {
                let g = BinarySeries::from_bits(crate::bits::Bits::from_bools(g)).unwrap();
                let f = BinarySeries::from_bits(crate::bits::Bits::from_bools(
                    [false, true].into_iter().chain(f),
                ))
                .unwrap();
                (RiordanPair::new(g, f).unwrap(), n)
            })
    })
}

proptest! {
    #[test]
    fn clique_matches_brute_force(g in random_graph()) {
        prop_assert_eq!(g.max_clique_size().unwrap(), brute_clique(&g));
    }

    #[test]
    fn reverse_pair_matches_relabelling((p, n) in proper_pair()) {
        let direct = RiordanGraph::build(&p, n).unwrap().reverse();
        let rp = reverse_pair(&p, n).unwrap();
        prop_assert_eq!(RiordanGraph::build(&rp, n).unwrap().into_graph(), direct);
    }

    #[test]
    fn triangle_inequality(g in random_graph()) {
        let rows = g.distance_matrix();
        let n = g.order();
        for a in 0..n {
            prop_assert_eq!(rows[a].distances[a], Some(0));
            for b in 0..n {
                for c in 0..n {
                    if let (Some(x), Some(y), Some(z)) =
                        (rows[a].distances[b], rows[b].distances[c], rows[a].distances[c])
                    {
                        prop_assert!(z <= x + y);
                    }
                }
            }
        }
    }
}
