mod common;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use common::{exhaustive_chromatic, exhaustively_colorable, first_fit};
use tripath::coloring::{
    exact_chromatic, greedy_coloring, is_proper, paper_fixture_coloring, periodic_coloring, row_colors,
    row_periodicity, Chromatic, Coloring,
};
use tripath::structure::{AdjacencyMode, Graph, TriangularStructure};

fn graph(n: u32, mode: AdjacencyMode) -> Graph {
    TriangularStructure::build(n).unwrap().to_graph(mode)
}

fn chi(g: &Graph) -> (u32, Coloring) {
    match exact_chromatic(g, g.max_degree() as u32 + 1).unwrap() {
        Chromatic::Colorable { chi, witness } => (chi, witness),
        Chromatic::Unsatisfiable => panic!("max degree + 1 colors must suffice"),
    }
}

#[test]
fn path_chromatic_number_is_three() {
    for n in 2..=6 {
        let g = graph(n, AdjacencyMode::PathAlongLines);
        let (k, witness) = chi(&g);
        assert_eq!(k, 3, "n = {n}");
        assert_eq!(witness.palette_size(), 3);
        assert!(is_proper(&g, &witness).unwrap());
    }
}

#[test]
fn path_chromatic_matches_exhaustive_enumeration() {
    for n in 2..=4 {
        let g = graph(n, AdjacencyMode::PathAlongLines);
        assert_eq!(exhaustive_chromatic(g.vertex_count(), g.edges()), 3, "n = {n}");
        assert_eq!(chi(&g).0, 3);
    }
}

#[test]
fn clique_chromatic_number_is_order_plus_one() {
    for n in 2..=5 {
        let s = TriangularStructure::build(n).unwrap();
        let g = s.to_graph(AdjacencyMode::CliquePerLine);
        // apex + first row is an (n+1)-clique
        let clique: Vec<usize> = std::iter::once(0).chain(1..=n as usize).collect();
        for (i, &u) in clique.iter().enumerate() {
            for &v in &clique[i + 1..] {
                assert!(g.has_edge(u, v));
            }
        }
        let (k, witness) = chi(&g);
        assert_eq!(k, n + 1, "n = {n}");
        assert!(is_proper(&g, &witness).unwrap());
        assert_eq!(exact_chromatic(&g, n).unwrap(), Chromatic::Unsatisfiable);
    }
}

#[test]
fn clique_order_three_by_enumeration() {
    let g = graph(3, AdjacencyMode::CliquePerLine);
    assert!(!exhaustively_colorable(g.vertex_count(), g.edges(), 3));
    assert!(exhaustively_colorable(g.vertex_count(), g.edges(), 4));
}

#[test]
fn exact_witness_is_repeatable() {
    for mode in [AdjacencyMode::PathAlongLines, AdjacencyMode::CliquePerLine] {
        let g = graph(5, mode);
        let first = exact_chromatic(&g, 10).unwrap();
        for _ in 0..5 {
            assert_eq!(exact_chromatic(&g, 10).unwrap(), first);
        }
    }
}

#[test]
fn exact_unsatisfiable_below_chi() {
    let g = graph(4, AdjacencyMode::PathAlongLines);
    assert_eq!(exact_chromatic(&g, 2).unwrap(), Chromatic::Unsatisfiable);
    assert_eq!(exact_chromatic(&g, 0).unwrap(), Chromatic::Unsatisfiable);
}

#[test]
fn greedy_natural_order_matches_first_fit_oracle() {
    let g = graph(4, AdjacencyMode::PathAlongLines);
    let order: Vec<usize> = (0..g.vertex_count()).collect();
    let c = greedy_coloring(&g, &order).unwrap();
    let oracle = first_fit(g.vertex_count(), g.edges(), &order);
    assert_eq!(c.colors(), oracle.as_slice());
    assert_eq!(c.palette_size(), 3);
}

#[test]
fn greedy_random_orders_are_proper() {
    let mut rng = StdRng::seed_from_u64(0x7a1);
    for n in 3..=10 {
        for mode in [AdjacencyMode::PathAlongLines, AdjacencyMode::CliquePerLine] {
            let g = graph(n, mode);
            let bound = g.max_degree() as u32 + 1;
            let mut order: Vec<usize> = (0..g.vertex_count()).collect();
            for _ in 0..200 {
                order.shuffle(&mut rng);
                let c = greedy_coloring(&g, &order).unwrap();
                assert!(is_proper(&g, &c).unwrap());
                assert!(c.palette_size() <= bound);
                assert_eq!(c.colors(), first_fit(g.vertex_count(), g.edges(), &order).as_slice());
            }
        }
    }
}

#[test]
fn exact_never_exceeds_greedy() {
    let mut rng = StdRng::seed_from_u64(11);
    for n in 2..=6 {
        for mode in [AdjacencyMode::PathAlongLines, AdjacencyMode::CliquePerLine] {
            let g = graph(n, mode);
            let (k, _) = chi(&g);
            let mut order: Vec<usize> = (0..g.vertex_count()).collect();
            for _ in 0..50 {
                order.shuffle(&mut rng);
                let greedy = greedy_coloring(&g, &order).unwrap().palette_size();
                assert!(k <= greedy && greedy <= g.max_degree() as u32 + 1);
            }
        }
    }
}

#[test]
fn periodic_scheme_for_all_small_orders() {
    for n in 2..=64 {
        let s = TriangularStructure::build(n).unwrap();
        let c = periodic_coloring(&s);
        assert!(
            is_proper(&s.to_graph(AdjacencyMode::PathAlongLines), &c).unwrap(),
            "n = {n}"
        );
        assert_eq!(c.palette_size(), 3);
        assert!(row_periodicity(&s, &c).unwrap());
    }
}

#[test]
fn periodic_order_six_rows() {
    let s = TriangularStructure::build(6).unwrap();
    let c = periodic_coloring(&s);
    let rows: Vec<Vec<u32>> = (1..6).map(|r| row_colors(&s, &c, r).unwrap()).collect();
    assert_eq!(rows[0], rows[2]);
    assert_eq!(rows[2], rows[4]);
    assert_eq!(rows[1], rows[3]);
    assert_ne!(rows[0], rows[1]);
}

#[test]
fn fixture_is_not_minimal() {
    let s = TriangularStructure::build(4).unwrap();
    let g = s.to_graph(AdjacencyMode::PathAlongLines);
    let fixture = paper_fixture_coloring(4).unwrap();
    assert_eq!(fixture.palette_size(), 5);
    assert!(chi(&g).0 < fixture.palette_size());
}
