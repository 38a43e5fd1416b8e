//! Library results against brute-force oracles written independently here.

use num_bigint::BigUint;
use phibound_core::clique::{chromatic_number, clique_number};
use phibound_core::degree::elementary_symmetric;
use phibound_core::delta::{partition_inequality_check, phi_exact, phi_oracle, DeltaPartition};
use phibound_core::generate::{generate, Family, Probability};
use phibound_core::graph::Graph;
use phibound_core::sweep::{all_labeled_graphs, random_graphs};

/// All set partitions of `0..n`, by inserting each element into an
/// existing block or a new one.
fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut acc: Vec<Vec<Vec<usize>>> = vec![vec![]];
    for v in 0..n {
        let mut next = Vec::new();
        for p in acc {
            for i in 0..p.len() {
                let mut q = p.clone();
                q[i].push(v);
                next.push(q);
            }
            let mut q = p;
            q.push(vec![v]);
            next.push(q);
        }
        acc = next;
    }
    acc
}

fn is_delta_partition(g: &Graph, parts: &[Vec<usize>]) -> bool {
    let n = g.n();
    parts
        .iter()
        .all(|p| p.iter().all(|&v| g.degree(v) + p.len() <= n))
}

fn brute_phi(g: &Graph) -> usize {
    set_partitions(g.n())
        .iter()
        .filter(|p| is_delta_partition(g, p))
        .map(Vec::len)
        .min()
        .unwrap()
}

fn brute_clique(g: &Graph) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|&m| {
            (0..n).all(|u| {
                (u + 1..n).all(|v| m & (1 << u) == 0 || m & (1 << v) == 0 || g.has_edge(u, v))
            })
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap()
}

fn colorable(g: &Graph, k: usize) -> bool {
    let n = g.n();
    let total = k.pow(n as u32);
    (0..total).any(|mut code| {
        let mut colors = vec![0; n];
        for c in colors.iter_mut() {
            *c = code % k;
            code /= k;
        }
        g.edges().all(|(u, v)| colors[u] != colors[v])
    })
}

fn brute_chi(g: &Graph) -> usize {
    (1..=g.n()).find(|&k| colorable(g, k)).unwrap()
}

fn brute_sigma(xs: &[u64], s: usize) -> BigUint {
    let n = xs.len();
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == s)
        .map(|m| {
            (0..n)
                .filter(|&i| m & (1 << i) != 0)
                .map(|i| BigUint::from(xs[i]))
                .product::<BigUint>()
        })
        .sum()
}

fn small_corpus() -> Vec<Graph> {
    let mut gs: Vec<Graph> = (1..=5).flat_map(all_labeled_graphs).collect();
    gs.extend(random_graphs(6..=8, 40, Probability::half(), 99));
    gs
}

#[test]
fn phi_examples_match_brute_force() {
    let k4 = generate(&Family::Complete { n: 4 }).unwrap();
    let c5 = generate(&Family::Cycle { n: 5 }).unwrap();
    let star = generate(&Family::Star { n: 4 }).unwrap();
    assert_eq!(brute_phi(&k4), 4);
    assert_eq!(brute_phi(&c5), 2);
    assert_eq!(brute_phi(&star), 2);
    assert_eq!(brute_phi(&Graph::empty(4)), 1);
    assert_eq!(phi_exact(&c5).unwrap().witness.sizes(), vec![3, 2]);
}

#[test]
fn greedy_and_library_oracle_match_brute_force() {
    let mut gs: Vec<Graph> = (1..=5).flat_map(all_labeled_graphs).collect();
    gs.extend(random_graphs(6..=7, 25, Probability::half(), 5));
    for g in &gs {
        let expected = brute_phi(g);
        assert_eq!(phi_exact(g).unwrap().phi, expected, "{g:?}");
        assert_eq!(phi_oracle(g).unwrap().phi, expected, "{g:?}");
    }
}

#[test]
fn every_valid_delta_partition_satisfies_partition_inequalities() {
    let mut gs: Vec<Graph> = (1..=4).flat_map(all_labeled_graphs).collect();
    gs.extend(random_graphs(5..=6, 15, Probability::half(), 8));
    let mut checked = 0;
    for g in &gs {
        for parts in set_partitions(g.n()) {
            if !is_delta_partition(g, &parts) {
                continue;
            }
            let p = DeltaPartition::new(g, parts).unwrap();
            let chk = partition_inequality_check(g, &p).unwrap();
            assert!(chk.all_ok(), "{g:?} {:?}", p.sizes());
            assert_eq!(
                chk.rhs_2_12,
                phibound_core::delta::PartitionInequalities::direct_rhs(g.n(), &p.sizes())
            );
            checked += 1;
        }
    }
    assert!(checked > 1000);
}

#[test]
fn clique_number_matches_subset_search() {
    for g in small_corpus() {
        let r = clique_number(&g).unwrap();
        assert_eq!(r.omega, brute_clique(&g), "{g:?}");
        assert_eq!(r.witness.len(), r.omega);
        for (i, &u) in r.witness.iter().enumerate() {
            for &v in &r.witness[i + 1..] {
                assert!(g.has_edge(u, v));
            }
        }
    }
}

#[test]
fn chromatic_number_matches_color_enumeration() {
    let mut gs: Vec<Graph> = (1..=5).flat_map(all_labeled_graphs).collect();
    gs.extend(random_graphs(6..=7, 20, Probability::half(), 17));
    for g in &gs {
        let r = chromatic_number(g).unwrap();
        assert_eq!(r.chi, brute_chi(g), "{g:?}");
        assert!(g.edges().all(|(u, v)| r.coloring[u] != r.coloring[v]));
        assert!(r.coloring.iter().all(|&c| c < r.chi));
    }
}

#[test]
fn turan_six_three_clique_by_subsets() {
    let t = generate(&Family::Turan { n: 6, r: 3 }).unwrap();
    assert_eq!(brute_clique(&t), 3);
    assert_eq!(brute_chi(&t), 3);
}

#[test]
fn symmetric_polynomials_match_subset_products() {
    let cases: [&[u64]; 5] = [
        &[1, 2, 3],
        &[2, 2, 2],
        &[0, 0, 6],
        &[7],
        &[3, 1, 4, 1, 5, 9, 2, 6],
    ];
    for xs in cases {
        for s in 1..=xs.len() {
            assert_eq!(
                elementary_symmetric(xs, s).unwrap(),
                brute_sigma(xs, s),
                "{xs:?} s={s}"
            );
        }
    }
    assert_eq!(brute_sigma(&[1, 2, 3], 2), BigUint::from(11u32));
    assert_eq!(brute_sigma(&[2, 2, 2], 3), BigUint::from(8u32));
}
