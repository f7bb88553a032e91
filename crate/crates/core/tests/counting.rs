// SPDX-License-Identifier: Apache-2.0

mod support;

use std::collections::HashMap;

use motifvar_core::count::orbit4::{induced_orbits, vertex_type};
use motifvar_core::count::{count, count_all, count_by_backtracking, orbit_degree_stats};
use motifvar_core::host::HostGraph;
use motifvar_core::hvmodel::{sample, ModelParams};
use motifvar_core::motif::{enumerate_connected, parse_motif, SmallGraph};
use motifvar_core::varprinciple::Tau;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use support::oracle::{brute, random_graph, subsets};

#[test]
fn optimized_counts_match_exhaustive_subsets() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let classes: Vec<Vec<SmallGraph>> = (3..=5).map(|k| enumerate_connected(k).unwrap()).collect();
    let (square, diamond, k4) =
        (parse_motif("square").unwrap(), parse_motif("diamond").unwrap(), parse_motif("k4").unwrap());
    for _ in 0..100 {
        let g = random_graph(&mut rng);
        for motifs in &classes {
            let truth = brute(&g, motifs);
            let k = motifs[0].k();
            for induced in [false, true] {
                let all = count_all(&g, k, induced).unwrap();
                for (i, h) in motifs.iter().enumerate() {
                    let want = if induced { truth[i].1 } else { truth[i].0 };
                    assert_eq!(count(&g, h, induced).unwrap().copies, want, "{h:?} induced={induced}");
                    assert_eq!(count_by_backtracking(&g, h, induced).unwrap().copies, want);
                    assert_eq!(all[i].copies, want);
                }
            }
        }
        let c = |h: &SmallGraph, induced: bool| count(&g, h, induced).unwrap().copies;
        assert_eq!(c(&square, false), c(&square, true) + c(&diamond, true) + 3 * c(&k4, true));
    }
}

#[test]
fn per_vertex_types_match_exhaustive() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..30 {
        let g = random_graph(&mut rng);
        let rows = induced_orbits(&g);
        let mut want = vec![[0u64; 11]; g.n()];
        for s in subsets(g.n(), 4) {
            let mut e = Vec::new();
            for i in 0..4 {
                for j in i + 1..4 {
                    if g.has_edge(s[i], s[j]) {
                        e.push((i, j));
                    }
                }
            }
            let sub = SmallGraph::from_edges(4, &e).unwrap();
            if sub.is_connected() {
                for (i, &v) in s.iter().enumerate() {
                    want[v][vertex_type(&sub, i)] += 1;
                }
            }
        }
        assert_eq!(rows, want);
    }
}

#[test]
fn counts_ignore_vertex_names() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..10 {
        let g = random_graph(&mut rng);
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rng);
        let h = g.relabel(&perm).unwrap();
        for k in 3..=5 {
            for induced in [false, true] {
                let a: Vec<u64> = count_all(&g, k, induced).unwrap().iter().map(|r| r.copies).collect();
                let b: Vec<u64> = count_all(&h, k, induced).unwrap().iter().map(|r| r.copies).collect();
                assert_eq!(a, b);
            }
        }
    }
}

#[test]
fn census_agrees_with_single_counts_on_a_model_sample() {
    let g = sample(&ModelParams::new(3000, Tau::parse("5/2").unwrap(), 4)).unwrap();
    for k in [3, 4] {
        for induced in [false, true] {
            for r in count_all(&g, k, induced).unwrap() {
                assert_eq!(count_by_backtracking(&g, &r.motif, induced).unwrap().copies, r.copies, "{}", r.name);
            }
        }
    }
    let empty = HostGraph::empty(10);
    assert!(count_all(&empty, 4, true).unwrap().iter().all(|r| r.copies == 0));
}

#[test]
fn orbit_stats_on_small_hosts() {
    let tri = HostGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    let s = orbit_degree_stats(&tri, &parse_motif("triangle").unwrap(), false, 100, 0).unwrap();
    assert_eq!(s.orbits.len(), 1);
    assert_eq!(s.orbits[0].mean_degree, 2.0);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let g = random_graph(&mut rng);
    // exact 4-vertex path and the embedding path agree on occurrence totals
    let by_type = orbit_degree_stats(&g, &parse_motif("paw").unwrap(), true, usize::MAX, 0).unwrap();
    let total: u64 = by_type.orbits.iter().map(|o| o.occurrences).sum();
    assert_eq!(total, 4 * by_type.copies);
    let capped = orbit_degree_stats(&g, &parse_motif("0-1,1-2,2-3,3-4").unwrap(), false, 5, 1).unwrap();
    let occ: HashMap<usize, u64> = capped.orbits.iter().map(|o| (o.orbit, o.occurrences)).collect();
    assert_eq!(occ.values().sum::<u64>(), 5 * capped.copies);
}
