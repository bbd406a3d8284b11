use std::collections::HashSet;

use ribbonlab::workbench::{enumerate_graphs, UniverseParams};
use ribbonlab::{canonical_code, RibbonGraph, Sign};

fn count(p: UniverseParams) -> usize {
    enumerate_graphs(p).unwrap().len()
}

#[test]
fn golden_counts() {
    let all = [1, 5, 52, 493, 5476];
    let connected = [1, 3, 11, 63, 514];
    for k in 0..=4 {
        assert_eq!(count(UniverseParams::exactly(k)), all[k], "k = {k}");
        assert_eq!(count(UniverseParams::exactly(k).connected()), connected[k], "connected k = {k}");
    }
}

#[test]
fn one_edge_classes() {
    let u = enumerate_graphs(UniverseParams::exactly(1)).unwrap();
    let with = |n: usize| u.iter().filter(|g| g.vertex_count() == n && g.is_connected()).count();
    assert_eq!(with(1), 2);
    assert_eq!(with(2), 1);
}

#[test]
fn connected_orientable_two_edge_graphs() {
    let u = enumerate_graphs(UniverseParams::exactly(2).connected()).unwrap();
    assert_eq!(u.iter().filter(|g| g.is_orientable()).count(), 5);
}

#[test]
fn dedup_off_keeps_duplicates() {
    let p = UniverseParams {
        dedup: false,
        ..UniverseParams::exactly(2)
    };
    let u = enumerate_graphs(p).unwrap();
    let distinct: HashSet<_> = u.iter().map(canonical_code).collect();
    assert!(u.len() > distinct.len());
    assert_eq!(distinct.len(), 52);
}

#[test]
fn enumeration_is_deterministic() {
    let a = enumerate_graphs(UniverseParams::up_to(3)).unwrap();
    let b = enumerate_graphs(UniverseParams::up_to(3)).unwrap();
    assert_eq!(a.graphs, b.graphs);
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Every permutation of the 2k labelled ends, read as a rotation system by
/// its cycles, with every sign vector and every admissible number of isolated
/// vertices.
fn brute_force(k: usize, connected_only: bool) -> HashSet<Vec<u32>> {
    let bound = (2 * k).max(1);
    let mut out = HashSet::new();
    for sigma in permutations(2 * k) {
        let mut seen = vec![false; 2 * k];
        let mut rotations: Vec<Vec<(usize, u8)>> = Vec::new();
        for s in 0..2 * k {
            if seen[s] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                cycle.push((x / 2, (x % 2 + 1) as u8));
                x = sigma[x];
            }
            rotations.push(cycle);
        }
        let base = rotations.len();
        for extra in usize::from(k == 0)..=bound - base.min(bound) {
            if base + extra > bound {
                continue;
            }
            let mut rot = rotations.clone();
            rot.extend((0..extra).map(|_| Vec::new()));
            let refs: Vec<&[(usize, u8)]> = rot.iter().map(Vec::as_slice).collect();
            for mask in 0..1u32 << k {
                let signs: Vec<Sign> = (0..k)
                    .map(|i| if mask >> i & 1 == 1 { Sign::Minus } else { Sign::Plus })
                    .collect();
                let g = RibbonGraph::from_rotations(&refs, &signs).unwrap();
                if connected_only && !g.is_connected() {
                    continue;
                }
                out.insert(canonical_code(&g));
            }
        }
    }
    out
}

#[test]
fn matches_permutation_enumerator() {
    for k in 0..=3 {
        for connected in [false, true] {
            let mut p = UniverseParams::exactly(k);
            p.connected_only = connected;
            let ours: HashSet<Vec<u32>> = enumerate_graphs(p).unwrap().iter().map(canonical_code).collect();
            assert_eq!(ours, brute_force(k, connected), "k = {k}, connected = {connected}");
        }
    }
}
