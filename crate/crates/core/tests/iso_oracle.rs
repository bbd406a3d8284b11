use std::collections::BTreeMap;

use ribbonlab::workbench::{enumerate_graphs, UniverseParams};
use ribbonlab::{are_isomorphic, canonical_code, canonical_form, EdgeEnd, RibbonGraph};

/// Backtracking search for a vertex bijection, flips and rotation shifts that
/// carry `g` onto `h`.
fn brute_isomorphic(g: &RibbonGraph, h: &RibbonGraph) -> bool {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let n = g.vertex_count();
    let mut target = vec![usize::MAX; n];
    let mut flip = vec![false; n];
    let mut used = vec![false; n];
    let mut end_map: BTreeMap<EdgeEnd, EdgeEnd> = BTreeMap::new();
    search(g, h, 0, &mut target, &mut flip, &mut used, &mut end_map)
}

fn search(
    g: &RibbonGraph,
    h: &RibbonGraph,
    v: usize,
    target: &mut Vec<usize>,
    flip: &mut Vec<bool>,
    used: &mut Vec<bool>,
    end_map: &mut BTreeMap<EdgeEnd, EdgeEnd>,
) -> bool {
    if v == g.vertex_count() {
        return signs_agree(g, h, flip, end_map);
    }
    let rg = &g.vertices()[v].rotation;
    let d = rg.len();
    for w in 0..h.vertex_count() {
        if used[w] || h.vertices()[w].rotation.len() != d {
            continue;
        }
        for f in [false, true] {
            for s in 0..d.max(1) {
                let rh = &h.vertices()[w].rotation;
                let mut added = Vec::new();
                let mut ok = true;
                for j in 0..d {
                    let a = if f { rg[(d - j) % d] } else { rg[j] };
                    let b = rh[(s + j) % d];
                    if !extend(end_map, a, b, &mut added) {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    used[w] = true;
                    target[v] = w;
                    flip[v] = f;
                    if search(g, h, v + 1, target, flip, used, end_map) {
                        return true;
                    }
                    used[w] = false;
                }
                for a in added {
                    end_map.remove(&a);
                }
            }
        }
    }
    false
}


/// Records `a -> b` together with the forced opposite-end pairing, failing on
/// a conflict.
fn extend(map: &mut BTreeMap<EdgeEnd, EdgeEnd>, a: EdgeEnd, b: EdgeEnd, added: &mut Vec<EdgeEnd>) -> bool {
    for (x, y) in [(a, b), (a.opposite(), b.opposite())] {
        match map.get(&x) {
            Some(&z) if z != y => return false,
            Some(_) => {}
            None => {
                if map.values().any(|&z| z == y) {
                    return false;
                }
                map.insert(x, y);
                added.push(x);
            }
        }
    }
    true
}

fn signs_agree(g: &RibbonGraph, h: &RibbonGraph, flip: &[bool], map: &BTreeMap<EdgeEnd, EdgeEnd>) -> bool {
    g.edge_ids().all(|e| {
        let (u, w) = g.endpoints(e);
        let image = map[&EdgeEnd::new(e, ribbonlab::End::One)].edge;
        (g.sign(e).is_twisted() ^ flip[u.0] ^ flip[w.0]) == h.sign(image).is_twisted()
    })
}

#[test]
fn agrees_on_all_raw_two_edge_graphs() {
    let p = UniverseParams {
        dedup: false,
        ..UniverseParams::up_to(2)
    };
    let u = enumerate_graphs(p).unwrap();
    for (i, g) in u.iter().enumerate() {
        for h in &u.graphs[i..] {
            assert_eq!(are_isomorphic(g, h), brute_isomorphic(g, h), "{g:?}\n{h:?}");
        }
    }
}

#[test]
fn agrees_on_three_edge_classes() {
    let p = UniverseParams {
        dedup: false,
        ..UniverseParams::exactly(3).connected()
    };
    let raw = enumerate_graphs(p).unwrap();
    let mut classes: BTreeMap<Vec<u32>, Vec<&RibbonGraph>> = BTreeMap::new();
    for g in &raw {
        classes.entry(canonical_code(g)).or_default().push(g);
    }
    assert_eq!(classes.len(), 63);
    let reps: Vec<&RibbonGraph> = classes.values().map(|c| c[0]).collect();
    for (i, a) in reps.iter().enumerate() {
        for b in &reps[i + 1..] {
            assert!(!brute_isomorphic(a, b));
        }
    }
    for class in classes.values() {
        for g in &class[1..] {
            assert!(brute_isomorphic(class[0], g));
        }
    }
}

#[test]
fn canonical_forms_are_isomorphic() {
    for g in &enumerate_graphs(UniverseParams::up_to(3)).unwrap() {
        assert!(brute_isomorphic(g, &canonical_form(g)));
    }
}
