//! Bipartite, Eulerian, even-face and checkerboard-colourable.

use std::collections::VecDeque;
use std::fmt;

use crate::boundary::trace_boundary;
use crate::graph::RibbonGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Colour {
    Red,
    Blue,
}

impl Colour {
    pub fn other(self) -> Colour {
        match self {
            Colour::Red => Colour::Blue,
            Colour::Blue => Colour::Red,
        }
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Colour::Red => "red",
            Colour::Blue => "blue",
        })
    }
}

/// One colour per face, indexed like [`crate::BoundaryDecomposition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceColouring(pub Vec<Colour>);

pub fn is_eulerian(g: &RibbonGraph) -> bool {
    g.vertex_ids().all(|v| g.degree(v).is_multiple_of(2))
}

/// Bipartiteness of the underlying multigraph. A loop is an odd cycle.
pub fn is_bipartite(g: &RibbonGraph) -> bool {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for e in g.edge_ids() {
        let (a, b) = g.endpoints(e);
        if a == b {
            return false;
        }
        adj[a.0].push(b.0);
        adj[b.0].push(a.0);
    }
    two_colour(&adj).is_some()
}

pub fn face_degrees(g: &RibbonGraph) -> Vec<usize> {
    trace_boundary(g).degrees()
}

pub fn is_even_face(g: &RibbonGraph) -> bool {
    face_degrees(g).iter().all(|d| d % 2 == 0)
}

/// A proper red/blue colouring of the faces, if one exists. In each component
/// of the face-adjacency graph the lowest-numbered face is red.
pub fn checkerboard_colouring(g: &RibbonGraph) -> Option<FaceColouring> {
    let b = trace_boundary(g);
    let mut adj = vec![Vec::new(); b.face_count()];
    for e in g.edge_ids() {
        let (x, y) = b.faces_of_edge(g, e);
        if x == y {
            return None;
        }
        adj[x].push(y);
        adj[y].push(x);
    }
    two_colour(&adj).map(FaceColouring)
}

pub fn is_checkerboard_colourable(g: &RibbonGraph) -> bool {
    checkerboard_colouring(g).is_some()
}

/// Checks that `c` is a proper checkerboard colouring of `g`.
pub fn is_proper_colouring(g: &RibbonGraph, c: &FaceColouring) -> bool {
    let b = trace_boundary(g);
    c.0.len() == b.face_count()
        && g.edge_ids().all(|e| {
            let (x, y) = b.faces_of_edge(g, e);
            c.0[x] != c.0[y]
        })
}

fn two_colour(adj: &[Vec<usize>]) -> Option<Vec<Colour>> {
    let mut colour: Vec<Option<Colour>> = vec![None; adj.len()];
    let mut queue = VecDeque::new();
    for root in 0..adj.len() {
        if colour[root].is_some() {
            continue;
        }
        colour[root] = Some(Colour::Red);
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            let cx = colour[x].unwrap();
            for &y in &adj[x] {
                match colour[y] {
                    None => {
                        colour[y] = Some(cx.other());
                        queue.push_back(y);
                    }
                    Some(cy) if cy == cx => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(colour.into_iter().map(Option::unwrap).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::*;

    fn g(rot: &[&[(usize, u8)]], signs: &[crate::graph::Sign]) -> RibbonGraph {
        RibbonGraph::from_rotations(rot, signs).unwrap()
    }

    #[test]
    fn eulerian() {
        assert!(is_eulerian(&RibbonGraph::point()));
        assert!(is_eulerian(&g(&[&[(0, 1), (0, 2)]], &[Plus])));
        assert!(!is_eulerian(&g(&[&[(0, 1)], &[(0, 2)]], &[Plus])));
    }

    #[test]
    fn bipartite() {
        assert!(is_bipartite(&g(&[&[(0, 1)], &[(0, 2)]], &[Plus])));
        assert!(!is_bipartite(&g(&[&[(0, 1), (0, 2)]], &[Plus])));
        assert!(is_bipartite(&g(&[&[(0, 1), (1, 1)], &[(1, 2), (0, 2)]], &[Plus, Minus])));
        let triangle = g(
            &[&[(0, 1), (2, 2)], &[(1, 1), (0, 2)], &[(2, 1), (1, 2)]],
            &[Plus, Plus, Plus],
        );
        assert!(!is_bipartite(&triangle));
    }

    #[test]
    fn faces() {
        let plus = g(&[&[(0, 1), (0, 2)]], &[Plus]);
        let minus = g(&[&[(0, 1), (0, 2)]], &[Minus]);
        let torus = g(&[&[(0, 1), (1, 1), (0, 2), (1, 2)]], &[Plus, Plus]);
        assert_eq!(face_degrees(&plus), vec![1, 1]);
        assert_eq!(face_degrees(&minus), vec![2]);
        assert_eq!(face_degrees(&torus), vec![4]);
        assert!(!is_even_face(&plus));
        assert!(is_even_face(&minus));
        assert!(is_even_face(&torus));
    }

    #[test]
    fn checkerboard() {
        let plus = g(&[&[(0, 1), (0, 2)]], &[Plus]);
        let minus = g(&[&[(0, 1), (0, 2)]], &[Minus]);
        let c = checkerboard_colouring(&plus).unwrap();
        assert_eq!(c.0, vec![Colour::Red, Colour::Blue]);
        assert!(is_proper_colouring(&plus, &c));
        assert!(checkerboard_colouring(&minus).is_none());

        let torus = g(&[&[(0, 1), (1, 1), (0, 2), (1, 2)]], &[Plus, Plus]);
        assert!(checkerboard_colouring(&torus).is_none());
        let twisted = g(&[&[(0, 1), (1, 1), (0, 2), (1, 2)]], &[Minus, Minus]);
        assert!(checkerboard_colouring(&twisted).is_some());
    }

    #[test]
    fn isolated_faces_are_red() {
        let c = checkerboard_colouring(&RibbonGraph::point()).unwrap();
        assert_eq!(c.0, vec![Colour::Red]);
    }
}
