//! Constructions of checkerboard-colourable twisted duals and partial
//! Petrials, and the boundary-orientation criterion behind them.

use std::collections::BTreeMap;

use crate::boundary::{corner_partner, edge_partner, trace_boundary, trace_boundary_without, HalfEdgeSegment, Role, Side};
use crate::error::{Error, Result};
use crate::graph::{EdgeEnd, EdgeId, EdgeSet, End, RibbonGraph};
use crate::medial::{
    build_medial, classify_cd, straight_ahead_direction, CdClassification, LineSegment, Passage, WalkSeed,
};
use crate::operators::{partial_dual, partial_petrial, Twist, TwistWord};
use crate::predicates::{checkerboard_colouring, is_proper_colouring, Colour, FaceColouring};

/// Edges to half-twist so that the result is orientable: orientation bits
/// are propagated along a spanning forest and every edge that disagrees with
/// them (including every twisted loop) is selected.
pub fn orienting_petrial_set(g: &RibbonGraph) -> EdgeSet {
    let mut bit: Vec<Option<bool>> = vec![None; g.vertex_count()];
    let mut stack = Vec::new();
    for root in g.vertex_ids() {
        if bit[root.0].is_some() {
            continue;
        }
        bit[root.0] = Some(false);
        stack.push(root);
        while let Some(v) = stack.pop() {
            let bv = bit[v.0].unwrap();
            for h in &g.vertex(v).rotation {
                let w = g.placement(h.opposite()).vertex;
                if bit[w.0].is_none() {
                    bit[w.0] = Some(bv ^ g.sign(h.edge).is_twisted());
                    stack.push(w);
                }
            }
        }
    }
    g.edge_ids()
        .filter(|&e| {
            let (a, b) = g.endpoints(e);
            g.sign(e).is_twisted() ^ (bit[a.0] != bit[b.0])
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct TwistedDualCertificate {
    /// Edges half-twisted to reach an orientable graph.
    pub petrial_set: EdgeSet,
    /// The d-edges of the orientable graph, dualized.
    pub dual_set: EdgeSet,
    pub classification: CdClassification,
    pub result: RibbonGraph,
    pub colouring: FaceColouring,
}

impl TwistedDualCertificate {
    /// The per-edge group element taking the input to `result`.
    pub fn twist_word(&self) -> TwistWord {
        let mut w = TwistWord::new();
        for &e in self.petrial_set.union(&self.dual_set) {
            let t = match (self.petrial_set.contains(&e), self.dual_set.contains(&e)) {
                (true, true) => Twist::DeltaTau,
                (true, false) => Twist::Tau,
                _ => Twist::Delta,
            };
            w.insert(e, t);
        }
        w
    }
}

/// Twists an arbitrary graph to an orientable one, directs its medial graph
/// along straight-ahead walks and dualizes the d-edges.
pub fn checkerboard_twisted_dual(g: &RibbonGraph) -> Result<TwistedDualCertificate> {
    checkerboard_twisted_dual_with(g, WalkSeed::Forward)
}

pub fn checkerboard_twisted_dual_with(g: &RibbonGraph, seed: WalkSeed) -> Result<TwistedDualCertificate> {
    let petrial_set = orienting_petrial_set(g);
    let oriented = partial_petrial(g, &petrial_set)?;
    let medial = build_medial(&oriented)?;
    let dir = straight_ahead_direction(&medial, seed);
    let classification = classify_cd(&medial, &dir)?;
    let dual_set = classification.d_edges();
    let result = partial_dual(&oriented, &dual_set)?;
    let colouring = checkerboard_colouring(&result)
        .ok_or_else(|| Error::Invariant("twisted dual is not checkerboard colourable".into()))?;
    Ok(TwistedDualCertificate {
        petrial_set,
        dual_set,
        classification,
        result,
        colouring,
    })
}

/// Alternating colours on the vertex line segments of every vertex. Corner
/// `k` of a vertex lies between rotation positions `k` and `k + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexColouring {
    pub corners: Vec<Vec<Colour>>,
}

impl VertexColouring {
    /// A half-edge line segment takes the colour of the vertex line segment
    /// it touches.
    pub fn segment_colour(&self, g: &RibbonGraph, s: HalfEdgeSegment) -> Colour {
        let p = g.placement(s.end);
        let corners = &self.corners[p.vertex.0];
        let d = corners.len();
        match s.role() {
            Role::Next => corners[p.position],
            Role::Prev => corners[(p.position + d - 1) % d],
        }
    }
}

pub fn vertex_checkerboard_colouring(g: &RibbonGraph) -> Result<VertexColouring> {
    vertex_checkerboard_colouring_from(g, Colour::Red)
}

/// As [`vertex_checkerboard_colouring`], with corner 0 of every vertex given
/// colour `first`.
pub fn vertex_checkerboard_colouring_from(g: &RibbonGraph, first: Colour) -> Result<VertexColouring> {
    let mut corners = Vec::with_capacity(g.vertex_count());
    for v in g.vertex_ids() {
        let d = g.degree(v);
        if d % 2 == 1 {
            return Err(Error::NotEulerian(g.vertex(v).label.clone()));
        }
        let mut c = first;
        corners.push(
            (0..d)
                .map(|_| {
                    let out = c;
                    c = c.other();
                    out
                })
                .collect(),
        );
    }
    Ok(VertexColouring { corners })
}

/// An edge is consistent when the colouring extends across its ribbon: the
/// two half-edge segments on each edge line segment agree, and the two edge
/// line segments differ.
pub fn is_consistent(g: &RibbonGraph, vc: &VertexColouring, e: EdgeId) -> bool {
    let h = EdgeEnd::new(e, End::One);
    let line = |side| {
        let s = HalfEdgeSegment::new(h, side);
        let a = vc.segment_colour(g, s);
        let b = vc.segment_colour(g, edge_partner(g, s));
        (a == b).then_some(a)
    };
    match (line(Side::L), line(Side::R)) {
        (Some(x), Some(y)) => x != y,
        _ => false,
    }
}

pub fn inconsistent_edges(g: &RibbonGraph, vc: &VertexColouring) -> EdgeSet {
    g.edge_ids().filter(|&e| !is_consistent(g, vc, e)).collect()
}

#[derive(Debug, Clone)]
pub struct PartialPetrialCertificate {
    pub vertex_colouring: VertexColouring,
    pub inconsistent: EdgeSet,
    pub result: RibbonGraph,
    /// Face colouring read off the line-segment colours.
    pub inherited: FaceColouring,
    /// The deterministic colouring from [`checkerboard_colouring`].
    pub colouring: FaceColouring,
}

/// Colours every vertex alternately and half-twists the inconsistent edges.
pub fn checkerboard_partial_petrial(g: &RibbonGraph) -> Result<PartialPetrialCertificate> {
    checkerboard_partial_petrial_from(g, Colour::Red)
}

pub fn checkerboard_partial_petrial_from(g: &RibbonGraph, first: Colour) -> Result<PartialPetrialCertificate> {
    let vc = vertex_checkerboard_colouring_from(g, first)?;
    let inconsistent = inconsistent_edges(g, &vc);
    let result = partial_petrial(g, &inconsistent)?;

    let b = trace_boundary(&result);
    let mut inherited = Vec::with_capacity(b.face_count());
    for comp in &b.components {
        let c = vc.segment_colour(&result, comp[0]);
        if comp.iter().any(|&s| vc.segment_colour(&result, s) != c) {
            return Err(Error::Invariant("boundary component is not monochromatic".into()));
        }
        inherited.push(c);
    }
    inherited.extend(b.free_vertices.iter().map(|_| Colour::Red));
    let inherited = FaceColouring(inherited);
    if !is_proper_colouring(&result, &inherited) {
        return Err(Error::Invariant("inherited face colouring is not proper".into()));
    }
    let colouring = checkerboard_colouring(&result)
        .ok_or_else(|| Error::Invariant("partial Petrial is not checkerboard colourable".into()))?;
    Ok(PartialPetrialCertificate {
        vertex_colouring: vc,
        inconsistent,
        result,
        inherited,
        colouring,
    })
}

/// Signed passages of every boundary component of `g - set`, with `g`
/// oriented. Common line segments of `set` take the place of their edge line
/// segments.
#[derive(Debug, Clone)]
pub struct SignedBoundary {
    pub face_count: usize,
    /// For each line segment on the boundary of `g - set`: its component and
    /// sign under the component's traced direction.
    pub passages: BTreeMap<LineSegment, (usize, bool)>,
}

pub fn signed_boundary(g: &RibbonGraph, set: &EdgeSet) -> Result<SignedBoundary> {
    g.check_edges(set)?;
    let n = g.normalized().ok_or(Error::NotOrientable)?;
    let b = trace_boundary_without(&n, set);
    let mut passages = BTreeMap::new();
    for (i, comp) in b.components.iter().enumerate() {
        for s in comp.iter().skip(1).step_by(2) {
            debug_assert_eq!(corner_partner(&n, *s), comp[comp.iter().position(|x| x == s).unwrap() - 1]);
            let p = Passage::leaving(*s, set.contains(&s.end.edge));
            passages.insert(p.segment, (i, p.positive));
        }
    }
    Ok(SignedBoundary {
        face_count: b.face_count(),
        passages,
    })
}

/// Searches all orientations of the boundary components of `g - set` for one
/// in which, for every edge outside `set`, its two edge line segments have
/// opposite signs and, for every edge in `set`, its two common line segments
/// have opposite signs. Returns the flips (relative to the traced directions)
/// of the first orientation found.
pub fn boundary_orientation(g: &RibbonGraph, set: &EdgeSet) -> Result<Option<Vec<bool>>> {
    let sb = signed_boundary(g, set)?;
    let pairs: Vec<[(usize, bool); 2]> = g
        .edge_ids()
        .map(|e| {
            let (x, y) = if set.contains(&e) {
                (
                    LineSegment::CommonLine { edge: e, end: End::One },
                    LineSegment::CommonLine { edge: e, end: End::Two },
                )
            } else {
                (
                    LineSegment::EdgeLine { edge: e, side: Side::L },
                    LineSegment::EdgeLine { edge: e, side: Side::R },
                )
            };
            [sb.passages[&x], sb.passages[&y]]
        })
        .collect();
    let f = sb.face_count;
    if f >= 32 {
        return Err(Error::TooLarge { requested: f, cap: 31 });
    }
    for mask in 0u64..(1u64 << f) {
        let flip = |c: usize| mask >> c & 1 == 1;
        if pairs
            .iter()
            .all(|[(c1, s1), (c2, s2)]| (s1 ^ flip(*c1)) != (s2 ^ flip(*c2)))
        {
            return Ok(Some((0..f).map(flip).collect()));
        }
    }
    Ok(None)
}

/// Whether the boundary of `g - set` admits the sign-alternating orientation
/// of [`boundary_orientation`]; equivalent to `g^set` being checkerboard
/// colourable.
pub fn boundary_orientation_exists(g: &RibbonGraph, set: &EdgeSet) -> Result<bool> {
    Ok(boundary_orientation(g, set)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::*;
    use crate::predicates::is_checkerboard_colourable;

    fn set(ids: &[usize]) -> EdgeSet {
        ids.iter().map(|&i| EdgeId(i)).collect()
    }

    fn torus() -> RibbonGraph {
        RibbonGraph::from_rotations(&[&[(0, 1), (1, 1), (0, 2), (1, 2)]], &[Plus, Plus]).unwrap()
    }

    #[test]
    fn orienting_sets() {
        assert!(orienting_petrial_set(&torus()).is_empty());
        let minus = RibbonGraph::from_rotations(&[&[(0, 1), (0, 2)]], &[Minus]).unwrap();
        assert_eq!(orienting_petrial_set(&minus), set(&[0]));
        let path = RibbonGraph::from_rotations(&[&[(0, 1)], &[(0, 2)]], &[Minus]).unwrap();
        assert!(orienting_petrial_set(&path).is_empty());
    }

    #[test]
    fn one_face_example() {
        // One vertex, one twisted loop: a single boundary component.
        let g = RibbonGraph::from_rotations(&[&[(0, 1), (0, 2)]], &[Minus]).unwrap();
        assert_eq!(trace_boundary(&g).face_count(), 1);
        let cert = checkerboard_twisted_dual(&g).unwrap();
        assert_eq!(cert.petrial_set, set(&[0]));
        assert!(cert.dual_set.is_empty());
        assert_eq!(cert.result.vertex_count(), 1);
        assert_eq!(trace_boundary(&cert.result).face_count(), 2);
        assert_eq!(cert.colouring.0, vec![Colour::Red, Colour::Blue]);
    }

    #[test]
    fn vertex_colourings() {
        let vc = vertex_checkerboard_colouring(&RibbonGraph::point()).unwrap();
        assert_eq!(vc.corners, vec![Vec::<Colour>::new()]);
        let sphere = RibbonGraph::from_rotations(&[&[(0, 1), (0, 2)]], &[Plus]).unwrap();
        let vc = vertex_checkerboard_colouring(&sphere).unwrap();
        assert_eq!(vc.corners, vec![vec![Colour::Red, Colour::Blue]]);
        let vc = vertex_checkerboard_colouring(&torus()).unwrap();
        assert_eq!(
            vc.corners[0],
            vec![Colour::Red, Colour::Blue, Colour::Red, Colour::Blue]
        );
        let path = RibbonGraph::from_rotations(&[&[(0, 1)], &[(0, 2)]], &[Plus]).unwrap();
        assert!(matches!(vertex_checkerboard_colouring(&path), Err(Error::NotEulerian(_))));
    }

    #[test]
    fn torus_needs_both_loops_twisted() {
        let t = torus();
        let vc = vertex_checkerboard_colouring(&t).unwrap();
        assert_eq!(inconsistent_edges(&t, &vc), set(&[0, 1]));
        let cert = checkerboard_partial_petrial(&t).unwrap();
        assert_eq!(cert.result.sign(EdgeId(0)), Minus);
        assert_eq!(cert.result.sign(EdgeId(1)), Minus);
        assert!(is_checkerboard_colourable(&cert.result));
    }

    #[test]
    fn twisting_toggles_consistency() {
        let sphere = RibbonGraph::from_rotations(&[&[(0, 1), (0, 2)]], &[Plus]).unwrap();
        let vc = vertex_checkerboard_colouring(&sphere).unwrap();
        let before = inconsistent_edges(&sphere, &vc);
        let twisted = partial_petrial(&sphere, &set(&[0])).unwrap();
        let after = inconsistent_edges(&twisted, &vc);
        assert_ne!(before.contains(&EdgeId(0)), after.contains(&EdgeId(0)));
        // The untwisted sphere loop is already consistent.
        let cert = checkerboard_partial_petrial(&sphere).unwrap();
        assert!(cert.inconsistent.is_empty());
        assert_eq!(cert.result, sphere);
    }

    #[test]
    fn orientation_on_one_edge_graphs() {
        let graphs = [
            RibbonGraph::from_rotations(&[&[(0, 1), (0, 2)]], &[Plus]).unwrap(),
            RibbonGraph::from_rotations(&[&[(0, 1)], &[(0, 2)]], &[Plus]).unwrap(),
        ];
        for g in &graphs {
            for a in [set(&[]), set(&[0])] {
                let lhs = boundary_orientation_exists(g, &a).unwrap();
                let rhs = is_checkerboard_colourable(&partial_dual(g, &a).unwrap());
                assert_eq!(lhs, rhs, "{g:?} {a:?}");
            }
        }
        let minus = RibbonGraph::from_rotations(&[&[(0, 1), (0, 2)]], &[Minus]).unwrap();
        assert!(matches!(boundary_orientation_exists(&minus, &set(&[])), Err(Error::NotOrientable)));
    }

    #[test]
    fn certificate_word() {
        let cert = TwistedDualCertificate {
            petrial_set: set(&[0, 1]),
            dual_set: set(&[1, 2]),
            classification: CdClassification(vec![]),
            result: RibbonGraph::point(),
            colouring: FaceColouring(vec![]),
        };
        let w = cert.twist_word();
        assert_eq!(w[&EdgeId(0)], Twist::Tau);
        assert_eq!(w[&EdgeId(1)], Twist::DeltaTau);
        assert_eq!(w[&EdgeId(2)], Twist::Delta);
    }
}
