//! Twisted duality: deletion, contraction, partial duals and partial Petrials.
//!
//! Partial duality goes through the arrow presentation only. Edge ids and
//! labels survive every operator except deletion (which renumbers the
//! remaining edges in order); vertices of a partial dual that are not carried
//! over unchanged receive fresh labels.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::arrow::{from_arrow_presentation, partial_dual_move, to_arrow_presentation};
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeEnd, EdgeId, EdgeSet, RibbonGraph, Vertex};

pub fn delete(g: &RibbonGraph, set: &EdgeSet) -> Result<RibbonGraph> {
    g.check_edges(set)?;
    if set.is_empty() {
        return Ok(g.clone());
    }
    let mut remap = vec![None; g.edge_count()];
    let mut edges: Vec<Edge> = Vec::with_capacity(g.edge_count() - set.len());
    for e in g.edge_ids() {
        if !set.contains(&e) {
            remap[e.0] = Some(EdgeId(edges.len()));
            edges.push(g.edge(e).clone());
        }
    }
    let vertices = g
        .vertices()
        .iter()
        .map(|v| {
            let rotation = v
                .rotation
                .iter()
                .filter_map(|h| remap[h.edge.0].map(|e| EdgeEnd::new(e, h.end)))
                .collect();
            Vertex::new(v.label.clone(), rotation)
        })
        .collect();
    Ok(RibbonGraph::assemble(vertices, edges))
}

/// Adds a half-twist to every edge of `set`.
pub fn partial_petrial(g: &RibbonGraph, set: &EdgeSet) -> Result<RibbonGraph> {
    g.check_edges(set)?;
    let (vertices, mut edges) = g.clone().into_parts();
    for e in set {
        edges[e.0].sign = edges[e.0].sign.toggled();
    }
    Ok(RibbonGraph::assemble(vertices, edges))
}

pub fn petrial(g: &RibbonGraph) -> RibbonGraph {
    partial_petrial(g, &g.all_edges()).expect("own edges")
}

pub fn partial_dual(g: &RibbonGraph, set: &EdgeSet) -> Result<RibbonGraph> {
    g.check_edges(set)?;
    if set.is_empty() {
        return Ok(g.clone());
    }
    let indices: BTreeSet<usize> = set.iter().map(|e| e.0).collect();
    let moved = partial_dual_move(&to_arrow_presentation(g), &indices);
    from_arrow_presentation(&moved)
}

pub fn geometric_dual(g: &RibbonGraph) -> RibbonGraph {
    partial_dual(g, &g.all_edges()).expect("own edges")
}

/// `G/A = G^A - A`.
pub fn contract(g: &RibbonGraph, set: &EdgeSet) -> Result<RibbonGraph> {
    delete(&partial_dual(g, set)?, set)
}

/// `G - deleted / contracted`, computed as `G^C - (C ∪ D)`.
pub fn minor(g: &RibbonGraph, deleted: &EdgeSet, contracted: &EdgeSet) -> Result<RibbonGraph> {
    g.check_edges(deleted)?;
    g.check_edges(contracted)?;
    if !deleted.is_disjoint(contracted) {
        return Err(Error::OverlappingSets);
    }
    let both: EdgeSet = deleted.union(contracted).copied().collect();
    delete(&partial_dual(g, contracted)?, &both)
}

/// The two generators of the ribbon group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    Dual,
    Petrial,
}

/// An element of the six-element group generated by `δ` (partial dual) and
/// `τ` (partial Petrial) subject to `δ² = τ² = (δτ)³ = 1`.
///
/// Words are read right to left: `DeltaTau` applies `τ` first, then `δ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Twist {
    Identity,
    Delta,
    Tau,
    DeltaTau,
    TauDelta,
    DeltaTauDelta,
}

impl Twist {
    pub const ALL: [Twist; 6] = [
        Twist::Identity,
        Twist::Delta,
        Twist::Tau,
        Twist::DeltaTau,
        Twist::TauDelta,
        Twist::DeltaTauDelta,
    ];

    /// Generators in application order.
    pub fn steps(self) -> &'static [Generator] {
        use Generator::*;
        match self {
            Twist::Identity => &[],
            Twist::Delta => &[Dual],
            Twist::Tau => &[Petrial],
            Twist::DeltaTau => &[Petrial, Dual],
            Twist::TauDelta => &[Dual, Petrial],
            Twist::DeltaTauDelta => &[Dual, Petrial, Dual],
        }
    }

    // δ = (0 1), τ = (1 2) acting on {0, 1, 2}.
    fn permutation(self) -> [u8; 3] {
        let mut p = [0, 1, 2];
        for g in self.steps() {
            let swap = match g {
                Generator::Dual => (0, 1),
                Generator::Petrial => (1, 2),
            };
            for x in &mut p {
                if *x == swap.0 {
                    *x = swap.1;
                } else if *x == swap.1 {
                    *x = swap.0;
                }
            }
        }
        p
    }

    fn from_permutation(p: [u8; 3]) -> Twist {
        *Twist::ALL.iter().find(|t| t.permutation() == p).expect("S3 is closed")
    }

    /// `self.then(other)` applies `self` first.
    pub fn then(self, other: Twist) -> Twist {
        let a = self.permutation();
        let b = other.permutation();
        Twist::from_permutation([b[a[0] as usize], b[a[1] as usize], b[a[2] as usize]])
    }

    pub fn inverse(self) -> Twist {
        *Twist::ALL.iter().find(|t| self.then(**t) == Twist::Identity).unwrap()
    }

    pub fn name(self) -> &'static str {
        match self {
            Twist::Identity => "1",
            Twist::Delta => "d",
            Twist::Tau => "t",
            Twist::DeltaTau => "dt",
            Twist::TauDelta => "td",
            Twist::DeltaTauDelta => "dtd",
        }
    }
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Twist {
    type Err = Error;

    /// Any word over `d`/`t` (read right to left), or `1`.
    fn from_str(s: &str) -> Result<Twist> {
        if s == "1" {
            return Ok(Twist::Identity);
        }
        if s.is_empty() {
            return Err(Error::BadTwist(s.into()));
        }
        s.chars().rev().try_fold(Twist::Identity, |acc, c| match c {
            'd' => Ok(acc.then(Twist::Delta)),
            't' => Ok(acc.then(Twist::Tau)),
            _ => Err(Error::BadTwist(s.into())),
        })
    }
}

/// Per-edge group elements; edges not mentioned get the identity.
pub type TwistWord = BTreeMap<EdgeId, Twist>;

/// Parses `"a:dt,b:1,c:d"` against the edge labels of `g`.
pub fn parse_twist_word(g: &RibbonGraph, s: &str) -> Result<TwistWord> {
    let mut w = TwistWord::new();
    for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
        let (label, twist) = item.split_once(':').ok_or_else(|| Error::BadTwist(item.into()))?;
        let e = g
            .edge_by_label(label.trim())
            .ok_or_else(|| Error::UnknownEdgeLabel(label.trim().into()))?;
        w.insert(e, twist.trim().parse()?);
    }
    Ok(w)
}

/// `G^{∏ ξ(A_ξ)}`: each edge is acted on by its own group element. Actions on
/// distinct edges commute, so the words are applied in layers, one generator
/// per edge per layer.
pub fn apply_twist_word(g: &RibbonGraph, word: &TwistWord) -> Result<RibbonGraph> {
    let keys: EdgeSet = word.keys().copied().collect();
    g.check_edges(&keys)?;
    let mut h = g.clone();
    for layer in 0..3 {
        let mut petrial_set = EdgeSet::new();
        let mut dual_set = EdgeSet::new();
        for (&e, t) in word {
            match t.steps().get(layer) {
                Some(Generator::Petrial) => {
                    petrial_set.insert(e);
                }
                Some(Generator::Dual) => {
                    dual_set.insert(e);
                }
                None => {}
            }
        }
        h = partial_petrial(&h, &petrial_set)?;
        h = partial_dual(&h, &dual_set)?;
    }
    Ok(h)
}
