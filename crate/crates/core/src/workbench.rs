//! Exhaustive small-graph enumeration and property checking.

use std::collections::HashSet;
use std::fmt;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algorithms::{
    checkerboard_partial_petrial_from, checkerboard_twisted_dual_with, inconsistent_edges, boundary_orientation_exists,
};
use crate::arrow::{from_arrow_presentation, to_arrow_presentation};
use crate::boundary::euler_characteristic;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet, RibbonGraph, Sign};
use crate::iso::{are_isomorphic, canonical_code, canonical_form};
use crate::medial::{build_medial, classify_cd, smooth, straight_ahead_direction, WalkSeed};
use crate::operators::{
    apply_twist_word, delete, geometric_dual, minor, partial_dual, partial_petrial, petrial, Twist, TwistWord,
};
use crate::predicates::{
    is_bipartite, is_checkerboard_colourable, is_even_face, is_eulerian, is_proper_colouring, Colour,
};
use crate::text::{parse, to_text};

pub const MAX_EDGES: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniverseParams {
    pub min_edges: usize,
    pub max_edges: usize,
    /// Vertex bound including isolated vertices; by default `max(2k, 1)` for
    /// graphs with `k` edges.
    pub max_vertices: Option<usize>,
    pub connected_only: bool,
    pub dedup: bool,
}

impl Default for UniverseParams {
    fn default() -> Self {
        UniverseParams {
            min_edges: 0,
            max_edges: 3,
            max_vertices: None,
            connected_only: false,
            dedup: true,
        }
    }
}

impl UniverseParams {
    pub fn up_to(max_edges: usize) -> Self {
        UniverseParams {
            max_edges,
            ..Self::default()
        }
    }

    pub fn exactly(edges: usize) -> Self {
        UniverseParams {
            min_edges: edges,
            max_edges: edges,
            ..Self::default()
        }
    }

    pub fn connected(self) -> Self {
        UniverseParams {
            connected_only: true,
            ..self
        }
    }

    fn vertex_bound(&self, k: usize) -> usize {
        self.max_vertices.unwrap_or((2 * k).max(1))
    }
}

/// A materialized universe of graphs in deterministic order.
#[derive(Debug, Clone)]
pub struct GraphUniverse {
    pub params: UniverseParams,
    pub graphs: Vec<RibbonGraph>,
}

impl GraphUniverse {
    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, RibbonGraph> {
        self.graphs.iter()
    }
}

impl<'a> IntoIterator for &'a GraphUniverse {
    type Item = &'a RibbonGraph;
    type IntoIter = std::slice::Iter<'a, RibbonGraph>;

    fn into_iter(self) -> Self::IntoIter {
        self.graphs.iter()
    }
}

fn partitions(n: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 0 {
        out.push(prefix.clone());
        return;
    }
    for p in (1..=n.min(max_part)).rev() {
        prefix.push(p);
        partitions(n - p, p, prefix, out);
        prefix.pop();
    }
}

fn matchings(free: &mut Vec<usize>, current: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
    if free.is_empty() {
        out.push(current.clone());
        return;
    }
    let a = free.remove(0);
    for i in 0..free.len() {
        let b = free.remove(i);
        current.push((a, b));
        matchings(free, current, out);
        current.pop();
        free.insert(i, b);
    }
    free.insert(0, a);
}

/// Calls `f` on every graph of the universe in deterministic order.
///
/// Every signed rotation system with `k` edges is isomorphic to one whose
/// edge-ends `0..2k` fill the vertices in order, so it suffices to range over
/// degree partitions, perfect matchings of the ends (the lower end of a pair
/// is end 1) and sign vectors, then add isolated vertices.
pub fn for_each_graph(params: &UniverseParams, mut f: impl FnMut(RibbonGraph)) -> Result<()> {
    if params.max_edges > MAX_EDGES {
        return Err(Error::TooLarge {
            requested: params.max_edges,
            cap: MAX_EDGES,
        });
    }
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    for k in params.min_edges..=params.max_edges {
        let bound = params.vertex_bound(k);
        let mut parts = Vec::new();
        partitions(2 * k, 2 * k, &mut Vec::new(), &mut parts);
        let mut all_matchings = Vec::new();
        matchings(&mut (0..2 * k).collect(), &mut Vec::new(), &mut all_matchings);

        for degrees in &parts {
            let nonisolated = degrees.len();
            if nonisolated > bound {
                continue;
            }
            let isolated: Vec<usize> = if params.connected_only {
                if k == 0 {
                    vec![1]
                } else {
                    vec![0]
                }
            } else {
                (usize::from(k == 0)..=bound - nonisolated).collect()
            };
            for &extra in &isolated {
                for m in &all_matchings {
                    let mut end_of = vec![(0usize, 1u8); 2 * k];
                    for (e, &(a, b)) in m.iter().enumerate() {
                        end_of[a] = (e, 1);
                        end_of[b] = (e, 2);
                    }
                    let mut rotations: Vec<Vec<(usize, u8)>> = Vec::new();
                    let mut next = 0;
                    for &d in degrees {
                        rotations.push(end_of[next..next + d].to_vec());
                        next += d;
                    }
                    rotations.extend((0..extra).map(|_| Vec::new()));
                    let rot_refs: Vec<&[(usize, u8)]> = rotations.iter().map(Vec::as_slice).collect();
                    for mask in 0u32..(1 << k) {
                        let signs: Vec<Sign> = (0..k)
                            .map(|i| if mask >> i & 1 == 1 { Sign::Minus } else { Sign::Plus })
                            .collect();
                        let g = RibbonGraph::from_rotations(&rot_refs, &signs)?;
                        if params.connected_only && !g.is_connected() {
                            continue;
                        }
                        if params.dedup && !seen.insert(canonical_code(&g)) {
                            continue;
                        }
                        f(g);
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn enumerate_graphs(params: UniverseParams) -> Result<GraphUniverse> {
    let mut graphs = Vec::new();
    for_each_graph(&params, |g| graphs.push(g))?;
    Ok(GraphUniverse { params, graphs })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteOptions {
    /// Thread count; `None` uses the global pool.
    pub workers: Option<usize>,
    /// Graphs with at most this many edges get every edge subset; larger ones
    /// get `samples` random subsets.
    pub subset_limit: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            workers: None,
            subset_limit: 3,
            samples: 8,
            seed: 0x5eed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    /// The witness graph in text format.
    pub graph: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PropertyReport {
    pub property: String,
    pub params: UniverseParams,
    pub checked: usize,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} ({} checked, {} failures, {} ms)",
            self.property,
            if self.passed() { "pass" } else { "FAIL" },
            self.checked,
            self.failures.len(),
            self.elapsed_ms
        )
    }
}

/// Per-graph context handed to a property.
struct Ctx {
    exhaustive: bool,
    samples: usize,
    rng: ChaCha8Rng,
}

impl Ctx {
    fn subsets(&mut self, g: &RibbonGraph) -> Vec<EdgeSet> {
        let k = g.edge_count();
        if self.exhaustive {
            return (0u64..1 << k).map(|m| mask_set(m, k)).collect();
        }
        let mut out = vec![EdgeSet::new(), g.all_edges()];
        for _ in 0..self.samples {
            out.push(mask_set(self.rng.random::<u64>(), k));
        }
        out
    }

    /// Disjoint pairs `(B, C)`.
    fn disjoint_pairs(&mut self, g: &RibbonGraph) -> Vec<(EdgeSet, EdgeSet)> {
        let k = g.edge_count();
        let split = |code: &[u8]| {
            let pick = |t| (0..k).filter(|&i| code[i] == t).map(EdgeId).collect::<EdgeSet>();
            (pick(1), pick(2))
        };
        if self.exhaustive {
            let mut out = Vec::new();
            for mut n in 0..3usize.pow(k as u32) {
                let code: Vec<u8> = (0..k)
                    .map(|_| {
                        let t = (n % 3) as u8;
                        n /= 3;
                        t
                    })
                    .collect();
                out.push(split(&code));
            }
            return out;
        }
        (0..self.samples)
            .map(|_| {
                let code: Vec<u8> = (0..k).map(|_| self.rng.random_range(0..3u8)).collect();
                split(&code)
            })
            .collect()
    }
}

fn mask_set(mask: u64, k: usize) -> EdgeSet {
    (0..k).filter(|&i| mask >> i & 1 == 1).map(EdgeId).collect()
}

/// Outcome of a property on one graph: instances checked and failure details.
#[derive(Default)]
struct Check {
    checked: usize,
    failures: Vec<String>,
}

impl Check {
    fn record(&mut self, ok: Result<bool>, detail: impl FnOnce() -> String) {
        self.checked += 1;
        match ok {
            Ok(true) => {}
            Ok(false) => self.failures.push(detail()),
            Err(e) => self.failures.push(format!("{}: {e}", detail())),
        }
    }
}

type Property = fn(&RibbonGraph, &mut Ctx) -> Check;

fn labels(g: &RibbonGraph, set: &EdgeSet) -> String {
    format!("{{{}}}", g.edge_labels(set).join(","))
}

fn single(ok: Result<bool>, name: &str) -> Check {
    let mut c = Check::default();
    c.record(ok, || name.to_string());
    c
}

fn checkerboard_implies_eulerian(g: &RibbonGraph, _: &mut Ctx) -> Check {
    single(Ok(!is_checkerboard_colourable(g) || is_eulerian(g)), "checkerboard but not Eulerian")
}

fn bipartite_implies_even_face(g: &RibbonGraph, _: &mut Ctx) -> Check {
    single(Ok(!is_bipartite(g) || is_even_face(g)), "bipartite but has an odd face")
}

fn checkerboard_iff_dual_bipartite(g: &RibbonGraph, _: &mut Ctx) -> Check {
    let d = geometric_dual(g);
    single(
        Ok(is_checkerboard_colourable(g) == is_bipartite(&d) && is_bipartite(g) == is_checkerboard_colourable(&d)),
        "duality between checkerboard and bipartite broken",
    )
}

fn theorem1_with(g: &RibbonGraph, seed: WalkSeed) -> Check {
    single(
        checkerboard_twisted_dual_with(g, seed).map(|c| is_proper_colouring(&c.result, &c.colouring)),
        "twisted dual colouring",
    )
}

fn theorem1_endtoend(g: &RibbonGraph, _: &mut Ctx) -> Check {
    theorem1_with(g, WalkSeed::Forward)
}

fn theorem1_reverse_walks(g: &RibbonGraph, _: &mut Ctx) -> Check {
    theorem1_with(g, WalkSeed::Reverse)
}

fn twisted_dual_word(g: &RibbonGraph, _: &mut Ctx) -> Check {
    single(
        checkerboard_twisted_dual_with(g, WalkSeed::Forward)
            .and_then(|c| Ok(are_isomorphic(&apply_twist_word(g, &c.twist_word())?, &c.result))),
        "result is not the image of its twist word",
    )
}

fn theorem2_with(g: &RibbonGraph, first: Colour) -> Check {
    if !is_eulerian(g) {
        return Check::default();
    }
    single(
        checkerboard_partial_petrial_from(g, first).map(|c| {
            is_proper_colouring(&c.result, &c.colouring)
                && inconsistent_edges(&c.result, &c.vertex_colouring).is_empty()
        }),
        "partial Petrial colouring",
    )
}

fn theorem2_endtoend(g: &RibbonGraph, _: &mut Ctx) -> Check {
    theorem2_with(g, Colour::Red)
}

fn theorem2_alternate_seed(g: &RibbonGraph, _: &mut Ctx) -> Check {
    theorem2_with(g, Colour::Blue)
}

fn boundary_orientation_property(g: &RibbonGraph, ctx: &mut Ctx) -> Check {
    let mut c = Check::default();
    if !g.is_orientable() {
        return c;
    }
    for a in ctx.subsets(g) {
        let ok = boundary_orientation_exists(g, &a).and_then(|l| Ok(l == is_checkerboard_colourable(&partial_dual(g, &a)?)));
        c.record(ok, || format!("A = {}", labels(g, &a)));
    }
    c
}

fn petrial_orientable_implies_dual_eulerian(g: &RibbonGraph, _: &mut Ctx) -> Check {
    single(
        Ok(!petrial(g).is_orientable() || is_eulerian(&geometric_dual(g))),
        "Petrial orientable but dual not Eulerian",
    )
}

fn colourable_partial_dual_minors(g: &RibbonGraph, ctx: &mut Ctx) -> Check {
    let mut c = Check::default();
    let dual = geometric_dual(g);
    for a in ctx.subsets(g) {
        let ok = (|| {
            if !is_checkerboard_colourable(&partial_dual(g, &a)?) {
                return Ok(true);
            }
            let x = delete(g, &a)?;
            let y = delete(&dual, &dual.translate_edges(g, &g.complement(&a)))?;
            Ok([x, y].iter().all(|h| is_checkerboard_colourable(h) && is_eulerian(h)))
        })();
        c.record(ok, || format!("A = {}", labels(g, &a)));
    }
    c
}

fn bipartite_partial_dual_minors(g: &RibbonGraph, ctx: &mut Ctx) -> Check {
    let mut c = Check::default();
    let dual = geometric_dual(g);
    for a in ctx.subsets(g) {
        let ok = (|| {
            if !is_bipartite(&partial_dual(g, &a)?) {
                return Ok(true);
            }
            let x = geometric_dual(&delete(g, &g.complement(&a))?);
            let y = geometric_dual(&delete(&dual, &dual.translate_edges(g, &a))?);
            Ok(is_bipartite(&x) && is_bipartite(&y))
        })();
        c.record(ok, || format!("A = {}", labels(g, &a)));
    }
    c
}

fn partial_dual_minor_commute(g: &RibbonGraph, ctx: &mut Ctx) -> Check {
    let mut c = Check::default();
    let pairs = ctx.disjoint_pairs(g);
    for a in ctx.subsets(g) {
        let ga = match partial_dual(g, &a) {
            Ok(ga) => ga,
            Err(e) => {
                c.record(Err(e), || format!("A = {}", labels(g, &a)));
                continue;
            }
        };
        for (b, cc) in &pairs {
            let ok = (|| {
                let m = minor(g, b, cc)?;
                let lhs = partial_dual(&m, &m.translate_edges(g, &a))?;
                let ac = g.complement(&a);
                let b2: EdgeSet = b.intersection(&ac).chain(cc.intersection(&a)).copied().collect();
                let c2: EdgeSet = cc.intersection(&ac).chain(b.intersection(&a)).copied().collect();
                let rhs = minor(&ga, &ga.translate_edges(g, &b2), &ga.translate_edges(g, &c2))?;
                Ok(are_isomorphic(&lhs, &rhs))
            })();
            c.record(ok, || {
                format!("A = {}, B = {}, C = {}", labels(g, &a), labels(g, b), labels(g, cc))
            });
        }
    }
    c
}

fn d_edge_deletions_eulerian(g: &RibbonGraph, _: &mut Ctx) -> Check {
    if !g.is_orientable() {
        return Check::default();
    }
    let ok = (|| {
        let m = build_medial(g)?;
        let dir = straight_ahead_direction(&m, WalkSeed::Forward);
        let d = classify_cd(&m, &dir)?.d_edges();
        let dual = geometric_dual(g);
        Ok(is_eulerian(&delete(g, &d)?)
            && is_eulerian(&delete(&dual, &dual.translate_edges(g, &g.complement(&d)))?))
    })();
    single(ok, "d-edge deletions not Eulerian")
}

fn operator_involutions(g: &RibbonGraph, ctx: &mut Ctx) -> Check {
    let mut c = Check::default();
    for a in ctx.subsets(g) {
        let ok = (|| {
            let dd = partial_dual(&partial_dual(g, &a)?, &a)?;
            let tt = partial_petrial(&partial_petrial(g, &a)?, &a)?;
            Ok(are_isomorphic(&dd, g) && tt == *g)
        })();
        c.record(ok, || format!("A = {}", labels(g, &a)));
    }
    c
}

fn operator_commutation(g: &RibbonGraph, ctx: &mut Ctx) -> Check {
    let mut c = Check::default();
    for (a, b) in ctx.disjoint_pairs(g) {
        let ok = (|| {
            let dt = partial_petrial(&partial_dual(g, &a)?, &b)?;
            let td = partial_dual(&partial_petrial(g, &b)?, &a)?;
            let split = partial_dual(&partial_dual(g, &a)?, &b)?;
            let joint = partial_dual(g, &a.union(&b).copied().collect())?;
            let t_split = partial_petrial(&partial_dual(g, &a)?, &b)?;
            let t_joint = apply_twist_word(
                g,
                &a.iter()
                    .map(|&e| (e, Twist::Delta))
                    .chain(b.iter().map(|&e| (e, Twist::Tau)))
                    .collect(),
            )?;
            Ok(are_isomorphic(&dt, &td) && are_isomorphic(&split, &joint) && are_isomorphic(&t_split, &t_joint))
        })();
        c.record(ok, || format!("A = {}, B = {}", labels(g, &a), labels(g, &b)));
    }
    c
}

fn operator_order_three(g: &RibbonGraph, _: &mut Ctx) -> Check {
    let mut c = Check::default();
    for e in g.edge_ids() {
        let ok = (|| {
            let one = |h: &RibbonGraph, t: Twist| apply_twist_word(h, &TwistWord::from([(e, t)]));
            let mut h = g.clone();
            for _ in 0..3 {
                h = one(&h, Twist::DeltaTau)?;
            }
            let mut inverses = true;
            for t in Twist::ALL {
                inverses &= are_isomorphic(&one(&one(g, t)?, t.inverse())?, g);
            }
            Ok(are_isomorphic(&h, g) && inverses)
        })();
        c.record(ok, || format!("edge {}", g.edge(e).label));
    }
    c
}

fn arrow_round_trip(g: &RibbonGraph, _: &mut Ctx) -> Check {
    single(
        from_arrow_presentation(&to_arrow_presentation(g)).map(|h| h == *g),
        "arrow presentation round trip",
    )
}

fn text_round_trip(g: &RibbonGraph, _: &mut Ctx) -> Check {
    let c = canonical_form(g);
    let text = to_text(&c);
    single(
        parse(&text).map(|h| h == c && to_text(&h) == text && canonical_form(&h) == c),
        "text round trip",
    )
}

fn double_dual(g: &RibbonGraph, _: &mut Ctx) -> Check {
    let d = geometric_dual(g);
    single(
        Ok(are_isomorphic(&geometric_dual(&d), g) && d.vertex_count() == crate::trace_boundary(g).face_count()),
        "double dual",
    )
}

fn double_petrial(g: &RibbonGraph, _: &mut Ctx) -> Check {
    single(Ok(petrial(&petrial(g)) == *g), "double Petrial")
}

fn medial_structure(g: &RibbonGraph, _: &mut Ctx) -> Check {
    if !g.is_orientable() {
        return Check::default();
    }
    let ok = (|| {
        let m = build_medial(g)?;
        let r = m.to_ribbon_graph();
        let isolated = g.vertex_ids().filter(|&v| g.is_isolated(v)).count();
        Ok(r.vertex_count() == g.edge_count()
            && r.edge_count() == 2 * g.edge_count()
            && r.vertex_ids().all(|v| r.degree(v) == 4)
            && r.is_orientable()
            && m.free_loops().len() == isolated
            && euler_characteristic(&r).total == euler_characteristic(g).total - 2 * isolated as i64)
    })();
    single(ok, "medial graph shape")
}

fn straight_ahead_all_crossing(g: &RibbonGraph, _: &mut Ctx) -> Check {
    if !g.is_orientable() {
        return Check::default();
    }
    let ok = (|| {
        let m = build_medial(g)?;
        for seed in [WalkSeed::Forward, WalkSeed::Reverse] {
            let dir = straight_ahead_direction(&m, seed);
            dir.check(&m)?;
            let cls = classify_cd(&m, &dir)?;
            smooth(&m, &dir, &cls)?;
        }
        Ok(true)
    })();
    single(ok, "straight-ahead direction")
}

fn euler_genus(g: &RibbonGraph, _: &mut Ctx) -> Check {
    let r = euler_characteristic(g);
    single(
        Ok(r.per_component.iter().all(|&x| x <= 2 && (!g.is_orientable() || x % 2 == 0))),
        "Euler characteristic out of range",
    )
}

const REGISTRY: &[(&str, Property)] = &[
    ("checkerboard-implies-eulerian", checkerboard_implies_eulerian),
    ("bipartite-implies-even-face", bipartite_implies_even_face),
    ("checkerboard-iff-dual-bipartite", checkerboard_iff_dual_bipartite),
    ("theorem1-endtoend", theorem1_endtoend),
    ("theorem1-reverse-walks", theorem1_reverse_walks),
    ("twisted-dual-word", twisted_dual_word),
    ("theorem2-endtoend", theorem2_endtoend),
    ("theorem2-alternate-seed", theorem2_alternate_seed),
    ("boundary-orientation", boundary_orientation_property),
    ("petrial-orientable-implies-dual-eulerian", petrial_orientable_implies_dual_eulerian),
    ("colourable-partial-dual-minors", colourable_partial_dual_minors),
    ("partial-dual-minor-commute", partial_dual_minor_commute),
    ("bipartite-partial-dual-minors", bipartite_partial_dual_minors),
    ("d-edge-deletions-eulerian", d_edge_deletions_eulerian),
    ("operator-involutions", operator_involutions),
    ("operator-commutation", operator_commutation),
    ("operator-order-three", operator_order_three),
    ("arrow-round-trip", arrow_round_trip),
    ("text-round-trip", text_round_trip),
    ("double-dual", double_dual),
    ("double-petrial", double_petrial),
    ("medial-structure", medial_structure),
    ("straight-ahead-all-crossing", straight_ahead_all_crossing),
    ("euler-genus", euler_genus),
];

pub fn property_names() -> impl Iterator<Item = &'static str> {
    REGISTRY.iter().map(|(n, _)| *n)
}

pub fn run_property_suite(universe: &GraphUniverse, property: &str) -> Result<PropertyReport> {
    run_property_suite_with(universe, property, &SuiteOptions::default())
}

/// Evaluates `property` on every graph of the universe. Results are merged in
/// universe order, so the report does not depend on the worker count.
pub fn run_property_suite_with(universe: &GraphUniverse, property: &str, opts: &SuiteOptions) -> Result<PropertyReport> {
    let &(_, prop) = REGISTRY
        .iter()
        .find(|(n, _)| *n == property)
        .ok_or_else(|| Error::UnknownProperty(property.to_string()))?;
    let start = Instant::now();
    let eval = |(i, g): (usize, &RibbonGraph)| {
        let mut ctx = Ctx {
            exhaustive: g.edge_count() <= opts.subset_limit,
            samples: opts.samples,
            rng: ChaCha8Rng::seed_from_u64(opts.seed ^ (i as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15)),
        };
        (i, prop(g, &mut ctx))
    };
    let results: Vec<(usize, Check)> = match opts.workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Invariant(e.to_string()))?
            .install(|| universe.graphs.par_iter().enumerate().map(eval).collect()),
        None => universe.graphs.par_iter().enumerate().map(eval).collect(),
    };
    let mut report = PropertyReport {
        property: property.to_string(),
        params: universe.params,
        checked: 0,
        failures: Vec::new(),
        elapsed_ms: 0,
    };
    for (i, c) in results {
        report.checked += c.checked;
        let text = to_text(&universe.graphs[i]);
        report.failures.extend(c.failures.into_iter().map(|detail| Failure {
            graph: text.clone(),
            detail,
        }));
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// A graph and edge set for which both `(G - A^c)*` and `(G* - A)*` are
/// bipartite while `G^A` is not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConverseWitness {
    pub graph: RibbonGraph,
    pub set: EdgeSet,
}

pub fn is_converse_witness(g: &RibbonGraph, set: &EdgeSet) -> Result<bool> {
    if is_bipartite(&partial_dual(g, set)?) {
        return Ok(false);
    }
    let dual = geometric_dual(g);
    let x = geometric_dual(&delete(g, &g.complement(set))?);
    let y = geometric_dual(&delete(&dual, &dual.translate_edges(g, set))?);
    Ok(is_bipartite(&x) && is_bipartite(&y))
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    pub params: UniverseParams,
    pub graphs_examined: usize,
    pub pairs_examined: usize,
    pub witness: Option<ConverseWitness>,
    pub elapsed_ms: u64,
}

/// Scans graphs in universe order and their edge subsets in binary order,
/// stopping at the first witness.
pub fn search_converse_counterexample(universe: &GraphUniverse) -> Result<SearchReport> {
    let start = Instant::now();
    let mut report = SearchReport {
        params: universe.params,
        graphs_examined: 0,
        pairs_examined: 0,
        witness: None,
        elapsed_ms: 0,
    };
    'outer: for g in universe {
        report.graphs_examined += 1;
        for mask in 0u64..1 << g.edge_count() {
            report.pairs_examined += 1;
            let set = mask_set(mask, g.edge_count());
            if is_converse_witness(g, &set)? {
                report.witness = Some(ConverseWitness { graph: g.clone(), set });
                break 'outer;
            }
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(p: UniverseParams) -> usize {
        enumerate_graphs(p).unwrap().len()
    }

    #[test]
    fn small_universes() {
        let point = UniverseParams {
            max_vertices: Some(1),
            ..UniverseParams::exactly(0)
        };
        assert_eq!(count(point), 1);
        let one_vertex = UniverseParams {
            max_vertices: Some(1),
            ..UniverseParams::exactly(1)
        };
        assert_eq!(count(one_vertex), 2);
        let connected = UniverseParams::exactly(1).connected();
        assert_eq!(count(connected), 3);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_graphs(UniverseParams::up_to(7)),
            Err(Error::TooLarge { requested: 7, cap: 6 })
        ));
    }

    #[test]
    fn unknown_property() {
        let u = enumerate_graphs(UniverseParams::up_to(1)).unwrap();
        assert!(matches!(run_property_suite(&u, "nope"), Err(Error::UnknownProperty(_))));
    }

    #[test]
    fn partition_and_matching_counts() {
        let mut p = Vec::new();
        partitions(6, 6, &mut Vec::new(), &mut p);
        assert_eq!(p.len(), 11);
        let mut m = Vec::new();
        matchings(&mut (0..6).collect(), &mut Vec::new(), &mut m);
        assert_eq!(m.len(), 15);
    }
}
