//! Constructions that carry isomorphism classes from one kind of structure
//! to another.
//!
//! * [`gamma`]: a finite group `G` becomes a colored digraph with one node
//!   per element and one per ordered triple; for `u ∘ v = w` the triple node
//!   `(u, v, w)` receives a color-1 arc from `u`, a color-2 arc from `v` and
//!   sends a color-3 arc to `w`.
//! * [`incidence`] / [`extended_incidence`]: an undirected graph becomes an
//!   acyclic digraph whose downward reachability order, with `Inf` and `Sup`
//!   forced to be the bounds, is a lattice.
//! * [`dag_to_poset`], [`poset_to_lattice`], [`lattice_to_poset`].

use serde::Serialize;
use thiserror::Error;

use crate::groups::{FiniteGroup, GroupError};
use crate::structures::{
    Arc, ColoredDigraph, FiniteLattice, FinitePoset, LatticeError, PosetError, UndirectedGraph,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("not in the image of gamma: {0}")]
    NotGammaImage(String),
    #[error("digraph has a cycle through {0:?}")]
    CycleDetected(Vec<usize>),
    #[error("bound node {0} out of range")]
    BoundOutOfRange(usize),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

// ------------------------------------------------------------------ gamma

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GammaRole {
    Element(usize),
    Triple(usize, usize, usize),
}

/// Γ(G) together with the role of every node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaGraph {
    digraph: ColoredDigraph,
    group_order: usize,
    pruned: bool,
    roles: Vec<GammaRole>,
}

impl GammaGraph {
    pub fn digraph(&self) -> &ColoredDigraph {
        &self.digraph
    }

    pub fn into_digraph(self) -> ColoredDigraph {
        self.digraph
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn is_pruned(&self) -> bool {
        self.pruned
    }

    pub fn roles(&self) -> &[GammaRole] {
        &self.roles
    }

    /// Node of the triple `(u, v, w)`; in pruned mode only valid triples
    /// have nodes.
    pub fn triple_node(&self, u: usize, v: usize, w: usize) -> Option<usize> {
        let n = self.group_order;
        if u >= n || v >= n || w >= n {
            return None;
        }
        let node = if self.pruned {
            n + u * n + v
        } else {
            n + u * n * n + v * n + w
        };
        (self.roles[node] == GammaRole::Triple(u, v, w)).then_some(node)
    }
}

/// Build Γ(G). Element `a` is node `a`. In faithful mode every ordered
/// triple gets a node (`n + n^3` nodes, invalid triples isolated); in pruned
/// mode only the `n^2` triples with `u ∘ v = w` do.
pub fn gamma(g: &FiniteGroup, pruned: bool) -> GammaGraph {
    let n = g.order();
    let mut roles: Vec<GammaRole> = (0..n).map(GammaRole::Element).collect();
    if pruned {
        for u in 0..n {
            for v in 0..n {
                roles.push(GammaRole::Triple(u, v, g.op(u, v)));
            }
        }
    } else {
        for u in 0..n {
            for v in 0..n {
                for w in 0..n {
                    roles.push(GammaRole::Triple(u, v, w));
                }
            }
        }
    }
    let mut arcs = Vec::with_capacity(3 * n * n);
    for (t, role) in roles.iter().enumerate() {
        if let GammaRole::Triple(u, v, w) = *role {
            if g.op(u, v) == w {
                arcs.push(Arc::new(u, t, 1));
                arcs.push(Arc::new(v, t, 2));
                arcs.push(Arc::new(t, w, 3));
            }
        }
    }
    let labels = roles
        .iter()
        .map(|r| match *r {
            GammaRole::Element(a) => format!("{}", a + 1),
            GammaRole::Triple(u, v, w) => format!("({},{},{})", u + 1, v + 1, w + 1),
        })
        .collect();
    let digraph = ColoredDigraph::new(roles.len(), arcs)
        .and_then(|d| d.with_labels(labels))
        .expect("gamma arcs are distinct");
    GammaGraph {
        digraph,
        group_order: n,
        pruned,
        roles,
    }
}

/// Recover a group from a digraph isomorphic to some Γ(G), faithful or
/// pruned. Element nodes are those of out-degree at least 2; they are
/// numbered in increasing node order.
pub fn gamma_inverse(d: &ColoredDigraph) -> Result<FiniteGroup, ReductionError> {
    let bad = |msg: String| ReductionError::NotGammaImage(msg);
    let total = d.node_count();
    let out = d.out_degrees();
    let inn = d.in_degrees();
    let elements: Vec<usize> = (0..total).filter(|&v| out[v] >= 2).collect();
    let n = elements.len();
    if n == 0 {
        return Err(bad("no node has out-degree 2n".into()));
    }
    if total != n + n * n * n && total != n + n * n {
        return Err(bad(format!(
            "{total} nodes fits neither n+n^3 nor n+n^2 for n = {n}"
        )));
    }
    if d.arc_count() != 3 * n * n {
        return Err(bad(format!(
            "{} arcs, expected 3n^2 = {}",
            d.arc_count(),
            3 * n * n
        )));
    }
    if let Some(&v) = elements.iter().find(|&&v| out[v] != 2 * n || inn[v] != n) {
        return Err(bad(format!(
            "element node {v} has degree profile ({}, {}), expected ({n}, {})",
            inn[v],
            out[v],
            2 * n
        )));
    }
    let mut element_index = vec![None; total];
    for (i, &v) in elements.iter().enumerate() {
        element_index[v] = Some(i);
    }
    // per non-element node: (color-1 source, color-2 source, color-3 target)
    let mut slots: Vec<[Option<usize>; 3]> = vec![[None; 3]; total];
    for a in d.arcs() {
        let (node, slot, other) = match a.color {
            1 | 2 => (a.dst, a.color as usize - 1, a.src),
            3 => (a.src, 2, a.dst),
            c => return Err(bad(format!("unexpected arc color {c}"))),
        };
        if element_index[node].is_some() {
            return Err(bad(format!(
                "arc of color {} at element node {node}",
                a.color
            )));
        }
        let Some(e) = element_index[other] else {
            return Err(bad(format!(
                "arc between non-element nodes {} and {}",
                a.src, a.dst
            )));
        };
        if slots[node][slot].replace(e).is_some() {
            return Err(bad(format!(
                "node {node} has two arcs of color {}",
                a.color
            )));
        }
    }
    let mut table = vec![vec![None; n]; n];
    for (t, s) in slots.iter().enumerate() {
        match *s {
            [None, None, None] => {}
            [Some(u), Some(v), Some(w)] => {
                if table[u][v].replace(w).is_some() {
                    return Err(bad(format!("two triples for the product of {u} and {v}")));
                }
            }
            _ => return Err(bad(format!("triple node {t} is missing an arc"))),
        }
    }
    let table = table
        .into_iter()
        .map(|row| row.into_iter().collect::<Option<Vec<usize>>>())
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| bad("some product is undefined".into()))?;
    FiniteGroup::from_table(table).map_err(|e: GroupError| bad(format!("group axioms fail: {e}")))
}

// -------------------------------------------------------------- incidence

/// Vertices `0..n`, then one pair node per edge (in edge order) with arcs to
/// both endpoints.
pub fn incidence(g: &UndirectedGraph) -> ColoredDigraph {
    let n = g.vertex_count();
    let arcs = g
        .edges()
        .iter()
        .enumerate()
        .flat_map(|(e, &(u, v))| [Arc::new(n + e, u, 1), Arc::new(n + e, v, 1)]);
    let labels = (0..n)
        .map(|i| format!("v{}", i + 1))
        .chain(
            g.edges()
                .iter()
                .map(|&(u, v)| format!("p{{{},{}}}", u + 1, v + 1)),
        )
        .collect();
    ColoredDigraph::new(n + g.edge_count(), arcs)
        .and_then(|d| d.with_labels(labels))
        .expect("incidence arcs are distinct")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum IncidenceRole {
    /// Vertex node `v_i`.
    Vertex(usize),
    /// Atom `a_i` directly below `v_i`.
    Atom(usize),
    /// Pair node of edge `{i, j}`.
    Pair(usize, usize),
    /// Node `b` directly above the pair node of edge `{i, j}`.
    Coatom(usize, usize),
    Inf,
    Sup,
}

impl IncidenceRole {
    pub fn label(&self) -> String {
        match *self {
            IncidenceRole::Vertex(i) => format!("v{}", i + 1),
            IncidenceRole::Atom(i) => format!("a{}", i + 1),
            IncidenceRole::Pair(i, j) => format!("p{{{},{}}}", i + 1, j + 1),
            IncidenceRole::Coatom(i, j) => format!("b{{{},{}}}", i + 1, j + 1),
            IncidenceRole::Inf => "Inf".into(),
            IncidenceRole::Sup => "Sup".into(),
        }
    }
}

/// The extended incidence digraph of a graph with `n` vertices and `m`
/// edges. Node layout: `v_i` at `i`, `a_i` at `n + i`, pair nodes at
/// `2n + e`, `b` nodes at `2n + m + e`, then `Inf` and `Sup`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedIncidenceGraph {
    digraph: ColoredDigraph,
    roles: Vec<IncidenceRole>,
    inf: usize,
    sup: usize,
}

#[derive(Serialize)]
struct RoleEntry {
    node: usize,
    role: String,
}

impl ExtendedIncidenceGraph {
    pub fn digraph(&self) -> &ColoredDigraph {
        &self.digraph
    }

    pub fn roles(&self) -> &[IncidenceRole] {
        &self.roles
    }

    pub fn inf(&self) -> usize {
        self.inf
    }

    pub fn sup(&self) -> usize {
        self.sup
    }

    pub fn node_of(&self, role: IncidenceRole) -> Option<usize> {
        self.roles.iter().position(|&r| r == role)
    }

    /// Downward reachability with `Inf` and `Sup` forced as the bounds.
    pub fn poset(&self) -> FinitePoset {
        dag_to_poset(&self.digraph, Some((self.inf, self.sup)))
            .expect("extended incidence digraphs are acyclic with valid bounds")
    }

    pub fn lattice(&self) -> Result<FiniteLattice, LatticeError> {
        poset_to_lattice(&self.poset())
    }

    /// JSON list of `{ "node": <1-based>, "role": <label> }`.
    pub fn role_map_json(&self) -> String {
        let entries: Vec<RoleEntry> = self
            .roles
            .iter()
            .enumerate()
            .map(|(i, r)| RoleEntry {
                node: i + 1,
                role: r.label(),
            })
            .collect();
        serde_json::to_string_pretty(&entries).expect("role map serializes")
    }
}

/// Pair and `b` nodes exist only for actual edges.
pub fn extended_incidence(g: &UndirectedGraph) -> ExtendedIncidenceGraph {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut roles: Vec<IncidenceRole> = Vec::with_capacity(2 * n + 2 * m + 2);
    roles.extend((0..n).map(IncidenceRole::Vertex));
    roles.extend((0..n).map(IncidenceRole::Atom));
    roles.extend(g.edges().iter().map(|&(i, j)| IncidenceRole::Pair(i, j)));
    roles.extend(g.edges().iter().map(|&(i, j)| IncidenceRole::Coatom(i, j)));
    let inf = roles.len();
    roles.push(IncidenceRole::Inf);
    let sup = roles.len();
    roles.push(IncidenceRole::Sup);

    let pair = |e: usize| 2 * n + e;
    let coatom = |e: usize| 2 * n + m + e;
    let mut arcs = Vec::with_capacity(3 * m + 2 * n);
    for (e, &(i, j)) in g.edges().iter().enumerate() {
        arcs.push(Arc::new(pair(e), i, 1));
        arcs.push(Arc::new(pair(e), j, 1));
        arcs.push(Arc::new(sup, coatom(e), 1));
        arcs.push(Arc::new(coatom(e), pair(e), 1));
    }
    for i in 0..n {
        arcs.push(Arc::new(i, n + i, 1));
        arcs.push(Arc::new(n + i, inf, 1));
    }
    let labels = roles.iter().map(IncidenceRole::label).collect();
    let digraph = ColoredDigraph::new(roles.len(), arcs)
        .and_then(|d| d.with_labels(labels))
        .expect("extended incidence arcs are distinct");
    ExtendedIncidenceGraph {
        digraph,
        roles,
        inf,
        sup,
    }
}

/// Lattice of the extended incidence digraph of `g`.
pub fn extended_incidence_lattice(g: &UndirectedGraph) -> Result<FiniteLattice, LatticeError> {
    extended_incidence(g).lattice()
}

// ---------------------------------------------------------------- orders

/// `x <= y` iff `y` reaches `x` along arcs. With `force_bounds =
/// Some((bottom, top))` the order is additionally closed under
/// `bottom <= x <= top` for every `x`.
pub fn dag_to_poset(
    d: &ColoredDigraph,
    force_bounds: Option<(usize, usize)>,
) -> Result<FinitePoset, ReductionError> {
    if let Some(cycle) = d.find_cycle() {
        return Err(ReductionError::CycleDetected(cycle));
    }
    let n = d.node_count();
    let succ = d.successors();
    let mut leq = vec![false; n * n];
    let mut stack = Vec::new();
    for y in 0..n {
        leq[y * n + y] = true;
        stack.push(y);
        while let Some(v) = stack.pop() {
            for &x in &succ[v] {
                if !leq[x * n + y] {
                    leq[x * n + y] = true;
                    stack.push(x);
                }
            }
        }
    }
    if let Some((bottom, top)) = force_bounds {
        for b in [bottom, top] {
            if b >= n {
                return Err(ReductionError::BoundOutOfRange(b));
            }
        }
        let mut covers: Vec<(usize, usize)> = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| leq[x * n + y])
            .collect();
        covers.extend((0..n).map(|x| (bottom, x)));
        covers.extend((0..n).map(|x| (x, top)));
        return Ok(FinitePoset::from_covers(n, &covers)?);
    }
    Ok(FinitePoset::from_table(
        &leq.chunks(n.max(1))
            .take(n)
            .map(|r| r.to_vec())
            .collect::<Vec<_>>(),
    )?)
}

/// Meet and join tables from infima and suprema; fails with the least pair
/// lacking one.
pub fn poset_to_lattice(p: &FinitePoset) -> Result<FiniteLattice, LatticeError> {
    FiniteLattice::from_poset(p)
}

/// `x <= y` iff `meet(x, y) = x`.
pub fn lattice_to_poset(l: &FiniteLattice) -> FinitePoset {
    l.to_poset()
}
