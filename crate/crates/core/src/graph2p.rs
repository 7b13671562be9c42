//! Multipartite graphs with exactly two vertices per part.
//!
//! An n-clique in such a graph picks one vertex per part, so it is the same
//! thing as an [`Assignment`] `ρ: {1..n} → {1,2}`. Cliques are the models of
//! a 2CNF formula with one variable per part, which gives a linear time
//! clique finder through 2SAT.
//!
//! Convention used everywhere in the crate: variable `x_i` is true iff
//! `ρ(i) = 1`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;

/// The `pos`-th vertex of part `part`, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "[usize; 2]", into = "[usize; 2]")]
pub struct VertexRef {
    pub part: usize,
    pub pos: u8,
}

impl VertexRef {
    pub fn new(part: usize, pos: u8) -> Result<Self> {
        if part == 0 {
            return Err(Error::invalid("parts are numbered from 1"));
        }
        if pos != 1 && pos != 2 {
            return Err(Error::invalid(format!(
                "vertex position {pos} is not 1 or 2"
            )));
        }
        Ok(VertexRef { part, pos })
    }
}

impl TryFrom<[usize; 2]> for VertexRef {
    type Error = Error;

    fn try_from([part, pos]: [usize; 2]) -> Result<Self> {
        let pos = u8::try_from(pos).map_err(|_| Error::invalid(format!("bad position {pos}")))?;
        VertexRef::new(part, pos)
    }
}

impl From<VertexRef> for [usize; 2] {
    fn from(v: VertexRef) -> Self {
        [v.part, v.pos as usize]
    }
}

impl fmt::Display for VertexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.part, self.pos)
    }
}

/// Unordered cross-part edge, stored with the lower part first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(VertexRef, VertexRef);

impl Edge {
    pub fn new(u: VertexRef, v: VertexRef) -> Result<Self> {
        if u.part == v.part {
            return Err(Error::invalid(format!(
                "edge {u}-{v} joins two vertices of the same part"
            )));
        }
        Ok(if u.part < v.part {
            Edge(u, v)
        } else {
            Edge(v, u)
        })
    }

    pub fn lo(&self) -> VertexRef {
        self.0
    }

    pub fn hi(&self) -> VertexRef {
        self.1
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// A choice of one vertex per part: `choice[i-1] = ρ(i) ∈ {1,2}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct Assignment {
    choice: Vec<u8>,
}

impl Assignment {
    pub fn new(choice: Vec<u8>) -> Result<Self> {
        if let Some(bad) = choice.iter().find(|&&c| c != 1 && c != 2) {
            return Err(Error::invalid(format!(
                "assignment entry {bad} is not 1 or 2"
            )));
        }
        Ok(Assignment { choice })
    }

    /// The `k`-th assignment in lexicographic order, `0 ≤ k < 2^n`.
    pub fn from_index(n: usize, k: u64) -> Self {
        let choice = (0..n).map(|i| 1 + ((k >> (n - 1 - i)) & 1) as u8).collect();
        Assignment { choice }
    }

    /// Inverse of [`Assignment::from_index`].
    pub fn index(&self) -> u64 {
        self.choice
            .iter()
            .fold(0u64, |acc, &c| (acc << 1) | (c as u64 - 1))
    }

    /// All `2^n` assignments in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Assignment> {
        (0..1u64 << n).map(move |k| Assignment::from_index(n, k))
    }

    pub fn n(&self) -> usize {
        self.choice.len()
    }

    pub fn choice(&self) -> &[u8] {
        &self.choice
    }

    /// `ρ(part)` for a 1-based part.
    pub fn get(&self, part: usize) -> u8 {
        self.choice[part - 1]
    }

    /// The clique vertex chosen in `part`.
    pub fn vertex(&self, part: usize) -> VertexRef {
        VertexRef {
            part,
            pos: self.get(part),
        }
    }

    /// Whether `e` is one of the clique's own edges.
    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.get(e.0.part) == e.0.pos && self.get(e.1.part) == e.1.pos
    }

    pub fn complement(&self) -> Assignment {
        Assignment {
            choice: self.choice.iter().map(|&c| 3 - c).collect(),
        }
    }

    pub fn check_len(&self, n: usize) -> Result<()> {
        if self.n() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: self.n(),
            });
        }
        Ok(())
    }
}

impl TryFrom<Vec<u8>> for Assignment {
    type Error = Error;

    fn try_from(v: Vec<u8>) -> Result<Self> {
        Assignment::new(v)
    }
}

impl From<Assignment> for Vec<u8> {
    fn from(a: Assignment) -> Self {
        a.choice
    }
}

/// Comma separated positions, e.g. `1,2,1`.
impl FromStr for Assignment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let choice = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u8>()
                    .map_err(|_| Error::Parse(format!("bad assignment entry {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Assignment::new(choice)
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.choice.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// An n-partite graph with two vertices in each part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph2P {
    n: usize,
    edges: BTreeSet<Edge>,
}

impl Graph2P {
    /// The graph on `n` parts without any edge.
    pub fn empty(n: usize) -> Self {
        Graph2P {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter()
    }

    fn check_vertex(&self, v: VertexRef) -> Result<()> {
        if v.part > self.n {
            return Err(Error::invalid(format!(
                "vertex {v} outside {} parts",
                self.n
            )));
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: VertexRef, v: VertexRef) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.edges.insert(Edge::new(u, v)?))
    }

    pub fn remove_edge(&mut self, u: VertexRef, v: VertexRef) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.edges.remove(&Edge::new(u, v)?))
    }

    pub fn has_edge(&self, u: VertexRef, v: VertexRef) -> bool {
        Edge::new(u, v).is_ok_and(|e| self.edges.contains(&e))
    }

    /// Every cross-part vertex pair, in canonical order.
    pub fn all_cross_pairs(n: usize) -> impl Iterator<Item = Edge> {
        (1..=n).flat_map(move |i| {
            (i + 1..=n).flat_map(move |j| {
                [1u8, 2].into_iter().flat_map(move |p| {
                    [1u8, 2].into_iter().map(move |q| {
                        Edge(VertexRef { part: i, pos: p }, VertexRef { part: j, pos: q })
                    })
                })
            })
        })
    }

    /// Cross-part pairs that are not edges, in canonical order.
    pub fn missing_edges(&self) -> Vec<Edge> {
        Self::all_cross_pairs(self.n)
            .filter(|e| !self.edges.contains(e))
            .collect()
    }

    /// The complete graph minus the listed pairs.
    pub fn from_missing_edges(n: usize, missing: &[Edge]) -> Result<Self> {
        let mut g = complete_graph(n)?;
        for e in missing {
            g.remove_edge(e.0, e.1)?;
        }
        Ok(g)
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n,
            missing_edges: self
                .missing_edges()
                .into_iter()
                .map(|e| [e.0, e.1])
                .collect(),
        }
    }

    pub fn from_json(j: &GraphJson) -> Result<Self> {
        let missing = j
            .missing_edges
            .iter()
            .map(|[u, v]| Edge::new(*u, *v))
            .collect::<Result<Vec<_>>>()?;
        Self::from_missing_edges(j.n, &missing)
    }
}

/// On-disk graph form: the complement of the complete graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub missing_edges: Vec<[VertexRef; 2]>,
}

/// The complete n-partite graph with two vertices per part.
pub fn complete_graph(n: usize) -> Result<Graph2P> {
    if n == 0 {
        return Err(Error::invalid("a graph needs at least one part"));
    }
    Ok(Graph2P {
        n,
        edges: Graph2P::all_cross_pairs(n).collect(),
    })
}

pub fn is_clique(g: &Graph2P, a: &Assignment) -> Result<bool> {
    a.check_len(g.n)?;
    Ok(clique_unchecked(g, a))
}

fn clique_unchecked(g: &Graph2P, a: &Assignment) -> bool {
    (1..=g.n).all(|i| (i + 1..=g.n).all(|j| g.has_edge(a.vertex(i), a.vertex(j))))
}

/// All n-cliques of `g` by exhaustive search, lexicographic.
pub fn enumerate_cliques(g: &Graph2P, limits: &Limits) -> Result<Vec<Assignment>> {
    limits.check_bruteforce(g.n)?;
    Ok(Assignment::all(g.n)
        .filter(|a| clique_unchecked(g, a))
        .collect())
}

/// A literal over variables numbered from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal {
            var,
            positive: true,
        }
    }

    pub fn neg(var: usize) -> Self {
        Literal {
            var,
            positive: false,
        }
    }

    /// The literal that is false exactly when part `v.part` chooses `v.pos`.
    pub fn forbidding(v: VertexRef) -> Self {
        // x = true means position 1 is chosen
        Literal {
            var: v.part,
            positive: v.pos == 2,
        }
    }

    pub fn eval(&self, model: &[bool]) -> bool {
        model[self.var - 1] == self.positive
    }

    fn dimacs(&self) -> i64 {
        if self.positive {
            self.var as i64
        } else {
            -(self.var as i64)
        }
    }
}

pub type Clause2 = (Literal, Literal);

/// A CNF with exactly two literals per clause.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cnf2 {
    pub num_vars: usize,
    pub clauses: Vec<Clause2>,
}

impl Cnf2 {
    pub fn new(num_vars: usize, clauses: Vec<Clause2>) -> Result<Self> {
        for (a, b) in &clauses {
            for l in [a, b] {
                if l.var == 0 || l.var > num_vars {
                    return Err(Error::invalid(format!(
                        "literal variable {} outside 1..={num_vars}",
                        l.var
                    )));
                }
            }
        }
        Ok(Cnf2 { num_vars, clauses })
    }

    pub fn satisfied_by(&self, model: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|(a, b)| a.eval(model) || b.eval(model))
    }

    /// Number of satisfying assignments, by exhaustive search.
    pub fn count_models(&self, limits: &Limits) -> Result<u64> {
        limits.check_bruteforce(self.num_vars)?;
        Ok(Assignment::all(self.num_vars)
            .filter(|a| self.satisfied_by(&assignment_to_model(a)))
            .count() as u64)
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for (a, b) in &self.clauses {
            out.push_str(&format!("{} {} 0\n", a.dimacs(), b.dimacs()));
        }
        out
    }

    /// Reads DIMACS text. Comment lines start with `c`; every clause must
    /// have exactly two literals.
    pub fn from_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut lits: Vec<i64> = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            if line.starts_with('p') {
                let parts: Vec<&str> = line.split_whitespace().collect();
                if parts.len() != 4 || parts[1] != "cnf" {
                    return Err(Error::Parse(format!("bad DIMACS header {line:?}")));
                }
                let v = parts[2]
                    .parse()
                    .map_err(|_| Error::Parse(line.to_string()))?;
                let c = parts[3]
                    .parse()
                    .map_err(|_| Error::Parse(line.to_string()))?;
                header = Some((v, c));
                continue;
            }
            if header.is_none() {
                return Err(Error::Parse("clause before DIMACS header".into()));
            }
            for tok in line.split_whitespace() {
                lits.push(
                    tok.parse()
                        .map_err(|_| Error::Parse(format!("bad literal {tok:?}")))?,
                );
            }
        }
        let (num_vars, num_clauses) =
            header.ok_or_else(|| Error::Parse("missing DIMACS header".into()))?;
        let mut clauses = Vec::with_capacity(num_clauses);
        for chunk in lits.split(|&l| l == 0) {
            if chunk.is_empty() {
                continue;
            }
            if chunk.len() != 2 {
                return Err(Error::Parse(format!(
                    "clause {chunk:?} does not have exactly two literals"
                )));
            }
            let lit = |l: i64| Literal {
                var: l.unsigned_abs() as usize,
                positive: l > 0,
            };
            clauses.push((lit(chunk[0]), lit(chunk[1])));
        }
        if clauses.len() != num_clauses {
            return Err(Error::Parse(format!(
                "header announces {num_clauses} clauses, found {}",
                clauses.len()
            )));
        }
        Cnf2::new(num_vars, clauses)
    }
}

pub fn assignment_to_model(a: &Assignment) -> Vec<bool> {
    a.choice().iter().map(|&c| c == 1).collect()
}

pub fn model_to_assignment(model: &[bool]) -> Assignment {
    Assignment {
        choice: model.iter().map(|&x| if x { 1 } else { 2 }).collect(),
    }
}

/// One clause per missing cross-part edge, forbidding both endpoints at once.
/// Duplicate clauses are kept.
pub fn to_2cnf(g: &Graph2P) -> Cnf2 {
    let clauses = g
        .missing_edges()
        .into_iter()
        .map(|e| (Literal::forbidding(e.0), Literal::forbidding(e.1)))
        .collect();
    Cnf2 {
        num_vars: g.n,
        clauses,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoSat {
    Satisfiable(Assignment),
    Unsatisfiable,
}

/// Implication graph plus strongly connected components, linear in the
/// formula size. The model is returned in the `x_i ⇔ ρ(i) = 1` encoding.
pub fn solve_2sat(c: &Cnf2) -> TwoSat {
    let n = c.num_vars;
    // node 2(v-1) is x_v, node 2(v-1)+1 is ¬x_v
    let node = |l: Literal| 2 * (l.var - 1) + usize::from(!l.positive);
    let mut g: DiGraph<(), ()> = DiGraph::with_capacity(2 * n, 2 * c.clauses.len());
    for _ in 0..2 * n {
        g.add_node(());
    }
    for &(a, b) in &c.clauses {
        let na = node(a);
        let nb = node(b);
        g.add_edge(NodeIndex::new(na ^ 1), NodeIndex::new(nb), ());
        g.add_edge(NodeIndex::new(nb ^ 1), NodeIndex::new(na), ());
    }
    // tarjan_scc yields components in reverse topological order
    let mut comp = vec![0usize; 2 * n];
    for (k, scc) in tarjan_scc(&g).into_iter().enumerate() {
        for v in scc {
            comp[v.index()] = k;
        }
    }
    let mut model = Vec::with_capacity(n);
    for v in 0..n {
        let (t, f) = (comp[2 * v], comp[2 * v + 1]);
        if t == f {
            return TwoSat::Unsatisfiable;
        }
        model.push(t < f);
    }
    debug_assert!(c.satisfied_by(&model), "2SAT model violates a clause");
    TwoSat::Satisfiable(model_to_assignment(&model))
}

/// An n-clique of `g` through the 2CNF reduction, or `None`.
pub fn find_clique(g: &Graph2P) -> Option<Assignment> {
    match solve_2sat(&to_2cnf(g)) {
        TwoSat::Satisfiable(a) => {
            debug_assert!(clique_unchecked(g, &a));
            Some(a)
        }
        TwoSat::Unsatisfiable => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(part: usize, pos: u8) -> VertexRef {
        VertexRef::new(part, pos).unwrap()
    }

    fn a(s: &str) -> Assignment {
        s.parse().unwrap()
    }

    #[test]
    fn complete_graph_edge_counts() {
        assert_eq!(complete_graph(3).unwrap().edge_count(), 12);
        assert_eq!(complete_graph(1).unwrap().edge_count(), 0);
        assert_eq!(complete_graph(2).unwrap().edge_count(), 4);
        assert!(complete_graph(0).is_err());
    }

    #[test]
    fn same_part_edges_rejected() {
        let mut g = Graph2P::empty(3);
        assert!(g.add_edge(v(1, 1), v(1, 2)).is_err());
        assert!(g.add_edge(v(1, 1), v(4, 2)).is_err());
        assert!(VertexRef::new(1, 3).is_err());
    }

    #[test]
    fn clique_checks() {
        let mut g = complete_graph(3).unwrap();
        for x in Assignment::all(3) {
            assert!(is_clique(&g, &x).unwrap());
        }
        g.remove_edge(v(1, 1), v(2, 1)).unwrap();
        assert!(!is_clique(&g, &a("1,1,1")).unwrap());
        assert!(is_clique(&g, &a("2,2,2")).unwrap());
        assert!(matches!(
            is_clique(&g, &a("1,1")),
            Err(Error::LengthMismatch {
                expected: 3,
                actual: 2
            })
        ));
    }

    #[test]
    fn enumeration() {
        let lim = Limits::default();
        assert_eq!(
            enumerate_cliques(&complete_graph(2).unwrap(), &lim)
                .unwrap()
                .len(),
            4
        );
        assert_eq!(
            enumerate_cliques(&complete_graph(6).unwrap(), &lim)
                .unwrap()
                .len(),
            64
        );
        let mut g = complete_graph(2).unwrap();
        for p in [1, 2] {
            for q in [1, 2] {
                g.remove_edge(v(1, p), v(2, q)).unwrap();
            }
        }
        assert!(enumerate_cliques(&g, &lim).unwrap().is_empty());
        let small = Limits {
            max_bruteforce: 4,
            ..Limits::default()
        };
        assert!(matches!(
            enumerate_cliques(&complete_graph(5).unwrap(), &small),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let all: Vec<_> =
            enumerate_cliques(&complete_graph(3).unwrap(), &Limits::default()).unwrap();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert_eq!(all[0], a("1,1,1"));
        assert_eq!(all[7], a("2,2,2"));
    }

    #[test]
    fn cnf_of_complete_graph_is_empty() {
        assert!(to_2cnf(&complete_graph(4).unwrap()).clauses.is_empty());
    }

    #[test]
    fn single_missing_edge_clause() {
        let mut g = complete_graph(2).unwrap();
        g.remove_edge(v(1, 1), v(2, 1)).unwrap();
        let c = to_2cnf(&g);
        assert_eq!(c.clauses, vec![(Literal::neg(1), Literal::neg(2))]);
    }

    #[test]
    fn two_sat_basics() {
        let c = Cnf2::new(3, vec![]).unwrap();
        assert!(matches!(solve_2sat(&c), TwoSat::Satisfiable(_)));
        let c = Cnf2::new(
            1,
            vec![
                (Literal::pos(1), Literal::pos(1)),
                (Literal::neg(1), Literal::neg(1)),
            ],
        )
        .unwrap();
        assert_eq!(solve_2sat(&c), TwoSat::Unsatisfiable);
        assert!(Cnf2::new(2, vec![(Literal::pos(3), Literal::pos(1))]).is_err());
    }

    #[test]
    fn find_clique_examples() {
        let g = complete_graph(5).unwrap();
        let c = find_clique(&g).unwrap();
        assert!(is_clique(&g, &c).unwrap());
        assert_eq!(find_clique(&Graph2P::empty(2)), None);
    }

    #[test]
    fn dimacs_round_trip() {
        let mut g = complete_graph(3).unwrap();
        g.remove_edge(v(1, 1), v(2, 2)).unwrap();
        g.remove_edge(v(2, 1), v(3, 1)).unwrap();
        let c = to_2cnf(&g);
        let text = c.to_dimacs();
        assert_eq!(text, "p cnf 3 2\n-1 2 0\n-2 -3 0\n");
        assert_eq!(Cnf2::from_dimacs(&text).unwrap(), c);
        assert!(Cnf2::from_dimacs("p cnf 2 1\n1 2 -1 0\n").is_err());
        assert!(Cnf2::from_dimacs("1 2 0\n").is_err());
    }

    #[test]
    fn graph_json_round_trip() {
        let mut g = complete_graph(3).unwrap();
        g.remove_edge(v(3, 2), v(1, 1)).unwrap();
        let text = serde_json::to_string(&g.to_json()).unwrap();
        assert_eq!(text, r#"{"n":3,"missing_edges":[[[1,1],[3,2]]]}"#);
        let back: GraphJson = serde_json::from_str(&text).unwrap();
        assert_eq!(Graph2P::from_json(&back).unwrap(), g);
        let bad: GraphJson =
            serde_json::from_str(r#"{"n":2,"missing_edges":[[[1,1],[1,2]]]}"#).unwrap();
        assert!(Graph2P::from_json(&bad).is_err());
    }

    #[test]
    fn assignment_parsing_and_index() {
        assert_eq!(a("1,2,1").to_string(), "1,2,1");
        assert!("1,3".parse::<Assignment>().is_err());
        for k in 0..16 {
            assert_eq!(Assignment::from_index(4, k).index(), k);
        }
        assert_eq!(a("1,2").complement(), a("2,1"));
    }
}
