//! Separating forms showing that any two vertices of `Ω_n` span an edge.
//!
//! For cliques `a ≠ b` the form `F = Σ_{i>j} α_{ijpq} X_{ijpq}` gets weight 2
//! on every cross edge used by neither clique, weight 1 on one marked edge of
//! each clique that the other clique does not use, and 0 elsewhere. Then
//! `F(a) = F(b) = 1` while every other vertex scores at least 2, so
//! `F ≥ 1` supports `Ω_n` exactly along the segment `[a, b]`.
//!
//! Marked edges: with `i*` the first part where `a` and `b` differ and `j*`
//! the first part other than `i*`, clique `a` marks its edge between parts
//! `i*` and `j*`, and so does `b`. Any edge of `a` touching a part where the
//! cliques differ is absent from `b`.

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph2p::{Assignment, Edge, VertexRef};
use crate::limits::Limits;
use crate::omega::{reduced_vertices, CoordIndex};
use crate::polyhedra::{is_face, FaceVerdict, LinearForm};
use crate::rational::{self, Rational};

/// `α_{ijpq}` for `i > j`: weight of the edge between the `p`-th vertex of
/// part `i` and the `q`-th vertex of part `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AlphaEntry {
    pub i: usize,
    pub j: usize,
    pub p: u8,
    pub q: u8,
    pub w: u8,
}

impl AlphaEntry {
    pub fn edge(&self) -> Result<Edge> {
        Edge::new(
            VertexRef::new(self.i, self.p)?,
            VertexRef::new(self.j, self.q)?,
        )
    }

    pub fn coord(&self) -> CoordIndex {
        CoordIndex::new(self.i, self.j, self.p, self.q)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCertificate {
    pub n: usize,
    pub a: Assignment,
    pub b: Assignment,
    pub marked_a: Edge,
    pub marked_b: Edge,
    /// Every `(i > j, p, q)` in lexicographic order, zeros included.
    pub alpha: Vec<AlphaEntry>,
    pub f_a: Rational,
    pub f_b: Rational,
    /// Minimum of `F` over the other `2^n − 2` vertices.
    pub min_other: Rational,
}

fn alpha_index(i: usize, j: usize, p: u8, q: u8) -> usize {
    // i > j ≥ 1: pairs before row i number (i-1)(i-2)/2
    let pair = (i - 1) * (i - 2) / 2 + (j - 1);
    pair * 4 + (p as usize - 1) * 2 + (q as usize - 1)
}

fn edge_entry(e: &Edge) -> (usize, usize, u8, u8) {
    let (lo, hi) = (e.lo(), e.hi());
    (hi.part, lo.part, hi.pos, lo.pos)
}

fn marked_edge(x: &Assignment, i_star: usize, j_star: usize) -> Edge {
    Edge::new(x.vertex(i_star), x.vertex(j_star)).expect("distinct parts")
}

/// Value of `Σ α X` at the vertex of `z`.
fn evaluate(alpha: &[AlphaEntry], z: &Assignment) -> u32 {
    alpha
        .iter()
        .filter(|e| z.get(e.i) == e.p && z.get(e.j) == e.q)
        .map(|e| e.w as u32)
        .sum()
}

/// Builds the separating form for the pair and verifies it on every vertex.
pub fn edge_certificate(
    n: usize,
    a: &Assignment,
    b: &Assignment,
    limits: &Limits,
) -> Result<EdgeCertificate> {
    if n < 2 {
        return Err(Error::invalid("edge certificates need n ≥ 2"));
    }
    limits.check_bruteforce(n)?;
    a.check_len(n)?;
    b.check_len(n)?;
    if a == b {
        return Err(Error::invalid(
            "edge certificate needs two distinct vertices",
        ));
    }

    let i_star = (1..=n).find(|&i| a.get(i) != b.get(i)).expect("a ≠ b");
    let j_star = if i_star == 1 { 2 } else { 1 };
    let marked_a = marked_edge(a, i_star, j_star);
    let marked_b = marked_edge(b, i_star, j_star);

    let mut alpha = Vec::with_capacity(2 * n * (n - 1));
    for i in 2..=n {
        for j in 1..i {
            for p in [1u8, 2] {
                for q in [1u8, 2] {
                    let in_a = a.get(i) == p && a.get(j) == q;
                    let in_b = b.get(i) == p && b.get(j) == q;
                    let w = if !in_a && !in_b { 2 } else { 0 };
                    alpha.push(AlphaEntry { i, j, p, q, w });
                }
            }
        }
    }
    for e in [&marked_a, &marked_b] {
        let (i, j, p, q) = edge_entry(e);
        alpha[alpha_index(i, j, p, q)].w = 1;
    }

    let mut min_other: Option<u32> = None;
    for z in Assignment::all(n) {
        if &z == a || &z == b {
            continue;
        }
        let v = evaluate(&alpha, &z);
        min_other = Some(min_other.map_or(v, |m| m.min(v)));
    }
    let cert = EdgeCertificate {
        n,
        a: a.clone(),
        b: b.clone(),
        marked_a,
        marked_b,
        f_a: Rational::from_integer(evaluate(&alpha, a).into()),
        f_b: Rational::from_integer(evaluate(&alpha, b).into()),
        min_other: Rational::from_integer(min_other.unwrap_or(u32::MAX).into()),
        alpha,
    };
    if !verify_certificate(&cert) {
        return Err(Error::Verification(format!(
            "separating form for {a} / {b} fails: F(a) = {}, F(b) = {}, min other = {}",
            cert.f_a, cert.f_b, cert.min_other
        )));
    }
    Ok(cert)
}

/// Recomputes `F` from `alpha` on every vertex. True iff `alpha` is a valid
/// weight table, `F(a) = F(b) = 1` and `F ≥ 2` on every other vertex.
pub fn verify_certificate(c: &EdgeCertificate) -> bool {
    let n = c.n;
    if c.a.n() != n || c.b.n() != n || c.a == c.b {
        return false;
    }
    if c.alpha.iter().any(|e| {
        e.j == 0
            || e.i <= e.j
            || e.i > n
            || !(1..=2).contains(&e.p)
            || !(1..=2).contains(&e.q)
            || e.w > 2
    }) {
        return false;
    }
    let weights: Vec<(CoordIndex, Rational)> = c
        .alpha
        .iter()
        .filter(|e| e.w > 0)
        .map(|e| (e.coord(), Rational::from_integer(e.w.into())))
        .collect();
    separates(n, &weights, &c.a, &c.b, &Rational::one(), &rational::int(2))
}

/// Whether `F = Σ w X` takes the value `low` at `a` and `b` and is at least
/// `high` at every other vertex.
pub fn separates(
    n: usize,
    weights: &[(CoordIndex, Rational)],
    a: &Assignment,
    b: &Assignment,
    low: &Rational,
    high: &Rational,
) -> bool {
    let value = |z: &Assignment| -> Rational {
        weights
            .iter()
            .filter(|(c, _)| z.get(c.i) == c.p && z.get(c.j) == c.q)
            .map(|(_, w)| w)
            .sum()
    };
    if &value(a) != low || &value(b) != low {
        return false;
    }
    Assignment::all(n)
        .filter(|z| z != a && z != b)
        .all(|z| &value(&z) >= high)
}

impl EdgeCertificate {
    /// `F ≥ 1` as a form on the full `4n²` coordinates.
    pub fn linear_form(&self) -> LinearForm {
        let mut coeffs = vec![Rational::zero(); 4 * self.n * self.n];
        for e in &self.alpha {
            coeffs[e.coord().flat(self.n)] = Rational::from_integer(e.w.into());
        }
        LinearForm::new(coeffs, Rational::one())
    }

    pub fn to_json(&self) -> CertificateJson {
        CertificateJson {
            n: self.n,
            a: self.a.clone(),
            b: self.b.clone(),
            marked: [self.marked_a, self.marked_b]
                .iter()
                .map(|e| [e.lo(), e.hi()])
                .collect(),
            alpha: self.alpha.clone(),
            f_a: rational::format(&self.f_a),
            f_b: rational::format(&self.f_b),
            min_other: rational::format(&self.min_other),
        }
    }

    pub fn from_json(j: &CertificateJson) -> Result<Self> {
        if j.marked.len() != 2 {
            return Err(Error::Parse("a certificate marks exactly two edges".into()));
        }
        let edge = |k: usize| Edge::new(j.marked[k][0], j.marked[k][1]);
        Ok(EdgeCertificate {
            n: j.n,
            a: j.a.clone(),
            b: j.b.clone(),
            marked_a: edge(0)?,
            marked_b: edge(1)?,
            alpha: j.alpha.clone(),
            f_a: rational::parse(&j.f_a)?,
            f_b: rational::parse(&j.f_b)?,
            min_other: rational::parse(&j.min_other)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub n: usize,
    pub a: Assignment,
    pub b: Assignment,
    pub marked: Vec<[VertexRef; 2]>,
    pub alpha: Vec<AlphaEntry>,
    #[serde(rename = "F_a")]
    pub f_a: String,
    #[serde(rename = "F_b")]
    pub f_b: String,
    pub min_other: String,
}

/// All unordered pairs `(a, b)` with `a` before `b` lexicographically.
pub fn vertex_pairs(n: usize) -> Vec<(u64, u64)> {
    let m = 1u64 << n;
    (0..m)
        .flat_map(|x| (x + 1..m).map(move |y| (x, y)))
        .collect()
}

/// Certificates for every vertex pair, in pair order. Runs on the current
/// rayon pool; the result does not depend on the pool size.
pub fn certify_all_pairs(n: usize, limits: &Limits) -> Result<Vec<EdgeCertificate>> {
    limits.check_bruteforce(n)?;
    vertex_pairs(n)
        .into_par_iter()
        .map(|(x, y)| {
            edge_certificate(
                n,
                &Assignment::from_index(n, x),
                &Assignment::from_index(n, y),
                limits,
            )
        })
        .collect()
}

/// Number of vertex pairs whose segment is a 1-dimensional face according to
/// the LP face test on the reduced vertex set.
pub fn edges_via_hull(n: usize, limits: &Limits) -> Result<usize> {
    if n < 2 {
        return Err(Error::invalid("Ω_n is defined for n ≥ 2"));
    }
    limits.check_lp_edges(n)?;
    let v = reduced_vertices(n, limits)?;
    let verdicts = vertex_pairs(n)
        .into_par_iter()
        .map(|(x, y)| is_face(&v, &[x as usize, y as usize]))
        .collect::<Result<Vec<_>>>()?;
    Ok(verdicts
        .iter()
        .filter(|f| matches!(f, FaceVerdict::ProperFace { dimension: 1, .. }))
        .count())
}
