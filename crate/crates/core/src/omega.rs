//! Vertices of `Ω_n`, its defining equalities and reduced coordinates.
//!
//! Full coordinates `X_{ijpq}` (`i, j ∈ 1..n`, `p, q ∈ {1,2}`) are stored
//! densely in lexicographic `(i, j, p, q)` order. Reduced coordinates are
//! `y_{ij} = X_{ij11}` for `i ≤ j`, again lexicographic.
//!
//! On the affine hull of `Ω_n` the full point is recovered from `y` by
//!
//! ```text
//! X_{ii11} = y_ii          X_{ii22} = 1 − y_ii       X_{ii12} = X_{ii21} = 0
//! X_{ij11} = y_ij          X_{ij12} = y_ii − y_ij    (i < j)
//! X_{ij21} = y_jj − y_ij   X_{ij22} = 1 − y_ii − y_jj + y_ij
//! X_{jiqp} = X_{ijpq}
//! ```
//!
//! which follows from the four equalities checked by [`check_equalities`].

use std::fmt;

use num_traits::{One, Zero};
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph2p::Assignment;
use crate::limits::Limits;
use crate::polyhedra::{affine_rank_of, LinearForm, VRep};
use crate::rational::{self, Rational};

/// `(i, j, p, q)`, all 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoordIndex {
    pub i: usize,
    pub j: usize,
    pub p: u8,
    pub q: u8,
}

impl CoordIndex {
    pub fn new(i: usize, j: usize, p: u8, q: u8) -> Self {
        CoordIndex { i, j, p, q }
    }

    /// Position in the dense flattening for `n` parts.
    pub fn flat(&self, n: usize) -> usize {
        (((self.i - 1) * n + (self.j - 1)) * 2 + (self.p as usize - 1)) * 2 + (self.q as usize - 1)
    }

    pub fn from_flat(n: usize, k: usize) -> Self {
        let q = (k % 2) as u8 + 1;
        let p = ((k / 2) % 2) as u8 + 1;
        let j = (k / 4) % n + 1;
        let i = k / (4 * n) + 1;
        CoordIndex { i, j, p, q }
    }

    /// The same coordinate under `X_{ijpq} = X_{jiqp}`.
    pub fn transposed(&self) -> Self {
        CoordIndex {
            i: self.j,
            j: self.i,
            p: self.q,
            q: self.p,
        }
    }

    /// All `4n²` indices in storage order.
    pub fn all(n: usize) -> impl Iterator<Item = CoordIndex> {
        (0..4 * n * n).map(move |k| CoordIndex::from_flat(n, k))
    }
}

impl fmt::Display for CoordIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.i < 10 && self.j < 10 {
            write!(f, "X_{{{}{}{}{}}}", self.i, self.j, self.p, self.q)
        } else {
            write!(f, "X_{{{},{},{},{}}}", self.i, self.j, self.p, self.q)
        }
    }
}

/// A point of `Q^{4n²}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OmegaPoint {
    n: usize,
    coords: Vec<Rational>,
}

impl OmegaPoint {
    pub fn new(n: usize, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != 4 * n * n {
            return Err(Error::LengthMismatch {
                expected: 4 * n * n,
                actual: coords.len(),
            });
        }
        Ok(OmegaPoint { n, coords })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn get(&self, i: usize, j: usize, p: u8, q: u8) -> &Rational {
        &self.coords[CoordIndex::new(i, j, p, q).flat(self.n)]
    }

    pub fn set(&mut self, i: usize, j: usize, p: u8, q: u8, value: Rational) {
        let k = CoordIndex::new(i, j, p, q).flat(self.n);
        self.coords[k] = value;
    }

    /// Weighted sum of points; weights need not be convex.
    pub fn combination(points: &[(Rational, &OmegaPoint)]) -> Result<OmegaPoint> {
        let n = points
            .first()
            .ok_or_else(|| Error::invalid("empty combination"))?
            .1
            .n;
        let mut coords = vec![Rational::zero(); 4 * n * n];
        for (w, p) in points {
            if p.n != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    actual: p.n,
                });
            }
            for (c, x) in coords.iter_mut().zip(&p.coords) {
                if !x.is_zero() {
                    *c += w * x;
                }
            }
        }
        Ok(OmegaPoint { n, coords })
    }
}

/// `y_{ij}` for `1 ≤ i ≤ j ≤ n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedPoint {
    n: usize,
    y: Vec<Rational>,
}

pub fn reduced_dim(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Position of `y_{ij}` (`i ≤ j`) in the reduced vector.
pub fn reduced_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i <= j && j <= n);
    // rows 1..i-1 hold n, n-1, ... entries
    (i - 1) * (2 * n + 2 - i) / 2 + (j - i)
}

/// `(i, j)` pairs in reduced storage order.
pub fn reduced_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |i| (i..=n).map(move |j| (i, j)))
}

impl ReducedPoint {
    pub fn new(n: usize, y: Vec<Rational>) -> Result<Self> {
        if y.len() != reduced_dim(n) {
            return Err(Error::LengthMismatch {
                expected: reduced_dim(n),
                actual: y.len(),
            });
        }
        Ok(ReducedPoint { n, y })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Rational] {
        &self.y
    }

    /// `y_{ij}` with the pair in either order.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        &self.y[reduced_index(self.n, a, b)]
    }
}

/// On-disk form: `{"n": 2, "reduced": {"1,1": "1", "1,2": "1/2", ...}}`.
impl Serialize for ReducedPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Entries<'a>(&'a ReducedPoint);
        impl Serialize for Entries<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.y.len()))?;
                for ((i, j), v) in reduced_pairs(self.0.n).zip(&self.0.y) {
                    m.serialize_entry(&format!("{i},{j}"), &rational::format(v))?;
                }
                m.end()
            }
        }
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("n", &self.n)?;
        m.serialize_entry("reduced", &Entries(self))?;
        m.end()
    }
}

impl<'de> Deserialize<'de> for ReducedPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            reduced: RawMap,
        }
        struct RawMap(Vec<(String, String)>);
        impl<'de> Deserialize<'de> for RawMap {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                struct V;
                impl<'de> Visitor<'de> for V {
                    type Value = RawMap;
                    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                        f.write_str("a map from \"i,j\" to rational strings")
                    }
                    fn visit_map<A: MapAccess<'de>>(
                        self,
                        mut a: A,
                    ) -> std::result::Result<RawMap, A::Error> {
                        let mut v = Vec::new();
                        while let Some(e) = a.next_entry::<String, String>()? {
                            v.push(e);
                        }
                        Ok(RawMap(v))
                    }
                }
                d.deserialize_map(V)
            }
        }

        let raw = Raw::deserialize(d)?;
        let n = raw.n;
        let mut y: Vec<Option<Rational>> = vec![None; reduced_dim(n)];
        for (key, val) in raw.reduced.0 {
            let (i, j) = key
                .split_once(',')
                .and_then(|(a, b)| {
                    Some((
                        a.trim().parse::<usize>().ok()?,
                        b.trim().parse::<usize>().ok()?,
                    ))
                })
                .ok_or_else(|| de::Error::custom(format!("bad reduced key {key:?}")))?;
            if !(1 <= i && i <= j && j <= n) {
                return Err(de::Error::custom(format!(
                    "reduced key {key:?} out of range"
                )));
            }
            let q = rational::parse(&val).map_err(de::Error::custom)?;
            y[reduced_index(n, i, j)] = Some(q);
        }
        let y = y
            .into_iter()
            .enumerate()
            .map(|(k, v)| v.ok_or_else(|| de::Error::custom(format!("missing reduced entry {k}"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(ReducedPoint { n, y })
    }
}

/// `X_{ijpq} = [p = a(i)][q = a(j)]`.
pub fn vertex_from_assignment(n: usize, a: &Assignment) -> Result<OmegaPoint> {
    a.check_len(n)?;
    let coords = CoordIndex::all(n)
        .map(|c| {
            if a.get(c.i) == c.p && a.get(c.j) == c.q {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect();
    Ok(OmegaPoint { n, coords })
}

/// The `2^n` vertices, in lexicographic order of their assignments.
pub fn all_vertices(n: usize, limits: &Limits) -> Result<Vec<OmegaPoint>> {
    limits.check_bruteforce(n)?;
    Assignment::all(n)
        .map(|a| vertex_from_assignment(n, &a))
        .collect()
}

/// The four families of equalities satisfied by every point of `Ω_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Equality {
    /// `X_{ijpq} = X_{jiqp}`
    Symmetry,
    /// `X_{ii11} + X_{ii22} = 1`
    DiagonalSum,
    /// `X_{ii12} = 0`
    DiagonalOff,
    /// `X_{ijp1} + X_{ijp2} = X_{iipp}`
    Marginal,
}

impl Equality {
    pub const ALL: [Equality; 4] = [
        Equality::Symmetry,
        Equality::DiagonalSum,
        Equality::DiagonalOff,
        Equality::Marginal,
    ];

    pub fn number(&self) -> usize {
        match self {
            Equality::Symmetry => 1,
            Equality::DiagonalSum => 2,
            Equality::DiagonalOff => 3,
            Equality::Marginal => 4,
        }
    }

    pub fn describe(&self) -> &'static str {
        match self {
            Equality::Symmetry => "X_ijpq = X_jiqp",
            Equality::DiagonalSum => "X_ii11 + X_ii22 = 1",
            Equality::DiagonalOff => "X_ii12 = 0",
            Equality::Marginal => "X_ijp1 + X_ijp2 = X_iipp",
        }
    }

    /// Number of instances for `n` parts.
    pub fn instances(&self, n: usize) -> usize {
        match self {
            Equality::Symmetry => 4 * n * n,
            Equality::DiagonalSum | Equality::DiagonalOff => n,
            Equality::Marginal => 2 * n * n,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub equality: Equality,
    /// Indices of the instance; unused positions are zero.
    pub index: CoordIndex,
    /// Left side minus right side.
    pub residual: Rational,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EqualityReport {
    pub violations: Vec<Violation>,
}

impl EqualityReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn count(&self, e: Equality) -> usize {
        self.violations.iter().filter(|v| v.equality == e).count()
    }
}

pub fn check_equalities(x: &OmegaPoint) -> EqualityReport {
    let n = x.n;
    let mut violations = Vec::new();
    let mut push = |equality, index, residual: Rational| {
        if !residual.is_zero() {
            violations.push(Violation {
                equality,
                index,
                residual,
            });
        }
    };
    for c in CoordIndex::all(n) {
        let r = x.get(c.i, c.j, c.p, c.q) - x.get(c.j, c.i, c.q, c.p);
        push(Equality::Symmetry, c, r);
    }
    for i in 1..=n {
        let r = x.get(i, i, 1, 1) + x.get(i, i, 2, 2) - Rational::one();
        push(Equality::DiagonalSum, CoordIndex::new(i, i, 0, 0), r);
    }
    for i in 1..=n {
        push(
            Equality::DiagonalOff,
            CoordIndex::new(i, i, 1, 2),
            x.get(i, i, 1, 2).clone(),
        );
    }
    for i in 1..=n {
        for j in 1..=n {
            for p in [1u8, 2] {
                let r = x.get(i, j, p, 1) + x.get(i, j, p, 2) - x.get(i, i, p, p);
                push(Equality::Marginal, CoordIndex::new(i, j, p, 0), r);
            }
        }
    }
    EqualityReport { violations }
}

/// `y_{ij} = X_{ij11}`; only faithful on the affine hull, so points that
/// violate an equality are rejected.
pub fn reduce(x: &OmegaPoint) -> Result<ReducedPoint> {
    let report = check_equalities(x);
    if let Some(v) = report.violations.first() {
        return Err(Error::invalid(format!(
            "point violates equality ({}) at {:?} with residual {}; {} violations total",
            v.equality.number(),
            v.index,
            v.residual,
            report.violations.len()
        )));
    }
    Ok(reduce_unchecked(x))
}

fn reduce_unchecked(x: &OmegaPoint) -> ReducedPoint {
    let y = reduced_pairs(x.n)
        .map(|(i, j)| x.get(i, j, 1, 1).clone())
        .collect();
    ReducedPoint { n: x.n, y }
}

/// Rebuilds the full point from reduced coordinates. Total; membership in
/// `Ω_n` is not checked.
pub fn lift(y: &ReducedPoint) -> OmegaPoint {
    let n = y.n;
    let one = Rational::one();
    let mut x = OmegaPoint {
        n,
        coords: vec![Rational::zero(); 4 * n * n],
    };
    for i in 1..=n {
        let yii = y.get(i, i);
        x.set(i, i, 1, 1, yii.clone());
        x.set(i, i, 2, 2, &one - yii);
        for j in i + 1..=n {
            let yjj = y.get(j, j);
            let yij = y.get(i, j);
            let vals = [
                (1, 1, yij.clone()),
                (1, 2, yii - yij),
                (2, 1, yjj - yij),
                (2, 2, &one - yii - yjj + yij),
            ];
            for (p, q, v) in vals {
                x.set(j, i, q, p, v.clone());
                x.set(i, j, p, q, v);
            }
        }
    }
    x
}

/// The vertices in reduced coordinates as a point set of `Q^{n(n+1)/2}`.
pub fn reduced_vertices(n: usize, limits: &Limits) -> Result<VRep> {
    let pts = all_vertices(n, limits)?
        .iter()
        .map(|v| reduce_unchecked(v).y)
        .collect();
    VRep::new(reduced_dim(n), pts)
}

/// The vertices in full coordinates as a point set of `Q^{4n²}`.
pub fn full_vertices(n: usize, limits: &Limits) -> Result<VRep> {
    let pts = all_vertices(n, limits)?
        .into_iter()
        .map(|v| v.coords)
        .collect();
    VRep::new(4 * n * n, pts)
}

/// Rewrites a form on full coordinates as the equivalent form on reduced
/// coordinates, by substituting [`lift`]. Both agree on the affine hull.
pub fn reduce_form(n: usize, form: &LinearForm) -> Result<LinearForm> {
    if form.dim() != 4 * n * n {
        return Err(Error::LengthMismatch {
            expected: 4 * n * n,
            actual: form.dim(),
        });
    }
    let dim = reduced_dim(n);
    let origin = lift(&ReducedPoint {
        n,
        y: vec![Rational::zero(); dim],
    });
    let base = form.eval(&origin.coords);
    let coeffs = (0..dim)
        .map(|k| {
            let mut y = vec![Rational::zero(); dim];
            y[k] = Rational::one();
            form.eval(&lift(&ReducedPoint { n, y }).coords) - &base
        })
        .collect();
    Ok(LinearForm::new(coeffs, &form.rhs - base))
}

/// Assignments whose vertices are affinely independent and span `Ω_n`:
/// all 2s, then exactly one 1, then exactly two 1s.
pub fn independent_family(n: usize) -> Result<Vec<Assignment>> {
    if n < 2 {
        return Err(Error::invalid("Ω_n is defined for n ≥ 2"));
    }
    let with_ones = |ones: &[usize]| {
        Assignment::new(
            (1..=n)
                .map(|k| if ones.contains(&k) { 1 } else { 2 })
                .collect(),
        )
        .expect("valid entries")
    };
    let mut out = vec![with_ones(&[])];
    out.extend((1..=n).map(|i| with_ones(&[i])));
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(with_ones(&[i, j]));
        }
    }
    Ok(out)
}

/// Exact affine dimension of the vertex set, computed in full coordinates.
pub fn omega_dimension(n: usize, limits: &Limits) -> Result<usize> {
    if n < 2 {
        return Err(Error::invalid("Ω_n is defined for n ≥ 2"));
    }
    let pts: Vec<Vec<Rational>> = all_vertices(n, limits)?
        .into_iter()
        .map(|v| v.coords)
        .collect();
    affine_rank_of(&pts)
}

/// Writes a full-coordinate form as `c X_{ijpq} + … ≥ rhs`, skipping zeros.
pub fn display_form(n: usize, form: &LinearForm, relation: &str) -> String {
    let mut out = String::new();
    for (k, c) in form.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let idx = CoordIndex::from_flat(n, k);
        let neg = c < &Rational::zero();
        let mag = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&rational::format(&mag));
            out.push(' ');
        }
        out.push_str(&idx.to_string());
    }
    if out.is_empty() {
        out.push('0');
    }
    format!("{out} {relation} {}", rational::format(&form.rhs))
}
