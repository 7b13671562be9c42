//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's linear algebra, hull or LP code.
#![allow(dead_code, clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

/// Plain Gaussian elimination.
pub fn rank(mut m: Vec<Vec<Q>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &m[r][c];
            for k in c..cols {
                let d = &f * &m[r][k];
                m[i][k] -= d;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Rank of the differences to the first point.
pub fn affine_rank(points: &[Vec<Q>]) -> usize {
    let Some(first) = points.first() else {
        return 0;
    };
    rank(
        points[1..]
            .iter()
            .map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect())
            .collect(),
    )
}

/// Nullspace vector of a `d × (d+1)` matrix of rank `d`, by Cramer-style
/// cofactors computed with fraction-free elimination on each minor.
fn kernel_vector(m: &[Vec<Q>]) -> Vec<Q> {
    let cols = m[0].len();
    (0..cols)
        .map(|skip| {
            let minor: Vec<Vec<Q>> = m
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(k, _)| *k != skip)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let d = det(minor);
            if skip % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}

pub fn det(mut m: Vec<Vec<Q>>) -> Q {
    let n = m.len();
    let mut sign = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            m.swap(p, c);
            sign = -sign;
        }
        for i in c + 1..n {
            let f = &m[i][c] / &m[c][c];
            for k in c..n {
                let d = &f * &m[c][k];
                m[i][k] -= d;
            }
        }
    }
    (0..n).fold(sign, |acc, i| acc * &m[i][i])
}

/// `(coeffs, rhs)` scaled to coprime integers, sign preserved.
pub fn primitive(coeffs: &[Q], rhs: &Q) -> (Vec<BigInt>, BigInt) {
    let all: Vec<&Q> = coeffs.iter().chain(std::iter::once(rhs)).collect();
    let l = all.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = all
        .iter()
        .map(|x| (*x * Q::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let ints: Vec<BigInt> = ints
        .into_iter()
        .map(|x| if g.is_zero() { x } else { x / &g })
        .collect();
    let (c, r) = ints.split_at(ints.len() - 1);
    (c.to_vec(), r[0].clone())
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Facets of a full-dimensional point set: every hyperplane through `d`
/// affinely independent points with all other points weakly on one side
/// and at least one strictly. Returned as primitive `c·x ≥ b`, sorted.
pub fn brute_force_facets(points: &[Vec<Q>]) -> Vec<(Vec<BigInt>, BigInt)> {
    let d = points[0].len();
    let mut out = Vec::new();
    for subset in combinations(points.len(), d) {
        let rows: Vec<Vec<Q>> = subset
            .iter()
            .map(|&k| {
                let mut r = points[k].clone();
                r.push(q(-1));
                r
            })
            .collect();
        if rank(rows.clone()) < d {
            continue;
        }
        let v = kernel_vector(&rows);
        let (c, b) = v.split_at(d);
        let b = b[0].clone();
        let slacks: Vec<Q> = points.iter().map(|p| dot(c, p) - &b).collect();
        let pos = slacks.iter().any(|s| s.is_positive());
        let neg = slacks.iter().any(|s| s.is_negative());
        if pos && neg {
            continue;
        }
        let (c, b) = if neg {
            (c.iter().map(|x| -x).collect::<Vec<_>>(), -b)
        } else {
            (c.to_vec(), b)
        };
        out.push(primitive(&c, &b));
    }
    out.sort();
    out.dedup();
    out
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// `X_{ijpq}` of the vertex for `choice`, straight from the definition.
pub fn vertex_coord(choice: &[u8], i: usize, j: usize, p: u8, q: u8) -> i64 {
    i64::from(choice[i - 1] == p && choice[j - 1] == q)
}

/// Reduced coordinates `y_ij = X_{ij11}`, `i ≤ j`, row by row.
pub fn reduced_vertex(choice: &[u8]) -> Vec<Q> {
    let n = choice.len();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            out.push(q(vertex_coord(choice, i, j, 1, 1)));
        }
    }
    out
}

/// All choices in lexicographic order with 1 before 2.
pub fn all_choices(n: usize) -> Vec<Vec<u8>> {
    (0..1u64 << n)
        .map(|k| {
            (0..n)
                .map(|i| if (k >> (n - 1 - i)) & 1 == 0 { 1 } else { 2 })
                .collect()
        })
        .collect()
}
