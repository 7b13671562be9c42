//! V → H conversion by the double description method.
//!
//! Points `p` are homogenized to `(1, p)`. The facet inequalities
//! `b + c·x ≥ 0` of the hull are the extreme rays of the cone
//! `{(b, c) : b + c·p ≥ 0 for every input point}`, which is computed by
//! adding one point constraint at a time. Rays are kept as primitive integer
//! vectors and adjacency is decided combinatorially from zero sets.
//!
//! Lower dimensional inputs are first split into their affine hull
//! equalities and a full dimensional coordinate projection.

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{linalg, HRep, LinearForm, VRep};
use crate::error::Result;
use crate::limits::Limits;
use crate::rational::{self, Rational};

struct Ray {
    coords: Vec<BigInt>,
    /// Processed constraints that vanish on this ray.
    zeros: FixedBitSet,
}

fn idot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter()
        .zip(b)
        .fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

/// Affine hull equalities followed by one inequality per facet, both in
/// canonical coprime integer form and sorted.
pub fn convex_hull_facets(v: &VRep, limits: &Limits) -> Result<HRep> {
    if v.is_empty() {
        return Err(crate::Error::invalid("convex hull of an empty point set"));
    }
    limits.check_hull(v.dim(), v.len())?;
    let d = v.dim();

    let homog: Vec<Vec<Rational>> = v
        .points()
        .iter()
        .map(|p| {
            std::iter::once(Rational::one())
                .chain(p.iter().cloned())
                .collect()
        })
        .collect();

    // affine hull: (b, c) with b + c·p = 0 on every point, written c·x = -b
    let mut equalities: Vec<LinearForm> = linalg::nullspace(&homog, d + 1)
        .into_iter()
        .map(|ns| LinearForm::new(ns[1..].to_vec(), -ns[0].clone()).canonical_equality())
        .collect();
    equalities.sort_by(LinearForm::lex_cmp);

    // coordinates that parametrize the affine hull injectively
    let mut echelon = homog.clone();
    let pivots = linalg::rref(&mut echelon);
    debug_assert_eq!(pivots.first(), Some(&0));
    let coords: Vec<usize> = pivots[1..].iter().map(|&c| c - 1).collect();

    let constraints: Vec<Vec<BigInt>> = homog
        .iter()
        .map(|row| {
            let mut sel: Vec<Rational> = Vec::with_capacity(coords.len() + 1);
            sel.push(row[0].clone());
            sel.extend(coords.iter().map(|&c| row[c + 1].clone()));
            rational::primitive_integer(&sel)
        })
        .collect();

    let rays = double_description(&constraints);

    let mut inequalities: Vec<LinearForm> = rays
        .into_iter()
        .map(|r| {
            let mut coeffs = vec![Rational::zero(); d];
            for (k, &c) in coords.iter().enumerate() {
                coeffs[c] = Rational::from_integer(r[k + 1].clone());
            }
            LinearForm::new(coeffs, -Rational::from_integer(r[0].clone())).canonical_inequality()
        })
        .collect();
    inequalities.sort_by(LinearForm::lex_cmp);
    inequalities.dedup();

    Ok(HRep {
        dim: d,
        inequalities,
        equalities,
    })
}

/// Extreme rays of `{y : a·y ≥ 0 for every row a}`, assuming the rows span
/// the whole space so that the cone is pointed.
fn double_description(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let m = rows.len();
    let dim = rows[0].len();
    if dim == 1 {
        // a single point has no facets
        return Vec::new();
    }

    let rational_rows: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| r.iter().cloned().map(Rational::from_integer).collect())
        .collect();
    let initial = linalg::independent_rows(&rational_rows);
    debug_assert_eq!(initial.len(), dim);

    // rays of the simplicial cone {A0 y ≥ 0} are the columns of A0⁻¹
    let a0: Vec<Vec<Rational>> = initial.iter().map(|&k| rational_rows[k].clone()).collect();
    let mut rays: Vec<Ray> = Vec::with_capacity(dim);
    for col in 0..dim {
        let e: Vec<Rational> = (0..dim)
            .map(|k| {
                if k == col {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        let x = linalg::solve(&a0, &e).expect("independent rows");
        let coords = rational::primitive_integer(&x);
        let mut zeros = FixedBitSet::with_capacity(m);
        for (k, &row) in initial.iter().enumerate() {
            if k != col {
                zeros.insert(row);
            }
        }
        rays.push(Ray { coords, zeros });
    }

    let remaining: Vec<usize> = (0..m).filter(|k| !initial.contains(k)).collect();
    for k in remaining {
        let a = &rows[k];
        let values: Vec<BigInt> = rays.iter().map(|r| idot(a, &r.coords)).collect();
        let plus: Vec<usize> = (0..rays.len())
            .filter(|&i| values[i].is_positive())
            .collect();
        let minus: Vec<usize> = (0..rays.len())
            .filter(|&i| values[i].is_negative())
            .collect();

        let mut created: Vec<Ray> = Vec::new();
        if !minus.is_empty() {
            for &p in &plus {
                for &q in &minus {
                    let mut common = rays[p].zeros.clone();
                    common.intersect_with(&rays[q].zeros);
                    if common.count_ones(..) + 2 < dim {
                        continue;
                    }
                    let adjacent = rays
                        .iter()
                        .enumerate()
                        .all(|(t, r)| t == p || t == q || !common.is_subset(&r.zeros));
                    if !adjacent {
                        continue;
                    }
                    let vp = &values[p];
                    let vq = -&values[q];
                    let mut coords: Vec<BigInt> = rays[p]
                        .coords
                        .iter()
                        .zip(&rays[q].coords)
                        .map(|(x, y)| &vq * x + vp * y)
                        .collect();
                    let g = coords.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
                    if !g.is_one() {
                        for x in coords.iter_mut() {
                            *x /= &g;
                        }
                    }
                    common.insert(k);
                    created.push(Ray {
                        coords,
                        zeros: common,
                    });
                }
            }
        }

        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + created.len());
        for (r, val) in rays.into_iter().zip(&values) {
            if val.is_negative() {
                continue;
            }
            let mut r = r;
            if val.is_zero() {
                r.zeros.insert(k);
            }
            next.push(r);
        }
        next.extend(created);
        rays = next;
    }

    rays.into_iter().map(|r| r.coords).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedra::affine_rank_of;

    fn hull(points: &[Vec<i64>]) -> HRep {
        let v = VRep::from_integers(points[0].len(), points).unwrap();
        convex_hull_facets(&v, &Limits::default()).unwrap()
    }

    #[test]
    fn square() {
        let h = hull(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert!(h.equalities.is_empty());
        assert_eq!(
            h.inequalities,
            vec![
                LinearForm::from_integers(&[-1, 0], -1),
                LinearForm::from_integers(&[0, -1], -1),
                LinearForm::from_integers(&[0, 1], 0),
                LinearForm::from_integers(&[1, 0], 0),
            ]
        );
    }

    #[test]
    fn interior_points_are_dropped() {
        let h = hull(&[vec![0, 0], vec![4, 0], vec![0, 4], vec![1, 1], vec![2, 1]]);
        assert_eq!(h.inequalities.len(), 3);
    }

    #[test]
    fn lower_dimensional_input() {
        // a triangle in the plane z = 1 inside Q^3
        let pts = [vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 1]];
        let v = VRep::from_integers(3, &pts).unwrap();
        let h = convex_hull_facets(&v, &Limits::default()).unwrap();
        assert_eq!(h.equalities, vec![LinearForm::from_integers(&[0, 0, 1], 1)]);
        assert_eq!(h.inequalities.len(), 3);
        for k in 0..h.inequalities.len() {
            let tight: Vec<Vec<Rational>> = h
                .tight_points(k, &v)
                .into_iter()
                .map(|i| v.points()[i].clone())
                .collect();
            assert_eq!(affine_rank_of(&tight).unwrap(), 1);
        }
    }

    #[test]
    fn single_point_and_segment() {
        let h = hull(&[vec![2, 3]]);
        assert_eq!(h.equalities.len(), 2);
        assert!(h.inequalities.is_empty());
        let h = hull(&[vec![0, 0], vec![2, 2]]);
        assert_eq!(h.equalities.len(), 1);
        assert_eq!(h.inequalities.len(), 2);
    }

    #[test]
    fn guard_names_flag() {
        let pts: Vec<Vec<i64>> = (0..5).map(|k| vec![k, k * k]).collect();
        let v = VRep::from_integers(2, &pts).unwrap();
        let lim = Limits {
            max_hull_points: 4,
            ..Limits::default()
        };
        let err = convex_hull_facets(&v, &lim).unwrap_err().to_string();
        assert!(err.contains("--max-hull-points"), "{err}");
    }
}
