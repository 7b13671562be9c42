//! Exact rational polyhedral computations.
//!
//! Everything here works over [`Rational`]; there is no floating point path.

mod face;
pub mod format;
mod hull;
pub mod linalg;
mod lp;
mod regular;

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

pub use face::{is_face, FaceVerdict, NotFaceWitness};
pub use hull::convex_hull_facets;
pub use lp::{lp_solve, Duals, LpOutcome, LpSolution, Sense};
pub use regular::{regular_polytope, RegularKind};

/// A finite point set in `Q^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VRep {
    dim: usize,
    points: Vec<Vec<Rational>>,
}

impl VRep {
    /// Checks lengths and rejects repeated points.
    pub fn new(dim: usize, points: Vec<Vec<Rational>>) -> Result<Self> {
        for p in &points {
            if p.len() != dim {
                return Err(Error::LengthMismatch {
                    expected: dim,
                    actual: p.len(),
                });
            }
        }
        let mut seen = BTreeSet::new();
        for (k, p) in points.iter().enumerate() {
            if !seen.insert(p) {
                return Err(Error::invalid(format!("point {k} is a duplicate")));
            }
        }
        Ok(VRep { dim, points })
    }

    pub fn from_integers(dim: usize, points: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            dim,
            points
                .iter()
                .map(|p| p.iter().map(|&x| rational::int(x)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The same points with their order changed by `perm` (`new[k] = old[perm[k]]`).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        VRep {
            dim: self.dim,
            points: perm.iter().map(|&k| self.points[k].clone()).collect(),
        }
    }
}

/// `coeffs · x ≥ rhs`, or `coeffs · x = rhs` when used as a hyperplane.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearForm {
    #[serde(with = "rational::serde_str::vec")]
    pub coeffs: Vec<Rational>,
    #[serde(with = "rational::serde_str")]
    pub rhs: Rational,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Rational>, rhs: Rational) -> Self {
        LinearForm { coeffs, rhs }
    }

    pub fn from_integers(coeffs: &[i64], rhs: i64) -> Self {
        LinearForm {
            coeffs: coeffs.iter().map(|&c| rational::int(c)).collect(),
            rhs: rational::int(rhs),
        }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// `coeffs · x`.
    pub fn eval(&self, x: &[Rational]) -> Rational {
        rational::dot(&self.coeffs, x)
    }

    /// `coeffs · x − rhs`.
    pub fn slack(&self, x: &[Rational]) -> Rational {
        self.eval(x) - &self.rhs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Inequality normalization: positive scaling to coprime integers over
    /// coefficients and right-hand side together.
    pub fn canonical_inequality(&self) -> LinearForm {
        let mut all = self.coeffs.clone();
        all.push(self.rhs.clone());
        let ints = rational::primitive_integer(&all);
        Self::from_bigints(ints)
    }

    /// Equality normalization: coprime integers with the first nonzero
    /// coefficient positive.
    pub fn canonical_equality(&self) -> LinearForm {
        let mut all = self.coeffs.clone();
        all.push(self.rhs.clone());
        let mut ints = rational::primitive_integer(&all);
        if ints
            .iter()
            .find(|x| !x.is_zero())
            .is_some_and(|x| x.is_negative())
        {
            for x in ints.iter_mut() {
                *x = -&*x;
            }
        }
        Self::from_bigints(ints)
    }

    fn from_bigints(mut ints: Vec<BigInt>) -> LinearForm {
        let rhs = Rational::from_integer(ints.pop().expect("nonempty"));
        LinearForm {
            coeffs: ints.into_iter().map(Rational::from_integer).collect(),
            rhs,
        }
    }

    /// Lexicographic order on `(coeffs, rhs)`.
    pub fn lex_cmp(&self, other: &LinearForm) -> Ordering {
        self.coeffs
            .cmp(&other.coeffs)
            .then_with(|| self.rhs.cmp(&other.rhs))
    }
}

/// `{x : every inequality ≥ and every equality = holds}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRep {
    pub dim: usize,
    pub inequalities: Vec<LinearForm>,
    pub equalities: Vec<LinearForm>,
}

impl HRep {
    pub fn new(
        dim: usize,
        inequalities: Vec<LinearForm>,
        equalities: Vec<LinearForm>,
    ) -> Result<Self> {
        for f in inequalities.iter().chain(&equalities) {
            if f.dim() != dim {
                return Err(Error::LengthMismatch {
                    expected: dim,
                    actual: f.dim(),
                });
            }
        }
        Ok(HRep {
            dim,
            inequalities,
            equalities,
        })
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.inequalities.iter().all(|f| !f.slack(x).is_negative())
            && self.equalities.iter().all(|f| f.slack(x).is_zero())
    }

    /// Input points lying on the hyperplane of inequality `k`.
    pub fn tight_points(&self, k: usize, v: &VRep) -> Vec<usize> {
        let f = &self.inequalities[k];
        (0..v.len())
            .filter(|&i| f.slack(&v.points[i]).is_zero())
            .collect()
    }
}

/// Dimension of the affine hull of a nonempty point set.
pub fn affine_rank(v: &VRep) -> Result<usize> {
    affine_rank_of(v.points())
}

pub fn affine_rank_of(points: &[Vec<Rational>]) -> Result<usize> {
    let (first, rest) = points
        .split_first()
        .ok_or_else(|| Error::invalid("affine rank of an empty point set"))?;
    let rows: Vec<Vec<Rational>> = rest
        .iter()
        .map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect())
        .collect();
    Ok(linalg::rank(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn affine_rank_examples() {
        let one = VRep::from_integers(3, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(affine_rank(&one).unwrap(), 0);
        let line = VRep::from_integers(2, &[vec![0, 0], vec![1, 1], vec![2, 2]]).unwrap();
        assert_eq!(affine_rank(&line).unwrap(), 1);
        assert!(affine_rank_of(&[]).is_err());
    }

    #[test]
    fn vrep_rejects_duplicates_and_bad_lengths() {
        assert!(VRep::from_integers(2, &[vec![0, 0], vec![0, 0]]).is_err());
        assert!(VRep::from_integers(2, &[vec![0, 0, 1]]).is_err());
    }

    #[test]
    fn canonical_forms() {
        let f = LinearForm::new(vec![frac(-1, 2), frac(1, 3)], frac(1, 6));
        assert_eq!(
            f.canonical_inequality(),
            LinearForm::from_integers(&[-3, 2], 1)
        );
        assert_eq!(
            f.canonical_equality(),
            LinearForm::from_integers(&[3, -2], -1)
        );
        let g = LinearForm::new(vec![int(4), int(0)], int(2));
        assert_eq!(
            g.canonical_inequality(),
            LinearForm::from_integers(&[2, 0], 1)
        );
    }
}
