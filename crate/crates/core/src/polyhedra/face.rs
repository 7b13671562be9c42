use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use super::{affine_rank_of, lp_solve, HRep, LinearForm, LpOutcome, Sense, VRep};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Outcome of testing whether a subset of points is exactly the point set of
/// a face of their convex hull.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FaceVerdict {
    /// Carries `c·x ≥ b`, tight exactly on the subset.
    Facet(LinearForm),
    ProperFace {
        form: LinearForm,
        dimension: usize,
    },
    NotFace(NotFaceWitness),
    Empty,
    WholePolytope,
}

impl FaceVerdict {
    pub fn is_face(&self) -> bool {
        !matches!(self, FaceVerdict::NotFace(_))
    }

    pub fn form(&self) -> Option<&LinearForm> {
        match self {
            FaceVerdict::Facet(f) | FaceVerdict::ProperFace { form: f, .. } => Some(f),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            FaceVerdict::Facet(_) => "Facet",
            FaceVerdict::ProperFace { .. } => "ProperFace",
            FaceVerdict::NotFace(_) => "NotFace",
            FaceVerdict::Empty => "Empty",
            FaceVerdict::WholePolytope => "WholePolytope",
        }
    }
}

/// A convex combination of points outside the subset that equals an affine
/// combination of subset points. Any hyperplane through the subset with the
/// polytope on one side must then contain some outside point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotFaceWitness {
    pub outside: Vec<(usize, Rational)>,
    pub inside: Vec<(usize, Rational)>,
}

impl NotFaceWitness {
    pub fn check(&self, v: &VRep) -> bool {
        let sum = |w: &[(usize, Rational)]| w.iter().map(|(_, x)| x).sum::<Rational>();
        let point = |w: &[(usize, Rational)]| {
            let mut acc = vec![Rational::zero(); v.dim()];
            for (k, x) in w {
                for (a, p) in acc.iter_mut().zip(&v.points()[*k]) {
                    *a += x * p;
                }
            }
            acc
        };
        !self.outside.is_empty()
            && self.outside.iter().all(|(_, x)| x.is_positive())
            && sum(&self.outside).is_one()
            && sum(&self.inside).is_one()
            && point(&self.outside) == point(&self.inside)
    }
}

/// Decides whether `subset` is the set of points of `v` lying on some
/// supporting hyperplane of `conv(v)`.
///
/// Solves `max t` over forms `(c, b)` with `c·x = b` on the subset,
/// `c·x ≥ b + t` elsewhere and `t ≤ 1`; a positive optimum gives the face,
/// a zero optimum yields a [`NotFaceWitness`] from the dual.
pub fn is_face(v: &VRep, subset: &[usize]) -> Result<FaceVerdict> {
    let set: BTreeSet<usize> = subset.iter().copied().collect();
    if let Some(&bad) = set.iter().find(|&&k| k >= v.len()) {
        return Err(Error::invalid(format!(
            "subset index {bad} out of range for {} points",
            v.len()
        )));
    }
    if set.is_empty() {
        return Ok(FaceVerdict::Empty);
    }
    if set.len() == v.len() {
        return Ok(FaceVerdict::WholePolytope);
    }

    let d = v.dim();
    let outside: Vec<usize> = (0..v.len()).filter(|k| !set.contains(k)).collect();
    let row = |x: &[Rational], t: i64| {
        let mut r: Vec<Rational> = x.to_vec();
        r.push(-Rational::one());
        r.push(Rational::from_integer(t.into()));
        r
    };
    let equalities: Vec<LinearForm> = set
        .iter()
        .map(|&s| LinearForm::new(row(&v.points()[s], 0), Rational::zero()))
        .collect();
    let mut inequalities: Vec<LinearForm> = outside
        .iter()
        .map(|&k| LinearForm::new(row(&v.points()[k], -1), Rational::zero()))
        .collect();
    let mut cap = vec![Rational::zero(); d + 2];
    cap[d + 1] = -Rational::one();
    inequalities.push(LinearForm::new(cap, -Rational::one()));
    let system = HRep::new(d + 2, inequalities, equalities)?;

    let mut objective = vec![Rational::zero(); d + 2];
    objective[d + 1] = Rational::one();
    let sol = match lp_solve(&objective, &system, Sense::Maximize)? {
        LpOutcome::Optimal(s) => s,
        other => {
            return Err(Error::Verification(format!(
                "face LP should have a finite optimum, got {other:?}"
            )))
        }
    };

    if sol.optimum.is_positive() {
        let form = LinearForm::new(sol.argument[..d].to_vec(), sol.argument[d].clone())
            .canonical_inequality();
        let sub_points: Vec<Vec<Rational>> = set.iter().map(|&k| v.points()[k].clone()).collect();
        let dimension = affine_rank_of(&sub_points)?;
        let full = affine_rank_of(v.points())?;
        return Ok(if dimension + 1 == full {
            FaceVerdict::Facet(form)
        } else {
            FaceVerdict::ProperFace { form, dimension }
        });
    }

    let outside_w: Vec<(usize, Rational)> = outside
        .iter()
        .zip(&sol.duals.inequalities)
        .filter(|(_, w)| !w.is_zero())
        .map(|(&k, w)| (k, w.clone()))
        .collect();
    let inside_w: Vec<(usize, Rational)> = set
        .iter()
        .zip(&sol.duals.equalities)
        .filter(|(_, w)| !w.is_zero())
        .map(|(&k, w)| (k, w.clone()))
        .collect();
    let witness = NotFaceWitness {
        outside: outside_w,
        inside: inside_w,
    };
    if !witness.check(v) {
        return Err(Error::Verification(
            "non-face dual witness does not check".into(),
        ));
    }
    Ok(FaceVerdict::NotFace(witness))
}
