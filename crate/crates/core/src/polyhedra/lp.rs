//! Two-phase primal simplex over exact rationals.
//!
//! Variables are free. The leaving row is chosen by the lexicographic ratio
//! test against an identity block that is reset at the start of each phase,
//! which rules out cycling. Dual multipliers are recovered from the final
//! basis and checked against the primal optimum before returning.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use super::{linalg, HRep};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Maximize,
    Minimize,
}

/// Multipliers certifying optimality.
///
/// For [`Sense::Maximize`]: `c = Eᵀw − Gᵀλ`, `λ ≥ 0`, optimum `= e·w − h·λ`.
/// For [`Sense::Minimize`]: `c = Eᵀw + Gᵀλ`, `λ ≥ 0`, optimum `= e·w + h·λ`.
/// Here `G x ≥ h` are the inequalities and `E x = e` the equalities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Duals {
    pub inequalities: Vec<Rational>,
    pub equalities: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub optimum: Rational,
    pub argument: Vec<Rational>,
    pub duals: Duals,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal(LpSolution),
    Infeasible,
    Unbounded,
}

impl LpSolution {
    /// Primal feasibility, dual feasibility and equal objective values.
    pub fn certify(&self, objective: &[Rational], constraints: &HRep, sense: Sense) -> bool {
        if !constraints.contains(&self.argument) {
            return false;
        }
        if rational::dot(objective, &self.argument) != self.optimum {
            return false;
        }
        let d = &self.duals;
        if d.inequalities.len() != constraints.inequalities.len()
            || d.equalities.len() != constraints.equalities.len()
            || d.inequalities.iter().any(Signed::is_negative)
        {
            return false;
        }
        let sign = match sense {
            Sense::Maximize => -Rational::one(),
            Sense::Minimize => Rational::one(),
        };
        let mut combo = vec![Rational::zero(); constraints.dim];
        let mut value = Rational::zero();
        for (f, w) in constraints.equalities.iter().zip(&d.equalities) {
            for (c, a) in combo.iter_mut().zip(&f.coeffs) {
                *c += w * a;
            }
            value += w * &f.rhs;
        }
        for (f, l) in constraints.inequalities.iter().zip(&d.inequalities) {
            let l = &sign * l;
            for (c, a) in combo.iter_mut().zip(&f.coeffs) {
                *c += &l * a;
            }
            value += &l * &f.rhs;
        }
        combo == objective && value == self.optimum
    }
}

struct Tableau {
    /// Each row: `[columns | rhs | lex block]`.
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    /// Row index in the original constraint system.
    origin: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn rhs(&self) -> usize {
        self.ncols
    }

    fn reset_lex(&mut self) {
        let m = self.rows.len();
        let start = self.ncols + 1;
        for (i, row) in self.rows.iter_mut().enumerate() {
            row.truncate(start);
            row.extend((0..m).map(|k| {
                if k == i {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
        }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let prow = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Lexicographic comparison of rows `i` and `k` divided by their entries in column `q`.
    fn lex_ratio_cmp(&self, i: usize, k: usize, q: usize) -> Ordering {
        let (ri, rk) = (&self.rows[i], &self.rows[k]);
        for idx in self.rhs()..ri.len() {
            let ord = (&ri[idx] * &rk[q]).cmp(&(&rk[idx] * &ri[q]));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        Ordering::Equal
    }

    /// Minimizes `cost · z` over the current feasible basis. Returns `false`
    /// if the objective is unbounded below.
    fn minimize(&mut self, cost: &[Rational], allowed: impl Fn(usize) -> bool) -> bool {
        loop {
            let entering = (0..self.ncols).filter(|&j| allowed(j)).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut d = cost[j].clone();
                for (row, &b) in self.rows.iter().zip(&self.basis) {
                    if !cost[b].is_zero() && !row[j].is_zero() {
                        d -= &cost[b] * &row[j];
                    }
                }
                d.is_negative()
            });
            let Some(q) = entering else {
                return true;
            };
            let mut leaving: Option<usize> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][q].is_positive() {
                    continue;
                }
                leaving = match leaving {
                    Some(k) if self.lex_ratio_cmp(i, k, q) != Ordering::Less => Some(k),
                    _ => Some(i),
                };
            }
            let Some(r) = leaving else {
                return false;
            };
            self.pivot(r, q);
        }
    }

    fn value(&self, col: usize) -> Rational {
        self.basis
            .iter()
            .position(|&b| b == col)
            .map_or_else(Rational::zero, |r| self.rows[r][self.rhs()].clone())
    }
}

/// Optimizes `objective · x` over `constraints` with `x` free.
pub fn lp_solve(objective: &[Rational], constraints: &HRep, sense: Sense) -> Result<LpOutcome> {
    let d = constraints.dim;
    if objective.len() != d {
        return Err(Error::LengthMismatch {
            expected: d,
            actual: objective.len(),
        });
    }
    let gi = constraints.inequalities.len();
    let ns = 2 * d + gi;
    // original rows over the structural columns, with right-hand sides
    let mut original: Vec<(Vec<Rational>, Rational)> = Vec::new();
    for (k, f) in constraints.inequalities.iter().enumerate() {
        let mut row = vec![Rational::zero(); ns];
        for (j, a) in f.coeffs.iter().enumerate() {
            row[j] = a.clone();
            row[d + j] = -a.clone();
        }
        row[2 * d + k] = -Rational::one();
        original.push((row, f.rhs.clone()));
    }
    for f in &constraints.equalities {
        let mut row = vec![Rational::zero(); ns];
        for (j, a) in f.coeffs.iter().enumerate() {
            row[j] = a.clone();
            row[d + j] = -a.clone();
        }
        original.push((row, f.rhs.clone()));
    }
    let m = original.len();
    let ncols = ns + m;
    let mut tab = Tableau {
        rows: Vec::with_capacity(m),
        basis: (ns..ns + m).collect(),
        origin: (0..m).collect(),
        ncols,
    };
    for (i, (row, b)) in original.iter().enumerate() {
        let flip = b.is_negative();
        let mut r: Vec<Rational> = row
            .iter()
            .map(|x| if flip { -x } else { x.clone() })
            .collect();
        r.extend((0..m).map(|k| {
            if k == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        }));
        r.push(if flip { -b } else { b.clone() });
        tab.rows.push(r);
    }
    tab.reset_lex();

    // phase 1: drive the artificial variables to zero
    let mut cost1 = vec![Rational::zero(); ncols];
    for c in cost1.iter_mut().skip(ns) {
        *c = Rational::one();
    }
    let bounded = tab.minimize(&cost1, |_| true);
    debug_assert!(bounded);
    let infeasibility: Rational = (ns..ncols).map(|c| tab.value(c)).sum();
    if !infeasibility.is_zero() {
        return Ok(LpOutcome::Infeasible);
    }
    let mut r = 0;
    while r < tab.rows.len() {
        if tab.basis[r] < ns {
            r += 1;
            continue;
        }
        match (0..ns).find(|&c| !tab.rows[r][c].is_zero()) {
            Some(c) => {
                tab.pivot(r, c);
                r += 1;
            }
            None => {
                // redundant row
                tab.rows.remove(r);
                tab.basis.remove(r);
                tab.origin.remove(r);
            }
        }
    }
    tab.reset_lex();

    // phase 2
    let mut cost2 = vec![Rational::zero(); ncols];
    for (j, c) in objective.iter().enumerate() {
        let c = match sense {
            Sense::Maximize => -c.clone(),
            Sense::Minimize => c.clone(),
        };
        cost2[d + j] = -c.clone();
        cost2[j] = c;
    }
    if !tab.minimize(&cost2, |j| j < ns) {
        return Ok(LpOutcome::Unbounded);
    }

    let argument: Vec<Rational> = (0..d).map(|j| tab.value(j) - tab.value(d + j)).collect();
    let optimum = rational::dot(objective, &argument);

    // duals: Bᵀ y = c_B on the original rows kept in the basis
    let k = tab.rows.len();
    let bt: Vec<Vec<Rational>> = (0..k)
        .map(|c| {
            (0..k)
                .map(|r| original[tab.origin[r]].0[tab.basis[c]].clone())
                .collect()
        })
        .collect();
    let cb: Vec<Rational> = tab.basis.iter().map(|&b| cost2[b].clone()).collect();
    let y_kept = linalg::solve(&bt, &cb)
        .ok_or_else(|| Error::Verification("singular final simplex basis".into()))?;
    let mut y = vec![Rational::zero(); m];
    for (r, v) in tab.origin.iter().zip(y_kept) {
        y[*r] = v;
    }
    let (y_g, y_e) = y.split_at(gi);
    let duals = match sense {
        // minimize −c: Gᵀy_G + Eᵀy_E = −c
        Sense::Maximize => Duals {
            inequalities: y_g.to_vec(),
            equalities: y_e.iter().map(|v| -v).collect(),
        },
        // minimize c: Gᵀy_G + Eᵀy_E = c
        Sense::Minimize => Duals {
            inequalities: y_g.to_vec(),
            equalities: y_e.to_vec(),
        },
    };
    let sol = LpSolution {
        optimum,
        argument,
        duals,
    };
    if !sol.certify(objective, constraints, sense) {
        return Err(Error::Verification(
            "simplex optimum failed its duality certificate".into(),
        ));
    }
    Ok(LpOutcome::Optimal(sol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedra::LinearForm;
    use crate::rational::{frac, int};

    fn h(dim: usize, ineq: &[(&[i64], i64)], eq: &[(&[i64], i64)]) -> HRep {
        HRep::new(
            dim,
            ineq.iter()
                .map(|(c, r)| LinearForm::from_integers(c, *r))
                .collect(),
            eq.iter()
                .map(|(c, r)| LinearForm::from_integers(c, *r))
                .collect(),
        )
        .unwrap()
    }

    fn optimal(o: LpOutcome) -> LpSolution {
        match o {
            LpOutcome::Optimal(s) => s,
            other => panic!("expected optimum, got {other:?}"),
        }
    }

    #[test]
    fn unit_interval() {
        let c = h(1, &[(&[1], 0), (&[-1], -1)], &[]);
        let s = optimal(lp_solve(&[int(1)], &c, Sense::Maximize).unwrap());
        assert_eq!(s.optimum, int(1));
        let s = optimal(lp_solve(&[int(1)], &c, Sense::Minimize).unwrap());
        assert_eq!(s.optimum, int(0));
    }

    #[test]
    fn triangle() {
        let c = h(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[-1, -1], -1)], &[]);
        let s = optimal(lp_solve(&[int(1), int(1)], &c, Sense::Maximize).unwrap());
        assert_eq!(s.optimum, int(1));
        let s = optimal(lp_solve(&[int(2), int(1)], &c, Sense::Maximize).unwrap());
        assert_eq!(s.argument, vec![int(1), int(0)]);
    }

    #[test]
    fn infeasible_and_unbounded() {
        let c = h(1, &[(&[1], 1), (&[-1], 0)], &[]);
        assert_eq!(
            lp_solve(&[int(1)], &c, Sense::Maximize).unwrap(),
            LpOutcome::Infeasible
        );
        let c = h(1, &[(&[1], 0)], &[]);
        assert_eq!(
            lp_solve(&[int(1)], &c, Sense::Maximize).unwrap(),
            LpOutcome::Unbounded
        );
        let free = h(2, &[], &[]);
        assert_eq!(
            lp_solve(&[int(0), int(1)], &free, Sense::Minimize).unwrap(),
            LpOutcome::Unbounded
        );
        let s = optimal(lp_solve(&[int(0), int(0)], &free, Sense::Minimize).unwrap());
        assert_eq!(s.optimum, int(0));
    }

    #[test]
    fn equalities_and_redundant_rows() {
        // x + y = 1 twice, x - y = 1/2 scaled
        let c = HRep::new(
            2,
            vec![],
            vec![
                LinearForm::from_integers(&[1, 1], 1),
                LinearForm::from_integers(&[2, 2], 2),
                LinearForm::new(vec![int(2), int(-2)], int(1)),
            ],
        )
        .unwrap();
        let s = optimal(lp_solve(&[int(1), int(0)], &c, Sense::Maximize).unwrap());
        assert_eq!(s.argument, vec![frac(3, 4), frac(1, 4)]);
    }

    #[test]
    fn degenerate_vertex_terminates() {
        // many constraints through the origin of the positive quadrant
        let mut ineq: Vec<(Vec<i64>, i64)> =
            vec![(vec![1, 0, 0], 0), (vec![0, 1, 0], 0), (vec![0, 0, 1], 0)];
        for a in 1..5 {
            ineq.push((vec![-a, a - 3, 1], 0));
            ineq.push((vec![a, -1, -a], -3));
        }
        let c = HRep::new(
            3,
            ineq.iter()
                .map(|(c, r)| LinearForm::from_integers(c, *r))
                .collect(),
            vec![],
        )
        .unwrap();
        let out = lp_solve(&[int(1), int(1), int(1)], &c, Sense::Maximize).unwrap();
        assert!(matches!(out, LpOutcome::Optimal(_) | LpOutcome::Unbounded));
    }
}
