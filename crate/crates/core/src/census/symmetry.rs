//! The hyperoctahedral group acting on parts and positions.

use crate::error::{Error, Result};
use crate::graph2p::Assignment;
use crate::omega::{CoordIndex, OmegaPoint};
use crate::polyhedra::LinearForm;

/// Part `i` is sent to part `perm[i-1]`, and its two positions are exchanged
/// first when `swap[i-1]` is set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Symmetry {
    perm: Vec<usize>,
    swap: Vec<bool>,
}

impl Symmetry {
    pub fn new(perm: Vec<usize>, swap: Vec<bool>) -> Result<Self> {
        let n = perm.len();
        if swap.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: swap.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p == 0 || p > n || seen[p - 1] {
                return Err(Error::invalid(format!(
                    "{perm:?} is not a permutation of 1..={n}"
                )));
            }
            seen[p - 1] = true;
        }
        Ok(Symmetry { perm, swap })
    }

    pub fn identity(n: usize) -> Self {
        Symmetry {
            perm: (1..=n).collect(),
            swap: vec![false; n],
        }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    /// Image part of `i`.
    pub fn part(&self, i: usize) -> usize {
        self.perm[i - 1]
    }

    /// Image position of `p` in part `i`.
    pub fn pos(&self, i: usize, p: u8) -> u8 {
        if self.swap[i - 1] {
            3 - p
        } else {
            p
        }
    }

    pub fn apply(&self, a: &Assignment) -> Assignment {
        let n = self.n();
        let mut choice = vec![0u8; n];
        for i in 1..=n {
            choice[self.part(i) - 1] = self.pos(i, a.get(i));
        }
        Assignment::new(choice).expect("positions stay in {1,2}")
    }

    pub fn apply_coord(&self, c: CoordIndex) -> CoordIndex {
        CoordIndex::new(
            self.part(c.i),
            self.part(c.j),
            self.pos(c.i, c.p),
            self.pos(c.j, c.q),
        )
    }

    /// Moves the value at `c` to `g(c)`; vertices go to vertices.
    pub fn apply_point(&self, x: &OmegaPoint) -> OmegaPoint {
        let n = self.n();
        let mut coords = x.coords().to_vec();
        for c in CoordIndex::all(n) {
            coords[self.apply_coord(c).flat(n)] = x.coords()[c.flat(n)].clone();
        }
        OmegaPoint::new(n, coords).expect("same length")
    }

    /// Moves coefficients like [`Symmetry::apply_point`] moves values, so
    /// `(g·F)(g·x) = F(x)`.
    pub fn apply_form(&self, f: &LinearForm) -> LinearForm {
        let n = self.n();
        let mut coeffs = f.coeffs.clone();
        for c in CoordIndex::all(n) {
            coeffs[self.apply_coord(c).flat(n)] = f.coeffs[c.flat(n)].clone();
        }
        LinearForm::new(coeffs, f.rhs.clone())
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Symmetry) -> Symmetry {
        let n = self.n();
        let perm = (1..=n).map(|i| self.part(other.part(i))).collect();
        let swap = (1..=n)
            .map(|i| other.swap[i - 1] ^ self.swap[other.part(i) - 1])
            .collect();
        Symmetry { perm, swap }
    }

    pub fn inverse(&self) -> Symmetry {
        let n = self.n();
        let mut perm = vec![0; n];
        let mut swap = vec![false; n];
        for i in 1..=n {
            perm[self.part(i) - 1] = i;
            swap[self.part(i) - 1] = self.swap[i - 1];
        }
        Symmetry { perm, swap }
    }

    /// All `n!·2^n` elements: permutations in lexicographic order, each with
    /// every swap pattern in assignment order.
    pub fn all(n: usize) -> Vec<Symmetry> {
        let mut out = Vec::new();
        let mut perm: Vec<usize> = (1..=n).collect();
        loop {
            for mask in 0..1u64 << n {
                let swap = (0..n).map(|i| (mask >> (n - 1 - i)) & 1 == 1).collect();
                out.push(Symmetry {
                    perm: perm.clone(),
                    swap,
                });
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        out
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// The orbit of an assignment, sorted.
pub fn orbit(a: &Assignment) -> Vec<Assignment> {
    let mut out: Vec<Assignment> = Symmetry::all(a.n()).iter().map(|g| g.apply(a)).collect();
    out.sort();
    out.dedup();
    out
}
