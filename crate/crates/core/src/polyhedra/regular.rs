use super::VRep;
use crate::error::{Error, Result};
use crate::rational::{int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegularKind {
    Simplex,
    Cube,
    CrossPolytope,
}

/// Canonical vertex lists: origin plus unit vectors, `{0,1}^d` in
/// lexicographic order, and `e_1, -e_1, e_2, -e_2, ...`.
pub fn regular_polytope(kind: RegularKind, d: usize) -> Result<VRep> {
    if d == 0 {
        return Err(Error::invalid(
            "regular polytopes need dimension at least 1",
        ));
    }
    let unit = |i: usize, s: i64| -> Vec<Rational> {
        (0..d)
            .map(|k| if k == i { int(s) } else { int(0) })
            .collect()
    };
    let points: Vec<Vec<Rational>> = match kind {
        RegularKind::Simplex => std::iter::once(vec![int(0); d])
            .chain((0..d).map(|i| unit(i, 1)))
            .collect(),
        RegularKind::Cube => (0..1u64 << d)
            .map(|k| {
                (0..d)
                    .map(|i| int(((k >> (d - 1 - i)) & 1) as i64))
                    .collect()
            })
            .collect(),
        RegularKind::CrossPolytope => (0..d).flat_map(|i| [unit(i, 1), unit(i, -1)]).collect(),
    };
    VRep::new(d, points)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_counts() {
        assert_eq!(regular_polytope(RegularKind::Simplex, 3).unwrap().len(), 4);
        assert_eq!(regular_polytope(RegularKind::Cube, 3).unwrap().len(), 8);
        assert_eq!(
            regular_polytope(RegularKind::CrossPolytope, 3)
                .unwrap()
                .len(),
            6
        );
        assert!(regular_polytope(RegularKind::Cube, 0).is_err());
    }
}
