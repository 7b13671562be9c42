//! Facet counts of the simplex, cube and cross-polytope from the exact hull.

use omega_polytope::polyhedra::{convex_hull_facets, regular_polytope, RegularKind};
use omega_polytope::Limits;

fn main() -> omega_polytope::Result<()> {
    let limits = Limits::default();
    println!(" d  simplex  cube  cross");
    for d in 2..=6 {
        let count = |k| -> omega_polytope::Result<usize> {
            Ok(convex_hull_facets(&regular_polytope(k, d)?, &limits)?
                .inequalities
                .len())
        };
        println!(
            "{d:>2}  {:>7}  {:>4}  {:>5}",
            count(RegularKind::Simplex)?,
            count(RegularKind::Cube)?,
            count(RegularKind::CrossPolytope)?
        );
    }
    Ok(())
}
