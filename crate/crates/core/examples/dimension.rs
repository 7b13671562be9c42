//! dim Ω_n = n(n+1)/2, checked by exact affine rank.

use omega_polytope::omega::{
    independent_family, omega_dimension, reduced_dim, vertex_from_assignment,
};
use omega_polytope::polyhedra::affine_rank_of;
use omega_polytope::Limits;

fn main() -> omega_polytope::Result<()> {
    let limits = Limits::default();
    println!(" n  rank  n(n+1)/2  family rank");
    for n in 2..=6 {
        let dim = omega_dimension(n, &limits)?;
        let family = independent_family(n)?;
        let pts = family
            .iter()
            .map(|a| Ok(vertex_from_assignment(n, a)?.coords().to_vec()))
            .collect::<omega_polytope::Result<Vec<_>>>()?;
        let fam = affine_rank_of(&pts)?;
        println!("{n:>2}  {dim:>4}  {:>8}  {fam:>11}", reduced_dim(n));
        assert_eq!(dim, reduced_dim(n));
        assert_eq!(fam, dim);
    }
    Ok(())
}
