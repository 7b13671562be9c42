//! Vertices of Ω_n, the four equality families and the reduced coordinates.

use omega_polytope::omega::{
    all_vertices, check_equalities, lift, reduce, reduced_pairs, vertex_from_assignment, Equality,
    OmegaPoint,
};
use omega_polytope::{rational, Assignment, Limits};

fn main() -> omega_polytope::Result<()> {
    let n = 3;
    let a: Assignment = "1,2,1".parse()?;
    let x = vertex_from_assignment(n, &a)?;
    println!("vertex {a}: {} coordinates, nonzero at", x.coords().len());
    for i in 1..=n {
        for j in 1..=n {
            println!("  X_{{{i}{j}{}{}}} = 1", a.get(i), a.get(j));
        }
    }

    let verts = all_vertices(n, &Limits::default())?;
    for e in Equality::ALL {
        let bad: usize = verts.iter().map(|v| check_equalities(v).count(e)).sum();
        println!(
            "{:<28} {} instances, {bad} violations",
            e.describe(),
            e.instances(n)
        );
    }

    // The barycenter is inside, so it reduces and lifts back unchanged.
    let w = rational::frac(1, verts.len() as i64);
    let parts: Vec<_> = verts.iter().map(|v| (w.clone(), v)).collect();
    let center = OmegaPoint::combination(&parts)?;
    let y = reduce(&center)?;
    let shown: Vec<String> = reduced_pairs(n)
        .map(|(i, j)| format!("y{i}{j}={}", rational::format(y.get(i, j))))
        .collect();
    println!("barycenter reduced: {}", shown.join(" "));
    assert_eq!(lift(&y), center);
    println!("lift(reduce(x)) == x");
    Ok(())
}
