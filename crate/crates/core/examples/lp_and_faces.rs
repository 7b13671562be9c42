//! The exact simplex LP and the face test built on it.

use omega_polytope::omega::reduced_vertices;
use omega_polytope::polyhedra::{
    is_face, lp_solve, FaceVerdict, HRep, LinearForm, LpOutcome, Sense, VRep,
};
use omega_polytope::{rational, Limits};

fn main() -> omega_polytope::Result<()> {
    // max x + y  s.t.  x ≥ 0, y ≥ 0, 2x + y ≤ 4, x + 3y ≤ 6
    let h = HRep::new(
        2,
        vec![
            LinearForm::from_integers(&[1, 0], 0),
            LinearForm::from_integers(&[0, 1], 0),
            LinearForm::from_integers(&[-2, -1], -4),
            LinearForm::from_integers(&[-1, -3], -6),
        ],
        vec![],
    )?;
    let c = [rational::int(1), rational::int(1)];
    if let LpOutcome::Optimal(s) = lp_solve(&c, &h, Sense::Maximize)? {
        let show = |v: &[rational::Rational]| {
            v.iter()
                .map(rational::format)
                .collect::<Vec<_>>()
                .join(", ")
        };
        println!(
            "optimum {} at ({})",
            rational::format(&s.optimum),
            show(&s.argument)
        );
        println!("duals ({})", show(&s.duals.inequalities));
    }

    let square = VRep::from_integers(2, &[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]])?;
    for subset in [&[0, 1][..], &[0, 3], &[0], &[1, 2, 3]] {
        println!("square {subset:?}: {}", is_face(&square, subset)?.label());
    }

    let omega3 = reduced_vertices(3, &Limits::default())?;
    match is_face(&omega3, &[1, 2, 3, 4, 5, 6])? {
        FaceVerdict::Facet(f) => {
            let c: Vec<String> = f.coeffs.iter().map(rational::format).collect();
            println!(
                "Ω_3 minus (1,1,1),(2,2,2): facet [{}]·y ≥ {}",
                c.join(" "),
                rational::format(&f.rhs)
            );
        }
        other => println!("unexpected {}", other.label()),
    }
    if let FaceVerdict::NotFace(w) = is_face(&omega3, &[1, 2, 4, 5, 6, 7])? {
        println!(
            "Ω_3 minus (1,1,1),(1,2,2): not a face, witness checks: {}",
            w.check(&omega3)
        );
    }
    Ok(())
}
