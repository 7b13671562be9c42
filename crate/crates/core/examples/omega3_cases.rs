//! The 28 excluded pairs of Ω_3, sorted into their three cases.

use omega_polytope::census::omega3::all_pairs;
use omega_polytope::census::{analyze_pair, case_facets, facet_census};
use omega_polytope::omega::display_form;
use omega_polytope::{rational, Limits};

fn main() -> omega_polytope::Result<()> {
    for (a, b) in all_pairs() {
        let r = analyze_pair(&a, &b)?;
        println!(
            "{a} / {b}  {:<12} {:<9} [{} {}]  {}",
            r.class.name(),
            r.verdict.label(),
            rational::format(&r.value_a),
            rational::format(&r.value_b),
            display_form(3, &r.form, "="),
        );
    }
    let cases = case_facets()?;
    let hull = facet_census(3, &Limits::default(), false)?;
    println!(
        "facets from the cases: {}, from the hull: {}, same set: {}",
        cases.len(),
        hull.facet_count,
        cases == hull.forms()
    );
    Ok(())
}
