//! Facet counts of Ω_n for small n, with symmetry orbits.
//!
//! ```text
//! cargo run --release --example facet_census -- 5
//! ```

use omega_polytope::census::facet_census;
use omega_polytope::Limits;

fn main() -> omega_polytope::Result<()> {
    let top: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    let limits = Limits {
        max_census_n: top,
        max_hull_points: 1 << top,
        ..Limits::default()
    };
    for n in 2..=top {
        let r = facet_census(n, &limits, true)?;
        let orbits = r.orbits.as_deref().unwrap_or_default();
        let sizes: Vec<String> = orbits.iter().map(|o| o.size.to_string()).collect();
        println!(
            "n={n}: {} facets, {} per vertex, vertices per facet {:?}, orbit sizes [{}]",
            r.facet_count,
            r.constant_incidence()
                .map_or("varying".to_string(), |k| k.to_string()),
            r.facet_sizes(),
            sizes.join(", ")
        );
    }
    Ok(())
}
