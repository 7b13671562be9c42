//! Every pair of vertices of Ω_n spans an edge: a weight on the cross edges
//! equals 1 on both cliques of the pair and at least 2 on every other one.

use omega_polytope::neighborly::{certify_all_pairs, edge_certificate, edges_via_hull};
use omega_polytope::{rational, Assignment, Limits};

fn main() -> omega_polytope::Result<()> {
    let limits = Limits::default();
    let a: Assignment = "1,1,2".parse()?;
    let b: Assignment = "2,1,1".parse()?;
    let c = edge_certificate(3, &a, &b, &limits)?;
    println!("pair {a} / {b}: marked {} and {}", c.marked_a, c.marked_b);
    for e in c.alpha.iter().filter(|e| e.w > 0) {
        println!("  weight {} on {}", e.w, e.edge()?);
    }
    println!(
        "  F(a) = {}, F(b) = {}, min elsewhere = {}",
        rational::format(&c.f_a),
        rational::format(&c.f_b),
        rational::format(&c.min_other)
    );
    println!("{}", serde_json::to_string(&c.to_json())?);

    for n in 2..=6 {
        let all = certify_all_pairs(n, &limits)?;
        let lp = if n <= limits.max_lp_edge_n {
            edges_via_hull(n, &limits)?.to_string()
        } else {
            "-".into()
        };
        println!("n={n}: {} certificates, LP edges {lp}", all.len());
    }
    Ok(())
}
