//! Cliques of a 2-per-part multipartite graph through 2SAT.
//!
//! Deleting cross edges from the complete graph turns each missing edge into
//! a 2-clause; the formula's models are exactly the n-cliques.

use omega_polytope::graph2p::{
    complete_graph, enumerate_cliques, find_clique, is_clique, to_2cnf, Edge,
};
use omega_polytope::{Limits, VertexRef};

fn v(part: usize, pos: u8) -> VertexRef {
    VertexRef::new(part, pos).unwrap()
}

fn main() -> omega_polytope::Result<()> {
    let mut g = complete_graph(4)?;
    g.remove_edge(v(1, 1), v(2, 1))?;
    g.remove_edge(v(2, 2), v(3, 1))?;
    g.remove_edge(v(3, 2), v(4, 2))?;
    g.remove_edge(v(1, 2), v(4, 1))?;

    let cnf = to_2cnf(&g);
    print!("{}", cnf.to_dimacs());

    let found = find_clique(&g);
    println!(
        "2SAT clique: {}",
        found.as_ref().map_or("none".into(), |a| a.to_string())
    );
    if let Some(a) = &found {
        assert!(is_clique(&g, a)?);
    }
    let all = enumerate_cliques(&g, &Limits::default())?;
    println!("all cliques ({}):", all.len());
    for a in &all {
        println!("  {a}");
    }

    // Forbidding both vertices of part 1 against (2,1) and (2,2) leaves nothing.
    for pos in [1, 2] {
        for other in [1, 2] {
            g.remove_edge(v(1, pos), v(2, other))?;
        }
    }
    let e = Edge::new(v(1, 1), v(2, 2))?;
    println!(
        "after deleting every edge between parts 1 and 2 (e.g. {e}): {:?}",
        find_clique(&g)
    );
    Ok(())
}
