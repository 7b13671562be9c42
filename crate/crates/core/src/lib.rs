//! Exact rational toolkit for the clique polytope of complete n-partite
//! graphs with two vertices per part.
//!
//! The polytope `Ω_n` lives in `Q^{4n²}` and is the convex hull of the 0/1
//! points `X_{ijpq} = [p = ρ(i)][q = ρ(j)]`, one per map `ρ: {1..n} → {1,2}`.
//! Every such `ρ` is simultaneously an n-clique of the complete 2-per-part
//! multipartite graph and a model of a 2CNF formula.
//!
//! Modules:
//!
//! * [`graph2p`]: graphs, cliques, the 2CNF reduction and a 2SAT solver.
//! * [`omega`]: vertices of `Ω_n`, the defining equalities, reduced coordinates.
//! * [`polyhedra`]: exact affine rank, double-description hulls, simplex LP,
//!   supporting-hyperplane face tests and the V/H text format.
//! * [`neighborly`]: separating-form certificates that every vertex pair is an edge.
//! * [`census`]: the symmetry group, the excluded-pair cases of `Ω_3`
//!   and facet censuses.
//! * [`cli`]: the `omega` command line front end.
//!
//! ## Examples
//!
//! ```bash
//! cargo run --example clique_2sat        # cliques through 2SAT
//! cargo run --example omega_vertices     # vertices, equalities, reduced coordinates
//! cargo run --example dimension          # affine rank for n = 2..6
//! cargo run --example edge_certificates  # separating forms for vertex pairs
//! cargo run --example regular_hulls      # simplex, cube, cross-polytope
//! cargo run --example lp_and_faces       # exact LP and the face test
//! cargo run --example omega3_cases       # the 28 excluded pairs of Ω_3
//! cargo run --release --example facet_census -- 5
//! cargo run --example cli_tour           # the command line, in-process
//! ```

pub mod census;
pub mod cli;
pub mod error;
pub mod graph2p;
pub mod limits;
pub mod neighborly;
pub mod omega;
pub mod polyhedra;
pub mod rational;

pub use error::{Error, Result};
pub use graph2p::{Assignment, Graph2P, VertexRef};
pub use limits::Limits;
pub use rational::Rational;
