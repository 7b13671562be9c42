//! Facet censuses of `Ω_n` and the `Ω_3` excluded-pair analysis.

pub mod omega3;
pub mod symmetry;

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph2p::Assignment;
use crate::limits::Limits;
use crate::omega::reduced_vertices;
use crate::polyhedra::{convex_hull_facets, LinearForm};

pub use omega3::{
    analyze_pair, case_disjoint_form, case_facets, case_shared_edge_form,
    case_shared_vertex_witness, classify_pair, CaseReport, PairClass,
};
pub use symmetry::{orbit, Symmetry};

/// One facet `coeffs · y ≥ rhs` in reduced coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetEntry {
    #[serde(flatten)]
    pub form: LinearForm,
    pub vertices_on: usize,
    /// Indices of the tight vertices, in assignment order.
    #[serde(skip)]
    pub incidence: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orbit {
    pub size: usize,
    /// Index into `facets` of the first member.
    pub representative: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub n: usize,
    pub facets: Vec<FacetEntry>,
    pub facet_count: usize,
    /// Number of facets through each vertex, in assignment order.
    pub per_vertex_incidence: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub orbits: Option<Vec<Orbit>>,
}

impl CensusReport {
    /// The common value of `per_vertex_incidence`, if it is constant.
    pub fn constant_incidence(&self) -> Option<usize> {
        let first = *self.per_vertex_incidence.first()?;
        self.per_vertex_incidence
            .iter()
            .all(|&k| k == first)
            .then_some(first)
    }

    /// Distinct values of `vertices_on`.
    pub fn facet_sizes(&self) -> BTreeSet<usize> {
        self.facets.iter().map(|f| f.vertices_on).collect()
    }

    pub fn forms(&self) -> Vec<LinearForm> {
        self.facets.iter().map(|f| f.form.clone()).collect()
    }
}

/// Runs the hull on the reduced vertices of `Ω_n` and tabulates incidences.
/// Facets come out in the hull's canonical order.
pub fn facet_census(n: usize, limits: &Limits, with_orbits: bool) -> Result<CensusReport> {
    if n < 2 {
        return Err(Error::invalid("a facet census needs n >= 2"));
    }
    limits.check_census(n)?;
    let v = reduced_vertices(n, limits)?;
    let h = convex_hull_facets(&v, limits)?;
    if !h.equalities.is_empty() {
        return Err(Error::Verification(format!(
            "reduced vertices of n = {n} are not full-dimensional"
        )));
    }
    let mut per_vertex = vec![0; v.len()];
    let facets: Vec<FacetEntry> = h
        .inequalities
        .iter()
        .enumerate()
        .map(|(k, form)| {
            let incidence = h.tight_points(k, &v);
            for &p in &incidence {
                per_vertex[p] += 1;
            }
            FacetEntry {
                form: form.clone(),
                vertices_on: incidence.len(),
                incidence,
            }
        })
        .collect();
    let orbits = with_orbits.then(|| facet_orbits(n, &facets));
    Ok(CensusReport {
        n,
        facet_count: facets.len(),
        facets,
        per_vertex_incidence: per_vertex,
        orbits,
    })
}

/// Orbits of facets under the symmetry group, found by moving vertex sets.
/// A facet of a full-dimensional polytope is fixed by its tight vertices, so
/// the image of a facet is the facet with the image vertex set.
pub fn facet_orbits(n: usize, facets: &[FacetEntry]) -> Vec<Orbit> {
    let nv = 1usize << n;
    let as_set = |inc: &[usize]| {
        let mut s = FixedBitSet::with_capacity(nv);
        inc.iter().for_each(|&p| s.insert(p));
        s
    };
    let sets: Vec<FixedBitSet> = facets.iter().map(|f| as_set(&f.incidence)).collect();
    let group = Symmetry::all(n);
    // image of each vertex index under each group element
    let images: Vec<Vec<usize>> = group
        .iter()
        .map(|g| {
            Assignment::all(n)
                .map(|a| g.apply(&a).index() as usize)
                .collect()
        })
        .collect();
    let mut seen = vec![false; facets.len()];
    let mut out = Vec::new();
    for k in 0..facets.len() {
        if seen[k] {
            continue;
        }
        let mut size = 0;
        for img in &images {
            let moved: Vec<usize> = facets[k].incidence.iter().map(|&p| img[p]).collect();
            let target = as_set(&moved);
            let j = sets
                .iter()
                .position(|s| *s == target)
                .expect("the group permutes facets");
            if !seen[j] {
                seen[j] = true;
                size += 1;
            }
        }
        out.push(Orbit {
            size,
            representative: k,
        });
    }
    out
}
