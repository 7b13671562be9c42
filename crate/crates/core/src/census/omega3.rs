//! The three kinds of excluded vertex pairs of `Ω_3`.
//!
//! Removing two of the eight vertices of `Ω_3` leaves six. Whether those six
//! span a face depends only on how the two excluded triangles meet:
//!
//! * no common vertex: the six lie on the facet
//!   `X_1211 + X_1311 + X_2311 + X_1222 + X_1322 + X_2322 = 1`;
//! * a common edge: the six lie on the face `X_1211 = 0`;
//! * a single common vertex: not a face, as the form
//!   `X_1222 + X_1312 + X_1212 + X_1221` is 1 on the six but 0 and 2 on the
//!   excluded pair.
//!
//! Each form is given for one representative pair and carried to any other
//! pair of the same kind by a group element.

use num_traits::{One, Zero};

use super::symmetry::Symmetry;
use crate::error::{Error, Result};
use crate::graph2p::Assignment;
use crate::limits::Limits;
use crate::omega::{reduce_form, reduced_vertices, vertex_from_assignment, CoordIndex};
use crate::polyhedra::{is_face, FaceVerdict, LinearForm};
use crate::rational::{self, Rational};

const N: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairClass {
    Disjoint,
    /// The excluded triangles share the edge between these parts (`i < j`).
    SharedEdge(usize, usize),
    /// The excluded triangles share only their vertex in this part.
    SharedVertex(usize),
}

impl PairClass {
    pub fn name(&self) -> &'static str {
        match self {
            PairClass::Disjoint => "Disjoint",
            PairClass::SharedEdge(..) => "SharedEdge",
            PairClass::SharedVertex(_) => "SharedVertex",
        }
    }
}

fn check_pair(a: &Assignment, b: &Assignment) -> Result<()> {
    a.check_len(N)?;
    b.check_len(N)?;
    if a == b {
        return Err(Error::invalid("the excluded vertices must be distinct"));
    }
    Ok(())
}

/// Classifies a pair of distinct `Ω_3` vertices by the parts where they agree.
pub fn classify_pair(a: &Assignment, b: &Assignment) -> Result<PairClass> {
    check_pair(a, b)?;
    let agree: Vec<usize> = (1..=N).filter(|&i| a.get(i) == b.get(i)).collect();
    Ok(match agree.as_slice() {
        [] => PairClass::Disjoint,
        [i] => PairClass::SharedVertex(*i),
        [i, j] => PairClass::SharedEdge(*i, *j),
        _ => unreachable!("distinct assignments"),
    })
}

fn representative(class: PairClass) -> (Assignment, Assignment) {
    let a = |s: &str| s.parse::<Assignment>().expect("valid");
    match class {
        PairClass::Disjoint => (a("1,1,1"), a("2,2,2")),
        PairClass::SharedEdge(..) => (a("1,1,1"), a("1,1,2")),
        PairClass::SharedVertex(_) => (a("1,1,1"), a("1,2,2")),
    }
}

fn form_from_terms(terms: &[(usize, usize, u8, u8)], rhs: i64) -> LinearForm {
    let mut coeffs = vec![Rational::zero(); 4 * N * N];
    for &(i, j, p, q) in terms {
        coeffs[CoordIndex::new(i, j, p, q).flat(N)] += Rational::one();
    }
    LinearForm::new(coeffs, rational::int(rhs))
}

fn representative_form(class: PairClass) -> LinearForm {
    match class {
        PairClass::Disjoint => form_from_terms(
            &[
                (1, 2, 1, 1),
                (1, 3, 1, 1),
                (2, 3, 1, 1),
                (1, 2, 2, 2),
                (1, 3, 2, 2),
                (2, 3, 2, 2),
            ],
            1,
        ),
        PairClass::SharedEdge(..) => form_from_terms(&[(1, 2, 1, 1)], 0),
        PairClass::SharedVertex(_) => {
            form_from_terms(&[(1, 2, 2, 2), (1, 3, 1, 2), (1, 2, 1, 2), (1, 2, 2, 1)], 1)
        }
    }
}

/// First group element sending the ordered pair `(a, b)` onto the
/// representative pair of its class.
pub fn transport(a: &Assignment, b: &Assignment) -> Result<Symmetry> {
    let class = classify_pair(a, b)?;
    let (ra, rb) = representative(class);
    Symmetry::all(N)
        .into_iter()
        .find(|g| g.apply(a) == ra && g.apply(b) == rb)
        .ok_or_else(|| Error::Verification(format!("no symmetry maps {a} / {b} to {ra} / {rb}")))
}

/// Moves every coefficient on `X_{ijpq}` with `i > j` onto `X_{jiqp}`.
pub fn fold_upper(n: usize, f: &LinearForm) -> LinearForm {
    let mut coeffs = vec![Rational::zero(); f.dim()];
    for c in CoordIndex::all(n) {
        let v = &f.coeffs[c.flat(n)];
        if v.is_zero() {
            continue;
        }
        let target = if c.i > c.j { c.transposed() } else { c };
        coeffs[target.flat(n)] += v;
    }
    LinearForm::new(coeffs, f.rhs.clone())
}

fn transported_form(a: &Assignment, b: &Assignment) -> Result<(PairClass, LinearForm)> {
    let class = classify_pair(a, b)?;
    let g = transport(a, b)?;
    let f = g.inverse().apply_form(&representative_form(class));
    Ok((class, fold_upper(N, &f)))
}

fn evaluate(f: &LinearForm, x: &Assignment) -> Rational {
    f.eval(vertex_from_assignment(N, x).expect("n = 3").coords())
}

fn others(a: &Assignment, b: &Assignment) -> Vec<Assignment> {
    Assignment::all(N).filter(|z| z != a && z != b).collect()
}

fn others_indices(a: &Assignment, b: &Assignment) -> Vec<usize> {
    others(a, b).iter().map(|z| z.index() as usize).collect()
}

fn ensure_values(
    f: &LinearForm,
    a: &Assignment,
    b: &Assignment,
    va: i64,
    vb: i64,
    rest: i64,
) -> Result<()> {
    let got_a = evaluate(f, a);
    let got_b = evaluate(f, b);
    if got_a != rational::int(va) || got_b != rational::int(vb) {
        return Err(Error::Verification(format!(
            "form takes {got_a} / {got_b} on the excluded pair, expected {va} / {vb}"
        )));
    }
    for z in others(a, b) {
        let v = evaluate(f, &z);
        if v != rational::int(rest) {
            return Err(Error::Verification(format!(
                "form takes {v} on remaining vertex {z}, expected {rest}"
            )));
        }
    }
    Ok(())
}

fn six_vertex_verdict(a: &Assignment, b: &Assignment) -> Result<FaceVerdict> {
    let v = reduced_vertices(N, &Limits::default())?;
    is_face(&v, &others_indices(a, b))
}

fn wrong_class(expected: &str, got: PairClass) -> Error {
    Error::invalid(format!("pair is {}, not {expected}", got.name()))
}

/// The facet through the six vertices left after removing a pair of
/// vertex-disjoint triangles, as `F ≥ 1` with `F = 3` on the pair.
pub fn case_disjoint_form(a: &Assignment, b: &Assignment) -> Result<LinearForm> {
    let (class, f) = transported_form(a, b)?;
    if class != PairClass::Disjoint {
        return Err(wrong_class("Disjoint", class));
    }
    ensure_values(&f, a, b, 3, 3, 1)?;
    match six_vertex_verdict(a, b)? {
        FaceVerdict::Facet(g) if g == reduce_form(N, &f)?.canonical_inequality() => Ok(f),
        other => Err(Error::Verification(format!(
            "six vertices of a disjoint pair gave {} instead of the expected facet",
            other.label()
        ))),
    }
}

/// `X_{ijpq} ≥ 0` for the shared edge; zero on the six remaining vertices
/// and one on the excluded pair.
pub fn case_shared_edge_form(a: &Assignment, b: &Assignment) -> Result<LinearForm> {
    let (class, f) = transported_form(a, b)?;
    if !matches!(class, PairClass::SharedEdge(..)) {
        return Err(wrong_class("SharedEdge", class));
    }
    ensure_values(&f, a, b, 1, 1, 0)?;
    Ok(f)
}

/// A form equal to 1 on the six remaining vertices, 0 on `a` and 2 on `b`.
/// Since the midpoint of `a` and `b` then has the same value as the six,
/// the six cannot be cut off from the pair by a supporting hyperplane.
pub fn case_shared_vertex_witness(a: &Assignment, b: &Assignment) -> Result<LinearForm> {
    let (class, f) = transported_form(a, b)?;
    if !matches!(class, PairClass::SharedVertex(_)) {
        return Err(wrong_class("SharedVertex", class));
    }
    ensure_values(&f, a, b, 0, 2, 1)?;
    match six_vertex_verdict(a, b)? {
        FaceVerdict::NotFace(_) => Ok(f),
        other => Err(Error::Verification(format!(
            "six vertices of a shared-vertex pair gave {} instead of NotFace",
            other.label()
        ))),
    }
}

/// Everything computed for one excluded pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseReport {
    pub a: Assignment,
    pub b: Assignment,
    pub class: PairClass,
    /// Full-coordinate form from the case analysis.
    pub form: LinearForm,
    pub value_a: Rational,
    pub value_b: Rational,
    pub other_values: Vec<(Assignment, Rational)>,
    /// LP face test on the six remaining vertices.
    pub verdict: FaceVerdict,
}

pub fn analyze_pair(a: &Assignment, b: &Assignment) -> Result<CaseReport> {
    let class = classify_pair(a, b)?;
    let form = match class {
        PairClass::Disjoint => case_disjoint_form(a, b)?,
        PairClass::SharedEdge(..) => case_shared_edge_form(a, b)?,
        PairClass::SharedVertex(_) => case_shared_vertex_witness(a, b)?,
    };
    let verdict = six_vertex_verdict(a, b)?;
    Ok(CaseReport {
        value_a: evaluate(&form, a),
        value_b: evaluate(&form, b),
        other_values: others(a, b)
            .into_iter()
            .map(|z| (z.clone(), evaluate(&form, &z)))
            .collect(),
        a: a.clone(),
        b: b.clone(),
        class,
        form,
        verdict,
    })
}

/// All 28 unordered pairs of `Ω_3` vertices, lexicographic.
pub fn all_pairs() -> Vec<(Assignment, Assignment)> {
    let v: Vec<Assignment> = Assignment::all(N).collect();
    let mut out = Vec::new();
    for (k, a) in v.iter().enumerate() {
        for b in &v[k + 1..] {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

/// Canonical reduced facet inequalities found by the case analysis: every
/// disjoint-pair facet plus every shared-edge form whose six vertices form a
/// facet. Sorted and deduplicated.
pub fn case_facets() -> Result<Vec<LinearForm>> {
    let mut out = Vec::new();
    for (a, b) in all_pairs() {
        let r = analyze_pair(&a, &b)?;
        let keep = match r.class {
            PairClass::Disjoint => true,
            PairClass::SharedEdge(..) => matches!(r.verdict, FaceVerdict::Facet(_)),
            PairClass::SharedVertex(_) => false,
        };
        if keep {
            out.push(reduce_form(N, &r.form)?.canonical_inequality());
        }
    }
    out.sort_by(LinearForm::lex_cmp);
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omega::display_form;

    fn a(s: &str) -> Assignment {
        s.parse().unwrap()
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            classify_pair(&a("1,1,1"), &a("2,2,2")).unwrap(),
            PairClass::Disjoint
        );
        assert_eq!(
            classify_pair(&a("1,1,1"), &a("1,1,2")).unwrap(),
            PairClass::SharedEdge(1, 2)
        );
        assert_eq!(
            classify_pair(&a("1,1,1"), &a("1,2,2")).unwrap(),
            PairClass::SharedVertex(1)
        );
        assert!(classify_pair(&a("1,1,1"), &a("1,1,1")).is_err());
        assert!(classify_pair(&a("1,1"), &a("2,2")).is_err());
    }

    #[test]
    fn class_counts() {
        let mut counts = [0; 3];
        for (x, y) in all_pairs() {
            match classify_pair(&x, &y).unwrap() {
                PairClass::Disjoint => counts[0] += 1,
                PairClass::SharedEdge(..) => counts[1] += 1,
                PairClass::SharedVertex(_) => counts[2] += 1,
            }
        }
        assert_eq!(counts, [4, 12, 12]);
    }

    #[test]
    fn representative_forms_are_the_quoted_ones() {
        let f = case_disjoint_form(&a("1,1,1"), &a("2,2,2")).unwrap();
        assert_eq!(
            display_form(3, &f, "="),
            "X_{1211} + X_{1222} + X_{1311} + X_{1322} + X_{2311} + X_{2322} = 1"
        );
        let f = case_shared_edge_form(&a("1,1,1"), &a("1,1,2")).unwrap();
        assert_eq!(display_form(3, &f, "="), "X_{1211} = 0");
        let f = case_shared_vertex_witness(&a("1,1,1"), &a("1,2,2")).unwrap();
        assert_eq!(
            display_form(3, &f, "="),
            "X_{1212} + X_{1221} + X_{1222} + X_{1312} = 1"
        );
    }

    #[test]
    fn wrong_class_is_rejected() {
        assert!(case_disjoint_form(&a("1,1,1"), &a("1,1,2")).is_err());
        assert!(case_shared_edge_form(&a("1,1,1"), &a("2,2,2")).is_err());
        assert!(case_shared_vertex_witness(&a("1,1,1"), &a("2,2,2")).is_err());
    }

    #[test]
    fn disjoint_form_is_sum_of_clique_edges() {
        for (x, y) in all_pairs() {
            if classify_pair(&x, &y).unwrap() != PairClass::Disjoint {
                continue;
            }
            let mut terms = Vec::new();
            for c in [&x, &y] {
                for i in 1..=3 {
                    for j in i + 1..=3 {
                        terms.push((i, j, c.get(i), c.get(j)));
                    }
                }
            }
            assert_eq!(
                case_disjoint_form(&x, &y).unwrap(),
                form_from_terms(&terms, 1)
            );
        }
    }

    #[test]
    fn shared_edge_form_names_the_shared_edge() {
        let f = case_shared_edge_form(&a("2,1,2"), &a("2,2,2")).unwrap();
        // parts 1 and 3 agree on positions 2 and 2
        assert_eq!(display_form(3, &f, "="), "X_{1322} = 0");
    }

    #[test]
    fn transport_order_matters() {
        let g = transport(&a("1,2,2"), &a("1,1,1")).unwrap();
        assert_eq!(g.apply(&a("1,2,2")), a("1,1,1"));
        assert_eq!(g.apply(&a("1,1,1")), a("1,2,2"));
        let f = case_shared_vertex_witness(&a("1,2,2"), &a("1,1,1")).unwrap();
        assert_eq!(evaluate(&f, &a("1,2,2")), rational::int(0));
        assert_eq!(evaluate(&f, &a("1,1,1")), rational::int(2));
    }
}
