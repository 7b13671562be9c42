//! The V/H text format (`V-representation` / `H-representation`, `begin`,
//! `<rows> <dim+1> rational`, rows, `end`) and the matching JSON shapes.
//!
//! V rows are `1 x_1 … x_d`. H rows are `b c_1 … c_d` meaning
//! `b + c·x ≥ 0`; equalities are listed first and flagged by a
//! `linearity k 1 … k` line before `begin`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{HRep, LinearForm, VRep};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Representation {
    V(VRep),
    H(HRep),
}

pub fn write_vrep(v: &VRep) -> String {
    let mut out = String::from("V-representation\nbegin\n");
    let _ = writeln!(out, "{} {} rational", v.len(), v.dim() + 1);
    for p in v.points() {
        out.push('1');
        for x in p {
            let _ = write!(out, " {}", rational::format(x));
        }
        out.push('\n');
    }
    out.push_str("end\n");
    out
}

pub fn write_hrep(h: &HRep) -> String {
    let mut out = String::from("H-representation\n");
    let k = h.equalities.len();
    if k > 0 {
        let _ = write!(out, "linearity {k}");
        for i in 1..=k {
            let _ = write!(out, " {i}");
        }
        out.push('\n');
    }
    out.push_str("begin\n");
    let _ = writeln!(out, "{} {} rational", k + h.inequalities.len(), h.dim + 1);
    for f in h.equalities.iter().chain(&h.inequalities) {
        out.push_str(&rational::format(&-f.rhs.clone()));
        for c in &f.coeffs {
            let _ = write!(out, " {}", rational::format(c));
        }
        out.push('\n');
    }
    out.push_str("end\n");
    out
}

pub fn parse_text(text: &str) -> Result<Representation> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('*'));
    let err = |m: &str| Error::Parse(m.to_string());

    let kind = lines.next().ok_or_else(|| err("empty input"))?;
    let is_v = match kind {
        "V-representation" => true,
        "H-representation" => false,
        other => return Err(Error::Parse(format!("unknown header {other:?}"))),
    };

    let mut linearity: Vec<usize> = Vec::new();
    loop {
        let l = lines.next().ok_or_else(|| err("missing begin"))?;
        if l == "begin" {
            break;
        }
        if let Some(rest) = l.strip_prefix("linearity") {
            let nums = rest
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| err("bad linearity line")))
                .collect::<Result<Vec<_>>>()?;
            let (&count, idx) = nums
                .split_first()
                .ok_or_else(|| err("empty linearity line"))?;
            if idx.len() != count {
                return Err(err("linearity count does not match its index list"));
            }
            linearity = idx.to_vec();
        }
    }

    let counts: Vec<&str> = lines
        .next()
        .ok_or_else(|| err("missing size line"))?
        .split_whitespace()
        .collect();
    if counts.len() != 3 || !matches!(counts[2], "rational" | "integer") {
        return Err(err("size line must be `<rows> <cols> rational`"));
    }
    let rows: usize = counts[0].parse().map_err(|_| err("bad row count"))?;
    let cols: usize = counts[1].parse().map_err(|_| err("bad column count"))?;
    if cols == 0 {
        return Err(err("column count must be at least 1"));
    }

    let mut data: Vec<Vec<Rational>> = Vec::with_capacity(rows);
    for l in lines.by_ref() {
        if l == "end" {
            break;
        }
        let row = l
            .split_whitespace()
            .map(rational::parse)
            .collect::<Result<Vec<_>>>()?;
        if row.len() != cols {
            return Err(Error::Parse(format!(
                "row has {} entries, expected {cols}",
                row.len()
            )));
        }
        data.push(row);
    }
    if data.len() != rows {
        return Err(Error::Parse(format!(
            "expected {rows} rows, found {}",
            data.len()
        )));
    }

    let dim = cols - 1;
    if is_v {
        let mut points = Vec::with_capacity(rows);
        for r in data {
            if r[0] != rational::int(1) {
                return Err(err(
                    "only points (leading 1) are supported in V-representations",
                ));
            }
            points.push(r[1..].to_vec());
        }
        return Ok(Representation::V(VRep::new(dim, points)?));
    }
    let mut inequalities = Vec::new();
    let mut equalities = Vec::new();
    for (k, r) in data.into_iter().enumerate() {
        let f = LinearForm::new(r[1..].to_vec(), -r[0].clone());
        if linearity.contains(&(k + 1)) {
            equalities.push(f);
        } else {
            inequalities.push(f);
        }
    }
    Ok(Representation::H(HRep::new(dim, inequalities, equalities)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VRepJson {
    pub dim: usize,
    pub points: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HRepJson {
    pub dim: usize,
    pub inequalities: Vec<LinearForm>,
    pub equalities: Vec<LinearForm>,
}

impl From<&VRep> for VRepJson {
    fn from(v: &VRep) -> Self {
        VRepJson {
            dim: v.dim(),
            points: v
                .points()
                .iter()
                .map(|p| p.iter().map(rational::format).collect())
                .collect(),
        }
    }
}

impl TryFrom<&VRepJson> for VRep {
    type Error = Error;

    fn try_from(j: &VRepJson) -> Result<Self> {
        let points = j
            .points
            .iter()
            .map(|p| {
                p.iter()
                    .map(|s| rational::parse(s))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        VRep::new(j.dim, points)
    }
}

impl From<&HRep> for HRepJson {
    fn from(h: &HRep) -> Self {
        HRepJson {
            dim: h.dim,
            inequalities: h.inequalities.clone(),
            equalities: h.equalities.clone(),
        }
    }
}

impl TryFrom<&HRepJson> for HRep {
    type Error = Error;

    fn try_from(j: &HRepJson) -> Result<Self> {
        HRep::new(j.dim, j.inequalities.clone(), j.equalities.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn vrep_text() {
        let v = VRep::new(
            2,
            vec![vec![frac(1, 2), frac(-3, 1)], vec![frac(0, 1), frac(1, 1)]],
        )
        .unwrap();
        let t = write_vrep(&v);
        assert_eq!(
            t,
            "V-representation\nbegin\n2 3 rational\n1 1/2 -3\n1 0 1\nend\n"
        );
        assert_eq!(parse_text(&t).unwrap(), Representation::V(v));
    }

    #[test]
    fn hrep_text_with_linearity() {
        let h = HRep::new(
            2,
            vec![LinearForm::from_integers(&[1, 0], 0)],
            vec![LinearForm::new(vec![frac(1, 1), frac(1, 1)], frac(1, 2))],
        )
        .unwrap();
        let t = write_hrep(&h);
        assert_eq!(
            t,
            "H-representation\nlinearity 1 1\nbegin\n2 3 rational\n-1/2 1 1\n0 1 0\nend\n"
        );
        assert_eq!(parse_text(&t).unwrap(), Representation::H(h));
    }

    #[test]
    fn malformed_text() {
        assert!(parse_text("").is_err());
        assert!(parse_text("X-representation\nbegin\n").is_err());
        assert!(parse_text("V-representation\nbegin\n1 3 rational\n1 0\nend\n").is_err());
        assert!(parse_text("V-representation\nbegin\n1 2 rational\n0 1\nend\n").is_err());
        assert!(parse_text("V-representation\nbegin\n2 2 rational\n1 1\nend\n").is_err());
    }
}
