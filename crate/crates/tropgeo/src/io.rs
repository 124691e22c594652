//! JSON file schemas and semantic validation.
//!
//! Rationals travel as `"p/q"` strings in every combinatorial file, so
//! exactness survives I/O. The three schemas are:
//!
//! * polynomial: `{"n": 2, "terms": [{"a": [0,0], "c": "1/2", "coeff": [re,im]?}]}`
//! * graph: `{"n": 2, "vertices": [["0","0"]], "edges": [{"kind": "ray", "u": 0, "dir": [1,0], "weight": 1}]}`
//! * family: `{"n": 2, "terms": [{"a": [0,0], "coeff": [1.0,0.0], "gamma": "1"}]}`

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::amoeba::{FamilyTerm, MonomialFamily};
use crate::curve::{BalancedGraph, Edge, EdgeKind};
use crate::geom::Direction;
use crate::hypersurface::{Term, TropicalPolynomial};
use crate::ratio::{format_rat, parse_rat};
use crate::{Complex64, Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PolyTermFile {
    pub a: Vec<i64>,
    pub c: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coeff: Option<[f64; 2]>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PolynomialFile {
    pub n: usize,
    pub terms: Vec<PolyTermFile>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct EdgeFile {
    pub kind: String,
    pub u: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<usize>,
    pub dir: Vec<i64>,
    pub weight: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct GraphFile {
    pub n: usize,
    pub vertices: Vec<Vec<String>>,
    pub edges: Vec<EdgeFile>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct FamilyTermFile {
    pub a: Vec<i64>,
    pub coeff: [f64; 2],
    pub gamma: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct FamilyFile {
    pub n: usize,
    pub terms: Vec<FamilyTermFile>,
}

impl PolynomialFile {
    pub fn into_polynomial(self) -> Result<TropicalPolynomial> {
        let terms = self
            .terms
            .into_iter()
            .map(|t| {
                Ok(Term {
                    exponent: t.a,
                    valuation: parse_rat(&t.c)?,
                    coefficient: t.coeff.map(|[re, im]| Complex64::new(re, im)),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        TropicalPolynomial::with_terms(self.n, terms)
    }

    pub fn from_polynomial(p: &TropicalPolynomial) -> Self {
        Self {
            n: p.dimension(),
            terms: p
                .terms()
                .iter()
                .map(|t| PolyTermFile {
                    a: t.exponent.clone(),
                    c: format_rat(&t.valuation),
                    coeff: t.coefficient.map(|c| [c.re, c.im]),
                })
                .collect(),
        }
    }
}

impl GraphFile {
    pub fn into_graph(self) -> Result<BalancedGraph> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| v.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let kind = match e.kind.as_str() {
                    "segment" => EdgeKind::Segment {
                        u: e.u,
                        v: e.v.ok_or_else(|| {
                            Error::InvalidInput("segment edge needs a v vertex".into())
                        })?,
                    },
                    "ray" => EdgeKind::Ray { u: e.u },
                    other => {
                        return Err(Error::InvalidInput(format!(
                            "unknown edge kind {other:?}"
                        )))
                    }
                };
                Ok(Edge {
                    kind,
                    direction: Direction::new(e.dir.clone())?,
                    weight: e.weight,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        BalancedGraph::new(self.n, vertices, edges)
    }

    pub fn from_graph(g: &BalancedGraph) -> Self {
        Self {
            n: g.dimension(),
            vertices: g
                .vertices()
                .iter()
                .map(|v| v.iter().map(format_rat).collect())
                .collect(),
            edges: g
                .edges()
                .iter()
                .map(|e| {
                    let (kind, u, v) = match e.kind {
                        EdgeKind::Segment { u, v } => ("segment", u, Some(v)),
                        EdgeKind::Ray { u } => ("ray", u, None),
                    };
                    EdgeFile {
                        kind: kind.to_string(),
                        u,
                        v,
                        dir: e.direction.components().to_vec(),
                        weight: e.weight,
                    }
                })
                .collect(),
        }
    }
}

impl FamilyFile {
    pub fn into_family(self) -> Result<MonomialFamily> {
        let terms = self
            .terms
            .into_iter()
            .map(|t| {
                Ok(FamilyTerm {
                    exponent: t.a,
                    coefficient: Complex64::new(t.coeff[0], t.coeff[1]),
                    valuation: parse_rat(&t.gamma)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        MonomialFamily::new(self.n, terms)
    }

    pub fn from_family(f: &MonomialFamily) -> Self {
        Self {
            n: f.dimension(),
            terms: f
                .terms()
                .iter()
                .map(|t| FamilyTermFile {
                    a: t.exponent.clone(),
                    coeff: [t.coefficient.re, t.coefficient.im],
                    gamma: format_rat(&t.valuation),
                })
                .collect(),
        }
    }
}

/// What a JSON document looks like, decided by structural sniffing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileKind {
    Polynomial,
    Graph,
    Family,
}

/// Guesses the schema of a JSON document from its fields.
pub fn sniff_kind(json: &serde_json::Value) -> Option<FileKind> {
    let obj = json.as_object()?;
    if obj.contains_key("edges") {
        return Some(FileKind::Graph);
    }
    let terms = obj.get("terms")?.as_array()?;
    match terms.first() {
        Some(t) if t.get("gamma").is_some() => Some(FileKind::Family),
        Some(_) => Some(FileKind::Polynomial),
        None => Some(FileKind::Polynomial),
    }
}

/// Semantic diagnostics for a parsed document; empty means valid.
///
/// Unlike the constructors, which fail on the first defect, this pass
/// collects every problem it can find.
pub fn validate_json(text: &str) -> Result<Vec<String>> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| Error::InvalidInput(format!("not valid JSON: {e}")))?;
    let kind = sniff_kind(&value)
        .ok_or_else(|| Error::InvalidInput("unrecognized document shape".into()))?;
    let mut diags = Vec::new();
    match kind {
        FileKind::Polynomial => {
            let file: PolynomialFile = serde_json::from_value(value)
                .map_err(|e| Error::InvalidInput(format!("polynomial schema: {e}")))?;
            validate_polynomial(&file, &mut diags);
        }
        FileKind::Family => {
            let file: FamilyFile = serde_json::from_value(value)
                .map_err(|e| Error::InvalidInput(format!("family schema: {e}")))?;
            validate_family(&file, &mut diags);
        }
        FileKind::Graph => {
            let file: GraphFile = serde_json::from_value(value)
                .map_err(|e| Error::InvalidInput(format!("graph schema: {e}")))?;
            validate_graph(&file, &mut diags);
        }
    }
    Ok(diags)
}

fn validate_polynomial(file: &PolynomialFile, diags: &mut Vec<String>) {
    if file.n == 0 {
        diags.push("dimension must be positive".into());
    }
    if file.terms.is_empty() {
        diags.push("support is empty".into());
    }
    for (i, t) in file.terms.iter().enumerate() {
        if t.a.len() != file.n {
            diags.push(format!("term {i}: exponent has wrong dimension"));
        }
        if let Err(e) = parse_rat(&t.c) {
            diags.push(format!("term {i}: {e}"));
        }
    }
    for i in 0..file.terms.len() {
        for j in i + 1..file.terms.len() {
            if file.terms[i].a == file.terms[j].a {
                diags.push(format!("duplicate support point {:?}", file.terms[i].a));
            }
        }
    }
}

fn validate_family(file: &FamilyFile, diags: &mut Vec<String>) {
    if !(1..=2).contains(&file.n) {
        diags.push("families must have one or two variables".into());
    }
    if file.terms.len() < 2 {
        diags.push("family needs at least two terms".into());
    }
    for (i, t) in file.terms.iter().enumerate() {
        if t.a.len() != file.n {
            diags.push(format!("term {i}: exponent has wrong dimension"));
        }
        if t.coeff == [0.0, 0.0] {
            diags.push(format!("term {i}: zero coefficient"));
        }
        if let Err(e) = parse_rat(&t.gamma) {
            diags.push(format!("term {i}: {e}"));
        }
    }
    for i in 0..file.terms.len() {
        for j in i + 1..file.terms.len() {
            if file.terms[i].a == file.terms[j].a {
                diags.push(format!("duplicate support point {:?}", file.terms[i].a));
            }
        }
    }
}

fn validate_graph(file: &GraphFile, diags: &mut Vec<String>) {
    if file.n == 0 {
        diags.push("dimension must be positive".into());
    }
    for (i, v) in file.vertices.iter().enumerate() {
        if v.len() != file.n {
            diags.push(format!("vertex {i}: wrong dimension"));
        }
        for c in v {
            if let Err(e) = parse_rat(c) {
                diags.push(format!("vertex {i}: {e}"));
            }
        }
    }
    for (i, e) in file.edges.iter().enumerate() {
        if e.dir.len() != file.n {
            diags.push(format!("edge {i}: direction has wrong dimension"));
        }
        let mut g: i64 = 0;
        for &x in &e.dir {
            g = g.gcd(&x);
        }
        if g == 0 {
            diags.push(format!("edge {i}: zero direction"));
        } else if g != 1 {
            diags.push(format!("edge {i}: non-primitive direction {:?}", e.dir));
        }
        if e.weight == 0 {
            diags.push(format!("edge {i}: zero weight"));
        }
        match e.kind.as_str() {
            "segment" => {
                let Some(v) = e.v else {
                    diags.push(format!("edge {i}: segment without v"));
                    continue;
                };
                if e.u >= file.vertices.len() || v >= file.vertices.len() {
                    diags.push(format!("edge {i}: vertex out of range"));
                    continue;
                }
                // direction must be the primitive vector of the difference
                let pu: Result<Vec<crate::Rat>> =
                    file.vertices[e.u].iter().map(|s| parse_rat(s)).collect();
                let pv: Result<Vec<crate::Rat>> =
                    file.vertices[v].iter().map(|s| parse_rat(s)).collect();
                if let (Ok(pu), Ok(pv)) = (pu, pv) {
                    if pu == pv {
                        diags.push(format!("edge {i}: endpoints coincide"));
                    } else {
                        let delta: Vec<crate::Rat> =
                            pv.iter().zip(&pu).map(|(a, b)| a - b).collect();
                        match crate::ratio::primitive_integer_vector(&delta) {
                            Ok(prim) if prim != e.dir => diags.push(format!(
                                "edge {i}: direction {:?} is not parallel to the segment",
                                e.dir
                            )),
                            _ => {}
                        }
                    }
                }
            }
            "ray" => {
                if e.u >= file.vertices.len() {
                    diags.push(format!("edge {i}: vertex out of range"));
                }
            }
            other => diags.push(format!("edge {i}: unknown kind {other:?}")),
        }
    }
    let mut covered = vec![false; file.vertices.len()];
    for e in &file.edges {
        if e.u < covered.len() {
            covered[e.u] = true;
        }
        if let Some(v) = e.v {
            if v < covered.len() {
                covered[v] = true;
            }
        }
    }
    for (i, c) in covered.iter().enumerate() {
        if !c {
            diags.push(format!("vertex {i} is isolated"));
        }
    }
}
