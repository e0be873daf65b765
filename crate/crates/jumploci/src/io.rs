//! JSON and text input formats.  Rationals travel as strings like
//! "3/4" so nothing is ever rounded.

use std::str::FromStr;

use serde::Deserialize;

use crate::error::Error;
use crate::exactlin::{Mat, QMat, Rat};
use crate::resonance::{Field, GradedAlgebra};
use crate::simplicial::{face, Coeffs, SimplicialComplex};
use crate::varieties::{
    LaurentHypersurface, RationalSubspace, TranslatedTorus, VarietyDescription,
};

pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    Rat::from_str(s.trim()).map_err(|e| Error::Parse(format!("bad rational `{s}`: {e}")))
}

/// Comma-separated rationals: `1,1/2,-3`.
pub fn parse_rat_vec(s: &str) -> Result<Vec<Rat>, Error> {
    s.split(',').map(parse_rat).collect()
}

/// Semicolon-separated list of comma-separated vectors spanning a
/// subspace: `1,1,0;0,0,1`.
pub fn parse_subspace(s: &str, ambient: usize) -> Result<RationalSubspace, Error> {
    let mut vecs = Vec::new();
    for part in s.split(';') {
        let v = parse_rat_vec(part)?;
        if v.len() != ambient {
            return Err(Error::LengthMismatch(ambient, v.len()));
        }
        vecs.push(v);
    }
    Ok(RationalSubspace::span(ambient, &vecs))
}

/// `q`, `zp:<p>`, or `z`.
pub fn parse_coeffs(s: &str) -> Result<Coeffs, Error> {
    match s {
        "q" | "Q" => Ok(Coeffs::Q),
        "z" | "Z" => Ok(Coeffs::Z),
        _ => {
            let p = s
                .strip_prefix("zp:")
                .ok_or_else(|| Error::Parse(format!("unknown field tag `{s}`")))?
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad modulus in `{s}`")))?;
            Ok(Coeffs::Fp(p))
        }
    }
}

/// Same tags, but integer coefficients are not a field.
pub fn parse_field(s: &str) -> Result<Field, Error> {
    match parse_coeffs(s)? {
        Coeffs::Q => Ok(Field::Q),
        Coeffs::Fp(p) => Ok(Field::Fp(p)),
        Coeffs::Z => Err(Error::Parse("integer coefficients are not a field here".into())),
    }
}

#[derive(Deserialize)]
struct ComplexJson {
    #[serde(default)]
    vertices: Vec<u32>,
    facets: Vec<Vec<u32>>,
}

pub fn complex_from_json(text: &str) -> Result<SimplicialComplex, Error> {
    let parsed: ComplexJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("complex JSON: {e}")))?;
    let mut faces: Vec<_> = parsed.facets.iter().map(|f| face(f)).collect();
    for v in parsed.vertices {
        faces.push(face(&[v]));
    }
    Ok(SimplicialComplex::build(faces))
}

#[derive(Deserialize)]
struct TorusJson {
    q: Vec<String>,
    #[serde(rename = "L")]
    l: Vec<Vec<String>>,
}

#[derive(Deserialize)]
struct TermJson {
    exp: Vec<i64>,
    coef: String,
}

#[derive(Deserialize)]
struct HypersurfaceJson {
    terms: Vec<TermJson>,
}

#[derive(Deserialize)]
struct VarietyJson {
    n: usize,
    #[serde(default)]
    tori: Vec<TorusJson>,
    #[serde(default)]
    hypersurfaces: Vec<HypersurfaceJson>,
    #[serde(default)]
    points: Vec<Vec<String>>,
}

fn rat_vec_from_strings(v: &[String]) -> Result<Vec<Rat>, Error> {
    v.iter().map(|s| parse_rat(s)).collect()
}

pub fn variety_from_json(text: &str) -> Result<VarietyDescription, Error> {
    let parsed: VarietyJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("variety JSON: {e}")))?;
    let n = parsed.n;
    let mut w = VarietyDescription::new(n);
    for t in &parsed.tori {
        let q = rat_vec_from_strings(&t.q)?;
        if q.len() != n {
            return Err(Error::LengthMismatch(n, q.len()));
        }
        let mut vecs = Vec::new();
        for row in &t.l {
            let v = rat_vec_from_strings(row)?;
            if v.len() != n {
                return Err(Error::LengthMismatch(n, v.len()));
            }
            vecs.push(v);
        }
        w = w.with_torus(TranslatedTorus::new(q, RationalSubspace::span(n, &vecs)));
    }
    for h in &parsed.hypersurfaces {
        let mut terms = Vec::new();
        for t in &h.terms {
            if t.exp.len() != n {
                return Err(Error::LengthMismatch(n, t.exp.len()));
            }
            terms.push((t.exp.clone(), parse_rat(&t.coef)?));
        }
        w = w.with_hypersurface(LaurentHypersurface::new(n, terms));
    }
    for p in &parsed.points {
        let q = rat_vec_from_strings(p)?;
        if q.len() != n {
            return Err(Error::LengthMismatch(n, q.len()));
        }
        w = w.with_point(q);
    }
    Ok(w)
}

#[derive(Deserialize)]
struct ExteriorJson {
    gens: usize,
    top: usize,
    #[serde(default)]
    ideal: Vec<Vec<String>>,
    #[serde(default)]
    torsion: bool,
}

#[derive(Deserialize)]
struct AlgebraJson {
    #[serde(default)]
    field: Option<String>,
    #[serde(default)]
    dims: Option<Vec<usize>>,
    #[serde(default)]
    mult: Option<Vec<Vec<Vec<Vec<String>>>>>,
    #[serde(default)]
    torsion: bool,
    #[serde(default)]
    exterior: Option<ExteriorJson>,
}

pub fn algebra_from_json(text: &str, field_flag: Field) -> Result<GradedAlgebra, Error> {
    let parsed: AlgebraJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("algebra JSON: {e}")))?;
    let field = match &parsed.field {
        Some(tag) => parse_field(tag)?,
        None => field_flag,
    };
    if let Some(ext) = &parsed.exterior {
        let mut ideal = Vec::new();
        for row in &ext.ideal {
            ideal.push(rat_vec_from_strings(row)?);
        }
        return crate::resonance::exterior_mod_ideal(
            field,
            ext.gens,
            ext.top,
            &ideal,
            ext.torsion,
        );
    }
    let dims = parsed
        .dims
        .ok_or_else(|| Error::Parse("algebra JSON needs dims or exterior".into()))?;
    let raw = parsed
        .mult
        .ok_or_else(|| Error::Parse("algebra JSON needs mult or exterior".into()))?;
    let mut mult: Vec<Vec<QMat>> = Vec::new();
    for level in &raw {
        let mut tables = Vec::new();
        for t in level {
            let mut rows = Vec::new();
            for row in t {
                rows.push(rat_vec_from_strings(row)?);
            }
            tables.push(if rows.is_empty() {
                Mat::zero(0, 0)
            } else {
                Mat::from_rows(rows)
            });
        }
        mult.push(tables);
    }
    GradedAlgebra::build(field, dims, mult, parsed.torsion)
}

#[derive(Deserialize)]
struct ArrangementJson {
    #[serde(default)]
    forms: Option<Vec<Vec<String>>>,
    #[serde(default)]
    poly: Option<String>,
}

pub fn arrangement_from_json(text: &str) -> Result<crate::arrangements::Arrangement, Error> {
    // bare polynomial text is accepted directly
    if !text.trim_start().starts_with('{') {
        return crate::arrangements::parse_arrangement(text);
    }
    let parsed: ArrangementJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("arrangement JSON: {e}")))?;
    if let Some(poly) = &parsed.poly {
        return crate::arrangements::parse_arrangement(poly);
    }
    let rows = parsed
        .forms
        .ok_or_else(|| Error::Parse("arrangement JSON needs forms or poly".into()))?;
    let mut forms = Vec::new();
    for r in &rows {
        forms.push(rat_vec_from_strings(r)?);
    }
    crate::arrangements::Arrangement::new(forms)
}

pub fn rat_to_string(x: &Rat) -> String {
    x.to_string()
}

pub fn rat_vec_to_strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(rat_to_string).collect()
}
