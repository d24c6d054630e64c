//! Input descriptors: named families and the JSON input schema.
//!
//! ```json
//! {"type": "link2", "alexander": "-(t1-1)(t2-1)",
//!  "components": {"1": "unknot", "2": {"type": "knot", "alexander": "t - 1 + t^-1"}}}
//! ```
//!
//! Polynomials are text or a list of `[coeff, e1_doubled, e2_doubled]` terms.
//! A link polynomial whose exponents are all integers is read as `Δ̃`; one
//! whose exponents are all half-integers is read as `Δ` and normalized.
//! Tables are `{"radius": R, "values": ..., "kind": "h" | "H"}`: knots take a
//! flat list for `s = -R..R`, links a square grid in figure orientation.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::hfunc::{h_from_alexander_knot, h_from_alexander_link, KnotHFunction, LinkHFunction2, TableKind};
use crate::poly::{
    tilde_normalize_link, torus_knot_alexander, unlink2_tilde, whitehead_tilde, LaurentPoly1, LaurentPoly2,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Unknot,
    Torus(i64, i64),
    Whitehead,
    Unlink2,
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let words: Vec<&str> = s.split_whitespace().collect();
        match words.as_slice() {
            ["unknot"] => Ok(Family::Unknot),
            ["whitehead"] => Ok(Family::Whitehead),
            ["unlink2"] => Ok(Family::Unlink2),
            ["torus", p, q] => {
                let p = p.parse().map_err(|_| Error::Parse(format!("bad torus parameter '{p}'")))?;
                let q = q.parse().map_err(|_| Error::Parse(format!("bad torus parameter '{q}'")))?;
                Ok(Family::Torus(p, q))
            }
            _ => Err(Error::Parse(format!("unknown family '{s}', expected unknot | torus P Q | whitehead | unlink2"))),
        }
    }
}

/// A validated knot input.
#[derive(Debug, Clone)]
pub struct KnotInput {
    pub h: KnotHFunction,
    pub alexander: Option<LaurentPoly1>,
    /// Whether the input is asserted to come from an L-space knot.
    pub lspace_knot: bool,
}

/// A validated input, either a knot or a two-component link.
#[derive(Debug, Clone)]
pub enum Resolved {
    Knot(KnotInput),
    Link(LinkHFunction2),
}

impl Resolved {
    pub fn link(&self) -> Option<&LinkHFunction2> {
        match self {
            Resolved::Link(l) => Some(l),
            Resolved::Knot(_) => None,
        }
    }

    pub fn knot(&self) -> Option<&KnotInput> {
        match self {
            Resolved::Knot(k) => Some(k),
            Resolved::Link(_) => None,
        }
    }
}

impl Family {
    pub fn resolve(self) -> Result<Resolved> {
        let u = KnotHFunction::unknot();
        Ok(match self {
            Family::Unknot => {
                Resolved::Knot(KnotInput { h: u, alexander: Some(LaurentPoly1::constant(1)), lspace_knot: true })
            }
            Family::Torus(p, q) => {
                let delta = torus_knot_alexander(p, q)?;
                Resolved::Knot(KnotInput {
                    h: h_from_alexander_knot(&delta)?,
                    alexander: Some(delta),
                    lspace_knot: true,
                })
            }
            Family::Whitehead => Resolved::Link(h_from_alexander_link(&whitehead_tilde(), &u, &u)?),
            Family::Unlink2 => Resolved::Link(h_from_alexander_link(&unlink2_tilde(), &u, &u)?),
        })
    }
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "lowercase")]
enum InputType {
    Knot,
    Link2,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum PolyJson {
    Text(String),
    Terms(Vec<Vec<i64>>),
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum TableValues {
    Flat(Vec<i64>),
    Grid(Vec<Vec<i64>>),
}

#[derive(Debug, Deserialize, Default, Clone, Copy)]
enum TableKindJson {
    #[default]
    #[serde(rename = "h")]
    Lower,
    #[serde(rename = "H")]
    Upper,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableJson {
    radius: i64,
    values: TableValues,
    #[serde(default)]
    kind: TableKindJson,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum ComponentJson {
    Family(String),
    Document(Box<InputJson>),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct InputJson {
    #[serde(rename = "type")]
    kind: InputType,
    alexander: Option<PolyJson>,
    h_table: Option<TableJson>,
    #[serde(default)]
    components: BTreeMap<String, ComponentJson>,
    #[serde(default)]
    lspace_knot: Option<bool>,
}

fn poly1(p: &PolyJson) -> Result<LaurentPoly1> {
    match p {
        PolyJson::Text(s) => s.parse(),
        PolyJson::Terms(terms) => {
            let mut out = LaurentPoly1::zero();
            for t in terms {
                match t.as_slice() {
                    [c, e] | [c, e, 0] => out.add_term(*e, *c),
                    _ => return Err(Error::Parse(format!("bad knot term {t:?}"))),
                }
            }
            Ok(out)
        }
    }
}

fn poly2(p: &PolyJson) -> Result<LaurentPoly2> {
    match p {
        PolyJson::Text(s) => s.parse(),
        PolyJson::Terms(terms) => {
            let mut out = LaurentPoly2::zero();
            for t in terms {
                match t.as_slice() {
                    [c, e1, e2] => out.add_term([*e1, *e2], *c),
                    _ => return Err(Error::Parse(format!("bad link term {t:?}"))),
                }
            }
            Ok(out)
        }
    }
}

/// `Δ̃` from either `Δ̃` (integer exponents) or `Δ` (half-integer exponents).
pub fn link_tilde_from_any(p: &LaurentPoly2) -> Result<LaurentPoly2> {
    let parities: Vec<(i64, i64)> = p.terms().map(|(e, _)| (e[0].rem_euclid(2), e[1].rem_euclid(2))).collect();
    if parities.iter().all(|&q| q == (0, 0)) {
        let delta = p.shift([-1, -1]);
        if !p.is_zero() && !delta.is_symmetric(1) && !delta.is_symmetric(-1) {
            return Err(Error::NotSymmetric);
        }
        Ok(p.clone())
    } else if parities.iter().all(|&q| q == (1, 1)) {
        tilde_normalize_link(p)
    } else {
        Err(Error::NonZeroLinking)
    }
}

fn knot_from_json(j: &InputJson) -> Result<KnotInput> {
    match (&j.alexander, &j.h_table) {
        (Some(a), None) => {
            let delta = poly1(a)?;
            Ok(KnotInput {
                h: h_from_alexander_knot(&delta)?,
                alexander: Some(delta),
                lspace_knot: j.lspace_knot.unwrap_or(false),
            })
        }
        (None, Some(t)) => {
            let TableValues::Flat(values) = &t.values else {
                return Err(Error::InvalidTable("knot tables are flat lists".into()));
            };
            let h = match t.kind {
                TableKindJson::Lower => KnotHFunction::from_h_window(t.radius, values.clone())?,
                TableKindJson::Upper => KnotHFunction::from_window(t.radius, values.clone())?,
            };
            Ok(KnotInput { h, alexander: None, lspace_knot: j.lspace_knot.unwrap_or(false) })
        }
        _ => Err(Error::Parse("give exactly one of \"alexander\" or \"h_table\"".into())),
    }
}

fn component(components: &BTreeMap<String, ComponentJson>, k: &str) -> Result<KnotHFunction> {
    match components.get(k) {
        None => Ok(KnotHFunction::unknot()),
        Some(ComponentJson::Family(name)) => match name.parse::<Family>()?.resolve()? {
            Resolved::Knot(k) => Ok(k.h),
            Resolved::Link(_) => Err(Error::Parse(format!("component {k} must be a knot"))),
        },
        Some(ComponentJson::Document(doc)) => match doc.kind {
            InputType::Knot => Ok(knot_from_json(doc)?.h),
            InputType::Link2 => Err(Error::Parse(format!("component {k} must be a knot"))),
        },
    }
}

fn resolve_json(j: &InputJson) -> Result<Resolved> {
    match j.kind {
        InputType::Knot => {
            if !j.components.is_empty() {
                return Err(Error::Parse("knots take no \"components\"".into()));
            }
            Ok(Resolved::Knot(knot_from_json(j)?))
        }
        InputType::Link2 => {
            if let Some(key) = j.components.keys().find(|k| *k != "1" && *k != "2") {
                return Err(Error::Parse(format!("unknown component key '{key}'")));
            }
            let h1 = component(&j.components, "1")?;
            let h2 = component(&j.components, "2")?;
            match (&j.alexander, &j.h_table) {
                (Some(a), None) => {
                    let tilde = link_tilde_from_any(&poly2(a)?)?;
                    Ok(Resolved::Link(h_from_alexander_link(&tilde, &h1, &h2)?))
                }
                (None, Some(t)) => {
                    let TableValues::Grid(rows) = &t.values else {
                        return Err(Error::InvalidTable("link tables are square grids".into()));
                    };
                    if rows.len() as i64 != 2 * t.radius + 1 {
                        return Err(Error::InvalidTable(format!(
                            "radius {} needs {} rows, got {}",
                            t.radius,
                            2 * t.radius + 1,
                            rows.len()
                        )));
                    }
                    let kind = match t.kind {
                        TableKindJson::Lower => TableKind::LowerH,
                        TableKindJson::Upper => TableKind::UpperH,
                    };
                    let comps = [h1.with_radius(t.radius), h2.with_radius(t.radius)];
                    Ok(Resolved::Link(LinkHFunction2::from_figure_rows(rows, kind, comps)?))
                }
                _ => Err(Error::Parse("give exactly one of \"alexander\" or \"h_table\"".into())),
            }
        }
    }
}

/// Parse and validate a JSON input document.
pub fn from_json(text: &str) -> Result<Resolved> {
    let j: InputJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    resolve_json(&j)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        assert_eq!("torus 2 3".parse::<Family>().unwrap(), Family::Torus(2, 3));
        assert!("torus 2".parse::<Family>().is_err());
        assert!(matches!(Family::Whitehead.resolve().unwrap(), Resolved::Link(_)));
        assert!(matches!(Family::Torus(2, 4).resolve(), Err(Error::InvalidTorusParameters { .. })));
    }

    #[test]
    fn json_link_forms_agree() {
        let a = from_json(r#"{"type":"link2","alexander":"-(t1-1)(t2-1)"}"#).unwrap();
        let b = from_json(r#"{"type":"link2","alexander":"-(t1^(1/2)-t1^(-1/2))(t2^(1/2)-t2^(-1/2))"}"#).unwrap();
        let c = from_json(r#"{"type":"link2","alexander":[[-1,2,2],[1,2,0],[1,0,2],[-1,0,0]]}"#).unwrap();
        let d = from_json(r#"{"type":"link2","h_table":{"radius":1,"values":[[0,0,0],[0,1,0],[0,0,0]]}}"#).unwrap();
        let e = from_json(
            r#"{"type":"link2","h_table":{"radius":2,"kind":"H","values":
              [[2,1,0,0,0],[2,1,0,0,0],[2,1,1,0,0],[3,2,1,1,1],[4,3,2,2,2]]}}"#,
        )
        .unwrap();
        let w = Family::Whitehead.resolve().unwrap();
        let w = w.link().unwrap();
        for r in [a, b, c, d, e] {
            let l = r.link().unwrap();
            for s1 in -4..=4 {
                for s2 in -4..=4 {
                    assert_eq!(l.value(s1, s2), w.value(s1, s2));
                }
            }
        }
    }

    #[test]
    fn json_knots() {
        let k = from_json(r#"{"type":"knot","alexander":"t-1+t^-1","lspace_knot":true}"#).unwrap();
        let k = k.knot().unwrap();
        assert_eq!(k.h.value(0), 1);
        assert!(k.lspace_knot);
        let t = from_json(r#"{"type":"knot","h_table":{"radius":2,"values":[0,0,1,0,0]}}"#).unwrap();
        assert_eq!(t.knot().unwrap().h, k.h.with_radius(2));
    }

    #[test]
    fn json_components() {
        let r = from_json(r#"{"type":"link2","alexander":"0","components":{"2":"torus 2 3"}}"#).unwrap();
        let l = r.link().unwrap();
        assert_eq!(l.h(0, 0), 1);
        assert_eq!(l.h(5, 0), 1);
    }

    #[test]
    fn json_errors() {
        assert!(matches!(from_json(r#"{"type":"link2","alexander":"t1^(1/2)"}"#), Err(Error::NonZeroLinking)));
        assert!(matches!(from_json(r#"{"type":"link2"}"#), Err(Error::Parse(_))));
        assert!(matches!(
            from_json(r#"{"type":"knot","alexander":"t - 3 + t^-1"}"#),
            Err(Error::NotLSpaceConsistent(_))
        ));
        assert!(matches!(
            from_json(r#"{"type":"link2","h_table":{"radius":1,"values":[[0,0,0],[0,2,0],[0,0,0]]}}"#),
            Err(Error::NotLSpaceConsistent(_))
        ));
        assert!(from_json("not json").is_err());
    }
}
