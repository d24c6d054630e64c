//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Every export takes an input (a family name such as `whitehead` or
//! `torus 2 3`, or a JSON input document) and returns JSON text.

use lsk_core::cw::{build_complex, default_truncation, Flavor};
use lsk_core::hfunc::LinkHFunction2;
use lsk_core::input::{from_json, Family, Resolved};
use lsk_core::surgery::{all_labels, canonical_label, d_link_surgery, format_rational, phi, Rational, SpincLabel2};
use serde::Serialize;
use serde_json::json;
use wasm_bindgen::prelude::*;

fn link(source: &str) -> Result<LinkHFunction2, String> {
    let source = source.trim();
    let resolved =
        if source.starts_with('{') { from_json(source) } else { source.parse::<Family>().and_then(Family::resolve) }
            .map_err(|e| e.to_string())?;
    match resolved {
        Resolved::Link(l) => Ok(l),
        Resolved::Knot(_) => Err("the demo needs a two-component link".into()),
    }
}

fn check_framing(p1: i64, p2: i64) -> Result<(), String> {
    if p1 == 0 || p2 == 0 || p1.abs() > 12 || p2.abs() > 12 {
        return Err("framings must be nonzero with |p| <= 12".into());
    }
    Ok(())
}

/// H (or h) on the square `|s1|, |s2| <= radius`, rows from `s2 = radius` down.
pub fn h_table_json(source: &str, radius: i64, lower: bool) -> Result<String, String> {
    let l = link(source)?;
    let radius = radius.clamp(1, 10);
    let rows: Vec<Vec<i64>> = (-radius..=radius)
        .rev()
        .map(|s2| (-radius..=radius).map(|s1| if lower { l.h(s1, s2) } else { l.value(s1, s2) }).collect())
        .collect();
    let support: Vec<[i64; 3]> = l.h_support().into_iter().map(|((a, b), v)| [a, b, v]).collect();
    Ok(json!({ "radius": radius, "rows": rows, "h_support": support }).to_string())
}

#[derive(Serialize)]
struct DRow {
    i1: i64,
    i2: i64,
    d: String,
}

/// d-invariants of `(p1, p2)`-surgery for every label.
pub fn d_rows_json(source: &str, p1: i64, p2: i64) -> Result<String, String> {
    check_framing(p1, p2)?;
    let l = link(source)?;
    let mut rows = Vec::new();
    for t in all_labels(p1, p2) {
        let d = d_link_surgery(&l, p1, p2, t).map_err(|e| e.to_string())?;
        rows.push(DRow { i1: t.i1, i2: t.i2, d: d.to_string() });
    }
    serde_json::to_string(&rows).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct CellView {
    dim: u8,
    kind: Flavor,
    grid: (i64, i64),
    s: (i64, i64),
    deg: i64,
    erased: bool,
}

/// The truncated complex for one label, with the oracle and formula values.
pub fn complex_json(source: &str, p1: i64, p2: i64, i1: i64, i2: i64) -> Result<String, String> {
    check_framing(p1, p2)?;
    let l = link(source)?;
    let t = SpincLabel2::new(canonical_label(p1, i1), canonical_label(p2, i2));
    let b = default_truncation(&l, p1, p2);
    let cx = build_complex(&l, p1, p2, t, b).map_err(|e| e.to_string())?;
    let ux = build_complex(&LinkHFunction2::unlink(), p1, p2, t, b).map_err(|e| e.to_string())?;
    let lens = phi(p1, t.i1).and_then(|a| Ok(a + phi(p2, t.i2)?)).map_err(|e| e.to_string())?;
    let oracle = Rational::from_integer(cx.relative_d() - ux.relative_d()) + lens;
    let formula = d_link_surgery(&l, p1, p2, t).map_err(|e| e.to_string())?;
    let cells: Vec<CellView> = cx
        .cells()
        .iter()
        .map(|c| CellView {
            dim: c.dim(),
            kind: c.flavor,
            grid: c.grid,
            s: c.lattice,
            deg: c.rel_deg,
            erased: c.erased,
        })
        .collect();
    Ok(json!({
        "label": [t.i1, t.i2],
        "truncation": b,
        "case": format!("{:?}", cx.case),
        "cells": cells,
        "relative_d": cx.relative_d(),
        "oracle_d": format_rational(oracle),
        "formula_d": formula.to_string(),
        "differential_ok": cx.verify_differential(),
    })
    .to_string())
}

#[wasm_bindgen]
pub fn h_table(source: &str, radius: i32, lower: bool) -> Result<String, JsValue> {
    h_table_json(source, radius.into(), lower).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn d_rows(source: &str, p1: i32, p2: i32) -> Result<String, JsValue> {
    d_rows_json(source, p1.into(), p2.into()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn complex(source: &str, p1: i32, p2: i32, i1: i32, i2: i32) -> Result<String, JsValue> {
    complex_json(source, p1.into(), p2.into(), i1.into(), i2.into()).map_err(|e| JsValue::from_str(&e))
}
