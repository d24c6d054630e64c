use std::fmt::Write;

use lsk_core::cw::{build_complex, check_against_formula, default_truncation};
use lsk_core::hfunc::{blowdown_h, nu_plus, KnotHFunction, LinkHFunction2};
use lsk_core::input::{KnotInput, Resolved};
use lsk_core::invariants::{
    casson_knot_pm1, casson_table, d_genus_check, genus_lower_bound, link_d_table, lspace_region, sato_levine,
    sato_levine_cross_check, summary, CassonTable, GenusBoundReport, LSpaceRegion,
};
use lsk_core::surgery::{
    all_labels, canonical_label, d_knot_surgery, d_link_surgery, format_rational, labels, phi, Rational, SpincLabel2,
};
use serde::Serialize;

use crate::{EXIT_INVALID, EXIT_MISMATCH, EXIT_USAGE};

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
    /// Output to print before the error, if any.
    pub output: Option<String>,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into(), output: None }
    }

    pub fn invalid(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INVALID, message: message.into(), output: None }
    }
}

impl From<lsk_core::Error> for Failure {
    fn from(e: lsk_core::Error) -> Self {
        Failure::invalid(e.to_string())
    }
}

type Out = Result<String, Failure>;

fn emit<T: Serialize>(value: &T, json: bool, text: impl FnOnce(&T) -> String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(value).expect("serializable");
        s.push('\n');
        s
    } else {
        text(value)
    }
}

fn need_link(r: &Resolved) -> Result<&LinkHFunction2, Failure> {
    r.link().ok_or_else(|| Failure::invalid("this command needs a two-component link"))
}

fn knot_support_reach(k: &KnotHFunction) -> i64 {
    (-k.radius()..=k.radius()).filter(|s| k.h(*s) > 0).map(i64::abs).max().unwrap_or(0)
}

fn display_radius(r: &Resolved) -> i64 {
    let reach = match r {
        Resolved::Knot(k) => knot_support_reach(&k.h),
        Resolved::Link(l) => {
            let link = l.h_support().keys().map(|(a, b)| a.abs().max(b.abs())).max().unwrap_or(0);
            link.max(knot_support_reach(l.component(1))).max(knot_support_reach(l.component(2)))
        }
    };
    (reach + 1).max(2)
}

fn grid_text(header: &str, cols: &[i64], rows: &[(i64, Vec<i64>)]) -> String {
    let width = rows.iter().flat_map(|(_, r)| r.iter()).chain(cols).map(|v| v.to_string().len()).max().unwrap_or(1);
    let lead = rows.iter().map(|(k, _)| k.to_string().len()).max().unwrap_or(1).max(header.len());
    let mut out = format!("{header:>lead$}");
    for c in cols {
        let _ = write!(out, " {c:>width$}");
    }
    out.push('\n');
    for (k, r) in rows {
        let _ = write!(out, "{k:>lead$}");
        for v in r {
            let _ = write!(out, " {v:>width$}");
        }
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct KnotTable {
    kind: &'static str,
    s: Vec<i64>,
    values: Vec<i64>,
    nu_plus: i64,
    validation: &'static str,
}

#[derive(Serialize)]
struct LinkTable {
    kind: &'static str,
    /// Column coordinates, left to right.
    s1: Vec<i64>,
    /// Row coordinates, top to bottom.
    s2: Vec<i64>,
    rows: Vec<Vec<i64>>,
    h_support: Vec<[i64; 3]>,
    validation: &'static str,
}

pub fn hfun(r: &Resolved, lower: bool, radius: Option<i64>, json: bool) -> Out {
    let rad = radius.unwrap_or_else(|| display_radius(r));
    if rad < 0 {
        return Err(Failure::usage("--radius must be nonnegative"));
    }
    let kind = if lower { "h" } else { "H" };
    match r {
        Resolved::Knot(KnotInput { h, .. }) => {
            let s: Vec<i64> = (-rad..=rad).collect();
            let values = s.iter().map(|&x| if lower { h.h(x) } else { h.value(x) }).collect();
            let t = KnotTable { kind, s, values, nu_plus: nu_plus(h), validation: "ok" };
            Ok(emit(&t, json, |t| {
                let mut out = format!("s {}\n", t.kind);
                for (s, v) in t.s.iter().zip(&t.values) {
                    let _ = writeln!(out, "{s} {v}");
                }
                let _ = writeln!(out, "nu+ {}", t.nu_plus);
                let _ = writeln!(out, "validation: {}", t.validation);
                out
            }))
        }
        Resolved::Link(l) => {
            let s1: Vec<i64> = (-rad..=rad).collect();
            let s2: Vec<i64> = (-rad..=rad).rev().collect();
            let rows = s2
                .iter()
                .map(|&b| s1.iter().map(|&a| if lower { l.h(a, b) } else { l.value(a, b) }).collect())
                .collect();
            let h_support = l.h_support().into_iter().map(|((a, b), v)| [a, b, v]).collect();
            let t = LinkTable { kind, s1, s2, rows, h_support, validation: "ok" };
            Ok(emit(&t, json, |t| {
                let rows: Vec<(i64, Vec<i64>)> = t.s2.iter().copied().zip(t.rows.iter().cloned()).collect();
                let mut out = format!("{} (s1 rightward, s2 upward)\n", t.kind);
                out.push_str(&grid_text("s2\\s1", &t.s1, &rows));
                let support: Vec<String> = t.h_support.iter().map(|[a, b, v]| format!("({a},{b})={v}")).collect();
                let _ =
                    writeln!(out, "h-support: {}", if support.is_empty() { "empty".into() } else { support.join(" ") });
                let _ = writeln!(out, "validation: {}", t.validation);
                out
            }))
        }
    }
}

#[derive(Serialize)]
struct DRow {
    label: Vec<i64>,
    d: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<String>,
}

#[derive(Serialize)]
struct DReport {
    framing: Vec<i64>,
    rows: Vec<DRow>,
}

/// Absolute d from the cell complexes of `l` and the unlink.
fn oracle_d(l: &LinkHFunction2, p1: i64, p2: i64, t: SpincLabel2) -> Result<Rational, Failure> {
    let b = default_truncation(l, p1, p2);
    let cx = build_complex(l, p1, p2, t, b)?;
    let ux = build_complex(&LinkHFunction2::unlink(), p1, p2, t, b)?;
    if !cx.verify_differential() || !ux.verify_differential() {
        return Err(Failure {
            code: EXIT_MISMATCH,
            message: "complex failed the differential check".into(),
            output: None,
        });
    }
    Ok(Rational::from_integer(cx.relative_d() - ux.relative_d()) + phi(p1, t.i1)? + phi(p2, t.i2)?)
}

pub fn dinv(r: &Resolved, framing: &[i64], label: Option<&[i64]>, all: bool, oracle: bool, json: bool) -> Out {
    let n = match r {
        Resolved::Knot(_) => 1,
        Resolved::Link(_) => 2,
    };
    if framing.len() != n {
        return Err(Failure::usage(format!("-p takes {n} value(s) for this input")));
    }
    if label.is_some_and(|l| l.len() != n) {
        return Err(Failure::usage(format!("--label takes {n} value(s) for this input")));
    }
    if framing.contains(&0) {
        return Err(Failure::invalid("framings must be nonzero"));
    }
    let mut rows = Vec::new();
    let mut mismatches = 0;
    match r {
        Resolved::Knot(k) => {
            if oracle {
                return Err(Failure::usage("--oracle needs a two-component link"));
            }
            let p = framing[0];
            let chosen: Vec<i64> = if all {
                let mut v: Vec<i64> = labels(p).collect();
                v.sort();
                v
            } else {
                vec![canonical_label(p, label.map_or(0, |l| l[0]))]
            };
            for i in chosen {
                let d = d_knot_surgery(&k.h, p, i)?;
                rows.push(DRow { label: vec![i], d: d.to_string(), oracle: None });
            }
        }
        Resolved::Link(l) => {
            let (p1, p2) = (framing[0], framing[1]);
            let chosen = if all {
                all_labels(p1, p2)
            } else {
                let t = label.unwrap_or(&[0, 0]);
                vec![SpincLabel2::new(canonical_label(p1, t[0]), canonical_label(p2, t[1]))]
            };
            for t in chosen {
                let d = d_link_surgery(l, p1, p2, t)?.0;
                let o = if oracle {
                    let o = oracle_d(l, p1, p2, t)?;
                    mismatches += usize::from(o != d);
                    Some(format_rational(o))
                } else {
                    None
                };
                rows.push(DRow { label: vec![t.i1, t.i2], d: format_rational(d), oracle: o });
            }
        }
    }
    let rep = DReport { framing: framing.to_vec(), rows };
    let out = emit(&rep, json, |rep| {
        let mut out = String::new();
        for row in &rep.rows {
            for i in &row.label {
                let _ = write!(out, "{i} ");
            }
            out.push_str(&row.d);
            if let Some(o) = &row.oracle {
                let _ = write!(out, " oracle {o}");
            }
            out.push('\n');
        }
        out
    });
    if mismatches > 0 {
        return Err(Failure {
            code: EXIT_MISMATCH,
            message: format!("{mismatches} label(s) disagree with the oracle"),
            output: Some(out),
        });
    }
    Ok(out)
}

#[derive(Serialize)]
struct RegionReport {
    region: String,
    #[serde(flatten)]
    detail: LSpaceRegion,
}

pub fn region(r: &Resolved, json: bool) -> Out {
    let l = need_link(r)?;
    let detail = lspace_region(l)?;
    let rep = RegionReport { region: detail.to_string(), detail };
    Ok(emit(&rep, json, |rep| format!("{}\n", rep.region)))
}

#[derive(Serialize)]
struct KnotCasson {
    #[serde(rename = "+")]
    plus: i64,
    #[serde(rename = "-")]
    minus: i64,
}

pub fn casson(r: &Resolved, json: bool) -> Out {
    match r {
        Resolved::Knot(k) => {
            let rep = KnotCasson {
                plus: casson_knot_pm1(&k.h, 1, k.lspace_knot)?,
                minus: casson_knot_pm1(&k.h, -1, k.lspace_knot)?,
            };
            Ok(emit(&rep, json, |c| format!("e lambda\n+1 {}\n-1 {}\n", c.plus, c.minus)))
        }
        Resolved::Link(l) => {
            let rep: CassonTable = casson_table(l);
            Ok(emit(&rep, json, |c| {
                format!("e1 e2 lambda\n+1 +1 {}\n+1 -1 {}\n-1 +1 {}\n-1 -1 {}\n", c.pp, c.pm, c.mp, c.mm)
            }))
        }
    }
}

#[derive(Serialize)]
struct BetaReport {
    beta: i64,
    /// Agreement with the Alexander polynomial, when it was given.
    alexander_check: Option<bool>,
}

pub fn beta(r: &Resolved, json: bool) -> Out {
    let l = need_link(r)?;
    let rep = BetaReport { beta: sato_levine(l), alexander_check: sato_levine_cross_check(l) };
    if rep.alexander_check == Some(false) {
        let out = emit(&rep, json, |rep| format!("{}\n", rep.beta));
        return Err(Failure {
            code: EXIT_MISMATCH,
            message: "beta disagrees with the Alexander polynomial".into(),
            output: Some(out),
        });
    }
    Ok(emit(&rep, json, |rep| {
        let mut out = format!("{}\n", rep.beta);
        if rep.alexander_check == Some(true) {
            out.push_str("alexander check: ok\n");
        }
        out
    }))
}

#[derive(Serialize)]
struct GenusCheck {
    genera: Vec<i64>,
    framings: Vec<i64>,
    pass: bool,
}

#[derive(Serialize)]
struct GenusReport {
    #[serde(flatten)]
    bound: GenusBoundReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    check: Option<GenusCheck>,
}

pub fn genus(r: &Resolved, cap: i64, check: Option<&[i64]>, framings: &[i64], json: bool) -> Out {
    let l = need_link(r)?;
    if cap < 0 {
        return Err(Failure::usage("--cap must be nonnegative"));
    }
    let bound = genus_lower_bound(l, cap);
    let check = match check {
        None => None,
        Some(g) => {
            let (p1, p2) = (framings[0], framings[1]);
            if p1 <= 0 || p2 <= 0 {
                return Err(Failure::usage("--framings must be positive"));
            }
            let neg = link_d_table(l, -p1, -p2)?;
            let pos = link_d_table(l, p1, p2)?;
            let pass = d_genus_check(Some(&neg), Some(&pos), g, framings)?;
            Some(GenusCheck { genera: g.to_vec(), framings: framings.to_vec(), pass })
        }
    };
    let rep = GenusReport { bound, check };
    Ok(emit(&rep, json, |rep| {
        let mut out = match rep.bound.min_total {
            Some(m) => format!("g1 + g2 >= {m}\n"),
            None => format!("every pair with g1, g2 <= {} is excluded\n", rep.bound.cap),
        };
        let ex: Vec<String> = rep.bound.excluded.iter().map(|(a, b)| format!("({a},{b})")).collect();
        let _ = writeln!(out, "excluded: {}", if ex.is_empty() { "none".into() } else { ex.join(" ") });
        if let Some(c) = &rep.check {
            let _ = writeln!(
                out,
                "d check genera ({},{}) framings ({},{}): {}",
                c.genera[0],
                c.genera[1],
                c.framings[0],
                c.framings[1],
                if c.pass { "pass" } else { "fail" }
            );
        }
        out
    }))
}

#[derive(Serialize)]
struct NuPlusReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    knot: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    components: Option<[i64; 2]>,
    /// ν⁺ of the knot left by blowing down the other component, keyed by the kept component.
    #[serde(skip_serializing_if = "Option::is_none")]
    blowdown: Option<[Option<i64>; 2]>,
}

pub fn nuplus(r: &Resolved, json: bool) -> Out {
    let rep = match r {
        Resolved::Knot(k) => NuPlusReport { knot: Some(nu_plus(&k.h)), components: None, blowdown: None },
        Resolved::Link(l) => {
            let bd = |k: u8| blowdown_h(l, k).ok().map(|h| nu_plus(&h));
            NuPlusReport {
                knot: None,
                components: Some([nu_plus(l.component(1)), nu_plus(l.component(2))]),
                blowdown: Some([bd(1), bd(2)]),
            }
        }
    };
    Ok(emit(&rep, json, |rep| {
        let mut out = String::new();
        if let Some(v) = rep.knot {
            let _ = writeln!(out, "{v}");
        }
        if let Some([a, b]) = rep.components {
            let _ = writeln!(out, "component 1: {a}\ncomponent 2: {b}");
        }
        if let Some(bd) = rep.blowdown {
            for (k, v) in bd.iter().enumerate() {
                let v = v.map_or("n/a (other component knotted)".into(), |v| v.to_string());
                let _ = writeln!(out, "blow-down keeping component {}: {v}", k + 1);
            }
        }
        out
    }))
}

pub fn oracle_check(r: &Resolved, pmax: i64, json: bool) -> Out {
    let l = need_link(r)?;
    if pmax < 1 {
        return Err(Failure::usage("--pmax must be at least 1"));
    }
    let rep = check_against_formula(l, pmax)?;
    let out = emit(&rep, json, |rep| {
        let mut out = format!(
            "cases {} mismatches {} bad_differentials {} unstable {}\n",
            rep.cases,
            rep.mismatches.len(),
            rep.bad_differentials,
            rep.unstable
        );
        for m in &rep.mismatches {
            let _ = writeln!(
                out,
                "mismatch p=({},{}) label=({},{}) formula {} oracle {}",
                m.p1, m.p2, m.label.i1, m.label.i2, m.formula, m.oracle
            );
        }
        out
    });
    if rep.is_clean() {
        Ok(out)
    } else {
        Err(Failure { code: EXIT_MISMATCH, message: "formula and oracle disagree".into(), output: Some(out) })
    }
}

pub fn report(r: &Resolved, cap: i64, json: bool) -> Out {
    let l = need_link(r)?;
    let rep = summary(l, cap);
    Ok(emit(&rep, json, |rep| {
        let c = &rep.casson;
        format!(
            "beta {}\ncasson ++ {} +- {} -+ {} -- {}\nregion {}\ngenus bound {}\n",
            rep.beta,
            c.pp,
            c.pm,
            c.mp,
            c.mm,
            rep.lspace_region.as_deref().unwrap_or("n/a"),
            rep.genus_lower_bound.map_or("n/a".into(), |g| g.to_string())
        )
    }))
}
