//! JSON and TSV renderings. Rationals are always strings in lowest terms.

use serde_json::{json, Value};

use crate::error::Error;
use crate::lshape::{LShape, PoleCertificate};
use crate::rootsys::format_root;
use crate::setup::{les_consistency, DSPackage, HCDatum, LeviParameter, Violation};
use crate::sl2::Sl2Report;
use crate::{QWeight, Rational};

pub fn rational(q: &Rational) -> Value {
    Value::String(q.to_string())
}

pub fn weight(w: &QWeight) -> Value {
    Value::Array(w.coords().iter().map(rational).collect())
}

pub fn hc_datum(d: &HCDatum) -> Value {
    json!({
        "rank": d.rank(),
        "chamber": d.eps().to_string(),
        "alpha0": format_root(d.alpha0()),
        "lambda": weight(d.lambda()),
        "parabolic_class": d.parabolic_class().to_string(),
    })
}

pub fn package(p: &DSPackage) -> Value {
    let t = &p.coh_table;
    let rows = |table: &[[u32; 3]; 3]| -> Value {
        Value::Array(table.iter().map(|r| json!(r)).collect())
    };
    let residual = t.residual_degrees();
    json!({
        "s0": rational(&p.s0),
        "blattner_plus": weight(&p.blattner_plus),
        "blattner_minus": weight(&p.blattner_minus),
        "j_lowest_ktype": weight(&p.j_lowest_ktype),
        "e_highest_weight": weight(&p.e_highest_weight),
        "d": p.d,
        "m": p.m,
        "coh_table": {
            "degrees": t.degrees(),
            "left_columns": ["D", "I_plus", "J"],
            "left_rows": rows(&t.left),
            "right_columns": ["J", "I_minus", "D"],
            "right_rows": rows(&t.right),
            "per_summand_middle": t.per_summand_middle,
            "les_consistent": les_consistency(t),
        },
        "residual_degrees": {
            "nonvanishing_image": residual.nonvanishing_image,
            "vanishing_image": residual.vanishing_image,
        },
    })
}

pub fn levi(l: &LeviParameter) -> Value {
    json!({
        "class": l.parabolic_class.to_string(),
        "gl_weight": l.gl_weight,
        "sp_parameter": weight(&l.sp_parameter),
        "parity": l.sign_character_parity.map(|p| p.to_string()),
    })
}

pub fn lshape(s: &LShape) -> Value {
    let forms = |v: &[crate::lshape::LinearForm]| -> Value {
        Value::Array(v.iter().map(|f| Value::String(f.to_string())).collect())
    };
    json!({
        "class": s.parabolic_class.to_string(),
        "rank": s.rank,
        "s0": rational(&s.s0),
        "buckets": s.buckets.iter().map(|b| json!({
            "level": b.level,
            "dim": b.dim,
            "label": b.label,
        })).collect::<Vec<_>>(),
        "numerator_args": forms(&s.numerator_arguments),
        "denominator_args": forms(&s.denominator_arguments),
    })
}

pub fn certificate(c: &PoleCertificate) -> Value {
    json!({
        "verdict": c.verdict.to_string(),
        "reasons": c.reasons,
    })
}

pub fn sl2_report(r: &Sl2Report) -> Value {
    json!({
        "a_plus": rational(&r.config.a_plus),
        "a_minus": rational(&r.config.a_minus),
        "germ_depth": r.config.germ_depth,
        "normalization": r.config.normalization.render("s"),
        "checks": r.checks.iter().map(|c| json!({
            "name": c.name,
            "status": c.status.to_string(),
            "detail": c.detail,
        })).collect::<Vec<_>>(),
        "constant_term_coefficient": r.constant_term_coefficient.render("r"),
        "degenerate_choice": r.degenerate_choice,
        "conclusion": r.conclusion.to_string(),
    })
}

pub fn violations(vs: &[Violation]) -> Value {
    json!({
        "violations": vs.iter().map(|v| json!({
            "kind": v.kind(),
            "message": v.to_string(),
        })).collect::<Vec<_>>(),
    })
}

pub fn error(kind: &str, e: &Error) -> Value {
    json!({
        "error": {
            "kind": kind,
            "message": e.to_string(),
        },
    })
}

pub const TSV_HEADER: [&str; 9] = [
    "chamber",
    "alpha0",
    "lambda",
    "s0",
    "blattner_plus",
    "blattner_minus",
    "j_ktype",
    "e_weight",
    "d",
];

/// `3,-2`: the form accepted by `--lambda`.
pub fn flat(w: &QWeight) -> String {
    w.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

pub fn tsv_row(p: &DSPackage) -> String {
    let d = &p.datum;
    [
        d.eps().to_string(),
        format_root(d.alpha0()),
        flat(d.lambda()),
        p.s0.to_string(),
        flat(&p.blattner_plus),
        flat(&p.blattner_minus),
        flat(&p.j_lowest_ktype),
        flat(&p.e_highest_weight),
        p.d.to_string(),
    ]
    .join("\t")
}

pub fn tsv(packages: &[DSPackage]) -> String {
    let mut out = TSV_HEADER.join("\t");
    out.push('\n');
    for p in packages {
        out.push_str(&tsv_row(p));
        out.push('\n');
    }
    out
}
