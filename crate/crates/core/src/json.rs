//! JSON encodings of results. Rationals are always `"num/den"` strings.

use serde_json::{json, Map, Value};

use crate::hyperbolicity::{ConjectureReport, CubicNormalForm, DeltaSample, EkReport, Verdict};
use crate::operators::{ExtendCertificate, LambdaValue, PhiImage, SideOutcome};
use crate::rational::{format_q, parse_q, to_f64, Q};
use crate::roots::AlgebraicReal;
use crate::unipoly::RootProfile;

pub fn q(x: &Q) -> Value {
    Value::String(format_q(x))
}

pub fn q_vec(xs: &[Q]) -> Value {
    Value::Array(xs.iter().map(q).collect())
}

/// An exact value as `{"exact": q}`, otherwise its defining polynomial and
/// isolating interval.
pub fn algebraic(a: &AlgebraicReal) -> Value {
    match a.exact() {
        Some(x) => json!({ "exact": q(x) }),
        None => json!({
            "poly": q_vec(a.poly().coeffs()),
            "lo": q(a.lo()),
            "hi": q(a.hi()),
        }),
    }
}

pub fn profile(p: &RootProfile) -> Value {
    json!({
        "real_roots": p.real_roots.iter().map(|r| json!({
            "root": algebraic(&r.root),
            "multiplicity": r.multiplicity,
        })).collect::<Vec<_>>(),
        "n_positive": p.n_positive,
        "n_negative": p.n_negative,
        "n_zero": p.n_zero,
        "n_nonreal": p.n_nonreal,
        "degree_drop": p.degree_drop,
    })
}

pub fn verdict(v: &Verdict) -> Value {
    let mut m = Map::new();
    m.insert("status".into(), json!(v.status.as_str()));
    if let Some(w) = &v.witness {
        m.insert(
            "witness".into(),
            json!({ "x": q_vec(&w.point.x), "line_profile": profile(&w.profile) }),
        );
    }
    m.insert(
        "detail".into(),
        Value::Object(v.detail.iter().map(|(k, x)| (k.clone(), q(x))).collect()),
    );
    Value::Object(m)
}

pub fn certificate(extendable: bool, c: &ExtendCertificate) -> Value {
    let mut m = Map::new();
    m.insert("extendable".into(), json!(extendable));
    m.insert("kind".into(), json!(c.kind.as_str()));
    m.insert("target".into(), serde_json::to_value(&c.target).expect("serializable"));
    if let Some(f) = &c.f {
        m.insert("f".into(), serde_json::to_value(f).expect("serializable"));
    }
    if let Some(l) = &c.lambda {
        let v = match l {
            LambdaValue::Rational(x) => json!({ "exact": q(x) }),
            LambdaValue::Algebraic(a) => algebraic(a),
        };
        m.insert("lambda".into(), v);
    }
    if let Some(s) = c.side {
        m.insert("side".into(), json!(s.as_str()));
    }
    if let Some(obs) = &c.obstruction {
        m.insert(
            "obstruction".into(),
            Value::Array(
                obs.iter()
                    .map(|o| json!({ "root": algebraic(&o.root), "multiplicity": o.required_multiplicity }))
                    .collect(),
            ),
        );
    }
    m.insert(
        "sides".into(),
        Value::Array(
            c.sides
                .iter()
                .map(|s| {
                    let outcome = match &s.outcome {
                        SideOutcome::SignInfeasible => json!({ "result": "sign_infeasible" }),
                        SideOutcome::Obstructed(o) => {
                            json!({ "result": "obstructed", "forced_roots": o.len() })
                        }
                        SideOutcome::SweepExhausted { breakpoints, samples } => json!({
                            "result": "sweep_exhausted",
                            "breakpoints": breakpoints,
                            "samples": samples,
                        }),
                        SideOutcome::Found => json!({ "result": "found" }),
                    };
                    json!({ "side": s.side.as_str(), "outcome": outcome })
                })
                .collect(),
        ),
    );
    Value::Object(m)
}

pub fn phi_image(p: &PhiImage) -> Value {
    json!({
        "point": q_vec(&p.point),
        "enclosures": p.enclosures.iter().map(|(l, h)| json!([q(l), q(h)])).collect::<Vec<_>>(),
    })
}

pub fn delta_sample(d: &DeltaSample) -> Value {
    let mut m = Map::new();
    m.insert("samples".into(), json!(d.samples));
    m.insert("negative".into(), json!(d.negative));
    if let Some(x) = &d.min {
        m.insert("min".into(), q(x));
    }
    if let Some(x) = &d.negative_point {
        m.insert("negative_point".into(), q_vec(&x.x));
    }
    Value::Object(m)
}

pub fn conjecture(r: &ConjectureReport) -> Value {
    let mut m = Map::new();
    m.insert("n".into(), json!(r.n));
    m.insert("d".into(), json!(r.d));
    m.insert("target".into(), serde_json::to_value(&r.target).expect("serializable"));
    m.insert("map".into(), serde_json::to_value(&r.map).expect("serializable"));
    m.insert("hook".into(), serde_json::to_value(&r.hook).expect("serializable"));
    if let Some(v) = &r.exact {
        m.insert("exact".into(), verdict(v));
    }
    m.insert("extendable".into(), json!(r.extendable));
    m.insert("extend_kind".into(), json!(r.extend_kind.as_str()));
    m.insert("falsifier".into(), verdict(&r.falsifier));
    m.insert("delta_one_one".into(), delta_sample(&r.delta));
    Value::Object(m)
}

pub fn ek_report(r: &EkReport) -> Value {
    let mut m = Map::new();
    m.insert("k".into(), json!(r.k));
    m.insert("n".into(), json!(r.n));
    m.insert("trials".into(), json!(r.trials));
    m.insert("violations".into(), json!(r.violations));
    m.insert("passed".into(), json!(r.passed()));
    if let Some(x) = &r.first_violation {
        m.insert("first_violation".into(), q_vec(&x.x));
    }
    Value::Object(m)
}

pub fn normal_form(nf: &CubicNormalForm) -> Value {
    let mut m = Map::new();
    m.insert("n".into(), json!(nf.n));
    m.insert("shift".into(), algebraic(&nf.shift));
    m.insert("boundary".into(), json!(nf.boundary));
    m.insert("c1".into(), q(&nf.c1));
    if let Some(c2) = &nf.c2 {
        m.insert("c2".into(), q(c2));
    }
    m.insert("c2_enclosure".into(), json!([q(&nf.c2_lo), q(&nf.c2_hi)]));
    m.insert(
        "c2_sign".into(),
        json!(match nf.c2_sign {
            std::cmp::Ordering::Less => -1,
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Greater => 1,
        }),
    );
    if let Some(h) = &nf.transformed {
        m.insert("transformed".into(), serde_json::to_value(h).expect("serializable"));
    }
    Value::Object(m)
}

/// Copy of `v` with every rational string replaced by its decimal value.
pub fn approximate(v: &Value) -> Value {
    match v {
        Value::String(s) if s.contains('/') => match parse_q(s) {
            Ok(x) => json!(to_f64(&x)),
            Err(_) => v.clone(),
        },
        Value::Array(a) => Value::Array(a.iter().map(approximate).collect()),
        Value::Object(o) => Value::Object(o.iter().map(|(k, x)| (k.clone(), approximate(x))).collect()),
        _ => v.clone(),
    }
}

/// Adds an `"approx"` member with decimal approximations to an object.
pub fn with_approx(v: Value) -> Value {
    match v {
        Value::Object(mut o) => {
            let approx = approximate(&Value::Object(o.clone()));
            o.insert("approx".into(), approx);
            Value::Object(o)
        }
        other => json!({ "value": other.clone(), "approx": approximate(&other) }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperbolicity::decide_cubic;
    use crate::operators::{associated_operator, decide_extendable};
    use crate::rational::{q as qi, qr};
    use crate::sympoly::quintic_example;

    #[test]
    fn verdict_shape() {
        let v = decide_cubic(&qi(1), &qi(0), &qi(1), 3).unwrap();
        let j = verdict(&v);
        assert_eq!(j["status"], "NotHyperbolic");
        assert_eq!(j["detail"]["product"], "54/1");
        assert_eq!(j["witness"]["x"], json!(["1/1", "0/1", "0/1"]));
    }

    #[test]
    fn certificate_shape() {
        let (ok, c) = decide_extendable(&associated_operator(&quintic_example()));
        let j = certificate(ok, &c);
        assert_eq!(j["kind"], "MultiplicityObstruction");
        assert_eq!(j["obstruction"][0]["root"]["exact"], "1/1");
        assert_eq!(j["obstruction"][0]["multiplicity"], 3);
        assert_eq!(j["obstruction"][1]["root"]["exact"], "2/1");
    }

    #[test]
    fn approximations() {
        let v = json!({ "a": q(&qr(1, 4)), "b": ["x", q(&qi(3))] });
        let a = approximate(&v);
        assert_eq!(a["a"], json!(0.25));
        assert_eq!(a["b"][0], "x");
        assert_eq!(a["b"][1], json!(3.0));
    }
}
