//! JSON encodings of exact values and tables. Exact outputs never contain floats.

use serde_json::{json, Map, Value};

use repcontain_core::chartab::{CharacterTable, ClassFunction};
use repcontain_core::exact::{CycNum, Rational};
use repcontain_core::groups::Group;
use repcontain_core::lambda::{Deficit, EigenMultiset};

fn integer(n: num_bigint::BigInt) -> Value {
    match i64::try_from(&n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

pub fn rational(r: &Rational) -> Value {
    json!([integer(r.numer()), integer(r.denom())])
}

/// `{"conductor": N, "coeffs": [[num, den], ...]}` in the power basis of `Q(ζ_N)`.
pub fn cycnum(z: &CycNum) -> Value {
    json!({
        "conductor": z.conductor(),
        "coeffs": z.coeffs().iter().map(rational).collect::<Vec<_>>(),
    })
}

pub fn class_function(chi: &ClassFunction) -> Value {
    Value::Array(chi.values().iter().map(cycnum).collect())
}

pub fn classes(g: &Group) -> Value {
    Value::Array(g.classes().iter().map(|c| json!({"size": c.size, "rep_order": c.rep_order})).collect())
}

pub fn table(descriptor: &str, t: &CharacterTable) -> Value {
    let g = t.group();
    let irreducibles: Vec<Value> = (0..t.len())
        .map(|i| {
            let mut row = Map::new();
            row.insert("label".into(), json!(t.label(i).to_string()));
            row.insert("dim".into(), json!(t.irreducible(i).dim()));
            if let Some(c) = t.central_character(i) {
                row.insert("central_character".into(), json!(c));
            }
            row.insert("values".into(), class_function(t.irreducible(i)));
            Value::Object(row)
        })
        .collect();
    let mut out = Map::new();
    out.insert("group".into(), json!(descriptor));
    out.insert("order".into(), json!(g.order()));
    out.insert("exponent".into(), json!(g.exponent()));
    out.insert("classes".into(), classes(g));
    out.insert("irreducibles".into(), Value::Array(irreducibles));
    out.insert("dixon_prime".into(), json!(t.dixon_info().map(|d| d.prime)));
    out.insert("dixon_primitive_root".into(), json!(t.dixon_info().map(|d| d.primitive_root)));
    if let Some(m) = g.element(g.identity()).as_matrix() {
        out.insert("field_modulus".into(), json!(m.field().modulus()));
    }
    Value::Object(out)
}

/// `{"order": m, "mults": {"j": k, ...}}`: `k` copies of `ζ_m^j`.
pub fn multiset(m: &EigenMultiset) -> Value {
    let mults: Map<String, Value> = m.multiplicities().iter().map(|(j, k)| (j.to_string(), json!(k))).collect();
    json!({"order": m.order(), "mults": mults})
}

pub fn deficit(d: &Deficit) -> Value {
    json!({"order": d.order, "exponent": d.exponent, "needed": d.needed, "available": d.available})
}
