//! Browser bindings for the `cremona` crate.
//!
//! Each exported function takes text input and returns a JSON string with
//! either the result or an `error` field, so the page needs no glue types.

use cremona::homaloidal::{hudson_test, length_table as table};
use cremona::monomial::{dynamical_length, factor_word, gl2_length};
use cremona::{parse_class, parse_matrix_or_word, HomaloidalType};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest degree accepted by [`length_table`], to keep the page responsive.
pub const MAX_TABLE_DEGREE: u32 = 20;

fn error(message: impl ToString, trace: Vec<String>) -> String {
    json!({ "error": message.to_string(), "trace": trace }).to_string()
}

/// Predecessor chain of a homaloidal type such as `(17; 6^8)`.
///
/// Rejected classes report the Hudson descent in `trace`.
#[wasm_bindgen]
pub fn type_chain(input: &str) -> String {
    let raw = match parse_class(input) {
        Ok(raw) => raw,
        Err(e) => return error(e, Vec::new()),
    };
    let t = match HomaloidalType::new(&raw) {
        Ok(t) => t,
        Err(e) => {
            let trace =
                hudson_test(&raw).map(|o| o.trace.iter().map(ToString::to_string).collect());
            return error(e, trace.unwrap_or_default());
        }
    };
    match t.chain() {
        Ok(chain) => {
            let steps: Vec<Value> = chain
                .iter()
                .map(|x| json!({ "type": x.to_string(), "degree": x.degree() }))
                .collect();
            json!({ "type": t.to_string(), "length": chain.len() - 1, "chain": steps }).to_string()
        }
        Err(e) => error(e, Vec::new()),
    }
}

/// Length table of all proper types up to `max_degree`.
#[wasm_bindgen]
pub fn length_table(max_degree: u32) -> String {
    if !(1..=MAX_TABLE_DEGREE).contains(&max_degree) {
        return error(
            format!("degree must be between 1 and {MAX_TABLE_DEGREE}"),
            Vec::new(),
        );
    }
    match table(i64::from(max_degree)) {
        Ok(rows) => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "label": r.label,
                        "type": r.homaloidal_type.to_string(),
                        "length": r.length,
                        "predecessor": r.predecessor,
                        "castelnuovo": r.castelnuovo,
                    })
                })
                .collect();
            json!({ "rows": rows }).to_string()
        }
        Err(e) => error(e, Vec::new()),
    }
}

/// Length, dynamical length and factorization of a monomial map given as
/// `[[a,b],[c,d]]` or as a word `s1,s2,...`.
#[wasm_bindgen]
pub fn monomial_report(input: &str) -> String {
    let m = match parse_matrix_or_word(input) {
        Ok(m) => m,
        Err(e) => return error(e, Vec::new()),
    };
    let g = match gl2_length(&m) {
        Ok(g) => g,
        Err(e) => return error(e, Vec::new()),
    };
    let dynamical = match dynamical_length(&m) {
        Ok(v) => v.to_string(),
        Err(e) => return error(e, Vec::new()),
    };
    let w = &g.witness;
    // Only non-negative matrices of determinant one factor directly.
    let factor = factor_word(&m)
        .ok()
        .map(|f| json!({ "word": f.word.to_string(), "flipped": f.flipped }));
    json!({
        "matrix": m.to_string(),
        "length": g.length,
        "dynamical_length": dynamical,
        "witness": {
            "sign": w.sign,
            "left": w.left.to_string(),
            "right": w.right.to_string(),
            "word": w.word.to_string(),
        },
        "factor": factor,
    })
    .to_string()
}
