//! Browser demo: JSON views of parabolic tables, zero-exponent classification and
//! residue survivors. Every export returns a JSON string; failures come back as
//! `{"error": "..."}`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use weylres::combinatorics::{Composition, SpComposition};
use weylres::exponent::{classify_zero_exponents, ResidueContext};
use weylres::meromorphy::{residue_order, surviving_residue_terms, AnalyticAxioms, GkRecipe};
use weylres::parabolic::{enumerate_tables, StandardParabolic};

fn respond(r: Result<Value, String>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

fn context(m: u32, n: u32) -> Result<ResidueContext, String> {
    if m > 6 || n > 3 {
        return Err("keep m ≤ 6 and n ≤ 3 in the browser".into());
    }
    ResidueContext::new(m as usize, n as usize).map_err(|e| e.to_string())
}

/// Tables `T ∈ 𝒯^α_{a,b}` with `σ_T` and the induced parabolic of `H`.
#[wasm_bindgen]
pub fn tables(group: &str, a: u32, b: u32, alpha: &str) -> String {
    respond((|| {
        let base = match group {
            "sp" => StandardParabolic::Sp(alpha.parse::<SpComposition>().map_err(|e| e.to_string())?),
            "gl" => StandardParabolic::Gl(alpha.parse::<Composition>().map_err(|e| e.to_string())?),
            g => return Err(format!("unknown group {g:?}")),
        };
        let ts = enumerate_tables(a as usize, b as usize, &base).map_err(|e| e.to_string())?;
        Ok(json!(ts
            .iter()
            .map(|t| json!({ "row_a": t.row_a, "row_b": t.row_b, "sigma": t.sigma(), "h_intersection": t.h_intersection().to_string() }))
            .collect::<Vec<_>>()))
    })())
}

/// Coweight pairings of `η[Q,w;μ₀]` for every proper `Q` and `w ∈ ₗW_M′`.
#[wasm_bindgen]
pub fn zero_exponents(m: u32, n: u32) -> String {
    respond((|| {
        let recs = classify_zero_exponents(&context(m, n)?).map_err(|e| e.to_string())?;
        serde_json::to_value(recs).map_err(|e| e.to_string())
    })())
}

/// Surviving terms per `Q_i` and the order of `q·f` at `λ₀` for each recipe.
#[wasm_bindgen]
pub fn residue(m: u32, n: u32) -> String {
    respond((|| {
        let c = context(m, n)?;
        let mut survivors = Vec::new();
        for i in 0..=c.m {
            let q = c.q_i(i);
            let ws = surviving_residue_terms(&c, &q).map_err(|e| e.to_string())?;
            survivors.push(json!({ "q": q, "survivors": ws, "exponent": c.cuspidal_exponent(i) }));
        }
        let ax = AnalyticAxioms::default();
        let mut orders = Vec::new();
        for recipe in GkRecipe::ALL {
            let r = residue_order(&c, recipe, &ax, 0).map_err(|e| e.to_string())?;
            orders.push(json!({ "recipe": recipe, "order": r }));
        }
        Ok(json!({ "survivors": survivors, "orders": orders }))
    })())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exports_return_json() {
        let t: Value = serde_json::from_str(&tables("sp", 1, 1, "1;1")).unwrap();
        assert_eq!(t.as_array().unwrap().len(), 2);
        let z: Value = serde_json::from_str(&zero_exponents(1, 1)).unwrap();
        assert!(z.as_array().unwrap().iter().all(|r| r["consistent"] == true));
        let r: Value = serde_json::from_str(&residue(2, 1)).unwrap();
        assert_eq!(r["survivors"].as_array().unwrap().len(), 3);
        assert_eq!(r["orders"][2]["order"]["order"], 0);
        let e: Value = serde_json::from_str(&tables("so", 1, 1, "2")).unwrap();
        assert!(e["error"].is_string());
        let e: Value = serde_json::from_str(&residue(1, 0)).unwrap();
        assert!(e["error"].is_string());
    }
}
