use delpezzo::dp3::{classify, DP3Family};
use delpezzo::record::ReportRecord;
use delpezzo::scroll::{base_locus, h0, monomials, mult_subscroll, DivisorClass, Monomial, Scroll};
use serde::Serialize;
use wasm_bindgen::prelude::*;

const MAX_GRID_CELLS: i64 = 100_000;

pub fn classify_record(d1: i64, d2: i64, d3: i64, n: i64) -> Result<ReportRecord, String> {
    let f = DP3Family::new(d1, d2, d3, n).map_err(|e| e.to_string())?;
    Ok(ReportRecord::from(&classify(&f)))
}

/// Verdicts over the `(d1, n)` rectangle with `d2`, `d3` held fixed. Rows are
/// indexed by `n` ascending; cells with `d1 < d2` are `None`.
#[derive(Debug, Serialize)]
pub struct VerdictGrid {
    pub d1: Vec<i64>,
    pub n: Vec<i64>,
    pub cells: Vec<Vec<Option<String>>>,
}

pub fn verdict_grid(max_d1: i64, d2: i64, d3: i64, n_min: i64, n_max: i64) -> Result<VerdictGrid, String> {
    if d3 < 0 || d2 < d3 || max_d1 < d2 || n_min > n_max {
        return Err("need max_d1 >= d2 >= d3 >= 0 and n_min <= n_max".into());
    }
    let cols = max_d1 + 1;
    let rows = n_max - n_min + 1;
    if cols.saturating_mul(rows) > MAX_GRID_CELLS {
        return Err(format!("grid too large (limit {MAX_GRID_CELLS} cells)"));
    }
    let cells = (n_min..=n_max)
        .map(|n| {
            (0..=max_d1)
                .map(|d1| {
                    let f = DP3Family::new(d1, d2, d3, n).ok()?;
                    Some(classify(&f).verdict.to_string())
                })
                .collect()
        })
        .collect();
    Ok(VerdictGrid {
        d1: (0..=max_d1).collect(),
        n: (n_min..=n_max).collect(),
        cells,
    })
}

#[derive(Debug, Serialize)]
pub struct LinearSystem {
    pub scroll: Vec<i64>,
    pub class: String,
    pub h0: u64,
    pub monomials: Vec<Monomial>,
    /// Multiplicity along `Y_2, ..., Y_k`; empty when the system is empty.
    pub mult: Vec<u64>,
    pub base_locus: Option<String>,
}

pub fn linear_system(degrees: Vec<i64>, a: i64, b: i64) -> Result<LinearSystem, String> {
    let s = Scroll::normalize(degrees).map_err(|e| e.to_string())?;
    let cls = DivisorClass::new(a, b);
    let (mult, base) = match base_locus(&s, cls) {
        Ok(base) => {
            let mult = (2..=s.rank())
                .map(|j| mult_subscroll(&s, cls, s.subscroll(j)?))
                .collect::<delpezzo::Result<Vec<_>>>()
                .map_err(|e| e.to_string())?;
            (mult, base.map(|y| y.to_string()))
        }
        Err(_) => (Vec::new(), None),
    };
    Ok(LinearSystem {
        scroll: s.degrees().to_vec(),
        class: cls.to_string(),
        h0: h0(&s, cls),
        monomials: monomials(&s, cls).into_iter().filter(Monomial::is_admissible).collect(),
        mult,
        base_locus: base,
    })
}

fn to_json<T: Serialize>(r: Result<T, String>) -> Result<String, String> {
    serde_json::to_string(&r?).map_err(|e| e.to_string())
}

fn to_js<T: Serialize>(r: Result<T, String>) -> Result<String, JsValue> {
    to_json(r).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn classify_json(d1: i32, d2: i32, d3: i32, n: i32) -> Result<String, JsValue> {
    to_js(classify_record(d1.into(), d2.into(), d3.into(), n.into()))
}

#[wasm_bindgen]
pub fn verdict_grid_json(max_d1: i32, d2: i32, d3: i32, n_min: i32, n_max: i32) -> Result<String, JsValue> {
    to_js(verdict_grid(max_d1.into(), d2.into(), d3.into(), n_min.into(), n_max.into()))
}

#[wasm_bindgen]
pub fn linsys_json(degrees: Vec<i32>, a: i32, b: i32) -> Result<String, JsValue> {
    to_js(linear_system(degrees.into_iter().map(i64::from).collect(), a.into(), b.into()))
}
