//! Flat, serializable views of a [`ClassificationReport`]. The field order of
//! these structs is the JSON key order.

use serde::{Deserialize, Serialize};

use crate::dp3::{ClassificationReport, ConePosition, Route, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub d1: i64,
    pub d2: i64,
    pub d3: i64,
    pub n: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegenerationRecord {
    pub r: i64,
    pub mu: i64,
    pub ks2: i64,
    pub shokurov: bool,
    pub odp: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub family: FamilyRecord,
    pub smooth_pic2: bool,
    pub k3: i64,
    pub euler: i64,
    pub cone: ConePosition,
    pub degeneration: Option<DegenerationRecord>,
    pub verdict: Verdict,
    pub route: Route,
}

pub const CSV_HEADER: &str =
    "d1,d2,d3,n,smooth_pic2,k3,euler,cone,r,mu,ks2,shokurov,odp,verdict,route";

impl From<&ClassificationReport> for ReportRecord {
    fn from(r: &ClassificationReport) -> Self {
        let f = r.family;
        Self {
            family: FamilyRecord { d1: f.d1, d2: f.d2, d3: f.d3, n: f.n },
            smooth_pic2: r.smooth_pic2,
            k3: r.k3,
            euler: r.euler,
            cone: r.cone,
            degeneration: r.degeneration.map(|d| DegenerationRecord {
                r: d.r,
                mu: d.mu,
                ks2: d.ks2,
                shokurov: d.shokurov,
                odp: d.odp,
            }),
            verdict: r.verdict,
            route: r.route,
        }
    }
}

impl ReportRecord {
    /// Cells in [`CSV_HEADER`] order; degeneration cells are empty when absent.
    pub fn cells(&self) -> Vec<String> {
        let f = self.family;
        let mut cells = vec![
            f.d1.to_string(),
            f.d2.to_string(),
            f.d3.to_string(),
            f.n.to_string(),
            self.smooth_pic2.to_string(),
            self.k3.to_string(),
            self.euler.to_string(),
            self.cone.to_string(),
        ];
        match self.degeneration {
            Some(d) => cells.extend([
                d.r.to_string(),
                d.mu.to_string(),
                d.ks2.to_string(),
                d.shokurov.to_string(),
                d.odp.to_string(),
            ]),
            None => cells.extend(std::iter::repeat_n(String::new(), 5)),
        }
        cells.push(self.verdict.to_string());
        cells.push(self.route.to_string());
        cells
    }

    pub fn csv_row(&self) -> String {
        self.cells().join(",")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dp3::{classify, DP3Family};

    #[test]
    fn json_shape() {
        let r = classify(&DP3Family::new(0, 0, 0, 1).unwrap());
        let json = serde_json::to_string(&ReportRecord::from(&r)).unwrap();
        assert_eq!(
            json,
            r#"{"family":{"d1":0,"d2":0,"d3":0,"n":1},"smooth_pic2":true,"k3":-10,"euler":-14,"cone":"Inside","degeneration":{"r":0,"mu":3,"ks2":5,"shokurov":false,"odp":4},"verdict":"Rational","route":"MainTheoremRational"}"#
        );
        let back: ReportRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    #[test]
    fn csv_cells() {
        assert_eq!(CSV_HEADER.split(',').count(), 15);
        let r = classify(&DP3Family::new(0, 0, 0, 0).unwrap());
        let row = ReportRecord::from(&r).csv_row();
        assert_eq!(row, "0,0,0,0,false,-18,18,Inside,,,,,,NotGeneralSmoothPic2,None");
    }
}
