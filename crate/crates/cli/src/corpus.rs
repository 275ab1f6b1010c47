//! Bundled reference curves with stored expectations.

use milnor::FieldDescriptor;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::report::{analyze, AnalyzeError, CurveReport};

const CORPUS_JSON: &str = include_str!("../corpus.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedFlags {
    pub free: bool,
    pub plus_one_generated: bool,
    pub nearly_free: bool,
    pub mpog: bool,
    pub maximal_tjurina: bool,
    pub nearly_maximal_tjurina: Option<u8>,
    pub type4_class: Option<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub degree: u32,
    pub m: usize,
    pub tau: i64,
    pub exponents: Vec<u32>,
    pub epsilons: Vec<u32>,
    pub second_twists: Vec<u32>,
    pub third_twists: Vec<u32>,
    pub t: i64,
    pub delta_m: i64,
    pub flags: ExpectedFlags,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub name: String,
    pub expression: String,
    pub slow: bool,
    pub expected: Expected,
}

pub fn entries() -> Vec<CorpusEntry> {
    serde_json::from_str(CORPUS_JSON).expect("bundled corpus is valid")
}

pub fn find(name: &str) -> Option<CorpusEntry> {
    entries().into_iter().find(|e| e.name == name)
}

/// Differences between a report and the stored expectation, one line each.
pub fn compare(expected: &Expected, r: &CurveReport) -> Vec<String> {
    let mut out = Vec::new();
    let mut check = |what: &str, want: String, got: String| {
        if want != got {
            out.push(format!("{what}: expected {want}, got {got}"));
        }
    };
    let c = &r.classification;
    let f = &expected.flags;
    check("degree", expected.degree.to_string(), r.degree.to_string());
    check("m", expected.m.to_string(), r.m.to_string());
    check("tau (oracle)", expected.tau.to_string(), r.tau_oracle.to_string());
    check("tau (formula)", expected.tau.to_string(), r.tau_formula.to_string());
    check("exponents", format!("{:?}", expected.exponents), format!("{:?}", r.exponents));
    check("epsilons", format!("{:?}", expected.epsilons), format!("{:?}", r.epsilons));
    check("first twists", format!("{:?}", vec![expected.degree - 1; 3]), format!("{:?}", r.twists.first));
    check("second twists", format!("{:?}", expected.second_twists), format!("{:?}", r.twists.second));
    check("third twists", format!("{:?}", expected.third_twists), format!("{:?}", r.twists.third));
    check("t", expected.t.to_string(), r.t.to_string());
    check("delta_m", expected.delta_m.to_string(), c.delta_m.to_string());
    check("free", f.free.to_string(), c.free.to_string());
    check("plus_one_generated", f.plus_one_generated.to_string(), c.plus_one_generated.to_string());
    check("nearly_free", f.nearly_free.to_string(), c.nearly_free.to_string());
    check("mpog", f.mpog.to_string(), c.mpog.to_string());
    check("maximal_tjurina", f.maximal_tjurina.to_string(), c.maximal_tjurina.to_string());
    check(
        "nearly_maximal_tjurina",
        format!("{:?}", f.nearly_maximal_tjurina),
        format!("{:?}", c.nearly_maximal_tjurina),
    );
    check("type4_class", format!("{:?}", f.type4_class), format!("{:?}", c.type4_class));
    check("consistency", "true".into(), r.is_consistent().to_string());
    out
}

pub struct Outcome {
    pub entry: CorpusEntry,
    pub report: Result<CurveReport, AnalyzeError>,
    pub mismatches: Vec<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.report.is_ok() && self.mismatches.is_empty()
    }
}

/// Analyzes the selected entries concurrently; results keep corpus order.
pub fn run(entries: Vec<CorpusEntry>, field: FieldDescriptor) -> Vec<Outcome> {
    entries
        .into_par_iter()
        .map(|entry| {
            let report = analyze(&entry.name, &entry.expression, field);
            let mismatches = match &report {
                Ok(r) => compare(&entry.expected, r),
                Err(e) => vec![e.to_string()],
            };
            Outcome {
                entry,
                report,
                mismatches,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_loads() {
        let all = entries();
        assert_eq!(all.len(), 12);
        assert_eq!(all.iter().filter(|e| e.slow).count(), 1);
        for e in &all {
            let x = &e.expected;
            assert_eq!(x.m, x.exponents.len());
            assert_eq!(x.epsilons.len() + 2, x.m);
        }
        assert!(find("4T_pi5").is_some());
        assert!(find("nope").is_none());
    }
}
