//! Candidate Betti data files and verdict serialization.

use milnor::invariants::{validate_candidate, Candidate, Verdict};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CandidateInput {
    pub exponents: Vec<i64>,
    pub epsilons: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationReport {
    pub rule: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub exponents: Vec<i64>,
    pub epsilons: Vec<i64>,
    pub degree: Option<i64>,
    pub accepted: bool,
    pub e_invariant: Option<i64>,
    pub tau: Option<i64>,
    pub violations: Vec<ViolationReport>,
}

impl VerdictReport {
    fn new(c: &CandidateInput, v: &Verdict) -> Self {
        VerdictReport {
            exponents: c.exponents.clone(),
            epsilons: c.epsilons.clone(),
            degree: v.degree,
            accepted: v.accepted(),
            e_invariant: v.e,
            tau: v.tau,
            violations: v
                .violations
                .iter()
                .map(|x| ViolationReport {
                    rule: x.rule.label().to_string(),
                    detail: x.detail.clone(),
                })
                .collect(),
        }
    }

    pub fn render_text(&self) -> String {
        let head = format!("exponents {:?} epsilons {:?}", self.exponents, self.epsilons);
        let d = self.degree.map(|d| format!(" (d = {d})")).unwrap_or_default();
        if self.accepted {
            return format!("accept {head}{d}\n");
        }
        let mut s = format!("reject {head}{d}\n");
        for v in &self.violations {
            s.push_str(&format!("  {}: {}\n", v.rule, v.detail));
        }
        s
    }
}

pub fn parse_candidates(text: &str) -> Result<Vec<CandidateInput>, serde_json::Error> {
    serde_json::from_str(text)
}

pub fn check(c: &CandidateInput) -> VerdictReport {
    let v = validate_candidate(&Candidate {
        exponents: c.exponents.clone(),
        epsilons: c.epsilons.clone(),
    });
    VerdictReport::new(c, &v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_checks() {
        let list = parse_candidates(r#"[{"exponents":[3,8,8,15],"epsilons":[1,1]}]"#).unwrap();
        let r = check(&list[0]);
        assert!(!r.accepted);
        assert_eq!(r.e_invariant, Some(-1));
        assert!(r.render_text().contains("e_invariant: E = -1"));
        assert!(parse_candidates(r#"[{"exponents":[3]}]"#).is_err());
        assert!(parse_candidates(r#"[{"exponents":[3],"epsilons":[],"x":1}]"#).is_err());
    }
}
