use std::fmt::Write;

use milnor::invariants::{
    classify, dpw_bounds, e_invariant, gap_to_max, gap_to_max_prime, tjurina_formula,
};
use milnor::{
    parse_poly, BettiData, Curve, Field, FieldDescriptor, PrimeField, Rationals, ResolutionError,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exit;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalyzeError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    NotReduced(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl AnalyzeError {
    pub fn exit_code(&self) -> i32 {
        match self {
            AnalyzeError::Input(_) => exit::INPUT,
            AnalyzeError::NotReduced(_) => exit::NOT_REDUCED,
            AnalyzeError::Inconsistent(_) => exit::INCONSISTENT,
        }
    }
}

impl From<ResolutionError> for AnalyzeError {
    fn from(e: ResolutionError) -> Self {
        match e {
            ResolutionError::NotReduced | ResolutionError::NotStabilized { .. } => {
                AnalyzeError::NotReduced(e.to_string())
            }
            ResolutionError::DegreeTooSmall(_) => AnalyzeError::Input(e.to_string()),
            ResolutionError::NotASyzygy(_) | ResolutionError::InternalInconsistency(_) => {
                AnalyzeError::Inconsistent(e.to_string())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Twists {
    pub first: Vec<u32>,
    pub second: Vec<u32>,
    pub third: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFlags {
    pub free: bool,
    pub plus_one_generated: bool,
    pub nearly_free: bool,
    pub mpog: bool,
    pub three_syzygy: bool,
    pub maximal_tjurina: bool,
    pub nearly_maximal_tjurina: Option<u8>,
    pub type4_class: Option<u8>,
    pub delta_m: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub tau_min: i64,
    pub tau_max: i64,
    pub tau_max_prime: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gaps {
    pub to_max: Option<i64>,
    pub to_max_prime: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Consistency {
    pub oracle_equals_formula: bool,
    pub euler_identity: bool,
}

/// Everything computed for one curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveReport {
    pub schema_version: u32,
    pub name: String,
    pub expression: String,
    pub canonical: String,
    pub field: String,
    pub certified: bool,
    pub degree: u32,
    pub reduced: bool,
    pub tau_oracle: i64,
    pub tau_formula: i64,
    pub m: usize,
    pub exponents: Vec<u32>,
    pub epsilons: Vec<u32>,
    pub twists: Twists,
    pub t: i64,
    pub partition: Option<Vec<i64>>,
    pub classification: ClassFlags,
    pub bounds: Option<BoundsReport>,
    pub gaps: Gaps,
    pub e_invariant: Option<i64>,
    pub generators: Vec<String>,
    pub consistency: Consistency,
}

impl CurveReport {
    pub fn is_consistent(&self) -> bool {
        self.consistency.oracle_equals_formula && self.consistency.euler_identity
    }

    pub fn exit_code(&self) -> i32 {
        if self.is_consistent() {
            exit::OK
        } else {
            exit::INCONSISTENT
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn render_text(&self, with_generators: bool) -> String {
        let mut s = String::new();
        let cert = if self.certified { "" } else { ", not certified" };
        let _ = writeln!(s, "{}: {}  [{}{}]", self.name, self.canonical, self.field, cert);
        let part = match &self.partition {
            Some(p) => tuple(p),
            None => "none (free)".into(),
        };
        let _ = writeln!(s, "  degree {}, m = {}, t = {}, partition {}", self.degree, self.m, self.t, part);
        let _ = writeln!(s, "  tau: oracle {}, formula {}", self.tau_oracle, self.tau_formula);
        let _ = writeln!(s, "  exponents {}, epsilons {}", tuple(&self.exponents), tuple(&self.epsilons));
        let _ = writeln!(s, "  resolution: {}", self.resolution_string());
        if let Some(b) = &self.bounds {
            let prime = b.tau_max_prime.map(|p| format!(", tau'_max {p}")).unwrap_or_default();
            let _ = writeln!(s, "  bounds: tau_min {}, tau_max {}{}", b.tau_min, b.tau_max, prime);
        }
        let mut gaps = Vec::new();
        if let Some(g) = self.gaps.to_max {
            gaps.push(format!("to tau_max {g}"));
        }
        if let Some(g) = self.gaps.to_max_prime {
            gaps.push(format!("to tau'_max {g}"));
        }
        if !gaps.is_empty() {
            let _ = writeln!(s, "  gaps: {}", gaps.join(", "));
        }
        let e = self.e_invariant.map(|e| format!("E = {e}, ")).unwrap_or_default();
        let _ = writeln!(s, "  {}delta_m = {}", e, self.classification.delta_m);
        let _ = writeln!(s, "  classes: {}", self.class_names().join(", "));
        let ok = |b: bool| if b { "ok" } else { "FAILED" };
        let _ = writeln!(
            s,
            "  checks: oracle = formula {}, Hilbert identity {}",
            ok(self.consistency.oracle_equals_formula),
            ok(self.consistency.euler_identity)
        );
        if with_generators {
            let _ = writeln!(s, "  syzygy generators:");
            for (d, g) in self.exponents.iter().zip(&self.generators) {
                let _ = writeln!(s, "    [{d}] {g}");
            }
        }
        s
    }

    /// `0 -> ... -> S` with repeated twists collected into powers.
    pub fn resolution_string(&self) -> String {
        let mut parts = vec!["0".to_string()];
        for list in [&self.twists.third, &self.twists.second, &self.twists.first] {
            if !list.is_empty() {
                parts.push(module_string(list));
            }
        }
        parts.push("S".into());
        parts.join(" -> ")
    }

    fn class_names(&self) -> Vec<String> {
        let c = &self.classification;
        let mut v = Vec::new();
        let mut flag = |on: bool, name: &str| {
            if on {
                v.push(name.to_string());
            }
        };
        flag(c.free, "free");
        flag(c.plus_one_generated, "plus-one generated");
        flag(c.nearly_free, "nearly free");
        flag(c.mpog, "minimal plus-one generated");
        flag(c.three_syzygy, "3-syzygy");
        flag(c.maximal_tjurina, "maximal Tjurina");
        if let Some(k) = c.nearly_maximal_tjurina {
            v.push(format!("nearly maximal Tjurina (case {k})"));
        }
        if let Some(k) = c.type4_class {
            v.push(format!("type-4 class {k}"));
        }
        if v.is_empty() {
            v.push("none".into());
        }
        v
    }
}

fn tuple<T: ToString>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn module_string(twists: &[u32]) -> String {
    let mut groups: Vec<(u32, usize)> = Vec::new();
    for &t in twists {
        match groups.last_mut() {
            Some((v, n)) if *v == t => *n += 1,
            _ => groups.push((t, 1)),
        }
    }
    groups
        .iter()
        .map(|&(v, n)| if n == 1 { format!("S(-{v})") } else { format!("S(-{v})^{n}") })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn inconsistent<E: ToString>(e: E) -> AnalyzeError {
    AnalyzeError::Inconsistent(e.to_string())
}

/// Full pipeline over a given field.
pub fn analyze_in<F: Field>(name: &str, expression: &str, field: &F) -> Result<CurveReport, AnalyzeError> {
    let f = parse_poly(expression, field).map_err(|e| AnalyzeError::Input(e.to_string()))?;
    if f.degree() < 3 {
        return Err(AnalyzeError::Input(format!("curve degree {} is below 3", f.degree())));
    }
    let canonical = f.to_string();
    let mut curve = Curve::new(f);
    let tau_oracle = curve.tjurina_oracle()? as i64;
    let res = curve.minimal_resolution()?;
    let euler_identity = curve.consistency_check(&res);
    let b = BettiData::from_resolution(&res).map_err(inconsistent)?;
    let tau_formula = tjurina_formula(&b).map_err(inconsistent)?;
    let class = classify(&b);
    let d = b.degree();
    let d1 = b.exponents()[0];
    let bounds = dpw_bounds(d, d1).ok().map(|x| BoundsReport {
        tau_min: x.tau_min,
        tau_max: x.tau_max,
        tau_max_prime: x.tau_max_prime,
    });
    let to_max = if class.t >= 1 { Some(gap_to_max(&b).map_err(inconsistent)?) } else { None };
    let to_max_prime = if class.t >= 1 && 2 * d1 >= d {
        Some(gap_to_max_prime(&b).map_err(inconsistent)?)
    } else {
        None
    };
    let e = if b.m() >= 3 { Some(e_invariant(&b).map_err(inconsistent)?) } else { None };
    Ok(CurveReport {
        schema_version: SCHEMA_VERSION,
        name: name.to_string(),
        expression: expression.to_string(),
        canonical,
        field: field.descriptor().to_string(),
        certified: field.descriptor().is_certified(),
        degree: res.degree,
        reduced: true,
        tau_oracle,
        tau_formula,
        m: res.m(),
        exponents: res.exponents.clone(),
        epsilons: res.epsilons.clone(),
        twists: Twists {
            first: res.first_twists(),
            second: res.second_twists(),
            third: res.third_twists(),
        },
        t: class.t,
        partition: class.partition.as_ref().map(|p| p.parts().to_vec()),
        classification: ClassFlags {
            free: class.free,
            plus_one_generated: class.plus_one_generated,
            nearly_free: class.nearly_free,
            mpog: class.mpog,
            three_syzygy: class.three_syzygy,
            maximal_tjurina: class.maximal_tjurina,
            nearly_maximal_tjurina: class.nearly_maximal_tjurina.map(|c| c.number()),
            type4_class: class.type4_class.map(|k| k as u8),
            delta_m: class.delta_m,
        },
        bounds,
        gaps: Gaps { to_max, to_max_prime },
        e_invariant: e,
        generators: res.generators.iter().map(|g| g.to_string()).collect(),
        consistency: Consistency {
            oracle_equals_formula: tau_oracle == tau_formula,
            euler_identity,
        },
    })
}

pub fn analyze(name: &str, expression: &str, field: FieldDescriptor) -> Result<CurveReport, AnalyzeError> {
    match field {
        FieldDescriptor::Rational => analyze_in(name, expression, &Rationals),
        FieldDescriptor::Prime(p) => {
            let fp = PrimeField::new(p).map_err(|e| AnalyzeError::Input(e.to_string()))?;
            analyze_in(name, expression, &fp)
        }
    }
}

/// Parses a curve file: `name: expression` per line, `#` starts a comment.
pub fn parse_curve_file(text: &str) -> Result<Vec<(String, String)>, AnalyzeError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((name, expr)) = line.split_once(':') else {
            return Err(AnalyzeError::Input(format!("line {}: expected `name: expression`", i + 1)));
        };
        let (name, expr) = (name.trim(), expr.trim());
        if name.is_empty() || expr.is_empty() {
            return Err(AnalyzeError::Input(format!("line {}: empty name or expression", i + 1)));
        }
        out.push((name.to_string(), expr.to_string()));
    }
    Ok(out)
}
