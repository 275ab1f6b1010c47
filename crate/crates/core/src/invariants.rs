//! Invariants that depend only on the Betti data `(d; d_1..d_m; eps_1..eps_{m-2})`.
//!
//! Everything here is integer arithmetic; no curve is needed. Identities that
//! are expected to hold are recomputed in two ways and compared, so a broken
//! formula surfaces as [`InvariantError::InternalInconsistency`].

use std::fmt;

use crate::error::InvariantError;
use crate::field::Field;
use crate::resolution::ResolutionData;

/// Degree, exponents and epsilons of a (possibly hypothetical) curve.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BettiData {
    degree: i64,
    exponents: Vec<i64>,
    epsilons: Vec<i64>,
}

impl BettiData {
    /// Derives `d = d_1 + d_2 + 1 - sum eps` and checks the structural
    /// requirements: `m >= 2`, `m - 2` epsilons all positive, sorted
    /// nonnegative exponents, `d >= 3`.
    pub fn new(exponents: Vec<i64>, epsilons: Vec<i64>) -> Result<Self, InvariantError> {
        let bad = |s: String| Err(InvariantError::InvalidBetti(s));
        let m = exponents.len();
        if m < 2 {
            return bad(format!("need at least two exponents, got {m}"));
        }
        if epsilons.len() != m - 2 {
            return bad(format!("{m} exponents need {} epsilons, got {}", m - 2, epsilons.len()));
        }
        if let Some(e) = epsilons.iter().find(|&&e| e < 1) {
            return bad(format!("epsilon {e} < 1"));
        }
        if exponents.windows(2).any(|w| w[0] > w[1]) {
            return bad(format!("exponents {exponents:?} not sorted"));
        }
        if exponents[0] < 0 {
            return bad("negative exponent".into());
        }
        let degree = derived_degree(&exponents, &epsilons);
        if degree < 3 {
            return bad(format!("derived degree {degree} < 3"));
        }
        Ok(BettiData {
            degree,
            exponents,
            epsilons,
        })
    }

    pub fn from_resolution<F: Field>(res: &ResolutionData<F>) -> Result<Self, InvariantError> {
        let b = Self::new(
            res.exponents.iter().map(|&e| e as i64).collect(),
            res.epsilons.iter().map(|&e| e as i64).collect(),
        )?;
        if b.degree != res.degree as i64 {
            return Err(InvariantError::InternalInconsistency(format!(
                "resolution of a degree {} curve gives derived degree {}",
                res.degree, b.degree
            )));
        }
        Ok(b)
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn epsilons(&self) -> &[i64] {
        &self.epsilons
    }

    pub fn m(&self) -> usize {
        self.exponents.len()
    }

    fn d1(&self) -> i64 {
        self.exponents[0]
    }

    fn d2(&self) -> i64 {
        self.exponents[1]
    }
}

impl fmt::Display for BettiData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "d={} exponents {} epsilons {}",
            self.degree,
            tuple(&self.exponents),
            tuple(&self.epsilons)
        )
    }
}

fn tuple(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn derived_degree(exponents: &[i64], epsilons: &[i64]) -> i64 {
    exponents[0] + exponents[1] + 1 - epsilons.iter().sum::<i64>()
}

/// An ordered partition (composition) of `t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(pub Vec<i64>);

impl Partition {
    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", tuple(&self.0))
    }
}

/// `t = d_1 + d_2 + 1 - d`.
pub fn type_of(b: &BettiData) -> i64 {
    let t = b.d1() + b.d2() + 1 - b.degree;
    debug_assert_eq!(t, b.epsilons.iter().sum::<i64>());
    t
}

pub fn partition_of(b: &BettiData) -> Result<Partition, InvariantError> {
    if b.m() == 2 {
        return Err(InvariantError::FreeCurve);
    }
    Ok(Partition(b.epsilons.clone()))
}

/// `(t^2 - sum eps^2) / 2` and `sum_{i<j} eps_i eps_j`.
fn r_forms(eps: &[i64]) -> (i64, i64) {
    let t: i64 = eps.iter().sum();
    let squares: i64 = eps.iter().map(|e| e * e).sum();
    let mut pairs = 0;
    for i in 0..eps.len() {
        for j in i + 1..eps.len() {
            pairs += eps[i] * eps[j];
        }
    }
    ((t * t - squares) / 2, pairs)
}

/// The correction term `R`; zero exactly when `m <= 3`.
pub fn r_term(b: &BettiData) -> i64 {
    r_term_of(&b.epsilons)
}

pub fn r_term_of(eps: &[i64]) -> i64 {
    let (a, b) = r_forms(eps);
    assert_eq!(a, b, "both forms of R agree");
    a
}

fn tau_raw(b: &BettiData) -> i64 {
    let (d1, d2) = (b.d1(), b.d2());
    let t = type_of(b);
    let tail: i64 = b
        .epsilons
        .iter()
        .zip(&b.exponents[2..])
        .map(|(e, d)| e * d)
        .sum();
    d1 * d1 + d1 * d2 + d2 * d2 - t * (d1 + d2) - tail + r_term(b)
}

/// Total Tjurina number from the Betti data. For `m = 2` this is
/// `d_1^2 + d_1 d_2 + d_2^2`.
pub fn tjurina_formula(b: &BettiData) -> Result<i64, InvariantError> {
    let tau = tau_raw(b);
    if tau < 0 {
        return Err(InvariantError::NegativeResult(tau));
    }
    Ok(tau)
}

/// The eight branches for `t = 4`, indexed 1..=8 in the order of
/// [`TYPE4_PARTITIONS`], written out term by term.
pub fn type4_tau(class: usize, e: &[i64]) -> Option<i64> {
    let base = |e: &[i64]| e[0] * e[0] + e[0] * e[1] + e[1] * e[1] - 4 * e[0] - 4 * e[1];
    let v = match (class, e.len()) {
        (1, 3) => e[0] * e[0] + e[0] * e[1] + e[1] * e[1] - 4 * (e[0] + e[1] + e[2]),
        (2, 4) => base(e) + 3 - 3 * e[2] - e[3],
        (3, 4) => base(e) + 4 - 2 * e[2] - 2 * e[3],
        (4, 4) => base(e) + 3 - e[2] - 3 * e[3],
        (5, 5) => base(e) + 5 - 2 * e[2] - e[3] - e[4],
        (6, 5) => base(e) + 5 - e[2] - 2 * e[3] - e[4],
        (7, 5) => base(e) + 5 - e[2] - e[3] - 2 * e[4],
        (8, 6) => base(e) + 6 - (e[2] + e[3] + e[4] + e[5]),
        _ => return None,
    };
    Some(v)
}

/// The ordered partitions of 4, in class order.
pub const TYPE4_PARTITIONS: [&[i64]; 8] = [
    &[4],
    &[3, 1],
    &[2, 2],
    &[1, 3],
    &[2, 1, 1],
    &[1, 2, 1],
    &[1, 1, 2],
    &[1, 1, 1, 1],
];

/// Lower and upper bounds for `tau` given `d` and `d_1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub tau_min: i64,
    pub tau_max: i64,
    /// Present iff `2 d_1 >= d`.
    pub tau_max_prime: Option<i64>,
}

fn tau_min_raw(d: i64, d1: i64) -> i64 {
    (d - 1) * (d - d1 - 1)
}

fn tau_max_raw(d: i64, d1: i64) -> i64 {
    (d - 1) * (d - 1) - d1 * (d - d1 - 1)
}

fn tau_max_prime_raw(d: i64, d1: i64) -> Option<i64> {
    let n = 2 * d1 + 2 - d;
    (2 * d1 >= d).then(|| tau_max_raw(d, d1) - n * (n - 1) / 2)
}

pub fn dpw_bounds(d: i64, d1: i64) -> Result<Bounds, InvariantError> {
    if d < 3 || d1 < 1 || d1 > d - 1 {
        return Err(InvariantError::PreconditionViolated(format!(
            "bounds need d >= 3 and 1 <= d_1 <= d - 1 (d = {d}, d_1 = {d1})"
        )));
    }
    let b = Bounds {
        tau_min: tau_min_raw(d, d1),
        tau_max: tau_max_raw(d, d1),
        tau_max_prime: tau_max_prime_raw(d, d1),
    };
    assert!(b.tau_min <= b.tau_max);
    if let Some(p) = b.tau_max_prime {
        assert!(p <= b.tau_max);
    }
    Ok(b)
}

fn shared_tail(b: &BettiData) -> (i64, i64) {
    let eps_part: i64 = b.epsilons.iter().map(|e| e * e - e).sum();
    let shift: i64 = b
        .epsilons
        .iter()
        .zip(&b.exponents[2..])
        .map(|(e, d)| e * (d - b.d2()))
        .sum();
    (eps_part, shift)
}

/// `tau_max - tau` through the closed expression in `t` and the epsilons.
pub fn gap_to_max(b: &BettiData) -> Result<i64, InvariantError> {
    let t = type_of(b);
    if t < 1 {
        return Err(InvariantError::PreconditionViolated("gap needs t >= 1".into()));
    }
    let (eps_part, shift) = shared_tail(b);
    let groups = [(t * t + t) / 2, eps_part / 2, shift];
    if groups.iter().any(|&g| g < 0) {
        return Err(InvariantError::InternalInconsistency(format!("negative summand in {groups:?}")));
    }
    let gap: i64 = groups.iter().sum();
    let direct = tau_max_raw(b.degree, b.d1()) - tau_raw(b);
    if gap != direct {
        return Err(InvariantError::InternalInconsistency(format!(
            "gap to tau_max: closed form {gap}, direct {direct}"
        )));
    }
    Ok(gap)
}

/// `tau'_max - tau` through the closed expression; needs `2 d_1 >= d`.
pub fn gap_to_max_prime(b: &BettiData) -> Result<i64, InvariantError> {
    let t = type_of(b);
    if t < 1 {
        return Err(InvariantError::PreconditionViolated("gap needs t >= 1".into()));
    }
    let Some(prime) = tau_max_prime_raw(b.degree, b.d1()) else {
        return Err(InvariantError::PreconditionViolated(format!(
            "2 d_1 = {} < d = {}",
            2 * b.d1(),
            b.degree
        )));
    };
    let delta = b.d2() - b.d1();
    let (eps_part, shift) = shared_tail(b);
    // numerators over 2
    let first = t * t - (t - delta) * (t - delta);
    let second = eps_part + delta;
    if first < 0 || second < 0 || shift < 0 {
        return Err(InvariantError::InternalInconsistency(format!(
            "negative summand in ({first}/2, {second}/2, {shift})"
        )));
    }
    let twice = first + second + 2 * shift;
    if twice % 2 != 0 {
        return Err(InvariantError::InternalInconsistency(format!("odd numerator {twice}")));
    }
    let gap = twice / 2;
    let direct = prime - tau_raw(b);
    if gap != direct {
        return Err(InvariantError::InternalInconsistency(format!(
            "gap to tau'_max: closed form {gap}, direct {direct}"
        )));
    }
    Ok(gap)
}

/// `E = tau - tau_min` expressed in Betti data.
pub fn e_invariant(b: &BettiData) -> Result<i64, InvariantError> {
    let t = type_of(b);
    let squares: i64 = b.epsilons.iter().map(|e| e * e).sum();
    let tail: i64 = b
        .epsilons
        .iter()
        .zip(&b.exponents[2..])
        .map(|(e, d)| e * d)
        .sum();
    let twice = 2 * b.d1() * b.d1() + 2 * t * b.d2() - (t * t + squares) - 2 * tail;
    if twice % 2 != 0 {
        return Err(InvariantError::InternalInconsistency(format!("odd numerator {twice}")));
    }
    let e = twice / 2;
    let direct = tau_raw(b) - tau_min_raw(b.degree, b.d1());
    if e != direct {
        return Err(InvariantError::InternalInconsistency(format!(
            "E = {e} but tau - tau_min = {direct}"
        )));
    }
    Ok(e)
}

/// `t - (m - 2)`, the excess of the partition over all ones.
pub fn delta_m(b: &BettiData) -> i64 {
    let v: i64 = b.epsilons.iter().map(|e| e - 1).sum();
    let other = b.d1() + b.d2() - b.degree - b.m() as i64 + 3;
    assert_eq!(v, other);
    v
}

/// Which nearly-maximal-Tjurina shape the data has.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NearlyMaximalCase {
    /// `d_1 = .. = d_{m-1}`, `d_m = d_1 + 1`, all `eps = 1`, `m = 2 d_1 + 3 - d`.
    One,
    /// All `d_i` equal, `eps = (1, .., 1, 2)`, `m = 2 d_1 + 2 - d`.
    Two,
}

impl NearlyMaximalCase {
    pub fn number(self) -> u8 {
        match self {
            NearlyMaximalCase::One => 1,
            NearlyMaximalCase::Two => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub t: i64,
    pub m: usize,
    pub partition: Option<Partition>,
    pub delta_m: i64,
    pub free: bool,
    pub plus_one_generated: bool,
    pub nearly_free: bool,
    pub mpog: bool,
    pub three_syzygy: bool,
    pub maximal_tjurina: bool,
    pub nearly_maximal_tjurina: Option<NearlyMaximalCase>,
    /// Position 1..=8 of the partition in [`TYPE4_PARTITIONS`] when `t = 4`.
    pub type4_class: Option<usize>,
}

/// Flags from the shape of the Betti data alone.
pub fn classify(b: &BettiData) -> Classification {
    let d = b.degree;
    let m = b.m();
    let e = &b.exponents;
    let eps = &b.epsilons;
    let t = type_of(b);
    let (d1, d2) = (b.d1(), b.d2());
    let all_equal = e.iter().all(|&x| x == d1);
    let all_ones = eps.iter().all(|&x| x == 1);
    let three = m == 3;
    let nearly_maximal = if m >= 3
        && e[..m - 1].iter().all(|&x| x == d1)
        && e[m - 1] == d1 + 1
        && all_ones
        && m as i64 == 2 * d1 + 3 - d
    {
        Some(NearlyMaximalCase::One)
    } else if m >= 3
        && all_equal
        && eps[..eps.len() - 1].iter().all(|&x| x == 1)
        && eps[eps.len() - 1] == 2
        && m as i64 == 2 * d1 + 2 - d
    {
        Some(NearlyMaximalCase::Two)
    } else {
        None
    };
    let type4_class = (t == 4)
        .then(|| TYPE4_PARTITIONS.iter().position(|p| *p == &eps[..]).map(|i| i + 1))
        .flatten();
    Classification {
        t,
        m,
        partition: partition_of(b).ok(),
        delta_m: delta_m(b),
        free: m == 2,
        plus_one_generated: t == 1,
        nearly_free: three && d1 + d2 == d && d2 == e[2],
        mpog: three && d1 + d2 == d && e[2] == d2 + 1,
        three_syzygy: three,
        maximal_tjurina: t >= 1 && all_equal && all_ones && m as i64 == 2 * d1 - d + 3,
        nearly_maximal_tjurina: nearly_maximal,
        type4_class,
    }
}

/// A raw candidate: any integer lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Candidate {
    pub exponents: Vec<i64>,
    pub epsilons: Vec<i64>,
}

/// A necessary condition checked by [`validate_candidate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    Shape,
    EpsilonPositive,
    DegreeAtLeast3,
    Sorted,
    /// Not a consequence of the other conditions: pencils of lines have
    /// `d_1 = 0`. Enforced because the other rules assume it.
    D1Positive,
    D3AtMostDMinus1,
    DmAtMost2dMinus4,
    TwistsNondecreasing,
    EInvariant,
    TauBounds,
}

impl Rule {
    pub fn label(self) -> &'static str {
        match self {
            Rule::Shape => "shape",
            Rule::EpsilonPositive => "epsilon_positive",
            Rule::DegreeAtLeast3 => "degree_at_least_3",
            Rule::Sorted => "sorted",
            Rule::D1Positive => "d1_positive (assumed)",
            Rule::D3AtMostDMinus1 => "d3_at_most_d_minus_1",
            Rule::DmAtMost2dMinus4 => "dm_at_most_2d_minus_4",
            Rule::TwistsNondecreasing => "twists_nondecreasing",
            Rule::EInvariant => "e_invariant",
            Rule::TauBounds => "tau_bounds",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule: Rule,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub degree: Option<i64>,
    pub e: Option<i64>,
    pub tau: Option<i64>,
    pub violations: Vec<Violation>,
}

impl Verdict {
    pub fn accepted(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every necessary condition and reports all that fail, in a fixed order.
/// For `m = 2` only the conditions that make sense for free data are checked.
pub fn validate_candidate(c: &Candidate) -> Verdict {
    let mut v = Vec::new();
    let mut push = |rule, detail: String| v.push(Violation { rule, detail });
    let e = &c.exponents;
    let eps = &c.epsilons;
    let m = e.len();
    if m < 2 || eps.len() + 2 != m {
        push(
            Rule::Shape,
            format!("{m} exponents and {} epsilons (need m >= 2 and m - 2 epsilons)", eps.len()),
        );
        return Verdict {
            degree: None,
            e: None,
            tau: None,
            violations: v,
        };
    }
    for (j, &x) in eps.iter().enumerate() {
        if x < 1 {
            push(Rule::EpsilonPositive, format!("epsilon_{} = {x} < 1", j + 1));
        }
    }
    let d = derived_degree(e, eps);
    if d < 3 {
        push(Rule::DegreeAtLeast3, format!("d = d_1 + d_2 + 1 - t = {d} < 3"));
    }
    if e.windows(2).any(|w| w[0] > w[1]) {
        push(Rule::Sorted, format!("exponents {} not nondecreasing", tuple(e)));
    }
    if e[0] < 1 {
        push(Rule::D1Positive, format!("d_1 = {} < 1", e[0]));
    }
    if m >= 3 && e[2] > d - 1 {
        push(Rule::D3AtMostDMinus1, format!("d_3 = {} > d - 1 = {}", e[2], d - 1));
    }
    if e[m - 1] > 2 * d - 4 {
        push(Rule::DmAtMost2dMinus4, format!("d_m = {} > 2d - 4 = {}", e[m - 1], 2 * d - 4));
    }
    for j in 0..eps.len().saturating_sub(1) {
        let (a, b) = (e[j + 2] + eps[j], e[j + 3] + eps[j + 1]);
        if a > b {
            push(
                Rule::TwistsNondecreasing,
                format!("d_{0} + epsilon_{1} = {a} > d_{2} + epsilon_{3} = {b}", j + 3, j + 1, j + 4, j + 2),
            );
        }
    }
    let data = BettiData {
        degree: d,
        exponents: e.clone(),
        epsilons: eps.clone(),
    };
    let tau = tau_raw(&data);
    let mut e_value = None;
    if m >= 3 {
        let ev = e_invariant(&data).expect("E and tau - tau_min are the same polynomial");
        e_value = Some(ev);
        if m == 3 && e[1] == d - 1 && e[2] == d - 1 {
            if ev != 0 {
                push(Rule::EInvariant, format!("E = {ev}, must be 0 when m = 3 and d_2 = d_3 = d - 1"));
            }
        } else if ev <= 0 {
            push(Rule::EInvariant, format!("E = {ev}, must be > 0"));
        }
    }
    let lo = tau_min_raw(d, e[0]);
    let (hi, which) = match tau_max_prime_raw(d, e[0]) {
        Some(p) => (p, "tau'_max"),
        None => (tau_max_raw(d, e[0]), "tau_max"),
    };
    if tau < lo || tau > hi {
        push(Rule::TauBounds, format!("tau = {tau} outside [tau_min, {which}] = [{lo}, {hi}]"));
    }
    Verdict {
        degree: Some(d),
        e: e_value,
        tau: Some(tau),
        violations: v,
    }
}

/// `C(t-1, s-1)`, zero when `s > t`.
pub fn partition_count(t: u64, s: u64) -> u64 {
    if t == 0 || s == 0 || s > t {
        return 0;
    }
    binomial(t - 1, s - 1)
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Default largest `t` accepted by the enumerators.
pub const MAX_T: i64 = 20;
/// Default cap on raw tuples examined by [`enumerate_admissible`].
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// All ordered partitions of `t`: by number of parts, then in decreasing
/// lexicographic order, so `t = 4` gives [`TYPE4_PARTITIONS`] in order.
pub fn enumerate_partitions(t: i64) -> Result<Vec<Partition>, InvariantError> {
    if !(1..=MAX_T).contains(&t) {
        return Err(InvariantError::OutOfRange(format!("t = {t} outside 1..={MAX_T}")));
    }
    let mut out = Vec::with_capacity(1 << (t - 1));
    for s in 1..=t as usize {
        compositions(t, s, &mut Vec::new(), &mut out);
    }
    Ok(out)
}

fn compositions(rest: i64, slots: usize, prefix: &mut Vec<i64>, out: &mut Vec<Partition>) {
    if slots == 1 {
        prefix.push(rest);
        out.push(Partition(prefix.clone()));
        prefix.pop();
        return;
    }
    for first in (1..=rest - (slots as i64 - 1)).rev() {
        prefix.push(first);
        compositions(rest - first, slots - 1, prefix, out);
        prefix.pop();
    }
}

/// Nondecreasing sequences of length `n` with entries in `lo..=hi`, ascending.
fn sorted_sequences(n: usize, lo: i64, hi: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if prefix.len() == n {
        out.push(prefix.clone());
        return;
    }
    let start = prefix.last().copied().unwrap_or(lo);
    for x in start..=hi {
        prefix.push(x);
        sorted_sequences(n, lo, hi, prefix, out);
        prefix.pop();
    }
}

/// Every candidate of degree `d` and type `t` with `1 <= d_i <= 2d - 4`
/// that passes [`validate_candidate`], ordered by `m`, partition, then
/// exponents.
pub fn enumerate_admissible(d: i64, t: i64) -> Result<Vec<Candidate>, InvariantError> {
    enumerate_admissible_with_budget(d, t, DEFAULT_BUDGET)
}

pub fn enumerate_admissible_with_budget(d: i64, t: i64, budget: u64) -> Result<Vec<Candidate>, InvariantError> {
    if d < 3 {
        return Err(InvariantError::OutOfRange(format!("d = {d} < 3")));
    }
    let partitions = enumerate_partitions(t)?;
    let top = 2 * d - 4;
    let sum12 = d - 1 + t;
    let pairs: Vec<(i64, i64)> = (1..=sum12 / 2)
        .map(|d1| (d1, sum12 - d1))
        .filter(|&(_, d2)| d2 <= top)
        .collect();
    let mut raw: u128 = 0;
    for p in &partitions {
        for &(_, d2) in &pairs {
            let range = (top - d2 + 1).max(0) as u64;
            raw += binomial(range + p.len() as u64 - 1, p.len() as u64) as u128;
        }
    }
    if raw > budget as u128 {
        return Err(InvariantError::OutOfRange(format!(
            "{raw} raw candidates for d = {d}, t = {t} exceed the budget {budget}"
        )));
    }
    let mut out = Vec::new();
    for p in &partitions {
        for &(d1, d2) in &pairs {
            let mut tails = Vec::new();
            sorted_sequences(p.len(), d2, top, &mut Vec::new(), &mut tails);
            for tail in tails {
                let mut exponents = vec![d1, d2];
                exponents.extend(tail);
                let c = Candidate {
                    exponents,
                    epsilons: p.0.clone(),
                };
                if validate_candidate(&c).accepted() {
                    out.push(c);
                }
            }
        }
    }
    Ok(out)
}
