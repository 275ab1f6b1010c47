//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion.

use std::collections::HashMap;

use milnor::invariants::{
    classify, dpw_bounds, enumerate_admissible, enumerate_partitions, gap_to_max, gap_to_max_prime,
    partition_count, tjurina_formula, validate_candidate, Candidate, NearlyMaximalCase,
};
use milnor::{BettiData, FieldDescriptor, DEFAULT_PRIME};
use milnor_cli::corpus::{self, Outcome};
use milnor_cli::CurveReport;
use num_integer::Integer;

struct Type4Row {
    name: &'static str,
    degree: u32,
    m: usize,
    tau: i64,
    exponents: &'static [u32],
    second: &'static [u32],
    third: &'static [u32],
}

const TYPE4: [Type4Row; 8] = [
    Type4Row { name: "4T_pi1", degree: 5, m: 3, tau: 0, exponents: &[4, 4, 4], second: &[8, 8, 8], third: &[12] },
    Type4Row { name: "4T_pi2", degree: 5, m: 4, tau: 1, exponents: &[4, 4, 4, 6], second: &[8, 8, 8, 10], third: &[11, 11] },
    Type4Row { name: "4T_pi3", degree: 9, m: 4, tau: 36, exponents: &[4, 8, 8, 8], second: &[12, 16, 16, 16], third: &[18, 18] },
    Type4Row { name: "4T_pi4", degree: 6, m: 4, tau: 8, exponents: &[4, 5, 5, 5], second: &[9, 10, 10, 10], third: &[11, 13] },
    Type4Row { name: "4T_pi5", degree: 7, m: 5, tau: 14, exponents: &[5, 5, 6, 7, 7], second: &[11, 11, 12, 13, 13], third: &[14, 14, 14] },
    Type4Row { name: "4T_pi6", degree: 7, m: 5, tau: 19, exponents: &[5, 5, 5, 5, 6], second: &[11, 11, 11, 11, 12], third: &[12, 13, 13] },
    Type4Row { name: "4T_pi7", degree: 8, m: 5, tau: 28, exponents: &[5, 6, 6, 6, 6], second: &[12, 13, 13, 13, 13], third: &[14, 14, 15] },
    Type4Row { name: "4T_pi8", degree: 5, m: 6, tau: 6, exponents: &[4, 4, 4, 4, 4, 4], second: &[8, 8, 8, 8, 8, 8], third: &[9, 9, 9, 9] },
];

/// Lines `a x + b y + c z` of the eleven-line arrangement.
const ELEVEN_LINES: [[i64; 3]; 11] = [
    [1, 0, 0], [0, 1, 0], [0, 0, 1],
    [1, 0, -1], [1, 0, -2], [1, 0, -3],
    [0, 1, -1], [0, 1, -2], [0, 1, -3],
    [1, 1, 0], [1, 1, -2],
];

const NINE_LINES: [[i64; 3]; 9] = [
    [1, 0, 0], [0, 1, 0], [0, 0, 1],
    [1, 1, 0], [0, 1, 1], [1, 0, 1],
    [-1, 1, 1], [1, -1, 1], [1, 1, -1],
];

/// Tjurina number of a line arrangement: sum over intersection points of (m_p - 1)^2.
fn arrangement_tau(lines: &[[i64; 3]]) -> i64 {
    let mut through: HashMap<[i64; 3], usize> = HashMap::new();
    for (i, a) in lines.iter().enumerate() {
        for b in &lines[i + 1..] {
            let mut p = [
                a[1] * b[2] - a[2] * b[1],
                a[2] * b[0] - a[0] * b[2],
                a[0] * b[1] - a[1] * b[0],
            ];
            assert_ne!(p, [0, 0, 0], "repeated line");
            let g = p.iter().fold(0i64, |g, x| g.gcd(x));
            let lead = *p.iter().find(|x| **x != 0).unwrap();
            let s = if lead < 0 { -g } else { g };
            for x in p.iter_mut() {
                *x /= s;
            }
            *through.entry(p).or_default() += 1;
        }
    }
    // a point on k lines is met by k(k-1)/2 pairs
    through
        .values()
        .map(|&pairs| {
            let k = (1..).find(|k: &i64| k * (k - 1) / 2 == pairs as i64).unwrap();
            (k - 1) * (k - 1)
        })
        .sum()
}

fn accepted_candidates() -> Vec<BettiData> {
    let mut out = Vec::new();
    for d in 3..=9 {
        for t in 1..=4 {
            for c in enumerate_admissible(d, t).unwrap() {
                out.push(BettiData::new(c.exponents, c.epsilons).unwrap());
            }
        }
    }
    out
}

fn report<'a>(outcomes: &'a [Outcome], name: &str) -> &'a CurveReport {
    let o = outcomes.iter().find(|o| o.entry.name == name).unwrap();
    o.report.as_ref().unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn corpus_betti(r: &CurveReport) -> BettiData {
    BettiData::new(
        r.exponents.iter().map(|&x| x as i64).collect(),
        r.epsilons.iter().map(|&x| x as i64).collect(),
    )
    .unwrap()
}

fn criterion_1(q: &[Outcome]) -> Result<(), String> {
    for row in &TYPE4 {
        let r = report(q, row.name);
        let got = (r.degree, r.m, r.tau_oracle, r.exponents.as_slice(), r.twists.second.as_slice(), r.twists.third.as_slice());
        let want = (row.degree, row.m, row.tau, row.exponents, row.second, row.third);
        if got != want {
            return Err(format!("{}: got {got:?}, want {want:?}", row.name));
        }
        if r.twists.first != vec![row.degree - 1; 3] {
            return Err(format!("{}: first twists {:?}", row.name, r.twists.first));
        }
    }
    let viii = report(q, "4T_pi8").resolution_string();
    if viii != "0 -> S(-9)^4 -> S(-8)^6 -> S(-4)^3 -> S" {
        return Err(format!("4T_pi8 resolution {viii}"));
    }
    Ok(())
}

fn criterion_2(q: &[Outcome]) -> Result<(), String> {
    if q.len() != 12 {
        return Err(format!("{} corpus curves", q.len()));
    }
    for o in q {
        let r = report(q, &o.entry.name);
        let b = corpus_betti(r);
        let formula = tjurina_formula(&b).map_err(|e| e.to_string())?;
        if r.tau_oracle != formula || r.tau_formula != formula {
            return Err(format!("{}: oracle {} formula {formula}", r.name, r.tau_oracle));
        }
    }
    Ok(())
}

fn criterion_3(q: &[Outcome]) -> Result<(), String> {
    match q.iter().find(|o| !report(q, &o.entry.name).consistency.euler_identity) {
        Some(o) => Err(format!("{}: Hilbert identity fails", o.entry.name)),
        None => Ok(()),
    }
}

fn criterion_4() -> Result<(), String> {
    let v = validate_candidate(&Candidate { exponents: vec![3, 8, 8, 15], epsilons: vec![1, 1] });
    if v.accepted() || v.e != Some(-1) {
        return Err(format!("accepted {} with E = {:?}", v.accepted(), v.e));
    }
    Ok(())
}

fn criterion_5(q: &[Outcome]) -> Result<(), String> {
    for o in q {
        let r = report(q, &o.entry.name);
        let d1 = r.exponents[0] as i64;
        if d1 == 0 {
            continue;
        }
        let b = dpw_bounds(r.degree as i64, d1).map_err(|e| e.to_string())?;
        let tau = r.tau_oracle;
        if tau < b.tau_min || tau > b.tau_max || b.tau_max_prime.is_some_and(|p| tau > p) {
            return Err(format!("{}: tau {tau} outside {b:?}", r.name));
        }
    }
    let viii = report(q, "4T_pi8");
    let b = dpw_bounds(5, 4).unwrap();
    if viii.tau_oracle != 6 || b.tau_max_prime != Some(6) || !viii.classification.maximal_tjurina {
        return Err(format!("4T_pi8: tau {} bounds {b:?}", viii.tau_oracle));
    }
    if let Some(o) = q.iter().find(|o| o.entry.name != "4T_pi8" && report(q, &o.entry.name).classification.maximal_tjurina) {
        return Err(format!("{} unexpectedly maximal", o.entry.name));
    }
    Ok(())
}

fn check_gaps(b: &BettiData, tau: i64) -> Result<(), String> {
    let bounds = dpw_bounds(b.degree(), b.exponents()[0]).map_err(|e| e.to_string())?;
    if gap_to_max(b).map_err(|e| e.to_string())? != bounds.tau_max - tau {
        return Err(format!("{b}: gap to tau_max"));
    }
    match (bounds.tau_max_prime, gap_to_max_prime(b)) {
        (Some(p), Ok(g)) if g == p - tau => Ok(()),
        (None, Err(_)) => Ok(()),
        _ => Err(format!("{b}: gap to tau'_max")),
    }
}

fn criterion_6(q: &[Outcome], space: &[BettiData]) -> Result<(), String> {
    for o in q {
        let r = report(q, &o.entry.name);
        if r.m > 2 {
            check_gaps(&corpus_betti(r), r.tau_oracle)?;
        }
    }
    if space.len() < 100 {
        return Err(format!("only {} candidates", space.len()));
    }
    for b in space {
        check_gaps(b, tjurina_formula(b).map_err(|e| e.to_string())?)?;
    }
    Ok(())
}

fn criterion_7(space: &[BettiData]) -> Result<(), String> {
    for b in space {
        let c = classify(b);
        let gap = gap_to_max(b).unwrap();
        if (gap == 1) != c.nearly_free || (gap == 2) != c.mpog {
            return Err(format!("{b}: gap {gap}"));
        }
        if let Ok(g) = gap_to_max_prime(b) {
            if (g == 0) != c.maximal_tjurina || (g == 1) != c.nearly_maximal_tjurina.is_some() {
                return Err(format!("{b}: gap' {g}"));
            }
        }
    }
    Ok(())
}

fn criterion_8() -> Result<(), String> {
    for t in 1..=12i64 {
        let all = enumerate_partitions(t).map_err(|e| e.to_string())?;
        if all.len() != 1 << (t - 1) {
            return Err(format!("t = {t}: {} partitions", all.len()));
        }
        for s in 1..=t as u64 {
            let n = all.iter().filter(|p| p.len() as u64 == s).count() as u64;
            let binom = (1..s).fold(1u64, |acc, i| acc * (t as u64 - i) / i);
            if n != binom || n != partition_count(t as u64, s) {
                return Err(format!("t = {t}, s = {s}: {n} vs {binom}"));
            }
        }
    }
    let four: Vec<String> = enumerate_partitions(4).unwrap().iter().map(|p| p.to_string()).collect();
    let want = ["(4)", "(3,1)", "(2,2)", "(1,3)", "(2,1,1)", "(1,2,1)", "(1,1,2)", "(1,1,1,1)"];
    if four != want {
        return Err(format!("t = 4 order {four:?}"));
    }
    Ok(())
}

fn criterion_9(q: &[Outcome]) -> Result<(), String> {
    let c = report(q, "eleven-lines");
    let ok = c.degree == 11
        && c.exponents == [6, 6, 6, 7]
        && c.classification.delta_m == 0
        && c.classification.nearly_maximal_tjurina == Some(NearlyMaximalCase::One.number());
    if !ok {
        return Err(format!("eleven lines: exponents {:?} flags {:?}", c.exponents, c.classification));
    }
    for (name, lines) in [("eleven-lines", &ELEVEN_LINES[..]), ("nine-lines", &NINE_LINES[..])] {
        let r = report(q, name);
        let direct = arrangement_tau(lines);
        if r.tau_oracle != direct {
            return Err(format!("{name}: tau {} vs intersection count {direct}", r.tau_oracle));
        }
    }
    let quartic = report(q, "quartic-mpog");
    let prime = quartic.bounds.as_ref().and_then(|b| b.tau_max_prime);
    if quartic.exponents != [2, 2, 3] || !quartic.classification.mpog || Some(quartic.tau_oracle + 1) != prime {
        return Err(format!("quartic: exponents {:?} tau {} tau'_max {prime:?}", quartic.exponents, quartic.tau_oracle));
    }
    Ok(())
}

fn criterion_10(q: &[Outcome], p: &[Outcome]) -> Result<(), String> {
    if q.len() != p.len() {
        return Err("different corpus sizes".into());
    }
    for (a, b) in q.iter().zip(p) {
        let (a, b) = (report(q, &a.entry.name), report(p, &b.entry.name));
        let key = |r: &CurveReport| {
            (r.degree, r.tau_oracle, r.tau_formula, r.exponents.clone(), r.epsilons.clone(), r.twists.clone(), r.partition.clone(), r.classification.clone(), r.bounds.clone(), r.gaps.clone(), r.e_invariant)
        };
        if key(a) != key(b) {
            return Err(format!("{} differs between fields", a.name));
        }
    }
    if let Some(o) = p.iter().find(|o| !o.passed()) {
        return Err(format!("{} over GF(p): {:?}", o.entry.name, o.mismatches));
    }
    Ok(())
}

#[test]
fn acceptance() {
    let q = corpus::run(corpus::entries(), FieldDescriptor::Rational);
    let p = corpus::run(corpus::entries(), FieldDescriptor::Prime(DEFAULT_PRIME));
    let space = accepted_candidates();
    let results = [
        ("1 type-4 curves: degree, m, tau, exponents, twists", criterion_1(&q)),
        ("2 oracle tau equals formula tau on the corpus", criterion_2(&q)),
        ("3 Hilbert function identity for k <= 5d", criterion_3(&q)),
        ("4 (3,8,8,15)/(1,1) rejected with E = -1", criterion_4()),
        ("5 bounds hold, (4,4,4,4,4,4) attains tau'_max = 6", criterion_5(&q)),
        ("6 gap identities on corpus and candidates", criterion_6(&q, &space)),
        ("7 gap characterizations of the classes", criterion_7(&space)),
        ("8 ordered partition counts and t = 4 order", criterion_8()),
        ("9 eleven lines and the MPOG quartic", criterion_9(&q)),
        ("10 rational and GF(1000003) runs agree", criterion_10(&q, &p)),
    ];
    let mut failed = 0;
    for (label, r) in &results {
        match r {
            Ok(()) => println!("PASS  {label}"),
            Err(e) => {
                failed += 1;
                println!("FAIL  {label}: {e}");
            }
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
