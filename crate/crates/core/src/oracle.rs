//! Brute-force ground truth. Everything here is computed from vertex sets
//! and adjacency alone; no Fibonacci numbers or closed forms appear in the
//! quantities themselves. [`verify_all`] then compares them with the
//! formulas from the other modules.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bijections;
use crate::complement::{self, DegreeCensus};
use crate::cubes::{self, CubeGraph, Family};
use crate::error::{Error, Result};
use crate::imbalance::{self, ImbalanceCensus};
use crate::strings::{self, enumerate_capped, BitString, StringClass, DEFAULT_CAP};
use crate::Count;

/// Bijection checks are exhaustive over couples; beyond this they are skipped.
pub const BIJECTION_MAX_N: u32 = 14;
/// Largest `n` for the induced-embedding check.
pub const EMBEDDING_MAX_N: u32 = 14;
/// Largest `n` for the rotation automorphism check.
pub const ROTATION_MAX_N: u32 = 12;

fn degree(g: &CubeGraph, v: &BitString) -> u32 {
    (1..=g.n()).filter(|&j| g.contains(&v.flip(j))).count() as u32
}

/// Each edge once, as (lower, upper).
fn edge_pairs(g: &CubeGraph) -> impl Iterator<Item = (BitString, BitString)> + '_ {
    g.vertices().flat_map(move |v| {
        (1..=g.n())
            .filter(move |&j| !v.bit(j))
            .map(move |j| (v, v.flip(j)))
            .filter(move |(_, u)| g.contains(u))
    })
}

fn imbalances(g: &CubeGraph) -> impl Iterator<Item = u32> + '_ {
    edge_pairs(g).map(move |(y, x)| degree(g, &y).abs_diff(degree(g, &x)))
}

pub fn oracle_edge_count(g: &CubeGraph) -> Count {
    edge_pairs(g).count() as Count
}

/// Sum of `|d(x) - d(y)|` over the edges of `g`.
pub fn oracle_irregularity(g: &CubeGraph) -> Count {
    imbalances(g).map(Count::from).sum()
}

/// Edges of `g` split by imbalance 0, 1, 2.
pub fn oracle_class_census(g: &CubeGraph) -> Result<ImbalanceCensus> {
    let mut counts = [0 as Count; 3];
    for imb in imbalances(g) {
        match counts.get_mut(imb as usize) {
            Some(c) => *c += 1,
            None => return Err(Error::ImbalanceExceedsTwo(imb)),
        }
    }
    Ok(ImbalanceCensus::new(counts[0], counts[1], counts[2]))
}

pub fn oracle_degree_census(g: &CubeGraph) -> DegreeCensus {
    let mut census = DegreeCensus::new(g.n());
    for v in g.vertices() {
        census.add(degree(g, &v), 1);
    }
    census
}

/// `(zeros, ones)` summed position by position over every string of `class`.
pub fn oracle_zero_one_totals(n: u32, class: StringClass) -> Result<(Count, Count)> {
    oracle_zero_one_totals_capped(n, class, DEFAULT_CAP)
}

pub fn oracle_zero_one_totals_capped(
    n: u32,
    class: StringClass,
    cap: u32,
) -> Result<(Count, Count)> {
    let mut zeros: Count = 0;
    let mut ones: Count = 0;
    for s in enumerate_capped(n, class, cap)? {
        for i in 1..=n {
            if s.bit(i) {
                ones += 1;
            } else {
                zeros += 1;
            }
        }
    }
    Ok((zeros, ones))
}

/// Brute-force quantities for one graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub n: u32,
    pub family: Family,
    pub quantities: BTreeMap<String, Count>,
    pub elapsed: Duration,
}

impl OracleReport {
    pub fn get(&self, name: &str) -> Option<Count> {
        self.quantities.get(name).copied()
    }
}

/// Computes the brute-force quantities of `g`.
pub fn oracle_report(g: &CubeGraph) -> Result<OracleReport> {
    let start = Instant::now();
    let mut q = BTreeMap::new();
    q.insert("vertices".to_owned(), g.vertex_count() as Count);
    q.insert("edges".to_owned(), oracle_edge_count(g));
    q.insert("irr".to_owned(), oracle_irregularity(g));
    if matches!(g.family(), Family::Fibonacci | Family::Lucas) {
        let c = oracle_class_census(g)?;
        q.insert("class.A".to_owned(), c.zero);
        q.insert("class.B".to_owned(), c.one);
        q.insert("class.C".to_owned(), c.two);
        if g.n() <= BIJECTION_MAX_N {
            q.insert(
                "couples".to_owned(),
                bijections::enumerate_couples(g)?.len() as Count,
            );
        }
    }
    for (d, c) in oracle_degree_census(g).entries {
        q.insert(format!("degree.{d}"), c);
    }
    Ok(OracleReport {
        n: g.n(),
        family: g.family(),
        quantities: q,
        elapsed: start.elapsed(),
    })
}

/// One identity at one `n`. Serialized as a JSON-lines record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub n: u32,
    pub family: String,
    pub identity: String,
    pub expected: Option<Count>,
    pub actual: Option<Count>,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl IdentityCheck {
    fn compare(
        n: u32,
        family: &str,
        identity: &str,
        expected: Result<Count>,
        actual: Result<Count>,
    ) -> Self {
        let error = [&expected, &actual]
            .into_iter()
            .find_map(|r| r.as_ref().err().map(|e| e.to_string()));
        let expected = expected.ok();
        let actual = actual.ok();
        Self {
            n,
            family: family.to_owned(),
            identity: identity.to_owned(),
            pass: error.is_none() && expected == actual,
            expected,
            actual,
            error,
        }
    }

    fn holds(n: u32, family: &str, identity: &str, outcome: Result<bool>) -> Self {
        Self::compare(n, family, identity, Ok(1), outcome.map(Count::from))
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("IdentityCheck serializes")
    }
}

/// Output of [`verify_all`]: the oracle reports and every identity check,
/// ordered by `n`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Verification {
    pub reports: Vec<OracleReport>,
    pub checks: Vec<IdentityCheck>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Runs the identity suite for every `n` in `0..=n_max`.
pub fn verify_all(n_max: u32) -> Result<Verification> {
    verify_all_capped(n_max, DEFAULT_CAP)
}

pub fn verify_all_capped(n_max: u32, cap: u32) -> Result<Verification> {
    verify_range(0, n_max, cap)
}

/// Runs the identity suite for `from..=to`, one worker per `n`.
pub fn verify_range(from: u32, to: u32, cap: u32) -> Result<Verification> {
    if to > cap {
        return Err(Error::CapExceeded { n: to, cap });
    }
    let per_n: Vec<Result<Verification>> = (from..=to)
        .into_par_iter()
        .map(|n| verify_n(n, cap))
        .collect();
    let mut out = Verification::default();
    for v in per_n {
        let v = v?;
        out.reports.extend(v.reports);
        out.checks.extend(v.checks);
    }
    Ok(out)
}

struct Suite {
    n: u32,
    checks: Vec<IdentityCheck>,
}

impl Suite {
    fn eq(&mut self, family: &str, identity: &str, expected: Result<Count>, actual: Result<Count>) {
        self.checks.push(IdentityCheck::compare(
            self.n, family, identity, expected, actual,
        ));
    }

    fn holds(&mut self, family: &str, identity: &str, outcome: Result<bool>) {
        self.checks
            .push(IdentityCheck::holds(self.n, family, identity, outcome));
    }
}

fn quantity(r: &OracleReport, name: &str) -> Result<Count> {
    r.get(name)
        .ok_or_else(|| crate::error::mismatch("oracle report", format!("missing {name}")))
}

fn verify_n(n: u32, cap: u32) -> Result<Verification> {
    let mut s = Suite {
        n,
        checks: Vec::new(),
    };
    let graphs: Vec<CubeGraph> = Family::ALL
        .iter()
        .map(|&f| CubeGraph::build_capped(f, n, cap))
        .collect::<Result<_>>()?;
    let reports: Vec<OracleReport> = graphs.iter().map(oracle_report).collect::<Result<_>>()?;
    let [q, gamma, lambda, comp] = [0, 1, 2, 3].map(|i| &graphs[i]);
    let [rq, rg, rl, rc] = [0, 1, 2, 3].map(|i| &reports[i]);

    strings_identities(&mut s, cap);
    cube_identities(&mut s, cap, (q, rq), rg, rl);
    imbalance_identities(&mut s, gamma, rg, lambda, rl);
    if n <= BIJECTION_MAX_N {
        bijection_identities(&mut s, rg, rl);
    }
    complement_identities(&mut s, cap, comp, rc, rg);
    Ok(Verification {
        reports,
        checks: s.checks,
    })
}

fn strings_identities(s: &mut Suite, cap: u32) {
    let n = s.n;
    for class in StringClass::ALL {
        let listed = enumerate_capped(n, class, cap).map(|v| v.len() as Count);
        s.eq(
            "strings",
            &format!("|{class}| count"),
            strings::count_class(n, class),
            listed,
        );
    }
    let zeros = oracle_zero_one_totals_capped(n, StringClass::Fib, cap).map(|t| t.0);
    s.eq(
        "strings",
        "zeros in fib",
        strings::total_zeros_in_fib(n),
        zeros,
    );
}

fn cube_identities(
    s: &mut Suite,
    cap: u32,
    (q, rq): (&CubeGraph, &OracleReport),
    rg: &OracleReport,
    rl: &OracleReport,
) {
    let n = s.n;
    s.eq(
        "q",
        "|E(Qn)|",
        cubes::hypercube_edge_count(n),
        quantity(rq, "edges"),
    );
    s.holds("q", "connected", Ok(q.is_connected()));
    s.eq(
        "gamma",
        "|E| sum form",
        cubes::gamma_edge_count(n),
        quantity(rg, "edges"),
    );
    s.eq(
        "gamma",
        "|E| closed form",
        cubes::gamma_edge_count_closed(n),
        quantity(rg, "edges"),
    );
    s.eq(
        "gamma",
        "|E| recurrence",
        cubes::gamma_edge_count_recurrence(n),
        quantity(rg, "edges"),
    );
    s.eq(
        "lambda",
        "|E| = nF(n-1)",
        cubes::lucas_edge_count(n),
        quantity(rl, "edges"),
    );
    let per_direction = |f: fn(u32, u32) -> Result<Count>| -> Result<Count> {
        (1..=n).try_fold(0, |acc, i| Ok(acc + f(n, i)?))
    };
    s.eq(
        "gamma",
        "direction counts sum",
        per_direction(cubes::gamma_direction_count),
        quantity(rg, "edges"),
    );
    s.eq(
        "lambda",
        "direction counts sum",
        per_direction(cubes::lucas_direction_count),
        quantity(rl, "edges"),
    );
    let census = cubes::classify_qn_edges_capped(n, cap);
    s.eq(
        "q",
        "one-fib + both-fib edges",
        census
            .as_ref()
            .map(|c| c.one_fib + 2 * c.both_fib)
            .map_err(Clone::clone),
        oracle_zero_one_totals_capped(n, StringClass::Fib, cap).map(|t| t.0 + t.1),
    );
}

fn imbalance_identities(
    s: &mut Suite,
    gamma: &CubeGraph,
    rg: &OracleReport,
    lambda: &CubeGraph,
    rl: &OracleReport,
) {
    for (family, g, r) in [(Family::Fibonacci, gamma, rg), (Family::Lucas, lambda, rl)] {
        let name = family.name();
        s.eq(
            name,
            "irr",
            imbalance::irregularity(family, s.n),
            quantity(r, "irr"),
        );
        let census = imbalance::class_census(family, s.n);
        for (label, pick) in [
            (
                "class A",
                (|c: &ImbalanceCensus| c.zero) as fn(&ImbalanceCensus) -> Count,
            ),
            ("class B", |c| c.one),
            ("class C", |c| c.two),
        ] {
            let key = format!("class.{}", &label[6..]);
            s.eq(
                name,
                label,
                census.as_ref().map(pick).map_err(Clone::clone),
                quantity(r, &key),
            );
        }
        s.eq(
            name,
            "|B| + 2|C| = irr",
            census.as_ref().map(|c| c.weighted()).map_err(Clone::clone),
            quantity(r, "irr"),
        );
        s.eq(
            name,
            "classifier mismatches",
            Ok(0),
            classifier_mismatches(g, family),
        );
    }
}

/// Edges where the constant-time classifier disagrees with the degree gap.
fn classifier_mismatches(g: &CubeGraph, family: Family) -> Result<Count> {
    let mut bad: Count = 0;
    for (y, x) in edge_pairs(g) {
        let i = (1..=g.n())
            .find(|&j| x.bit(j) != y.bit(j))
            .expect("edge endpoints differ");
        let v = imbalance::imbalance(family, &x, i)?;
        if v.value() != degree(g, &x).abs_diff(degree(g, &y)) {
            bad += 1;
        }
    }
    Ok(bad)
}

fn bijection_identities(s: &mut Suite, rg: &OracleReport, rl: &OracleReport) {
    let n = s.n;
    s.eq(
        "gamma",
        "couples = irr",
        quantity(rg, "couples"),
        quantity(rg, "irr"),
    );
    s.eq(
        "lambda",
        "couples = irr",
        quantity(rl, "couples"),
        quantity(rl, "irr"),
    );
    let record =
        |s: &mut Suite, family: &str, checks: Result<Vec<bijections::BijectionCheck>>| match checks
        {
            Ok(checks) => {
                for c in checks {
                    s.holds(family, &format!("bijection {}", c.label), Ok(c.passed()));
                }
            }
            Err(e) => s.holds(family, "bijections", Err(e)),
        };
    if n >= 2 {
        record(s, "gamma", bijections::verify_gamma_bijections(n));
    }
    if n >= 4 {
        record(s, "lambda", bijections::verify_lambda_bijections(n));
    }
    if n <= ROTATION_MAX_N {
        s.holds(
            "lambda",
            "rotation automorphism",
            bijections::rotation_is_automorphism(n),
        );
    }
}

fn complement_identities(
    s: &mut Suite,
    cap: u32,
    comp: &CubeGraph,
    rc: &OracleReport,
    rg: &OracleReport,
) {
    let n = s.n;
    s.eq(
        "gammabar",
        "|V|",
        complement::complement_vertex_count(n),
        quantity(rc, "vertices"),
    );
    s.eq(
        "gammabar",
        "|V| recurrence",
        complement::complement_vertex_recurrence(n),
        quantity(rc, "vertices"),
    );
    s.eq(
        "gammabar",
        "|E|",
        complement::complement_edge_count(n),
        quantity(rc, "edges"),
    );
    let nonfib = oracle_zero_one_totals_capped(n, StringClass::NonFib, cap);
    let fib = oracle_zero_one_totals_capped(n, StringClass::Fib, cap);
    s.eq(
        "gammabar",
        "|E| = zeros in nonfib",
        quantity(rc, "edges"),
        nonfib.map(|t| t.0),
    );
    s.eq(
        "gamma",
        "|E| = ones in fib",
        quantity(rg, "edges"),
        fib.as_ref().map(|t| t.1).map_err(Clone::clone),
    );
    let one_fib = cubes::classify_qn_edges_capped(n, cap).map(|c| c.one_fib);
    s.eq(
        "gamma",
        "zeros in fib = |B| + |E|",
        fib.map(|t| t.0),
        one_fib.and_then(|b| Ok(b + quantity(rg, "edges")?)),
    );
    if n >= 1 {
        match complement::complement_degree_census(n) {
            Ok(formula) => {
                let brute = oracle_degree_census(comp);
                for d in n.saturating_sub(2)..=n {
                    s.eq(
                        "gammabar",
                        &format!("degree {d} count"),
                        Ok(formula.get(d)),
                        Ok(brute.get(d)),
                    );
                }
                s.holds("gammabar", "degree census", Ok(formula == brute));
            }
            Err(e) => s.holds("gammabar", "degree census", Err(e)),
        }
    }
    if (4..=EMBEDDING_MAX_N).contains(&n) {
        s.holds(
            "gammabar",
            "gamma embeds as induced subgraph",
            complement::check_embedding(n).map(|c| c.passed()),
        );
    }
}
