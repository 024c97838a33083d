//! Hypercube, Fibonacci cube, Lucas cube and the cube-complement of the
//! Fibonacci cube, as induced subgraphs of `Q_n`.
//!
//! Adjacency is never stored. Two vertices are adjacent iff they differ in
//! exactly one position and both pass the family's membership test, so a
//! graph only keeps its sorted vertex list.

use std::collections::VecDeque;
use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{mismatch, Error, Result};
use crate::strings::{self, fibonacci, is_member, BitString, StringClass, DEFAULT_CAP};
use crate::Count;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// `Q_n`
    #[serde(rename = "q")]
    Hypercube,
    /// `Γ_n`
    #[serde(rename = "gamma")]
    Fibonacci,
    /// `Λ_n`
    #[serde(rename = "lambda")]
    Lucas,
    /// `Γ̄_n`, induced by the strings containing `11`.
    #[serde(rename = "gammabar")]
    FibComplement,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Hypercube,
        Family::Fibonacci,
        Family::Lucas,
        Family::FibComplement,
    ];

    pub fn class(self) -> StringClass {
        match self {
            Family::Hypercube => StringClass::All,
            Family::Fibonacci => StringClass::Fib,
            Family::Lucas => StringClass::Lucas,
            Family::FibComplement => StringClass::NonFib,
        }
    }

    /// Short name used on the command line and in reports.
    pub fn name(self) -> &'static str {
        match self {
            Family::Hypercube => "q",
            Family::Fibonacci => "gamma",
            Family::Lucas => "lambda",
            Family::FibComplement => "gammabar",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// An edge in canonical form: the endpoint with a 0 at `direction`, plus the
/// direction. The other endpoint is `lower + δ_direction`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub lower: BitString,
    pub direction: u32,
}

impl Edge {
    pub fn new(lower: BitString, direction: u32) -> Result<Self> {
        check_direction(direction, lower.len())?;
        if lower.bit(direction) {
            return Err(Error::InvalidEdge(format!(
                "{lower} has a 1 at direction {direction}"
            )));
        }
        Ok(Self { lower, direction })
    }

    /// Edge given by its upper endpoint (bit 1 at `direction`).
    pub fn from_upper(upper: BitString, direction: u32) -> Result<Self> {
        check_direction(direction, upper.len())?;
        if !upper.bit(direction) {
            return Err(Error::DirectionBitNotSet {
                upper: upper.to_string(),
                direction,
            });
        }
        Ok(Self {
            lower: upper.flip(direction),
            direction,
        })
    }

    pub fn upper(&self) -> BitString {
        self.lower.flip(self.direction)
    }

    pub fn n(&self) -> u32 {
        self.lower.len()
    }

    /// `lower<TAB>direction<TAB>upper`
    pub fn to_line(&self) -> String {
        format!("{}\t{}\t{}", self.lower, self.direction, self.upper())
    }
}

// Sort key: direction first, then the lower endpoint.
impl Ord for Edge {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.direction, self.lower).cmp(&(other.direction, other.lower))
    }
}

impl PartialOrd for Edge {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) fn check_direction(direction: u32, n: u32) -> Result<()> {
    if direction == 0 || direction > n {
        return Err(Error::DirectionOutOfRange { direction, n });
    }
    Ok(())
}

/// An induced subgraph of `Q_n`, immutable after [`CubeGraph::build`].
#[derive(Debug, Clone)]
pub struct CubeGraph {
    family: Family,
    n: u32,
    vertices: Vec<u64>,
}

impl CubeGraph {
    pub fn build(family: Family, n: u32) -> Result<Self> {
        Self::build_capped(family, n, DEFAULT_CAP)
    }

    pub fn build_capped(family: Family, n: u32, cap: u32) -> Result<Self> {
        let vertices = strings::member_values(n, family.class(), cap)?;
        Ok(Self {
            family,
            n,
            vertices,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Vertices in ascending numeric order.
    pub fn vertices(&self) -> impl ExactSizeIterator<Item = BitString> + '_ {
        let n = self.n;
        self.vertices
            .iter()
            .map(move |&b| BitString::from_raw(b, n))
    }

    /// O(n) membership test, independent of the stored vertex list.
    #[inline]
    pub fn contains(&self, v: &BitString) -> bool {
        v.len() == self.n && is_member(v, self.family.class())
    }

    /// Position of `v` in [`CubeGraph::vertices`].
    pub fn index_of(&self, v: &BitString) -> Option<usize> {
        if v.len() != self.n {
            return None;
        }
        self.vertices.binary_search(&v.value()).ok()
    }

    fn require(&self, v: &BitString) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::NotMember {
                vertex: v.to_string(),
                family: self.family,
                n: self.n,
            })
        }
    }

    /// Degree of a vertex known to be in the graph.
    #[inline]
    pub(crate) fn degree_of_member(&self, v: &BitString) -> u32 {
        (1..=self.n).filter(|&i| self.contains(&v.flip(i))).count() as u32
    }

    pub fn degree(&self, v: &BitString) -> Result<u32> {
        self.require(v)?;
        Ok(self.degree_of_member(v))
    }

    pub fn neighbors(&self, v: &BitString) -> Result<Vec<BitString>> {
        self.require(v)?;
        Ok((1..=self.n)
            .map(|i| v.flip(i))
            .filter(|w| self.contains(w))
            .collect())
    }

    pub fn is_edge(&self, e: &Edge) -> bool {
        self.contains(&e.lower) && self.contains(&e.upper())
    }

    /// Edges using `direction`, by ascending lower endpoint.
    pub fn edges_in_direction(&self, direction: u32) -> impl Iterator<Item = Edge> + '_ {
        self.vertices()
            .filter(move |v| !v.bit(direction))
            .filter(move |v| self.contains(&v.flip(direction)))
            .map(move |lower| Edge { lower, direction })
    }

    /// Every edge once, sorted by `(direction, lower)`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (1..=self.n).flat_map(move |i| self.edges_in_direction(i))
    }

    pub fn edge_count(&self) -> Count {
        self.edges().count() as Count
    }

    /// Breadth-first connectivity check. The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(idx) = queue.pop_front() {
            let v = BitString::from_raw(self.vertices[idx], self.n);
            for i in 1..=self.n {
                let w = v.flip(i);
                if !self.contains(&w) {
                    continue;
                }
                let j = self.index_of(&w).expect("member is listed");
                if !seen[j] {
                    seen[j] = true;
                    reached += 1;
                    queue.push_back(j);
                }
            }
        }
        reached == self.vertices.len()
    }

    /// One `lower<TAB>direction<TAB>upper` line per edge.
    pub fn write_edge_list<W: Write>(&self, mut w: W) -> io::Result<()> {
        for e in self.edges() {
            writeln!(w, "{}", e.to_line())?;
        }
        Ok(())
    }
}

/// How many endpoints of a `Q_n` edge are Fibonacci strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EdgeIncidenceClass {
    /// Neither endpoint; these are the edges of `Γ̄_n`.
    NoFib,
    /// Exactly one endpoint.
    OneFib,
    /// Both endpoints; these are the edges of `Γ_n`.
    BothFib,
}

pub fn incidence_class(e: &Edge) -> EdgeIncidenceClass {
    let a = is_member(&e.lower, StringClass::Fib);
    let b = is_member(&e.upper(), StringClass::Fib);
    match (a, b) {
        (true, true) => EdgeIncidenceClass::BothFib,
        (false, false) => EdgeIncidenceClass::NoFib,
        _ => EdgeIncidenceClass::OneFib,
    }
}

/// Partition of `E(Q_n)` by [`EdgeIncidenceClass`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct QnEdgeCensus {
    pub no_fib: Count,
    pub one_fib: Count,
    pub both_fib: Count,
}

impl QnEdgeCensus {
    pub fn total(&self) -> Count {
        self.no_fib + self.one_fib + self.both_fib
    }
}

/// Classify every edge of `Q_n`; checks that the classes sum to `n 2^{n-1}`
/// and that `|B_n| + 2|C_n| = n F_{n+2}`.
pub fn classify_qn_edges(n: u32) -> Result<QnEdgeCensus> {
    classify_qn_edges_capped(n, DEFAULT_CAP)
}

pub fn classify_qn_edges_capped(n: u32, cap: u32) -> Result<QnEdgeCensus> {
    let q = CubeGraph::build_capped(Family::Hypercube, n, cap)?;
    let mut census = QnEdgeCensus::default();
    for e in q.edges() {
        match incidence_class(&e) {
            EdgeIncidenceClass::NoFib => census.no_fib += 1,
            EdgeIncidenceClass::OneFib => census.one_fib += 1,
            EdgeIncidenceClass::BothFib => census.both_fib += 1,
        }
    }
    let expected_total = hypercube_edge_count(n)?;
    if census.total() != expected_total {
        return Err(mismatch(
            "Q_n edge partition",
            format!(
                "classes sum to {}, expected {expected_total}",
                census.total()
            ),
        ));
    }
    let fib_degree_sum = arith::mul(n as Count, fibonacci(n + 2)?, "n F(n+2)")?;
    if census.one_fib + 2 * census.both_fib != fib_degree_sum {
        return Err(mismatch(
            "Q_n edge partition",
            format!(
                "|B| + 2|C| = {}, expected n F(n+2) = {fib_degree_sum}",
                census.one_fib + 2 * census.both_fib
            ),
        ));
    }
    Ok(census)
}

/// `|E(Q_n)| = n 2^{n-1}`.
pub fn hypercube_edge_count(n: u32) -> Result<Count> {
    if n == 0 {
        return Ok(0);
    }
    arith::mul(n as Count, arith::pow2(n - 1, "2^(n-1)")?, "n 2^(n-1)")
}

/// `|E(Γ_n)| = sum_{i=1..n} F_i F_{n-i+1}`.
pub fn gamma_edge_count(n: u32) -> Result<Count> {
    let mut total: Count = 0;
    for i in 1..=n {
        total = arith::add(total, gamma_direction_count(n, i)?, "|E(Γn)|")?;
    }
    Ok(total)
}

/// `|E(Γ_n)| = (n F_{n+1} + 2(n+1) F_n) / 5`.
pub fn gamma_edge_count_closed(n: u32) -> Result<Count> {
    let what = "|E(Γn)| closed form";
    let a = arith::mul(n as Count, fibonacci(n + 1)?, what)?;
    let b = arith::mul(2 * (n as Count + 1), fibonacci(n)?, what)?;
    let num = arith::add(a, b, what)?;
    let q = arith::div5_exact(arith::to_signed(num, what)?, what)?;
    arith::to_unsigned(q, what)
}

/// `|E(Γ_n)|` from `E_{n+2} = E_{n+1} + E_n + |V(Γ_n)|`, seeded with
/// `E_0 = 0`, `E_1 = 1`.
pub fn gamma_edge_count_recurrence(n: u32) -> Result<Count> {
    let (mut e0, mut e1): (Count, Count) = (0, 1);
    if n == 0 {
        return Ok(0);
    }
    for m in 0..n - 1 {
        let next = arith::add(
            arith::add(e1, e0, "|E(Γn)| recurrence")?,
            fibonacci(m + 2)?,
            "|E(Γn)| recurrence",
        )?;
        e0 = e1;
        e1 = next;
    }
    Ok(e1)
}

/// Edges of `Γ_n` using direction `i`: `F_i F_{n-i+1}`.
pub fn gamma_direction_count(n: u32, i: u32) -> Result<Count> {
    check_direction(i, n)?;
    arith::mul(fibonacci(i)?, fibonacci(n - i + 1)?, "direction census")
}

/// `|E(Λ_n)| = n F_{n-1}` for `n >= 1`; `Λ_0` has no edges.
pub fn lucas_edge_count(n: u32) -> Result<Count> {
    if n == 0 {
        return Ok(0);
    }
    arith::mul(n as Count, fibonacci(n - 1)?, "|E(Λn)|")
}

/// Edges of `Λ_n` using any fixed direction: `|Fib^{00}_{n-1}| = F_{n-1}`.
pub fn lucas_direction_count(n: u32, i: u32) -> Result<Count> {
    check_direction(i, n)?;
    strings::count_class(n - 1, StringClass::Fib00).map(|c| if n == 1 { 0 } else { c })
}
