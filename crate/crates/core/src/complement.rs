//! The cube-complement `Γ̄_n`: the subgraph of `Q_n` induced by the strings
//! that contain `11`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::cubes::{self, check_direction, CubeGraph, Family};
use crate::error::{mismatch, Error, Result};
use crate::strings::{self, fibonacci, is_member, total_zeros_in_fib, BitString, StringClass};
use crate::Count;

/// `|V(Γ̄_n)| = 2^n - F_{n+2}`.
pub fn complement_vertex_count(n: u32) -> Result<Count> {
    strings::count_class(n, StringClass::NonFib)
}

/// `|V(Γ̄_n)| = |V(Γ̄_{n-1})| + |V(Γ̄_{n-2})| + 2^{n-2}`, seeded with
/// `|V(Γ̄_1)| = 0`, `|V(Γ̄_2)| = 1`. Values for `n <= 2` are the seeds
/// (and `|V(Γ̄_0)| = 0`).
pub fn complement_vertex_recurrence(n: u32) -> Result<Count> {
    let what = "|V(Γ̄n)| recurrence";
    match n {
        0 | 1 => return Ok(0),
        2 => return Ok(1),
        _ => {}
    }
    let (mut prev, mut cur): (Count, Count) = (0, 1);
    for m in 3..=n {
        let next = arith::add(
            arith::add(cur, prev, what)?,
            arith::pow2(m - 2, what)?,
            what,
        )?;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// The three expressions for `|E(Γ̄_n)|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplementEdgeForms {
    /// `n 2^{n-1} - sum_{i=1}^n F_{i+1} F_{n-i+2}`
    pub by_zero_count: Count,
    /// `n 2^{n-1} - (4n F_{n+1} + (3n-2) F_n) / 5`
    pub closed: Count,
    /// `E_n = E_{n-1} + E_{n-2} + (n+4) 2^{n-3} - F_{n+2}`, `E_1 = E_2 = 0`
    pub recurrence: Count,
}

impl ComplementEdgeForms {
    pub fn agree(&self) -> bool {
        self.by_zero_count == self.closed && self.closed == self.recurrence
    }
}

pub fn complement_edge_forms(n: u32) -> Result<ComplementEdgeForms> {
    if n == 0 {
        return Ok(ComplementEdgeForms {
            by_zero_count: 0,
            closed: 0,
            recurrence: 0,
        });
    }
    let what = "|E(Γ̄n)|";
    let qn = cubes::hypercube_edge_count(n)?;
    let by_zero_count = arith::sub(qn, total_zeros_in_fib(n)?, what)?;

    let nn = n as i128;
    let num = 4 * nn * arith::to_signed(fibonacci(n + 1)?, what)?
        + (3 * nn - 2) * arith::to_signed(fibonacci(n)?, what)?;
    let closed = arith::sub(
        qn,
        arith::to_unsigned(arith::div5_exact(num, what)?, what)?,
        what,
    )?;

    let (mut e_prev, mut e_cur): (Count, Count) = (0, 0);
    for m in 3..=n {
        let growth = arith::sub(
            arith::mul(m as Count + 4, arith::pow2(m - 3, what)?, what)?,
            fibonacci(m + 2)?,
            what,
        )?;
        let next = arith::add(arith::add(e_cur, e_prev, what)?, growth, what)?;
        e_prev = e_cur;
        e_cur = next;
    }
    Ok(ComplementEdgeForms {
        by_zero_count,
        closed,
        recurrence: e_cur,
    })
}

/// `|E(Γ̄_n)|`, after checking that all three expressions agree.
pub fn complement_edge_count(n: u32) -> Result<Count> {
    let forms = complement_edge_forms(n)?;
    if !forms.agree() {
        return Err(mismatch("|E(Γ̄n)| forms", format!("n={n}: {forms:?}")));
    }
    Ok(forms.closed)
}

/// Leftmost and rightmost starts of a `11` factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockProfile {
    pub i_l: u32,
    pub i_r: u32,
}

impl BlockProfile {
    pub fn of(x: &BitString) -> Result<Self> {
        let n = x.len();
        let pair = |i: u32| x.bit(i) && x.bit(i + 1);
        let i_l = (1..n).find(|&i| pair(i));
        let i_r = (1..n).rev().find(|&i| pair(i));
        match (i_l, i_r) {
            (Some(i_l), Some(i_r)) => Ok(Self { i_l, i_r }),
            _ => Err(Error::NotNonFib(x.to_string())),
        }
    }
}

/// Degree class of a vertex of `Γ̄_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ComplementDegreeClass {
    /// Single block of length exactly 2.
    NMinus2,
    /// Single block of length 3.
    NMinus1,
    /// A block of length at least 4, or at least two blocks of length at least 2.
    N,
}

impl ComplementDegreeClass {
    pub fn degree(self, n: u32) -> u32 {
        match self {
            ComplementDegreeClass::NMinus2 => n - 2,
            ComplementDegreeClass::NMinus1 => n - 1,
            ComplementDegreeClass::N => n,
        }
    }
}

/// Degree class of `x` in `Γ̄_n` from its block profile: `i_r = i_l` gives
/// `n - 2`, `i_r = i_l + 1` gives `n - 1`, anything wider gives `n`.
pub fn classify_complement_vertex(x: &BitString) -> Result<ComplementDegreeClass> {
    let p = BlockProfile::of(x)?;
    Ok(match p.i_r - p.i_l {
        0 => ComplementDegreeClass::NMinus2,
        1 => ComplementDegreeClass::NMinus1,
        _ => ComplementDegreeClass::N,
    })
}

/// Multiset of vertex degrees. Only non-zero counts are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct DegreeCensus {
    pub n: u32,
    pub entries: BTreeMap<u32, Count>,
}

impl DegreeCensus {
    pub fn new(n: u32) -> Self {
        Self {
            n,
            entries: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, degree: u32, count: Count) {
        if count > 0 {
            *self.entries.entry(degree).or_insert(0) += count;
        }
    }

    pub fn get(&self, degree: u32) -> Count {
        self.entries.get(&degree).copied().unwrap_or(0)
    }

    pub fn vertex_total(&self) -> Count {
        self.entries.values().sum()
    }

    /// `sum degree * count = 2|E|`
    pub fn degree_sum(&self) -> Count {
        self.entries.iter().map(|(&d, &c)| d as Count * c).sum()
    }
}

/// Counts of the three degree classes of `Γ̄_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplementDegreeCounts {
    pub n_minus_2: Count,
    pub n_minus_1: Count,
    pub n: Count,
}

/// `(|E(Γ_{n-1})|, |E(Γ_{n-2})|, sum_{k=0}^{n-4} 2^k |E(Γ_{n-k-3})|)`; terms
/// with a negative index are empty.
pub fn complement_degree_counts(n: u32) -> Result<ComplementDegreeCounts> {
    let what = "Γ̄n degree census";
    let gamma = |m: i64| {
        if m < 0 {
            Ok(0)
        } else {
            cubes::gamma_edge_count(m as u32)
        }
    };
    let m = n as i64;
    let mut full: Count = 0;
    for k in 0..=(m - 4) {
        let term = arith::mul(arith::pow2(k as u32, what)?, gamma(m - k - 3)?, what)?;
        full = arith::add(full, term, what)?;
    }
    Ok(ComplementDegreeCounts {
        n_minus_2: gamma(m - 1)?,
        n_minus_1: gamma(m - 2)?,
        n: full,
    })
}

/// The same three counts in the `/5` closed forms:
/// `((n-1)F_n + 2n F_{n-1})/5`, `((n-2)F_{n-1} + (2n-2)F_{n-2})/5` and
/// `2^n - ((3n+7)F_n + (n+5)F_{n-1})/5`. Divisibility by 5 is checked.
pub fn complement_degree_counts_closed(n: u32) -> Result<ComplementDegreeCounts> {
    if n == 0 {
        return Err(Error::NTooSmall { n, min: 1 });
    }
    let what = "Γ̄n degree census closed form";
    let f = |k: i64| -> Result<i128> { arith::to_signed(strings::fib_signed(k)?, what) };
    let m = n as i64;
    let nn = n as i128;
    let a = arith::div5_exact((nn - 1) * f(m)? + 2 * nn * f(m - 1)?, what)?;
    let b = arith::div5_exact((nn - 2) * f(m - 1)? + (2 * nn - 2) * f(m - 2)?, what)?;
    let c = arith::div5_exact((3 * nn + 7) * f(m)? + (nn + 5) * f(m - 1)?, what)?;
    let full = arith::to_signed(arith::pow2(n, what)?, what)? - c;
    Ok(ComplementDegreeCounts {
        n_minus_2: arith::to_unsigned(a, what)?,
        n_minus_1: arith::to_unsigned(b, what)?,
        n: arith::to_unsigned(full, what)?,
    })
}

/// Degree census of `Γ̄_n` by formula, `n >= 1`. Checks the summation form
/// against the `/5` forms and reconciles totals with the vertex and edge
/// counts.
pub fn complement_degree_census(n: u32) -> Result<DegreeCensus> {
    if n == 0 {
        return Err(Error::NTooSmall { n, min: 1 });
    }
    let counts = complement_degree_counts(n)?;
    let closed = complement_degree_counts_closed(n)?;
    if counts != closed {
        return Err(mismatch(
            "Γ̄n degree census",
            format!("n={n}: sums {counts:?} vs closed {closed:?}"),
        ));
    }
    let mut census = DegreeCensus::new(n);
    if n >= 2 {
        census.add(n - 2, counts.n_minus_2);
    }
    census.add(n - 1, counts.n_minus_1);
    census.add(n, counts.n);
    let vertices = complement_vertex_count(n)?;
    let edges = complement_edge_count(n)?;
    if census.vertex_total() != vertices || census.degree_sum() != 2 * edges {
        return Err(mismatch(
            "Γ̄n degree census",
            format!(
                "n={n}: census has {} vertices / degree sum {}, expected {vertices} / {}",
                census.vertex_total(),
                census.degree_sum(),
                2 * edges
            ),
        ));
    }
    Ok(census)
}

/// Number of degree-`n` vertices of `Γ̄_n` for `n = 1..=count` (OEIS A235996).
pub fn a235996_prefix(count: u32) -> Result<Vec<Count>> {
    (1..=count)
        .map(|n| complement_degree_counts(n).map(|c| c.n))
        .collect()
}

/// The transposition `(1 4)` on directions.
pub fn sigma(i: u32) -> u32 {
    match i {
        1 => 4,
        4 => 1,
        other => other,
    }
}

/// `x ↦ x̄_4 x̄_2 x̄_3 x̄_1 x̄_5 .. x̄_n`, carrying `Γ_n` onto an induced
/// subgraph of `Γ̄_n` for `n >= 4`. Direction `i` maps to `sigma(i)`.
pub fn embed_gamma_into_complement(x: &BitString) -> Result<BitString> {
    let n = x.len();
    if n < 4 {
        return Err(Error::NTooSmall { n, min: 4 });
    }
    if !is_member(x, StringClass::Fib) {
        return Err(Error::NotFibonacci(x.to_string()));
    }
    Ok(x.complement().swap(1, 4))
}

/// Result of the exhaustive embedding check at one `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingCheck {
    pub n: u32,
    pub injective: bool,
    pub image_in_complement: bool,
    /// Every edge `{x, x+δ_i}` of `Γ_n` maps to `{θx, θx + δ_σ(i)}` in `Γ̄_n`.
    pub edges_preserved: bool,
    /// Every edge of `Γ̄_n` inside the image pulls back to an edge of `Γ_n`.
    pub edges_reflected: bool,
    pub gamma_edges: Count,
    pub induced_edges: Count,
}

impl EmbeddingCheck {
    pub fn passed(&self) -> bool {
        self.injective
            && self.image_in_complement
            && self.edges_preserved
            && self.edges_reflected
            && self.gamma_edges == self.induced_edges
    }
}

pub fn check_embedding(n: u32) -> Result<EmbeddingCheck> {
    let gamma = CubeGraph::build(Family::Fibonacci, n)?;
    let comp = CubeGraph::build(Family::FibComplement, n)?;
    let mut image = BTreeMap::new();
    let mut image_in_complement = true;
    for x in gamma.vertices() {
        let t = embed_gamma_into_complement(&x)?;
        image_in_complement &= comp.contains(&t);
        image.insert(t, x);
    }
    let injective = image.len() == gamma.vertex_count();

    let mut edges_preserved = true;
    for e in gamma.edges() {
        let a = embed_gamma_into_complement(&e.lower)?;
        let b = embed_gamma_into_complement(&e.upper())?;
        edges_preserved &=
            a.flip(sigma(e.direction)) == b && comp.contains(&a) && comp.contains(&b);
    }

    let mut edges_reflected = true;
    let mut induced_edges: Count = 0;
    for (t, x) in &image {
        for i in 1..=n {
            if t.bit(i) {
                continue;
            }
            let u = t.flip(i);
            if let Some(y) = image.get(&u) {
                induced_edges += 1;
                check_direction(i, n)?;
                let pulled = x.flip(sigma(i));
                edges_reflected &= pulled == *y && gamma.contains(y);
            }
        }
    }
    Ok(EmbeddingCheck {
        n,
        injective,
        image_in_complement,
        edges_preserved,
        edges_reflected,
        gamma_edges: gamma.edge_count(),
        induced_edges,
    })
}
