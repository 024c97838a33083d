//! Edge imbalance in `Γ_n` and `Λ_n`.
//!
//! For an edge `{x, y}` with upper endpoint `x` (bit 1 at direction `i`),
//! `d(y) >= d(x)` and the difference counts the directions `j` where
//! `y + δ_j` is a vertex but `x + δ_j` is not. Only `j = i ± 1` (cyclically
//! for `Λ_n`) can qualify, and each of those is decided by a single bit of
//! `x` two positions away. That gives the constant-time classifiers below.

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::cubes::{self, check_direction, CubeGraph, Family};
use crate::error::{mismatch, Error, Result};
use crate::oracle;
use crate::strings::{fib_signed, fibonacci, is_member, BitString};
use crate::Count;

/// Which neighbour direction of `i` an imbalanced edge uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    /// `j = i - 1` (cyclically for `Λ_n`).
    Left,
    /// `j = i + 1` (cyclically for `Λ_n`).
    Right,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "L",
            Side::Right => "R",
        }
    }
}

/// Imbalance of one edge together with which sides contribute to it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ImbalanceValue {
    pub left: bool,
    pub right: bool,
}

impl ImbalanceValue {
    pub fn value(&self) -> u32 {
        self.left as u32 + self.right as u32
    }

    pub fn has(&self, side: Side) -> bool {
        match side {
            Side::Left => self.left,
            Side::Right => self.right,
        }
    }
}

/// Edge counts by imbalance 0, 1 and 2 (the sets `A`, `B`, `C`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ImbalanceCensus {
    pub zero: Count,
    pub one: Count,
    pub two: Count,
}

impl ImbalanceCensus {
    pub fn new(zero: Count, one: Count, two: Count) -> Self {
        Self { zero, one, two }
    }

    pub fn total(&self) -> Count {
        self.zero + self.one + self.two
    }

    /// `|B| + 2|C|`, the irregularity when no edge exceeds imbalance 2.
    pub fn weighted(&self) -> Count {
        self.one + 2 * self.two
    }

    pub fn as_tuple(&self) -> (Count, Count, Count) {
        (self.zero, self.one, self.two)
    }
}

/// `((k - 1) mod n) + 1`: an index taken cyclically in `1..=n`.
#[inline]
pub(crate) fn cyclic(k: i64, n: u32) -> u32 {
    ((k - 1).rem_euclid(n as i64) + 1) as u32
}

/// Neighbouring direction of `i` on `side`, or `None` off the end of a
/// non-cyclic string.
pub(crate) fn side_direction(i: u32, n: u32, side: Side, cyclic_order: bool) -> Option<u32> {
    let k = match side {
        Side::Left => i as i64 - 1,
        Side::Right => i as i64 + 1,
    };
    if (1..=n as i64).contains(&k) {
        Some(k as u32)
    } else if cyclic_order {
        Some(cyclic(k, n))
    } else {
        None
    }
}

/// `Λ_n` uses cyclic sides from `n = 3` on. `Λ_2` coincides with `Γ_2`,
/// where both cyclic neighbours of a direction are the same position.
pub(crate) fn is_cyclic(family: Family, n: u32) -> bool {
    family == Family::Lucas && n >= 3
}

fn validate_upper(x: &BitString, i: u32, family: Family) -> Result<()> {
    let n = x.len();
    check_direction(i, n)?;
    if !x.bit(i) {
        return Err(Error::DirectionBitNotSet {
            upper: x.to_string(),
            direction: i,
        });
    }
    // Clearing a bit never creates a 11 factor, so x being a member is enough.
    if !is_member(x, family.class()) {
        return Err(Error::NotAnEdge {
            upper: x.to_string(),
            direction: i,
            family,
        });
    }
    Ok(())
}

/// Sides read straight off the definition of an imbalanced edge, with the
/// degree difference as a cross-check. Used below the tables' range.
fn imbalance_by_definition(x: &BitString, i: u32, family: Family) -> Result<ImbalanceValue> {
    let n = x.len();
    let class = family.class();
    let y = x.flip(i);
    let cyc = is_cyclic(family, n);
    let side_is_imbalanced = |side| {
        side_direction(i, n, side, cyc)
            .filter(|&j| j != i)
            .is_some_and(|j| is_member(&y.flip(j), class) && !is_member(&x.flip(j), class))
    };
    let value = ImbalanceValue {
        left: side_is_imbalanced(Side::Left),
        right: side_is_imbalanced(Side::Right),
    };
    let degree = |v: &BitString| (1..=n).filter(|&j| is_member(&v.flip(j), class)).count() as i64;
    let diff = (degree(x) - degree(&y)).unsigned_abs() as u32;
    if diff != value.value() {
        return Err(mismatch(
            "imbalance by definition",
            format!(
                "{x}/{i} in {family}: sides give {}, degrees give {diff}",
                value.value()
            ),
        ));
    }
    Ok(value)
}

/// Imbalance of the `Γ_n` edge `{x, x + δ_i}`, `x` the upper endpoint.
///
/// For `n >= 4` this is two bit tests: a right imbalanced edge exists iff
/// `i = n - 1` or `x_{i+2} = 0`; a left one iff `i = 2` or `x_{i-2} = 0`.
pub fn imbalance_gamma(x: &BitString, i: u32) -> Result<ImbalanceValue> {
    validate_upper(x, i, Family::Fibonacci)?;
    let n = x.len();
    if n < 4 {
        return imbalance_by_definition(x, i, Family::Fibonacci);
    }
    Ok(ImbalanceValue {
        right: i == n - 1 || (i + 2 <= n && !x.bit(i + 2)),
        left: i == 2 || (i >= 3 && !x.bit(i - 2)),
    })
}

/// Imbalance of the `Λ_n` edge `{x, x + δ_i}`, `x` the upper endpoint.
///
/// For `n >= 4`: right iff `x_{i+2} = 0`, left iff `x_{i-2} = 0`, indices
/// taken cyclically.
pub fn imbalance_lambda(x: &BitString, i: u32) -> Result<ImbalanceValue> {
    validate_upper(x, i, Family::Lucas)?;
    let n = x.len();
    if n < 4 {
        return imbalance_by_definition(x, i, Family::Lucas);
    }
    Ok(ImbalanceValue {
        right: !x.bit(cyclic(i as i64 + 2, n)),
        left: !x.bit(cyclic(i as i64 - 2, n)),
    })
}

/// Dispatch on family; only `Γ_n` and `Λ_n` have a classifier.
pub fn imbalance(family: Family, x: &BitString, i: u32) -> Result<ImbalanceValue> {
    match family {
        Family::Fibonacci => imbalance_gamma(x, i),
        Family::Lucas => imbalance_lambda(x, i),
        other => Err(Error::UnsupportedFamily(other)),
    }
}

/// `irr(Γ_n) = 2 |E(Γ_{n-1})|`; `irr(Γ_0) = 0`.
pub fn irr_gamma(n: u32) -> Result<Count> {
    if n == 0 {
        return Ok(0);
    }
    arith::mul(2, cubes::gamma_edge_count(n - 1)?, "irr(Γn)")
}

/// `irr(Λ_n) = 2n F_{n-2}` for `n >= 3`. Below that the value is the direct
/// sum: 0 for `Λ_0`, `Λ_1` (K1) and 2 for `Λ_2` (the path `Γ_2`).
pub fn irr_lambda(n: u32) -> Result<Count> {
    match n {
        0 | 1 => Ok(0),
        2 => Ok(2),
        _ => arith::mul(2 * n as Count, fibonacci(n - 2)?, "irr(Λn)"),
    }
}

fn product_sum(
    range: std::ops::RangeInclusive<i64>,
    f: impl Fn(i64) -> (i64, i64),
) -> Result<Count> {
    let mut total: Count = 0;
    for i in range {
        let (a, b) = f(i);
        let term = arith::mul(fib_signed(a)?, fib_signed(b)?, "census sum")?;
        total = arith::add(total, term, "census sum")?;
    }
    Ok(total)
}

fn check_census(
    what: &'static str,
    census: ImbalanceCensus,
    edges: Count,
    irr: Count,
) -> Result<ImbalanceCensus> {
    if census.total() != edges {
        return Err(mismatch(
            what,
            format!("|A|+|B|+|C| = {} but |E| = {edges}", census.total()),
        ));
    }
    if census.weighted() != irr {
        return Err(mismatch(
            what,
            format!("|B|+2|C| = {} but irr = {irr}", census.weighted()),
        ));
    }
    Ok(census)
}

/// `(|A|, |B|, |C|)` for `Γ_n`, `n >= 2`:
///
/// - `|A| = sum_{i=3}^{n-2} F_{i-2} F_{n-i-1} + 2 F_{n-2}`
/// - `|B| = 2 sum_{i=1}^{n-3} F_i F_{n-i-2} + 2 F_{n-1}`
/// - `|C| = sum_{i=2}^{n-1} F_{i-1} F_{n-i}`
///
/// `Γ_0` and `Γ_1` are counted directly. The result is checked against
/// `|E(Γ_n)|` and `irr(Γ_n)` before it is returned.
pub fn gamma_class_census(n: u32) -> Result<ImbalanceCensus> {
    if n < 2 {
        let g = CubeGraph::build(Family::Fibonacci, n)?;
        return oracle::oracle_class_census(&g);
    }
    let m = n as i64;
    let what = "Γn class census";
    let a = arith::add(
        product_sum(3..=m - 2, |i| (i - 2, m - i - 1))?,
        arith::mul(2, fibonacci(n - 2)?, what)?,
        what,
    )?;
    let b = arith::add(
        arith::mul(2, product_sum(1..=m - 3, |i| (i, m - i - 2))?, what)?,
        arith::mul(2, fibonacci(n - 1)?, what)?,
        what,
    )?;
    let c = product_sum(2..=m - 1, |i| (i - 1, m - i))?;
    check_census(
        what,
        ImbalanceCensus::new(a, b, c),
        cubes::gamma_edge_count(n)?,
        irr_gamma(n)?,
    )
}

/// `(|A|, |B|, |C|) = (n F_{n-5}, 2n F_{n-4}, n F_{n-3})` for `Λ_n`, `n >= 5`.
/// Smaller `n` is counted directly.
pub fn lambda_class_census(n: u32) -> Result<ImbalanceCensus> {
    if n < 5 {
        let g = CubeGraph::build(Family::Lucas, n)?;
        return oracle::oracle_class_census(&g);
    }
    let what = "Λn class census";
    let nn = n as Count;
    let census = ImbalanceCensus::new(
        arith::mul(nn, fibonacci(n - 5)?, what)?,
        arith::mul(2 * nn, fibonacci(n - 4)?, what)?,
        arith::mul(nn, fibonacci(n - 3)?, what)?,
    );
    check_census(what, census, cubes::lucas_edge_count(n)?, irr_lambda(n)?)
}

/// Class census by closed form for `Γ_n` or `Λ_n`.
pub fn class_census(family: Family, n: u32) -> Result<ImbalanceCensus> {
    match family {
        Family::Fibonacci => gamma_class_census(n),
        Family::Lucas => lambda_class_census(n),
        other => Err(Error::UnsupportedFamily(other)),
    }
}

/// Irregularity by closed form for `Γ_n` or `Λ_n`. Regular families give 0.
pub fn irregularity(family: Family, n: u32) -> Result<Count> {
    match family {
        Family::Fibonacci => irr_gamma(n),
        Family::Lucas => irr_lambda(n),
        Family::Hypercube => Ok(0),
        Family::FibComplement => Err(Error::UnsupportedFamily(family)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_irregularity;

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    #[test]
    fn gamma_table_examples() {
        let v = imbalance_gamma(&bs("1000"), 1).unwrap();
        assert_eq!((v.value(), v.left, v.right), (1, false, true));
        let v = imbalance_gamma(&bs("00100"), 3).unwrap();
        assert_eq!((v.value(), v.left, v.right), (2, true, true));
        assert_eq!(imbalance_gamma(&bs("10101"), 3).unwrap().value(), 0);
    }

    #[test]
    fn lambda_table_examples() {
        let v = imbalance_lambda(&bs("10000"), 1).unwrap();
        assert_eq!(v.value(), 2);
        let v = imbalance_lambda(&bs("10100"), 1).unwrap();
        assert_eq!((v.value(), v.left, v.right), (1, true, false));
        let v = imbalance_lambda(&bs("10100"), 3).unwrap();
        assert_eq!((v.value(), v.left, v.right), (1, false, true));
    }

    #[test]
    fn classifier_errors() {
        assert!(matches!(
            imbalance_gamma(&bs("0100"), 1),
            Err(Error::DirectionBitNotSet { .. })
        ));
        assert!(matches!(
            imbalance_gamma(&bs("1100"), 1),
            Err(Error::NotAnEdge { .. })
        ));
        assert!(matches!(
            imbalance_lambda(&bs("10001"), 1),
            Err(Error::NotAnEdge { .. })
        ));
        assert!(matches!(
            imbalance_gamma(&bs("1000"), 5),
            Err(Error::DirectionOutOfRange { .. })
        ));
        assert!(matches!(
            imbalance(Family::Hypercube, &bs("1000"), 1),
            Err(Error::UnsupportedFamily(_))
        ));
    }

    #[test]
    fn small_n_fallback() {
        // Γ_2 = path 10 - 00 - 01.
        assert_eq!(imbalance_gamma(&bs("10"), 1).unwrap().value(), 1);
        assert_eq!(imbalance_gamma(&bs("1"), 1).unwrap().value(), 0);
        // Λ_3 = K_{1,3}.
        for x in ["100", "010", "001"] {
            let x = bs(x);
            let i = (1..=3).find(|&i| x.bit(i)).unwrap();
            assert_eq!(imbalance_lambda(&x, i).unwrap().value(), 2);
        }
    }

    #[test]
    fn classifiers_match_degrees() {
        for family in [Family::Fibonacci, Family::Lucas] {
            for n in 1..=14 {
                let g = CubeGraph::build(family, n).unwrap();
                for e in g.edges() {
                    let x = e.upper();
                    let d = g.degree(&x).unwrap().abs_diff(g.degree(&e.lower).unwrap());
                    let v = imbalance(family, &x, e.direction).unwrap();
                    assert_eq!(v.value(), d, "{family} n={n} x={x} i={}", e.direction);
                }
            }
        }
    }

    #[test]
    fn irr_examples() {
        assert_eq!(irr_gamma(4).unwrap(), 10);
        assert_eq!(irr_gamma(1).unwrap(), 0);
        assert_eq!(irr_gamma(2).unwrap(), 2);
        assert_eq!(irr_lambda(3).unwrap(), 6);
        assert_eq!(irr_lambda(5).unwrap(), 20);
        assert_eq!(irr_lambda(4).unwrap(), 8);
        for n in 0..=14 {
            let g = CubeGraph::build(Family::Fibonacci, n).unwrap();
            assert_eq!(irr_gamma(n).unwrap(), oracle_irregularity(&g), "Γ n={n}");
            let l = CubeGraph::build(Family::Lucas, n).unwrap();
            assert_eq!(irr_lambda(n).unwrap(), oracle_irregularity(&l), "Λ n={n}");
        }
    }

    #[test]
    fn census_examples() {
        assert_eq!(gamma_class_census(4).unwrap().as_tuple(), (2, 6, 2));
        assert_eq!(gamma_class_census(2).unwrap().as_tuple(), (0, 2, 0));
        // Sums to |E(Γ5)| = 20; checked against brute force below.
        assert_eq!(gamma_class_census(5).unwrap().as_tuple(), (5, 10, 5));
        assert_eq!(lambda_class_census(5).unwrap().as_tuple(), (0, 10, 5));
        assert_eq!(lambda_class_census(6).unwrap().as_tuple(), (6, 12, 12));
        // 7 F_4 = 21, so that |A|+|B|+|C| = 7 F_6 = 56.
        assert_eq!(lambda_class_census(7).unwrap().as_tuple(), (7, 28, 21));
    }

    #[test]
    fn censuses_match_oracle() {
        for n in 0..=14 {
            let g = CubeGraph::build(Family::Fibonacci, n).unwrap();
            assert_eq!(
                gamma_class_census(n).unwrap(),
                oracle::oracle_class_census(&g).unwrap(),
                "Γ n={n}"
            );
            let l = CubeGraph::build(Family::Lucas, n).unwrap();
            assert_eq!(
                lambda_class_census(n).unwrap(),
                oracle::oracle_class_census(&l).unwrap(),
                "Λ n={n}"
            );
        }
    }

    #[test]
    fn cyclic_index() {
        assert_eq!(cyclic(0, 5), 5);
        assert_eq!(cyclic(6, 5), 1);
        assert_eq!(cyclic(-1, 5), 4);
        assert_eq!(cyclic(3, 5), 3);
    }
}
