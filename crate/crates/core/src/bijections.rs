//! Couples `(e, e')` of an edge and one of its imbalanced edges, and the
//! explicit bijections that count them.
//!
//! In `Γ_n` the right couples and the left couples are each in bijection with
//! `E(Γ_{n-1})`: delete position `i + 1` (right) or `i - 1` (left) from the
//! upper endpoint. In `Λ_n`, for each direction `i`, the right and the left
//! couples are each in bijection with `Fib_{n-4}`: rotate `i` to position 1
//! and read off the free middle of the string.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::cubes::{check_direction, CubeGraph, Edge, Family};
use crate::error::{mismatch, Error, Result};
use crate::imbalance::{cyclic, is_cyclic, side_direction, Side};
use crate::strings::{self, is_member, BitString, StringClass};
use crate::Count;

/// `e = {y, y + δ_i}` and `e' = {y, y + δ_j}` with `y + δ_i + δ_j` outside
/// the graph. Keyed by `(lower, direction, side)`; `partner` is `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ImbalancedCouple {
    pub family: Family,
    pub lower: BitString,
    pub direction: u32,
    pub side: Side,
    pub partner: u32,
}

impl ImbalancedCouple {
    /// Build a couple from its key, deriving `partner` from the side.
    pub fn new(family: Family, lower: BitString, direction: u32, side: Side) -> Result<Self> {
        let n = lower.len();
        check_direction(direction, n)?;
        let partner = side_direction(direction, n, side, is_cyclic(family, n))
            .filter(|&j| j != direction)
            .ok_or_else(|| {
                Error::InvalidCouple(format!("direction {direction} has no {side:?} neighbour"))
            })?;
        let c = Self {
            family,
            lower,
            direction,
            side,
            partner,
        };
        c.validate()?;
        Ok(c)
    }

    pub fn n(&self) -> u32 {
        self.lower.len()
    }

    /// Upper endpoint `x = y + δ_i` of `e`.
    pub fn upper(&self) -> BitString {
        self.lower.flip(self.direction)
    }

    pub fn edge(&self) -> Edge {
        Edge {
            lower: self.lower,
            direction: self.direction,
        }
    }

    /// `e'`, in canonical form.
    pub fn partner_edge(&self) -> Edge {
        let other = self.lower.flip(self.partner);
        let lower = if self.lower.bit(self.partner) {
            other
        } else {
            self.lower
        };
        Edge {
            lower,
            direction: self.partner,
        }
    }

    /// Checks every defining property of a couple.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        let class = match self.family {
            Family::Fibonacci | Family::Lucas => self.family.class(),
            other => return Err(Error::UnsupportedFamily(other)),
        };
        check_direction(self.direction, n)?;
        check_direction(self.partner, n)?;
        let bad = |why: String| Err(Error::InvalidCouple(why));
        let y = self.lower;
        let x = self.upper();
        if y.bit(self.direction) {
            return bad(format!("{y} has a 1 at direction {}", self.direction));
        }
        if !is_member(&y, class) || !is_member(&x, class) {
            return bad(format!(
                "{y}/{} is not an edge of {}",
                self.direction, self.family
            ));
        }
        let expected = side_direction(self.direction, n, self.side, is_cyclic(self.family, n));
        if expected != Some(self.partner) || self.partner == self.direction {
            return bad(format!(
                "partner {} is not the {:?} neighbour of {}",
                self.partner, self.side, self.direction
            ));
        }
        if !is_member(&y.flip(self.partner), class) {
            return bad(format!("{y}/{} is not an edge", self.partner));
        }
        if is_member(&x.flip(self.partner), class) {
            return bad(format!("{x} + δ{} is a vertex", self.partner));
        }
        Ok(())
    }

    /// `y<TAB>i<TAB>side`
    pub fn to_line(&self) -> String {
        format!("{}\t{}\t{}", self.lower, self.direction, self.side.name())
    }
}

fn require_family(g: &CubeGraph) -> Result<()> {
    match g.family() {
        Family::Fibonacci | Family::Lucas => Ok(()),
        other => Err(Error::UnsupportedFamily(other)),
    }
}

/// Every couple of `g`, ordered by edge (direction, lower) then side.
///
/// All directions `j` are tried, not only the neighbours of `i`; an
/// imbalanced edge anywhere else is reported as a mismatch.
pub fn enumerate_couples(g: &CubeGraph) -> Result<Vec<ImbalancedCouple>> {
    require_family(g)?;
    let n = g.n();
    let cyc = is_cyclic(g.family(), n);
    let mut out = Vec::new();
    for e in g.edges() {
        let x = e.upper();
        let mut found = Vec::with_capacity(2);
        for j in (1..=n).filter(|&j| j != e.direction) {
            if g.contains(&e.lower.flip(j)) && !g.contains(&x.flip(j)) {
                found.push(j);
            }
        }
        for side in [Side::Left, Side::Right] {
            let Some(j) = side_direction(e.direction, n, side, cyc) else {
                continue;
            };
            if let Some(pos) = found.iter().position(|&k| k == j) {
                found.remove(pos);
                out.push(ImbalancedCouple {
                    family: g.family(),
                    lower: e.lower,
                    direction: e.direction,
                    side,
                    partner: j,
                });
            }
        }
        if !found.is_empty() {
            return Err(mismatch(
                "couple enumeration",
                format!(
                    "edge {}/{} has imbalanced partners {found:?} away from its neighbours",
                    e.lower, e.direction
                ),
            ));
        }
    }
    Ok(out)
}

fn require_gamma(c: &ImbalancedCouple, side: Side) -> Result<()> {
    if c.family != Family::Fibonacci {
        return Err(Error::UnsupportedFamily(c.family));
    }
    if c.side != side {
        return Err(Error::WrongSide);
    }
    c.validate()
}

/// Right couple of `Γ_n` → edge of `Γ_{n-1}`: delete position `i + 1` of the
/// upper endpoint. The image edge uses direction `i`.
pub fn theta_gamma_right(c: &ImbalancedCouple) -> Result<Edge> {
    require_gamma(c, Side::Right)?;
    let i = c.direction;
    Edge::new(c.lower.remove(i + 1), i)
}

/// Inverse of [`theta_gamma_right`]: for `f` in direction `i` with lower
/// endpoint `z`, `y = z_1..z_{i-1} 0 0 z_{i+1}..` and the couple is
/// `({y, y + δ_i}, {y, y + δ_{i+1}})`.
pub fn theta_gamma_right_inverse(f: &Edge) -> Result<ImbalancedCouple> {
    require_gamma_edge(f)?;
    let y = f.lower.insert(f.direction + 1, false)?;
    ImbalancedCouple::new(Family::Fibonacci, y, f.direction, Side::Right)
        .map_err(|e| Error::InvalidEdge(e.to_string()))
}

/// Left couple of `Γ_n` → edge of `Γ_{n-1}`: delete position `i - 1` of the
/// upper endpoint. The image edge uses direction `i - 1`.
pub fn phi_gamma_left(c: &ImbalancedCouple) -> Result<Edge> {
    require_gamma(c, Side::Left)?;
    let i = c.direction;
    Edge::new(c.lower.remove(i - 1), i - 1)
}

/// Inverse of [`phi_gamma_left`]: insert a 0 before the direction of `f`.
pub fn phi_gamma_left_inverse(f: &Edge) -> Result<ImbalancedCouple> {
    require_gamma_edge(f)?;
    let y = f.lower.insert(f.direction, false)?;
    ImbalancedCouple::new(Family::Fibonacci, y, f.direction + 1, Side::Left)
        .map_err(|e| Error::InvalidEdge(e.to_string()))
}

fn require_gamma_edge(f: &Edge) -> Result<()> {
    check_direction(f.direction, f.n())?;
    if f.lower.bit(f.direction)
        || !is_member(&f.lower, StringClass::Fib)
        || !is_member(&f.upper(), StringClass::Fib)
    {
        return Err(Error::InvalidEdge(format!(
            "{}/{} is not an edge of Γ{}",
            f.lower,
            f.direction,
            f.n()
        )));
    }
    Ok(())
}

/// Couple of `Λ_n` (`n >= 4`) → string of `Fib_{n-4}`.
///
/// With `r` the upper endpoint rotated so that direction `i` sits at
/// position 1, a right couple maps to `r_4 .. r_{n-1}` and a left couple to
/// `r_3 .. r_{n-2}`.
pub fn theta_lambda(c: &ImbalancedCouple) -> Result<BitString> {
    if c.family != Family::Lucas {
        return Err(Error::UnsupportedFamily(c.family));
    }
    let n = c.n();
    if n < 4 {
        return Err(Error::NTooSmall { n, min: 4 });
    }
    c.validate()?;
    let r = c.upper().rotate(c.direction);
    Ok(match c.side {
        Side::Right => r.substring(4, n - 1),
        Side::Left => r.substring(3, n - 2),
    })
}

/// Inverse of [`theta_lambda`] for direction `i` of `Λ_n`: the rotated upper
/// endpoint is `1 0 0 z 0` (right) or `1 0 z 0 0` (left).
pub fn theta_lambda_inverse(z: &BitString, n: u32, i: u32, side: Side) -> Result<ImbalancedCouple> {
    if n < 4 {
        return Err(Error::NTooSmall { n, min: 4 });
    }
    check_direction(i, n)?;
    if z.len() != n - 4 {
        return Err(Error::InvalidCouple(format!(
            "{z:?} has length {}, expected {}",
            z.len(),
            n - 4
        )));
    }
    if !is_member(z, StringClass::Fib) {
        return Err(Error::NotFibonacci(z.to_string()));
    }
    let (head, tail) = match side {
        Side::Right => ("100", "0"),
        Side::Left => ("10", "00"),
    };
    let head: BitString = head.parse()?;
    let tail: BitString = tail.parse()?;
    let r = head.concat(z)?.concat(&tail)?;
    // r = x read from position i; reading r from position 2 - i undoes it.
    let x = r.rotate(cyclic(2 - i as i64, n));
    ImbalancedCouple::new(Family::Lucas, x.flip(i), i, side)
}

/// `x ↦ x_k .. x_n x_1 .. x_{k-1}` preserves adjacency of `Λ_n` for every `k`.
pub fn rotation_is_automorphism(n: u32) -> Result<bool> {
    let g = CubeGraph::build(Family::Lucas, n)?;
    for k in 1..=n {
        for v in g.vertices() {
            if !g.contains(&v.rotate(k)) {
                return Ok(false);
            }
        }
        for e in g.edges() {
            let (a, b) = (e.lower.rotate(k), e.upper().rotate(k));
            if (a.value() ^ b.value()).count_ones() != 1 || !g.contains(&a) || !g.contains(&b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Outcome of checking one family of bijections at one `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionCheck {
    pub label: String,
    /// Size of the couple set.
    pub domain: Count,
    /// Size of the target set.
    pub codomain: Count,
    pub injective: bool,
    pub surjective: bool,
    pub round_trip: bool,
}

impl BijectionCheck {
    pub fn passed(&self) -> bool {
        self.injective && self.surjective && self.round_trip && self.domain == self.codomain
    }
}

fn check_map<T, U>(
    label: String,
    domain: &[T],
    codomain: &[U],
    forward: impl Fn(&T) -> Result<U>,
    backward: impl Fn(&U) -> Result<T>,
) -> Result<BijectionCheck>
where
    T: Eq + std::hash::Hash + Copy,
    U: Eq + std::hash::Hash + Copy,
{
    let target: HashSet<U> = codomain.iter().copied().collect();
    let mut image = HashSet::with_capacity(domain.len());
    let mut round_trip = true;
    let mut into_target = true;
    for c in domain {
        let f = forward(c)?;
        into_target &= target.contains(&f);
        image.insert(f);
        round_trip &= backward(&f).ok().as_ref() == Some(c);
    }
    for f in codomain {
        let c = backward(f)?;
        round_trip &= forward(&c).ok().as_ref() == Some(f);
    }
    Ok(BijectionCheck {
        label,
        domain: domain.len() as Count,
        codomain: codomain.len() as Count,
        injective: image.len() == domain.len(),
        surjective: into_target && image.len() == target.len(),
        round_trip,
    })
}

/// Exhaustive check of θ (right) and φ (left) on `Γ_n`, `n >= 2`.
pub fn verify_gamma_bijections(n: u32) -> Result<Vec<BijectionCheck>> {
    if n < 2 {
        return Err(Error::NTooSmall { n, min: 2 });
    }
    let g = CubeGraph::build(Family::Fibonacci, n)?;
    let couples = enumerate_couples(&g)?;
    let smaller: Vec<Edge> = CubeGraph::build(Family::Fibonacci, n - 1)?
        .edges()
        .collect();
    let (right, left): (Vec<_>, Vec<_>) = couples.into_iter().partition(|c| c.side == Side::Right);
    Ok(vec![
        check_map(
            format!("theta R(Γ{n}) -> E(Γ{})", n - 1),
            &right,
            &smaller,
            theta_gamma_right,
            theta_gamma_right_inverse,
        )?,
        check_map(
            format!("phi L(Γ{n}) -> E(Γ{})", n - 1),
            &left,
            &smaller,
            phi_gamma_left,
            phi_gamma_left_inverse,
        )?,
    ])
}

/// Exhaustive check of the rotated Lucas maps on `Λ_n`, `n >= 4`, for every
/// direction and both sides.
pub fn verify_lambda_bijections(n: u32) -> Result<Vec<BijectionCheck>> {
    if n < 4 {
        return Err(Error::NTooSmall { n, min: 4 });
    }
    let g = CubeGraph::build(Family::Lucas, n)?;
    let couples = enumerate_couples(&g)?;
    let fib = strings::enumerate(n - 4, StringClass::Fib)?;
    let mut out = Vec::with_capacity(2 * n as usize);
    for i in 1..=n {
        for side in [Side::Right, Side::Left] {
            let part: Vec<_> = couples
                .iter()
                .filter(|c| c.direction == i && c.side == side)
                .copied()
                .collect();
            out.push(check_map(
                format!("{side:?}^{i}(Λ{n}) -> Fib{}", n - 4),
                &part,
                &fib,
                theta_lambda,
                |z| theta_lambda_inverse(z, n, i, side),
            )?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_irregularity;

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn gamma_couple(x: &str, i: u32, side: Side) -> ImbalancedCouple {
        ImbalancedCouple::new(Family::Fibonacci, bs(x).flip(i), i, side).unwrap()
    }

    #[test]
    fn couple_counts() {
        let count = |f, n| {
            enumerate_couples(&CubeGraph::build(f, n).unwrap())
                .unwrap()
                .len()
        };
        assert_eq!(count(Family::Fibonacci, 2), 2);
        assert_eq!(count(Family::Lucas, 3), 6);
        assert_eq!(count(Family::Fibonacci, 1), 0);
        assert!(matches!(
            enumerate_couples(&CubeGraph::build(Family::Hypercube, 3).unwrap()),
            Err(Error::UnsupportedFamily(_))
        ));
    }

    #[test]
    fn couples_equal_irregularity() {
        for family in [Family::Fibonacci, Family::Lucas] {
            for n in 0..=14 {
                let g = CubeGraph::build(family, n).unwrap();
                let couples = enumerate_couples(&g).unwrap();
                assert_eq!(
                    couples.len() as Count,
                    oracle_irregularity(&g),
                    "{family} n={n}"
                );
                for c in &couples {
                    c.validate().unwrap();
                }
            }
        }
    }

    #[test]
    fn theta_right_examples() {
        let c = gamma_couple("10", 1, Side::Right);
        let f = theta_gamma_right(&c).unwrap();
        assert_eq!(
            (f.lower.to_string(), f.upper().to_string(), f.direction),
            ("0".into(), "1".into(), 1)
        );

        let f = theta_gamma_right(&gamma_couple("100", 1, Side::Right)).unwrap();
        assert_eq!(
            (f.upper().to_string(), f.lower.to_string(), f.direction),
            ("10".into(), "00".into(), 1)
        );

        let f = theta_gamma_right(&gamma_couple("010", 2, Side::Right)).unwrap();
        assert_eq!(
            (f.upper().to_string(), f.lower.to_string(), f.direction),
            ("01".into(), "00".into(), 2)
        );

        assert_eq!(
            theta_gamma_right(&gamma_couple("01", 2, Side::Left)),
            Err(Error::WrongSide)
        );
    }

    #[test]
    fn theta_right_inverse_examples() {
        let f = Edge::from_upper(bs("1"), 1).unwrap();
        let c = theta_gamma_right_inverse(&f).unwrap();
        assert_eq!(c.upper().to_string(), "10");

        let f = Edge::from_upper(bs("10"), 1).unwrap();
        let c = theta_gamma_right_inverse(&f).unwrap();
        assert_eq!(c.upper().to_string(), "100");
        // t = y + δ_{i+1}
        assert_eq!(c.lower.flip(c.partner).to_string(), "010");

        assert!(theta_gamma_right_inverse(&Edge::new(bs("010"), 1).unwrap()).is_err());
    }

    #[test]
    fn phi_left_examples() {
        let f = phi_gamma_left(&gamma_couple("01", 2, Side::Left)).unwrap();
        assert_eq!(
            (f.upper().to_string(), f.lower.to_string()),
            ("1".into(), "0".into())
        );
        let f = phi_gamma_left(&gamma_couple("001", 3, Side::Left)).unwrap();
        assert_eq!(
            (f.upper().to_string(), f.lower.to_string()),
            ("01".into(), "00".into())
        );

        let g4 = CubeGraph::build(Family::Fibonacci, 4).unwrap();
        let left: HashSet<_> = enumerate_couples(&g4)
            .unwrap()
            .iter()
            .filter(|c| c.side == Side::Left)
            .map(|c| phi_gamma_left(c).unwrap())
            .collect();
        assert_eq!(left.len(), 5);
    }

    #[test]
    fn lambda_examples() {
        let c = ImbalancedCouple::new(Family::Lucas, bs("0000"), 1, Side::Right).unwrap();
        assert_eq!(theta_lambda(&c).unwrap(), BitString::empty());
        let c = ImbalancedCouple::new(Family::Lucas, bs("00000"), 1, Side::Right).unwrap();
        assert_eq!(theta_lambda(&c).unwrap().to_string(), "0");

        let c = theta_lambda_inverse(&bs("10"), 6, 1, Side::Right).unwrap();
        assert_eq!(c.upper().to_string(), "100100");
        assert_eq!(c.lower.flip(c.partner).to_string(), "010100");

        assert!(matches!(
            theta_lambda_inverse(&bs("11"), 6, 1, Side::Right),
            Err(Error::NotFibonacci(_))
        ));
        assert!(matches!(
            theta_lambda_inverse(&BitString::empty(), 3, 1, Side::Right),
            Err(Error::NTooSmall { .. })
        ));
    }

    #[test]
    fn lambda_inverse_rotates_back() {
        for n in 4..=9 {
            for i in 1..=n {
                for side in [Side::Left, Side::Right] {
                    for z in strings::enumerate(n - 4, StringClass::Fib).unwrap() {
                        let c = theta_lambda_inverse(&z, n, i, side).unwrap();
                        assert_eq!(c.direction, i);
                        assert_eq!(theta_lambda(&c).unwrap(), z);
                    }
                }
            }
        }
    }

    #[test]
    fn gamma_bijections_small() {
        for n in 2..=10 {
            for check in verify_gamma_bijections(n).unwrap() {
                assert!(check.passed(), "{check:?}");
            }
        }
    }

    #[test]
    fn lambda_bijections_small() {
        for n in 4..=10 {
            for check in verify_lambda_bijections(n).unwrap() {
                assert!(check.passed(), "{check:?}");
                assert_eq!(check.domain, strings::fibonacci(n - 2).unwrap());
            }
        }
    }

    #[test]
    fn rotation_automorphism() {
        for n in 0..=12 {
            assert!(rotation_is_automorphism(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn couple_validation_rejects() {
        // Partner 3 is not a neighbour of direction 1 in Γ3.
        let bad = ImbalancedCouple {
            family: Family::Fibonacci,
            lower: bs("000"),
            direction: 1,
            side: Side::Right,
            partner: 3,
        };
        assert!(bad.validate().is_err());
        // 001 / 1 with partner 2: 001 + δ2 = 011 is not a vertex.
        assert!(ImbalancedCouple::new(Family::Fibonacci, bs("001"), 1, Side::Right).is_err());
        assert!(ImbalancedCouple::new(Family::Fibonacci, bs("000"), 1, Side::Left).is_err());
    }
}
