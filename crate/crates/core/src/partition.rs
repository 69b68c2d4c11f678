//! Integer partitions, Young-diagram box statistics and the α-deformed hook
//! products, generalized Pochhammer symbols and specialization coefficients
//! built from them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{usage, Error, Result};
use crate::exact::{int, Rat};

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

/// Result of comparing two partitions of equal weight in dominance order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dominance {
    /// μ ≤ λ.
    Leq,
    /// μ ≥ λ and μ ≠ λ.
    GeqOnly,
    Incomparable,
}

impl Partition {
    /// Trailing zeros are dropped; increasing sequences are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return usage(format!("{parts:?} is not weakly decreasing with positive parts"));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// The rectangle (n^N): N rows of length n.
    pub fn rectangle(n: u32, rows: usize) -> Self {
        if n == 0 {
            return Self::empty();
        }
        Self(vec![n; rows])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part i (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let first = self.part(0);
        Self((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// Boxes (i, j), 0-based row and column.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (0..p as usize).map(move |j| (i, j)))
    }

    pub fn arm(&self, i: usize, j: usize) -> u32 {
        self.part(i) - j as u32 - 1
    }

    pub fn leg(&self, i: usize, j: usize) -> u32 {
        self.conjugate().part(j) - i as u32 - 1
    }

    pub fn coarm(&self, _i: usize, j: usize) -> u32 {
        j as u32
    }

    pub fn coleg(&self, i: usize, _j: usize) -> u32 {
        i as u32
    }

    /// Multiplicity of each part size.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Σ (i−1) λ_i with 1-based rows.
    pub fn n_statistic(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &p)| i as u32 * p).sum()
    }

    /// Dominance comparison of `self` (μ) against `lambda`.
    pub fn dominance(&self, lambda: &Partition) -> Result<Dominance> {
        if self.weight() != lambda.weight() {
            return usage(format!("dominance needs equal weights: {self} vs {lambda}"));
        }
        let (mut sm, mut sl) = (0u32, 0u32);
        let (mut le, mut ge) = (true, true);
        for i in 0..self.len().max(lambda.len()) {
            sm += self.part(i);
            sl += lambda.part(i);
            le &= sm <= sl;
            ge &= sm >= sl;
        }
        Ok(if le {
            Dominance::Leq
        } else if ge {
            Dominance::GeqOnly
        } else {
            Dominance::Incomparable
        })
    }

    /// μ ≤ λ in dominance order (weights must agree).
    pub fn dominated_by(&self, lambda: &Partition) -> bool {
        matches!(self.dominance(lambda), Ok(Dominance::Leq))
    }

    /// Lower hook product h^λ = Π (l + 1 + α a).
    pub fn lower_hook(&self, alpha: &Rat) -> Rat {
        let conj = self.conjugate();
        self.boxes()
            .map(|(i, j)| {
                let a = self.part(i) - j as u32 - 1;
                let l = conj.part(j) - i as u32 - 1;
                int(l as i64 + 1) + alpha * int(a as i64)
            })
            .fold(Rat::one(), |acc, x| acc * x)
    }

    /// Upper hook product h_λ = Π (l + α + α a).
    pub fn upper_hook(&self, alpha: &Rat) -> Rat {
        let conj = self.conjugate();
        self.boxes()
            .map(|(i, j)| {
                let a = self.part(i) - j as u32 - 1;
                let l = conj.part(j) - i as u32 - 1;
                int(l as i64) + alpha * int(a as i64 + 1)
            })
            .fold(Rat::one(), |acc, x| acc * x)
    }

    pub fn hooks(&self, alpha: &Rat) -> HookData {
        HookData { lower: self.lower_hook(alpha), upper: self.upper_hook(alpha) }
    }

    /// Generalized Pochhammer symbol [u]_λ = Π_j Π_{m<λ_j} (u − (j−1)/α + m).
    pub fn gen_pochhammer(&self, u: &Rat, alpha: &Rat) -> Rat {
        let inv = alpha.recip();
        let mut acc = Rat::one();
        for (j, &p) in self.0.iter().enumerate() {
            let base = u - &inv * int(j as i64);
            for m in 0..p {
                acc *= &base + int(m as i64);
            }
        }
        acc
    }

    /// b_λ(N) = Π (N − l' + α a') = α^{|λ|} [N/α]_λ.
    pub fn b_coeff(&self, alpha: &Rat, n: &Rat) -> Rat {
        self.boxes().map(|(i, j)| n - int(i as i64) + alpha * int(j as i64)).fold(Rat::one(), |acc, x| acc * x)
    }

    /// z_λ = Π k^{n_k} n_k!.
    pub fn z(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .map(|(k, m)| num_traits::pow(BigInt::from(k), m as usize) * factorial(m))
            .fold(BigInt::one(), |a, b| a * b)
    }

    /// Π n_k!, the size of the stabilizer of a monomial with exponents λ.
    pub fn aut(&self) -> BigInt {
        self.multiplicities().into_values().map(factorial).fold(BigInt::one(), |a, b| a * b)
    }

    /// Union of parts, re-sorted.
    pub fn union(&self, o: &Partition) -> Partition {
        let mut v: Vec<u32> = self.0.iter().chain(&o.0).copied().collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }
}

pub fn factorial(m: u32) -> BigInt {
    (1..=m).fold(BigInt::one(), |a, k| a * BigInt::from(k))
}

/// Both α-deformed hook products of a partition.
#[derive(Debug, Clone, PartialEq)]
pub struct HookData {
    pub lower: Rat,
    pub upper: Rat,
}

/// All partitions of `n` in decreasing lexicographic order. Lexicographic
/// order refines dominance, so μ < λ implies μ is listed after λ.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` with at most `max_len` parts.
pub fn partitions_with_len(n: u32, max_len: usize) -> Vec<Partition> {
    partitions_of(n).into_iter().filter(|p| p.len() <= max_len).collect()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
        if t.trim().is_empty() {
            return Ok(Self::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|e| Error::Parse(format!("{s:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// Shorthand used throughout tests: `part(&[2, 1])`.
pub fn part(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn hook_values_for_two_row_shapes() {
        let a = rat(2, 1);
        // (2): lower (1+α)·1, upper (2α)·α
        assert_eq!(part(&[2]).lower_hook(&a), rat(3, 1));
        assert_eq!(part(&[2]).upper_hook(&a), rat(8, 1));
        assert_eq!(part(&[1, 1]).lower_hook(&a), rat(2, 1));
        assert_eq!(part(&[1, 1]).upper_hook(&a), rat(6, 1));
    }

    #[test]
    fn conjugate_and_counts() {
        assert_eq!(part(&[3, 1, 1]).conjugate(), part(&[3, 1, 1]));
        assert_eq!(part(&[4, 2]).conjugate(), part(&[2, 2, 1, 1]));
        let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(part(&[2, 2, 1]).z(), BigInt::from(8));
    }

    #[test]
    fn dominance_tri_state() {
        assert_eq!(part(&[2, 2]).dominance(&part(&[3, 1])).unwrap(), Dominance::Leq);
        assert_eq!(part(&[3, 1]).dominance(&part(&[2, 2])).unwrap(), Dominance::GeqOnly);
        assert_eq!(part(&[3, 1, 1, 1]).dominance(&part(&[2, 2, 2])).unwrap(), Dominance::Incomparable);
        assert!(part(&[2]).dominance(&part(&[1])).is_err());
    }

    #[test]
    fn parse_round_trip() {
        let p: Partition = "[3,1,1]".parse().unwrap();
        assert_eq!(p.to_string(), "[3,1,1]");
        assert!("[1,2]".parse::<Partition>().is_err());
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
    }

    #[test]
    fn b_coeff_matches_pochhammer_form() {
        let a = rat(3, 2);
        let n = rat(4, 1);
        for p in partitions_of(5) {
            let lhs = p.b_coeff(&a, &n);
            let rhs = num_traits::pow(a.clone(), 5) * p.gen_pochhammer(&(&n / &a), &a);
            assert_eq!(lhs, rhs, "{p}");
        }
    }
}
