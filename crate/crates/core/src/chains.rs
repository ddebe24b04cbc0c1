//! Chains of subsets of `[n]` and the simplicial cones they index.
//!
//! A chain `α_0 ⊂ α_1 ⊂ ... ⊂ α_p` of proper subsets names the cone spanned
//! by `e_i` for `i ∈ α_0` and `e_{α_j}` for `j ≥ 1`, where `e_α = Σ_{i∈α} e_i`
//! and `e_n = -(e_1 + ... + e_{n-1})`. Chains are written in list notation
//! `⟦α_0 | α_1∖α_0 | ... | [n]∖α_p⟧`; an empty leading block means `α_0 = ∅`.

use std::cmp::Ordering;
use std::fmt;

use crate::linalg::coordinates_in_span;
use crate::scalar::ExactField;
use crate::{check_k, Error, Result};

/// Largest ambient size supported by the bitmask representation.
pub const MAX_N: usize = 63;

/// A subset of `[n]` stored as a bitmask; bit `i - 1` holds element `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Self {
        Subset(if n == 64 { u64::MAX } else { (1u64 << n) - 1 })
    }

    pub fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        Subset(1 << (i - 1))
    }

    pub fn contains(self, i: usize) -> bool {
        i >= 1 && self.0 & (1 << (i - 1)) != 0
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << (i - 1);
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << (i - 1));
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    /// Elements in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i + 1)
        })
    }

    pub fn first(self) -> Option<usize> {
        self.iter().next()
    }

    /// Image under `i ↦ n + 1 - i`.
    pub fn complement_labels(self, n: usize) -> Subset {
        self.iter().map(|i| n + 1 - i).collect()
    }

    /// The ray `e_α` in `ℤ^{n-1}`.
    pub fn ray(self, n: usize) -> Vec<i64> {
        let shift = i64::from(self.contains(n));
        (1..n)
            .map(|i| i64::from(self.contains(i)) - shift)
            .collect()
    }
}

impl serde::Serialize for Subset {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Subset::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

/// A strictly increasing chain of proper subsets of `[n]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Chain {
    n: usize,
    alpha0: Subset,
    sets: Vec<Subset>,
}

impl Chain {
    /// Builds a chain from `α_0` and the sets `α_1 ⊂ ... ⊂ α_p`.
    pub fn new(n: usize, alpha0: Subset, sets: Vec<Subset>) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::InvalidChain(format!("unsupported n = {n}")));
        }
        let full = Subset::full(n);
        let mut prev = alpha0;
        if !alpha0.is_subset(full) || alpha0 == full {
            return Err(Error::InvalidChain(
                "α_0 must be a proper subset of [n]".into(),
            ));
        }
        for &s in &sets {
            if !s.is_subset(full) || s == full {
                return Err(Error::InvalidChain(
                    "sets must be proper subsets of [n]".into(),
                ));
            }
            if !prev.is_subset(s) || prev == s {
                return Err(Error::InvalidChain("sets must be strictly nested".into()));
            }
            prev = s;
        }
        Ok(Chain { n, alpha0, sets })
    }

    /// The maximal chain `⟦α_0 | a_{n-k} | ... | a_n⟧` for the given list of
    /// `k + 1` distinct numbers; `α_0` is the complement of the list.
    pub fn from_list(n: usize, list: &[usize]) -> Result<Self> {
        if list.is_empty() || list.len() >= n {
            return Err(Error::InvalidChain(format!(
                "a maximal chain needs between 1 and {} numbers",
                n.saturating_sub(1)
            )));
        }
        let used: Subset = list.iter().copied().collect();
        if used.len() != list.len() || list.iter().any(|&a| a == 0 || a > n) {
            return Err(Error::InvalidChain(
                "list entries must be distinct and in 1..=n".into(),
            ));
        }
        let alpha0 = Subset::full(n).difference(used);
        let mut cur = alpha0;
        let mut sets = Vec::with_capacity(list.len() - 1);
        for &a in &list[..list.len() - 1] {
            cur.insert(a);
            sets.push(cur);
        }
        Chain::new(n, alpha0, sets)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha0(&self) -> Subset {
        self.alpha0
    }

    /// The sets `α_1, ..., α_p`.
    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    /// `p`, the number of sets after `α_0`.
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha0.is_empty() && self.sets.is_empty()
    }

    /// Blocks of the list notation: `α_0`, the successive differences, and
    /// the final block `[n]∖α_p`.
    pub fn blocks(&self) -> Vec<Subset> {
        let mut out = vec![self.alpha0];
        let mut prev = self.alpha0;
        for &s in &self.sets {
            out.push(s.difference(prev));
            prev = s;
        }
        out.push(Subset::full(self.n).difference(prev));
        out
    }

    /// Dimension of the cone, `|α_0| + p`.
    pub fn dim(&self) -> usize {
        self.alpha0.len() + self.sets.len()
    }

    /// True when `|α_0| ≤ n-k-1` and `|α_j| ≥ n-k` for `j ≥ 1`.
    pub fn is_valid_for(&self, k: usize) -> bool {
        k + 2 <= self.n
            && self.alpha0.len() < self.n - k
            && self.sets.iter().all(|s| s.len() >= self.n - k)
    }

    /// `Some(k)` when this is a top-dimensional chain of the fan for
    /// `(n, k)`: nonempty `α_0` followed by singleton blocks only.
    pub fn maximal_k(&self) -> Option<usize> {
        let singletons = self.blocks()[1..].iter().all(|b| b.len() == 1);
        (singletons && !self.alpha0.is_empty()).then_some(self.sets.len())
    }

    /// The numbers `a_{n-k}, ..., a_n` of a maximal chain.
    pub fn list(&self) -> Result<Vec<usize>> {
        if self.maximal_k().is_none() {
            return Err(Error::NotMaximal(self.to_string()));
        }
        Ok(self.blocks()[1..]
            .iter()
            .map(|b| b.first().unwrap())
            .collect())
    }

    /// Relabels every element by `a ↦ n + 1 - a`.
    pub fn complement_labels(&self) -> Chain {
        Chain {
            n: self.n,
            alpha0: self.alpha0.complement_labels(self.n),
            sets: self
                .sets
                .iter()
                .map(|s| s.complement_labels(self.n))
                .collect(),
        }
    }

    /// List notation with ASCII brackets, `[[1,4|2,3|5]]`.
    pub fn to_ascii(&self) -> String {
        format!("[[{}]]", self.body())
    }

    fn body(&self) -> String {
        self.blocks()
            .iter()
            .map(|b| {
                b.iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join("|")
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟦{}⟧", self.body())
    }
}

/// Parses list notation, with either `⟦…⟧` or `[[…]]` brackets.
pub fn parse_chain(text: &str, n: usize) -> Result<Chain> {
    let bad = |msg: &str| Error::InvalidChain(format!("{text:?}: {msg}"));
    if n == 0 || n > MAX_N {
        return Err(bad("unsupported n"));
    }
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = t
        .strip_prefix('⟦')
        .and_then(|s| s.strip_suffix('⟧'))
        .or_else(|| t.strip_prefix("[[").and_then(|s| s.strip_suffix("]]")))
        .ok_or_else(|| bad("expected ⟦…⟧ or [[…]]"))?;
    let parts: Vec<&str> = inner.split('|').collect();
    if parts.len() < 2 {
        return Err(bad("need at least one bar"));
    }
    let mut seen = Subset::EMPTY;
    let mut blocks = Vec::with_capacity(parts.len());
    for (idx, part) in parts.iter().enumerate() {
        let mut block = Subset::EMPTY;
        if part.is_empty() {
            if idx > 0 {
                return Err(bad("empty non-leading block"));
            }
        } else {
            for tok in part.split(',') {
                let a: usize = tok
                    .parse()
                    .map_err(|_| bad(&format!("bad number {tok:?}")))?;
                if a == 0 || a > n {
                    return Err(bad(&format!("{a} out of range 1..={n}")));
                }
                if seen.contains(a) {
                    return Err(bad(&format!("duplicate {a}")));
                }
                seen.insert(a);
                block.insert(a);
            }
        }
        blocks.push(block);
    }
    if seen != Subset::full(n) {
        let missing: Vec<String> = Subset::full(n)
            .difference(seen)
            .iter()
            .map(|i| i.to_string())
            .collect();
        return Err(bad(&format!("missing {}", missing.join(","))));
    }
    let alpha0 = blocks[0];
    let mut cur = alpha0;
    let mut sets = Vec::new();
    for &b in &blocks[1..blocks.len() - 1] {
        cur = cur.union(b);
        sets.push(cur);
    }
    Chain::new(n, alpha0, sets)
}

/// A simplicial cone in `ℤ^{n-1}` given by its generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cone {
    pub n: usize,
    pub generators: Vec<Vec<i64>>,
}

impl Cone {
    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    /// Generators converted into an exact field.
    pub fn field_generators<T: ExactField>(&self) -> Vec<Vec<T>> {
        self.generators
            .iter()
            .map(|g| g.iter().map(|&x| T::from_i64(x)).collect())
            .collect()
    }
}

/// The cone `σ_C`: `e_i` for `i ∈ α_0` in ascending order, then `e_{α_j}`.
pub fn cone_of_chain(c: &Chain) -> Cone {
    let mut generators: Vec<Vec<i64>> = c
        .alpha0
        .iter()
        .map(|i| Subset::singleton(i).ray(c.n))
        .collect();
    generators.extend(c.sets.iter().map(|s| s.ray(c.n)));
    Cone { n: c.n, generators }
}

/// All chains of the fan for `(n, k)`, optionally only those of one
/// dimension. Ordered by `α_0` bitmask, then by the sets.
pub fn enumerate_chains(n: usize, k: usize, dim_filter: Option<usize>) -> Result<Vec<Chain>> {
    check_k(n, k, 0, 2)?;
    if n > MAX_N {
        return Err(Error::SizeOutOfRange {
            n,
            reason: "at most 63 elements",
        });
    }
    let full = Subset::full(n).bits();
    let mut out = Vec::new();
    for bits in 0..full {
        let alpha0 = Subset(bits);
        if alpha0.len() > n - k - 1 {
            continue;
        }
        let mut stack = Vec::new();
        extend_chains(n, k, alpha0, &mut stack, dim_filter, &mut out);
    }
    Ok(out)
}

fn extend_chains(
    n: usize,
    k: usize,
    alpha0: Subset,
    stack: &mut Vec<Subset>,
    dim_filter: Option<usize>,
    out: &mut Vec<Chain>,
) {
    let dim = alpha0.len() + stack.len();
    if dim_filter.is_none_or(|d| d == dim) {
        out.push(Chain {
            n,
            alpha0,
            sets: stack.clone(),
        });
    }
    if dim_filter.is_some_and(|d| dim >= d) {
        return;
    }
    let last = stack.last().copied().unwrap_or(alpha0);
    let free = Subset::full(n).difference(last);
    // Every nonempty proper addition to `last` whose size stays in [n-k, n-1].
    let free_bits: Vec<usize> = free.iter().collect();
    for mask in 1u64..(1u64 << free_bits.len()) {
        let add: Subset = free_bits
            .iter()
            .enumerate()
            .filter(|(b, _)| mask & (1 << b) != 0)
            .map(|(_, &i)| i)
            .collect();
        let next = last.union(add);
        if next.len() < n - k || next.len() == n {
            continue;
        }
        stack.push(next);
        extend_chains(n, k, alpha0, stack, dim_filter, out);
        stack.pop();
    }
}

/// `C ∩ C'`: `α_0 ∩ α'_0` followed by the sets common to both chains.
pub fn intersect_chains(c: &Chain, c2: &Chain) -> Result<Chain> {
    if c.n != c2.n {
        return Err(Error::SizeMismatch(c.n, c2.n));
    }
    let alpha0 = c.alpha0.intersection(c2.alpha0);
    let sets = c
        .sets
        .iter()
        .copied()
        .filter(|s| c2.sets.contains(s))
        .collect();
    Chain::new(c.n, alpha0, sets)
}

/// Reverse-lexicographic order on maximal chains of the same `(n, k)`:
/// at the last position where the lists differ, the smaller entry wins.
pub fn compare_chains(c: &Chain, c2: &Chain) -> Result<Ordering> {
    let a = c.list()?;
    let b = c2.list()?;
    if c.n != c2.n || a.len() != b.len() {
        return Err(Error::IncomparableChains);
    }
    Ok(a.iter()
        .rev()
        .zip(b.iter().rev())
        .find(|(x, y)| x != y)
        .map_or(Ordering::Equal, |(x, y)| x.cmp(y)))
}

/// Descent positions of a maximal chain: the elements of `α_0` exceeding
/// `a_{n-k}`, and the indices `j` (0-based in the list) with `a_j > a_{j+1}`.
fn descent_data(c: &Chain) -> Result<(Vec<usize>, Vec<usize>)> {
    let list = c.list()?;
    let first = list[0];
    let alpha_desc = c.alpha0.iter().filter(|&a| a > first).collect();
    let list_desc = list
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(j, _)| j)
        .collect();
    Ok((alpha_desc, list_desc))
}

pub fn count_descents(c: &Chain) -> Result<usize> {
    let (a, l) = descent_data(c)?;
    Ok(a.len() + l.len())
}

pub fn count_ascents(c: &Chain) -> Result<usize> {
    let list = c.list()?;
    let first = list[0];
    let alpha_asc = c.alpha0.iter().filter(|&a| a < first).count();
    let list_asc = list.windows(2).filter(|w| w[0] < w[1]).count();
    Ok(alpha_asc + list_asc)
}

/// The chain of `τ_C`: drop `α_j` at every list descent `a_j > a_{j+1}` and
/// drop from `α_0` every element exceeding `a_{n-k}`.
pub fn tau_chain(c: &Chain) -> Result<Chain> {
    let (alpha_desc, list_desc) = descent_data(c)?;
    let mut alpha0 = c.alpha0;
    for a in alpha_desc {
        alpha0.remove(a);
    }
    let sets = c
        .sets
        .iter()
        .enumerate()
        .filter(|(j, _)| !list_desc.contains(j))
        .map(|(_, &s)| s)
        .collect();
    Chain::new(c.n, alpha0, sets)
}

/// Coordinates of `point` in the generators of `σ_C`, or `None` when the
/// point is outside their span.
pub fn cone_coordinates<T: ExactField>(point: &[T], c: &Chain) -> Result<Option<Vec<T>>> {
    if point.len() + 1 != c.n {
        return Err(Error::DimensionMismatch {
            expected: c.n - 1,
            got: point.len(),
        });
    }
    let gens = cone_of_chain(c).field_generators::<T>();
    Ok(coordinates_in_span(&gens, point))
}

/// Exact test of `point ∈ σ_C`.
pub fn cone_membership<T: ExactField>(point: &[T], c: &Chain) -> Result<bool> {
    Ok(cone_coordinates(point, c)?.is_some_and(|coords| coords.iter().all(|x| !x.is_negative())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::integer_rank;
    use crate::Rational;

    fn set(xs: &[usize]) -> Subset {
        xs.iter().copied().collect()
    }

    #[test]
    fn parse_worked_example() {
        let c = parse_chain("⟦1,4|2,3|6,7,9|5,8⟧", 9).unwrap();
        assert_eq!(c.alpha0(), set(&[1, 4]));
        assert_eq!(c.sets(), &[set(&[1, 2, 3, 4]), set(&[1, 2, 3, 4, 6, 7, 9])]);
        assert_eq!(c.to_string(), "⟦1,4|2,3|6,7,9|5,8⟧");
        assert_eq!(c.to_ascii(), "[[1,4|2,3|6,7,9|5,8]]");
    }

    #[test]
    fn parse_degenerate_chains() {
        let zero = parse_chain("⟦|1,2,3⟧", 3).unwrap();
        assert!(zero.is_empty());
        assert_eq!(zero.dim(), 0);
        assert!(cone_of_chain(&zero).generators.is_empty());
        let single = parse_chain("⟦1,2|3,4⟧", 4).unwrap();
        assert_eq!(single.alpha0(), set(&[1, 2]));
        assert_eq!(single.len(), 0);
        assert_eq!(parse_chain("[[1,2|3,4]]", 4).unwrap(), single);
    }

    #[test]
    fn parse_rejects_malformed() {
        assert!(parse_chain("⟦1,1|2,3⟧", 3).is_err());
        assert!(parse_chain("⟦1,4|2,3⟧", 3).is_err());
        assert!(parse_chain("⟦1|2⟧", 3).is_err());
        assert!(parse_chain("⟦1||2,3⟧", 3).is_err());
        assert!(parse_chain("⟦1|2,3|⟧", 3).is_err());
        assert!(parse_chain("⟦1,2,3⟧", 3).is_err());
        assert!(parse_chain("1|2,3", 3).is_err());
    }

    #[test]
    fn round_trip_sorts_blocks() {
        let c = parse_chain("⟦4,1|3,2|9,7,6|8,5⟧", 9).unwrap();
        assert_eq!(c.to_string(), "⟦1,4|2,3|6,7,9|5,8⟧");
    }

    #[test]
    fn cones_of_small_chains() {
        let c = Chain::new(3, set(&[1]), vec![]).unwrap();
        assert_eq!(cone_of_chain(&c).generators, vec![vec![1, 0]]);
        let c = Chain::new(3, set(&[3]), vec![]).unwrap();
        assert_eq!(cone_of_chain(&c).generators, vec![vec![-1, -1]]);
        let c = Chain::new(3, set(&[1]), vec![set(&[1, 2])]).unwrap();
        let cone = cone_of_chain(&c);
        assert_eq!(cone.generators, vec![vec![1, 0], vec![1, 1]]);
        assert_eq!(integer_rank(&cone.generators), 2);
    }

    #[test]
    fn chain_counts() {
        assert_eq!(enumerate_chains(4, 2, Some(3)).unwrap().len(), 24);
        assert_eq!(enumerate_chains(3, 0, None).unwrap().len(), 7);
        assert_eq!(enumerate_chains(5, 2, Some(4)).unwrap().len(), 60);
        assert!(enumerate_chains(4, 3, None).is_err());
        for c in enumerate_chains(5, 2, None).unwrap() {
            assert!(c.is_valid_for(2));
        }
    }

    #[test]
    fn intersection_example() {
        // 10 appears in only one of the two chains, so drop it and use n = 9
        let c = parse_chain("⟦1,4|2,3|6,7|9|5,8⟧", 9).unwrap();
        let c2 = parse_chain("⟦1,4,6|7,2,3|5,9|8⟧", 9).unwrap();
        let i = intersect_chains(&c, &c2).unwrap();
        assert_eq!(i.to_string(), "⟦1,4|2,3,6,7|5,8,9⟧");
        // or keep it in both first sets
        let c = parse_chain("⟦1,4,10|2,3|6,7|9|5,8⟧", 10).unwrap();
        let c2 = parse_chain("⟦1,4,6,10|7,2,3|5,9|8⟧", 10).unwrap();
        let i = intersect_chains(&c, &c2).unwrap();
        assert_eq!(i.to_string(), "⟦1,4,10|2,3,6,7|5,8,9⟧");
        assert!(parse_chain("⟦1,4,6|7,2,3|5,9|8⟧", 10).is_err());
        assert_eq!(intersect_chains(&c, &c).unwrap(), c);
        assert!(intersect_chains(&c, &parse_chain("⟦1|2,3⟧", 3).unwrap()).is_err());
    }

    #[test]
    fn order_examples() {
        let a = parse_chain("⟦3|1|2⟧", 3).unwrap();
        let b = parse_chain("⟦1|2|3⟧", 3).unwrap();
        assert_eq!(compare_chains(&a, &b).unwrap(), Ordering::Less);
        assert_eq!(compare_chains(&b, &a).unwrap(), Ordering::Greater);
        assert_eq!(compare_chains(&a, &a).unwrap(), Ordering::Equal);
        let non_max = parse_chain("⟦1|2,3⟧", 3).unwrap();
        assert!(matches!(
            compare_chains(&a, &non_max),
            Err(Error::NotMaximal(_))
        ));
        let other_k = parse_chain("⟦1,2|3⟧", 3).unwrap();
        assert_eq!(compare_chains(&a, &other_k), Err(Error::IncomparableChains));
    }

    #[test]
    fn descents_and_tau_example() {
        let c = parse_chain("⟦1,2,5,8|4|3|6|9|7⟧", 9).unwrap();
        assert_eq!(c.maximal_k(), Some(4));
        assert_eq!(count_descents(&c).unwrap(), 4);
        assert_eq!(count_ascents(&c).unwrap(), 4);
        let tau = tau_chain(&c).unwrap();
        assert_eq!(tau.to_string(), "⟦1,2|3,4,5,8|6|7,9⟧");
        // n-1 minus four descents
        assert_eq!(tau.dim(), 4);
        assert_eq!(cone_of_chain(&tau).generators.len(), 4);
    }

    #[test]
    fn ascending_chain_has_no_descents() {
        for n in 3..8 {
            for k in 0..=n - 2 {
                let list: Vec<usize> = (n - k..=n).collect();
                let c = Chain::from_list(n, &list).unwrap();
                assert_eq!(count_descents(&c).unwrap(), 0);
                assert_eq!(tau_chain(&c).unwrap(), c);
            }
        }
    }

    #[test]
    fn membership_basics() {
        for c in enumerate_chains(4, 2, None).unwrap() {
            let origin = vec![Rational::from_integer(0.into()); 3];
            assert!(cone_membership(&origin, &c).unwrap());
            for g in cone_of_chain(&c).field_generators::<Rational>() {
                assert!(cone_membership(&g, &c).unwrap());
            }
        }
        let c = parse_chain("⟦1|2,3⟧", 3).unwrap();
        let q = |x: i64| Rational::from_integer(x.into());
        assert!(!cone_membership(&[q(-1), q(0)], &c).unwrap());
        assert!(!cone_membership(&[q(1), q(1)], &c).unwrap());
        assert!(cone_membership(&[q(1)], &c).is_err());
    }

    #[test]
    fn non_maximal_inputs_error() {
        let c = parse_chain("⟦1|2,3⟧", 3).unwrap();
        assert!(count_descents(&c).is_err());
        assert!(count_ascents(&c).is_err());
        assert!(tau_chain(&c).is_err());
    }
}
