//! Symmetric functions in the complete homogeneous (`h`) and elementary
//! (`e`) bases with polynomial-in-`t` coefficients.
//!
//! Equality with functions given only by their monomial expansion (such as
//! chromatic quasisymmetric functions) is decided by [`SymSeries::expand_monomials`]:
//! a homogeneous symmetric function of degree `d` is determined by its
//! expansion in `d` variables.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::poly::Poly;
use crate::scalar::Coeff;
use crate::{factorial, Error, Result};

/// Integer partition, parts weakly decreasing and positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// `λ ∪ μ`.
    pub fn union(&self, other: &Partition) -> Partition {
        Partition::new(self.0.iter().chain(&other.0).copied().collect())
    }

    /// `|λ|! / ∏ λ_i!`, the dimension of the permutation module `h_λ` names.
    pub fn young_index(&self) -> u64 {
        factorial(self.weight()) / self.0.iter().map(|&p| factorial(p)).product::<u64>()
    }

    /// All partitions of `n` in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                go(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    H,
    E,
}

impl Basis {
    pub fn dual(self) -> Basis {
        match self {
            Basis::H => Basis::E,
            Basis::E => Basis::H,
        }
    }
}

/// Monomial expansion: exponent vector to coefficient.
pub type MonomialExpansion<T> = BTreeMap<Vec<usize>, Poly<T>>;

/// `Σ_λ c_λ(t) b_λ` with `b = h` or `b = e`. Zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(into = "SeriesRepr<T>", from = "SeriesRepr<T>")]
#[serde(bound(
    serialize = "T: Coeff + Serialize",
    deserialize = "T: Coeff + Deserialize<'de>"
))]
pub struct SymSeries<T: Coeff = i64> {
    basis: Basis,
    terms: BTreeMap<Partition, Poly<T>>,
}

#[derive(Serialize, Deserialize)]
struct TermRepr<T> {
    partition: Partition,
    coeff: Poly<T>,
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr<T> {
    basis: Basis,
    terms: Vec<TermRepr<T>>,
}

impl<T: Coeff> From<SymSeries<T>> for SeriesRepr<T> {
    fn from(s: SymSeries<T>) -> Self {
        SeriesRepr {
            basis: s.basis,
            terms: s
                .terms
                .into_iter()
                .map(|(partition, coeff)| TermRepr { partition, coeff })
                .collect(),
        }
    }
}

impl<T: Coeff> From<SeriesRepr<T>> for SymSeries<T> {
    fn from(r: SeriesRepr<T>) -> Self {
        let mut s = SymSeries::zero(r.basis);
        for t in r.terms {
            s.add_term(Partition::new(t.partition.0), &t.coeff);
        }
        s
    }
}

impl<T: Coeff> SymSeries<T> {
    pub fn zero(basis: Basis) -> Self {
        SymSeries {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// `coeff · b_λ`.
    pub fn term(basis: Basis, partition: Partition, coeff: Poly<T>) -> Self {
        let mut s = Self::zero(basis);
        s.add_term(partition, &coeff);
        s
    }

    /// `h_r`.
    pub fn h(r: usize) -> Self {
        Self::term(Basis::H, Partition::new(vec![r]), Poly::one())
    }

    /// `e_r`.
    pub fn e(r: usize) -> Self {
        Self::term(Basis::E, Partition::new(vec![r]), Poly::one())
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Poly<T>)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> Poly<T> {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Weights of the partitions present, deduplicated.
    pub fn weights(&self) -> Vec<usize> {
        let mut w: Vec<usize> = self.terms.keys().map(Partition::weight).collect();
        w.sort_unstable();
        w.dedup();
        w
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: &Poly<T>) {
        let entry = self.terms.entry(lambda).or_default();
        *entry += coeff;
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.basis != other.basis && !self.is_zero() && !other.is_zero() {
            return Err(Error::MixedBasis);
        }
        let mut out = if self.is_zero() {
            other.clone()
        } else {
            self.clone()
        };
        if !self.is_zero() {
            for (l, c) in &other.terms {
                out.add_term(l.clone(), c);
            }
        }
        Ok(out)
    }

    /// Multiplies every coefficient by the polynomial `p`.
    pub fn scale(&self, p: &Poly<T>) -> Self {
        let mut out = Self::zero(self.basis);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), &(c * p));
        }
        out
    }

    /// Bilinear product with `b_λ b_μ = b_{λ∪μ}`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.basis != other.basis {
            return Err(Error::MixedBasis);
        }
        let mut out = Self::zero(self.basis);
        for (l1, c1) in &self.terms {
            for (l2, c2) in &other.terms {
                out.add_term(l1.union(l2), &(c1 * c2));
            }
        }
        Ok(out)
    }

    /// The involution `ω`, exchanging `h_λ` and `e_λ`.
    pub fn omega(&self) -> Self {
        SymSeries {
            basis: self.basis.dual(),
            terms: self.terms.clone(),
        }
    }

    /// The symmetric function multiplying `t^j`.
    pub fn t_coefficient(&self, j: usize) -> Self {
        let mut out = Self::zero(self.basis);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), &Poly::constant(c.coeff(j)));
        }
        out
    }

    /// True when every coefficient polynomial has nonnegative coefficients.
    pub fn is_positive(&self) -> bool
    where
        T: PartialOrd,
    {
        self.terms
            .values()
            .all(|c| c.coeffs().iter().all(|x| *x >= T::zero()))
    }

    /// Replaces each `b_λ` by `|λ|!/∏λ_i!`, the graded dimension of the
    /// representation when the series is a Frobenius characteristic.
    pub fn dimension_specialization(&self) -> Poly<T> {
        self.terms.iter().fold(Poly::zero(), |acc, (l, c)| {
            &acc + &c.scale(&T::from_i64(l.young_index() as i64))
        })
    }

    /// Expansion in the variables `x_1, ..., x_N`.
    pub fn expand_monomials(&self, num_vars: usize) -> MonomialExpansion<T> {
        let mut out: MonomialExpansion<T> = BTreeMap::new();
        for (l, c) in &self.terms {
            for (exp, count) in expand_basis_element(self.basis, l, num_vars) {
                let entry = out.entry(exp).or_default();
                *entry += &c.scale(&count);
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

/// Exponent vectors of degree `r` in `num_vars` variables, squarefree ones
/// only when `squarefree`.
fn degree_monomials(r: usize, num_vars: usize, squarefree: bool) -> Vec<Vec<usize>> {
    fn go(rem: usize, pos: usize, cur: &mut Vec<usize>, sq: bool, out: &mut Vec<Vec<usize>>) {
        if pos + 1 == cur.len() {
            if !sq || rem <= 1 {
                cur[pos] = rem;
                out.push(cur.clone());
                cur[pos] = 0;
            }
            return;
        }
        let hi = if sq { rem.min(1) } else { rem };
        for x in 0..=hi {
            cur[pos] = x;
            go(rem - x, pos + 1, cur, sq, out);
        }
        cur[pos] = 0;
    }
    if num_vars == 0 {
        return if r == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    go(r, 0, &mut vec![0; num_vars], squarefree, &mut out);
    out
}

fn expand_basis_element<T: Coeff>(
    basis: Basis,
    lambda: &Partition,
    num_vars: usize,
) -> BTreeMap<Vec<usize>, T> {
    let mut acc: BTreeMap<Vec<usize>, T> = BTreeMap::new();
    acc.insert(vec![0; num_vars], T::one());
    for &r in lambda.parts() {
        let monos = degree_monomials(r, num_vars, basis == Basis::E);
        let mut next: BTreeMap<Vec<usize>, T> = BTreeMap::new();
        for (exp, c) in &acc {
            for m in &monos {
                let key: Vec<usize> = exp.iter().zip(m).map(|(a, b)| a + b).collect();
                let entry = next.entry(key).or_insert_with(T::zero);
                *entry = entry.clone() + c.clone();
            }
        }
        acc = next;
    }
    acc
}

impl<T: Coeff + fmt::Display> fmt::Display for SymSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let sym = match self.basis {
            Basis::H => 'h',
            Basis::E => 'e',
        };
        let mut first = true;
        for (l, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{sym}_{{{l}}}({c})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q_int;
    use crate::{SymSeries, TPoly};
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn products() {
        let prod = SymSeries::h(2).mul(&SymSeries::h(1)).unwrap();
        assert_eq!(prod, SymSeries::term(Basis::H, p(&[2, 1]), TPoly::one()));
        let a = SymSeries::term(Basis::H, p(&[1]), TPoly::from_i64s(&[0, 1]));
        let b = SymSeries::term(Basis::H, p(&[3]), q_int(2));
        assert_eq!(
            a.mul(&b).unwrap(),
            SymSeries::term(Basis::H, p(&[3, 1]), TPoly::from_i64s(&[0, 1, 1]))
        );
        assert_eq!(
            SymSeries::h(1).mul(&SymSeries::e(1)),
            Err(Error::MixedBasis)
        );
    }

    #[test]
    fn omega_swaps_bases() {
        assert_eq!(SymSeries::h(4).omega(), SymSeries::e(4));
        let s = SymSeries::term(Basis::H, p(&[2, 1]), q_int(3));
        assert_eq!(s.omega().omega(), s);
    }

    #[test]
    fn small_expansions() {
        let e2 = SymSeries::e(2).expand_monomials(2);
        assert_eq!(e2, BTreeMap::from([(vec![1, 1], TPoly::one())]));
        let h2 = SymSeries::h(2).expand_monomials(2);
        assert_eq!(
            h2,
            BTreeMap::from([
                (vec![0, 2], TPoly::one()),
                (vec![1, 1], TPoly::one()),
                (vec![2, 0], TPoly::one()),
            ])
        );
    }

    #[test]
    fn expansion_is_multiplicative() {
        let h21 = SymSeries::term(Basis::H, p(&[2, 1]), TPoly::one()).expand_monomials(3);
        let h2 = SymSeries::h(2).expand_monomials(3);
        let h1 = SymSeries::h(1).expand_monomials(3);
        let mut prod: MonomialExpansion<i64> = BTreeMap::new();
        for (a, ca) in &h2 {
            for (b, cb) in &h1 {
                let key: Vec<usize> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                *prod.entry(key).or_default() += &(ca * cb);
            }
        }
        assert_eq!(h21, prod);
    }

    #[test]
    fn expansion_separates_bases() {
        // h and e bases of degree 4 are each linearly independent, so
        // distinct basis elements must have distinct expansions.
        for basis in [Basis::H, Basis::E] {
            let exps: Vec<_> = Partition::all(4)
                .into_iter()
                .map(|l| SymSeries::term(basis, l, Poly::one()).expand_monomials(4))
                .collect();
            for i in 0..exps.len() {
                for j in i + 1..exps.len() {
                    assert_ne!(exps[i], exps[j]);
                }
            }
        }
    }

    #[test]
    fn dimensions() {
        let s = SymSeries::term(Basis::H, p(&[2, 1]), TPoly::from_i64s(&[0, 1]))
            .add(&SymSeries::term(Basis::H, p(&[3]), q_int(3)))
            .unwrap();
        assert_eq!(s.dimension_specialization(), TPoly::from_i64s(&[1, 4, 1]));
        assert_eq!(Partition::all(5).len(), 7);
    }

    #[test]
    fn json_dump() {
        let s = SymSeries::term(Basis::H, p(&[3, 1]), TPoly::from_i64s(&[0, 1, 1]));
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(
            j,
            r#"{"basis":"h","terms":[{"partition":[3,1],"coeff":[0,1,1]}]}"#
        );
        assert_eq!(serde_json::from_str::<SymSeries>(&j).unwrap(), s);
    }

    fn arb_series(basis: Basis) -> impl Strategy<Value = SymSeries> {
        prop::collection::vec(
            (
                prop::collection::vec(1usize..4, 1..3),
                prop::collection::vec(-3i64..4, 0..3),
            ),
            0..4,
        )
        .prop_map(move |terms| {
            let mut s = SymSeries::zero(basis);
            for (parts, coeffs) in terms {
                s.add_term(Partition::new(parts), &TPoly::new(coeffs));
            }
            s
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn mul_is_commutative_and_associative(
            a in arb_series(Basis::H),
            b in arb_series(Basis::H),
            c in arb_series(Basis::H),
        ) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(
                a.mul(&b).unwrap().mul(&c).unwrap(),
                a.mul(&b.mul(&c).unwrap()).unwrap()
            );
        }

        #[test]
        fn omega_commutes_with_mul(a in arb_series(Basis::E), b in arb_series(Basis::E)) {
            prop_assert_eq!(a.mul(&b).unwrap().omega(), a.omega().mul(&b.omega()).unwrap());
        }
    }
}
