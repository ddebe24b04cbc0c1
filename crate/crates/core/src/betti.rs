//! Euler characteristics, Betti numbers and Poincaré polynomials.
//!
//! Betti numbers of `X_k` are computed three independent ways: by counting
//! descents of partial permutations, by unfolding the blowup recursion, and
//! by counting Stembridge codes. Only even degrees are reported; odd Betti
//! numbers vanish.

use std::collections::HashMap;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::codes::enumerate_codes;
use crate::poly::q_factorial;
use crate::{binomial, check_k, falling_factorial, Result, TPoly};

/// Even Betti numbers `β_0, β_2, ..., β_{2(n-1)}` of `X_k` for `[n]`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BettiTable {
    pub n: usize,
    pub k: usize,
    pub betti: Vec<u64>,
}

impl BettiTable {
    pub fn total(&self) -> u64 {
        self.betti.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.betti.iter().eq(self.betti.iter().rev())
    }

    pub fn poincare(&self) -> TPoly {
        TPoly::new(self.betti.iter().map(|&b| b as i64).collect())
    }
}

/// How a Betti table was computed.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Descents,
    Recursion,
    Codes,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Descents, Method::Recursion, Method::Codes];

    pub fn compute(self, n: usize, k: usize) -> Result<BettiTable> {
        match self {
            Method::Descents => betti_via_descents(n, k),
            Method::Recursion => betti_via_recursion(n, k),
            Method::Codes => betti_via_codes(n, k),
        }
    }
}

/// `χ(X_k) = n! / (n-k-1)!`.
pub fn euler_characteristic(n: usize, k: usize) -> Result<u64> {
    check_k(n, k, 0, 2)?;
    Ok(falling_factorial(n, k + 1))
}

/// Descents of the partial permutation `a_1, ..., a_{k+1}` of `[n]`: pairs
/// `a_j > a_{j+1}` plus the elements outside the list that exceed `a_1`.
pub fn partial_permutation_descents(n: usize, list: &[usize]) -> usize {
    let first = list[0];
    let outside = (1..=n).filter(|a| *a > first && !list.contains(a)).count();
    outside + list.windows(2).filter(|w| w[0] > w[1]).count()
}

pub fn betti_via_descents(n: usize, k: usize) -> Result<BettiTable> {
    check_k(n, k, 0, 2)?;
    let mut betti = vec![0; n];
    for list in (1..=n).permutations(k + 1) {
        betti[partial_permutation_descents(n, &list)] += 1;
    }
    Ok(BettiTable { n, k, betti })
}

/// Betti numbers of the full permutohedral variety of dimension `d`;
/// dimension 0 is a point.
fn permutohedral_betti(d: usize, memo: &mut HashMap<usize, Vec<u64>>) -> Vec<u64> {
    if d == 0 {
        return vec![1];
    }
    if let Some(b) = memo.get(&d) {
        return b.clone();
    }
    let b = recursion_rows(d + 1, d - 1, memo);
    memo.insert(d, b.clone());
    b
}

fn recursion_rows(n: usize, k: usize, memo: &mut HashMap<usize, Vec<u64>>) -> Vec<u64> {
    let mut betti = vec![1; n];
    for j in 1..=k {
        let centre = permutohedral_betti(j - 1, memo);
        let copies = binomial(n, j);
        for shift in 1..n - j {
            for (deg, &b) in centre.iter().enumerate() {
                betti[deg + shift] += copies * b;
            }
        }
    }
    betti
}

/// Graded ranks from `P^{n-1}` plus, for each `|α| = j ≤ k`, copies of the
/// `(j-1)`-dimensional permutohedral variety shifted by `1..=n-j-1`.
pub fn betti_via_recursion(n: usize, k: usize) -> Result<BettiTable> {
    check_k(n, k, 0, 2)?;
    let betti = recursion_rows(n, k, &mut HashMap::new());
    Ok(BettiTable { n, k, betti })
}

/// `β_{2i}` counts codes of length `n` with `μ ≥ n-k` and index `i`.
pub fn betti_via_codes(n: usize, k: usize) -> Result<BettiTable> {
    check_k(n, k, 0, 2)?;
    let mut betti = vec![0; n];
    for c in enumerate_codes(n, n - k) {
        betti[c.ind()] += 1;
    }
    Ok(BettiTable { n, k, betti })
}

/// `Σ β_{2i} t^i`.
pub fn poincare_poly(n: usize, k: usize) -> Result<TPoly> {
    Ok(betti_via_recursion(n, k)?.poincare())
}

/// Poincaré polynomial of the Hessenberg variety for `h_k`:
/// `[n-k-1]_t! · P_{X_k}(t)`.
pub fn hess_poincare(n: usize, k: usize) -> Result<TPoly> {
    check_k(n, k, 1, 3)?;
    Ok(&q_factorial(n - k - 1) * &poincare_poly(n, k)?)
}
