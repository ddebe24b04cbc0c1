//! Krylov flags `⟨v⟩ ⊂ ⟨v, Sv⟩ ⊂ ...` for a diagonal operator `S` with
//! distinct eigenvalues, checked with exact rational arithmetic.
//!
//! The rank of `v, Sv, ..., S^{m-1}v` is `min(m, |supp v|)`: the Krylov space
//! of `v` is spanned by the eigenvectors in its support, and the
//! Vandermonde structure makes any `|supp v|` consecutive powers independent.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::linalg::{rank_of, Matrix};
use crate::rng::trial_rng;
use crate::scalar::ExactField;
use crate::{Error, Rational, Result};

/// `S = diag(s_1, ..., s_n)` with pairwise distinct entries.
#[derive(Clone, PartialEq, Debug)]
pub struct DiagonalOperator<T = Rational> {
    entries: Vec<T>,
}

impl<T: ExactField> DiagonalOperator<T> {
    pub fn new(entries: Vec<T>) -> Result<Self> {
        for i in 0..entries.len() {
            if entries[i + 1..].contains(&entries[i]) {
                return Err(Error::RepeatedEigenvalue);
            }
        }
        Ok(DiagonalOperator { entries })
    }

    /// `diag(1, 2, ..., n)`.
    pub fn standard(n: usize) -> Self {
        DiagonalOperator {
            entries: (1..=n as i64).map(T::from_i64).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        self.entries
            .iter()
            .zip(v)
            .map(|(s, x)| s.clone() * x.clone())
            .collect()
    }
}

/// A flag `V_1 ⊂ V_2 ⊂ ...` with `V_i` spanned by the first `i` basis vectors.
#[derive(Clone, PartialEq, Debug)]
pub struct FlagSpec<T = Rational> {
    n: usize,
    basis: Vec<Vec<T>>,
}

impl<T: ExactField> FlagSpec<T> {
    /// Requires the basis vectors to be linearly independent.
    pub fn new(n: usize, basis: Vec<Vec<T>>) -> Result<Self> {
        if let Some(v) = basis.iter().find(|v| v.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: v.len(),
            });
        }
        let rank = rank_of(&basis);
        if rank != basis.len() {
            return Err(Error::RankDeficient {
                rank,
                depth: basis.len(),
            });
        }
        Ok(FlagSpec { n, basis })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<T>] {
        &self.basis
    }

    /// Spanning vectors of `V_i`; `V_n` is the whole space.
    fn subspace(&self, i: usize) -> Result<Vec<Vec<T>>> {
        if i >= self.n {
            return Ok((0..self.n).map(|j| unit(self.n, j)).collect());
        }
        if i > self.basis.len() {
            return Err(Error::FlagTooShort {
                len: self.basis.len(),
                needed: i,
            });
        }
        Ok(self.basis[..i].to_vec())
    }
}

fn unit<T: ExactField>(n: usize, j: usize) -> Vec<T> {
    (0..n)
        .map(|i| if i == j { T::one() } else { T::zero() })
        .collect()
}

/// `v, Sv, ..., S^{m-1}v`.
pub fn krylov_vectors<T: ExactField>(s: &DiagonalOperator<T>, v: &[T], m: usize) -> Vec<Vec<T>> {
    let mut out = Vec::with_capacity(m);
    let mut cur = v.to_vec();
    for _ in 0..m {
        let next = s.apply(&cur);
        out.push(std::mem::replace(&mut cur, next));
    }
    out
}

/// Rank of the `n × m` matrix `[v, Sv, ..., S^{m-1}v]`.
pub fn krylov_rank<T: ExactField>(s: &DiagonalOperator<T>, v: &[T], m: usize) -> usize {
    rank_of(&krylov_vectors(s, v, m))
}

/// The partial flag spanned by `v, Sv, ..., S^{depth-1}v`. Fails when those
/// vectors are dependent, i.e. when `v` has fewer than `depth` nonzero
/// coordinates.
pub fn build_krylov_flag<T: ExactField>(
    s: &DiagonalOperator<T>,
    v: &[T],
    depth: usize,
) -> Result<FlagSpec<T>> {
    if v.len() != s.n() {
        return Err(Error::DimensionMismatch {
            expected: s.n(),
            got: v.len(),
        });
    }
    FlagSpec::new(s.n(), krylov_vectors(s, v, depth))
}

/// Validates a Hessenberg function: `i ≤ h(i) ≤ n`, non-decreasing.
pub fn validate_hessenberg(h: &[usize]) -> Result<()> {
    let n = h.len();
    for (i, &hi) in h.iter().enumerate() {
        if hi < i + 1 || hi > n {
            return Err(Error::InvalidHessenberg(format!(
                "h({}) = {hi} outside [{}, {n}]",
                i + 1,
                i + 1
            )));
        }
        if i > 0 && hi < h[i - 1] {
            return Err(Error::InvalidHessenberg(format!("decreases at {}", i + 1)));
        }
    }
    Ok(())
}

/// `h_+ = (2, 3, ..., n, n)`.
pub fn h_plus(n: usize) -> Vec<usize> {
    (1..=n).map(|i| (i + 1).min(n)).collect()
}

/// `S(V_i) ⊂ V_{h(i)}` for every `i` up to the flag length.
pub fn check_hessenberg<T: ExactField>(
    flag: &FlagSpec<T>,
    s: &DiagonalOperator<T>,
    h: &[usize],
) -> Result<bool> {
    validate_hessenberg(h)?;
    if h.len() != flag.n || s.n() != flag.n {
        return Err(Error::DimensionMismatch {
            expected: flag.n,
            got: h.len(),
        });
    }
    for i in 1..=flag.len() {
        let target = flag.subspace(h[i - 1])?;
        let base_rank = rank_of(&target);
        let mut extended = target;
        extended.extend(flag.basis[..i].iter().map(|b| s.apply(b)));
        if rank_of(&extended) != base_rank {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `dim ⟨V_k ∪ S V_k⟩` for the Krylov space `V_k` of `v`.
pub fn forgetful_dim<T: ExactField>(s: &DiagonalOperator<T>, v: &[T], k: usize) -> usize {
    let vk = krylov_vectors(s, v, k);
    let mut both = vk.clone();
    both.extend(vk.iter().map(|b| s.apply(b)));
    Matrix::from_rows(&both).rank()
}

/// A random rational vector with nonzero entries exactly on `support`.
pub fn random_vector_with_support<R: Rng>(
    rng: &mut R,
    n: usize,
    support: &[usize],
) -> Vec<Rational> {
    (0..n)
        .map(|i| {
            if support.contains(&i) {
                let mut num = 0i64;
                while num == 0 {
                    num = rng.gen_range(-1000..=1000);
                }
                Rational::new(num.into(), rng.gen_range(1..=1000i64).into())
            } else {
                Rational::from_integer(0.into())
            }
        })
        .collect()
}

/// A uniformly random subset of `0..n` of the given size.
pub fn random_support<R: Rng>(rng: &mut R, n: usize, size: usize) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..n).collect();
    for i in 0..size {
        let j = rng.gen_range(i..n);
        idx.swap(i, j);
    }
    let mut s = idx[..size].to_vec();
    s.sort_unstable();
    s
}

/// Summary of a batch of seeded flag checks.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FlagsReport {
    pub n: usize,
    pub seed: u64,
    pub trials: usize,
    pub violations: usize,
}

/// Rank claim: for `trials` random `v` with support of the given size,
/// `krylov_rank(S, v, j) = min(j, support)` for every `1 ≤ j ≤ n`.
pub fn krylov_rank_trials(n: usize, support: usize, trials: usize, seed: u64) -> FlagsReport {
    let s = DiagonalOperator::<Rational>::standard(n);
    let mut violations = 0;
    for trial in 0..trials {
        let mut rng = trial_rng(
            seed.wrapping_add((n as u64) << 32 | support as u64),
            trial as u64,
        );
        let supp = random_support(&mut rng, n, support);
        let v = random_vector_with_support(&mut rng, n, &supp);
        let vecs = krylov_vectors(&s, &v, n);
        for depth in 1..=n {
            if rank_of(&vecs[..depth]) != depth.min(support) {
                violations += 1;
            }
        }
    }
    FlagsReport {
        n,
        seed,
        trials,
        violations,
    }
}

/// Forgetful-map claim: with `V_k` the Krylov space of a random `v` with
/// support at least `k`, `dim ⟨V_k ∪ S V_k⟩` is `k` exactly when the support
/// has size `k`, and `k + 1` otherwise.
pub fn forgetful_dim_check(n: usize, k: usize, trials: usize, seed: u64) -> FlagsReport {
    let s = DiagonalOperator::<Rational>::standard(n);
    let mut violations = 0;
    for trial in 0..trials {
        let mut rng = trial_rng(
            seed.wrapping_add(0x5151 << 32 | (n as u64) << 16 | k as u64),
            trial as u64,
        );
        let size = rng.gen_range(k..=n);
        let supp = random_support(&mut rng, n, size);
        let v = random_vector_with_support(&mut rng, n, &supp);
        let d = forgetful_dim(&s, &v, k);
        let expected = if size == k { k } else { k + 1 };
        if d != expected {
            violations += 1;
        }
    }
    FlagsReport {
        n,
        seed,
        trials,
        violations,
    }
}

/// Full check behind `flags verify`: the rank claim for every support size,
/// the forgetful-map claim for every `1 ≤ k < n`, and the `h_+` condition on
/// Krylov flags of full-support vectors.
pub fn verify_flags(n: usize, trials: usize, seed: u64) -> FlagsReport {
    let mut total = 0;
    let mut violations = 0;
    for support in 0..=n {
        let r = krylov_rank_trials(n, support, trials, seed);
        total += r.trials;
        violations += r.violations;
    }
    for k in 1..n {
        let r = forgetful_dim_check(n, k, trials, seed);
        total += r.trials;
        violations += r.violations;
    }
    let s = DiagonalOperator::<Rational>::standard(n);
    let hp = h_plus(n);
    for trial in 0..trials {
        let mut rng = trial_rng(seed.wrapping_add(0xf1a9 << 32 | n as u64), trial as u64);
        let all: Vec<usize> = (0..n).collect();
        let v = random_vector_with_support(&mut rng, n, &all);
        let ok = build_krylov_flag(&s, &v, n.saturating_sub(1))
            .and_then(|flag| check_hessenberg(&flag, &s, &hp))
            .unwrap_or(false);
        total += 1;
        if !ok {
            violations += 1;
        }
    }
    FlagsReport {
        n,
        seed,
        trials: total,
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x: i64) -> Rational {
        Rational::from_integer(x.into())
    }

    fn vecq(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn rank_follows_support() {
        let s = DiagonalOperator::standard(5);
        let v = vecq(&[3, 0, -2, 0, 7]);
        assert_eq!(krylov_rank(&s, &v, 3), 3);
        assert_eq!(krylov_rank(&s, &v, 4), 3);
        assert_eq!(krylov_rank(&s, &vecq(&[0; 5]), 4), 0);
    }

    #[test]
    fn krylov_flags() {
        let s = DiagonalOperator::standard(3);
        let flag = build_krylov_flag(&s, &vecq(&[1, 1, 1]), 2).unwrap();
        assert_eq!(flag.basis(), &[vecq(&[1, 1, 1]), vecq(&[1, 2, 3])]);

        let e1 = build_krylov_flag(&s, &vecq(&[1, 0, 0]), 1).unwrap();
        assert!(check_hessenberg(&e1, &s, &[1, 3, 3]).unwrap());
        assert!(matches!(
            build_krylov_flag(&s, &vecq(&[1, 0, 0]), 2),
            Err(Error::RankDeficient { rank: 1, depth: 2 })
        ));
        let full = build_krylov_flag(&s, &vecq(&[2, -1, 5]), 3).unwrap();
        assert_eq!(full.len(), 3);
    }

    #[test]
    fn hessenberg_checks() {
        let s = DiagonalOperator::standard(3);
        let eig = FlagSpec::new(3, vec![vecq(&[1, 0, 0]), vecq(&[0, 1, 0])]).unwrap();
        assert!(check_hessenberg(&eig, &s, &h_plus(3)).unwrap());

        let bad = FlagSpec::new(3, vec![vecq(&[1, 1, 0]), vecq(&[0, 0, 1])]).unwrap();
        assert!(!check_hessenberg(&bad, &s, &[2, 3, 3]).unwrap());

        let krylov = build_krylov_flag(&s, &vecq(&[1, 4, -2]), 2).unwrap();
        assert!(check_hessenberg(&krylov, &s, &h_plus(3)).unwrap());

        assert!(check_hessenberg(&krylov, &s, &[2, 1, 3]).is_err());
        assert!(check_hessenberg(&krylov, &s, &[0, 3, 3]).is_err());
        let short = FlagSpec::new(4, vec![vecq(&[1, 1, 1, 1])]).unwrap();
        let s4 = DiagonalOperator::standard(4);
        assert!(matches!(
            check_hessenberg(&short, &s4, &[2, 3, 4, 4]),
            Err(Error::FlagTooShort { .. })
        ));
    }

    #[test]
    fn operator_validation() {
        assert!(DiagonalOperator::new(vecq(&[1, 2, 1])).is_err());
        assert!(DiagonalOperator::new(vec![Rational::new(1.into(), 2.into()), q(3)]).is_ok());
    }

    #[test]
    fn forgetful_examples() {
        let s = DiagonalOperator::standard(6);
        let full = vecq(&[1, 2, 3, -1, 5, 9]);
        for k in 1..6 {
            assert_eq!(forgetful_dim(&s, &full, k), k + 1);
        }
        let sparse = vecq(&[0, 2, 0, -1, 5, 0]);
        assert_eq!(forgetful_dim(&s, &sparse, 3), 3);
        let r = forgetful_dim_check(8, 3, 200, 1);
        assert_eq!(r.violations, 0);
    }

    #[test]
    fn torus_products_stay_regular() {
        let n = 5;
        let s = DiagonalOperator::standard(n);
        for trial in 0..100 {
            let mut rng = trial_rng(1, trial);
            let all: Vec<usize> = (1..n).collect();
            let mut z = random_vector_with_support(&mut rng, n, &all);
            let mut w = random_vector_with_support(&mut rng, n, &all);
            z[0] = q(1);
            w[0] = q(1);
            let prod: Vec<Rational> = z.iter().zip(&w).map(|(a, b)| a * b).collect();
            assert_eq!(krylov_rank(&s, &prod, n), n);
            assert!(build_krylov_flag(&s, &prod, n - 1).is_ok());
        }
    }

    #[test]
    fn generic_over_field() {
        use num_rational::Rational64;
        let s = DiagonalOperator::<Rational64>::standard(4);
        let v: Vec<Rational64> = [1, 0, 3, 1]
            .iter()
            .map(|&x| Rational64::from_integer(x))
            .collect();
        assert_eq!(krylov_rank(&s, &v, 4), 3);
    }
}
