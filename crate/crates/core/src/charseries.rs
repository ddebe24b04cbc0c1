//! Characteristic series of the dot action and chromatic quasisymmetric
//! functions of the incomparability graphs involved.
//!
//! `A_{n-1,k}(t)` is the graded Frobenius characteristic of the symmetric
//! group action on `H^*(X_k)`. It is computed from the blowup recursion and,
//! independently, from orbits of Stembridge codes. The chromatic side is
//! computed symbolically and, for small graphs, by enumerating colorings.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::codes::orbits;
use crate::poly::{q_factorial, q_int};
use crate::symfunc::{Basis, Partition};
use crate::{check_k, Error, MonomialExpansion, Result, SymSeries, TPoly};

/// Largest vertex count accepted by [`csf_bruteforce`].
pub const MAX_COLORING_N: usize = 7;

/// A simple graph on vertices `1..=n`; edges stored as `(i, j)` with `i < j`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Graph {
    pub n: usize,
    pub edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let edges = edges
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .inspect(|&(a, b)| assert!(a != b && a >= 1 && b <= n, "bad edge ({a}, {b})"))
            .collect();
        Graph { n, edges }
    }

    /// Incomparability graph of a Hessenberg function: `{i, j}` for
    /// `i < j ≤ h(i)`.
    pub fn from_hessenberg(h: &[usize]) -> Self {
        let n = h.len();
        let edges = (1..=n).flat_map(|i| (i + 1..=h[i - 1].min(n)).map(move |j| (i, j)));
        Graph::new(n, edges)
    }
}

/// `h_k = (2, 3, ..., k+1, n, ..., n)`.
pub fn hessenberg_h_k(n: usize, k: usize) -> Vec<usize> {
    (1..=n).map(|j| if j <= k { j + 1 } else { n }).collect()
}

/// The lollipop `L_{n-k,k}`: a path on `1..=k+1` glued to the complete graph
/// on `k+1..=n`. `k = 0` gives `K_n`.
pub fn lollipop_graph(n: usize, k: usize) -> Result<Graph> {
    if k != 0 {
        check_k(n, k, 1, 3)?;
    }
    Ok(Graph::from_hessenberg(&hessenberg_h_k(n, k)))
}

pub fn path_graph(m: usize) -> Graph {
    Graph::new(m, (1..m).map(|i| (i, i + 1)))
}

pub fn complete_graph(n: usize) -> Graph {
    Graph::new(n, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))))
}

/// Chromatic quasisymmetric function by enumerating proper colorings
/// `κ: [n] → [n]`, each weighted by `t^{asc(κ)}` where `asc` counts edges
/// `i < j` with `κ(i) < κ(j)`. Without `t_graded` every weight is 1.
pub fn csf_bruteforce(g: &Graph, t_graded: bool) -> Result<MonomialExpansion> {
    let n = g.n;
    if n > MAX_COLORING_N {
        return Err(Error::SizeOutOfRange {
            n,
            reason: "coloring enumeration is limited to 7 vertices",
        });
    }
    // Neighbours with a smaller label, per vertex (0-based).
    let earlier: Vec<Vec<usize>> = (1..=n)
        .map(|j| {
            g.edges
                .iter()
                .filter(|&&(_, b)| b == j)
                .map(|&(a, _)| a - 1)
                .collect()
        })
        .collect();
    let mut counts: HashMap<Vec<usize>, Vec<i64>> = HashMap::new();
    let mut coloring = vec![0usize; n];
    color(0, 0, &earlier, &mut coloring, t_graded, &mut counts);
    Ok(counts
        .into_iter()
        .map(|(exp, c)| (exp, TPoly::new(c)))
        .collect())
}

fn color(
    v: usize,
    asc: usize,
    earlier: &[Vec<usize>],
    coloring: &mut Vec<usize>,
    t_graded: bool,
    counts: &mut HashMap<Vec<usize>, Vec<i64>>,
) {
    let n = coloring.len();
    if v == n {
        let mut exp = vec![0; n];
        for &c in coloring.iter() {
            exp[c] += 1;
        }
        let deg = if t_graded { asc } else { 0 };
        let entry = counts.entry(exp).or_default();
        if entry.len() <= deg {
            entry.resize(deg + 1, 0);
        }
        entry[deg] += 1;
        return;
    }
    'colors: for c in 0..n {
        let mut extra = 0;
        for &u in &earlier[v] {
            match coloring[u].cmp(&c) {
                std::cmp::Ordering::Equal => continue 'colors,
                std::cmp::Ordering::Less => extra += 1,
                std::cmp::Ordering::Greater => {}
            }
        }
        coloring[v] = c;
        color(v + 1, asc + extra, earlier, coloring, t_graded, counts);
    }
}

/// `A_i(t)` of the full permutohedral variety of dimension `i`; `A_0 = h_1`.
fn full_series(i: usize, memo: &mut HashMap<usize, SymSeries>) -> SymSeries {
    if i == 0 {
        return SymSeries::h(1);
    }
    if let Some(s) = memo.get(&i) {
        return s.clone();
    }
    let s = series_rec(i + 1, i - 1, memo);
    memo.insert(i, s.clone());
    s
}

fn series_rec(n: usize, k: usize, memo: &mut HashMap<usize, SymSeries>) -> SymSeries {
    let mut out = SymSeries::h(n).scale(&q_int(n));
    for i in 0..k {
        let term = SymSeries::h(n - 1 - i)
            .mul(&full_series(i, memo))
            .expect("h-basis product")
            .scale(&q_int(n - i - 2).shift(1));
        out = out.add(&term).expect("h-basis sum");
    }
    out
}

/// `A_{n-1,k}(t) = h_n [n]_t + Σ_{i<k} h_{n-1-i} A_i(t) t [n-i-2]_t`.
/// For `n = 1` only `k = 0` is allowed and the result is `h_1`.
pub fn series_a(n: usize, k: usize) -> Result<SymSeries> {
    if n == 1 && k == 0 {
        return Ok(SymSeries::h(1));
    }
    check_k(n, k, 0, 2)?;
    Ok(series_rec(n, k, &mut HashMap::new()))
}

/// `Σ_{orbits} t^{ind} h_{λ}` over orbits of codes with `μ ≥ n-k`, where
/// `λ` is the Young type of the stabilizer.
pub fn ch_from_codes(n: usize, k: usize) -> Result<SymSeries> {
    if n != 1 || k != 0 {
        check_k(n, k, 0, 2)?;
    }
    let mut out = SymSeries::zero(Basis::H);
    for o in orbits(n, n - k) {
        out.add_term(
            Partition::new(o.stabilizer_type),
            &TPoly::monomial(1, o.representative.ind()),
        );
    }
    Ok(out)
}

/// `X_{P_m}` in the `e` basis, as `ω A_{m-1}`; `X_{P_1} = e_1`.
pub fn csf_path(m: usize) -> Result<SymSeries> {
    match m {
        0 => Err(Error::SizeOutOfRange {
            n: 0,
            reason: "empty path",
        }),
        1 => Ok(SymSeries::e(1)),
        _ => Ok(series_a(m, m - 2)?.omega()),
    }
}

/// `X_{K_n} = [n]_t! e_n`.
pub fn csf_complete(n: usize) -> SymSeries {
    SymSeries::e(n).scale(&q_factorial(n))
}

/// `X_{L_{n-k,k}} = [n-k-1]_t! ([n]_t e_n + Σ_{i<k} t [n-k+i-1]_t X_{P_{k-i}} e_{n-k+i})`.
pub fn csf_lollipop(n: usize, k: usize) -> Result<SymSeries> {
    check_k(n, k, 1, 3)?;
    let mut inner = SymSeries::e(n).scale(&q_int(n));
    for i in 0..k {
        let term = csf_path(k - i)?
            .mul(&SymSeries::e(n - k + i))?
            .scale(&q_int(n - k + i - 1).shift(1));
        inner = inner.add(&term)?;
    }
    Ok(inner.scale(&q_factorial(n - k - 1)))
}

/// The same series summed with `i' = k-1-i`:
/// `[n-k-1]_t! ([n]_t e_n + Σ_{i'<k} t [n-i'-2]_t X_{P_{i'+1}} e_{n-1-i'})`.
pub fn csf_lollipop_reindexed(n: usize, k: usize) -> Result<SymSeries> {
    check_k(n, k, 1, 3)?;
    let mut inner = SymSeries::e(n).scale(&q_int(n));
    for ip in 0..k {
        let term = csf_path(ip + 1)?
            .mul(&SymSeries::e(n - 1 - ip))?
            .scale(&q_int(n - ip - 2).shift(1));
        inner = inner.add(&term)?;
    }
    Ok(inner.scale(&q_factorial(n - k - 1)))
}

/// `ω X_{L_{n-k,k}} = [n-k-1]_t! A_{n-1,k}(t)`, checked exactly.
pub fn verify_identity(n: usize, k: usize) -> Result<bool> {
    let lhs = csf_lollipop(n, k)?.omega();
    let rhs = hess_char_series(n, k)?;
    Ok(lhs == rhs)
}

/// Graded Frobenius characteristic of the dot action on the Hessenberg
/// variety for `h_k`: `[n-k-1]_t! A_{n-1,k}(t)`.
pub fn hess_char_series(n: usize, k: usize) -> Result<SymSeries> {
    check_k(n, k, 1, 3)?;
    Ok(series_a(n, k)?.scale(&q_factorial(n - k - 1)))
}
