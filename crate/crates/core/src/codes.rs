//! Stembridge codes: admissible marked sequences indexing a basis of the
//! cohomology of the permutohedral variety.
//!
//! A marked sequence `(a, f)` carries a mark `f(j)` with `1 ≤ f(j) < m_j(a)`
//! for every positive value `j` occurring in `a`; it is written with a hat on
//! the `(f(j) + 1)`-st occurrence of `j`. A code is a marked sequence whose
//! positive values are exactly `{1, ..., max(a)}`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::chains::Subset;
use crate::{factorial, Error, Result};

const HAT: char = '\u{0302}';

/// True when the positive values of `a` are `{1, ..., max(a)}` or absent.
pub fn is_admissible(a: &[usize]) -> bool {
    let max = a.iter().copied().max().unwrap_or(0);
    (1..=max).all(|v| a.contains(&v))
}

/// An admissible marked sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(into = "CodeRepr", try_from = "CodeRepr")]
pub struct Code {
    a: Vec<usize>,
    /// `marks[j - 1] = f(j)`.
    marks: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct CodeRepr {
    a: Vec<usize>,
    f: BTreeMap<usize, usize>,
}

impl From<Code> for CodeRepr {
    fn from(c: Code) -> Self {
        CodeRepr {
            f: c.marks
                .iter()
                .enumerate()
                .map(|(j, &m)| (j + 1, m))
                .collect(),
            a: c.a,
        }
    }
}

impl TryFrom<CodeRepr> for Code {
    type Error = Error;

    fn try_from(r: CodeRepr) -> Result<Self> {
        let max = r.a.iter().copied().max().unwrap_or(0);
        if r.f.keys().copied().ne(1..=max) {
            return Err(Error::InvalidCode(
                "marks must be given for exactly 1..=max".into(),
            ));
        }
        Code::new(r.a, r.f.into_values().collect())
    }
}

impl Code {
    /// `marks[j - 1]` is `f(j)`.
    pub fn new(a: Vec<usize>, marks: Vec<usize>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::InvalidCode("empty sequence".into()));
        }
        if !is_admissible(&a) {
            return Err(Error::InvalidCode(format!("{a:?} is not admissible")));
        }
        let max = a.iter().copied().max().unwrap_or(0);
        if marks.len() != max {
            return Err(Error::InvalidCode(format!(
                "expected {max} marks, got {}",
                marks.len()
            )));
        }
        for (j, &m) in (1..=max).zip(&marks) {
            let mult = a.iter().filter(|&&x| x == j).count();
            if m == 0 || m >= mult {
                return Err(Error::InvalidCode(format!(
                    "mark f({j}) = {m} outside 1..{mult}"
                )));
            }
        }
        Ok(Code { a, marks })
    }

    pub fn zeros(n: usize) -> Self {
        Code {
            a: vec![0; n],
            marks: Vec::new(),
        }
    }

    /// Parses hat notation such as `1 2 1^ 0 1 2^` or `1201ˆ2ˆ12`. A hat is
    /// `^` or a combining circumflex after the value; separators are
    /// optional when every value is a single digit.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidCode(format!("{text:?}: {msg}"));
        let mut entries: Vec<(usize, bool)> = Vec::new();
        let tokens: Vec<String> = if text.split_whitespace().count() > 1 {
            text.split_whitespace().map(str::to_owned).collect()
        } else {
            let mut toks: Vec<String> = Vec::new();
            for ch in text.trim().chars() {
                if ch == '^' || ch == HAT {
                    toks.last_mut()
                        .ok_or_else(|| bad("hat before any value"))?
                        .push('^');
                } else {
                    toks.push(ch.to_string());
                }
            }
            toks
        };
        for tok in tokens {
            let tok = tok.replace(HAT, "^");
            let hat = tok.ends_with('^');
            let digits = tok.trim_end_matches('^');
            let v: usize = digits
                .parse()
                .map_err(|_| bad(&format!("bad entry {tok:?}")))?;
            entries.push((v, hat));
        }
        let a: Vec<usize> = entries.iter().map(|&(v, _)| v).collect();
        let max = a.iter().copied().max().unwrap_or(0);
        let mut marks = vec![0; max];
        let mut seen = vec![0; max + 1];
        for &(v, hat) in &entries {
            seen[v] += 1;
            if hat {
                if v == 0 || marks[v - 1] != 0 {
                    return Err(bad("misplaced hat"));
                }
                marks[v - 1] = seen[v] - 1;
            }
        }
        Code::new(a, marks)
    }

    pub fn seq(&self) -> &[usize] {
        &self.a
    }

    /// `f(j)` for `j` in `1..=max`.
    pub fn marks(&self) -> &[usize] {
        &self.marks
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn max_value(&self) -> usize {
        self.marks.len()
    }

    /// Number of occurrences of `v`.
    pub fn multiplicity(&self, v: usize) -> usize {
        self.a.iter().filter(|&&x| x == v).count()
    }

    /// Multiplicity of the maximum; `n` for the all-zero code.
    pub fn mu(&self) -> usize {
        self.multiplicity(self.max_value())
    }

    /// `Σ f(j)`, the cohomological degree halved.
    pub fn ind(&self) -> usize {
        self.marks.iter().sum()
    }

    /// Sizes of the value classes, sorted descending.
    pub fn stabilizer_type(&self) -> Vec<usize> {
        let mut parts: Vec<usize> = (0..=self.max_value())
            .map(|v| self.multiplicity(v))
            .filter(|&m| m > 0)
            .collect();
        parts.sort_unstable_by(|x, y| y.cmp(x));
        parts
    }

    /// Orbit representative: the sorted sequence with the same marks.
    pub fn canonical(&self) -> Code {
        let mut a = self.a.clone();
        a.sort_unstable();
        Code {
            a,
            marks: self.marks.clone(),
        }
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![0; self.max_value() + 1];
        for (i, &v) in self.a.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            seen[v] += 1;
            if v > 0 && seen[v] == self.marks[v - 1] + 1 {
                write!(f, "{HAT}")?;
            }
        }
        Ok(())
    }
}

/// Every code of length `n` with `μ ≥ min_mu`, ordered by sequence then
/// marks.
pub fn enumerate_codes(n: usize, min_mu: usize) -> Vec<Code> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut seq = vec![0; n];
    sequences(&mut seq, 0, n / 2, &mut |a: &[usize]| {
        if !is_admissible(a) {
            return;
        }
        let max = a.iter().copied().max().unwrap_or(0);
        let mults: Vec<usize> = (0..=max)
            .map(|v| a.iter().filter(|&&x| x == v).count())
            .collect();
        let mu = mults[max];
        if mu < min_mu || mults[1..].iter().any(|&m| m < 2) {
            return;
        }
        let mut marks = vec![1; max];
        loop {
            out.push(Code {
                a: a.to_vec(),
                marks: marks.clone(),
            });
            // Odometer over 1 <= f(j) < m_j, last mark fastest.
            let mut pos = max;
            loop {
                if pos == 0 {
                    return;
                }
                pos -= 1;
                if marks[pos] + 1 < mults[pos + 1] {
                    marks[pos] += 1;
                    break;
                }
                marks[pos] = 1;
            }
        }
    });
    out
}

fn sequences(seq: &mut Vec<usize>, pos: usize, max_val: usize, visit: &mut impl FnMut(&[usize])) {
    if pos == seq.len() {
        visit(seq);
        return;
    }
    for v in 0..=max_val {
        seq[pos] = v;
        sequences(seq, pos + 1, max_val, visit);
    }
}

/// `a′`: delete every occurrence of the maximum, keep the other marks.
/// `None` when nothing remains (the all-zero and all-one codes).
pub fn reduce(c: &Code) -> Option<Code> {
    let max = c.max_value();
    let a: Vec<usize> = c.a.iter().copied().filter(|&x| x != max).collect();
    if a.is_empty() {
        return None;
    }
    let marks = c.marks[..max.saturating_sub(1)].to_vec();
    Some(Code { a, marks })
}

/// The blowup component a code indexes.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum Component {
    /// `H^{2·ind}` of the base projective space `P^{n-1}`.
    Base { n: usize, ind: usize },
    /// The copy of `H^*_{-2·shift}` of the blown-up centre indexed by
    /// `alpha` (positions below the maximum), `j = |alpha| = n - μ`.
    Blowup {
        n: usize,
        j: usize,
        alpha: Subset,
        shift: usize,
        inner: Box<Component>,
    },
}

impl Component {
    /// Total cohomological degree.
    pub fn degree(&self) -> usize {
        match self {
            Component::Base { ind, .. } => 2 * ind,
            Component::Blowup { shift, inner, .. } => 2 * shift + inner.degree(),
        }
    }
}

/// Decodes a code into its blowup component, recursing on `a′`.
pub fn decode(c: &Code) -> Component {
    let n = c.len();
    let mu = c.mu();
    if mu == n {
        return Component::Base { n, ind: c.ind() };
    }
    let max = c.max_value();
    let alpha: Subset =
        c.a.iter()
            .enumerate()
            .filter(|(_, &v)| v < max)
            .map(|(i, _)| i + 1)
            .collect();
    let inner = reduce(c).expect("μ < n leaves a nonempty remainder");
    Component::Blowup {
        n,
        j: n - mu,
        alpha,
        shift: c.marks[max - 1],
        inner: Box::new(decode(&inner)),
    }
}

/// A permutation of `[n]`, stored 0-based: `images[i] = w(i + 1) - 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// From one-line notation `w(1) w(2) ... w(n)` (1-based).
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &x in one_line {
            if x == 0 || x > n || std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::InvalidPermutation(format!("{one_line:?}")));
            }
        }
        Ok(Permutation {
            images: one_line.iter().map(|x| x - 1).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn apply_set(&self, s: Subset) -> Subset {
        s.iter().map(|i| self.apply(i)).collect()
    }
}

/// `(w a)_i = a_{w^{-1}(i)}`; the marks are unchanged.
pub fn act(w: &Permutation, c: &Code) -> Result<Code> {
    if w.len() != c.len() {
        return Err(Error::InvalidPermutation(format!(
            "permutation of {} acting on code of length {}",
            w.len(),
            c.len()
        )));
    }
    let mut a = vec![0; c.len()];
    for (i, &v) in c.a.iter().enumerate() {
        a[w.images[i]] = v;
    }
    Ok(Code {
        a,
        marks: c.marks.clone(),
    })
}

/// One `S_n` orbit of codes.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct OrbitDatum {
    pub representative: Code,
    pub orbit_size: u64,
    pub stabilizer_type: Vec<usize>,
}

/// Orbit decomposition of the codes of length `n` with `μ ≥ min_mu`,
/// ordered by representative.
pub fn orbits(n: usize, min_mu: usize) -> Vec<OrbitDatum> {
    let reps: BTreeSet<Code> = enumerate_codes(n, min_mu)
        .iter()
        .map(Code::canonical)
        .collect();
    reps.into_iter()
        .map(|rep| {
            let stabilizer_type = rep.stabilizer_type();
            let stab: u64 = stabilizer_type.iter().map(|&m| factorial(m)).product();
            OrbitDatum {
                orbit_size: factorial(n) / stab,
                stabilizer_type,
                representative: rep,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(s: &str) -> Code {
        Code::parse(s).unwrap()
    }

    #[test]
    fn admissibility() {
        assert!(is_admissible(&[0, 0, 0, 0]));
        assert!(is_admissible(&[1, 2, 0, 1, 2, 1, 2]));
        assert!(!is_admissible(&[2, 2, 0]));
    }

    #[test]
    fn stats_of_worked_example() {
        let c = code("1 2 0 1 2^ 1^ 2");
        assert_eq!(c.max_value(), 2);
        assert_eq!(c.mu(), 3);
        assert_eq!(c.marks(), &[2, 1]);
        assert_eq!(c.ind(), 3);
        assert_eq!(reduce(&c).unwrap(), code("1 0 1 1^"));
        assert_eq!(code("12012\u{302}1\u{302}2"), c);
    }

    #[test]
    fn parse_and_display() {
        let c = code("0 1 1\u{302} 1");
        assert_eq!(c.to_string(), "0 1 1\u{302} 1");
        assert_eq!(code("011^1"), c);
        assert!(Code::parse("1^ 1 1").is_err());
        assert!(Code::parse("2 2 0").is_err());
        assert!(Code::parse("1 1").is_err());
    }

    #[test]
    fn reduce_edge_cases() {
        assert_eq!(reduce(&Code::zeros(4)), None);
        assert_eq!(reduce(&code("1 1^ 1")), None);
        assert_eq!(reduce(&code("0 0 1 1^")), Some(Code::zeros(2)));
    }

    #[test]
    fn code_counts() {
        assert_eq!(enumerate_codes(5, 3).len(), 60);
        for n in 1..=7 {
            assert_eq!(enumerate_codes(n, n).len(), n);
        }
        assert_eq!(enumerate_codes(4, 2).len(), 24);
        assert_eq!(enumerate_codes(4, 1).len(), 24);
    }

    #[test]
    fn decode_examples() {
        let c = code("1 2 1^ 0 1 2^");
        assert_eq!(c.mu(), 2);
        match decode(&c) {
            Component::Blowup {
                j, alpha, shift, ..
            } => {
                assert_eq!(j, 4);
                assert_eq!(alpha, [1, 3, 4, 5].into_iter().collect());
                assert_eq!(shift, 1);
                // Zeroed coordinates are the complement, z_2 = z_6 = 0.
                assert_eq!(
                    Subset::full(6).difference(alpha),
                    [2, 6].into_iter().collect()
                );
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(decode(&Code::zeros(5)), Component::Base { n: 5, ind: 0 });
        let c = code("0 0 1 1^");
        let d = decode(&c);
        assert_eq!(
            d,
            Component::Blowup {
                n: 4,
                j: 2,
                alpha: [1, 2].into_iter().collect(),
                shift: 1,
                inner: Box::new(Component::Base { n: 2, ind: 0 }),
            }
        );
        assert_eq!(d.degree(), 2);
    }

    #[test]
    fn action_examples() {
        let c = code("0 1 1^ 1");
        assert_eq!(act(&Permutation::identity(4), &c).unwrap(), c);
        let orbit: BTreeSet<Code> = itertools::Itertools::permutations(1..=4usize, 4)
            .map(|p| act(&Permutation::from_one_line(&p).unwrap(), &c).unwrap())
            .collect();
        let expected: BTreeSet<Code> = ["0 1 1^ 1", "1 0 1^ 1", "1 1^ 0 1", "1 1^ 1 0"]
            .iter()
            .map(|s| code(s))
            .collect();
        assert_eq!(orbit, expected);
        assert!(act(&Permutation::identity(3), &c).is_err());
        assert!(Permutation::from_one_line(&[1, 1, 2]).is_err());
    }

    #[test]
    fn orbit_data() {
        let degree_two: Vec<String> = orbits(4, 2)
            .into_iter()
            .filter(|o| o.representative.ind() == 1)
            .map(|o| o.representative.to_string())
            .collect();
        assert_eq!(
            degree_two,
            vec!["0 0 1 1\u{302}", "0 1 1\u{302} 1", "1 1\u{302} 1 1"]
        );
        assert_eq!(code("0 0 1 1^").stabilizer_type(), vec![2, 2]);
        let all = orbits(4, 1);
        assert_eq!(all[0].representative, Code::zeros(4));
        assert_eq!(all[0].orbit_size, 1);
        for o in &all {
            let stab: u64 = o.stabilizer_type.iter().map(|&m| factorial(m)).product();
            assert_eq!(o.orbit_size * stab, 24);
        }
    }

    #[test]
    fn json_format() {
        let c = code("1 2 1^ 0 1 2^");
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"a":[1,2,1,0,1,2],"f":{"1":1,"2":1}}"#);
        let back: Code = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
        assert!(serde_json::from_str::<Code>(r#"{"a":[1,1],"f":{"1":2}}"#).is_err());
    }
}
