//! Exact dense linear algebra: rank, span membership and fraction-free
//! integer elimination.

use crate::scalar::{ExactField, ExactInt};

/// A dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: ExactField> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    /// Builds a matrix from row vectors. All rows must share a length.
    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flat_map(|r| r.iter().cloned()).collect(),
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<T>]) -> Self {
        Self::from_rows(cols).transpose()
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..self.cols {
            if pr == self.rows {
                break;
            }
            let Some(p) = (pr..self.rows).find(|&r| !self.get(r, c).is_zero()) else {
                continue;
            };
            self.swap_rows(pr, p);
            let inv = T::one() / self.get(pr, c).clone();
            for j in c..self.cols {
                let v = self.get(pr, j).clone() * inv.clone();
                self.set(pr, j, v);
            }
            for r in 0..self.rows {
                if r == pr || self.get(r, c).is_zero() {
                    continue;
                }
                let factor = self.get(r, c).clone();
                for j in c..self.cols {
                    let v = self.get(r, j).clone() - factor.clone() * self.get(pr, j).clone();
                    self.set(r, j, v);
                }
            }
            pivots.push(c);
            pr += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// Rank of a list of vectors.
pub fn rank_of<T: ExactField>(vectors: &[Vec<T>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_rows(vectors).rank()
}

/// Coefficients expressing `point` in terms of linearly independent
/// `generators`, or `None` when `point` is outside their span.
///
/// Panics if the generators are dependent or lengths disagree.
pub fn coordinates_in_span<T: ExactField>(generators: &[Vec<T>], point: &[T]) -> Option<Vec<T>> {
    let d = generators.len();
    if d == 0 {
        return point.iter().all(T::is_zero).then(Vec::new);
    }
    let dim = point.len();
    let mut aug = Matrix::zeros(dim, d + 1);
    for (j, g) in generators.iter().enumerate() {
        assert_eq!(g.len(), dim, "generator length mismatch");
        for (i, x) in g.iter().enumerate() {
            aug.set(i, j, x.clone());
        }
    }
    for (i, x) in point.iter().enumerate() {
        aug.set(i, d, x.clone());
    }
    let pivots = aug.rref();
    assert!(
        pivots.iter().take_while(|&&c| c < d).count() == d,
        "generators are linearly dependent"
    );
    if pivots.contains(&d) {
        return None;
    }
    Some((0..d).map(|r| aug.get(r, d).clone()).collect())
}

/// Rank of an integer matrix by Bareiss fraction-free elimination.
pub fn integer_rank<I: ExactInt>(rows: &[Vec<I>]) -> usize {
    let mut m: Vec<Vec<I>> = rows.to_vec();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = I::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let v = m[r][c].clone() * m[i][j].clone() - m[i][c].clone() * m[r][j].clone();
                m[i][j] = v / prev.clone();
            }
            m[i][c] = I::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_rational::Rational64;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn rank_of_small_matrices() {
        let m = vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]];
        assert_eq!(rank_of(&m), 1);
        let m = vec![vec![q(1, 2), q(0, 1)], vec![q(1, 3), q(1, 1)]];
        assert_eq!(rank_of(&m), 2);
        assert_eq!(rank_of::<Rational>(&[]), 0);
    }

    #[test]
    fn generic_over_rational_width() {
        let m = vec![
            vec![
                Rational64::new(1, 1),
                Rational64::new(1, 2),
                Rational64::new(1, 3),
            ],
            vec![
                Rational64::new(2, 1),
                Rational64::new(1, 1),
                Rational64::new(2, 3),
            ],
        ];
        assert_eq!(rank_of(&m), 1);
    }

    #[test]
    fn span_coordinates() {
        let g = vec![vec![q(1, 1), q(0, 1)], vec![q(1, 1), q(1, 1)]];
        let c = coordinates_in_span(&g, &[q(3, 1), q(1, 2)]).unwrap();
        assert_eq!(c, vec![q(5, 2), q(1, 2)]);
        let g = vec![vec![q(1, 1), q(1, 1), q(0, 1)]];
        assert!(coordinates_in_span(&g, &[q(1, 1), q(0, 1), q(0, 1)]).is_none());
        assert_eq!(
            coordinates_in_span(&g, &[q(2, 1), q(2, 1), q(0, 1)]),
            Some(vec![q(2, 1)])
        );
    }

    #[test]
    fn bareiss_matches_field_rank() {
        let rows: Vec<Vec<i64>> =
            vec![vec![1, 0, -1], vec![1, 1, 0], vec![0, 1, 1], vec![2, 1, -1]];
        assert_eq!(integer_rank(&rows), 2);
        let rational: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| q(x, 1)).collect())
            .collect();
        assert_eq!(rank_of(&rational), 2);
        assert_eq!(integer_rank(&[vec![1i64, 0], vec![1, 1]]), 2);
    }
}
