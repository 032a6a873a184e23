use num_bigint::BigInt;
use num_traits::Zero;

use super::Field;

/// Dense matrix over an exact field.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldMatrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Solution<F: Field> {
    Unique(Vec<F>),
    /// Particular solution plus a nullspace basis in reduced echelon form.
    Family { particular: Vec<F>, nullspace: Vec<Vec<F>> },
    Inconsistent,
}

impl<F: Field> FieldMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FieldMatrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<F>>, cols: usize) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix");
            data.extend(row);
        }
        FieldMatrix { rows: r, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduces in place to reduced row echelon form over the first
    /// `limit` columns and returns the pivot columns.
    fn rref_upto(&mut self, limit: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..limit {
            if r == self.rows {
                break;
            }
            let best = (r..self.rows)
                .filter(|&i| !self.get(i, c).is_zero())
                .min_by_key(|&i| self.get(i, c).weight());
            let Some(p) = best else { continue };
            self.swap_rows(r, p);
            let inv = self.get(r, c).inv();
            for k in c..self.cols {
                let v = self.get(r, k).mul_ref(&inv);
                self.set(r, k, v);
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let f = self.get(i, c).clone();
                for k in c..self.cols {
                    if self.get(r, k).is_zero() {
                        continue;
                    }
                    let v = self.get(i, k).sub_ref(&f.mul_ref(self.get(r, k)));
                    self.set(i, k, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&mut self) -> Vec<usize> {
        self.rref_upto(self.cols)
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{x : M x = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let mut m = self.clone();
        let pivots = m.rref();
        nullspace_from_rref(&m, &pivots, self.cols)
    }

    /// Solves `M x = b` exactly.
    pub fn solve(&self, b: &[F]) -> Solution<F> {
        assert_eq!(b.len(), self.rows);
        let n = self.cols;
        let mut aug = FieldMatrix::zeros(self.rows, n + 1);
        for r in 0..self.rows {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n, b[r].clone());
        }
        let pivots = aug.rref_upto(n);
        for r in pivots.len()..self.rows {
            if !aug.get(r, n).is_zero() {
                return Solution::Inconsistent;
            }
        }
        let mut x = vec![F::zero(); n];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(r, n).clone();
        }
        if pivots.len() == n {
            Solution::Unique(x)
        } else {
            Solution::Family { particular: x, nullspace: nullspace_from_rref(&aug, &pivots, n) }
        }
    }
}

fn nullspace_from_rref<F: Field>(m: &FieldMatrix<F>, pivots: &[usize], n: usize) -> Vec<Vec<F>> {
    let mut out = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![F::zero(); n];
        v[free] = F::one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = m.get(r, free).neg_ref();
        }
        out.push(v);
    }
    out
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn rank_integer(rows: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let nrows = a.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = a[0].len();
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in r + 1..nrows {
            for k in c + 1..ncols {
                let v = (&a[r][c] * &a[i][k] - &a[i][c] * &a[r][k]) / &prev;
                a[i][k] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::super::{rat, BigRational};
    use super::*;

    fn m(rows: &[&[i64]]) -> FieldMatrix<BigRational> {
        let cols = rows[0].len();
        FieldMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect(),
            cols,
        )
    }

    #[test]
    fn nullspace_matches_hand_elimination() {
        // a1 = 0, a2 + a3 = 0, a2 - a4 = 0, a1 + a3 + a4 = 0
        let a = m(&[&[1, 0, 0, 0], &[0, 1, 1, 0], &[0, 1, 0, -1], &[1, 0, 1, 1]]);
        let ns = a.nullspace();
        assert_eq!(ns, vec![vec![rat(0, 1), rat(1, 1), rat(-1, 1), rat(1, 1)]]);
    }

    #[test]
    fn solve_cases() {
        let a = m(&[&[2, 1], &[1, -1]]);
        assert_eq!(a.solve(&[rat(3, 1), rat(0, 1)]), Solution::Unique(vec![rat(1, 1), rat(1, 1)]));
        let s = m(&[&[1, 1], &[2, 2]]);
        assert_eq!(s.solve(&[rat(1, 1), rat(3, 1)]), Solution::Inconsistent);
        match s.solve(&[rat(1, 1), rat(2, 1)]) {
            Solution::Family { nullspace, .. } => assert_eq!(nullspace.len(), 1),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bareiss_rank() {
        let rows: Vec<Vec<BigInt>> = [[1, 2, 3], [2, 4, 6], [1, 0, 1], [0, 2, 2]]
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        assert_eq!(rank_integer(&rows), 2);
        assert_eq!(m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1], &[0, 2, 2]]).rank(), 2);
    }
}
