//! Dense exact-rational linear algebra: reduced row echelon form, rank,
//! and nullspace.  Small matrices only; everything is `BigRational`.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rat = BigRational;

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(v.into())
}

/// Row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<Rat>>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![vec![Rat::zero(); cols]; rows],
        }
    }

    pub fn from_rows(data: Vec<Vec<Rat>>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        assert!(data.iter().all(|r| r.len() == cols));
        Mat { rows, cols, data }
    }

    /// In-place Gauss–Jordan elimination.  Returns the pivot column indices
    /// in order.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let mut best: Option<usize> = None;
            for i in r..self.rows {
                if !self.data[i][c].is_zero() {
                    best = Some(i);
                    break;
                }
            }
            let Some(p) = best else { continue };
            self.data.swap(r, p);
            let inv = self.data[r][c].clone();
            for x in &mut self.data[r] {
                *x = &*x / &inv;
            }
            for i in 0..self.rows {
                if i != r && !self.data[i][c].is_zero() {
                    let f = self.data[i][c].clone();
                    for j in c..self.cols {
                        let sub = &self.data[r][j] * &f;
                        self.data[i][j] = &self.data[i][j] - &sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(mut self) -> usize {
        self.rref().len()
    }

    /// Basis of the right nullspace `{x : Mx = 0}`, one vector per free
    /// column, each normalized with a 1 in its free coordinate.
    pub fn nullspace(mut self) -> Vec<Vec<Rat>> {
        let pivots = self.rref();
        let mut pivot_set = vec![false; self.cols];
        for &c in &pivots {
            pivot_set[c] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut vec = vec![Rat::zero(); self.cols];
            vec[free] = Rat::one();
            for (row, &pc) in pivots.iter().enumerate() {
                vec[pc] = -self.data[row][free].clone();
            }
            basis.push(vec);
        }
        basis
    }
}

/// RREF of a set of vectors (as rows); returns `(pivot_columns, reduced_rows)`
/// with zero rows dropped.
pub fn row_reduce(vectors: Vec<Vec<Rat>>) -> (Vec<usize>, Vec<Vec<Rat>>) {
    if vectors.is_empty() {
        return (vec![], vec![]);
    }
    let mut m = Mat::from_rows(vectors);
    let pivots = m.rref();
    m.data.truncate(pivots.len());
    (pivots, m.data)
}

/// Integer matrix with a fraction-free reduced echelon form.  Rows are kept
/// primitive (content stripped) after every elimination step, which keeps
/// entry growth tame on large dense systems where rational Gauss–Jordan
/// grinds on gcd normalization.
#[derive(Clone, Debug)]
pub struct IntMat {
    pub cols: usize,
    pub data: Vec<Vec<BigInt>>,
}

use num_bigint::BigInt;
use num_integer::Integer;

impl IntMat {
    pub fn from_rows(data: Vec<Vec<BigInt>>) -> Self {
        let cols = data.first().map_or(0, |r| r.len());
        assert!(data.iter().all(|r| r.len() == cols));
        IntMat { cols, data }
    }

    fn strip_content(row: &mut [BigInt]) {
        let mut g = BigInt::zero();
        for x in row.iter() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
        if g.is_zero() || g.is_one() {
            return;
        }
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }

    /// Jordan-style fraction-free elimination.  Afterwards each pivot column
    /// is zero outside its pivot row; pivot entries are positive but not
    /// necessarily 1.  Returns the pivot columns.
    pub fn rref_fraction_free(&mut self) -> Vec<usize> {
        let rows = self.data.len();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self.data[i][c].is_zero()) else {
                continue;
            };
            self.data.swap(r, p);
            if self.data[r][c].sign() == num_bigint::Sign::Minus {
                for x in &mut self.data[r] {
                    *x = -x.clone();
                }
            }
            Self::strip_content(&mut self.data[r]);
            let pivot = self.data[r][c].clone();
            for i in 0..rows {
                if i == r || self.data[i][c].is_zero() {
                    continue;
                }
                let factor = self.data[i][c].clone();
                for j in 0..self.cols {
                    let a = &self.data[i][j] * &pivot;
                    let b = &self.data[r][j] * &factor;
                    self.data[i][j] = a - b;
                }
                Self::strip_content(&mut self.data[i]);
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Rank and rational nullspace basis from one elimination pass; each
    /// basis vector is normalized with `1` at its free coordinate.
    pub fn rank_and_nullspace(mut self) -> (usize, Vec<Vec<Rat>>) {
        let pivots = self.rref_fraction_free();
        let mut pivot_set = vec![false; self.cols];
        for &c in &pivots {
            pivot_set[c] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (row, &pc) in pivots.iter().enumerate() {
                if !self.data[row][free].is_zero() {
                    v[pc] = -Rat::new(self.data[row][free].clone(), self.data[row][pc].clone());
                }
            }
            basis.push(v);
        }
        (pivots.len(), basis)
    }
}

/// Format a rational without a denominator when integral.
pub fn rat_display(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
