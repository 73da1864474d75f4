//! Matrices whose entries are polynomials over a shared variable list.

use std::fmt;

use num_traits::One;

use super::matrix::Matrix;
use super::poly::{MPoly, Vars};
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    vars: Vars,
    entries: Vec<MPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize, vars: &Vars) -> Self {
        PolyMatrix {
            rows,
            cols,
            vars: vars.clone(),
            entries: vec![MPoly::zero(vars); rows * cols],
        }
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        vars: &Vars,
        mut f: impl FnMut(usize, usize) -> MPoly,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                assert_eq!(e.vars(), vars, "entry over a different variable list");
                entries.push(e);
            }
        }
        PolyMatrix {
            rows,
            cols,
            vars: vars.clone(),
            entries,
        }
    }

    /// Parses a grid of polynomial strings over `vars`.
    pub fn parse(rows: &[&[&str]], vars: &Vars) -> Result<Self> {
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Dimension("ragged polynomial matrix".into()));
        }
        let mut entries = Vec::with_capacity(rows.len() * ncols);
        for row in rows {
            for s in *row {
                entries.push(MPoly::parse(s, vars)?);
            }
        }
        Ok(PolyMatrix {
            rows: rows.len(),
            cols: ncols,
            vars: vars.clone(),
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn get(&self, i: usize, j: usize) -> &MPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.cols, self.rows, &self.vars, |i, j| self.get(j, i).clone())
    }

    /// Every entry is zero or a homogeneous linear form.
    pub fn is_linear_forms(&self) -> bool {
        self.entries.iter().all(MPoly::is_linear_form)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(MPoly::is_zero)
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Matrix> {
        let vals = self
            .entries
            .iter()
            .map(|e| e.eval(point))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_fn(self.rows, self.cols, |i, j| {
            vals[i * self.cols + j].clone()
        }))
    }

    /// Symbolic determinant by cofactor expansion, always along the row
    /// with the most zero entries.
    pub fn det(&self) -> Result<MPoly> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let rows: Vec<usize> = (0..self.rows).collect();
        let cols: Vec<usize> = (0..self.cols).collect();
        Ok(self.det_sub(&rows, &cols))
    }

    fn det_sub(&self, rows: &[usize], cols: &[usize]) -> MPoly {
        match rows.len() {
            0 => return MPoly::constant(&self.vars, Rational::one()),
            1 => return self.get(rows[0], cols[0]).clone(),
            2 => {
                let a = self.get(rows[0], cols[0]);
                let b = self.get(rows[0], cols[1]);
                let c = self.get(rows[1], cols[0]);
                let d = self.get(rows[1], cols[1]);
                return &(a * d) - &(b * c);
            }
            _ => {}
        }
        let pivot_pos = (0..rows.len())
            .max_by_key(|&ri| {
                let zeros = cols.iter().filter(|&&c| self.get(rows[ri], c).is_zero()).count();
                (zeros, std::cmp::Reverse(ri))
            })
            .unwrap_or(0);
        let pivot_row = rows[pivot_pos];
        let rest: Vec<usize> = rows
            .iter()
            .copied()
            .filter(|&r| r != pivot_row)
            .collect();
        let mut acc = MPoly::zero(&self.vars);
        for (ci, &c) in cols.iter().enumerate() {
            let entry = self.get(pivot_row, c);
            if entry.is_zero() {
                continue;
            }
            let minor_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = entry * &self.det_sub(&rest, &minor_cols);
            if (pivot_pos + ci) % 2 == 0 {
                acc = &acc + &term;
            } else {
                acc = &acc - &term;
            }
        }
        acc
    }

    /// Determinants of the `u x u` submatrices on the column subsets of size
    /// `u`, in lexicographic order of the column index tuples.
    pub fn maximal_minors(&self) -> Result<Vec<MPoly>> {
        if self.rows > self.cols {
            return Err(Error::Dimension(format!(
                "maximal minors need rows <= cols, got {}x{}; transpose first",
                self.rows, self.cols
            )));
        }
        let rows: Vec<usize> = (0..self.rows).collect();
        Ok(column_subsets(self.cols, self.rows)
            .iter()
            .map(|cols| self.det_sub(&rows, cols))
            .collect())
    }

    /// All `k x k` minors, rows and columns each in lexicographic order.
    pub fn minors(&self, k: usize) -> Vec<MPoly> {
        let mut out = Vec::new();
        for rows in column_subsets(self.rows, k) {
            for cols in column_subsets(self.cols, k) {
                out.push(self.det_sub(&rows, &cols));
            }
        }
        out
    }
}

/// The size-`k` subsets of `0..n` as increasing tuples, in lexicographic order.
pub fn column_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::poly::var_names;

    #[test]
    fn diagonal_det() {
        let x = var_names("x", 2);
        let b = PolyMatrix::parse(&[&["x1", "0"], &["0", "x2"]], &x).unwrap();
        assert_eq!(b.det().unwrap(), MPoly::parse("x1 x2", &x).unwrap());
        assert_eq!(b.maximal_minors().unwrap(), vec![MPoly::parse("x1x2", &x).unwrap()]);
    }

    #[test]
    fn non_square_det_fails() {
        let x = var_names("x", 2);
        let b = PolyMatrix::parse(&[&["x1", "0", "x2"], &["0", "x2", "x1"]], &x).unwrap();
        assert!(b.det().is_err());
        assert!(b.transpose().maximal_minors().is_err());
    }

    #[test]
    fn minors_in_column_order() {
        let x = var_names("x", 2);
        let b = PolyMatrix::parse(&[&["x1", "0", "0"], &["0", "x1", "x2"]], &x).unwrap();
        let m = b.maximal_minors().unwrap();
        assert_eq!(m[0], MPoly::parse("x1^2", &x).unwrap());
        assert_eq!(m[1], MPoly::parse("x1x2", &x).unwrap());
        assert!(m[2].is_zero());
    }

    #[test]
    fn subsets_lexicographic() {
        assert_eq!(
            column_subsets(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(column_subsets(3, 0), vec![Vec::<usize>::new()]);
        assert!(column_subsets(2, 3).is_empty());
    }

    #[test]
    fn equal_rows_give_zero_det() {
        let z = var_names("z", 3);
        let b = PolyMatrix::parse(
            &[&["z1", "z2 + z3", "2z1"], &["z3", "z1", "z2"], &["z1", "z2 + z3", "2z1"]],
            &z,
        )
        .unwrap();
        assert!(b.det().unwrap().is_zero());
        assert!(b.is_linear_forms());
    }

    #[test]
    fn linear_forms_flag() {
        let z = var_names("z", 2);
        assert!(!PolyMatrix::parse(&[&["z1 + 1"]], &z).unwrap().is_linear_forms());
        assert!(!PolyMatrix::parse(&[&["z1 z2"]], &z).unwrap().is_linear_forms());
        assert!(PolyMatrix::parse(&[&["0"]], &z).unwrap().is_linear_forms());
    }
}
