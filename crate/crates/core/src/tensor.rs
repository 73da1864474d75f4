//! Three-dimensional hypermatrices `A = (a_ijk)` of format `(p,q,r)`.
//!
//! Indices are 0-based in the API; `get(0,0,0)` is `a_111`.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polyalg::{var_names, MPoly, Matrix, Monomial, PolyMatrix, Rational, Vars};
use crate::polyalg::poly::concat_vars;
use crate::polyalg::rational::rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Axis {
        Axis::ALL[i]
    }

    /// Variable prefix of the associated matrix: `x`, `y` or `z`.
    pub fn var_prefix(self) -> &'static str {
        match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        }
    }

    /// The other two axes, in increasing order.
    pub fn others(self) -> (Axis, Axis) {
        match self {
            Axis::X => (Axis::Y, Axis::Z),
            Axis::Y => (Axis::X, Axis::Z),
            Axis::Z => (Axis::X, Axis::Y),
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.var_prefix())
    }
}

impl FromStr for Axis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Axis> {
        match s.trim().to_ascii_lowercase().as_str() {
            "x" => Ok(Axis::X),
            "y" => Ok(Axis::Y),
            "z" => Ok(Axis::Z),
            _ => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown axis {s:?}, expected x, y or z"),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EssentialFormat {
    pub p: usize,
    pub q: usize,
    pub r: usize,
}

impl EssentialFormat {
    pub fn as_array(self) -> [usize; 3] {
        [self.p, self.q, self.r]
    }
}

impl From<[usize; 3]> for EssentialFormat {
    fn from(d: [usize; 3]) -> Self {
        EssentialFormat {
            p: d[0],
            q: d[1],
            r: d[2],
        }
    }
}

impl fmt::Display for EssentialFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.p, self.q, self.r)
    }
}

/// Flattening along an axis: X gives `p x qr` (column `j*r + k`), Y gives
/// `q x pr` (column `i*r + k`), Z gives `pq x r` (row `i*q + j`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flattening {
    pub axis: Axis,
    pub matrix: Matrix,
}

/// Output of [`Tensor3::reduce_to_essential`]: `tensor` equals the input
/// after `combine_slices` with `changes[0]`, `changes[1]`, `changes[2]` on
/// X, Y, Z in that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub tensor: Tensor3,
    pub changes: [Matrix; 3],
    pub format: EssentialFormat,
}

impl Reduction {
    /// The leading `(p',q',r')` block.
    pub fn core(&self) -> Tensor3 {
        let [p, q, r] = self.format.as_array();
        Tensor3::from_fn([p, q, r], |i, j, k| self.tensor.get(i, j, k).clone())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    dims: [usize; 3],
    data: Vec<Rational>,
}

impl Tensor3 {
    pub fn zeros(dims: [usize; 3]) -> Self {
        assert!(dims.iter().all(|&d| d > 0), "tensor dimensions must be positive");
        Tensor3 {
            dims,
            data: vec![Rational::zero(); dims.iter().product()],
        }
    }

    pub fn from_fn(dims: [usize; 3], mut f: impl FnMut(usize, usize, usize) -> Rational) -> Self {
        let mut t = Tensor3::zeros(dims);
        for i in 0..dims[0] {
            for j in 0..dims[1] {
                for k in 0..dims[2] {
                    t.data[(i * dims[1] + j) * dims[2] + k] = f(i, j, k);
                }
            }
        }
        t
    }

    /// Nested entries `a[i][j][k]`.
    pub fn from_nested(entries: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let p = entries.len();
        let q = entries.first().map_or(0, Vec::len);
        let r = entries.first().and_then(|s| s.first()).map_or(0, Vec::len);
        if p == 0 || q == 0 || r == 0 {
            return Err(Error::Dimension("tensor dimensions must be positive".into()));
        }
        if entries
            .iter()
            .any(|s| s.len() != q || s.iter().any(|row| row.len() != r))
        {
            return Err(Error::Dimension("ragged tensor entries".into()));
        }
        Ok(Tensor3::from_fn([p, q, r], |i, j, k| entries[i][j][k].clone()))
    }

    /// Builds a tensor from its z-slices, each given as `p` rows of `q` entries.
    pub fn from_z_slices(slices: &[&[&[i64]]]) -> Self {
        let r = slices.len();
        let p = slices[0].len();
        let q = slices[0][0].len();
        for s in slices {
            assert!(s.len() == p && s.iter().all(|row| row.len() == q), "ragged slices");
        }
        Tensor3::from_fn([p, q, r], |i, j, k| rat(slices[k][i][j]))
    }

    /// Tensor whose entries are 1 at the given 1-based positions, 0 elsewhere.
    pub fn from_ones(dims: [usize; 3], ones: &[(usize, usize, usize)]) -> Self {
        let mut t = Tensor3::zeros(dims);
        for &(i, j, k) in ones {
            t.set(i - 1, j - 1, k - 1, rat(1));
        }
        t
    }

    /// `u (x) v (x) w`.
    pub fn outer(u: &[Rational], v: &[Rational], w: &[Rational]) -> Self {
        Tensor3::from_fn([u.len(), v.len(), w.len()], |i, j, k| &u[i] * &v[j] * &w[k])
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn extent(&self, axis: Axis) -> usize {
        self.dims[axis.index()]
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.data[(i * self.dims[1] + j) * self.dims[2] + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Rational) {
        let idx = (i * self.dims[1] + j) * self.dims[2] + k;
        self.data[idx] = v;
    }

    /// Entry addressed by a per-axis index triple.
    fn at(&self, idx: [usize; 3]) -> &Rational {
        self.get(idx[0], idx[1], idx[2])
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<Rational>>> {
        let [p, q, r] = self.dims;
        (0..p)
            .map(|i| {
                (0..q)
                    .map(|j| (0..r).map(|k| self.get(i, j, k).clone()).collect())
                    .collect()
            })
            .collect()
    }

    /// The slice at `index` along `axis`: X gives `q x r`, Y gives `p x r`,
    /// Z gives `p x q`.
    pub fn slice(&self, axis: Axis, index: usize) -> Result<Matrix> {
        let extent = self.extent(axis);
        if index >= extent {
            return Err(Error::IndexOutOfRange {
                axis,
                index,
                extent,
            });
        }
        let (b, c) = axis.others();
        Ok(Matrix::from_fn(self.extent(b), self.extent(c), |u, v| {
            let mut idx = [0; 3];
            idx[axis.index()] = index;
            idx[b.index()] = u;
            idx[c.index()] = v;
            self.at(idx).clone()
        }))
    }

    /// Change of coordinates `W = E W'` on one axis: slice `k'` of the result
    /// is `sum_k E[k][k'] * slice k`.
    pub fn combine_slices(&self, axis: Axis, e: &Matrix) -> Result<Tensor3> {
        let n = self.extent(axis);
        if e.rows() != n || e.cols() != n {
            return Err(Error::Dimension(format!(
                "change matrix is {}x{}, axis {axis} has extent {n}",
                e.rows(),
                e.cols()
            )));
        }
        if e.rank() < n {
            return Err(Error::SingularChange);
        }
        let a = axis.index();
        let mut out = Tensor3::zeros(self.dims);
        for i in 0..self.dims[0] {
            for j in 0..self.dims[1] {
                for k in 0..self.dims[2] {
                    let idx = [i, j, k];
                    let mut acc = Rational::zero();
                    for s in 0..n {
                        let c = &e[(s, idx[a])];
                        if c.is_zero() {
                            continue;
                        }
                        let mut src = idx;
                        src[a] = s;
                        acc += c * self.at(src);
                    }
                    out.set(i, j, k, acc);
                }
            }
        }
        Ok(out)
    }

    pub fn flattening(&self, axis: Axis) -> Flattening {
        let [p, q, r] = self.dims;
        let matrix = match axis {
            Axis::X => Matrix::from_fn(p, q * r, |i, c| self.get(i, c / r, c % r).clone()),
            Axis::Y => Matrix::from_fn(q, p * r, |j, c| self.get(c / r, j, c % r).clone()),
            Axis::Z => Matrix::from_fn(p * q, r, |row, k| self.get(row / q, row % q, k).clone()),
        };
        Flattening { axis, matrix }
    }

    /// Slices along `axis` flattened into rows, one row per slice.
    fn slice_rows(&self, axis: Axis) -> Matrix {
        let f = self.flattening(axis).matrix;
        match axis {
            Axis::Z => f.transpose(),
            _ => f,
        }
    }

    /// Ranks of the X, Y and Z flattenings.
    pub fn index_ranks(&self) -> [usize; 3] {
        Axis::ALL.map(|a| self.flattening(a).matrix.rank())
    }

    pub fn essential_format(&self) -> EssentialFormat {
        self.index_ranks().into()
    }

    pub fn is_concise(&self) -> bool {
        self.index_ranks() == self.dims
    }

    /// Moves a basis of the slices to the front of each axis (X, then Y,
    /// then Z) and turns the remaining slices into zero slices.
    pub fn reduce_to_essential(&self) -> Result<Reduction> {
        if self.is_zero() {
            return Err(Error::ZeroTensor);
        }
        let mut t = self.clone();
        let mut changes = Vec::with_capacity(3);
        for axis in Axis::ALL {
            let rows = t.slice_rows(axis);
            let (_, pivots) = rows.transpose().rref();
            let n = rows.rows();
            let mut et: Vec<Vec<Rational>> = pivots
                .iter()
                .map(|&pv| (0..n).map(|s| rat(i64::from(s == pv))).collect())
                .collect();
            et.extend(rows.left_kernel());
            let e = Matrix::from_rows(et).transpose();
            t = t.combine_slices(axis, &e)?;
            changes.push(e);
        }
        let format = t.essential_format();
        let changes: [Matrix; 3] = changes.try_into().expect("three axes");
        Ok(Reduction {
            tensor: t,
            changes,
            format,
        })
    }

    /// Variables of the associated matrix on `axis`: `x1..xp`, `y1..yq` or `z1..zr`.
    pub fn axis_vars(&self, axis: Axis) -> Vars {
        var_names(axis.var_prefix(), self.extent(axis))
    }

    /// L (axis X, `q x r` in x), M (axis Y, `p x r` in y), N (axis Z, `p x q` in z).
    pub fn assoc_matrix(&self, axis: Axis) -> PolyMatrix {
        let vars = self.axis_vars(axis);
        let (b, c) = axis.others();
        let n = self.extent(axis);
        PolyMatrix::from_fn(self.extent(b), self.extent(c), &vars, |u, v| {
            let coeffs: Vec<Rational> = (0..n)
                .map(|s| {
                    let mut idx = [0; 3];
                    idx[axis.index()] = s;
                    idx[b.index()] = u;
                    idx[c.index()] = v;
                    self.at(idx).clone()
                })
                .collect();
            MPoly::linear(&vars, &coeffs)
        })
    }

    /// The associated matrix on `axis` evaluated at `point`, computed
    /// directly as a combination of slices.
    pub fn contract(&self, axis: Axis, point: &[Rational]) -> Result<Matrix> {
        let n = self.extent(axis);
        if point.len() != n {
            return Err(Error::Dimension(format!(
                "axis {axis} needs {n} coordinates, got {}",
                point.len()
            )));
        }
        let (b, c) = axis.others();
        Ok(Matrix::from_fn(self.extent(b), self.extent(c), |u, v| {
            let mut acc = Rational::zero();
            for (s, x) in point.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let mut idx = [0; 3];
                idx[axis.index()] = s;
                idx[b.index()] = u;
                idx[c.index()] = v;
                acc += x * self.at(idx);
            }
            acc
        }))
    }

    /// `P_A = sum a_ijk x_i y_j z_k` over `x1..xp, y1..yq, z1..zr`.
    pub fn poly_pa(&self) -> MPoly {
        let [p, q, r] = self.dims;
        let vars = concat_vars(&[
            &self.axis_vars(Axis::X),
            &self.axis_vars(Axis::Y),
            &self.axis_vars(Axis::Z),
        ]);
        let n = p + q + r;
        let mut terms = Vec::new();
        for i in 0..p {
            for j in 0..q {
                for k in 0..r {
                    let a = self.get(i, j, k);
                    if a.is_zero() {
                        continue;
                    }
                    let mut e = vec![0; n];
                    e[i] = 1;
                    e[p + j] = 1;
                    e[p + q + k] = 1;
                    terms.push((Monomial::new(e), a.clone()));
                }
            }
        }
        MPoly::from_terms(&vars, terms)
    }

    /// The trilinear form `f_A(X, Y, Z)`.
    pub fn eval_fa(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Result<Rational> {
        let [p, q, r] = self.dims;
        if x.len() != p || y.len() != q || z.len() != r {
            return Err(Error::Dimension(format!(
                "vectors of lengths ({},{},{}) for format ({p},{q},{r})",
                x.len(),
                y.len(),
                z.len()
            )));
        }
        let lz = self.contract(Axis::X, x)?.mul_vec(z)?;
        Ok(y.iter().zip(&lz).map(|(a, b)| a * b).sum())
    }

    /// Relabels axes: axis `a` of the result is axis `perm[a]` of `self`.
    pub fn permute(&self, perm: [usize; 3]) -> Tensor3 {
        let mut seen = [false; 3];
        for &a in &perm {
            assert!(a < 3 && !seen[a], "not a permutation: {perm:?}");
            seen[a] = true;
        }
        let dims = perm.map(|a| self.dims[a]);
        Tensor3::from_fn(dims, |i, j, k| {
            let new = [i, j, k];
            let mut old = [0; 3];
            for a in 0..3 {
                old[perm[a]] = new[a];
            }
            self.at(old).clone()
        })
    }

    pub fn swap_xy(&self) -> Tensor3 {
        self.permute([1, 0, 2])
    }

    /// Appends zero slices along Z up to `r` slices.
    pub fn pad_z(&self, r: usize) -> Tensor3 {
        assert!(r >= self.dims[2], "padding cannot shrink");
        let [p, q, r0] = self.dims;
        Tensor3::from_fn([p, q, r], |i, j, k| {
            if k < r0 {
                self.get(i, j, k).clone()
            } else {
                Rational::zero()
            }
        })
    }
}

impl fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor3{:?}", self.dims)?;
        for k in 0..self.dims[2] {
            let s = self.slice(Axis::Z, k).map_err(|_| fmt::Error)?;
            write!(f, " z{}={:?}", k + 1, s)?;
        }
        Ok(())
    }
}
