//! Quadratic forms classified by the rank of their symmetric Gram matrix.

use std::fmt;

use num_traits::Zero;

use super::matrix::Matrix;
use super::poly::{MPoly, Monomial};
use super::rational::{rat, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuadricLabel {
    Zero,
    DoubleHyperplane,
    TwoHyperplanes,
    SmoothConic,
    ConeOverSmoothConic,
    SmoothQuadric,
    ConeOverSmoothQuadric,
    Smooth(usize),
    Cone(usize),
}

impl QuadricLabel {
    pub fn from_rank(rank: usize, nvars: usize) -> Self {
        match (rank, rank == nvars) {
            (0, _) => QuadricLabel::Zero,
            (1, _) => QuadricLabel::DoubleHyperplane,
            (2, _) => QuadricLabel::TwoHyperplanes,
            (3, true) => QuadricLabel::SmoothConic,
            (3, false) => QuadricLabel::ConeOverSmoothConic,
            (4, true) => QuadricLabel::SmoothQuadric,
            (4, false) => QuadricLabel::ConeOverSmoothQuadric,
            (k, true) => QuadricLabel::Smooth(k),
            (k, false) => QuadricLabel::Cone(k),
        }
    }
}

impl fmt::Display for QuadricLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadricLabel::Zero => f.write_str("zero"),
            QuadricLabel::DoubleHyperplane => f.write_str("double-hyperplane"),
            QuadricLabel::TwoHyperplanes => f.write_str("two-hyperplanes"),
            QuadricLabel::SmoothConic => f.write_str("smooth-conic"),
            QuadricLabel::ConeOverSmoothConic => f.write_str("cone-over-smooth-conic"),
            QuadricLabel::SmoothQuadric => f.write_str("smooth-quadric"),
            QuadricLabel::ConeOverSmoothQuadric => f.write_str("cone-over-smooth-quadric"),
            QuadricLabel::Smooth(k) => write!(f, "smooth-quadric-rank-{k}"),
            QuadricLabel::Cone(k) => write!(f, "cone-over-smooth-quadric-rank-{k}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadricClass {
    pub gram_rank: usize,
    pub nvars: usize,
    pub label: QuadricLabel,
}

fn check_quadratic(q: &MPoly) -> Result<()> {
    if q.is_zero() || q.homogeneous_degree() == Some(2) {
        Ok(())
    } else {
        Err(Error::NotAForm(format!("{q} is not a quadratic form")))
    }
}

/// Symmetric matrix with `G[i][i]` the coefficient of `z_i^2` and `G[i][j]`
/// half the coefficient of `z_i z_j`.
pub fn gram_matrix(q: &MPoly) -> Result<Matrix> {
    check_quadratic(q)?;
    let n = q.nvars();
    let half = Rational::new(1.into(), 2.into());
    let mut g = Matrix::zeros(n, n);
    for (m, c) in q.terms() {
        let idx: Vec<usize> = m
            .exponents()
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize))
            .collect();
        let (i, j) = (idx[0], idx[1]);
        if i == j {
            g[(i, i)] = c.clone();
        } else {
            g[(i, j)] = c * &half;
            g[(j, i)] = c * &half;
        }
    }
    Ok(g)
}

pub fn gram_rank(q: &MPoly) -> Result<QuadricClass> {
    let rank = gram_matrix(q)?.rank();
    let n = q.nvars();
    Ok(QuadricClass {
        gram_rank: rank,
        nvars: n,
        label: QuadricLabel::from_rank(rank, n),
    })
}

/// Determinant of the Gram matrix.
pub fn gram_determinant(q: &MPoly) -> Result<Rational> {
    gram_matrix(q)?.det()
}

/// Rebuilds the quadratic form from a symmetric matrix.
pub fn form_from_gram(g: &Matrix, vars: &super::poly::Vars) -> MPoly {
    let n = vars.len();
    let mut terms = Vec::new();
    for i in 0..n {
        for j in i..n {
            let c = if i == j { g[(i, i)].clone() } else { &g[(i, j)] * rat(2) };
            if c.is_zero() {
                continue;
            }
            let mut e = vec![0; n];
            e[i] += 1;
            e[j] += 1;
            terms.push((Monomial::new(e), c));
        }
    }
    MPoly::from_terms(vars, terms)
}
