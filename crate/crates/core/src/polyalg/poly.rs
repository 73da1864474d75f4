//! Sparse multivariate polynomials with rational coefficients over a named,
//! ordered variable list. Terms are kept in graded-lex order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, rat, Rational};
use crate::error::{Error, Result};

/// Shared, ordered list of variable names.
pub type Vars = Arc<[String]>;

/// `prefix1, ..., prefixN`.
pub fn var_names(prefix: &str, n: usize) -> Vars {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// Concatenates variable lists, e.g. the x, y and z blocks of a trilinear form.
pub fn concat_vars(lists: &[&Vars]) -> Vars {
    lists.iter().flat_map(|v| v.iter().cloned()).collect()
}

/// Exponent vector, one entry per ambient variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// Graded lexicographic: total degree first, then the first differing
/// exponent (larger exponent of an earlier variable wins).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    vars: Vars,
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn zero(vars: &Vars) -> Self {
        MPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Vars, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Monomial::one(vars.len()), c);
        p
    }

    /// The variable with index `i`.
    pub fn var(vars: &Vars, i: usize) -> Self {
        assert!(i < vars.len(), "variable index out of range");
        let mut p = Self::zero(vars);
        p.add_term(Monomial::var(vars.len(), i), Rational::one());
        p
    }

    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.0.len(), vars.len(), "monomial length must match variable count");
            p.add_term(m, c);
        }
        p
    }

    /// Linear form `sum coeffs[i] * var_i`.
    pub fn linear(vars: &Vars, coeffs: &[Rational]) -> Self {
        assert_eq!(coeffs.len(), vars.len());
        Self::from_terms(
            vars,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(vars.len(), i), c.clone())),
        )
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Leading term in graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// `Some(d)` when every monomial has total degree `d`; the zero polynomial
    /// counts as homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Zero, or homogeneous of degree one.
    pub fn is_linear_form(&self) -> bool {
        self.is_zero() || self.homogeneous_degree() == Some(1)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_same_vars(&self, other: &MPoly) {
        assert!(
            Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars,
            "polynomials over different variable lists"
        );
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.vars);
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        (0..e).fold(MPoly::constant(&self.vars, Rational::one()), |acc, _| &acc * self)
    }

    /// Exact value at `point`.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.vars.len() {
            return Err(Error::Dimension(format!(
                "point has {} coordinates, polynomial has {} variables",
                point.len(),
                self.vars.len()
            )));
        }
        Ok(self.terms.iter().fold(Rational::zero(), |acc, (m, c)| {
            let v = m
                .0
                .iter()
                .zip(point)
                .filter(|(e, _)| **e > 0)
                .fold(c.clone(), |p, (&e, x)| p * num_traits::pow(x.clone(), e as usize));
            acc + v
        }))
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> MPoly {
        assert!(i < self.vars.len(), "variable index out of range");
        let mut out = MPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.0[i] -= 1;
            out.add_term(dm, c * rat(e as i64));
        }
        out
    }

    /// Substitutes `images[i]` for variable `i`. The result lives over the
    /// variable list of the images.
    pub fn compose(&self, images: &[MPoly]) -> Result<MPoly> {
        if images.len() != self.vars.len() {
            return Err(Error::Dimension(format!(
                "{} images for {} variables",
                images.len(),
                self.vars.len()
            )));
        }
        let target = images
            .first()
            .map(|p| p.vars.clone())
            .unwrap_or_else(|| self.vars.clone());
        let mut out = MPoly::zero(&target);
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(&target, c.clone());
            for (img, &e) in images.iter().zip(&m.0) {
                if e > 0 {
                    t = &t * &img.pow(e);
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Coefficients on the given monomial basis (monomials outside it are
    /// reported as an error so span comparisons cannot silently drop terms).
    pub fn coefficient_vector(&self, basis: &[Monomial]) -> Result<Vec<Rational>> {
        if let Some((m, _)) = self.terms.iter().find(|(m, _)| !basis.contains(m)) {
            return Err(Error::Dimension(format!("monomial {m:?} outside basis")));
        }
        Ok(basis.iter().map(|m| self.coeff(m)).collect())
    }

    /// Parses expressions such as `2z1^3 - 2*z1^2*z2 + 3/2 z4` over `vars`.
    /// Variable names are matched longest-first; `*` between factors is optional.
    pub fn parse(s: &str, vars: &Vars) -> Result<MPoly> {
        Parser {
            src: s.as_bytes(),
            pos: 0,
            vars,
        }
        .polynomial()
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a Vars,
}

impl Parser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn number(&mut self) -> Option<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()?.parse().ok()
    }

    fn variable(&mut self) -> Option<usize> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let best = self
            .vars
            .iter()
            .enumerate()
            .filter(|(_, v)| rest.starts_with(v.as_bytes()))
            .max_by_key(|(_, v)| v.len())?;
        self.pos += best.1.len();
        Some(best.0)
    }

    fn polynomial(&mut self) -> Result<MPoly> {
        let n = self.vars.len();
        let mut out = MPoly::zero(self.vars);
        let mut first = true;
        loop {
            let sign = match self.peek() {
                None if !first => break,
                None => return self.err("empty polynomial"),
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                Some(_) if first => 1,
                Some(_) => return self.err("expected '+' or '-'"),
            };
            first = false;
            let mut coeff = rat(sign);
            let mut mono = vec![0u32; n];
            let mut saw_factor = false;
            if let Some(num) = self.number() {
                coeff *= rat(num as i64);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    match self.number() {
                        Some(0) | None => return self.err("bad denominator"),
                        Some(d) => coeff /= rat(d as i64),
                    }
                }
                saw_factor = true;
            }
            loop {
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                }
                let Some(v) = self.variable() else { break };
                let mut e = 1;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    match self.number() {
                        Some(k) => e = k as u32,
                        None => return self.err("expected exponent"),
                    }
                }
                mono[v] += e;
                saw_factor = true;
            }
            if !saw_factor {
                return self.err("expected coefficient or variable");
            }
            out.add_term(Monomial(mono), coeff);
        }
        Ok(out)
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.check_same_vars(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.check_same_vars(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.check_same_vars(rhs);
        let mut out = MPoly::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&rat(-1))
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, rhs: MPoly) -> MPoly {
        &self + &rhs
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        &self - &rhs
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

/// Leading term first, e.g. `2*z1^3 - z2*z3^2 + 1/2*z4`.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let factors: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], e)
                    }
                })
                .collect();
            if factors.is_empty() {
                f.write_str(&format_rational(&abs))?;
            } else if abs.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rational(&abs), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
