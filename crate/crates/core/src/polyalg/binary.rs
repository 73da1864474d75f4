//! Binary forms: homogeneous polynomials in two variables, viewed as
//! describing finitely many points of P^1 with multiplicities.
//!
//! A form of degree d with coefficient `c[i]` on `x1^i x2^(d-i)` is
//! dehomogenized at `x2 = 1` to the univariate `sum c[i] t^i`. The point
//! `(1,0)` is a root of multiplicity `d - deg` of that univariate polynomial.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::Matrix;
use super::poly::{MPoly, Monomial, Vars};
use super::rational::{rat, Rational};
use crate::error::{Error, Result};

/// Univariate polynomial, ascending powers, no trailing zeros.
type Uni = Vec<Rational>;

/// Degree and coefficients of a nonzero binary form.
pub fn binary_coeffs(f: &MPoly) -> Result<(u32, Vec<Rational>)> {
    if f.nvars() != 2 {
        return Err(Error::NotAForm(format!(
            "binary form expected, polynomial has {} variables",
            f.nvars()
        )));
    }
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    let d = f
        .homogeneous_degree()
        .ok_or_else(|| Error::NotAForm(format!("{f} is not homogeneous")))?;
    let coeffs = (0..=d)
        .map(|i| f.coeff(&Monomial::new(vec![i, d - i])))
        .collect();
    Ok((d, coeffs))
}

/// Builds `sum c[i] x1^i x2^(d-i)`.
pub fn binary_from_coeffs(vars: &Vars, coeffs: &[Rational]) -> MPoly {
    let d = coeffs.len().saturating_sub(1) as u32;
    MPoly::from_terms(
        vars,
        coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (Monomial::new(vec![i as u32, d - i as u32]), c.clone())),
    )
}

fn trim(mut p: Uni) -> Uni {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn uni_deg(p: &Uni) -> usize {
    p.len().saturating_sub(1)
}

fn monic(p: Uni) -> Uni {
    match p.last().cloned() {
        Some(lc) if !lc.is_zero() => p.into_iter().map(|c| c / &lc).collect(),
        _ => p,
    }
}

fn derivative(p: &Uni) -> Uni {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat(i as i64))
            .collect(),
    )
}

fn div_rem(a: &Uni, b: &Uni) -> (Uni, Uni) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut rem = a.clone();
    let db = uni_deg(b);
    let lc = b.last().expect("nonzero divisor").clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().expect("nonempty").clone() / &lc;
        for (i, bc) in b.iter().enumerate() {
            rem[shift + i] -= &c * bc;
        }
        quot[shift] = c;
        rem = trim(rem);
    }
    (trim(quot), rem)
}

/// Monic gcd; the gcd of two zero polynomials is zero.
fn uni_gcd(a: &Uni, b: &Uni) -> Uni {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !b.is_empty() {
        let (_, r) = div_rem(&a, &b);
        a = b;
        b = r;
    }
    monic(a)
}

fn exact_div(a: &Uni, b: &Uni) -> Uni {
    let (q, r) = div_rem(a, b);
    debug_assert!(r.is_empty(), "inexact polynomial division");
    q
}

/// Splits a nonzero form into (multiplicity of the point (1,0), dehomogenization).
fn split_infinity(d: u32, coeffs: &[Rational]) -> (u32, Uni) {
    let f = trim(coeffs.to_vec());
    (d - uni_deg(&f) as u32, f)
}

/// Resultant of two nonzero binary forms from the homogeneous Sylvester
/// matrix, coefficients ordered from `x1^d` down to `x2^d`.
pub fn resultant_binary(f: &MPoly, g: &MPoly) -> Result<Rational> {
    let (d, fc) = binary_coeffs(f)?;
    let (e, gc) = binary_coeffs(g)?;
    let (d, e) = (d as usize, e as usize);
    let n = d + e;
    if n == 0 {
        return Ok(Rational::one());
    }
    let mut s = Matrix::zeros(n, n);
    for row in 0..e {
        for i in 0..=d {
            s[(row, row + i)] = fc[d - i].clone();
        }
    }
    for row in 0..d {
        for i in 0..=e {
            s[(e + row, row + i)] = gc[e - i].clone();
        }
    }
    s.det()
}

/// Discriminant of a binary form of degree `d >= 2`.
///
/// Degree 2: `b^2 - 4ac` for `a x1^2 + b x1 x2 + c x2^2`. Higher degree:
/// `(-1)^(d(d-1)/2) Res(f, df/dx1) / a_d` where `a_d` is the `x1^d`
/// coefficient. The sign factor makes the two agree in degree 2. When
/// `a_d = 0` the form is first moved by `x2 -> c x1 + x2` (determinant one,
/// so the value is unchanged) with the smallest `c >= 0` making `a_d` nonzero.
pub fn discriminant_binary(f: &MPoly) -> Result<Rational> {
    let (d, c) = binary_coeffs(f)?;
    if d < 2 {
        return Err(Error::DegreeTooLow { min: 2, found: d });
    }
    if d == 2 {
        return Ok(&c[1] * &c[1] - rat(4) * &c[2] * &c[0]);
    }
    discriminant_via_resultant(f)
}

fn discriminant_via_resultant(f: &MPoly) -> Result<Rational> {
    let (d, _) = binary_coeffs(f)?;
    let vars = f.vars().clone();
    let mut shift = 0i64;
    let g = loop {
        let x1 = MPoly::var(&vars, 0);
        let x2 = MPoly::var(&vars, 1);
        let image = &x1.scale(&rat(shift)) + &x2;
        let g = f.compose(&[x1, image])?;
        if !g.coeff(&Monomial::new(vec![d, 0])).is_zero() {
            break g;
        }
        shift += 1;
    };
    let lead = g.coeff(&Monomial::new(vec![d, 0]));
    let res = resultant_binary(&g, &g.partial(0))?;
    let sign = if (d * (d - 1) / 2) % 2 == 0 { rat(1) } else { rat(-1) };
    Ok(sign * res / lead)
}

/// Greatest common divisor of binary forms, normalized so that the
/// coefficient of the highest power of `x1` is 1. Zero inputs are ignored;
/// `None` means every input is zero, so the common locus is all of P^1.
pub fn gcd_binary(forms: &[MPoly]) -> Result<Option<MPoly>> {
    let mut inf_mult: Option<u32> = None;
    let mut acc: Option<Uni> = None;
    let mut vars: Option<Vars> = None;
    for f in forms {
        if f.is_zero() {
            if f.nvars() != 2 {
                return Err(Error::NotAForm("binary form expected".into()));
            }
            continue;
        }
        let (d, c) = binary_coeffs(f)?;
        vars.get_or_insert_with(|| f.vars().clone());
        let (m, u) = split_infinity(d, &c);
        inf_mult = Some(inf_mult.map_or(m, |k| k.min(m)));
        acc = Some(match acc {
            None => monic(u),
            Some(a) => uni_gcd(&a, &u),
        });
    }
    let (Some(m), Some(g), Some(vars)) = (inf_mult, acc, vars) else {
        return Ok(None);
    };
    // x2^m times the homogenization of g: g's coefficients, then m zeros
    let mut full = g;
    full.extend(std::iter::repeat_n(Rational::zero(), m as usize));
    Ok(Some(binary_from_coeffs(&vars, &full)))
}

/// Yun decomposition of a nonzero univariate polynomial: `out[i]` is the
/// squarefree product of the factors occurring with multiplicity `i+1`.
fn yun(f: &Uni) -> Vec<Uni> {
    let mut out = Vec::new();
    if uni_deg(f) == 0 {
        return out;
    }
    let df = derivative(f);
    let a0 = uni_gcd(f, &df);
    let mut b = exact_div(f, &a0);
    let mut c = exact_div(&df, &a0);
    let mut d = sub(&c, &derivative(&b));
    while uni_deg(&b) > 0 {
        let a = uni_gcd(&b, &d);
        out.push(a.clone());
        b = exact_div(&b, &a);
        c = exact_div(&d, &a);
        d = sub(&c, &derivative(&b));
    }
    out
}

fn sub(a: &Uni, b: &Uni) -> Uni {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
                let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
                x - y
            })
            .collect(),
    )
}

/// Multiplicities of the projective roots over the algebraic closure,
/// sorted in decreasing order.
pub fn squarefree_structure(f: &MPoly) -> Result<Vec<u32>> {
    let (d, c) = binary_coeffs(f)?;
    let (m, u) = split_infinity(d, &c);
    let mut mult = Vec::new();
    if m > 0 {
        mult.push(m);
    }
    for (i, a) in yun(&u).iter().enumerate() {
        mult.extend(std::iter::repeat_n((i + 1) as u32, uni_deg(a)));
    }
    mult.sort_unstable_by(|a, b| b.cmp(a));
    Ok(mult)
}

/// Root structure of a binary form split by field of definition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryRoots {
    /// Rational points, normalized so the first nonzero coordinate is 1,
    /// with multiplicities: `(1,0)` first, then `(0,1)`, then the points `(1,s)`
    /// by increasing `s`.
    pub rational: Vec<(Vec<Rational>, u32)>,
    /// Irreducible factors of degree at least 2: (degree, multiplicity).
    pub irrational: Vec<(u32, u32)>,
}

impl BinaryRoots {
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m: Vec<u32> = self.rational.iter().map(|(_, k)| *k).collect();
        for (deg, k) in &self.irrational {
            m.extend(std::iter::repeat_n(*k, *deg as usize));
        }
        m.sort_unstable_by(|a, b| b.cmp(a));
        m
    }

    pub fn degree(&self) -> u32 {
        self.multiplicities().iter().sum()
    }
}

/// Rational roots with multiplicity, plus the degrees of the remaining
/// factors that have no rational root.
pub fn binary_roots(f: &MPoly) -> Result<BinaryRoots> {
    let (d, c) = binary_coeffs(f)?;
    let (m, u) = split_infinity(d, &c);
    let mut rational = Vec::new();
    let mut irrational = Vec::new();
    if m > 0 {
        rational.push((vec![rat(1), rat(0)], m));
    }
    let mut finite = Vec::new();
    for (i, a) in yun(&u).iter().enumerate() {
        let k = (i + 1) as u32;
        let (roots, rest) = rational_roots_squarefree(a);
        for t in roots {
            finite.push((t, k));
        }
        for deg in rest {
            irrational.push((deg, k));
        }
    }
    // t = x1/x2; the point (t,1) normalizes to (1, 1/t) unless t = 0
    finite.sort_by(|a, b| {
        let key = |t: &Rational| if t.is_zero() { None } else { Some(t.recip()) };
        key(&a.0).cmp(&key(&b.0))
    });
    for (t, k) in finite {
        let coords = if t.is_zero() {
            vec![rat(0), rat(1)]
        } else {
            vec![rat(1), t.recip()]
        };
        rational.push((coords, k));
    }
    irrational.sort_unstable();
    Ok((BinaryRoots {
        rational,
        irrational,
    })
    .normalized())
}

impl BinaryRoots {
    fn normalized(mut self) -> Self {
        // (0,1) sorts before every (1,s); keep (1,0) first as documented
        let (inf, rest): (Vec<_>, Vec<_>) = self
            .rational
            .into_iter()
            .partition(|(p, _)| p[1].is_zero());
        self.rational = inf.into_iter().chain(rest).collect();
        self
    }
}

/// Rational roots of a squarefree polynomial and the degrees of the
/// irreducible-over-Q leftovers (lumped into one entry when no further
/// rational root exists).
fn rational_roots_squarefree(f: &Uni) -> (Vec<Rational>, Vec<u32>) {
    let mut roots = Vec::new();
    let mut f = trim(f.clone());
    loop {
        match uni_deg(&f) {
            0 => return (roots, Vec::new()),
            1 => {
                roots.push(-&f[0] / &f[1]);
                return (roots, Vec::new());
            }
            2 => {
                let (a, b, c) = (&f[2], &f[1], &f[0]);
                let disc = b * b - rat(4) * a * c;
                return match rational_sqrt(&disc) {
                    Some(s) => {
                        let two_a = rat(2) * a;
                        roots.push((-b + &s) / &two_a);
                        roots.push((-b - s) / two_a);
                        (roots, Vec::new())
                    }
                    None => (roots, vec![2]),
                };
            }
            deg => match find_rational_root(&f) {
                Some(t) => {
                    f = exact_div(&f, &vec![-t.clone(), rat(1)]);
                    roots.push(t);
                }
                None => return (roots, vec![deg as u32]),
            },
        }
    }
}

fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| Rational::new(n, d))
}

/// A rational root by the rational root theorem, if any.
fn find_rational_root(f: &Uni) -> Option<Rational> {
    if f[0].is_zero() {
        return Some(Rational::zero());
    }
    let lcm = f
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let p_divs = divisors(&ints[0].abs());
    let q_divs = divisors(&ints.last().expect("nonzero").abs());
    for p in &p_divs {
        for q in &q_divs {
            for s in [1i64, -1] {
                let t = Rational::new(p * BigInt::from(s), q.clone());
                if eval_uni(f, &t).is_zero() {
                    return Some(t);
                }
            }
        }
    }
    None
}

fn eval_uni(f: &Uni, t: &Rational) -> Rational {
    f.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= *n {
        if (n % &i).is_zero() {
            let j = n / &i;
            if j != i {
                large.push(j);
            }
            small.push(i.clone());
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::poly::var_names;

    fn x() -> Vars {
        var_names("x", 2)
    }

    fn p(s: &str) -> MPoly {
        MPoly::parse(s, &x()).unwrap()
    }

    #[test]
    fn resultants() {
        assert_eq!(resultant_binary(&p("x1 x2"), &p("x1^2")).unwrap(), rat(0));
        assert_eq!(resultant_binary(&p("x1^2"), &p("x2^2")).unwrap(), rat(1));
        assert_eq!(resultant_binary(&p("x1 - x2"), &p("x1 + x2")).unwrap(), rat(2));
        assert!(resultant_binary(&MPoly::zero(&x()), &p("x1")).is_err());
    }

    #[test]
    fn discriminants() {
        assert_eq!(discriminant_binary(&p("x1 x2")).unwrap(), rat(1));
        assert_eq!(discriminant_binary(&p("x1^2")).unwrap(), rat(0));
        assert!(discriminant_binary(&p("x1")).is_err());
        assert!(discriminant_binary(&MPoly::zero(&x())).is_err());
    }

    #[test]
    fn general_discriminant_matches_quadratic_formula() {
        for s in ["x1x2", "3x1^2 - 5x1x2 + 7x2^2", "x2^2 + x1x2", "x2^2", "2x1^2 - 8x2^2"] {
            let f = p(s);
            assert_eq!(
                discriminant_via_resultant(&f).unwrap(),
                discriminant_binary(&f).unwrap(),
                "{s}"
            );
        }
    }

    #[test]
    fn cubic_discriminant() {
        // t^3 - t has roots 0, 1, -1: product of squared differences is 4
        assert_eq!(discriminant_binary(&p("x1^3 - x1x2^2")).unwrap(), rat(4));
        // same roots, leading coefficient vanishing: x1 x2 (x1 - x2)
        assert!(!discriminant_binary(&p("x1^2x2 - x1x2^2")).unwrap().is_zero());
        assert!(discriminant_binary(&p("x1^2x2")).unwrap().is_zero());
    }

    #[test]
    fn gcds() {
        assert_eq!(gcd_binary(&[p("x1^2"), p("x1x2")]).unwrap(), Some(p("x1")));
        assert_eq!(gcd_binary(&[p("x1x2")]).unwrap(), Some(p("x1x2")));
        assert_eq!(gcd_binary(&[p("x1^2 + x2^2"), p("x1")]).unwrap(), Some(p("1")));
        assert_eq!(gcd_binary(&[MPoly::zero(&x())]).unwrap(), None);
        assert_eq!(gcd_binary(&[]).unwrap(), None);
        assert_eq!(
            gcd_binary(&[p("x2^2"), MPoly::zero(&x()), p("x1x2 + x2^2")]).unwrap(),
            Some(p("x2"))
        );
        assert_eq!(gcd_binary(&[p("3x1^2 - 3x2^2")]).unwrap(), Some(p("x1^2 - x2^2")));
    }

    #[test]
    fn multiplicity_structure() {
        assert_eq!(squarefree_structure(&p("x1x2")).unwrap(), vec![1, 1]);
        assert_eq!(squarefree_structure(&p("x1^2")).unwrap(), vec![2]);
        assert_eq!(squarefree_structure(&p("x1^2x2")).unwrap(), vec![2, 1]);
        assert_eq!(squarefree_structure(&p("x2^3")).unwrap(), vec![3]);
        assert_eq!(
            squarefree_structure(&p("x1^4 + 2x1^2x2^2 + x2^4")).unwrap(),
            vec![2, 2]
        );
        assert_eq!(squarefree_structure(&p("5")).unwrap(), Vec::<u32>::new());
    }

    #[test]
    fn roots_with_multiplicity() {
        let r = binary_roots(&p("x1^2x2")).unwrap();
        assert_eq!(
            r.rational,
            vec![(vec![rat(1), rat(0)], 1), (vec![rat(0), rat(1)], 2)]
        );
        let r = binary_roots(&p("x1^2 + x2^2")).unwrap();
        assert!(r.rational.is_empty());
        assert_eq!(r.irrational, vec![(2, 1)]);
        let r = binary_roots(&p("2x1^3 - 3x1^2x2 - 3x1x2^2 + 2x2^3")).unwrap();
        assert_eq!(r.rational.len(), 3);
        assert_eq!(r.degree(), 3);
        let r = binary_roots(&p("x1^3 - 2x2^3")).unwrap();
        assert_eq!(r.irrational, vec![(3, 1)]);
    }
}
