use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Field, Matrix, Rationals};
use crate::error::{Error, Result};

/// Univariate polynomial, coefficients from the constant term up, with no
/// trailing zeros (the zero polynomial has no coefficients).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Poly<F> {
    pub fn new(field: &F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &F) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn one(field: &F) -> Self {
        Self::new(field, vec![field.one()])
    }

    /// The polynomial `x`.
    pub fn x(field: &F) -> Self {
        Self::new(field, vec![field.zero(), field.one()])
    }

    pub fn monomial(field: &F, c: F::Elem, degree: usize) -> Self {
        let mut coeffs = vec![field.zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(field, coeffs)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| self.field.is_one(c))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc).expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        Self::new(f, self.coeffs.iter().map(|x| f.mul(c, x)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(f, (0..n).map(|i| f.add(&self.coeff(i), &other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(f, (0..n).map(|i| f.sub(&self.coeff(i), &other.coeff(i))).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f);
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        Self::new(f, out)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(&self.field), |acc, _| acc.mul(self))
    }

    /// Euclidean division; fails on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let f = &self.field;
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let lead_inv = f.inv(divisor.leading().unwrap())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(f), self.clone()));
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(&rem[k + dd], &lead_inv);
            if f.is_zero(&c) {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = f.sub(&rem[k + i], &f.mul(&c, d));
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(f, quot), Self::new(f, rem)))
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.div_rem(other).is_err() && other.is_zero()
            || other.div_rem(self).is_ok_and(|(_, r)| r.is_zero())
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let f = &self.field;
        if self.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if f.is_zero(c) {
                continue;
            }
            let mut text = f.format(c);
            let negative = text.starts_with('-');
            if negative {
                text.remove(0);
            }
            let sep = match (first, negative) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let coeff = if text == "1" && deg > 0 { String::new() } else { text };
            let var = match deg {
                0 => String::new(),
                1 => "x".to_string(),
                d => format!("x^{d}"),
            };
            write!(out, "{sep}{coeff}{var}")?;
            first = false;
        }
        Ok(())
    }
}

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn poly_gcd<F: Field>(f: &Poly<F>, g: &Poly<F>) -> Result<Poly<F>> {
    if f.field != g.field {
        return Err(Error::FieldMismatch);
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b)?;
        a = b;
        b = r;
    }
    Ok(a.monic())
}

/// Companion matrix of a monic polynomial: `e_i -> e_{i+1}` and the last
/// column holds the negated lower coefficients.
pub fn companion_matrix<F: Field>(p: &Poly<F>) -> Result<Matrix<F>> {
    let f = &p.field;
    let n = match p.degree() {
        Some(n) if n >= 1 && p.is_monic() => n,
        _ => {
            return Err(Error::ShapeMismatch(
                "companion matrix needs a monic non-constant polynomial".into(),
            ))
        }
    };
    let mut m = Matrix::zeros(f, n, n);
    for j in 0..n - 1 {
        m.set(j + 1, j, f.one());
    }
    for i in 0..n {
        m.set(i, n - 1, f.neg(&p.coeffs[i]));
    }
    Ok(m)
}

/// `f = unit * prod factor^multiplicity` with monic irreducible factors,
/// sorted by degree then coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization<F: Field> {
    pub unit: F::Elem,
    pub factors: Vec<(Poly<F>, usize)>,
}

impl<F: Field> Factorization<F> {
    pub fn product(&self, field: &F) -> Poly<F> {
        self.factors
            .iter()
            .fold(Poly::new(field, vec![self.unit.clone()]), |acc, (p, m)| {
                acc.mul(&p.pow(*m))
            })
    }

    pub fn distinct_count(&self) -> usize {
        self.factors.len()
    }

    fn push(&mut self, p: Poly<F>) {
        match self.factors.iter_mut().find(|(q, _)| *q == p) {
            Some((_, m)) => *m += 1,
            None => self.factors.push((p, 1)),
        }
    }

    fn sort(&mut self) {
        self.factors
            .sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()).then_with(|| a.coeffs.cmp(&b.coeffs)));
    }
}

/// Factors `f` into monic irreducibles.
///
/// Finite fields use exhaustive trial division by monic polynomials of
/// increasing degree. Over the rationals only degree at most 4 is supported.
pub fn poly_factor<F: Field>(f: &Poly<F>) -> Result<Factorization<F>> {
    let field = &f.field;
    let Some(deg) = f.degree() else {
        return Err(Error::ZeroPolynomial);
    };
    let unit = f.leading().unwrap().clone();
    let monic = f.monic();
    if field.is_finite() {
        let mut fac = trial_division(&monic);
        fac.unit = unit;
        fac.sort();
        return Ok(fac);
    }
    if deg > 4 {
        return Err(Error::UnsupportedFactorization(deg));
    }
    let rational: Vec<BigRational> = monic
        .coeffs
        .iter()
        .map(|c| match field.to_literal(c) {
            super::ScalarLit::Text(s) => Rationals::parse(&s).expect("own literal"),
            _ => unreachable!("infinite fields are the rationals"),
        })
        .collect();
    let mut fac = Factorization {
        unit,
        factors: Vec::new(),
    };
    for factor in factor_rational_monic(&rational) {
        let coeffs = factor
            .iter()
            .map(|c| field.from_rational(c))
            .collect::<Result<Vec<_>>>()?;
        fac.push(Poly::new(field, coeffs));
    }
    fac.sort();
    Ok(fac)
}

fn trial_division<F: Field>(monic: &Poly<F>) -> Factorization<F> {
    let field = &monic.field;
    let q = field.order().expect("finite");
    let mut fac = Factorization {
        unit: field.one(),
        factors: Vec::new(),
    };
    let mut rest = monic.clone();
    let mut d = 1usize;
    while rest.degree().unwrap_or(0) >= 2 * d {
        let count = q.pow(d as u32);
        for idx in 0..count {
            let mut coeffs = Vec::with_capacity(d + 1);
            let mut x = idx;
            for _ in 0..d {
                coeffs.push(field.element(x % q).unwrap());
                x /= q;
            }
            coeffs.push(field.one());
            let cand = Poly::new(field, coeffs);
            loop {
                let (quot, r) = rest.div_rem(&cand).expect("monic divisor");
                if !r.is_zero() {
                    break;
                }
                fac.push(cand.clone());
                rest = quot;
            }
        }
        d += 1;
    }
    if rest.degree().is_some_and(|d| d >= 1) {
        fac.push(rest);
    }
    fac
}

/// Monic irreducible factors (with repetition) of a monic rational
/// polynomial of degree at most 4, coefficients constant term first.
fn factor_rational_monic(m: &[BigRational]) -> Vec<Vec<BigRational>> {
    let n = m.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    // y = D x turns m into a monic integer polynomial g(y) = D^n m(y / D).
    let denom = m.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let g: Vec<BigInt> = m
        .iter()
        .enumerate()
        .map(|(i, c)| (c * BigRational::from_integer(denom.pow((n - i) as u32))).to_integer())
        .collect();
    let mut out = Vec::new();
    for h in factor_integer_monic(g) {
        // h(D x) / D^deg(h)
        let d = h.len() - 1;
        let back: Vec<BigRational> = h
            .iter()
            .enumerate()
            .map(|(i, c)| BigRational::new(c * denom.pow(i as u32), denom.pow(d as u32)))
            .collect();
        out.push(back);
    }
    out
}

fn eval_int(g: &[BigInt], x: &BigInt) -> BigInt {
    g.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Synthetic division by `y - r`.
fn deflate(g: &[BigInt], r: &BigInt) -> Vec<BigInt> {
    let n = g.len() - 1;
    let mut out = vec![BigInt::zero(); n];
    let mut carry = BigInt::zero();
    for i in (0..n).rev() {
        carry = &g[i + 1] + &carry * r;
        out[i] = carry.clone();
    }
    out
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn factor_integer_monic(mut g: Vec<BigInt>) -> Vec<Vec<BigInt>> {
    let mut out = Vec::new();
    // rational roots of a monic integer polynomial are integers dividing g(0)
    'roots: while g.len() > 1 {
        if g[0].is_zero() {
            out.push(vec![BigInt::zero(), BigInt::one()]);
            g = deflate(&g, &BigInt::zero());
            continue;
        }
        for d in divisors(&g[0]) {
            for r in [d.clone(), -d] {
                if eval_int(&g, &r).is_zero() {
                    out.push(vec![-r.clone(), BigInt::one()]);
                    g = deflate(&g, &r);
                    continue 'roots;
                }
            }
        }
        break;
    }
    match g.len() - 1 {
        0 => {}
        4 => match split_quartic(&g) {
            Some((a, b)) => {
                out.push(a);
                out.push(b);
            }
            None => out.push(g),
        },
        // root-free quadratics and cubics are irreducible
        _ => out.push(g),
    }
    out
}

/// Splits a root-free monic integer quartic into two monic integer
/// quadratics `(y^2 + p y + s0)(y^2 + r y + s1)`, if possible.
fn split_quartic(g: &[BigInt]) -> Option<(Vec<BigInt>, Vec<BigInt>)> {
    let (e, d, c, b) = (&g[0], &g[1], &g[2], &g[3]);
    for q0 in divisors(e) {
        for s0 in [q0.clone(), -q0] {
            let s1 = e / &s0;
            let candidate = if s0 != s1 {
                let num = d - b * &s1;
                let den = &s0 - &s1;
                if !(&num % &den).is_zero() {
                    continue;
                }
                let p = num / den;
                let r = b - &p;
                Some((p, r))
            } else {
                if d != &(b * &s0) {
                    continue;
                }
                let disc: BigInt = b * b - BigInt::from(4) * (c - BigInt::from(2) * &s0);
                if disc.is_negative() {
                    continue;
                }
                let root = disc.sqrt();
                if &root * &root != disc || (b + &root).is_odd() {
                    continue;
                }
                let p: BigInt = (b + &root) / 2;
                let r = b - &p;
                Some((p, r))
            };
            let Some((p, r)) = candidate else { continue };
            if &s0 + &s1 + &p * &r == *c && &p * &s1 + &r * &s0 == *d {
                return Some((
                    vec![s0.clone(), p, BigInt::one()],
                    vec![s1.clone(), r, BigInt::one()],
                ));
            }
        }
    }
    None
}
