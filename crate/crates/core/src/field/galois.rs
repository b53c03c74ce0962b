use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::{Field, FieldDescriptor, ScalarLit};
use crate::error::{Error, Result};

/// Largest prime accepted for a prime field (products must fit in `u64`).
const MAX_PRIME: u64 = (1 << 31) - 1;
/// Largest order accepted for a proper extension (log/exp tables).
const MAX_EXTENSION_ORDER: u64 = 1 << 24;

/// The finite field GF(p^k).
///
/// An element is stored as the index `c_0 + c_1 p + ... + c_{k-1} p^{k-1}` of
/// its coefficient vector modulo the defining polynomial. Index order is the
/// canonical element order used by every enumeration in the crate.
#[derive(Clone)]
pub struct Gf(Arc<GfInner>);

struct GfInner {
    p: u64,
    k: u32,
    q: u64,
    modulus: Vec<u64>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl Gf {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if p > MAX_PRIME {
            return Err(Error::InvalidField(format!("prime {p} exceeds {MAX_PRIME}")));
        }
        Ok(Gf(Arc::new(GfInner {
            p,
            k: 1,
            q: p,
            modulus: vec![0, 1],
            exp: Vec::new(),
            log: Vec::new(),
        })))
    }

    /// GF(p^k) defined by `modulus` (constant term first, monic, degree k).
    pub fn extension(p: u64, k: u32, modulus: &[u64]) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidField("extension degree must be at least 1".into()));
        }
        let base = Gf::prime(p)?;
        if modulus.len() != k as usize + 1 || modulus[k as usize] != 1 {
            return Err(Error::InvalidField(format!(
                "modulus must be monic of degree {k}"
            )));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField("modulus coefficients must lie in [0, p)".into()));
        }
        if k == 1 {
            return Ok(base);
        }
        let q = p
            .checked_pow(k)
            .filter(|&q| q <= MAX_EXTENSION_ORDER)
            .ok_or_else(|| Error::InvalidField(format!("GF({p}^{k}) is too large")))?;
        if !is_irreducible_mod_p(modulus, p) {
            return Err(Error::InvalidField(format!(
                "modulus {modulus:?} is reducible over GF({p})"
            )));
        }
        let mut inner = GfInner {
            p,
            k,
            q,
            modulus: modulus.to_vec(),
            exp: Vec::new(),
            log: Vec::new(),
        };
        inner.build_tables();
        Ok(Gf(Arc::new(inner)))
    }

    /// GF(q) for a prime power `q`, using the first monic irreducible
    /// polynomial (in index order) as modulus for proper extensions.
    pub fn with_order(q: u64) -> Result<Self> {
        let (p, k) = prime_power(q)
            .ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?;
        if k == 1 {
            return Gf::prime(p);
        }
        let modulus = first_irreducible(p, k);
        Gf::extension(p, k, &modulus)
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.k
    }

    pub fn size(&self) -> u64 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    fn digits(&self, mut e: u32) -> Vec<u64> {
        let p = self.0.p;
        (0..self.0.k)
            .map(|_| {
                let d = e as u64 % p;
                e = (e as u64 / p) as u32;
                d
            })
            .collect()
    }

    fn from_digits(&self, digits: &[u64]) -> u32 {
        digits
            .iter()
            .rev()
            .fold(0u64, |acc, &d| acc * self.0.p + d) as u32
    }

    fn pow_prime(&self, mut base: u64, mut e: u64) -> u64 {
        let p = self.0.p;
        let mut acc = 1u64;
        base %= p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    }
}

impl GfInner {
    /// Multiplies two digit vectors modulo the defining polynomial.
    fn mul_digits(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let k = self.k as usize;
        let p = self.p;
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for deg in (k..prod.len()).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            for (i, &m) in self.modulus[..k].iter().enumerate() {
                let idx = deg - k + i;
                prod[idx] = (prod[idx] + (p - c) * m % p) % p;
            }
            prod[deg] = 0;
        }
        prod.truncate(k);
        prod
    }

    fn build_tables(&mut self) {
        let q = self.q;
        let p = self.p;
        let k = self.k as usize;
        let to_digits = |mut e: u64| -> Vec<u64> {
            (0..k)
                .map(|_| {
                    let d = e % p;
                    e /= p;
                    d
                })
                .collect()
        };
        let from_digits = |d: &[u64]| d.iter().rev().fold(0u64, |acc, &x| acc * p + x);
        for g in 2..q {
            let gd = to_digits(g);
            let mut exp = Vec::with_capacity((q - 1) as usize);
            let mut cur = to_digits(1);
            let mut primitive = true;
            for i in 0..q - 1 {
                let idx = from_digits(&cur);
                if i > 0 && idx == 1 {
                    primitive = false;
                    break;
                }
                exp.push(idx as u32);
                cur = self.mul_digits(&cur, &gd);
            }
            if !primitive {
                continue;
            }
            let mut log = vec![0u32; q as usize];
            for (i, &e) in exp.iter().enumerate() {
                log[e as usize] = i as u32;
            }
            self.exp = exp;
            self.log = log;
            return;
        }
        unreachable!("the multiplicative group of a finite field is cyclic");
    }
}

impl fmt::Debug for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.k == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{}; {:?})", self.0.p, self.0.k, self.0.modulus)
        }
    }
}

impl PartialEq for Gf {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.k == other.0.k && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Gf {}

impl Hash for Gf {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.k.hash(state);
        self.0.modulus.hash(state);
    }
}

impl Field for Gf {
    type Elem = u32;

    fn descriptor(&self) -> FieldDescriptor {
        if self.0.k == 1 {
            FieldDescriptor::PrimeField { p: self.0.p }
        } else {
            FieldDescriptor::ExtensionField {
                p: self.0.p,
                k: self.0.k,
                modulus: self.0.modulus.clone(),
            }
        }
    }

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1
    }

    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let p = self.0.p;
        if self.0.k == 1 {
            return ((*a as u64 + *b as u64) % p) as u32;
        }
        let (mut x, mut y) = (*a as u64, *b as u64);
        let (mut out, mut scale) = (0u64, 1u64);
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * scale;
            x /= p;
            y /= p;
            scale *= p;
        }
        out as u32
    }

    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        self.add(a, &self.neg(b))
    }

    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        if *a == 0 || *b == 0 {
            return 0;
        }
        if self.0.k == 1 {
            return ((*a as u64 * *b as u64) % self.0.p) as u32;
        }
        let inner = &self.0;
        let s = (inner.log[*a as usize] as u64 + inner.log[*b as usize] as u64) % (inner.q - 1);
        inner.exp[s as usize]
    }

    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        let p = self.0.p;
        if self.0.k == 1 {
            return ((p - *a as u64) % p) as u32;
        }
        let (mut x, mut out, mut scale) = (*a as u64, 0u64, 1u64);
        while x > 0 {
            out += ((p - x % p) % p) * scale;
            x /= p;
            scale *= p;
        }
        out as u32
    }

    fn inv(&self, a: &u32) -> Result<u32> {
        if *a == 0 {
            return Err(Error::DivisionByZero);
        }
        if self.0.k == 1 {
            return Ok(self.pow_prime(*a as u64, self.0.p - 2) as u32);
        }
        let inner = &self.0;
        let l = inner.log[*a as usize] as u64;
        Ok(inner.exp[((inner.q - 1 - l) % (inner.q - 1)) as usize])
    }

    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.0.p as i64) as u32
    }

    fn from_rational(&self, r: &BigRational) -> Result<u32> {
        let p = BigInt::from(self.0.p);
        let reduce = |x: &BigInt| x.mod_floor(&p).to_u64().expect("residue fits") as u32;
        let den = reduce(r.denom());
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.mul(&reduce(r.numer()), &self.inv(&den)?))
    }

    fn contains(&self, a: &u32) -> bool {
        (*a as u64) < self.0.q
    }

    fn order(&self) -> Option<u64> {
        Some(self.0.q)
    }

    fn characteristic(&self) -> u64 {
        self.0.p
    }

    fn element(&self, index: u64) -> Option<u32> {
        (index < self.0.q).then_some(index as u32)
    }

    fn to_literal(&self, a: &u32) -> ScalarLit {
        ScalarLit::Coeffs(self.digits(*a))
    }

    fn from_literal(&self, lit: &ScalarLit) -> Result<u32> {
        let p = self.0.p;
        match lit {
            ScalarLit::Int(v) if self.0.k == 1 && *v >= 0 && (*v as u64) < p => Ok(*v as u32),
            ScalarLit::Coeffs(c) if c.len() == self.0.k as usize => {
                if c.iter().any(|&d| d >= p) {
                    return Err(Error::FieldParseError(format!(
                        "coefficients {c:?} must lie in [0, {p})"
                    )));
                }
                Ok(self.from_digits(c))
            }
            other => Err(Error::FieldParseError(format!(
                "'{other}' is not an element of {}",
                self.descriptor()
            ))),
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if q % p != 0 {
        p = q;
    }
    let (mut rest, mut k) = (q, 0u32);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

/// Remainder of `f` modulo the monic `g`, coefficients mod `p`, constant term first.
fn rem_mod_p(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        if lead != 0 {
            for (i, &c) in g.iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - lead) * c % p) % p;
            }
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

/// Trial division by every monic polynomial of degree at most `deg/2`.
fn is_irreducible_mod_p(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut g: Vec<u64> = Vec::with_capacity(d + 1);
            let mut x = idx;
            for _ in 0..d {
                g.push(x % p);
                x /= p;
            }
            g.push(1);
            if rem_mod_p(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn first_irreducible(p: u64, k: u32) -> Vec<u64> {
    let count = p.pow(k);
    (0..count)
        .map(|idx| {
            let mut g: Vec<u64> = Vec::with_capacity(k as usize + 1);
            let mut x = idx;
            for _ in 0..k {
                g.push(x % p);
                x /= p;
            }
            g.push(1);
            g
        })
        .find(|g| is_irreducible_mod_p(g, p))
        .expect("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composite_and_reducible() {
        assert!(Gf::prime(9).is_err());
        assert!(Gf::prime(1).is_err());
        // x^2 + 1 = (x+1)^2 over GF(2)
        assert!(Gf::extension(2, 2, &[1, 0, 1]).is_err());
        assert!(Gf::extension(2, 2, &[1, 1, 0]).is_err());
        assert!(Gf::with_order(12).is_err());
    }

    #[test]
    fn default_moduli() {
        assert_eq!(Gf::with_order(4).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(Gf::with_order(9).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(Gf::with_order(8).unwrap().modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for q in [2u64, 3, 4, 5, 8, 9] {
            let f = Gf::with_order(q).unwrap();
            let elems: Vec<u32> = (0..q).map(|i| f.element(i).unwrap()).collect();
            for a in &elems {
                assert_eq!(f.add(a, &f.neg(a)), 0);
                if *a != 0 {
                    assert_eq!(f.mul(a, &f.inv(a).unwrap()), 1, "GF({q}) inverse of {a}");
                }
                for b in &elems {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in &elems {
                        let lhs = f.mul(a, &f.add(b, c));
                        let rhs = f.add(&f.mul(a, b), &f.mul(a, c));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn rational_reduction() {
        let f = Gf::prime(5).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(f.from_rational(&half).unwrap(), 3);
        let bad = BigRational::new(1.into(), 10.into());
        assert_eq!(f.from_rational(&bad), Err(Error::DivisionByZero));
        assert_eq!(f.from_i64(-1), 4);
    }

    #[test]
    fn literals() {
        let f = Gf::with_order(9).unwrap();
        let e = f.from_literal(&ScalarLit::Coeffs(vec![2, 1])).unwrap();
        assert_eq!(e, 5);
        assert_eq!(f.to_literal(&e), ScalarLit::Coeffs(vec![2, 1]));
        assert!(f.from_literal(&ScalarLit::Coeffs(vec![3, 0])).is_err());
        assert!(f.from_literal(&ScalarLit::Int(1)).is_err());
        let g = Gf::prime(3).unwrap();
        assert_eq!(g.from_literal(&ScalarLit::Int(2)).unwrap(), 2);
        assert!(g.from_literal(&ScalarLit::Int(3)).is_err());
    }
}
