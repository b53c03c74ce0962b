//! Coordinate vectors as plain `Vec<F::Elem>`.

use super::Field;

pub fn zero<F: Field>(field: &F, n: usize) -> Vec<F::Elem> {
    vec![field.zero(); n]
}

pub fn unit<F: Field>(field: &F, n: usize, i: usize) -> Vec<F::Elem> {
    let mut v = zero(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero<F: Field>(field: &F, v: &[F::Elem]) -> bool {
    v.iter().all(|x| field.is_zero(x))
}

pub fn add<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().zip(b).map(|(x, y)| field.add(x, y)).collect()
}

pub fn sub<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().zip(b).map(|(x, y)| field.sub(x, y)).collect()
}

pub fn scale<F: Field>(field: &F, c: &F::Elem, v: &[F::Elem]) -> Vec<F::Elem> {
    v.iter().map(|x| field.mul(c, x)).collect()
}

/// `y += c * x`
pub fn axpy<F: Field>(field: &F, c: &F::Elem, x: &[F::Elem], y: &mut [F::Elem]) {
    if field.is_zero(c) {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !field.is_zero(xi) {
            *yi = field.add(yi, &field.mul(c, xi));
        }
    }
}

/// Linear combination `sum coeffs[i] * vectors[i]`.
pub fn combine<F: Field>(
    field: &F,
    n: usize,
    coeffs: &[F::Elem],
    vectors: &[Vec<F::Elem>],
) -> Vec<F::Elem> {
    let mut out = zero(field, n);
    for (c, v) in coeffs.iter().zip(vectors) {
        axpy(field, c, v, &mut out);
    }
    out
}

/// Scales `v` so that its first nonzero entry is one.
pub fn normalize<F: Field>(field: &F, v: &[F::Elem]) -> Vec<F::Elem> {
    match v.iter().find(|x| !field.is_zero(x)) {
        Some(lead) => {
            let inv = field.inv(lead).expect("nonzero lead");
            scale(field, &inv, v)
        }
        None => v.to_vec(),
    }
}

/// All vectors of `F^n` with nonzero leading entry equal to one, in index
/// order. Finite fields only; the caller bounds the count.
pub fn projective_points<F: Field>(field: &F, n: usize) -> Vec<Vec<F::Elem>> {
    let q = field.order().expect("finite field");
    let mut out = Vec::new();
    for lead in 0..n {
        let free = n - lead - 1;
        let count = q.pow(free as u32);
        for idx in 0..count {
            let mut v = zero(field, n);
            v[lead] = field.one();
            let mut x = idx;
            for slot in v[lead + 1..].iter_mut().rev() {
                *slot = field.element(x % q).unwrap();
                x /= q;
            }
            out.push(v);
        }
    }
    out
}

/// Every vector of `F^n` in index order (first coordinate most significant).
pub fn all_vectors<F: Field>(field: &F, n: usize) -> impl Iterator<Item = Vec<F::Elem>> + '_ {
    let q = field.order().expect("finite field");
    let count = q.pow(n as u32);
    (0..count).map(move |idx| {
        let mut v = zero(field, n);
        let mut x = idx;
        for slot in v.iter_mut().rev() {
            *slot = field.element(x % q).unwrap();
            x /= q;
        }
        v
    })
}
