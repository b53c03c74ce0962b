//! Cyclic Leibniz algebras: basis `a, a^2, ..., a^n` with
//! `[a^i, a] = a^{i+1}` for `i < n` and `[a^n, a] = sum alpha_k a^k`.

use crate::a_algebra::{battery_verdict, exhaustive_verdict};
use crate::algebra::{frattini_ideal, socle_analysis, LeibnizAlgebra, Side};
use crate::error::{Error, Result};
use crate::field::{companion_matrix, poly_factor, vector, Factorization, Field, Matrix, Poly, Subspace};
use crate::report::{Report, Status, SubspaceRecord};

/// `alphas[k - 2]` is the coefficient `alpha_k` of `a^k` in `[a^n, a]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicSpec<F: Field> {
    field: F,
    alphas: Vec<F::Elem>,
}

impl<F: Field> CyclicSpec<F> {
    pub fn new(field: &F, alphas: Vec<F::Elem>) -> Result<Self> {
        if alphas.is_empty() {
            return Err(Error::BadSpec("need n >= 2, i.e. at least one alpha".into()));
        }
        if alphas.iter().any(|a| !field.contains(a)) {
            return Err(Error::BadSpec("alpha outside the field".into()));
        }
        Ok(CyclicSpec {
            field: field.clone(),
            alphas,
        })
    }

    /// Checks that `alphas` has exactly `n - 1` entries.
    pub fn with_dim(field: &F, n: usize, alphas: Vec<F::Elem>) -> Result<Self> {
        if n < 2 || alphas.len() + 1 != n {
            return Err(Error::BadSpec(format!(
                "n = {n} needs {} alphas, got {}",
                n.saturating_sub(1),
                alphas.len()
            )));
        }
        Self::new(field, alphas)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.alphas.len() + 1
    }

    pub fn alphas(&self) -> &[F::Elem] {
        &self.alphas
    }

    pub fn alpha2(&self) -> &F::Elem {
        &self.alphas[0]
    }

    pub fn build(&self) -> LeibnizAlgebra<F> {
        let f = &self.field;
        let n = self.n();
        let names = (1..=n)
            .map(|i| if i == 1 { "a".to_string() } else { format!("a^{i}") })
            .collect();
        let mut table = vec![vec![vector::zero(f, n); n]; n];
        for i in 0..n - 1 {
            table[i][0][i + 1] = f.one();
        }
        for (k, alpha) in self.alphas.iter().enumerate() {
            table[n - 1][0][k + 1] = alpha.clone();
        }
        LeibnizAlgebra::new(f, names, table).expect("cyclic tables satisfy the Leibniz identity")
    }

    /// `p(x) = x^n - alpha_n x^{n-1} - ... - alpha_2 x`.
    pub fn polynomial(&self) -> Poly<F> {
        let f = &self.field;
        let mut coeffs = vec![f.zero()];
        coeffs.extend(self.alphas.iter().map(|a| f.neg(a)));
        coeffs.push(f.one());
        Poly::new(f, coeffs)
    }

    /// `b = a^n - alpha_n a^{n-1} - ... - alpha_2 a`, the coefficients of `p`
    /// read as coordinates on `a, ..., a^n`.
    pub fn complement_element(&self) -> Vec<F::Elem> {
        let p = self.polynomial();
        (1..=self.n()).map(|k| p.coeff(k)).collect()
    }
}

/// Outcome of [`classify_cyclic`]. Claims are `None` when they do not apply
/// (`alpha_2 = 0`) or when the polynomial could not be factored.
#[derive(Debug, Clone)]
pub struct CyclicClassification<F: Field> {
    pub polynomial: Poly<F>,
    pub is_a: bool,
    pub complement: Option<Vec<F::Elem>>,
    pub factorization: Option<Factorization<F>>,
    pub distinct_factors: Option<usize>,
    pub monolithic_claim: Option<bool>,
    pub phi_free_claim: Option<bool>,
    pub report: Report,
}

/// Structure constants of `l` in the basis given by the columns of `basis`.
pub fn rebase<F: Field>(l: &LeibnizAlgebra<F>, basis: &[Vec<F::Elem>], names: Vec<String>) -> Result<LeibnizAlgebra<F>> {
    let f = l.field();
    let m = Matrix::from_columns(f, l.dim(), basis)?;
    if m.rank() != l.dim() || basis.len() != l.dim() {
        return Err(Error::BadSpec("new basis is not a basis".into()));
    }
    let table = basis
        .iter()
        .map(|u| {
            basis
                .iter()
                .map(|v| m.solve(&l.multiply(u, v)?))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    LeibnizAlgebra::new(f, names, table)
}

/// For `n = 2` and `alpha_2 != 0`, the generator `a / alpha_2` satisfies
/// `[a'^2, a'] = a'^2`. Returns the rebased algebra.
pub fn normalized_two_dim<F: Field>(spec: &CyclicSpec<F>) -> Option<LeibnizAlgebra<F>> {
    let f = spec.field();
    if spec.n() != 2 || f.is_zero(spec.alpha2()) {
        return None;
    }
    let l = spec.build();
    let scale = f.inv(spec.alpha2()).expect("nonzero");
    let u = vector::scale(f, &scale, &l.basis_vector(0));
    let u2 = l.multiply(&u, &u).expect("dimension");
    rebase(&l, &[u, u2], l.names().to_vec()).ok()
}

/// Checks every structural statement about a cyclic algebra and, over a
/// finite field within budget, compares them with the generic enumeration.
pub fn classify_cyclic<F: Field>(spec: &CyclicSpec<F>, budget: u64, seed: u64) -> Result<CyclicClassification<F>> {
    let f = spec.field();
    let l = spec.build();
    let n = spec.n();
    let p = spec.polynomial();
    let mut r = Report::new(format!("cyclic algebra, p(x) = {p}"));
    let is_a = !f.is_zero(spec.alpha2());

    let ra = l.op(&l.basis_vector(0), Side::Right);
    r.check("companion", "R_a is the companion matrix of p(x)", ra == companion_matrix(&p)?, "", vec![]);

    let verdict_anchor = "A-algebra iff alpha_2 != 0";
    let verdict = if f.is_finite() {
        exhaustive_verdict(&l, budget).map(|v| v.value())
    } else {
        Ok(battery_verdict(&l, budget, seed).value())
    };
    match verdict {
        Ok(Some(v)) => r.check(
            "a-iff",
            verdict_anchor,
            v == is_a,
            format!("verdict {v}, alpha_2 != 0 is {is_a}"),
            vec![],
        ),
        Ok(None) => r.skip("a-iff", verdict_anchor, "verdict unknown"),
        Err(e) => r.skip("a-iff", verdict_anchor, e.to_string()),
    }

    let complement = is_a.then(|| spec.complement_element());
    let comp_anchor = "L = L^2 ∔ Fb, b^2 = 0, [L^2, b] = L^2";
    if let Some(b) = &complement {
        let fb = Subspace::span(f, n, std::slice::from_ref(b))?;
        let l2 = l.derived();
        let b2 = l.multiply(b, b)?;
        let direct = fb.dim() == 1 && fb.intersect(&l2)?.is_zero() && fb.sum(&l2)?.is_full();
        let onto = l.product_space(&l2, &fb) == l2;
        r.check(
            "complement",
            comp_anchor,
            vector::is_zero(f, &b2) && l.is_subalgebra(&fb) && direct && onto,
            "",
            vec![SubspaceRecord::new(&fb)],
        );
    } else {
        r.skip("complement", comp_anchor, "alpha_2 = 0");
    }

    let factorization = match poly_factor(&p) {
        Ok(fac) => {
            let text: Vec<_> = fac
                .factors
                .iter()
                .map(|(q, m)| if *m == 1 { format!("({q})") } else { format!("({q})^{m}") })
                .collect();
            r.push("factorization", "p(x) factored into monic irreducibles", Status::Pass, text.join(" "), vec![]);
            Some(fac)
        }
        Err(Error::UnsupportedFactorization(d)) => {
            r.skip(
                "factorization",
                "p(x) factored into monic irreducibles",
                format!("factorization unavailable for degree {d}"),
            );
            None
        }
        Err(e) => return Err(e),
    };
    let distinct_factors = factorization.as_ref().map(Factorization::distinct_count);
    let monolithic_claim = distinct_factors.filter(|_| is_a).map(|r| r == 2);
    let phi_free_claim = factorization
        .as_ref()
        .filter(|_| is_a)
        .map(|fac| fac.factors.len() == 2 && fac.factors.iter().all(|(_, m)| *m == 1));

    let mono_anchor = "monolithic iff p(x) has exactly two distinct irreducible factors";
    let phi_anchor = "monolithic and φ-free iff p(x) = x p_2(x), p_2 irreducible";
    match (monolithic_claim, phi_free_claim) {
        (Some(mono), Some(phi)) if f.is_finite() => {
            match (socle_analysis(&l, budget), frattini_ideal(&l, budget)) {
                (Ok(soc), Ok(frat)) => {
                    r.check(
                        "monolithic",
                        mono_anchor,
                        soc.monolithic == mono,
                        format!("{} minimal ideals, claim {mono}", soc.minimal_ideals.len()),
                        soc.minimal_ideals.iter().map(SubspaceRecord::new).collect(),
                    );
                    let actual = soc.monolithic && frat.is_zero();
                    r.check(
                        "phi-free",
                        phi_anchor,
                        actual == phi,
                        format!("dim φ = {}, claim {phi}", frat.dim()),
                        vec![SubspaceRecord::new(&frat)],
                    );
                }
                (Err(e), _) | (_, Err(e)) => {
                    r.skip("monolithic", mono_anchor, e.to_string());
                    r.skip("phi-free", phi_anchor, e.to_string());
                }
            }
        }
        (Some(mono), Some(phi)) => {
            r.push("monolithic", mono_anchor, Status::NotApplicable, format!("claim {mono}; requires a finite field to cross-check"), vec![]);
            r.push("phi-free", phi_anchor, Status::NotApplicable, format!("claim {phi}; requires a finite field to cross-check"), vec![]);
        }
        _ => {
            let why = if is_a { "factorization unavailable" } else { "alpha_2 = 0" };
            r.skip("monolithic", mono_anchor, why);
            r.skip("phi-free", phi_anchor, why);
        }
    }

    let two_anchor = "two-dimensional with [a^2, a] = a^2 after rescaling a";
    if let Some(m) = normalized_two_dim(spec) {
        let u2 = m.basis_vector(1);
        let ok = m.multiply(&u2, &m.basis_vector(0))? == u2;
        r.check("two-dim", two_anchor, ok, "generator a / alpha_2", vec![]);
    }

    Ok(CyclicClassification {
        polynomial: p,
        is_a,
        complement,
        factorization,
        distinct_factors,
        monolithic_claim,
        phi_free_claim,
        report: r,
    })
}

/// All specs with the given `n` over a finite field, in lexicographic order
/// of the alphas.
pub fn sweep<F: Field>(field: &F, n: usize) -> Vec<CyclicSpec<F>> {
    let q = field.order().expect("finite field");
    let k = n - 1;
    let total = q.pow(k as u32);
    (0..total)
        .map(|mut idx| {
            let mut alphas = vec![field.zero(); k];
            for a in alphas.iter_mut().rev() {
                *a = field.element(idx % q).expect("in range");
                idx /= q;
            }
            CyclicSpec::new(field, alphas).expect("valid")
        })
        .collect()
}
