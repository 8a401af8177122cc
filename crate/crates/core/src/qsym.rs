//! Quasi-symmetric polynomials in a bounded list of variables, in the two
//! composition-indexed bases this crate works with: `p^lambda`, the sum of
//! monomials placing the parts of `lambda` on strictly increasing variable
//! indices, and `q^lambda`, the signed sum `(-1)^len(lambda)` times the sum
//! over weakly increasing (class-collapsing) placements.
//!
//! Both products expand with the same merge-pattern structure constants; the
//! dense expansions here exist so that claim, and every transition formula,
//! can be checked against direct polynomial arithmetic.

use std::collections::BTreeMap;

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::compositions::{
    all_compositions, coarsenings, structure_constants_of_pair, Composition,
};
use crate::laurent::{frak_a_comp, frak_b_comp, LaurentPoly};

/// Which of the two quasi-symmetric bases coefficients refer to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Basis {
    P,
    Q,
}

/// A dense polynomial in a fixed number of variables, used as the oracle the
/// structure-constant arithmetic is checked against. Keys are exponent
/// vectors; scalars stay Laurent for uniformity with the rest of the crate.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct DensePolynomial {
    vars: usize,
    terms: BTreeMap<Vec<usize>, LaurentPoly>,
}

impl DensePolynomial {
    pub fn zero(vars: usize) -> Self {
        DensePolynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: usize) -> Self {
        let mut p = DensePolynomial::zero(vars);
        p.add_term(vec![0; vars], LaurentPoly::one());
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of the monomial with the given exponent vector.
    pub fn coeff(&self, exps: &[usize]) -> LaurentPoly {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(LaurentPoly::zero)
    }

    /// Terms as (exponent vector, coefficient) pairs in key order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exps: Vec<usize>, c: LaurentPoly) {
        assert_eq!(exps.len(), self.vars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &DensePolynomial) {
        assert_eq!(self.vars, other.vars, "variable counts");
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &DensePolynomial) {
        assert_eq!(self.vars, other.vars, "variable counts");
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.neg());
        }
    }

    pub fn mul(&self, other: &DensePolynomial) -> DensePolynomial {
        assert_eq!(self.vars, other.vars, "variable counts");
        let mut out = DensePolynomial::zero(self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exps: Vec<usize> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exps, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> DensePolynomial {
        let mut out = DensePolynomial::zero(self.vars);
        for (e, k) in &self.terms {
            out.add_term(e.clone(), k.mul(c));
        }
        out
    }

    /// Reinterpret in a larger variable list (new variables get exponent 0).
    pub fn widen(&self, vars: usize) -> DensePolynomial {
        assert!(vars >= self.vars);
        let mut out = DensePolynomial::zero(vars);
        for (e, c) in &self.terms {
            let mut exps = e.clone();
            exps.resize(vars, 0);
            out.add_term(exps, c.clone());
        }
        out
    }

    /// The monomial `X_i^e` (1-based variable index).
    pub fn variable_power(vars: usize, i: usize, e: usize) -> DensePolynomial {
        assert!(1 <= i && i <= vars, "variable index");
        let mut exps = vec![0; vars];
        exps[i - 1] = e;
        let mut p = DensePolynomial::zero(vars);
        p.add_term(exps, LaurentPoly::one());
        p
    }
}

/// Dense expansion of `p^lambda` in `n` variables: the sum over strictly
/// increasing index tuples `j_1 < ... < j_l` of `X_{j_1}^{lambda_1} ...`.
/// Zero when `lambda` has more than `n` parts.
pub fn expand_p(lambda: &Composition, n: usize) -> DensePolynomial {
    let parts = lambda.parts();
    let mut out = DensePolynomial::zero(n);
    if parts.len() > n {
        return out;
    }
    fn rec(
        parts: &[usize],
        n: usize,
        next: usize,
        exps: &mut Vec<usize>,
        out: &mut DensePolynomial,
    ) {
        let placed = exps.iter().filter(|&&e| e > 0).count();
        if placed == parts.len() {
            out.add_term(exps.clone(), LaurentPoly::one());
            return;
        }
        let remaining = parts.len() - placed;
        for j in next..=n.saturating_sub(remaining - 1) {
            exps[j - 1] = parts[placed];
            rec(parts, n, j + 1, exps, out);
            exps[j - 1] = 0;
        }
    }
    rec(parts, n, 1, &mut vec![0; n], &mut out);
    out
}

/// Dense expansion of `q^lambda` in `n` variables: `(-1)^len(lambda)` times
/// the sum over weakly increasing placements `a_1 <= ... <= a_l`, where equal
/// indices accumulate their parts on one variable.
pub fn expand_q(lambda: &Composition, n: usize) -> DensePolynomial {
    let parts = lambda.parts();
    let mut out = DensePolynomial::zero(n);
    if n == 0 && !parts.is_empty() {
        return out;
    }
    fn rec(
        parts: &[usize],
        n: usize,
        pos: usize,
        min: usize,
        exps: &mut Vec<usize>,
        out: &mut DensePolynomial,
    ) {
        if pos == parts.len() {
            out.add_term(exps.clone(), LaurentPoly::one());
            return;
        }
        for a in min..=n {
            exps[a - 1] += parts[pos];
            rec(parts, n, pos + 1, a, exps, out);
            exps[a - 1] -= parts[pos];
        }
    }
    rec(parts, n, 0, 1, &mut vec![0; n], &mut out);
    if lambda.len() % 2 == 1 {
        let mut neg = DensePolynomial::zero(n);
        neg.sub_assign(&out);
        return neg;
    }
    out
}

/// A finitely supported linear combination of basis elements indexed by
/// compositions, truncated to a variable bound: compositions with more parts
/// than the bound are identically zero in that many variables and are
/// dropped on insertion.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSymVector {
    bound: usize,
    coeffs: BTreeMap<Composition, LaurentPoly>,
}

impl QSymVector {
    pub fn zero(bound: usize) -> Self {
        QSymVector {
            bound,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(bound: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Composition, LaurentPoly)>,
    {
        let mut v = QSymVector::zero(bound);
        for (lam, c) in terms {
            v.add_term(lam, c);
        }
        v
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn add_term(&mut self, lam: Composition, c: LaurentPoly) {
        if c.is_zero() || lam.len() > self.bound {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(lam) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &QSymVector) {
        assert_eq!(self.bound, other.bound, "variable bounds");
        for (lam, c) in &other.coeffs {
            self.add_term(lam.clone(), c.clone());
        }
    }

    pub fn coeff(&self, lam: &Composition) -> LaurentPoly {
        self.coeffs
            .get(lam)
            .cloned()
            .unwrap_or_else(LaurentPoly::zero)
    }

    /// Terms in listing order.
    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &LaurentPoly)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &LaurentPoly) -> QSymVector {
        let mut out = QSymVector::zero(self.bound);
        for (lam, k) in &self.coeffs {
            out.add_term(lam.clone(), k.mul(c));
        }
        out
    }

    /// Lower the variable bound, dropping compositions that no longer fit.
    pub fn restrict(&self, bound: usize) -> QSymVector {
        assert!(bound <= self.bound, "restrict only lowers the bound");
        let mut out = QSymVector::zero(bound);
        for (lam, c) in &self.coeffs {
            out.add_term(lam.clone(), c.clone());
        }
        out
    }

    /// Product via the shared merge-pattern structure constants. The same
    /// formula is the product in both the `p` and the `q` basis, so this is
    /// basis-agnostic; compositions exceeding the bound are dropped.
    pub fn multiply(&self, other: &QSymVector) -> QSymVector {
        assert_eq!(self.bound, other.bound, "variable bounds");
        let mut out = QSymVector::zero(self.bound);
        for (eta, ce) in &self.coeffs {
            for (mu, cm) in &other.coeffs {
                let c = ce.mul(cm);
                for (lam, count) in structure_constants_of_pair(eta, mu) {
                    out.add_term(lam, c.scale(&count.into()));
                }
            }
        }
        out
    }

    /// Dense expansion in `n <= bound` variables, reading coefficients against
    /// the chosen basis.
    pub fn expand(&self, n: usize, basis: Basis) -> DensePolynomial {
        assert!(n <= self.bound, "expansion beyond the truncation bound");
        let mut out = DensePolynomial::zero(n);
        for (lam, c) in &self.coeffs {
            let base = match basis {
                Basis::P => expand_p(lam, n),
                Basis::Q => expand_q(lam, n),
            };
            out.add_assign(&base.scale(c));
        }
        out
    }
}

impl Serialize for QSymVector {
    /// JSON array of `{composition, coefficient}` pairs in listing order.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(serde::Serialize)]
        struct Term<'a> {
            composition: &'a Composition,
            coefficient: &'a LaurentPoly,
        }
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for (lam, c) in &self.coeffs {
            seq.serialize_element(&Term {
                composition: lam,
                coefficient: c,
            })?;
        }
        seq.end()
    }
}

/// `q^lambda` written in the `p` basis:
/// `q^lambda = (-1)^len(lambda) sum over coarsenings mu of p^mu`.
pub fn q_in_p(lambda: &Composition) -> QSymVector {
    let sign = LaurentPoly::constant(if lambda.len().is_multiple_of(2) {
        1
    } else {
        -1
    });
    QSymVector::from_terms(
        lambda.size().max(1),
        coarsenings(lambda).into_iter().map(|mu| (mu, sign.clone())),
    )
}

/// `p^lambda` written in the `q` basis; the same signed coarsening sum.
pub fn p_in_q(lambda: &Composition) -> QSymVector {
    q_in_p(lambda)
}

/// The degree-`k` component of the series `a`, as coefficients on the chosen
/// basis: `a_k = sum a(lambda) p^lambda = sum b(lambda) q^lambda` over
/// compositions of `k`. The bound is `k`, which truncates nothing.
pub fn a_series_component(k: usize, basis: Basis) -> QSymVector {
    QSymVector::from_terms(
        k,
        all_compositions(k).into_iter().map(|lam| {
            let c = match basis {
                Basis::P => frak_a_comp(&lam),
                Basis::Q => frak_b_comp(&lam),
            };
            (lam, c)
        }),
    )
}

/// The degree-`k` component of the inverse series `b`; coefficient families
/// swap relative to [`a_series_component`].
pub fn b_series_component(k: usize, basis: Basis) -> QSymVector {
    QSymVector::from_terms(
        k,
        all_compositions(k).into_iter().map(|lam| {
            let c = match basis {
                Basis::P => frak_b_comp(&lam),
                Basis::Q => frak_a_comp(&lam),
            };
            (lam, c)
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{frak_a, frak_b, xi};

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec())
    }

    fn single(lam: &Composition, bound: usize) -> QSymVector {
        QSymVector::from_terms(bound, [(lam.clone(), LaurentPoly::one())])
    }

    /// Re-read a vector at a bound of at least `n`. Only honest when nothing
    /// was truncated out of `v`, as with a fresh series component.
    fn widen_to(v: &QSymVector, n: usize) -> QSymVector {
        QSymVector::from_terms(
            n.max(v.bound()),
            v.terms().map(|(l, c)| (l.clone(), c.clone())),
        )
    }

    #[test]
    fn expand_p_display_case() {
        // p^(1,2) in four variables: sum over i < j of X_i X_j^2.
        let p = expand_p(&c(&[1, 2]), 4);
        assert_eq!(p.num_terms(), 6);
        for (i, j) in [(1usize, 2usize), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)] {
            let mut exps = vec![0; 4];
            exps[i - 1] = 1;
            exps[j - 1] = 2;
            assert_eq!(p.coeff(&exps), LaurentPoly::one(), "i={i}, j={j}");
        }
        assert!(expand_p(&c(&[1, 1, 1]), 2).is_zero());
        assert_eq!(expand_p(&Composition::empty(), 3), DensePolynomial::one(3));
    }

    #[test]
    fn expand_q_display_case() {
        // q^(3,2) in three variables has even length, so no global sign:
        // X1^3 X2^2 + X1^3 X3^2 + X2^3 X3^2 + X1^5 + X2^5 + X3^5.
        let p = expand_q(&c(&[3, 2]), 3);
        assert_eq!(p.num_terms(), 6);
        assert_eq!(p.coeff(&[3, 2, 0]), LaurentPoly::one());
        assert_eq!(p.coeff(&[3, 0, 2]), LaurentPoly::one());
        assert_eq!(p.coeff(&[0, 3, 2]), LaurentPoly::one());
        assert_eq!(p.coeff(&[5, 0, 0]), LaurentPoly::one());
        assert_eq!(p.coeff(&[0, 5, 0]), LaurentPoly::one());
        assert_eq!(p.coeff(&[0, 0, 5]), LaurentPoly::one());
        // Odd length carries the sign.
        let p = expand_q(&c(&[1]), 2);
        assert_eq!(p.coeff(&[1, 0]), LaurentPoly::constant(-1));
        assert_eq!(p.coeff(&[0, 1]), LaurentPoly::constant(-1));
        assert_eq!(expand_q(&Composition::empty(), 2), DensePolynomial::one(2));
    }

    #[test]
    fn basis_change_vectors() {
        let v = q_in_p(&c(&[1, 1]));
        assert_eq!(v.coeff(&c(&[1, 1])), LaurentPoly::one());
        assert_eq!(v.coeff(&c(&[2])), LaurentPoly::one());
        let v = q_in_p(&c(&[1]));
        assert_eq!(v.coeff(&c(&[1])), LaurentPoly::constant(-1));
        let v = p_in_q(&c(&[2, 1]));
        assert_eq!(v.coeff(&c(&[2, 1])), LaurentPoly::one());
        assert_eq!(v.coeff(&c(&[3])), LaurentPoly::one());
    }

    #[test]
    fn basis_change_matches_dense() {
        for k in 0..=4usize {
            for lam in all_compositions(k) {
                let n = k.max(1);
                assert_eq!(
                    q_in_p(&lam).expand(n, Basis::P),
                    expand_q(&lam, n),
                    "q^{lam} in p basis"
                );
                assert_eq!(
                    p_in_q(&lam).expand(n, Basis::Q),
                    expand_p(&lam, n),
                    "p^{lam} in q basis"
                );
            }
        }
    }

    #[test]
    fn basis_change_is_involutive() {
        // The two transition matrices are mutually inverse on each size class.
        for k in 0..=5usize {
            let comps = all_compositions(k);
            for lam in &comps {
                // Expand q^lam into p, then each p back into q; collect coefficients.
                let via_p = q_in_p(lam);
                let mut back = QSymVector::zero(k.max(1));
                for (mu, cmu) in via_p.terms() {
                    let inner = p_in_q(mu);
                    for (nu, cnu) in inner.terms() {
                        back.add_term(nu.clone(), cmu.mul(cnu));
                    }
                }
                for nu in &comps {
                    let expected = if nu == lam {
                        LaurentPoly::one()
                    } else {
                        LaurentPoly::zero()
                    };
                    assert_eq!(back.coeff(nu), expected, "lam = {lam}, nu = {nu}");
                }
            }
        }
    }

    #[test]
    fn product_example() {
        // p^(1) * p^(1) = 2 p^(1,1) + p^(2).
        let p1 = single(&c(&[1]), 2);
        let sq = p1.multiply(&p1);
        assert_eq!(sq.coeff(&c(&[1, 1])), LaurentPoly::constant(2));
        assert_eq!(sq.coeff(&c(&[2])), LaurentPoly::one());
        // With bound 1 the two-part term is truncated away.
        let p1 = single(&c(&[1]), 1);
        let sq = p1.multiply(&p1);
        assert!(sq.coeff(&c(&[1, 1])).is_zero());
        assert_eq!(sq.coeff(&c(&[2])), LaurentPoly::one());
    }

    #[test]
    fn products_match_dense_in_both_bases() {
        for total in 0..=5usize {
            for ke in 0..=total {
                let km = total - ke;
                for eta in all_compositions(ke) {
                    for mu in all_compositions(km) {
                        let n = total.max(1);
                        let u = single(&eta, n);
                        let v = single(&mu, n);
                        let prod = u.multiply(&v);
                        let dense_p = expand_p(&eta, n).mul(&expand_p(&mu, n));
                        assert_eq!(prod.expand(n, Basis::P), dense_p, "p: {eta} * {mu}");
                        let dense_q = expand_q(&eta, n).mul(&expand_q(&mu, n));
                        assert_eq!(prod.expand(n, Basis::Q), dense_q, "q: {eta} * {mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn series_components() {
        let a2p = a_series_component(2, Basis::P);
        assert_eq!(a2p.coeff(&c(&[2])), frak_a(2));
        assert_eq!(a2p.coeff(&c(&[1, 1])), xi().pow(2));
        let a2q = a_series_component(2, Basis::Q);
        assert_eq!(a2q.coeff(&c(&[2])), frak_b(2));
        assert_eq!(a2q.coeff(&c(&[1, 1])), xi().pow(2));
        let b2p = b_series_component(2, Basis::P);
        assert_eq!(b2p.coeff(&c(&[2])), frak_b(2));
        // The p- and q-basis descriptions of a_k agree as polynomials.
        for k in 0..=4usize {
            for n in 1..=4usize {
                let ap = widen_to(&a_series_component(k, Basis::P), n).expand(n, Basis::P);
                let aq = widen_to(&a_series_component(k, Basis::Q), n).expand(n, Basis::Q);
                assert_eq!(ap, aq, "a_{k} in {n} vars");
                let bp = widen_to(&b_series_component(k, Basis::P), n).expand(n, Basis::P);
                let bq = widen_to(&b_series_component(k, Basis::Q), n).expand(n, Basis::Q);
                assert_eq!(bp, bq, "b_{k} in {n} vars");
            }
        }
    }

    #[test]
    fn series_recurrence_dense() {
        // sum_{k<r} a_k(X_1..X_{n-1}) =
        //   sum_{s<r} b(s) X_n^s sum_{t<r-s} a_t(X_1..X_n).
        for n in 1..=4usize {
            for r in 1..=4usize {
                let mut lhs = DensePolynomial::zero(n);
                for k in 0..r {
                    let ak = widen_to(&a_series_component(k, Basis::P), n - 1);
                    lhs.add_assign(&ak.expand(n - 1, Basis::P).widen(n));
                }
                let mut rhs = DensePolynomial::zero(n);
                for s in 0..r {
                    let xs = DensePolynomial::variable_power(n, n, s);
                    let mut inner = DensePolynomial::zero(n);
                    for t in 0..r - s {
                        let at = widen_to(&a_series_component(t, Basis::P), n);
                        inner.add_assign(&at.expand(n, Basis::P));
                    }
                    rhs.add_assign(&xs.scale(&frak_b(s)).mul(&inner));
                }
                assert_eq!(lhs, rhs, "n = {n}, r = {r}");
            }
        }
    }

    #[test]
    fn serialization_listing_order() {
        let v = QSymVector::from_terms(
            2,
            [
                (c(&[1, 1]), LaurentPoly::one()),
                (c(&[2]), xi()),
                (c(&[1]), LaurentPoly::constant(3)),
            ],
        );
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(
            json,
            r#"[{"composition":"[1]","coefficient":{"0":3}},{"composition":"[2]","coefficient":{"-1":1,"0":-2,"1":1}},{"composition":"[1,1]","coefficient":{"0":1}}]"#
        );
    }
}
