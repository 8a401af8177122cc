//! Sparse Laurent polynomials in one variable `q` with arbitrary-precision
//! integer coefficients, plus the fraction field built on them.
//!
//! Also home to the scalar families the rest of the crate consumes: the
//! balanced q-integer `[n]_q` (the unique Laurent polynomial with
//! `q^n - q^-n = [n]_q (q - q^-1)`), the element `xi = q - 2 + q^-1`, and the
//! series coefficients `a(s)`, `b(s)` together with their products over
//! composition parts.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::compositions::Composition;
use crate::Error;

/// A Laurent polynomial in `q`, stored sparsely as exponent -> coefficient.
///
/// Zero coefficients are never stored; the zero polynomial is the empty map.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        LaurentPoly {
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    /// A constant polynomial.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        LaurentPoly::monomial(0, c)
    }

    /// The single term `c * q^exp`.
    pub fn monomial(exp: i64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        LaurentPoly { coeffs }
    }

    /// The variable `q`.
    pub fn q() -> Self {
        LaurentPoly::monomial(1, 1)
    }

    /// The inverse variable `q^-1`.
    pub fn q_inv() -> Self {
        LaurentPoly::monomial(-1, 1)
    }

    /// Build from a list of `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff(0).is_one()
    }

    /// The coefficient of `q^exp` (zero if absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterate terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Lowest exponent present, if any.
    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Highest exponent present, if any.
    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// If the polynomial is a single term, that term as `(exponent, coefficient)`.
    pub fn single_term(&self) -> Option<(i64, &BigInt)> {
        if self.coeffs.len() == 1 {
            self.coeffs.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    /// True when the polynomial is `q^m` or `-q^m` for some `m`.
    pub fn is_unit_monomial(&self) -> bool {
        matches!(self.single_term(), Some((_, c)) if c.magnitude().is_one())
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &LaurentPoly) {
        for (e, c) in &other.coeffs {
            self.add_term(*e, c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &LaurentPoly) {
        for (e, c) in &other.coeffs {
            self.add_term(*e, -c.clone());
        }
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        r.add_assign(other);
        r
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        r.sub_assign(other);
        r
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut r = LaurentPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                r.add_term(e1 + e2, c1 * c2);
            }
        }
        r
    }

    /// Multiply by an integer scalar.
    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Multiply by `q^shift`.
    pub fn shift(&self, by: i64) -> LaurentPoly {
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e + by, c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut r = LaurentPoly::one();
        for _ in 0..n {
            r = r.mul(self);
        }
        r
    }

    /// Sum of coefficients, i.e. the evaluation at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Exact division: `Some(c)` with `self = divisor * c`, or `None` when the
    /// quotient does not exist in the Laurent ring.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let (sa, mut a) = self.to_dense();
        let (sb, b) = divisor.to_dense();
        if a.len() < b.len() {
            return None;
        }
        let lead_b = b.last().expect("nonzero divisor");
        let mut quot = vec![BigInt::zero(); a.len() - b.len() + 1];
        for k in (0..quot.len()).rev() {
            let lead_a = a[k + b.len() - 1].clone();
            if lead_a.is_zero() {
                continue;
            }
            let (co, rem) = lead_a.div_rem(lead_b);
            if !rem.is_zero() {
                return None;
            }
            for (i, bi) in b.iter().enumerate() {
                a[k + i] -= &co * bi;
            }
            quot[k] = co;
        }
        if a.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(LaurentPoly::from_dense(sa - sb, quot))
    }

    /// Greatest common divisor up to units, normalised to lowest exponent
    /// zero and a positive leading coefficient. `gcd(0, 0)` is zero.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        fn normal(p: &LaurentPoly) -> LaurentPoly {
            let (_, mut d) = p.to_dense();
            if d.last().is_some_and(|c| c.is_negative()) {
                for c in &mut d {
                    *c = -std::mem::take(c);
                }
            }
            LaurentPoly::from_dense(0, d)
        }
        if self.is_zero() {
            return normal(other);
        }
        if other.is_zero() {
            return normal(self);
        }
        let (_, a) = self.to_dense();
        let (_, b) = other.to_dense();
        LaurentPoly::from_dense(0, gcd_dense(&a, &b))
    }

    /// Write as `q^shift * p(q)` with `p` an ordinary polynomial whose constant
    /// term is nonzero; returns `(shift, coefficients of p)`. Zero maps to `(0, [])`.
    pub(crate) fn to_dense(&self) -> (i64, Vec<BigInt>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().expect("nonzero");
        let mut dense = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.coeffs {
            dense[(e - lo) as usize] = c.clone();
        }
        (lo, dense)
    }

    pub(crate) fn from_dense(shift: i64, dense: Vec<BigInt>) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (i, c) in dense.into_iter().enumerate() {
            p.add_term(shift + i as i64, c);
        }
        p
    }
}

impl fmt::Display for LaurentPoly {
    /// Human form with ascending exponents, e.g. `q^-1 - 2 + q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.magnitude();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let qpart = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            };
            if qpart.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{qpart}")?;
            } else {
                write!(f, "{mag}{qpart}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for LaurentPoly {
    /// JSON object mapping exponent (as a string) to integer coefficient, in
    /// ascending exponent order. Coefficients outside the 64-bit range fall
    /// back to decimal strings.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.coeffs.len()))?;
        for (e, c) in self.terms() {
            let key = e.to_string();
            match c.to_i64() {
                Some(v) => map.serialize_entry(&key, &v)?,
                None => map.serialize_entry(&key, &c.to_string())?,
            }
        }
        map.end()
    }
}

/// Binomial coefficient as a big integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// The balanced q-integer `[n]_q`, the unique Laurent polynomial with
/// `q^n - q^-n = [n]_q (q - q^-1)`. So `[0] = 0`, `[n] = q^{n-1} + q^{n-3} +
/// ... + q^{1-n}` for positive `n`, and `[-n] = -[n]`.
pub fn balanced_qint(n: i64) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::zero();
    }
    let m = n.unsigned_abs() as i64;
    let mut p = LaurentPoly::zero();
    let mut e = m - 1;
    while e >= 1 - m {
        p.add_term(e, BigInt::one());
        e -= 2;
    }
    if n < 0 {
        p.neg()
    } else {
        p
    }
}

/// The element `xi = q^-1 (q - 1)^2 = q - 2 + q^-1`.
pub fn xi() -> LaurentPoly {
    LaurentPoly::from_terms([(-1, 1), (0, -2), (1, 1)])
}

/// Series coefficient `a(s)`: `a(0) = 1` and `a(s) = [s]_q * xi` for positive `s`.
pub fn frak_a(s: usize) -> LaurentPoly {
    if s == 0 {
        LaurentPoly::one()
    } else {
        balanced_qint(s as i64).mul(&xi())
    }
}

/// Series coefficient `b(s)`: `b(0) = 1` and `b(s) = -s * xi` for positive `s`.
pub fn frak_b(s: usize) -> LaurentPoly {
    if s == 0 {
        LaurentPoly::one()
    } else {
        xi().scale(&BigInt::from(-(s as i64)))
    }
}

/// Product of `a` over the parts of a composition: `a(lambda) = prod a(lambda_i)`.
pub fn frak_a_comp(lambda: &Composition) -> LaurentPoly {
    lambda
        .parts()
        .iter()
        .fold(LaurentPoly::one(), |acc, &p| acc.mul(&frak_a(p)))
}

/// Product of `b` over the parts of a composition.
pub fn frak_b_comp(lambda: &Composition) -> LaurentPoly {
    lambda
        .parts()
        .iter()
        .fold(LaurentPoly::one(), |acc, &p| acc.mul(&frak_b(p)))
}

/// `a(n)` computed by the closed binomial formula
/// `a(n) = sum_{m=1}^{n} C(n+m-1, 2m-1) xi^m` for positive `n`.
pub fn binomial_formula_a(n: usize) -> LaurentPoly {
    assert!(n > 0, "binomial formula applies to positive arguments");
    let mut acc = LaurentPoly::zero();
    let xi = xi();
    for m in 1..=n {
        let c = binomial((n + m - 1) as u64, (2 * m - 1) as u64);
        acc.add_assign(&xi.pow(m as u32).scale(&c));
    }
    acc
}

/// A ratio of Laurent polynomials in canonical form: numerator and denominator
/// share no polynomial factor, the denominator has lowest exponent 0 and a
/// positive leading coefficient. Powers of `q` (the units of the Laurent ring)
/// are carried by the numerator, so a ratio is a Laurent polynomial exactly
/// when its denominator is 1. Canonical form makes structural equality valid.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    /// Canonicalize `num / den`. Errors when `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                num: LaurentPoly::zero(),
                den: LaurentPoly::one(),
            });
        }
        let (sn, n0) = num.to_dense();
        let (sd, d0) = den.to_dense();
        let g = gcd_dense(&n0, &d0);
        let mut n1 = div_dense_exact(&n0, &g);
        let mut d1 = div_dense_exact(&d0, &g);
        if d1.last().expect("nonzero denominator").is_negative() {
            for c in &mut n1 {
                *c = -std::mem::take(c);
            }
            for c in &mut d1 {
                *c = -std::mem::take(c);
            }
        }
        Ok(RationalFunction {
            num: LaurentPoly::from_dense(sn - sd, n1),
            den: LaurentPoly::from_dense(0, d1),
        })
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RationalFunction {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn zero() -> Self {
        RationalFunction::from_laurent(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        RationalFunction::from_laurent(LaurentPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    /// The underlying Laurent polynomial when the denominator is 1.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn add(&self, other: &RationalFunction) -> RationalFunction {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        RationalFunction::new(num, self.den.mul(&other.den)).expect("nonzero denominators")
    }

    pub fn sub(&self, other: &RationalFunction) -> RationalFunction {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RationalFunction {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RationalFunction) -> RationalFunction {
        RationalFunction::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("nonzero denominators")
    }

    /// Multiplicative inverse; errors on zero.
    pub fn invert(&self) -> Result<RationalFunction, Error> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &RationalFunction) -> Result<RationalFunction, Error> {
        Ok(self.mul(&other.invert()?))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// Dense integer-polynomial helpers backing gcd computation. Coefficient index
// is the power of q; invariant: last entry nonzero for nonzero polynomials.

fn trim_dense(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn scale_down(p: &[BigInt], d: &BigInt) -> Vec<BigInt> {
    p.iter().map(|c| c / d).collect()
}

/// Pseudo-remainder of `a` by `b` (nonzero `b`, deg a >= deg b), made primitive.
fn prem_primitive(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let lead_b = b.last().expect("nonzero divisor").clone();
    while r.len() >= b.len() {
        let lead_r = r.last().expect("trimmed").clone();
        let shift = r.len() - b.len();
        for c in &mut r {
            *c = &*c * &lead_b;
        }
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &lead_r * bi;
        }
        trim_dense(&mut r);
        if r.is_empty() {
            return r;
        }
    }
    let c = content(&r);
    if !c.is_one() {
        r = scale_down(&r, &c);
    }
    r
}

/// Gcd over the integer polynomial ring, including content, with a positive
/// leading coefficient.
fn gcd_dense(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let ca = content(a);
    let cb = content(b);
    let cg = ca.gcd(&cb);
    let mut pa = scale_down(a, &ca);
    let mut pb = scale_down(b, &cb);
    if pa.len() < pb.len() {
        std::mem::swap(&mut pa, &mut pb);
    }
    while !pb.is_empty() {
        let r = prem_primitive(&pa, &pb);
        pa = pb;
        pb = r;
    }
    let mut g: Vec<BigInt> = pa.iter().map(|c| c * &cg).collect();
    if g.last().is_some_and(|c| c.is_negative()) {
        for c in &mut g {
            *c = -std::mem::take(c);
        }
    }
    g
}

/// Exact dense division (panics if not exact; callers divide by a known gcd).
fn div_dense_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let pa = LaurentPoly::from_dense(0, a.to_vec());
    let pb = LaurentPoly::from_dense(0, b.to_vec());
    let q = pa
        .exact_div(&pb)
        .expect("division by a common factor is exact");
    let (shift, dense) = q.to_dense();
    assert!(shift >= 0, "quotient of ordinary polynomials");
    let mut out = vec![BigInt::zero(); shift as usize];
    out.extend(dense);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn qint_small_values() {
        assert!(balanced_qint(0).is_zero());
        assert_eq!(balanced_qint(1), LaurentPoly::one());
        assert_eq!(balanced_qint(2), lp(&[(-1, 1), (1, 1)]));
        assert_eq!(balanced_qint(3), lp(&[(-2, 1), (0, 1), (2, 1)]));
        assert_eq!(balanced_qint(-2), lp(&[(-1, -1), (1, -1)]));
    }

    #[test]
    fn qint_defining_identity() {
        // q^n - q^-n = [n]_q (q - q^-1), for both signs of n.
        let bracket = lp(&[(1, 1), (-1, -1)]);
        for n in -30i64..=30 {
            let lhs = lp(&[(n, 1), (-n, -1)]);
            assert_eq!(lhs, balanced_qint(n).mul(&bracket), "n = {n}");
        }
    }

    #[test]
    fn qint_via_fraction_field() {
        for n in 1i64..=10 {
            let num = lp(&[(n, 1), (-n, -1)]);
            let den = lp(&[(1, 1), (-1, -1)]);
            let rf = RationalFunction::new(num, den).unwrap();
            assert_eq!(rf.as_laurent(), Some(&balanced_qint(n)), "n = {n}");
        }
    }

    #[test]
    fn xi_value_and_factorization() {
        assert_eq!(xi(), lp(&[(-1, 1), (0, -2), (1, 1)]));
        // xi * q = (q - 1)^2
        assert_eq!(xi().mul(&LaurentPoly::q()), lp(&[(0, 1), (1, -2), (2, 1)]));
        assert_eq!(xi().eval_at_one(), BigInt::zero());
    }

    #[test]
    fn frak_values_single_parts() {
        let xi = xi();
        assert_eq!(frak_a(0), LaurentPoly::one());
        assert_eq!(frak_b(0), LaurentPoly::one());
        assert_eq!(frak_a(1), xi.clone());
        assert_eq!(frak_b(1), xi.neg());
        // a(2) = xi^2 + 2 xi, a(3) = xi^3 + 4 xi^2 + 3 xi
        assert_eq!(frak_a(2), xi.pow(2).add(&xi.scale(&2.into())));
        assert_eq!(
            frak_a(3),
            xi.pow(3)
                .add(&xi.pow(2).scale(&4.into()))
                .add(&xi.scale(&3.into()))
        );
        assert_eq!(frak_b(3), xi.scale(&(-3).into()));
    }

    #[test]
    fn binomial_formula_matches_frak_a() {
        for n in 1..=20 {
            assert_eq!(binomial_formula_a(n), frak_a(n), "n = {n}");
        }
    }

    #[test]
    fn series_convolution_is_delta() {
        // sum_{s+t=r} a(s) b(t) = [r == 0]
        for r in 0..=30usize {
            let mut acc = LaurentPoly::zero();
            for s in 0..=r {
                acc.add_assign(&frak_a(s).mul(&frak_b(r - s)));
            }
            let expected = if r == 0 {
                LaurentPoly::one()
            } else {
                LaurentPoly::zero()
            };
            assert_eq!(acc, expected, "r = {r}");
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(xi().to_string(), "q^-1 - 2 + q");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(lp(&[(0, -1), (2, 3)]).to_string(), "-1 + 3q^2");
        assert_eq!(lp(&[(1, -1)]).to_string(), "-q");
    }

    #[test]
    fn json_form() {
        assert_eq!(
            serde_json::to_string(&xi()).unwrap(),
            r#"{"-1":1,"0":-2,"1":1}"#
        );
        assert_eq!(serde_json::to_string(&LaurentPoly::zero()).unwrap(), "{}");
    }

    #[test]
    fn exact_division() {
        let a = lp(&[(-1, 1), (0, -2), (1, 1)]);
        let b = lp(&[(0, -1), (1, 1)]);
        // xi = q^-1 (q-1)^2
        let quotient = a.exact_div(&b).unwrap();
        assert_eq!(quotient.mul(&b), a);
        assert_eq!(lp(&[(0, 1), (1, 1)]).exact_div(&lp(&[(0, 2)])), None);
        assert_eq!(
            lp(&[(0, 1), (1, 1)]).exact_div(&lp(&[(0, 1), (1, -1)])),
            None
        );
    }

    #[test]
    fn rational_canonical_forms() {
        let q = LaurentPoly::q;
        // (q^2 - 1) / (q - 1) = q + 1
        let rf = RationalFunction::new(lp(&[(2, 1), (0, -1)]), lp(&[(1, 1), (0, -1)])).unwrap();
        assert_eq!(rf.as_laurent(), Some(&lp(&[(0, 1), (1, 1)])));
        // 1 / q = q^-1 (units migrate to the numerator)
        let rf = RationalFunction::new(LaurentPoly::one(), q()).unwrap();
        assert_eq!(rf.as_laurent(), Some(&LaurentPoly::q_inv()));
        // (q - 1) / (2q - 2) = 1 / 2
        let rf = RationalFunction::new(lp(&[(1, 1), (0, -1)]), lp(&[(1, 2), (0, -2)])).unwrap();
        assert_eq!(rf.numerator(), &LaurentPoly::one());
        assert_eq!(rf.denominator(), &LaurentPoly::constant(2));
        // denominator sign is normalized
        let rf = RationalFunction::new(LaurentPoly::one(), lp(&[(0, 1), (1, -1)])).unwrap();
        assert!(rf.denominator().terms().last().unwrap().1 > &BigInt::zero());
        assert!(RationalFunction::new(q(), LaurentPoly::zero()).is_err());
        assert!(RationalFunction::zero().invert().is_err());
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec(((-6i64..=6), (-20i64..=20)), 0..6)
            .prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.sub(&a), LaurentPoly::zero());
        }

        #[test]
        fn exact_div_roundtrip(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let p = a.mul(&b);
            prop_assert_eq!(p.exact_div(&b).expect("constructed multiple"), a);
        }

        #[test]
        fn rational_equality_is_cross_multiplication(
            a in arb_poly(), b in arb_poly(), c in arb_poly(), d in arb_poly()
        ) {
            prop_assume!(!b.is_zero() && !d.is_zero());
            let x = RationalFunction::new(a.clone(), b.clone()).unwrap();
            let y = RationalFunction::new(c.clone(), d.clone()).unwrap();
            prop_assert_eq!(x == y, a.mul(&d) == c.mul(&b));
        }

        #[test]
        fn rational_field_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assume!(!c.is_zero());
            let c = RationalFunction::new(LaurentPoly::one(), c).unwrap();
            let a = RationalFunction::from_laurent(a);
            let b = RationalFunction::from_laurent(b);
            let lhs = a.add(&b).mul(&c);
            let rhs = a.mul(&c).add(&b.mul(&c));
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(c.mul(&c.invert().unwrap()), RationalFunction::one());
        }
    }
}
