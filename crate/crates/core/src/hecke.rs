//! Exact arithmetic in the Iwahori-Hecke algebra of the symmetric group over
//! `Z[q, q^-1]`: permutations, the `T_w` basis with its quadratic relation,
//! Jucys-Murphy operators and symmetric polynomials in them, the trace
//! pairing, increasing elements with their shapes, and a memoized recurrence
//! that evaluates pairings against quasi-symmetric monomials in the rescaled
//! Jucys-Murphy operators without any algebra products.
//!
//! Permutations act on the right: `i^(xy) = (i^x)^y`, so `T_x T_y = T_{xy}`
//! matches word concatenation.

use std::collections::{BTreeMap, HashMap};

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::compositions::{all_compositions, structure_constants_of_pair, Composition};
use crate::laurent::{frak_a_comp, LaurentPoly};
use crate::qsym::{expand_p, DensePolynomial};
use crate::Error;

/// A permutation of `{1, ..., n}` in one-line notation: `images[i-1]` is the
/// image of `i`. The derived order (lexicographic on images) fixes term
/// order inside algebra elements.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Self {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            assert!(
                1 <= v && v <= n && !seen[v],
                "one-line notation must be a bijection"
            );
            seen[v] = true;
        }
        Permutation { images }
    }

    /// The simple reflection swapping `i` and `i + 1`.
    pub fn simple(n: usize, i: usize) -> Self {
        Permutation::transposition(n, i, i + 1)
    }

    /// The transposition swapping `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        assert!(1 <= a && a < b && b <= n, "transposition entries in range");
        let mut p = Permutation::identity(n);
        p.images.swap(a - 1, b - 1);
        p
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// The image of `i` (1-based).
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// The preimage of `v`: the `i` with `i^w = v`.
    pub fn position(&self, v: usize) -> usize {
        self.images
            .iter()
            .position(|&x| x == v)
            .expect("value in range")
            + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `self` followed by `other`: `i^(xy) = (i^x)^y`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "matching ranks");
        Permutation {
            images: self.images.iter().map(|&v| other.images[v - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Coxeter length: the inversion count of the one-line notation.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Right product with a simple reflection: `w s_i` swaps the values `i`
    /// and `i + 1` wherever they appear.
    pub fn mul_simple_right(&self, i: usize) -> Permutation {
        assert!(1 <= i && i < self.n(), "generator index");
        let mut images = self.images.clone();
        images.swap(self.position(i) - 1, self.position(i + 1) - 1);
        Permutation { images }
    }

    /// Left product with a simple reflection: `s_i w` swaps positions `i`
    /// and `i + 1`.
    pub fn mul_simple_left(&self, i: usize) -> Permutation {
        assert!(1 <= i && i < self.n(), "generator index");
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// Whether right multiplication by `s_i` shortens the element.
    pub fn right_descent(&self, i: usize) -> bool {
        self.position(i) > self.position(i + 1)
    }

    /// Whether left multiplication by `s_i` shortens the element.
    pub fn left_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// A reduced word, built by stripping the smallest right descent until
    /// the identity remains.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        loop {
            let descent = (1..w.n()).find(|&i| w.right_descent(i));
            match descent {
                None => break,
                Some(i) => {
                    w = w.mul_simple_right(i);
                    word.push(i);
                }
            }
        }
        word.reverse();
        word
    }

    pub fn from_word(n: usize, word: &[usize]) -> Permutation {
        let mut w = Permutation::identity(n);
        for &i in word {
            w = w.mul_simple_right(i);
        }
        w
    }

    /// Cycle type as a partition (weakly decreasing parts summing to `n`).
    pub fn cycle_type(&self) -> Composition {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut parts = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                len += 1;
                i = self.image(i);
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Composition::new(parts)
    }

    /// Render as a word in the generators, `"s1 s2"`, or `"e"` for the
    /// identity.
    pub fn word_string(&self) -> String {
        let word = self.reduced_word();
        if word.is_empty() {
            return "e".to_string();
        }
        word.iter()
            .map(|i| format!("s{i}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.word_string())
    }
}

/// An element of the Hecke algebra of rank `n` in the `T_w` basis. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Permutation, LaurentPoly>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        HeckeElement::basis(Permutation::identity(n))
    }

    /// The basis element `T_w`.
    pub fn basis(w: Permutation) -> Self {
        let n = w.n();
        let mut h = HeckeElement::zero(n);
        h.add_term(w, LaurentPoly::one());
        h
    }

    /// The generator `T_{s_i}`.
    pub fn generator(n: usize, i: usize) -> Self {
        HeckeElement::basis(Permutation::simple(n, i))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Permutation) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: Permutation, c: LaurentPoly) {
        assert_eq!(w.n(), self.n, "matching ranks");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
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

    pub fn add_assign(&mut self, other: &HeckeElement) {
        assert_eq!(self.n, other.n, "matching ranks");
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> HeckeElement {
        HeckeElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> HeckeElement {
        let mut out = HeckeElement::zero(self.n);
        for (w, k) in &self.terms {
            out.add_term(w.clone(), k.mul(c));
        }
        out
    }

    /// Right multiplication by the generator `T_{s_i}`, term by term:
    /// `T_w T_{s_i}` is `T_{w s_i}` when the length goes up, and
    /// `q T_{w s_i} + (q - 1) T_w` when it goes down.
    pub fn right_mul_generator(&self, i: usize) -> HeckeElement {
        let q = LaurentPoly::q();
        let q1 = LaurentPoly::from_terms([(1i64, 1i64), (0, -1)]);
        let mut out = HeckeElement::zero(self.n);
        for (w, c) in &self.terms {
            let ws = w.mul_simple_right(i);
            if w.right_descent(i) {
                out.add_term(ws, c.mul(&q));
                out.add_term(w.clone(), c.mul(&q1));
            } else {
                out.add_term(ws, c.clone());
            }
        }
        out
    }

    /// Left multiplication by the generator `T_{s_i}`.
    pub fn left_mul_generator(&self, i: usize) -> HeckeElement {
        let q = LaurentPoly::q();
        let q1 = LaurentPoly::from_terms([(1i64, 1i64), (0, -1)]);
        let mut out = HeckeElement::zero(self.n);
        for (w, c) in &self.terms {
            let sw = w.mul_simple_left(i);
            if w.left_descent(i) {
                out.add_term(sw, c.mul(&q));
                out.add_term(w.clone(), c.mul(&q1));
            } else {
                out.add_term(sw, c.clone());
            }
        }
        out
    }

    /// Product, expanding whichever factor has the smaller total reduced
    /// length into generator multiplications.
    pub fn mul(&self, other: &HeckeElement) -> HeckeElement {
        assert_eq!(self.n, other.n, "matching ranks");
        let cost = |h: &HeckeElement| h.terms.keys().map(Permutation::length).sum::<usize>();
        let mut out = HeckeElement::zero(self.n);
        if cost(other) <= cost(self) {
            for (v, c) in &other.terms {
                let mut acc = self.clone();
                for i in v.reduced_word() {
                    acc = acc.right_mul_generator(i);
                }
                out.add_assign(&acc.scale(c));
            }
        } else {
            for (w, c) in &self.terms {
                let mut acc = other.clone();
                let mut word = w.reduced_word();
                word.reverse();
                for i in word {
                    acc = acc.left_mul_generator(i);
                }
                out.add_assign(&acc.scale(c));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> HeckeElement {
        let mut out = HeckeElement::one(self.n);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// The coefficient of the identity basis element.
    pub fn trace(&self) -> LaurentPoly {
        self.coeff(&Permutation::identity(self.n))
    }

    /// The bilinear pairing extending `<T_x, T_y> = q^l(x)` when `xy = 1`
    /// and `0` otherwise; computed without forming a product.
    pub fn pairing(&self, other: &HeckeElement) -> LaurentPoly {
        assert_eq!(self.n, other.n, "matching ranks");
        let mut total = LaurentPoly::zero();
        for (x, a) in &self.terms {
            let b = other.terms.get(&x.inverse());
            if let Some(b) = b {
                total.add_assign(&a.mul(b).shift(x.length() as i64));
            }
        }
        total
    }

    pub fn commutes_with(&self, other: &HeckeElement) -> bool {
        self.mul(other) == other.mul(self)
    }

    /// Whether the element commutes with every generator.
    pub fn is_central(&self) -> bool {
        (1..self.n).all(|i| self.right_mul_generator(i) == self.left_mul_generator(i))
    }
}

impl Serialize for HeckeElement {
    /// JSON array of `{word, coefficient}` pairs, ordered by one-line
    /// notation of the permutations.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(serde::Serialize)]
        struct Term<'a> {
            word: String,
            coefficient: &'a LaurentPoly,
        }
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (w, c) in &self.terms {
            seq.serialize_element(&Term {
                word: w.word_string(),
                coefficient: c,
            })?;
        }
        seq.end()
    }
}

/// The Jucys-Murphy operator `L_i`: the sum over `j < i` of
/// `q^(j-i) T_{(j,i)}`. `L_1` is zero.
pub fn jm_l(n: usize, i: usize) -> HeckeElement {
    assert!(1 <= i && i <= n, "index within rank");
    let mut out = HeckeElement::zero(n);
    for j in 1..i {
        out.add_term(
            Permutation::transposition(n, j, i),
            LaurentPoly::monomial(j as i64 - i as i64, 1),
        );
    }
    out
}

/// The rescaled Jucys-Murphy operator `(q - 1) L_i + 1`, which satisfies
/// `q * cal_L_{i+1} = T_i * cal_L_i * T_i` with `cal_L_1 = 1`.
pub fn jm_cal_l(n: usize, i: usize) -> HeckeElement {
    let q1 = LaurentPoly::from_terms([(1i64, 1i64), (0, -1)]);
    let mut out = jm_l(n, i).scale(&q1);
    out.add_assign(&HeckeElement::one(n));
    out
}

/// Evaluate a polynomial at pairwise commuting algebra values, with power
/// caching per variable.
pub fn evaluate_commuting(
    poly: &DensePolynomial,
    values: &[HeckeElement],
    n: usize,
) -> HeckeElement {
    assert_eq!(poly.vars(), values.len(), "one value per variable");
    let mut powers: Vec<Vec<HeckeElement>> =
        values.iter().map(|_| vec![HeckeElement::one(n)]).collect();
    let mut out = HeckeElement::zero(n);
    for (exps, c) in poly.terms() {
        let mut acc = HeckeElement::one(n);
        for (i, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            while powers[i].len() <= e {
                let next = powers[i].last().expect("nonempty").mul(&values[i]);
                powers[i].push(next);
            }
            acc = acc.mul(&powers[i][e]);
        }
        out.add_assign(&acc.scale(c));
    }
    out
}

fn jm_values(n: usize) -> Vec<HeckeElement> {
    (1..=n).map(|i| jm_l(n, i)).collect()
}

/// `p^mu(L_1, ..., L_n)`: the quasi-symmetric monomial evaluated at the
/// Jucys-Murphy operators.
pub fn quasi_monomial_jm(mu: &Composition, n: usize) -> HeckeElement {
    evaluate_commuting(&expand_p(mu, n), &jm_values(n), n)
}

/// `p^mu(cal_L_1, ..., cal_L_n)`: the same monomial in the rescaled
/// operators.
pub fn quasi_monomial_cal_jm(mu: &Composition, n: usize) -> HeckeElement {
    let values: Vec<HeckeElement> = (1..=n).map(|i| jm_cal_l(n, i)).collect();
    evaluate_commuting(&expand_p(mu, n), &values, n)
}

/// The monomial symmetric polynomial `m_lambda` evaluated at the
/// Jucys-Murphy operators: the sum of `p^mu(L)` over the distinct
/// rearrangements `mu` of the partition `lambda` with at most `n` parts.
pub fn monomial_sym_jm(lambda: &Composition, n: usize) -> HeckeElement {
    assert!(
        lambda.is_partition(),
        "monomial symmetric functions are partition-indexed"
    );
    if lambda.len() > n {
        return HeckeElement::zero(n);
    }
    let mut dense = DensePolynomial::zero(n);
    for mu in rearrangements(lambda) {
        dense.add_assign(&expand_p(&mu, n));
    }
    evaluate_commuting(&dense, &jm_values(n), n)
}

/// The elementary symmetric polynomial `e_r` in the `n` Jucys-Murphy
/// operators.
pub fn elementary_sym_jm(r: usize, n: usize) -> HeckeElement {
    if r == 0 {
        return HeckeElement::one(n);
    }
    monomial_sym_jm(&Composition::new(vec![1; r]), n)
}

/// All distinct rearrangements of a composition's parts, ascending.
pub fn rearrangements(lambda: &Composition) -> Vec<Composition> {
    let mut set = std::collections::BTreeSet::new();
    let mut parts = lambda.parts().to_vec();
    parts.sort_unstable();
    loop {
        set.insert(Composition::new(parts.clone()));
        if !next_permutation(&mut parts) {
            break;
        }
    }
    set.into_iter().collect()
}

/// All `n!` permutations of rank `n`, in lexicographic one-line order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut images: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    loop {
        out.push(Permutation::from_images(images.clone()));
        if !next_permutation(&mut images) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// A product of simple reflections with strictly increasing indices; such
/// products are reduced, so the length equals the index count.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IncreasingElement {
    indices: Vec<usize>,
}

impl IncreasingElement {
    pub fn new(indices: Vec<usize>) -> Self {
        assert!(
            indices.windows(2).all(|w| w[0] < w[1]),
            "indices must strictly increase"
        );
        assert!(
            indices.first().is_none_or(|&i| i >= 1),
            "indices are 1-based"
        );
        IncreasingElement { indices }
    }

    pub fn empty() -> Self {
        IncreasingElement {
            indices: Vec::new(),
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.indices.last().copied()
    }

    /// The shape: run lengths of maximal blocks of consecutive indices.
    /// Indices `(2,3,6,7,8)` have shape `(2,3)`.
    pub fn shape(&self) -> Composition {
        let mut parts = Vec::new();
        let mut run = 0;
        for (pos, &i) in self.indices.iter().enumerate() {
            if pos > 0 && self.indices[pos - 1] + 1 == i {
                run += 1;
            } else {
                if run > 0 {
                    parts.push(run);
                }
                run = 1;
            }
        }
        if run > 0 {
            parts.push(run);
        }
        Composition::new(parts)
    }

    /// The canonical increasing element of the given shape in rank `n`:
    /// consecutive blocks packed to the left, separated by single gaps.
    /// Realizable exactly when `|shape| + len(shape) <= n`.
    pub fn of_shape(shape: &Composition, n: usize) -> Result<IncreasingElement, Error> {
        if shape.size() + shape.len() > n {
            return Err(Error::ShapeNotRealizable {
                shape: shape.to_string(),
                n,
            });
        }
        let mut indices = Vec::with_capacity(shape.size());
        let mut next = 1;
        for &part in shape.parts() {
            for _ in 0..part {
                indices.push(next);
                next += 1;
            }
            next += 1;
        }
        Ok(IncreasingElement { indices })
    }

    pub fn to_permutation(&self, n: usize) -> Permutation {
        assert!(
            self.max_index().is_none_or(|top| top < n),
            "indices within rank"
        );
        Permutation::from_word(n, &self.indices)
    }

    pub fn to_basis_element(&self, n: usize) -> HeckeElement {
        HeckeElement::basis(self.to_permutation(n))
    }
}

/// All `2^(n-1)` increasing elements of rank `n`, by index subsets of
/// `{1, ..., n-1}` in binary order.
pub fn increasing_elements(n: usize) -> Vec<IncreasingElement> {
    assert!(n >= 1, "rank must be positive");
    let m = n - 1;
    (0..1usize << m)
        .map(|mask| IncreasingElement::new((1..=m).filter(|i| mask >> (i - 1) & 1 == 1).collect()))
        .collect()
}

/// Memoized evaluation of pairings of increasing basis elements against
/// quasi-symmetric monomials in the rescaled Jucys-Murphy operators, by the
/// two-case recurrence: strip the top reflection index together with the
/// top operator, trading trailing powers for series coefficients.
#[derive(Default)]
pub struct PairingTable {
    memo: HashMap<(Vec<usize>, Composition, usize, usize), LaurentPoly>,
    rows: HashMap<(Composition, usize), std::rc::Rc<BTreeMap<Composition, LaurentPoly>>>,
}

impl PairingTable {
    pub fn new() -> Self {
        PairingTable::default()
    }

    /// `<T_w, p^mu(cal_L_1..cal_L_n) * cal_L_{n+1}^r>`, an element of the
    /// algebra of rank `n + 1`. Agrees with the brute-force pairing.
    pub fn fast_pair(
        &mut self,
        w: &IncreasingElement,
        mu: &Composition,
        r: usize,
        n: usize,
    ) -> LaurentPoly {
        assert!(mu.len() <= n, "monomial must fit the rank");
        assert!(
            w.max_index().is_none_or(|top| top <= n),
            "element must live in the ambient algebra"
        );
        self.eval(w.indices(), mu, r, n)
    }

    fn eval(&mut self, w: &[usize], nu: &Composition, s: usize, m: usize) -> LaurentPoly {
        if nu.len() > m {
            return LaurentPoly::zero();
        }
        if m == 0 {
            debug_assert!(w.is_empty() && nu.is_empty());
            return LaurentPoly::one();
        }
        let key = (w.to_vec(), nu.clone(), s, m);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let q1 = LaurentPoly::from_terms([(1i64, 1i64), (0, -1)]);
        let top_is_m = w.last() == Some(&m);
        let value = if top_is_m {
            if s == 0 {
                // The monomial part lives in the smaller algebra while the
                // element does not, so the pairing vanishes.
                LaurentPoly::zero()
            } else {
                let v = &w[..w.len() - 1];
                let mut total = LaurentPoly::zero();
                for u in 0..s {
                    for lam_size in nu.size()..nu.size() + (s - u) {
                        let row = self.transition_row(nu, lam_size - nu.size());
                        for (lam, a) in row.iter() {
                            let mut inner = self.eval(v, lam, u, m - 1);
                            if !lam.is_empty() {
                                let t = lam.last_part().expect("nonempty");
                                let parent = lam.parent().expect("nonempty");
                                inner.add_assign(&self.eval(v, &parent, u + t, m - 1));
                            }
                            if !inner.is_zero() {
                                total.add_assign(&a.mul(&inner));
                            }
                        }
                    }
                }
                total.mul(&q1)
            }
        } else if s > 0 {
            let mut total = LaurentPoly::zero();
            for lam_size in nu.size()..nu.size() + s {
                let row = self.transition_row(nu, lam_size - nu.size());
                for (lam, a) in row.iter() {
                    if lam.len() > m {
                        continue;
                    }
                    let inner = self.eval(w, lam, 0, m);
                    if !inner.is_zero() {
                        total.add_assign(&a.mul(&inner));
                    }
                }
            }
            total
        } else {
            // Split the monomial by whether it uses the top operator.
            let mut total = self.eval(w, nu, 0, m - 1);
            if !nu.is_empty() {
                let parent = nu.parent().expect("nonempty");
                let t = nu.last_part().expect("nonempty");
                total.add_assign(&self.eval(w, &parent, t, m - 1));
            }
            total
        };
        self.memo.insert(key, value.clone());
        value
    }

    /// The degree-`d` slice of the series transition row at `nu`: maps each
    /// composition `lam` of `|nu| + d` to the coefficient of the basis
    /// element for `lam` in `p^nu * a_d`.
    fn transition_row(
        &mut self,
        nu: &Composition,
        d: usize,
    ) -> std::rc::Rc<BTreeMap<Composition, LaurentPoly>> {
        let key = (nu.clone(), d);
        if let Some(row) = self.rows.get(&key) {
            return row.clone();
        }
        let mut map: BTreeMap<Composition, LaurentPoly> = BTreeMap::new();
        for eta in all_compositions(d) {
            let weight = frak_a_comp(&eta);
            for (lam, count) in structure_constants_of_pair(&eta, nu) {
                let contribution = weight.scale(&count.into());
                use std::collections::btree_map::Entry;
                match map.entry(lam) {
                    Entry::Vacant(v) => {
                        v.insert(contribution);
                    }
                    Entry::Occupied(mut o) => {
                        o.get_mut().add_assign(&contribution);
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
            }
        }
        let row = std::rc::Rc::new(map);
        self.rows.insert(key, row.clone());
        row
    }
}

/// Whether the pairing of the canonical increasing element of shape
/// `lambda` against `p^mu(L_1..L_n)` equals the corresponding entry of the
/// pairing matrix built from the block recursion.
pub fn theorem_main_check(lambda: &Composition, mu: &Composition, n: usize) -> Result<bool, Error> {
    let k = lambda.size();
    assert_eq!(k, mu.size(), "equal sizes");
    assert!(k >= 1, "nonempty compositions");
    let w = IncreasingElement::of_shape(lambda, n)?;
    let direct = w.to_basis_element(n).pairing(&quasi_monomial_jm(mu, n));
    let xi = crate::comp_matrices::build_xi(k);
    let expected = xi.entry(
        &lambda.parent().expect("nonempty"),
        &mu.parent().expect("nonempty"),
    );
    Ok(direct == *expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{frak_b, xi};

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec())
    }

    fn q1() -> LaurentPoly {
        LaurentPoly::from_terms([(1i64, 1i64), (0, -1)])
    }

    #[test]
    fn permutation_basics() {
        let s1 = Permutation::simple(3, 1);
        let s2 = Permutation::simple(3, 2);
        assert_eq!(s1.compose(&s2).images(), &[3, 1, 2]);
        assert_eq!(s2.compose(&s1).images(), &[2, 3, 1]);
        assert_eq!(s1.compose(&s2).length(), 2);
        let w0 = Permutation::from_images(vec![3, 2, 1]);
        assert_eq!(w0.length(), 3);
        assert_eq!(w0.reduced_word().len(), 3);
        assert_eq!(w0.inverse(), w0);
        assert!(Permutation::identity(4).is_identity());
    }

    #[test]
    fn reduced_words_roundtrip() {
        // Every element of rank 4: word length equals Coxeter length and
        // rebuilding from the word restores the element.
        let all = all_permutations(4);
        assert_eq!(all.len(), 24);
        for w in &all {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length(), "{w:?}");
            assert_eq!(&Permutation::from_word(4, &word), w);
            assert_eq!(w.compose(&w.inverse()), Permutation::identity(4));
        }
    }

    #[test]
    fn cycle_types() {
        assert_eq!(Permutation::identity(3).cycle_type(), c(&[1, 1, 1]));
        let w = IncreasingElement::new(vec![1, 2, 4]).to_permutation(5);
        assert_eq!(w.cycle_type(), c(&[3, 2]));
        assert_eq!(w.length(), 3);
    }

    #[test]
    fn quadratic_relation() {
        for n in 2..=4 {
            for i in 1..n {
                let t = HeckeElement::generator(n, i);
                let lhs = t.mul(&t);
                let mut rhs = t.scale(&q1());
                rhs.add_assign(&HeckeElement::one(n).scale(&LaurentPoly::q()));
                assert_eq!(lhs, rhs, "n = {n}, i = {i}");
            }
        }
    }

    #[test]
    fn products_follow_words() {
        let t1 = HeckeElement::generator(3, 1);
        let t2 = HeckeElement::generator(3, 2);
        let prod = t1.mul(&t2);
        let s1s2 = Permutation::simple(3, 1).compose(&Permutation::simple(3, 2));
        assert_eq!(prod, HeckeElement::basis(s1s2));
        // Associativity across a braid word.
        let a = t1.mul(&t2).mul(&t1);
        let b = t2.mul(&t1).mul(&t2);
        assert_eq!(a, b);
    }

    #[test]
    fn jm_values_and_recurrence() {
        assert!(jm_l(3, 1).is_zero());
        assert_eq!(jm_cal_l(4, 1), HeckeElement::one(4));
        let l2 = jm_l(2, 2);
        assert_eq!(
            l2.coeff(&Permutation::simple(2, 1)),
            LaurentPoly::monomial(-1, 1)
        );
        assert_eq!(l2.num_terms(), 1);
        for n in 2..=4 {
            for i in 1..n {
                let t = HeckeElement::generator(n, i);
                let lhs = jm_cal_l(n, i + 1).scale(&LaurentPoly::q());
                let rhs = t.mul(&jm_cal_l(n, i)).mul(&t);
                assert_eq!(lhs, rhs, "n = {n}, i = {i}");
            }
        }
    }

    #[test]
    fn jm_elements_commute() {
        for n in 2..=4 {
            let ls = jm_values(n);
            for a in &ls {
                for b in &ls {
                    assert_eq!(a.mul(b), b.mul(a));
                }
            }
        }
    }

    #[test]
    fn generator_centrality_relations() {
        for n in 2..=4 {
            for j in 1..n {
                let t = HeckeElement::generator(n, j);
                let lj = jm_cal_l(n, j);
                let lj1 = jm_cal_l(n, j + 1);
                let sum = lj.add(&lj1);
                assert!(t.commutes_with(&sum), "sum at n = {n}, j = {j}");
                let prod = lj.mul(&lj1);
                assert!(t.commutes_with(&prod), "product at n = {n}, j = {j}");
                for i in 1..=n {
                    if i != j && i != j + 1 {
                        assert!(
                            t.commutes_with(&jm_cal_l(n, i)),
                            "n = {n}, j = {j}, i = {i}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn trace_and_pairing() {
        let t1 = HeckeElement::generator(2, 1);
        assert_eq!(t1.pairing(&t1), LaurentPoly::q());
        assert_eq!(t1.pairing(&HeckeElement::one(2)), LaurentPoly::zero());
        // pairing(h1, h2) = trace(h2 h1) = trace(h1 h2).
        let h1 = t1.add(&HeckeElement::one(2).scale(&xi()));
        let h2 = t1.mul(&t1).sub(&t1.scale(&LaurentPoly::q_inv()));
        assert_eq!(h1.pairing(&h2), h2.mul(&h1).trace());
        assert_eq!(h1.pairing(&h2), h1.mul(&h2).trace());
        // m_(1)(L) = L_2 in rank 2 pairs to 1 against T_{s_1}.
        let m1 = monomial_sym_jm(&c(&[1]), 2);
        assert_eq!(t1.pairing(&m1), LaurentPoly::one());
    }

    #[test]
    fn symmetric_evaluations() {
        // m_(1)(L) is the sum of all Jucys-Murphy operators.
        let mut sum = HeckeElement::zero(3);
        for i in 1..=3 {
            sum.add_assign(&jm_l(3, i));
        }
        assert_eq!(monomial_sym_jm(&c(&[1]), 3), sum);
        assert_eq!(elementary_sym_jm(0, 3), HeckeElement::one(3));
        // e_2 = m_(1,1) = L_1 L_2 + L_1 L_3 + L_2 L_3.
        let l: Vec<_> = (1..=3).map(|i| jm_l(3, i)).collect();
        let e2 = l[0].mul(&l[1]).add(&l[0].mul(&l[2])).add(&l[1].mul(&l[2]));
        assert_eq!(elementary_sym_jm(2, 3), e2);
        // Symmetric polynomials in the operators are central.
        assert!(monomial_sym_jm(&c(&[2]), 3).is_central());
        assert!(monomial_sym_jm(&c(&[1, 1]), 3).is_central());
        assert!(!jm_l(3, 3).is_central());
        // Pairing of e_r against increasing elements: 1 iff the length is r.
        for n in 2..=4 {
            for w in increasing_elements(n) {
                for r in 0..n {
                    let expected = if w.len() == r {
                        LaurentPoly::one()
                    } else {
                        LaurentPoly::zero()
                    };
                    assert_eq!(
                        w.to_basis_element(n).pairing(&elementary_sym_jm(r, n)),
                        expected,
                        "n = {n}, r = {r}, w = {:?}",
                        w.indices()
                    );
                }
            }
        }
    }

    #[test]
    fn increasing_shapes() {
        assert_eq!(
            IncreasingElement::new(vec![2, 3, 6, 7, 8]).shape(),
            c(&[2, 3])
        );
        assert_eq!(IncreasingElement::empty().shape(), Composition::empty());
        assert_eq!(
            IncreasingElement::of_shape(&c(&[2, 1]), 5)
                .unwrap()
                .indices(),
            &[1, 2, 4]
        );
        assert!(IncreasingElement::of_shape(&c(&[2, 2]), 5).is_err());
        assert_eq!(increasing_elements(4).len(), 8);
        for w in increasing_elements(5) {
            let shape = w.shape();
            assert_eq!(shape.size(), w.len());
            let round = IncreasingElement::of_shape(&shape, 5).unwrap();
            assert_eq!(round.shape(), shape);
            assert_eq!(w.to_permutation(5).length(), w.len());
        }
    }

    #[test]
    fn power_product_identity() {
        // q * sum_{0<=s<r} b(s) calL_i^s calL_{i+1}^{r-s}
        //   = T_i calL_i^r T_i + (q-1) * sum_{1<=s<r} calL_i^{r-s} T_i calL_i^s.
        for n in 2..=3 {
            for i in 1..n {
                let t = HeckeElement::generator(n, i);
                let li = jm_cal_l(n, i);
                let li1 = jm_cal_l(n, i + 1);
                for r in 1..=3u32 {
                    let mut lhs = HeckeElement::zero(n);
                    for s in 0..r {
                        lhs.add_assign(&li.pow(s).mul(&li1.pow(r - s)).scale(&frak_b(s as usize)));
                    }
                    let lhs = lhs.scale(&LaurentPoly::q());
                    let mut rhs = t.mul(&li.pow(r)).mul(&t);
                    for s in 1..r {
                        rhs.add_assign(&li.pow(r - s).mul(&t).mul(&li.pow(s)).scale(&q1()));
                    }
                    assert_eq!(lhs, rhs, "n = {n}, i = {i}, r = {r}");
                }
            }
        }
    }

    #[test]
    fn fast_pair_base_cases() {
        let mut table = PairingTable::new();
        assert_eq!(
            table.fast_pair(&IncreasingElement::empty(), &Composition::empty(), 0, 2),
            LaurentPoly::one()
        );
        let w = IncreasingElement::new(vec![1]);
        assert_eq!(table.fast_pair(&w, &c(&[1]), 0, 2), q1());
        // A shorter monomial cannot reach the element.
        assert_eq!(
            table.fast_pair(&w, &Composition::empty(), 0, 2),
            LaurentPoly::zero()
        );
    }

    #[test]
    fn fast_pair_matches_brute_force() {
        let mut table = PairingTable::new();
        for n in 2..=4usize {
            let values: Vec<HeckeElement> = (1..=n).map(|i| jm_cal_l(n + 1, i)).collect();
            for w in increasing_elements(n) {
                if w.len() > 3 {
                    continue;
                }
                let tw = w.to_basis_element(n + 1);
                for size in 0..=w.len() + 1 {
                    for mu in all_compositions(size) {
                        if mu.len() > n {
                            continue;
                        }
                        for r in 0..=1usize {
                            let fast = table.fast_pair(&w, &mu, r, n);
                            let h = evaluate_commuting(&expand_p(&mu, n), &values, n + 1)
                                .mul(&jm_cal_l(n + 1, n + 1).pow(r as u32));
                            let brute = tw.pairing(&h);
                            assert_eq!(
                                fast,
                                brute,
                                "n = {n}, w = {:?}, mu = {mu}, r = {r}",
                                w.indices()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    #[ignore = "brute-force comparison climbs to rank seven; run explicitly"]
    fn fast_pair_matches_brute_force_wide() {
        let mut table = PairingTable::new();
        let n = 6usize;
        let values: Vec<HeckeElement> = (1..=n).map(|i| jm_cal_l(n + 1, i)).collect();
        let top = jm_cal_l(n + 1, n + 1);
        let top_powers: Vec<HeckeElement> = (0..=2u32).map(|r| top.pow(r)).collect();
        for w in increasing_elements(n) {
            if w.len() > 4 {
                continue;
            }
            let tw = w.to_basis_element(n + 1);
            for size in 0..=w.len() {
                for mu in all_compositions(size) {
                    let base = evaluate_commuting(&expand_p(&mu, n), &values, n + 1);
                    for (r, top_power) in top_powers.iter().enumerate() {
                        let fast = table.fast_pair(&w, &mu, r, n);
                        let brute = tw.pairing(&base.mul(top_power));
                        assert_eq!(fast, brute, "w = {:?}, mu = {mu}, r = {r}", w.indices());
                    }
                }
            }
        }
    }

    #[test]
    fn vanishing_for_short_monomials() {
        // Pairings against products of fewer Jucys-Murphy operators than the
        // element's length vanish.
        let n = 4;
        for w in increasing_elements(n) {
            if w.is_empty() || w.len() > 3 {
                continue;
            }
            let tw = w.to_basis_element(n);
            for k in 0..w.len() {
                for tuple in index_tuples(n, k) {
                    let mut h = HeckeElement::one(n);
                    for i in tuple {
                        h = h.mul(&jm_l(n, i));
                    }
                    assert!(tw.pairing(&h).is_zero(), "w = {:?}", w.indices());
                }
            }
        }
    }

    fn index_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for _ in 0..k {
            out = out
                .into_iter()
                .flat_map(|t| {
                    let last = t.last().copied().unwrap_or(1);
                    (last..=n).map(move |i| {
                        let mut t = t.clone();
                        t.push(i);
                        t
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn theorem_main_small_cases() {
        assert!(theorem_main_check(&c(&[1]), &c(&[1]), 2).unwrap());
        assert!(theorem_main_check(&c(&[2]), &c(&[1, 1]), 3).unwrap());
        assert!(theorem_main_check(&c(&[1, 1]), &c(&[2]), 4).unwrap());
        for k in 1..=2usize {
            for lam in all_compositions(k) {
                for mu in all_compositions(k) {
                    let n = lam.size() + lam.len();
                    assert!(theorem_main_check(&lam, &mu, n).unwrap(), "{lam}, {mu}");
                    assert!(
                        theorem_main_check(&lam, &mu, n + 1).unwrap(),
                        "{lam}, {mu} wide"
                    );
                }
            }
        }
    }

    #[test]
    fn serialization_form() {
        let h = HeckeElement::generator(3, 1)
            .add(&HeckeElement::one(3).scale(&LaurentPoly::constant(2)));
        let json = serde_json::to_string(&h).unwrap();
        assert_eq!(
            json,
            r#"[{"word":"e","coefficient":{"0":2}},{"word":"s1","coefficient":{"0":1}}]"#
        );
    }
}
