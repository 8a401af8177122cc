//! Named verification suites. Each suite replays one module's defining
//! identities as pass/fail checks at configurable bounds and returns a
//! report; the aggregate suite runs all of them.

use serde_json::json;

use crate::centre::{self, MkMethod};
use crate::comp_matrices::{
    build_a, build_b, build_sign_family, build_xi, matrix_identity_failures, xi_inverse,
    BuildMethod, SignFamily,
};
use crate::compositions::{
    all_compositions, partitions, refinements, signed_idempotent_sum, Composition,
};
use crate::hecke::{
    all_permutations, evaluate_commuting, increasing_elements, jm_cal_l, jm_l, monomial_sym_jm,
    theorem_main_check, HeckeElement, PairingTable, Permutation,
};
use crate::laurent::{binomial_formula_a, frak_a, frak_a_comp, frak_b, frak_b_comp, LaurentPoly};
use crate::qsym::{
    a_series_component, expand_p, expand_q, p_in_q, q_in_p, Basis, DensePolynomial, QSymVector,
};
use crate::report::Report;

/// Bounds for the verification suites.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    /// Composition-size ceiling for series and matrix suites.
    pub max_k: usize,
    /// Rank ceiling for Hecke algebra suites.
    pub max_n: usize,
    /// Rank ceiling for centre solves.
    pub centre_n: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_k: 5,
            max_n: 5,
            centre_n: 4,
        }
    }
}

/// The named verification suites.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Laurent,
    Qsym,
    Matrices,
    Hecke,
    James,
    DipperJames,
    All,
}

impl Suite {
    pub fn run(self, bounds: &Bounds) -> Report {
        match self {
            Suite::Laurent => suite_laurent(bounds),
            Suite::Qsym => suite_qsym(bounds),
            Suite::Matrices => suite_matrices(bounds),
            Suite::Hecke => suite_hecke(bounds),
            Suite::James => suite_james(bounds),
            Suite::DipperJames => suite_dipper_james(bounds),
            Suite::All => {
                let mut report = Report::new();
                for s in [
                    Suite::Laurent,
                    Suite::Qsym,
                    Suite::Matrices,
                    Suite::Hecke,
                    Suite::James,
                    Suite::DipperJames,
                ] {
                    report.merge(s.run(bounds));
                }
                report
            }
        }
    }
}

/// Series coefficients: convolution, the binomial closed form, the
/// enumeration oracle, the size-three product table, and the signed
/// refinement sums relating the two coefficient families.
pub fn suite_laurent(bounds: &Bounds) -> Report {
    let mut report = Report::new();
    let r_max = 30usize;
    let mut witness = None;
    for r in 0..=r_max {
        let mut sum = LaurentPoly::zero();
        for s in 0..=r {
            sum.add_assign(&frak_a(s).mul(&frak_b(r - s)));
        }
        let expected = if r == 0 {
            LaurentPoly::one()
        } else {
            LaurentPoly::zero()
        };
        if sum != expected && witness.is_none() {
            witness = Some(format!("failed at r = {r}"));
        }
    }
    report.record(
        "series convolution is the delta sequence",
        json!({"max_r": r_max}),
        witness.is_none(),
        || witness.clone().expect("witness"),
    );

    let n_max = 20usize;
    let binomial_bad = (1..=n_max).find(|&n| binomial_formula_a(n) != frak_a(n));
    report.record(
        "binomial closed form matches the first series coefficients",
        json!({"max_n": n_max}),
        binomial_bad.is_none(),
        || format!("failed at n = {}", binomial_bad.expect("witness")),
    );

    let idem_max = 7usize;
    let idem_bad = (0..=idem_max).find(|&n| {
        signed_idempotent_sum(n, false) != frak_a(n) || signed_idempotent_sum(n, true) != frak_b(n)
    });
    report.record(
        "idempotent map enumeration reproduces both series coefficients",
        json!({"max_n": idem_max}),
        idem_bad.is_none(),
        || format!("failed at n = {}", idem_bad.expect("witness")),
    );

    let table_bad = table_of_small_products_failure();
    report.record(
        "size-three table of series coefficient products",
        json!({"max_size": 3}),
        table_bad.is_none(),
        || format!("mismatch at {}", table_bad.clone().expect("witness")),
    );

    let k_max = bounds.max_k.min(6);
    let mut mobius_witness = None;
    for k in 0..=k_max {
        for lam in all_compositions(k) {
            let mut via_b = LaurentPoly::zero();
            let mut via_a = LaurentPoly::zero();
            for mu in refinements(&lam) {
                let sign = num_bigint::BigInt::from(if mu.len() % 2 == 0 { 1 } else { -1 });
                via_b.add_assign(&frak_b_comp(&mu).scale(&sign));
                via_a.add_assign(&frak_a_comp(&mu).scale(&sign));
            }
            if (via_b != frak_a_comp(&lam) || via_a != frak_b_comp(&lam))
                && mobius_witness.is_none()
            {
                mobius_witness = Some(format!("failed at {lam}"));
            }
        }
    }
    report.record(
        "signed refinement sums exchange the two coefficient families",
        json!({"max_k": k_max}),
        mobius_witness.is_none(),
        || mobius_witness.clone().expect("witness"),
    );
    report
}

fn table_of_small_products_failure() -> Option<String> {
    let xi = crate::laurent::xi();
    let xi2 = xi.pow(2);
    let xi3 = xi.pow(3);
    let c = |parts: &[usize]| Composition::new(parts.to_vec());
    let cases: Vec<(Composition, LaurentPoly, LaurentPoly)> = vec![
        (c(&[]), LaurentPoly::one(), LaurentPoly::one()),
        (c(&[1]), xi.clone(), xi.neg()),
        (
            c(&[2]),
            xi2.add(&xi.scale(&2.into())),
            xi.scale(&(-2).into()),
        ),
        (c(&[1, 1]), xi2.clone(), xi2.clone()),
        (
            c(&[3]),
            xi3.add(&xi2.scale(&4.into())).add(&xi.scale(&3.into())),
            xi.scale(&(-3).into()),
        ),
        (
            c(&[1, 2]),
            xi3.add(&xi2.scale(&2.into())),
            xi2.scale(&2.into()),
        ),
        (
            c(&[2, 1]),
            xi3.add(&xi2.scale(&2.into())),
            xi2.scale(&2.into()),
        ),
        (c(&[1, 1, 1]), xi3.clone(), xi3.neg()),
    ];
    for (lam, a, b) in cases {
        if frak_a_comp(&lam) != a || frak_b_comp(&lam) != b {
            return Some(lam.to_string());
        }
    }
    None
}

fn widen_vector(v: &QSymVector, n: usize) -> QSymVector {
    QSymVector::from_terms(
        n.max(v.bound()),
        v.terms().map(|(l, c)| (l.clone(), c.clone())),
    )
}

/// Quasi-symmetric layer: structure-constant products against dense
/// multiplication in both bases, involutivity of the basis change, and the
/// dense series recurrence.
pub fn suite_qsym(bounds: &Bounds) -> Report {
    let mut report = Report::new();
    let total_max = bounds.max_k.min(6);
    let mut product_witness = None;
    for total in 0..=total_max {
        for ke in 0..=total {
            for eta in all_compositions(ke) {
                for mu in all_compositions(total - ke) {
                    let n = total.max(1);
                    let u = QSymVector::from_terms(n, [(eta.clone(), LaurentPoly::one())]);
                    let v = QSymVector::from_terms(n, [(mu.clone(), LaurentPoly::one())]);
                    let prod = u.multiply(&v);
                    let dense_p = expand_p(&eta, n).mul(&expand_p(&mu, n));
                    let dense_q = expand_q(&eta, n).mul(&expand_q(&mu, n));
                    if (prod.expand(n, Basis::P) != dense_p || prod.expand(n, Basis::Q) != dense_q)
                        && product_witness.is_none()
                    {
                        product_witness = Some(format!("failed at {eta} * {mu}"));
                    }
                }
            }
        }
    }
    report.record(
        "structure-constant products match dense multiplication in both bases",
        json!({"max_total_size": total_max}),
        product_witness.is_none(),
        || product_witness.clone().expect("witness"),
    );

    let k_max = bounds.max_k;
    let mut involution_witness = None;
    for k in 0..=k_max {
        let comps = all_compositions(k);
        for lam in &comps {
            let via_p = q_in_p(lam);
            let mut back = QSymVector::zero(k.max(1));
            for (mu, cmu) in via_p.terms() {
                for (nu, cnu) in p_in_q(mu).terms() {
                    back.add_term(nu.clone(), cmu.mul(cnu));
                }
            }
            for nu in &comps {
                let expected = if nu == lam {
                    LaurentPoly::one()
                } else {
                    LaurentPoly::zero()
                };
                if back.coeff(nu) != expected && involution_witness.is_none() {
                    involution_witness = Some(format!("failed at {lam}"));
                }
            }
        }
    }
    report.record(
        "basis change is involutive",
        json!({"max_k": k_max}),
        involution_witness.is_none(),
        || involution_witness.clone().expect("witness"),
    );

    let dense_max = bounds.max_k.min(4);
    let dense_bad = (0..=dense_max).find(|&k| {
        all_compositions(k).iter().any(|lam| {
            let n = k.max(1);
            q_in_p(lam).expand(n, Basis::P) != expand_q(lam, n)
                || p_in_q(lam).expand(n, Basis::Q) != expand_p(lam, n)
        })
    });
    report.record(
        "basis change vectors expand to the dense definitions",
        json!({"max_k": dense_max}),
        dense_bad.is_none(),
        || format!("failed at size {}", dense_bad.expect("witness")),
    );

    let mut recurrence_witness = None;
    for n in 1..=4usize {
        for r in 1..=4usize {
            let mut lhs = DensePolynomial::zero(n);
            for k in 0..r {
                let ak = widen_vector(&a_series_component(k, Basis::P), n - 1);
                lhs.add_assign(&ak.expand(n - 1, Basis::P).widen(n));
            }
            let mut rhs = DensePolynomial::zero(n);
            for s in 0..r {
                let xs = DensePolynomial::variable_power(n, n, s);
                let mut inner = DensePolynomial::zero(n);
                for t in 0..r - s {
                    let at = widen_vector(&a_series_component(t, Basis::P), n);
                    inner.add_assign(&at.expand(n, Basis::P));
                }
                rhs.add_assign(&xs.scale(&frak_b(s)).mul(&inner));
            }
            if lhs != rhs && recurrence_witness.is_none() {
                recurrence_witness = Some(format!("failed at n = {n}, r = {r}"));
            }
        }
    }
    report.record(
        "series components satisfy the variable-stripping recurrence",
        json!({"max_n": 4, "max_r": 4}),
        recurrence_witness.is_none(),
        || recurrence_witness.clone().expect("witness"),
    );
    report
}

/// Composition-indexed matrices: closed forms against block recursions, the
/// multiplicative identities, triangularity, unit determinant, and the
/// inverse recursion.
pub fn suite_matrices(bounds: &Bounds) -> Report {
    let mut report = Report::new();
    let k_max = bounds.max_k.max(1);
    let mut method_witness = None;
    for k in 1..=k_max {
        for family in [SignFamily::J, SignFamily::K, SignFamily::Z, SignFamily::Y] {
            let closed = build_sign_family(k, family, BuildMethod::ClosedForm);
            let recursive = build_sign_family(k, family, BuildMethod::Recursion);
            if closed.entries() != recursive.entries() && method_witness.is_none() {
                method_witness = Some(format!("{family:?} at k = {k}"));
            }
        }
    }
    report.record(
        "sign family closed forms match the block recursions",
        json!({"max_k": k_max}),
        method_witness.is_none(),
        || method_witness.clone().expect("witness"),
    );

    let mut identity_witness = None;
    for k in 1..=k_max {
        let failures = matrix_identity_failures(k);
        if !failures.is_empty() && identity_witness.is_none() {
            identity_witness = Some(format!("k = {k}: {}", failures.join(", ")));
        }
    }
    report.record(
        "matrix family identities hold",
        json!({"max_k": k_max}),
        identity_witness.is_none(),
        || identity_witness.clone().expect("witness"),
    );

    let mut triangular_witness = None;
    for k in 1..=k_max {
        for m in [build_a(k), build_b(k)] {
            for i in 0..m.dim() {
                for j in 0..m.dim() {
                    let e = m.entry_at(i, j);
                    let bad = if i == j {
                        !e.is_one()
                    } else if j > i {
                        !e.is_zero()
                    } else {
                        false
                    };
                    if bad && triangular_witness.is_none() {
                        triangular_witness = Some(format!("k = {k}, entry ({i}, {j})"));
                    }
                }
            }
        }
    }
    report.record(
        "series transitions are unit lower triangular",
        json!({"max_k": k_max}),
        triangular_witness.is_none(),
        || triangular_witness.clone().expect("witness"),
    );

    let det_bad = (1..=k_max).find(|&k| !build_xi(k).det().is_one());
    report.record(
        "pairing matrix has determinant one",
        json!({"max_k": k_max}),
        det_bad.is_none(),
        || format!("failed at k = {}", det_bad.expect("witness")),
    );

    let inv_bad = (1..=k_max).find(|&k| !build_xi(k).mul(&xi_inverse(k)).is_identity());
    report.record(
        "inverse recursion yields an exact inverse",
        json!({"max_k": k_max}),
        inv_bad.is_none(),
        || format!("failed at k = {}", inv_bad.expect("witness")),
    );
    report
}

struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

fn random_element(rng: &mut Rng, perms: &[Permutation], n: usize) -> HeckeElement {
    let mut h = HeckeElement::zero(n);
    for _ in 0..perms.len().min(6) {
        let w = perms[rng.below(perms.len())].clone();
        let exp = rng.below(5) as i64 - 2;
        let coeff = rng.below(7) as i64 - 3;
        h.add_term(w, LaurentPoly::from_terms([(exp, coeff)]));
    }
    h
}

/// Hecke algebra layer: the quadratic relation, commuting operators and
/// their recurrence, the centrality relations, trace symmetry on seeded
/// random elements, the power-product identity, the memoized pairing
/// recurrence against brute force, both vanishing statements, and the
/// pairing-matrix theorem.
pub fn suite_hecke(bounds: &Bounds) -> Report {
    let mut report = Report::new();
    let n_max = bounds.max_n.max(2);
    let q1 = LaurentPoly::from_terms([(1i64, 1i64), (0, -1)]);

    let quad_max = n_max.min(6);
    let mut quad_witness = None;
    for n in 2..=quad_max {
        for i in 1..n {
            let t = HeckeElement::generator(n, i);
            let mut rhs = t.scale(&q1);
            rhs.add_assign(&HeckeElement::one(n).scale(&LaurentPoly::q()));
            if t.mul(&t) != rhs && quad_witness.is_none() {
                quad_witness = Some(format!("n = {n}, i = {i}"));
            }
        }
    }
    report.record(
        "generators satisfy the quadratic relation",
        json!({"max_n": quad_max}),
        quad_witness.is_none(),
        || quad_witness.clone().expect("witness"),
    );

    let mut commute_witness = None;
    for n in 2..=n_max {
        let ls: Vec<HeckeElement> = (1..=n).map(|i| jm_l(n, i)).collect();
        for a in &ls {
            for b in &ls {
                if a.mul(b) != b.mul(a) && commute_witness.is_none() {
                    commute_witness = Some(format!("n = {n}"));
                }
            }
        }
    }
    report.record(
        "Jucys-Murphy operators commute",
        json!({"max_n": n_max}),
        commute_witness.is_none(),
        || commute_witness.clone().expect("witness"),
    );

    let rec_max = n_max.min(6);
    let mut rec_witness = None;
    for n in 2..=rec_max {
        for i in 1..n {
            let t = HeckeElement::generator(n, i);
            let lhs = jm_cal_l(n, i + 1).scale(&LaurentPoly::q());
            let rhs = t.mul(&jm_cal_l(n, i)).mul(&t);
            if lhs != rhs && rec_witness.is_none() {
                rec_witness = Some(format!("n = {n}, i = {i}"));
            }
        }
    }
    report.record(
        "rescaled operators satisfy the conjugation recurrence",
        json!({"max_n": rec_max}),
        rec_witness.is_none(),
        || rec_witness.clone().expect("witness"),
    );

    let mut central_witness = None;
    for n in 2..=n_max {
        for j in 1..n {
            let t = HeckeElement::generator(n, j);
            let lj = jm_cal_l(n, j);
            let lj1 = jm_cal_l(n, j + 1);
            let mut ok = t.commutes_with(&lj.add(&lj1)) && t.commutes_with(&lj.mul(&lj1));
            for i in 1..=n {
                if i != j && i != j + 1 {
                    ok = ok && t.commutes_with(&jm_cal_l(n, i));
                }
            }
            if !ok && central_witness.is_none() {
                central_witness = Some(format!("n = {n}, j = {j}"));
            }
        }
    }
    report.record(
        "generators commute with the symmetric operator combinations",
        json!({"max_n": n_max}),
        central_witness.is_none(),
        || central_witness.clone().expect("witness"),
    );

    let mut rng = Rng(0x5eed_cafe_f00d_d00d);
    let mut trace_witness = None;
    for n in 2..=n_max {
        let perms = all_permutations(n);
        for _ in 0..3 {
            let a = random_element(&mut rng, &perms, n);
            let b = random_element(&mut rng, &perms, n);
            let ab = a.mul(&b);
            let ba = b.mul(&a);
            if (ab.trace() != ba.trace() || a.pairing(&b) != ba.trace()) && trace_witness.is_none()
            {
                trace_witness = Some(format!("n = {n}"));
            }
        }
    }
    report.record(
        "trace is symmetric and induces the pairing",
        json!({"max_n": n_max, "seeded": true}),
        trace_witness.is_none(),
        || trace_witness.clone().expect("witness"),
    );

    let pp_max = n_max.min(4);
    let mut pp_witness = None;
    for n in 2..=pp_max {
        for i in 1..n {
            let t = HeckeElement::generator(n, i);
            let li = jm_cal_l(n, i);
            let li1 = jm_cal_l(n, i + 1);
            for r in 1..=4u32 {
                let mut lhs = HeckeElement::zero(n);
                for s in 0..r {
                    lhs.add_assign(&li.pow(s).mul(&li1.pow(r - s)).scale(&frak_b(s as usize)));
                }
                let lhs = lhs.scale(&LaurentPoly::q());
                let mut rhs = t.mul(&li.pow(r)).mul(&t);
                for s in 1..r {
                    rhs.add_assign(&li.pow(r - s).mul(&t).mul(&li.pow(s)).scale(&q1));
                }
                if lhs != rhs && pp_witness.is_none() {
                    pp_witness = Some(format!("n = {n}, i = {i}, r = {r}"));
                }
            }
        }
    }
    report.record(
        "power products trade through generators by the series identity",
        json!({"max_n": pp_max, "max_r": 4}),
        pp_witness.is_none(),
        || pp_witness.clone().expect("witness"),
    );

    let fp_max = n_max.min(6);
    let mut fp_witness = None;
    let mut table = PairingTable::new();
    for n in 2..=fp_max {
        let values: Vec<HeckeElement> = (1..=n).map(|i| jm_cal_l(n + 1, i)).collect();
        let top = jm_cal_l(n + 1, n + 1);
        let words: Vec<_> = increasing_elements(n)
            .into_iter()
            .filter(|w| w.len() <= 4)
            .collect();
        for size in 0..=4usize {
            for mu in all_compositions(size) {
                if mu.len() > n {
                    continue;
                }
                let base = evaluate_commuting(&expand_p(&mu, n), &values, n + 1);
                for r in 0..=2usize {
                    let h = base.mul(&top.pow(r as u32));
                    for w in &words {
                        if w.len() < mu.size() {
                            continue;
                        }
                        let fast = table.fast_pair(w, &mu, r, n);
                        let brute = w.to_basis_element(n + 1).pairing(&h);
                        if fast != brute && fp_witness.is_none() {
                            fp_witness = Some(format!(
                                "n = {n}, w = {:?}, mu = {mu}, r = {r}",
                                w.indices()
                            ));
                        }
                    }
                }
            }
        }
    }
    report.record(
        "memoized pairing recurrence matches brute force",
        json!({"max_n": fp_max, "max_word": 4, "max_r": 2}),
        fp_witness.is_none(),
        || fp_witness.clone().expect("witness"),
    );

    let mut alt_witness = None;
    for n in 2..=n_max {
        for w in increasing_elements(n) {
            if w.is_empty() || w.len() > 3 {
                continue;
            }
            let tw = w.to_basis_element(n);
            for k in 0..w.len() {
                for tuple in weakly_increasing_tuples(n, k) {
                    let mut h = HeckeElement::one(n);
                    for i in tuple.iter() {
                        h = h.mul(&jm_l(n, *i));
                    }
                    if !tw.pairing(&h).is_zero() && alt_witness.is_none() {
                        alt_witness =
                            Some(format!("n = {n}, w = {:?}, tuple = {tuple:?}", w.indices()));
                    }
                }
            }
        }
    }
    report.record(
        "pairings against products of fewer operators vanish",
        json!({"max_n": n_max, "max_word": 3}),
        alt_witness.is_none(),
        || alt_witness.clone().expect("witness"),
    );

    let mut single_witness = None;
    for n in 3..=n_max {
        let words = increasing_elements(n);
        for k in 1..=3usize {
            for tuple in strictly_increasing_tuples(2, n - 1, k) {
                let mut h = HeckeElement::one(n);
                for &i in &tuple {
                    h = h.mul(&jm_l(n, i));
                }
                let matching: Vec<usize> = tuple.iter().map(|&i| i - 1).collect();
                for w in &words {
                    let value = w.to_basis_element(n).pairing(&h);
                    let expected = if w.indices() == matching.as_slice() {
                        LaurentPoly::one()
                    } else {
                        LaurentPoly::zero()
                    };
                    if value != expected && single_witness.is_none() {
                        single_witness =
                            Some(format!("n = {n}, w = {:?}, tuple = {tuple:?}", w.indices()));
                    }
                }
            }
        }
    }
    report.record(
        "distinct-operator products pair to one exactly at the matching element",
        json!({"max_n": n_max, "max_factors": 3}),
        single_witness.is_none(),
        || single_witness.clone().expect("witness"),
    );

    let mut main_witness = None;
    for k in 1..=3usize {
        for lam in all_compositions(k) {
            let minimal = lam.size() + lam.len();
            if minimal + 1 > n_max + 2 {
                continue;
            }
            for mu in all_compositions(k) {
                for n in [minimal, minimal + 1] {
                    match theorem_main_check(&lam, &mu, n) {
                        Ok(true) => {}
                        Ok(false) => {
                            if main_witness.is_none() {
                                main_witness = Some(format!("lambda = {lam}, mu = {mu}, n = {n}"));
                            }
                        }
                        Err(e) => {
                            if main_witness.is_none() {
                                main_witness =
                                    Some(format!("lambda = {lam}, mu = {mu}, n = {n}: {e}"));
                            }
                        }
                    }
                }
            }
        }
    }
    report.record(
        "pairings of increasing elements against quasi-symmetric monomials match the matrix",
        json!({"max_k": 3}),
        main_witness.is_none(),
        || main_witness.clone().expect("witness"),
    );
    report
}

fn weakly_increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                let lo = t.last().copied().unwrap_or(1);
                (lo..=n).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

fn strictly_increasing_tuples(lo: usize, hi: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                let next = t.last().map(|&i| i + 1).unwrap_or(lo);
                (next..=hi).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

/// Block invertibility: the change-of-index proof checks for each size, and
/// agreement of the two transition block constructions.
pub fn suite_james(bounds: &Bounds) -> Report {
    let mut report = Report::new();
    for k in 1..=bounds.max_k.max(1) {
        report.merge(centre::james_check(k));
    }
    let mut agree_witness = None;
    for k in 1..=bounds.max_k.min(3) {
        for n in k..=6 {
            let direct = centre::mk_matrix(k, n, MkMethod::Direct);
            let via = centre::mk_matrix(k, n, MkMethod::ViaXi);
            match (direct, via) {
                (Ok(d), Ok(v)) => {
                    if (d.rows() != v.rows() || d.entries() != v.entries())
                        && agree_witness.is_none()
                    {
                        agree_witness = Some(format!("k = {k}, n = {n}"));
                    }
                }
                _ => {
                    if agree_witness.is_none() {
                        agree_witness = Some(format!("k = {k}, n = {n}: build failed"));
                    }
                }
            }
        }
    }
    report.record(
        "transition block constructions agree",
        json!({"max_k": bounds.max_k.min(3), "max_n": 6}),
        agree_witness.is_none(),
        || agree_witness.clone().expect("witness"),
    );
    report
}

/// Centre layer: spanning and block structure per rank, the dual basis
/// pairing conditions, the elementary symmetric decomposition with the
/// generation check at small rank, exhaustive block triangularity, and
/// representative independence.
pub fn suite_dipper_james(bounds: &Bounds) -> Report {
    let mut report = Report::new();
    for n in 2..=bounds.centre_n.max(2) {
        match centre::dipper_james_check(n) {
            Ok(r) => report.merge(r),
            Err(e) => report.record(
                "centre spanning checks run within bounds",
                json!({"n": n}),
                false,
                || e.to_string(),
            ),
        }
        match centre::geck_rouquier(n) {
            Ok(gamma) => {
                let mut delta_witness = None;
                let reps: Vec<HeckeElement> = gamma
                    .labels()
                    .iter()
                    .map(|rho| centre::min_length_rep(rho).to_basis_element(n))
                    .collect();
                for (i, (_, g)) in gamma.iter().enumerate() {
                    for (j, tw) in reps.iter().enumerate() {
                        let expected = if i == j {
                            LaurentPoly::one()
                        } else {
                            LaurentPoly::zero()
                        };
                        if tw.pairing(g) != expected && delta_witness.is_none() {
                            delta_witness = Some(format!(
                                "classes {} and {}",
                                gamma.labels()[j],
                                gamma.labels()[i]
                            ));
                        }
                    }
                }
                report.record(
                    "dual basis elements satisfy the defining pairing conditions",
                    json!({"n": n}),
                    delta_witness.is_none(),
                    || delta_witness.clone().expect("witness"),
                );
            }
            Err(e) => report.record(
                "dual basis solves within bounds",
                json!({"n": n}),
                false,
                || e.to_string(),
            ),
        }
        match centre::elementary_symmetric_identity(n, n <= 4) {
            Ok(r) => report.merge(r),
            Err(e) => report.record(
                "elementary symmetric decomposition runs within bounds",
                json!({"n": n}),
                false,
                || e.to_string(),
            ),
        }
    }

    let mut triangular_witness = None;
    for n in 2..=bounds.max_n {
        let transition = centre::TransitionMatrix::build(n);
        if let Some((rho, mu)) = transition.first_triangularity_failure() {
            if triangular_witness.is_none() {
                triangular_witness = Some(format!("n = {n}, class {rho}, column {mu}"));
            }
        }
    }
    report.record(
        "transition matrices are block triangular",
        json!({"max_n": bounds.max_n}),
        triangular_witness.is_none(),
        || triangular_witness.clone().expect("witness"),
    );

    let mut rep_witness = None;
    for n in 2..=bounds.max_n {
        let monomials: Vec<HeckeElement> = (0..n)
            .flat_map(partitions)
            .map(|l| monomial_sym_jm(&l, n))
            .collect();
        for (rho, reps) in centre::minimal_length_class_elements(n) {
            for m in &monomials {
                let first = HeckeElement::basis(reps[0].clone()).pairing(m);
                if reps
                    .iter()
                    .any(|w| HeckeElement::basis(w.clone()).pairing(m) != first)
                    && rep_witness.is_none()
                {
                    rep_witness = Some(format!("n = {n}, class {rho}"));
                }
            }
        }
    }
    report.record(
        "pairings are independent of the minimal-length representative",
        json!({"max_n": bounds.max_n}),
        rep_witness.is_none(),
        || rep_witness.clone().expect("witness"),
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_bounds() {
        let b = Bounds::default();
        assert_eq!((b.max_k, b.max_n, b.centre_n), (5, 5, 4));
    }

    #[test]
    fn small_suites_pass() {
        let bounds = Bounds {
            max_k: 3,
            max_n: 3,
            centre_n: 2,
        };
        for suite in [
            Suite::Laurent,
            Suite::Qsym,
            Suite::Matrices,
            Suite::James,
            Suite::DipperJames,
        ] {
            let report = suite.run(&bounds);
            assert!(report.pass(), "{suite:?}: {report}");
            assert!(!report.is_empty());
        }
    }

    #[test]
    fn hecke_suite_passes_at_small_rank() {
        let bounds = Bounds {
            max_k: 2,
            max_n: 3,
            centre_n: 2,
        };
        let report = suite_hecke(&bounds);
        assert!(report.pass(), "{report}");
    }
}
