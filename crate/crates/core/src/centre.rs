//! The centre of the Hecke algebra: an exact commutant basis, the dual
//! basis indexed by conjugacy classes, the class-by-partition transition
//! matrices and their diagonal blocks, and the verification routines for
//! block invertibility, spanning, and the elementary symmetric polynomial
//! decomposition.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use serde::ser::{Serialize, SerializeSeq, Serializer};
use serde_json::json;

use crate::comp_matrices::{build_xi, xi_inverse};
use crate::compositions::{all_compositions, partitions, Composition};
use crate::hecke::{
    all_permutations, elementary_sym_jm, monomial_sym_jm, HeckeElement, IncreasingElement,
    Permutation,
};
use crate::laurent::{LaurentPoly, RationalFunction};
use crate::linalg::{self, LMatrix, RMatrix};
use crate::report::Report;
use crate::Error;

/// Largest rank accepted by the centre solvers; beyond it the commutant
/// system over `n!` unknowns is no longer desk-scale.
pub const CENTRE_BOUND: usize = 5;

/// Largest rank at which transition matrix entries are computed by direct
/// algebra products.
pub const DIRECT_PAIRING_BOUND: usize = 6;

/// A basis of the centre of the rank-`n` Hecke algebra. Labels enumerate
/// the partitions of `n` in listing order; for the dual basis each element
/// is the one pairing to 1 at its own class representative and to 0 at the
/// others, while for the raw commutant basis the labels are only an index
/// set.
#[derive(Clone, Debug)]
pub struct CentreBasis {
    n: usize,
    labels: Vec<Composition>,
    elements: Vec<HeckeElement>,
}

impl CentreBasis {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.elements.len()
    }

    pub fn labels(&self) -> &[Composition] {
        &self.labels
    }

    pub fn elements(&self) -> &[HeckeElement] {
        &self.elements
    }

    pub fn element(&self, label: &Composition) -> Option<&HeckeElement> {
        let pos = self.labels.iter().position(|l| l == label)?;
        Some(&self.elements[pos])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Composition, &HeckeElement)> {
        self.labels.iter().zip(self.elements.iter())
    }
}

impl Serialize for CentreBasis {
    /// JSON array of `{label, element}` pairs in label order.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(serde::Serialize)]
        struct Entry<'a> {
            label: String,
            element: &'a HeckeElement,
        }
        let mut seq = serializer.serialize_seq(Some(self.labels.len()))?;
        for (label, element) in self.iter() {
            seq.serialize_element(&Entry {
                label: label.to_string(),
                element,
            })?;
        }
        seq.end()
    }
}

/// The canonical minimal-length representative of the conjugacy class with
/// cycle type `rho`: the increasing element whose shape has parts
/// `rho_i - 1` with zeros dropped. Its length is `n - len(rho)`.
pub fn min_length_rep(rho: &Composition) -> IncreasingElement {
    assert!(
        rho.is_partition() && !rho.is_empty(),
        "classes are named by nonempty partitions"
    );
    let shape = Composition::new(
        rho.parts()
            .iter()
            .filter(|&&p| p >= 2)
            .map(|&p| p - 1)
            .collect(),
    );
    IncreasingElement::of_shape(&shape, rho.size())
        .expect("single gaps reuse the fixed points, so the shape always fits")
}

/// A basis of the full commutant of the generators, found by solving the
/// linear system `z T_i = T_i z` for all `i` over the fraction field. The
/// dimension always equals the number of partitions of `n`.
pub fn centre_basis(n: usize) -> Result<CentreBasis, Error> {
    assert!(n >= 1, "rank must be positive");
    if n > CENTRE_BOUND {
        return Err(Error::BoundExceeded {
            what: "centre solver rank",
            got: n,
            limit: CENTRE_BOUND,
        });
    }
    let perms = all_permutations(n);
    let cols = perms.len();
    let mut constraints: Vec<Vec<LaurentPoly>> = Vec::new();
    for i in 1..n {
        let mut by_perm: BTreeMap<Permutation, Vec<LaurentPoly>> = BTreeMap::new();
        for (j, w) in perms.iter().enumerate() {
            let tw = HeckeElement::basis(w.clone());
            let commutator = tw.right_mul_generator(i).sub(&tw.left_mul_generator(i));
            for (v, c) in commutator.terms() {
                by_perm
                    .entry(v.clone())
                    .or_insert_with(|| vec![LaurentPoly::zero(); cols])[j]
                    .add_assign(c);
            }
        }
        constraints.extend(by_perm.into_values());
    }
    let kernel = linalg::nullspace(&constraints, cols);
    let labels = partitions(n);
    assert_eq!(
        kernel.len(),
        labels.len(),
        "centre dimension must equal the partition count"
    );
    let elements = kernel
        .into_iter()
        .map(|coeffs| {
            let mut h = HeckeElement::zero(n);
            for (j, c) in coeffs.into_iter().enumerate() {
                h.add_term(perms[j].clone(), c);
            }
            h
        })
        .collect();
    Ok(CentreBasis {
        n,
        labels,
        elements,
    })
}

/// The dual basis of the centre: for each partition `rho` of `n`, the
/// unique central element pairing to 1 against the minimal-length
/// representative of the class `rho` and to 0 against the other classes.
/// Asserts that the coefficients are Laurent polynomials.
pub fn geck_rouquier(n: usize) -> Result<CentreBasis, Error> {
    let base = centre_basis(n)?;
    let dim = base.dimension();
    let reps: Vec<HeckeElement> = base
        .labels
        .iter()
        .map(|rho| min_length_rep(rho).to_basis_element(n))
        .collect();
    let pairings: RMatrix = reps
        .iter()
        .map(|tw| {
            base.elements
                .iter()
                .map(|z| RationalFunction::from_laurent(tw.pairing(z)))
                .collect()
        })
        .collect();
    let mut elements = Vec::with_capacity(dim);
    for target in 0..dim {
        let rhs: Vec<RationalFunction> = (0..dim)
            .map(|r| {
                if r == target {
                    RationalFunction::one()
                } else {
                    RationalFunction::zero()
                }
            })
            .collect();
        let coords = linalg::solve(&pairings, &rhs)?;
        let mut acc: BTreeMap<Permutation, RationalFunction> = BTreeMap::new();
        for (z, x) in base.elements.iter().zip(&coords) {
            if x.is_zero() {
                continue;
            }
            for (w, c) in z.terms() {
                let term = x.mul(&RationalFunction::from_laurent(c.clone()));
                use std::collections::btree_map::Entry;
                match acc.entry(w.clone()) {
                    Entry::Vacant(v) => {
                        v.insert(term);
                    }
                    Entry::Occupied(mut o) => {
                        let sum = o.get().add(&term);
                        if sum.is_zero() {
                            o.remove();
                        } else {
                            o.insert(sum);
                        }
                    }
                }
            }
        }
        let mut gamma = HeckeElement::zero(n);
        for (w, c) in acc {
            assert!(
                c.denominator().is_one(),
                "dual basis coefficients must be Laurent polynomials"
            );
            gamma.add_term(w, c.numerator().clone());
        }
        elements.push(gamma);
    }
    Ok(CentreBasis {
        n,
        labels: base.labels,
        elements,
    })
}

/// How to compute a diagonal transition block.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MkMethod {
    /// Pair basis elements against monomial symmetric polynomials in the
    /// Jucys-Murphy operators by algebra products.
    Direct,
    /// Sum entries of the pairing matrix over the rearrangements of each
    /// column partition.
    ViaXi,
}

/// A diagonal block of the class-by-partition transition matrix: rows are
/// the partitions of `k` realizable as increasing shapes in rank `n`,
/// columns all partitions of `k`, entries the pairings of the row's
/// canonical increasing element against the column's monomial symmetric
/// polynomial in the Jucys-Murphy operators.
#[derive(Clone, Debug)]
pub struct MkMatrix {
    k: usize,
    n: usize,
    rows: Vec<Composition>,
    cols: Vec<Composition>,
    entries: LMatrix,
}

impl MkMatrix {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Composition] {
        &self.rows
    }

    pub fn cols(&self) -> &[Composition] {
        &self.cols
    }

    pub fn entries(&self) -> &LMatrix {
        &self.entries
    }

    /// Square exactly when every partition of `k` is realizable, which
    /// holds for `n >= 2k`.
    pub fn is_square(&self) -> bool {
        self.rows.len() == self.cols.len()
    }
}

impl Serialize for MkMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("MkMatrix", 5)?;
        s.serialize_field("k", &self.k)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field(
            "rows",
            &self.rows.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        )?;
        s.serialize_field(
            "columns",
            &self.cols.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        )?;
        s.serialize_field("entries", &self.entries)?;
        s.end()
    }
}

/// Build the diagonal transition block for size `k` in rank `n`. Both
/// methods produce identical matrices; the second stays cheap as `n`
/// grows because it never forms an algebra product.
pub fn mk_matrix(k: usize, n: usize, method: MkMethod) -> Result<MkMatrix, Error> {
    assert!(k >= 1, "block size must be positive");
    if method == MkMethod::Direct && n > DIRECT_PAIRING_BOUND {
        return Err(Error::BoundExceeded {
            what: "direct pairing rank",
            got: n,
            limit: DIRECT_PAIRING_BOUND,
        });
    }
    let cols = partitions(k);
    let rows: Vec<Composition> = cols
        .iter()
        .filter(|l| l.size() + l.len() <= n)
        .cloned()
        .collect();
    let entries: LMatrix = match method {
        MkMethod::Direct => {
            let monomials: Vec<HeckeElement> =
                cols.iter().map(|mu| monomial_sym_jm(mu, n)).collect();
            rows.iter()
                .map(|lambda| {
                    let tw = IncreasingElement::of_shape(lambda, n)
                        .expect("rows are realizable by construction")
                        .to_basis_element(n);
                    monomials.iter().map(|m| tw.pairing(m)).collect()
                })
                .collect()
        }
        MkMethod::ViaXi => {
            let xi = build_xi(k);
            let rearrangements_by_col: Vec<Vec<Composition>> = cols
                .iter()
                .map(|mu| {
                    all_compositions(k)
                        .into_iter()
                        .filter(|alpha| &alpha.hat() == mu)
                        .collect()
                })
                .collect();
            rows.iter()
                .map(|lambda| {
                    let row_label = lambda.parent().expect("positive size");
                    rearrangements_by_col
                        .iter()
                        .map(|alphas| {
                            let mut total = LaurentPoly::zero();
                            for alpha in alphas {
                                total.add_assign(
                                    xi.entry(&row_label, &alpha.parent().expect("positive size")),
                                );
                            }
                            total
                        })
                        .collect()
                })
                .collect()
        }
    };
    Ok(MkMatrix {
        k,
        n,
        rows,
        cols,
        entries,
    })
}

fn indicator_matrix(comps: &[Composition], invert: bool) -> LMatrix {
    comps
        .iter()
        .map(|lambda| {
            comps
                .iter()
                .map(|mu| {
                    if lambda == mu {
                        LaurentPoly::one()
                    } else if &lambda.hat() == mu {
                        if invert {
                            LaurentPoly::one().neg()
                        } else {
                            LaurentPoly::one()
                        }
                    } else {
                        LaurentPoly::zero()
                    }
                })
                .collect()
        })
        .collect()
}

fn partition_submatrix(m: &LMatrix, comps: &[Composition]) -> LMatrix {
    let keep: Vec<usize> = comps
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_partition())
        .map(|(i, _)| i)
        .collect();
    keep.iter()
        .map(|&i| keep.iter().map(|&j| m[i][j].clone()).collect())
        .collect()
}

/// Verify the invertibility of the size-`k` diagonal block by the
/// change-of-index construction: conjugate the pairing matrix and its
/// inverse by the partition indicator, check that non-partition rows
/// vanish at partition columns, that the two partition submatrices are
/// exact mutual inverses, and that the block determinant is `±q^m`.
pub fn james_check(k: usize) -> Report {
    assert!(k >= 1, "block size must be positive");
    let comps = all_compositions(k);
    let x: LMatrix = if k > 0 {
        build_xi(k).entries().clone()
    } else {
        linalg::identity(1)
    };
    let x_inv = xi_inverse(k).entries().clone();
    let t = indicator_matrix(&comps, false);
    let t_inv = indicator_matrix(&comps, true);
    let mut report = Report::new();
    report.record(
        "the partition indicator matrix inverts exactly",
        json!({"k": k}),
        linalg::is_identity(&linalg::mul(&t, &t_inv)),
        || "T * T^-1 differs from the identity".to_string(),
    );
    let conjugated = linalg::mul(&linalg::mul(&t_inv, &x), &t);
    let conjugated_inv = linalg::mul(&linalg::mul(&t_inv, &x_inv), &t);
    let mut zero_witness = None;
    for (i, beta) in comps.iter().enumerate() {
        if beta.is_partition() {
            continue;
        }
        for (j, mu) in comps.iter().enumerate() {
            if mu.is_partition() && !conjugated[i][j].is_zero() && zero_witness.is_none() {
                zero_witness = Some(format!("nonzero entry at row {beta}, column {mu}"));
            }
        }
    }
    report.record(
        "conjugated pairing matrix vanishes at non-partition rows of partition columns",
        json!({"k": k}),
        zero_witness.is_none(),
        || zero_witness.clone().expect("witness recorded on failure"),
    );
    let u = partition_submatrix(&conjugated, &comps);
    let v = partition_submatrix(&conjugated_inv, &comps);
    report.record(
        "partition submatrices of the conjugated pair multiply to the identity",
        json!({"k": k}),
        linalg::is_identity(&linalg::mul(&v, &u)),
        || "VU differs from the identity".to_string(),
    );
    let det = linalg::det(&u);
    report.record(
        "diagonal block determinant is a unit monomial",
        json!({"k": k}),
        det.is_unit_monomial(),
        || format!("det = {det}"),
    );
    report
}

/// The full class-by-partition transition matrix for rank `n`: rows are
/// the partitions of `n` (conjugacy classes, via their minimal-length
/// increasing representatives), columns the partitions of size at most
/// `n - 1`, entries the pairings against monomial symmetric polynomials
/// in the Jucys-Murphy operators.
pub struct TransitionMatrix {
    n: usize,
    classes: Vec<Composition>,
    columns: Vec<Composition>,
    entries: LMatrix,
}

impl TransitionMatrix {
    pub fn build(n: usize) -> TransitionMatrix {
        assert!(n >= 1, "rank must be positive");
        let classes = partitions(n);
        let columns: Vec<Composition> = (0..n).flat_map(partitions).collect();
        let monomials: Vec<HeckeElement> = columns.iter().map(|l| monomial_sym_jm(l, n)).collect();
        let entries = classes
            .iter()
            .map(|rho| {
                let tw = min_length_rep(rho).to_basis_element(n);
                monomials.iter().map(|m| tw.pairing(m)).collect()
            })
            .collect();
        TransitionMatrix {
            n,
            classes,
            columns,
            entries,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[Composition] {
        &self.classes
    }

    pub fn columns(&self) -> &[Composition] {
        &self.columns
    }

    pub fn entries(&self) -> &LMatrix {
        &self.entries
    }

    /// Minimal length of the class in row `i`.
    fn row_length(&self, i: usize) -> usize {
        self.n - self.classes[i].len()
    }

    /// True when every entry with row length exceeding the column size is
    /// zero.
    pub fn is_block_triangular(&self) -> bool {
        self.first_triangularity_failure().is_none()
    }

    pub fn first_triangularity_failure(&self) -> Option<(Composition, Composition)> {
        for i in 0..self.classes.len() {
            for (j, mu) in self.columns.iter().enumerate() {
                if self.row_length(i) > mu.size() && !self.entries[i][j].is_zero() {
                    return Some((self.classes[i].clone(), mu.clone()));
                }
            }
        }
        None
    }

    /// Row indices and column indices of the size-`k` diagonal block.
    fn block(&self, k: usize) -> (Vec<usize>, Vec<usize>) {
        let rows = (0..self.classes.len())
            .filter(|&i| self.row_length(i) == k)
            .collect();
        let cols = self
            .columns
            .iter()
            .enumerate()
            .filter(|(_, mu)| mu.size() == k)
            .map(|(j, _)| j)
            .collect();
        (rows, cols)
    }

    /// Each diagonal block must have independent rows; returns the first
    /// block size where that fails.
    pub fn first_deficient_block(&self) -> Option<usize> {
        (0..self.n).find(|&k| {
            let (rows, cols) = self.block(k);
            let sub: LMatrix = rows
                .iter()
                .map(|&i| cols.iter().map(|&j| self.entries[i][j].clone()).collect())
                .collect();
            linalg::rank(&sub) < rows.len()
        })
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.entries)
    }
}

/// Verify that the symmetric polynomials in the Jucys-Murphy operators
/// span the centre in rank `n`: each is central, their span has full
/// centre rank, and the transition matrix is block triangular with
/// independent rows in every diagonal block.
pub fn dipper_james_check(n: usize) -> Result<Report, Error> {
    let mut report = Report::new();
    let columns: Vec<Composition> = (0..n).flat_map(partitions).collect();
    let monomials: Vec<HeckeElement> = columns.iter().map(|l| monomial_sym_jm(l, n)).collect();
    let non_central = columns
        .iter()
        .zip(&monomials)
        .find(|(_, m)| !m.is_central());
    report.record(
        "monomial symmetric polynomials in the operators are central",
        json!({"n": n, "max_size": n - 1}),
        non_central.is_none(),
        || format!("not central at {}", non_central.expect("witness").0),
    );
    let base = centre_basis(n)?;
    report.record(
        "centre dimension equals the partition count",
        json!({"n": n}),
        base.dimension() == partitions(n).len(),
        || format!("dimension {}", base.dimension()),
    );
    let perms = all_permutations(n);
    let span: LMatrix = monomials
        .iter()
        .map(|m| perms.iter().map(|w| m.coeff(w)).collect())
        .collect();
    let rank = linalg::rank(&span);
    report.record(
        "monomial symmetric polynomials span the centre",
        json!({"n": n}),
        rank == base.dimension(),
        || format!("rank {} of {}", rank, base.dimension()),
    );
    let transition = TransitionMatrix::build(n);
    let triangular_witness = transition.first_triangularity_failure();
    report.record(
        "transition matrix is block triangular",
        json!({"n": n}),
        triangular_witness.is_none(),
        || {
            let (rho, mu) = triangular_witness.clone().expect("witness");
            format!("nonzero below the blocks at class {rho}, column {mu}")
        },
    );
    let deficient = transition.first_deficient_block();
    report.record(
        "every diagonal block of the transition matrix has independent rows",
        json!({"n": n}),
        deficient.is_none(),
        || {
            format!(
                "rank deficit in the size-{} block",
                deficient.expect("witness")
            )
        },
    );
    let full_rank = transition.rank();
    report.record(
        "transition matrix has full row rank",
        json!({"n": n}),
        full_rank == transition.classes().len(),
        || format!("rank {} of {}", full_rank, transition.classes().len()),
    );
    Ok(report)
}

/// Verify that for `1 <= r < n` the `r`'th elementary symmetric polynomial
/// in the `n` Jucys-Murphy operators equals the sum of the dual basis
/// elements over classes with exactly `n - r` parts. With the generation
/// flag, additionally verify that products of these polynomials span the
/// centre.
pub fn elementary_symmetric_identity(n: usize, check_generation: bool) -> Result<Report, Error> {
    assert!(n >= 2, "the identity range needs rank at least 2");
    let gamma = geck_rouquier(n)?;
    let mut report = Report::new();
    for r in 1..n {
        let lhs = elementary_sym_jm(r, n);
        let mut rhs = HeckeElement::zero(n);
        for (rho, g) in gamma.iter() {
            if rho.len() == n - r {
                rhs.add_assign(g);
            }
        }
        report.record(
            "elementary symmetric polynomial equals the dual basis sum over classes with n - r parts",
            json!({"n": n, "r": r}),
            lhs == rhs,
            || format!("difference has {} terms", lhs.sub(&rhs).num_terms()),
        );
    }
    if check_generation {
        let perms = all_permutations(n);
        let generators: Vec<HeckeElement> = (1..n).map(|r| elementary_sym_jm(r, n)).collect();
        let target = partitions(n).len();
        let mut independent: Vec<HeckeElement> = vec![HeckeElement::one(n)];
        let mut rows: LMatrix = vec![perms.iter().map(|w| independent[0].coeff(w)).collect()];
        let mut frontier = independent.clone();
        while !frontier.is_empty() && independent.len() < target {
            let mut next = Vec::new();
            for f in &frontier {
                for e in &generators {
                    let candidate = f.mul(e);
                    let mut trial = rows.clone();
                    trial.push(perms.iter().map(|w| candidate.coeff(w)).collect());
                    if linalg::rank(&trial) > rows.len() {
                        rows = trial;
                        independent.push(candidate.clone());
                        next.push(candidate);
                    }
                }
            }
            frontier = next;
        }
        report.record(
            "products of the elementary symmetric polynomials span the centre",
            json!({"n": n}),
            independent.len() == target,
            || format!("reached dimension {} of {}", independent.len(), target),
        );
    }
    Ok(report)
}

/// All minimal-length elements of each conjugacy class, grouped by cycle
/// type: exactly the products of distinct simple reflections, in every
/// order.
pub fn minimal_length_class_elements(n: usize) -> BTreeMap<Composition, Vec<Permutation>> {
    assert!(n >= 1, "rank must be positive");
    let m = n - 1;
    let mut by_type: BTreeMap<Composition, BTreeSet<Permutation>> = BTreeMap::new();
    for mask in 0..1usize << m {
        let indices: Vec<usize> = (1..=m).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let count = indices.len();
        for arrangement in indices.into_iter().permutations(count) {
            let w = Permutation::from_word(n, &arrangement);
            assert_eq!(
                w.length(),
                count,
                "products of distinct simple reflections are reduced"
            );
            by_type.entry(w.cycle_type()).or_default().insert(w);
        }
    }
    by_type
        .into_iter()
        .map(|(t, set)| (t, set.into_iter().collect()))
        .collect()
}
