//! The eight matrix families indexed by compositions of size below a bound
//! `k`, in listing order: the involutions `J` and `K`, the inverse pair `Z`
//! and `Y`, the series transition matrices `A` and `B`, and the pairing
//! matrices `Xi` and `Upsilon` defined by block recursions.
//!
//! The index list concatenates the compositions of each size `0..k`, which
//! is exactly ascending listing order. Appending a final part to a
//! composition of size `< k` is a bijection onto the compositions of size
//! exactly `k` that preserves listing order; the 2x2 block recursions below
//! identify the new block of the index with the whole previous index through
//! that bijection, and the builders assert it.

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::compositions::{all_compositions, contains, structure_constants_of_pair, Composition};
use crate::laurent::{frak_a_comp, frak_b_comp, LaurentPoly};
use crate::linalg::{self, LMatrix};
use crate::Error;

/// Which of the four elementary sign-pattern matrices to build.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SignFamily {
    J,
    K,
    Z,
    Y,
}

/// Whether to build matrices from entry definitions or block recursions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BuildMethod {
    ClosedForm,
    Recursion,
}

/// All compositions of size strictly below `k`, in listing order.
pub fn index_below(k: usize) -> Vec<Composition> {
    (0..k).flat_map(all_compositions).collect()
}

/// A square matrix with Laurent entries, rows and columns indexed by the
/// compositions of size below `bound` in listing order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompMatrix {
    bound: usize,
    index: Vec<Composition>,
    entries: LMatrix,
}

impl CompMatrix {
    fn from_fn(k: usize, f: impl Fn(&Composition, &Composition) -> LaurentPoly) -> CompMatrix {
        assert!(k >= 1, "bound must be positive");
        let index = index_below(k);
        let entries = index
            .iter()
            .map(|lam| index.iter().map(|mu| f(lam, mu)).collect())
            .collect();
        CompMatrix {
            bound: k,
            index,
            entries,
        }
    }

    /// Assemble from the 2x2 block form over the index of `k - 1`, using the
    /// append-a-part bijection for the second half of the index.
    fn from_blocks(k: usize, tl: &LMatrix, tr: &LMatrix, bl: &LMatrix, br: &LMatrix) -> CompMatrix {
        assert!(k >= 2, "block form needs a smaller bound to recurse on");
        let index = index_below(k);
        let half = index.len() / 2;
        for m in [tl, tr, bl, br] {
            assert_eq!(m.len(), half, "block dimensions");
        }
        // The second half of the index must be the size-(k-1) compositions,
        // listed as parent-in-first-half with one part appended.
        for (i, lam) in index[half..].iter().enumerate() {
            assert_eq!(lam.size(), k - 1, "second block holds size k-1");
            assert_eq!(
                lam.parent().expect("nonempty"),
                index[i],
                "append-a-part bijection preserves listing order"
            );
        }
        let entries = (0..2 * half)
            .map(|i| {
                (0..2 * half)
                    .map(|j| {
                        let block = match (i < half, j < half) {
                            (true, true) => tl,
                            (true, false) => tr,
                            (false, true) => bl,
                            (false, false) => br,
                        };
                        block[i % half][j % half].clone()
                    })
                    .collect()
            })
            .collect();
        CompMatrix {
            bound: k,
            index,
            entries,
        }
    }

    pub fn identity(k: usize) -> CompMatrix {
        CompMatrix::from_fn(k, |lam, mu| {
            if lam == mu {
                LaurentPoly::one()
            } else {
                LaurentPoly::zero()
            }
        })
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn dim(&self) -> usize {
        self.index.len()
    }

    pub fn index(&self) -> &[Composition] {
        &self.index
    }

    pub fn entries(&self) -> &LMatrix {
        &self.entries
    }

    pub fn entry_at(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i][j]
    }

    /// Entry by row and column composition; panics if either is out of range.
    pub fn entry(&self, row: &Composition, col: &Composition) -> &LaurentPoly {
        let i = self.position(row);
        let j = self.position(col);
        &self.entries[i][j]
    }

    /// Position of a composition in the index list.
    pub fn position(&self, lam: &Composition) -> usize {
        self.index
            .binary_search(lam)
            .unwrap_or_else(|_| panic!("composition {lam} has size >= bound {}", self.bound))
    }

    pub fn mul(&self, other: &CompMatrix) -> CompMatrix {
        assert_eq!(self.bound, other.bound, "matching index bounds");
        CompMatrix {
            bound: self.bound,
            index: self.index.clone(),
            entries: linalg::mul(&self.entries, &other.entries),
        }
    }

    pub fn is_identity(&self) -> bool {
        linalg::is_identity(&self.entries)
    }

    pub fn det(&self) -> LaurentPoly {
        linalg::det(&self.entries)
    }

    /// Exact inverse; errors if singular or if the inverse leaves the
    /// Laurent ring.
    pub fn invert(&self) -> Result<CompMatrix, Error> {
        let (det, scaled) = linalg::scaled_inverse(&self.entries)?;
        let entries = scaled
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|e| e.exact_div(&det).ok_or(Error::NonLaurentInverse))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CompMatrix {
            bound: self.bound,
            index: self.index.clone(),
            entries,
        })
    }
}

impl Serialize for CompMatrix {
    /// JSON object `{"bound", "index", "entries"}` with composition strings
    /// as index labels.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CompMatrix", 3)?;
        s.serialize_field("bound", &self.bound)?;
        s.serialize_field("index", &self.index)?;
        s.serialize_field("entries", &self.entries)?;
        s.end()
    }
}

fn sign_of_length(lam: &Composition) -> LaurentPoly {
    LaurentPoly::constant(if lam.len().is_multiple_of(2) { 1 } else { -1 })
}

/// The prefix of `mu` of size exactly `size`, when the prefix sums hit it.
fn prefix_of_size(mu: &Composition, size: usize) -> Option<Composition> {
    let mut acc = 0;
    let mut parts = Vec::new();
    for &p in mu.parts() {
        if acc >= size {
            break;
        }
        acc += p;
        parts.push(p);
    }
    (acc == size).then(|| Composition::new(parts))
}

fn closed_entry(which: SignFamily, lam: &Composition, mu: &Composition) -> LaurentPoly {
    match which {
        // Sign of mu's length when mu refines lam.
        SignFamily::J => {
            if contains(lam, mu) {
                sign_of_length(mu)
            } else {
                LaurentPoly::zero()
            }
        }
        // Sign of mu's length when some prefix of mu refines lam.
        SignFamily::K => match prefix_of_size(mu, lam.size()) {
            Some(pre) if contains(lam, &pre) => sign_of_length(mu),
            _ => LaurentPoly::zero(),
        },
        // Indicator of mu or its parent being lam.
        SignFamily::Z => {
            if lam == mu || mu.parent().as_ref() == Some(lam) {
                LaurentPoly::one()
            } else {
                LaurentPoly::zero()
            }
        }
        // Signed indicator of lam being a prefix of mu.
        SignFamily::Y => {
            if lam.is_prefix_of(mu) {
                LaurentPoly::constant(if (mu.len() - lam.len()).is_multiple_of(2) {
                    1
                } else {
                    -1
                })
            } else {
                LaurentPoly::zero()
            }
        }
    }
}

/// Build `J`, `K`, `Z`, or `Y` at bound `k`, either from the entry
/// definitions or from the 2x2 block recursions; the two agree.
pub fn build_sign_family(k: usize, which: SignFamily, method: BuildMethod) -> CompMatrix {
    assert!(k >= 1, "bound must be positive");
    match method {
        BuildMethod::ClosedForm => CompMatrix::from_fn(k, |lam, mu| closed_entry(which, lam, mu)),
        BuildMethod::Recursion => {
            if k == 1 {
                return CompMatrix::identity(1);
            }
            let prev = |fam| build_sign_family(k - 1, fam, BuildMethod::Recursion).entries;
            let neg = |m: &LMatrix| -> LMatrix {
                m.iter()
                    .map(|r| r.iter().map(LaurentPoly::neg).collect())
                    .collect()
            };
            let half = index_below(k).len() / 2;
            let zero: LMatrix = vec![vec![LaurentPoly::zero(); half]; half];
            let id = linalg::identity(half);
            match which {
                SignFamily::J => {
                    let j = prev(SignFamily::J);
                    let kk = prev(SignFamily::K);
                    CompMatrix::from_blocks(k, &j, &zero, &zero, &neg(&kk))
                }
                SignFamily::K => {
                    let kk = prev(SignFamily::K);
                    CompMatrix::from_blocks(k, &kk, &neg(&kk), &zero, &neg(&kk))
                }
                SignFamily::Z => {
                    let z = prev(SignFamily::Z);
                    CompMatrix::from_blocks(k, &z, &id, &zero, &id)
                }
                SignFamily::Y => {
                    let y = prev(SignFamily::Y);
                    CompMatrix::from_blocks(k, &y, &neg(&y), &zero, &id)
                }
            }
        }
    }
}

/// Shared builder for the series transition matrices: the `(lam, mu)` entry
/// is the structure-constant sum over compositions `eta` of `|lam| - |mu|`,
/// weighted by the series coefficient of `eta`. Built column by column so
/// each `(eta, mu)` pair enumerates its merge patterns once.
fn build_series_transition(k: usize, weight: fn(&Composition) -> LaurentPoly) -> CompMatrix {
    assert!(k >= 1, "bound must be positive");
    let index = index_below(k);
    let mut entries: LMatrix = vec![vec![LaurentPoly::zero(); index.len()]; index.len()];
    for (j, mu) in index.iter().enumerate() {
        for d in 0..k - mu.size() {
            for eta in all_compositions(d) {
                let w = weight(&eta);
                for (lam, count) in structure_constants_of_pair(&eta, mu) {
                    let i = index.binary_search(&lam).expect("size below bound");
                    entries[i][j].add_assign(&w.scale(&count.into()));
                }
            }
        }
    }
    CompMatrix {
        bound: k,
        index,
        entries,
    }
}

/// The transition matrix `A` at bound `k`: lower triangular with unit
/// diagonal in listing order.
pub fn build_a(k: usize) -> CompMatrix {
    build_series_transition(k, frak_a_comp)
}

/// The transition matrix `B`, inverse to `A`.
pub fn build_b(k: usize) -> CompMatrix {
    build_series_transition(k, frak_b_comp)
}

/// `Xi` by its defining recursion:
/// `Xi(1) = (1)`, `Xi(k+1) = blockdiag(Xi, Xi) * Z(k+1) * A(k+1)`.
pub fn build_xi(k: usize) -> CompMatrix {
    assert!(k >= 1, "bound must be positive");
    if k == 1 {
        return CompMatrix::identity(1);
    }
    let prev = build_xi(k - 1).entries;
    let half = prev.len();
    let zero: LMatrix = vec![vec![LaurentPoly::zero(); half]; half];
    let diag = CompMatrix::from_blocks(k, &prev, &zero, &zero, &prev);
    let z = build_sign_family(k, SignFamily::Z, BuildMethod::ClosedForm);
    diag.mul(&z).mul(&build_a(k))
}

/// `Upsilon` by its defining recursion:
/// `Upsilon(1) = (1)`, `Upsilon(k+1) = Z(k+1) * A(k+1) * blockdiag(Upsilon, Upsilon)`.
pub fn build_upsilon(k: usize) -> CompMatrix {
    assert!(k >= 1, "bound must be positive");
    if k == 1 {
        return CompMatrix::identity(1);
    }
    let prev = build_upsilon(k - 1).entries;
    let half = prev.len();
    let zero: LMatrix = vec![vec![LaurentPoly::zero(); half]; half];
    let diag = CompMatrix::from_blocks(k, &prev, &zero, &zero, &prev);
    let z = build_sign_family(k, SignFamily::Z, BuildMethod::ClosedForm);
    z.mul(&build_a(k)).mul(&diag)
}

/// `Xi` inverse by the inverted recursion
/// `Xi(k+1)^-1 = B(k+1) * Y(k+1) * blockdiag(Xi^-1, Xi^-1)`, avoiding any
/// elimination; cross-checked against [`CompMatrix::invert`] in tests.
pub fn xi_inverse(k: usize) -> CompMatrix {
    assert!(k >= 1, "bound must be positive");
    if k == 1 {
        return CompMatrix::identity(1);
    }
    let prev = xi_inverse(k - 1).entries;
    let half = prev.len();
    let zero: LMatrix = vec![vec![LaurentPoly::zero(); half]; half];
    let diag = CompMatrix::from_blocks(k, &prev, &zero, &zero, &prev);
    let y = build_sign_family(k, SignFamily::Y, BuildMethod::ClosedForm);
    build_b(k).mul(&y).mul(&diag)
}

/// The named identities tying the families together, each checked exactly:
/// `J^2 = I`, `K^2 = I`, `ZY = I`, `JK = Y`, `KJ = Z`, `AB = I`, `AJ = JB`,
/// and `Xi * (K Upsilon K) = I`. Returns the failures by name.
pub fn matrix_identity_failures(k: usize) -> Vec<&'static str> {
    let j = build_sign_family(k, SignFamily::J, BuildMethod::ClosedForm);
    let kk = build_sign_family(k, SignFamily::K, BuildMethod::ClosedForm);
    let z = build_sign_family(k, SignFamily::Z, BuildMethod::ClosedForm);
    let y = build_sign_family(k, SignFamily::Y, BuildMethod::ClosedForm);
    let a = build_a(k);
    let b = build_b(k);
    let xi = build_xi(k);
    let upsilon = build_upsilon(k);
    let mut failures = Vec::new();
    let mut check = |name: &'static str, ok: bool| {
        if !ok {
            failures.push(name);
        }
    };
    check("J^2 = I", j.mul(&j).is_identity());
    check("K^2 = I", kk.mul(&kk).is_identity());
    check("ZY = I", z.mul(&y).is_identity());
    check("JK = Y", j.mul(&kk) == y);
    check("KJ = Z", kk.mul(&j) == z);
    check("AB = I", a.mul(&b).is_identity());
    check("AJ = JB", a.mul(&j) == j.mul(&b));
    check(
        "Xi (K Upsilon K) = I",
        xi.mul(&kk.mul(&upsilon).mul(&kk)).is_identity(),
    );
    failures
}
