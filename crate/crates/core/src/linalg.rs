//! Exact dense linear algebra over the Laurent ring and its fraction field.
//!
//! Determinant and rank use fraction-free elimination so every intermediate
//! value stays a Laurent polynomial; kernels and inverses go through the
//! fraction field and are cleared back to primitive Laurent vectors where the
//! caller expects integrality.

use crate::laurent::{LaurentPoly, RationalFunction};
use crate::Error;

pub type LMatrix = Vec<Vec<LaurentPoly>>;
pub type RMatrix = Vec<Vec<RationalFunction>>;

pub fn identity(n: usize) -> LMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        LaurentPoly::one()
                    } else {
                        LaurentPoly::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn is_identity(m: &LMatrix) -> bool {
    m.iter().enumerate().all(|(i, row)| {
        row.len() == m.len()
            && row
                .iter()
                .enumerate()
                .all(|(j, e)| if i == j { e.is_one() } else { e.is_zero() })
    })
}

pub fn mul(a: &LMatrix, b: &LMatrix) -> LMatrix {
    let inner = a.first().map_or(0, Vec::len);
    assert_eq!(inner, b.len(), "inner dimensions");
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut s = LaurentPoly::zero();
                    for (k, e) in row.iter().enumerate() {
                        if !e.is_zero() && !b[k][j].is_zero() {
                            s.add_assign(&e.mul(&b[k][j]));
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

pub fn to_rational(m: &LMatrix) -> RMatrix {
    m.iter()
        .map(|row| {
            row.iter()
                .map(|e| RationalFunction::from_laurent(e.clone()))
                .collect()
        })
        .collect()
}

/// Fraction-free row elimination in place. Returns the rank, whether an odd
/// number of row swaps happened, and the final pivot. Every division is by
/// the previous pivot and is exact, so entries never leave the Laurent ring.
#[allow(clippy::needless_range_loop)]
fn fraction_free_eliminate(m: &mut [Vec<LaurentPoly>]) -> (usize, bool, LaurentPoly) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut denom = LaurentPoly::one();
    let mut odd_swaps = false;
    let mut last_pivot = LaurentPoly::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            odd_swaps = !odd_swaps;
        }
        let pivot = m[r][c].clone();
        for i in r + 1..rows {
            if m[i][c].is_zero() {
                for j in c + 1..cols {
                    let num = pivot.mul(&m[i][j]);
                    m[i][j] = num
                        .exact_div(&denom)
                        .expect("fraction-free update divides exactly");
                }
                continue;
            }
            let factor = std::mem::replace(&mut m[i][c], LaurentPoly::zero());
            for j in c + 1..cols {
                let num = pivot.mul(&m[i][j]).sub(&factor.mul(&m[r][j]));
                m[i][j] = num
                    .exact_div(&denom)
                    .expect("fraction-free update divides exactly");
            }
        }
        denom = pivot.clone();
        last_pivot = pivot;
        r += 1;
    }
    (r, odd_swaps, last_pivot)
}

pub fn rank(m: &LMatrix) -> usize {
    let mut work = m.clone();
    fraction_free_eliminate(&mut work).0
}

/// Determinant of a square matrix; the final fraction-free pivot is the
/// determinant up to the row-swap sign.
pub fn det(m: &LMatrix) -> LaurentPoly {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "square matrix");
    let mut work = m.clone();
    let (rank, odd_swaps, last_pivot) = fraction_free_eliminate(&mut work);
    if rank < n {
        return LaurentPoly::zero();
    }
    if odd_swaps {
        last_pivot.neg()
    } else {
        last_pivot
    }
}

/// Fraction-free Gauss-Jordan elimination of a square Laurent matrix.
/// Returns `(det, p)` with `p = det * m^{-1}`: every intermediate value is a
/// Laurent polynomial and every division (by the previous pivot) is exact,
/// so no fraction-field arithmetic is involved.
#[allow(clippy::needless_range_loop)]
pub fn scaled_inverse(m: &LMatrix) -> Result<(LaurentPoly, LMatrix), Error> {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "square matrix");
    let cols = 2 * n;
    let mut a: Vec<Vec<LaurentPoly>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    LaurentPoly::one()
                } else {
                    LaurentPoly::zero()
                }
            }));
            r
        })
        .collect();
    let mut denom = LaurentPoly::one();
    let mut odd_swaps = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Err(Error::SingularMatrix);
        };
        if p != k {
            a.swap(p, k);
            odd_swaps = !odd_swaps;
        }
        let pivot = a[k][k].clone();
        for i in 0..n {
            if i == k {
                continue;
            }
            let factor = std::mem::replace(&mut a[i][k], LaurentPoly::zero());
            for j in 0..cols {
                if j == k || (a[i][j].is_zero() && (factor.is_zero() || a[k][j].is_zero())) {
                    continue;
                }
                let num = pivot.mul(&a[i][j]).sub(&factor.mul(&a[k][j]));
                a[i][j] = num
                    .exact_div(&denom)
                    .expect("fraction-free update divides exactly");
            }
        }
        denom = pivot;
    }
    let mut inv: LMatrix = a.into_iter().map(|row| row[n..].to_vec()).collect();
    if odd_swaps {
        denom = denom.neg();
        for row in &mut inv {
            for e in row {
                *e = e.neg();
            }
        }
    }
    Ok((denom, inv))
}

/// Reduced row echelon form over the fraction field; returns pivot columns.
#[allow(clippy::needless_range_loop)]
fn rref(a: &mut [Vec<RationalFunction>]) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let inv = a[r][c].invert().expect("nonzero pivot");
        for j in c..cols {
            a[r][j] = a[r][j].mul(&inv);
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = std::mem::replace(&mut a[i][c], RationalFunction::zero());
                for j in c + 1..cols {
                    a[i][j] = a[i][j].sub(&f.mul(&a[r][j]));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Scale a fraction-field vector to a primitive Laurent vector: clear
/// denominators by their least common multiple, divide out the polynomial
/// content, shift so the lowest exponent present is zero, and fix the sign
/// by the leading coefficient of the first nonzero entry.
pub fn clear_to_primitive(v: &[RationalFunction]) -> Vec<LaurentPoly> {
    let mut l = LaurentPoly::one();
    for e in v {
        let d = e.denominator();
        l = l
            .mul(d)
            .exact_div(&l.gcd(d))
            .expect("gcd divides the product");
    }
    let cleared: Vec<LaurentPoly> = v
        .iter()
        .map(|e| {
            let cofactor = l
                .exact_div(e.denominator())
                .expect("denominator divides the common multiple");
            e.numerator().mul(&cofactor)
        })
        .collect();
    primitive_normalize(cleared)
}

fn primitive_normalize(mut v: Vec<LaurentPoly>) -> Vec<LaurentPoly> {
    let mut g = LaurentPoly::zero();
    for e in &v {
        g = g.gcd(e);
    }
    if g.is_zero() {
        return v;
    }
    for e in &mut v {
        *e = e.exact_div(&g).expect("content divides every entry");
    }
    let shift = v.iter().filter_map(LaurentPoly::min_exp).min().unwrap_or(0);
    if shift != 0 {
        for e in &mut v {
            *e = e.shift(-shift);
        }
    }
    let negate = v.iter().find(|e| !e.is_zero()).is_some_and(|e| {
        let top = e.max_exp().expect("nonzero");
        e.coeff(top) < 0.into()
    });
    if negate {
        for e in &mut v {
            *e = e.neg();
        }
    }
    v
}

/// Basis of the right kernel `{x : m x = 0}` as primitive Laurent vectors,
/// one per free column, in column order.
pub fn nullspace(m: &LMatrix, cols: usize) -> Vec<Vec<LaurentPoly>> {
    assert!(m.iter().all(|r| r.len() == cols), "row length");
    let mut a = to_rational(m);
    let pivots = rref(&mut a);
    let pivot_in: Vec<Option<usize>> = {
        let mut v = vec![None; cols];
        for (row, &c) in pivots.iter().enumerate() {
            v[c] = Some(row);
        }
        v
    };
    let mut basis = Vec::new();
    for f in 0..cols {
        if pivot_in[f].is_some() {
            continue;
        }
        let mut x = vec![RationalFunction::zero(); cols];
        x[f] = RationalFunction::one();
        for (row, &c) in pivots.iter().enumerate() {
            x[c] = a[row][f].neg();
        }
        basis.push(clear_to_primitive(&x));
    }
    basis
}

/// Inverse over the fraction field.
pub fn invert(m: &RMatrix) -> Result<RMatrix, Error> {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "square matrix");
    let mut a: Vec<Vec<RationalFunction>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    RationalFunction::one()
                } else {
                    RationalFunction::zero()
                }
            }));
            r
        })
        .collect();
    let pivots = rref(&mut a);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return Err(Error::SingularMatrix);
    }
    Ok(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Solve the square system `a x = rhs` over the fraction field.
pub fn solve(a: &RMatrix, rhs: &[RationalFunction]) -> Result<Vec<RationalFunction>, Error> {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n), "square matrix");
    assert_eq!(rhs.len(), n, "right-hand side length");
    let mut aug: Vec<Vec<RationalFunction>> = a
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return Err(Error::SingularMatrix);
    }
    Ok(aug.into_iter().map(|row| row[n].clone()).collect())
}
