//! Minors of the Toeplitz matrix `M[i][j] = a_{j-i}` (with `a_k = 0` for
//! `k < 0`) restricted to what a finite window of terms determines.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::Truncation;
use crate::exact_poly::{serde_rational, Rational};

/// A negative minor, reproducible from its row and column indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    #[serde(with = "serde_rational")]
    pub value: Rational,
}

/// Exact determinant by fraction-based Gaussian elimination.
pub fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::from_integer(1.into());
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            let (top, bottom) = m.split_at_mut(r);
            for (x, y) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *x -= &factor * y;
            }
        }
    }
    det
}

/// Minor of the Toeplitz matrix of `a` at the given rows and columns.
///
/// Every index `j - i` must be below `a.len()`.
pub fn toeplitz_minor(a: &[Rational], rows: &[usize], cols: &[usize]) -> Rational {
    let m = rows
        .iter()
        .map(|&i| {
            cols.iter()
                .map(|&j| {
                    if j < i {
                        Rational::zero()
                    } else {
                        a[j - i].clone()
                    }
                })
                .collect()
        })
        .collect();
    determinant(m)
}

/// Lexicographically first negative minor of order `1..=max_order` (order
/// first, then rows, then columns) among those the window determines.
///
/// Rows and columns range over `0..t.len()`, so every entry `a_{j-i}` used
/// is a known term. `None` only means no negative minor inside the window.
///
/// Minors are invariant under shifting all indices by the same amount, and a
/// minor whose first column precedes its first row has a zero column. The
/// first negative minor in the order above therefore always has row 0, and
/// the search only enumerates such row sets.
pub fn toeplitz_minor_search(t: &Truncation, max_order: usize) -> Option<MinorWitness> {
    let n = t.len();
    for order in 1..=max_order.min(n) {
        let mut rows: Vec<usize> = (0..order).collect();
        loop {
            if let Some(w) = search_cols(&t.terms, &rows, order) {
                return Some(w);
            }
            if !next_combination(&mut rows[1..], n) {
                break;
            }
        }
    }
    None
}

/// First negative contiguous minor, rows `0..r` and columns `s..s + r`,
/// by increasing order `r <= max_order` and then offset `s`.
///
/// These are the minors `det(a_{s + j - i})`, whose signs detect complex
/// zeros of a generating polynomial at orders far beyond what the exhaustive
/// search can reach.
pub fn band_minor_search(t: &Truncation, max_order: usize) -> Option<MinorWitness> {
    let n = t.len();
    for order in 1..=max_order.min(n) {
        let rows: Vec<usize> = (0..order).collect();
        for offset in 0..=n - order {
            let cols: Vec<usize> = (offset..offset + order).collect();
            let v = toeplitz_minor(&t.terms, &rows, &cols);
            if v.is_negative() {
                return Some(MinorWitness {
                    rows,
                    cols,
                    value: v,
                });
            }
        }
    }
    None
}

fn search_cols(a: &[Rational], rows: &[usize], order: usize) -> Option<MinorWitness> {
    let n = a.len();
    let mut cols: Vec<usize> = (0..order).collect();
    loop {
        // Column j_s must be at least row i_s or the leading block has a
        // zero column; such minors vanish and are skipped cheaply.
        if cols.iter().zip(rows).all(|(c, r)| c >= r) {
            let v = toeplitz_minor(a, rows, &cols);
            if v.is_negative() {
                return Some(MinorWitness {
                    rows: rows.to_vec(),
                    cols: cols.clone(),
                    value: v,
                });
            }
        }
        if !next_combination(&mut cols, n) {
            return None;
        }
    }
}

/// Advances `c` (strictly increasing, values below `n`) to the next
/// combination in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - (k - i) {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
