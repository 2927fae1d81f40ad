//! Exact adjacency spectra.
//!
//! Spectra are compared through the characteristic polynomial `det(xI - A)`
//! with arbitrary-precision integer coefficients, so no eigenvalue is ever
//! materialised as a float and isospectrality is an exact test.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{bit_indices, Graph};

/// Integer coefficients `c_0, .., c_d` of a monic degree-`d` polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    /// Coefficients, constant term first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^i` (zero above the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Option<CharPoly> {
        (coeffs.last().is_some_and(|c| c.is_one())).then_some(CharPoly { coeffs })
    }

    /// Polynomial product.
    pub fn mul(&self, other: &CharPoly) -> CharPoly {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        CharPoly { coeffs: out }
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for CharPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

/// `det(xI - A)` by the Faddeev–LeVerrier recurrence:
///
/// `M_1 = I`, `c_{d-k} = -tr(A M_k) / k`, `M_{k+1} = A M_k + c_{d-k} I`.
///
/// Every division is exact over the integers.
pub fn characteristic_polynomial(g: &Graph) -> CharPoly {
    let d = g.order();
    let mut coeffs = vec![BigInt::zero(); d + 1];
    coeffs[d] = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = identity(d);
    for k in 1..=d {
        let am = adjacency_times(g, &m);
        let trace: BigInt = (0..d).map(|i| &am[i][i]).sum();
        let c = -(trace / BigInt::from(k));
        if k < d {
            m = am;
            for (i, row) in m.iter_mut().enumerate() {
                row[i] += &c;
            }
        }
        coeffs[d - k] = c;
    }
    CharPoly { coeffs }
}

fn identity(d: usize) -> Vec<Vec<BigInt>> {
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// `A·M` for the 0/1 adjacency matrix `A`: row `i` is the sum of the rows
/// of `M` indexed by the neighbours of `i`.
fn adjacency_times(g: &Graph, m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let d = g.order();
    (0..d)
        .map(|i| {
            let mut row = vec![BigInt::zero(); d];
            for j in bit_indices(g.adjacency(i)) {
                for (acc, x) in row.iter_mut().zip(&m[j]) {
                    *acc += x;
                }
            }
            row
        })
        .collect()
}

/// True iff both graphs have the same characteristic polynomial.
pub fn are_isospectral(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && characteristic_polynomial(g) == characteristic_polynomial(h)
}

/// Self-check that `-c_{d-2}` equals the edge count, since the sum of the
/// squared eigenvalues is `tr(A^2) = 2m`.
pub fn edge_count_spectral_identity(g: &Graph) -> Result<bool> {
    let p = characteristic_polynomial(g);
    check_spectral_identity(g, &p)
}

pub(crate) fn check_spectral_identity(g: &Graph, p: &CharPoly) -> Result<bool> {
    let d = g.order();
    if p.degree() != d {
        return Err(Error::InvariantViolation(format!(
            "characteristic polynomial has degree {} for order {d}",
            p.degree()
        )));
    }
    if d >= 1 && !p.coeff(d - 1).is_zero() {
        return Err(Error::InvariantViolation(format!(
            "trace coefficient is {} but the adjacency matrix is traceless",
            p.coeff(d - 1)
        )));
    }
    if d >= 2 && -p.coeff(d - 2) != BigInt::from(g.edge_count()) {
        return Err(Error::InvariantViolation(format!(
            "-c_(d-2) = {} but the graph has {} edges",
            -p.coeff(d - 2),
            g.edge_count()
        )));
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> CharPoly {
        CharPoly::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn k2() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(characteristic_polynomial(&k2), poly(&[-1, 0, 1]));
    }

    #[test]
    fn c4_from_its_eigenvalues() {
        // eigenvalues 2, 0, 0, -2: (x-2)(x+2)x^2 = x^4 - 4x^2
        let expanded = poly(&[-2, 1])
            .mul(&poly(&[2, 1]))
            .mul(&poly(&[0, 1]))
            .mul(&poly(&[0, 1]));
        assert_eq!(expanded, poly(&[0, 0, -4, 0, 1]));
        assert_eq!(characteristic_polynomial(&cycle(4)), expanded);
        assert_eq!(expanded.to_string(), "x^4 - 4x^2");
    }

    #[test]
    fn p4_by_cofactor_expansion() {
        // det(xI - A) for the tridiagonal path matrix: p_k = x p_{k-1} - p_{k-2}
        let mut prev = poly(&[1]);
        let mut cur = poly(&[0, 1]);
        for _ in 2..=4 {
            let shifted = cur.mul(&poly(&[0, 1]));
            let coeffs: Vec<BigInt> = (0..=shifted.degree())
                .map(|i| shifted.coeff(i) - prev.coeff(i))
                .collect();
            prev = cur;
            cur = CharPoly::from_coeffs(coeffs).unwrap();
        }
        assert_eq!(cur, poly(&[1, 0, -3, 0, 1]));
        assert_eq!(characteristic_polynomial(&path(4)), cur);
    }

    #[test]
    fn edgeless() {
        let e = Graph::empty(4).unwrap();
        assert_eq!(characteristic_polynomial(&e), poly(&[0, 0, 0, 0, 1]));
        assert_eq!(
            characteristic_polynomial(&Graph::empty(0).unwrap()),
            poly(&[1])
        );
    }

    #[test]
    fn isospectral_examples() {
        let c4 = cycle(4);
        assert!(are_isospectral(&c4, &c4.relabel(&[2, 0, 3, 1]).unwrap()));
        assert!(!are_isospectral(&c4, &path(4)));
        let star = Graph::new(5, (1..5).map(|i| (0, i))).unwrap();
        let a = star.disjoint_union(&c4).unwrap();
        let b = c4.disjoint_union(&star).unwrap();
        assert!(are_isospectral(&a, &b));
    }

    #[test]
    fn star_and_c4_plus_k1_are_cospectral() {
        // x^5 - 4x^3 for both
        let star = Graph::new(5, (1..5).map(|i| (0, i))).unwrap();
        let c4k1 = cycle(4).disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(characteristic_polynomial(&star), poly(&[0, 0, 0, -4, 0, 1]));
        assert!(are_isospectral(&star, &c4k1));
    }

    #[test]
    fn spectral_identity() {
        assert!(edge_count_spectral_identity(&cycle(4)).unwrap());
        let k6 = Graph::complete(6).unwrap();
        assert_eq!(characteristic_polynomial(&k6).coeff(4), BigInt::from(-15));
        assert!(edge_count_spectral_identity(&k6).unwrap());
        assert!(edge_count_spectral_identity(&Graph::empty(5).unwrap()).unwrap());
    }

    #[test]
    fn spectral_identity_detects_corruption() {
        let g = cycle(4);
        let bad = poly(&[0, 0, -3, 0, 1]);
        assert!(matches!(
            check_spectral_identity(&g, &bad),
            Err(Error::InvariantViolation(_))
        ));
    }

    #[test]
    fn union_multiplies() {
        let k4 = Graph::complete(4).unwrap();
        let c4 = cycle(4);
        for h in [k4, c4] {
            let p = characteristic_polynomial(&h);
            let u = h.disjoint_union(&h).unwrap();
            assert_eq!(characteristic_polynomial(&u), p.mul(&p));
        }
    }
}
