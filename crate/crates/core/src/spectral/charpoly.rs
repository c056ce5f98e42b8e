//! Division-free characteristic polynomials (Berkowitz).

use super::poly::IntPoly;
use crate::graph::Graph;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Minimal ring interface; `None` signals overflow.
trait Ring: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
}

impl Ring for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
}

/// Coefficients of `det(xI - A)`, highest degree first.
///
/// Step `r` extends the characteristic polynomial of the leading `r x r`
/// block to the leading `(r+1) x (r+1)` block by a lower-triangular Toeplitz
/// product whose first column is `1, -a_rr, -R C, -R M C, …, -R M^(r-1) C`.
/// Adjacency entries are 0/1 with a zero diagonal, so the vector products are
/// neighbour sums.
fn berkowitz<T: Ring>(g: &Graph) -> Option<Vec<T>> {
    let n = g.n();
    let mut p: Vec<T> = vec![T::one()];
    for r in 0..n {
        let row: Vec<usize> = g.neighbors(r).iter().take_while(|&w| w < r).collect();
        let mut q: Vec<T> = Vec::with_capacity(r + 2);
        q.push(T::one());
        q.push(T::zero());
        // v = C, the first r entries of column r
        let mut v: Vec<T> = (0..r)
            .map(|i| if g.has_edge(i, r) { T::one() } else { T::zero() })
            .collect();
        for j in 0..r {
            let mut s = T::zero();
            for &w in &row {
                s = s.add(&v[w])?;
            }
            q.push(s.neg()?);
            if j + 1 < r {
                let mut next = vec![T::zero(); r];
                for (i, slot) in next.iter_mut().enumerate() {
                    let mut acc = T::zero();
                    for w in g.neighbors(i).iter().take_while(|&w| w < r) {
                        acc = acc.add(&v[w])?;
                    }
                    *slot = acc;
                }
                v = next;
            }
        }
        let mut next = vec![T::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            let mut acc = T::zero();
            for (j, pj) in p.iter().enumerate().take(i.min(r) + 1) {
                acc = acc.add(&q[i - j].mul(pj)?)?;
            }
            *slot = acc;
        }
        p = next;
    }
    Some(p)
}

/// Monic integer characteristic polynomial of an adjacency matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    poly: IntPoly,
}

impl CharPoly {
    /// Coefficients `c_0..c_n`, lowest degree first; `c_n = 1`.
    pub fn coefficients(&self) -> &[BigInt] {
        self.poly.coeffs()
    }

    pub fn as_poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    pub fn distinct_root_count(&self) -> usize {
        self.poly.distinct_root_count()
    }

    /// Base-10 coefficient list, lowest degree first, comma separated.
    pub fn to_coefficient_string(&self) -> String {
        self.poly
            .coeffs()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Exact `det(xI - A_G)`. Runs in machine integers when they suffice and
/// falls back to arbitrary precision on overflow.
pub fn char_poly(g: &Graph) -> CharPoly {
    let high_first: Vec<BigInt> = match berkowitz::<i128>(g) {
        Some(p) => p.into_iter().map(BigInt::from).collect(),
        None => berkowitz::<BigInt>(g).expect("arbitrary precision never overflows"),
    };
    CharPoly {
        poly: IntPoly::new(high_first.into_iter().rev().collect()),
    }
}

/// Forces the arbitrary-precision path; used to cross-check the fast path.
#[cfg(test)]
pub(crate) fn char_poly_bigint(g: &Graph) -> CharPoly {
    let p = berkowitz::<BigInt>(g).unwrap();
    CharPoly {
        poly: IntPoly::new(p.into_iter().rev().collect()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use proptest::prelude::*;

    /// det(xI - A) by the Leibniz permutation expansion, with polynomial
    /// entries. Independent of the Berkowitz recurrence.
    fn leibniz_char_poly(g: &Graph) -> IntPoly {
        let n = g.n();
        let entry = |i: usize, j: usize| -> IntPoly {
            if i == j {
                IntPoly::from_i64(&[0, 1])
            } else if g.has_edge(i, j) {
                IntPoly::from_i64(&[-1])
            } else {
                IntPoly::new(Vec::new())
            }
        };
        let mut total = vec![<BigInt as Zero>::zero(); n + 1];
        let mut perm: Vec<usize> = (0..n).collect();
        permute(&mut perm, 0, &mut |p| {
            let mut inversions = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if p[i] > p[j] {
                        inversions += 1;
                    }
                }
            }
            let term = (0..n).fold(IntPoly::one(), |acc, i| acc.mul(&entry(i, p[i])));
            for (k, c) in term.coeffs().iter().enumerate() {
                if inversions % 2 == 0 {
                    total[k] += c;
                } else {
                    total[k] -= c;
                }
            }
        });
        IntPoly::new(total)
    }

    fn permute(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn small_examples() {
        assert_eq!(char_poly(&complete(2)).as_poly(), &IntPoly::from_i64(&[-1, 0, 1]));
        assert_eq!(char_poly(&Graph::empty(2)).as_poly(), &IntPoly::from_i64(&[0, 0, 1]));
        assert_eq!(char_poly(&Graph::empty(0)).as_poly(), &IntPoly::one());
    }

    #[test]
    fn k3_matches_cofactor_oracle() {
        let oracle = leibniz_char_poly(&complete(3));
        // frozen from the oracle: x^3 - 3x - 2
        assert_eq!(oracle, IntPoly::from_i64(&[-2, -3, 0, 1]));
        assert_eq!(char_poly(&complete(3)).as_poly(), &oracle);
    }

    #[test]
    fn serialization_lowest_first() {
        assert_eq!(char_poly(&complete(3)).to_coefficient_string(), "-2,-3,0,1");
    }

    #[test]
    fn large_graph_falls_back_consistently() {
        let g = complete(40);
        let p = char_poly(&g);
        assert_eq!(p, char_poly_bigint(&g));
        // (x+1)^39 (x-39) has two distinct roots
        assert_eq!(p.distinct_root_count(), 2);
    }

    fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
        let mut g = Graph::empty(n);
        let mut i = 0;
        for u in 0..n {
            for v in u + 1..n {
                if bits[i] {
                    g.add_edge(u, v);
                }
                i += 1;
            }
        }
        g
    }

    proptest! {
        #[test]
        fn matches_leibniz(n in 0usize..7, bits in proptest::collection::vec(any::<bool>(), 21)) {
            let g = graph_from_bits(n, &bits);
            let p = char_poly(&g);
            prop_assert_eq!(p.as_poly(), &leibniz_char_poly(&g));
        }

        #[test]
        fn trace_and_edge_invariants(n in 2usize..14, bits in proptest::collection::vec(any::<bool>(), 91)) {
            let g = graph_from_bits(n, &bits);
            let p = char_poly(&g);
            let c = p.coefficients();
            prop_assert_eq!(c.len(), n + 1);
            prop_assert!(c[n].is_one());
            prop_assert!(c[n - 1].is_zero());
            prop_assert_eq!(&c[n - 2], &BigInt::from(-(g.m() as i64)));
        }
    }
}
