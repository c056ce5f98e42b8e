//! Dense univariate polynomials over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Integer polynomial, coefficients lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "IntPoly[{}]", parts.join(", "))
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        IntPoly::from_i64(&[1])
    }

    /// `x - root`.
    pub fn linear(root: i64) -> Self {
        IntPoly::from_i64(&[-root, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lead(&self) -> &BigInt {
        self.coeffs.last().expect("zero polynomial has no leading coefficient")
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.lead().is_negative() {
            c = -c;
        }
        IntPoly::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// `lc(d)^(deg a - deg d + 1) * a mod d`.
    fn pseudo_remainder(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("pseudo-division by zero");
        let mut r = self.coeffs.clone();
        let lc = d.lead().clone();
        while r.len() > dd && !r.is_empty() {
            let shift = r.len() - 1 - dd;
            let top = r.last().unwrap().clone();
            for c in r.iter_mut() {
                *c *= &lc;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[shift + i] -= &top * dc;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        IntPoly::new(r)
    }

    /// Greatest common divisor in `Z[x]`, primitive with positive leading
    /// coefficient (primitive remainder sequence).
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_remainder(&b);
            a = b;
            b = r.primitive_part();
        }
        a
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self` in `Z[x]`.
    pub fn exact_div(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(self.clone());
        }
        let sd = self.degree().unwrap();
        if sd < dd {
            return None;
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); sd - dd + 1];
        let lc = d.lead();
        for shift in (0..=sd - dd).rev() {
            let top = &r[shift + dd];
            if top.is_zero() {
                continue;
            }
            let (quot, rem) = top.div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[shift + i] -= &quot * dc;
            }
            q[shift] = quot;
        }
        r.iter().all(Zero::is_zero).then(|| IntPoly::new(q))
    }

    /// `p / gcd(p, p')`: same roots, each with multiplicity one.
    pub fn squarefree_part(&self) -> IntPoly {
        if self.degree().unwrap_or(0) == 0 {
            return IntPoly::one();
        }
        let g = self.gcd(&self.derivative());
        let q = self.exact_div(&g).expect("gcd divides its argument");
        q.primitive_part()
    }

    /// Number of distinct complex roots.
    pub fn distinct_root_count(&self) -> usize {
        self.squarefree_part().degree().unwrap_or(0)
    }

    /// Evaluates at a floating point argument (Horner).
    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn gcd_of_shared_factor() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = IntPoly::linear(1).mul(&IntPoly::linear(-2));
        let b = IntPoly::linear(1).mul(&IntPoly::linear(3));
        assert_eq!(a.gcd(&b), IntPoly::linear(1));
        assert_eq!(a.gcd(&IntPoly::linear(5)), IntPoly::one());
    }

    #[test]
    fn squarefree_counts_distinct_roots() {
        // (x+1)^2 (x-2): K_3 characteristic polynomial
        let p = IntPoly::from_i64(&[-2, -3, 0, 1]);
        assert_eq!(p.distinct_root_count(), 2);
        assert_eq!(IntPoly::from_i64(&[0, 0, 0, 1]).distinct_root_count(), 1);
        assert_eq!(IntPoly::one().distinct_root_count(), 0);
        // x^2 - 2 has two irrational roots
        assert_eq!(IntPoly::from_i64(&[-2, 0, 1]).distinct_root_count(), 2);
    }

    #[test]
    fn exact_division() {
        let a = IntPoly::from_i64(&[-2, -3, 0, 1]);
        assert_eq!(a.exact_div(&IntPoly::linear(2)), Some(IntPoly::from_i64(&[1, 2, 1])));
        assert_eq!(a.exact_div(&IntPoly::linear(3)), None);
    }

    fn roots_poly(roots: &[i64]) -> IntPoly {
        roots
            .iter()
            .fold(IntPoly::one(), |acc, &r| acc.mul(&IntPoly::linear(r)))
    }

    proptest! {
        #[test]
        fn distinct_roots_of_integer_products(roots in proptest::collection::vec(-6i64..6, 0..9)) {
            let p = roots_poly(&roots);
            let distinct: std::collections::BTreeSet<_> = roots.iter().collect();
            prop_assert_eq!(p.distinct_root_count(), distinct.len());
        }

        #[test]
        fn gcd_divides_both(a in proptest::collection::vec(-5i64..5, 0..5), b in proptest::collection::vec(-5i64..5, 0..5), c in proptest::collection::vec(-5i64..5, 1..4)) {
            let shared = roots_poly(&c);
            let pa = roots_poly(&a).mul(&shared);
            let pb = roots_poly(&b).mul(&shared);
            let g = pa.gcd(&pb);
            prop_assert!(pa.exact_div(&g).is_some());
            prop_assert!(pb.exact_div(&g).is_some());
            prop_assert!(g.degree() >= shared.degree());
        }
    }
}
