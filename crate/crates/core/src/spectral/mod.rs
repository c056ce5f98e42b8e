//! Exact and floating-point adjacency spectra.
//!
//! Accept/reject decisions everywhere in the crate go through
//! [`distinct_eigenvalue_count`], which is exact. The floating path exists
//! for display and cross-checks.

mod charpoly;
mod dense;
mod poly;

pub use charpoly::{char_poly, CharPoly};
pub use dense::symmetric_eigenvalues;
pub use poly::IntPoly;

use crate::error::{contract, Result};
use crate::graph::Graph;
use std::collections::HashMap;

pub const DEFAULT_TOL: f64 = 1e-9;
pub const MAX_SWEEPS: usize = 100;

/// Square-free polynomial whose roots are exactly the eigenvalues of `g`.
pub fn eigenvalue_poly(g: &Graph) -> IntPoly {
    let mut ledger = SpectrumLedger::new();
    for part in component_polys(g) {
        ledger.absorb(&part);
    }
    ledger.into_poly()
}

/// Number of distinct adjacency eigenvalues; 0 for the empty graph.
///
/// Works component by component: the spectrum of a disjoint union is the
/// union of the spectra, so the answer is the degree of the lcm of the
/// components' square-free parts. Clique components use their closed form
/// and isomorphic-by-labeling components are computed once.
pub fn distinct_eigenvalue_count(g: &Graph) -> usize {
    eigenvalue_poly(g).degree().unwrap_or(0)
}

/// Reference route: square-free degree of the whole-graph polynomial.
pub fn distinct_eigenvalue_count_direct(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    char_poly(g).distinct_root_count()
}

/// Square-free eigenvalue polynomial of each connected component, in
/// component order.
pub fn component_polys(g: &Graph) -> Vec<IntPoly> {
    let mut cache: HashMap<Vec<(usize, usize)>, IntPoly> = HashMap::new();
    g.connected_components()
        .into_iter()
        .map(|comp| {
            let s = comp.len();
            if comp.iter().all(|&v| g.degree(v) == s - 1) {
                return clique_poly(s);
            }
            let sub = g.induced_subgraph(&comp);
            let key: Vec<(usize, usize)> = std::iter::once((s, s)).chain(sub.edges()).collect();
            cache
                .entry(key)
                .or_insert_with(|| char_poly(&sub).as_poly().squarefree_part())
                .clone()
        })
        .collect()
}

/// `x - (s-1)`, times `x + 1` when `s >= 2`.
fn clique_poly(s: usize) -> IntPoly {
    let top = IntPoly::linear(s as i64 - 1);
    if s >= 2 {
        top.mul(&IntPoly::linear(-1))
    } else {
        top
    }
}

/// Running lcm of square-free polynomials, i.e. a growing set of
/// algebraic eigenvalues.
#[derive(Clone, Debug)]
pub struct SpectrumLedger {
    lcm: IntPoly,
}

impl Default for SpectrumLedger {
    fn default() -> Self {
        Self::new()
    }
}

impl SpectrumLedger {
    pub fn new() -> Self {
        SpectrumLedger { lcm: IntPoly::one() }
    }

    /// Merges the roots of a square-free `p`; returns how many were new.
    pub fn absorb(&mut self, p: &IntPoly) -> usize {
        let g = self.lcm.gcd(p);
        let fresh = p.exact_div(&g).expect("gcd divides its argument");
        let added = fresh.degree().unwrap_or(0);
        if added > 0 {
            self.lcm = self.lcm.mul(&fresh).primitive_part();
        }
        added
    }

    pub fn count(&self) -> usize {
        self.lcm.degree().unwrap_or(0)
    }

    pub fn into_poly(self) -> IntPoly {
        self.lcm
    }
}

/// Floating eigenvalues in ascending order.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatSpectrum {
    pub values: Vec<f64>,
    pub tol: f64,
}

impl FloatSpectrum {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn min(&self) -> Option<f64> {
        self.values.first().copied()
    }

    /// Groups of values separated by gaps larger than `gap`.
    pub fn clusters(&self, gap: f64) -> Vec<Vec<f64>> {
        let mut out: Vec<Vec<f64>> = Vec::new();
        for &v in &self.values {
            match out.last_mut() {
                Some(last) if v - last.last().unwrap() <= gap => last.push(v),
                _ => out.push(vec![v]),
            }
        }
        out
    }

    pub fn cluster_count(&self, gap: f64) -> usize {
        self.clusters(gap).len()
    }
}

/// All `n` eigenvalues of `A_G`.
pub fn float_spectrum(g: &Graph, tol: f64) -> Result<FloatSpectrum> {
    if tol <= 0.0 || tol.is_nan() {
        return Err(contract(format!("tolerance must be positive, got {tol}")));
    }
    let n = g.n();
    let mut a = vec![vec![0.0; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = 1.0;
        a[v][u] = 1.0;
    }
    let values = symmetric_eigenvalues(a, tol, MAX_SWEEPS)?;
    Ok(FloatSpectrum { values, tol })
}

/// Cauchy interlacing between the spectrum of a graph and that of a
/// one-vertex-deleted subgraph, indices taken in descending order.
pub fn check_interlacing(outer: &FloatSpectrum, inner: &FloatSpectrum, tol: f64) -> Result<bool> {
    if inner.len() + 1 != outer.len() {
        return Err(contract(format!(
            "inner spectrum must have exactly one fewer value ({} vs {})",
            inner.len(),
            outer.len()
        )));
    }
    let mu: Vec<f64> = outer.values.iter().rev().copied().collect();
    let sigma: Vec<f64> = inner.values.iter().rev().copied().collect();
    Ok(sigma
        .iter()
        .enumerate()
        .all(|(i, &s)| mu[i] + tol >= s && s >= mu[i + 1] - tol))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFamily {
    Clique,
    Path,
    Cycle,
}

/// Spectrum as `(value, multiplicity)` pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedFormSpectrum {
    pub entries: Vec<(f64, usize)>,
}

impl ClosedFormSpectrum {
    /// Every eigenvalue with repetition, ascending.
    pub fn values(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self
            .entries
            .iter()
            .flat_map(|&(x, k)| std::iter::repeat_n(x, k))
            .collect();
        v.sort_by(f64::total_cmp);
        v
    }
}

pub fn closed_form_spectrum(family: GraphFamily, n: usize) -> Result<ClosedFormSpectrum> {
    use std::f64::consts::PI;
    if n == 0 {
        return Err(contract("closed-form spectra need n >= 1"));
    }
    let entries = match family {
        GraphFamily::Clique if n == 1 => vec![(0.0, 1)],
        GraphFamily::Clique => vec![(-1.0, n - 1), ((n - 1) as f64, 1)],
        GraphFamily::Path => (1..=n)
            .map(|j| (2.0 * (PI * j as f64 / (n + 1) as f64).cos(), 1))
            .collect(),
        GraphFamily::Cycle => {
            if n < 3 {
                return Err(contract(format!("cycle needs n >= 3, got {n}")));
            }
            // j and n-j give the same value
            (0..=n / 2)
                .map(|j| {
                    let mult = if j == 0 || 2 * j == n { 1 } else { 2 };
                    (2.0 * (2.0 * PI * j as f64 / n as f64).cos(), mult)
                })
                .collect()
        }
    };
    Ok(ClosedFormSpectrum { entries })
}
