//! Spectra of rank-3 sheaves and the line-bundle cohomology they encode.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Nondecreasing list `(k₁, …, kₙ)` with `n = c₂`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Spectrum(Vec<i64>);

impl Spectrum {
    pub fn new(ks: Vec<i64>) -> Result<Self> {
        if ks.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidSpectrum(ks));
        }
        Ok(Spectrum(ks))
    }

    pub fn zero(n: usize) -> Self {
        Spectrum(vec![0; n])
    }

    pub fn ks(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Σkᵢ = 0, the constraint for semistable rank-3 bundles with c₁ = 0.
    pub fn is_balanced(&self) -> bool {
        self.0.iter().sum::<i64>() == 0
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Data fixing where the spectrum formulas apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpectrumContext {
    s: u64,
    a_low: i64,
    a_high: i64,
}

impl SpectrumContext {
    /// A locally free sheaf with generic splitting type spanning `[a_low, a_high]`.
    pub fn locally_free(a_low: i64, a_high: i64) -> Result<Self> {
        Self::reflexive(0, a_low, a_high)
    }

    /// `s = h⁰(Ext²(F, O))`, nonzero only away from the locally free case.
    pub fn reflexive(s: u64, a_low: i64, a_high: i64) -> Result<Self> {
        if a_low > a_high {
            return Err(Error::DomainError(format!(
                "splitting type bounds out of order: {a_low} > {a_high}"
            )));
        }
        Ok(SpectrumContext { s, a_low, a_high })
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn h1_range_max(&self) -> i64 {
        -self.a_high - 1
    }

    pub fn h2_range_min(&self) -> i64 {
        self.a_low - 3
    }
}

impl Default for SpectrumContext {
    /// Semistable rank 3 with c₁ = 0: locally free, generic splitting (0,0,0).
    fn default() -> Self {
        SpectrumContext { s: 0, a_low: 0, a_high: 0 }
    }
}

/// `h⁰(O_{P¹}(a))`.
pub fn h0_p1(a: i64) -> u64 {
    (a + 1).max(0) as u64
}

/// `h¹(O_{P¹}(a))`.
pub fn h1_p1(a: i64) -> u64 {
    (-a - 1).max(0) as u64
}

/// `h¹(F(l)) = s + Σ h⁰(O_{P¹}(kᵢ + l + 1))` for `l ≤ −a_high − 1`.
pub fn h1_from_spectrum(sp: &Spectrum, l: i64, ctx: &SpectrumContext) -> Result<u64> {
    let max = ctx.h1_range_max();
    if l > max {
        return Err(Error::OutOfValidityRange { l, range: format!("l <= {max}") });
    }
    Ok(ctx.s + sp.ks().iter().map(|k| h0_p1(k + l + 1)).sum::<u64>())
}

/// `h²(F(l)) = Σ h¹(O_{P¹}(kᵢ + l + 1))` for `l ≥ a_low − 3`.
pub fn h2_from_spectrum(sp: &Spectrum, l: i64, ctx: &SpectrumContext) -> Result<u64> {
    let min = ctx.h2_range_min();
    if l < min {
        return Err(Error::OutOfValidityRange { l, range: format!("l >= {min}") });
    }
    Ok(sp.ks().iter().map(|k| h1_p1(k + l + 1)).sum())
}

/// A semistable rank-3 bundle with c₁ = 0 is an instanton iff its spectrum is zero.
pub fn is_instanton_spectrum(sp: &Spectrum) -> bool {
    sp.ks().iter().all(|&k| k == 0)
}

/// All nondecreasing zero-sum `n`-tuples with entries in `[−bound, bound]`,
/// in lexicographic order.
pub fn enumerate_spectra(n: usize, bound: i64) -> Result<Vec<Spectrum>> {
    if n == 0 {
        return Err(Error::DomainError("spectrum length must be at least 1".into()));
    }
    if bound < 0 {
        return Err(Error::DomainError(format!("bound must be nonnegative, got {bound}")));
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    extend(n, bound, -bound, 0, &mut cur, &mut out);
    Ok(out)
}

fn extend(n: usize, bound: i64, lo: i64, sum: i64, cur: &mut Vec<i64>, out: &mut Vec<Spectrum>) {
    let left = (n - cur.len()) as i64;
    if left == 0 {
        if sum == 0 {
            out.push(Spectrum(cur.clone()));
        }
        return;
    }
    for k in lo..=bound {
        // every remaining entry is ≥ k, so the sum can only grow from here
        if sum + k * left > 0 {
            break;
        }
        if sum + k + bound * (left - 1) < 0 {
            continue;
        }
        cur.push(k);
        extend(n, bound, k, sum + k, cur, out);
        cur.pop();
    }
}
