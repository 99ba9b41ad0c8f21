//! Numerical side of the correspondence between rank-3 bundles with two
//! sections and curves in P³.
//!
//! Everything here works on invariants only. A `CurveInvariants` value is a
//! formal `(d, g)` pair and is not checked for the existence of an actual
//! curve.

use serde::Serialize;

use crate::chern::{binom3, euler_characteristic, validate_parity, Binomial, ChernData};
use crate::constants::Constants;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CurveInvariants {
    degree: i64,
    genus: i64,
    rational: bool,
    nondegenerate: bool,
}

impl CurveInvariants {
    pub fn new(degree: i64, genus: i64) -> Result<Self> {
        if degree < 1 {
            return Err(Error::DomainError(format!("curve degree must be positive, got {degree}")));
        }
        Ok(CurveInvariants { degree, genus, rational: false, nondegenerate: false })
    }

    /// A rational curve of the given degree (genus zero).
    pub fn rational(degree: i64) -> Result<Self> {
        Ok(CurveInvariants { rational: true, ..Self::new(degree, 0)? })
    }

    pub fn with_nondegenerate(mut self, nondegenerate: bool) -> Self {
        self.nondegenerate = nondegenerate;
        self
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn is_rational(&self) -> bool {
        self.rational
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.nondegenerate
    }

    /// `(d, g)`, ignoring flags.
    pub fn invariants(&self) -> (i64, i64) {
        (self.degree, self.genus)
    }
}

/// `d = c₂`, `2g − 2 = c₃ − 4c₂ + c₁c₂`.
pub fn bundle_to_curve(d3: &ChernData) -> Result<CurveInvariants> {
    bundle_to_curve_in(&Constants::STANDARD, d3)
}

pub fn bundle_to_curve_in(c: &Constants, d3: &ChernData) -> Result<CurveInvariants> {
    if !validate_parity(d3)? {
        return Err(Error::ParityViolation { discrepancy: d3.c3() - d3.c1() * d3.c2() });
    }
    if d3.c2() < 1 {
        return Err(Error::DomainError(format!("c2 must be positive, got {}", d3.c2())));
    }
    let [a, b, k1, k0] = c.genus;
    let twice = a * d3.c3() + b * d3.c2() + k1 * d3.c1() * d3.c2() + k0;
    if twice.rem_euclid(2) != 0 {
        return Err(Error::ParityViolation { discrepancy: twice });
    }
    CurveInvariants::new(d3.c2(), twice / 2)
}

/// `(3, c₁, d, 2g − 2 + 4d − c₁d)`.
pub fn curve_to_bundle(cv: &CurveInvariants, c1: i64) -> ChernData {
    curve_to_bundle_in(&Constants::STANDARD, cv, c1).expect("dictionary is integral")
}

pub fn curve_to_bundle_in(c: &Constants, cv: &CurveInvariants, c1: i64) -> Result<ChernData> {
    let [a, b, k1, k0] = c.genus;
    let num = 2 * cv.genus - b * cv.degree - k1 * c1 * cv.degree - k0;
    if a == 0 || num % a != 0 {
        return Err(Error::DomainError(format!("c3 = {num}/{a} is not an integer")));
    }
    Ok(ChernData::rank3(c1, cv.degree, num / a))
}

/// Degree of `det N ⊗ O_Y(−3)` on a rational curve of degree `n + 3`, whose
/// normal bundle is `O_Y((2n+5)pt)^⊕2`.
pub fn rational_normal_twist_degree(n: i64) -> Result<i64> {
    rational_normal_twist_degree_in(&Constants::STANDARD, n)
}

pub fn rational_normal_twist_degree_in(c: &Constants, n: i64) -> Result<i64> {
    if n < 2 {
        return Err(Error::DomainError(format!("charge must be at least 2, got {n}")));
    }
    let [slope, offset, canonical] = c.normal_bundle;
    let det = 2 * (slope * n + offset);
    Ok(det - canonical * (n + 3))
}

/// A line bundle on P¹ is generated by two sections iff its degree is positive.
pub fn generated_by_two_sections(deg: i64) -> bool {
    deg >= 1
}

/// `χ(I_Y(t)) = binom(t+3, 3) − (d·t + 1 − g)`.
pub fn chi_ideal_sheaf(cv: &CurveInvariants, t: i64) -> i64 {
    binom3(t + 3, Binomial::Polynomial) - (cv.degree * t + 1 - cv.genus)
}

/// Minimum `h⁰(F(1))` for a generalized 't Hooft bundle of rank `rank`.
pub fn thooft_threshold(rank: u32) -> Result<u32> {
    if rank < 2 {
        return Err(Error::DomainError(format!("rank must be at least 2, got {rank}")));
    }
    Ok(rank - 1)
}

/// χ(F(1)) for a rank-3 instanton of charge `n`; equals `12 − 3n`.
pub fn chi_f1_charge(n: i64) -> Result<i64> {
    if n < 2 {
        return Err(Error::DomainError(format!("charge must be at least 2, got {n}")));
    }
    euler_characteristic(&ChernData::rank3(0, n, 0), 1)
}
