//! The hardcoded numbers behind every formula, gathered in one table.
//!
//! Library entry points use [`Constants::STANDARD`]. The `*_in` variants
//! take an explicit table so the verification harness can replay all
//! claims against a table with a single constant perturbed and confirm
//! that the perturbation is detected.

use crate::scalar::Scalar;

/// An exact fraction `num/den` usable in `const` context.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Frac {
    pub num: i64,
    pub den: i64,
}

impl Frac {
    pub const fn new(num: i64, den: i64) -> Self {
        Frac { num, den }
    }

    pub const fn int(n: i64) -> Self {
        Frac { num: n, den: 1 }
    }

    pub fn to<T: Scalar>(self) -> T {
        T::frac(self.num, self.den)
    }

    /// 11/6 becomes 11/5; integers are bumped by one.
    fn perturb(self) -> Self {
        if self.den > 1 {
            Frac::new(self.num, self.den - 1)
        } else {
            Frac::int(self.num + 1)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constants {
    /// Todd class of P³, coefficients of H⁰..H³.
    pub todd: [Frac; 4],
    /// Truncated exponential: 1/k! for k = 0..3.
    pub exp: [Frac; 4],
    /// ch₂ = α·c₁² + β·c₂.
    pub ch2: [Frac; 2],
    /// ch₃ = γ·c₁³ + δ·c₁c₂ + ε·c₃.
    pub ch3: [Frac; 3],
    /// Outer coefficients of the rank-3 expansion of χ(F(m)), in the order
    /// (c₁³−3c₁c₂+3c₃), m(c₁²−2c₂), m²c₁, m³, (c₁²−2c₂), mc₁, m², c₁, m, 1.
    pub chi_literal: [Frac; 10],
    /// χ(F⊗F*) = a·c₁² + b·c₂ + c.
    pub chi_end: [i64; 3],
    /// ext¹ − ext² = a·c₁² + b·c₂ + c.
    pub ext_diff: [i64; 3],
    /// a·c₃ + b·c₂ + c·c₁c₂ + k = 2g for a rank-3 bundle and its curve.
    pub genus: [i64; 4],
    /// Normal bundle of the rational curve is O((a·n + b)pt)^⊕2; the canonical
    /// twist subtracts c·(n+3).
    pub normal_bundle: [i64; 3],
    /// Dimension of the moduli space of stable rank-2 reflexive sheaves with
    /// Chern classes (−1,3,3).
    pub reflexive_moduli_dim: i64,
    /// dim Ext¹(E(2), O) for such a sheaf E.
    pub extension_space_dim: i64,
}

impl Constants {
    pub const STANDARD: Constants = Constants {
        todd: [Frac::int(1), Frac::int(2), Frac::new(11, 6), Frac::int(1)],
        exp: [Frac::int(1), Frac::int(1), Frac::new(1, 2), Frac::new(1, 6)],
        ch2: [Frac::new(1, 2), Frac::int(-1)],
        ch3: [Frac::new(1, 6), Frac::new(-1, 2), Frac::new(1, 2)],
        chi_literal: [
            Frac::new(1, 6),
            Frac::new(1, 2),
            Frac::new(1, 2),
            Frac::new(1, 2),
            Frac::int(1),
            Frac::int(2),
            Frac::int(3),
            Frac::new(11, 6),
            Frac::new(11, 2),
            Frac::int(3),
        ],
        chi_end: [4, -12, 9],
        ext_diff: [-4, 12, -8],
        genus: [1, -4, 1, 2],
        normal_bundle: [2, 5, 3],
        reflexive_moduli_dim: 19,
        extension_space_dim: 3,
    };

    /// The standard table with exactly one constant perturbed.
    pub fn with_fault(fault: Fault) -> Constants {
        let mut c = Constants::STANDARD;
        fault.apply(&mut c);
        c
    }
}

impl Default for Constants {
    fn default() -> Self {
        Constants::STANDARD
    }
}

/// One hardcoded constant to perturb.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Fault {
    ToddH0,
    ToddH1,
    ToddH2,
    ToddH3,
    ExpH2,
    ExpH3,
    Ch2C1Sq,
    Ch2C2,
    Ch3C1Cube,
    Ch3C1C2,
    Ch3C3,
    ChiLitTop,
    ChiLitMCh2,
    ChiLitM2C1,
    ChiLitM3,
    ChiLitCh2,
    ChiLitMC1,
    ChiLitM2,
    ChiLitC1,
    ChiLitM,
    ChiLitConst,
    ChiEndC1Sq,
    ChiEndC2,
    ChiEndConst,
    ExtDiffC1Sq,
    ExtDiffC2,
    ExtDiffConst,
    GenusC3,
    GenusC2,
    GenusC1C2,
    GenusConst,
    NormalSlope,
    NormalOffset,
    CanonicalTwist,
    ReflexiveModuliDim,
    ExtensionSpaceDim,
}

impl Fault {
    pub const ALL: [Fault; 36] = [
        Fault::ToddH0,
        Fault::ToddH1,
        Fault::ToddH2,
        Fault::ToddH3,
        Fault::ExpH2,
        Fault::ExpH3,
        Fault::Ch2C1Sq,
        Fault::Ch2C2,
        Fault::Ch3C1Cube,
        Fault::Ch3C1C2,
        Fault::Ch3C3,
        Fault::ChiLitTop,
        Fault::ChiLitMCh2,
        Fault::ChiLitM2C1,
        Fault::ChiLitM3,
        Fault::ChiLitCh2,
        Fault::ChiLitMC1,
        Fault::ChiLitM2,
        Fault::ChiLitC1,
        Fault::ChiLitM,
        Fault::ChiLitConst,
        Fault::ChiEndC1Sq,
        Fault::ChiEndC2,
        Fault::ChiEndConst,
        Fault::ExtDiffC1Sq,
        Fault::ExtDiffC2,
        Fault::ExtDiffConst,
        Fault::GenusC3,
        Fault::GenusC2,
        Fault::GenusC1C2,
        Fault::GenusConst,
        Fault::NormalSlope,
        Fault::NormalOffset,
        Fault::CanonicalTwist,
        Fault::ReflexiveModuliDim,
        Fault::ExtensionSpaceDim,
    ];

    fn apply(self, c: &mut Constants) {
        fn bump(x: &mut i64) {
            *x += 1;
        }
        fn nudge(x: &mut Frac) {
            *x = x.perturb();
        }
        match self {
            Fault::ToddH0 => nudge(&mut c.todd[0]),
            Fault::ToddH1 => nudge(&mut c.todd[1]),
            Fault::ToddH2 => nudge(&mut c.todd[2]),
            Fault::ToddH3 => nudge(&mut c.todd[3]),
            Fault::ExpH2 => nudge(&mut c.exp[2]),
            Fault::ExpH3 => nudge(&mut c.exp[3]),
            Fault::Ch2C1Sq => nudge(&mut c.ch2[0]),
            Fault::Ch2C2 => nudge(&mut c.ch2[1]),
            Fault::Ch3C1Cube => nudge(&mut c.ch3[0]),
            Fault::Ch3C1C2 => nudge(&mut c.ch3[1]),
            Fault::Ch3C3 => nudge(&mut c.ch3[2]),
            Fault::ChiLitTop => nudge(&mut c.chi_literal[0]),
            Fault::ChiLitMCh2 => nudge(&mut c.chi_literal[1]),
            Fault::ChiLitM2C1 => nudge(&mut c.chi_literal[2]),
            Fault::ChiLitM3 => nudge(&mut c.chi_literal[3]),
            Fault::ChiLitCh2 => nudge(&mut c.chi_literal[4]),
            Fault::ChiLitMC1 => nudge(&mut c.chi_literal[5]),
            Fault::ChiLitM2 => nudge(&mut c.chi_literal[6]),
            Fault::ChiLitC1 => nudge(&mut c.chi_literal[7]),
            Fault::ChiLitM => nudge(&mut c.chi_literal[8]),
            Fault::ChiLitConst => nudge(&mut c.chi_literal[9]),
            Fault::ChiEndC1Sq => bump(&mut c.chi_end[0]),
            Fault::ChiEndC2 => bump(&mut c.chi_end[1]),
            Fault::ChiEndConst => bump(&mut c.chi_end[2]),
            Fault::ExtDiffC1Sq => bump(&mut c.ext_diff[0]),
            Fault::ExtDiffC2 => bump(&mut c.ext_diff[1]),
            Fault::ExtDiffConst => bump(&mut c.ext_diff[2]),
            Fault::GenusC3 => bump(&mut c.genus[0]),
            Fault::GenusC2 => bump(&mut c.genus[1]),
            Fault::GenusC1C2 => bump(&mut c.genus[2]),
            Fault::GenusConst => bump(&mut c.genus[3]),
            Fault::NormalSlope => bump(&mut c.normal_bundle[0]),
            Fault::NormalOffset => bump(&mut c.normal_bundle[1]),
            Fault::CanonicalTwist => bump(&mut c.normal_bundle[2]),
            Fault::ReflexiveModuliDim => bump(&mut c.reflexive_moduli_dim),
            Fault::ExtensionSpaceDim => bump(&mut c.extension_space_dim),
        }
    }
}
