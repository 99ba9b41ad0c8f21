//! Dimension counts for moduli of stable rank-3 bundles.

use serde::Serialize;

use crate::chern::{chi_endomorphisms_in, euler_characteristic_in, ChernData};
use crate::cohomtable::natural_table_in;
use crate::constants::Constants;
use crate::error::{Error, Result};

/// Sheaf-theoretic facts the caller vouches for. They are recorded in the
/// report, never inferred.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Hypothesis {
    /// `F` is stable, so `hom(F, F) = 1` and `Ext³(F, F) = 0`.
    Stable,
    /// `Ext²(F, F) = 0`.
    Ext2Vanishes,
}

impl Hypothesis {
    pub fn name(&self) -> &'static str {
        match self {
            Hypothesis::Stable => "stable",
            Hypothesis::Ext2Vanishes => "ext2_vanishes",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivationStep {
    pub quantity: String,
    pub value: i64,
    pub provenance: String,
}

impl DerivationStep {
    fn new(quantity: &str, value: i64, provenance: impl Into<String>) -> Self {
        DerivationStep { quantity: quantity.to_string(), value, provenance: provenance.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuliReport {
    pub chern: ChernData,
    pub chi_end: i64,
    /// `dim Ext¹ − dim Ext²`; present iff the stable hypothesis is set.
    pub ext_diff: Option<i64>,
    pub hypotheses: Vec<Hypothesis>,
    /// Present iff `Ext²` vanishing is asserted.
    pub dimension: Option<i64>,
    pub derivation: Vec<DerivationStep>,
}

impl ModuliReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// `−4c₁² + 12c₂ − 8`.
pub fn ext_difference(d: &ChernData) -> Result<i64> {
    ext_difference_in(&Constants::STANDARD, d)
}

pub fn ext_difference_in(c: &Constants, d: &ChernData) -> Result<i64> {
    if d.rank() != 3 {
        return Err(Error::RankUnsupported { rank: d.rank() });
    }
    let [a, b, k] = c.ext_diff;
    Ok(a * d.c1() * d.c1() + b * d.c2() + k)
}

/// Builds the report for whichever hypotheses the caller supplies.
pub fn moduli_report(d: &ChernData, hypotheses: &[Hypothesis]) -> Result<ModuliReport> {
    moduli_report_in(&Constants::STANDARD, d, hypotheses)
}

pub fn moduli_report_in(c: &Constants, d: &ChernData, hypotheses: &[Hypothesis]) -> Result<ModuliReport> {
    let chi_end = chi_endomorphisms_in(c, d)?;
    let mut hyps = hypotheses.to_vec();
    hyps.sort();
    hyps.dedup();
    let stable = hyps.contains(&Hypothesis::Stable);
    let ext2 = hyps.contains(&Hypothesis::Ext2Vanishes);

    let mut derivation = vec![DerivationStep::new(
        "chi(F (x) F*)",
        chi_end,
        "Hirzebruch-Riemann-Roch on ch(F)ch(F*) in the Chow ring",
    )];
    let ext_diff = if stable {
        let closed = ext_difference_in(c, d)?;
        derivation.push(DerivationStep::new(
            "dim Ext^1 - dim Ext^2",
            1 - chi_end,
            "1 - chi(F (x) F*), using hom(F,F) = 1 and Ext^3(F,F) = 0 [stable]",
        ));
        if closed != 1 - chi_end {
            return Err(Error::ClosedFormMismatch { ring: 1 - chi_end, closed });
        }
        Some(closed)
    } else {
        None
    };
    let dimension = match (ext2, ext_diff) {
        (true, Some(e)) => {
            derivation.push(DerivationStep::new(
                "dim Ext^1 (tangent space)",
                e,
                "Ext^2(F,F) = 0 [ext2_vanishes]",
            ));
            Some(e)
        }
        _ => None,
    };
    Ok(ModuliReport { chern: *d, chi_end, ext_diff, hypotheses: hyps, dimension, derivation })
}

/// Dimension of the moduli space at a smooth point, `ext¹ = ext¹ − ext²`.
pub fn smooth_dimension(d: &ChernData, hypotheses: &[Hypothesis]) -> Result<ModuliReport> {
    smooth_dimension_in(&Constants::STANDARD, d, hypotheses)
}

pub fn smooth_dimension_in(c: &Constants, d: &ChernData, hypotheses: &[Hypothesis]) -> Result<ModuliReport> {
    if d.rank() != 3 {
        return Err(Error::RankUnsupported { rank: d.rank() });
    }
    for h in [Hypothesis::Stable, Hypothesis::Ext2Vanishes] {
        if !hypotheses.contains(&h) {
            return Err(Error::MissingHypothesis(h.name()));
        }
    }
    moduli_report_in(c, d, hypotheses)
}

/// The charge-2 count: a 19-dimensional family of rank-2 reflexive sheaves,
/// a 3-dimensional extension space over each, and 6-dimensional fibres over
/// the instanton locus.
pub fn charge2_dimension_chain() -> Result<ModuliReport> {
    charge2_dimension_chain_in(&Constants::STANDARD)
}

pub fn charge2_dimension_chain_in(c: &Constants) -> Result<ModuliReport> {
    let d = ChernData::rank3(0, 2, 0);
    let base = c.reflexive_moduli_dim;
    let ext1 = c.extension_space_dim;
    let total = base + ext1;

    let chi_f1 = euler_characteristic_in(c, &d, 1)?;
    let row = natural_table_in(c, &d, 1, 1)?.row(1).expect("row t = 1 requested");
    let h1 = row[1] as i64;
    let fiber = chi_f1 + h1;
    let dim = total - fiber;

    let mut report = smooth_dimension_in(c, &d, &[Hypothesis::Stable, Hypothesis::Ext2Vanishes])?;
    let ext_diff = report.ext_diff.expect("stable hypothesis set");
    report.derivation = vec![
        DerivationStep::new(
            "dim R (stable reflexive rank 2, c = (-1,3,3))",
            base,
            "quoted constant: dimension of the moduli of stable rank-2 reflexive sheaves (-1,3,3)",
        ),
        DerivationStep::new(
            "dim Ext^1(E(2), O)",
            ext1,
            "quoted constant: h^2(E(-2)) for E in R",
        ),
        DerivationStep::new("dim X", total, format!("computed: {base} + {ext1}")),
        DerivationStep::new(
            "fiber dim h^0(F(1))",
            fiber,
            format!("computed: chi(F(1)) = {chi_f1} plus h^1(F(1)) = {h1} from the natural table row t = 1"),
        ),
        DerivationStep::new("dim I(2)", dim, format!("computed: {total} - {fiber}")),
    ];
    if dim != ext_diff {
        return Err(Error::ChainMismatch { chain: dim, ext_diff });
    }
    report.dimension = Some(dim);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chern::chi_endomorphisms;

    const BOTH: [Hypothesis; 2] = [Hypothesis::Stable, Hypothesis::Ext2Vanishes];

    #[test]
    fn ext_difference_examples() {
        assert_eq!(ext_difference(&ChernData::rank3(0, 2, 0)), Ok(16));
        for n in 2..=12 {
            assert_eq!(ext_difference(&ChernData::rank3(0, n, 0)), Ok(12 * n - 8));
        }
        let d = ChernData::rank3(1, 3, 1);
        assert_eq!(ext_difference(&d), Ok(24));
        assert_eq!(ext_difference(&d), Ok(1 - chi_endomorphisms(&d).unwrap()));
        assert!(ext_difference(&ChernData::line_bundle(0)).is_err());
    }

    #[test]
    fn smooth_dimension_examples() {
        let r = smooth_dimension(&ChernData::rank3(0, 2, 0), &BOTH).unwrap();
        assert_eq!(r.dimension, Some(16));
        assert_eq!(
            smooth_dimension(&ChernData::rank3(0, 2, 0), &[Hypothesis::Stable]),
            Err(Error::MissingHypothesis("ext2_vanishes"))
        );
        assert_eq!(smooth_dimension(&ChernData::rank3(0, 5, 0), &BOTH).unwrap().dimension, Some(52));
        assert!(matches!(
            smooth_dimension(&ChernData::line_bundle(0), &BOTH),
            Err(Error::RankUnsupported { .. })
        ));
    }

    #[test]
    fn report_invariants() {
        let d = ChernData::rank3(0, 3, 0);
        let bare = moduli_report(&d, &[]).unwrap();
        assert_eq!((bare.ext_diff, bare.dimension), (None, None));
        let stable = moduli_report(&d, &[Hypothesis::Stable]).unwrap();
        assert_eq!(stable.ext_diff, Some(1 - stable.chi_end));
        assert_eq!(stable.dimension, None);
        // ext² alone cannot produce a dimension without hom = 1
        let ext2 = moduli_report(&d, &[Hypothesis::Ext2Vanishes]).unwrap();
        assert_eq!(ext2.dimension, None);
    }

    #[test]
    fn chain() {
        let r = charge2_dimension_chain().unwrap();
        assert_eq!(r.dimension, Some(16));
        let step = |q: &str| r.derivation.iter().find(|s| s.quantity == q).unwrap().value;
        assert_eq!(step("dim X"), 22);
        assert_eq!(step("fiber dim h^0(F(1))"), 6);
        assert_eq!(step("dim I(2)"), 16);
        assert!(r.derivation.iter().all(|s| !s.provenance.is_empty()));
    }

    #[test]
    fn report_json_is_stable() {
        let a = charge2_dimension_chain().unwrap().to_json();
        let b = charge2_dimension_chain().unwrap().to_json();
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["dimension"], 16);
        assert_eq!(v["chern"], serde_json::json!([3, 0, 2, 0]));
        assert_eq!(v["hypotheses"], serde_json::json!(["stable", "ext2_vanishes"]));
    }
}
