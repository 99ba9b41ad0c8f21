//! Replays every reference value the toolkit is built to reproduce.
//!
//! Each claim is a check against a [`Constants`] table, so the same list can
//! be run against a deliberately perturbed table to confirm that every
//! hardcoded constant is load-bearing.

use std::fmt::Debug;

use serde::Serialize;

use crate::chern::{
    chern_character_in, chi_curve_polynomial, chi_endomorphisms_closed_form_in, chi_endomorphisms_in,
    chi_polynomial_in, chi_polynomial_literal_in, chi_value_in, dual, euler_characteristic_in, twist_in,
    validate_parity, ChernData,
};
use crate::chowring::{todd_p3_in, ChowClass};
use crate::cohomtable::{
    instanton_check, monad_chern_in, natural_table_in, serre_symmetry_check_in, CohomTable, MonadType,
};
use crate::constants::Constants;
use crate::curvelink::{
    bundle_to_curve_in, chi_ideal_sheaf, curve_to_bundle_in, generated_by_two_sections,
    rational_normal_twist_degree_in, thooft_threshold, CurveInvariants,
};
use crate::moduli::{charge2_dimension_chain_in, ext_difference_in, smooth_dimension_in, Hypothesis};
use crate::scalar::Scalar;
use crate::spectrum::{
    enumerate_spectra, h1_from_spectrum, h2_from_spectrum, is_instanton_spectrum, Spectrum, SpectrumContext,
};
use crate::Q;

type Check = Result<(), String>;

pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    check: fn(&Constants) -> Check,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimOutcome {
    pub id: &'static str,
    pub statement: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub claims: Vec<ClaimOutcome>,
    pub failed: usize,
    pub passed: bool,
}

impl VerifyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.claims {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{mark}  {:<28} {}", c.id, c.statement));
            if let Some(d) = &c.detail {
                out.push_str(&format!("  [{d}]"));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "{} of {} claims passed\n",
            self.claims.len() - self.failed,
            self.claims.len()
        ));
        out
    }
}

pub fn verify_paper() -> VerifyReport {
    verify_paper_in(&Constants::STANDARD)
}

pub fn verify_paper_in(c: &Constants) -> VerifyReport {
    let claims: Vec<ClaimOutcome> = CLAIMS
        .iter()
        .map(|claim| {
            let res = (claim.check)(c);
            ClaimOutcome {
                id: claim.id,
                statement: claim.statement,
                passed: res.is_ok(),
                detail: res.err(),
            }
        })
        .collect();
    let failed = claims.iter().filter(|c| !c.passed).count();
    VerifyReport { claims, failed, passed: failed == 0 }
}

pub fn claims() -> &'static [Claim] {
    CLAIMS
}

fn expect<A: PartialEq + Debug>(what: &str, got: A, want: A) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn err(e: crate::Error) -> String {
    e.to_string()
}

const B020: ChernData = ChernData::rank3(0, 2, 0);

fn sp(ks: &[i64]) -> Spectrum {
    Spectrum::new(ks.to_vec()).expect("literal spectra are sorted")
}

/// Spectra only appear here for semistable rank 3, c₁ = 0.
fn ctx() -> SpectrumContext {
    SpectrumContext::default()
}

static CLAIMS: &[Claim] = &[
    Claim {
        id: "end-character",
        statement: "ch(F)ch(F*) = 9 + 2(c1^2 - 3c2)H^2 = 9 - 12H^2 for (c1,c2,c3) = (0,2,0)",
        check: |c| {
            let prod = &chern_character_in::<Q>(c, &B020) * &chern_character_in(c, &dual(&B020));
            expect("ch(F)ch(F*)", prod, ChowClass::from_ints([9, 0, -12, 0]))
        },
    },
    Claim {
        id: "chi-structure-sheaf",
        statement: "chi(O_P3) = 1",
        check: |c| expect("chi(O)", (&ChowClass::<Q>::one() * &todd_p3_in(c)).degree(), Q::from_int(1)),
    },
    Claim {
        id: "character-charge-two",
        statement: "ch(F) = 3 - 2H^2 for (0,2,0)",
        check: |c| expect("ch", chern_character_in::<Q>(c, &B020), ChowClass::from_ints([3, 0, -2, 0])),
    },
    Claim {
        id: "dual-self",
        statement: "the dual of a (0,2,0) bundle has Chern classes (0,2,0)",
        check: |_| expect("dual", dual(&B020), B020),
    },
    Claim {
        id: "twist-reflexive",
        statement: "E(2) has Chern classes (3,5,3) when E is rank 2 with (-1,3,3)",
        check: |c| {
            let e = ChernData::new(2, -1, 3, 3).map_err(err)?;
            expect("twist", twist_in(c, &e, 2).map_err(err)?, ChernData::new(2, 3, 5, 3).map_err(err)?)
        },
    },
    Claim {
        id: "twist-instanton",
        statement: "F(1) has Chern classes (3, n+3, n+1) for F of type (0,n,0), n in [2,10]",
        check: |c| {
            for n in 2..=10 {
                let got = twist_in(c, &ChernData::rank3(0, n, 0), 1).map_err(err)?;
                expect(&format!("n = {n}"), got, ChernData::rank3(3, n + 3, n + 1))?;
            }
            Ok(())
        },
    },
    Claim {
        id: "chi-f1",
        statement: "chi(F(1)) = 6 for (0,2,0), by the Chow ring and by the expanded formula",
        check: |c| {
            expect("ring", euler_characteristic_in(c, &B020, 1).map_err(err)?, 6)?;
            let lit = chi_polynomial_literal_in::<Q>(c, &B020).map_err(err)?;
            expect("expanded", lit.eval_at(1), Q::from_int(6))
        },
    },
    Claim {
        id: "chi-curve-comparison",
        statement: "the curve-side and Riemann-Roch expressions for chi(F(m)) agree coefficientwise \
                    under d = c2, c3 - 4c2 + c1c2 = 2g - 2",
        check: |c| {
            for c1 in -3..=3 {
                for d in 1..=6 {
                    for g in -3..=3 {
                        let cv = CurveInvariants::new(d, g).map_err(err)?;
                        let bundle = curve_to_bundle_in(c, &cv, c1).map_err(err)?;
                        let curve_side = chi_curve_polynomial::<Q>(c1, d, g).map_err(err)?;
                        let ring = chi_polynomial_in::<Q>(c, &bundle);
                        let lit = chi_polynomial_literal_in::<Q>(c, &bundle).map_err(err)?;
                        let tag = format!("(c1,d,g) = ({c1},{d},{g})");
                        expect(&format!("{tag} ring"), &ring, &curve_side)?;
                        expect(&format!("{tag} expanded"), &lit, &curve_side)?;
                    }
                }
            }
            Ok(())
        },
    },
    Claim {
        id: "parity-charge-two",
        statement: "c3 = c1c2 mod 2 holds for (0,2,0)",
        check: |_| expect("parity", validate_parity(&B020).map_err(err)?, true),
    },
    Claim {
        id: "parity-twist",
        statement: "c3 = c1c2 mod 2 holds for (3,5,3)",
        check: |_| expect("parity", validate_parity(&ChernData::rank3(3, 5, 3)).map_err(err)?, true),
    },
    Claim {
        id: "spectrum-h1-zero",
        statement: "spectrum (0,0): h1(F(-2)) = 0",
        check: |_| expect("h1", h1_from_spectrum(&sp(&[0, 0]), -2, &ctx()).map_err(err)?, 0),
    },
    Claim {
        id: "spectrum-h1-minus-two",
        statement: "spectrum (-1,1): h1(F(-2)) = 1",
        check: |_| expect("h1", h1_from_spectrum(&sp(&[-1, 1]), -2, &ctx()).map_err(err)?, 1),
    },
    Claim {
        id: "spectrum-h1-minus-one",
        statement: "spectrum (-1,1): h1(F(-1)) = 2",
        check: |_| expect("h1", h1_from_spectrum(&sp(&[-1, 1]), -1, &ctx()).map_err(err)?, 2),
    },
    Claim {
        id: "spectrum-h2-zero",
        statement: "spectrum (0,0): h2(F(-2)) = 0",
        check: |_| expect("h2", h2_from_spectrum(&sp(&[0, 0]), -2, &ctx()).map_err(err)?, 0),
    },
    Claim {
        id: "spectrum-h2-minus-two",
        statement: "spectrum (-1,1): h2(F(-2)) = 1",
        check: |_| expect("h2", h2_from_spectrum(&sp(&[-1, 1]), -2, &ctx()).map_err(err)?, 1),
    },
    Claim {
        id: "spectrum-h2-one",
        statement: "spectrum (-1,1): h2(F(1)) = 0",
        check: |_| expect("h2", h2_from_spectrum(&sp(&[-1, 1]), 1, &ctx()).map_err(err)?, 0),
    },
    Claim {
        id: "instanton-spectrum",
        statement: "a semistable (0,n,0) bundle is an instanton iff its spectrum is zero",
        check: |_| {
            expect("(0,0)", is_instanton_spectrum(&sp(&[0, 0])), true)?;
            expect("(-1,1)", is_instanton_spectrum(&sp(&[-1, 1])), false)?;
            expect("(0,0,0)", is_instanton_spectrum(&sp(&[0, 0, 0])), true)
        },
    },
    Claim {
        id: "spectra-charge-two",
        statement: "the charge-2 spectra are (-1,1) and (0,0)",
        check: |_| expect("spectra", enumerate_spectra(2, 1).map_err(err)?, vec![sp(&[-1, 1]), sp(&[0, 0])]),
    },
    Claim {
        id: "spectrum-elimination",
        statement: "spectrum (-1,1) forces h1(F(-2)) = 1, contradicting the instanton vanishing h1(F(-2)) = 0",
        check: |c| {
            let bad = sp(&[-1, 1]);
            let h1 = h1_from_spectrum(&bad, -2, &ctx()).map_err(err)?;
            let instanton = natural_table_in(c, &B020, -2, -2).map_err(err)?;
            expect("instanton h1(F(-2))", instanton.h(1, -2), Some(0))?;
            if h1 == 0 {
                return Err("spectrum (-1,1) does not obstruct the instanton vanishing".into());
            }
            Ok(())
        },
    },
    Claim {
        id: "curve-quintic",
        statement: "F(1) of type (3,5,3) corresponds to a curve of degree 5 and genus 0",
        check: |c| {
            let cv = bundle_to_curve_in(c, &ChernData::rank3(3, 5, 3)).map_err(err)?;
            expect("(d, g)", cv.invariants(), (5, 0))
        },
    },
    Claim {
        id: "curve-family",
        statement: "(3, n+3, n+1) corresponds to d = n+3, g = 0 for n in [2,10]",
        check: |c| {
            for n in 2..=10 {
                let cv = bundle_to_curve_in(c, &ChernData::rank3(3, n + 3, n + 1)).map_err(err)?;
                expect(&format!("n = {n}"), cv.invariants(), (n + 3, 0))?;
            }
            Ok(())
        },
    },
    Claim {
        id: "curve-to-bundle-quintic",
        statement: "a rational quintic with c1 = 3 gives Chern classes (3,5,3)",
        check: |c| {
            let cv = CurveInvariants::rational(5).map_err(err)?;
            expect("bundle", curve_to_bundle_in(c, &cv, 3).map_err(err)?, ChernData::rank3(3, 5, 3))
        },
    },
    Claim {
        id: "normal-bundle-degree",
        statement: "det N_Y (x) O_Y(-3) has degree n+1 and is generated by two sections, n in [2,20]",
        check: |c| {
            for n in 2..=20 {
                let deg = rational_normal_twist_degree_in(c, n).map_err(err)?;
                expect(&format!("n = {n}"), deg, n + 1)?;
                expect(&format!("n = {n} generated"), generated_by_two_sections(deg), true)?;
            }
            Ok(())
        },
    },
    Claim {
        id: "two-sections-charge-two",
        statement: "O_Y(3pt) is generated by two sections",
        check: |_| expect("generated", generated_by_two_sections(3), true),
    },
    Claim {
        id: "chi-ideal-sheaf",
        statement: "chi(I_Y) = chi(O_P3) - chi(O_Y) = 0 for a rational curve of degree n+3",
        check: |_| {
            for n in 2..=10 {
                let cv = CurveInvariants::rational(n + 3).map_err(err)?;
                expect(&format!("n = {n}"), chi_ideal_sheaf(&cv, 0), 0)?;
            }
            Ok(())
        },
    },
    Claim {
        id: "thooft-threshold",
        statement: "h0(F(1)) >= r - 1 is 2 for rank 3 and 1 for rank 2; chi(F(1)) = 6 clears it",
        check: |c| {
            expect("rank 3", thooft_threshold(3).map_err(err)?, 2)?;
            expect("rank 2", thooft_threshold(2).map_err(err)?, 1)?;
            let chi = euler_characteristic_in(c, &B020, 1).map_err(err)?;
            expect("chi(F(1)) >= 2", chi >= 2, true)
        },
    },
    Claim {
        id: "chi-f1-charge",
        statement: "chi(F(1)) = 12 - 3n for charge n, equal to 6 at n = 2",
        check: |c| {
            expect("n = 2", euler_characteristic_in(c, &B020, 1).map_err(err)?, 6)?;
            for n in 2..=10 {
                let v = euler_characteristic_in(c, &ChernData::rank3(0, n, 0), 1).map_err(err)?;
                expect(&format!("n = {n}"), v, 12 - 3 * n)?;
            }
            Ok(())
        },
    },
    Claim {
        id: "natural-table",
        statement: "natural cohomology of (0,2,0) over t in [-5,1]",
        check: |c| {
            let tbl = natural_table_in(c, &B020, -5, 1).map_err(err)?;
            let rows = [
                (1, [6, 0, 0, 0]),
                (0, [0, 1, 0, 0]),
                (-1, [0, 2, 0, 0]),
                (-2, [0, 0, 0, 0]),
                (-3, [0, 0, 2, 0]),
                (-4, [0, 0, 1, 0]),
                (-5, [0, 0, 0, 6]),
            ];
            for (t, h) in rows {
                expect(&format!("t = {t}"), tbl.row(t), Some(h))?;
            }
            Ok(())
        },
    },
    Claim {
        id: "instanton-vanishing",
        statement: "H0(F(-1)) = H1(F(-2)) = H2(F(-2)) = H3(F(-3)) = 0 in the (0,2,0) table",
        check: |c| {
            let tbl = natural_table_in(c, &B020, -3, -1).map_err(err)?;
            expect("row t = -2", tbl.row(-2), Some([0; 4]))?;
            expect("instanton", instanton_check(&tbl).map_err(err)?, true)
        },
    },
    Claim {
        id: "instanton-profile-fails",
        statement: "a table with h1(F(-2)) = h2(F(-2)) = 1 is not an instanton table",
        check: |_| {
            let tbl = CohomTable::from_rows(B020, [(-3, [0, 0, 2, 0]), (-2, [0, 1, 1, 0]), (-1, [0, 2, 0, 0])])
                .map_err(err)?;
            expect("instanton", instanton_check(&tbl).map_err(err)?, false)
        },
    },
    Claim {
        id: "serre-symmetry",
        statement: "h^i(F(t)) = h^(3-i)(F*(-t-4)) for (0,2,0) over t in [-10,6]",
        check: |c| expect("symmetric", serre_symmetry_check_in(c, &B020, -10, 6).map_err(err)?, true),
    },
    Claim {
        id: "chi-end-closed-form",
        statement: "chi(F (x) F*) = 4c1^2 - 12c2 + 9, checked against the Chow ring",
        check: |c| {
            expect("(0,2,0)", chi_endomorphisms_in(c, &B020).map_err(err)?, -15)?;
            for c1 in -4..=4 {
                for c2 in -4..=6 {
                    for c3 in -3..=3 {
                        let d = ChernData::rank3(c1, c2, c3);
                        let ring = chi_endomorphisms_in(c, &d).map_err(err)?;
                        let closed = chi_endomorphisms_closed_form_in(c, &d).map_err(err)?;
                        expect(&format!("{d}"), closed, ring)?;
                    }
                }
            }
            Ok(())
        },
    },
    Claim {
        id: "ext-difference",
        statement: "dim Ext1(F,F) - dim Ext2(F,F) = 16 for stable (0,2,0)",
        check: |c| {
            let e = ext_difference_in(c, &B020).map_err(err)?;
            expect("ext difference", e, 16)?;
            expect("1 - chi(End)", 1 - chi_endomorphisms_in(c, &B020).map_err(err)?, 16)
        },
    },
    Claim {
        id: "ext-difference-family",
        statement: "dim Ext1 - dim Ext2 = -4c1^2 + 12c2 - 8, i.e. 12n - 8 on (0,n,0)",
        check: |c| {
            for n in 2..=10 {
                let d = ChernData::rank3(0, n, 0);
                expect(&format!("n = {n}"), ext_difference_in(c, &d).map_err(err)?, 12 * n - 8)?;
            }
            for c1 in -3..=3 {
                for c2 in 1..=4 {
                    let d = ChernData::rank3(c1, c2, c1 * c2);
                    let ring = 1 - chi_endomorphisms_in(c, &d).map_err(err)?;
                    expect(&format!("{d}"), ext_difference_in(c, &d).map_err(err)?, ring)?;
                }
            }
            Ok(())
        },
    },
    Claim {
        id: "smooth-dimension",
        statement: "with Ext2(F,F) = 0 the moduli space has dimension 16 at a stable (0,2,0) bundle",
        check: |c| {
            let r = smooth_dimension_in(c, &B020, &[Hypothesis::Stable, Hypothesis::Ext2Vanishes]).map_err(err)?;
            expect("dimension", r.dimension, Some(16))
        },
    },
    Claim {
        id: "dimension-chain",
        statement: "19 + 3 = 22, fibres of dimension h0(F(1)) = 6, and 22 - 6 = 16 = ext difference",
        check: |c| {
            let r = charge2_dimension_chain_in(c).map_err(err)?;
            let step = |q: &str| r.derivation.iter().find(|s| s.quantity == q).map(|s| s.value);
            expect("dim X", step("dim X"), Some(22))?;
            expect("fiber", step("fiber dim h^0(F(1))"), Some(6))?;
            expect("dim I(2)", step("dim I(2)"), Some(16))?;
            expect("dimension", r.dimension, Some(ext_difference_in(c, &B020).map_err(err)?))
        },
    },
    Claim {
        id: "monad",
        statement: "the monad O(-1)^2 -> O^7 -> O(1)^2 has cohomology of type (3,0,2,0)",
        check: |c| {
            let mt = MonadType::new(2, 7, 2).map_err(err)?;
            expect("monad", monad_chern_in(c, &mt).map_err(err)?, B020)
        },
    },
    Claim {
        id: "chi-integral",
        statement: "chi(F(m)) is an integer for (0,2,0) at every m in [-20,20]",
        check: |c| {
            for m in -20..=20 {
                let v: Q = chi_value_in(c, &B020, m);
                if !v.is_integral() {
                    return Err(format!("chi(F({m})) = {v}"));
                }
            }
            Ok(())
        },
    },
];
