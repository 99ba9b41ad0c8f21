//! The seven acceptance criteria, one PASS/FAIL line each.

use std::process::Command;

use clap::ValueEnum;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use p3_instanton::chern::{
    chern_character, chern_from_character, chi_curve_form_with, chi_endomorphisms, chi_endomorphisms_closed_form,
    euler_characteristic, twist, Binomial,
};
use p3_instanton::cohomtable::{monad_chern, natural_table, serre_symmetry_check};
use p3_instanton::curvelink::{bundle_to_curve, curve_to_bundle, generated_by_two_sections, rational_normal_twist_degree};
use p3_instanton::moduli::{charge2_dimension_chain, ext_difference};
use p3_instanton::spectrum::{enumerate_spectra, h1_from_spectrum, h2_from_spectrum, Spectrum, SpectrumContext};
use p3_instanton::verify::verify_paper_in;
use p3_instanton::{ChernData, Constants, CurveInvariants, Fault, MonadType, Q};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

const CASES: usize = 1000;
const B020: ChernData = ChernData::rank3(0, 2, 0);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Outcome {
    ensure(got == want, || format!("{what}: got {got:?}, want {want:?}"))
}

fn dimension_sixteen() -> Outcome {
    eq("ext_difference(3,0,2,0)", ext_difference(&B020).map_err(|e| e.to_string())?, 16)?;
    let chain = charge2_dimension_chain().map_err(|e| e.to_string())?;
    let step = |q: &str| chain.derivation.iter().find(|s| s.quantity == q).map(|s| s.value);
    eq("dim R", step("dim R (stable reflexive rank 2, c = (-1,3,3))"), Some(19))?;
    eq("dim Ext^1", step("dim Ext^1(E(2), O)"), Some(3))?;
    eq("dim X", step("dim X"), Some(22))?;
    eq("fiber", step("fiber dim h^0(F(1))"), Some(6))?;
    eq("dim I(2)", step("dim I(2)"), Some(16))?;
    eq("chain dimension", chain.dimension, Some(16))
}

fn chi_f1_is_six() -> Outcome {
    eq("chi(F(1))", euler_characteristic(&B020, 1).map_err(|e| e.to_string())?, 6)?;
    let tbl = natural_table(&B020, 1, 1).map_err(|e| e.to_string())?;
    eq("row t=1", tbl.row(1), Some([6, 0, 0, 0]))
}

fn spectrum_suite() -> Outcome {
    let want = vec![Spectrum::new(vec![-1, 1]).unwrap(), Spectrum::new(vec![0, 0]).unwrap()];
    // only ordering and zero-sum are imposed, so wider boxes also admit (-2,2) etc.
    eq("spectra(2, 1)", enumerate_spectra(2, 1).map_err(|e| e.to_string())?, want.clone())?;
    let ctx = SpectrumContext::default();
    let h = |sp: &Spectrum, l| (h1_from_spectrum(sp, l, &ctx).unwrap(), h2_from_spectrum(sp, l, &ctx).unwrap());
    eq("(-1,1) at -2", h(&want[0], -2), (1, 1))?;
    eq("(0,0) at -2", h(&want[1], -2), (0, 0))?;
    eq("h1(-1) for (-1,1)", h1_from_spectrum(&want[0], -1, &ctx).unwrap(), 2)
}

fn natural_table_rows() -> Outcome {
    let tbl = natural_table(&B020, -5, 1).map_err(|e| e.to_string())?;
    let rows = [
        (1, [6, 0, 0, 0]),
        (0, [0, 1, 0, 0]),
        (-1, [0, 2, 0, 0]),
        (-2, [0, 0, 0, 0]),
        (-3, [0, 0, 2, 0]),
        (-4, [0, 0, 1, 0]),
        (-5, [0, 0, 0, 6]),
    ];
    eq("row count", tbl.len(), rows.len())?;
    for (t, h) in rows {
        eq(&format!("row t={t}"), tbl.row(t), Some(h))?;
    }
    eq("h3(F(-5))", tbl.h(3, -5), Some(6))
}

fn random_rank3(rng: &mut StdRng) -> ChernData {
    let c1 = rng.gen_range(-6..=6);
    let c2 = rng.gen_range(-12..=12);
    let c3 = c1 * c2 + 2 * rng.gen_range(-10..=10);
    ChernData::rank3(c1, c2, c3)
}

fn identity_suite() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    let mut counts = [0usize; 7];

    // curve side against Riemann-Roch through the dictionary
    for _ in 0..CASES {
        let c1 = rng.gen_range(-5..=5);
        let d = rng.gen_range(1..=12);
        let g = rng.gen_range(-6..=20);
        let m = rng.gen_range(-15..=15);
        let cv = CurveInvariants::new(d, g).unwrap();
        let bundle = curve_to_bundle(&cv, c1);
        let rr = euler_characteristic(&bundle, m).map_err(|e| format!("{bundle} m={m}: {e}"))?;
        let curve = chi_curve_form_with(Binomial::Polynomial, c1, d, g, m).unwrap();
        eq(&format!("chi1 vs chi2 at (c1,d,g,m)=({c1},{d},{g},{m})"), curve, rr)?;
        if m + 3 >= 0 && m + c1 + 3 >= 0 {
            eq("clamped chi1", chi_curve_form_with(Binomial::Clamped, c1, d, g, m).unwrap(), rr)?;
        }
        counts[0] += 1;
    }

    for _ in 0..CASES {
        let d = random_rank3(&mut rng);
        let ring = chi_endomorphisms(&d).unwrap();
        eq(&format!("chi_end {d}"), chi_endomorphisms_closed_form(&d).unwrap(), ring)?;
        eq(&format!("chi_end formula {d}"), ring, 4 * d.c1() * d.c1() - 12 * d.c2() + 9)?;
        eq(&format!("ext_diff {d}"), ext_difference(&d).unwrap(), 1 - ring)?;
        counts[1] += 1;
    }

    for _ in 0..CASES {
        let rank = rng.gen_range(1..=5);
        let d = ChernData::new(rank, rng.gen_range(-8..=8), rng.gen_range(-20..=20), rng.gen_range(-40..=40)).unwrap();
        let a = rng.gen_range(-10..=10);
        let b = rng.gen_range(-10..=10);
        eq(&format!("twist law {d} {a} {b}"), twist(&twist(&d, a), b), twist(&d, a + b))?;
        eq(&format!("twist zero {d}"), twist(&d, 0), d)?;
        counts[2] += 1;
    }

    for _ in 0..CASES {
        let rank = rng.gen_range(1..=5);
        let d = ChernData::new(rank, rng.gen_range(-20..=20), rng.gen_range(-50..=50), rng.gen_range(-99..=99)).unwrap();
        let back = chern_from_character(&chern_character::<Q>(&d), rank).map_err(|e| e.to_string())?;
        eq("character roundtrip", back, d)?;
        counts[3] += 1;
    }

    for _ in 0..CASES {
        let c1 = rng.gen_range(-6..=6);
        let cv = CurveInvariants::new(rng.gen_range(1..=30), rng.gen_range(-10..=40)).unwrap();
        let d = curve_to_bundle(&cv, c1);
        eq("curve roundtrip", bundle_to_curve(&d).map(|c| c.invariants()), Ok(cv.invariants()))?;
        let d = random_rank3(&mut rng);
        if d.c2() >= 1 {
            let cv = bundle_to_curve(&d).map_err(|e| e.to_string())?;
            eq("bundle roundtrip", curve_to_bundle(&cv, d.c1()), d)?;
        }
        counts[4] += 1;
    }

    // χ(F(m)) = −χ(F*(−m−4)) on P³
    for _ in 0..CASES {
        let d = random_rank3(&mut rng);
        let m = rng.gen_range(-30..=30);
        let lhs = euler_characteristic(&d, m).unwrap();
        let rhs = euler_characteristic(&p3_instanton::chern::dual(&d), -m - 4).unwrap();
        eq(&format!("serre {d} m={m}"), lhs, -rhs)?;
        counts[5] += 1;
    }

    eq("serre_symmetry_check [-10,6]", serre_symmetry_check(&B020, -10, 6).map_err(|e| e.to_string())?, true)?;
    counts[6] += 1;

    ensure(counts[..6].iter().all(|&c| c >= CASES), || format!("case counts {counts:?}"))
}

fn bookkeeping() -> Outcome {
    eq("monad (2,7,2)", monad_chern(&MonadType::new(2, 7, 2).unwrap()), B020)?;
    eq("twist (2,-1,3,3) by 2", twist(&ChernData::new(2, -1, 3, 3).unwrap(), 2), ChernData::new(2, 3, 5, 3).unwrap())?;
    eq(
        "bundle_to_curve (3,3,5,3)",
        bundle_to_curve(&ChernData::rank3(3, 5, 3)).map(|c| c.invariants()),
        Ok((5, 0)),
    )?;
    for n in 2..=20 {
        let deg = rational_normal_twist_degree(n).map_err(|e| e.to_string())?;
        eq(&format!("twist degree n={n}"), deg, n + 1)?;
        eq(&format!("two sections n={n}"), generated_by_two_sections(deg), true)?;
    }
    Ok(())
}

fn fault_name(f: Fault) -> String {
    f.to_possible_value().expect("every fault is selectable").get_name().to_string()
}

fn mutation_detection() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_p3-instanton");
    let run = |extra: &[&str]| {
        Command::new(bin)
            .arg("verify-paper")
            .args(extra)
            .output()
            .map(|o| o.status.code())
            .map_err(|e| e.to_string())
    };
    eq("clean verify-paper exit", run(&[])?, Some(0))?;
    eq("clean in-process", verify_paper_in(&Constants::STANDARD).passed, true)?;
    let mut missed = Vec::new();
    for f in Fault::ALL {
        let name = fault_name(f);
        let caught_in_process = !verify_paper_in(&Constants::with_fault(f)).passed;
        let code = run(&["--inject-fault", &name])?;
        if !caught_in_process || code != Some(1) {
            missed.push(name);
        }
    }
    ensure(missed.is_empty(), || {
        format!("detection {}/{}; missed {missed:?}", Fault::ALL.len() - missed.len(), Fault::ALL.len())
    })
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("dimension 16 from Ext difference and from the 19 + 3 - 6 chain", dimension_sixteen),
        ("chi(F(1)) = 6 and table row t=1 is (6,0,0,0)", chi_f1_is_six),
        ("spectrum suite for n = 2, bound 1", spectrum_suite),
        ("natural table of (3,0,2,0) over [-5,1]", natural_table_rows),
        ("identity suite, 1000 seeded cases per identity", identity_suite),
        ("monad and curve correspondence bookkeeping", bookkeeping),
        ("verify-paper exits 0 and catches every injected fault", mutation_detection),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("PASS  criterion {}: {name}", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL  criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
