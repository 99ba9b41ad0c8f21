//! Cohomology tables under the natural-cohomology hypothesis, and Chern
//! data of linear monads.
//!
//! A sheaf has natural cohomology when each twist has at most one nonzero
//! cohomology group. Then `h^i(F(t)) = (−1)^i χ(t)` for the single live
//! index `i`, and that index is fixed by the sign pattern of the χ cubic:
//! it starts at 3 for `t ≪ 0` (the leading coefficient `rank/6` is positive,
//! so χ → −∞) and drops by one at every real root of odd multiplicity.
//! Roots are located with a Sturm chain over exact rationals, so nearby
//! irrational roots between two integers are still counted correctly.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::chern::{
    chern_from_character_in, chi_polynomial_in, dual, euler_characteristic_in, ChernData, ChiPolynomial,
};
use crate::chowring::{exp_line_in, ChowClass};
use crate::constants::Constants;
use crate::error::{Error, Result};
use crate::poly::{Poly, SturmChain};
use crate::scalar::Scalar;
use crate::Q;

/// The monad `O(−1)^⊕a → O^⊕b → O(1)^⊕c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonadType {
    a: u32,
    b: u32,
    c: u32,
}

impl MonadType {
    pub fn new(a: u32, b: u32, c: u32) -> Result<Self> {
        if (b as i64) - (a as i64) - (c as i64) < 1 {
            return Err(Error::InvalidMonad { a, b, c });
        }
        Ok(MonadType { a, b, c })
    }

    /// The rank-3 charge-`n` family `O(−1)^n → O^(2n+3) → O(1)^n`.
    pub fn rank3_charge(n: u32) -> Self {
        MonadType { a: n, b: 2 * n + 3, c: n }
    }

    pub fn rank(&self) -> u32 {
        self.b - self.a - self.c
    }
}

pub fn monad_chern(mt: &MonadType) -> ChernData {
    monad_chern_in(&Constants::STANDARD, mt).expect("monad cohomology has integral Chern classes")
}

/// Chern data of the cohomology of the monad, from
/// `ch = b − a·e^{−H} − c·e^{H}`.
pub fn monad_chern_in(k: &Constants, mt: &MonadType) -> Result<ChernData> {
    let ch: ChowClass<Q> = &(&ChowClass::constant(Q::from_int(mt.b as i64))
        - &exp_line_in::<Q>(k, -1).scale(&Q::from_int(mt.a as i64)))
        - &exp_line_in::<Q>(k, 1).scale(&Q::from_int(mt.c as i64));
    chern_from_character_in(k, &ch, mt.rank())
}

/// Dimensions `(h⁰, h¹, h², h³)` of `F(t)` for a range of twists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomTable {
    chern: ChernData,
    rows: BTreeMap<i64, [u64; 4]>,
}

#[derive(Serialize, Deserialize)]
struct RowJson {
    h: [u64; 4],
    t: i64,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    chern: ChernData,
    rows: Vec<RowJson>,
}

impl CohomTable {
    /// Builds a table from explicit rows, checking each against χ.
    pub fn from_rows(chern: ChernData, rows: impl IntoIterator<Item = (i64, [u64; 4])>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (t, h) in rows {
            let alternating = h[0] as i64 - h[1] as i64 + h[2] as i64 - h[3] as i64;
            let chi = euler_characteristic_in(&Constants::STANDARD, &chern, t)?;
            if alternating != chi {
                return Err(Error::InconsistentRow { t, alternating, chi });
            }
            map.insert(t, h);
        }
        Ok(CohomTable { chern, rows: map })
    }

    pub fn chern(&self) -> &ChernData {
        &self.chern
    }

    pub fn row(&self, t: i64) -> Option<[u64; 4]> {
        self.rows.get(&t).copied()
    }

    /// Rows in ascending `t`.
    pub fn rows(&self) -> impl Iterator<Item = (i64, [u64; 4])> + '_ {
        self.rows.iter().map(|(&t, &h)| (t, h))
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn h(&self, i: usize, t: i64) -> Option<u64> {
        self.rows.get(&t).map(|h| h[i])
    }

    pub fn to_json(&self) -> String {
        let doc = TableJson {
            chern: self.chern,
            rows: self.rows().map(|(t, h)| RowJson { h, t }).collect(),
        };
        serde_json::to_string(&doc).expect("table serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: TableJson =
            serde_json::from_str(s).map_err(|e| Error::DomainError(format!("invalid table JSON: {e}")))?;
        CohomTable::from_rows(doc.chern, doc.rows.into_iter().map(|r| (r.t, r.h)))
    }

    /// Aligned columns `t h0 h1 h2 h3`, one row per twist.
    pub fn render_text(&self) -> String {
        let width = self
            .rows()
            .map(|(t, h)| h.iter().map(|x| x.to_string().len()).max().unwrap_or(1).max(t.to_string().len()))
            .max()
            .unwrap_or(1)
            .max(2);
        let mut out = String::new();
        let _ = writeln!(out, "chern {}", self.chern);
        let _ = writeln!(out, "{:>w$} {:>w$} {:>w$} {:>w$} {:>w$}", "t", "h0", "h1", "h2", "h3", w = width);
        for (t, h) in self.rows() {
            let _ = writeln!(
                out,
                "{:>w$} {:>w$} {:>w$} {:>w$} {:>w$}",
                t,
                h[0],
                h[1],
                h[2],
                h[3],
                w = width
            );
        }
        out
    }
}

/// Sign-change structure of a χ cubic.
pub struct RootProfile {
    odd: SturmChain<Q>,
    odd_total: usize,
    all: Poly<Q>,
}

impl RootProfile {
    pub fn new(chi: &ChiPolynomial<Q>) -> Self {
        let p = Poly::new(chi.coeffs().to_vec());
        let odd = p.odd_multiplicity_part();
        let chain = odd.sturm();
        let odd_total = chain.real_roots();
        RootProfile { odd: chain, odd_total, all: p.radical() }
    }

    /// Distinct odd-multiplicity real roots strictly below `t`.
    pub fn odd_roots_below(&self, t: i64) -> usize {
        self.odd.roots_below(&Q::from_int(t))
    }

    pub fn odd_root_count(&self) -> usize {
        self.odd_total
    }

    /// Smallest integer strictly above every real root.
    fn first_twist_past_roots(&self) -> i64 {
        let chain = self.all.sturm();
        let total = chain.real_roots();
        // Cauchy bound on root size
        let lead = self.all.lead();
        let mut bound = Q::from_int(1);
        for a in self.all.coeffs() {
            let r = a.clone() / lead.clone();
            let r = if r.is_negative() { -r } else { r };
            if r > bound {
                bound = r;
            }
        }
        let b = bound.ceil().to_int().unwrap_or(i64::MAX / 2) + 1;
        (-b..=b).find(|&t| chain.roots_below(&Q::from_int(t)) == total).unwrap_or(b)
    }
}

/// The unique table consistent with natural cohomology over `[t_min, t_max]`.
pub fn natural_table(d: &ChernData, t_min: i64, t_max: i64) -> Result<CohomTable> {
    natural_table_in(&Constants::STANDARD, d, t_min, t_max)
}

pub fn natural_table_in(k: &Constants, d: &ChernData, t_min: i64, t_max: i64) -> Result<CohomTable> {
    if t_min > t_max {
        return Err(Error::DomainError(format!("empty twist range [{t_min}, {t_max}]")));
    }
    let chi = chi_polynomial_in::<Q>(k, d);
    let profile = RootProfile::new(&chi);
    if profile.odd_root_count() < 3 {
        return Err(Error::NotNaturalizable {
            twist: Some(profile.first_twist_past_roots()),
            reason: format!(
                "chi changes sign at only {} real point(s), so higher cohomology never vanishes for large twists",
                profile.odd_root_count()
            ),
        });
    }
    let mut rows = BTreeMap::new();
    for t in t_min..=t_max {
        let value = chi.eval_int(t)?;
        let index = 3 - profile.odd_roots_below(t);
        let h = if index.is_multiple_of(2) { value } else { -value };
        if h < 0 {
            return Err(Error::NotNaturalizable {
                twist: Some(t),
                reason: format!("h^{index} would be {h}"),
            });
        }
        let mut row = [0u64; 4];
        row[index] = h as u64;
        rows.insert(t, row);
    }
    Ok(CohomTable { chern: *d, rows })
}

/// `H⁰(F(−1)) = H¹(F(−2)) = H²(F(−2)) = H³(F(−3)) = 0`.
pub fn instanton_check(tbl: &CohomTable) -> Result<bool> {
    let missing: Vec<i64> = [-3, -2, -1].into_iter().filter(|t| tbl.row(*t).is_none()).collect();
    if !missing.is_empty() {
        return Err(Error::MissingRows(missing));
    }
    let h = |i, t| tbl.h(i, t).unwrap_or_default();
    Ok(h(0, -1) == 0 && h(1, -2) == 0 && h(2, -2) == 0 && h(3, -3) == 0)
}

/// `hⁱ(F(t)) = h³⁻ⁱ(F*(−t−4))` across the two natural tables.
pub fn serre_symmetry_check(d: &ChernData, t_min: i64, t_max: i64) -> Result<bool> {
    serre_symmetry_check_in(&Constants::STANDARD, d, t_min, t_max)
}

pub fn serre_symmetry_check_in(k: &Constants, d: &ChernData, t_min: i64, t_max: i64) -> Result<bool> {
    let ours = natural_table_in(k, d, t_min, t_max)?;
    let theirs = natural_table_in(k, &dual(d), -t_max - 4, -t_min - 4)?;
    let ok = ours.rows().all(|(t, h)| {
        theirs
            .row(-t - 4)
            .is_some_and(|g| (0..4).all(|i| h[i] == g[3 - i]))
    });
    Ok(ok)
}
