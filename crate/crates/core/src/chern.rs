//! Chern classes, Chern characters and Euler characteristics on P³.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::chowring::{exp_line_in, todd_p3_in, ChowClass};
use crate::constants::Constants;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::Q;

/// Topological type `(rank, c₁, c₂, c₃)` of a sheaf on P³.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[i64; 4]", try_from = "[i64; 4]")]
pub struct ChernData {
    rank: u32,
    c1: i64,
    c2: i64,
    c3: i64,
}

impl ChernData {
    pub fn new(rank: u32, c1: i64, c2: i64, c3: i64) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(ChernData { rank, c1, c2, c3 })
    }

    pub const fn rank3(c1: i64, c2: i64, c3: i64) -> Self {
        ChernData { rank: 3, c1, c2, c3 }
    }

    pub const fn line_bundle(c1: i64) -> Self {
        ChernData { rank: 1, c1, c2: 0, c3: 0 }
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn c1(&self) -> i64 {
        self.c1
    }

    pub fn c2(&self) -> i64 {
        self.c2
    }

    pub fn c3(&self) -> i64 {
        self.c3
    }

    pub fn to_array(&self) -> [i64; 4] {
        [self.rank as i64, self.c1, self.c2, self.c3]
    }

    fn require_rank3(&self) -> Result<()> {
        if self.rank == 3 {
            Ok(())
        } else {
            Err(Error::RankUnsupported { rank: self.rank })
        }
    }
}

impl fmt::Display for ChernData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.rank, self.c1, self.c2, self.c3)
    }
}

impl From<ChernData> for [i64; 4] {
    fn from(d: ChernData) -> Self {
        d.to_array()
    }
}

impl TryFrom<[i64; 4]> for ChernData {
    type Error = Error;

    fn try_from([r, c1, c2, c3]: [i64; 4]) -> Result<Self> {
        let rank = u32::try_from(r).map_err(|_| Error::ZeroRank)?;
        ChernData::new(rank, c1, c2, c3)
    }
}

/// χ(F(m)) as a cubic in the twist `m`, coefficients ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChiPolynomial<T> {
    coeffs: [T; 4],
}

impl<T: Scalar> ChiPolynomial<T> {
    pub fn new(coeffs: [T; 4]) -> Self {
        ChiPolynomial { coeffs }
    }

    /// The unique cubic through `(0, v₀), (1, v₁), (2, v₂), (3, v₃)`.
    pub fn interpolate(values: [T; 4]) -> Self {
        let [v0, v1, v2, v3] = values;
        let d1 = v1.clone() - v0.clone();
        let d2 = v2.clone() - v1.clone() * T::from_int(2) + v0.clone();
        let d3 = v3 - v2 * T::from_int(3) + v1 * T::from_int(3) - v0.clone();
        // Newton form: v0 + d1·m + d2·m(m−1)/2 + d3·m(m−1)(m−2)/6
        let half = T::frac(1, 2);
        let sixth = T::frac(1, 6);
        let e2 = d2 * half;
        let e3 = d3 * sixth;
        ChiPolynomial::new([
            v0,
            d1 - e2.clone() + e3.clone() * T::from_int(2),
            e2 - e3.clone() * T::from_int(3),
            e3,
        ])
    }

    pub fn coeffs(&self) -> &[T; 4] {
        &self.coeffs
    }

    pub fn leading(&self) -> &T {
        &self.coeffs[3]
    }

    pub fn eval(&self, m: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, a| acc * m.clone() + a.clone())
    }

    pub fn eval_at(&self, m: i64) -> T {
        self.eval(&T::from_int(m))
    }

    /// Value at `m`, required to be an integer.
    pub fn eval_int(&self, m: i64) -> Result<i64> {
        let v = self.eval_at(m);
        v.to_int().ok_or_else(|| Error::NonIntegralChi { value: v.to_string() })
    }
}

impl<T: Scalar> fmt::Display for ChiPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let (sign, mag) = if a.is_negative() { ("-", -a.clone()) } else { ("+", a.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "m".to_string(),
                _ => format!("m^{k}"),
            };
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "({mag})*{mono}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

pub fn chern_character<T: Scalar>(d: &ChernData) -> ChowClass<T> {
    chern_character_in(&Constants::STANDARD, d)
}

/// `r + c₁H + ½(c₁²−2c₂)H² + ⅙(c₁³−3c₁c₂+3c₃)H³`.
pub fn chern_character_in<T: Scalar>(c: &Constants, d: &ChernData) -> ChowClass<T> {
    let [c1, c2, c3] = [d.c1, d.c2, d.c3].map(T::from_int);
    let ch2 = c.ch2[0].to::<T>() * c1.clone() * c1.clone() + c.ch2[1].to::<T>() * c2.clone();
    let ch3 = c.ch3[0].to::<T>() * c1.clone() * c1.clone() * c1.clone()
        + c.ch3[1].to::<T>() * c1.clone() * c2
        + c.ch3[2].to::<T>() * c3;
    ChowClass::new([T::from_int(d.rank as i64), c1, ch2, ch3])
}

pub fn chern_from_character<T: Scalar>(x: &ChowClass<T>, rank: u32) -> Result<ChernData> {
    chern_from_character_in(&Constants::STANDARD, x, rank)
}

/// Inverts [`chern_character_in`]; fails unless every recovered class is integral.
pub fn chern_from_character_in<T: Scalar>(
    c: &Constants,
    x: &ChowClass<T>,
    rank: u32,
) -> Result<ChernData> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    if *x.coeff(0) != T::from_int(rank as i64) {
        return Err(Error::RankMismatch { rank, found: x.coeff(0).to_string() });
    }
    if c.ch2[1].num == 0 || c.ch3[2].num == 0 {
        return Err(Error::DomainError("character dictionary is not invertible".into()));
    }
    let c1 = x.coeff(1).clone();
    let c2 = (x.coeff(2).clone() - c.ch2[0].to::<T>() * c1.clone() * c1.clone()) / c.ch2[1].to::<T>();
    let c3 = (x.coeff(3).clone()
        - c.ch3[0].to::<T>() * c1.clone() * c1.clone() * c1.clone()
        - c.ch3[1].to::<T>() * c1.clone() * c2.clone())
        / c.ch3[2].to::<T>();
    let int = |index: usize, v: T| {
        v.to_int()
            .ok_or_else(|| Error::NonIntegralChernClass { index, value: v.to_string() })
    };
    ChernData::new(rank, int(1, c1)?, int(2, c2)?, int(3, c3)?)
}

/// Chern data of the dual: odd classes change sign.
pub fn dual(d: &ChernData) -> ChernData {
    ChernData { rank: d.rank, c1: -d.c1, c2: d.c2, c3: -d.c3 }
}

/// Chern data of `F ⊗ O(k)`.
pub fn twist(d: &ChernData, k: i64) -> ChernData {
    twist_in(&Constants::STANDARD, d, k).expect("twisting preserves integrality")
}

pub fn twist_in(c: &Constants, d: &ChernData, k: i64) -> Result<ChernData> {
    let ch: ChowClass<Q> = &chern_character_in(c, d) * &exp_line_in(c, k);
    chern_from_character_in(c, &ch, d.rank)
}

/// Exact χ(F(m)) via Hirzebruch-Riemann-Roch in the Chow ring.
pub fn chi_value_in<T: Scalar>(c: &Constants, d: &ChernData, m: i64) -> T {
    let ch = &chern_character_in::<T>(c, d) * &exp_line_in(c, m);
    (&ch * &todd_p3_in(c)).degree()
}

pub fn euler_characteristic(d: &ChernData, m: i64) -> Result<i64> {
    euler_characteristic_in(&Constants::STANDARD, d, m)
}

pub fn euler_characteristic_in(c: &Constants, d: &ChernData, m: i64) -> Result<i64> {
    let v: Q = chi_value_in(c, d, m);
    v.to_int().ok_or_else(|| Error::NonIntegralChi { value: v.to_string() })
}

pub fn chi_polynomial<T: Scalar>(d: &ChernData) -> ChiPolynomial<T> {
    chi_polynomial_in(&Constants::STANDARD, d)
}

/// χ(F(m)) = Σₖ mᵏ/k! · ∫ ch(F)·td·Hᵏ, read off the Chow ring.
pub fn chi_polynomial_in<T: Scalar>(c: &Constants, d: &ChernData) -> ChiPolynomial<T> {
    let prod = &chern_character_in::<T>(c, d) * &todd_p3_in(c);
    let mut coeffs = [T::zero(), T::zero(), T::zero(), T::zero()];
    for (k, slot) in coeffs.iter_mut().enumerate() {
        *slot = c.exp[k].to::<T>() * prod.coeff(3 - k).clone();
    }
    ChiPolynomial::new(coeffs)
}

pub fn chi_polynomial_literal<T: Scalar>(d: &ChernData) -> Result<ChiPolynomial<T>> {
    chi_polynomial_literal_in(&Constants::STANDARD, d)
}

/// Term-by-term transcription of the rank-3 expansion
///
/// ```text
/// χ(F(m)) = ⅙(c₁³−3c₁c₂+3c₃) + ½m(c₁²−2c₂) + ½m²c₁ + ½m³
///         + (c₁²−2c₂) + 2mc₁ + 3m² + (11/6)c₁ + (11/2)m + 3
/// ```
///
/// kept independent of the Chow-ring route so the two can be compared.
pub fn chi_polynomial_literal_in<T: Scalar>(c: &Constants, d: &ChernData) -> Result<ChiPolynomial<T>> {
    d.require_rank3()?;
    let k = c.chi_literal.map(|f| f.to::<T>());
    let (c1, c2, c3) = (d.c1, d.c2, d.c3);
    let top = T::from_int(c1 * c1 * c1 - 3 * c1 * c2 + 3 * c3);
    let quad = T::from_int(c1 * c1 - 2 * c2);
    let c1 = T::from_int(c1);
    Ok(ChiPolynomial::new([
        k[0].clone() * top + k[4].clone() * quad.clone() + k[7].clone() * c1.clone() + k[9].clone(),
        k[1].clone() * quad + k[5].clone() * c1.clone() + k[8].clone(),
        k[2].clone() * c1 + k[6].clone(),
        k[3].clone(),
    ]))
}

/// How `binom(a, 3)` treats negative `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Binomial {
    /// `h⁰(O_{P³}(a−3))`: zero for every `a < 3`.
    Clamped,
    /// `a(a−1)(a−2)/6` for all integers `a`.
    Polynomial,
}

pub fn binom3(a: i64, conv: Binomial) -> i64 {
    match conv {
        Binomial::Clamped if a < 3 => 0,
        _ => a * (a - 1) * (a - 2) / 6,
    }
}

/// χ(F(m)) from the curve side of the sequence `0 → O² → F → I_Y(c₁) → 0`,
/// with the clamped binomial convention.
pub fn chi_curve_form(c1: i64, d: i64, g: i64, m: i64) -> Result<i64> {
    chi_curve_form_with(Binomial::Clamped, c1, d, g, m)
}

pub fn chi_curve_form_with(conv: Binomial, c1: i64, d: i64, g: i64, m: i64) -> Result<i64> {
    if d < 1 {
        return Err(Error::DomainError(format!("curve degree must be positive, got {d}")));
    }
    Ok(2 * binom3(m + 3, conv) + binom3(m + c1 + 3, conv) - (m + c1) * d - 1 + g)
}

/// The curve-side expression as a polynomial in `m`.
pub fn chi_curve_polynomial<T: Scalar>(c1: i64, d: i64, g: i64) -> Result<ChiPolynomial<T>> {
    let mut vals = [T::zero(), T::zero(), T::zero(), T::zero()];
    for (m, v) in vals.iter_mut().enumerate() {
        *v = T::from_int(chi_curve_form_with(Binomial::Polynomial, c1, d, g, m as i64)?);
    }
    Ok(ChiPolynomial::interpolate(vals))
}

/// χ(F ⊗ F*) computed in the Chow ring.
pub fn chi_endomorphisms(d: &ChernData) -> Result<i64> {
    chi_endomorphisms_in(&Constants::STANDARD, d)
}

pub fn chi_endomorphisms_in(c: &Constants, d: &ChernData) -> Result<i64> {
    d.require_rank3()?;
    let end = &chern_character_in::<Q>(c, d) * &chern_character_in(c, &dual(d));
    let v = (&end * &todd_p3_in(c)).degree();
    v.to_int().ok_or_else(|| Error::NonIntegralChi { value: v.to_string() })
}

/// `4c₁² − 12c₂ + 9`.
pub fn chi_endomorphisms_closed_form(d: &ChernData) -> Result<i64> {
    chi_endomorphisms_closed_form_in(&Constants::STANDARD, d)
}

pub fn chi_endomorphisms_closed_form_in(c: &Constants, d: &ChernData) -> Result<i64> {
    d.require_rank3()?;
    let [a, b, k] = c.chi_end;
    Ok(a * d.c1 * d.c1 + b * d.c2 + k)
}

/// `c₃ ≡ c₁c₂ (mod 2)`.
pub fn validate_parity(d: &ChernData) -> Result<bool> {
    d.require_rank3()?;
    Ok((d.c3 - d.c1 * d.c2).rem_euclid(2) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Q {
        Q::frac(n, d)
    }

    const B020: ChernData = ChernData::rank3(0, 2, 0);

    #[test]
    fn rank_zero_rejected() {
        assert_eq!(ChernData::new(0, 1, 2, 3), Err(Error::ZeroRank));
    }

    #[test]
    fn character_examples() {
        assert_eq!(chern_character::<Q>(&ChernData::line_bundle(0)), ChowClass::one());
        assert_eq!(chern_character::<Q>(&B020), ChowClass::from_ints([3, 0, -2, 0]));
        let d = ChernData::new(2, -1, 3, 3).unwrap();
        // c1²−2c2 = −5, c1³−3c1c2+3c3 = −1+9+9 = 17
        assert_eq!(
            chern_character::<Q>(&d),
            ChowClass::new([q(2, 1), q(-1, 1), q(-5, 2), q(17, 6)])
        );
    }

    #[test]
    fn end_character_for_charge_two() {
        let prod = chern_character::<Q>(&B020) * chern_character(&dual(&B020));
        assert_eq!(prod, ChowClass::from_ints([9, 0, -12, 0]));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(chern_from_character(&ChowClass::<Q>::from_ints([3, 0, -2, 0]), 3), Ok(B020));
        assert_eq!(
            chern_from_character(&ChowClass::<Q>::one(), 1),
            Ok(ChernData::line_bundle(0))
        );
        let x = ChowClass::new([q(3, 1), q(3, 1), q(-1, 2), q(-3, 2)]);
        assert_eq!(chern_from_character(&x, 3), Ok(ChernData::rank3(3, 5, 3)));
    }

    #[test]
    fn inverse_rejects_non_characters() {
        let x = ChowClass::new([q(3, 1), q(0, 1), q(1, 3), q(0, 1)]);
        assert!(matches!(
            chern_from_character(&x, 3),
            Err(Error::NonIntegralChernClass { index: 2, .. })
        ));
        assert!(matches!(
            chern_from_character(&ChowClass::<Q>::one(), 3),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual(&B020), B020);
        let d = ChernData::new(2, -1, 3, 3).unwrap();
        assert_eq!(dual(&d), ChernData::new(2, 1, 3, -3).unwrap());
        assert_eq!(dual(&dual(&d)), d);
    }

    #[test]
    fn twist_examples() {
        let e = ChernData::new(2, -1, 3, 3).unwrap();
        assert_eq!(twist(&e, 2), ChernData::new(2, 3, 5, 3).unwrap());
        for n in 2..=10 {
            assert_eq!(twist(&ChernData::rank3(0, n, 0), 1), ChernData::rank3(3, n + 3, n + 1));
        }
        assert_eq!(twist(&e, 0), e);
    }

    #[test]
    fn euler_characteristic_examples() {
        assert_eq!(euler_characteristic(&B020, 1), Ok(6));
        assert_eq!(euler_characteristic(&ChernData::line_bundle(0), 0), Ok(1));
        assert_eq!(euler_characteristic(&B020, -2), Ok(0));
        assert_eq!(euler_characteristic(&B020, 0), Ok(-1));
    }

    #[test]
    fn euler_characteristic_matches_twist_route() {
        for m in -6..=6 {
            let via_twist: Q = chi_value_in(&Constants::STANDARD, &twist(&B020, m), 0);
            assert_eq!(via_twist.to_int(), euler_characteristic(&B020, m).ok());
        }
    }

    #[test]
    fn non_integral_chi_is_reported() {
        let bad = ChernData::rank3(0, 2, 1);
        assert!(matches!(euler_characteristic(&bad, 0), Err(Error::NonIntegralChi { .. })));
    }

    #[test]
    fn chi_polynomial_examples() {
        let p = chi_polynomial::<Q>(&B020);
        assert_eq!(p.coeffs(), &[q(-1, 1), q(7, 2), q(3, 1), q(1, 2)]);
        assert_eq!(p.eval_int(1), Ok(6));
        assert_eq!(p.eval_int(-2), Ok(0));
        assert_eq!(p.eval_int(-5), Ok(-6));

        let o = chi_polynomial::<Q>(&ChernData::line_bundle(0));
        // (m+1)(m+2)(m+3)/6 = 1 + (11/6)m + m² + m³/6
        assert_eq!(o.coeffs(), &[q(1, 1), q(11, 6), q(1, 1), q(1, 6)]);

        for r in 1..=6 {
            let d = ChernData::new(r, 1, 2, 3).unwrap();
            assert_eq!(chi_polynomial::<Q>(&d).leading(), &q(r as i64, 6));
        }
    }

    #[test]
    fn literal_transcription_matches_ring() {
        for (c1, c2, c3) in [(0, 2, 0), (3, 5, 3), (-1, 3, 3), (1, 3, 1), (2, -4, 7)] {
            let d = ChernData::rank3(c1, c2, c3);
            assert_eq!(chi_polynomial_literal::<Q>(&d).unwrap(), chi_polynomial::<Q>(&d));
        }
        assert!(matches!(
            chi_polynomial_literal::<Q>(&ChernData::line_bundle(0)),
            Err(Error::RankUnsupported { rank: 1 })
        ));
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let p = chi_polynomial::<Q>(&ChernData::rank3(1, 3, 1));
        let vals = [0, 1, 2, 3].map(|m| p.eval_at(m));
        assert_eq!(ChiPolynomial::interpolate(vals), p);
    }

    #[test]
    fn polynomial_display() {
        assert_eq!(chi_polynomial::<Q>(&B020).to_string(), "(1/2)*m^3 + (3)*m^2 + (7/2)*m - 1");
    }

    #[test]
    fn curve_form_examples() {
        assert_eq!(chi_curve_form(3, 5, 0, -2), Ok(-2));
        assert_eq!(euler_characteristic(&ChernData::rank3(3, 5, 3), -2), Ok(-2));
        assert_eq!(chi_curve_form(3, 5, 0, 0), Ok(6));
        assert_eq!(euler_characteristic(&ChernData::rank3(3, 5, 3), 0), Ok(6));
        assert!(matches!(chi_curve_form(0, 0, 0, 0), Err(Error::DomainError(_))));
    }

    #[test]
    fn binomial_conventions_differ_only_below_zero() {
        for a in 0..10 {
            assert_eq!(binom3(a, Binomial::Clamped), binom3(a, Binomial::Polynomial));
        }
        assert_eq!(binom3(-1, Binomial::Clamped), 0);
        assert_eq!(binom3(-1, Binomial::Polynomial), -1);
    }

    #[test]
    fn curve_polynomial_is_the_ring_polynomial() {
        // rational quintic with c1 = 3
        assert_eq!(
            chi_curve_polynomial::<Q>(3, 5, 0).unwrap(),
            chi_polynomial::<Q>(&ChernData::rank3(3, 5, 3))
        );
    }

    #[test]
    fn endomorphism_examples() {
        assert_eq!(chi_endomorphisms(&B020), Ok(-15));
        assert_eq!(chi_endomorphisms(&ChernData::rank3(0, 0, 0)), Ok(9));
        assert_eq!(chi_endomorphisms(&ChernData::rank3(1, 3, 1)), Ok(-23));
        assert_eq!(chi_endomorphisms_closed_form(&ChernData::rank3(1, 3, 1)), Ok(-23));
        assert!(matches!(
            chi_endomorphisms(&ChernData::line_bundle(2)),
            Err(Error::RankUnsupported { rank: 1 })
        ));
    }

    #[test]
    fn parity_examples() {
        assert_eq!(validate_parity(&B020), Ok(true));
        assert_eq!(validate_parity(&ChernData::rank3(0, 2, 1)), Ok(false));
        assert_eq!(validate_parity(&ChernData::rank3(3, 5, 3)), Ok(true));
        assert_eq!(validate_parity(&ChernData::rank3(-1, 1, 0)), Ok(false));
        assert!(validate_parity(&ChernData::line_bundle(0)).is_err());
    }

    #[test]
    fn chern_data_json_is_an_array() {
        assert_eq!(serde_json::to_string(&B020).unwrap(), "[3,0,2,0]");
        let back: ChernData = serde_json::from_str("[3,0,2,0]").unwrap();
        assert_eq!(back, B020);
        assert!(serde_json::from_str::<ChernData>("[0,0,2,0]").is_err());
    }
}
