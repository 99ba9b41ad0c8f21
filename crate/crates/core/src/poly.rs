//! Dense univariate polynomials over an exact field, with just enough
//! machinery (division, gcd, square-free factorisation, Sturm chains) to
//! count real roots exactly.

use crate::scalar::Scalar;

/// Coefficients ascending; no trailing zeros, so the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn one() -> Self {
        Poly::new(vec![T::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn lead(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, a| acc * x.clone() + a.clone())
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a.clone() * T::from_int(k as i64))
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &Self, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(T::zero);
        Poly::new((0..n).map(|i| get(self, i) - get(rhs, i)).collect())
    }

    pub fn neg(&self) -> Self {
        Poly::new(self.coeffs.iter().map(|a| -a.clone()).collect())
    }

    pub fn monic(&self) -> Self {
        let l = self.lead();
        Poly::new(self.coeffs.iter().map(|a| a.clone() / l.clone()).collect())
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); self.coeffs.len().saturating_sub(dd)];
        let lead = divisor.lead();
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let f = rem.last().unwrap().clone() / lead.clone();
            for (i, b) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = rem[shift + i].clone() - f.clone() * b.clone();
            }
            quot[shift] = f;
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Yun's square-free factorisation: `self = lead · Π factors[i]^(i+1)`,
    /// each factor square-free and pairwise coprime.
    pub fn squarefree_factors(&self) -> Vec<Self> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        if deg == 0 {
            return Vec::new();
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_rem(&a0).0;
        let mut c = df.div_rem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut out = Vec::new();
        while b.degree().is_some_and(|k| k > 0) {
            let a = b.gcd(&d);
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            d = c.sub(&b.derivative());
            out.push(a);
        }
        out
    }

    /// Product of the square-free factors of odd multiplicity: its roots are
    /// exactly the real (and complex) roots where `self` changes sign.
    pub fn odd_multiplicity_part(&self) -> Self {
        self.squarefree_factors()
            .into_iter()
            .enumerate()
            .filter(|(i, _)| i % 2 == 0)
            .fold(Poly::one(), |acc, (_, f)| acc.mul(&f))
    }

    /// Square-free part (all distinct roots, multiplicity one).
    pub fn radical(&self) -> Self {
        self.squarefree_factors().into_iter().fold(Poly::one(), |acc, f| acc.mul(&f))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::new(Vec::new());
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }

    fn sign_at_neg_infinity(&self) -> i32 {
        match self.degree() {
            None => 0,
            Some(k) => {
                let s = self.lead().signum();
                if k % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }
    }

    /// Real-root counting for a polynomial via its Sturm chain.
    pub fn sturm(&self) -> SturmChain<T> {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].div_rem(&chain[n - 1]).1;
            if r.is_zero() {
                break;
            }
            chain.push(r.neg());
        }
        SturmChain { chain }
    }
}

pub struct SturmChain<T> {
    chain: Vec<Poly<T>>,
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

impl<T: Scalar> SturmChain<T> {
    fn variations_at(&self, x: &T) -> usize {
        variations(self.chain.iter().map(|p| p.eval(x).signum()))
    }

    fn variations_at_neg_infinity(&self) -> usize {
        variations(self.chain.iter().map(|p| p.sign_at_neg_infinity()))
    }

    fn variations_at_pos_infinity(&self) -> usize {
        variations(self.chain.iter().map(|p| p.lead().signum()))
    }

    /// Number of distinct real roots in `(-∞, x]`.
    pub fn roots_at_most(&self, x: &T) -> usize {
        self.variations_at_neg_infinity() - self.variations_at(x)
    }

    /// Number of distinct real roots strictly below `x`.
    pub fn roots_below(&self, x: &T) -> usize {
        let at = usize::from(self.chain[0].eval(x).is_zero());
        self.roots_at_most(x) - at
    }

    pub fn real_roots(&self) -> usize {
        self.variations_at_neg_infinity() - self.variations_at_pos_infinity()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn p(c: &[i64]) -> Poly<Q> {
        Poly::new(c.iter().map(|&x| Q::from_int(x)).collect())
    }

    /// Π (x − r) over integer roots.
    fn from_roots(roots: &[i64]) -> Poly<Q> {
        roots.iter().fold(Poly::one(), |acc, &r| acc.mul(&p(&[-r, 1])))
    }

    #[test]
    fn division_round_trips() {
        let a = p(&[1, 2, 3, 4, 5]);
        let b = p(&[2, 0, 1]);
        let (q, r) = a.div_rem(&b);
        assert!(r.degree().unwrap_or(0) < 2);
        let back = q.mul(&b).sub(&r.neg());
        assert_eq!(back, a);
    }

    #[test]
    fn gcd_of_shared_factor() {
        let a = from_roots(&[1, 2, 3]);
        let b = from_roots(&[2, 3, 7]);
        assert_eq!(a.gcd(&b), from_roots(&[2, 3]));
    }

    #[test]
    fn yun_separates_multiplicities() {
        let f = from_roots(&[1, 2, 2, 3, 3, 3]).mul(&p(&[5]));
        let fs = f.squarefree_factors();
        assert_eq!(fs, vec![from_roots(&[1]), from_roots(&[2]), from_roots(&[3])]);
        assert_eq!(f.odd_multiplicity_part(), from_roots(&[1, 3]));
        assert_eq!(f.radical(), from_roots(&[1, 2, 3]));
    }

    #[test]
    fn sturm_counts() {
        // x² − 5 has roots ±√5
        let s = p(&[-5, 0, 1]).sturm();
        assert_eq!(s.real_roots(), 2);
        assert_eq!(s.roots_below(&Q::from_int(0)), 1);
        assert_eq!(s.roots_below(&Q::from_int(3)), 2);
        assert_eq!(s.roots_below(&Q::from_int(-3)), 0);

        let t = from_roots(&[-2, 0, 4]).sturm();
        assert_eq!(t.roots_below(&Q::from_int(0)), 1);
        assert_eq!(t.roots_at_most(&Q::from_int(0)), 2);
        assert_eq!(t.real_roots(), 3);

        // x² + 1: no real roots
        assert_eq!(p(&[1, 0, 1]).sturm().real_roots(), 0);
    }

    #[test]
    fn close_irrational_roots_are_separated() {
        // 100x² − 100x + 24 = 4(5x−2)(5x−3)... roots 0.4, 0.6 both in (0, 1)
        let s = p(&[24, -100, 100]).sturm();
        assert_eq!(s.roots_below(&Q::from_int(1)), 2);
        assert_eq!(s.roots_below(&Q::frac(1, 2)), 1);
    }
}
