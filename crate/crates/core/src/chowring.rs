//! The rational Chow ring of P³, `Q[H]/(H⁴)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::constants::Constants;
use crate::scalar::Scalar;

/// `a₀ + a₁H + a₂H² + a₃H³` with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChowClass<T> {
    coeffs: [T; 4],
}

impl<T: Scalar> ChowClass<T> {
    pub fn new(coeffs: [T; 4]) -> Self {
        ChowClass { coeffs }
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        ChowClass::new(c.map(T::from_int))
    }

    pub fn zero() -> Self {
        ChowClass::new([T::zero(), T::zero(), T::zero(), T::zero()])
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(a: T) -> Self {
        ChowClass::new([a, T::zero(), T::zero(), T::zero()])
    }

    /// The hyperplane class.
    pub fn hyperplane() -> Self {
        ChowClass::new([T::zero(), T::one(), T::zero(), T::zero()])
    }

    pub fn coeffs(&self) -> &[T; 4] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &T {
        &self.coeffs[i]
    }

    /// Integral over P³: the H³ coefficient.
    pub fn degree(&self) -> T {
        self.coeffs[3].clone()
    }

    pub fn scale(&self, s: &T) -> Self {
        ChowClass::new(self.coeffs.clone().map(|a| a * s.clone()))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl<T: Scalar> Default for ChowClass<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> fmt::Display for ChowClass<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.coeffs;
        write!(f, "({a}, {b}, {c}, {d})")
    }
}

impl<T: Scalar> Add for &ChowClass<T> {
    type Output = ChowClass<T>;
    fn add(self, rhs: Self) -> ChowClass<T> {
        let mut out = self.coeffs.clone();
        for (o, r) in out.iter_mut().zip(rhs.coeffs.iter()) {
            *o = o.clone() + r.clone();
        }
        ChowClass::new(out)
    }
}

impl<T: Scalar> Sub for &ChowClass<T> {
    type Output = ChowClass<T>;
    fn sub(self, rhs: Self) -> ChowClass<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Neg for &ChowClass<T> {
    type Output = ChowClass<T>;
    fn neg(self) -> ChowClass<T> {
        ChowClass::new(self.coeffs.clone().map(|a| -a))
    }
}

impl<T: Scalar> Mul for &ChowClass<T> {
    type Output = ChowClass<T>;
    fn mul(self, rhs: Self) -> ChowClass<T> {
        let mut out = ChowClass::<T>::zero().coeffs;
        for i in 0..4 {
            for j in 0..4 - i {
                out[i + j] = out[i + j].clone() + self.coeffs[i].clone() * rhs.coeffs[j].clone();
            }
        }
        ChowClass::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for ChowClass<T> {
            type Output = ChowClass<T>;
            fn $m(self, rhs: Self) -> ChowClass<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> Neg for ChowClass<T> {
    type Output = ChowClass<T>;
    fn neg(self) -> ChowClass<T> {
        -&self
    }
}

/// Chern character of `O(k)`: the truncated exponential of `kH`.
pub fn exp_line<T: Scalar>(k: i64) -> ChowClass<T> {
    exp_line_in(&Constants::STANDARD, k)
}

pub fn exp_line_in<T: Scalar>(c: &Constants, k: i64) -> ChowClass<T> {
    let k = T::from_int(k);
    let mut power = T::one();
    let mut out = ChowClass::<T>::zero().coeffs;
    for (slot, coef) in out.iter_mut().zip(c.exp) {
        *slot = power.clone() * coef.to::<T>();
        power = power * k.clone();
    }
    ChowClass::new(out)
}

/// `1 + 2H + (11/6)H² + H³`.
pub fn todd_p3<T: Scalar>() -> ChowClass<T> {
    todd_p3_in(&Constants::STANDARD)
}

pub fn todd_p3_in<T: Scalar>(c: &Constants) -> ChowClass<T> {
    ChowClass::new(c.todd.map(|f| f.to::<T>()))
}
