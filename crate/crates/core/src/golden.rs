//! Exact arithmetic in `Z[ε]`, `ε² = ε + 1`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `a + b·ε`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GoldenInt {
    pub a: BigInt,
    pub b: BigInt,
}

pub const PHI: f64 = 1.618_033_988_749_895;

impl GoldenInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        GoldenInt { a: a.into(), b: b.into() }
    }

    pub fn zero() -> Self {
        GoldenInt::new(0, 0)
    }

    pub fn one() -> Self {
        GoldenInt::new(1, 0)
    }

    pub fn epsilon() -> Self {
        GoldenInt::new(0, 1)
    }

    /// `ε⁻¹ = ε − 1`.
    pub fn epsilon_inverse() -> Self {
        GoldenInt::new(-1, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * PHI
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = GoldenInt::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplication by `±1`.
    pub fn signed(self, negative: bool) -> Self {
        if negative {
            -self
        } else {
            self
        }
    }
}

/// Exact `ε^k` for any integer `k`.
pub fn epsilon_power(k: i64) -> GoldenInt {
    if k >= 0 {
        GoldenInt::epsilon().pow(k as u64)
    } else {
        GoldenInt::epsilon_inverse().pow(k.unsigned_abs())
    }
}

impl fmt::Display for GoldenInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let sign = if self.b.is_negative() { '-' } else { '+' };
        let mag = self.b.abs();
        let coeff = if mag.is_one() { String::new() } else { format!("{mag}*") };
        if self.a.is_zero() {
            let lead = if self.b.is_negative() { "-" } else { "" };
            write!(f, "{lead}{coeff}eps")
        } else {
            write!(f, "{} {sign} {coeff}eps", self.a)
        }
    }
}

impl<'a> Add<&'a GoldenInt> for &'a GoldenInt {
    type Output = GoldenInt;
    fn add(self, o: &GoldenInt) -> GoldenInt {
        GoldenInt { a: &self.a + &o.a, b: &self.b + &o.b }
    }
}

impl Add for GoldenInt {
    type Output = GoldenInt;
    fn add(self, o: GoldenInt) -> GoldenInt {
        &self + &o
    }
}

impl AddAssign<&GoldenInt> for GoldenInt {
    fn add_assign(&mut self, o: &GoldenInt) {
        self.a += &o.a;
        self.b += &o.b;
    }
}

impl<'a> Sub<&'a GoldenInt> for &'a GoldenInt {
    type Output = GoldenInt;
    fn sub(self, o: &GoldenInt) -> GoldenInt {
        GoldenInt { a: &self.a - &o.a, b: &self.b - &o.b }
    }
}

impl Sub for GoldenInt {
    type Output = GoldenInt;
    fn sub(self, o: GoldenInt) -> GoldenInt {
        &self - &o
    }
}

impl<'a> Mul<&'a GoldenInt> for &'a GoldenInt {
    type Output = GoldenInt;
    // (a + bε)(c + dε) = ac + (ad + bc)ε + bdε², with ε² = ε + 1
    fn mul(self, o: &GoldenInt) -> GoldenInt {
        let bd = &self.b * &o.b;
        GoldenInt {
            a: &self.a * &o.a + &bd,
            b: &self.a * &o.b + &self.b * &o.a + bd,
        }
    }
}

impl Mul for GoldenInt {
    type Output = GoldenInt;
    fn mul(self, o: GoldenInt) -> GoldenInt {
        &self * &o
    }
}

impl Neg for GoldenInt {
    type Output = GoldenInt;
    fn neg(self) -> GoldenInt {
        GoldenInt { a: -self.a, b: -self.b }
    }
}

impl std::iter::Sum for GoldenInt {
    fn sum<I: Iterator<Item = GoldenInt>>(iter: I) -> Self {
        iter.fold(GoldenInt::zero(), |acc, x| acc + x)
    }
}
