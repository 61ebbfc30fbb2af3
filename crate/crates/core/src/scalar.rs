//! Coefficient fields.
//!
//! Everything that does linear algebra or polynomial arithmetic is generic
//! over [`Scalar`]. Two families implement it: exact rationals
//! ([`Rational`]) and prime fields [`Fp<P>`] with a compile-time modulus.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, ToPrimitive, Zero};

/// Exact rational numbers.
pub type Rational = BigRational;

/// A field usable as coefficient ring for polynomials and sparse matrices.
pub trait Scalar:
    Num + Neg<Output = Self> + Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// Whether arithmetic in this field reflects characteristic zero exactly.
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;

    /// Image of a rational number; `None` when the denominator is not invertible.
    fn from_rational(q: &Rational) -> Option<Self>;

    /// The characteristic, 0 for the rationals.
    fn characteristic() -> u64;

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }

    /// Integer value, if the element is (the image of) a small integer.
    /// Prime-field elements use the symmetric representative.
    fn to_integer(&self) -> Option<i64>;
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn to_integer(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    fn from_rational(q: &Rational) -> Option<Self> {
        Some(q.clone())
    }

    fn characteristic() -> u64 {
        0
    }
}

/// Integers modulo the prime `P` (which must be below 2^31).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub const MODULUS: u64 = P;

    pub fn new(v: u64) -> Self {
        Fp(v % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P - rhs.0 })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(self.0 * rhs.0 % P)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        assert!(rhs.0 != 0, "division by zero in F_{P}");
        self * rhs.pow(P - 2)
    }
}

impl<const P: u64> Rem for Fp<P> {
    type Output = Self;
    fn rem(self, _rhs: Self) -> Self {
        Fp(0)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1)
    }
}

impl<const P: u64> Num for Fp<P> {
    type FromStrRadixErr = std::num::ParseIntError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        i64::from_str_radix(s, radix).map(<Self as Scalar>::from_i64)
    }
}

impl<const P: u64> Scalar for Fp<P> {
    const EXACT: bool = false;

    fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    fn from_rational(q: &Rational) -> Option<Self> {
        let p = BigInt::from(P);
        let num = q.numer().mod_floor(&p).to_u64()?;
        let den = q.denom().mod_floor(&p).to_u64()?;
        if den == 0 {
            return None;
        }
        Some(Fp(num) / Fp(den))
    }

    fn characteristic() -> u64 {
        P
    }

    fn to_integer(&self) -> Option<i64> {
        Some(if self.0 > P / 2 { self.0 as i64 - P as i64 } else { self.0 as i64 })
    }
}

/// Fixed public list of word-size primes used by modular rank computations.
pub const PRIMES: [u64; 8] = [
    2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549, 2147483543, 2147483497,
];

/// A computation that can be run over any coefficient field.
pub trait FieldTask {
    type Output;
    fn run<F: Scalar>(&self) -> Self::Output;
}

/// Runs `task` over `F_p` for `p = PRIMES[index % PRIMES.len()]`.
pub fn run_mod_prime<T: FieldTask>(task: &T, index: usize) -> T::Output {
    match index % PRIMES.len() {
        0 => task.run::<Fp<{ PRIMES[0] }>>(),
        1 => task.run::<Fp<{ PRIMES[1] }>>(),
        2 => task.run::<Fp<{ PRIMES[2] }>>(),
        3 => task.run::<Fp<{ PRIMES[3] }>>(),
        4 => task.run::<Fp<{ PRIMES[4] }>>(),
        5 => task.run::<Fp<{ PRIMES[5] }>>(),
        6 => task.run::<Fp<{ PRIMES[6] }>>(),
        _ => task.run::<Fp<{ PRIMES[7] }>>(),
    }
}

/// Exact rational run of `task`.
pub fn run_exact<T: FieldTask>(task: &T) -> T::Output {
    task.run::<Rational>()
}
