//! Complex scalar fields used by every series and solver.
//!
//! Two implementations are provided: hardware double precision
//! (`Complex64`) and an MPFR-backed arbitrary precision type (`Big`).
//! The working precision of `Big` is a per-thread setting; use
//! [`with_precision`] to scope it.

use num_complex::Complex64;
use rug::float::Constant;
use rug::{Complex, Float};
use std::cell::Cell;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

pub trait Scalar:
    Clone
    + fmt::Debug
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
    + for<'a> DivAssign<&'a Self>
{
    /// True for the arbitrary precision backend.
    const EXTENDED: bool;

    fn from_c64(z: Complex64) -> Self;
    fn to_c64(&self) -> Complex64;
    fn from_i64(n: i64) -> Self;
    fn pi() -> Self;
    /// Modulus, rounded to `f64`.
    fn abs(&self) -> f64;
    fn exp(&self) -> Self;
    /// Principal branch.
    fn ln(&self) -> Self;
    /// Principal branch.
    fn sqrt(&self) -> Self;

    fn from_f64(x: f64) -> Self {
        Self::from_c64(Complex64::new(x, 0.0))
    }

    fn ratio(p: i64, q: i64) -> Self {
        Self::from_i64(p) / Self::from_i64(q)
    }

    fn zero() -> Self {
        Self::from_i64(0)
    }

    fn one() -> Self {
        Self::from_i64(1)
    }

    fn i() -> Self {
        Self::from_c64(Complex64::i())
    }

    /// Principal power `self^e = exp(e ln self)`.
    fn powc(&self, e: &Self) -> Self {
        (self.ln() * e).exp()
    }

    fn powi(&self, n: i64) -> Self {
        let mut base = if n < 0 { Self::one() / self } else { self.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc *= &base;
            }
            base = base.clone() * &base;
            k >>= 1;
        }
        acc
    }

    /// `e^{2 pi i t}`.
    fn cis_turns(t: &Self) -> Self {
        (Self::pi() * Self::i() * Self::from_i64(2) * t).exp()
    }

    /// `e^{2 pi i p/q}`.
    fn root_of_unity(p: i64, q: i64) -> Self {
        Self::cis_turns(&Self::ratio(p, q))
    }

    fn mul_i64(&self, n: i64) -> Self {
        self.clone() * Self::from_i64(n)
    }

    fn is_zero(&self) -> bool {
        self.abs() == 0.0
    }
}

impl Scalar for Complex64 {
    const EXTENDED: bool = false;

    fn from_c64(z: Complex64) -> Self {
        z
    }
    fn to_c64(&self) -> Complex64 {
        *self
    }
    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn pi() -> Self {
        Complex64::new(std::f64::consts::PI, 0.0)
    }
    fn abs(&self) -> f64 {
        self.norm()
    }
    fn exp(&self) -> Self {
        Complex64::exp(*self)
    }
    fn ln(&self) -> Self {
        Complex64::ln(*self)
    }
    fn sqrt(&self) -> Self {
        Complex64::sqrt(*self)
    }
}

thread_local! {
    static PRECISION: Cell<u32> = const { Cell::new(256) };
}

/// Current working precision (bits) for [`Big`] on this thread.
pub fn precision() -> u32 {
    PRECISION.with(|p| p.get())
}

/// Runs `f` with the [`Big`] working precision set to `bits`, restoring the
/// previous value afterwards.
pub fn with_precision<R>(bits: u32, f: impl FnOnce() -> R) -> R {
    struct Restore(u32);
    impl Drop for Restore {
        fn drop(&mut self) {
            PRECISION.with(|p| p.set(self.0));
        }
    }
    let _guard = Restore(PRECISION.with(|p| p.replace(bits.max(64))));
    f()
}

/// Precision that keeps about ten significant digits after composing a
/// hauptmodul into a Frobenius series truncated at `order`.
pub fn bits_for_order(order: usize) -> u32 {
    128 + 16 * order as u32
}

/// Arbitrary precision complex number.
#[derive(Clone)]
pub struct Big(pub Complex);

impl fmt::Debug for Big {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let z = self.to_c64();
        write!(f, "Big({}{:+}i @{})", z.re, z.im, self.0.prec().0)
    }
}

impl Big {
    fn wrap<T>(v: T) -> Big
    where
        Complex: rug::Assign<T>,
    {
        Big(Complex::with_val(precision(), v))
    }
}

macro_rules! big_binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident) => {
        impl $tr<Big> for Big {
            type Output = Big;
            fn $m(self, rhs: Big) -> Big {
                Big::wrap($tr::$m(&self.0, &rhs.0))
            }
        }
        impl<'a> $tr<&'a Big> for Big {
            type Output = Big;
            fn $m(self, rhs: &'a Big) -> Big {
                Big::wrap($tr::$m(&self.0, &rhs.0))
            }
        }
        impl $atr<Big> for Big {
            fn $am(&mut self, rhs: Big) {
                *self = Big::wrap($tr::$m(&self.0, &rhs.0));
            }
        }
        impl<'a> $atr<&'a Big> for Big {
            fn $am(&mut self, rhs: &'a Big) {
                *self = Big::wrap($tr::$m(&self.0, &rhs.0));
            }
        }
    };
}

big_binop!(Add, add, AddAssign, add_assign);
big_binop!(Sub, sub, SubAssign, sub_assign);
big_binop!(Mul, mul, MulAssign, mul_assign);
big_binop!(Div, div, DivAssign, div_assign);

impl Neg for Big {
    type Output = Big;
    fn neg(self) -> Big {
        Big(-self.0)
    }
}

impl Scalar for Big {
    const EXTENDED: bool = true;

    fn from_c64(z: Complex64) -> Self {
        Big::wrap((z.re, z.im))
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.0.real().to_f64(), self.0.imag().to_f64())
    }
    fn from_i64(n: i64) -> Self {
        Big::wrap((n, 0))
    }
    fn pi() -> Self {
        let pi = Float::with_val(precision(), Constant::Pi);
        Big::wrap((pi, 0))
    }
    fn abs(&self) -> f64 {
        Float::with_val(precision(), self.0.abs_ref()).to_f64()
    }
    fn exp(&self) -> Self {
        Big::wrap(self.0.exp_ref())
    }
    fn ln(&self) -> Self {
        Big::wrap(self.0.ln_ref())
    }
    fn sqrt(&self) -> Self {
        Big::wrap(self.0.sqrt_ref())
    }
}

/// Snaps `z` to the nearest integer when it lies within `tol` of one.
pub fn near_integer(z: Complex64, tol: f64) -> Option<i64> {
    let n = z.re.round();
    ((z.re - n).abs() < tol && z.im.abs() < tol).then_some(n as i64)
}

/// Primitive sixth root of unity `e^{2 pi i / 6}`.
pub fn xi<S: Scalar>() -> S {
    S::root_of_unity(1, 6)
}

/// Primitive cube root of unity `e^{2 pi i / 3}`.
pub fn zeta<S: Scalar>() -> S {
    S::root_of_unity(1, 3)
}
