use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::scalar::{rat, Scalar};

/// Gaussian rational `re + im·i` with exact field arithmetic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussScalar {
    pub re: Scalar,
    pub im: Scalar,
}

impl GaussScalar {
    pub fn new(re: Scalar, im: Scalar) -> Self {
        GaussScalar { re, im }
    }

    pub fn from_real(re: Scalar) -> Self {
        GaussScalar { re, im: Scalar::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_real(rat(n, 1))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussScalar { re: Scalar::zero(), im: Scalar::one() }
    }

    /// Complex conjugate; an involution.
    pub fn conj(&self) -> Self {
        GaussScalar { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `z · conj(z)`; has zero imaginary part and non-negative real part.
    pub fn norm_sq(&self) -> Scalar {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// The real part, provided the imaginary part vanishes.
    pub fn expect_real(&self) -> Option<Scalar> {
        self.is_real().then(|| self.re.clone())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        GaussScalar { re: &self.re * s, im: &self.im * s }
    }
}

impl fmt::Display for GaussScalar {
    /// `p/q+r/s*i` wire format; the denominators are omitted when 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.im < Scalar::zero() {
            write!(f, "{}-{}*i", self.re, -self.im.clone())
        } else {
            write!(f, "{}+{}*i", self.re, self.im)
        }
    }
}

impl Add for GaussScalar {
    type Output = GaussScalar;
    fn add(self, rhs: GaussScalar) -> GaussScalar {
        GaussScalar { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl<'a> Add<&'a GaussScalar> for GaussScalar {
    type Output = GaussScalar;
    fn add(self, rhs: &'a GaussScalar) -> GaussScalar {
        GaussScalar { re: self.re + &rhs.re, im: self.im + &rhs.im }
    }
}

impl AddAssign for GaussScalar {
    fn add_assign(&mut self, rhs: GaussScalar) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl<'a> AddAssign<&'a GaussScalar> for GaussScalar {
    fn add_assign(&mut self, rhs: &'a GaussScalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Sub for GaussScalar {
    type Output = GaussScalar;
    fn sub(self, rhs: GaussScalar) -> GaussScalar {
        GaussScalar { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl SubAssign for GaussScalar {
    fn sub_assign(&mut self, rhs: GaussScalar) {
        self.re -= rhs.re;
        self.im -= rhs.im;
    }
}

impl Neg for GaussScalar {
    type Output = GaussScalar;
    fn neg(self) -> GaussScalar {
        GaussScalar { re: -self.re, im: -self.im }
    }
}

impl Mul for GaussScalar {
    type Output = GaussScalar;
    fn mul(self, rhs: GaussScalar) -> GaussScalar {
        (&self).mul(&rhs)
    }
}

impl<'a, 'b> Mul<&'b GaussScalar> for &'a GaussScalar {
    type Output = GaussScalar;
    fn mul(self, rhs: &'b GaussScalar) -> GaussScalar {
        GaussScalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl MulAssign for GaussScalar {
    fn mul_assign(&mut self, rhs: GaussScalar) {
        *self = (&*self).mul(&rhs);
    }
}

impl Div for GaussScalar {
    type Output = GaussScalar;
    fn div(self, rhs: GaussScalar) -> GaussScalar {
        let n = rhs.norm_sq();
        assert!(!n.is_zero(), "division by zero GaussScalar");
        let conj = rhs.conj();
        let prod = (&self).mul(&conj);
        GaussScalar { re: prod.re / &n, im: prod.im / &n }
    }
}

impl Zero for GaussScalar {
    fn zero() -> Self {
        GaussScalar { re: Scalar::zero(), im: Scalar::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussScalar {
    fn one() -> Self {
        GaussScalar { re: Scalar::one(), im: Scalar::zero() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64, c: i64, d: i64) -> GaussScalar {
        GaussScalar::new(rat(a, b), rat(c, d))
    }

    #[test]
    fn field_arithmetic() {
        let z = g(1, 2, -3, 1);
        let w = g(2, 3, 1, 5);
        let q = (&z).mul(&w);
        assert_eq!(q, z.clone() * w.clone());
        // (z*w)/w = z
        assert_eq!(q / w, z);
    }

    #[test]
    fn display_format() {
        assert_eq!(g(1, 2, 3, 4).to_string(), "1/2+3/4*i");
        assert_eq!(g(1, 2, -3, 1).to_string(), "1/2-3*i");
        assert_eq!(g(-2, 1, 0, 1).to_string(), "-2");
    }

    #[test]
    fn i_squared() {
        assert_eq!(GaussScalar::i() * GaussScalar::i(), GaussScalar::from_int(-1));
    }
}
