//! Truncated Taylor series with fixed capacity.
//!
//! A [`Series`] holds the coefficients `a₀, a₁, …, a_{n-1}` of
//! `a₀ + a₁δ + a₂δ² + …` about some base point. Binary operations truncate
//! to the shorter operand, so every result is exact up to the order at which
//! both inputs are known. Constants carry full capacity and never shorten a
//! result.

use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// Maximum number of stored coefficients (order `MAX_TERMS - 1`).
pub const MAX_TERMS: usize = 24;

/// A truncated power series in one variable.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Series {
    c: [f64; MAX_TERMS],
    len: usize,
}

impl Default for Series {
    fn default() -> Self {
        Series::constant(0.0)
    }
}

impl Series {
    /// The constant `x`, known to every order.
    pub const fn constant(x: f64) -> Self {
        let mut c = [0.0; MAX_TERMS];
        c[0] = x;
        Series { c, len: MAX_TERMS }
    }

    /// The identity series `x0 + δ`, known through `order`.
    pub fn variable(x0: f64, order: usize) -> Self {
        let mut s = Series::zeros(order + 1);
        s.c[0] = x0;
        if s.len > 1 {
            s.c[1] = 1.0;
        }
        s
    }

    /// The zero series with `len` known coefficients.
    pub fn zeros(len: usize) -> Self {
        Series {
            c: [0.0; MAX_TERMS],
            len: len.clamp(1, MAX_TERMS),
        }
    }

    /// Series from coefficients (extra entries beyond capacity are dropped).
    pub fn from_coeffs(coeffs: &[f64]) -> Self {
        let mut s = Series::zeros(coeffs.len());
        for (dst, src) in s.c.iter_mut().zip(coeffs) {
            *dst = *src;
        }
        s
    }

    /// Series from derivative values `f(x0), f'(x0), f''(x0), …`.
    pub fn from_derivatives(derivs: &[f64]) -> Self {
        let mut s = Series::from_coeffs(derivs);
        let mut fact = 1.0;
        for k in 1..s.len {
            fact *= k as f64;
            s.c[k] /= fact;
        }
        s
    }

    /// Number of known coefficients.
    pub fn len(&self) -> usize {
        self.len
    }

    /// Always false; a series knows at least its constant term.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Highest known order.
    pub fn order(&self) -> usize {
        self.len - 1
    }

    /// Known coefficients.
    pub fn coeffs(&self) -> &[f64] {
        &self.c[..self.len]
    }

    /// Coefficient of `δᵏ`, zero beyond the known range.
    pub fn coeff(&self, k: usize) -> f64 {
        if k < self.len {
            self.c[k]
        } else {
            0.0
        }
    }

    /// Overwrites the coefficient of `δᵏ`; ignored beyond the known range.
    pub fn set_coeff(&mut self, k: usize, x: f64) {
        if k < self.len {
            self.c[k] = x;
        }
    }

    /// Constant term.
    pub fn value(&self) -> f64 {
        self.c[0]
    }

    /// `k`-th derivative at the base point, `k! a_k`.
    pub fn derivative_at(&self, k: usize) -> f64 {
        let mut f = self.coeff(k);
        for i in 2..=k {
            f *= i as f64;
        }
        f
    }

    /// Keeps only the first `len` coefficients.
    pub fn truncate(mut self, len: usize) -> Self {
        let len = len.clamp(1, self.len);
        for x in &mut self.c[len..] {
            *x = 0.0;
        }
        self.len = len;
        self
    }

    /// Multiplies every coefficient by `k`.
    pub fn scale(mut self, k: f64) -> Self {
        for x in &mut self.c[..self.len] {
            *x *= k;
        }
        self
    }

    /// Term-by-term derivative; one order is lost.
    pub fn derivative(&self) -> Self {
        let mut d = Series::zeros(self.len.saturating_sub(1).max(1));
        for k in 1..self.len {
            d.c[k - 1] = k as f64 * self.c[k];
        }
        d
    }

    /// Antiderivative vanishing at the base point; one order is gained
    /// while capacity allows.
    pub fn integral(&self) -> Self {
        let mut s = Series::zeros((self.len + 1).min(MAX_TERMS));
        for k in 1..s.len {
            s.c[k] = self.c[k - 1] / k as f64;
        }
        s
    }

    /// Evaluates the truncated polynomial at offset `dx`.
    pub fn eval(&self, dx: f64) -> f64 {
        self.c[..self.len].iter().rev().fold(0.0, |acc, &a| acc * dx + a)
    }

    /// Re-expands about `base + dx`.
    pub fn shift(&self, dx: f64) -> Self {
        let mut s = *self;
        let n = s.len;
        for i in 0..n.saturating_sub(1) {
            for k in (i..n - 1).rev() {
                s.c[k] += dx * s.c[k + 1];
            }
        }
        s
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn recip(&self) -> Self {
        Series::constant(1.0) / *self
    }

    /// Square root; the constant term must be positive.
    pub fn sqrt(&self) -> Self {
        let mut b = Series::zeros(self.len);
        let b0 = libm::sqrt(self.c[0]);
        b.c[0] = b0;
        for k in 1..self.len {
            let mut acc = self.c[k];
            for i in 1..k {
                acc -= b.c[i] * b.c[k - i];
            }
            b.c[k] = acc / (2.0 * b0);
        }
        b
    }

    /// Sine and cosine together.
    pub fn sin_cos(&self) -> (Self, Self) {
        let mut s = Series::zeros(self.len);
        let mut c = Series::zeros(self.len);
        s.c[0] = libm::sin(self.c[0]);
        c.c[0] = libm::cos(self.c[0]);
        for k in 1..self.len {
            let (mut ss, mut cc) = (0.0, 0.0);
            for j in 1..=k {
                let ja = j as f64 * self.c[j];
                ss += ja * c.c[k - j];
                cc -= ja * s.c[k - j];
            }
            s.c[k] = ss / k as f64;
            c.c[k] = cc / k as f64;
        }
        (s, c)
    }

    /// Sine.
    pub fn sin(&self) -> Self {
        self.sin_cos().0
    }

    /// Cosine.
    pub fn cos(&self) -> Self {
        self.sin_cos().1
    }

    /// Exponential.
    pub fn exp(&self) -> Self {
        let mut e = Series::zeros(self.len);
        e.c[0] = libm::exp(self.c[0]);
        for k in 1..self.len {
            let mut acc = 0.0;
            for j in 1..=k {
                acc += j as f64 * self.c[j] * e.c[k - j];
            }
            e.c[k] = acc / k as f64;
        }
        e
    }

    /// Integer power by repeated squaring.
    pub fn powi(&self, n: u32) -> Self {
        let mut result = Series::constant(1.0);
        let mut base = *self;
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result * base;
            }
            base = base * base;
            n >>= 1;
        }
        result
    }

    /// Composition `self(inner)`: `self` is expanded about `inner`'s constant
    /// term.
    pub fn compose(&self, inner: &Series) -> Self {
        let outer = self.shift(inner.c[0]);
        let mut d = *inner;
        d.c[0] = 0.0;
        let n = outer.len.min(d.len);
        let mut acc = Series::constant(outer.c[n - 1]).truncate(n);
        for k in (0..n - 1).rev() {
            acc = acc * d;
            acc.c[0] += outer.c[k];
        }
        acc.truncate(n)
    }

    /// Compositional inverse of `self − a₀`: returns `b` with `b(0) = 0` and
    /// `(self − a₀)(b(x)) = x`. The linear coefficient must be nonzero.
    pub fn revert(&self) -> Self {
        let n = self.len;
        let mut a = *self;
        a.c[0] = 0.0;
        let a1 = a.c[1];
        let mut b = Series::zeros(n);
        if n > 1 {
            b.c[1] = 1.0 / a1;
        }
        for k in 2..n {
            let c = a.compose(&b).c[k];
            b.c[k] = -c / a1;
        }
        b
    }
}

impl Add for Series {
    type Output = Series;
    fn add(self, rhs: Series) -> Series {
        let len = self.len.min(rhs.len);
        let mut out = Series::zeros(len);
        for k in 0..len {
            out.c[k] = self.c[k] + rhs.c[k];
        }
        out
    }
}

impl Sub for Series {
    type Output = Series;
    fn sub(self, rhs: Series) -> Series {
        self + (-rhs)
    }
}

impl Neg for Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.scale(-1.0)
    }
}

impl Mul for Series {
    type Output = Series;
    fn mul(self, rhs: Series) -> Series {
        let len = self.len.min(rhs.len);
        let mut out = Series::zeros(len);
        // Skip leading zeros of the longer factor cheaply: constants are common.
        let na = last_nonzero(&self.c[..len]);
        let nb = last_nonzero(&rhs.c[..len]);
        for i in 0..na {
            let ai = self.c[i];
            if ai == 0.0 {
                continue;
            }
            for j in 0..nb.min(len - i) {
                out.c[i + j] += ai * rhs.c[j];
            }
        }
        out
    }
}

fn last_nonzero(c: &[f64]) -> usize {
    c.iter().rposition(|&x| x != 0.0).map_or(0, |i| i + 1)
}

impl Div for Series {
    type Output = Series;
    fn div(self, rhs: Series) -> Series {
        let len = self.len.min(rhs.len);
        let mut q = Series::zeros(len);
        let b0 = rhs.c[0];
        for k in 0..len {
            let mut acc = self.c[k];
            for i in 1..=k {
                acc -= rhs.c[i] * q.c[k - i];
            }
            q.c[k] = acc / b0;
        }
        q
    }
}

impl Add<f64> for Series {
    type Output = Series;
    fn add(mut self, rhs: f64) -> Series {
        self.c[0] += rhs;
        self
    }
}

impl Sub<f64> for Series {
    type Output = Series;
    fn sub(mut self, rhs: f64) -> Series {
        self.c[0] -= rhs;
        self
    }
}

impl Mul<f64> for Series {
    type Output = Series;
    fn mul(self, rhs: f64) -> Series {
        self.scale(rhs)
    }
}

impl AddAssign for Series {
    fn add_assign(&mut self, rhs: Series) {
        *self = *self + rhs;
    }
}

impl SubAssign for Series {
    fn sub_assign(&mut self, rhs: Series) {
        *self = *self - rhs;
    }
}

impl MulAssign for Series {
    fn mul_assign(&mut self, rhs: Series) {
        *self = *self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + b.abs())
    }

    #[test]
    fn product_of_geometric_series() {
        // 1/(1-x) squared is Σ (k+1) x^k
        let g = Series::from_coeffs(&[1.0; 10]);
        let p = g * g;
        for k in 0..10 {
            assert_eq!(p.coeff(k), (k + 1) as f64);
        }
        assert_eq!(p.len(), 10);
    }

    #[test]
    fn constants_do_not_truncate() {
        let x = Series::variable(0.5, 6);
        let y = x * Series::constant(3.0) + Series::constant(1.0);
        assert_eq!(y.len(), 7);
        assert_eq!(y.coeffs()[..2], [2.5, 3.0]);
    }

    #[test]
    fn sin_cos_match_taylor_coefficients() {
        let x = Series::variable(0.3, 9);
        let (s, c) = x.sin_cos();
        let mut fact = 1.0;
        for k in 0..10 {
            if k > 0 {
                fact *= k as f64;
            }
            // k-th derivative of sin at 0.3 is sin(0.3 + kπ/2)
            let ds = (0.3 + k as f64 * core::f64::consts::FRAC_PI_2).sin();
            let dc = (0.3 + k as f64 * core::f64::consts::FRAC_PI_2).cos();
            assert!(close(s.coeff(k), ds / fact, 1e-15));
            assert!(close(c.coeff(k), dc / fact, 1e-15));
        }
    }

    #[test]
    fn sqrt_squares_back() {
        let a = Series::from_coeffs(&[4.0, 1.0, -2.0, 0.5, 3.0, 0.0, 1.0]);
        let r = a.sqrt();
        let back = r * r;
        for k in 0..7 {
            assert!(close(back.coeff(k), a.coeff(k), 1e-14));
        }
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = Series::from_coeffs(&[1.0, 2.0, 3.0, 4.0, 5.0]);
        let b = Series::from_coeffs(&[2.0, -1.0, 0.5, 0.0, 1.0]);
        let q = (a * b) / b;
        for k in 0..5 {
            assert!(close(q.coeff(k), a.coeff(k), 1e-14));
        }
    }

    #[test]
    fn exp_of_log_series() {
        // exp(log(1+x)) = 1 + x with log(1+x) = Σ (-1)^{k+1} x^k / k
        let mut l = [0.0; 12];
        for (k, c) in l.iter_mut().enumerate().skip(1) {
            *c = if k % 2 == 1 { 1.0 } else { -1.0 } / k as f64;
        }
        let e = Series::from_coeffs(&l).exp();
        assert!(close(e.coeff(0), 1.0, 1e-15));
        assert!(close(e.coeff(1), 1.0, 1e-15));
        for k in 2..12 {
            assert!(e.coeff(k).abs() < 1e-14);
        }
    }

    #[test]
    fn shift_reexpands_polynomial() {
        // p(x) = 1 + 2x + 3x^2 about 0, re-expanded about 2: p(2+d) = 17 + 14d + 3d^2
        let p = Series::from_coeffs(&[1.0, 2.0, 3.0]);
        let q = p.shift(2.0);
        assert_eq!(q.coeffs(), &[17.0, 14.0, 3.0]);
    }

    #[test]
    fn revert_of_sine_is_arcsine() {
        let x = Series::variable(0.0, 9);
        let asin = x.sin().revert();
        // arcsin x = x + x^3/6 + 3x^5/40 + 5x^7/112 + 35x^9/1152
        let expect = [0.0, 1.0, 0.0, 1.0 / 6.0, 0.0, 3.0 / 40.0, 0.0, 5.0 / 112.0, 0.0, 35.0 / 1152.0];
        for (k, e) in expect.iter().enumerate() {
            assert!(close(asin.coeff(k), *e, 1e-13), "k={k}");
        }
    }

    #[test]
    fn compose_with_inner_constant() {
        // p(q(x)) for polynomials, checked pointwise
        let p = Series::from_coeffs(&[1.0, -2.0, 0.5, 3.0, 0.0, 0.0, 0.0, 0.0]);
        let q = Series::from_coeffs(&[0.5, 1.0, -1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let c = p.compose(&q);
        for x in [-0.3, 0.0, 0.1, 0.4] {
            assert!(close(c.eval(x), p.eval(q.eval(x)), 1e-14));
        }
    }

    #[test]
    fn derivative_and_integral_are_inverse() {
        let a = Series::from_coeffs(&[0.0, 1.0, -2.0, 0.25, 7.0]);
        let b = a.derivative().integral();
        assert_eq!(b.coeffs(), a.coeffs());
        assert_eq!(a.derivative_at(3), 6.0 * 0.25);
    }
}
