//! Univariate polynomials in `x` with arbitrary-precision rational
//! coefficients.
//!
//! Coefficients are stored densely, lowest power first, with no trailing
//! zeros, so two polynomials are equal exactly when their coefficient vectors
//! are equal.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `"num/den"` with a positive denominator.
pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ExactPolynomial {
    coeffs: Vec<Rational>,
}

impl ExactPolynomial {
    pub fn zero() -> Self {
        ExactPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `x + a` for an integer `a`.
    pub fn linear(a: i64) -> Self {
        Self::from_coeffs(vec![rational(a), Rational::one()])
    }

    /// Coefficients lowest power first.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ExactPolynomial { coeffs }
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rational(c)).collect())
    }

    /// Product of the given polynomials; the empty product is 1.
    pub fn product<'a, I>(factors: I) -> Self
    where
        I: IntoIterator<Item = &'a ExactPolynomial>,
    {
        factors
            .into_iter()
            .fold(Self::one(), |acc, f| &acc * f)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero above the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ExactPolynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    /// `q(x) = p(x + a)`, by Horner re-rooting: fold the coefficients from
    /// the top, multiplying the accumulator by `(x + a)` each step.
    pub fn shift(&self, a: &Rational) -> Self {
        let mut acc: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        for c in self.coeffs.iter().rev() {
            // acc <- acc * (x + a) + c
            acc.insert(0, Rational::zero());
            for k in 0..acc.len() - 1 {
                let carry = &acc[k + 1] * a;
                acc[k] += carry;
            }
            acc[0] += c;
        }
        Self::from_coeffs(acc)
    }

    pub fn shift_int(&self, a: i64) -> Self {
        self.shift(&rational(a))
    }

    /// Forward difference `p(x+1) - p(x)`.
    pub fn difference(&self) -> Self {
        &self.shift(&Rational::one()) - self
    }

    /// `C(x+k-1, k) = x(x+1)...(x+k-1)/k!`.
    pub fn rising_binomial(k: usize) -> Self {
        let mut p = Self::one();
        let mut fact = BigInt::one();
        for j in 0..k {
            p = &p * &Self::linear(j as i64);
            fact *= BigInt::from(j + 1);
        }
        p.scale(&Rational::new(BigInt::one(), fact))
    }

    /// Quotient of an exact division, or `None` when `divisor` is zero or
    /// leaves a nonzero remainder.
    pub fn div_exact(&self, divisor: &ExactPolynomial) -> Option<Self> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dn = self.degree()?;
        if dn < dd {
            return None;
        }
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let q = &rem[k + dd] / &lead;
            if q.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Self::from_coeffs(quot))
        } else {
            None
        }
    }

    /// Report form: `[(2,"17/1"),(1,"-38/1"),(0,"-75/1")]`, highest power
    /// first, zero coefficients omitted. The zero polynomial is `[]`.
    pub fn serialize(&self) -> String {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({k},\"{}\")", rational_to_string(c)))
            .collect();
        format!("[{}]", terms.join(","))
    }
}

/// Human form such as `17x^2-38x-75` or `(1/2)x^2+(1/2)x`.
impl fmt::Display for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if negative {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let mag = c.abs();
            let coeff = if mag.is_integer() {
                mag.numer().to_string()
            } else {
                format!("({}/{})", mag.numer(), mag.denom())
            };
            match k {
                0 => f.write_str(&coeff)?,
                _ => {
                    if !mag.is_one() {
                        f.write_str(&coeff)?;
                    }
                    f.write_str("x")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a ExactPolynomial> for &'a ExactPolynomial {
    type Output = ExactPolynomial;

    fn add(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a ExactPolynomial> for &'a ExactPolynomial {
    type Output = ExactPolynomial;

    fn sub(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&ExactPolynomial> for ExactPolynomial {
    fn add_assign(&mut self, rhs: &ExactPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        let trimmed = std::mem::take(&mut self.coeffs);
        *self = Self::from_coeffs(trimmed);
    }
}

impl SubAssign<&ExactPolynomial> for ExactPolynomial {
    fn sub_assign(&mut self, rhs: &ExactPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        let trimmed = std::mem::take(&mut self.coeffs);
        *self = Self::from_coeffs(trimmed);
    }
}

impl<'a> Mul<&'a ExactPolynomial> for &'a ExactPolynomial {
    type Output = ExactPolynomial;

    fn mul(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return ExactPolynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        ExactPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &ExactPolynomial {
    type Output = ExactPolynomial;

    fn neg(self) -> ExactPolynomial {
        ExactPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(c: &[i64]) -> ExactPolynomial {
        ExactPolynomial::from_int_coeffs(c)
    }

    fn lin(a: i64) -> ExactPolynomial {
        ExactPolynomial::linear(a)
    }

    #[test]
    fn ring_examples() {
        let x = ExactPolynomial::x();
        assert_eq!(&x * &x, poly(&[0, 0, 1]));
        assert_eq!(&lin(1) - &x, ExactPolynomial::one());
        let lhs = &ExactPolynomial::product([&lin(-4), &lin(-1), &lin(3)]) * &x;
        let rhs = ExactPolynomial::product([&lin(-5), &lin(-3), &lin(1), &lin(5)]);
        assert_eq!(&lhs - &rhs, poly(&[-75, -38, 17]));
    }

    #[test]
    fn shift_examples() {
        let x = ExactPolynomial::x();
        assert_eq!(x.shift_int(1), lin(1));
        assert_eq!((&x * &x).shift_int(1), poly(&[1, 2, 1]));
        // (x+1)(x-1)(x-3) at x+1 is (x+2)x(x-2), expanded by hand: x^3 - 4x.
        let g21 = ExactPolynomial::product([&lin(1), &lin(-1), &lin(-3)]);
        assert_eq!(g21.shift_int(1), poly(&[0, -4, 0, 1]));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(poly(&[-75, -38, 17]).eval(&rational(0)), rational(-75));
        assert_eq!(ExactPolynomial::zero().eval(&rational(7)), rational(0));
        assert_eq!(poly(&[1, 2, 1]).eval(&rational(-1)), rational(0));
    }

    #[test]
    fn difference_examples() {
        let x = ExactPolynomial::x();
        assert_eq!(x.difference(), ExactPolynomial::one());
        assert!(ExactPolynomial::constant(rational(5)).difference().is_zero());
        assert_eq!((&x * &x).difference(), poly(&[1, 2]));
    }

    #[test]
    fn rising_binomials() {
        assert_eq!(ExactPolynomial::rising_binomial(0), ExactPolynomial::one());
        assert_eq!(ExactPolynomial::rising_binomial(1), ExactPolynomial::x());
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(
            ExactPolynomial::rising_binomial(2),
            ExactPolynomial::from_coeffs(vec![rational(0), half.clone(), half])
        );
    }

    #[test]
    fn zero_checks() {
        assert!(ExactPolynomial::zero().is_zero());
        let x = ExactPolynomial::x();
        assert!((&x - &x).is_zero());
        assert!(!poly(&[-75, -38, 17]).is_zero());
        assert_eq!(ExactPolynomial::zero().degree(), None);
        assert_eq!(poly(&[0, 0]).degree(), None);
    }

    #[test]
    fn serialization() {
        assert_eq!(
            poly(&[-75, -38, 17]).serialize(),
            r#"[(2,"17/1"),(1,"-38/1"),(0,"-75/1")]"#
        );
        assert_eq!(ExactPolynomial::zero().serialize(), "[]");
        assert_eq!(poly(&[-75, -38, 17]).to_string(), "17x^2-38x-75");
        assert_eq!(ExactPolynomial::x().to_string(), "x");
        assert_eq!(poly(&[0, -1, 0, 1]).to_string(), "x^3-x");
        assert_eq!(ExactPolynomial::rising_binomial(2).to_string(), "(1/2)x^2+(1/2)x");
    }

    #[test]
    fn exact_division() {
        let p = ExactPolynomial::product([&lin(2), &lin(-3), &lin(7)]);
        assert_eq!(p.div_exact(&lin(-3)), Some(&lin(2) * &lin(7)));
        assert_eq!(p.div_exact(&lin(1)), None);
        assert_eq!(p.div_exact(&ExactPolynomial::zero()), None);
    }

    fn small_poly() -> impl Strategy<Value = ExactPolynomial> {
        prop::collection::vec(-6i64..=6, 0..5).prop_map(|c| poly(&c))
    }

    proptest! {
        #[test]
        fn ring_axioms(p in small_poly(), q in small_poly(), r in small_poly()) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&(&p + &q) - &q, p.clone());
            if !p.is_zero() && !q.is_zero() {
                prop_assert_eq!((&p * &q).degree(), Some(p.degree().unwrap() + q.degree().unwrap()));
            }
        }

        #[test]
        fn shift_is_a_homomorphism(p in small_poly(), q in small_poly(), a in -5i64..=5) {
            prop_assert_eq!((&p * &q).shift_int(a), &p.shift_int(a) * &q.shift_int(a));
            prop_assert_eq!(p.shift_int(a).shift_int(-a), p.clone());
        }

        #[test]
        fn shift_agrees_with_evaluation(p in small_poly(), a in -5i64..=5, at in -5i64..=5) {
            prop_assert_eq!(p.shift_int(a).eval(&rational(at)), p.eval(&rational(at + a)));
        }

        #[test]
        fn difference_drops_degree(p in small_poly()) {
            match p.degree() {
                Some(d) if d > 0 => prop_assert_eq!(p.difference().degree(), Some(d - 1)),
                _ => prop_assert!(p.difference().is_zero()),
            }
        }

        #[test]
        fn division_inverts_multiplication(p in small_poly(), q in small_poly()) {
            prop_assume!(!q.is_zero());
            prop_assert_eq!((&p * &q).div_exact(&q), Some(p));
        }
    }

    #[test]
    fn pascal_recurrence_for_rising_binomials() {
        for k in 1..=8 {
            let top = ExactPolynomial::rising_binomial(k);
            let left = ExactPolynomial::rising_binomial(k).shift_int(-1);
            let right = ExactPolynomial::rising_binomial(k - 1);
            assert_eq!(top, &left + &right, "k={k}");
            assert_eq!(top.difference(), ExactPolynomial::rising_binomial(k - 1).shift_int(1));
        }
    }
}
