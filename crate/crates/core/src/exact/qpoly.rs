use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ExactInt, Ring};

/// Dense polynomial in `q`; `coeffs[i]` is the coefficient of `q^i`.
///
/// Always canonical: no trailing zeros, so the zero polynomial has no
/// coefficients and structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<ExactInt>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<ExactInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| ExactInt::from(c)).collect())
    }

    pub fn constant(c: impl Into<ExactInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `q^power`.
    pub fn q_power(power: usize) -> Self {
        Self::monomial(ExactInt::one(), power)
    }

    pub fn monomial(c: ExactInt, power: usize) -> Self {
        if c.is_zero() {
            return Self::default();
        }
        let mut coeffs = vec![ExactInt::zero(); power];
        coeffs.push(c);
        Self { coeffs }
    }

    /// The q-integer `[n]_q = 1 + q + ... + q^(n-1)`.
    pub fn q_integer(n: usize) -> Self {
        Self::new(vec![ExactInt::one(); n])
    }

    /// `[n]_q! = [1]_q [2]_q ... [n]_q`.
    pub fn q_factorial(n: usize) -> Self {
        (1..=n).fold(Self::one(), |acc, i| &acc * &Self::q_integer(i))
    }

    pub fn coeffs(&self) -> &[ExactInt] {
        &self.coeffs
    }

    /// Coefficient of `q^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> ExactInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest power of `q` with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval_at_one(&self) -> ExactInt {
        self.coeffs.iter().sum()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Multiply by `q^by`.
    pub fn shift(&self, by: usize) -> Self {
        if self.is_zero() {
            return Self::default();
        }
        let mut coeffs = vec![ExactInt::zero(); by];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Multiply by `q^by` for a possibly negative exponent. `None` when a
    /// negative shift would produce negative powers of `q`.
    pub fn shift_signed(&self, by: i64) -> Option<Self> {
        if by >= 0 {
            return Some(self.shift(by as usize));
        }
        let drop = by.unsigned_abs() as usize;
        match self.valuation() {
            None => Some(Self::default()),
            Some(v) if v >= drop => Some(Self::new(self.coeffs[drop..].to_vec())),
            Some(_) => None,
        }
    }

    /// Long division. `None` if some quotient coefficient is not an integer.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let lead = divisor.coeffs.last()?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::default(), self.clone()));
        }
        let mut quot = vec![ExactInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        Some((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient; `None` on a nonzero remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor)?;
        r.is_zero().then_some(q)
    }
}

/// Sum of the coefficients, i.e. the value at `q = 1`.
pub fn qpoly_eval_at_one(p: &QPoly) -> ExactInt {
    p.eval_at_one()
}

impl From<ExactInt> for QPoly {
    fn from(c: ExactInt) -> Self {
        Self::new(vec![c])
    }
}

impl Zero for QPoly {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for QPoly {
    fn one() -> Self {
        Self {
            coeffs: vec![BigInt::one()],
        }
    }
}

impl Ring for QPoly {
    fn unit_inverse(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [c] => c.unit_inverse().map(Self::from),
            _ => None,
        }
    }
}

impl<'a> Add<&'a QPoly> for &'a QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, d) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += d;
        }
        QPoly::new(coeffs)
    }
}

impl<'a> Sub<&'a QPoly> for &'a QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a QPoly> for &'a QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::default();
        }
        let mut coeffs = vec![ExactInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::new(coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(self, rhs: QPoly) -> QPoly {
        &self + &rhs
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(self, rhs: QPoly) -> QPoly {
        &self - &rhs
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl fmt::Display for QPoly {
    /// Ascending powers joined by `+`, e.g. `2+q`, `q+q^2+q^3`. A unit
    /// coefficient is only written on the constant term.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let mag = c.abs();
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{i}")?,
            }
        }
        Ok(())
    }
}
