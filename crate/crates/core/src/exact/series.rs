use crate::error::{Error, Result};

use super::Ring;

/// Power series in `x` known modulo `x^order`.
///
/// Operands of binary operations must share the same order; mixing orders is
/// an error rather than an implicit re-truncation.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<C> {
    coeffs: Vec<C>,
}

impl<C: Ring> Series<C> {
    /// Builds a series of the given order from leading coefficients; missing
    /// ones are zero and those past the order are dropped.
    pub fn new(order: usize, coeffs: impl IntoIterator<Item = C>) -> Self {
        let mut coeffs: Vec<C> = coeffs.into_iter().take(order).collect();
        coeffs.resize(order, C::zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, [])
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, [C::one()])
    }

    /// `c * x^power`.
    pub fn monomial(order: usize, c: C, power: usize) -> Self {
        let mut s = Self::zero(order);
        if power < order {
            s.coeffs[power] = c;
        }
        s
    }

    /// `1 + x + ... + x^(len - 1)`.
    pub fn geometric_block(order: usize, len: usize) -> Self {
        Self::new(order, std::iter::repeat_n(C::one(), len))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `x^n`; panics if `n >= order`.
    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let order = self.order();
        let mut out = vec![C::zero(); order];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(Self { coeffs: out })
    }

    /// Multiplicative inverse modulo `x^order`.
    pub fn inverse(&self) -> Result<Self> {
        let order = self.order();
        if order == 0 {
            return Ok(self.clone());
        }
        let inv0 = self.coeffs[0]
            .unit_inverse()
            .ok_or(Error::NonUnitConstant)?;
        let mut out: Vec<C> = Vec::with_capacity(order);
        out.push(inv0.clone());
        for n in 1..order {
            let mut acc = C::zero();
            for i in 1..=n {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc = acc + a.clone() * out[n - i].clone();
                }
            }
            out.push(-(inv0.clone() * acc));
        }
        Ok(Self { coeffs: out })
    }

    pub fn try_div(&self, divisor: &Self) -> Result<Self> {
        self.same_order(divisor)?;
        self.try_mul(&divisor.inverse()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base).expect("same order");
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base).expect("same order");
            }
        }
        acc
    }

    /// Multiply by `x^by`, dropping what falls past the order.
    pub fn shift(&self, by: usize) -> Self {
        let order = self.order();
        Self::new(
            order,
            std::iter::repeat_n(C::zero(), by.min(order)).chain(self.coeffs.iter().cloned()),
        )
    }

    pub fn map<D: Ring>(&self, f: impl FnMut(&C) -> D) -> Series<D> {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

/// Truncated Cauchy product.
pub fn series_mul<C: Ring>(a: &Series<C>, b: &Series<C>) -> Result<Series<C>> {
    a.try_mul(b)
}

/// Inverse of a series whose constant term is a unit.
pub fn series_geometric_inverse<C: Ring>(a: &Series<C>) -> Result<Series<C>> {
    a.inverse()
}
