use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly;
use crate::valuation::p_adic_order;
use crate::{FieldError, FieldSpec, Valuation, Q64};

/// An element `a_0 + a_1 u + ... + a_{e-1} u^{e-1}` of `E = Q(u)`, `u^e = p`.
///
/// The representation is canonical, so the derived `Eq`, `Hash` and `Ord`
/// are value equality, a value hash and a fixed total order (the order has
/// no arithmetic meaning; it is used to break ties deterministically).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    spec: FieldSpec,
    coeffs: Vec<BigRational>,
}

impl FieldElement {
    pub fn zero(spec: FieldSpec) -> Self {
        Self {
            spec,
            coeffs: vec![BigRational::zero(); spec.degree()],
        }
    }

    pub fn one(spec: FieldSpec) -> Self {
        Self::from_int(spec, 1)
    }

    pub fn from_int(spec: FieldSpec, n: i64) -> Self {
        Self::from_rational(spec, BigRational::from_integer(n.into()))
    }

    /// The rational `num/den` embedded in `E`. Panics if `den = 0`.
    pub fn from_frac(spec: FieldSpec, num: i64, den: i64) -> Self {
        Self::from_rational(spec, BigRational::new(num.into(), den.into()))
    }

    pub fn from_rational(spec: FieldSpec, q: BigRational) -> Self {
        let mut out = Self::zero(spec);
        out.coeffs[0] = q;
        out
    }

    pub fn from_coeffs(spec: FieldSpec, coeffs: Vec<BigRational>) -> Result<Self, FieldError> {
        if coeffs.len() != spec.degree() {
            return Err(FieldError::WrongLength {
                expected: spec.degree(),
                found: coeffs.len(),
            });
        }
        Ok(Self { spec, coeffs })
    }

    /// The uniformizer `u`, with `u^e = p` and `v(u) = 1/e`.
    pub fn uniformizer(spec: FieldSpec) -> Self {
        Self::u_pow(spec, 1)
    }

    /// `u^k` for any integer `k`; negative powers are `p^{-1}`-scaled.
    pub fn u_pow(spec: FieldSpec, k: i64) -> Self {
        let e = spec.degree() as i64;
        let (q, r) = (k.div_euclid(e), k.rem_euclid(e));
        let p = BigInt::from(spec.prime());
        let scale = if q >= 0 {
            BigRational::from_integer(num_traits::pow(p, q as usize))
        } else {
            BigRational::new(BigInt::one(), num_traits::pow(p, (-q) as usize))
        };
        let mut out = Self::zero(spec);
        out.coeffs[r as usize] = scale;
        out
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The element as a rational, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.spec.check_same(&rhs.spec)?;
        Ok(self.zip(rhs, |a, b| a + b))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.spec.check_same(&rhs.spec)?;
        Ok(self.zip(rhs, |a, b| a - b))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.spec.check_same(&rhs.spec)?;
        if let Some(q) = rhs.as_rational() {
            return Ok(self.scale(q));
        }
        if let Some(q) = self.as_rational() {
            return Ok(rhs.scale(q));
        }
        let e = self.spec.degree();
        let p = BigRational::from_integer(self.spec.prime().into());
        let mut out = vec![BigRational::zero(); e];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = a * b;
                if i + j < e {
                    out[i + j] += t;
                } else {
                    out[i + j - e] += t * &p;
                }
            }
        }
        Ok(Self {
            spec: self.spec,
            coeffs: out,
        })
    }

    /// The unique `z` with `z * rhs = self`.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.spec.check_same(&rhs.spec)?;
        self.checked_mul(&rhs.inv()?)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// `x^e - p`.
    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(self.spec, q.recip()));
        }
        let e = self.spec.degree();
        let mut modulus = vec![BigRational::zero(); e + 1];
        modulus[0] = -BigRational::from_integer(self.spec.prime().into());
        modulus[e] = BigRational::one();
        let mut s = poly::inverse_mod(&self.coeffs, &modulus).ok_or(FieldError::DivisionByZero)?;
        s.resize(e, BigRational::zero());
        Self::from_coeffs(self.spec, s)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self {
            spec: self.spec,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| if c.is_zero() { c.clone() } else { c * q })
                .collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&BigRational::from_integer(n.into()))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.spec);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `min_i (v_p(a_i) + i/e)`, or `Infinite` for zero.
    ///
    /// The candidates `v_p(a_i) + i/e` have pairwise distinct fractional
    /// parts, so the minimum is attained at exactly one index; this is
    /// asserted because the ultrametric equality case depends on it.
    pub fn valuation(&self) -> Valuation {
        let e = self.spec.degree() as i64;
        let mut best: Option<(i64, usize)> = None;
        let mut ties = 0;
        for (i, a) in self.coeffs.iter().enumerate() {
            let Some(k) = p_adic_order(a, self.spec.prime()) else {
                continue;
            };
            let scaled = k * e + i as i64;
            match best {
                Some((b, _)) if scaled > b => {}
                Some((b, _)) if scaled == b => ties += 1,
                _ => {
                    best = Some((scaled, i));
                    ties = 0;
                }
            }
        }
        assert_eq!(ties, 0, "valuation minimizer must be unique");
        match best {
            Some((scaled, _)) => Valuation::Finite(Q64::new(scaled, e)),
            None => Valuation::Infinite,
        }
    }

    /// Text encoding: one `"num/den"` string per coefficient.
    pub fn encode(&self) -> Vec<String> {
        self.coeffs
            .iter()
            .map(|c| format!("{}/{}", c.numer(), c.denom()))
            .collect()
    }

    pub fn decode<S: AsRef<str>>(spec: FieldSpec, parts: &[S]) -> Result<Self, FieldError> {
        let coeffs = parts
            .iter()
            .map(|s| parse_rational(s.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_coeffs(spec, coeffs)
    }

    fn zip(&self, rhs: &Self, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Self {
        Self {
            spec: self.spec,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

/// Parses `"n"`, `"n/d"` (with optional sign and surrounding spaces).
pub(crate) fn parse_rational(s: &str) -> Result<BigRational, FieldError> {
    let bad = || FieldError::BadRational(s.to_string());
    let t = s.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| bad())?;
    let d = BigInt::from_str(d).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => write!(f, "u^{i}")?,
                (_, false) => write!(f, "{a}*u^{i}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            /// Panics if the operands live in different fields.
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("field mismatch")
            }
        }
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            spec: self.spec,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}
