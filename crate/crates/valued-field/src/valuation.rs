use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::Q64;

/// A value of the normalized valuation: a rational number or `+inf`.
///
/// The derived ordering puts every finite value below `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Valuation {
    Finite(Q64),
    Infinite,
}

impl Valuation {
    pub fn from_int(n: i64) -> Self {
        Valuation::Finite(Q64::from_integer(n))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Valuation::Finite(Q64::new(num, den))
    }

    pub fn finite(self) -> Option<Q64> {
        match self {
            Valuation::Finite(q) => Some(q),
            Valuation::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinite)
    }
}

impl Add for Valuation {
    type Output = Valuation;

    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(q) => write!(f, "{q}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// The exponent of `p` in a nonzero rational, `None` for zero.
pub fn p_adic_order(x: &BigRational, p: u32) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    Some(int_order(x.numer(), p) - int_order(x.denom(), p))
}

fn int_order(n: &BigInt, p: u32) -> i64 {
    let p = BigInt::from(p);
    let mut m = n.abs();
    let mut k = 0;
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return k;
        }
        m = q;
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn orders_of_rationals() {
        assert_eq!(p_adic_order(&q(12, 1), 2), Some(2));
        assert_eq!(p_adic_order(&q(3, 8), 2), Some(-3));
        assert_eq!(p_adic_order(&q(-5, 7), 5), Some(1));
        assert_eq!(p_adic_order(&q(0, 1), 5), None);
    }

    #[test]
    fn infinity_is_largest() {
        assert!(Valuation::from_int(1000) < Valuation::Infinite);
        assert_eq!(Valuation::from_int(1) + Valuation::Infinite, Valuation::Infinite);
        assert_eq!(
            Valuation::from_frac(1, 2) + Valuation::from_frac(1, 3),
            Valuation::from_frac(5, 6)
        );
    }
}
