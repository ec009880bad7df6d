use std::fmt;

use crate::FieldError;

/// The pair `(p, e)` describing `E = Q(p^(1/e))`.
///
/// `x^e - p` is Eisenstein at `p`, so every pair with `p` prime and `e >= 1`
/// gives a field of degree `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    prime: u32,
    ramification: u32,
}

impl FieldSpec {
    pub fn new(prime: i64, ramification: i64) -> Result<Self, FieldError> {
        if !is_prime(prime) {
            return Err(FieldError::NotPrime(prime));
        }
        if ramification < 1 || ramification > 64 {
            return Err(FieldError::BadRamification(ramification));
        }
        Ok(Self {
            prime: prime as u32,
            ramification: ramification as u32,
        })
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn ramification(&self) -> u32 {
        self.ramification
    }

    /// Degree of `E` over `Q`, i.e. the number of stored coefficients.
    pub fn degree(&self) -> usize {
        self.ramification as usize
    }

    pub(crate) fn check_same(&self, other: &FieldSpec) -> Result<(), FieldError> {
        if self == other {
            Ok(())
        } else {
            Err(FieldError::SpecMismatch {
                left: *self,
                right: *other,
            })
        }
    }
}

impl Default for FieldSpec {
    /// `p = 2`, `e = 6`: large enough that every valuation with denominator
    /// 2 or 3 is realized by an element.
    fn default() -> Self {
        Self {
            prime: 2,
            ramification: 6,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q({}^(1/{}))", self.prime, self.ramification)
    }
}

fn is_prime(n: i64) -> bool {
    if n < 2 || n > u32::MAX as i64 {
        return false;
    }
    let mut d = 2i64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
