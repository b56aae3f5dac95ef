use serde::{Deserialize, Serialize};

use super::field::{Fe, Field, FieldElem};
use super::FieldError;

/// exp(2πi·exponent/order).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootOfUnity {
    pub order: u32,
    pub exponent: u32,
}

impl RootOfUnity {
    pub fn one(order: u32) -> Self {
        RootOfUnity { order, exponent: 0 }
    }

    pub fn is_one(&self) -> bool {
        self.exponent == 0
    }

    pub fn conj(self) -> Self {
        RootOfUnity {
            order: self.order,
            exponent: (self.order - self.exponent) % self.order,
        }
    }

    pub fn to_complex(self) -> (f64, f64) {
        let angle = 2.0 * std::f64::consts::PI * self.exponent as f64 / self.order as f64;
        (angle.cos(), angle.sin())
    }
}

impl std::ops::Mul for RootOfUnity {
    type Output = Self;

    /// Product of two roots of the same order.
    fn mul(self, other: Self) -> Self {
        assert_eq!(
            self.order, other.order,
            "roots of unity of different orders"
        );
        RootOfUnity {
            order: self.order,
            exponent: (self.exponent + other.exponent) % self.order,
        }
    }
}

/// φ_a(x) = exp(2πi·Tr(a·x)/p) with `Tr` the absolute trace of `field`.
#[inline]
pub fn add_char(field: &Field, a: Fe, x: Fe) -> RootOfUnity {
    RootOfUnity {
        order: field.characteristic(),
        exponent: field.abs_trace(field.mul(a, x)),
    }
}

/// Checked form of [`add_char`].
pub fn add_char_checked(a: FieldElem<'_>, x: FieldElem<'_>) -> Result<RootOfUnity, FieldError> {
    if !a.same_field(&x) {
        return Err(FieldError::DescriptorMismatch);
    }
    Ok(add_char(a.field, a.value, x.value))
}
