use thiserror::Error;

use crate::gf256::FieldElement;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("cannot parse field element from {0:?}")]
    ParseField(String),

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("invalid hex: {0}")]
    Hex(String),

    #[error("expected {expected} bytes, got {actual}")]
    Length { expected: String, actual: usize },

    #[error("map is not a bijection: {first:?} and {second:?} both map to {image:?}")]
    NotBijective {
        first: FieldElement,
        second: FieldElement,
        image: FieldElement,
    },

    #[error("map is not Z2-linear: f({a:?} + {b:?}) != f({a:?}) + f({b:?})")]
    NotLinear { a: FieldElement, b: FieldElement },

    #[error("elements do not form a basis over Z2")]
    DependentBasis,

    #[error("{0:?} is not a primitive element")]
    NotPrimitive(FieldElement),

    #[error("{variant} needs {expected} round keys, got {actual}")]
    ScheduleLength {
        variant: &'static str,
        expected: usize,
        actual: usize,
    },

    #[error("unknown cipher variant {0:?}")]
    UnknownVariant(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(&'static str),

    #[error("landau_max_order is defined for 1 <= n <= 256, got {0}")]
    LandauRange(usize),
}
