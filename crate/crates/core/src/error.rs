use std::fmt;

use thiserror::Error;

use crate::triring::{StructureMap, TriElement};

/// Errors raised while constructing or analysing finite rings and trirings.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring axiom violated: {law} (witness {witness:?})")]
    AxiomViolation { law: String, witness: Vec<usize> },

    #[error("size limit exceeded: {what} is {count}, cap is {cap}")]
    SizeLimit {
        what: &'static str,
        count: usize,
        cap: usize,
    },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("{map} is not a ring homomorphism into the odd part: {law} fails at ({a}, {b})")]
    NotAHomomorphism {
        map: StructureMap,
        law: &'static str,
        a: usize,
        b: usize,
    },

    #[error("{map}(1) = {value} but the local identity is {local_one}")]
    LocalIdentityMismatch {
        map: StructureMap,
        value: usize,
        local_one: usize,
    },

    #[error("left and right odd multiples of even element {x0} generate different local ideals")]
    Axiom3Violation { x0: usize },

    #[error("triring axiom {axiom} fails at {witness}")]
    TriassocViolation { axiom: String, witness: Witness },

    #[error("local product is only defined on odd elements, got {0}")]
    OddOnly(TriElement),

    #[error("map is not a triring homomorphism: {condition} fails at {witness}")]
    NotAHom {
        condition: &'static str,
        witness: Witness,
    },

    #[error("homomorphism is not surjective: {0} has no preimage")]
    NotSurjective(TriElement),

    #[error("input ideal is not prime in the odd part")]
    NotPrimeInput,

    #[error("closed set is empty")]
    EmptySet,

    #[error("open family does not cover the target: point {point} is uncovered")]
    NotACover { point: usize },

    #[error("internal invariant failed: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// A finite counterexample: the tuple of elements at which a law fails.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Witness(pub Vec<TriElement>);

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl From<Vec<TriElement>> for Witness {
    fn from(v: Vec<TriElement>) -> Self {
        Witness(v)
    }
}
