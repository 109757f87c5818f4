//! Exact computations in finite trirings.
//!
//! A triring `R = R0 + R1` pairs a commutative ring `R0` with an odd part
//! `R1` that carries its own commutative product `#`, subject to `R1 R1 = 0`,
//! the triassociative law and `R1 x0 = x0 R1`. This crate builds finite
//! trirings from operation tables, enumerates their triideals, decides
//! primality, and computes trinilradicals, radicals and the trispectrum with
//! its closed-set topology.

pub mod commring;
pub mod corpus;
pub mod error;
pub mod spectrum;
pub mod triideal;
pub mod triring;

pub use commring::{make_ring, FiniteCommRing, Ideal, Provenance, QuotientRing, RingDescriptor};
pub use error::{Error, Result, Witness};
pub use spectrum::{
    ClosedSet, CoverTarget, Parity, SpecializationOrder, Subcover, Trispectrum,
};
pub use triideal::{
    CorrespondenceReport, HomAnalysis, QuotientTriring, Triideal, TriringHom,
};
pub use triring::{
    build_triring, triquaternion_element, triquaternions_over, verify_axioms, Axiom, AxiomReport,
    ElementOp, ProductBlocks, StructureMap, TriElement, Triring, TriringCandidate,
};

/// Caps on exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest allowed carrier of a single component ring.
    pub max_size: usize,
    /// Largest allowed number of ideals of a component ring, and of
    /// triideals of a triring.
    pub max_ideals: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_size: 64,
            max_ideals: 4096,
        }
    }
}
