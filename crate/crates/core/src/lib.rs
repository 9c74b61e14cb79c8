//! Exact computer algebra for the stable algebraic objects attached to the
//! projective plane: Grothendieck-Witt rings, Milnor-Witt K-theory with its
//! four defining relations, the endomorphism ring Z + Z + F^x/(F^x)^6 of P^2
//! together with its classical (topological) counterparts, the psi_n matrix
//! construction on odd quadrics with its SL_3 decomposition algorithm, and
//! exact integer linear algebra (Smith normal form, Ext^1 formulas) for
//! finitely generated abelian groups.
//!
//! All arithmetic is exact: prime fields use canonical residues, the
//! rationals use arbitrary-precision fractions, and integer matrices use
//! big integers. Every value is immutable after construction and every
//! operation is a pure function, so the whole crate is safe for
//! unrestricted concurrent use.

pub mod abgrp;
mod arith;
pub mod endo;
pub mod error;
pub mod field;
pub mod gw;
pub mod jsonio;
pub mod kmw;
pub mod sample;
pub mod sl3;
pub mod topo;

pub use error::{AlgebraError, Result};
pub use field::{FieldCtx, FieldElem, UnitClass};
pub use gw::GwElem;
pub use kmw::KmwElem;

/// Three-valued comparison outcome for backends without a complete
/// decision procedure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trivalent {
    Equal,
    Distinct,
    Unknown,
}

impl Trivalent {
    pub fn is_equal(self) -> bool {
        self == Trivalent::Equal
    }
}
