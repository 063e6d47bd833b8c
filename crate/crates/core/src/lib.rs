//! Exact-arithmetic engine for the minimal embedded toric resolutions of the
//! rational double point (ADE) surface singularities.
//!
//! The crate computes Newton dual fans of the defining equations, refines
//! them by recorded wall/ray insertions into unimodular fans, certifies
//! minimality through irreducibility of lattice vectors in the dual-fan
//! cones, generates jet-scheme equations, and cross-checks the component
//! tables against the monomial-valuation route. Everything is exact: `i64`
//! lattice coordinates with `i128` products, integer polynomial arithmetic,
//! and finite-field sampling where a symbolic certificate is out of reach.

pub mod catalog;
pub mod charts;
pub mod error;
pub mod hilbert;
pub mod jets;
pub mod lattice;
pub mod newton;
pub mod subdivision;

pub use error::*;

#[cfg(test)]
mod shared_use {
    // every value type is immutable after construction and freely shareable
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn values_are_send_and_sync() {
        assert_send_sync::<crate::lattice::Cone>();
        assert_send_sync::<crate::lattice::Fan>();
        assert_send_sync::<crate::newton::Polynomial>();
        assert_send_sync::<crate::jets::ComponentSpec>();
        assert_send_sync::<crate::catalog::CatalogEntry>();
        assert_send_sync::<crate::subdivision::ResolutionFanResult>();
    }
}
