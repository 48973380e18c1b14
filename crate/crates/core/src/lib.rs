//! Exact classification of minimal vanishing sums of roots of unity.

pub mod arith;
pub mod cli;
pub mod cyclotomic;
pub mod enumerate;
pub mod error;
pub mod minimality;
pub mod plot;
pub mod reference;
pub mod sorou;
pub mod store;
pub mod typegen;
pub mod types;

pub use cyclotomic::{IntPolynomial, Residue};
pub use error::{Error, Result};
pub use sorou::{Root, Sorou, SubsidiaryDecomposition};
