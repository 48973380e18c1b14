//! Reference classification through weight 16, one row per type.
//!
//! Families indexed by a parameter are stored by one member: `1+nu_5^y` as
//! `1:0+5:1` and `1-nu_3 nu_5^y` as `1:0+30:1`. Compare up to Galois
//! conjugation.

use crate::error::Result;
use crate::types::{galois_class_rep, parse_type, MinVanType};

#[derive(Clone, Copy, Debug)]
pub struct Row {
    pub weight: usize,
    pub top_prime: u64,
    pub relative_order: u64,
    /// Nonincreasing.
    pub partition: &'static [usize],
    pub ty: &'static str,
    /// `(larger, smaller)`, descending.
    pub parities: &'static [(usize, usize)],
}

impl Row {
    /// The row's type as the Galois class representative.
    pub fn minvan(&self) -> Result<MinVanType> {
        let t = galois_class_rep(&parse_type(self.ty)?);
        Ok(t.components()[0].clone())
    }
}

#[rustfmt::skip]
pub const REFERENCE_ROWS: &[Row] = &[
    Row { weight: 2, top_prime: 2, relative_order: 2, partition: &[1, 1], ty: "(R2;1:0)", parities: &[(1, 1)] },
    Row { weight: 3, top_prime: 3, relative_order: 3, partition: &[1, 1, 1], ty: "(R3;1:0)", parities: &[(3, 0)] },
    Row { weight: 5, top_prime: 5, relative_order: 5, partition: &[1, 1, 1, 1, 1], ty: "(R5;1:0)", parities: &[(5, 0)] },
    Row { weight: 6, top_prime: 5, relative_order: 30, partition: &[2, 1, 1, 1, 1], ty: "(R5;1:0;(R3;1:0))", parities: &[(4, 2)] },
    Row { weight: 7, top_prime: 7, relative_order: 7, partition: &[1, 1, 1, 1, 1, 1, 1], ty: "(R7;1:0)", parities: &[(7, 0)] },
    Row { weight: 7, top_prime: 5, relative_order: 30, partition: &[2, 2, 1, 1, 1], ty: "(R5;1:0;(R3;1:0);(R3;1:0))", parities: &[(4, 3)] },
    Row { weight: 8, top_prime: 7, relative_order: 42, partition: &[2, 1, 1, 1, 1, 1, 1], ty: "(R7;1:0;(R3;1:0))", parities: &[(6, 2)] },
    Row { weight: 8, top_prime: 5, relative_order: 30, partition: &[2, 2, 2, 1, 1], ty: "(R5;1:0;(R3;1:0);(R3;1:0);(R3;1:0))", parities: &[(6, 2)] },
    Row { weight: 9, top_prime: 7, relative_order: 42, partition: &[2, 2, 1, 1, 1, 1, 1], ty: "(R7;1:0;(R3;1:0);(R3;1:0))", parities: &[(5, 4)] },
    Row { weight: 9, top_prime: 5, relative_order: 30, partition: &[2, 2, 2, 2, 1], ty: "(R5;1:0;(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0))", parities: &[(8, 1)] },
    Row { weight: 10, top_prime: 7, relative_order: 70, partition: &[4, 1, 1, 1, 1, 1, 1], ty: "(R7;1:0;(R5;1:0))", parities: &[(6, 4)] },
    Row { weight: 10, top_prime: 7, relative_order: 42, partition: &[2, 2, 2, 1, 1, 1, 1], ty: "(R7;1:0;(R3;1:0);(R3;1:0);(R3;1:0))", parities: &[(6, 4)] },
    Row { weight: 11, top_prime: 11, relative_order: 11, partition: &[1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], ty: "(R11;1:0)", parities: &[(11, 0)] },
    Row { weight: 11, top_prime: 7, relative_order: 210, partition: &[5, 1, 1, 1, 1, 1, 1], ty: "(R7;1:0;(R5;1:0;(R3;1:0)))", parities: &[(10, 1), (8, 3)] },
    Row { weight: 11, top_prime: 7, relative_order: 210, partition: &[4, 2, 1, 1, 1, 1, 1], ty: "(R7;1:0;(R3;1:0);(R5;1:0))", parities: &[(6, 5)] },
    Row { weight: 11, top_prime: 7, relative_order: 42, partition: &[2, 2, 2, 2, 1, 1, 1], ty: "(R7;1:0;(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0))", parities: &[(8, 3)] },
    Row { weight: 12, top_prime: 11, relative_order: 66, partition: &[2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], ty: "(R11;1:0;(R3;1:0))", parities: &[(10, 2)] },
    Row { weight: 12, top_prime: 7, relative_order: 210, partition: &[6, 1, 1, 1, 1, 1, 1], ty: "(R7;1:0;(R5;1:0;(R3;1:0);(R3;1:0)))", parities: &[(10, 2), (9, 3)] },
    Row { weight: 12, top_prime: 7, relative_order: 210, partition: &[5, 2, 1, 1, 1, 1, 1], ty: "(R7;1:0;(R3;1:0);(R5;1:0;(R3;1:0)))", parities: &[(9, 3), (7, 5)] },
    Row { weight: 12, top_prime: 7, relative_order: 210, partition: &[4, 2, 2, 1, 1, 1, 1], ty: "(R7;1:0;(R3;1:0);(R3;1:0);(R5;1:0))", parities: &[(8, 4)] },
    Row { weight: 12, top_prime: 7, relative_order: 42, partition: &[2, 2, 2, 2, 2, 1, 1], ty: "(R7;1:0;(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0))", parities: &[(10, 2)] },
    Row { weight: 13, top_prime: 13, relative_order: 13, partition: &[1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], ty: "(R13;1:0)", parities: &[(13, 0)] },
    Row { weight: 13, top_prime: 11, relative_order: 66, partition: &[2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1], ty: "(R11;1:0;(R3;1:0);(R3;1:0))", parities: &[(9, 4)] },
    Row { weight: 13, top_prime: 7, relative_order: 210, partition: &[7, 1, 1, 1, 1, 1, 1], ty: "(R7;1:0;(R5;1:0;(R3;1:0);(R3;1:0);(R3;1:0)))", parities: &[(12, 1), (8, 5)] },
    Row { weight: 13, top_prime: 7, relative_order: 210, partition: &[6, 2, 1, 1, 1, 1, 1], ty: "(R7;1:0;(R3;1:0);(R5;1:0;(R3;1:0);(R3;1:0)))", parities: &[(9, 4), (8, 5)] },
    Row { weight: 13, top_prime: 7, relative_order: 70, partition: &[4, 4, 1, 1, 1, 1, 1], ty: "(R7;1:0;(R5;1:0);(R5;1:0))", parities: &[(8, 5)] },
    Row { weight: 13, top_prime: 7, relative_order: 210, partition: &[5, 2, 2, 1, 1, 1, 1], ty: "(R7;1:0;(R3;1:0);(R3;1:0);(R5;1:0;(R3;1:0)))", parities: &[(8, 5), (7, 6)] },
    Row { weight: 13, top_prime: 7, relative_order: 210, partition: &[4, 2, 2, 2, 1, 1, 1], ty: "(R7;1:0;(R3;1:0);(R3;1:0);(R3;1:0);(R5;1:0))", parities: &[(10, 3)] },
    Row { weight: 13, top_prime: 7, relative_order: 42, partition: &[2, 2, 2, 2, 2, 2, 1], ty: "(R7;1:0;(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0))", parities: &[(12, 1)] },
    Row { weight: 14, top_prime: 13, relative_order: 78, partition: &[2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], ty: "(R13;1:0;(R3;1:0))", parities: &[(12, 2)] },
    Row { weight: 14, top_prime: 11, relative_order: 110, partition: &[4, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], ty: "(R11;1:0;(R5;1:0))", parities: &[(10, 4)] },
    Row { weight: 14, top_prime: 11, relative_order: 66, partition: &[2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1], ty: "(R11;1:0;(R3;1:0);(R3;1:0);(R3;1:0))", parities: &[(8, 6)] },
    Row { weight: 14, top_prime: 7, relative_order: 210, partition: &[8, 1, 1, 1, 1, 1, 1], ty: "(R7;1:0;(R5;1:0;(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0)))", parities: &[(14, 0), (7, 7)] },
    Row { weight: 14, top_prime: 7, relative_order: 210, partition: &[7, 2, 1, 1, 1, 1, 1], ty: "(R7;1:0;(R3;1:0);(R5;1:0;(R3;1:0);(R3;1:0);(R3;1:0)))", parities: &[(11, 3), (7, 7)] },
    Row { weight: 14, top_prime: 7, relative_order: 210, partition: &[5, 4, 1, 1, 1, 1, 1], ty: "(R7;1:0;(R5;1:0);(R5;1:0;(R3;1:0)))", parities: &[(9, 5), (7, 7)] },
    Row { weight: 14, top_prime: 7, relative_order: 210, partition: &[6, 2, 2, 1, 1, 1, 1], ty: "(R7;1:0;(R3;1:0);(R3;1:0);(R5;1:0;(R3;1:0);(R3;1:0)))", parities: &[(8, 6), (7, 7)] },
    Row { weight: 14, top_prime: 7, relative_order: 210, partition: &[4, 4, 2, 1, 1, 1, 1], ty: "(R7;1:0;(R3;1:0);(R5;1:0);(R5;1:0))", parities: &[(10, 4)] },
    Row { weight: 14, top_prime: 7, relative_order: 210, partition: &[5, 2, 2, 2, 1, 1, 1], ty: "(R7;1:0;(R3;1:0);(R3;1:0);(R3;1:0);(R5;1:0;(R3;1:0)))", parities: &[(9, 5), (7, 7)] },
    Row { weight: 14, top_prime: 7, relative_order: 210, partition: &[4, 2, 2, 2, 2, 1, 1], ty: "(R7;1:0;(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0);(R5;1:0))", parities: &[(12, 2)] },
    Row { weight: 15, top_prime: 13, relative_order: 78, partition: &[2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], ty: "(R13;1:0;(R3;1:0);(R3;1:0))", parities: &[(11, 4)] },
    Row { weight: 15, top_prime: 11, relative_order: 330, partition: &[5, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], ty: "(R11;1:0;(R5;1:0;(R3;1:0)))", parities: &[(14, 1), (12, 3)] },
    Row { weight: 15, top_prime: 11, relative_order: 330, partition: &[4, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1], ty: "(R11;1:0;(R3;1:0);(R5;1:0))", parities: &[(9, 6)] },
    Row { weight: 15, top_prime: 11, relative_order: 66, partition: &[2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1], ty: "(R11;1:0;(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0))", parities: &[(8, 7)] },
    Row { weight: 15, top_prime: 7, relative_order: 210, partition: &[8, 2, 1, 1, 1, 1, 1], ty: "(R7;1:0;(R3;1:0);(R5;1:0;(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0)))", parities: &[(13, 2), (9, 6)] },
    Row { weight: 15, top_prime: 7, relative_order: 210, partition: &[6, 4, 1, 1, 1, 1, 1], ty: "(R7;1:0;(R5;1:0);(R5;1:0;(R3;1:0);(R3;1:0)))", parities: &[(9, 6), (8, 7)] },
    Row { weight: 15, top_prime: 7, relative_order: 210, partition: &[5, 5, 1, 1, 1, 1, 1], ty: "(R7;1:0;(R5;1:0;(R3;1:0));(R5;1:0;(R3;1:0)))", parities: &[(13, 2), (11, 4), (9, 6)] },
    Row { weight: 15, top_prime: 7, relative_order: 210, partition: &[7, 2, 2, 1, 1, 1, 1], ty: "(R7;1:0;(R3;1:0);(R3;1:0);(R5;1:0;(R3;1:0);(R3;1:0);(R3;1:0)))", parities: &[(10, 5), (9, 6)] },
    Row { weight: 15, top_prime: 7, relative_order: 210, partition: &[5, 4, 2, 1, 1, 1, 1], ty: "(R7;1:0;(R3;1:0);(R5;1:0);(R5;1:0;(R3;1:0)))", parities: &[(9, 6), (8, 7)] },
    Row { weight: 15, top_prime: 7, relative_order: 210, partition: &[6, 2, 2, 2, 1, 1, 1], ty: "(R7;1:0;(R3;1:0);(R3;1:0);(R3;1:0);(R5;1:0;(R3;1:0);(R3;1:0)))", parities: &[(9, 6), (8, 7)] },
    Row { weight: 15, top_prime: 7, relative_order: 210, partition: &[4, 4, 2, 2, 1, 1, 1], ty: "(R7;1:0;(R3;1:0);(R3;1:0);(R5;1:0);(R5;1:0))", parities: &[(12, 3)] },
    Row { weight: 15, top_prime: 7, relative_order: 210, partition: &[5, 2, 2, 2, 2, 1, 1], ty: "(R7;1:0;(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0);(R5;1:0;(R3;1:0)))", parities: &[(11, 4), (9, 6)] },
    Row { weight: 15, top_prime: 7, relative_order: 210, partition: &[4, 2, 2, 2, 2, 2, 1], ty: "(R7;1:0;(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0);(R5;1:0))", parities: &[(14, 1)] },
    Row { weight: 15, top_prime: 7, relative_order: 70, partition: &[3, 2, 2, 2, 2, 2, 2], ty: "(R7;1:0+5:1;(R5;1:0))", parities: &[(12, 3)] },
    Row { weight: 16, top_prime: 13, relative_order: 130, partition: &[4, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], ty: "(R13;1:0;(R5;1:0))", parities: &[(12, 4)] },
    Row { weight: 16, top_prime: 13, relative_order: 78, partition: &[2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], ty: "(R13;1:0;(R3;1:0);(R3;1:0);(R3;1:0))", parities: &[(10, 6)] },
    Row { weight: 16, top_prime: 11, relative_order: 154, partition: &[6, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], ty: "(R11;1:0;(R7;1:0))", parities: &[(10, 6)] },
    Row { weight: 16, top_prime: 11, relative_order: 330, partition: &[6, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], ty: "(R11;1:0;(R5;1:0;(R3;1:0);(R3;1:0)))", parities: &[(14, 2), (13, 3)] },
    Row { weight: 16, top_prime: 11, relative_order: 330, partition: &[5, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1], ty: "(R11;1:0;(R3;1:0);(R5;1:0;(R3;1:0)))", parities: &[(13, 3), (11, 5)] },
    Row { weight: 16, top_prime: 11, relative_order: 330, partition: &[4, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1], ty: "(R11;1:0;(R3;1:0);(R3;1:0);(R5;1:0))", parities: &[(8, 8)] },
    Row { weight: 16, top_prime: 11, relative_order: 66, partition: &[2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1], ty: "(R11;1:0;(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0))", parities: &[(10, 6)] },
    Row { weight: 16, top_prime: 7, relative_order: 210, partition: &[7, 4, 1, 1, 1, 1, 1], ty: "(R7;1:0;(R5;1:0);(R5;1:0;(R3;1:0);(R3;1:0);(R3;1:0)))", parities: &[(11, 5), (9, 7)] },
    Row { weight: 16, top_prime: 7, relative_order: 210, partition: &[6, 5, 1, 1, 1, 1, 1], ty: "(R7;1:0;(R5;1:0;(R3;1:0));(R5;1:0;(R3;1:0);(R3;1:0)))", parities: &[(13, 3), (12, 4), (11, 5), (10, 6)] },
    Row { weight: 16, top_prime: 7, relative_order: 210, partition: &[8, 2, 2, 1, 1, 1, 1], ty: "(R7;1:0;(R3;1:0);(R3;1:0);(R5;1:0;(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0)))", parities: &[(12, 4), (11, 5)] },
    Row { weight: 16, top_prime: 7, relative_order: 210, partition: &[6, 4, 2, 1, 1, 1, 1], ty: "(R7;1:0;(R3;1:0);(R5;1:0);(R5;1:0;(R3;1:0);(R3;1:0)))", parities: &[(9, 7), (8, 8)] },
    Row { weight: 16, top_prime: 7, relative_order: 210, partition: &[5, 5, 2, 1, 1, 1, 1], ty: "(R7;1:0;(R3;1:0);(R5;1:0;(R3;1:0));(R5;1:0;(R3;1:0)))", parities: &[(12, 4), (10, 6), (8, 8)] },
    Row { weight: 16, top_prime: 7, relative_order: 210, partition: &[4, 4, 4, 1, 1, 1, 1], ty: "(R7;1:0;(R5;1:0);(R5;1:0);(R5;1:0))", parities: &[(12, 4)] },
    Row { weight: 16, top_prime: 7, relative_order: 210, partition: &[7, 2, 2, 2, 1, 1, 1], ty: "(R7;1:0;(R3;1:0);(R3;1:0);(R3;1:0);(R5;1:0;(R3;1:0);(R3;1:0);(R3;1:0)))", parities: &[(11, 5), (9, 7)] },
    Row { weight: 16, top_prime: 7, relative_order: 210, partition: &[5, 4, 2, 2, 1, 1, 1], ty: "(R7;1:0;(R3;1:0);(R3;1:0);(R5;1:0);(R5;1:0;(R3;1:0)))", parities: &[(11, 5), (9, 7)] },
    Row { weight: 16, top_prime: 7, relative_order: 210, partition: &[6, 2, 2, 2, 2, 1, 1], ty: "(R7;1:0;(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0);(R5;1:0;(R3;1:0);(R3;1:0)))", parities: &[(11, 5), (10, 6)] },
    Row { weight: 16, top_prime: 7, relative_order: 210, partition: &[4, 4, 2, 2, 2, 1, 1], ty: "(R7;1:0;(R3;1:0);(R3;1:0);(R3;1:0);(R5;1:0);(R5;1:0))", parities: &[(14, 2)] },
    Row { weight: 16, top_prime: 7, relative_order: 210, partition: &[5, 2, 2, 2, 2, 2, 1], ty: "(R7;1:0;(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0);(R5;1:0;(R3;1:0)))", parities: &[(13, 3), (11, 5)] },
    Row { weight: 16, top_prime: 7, relative_order: 105, partition: &[4, 2, 2, 2, 2, 2, 2], ty: "(R7;1:0+3:1;(R5;1:0;(R3;1:0)))", parities: &[(16, 0)] },
    Row { weight: 16, top_prime: 7, relative_order: 210, partition: &[4, 2, 2, 2, 2, 2, 2], ty: "(R7;1:0+5:1;(R5;1:0;(R3;1:0)))", parities: &[(14, 2)] },
    Row { weight: 16, top_prime: 7, relative_order: 210, partition: &[4, 2, 2, 2, 2, 2, 2], ty: "(R7;1:0+30:1;(R5;1:0;(R3;1:0)))", parities: &[(9, 7)] },
    Row { weight: 16, top_prime: 7, relative_order: 210, partition: &[3, 3, 2, 2, 2, 2, 2], ty: "(R7;1:0+5:1;(R2;1:0)&(R3;1:0);(R5;1:0))", parities: &[(11, 5)] },
    Row { weight: 16, top_prime: 7, relative_order: 70, partition: &[3, 3, 2, 2, 2, 2, 2], ty: "(R7;1:0+5:1;(R5;1:0);(R5;1:0))", parities: &[(10, 6)] },
];

/// Rows of weight at most `w`.
pub fn rows_through(w: usize) -> impl Iterator<Item = &'static Row> {
    REFERENCE_ROWS.iter().filter(move |r| r.weight <= w)
}
