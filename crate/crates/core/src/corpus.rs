//! A fixed family of small trirings used by tests, benches and the CLI.

use crate::commring::{FiniteCommRing, Provenance};
use crate::error::Result;
use crate::triring::{build_triring, triquaternions_over, Triring};
use crate::Limits;

fn zn(n: usize) -> Result<FiniteCommRing> {
    FiniteCommRing::integers_mod(n)
}

fn reduction(from: usize, to: usize) -> Vec<usize> {
    (0..from).map(|x| x % to).collect()
}

/// `Z2[e]/(e^2)`, elements `a + b e` stored as `a + 2b`.
pub fn dual_numbers_z2() -> Result<FiniteCommRing> {
    let add = (0..4).flat_map(|a| (0..4).map(move |b| a ^ b)).collect();
    let mul = (0..4usize)
        .flat_map(|a| {
            (0..4usize).map(move |b| {
                let (a0, a1, b0, b1) = (a & 1, a >> 1, b & 1, b >> 1);
                (a0 & b0) | (((a0 & b1) ^ (a1 & b0)) << 1)
            })
        })
        .collect();
    FiniteCommRing::from_tables(4, add, mul, 1, Provenance::Table)
}

/// The field with four elements, `a + b w` stored as `a + 2b`, `w^2 = w + 1`.
pub fn field_f4() -> Result<FiniteCommRing> {
    let add = (0..4).flat_map(|a| (0..4).map(move |b| a ^ b)).collect();
    let mul = (0..4usize)
        .flat_map(|a| {
            (0..4usize).map(move |b| {
                let (a0, a1, b0, b1) = (a & 1, a >> 1, b & 1, b >> 1);
                let w2 = a1 & b1;
                let c0 = (a0 & b0) ^ w2;
                let c1 = (a0 & b1) ^ (a1 & b0) ^ w2;
                c0 | (c1 << 1)
            })
        })
        .collect();
    FiniteCommRing::from_tables(4, add, mul, 1, Provenance::Table)
}

/// Every member of the standard corpus, in a fixed order.
pub fn standard_corpus(limits: &Limits) -> Result<Vec<Triring>> {
    let z2xz2 = FiniteCommRing::product(&[zn(2)?, zn(2)?])?;
    let z2xz3 = FiniteCommRing::product(&[zn(2)?, zn(3)?])?;
    let crt: Vec<usize> = (0..6).map(|x| (x % 2) * 3 + x % 3).collect();
    let first_factor: Vec<usize> = (0..4).map(|x| x >> 1).collect();
    let frobenius = vec![0, 1, 3, 2];
    Ok(vec![
        build_triring("z4z2", zn(4)?, zn(2)?, reduction(4, 2), reduction(4, 2))?,
        triquaternions_over(&zn(2)?, limits)?.with_name("tq2"),
        triquaternions_over(&zn(3)?, limits)?.with_name("tq3"),
        triquaternions_over(&zn(4)?, limits)?.with_name("tq4"),
        Triring::commutative("z6", zn(6)?)?,
        Triring::commutative("z8", zn(8)?)?,
        Triring::commutative("z2xz2", z2xz2.clone())?,
        build_triring("z2z2_z2", z2xz2, zn(2)?, first_factor.clone(), first_factor)?,
        build_triring("z6_z3", zn(6)?, zn(3)?, reduction(6, 3), reduction(6, 3))?,
        build_triring("z6_z2xz3", zn(6)?, z2xz3, crt.clone(), crt)?,
        build_triring("dual_z2", dual_numbers_z2()?, zn(2)?, vec![0, 1, 0, 1], vec![0, 1, 0, 1])?,
        build_triring("z9_z3", zn(9)?, zn(3)?, reduction(9, 3), reduction(9, 3))?,
        build_triring("z4_z4", zn(4)?, zn(4)?, (0..4).collect(), (0..4).collect())?,
        build_triring("f4_frob", field_f4()?, field_f4()?, (0..4).collect(), frobenius)?,
    ])
}
