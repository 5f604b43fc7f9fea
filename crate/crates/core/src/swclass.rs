//! First and second Stiefel-Whitney classes of orthogonal representations of O(n).
//!
//! Degree one is expressed in the basis {w1(gamma)}, degree two in
//! {w2(gamma), e_cup} where e_cup = w1(gamma)^2.

use crate::error::{Error, Result};
use crate::spincheck::{check_spinorial, m_minus_one, GroupId, RepDescriptor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SW1 {
    pub c: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SW2 {
    /// Coefficient of w2(gamma).
    pub a: u8,
    /// Coefficient of e_cup.
    pub b: u8,
}

/// Coefficients of alpha^2, beta^2 and alpha*beta after restriction to the
/// diagonal Klein four-group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SW2D2 {
    pub alpha2: u8,
    pub beta2: u8,
    pub alphabeta: u8,
}

fn orthogonal_dim(group: &GroupId) -> Result<Option<usize>> {
    match group {
        GroupId::OEven(l) | GroupId::OOdd(l) | GroupId::GLR(l) => Ok(Some(*l)),
        GroupId::SO(_) => Ok(None),
        g => Err(Error::UnsupportedGroup(format!("Stiefel-Whitney classes for {g}"))),
    }
}

fn choose2_mod2(m: u64) -> u8 {
    // C(m,2) is odd iff m = 2,3 mod 4
    ((m / 2) % 2) as u8
}

pub fn w1(rep: &RepDescriptor) -> Result<SW1> {
    orthogonal_dim(&rep.group)?;
    Ok(SW1 { c: (m_minus_one(rep)? % 2) as u8 })
}

pub fn w2(rep: &RepDescriptor) -> Result<SW2> {
    let l = orthogonal_dim(&rep.group)?;
    let v = check_spinorial(rep)?;
    let a = (*v.q_value.numer()).rem_euclid(2) as u8;
    // On {+-I} for odd l, w2(gamma) restricts to C(l,2) times the square class.
    let correction = match l {
        Some(l) if l % 2 == 1 => a & choose2_mod2(l as u64),
        _ => 0,
    };
    Ok(SW2 { a, b: choose2_mod2(v.m) ^ correction })
}

/// w2 + w1 cup w1 = 0, using w1(gamma)^2 = e_cup.
pub fn obstruction_vanishes(w1: SW1, w2: SW2) -> bool {
    w2.a == 0 && (w2.b + w1.c) % 2 == 0
}

/// Second class restricted to the Klein four-group {1, d1, d2, d1 d2}.
pub fn w2_via_d2(chi_identity: i64, chi_d1: i64, chi_d2: i64, chi_d1d2: i64) -> Result<SW2D2> {
    let g = |chi: i64| -> Result<i64> {
        let diff = chi_identity - chi;
        if diff % 2 != 0 || diff < 0 {
            return Err(Error::InvalidCharacterData(format!(
                "character value {chi} at an involution is incompatible with degree {chi_identity}"
            )));
        }
        Ok(diff / 2)
    };
    let (g1, g2, g12) = (g(chi_d1)?, g(chi_d2)?, g(chi_d1d2)?);
    let half = |x: i64| ((x / 2) % 2) as u8;
    Ok(SW2D2 { alpha2: half(g1), beta2: half(g2), alphabeta: (half(g12) + half(g1) + half(g2)) % 2 })
}
