//! Highest weights: dominance, Weyl dimension, Casimir trace, Freudenthal
//! multiplicities, and characters at diagonal torus elements.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::folding::DiagramInvolution;
use crate::rational::*;
use crate::rootsys::{killing_dual_pairing, Family, RootSystem};

pub const DEFAULT_FREUDENTHAL_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HighestWeight {
    pub sys: Arc<RootSystem>,
    pub coords: QVec,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RepType {
    TypeI,
    TypeII,
}

impl HighestWeight {
    /// Weight in orthogonal coordinates. For A and G2 the vector is projected
    /// onto the root span (so A weights are taken modulo the all-ones vector).
    pub fn new(sys: Arc<RootSystem>, coords: QVec) -> Result<Self> {
        if coords.len() != sys.ambient_dim {
            return Err(Error::DimensionMismatch { expected: sys.ambient_dim, got: coords.len() });
        }
        let coords = match sys.label.family {
            Family::A | Family::G2 => sys.project(&coords),
            _ if sys.in_span(&coords) => coords,
            _ => return Err(Error::NotInSpan(fmt_vec(&coords))),
        };
        if !sys.simple_roots.iter().all(|a| RootSystem::coroot_pairing(&coords, a).is_integer()) {
            return Err(Error::NotIntegral(fmt_vec(&coords)));
        }
        Ok(HighestWeight { sys, coords })
    }

    pub fn zero(sys: Arc<RootSystem>) -> Self {
        let n = sys.ambient_dim;
        HighestWeight { sys, coords: zero_vec(n) }
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coords)
    }

    /// Dynkin labels (pairings with simple coroots).
    pub fn dynkin_labels(&self) -> Vec<i64> {
        self.sys
            .simple_roots
            .iter()
            .map(|a| *RootSystem::coroot_pairing(&self.coords, a).numer())
            .collect()
    }

    fn require_dominant(&self) -> Result<()> {
        if is_dominant(self) {
            Ok(())
        } else {
            Err(Error::NotDominant(fmt_vec(&self.coords)))
        }
    }
}

pub fn is_dominant(lambda: &HighestWeight) -> bool {
    lambda.sys.is_dominant(&lambda.coords)
}

/// Exact Weyl dimension as a big rational product, verified integral.
pub fn weyl_dim_big(lambda: &HighestWeight) -> Result<BigInt> {
    lambda.require_dominant()?;
    let sys = &lambda.sys;
    let shifted = add(&lambda.coords, &sys.weyl_vector);
    let mut prod = BigRational::one();
    for a in sys.indivisible_positive_roots() {
        prod *= to_big(&dot(&shifted, &a)) / to_big(&dot(&sys.weyl_vector, &a));
    }
    if !prod.is_integer() {
        return Err(Error::Internal(format!("Weyl dimension {prod} is not an integer")));
    }
    Ok(prod.to_integer())
}

pub fn weyl_dim(lambda: &HighestWeight) -> Result<u64> {
    weyl_dim_big(lambda)?
        .to_u64()
        .ok_or_else(|| Error::Internal("dimension exceeds 64 bits".into()))
}

pub fn casimir_trace(lambda: &HighestWeight) -> Result<Q> {
    lambda.require_dominant()?;
    let sys = &lambda.sys;
    let l2d = add(&lambda.coords, &scale(&sys.weyl_vector, q(2)));
    killing_dual_pairing(sys, &lambda.coords, &l2d)
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightMultiplicityTable {
    pub mults: BTreeMap<QVec, u64>,
}

impl WeightMultiplicityTable {
    pub fn total(&self) -> u64 {
        self.mults.values().sum()
    }

    pub fn get(&self, mu: &[Q]) -> u64 {
        self.mults.get(mu).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.mults.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }
}

fn below(sys: &RootSystem, lambda: &[Q], mu: &[Q]) -> bool {
    sys.simple_coords(&sub(lambda, mu))
        .iter()
        .all(|c| c.is_integer() && !c.is_negative())
}

/// Multiplicities of the dominant weights, highest first by level.
pub fn dominant_multiplicities(lambda: &HighestWeight, cap: u64) -> Result<Vec<(QVec, u64)>> {
    let dim = weyl_dim(lambda)?;
    if dim > cap {
        return Err(Error::CapExceeded { dim, cap });
    }
    let sys = &lambda.sys;
    let lam = &lambda.coords;
    let pos = sys.indivisible_positive_roots();

    let mut seen: HashSet<QVec> = HashSet::from([lam.clone()]);
    let mut queue = VecDeque::from([lam.clone()]);
    while let Some(mu) = queue.pop_front() {
        for a in &pos {
            let nu = sub(&mu, a);
            if sys.is_dominant(&nu) && below(sys, lam, &nu) && seen.insert(nu.clone()) {
                queue.push_back(nu);
            }
        }
    }
    let mut dominant: Vec<(Q, QVec)> = seen.into_iter().map(|mu| (sys.height(&sub(lam, &mu)), mu)).collect();
    dominant.sort();

    let norm = |v: &[Q]| {
        let s = add(v, &sys.weyl_vector);
        dot(&s, &s)
    };
    let top = norm(lam);
    let mut known: HashMap<QVec, u64> = HashMap::new();
    let mut out = Vec::with_capacity(dominant.len());
    for (level, mu) in dominant {
        let m = if level.is_zero() {
            1
        } else {
            let mut num = Q::zero();
            for a in &pos {
                let mut k = 1;
                loop {
                    let nu = add(&mu, &scale(a, q(k)));
                    let rep = sys.dominant_rep(&nu);
                    let Some(&mk) = known.get(&rep) else { break };
                    num += q(mk as i64) * dot(&nu, a);
                    k += 1;
                }
            }
            let val = q(2) * num / (top - norm(&mu));
            if !val.is_integer() || val.is_negative() {
                return Err(Error::Internal(format!("Freudenthal produced {val} at {}", fmt_vec(&mu))));
            }
            *val.numer() as u64
        };
        known.insert(mu.clone(), m);
        out.push((mu, m));
    }
    Ok(out)
}

pub fn freudenthal_multiplicities(lambda: &HighestWeight, cap: u64) -> Result<WeightMultiplicityTable> {
    let dom = dominant_multiplicities(lambda, cap)?;
    let mut mults = BTreeMap::new();
    for (mu, m) in dom {
        if m == 0 {
            continue;
        }
        for w in lambda.sys.orbit(&mu) {
            mults.insert(w, m);
        }
    }
    Ok(WeightMultiplicityTable { mults })
}

/// Sum of `mult(mu) * prod_i signs_i^{mu_i}` over a multiplicity table of a B or D weight.
pub fn char_from_table(table: &WeightMultiplicityTable, signs: &[i8]) -> Result<i64> {
    let mut total: i64 = 0;
    for (mu, &m) in &table.mults {
        if mu.len() != signs.len() {
            return Err(Error::DimensionMismatch { expected: mu.len(), got: signs.len() });
        }
        let mut s = 1i64;
        for (c, &sg) in mu.iter().zip(signs) {
            if !c.is_integer() {
                return Err(Error::NotIntegral(fmt_vec(mu)));
            }
            if sg < 0 && c.numer().rem_euclid(2) == 1 {
                s = -s;
            }
        }
        total += s * m as i64;
    }
    Ok(total)
}

/// Character at the torus element with rotation angles 0 or pi in each plane.
pub fn char_at_diagonal(lambda: &HighestWeight, signs: &[i8], cap: u64) -> Result<i64> {
    if !matches!(lambda.sys.label.family, Family::B | Family::D) {
        return Err(Error::UnsupportedFamily(lambda.sys.label.to_string()));
    }
    if signs.len() != lambda.sys.ambient_dim || signs.iter().any(|s| s.abs() != 1) {
        return Err(Error::DimensionMismatch { expected: lambda.sys.ambient_dim, got: signs.len() });
    }
    if !is_integer_vec(&lambda.coords) {
        return Err(Error::NotIntegral(fmt_vec(&lambda.coords)));
    }
    char_from_table(&freudenthal_multiplicities(lambda, cap)?, signs)
}

/// Dominant representative of the twisted highest weight.
pub fn tau_action(lambda: &HighestWeight, tau: &DiagramInvolution) -> HighestWeight {
    let image = tau.matrix.apply(&lambda.coords);
    HighestWeight { sys: lambda.sys.clone(), coords: lambda.sys.dominant_rep(&image) }
}

pub fn rep_type(lambda: &HighestWeight, tau: &DiagramInvolution) -> RepType {
    if tau_action(lambda, tau).coords == lambda.coords {
        RepType::TypeII
    } else {
        RepType::TypeI
    }
}

/// All dominant integral weights with integer orthogonal coordinates bounded by `bound`
/// in absolute value, for B and D systems.
pub fn bounded_dominant_weights(sys: &Arc<RootSystem>, bound: i64) -> Vec<HighestWeight> {
    let n = sys.ambient_dim;
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    fn rec(i: usize, bound: i64, cur: &mut Vec<i64>, sys: &Arc<RootSystem>, out: &mut Vec<HighestWeight>) {
        if i == cur.len() {
            let v = qvec(cur);
            if sys.is_dominant(&v) {
                if let Ok(h) = HighestWeight::new(sys.clone(), v) {
                    out.push(h);
                }
            }
            return;
        }
        for x in -bound..=bound {
            cur[i] = x;
            rec(i + 1, bound, cur, sys, out);
        }
    }
    rec(0, bound, &mut cur, sys, &mut out);
    out.sort_by(|a, b| b.coords.cmp(&a.coords));
    out
}
