//! Diagram involutions, folded root systems and the twisted character at g0.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::*;
use crate::repcalc::{rep_type, HighestWeight, RepType};
use crate::rootsys::{build, classify, CartanLabel, Family, RootSystem};

mod numeric;

pub use numeric::twisted_char_numeric;

pub const DEFAULT_WEYL_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramInvolution {
    pub sys: Arc<RootSystem>,
    pub node_permutation: Vec<usize>,
    pub matrix: QMat,
}

impl DiagramInvolution {
    /// Linear extension of a node permutation, identity on the orthogonal
    /// complement of the root span.
    pub fn from_permutation(sys: &Arc<RootSystem>, perm: Vec<usize>) -> Result<Self> {
        let r = sys.rank();
        let n = sys.ambient_dim;
        let mut sorted = perm.clone();
        sorted.sort();
        if perm.len() != r || sorted != (0..r).collect::<Vec<_>>() || (0..r).any(|i| perm[perm[i]] != i) {
            return Err(Error::InvalidInvolution(format!("{perm:?} is not an involution of {r} nodes")));
        }
        let mut matrix = QMat::zeros(n, n);
        for j in 0..n {
            let e = unit_vec(n, j);
            let c = sys.simple_coords(&e);
            let mut img = sub(&e, &sys.project(&e));
            for (i, ci) in c.iter().enumerate() {
                img = add(&img, &scale(&sys.simple_roots[perm[i]], *ci));
            }
            for i in 0..n {
                matrix[(i, j)] = img[i];
            }
        }
        if matrix.mul(&matrix) != QMat::identity(n) {
            return Err(Error::InvalidInvolution("matrix does not square to the identity".into()));
        }
        if matrix.transpose().mul(&matrix) != QMat::identity(n) {
            return Err(Error::InvalidInvolution("permutation is not a diagram automorphism".into()));
        }
        Ok(DiagramInvolution { sys: sys.clone(), node_permutation: perm, matrix })
    }

    pub fn apply(&self, v: &[Q]) -> QVec {
        self.matrix.apply(v)
    }

    pub fn is_trivial(&self) -> bool {
        self.node_permutation.iter().enumerate().all(|(i, &p)| i == p)
    }
}

pub fn builtin_involution(sys: &Arc<RootSystem>) -> Result<DiagramInvolution> {
    let r = sys.rank();
    let perm: Vec<usize> = match sys.label.family {
        Family::A if r >= 2 => (0..r).rev().collect(),
        Family::D => {
            let mut p: Vec<usize> = (0..r).collect();
            p.swap(r - 2, r - 1);
            p
        }
        Family::E6 => vec![5, 1, 4, 3, 2, 0],
        _ => return Err(Error::NoInvolution(sys.label.to_string())),
    };
    DiagramInvolution::from_permutation(sys, perm)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldedSystem {
    pub source: Arc<RootSystem>,
    pub involution: DiagramInvolution,
    /// Orthogonal basis of the fixed subspace used for displayed coordinates.
    pub fixed_basis: Vec<QVec>,
    /// Folded positive roots in ambient coordinates of the source.
    pub positive_roots: Vec<QVec>,
    /// Same roots in fixed-basis coordinates.
    pub folded_positive_roots: Vec<QVec>,
    pub label: CartanLabel,
    /// rho^tau in ambient coordinates.
    pub rho_tau_ambient: QVec,
    /// rho^tau in fixed-basis coordinates.
    pub rho_tau: QVec,
}

impl FoldedSystem {
    pub fn rank(&self) -> usize {
        self.fixed_basis.len()
    }

    pub fn to_fixed(&self, v: &[Q]) -> QVec {
        self.fixed_basis.iter().map(|b| dot(v, b) / dot(b, b)).collect()
    }

    pub fn from_fixed(&self, c: &[Q]) -> QVec {
        let mut v = zero_vec(self.source.ambient_dim);
        for (ci, b) in c.iter().zip(&self.fixed_basis) {
            v = add(&v, &scale(b, *ci));
        }
        v
    }

    pub fn indivisible_positive_roots(&self) -> Vec<QVec> {
        let set: BTreeSet<&QVec> = self.positive_roots.iter().collect();
        self.positive_roots
            .iter()
            .filter(|a| !set.contains(&scale(a, qf(1, 2))))
            .cloned()
            .collect()
    }

    /// Simple roots of the indivisible folded system, ambient coordinates.
    pub fn simple_roots(&self) -> Vec<QVec> {
        let pos: BTreeSet<QVec> = self.indivisible_positive_roots().into_iter().collect();
        pos.iter()
            .filter(|a| !pos.iter().any(|b| pos.contains(&sub(a, b))))
            .cloned()
            .collect()
    }
}

fn display_basis(sys: &RootSystem, tau: &DiagramInvolution) -> Vec<QVec> {
    let n = sys.ambient_dim;
    match sys.label.family {
        Family::D => (0..n - 1).map(|i| unit_vec(n, i)).collect(),
        Family::A => (0..n / 2).map(|i| sub(&unit_vec(n, i), &unit_vec(n, n - 1 - i))).collect(),
        _ => {
            let sums: Vec<QVec> = sys
                .simple_roots
                .iter()
                .enumerate()
                .filter(|(i, _)| tau.node_permutation[*i] >= *i)
                .map(|(_, a)| add(a, &tau.apply(a)))
                .collect();
            gram_schmidt(&sums)
        }
    }
}

pub fn fold(sys: &Arc<RootSystem>, tau: &DiagramInvolution) -> Result<FoldedSystem> {
    if tau.sys.label != sys.label {
        return Err(Error::InvalidInvolution("involution belongs to another root system".into()));
    }
    let half = qf(1, 2);
    let positive: BTreeSet<QVec> = sys
        .positive_roots
        .iter()
        .map(|a| scale(&add(a, &tau.apply(a)), half))
        .collect();
    let positive: Vec<QVec> = positive.into_iter().collect();
    let mut all = positive.clone();
    all.extend(positive.iter().map(|a| neg(a)));
    let label = classify(&all).map_err(|e| Error::Internal(format!("folded set failed to classify: {e}")))?;
    let fixed_basis = display_basis(sys, tau);
    if fixed_basis.len() != label.rank {
        return Err(Error::Internal("fixed basis rank differs from folded rank".into()));
    }
    let mut folded = FoldedSystem {
        source: sys.clone(),
        involution: tau.clone(),
        fixed_basis,
        folded_positive_roots: Vec::new(),
        positive_roots: positive,
        label,
        rho_tau_ambient: Vec::new(),
        rho_tau: Vec::new(),
    };
    folded.folded_positive_roots = folded.positive_roots.iter().map(|a| folded.to_fixed(a)).collect();
    folded.rho_tau_ambient = rho_tau_ambient(&folded);
    folded.rho_tau = folded.to_fixed(&folded.rho_tau_ambient);
    Ok(folded)
}

/// Half the sum of the positive coroots `2b/(b.b)` of the indivisible folded roots.
fn rho_tau_ambient(folded: &FoldedSystem) -> QVec {
    let mut acc = zero_vec(folded.source.ambient_dim);
    for b in folded.indivisible_positive_roots() {
        acc = add(&acc, &scale(&b, q(2) / dot(&b, &b)));
    }
    scale(&acc, qf(1, 2))
}

pub fn rho_tau_of(folded: &FoldedSystem) -> QVec {
    folded.rho_tau.clone()
}

fn require_type_two(lambda: &HighestWeight, folded: &FoldedSystem) -> Result<()> {
    if lambda.sys.label != folded.source.label {
        return Err(Error::TypeMismatch("weight and folded system have different root systems".into()));
    }
    if rep_type(lambda, &folded.involution) != RepType::TypeII {
        return Err(Error::TypeMismatch(format!("{} is not fixed by the involution", fmt_vec(&lambda.coords))));
    }
    Ok(())
}

pub fn restrict_weight(lambda: &HighestWeight, folded: &FoldedSystem) -> Result<QVec> {
    require_type_two(lambda, folded)?;
    Ok(folded.to_fixed(&lambda.coords))
}

/// Positive-sign value of the twisted character at g0, as an exact big rational.
pub fn twisted_char_g0_big(lambda: &HighestWeight, folded: &FoldedSystem) -> Result<BigRational> {
    require_type_two(lambda, folded)?;
    let rho = &folded.rho_tau_ambient;
    let shifted = add(&lambda.coords, rho);
    let mut num = BigRational::one();
    let mut den = BigRational::one();
    for b in folded.indivisible_positive_roots() {
        num *= to_big(&dot(&b, &shifted));
        den *= to_big(&dot(&b, rho));
    }
    if den.is_zero() {
        return Err(Error::Internal("rho^tau is singular for the folded system".into()));
    }
    Ok(num / den)
}

pub fn twisted_char_g0(lambda: &HighestWeight, folded: &FoldedSystem) -> Result<Q> {
    let v = twisted_char_g0_big(lambda, folded)?;
    let (n, d) = (v.numer(), v.denom());
    match (i64::try_from(n), i64::try_from(d)) {
        (Ok(n), Ok(d)) => Ok(Q::new(n, d)),
        _ => Err(Error::Internal("twisted character exceeds 64 bits".into())),
    }
}

/// Reflection group generated by the given roots, with determinant signs.
pub fn reflection_group(generators: &[QVec], cap: usize, label: &str) -> Result<Vec<(QMat, i8)>> {
    let n = generators.first().map_or(0, Vec::len);
    let refl: Vec<QMat> = generators.iter().map(|a| QMat::reflection(a)).collect();
    let mut index: HashMap<QMat, i8> = HashMap::from([(QMat::identity(n), 1)]);
    let mut order = vec![(QMat::identity(n), 1i8)];
    let mut queue = VecDeque::from([(QMat::identity(n), 1i8)]);
    while let Some((w, s)) = queue.pop_front() {
        for r in &refl {
            let x = r.mul(&w);
            if !index.contains_key(&x) {
                if index.len() >= cap {
                    return Err(Error::WeylGroupTooLarge { label: label.to_string(), cap });
                }
                index.insert(x.clone(), -s);
                order.push((x.clone(), -s));
                queue.push_back((x, -s));
            }
        }
    }
    Ok(order)
}

pub fn weyl_group_elements(label: CartanLabel, cap: usize) -> Result<Vec<QMat>> {
    let sys = build(label)?;
    Ok(reflection_group(&sys.simple_roots, cap, &label.to_string())?
        .into_iter()
        .map(|(m, _)| m)
        .collect())
}
