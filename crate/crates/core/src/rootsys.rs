//! Root systems in orthogonal coordinates, classification, and the dual Killing form.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::rational::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    F4,
    G2,
    BC,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E6 => "E",
            Family::F4 => "F",
            Family::G2 => "G",
            Family::BC => "BC",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanLabel {
    pub family: Family,
    pub rank: usize,
}

impl CartanLabel {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A | Family::B | Family::C | Family::BC => rank >= 1,
            Family::D => rank >= 2,
            Family::E6 => rank == 6,
            Family::F4 => rank == 4,
            Family::G2 => rank == 2,
        };
        if ok {
            Ok(CartanLabel { family, rank })
        } else {
            Err(Error::InvalidRank { family: family.name().to_string(), rank })
        }
    }

    /// Representative of the isomorphism class (B1, C1 -> A1; C2 -> B2; D3 -> A3).
    pub fn canonical(self) -> Self {
        use Family::*;
        match (self.family, self.rank) {
            (B | C, 1) => CartanLabel { family: A, rank: 1 },
            (C, 2) => CartanLabel { family: B, rank: 2 },
            (D, 3) => CartanLabel { family: A, rank: 3 },
            _ => self,
        }
    }

    pub fn is_isomorphic(self, other: CartanLabel) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn is_reduced(self) -> bool {
        self.family != Family::BC
    }

    pub fn ambient_dim(self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::E6 => 8,
            Family::G2 => 3,
            _ => self.rank,
        }
    }
}

impl fmt::Display for CartanLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.name(), self.rank)
    }
}

impl FromStr for CartanLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let split = s.find(|c: char| c.is_ascii_digit()).ok_or_else(|| Error::Parse(format!("missing rank in {s:?}")))?;
        let (fam, rank) = s.split_at(split);
        let rank: usize = rank.parse().map_err(|_| Error::Parse(format!("bad rank in {s:?}")))?;
        let family = match fam.to_ascii_uppercase().as_str() {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "E" => Family::E6,
            "F" => Family::F4,
            "G" => Family::G2,
            "BC" => Family::BC,
            _ => return Err(Error::UnsupportedFamily(fam.to_string())),
        };
        if family == Family::E6 && rank != 6 {
            return Err(Error::UnsupportedType(format!("E{rank}")));
        }
        CartanLabel::new(family, rank)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    pub label: CartanLabel,
    pub ambient_dim: usize,
    pub simple_roots: Vec<QVec>,
    pub positive_roots: Vec<QVec>,
    pub weyl_vector: QVec,
    pub dim_g: u64,
    pub killing_denominator: Q,
    gram_inv: QMat,
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    /// All roots, positives first then their negatives.
    pub fn roots(&self) -> Vec<QVec> {
        let mut out = self.positive_roots.clone();
        out.extend(self.positive_roots.iter().map(|a| neg(a)));
        out
    }

    /// Roots `a` with `a/2` not a root.
    pub fn indivisible_positive_roots(&self) -> Vec<QVec> {
        let set: HashSet<&QVec> = self.positive_roots.iter().collect();
        self.positive_roots
            .iter()
            .filter(|a| !set.contains(&scale(a, qf(1, 2))))
            .cloned()
            .collect()
    }

    /// Coefficients of `v` in the basis of simple roots (v assumed in their span).
    pub fn simple_coords(&self, v: &[Q]) -> QVec {
        let st: QVec = self.simple_roots.iter().map(|a| dot(a, v)).collect();
        self.gram_inv.apply(&st)
    }

    pub fn height(&self, v: &[Q]) -> Q {
        self.simple_coords(v).into_iter().sum()
    }

    /// Orthogonal projection onto the span of the roots.
    pub fn project(&self, v: &[Q]) -> QVec {
        let c = self.simple_coords(v);
        let mut out = zero_vec(self.ambient_dim);
        for (ci, a) in c.iter().zip(&self.simple_roots) {
            out = add(&out, &scale(a, *ci));
        }
        out
    }

    pub fn in_span(&self, v: &[Q]) -> bool {
        self.project(v) == v
    }

    pub fn coroot_pairing(v: &[Q], alpha: &[Q]) -> Q {
        q(2) * dot(v, alpha) / dot(alpha, alpha)
    }

    pub fn fundamental_weights(&self) -> Vec<QVec> {
        (0..self.rank())
            .map(|i| {
                let mut rhs = zero_vec(self.rank());
                rhs[i] = dot(&self.simple_roots[i], &self.simple_roots[i]) / q(2);
                let y = self.gram_inv.apply(&rhs);
                let mut w = zero_vec(self.ambient_dim);
                for (c, a) in y.iter().zip(&self.simple_roots) {
                    w = add(&w, &scale(a, *c));
                }
                w
            })
            .collect()
    }

    /// Highest root (maximal height among the positive roots).
    pub fn highest_root(&self) -> QVec {
        self.positive_roots
            .iter()
            .max_by(|a, b| self.height(a).cmp(&self.height(b)).then_with(|| a.cmp(b)))
            .cloned()
            .expect("nonempty root system")
    }

    pub fn is_dominant(&self, v: &[Q]) -> bool {
        self.simple_roots.iter().all(|a| !dot(v, a).is_negative())
    }

    /// Dominant element of the Weyl orbit of `v`.
    pub fn dominant_rep(&self, v: &[Q]) -> QVec {
        let mut w = v.to_vec();
        loop {
            match self.simple_roots.iter().find(|a| dot(&w, a).is_negative()) {
                Some(a) => w = reflect(&w, a),
                None => return w,
            }
        }
    }

    /// Weyl orbit of `v` by closure under simple reflections.
    pub fn orbit(&self, v: &[Q]) -> Vec<QVec> {
        let mut seen: HashSet<QVec> = HashSet::new();
        let mut queue = VecDeque::from([v.to_vec()]);
        seen.insert(v.to_vec());
        while let Some(w) = queue.pop_front() {
            for a in &self.simple_roots {
                let r = reflect(&w, a);
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        let mut out: Vec<QVec> = seen.into_iter().collect();
        out.sort();
        out
    }
}

fn simple_roots_of(label: CartanLabel) -> Vec<QVec> {
    let n = label.rank;
    let amb = label.ambient_dim();
    let e = |i: usize| unit_vec(amb, i);
    let diff = |i: usize, j: usize| sub(&e(i), &e(j));
    match label.family {
        Family::A => (0..n).map(|i| diff(i, i + 1)).collect(),
        Family::B | Family::BC => {
            let mut s: Vec<QVec> = (0..n - 1).map(|i| diff(i, i + 1)).collect();
            s.push(e(n - 1));
            s
        }
        Family::C => {
            let mut s: Vec<QVec> = (0..n - 1).map(|i| diff(i, i + 1)).collect();
            s.push(scale(&e(n - 1), q(2)));
            s
        }
        Family::D => {
            let mut s: Vec<QVec> = (0..n - 1).map(|i| diff(i, i + 1)).collect();
            s.push(add(&e(n - 2), &e(n - 1)));
            s
        }
        Family::E6 => {
            let h = qf(1, 2);
            let a1: QVec = vec![h, -h, -h, -h, -h, -h, -h, h];
            vec![a1, add(&e(0), &e(1)), diff(1, 0), diff(2, 1), diff(3, 2), diff(4, 3)]
        }
        Family::F4 => {
            let h = qf(1, 2);
            vec![diff(1, 2), diff(2, 3), e(3), vec![h, -h, -h, -h]]
        }
        Family::G2 => vec![diff(0, 1), vec![q(-2), q(1), q(1)]],
    }
}

fn reflection_closure(simple: &[QVec]) -> HashSet<QVec> {
    let mut seen: HashSet<QVec> = simple.iter().cloned().collect();
    let mut queue: VecDeque<QVec> = simple.iter().cloned().collect();
    while let Some(r) = queue.pop_front() {
        for a in simple {
            let s = reflect(&r, a);
            if seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
    seen
}

pub fn build(label: CartanLabel) -> Result<RootSystem> {
    let label = CartanLabel::new(label.family, label.rank)?;
    let simple = simple_roots_of(label);
    let mut all = reflection_closure(&simple);
    if label.family == Family::BC {
        let c = CartanLabel { family: Family::C, rank: label.rank };
        all.extend(reflection_closure(&simple_roots_of(c)));
    }
    let gram_inv = gram(&simple).inverse().ok_or_else(|| Error::Internal("simple roots are dependent".into()))?;
    let mut sys = RootSystem {
        label,
        ambient_dim: label.ambient_dim(),
        simple_roots: simple,
        positive_roots: Vec::new(),
        weyl_vector: Vec::new(),
        dim_g: 0,
        killing_denominator: Q::one(),
        gram_inv,
    };
    let mut pos: Vec<QVec> = all
        .into_iter()
        .filter(|r| sys.simple_coords(r).iter().all(|c| !c.is_negative()))
        .collect();
    pos.sort();
    let half_sum = pos.iter().fold(zero_vec(sys.ambient_dim), |acc, r| add(&acc, r));
    sys.weyl_vector = scale(&half_sum, qf(1, 2));
    let rank = sys.rank() as i64;
    // Sum over all roots of |a|^2 equals c * rank when sum_a a (x) a = c * Id on the span.
    let total: Q = pos.iter().map(|r| q(2) * dot(r, r)).sum();
    sys.killing_denominator = total / q(rank);
    sys.dim_g = sys.rank() as u64 + 2 * pos.len() as u64;
    sys.positive_roots = pos;
    Ok(sys)
}

/// Dual Killing form on weights: `(mu1 . mu2) / c`.
pub fn killing_dual_pairing(sys: &RootSystem, mu1: &[Q], mu2: &[Q]) -> Result<Q> {
    for v in [mu1, mu2] {
        if v.len() != sys.ambient_dim {
            return Err(Error::DimensionMismatch { expected: sys.ambient_dim, got: v.len() });
        }
    }
    Ok(dot(mu1, mu2) / sys.killing_denominator)
}

fn not_root_system(msg: impl Into<String>) -> Error {
    Error::NotARootSystem(msg.into())
}

/// Cartan label of an arbitrary (possibly non-reduced) root set.
pub fn classify(roots: &[QVec]) -> Result<CartanLabel> {
    let set: HashSet<&QVec> = roots.iter().collect();
    if set.is_empty() {
        return Err(not_root_system("empty set"));
    }
    let dim = roots[0].len();
    if roots.iter().any(|r| r.len() != dim) {
        return Err(not_root_system("vectors of different lengths"));
    }
    if roots.iter().any(|r| is_zero_vec(r)) {
        return Err(not_root_system("zero vector"));
    }
    for a in &set {
        if !set.contains(&neg(a)) {
            return Err(not_root_system(format!("{} without its negative", fmt_vec(a))));
        }
        for b in &set {
            if !RootSystem::coroot_pairing(b, a).is_integer() {
                return Err(not_root_system("non-integral Cartan integer"));
            }
            if !set.contains(&reflect(b, a)) {
                return Err(not_root_system("not closed under reflections"));
            }
        }
    }
    let indivisible: Vec<QVec> = set
        .iter()
        .filter(|a| !set.contains(&scale(a, qf(1, 2))))
        .map(|a| (*a).clone())
        .collect();
    let non_reduced = indivisible.len() != set.len();

    let positive: BTreeSet<QVec> = indivisible.iter().filter(|a| lex_positive(a)).cloned().collect();
    let simple: Vec<QVec> = positive
        .iter()
        .filter(|a| !positive.iter().any(|b| positive.contains(&sub(a, b))))
        .cloned()
        .collect();
    let label = classify_simple(&simple)?;
    if non_reduced {
        let r = label.rank;
        let ok = matches!((label.family, r), (Family::B, _) | (Family::A, 1));
        if !ok {
            return Err(Error::UnsupportedType(format!("non-reduced system with indivisible part {label}")));
        }
        return CartanLabel::new(Family::BC, r);
    }
    Ok(label)
}

/// Label from a set of simple roots via the Dynkin diagram.
fn classify_simple(simple: &[QVec]) -> Result<CartanLabel> {
    let r = simple.len();
    let cartan = |i: usize, j: usize| RootSystem::coroot_pairing(&simple[i], &simple[j]);
    let mut mult = vec![vec![0i64; r]; r];
    for i in 0..r {
        for j in 0..r {
            if i != j {
                let m = cartan(i, j) * cartan(j, i);
                if !m.is_integer() || *m.numer() > 3 {
                    return Err(not_root_system("invalid Cartan matrix"));
                }
                mult[i][j] = *m.numer();
            }
        }
    }
    let nbrs = |i: usize| (0..r).filter(|&j| mult[i][j] > 0).collect::<Vec<_>>();

    let mut comp = vec![usize::MAX; r];
    let mut ncomp = 0;
    for s in 0..r {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        comp[s] = ncomp;
        while let Some(i) = stack.pop() {
            for j in nbrs(i) {
                if comp[j] == usize::MAX {
                    comp[j] = ncomp;
                    stack.push(j);
                }
            }
        }
        ncomp += 1;
    }
    if ncomp == 2 && r == 2 {
        let (l0, l1) = (dot(&simple[0], &simple[0]), dot(&simple[1], &simple[1]));
        if l0 == l1 {
            return CartanLabel::new(Family::D, 2);
        }
    }
    if ncomp != 1 {
        return Err(Error::UnsupportedType(format!("reducible system with {ncomp} components")));
    }
    if r == 1 {
        return CartanLabel::new(Family::A, 1);
    }

    let mut max_edge = 0;
    let mut edge = (0, 0);
    for i in 0..r {
        for j in i + 1..r {
            if mult[i][j] > max_edge {
                max_edge = mult[i][j];
                edge = (i, j);
            }
        }
    }
    let degree: Vec<usize> = (0..r).map(|i| nbrs(i).len()).collect();
    match max_edge {
        3 => CartanLabel::new(Family::G2, r),
        2 => {
            if r == 2 {
                return CartanLabel::new(Family::B, 2);
            }
            let (i, j) = edge;
            let leaf = if degree[i] == 1 {
                i
            } else if degree[j] == 1 {
                j
            } else {
                return CartanLabel::new(Family::F4, r);
            };
            let other = if leaf == i { j } else { i };
            if dot(&simple[leaf], &simple[leaf]) < dot(&simple[other], &simple[other]) {
                CartanLabel::new(Family::B, r)
            } else {
                CartanLabel::new(Family::C, r)
            }
        }
        _ => {
            let Some(branch) = (0..r).find(|&i| degree[i] >= 3) else {
                return CartanLabel::new(Family::A, r);
            };
            if degree[branch] > 3 {
                return Err(Error::UnsupportedType("affine-like diagram".into()));
            }
            let mut arms: Vec<usize> = nbrs(branch)
                .into_iter()
                .map(|start| {
                    let (mut prev, mut cur, mut len) = (branch, start, 1);
                    loop {
                        let next: Vec<usize> = nbrs(cur).into_iter().filter(|&k| k != prev).collect();
                        match next.as_slice() {
                            [] => return len,
                            [k] => {
                                prev = cur;
                                cur = *k;
                                len += 1;
                            }
                            _ => return usize::MAX,
                        }
                    }
                })
                .collect();
            arms.sort();
            match arms.as_slice() {
                [1, 1, k] if *k != usize::MAX => CartanLabel::new(Family::D, k + 3),
                [1, 2, 2] => CartanLabel::new(Family::E6, 6),
                [1, 2, 3] => Err(Error::UnsupportedType("E7".into())),
                [1, 2, 4] => Err(Error::UnsupportedType("E8".into())),
                _ => Err(Error::UnsupportedType("unrecognized Dynkin diagram".into())),
            }
        }
    }
}

/// Closed-form Weyl vector per family, used as a cross-check.
pub fn closed_form_weyl_vector(label: CartanLabel) -> Option<QVec> {
    let n = label.rank as i64;
    let v = match label.family {
        Family::A => (0..=n).map(|i| qf(n - 2 * i, 2)).collect(),
        Family::B => (1..=n).map(|i| qf(2 * n - 2 * i + 1, 2)).collect(),
        Family::C => (1..=n).map(|i| q(n - i + 1)).collect(),
        Family::D => (1..=n).map(|i| q(n - i)).collect(),
        Family::BC => (1..=n).map(|i| qf(2 * n - 2 * i + 3, 2)).collect(),
        _ => return None,
    };
    Some(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn label(s: &str) -> CartanLabel {
        s.parse().unwrap()
    }

    #[test]
    fn d4_and_b3_weyl_vectors() {
        let d4 = build(label("D4")).unwrap();
        assert_eq!(d4.positive_roots.len(), 12);
        assert_eq!(d4.weyl_vector, qvec(&[3, 2, 1, 0]));
        let b3 = build(label("B3")).unwrap();
        assert_eq!(b3.positive_roots.len(), 9);
        assert_eq!(b3.weyl_vector, vec![qf(5, 2), qf(3, 2), qf(1, 2)]);
        assert_eq!(build(label("A1")).unwrap().positive_roots.len(), 1);
    }

    #[test]
    fn positive_root_counts() {
        for n in 1..=8usize {
            let ni = n;
            assert_eq!(build(label(&format!("A{n}"))).unwrap().positive_roots.len(), ni * (ni + 1) / 2);
            assert_eq!(build(label(&format!("B{n}"))).unwrap().positive_roots.len(), ni * ni);
            assert_eq!(build(label(&format!("C{n}"))).unwrap().positive_roots.len(), ni * ni);
            assert_eq!(build(label(&format!("BC{n}"))).unwrap().positive_roots.len(), ni * ni + ni);
            if n >= 2 {
                assert_eq!(build(label(&format!("D{n}"))).unwrap().positive_roots.len(), ni * (ni - 1));
            }
        }
        assert_eq!(build(label("E6")).unwrap().positive_roots.len(), 36);
        assert_eq!(build(label("F4")).unwrap().positive_roots.len(), 24);
        assert_eq!(build(label("G2")).unwrap().positive_roots.len(), 6);
        assert_eq!(build(label("E6")).unwrap().dim_g, 78);
    }

    #[test]
    fn rank_constraints() {
        assert!(CartanLabel::new(Family::D, 1).is_err());
        assert!(CartanLabel::new(Family::E6, 7).is_err());
        assert!(CartanLabel::new(Family::G2, 3).is_err());
        assert!(CartanLabel::new(Family::A, 0).is_err());
        assert!("E7".parse::<CartanLabel>().is_err());
        assert!("X3".parse::<CartanLabel>().is_err());
    }

    #[test]
    fn killing_denominators() {
        for n in 2..=6i64 {
            let d = build(label(&format!("D{n}"))).unwrap();
            assert_eq!(d.killing_denominator, q(2 * (2 * n - 2)));
            let b = build(label(&format!("B{n}"))).unwrap();
            assert_eq!(b.killing_denominator, q(2 * (2 * n - 1)));
            let a = build(label(&format!("A{}", n - 1))).unwrap();
            assert_eq!(a.killing_denominator, q(2 * n));
        }
        assert_eq!(build(label("E6")).unwrap().killing_denominator, q(24));
    }

    #[test]
    fn pairing_examples() {
        let d4 = build(label("D4")).unwrap();
        let e1 = qvec(&[1, 0, 0, 0]);
        assert_eq!(killing_dual_pairing(&d4, &e1, &e1).unwrap(), qf(1, 12));
        assert_eq!(killing_dual_pairing(&d4, &zero_vec(4), &e1).unwrap(), Q::zero());
        assert!(killing_dual_pairing(&d4, &zero_vec(3), &e1).is_err());
        let theta = d4.highest_root();
        assert_eq!(theta, qvec(&[1, 1, 0, 0]));
        let t2d = add(&theta, &scale(&d4.weyl_vector, q(2)));
        assert_eq!(killing_dual_pairing(&d4, &theta, &t2d).unwrap(), Q::one());
    }

    #[test]
    fn classify_examples() {
        let d4 = build(label("D4")).unwrap();
        assert_eq!(classify(&d4.roots()).unwrap(), label("D4"));
        let bc1 = vec![qvec(&[1]), qvec(&[-1]), qvec(&[2]), qvec(&[-2])];
        assert_eq!(classify(&bc1).unwrap(), label("BC1"));
        let bad = vec![qvec(&[1, 0]), qvec(&[-1, 0]), qvec(&[1, 1]), qvec(&[-1, -1])];
        assert!(classify(&bad).is_err());
        assert!(classify(&[qvec(&[1])]).is_err());
    }

    #[test]
    fn canonical_forms() {
        assert!(label("C2").is_isomorphic(label("B2")));
        assert!(label("D3").is_isomorphic(label("A3")));
        assert!(label("B1").is_isomorphic(label("A1")));
        assert!(!label("B3").is_isomorphic(label("C3")));
    }

    #[test]
    fn fundamental_weights_are_dual() {
        for s in ["A3", "B3", "C3", "D4", "E6", "F4", "G2"] {
            let sys = build(label(s)).unwrap();
            let w = sys.fundamental_weights();
            for (i, wi) in w.iter().enumerate() {
                for (j, a) in sys.simple_roots.iter().enumerate() {
                    let expect = if i == j { Q::one() } else { Q::zero() };
                    assert_eq!(RootSystem::coroot_pairing(wi, a), expect, "{s} {i} {j}");
                }
            }
        }
    }
}
