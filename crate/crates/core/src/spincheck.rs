//! Spinoriality criteria: the parity condition on the identity component,
//! the eigenvalue condition at g0 (or -I), and the character criterion.

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::folding::{builtin_involution, fold, twisted_char_g0, DiagramInvolution, FoldedSystem};
use crate::rational::*;
use crate::repcalc::{
    casimir_trace, char_from_table, freudenthal_multiplicities, is_dominant, rep_type, tau_action, weyl_dim,
    HighestWeight, RepType,
};
use crate::rootsys::{build, CartanLabel, Family, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupId {
    /// O(l), l even.
    OEven(usize),
    /// O(l), l odd.
    OOdd(usize),
    SO(usize),
    GLR(usize),
    Semidirect { sys: Arc<RootSystem>, involution: DiagramInvolution, cochar_generators: Vec<QVec> },
}

impl GroupId {
    pub fn orthogonal(l: usize) -> Result<Self> {
        match l {
            0 | 1 => Err(Error::UnsupportedGroup(format!("O({l})"))),
            l if l % 2 == 0 => Ok(GroupId::OEven(l)),
            l => Ok(GroupId::OOdd(l)),
        }
    }

    /// Semidirect product with the built-in involution; simply connected unless
    /// cocharacter generators of the fundamental group are supplied.
    pub fn semidirect(label: CartanLabel, cochar_generators: Vec<QVec>) -> Result<Self> {
        let sys = Arc::new(build(label)?);
        let involution = builtin_involution(&sys)?;
        Ok(GroupId::Semidirect { sys, involution, cochar_generators })
    }

    /// Orthogonal group underlying the descriptor (GL(n,R) reduces to O(n)).
    fn compact(&self) -> GroupId {
        match self {
            GroupId::GLR(n) => GroupId::orthogonal(*n).unwrap_or(GroupId::OEven(*n)),
            g => g.clone(),
        }
    }

    pub fn root_system(&self) -> Result<Arc<RootSystem>> {
        let label = match self.compact() {
            GroupId::OEven(l) | GroupId::SO(l) if l >= 4 && l % 2 == 0 => CartanLabel::new(Family::D, l / 2)?,
            GroupId::OOdd(l) | GroupId::SO(l) if l >= 3 && l % 2 == 1 => CartanLabel::new(Family::B, l / 2)?,
            GroupId::Semidirect { sys, .. } => return Ok(sys),
            g => return Err(Error::UnsupportedGroup(format!("{g} has no semisimple identity component"))),
        };
        Ok(Arc::new(build(label)?))
    }

    fn is_orthogonal_family(&self) -> bool {
        !matches!(self, GroupId::Semidirect { .. })
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupId::OEven(l) | GroupId::OOdd(l) => write!(f, "O:{l}"),
            GroupId::SO(l) => write!(f, "SO:{l}"),
            GroupId::GLR(n) => write!(f, "GL:{n}"),
            GroupId::Semidirect { sys, .. } => write!(f, "G:{}xC2", sys.label),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OddChar {
    Trivial,
    Sgn,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum O2Rep {
    Trivial,
    Det,
    /// Induced from the rotation character of weight n >= 1.
    Rho(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Variant {
    TypeI(QVec),
    TypeII(QVec, Sign),
    OddProduct(QVec, OddChar),
    O2(O2Rep),
    /// Irreducible representation of a connected group SO(m).
    Irreducible(QVec),
    ReducibleSum(Vec<Component>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Component {
    Orthogonal(Variant),
    /// phi + dual(phi).
    DualPair(Variant),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepDescriptor {
    pub group: GroupId,
    pub variant: Variant,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residues {
    pub q_mod_2: i64,
    pub m_mod_4: u64,
    pub dim_minus_chi_mod_8: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinVerdict {
    pub spinorial: bool,
    pub q_value: Q,
    pub q_parity_ok: bool,
    pub m: u64,
    pub m_condition_ok: bool,
    pub chi_g0: Option<Q>,
    /// Dimension of the representation space.
    pub dim: u64,
    pub residues: Residues,
}

/// Half the gcd of the Killing norms of the given cocharacters.
pub fn p_nu(sys: &RootSystem, cochar_generators: &[QVec]) -> Result<Q> {
    let mut g: i64 = 0;
    for nu in cochar_generators {
        if nu.len() != sys.ambient_dim {
            return Err(Error::DimensionMismatch { expected: sys.ambient_dim, got: nu.len() });
        }
        let mut norm: i64 = 0;
        for a in &sys.positive_roots {
            let p = dot(a, nu);
            if !p.is_integer() {
                return Err(Error::NonIntegralPairing(format!("<{}, {}>", fmt_vec(a), fmt_vec(nu))));
            }
            norm += 2 * p.numer() * p.numer();
        }
        g = g.gcd(&norm);
    }
    Ok(qf(g, 2))
}

pub fn c2_spin(m: u64) -> bool {
    matches!(m % 4, 0 | 3)
}

fn mod8_ok(diff: i64) -> bool {
    matches!(diff.rem_euclid(8), 0 | 6)
}

/// Character criterion: both differences are 0 or 6 mod 8.
pub fn char_criterion(chi_identity: i64, chi_d1: i64, chi_d2: i64) -> bool {
    mod8_ok(chi_identity - chi_d1) && mod8_ok(chi_identity - chi_d2)
}

/// Multiplier p / dim g for the group's parity quantity.
fn parity_coefficient(group: &GroupId, sys: &RootSystem) -> Result<Q> {
    let n = sys.rank() as i64;
    Ok(match group.compact() {
        GroupId::OOdd(_) | GroupId::SO(_) if sys.label.family == Family::B => qf(2 * n - 1, n * (2 * n + 1)),
        GroupId::OEven(_) | GroupId::SO(_) => qf(2 * (n - 1), n * (2 * n - 1)),
        GroupId::Semidirect { cochar_generators, .. } => {
            p_nu(sys, &cochar_generators)? / q(sys.dim_g as i64)
        }
        g => return Err(Error::UnsupportedGroup(g.to_string())),
    })
}

fn weight_for(group: &GroupId, coords: &[Q]) -> Result<HighestWeight> {
    let sys = group.root_system()?;
    if group.is_orthogonal_family() && !is_integer_vec(coords) {
        return Err(Error::SpinWeight(fmt_vec(coords)));
    }
    let w = HighestWeight::new(sys, coords.to_vec())?;
    if !is_dominant(&w) {
        return Err(Error::NotDominant(fmt_vec(coords)));
    }
    Ok(w)
}

struct Context {
    sys: Arc<RootSystem>,
    tau: DiagramInvolution,
    folded: FoldedSystem,
}

fn twisted_context(group: &GroupId) -> Result<Context> {
    let sys = group.root_system()?;
    let tau = match group {
        GroupId::Semidirect { involution, .. } => involution.clone(),
        _ => builtin_involution(&sys)?,
    };
    let folded = fold(&sys, &tau)?;
    Ok(Context { sys, tau, folded })
}

fn require_integral(x: Q, what: &str) -> Result<i64> {
    if x.is_integer() {
        Ok(*x.numer())
    } else {
        Err(Error::Internal(format!("{what} = {} is not an integer", fmt_q(&x))))
    }
}

/// O(4) parity quantity of V_{a,b}, a = l1 - l2, b = l1 + l2.
pub fn q_o4(a: i64, b: i64) -> Q {
    let c3 = |k: i64| qf(k * (k - 1) * (k - 2), 6);
    (q(a + 1) * c3(b + 2) + q(b + 1) * c3(a + 2)) / q(4)
}

fn is_o4(group: &GroupId) -> bool {
    matches!(group.compact(), GroupId::OEven(4))
}

pub fn q_type_i(group: &GroupId, lambda: &HighestWeight) -> Result<Q> {
    let ctx = twisted_context(group)?;
    if rep_type(lambda, &ctx.tau) != RepType::TypeI {
        return Err(Error::TypeMismatch("q_type_i needs a weight not fixed by the involution".into()));
    }
    let other = tau_action(lambda, &ctx.tau);
    if is_o4(group) {
        let (a, b) = o4_params(lambda);
        let (a2, b2) = o4_params(&other);
        return Ok(q_o4(a, b) + q_o4(a2, b2));
    }
    let coeff = parity_coefficient(group, &ctx.sys)?;
    Ok(coeff * q(weyl_dim(lambda)? as i64) * (casimir_trace(lambda)? + casimir_trace(&other)?))
}

pub fn q_type_ii(group: &GroupId, lambda: &HighestWeight) -> Result<Q> {
    let ctx = twisted_context(group)?;
    if rep_type(lambda, &ctx.tau) != RepType::TypeII {
        return Err(Error::TypeMismatch("q_type_ii needs a weight fixed by the involution".into()));
    }
    if is_o4(group) {
        let (a, b) = o4_params(lambda);
        return Ok(q_o4(a, b));
    }
    q_connected(group, lambda)
}

fn q_connected(group: &GroupId, lambda: &HighestWeight) -> Result<Q> {
    let coeff = parity_coefficient(group, &lambda.sys)?;
    Ok(coeff * q(weyl_dim(lambda)? as i64) * casimir_trace(lambda)?)
}

fn o4_params(lambda: &HighestWeight) -> (i64, i64) {
    let c = &lambda.coords;
    (*(c[0] - c[1]).numer(), *(c[0] + c[1]).numer())
}

/// Intermediate data for one irreducible summand.
#[derive(Debug, Clone)]
struct Parts {
    q: Q,
    m: u64,
    dim: u64,
    chi: Option<Q>,
}

fn irreducible_parts(group: &GroupId, variant: &Variant) -> Result<Parts> {
    let g = group.compact();
    match (variant, &g) {
        (Variant::O2(rep), GroupId::OEven(2)) => Ok(match rep {
            O2Rep::Trivial => Parts { q: Q::zero(), m: 0, dim: 1, chi: Some(q(1)) },
            O2Rep::Det => Parts { q: Q::zero(), m: 1, dim: 1, chi: Some(q(-1)) },
            O2Rep::Rho(n) if *n >= 1 => Parts { q: q(*n as i64), m: 1, dim: 2, chi: Some(Q::zero()) },
            O2Rep::Rho(_) => return Err(Error::MalformedDescriptor("rho_n needs n >= 1".into())),
        }),
        (Variant::O2(_), _) => Err(Error::MalformedDescriptor("O(2) representations need group O:2".into())),
        (_, GroupId::OEven(2)) => Err(Error::MalformedDescriptor("O(2) takes trivial, det or rho_n".into())),
        (Variant::TypeI(c), GroupId::OEven(_) | GroupId::Semidirect { .. }) => {
            let w = weight_for(group, c)?;
            let dim = weyl_dim(&w)?;
            Ok(Parts { q: q_type_i(group, &w)?, m: dim, dim: 2 * dim, chi: Some(Q::zero()) })
        }
        (Variant::TypeII(c, sign), GroupId::OEven(_) | GroupId::Semidirect { .. }) => {
            let w = weight_for(group, c)?;
            let ctx = twisted_context(group)?;
            let dim = weyl_dim(&w)?;
            let chi = twisted_char_g0(&w, &ctx.folded)? * q(sign.value());
            let m2 = q(dim as i64) - chi;
            let m = require_integral(m2 / q(2), "eigenvalue multiplicity")?;
            if m < 0 {
                return Err(Error::Internal("negative eigenvalue multiplicity".into()));
            }
            Ok(Parts { q: q_type_ii(group, &w)?, m: m as u64, dim, chi: Some(chi) })
        }
        (Variant::OddProduct(c, rho), GroupId::OOdd(_)) => {
            let w = weight_for(group, c)?;
            let dim = weyl_dim(&w)?;
            let m = if *rho == OddChar::Sgn { dim } else { 0 };
            Ok(Parts { q: q_connected(group, &w)?, m, dim, chi: None })
        }
        (Variant::Irreducible(c), GroupId::SO(_)) => {
            let w = weight_for(group, c)?;
            Ok(Parts { q: q_connected(group, &w)?, m: 0, dim: weyl_dim(&w)?, chi: None })
        }
        (Variant::ReducibleSum(_), _) => Err(Error::MalformedDescriptor("nested sums are not allowed".into())),
        (v, g) => Err(Error::MalformedDescriptor(format!("variant {} does not apply to {g}", variant_name(v)))),
    }
}

fn variant_name(v: &Variant) -> &'static str {
    match v {
        Variant::TypeI(_) => "TypeI",
        Variant::TypeII(..) => "TypeII",
        Variant::OddProduct(..) => "OddProduct",
        Variant::O2(_) => "O2",
        Variant::Irreducible(_) => "Irreducible",
        Variant::ReducibleSum(_) => "ReducibleSum",
    }
}

fn parts_of(rep: &RepDescriptor) -> Result<Parts> {
    match &rep.variant {
        Variant::ReducibleSum(components) => {
            if components.is_empty() {
                return Err(Error::MalformedDescriptor("empty sum".into()));
            }
            let mut total = Parts { q: Q::zero(), m: 0, dim: 0, chi: Some(Q::zero()) };
            for c in components {
                let (v, k) = match c {
                    Component::Orthogonal(v) => (v, 1),
                    Component::DualPair(v) => (v, 2),
                };
                let p = irreducible_parts(&rep.group, v)?;
                total.q += p.q * q(k as i64);
                total.m += p.m * k;
                total.dim += p.dim * k;
                total.chi = match (total.chi, p.chi) {
                    (Some(a), Some(b)) => Some(a + b * q(k as i64)),
                    _ => None,
                };
            }
            Ok(total)
        }
        v => irreducible_parts(&rep.group, v),
    }
}

/// Multiplicity of -1 as an eigenvalue of the image of g0 (or -I for odd l).
pub fn m_minus_one(rep: &RepDescriptor) -> Result<u64> {
    Ok(parts_of(rep)?.m)
}

pub fn check_spinorial(rep: &RepDescriptor) -> Result<SpinVerdict> {
    let p = parts_of(rep)?;
    let q_int = require_integral(p.q, "parity quantity")?;
    let q_parity_ok = q_int.is_even();
    let m_condition_ok = c2_spin(p.m);
    // m = (dim - chi) / 2 whenever chi at g0 is defined
    let dim_minus_chi_mod_8 = match p.chi {
        Some(chi) => {
            let d = require_integral(q(p.dim as i64) - chi, "dim - chi")?;
            if mod8_ok(d) != m_condition_ok {
                return Err(Error::Internal("mod 8 and mod 4 forms of the eigenvalue condition disagree".into()));
            }
            Some(d.rem_euclid(8))
        }
        None => None,
    };
    Ok(SpinVerdict {
        spinorial: q_parity_ok && m_condition_ok,
        q_value: p.q,
        q_parity_ok,
        m: p.m,
        m_condition_ok,
        chi_g0: p.chi,
        dim: p.dim,
        residues: Residues { q_mod_2: q_int.rem_euclid(2), m_mod_4: p.m % 4, dim_minus_chi_mod_8 },
    })
}

/// Adjoint representation of O(l).
pub fn adjoint_descriptor(l: usize) -> Result<RepDescriptor> {
    if l < 4 {
        return Err(Error::UnsupportedGroup(format!("adjoint of O({l}) needs l >= 4")));
    }
    let n = l / 2;
    let mut lam = vec![q(0); n];
    lam[0] = q(1);
    lam[1] = q(1);
    let group = GroupId::orthogonal(l)?;
    let variant = if l == 4 {
        Variant::TypeI(lam)
    } else if l % 2 == 0 {
        Variant::TypeII(lam, Sign::Plus)
    } else {
        Variant::OddProduct(lam, OddChar::Trivial)
    };
    Ok(RepDescriptor { group, variant })
}

pub fn adjoint_verdict(l: usize) -> Result<SpinVerdict> {
    check_spinorial(&adjoint_descriptor(l)?)
}

/// Standard representation of O(l).
pub fn standard_descriptor(l: usize) -> Result<RepDescriptor> {
    let group = GroupId::orthogonal(l)?;
    let variant = match l {
        2 => Variant::O2(O2Rep::Rho(1)),
        l if l % 2 == 0 => {
            let mut lam = vec![q(0); l / 2];
            lam[0] = q(1);
            Variant::TypeII(lam, Sign::Plus)
        }
        l => {
            let mut lam = vec![q(0); l / 2];
            lam[0] = q(1);
            Variant::OddProduct(lam, OddChar::Sgn)
        }
    };
    Ok(RepDescriptor { group, variant })
}

/// Character values at 1, d1 = diag(-1,1,...,1) and d2 = diag(-1,-1,1,...,1).
pub fn char_values_for(rep: &RepDescriptor, cap: u64) -> Result<(i64, i64, i64)> {
    match &rep.variant {
        Variant::ReducibleSum(cs) => {
            let mut acc = (0, 0, 0);
            for c in cs {
                let (v, k) = match c {
                    Component::Orthogonal(v) => (v, 1),
                    Component::DualPair(v) => (v, 2),
                };
                let r = char_values_for(&RepDescriptor { group: rep.group.clone(), variant: v.clone() }, cap)?;
                acc = (acc.0 + k * r.0, acc.1 + k * r.1, acc.2 + k * r.2);
            }
            Ok(acc)
        }
        v => irreducible_char_values(&rep.group.compact(), v, cap),
    }
}

fn torus_signs(n: usize, minus: usize) -> Vec<i8> {
    (0..n).map(|i| if i < minus { -1 } else { 1 }).collect()
}

fn irreducible_char_values(group: &GroupId, variant: &Variant, cap: u64) -> Result<(i64, i64, i64)> {
    match (variant, group) {
        (Variant::O2(rep), GroupId::OEven(2)) => Ok(match rep {
            O2Rep::Trivial => (1, 1, 1),
            O2Rep::Det => (1, -1, 1),
            O2Rep::Rho(n) => (2, 0, if n % 2 == 0 { 2 } else { -2 }),
        }),
        (Variant::TypeI(c), GroupId::OEven(_)) => {
            let w = weight_for(group, c)?;
            let ctx = twisted_context(group)?;
            let other = tau_action(&w, &ctx.tau);
            let n = ctx.sys.ambient_dim;
            let d2 = char_from_table(&freudenthal_multiplicities(&w, cap)?, &torus_signs(n, 1))?
                + char_from_table(&freudenthal_multiplicities(&other, cap)?, &torus_signs(n, 1))?;
            Ok((2 * weyl_dim(&w)? as i64, 0, d2))
        }
        (Variant::TypeII(c, sign), GroupId::OEven(_)) => {
            let w = weight_for(group, c)?;
            let ctx = twisted_context(group)?;
            let chi = twisted_char_g0(&w, &ctx.folded)? * q(sign.value());
            let table = freudenthal_multiplicities(&w, cap)?;
            let d2 = char_from_table(&table, &torus_signs(ctx.sys.ambient_dim, 1))?;
            Ok((table.total() as i64, require_integral(chi, "twisted character")?, d2))
        }
        (Variant::OddProduct(c, rho), GroupId::OOdd(_)) => {
            let w = weight_for(group, c)?;
            let n = w.sys.ambient_dim;
            let table = freudenthal_multiplicities(&w, cap)?;
            let minus_i = if *rho == OddChar::Sgn { -1 } else { 1 };
            let d1 = minus_i * char_from_table(&table, &torus_signs(n, n))?;
            let d2 = char_from_table(&table, &torus_signs(n, 1))?;
            Ok((table.total() as i64, d1, d2))
        }
        (v, g) => Err(Error::UnsupportedGroup(format!("character values of {} on {g}", variant_name(v)))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(l: usize, v: Variant) -> RepDescriptor {
        RepDescriptor { group: GroupId::orthogonal(l).unwrap(), variant: v }
    }

    #[test]
    fn p_nu_examples() {
        let b3 = build("B3".parse().unwrap()).unwrap();
        assert_eq!(p_nu(&b3, &[qvec(&[1, 0, 0])]).unwrap(), q(5));
        assert_eq!(p_nu(&b3, &[]).unwrap(), Q::zero());
        let d4 = build("D4".parse().unwrap()).unwrap();
        assert_eq!(p_nu(&d4, &[qvec(&[1, 0, 0, 0])]).unwrap(), q(6));
        assert!(p_nu(&d4, &[vec![qf(1, 3), q(0), q(0), q(0)]]).is_err());
        // consistency with the O(n) coefficients
        for n in 2..=6i64 {
            let b = build(CartanLabel::new(Family::B, n as usize).unwrap()).unwrap();
            let mut e1 = vec![q(0); n as usize];
            e1[0] = q(1);
            assert_eq!(p_nu(&b, &[e1.clone()]).unwrap() / q(b.dim_g as i64), qf(2 * n - 1, n * (2 * n + 1)));
            let d = build(CartanLabel::new(Family::D, n as usize).unwrap()).unwrap();
            assert_eq!(p_nu(&d, &[e1]).unwrap() / q(d.dim_g as i64), qf(2 * (n - 1), n * (2 * n - 1)));
        }
    }

    #[test]
    fn c2_spin_values() {
        assert!(c2_spin(0));
        assert!(c2_spin(3));
        assert!(!c2_spin(1));
        assert!(c2_spin(7));
        assert!(!c2_spin(2));
    }

    #[test]
    fn o8_standard() {
        for (sign, m, chi) in [(Sign::Plus, 1, 6), (Sign::Minus, 7, -6)] {
            let v = check_spinorial(&o(8, Variant::TypeII(qvec(&[1, 0, 0, 0]), sign))).unwrap();
            assert_eq!(v.q_value, q(1));
            assert_eq!(v.m, m);
            assert_eq!(v.chi_g0, Some(q(chi)));
            assert!(!v.spinorial);
        }
        let adj = check_spinorial(&o(8, Variant::TypeII(qvec(&[1, 1, 0, 0]), Sign::Plus))).unwrap();
        assert_eq!(adj.q_value, q(6));
        assert_eq!(adj.m, 7);
        assert!(adj.spinorial);
    }

    #[test]
    fn type_i_q_two_ways() {
        for l in [6usize, 8] {
            let n = l / 2;
            let lam = vec![q(1); n];
            let g = GroupId::orthogonal(l).unwrap();
            let w = weight_for(&g, &lam).unwrap();
            let d = weyl_dim(&w).unwrap() as i64;
            let dotv = dot(&w.coords, &add(&w.coords, &scale(&w.sys.weyl_vector, q(2))));
            // q = dim * (lambda . (lambda + 2 delta)) / dim g
            let expect = q(d) * dotv / q(w.sys.dim_g as i64);
            assert_eq!(q_type_i(&g, &w).unwrap(), expect);
        }
        let g = GroupId::orthogonal(8).unwrap();
        assert!(q_type_i(&g, &weight_for(&g, &qvec(&[1, 0, 0, 0])).unwrap()).is_err());
        assert!(q_type_ii(&g, &weight_for(&g, &qvec(&[1, 1, 1, 1])).unwrap()).is_err());
    }

    #[test]
    fn o4_closed_form_matches_general_coefficient() {
        let g = GroupId::orthogonal(4).unwrap();
        let sys = g.root_system().unwrap();
        for l1 in 0..=4i64 {
            for l2 in -l1..=l1 {
                let w = HighestWeight::new(sys.clone(), qvec(&[l1, l2])).unwrap();
                let general = qf(1, 3) * q(weyl_dim(&w).unwrap() as i64) * casimir_trace(&w).unwrap();
                assert_eq!(q_o4(l1 - l2, l1 + l2), general);
            }
        }
    }

    #[test]
    fn o4_standard_minus_sign() {
        let v = check_spinorial(&o(4, Variant::TypeII(qvec(&[1, 0]), Sign::Minus))).unwrap();
        assert_eq!(v.q_value, q(1));
        assert!(!v.spinorial);
    }

    #[test]
    fn adjoint_pattern() {
        for l in 4..=13 {
            let v = adjoint_verdict(l).unwrap();
            assert_eq!(v.spinorial, l % 4 == 0, "l = {l}");
        }
        assert!(adjoint_verdict(3).is_err());
    }

    #[test]
    fn o2_cases() {
        for n in 1..=10 {
            assert!(!check_spinorial(&o(2, Variant::O2(O2Rep::Rho(n)))).unwrap().spinorial);
        }
        assert!(!check_spinorial(&o(2, Variant::O2(O2Rep::Det))).unwrap().spinorial);
        assert!(check_spinorial(&o(2, Variant::O2(O2Rep::Trivial))).unwrap().spinorial);
        assert!(check_spinorial(&o(8, Variant::O2(O2Rep::Det))).is_err());
    }

    #[test]
    fn char_criterion_examples() {
        for n in 3..=12 {
            assert!(!char_criterion(n, n - 2, n - 4));
        }
        assert!(char_criterion(1, 1, 1));
        assert!(!char_criterion(2, -2, 2));
    }

    #[test]
    fn char_values_examples() {
        let cap = 1_000_000;
        let std8 = o(8, Variant::TypeII(qvec(&[1, 0, 0, 0]), Sign::Plus));
        assert_eq!(char_values_for(&std8, cap).unwrap(), (8, 6, 4));
        let triv = o(8, Variant::TypeII(qvec(&[0, 0, 0, 0]), Sign::Plus));
        assert_eq!(char_values_for(&triv, cap).unwrap(), (1, 1, 1));
        let t1 = o(8, Variant::TypeI(qvec(&[1, 1, 1, 1])));
        let (c1, d1, _) = char_values_for(&t1, cap).unwrap();
        assert_eq!((c1, d1), (70, 0));
        let std7 = o(7, Variant::OddProduct(qvec(&[1, 0, 0]), OddChar::Sgn));
        assert_eq!(char_values_for(&std7, cap).unwrap(), (7, 5, 3));
    }

    #[test]
    fn rejects_bad_descriptors() {
        let half = vec![qf(1, 2); 4];
        assert!(matches!(check_spinorial(&o(8, Variant::TypeII(half, Sign::Plus))), Err(Error::SpinWeight(_))));
        assert!(check_spinorial(&o(8, Variant::OddProduct(qvec(&[1, 0, 0, 0]), OddChar::Sgn))).is_err());
        assert!(check_spinorial(&o(8, Variant::TypeII(qvec(&[-1, 0, 0, 0]), Sign::Plus))).is_err());
        assert!(GroupId::orthogonal(1).is_err());
    }

    #[test]
    fn single_component_sum_matches_irreducible() {
        let v = Variant::TypeII(qvec(&[2, 1, 0, 0]), Sign::Minus);
        let a = check_spinorial(&o(8, v.clone())).unwrap();
        let b = check_spinorial(&o(8, Variant::ReducibleSum(vec![Component::Orthogonal(v)]))).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn semidirect_defaults_to_simply_connected() {
        let g = GroupId::semidirect("A3".parse().unwrap(), vec![]).unwrap();
        let v = check_spinorial(&RepDescriptor { group: g, variant: Variant::TypeII(qvec(&[1, 0, 0, -1]), Sign::Plus) })
            .unwrap();
        assert_eq!(v.q_value, Q::zero());
        assert_eq!(v.chi_g0, Some(q(5)));
        assert_eq!(v.m, 5);
    }
}
