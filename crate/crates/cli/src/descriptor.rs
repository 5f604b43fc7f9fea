//! Turning command-line strings into group and representation descriptors.

use std::sync::Arc;

use pinlift_core::folding::builtin_involution;
use pinlift_core::rational::{fmt_vec, parse_vec, QVec};
use pinlift_core::repcalc::{rep_type, HighestWeight, RepType};
use pinlift_core::rootsys::{CartanLabel, RootSystem};
use pinlift_core::spincheck::{GroupId, O2Rep, OddChar, RepDescriptor, Sign, Variant};
use pinlift_core::{Error, Result};

use crate::args::Rho;

pub const SIGN_NOTE: &str =
    "sign convention: '+' labels the extension on which g0 has trace equal to the positive twisted character";

pub fn parse_group(s: &str, cochars: &[String]) -> Result<GroupId> {
    let bad = || Error::Parse(format!("malformed group spec {s:?}; expected O:<n>, SO:<n>, GL:<n> or G:<type>xC2"));
    let (kind, rest) = s.trim().split_once(':').ok_or_else(bad)?;
    if kind != "G" && !cochars.is_empty() {
        return Err(Error::MalformedDescriptor("--cochar only applies to G:<type>xC2".into()));
    }
    let size = || rest.parse::<usize>().map_err(|_| bad());
    match kind {
        "O" => GroupId::orthogonal(size()?),
        "SO" => match size()? {
            n if n >= 3 => Ok(GroupId::SO(n)),
            n => Err(Error::UnsupportedGroup(format!("SO({n})"))),
        },
        "GL" => match size()? {
            n if n >= 2 => Ok(GroupId::GLR(n)),
            n => Err(Error::UnsupportedGroup(format!("GL({n},R)"))),
        },
        "G" => {
            let label = rest.strip_suffix("xC2").ok_or_else(bad)?;
            let label: CartanLabel = label.parse()?;
            let gens = cochars.iter().map(|c| parse_vec(c)).collect::<Result<Vec<QVec>>>()?;
            GroupId::semidirect(label, gens)
        }
        _ => Err(bad()),
    }
}

fn is_o2(group: &GroupId) -> bool {
    matches!(group, GroupId::OEven(2) | GroupId::GLR(2))
}

fn parse_o2(weight: &str) -> Result<O2Rep> {
    match weight.trim() {
        "0" | "trivial" => Ok(O2Rep::Trivial),
        "det" => Ok(O2Rep::Det),
        w => match w.parse::<u32>() {
            Ok(n) if n >= 1 => Ok(O2Rep::Rho(n)),
            _ => Err(Error::Parse(format!("O(2) weight must be 0, det or a positive integer, got {w:?}"))),
        },
    }
}

/// Representation descriptor plus any warnings raised while resolving defaults.
pub struct Resolved {
    pub rep: RepDescriptor,
    pub warnings: Vec<String>,
}

pub fn resolve(group: GroupId, weight: &str, sign: Option<char>, rho: Option<Rho>) -> Result<Resolved> {
    let mut warnings = Vec::new();
    if is_o2(&group) {
        if sign.is_some() || rho.is_some() {
            warnings.push("--sign and --rho are ignored for O(2)".to_string());
        }
        let variant = Variant::O2(parse_o2(weight)?);
        return Ok(Resolved { rep: RepDescriptor { group, variant }, warnings });
    }
    let sys = group.root_system()?;
    let lam = HighestWeight::new(sys.clone(), parse_vec(weight)?)?;
    let variant = variant_for(&group, &sys, &lam, sign, rho, &mut warnings)?;
    Ok(Resolved { rep: RepDescriptor { group, variant }, warnings })
}

/// Descriptor for an already-validated weight; used by both single checks and table sweeps.
pub fn variant_for(
    group: &GroupId,
    sys: &Arc<RootSystem>,
    lam: &HighestWeight,
    sign: Option<char>,
    rho: Option<Rho>,
    warnings: &mut Vec<String>,
) -> Result<Variant> {
    if !sys.is_dominant(&lam.coords) {
        return Err(Error::NotDominant(fmt_vec(&lam.coords)));
    }
    let coords = lam.coords.clone();
    let odd = matches!(group, GroupId::OOdd(_)) || matches!(group, GroupId::GLR(n) if n % 2 == 1);
    let connected = matches!(group, GroupId::SO(_));
    if (connected || odd) && sign.is_some() {
        warnings.push("--sign is ignored for this group".into());
    }
    if connected {
        if rho.is_some() {
            warnings.push("--rho is ignored for SO(n)".into());
        }
        return Ok(Variant::Irreducible(coords));
    }
    if odd {
        let ch = match rho {
            Some(Rho::Sgn) => OddChar::Sgn,
            Some(Rho::Trivial) => OddChar::Trivial,
            None => {
                warnings.push("no --rho given; using the trivial character of {+-I}".into());
                OddChar::Trivial
            }
        };
        return Ok(Variant::OddProduct(coords, ch));
    }
    if rho.is_some() {
        warnings.push("--rho is ignored for this group".into());
    }
    let tau = builtin_involution(sys)?;
    match rep_type(lam, &tau) {
        RepType::TypeI => {
            if sign.is_some() {
                warnings.push("--sign is ignored: the weight is not fixed by the involution".into());
            }
            Ok(Variant::TypeI(coords))
        }
        RepType::TypeII => {
            let s = match sign {
                Some('-') => Sign::Minus,
                Some(_) => Sign::Plus,
                None => {
                    warnings.push("no --sign given; using +".into());
                    Sign::Plus
                }
            };
            warnings.push(SIGN_NOTE.into());
            Ok(Variant::TypeII(coords, s))
        }
    }
}

pub fn variant_kind(v: &Variant) -> &'static str {
    match v {
        Variant::TypeI(_) => "induced",
        Variant::TypeII(..) => "extended",
        Variant::OddProduct(..) => "odd-product",
        Variant::O2(_) => "o2",
        Variant::Irreducible(_) => "connected",
        Variant::ReducibleSum(_) => "sum",
    }
}

pub fn variant_weight(v: &Variant) -> String {
    match v {
        Variant::TypeI(c) | Variant::TypeII(c, _) | Variant::OddProduct(c, _) | Variant::Irreducible(c) => fmt_vec(c),
        Variant::O2(O2Rep::Trivial) => "0".into(),
        Variant::O2(O2Rep::Det) => "det".into(),
        Variant::O2(O2Rep::Rho(n)) => n.to_string(),
        Variant::ReducibleSum(_) => String::new(),
    }
}

pub fn variant_sign(v: &Variant) -> Option<&'static str> {
    match v {
        Variant::TypeII(_, Sign::Plus) => Some("+"),
        Variant::TypeII(_, Sign::Minus) => Some("-"),
        _ => None,
    }
}

pub fn variant_rho(v: &Variant) -> Option<&'static str> {
    match v {
        Variant::OddProduct(_, OddChar::Trivial) => Some("trivial"),
        Variant::OddProduct(_, OddChar::Sgn) => Some("sgn"),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_specs() {
        assert_eq!(parse_group("O:8", &[]).unwrap(), GroupId::OEven(8));
        assert_eq!(parse_group("O:7", &[]).unwrap(), GroupId::OOdd(7));
        assert_eq!(parse_group("SO:5", &[]).unwrap(), GroupId::SO(5));
        assert_eq!(parse_group("GL:3", &[]).unwrap(), GroupId::GLR(3));
        let g = parse_group("G:A3xC2", &[]).unwrap();
        assert_eq!(g.to_string(), "G:A3xC2");
        for bad in ["O8", "O:x", "G:A3", "G:B3xC2", "X:4", "O:1", "SO:2"] {
            assert!(parse_group(bad, &[]).is_err(), "{bad}");
        }
        assert!(parse_group("O:8", &["1,0".into()]).is_err());
    }

    #[test]
    fn type_is_detected_from_weight() {
        let r = resolve(GroupId::OEven(8), "1,1,1,1", Some('+'), None).unwrap();
        assert!(matches!(r.rep.variant, Variant::TypeI(_)));
        assert!(!r.warnings.is_empty());
        let r = resolve(GroupId::OEven(8), "1,0,0,0", Some('-'), None).unwrap();
        assert!(matches!(r.rep.variant, Variant::TypeII(_, Sign::Minus)));
        let r = resolve(GroupId::OOdd(7), "1,0,0", None, Some(Rho::Sgn)).unwrap();
        assert!(matches!(r.rep.variant, Variant::OddProduct(_, OddChar::Sgn)));
    }

    #[test]
    fn o2_weights() {
        let r = resolve(GroupId::OEven(2), "det", None, None).unwrap();
        assert_eq!(r.rep.variant, Variant::O2(O2Rep::Det));
        let r = resolve(GroupId::OEven(2), "3", None, None).unwrap();
        assert_eq!(r.rep.variant, Variant::O2(O2Rep::Rho(3)));
        assert!(resolve(GroupId::OEven(2), "-1", None, None).is_err());
    }

    #[test]
    fn bad_weights() {
        assert!(resolve(GroupId::OEven(8), "1,0,0", None, None).is_err());
        assert!(resolve(GroupId::OEven(8), "0,1,0,0", None, None).is_err());
        assert!(resolve(GroupId::OEven(8), "1/3,0,0,0", None, None).is_err());
        assert!(resolve(GroupId::OEven(8), "a,0,0,0", None, None).is_err());
    }
}
