use std::sync::Arc;

use pinlift_core::folding::{builtin_involution, fold, restrict_weight, twisted_char_g0, FoldedSystem};
use pinlift_core::rational::{add, fmt_q, fmt_vec, parse_vec, q, scale, zero_vec};
use pinlift_core::repcalc::{bounded_dominant_weights, casimir_trace, weyl_dim, HighestWeight};
use pinlift_core::rootsys::{Family, RootSystem};
use pinlift_core::spincheck::{char_criterion, char_values_for, check_spinorial, GroupId, RepDescriptor, Sign, Variant};
use pinlift_core::swclass::{obstruction_vanishes, w1, w2, w2_via_d2};
use pinlift_core::validate::{self, ALL_CRITERIA};
use pinlift_core::{Error, Result};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::args::{CharArgs, GroupArgs, RepArgs, TableArgs, ValidateArgs};
use crate::descriptor::{self, parse_group, resolve, variant_kind, variant_rho, variant_sign, variant_weight};
use crate::report::Report;

fn obj(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("object literal"),
    }
}

fn rep_request(a: &RepArgs) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("group".into(), json!(a.group.group));
    m.insert("weight".into(), json!(a.weight));
    if let Some(s) = a.sign {
        m.insert("sign".into(), json!(s.to_string()));
    }
    if let Some(r) = a.rho {
        m.insert("rho".into(), json!(format!("{r:?}").to_lowercase()));
    }
    if !a.group.cochar.is_empty() {
        m.insert("cochar".into(), json!(a.group.cochar));
    }
    m
}

fn resolve_args(a: &RepArgs) -> Result<descriptor::Resolved> {
    let group = parse_group(&a.group.group, &a.group.cochar)?;
    resolve(group, &a.weight, a.sign, a.rho)
}

fn rep_summary(rep: &RepDescriptor) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("group".into(), json!(rep.group.to_string()));
    m.insert("kind".into(), json!(variant_kind(&rep.variant)));
    m.insert("highest_weight".into(), json!(variant_weight(&rep.variant)));
    if let Some(s) = variant_sign(&rep.variant) {
        m.insert("sign".into(), json!(s));
    }
    if let Some(r) = variant_rho(&rep.variant) {
        m.insert("rho".into(), json!(r));
    }
    m
}

fn weight_of(rep: &RepDescriptor) -> Option<Result<HighestWeight>> {
    let c = match &rep.variant {
        Variant::TypeI(c) | Variant::TypeII(c, _) | Variant::OddProduct(c, _) | Variant::Irreducible(c) => c,
        _ => return None,
    };
    Some(rep.group.root_system().and_then(|s| HighestWeight::new(s, c.clone())))
}

pub fn check_payload(rep: &RepDescriptor) -> Result<Map<String, Value>> {
    let v = check_spinorial(rep)?;
    let mut m = rep_summary(rep);
    m.insert("spinorial".into(), json!(v.spinorial));
    m.insert("q".into(), json!(fmt_q(&v.q_value)));
    m.insert("q_parity_ok".into(), json!(v.q_parity_ok));
    m.insert("m".into(), json!(v.m));
    m.insert("m_condition_ok".into(), json!(v.m_condition_ok));
    m.insert("chi_g0".into(), v.chi_g0.map_or(Value::Null, |c| json!(fmt_q(&c))));
    m.insert("dim".into(), json!(v.dim));
    let casimir = match weight_of(rep) {
        Some(w) => json!(fmt_q(&casimir_trace(&w?)?)),
        None => Value::Null,
    };
    m.insert("casimir_trace".into(), casimir);
    m.insert(
        "residues".into(),
        json!({
            "q_mod_2": v.residues.q_mod_2,
            "m_mod_4": v.residues.m_mod_4,
            "dim_minus_chi_mod_8": v.residues.dim_minus_chi_mod_8,
        }),
    );
    Ok(m)
}

pub fn check(a: &RepArgs) -> Result<Report> {
    let r = resolve_args(a)?;
    let mut rep = Report::new("check", rep_request(a));
    rep.payload = check_payload(&r.rep)?;
    rep.warnings = r.warnings;
    Ok(rep)
}

fn w1_text(c: u8) -> &'static str {
    if c == 1 { "w1(gamma)" } else { "0" }
}

fn w2_text(a: u8, b: u8) -> &'static str {
    match (a, b) {
        (0, 0) => "0",
        (1, 0) => "w2(gamma)",
        (0, _) => "e_cup",
        _ => "w2(gamma) + e_cup",
    }
}

pub fn sw(a: &RepArgs, cap: u64) -> Result<Report> {
    let r = resolve_args(a)?;
    let mut rep = Report::new("sw", rep_request(a));
    rep.warnings = r.warnings;
    let (c1, c2) = (w1(&r.rep)?, w2(&r.rep)?);
    let mut m = rep_summary(&r.rep);
    m.insert("w1".into(), json!({ "c": c1.c, "class": w1_text(c1.c) }));
    m.insert("w2".into(), json!({ "a": c2.a, "b": c2.b, "class": w2_text(c2.a, c2.b) }));
    m.insert("obstruction_vanishes".into(), json!(obstruction_vanishes(c1, c2)));
    if !matches!(r.rep.group, GroupId::SO(_)) {
        match char_values_for(&r.rep, cap) {
            Ok((c0, d1, d2)) => {
                // d1 d2 is a reflection, conjugate to d1
                let k = w2_via_d2(c0, d1, d2, d1)?;
                m.insert(
                    "klein".into(),
                    json!({
                        "chars": [c0, d1, d2, d1],
                        "alpha2": k.alpha2,
                        "beta2": k.beta2,
                        "alphabeta": k.alphabeta,
                    }),
                );
            }
            Err(e @ Error::CapExceeded { .. }) => rep.warnings.push(format!("Klein restriction skipped: {e}")),
            Err(e) => return Err(e),
        }
    }
    rep.payload = m;
    Ok(rep)
}

fn folded_for(group: &GroupId) -> Result<FoldedSystem> {
    let sys = group.root_system()?;
    if !matches!(group, GroupId::OEven(_) | GroupId::GLR(_) | GroupId::Semidirect { .. })
        || matches!(group, GroupId::GLR(n) if n % 2 == 1)
    {
        return Err(Error::UnsupportedGroup(format!("{group} has no outer involution to fold along")));
    }
    let tau = builtin_involution(&sys)?;
    fold(&sys, &tau)
}

pub fn twisted_char(a: &RepArgs) -> Result<Report> {
    let r = resolve_args(a)?;
    let mut rep = Report::new("twisted-char", rep_request(a));
    rep.warnings = r.warnings;
    let (coords, sign) = match &r.rep.variant {
        Variant::TypeII(c, s) => (c.clone(), *s),
        Variant::TypeI(c) => {
            return Err(Error::TypeMismatch(format!(
                "weight {} is moved by the involution; g0 permutes two summands and has trace 0",
                fmt_vec(c)
            )))
        }
        _ => return Err(Error::UnsupportedGroup(format!("{} has no outer involution g0", r.rep.group))),
    };
    let folded = folded_for(&r.rep.group)?;
    let lam = HighestWeight::new(folded.source.clone(), coords)?;
    let ratio = twisted_char_g0(&lam, &folded)?;
    let mut m = rep_summary(&r.rep);
    m.insert("chi_g0".into(), json!(fmt_q(&(ratio * q(sign.value())))));
    m.insert("twisted_character".into(), json!(fmt_q(&ratio)));
    m.insert("dim".into(), json!(weyl_dim(&lam)?));
    m.insert("folded".into(), json!(folded.label.to_string()));
    m.insert("restricted_weight".into(), json!(fmt_vec(&restrict_weight(&lam, &folded)?)));
    rep.payload = m;
    Ok(rep)
}

pub fn fold_cmd(a: &GroupArgs) -> Result<Report> {
    let mut req = Map::new();
    req.insert("group".into(), json!(a.group));
    let group = parse_group(&a.group, &a.cochar)?;
    let f = folded_for(&group)?;
    let mut rep = Report::new("fold", req);
    let simple: Vec<String> = f.simple_roots().iter().map(|r| fmt_vec(&f.to_fixed(r))).collect();
    rep.payload = obj(json!({
        "source": f.source.label.to_string(),
        "folded": f.label.to_string(),
        "node_permutation": f.involution.node_permutation,
        "rho_tau": fmt_vec(&f.rho_tau),
        "rho_tau_ambient": fmt_vec(&f.rho_tau_ambient),
        "fixed_basis": f.fixed_basis.iter().map(|b| fmt_vec(b)).collect::<Vec<_>>(),
        "simple_roots": simple,
        "positive_roots": f.folded_positive_roots.len(),
        "indivisible_positive_roots": f.indivisible_positive_roots().len(),
    }));
    Ok(rep)
}

pub fn char_criterion_cmd(a: &CharArgs, cap: u64) -> Result<Report> {
    let mut req = Map::new();
    let mut warnings = Vec::new();
    let mut extra = Map::new();
    let chars = match (&a.chars, &a.group, &a.weight) {
        (Some(c), _, _) => {
            req.insert("chars".into(), json!(c));
            let v = parse_vec(c)?;
            if v.len() != 3 || v.iter().any(|x| !x.is_integer()) {
                return Err(Error::InvalidCharacterData(format!("expected three integers, got {c:?}")));
            }
            (*v[0].numer(), *v[1].numer(), *v[2].numer())
        }
        (None, Some(g), Some(w)) => {
            req.insert("group".into(), json!(g));
            req.insert("weight".into(), json!(w));
            if let Some(s) = a.sign {
                req.insert("sign".into(), json!(s.to_string()));
            }
            if let Some(r) = a.rho {
                req.insert("rho".into(), json!(format!("{r:?}").to_lowercase()));
            }
            let r = resolve(parse_group(g, &[])?, w, a.sign, a.rho)?;
            warnings = r.warnings;
            extra = rep_summary(&r.rep);
            extra.insert("check_spinorial".into(), json!(check_spinorial(&r.rep)?.spinorial));
            char_values_for(&r.rep, cap)?
        }
        _ => return Err(Error::MalformedDescriptor("give either --chars or --group with --weight".into())),
    };
    let (c0, d1, d2) = chars;
    if (c0 - d1) % 2 != 0 || (c0 - d2) % 2 != 0 || d1.abs() > c0 || d2.abs() > c0 {
        return Err(Error::InvalidCharacterData(format!("({c0},{d1},{d2}) are not traces of involutions")));
    }
    let mut rep = Report::new("char-criterion", req);
    let mut m = extra;
    m.insert("chars".into(), json!([c0, d1, d2]));
    m.insert("differences_mod_8".into(), json!([(c0 - d1).rem_euclid(8), (c0 - d2).rem_euclid(8)]));
    m.insert("spinorial".into(), json!(char_criterion(c0, d1, d2)));
    rep.payload = m;
    rep.warnings = warnings;
    Ok(rep)
}

/// Dominant weights for a sweep: coordinates for B/D, Dynkin labels otherwise.
fn sweep_weights(sys: &Arc<RootSystem>, bound: i64) -> Vec<HighestWeight> {
    if matches!(sys.label.family, Family::B | Family::D) {
        return bounded_dominant_weights(sys, bound);
    }
    let fw = sys.fundamental_weights();
    let mut out = Vec::new();
    let mut labels = vec![0i64; fw.len()];
    loop {
        let mut v = zero_vec(sys.ambient_dim);
        for (w, &k) in fw.iter().zip(&labels) {
            v = add(&v, &scale(w, q(k)));
        }
        if let Ok(h) = HighestWeight::new(sys.clone(), v) {
            out.push(h);
        }
        let mut i = 0;
        while i < labels.len() && labels[i] == bound {
            labels[i] = 0;
            i += 1;
        }
        if i == labels.len() {
            break;
        }
        labels[i] += 1;
    }
    out.sort_by(|a, b| b.coords.cmp(&a.coords));
    out
}

fn table_descriptors(group: &GroupId, bound: i64) -> Result<Vec<RepDescriptor>> {
    use pinlift_core::spincheck::{O2Rep, OddChar};
    let with = |variant| RepDescriptor { group: group.clone(), variant };
    if matches!(group, GroupId::OEven(2) | GroupId::GLR(2)) {
        let mut v = vec![with(Variant::O2(O2Rep::Trivial)), with(Variant::O2(O2Rep::Det))];
        v.extend((1..=bound.max(0) as u32).map(|n| with(Variant::O2(O2Rep::Rho(n)))));
        return Ok(v);
    }
    let sys = group.root_system()?;
    let mut out = Vec::new();
    for lam in sweep_weights(&sys, bound) {
        let mut sink = Vec::new();
        match descriptor::variant_for(group, &sys, &lam, Some('+'), Some(crate::args::Rho::Trivial), &mut sink)? {
            Variant::TypeI(c) => {
                // lambda and its twist give the same induced representation
                let tau = builtin_involution(&sys)?;
                if c >= sys.dominant_rep(&tau.apply(&c)) {
                    out.push(with(Variant::TypeI(c)));
                }
            }
            Variant::TypeII(c, _) => {
                out.push(with(Variant::TypeII(c.clone(), Sign::Plus)));
                out.push(with(Variant::TypeII(c, Sign::Minus)));
            }
            Variant::OddProduct(c, _) => {
                out.push(with(Variant::OddProduct(c.clone(), OddChar::Trivial)));
                out.push(with(Variant::OddProduct(c, OddChar::Sgn)));
            }
            v => out.push(with(v)),
        }
    }
    Ok(out)
}

pub fn table(a: &TableArgs) -> Result<Vec<Report>> {
    if a.bound < 0 {
        return Err(Error::Parse(format!("bound must be nonnegative, got {}", a.bound)));
    }
    let group = parse_group(&a.group.group, &a.group.cochar)?;
    let descs = table_descriptors(&group, a.bound)?;
    let mut req = Map::new();
    req.insert("group".into(), json!(a.group.group));
    req.insert("bound".into(), json!(a.bound));
    let rows: Vec<Result<Map<String, Value>>> = descs.par_iter().map(check_payload).collect();
    rows.into_iter()
        .map(|p| {
            let mut r = Report::new("table", req.clone());
            r.payload = p?;
            Ok(r)
        })
        .collect()
}

const KEYWORDS: [(&str, u8); 10] = [
    ("golden", 1),
    ("folding", 2),
    ("o4", 3),
    ("adjoint", 4),
    ("twisted", 5),
    ("agreement", 6),
    ("dimension", 7),
    ("obstruction", 8),
    ("o2", 9),
    ("standard", 10),
];

fn criterion_ids(only: &[String]) -> Result<Vec<u8>> {
    if only.is_empty() {
        return Ok(ALL_CRITERIA.to_vec());
    }
    let mut ids = Vec::new();
    for s in only {
        let s = s.trim();
        let id = match s.parse::<u8>() {
            Ok(n) if ALL_CRITERIA.contains(&n) => n,
            _ => KEYWORDS
                .iter()
                .find(|(k, _)| *k == s)
                .map(|(_, n)| *n)
                .ok_or_else(|| Error::Parse(format!("unknown criterion {s:?}")))?,
        };
        if !ids.contains(&id) {
            ids.push(id);
        }
    }
    ids.sort_unstable();
    Ok(ids)
}

pub fn validate_cmd(a: &ValidateArgs, cap: u64) -> Result<(Report, bool)> {
    let ids = criterion_ids(&a.only)?;
    let reports = validate::run(&ids, cap);
    let all = reports.iter().all(|r| r.passed);
    let mut req = Map::new();
    req.insert("only".into(), json!(a.only));
    let mut rep = Report::new("validate", req);
    let criteria: Vec<Value> = reports
        .iter()
        .map(|r| {
            json!({
                "id": r.id,
                "title": r.title,
                "passed": r.passed,
                "checked": r.checked,
                "failed": r.failures.len(),
                "summary": r.line(),
                "failures": r.failures.iter().take(10).collect::<Vec<_>>(),
            })
        })
        .collect();
    rep.payload.insert("all_passed".into(), json!(all));
    rep.payload.insert("criteria".into(), json!(criteria));
    Ok((rep, all))
}
