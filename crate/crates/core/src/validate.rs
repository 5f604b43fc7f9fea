//! Built-in validation sweeps, one per acceptance criterion.

use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::folding::{builtin_involution, fold, rho_tau_of, twisted_char_g0, twisted_char_numeric, FoldedSystem};
use crate::rational::*;
use crate::repcalc::{
    bounded_dominant_weights, casimir_trace, freudenthal_multiplicities, weyl_dim, HighestWeight,
};
use crate::rootsys::{build, CartanLabel, Family, RootSystem};
use crate::spincheck::{
    adjoint_verdict, c2_spin, char_criterion, char_values_for, check_spinorial, q_o4, standard_descriptor, GroupId,
    O2Rep, OddChar, RepDescriptor, Sign, Variant,
};
use crate::swclass::{obstruction_vanishes, w1, w2, SW2};

/// Step sizes and tolerances for the numeric twisted-character check.
pub const NUMERIC_SCHEDULE: [(f64, f64); 2] = [(1e-3, 1e-3), (1e-4, 1e-4)];
pub const NUMERIC_DIRECTIONS: usize = 5;
pub const NUMERIC_SEED: u64 = 0x5eed_2c0f;
pub const SWEEP_RANGE: std::ops::RangeInclusive<usize> = 5..=10;
pub const SWEEP_BOUND: i64 = 2;

pub const ALL_CRITERIA: [u8; 10] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CriterionReport {
    fn new(id: u8, title: &'static str) -> Self {
        CriterionReport { id, title, passed: true, checked: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.passed = false;
            self.failures.push(what());
        }
    }

    fn check_result<T>(&mut self, r: Result<T>, what: &str, ok: impl FnOnce(&T) -> bool) {
        match r {
            Ok(v) => {
                let good = ok(&v);
                self.check(good, || format!("{what}: unexpected value"));
            }
            Err(e) => self.check(false, || format!("{what}: {e}")),
        }
    }

    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} {} [{}] checked={} failed={}",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.checked,
            self.failures.len()
        )
    }
}

pub fn title(id: u8) -> &'static str {
    match id {
        1 => "O(8) standard representation golden values",
        2 => "folding table and rho^tau",
        3 => "O(4) closed form for the twisted character",
        4 => "adjoint representation of O(l)",
        5 => "numeric twisted-character oracle",
        6 => "character criterion agrees with the spin criteria",
        7 => "Weyl dimension equals Freudenthal total",
        8 => "Stiefel-Whitney obstruction agrees with the spin criteria",
        9 => "O(2) representations",
        10 => "standard representations of O(n)",
        _ => "unknown criterion",
    }
}

pub fn run(ids: &[u8], cap: u64) -> Vec<CriterionReport> {
    ids.par_iter().map(|&id| run_one(id, cap)).collect()
}

pub fn run_one(id: u8, cap: u64) -> CriterionReport {
    match id {
        1 => o8_golden(),
        2 => folding_table(),
        3 => o4_closed_form(),
        4 => adjoint_series(),
        5 => numeric_oracle(),
        6 => criterion_agreement(cap),
        7 => dimension_oracle(cap),
        8 => obstruction_agreement(),
        9 => o2_cases(),
        10 => standard_reps(cap),
        _ => {
            let mut r = CriterionReport::new(id, title(id));
            r.check(false, || format!("no criterion with id {id}"));
            r
        }
    }
}

fn arc(label: &str) -> Arc<RootSystem> {
    Arc::new(build(label.parse().expect("valid label")).expect("buildable label"))
}

fn folded(label: &str) -> Result<FoldedSystem> {
    let sys = arc(label);
    let tau = builtin_involution(&sys)?;
    fold(&sys, &tau)
}

fn o8_golden() -> CriterionReport {
    let mut r = CriterionReport::new(1, title(1));
    let g = GroupId::OEven(8);
    let sys = arc("D4");
    let lam = HighestWeight::new(sys, qvec(&[1, 0, 0, 0])).expect("integral weight");
    r.check_result(weyl_dim(&lam), "dim", |d| *d == 8);
    r.check_result(casimir_trace(&lam), "casimir", |c| *c == qf(7, 12));
    for (sign, m, chi, sw) in [(Sign::Plus, 1, 6, SW2 { a: 1, b: 0 }), (Sign::Minus, 7, -6, SW2 { a: 1, b: 1 })] {
        let rep = RepDescriptor { group: g.clone(), variant: Variant::TypeII(lam.coords.clone(), sign) };
        let tag = format!("{sign:?}");
        r.check_result(check_spinorial(&rep), &format!("verdict {tag}"), |v| {
            v.q_value == q(1) && !v.spinorial && v.m == m && v.chi_g0 == Some(q(chi))
        });
        r.check_result(w2(&rep), &format!("w2 {tag}"), |w| *w == sw);
    }
    r
}

fn folding_table() -> CriterionReport {
    let mut r = CriterionReport::new(2, title(2));
    let expect = |src: String, target: CartanLabel, r: &mut CriterionReport| {
        r.check_result(folded(&src), &format!("fold {src}"), |f| f.label.is_isomorphic(target));
    };
    for n in 2..=8 {
        expect(format!("D{n}"), CartanLabel::new(Family::B, n - 1).unwrap(), &mut r);
    }
    for n in 2..=4 {
        expect(format!("A{}", 2 * n - 1), CartanLabel::new(Family::C, n).unwrap(), &mut r);
    }
    for n in 1..=4 {
        expect(format!("A{}", 2 * n), CartanLabel::new(Family::BC, n).unwrap(), &mut r);
    }
    expect("E6".into(), CartanLabel::new(Family::F4, 4).unwrap(), &mut r);
    r.check_result(folded("D4"), "rho D4", |f| rho_tau_of(f) == qvec(&[3, 2, 1]));
    r.check_result(folded("D2"), "rho D2", |f| rho_tau_of(f) == qvec(&[1]));
    r
}

/// Weight of V_{a,b} in orthogonal coordinates of D2.
pub fn o4_weight(a: i64, b: i64) -> QVec {
    vec![qf(a + b, 2), qf(b - a, 2)]
}

fn o4_closed_form() -> CriterionReport {
    let mut r = CriterionReport::new(3, title(3));
    let f = match folded("D2") {
        Ok(f) => f,
        Err(e) => {
            r.check(false, || e.to_string());
            return r;
        }
    };
    for a in 0..=6i64 {
        for b in 0..=6i64 {
            if (a - b) % 2 != 0 {
                continue;
            }
            let lam = HighestWeight::new(f.source.clone(), o4_weight(a, b)).expect("integral weight");
            let expect = q((a + 1) * (b + 1));
            match twisted_char_g0(&lam, &f) {
                Ok(v) => r.check(v == expect, || format!("V_{{{a},{b}}}: twisted character {} != {}", fmt_q(&v), fmt_q(&expect))),
                Err(e) => r.check(false, || format!("V_{{{a},{b}}}: {e}")),
            }
            let cond1 = c2_spin(((a + 1) * (b + 1)) as u64);
            let q4 = q_o4(a, b);
            let cond2 = q4.is_integer() && q4.numer().rem_euclid(2) == 0;
            let rep = RepDescriptor { group: GroupId::OEven(4), variant: Variant::TypeII(lam.coords.clone(), Sign::Minus) };
            match check_spinorial(&rep) {
                Ok(v) => r.check(v.spinorial == (cond1 && cond2), || {
                    format!("V_{{{a},{b}}} minus: verdict {} vs conditions {}", v.spinorial, cond1 && cond2)
                }),
                Err(e) => r.check(false, || format!("V_{{{a},{b}}} minus: {e}")),
            }
        }
    }
    r
}

fn adjoint_series() -> CriterionReport {
    let mut r = CriterionReport::new(4, title(4));
    for l in 4..=13usize {
        r.check_result(adjoint_verdict(l), &format!("O({l})"), |v| {
            let chi_ok = if l % 2 == 0 {
                let n = (l / 2) as i64;
                v.chi_g0 == Some(q(2 * n * n - 5 * n + 2))
            } else {
                true
            };
            v.spinorial == (l % 4 == 0) && chi_ok
        });
    }
    r
}

/// Type II weights of bounded size used by the numeric check: for A3 the
/// Dynkin labels (a, b, a), otherwise nonnegative fixed coordinates.
pub fn numeric_weights(f: &FoldedSystem) -> Vec<HighestWeight> {
    let sys = f.source.clone();
    match sys.label.family {
        Family::A => {
            let fw = sys.fundamental_weights();
            let mut out = Vec::new();
            for a in 0..=SWEEP_BOUND {
                for b in 0..=SWEEP_BOUND {
                    let v = add(&add(&scale(&fw[0], q(a)), &scale(&fw[1], q(b))), &scale(&fw[2], q(a)));
                    out.push(HighestWeight::new(sys.clone(), v).expect("integral weight"));
                }
            }
            out
        }
        _ => bounded_dominant_weights(&sys, SWEEP_BOUND)
            .into_iter()
            .filter(|w| f.involution.apply(&w.coords) == w.coords)
            .collect(),
    }
}

fn numeric_oracle() -> CriterionReport {
    let mut r = CriterionReport::new(5, title(5));
    let mut rng = StdRng::seed_from_u64(NUMERIC_SEED);
    for label in ["D3", "D4", "A3"] {
        let f = match folded(label) {
            Ok(f) => f,
            Err(e) => {
                r.check(false, || format!("{label}: {e}"));
                continue;
            }
        };
        let mut dirs: Vec<Vec<f64>> = Vec::new();
        while dirs.len() < NUMERIC_DIRECTIONS {
            let h: Vec<f64> = (0..f.rank()).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let zero = HighestWeight::zero(f.source.clone());
            if twisted_char_numeric(&zero, &f, &h, NUMERIC_SCHEDULE[1].0).is_ok() {
                dirs.push(h);
            }
        }
        let weights = numeric_weights(&f);
        let jobs: Vec<(usize, usize)> =
            (0..weights.len()).flat_map(|i| (0..dirs.len()).map(move |j| (i, j))).collect();
        let results: Vec<(String, std::result::Result<(), String>)> = jobs
            .par_iter()
            .map(|&(i, j)| {
                let w = &weights[i];
                let tag = format!("{label} {} h#{j}", fmt_vec(&w.coords));
                let out = (|| -> Result<()> {
                    let exact = twisted_char_g0(w, &f)?;
                    let exact = *exact.numer() as f64 / *exact.denom() as f64;
                    for (x, tol) in NUMERIC_SCHEDULE {
                        let approx = twisted_char_numeric(w, &f, &dirs[j], x)?;
                        if (approx - exact).abs() >= tol {
                            return Err(Error::Internal(format!("x={x}: {approx} vs {exact}")));
                        }
                    }
                    Ok(())
                })();
                (tag, out.map_err(|e| e.to_string()))
            })
            .collect();
        for (tag, res) in results {
            r.check(res.is_ok(), || format!("{tag}: {}", res.unwrap_err()));
        }
    }
    r
}

/// Every descriptor of the O(n) sweep: all dominant integral weights with
/// entries bounded by 2, both signs for Type II, both characters of -I for odd n.
pub fn sweep_descriptors() -> Vec<RepDescriptor> {
    let mut out = Vec::new();
    for l in SWEEP_RANGE {
        let group = GroupId::orthogonal(l).expect("l >= 2");
        let sys = group.root_system().expect("simple identity component");
        let tau = if l % 2 == 0 { Some(builtin_involution(&sys).expect("D has an involution")) } else { None };
        for w in bounded_dominant_weights(&sys, SWEEP_BOUND) {
            let c = w.coords.clone();
            match &tau {
                Some(t) if t.apply(&c) == c => {
                    for s in [Sign::Plus, Sign::Minus] {
                        out.push(RepDescriptor { group: group.clone(), variant: Variant::TypeII(c.clone(), s) });
                    }
                }
                Some(_) => out.push(RepDescriptor { group: group.clone(), variant: Variant::TypeI(c) }),
                None => {
                    for rho in [OddChar::Trivial, OddChar::Sgn] {
                        out.push(RepDescriptor { group: group.clone(), variant: Variant::OddProduct(c.clone(), rho) });
                    }
                }
            }
        }
    }
    out
}

fn sweep_check(
    id: u8,
    f: impl Fn(&RepDescriptor) -> Result<bool> + Sync,
) -> CriterionReport {
    let mut r = CriterionReport::new(id, title(id));
    let descs = sweep_descriptors();
    let results: Vec<(String, Result<bool>)> =
        descs.par_iter().map(|d| (describe(d), f(d))).collect();
    for (tag, res) in results {
        match res {
            Ok(ok) => r.check(ok, || format!("{tag}: mismatch")),
            Err(e) => r.check(false, || format!("{tag}: {e}")),
        }
    }
    r
}

pub fn describe(d: &RepDescriptor) -> String {
    let v = match &d.variant {
        Variant::TypeI(c) => format!("TypeI({})", fmt_vec(c)),
        Variant::TypeII(c, s) => format!("TypeII({}, {s:?})", fmt_vec(c)),
        Variant::OddProduct(c, rho) => format!("OddProduct({}, {rho:?})", fmt_vec(c)),
        Variant::O2(rep) => format!("O2({rep:?})"),
        Variant::Irreducible(c) => format!("Irreducible({})", fmt_vec(c)),
        Variant::ReducibleSum(cs) => format!("ReducibleSum({} components)", cs.len()),
    };
    format!("{} {v}", d.group)
}

fn criterion_agreement(cap: u64) -> CriterionReport {
    sweep_check(6, |d| {
        let (c1, cd1, cd2) = char_values_for(d, cap)?;
        Ok(char_criterion(c1, cd1, cd2) == check_spinorial(d)?.spinorial)
    })
}

fn weight_of(d: &RepDescriptor) -> Result<HighestWeight> {
    let c = match &d.variant {
        Variant::TypeI(c) | Variant::TypeII(c, _) | Variant::OddProduct(c, _) | Variant::Irreducible(c) => c,
        _ => return Err(Error::MalformedDescriptor("no highest weight".into())),
    };
    HighestWeight::new(d.group.root_system()?, c.clone())
}

fn dimension_oracle(cap: u64) -> CriterionReport {
    sweep_check(7, |d| {
        let w = weight_of(d)?;
        Ok(weyl_dim(&w)? == freudenthal_multiplicities(&w, cap)?.total())
    })
}

fn obstruction_agreement() -> CriterionReport {
    sweep_check(8, |d| Ok(obstruction_vanishes(w1(d)?, w2(d)?) == check_spinorial(d)?.spinorial))
}

fn o2_cases() -> CriterionReport {
    let mut r = CriterionReport::new(9, title(9));
    let g = GroupId::OEven(2);
    let verdict = |rep: O2Rep| check_spinorial(&RepDescriptor { group: g.clone(), variant: Variant::O2(rep) });
    for n in 1..=10 {
        r.check_result(verdict(O2Rep::Rho(n)), &format!("rho_{n}"), |v| !v.spinorial);
    }
    r.check_result(verdict(O2Rep::Det), "det", |v| !v.spinorial);
    r.check_result(verdict(O2Rep::Trivial), "trivial", |v| v.spinorial);
    r
}

fn standard_reps(cap: u64) -> CriterionReport {
    let mut r = CriterionReport::new(10, title(10));
    for l in 3..=12usize {
        let rep = match standard_descriptor(l) {
            Ok(rep) => rep,
            Err(e) => {
                r.check(false, || format!("O({l}): {e}"));
                continue;
            }
        };
        r.check_result(check_spinorial(&rep), &format!("O({l}) verdict"), |v| !v.spinorial);
        r.check_result(char_values_for(&rep, cap), &format!("O({l}) characters"), |&(c1, cd1, cd2)| {
            c1 == l as i64 && c1 - cd1 == 2 && !char_criterion(c1, cd1, cd2)
        });
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_is_nonempty_and_covers_each_group() {
        let d = sweep_descriptors();
        for l in SWEEP_RANGE {
            assert!(d.iter().any(|x| x.group == GroupId::orthogonal(l).unwrap()));
        }
    }

    #[test]
    fn unknown_criterion_fails() {
        assert!(!run_one(42, 10).passed);
    }

    #[test]
    fn o4_weights() {
        assert_eq!(o4_weight(1, 1), qvec(&[1, 0]));
        assert_eq!(o4_weight(0, 2), qvec(&[1, 1]));
    }
}
