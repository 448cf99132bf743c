//! Verification sweeps: each theorem id runs one identity over generated
//! instances and reports every mismatch.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::generate::{random_charge, random_symbol, InstanceSpec, Mode};
use super::oracle::{oracle_rim_hook_core, oracle_young_hooks};
use crate::combinatorics::{
    partition_of_beta_set, symbol_of_multipartition, Multipartition, Partition, Symbol,
};
use crate::cores::{
    a_value, a_value_with_charge, dt_core, dt_core_by, e_core, es_core, es_core_symbol,
    quotient_data, stable_common_charge,
};
use crate::error::{Error, Result};
use crate::hooks::{
    charged_scaled_hooks, charged_scaled_hooks_of_symbol, enumerate_hooks, hook_count_at,
    hook_lengths, hook_lengths_shifted, injection_f, is_cj_hook, lengths_of, scaled_hooks, Hook,
    HookKind, IntMultiset,
};
use crate::schur::{
    ariki_semisimple_at_root, bgo_unit, divisibility_check, factorization_check, schur_tilde,
    semisimplicity_via_schur, specialize, specialized_lengths, specialized_schur_tilde,
    valuation_and_sign,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    CountEquality,
    CountFormulas,
    Injection,
    EqualGapLemma,
    ScaledHooks,
    Translation,
    ChargedScaled,
    Particore,
    ParticoreBgo,
    BgoDecomposition,
    DtContainment,
    EsContainment,
    DtComponentwise,
    DtOrder,
    AIdentity,
    TwoPath,
    Valuation,
    BgoUnit,
    Semisimplicity,
    MainTypeA,
    Divisibility,
    OracleHooks,
    OracleCores,
}

impl TheoremId {
    pub const ALL: [TheoremId; 23] = [
        TheoremId::CountEquality,
        TheoremId::CountFormulas,
        TheoremId::Injection,
        TheoremId::EqualGapLemma,
        TheoremId::ScaledHooks,
        TheoremId::Translation,
        TheoremId::ChargedScaled,
        TheoremId::Particore,
        TheoremId::ParticoreBgo,
        TheoremId::BgoDecomposition,
        TheoremId::DtContainment,
        TheoremId::EsContainment,
        TheoremId::DtComponentwise,
        TheoremId::DtOrder,
        TheoremId::AIdentity,
        TheoremId::TwoPath,
        TheoremId::Valuation,
        TheoremId::BgoUnit,
        TheoremId::Semisimplicity,
        TheoremId::MainTypeA,
        TheoremId::Divisibility,
        TheoremId::OracleHooks,
        TheoremId::OracleCores,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::CountEquality => "count-equality",
            TheoremId::CountFormulas => "count-formulas",
            TheoremId::Injection => "injection",
            TheoremId::EqualGapLemma => "equal-gap-lemma",
            TheoremId::ScaledHooks => "scaled-hooks",
            TheoremId::Translation => "translation",
            TheoremId::ChargedScaled => "charged-scaled",
            TheoremId::Particore => "particore",
            TheoremId::ParticoreBgo => "particore-bgo",
            TheoremId::BgoDecomposition => "bgo-decomposition",
            TheoremId::DtContainment => "dt-containment",
            TheoremId::EsContainment => "es-containment",
            TheoremId::DtComponentwise => "dt-componentwise",
            TheoremId::DtOrder => "dt-order",
            TheoremId::AIdentity => "a-identity",
            TheoremId::TwoPath => "two-path",
            TheoremId::Valuation => "valuation",
            TheoremId::BgoUnit => "bgo-unit",
            TheoremId::Semisimplicity => "semisimplicity",
            TheoremId::MainTypeA => "main-type-a",
            TheoremId::Divisibility => "divisibility",
            TheoremId::OracleHooks => "oracle-hooks",
            TheoremId::OracleCores => "oracle-cores",
        }
    }

    /// Bounds used when the caller does not override them.
    pub fn default_spec(self) -> InstanceSpec {
        let base = InstanceSpec::default();
        let random = InstanceSpec {
            mode: Mode::Random(1000),
            l_max: 4,
            ..base.clone()
        };
        match self {
            TheoremId::CountEquality
            | TheoremId::CountFormulas
            | TheoremId::Injection
            | TheoremId::EqualGapLemma
            | TheoremId::ScaledHooks
            | TheoremId::Translation
            | TheoremId::ChargedScaled
            | TheoremId::DtContainment
            | TheoremId::DtComponentwise
            | TheoremId::DtOrder => random,
            TheoremId::Particore | TheoremId::ParticoreBgo => InstanceSpec {
                n_max: 15,
                e_range: (2, 6),
                ..base
            },
            TheoremId::AIdentity => InstanceSpec {
                n_max: 20,
                e_range: (2, 6),
                ..base
            },
            TheoremId::MainTypeA => InstanceSpec {
                n_max: 10,
                e_range: (2, 5),
                ..base
            },
            TheoremId::OracleHooks | TheoremId::OracleCores => InstanceSpec {
                n_max: 25,
                e_range: (2, 6),
                ..base
            },
            TheoremId::BgoDecomposition | TheoremId::EsContainment => InstanceSpec {
                n_max: 5,
                s_bound: 3,
                ..base
            },
            TheoremId::TwoPath | TheoremId::Valuation => InstanceSpec {
                mode: Mode::Random(500),
                s_bound: 6,
                ..base
            },
            TheoremId::BgoUnit => base,
            TheoremId::Semisimplicity => InstanceSpec {
                n_max: 4,
                e_range: (2, 6),
                s_bound: 6,
                ..base
            },
            TheoremId::Divisibility => InstanceSpec { l_min: 2, ..base },
        }
    }
}

fn normalize(s: &str) -> String {
    s.chars()
        .filter(|c| c.is_ascii_alphanumeric())
        .map(|c| c.to_ascii_lowercase())
        .collect()
}

impl FromStr for TheoremId {
    type Err = Error;

    /// Case, `-` and `_` are ignored, so `mainTypeA` names `main-type-a`.
    fn from_str(s: &str) -> Result<Self> {
        let key = normalize(s);
        let alias = match key.as_str() {
            "inj" | "bij" => Some(TheoremId::Injection),
            "sim" => Some(TheoremId::EqualGapLemma),
            _ => None,
        };
        alias
            .or_else(|| {
                TheoremId::ALL
                    .into_iter()
                    .find(|t| normalize(t.name()) == key)
            })
            .ok_or_else(|| Error::UnknownTheoremId(s.to_string()))
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub input: Value,
    pub expected: Value,
    pub actual: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub theorem: TheoremId,
    pub instances_checked: usize,
    pub failures: Vec<Failure>,
    /// Wall-clock seconds.
    pub elapsed: f64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Combines two reports on the same theorem.
    pub fn merge(mut self, other: VerifyReport) -> VerifyReport {
        self.instances_checked += other.instances_checked;
        self.failures.extend(other.failures);
        self.elapsed += other.elapsed;
        self
    }
}

/// A failed check: what the identity predicts and what was computed.
struct Mismatch {
    expected: Value,
    actual: Value,
}

impl From<Error> for Box<Mismatch> {
    fn from(e: Error) -> Self {
        Box::new(Mismatch {
            expected: json!("no error"),
            actual: json!({"error": e.kind(), "message": e.to_string()}),
        })
    }
}

type Outcome = std::result::Result<(), Box<Mismatch>>;

fn expect_eq<T: PartialEq + Serialize>(expected: &T, actual: &T) -> Outcome {
    if expected == actual {
        Ok(())
    } else {
        Err(Box::new(Mismatch {
            expected: json!(expected),
            actual: json!(actual),
        }))
    }
}

fn expect(cond: bool, expected: Value, actual: Value) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(Box::new(Mismatch { expected, actual }))
    }
}

fn sweep<T: Serialize + Sync>(
    cases: &[T],
    check: impl Fn(&T) -> Outcome + Sync,
) -> (usize, Vec<Failure>) {
    let failures = cases
        .par_iter()
        .filter_map(|c| {
            check(c).err().map(|m| Failure {
                input: serde_json::to_value(c).unwrap_or(Value::Null),
                expected: m.expected,
                actual: m.actual,
            })
        })
        .collect();
    (cases.len(), failures)
}

#[derive(Serialize)]
struct SymbolCase {
    symbol: Symbol,
    k: usize,
    s: Vec<usize>,
    d: usize,
    t: usize,
    seed: u64,
}

#[derive(Serialize)]
struct PartitionCase {
    partition: Partition,
    #[serde(skip_serializing_if = "Option::is_none")]
    e: Option<usize>,
}

#[derive(Serialize)]
struct MultiCase {
    multipartition: Multipartition,
    #[serde(skip_serializing_if = "Option::is_none")]
    e: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct SemisimpleCase {
    n: usize,
    l: usize,
    e: usize,
    k: usize,
    s: Vec<usize>,
}

/// Runs the sweep for `theorem` over the instances described by `spec`.
pub fn verify(theorem: TheoremId, spec: &InstanceSpec) -> Result<VerifyReport> {
    spec.validate()?;
    let start = Instant::now();
    let (instances_checked, failures) = match theorem {
        TheoremId::CountEquality => sweep(&symbol_cases(spec, false), check_count_equality),
        TheoremId::CountFormulas => sweep(&symbol_cases(spec, false), check_count_formulas),
        TheoremId::Injection => sweep(&symbol_cases(spec, false), check_injection),
        TheoremId::EqualGapLemma => sweep(&symbol_cases(spec, false), check_equal_gap),
        TheoremId::ScaledHooks => sweep(&symbol_cases(spec, false), check_scaled),
        TheoremId::Translation => sweep(&symbol_cases(spec, false), check_translation),
        TheoremId::ChargedScaled => sweep(&symbol_cases(spec, true), check_charged_scaled),
        TheoremId::DtContainment => sweep(&symbol_cases(spec, false), check_dt_containment),
        TheoremId::DtComponentwise => sweep(&symbol_cases(spec, false), check_dt_componentwise),
        TheoremId::DtOrder => sweep(&symbol_cases(spec, false), check_dt_order),
        TheoremId::Particore => sweep(&partition_cases(spec, true), check_particore),
        TheoremId::ParticoreBgo => sweep(&partition_cases(spec, true), check_particore_bgo),
        TheoremId::AIdentity => sweep(&partition_cases(spec, true), check_a_identity),
        TheoremId::MainTypeA => sweep(&partition_cases(spec, true), check_main_type_a),
        TheoremId::OracleHooks => sweep(&partition_cases(spec, false), check_oracle_hooks),
        TheoremId::OracleCores => sweep(&partition_cases(spec, true), check_oracle_cores),
        TheoremId::BgoDecomposition => sweep(
            &multi_cases(spec, false, false, true),
            check_bgo_decomposition,
        ),
        TheoremId::EsContainment => {
            sweep(&multi_cases(spec, true, false, true), check_es_containment)
        }
        TheoremId::TwoPath => sweep(&multi_cases(spec, false, true, true), check_two_path),
        TheoremId::Valuation => sweep(&multi_cases(spec, false, true, true), check_valuation),
        TheoremId::BgoUnit => sweep(&multi_cases(spec, false, false, false), check_bgo_unit),
        TheoremId::Divisibility => sweep(&multi_cases(spec, true, false, true), check_divisibility),
        TheoremId::Semisimplicity => sweep(&semisimple_cases(spec), check_semisimplicity),
    };
    Ok(VerifyReport {
        theorem,
        instances_checked,
        failures,
        elapsed: start.elapsed().as_secs_f64(),
    })
}

fn symbol_cases(spec: &InstanceSpec, equal_charges: bool) -> Vec<SymbolCase> {
    let mut rng = spec.rng();
    let count = spec.count_or(1000);
    (0..count)
        .map(|_| {
            let l = rng.gen_range(spec.l_min..=spec.l_max);
            let equal = equal_charges || rng.gen_bool(0.5);
            let symbol = random_symbol(&mut rng, l, spec.entry_max, equal);
            SymbolCase {
                k: rng.gen_range(spec.k_range.0..=spec.k_range.1),
                s: random_charge(&mut rng, l, spec.s_bound),
                d: rng.gen_range(0..l),
                t: rng.gen_range(spec.e_range.0..=spec.e_range.1),
                seed: rng.gen(),
                symbol,
            }
        })
        .collect()
}

fn partition_cases(spec: &InstanceSpec, with_e: bool) -> Vec<PartitionCase> {
    let parts = spec.partitions(&mut spec.rng());
    if !with_e {
        return parts
            .into_iter()
            .map(|partition| PartitionCase { partition, e: None })
            .collect();
    }
    parts
        .into_iter()
        .flat_map(|p| {
            spec.es().map(move |e| PartitionCase {
                partition: p.clone(),
                e: Some(e),
            })
        })
        .collect()
}

fn multi_cases(spec: &InstanceSpec, with_e: bool, with_k: bool, with_s: bool) -> Vec<MultiCase> {
    let mut rng = spec.rng();
    let es: Vec<Option<usize>> = if with_e {
        spec.es().map(Some).collect()
    } else {
        vec![None]
    };
    let mut out = Vec::new();
    for lambda in spec.multipartitions(&mut rng) {
        let charges: Vec<Option<Vec<usize>>> = if with_s {
            spec.charges(lambda.l(), &mut rng)
                .into_iter()
                .map(Some)
                .collect()
        } else {
            vec![None]
        };
        let ks: Vec<Option<usize>> = match (with_k, spec.mode) {
            (false, _) => vec![None],
            (true, Mode::Exhaustive) => spec.ks().map(Some).collect(),
            (true, Mode::Random(_)) => vec![Some(rng.gen_range(spec.k_range.0..=spec.k_range.1))],
        };
        for e in &es {
            for k in &ks {
                for s in &charges {
                    out.push(MultiCase {
                        multipartition: lambda.clone(),
                        e: *e,
                        k: *k,
                        s: s.clone(),
                    });
                }
            }
        }
    }
    out
}

fn semisimple_cases(spec: &InstanceSpec) -> Vec<SemisimpleCase> {
    let mut rng = spec.rng();
    let mut out = Vec::new();
    for n in 1..=spec.n_max {
        for l in spec.ls() {
            for e in spec.es() {
                for k in spec.ks() {
                    for s in spec.charges(l, &mut rng) {
                        out.push(SemisimpleCase { n, l, e, k, s });
                    }
                }
            }
        }
    }
    out
}

fn e_of(e: Option<usize>) -> usize {
    e.expect("case generated with e")
}

fn s_of(s: &Option<Vec<usize>>) -> &[usize] {
    s.as_deref().expect("case generated with s")
}

fn to_signed(s: &[usize]) -> Vec<i64> {
    s.iter().map(|&x| x as i64).collect()
}

fn sorted(mut hooks: Vec<Hook>) -> Vec<Hook> {
    hooks.sort_by_key(Hook::key);
    hooks
}

fn pair(x: &Symbol, i: usize, j: usize) -> Symbol {
    Symbol::new(vec![x.components()[i].clone(), x.components()[j].clone()]).expect("two components")
}

fn check_count_equality(c: &SymbolCase) -> Outcome {
    let x = &c.symbol;
    let m = x.multicharge();
    for i in 0..x.l() {
        for j in i + 1..x.l() {
            if m[i] == m[j] {
                let y = pair(x, i, j);
                let bgo = enumerate_hooks(&y, HookKind::Bgo).len();
                let cj = enumerate_hooks(&y, HookKind::Cj).len();
                expect(
                    bgo == cj,
                    json!({"pair": [i + 1, j + 1], "bgo": bgo}),
                    json!({"cj": cj}),
                )?;
            }
        }
    }
    if x.has_equal_charges() {
        expect_eq(
            &enumerate_hooks(x, HookKind::Bgo).len(),
            &enumerate_hooks(x, HookKind::Cj).len(),
        )?;
    }
    Ok(())
}

fn gaps_before(x: &Symbol, runner: usize, limit: usize) -> usize {
    (0..limit)
        .filter(|&g| !x.components()[runner - 1].contains(g))
        .count()
}

/// Hooks found by testing every `(a, b, i, j)` against the definitions.
fn brute_force_hooks(x: &Symbol, kind: HookKind, bound: usize) -> Vec<Hook> {
    let mut out = Vec::new();
    for i in 1..=x.l() {
        for &a in x.components()[i - 1].entries() {
            for j in 1..=x.l() {
                for b in 0..bound {
                    if x.components()[j - 1].contains(b) {
                        continue;
                    }
                    let keep = match kind {
                        HookKind::Bgo => a > b || (a == b && i > j),
                        HookKind::Cj => gaps_before(x, i, a) > gaps_before(x, j, b),
                    };
                    if keep {
                        out.push(Hook::new(a, b, i, j));
                    }
                }
            }
        }
    }
    out
}

fn check_count_formulas(c: &SymbolCase) -> Outcome {
    let x = &c.symbol;
    let bound = x.max_entry().unwrap_or(0) * 2 + 2;
    for kind in [HookKind::Bgo, HookKind::Cj] {
        let brute = brute_force_hooks(x, kind, bound);
        expect_eq(&sorted(brute.clone()), &sorted(enumerate_hooks(x, kind)))?;
        for i in 1..=x.l() {
            for &a in x.components()[i - 1].entries() {
                for j in 1..=x.l() {
                    let counted = brute
                        .iter()
                        .filter(|h| h.a == a && h.i == i && h.j == j)
                        .count();
                    let formula = hook_count_at(x, a, i, j, kind)?;
                    expect(
                        counted == formula,
                        json!({"kind": kind, "a": a, "i": i, "j": j, "count": counted}),
                        json!({"formula": formula}),
                    )?;
                }
            }
        }
    }
    let diag = |kind| -> Vec<Hook> {
        enumerate_hooks(x, kind)
            .into_iter()
            .filter(Hook::is_diagonal)
            .collect()
    };
    expect_eq(&diag(HookKind::Bgo), &diag(HookKind::Cj))
}

fn check_injection(c: &SymbolCase) -> Outcome {
    let x = &c.symbol;
    let f = injection_f(x)?;
    let cj: BTreeSet<Hook> = enumerate_hooks(x, HookKind::Cj).into_iter().collect();
    let bgo: BTreeSet<Hook> = enumerate_hooks(x, HookKind::Bgo).into_iter().collect();
    let domain: BTreeSet<Hook> = f.iter().map(|(s, _)| *s).collect();
    expect(
        domain == cj && f.len() == cj.len(),
        json!({"domain": cj}),
        json!({"domain": domain}),
    )?;
    let image: BTreeSet<Hook> = f.iter().map(|(_, t)| *t).collect();
    expect(
        image.len() == f.len(),
        json!("injective"),
        json!({"pairs": f}),
    )?;
    for (src, tgt) in &f {
        let bad = |why: &str| {
            Box::new(Mismatch {
                expected: json!(why),
                actual: json!({"source": src, "target": tgt}),
            })
        };
        if !bgo.contains(tgt) {
            return Err(bad("target is a BGO-hook"));
        }
        if src.length().abs() != tgt.length() {
            return Err(bad("|length| preserved"));
        }
        if bgo.contains(src) {
            if src != tgt {
                return Err(bad("identity on CJ ∩ BGO"));
            }
        } else if cj.contains(tgt) || (tgt.i, tgt.j) != (src.j, src.i) {
            return Err(bad("non-BGO source maps outside CJ with runners swapped"));
        }
    }
    if x.has_equal_charges() {
        expect(image == bgo, json!({"image": bgo}), json!({"image": image}))?;
    }
    Ok(())
}

/// For two hooks `(b+h, b, i, j)` and `(b'+h, b', i, j)` with every position
/// strictly between aligned (bead against bead, or gap against gap), the CJ
/// gap-count difference drops by exactly one from `b` to `b'`: the gap `b`
/// itself is counted on runner `j` only. So CJ-status of the upper hook
/// implies that of the lower one, and the converse can fail.
fn check_equal_gap(c: &SymbolCase) -> Outcome {
    let x = &c.symbol;
    let top = x.max_entry().unwrap_or(0) as i64 + 2;
    let bead = |r: usize, p: i64| p >= 0 && x.components()[r - 1].contains(p as usize);
    let excess = |i: usize, j: usize, a: i64, b: i64| -> i64 {
        gaps_before(x, i, a as usize) as i64 - gaps_before(x, j, b as usize) as i64
    };
    for i in 1..=x.l() {
        for j in 1..=x.l() {
            for h in -top..=top {
                let starts: Vec<i64> = (0..top)
                    .filter(|&b| !bead(j, b) && bead(i, b + h))
                    .collect();
                for (n, &b) in starts.iter().enumerate() {
                    for &b2 in &starts[n + 1..] {
                        if !(b + 1..b2).all(|k| bead(i, k + h) == bead(j, k)) {
                            break;
                        }
                        let h1 = Hook::new((b + h) as usize, b as usize, i, j);
                        let h2 = Hook::new((b2 + h) as usize, b2 as usize, i, j);
                        let (d1, d2) = (excess(i, j, b + h, b), excess(i, j, b2 + h, b2));
                        expect(
                            d2 == d1 - 1,
                            json!({"hook": h1, "excess": d1}),
                            json!({"hook": h2, "excess": d2}),
                        )?;
                        let (c1, c2) = (is_cj_hook(x, &h1)?, is_cj_hook(x, &h2)?);
                        expect(
                            c1 || !c2,
                            json!({"hook": h1, "cj": c1}),
                            json!({"hook": h2, "cj": c2}),
                        )?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_scaled(c: &SymbolCase) -> Outcome {
    let x = &c.symbol;
    let k = c.k;
    let scale = |h: &Hook| Hook::new(k * h.a, k * h.b, h.i, h.j);
    let expected: Vec<Hook> = enumerate_hooks(x, HookKind::Bgo)
        .iter()
        .map(scale)
        .collect();
    expect_eq(
        &sorted(expected),
        &sorted(scaled_hooks(x, k, HookKind::Bgo)?),
    )?;

    // gaps of kX below ka number (k-1)a + gaps of X below a
    let bound = 4 * (x.max_entry().unwrap_or(0) + 2);
    let mut expected = Vec::new();
    for i in 1..=x.l() {
        for &a in x.components()[i - 1].entries() {
            for j in 1..=x.l() {
                for b in (0..bound).filter(|&b| !x.components()[j - 1].contains(b)) {
                    let excess = (k as i64 - 1) * (a as i64 - b as i64)
                        + gaps_before(x, i, a) as i64
                        - gaps_before(x, j, b) as i64;
                    if excess > 0 {
                        expected.push(Hook::new(k * a, k * b, i, j));
                    }
                }
            }
        }
    }
    let scaled_cj = sorted(scaled_hooks(x, k, HookKind::Cj)?);
    expect_eq(&sorted(expected), &scaled_cj)?;
    let scaled_set: BTreeSet<Hook> = scaled_cj.iter().copied().collect();
    for h in enumerate_hooks(x, HookKind::Cj)
        .iter()
        .filter(|h| h.a >= h.b)
    {
        expect(
            scaled_set.contains(&scale(h)),
            json!({"scaled": scale(h)}),
            json!("not a CJ-hook of kX"),
        )?;
    }
    if x.has_equal_charges() {
        let base: IntMultiset = hook_lengths(x, HookKind::Cj)
            .iter()
            .map(|h| h.abs() * k as i64)
            .collect();
        expect_eq(&base, &lengths_of(&scaled_cj).abs())?;
    }
    Ok(())
}

fn check_translation(c: &SymbolCase) -> Outcome {
    let x = &c.symbol;
    let s = &c.s;
    let y = x.shift(s)?;
    let moved: Vec<Hook> = enumerate_hooks(x, HookKind::Cj)
        .iter()
        .map(|h| Hook::new(h.a + s[h.i - 1], h.b + s[h.j - 1], h.i, h.j))
        .collect();
    expect_eq(&sorted(moved), &sorted(enumerate_hooks(&y, HookKind::Cj)))?;
    expect_eq(
        &hook_lengths_shifted(x, 1, s, HookKind::Cj)?,
        &hook_lengths(&y, HookKind::Cj),
    )
}

fn check_charged_scaled(c: &SymbolCase) -> Outcome {
    let x = &c.symbol;
    let cj = lengths_of(&charged_scaled_hooks_of_symbol(x, c.k, &c.s, HookKind::Cj)?).abs();
    let bgo = hook_lengths_shifted(x, c.k, &c.s, HookKind::Bgo)?.abs();
    expect_eq(&bgo, &cj)
}

fn check_dt_containment(c: &SymbolCase) -> Outcome {
    let x = &c.symbol;
    let core = dt_core(x, c.d, c.t)?.core;
    let small = hook_lengths(&core, HookKind::Bgo).nonzero();
    let big = hook_lengths(x, HookKind::Bgo).nonzero();
    expect(
        small.is_submultiset_of(&big),
        json!({"contained_in": big}),
        json!({"core_lengths": small}),
    )
}

fn check_dt_componentwise(c: &SymbolCase) -> Outcome {
    let x = &c.symbol;
    let core = dt_core(x, 0, c.t)?.core;
    expect_eq(&x.multicharge(), &core.multicharge())?;
    for (orig, reduced) in x.components().iter().zip(core.components()) {
        let expected = oracle_rim_hook_core(&partition_of_beta_set(orig), c.t)?;
        expect_eq(&expected, &partition_of_beta_set(reduced))?;
    }
    Ok(())
}

fn check_dt_order(c: &SymbolCase) -> Outcome {
    let base = dt_core(&c.symbol, c.d, c.t)?.core;
    for r in 0..50 {
        let mut rng = ChaCha8Rng::seed_from_u64(c.seed.wrapping_add(r));
        let other = dt_core_by(&c.symbol, c.d, c.t, |hs| rng.gen_range(0..hs.len()))?.core;
        expect_eq(&base, &other)?;
    }
    Ok(())
}

fn check_particore(c: &PartitionCase) -> Outcome {
    let e = e_of(c.e);
    let qd = quotient_data(&c.partition, e)?;
    let hooks = charged_scaled_hooks(
        &qd.quotient,
        e,
        &qd.tilde_s(),
        HookKind::Cj,
        Some(qd.common_charge()),
    )?;
    let rhs = oracle_young_hooks(&qd.core).union(&lengths_of(&hooks).abs());
    expect_eq(&oracle_young_hooks(&c.partition), &rhs)?;
    expect_eq(
        &c.partition.rank(),
        &(qd.core.rank() + e * qd.quotient.rank()),
    )
}

fn check_particore_bgo(c: &PartitionCase) -> Outcome {
    let e = e_of(c.e);
    let qd = quotient_data(&c.partition, e)?;
    let shifted = hook_lengths_shifted(&qd.quotient_symbol(), e, &qd.tilde_s(), HookKind::Bgo)?;
    let rhs = oracle_young_hooks(&qd.core).union(&shifted.abs());
    expect_eq(&oracle_young_hooks(&c.partition), &rhs)
}

fn check_a_identity(c: &PartitionCase) -> Outcome {
    let e = e_of(c.e);
    let lambda = &c.partition;
    let qd = quotient_data(lambda, e)?;
    let a_lambda = a_value(&Multipartition::single(lambda.clone()), &[0], 1)?;
    expect_eq(&(lambda.weighted_sum() as i64), &a_lambda)?;
    let a_core = a_value(&Multipartition::single(qd.core.clone()), &[0], 1)?;
    let a_quot = a_value(&qd.quotient, &qd.tilde_s(), e)?;
    expect_eq(&a_lambda, &(a_core + a_quot))
}

fn check_main_type_a(c: &PartitionCase) -> Outcome {
    let e = e_of(c.e);
    let lambda = &c.partition;
    let qd = quotient_data(lambda, e)?;
    let univariate = |p: &Partition| -> Result<_> {
        specialize(&schur_tilde(&Multipartition::single(p.clone()))?, 1, &[0])
    };
    let lhs = univariate(lambda)?;
    let theta = specialize(&schur_tilde(&qd.quotient)?, e, &to_signed(&qd.tilde_s()))?;
    let rhs = univariate(&qd.core)?.mul(&theta)?;
    let sign = if lhs == rhs {
        1
    } else if lhs == rhs.neg() {
        -1
    } else {
        return Err(Box::new(Mismatch {
            expected: json!(lhs.to_string()),
            actual: json!(rhs.to_string()),
        }));
    };
    expect_eq(&sign, &factorization_check(lambda, e)?)
}

fn check_oracle_hooks(c: &PartitionCase) -> Outcome {
    let x = Symbol::new(vec![c.partition.beta_set()])?;
    let oracle = oracle_young_hooks(&c.partition);
    expect_eq(&oracle, &hook_lengths(&x, HookKind::Bgo))?;
    expect_eq(&oracle, &hook_lengths(&x, HookKind::Cj))
}

fn check_oracle_cores(c: &PartitionCase) -> Outcome {
    let e = e_of(c.e);
    let core = e_core(&c.partition, e)?;
    expect_eq(&oracle_rim_hook_core(&c.partition, e)?, &core)?;
    let (es, _) = es_core(&Multipartition::single(c.partition.clone()), e, &[0])?;
    expect_eq(&Multipartition::single(core), &es)
}

fn check_bgo_decomposition(c: &MultiCase) -> Outcome {
    let lambda = &c.multipartition;
    let s = s_of(&c.s);
    let m = lambda.default_common_charge();
    let x = symbol_of_multipartition(lambda, 1, s, Some(m))?;
    let empty = symbol_of_multipartition(&Multipartition::empty(lambda.l())?, 1, s, Some(m))?;
    let rhs = hook_lengths(&x, HookKind::Cj)
        .abs()
        .union(&hook_lengths(&empty, HookKind::Bgo));
    expect_eq(&hook_lengths(&x, HookKind::Bgo), &rhs)
}

fn packed_bgo(x: &Symbol) -> Result<IntMultiset> {
    Ok(hook_lengths(
        &Symbol::packed(&x.multicharge())?,
        HookKind::Bgo,
    ))
}

fn check_es_containment(c: &MultiCase) -> Outcome {
    let e = e_of(c.e);
    let s = s_of(&c.s);
    let x = symbol_of_multipartition(&c.multipartition, 1, s, None)?;
    let res = es_core_symbol(&x, e)?;
    let core = &res.core;
    let core_cj = hook_lengths(core, HookKind::Cj);
    expect(
        !core_cj.contains(0),
        json!("0 ∉ HL^CJ of the core"),
        json!({"core": core, "lengths": core_cj}),
    )?;
    expect(
        es_core_symbol(core, e)?.trace.is_empty(),
        json!("core is a fixed point"),
        json!({"core": core}),
    )?;
    let wraps = res.trace.iter().filter(|h| h.a != h.b).count();
    expect_eq(&(x.entry_sum() - core.entry_sum()), &(wraps * e))?;
    let small = core_cj.abs().union(&packed_bgo(core)?).nonzero();
    let big = hook_lengths(&x, HookKind::Cj)
        .abs()
        .union(&packed_bgo(&x)?)
        .nonzero();
    expect(
        small.is_submultiset_of(&big),
        json!({"contained_in": big}),
        json!({"core_side": small}),
    )?;
    if s.iter().all(|&v| v == 0) {
        let small = core_cj.abs();
        let big = hook_lengths(&x, HookKind::Cj).abs();
        expect(
            small.is_submultiset_of(&big),
            json!({"contained_in": big}),
            json!({"core_cj": small}),
        )?;
    }
    Ok(())
}

fn check_two_path(c: &MultiCase) -> Outcome {
    let k = c.k.expect("case generated with k");
    let s = to_signed(s_of(&c.s));
    let via_poly = specialize(&schur_tilde(&c.multipartition)?, k, &s)?;
    expect_eq(
        &via_poly,
        &specialized_schur_tilde(&c.multipartition, k, &s)?,
    )
}

fn check_valuation(c: &MultiCase) -> Outcome {
    let lambda = &c.multipartition;
    let k = c.k.expect("case generated with k");
    let s = s_of(&c.s);
    let signed = to_signed(s);
    let a = a_value(lambda, s, k)?;
    let ks: Vec<usize> = s.iter().map(|&x| k * x).collect();
    expect_eq(
        &(k as i64 * a_value(lambda, s, 1)?),
        &a_value(lambda, &ks, k)?,
    )?;
    let m = stable_common_charge(lambda, s, k)?;
    expect_eq(&a, &a_value_with_charge(lambda, s, k, Some(m + 3))?)?;
    if specialized_schur_tilde(lambda, k, &signed)?.is_zero() {
        return Ok(());
    }
    let (v, sign) = valuation_and_sign(lambda, k, &signed)?;
    expect_eq(&-a, &v)?;
    let negatives = specialized_lengths(lambda, k, &signed)?.count_negative();
    let parity = lambda.rank() * (lambda.l() - 1) + negatives;
    expect_eq(&if parity.is_multiple_of(2) { 1 } else { -1 }, &sign)
}

fn check_bgo_unit(c: &MultiCase) -> Outcome {
    bgo_unit(&c.multipartition)?;
    Ok(())
}

fn check_divisibility(c: &MultiCase) -> Outcome {
    let report = divisibility_check(&c.multipartition, e_of(c.e), s_of(&c.s))?;
    expect_eq(&report.dividend, &report.quotient.mul(&report.divisor)?)
}

fn check_semisimplicity(c: &SemisimpleCase) -> Outcome {
    let ariki = ariki_semisimple_at_root(c.n, c.l, c.e, c.k, &c.s)?;
    let schur = semisimplicity_via_schur(c.n, c.l, c.e, c.k, &c.s)?;
    expect_eq(&ariki, &schur)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_names_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.name().parse::<TheoremId>().unwrap(), t);
            assert_eq!(serde_json::to_value(t).unwrap(), json!(t.name()));
        }
        assert_eq!(
            "mainTypeA".parse::<TheoremId>().unwrap(),
            TheoremId::MainTypeA
        );
        assert_eq!("bij".parse::<TheoremId>().unwrap(), TheoremId::Injection);
        assert_eq!(
            "A_Identity".parse::<TheoremId>().unwrap(),
            TheoremId::AIdentity
        );
        assert!(matches!(
            "nope".parse::<TheoremId>(),
            Err(Error::UnknownTheoremId(_))
        ));
    }

    #[test]
    fn aligned_hooks_can_differ_in_cj_status() {
        // no position lies strictly between the gaps 0 and 1 of the second runner
        let x = Symbol::from_entries(vec![vec![1, 2], vec![]]).unwrap();
        assert!(is_cj_hook(&x, &Hook::new(1, 0, 1, 2)).unwrap());
        assert!(!is_cj_hook(&x, &Hook::new(2, 1, 1, 2)).unwrap());
    }

    #[test]
    fn scaling_can_create_cj_hooks() {
        let x = Symbol::from_entries(vec![vec![0, 2], vec![]]).unwrap();
        assert!(!is_cj_hook(&x, &Hook::new(2, 1, 1, 2)).unwrap());
        let y = x.scale(2).unwrap();
        assert!(is_cj_hook(&y, &Hook::new(4, 2, 1, 2)).unwrap());
    }

    #[test]
    fn particore_on_single_example() {
        let spec = InstanceSpec {
            lambda: Some(Multipartition::from_parts(vec![vec![3, 2, 1, 1, 1]]).unwrap()),
            e_range: (3, 3),
            ..InstanceSpec::default()
        };
        let report = verify(TheoremId::Particore, &spec).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        assert_eq!(report.instances_checked, 1);
    }

    #[test]
    fn small_sweeps_pass() {
        for t in TheoremId::ALL {
            let spec = InstanceSpec {
                n_max: 3,
                l_max: 2,
                e_range: (2, 3),
                k_range: (1, 2),
                s_bound: 2,
                entry_max: 10,
                mode: if t.default_spec().mode == Mode::Exhaustive {
                    Mode::Exhaustive
                } else {
                    Mode::Random(30)
                },
                l_min: t.default_spec().l_min,
                ..InstanceSpec::default()
            };
            let report = verify(t, &spec).unwrap();
            assert!(report.passed(), "{t}: {:?}", report.failures.first());
        }
    }
}
