//! Published worked examples, shared by the golden tests and the acceptance run.

#![allow(dead_code)]

use std::fmt::Debug;

use genhooks::combinatorics::{
    beta_set_of_partition, multipartition_of_symbol, partition_of_beta_set, shift_symbol,
    symbol_of_multipartition, BetaSet, Multipartition, Partition, Symbol,
};
use genhooks::cores::{a_value, dt_core, e_abacus, e_core, e_quotient};
use genhooks::hooks::{
    charged_scaled_hooks, hook_lengths, hook_lengths_shifted, is_bgo_hook, is_cj_hook, lengths_of,
    scaled_hooks, Hook, HookKind, IntMultiset,
};
use genhooks::schur::{specialized_schur_tilde, valuation_and_sign, LaurentPoly};

pub type Check = fn() -> Result<(), String>;

pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn mp(c: &[&[usize]]) -> Multipartition {
    Multipartition::from_parts(c.iter().map(|x| x.to_vec()).collect()).unwrap()
}

pub fn sym(c: &[&[usize]]) -> Symbol {
    Symbol::from_entries(c.iter().map(|x| x.to_vec()).collect()).unwrap()
}

pub fn ms(xs: &[i64]) -> IntMultiset {
    IntMultiset::from(xs.to_vec())
}

fn eq<T: PartialEq + Debug>(what: &str, actual: T, expected: T) -> Result<(), String> {
    if actual == expected {
        Ok(())
    } else {
        Err(format!("{what}: expected {expected:?}, got {actual:?}"))
    }
}

fn ok<T>(r: genhooks::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn worked_partition() -> Result<(), String> {
    let lam = p(&[3, 2, 1, 1, 1]);
    eq(
        "X(λ)",
        beta_set_of_partition(&lam),
        BetaSet::new(vec![0, 2, 3, 4, 6, 8]).unwrap(),
    )?;
    eq(
        "Λ(X)",
        partition_of_beta_set(&BetaSet::new(vec![0, 2, 3, 4, 6, 8]).unwrap()),
        lam.clone(),
    )?;
    eq(
        "Λ(X)",
        partition_of_beta_set(&BetaSet::new(vec![0, 3, 4, 6, 8]).unwrap()),
        p(&[4, 3, 2, 2]),
    )?;
    let y = ok(e_abacus(&lam, 3))?;
    eq("Y(λ)", y.clone(), sym(&[&[0, 1, 2], &[1], &[0, 2]]))?;
    eq("multicharge", y.multicharge(), vec![3, 1, 2])?;
    eq("quotient", ok(e_quotient(&lam, 3))?, mp(&[&[], &[1], &[1]]))?;
    eq("core", ok(e_core(&lam, 3))?, p(&[1, 1]))?;
    eq(
        "HL(λ)",
        hook_lengths(&Symbol::new(vec![lam.beta_set()]).unwrap(), HookKind::Cj),
        ms(&[1, 1, 1, 2, 3, 3, 5, 7]),
    )?;
    eq(
        "HL(λ°)",
        hook_lengths(
            &Symbol::new(vec![p(&[1, 1]).beta_set()]).unwrap(),
            HookKind::Bgo,
        ),
        ms(&[1, 2]),
    )
}

fn scaling_and_shifting() -> Result<(), String> {
    let x = sym(&[&[0, 2, 3], &[0, 1, 2]]);
    let kx = ok(x.scale(2))?;
    eq("kX", kx.clone(), sym(&[&[0, 4, 6], &[0, 2, 4]]))?;
    eq(
        "X[s]",
        ok(shift_symbol(&x, &[1, 4]))?,
        sym(&[&[0, 1, 3, 4], &[0, 1, 2, 3, 4, 5, 6]]),
    )?;
    eq(
        "(kX)[s]",
        ok(shift_symbol(&kx, &[1, 4]))?,
        sym(&[&[0, 1, 5, 7], &[0, 1, 2, 3, 4, 6, 8]]),
    )?;
    eq(
        "HL_2^BGO",
        lengths_of(&ok(scaled_hooks(&x, 2, HookKind::Bgo))?),
        ms(&[2, 4, 0, 2]),
    )?;
    eq(
        "HL_2^CJ",
        lengths_of(&ok(scaled_hooks(&x, 2, HookKind::Cj))?),
        ms(&[2, 4, 0, 2]),
    )?;
    eq(
        "HL^BGO[k;s]",
        ok(hook_lengths_shifted(&x, 2, &[1, 4], HookKind::Bgo))?,
        ms(&[2, 4, 3, 5]),
    )?;
    eq(
        "HL^CJ[k;s]",
        ok(hook_lengths_shifted(&x, 2, &[1, 4], HookKind::Cj))?,
        ms(&[2, 4, -3, -5]),
    )?;
    eq(
        "HL^CJ(X)",
        hook_lengths(&x, HookKind::Cj),
        ms(&[1, 2, 0, -1]),
    )?;
    eq(
        "HL^BGO(X)",
        hook_lengths(&x, HookKind::Bgo),
        ms(&[1, 2, 0, 1]),
    )
}

fn charged_scaled_set() -> Result<(), String> {
    let (lam, _) = multipartition_of_symbol(&sym(&[&[0, 2, 3], &[0, 1, 2]]));
    let mut hooks = ok(charged_scaled_hooks(
        &lam,
        2,
        &[1, 4],
        HookKind::Cj,
        Some(3),
    ))?;
    hooks.sort_by_key(|h| (h.a, h.b, h.i, h.j));
    let expected = vec![
        Hook::new(5, 3, 1, 1),
        Hook::new(7, 3, 1, 1),
        Hook::new(7, 10, 1, 2),
        Hook::new(8, 3, 2, 1),
    ];
    eq("H^CJ_{k,s}", hooks.clone(), expected)?;
    eq("HL^CJ_{k,s}", lengths_of(&hooks), ms(&[2, 4, -3, 5]))
}

fn symbols_of_multipartitions() -> Result<(), String> {
    let lam = mp(&[&[], &[1], &[1]]);
    eq(
        "X^{1,0}",
        ok(symbol_of_multipartition(&lam, 1, &[0, 0, 0], Some(3)))?,
        sym(&[&[0, 1, 2], &[0, 1, 3], &[0, 1, 3]]),
    )?;
    let x = ok(symbol_of_multipartition(&lam, 3, &[9, 4, 8], Some(3)))?;
    let expected = sym(&[
        &[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 15],
        &[0, 1, 2, 3, 4, 7, 13],
        &[0, 1, 2, 3, 4, 5, 6, 7, 8, 11, 17],
    ]);
    eq("X^{3,(9,4,8)}", x, expected)?;
    let (lam, s) = multipartition_of_symbol(&sym(&[&[0, 1, 2, 5], &[0, 3, 4]]));
    eq("Λ(X)", (lam, s), (mp(&[&[2], &[2, 2]]), vec![4, 3]))?;
    let (_, s) = multipartition_of_symbol(&sym(&[&[0, 2, 4, 6], &[0, 3, 4], &[0, 2, 5]]));
    eq("s(X)", s, vec![4, 3, 3])
}

fn hook_predicates() -> Result<(), String> {
    let x = sym(&[&[0, 2, 4, 6], &[0, 3, 4], &[0, 2, 5]]);
    let bgo = Hook::new(2, 2, 3, 2);
    let cj = Hook::new(3, 3, 2, 3);
    eq("BGO (2,2,3,2)", ok(is_bgo_hook(&x, &bgo))?, true)?;
    eq("CJ (2,2,3,2)", ok(is_cj_hook(&x, &bgo))?, false)?;
    eq("CJ (3,3,2,3)", ok(is_cj_hook(&x, &cj))?, true)?;
    eq("BGO (3,3,2,3)", ok(is_bgo_hook(&x, &cj))?, false)
}

fn hook_multisets() -> Result<(), String> {
    let x = sym(&[&[0, 5], &[0, 1, 4]]);
    eq(
        "BGO",
        hook_lengths(&x, HookKind::Bgo),
        ms(&[1, 1, 2, 2, 3, 4, 0, 0, 1, 2, 3, 2, 3]),
    )?;
    eq(
        "CJ",
        hook_lengths(&x, HookKind::Cj),
        ms(&[1, 1, 2, 2, 3, 4, -1, 0, 2, 3, 2, 3]),
    )?;
    let x = sym(&[&[0, 1, 2, 5], &[0, 3, 4]]);
    eq(
        "BGO",
        hook_lengths(&x, HookKind::Bgo),
        ms(&[1, 1, 2, 2, 2, 3, 0, 0, 1, 1, 3, 4]),
    )?;
    eq(
        "CJ",
        hook_lengths(&x, HookKind::Cj),
        ms(&[1, 1, 2, 2, 2, 3, -1, 0, 0, 1, 3, 4]),
    )
}

fn dt_cores() -> Result<(), String> {
    let x = sym(&[&[0, 2, 4, 7], &[0, 2, 3, 4, 6, 8]]);
    eq(
        "X[0,3]",
        ok(dt_core(&x, 0, 3))?.core,
        sym(&[&[0, 1, 2, 4], &[0, 1, 2, 3, 5, 6]]),
    )?;
    eq(
        "X[1,3]",
        ok(dt_core(&x, 1, 3))?.core,
        sym(&[&[0, 1, 2, 3, 5], &[0, 1, 2, 3, 4]]),
    )
}

fn a_values() -> Result<(), String> {
    let single = |parts: &[usize]| Multipartition::single(p(parts));
    eq("a(λ)", ok(a_value(&single(&[3, 2, 1, 1, 1]), &[0], 1))?, 11)?;
    eq("a(λ°)", ok(a_value(&single(&[1, 1]), &[0], 1))?, 1)?;
    eq(
        "a_{s̃,3}",
        ok(a_value(&mp(&[&[], &[1], &[1]]), &[9, 4, 8], 3))?,
        10,
    )
}

fn core_example_specialisation() -> Result<(), String> {
    let lam = mp(&[&[], &[1], &[1]]);
    let hooks = ok(charged_scaled_hooks(
        &lam,
        3,
        &[9, 4, 8],
        HookKind::Cj,
        Some(3),
    ))?;
    eq(
        "HL^CJ_{3,(9,4,8)}",
        lengths_of(&hooks),
        ms(&[3, -5, -1, 3, -1, 7]),
    )?;
    let mut expected = LaurentPoly::q_power(-3);
    for h in [3, 3, -5, -1, -1, 7] {
        expected = ok(expected.mul(&LaurentPoly::binomial_minus_one(&[h])))?;
    }
    eq(
        "θ(s̃)",
        ok(specialized_schur_tilde(&lam, 3, &[9, 4, 8]))?,
        expected,
    )?;
    eq(
        "valuation",
        ok(valuation_and_sign(&lam, 3, &[9, 4, 8]))?.0,
        -10,
    )?;
    eq(
        "valuation",
        ok(valuation_and_sign(
            &Multipartition::single(p(&[3, 2, 1, 1, 1])),
            1,
            &[0],
        ))?
        .0,
        -11,
    )
}

pub const GOLDEN: &[(&str, Check)] = &[
    ("worked_partition", worked_partition),
    ("scaling_and_shifting", scaling_and_shifting),
    ("charged_scaled_set", charged_scaled_set),
    ("symbols_of_multipartitions", symbols_of_multipartitions),
    ("hook_predicates", hook_predicates),
    ("hook_multisets", hook_multisets),
    ("dt_cores", dt_cores),
    ("a_values", a_values),
    ("core_example_specialisation", core_example_specialisation),
];
