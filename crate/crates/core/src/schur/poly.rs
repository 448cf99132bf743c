//! Sparse Laurent polynomials in `q, Q_1, ..., Q_l` over the integers.
//!
//! Terms are kept sorted by exponent vector (lexicographic, `q` first) with
//! no zero coefficients, so structural equality is polynomial equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{check_len, Error, Result};

pub type Exponent = SmallVec<[i32; 6]>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: Vec<(Exponent, BigInt)>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(c, &vec![0; nvars])
    }

    pub fn monomial(coeff: impl Into<BigInt>, exponent: &[i32]) -> Self {
        let coeff = coeff.into();
        let nvars = exponent.len();
        if coeff.is_zero() {
            return Self::zero(nvars);
        }
        LaurentPoly {
            nvars,
            terms: vec![(Exponent::from_slice(exponent), coeff)],
        }
    }

    /// `x^exponent - 1`.
    pub fn binomial_minus_one(exponent: &[i32]) -> Self {
        Self::monomial(1, exponent)
            .sub(&Self::one(exponent.len()))
            .expect("same variable count")
    }

    /// Univariate `q^e`.
    pub fn q_power(e: i32) -> Self {
        Self::monomial(1, &[e])
    }

    pub fn from_terms<I, C>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i32>, C)>,
        C: Into<BigInt>,
    {
        let mut acc: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (exp, c) in terms {
            check_len(nvars, exp.len())?;
            *acc.entry(Exponent::from_vec(exp)).or_default() += c.into();
        }
        Ok(Self::from_map(nvars, acc))
    }

    fn from_map(nvars: usize, map: BTreeMap<Exponent, BigInt>) -> Self {
        let terms = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        LaurentPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Exponent, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some((coeff, exponent))` if this is a single term.
    pub fn as_monomial(&self) -> Option<(&BigInt, &[i32])> {
        match self.terms.as_slice() {
            [(e, c)] => Some((c, e.as_slice())),
            _ => None,
        }
    }

    /// Lowest `q` exponent and its coefficient; for univariate polynomials
    /// this is the valuation and the lowest coefficient.
    pub fn lowest_term(&self) -> Option<(&[i32], &BigInt)> {
        self.terms.first().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn highest_term(&self) -> Option<(&[i32], &BigInt)> {
        self.terms.last().map(|(e, c)| (e.as_slice(), c))
    }

    fn check_vars(&self, other: &LaurentPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(other)?;
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms: merge(&self.terms, &other.terms, false),
        })
    }

    pub fn sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(other)?;
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms: merge(&self.terms, &other.terms, true),
        })
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiplication by `coeff * x^exponent`.
    pub fn mul_monomial(&self, coeff: &BigInt, exponent: &[i32]) -> Result<LaurentPoly> {
        check_len(self.nvars, exponent.len())?;
        if coeff.is_zero() {
            return Ok(LaurentPoly::zero(self.nvars));
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (add_exp(e, exponent), c * coeff))
            .collect();
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms,
        })
    }

    /// Multiplication by `x^exponent - 1`, the factor shape of every Schur product.
    pub fn mul_binomial(&self, exponent: &[i32]) -> Result<LaurentPoly> {
        check_len(self.nvars, exponent.len())?;
        let shifted: Vec<_> = self
            .terms
            .iter()
            .map(|(e, c)| (add_exp(e, exponent), c.clone()))
            .collect();
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms: merge(&shifted, &self.terms, true),
        })
    }

    pub fn mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(LaurentPoly::zero(self.nvars));
        }
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        if let Some((c, e)) = small.as_monomial() {
            return large.mul_monomial(c, e);
        }
        let mut acc: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (e1, c1) in &small.terms {
            for (e2, c2) in &large.terms {
                *acc.entry(add_exp(e1, e2)).or_default() += c1 * c2;
            }
        }
        Ok(LaurentPoly::from_map(self.nvars, acc))
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut out = LaurentPoly::one(self.nvars);
        for _ in 0..n {
            out = out.mul(self).expect("same variable count");
        }
        out
    }

    /// Per-variable minimum exponent (zero vector for the zero polynomial).
    fn min_exponents(&self) -> Vec<i32> {
        let mut m: Vec<i32> = match self.terms.first() {
            Some((e, _)) => e.to_vec(),
            None => return vec![0; self.nvars],
        };
        for (e, _) in &self.terms {
            for (v, &x) in m.iter_mut().zip(e.iter()) {
                *v = (*v).min(x);
            }
        }
        m
    }

    /// The quotient `p / d` when it is a Laurent polynomial.
    ///
    /// Both sides are first multiplied by monomials to become ordinary
    /// polynomials with no monomial factor, then divided by repeated
    /// cancellation of the lexicographically leading term.
    pub fn exact_divide(&self, d: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(d)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero(self.nvars));
        }
        let alpha = self.min_exponents();
        let beta = d.min_exponents();
        let neg = |v: &[i32]| -> Vec<i32> { v.iter().map(|x| -x).collect() };
        let p = self.mul_monomial(&BigInt::one(), &neg(&alpha))?;
        let d = d.mul_monomial(&BigInt::one(), &neg(&beta))?;

        let (lead_exp, lead_coeff) = d
            .terms
            .last()
            .map(|(e, c)| (e.clone(), c.clone()))
            .expect("nonzero");
        let mut rem: BTreeMap<Exponent, BigInt> = p.terms.into_iter().collect();
        let mut quot: BTreeMap<Exponent, BigInt> = BTreeMap::new();

        while let Some((top_exp, top_coeff)) =
            rem.iter().next_back().map(|(e, c)| (e.clone(), c.clone()))
        {
            let shift: Option<Exponent> = top_exp
                .iter()
                .zip(lead_exp.iter())
                .map(|(&a, &b)| (a >= b).then_some(a - b))
                .collect();
            let (shift, factor) = match shift {
                Some(shift) if (&top_coeff % &lead_coeff).is_zero() => {
                    (shift, &top_coeff / &lead_coeff)
                }
                _ => {
                    let remainder = LaurentPoly::from_map(self.nvars, rem)
                        .mul_monomial(&BigInt::one(), &alpha)?;
                    return Err(Error::NotDivisible {
                        remainder: Box::new(remainder),
                    });
                }
            };
            for (e, c) in &d.terms {
                let key = add_exp(e, &shift);
                let entry = rem.entry(key.clone()).or_default();
                *entry -= &factor * c;
                if entry.is_zero() {
                    rem.remove(&key);
                }
            }
            *quot.entry(shift).or_default() += factor;
        }

        let shift: Vec<i32> = alpha.iter().zip(&beta).map(|(a, b)| a - b).collect();
        LaurentPoly::from_map(self.nvars, quot).mul_monomial(&BigInt::one(), &shift)
    }

    /// Image under `q -> q^k`, `Q_i -> q^{s_i}`; the result is univariate.
    pub fn specialize(&self, k: i64, s: &[i64]) -> Result<LaurentPoly> {
        check_len(self.nvars.saturating_sub(1), s.len())?;
        let mut acc: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut exp = k * e[0] as i64;
            for (x, si) in e[1..].iter().zip(s) {
                exp += *x as i64 * si;
            }
            *acc.entry(Exponent::from_slice(&[to_i32(exp)])).or_default() += c;
        }
        Ok(LaurentPoly::from_map(1, acc))
    }

    pub fn var_names(&self) -> Vec<String> {
        var_names(self.nvars)
    }
}

fn to_i32(x: i64) -> i32 {
    i32::try_from(x).expect("exponent fits in i32")
}

fn add_exp(a: &[i32], b: &[i32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Merges two sorted term lists, subtracting the second if `negate`.
fn merge(
    a: &[(Exponent, BigInt)],
    b: &[(Exponent, BigInt)],
    negate: bool,
) -> Vec<(Exponent, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let sign = |c: &BigInt| if negate { -c } else { c.clone() };
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push((b[j].0.clone(), sign(&b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate {
                    &a[i].1 - &b[j].1
                } else {
                    &a[i].1 + &b[j].1
                };
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|(e, c)| (e.clone(), sign(c))));
    out
}

pub fn var_names(nvars: usize) -> Vec<String> {
    std::iter::once("q".to_string())
        .chain((1..nvars).map(|i| format!("Q{i}")))
        .collect()
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.var_names();
        for (n, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = e
                .iter()
                .zip(&names)
                .filter(|(x, _)| **x != 0)
                .map(|(x, v)| {
                    if *x == 1 {
                        v.clone()
                    } else {
                        format!("{v}^{x}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: Vec<i32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    vars: Vec<String>,
    terms: Vec<TermRepr>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr {
            vars: self.var_names(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermRepr {
                    exp: e.to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(deserializer)?;
        if repr.vars != var_names(repr.vars.len()) || repr.vars.is_empty() {
            return Err(D::Error::custom("variables must be q, Q1, ..., Ql"));
        }
        let terms = repr
            .terms
            .into_iter()
            .map(|t| {
                let c: BigInt = t
                    .coeff
                    .parse()
                    .map_err(|_| D::Error::custom(format!("bad coefficient `{}`", t.coeff)))?;
                Ok((t.exp, c))
            })
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        LaurentPoly::from_terms(repr.vars.len(), terms).map_err(D::Error::custom)
    }
}
