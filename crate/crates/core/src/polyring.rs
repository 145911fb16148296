//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Variables come in tagged families (`x`, `y`, `z`, `u` and a lone scalar
//! `t`). Monomials are ordered graded-lexicographically with families in the
//! order `x < y < z < u < t` and indices ascending, so `x1` is the most
//! significant variable.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// `num/den`, with the denominator omitted when it is 1.
pub fn format_q(c: &Q) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn parse_q(s: &str) -> Result<Q> {
    let bad = || Error::Parse {
        token: s.to_string(),
        reason: "expected a rational number num/den".into(),
    };
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Family {
    X,
    Y,
    Z,
    U,
    T,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::X => 'x',
            Family::Y => 'y',
            Family::Z => 'z',
            Family::U => 'u',
            Family::T => 't',
        }
    }
}

/// A single indeterminate. Indices start at 1; `t` carries index 0.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Var {
    pub family: Family,
    pub index: u32,
}

impl Var {
    pub const T: Var = Var { family: Family::T, index: 0 };

    pub fn new(family: Family, index: u32) -> Self {
        Var { family, index }
    }

    pub fn x(i: u32) -> Self {
        Var::new(Family::X, i)
    }

    pub fn y(i: u32) -> Self {
        Var::new(Family::Y, i)
    }

    pub fn z(i: u32) -> Self {
        Var::new(Family::Z, i)
    }

    pub fn u(i: u32) -> Self {
        Var::new(Family::U, i)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family == Family::T {
            write!(f, "t")
        } else {
            write!(f, "{}{}", self.family.letter(), self.index)
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            token: s.to_string(),
            reason: "expected a variable like x1, y2 or t".into(),
        };
        if s == "t" {
            return Ok(Var::T);
        }
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('x') => Family::X,
            Some('y') => Family::Y,
            Some('z') => Family::Z,
            Some('u') => Family::U,
            _ => return Err(bad()),
        };
        let index: u32 = chars.as_str().parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        Ok(Var::new(family, index))
    }
}

/// A monomial as a sorted list of `(variable, exponent)` with positive exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    /// Builds a monomial from arbitrary `(var, exp)` pairs, merging repeats.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut map = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .iter()
            .find(|&&(w, _)| w == v)
            .map_or(0, |&(_, e)| e)
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }
}

impl Ord for Monomial {
    /// Graded lex: higher total degree is greater; ties are broken at the
    /// first variable (in variable order) where the exponents differ.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (a, b) = (&self.0, &other.0);
            let (mut i, mut j) = (0, 0);
            loop {
                match (a.get(i), b.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => {
                            if ea != eb {
                                return ea.cmp(&eb);
                            }
                            i += 1;
                            j += 1;
                        }
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial over the rationals; the zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Q>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v), Q::one())
    }

    pub fn term(m: Monomial, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Q::one())
    }

    /// `Σ_{i=1..n} v_i^e` over one family.
    pub fn power_sum(family: Family, n: u32, e: u32) -> Self {
        let mut out = MultiPoly::zero();
        for i in 1..=n {
            out.add_term(Monomial::from_pairs([(Var::new(family, i), e)]), Q::one());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Largest total degree of any term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Q) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Drops every term of total degree greater than `d`.
    pub fn truncate(&self, d: u32) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The product, keeping only terms of total degree at most `bound` when given.
    pub fn mul_truncated(&self, other: &MultiPoly, bound: Option<u32>) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            let da = ma.degree();
            if bound.is_some_and(|d| da > d) {
                continue;
            }
            for (mb, cb) in &other.terms {
                if bound.is_some_and(|d| da + mb.degree() > d) {
                    continue;
                }
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        self.pow_truncated(e, None)
    }

    pub fn pow_truncated(&self, e: u32, bound: Option<u32>) -> MultiPoly {
        let mut out = MultiPoly::one();
        for _ in 0..e {
            out = out.mul_truncated(self, bound);
        }
        out
    }

    /// `1 + m + m² + ...` up to total degree `d`, for a monomial `m` of positive degree.
    pub fn geometric_series(m: &MultiPoly, d: u32) -> Result<MultiPoly> {
        let (mono, c) = m.single_term().ok_or(Error::NotAMonomial)?;
        if !c.is_one() {
            return Err(Error::NotAMonomial);
        }
        let step = mono.degree();
        if step == 0 {
            return Err(Error::ConstantSeries);
        }
        let mut out = MultiPoly::one();
        let mut cur = Monomial::one();
        while cur.degree() + step <= d {
            cur = cur.mul(mono);
            out.add_term(cur.clone(), Q::one());
        }
        Ok(out)
    }

    fn single_term(&self) -> Option<(&Monomial, &Q)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Simultaneous substitution; unbound variables pass through.
    pub fn substitute(&self, bindings: &BTreeMap<Var, MultiPoly>) -> MultiPoly {
        let mut powers: BTreeMap<(Var, u32), MultiPoly> = BTreeMap::new();
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut acc = MultiPoly::constant(c.clone());
            for &(v, e) in m.pairs() {
                match bindings.get(&v) {
                    None => kept.push((v, e)),
                    Some(image) => {
                        let pw = powers
                            .entry((v, e))
                            .or_insert_with(|| image.pow(e))
                            .clone();
                        acc = &acc * &pw;
                    }
                }
            }
            let rest = MultiPoly::monomial(Monomial(kept));
            out += &(&acc * &rest);
        }
        out
    }

    /// Applies a variable renaming. The map need not be injective; merged
    /// variables multiply.
    pub fn rename(&self, f: impl Fn(Var) -> Var) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(Monomial::from_pairs(m.pairs().iter().map(|&(v, e)| (f(v), e))), c.clone());
        }
        out
    }

    /// Moves every variable of family `from` to the same index in family `to`.
    pub fn rename_family(&self, from: Family, to: Family) -> MultiPoly {
        self.rename(|v| if v.family == from { Var::new(to, v.index) } else { v })
    }

    /// Exchanges two families.
    pub fn swap_families(&self, a: Family, b: Family) -> MultiPoly {
        self.rename(|v| {
            if v.family == a {
                Var::new(b, v.index)
            } else if v.family == b {
                Var::new(a, v.index)
            } else {
                v
            }
        })
    }

    /// True iff invariant under every adjacent transposition of `family_1..family_n`.
    pub fn is_symmetric_in(&self, family: Family, n: u32) -> bool {
        (1..n).all(|i| {
            let a = Var::new(family, i);
            let b = Var::new(family, i + 1);
            let swapped = self.rename(|v| if v == a { b } else if v == b { a } else { v });
            &swapped == self
        })
    }
}

impl fmt::Display for MultiPoly {
    /// Terms from largest to smallest in the monomial order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{}", format_q(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", format_q(&abs))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        self += &rhs;
        self
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.mul_truncated(rhs, None)
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    exponents: Vec<(String, u32)>,
    coeff: String,
}

impl Serialize for MultiPoly {
    /// Terms are written in the same order as the text rendering.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let records: Vec<TermRecord> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| TermRecord {
                exponents: m.pairs().iter().map(|(v, e)| (v.to_string(), *e)).collect(),
                coeff: format_q(c),
            })
            .collect();
        records.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let records = Vec::<TermRecord>::deserialize(d)?;
        let mut out = MultiPoly::zero();
        for r in records {
            let mut pairs = Vec::new();
            for (name, e) in r.exponents {
                pairs.push((name.parse::<Var>().map_err(D::Error::custom)?, e));
            }
            let c = parse_q(&r.coeff).map_err(D::Error::custom)?;
            out.add_term(Monomial::from_pairs(pairs), c);
        }
        Ok(out)
    }
}
