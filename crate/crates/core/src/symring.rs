//! The ring of symmetric functions over the rationals, in the Schur and
//! power-sum bases.
//!
//! Products are computed in the power-sum basis, where `p_λ p_μ` is the
//! power sum of the merged partition; conversions go through characters:
//! `S_λ = Σ_ρ z_ρ⁻¹ χ^λ(ρ) p_ρ` and `p_ρ = Σ_λ χ^λ(ρ) S_λ`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{character, in_hook, partitions_of, z_aut, Partition, SkewShape};
use crate::polyring::{format_q, parse_q, MultiPoly, Q};
use crate::tableaux::{hook_schur_poly, schur_poly};

pub const DEFAULT_DEGREE_CAP: usize = 24;

static DEGREE_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_DEGREE_CAP);

/// Largest degree accepted by conversions and products.
pub fn degree_cap() -> usize {
    DEGREE_CAP.load(Ordering::Relaxed)
}

pub fn set_degree_cap(cap: usize) {
    DEGREE_CAP.store(cap, Ordering::Relaxed);
}

pub fn check_degree(degree: usize) -> Result<()> {
    let cap = degree_cap();
    if degree > cap {
        Err(Error::DegreeCap { degree, cap })
    } else {
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Schur,
    Power,
}

/// A finite linear combination of basis elements with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, Q>,
}

fn z_q(rho: &Partition) -> Q {
    Q::from_integer(BigInt::from(z_aut(rho)))
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(basis: Basis) -> Self {
        Self::basis_element(basis, Partition::empty())
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, Q)>) -> Self {
        let mut out = Self::zero(basis);
        for (p, c) in terms {
            out.add_term(p, c);
        }
        out
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        Self::from_terms(basis, [(lambda, Q::one())])
    }

    /// `S_λ`.
    pub fn schur(lambda: Partition) -> Self {
        Self::basis_element(Basis::Schur, lambda)
    }

    /// `p_λ`.
    pub fn power(lambda: Partition) -> Self {
        Self::basis_element(Basis::Power, lambda)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> Q {
        self.terms.get(lambda).cloned().unwrap_or_else(Q::zero)
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

    pub fn add_term(&mut self, lambda: Partition, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Largest degree among the terms; 0 for the zero function.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Partition::size).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut sizes = self.terms.keys().map(Partition::size);
        match sizes.next() {
            None => true,
            Some(n) => sizes.all(|m| m == n),
        }
    }

    /// The degree-`n` component.
    pub fn component(&self, n: usize) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.size() == n)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    /// Keeps the terms whose partition satisfies `keep`.
    pub fn restrict(&self, keep: impl Fn(&Partition) -> bool) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| keep(p))
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.basis);
        }
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().map(|(p, a)| (p.clone(), a * c)).collect(),
        }
    }

    pub fn check_cap(&self) -> Result<()> {
        check_degree(self.degree())
    }

    pub fn to_power(&self) -> Result<SymFunc> {
        self.check_cap()?;
        Ok(self.in_basis(Basis::Power))
    }

    pub fn to_schur(&self) -> Result<SymFunc> {
        self.check_cap()?;
        Ok(self.in_basis(Basis::Schur))
    }

    pub fn to_basis(&self, basis: Basis) -> Result<SymFunc> {
        self.check_cap()?;
        Ok(self.in_basis(basis))
    }

    /// Conversion without the degree cap check.
    pub(crate) fn in_basis(&self, basis: Basis) -> SymFunc {
        if basis == self.basis {
            return self.clone();
        }
        let mut out = SymFunc::zero(basis);
        for (lambda, c) in &self.terms {
            for rho in partitions_of(lambda.size()) {
                let chi = match basis {
                    Basis::Power => character(lambda, &rho),
                    Basis::Schur => character(&rho, lambda),
                }
                .expect("same size");
                if chi == 0 {
                    continue;
                }
                let chi = Q::from_integer(BigInt::from(chi));
                match basis {
                    // coefficient of p_ρ in S_λ
                    Basis::Power => out.add_term(rho.clone(), c * chi / z_q(&rho)),
                    // coefficient of S_ρ in p_λ
                    Basis::Schur => out.add_term(rho.clone(), c * chi),
                }
            }
        }
        out
    }

    /// Exact product, returned in `self`'s basis.
    pub fn multiply(&self, other: &SymFunc) -> Result<SymFunc> {
        check_degree(self.degree() + other.degree())?;
        self.check_cap()?;
        other.check_cap()?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &SymFunc) -> SymFunc {
        let a = self.in_basis(Basis::Power);
        let b = other.in_basis(Basis::Power);
        let mut out = SymFunc::zero(Basis::Power);
        for (pa, ca) in &a.terms {
            for (pb, cb) in &b.terms {
                out.add_term(pa.union(pb), ca * cb);
            }
        }
        out.in_basis(self.basis)
    }

    /// `f^e` for `e ≥ 0`.
    pub fn pow(&self, e: u32) -> Result<SymFunc> {
        let mut out = SymFunc::one(self.basis);
        for _ in 0..e {
            out = out.multiply(self)?;
        }
        Ok(out)
    }

    /// Hall inner product computed in `self`'s basis.
    pub fn inner_product(&self, other: &SymFunc) -> Result<Q> {
        match self.basis {
            Basis::Schur => self.inner_product_schur(other),
            Basis::Power => self.inner_product_power(other),
        }
    }

    /// `Σ a_λ b_λ` over Schur coefficients.
    pub fn inner_product_schur(&self, other: &SymFunc) -> Result<Q> {
        let a = self.to_schur()?;
        let b = other.to_schur()?;
        Ok(a.terms
            .iter()
            .map(|(p, c)| c * b.coeff(p))
            .fold(Q::zero(), |s, x| s + x))
    }

    /// `Σ a_ρ b_ρ z_ρ` over power-sum coefficients.
    pub fn inner_product_power(&self, other: &SymFunc) -> Result<Q> {
        let a = self.to_power()?;
        let b = other.to_power()?;
        Ok(a.terms
            .iter()
            .map(|(p, c)| c * b.coeff(p) * z_q(p))
            .fold(Q::zero(), |s, x| s + x))
    }

    /// Kronecker (internal) product, diagonal in the power-sum basis:
    /// `p_ρ * p_σ = δ_{ρσ} z_ρ p_ρ`. Components of different degrees multiply
    /// to zero. Returned in `self`'s basis.
    pub fn internal_product(&self, other: &SymFunc) -> Result<SymFunc> {
        let a = self.to_power()?;
        let b = other.to_power()?;
        let mut out = SymFunc::zero(Basis::Power);
        for (rho, c) in &a.terms {
            let d = b.coeff(rho);
            if !d.is_zero() {
                out.add_term(rho.clone(), c * d * z_q(rho));
            }
        }
        Ok(out.in_basis(self.basis))
    }

    /// `f(x_1, ..., x_n)` via the Schur expansion.
    pub fn evaluate(&self, n: u32) -> Result<MultiPoly> {
        let s = self.to_schur()?;
        let mut out = MultiPoly::zero();
        for (lambda, c) in &s.terms {
            if lambda.len() > n as usize {
                continue;
            }
            out += &schur_poly(&SkewShape::straight(lambda.clone()), n).scale(c);
        }
        Ok(out)
    }

    /// `ϝ(f)(x_1..x_k; y_1..y_ℓ) = Σ m_λ HS_λ(X; Y)` for `f = Σ m_λ S_λ`.
    pub fn wau_evaluate(&self, k: u32, l: u32) -> Result<MultiPoly> {
        let s = self.to_schur()?;
        let mut out = MultiPoly::zero();
        for (lambda, c) in &s.terms {
            if !in_hook(lambda, k as usize, l as usize) {
                continue;
            }
            out += &hook_schur_poly(&SkewShape::straight(lambda.clone()), k, l).scale(c);
        }
        Ok(out)
    }

    /// Swaps each `S_λ` for `S_{λ'}` (the involution ω up to sign in the power basis).
    pub fn conjugate_schur(&self) -> Result<SymFunc> {
        let s = self.to_schur()?;
        Ok(SymFunc::from_terms(
            Basis::Schur,
            s.terms.iter().map(|(p, c)| (p.conjugate(), c.clone())),
        ))
    }
}

/// `C^λ_{μν} = ⟨S_μ S_ν, S_λ⟩`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigInt> {
    if mu.size() + nu.size() != lambda.size() {
        return Ok(BigInt::zero());
    }
    check_degree(lambda.size())?;
    let prod = SymFunc::schur(mu.clone()).mul_unchecked(&SymFunc::schur(nu.clone()));
    let c = prod.coeff(lambda);
    debug_assert!(c.is_integer());
    Ok(c.to_integer())
}

/// The skew Schur function `S_{λ/μ}` in the Schur basis.
///
/// Computed from `⟨S_{λ/μ}, p_σ⟩ = ⟨S_λ, S_μ p_σ⟩ = Σ_ρ z_ρ⁻¹ χ^μ(ρ) χ^λ(ρ ∪ σ)`.
pub fn skew(lambda: &Partition, mu: &Partition) -> Result<SymFunc> {
    if !lambda.contains(mu) {
        return Err(Error::NotContained {
            outer: lambda.clone(),
            inner: mu.clone(),
        });
    }
    check_degree(lambda.size())?;
    let mut out = SymFunc::zero(Basis::Power);
    let mu_classes: Vec<(Partition, Q)> = partitions_of(mu.size())
        .into_iter()
        .filter_map(|rho| {
            let chi = character(mu, &rho).unwrap();
            (chi != 0).then(|| {
                let w = Q::from_integer(BigInt::from(chi)) / z_q(&rho);
                (rho, w)
            })
        })
        .collect();
    for sigma in partitions_of(lambda.size() - mu.size()) {
        let mut pairing = Q::zero();
        for (rho, w) in &mu_classes {
            let chi = character(lambda, &rho.union(&sigma)).unwrap();
            if chi != 0 {
                pairing += w * Q::from_integer(BigInt::from(chi));
            }
        }
        out.add_term(sigma.clone(), pairing / z_q(&sigma));
    }
    Ok(out.in_basis(Basis::Schur))
}

impl fmt::Display for SymFunc {
    /// `3/2*S[2,1] - P[3]`; zero renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let sym = match self.basis {
            Basis::Schur => 'S',
            Basis::Power => 'P',
        };
        for (i, (lambda, c)) in self.terms.iter().enumerate() {
            let abs = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !abs.is_one() {
                write!(f, "{}*", format_q(&abs))?;
            }
            write!(f, "{sym}[{}]", lambda.text())?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc({self})")
    }
}

impl FromStr for SymFunc {
    type Err = Error;

    /// Parses sums of terms like `3/2*S[2,1] + P[3] - 2`. A bare number is a
    /// constant. The result takes the basis of the first basis term (Schur if
    /// none); other terms are converted into it.
    fn from_str(s: &str) -> Result<Self> {
        let mut parts: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut negative = false;
        let mut depth = 0;
        for ch in s.chars() {
            match ch {
                '[' => {
                    depth += 1;
                    cur.push(ch);
                }
                ']' => {
                    depth -= 1;
                    cur.push(ch);
                }
                '+' | '-' if depth == 0 => {
                    if cur.trim().is_empty() {
                        if ch == '-' {
                            negative = !negative;
                        }
                    } else {
                        parts.push((negative, std::mem::take(&mut cur)));
                        negative = ch == '-';
                    }
                }
                _ => cur.push(ch),
            }
        }
        if !cur.trim().is_empty() {
            parts.push((negative, cur));
        } else if !parts.is_empty() || s.trim().is_empty() {
            return Err(Error::Parse {
                token: s.trim().to_string(),
                reason: "expected a term".into(),
            });
        }
        let mut terms: Vec<(Option<Basis>, Partition, Q)> = Vec::new();
        for (neg, raw) in parts {
            let (basis, lambda, c) = parse_term(raw.trim())?;
            terms.push((basis, lambda, if neg { -c } else { c }));
        }
        let basis = terms.iter().find_map(|t| t.0).unwrap_or(Basis::Schur);
        let mut out = SymFunc::zero(basis);
        for (b, lambda, c) in terms {
            let term = SymFunc::from_terms(b.unwrap_or(basis), [(lambda, c)]);
            term.check_cap()?;
            out = &out + &term;
        }
        Ok(out)
    }
}

fn parse_term(raw: &str) -> Result<(Option<Basis>, Partition, Q)> {
    let (coeff, elem) = match raw.rsplit_once('*') {
        Some((c, e)) => (Some(c.trim()), e.trim()),
        None => (None, raw),
    };
    let basis = match elem.chars().next() {
        Some('S') | Some('s') => Some(Basis::Schur),
        Some('P') | Some('p') => Some(Basis::Power),
        _ => None,
    };
    let Some(basis) = basis else {
        if coeff.is_some() {
            return Err(Error::Parse {
                token: elem.to_string(),
                reason: "expected S[..] or P[..]".into(),
            });
        }
        return Ok((None, Partition::empty(), parse_q(elem)?));
    };
    let inner = elem[1..]
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Parse {
            token: elem.to_string(),
            reason: "expected brackets, as in S[2,1]".into(),
        })?;
    let lambda: Partition = inner.parse()?;
    let c = match coeff {
        Some(c) => parse_q(c)?,
        None => Q::one(),
    };
    Ok((Some(basis), lambda, c))
}

#[derive(Serialize, Deserialize)]
struct SymTerm {
    partition: Partition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SymRecord {
    basis: Basis,
    terms: Vec<SymTerm>,
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymRecord {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| SymTerm {
                    partition: p.clone(),
                    coeff: format_q(c),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rec = SymRecord::deserialize(d)?;
        let mut out = SymFunc::zero(rec.basis);
        for t in rec.terms {
            out.add_term(t.partition, parse_q(&t.coeff).map_err(D::Error::custom)?);
        }
        Ok(out)
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;
    /// The right operand is converted into the left operand's basis.
    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (p, c) in rhs.in_basis(self.basis).terms {
            out.add_term(p, c);
        }
        out
    }
}

impl Add for SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: SymFunc) -> SymFunc {
        &self + &rhs
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        self.scale(&-Q::one())
    }
}

impl Neg for SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        -&self
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self + &(-rhs)
    }
}

impl Sub for SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: SymFunc) -> SymFunc {
        &self - &rhs
    }
}

impl Mul<&Q> for &SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &Q) -> SymFunc {
        self.scale(rhs)
    }
}
