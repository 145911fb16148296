//! The doubling map `D(S_λ) = Σ_{μ⊆λ} S_μ S_{(λ/μ)'}` and the splitting of
//! the symmetric functions into doubly symmetric functions plus the ideal
//! generated by all `S_λ - S_{λ'}`.
//!
//! In the power-sum basis `D` is diagonal: it kills every `p_λ` with an even
//! part and multiplies `p_λ` with all parts odd by `2^{len(λ)}`. That is the
//! production path here; the Schur-side double sum is kept as
//! [`dmap_by_definition`].

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::partitions::{is_odd, partitions_where, z_aut, Partition};
use crate::polyring::{MultiPoly, Var, Q};
use crate::symring::{skew, Basis, SymFunc};
use crate::tableaux::intermediate_partitions;

/// `D(f)`, returned in `f`'s basis.
pub fn dmap(f: &SymFunc) -> Result<SymFunc> {
    let pf = f.to_power()?;
    let doubled = SymFunc::from_terms(
        Basis::Power,
        pf.terms()
            .filter(|(rho, _)| is_odd(rho))
            .map(|(rho, c)| (rho.clone(), c * Q::from_integer(BigInt::one() << rho.len()))),
    );
    doubled.to_basis(f.basis())
}

/// `D(f)` from the defining sum `Σ_λ m_λ Σ_{μ⊆λ} S_μ S_{λ'/μ'}`, in the Schur basis.
pub fn dmap_by_definition(f: &SymFunc) -> Result<SymFunc> {
    let sf = f.to_schur()?;
    let mut out = SymFunc::zero(Basis::Schur);
    for (lambda, c) in sf.terms() {
        let conj = lambda.conjugate();
        for mu in intermediate_partitions(lambda, &Partition::empty()) {
            let rest = skew(&conj, &mu.conjugate())?;
            let term = SymFunc::schur(mu).multiply(&rest)?;
            out = &out + &term.scale(c);
        }
    }
    Ok(out)
}

/// `k_n = Σ_{a+b=n, a≥1} S_{(a,1^b)}`; the sum is empty (zero) for `n = 0`.
pub fn k_fn(n: usize) -> SymFunc {
    SymFunc::from_terms(
        Basis::Schur,
        (1..=n).map(|a| (Partition::hook(a, n - a), Q::one())),
    )
}

/// `DS_λ = D(S_λ)` in the Schur basis.
pub fn doubly_schur(lambda: &Partition) -> Result<SymFunc> {
    dmap(&SymFunc::schur(lambda.clone()))
}

/// `D(h_m)`: `2 k_m` for `m ≥ 1`, `1` for `m = 0`, `0` for `m < 0`.
pub fn doubled_h(m: i64) -> SymFunc {
    match m {
        m if m < 0 => SymFunc::zero(Basis::Schur),
        0 => SymFunc::one(Basis::Schur),
        m => k_fn(m as usize).scale(&Q::from_integer(BigInt::from(2))),
    }
}

/// `det(entry(λ_i - i + j))` over the `len(λ) × len(λ)` Jacobi–Trudi matrix,
/// by cofactor expansion along the first row.
pub fn jacobi_trudi(lambda: &Partition, entry: impl Fn(i64) -> SymFunc) -> Result<SymFunc> {
    let n = lambda.len();
    let mut matrix = Vec::with_capacity(n);
    for i in 0..n {
        let row: Vec<SymFunc> = (0..n)
            .map(|j| entry(lambda.part(i) as i64 - i as i64 + j as i64))
            .collect();
        matrix.push(row);
    }
    let cols: Vec<usize> = (0..n).collect();
    let mut memo = BTreeMap::new();
    det(&matrix, 0, &cols, &mut memo)
}

fn det(
    m: &[Vec<SymFunc>],
    row: usize,
    cols: &[usize],
    memo: &mut BTreeMap<Vec<usize>, SymFunc>,
) -> Result<SymFunc> {
    if cols.is_empty() {
        return Ok(SymFunc::one(Basis::Schur));
    }
    if let Some(v) = memo.get(cols) {
        return Ok(v.clone());
    }
    let mut out = SymFunc::zero(Basis::Schur);
    for (pos, &c) in cols.iter().enumerate() {
        let a = &m[row][c];
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = det(m, row + 1, &rest, memo)?;
        if minor.is_zero() {
            continue;
        }
        let term = a.multiply(&minor)?;
        out = if pos % 2 == 0 { &out + &term } else { &out - &term };
    }
    memo.insert(cols.to_vec(), out.clone());
    Ok(out)
}

/// True iff the power-sum support is on odd partitions only.
pub fn is_doubly_symmetric(f: &SymFunc) -> Result<bool> {
    Ok(f.to_power()?.terms().all(|(rho, _)| is_odd(rho)))
}

/// Compares `f(x_1..x_k, y_1..y_ℓ)` with `ϝ(f)(x_1..x_k; y_1..y_ℓ)` for every
/// `0 ≤ k ≤ kmax`, `0 ≤ ℓ ≤ lmax`.
pub fn definitional_check(f: &SymFunc, kmax: u32, lmax: u32) -> Result<bool> {
    for k in 0..=kmax {
        for l in 0..=lmax {
            if definitional_mismatch(f, k, l)?.is_some() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Both sides of the defining identity at one split, when they differ.
pub fn definitional_mismatch(f: &SymFunc, k: u32, l: u32) -> Result<Option<(MultiPoly, MultiPoly)>> {
    let merged = f
        .evaluate(k + l)?
        .rename(|v| if v.index > k { Var::y(v.index - k) } else { v });
    let hook = f.wau_evaluate(k, l)?;
    Ok((merged != hook).then_some((merged, hook)))
}

/// The power-sum split of a symmetric function into its doubly symmetric
/// part (odd support) and its part in the ideal (support with an even part).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Decomposition {
    pub d_part: SymFunc,
    pub i_part: SymFunc,
}

pub fn project(f: &SymFunc) -> Result<Decomposition> {
    let pf = f.to_power()?;
    Ok(Decomposition {
        d_part: pf.restrict(is_odd),
        i_part: pf.restrict(|rho| !is_odd(rho)),
    })
}

pub fn in_ideal(f: &SymFunc) -> Result<bool> {
    Ok(project(f)?.d_part.is_zero())
}

/// Coefficient of `x^n` in `∏_{k≥0} (1 - x^{2k+1})^{-1}`.
pub fn dim_doubly(n: usize) -> u64 {
    let mut coeffs = vec![0u64; n + 1];
    coeffs[0] = 1;
    for part in (1..=n).step_by(2) {
        for s in part..=n {
            coeffs[s] += coeffs[s - part];
        }
    }
    coeffs[n]
}

/// Coefficient of `x^n` in `∏_{k≥1} (1 + x^k)`.
pub fn distinct_parts_count(n: usize) -> u64 {
    let mut coeffs = vec![0u64; n + 1];
    coeffs[0] = 1;
    for part in 1..=n {
        for s in (part..=n).rev() {
            coeffs[s] += coeffs[s - part];
        }
    }
    coeffs[n]
}

/// `k_n = Σ_{ρ ⊢ n odd} 2^{len(ρ)-1} z_ρ⁻¹ p_ρ`.
pub fn kn_power_expansion(n: usize) -> SymFunc {
    assert!(n >= 1, "k_n is defined for n >= 1");
    SymFunc::from_terms(
        Basis::Power,
        partitions_where(n, is_odd).into_iter().map(|rho| {
            let c = Q::new(BigInt::one() << (rho.len() - 1), BigInt::from(z_aut(&rho)));
            (rho, c)
        }),
    )
}

/// True iff `f(t, -t, x_3, ..., x_n)` does not involve `t`.
pub fn t_substitution_check(f: &SymFunc, n: u32) -> Result<bool> {
    Ok(t_substitution(f, n)?.degree_in(Var::T) == 0)
}

/// `f(t, -t, x_3, ..., x_n)`.
pub fn t_substitution(f: &SymFunc, n: u32) -> Result<MultiPoly> {
    assert!(n >= 2, "needs at least two variables");
    let t = MultiPoly::var(Var::T);
    let bindings: BTreeMap<Var, MultiPoly> = [(Var::x(1), t.clone()), (Var::x(2), -t)].into();
    Ok(f.evaluate(n)?.substitute(&bindings))
}

/// `Σ_{λ⊢n} f^λ DS_λ` in the Schur basis.
pub fn weighted_doubly_sum(n: usize) -> Result<SymFunc> {
    let mut out = SymFunc::zero(Basis::Schur);
    for lambda in crate::partitions::partitions_of(n) {
        let f = Q::from_integer(BigInt::from(crate::partitions::num_syt(&lambda)));
        out = &out + &doubly_schur(&lambda)?.scale(&f);
    }
    Ok(out)
}
