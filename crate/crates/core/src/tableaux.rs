//! Semistandard and (k,ℓ)-semistandard tableaux on straight and skew shapes,
//! Schur and hook Schur polynomials, and two explicit bijections on hook
//! shapes.
//!
//! The alphabet is `1 < 2 < ... < k < 1' < ... < ℓ'`. Unprimed letters may
//! repeat along rows but not down columns; primed letters may repeat down
//! columns but not along rows. Ordinary semistandard tableaux are the `ℓ = 0`
//! case.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{LazyLock, Mutex};

use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{in_hook, Partition, SkewShape};
use crate::polyring::{Family, Monomial, MultiPoly, Var, Q};

/// A tableau entry. Every unprimed letter sorts before every primed one.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Letter {
    Plain(u32),
    Primed(u32),
}

impl Letter {
    /// The variable this letter contributes to `x^T`.
    pub fn var(self) -> Var {
        match self {
            Letter::Plain(j) => Var::x(j),
            Letter::Primed(j) => Var::y(j),
        }
    }

    /// JSON encoding: `j` for an unprimed letter, `-j` for `j'`.
    pub fn code(self) -> i64 {
        match self {
            Letter::Plain(j) => j as i64,
            Letter::Primed(j) => -(j as i64),
        }
    }

    pub fn from_code(c: i64) -> Option<Letter> {
        match c {
            0 => None,
            c if c > 0 => Some(Letter::Plain(c as u32)),
            c => Some(Letter::Primed((-c) as u32)),
        }
    }

    fn is_primed(self) -> bool {
        matches!(self, Letter::Primed(_))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Plain(j) => write!(f, "{j}"),
            Letter::Primed(j) => write!(f, "{j}'"),
        }
    }
}

/// The alphabet `1..k` followed by `1'..ℓ'`.
pub fn alphabet(k: u32, l: u32) -> Vec<Letter> {
    (1..=k)
        .map(Letter::Plain)
        .chain((1..=l).map(Letter::Primed))
        .collect()
}

/// A filling of a skew shape. `rows[i]` holds the cells of row `i` from
/// column `inner_i` to `outer_i - 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct HookTableau {
    shape: SkewShape,
    rows: Vec<Vec<Letter>>,
}

impl HookTableau {
    /// Wraps a filling, checking only that the row lengths fit the shape.
    pub fn new(shape: SkewShape, rows: Vec<Vec<Letter>>) -> Result<Self> {
        let ok = rows.len() == shape.outer().len()
            && rows
                .iter()
                .enumerate()
                .all(|(i, r)| r.len() == shape.outer().part(i) - shape.inner().part(i));
        if !ok {
            return Err(Error::InvalidTableau(format!(
                "row lengths do not match shape {shape}"
            )));
        }
        Ok(HookTableau { shape, rows })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    /// Entry at `(i, j)` in diagram coordinates, if that cell is in the shape.
    pub fn get(&self, i: usize, j: usize) -> Option<Letter> {
        if !self.shape.has_cell(i, j) {
            return None;
        }
        Some(self.rows[i][j - self.shape.inner().part(i)])
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.rows.iter().flatten().copied()
    }

    /// `x^T`: unprimed `j` contributes `x_j`, primed `j'` contributes `y_j`.
    pub fn weight(&self) -> Monomial {
        Monomial::from_pairs(self.letters().map(|l| (l.var(), 1)))
    }

    /// Checks the (k,ℓ)-semistandard rules and that every letter is in the
    /// alphabet of `k` unprimed and `ℓ` primed symbols.
    pub fn is_semistandard(&self, k: u32, l: u32) -> bool {
        for (i, j) in self.shape.cells() {
            let v = self.get(i, j).unwrap();
            let in_alphabet = match v {
                Letter::Plain(a) => (1..=k).contains(&a),
                Letter::Primed(a) => (1..=l).contains(&a),
            };
            if !in_alphabet || !fits(v, self.left(i, j), self.up(i, j)) {
                return false;
            }
        }
        true
    }

    fn left(&self, i: usize, j: usize) -> Option<Letter> {
        j.checked_sub(1).and_then(|j| self.get(i, j))
    }

    fn up(&self, i: usize, j: usize) -> Option<Letter> {
        i.checked_sub(1).and_then(|i| self.get(i, j))
    }
}

/// Placement rule for `v` given its left and upper neighbours.
fn fits(v: Letter, left: Option<Letter>, up: Option<Letter>) -> bool {
    let row_ok = left.is_none_or(|l| if v.is_primed() { l < v } else { l <= v });
    let col_ok = up.is_none_or(|u| if v.is_primed() { u <= v } else { u < v });
    row_ok && col_ok
}

impl fmt::Display for HookTableau {
    /// Rows separated by ` / `, e.g. `1 1 1' / 1'`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

#[derive(Serialize, Deserialize)]
struct TableauRecord {
    shape: Partition,
    inner: Partition,
    rows: Vec<Vec<i64>>,
}

impl Serialize for HookTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauRecord {
            shape: self.shape.outer().clone(),
            inner: self.shape.inner().clone(),
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|l| l.code()).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HookTableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rec = TableauRecord::deserialize(d)?;
        let shape = SkewShape::new(rec.shape, rec.inner).map_err(D::Error::custom)?;
        let rows = rec
            .rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|c| Letter::from_code(c).ok_or_else(|| D::Error::custom("letter 0")))
                    .collect::<std::result::Result<Vec<_>, _>>()
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        HookTableau::new(shape, rows).map_err(D::Error::custom)
    }
}

/// All (k,ℓ)-semistandard fillings of `shape`, by row-major backtracking.
/// The output is in lexicographic order of the row-major reading.
pub fn enumerate_hook_ssyt(shape: &SkewShape, k: u32, l: u32) -> Vec<HookTableau> {
    let cells = shape.cells();
    let letters = alphabet(k, l);
    let mut grid: Vec<Vec<Option<Letter>>> = (0..shape.outer().len())
        .map(|i| vec![None; shape.outer().part(i)])
        .collect();
    let mut out = Vec::new();
    backtrack(shape, &cells, 0, &letters, &mut grid, &mut out);
    out
}

fn backtrack(
    shape: &SkewShape,
    cells: &[(usize, usize)],
    pos: usize,
    letters: &[Letter],
    grid: &mut Vec<Vec<Option<Letter>>>,
    out: &mut Vec<HookTableau>,
) {
    let Some(&(i, j)) = cells.get(pos) else {
        let rows = grid
            .iter()
            .enumerate()
            .map(|(r, row)| {
                row[shape.inner().part(r)..]
                    .iter()
                    .map(|c| c.expect("filled"))
                    .collect()
            })
            .collect();
        out.push(HookTableau {
            shape: shape.clone(),
            rows,
        });
        return;
    };
    let left = if j > 0 { grid[i][j - 1] } else { None };
    let up = if i > 0 && shape.has_cell(i - 1, j) { grid[i - 1][j] } else { None };
    for &v in letters {
        if fits(v, left, up) {
            grid[i][j] = Some(v);
            backtrack(shape, cells, pos + 1, letters, grid, out);
        }
    }
    grid[i][j] = None;
}

/// All ordinary semistandard fillings with letters `1..n`.
pub fn enumerate_ssyt(shape: &SkewShape, n: u32) -> Vec<HookTableau> {
    enumerate_hook_ssyt(shape, n, 0)
}

fn tableau_sum(tableaux: &[HookTableau]) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for t in tableaux {
        out.add_term(t.weight(), Q::one());
    }
    out
}

/// `Σ x^T` over the ordinary semistandard tableaux, by direct enumeration.
pub fn schur_poly_by_tableaux(shape: &SkewShape, n: u32) -> MultiPoly {
    tableau_sum(&enumerate_ssyt(shape, n))
}

/// `Σ x^T` over the (k,ℓ)-semistandard tableaux, by direct enumeration.
pub fn hook_schur_poly_by_tableaux(shape: &SkewShape, k: u32, l: u32) -> MultiPoly {
    tableau_sum(&enumerate_hook_ssyt(shape, k, l))
}

static SCHUR_CACHE: LazyLock<Mutex<HashMap<(SkewShape, u32), MultiPoly>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

type HookKey = (SkewShape, u32, u32);

static HOOK_CACHE: LazyLock<Mutex<HashMap<HookKey, MultiPoly>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// The skew Schur polynomial `s_shape(x_1, ..., x_n)`.
///
/// Tableaux are grouped by the horizontal strip occupied by the largest
/// letter, which gives the branching recursion
/// `s_{λ/μ}(x_1..x_n) = Σ_ν s_{ν/μ}(x_1..x_{n-1}) x_n^{|λ/ν|}`.
pub fn schur_poly(shape: &SkewShape, n: u32) -> MultiPoly {
    let key = (shape.clone(), n);
    if let Some(p) = SCHUR_CACHE.lock().unwrap().get(&key) {
        return p.clone();
    }
    let value = schur_branch(shape, n);
    SCHUR_CACHE.lock().unwrap().insert(key, value.clone());
    value
}

/// `schur_poly` with the variables placed in `family`.
pub fn schur_poly_in(shape: &SkewShape, family: Family, n: u32) -> MultiPoly {
    let p = schur_poly(shape, n);
    if family == Family::X {
        p
    } else {
        p.rename_family(Family::X, family)
    }
}

fn schur_branch(shape: &SkewShape, n: u32) -> MultiPoly {
    let (outer, inner) = (shape.outer(), shape.inner());
    if outer == inner {
        return MultiPoly::one();
    }
    // a column taller than n cannot be filled strictly
    let (oc, ic) = (outer.conjugate(), inner.conjugate());
    if (0..oc.len()).any(|j| oc.part(j) - ic.part(j) > n as usize) {
        return MultiPoly::zero();
    }
    let mut out = MultiPoly::zero();
    for nu in horizontal_strip_bases(outer, inner) {
        let strip = (outer.size() - nu.size()) as u32;
        let rest = schur_poly(&SkewShape::new(nu, inner.clone()).expect("nu contains inner"), n - 1);
        if rest.is_zero() {
            continue;
        }
        let xn = MultiPoly::monomial(Monomial::from_pairs([(Var::x(n), strip)]));
        out += &(&rest * &xn);
    }
    out
}

/// All `ν` with `inner ⊆ ν ⊆ outer` such that `outer/ν` is a horizontal strip.
fn horizontal_strip_bases(outer: &Partition, inner: &Partition) -> Vec<Partition> {
    let ranges: Vec<(usize, usize)> = (0..outer.len())
        .map(|i| (outer.part(i + 1).max(inner.part(i)), outer.part(i)))
        .collect();
    cartesian(&ranges)
}

fn cartesian(ranges: &[(usize, usize)]) -> Vec<Partition> {
    let mut out = vec![Vec::new()];
    for &(lo, hi) in ranges {
        let mut next = Vec::new();
        for prefix in &out {
            for v in lo..=hi {
                let mut p: Vec<usize> = prefix.clone();
                p.push(v);
                next.push(p);
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|parts| {
            let parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
            Partition::new(parts).expect("positive parts")
        })
        .collect()
}

/// All `μ` with `inner ⊆ μ ⊆ outer`.
pub fn intermediate_partitions(outer: &Partition, inner: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    intermediate_rec(outer, inner, 0, &mut cur, &mut out);
    out
}

fn intermediate_rec(
    outer: &Partition,
    inner: &Partition,
    row: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if row == outer.len() {
        let parts = cur.iter().copied().filter(|&p| p > 0).collect();
        out.push(Partition::new(parts).expect("positive parts"));
        return;
    }
    let hi = outer.part(row).min(cur.last().copied().unwrap_or(usize::MAX));
    for v in inner.part(row)..=hi {
        cur.push(v);
        intermediate_rec(outer, inner, row + 1, cur, out);
        cur.pop();
    }
}

/// The (skew) hook Schur polynomial `HS_shape(x_1..x_k; y_1..y_ℓ)`, computed
/// as `Σ_{ν ⊆ μ ⊆ λ} s_{μ/ν}(X) s_{(λ/μ)'}(Y)` for `shape = λ/ν`.
pub fn hook_schur_poly(shape: &SkewShape, k: u32, l: u32) -> MultiPoly {
    let key = (shape.clone(), k, l);
    if let Some(p) = HOOK_CACHE.lock().unwrap().get(&key) {
        return p.clone();
    }
    let (outer, inner) = (shape.outer(), shape.inner());
    let mut out = MultiPoly::zero();
    for mu in intermediate_partitions(outer, inner) {
        let xs = schur_poly(&SkewShape::new(mu.clone(), inner.clone()).unwrap(), k);
        if xs.is_zero() {
            continue;
        }
        let rest = SkewShape::new(outer.clone(), mu).unwrap().conjugate();
        let ys = schur_poly_in(&rest, Family::Y, l);
        if ys.is_zero() {
            continue;
        }
        out += &(&xs * &ys);
    }
    HOOK_CACHE.lock().unwrap().insert(key, out.clone());
    out
}

/// Hook shape `(a, 1^b)` tableau split into its corner, arm (rest of the
/// first row) and leg (rest of the first column).
struct HookParts {
    corner: Letter,
    arm: Vec<Letter>,
    leg: Vec<Letter>,
}

impl HookParts {
    fn of(t: &HookTableau) -> Result<Option<HookParts>> {
        let shape = t.shape();
        if !shape.is_straight() || !in_hook(shape.outer(), 1, 1) {
            return Err(Error::NotAHook(shape.to_string()));
        }
        if shape.outer().is_empty() {
            return Ok(None);
        }
        let rows = t.rows();
        Ok(Some(HookParts {
            corner: rows[0][0],
            arm: rows[0][1..].to_vec(),
            leg: rows[1..].iter().map(|r| r[0]).collect(),
        }))
    }

    fn into_tableau(mut self) -> HookTableau {
        self.arm.sort();
        self.leg.sort();
        let shape = SkewShape::straight(Partition::hook(self.arm.len() + 1, self.leg.len()));
        let mut rows = vec![std::iter::once(self.corner).chain(self.arm).collect::<Vec<_>>()];
        rows.extend(self.leg.into_iter().map(|l| vec![l]));
        HookTableau { shape, rows }
    }

    fn count(v: &[Letter], x: Letter) -> usize {
        v.iter().filter(|&&y| y == x).count()
    }

    /// Exchanges the arm and leg multiplicities of every letter selected by
    /// `moves`, relabelling through `relabel`.
    fn exchange(self, moves: impl Fn(Letter) -> bool, relabel: impl Fn(Letter) -> Letter) -> HookParts {
        let mut values: Vec<Letter> = self.arm.iter().chain(&self.leg).copied().collect();
        values.sort();
        values.dedup();
        let mut arm = Vec::new();
        let mut leg = Vec::new();
        for v in values {
            let (a, l) = (Self::count(&self.arm, v), Self::count(&self.leg, v));
            let (a, l) = if moves(v) { (l, a) } else { (a, l) };
            arm.extend(std::iter::repeat_n(relabel(v), a));
            leg.extend(std::iter::repeat_n(relabel(v), l));
        }
        HookParts {
            corner: relabel(self.corner),
            arm,
            leg,
        }
    }
}

/// Sends an ordinary semistandard tableau of hook shape with letters
/// `1..k+ℓ` to a (k,ℓ)-semistandard hook tableau of the same weight (after
/// renaming `x_{k+j}` to `y_j`). Letters greater than `k` have their first-row
/// and first-column multiplicities exchanged; the corner stays put.
pub fn h11_reflow(t: &HookTableau, k: u32) -> Result<HookTableau> {
    if t.letters().any(|l| l.is_primed()) {
        return Err(Error::InvalidTableau("expected an ordinary tableau".into()));
    }
    let Some(parts) = HookParts::of(t)? else {
        return Ok(t.clone());
    };
    let big = |l: Letter| matches!(l, Letter::Plain(j) if j > k);
    let relabel = |l: Letter| match l {
        Letter::Plain(j) if j > k => Letter::Primed(j - k),
        other => other,
    };
    Ok(parts.exchange(big, relabel).into_tableau())
}

/// Inverse of [`h11_reflow`].
pub fn h11_unreflow(t: &HookTableau, k: u32) -> Result<HookTableau> {
    let Some(parts) = HookParts::of(t)? else {
        return Ok(t.clone());
    };
    let relabel = |l: Letter| match l {
        Letter::Primed(j) => Letter::Plain(j + k),
        other => other,
    };
    Ok(parts.exchange(Letter::is_primed, relabel).into_tableau())
}

/// The sign-reversing involution on (k,ℓ)-semistandard hook tableaux that
/// use at least two distinct letters. One box moves between the first row
/// and the first column, so the shape height changes by exactly one and the
/// content is unchanged.
pub fn pn_involution(t: &HookTableau) -> Result<HookTableau> {
    let parts = HookParts::of(t)?.ok_or(Error::SingleLetter)?;
    let mut distinct: Vec<Letter> = t.letters().collect();
    distinct.sort();
    distinct.dedup();
    if distinct.len() < 2 {
        return Err(Error::SingleLetter);
    }
    let plain: Vec<Letter> = distinct.iter().copied().filter(|l| !l.is_primed()).collect();
    let primed: Vec<Letter> = distinct.iter().copied().filter(|l| l.is_primed()).collect();
    let HookParts { corner, mut arm, mut leg } = parts;
    // (letter, whether the column is the side it leaves when present there)
    let (letter, column_first) = if plain.len() >= 2 {
        (*plain.last().unwrap(), true)
    } else if primed.len() >= 2 {
        (*primed.last().unwrap(), false)
    } else {
        // exactly one unprimed i (the corner) and one primed j'
        (primed[0], false)
    };
    let (from_col, from_row) = (leg.contains(&letter), arm.contains(&letter));
    let move_to_row = if column_first { from_col } else { !from_row };
    if move_to_row {
        let pos = leg.iter().position(|&l| l == letter).unwrap();
        leg.remove(pos);
        arm.push(letter);
    } else {
        let pos = arm.iter().position(|&l| l == letter).unwrap();
        arm.remove(pos);
        leg.push(letter);
    }
    Ok(HookParts { corner, arm, leg }.into_tableau())
}

/// Groups tableaux by shape, for callers that need per-shape counts.
pub fn by_shape(tableaux: Vec<HookTableau>) -> BTreeMap<Partition, Vec<HookTableau>> {
    let mut out: BTreeMap<Partition, Vec<HookTableau>> = BTreeMap::new();
    for t in tableaux {
        out.entry(t.shape().outer().clone()).or_default().push(t);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{p, partitions_of};
    use crate::polyring::q;
    use std::collections::BTreeSet;

    fn straight(parts: &[usize]) -> SkewShape {
        SkewShape::straight(p(parts))
    }

    fn tab(parts: &[usize], rows: &[&[i64]]) -> HookTableau {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&c| Letter::from_code(c).unwrap()).collect())
            .collect();
        HookTableau::new(straight(parts), rows).unwrap()
    }

    fn x(i: u32) -> MultiPoly {
        MultiPoly::var(Var::x(i))
    }
    fn y(i: u32) -> MultiPoly {
        MultiPoly::var(Var::y(i))
    }

    #[test]
    fn ssyt_counts() {
        assert_eq!(enumerate_ssyt(&straight(&[1]), 4).len(), 4);
        assert_eq!(enumerate_ssyt(&straight(&[2, 1]), 3).len(), 8);
        let skew = SkewShape::new(p(&[2, 1]), p(&[1])).unwrap();
        assert_eq!(enumerate_ssyt(&skew, 2).len(), 4);
        assert_eq!(enumerate_ssyt(&straight(&[]), 3).len(), 1);
    }

    #[test]
    fn hook_ssyt_small_cases() {
        let row: Vec<String> = enumerate_hook_ssyt(&straight(&[2]), 1, 1)
            .iter()
            .map(|t| t.to_string())
            .collect();
        assert_eq!(row, vec!["1 1", "1 1'"]);
        let col: Vec<String> = enumerate_hook_ssyt(&straight(&[1, 1]), 1, 1)
            .iter()
            .map(|t| t.to_string())
            .collect();
        assert_eq!(col, vec!["1 / 1'", "1' / 1'"]);
    }

    #[test]
    fn figure_tableau_is_enumerated() {
        let fig = tab(
            &[5, 4, 2, 2, 1, 1],
            &[&[1, 1, 1, 2, -3], &[2, 2, -1, -2], &[-1, -2], &[-1, -2], &[-1], &[-2]],
        );
        assert!(fig.is_semistandard(2, 3));
        let w = Monomial::from_pairs([
            (Var::x(1), 3),
            (Var::x(2), 3),
            (Var::y(1), 4),
            (Var::y(2), 4),
            (Var::y(3), 1),
        ]);
        assert_eq!(fig.weight(), w);
        let all = enumerate_hook_ssyt(fig.shape(), 2, 3);
        assert!(all.contains(&fig));
        assert!(all.iter().all(|t| t.is_semistandard(2, 3)));
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        let all = enumerate_hook_ssyt(&straight(&[3, 2, 1]), 2, 2);
        let codes: Vec<Vec<i64>> = all
            .iter()
            .map(|t| {
                t.letters()
                    .map(|l| match l {
                        Letter::Plain(j) => j as i64,
                        Letter::Primed(j) => 100 + j as i64,
                    })
                    .collect()
            })
            .collect();
        assert!(codes.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|t| t.is_semistandard(2, 2)));
    }

    /// Brute force over every filling of the shape.
    #[test]
    fn enumeration_matches_exhaustive_filling() {
        for shape in [straight(&[2, 2]), straight(&[3, 1]), SkewShape::new(p(&[3, 2]), p(&[1])).unwrap()] {
            let letters = alphabet(2, 1);
            let cells = shape.cells();
            let mut count = 0;
            let total = letters.len().pow(cells.len() as u32);
            for mut code in 0..total {
                let mut rows: Vec<Vec<Letter>> = (0..shape.outer().len())
                    .map(|i| Vec::with_capacity(shape.outer().part(i)))
                    .collect();
                for &(i, _) in &cells {
                    rows[i].push(letters[code % letters.len()]);
                    code /= letters.len();
                }
                if HookTableau::new(shape.clone(), rows).unwrap().is_semistandard(2, 1) {
                    count += 1;
                }
            }
            assert_eq!(enumerate_hook_ssyt(&shape, 2, 1).len(), count, "{shape}");
        }
    }

    #[test]
    fn schur_polys() {
        for n in 1..=4 {
            let mut expect = MultiPoly::zero();
            for i in 1..=n {
                expect += &x(i);
            }
            assert_eq!(schur_poly(&straight(&[1]), n), expect);
        }
        assert!(schur_poly(&straight(&[2, 2]), 1).is_zero());
        assert_eq!(
            schur_poly(&straight(&[2]), 2),
            &x(1) * &x(1) + &x(1) * &x(2) + &x(2) * &x(2)
        );
        assert_eq!(schur_poly(&straight(&[]), 0), MultiPoly::one());
        assert!(schur_poly(&straight(&[1]), 0).is_zero());
    }

    #[test]
    fn branching_matches_tableau_sum() {
        for n in 0..=6 {
            for lambda in partitions_of(n) {
                for vars in 0..=3 {
                    let s = straight(lambda.parts());
                    assert_eq!(schur_poly(&s, vars), schur_poly_by_tableaux(&s, vars));
                    let x = schur_poly(&s, vars);
                    assert!(x.is_symmetric_in(Family::X, vars));
                }
                for mu in partitions_of(n.saturating_sub(2)) {
                    if let Ok(s) = SkewShape::new(lambda.clone(), mu) {
                        assert_eq!(schur_poly(&s, 3), schur_poly_by_tableaux(&s, 3), "{s}");
                    }
                }
            }
        }
    }

    #[test]
    fn hook_schur_examples() {
        assert_eq!(hook_schur_poly(&straight(&[2]), 1, 1), &x(1) * &x(1) + &x(1) * &y(1));
        assert!(hook_schur_poly(&straight(&[2, 2]), 1, 1).is_zero());
        for lambda in partitions_of(4) {
            let s = straight(lambda.parts());
            assert_eq!(hook_schur_poly(&s, 3, 0), schur_poly(&s, 3));
        }
    }

    #[test]
    fn hook_formula_matches_tableaux_on_skew_shapes() {
        for n in 2..=5 {
            for lambda in partitions_of(n) {
                for mu in partitions_of(n - 2) {
                    if let Ok(s) = SkewShape::new(lambda.clone(), mu) {
                        for (k, l) in [(1, 1), (2, 1), (1, 2)] {
                            assert_eq!(
                                hook_schur_poly(&s, k, l),
                                hook_schur_poly_by_tableaux(&s, k, l),
                                "{s} k={k} l={l}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn reflow_example() {
        let t = tab(&[2, 1], &[&[1, 2], &[2]]);
        let r = h11_reflow(&t, 1).unwrap();
        assert_eq!(r.to_string(), "1 1' / 1'");
        assert!(r.is_semistandard(1, 1));
        let w = Monomial::from_pairs([(Var::x(1), 1), (Var::y(1), 2)]);
        assert_eq!(r.weight(), w);
        // small letters only: unchanged
        let t = tab(&[3, 1], &[&[1, 1, 2], &[2]]);
        assert_eq!(h11_reflow(&t, 2).unwrap(), t);
        assert!(matches!(
            h11_reflow(&tab(&[2, 2], &[&[1, 1], &[2, 2]]), 1),
            Err(Error::NotAHook(_))
        ));
    }

    fn hook_shapes(n: usize) -> Vec<SkewShape> {
        (1..=n).map(|a| SkewShape::straight(Partition::hook(a, n - a))).collect()
    }

    #[test]
    fn reflow_is_a_weight_preserving_bijection() {
        let (k, l) = (2u32, 2u32);
        for n in 1..=6 {
            let mut images = BTreeSet::new();
            let mut sources = 0;
            for shape in hook_shapes(n) {
                for t in enumerate_ssyt(&shape, k + l) {
                    sources += 1;
                    let r = h11_reflow(&t, k).unwrap();
                    assert!(r.is_semistandard(k, l), "{t} -> {r}");
                    let renamed = MultiPoly::monomial(t.weight())
                        .rename(|v| if v.index > k { Var::y(v.index - k) } else { v });
                    assert_eq!(MultiPoly::monomial(r.weight()), renamed);
                    assert_eq!(h11_unreflow(&r, k).unwrap(), t);
                    images.insert(r.to_string());
                }
            }
            let targets: BTreeSet<String> = hook_shapes(n)
                .iter()
                .flat_map(|s| enumerate_hook_ssyt(s, k, l))
                .map(|t| t.to_string())
                .collect();
            assert_eq!(images.len(), sources);
            assert_eq!(images, targets);
        }
    }

    #[test]
    fn involution_example() {
        let t = tab(&[2], &[&[1, 2]]);
        assert_eq!(pn_involution(&t).unwrap(), tab(&[1, 1], &[&[1], &[2]]));
        assert_eq!(pn_involution(&tab(&[3], &[&[1, 1, 1]])), Err(Error::SingleLetter));
    }

    #[test]
    fn involution_properties_and_signed_sum() {
        let (k, l) = (2u32, 2u32);
        for n in 1..=5 {
            let mut fixed = MultiPoly::zero();
            for shape in hook_shapes(n) {
                for t in enumerate_hook_ssyt(&shape, k, l) {
                    match pn_involution(&t) {
                        Ok(s) => {
                            assert!(s.is_semistandard(k, l), "{t} -> {s}");
                            assert_eq!(s.weight(), t.weight());
                            assert_eq!(s.shape().outer().height().abs_diff(t.shape().outer().height()), 1);
                            assert_eq!(pn_involution(&s).unwrap(), t);
                        }
                        Err(Error::SingleLetter) => {
                            let sign = if t.shape().outer().height() % 2 == 0 { 1 } else { -1 };
                            fixed.add_term(t.weight(), q(sign));
                        }
                        Err(e) => panic!("{e}"),
                    }
                }
            }
            let mut signed = MultiPoly::zero();
            for shape in hook_shapes(n) {
                let h = shape.outer().height() as i64;
                signed += &hook_schur_poly(&shape, k, l).scale(&q(if h % 2 == 0 { 1 } else { -1 }));
            }
            let sign = if n % 2 == 1 { 1 } else { -1 };
            let expect = MultiPoly::power_sum(Family::X, k, n as u32)
                + MultiPoly::power_sum(Family::Y, l, n as u32).scale(&q(sign));
            assert_eq!(signed, expect);
            assert_eq!(fixed, expect);
        }
    }

    #[test]
    fn tableau_json() {
        let t = tab(&[2, 1], &[&[1, -1], &[-1]]);
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"shape":[2,1],"inner":[],"rows":[[1,-1],[-1]]}"#);
        assert_eq!(serde_json::from_str::<HookTableau>(&s).unwrap(), t);
        assert!(serde_json::from_str::<HookTableau>(r#"{"shape":[2],"inner":[],"rows":[[1]]}"#).is_err());
    }
}
