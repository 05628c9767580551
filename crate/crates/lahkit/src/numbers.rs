//! The five number triangles, computed exactly from their recurrences.
//!
//! All triangles are lower triangular with unit diagonal and are built row by
//! row; computed rows are memoized per `(kind, level)` behind a reader-writer
//! lock, so repeated queries and concurrent callers share the same work.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Exponent level `s >= 1` shared by every generalized family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Level(u32);

impl Level {
    /// The classical case `s = 1`.
    pub const ONE: Level = Level(1);

    /// Builds a level, rejecting `s = 0`.
    pub fn new(s: u32) -> Result<Level> {
        if s == 0 {
            Err(Error::InvalidLevel)
        } else {
            Ok(Level(s))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which triangle family a value belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    /// Stirling numbers of the first kind with higher level.
    StirlingFirstHl,
    /// Stirling numbers of the second kind with higher level.
    StirlingSecondHl,
    /// Lah numbers with higher level.
    LahHl,
    /// Lah numbers of order `s`.
    LahOrderS,
    /// `(s, r)`-Lah numbers: elements `1..=r` forced into distinct lists.
    LrLah { r: usize },
}

impl fmt::Display for TriangleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriangleKind::StirlingFirstHl => write!(f, "stirling1"),
            TriangleKind::StirlingSecondHl => write!(f, "stirling2"),
            TriangleKind::LahHl => write!(f, "hlah"),
            TriangleKind::LahOrderS => write!(f, "olah"),
            TriangleKind::LrLah { r } => write!(f, "lrlah(r={r})"),
        }
    }
}

/// Rows `0..=nmax` of one triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleTable {
    kind: TriangleKind,
    level: Level,
    rows: Vec<Vec<BigUint>>,
}

impl TriangleTable {
    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    pub fn level(&self) -> Level {
        self.level
    }

    /// Stored rows; row `n` holds entries `k = 0..=n`.
    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.rows
    }

    /// Entry `(n, k)`, zero above the diagonal.
    pub fn entry(&self, n: usize, k: usize) -> BigUint {
        if k > n {
            return BigUint::zero();
        }
        self.rows[n][k].clone()
    }
}

/// `base^exp` with the conventions `x^0 = 1` (including `0^0 = 1`) and
/// `0^s = 0` for `s >= 1`.
pub(crate) fn power(base: u64, exp: u32) -> BigUint {
    num_traits::pow(BigUint::from(base), exp as usize)
}

/// Row 0 of a triangle. Everything starts at 1 except the restricted Lah
/// triangles with `r >= 2`, whose rows below the seed row are zero.
fn row_zero(kind: TriangleKind) -> Vec<BigUint> {
    match kind {
        TriangleKind::LrLah { r } if r >= 2 => vec![BigUint::zero()],
        _ => vec![BigUint::one()],
    }
}

/// Computes row `n >= 1` from row `n - 1`.
fn next_row(kind: TriangleKind, s: u32, n: usize, prev: &[BigUint]) -> Vec<BigUint> {
    debug_assert_eq!(prev.len(), n);
    if let TriangleKind::LrLah { r } = kind {
        if r >= 2 && n < r {
            return vec![BigUint::zero(); n + 1];
        }
        if r >= 2 && n == r {
            // Seed row: elements 1..=r occupy r distinct singleton lists.
            let mut row = vec![BigUint::zero(); n + 1];
            row[n] = BigUint::one();
            return row;
        }
    }
    let mut row = Vec::with_capacity(n + 1);
    row.push(BigUint::zero());
    for k in 1..=n {
        let coefficient = match kind {
            TriangleKind::StirlingFirstHl => power((n - 1) as u64, s),
            TriangleKind::StirlingSecondHl => power(k as u64, s),
            TriangleKind::LahHl | TriangleKind::LrLah { .. } => power((n + k - 1) as u64, s),
            TriangleKind::LahOrderS => power((n - 1) as u64, s) + power(k as u64, s),
        };
        let carried = if k < prev.len() {
            coefficient * &prev[k]
        } else {
            BigUint::zero()
        };
        row.push(&prev[k - 1] + carried);
    }
    row
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct CacheKey {
    kind: TriangleKind,
    s: u32,
}

fn cache() -> &'static RwLock<HashMap<CacheKey, Vec<Vec<BigUint>>>> {
    static CACHE: OnceLock<RwLock<HashMap<CacheKey, Vec<Vec<BigUint>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Runs `f` on rows `0..=n` of the requested triangle, extending the shared
/// cache first if needed. Rows are only ever appended, in order.
fn with_rows<T>(kind: TriangleKind, level: Level, n: usize, f: impl FnOnce(&[Vec<BigUint>]) -> T) -> T {
    let key = CacheKey {
        kind,
        s: level.get(),
    };
    {
        let map = cache().read().unwrap();
        if let Some(rows) = map.get(&key) {
            if rows.len() > n {
                return f(rows);
            }
        }
    }
    let mut map = cache().write().unwrap();
    let rows = map.entry(key).or_insert_with(|| vec![row_zero(kind)]);
    while rows.len() <= n {
        let row = next_row(kind, key.s, rows.len(), rows.last().unwrap());
        rows.push(row);
    }
    f(rows)
}

/// Single cached entry `(n, k)` of a triangle; zero above the diagonal.
pub fn triangle_entry(kind: TriangleKind, n: usize, k: usize, s: Level) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    with_rows(kind, s, n, |rows| rows[n][k].clone())
}

/// Stirling number of the first kind with higher level.
pub fn stirling1_hl(n: usize, k: usize, s: Level) -> BigUint {
    triangle_entry(TriangleKind::StirlingFirstHl, n, k, s)
}

/// Stirling number of the second kind with higher level.
pub fn stirling2_hl(n: usize, k: usize, s: Level) -> BigUint {
    triangle_entry(TriangleKind::StirlingSecondHl, n, k, s)
}

/// Lah number with higher level.
pub fn lah_higher_level(n: usize, k: usize, s: Level) -> BigUint {
    triangle_entry(TriangleKind::LahHl, n, k, s)
}

/// Lah number of order `s`.
pub fn lah_order(n: usize, k: usize, s: Level) -> BigUint {
    triangle_entry(TriangleKind::LahOrderS, n, k, s)
}

/// `(s, r)`-Lah number. For `r <= 1` the restriction is vacuous and the value
/// equals [`lah_higher_level`]; for `r >= 2` the triangle is seeded at row
/// `n = r` and rows below it are zero.
pub fn lr_lah(n: usize, k: usize, s: Level, r: usize) -> BigUint {
    triangle_entry(TriangleKind::LrLah { r }, n, k, s)
}

/// Lah number of order `s` recomputed from its defining sum over the two
/// Stirling triangles. Must agree with [`lah_order`].
pub fn lah_order_via_stirling(n: usize, k: usize, s: Level) -> BigUint {
    let mut total = BigUint::zero();
    for j in k..=n {
        total += stirling1_hl(n, j, s) * stirling2_hl(j, k, s);
    }
    total
}

/// Sum over increasing tuples `lo <= j_1 < ... < j_m <= n`, `m = n - k`, of
/// the products `prod_i (2 j_i - (i + 1))^s`. A zero factor prunes the whole
/// branch: every extension of the tuple contributes zero.
fn explicit_tuple_sum(n: usize, k: usize, s: u32, lo: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let len = n - k;
    fn descend(
        pos: usize,
        len: usize,
        lo: usize,
        n: usize,
        s: u32,
        partial: &BigUint,
        total: &mut BigUint,
    ) {
        if pos == len {
            *total += partial;
            return;
        }
        for j in lo..=(n - (len - pos - 1)) {
            // 1-based factor index is pos + 1, so the offset is pos + 2.
            let base = 2 * j - (pos + 2);
            if base == 0 {
                continue;
            }
            let next = partial * power(base as u64, s);
            descend(pos + 1, len, j + 1, n, s, &next, total);
        }
    }
    let mut total = BigUint::zero();
    descend(0, len, lo, n, s, &BigUint::one(), &mut total);
    total
}

/// Lah number with higher level via the explicit tuple-product formula.
/// Equals [`lah_higher_level`]; `k > n` returns 0 by convention.
pub fn lah_hl_explicit(n: usize, k: usize, s: Level) -> BigUint {
    explicit_tuple_sum(n, k, s.get(), 1)
}

/// `(s, r)`-Lah number via the explicit formula, with tuples starting at
/// `r + 1`. Used to cross-check the seeded recurrence.
#[cfg(test)]
fn lr_lah_explicit(n: usize, k: usize, s: Level, r: usize) -> BigUint {
    if k > n || k < r {
        return BigUint::zero();
    }
    explicit_tuple_sum(n, k, s.get(), r + 1)
}

/// Signed variant `(-1)^(n + k)` times the unsigned value. Defined for the
/// two Stirling families and the Lah numbers of order `s` only.
pub fn signed_value(kind: TriangleKind, n: usize, k: usize, s: Level) -> Result<BigInt> {
    match kind {
        TriangleKind::StirlingFirstHl
        | TriangleKind::StirlingSecondHl
        | TriangleKind::LahOrderS => {
            let magnitude = triangle_entry(kind, n, k, s);
            let sign = if (n + k) % 2 == 0 { Sign::Plus } else { Sign::Minus };
            Ok(if magnitude.is_zero() {
                BigInt::zero()
            } else {
                BigInt::from_biguint(sign, magnitude)
            })
        }
        _ => Err(Error::UnsupportedKind {
            op: "signed_value",
            kind,
        }),
    }
}

/// Which closed-form column to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormCase {
    /// Column `k = 1`.
    KOne,
    /// Superdiagonal `k = n - 1`.
    KNMinusOne,
}

/// Closed forms for the `k = 1` column and the `k = n - 1` superdiagonal of
/// the two Lah triangles (`n >= 1`):
///
/// - `LahHl`, `k = 1`: `(n!)^s`
/// - `LahHl`, `k = n - 1`: `2^s * sum_(j=1..n-1) j^s`
/// - `LahOrderS`, `k = 1`: `prod_(i=1..n) ((n - i)^s + 1)`
/// - `LahOrderS`, `k = n - 1`: `sum_(j=1..n-1) 2 j^s`
pub fn closed_form(kind: TriangleKind, case: ClosedFormCase, n: usize, s: Level) -> Result<BigUint> {
    let s = s.get();
    match (kind, case) {
        (TriangleKind::LahHl, ClosedFormCase::KOne) => {
            let mut factorial = BigUint::one();
            for i in 2..=n.max(1) {
                factorial *= BigUint::from(i);
            }
            Ok(num_traits::pow(factorial, s as usize))
        }
        (TriangleKind::LahHl, ClosedFormCase::KNMinusOne) => {
            let mut sum = BigUint::zero();
            for j in 1..n {
                sum += power(j as u64, s);
            }
            Ok(power(2, s) * sum)
        }
        (TriangleKind::LahOrderS, ClosedFormCase::KOne) => {
            let mut product = BigUint::one();
            for i in 1..=n {
                product *= power((n - i) as u64, s) + BigUint::one();
            }
            Ok(product)
        }
        (TriangleKind::LahOrderS, ClosedFormCase::KNMinusOne) => {
            let mut sum = BigUint::zero();
            for j in 1..n {
                sum += BigUint::from(2u32) * power(j as u64, s);
            }
            Ok(sum)
        }
        _ => Err(Error::UnsupportedKind {
            op: "closed_form",
            kind,
        }),
    }
}

/// All rows `0..=nmax` of a triangle.
pub fn triangle(kind: TriangleKind, s: Level, nmax: usize) -> TriangleTable {
    let rows = with_rows(kind, s, nmax, |rows| rows[..=nmax].to_vec());
    TriangleTable {
        kind,
        level: s,
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lvl(s: u32) -> Level {
        Level::new(s).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn level_rejects_zero() {
        assert_eq!(Level::new(0), Err(Error::InvalidLevel));
        assert_eq!(Level::new(1).unwrap().get(), 1);
    }

    #[test]
    fn stirling_first_values() {
        assert_eq!(stirling1_hl(5, 5, lvl(3)), big(1));
        assert_eq!(stirling1_hl(3, 0, lvl(2)), big(0));
        assert_eq!(stirling1_hl(3, 2, lvl(2)), big(5));
        assert_eq!(stirling1_hl(4, 3, lvl(2)), big(14));
        assert_eq!(stirling1_hl(2, 5, lvl(2)), big(0));
    }

    #[test]
    fn stirling_second_values() {
        assert_eq!(stirling2_hl(0, 0, lvl(4)), big(1));
        assert_eq!(stirling2_hl(3, 2, lvl(2)), big(5));
        assert_eq!(stirling2_hl(4, 3, lvl(2)), big(14));
    }

    #[test]
    fn lah_higher_level_values() {
        assert_eq!(lah_higher_level(4, 3, lvl(2)), big(56));
        assert_eq!(lah_higher_level(4, 2, lvl(2)), big(536));
        assert_eq!(lah_higher_level(5, 2, lvl(3)), big(2004480));
        assert_eq!(lah_higher_level(3, 2, lvl(4)), big(272));
        assert_eq!(lah_higher_level(7, 7, lvl(9)), big(1));
    }

    #[test]
    fn lah_higher_level_grows_without_truncation() {
        let expected = "12793287638873373780319124433790833727169139966926481069803446896427008000";
        assert_eq!(lah_higher_level(6, 2, lvl(25)).to_string(), expected);
    }

    #[test]
    fn lah_order_values() {
        assert_eq!(lah_order(4, 3, lvl(2)), big(28));
        assert_eq!(lah_order(4, 2, lvl(2)), big(140));
        assert_eq!(lah_order(6, 2, lvl(3)), big(6305040));
        assert_eq!(lah_order(5, 2, lvl(4)), big(909092));
        assert_eq!(lah_order(0, 0, lvl(7)), big(1));
        let expected = "19080000046878387911728136488155674014369724428110000";
        assert_eq!(lah_order(6, 2, lvl(25)).to_string(), expected);
    }

    #[test]
    fn lah_order_matches_stirling_product() {
        assert_eq!(lah_order_via_stirling(4, 3, lvl(2)), big(28));
        assert_eq!(lah_order_via_stirling(3, 2, lvl(2)), big(10));
        assert_eq!(lah_order_via_stirling(5, 5, lvl(3)), big(1));
        for s in 1..=4 {
            for n in 0..=10 {
                for k in 0..=n {
                    assert_eq!(
                        lah_order(n, k, lvl(s)),
                        lah_order_via_stirling(n, k, lvl(s)),
                        "n={n} k={k} s={s}"
                    );
                }
            }
        }
    }

    #[test]
    fn lr_lah_values() {
        assert_eq!(lr_lah(4, 3, lvl(2), 1), big(56));
        for (s, r) in [(1, 0), (2, 1), (3, 2), (1, 3), (2, 4)] {
            assert_eq!(lr_lah(r, r, lvl(s), r), big(1), "base row r={r} s={s}");
        }
        assert_eq!(lr_lah(3, 2, lvl(1), 2), big(4));
    }

    #[test]
    fn lr_lah_reduces_to_higher_level_for_small_r() {
        for s in 1..=3 {
            for r in 0..=1 {
                for n in 0..=8 {
                    for k in 0..=n {
                        assert_eq!(
                            lr_lah(n, k, lvl(s), r),
                            lah_higher_level(n, k, lvl(s)),
                            "n={n} k={k} s={s} r={r}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn lr_lah_matches_explicit_formula() {
        for r in 0..=3 {
            for s in 1..=2 {
                for n in 0..=7 {
                    for k in r..=n {
                        assert_eq!(
                            lr_lah(n, k, lvl(s), r),
                            lr_lah_explicit(n, k, lvl(s), r),
                            "n={n} k={k} s={s} r={r}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn lr_lah_zero_below_seed_row() {
        for n in 0..3 {
            for k in 0..=n {
                assert_eq!(lr_lah(n, k, lvl(2), 3), big(0), "n={n} k={k}");
            }
        }
        assert_eq!(lr_lah(4, 2, lvl(2), 3), big(0));
        assert_eq!(lr_lah(3, 3, lvl(2), 3), big(1));
    }

    #[test]
    fn explicit_formula_values() {
        assert_eq!(lah_hl_explicit(2, 1, lvl(2)), big(4));
        assert_eq!(lah_hl_explicit(5, 5, lvl(3)), big(1));
        assert_eq!(lah_hl_explicit(4, 3, lvl(2)), big(56));
        assert_eq!(lah_hl_explicit(3, 5, lvl(2)), big(0));
    }

    #[test]
    fn explicit_formula_matches_recurrence() {
        for s in 1..=3 {
            for n in 0..=8 {
                for k in 0..=n {
                    assert_eq!(
                        lah_hl_explicit(n, k, lvl(s)),
                        lah_higher_level(n, k, lvl(s)),
                        "n={n} k={k} s={s}"
                    );
                }
            }
        }
    }

    #[test]
    fn signed_values() {
        assert_eq!(
            signed_value(TriangleKind::LahOrderS, 4, 3, lvl(2)).unwrap(),
            BigInt::from(-28)
        );
        assert_eq!(
            signed_value(TriangleKind::StirlingFirstHl, 6, 6, lvl(5)).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            signed_value(TriangleKind::StirlingSecondHl, 3, 2, lvl(2)).unwrap(),
            BigInt::from(-5)
        );
        assert!(matches!(
            signed_value(TriangleKind::LahHl, 2, 1, lvl(1)),
            Err(Error::UnsupportedKind { .. })
        ));
        assert!(matches!(
            signed_value(TriangleKind::LrLah { r: 2 }, 2, 2, lvl(1)),
            Err(Error::UnsupportedKind { .. })
        ));
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(
            closed_form(TriangleKind::LahOrderS, ClosedFormCase::KOne, 4, lvl(2)).unwrap(),
            big(100)
        );
        assert_eq!(
            closed_form(TriangleKind::LahHl, ClosedFormCase::KOne, 6, lvl(3)).unwrap(),
            big(373248000)
        );
        assert_eq!(
            closed_form(TriangleKind::LahOrderS, ClosedFormCase::KNMinusOne, 3, lvl(2)).unwrap(),
            big(10)
        );
        assert_eq!(
            closed_form(TriangleKind::LahHl, ClosedFormCase::KNMinusOne, 2, lvl(1)).unwrap(),
            big(2)
        );
        assert!(matches!(
            closed_form(TriangleKind::StirlingFirstHl, ClosedFormCase::KOne, 3, lvl(1)),
            Err(Error::UnsupportedKind { .. })
        ));
    }

    #[test]
    fn triangle_rows_match_per_cell_queries() {
        let table = triangle(TriangleKind::LahHl, lvl(2), 6);
        assert_eq!(table.rows().len(), 7);
        assert_eq!(table.rows()[4], vec![big(0), big(576), big(536), big(56), big(1)]);
        assert_eq!(table.rows()[6][2], big(988128));
        for n in 0..=6 {
            for k in 0..=n {
                assert_eq!(table.entry(n, k), lah_higher_level(n, k, lvl(2)));
            }
        }
        assert_eq!(table.entry(2, 5), big(0));
    }

    #[test]
    fn triangle_order_s_matches_reference_rows() {
        let table = triangle(TriangleKind::LahOrderS, lvl(4), 6);
        assert_eq!(
            table.rows()[5],
            vec![big(0), big(716516), big(909092), big(69384), big(708), big(1)]
        );
    }

    #[test]
    fn triangle_single_row() {
        for kind in [
            TriangleKind::StirlingFirstHl,
            TriangleKind::StirlingSecondHl,
            TriangleKind::LahHl,
            TriangleKind::LahOrderS,
            TriangleKind::LrLah { r: 0 },
        ] {
            let table = triangle(kind, lvl(3), 0);
            assert_eq!(table.rows(), &[vec![big(1)]]);
        }
    }

    #[test]
    fn lr_triangle_shape() {
        let table = triangle(TriangleKind::LrLah { r: 2 }, lvl(2), 5);
        assert_eq!(table.rows()[0], vec![big(0)]);
        assert_eq!(table.rows()[1], vec![big(0), big(0)]);
        assert_eq!(table.rows()[2], vec![big(0), big(0), big(1)]);
        for n in 2..=5 {
            assert_eq!(table.entry(n, n), big(1));
            assert_eq!(table.entry(n, 1), big(0));
        }
    }

    #[test]
    fn unsigned_triangles_are_unitriangular() {
        for s in 1..=5 {
            for kind in [
                TriangleKind::StirlingFirstHl,
                TriangleKind::StirlingSecondHl,
                TriangleKind::LahHl,
                TriangleKind::LahOrderS,
            ] {
                let table = triangle(kind, lvl(s), 8);
                for n in 0..=8 {
                    assert_eq!(table.entry(n, n), big(1), "{kind} s={s} n={n}");
                    if n > 0 {
                        assert_eq!(table.entry(n, 0), big(0), "{kind} s={s} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn inequality_chain_holds() {
        for s in 1..=5 {
            for n in 1..=10 {
                for k in 1..=n {
                    let hlah = lah_higher_level(n, k, lvl(s));
                    let olah = lah_order(n, k, lvl(s));
                    let s1 = stirling1_hl(n, k, lvl(s));
                    let s2 = stirling2_hl(n, k, lvl(s));
                    assert!(hlah >= olah, "n={n} k={k} s={s}");
                    assert!(olah >= s1, "n={n} k={k} s={s}");
                    assert!(s1 >= s2, "n={n} k={k} s={s}");
                }
            }
        }
    }

    #[test]
    fn superdiagonal_ratio() {
        for s in 1..=6 {
            for n in 2..=12 {
                assert_eq!(
                    power(2, s - 1) * lah_order(n, n - 1, lvl(s)),
                    lah_higher_level(n, n - 1, lvl(s)),
                    "n={n} s={s}"
                );
            }
        }
    }

    #[test]
    fn level_one_collapses_to_classical_lah() {
        for n in 0..=10usize {
            for k in 0..=n {
                let expected = if k == 0 {
                    if n == 0 {
                        big(1)
                    } else {
                        big(0)
                    }
                } else {
                    let binom = num_integer::binomial(BigUint::from(n - 1), BigUint::from(k - 1));
                    let mut ratio = BigUint::one();
                    for i in (k + 1)..=n {
                        ratio *= BigUint::from(i);
                    }
                    binom * ratio
                };
                assert_eq!(lah_higher_level(n, k, Level::ONE), expected, "n={n} k={k}");
                assert_eq!(lah_order(n, k, Level::ONE), expected, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn concurrent_queries_agree_with_sequential() {
        let sequential: Vec<BigUint> = (0..=9)
            .map(|n| lah_higher_level(n, n / 2, lvl(7)))
            .collect();
        let handles: Vec<_> = (0..8)
            .map(|_| {
                std::thread::spawn(|| {
                    (0..=9)
                        .map(|n| lah_higher_level(n, n / 2, Level::new(7).unwrap()))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for handle in handles {
            assert_eq!(handle.join().unwrap(), sequential);
        }
    }
}
