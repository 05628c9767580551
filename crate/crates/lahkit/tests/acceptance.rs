//! Acceptance suite: every release criterion as one exact, timed check.
//!
//! Run with `cargo test -p lahkit --test acceptance -- --nocapture` to see a
//! PASS line per criterion. All comparisons are exact integer comparisons.

use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use lahkit::numbers::{
    self, closed_form, lah_higher_level, lah_order, lah_order_via_stirling, lr_lah, signed_value,
    stirling1_hl, stirling2_hl, triangle, ClosedFormCase, Level, TriangleKind,
};
use lahkit::oracle::{enumerate_profiles, oracle_count, BlockWeighting};
use lahkit::poly::{
    a_poly, b_poly, convert, eval, lah_order_poly, lah_order_poly_step, q_poly, q_step,
    row_poly_hl, row_poly_hl_step, transition_matrix, BasisTag, Polynomial, PolyForm,
    TransitionMatrix,
};

fn lvl(s: u32) -> Level {
    Level::new(s).unwrap()
}

fn assert_within(elapsed: Duration, bound: Duration, what: &str) {
    assert!(
        elapsed <= bound,
        "{what} took {elapsed:?}, bound is {bound:?}"
    );
}

fn parse_golden(name: &str) -> Vec<Vec<BigUint>> {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("read {path}: {e}"));
    text.lines()
        .map(|line| {
            line.split('\t')
                .map(|cell| cell.parse::<BigUint>().expect("decimal entry"))
                .collect()
        })
        .collect()
}

#[test]
fn criterion_1_table_reproduction() {
    let start = Instant::now();
    let mut entries = 0usize;
    for (kind, tag) in [(TriangleKind::LahHl, "hlah"), (TriangleKind::LahOrderS, "olah")] {
        for s in 2..=4u32 {
            let golden = parse_golden(&format!("{tag}_s{s}.tsv"));
            let table = triangle(kind, lvl(s), 6);
            assert_eq!(golden.len(), 7);
            for (n, row) in golden.iter().enumerate() {
                assert_eq!(
                    table.rows()[n],
                    *row,
                    "{tag} s={s} row {n} differs from the reference table"
                );
                entries += row.len();
            }
        }
    }
    assert_eq!(entries, 168, "six 28-entry triangles");
    let elapsed = start.elapsed();
    assert_within(elapsed, Duration::from_secs(1), "table reproduction");
    println!("acceptance 1 PASS: six reference tables reproduced entrywise ({entries} entries, {elapsed:?})");
}

#[test]
fn criterion_2_mega_values() {
    let start = Instant::now();
    let hlah = lah_higher_level(6, 2, lvl(25)).to_string();
    let olah = lah_order(6, 2, lvl(25)).to_string();
    assert_eq!(
        hlah,
        "12793287638873373780319124433790833727169139966926481069803446896427008000"
    );
    assert_eq!(hlah.len(), 74);
    assert_eq!(
        olah,
        "19080000046878387911728136488155674014369724428110000"
    );
    assert_eq!(olah.len(), 53);
    let elapsed = start.elapsed();
    assert_within(elapsed, Duration::from_secs(1), "level-25 values");
    println!("acceptance 2 PASS: level-25 74- and 53-digit values byte-exact ({elapsed:?})");
}

#[test]
fn criterion_3_worked_examples() {
    assert_eq!(lah_higher_level(4, 3, lvl(2)), BigUint::from(56u32));
    assert_eq!(lah_order(4, 3, lvl(2)), BigUint::from(28u32));
    assert_eq!(lah_order_via_stirling(4, 3, lvl(2)), BigUint::from(28u32));

    let profile = enumerate_profiles(4, 3, BlockWeighting::Lists, 0).unwrap();
    assert_eq!(profile.entries().len(), 3);
    assert_eq!(profile.weight(&[1, 2, 3]), BigUint::from(6u32));
    assert_eq!(profile.weight(&[1, 2, 4]), BigUint::from(4u32));
    assert_eq!(profile.weight(&[1, 3, 4]), BigUint::from(2u32));
    println!("acceptance 3 PASS: worked examples 56 / 28 and the 12-partition leader profile");
}

#[test]
fn criterion_4_oracle_equivalence() {
    let start = Instant::now();
    let mut checked = 0usize;
    for s in 1..=3u32 {
        for n in 0..=6usize {
            for k in 0..=n {
                for kind in [
                    TriangleKind::LahHl,
                    TriangleKind::StirlingFirstHl,
                    TriangleKind::StirlingSecondHl,
                ] {
                    assert_eq!(
                        oracle_count(kind, n, k, lvl(s)).unwrap(),
                        numbers::triangle_entry(kind, n, k, lvl(s)),
                        "{kind} n={n} k={k} s={s}"
                    );
                    checked += 1;
                }
            }
        }
    }
    for r in 0..=3usize {
        for s in 1..=2u32 {
            for n in 0..=6usize {
                for k in 0..=n {
                    assert_eq!(
                        oracle_count(TriangleKind::LrLah { r }, n, k, lvl(s)).unwrap(),
                        lr_lah(n, k, lvl(s), r),
                        "lrlah r={r} n={n} k={k} s={s}"
                    );
                    checked += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    assert_within(elapsed, Duration::from_secs(60), "oracle equivalence");
    println!("acceptance 4 PASS: enumeration matches recurrences on {checked} cells ({elapsed:?})");
}

#[test]
fn criterion_5_factorial_basis_identities() {
    let start = Instant::now();
    for s in 1..=4u32 {
        let rising = BasisTag::RisingHl(lvl(s));
        let falling = BasisTag::FallingHl(lvl(s));
        for n in 0..=10usize {
            let rising_n = Polynomial::basis_element(rising, n);
            let falling_n = Polynomial::basis_element(falling, n);

            let in_falling = convert(&rising_n, falling).unwrap();
            for k in 0..=n {
                assert_eq!(
                    in_falling.coeff(k),
                    BigInt::from(lah_order(n, k, lvl(s))),
                    "rising->falling coefficient n={n} k={k} s={s}"
                );
            }

            let in_rising = convert(&falling_n, rising).unwrap();
            for k in 0..=n {
                assert_eq!(
                    in_rising.coeff(k),
                    signed_value(TriangleKind::LahOrderS, n, k, lvl(s)).unwrap(),
                    "falling->rising coefficient n={n} k={k} s={s}"
                );
            }

            for x in -3..=3i64 {
                let x = BigInt::from(x);
                assert_eq!(eval(&rising_n, &x), eval(&in_falling, &x), "n={n} s={s} x={x}");
                assert_eq!(eval(&falling_n, &x), eval(&in_rising, &x), "n={n} s={s} x={x}");
            }
        }
    }
    let elapsed = start.elapsed();
    assert_within(elapsed, Duration::from_secs(5), "factorial-basis identities");
    println!("acceptance 5 PASS: rising/falling expansions match order-s and signed order-s coefficients ({elapsed:?})");
}

#[test]
fn criterion_6_matrix_algebra() {
    const N: usize = 12;
    fn assert_identity(m: &TransitionMatrix, what: &str) {
        for n in 0..m.size() {
            for k in 0..m.size() {
                let expected = if n == k { BigInt::one() } else { BigInt::zero() };
                assert_eq!(*m.entry(n, k), expected, "{what} at ({n}, {k})");
            }
        }
    }
    for s in 1..=4u32 {
        let bases = [
            BasisTag::Standard,
            BasisTag::RisingHl(lvl(s)),
            BasisTag::FallingHl(lvl(s)),
        ];
        for from in bases {
            for to in bases {
                let forward = transition_matrix(from, to, N).unwrap();
                let inverse = transition_matrix(to, from, N).unwrap();
                assert_identity(&forward.compose(&inverse), &format!("{from}->{to}->{from}"));
            }
        }

        let rising_to_falling =
            transition_matrix(BasisTag::RisingHl(lvl(s)), BasisTag::FallingHl(lvl(s)), N).unwrap();
        let through_standard = transition_matrix(BasisTag::RisingHl(lvl(s)), BasisTag::Standard, N)
            .unwrap()
            .compose(&transition_matrix(BasisTag::Standard, BasisTag::FallingHl(lvl(s)), N).unwrap());
        for n in 0..N {
            for k in 0..N {
                assert_eq!(
                    rising_to_falling.entry(n, k),
                    through_standard.entry(n, k),
                    "factorization s={s} at ({n}, {k})"
                );
                let mut product_sum = BigInt::zero();
                for j in k..=n.min(N - 1) {
                    product_sum +=
                        BigInt::from(stirling1_hl(n, j, lvl(s)) * stirling2_hl(j, k, lvl(s)));
                }
                assert_eq!(
                    *rising_to_falling.entry(n, k),
                    product_sum,
                    "stirling product s={s} at ({n}, {k})"
                );
            }
        }
    }

    let worked =
        transition_matrix(BasisTag::RisingHl(lvl(2)), BasisTag::FallingHl(lvl(2)), 7).unwrap();
    let expected: [&[i64]; 7] = [
        &[1, 0, 0, 0, 0, 0, 0],
        &[0, 1, 0, 0, 0, 0, 0],
        &[0, 2, 1, 0, 0, 0, 0],
        &[0, 10, 10, 1, 0, 0, 0],
        &[0, 100, 140, 28, 1, 0, 0],
        &[0, 1700, 2900, 840, 60, 1, 0],
        &[0, 44200, 85800, 31460, 3300, 110, 1],
    ];
    for (n, row) in expected.iter().enumerate() {
        for (k, &value) in row.iter().enumerate() {
            assert_eq!(*worked.entry(n, k), BigInt::from(value), "7x7 at ({n}, {k})");
        }
    }
    println!("acceptance 6 PASS: inverse pairs, matrix factorization and the 7x7 example at N = 12, s <= 4");
}

#[test]
fn criterion_7_recurrence_steppers() {
    for s in 1..=4u32 {
        for n in 1..=8usize {
            assert_eq!(
                q_step(&q_poly(n, lvl(s)), n, lvl(s)),
                q_poly(n + 1, lvl(s)),
                "q step n={n} s={s}"
            );
            assert_eq!(
                row_poly_hl_step(&row_poly_hl(n, lvl(s)), n, lvl(s)).unwrap(),
                row_poly_hl(n + 1, lvl(s)),
                "row step n={n} s={s}"
            );
            assert_eq!(
                lah_order_poly_step(&lah_order_poly(n, lvl(s)), n, lvl(s)),
                lah_order_poly(n + 1, lvl(s)),
                "order-s step n={n} s={s}"
            );
            assert_eq!(
                a_poly(n, lvl(s), PolyForm::Definition),
                a_poly(n, lvl(s), PolyForm::Derivative),
                "A forms n={n} s={s}"
            );
            assert_eq!(
                b_poly(n, lvl(s), PolyForm::Definition),
                b_poly(n, lvl(s), PolyForm::Derivative),
                "B forms n={n} s={s}"
            );
        }
    }
    println!("acceptance 7 PASS: all recurrence steppers and both A/B routes agree for n <= 8, s <= 4");
}

#[test]
fn criterion_8_order_comparisons() {
    for s in 1..=5u32 {
        for n in 1..=10usize {
            for k in 1..=n {
                let hlah = lah_higher_level(n, k, lvl(s));
                let olah = lah_order(n, k, lvl(s));
                let s1 = stirling1_hl(n, k, lvl(s));
                let s2 = stirling2_hl(n, k, lvl(s));
                assert!(hlah >= olah && olah >= s1 && s1 >= s2, "chain n={n} k={k} s={s}");
            }
        }
    }
    for s in 1..=6u32 {
        let half_ratio = num_traits::pow(BigUint::from(2u32), (s - 1) as usize);
        for n in 2..=12usize {
            assert_eq!(
                &half_ratio * lah_order(n, n - 1, lvl(s)),
                lah_higher_level(n, n - 1, lvl(s)),
                "ratio n={n} s={s}"
            );
        }
    }
    for n in 0..=10usize {
        for k in 0..=n {
            let classical = if k == 0 {
                if n == 0 {
                    BigUint::one()
                } else {
                    BigUint::zero()
                }
            } else {
                let binom = num_integer::binomial(BigUint::from(n - 1), BigUint::from(k - 1));
                (k + 1..=n).fold(binom, |acc, i| acc * BigUint::from(i))
            };
            assert_eq!(lah_higher_level(n, k, Level::ONE), classical, "collapse n={n} k={k}");
            assert_eq!(lah_order(n, k, Level::ONE), classical, "collapse n={n} k={k}");
        }
    }
    println!("acceptance 8 PASS: inequality chain, superdiagonal ratio and classical collapse");
}

#[test]
fn criterion_9_closed_forms() {
    for s in 1..=4u32 {
        for n in 1..=10usize {
            for (kind, case, k) in [
                (TriangleKind::LahHl, ClosedFormCase::KOne, 1usize),
                (TriangleKind::LahHl, ClosedFormCase::KNMinusOne, n - 1),
                (TriangleKind::LahOrderS, ClosedFormCase::KOne, 1usize),
                (TriangleKind::LahOrderS, ClosedFormCase::KNMinusOne, n - 1),
            ] {
                assert_eq!(
                    closed_form(kind, case, n, lvl(s)).unwrap(),
                    numbers::triangle_entry(kind, n, k, lvl(s)),
                    "{kind} {case:?} n={n} s={s}"
                );
            }
        }
        // The factorial and 2^(s+1) + 2 special cases, spelled out.
        let factorial_pow = |n: usize| {
            let fact = (2..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i));
            num_traits::pow(fact, s as usize)
        };
        for n in 1..=10usize {
            assert_eq!(lah_higher_level(n, 1, lvl(s)), factorial_pow(n), "(n!)^s n={n} s={s}");
        }
        assert_eq!(lah_order(2, 1, lvl(s)), BigUint::from(2u32), "s={s}");
        let two_pow = num_traits::pow(BigUint::from(2u32), (s + 1) as usize) + BigUint::from(2u32);
        assert_eq!(lah_order(3, 1, lvl(s)), two_pow, "s={s}");
        assert_eq!(lah_order(3, 2, lvl(s)), lah_order(3, 1, lvl(s)), "s={s}");
    }
    println!("acceptance 9 PASS: closed forms match the k = 1 and k = n - 1 triangle entries");
}
