//! The `verify` command: named invariant suites with one PASS/FAIL line per
//! check, reported in sorted order. A FAIL line carries the first
//! counterexample encountered.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use lahkit::numbers::{
    self, closed_form, lah_higher_level, lah_hl_explicit, lah_order, lah_order_via_stirling,
    lr_lah, signed_value, stirling1_hl, stirling2_hl, ClosedFormCase, Level, TriangleKind,
};
use lahkit::oracle::{classic_count, enumerate_profiles, oracle_count, BlockWeighting};
use lahkit::poly::{
    a_poly, b_poly, convert, eval, factorial_poly, lah_order_poly, lah_order_poly_step,
    lr_row_poly, lr_row_poly_step, q_poly, q_step, row_poly_hl, row_poly_hl_step,
    transition_matrix, BasisTag, FactorialKind, PolyForm, Polynomial,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Oracle,
    Identities,
    Inequalities,
    ClosedForms,
    All,
}

#[derive(Debug, Clone, Copy)]
struct Bounds {
    nmax: usize,
    smax: u32,
}

type Check = (String, Result<(), String>);

fn lvl(s: u32) -> Level {
    Level::new(s).expect("suite levels start at 1")
}

/// Runs the requested suite. Explicit `nmax`/`smax` override the per-suite
/// defaults, which match the ranges the invariants are stated for.
pub fn run_suite(suite: Suite, nmax: Option<usize>, smax: Option<u32>) -> Vec<Check> {
    let bounds = |default_n: usize, default_s: u32| Bounds {
        nmax: nmax.unwrap_or(default_n),
        smax: smax.unwrap_or(default_s),
    };
    let mut checks = Vec::new();
    match suite {
        Suite::Oracle => oracle_checks(&mut checks, bounds(6, 3)),
        Suite::Identities => identity_checks(&mut checks, bounds(10, 4)),
        Suite::Inequalities => inequality_checks(&mut checks, bounds(10, 5)),
        Suite::ClosedForms => closed_form_checks(&mut checks, bounds(10, 4)),
        Suite::All => {
            oracle_checks(&mut checks, bounds(6, 3));
            identity_checks(&mut checks, bounds(10, 4));
            inequality_checks(&mut checks, bounds(10, 5));
            closed_form_checks(&mut checks, bounds(10, 4));
        }
    }
    checks.sort_by(|a, b| a.0.cmp(&b.0));
    checks
}

fn classical_lah(n: usize, k: usize) -> BigUint {
    if k == 0 {
        return if n == 0 { BigUint::one() } else { BigUint::zero() };
    }
    let binom = num_integer::binomial(BigUint::from(n - 1), BigUint::from(k - 1));
    (k + 1..=n).fold(binom, |acc, i| acc * BigUint::from(i))
}

fn oracle_checks(checks: &mut Vec<Check>, b: Bounds) {
    let combinatorial = [
        ("oracle/hlah", TriangleKind::LahHl),
        ("oracle/stirling1", TriangleKind::StirlingFirstHl),
        ("oracle/stirling2", TriangleKind::StirlingSecondHl),
    ];
    for (name, kind) in combinatorial {
        checks.push((name.to_string(), (|| {
            for s in 1..=b.smax {
                for n in 0..=b.nmax {
                    for k in 0..=n {
                        let counted = oracle_count(kind, n, k, lvl(s)).map_err(|e| e.to_string())?;
                        let recurred = numbers::triangle_entry(kind, n, k, lvl(s));
                        if counted != recurred {
                            return Err(format!(
                                "n={n} k={k} s={s}: enumeration {counted} != recurrence {recurred}"
                            ));
                        }
                    }
                }
            }
            Ok(())
        })()));
    }

    checks.push(("oracle/lrlah".to_string(), (|| {
        for r in 0..=3usize {
            for s in 1..=b.smax.min(2) {
                for n in 0..=b.nmax {
                    for k in 0..=n {
                        let counted = oracle_count(TriangleKind::LrLah { r }, n, k, lvl(s))
                            .map_err(|e| e.to_string())?;
                        let recurred = lr_lah(n, k, lvl(s), r);
                        if counted != recurred {
                            return Err(format!(
                                "n={n} k={k} s={s} r={r}: enumeration {counted} != recurrence {recurred}"
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    })()));

    checks.push(("oracle/classic-lah-closed-formula".to_string(), (|| {
        for n in 0..=b.nmax.min(8) {
            for k in 0..=n {
                let counted = classic_count(n, k, BlockWeighting::Lists).map_err(|e| e.to_string())?;
                let formula = classical_lah(n, k);
                if counted != formula {
                    return Err(format!("n={n} k={k}: enumeration {counted} != formula {formula}"));
                }
            }
        }
        Ok(())
    })()));

    checks.push(("oracle/leader-profile-aggregation".to_string(), (|| {
        for w in [BlockWeighting::Lists, BlockWeighting::Cycles, BlockWeighting::Sets] {
            for n in 1..=b.nmax {
                for k in 1..=n {
                    let profile = enumerate_profiles(n, k, w, 0).map_err(|e| e.to_string())?;
                    for leaders in profile.entries().keys() {
                        if leaders.len() != k || leaders.first() != Some(&1) {
                            return Err(format!(
                                "n={n} k={k} {w:?}: bad leader set {leaders:?}"
                            ));
                        }
                    }
                    let total = profile.total();
                    let classic = classic_count(n, k, w).map_err(|e| e.to_string())?;
                    if total != classic {
                        return Err(format!(
                            "n={n} k={k} {w:?}: profile total {total} != classic count {classic}"
                        ));
                    }
                }
            }
        }
        Ok(())
    })()));

    checks.push(("oracle/worked-example".to_string(), (|| {
        let profile = enumerate_profiles(4, 3, BlockWeighting::Lists, 0).map_err(|e| e.to_string())?;
        let expected: [(&[usize], u32); 3] = [(&[1, 2, 3], 6), (&[1, 2, 4], 4), (&[1, 3, 4], 2)];
        for (leaders, weight) in expected {
            if profile.weight(leaders) != BigUint::from(weight) {
                return Err(format!(
                    "leader set {leaders:?}: weight {} != {weight}",
                    profile.weight(leaders)
                ));
            }
        }
        if profile.entries().len() != 3 {
            return Err(format!("expected 3 leader sets, found {}", profile.entries().len()));
        }
        Ok(())
    })()));
}

fn identity_checks(checks: &mut Vec<Check>, b: Bounds) {
    let size = b.nmax + 1;

    checks.push(("identities/rising-to-falling".to_string(), (|| {
        for s in 1..=b.smax {
            for n in 0..=b.nmax {
                let rising_n = Polynomial::basis_element(BasisTag::RisingHl(lvl(s)), n);
                let converted = convert(&rising_n, BasisTag::FallingHl(lvl(s))).map_err(|e| e.to_string())?;
                for k in 0..=n {
                    let expected = BigInt::from(lah_order(n, k, lvl(s)));
                    if converted.coeff(k) != expected {
                        return Err(format!(
                            "n={n} k={k} s={s}: coefficient {} != {expected}",
                            converted.coeff(k)
                        ));
                    }
                }
                for x in -3..=3i64 {
                    let x = BigInt::from(x);
                    if eval(&rising_n, &x) != eval(&converted, &x) {
                        return Err(format!("n={n} s={s}: evaluations differ at x={x}"));
                    }
                }
            }
        }
        Ok(())
    })()));

    checks.push(("identities/falling-to-rising".to_string(), (|| {
        for s in 1..=b.smax {
            for n in 0..=b.nmax {
                let falling_n = Polynomial::basis_element(BasisTag::FallingHl(lvl(s)), n);
                let converted = convert(&falling_n, BasisTag::RisingHl(lvl(s))).map_err(|e| e.to_string())?;
                for k in 0..=n {
                    let expected = signed_value(TriangleKind::LahOrderS, n, k, lvl(s))
                        .map_err(|e| e.to_string())?;
                    if converted.coeff(k) != expected {
                        return Err(format!(
                            "n={n} k={k} s={s}: coefficient {} != {expected}",
                            converted.coeff(k)
                        ));
                    }
                }
                for x in -3..=3i64 {
                    let x = BigInt::from(x);
                    if eval(&falling_n, &x) != eval(&converted, &x) {
                        return Err(format!("n={n} s={s}: evaluations differ at x={x}"));
                    }
                }
            }
        }
        Ok(())
    })()));

    checks.push(("identities/inverse-pairs".to_string(), (|| {
        for s in 1..=b.smax {
            let bases = [
                BasisTag::Standard,
                BasisTag::RisingHl(lvl(s)),
                BasisTag::FallingHl(lvl(s)),
            ];
            for from in bases {
                for to in bases {
                    let forward = transition_matrix(from, to, size).map_err(|e| e.to_string())?;
                    let inverse = transition_matrix(to, from, size).map_err(|e| e.to_string())?;
                    let product = forward.compose(&inverse);
                    for n in 0..size {
                        for k in 0..size {
                            let expected = if n == k { BigInt::one() } else { BigInt::zero() };
                            if *product.entry(n, k) != expected {
                                return Err(format!(
                                    "{from}->{to}->{from} at ({n},{k}): {}",
                                    product.entry(n, k)
                                ));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    })()));

    checks.push(("identities/matrix-factorization".to_string(), (|| {
        for s in 1..=b.smax {
            let direct =
                transition_matrix(BasisTag::RisingHl(lvl(s)), BasisTag::FallingHl(lvl(s)), size)
                    .map_err(|e| e.to_string())?;
            let through = transition_matrix(BasisTag::RisingHl(lvl(s)), BasisTag::Standard, size)
                .map_err(|e| e.to_string())?
                .compose(
                    &transition_matrix(BasisTag::Standard, BasisTag::FallingHl(lvl(s)), size)
                        .map_err(|e| e.to_string())?,
                );
            for n in 0..size {
                for k in 0..size {
                    if direct.entry(n, k) != through.entry(n, k) {
                        return Err(format!(
                            "s={s} at ({n},{k}): direct {} != composed {}",
                            direct.entry(n, k),
                            through.entry(n, k)
                        ));
                    }
                }
            }
        }
        Ok(())
    })()));

    checks.push(("identities/expansion-coefficients".to_string(), (|| {
        for s in 1..=b.smax.min(3) {
            for n in 0..=b.nmax.min(8) {
                let expanded = factorial_poly(FactorialKind::Rising, n, lvl(s));
                for k in 0..=n {
                    let expected = BigInt::from(stirling1_hl(n, k, lvl(s)));
                    if expanded.coeff(k) != expected {
                        return Err(format!(
                            "rising n={n} k={k} s={s}: coefficient {} != {expected}",
                            expanded.coeff(k)
                        ));
                    }
                }
                // x^n recovered from Stirling-second weights on falling factorials.
                let mut recovered = Polynomial::zero(BasisTag::Standard);
                for k in 0..=n {
                    let weight = BigInt::from(stirling2_hl(n, k, lvl(s)));
                    let term = factorial_poly(FactorialKind::Falling, k, lvl(s));
                    let scaled: Vec<BigInt> =
                        term.coeffs().iter().map(|c| c * &weight).collect();
                    let mut sum = recovered.coeffs().to_vec();
                    if sum.len() < scaled.len() {
                        sum.resize(scaled.len(), BigInt::zero());
                    }
                    for (i, c) in scaled.into_iter().enumerate() {
                        sum[i] += c;
                    }
                    recovered = Polynomial::new(BasisTag::Standard, sum);
                }
                let monomial = Polynomial::basis_element(BasisTag::Standard, n);
                if recovered != monomial {
                    return Err(format!("n={n} s={s}: falling expansion does not recover x^{n}"));
                }
            }
        }
        Ok(())
    })()));

    checks.push(("identities/order-s-via-stirling".to_string(), (|| {
        for s in 1..=b.smax {
            for n in 0..=b.nmax {
                for k in 0..=n {
                    let direct = lah_order(n, k, lvl(s));
                    let product = lah_order_via_stirling(n, k, lvl(s));
                    if direct != product {
                        return Err(format!("n={n} k={k} s={s}: {direct} != {product}"));
                    }
                }
            }
        }
        Ok(())
    })()));

    checks.push(("identities/explicit-formula".to_string(), (|| {
        for s in 1..=b.smax.min(3) {
            for n in 0..=b.nmax.min(8) {
                for k in 0..=n {
                    let explicit = lah_hl_explicit(n, k, lvl(s));
                    let recurred = lah_higher_level(n, k, lvl(s));
                    if explicit != recurred {
                        return Err(format!("n={n} k={k} s={s}: {explicit} != {recurred}"));
                    }
                }
            }
        }
        Ok(())
    })()));

    checks.push(("identities/lrlah-reduction".to_string(), (|| {
        for s in 1..=b.smax.min(3) {
            for r in 0..=1usize {
                for n in 0..=b.nmax.min(8) {
                    for k in 0..=n {
                        let restricted = lr_lah(n, k, lvl(s), r);
                        let unrestricted = lah_higher_level(n, k, lvl(s));
                        if restricted != unrestricted {
                            return Err(format!(
                                "n={n} k={k} s={s} r={r}: {restricted} != {unrestricted}"
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    })()));

    checks.push(("identities/recurrence-steppers".to_string(), (|| {
        for s in 1..=b.smax {
            for n in 1..=b.nmax.min(8) {
                let stepped = q_step(&q_poly(n, lvl(s)), n, lvl(s));
                if stepped != q_poly(n + 1, lvl(s)) {
                    return Err(format!("q step n={n} s={s}"));
                }
                let stepped = row_poly_hl_step(&row_poly_hl(n, lvl(s)), n, lvl(s))
                    .map_err(|e| e.to_string())?;
                if stepped != row_poly_hl(n + 1, lvl(s)) {
                    return Err(format!("row step n={n} s={s}"));
                }
                let stepped = lah_order_poly_step(&lah_order_poly(n, lvl(s)), n, lvl(s));
                if stepped != lah_order_poly(n + 1, lvl(s)) {
                    return Err(format!("order-s step n={n} s={s}"));
                }
            }
            for r in 0..=3usize {
                for n in r.max(1)..=b.nmax.min(8) {
                    let stepped = lr_row_poly_step(&lr_row_poly(n, lvl(s), r), n, lvl(s));
                    if stepped != lr_row_poly(n + 1, lvl(s), r) {
                        return Err(format!("restricted row step n={n} s={s} r={r}"));
                    }
                }
            }
        }
        Ok(())
    })()));

    checks.push(("identities/auxiliary-forms".to_string(), (|| {
        for s in 1..=b.smax {
            for n in 1..=b.nmax.min(8) {
                if a_poly(n, lvl(s), PolyForm::Definition) != a_poly(n, lvl(s), PolyForm::Derivative)
                {
                    return Err(format!("A forms differ at n={n} s={s}"));
                }
                if b_poly(n, lvl(s), PolyForm::Definition) != b_poly(n, lvl(s), PolyForm::Derivative)
                {
                    return Err(format!("B forms differ at n={n} s={s}"));
                }
            }
        }
        Ok(())
    })()));

    checks.push(("identities/eval-preservation".to_string(), (|| {
        for s in 1..=b.smax {
            for basis in [BasisTag::RisingHl(lvl(s)), BasisTag::FallingHl(lvl(s))] {
                for n in 0..=b.nmax.min(8) {
                    let monomial = Polynomial::basis_element(BasisTag::Standard, n);
                    let converted = convert(&monomial, basis).map_err(|e| e.to_string())?;
                    for x in -3..=3i64 {
                        let x = BigInt::from(x);
                        if eval(&monomial, &x) != eval(&converted, &x) {
                            return Err(format!("x^{n} -> {basis}: differs at x={x}"));
                        }
                    }
                }
            }
        }
        Ok(())
    })()));
}

fn inequality_checks(checks: &mut Vec<Check>, b: Bounds) {
    checks.push(("inequalities/chain".to_string(), (|| {
        for s in 1..=b.smax {
            for n in 1..=b.nmax {
                for k in 1..=n {
                    let hlah = lah_higher_level(n, k, lvl(s));
                    let olah = lah_order(n, k, lvl(s));
                    let s1 = stirling1_hl(n, k, lvl(s));
                    let s2 = stirling2_hl(n, k, lvl(s));
                    if !(hlah >= olah && olah >= s1 && s1 >= s2) {
                        return Err(format!(
                            "n={n} k={k} s={s}: {hlah} >= {olah} >= {s1} >= {s2} fails"
                        ));
                    }
                }
            }
        }
        Ok(())
    })()));

    checks.push(("inequalities/superdiagonal-ratio".to_string(), (|| {
        for s in 1..=b.smax {
            let factor = num_traits::pow(BigUint::from(2u32), (s - 1) as usize);
            for n in 2..=b.nmax {
                let lhs = &factor * lah_order(n, n - 1, lvl(s));
                let rhs = lah_higher_level(n, n - 1, lvl(s));
                if lhs != rhs {
                    return Err(format!("n={n} s={s}: {lhs} != {rhs}"));
                }
            }
        }
        Ok(())
    })()));

    checks.push(("inequalities/classical-collapse".to_string(), (|| {
        for n in 0..=b.nmax {
            for k in 0..=n {
                let expected = classical_lah(n, k);
                let hlah = lah_higher_level(n, k, Level::ONE);
                let olah = lah_order(n, k, Level::ONE);
                if hlah != expected || olah != expected {
                    return Err(format!("n={n} k={k}: {hlah} / {olah} != classical {expected}"));
                }
            }
        }
        Ok(())
    })()));
}

fn closed_form_checks(checks: &mut Vec<Check>, b: Bounds) {
    let cases = [
        ("closed-forms/hlah-first-column", TriangleKind::LahHl, ClosedFormCase::KOne),
        ("closed-forms/hlah-superdiagonal", TriangleKind::LahHl, ClosedFormCase::KNMinusOne),
        ("closed-forms/olah-first-column", TriangleKind::LahOrderS, ClosedFormCase::KOne),
        ("closed-forms/olah-superdiagonal", TriangleKind::LahOrderS, ClosedFormCase::KNMinusOne),
    ];
    for (name, kind, case) in cases {
        checks.push((name.to_string(), (|| {
            for s in 1..=b.smax {
                for n in 1..=b.nmax {
                    let k = match case {
                        ClosedFormCase::KOne => 1,
                        ClosedFormCase::KNMinusOne => n - 1,
                    };
                    let formula = closed_form(kind, case, n, lvl(s)).map_err(|e| e.to_string())?;
                    let entry = numbers::triangle_entry(kind, n, k, lvl(s));
                    if formula != entry {
                        return Err(format!("n={n} s={s}: formula {formula} != entry {entry}"));
                    }
                }
            }
            Ok(())
        })()));
    }

    checks.push(("closed-forms/olah-small-values".to_string(), (|| {
        for s in 1..=b.smax {
            if lah_order(2, 1, lvl(s)) != BigUint::from(2u32) {
                return Err(format!("s={s}: entry (2,1) != 2"));
            }
            let expected = num_traits::pow(BigUint::from(2u32), (s + 1) as usize) + BigUint::from(2u32);
            for k in 1..=2usize {
                let entry = lah_order(3, k, lvl(s));
                if entry != expected {
                    return Err(format!("s={s}: entry (3,{k}) = {entry} != {expected}"));
                }
            }
        }
        Ok(())
    })()));
}
