use gstab::exact::rational::{format_rational, parse_rational};
use gstab::exact::{determinant, traceless_seeds};
use gstab::prelude::*;
use gstab::stability::{ledger_obata_eigenvalue, ledger_obata_eigenvector};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(p, q)| rat(p, q))
}

fn unit_interval() -> impl Strategy<Value = Rational> {
    (1i64..=30, 1i64..=30).prop_map(|(p, extra)| rat(p, p + extra))
}

fn square(n: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(prop::collection::vec(small_rational(), n), n)
}

/// Symmetric `N` with `N 1 = 0` from its strictly upper entries.
fn kernel_form(n: usize) -> impl Strategy<Value = SymMatrix> {
    prop::collection::vec(small_rational(), n * (n - 1) / 2).prop_map(move |upper| {
        let mut m = SymMatrix::zeros(n);
        let mut it = upper.into_iter();
        for i in 0..n {
            for j in i + 1..n {
                m.set(i, j, it.next().unwrap());
            }
        }
        for i in 0..n {
            let off: Rational = (0..n)
                .filter(|&j| j != i)
                .map(|j| m.get(i, j).clone())
                .sum();
            m.set(i, i, -off);
        }
        m
    })
}

fn shifted(a: &[Vec<Rational>], x: &Rational) -> Vec<Vec<Rational>> {
    a.iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter()
                .enumerate()
                .map(|(j, v)| if i == j { v - x } else { v.clone() })
                .collect()
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rationals_round_trip(p in -1_000_000i64..1_000_000, q in 1i64..1_000_000) {
        let r = rat(p, q);
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn charpoly_matches_determinant(a in (1usize..6).prop_flat_map(square), x in small_rational()) {
        let p = characteristic_polynomial(&a).unwrap();
        prop_assert_eq!(p.degree(), a.len());
        prop_assert_eq!(p.eval(&x), determinant(&shifted(&a, &x)).unwrap());
    }

    #[test]
    fn restriction_splits_off_the_kernel(
        (form, w) in (2usize..6).prop_flat_map(|n| (kernel_form(n), prop::collection::vec(1i64..12, n))),
    ) {
        let weights: Vec<Rational> = w.iter().map(|&x| int(x)).collect();
        let full = WeightedForm::new(form, weights.clone()).unwrap();
        let restricted = full.restrict_traceless().unwrap();
        prop_assert_eq!(restricted.order(), full.order() - 1);

        // det(N - xW)/prod w = -x * det(R - xG)/prod g
        let p = full.characteristic_polynomial();
        let q = restricted.characteristic_polynomial();
        let mut shifted_q = vec![int(0)];
        shifted_q.extend(q.coeffs().iter().map(|c| -c.clone()));
        prop_assert_eq!(p.coeffs(), &shifted_q[..]);

        // seeds are traceless and mutually W-orthogonal
        let seeds = traceless_seeds(&weights).unwrap();
        for (i, u) in seeds.iter().enumerate() {
            prop_assert!(full.trace_of(u).unwrap().is_zero());
            for v in &seeds[i + 1..] {
                let ip: Rational = u.iter().zip(v).zip(&weights).map(|((a, b), w)| a * b * w).sum();
                prop_assert!(ip.is_zero());
            }
        }
    }

    #[test]
    fn constants_are_permutation_invariant(m in 2usize..12, i in 1usize..12, j in 1usize..12, k in 1usize..12) {
        prop_assume!(i <= m && j <= m && k <= m);
        let t = ledger_obata_constants(&LedgerObataSpec { m, dim_f: 3 }).unwrap();
        let v = t.get(i, j, k).unwrap();
        for p in [(i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)] {
            prop_assert_eq!(t.get(p.0, p.1, p.2).unwrap(), v.clone());
        }
        prop_assert!(!v.is_negative());
    }

    #[test]
    fn classify_is_monotone(
        two_rho in unit_interval(),
        eigs in prop::collection::vec(small_rational(), 0..6),
        extra in small_rational(),
    ) {
        let before = classify(&two_rho, &eigs, true, true);
        let mut more = eigs.clone();
        more.push(extra.clone());
        let after = classify(&two_rho, &more, true, true);
        if before == Verdict::UnstableCertified {
            prop_assert_eq!(after, Verdict::UnstableCertified);
        }
        if extra < two_rho {
            prop_assert_eq!(after, Verdict::UnstableCertified);
        }
        prop_assert_ne!(classify(&two_rho, &more, false, true), Verdict::StableCertified);
        prop_assert_ne!(classify(&two_rho, &more, true, false), Verdict::StableCertified);
    }

    #[test]
    fn ledger_obata_sign_law(m in 2usize..40, pick in 0usize..1000) {
        let i = 1 + pick % (m - 1);
        let s = LedgerObataSpec { m, dim_f: 3 };
        let rho = rho_ledger_obata(&s).unwrap();
        let lich = lich_ledger_obata(&s).unwrap();
        let mu = ledger_obata_eigenvalue(m, i);
        let v = ledger_obata_eigenvector(m, i);
        let q = second_variation_i_basis(&rho, &lich, &v).unwrap();
        let norm: Rational = v.iter().map(|x| x * x).sum();
        prop_assert_eq!(q.clone(), (int(2) * &rho - &mu) * norm / int(2));
        prop_assert_eq!(q.is_positive(), mu < int(2) * rho);
    }

    #[test]
    fn diagonal_pairs_are_einstein(c in unit_interval(), d2 in 1u64..60, slack in 0u64..60) {
        // [111] = d1 - 2(1-c)d2 >= 0
        let floor = (int(2) * (int(1) - &c) * Rational::from_integer(d2.into())).ceil();
        let d1 = floor.to_integer().try_into().unwrap_or(1u64).max(1) + slack;
        let s = DiagonalPairSpec { d1, d2, c: c.clone(), multiplicity_free: true };
        let t = diagonal_pair_constants(&s).unwrap();
        let x = [int(1), (&c + int(1)) / &c];
        prop_assert_eq!(ricci_diagonal(&t, &x).unwrap(), vec![rat(1, 4), rat(1, 4)]);
        let l = lich_diagonal_pair_g0(&s).unwrap();
        prop_assert!(l.determinant().is_zero());
        let report = diagonal_pair_verdict(&s).unwrap();
        prop_assert_eq!(&report.lambda_min_bound, &l.trace());
        let want = if report.lambda_min_bound < rat(1, 2) {
            Verdict::UnstableCertified
        } else if report.lambda_min_bound == rat(1, 2) {
            Verdict::Degenerate
        } else {
            Verdict::StableCertified
        };
        prop_assert_eq!(report.verdict, want);
    }

    #[test]
    fn nikonorov_witness_rayleigh(
        n in 0usize..4,
        extra in 0usize..8,
        cs in prop::collection::vec(unit_interval(), 4),
        dim_q in prop::collection::vec(1u64..20, 4),
        dim_h in 3u64..15,
    ) {
        let s = NikonorovSpec {
            m: n + 4 + extra,
            n,
            dim_h,
            c: cs[..n].to_vec(),
            dim_q: dim_q[..n].to_vec(),
        };
        let rho = rho_nikonorov(&s).unwrap();
        let w = nikonorov_witness(&s).unwrap();
        prop_assert_eq!(&w.rayleigh, &(int(1) - int(2) * &rho));
        prop_assert!(w.rayleigh < int(2) * rho);
        if n == 0 {
            // the block is then the whole operator
            prop_assert!(lich_nikonorov_block(&s).unwrap().annihilates_identity());
        }
    }

    #[test]
    fn jacobi_agrees_with_exact_roots(m in 2usize..25) {
        let s = LedgerObataSpec { m, dim_f: 3 };
        let mut exact = ledger_obata_spectrum(&s).unwrap();
        exact.sort();
        let numeric = lich_ledger_obata(&s).unwrap().eigen_numeric(1e-13).unwrap();
        for (x, y) in numeric.iter().zip(&exact) {
            prop_assert!((x - gstab::exact::rational::to_f64(y)).abs() < 1e-10);
        }
    }
}
