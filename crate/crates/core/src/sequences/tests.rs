use super::*;
use crate::arith::int;
use crate::lambda::{hall_littlewood_principal, sfraction};
use crate::partitions::enumerate_partitions;
use crate::series::TruncSeries;

fn p(c: &[i64]) -> PolyQQ {
    PolyQQ::from_q_coeffs(c)
}

fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

#[test]
fn first_narayana_polynomials() {
    assert_eq!(narayana(0), PolyQQ::one());
    assert_eq!(narayana(1), p(&[1]));
    assert_eq!(narayana(2), p(&[1, 1]));
    assert_eq!(narayana(3), p(&[1, 3, 1]));
    assert_eq!(narayana(4), p(&[1, 6, 6, 1]));
    assert_eq!(narayana(5), p(&[1, 10, 20, 10, 1]));
}

#[test]
fn recurrences_agree() {
    for n in 3..=30 {
        assert_eq!(narayana_second_recurrence(n).unwrap(), narayana(n), "n={n}");
    }
    assert!(narayana_second_recurrence(2).is_err());
}

#[test]
fn generating_function_quadratic() {
    // q u C^2 + (u (1 - q) - 1) C + 1 = 0
    let order = 20;
    let c = TruncSeries::from_fn(order, narayana);
    let quad = c.mul(&c).shift_up(1).scale(&PolyQQ::q());
    let lin = c.shift_up(1).scale(&one_minus_q()).sub(&c);
    let total = quad.add(&lin).add(&TruncSeries::one(order));
    assert_eq!(total, TruncSeries::zero(order));
}

#[test]
fn palindromic_with_unit_ends() {
    for n in 1..=30 {
        let coeffs = narayana(n).q_coeffs().unwrap();
        assert_eq!(coeffs.len(), n, "degree of C_{n}");
        let rev: Vec<_> = coeffs.iter().rev().cloned().collect();
        assert_eq!(coeffs, rev, "C_{n} is palindromic");
        assert_eq!(coeffs[0], rat(1));
        assert_eq!(coeffs[n - 1], rat(1));
    }
}

#[test]
fn closed_form_examples() {
    assert_eq!(narayana_closed(2, ClosedForm::Eqde).unwrap(), p(&[0, 1, 1]));
    assert_eq!(narayana_closed(1, ClosedForm::Eqci).unwrap(), PolyQQ::one());
    assert_eq!(narayana_closed(4, ClosedForm::BinomialN).unwrap(), p(&[1, 6, 6, 1]));
    assert!(narayana_closed(0, ClosedForm::Eqqu).is_err());
    assert_eq!("eqsi".parse::<ClosedForm>().unwrap(), ClosedForm::Eqsi);
    assert!("eqxx".parse::<ClosedForm>().is_err());
}

#[test]
fn closed_forms_agree_with_recurrence() {
    for n in 1..=20 {
        for v in ClosedForm::ALL {
            let expected = if v == ClosedForm::Eqde { large_narayana(n) } else { narayana(n) };
            assert_eq!(narayana_closed(n, v).unwrap(), expected, "{v} n={n}");
        }
    }
}

#[test]
fn master_formula_examples() {
    assert_eq!(master_formula(1, -1, 2).unwrap(), p(&[1, 1]));
    assert_eq!(master_formula(-1, -1, 5).unwrap(), p(&[1, 10, 20, 10, 1]));
    assert_eq!(master_formula(1, 1, 1).unwrap(), PolyQQ::one());
    assert!(master_formula(2, 1, 1).is_err());
    for r in 1..=10 {
        for (eta, zeta) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            assert_eq!(master_formula(eta, zeta, r).unwrap(), narayana(r), "({eta},{zeta}) r={r}");
        }
    }
}

#[test]
fn catalan_and_schroeder() {
    assert_eq!(catalan(4), int(14));
    assert_eq!(schroeder(SchroederKind::Small, 3), int(11));
    assert_eq!(large_narayana(0), PolyQQ::one());
    let small: Vec<_> = (0..=5).map(|n| schroeder(SchroederKind::Small, n)).collect();
    let large: Vec<_> = (0..=5).map(|n| schroeder(SchroederKind::Large, n)).collect();
    assert_eq!(small, [1, 1, 3, 11, 45, 197].map(int));
    assert_eq!(large, [1, 2, 6, 22, 90, 394].map(int));
    for n in 0..=25 {
        assert_eq!(catalan(n), catalan_closed(n));
    }
}

#[test]
fn narayana_numbers_sum_to_catalan() {
    for r in 1..=20 {
        let total: BigInt = (1..=r).map(|k| narayana_number(r, k)).sum();
        assert_eq!(total, catalan_closed(r));
    }
}

#[test]
fn power_sums() {
    assert_eq!(narayana_power_sum(1).unwrap(), p(&[1]));
    assert_eq!(narayana_power_sum(2).unwrap(), p(&[1, 2]));
    assert_eq!(narayana_power_sum(3).unwrap(), p(&[1, 6, 3]));
    assert_eq!(narayana_power_sum(4).unwrap(), p(&[1, 12, 18, 4]));
    assert_eq!(narayana_power_sum(5).unwrap(), p(&[1, 20, 60, 40, 5]));
    assert_eq!(narayana_power_sum(3).unwrap().eval(&rat(1), &rat(0)).unwrap(), rat(10));
    let newton = narayana_alphabet().power_sums(15);
    for (r, pr) in newton.iter().enumerate().skip(1) {
        assert_eq!(*pr, narayana_power_sum(r).unwrap(), "r={r}");
    }
}

#[test]
fn power_sum_refinement() {
    for r in 1..=25i64 {
        let total: BigInt = (0..r).map(|m| gen_binomial(r - 1, m) * gen_binomial(r, m)).sum();
        assert_eq!(total, gen_binomial(2 * r - 1, r - 1));
    }
}

#[test]
fn schur_examples() {
    assert_eq!(narayana_schur(&part(&[2, 2, 2])).unwrap(), p(&[0, 0, 0, -1]));
    assert_eq!(narayana_schur(&part(&[3, 3, 3])).unwrap(), p(&[0, 0, 0, -1]));
    assert_eq!(narayana_schur(&part(&[6])).unwrap(), p(&[1, 15, 50, 50, 15, 1]));
    assert!(narayana_schur(&Partition::rectangle(7, 7)).is_err());
}

#[test]
fn rectangles() {
    for k in 1..=4u32 {
        let expected = PolyQQ::monomial(rat(sign_of_binomial(k)), (k * (k - 1) / 2) as i32, 0);
        let square = narayana_schur(&Partition::rectangle(k, k as usize)).unwrap();
        let lower = narayana_schur(&Partition::rectangle(k - 1, k as usize)).unwrap();
        assert_eq!(square, expected, "k={k}");
        assert_eq!(lower, expected, "k={k}");
    }
}

fn sign_of_binomial(k: u32) -> i64 {
    if (k * (k - 1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[test]
fn theorem_two_relation() {
    for n in 1..=20 {
        let lhs = narayana(n).subst_q(&one_minus_q()).unwrap().scale_int(n as i64 + 1);
        assert_eq!(lhs, hall_littlewood_principal(n, n + 1).unwrap(), "n={n}");
    }
}

#[test]
fn continued_fraction() {
    let cf = sfraction(&narayana_alphabet(), 6).unwrap();
    let alternating: Vec<_> = (0..6).map(|i| if i % 2 == 0 { PolyQQ::one() } else { PolyQQ::q() }).collect();
    assert_eq!(cf, alternating);
    assert_eq!(sfraction(&catalan_alphabet(), 5).unwrap(), vec![PolyQQ::one(); 5]);
    assert_eq!(sfraction(&narayana_alphabet(), 1).unwrap(), vec![PolyQQ::one()]);
}

#[test]
fn jacobi_examples() {
    assert_eq!(jacobi11(0), PolyQQ::one());
    assert_eq!(jacobi11(1), p(&[0, 2]));
    let expected = PolyQQ::from_terms([((2, 0), crate::arith::ratio(15, 4)), ((0, 0), crate::arith::ratio(-3, 4))]);
    assert_eq!(jacobi11(2), expected);
}

#[test]
fn type_b_examples() {
    assert_eq!(type_b_w(2), p(&[1, 4, 1]));
    assert_eq!(type_b_w(0), PolyQQ::one());
    assert_eq!(type_b_w(3).eval(&rat(1), &rat(0)).unwrap(), rat(20));
    for r in 0..=15 {
        let central = gen_binomial(2 * r as i64, r as i64);
        assert_eq!(type_b_w(r).eval(&rat(1), &rat(0)).unwrap(), crate::arith::Rat::from_integer(central));
    }
}

#[test]
fn schur_sign_observation() {
    // Not a theorem: each s_mu(A) seems to be +- a polynomial with
    // nonnegative coefficients. Count how many shapes fit the pattern.
    let mut definite = 0;
    let mut total = 0;
    for n in 1..=8 {
        for mu in enumerate_partitions(n) {
            let s = narayana_schur(&mu).unwrap();
            let coeffs = s.q_coeffs().unwrap();
            let nonneg = coeffs.iter().all(|c| *c >= rat(0));
            let nonpos = coeffs.iter().all(|c| *c <= rat(0));
            total += 1;
            if nonneg || nonpos {
                definite += 1;
            }
        }
    }
    println!("sign-definite Narayana Schur values: {definite}/{total}");
    assert!(total > 0);
}

#[test]
fn table_names() {
    for name in SequenceName::ALL {
        assert_eq!(name.as_str().parse::<SequenceName>().unwrap(), name);
    }
    assert!("fibonacci".parse::<SequenceName>().is_err());
    assert_eq!(SequenceName::SchroederLarge.value(4).unwrap(), PolyQQ::int(90));
}
