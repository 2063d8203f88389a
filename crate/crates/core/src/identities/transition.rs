//! The transition matrix between large Narayana polynomials in two
//! variables, and its specializations at 1 and 2.

use num_bigint::BigInt;

use crate::arith::Rat;
use crate::error::Result;
use crate::poly::{one_minus_q, PolyQQ};
use crate::sequences::{catalan, large_narayana, schroeder, SchroederKind};

use super::{bin, ints, range, Args, Identity, Sides};

pub(super) fn identities() -> Vec<Identity> {
    vec![
        Identity {
            id: "thm6",
            description: "(n+1) qC_n(q2) = sum_k qC_(n-k)(q) sum_(i+j<=k) (1-q)^i (q2-1)^j C(n-k+i, i) C(n+1, j) C(2k-i-j-1, k-i-j)",
            schedule: |ctx| range("n", 1, ctx.max_n),
            eval: thm6,
        },
        Identity {
            id: "thm6-spec-q1",
            description: "the transition matrix with one variable set to 1 (form 0: q = 1, form 1: q2 = 1)",
            schedule: forms,
            eval: thm6_spec_q1,
        },
        Identity {
            id: "thm6-spec-q2",
            description: "the transition matrix with one variable set to 2 (form 0: q = 2, form 1: q2 = 2)",
            schedule: forms,
            eval: thm6_spec_q2,
        },
    ]
}

fn forms(ctx: &super::ScheduleCtx) -> Vec<super::Params> {
    (1..=ctx.max_n as i64)
        .flat_map(|n| (0..=1).map(move |f| ints(&[("n", n), ("form", f)])))
        .collect()
}

/// `sum_k left(n-k) sum_{i+j<=k} x^i y^j C(n-k+i, i) C(n+1, j) C(2k-i-j-1, k-i-j)`.
fn transition_sum(n: i64, left: impl Fn(usize) -> PolyQQ, x: &PolyQQ, y: &PolyQQ) -> PolyQQ {
    let mut total = PolyQQ::zero();
    for k in 0..=n {
        let mut inner = PolyQQ::zero();
        for i in 0..=k {
            for j in 0..=k - i {
                let c: BigInt = bin(n - k + i, i) * bin(n + 1, j) * bin(2 * k - i - j - 1, k - i - j);
                inner += &(&x.pow(i as u32) * &y.pow(j as u32)).scale(&Rat::from_integer(c));
            }
        }
        total += &(&left((n - k) as usize) * &inner);
    }
    total
}

fn thm6(a: &Args) -> Result<Sides> {
    let n = a.int("n", 1, 40)?;
    let lhs = large_narayana(n as usize).q_to_q2().scale_int(n + 1);
    let q2_minus_1 = &PolyQQ::q2() - &PolyQQ::one();
    Ok((lhs, transition_sum(n, large_narayana, &one_minus_q(), &q2_minus_1)))
}

fn thm6_spec_q1(a: &Args) -> Result<Sides> {
    let n = a.int("n", 1, 40)?;
    let q_minus_1 = PolyQQ::from_q_coeffs(&[-1, 1]);
    if a.nat("form", 0, 1)? == 0 {
        let lhs = large_narayana(n as usize).scale_int(n + 1);
        let cat = |m: usize| PolyQQ::from_big(catalan(m));
        Ok((lhs, transition_sum(n, cat, &PolyQQ::zero(), &q_minus_1)))
    } else {
        let lhs = PolyQQ::from_big(catalan(n as usize) * (n + 1));
        Ok((lhs, transition_sum(n, large_narayana, &one_minus_q(), &PolyQQ::zero())))
    }
}

fn thm6_spec_q2(a: &Args) -> Result<Sides> {
    let n = a.int("n", 1, 40)?;
    let large = |m: usize| PolyQQ::from_big(schroeder(SchroederKind::Large, m));
    if a.nat("form", 0, 1)? == 0 {
        let lhs = large_narayana(n as usize).scale_int(n + 1);
        let q_minus_1 = PolyQQ::from_q_coeffs(&[-1, 1]);
        Ok((lhs, transition_sum(n, large, &PolyQQ::int(-1), &q_minus_1)))
    } else {
        let lhs = large(n as usize).scale_int(n + 1);
        Ok((lhs, transition_sum(n, large_narayana, &one_minus_q(), &PolyQQ::one())))
    }
}
