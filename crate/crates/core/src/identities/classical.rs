//! Generating-function and binomial identities around the closed forms.

use num_bigint::BigInt;

use crate::arith::sign;
use crate::error::Result;
use crate::poly::{one_minus_q, PolyQQ};
use crate::sequences::{catalan, catalan_closed, narayana};

use super::{big, bin, ints, range, Args, Identity, Sides};

pub(super) fn identities() -> Vec<Identity> {
    vec![
        Identity {
            id: "gf-quadratic",
            description: "coefficient of u^n in q u C^2 + (u(1 - q) - 1) C + 1 vanishes",
            schedule: |ctx| range("n", 0, ctx.max_n),
            eval: gf_quadratic,
        },
        Identity {
            id: "vanishing-sum",
            description: "sum_m (-1)^m C(r+1, m) C(2r-m, r) = 0",
            schedule: |ctx| range("r", 1, ctx.max_n),
            eval: vanishing_sum,
        },
        Identity {
            id: "partial-sum",
            description: "sum_{m>k} (-1)^(m-1) C(r+1, m) C(2r-m, r) = (-1)^k C(r-1, k) C(2r-k, r)",
            schedule: |ctx| {
                (1..=ctx.max_n as i64)
                    .flat_map(|r| (0..=r).map(move |k| ints(&[("r", r), ("k", k)])))
                    .collect()
            },
            eval: partial_sum,
        },
        Identity {
            id: "interesting",
            description: "sum_i (-1)^(n-i) C(n+i, 2i) C(i+1, m+1) C_i = C(m+n, 2m) C_m",
            schedule: pairs_below,
            eval: interesting,
        },
        Identity {
            id: "chu-vandermonde-variant",
            description: "sum_i (-1)^(n-i) C(n+i, i-m) C(n, i) = C(n, m)",
            schedule: pairs_below,
            eval: chu_vandermonde_variant,
        },
        Identity {
            id: "catalan-ratio",
            description: "(r + 2) C_{r+1} = 2 (2r + 1) C_r",
            schedule: |ctx| range("r", 0, ctx.max_n),
            eval: catalan_ratio,
        },
        Identity {
            id: "touchard",
            description: "C_r = sum_m 2^(r-2m-1) C(r-1, 2m) C_m",
            schedule: |ctx| range("r", 1, ctx.max_n),
            eval: touchard,
        },
    ]
}

fn pairs_below(ctx: &super::ScheduleCtx) -> Vec<super::Params> {
    (0..=ctx.max_n as i64)
        .flat_map(|n| (0..=n).map(move |m| ints(&[("m", m), ("n", n)])))
        .collect()
}

fn gf_quadratic(a: &Args) -> Result<Sides> {
    let n = a.nat("n", 0, 200)?;
    let mut lhs = if n == 0 { PolyQQ::one() } else { PolyQQ::zero() };
    lhs -= &narayana(n);
    if n >= 1 {
        let conv: PolyQQ = (0..n).map(|i| &narayana(i) * &narayana(n - 1 - i)).sum();
        lhs += &(&PolyQQ::q() * &conv);
        lhs += &(&one_minus_q() * &narayana(n - 1));
    }
    Ok((lhs, PolyQQ::zero()))
}

fn vanishing_sum(a: &Args) -> Result<Sides> {
    let r = a.int("r", 1, 400)?;
    let lhs: BigInt = (0..=r).map(|m| bin(r + 1, m) * bin(2 * r - m, r) * sign(m)).sum();
    Ok((big(lhs), PolyQQ::zero()))
}

fn partial_sum(a: &Args) -> Result<Sides> {
    let r = a.int("r", 1, 400)?;
    let k = a.int("k", 0, r)?;
    let lhs: BigInt = (k + 1..=r)
        .map(|m| bin(r + 1, m) * bin(2 * r - m, r) * sign(m - 1))
        .sum();
    let rhs = bin(r - 1, k) * bin(2 * r - k, r) * sign(k);
    Ok((big(lhs), big(rhs)))
}

fn interesting(a: &Args) -> Result<Sides> {
    let n = a.int("n", 0, 400)?;
    let m = a.int("m", 0, n)?;
    let lhs: BigInt = (m..=n)
        .map(|i| bin(n + i, 2 * i) * bin(i + 1, m + 1) * catalan_closed(i as usize) * sign(n - i))
        .sum();
    let rhs = bin(m + n, 2 * m) * catalan_closed(m as usize);
    Ok((big(lhs), big(rhs)))
}

fn chu_vandermonde_variant(a: &Args) -> Result<Sides> {
    let n = a.int("n", 0, 400)?;
    let m = a.int("m", 0, n)?;
    let lhs: BigInt = (m..=n).map(|i| bin(n + i, i - m) * bin(n, i) * sign(n - i)).sum();
    Ok((big(lhs), big(bin(n, m))))
}

fn catalan_ratio(a: &Args) -> Result<Sides> {
    let r = a.nat("r", 0, 400)?;
    let lhs = catalan(r + 1) * BigInt::from(r + 2);
    let rhs = catalan(r) * BigInt::from(2 * (2 * r + 1));
    Ok((big(lhs), big(rhs)))
}

fn touchard(a: &Args) -> Result<Sides> {
    let r = a.int("r", 1, 400)?;
    let rhs: BigInt = (0..=(r - 1) / 2)
        .map(|m| (BigInt::from(1) << (r - 2 * m - 1) as usize) * bin(r - 1, 2 * m) * catalan_closed(m as usize))
        .sum();
    Ok((big(catalan(r as usize)), big(rhs)))
}
