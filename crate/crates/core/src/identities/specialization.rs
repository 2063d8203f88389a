//! Principal specializations of Hall–Littlewood functions and the power-sum
//! expansions they lead to.

use num_bigint::BigInt;

use crate::arith::{rat, Rat};
use crate::error::Result;
use crate::lambda::{
    h_of, hall_littlewood_closed_form, hall_littlewood_via_series, s_of, Alphabet,
};
use crate::partitions::{composition_multiplicity, enumerate_partitions, z_of, Partition};
use crate::poly::{one_minus_q, PolyQQ};
use crate::sequences::{large_narayana, narayana, schroeder, SchroederKind};
use crate::series::TruncSeries;

use super::{big, bin, ints, range, Args, Identity, Sides};

pub(super) fn identities() -> Vec<Identity> {
    vec![
        Identity {
            id: "thm1",
            description: "(1 - q)^-1 h_r[(1 - q) n] = sum_m (-q)^m C(r-1, m) C(n+r-m-1, r)",
            schedule: |ctx| {
                let n = ctx.max_n as i64;
                (1..=n)
                    .flat_map(|r| (1..=n).map(move |m| ints(&[("r", r), ("n", m)])))
                    .collect()
            },
            eval: thm1,
        },
        Identity {
            id: "thm2",
            description: "(r + 1) C_r(1 - q) = P_r(1^(r+1); q), by series, closed form and partition sum",
            schedule: |ctx| range("r", 1, ctx.max_n),
            eval: thm2,
        },
        Identity {
            id: "pieri-hook",
            description: "s_(a,1^b)[c] + s_(a+1,1^(b-1))[c] = C(a+c-1, a) C(c, b)",
            schedule: |ctx| {
                let mut out = Vec::new();
                for a in 1..=ctx.max_n.min(5) as i64 {
                    for b in 1..=(ctx.max_n - 1).min(4) as i64 {
                        for c in [-2, 1, 2, 3, 5] {
                            out.push(ints(&[("a", a), ("b", b), ("c", c)]));
                        }
                    }
                }
                out
            },
            eval: pieri_hook,
        },
        Identity {
            id: "new-formula",
            description: "q C_r(q) = sum_mu z_mu^-1 (r+1)^(l-1) prod_i (1 - (1-q)^i)^m_i",
            schedule: |ctx| range("r", 1, ctx.max_n),
            eval: new_formula,
        },
        Identity {
            id: "odd-parts-schroeder",
            description: "C_r(2) = sum over odd-part mu of z_mu^-1 (2r+2)^(l-1)",
            schedule: |ctx| range("r", 1, ctx.max_n),
            eval: odd_parts_schroeder,
        },
        Identity {
            id: "lagrange-thm2",
            description: "Lagrange involution at q - 1 with q rank 1: h*_r = q' C_r(q') at q' = 1 - q (form 0), and (r+1) h*_r = h_r[-(r+1)(q-1)] (form 1)",
            schedule: |ctx| {
                (0..=ctx.max_n as i64)
                    .flat_map(|r| (0..=1).map(move |f| ints(&[("r", r), ("form", f)])))
                    .collect()
            },
            eval: lagrange_thm2,
        },
    ]
}

fn thm1(a: &Args) -> Result<Sides> {
    let r = a.nat("r", 1, 60)?;
    let n = a.nat("n", 1, 60)?;
    Ok((hall_littlewood_via_series(r, n)?, hall_littlewood_closed_form(r, n)?))
}

/// `sum_{|mu|=r} (1-q)^(l-1) C(r+1, l) l! / prod m_i!`.
fn partition_sum(r: usize) -> PolyQQ {
    enumerate_partitions(r as u32)
        .iter()
        .map(|mu| {
            let l = mu.len();
            let c = bin(r as i64 + 1, l as i64) * composition_multiplicity(mu);
            one_minus_q().pow(l as u32 - 1).scale(&Rat::from_integer(c))
        })
        .sum()
}

fn thm2(a: &Args) -> Result<Sides> {
    let r = a.nat("r", 1, 40)?;
    let lhs = narayana(r).subst_q(&one_minus_q())?.scale_int(r as i64 + 1);
    Ok(super::chain(vec![
        lhs,
        hall_littlewood_via_series(r, r + 1)?,
        hall_littlewood_closed_form(r, r + 1)?,
        partition_sum(r),
    ]))
}

fn pieri_hook(a: &Args) -> Result<Sides> {
    let arm = a.int("a", 1, 11)?;
    let leg = a.int("b", 1, 11 - arm + 1)?;
    let c = a.int("c", -50, 50)?;
    let point = Alphabet::constant(c);
    let first = s_of(&Partition::hook(arm as u32, leg as usize), &point)?;
    let second = s_of(&Partition::hook(arm as u32 + 1, leg as usize - 1), &point)?;
    let rhs = bin(arm + c - 1, arm) * bin(c, leg);
    Ok((&first + &second, big(rhs)))
}

fn power_term(mu: &Partition, weight_base: i64, factor: impl Fn(u32) -> PolyQQ) -> PolyQQ {
    let mut term = PolyQQ::constant(Rat::new(
        BigInt::from(weight_base).pow(mu.len() as u32 - 1),
        z_of(mu),
    ));
    for &(part, mult) in &mu.multiplicities() {
        term = &term * &factor(part).pow(mult as u32);
    }
    term
}

fn new_formula(a: &Args) -> Result<Sides> {
    let r = a.nat("r", 1, 25)?;
    let rhs: PolyQQ = enumerate_partitions(r as u32)
        .iter()
        .map(|mu| power_term(mu, r as i64 + 1, |i| &PolyQQ::one() - &one_minus_q().pow(i)))
        .sum();
    Ok((large_narayana(r), rhs))
}

fn odd_parts_schroeder(a: &Args) -> Result<Sides> {
    let r = a.nat("r", 1, 40)?;
    let rhs: PolyQQ = enumerate_partitions(r as u32)
        .iter()
        .filter(|mu| mu.all_parts_odd())
        .map(|mu| power_term(mu, 2 * r as i64 + 2, |_| PolyQQ::one()))
        .sum();
    Ok((big(schroeder(SchroederKind::Small, r)), rhs))
}

/// `h*_r[A]` from the reversion of `t H_t[A]`.
fn lagrange_dual(r: usize, point: &Alphabet) -> Result<PolyQQ> {
    let order = r + 1;
    let f: TruncSeries = point.h_series(order).shift_up(1);
    Ok(f.reverse()?.coeff(r + 1).clone())
}

fn lagrange_thm2(a: &Args) -> Result<Sides> {
    let r = a.nat("r", 0, 30)?;
    let form = a.nat("form", 0, 1)?;
    let point = &Alphabet::q() - &Alphabet::constant(1);
    let dual = lagrange_dual(r, &point)?;
    if form == 0 {
        Ok((dual, large_narayana(r).subst_q(&one_minus_q())?))
    } else {
        let scaled = point.scale(&rat(-(r as i64) - 1));
        Ok((dual.scale_int(r as i64 + 1), h_of(r, &scaled)))
    }
}
