//! Jacobi-polynomial bridges, type-B Narayana polynomials and the word
//! statistic for the principal specialization.

use crate::arith::{rat, Rat};
use crate::error::Result;
use crate::lambda::{hall_littlewood_principal, strinc_oracle, STRINC_CAP};
use crate::poly::{one_minus_q, PolyQQ};
use crate::sequences::{jacobi11, narayana, type_b_w};

use super::{bin, chain, ints, range, Args, Identity, Sides};

pub(super) fn identities() -> Vec<Identity> {
    vec![
        Identity {
            id: "jacobi-bridge",
            description: "C_n(x) = (x-1)^(n-1)/n P_(n-1)^(1,1)((x+1)/(x-1)) at n+1 points x",
            schedule: |ctx| {
                (1..=ctx.max_n as i64)
                    .flat_map(|n| (2..=n + 2).map(move |x| ints(&[("n", n), ("x", x)])))
                    .collect()
            },
            eval: jacobi_bridge,
        },
        Identity {
            id: "hl-jacobi",
            description: "n P_n(1^(n+1); q) = (n+1) (-q)^(n-1) P_(n-1)^(1,1)(1 - 2/q)",
            schedule: |ctx| range("n", 1, ctx.max_n),
            eval: hl_jacobi,
        },
        Identity {
            id: "jacobi-binomial",
            description: "sum_m C(n-1, m) C(2n-m, n) (-q)^m = sum_m C(n+1, m+1) C(n-1, m) (1-q)^m",
            schedule: |ctx| range("n", 1, ctx.max_n),
            eval: jacobi_binomial,
        },
        Identity {
            id: "typeB-central",
            description: "W_r(z) = sum_m z^m (z+1)^(r-2m) C(r, 2m) C(2m, m)",
            schedule: |ctx| range("r", 0, ctx.max_n),
            eval: type_b_central,
        },
        Identity {
            id: "strinc",
            description: "sum over weakly increasing words of (1-q)^strinc = P_n(1^(n+1); q) = (n+1) C_n(1-q)",
            schedule: |ctx| range("n", 1, ctx.max_n.min(STRINC_CAP)),
            eval: strinc,
        },
    ]
}

fn jacobi_bridge(a: &Args) -> Result<Sides> {
    let n = a.int("n", 1, 40)?;
    let x = a.rat("x")?;
    if x == rat(1) {
        return Err(a.out("x must differ from 1".into()));
    }
    let lhs = narayana(n as usize).eval(&x, &rat(0))?;
    let x_minus_1 = &x - rat(1);
    let arg = (&x + rat(1)) / &x_minus_1;
    let jac = jacobi11((n - 1) as usize).eval(&arg, &rat(0))?;
    let rhs = num_traits::pow(x_minus_1, (n - 1) as usize) / rat(n) * jac;
    Ok((PolyQQ::constant(lhs), PolyQQ::constant(rhs)))
}

fn hl_jacobi(a: &Args) -> Result<Sides> {
    let n = a.int("n", 1, 30)?;
    let lhs = hall_littlewood_principal(n as usize, n as usize + 1)?.scale_int(n);
    let arg = &PolyQQ::one() - &PolyQQ::monomial(rat(2), -1, 0);
    let jac = jacobi11((n - 1) as usize).subst_q(&arg)?;
    let prefactor = PolyQQ::from_q_coeffs(&[0, -1]).pow((n - 1) as u32).scale_int(n + 1);
    Ok((lhs, &prefactor * &jac))
}

fn jacobi_binomial(a: &Args) -> Result<Sides> {
    let n = a.int("n", 1, 60)?;
    let minus_q = PolyQQ::from_q_coeffs(&[0, -1]);
    let lhs: PolyQQ = (0..n)
        .map(|m| minus_q.pow(m as u32).scale(&Rat::from_integer(bin(n - 1, m) * bin(2 * n - m, n))))
        .sum();
    let rhs: PolyQQ = (0..n)
        .map(|m| one_minus_q().pow(m as u32).scale(&Rat::from_integer(bin(n + 1, m + 1) * bin(n - 1, m))))
        .sum();
    Ok((lhs, rhs))
}

fn type_b_central(a: &Args) -> Result<Sides> {
    let r = a.int("r", 0, 60)?;
    let z_plus_1 = PolyQQ::from_q_coeffs(&[1, 1]);
    let rhs: PolyQQ = (0..=r / 2)
        .map(|m| {
            let c = bin(r, 2 * m) * bin(2 * m, m);
            (&PolyQQ::q().pow(m as u32) * &z_plus_1.pow((r - 2 * m) as u32)).scale(&Rat::from_integer(c))
        })
        .sum();
    Ok((type_b_w(r as usize), rhs))
}

fn strinc(a: &Args) -> Result<Sides> {
    let n = a.nat("n", 1, STRINC_CAP)?;
    let narayana_side = narayana(n).subst_q(&one_minus_q())?.scale_int(n as i64 + 1);
    Ok(chain(vec![
        strinc_oracle(n)?,
        hall_littlewood_principal(n, n + 1)?,
        narayana_side,
    ]))
}
