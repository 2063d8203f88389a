//! The inhomogeneous λ-ring sum and the Jonah-type identities.

use num_bigint::BigInt;

use crate::arith::{rat, sign, Rat};
use crate::error::Result;
use crate::lambda::h_of;
use crate::poly::{one_minus_q, PolyQQ};
use crate::sequences::{catalan, large_narayana, narayana, schroeder, SchroederKind};

use super::{big, bin, ints, with, Args, Identity, Params, ScheduleCtx, Sides, ALPHABET_CATALOG};

/// Catalog indices used for `B`.
const B_CHOICES: [i64; 4] = [3, 6, 8, 10];

/// Largest `n` or `r` accepted by the Jonah-type evaluators.
const JONAH_CAP: i64 = 80;

pub(super) fn identities() -> Vec<Identity> {
    vec![
        Identity {
            id: "lemma4",
            description: "sum_k z/(z+k) h_k[-(z+k)A] h_(n-k)[(z+k)A + B] = h_n[B]",
            schedule: lemma4_schedule,
            eval: lemma4,
        },
        Identity {
            id: "jonah",
            description: "sum_k C(n-2k, r-k) C_k = C(n+1, r)",
            schedule: n_r_grid,
            eval: jonah,
        },
        Identity {
            id: "thm4",
            description: "C_r(q) + q sum_k C_(r-k)(q) sum_m (q-1)^m C(k-1, m) C(n-2r+2k-m, k) = sum_m (q-1)^m C(r-1, m) C(n-m, r-1)",
            schedule: n_r_grid,
            eval: thm4,
        },
        Identity {
            id: "jonah-alt",
            description: "sum_(k>=1) C(n-2k, r-k) C_k = C(n, r-1)",
            schedule: n_r_grid,
            eval: jonah_alt,
        },
        Identity {
            id: "thm4-schroeder",
            description: "s_r + 2 sum_k s_(r-k) sum_m C(k-1, m) C(n-2r+2k-m, k) = sum_m C(r-1, m) C(n-m, r-1)",
            schedule: n_r_grid,
            eval: thm4_schroeder,
        },
        Identity {
            id: "thm5",
            description: "sum_k qC_k(q) sum_m (1-q)^m C(n-2k-m, r-k-m) C(k+m, m) = C(n+1, r)",
            schedule: n_r_grid,
            eval: thm5,
        },
        Identity {
            id: "thm5-schroeder",
            description: "sum_k R_k sum_m (-1)^m C(n-2k-m, r-k-m) C(k+m, m) = C(n+1, r)",
            schedule: n_r_grid,
            eval: thm5_schroeder,
        },
    ]
}

fn lemma4_schedule(ctx: &ScheduleCtx) -> Vec<Params> {
    let mut out = Vec::new();
    for z in [rat(1), rat(2), crate::arith::ratio(1, 2)] {
        for n in 1..=ctx.max_n.min(8) as i64 {
            for a in 0..ALPHABET_CATALOG.len() as i64 {
                for b in B_CHOICES {
                    out.push(with(ints(&[("n", n), ("a", a), ("b", b)]), "z", z.clone()));
                }
            }
        }
    }
    out
}

fn lemma4(a: &Args) -> Result<Sides> {
    let n = a.nat("n", 1, 12)?;
    let z = a.shift_safe("z", n)?;
    let big_a = a.alphabet("a")?;
    let big_b = a.alphabet("b")?;
    let mut lhs = PolyQQ::zero();
    for k in 0..=n {
        let zk = &z + rat(k as i64);
        let left = h_of(k, &big_a.scale(&-&zk));
        let right = h_of(n - k, &(&big_a.scale(&zk) + &big_b));
        lhs += &(&left * &right).scale(&(&z / &zk));
    }
    Ok((lhs, h_of(n, &big_b)))
}

/// `n` in `0..=max_n + 2`, `r` in `1..=max_n`.
fn n_r_grid(ctx: &ScheduleCtx) -> Vec<Params> {
    let m = ctx.max_n as i64;
    (0..=m + 2)
        .flat_map(|n| (1..=m).map(move |r| ints(&[("n", n), ("r", r)])))
        .collect()
}

fn n_r(a: &Args) -> Result<(i64, i64)> {
    Ok((a.int("n", 0, JONAH_CAP)?, a.int("r", 1, JONAH_CAP)?))
}

fn jonah(a: &Args) -> Result<Sides> {
    let (n, r) = n_r(a)?;
    let lhs: BigInt = (0..=r).map(|k| bin(n - 2 * k, r - k) * catalan(k as usize)).sum();
    Ok((big(lhs), big(bin(n + 1, r))))
}

fn jonah_alt(a: &Args) -> Result<Sides> {
    let (n, r) = n_r(a)?;
    let lhs: BigInt = (1..=r).map(|k| bin(n - 2 * k, r - k) * catalan(k as usize)).sum();
    Ok((big(lhs), big(bin(n, r - 1))))
}

fn scaled(p: &PolyQQ, c: BigInt) -> PolyQQ {
    p.scale(&Rat::from_integer(c))
}

fn thm4(a: &Args) -> Result<Sides> {
    let (n, r) = n_r(a)?;
    let q_minus_1 = PolyQQ::from_q_coeffs(&[-1, 1]);
    let mut lhs = narayana(r as usize);
    for k in 1..r {
        let inner: PolyQQ = (0..k)
            .map(|m| scaled(&q_minus_1.pow(m as u32), bin(k - 1, m) * bin(n - 2 * r + 2 * k - m, k)))
            .sum();
        lhs += &(&(&PolyQQ::q() * &narayana((r - k) as usize)) * &inner);
    }
    let rhs: PolyQQ = (0..r)
        .map(|m| scaled(&q_minus_1.pow(m as u32), bin(r - 1, m) * bin(n - m, r - 1)))
        .sum();
    Ok((lhs, rhs))
}

fn thm4_schroeder(a: &Args) -> Result<Sides> {
    let (n, r) = n_r(a)?;
    let s = |i: i64| schroeder(SchroederKind::Small, i as usize);
    let mut lhs = s(r);
    for k in 1..r {
        let inner: BigInt = (0..k).map(|m| bin(k - 1, m) * bin(n - 2 * r + 2 * k - m, k)).sum();
        lhs += BigInt::from(2) * s(r - k) * inner;
    }
    let rhs: BigInt = (0..r).map(|m| bin(r - 1, m) * bin(n - m, r - 1)).sum();
    Ok((big(lhs), big(rhs)))
}

fn thm5(a: &Args) -> Result<Sides> {
    let (n, r) = n_r(a)?;
    let base = one_minus_q();
    let mut lhs = PolyQQ::zero();
    for k in 0..=r {
        let inner: PolyQQ = (0..=r - k)
            .map(|m| scaled(&base.pow(m as u32), bin(n - 2 * k - m, r - k - m) * bin(k + m, m)))
            .sum();
        lhs += &(&large_narayana(k as usize) * &inner);
    }
    Ok((lhs, big(bin(n + 1, r))))
}

fn thm5_schroeder(a: &Args) -> Result<Sides> {
    let (n, r) = n_r(a)?;
    let mut lhs = BigInt::from(0);
    for k in 0..=r {
        let inner: BigInt = (0..=r - k)
            .map(|m| bin(n - 2 * k - m, r - k - m) * bin(k + m, m) * sign(m))
            .sum();
        lhs += schroeder(SchroederKind::Large, k as usize) * inner;
    }
    Ok((big(lhs), big(bin(n + 1, r))))
}
