//! The vanishing λ-ring sum, its partition and subset forms, and the
//! Koshy-type recurrences it implies.

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{factorial, rat, rat_binomial, sign, Rat};
use crate::error::Result;
use crate::lambda::h_of;
use crate::partitions::{composition_multiplicity, enumerate_partitions, splittings, SUBSET_CAP};
use crate::poly::{one_minus_q, PolyQQ};
use crate::sequences::{catalan, narayana, schroeder, SchroederKind};

use super::{big, bin, ints, range, with, z_values, Args, Identity, Params, ScheduleCtx, Sides, ALPHABET_CATALOG};

pub(super) fn identities() -> Vec<Identity> {
    vec![
        Identity {
            id: "lemma2",
            description: "sum_k (z+k)^-1 h_k[-(z+k)A] h_(n-k)[(z+k)A] = 0",
            schedule: lemma2_schedule,
            eval: lemma2,
        },
        Identity {
            id: "rot",
            description: "the vanishing sum over splittings of a partition rho (weight w, index i)",
            schedule: |ctx| {
                let mut out = Vec::new();
                for w in 1..=ctx.max_n.min(8) {
                    for i in 0..enumerate_partitions(w as u32).len() {
                        for z in z_values(true) {
                            out.push(with(ints(&[("w", w as i64), ("i", i as i64)]), "z", z));
                        }
                    }
                }
                out
            },
            eval: rot,
        },
        Identity {
            id: "lemma3-a",
            description: "sum_A (-1)^(n-|A|) prod_(i<=n) (sum A + y_i) = n! prod x_i, random integers",
            schedule: lemma3_schedule,
            eval: lemma3_a,
        },
        Identity {
            id: "lemma3-b",
            description: "sum_A (-1)^(n-|A|) prod_(i<n) (sum A + y_i) = 0, random integers",
            schedule: lemma3_schedule,
            eval: lemma3_b,
        },
        Identity {
            id: "rothe",
            description: "sum_k x/(x-k) C(x-k, k) C(y+k, n-k) = C(x+y, n) at y = -x",
            schedule: |ctx| {
                let mut out = Vec::new();
                for n in 0..=ctx.max_n as i64 {
                    for x in [rat(-3), rat(-1), crate::arith::ratio(1, 2), rat(n + 1), rat(n + 2)] {
                        out.push(with(ints(&[("n", n)]), "x", x));
                    }
                }
                out
            },
            eval: rothe,
        },
        Identity {
            id: "koshy",
            description: "C_n = sum_k (-1)^(k-1) C(n-k+1, k) C_(n-k)",
            schedule: |ctx| range("n", 1, ctx.max_n),
            eval: koshy,
        },
        Identity {
            id: "thm3",
            description: "C_n(q) = (1-q)^(n-1) + q sum_k C_(n-k)(q) sum_m (-1)^m C(k-1, m) C(n-m, k) (1-q)^(k-m-1)",
            schedule: |ctx| range("n", 1, ctx.max_n),
            eval: thm3,
        },
        Identity {
            id: "thm3-schroeder",
            description: "s_n = (-1)^(n-1) + 2 sum_k (-1)^(k-1) s_(n-k) sum_m C(k-1, m) C(n-m, k)",
            schedule: |ctx| range("n", 1, ctx.max_n),
            eval: thm3_schroeder,
        },
    ]
}

fn lemma2_schedule(ctx: &ScheduleCtx) -> Vec<Params> {
    let mut out = Vec::new();
    for z in z_values(false) {
        for n in 1..=ctx.max_n.min(10) as i64 {
            for a in 0..ALPHABET_CATALOG.len() as i64 {
                out.push(with(ints(&[("n", n), ("a", a)]), "z", z.clone()));
            }
        }
    }
    out
}

fn lemma2(a: &Args) -> Result<Sides> {
    let n = a.nat("n", 1, 12)?;
    let z = a.shift_safe("z", n)?;
    let point = a.alphabet("a")?;
    let mut lhs = PolyQQ::zero();
    for k in 0..=n {
        let zk = &z + rat(k as i64);
        let left = h_of(k, &point.scale(&-&zk));
        let right = h_of(n - k, &point.scale(&zk));
        lhs += &(&left * &right).scale(&zk.recip());
    }
    Ok((lhs, PolyQQ::zero()))
}

fn rot(a: &Args) -> Result<Sides> {
    let w = a.nat("w", 1, 10)?;
    let partitions = enumerate_partitions(w as u32);
    let i = a.nat("i", 0, partitions.len() - 1)?;
    let z = a.shift_safe("z", w)?;
    let mut lhs = Rat::from_integer(BigInt::from(0));
    for (mu, nu) in splittings(&partitions[i]) {
        let zm = &z + rat(mu.weight() as i64);
        let weight = Rat::from_integer(composition_multiplicity(&mu) * composition_multiplicity(&nu));
        let term = weight
            * rat_binomial(&-&zm, mu.len() as i64)
            * rat_binomial(&zm, nu.len() as i64)
            / &zm;
        lhs += term;
    }
    Ok((PolyQQ::constant(lhs), PolyQQ::zero()))
}

fn lemma3_schedule(ctx: &ScheduleCtx) -> Vec<Params> {
    let mut out = Vec::new();
    for n in 1..=ctx.max_n.min(SUBSET_CAP) as i64 {
        for trial in 0..3 {
            out.push(with(ints(&[("n", n), ("trial", trial)]), "seed", Rat::from_integer(ctx.seed.into())));
        }
    }
    out
}

/// Draws `x` and `y` in `-9..=9` from a stream determined by the seed, `n`
/// and the trial number.
fn draw(seed: u64, n: usize, trial: usize) -> (Vec<i64>, Vec<i64>) {
    let stream = seed
        .wrapping_mul(0x9e37_79b9_7f4a_7c15)
        .wrapping_add((n as u64) << 32 | trial as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(stream);
    let x = (0..n).map(|_| rng.gen_range(-9..=9)).collect();
    let y = (0..n).map(|_| rng.gen_range(-9..=9)).collect();
    (x, y)
}

/// `sum_A (-1)^(n-|A|) prod_{i<len} (sum A + y_i)` over subsets `A` of `x`.
fn signed_subset_sum(x: &[i64], y: &[i64], len: usize) -> BigInt {
    let n = x.len();
    let mut total = BigInt::from(0);
    for mask in 0u32..(1 << n) {
        let sum: i64 = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| x[i]).sum();
        let prod = y[..len].iter().fold(BigInt::one(), |acc, yi| acc * (sum + yi));
        total += prod * sign(n as i64 - mask.count_ones() as i64);
    }
    total
}

fn lemma3_args(a: &Args) -> Result<(Vec<i64>, Vec<i64>)> {
    let n = a.nat("n", 1, SUBSET_CAP)?;
    let trial = a.nat("trial", 0, 99)?;
    Ok(draw(a.seed()?, n, trial))
}

fn lemma3_a(a: &Args) -> Result<Sides> {
    let (x, y) = lemma3_args(a)?;
    let n = x.len();
    let lhs = signed_subset_sum(&x, &y, n);
    let rhs = x.iter().fold(factorial(n), |acc, xi| acc * xi);
    Ok((big(lhs), big(rhs)))
}

fn lemma3_b(a: &Args) -> Result<Sides> {
    let (x, y) = lemma3_args(a)?;
    let n = x.len();
    Ok((big(signed_subset_sum(&x, &y, n - 1)), PolyQQ::zero()))
}

fn rothe(a: &Args) -> Result<Sides> {
    let n = a.int("n", 0, 100)?;
    let x = a.rat("x")?;
    if (0..=n).any(|k| x == rat(k)) {
        return Err(a.out(format!("x must avoid 0..={n}")));
    }
    let y = -&x;
    let mut lhs = Rat::from_integer(BigInt::from(0));
    for k in 0..=n {
        let xk = &x - rat(k);
        lhs += &x / &xk * rat_binomial(&xk, k) * rat_binomial(&(&y + rat(k)), n - k);
    }
    let rhs = rat_binomial(&(&x + &y), n);
    Ok((PolyQQ::constant(lhs), PolyQQ::constant(rhs)))
}

fn koshy(a: &Args) -> Result<Sides> {
    let n = a.int("n", 1, 400)?;
    let rhs: BigInt = (1..=n)
        .map(|k| bin(n - k + 1, k) * catalan((n - k) as usize) * sign(k - 1))
        .sum();
    Ok((big(catalan(n as usize)), big(rhs)))
}

fn thm3(a: &Args) -> Result<Sides> {
    let n = a.int("n", 1, 60)?;
    let base = one_minus_q();
    let mut rhs = base.pow(n as u32 - 1);
    for k in 1..n {
        let inner: PolyQQ = (0..k)
            .map(|m| {
                base.pow((k - m - 1) as u32)
                    .scale(&Rat::from_integer(bin(k - 1, m) * bin(n - m, k) * sign(m)))
            })
            .sum();
        rhs += &(&(&PolyQQ::q() * &narayana((n - k) as usize)) * &inner);
    }
    Ok((narayana(n as usize), rhs))
}

fn thm3_schroeder(a: &Args) -> Result<Sides> {
    let n = a.int("n", 1, 60)?;
    let s = |i: i64| schroeder(SchroederKind::Small, i as usize);
    let mut rhs = BigInt::from(sign(n - 1));
    for k in 1..n {
        let inner: BigInt = (0..k).map(|m| bin(k - 1, m) * bin(n - m, k)).sum();
        rhs += BigInt::from(2 * sign(k - 1)) * s(n - k) * inner;
    }
    Ok((big(s(n)), big(rhs)))
}
