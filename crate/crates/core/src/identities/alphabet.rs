//! Identities for the Narayana and Catalan alphabets.

use crate::arith::{rat, Rat};
use crate::error::Result;
use crate::lambda::{h_of, sfraction, Alphabet};
use crate::partitions::{enumerate_partitions, Partition};
use crate::poly::PolyQQ;
use crate::sequences::{catalan_alphabet, narayana_alphabet, narayana_power_sum, narayana_schur};

use super::{big, bin, chain, ints, range, Args, Identity, Sides};

pub(super) fn identities() -> Vec<Identity> {
    vec![
        Identity {
            id: "thm7",
            description: "s_(k^k)(A) = s_((k-1)^k)(A) = (-q)^(k(k-1)/2) (shape 0: k^k, shape 1: (k-1)^k)",
            schedule: |ctx| {
                (1..=ctx.max_n.min(6) as i64)
                    .flat_map(|k| (0..=1).map(move |s| ints(&[("k", k), ("shape", s)])))
                    .collect()
            },
            eval: thm7,
        },
        Identity {
            id: "cf-alternating",
            description: "the S-fraction coefficients of the Narayana series alternate 1, q",
            schedule: |ctx| {
                let depth = ctx.max_n.min(20) as i64;
                (0..depth).map(|i| ints(&[("depth", depth), ("index", i)])).collect()
            },
            eval: cf_alternating,
        },
        Identity {
            id: "thm8",
            description: "p_r(A) by Newton's identity = sum_k C(r-1, k) C(r, k) q^k",
            schedule: |ctx| range("r", 1, ctx.max_n),
            eval: thm8,
        },
        Identity {
            id: "pa1-central",
            description: "p_r(A_1) = C(2r-1, r-1)",
            schedule: |ctx| range("r", 1, ctx.max_n),
            eval: pa1_central,
        },
        Identity {
            id: "newton-catalan",
            description: "n/(n+1) C(2n, n) = sum_r (r+1)^-1 h_r[r+1] h_(n-r-1)[n-r+1] = h_(n-1)[n+2] = C(2n, n-1)",
            schedule: |ctx| range("n", 1, ctx.max_n),
            eval: newton_catalan,
        },
        Identity {
            id: "schur-table-6",
            description: "s_mu(A) for the partitions of 6, against the published table",
            schedule: |_| range("index", 0, 10),
            eval: schur_table_6,
        },
    ]
}

fn thm7(a: &Args) -> Result<Sides> {
    let k = a.nat("k", 1, 6)?;
    let shape = a.nat("shape", 0, 1)?;
    let mu = Partition::rectangle((k - shape) as u32, k);
    let binom = (k * (k - 1) / 2) as u32;
    let expected = PolyQQ::from_q_coeffs(&[0, -1]).pow(binom);
    Ok((narayana_schur(&mu)?, expected))
}

fn cf_alternating(a: &Args) -> Result<Sides> {
    let depth = a.nat("depth", 1, 20)?;
    let index = a.nat("index", 0, depth - 1)?;
    let coeffs = sfraction(&narayana_alphabet(), depth)?;
    let expected = if index % 2 == 0 { PolyQQ::one() } else { PolyQQ::q() };
    Ok((coeffs[index].clone(), expected))
}

fn thm8(a: &Args) -> Result<Sides> {
    let r = a.nat("r", 1, 40)?;
    Ok((narayana_alphabet().power_sum(r), narayana_power_sum(r)?))
}

fn pa1_central(a: &Args) -> Result<Sides> {
    let r = a.int("r", 1, 60)?;
    Ok((catalan_alphabet().power_sum(r as usize), big(bin(2 * r - 1, r - 1))))
}

fn newton_catalan(a: &Args) -> Result<Sides> {
    let n = a.int("n", 1, 60)?;
    let first = PolyQQ::constant(Rat::new(bin(2 * n, n) * n, (n + 1).into()));
    let middle: PolyQQ = (0..n)
        .map(|r| {
            let hr = h_of(r as usize, &Alphabet::constant(r + 1));
            let rest = h_of((n - r - 1) as usize, &Alphabet::constant(n - r + 1));
            (&hr * &rest).scale(&Rat::new(1.into(), (r + 1).into()))
        })
        .sum();
    let collapsed = h_of((n - 1) as usize, &Alphabet::constant(n + 2));
    Ok(chain(vec![first, middle, collapsed, big(bin(2 * n, n - 1))]))
}

/// Signed coefficients of `s_mu(A)` for the partitions of 6 in
/// reverse-lexicographic order, ascending in `q`.
const SCHUR_TABLE_6: [(i64, [i64; 6]); 11] = [
    (1, [1, 15, 50, 50, 15, 1]),
    (-1, [0, 5, 30, 40, 14, 1]),
    (-1, [0, 3, 8, 3, 0, 0]),
    (1, [0, 4, 24, 34, 13, 1]),
    (-1, [0, 1, 1, 1, 0, 0]),
    (1, [0, 2, 7, 4, 0, 0]),
    (-1, [0, 3, 20, 30, 12, 1]),
    (-1, [0, 0, 0, 1, 0, 0]),
    (-1, [0, 1, 5, 3, 0, 0]),
    (1, [0, 2, 16, 26, 11, 1]),
    (-1, [0, 1, 10, 20, 10, 1]),
];

fn schur_table_6(a: &Args) -> Result<Sides> {
    let index = a.nat("index", 0, 10)?;
    let mu = &enumerate_partitions(6)[index];
    let (sign, coeffs) = SCHUR_TABLE_6[index];
    let expected = PolyQQ::from_q_coeffs(&coeffs).scale(&rat(sign));
    Ok((narayana_schur(mu)?, expected))
}
