//! Integer partitions and the small exhaustive enumerations used by the
//! oracles: subsets of a finite set and weakly increasing words.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::factorial;
use crate::error::{Error, Result};

/// A partition, stored as weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates that the parts are positive and weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Self { parts })
    }

    /// Sorts the given positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The rectangle `rows^cols` read as `cols` parts equal to `rows`:
    /// `rectangle(3, 2)` is `(3, 3)`.
    pub fn rectangle(part: u32, count: usize) -> Self {
        if part == 0 {
            return Self::empty();
        }
        Self {
            parts: vec![part; count],
        }
    }

    /// The hook `(a, 1^b)`.
    pub fn hook(arm: u32, leg: usize) -> Self {
        let mut parts = vec![arm];
        parts.extend(std::iter::repeat_n(1, leg));
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// `(part, multiplicity)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&p| p == 1)
    }

    pub fn all_parts_odd(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of `n` in reverse-lexicographic order, e.g. for `n = 4`:
/// `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

/// [`enumerate_partitions`] restricted by a predicate.
pub fn enumerate_partitions_where(n: u32, keep: impl Fn(&Partition) -> bool) -> Vec<Partition> {
    enumerate_partitions(n).into_iter().filter(|p| keep(p)).collect()
}

fn fill(rest: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=max_part.min(rest)).rev() {
        current.push(part);
        fill(rest - part, part, current, out);
        current.pop();
    }
}

/// `z_mu = prod_i i^{m_i} m_i!`.
pub fn z_of(mu: &Partition) -> BigInt {
    mu.multiplicities()
        .into_iter()
        .fold(BigInt::one(), |acc, (i, m)| {
            acc * num_traits::pow(BigInt::from(i), m) * factorial(m)
        })
}

/// `l(mu)! / prod_i m_i(mu)!`, the number of distinct orderings of the parts.
pub fn composition_multiplicity(mu: &Partition) -> BigInt {
    let denom = mu
        .multiplicities()
        .into_iter()
        .fold(BigInt::one(), |acc, (_, m)| acc * factorial(m));
    factorial(mu.len()) / denom
}

/// All sub-multisets `mu` of `rho`, each paired with its complement `nu`.
pub fn splittings(rho: &Partition) -> Vec<(Partition, Partition)> {
    let mults = rho.multiplicities();
    let mut out = Vec::new();
    let mut choice = vec![0usize; mults.len()];
    loop {
        let mut mu = Vec::new();
        let mut nu = Vec::new();
        for (&(part, m), &k) in mults.iter().zip(&choice) {
            mu.extend(std::iter::repeat_n(part, k));
            nu.extend(std::iter::repeat_n(part, m - k));
        }
        out.push((Partition { parts: mu }, Partition { parts: nu }));
        // odometer
        let mut i = 0;
        loop {
            if i == mults.len() {
                return out;
            }
            if choice[i] < mults[i].1 {
                choice[i] += 1;
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Largest set handed to [`subsets`].
pub const SUBSET_CAP: usize = 12;

/// Every subset of `items` as a list, in binary-counter order.
pub fn subsets<T: Clone>(items: &[T]) -> Result<Vec<Vec<T>>> {
    if items.len() > SUBSET_CAP {
        return Err(Error::CapExceeded {
            what: format!("subset enumeration over {} items", items.len()),
            cap: SUBSET_CAP,
        });
    }
    Ok((0u32..(1 << items.len()))
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect())
}

/// Visits every weakly increasing word of length `len` over `1..=max`.
pub fn for_each_weakly_increasing(len: usize, max: u32, mut visit: impl FnMut(&[u32])) {
    fn rec(word: &mut Vec<u32>, len: usize, lo: u32, max: u32, visit: &mut impl FnMut(&[u32])) {
        if word.len() == len {
            visit(word);
            return;
        }
        for v in lo..=max {
            word.push(v);
            rec(word, len, v, max, visit);
            word.pop();
        }
    }
    let mut word = Vec::with_capacity(len);
    rec(&mut word, len, 1, max, &mut visit);
}
