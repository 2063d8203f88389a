use std::fmt;
use std::sync::{Arc, Mutex};

use crate::arith::rat;
use crate::error::Result;
use crate::partitions::Partition;
use crate::poly::PolyQQ;
use crate::series::TruncSeries;

use super::jacobi_trudi;

type HFn = dyn Fn(usize) -> PolyQQ + Send + Sync;

/// A formal alphabet given by its complete functions `h_n`, with `h_0 = 1`.
///
/// Values are cached on first use; the cache is observationally pure.
#[derive(Clone)]
pub struct HSequence {
    name: String,
    h: Arc<HFn>,
    cache: Arc<Mutex<Vec<PolyQQ>>>,
}

impl HSequence {
    pub fn new(name: impl Into<String>, h: impl Fn(usize) -> PolyQQ + Send + Sync + 'static) -> Self {
        Self {
            name: name.into(),
            h: Arc::new(h),
            cache: Arc::new(Mutex::new(vec![PolyQQ::one()])),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn h(&self, n: usize) -> PolyQQ {
        let mut cache = self.cache.lock().unwrap_or_else(|e| e.into_inner());
        while cache.len() <= n {
            let next = (self.h)(cache.len());
            cache.push(next);
        }
        cache[n].clone()
    }

    /// `H_u` through `u^order`.
    pub fn series(&self, order: usize) -> TruncSeries {
        TruncSeries::from_fn(order, |k| self.h(k))
    }

    /// `p_1 ..= p_n` from Newton's identity `n h_n = sum_{r<n} h_r p_{n-r}`.
    /// Index 0 of the result is unused and holds zero.
    pub fn power_sums(&self, n: usize) -> Vec<PolyQQ> {
        let mut p = vec![PolyQQ::zero(); n + 1];
        for m in 1..=n {
            let mut acc = self.h(m).scale(&rat(m as i64));
            for r in 1..m {
                acc -= &(&self.h(r) * &p[m - r]);
            }
            p[m] = acc;
        }
        p
    }

    pub fn power_sum(&self, n: usize) -> PolyQQ {
        self.power_sums(n).swap_remove(n)
    }

    /// `s_mu` by Jacobi–Trudi.
    pub fn schur(&self, mu: &Partition) -> Result<PolyQQ> {
        jacobi_trudi(mu, |k| self.h(k))
    }
}

impl fmt::Debug for HSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HSequence({})", self.name)
    }
}
