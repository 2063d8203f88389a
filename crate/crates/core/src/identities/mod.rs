//! A registry of identities about Narayana polynomials and the λ-ring
//! calculus, each with a parameter schedule and an exact evaluator for both
//! sides.
//!
//! A passing case means the two sides agree exactly at those parameters.
//! Schedules are finite, so a clean run is evidence, not a proof.

mod alphabet;
mod classical;
mod jacobi;
mod jonah;
mod koshy;
mod specialization;
mod transition;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{gen_binomial, rat, ratio, render_rat, Rat};
use crate::error::{Error, Result};
use crate::lambda::Alphabet;
use crate::poly::PolyQQ;

/// Named parameters of one case.
pub type Params = BTreeMap<String, Rat>;

/// Left- and right-hand sides of one case.
pub type Sides = (PolyQQ, PolyQQ);

pub const SUITE_VERSION: &str = "1";

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20_110_311;

const SCOPE: &str = "exact agreement over a finite parameter schedule; evidence, not proof";

/// Inputs shared by all schedules.
#[derive(Clone, Copy, Debug)]
pub struct ScheduleCtx {
    pub max_n: usize,
    pub seed: u64,
}

pub struct Identity {
    pub id: &'static str,
    pub description: &'static str,
    schedule: fn(&ScheduleCtx) -> Vec<Params>,
    eval: fn(&Args) -> Result<Sides>,
}

impl Identity {
    pub fn schedule(&self, ctx: &ScheduleCtx) -> Vec<Params> {
        (self.schedule)(ctx)
    }

    pub fn eval(&self, params: &Params) -> Result<Sides> {
        (self.eval)(&Args { id: self.id, params })
    }
}

/// Typed access to the parameters of a case. Missing or out-of-range values
/// are reported as [`Error::OutOfSchedule`].
pub struct Args<'a> {
    id: &'static str,
    params: &'a Params,
}

impl Args<'_> {
    fn out(&self, reason: String) -> Error {
        Error::OutOfSchedule {
            id: self.id.to_string(),
            reason,
        }
    }

    pub fn rat(&self, key: &str) -> Result<Rat> {
        self.params
            .get(key)
            .cloned()
            .ok_or_else(|| self.out(format!("missing parameter {key}")))
    }

    pub fn int(&self, key: &str, lo: i64, hi: i64) -> Result<i64> {
        let v = self.rat(key)?;
        let n = (v.is_integer())
            .then(|| v.to_integer().to_i64())
            .flatten()
            .ok_or_else(|| self.out(format!("{key} must be an integer")))?;
        if n < lo || n > hi {
            return Err(self.out(format!("{key} = {n} is outside {lo}..={hi}")));
        }
        Ok(n)
    }

    pub fn nat(&self, key: &str, lo: usize, hi: usize) -> Result<usize> {
        Ok(self.int(key, lo as i64, hi as i64)? as usize)
    }

    pub fn seed(&self) -> Result<u64> {
        let v = self.rat("seed")?;
        (v.is_integer())
            .then(|| v.to_integer().to_u64())
            .flatten()
            .ok_or_else(|| self.out("seed must be a nonnegative 64-bit integer".into()))
    }

    /// Rejects `z` when `z + k = 0` for some `k` in `0..=n`.
    pub fn shift_safe(&self, key: &str, n: usize) -> Result<Rat> {
        let z = self.rat(key)?;
        if (0..=n as i64).any(|k| (&z + rat(k)).is_zero()) {
            return Err(self.out(format!("{key} + k vanishes for some k <= {n}")));
        }
        Ok(z)
    }

    pub fn alphabet(&self, key: &str) -> Result<Alphabet> {
        let i = self.nat(key, 0, ALPHABET_CATALOG.len() - 1)?;
        Ok(catalog_alphabet(i))
    }
}

/// Alphabets addressed by index in the schedules of the lemma identities.
/// `Q` and `Q2` are rank 1 with values `1 - q` and `1 - q2`.
pub const ALPHABET_CATALOG: [&str; 12] = [
    "1", "-1", "2", "-2", "3", "-3", "q", "-q", "1 - Q", "Q - 1", "q + q2", "2*q - Q2",
];

pub fn catalog_alphabet(i: usize) -> Alphabet {
    let q = Alphabet::q();
    let one_minus_big_q = Alphabet::q_via_one_minus_q();
    match i {
        0..=5 => {
            let c = (i as i64 / 2) + 1;
            Alphabet::constant(if i.is_multiple_of(2) { c } else { -c })
        }
        6 => q,
        7 => -&q,
        8 => one_minus_big_q,
        9 => -&one_minus_big_q,
        10 => &q + &Alphabet::q2(),
        11 => &q.scale_int(2) - &Alphabet::big_q2(),
        _ => panic!("alphabet index {i} out of range"),
    }
}

pub(crate) fn ints(pairs: &[(&str, i64)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), rat(*v))).collect()
}

pub(crate) fn with(mut p: Params, key: &str, v: Rat) -> Params {
    p.insert(key.to_string(), v);
    p
}

/// One case per value of `key` in `lo..=hi`.
pub(crate) fn range(key: &str, lo: usize, hi: usize) -> Vec<Params> {
    (lo..=hi).map(|v| ints(&[(key, v as i64)])).collect()
}

/// The rationals used as `z` in the lemma schedules.
pub(crate) fn z_values(with_thirds: bool) -> Vec<Rat> {
    let mut zs = vec![rat(1), rat(2), rat(3), ratio(1, 2)];
    if with_thirds {
        zs.push(ratio(5, 3));
    }
    zs
}

pub(crate) fn bin(a: i64, k: i64) -> BigInt {
    gen_binomial(a, k)
}

pub(crate) fn big(n: BigInt) -> PolyQQ {
    PolyQQ::from_big(n)
}

/// Compares a chain of values that should all be equal. Returns the first
/// and the first one that differs from it, or the first and the last.
pub(crate) fn chain(values: Vec<PolyQQ>) -> Sides {
    let mut it = values.into_iter();
    let first = it.next().unwrap_or_default();
    let mut last = first.clone();
    for v in it {
        if v != first {
            return (first, v);
        }
        last = v;
    }
    (first, last)
}

pub fn registry() -> &'static [Identity] {
    static REGISTRY: OnceLock<Vec<Identity>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut all = Vec::new();
        all.extend(classical::identities());
        all.extend(specialization::identities());
        all.extend(koshy::identities());
        all.extend(jonah::identities());
        all.extend(transition::identities());
        all.extend(alphabet::identities());
        all.extend(jacobi::identities());
        all
    })
}

pub fn find_identity(id: &str) -> Result<&'static Identity> {
    registry()
        .iter()
        .find(|i| i.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCase {
    pub id: String,
    pub params: Params,
    pub lhs: PolyQQ,
    pub rhs: PolyQQ,
    pub status: Status,
}

/// Evaluates one case exactly.
pub fn check_identity(id: &str, params: &Params) -> Result<IdentityCase> {
    let identity = find_identity(id)?;
    let (lhs, rhs) = identity.eval(params)?;
    let status = if lhs == rhs { Status::Pass } else { Status::Fail };
    Ok(IdentityCase {
        id: identity.id.to_string(),
        params: params.clone(),
        lhs,
        rhs,
        status,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub id: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite_version: String,
    pub seed: u64,
    pub max_n: usize,
    pub scope: String,
    pub results: Vec<CaseReport>,
    pub counts: Counts,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counts.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn param_json(v: &Rat) -> serde_json::Value {
    match v.is_integer().then(|| v.to_integer().to_i64()).flatten() {
        Some(n) => serde_json::Value::from(n),
        None => serde_json::Value::from(render_rat(v)),
    }
}

fn run_case(identity: &Identity, params: Params) -> (String, Params, CaseReport) {
    let (status, lhs, rhs, error) = match identity.eval(&params) {
        Ok((l, r)) if l == r => (Status::Pass, None, None, None),
        Ok((l, r)) => (Status::Fail, Some(l.to_string()), Some(r.to_string()), None),
        Err(e) => (Status::Fail, None, None, Some(e.to_string())),
    };
    let report = CaseReport {
        id: identity.id.to_string(),
        params: params.iter().map(|(k, v)| (k.clone(), param_json(v))).collect(),
        status,
        lhs,
        rhs,
        error,
    };
    (identity.id.to_string(), params, report)
}

/// Runs the selected identities (all when `ids` is `None`) over their
/// schedules, evaluating at most `jobs` cases at once. Results are ordered
/// by id, then parameters, so the report does not depend on `jobs`.
pub fn run_suite(ids: Option<&[String]>, max_n: usize, seed: u64, jobs: usize) -> Result<SuiteReport> {
    if max_n < 3 {
        return Err(Error::InvalidArgument(format!("max_n must be at least 3, got {max_n}")));
    }
    let selected: Vec<&Identity> = match ids {
        None => registry().iter().collect(),
        Some(ids) => ids.iter().map(|id| find_identity(id)).collect::<Result<_>>()?,
    };
    let ctx = ScheduleCtx { max_n, seed };
    let mut tasks = Vec::new();
    for identity in selected {
        for params in identity.schedule(&ctx) {
            tasks.push((identity, params));
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    let mut cases: Vec<_> = pool.install(|| {
        tasks
            .into_par_iter()
            .map(|(identity, params)| run_case(identity, params))
            .collect()
    });
    cases.sort_by(|a, b| match a.0.cmp(&b.0) {
        Ordering::Equal => a.1.cmp(&b.1),
        other => other,
    });
    cases.dedup_by(|a, b| a.0 == b.0 && a.1 == b.1);
    let results: Vec<CaseReport> = cases.into_iter().map(|(_, _, r)| r).collect();
    let fail = results.iter().filter(|r| r.status == Status::Fail).count();
    Ok(SuiteReport {
        suite_version: SUITE_VERSION.to_string(),
        seed,
        max_n,
        scope: SCOPE.to_string(),
        counts: Counts {
            pass: results.len() - fail,
            fail,
        },
        results,
    })
}
