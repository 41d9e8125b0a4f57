//! Linear-quotients verification: decide whether an ordered generator list is
//! a linear-quotients ordering, produce per-index certificates or a refutation
//! with the offending colon ideal, and derive graded Betti numbers from a
//! verified ordering via the mapping-cone count.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::ideal::minimalize;
use crate::monomial::{Monomial, Ring};

/// Proof that an ordering has linear quotients: for each index `i >= 2`
/// (1-based), the variables generating `(m_1, ..., m_{i-1}) : (m_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LqCertificate {
    ordering: Vec<Monomial>,
    per_index: Vec<Vec<usize>>,
}

impl LqCertificate {
    pub fn ordering(&self) -> &[Monomial] {
        &self.ordering
    }

    /// Entry `t` holds the sorted variable indices of `V_{m_{t+2}}`
    /// (1-based generator index `t + 2`).
    pub fn per_index(&self) -> &[Vec<usize>] {
        &self.per_index
    }

    /// `r_2 ... r_r`: the variable count at each index past the first.
    pub fn var_counts(&self) -> Vec<usize> {
        self.per_index.iter().map(|v| v.len()).collect()
    }
}

/// Refutation: the first 1-based index whose colon ideal is not generated by
/// variables, with its minimal generators and the non-linear witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LqFailure {
    pub index: usize,
    pub colon_gens: Vec<Monomial>,
    pub witnesses: Vec<Monomial>,
}

/// Result of checking one ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LqOutcome {
    Quotients(LqCertificate),
    Failure(LqFailure),
}

impl LqOutcome {
    pub fn is_linear_quotients(&self) -> bool {
        matches!(self, LqOutcome::Quotients(_))
    }

    pub fn certificate(&self) -> Option<&LqCertificate> {
        match self {
            LqOutcome::Quotients(c) => Some(c),
            LqOutcome::Failure(_) => None,
        }
    }

    pub fn failure(&self) -> Option<&LqFailure> {
        match self {
            LqOutcome::Quotients(_) => None,
            LqOutcome::Failure(f) => Some(f),
        }
    }
}

/// The first pair `(j, i)` (1-based, `j < i`) violating the pairwise
/// criterion, minimal in `i` then `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairViolation {
    pub j: usize,
    pub i: usize,
}

fn check_minimal_list(gens: &[Monomial]) -> Result<(), Error> {
    if let Some(first) = gens.first() {
        let n = first.num_vars();
        if let Some(bad) = gens.iter().find(|g| g.num_vars() != n) {
            return Err(Error::RingMismatch { expected: n, found: bad.num_vars() });
        }
    }
    for (i, a) in gens.iter().enumerate() {
        for (j, b) in gens.iter().enumerate() {
            if i == j {
                continue;
            }
            if a == b {
                return Err(Error::NotMinimal(format!(
                    "entries {} and {} are equal",
                    i + 1,
                    j + 1
                )));
            }
            if a.divides(b) {
                return Err(Error::NotMinimal(format!(
                    "entry {} divides entry {}",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(())
}

enum ColonStep {
    Linear(Vec<usize>),
    NonLinear { colon_gens: Vec<Monomial>, witnesses: Vec<Monomial> },
}

/// Decide whether a colon list generates an ideal of variables: every entry
/// must be a variable or divisible by a variable entry. On success returns
/// the sorted variable set (the minimal generators).
pub(crate) fn variables_only(colons: &[Monomial], num_vars: usize) -> Option<Vec<usize>> {
    let mut present = vec![false; num_vars];
    for c in colons {
        if let Some(v) = c.as_variable() {
            present[v] = true;
        }
    }
    let linear = colons
        .iter()
        .all(|c| c.as_variable().is_some() || c.support().any(|v| present[v]));
    if linear {
        Some((0..num_vars).filter(|&v| present[v]).collect())
    } else {
        None
    }
}

/// One quotient step: the colon of the prefix ideal by `m`, reported either
/// as its variable set or as its full minimal generators on failure.
fn colon_step(prefix: &[Monomial], m: &Monomial, num_vars: usize) -> ColonStep {
    let colons: Vec<Monomial> = prefix.iter().map(|g| g.colon(m)).collect();
    match variables_only(&colons, num_vars) {
        Some(vars) => ColonStep::Linear(vars),
        None => {
            let colon_gens = minimalize(&colons);
            let witnesses =
                colon_gens.iter().filter(|g| g.degree() >= 2).cloned().collect();
            ColonStep::NonLinear { colon_gens, witnesses }
        }
    }
}

/// Check whether `gens`, in the given order, is a linear-quotients ordering.
///
/// The input must be a minimal generating set (no duplicates, no generator
/// dividing another). Index 1 always passes; on failure the FIRST failing
/// 1-based index is reported.
pub fn verify_ordering(gens: &[Monomial]) -> Result<LqOutcome, Error> {
    check_minimal_list(gens)?;
    let num_vars = gens.first().map_or(0, Monomial::num_vars);
    let mut per_index = Vec::with_capacity(gens.len().saturating_sub(1));
    for i in 1..gens.len() {
        match colon_step(&gens[..i], &gens[i], num_vars) {
            ColonStep::Linear(vars) => per_index.push(vars),
            ColonStep::NonLinear { colon_gens, witnesses } => {
                return Ok(LqOutcome::Failure(LqFailure { index: i + 1, colon_gens, witnesses }));
            }
        }
    }
    Ok(LqOutcome::Quotients(LqCertificate { ordering: gens.to_vec(), per_index }))
}

/// Exhaustive variant: every failing index, not just the first.
pub fn all_failures(gens: &[Monomial]) -> Result<Vec<LqFailure>, Error> {
    check_minimal_list(gens)?;
    let num_vars = gens.first().map_or(0, Monomial::num_vars);
    let mut failures = Vec::new();
    for i in 1..gens.len() {
        if let ColonStep::NonLinear { colon_gens, witnesses } =
            colon_step(&gens[..i], &gens[i], num_vars)
        {
            failures.push(LqFailure { index: i + 1, colon_gens, witnesses });
        }
    }
    Ok(failures)
}

/// Pairwise criterion: for every `j < i`, `m_j : m_i` is a variable or some
/// earlier colon `m_k : m_i` is a variable dividing it. Returns `None` when
/// the ordering passes. Agrees with [`verify_ordering`] on every input.
pub fn verify_pairwise(gens: &[Monomial]) -> Result<Option<PairViolation>, Error> {
    check_minimal_list(gens)?;
    let num_vars = gens.first().map_or(0, Monomial::num_vars);
    // Index checks are independent; the reduction keeps the result
    // schedule-independent (minimal i, then minimal j).
    let violation = (1..gens.len())
        .into_par_iter()
        .filter_map(|i| {
            let m = &gens[i];
            let colons: Vec<Monomial> = gens[..i].iter().map(|g| g.colon(m)).collect();
            let mut present = vec![false; num_vars];
            for c in &colons {
                if let Some(v) = c.as_variable() {
                    present[v] = true;
                }
            }
            colons
                .iter()
                .position(|c| c.as_variable().is_none() && !c.support().any(|v| present[v]))
                .map(|j| PairViolation { j: j + 1, i: i + 1 })
        })
        .min_by_key(|v| (v.i, v.j));
    Ok(violation)
}

/// Graded Betti numbers of an ideal with linear quotients, generated in a
/// single degree `d`: nonzero only at `beta_{i, i+d}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    degree: u32,
    rows: Vec<u64>,
}

impl BettiTable {
    /// The common degree of the generators.
    pub fn generator_degree(&self) -> u32 {
        self.degree
    }

    /// `rows()[i]` is `beta_{i, i + d}`.
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn beta(&self, i: usize, j: usize) -> u64 {
        if j != i + self.degree as usize {
            return 0;
        }
        self.rows.get(i).copied().unwrap_or(0)
    }

    /// Largest homological index with a nonzero entry.
    pub fn max_index(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:>4} {:>4} {:>12}", "i", "j", "beta")?;
        for (i, &b) in self.rows.iter().enumerate() {
            writeln!(f, "{:>4} {:>4} {:>12}", i, i + self.degree as usize, b)?;
        }
        Ok(())
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc * (n - t) as u128 / (t + 1) as u128;
    }
    acc
}

/// `beta_{i, i+d} = sum_t C(r_t, i)` where `r_t` counts the variables in the
/// `t`-th colon ideal (`r_1 = 0`); in particular `beta_0` is the generator
/// count. Requires equigenerated input.
pub fn betti_from_lq(cert: &LqCertificate) -> Result<BettiTable, Error> {
    let Some(first) = cert.ordering.first() else {
        return Ok(BettiTable { degree: 0, rows: Vec::new() });
    };
    let degree = first.degree();
    if cert.ordering.iter().any(|g| g.degree() != degree) {
        return Err(Error::MixedDegrees);
    }
    let mut counts: Vec<usize> = vec![0];
    counts.extend(cert.per_index.iter().map(|v| v.len()));
    let max_r = counts.iter().copied().max().unwrap_or(0);
    let mut rows = Vec::with_capacity(max_r + 1);
    for i in 0..=max_r {
        let total: u128 = counts.iter().map(|&r| binomial(r, i)).sum();
        rows.push(u64::try_from(total).expect("Betti number exceeds u64"));
    }
    Ok(BettiTable { degree, rows })
}

/// JSON document for a certificate or failure, as emitted by the CLI.
#[derive(Debug, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    pub colon: Vec<String>,
    pub witnesses: Vec<String>,
    pub per_index_var_counts: Vec<usize>,
    pub ring: Vec<String>,
    pub ordering: Vec<String>,
}

impl CertificateDoc {
    pub fn from_outcome(ring: &Ring, gens: &[Monomial], outcome: &LqOutcome) -> Self {
        let fmt_all = |ms: &[Monomial]| ms.iter().map(|m| ring.format(m)).collect();
        match outcome {
            LqOutcome::Quotients(cert) => CertificateDoc {
                ok: true,
                index: None,
                colon: Vec::new(),
                witnesses: Vec::new(),
                per_index_var_counts: cert.var_counts(),
                ring: ring.var_names().to_vec(),
                ordering: fmt_all(gens),
            },
            LqOutcome::Failure(fail) => CertificateDoc {
                ok: false,
                index: Some(fail.index),
                colon: fmt_all(&fail.colon_gens),
                witnesses: fmt_all(&fail.witnesses),
                per_index_var_counts: Vec::new(),
                ring: ring.var_names().to_vec(),
                ordering: fmt_all(gens),
            },
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serialization cannot fail")
    }

    pub fn from_json_str(text: &str) -> Result<Self, Error> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Recover the ring and ordered monomial list.
    pub fn parse_ordering(&self) -> Result<(Ring, Vec<Monomial>), Error> {
        let ring = Ring::new(self.ring.clone())?;
        let gens = self
            .ordering
            .iter()
            .map(|s| ring.parse(s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok((ring, gens))
    }
}

/// Parse an ordering file: a header `ring: name1 name2 ...` followed by one
/// monomial per line in the text grammar. Blank lines and `#` comments are
/// skipped.
pub fn parse_ordering_file(text: &str) -> Result<(Ring, Vec<Monomial>), Error> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Parse("empty ordering file".into()))?;
    let names = header
        .strip_prefix("ring:")
        .ok_or_else(|| Error::Parse("missing `ring:` header".into()))?;
    let ring = Ring::new(names.split_whitespace().map(str::to_string).collect::<Vec<_>>())?;
    let gens = lines.map(|l| ring.parse(l)).collect::<Result<Vec<_>, _>>()?;
    Ok((ring, gens))
}

/// Render an ordering in the file format accepted by [`parse_ordering_file`].
pub fn format_ordering_file(ring: &Ring, gens: &[Monomial]) -> String {
    let mut out = format!("ring: {}\n", ring.var_names().join(" "));
    for g in gens {
        out.push_str(&ring.format(g));
        out.push('\n');
    }
    out
}
