//! The two explicit linear-quotients orderings: lex on antipath powers via the
//! closed-form generator enumeration, and the seven-stage ordering of the
//! anticycle square. Also the embedded six-vertex lex/revlex counterexample
//! fixtures used for regression checks.

use std::collections::HashSet;
use std::fmt;

use crate::error::Error;
use crate::graph::AnticycleLabeling;
use crate::lq::LqFailure;
use crate::monomial::{lex_cmp_identity, Monomial, Ring, VarPriority};

/// Stage of the anticycle-square ordering a generator belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StageTag {
    S1,
    S2a,
    S2b,
    S2c,
    S2d,
    S3a,
    S3b,
}

impl StageTag {
    pub const ALL: [StageTag; 7] = [
        StageTag::S1,
        StageTag::S2a,
        StageTag::S2b,
        StageTag::S2c,
        StageTag::S2d,
        StageTag::S3a,
        StageTag::S3b,
    ];
}

impl fmt::Display for StageTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StageTag::S1 => "1",
            StageTag::S2a => "2a",
            StageTag::S2b => "2b",
            StageTag::S2c => "2c",
            StageTag::S2d => "2d",
            StageTag::S3a => "3a",
            StageTag::S3b => "3b",
        };
        write!(f, "({s})")
    }
}

/// All index tuples `(i_1..i_k, j_1..j_k)` with `i_1 <= ... <= i_k <= j_1 <=
/// ... <= j_k` and `i_r + 2 <= j_r`, over 1-based path positions `1..=n`.
/// Each tuple is returned flattened; distinct tuples give distinct monomials.
fn antipath_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn extend_j(
        n: usize,
        k: usize,
        is: &[usize],
        js: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if js.len() == k {
            let mut tuple = is.to_vec();
            tuple.extend_from_slice(js);
            out.push(tuple);
            return;
        }
        let r = js.len();
        let lower = js.last().copied().unwrap_or(is[k - 1]).max(is[r] + 2);
        for j in lower..=n {
            js.push(j);
            extend_j(n, k, is, js, out);
            js.pop();
        }
    }
    fn extend_i(n: usize, k: usize, is: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if is.len() == k {
            extend_j(n, k, is, &mut Vec::new(), out);
            return;
        }
        let lower = is.last().copied().unwrap_or(1);
        for i in lower..=n {
            is.push(i);
            extend_i(n, k, is, out);
            is.pop();
        }
    }
    let mut out = Vec::new();
    if k > 0 {
        extend_i(n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Closed-form minimal generators of the `k`-th power of the antipath edge
/// ideal on `n` vertices, in lex order with identity priority. The set equals
/// the brute-force power and the order has linear quotients.
pub fn antipath_power_generators(n: usize, k: u32) -> Result<Vec<Monomial>, Error> {
    if n < 3 {
        return Err(Error::Graph(format!("antipath on {n} vertices has no edges")));
    }
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    let mut seen = HashSet::new();
    let mut gens = Vec::new();
    for tuple in antipath_tuples(n, k as usize) {
        let mut exps = vec![0u32; n];
        for p in tuple {
            exps[p - 1] += 1; // 1-based position -> 0-based variable
        }
        let m = Monomial::new(exps);
        if seen.insert(m.clone()) {
            gens.push(m);
        }
    }
    gens.sort_by(lex_cmp_identity);
    Ok(gens)
}

/// The staged ordering of the minimal generators of the anticycle square,
/// over the labeled ring `x, z1, y1..yn, z2` (anticycle on `n + 3` vertices).
#[derive(Debug, Clone)]
pub struct AnticycleSquareOrdering {
    labeling: AnticycleLabeling,
    entries: Vec<(StageTag, Monomial)>,
}

impl AnticycleSquareOrdering {
    pub fn labeling(&self) -> &AnticycleLabeling {
        &self.labeling
    }

    pub fn ring(&self) -> Ring {
        self.labeling.ring()
    }

    pub fn entries(&self) -> &[(StageTag, Monomial)] {
        &self.entries
    }

    pub fn monomials(&self) -> Vec<Monomial> {
        self.entries.iter().map(|(_, m)| m.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn stage_size(&self, tag: StageTag) -> usize {
        self.entries.iter().filter(|(t, _)| *t == tag).count()
    }
}

/// Build the seven-stage ordering for the anticycle on `n + 3` vertices
/// (`n >= 2`). Stages, in order:
///
/// - (1) generators away from `x` (the antipath square on `z1, y1..yn, z2`),
///   lex with priority `z1, y1, ..., yn, z2`;
/// - (2a) `x*z1*yi*z2` for `i` ascending;
/// - (2b) `x*yi*yj*z2`, `i <= j`, `(i,j) != (n,n)`, ascending on `(i, j)`;
/// - (2c) `x*yi*yj*z1`, `i <= j`, `(i,j) != (1,1)`, by `j` then `i` descending;
/// - (2d) `x*yi*yj*yk`, `i <= j <= k`, `i + 2 <= k`, ascending on `(i, j, k)`;
/// - (3a) `x^2*yi*yj`, `i <= j`, `(i,j) != (1,1)`, ascending on `(i, j)`;
/// - (3b) the single generator `x^2*y1^2`.
pub fn anticycle_square_ordering(n: usize) -> Result<AnticycleSquareOrdering, Error> {
    let labeling = AnticycleLabeling::new(n)?;
    let num_vars = labeling.num_vertices();
    let mono = |factors: &[usize]| {
        let mut exps = vec![0u32; num_vars];
        for &v in factors {
            exps[v] += 1;
        }
        Monomial::new(exps)
    };
    let x = labeling.x();
    let z1 = labeling.z1();
    let z2 = labeling.z2();
    let y = |i: usize| labeling.y(i);

    let mut entries: Vec<(StageTag, Monomial)> = Vec::new();

    // Stage (1): path positions 1..=n+2 are exactly the ring indices of
    // z1, y1, ..., yn, z2.
    let mut stage1: Vec<Monomial> = antipath_tuples(n + 2, 2)
        .into_iter()
        .map(|tuple| {
            let mut exps = vec![0u32; num_vars];
            for p in tuple {
                exps[p] += 1;
            }
            Monomial::new(exps)
        })
        .collect();
    let priority = VarPriority::new((1..=n + 2).chain([0]).collect())?;
    stage1.sort_by(|a, b| priority.lex_cmp(a, b));
    stage1.dedup();
    entries.extend(stage1.into_iter().map(|m| (StageTag::S1, m)));

    for i in 1..=n {
        entries.push((StageTag::S2a, mono(&[x, z1, y(i), z2])));
    }
    for i in 1..=n {
        for j in i..=n {
            if (i, j) != (n, n) {
                entries.push((StageTag::S2b, mono(&[x, y(i), y(j), z2])));
            }
        }
    }
    for j in (1..=n).rev() {
        for i in (1..=j).rev() {
            if (i, j) != (1, 1) {
                entries.push((StageTag::S2c, mono(&[x, y(i), y(j), z1])));
            }
        }
    }
    for i in 1..=n {
        for j in i..=n {
            for k in j..=n {
                if i + 2 <= k {
                    entries.push((StageTag::S2d, mono(&[x, y(i), y(j), y(k)])));
                }
            }
        }
    }
    for i in 1..=n {
        for j in i..=n {
            if (i, j) != (1, 1) {
                entries.push((StageTag::S3a, mono(&[x, x, y(i), y(j)])));
            }
        }
    }
    entries.push((StageTag::S3b, mono(&[x, x, y(1), y(1)])));

    Ok(AnticycleSquareOrdering { labeling, entries })
}

/// Tag a minimal generator of the anticycle square by its stage, reading the
/// exponents of `x`, `z1` and `z2`. Rejects monomials that are not products
/// of two anticycle edges.
pub fn classify_stage(m: &Monomial, labeling: &AnticycleLabeling) -> Result<StageTag, Error> {
    let graph = labeling.graph();
    let num_vars = labeling.num_vertices();
    if m.num_vars() != num_vars {
        return Err(Error::RingMismatch { expected: num_vars, found: m.num_vars() });
    }
    let edge_monos: HashSet<Monomial> = graph
        .edges()
        .map(|(u, v)| {
            let mut exps = vec![0u32; num_vars];
            exps[u] = 1;
            exps[v] = 1;
            Monomial::new(exps)
        })
        .collect();
    let is_generator = m.degree() == 4
        && edge_monos
            .iter()
            .any(|e| e.divides(m) && edge_monos.contains(&m.colon(e)));
    if !is_generator {
        return Err(Error::NotASquareGenerator);
    }

    let x_deg = m.exponent(labeling.x());
    let has_z1 = m.exponent(labeling.z1()) > 0;
    let has_z2 = m.exponent(labeling.z2()) > 0;
    let tag = match x_deg {
        0 => StageTag::S1,
        1 => match (has_z1, has_z2) {
            (true, true) => StageTag::S2a,
            (false, true) => StageTag::S2b,
            (true, false) => StageTag::S2c,
            (false, false) => StageTag::S2d,
        },
        _ => {
            let mut s3b = vec![0u32; num_vars];
            s3b[labeling.x()] = 2;
            s3b[labeling.y(1)] = 2;
            if m == &Monomial::new(s3b) {
                StageTag::S3b
            } else {
                StageTag::S3a
            }
        }
    };
    Ok(tag)
}

/// Which of the two six-vertex regression orderings to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureKind {
    Lex,
    Revlex,
}

/// An embedded ordered generator list together with the failure it is known
/// to produce.
#[derive(Debug, Clone)]
pub struct CounterexampleFixture {
    pub ring: Ring,
    pub ordering: Vec<Monomial>,
    pub expected: LqFailure,
}

// The two orderings of the 42 minimal generators of the squared edge ideal of
// the six-vertex anticycle. Embedded verbatim as data (not regenerated) so a
// comparator bug cannot mask a regression.
const LEX_FIXTURE: [&str; 42] = [
    "x1^2*x3^2", "x1^2*x3*x4", "x1^2*x3*x5", "x1^2*x4^2", "x1^2*x4*x5", "x1^2*x5^2",
    "x1*x2*x3*x4", "x1*x2*x3*x5", "x1*x2*x3*x6", "x1*x2*x4^2", "x1*x2*x4*x5", "x1*x2*x4*x6",
    "x1*x2*x5^2", "x1*x2*x5*x6", "x1*x3^2*x5", "x1*x3^2*x6", "x1*x3*x4*x5", "x1*x3*x4*x6",
    "x1*x3*x5^2", "x1*x3*x5*x6", "x1*x4^2*x6", "x1*x4*x5*x6", "x2^2*x4^2", "x2^2*x4*x5",
    "x2^2*x4*x6", "x2^2*x5^2", "x2^2*x5*x6", "x2^2*x6^2", "x2*x3*x4*x5", "x2*x3*x4*x6",
    "x2*x3*x5^2", "x2*x3*x5*x6", "x2*x3*x6^2", "x2*x4^2*x6", "x2*x4*x5*x6", "x2*x4*x6^2",
    "x3^2*x5^2", "x3^2*x5*x6", "x3^2*x6^2", "x3*x4*x5*x6", "x3*x4*x6^2", "x4^2*x6^2",
];

const REVLEX_FIXTURE: [&str; 42] = [
    "x1^2*x3^2", "x1^2*x3*x4", "x1*x2*x3*x4", "x1^2*x4^2", "x1*x2*x4^2", "x2^2*x4^2",
    "x1^2*x3*x5", "x1*x2*x3*x5", "x1*x3^2*x5", "x1^2*x4*x5", "x1*x2*x4*x5", "x2^2*x4*x5",
    "x1*x3*x4*x5", "x2*x3*x4*x5", "x1^2*x5^2", "x1*x2*x5^2", "x2^2*x5^2", "x1*x3*x5^2",
    "x2*x3*x5^2", "x3^2*x5^2", "x1*x2*x3*x6", "x1*x3^2*x6", "x1*x2*x4*x6", "x2^2*x4*x6",
    "x1*x3*x4*x6", "x2*x3*x4*x6", "x1*x4^2*x6", "x2*x4^2*x6", "x1*x2*x5*x6", "x2^2*x5*x6",
    "x1*x3*x5*x6", "x2*x3*x5*x6", "x3^2*x5*x6", "x1*x4*x5*x6", "x2*x4*x5*x6", "x3*x4*x5*x6",
    "x2^2*x6^2", "x2*x3*x6^2", "x3^2*x6^2", "x2*x4*x6^2", "x3*x4*x6^2", "x4^2*x6^2",
];

/// The six-vertex lex/revlex regression fixture: the ordering that is known
/// to fail and the exact first failure it must produce (index 9 for lex,
/// 21 for revlex, colon `(x1*x3, x4, x5)` with witness `x1*x3` in both).
pub fn counterexample_fixture(kind: FixtureKind) -> CounterexampleFixture {
    let ring = Ring::standard(6);
    let (list, index): (&[&str], usize) = match kind {
        FixtureKind::Lex => (&LEX_FIXTURE, 9),
        FixtureKind::Revlex => (&REVLEX_FIXTURE, 21),
    };
    let ordering: Vec<Monomial> = list
        .iter()
        .map(|s| ring.parse(s).expect("fixture entries are valid"))
        .collect();
    let colon_gens: Vec<Monomial> = ["x1*x3", "x4", "x5"]
        .iter()
        .map(|s| ring.parse(s).expect("fixture colon entries are valid"))
        .collect();
    let witnesses = vec![colon_gens[0].clone()];
    CounterexampleFixture {
        ring,
        ordering,
        expected: LqFailure { index, colon_gens, witnesses },
    }
}

/// Check that a monomial sorts its index multiset into the interleaved
/// edge-tuple shape: ascending `a_1..a_2k` with `a_r + 2 <= a_{k+r}`.
pub fn factors_as_interleaved_edges(m: &Monomial, k: u32) -> bool {
    let k = k as usize;
    let mut indices = Vec::new();
    for (v, &e) in m.exponents().iter().enumerate() {
        for _ in 0..e {
            indices.push(v + 1); // back to 1-based positions
        }
    }
    if indices.len() != 2 * k {
        return false;
    }
    indices.sort_unstable();
    (0..k).all(|r| indices[r] + 2 <= indices[k + r])
}
