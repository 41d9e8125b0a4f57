//! Monomials as exponent vectors over a fixed ambient variable set, with the
//! colon/gcd/lcm arithmetic and the priority-driven lex and revlex comparators
//! used everywhere else in the crate.

use std::cmp::Ordering;
use std::fmt;

use crate::error::Error;

/// The ambient polynomial ring, reduced to what the combinatorics needs:
/// an ordered list of distinct variable names. Coefficients never appear.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    var_names: Vec<String>,
}

impl Ring {
    /// Build a ring from display names. Names must be nonempty, distinct, and
    /// free of `*`, `^`, and whitespace so the text grammar stays unambiguous.
    pub fn new<S: Into<String>>(names: Vec<S>) -> Result<Self, Error> {
        let var_names: Vec<String> = names.into_iter().map(Into::into).collect();
        if var_names.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        for name in &var_names {
            if name.is_empty()
                || name == "1"
                || name.chars().any(|c| c == '*' || c == '^' || c.is_whitespace())
            {
                return Err(Error::InvalidRing(format!("bad variable name {name:?}")));
            }
        }
        let mut seen = std::collections::HashSet::new();
        for name in &var_names {
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidRing(format!("duplicate variable name {name:?}")));
            }
        }
        Ok(Ring { var_names })
    }

    /// The standard ring `x1, ..., xn`.
    pub fn standard(num_vars: usize) -> Self {
        Ring::new((1..=num_vars).map(|i| format!("x{i}")).collect::<Vec<_>>())
            .expect("standard names are always valid")
    }

    pub fn num_vars(&self) -> usize {
        self.var_names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn var_name(&self, index: usize) -> &str {
        &self.var_names[index]
    }

    /// The degree-1 monomial for variable `index`.
    pub fn variable(&self, index: usize) -> Monomial {
        assert!(index < self.num_vars(), "variable index out of range");
        let mut exps = vec![0; self.num_vars()];
        exps[index] = 1;
        Monomial::new(exps)
    }

    /// Render `m` in the text grammar: factors joined by `*`, exponent 1
    /// implicit, the unit monomial as `1`. Example: `x1^2*x3*x5`.
    pub fn format(&self, m: &Monomial) -> String {
        assert_eq!(self.num_vars(), m.num_vars(), "ring mismatch");
        let mut parts = Vec::new();
        for (v, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.var_names[v].clone()),
                _ => parts.push(format!("{}^{e}", self.var_names[v])),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Parse the grammar `name('^' int)?('*' name('^' int)?)*`; `1` is the unit.
    /// Repeated names accumulate.
    pub fn parse(&self, text: &str) -> Result<Monomial, Error> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty monomial".into()));
        }
        if text == "1" {
            return Ok(Monomial::one(self.num_vars()));
        }
        let mut exps = vec![0u32; self.num_vars()];
        for factor in text.split('*') {
            let (name, exp) = match factor.split_once('^') {
                Some((name, pow)) => {
                    let e: u32 = pow
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?;
                    (name, e)
                }
                None => (factor, 1),
            };
            let index = self
                .var_names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
            exps[index] += exp;
        }
        Ok(Monomial::new(exps))
    }
}

/// A monomial, stored as one exponent per ring variable.
///
/// All binary operations require both operands to live in the same ring
/// (same variable count) and panic otherwise; the crate never mixes rings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    /// The unit monomial (all exponents zero).
    pub fn one(num_vars: usize) -> Self {
        Monomial { exponents: vec![0; num_vars] }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exponents[var]
    }

    /// Total degree: the sum of all exponents.
    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// `Some(v)` when the monomial is exactly the variable `x_v`.
    pub fn as_variable(&self) -> Option<usize> {
        let mut found = None;
        for (v, &e) in self.exponents.iter().enumerate() {
            match (e, found) {
                (0, _) => {}
                (1, None) => found = Some(v),
                _ => return None,
            }
        }
        found
    }

    /// Indices of the variables dividing the monomial.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(v, _)| v)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// The colon `self : other`, i.e. `self / gcd(self, other)`:
    /// componentwise `max(a - b, 0)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.num_vars(), other.num_vars(), "ring mismatch");
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        )
    }

    /// True iff `self` divides `other` (componentwise `<=`).
    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.num_vars(), other.num_vars(), "ring mismatch");
        self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.num_vars(), other.num_vars(), "ring mismatch");
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.num_vars(), other.num_vars(), "ring mismatch");
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.num_vars(), other.num_vars(), "ring mismatch");
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a + b)
                .collect(),
        )
    }
}

/// Identity-priority lex comparison (`x1` highest). `Less` means the first
/// argument comes earlier in a generator list: a higher exponent on an
/// earlier variable wins.
pub fn lex_cmp_identity(a: &Monomial, b: &Monomial) -> Ordering {
    debug_assert_eq!(a.num_vars(), b.num_vars());
    for (ea, eb) in a.exponents.iter().zip(&b.exponents) {
        match eb.cmp(ea) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    Ordering::Equal
}

/// A permutation of the ring's variable indices; position 0 carries the
/// highest lex priority.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarPriority {
    order: Vec<usize>,
}

impl VarPriority {
    /// Validate that `order` is a permutation of `0..order.len()`.
    pub fn new(order: Vec<usize>) -> Result<Self, Error> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n || seen[v] {
                return Err(Error::InvalidPriority(n));
            }
            seen[v] = true;
        }
        Ok(VarPriority { order })
    }

    /// The natural priority `x1 > x2 > ... > xn`.
    pub fn identity(num_vars: usize) -> Self {
        VarPriority { order: (0..num_vars).collect() }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn num_vars(&self) -> usize {
        self.order.len()
    }

    /// Lex comparison under this priority. `Less` = earlier in a generator
    /// list; the first variable (in priority order) with differing exponents
    /// decides, and the HIGHER exponent comes earlier.
    pub fn lex_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        assert_eq!(self.order.len(), a.num_vars(), "ring mismatch");
        assert_eq!(self.order.len(), b.num_vars(), "ring mismatch");
        for &v in &self.order {
            match b.exponents[v].cmp(&a.exponents[v]) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// Graded reverse-lex comparison under this priority. Higher total degree
    /// comes earlier; on equal degree the variables are scanned in REVERSE
    /// priority order and the LOWER exponent comes earlier.
    pub fn grevlex_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        assert_eq!(self.order.len(), a.num_vars(), "ring mismatch");
        assert_eq!(self.order.len(), b.num_vars(), "ring mismatch");
        match b.degree().cmp(&a.degree()) {
            Ordering::Equal => {}
            other => return other,
        }
        for &v in self.order.iter().rev() {
            match a.exponents[v].cmp(&b.exponents[v]) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        Ordering::Equal
    }
}

/// Pairs a monomial with its ring for `Display`.
pub struct DisplayIn<'a> {
    pub ring: &'a Ring,
    pub monomial: &'a Monomial,
}

impl fmt::Display for DisplayIn<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.format(self.monomial))
    }
}
