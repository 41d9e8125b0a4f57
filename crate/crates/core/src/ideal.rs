//! Monomial ideals as minimal generating sets, with powers, colon ideals and
//! JSON serialization. Generators are kept deduplicated, divisibility-minimal
//! and sorted in identity-priority lex order so all output is deterministic.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::monomial::{lex_cmp_identity, Monomial, Ring};

/// A monomial ideal, represented by its unique minimal generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

/// Drop duplicates and every monomial strictly divisible by another; the
/// survivors are returned in canonical (identity lex) order.
pub fn minimalize(monomials: &[Monomial]) -> Vec<Monomial> {
    let distinct: HashSet<&Monomial> = monomials.iter().collect();
    let mut by_degree: Vec<&Monomial> = distinct.into_iter().collect();
    by_degree.sort_by_key(|m| m.degree());

    // A strict divisor has strictly smaller degree, so each monomial only
    // needs checking against the lower-degree survivors.
    let mut kept: Vec<Monomial> = Vec::new();
    let mut lower_end = 0;
    let mut current_degree = None;
    for m in by_degree {
        if current_degree != Some(m.degree()) {
            current_degree = Some(m.degree());
            lower_end = kept.len();
        }
        if !kept[..lower_end].iter().any(|g| g.divides(m)) {
            kept.push(m.clone());
        }
    }
    kept.sort_by(lex_cmp_identity);
    kept
}

impl MonomialIdeal {
    /// Build an ideal from arbitrary generators; they are minimalized. An
    /// empty list yields the zero ideal.
    pub fn from_generators(ring: Ring, gens: Vec<Monomial>) -> Result<Self, Error> {
        for g in &gens {
            if g.num_vars() != ring.num_vars() {
                return Err(Error::RingMismatch {
                    expected: ring.num_vars(),
                    found: g.num_vars(),
                });
            }
        }
        Ok(MonomialIdeal { gens: minimalize(&gens), ring })
    }

    pub fn zero(ring: Ring) -> Self {
        MonomialIdeal { ring, gens: Vec::new() }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Minimal generators in canonical order.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Monomial membership: some minimal generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// The `k`-th power, computed by iterated products with minimalization
    /// after every round. `k = 0` is rejected (the unit ideal is out of scope).
    pub fn power(&self, k: u32) -> Result<MonomialIdeal, Error> {
        if k == 0 {
            return Err(Error::ZeroPower);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let mut acc = self.gens.clone();
        for _ in 1..k {
            let mut products = Vec::with_capacity(acc.len() * self.gens.len());
            for a in &acc {
                for b in &self.gens {
                    products.push(a.mul(b));
                }
            }
            acc = minimalize(&products);
        }
        Ok(MonomialIdeal { ring: self.ring.clone(), gens: minimalize(&acc) })
    }

    /// The colon ideal `I : (m)`, generated by `{ g : m | g in gens }`.
    /// The colon of the zero ideal is the zero ideal.
    pub fn colon_by_monomial(&self, m: &Monomial) -> Result<MonomialIdeal, Error> {
        if m.num_vars() != self.ring.num_vars() {
            return Err(Error::RingMismatch {
                expected: self.ring.num_vars(),
                found: m.num_vars(),
            });
        }
        let quotients: Vec<Monomial> = self.gens.iter().map(|g| g.colon(m)).collect();
        Ok(MonomialIdeal { ring: self.ring.clone(), gens: minimalize(&quotients) })
    }

    /// Set equality of minimal generating sets. The two ideals must live in
    /// the same ring (same variable names).
    pub fn equals(&self, other: &MonomialIdeal) -> Result<bool, Error> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                expected: self.ring.num_vars(),
                found: other.ring.num_vars(),
            });
        }
        Ok(self.gens == other.gens)
    }

    /// Render the generators in the text grammar, canonical order.
    pub fn format_gens(&self) -> Vec<String> {
        self.gens.iter().map(|g| self.ring.format(g)).collect()
    }

    pub fn to_json_string(&self) -> String {
        let doc = IdealDoc {
            ring: self.ring.var_names().to_vec(),
            gens: self.gens.iter().map(|g| g.exponents().to_vec()).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("ideal serialization cannot fail")
    }

    pub fn from_json_str(text: &str) -> Result<Self, Error> {
        let doc: IdealDoc =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let ring = Ring::new(doc.ring)?;
        let gens = doc.gens.into_iter().map(Monomial::new).collect();
        MonomialIdeal::from_generators(ring, gens)
    }
}

#[derive(Serialize, Deserialize)]
struct IdealDoc {
    ring: Vec<String>,
    gens: Vec<Vec<u32>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;
    use crate::monomial::VarPriority;
    use proptest::prelude::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn anticycle6_square() -> MonomialIdeal {
        SimpleGraph::anticycle(6).unwrap().edge_ideal().power(2).unwrap()
    }

    #[test]
    fn minimalize_drops_strict_multiples() {
        let out = minimalize(&[m(&[1, 0, 1, 0]), m(&[2, 0, 1, 0])]);
        assert_eq!(out, vec![m(&[1, 0, 1, 0])]);
        assert_eq!(minimalize(&[m(&[1, 1])]), vec![m(&[1, 1])]);
        assert!(minimalize(&[]).is_empty());
    }

    #[test]
    fn minimalize_antipath4_edge_products() {
        // all products of two edges of the antipath on 4 vertices
        let edges = [m(&[1, 0, 1, 0]), m(&[1, 0, 0, 1]), m(&[0, 1, 0, 1])];
        let mut products = Vec::new();
        for a in &edges {
            for b in &edges {
                products.push(a.mul(b));
            }
        }
        let out = minimalize(&products);
        let expected = vec![
            m(&[2, 0, 2, 0]),
            m(&[2, 0, 1, 1]),
            m(&[2, 0, 0, 2]),
            m(&[1, 1, 1, 1]),
            m(&[1, 1, 0, 2]),
            m(&[0, 2, 0, 2]),
        ];
        assert_eq!(out, expected);
    }

    #[test]
    fn minimalize_is_idempotent() {
        let input = [m(&[1, 0, 1, 0]), m(&[2, 0, 1, 0]), m(&[0, 1, 0, 1]), m(&[1, 0, 1, 0])];
        let once = minimalize(&input);
        assert_eq!(minimalize(&once), once);
    }

    #[test]
    fn power_one_is_identity() {
        let ring = Ring::standard(4);
        let ideal = MonomialIdeal::from_generators(
            ring,
            vec![m(&[1, 0, 1, 0]), m(&[0, 1, 0, 1])],
        )
        .unwrap();
        assert!(ideal.power(1).unwrap().equals(&ideal).unwrap());
        assert_eq!(ideal.power(0), Err(Error::ZeroPower));
    }

    #[test]
    fn anticycle6_square_has_42_generators() {
        assert_eq!(anticycle6_square().num_gens(), 42);
    }

    #[test]
    fn antipath4_square_matches_edge_products() {
        let square = SimpleGraph::antipath(4).unwrap().edge_ideal().power(2).unwrap();
        assert_eq!(square.num_gens(), 6);
        assert_eq!(square.gens()[0], m(&[2, 0, 2, 0]));
    }

    #[test]
    fn colon_of_first_8_lex_generators() {
        // canonical order of the anticycle-6 square IS the lex order, so the
        // first 8 generators form the ideal coloned at step 9
        let square = anticycle6_square();
        let prefix = MonomialIdeal::from_generators(
            square.ring().clone(),
            square.gens()[..8].to_vec(),
        )
        .unwrap();
        let divisor = square.ring().parse("x1*x2*x3*x6").unwrap();
        let colon = prefix.colon_by_monomial(&divisor).unwrap();
        let expected = MonomialIdeal::from_generators(
            square.ring().clone(),
            vec![
                square.ring().parse("x4").unwrap(),
                square.ring().parse("x5").unwrap(),
                square.ring().parse("x1*x3").unwrap(),
            ],
        )
        .unwrap();
        assert!(colon.equals(&expected).unwrap());
    }

    #[test]
    fn colon_of_first_20_revlex_generators() {
        let square = anticycle6_square();
        let mut revlex = square.gens().to_vec();
        let p = VarPriority::identity(6);
        revlex.sort_by(|a, b| p.grevlex_cmp(a, b));
        let prefix =
            MonomialIdeal::from_generators(square.ring().clone(), revlex[..20].to_vec()).unwrap();
        let divisor = square.ring().parse("x1*x2*x3*x6").unwrap();
        let colon = prefix.colon_by_monomial(&divisor).unwrap();
        assert_eq!(colon.format_gens(), vec!["x1*x3", "x4", "x5"]);
    }

    #[test]
    fn colon_by_unit_is_identity() {
        let ideal = anticycle6_square();
        let unit = Monomial::one(6);
        assert!(ideal.colon_by_monomial(&unit).unwrap().equals(&ideal).unwrap());
    }

    #[test]
    fn colon_of_zero_ideal_is_zero() {
        let zero = MonomialIdeal::zero(Ring::standard(3));
        let colon = zero.colon_by_monomial(&m(&[1, 0, 0])).unwrap();
        assert!(colon.is_zero());
    }

    #[test]
    fn equals_examples() {
        let ring = Ring::standard(4);
        let a = MonomialIdeal::from_generators(ring.clone(), vec![m(&[1, 0, 1, 0])]).unwrap();
        let b = MonomialIdeal::from_generators(ring.clone(), vec![m(&[0, 1, 0, 1])]).unwrap();
        assert!(!a.equals(&b).unwrap());
        assert!(a.equals(&a.clone()).unwrap());
        let other_ring = Ring::new(vec!["a", "b", "c", "d"]).unwrap();
        let c = MonomialIdeal::from_generators(other_ring, vec![m(&[1, 0, 1, 0])]).unwrap();
        assert!(a.equals(&c).is_err());
    }

    #[test]
    fn ring_mismatch_is_rejected() {
        let ideal = MonomialIdeal::from_generators(Ring::standard(3), vec![m(&[1, 1, 0])]).unwrap();
        assert!(ideal.colon_by_monomial(&m(&[1, 0])).is_err());
        assert!(MonomialIdeal::from_generators(Ring::standard(3), vec![m(&[1, 1])]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let ideal = anticycle6_square();
        let text = ideal.to_json_string();
        let back = MonomialIdeal::from_json_str(&text).unwrap();
        assert!(ideal.equals(&back).unwrap());
    }

    #[test]
    fn edge_ideal_powers_are_equigenerated() {
        for n in [4usize, 5, 6] {
            let ideal = SimpleGraph::anticycle(n).unwrap().edge_ideal();
            for k in 1..=3u32 {
                let power = ideal.power(k).unwrap();
                assert!(power.gens().iter().all(|g| g.degree() == 2 * k));
            }
        }
    }

    /// Oracle: recursively strip one edge factor at a time.
    fn factors_into_edges(m: &Monomial, edges: &[Monomial], k: u32) -> bool {
        if k == 0 {
            return m.is_one();
        }
        edges.iter().any(|e| {
            e.divides(m) && factors_into_edges(&m.colon(e), edges, k - 1)
        })
    }

    proptest! {
        /// Every minimal generator of the k-th power of an edge ideal factors
        /// as a product of k edges.
        #[test]
        fn power_generators_factor_into_edges(
            edge_bits in proptest::collection::vec(any::<bool>(), 36),
            k in 1u32..=3,
        ) {
            let n = 9usize;
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if edge_bits[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            prop_assume!(!edges.is_empty());
            let graph = SimpleGraph::new(n, edges).unwrap();
            let ideal = graph.edge_ideal();
            let edge_gens = ideal.gens().to_vec();
            let power = ideal.power(k).unwrap();
            for g in power.gens() {
                prop_assert!(factors_into_edges(g, &edge_gens, k));
            }
        }

        /// The colon ideal contains the original ideal.
        #[test]
        fn colon_contains_original(
            exps in proptest::collection::vec(proptest::collection::vec(0u32..3, 4), 1..6),
            d in proptest::collection::vec(0u32..3, 4),
        ) {
            let ring = Ring::standard(4);
            let ideal = MonomialIdeal::from_generators(
                ring,
                exps.into_iter().map(Monomial::new).collect(),
            ).unwrap();
            let colon = ideal.colon_by_monomial(&Monomial::new(d)).unwrap();
            for g in ideal.gens() {
                prop_assert!(colon.contains(g));
            }
        }
    }
}
