//! Explicit matroids on small ground sets, given by their circuits.
//!
//! Ground elements are `1..=n` and subsets are [`VertexSet`] masks. Operations
//! that walk the whole power set (bases, duality, self-duality, axiom checks)
//! refuse ground sets larger than the enumeration bound.

mod isomorphism;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subset::{full_mask, k_subsets, VertexSet, MAX_ELEMENTS};

pub use isomorphism::MAX_ISOMORPHISM_GROUND;

/// Default cap on the ground set size for power-set enumeration.
pub const DEFAULT_ENUMERATION_BOUND: usize = 16;

/// Ground sets up to this size may be checked against the circuit elimination axiom.
pub const MAX_DEEP_VALIDATION: usize = 12;

/// An antichain of non-empty sets in canonical order (cardinality, then lexicographic).
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CircuitList(Vec<VertexSet>);

impl CircuitList {
    /// Sorts and deduplicates `sets`, rejecting empty members and comparable pairs.
    pub fn new(mut sets: Vec<VertexSet>) -> Result<Self> {
        sets.sort();
        sets.dedup();
        if sets.first().is_some_and(|s| s.is_empty()) {
            return Err(Error::Input("the empty set cannot be a circuit".into()));
        }
        for (i, a) in sets.iter().enumerate() {
            if let Some(b) = sets[i + 1..].iter().find(|b| a.is_subset(**b)) {
                return Err(Error::Input(format!("circuit {a} is contained in circuit {b}")));
            }
        }
        Ok(CircuitList(sets))
    }

    /// Keeps only the inclusion-minimal members of `sets`.
    pub fn minimal_of(mut sets: Vec<VertexSet>) -> Self {
        sets.sort();
        sets.dedup();
        let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
        for s in sets {
            // sorted by cardinality, so only earlier sets can be proper subsets
            if !s.is_empty() && !kept.iter().any(|k| k.is_subset(s)) {
                kept.push(s);
            }
        }
        CircuitList(kept)
    }

    pub(crate) fn from_sorted_antichain(sets: Vec<VertexSet>) -> Self {
        debug_assert!(sets.windows(2).all(|w| w[0] < w[1]));
        CircuitList(sets)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexSet> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[VertexSet] {
        &self.0
    }

    pub fn contains(&self, set: VertexSet) -> bool {
        self.0.binary_search(&set).is_ok()
    }

    /// Sorted element lists, the form used in reports.
    pub fn to_vecs(&self) -> Vec<Vec<usize>> {
        self.0.iter().map(|c| c.to_vec()).collect()
    }
}

impl fmt::Debug for CircuitList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a CircuitList {
    type Item = &'a VertexSet;
    type IntoIter = std::slice::Iter<'a, VertexSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExplicitMatroid {
    ground_size: usize,
    circuits: CircuitList,
}

impl fmt::Debug for ExplicitMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExplicitMatroid(n={}, circuits={:?})", self.ground_size, self.circuits)
    }
}

fn check_bound(what: &'static str, size: usize, bound: usize) -> Result<()> {
    if size > bound {
        Err(Error::Resource { what, size, bound })
    } else {
        Ok(())
    }
}

impl ExplicitMatroid {
    /// Builds the matroid on `1..=n` with the given circuits. With `deep_validation`
    /// the circuit elimination axiom is checked exhaustively (requires `n <= 12`).
    pub fn from_circuits(n: usize, circuits: Vec<VertexSet>, deep_validation: bool) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::Input(format!("ground set of {n} elements exceeds {MAX_ELEMENTS}")));
        }
        let ground = VertexSet::full(n);
        if let Some(c) = circuits.iter().find(|c| !c.is_subset(ground)) {
            return Err(Error::Input(format!("circuit {c} is not a subset of 1..={n}")));
        }
        let m = ExplicitMatroid { ground_size: n, circuits: CircuitList::new(circuits)? };
        if deep_validation {
            m.validate_circuit_axioms()?;
        }
        Ok(m)
    }

    pub(crate) fn from_circuit_list(n: usize, circuits: CircuitList) -> Self {
        ExplicitMatroid { ground_size: n, circuits }
    }

    /// U_{r,n}: every r-subset is a basis.
    pub fn uniform(r: usize, n: usize) -> Result<Self> {
        if r > n || n > MAX_ELEMENTS {
            return Err(Error::Input(format!("no uniform matroid U_{{{r},{n}}}")));
        }
        let circuits = k_subsets(n, r + 1).map(VertexSet::from_bits).collect();
        Ok(ExplicitMatroid { ground_size: n, circuits: CircuitList::from_sorted_antichain(sorted(circuits)) })
    }

    /// The matroid on the empty ground set.
    pub fn empty() -> Self {
        ExplicitMatroid { ground_size: 0, circuits: CircuitList::default() }
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn ground_set(&self) -> VertexSet {
        VertexSet::full(self.ground_size)
    }

    pub fn circuits(&self) -> &CircuitList {
        &self.circuits
    }

    pub fn is_independent(&self, a: VertexSet) -> bool {
        !self.circuits.iter().any(|c| c.is_subset(a))
    }

    pub fn is_dependent(&self, a: VertexSet) -> bool {
        !self.is_independent(a)
    }

    /// Size of a maximal independent subset of `a`, grown greedily in element order.
    pub fn rank_of(&self, a: VertexSet) -> usize {
        self.greedy_independent(a).len()
    }

    pub fn greedy_independent(&self, a: VertexSet) -> VertexSet {
        a.intersection(self.ground_set()).iter().fold(VertexSet::EMPTY, |acc, x| {
            let next = acc.with(x);
            if self.is_independent(next) {
                next
            } else {
                acc
            }
        })
    }

    pub fn rank(&self) -> usize {
        self.rank_of(self.ground_set())
    }

    /// Elements forming a circuit on their own.
    pub fn loops(&self) -> VertexSet {
        self.circuits.iter().filter(|c| c.len() == 1).fold(VertexSet::EMPTY, |acc, c| acc.union(*c))
    }

    /// Elements lying in no circuit.
    pub fn coloops(&self) -> VertexSet {
        let covered = self.circuits.iter().fold(VertexSet::EMPTY, |acc, c| acc.union(*c));
        self.ground_set().difference(covered)
    }

    /// `table[mask]` is true when `mask` contains a circuit.
    fn dependence_table(&self, bound: usize) -> Result<Vec<bool>> {
        check_bound("matroid ground set", self.ground_size, bound)?;
        let size = 1usize << self.ground_size;
        let mut table = vec![false; size];
        for c in &self.circuits {
            table[c.bits() as usize] = true;
        }
        for mask in 1..size {
            if !table[mask] {
                let mut rest = mask;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest ^= bit;
                    if table[mask ^ bit] {
                        table[mask] = true;
                        break;
                    }
                }
            }
        }
        Ok(table)
    }

    pub fn bases(&self) -> Result<Vec<VertexSet>> {
        self.bases_within(DEFAULT_ENUMERATION_BOUND)
    }

    /// All bases in canonical order.
    pub fn bases_within(&self, bound: usize) -> Result<Vec<VertexSet>> {
        let table = self.dependence_table(bound)?;
        let r = self.rank();
        Ok(sorted(k_subsets(self.ground_size, r).filter(|&m| !table[m as usize]).map(VertexSet::from_bits).collect()))
    }

    pub fn dual(&self) -> Result<Self> {
        self.dual_within(DEFAULT_ENUMERATION_BOUND)
    }

    /// The matroid whose bases are the complements of the bases of `self`.
    pub fn dual_within(&self, bound: usize) -> Result<Self> {
        let n = self.ground_size;
        let full = full_mask(n);
        let size = 1usize << n;
        let mut independent = vec![false; size];
        for b in self.bases_within(bound)? {
            independent[(!b.bits() & full) as usize] = true;
        }
        for mask in (1..size).rev() {
            if independent[mask] {
                let mut rest = mask;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest ^= bit;
                    independent[mask ^ bit] = true;
                }
            }
        }
        let circuits = (1..size)
            .filter(|&mask| {
                if independent[mask] {
                    return false;
                }
                let mut rest = mask;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest ^= bit;
                    if !independent[mask ^ bit] {
                        return false;
                    }
                }
                true
            })
            .map(|mask| VertexSet::from_bits(mask as u64))
            .collect();
        Ok(ExplicitMatroid { ground_size: n, circuits: CircuitList::from_sorted_antichain(sorted(circuits)) })
    }

    /// Ground sets concatenated; the elements of `other` are shifted by `|E(self)|`.
    pub fn direct_sum(&self, other: &ExplicitMatroid) -> Result<Self> {
        let n = self.ground_size + other.ground_size;
        if n > MAX_ELEMENTS {
            return Err(Error::Input(format!("direct sum has {n} elements, above {MAX_ELEMENTS}")));
        }
        let offset = self.ground_size;
        let circuits = self.circuits.iter().copied().chain(other.circuits.iter().map(|c| c.shifted(offset))).collect();
        Ok(ExplicitMatroid { ground_size: n, circuits: CircuitList::from_sorted_antichain(sorted(circuits)) })
    }

    pub fn is_identically_self_dual(&self) -> Result<bool> {
        self.is_identically_self_dual_within(DEFAULT_ENUMERATION_BOUND)
    }

    /// Whether the complement of every basis is again a basis, i.e. r = r* under the
    /// identity map on the ground set.
    pub fn is_identically_self_dual_within(&self, bound: usize) -> Result<bool> {
        let table = self.dependence_table(bound)?;
        let n = self.ground_size;
        if n != 2 * self.rank() {
            return Ok(false);
        }
        let full = full_mask(n);
        Ok(k_subsets(n, n / 2).filter(|&b| !table[b as usize]).all(|b| !table[(!b & full) as usize]))
    }

    /// Exhaustive check of the circuit elimination axiom: for distinct circuits
    /// C1, C2 and e in both, (C1 ∪ C2) - e contains a circuit.
    pub fn validate_circuit_axioms(&self) -> Result<()> {
        let table = self.dependence_table(MAX_DEEP_VALIDATION)?;
        let list = self.circuits.as_slice();
        for (i, &c1) in list.iter().enumerate() {
            for &c2 in &list[i + 1..] {
                let union = c1.union(c2);
                for e in c1.intersection(c2).iter() {
                    if !table[union.without(e).bits() as usize] {
                        return Err(Error::CircuitAxiom { first: c1, second: c2, element: e });
                    }
                }
            }
        }
        Ok(())
    }

    /// Applies the element bijection `perm` (`perm[x - 1]` is the image of `x`).
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        let n = self.ground_size;
        let image: VertexSet = perm.iter().copied().filter(|&p| p >= 1 && p <= n).collect();
        if perm.len() != n || image.len() != n {
            return Err(Error::Input("relabeling is not a permutation of the ground set".into()));
        }
        let circuits = self.circuits.iter().map(|c| c.iter().map(|x| perm[x - 1]).collect()).collect();
        Ok(ExplicitMatroid { ground_size: n, circuits: CircuitList::from_sorted_antichain(sorted(circuits)) })
    }

    /// A ground-set bijection carrying the circuits of `self` onto those of `other`.
    pub fn find_isomorphism(&self, other: &ExplicitMatroid) -> Result<Option<Vec<usize>>> {
        isomorphism::find(self, other)
    }

    pub fn is_isomorphic(&self, other: &ExplicitMatroid) -> Result<bool> {
        Ok(self.find_isomorphism(other)?.is_some())
    }

    /// Circuit-size histogram and per-element circuit counts, sorted; equal for
    /// isomorphic matroids.
    pub fn fingerprint(&self) -> (usize, Vec<usize>, Vec<Vec<usize>>) {
        isomorphism::fingerprint(self)
    }
}

fn sorted(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort();
    sets.dedup();
    sets
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set<const N: usize>(ids: [usize; N]) -> VertexSet {
        VertexSet::from(ids)
    }

    #[test]
    fn from_circuits_examples() {
        let u12 = ExplicitMatroid::from_circuits(2, vec![set([1, 2])], true).unwrap();
        assert_eq!(u12, ExplicitMatroid::uniform(1, 2).unwrap());
        assert!(matches!(
            ExplicitMatroid::from_circuits(4, vec![set([1, 2]), set([1, 2, 3])], false),
            Err(Error::Input(_))
        ));
        let threes: Vec<_> = k_subsets(4, 3).map(VertexSet::from_bits).collect();
        let u24 = ExplicitMatroid::from_circuits(4, threes, true).unwrap();
        assert_eq!(u24, ExplicitMatroid::uniform(2, 4).unwrap());
        assert!(ExplicitMatroid::from_circuits(3, vec![set([4])], false).is_err());
        assert!(ExplicitMatroid::from_circuits(3, vec![VertexSet::EMPTY], false).is_err());
    }

    #[test]
    fn deep_validation_rejects_non_matroids() {
        // {1,2} and {2,3} force a circuit inside {1,3}
        let err = ExplicitMatroid::from_circuits(3, vec![set([1, 2]), set([2, 3])], true).unwrap_err();
        assert!(matches!(err, Error::CircuitAxiom { element: 2, .. }));
        assert!(ExplicitMatroid::from_circuits(3, vec![set([1, 2]), set([2, 3]), set([1, 3])], true).is_ok());
    }

    #[test]
    fn uniform_examples() {
        let u24 = ExplicitMatroid::uniform(2, 4).unwrap();
        assert_eq!(u24.circuits().len(), 4);
        assert!(u24.circuits().iter().all(|c| c.len() == 3));
        assert_eq!(ExplicitMatroid::uniform(1, 2).unwrap().circuits().to_vecs(), vec![vec![1, 2]]);
        assert!(ExplicitMatroid::uniform(3, 3).unwrap().circuits().is_empty());
        assert!(ExplicitMatroid::uniform(4, 3).is_err());
    }

    #[test]
    fn dual_examples() {
        let u24 = ExplicitMatroid::uniform(2, 4).unwrap();
        assert_eq!(u24.dual().unwrap(), u24);
        let u12 = ExplicitMatroid::uniform(1, 2).unwrap();
        assert_eq!(u12.dual().unwrap(), u12);
        let u13 = ExplicitMatroid::uniform(1, 3).unwrap();
        assert_eq!(u13.dual().unwrap(), ExplicitMatroid::uniform(2, 3).unwrap());
        // a loop in M is a coloop in M*
        let with_loop = ExplicitMatroid::from_circuits(3, vec![set([1]), set([2, 3])], true).unwrap();
        let dual = with_loop.dual().unwrap();
        assert_eq!(dual.coloops(), with_loop.loops());
        assert_eq!(dual.dual().unwrap(), with_loop);
    }

    #[test]
    fn direct_sum_examples() {
        let u12 = ExplicitMatroid::uniform(1, 2).unwrap();
        let sum = u12.direct_sum(&u12).unwrap();
        assert_eq!(sum.circuits().to_vecs(), vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(u12.direct_sum(&ExplicitMatroid::empty()).unwrap(), u12);
        let u24 = ExplicitMatroid::uniform(2, 4).unwrap();
        let big = u24.direct_sum(&u24).unwrap();
        assert_eq!((big.ground_size(), big.rank()), (8, 4));
    }

    #[test]
    fn identical_self_duality() {
        assert!(ExplicitMatroid::uniform(2, 4).unwrap().is_identically_self_dual().unwrap());
        assert!(ExplicitMatroid::uniform(1, 2).unwrap().is_identically_self_dual().unwrap());
        assert!(!ExplicitMatroid::uniform(1, 4).unwrap().is_identically_self_dual().unwrap());
        // U_{1,2} ⊕ U_{1,2} relabeled so that {1,3},{2,4} are circuits: still ISD
        let m = ExplicitMatroid::from_circuits(4, vec![set([1, 3]), set([2, 4])], true).unwrap();
        assert!(m.is_identically_self_dual().unwrap());
        // rank 2 on 4 elements but {1,2} a circuit: complement of basis {1,3} is {2,4}, fine,
        // but complement of basis {3,4} is {1,2}, dependent
        let m = ExplicitMatroid::from_circuits(4, vec![set([1, 2]), set([1, 3, 4]), set([2, 3, 4])], true).unwrap();
        assert!(!m.is_identically_self_dual().unwrap());
    }

    #[test]
    fn bases_and_rank() {
        let m = ExplicitMatroid::from_circuits(4, vec![set([1, 2]), set([3, 4])], true).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.bases().unwrap(), vec![set([1, 3]), set([1, 4]), set([2, 3]), set([2, 4])]);
        assert_eq!(m.rank_of(set([1, 2])), 1);
    }

    #[test]
    fn enumeration_bound_is_enforced() {
        let big = ExplicitMatroid::uniform(1, 20).unwrap();
        assert!(matches!(big.bases(), Err(Error::Resource { .. })));
        assert!(big.bases_within(20).is_ok());
    }

    #[test]
    fn minimal_of_drops_supersets() {
        let list = CircuitList::minimal_of(vec![set([1, 2, 3]), set([2, 3]), set([4]), set([2, 3]), set([4, 5])]);
        assert_eq!(list.as_slice(), &[set([4]), set([2, 3])]);
    }
}
