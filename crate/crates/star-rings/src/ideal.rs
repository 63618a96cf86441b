//! Ideals, the full ideal lattice, radicals and primary decomposition.
//!
//! Membership sets are fixed-width bit fields keyed by element index, so set
//! operations cost O(order / 64) words. The canonical order on ideals is
//! (cardinality, then numeric value of the membership word); every lattice is
//! sorted that way and all witnesses are reported in that order.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ring::{FiniteRing, Ring, MAX_ORDER};

/// Default cap on lattice size for [`enumerate_ideals`].
pub const DEFAULT_LATTICE_CAP: usize = 4096;

const WORDS: usize = MAX_ORDER / 64;

/// A set of element indices backed by a 256-bit field.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ElementSet {
    words: [u64; WORDS],
}

impl ElementSet {
    pub fn empty() -> Self {
        ElementSet { words: [0; WORDS] }
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        let mut set = Self::empty();
        for &i in indices {
            set.insert(i);
        }
        set
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut words = self.words;
        for (w, o) in words.iter_mut().zip(&other.words) {
            *w |= o;
        }
        ElementSet { words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut words = self.words;
        for (w, o) in words.iter_mut().zip(&other.words) {
            *w &= o;
        }
        ElementSet { words }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(w, o)| w & !o == 0)
    }

    /// Ascending iterator over member indices.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let bit = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * 64 + bit)
                }
            })
        })
    }

    /// Numeric comparison of the membership words (element `i` contributes
    /// `2^i`), used as the tie-breaker of the canonical lattice order.
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        self.words.iter().rev().cmp(other.words.iter().rev())
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An ideal of a specific finite ring: a membership set closed under
/// addition, negation and multiplication by every ring element.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    members: ElementSet,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && same_ring(&self.ring, &other.ring)
    }
}

impl Eq for Ideal {}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({:?} of {})", self.members, self.ring.label())
    }
}

/// Ideals serialize as sorted element-index lists.
impl Serialize for Ideal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for i in self.members() {
            seq.serialize_element(&i)?;
        }
        seq.end()
    }
}

fn same_ring(a: &Ring, b: &Ring) -> bool {
    std::sync::Arc::ptr_eq(a, b) || **a == **b
}

impl Ideal {
    /// Wraps a membership list after checking every ideal axiom.
    pub fn from_members(ring: &Ring, members: &[usize]) -> Result<Ideal> {
        let n = ring.order();
        for &m in members {
            if m >= n {
                return Err(Error::ElementOutOfRange { element: m, order: n });
            }
        }
        let set = ElementSet::from_indices(members);
        let reject = |reason: String| Error::NotAnIdeal {
            ring: ring.label().to_string(),
            reason,
        };
        if !set.contains(ring.zero()) {
            return Err(reject("missing zero".into()));
        }
        for x in set.iter() {
            if !set.contains(ring.neg(x)) {
                return Err(reject(format!("not closed under negation at {x}")));
            }
            for y in set.iter() {
                if !set.contains(ring.add(x, y)) {
                    return Err(reject(format!("not closed under addition at ({x}, {y})")));
                }
            }
            for r in ring.elements() {
                if !set.contains(ring.mul(r, x)) {
                    return Err(reject(format!(
                        "not closed under multiplication at ({r}, {x})"
                    )));
                }
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            members: set,
        })
    }

    pub(crate) fn from_set_unchecked(ring: &Ring, members: ElementSet) -> Ideal {
        Ideal {
            ring: ring.clone(),
            members,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn member_set(&self) -> &ElementSet {
        &self.members
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false // an ideal always contains zero
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.len() == 1
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.len() == self.ring.order()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit_ideal()
    }

    pub(crate) fn check_ring(&self, ring: &Ring) -> Result<()> {
        if same_ring(&self.ring, ring) {
            Ok(())
        } else {
            Err(Error::MixedOperands(format!(
                "ideal of {} used with {}",
                self.ring.label(),
                ring.label()
            )))
        }
    }

    /// `{ x : x^k in I for some 1 <= k <= order }`. The bound is exact: the
    /// exponent set of each element is upward closed and the power sequence
    /// has at most `order` distinct values, so the orbit scan suffices.
    pub fn radical(&self) -> Ideal {
        let ring = &self.ring;
        let mut members = ElementSet::empty();
        for x in ring.elements() {
            if ring.power_orbit(x).iter().any(|&p| self.contains(p)) {
                members.insert(x);
            }
        }
        Ideal {
            ring: ring.clone(),
            members,
        }
    }

    pub fn is_radical_ideal(&self) -> bool {
        self.radical().members == self.members
    }

    /// Proper, and `ab in I` forces `a in I` or `b in I`.
    pub fn is_prime(&self) -> bool {
        self.prime_witness_inner() == PrimeStatus::Prime
    }

    /// Least pair `(a, b)` outside `I` with `ab in I`, when `I` is proper
    /// and not prime.
    pub fn prime_witness(&self) -> Option<(usize, usize)> {
        match self.prime_witness_inner() {
            PrimeStatus::Witness(a, b) => Some((a, b)),
            _ => None,
        }
    }

    fn prime_witness_inner(&self) -> PrimeStatus {
        if self.is_unit_ideal() {
            return PrimeStatus::NotProper;
        }
        let ring = &self.ring;
        for a in ring.elements().filter(|&a| !self.contains(a)) {
            for b in ring.elements().filter(|&b| !self.contains(b)) {
                if self.contains(ring.mul(a, b)) {
                    return PrimeStatus::Witness(a, b);
                }
            }
        }
        PrimeStatus::Prime
    }

    /// Proper, and no strictly larger proper ideal exists; decided without
    /// the lattice via `I + (a) = R` for every `a` outside `I`.
    pub fn is_maximal(&self) -> bool {
        if self.is_unit_ideal() {
            return false;
        }
        let ring = &self.ring;
        ring.elements().filter(|&a| !self.contains(a)).all(|a| {
            let mut gens: Vec<usize> = self.members().collect();
            gens.push(a);
            generate_ideal(ring, &gens)
                .map(|j| j.is_unit_ideal())
                .unwrap_or(false)
        })
    }

    /// Proper, and `ab in I` forces `a in I` or `b in radical(I)`. The unit
    /// ideal returns false.
    pub fn is_primary(&self) -> bool {
        self.is_proper() && self.primary_witness().is_none()
    }

    /// Least pair `(a, b)` with `ab in I`, `a` outside `I` and `b` outside
    /// `radical(I)`.
    pub fn primary_witness(&self) -> Option<(usize, usize)> {
        let ring = &self.ring;
        let rad = self.radical();
        for a in ring.elements().filter(|&a| !self.contains(a)) {
            for b in ring.elements().filter(|&b| !rad.contains(b)) {
                if self.contains(ring.mul(a, b)) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_idempotent(&self) -> bool {
        ideal_product(self, self)
            .map(|p| p.members == self.members)
            .unwrap_or(false)
    }

    /// A small generating set as a display string: the least single
    /// generator when the ideal is principal, otherwise a greedy ascending
    /// generator list. The zero ideal prints as `0`.
    pub fn generator_label(&self) -> String {
        if self.is_zero_ideal() {
            return "0".into();
        }
        let ring = &self.ring;
        for a in self.members() {
            if let Ok(principal) = generate_ideal(ring, &[a]) {
                if principal.members == self.members {
                    return a.to_string();
                }
            }
        }
        let mut gens: Vec<usize> = Vec::new();
        let mut current = ElementSet::from_indices(&[ring.zero()]);
        while current != self.members {
            let next = self
                .members()
                .find(|&x| !current.contains(x))
                .expect("current is a proper subset");
            gens.push(next);
            current = generate_ideal(ring, &gens)
                .expect("members are valid elements")
                .members;
        }
        gens.iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

#[derive(PartialEq)]
enum PrimeStatus {
    Prime,
    NotProper,
    Witness(usize, usize),
}

/// Closes a seed set under addition.
fn additive_closure(ring: &FiniteRing, seed: ElementSet) -> ElementSet {
    let mut set = seed;
    set.insert(ring.zero());
    let mut frontier: Vec<usize> = set.iter().collect();
    while let Some(x) = frontier.pop() {
        let sums: Vec<usize> = set
            .iter()
            .map(|y| ring.add(x, y))
            .filter(|&s| !set.contains(s))
            .collect();
        for s in sums {
            set.insert(s);
            frontier.push(s);
        }
    }
    set
}

/// Least ideal containing `gens`: the additive closure of `R * gens`
/// (negation comes free, since `-x = (-1) * x`).
pub fn generate_ideal(ring: &Ring, gens: &[usize]) -> Result<Ideal> {
    let n = ring.order();
    for &g in gens {
        if g >= n {
            return Err(Error::ElementOutOfRange { element: g, order: n });
        }
    }
    let mut seed = ElementSet::empty();
    seed.insert(ring.zero());
    for &g in gens {
        for r in ring.elements() {
            seed.insert(ring.mul(r, g));
        }
    }
    Ok(Ideal {
        ring: ring.clone(),
        members: additive_closure(ring, seed),
    })
}

/// Intersection of a family; the empty family yields the unit ideal (nullary
/// meet convention).
pub fn intersect_ideals(ring: &Ring, ideals: &[Ideal]) -> Result<Ideal> {
    let mut members = ElementSet::from_indices(&ring.elements().collect::<Vec<_>>());
    for ideal in ideals {
        ideal.check_ring(ring)?;
        members = members.intersection(&ideal.members);
    }
    Ok(Ideal {
        ring: ring.clone(),
        members,
    })
}

/// Sum of two ideals: `{ x + y }`, already an ideal.
pub fn ideal_sum(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    b.check_ring(&a.ring)?;
    let ring = &a.ring;
    let mut members = ElementSet::empty();
    for x in a.members() {
        for y in b.members() {
            members.insert(ring.add(x, y));
        }
    }
    Ok(Ideal {
        ring: ring.clone(),
        members,
    })
}

/// Ideal generated by pairwise products: the additive closure of
/// `{ x * y : x in a, y in b }`.
pub fn ideal_product(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    b.check_ring(&a.ring)?;
    let ring = &a.ring;
    let mut seed = ElementSet::empty();
    for x in a.members() {
        for y in b.members() {
            seed.insert(ring.mul(x, y));
        }
    }
    Ok(Ideal {
        ring: ring.clone(),
        members: additive_closure(ring, seed),
    })
}

/// The complete ideal lattice of a ring, in canonical order.
#[derive(Clone)]
pub struct IdealLattice {
    ring: Ring,
    ideals: Vec<Ideal>,
}

impl IdealLattice {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the unit ideal always exists
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn ideal(&self, index: usize) -> &Ideal {
        &self.ideals[index]
    }

    /// Position of a membership set in the canonical order, if present.
    pub fn position(&self, set: &ElementSet) -> Option<usize> {
        self.ideals.iter().position(|i| i.members == *set)
    }

    pub fn zero_ideal(&self) -> &Ideal {
        &self.ideals[0]
    }

    pub fn unit_ideal(&self) -> &Ideal {
        self.ideals.last().expect("lattice is nonempty")
    }

    /// Indices of the prime ideals, in canonical order.
    pub fn prime_indices(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.ideals[i].is_prime())
            .collect()
    }

    /// Primes with no strictly smaller prime below them.
    pub fn minimal_prime_indices(&self) -> Vec<usize> {
        let primes = self.prime_indices();
        primes
            .iter()
            .copied()
            .filter(|&p| {
                !primes.iter().any(|&q| {
                    q != p
                        && self.ideals[q].members.is_subset(&self.ideals[p].members)
                        && self.ideals[q].members != self.ideals[p].members
                })
            })
            .collect()
    }

    /// For each lattice index, the lattice index of its radical.
    pub fn radical_indices(&self) -> Vec<usize> {
        self.ideals
            .iter()
            .map(|i| {
                self.position(&i.radical().members)
                    .expect("radical of a lattice ideal is a lattice ideal")
            })
            .collect()
    }

    /// Maximality read off the lattice: proper with no strictly larger
    /// proper ideal. Serves as the oracle for [`Ideal::is_maximal`].
    pub fn is_maximal_in_lattice(&self, ideal: &Ideal) -> bool {
        ideal.is_proper()
            && !self.ideals.iter().any(|j| {
                j.is_proper()
                    && j.members != ideal.members
                    && ideal.members.is_subset(&j.members)
            })
    }
}

/// Enumerates every ideal: all principal ideals, closed under pairwise sum
/// to a fixed point (every ideal of a finite ring is a finite sum of
/// principal ideals). Aborts with a resource error beyond `cap` ideals.
pub fn enumerate_ideals(ring: &Ring, cap: usize) -> Result<IdealLattice> {
    let mut seen: HashSet<ElementSet> = HashSet::new();
    let mut all: Vec<ElementSet> = Vec::new();
    let mut frontier: Vec<ElementSet> = Vec::new();

    for a in ring.elements() {
        let principal = generate_ideal(ring, &[a])?.members;
        if seen.insert(principal) {
            all.push(principal);
            frontier.push(principal);
        }
    }

    while let Some(new_set) = frontier.pop() {
        if all.len() > cap {
            return Err(Error::ResourceCap(format!(
                "ideal lattice of {} exceeds the cap {cap}",
                ring.label()
            )));
        }
        let new_ideal = Ideal::from_set_unchecked(ring, new_set);
        let mut found: Vec<ElementSet> = Vec::new();
        for other in &all {
            let sum = ideal_sum(&new_ideal, &Ideal::from_set_unchecked(ring, *other))?;
            if !seen.contains(&sum.members) {
                found.push(sum.members);
            }
        }
        for set in found {
            if seen.insert(set) {
                all.push(set);
                frontier.push(set);
            }
        }
    }
    if all.len() > cap {
        return Err(Error::ResourceCap(format!(
            "ideal lattice of {} exceeds the cap {cap}",
            ring.label()
        )));
    }

    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp_value(b)));
    let ideals = all
        .into_iter()
        .map(|set| Ideal::from_set_unchecked(ring, set))
        .collect();
    Ok(IdealLattice {
        ring: ring.clone(),
        ideals,
    })
}

/// An irredundant primary decomposition of a proper ideal.
#[derive(Clone, Debug, Serialize)]
pub struct PrimaryDecomposition {
    pub target: Ideal,
    pub components: Vec<Ideal>,
}

impl PrimaryDecomposition {
    /// Re-checks the three defining invariants from the fields alone.
    pub fn verify(&self) -> Result<()> {
        let ring = self.target.ring();
        let full = intersect_ideals(ring, &self.components)?;
        if full.member_set() != self.target.member_set() {
            return Err(Error::Inconsistency(
                "decomposition does not intersect to the target".into(),
            ));
        }
        for c in &self.components {
            if !c.is_primary() {
                return Err(Error::Inconsistency(format!(
                    "component ({}) is not primary",
                    c.generator_label()
                )));
            }
        }
        for skip in 0..self.components.len() {
            let rest: Vec<Ideal> = self
                .components
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, c)| c.clone())
                .collect();
            let partial = intersect_ideals(ring, &rest)?;
            if partial.member_set() == self.target.member_set() {
                return Err(Error::Inconsistency(format!(
                    "component ({}) is redundant",
                    self.components[skip].generator_label()
                )));
            }
        }
        Ok(())
    }
}

/// Decomposes a proper ideal by collecting every primary lattice ideal that
/// contains it, intersecting them all (must equal the target in a finite
/// ring), then greedily pruning redundant components in canonical lattice
/// order. Minimality of the component count is not guaranteed, only
/// irredundancy.
pub fn primary_decomposition(
    lattice: &IdealLattice,
    target: &Ideal,
) -> Result<PrimaryDecomposition> {
    target.check_ring(lattice.ring())?;
    if target.is_unit_ideal() {
        return Err(Error::InvalidArgument(
            "the unit ideal has no primary decomposition".into(),
        ));
    }
    let candidates: Vec<Ideal> = lattice
        .ideals()
        .iter()
        .filter(|j| target.member_set().is_subset(j.member_set()) && j.is_primary())
        .cloned()
        .collect();
    let full = intersect_ideals(lattice.ring(), &candidates)?;
    if full.member_set() != target.member_set() {
        return Err(Error::Inconsistency(format!(
            "primary ideals above ({}) in {} do not intersect to it",
            target.generator_label(),
            lattice.ring().label()
        )));
    }

    let mut components = candidates;
    let mut index = 0;
    while index < components.len() {
        let rest: Vec<Ideal> = components
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != index)
            .map(|(_, c)| c.clone())
            .collect();
        let partial = intersect_ideals(lattice.ring(), &rest)?;
        if partial.member_set() == target.member_set() {
            components.remove(index);
        } else {
            index += 1;
        }
    }
    Ok(PrimaryDecomposition {
        target: target.clone(),
        components,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{poly_quotient_ring, product_ring, residue_ring};

    fn z12_lattice() -> IdealLattice {
        enumerate_ideals(&residue_ring(12).unwrap(), DEFAULT_LATTICE_CAP).unwrap()
    }

    #[test]
    fn element_set_ordering_is_numeric() {
        let a = ElementSet::from_indices(&[0, 6]);
        let b = ElementSet::from_indices(&[0, 4, 8]);
        assert_eq!(a.cmp_value(&b), Ordering::Less); // 2^0+2^6 < 2^0+2^4+2^8
        let hi = ElementSet::from_indices(&[100]);
        let lo = ElementSet::from_indices(&[0, 1, 2, 63]);
        assert_eq!(lo.cmp_value(&hi), Ordering::Less);
    }

    #[test]
    fn generate_ideal_closure_oracle() {
        let r = residue_ring(12).unwrap();
        let i = generate_ideal(&r, &[4]).unwrap();
        assert_eq!(i.members().collect::<Vec<_>>(), vec![0, 4, 8]);

        let zero = generate_ideal(&r, &[]).unwrap();
        assert_eq!(zero.members().collect::<Vec<_>>(), vec![0]);

        let unit = generate_ideal(&r, &[1]).unwrap();
        assert_eq!(unit.len(), 12);
    }

    #[test]
    fn generate_ideal_rejects_out_of_range() {
        let r = residue_ring(6).unwrap();
        assert!(matches!(
            generate_ideal(&r, &[7]),
            Err(Error::ElementOutOfRange { .. })
        ));
    }

    #[test]
    fn enumerate_ideals_z12_matches_divisor_oracle() {
        // one ideal per divisor of 12: the multiples of d
        let divisors = [1usize, 2, 3, 4, 6, 12];
        let expected: HashSet<ElementSet> = divisors
            .iter()
            .map(|&d| ElementSet::from_indices(&(0..12).filter(|x| x % d == 0).collect::<Vec<_>>()))
            .collect();
        let lattice = z12_lattice();
        assert_eq!(lattice.len(), 6);
        let got: HashSet<ElementSet> = lattice.ideals().iter().map(|i| *i.member_set()).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn enumerate_ideals_field_has_two() {
        let gf4 = poly_quotient_ring(2, &[1, 1, 1]).unwrap();
        let lattice = enumerate_ideals(&gf4, DEFAULT_LATTICE_CAP).unwrap();
        assert_eq!(lattice.len(), 2);
    }

    #[test]
    fn enumerate_ideals_product_matches_product_ideal_oracle() {
        // ideals of Z/4 x Z/9 are exactly products I x J of factor ideals
        let r = product_ring(&residue_ring(4).unwrap(), &residue_ring(9).unwrap()).unwrap();
        let factor = |n: usize, d: usize| -> Vec<usize> {
            (0..n).filter(|x| x % d == 0).collect()
        };
        let mut expected: HashSet<ElementSet> = HashSet::new();
        for da in [1usize, 2, 4] {
            for db in [1usize, 3, 9] {
                let mut set = ElementSet::empty();
                for &a in &factor(4, da) {
                    for &b in &factor(9, db) {
                        set.insert(a * 9 + b);
                    }
                }
                expected.insert(set);
            }
        }
        let lattice = enumerate_ideals(&r, DEFAULT_LATTICE_CAP).unwrap();
        assert_eq!(lattice.len(), 9);
        let got: HashSet<ElementSet> = lattice.ideals().iter().map(|i| *i.member_set()).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn enumerate_ideals_respects_cap() {
        let r = product_ring(&residue_ring(4).unwrap(), &residue_ring(9).unwrap()).unwrap();
        assert!(matches!(
            enumerate_ideals(&r, 4),
            Err(Error::ResourceCap(_))
        ));
    }

    #[test]
    fn lattice_is_canonically_ordered_and_complete_for_pairs() {
        let lattice = z12_lattice();
        for w in lattice.ideals().windows(2) {
            let key = |i: &Ideal| (i.len(), *i.member_set());
            let (a, b) = (key(&w[0]), key(&w[1]));
            assert!(a.0 < b.0 || (a.0 == b.0 && a.1.cmp_value(&b.1) == Ordering::Less));
        }
        // completeness: every <=2-generated ideal appears
        let r = lattice.ring().clone();
        for a in 0..12 {
            for b in a..12 {
                let gen = generate_ideal(&r, &[a, b]).unwrap();
                assert!(lattice.position(gen.member_set()).is_some());
            }
        }
    }

    #[test]
    fn radical_values_from_power_scan_oracle() {
        let r = residue_ring(12).unwrap();
        let four = generate_ideal(&r, &[4]).unwrap();
        // oracle: 2^2 = 4 lies in (4), so every even element is in the radical
        assert_eq!(
            four.radical().members().collect::<Vec<_>>(),
            vec![0, 2, 4, 6, 8, 10]
        );

        let unit = generate_ideal(&r, &[1]).unwrap();
        assert!(unit.radical().is_unit_ideal());

        let dual = poly_quotient_ring(2, &[0, 0, 1]).unwrap();
        let zero = generate_ideal(&dual, &[]).unwrap();
        // x (index 2) squares to zero; 1 and x+1 are units
        assert_eq!(zero.radical().members().collect::<Vec<_>>(), vec![0, 2]);
    }

    #[test]
    fn intersection_and_sum_set_arithmetic() {
        let r = residue_ring(12).unwrap();
        let four = generate_ideal(&r, &[4]).unwrap();
        let three = generate_ideal(&r, &[3]).unwrap();
        let two = generate_ideal(&r, &[2]).unwrap();

        let meet = intersect_ideals(&r, &[four.clone(), three.clone()]).unwrap();
        assert_eq!(meet.members().collect::<Vec<_>>(), vec![0]);

        let meet = intersect_ideals(&r, &[two.clone(), three.clone()]).unwrap();
        assert_eq!(meet.members().collect::<Vec<_>>(), vec![0, 6]);

        let unit = generate_ideal(&r, &[1]).unwrap();
        for i in [&four, &three, &two] {
            let with_unit = intersect_ideals(&r, &[(*i).clone(), unit.clone()]).unwrap();
            assert_eq!(with_unit.member_set(), i.member_set());
        }

        let empty = intersect_ideals(&r, &[]).unwrap();
        assert!(empty.is_unit_ideal());

        let s = ideal_sum(&four, &three).unwrap();
        assert!(s.is_unit_ideal()); // gcd(4,3) = 1
    }

    #[test]
    fn mixed_ring_operands_rejected() {
        let r = residue_ring(12).unwrap();
        let other = residue_ring(8).unwrap();
        let a = generate_ideal(&r, &[4]).unwrap();
        let b = generate_ideal(&other, &[2]).unwrap();
        assert!(matches!(ideal_sum(&a, &b), Err(Error::MixedOperands(_))));
        assert!(matches!(
            intersect_ideals(&r, &[b]),
            Err(Error::MixedOperands(_))
        ));
    }

    #[test]
    fn prime_and_maximal_classification_in_z12() {
        let r = residue_ring(12).unwrap();
        let two = generate_ideal(&r, &[2]).unwrap();
        assert!(two.is_prime());
        assert!(two.is_maximal());

        let four = generate_ideal(&r, &[4]).unwrap();
        assert!(!four.is_prime());
        assert_eq!(four.prime_witness(), Some((2, 2)));
        assert!(!four.is_maximal());

        let gf4 = poly_quotient_ring(2, &[1, 1, 1]).unwrap();
        let zero = generate_ideal(&gf4, &[]).unwrap();
        assert!(zero.is_prime());
    }

    #[test]
    fn lattice_maximality_oracle_agrees_with_direct_check() {
        for n in [8usize, 12, 30] {
            let r = residue_ring(n).unwrap();
            let lattice = enumerate_ideals(&r, DEFAULT_LATTICE_CAP).unwrap();
            for ideal in lattice.ideals() {
                assert_eq!(
                    ideal.is_maximal(),
                    lattice.is_maximal_in_lattice(ideal),
                    "maximality mismatch at ({}) in Z/{n}",
                    ideal.generator_label()
                );
            }
        }
    }

    #[test]
    fn primary_classification_in_z12() {
        let r = residue_ring(12).unwrap();
        let four = generate_ideal(&r, &[4]).unwrap();
        assert!(four.is_primary());

        let six = generate_ideal(&r, &[6]).unwrap();
        assert!(!six.is_primary());
        // oracle: 2*3 = 6 in (6), 2 outside, and powers of 3 cycle 3,9,3,...
        assert_eq!(six.primary_witness(), Some((2, 3)));

        let two = generate_ideal(&r, &[2]).unwrap();
        assert!(two.is_prime() && two.is_primary());

        let unit = generate_ideal(&r, &[1]).unwrap();
        assert!(!unit.is_primary());
    }

    #[test]
    fn primary_decomposition_of_z12_ideals() {
        let lattice = z12_lattice();
        let r = lattice.ring().clone();

        let zero = generate_ideal(&r, &[]).unwrap();
        let dec = primary_decomposition(&lattice, &zero).unwrap();
        dec.verify().unwrap();
        let got: HashSet<ElementSet> = dec.components.iter().map(|c| *c.member_set()).collect();
        let expected: HashSet<ElementSet> = [
            ElementSet::from_indices(&[0, 4, 8]),
            ElementSet::from_indices(&[0, 3, 6, 9]),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, expected);

        let six = generate_ideal(&r, &[6]).unwrap();
        let dec = primary_decomposition(&lattice, &six).unwrap();
        dec.verify().unwrap();
        let got: HashSet<ElementSet> = dec.components.iter().map(|c| *c.member_set()).collect();
        let expected: HashSet<ElementSet> = [
            ElementSet::from_indices(&[0, 2, 4, 6, 8, 10]),
            ElementSet::from_indices(&[0, 3, 6, 9]),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn primary_decomposition_of_field_zero_ideal() {
        let gf4 = poly_quotient_ring(2, &[1, 1, 1]).unwrap();
        let lattice = enumerate_ideals(&gf4, DEFAULT_LATTICE_CAP).unwrap();
        let zero = generate_ideal(&gf4, &[]).unwrap();
        let dec = primary_decomposition(&lattice, &zero).unwrap();
        dec.verify().unwrap();
        assert_eq!(dec.components.len(), 1);
        assert!(dec.components[0].is_zero_ideal());
    }

    #[test]
    fn primary_decomposition_rejects_unit_ideal() {
        let lattice = z12_lattice();
        let unit = generate_ideal(lattice.ring(), &[1]).unwrap();
        assert!(matches!(
            primary_decomposition(&lattice, &unit),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn radical_calculus_exhaustive_on_z12_lattice() {
        let lattice = z12_lattice();
        for i in lattice.ideals() {
            let rad = i.radical();
            // extensive and idempotent
            assert!(i.member_set().is_subset(rad.member_set()));
            assert_eq!(rad.radical().member_set(), rad.member_set());
            for j in lattice.ideals() {
                // monotone
                if i.member_set().is_subset(j.member_set()) {
                    assert!(rad.member_set().is_subset(j.radical().member_set()));
                }
                // pairwise radical identity
                let meet = intersect_ideals(lattice.ring(), &[i.clone(), j.clone()]).unwrap();
                let rhs = rad.member_set().intersection(j.radical().member_set());
                assert_eq!(*meet.radical().member_set(), rhs);
            }
        }
    }

    #[test]
    fn generator_labels_are_compact() {
        let r = residue_ring(12).unwrap();
        assert_eq!(generate_ideal(&r, &[4]).unwrap().generator_label(), "4");
        assert_eq!(generate_ideal(&r, &[]).unwrap().generator_label(), "0");
        assert_eq!(generate_ideal(&r, &[1]).unwrap().generator_label(), "1");
        let klein = product_ring(&residue_ring(2).unwrap(), &residue_ring(2).unwrap()).unwrap();
        let whole = generate_ideal(&klein, &[1, 2]).unwrap();
        assert!(whole.is_unit_ideal());
        assert_eq!(whole.generator_label(), "3"); // (1,1) = index 3 generates R
    }

    #[test]
    fn ideal_serializes_as_sorted_index_list() {
        let r = residue_ring(12).unwrap();
        let i = generate_ideal(&r, &[4]).unwrap();
        assert_eq!(serde_json::to_string(&i).unwrap(), "[0,4,8]");
    }
}
