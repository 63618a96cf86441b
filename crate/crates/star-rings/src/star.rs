//! The star property and its relatives.
//!
//! A ring satisfies the star property when every family of ideals `{I_α}`
//! admits a finite subfamily `S'` with `√(∩_α I_α) = ∩_{α in S'} √I_α`.
//! Over a finite lattice an arbitrary index set only repeats ideals, so
//! subsets of distinct lattice members suffice: small lattices are swept
//! exhaustively, larger ones are certified through the pairwise identity
//! `√(I ∩ J) = √I ∩ √J` plus finite induction.
//!
//! The same machinery evaluates the uniform-exponent condition for primary
//! families, the zero-dimensionality equivalence, the prime-family condition
//! and, through [`theorem_battery`], a catalog of classical statements about
//! such rings on any given ring.

use std::collections::HashMap;

use serde::Serialize;
use serde_json::json;

use crate::classify::{
    dcc_radical_ideals, is_pi_regular, is_reduced, is_vnr, krull_dimension, radical_injective,
    vnr_equivalence_report,
};
use crate::error::{Error, Result};
use crate::ideal::{
    enumerate_ideals, intersect_ideals, primary_decomposition, ElementSet, Ideal, IdealLattice,
};
use crate::ring::{
    extend_ideal, localize_at_prime, product_ring, quotient_ring, residue_ring, Ring,
};

/// Default cap on lattice size for the exhaustive subset sweep; above it the
/// certified method is used.
pub const DEFAULT_STAR_CAP: usize = 16;

/// Memoized radical computation keyed by membership set. Every set passed in
/// must be an ideal of `ring`.
struct RadicalCache<'a> {
    ring: &'a Ring,
    cache: HashMap<ElementSet, ElementSet>,
}

impl<'a> RadicalCache<'a> {
    fn new(ring: &'a Ring) -> Self {
        RadicalCache {
            ring,
            cache: HashMap::new(),
        }
    }

    fn radical(&mut self, set: ElementSet) -> ElementSet {
        if let Some(&r) = self.cache.get(&set) {
            return r;
        }
        let rad = Ideal::from_set_unchecked(self.ring, set).radical();
        let r = *rad.member_set();
        self.cache.insert(set, r);
        r
    }
}

/// A finite family of distinct ideals of one ring. Construction
/// deduplicates members and records how many duplicates were dropped, since
/// an arbitrary index set over a finite lattice repeats ideals.
#[derive(Clone, Debug)]
pub struct IdealFamily {
    ring: Ring,
    members: Vec<Ideal>,
    label: String,
    duplicates_removed: usize,
}

impl IdealFamily {
    pub fn new(ring: &Ring, members: Vec<Ideal>, label: impl Into<String>) -> Result<Self> {
        let mut distinct: Vec<Ideal> = Vec::new();
        let mut dropped = 0;
        for m in members {
            m.check_ring(ring)?;
            if distinct.iter().any(|d| d.member_set() == m.member_set()) {
                dropped += 1;
            } else {
                distinct.push(m);
            }
        }
        Ok(IdealFamily {
            ring: ring.clone(),
            members: distinct,
            label: label.into(),
            duplicates_removed: dropped,
        })
    }

    /// The family of all ideals.
    pub fn all_ideals(lattice: &IdealLattice) -> Self {
        IdealFamily {
            ring: lattice.ring().clone(),
            members: lattice.ideals().to_vec(),
            label: "all ideals".into(),
            duplicates_removed: 0,
        }
    }

    /// The family of all primary ideals (possibly empty in the zero ring).
    pub fn primary_ideals(lattice: &IdealLattice) -> Self {
        IdealFamily {
            ring: lattice.ring().clone(),
            members: lattice
                .ideals()
                .iter()
                .filter(|i| i.is_primary())
                .cloned()
                .collect(),
            label: "all primary ideals".into(),
            duplicates_removed: 0,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn members(&self) -> &[Ideal] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn duplicates_removed(&self) -> usize {
        self.duplicates_removed
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CheckMethod {
    Exhaustive,
    Certified,
}

/// A failing family, stored so the identity can be re-checked from the
/// fields alone.
#[derive(Clone, Debug, Serialize)]
pub struct StarCounterexample {
    pub subset: Vec<usize>,
    pub radical_of_intersection: Ideal,
    pub intersection_of_radicals: Ideal,
}

/// Verdict of a star-property check over one ring.
#[derive(Clone, Debug, Serialize)]
pub struct StarCheckResult {
    pub ring: String,
    pub satisfied: bool,
    pub method: CheckMethod,
    /// The finite subfamily `S'` witnessing the identity for the family of
    /// all lattice ideals, as lattice indices.
    pub witness_subset: Vec<usize>,
    pub families_checked: usize,
    pub certificate: String,
    pub counterexample: Option<StarCounterexample>,
}

/// Sweeps every nonempty subset `F` of the lattice and checks
/// `√(∩F) = ∩_{I in F} √I`, i.e. the star identity with `S' = F` itself.
/// Intended for lattices of at most [`DEFAULT_STAR_CAP`] ideals.
pub fn star_check_exhaustive(lattice: &IdealLattice) -> StarCheckResult {
    let ring = lattice.ring();
    let count = lattice.len();
    assert!(count <= 28, "exhaustive sweep is capped well below 2^28 subsets");
    let sets: Vec<ElementSet> = lattice.ideals().iter().map(|i| *i.member_set()).collect();
    let mut cache = RadicalCache::new(ring);
    let radicals: Vec<ElementSet> = sets.iter().map(|&s| cache.radical(s)).collect();
    let full = ElementSet::from_indices(&ring.elements().collect::<Vec<_>>());

    for mask in 1usize..(1 << count) {
        let mut inter = full;
        let mut rhs = full;
        for (i, (&set, &rad)) in sets.iter().zip(&radicals).enumerate() {
            if mask >> i & 1 == 1 {
                inter = inter.intersection(&set);
                rhs = rhs.intersection(&rad);
            }
        }
        let lhs = cache.radical(inter);
        if lhs != rhs {
            let subset: Vec<usize> = (0..count).filter(|&i| mask >> i & 1 == 1).collect();
            return StarCheckResult {
                ring: ring.label().to_string(),
                satisfied: false,
                method: CheckMethod::Exhaustive,
                witness_subset: vec![],
                families_checked: mask,
                certificate: String::new(),
                counterexample: Some(StarCounterexample {
                    subset,
                    radical_of_intersection: Ideal::from_set_unchecked(ring, lhs),
                    intersection_of_radicals: Ideal::from_set_unchecked(ring, rhs),
                }),
            };
        }
    }
    StarCheckResult {
        ring: ring.label().to_string(),
        satisfied: true,
        method: CheckMethod::Exhaustive,
        witness_subset: (0..count).collect(),
        families_checked: (1 << count) - 1,
        certificate: format!(
            "all {} nonempty subsets of the {count}-ideal lattice satisfy the radical identity",
            (1usize << count) - 1
        ),
        counterexample: None,
    }
}

/// Certifies the star property by verifying `√(I ∩ J) = √I ∩ √J` for every
/// pair of lattice ideals; finite induction then yields the identity for
/// every finite family, and distinct-member subsets cover arbitrary index
/// sets over the finite lattice.
pub fn star_check_certified(lattice: &IdealLattice) -> StarCheckResult {
    let ring = lattice.ring();
    let count = lattice.len();
    let sets: Vec<ElementSet> = lattice.ideals().iter().map(|i| *i.member_set()).collect();
    let mut cache = RadicalCache::new(ring);
    let radicals: Vec<ElementSet> = sets.iter().map(|&s| cache.radical(s)).collect();

    let mut pairs = 0usize;
    for i in 0..count {
        for j in i..count {
            pairs += 1;
            let lhs = cache.radical(sets[i].intersection(&sets[j]));
            let rhs = radicals[i].intersection(&radicals[j]);
            if lhs != rhs {
                return StarCheckResult {
                    ring: ring.label().to_string(),
                    satisfied: false,
                    method: CheckMethod::Certified,
                    witness_subset: vec![],
                    families_checked: pairs,
                    certificate: String::new(),
                    counterexample: Some(StarCounterexample {
                        subset: vec![i, j],
                        radical_of_intersection: Ideal::from_set_unchecked(ring, lhs),
                        intersection_of_radicals: Ideal::from_set_unchecked(ring, rhs),
                    }),
                };
            }
        }
    }
    StarCheckResult {
        ring: ring.label().to_string(),
        satisfied: true,
        method: CheckMethod::Certified,
        witness_subset: (0..count).collect(),
        families_checked: pairs,
        certificate: format!(
            "finite lattice of {count} ideals; pairwise radical identity verified for all \
             {pairs} pairs; finite induction extends it to every family"
        ),
        counterexample: None,
    }
}

/// Star check on a precomputed lattice: exhaustive when the lattice has at
/// most `cap` ideals, certified otherwise.
pub fn star_check_lattice(lattice: &IdealLattice, cap: usize) -> StarCheckResult {
    if lattice.len() <= cap {
        star_check_exhaustive(lattice)
    } else {
        star_check_certified(lattice)
    }
}

/// Decides the star property of a finite ring. Enumerates the lattice
/// (aborting with a resource error past the default lattice cap), then
/// dispatches on `cap` as in [`star_check_lattice`].
pub fn star_check_finite(ring: &Ring, cap: usize) -> Result<StarCheckResult> {
    let lattice = enumerate_ideals(ring, crate::ideal::DEFAULT_LATTICE_CAP)?;
    Ok(star_check_lattice(&lattice, cap))
}

/// Per-element minimal uniform exponents for a family.
#[derive(Clone, Debug, Serialize)]
pub struct A2Exponents {
    /// For element `a`: the least `n` with `a^n in Q` for every member `Q`
    /// whose radical contains `a` (1 when no member applies).
    pub per_element: Vec<usize>,
    /// The family's uniform exponent: the maximum over all elements.
    pub uniform: usize,
}

fn a2_exponents_over(ring: &Ring, members: &[Ideal]) -> A2Exponents {
    let per_element: Vec<usize> = ring
        .elements()
        .map(|a| {
            let orbit = ring.power_orbit(a);
            members
                .iter()
                .filter_map(|q| {
                    // minimal k with a^k in Q, when a lies in the radical
                    orbit.iter().position(|&p| q.contains(p)).map(|k| k + 1)
                })
                .max()
                .unwrap_or(1)
        })
        .collect();
    let uniform = per_element.iter().copied().max().unwrap_or(1);
    A2Exponents {
        per_element,
        uniform,
    }
}

/// Minimal uniform exponent of a nonempty family: for each element `a`, the
/// least `n` such that `a in √Q` forces `a^n in Q` for every member `Q`.
/// Exists and is at most the ring order, since exponent sets are upward
/// closed and power sequences repeat within `order` steps.
pub fn a2_minimal_exponent(family: &IdealFamily) -> Result<A2Exponents> {
    if family.is_empty() {
        return Err(Error::InvalidArgument(
            "uniform exponent of an empty family is undefined".into(),
        ));
    }
    Ok(a2_exponents_over(family.ring(), family.members()))
}

/// Zero-intersection, all-primary and uniform-exponent facts for a family.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyReport {
    pub family: String,
    pub member_count: usize,
    /// Whether the family intersects to the zero ideal.
    pub zero_intersection: bool,
    pub intersection: Ideal,
    pub all_primary: bool,
    pub uniform_exponent: usize,
}

/// Reports whether the family intersects to zero, whether all members are
/// primary, and its uniform exponent.
pub fn family_report(family: &IdealFamily) -> Result<FamilyReport> {
    let ring = family.ring();
    let intersection = intersect_ideals(ring, family.members())?;
    let exponents = a2_exponents_over(ring, family.members());
    Ok(FamilyReport {
        family: family.label().to_string(),
        member_count: family.len(),
        zero_intersection: intersection.is_zero_ideal(),
        intersection,
        all_primary: family.members().iter().all(|m| m.is_primary()),
        uniform_exponent: exponents.uniform,
    })
}

/// Two independent evaluations of the uniform-exponent condition: direct
/// exponent search versus the subfamily radical identity.
#[derive(Clone, Debug, Serialize)]
pub struct A2Equivalence {
    pub family: String,
    pub member_count: usize,
    pub uniform_exponent_exists: bool,
    pub uniform_exponent: usize,
    pub radical_identity_holds: bool,
    pub method: CheckMethod,
    pub agree: bool,
    pub failing_subset: Option<Vec<usize>>,
}

/// Evaluates both sides of the equivalence "the family admits a uniform
/// exponent iff every subfamily `Γ` satisfies `√(∩Γ) = ∩_{Q in Γ} √Q`". The
/// subfamily side is swept exhaustively for families of at most `cap`
/// members and certified through the pairwise identity otherwise.
pub fn a2_equiv_radical_identity(family: &IdealFamily, cap: usize) -> Result<A2Equivalence> {
    let ring = family.ring();
    let exponents = a2_exponents_over(ring, family.members());
    // re-check the constructed exponent: a in √Q must force a^n in Q
    let uniform_ok = ring.elements().all(|a| {
        family.members().iter().all(|q| {
            let orbit = ring.power_orbit(a);
            let applicable = orbit.iter().any(|&p| q.contains(p));
            if !applicable {
                return true;
            }
            let n = exponents.uniform.min(orbit.len());
            q.contains(orbit[n - 1])
        })
    });

    let sets: Vec<ElementSet> = family.members().iter().map(|m| *m.member_set()).collect();
    let mut cache = RadicalCache::new(ring);
    let radicals: Vec<ElementSet> = sets.iter().map(|&s| cache.radical(s)).collect();
    let full = ElementSet::from_indices(&ring.elements().collect::<Vec<_>>());

    let count = sets.len();
    let mut failing_subset = None;
    let method = if count <= cap {
        for mask in 1usize..(1 << count) {
            let mut inter = full;
            let mut rhs = full;
            for i in 0..count {
                if mask >> i & 1 == 1 {
                    inter = inter.intersection(&sets[i]);
                    rhs = rhs.intersection(&radicals[i]);
                }
            }
            if cache.radical(inter) != rhs {
                failing_subset = Some((0..count).filter(|&i| mask >> i & 1 == 1).collect());
                break;
            }
        }
        CheckMethod::Exhaustive
    } else {
        'outer: for i in 0..count {
            for j in i..count {
                let lhs = cache.radical(sets[i].intersection(&sets[j]));
                if lhs != radicals[i].intersection(&radicals[j]) {
                    failing_subset = Some(vec![i, j]);
                    break 'outer;
                }
            }
        }
        CheckMethod::Certified
    };

    let identity = failing_subset.is_none();
    Ok(A2Equivalence {
        family: family.label().to_string(),
        member_count: count,
        uniform_exponent_exists: uniform_ok,
        uniform_exponent: exponents.uniform,
        radical_identity_holds: identity,
        method,
        agree: uniform_ok == identity,
        failing_subset,
    })
}

/// Independent evaluations of the three zero-dimensionality conditions.
#[derive(Clone, Debug, Serialize)]
pub struct ZeroDimEquivalence {
    pub ring: String,
    pub krull_dimension_zero: bool,
    pub a2_all_ideals: bool,
    pub a2_all_ideals_exponent: usize,
    pub a2_primary_ideals: bool,
    pub a2_primary_ideals_exponent: usize,
    pub agree: bool,
}

/// Evaluates independently: (1) Krull dimension zero, (2) the
/// uniform-exponent condition for the family of all ideals, (3) the same for
/// the family of all primary ideals.
pub fn zero_dim_equivalence(lattice: &IdealLattice, cap: usize) -> Result<ZeroDimEquivalence> {
    let dim_zero = krull_dimension(lattice) == 0;
    let all = a2_equiv_radical_identity(&IdealFamily::all_ideals(lattice), cap)?;
    let primary = a2_equiv_radical_identity(&IdealFamily::primary_ideals(lattice), cap)?;
    let a2_all = all.uniform_exponent_exists && all.radical_identity_holds;
    let a2_primary = primary.uniform_exponent_exists && primary.radical_identity_holds;
    Ok(ZeroDimEquivalence {
        ring: lattice.ring().label().to_string(),
        krull_dimension_zero: dim_zero,
        a2_all_ideals: a2_all,
        a2_all_ideals_exponent: all.uniform_exponent,
        a2_primary_ideals: a2_primary,
        a2_primary_ideals_exponent: primary.uniform_exponent,
        agree: dim_zero == a2_all && a2_all == a2_primary,
    })
}

/// Result of the prime-family condition, under both quantifier readings.
#[derive(Clone, Debug, Serialize)]
pub struct PrimeFamilyReport {
    pub ring: String,
    pub prime_count: usize,
    pub radical_of_intersection: Ideal,
    /// Smallest subfamily `Γ` (positions in the canonical prime list) whose
    /// intersection equals `√(∩ of all primes)`.
    pub gamma: Vec<usize>,
    pub gamma_is_minimal_primes: bool,
    /// The family of all primes satisfies the identity with finite `Γ`.
    pub full_family_ok: bool,
    /// Every subfamily of primes satisfies the identity.
    pub all_subfamilies_ok: bool,
}

/// Computes `√(∩ of all primes)` and searches, smallest subsets first, for a
/// minimal finite `Γ` with `∩Γ` equal to it. Both readings of the condition
/// are evaluated: the full prime family, and every prime subfamily (an
/// intersection of primes is always radical, so each subfamily is its own
/// witness).
pub fn prime_family_condition(lattice: &IdealLattice) -> Result<PrimeFamilyReport> {
    let ring = lattice.ring();
    let primes: Vec<&Ideal> = lattice
        .prime_indices()
        .into_iter()
        .map(|i| lattice.ideal(i))
        .collect();
    let count = primes.len();
    let full = ElementSet::from_indices(&ring.elements().collect::<Vec<_>>());

    let inter_of = |mask: usize| -> ElementSet {
        let mut inter = full;
        for (i, p) in primes.iter().enumerate() {
            if mask >> i & 1 == 1 {
                inter = inter.intersection(p.member_set());
            }
        }
        inter
    };

    let total = inter_of((1 << count) - 1);
    let mut cache = RadicalCache::new(ring);
    let target = cache.radical(total);

    // smallest-first subset search for the minimal Γ
    let mut gamma: Option<Vec<usize>> = None;
    'size: for size in 0..=count {
        for mask in 0usize..(1 << count) {
            if (mask.count_ones() as usize) == size && inter_of(mask) == target {
                gamma = Some((0..count).filter(|&i| mask >> i & 1 == 1).collect());
                break 'size;
            }
        }
    }
    let gamma = gamma.expect("the full family always matches its own intersection");
    let full_family_ok = inter_of(gamma.iter().fold(0usize, |m, &i| m | 1 << i)) == target;

    let minimal_primes: Vec<usize> = {
        let min_idx = lattice.minimal_prime_indices();
        lattice
            .prime_indices()
            .iter()
            .enumerate()
            .filter(|(_, idx)| min_idx.contains(idx))
            .map(|(pos, _)| pos)
            .collect()
    };

    let mut all_subfamilies_ok = true;
    for mask in 0usize..(1 << count) {
        let inter = inter_of(mask);
        if cache.radical(inter) != inter {
            all_subfamilies_ok = false;
            break;
        }
    }

    Ok(PrimeFamilyReport {
        ring: ring.label().to_string(),
        prime_count: count,
        radical_of_intersection: Ideal::from_set_unchecked(ring, target),
        gamma_is_minimal_primes: gamma == minimal_primes,
        gamma,
        full_family_ok,
        all_subfamilies_ok,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Consistent,
    Refuted,
}

/// One checked statement: implications are materialized as "antecedent true
/// forces consequent true"; equivalences as agreement of independently
/// computed sides. Refutations carry a machine-re-checkable witness.
#[derive(Clone, Debug, Serialize)]
pub struct StatementRecord {
    pub id: &'static str,
    pub statement: &'static str,
    pub verdict: Verdict,
    pub vacuous: bool,
    pub antecedent: Option<bool>,
    pub consequent: Option<bool>,
    pub detail: String,
    pub witness: Option<serde_json::Value>,
}

/// The per-ring battery verdict over the whole statement catalog.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub ring: String,
    pub order: usize,
    pub degenerate: bool,
    pub consistent: bool,
    pub statements: Vec<StatementRecord>,
}

impl TheoremReport {
    pub fn refutations(&self) -> impl Iterator<Item = &StatementRecord> {
        self.statements
            .iter()
            .filter(|s| s.verdict == Verdict::Refuted)
    }
}

/// Knobs for [`theorem_battery`].
#[derive(Clone, Copy, Debug)]
pub struct BatteryOptions {
    /// Exhaustive star sweep threshold (lattice size).
    pub star_cap: usize,
    /// Lattice enumeration abort threshold.
    pub lattice_cap: usize,
    /// Skip sampled product rings larger than this.
    pub max_product_order: usize,
}

impl Default for BatteryOptions {
    fn default() -> Self {
        BatteryOptions {
            star_cap: DEFAULT_STAR_CAP,
            lattice_cap: crate::ideal::DEFAULT_LATTICE_CAP,
            max_product_order: 64,
        }
    }
}

fn implication(
    id: &'static str,
    statement: &'static str,
    antecedent: bool,
    consequent: bool,
    detail: String,
    witness: Option<serde_json::Value>,
) -> StatementRecord {
    let refuted = antecedent && !consequent;
    StatementRecord {
        id,
        statement,
        verdict: if refuted {
            Verdict::Refuted
        } else {
            Verdict::Consistent
        },
        vacuous: !antecedent,
        antecedent: Some(antecedent),
        consequent: Some(consequent),
        detail,
        witness: if refuted { witness } else { None },
    }
}

fn equivalence(
    id: &'static str,
    statement: &'static str,
    agree: bool,
    vacuous: bool,
    detail: String,
    witness: Option<serde_json::Value>,
) -> StatementRecord {
    StatementRecord {
        id,
        statement,
        verdict: if agree {
            Verdict::Consistent
        } else {
            Verdict::Refuted
        },
        vacuous,
        antecedent: None,
        consequent: None,
        detail,
        witness: if agree { None } else { witness },
    }
}

/// Runs the full statement catalog on one ring: chain conditions, star
/// property, closure under quotients, products and localizations, the
/// uniform-exponent equivalences, the regularity equivalences, primary
/// decomposability, and the prime-family condition.
pub fn theorem_battery(ring: &Ring, opts: &BatteryOptions) -> Result<TheoremReport> {
    let lattice = enumerate_ideals(ring, opts.lattice_cap)?;
    let star = star_check_lattice(&lattice, opts.star_cap);
    let dcc = dcc_radical_ideals(&lattice);
    let dim = krull_dimension(&lattice);
    let reduced = is_reduced(ring);
    let vnr = is_vnr(ring);
    let pi_regular = is_pi_regular(ring);
    let rad_injective = radical_injective(&lattice);
    let domain = ring.is_domain();
    let field = ring.is_field();
    let degenerate = ring.is_zero_ring();
    // a finite lattice is itself the verification of both chain conditions
    let artinian = true;
    let noetherian = true;
    let chain_note = format!("finite lattice of {} ideals", lattice.len());

    let mut statements = Vec::new();

    statements.push(implication(
        "Thm1",
        "d.c.c. on radical ideals implies the star property",
        dcc.holds,
        star.satisfied,
        format!(
            "{} radical ideals, longest descending chain {}; star {}",
            dcc.radical_ideal_count,
            dcc.longest_chain,
            if star.satisfied { "satisfied" } else { "failed" }
        ),
        star.counterexample.as_ref().map(|c| json!(c)),
    ));

    statements.push(implication(
        "Cor1",
        "every Artinian ring satisfies the star property",
        artinian,
        star.satisfied,
        format!("Artinian: {chain_note}"),
        star.counterexample.as_ref().map(|c| json!(c)),
    ));

    statements.push(implication(
        "Thm2",
        "an integral domain with the star property is a field",
        domain && star.satisfied,
        field,
        format!("domain: {domain}, star: {}, field: {field}", star.satisfied),
        Some(json!({ "order": ring.order() })),
    ));

    // star property on every homomorphic image, realized as the quotient
    // projections (first isomorphism theorem)
    let mut quotient_failure: Option<serde_json::Value> = None;
    let mut quotients_checked = 0usize;
    for ideal in lattice.ideals() {
        let (q, _hom) = quotient_ring(ring, ideal)?;
        let q_lattice = enumerate_ideals(&q, opts.lattice_cap)?;
        let sub = star_check_certified(&q_lattice);
        quotients_checked += 1;
        if !sub.satisfied {
            quotient_failure = Some(json!({
                "quotient": q.label(),
                "counterexample": sub.counterexample,
            }));
            break;
        }
    }
    let quotient_detail = format!("{quotients_checked} quotient(s) re-checked (certified)");
    statements.push(implication(
        "Lem1",
        "the star property passes to every homomorphic image",
        star.satisfied,
        quotient_failure.is_none(),
        quotient_detail.clone(),
        quotient_failure.clone(),
    ));
    statements.push(implication(
        "Cor2",
        "the star property passes to every quotient ring",
        star.satisfied,
        quotient_failure.is_none(),
        quotient_detail,
        quotient_failure,
    ));

    // star property on sampled products
    let mut product_failure: Option<serde_json::Value> = None;
    let mut products_checked: Vec<String> = Vec::new();
    for n in [2usize, 3] {
        let other = residue_ring(n)?;
        if ring.order() * n > opts.max_product_order {
            continue;
        }
        let prod = product_ring(ring, &other)?;
        let p_lattice = enumerate_ideals(&prod, opts.lattice_cap)?;
        let sub = star_check_certified(&p_lattice);
        products_checked.push(prod.label().to_string());
        if !sub.satisfied {
            product_failure = Some(json!({
                "product": prod.label(),
                "counterexample": sub.counterexample,
            }));
            break;
        }
    }
    statements.push(implication(
        "Prop1",
        "a product of two rings with the star property satisfies it",
        star.satisfied && !products_checked.is_empty(),
        product_failure.is_none(),
        if products_checked.is_empty() {
            format!(
                "no sampled product fits the order cap {}",
                opts.max_product_order
            )
        } else {
            format!("sampled products: {}", products_checked.join(", "))
        },
        product_failure,
    ));

    // a primary family with zero intersection and a uniform exponent exists
    let primary_family = IdealFamily::primary_ideals(&lattice);
    let primary_report = family_report(&primary_family)?;
    let embeddable = primary_report.zero_intersection
        && primary_report.all_primary
        && primary_report.uniform_exponent <= ring.order().max(1);
    statements.push(equivalence(
        "Thm3",
        "a primary family with zero intersection and a uniform exponent exists \
         (zero-dimensional embeddability criterion)",
        embeddable,
        primary_family.is_empty(),
        format!(
            "family of {} primary ideals, intersection zero: {}, uniform exponent {}",
            primary_report.member_count,
            primary_report.zero_intersection,
            primary_report.uniform_exponent
        ),
        Some(json!(primary_report)),
    ));

    // uniform exponent iff subfamily radical identity, on both canonical families
    let a2_all = a2_equiv_radical_identity(&IdealFamily::all_ideals(&lattice), opts.star_cap)?;
    let a2_primary = a2_equiv_radical_identity(&primary_family, opts.star_cap)?;
    statements.push(equivalence(
        "Thm4",
        "a family admits a uniform exponent iff every subfamily satisfies the \
         radical-intersection identity",
        a2_all.agree && a2_primary.agree,
        false,
        format!(
            "all ideals: exponent {} / identity {}; primary ideals: exponent {} / identity {}",
            a2_all.uniform_exponent,
            a2_all.radical_identity_holds,
            a2_primary.uniform_exponent,
            a2_primary.radical_identity_holds
        ),
        Some(json!({ "all_ideals": a2_all, "primary_ideals": a2_primary })),
    ));

    let zero_dim = zero_dim_equivalence(&lattice, opts.star_cap)?;
    statements.push(equivalence(
        "Thm5",
        "zero-dimensionality, the uniform-exponent condition for all ideals, and \
         the same for all primary ideals are equivalent",
        zero_dim.agree,
        false,
        format!(
            "dim 0: {}, all-ideal exponent {}, primary exponent {}",
            zero_dim.krull_dimension_zero,
            zero_dim.a2_all_ideals_exponent,
            zero_dim.a2_primary_ideals_exponent
        ),
        Some(json!(zero_dim)),
    ));

    statements.push(implication(
        "Prop2",
        "the star property forces the uniform-exponent condition for every family",
        star.satisfied,
        zero_dim.a2_all_ideals && zero_dim.a2_primary_ideals,
        format!(
            "all-ideal family: {}, primary family: {}",
            zero_dim.a2_all_ideals, zero_dim.a2_primary_ideals
        ),
        Some(json!(zero_dim)),
    ));

    statements.push(implication(
        "Cor3",
        "the star property forces Krull dimension zero",
        star.satisfied,
        dim == 0,
        format!("krull dimension {dim}"),
        Some(json!({ "krull_dimension": dim })),
    ));

    let vnr_eq = vnr_equivalence_report(&lattice)?;
    statements.push(equivalence(
        "Thm6",
        "regularity, zero-dimensional reducedness, local fields, all-radical \
         ideals and all-idempotent ideals are equivalent",
        vnr_eq.agree,
        false,
        vnr_eq
            .conditions
            .iter()
            .map(|c| format!("{}: {}", c.id, c.holds))
            .collect::<Vec<_>>()
            .join(", "),
        Some(json!(vnr_eq)),
    ));

    statements.push(implication(
        "Cor4",
        "a reduced ring with the star property is von Neumann regular",
        reduced && star.satisfied,
        vnr,
        format!("reduced: {reduced}, vnr: {vnr}"),
        Some(json!({ "reduced": reduced, "vnr": vnr })),
    ));

    statements.push(implication(
        "Lem2",
        "with the star property, regularity or an injective radical map forces \
         the ring to be Artinian",
        star.satisfied && (vnr || rad_injective),
        artinian,
        format!("vnr: {vnr}, radical injective: {rad_injective}; {chain_note}"),
        None,
    ));

    // Laskerian verification: every proper ideal decomposes
    let mut laskerian_failure: Option<serde_json::Value> = None;
    let mut proper_ideals = 0usize;
    for ideal in lattice.ideals().iter().filter(|i| i.is_proper()) {
        proper_ideals += 1;
        match primary_decomposition(&lattice, ideal) {
            Ok(dec) => {
                if let Err(e) = dec.verify() {
                    laskerian_failure = Some(json!({
                        "ideal": ideal,
                        "error": e.to_string(),
                    }));
                    break;
                }
            }
            Err(e) => {
                laskerian_failure = Some(json!({
                    "ideal": ideal,
                    "error": e.to_string(),
                }));
                break;
            }
        }
    }
    let laskerian = laskerian_failure.is_none();
    let prime_family = prime_family_condition(&lattice)?;
    let prime_ok = prime_family.full_family_ok && prime_family.all_subfamilies_ok;
    statements.push(equivalence(
        "Thm7",
        "in a Laskerian ring the star property is equivalent to the prime-family \
         condition",
        !laskerian || (star.satisfied == prime_ok),
        !laskerian,
        format!(
            "laskerian: {laskerian} ({proper_ideals} proper ideals decomposed), star: {}, \
             prime-family condition: {prime_ok} (gamma = minimal primes: {})",
            star.satisfied, prime_family.gamma_is_minimal_primes
        ),
        Some(json!({
            "laskerian_failure": laskerian_failure,
            "prime_family": prime_family,
        })),
    ));

    let five_way = [
        ("star", star.satisfied),
        ("zero_dimensional", dim == 0),
        ("artinian", artinian),
        ("pi_regular", pi_regular),
        ("prime_family", prime_ok),
    ];
    let all_equal = five_way.iter().all(|&(_, v)| v == five_way[0].1);
    statements.push(equivalence(
        "Thm8",
        "for Noetherian rings: star property, zero-dimensionality, Artinian, \
         π-regular and the prime-family condition are equivalent",
        !noetherian || all_equal,
        !noetherian,
        five_way
            .iter()
            .map(|(n, v)| format!("{n}: {v}"))
            .collect::<Vec<_>>()
            .join(", "),
        Some(json!({
            "star": five_way[0].1,
            "zero_dimensional": five_way[1].1,
            "artinian": five_way[2].1,
            "pi_regular": five_way[3].1,
            "prime_family": five_way[4].1,
        })),
    ));

    // localizations at every prime re-pass the star check; extensions of the
    // prime family commute with intersection
    let mut localization_failure: Option<serde_json::Value> = None;
    let mut localizations_checked = 0usize;
    let prime_idx = lattice.prime_indices();
    for &p in &prime_idx {
        let prime = lattice.ideal(p);
        let (localized, hom) = localize_at_prime(ring, prime)?;
        let loc_lattice = enumerate_ideals(&localized, opts.lattice_cap)?;
        localizations_checked += 1;

        let sub = star_check_certified(&loc_lattice);
        if !sub.satisfied {
            localization_failure = Some(json!({
                "localization": localized.label(),
                "counterexample": sub.counterexample,
            }));
            break;
        }
        let maximal_count = loc_lattice
            .ideals()
            .iter()
            .filter(|i| loc_lattice.is_maximal_in_lattice(i))
            .count();
        if maximal_count != 1 {
            localization_failure = Some(json!({
                "localization": localized.label(),
                "maximal_ideals": maximal_count,
            }));
            break;
        }
        // ∩ of extended primes must equal the extension of ∩ of primes
        let extended: Vec<Ideal> = prime_idx
            .iter()
            .map(|&q| extend_ideal(&hom, lattice.ideal(q)))
            .collect::<Result<_>>()?;
        let meet_of_extensions = intersect_ideals(&localized, &extended)?;
        let total_primes = intersect_ideals(
            ring,
            &prime_idx
                .iter()
                .map(|&q| lattice.ideal(q).clone())
                .collect::<Vec<_>>(),
        )?;
        let extension_of_total = extend_ideal(&hom, &total_primes)?;
        if meet_of_extensions.member_set() != extension_of_total.member_set() {
            localization_failure = Some(json!({
                "localization": localized.label(),
                "intersection_of_extensions": meet_of_extensions,
                "extension_of_intersection": extension_of_total,
            }));
            break;
        }
    }
    statements.push(implication(
        "Cor5",
        "in a Laskerian ring with the star property every localization satisfies \
         the star property",
        laskerian && star.satisfied && !prime_idx.is_empty(),
        localization_failure.is_none(),
        format!(
            "{localizations_checked} localization(s) re-checked: star (certified), \
             unique maximal ideal, extension identity over the prime family"
        ),
        localization_failure,
    ));

    let consistent = statements.iter().all(|s| s.verdict == Verdict::Consistent);
    Ok(TheoremReport {
        ring: ring.label().to_string(),
        order: ring.order(),
        degenerate,
        consistent,
        statements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{generate_ideal, DEFAULT_LATTICE_CAP};
    use crate::ring::poly_quotient_ring;

    fn lattice_of(ring: &Ring) -> IdealLattice {
        enumerate_ideals(ring, DEFAULT_LATTICE_CAP).unwrap()
    }

    #[test]
    fn star_check_z12_exhaustive_sweeps_63_families() {
        let result = star_check_finite(&residue_ring(12).unwrap(), DEFAULT_STAR_CAP).unwrap();
        assert!(result.satisfied);
        assert_eq!(result.method, CheckMethod::Exhaustive);
        assert_eq!(result.families_checked, 63);
        assert_eq!(result.witness_subset, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn star_check_product_sweeps_511_families() {
        let r = product_ring(&residue_ring(4).unwrap(), &residue_ring(9).unwrap()).unwrap();
        let result = star_check_finite(&r, DEFAULT_STAR_CAP).unwrap();
        assert!(result.satisfied);
        assert_eq!(result.method, CheckMethod::Exhaustive);
        assert_eq!(result.families_checked, 511);
    }

    #[test]
    fn star_check_methods_agree() {
        for ring in [
            residue_ring(12).unwrap(),
            residue_ring(8).unwrap(),
            poly_quotient_ring(2, &[0, 0, 1]).unwrap(),
            product_ring(&residue_ring(4).unwrap(), &residue_ring(9).unwrap()).unwrap(),
        ] {
            let lattice = lattice_of(&ring);
            let exhaustive = star_check_exhaustive(&lattice);
            let certified = star_check_certified(&lattice);
            assert_eq!(exhaustive.satisfied, certified.satisfied, "{}", ring.label());
        }
    }

    #[test]
    fn star_check_singleton_family_and_zero_ring() {
        let zero = residue_ring(1).unwrap();
        let result = star_check_finite(&zero, DEFAULT_STAR_CAP).unwrap();
        assert!(result.satisfied);
        assert_eq!(result.families_checked, 1);
    }

    #[test]
    fn a2_exponent_spot_values() {
        // Z/8, family {(0)}: 2^3 = 0 and 6^3 = 0 force uniform n = 3
        let z8 = residue_ring(8).unwrap();
        let zero = generate_ideal(&z8, &[]).unwrap();
        let family = IdealFamily::new(&z8, vec![zero], "zero only").unwrap();
        let exps = a2_minimal_exponent(&family).unwrap();
        assert_eq!(exps.per_element[2], 3);
        assert_eq!(exps.uniform, 3);

        // any family of radical ideals has uniform n = 1
        let z6 = residue_ring(6).unwrap();
        let lattice = lattice_of(&z6);
        let family = IdealFamily::all_ideals(&lattice);
        assert_eq!(a2_minimal_exponent(&family).unwrap().uniform, 1);

        // Z/12, all ideals: worst case 6^2 = 0 against (0)
        let z12 = residue_ring(12).unwrap();
        let lattice = lattice_of(&z12);
        let family = IdealFamily::all_ideals(&lattice);
        let exps = a2_minimal_exponent(&family).unwrap();
        assert_eq!(exps.uniform, 2);
        assert_eq!(exps.per_element[6], 2);
    }

    #[test]
    fn a2_rejects_empty_family() {
        let z6 = residue_ring(6).unwrap();
        let family = IdealFamily::new(&z6, vec![], "empty").unwrap();
        assert!(matches!(
            a2_minimal_exponent(&family),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn family_report_spot_values() {
        let z12 = residue_ring(12).unwrap();
        let four = generate_ideal(&z12, &[4]).unwrap();
        let three = generate_ideal(&z12, &[3]).unwrap();
        let family = IdealFamily::new(&z12, vec![four, three], "four and three").unwrap();
        let report = family_report(&family).unwrap();
        assert!(report.zero_intersection);
        assert!(report.all_primary);
        assert_eq!(report.uniform_exponent, 2);

        let two = generate_ideal(&z12, &[2]).unwrap();
        let family = IdealFamily::new(&z12, vec![two], "two only").unwrap();
        let report = family_report(&family).unwrap();
        assert!(!report.zero_intersection);

        let gf4 = poly_quotient_ring(2, &[1, 1, 1]).unwrap();
        let zero = generate_ideal(&gf4, &[]).unwrap();
        let family = IdealFamily::new(&gf4, vec![zero], "zero only").unwrap();
        let report = family_report(&family).unwrap();
        assert!(report.zero_intersection && report.all_primary);
        assert_eq!(report.uniform_exponent, 1);
    }

    #[test]
    fn family_construction_deduplicates() {
        let z12 = residue_ring(12).unwrap();
        let a = generate_ideal(&z12, &[4]).unwrap();
        let b = generate_ideal(&z12, &[8]).unwrap(); // same ideal as (4)
        let family = IdealFamily::new(&z12, vec![a, b], "dup").unwrap();
        assert_eq!(family.len(), 1);
        assert_eq!(family.duplicates_removed(), 1);
    }

    #[test]
    fn a2_equivalence_agrees_on_small_rings() {
        for ring in [residue_ring(12).unwrap(), residue_ring(8).unwrap()] {
            let lattice = lattice_of(&ring);
            let eq =
                a2_equiv_radical_identity(&IdealFamily::all_ideals(&lattice), DEFAULT_STAR_CAP)
                    .unwrap();
            assert!(eq.agree, "{}", ring.label());
            assert!(eq.uniform_exponent_exists && eq.radical_identity_holds);
            assert_eq!(eq.method, CheckMethod::Exhaustive);
        }
        // singleton family is trivially two-sided
        let z12 = residue_ring(12).unwrap();
        let four = generate_ideal(&z12, &[4]).unwrap();
        let family = IdealFamily::new(&z12, vec![four], "singleton").unwrap();
        let eq = a2_equiv_radical_identity(&family, DEFAULT_STAR_CAP).unwrap();
        assert!(eq.agree && eq.radical_identity_holds);
    }

    #[test]
    fn zero_dim_equivalence_three_way() {
        for ring in [
            residue_ring(12).unwrap(),
            poly_quotient_ring(2, &[1, 1, 1]).unwrap(),
            product_ring(&residue_ring(4).unwrap(), &residue_ring(9).unwrap()).unwrap(),
        ] {
            let report = zero_dim_equivalence(&lattice_of(&ring), DEFAULT_STAR_CAP).unwrap();
            assert!(report.agree, "{}", ring.label());
            assert!(report.krull_dimension_zero);
        }
    }

    #[test]
    fn prime_family_z12_gamma_is_both_primes() {
        let report = prime_family_condition(&lattice_of(&residue_ring(12).unwrap())).unwrap();
        assert_eq!(report.prime_count, 2);
        // √((2) ∩ (3)) = √((6)) = (6) = (2) ∩ (3): both primes are needed
        assert_eq!(report.gamma, vec![0, 1]);
        assert!(report.gamma_is_minimal_primes);
        assert!(report.full_family_ok && report.all_subfamilies_ok);
        assert_eq!(
            report.radical_of_intersection.members().collect::<Vec<_>>(),
            vec![0, 6]
        );
    }

    #[test]
    fn prime_family_on_fields_and_z4() {
        let gf4 = poly_quotient_ring(2, &[1, 1, 1]).unwrap();
        let report = prime_family_condition(&lattice_of(&gf4)).unwrap();
        assert_eq!(report.prime_count, 1);
        assert_eq!(report.gamma, vec![0]);
        assert!(report.gamma_is_minimal_primes);

        let z4 = residue_ring(4).unwrap();
        let report = prime_family_condition(&lattice_of(&z4)).unwrap();
        assert_eq!(report.prime_count, 1);
        assert_eq!(report.gamma, vec![0]);
        assert!(report.full_family_ok && report.all_subfamilies_ok);
    }

    #[test]
    fn prime_family_on_zero_ring_is_empty_gamma() {
        let report = prime_family_condition(&lattice_of(&residue_ring(1).unwrap())).unwrap();
        assert_eq!(report.prime_count, 0);
        assert!(report.gamma.is_empty());
        assert!(report.full_family_ok && report.all_subfamilies_ok);
        assert!(report.gamma_is_minimal_primes);
    }

    #[test]
    fn battery_z12_all_consistent() {
        let report =
            theorem_battery(&residue_ring(12).unwrap(), &BatteryOptions::default()).unwrap();
        assert!(report.consistent);
        assert_eq!(report.statements.len(), 17);
        assert!(!report.degenerate);
        let ids: Vec<&str> = report.statements.iter().map(|s| s.id).collect();
        for id in [
            "Thm1", "Thm2", "Thm3", "Thm4", "Thm5", "Thm6", "Thm7", "Thm8", "Lem1", "Lem2",
            "Prop1", "Prop2", "Cor1", "Cor2", "Cor3", "Cor4", "Cor5",
        ] {
            assert!(ids.contains(&id), "missing {id}");
        }
    }

    #[test]
    fn battery_zero_ring_is_consistent_and_degenerate() {
        let report =
            theorem_battery(&residue_ring(1).unwrap(), &BatteryOptions::default()).unwrap();
        assert!(report.consistent);
        assert!(report.degenerate);
    }

    #[test]
    fn battery_z6_exercises_cor4_non_vacuously() {
        let report =
            theorem_battery(&residue_ring(6).unwrap(), &BatteryOptions::default()).unwrap();
        assert!(report.consistent);
        let cor4 = report.statements.iter().find(|s| s.id == "Cor4").unwrap();
        assert_eq!(cor4.antecedent, Some(true));
        assert_eq!(cor4.consequent, Some(true));
        assert!(!cor4.vacuous);
    }

    #[test]
    fn battery_statements_carry_witnesses_on_refutation() {
        let report =
            theorem_battery(&residue_ring(30).unwrap(), &BatteryOptions::default()).unwrap();
        assert!(report.consistent);
        for s in report.refutations() {
            assert!(s.witness.is_some(), "{} refuted without witness", s.id);
        }
    }
}
