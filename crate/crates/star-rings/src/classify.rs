//! Ring-level predicates and numeric invariants: reducedness, domain/field,
//! von Neumann regularity, π-regularity, Krull dimension, injectivity of the
//! radical map, and the descending chain condition on radical ideals.
//!
//! Every predicate that can fail reports the lexicographically least witness
//! in canonical element (or lattice) order, so reports are reproducible.

use serde::Serialize;

use crate::error::Result;
use crate::ideal::{enumerate_ideals, generate_ideal, Ideal, IdealLattice, DEFAULT_LATTICE_CAP};
use crate::ring::{localize_at_prime, Ring};

/// The nilradical: radical of the zero ideal.
pub fn nilradical(ring: &Ring) -> Ideal {
    generate_ideal(ring, &[])
        .expect("empty generator list is always valid")
        .radical()
}

/// Least nonzero nilpotent element, if any.
pub fn reduced_witness(ring: &Ring) -> Option<usize> {
    nilradical(ring).members().find(|&x| x != ring.zero())
}

pub fn is_reduced(ring: &Ring) -> bool {
    reduced_witness(ring).is_none()
}

/// Least `x` with no `y` satisfying `x^2 y = x`, if any.
pub fn vnr_witness(ring: &Ring) -> Option<usize> {
    ring.elements().find(|&x| {
        let sq = ring.mul(x, x);
        !ring.elements().any(|y| ring.mul(sq, y) == x)
    })
}

/// Von Neumann regularity: every `x` has `y` with `x^2 y = x`.
pub fn is_vnr(ring: &Ring) -> bool {
    vnr_witness(ring).is_none()
}

/// Minimal `n` with `a^n = (a^n)^2 a'` for some `a'`, per element. The
/// search is bounded by the power orbit (at most `order` distinct powers);
/// an exponent beyond it only revisits earlier values.
pub fn pi_regular_exponents(ring: &Ring) -> Vec<Option<usize>> {
    ring.elements()
        .map(|a| {
            let orbit = ring.power_orbit(a);
            (1..=orbit.len()).find(|&n| {
                let an = orbit[n - 1];
                let sq = ring.mul(an, an);
                ring.elements().any(|y| ring.mul(sq, y) == an)
            })
        })
        .collect()
}

/// Least element with no π-regularity exponent, if any.
pub fn pi_regular_witness(ring: &Ring) -> Option<usize> {
    pi_regular_exponents(ring)
        .iter()
        .position(|n| n.is_none())
}

pub fn is_pi_regular(ring: &Ring) -> bool {
    pi_regular_witness(ring).is_none()
}

/// Length of the longest strict chain of prime ideals, counted as the
/// number of strict inclusions. A ring without primes (the zero ring)
/// reports 0.
pub fn krull_dimension(lattice: &IdealLattice) -> usize {
    let primes = lattice.prime_indices();
    let mut best = vec![0usize; primes.len()];
    for i in 0..primes.len() {
        for j in 0..i {
            let (small, large) = (
                lattice.ideal(primes[j]).member_set(),
                lattice.ideal(primes[i]).member_set(),
            );
            if small != large && small.is_subset(large) {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// First pair of distinct lattice ideals with equal radicals, in canonical
/// order, if the radical map is not injective.
pub fn radical_injective_witness(lattice: &IdealLattice) -> Option<(Ideal, Ideal)> {
    let rad = lattice.radical_indices();
    for i in 0..lattice.len() {
        for j in i + 1..lattice.len() {
            if rad[i] == rad[j] {
                return Some((lattice.ideal(i).clone(), lattice.ideal(j).clone()));
            }
        }
    }
    None
}

pub fn radical_injective(lattice: &IdealLattice) -> bool {
    radical_injective_witness(lattice).is_none()
}

/// Outcome of the descending-chain check on the radical-ideal sublattice.
#[derive(Clone, Debug, Serialize)]
pub struct DccRadicalReport {
    pub holds: bool,
    pub radical_ideal_count: usize,
    /// Longest strictly descending chain, counted as strict inclusions.
    pub longest_chain: usize,
}

/// The d.c.c. for radical ideals, verified by enumerating the radical-ideal
/// sublattice (finite for a finite ring) and measuring its longest strictly
/// descending chain: every descending chain stabilizes within that bound.
pub fn dcc_radical_ideals(lattice: &IdealLattice) -> DccRadicalReport {
    let radicals: Vec<usize> = (0..lattice.len())
        .filter(|&i| lattice.ideal(i).is_radical_ideal())
        .collect();
    let mut best = vec![0usize; radicals.len()];
    for i in 0..radicals.len() {
        for j in 0..i {
            let (small, large) = (
                lattice.ideal(radicals[j]).member_set(),
                lattice.ideal(radicals[i]).member_set(),
            );
            if small != large && small.is_subset(large) {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    DccRadicalReport {
        holds: true,
        radical_ideal_count: radicals.len(),
        longest_chain: best.into_iter().max().unwrap_or(0),
    }
}

/// One side of the five-way regularity equivalence.
#[derive(Clone, Debug, Serialize)]
pub struct VnrCondition {
    pub id: &'static str,
    pub description: &'static str,
    pub holds: bool,
    pub witness: Option<String>,
}

/// Independent evaluation of the five classical characterizations of von
/// Neumann regularity, with agreement status.
#[derive(Clone, Debug, Serialize)]
pub struct VnrEquivalence {
    pub ring: String,
    pub conditions: Vec<VnrCondition>,
    pub agree: bool,
    pub first_disagreement: Option<(usize, usize)>,
}

/// Evaluates, independently of one another: (1) the `x^2 y = x` definition,
/// (2) zero-dimensional and reduced, (3) the localization at every prime is
/// a field, (4) every ideal is radical, (5) every ideal is idempotent.
pub fn vnr_equivalence_report(lattice: &IdealLattice) -> Result<VnrEquivalence> {
    let ring = lattice.ring();
    let mut conditions = Vec::with_capacity(5);

    conditions.push(VnrCondition {
        id: "vnr",
        description: "every x has y with x^2 y = x",
        holds: is_vnr(ring),
        witness: vnr_witness(ring).map(|x| format!("x = {x}")),
    });

    let dim = krull_dimension(lattice);
    let reduced = is_reduced(ring);
    conditions.push(VnrCondition {
        id: "zero_dim_reduced",
        description: "zero-dimensional and reduced",
        holds: dim == 0 && reduced,
        witness: if dim != 0 {
            Some(format!("krull dimension {dim}"))
        } else {
            reduced_witness(ring).map(|x| format!("nilpotent {x}"))
        },
    });

    let mut local_witness = None;
    for &p in &lattice.prime_indices() {
        let prime = lattice.ideal(p);
        let (localized, _) = localize_at_prime(ring, prime)?;
        if !localized.is_field() {
            local_witness = Some(format!(
                "localization at ({}) has order {} and is not a field",
                prime.generator_label(),
                localized.order()
            ));
            break;
        }
    }
    conditions.push(VnrCondition {
        id: "local_fields",
        description: "the localization at every prime is a field",
        holds: local_witness.is_none(),
        witness: local_witness,
    });

    let non_radical = lattice.ideals().iter().find(|i| !i.is_radical_ideal());
    conditions.push(VnrCondition {
        id: "all_radical",
        description: "every ideal is a radical ideal",
        holds: non_radical.is_none(),
        witness: non_radical.map(|i| format!("ideal ({})", i.generator_label())),
    });

    let non_idempotent = lattice.ideals().iter().find(|i| !i.is_idempotent());
    conditions.push(VnrCondition {
        id: "all_idempotent",
        description: "every ideal is idempotent",
        holds: non_idempotent.is_none(),
        witness: non_idempotent.map(|i| format!("ideal ({})", i.generator_label())),
    });

    let first_disagreement = (0..conditions.len())
        .flat_map(|i| (i + 1..conditions.len()).map(move |j| (i, j)))
        .find(|&(i, j)| conditions[i].holds != conditions[j].holds);
    Ok(VnrEquivalence {
        ring: ring.label().to_string(),
        agree: first_disagreement.is_none(),
        conditions,
        first_disagreement,
    })
}

/// Witness record attached to a false predicate in a report.
#[derive(Clone, Debug, Serialize)]
pub struct PredicateWitness {
    pub predicate: &'static str,
    pub elements: Vec<usize>,
    pub ideals: Vec<Ideal>,
    pub note: String,
}

/// The full per-ring classification, with a witness for every false
/// predicate. Field order is fixed for the JSON schema.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub ring: String,
    pub order: usize,
    pub is_field: bool,
    pub is_domain: bool,
    pub is_reduced: bool,
    pub is_vnr: bool,
    pub is_pi_regular: bool,
    pub radical_injective: bool,
    pub dcc_radical_ideals: bool,
    pub krull_dimension: usize,
    pub nilradical: Ideal,
    pub degenerate: bool,
    pub witnesses: Vec<PredicateWitness>,
}

/// Classifies a ring from its precomputed lattice.
pub fn classify(lattice: &IdealLattice) -> Result<ClassificationReport> {
    let ring = lattice.ring();
    let mut witnesses = Vec::new();

    let is_field = ring.is_field();
    if !is_field {
        let note = if ring.order() == 1 {
            "order 1: one equals zero".to_string()
        } else {
            let x = ring
                .elements()
                .find(|&a| a != ring.zero() && !ring.is_unit(a))
                .expect("a non-field of order > 1 has a non-unit nonzero element");
            format!("{x} is a nonzero non-unit")
        };
        witnesses.push(PredicateWitness {
            predicate: "is_field",
            elements: vec![],
            ideals: vec![],
            note,
        });
    }

    let is_domain = ring.is_domain();
    if !is_domain {
        let (note, elements) = match ring.zero_divisor_pair() {
            Some((a, b)) => (format!("{a} * {b} = 0"), vec![a, b]),
            None => ("order 1: one equals zero".to_string(), vec![]),
        };
        witnesses.push(PredicateWitness {
            predicate: "is_domain",
            elements,
            ideals: vec![],
            note,
        });
    }

    let reduced = is_reduced(ring);
    if !reduced {
        let x = reduced_witness(ring).expect("non-reduced ring has a nilpotent");
        witnesses.push(PredicateWitness {
            predicate: "is_reduced",
            elements: vec![x],
            ideals: vec![],
            note: format!("{x} is a nonzero nilpotent"),
        });
    }

    let vnr = is_vnr(ring);
    if let Some(x) = vnr_witness(ring) {
        witnesses.push(PredicateWitness {
            predicate: "is_vnr",
            elements: vec![x],
            ideals: vec![],
            note: format!("no y satisfies {x}^2 y = {x}"),
        });
    }

    let pi_regular = is_pi_regular(ring);
    if let Some(a) = pi_regular_witness(ring) {
        witnesses.push(PredicateWitness {
            predicate: "is_pi_regular",
            elements: vec![a],
            ideals: vec![],
            note: format!("no exponent works for {a}"),
        });
    }

    let rad_injective = radical_injective(lattice);
    if let Some((i, j)) = radical_injective_witness(lattice) {
        witnesses.push(PredicateWitness {
            predicate: "radical_injective",
            elements: vec![],
            note: format!(
                "({}) and ({}) share a radical",
                i.generator_label(),
                j.generator_label()
            ),
            ideals: vec![i, j],
        });
    }

    let dcc = dcc_radical_ideals(lattice);

    Ok(ClassificationReport {
        ring: ring.label().to_string(),
        order: ring.order(),
        is_field,
        is_domain,
        is_reduced: reduced,
        is_vnr: vnr,
        is_pi_regular: pi_regular,
        radical_injective: rad_injective,
        dcc_radical_ideals: dcc.holds,
        krull_dimension: krull_dimension(lattice),
        nilradical: nilradical(ring),
        degenerate: ring.is_zero_ring(),
        witnesses,
    })
}

/// Convenience wrapper that enumerates the lattice first.
pub fn classify_ring(ring: &Ring) -> Result<ClassificationReport> {
    let lattice = enumerate_ideals(ring, DEFAULT_LATTICE_CAP)?;
    classify(&lattice)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::ElementSet;
    use crate::ring::{poly_quotient_ring, product_ring, residue_ring};

    fn lattice_of(ring: &Ring) -> IdealLattice {
        enumerate_ideals(ring, DEFAULT_LATTICE_CAP).unwrap()
    }

    #[test]
    fn nilradical_by_power_scan() {
        let z12 = residue_ring(12).unwrap();
        assert_eq!(nilradical(&z12).members().collect::<Vec<_>>(), vec![0, 6]);

        let z6 = residue_ring(6).unwrap();
        assert_eq!(nilradical(&z6).members().collect::<Vec<_>>(), vec![0]);

        let dual = poly_quotient_ring(2, &[0, 0, 1]).unwrap();
        assert_eq!(nilradical(&dual).members().collect::<Vec<_>>(), vec![0, 2]);
    }

    #[test]
    fn vnr_by_exhaustive_scan() {
        assert!(is_vnr(&residue_ring(6).unwrap()));
        let z4 = residue_ring(4).unwrap();
        assert!(!is_vnr(&z4));
        assert_eq!(vnr_witness(&z4), Some(2));
        assert!(is_vnr(&poly_quotient_ring(2, &[1, 1, 1]).unwrap()));
        assert!(is_vnr(&residue_ring(1).unwrap()));
    }

    #[test]
    fn pi_regular_exponents_match_hand_scan() {
        let z12 = residue_ring(12).unwrap();
        assert!(is_pi_regular(&z12));
        let exps = pi_regular_exponents(&z12);
        // 2^1 = 2 needs 4a' = 2 (impossible); 2^2 = 4 = 16 a' with a' = 1
        assert_eq!(exps[2], Some(2));

        let z8 = residue_ring(8).unwrap();
        let exps = pi_regular_exponents(&z8);
        // 2^3 = 0 = 0^2 a'
        assert_eq!(exps[2], Some(3));
    }

    #[test]
    fn krull_dimension_zero_on_finite_rings() {
        for ring in [
            poly_quotient_ring(2, &[1, 1, 1]).unwrap(),
            residue_ring(12).unwrap(),
            product_ring(&residue_ring(4).unwrap(), &residue_ring(9).unwrap()).unwrap(),
            residue_ring(1).unwrap(),
        ] {
            assert_eq!(krull_dimension(&lattice_of(&ring)), 0, "{}", ring.label());
        }
    }

    #[test]
    fn radical_injectivity_witnesses() {
        let z4 = residue_ring(4).unwrap();
        let lattice = lattice_of(&z4);
        assert!(!radical_injective(&lattice));
        let (i, j) = radical_injective_witness(&lattice).unwrap();
        assert_eq!(*i.member_set(), ElementSet::from_indices(&[0]));
        assert_eq!(*j.member_set(), ElementSet::from_indices(&[0, 2]));

        assert!(radical_injective(&lattice_of(&residue_ring(6).unwrap())));
        assert!(radical_injective(&lattice_of(
            &poly_quotient_ring(2, &[1, 1, 1]).unwrap()
        )));
    }

    #[test]
    fn dcc_reports_radical_sublattice() {
        let report = dcc_radical_ideals(&lattice_of(&residue_ring(12).unwrap()));
        assert!(report.holds);
        // radical ideals of Z/12: (6), (3), (2), R
        assert_eq!(report.radical_ideal_count, 4);
        assert_eq!(report.longest_chain, 2); // (6) < (2) < R and (6) < (3) < R
    }

    #[test]
    fn five_way_equivalence_spot_values() {
        let z6 = lattice_of(&residue_ring(6).unwrap());
        let report = vnr_equivalence_report(&z6).unwrap();
        assert!(report.agree);
        assert!(report.conditions.iter().all(|c| c.holds));

        let z4 = lattice_of(&residue_ring(4).unwrap());
        let report = vnr_equivalence_report(&z4).unwrap();
        assert!(report.agree);
        assert!(report.conditions.iter().all(|c| !c.holds));
        let local = &report.conditions[2];
        assert_eq!(local.id, "local_fields");
        assert!(local.witness.as_deref().unwrap().contains("order 4"));

        let gf4 = lattice_of(&poly_quotient_ring(2, &[1, 1, 1]).unwrap());
        let report = vnr_equivalence_report(&gf4).unwrap();
        assert!(report.agree && report.conditions.iter().all(|c| c.holds));
    }

    #[test]
    fn five_way_equivalence_on_zero_ring() {
        let zero = lattice_of(&residue_ring(1).unwrap());
        let report = vnr_equivalence_report(&zero).unwrap();
        assert!(report.agree);
        assert!(report.conditions.iter().all(|c| c.holds));
    }

    #[test]
    fn classification_implication_chain() {
        for n in 2..=20 {
            let report = classify_ring(&residue_ring(n).unwrap()).unwrap();
            assert!(!report.is_field || report.is_domain);
            assert!(!report.is_domain || report.is_reduced);
            assert!(!report.is_vnr || report.is_reduced);
            assert_eq!(report.krull_dimension, 0);
            assert!(report.dcc_radical_ideals);
        }
    }

    #[test]
    fn every_false_predicate_has_a_witness() {
        let report = classify_ring(&residue_ring(4).unwrap()).unwrap();
        for (name, value) in [
            ("is_field", report.is_field),
            ("is_domain", report.is_domain),
            ("is_reduced", report.is_reduced),
            ("is_vnr", report.is_vnr),
            ("is_pi_regular", report.is_pi_regular),
            ("radical_injective", report.radical_injective),
        ] {
            if !value {
                assert!(
                    report.witnesses.iter().any(|w| w.predicate == name),
                    "missing witness for {name}"
                );
            }
        }
    }

    #[test]
    fn classification_json_field_order_is_stable() {
        let report = classify_ring(&residue_ring(6).unwrap()).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        let ring_pos = json.find("\"ring\"").unwrap();
        let order_pos = json.find("\"order\"").unwrap();
        let witness_pos = json.find("\"witnesses\"").unwrap();
        assert!(ring_pos < order_pos && order_pos < witness_pos);
    }
}
