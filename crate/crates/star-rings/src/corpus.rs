//! The deterministic catalog of finite test rings and their invariant
//! fingerprints.
//!
//! The corpus is built in four phases — residue rings, polynomial quotients,
//! pairwise products of residue rings, and quotients of the base rings — and
//! deduplicated by exact operation-table equality (no isomorphism testing:
//! identical tables are literally the same ring, so nothing is lost). The
//! result is canonically ordered by (order, label) and identical across
//! runs.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{enumerate_ideals, DEFAULT_LATTICE_CAP};
use crate::ring::{poly_quotient_ring, product_ring, quotient_ring, residue_ring, Ring};

/// Default corpus bound, sized so the full battery stays at desk scale.
pub const DEFAULT_MAX_ORDER: usize = 64;

/// Residue rings go up to this modulus regardless of `max_order`.
const RESIDUE_CAP: usize = 32;

/// Quotients are taken of base rings with at most this many ideals.
const QUOTIENT_IDEAL_CAP: usize = 12;

/// Isomorphism-invariant structural summary (necessary, not sufficient,
/// for isomorphism).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    pub characteristic: usize,
    pub unit_count: usize,
    pub ideal_count: usize,
    pub prime_ideal_count: usize,
    pub nilradical_size: usize,
}

/// Computes the six-field fingerprint; requires the lattice to be
/// enumerable under the default cap.
pub fn fingerprint(ring: &Ring) -> Result<Fingerprint> {
    let lattice = enumerate_ideals(ring, DEFAULT_LATTICE_CAP)?;
    Ok(Fingerprint {
        order: ring.order(),
        characteristic: ring.characteristic(),
        unit_count: ring.unit_count(),
        ideal_count: lattice.len(),
        prime_ideal_count: lattice.prime_indices().len(),
        nilradical_size: crate::classify::nilradical(ring).len(),
    })
}

/// Builds the deterministic corpus: all `Z/n` for `2 <= n <= min(max_order,
/// 32)`; all `F_p[x]/(f)` for `p` in {2, 3} and monic `f` of degree 1..=3
/// with `p^deg <= max_order`; pairwise products `Z/a x Z/b` with
/// `a <= b <= 32` and `ab <= max_order`; and the quotients of every base
/// ring with at most 12 ideals. Entries whose operation tables coincide
/// with an earlier entry are dropped, and the result is sorted by
/// (order, label).
pub fn build_corpus(max_order: usize) -> Result<Vec<Ring>> {
    if max_order > crate::ring::MAX_ORDER {
        return Err(Error::ResourceCap(format!(
            "corpus max order {max_order} exceeds the ring cap {}",
            crate::ring::MAX_ORDER
        )));
    }
    let mut corpus: Vec<Ring> = Vec::new();
    let push = |ring: Ring, corpus: &mut Vec<Ring>| {
        if !corpus.iter().any(|r| **r == *ring) {
            corpus.push(ring);
        }
    };

    let mut bases: Vec<Ring> = Vec::new();
    for n in 2..=max_order.min(RESIDUE_CAP) {
        bases.push(residue_ring(n)?);
    }
    for p in [2usize, 3] {
        for degree in 1..=3usize {
            if p.pow(degree as u32) > max_order {
                continue;
            }
            // all monic f of this degree, by ascending lower coefficients
            for value in 0..p.pow(degree as u32) {
                let mut coeffs = Vec::with_capacity(degree + 1);
                let mut v = value;
                for _ in 0..degree {
                    coeffs.push(v % p);
                    v /= p;
                }
                coeffs.push(1);
                bases.push(poly_quotient_ring(p, &coeffs)?);
            }
        }
    }
    for base in &bases {
        push(base.clone(), &mut corpus);
    }

    for a in 2..=RESIDUE_CAP {
        for b in a..=RESIDUE_CAP {
            if a * b > max_order {
                break;
            }
            let prod = product_ring(&residue_ring(a)?, &residue_ring(b)?)?;
            push(prod, &mut corpus);
        }
    }

    for base in &bases {
        let lattice = enumerate_ideals(base, DEFAULT_LATTICE_CAP)?;
        if lattice.len() > QUOTIENT_IDEAL_CAP {
            continue;
        }
        for ideal in lattice.ideals() {
            let (quotient, _) = quotient_ring(base, ideal)?;
            push(quotient, &mut corpus);
        }
    }

    corpus.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.label().cmp(b.label()))
    });
    Ok(corpus)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_corpus_size_and_orders() {
        let corpus = build_corpus(DEFAULT_MAX_ORDER).unwrap();
        assert!(
            (80..=200).contains(&corpus.len()),
            "corpus size {} outside the expected envelope",
            corpus.len()
        );
        assert!(corpus.iter().all(|r| r.order() <= DEFAULT_MAX_ORDER));
        // the zero ring enters through a quotient by the unit ideal
        assert!(corpus.iter().any(|r| r.is_zero_ring()));
    }

    #[test]
    fn corpus_contains_the_named_rings() {
        let corpus = build_corpus(12).unwrap();
        let labels: Vec<&str> = corpus.iter().map(|r| r.label()).collect();
        assert!(labels.contains(&"Z/12"));
        assert!(labels.contains(&"F2[x]/(x^2)"));
        assert!(labels.contains(&"Z/2 x Z/3"));
    }

    #[test]
    fn corpus_is_deterministic() {
        let a = build_corpus(24).unwrap();
        let b = build_corpus(24).unwrap();
        let labels = |c: &[Ring]| c.iter().map(|r| r.label().to_string()).collect::<Vec<_>>();
        assert_eq!(labels(&a), labels(&b));
    }

    #[test]
    fn corpus_small_cap_has_only_small_rings() {
        let corpus = build_corpus(4).unwrap();
        assert!(corpus.iter().all(|r| r.order() <= 4));
        let labels: Vec<&str> = corpus.iter().map(|r| r.label()).collect();
        assert!(labels.contains(&"Z/2"));
        assert!(labels.contains(&"Z/4"));
        assert!(labels.contains(&"Z/2 x Z/2"));
        assert!(labels.contains(&"F2[x]/(x^2+x+1)"));
    }

    #[test]
    fn fingerprint_spot_values() {
        // units {1,5,7,11}; divisor ideals; primes (2),(3); nilradical {0,6}
        let z12 = residue_ring(12).unwrap();
        assert_eq!(
            fingerprint(&z12).unwrap(),
            Fingerprint {
                order: 12,
                characteristic: 12,
                unit_count: 4,
                ideal_count: 6,
                prime_ideal_count: 2,
                nilradical_size: 2,
            }
        );

        let gf4 = poly_quotient_ring(2, &[1, 1, 1]).unwrap();
        assert_eq!(
            fingerprint(&gf4).unwrap(),
            Fingerprint {
                order: 4,
                characteristic: 2,
                unit_count: 3,
                ideal_count: 2,
                prime_ideal_count: 1,
                nilradical_size: 1,
            }
        );
    }

    #[test]
    fn product_fingerprint_matches_residue_twin() {
        let prod = product_ring(&residue_ring(2).unwrap(), &residue_ring(3).unwrap()).unwrap();
        let direct = residue_ring(6).unwrap();
        let fp = fingerprint(&prod).unwrap();
        assert_eq!(fp, fingerprint(&direct).unwrap());
        assert_eq!(fp.unit_count, 2);
        assert_eq!(fp.ideal_count, 4);
    }

    #[test]
    fn fingerprint_is_multiplicative_over_products() {
        let pairs = [(4usize, 9usize), (2, 3), (6, 5), (8, 3)];
        for (a, b) in pairs {
            let ra = residue_ring(a).unwrap();
            let rb = residue_ring(b).unwrap();
            let fa = fingerprint(&ra).unwrap();
            let fb = fingerprint(&rb).unwrap();
            let fp = fingerprint(&product_ring(&ra, &rb).unwrap()).unwrap();
            assert_eq!(fp.order, fa.order * fb.order);
            assert_eq!(fp.unit_count, fa.unit_count * fb.unit_count);
            assert_eq!(fp.ideal_count, fa.ideal_count * fb.ideal_count);
        }
    }

    #[test]
    fn zero_ring_fingerprint_is_degenerate() {
        let zero = residue_ring(1).unwrap();
        let fp = fingerprint(&zero).unwrap();
        assert_eq!(fp.order, 1);
        assert_eq!(fp.characteristic, 1);
        assert_eq!(fp.unit_count, 1);
        assert_eq!(fp.ideal_count, 1);
        assert_eq!(fp.prime_ideal_count, 0);
        assert_eq!(fp.nilradical_size, 1);
    }
}
