//! Decision procedures on finite commutative rings with identity.
//!
//! The crate constructs finite rings (residue rings, polynomial quotients,
//! products, quotients, localizations), enumerates their complete ideal
//! lattices, and decides the ring-theoretic properties built on top of the
//! radical calculus: the star property (every family of ideals admits a
//! finite subfamily with `√(∩ I_α) = ∩ √I_α`), the uniform-exponent
//! condition for primary families, zero-dimensionality, von Neumann
//! regularity and π-regularity, and primary decomposition. A symbolic
//! backend over the integers and `F_p[x]` exhibits the infinite
//! counterexamples where those properties fail, and a theorem battery
//! cross-checks a catalog of classical equivalences on a generated corpus.
//!
//! Entry points: [`ring::residue_ring`] and friends for construction,
//! [`ideal::enumerate_ideals`] for lattices, [`star::theorem_battery`] for
//! the full per-ring statement suite, and [`cli`] for the command-line
//! front end. Each major capability also has a runnable example under
//! `examples/`.

pub mod classify;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod ideal;
pub mod pid;
pub mod ring;
pub mod star;

pub use classify::{
    classify, classify_ring, dcc_radical_ideals, is_pi_regular, is_reduced, is_vnr,
    krull_dimension, nilradical, radical_injective, vnr_equivalence_report, ClassificationReport,
    VnrEquivalence,
};
pub use corpus::{build_corpus, fingerprint, Fingerprint, DEFAULT_MAX_ORDER};
pub use error::{Error, Result};
pub use ideal::{
    enumerate_ideals, generate_ideal, ideal_product, ideal_sum, intersect_ideals,
    primary_decomposition, ElementSet, Ideal, IdealLattice, PrimaryDecomposition,
    DEFAULT_LATTICE_CAP,
};
pub use ring::{
    extend_ideal, localize_at_prime, parse_ring_spec, poly_quotient_ring, product_ring,
    quotient_ring, residue_ring, validate_axioms, AxiomLaw, AxiomReport, FiniteRing, Ring,
    RingHom, MAX_ORDER,
};
pub use star::{
    a2_equiv_radical_identity, a2_minimal_exponent, family_report, prime_family_condition,
    star_check_finite, star_check_lattice, theorem_battery, zero_dim_equivalence, BatteryOptions,
    CheckMethod, IdealFamily, StarCheckResult, TheoremReport, Verdict, DEFAULT_STAR_CAP,
};
