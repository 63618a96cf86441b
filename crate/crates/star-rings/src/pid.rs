//! Symbolic ideal arithmetic over principal ideal domains: the integers and
//! univariate polynomials over small prime fields.
//!
//! Ideals are canonical generators (non-negative integers, monic
//! polynomials; 0 is the zero ideal, 1 the unit ideal), so containment is
//! reversed divisibility and equality is syntactic. Families come from a
//! closed vocabulary — finite generator lists, all primes, all powers of one
//! prime — which is enough to exhibit every failure of the star property and
//! of the uniform-exponent condition that an infinite domain produces.

use std::fmt;

use serde::{Serialize, Serializer};
use serde_json::json;

use crate::error::{Error, Result};
use crate::ring::poly_label;

/// Trial-division bound for integer factorization.
const INT_TRIAL_BOUND: u64 = 1_000_000;
/// Polynomial caps: degree and coefficient prime.
const POLY_DEGREE_CAP: usize = 16;
const POLY_PRIME_CAP: u32 = 7;

/// A polynomial over `F_p` in little-endian coefficients with no trailing
/// zeros; the zero polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolyFp {
    p: u32,
    coeffs: Vec<u32>,
}

impl PolyFp {
    fn new(p: u32, mut coeffs: Vec<u32>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyFp { p, coeffs }
    }

    fn zero(p: u32) -> Self {
        PolyFp { p, coeffs: vec![] }
    }

    fn one(p: u32) -> Self {
        PolyFp { p, coeffs: vec![1] }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn leading(&self) -> u32 {
        *self.coeffs.last().expect("nonzero polynomial")
    }

    fn field_inverse(&self, a: u32) -> u32 {
        (1..self.p)
            .find(|&b| a * b % self.p == 1)
            .expect("p is prime and a is nonzero")
    }

    /// Scales to leading coefficient 1.
    fn monic(&self) -> Self {
        if self.is_zero() || self.leading() == 1 {
            return self.clone();
        }
        let inv = self.field_inverse(self.leading());
        PolyFp::new(
            self.p,
            self.coeffs.iter().map(|&c| c * inv % self.p).collect(),
        )
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return PolyFp::zero(self.p);
        }
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % self.p;
            }
        }
        PolyFp::new(self.p, out)
    }

    /// Euclidean remainder by a nonzero divisor.
    fn rem(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero());
        let p = self.p;
        let d = divisor.monic();
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        while rem.len() > dd {
            let lead = *rem.last().unwrap();
            let shift = rem.len() - 1 - dd;
            if lead != 0 {
                for (k, &c) in d.coeffs.iter().enumerate() {
                    let pos = shift + k;
                    rem[pos] = (rem[pos] + p * p - lead * c % p) % p;
                }
            }
            rem.pop();
        }
        // undo the implicit monic scaling: remainder is unaffected by it
        PolyFp::new(p, rem)
    }

    fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).is_zero()
    }

    fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Exact quotient, assuming divisibility.
    fn div_exact(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero());
        let p = self.p;
        let d = divisor.monic();
        let scale = self.field_inverse(divisor.leading());
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u32; rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let lead = *rem.last().unwrap();
            let shift = rem.len() - 1 - dd;
            quot[shift] = lead;
            if lead != 0 {
                for (k, &c) in d.coeffs.iter().enumerate() {
                    let pos = shift + k;
                    rem[pos] = (rem[pos] + p * p - lead * c % p) % p;
                }
            }
            rem.pop();
        }
        debug_assert!(rem.iter().all(|&c| c == 0), "exact division expected");
        PolyFp::new(p, quot.iter().map(|&c| c * scale % p).collect())
    }

    /// Ascending enumeration order: degree, then coefficient digits read as
    /// a base-p number.
    fn enum_key(&self) -> (usize, u64) {
        let value = self
            .coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.p as u64 + c as u64);
        (self.coeffs.len(), value)
    }

    /// Monic irreducible factors with multiplicities, by trial division
    /// ascending in (degree, value): the smallest nontrivial monic divisor
    /// of the remainder is always irreducible.
    fn factorize(&self) -> Vec<(PolyFp, u32)> {
        assert!(!self.is_zero());
        let p = self.p;
        let mut rest = self.monic();
        let mut factors: Vec<(PolyFp, u32)> = Vec::new();
        let mut degree = 1;
        while rest.degree().unwrap_or(0) >= 1 {
            let half = rest.degree().unwrap() / 2;
            if degree > half {
                // remainder is irreducible
                let mut mult = 0;
                let f = rest.clone();
                while f.divides(&rest) && !rest.is_one() {
                    rest = rest.div_exact(&f);
                    mult += 1;
                }
                factors.push((f, mult));
                break;
            }
            let mut found = false;
            for value in 0..(p as u64).pow(degree as u32) {
                let mut coeffs: Vec<u32> = Vec::with_capacity(degree + 1);
                let mut v = value;
                for _ in 0..degree {
                    coeffs.push((v % p as u64) as u32);
                    v /= p as u64;
                }
                coeffs.push(1);
                let candidate = PolyFp::new(p, coeffs);
                if candidate.divides(&rest) {
                    let mut mult = 0;
                    while candidate.divides(&rest) {
                        rest = rest.div_exact(&candidate);
                        mult += 1;
                    }
                    factors.push((candidate, mult));
                    found = true;
                    break;
                }
            }
            if !found {
                degree += 1;
            }
        }
        factors
    }

    fn is_irreducible(&self) -> bool {
        match self.degree() {
            None | Some(0) => false,
            Some(_) => {
                let f = self.factorize();
                f.len() == 1 && f[0].1 == 1
            }
        }
    }
}

impl fmt::Display for PolyFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs: Vec<usize> = self.coeffs.iter().map(|&c| c as usize).collect();
        f.write_str(&poly_label(&coeffs))
    }
}

/// The ambient principal ideal domain.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PidDomain {
    Integers,
    PolyOver(u32),
}

impl fmt::Display for PidDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PidDomain::Integers => f.write_str("Z"),
            PidDomain::PolyOver(p) => write!(f, "F{p}[x]"),
        }
    }
}

/// A principal ideal with a canonical generator: non-negative integer or
/// monic polynomial; 0 is the zero ideal and 1 the unit ideal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum PidIdeal {
    Int(u64),
    Poly(PolyFp),
}

impl PidIdeal {
    pub fn integer(n: u64) -> PidIdeal {
        PidIdeal::Int(n)
    }

    /// Monic-normalized polynomial ideal over `F_p`, with the prime and
    /// degree caps enforced.
    pub fn poly(p: u32, coeffs: &[u32]) -> Result<PidIdeal> {
        if p > POLY_PRIME_CAP || !is_prime_u64(p as u64) {
            return Err(Error::InvalidArgument(format!(
                "coefficient prime must be a prime at most {POLY_PRIME_CAP}, got {p}"
            )));
        }
        let poly = PolyFp::new(p, coeffs.to_vec());
        if poly.degree().unwrap_or(0) > POLY_DEGREE_CAP {
            return Err(Error::ResourceCap(format!(
                "polynomial degree exceeds the cap {POLY_DEGREE_CAP}"
            )));
        }
        Ok(PidIdeal::Poly(poly.monic()))
    }

    pub fn domain(&self) -> PidDomain {
        match self {
            PidIdeal::Int(_) => PidDomain::Integers,
            PidIdeal::Poly(f) => PidDomain::PolyOver(f.p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            PidIdeal::Int(n) => *n == 0,
            PidIdeal::Poly(f) => f.is_zero(),
        }
    }

    pub fn is_unit(&self) -> bool {
        match self {
            PidIdeal::Int(n) => *n == 1,
            PidIdeal::Poly(f) => f.is_one(),
        }
    }
}

impl fmt::Display for PidIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PidIdeal::Int(n) => write!(f, "{n}"),
            PidIdeal::Poly(poly) => write!(f, "{poly}"),
        }
    }
}

/// Serializes as the canonical generator string.
impl Serialize for PidIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

fn lcm_u64(a: u64, b: u64) -> Result<u64> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    let l = a as u128 / gcd_u64(a, b) as u128 * b as u128;
    u64::try_from(l).map_err(|_| Error::ResourceCap("lcm exceeds 64 bits".into()))
}

/// Prime factorization by trial division up to 10^6; past that bound the
/// remaining cofactor is prime only when it is below 10^12, otherwise the
/// input is out of desk scale and reported as a resource cap.
pub fn factorize_u64(n: u64) -> Result<Vec<(u64, u32)>> {
    assert!(n >= 1);
    let mut rest = n;
    let mut out = Vec::new();
    let mut d = 2u64;
    while d <= INT_TRIAL_BOUND && d * d <= rest {
        if rest.is_multiple_of(d) {
            let mut m = 0;
            while rest.is_multiple_of(d) {
                rest /= d;
                m += 1;
            }
            out.push((d, m));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        if rest > INT_TRIAL_BOUND * INT_TRIAL_BOUND {
            return Err(Error::ResourceCap(format!(
                "cannot certify factorization of {n} by trial division up to {INT_TRIAL_BOUND}"
            )));
        }
        out.push((rest, 1));
    }
    Ok(out)
}

fn check_same_domain(ideals: &[PidIdeal]) -> Result<PidDomain> {
    let first = ideals
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty ideal list".into()))?
        .domain();
    for i in ideals {
        if i.domain() != first {
            return Err(Error::MixedOperands(format!(
                "{:?} vs {:?}",
                i.domain(),
                first
            )));
        }
    }
    Ok(first)
}

/// Squarefree kernel: the radical of `(g)` is generated by the product of
/// the distinct prime factors of `g`; the zero and unit ideals are fixed.
pub fn radical(ideal: &PidIdeal) -> Result<PidIdeal> {
    if ideal.is_zero() || ideal.is_unit() {
        return Ok(ideal.clone());
    }
    match ideal {
        PidIdeal::Int(n) => {
            let root = factorize_u64(*n)?
                .into_iter()
                .fold(1u64, |acc, (p, _)| acc * p);
            Ok(PidIdeal::Int(root))
        }
        PidIdeal::Poly(f) => {
            let root = f
                .factorize()
                .into_iter()
                .fold(PolyFp::one(f.p), |acc, (q, _)| acc.mul(&q));
            Ok(PidIdeal::Poly(root))
        }
    }
}

/// Ideal containment `(a) ⊆ (b)`, i.e. `b` divides `a`.
pub fn contains(inner: &PidIdeal, outer: &PidIdeal) -> Result<bool> {
    check_same_domain(&[inner.clone(), outer.clone()])?;
    Ok(match (inner, outer) {
        (PidIdeal::Int(a), PidIdeal::Int(b)) => {
            if *b == 0 {
                *a == 0
            } else {
                a % b == 0
            }
        }
        (PidIdeal::Poly(a), PidIdeal::Poly(b)) => b.divides(a),
        _ => unreachable!("domains already checked"),
    })
}

/// Intersection of finitely many principal ideals: the lcm of the
/// generators, with the zero ideal absorbing and the unit ideal neutral.
pub fn intersect(ideals: &[PidIdeal]) -> Result<PidIdeal> {
    let domain = check_same_domain(ideals)?;
    match domain {
        PidDomain::Integers => {
            let mut acc = 1u64;
            for i in ideals {
                let PidIdeal::Int(n) = i else { unreachable!() };
                acc = lcm_u64(acc, *n)?;
            }
            Ok(PidIdeal::Int(acc))
        }
        PidDomain::PolyOver(p) => {
            let mut acc = PolyFp::one(p);
            for i in ideals {
                let PidIdeal::Poly(f) = i else { unreachable!() };
                if f.is_zero() || acc.is_zero() {
                    acc = PolyFp::zero(p);
                } else {
                    let g = acc.gcd(f);
                    acc = acc.div_exact(&g).mul(f).monic();
                }
            }
            if acc.degree().unwrap_or(0) > POLY_DEGREE_CAP {
                return Err(Error::ResourceCap(format!(
                    "lcm degree exceeds the cap {POLY_DEGREE_CAP}"
                )));
            }
            Ok(PidIdeal::Poly(acc))
        }
    }
}

/// Sum of finitely many principal ideals: the gcd of the generators, with
/// the zero ideal neutral and the unit ideal absorbing.
pub fn sum(ideals: &[PidIdeal]) -> Result<PidIdeal> {
    let domain = check_same_domain(ideals)?;
    match domain {
        PidDomain::Integers => {
            let mut acc = 0u64;
            for i in ideals {
                let PidIdeal::Int(n) = i else { unreachable!() };
                acc = gcd_u64(acc, *n);
            }
            Ok(PidIdeal::Int(acc))
        }
        PidDomain::PolyOver(p) => {
            let mut acc = PolyFp::zero(p);
            for i in ideals {
                let PidIdeal::Poly(f) = i else { unreachable!() };
                acc = if acc.is_zero() {
                    f.clone()
                } else if f.is_zero() {
                    acc
                } else {
                    acc.gcd(f)
                };
            }
            Ok(PidIdeal::Poly(acc.monic()))
        }
    }
}

/// The closed family vocabulary over one domain.
#[derive(Clone, Debug)]
pub enum FamilyVariant {
    FiniteList(Vec<PidIdeal>),
    AllPrimes,
    PrimePowers(PidIdeal),
}

/// A symbolic family of ideals.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub domain: PidDomain,
    pub variant: FamilyVariant,
}

impl FamilySpec {
    /// Nonempty, deduplicated finite list of ideals of one domain.
    pub fn finite_list(ideals: Vec<PidIdeal>) -> Result<FamilySpec> {
        let domain = check_same_domain(&ideals)?;
        let mut distinct: Vec<PidIdeal> = Vec::new();
        for i in ideals {
            if !distinct.contains(&i) {
                distinct.push(i);
            }
        }
        Ok(FamilySpec {
            domain,
            variant: FamilyVariant::FiniteList(distinct),
        })
    }

    pub fn all_primes(domain: PidDomain) -> FamilySpec {
        FamilySpec {
            domain,
            variant: FamilyVariant::AllPrimes,
        }
    }

    /// All powers of one prime; the base must be prime/irreducible.
    pub fn prime_powers(base: PidIdeal) -> Result<FamilySpec> {
        let prime = match &base {
            PidIdeal::Int(n) => is_prime_u64(*n),
            PidIdeal::Poly(f) => f.is_irreducible(),
        };
        if !prime {
            return Err(Error::InvalidArgument(format!(
                "({base}) is not a prime ideal"
            )));
        }
        Ok(FamilySpec {
            domain: base.domain(),
            variant: FamilyVariant::PrimePowers(base),
        })
    }

    pub fn describe(&self) -> String {
        match &self.variant {
            FamilyVariant::FiniteList(list) => format!(
                "finite:{}",
                list.iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            FamilyVariant::AllPrimes => "all-primes".into(),
            FamilyVariant::PrimePowers(p) => format!("prime-powers:{p}"),
        }
    }
}

/// The first `count` primes of the domain in canonical ascending order
/// (2, 3, 5, ... or monic irreducibles by degree then value).
pub fn first_primes(domain: PidDomain, count: usize) -> Vec<PidIdeal> {
    match domain {
        PidDomain::Integers => {
            let mut out = Vec::new();
            let mut n = 2u64;
            while out.len() < count {
                if is_prime_u64(n) {
                    out.push(PidIdeal::Int(n));
                }
                n += 1;
            }
            out
        }
        PidDomain::PolyOver(p) => {
            let mut out = Vec::new();
            let mut degree = 1usize;
            while out.len() < count {
                let mut candidates: Vec<PolyFp> = Vec::new();
                for value in 0..(p as u64).pow(degree as u32) {
                    let mut coeffs = Vec::with_capacity(degree + 1);
                    let mut v = value;
                    for _ in 0..degree {
                        coeffs.push((v % p as u64) as u32);
                        v /= p as u64;
                    }
                    coeffs.push(1);
                    let f = PolyFp::new(p, coeffs);
                    if f.is_irreducible() {
                        candidates.push(f);
                    }
                }
                candidates.sort_by_key(|f| f.enum_key());
                for f in candidates {
                    if out.len() < count {
                        out.push(PidIdeal::Poly(f));
                    }
                }
                degree += 1;
            }
            out
        }
    }
}

/// Intersection of a symbolic family, with the justification recorded.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyIntersection {
    pub ideal: PidIdeal,
    pub justification: String,
}

/// The intersection over the whole (possibly infinite) family. Finite lists
/// reduce to an lcm; the two infinite variants are zero: no nonzero element
/// has infinitely many prime divisors, and no fixed power of a prime is
/// divisible by all higher powers.
pub fn family_intersection(spec: &FamilySpec) -> Result<FamilyIntersection> {
    match &spec.variant {
        FamilyVariant::FiniteList(list) => Ok(FamilyIntersection {
            ideal: intersect(list)?,
            justification: "lcm of the finite generator list".into(),
        }),
        FamilyVariant::AllPrimes => Ok(FamilyIntersection {
            ideal: zero_of(spec.domain),
            justification: "a nonzero element has finitely many prime divisors, \
                            so no nonzero generator lies in every prime"
                .into(),
        }),
        FamilyVariant::PrimePowers(p) => Ok(FamilyIntersection {
            ideal: zero_of(spec.domain),
            justification: format!(
                "for nonzero g, ({p})^k fails to contain g once k exceeds the \
                 ({p})-adic valuation of g"
            ),
        }),
    }
}

fn zero_of(domain: PidDomain) -> PidIdeal {
    match domain {
        PidDomain::Integers => PidIdeal::Int(0),
        PidDomain::PolyOver(p) => PidIdeal::Poly(PolyFp::zero(p)),
    }
}

/// Star-property verdict for a symbolic family.
#[derive(Clone, Debug, Serialize)]
pub struct PidStarResult {
    pub domain: String,
    pub family: String,
    pub satisfied: bool,
    /// The witnessing `S'` when satisfied; a refuting finite subfamily
    /// otherwise.
    pub witness_subfamily: Vec<PidIdeal>,
    pub radical_of_intersection: PidIdeal,
    /// `∩ √I` over the witness subfamily.
    pub intersection_of_radicals: PidIdeal,
    pub justification: String,
}

/// Decides the star property for a symbolic family. Finite lists always
/// satisfy it with `S'` the list itself; the two infinite variants fail, and
/// the result carries a finite subfamily whose radical intersection misses
/// `√(∩) = (0)`.
pub fn star_check(spec: &FamilySpec) -> Result<PidStarResult> {
    let domain = format!("{}", spec.domain);
    match &spec.variant {
        FamilyVariant::FiniteList(list) => {
            let total = intersect(list)?;
            let lhs = radical(&total)?;
            let radicals: Vec<PidIdeal> = list.iter().map(radical).collect::<Result<_>>()?;
            let rhs = intersect(&radicals)?;
            if lhs != rhs {
                return Err(Error::Inconsistency(format!(
                    "radical identity failed on a finite list: ({lhs}) vs ({rhs})"
                )));
            }
            Ok(PidStarResult {
                domain,
                family: spec.describe(),
                satisfied: true,
                witness_subfamily: list.clone(),
                radical_of_intersection: lhs,
                intersection_of_radicals: rhs,
                justification: "finite family: S' is the family itself; \
                                √(lcm) = lcm of squarefree parts"
                    .into(),
            })
        }
        FamilyVariant::AllPrimes => {
            let witness = first_primes(spec.domain, 2);
            let value = intersect(&witness)?;
            Ok(PidStarResult {
                domain,
                family: spec.describe(),
                satisfied: false,
                witness_subfamily: witness,
                radical_of_intersection: zero_of(spec.domain),
                intersection_of_radicals: value,
                justification: "√(∩ all primes) = √((0)) = (0), but every finite \
                                subfamily of primes intersects in their product, \
                                which is nonzero"
                    .into(),
            })
        }
        FamilyVariant::PrimePowers(p) => {
            let square = match p {
                PidIdeal::Int(n) => PidIdeal::Int(n * n),
                PidIdeal::Poly(f) => PidIdeal::Poly(f.mul(f)),
            };
            let witness = vec![p.clone(), square];
            let value = radical(&intersect(&witness)?)?;
            Ok(PidStarResult {
                domain,
                family: spec.describe(),
                satisfied: false,
                witness_subfamily: witness,
                radical_of_intersection: zero_of(spec.domain),
                intersection_of_radicals: value,
                justification: format!(
                    "√(∩ all powers of ({p})) = √((0)) = (0), but every finite \
                     subfamily has radical intersection ({p})"
                ),
            })
        }
    }
}

/// Refusal certificate for the uniform-exponent search.
#[derive(Clone, Debug, Serialize)]
pub struct PidA2Refusal {
    /// For each proposed `n`, a member of the family that defeats it.
    pub counterexample_rule: String,
    pub certificate: String,
}

/// Result of the uniform-exponent check for one element against a family.
#[derive(Clone, Debug, Serialize)]
pub struct PidA2Result {
    pub domain: String,
    pub family: String,
    pub element: PidIdeal,
    pub uniform_exponent: Option<usize>,
    pub refusal: Option<PidA2Refusal>,
}

/// Decides whether the element `a` admits a uniform exponent `n` with
/// `a in √Q` forcing `a^n in Q` across the family. Finite lists give the
/// minimal `n` by valuation comparison; all-primes gives `n = 1` (a prime
/// containing a power of `a` contains `a`); prime powers refuse whenever the
/// base divides a nonzero `a`, by the valuation certificate `k = n·v + 1`.
pub fn a2_check(spec: &FamilySpec, element: &PidIdeal) -> Result<PidA2Result> {
    if element.domain() != spec.domain {
        return Err(Error::MixedOperands(format!(
            "element ({element}) does not live in {}",
            spec.domain
        )));
    }
    let domain = format!("{}", spec.domain);
    let family = spec.describe();
    let element = element.clone();

    let result = match &spec.variant {
        FamilyVariant::FiniteList(list) => {
            let mut uniform = 1usize;
            for member in list {
                if let Some(n) = min_exponent_into(&element, member)? {
                    uniform = uniform.max(n);
                }
            }
            PidA2Result {
                domain,
                family,
                element,
                uniform_exponent: Some(uniform),
                refusal: None,
            }
        }
        FamilyVariant::AllPrimes => PidA2Result {
            domain,
            family,
            element,
            uniform_exponent: Some(1),
            refusal: None,
        },
        FamilyVariant::PrimePowers(base) => {
            let divisible = !element.is_zero() && contains(&element, base)?;
            if divisible {
                let v = valuation(&element, base)?;
                PidA2Result {
                    domain,
                    family,
                    element: element.clone(),
                    uniform_exponent: None,
                    refusal: Some(PidA2Refusal {
                        counterexample_rule: format!("k = {v}*n + 1"),
                        certificate: format!(
                            "({element}) has ({base})-adic valuation {v}; for any \
                             proposed n, the member ({base})^({v}n+1) contains no \
                             power a^m with m <= n, yet ({element}) lies in its radical"
                        ),
                    }),
                }
            } else {
                PidA2Result {
                    domain,
                    family,
                    element,
                    uniform_exponent: Some(1),
                    refusal: None,
                }
            }
        }
    };
    Ok(result)
}

/// Minimal `n` with `a^n in (g)` when `a` lies in `√((g))`, by comparing
/// valuations prime by prime; `None` when `a` is outside the radical.
fn min_exponent_into(a: &PidIdeal, g: &PidIdeal) -> Result<Option<usize>> {
    if a.is_zero() || g.is_unit() {
        return Ok(Some(1));
    }
    if g.is_zero() {
        // √((0)) = (0) in a domain
        return Ok(if a.is_zero() { Some(1) } else { None });
    }
    let factors: Vec<(PidIdeal, u32)> = match g {
        PidIdeal::Int(n) => factorize_u64(*n)?
            .into_iter()
            .map(|(p, m)| (PidIdeal::Int(p), m))
            .collect(),
        PidIdeal::Poly(f) => f
            .factorize()
            .into_iter()
            .map(|(q, m)| (PidIdeal::Poly(q), m))
            .collect(),
    };
    let mut needed = 1usize;
    for (prime, mult) in factors {
        if !contains(a, &prime)? {
            return Ok(None); // a misses a prime of g, so a is outside √((g))
        }
        let v = valuation(a, &prime)?;
        needed = needed.max((mult as usize).div_ceil(v));
    }
    Ok(Some(needed))
}

/// `(base)`-adic valuation of a nonzero element.
fn valuation(a: &PidIdeal, base: &PidIdeal) -> Result<usize> {
    match (a, base) {
        (PidIdeal::Int(n), PidIdeal::Int(p)) => {
            let (mut v, mut rest) = (0usize, *n);
            while rest % p == 0 {
                rest /= p;
                v += 1;
            }
            Ok(v)
        }
        (PidIdeal::Poly(f), PidIdeal::Poly(q)) => {
            let (mut v, mut rest) = (0usize, f.clone());
            while q.divides(&rest) && !rest.is_zero() {
                rest = rest.div_exact(q);
                v += 1;
            }
            Ok(v)
        }
        _ => Err(Error::MixedOperands("valuation across domains".into())),
    }
}

/// One of the five equivalent conditions, evaluated on an infinite domain.
#[derive(Clone, Debug, Serialize)]
pub struct PidCondition {
    pub id: &'static str,
    pub description: &'static str,
    pub holds: bool,
    pub witness: serde_json::Value,
}

/// The five-way equivalence evaluated on `Z` or `F_p[x]`: all five
/// conditions fail, each with its own certificate, and the verdicts agree.
#[derive(Clone, Debug, Serialize)]
pub struct PidTheorem8Report {
    pub domain: String,
    pub conditions: Vec<PidCondition>,
    pub consistent: bool,
    /// Strictly descending chain of radical ideals (squarefree generators).
    pub dcc_radical_failure_chain: Vec<PidIdeal>,
    /// Strictly descending chain of ideals (prime powers).
    pub artinian_failure_chain: Vec<PidIdeal>,
}

/// Produces the witnesses showing that an infinite PID fails all five
/// conditions at once: the star property (all-primes family), zero
/// dimensionality (a two-prime chain), the Artinian property (a prime-power
/// chain), π-regularity (a valuation argument at the first prime), and the
/// prime-family condition (same all-primes witness). Also emits the chain
/// refuting the d.c.c. for radical ideals.
pub fn theorem8_witnesses(domain: PidDomain) -> Result<PidTheorem8Report> {
    let primes = first_primes(domain, 4);
    let star = star_check(&FamilySpec::all_primes(domain))?;

    let chain_prime = primes[0].clone();
    let zero = zero_of(domain);

    let mut artinian_chain = Vec::new();
    let mut acc = chain_prime.clone();
    for _ in 0..4 {
        artinian_chain.push(acc.clone());
        acc = match (&acc, &chain_prime) {
            (PidIdeal::Int(a), PidIdeal::Int(p)) => PidIdeal::Int(a * p),
            (PidIdeal::Poly(a), PidIdeal::Poly(p)) => PidIdeal::Poly(a.mul(p)),
            _ => unreachable!(),
        };
    }

    let mut dcc_chain = Vec::new();
    let mut acc = primes[0].clone();
    dcc_chain.push(acc.clone());
    for p in &primes[1..] {
        acc = match (&acc, p) {
            (PidIdeal::Int(a), PidIdeal::Int(q)) => PidIdeal::Int(a * q),
            (PidIdeal::Poly(a), PidIdeal::Poly(q)) => PidIdeal::Poly(a.mul(q)),
            _ => unreachable!(),
        };
        dcc_chain.push(acc.clone());
    }

    let pi_witness = primes[0].clone();
    let conditions = vec![
        PidCondition {
            id: "star",
            description: "the star property",
            holds: false,
            witness: json!(star),
        },
        PidCondition {
            id: "zero_dimensional",
            description: "Krull dimension zero",
            holds: false,
            witness: json!({
                "prime_chain": [zero.clone(), chain_prime.clone()],
                "note": "a strict chain of two primes",
            }),
        },
        PidCondition {
            id: "artinian",
            description: "the descending chain condition on ideals",
            holds: false,
            witness: json!({
                "descending_chain": artinian_chain,
                "note": "each generator strictly divides the next",
            }),
        },
        PidCondition {
            id: "pi_regular",
            description: "every a has n and a' with a^n = (a^n)^2 a'",
            holds: false,
            witness: json!({
                "element": pi_witness,
                "note": format!(
                    "the ({pi_witness})-adic valuation of a^n is n, while any \
                     nonzero (a^n)^2 a' has valuation at least 2n, and zero is \
                     impossible in a domain"
                ),
            }),
        },
        PidCondition {
            id: "prime_family",
            description: "the prime-family condition",
            holds: false,
            witness: json!({
                "radical_of_intersection": zero,
                "finite_subfamily": star.witness_subfamily,
                "finite_intersection": star.intersection_of_radicals,
            }),
        },
    ];
    let consistent = conditions.iter().all(|c| !c.holds);
    Ok(PidTheorem8Report {
        domain: domain.to_string(),
        conditions,
        consistent,
        dcc_radical_failure_chain: dcc_chain,
        artinian_failure_chain: artinian_chain,
    })
}

/// Parses a domain spec: `Z`, or `Fp[x]` for a small prime `p`.
pub fn parse_domain(text: &str) -> Result<PidDomain> {
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned == "Z" {
        return Ok(PidDomain::Integers);
    }
    if let Some(rest) = cleaned.strip_prefix('F') {
        if let Some(p_text) = rest.strip_suffix("[x]") {
            let p: u32 = p_text
                .parse()
                .map_err(|_| Error::Parse(format!("bad prime in domain '{text}'")))?;
            if p > POLY_PRIME_CAP || !is_prime_u64(p as u64) {
                return Err(Error::Parse(format!(
                    "domain prime must be a prime at most {POLY_PRIME_CAP}, got {p}"
                )));
            }
            return Ok(PidDomain::PolyOver(p));
        }
    }
    Err(Error::Parse(format!(
        "expected 'Z' or 'Fp[x]' as domain, got '{text}'"
    )))
}

/// Parses one generator in the given domain: a non-negative integer, or a
/// polynomial in caret notation.
pub fn parse_generator(domain: PidDomain, text: &str) -> Result<PidIdeal> {
    match domain {
        PidDomain::Integers => {
            let n: u64 = text
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer generator '{text}'")))?;
            Ok(PidIdeal::Int(n))
        }
        PidDomain::PolyOver(p) => {
            let coeffs = crate::ring::parse_poly(text)?;
            let coeffs: Vec<u32> = coeffs.iter().map(|&c| c as u32).collect();
            PidIdeal::poly(p, &coeffs)
        }
    }
}

/// Parses a family spec: `finite:g1,g2,...`, `all-primes`, or
/// `prime-powers:g`.
pub fn parse_family_spec(domain: PidDomain, text: &str) -> Result<FamilySpec> {
    let cleaned = text.trim();
    if cleaned == "all-primes" {
        return Ok(FamilySpec::all_primes(domain));
    }
    if let Some(gens) = cleaned.strip_prefix("finite:") {
        let ideals: Vec<PidIdeal> = gens
            .split(',')
            .map(|g| parse_generator(domain, g))
            .collect::<Result<_>>()?;
        return FamilySpec::finite_list(ideals);
    }
    if let Some(base) = cleaned.strip_prefix("prime-powers:") {
        return FamilySpec::prime_powers(parse_generator(domain, base)?);
    }
    Err(Error::Parse(format!(
        "expected 'finite:...', 'all-primes' or 'prime-powers:...', got '{text}'"
    )))
}
