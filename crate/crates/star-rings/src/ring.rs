//! Finite commutative rings with identity.
//!
//! Elements are dense indices `0..order`. Operations are stored as full
//! `order * order` lookup tables computed arithmetically by the structured
//! constructors; the order is capped at [`MAX_ORDER`] so that exhaustive
//! axiom checks and ideal-lattice enumeration stay tractable. Every value is
//! immutable after construction and rings are shared through [`Ring`]
//! (`Arc<FiniteRing>`).

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::{generate_ideal, Ideal};

/// Hard cap on ring order.
pub const MAX_ORDER: usize = 256;

/// Shared handle to an immutable finite ring.
pub type Ring = Arc<FiniteRing>;

/// A finite commutative ring with identity, given by explicit operation
/// tables over element indices `0..order`.
#[derive(Clone)]
pub struct FiniteRing {
    order: usize,
    zero: usize,
    one: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    label: String,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteRing({}, order {})", self.label, self.order)
    }
}

/// Structural equality of the carrier: same order and identical operation
/// tables. Labels are display metadata and do not participate.
impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && self.zero == other.zero
            && self.one == other.one
            && self.add == other.add
            && self.mul == other.mul
    }
}

impl Eq for FiniteRing {}

impl FiniteRing {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_zero_ring(&self) -> bool {
        self.order == 1
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    /// `a^k` for `k >= 1`.
    pub fn pow(&self, a: usize, k: usize) -> usize {
        assert!(k >= 1, "pow is only defined for positive exponents");
        let mut acc = a;
        for _ in 1..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// The sequence of distinct powers `a^1, a^2, ...` up to the first
    /// repetition. Its length is at most `order`.
    pub fn power_orbit(&self, a: usize) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        let mut orbit = Vec::new();
        let mut cur = a;
        while !seen[cur] {
            seen[cur] = true;
            orbit.push(cur);
            cur = self.mul(cur, a);
        }
        orbit
    }

    pub fn is_unit(&self, a: usize) -> bool {
        self.elements().any(|b| self.mul(a, b) == self.one)
    }

    pub fn unit_count(&self) -> usize {
        self.elements().filter(|&a| self.is_unit(a)).count()
    }

    /// Least `k >= 1` with `k * 1 = 0`; equals 1 exactly for the zero ring.
    pub fn characteristic(&self) -> usize {
        let mut acc = self.one;
        let mut k = 1;
        while acc != self.zero {
            acc = self.add(acc, self.one);
            k += 1;
        }
        k
    }

    /// No nonzero zero-divisors and `1 != 0`.
    pub fn is_domain(&self) -> bool {
        self.zero_divisor_pair().is_none() && self.order > 1
    }

    /// First pair `(a, b)` of nonzero elements with `a * b = 0`, in
    /// lexicographic element order.
    pub fn zero_divisor_pair(&self) -> Option<(usize, usize)> {
        for a in self.elements().filter(|&a| a != self.zero) {
            for b in self.elements().filter(|&b| b != self.zero) {
                if self.mul(a, b) == self.zero {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Every nonzero element invertible and `1 != 0`.
    pub fn is_field(&self) -> bool {
        self.order > 1
            && self
                .elements()
                .filter(|&a| a != self.zero)
                .all(|a| self.is_unit(a))
    }

    /// Builds a ring directly from operation tables without any validation.
    /// Used for fault-injection tests and by the structured constructors;
    /// run [`validate_axioms`] to check the result.
    pub fn from_tables(
        order: usize,
        zero: usize,
        one: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        label: impl Into<String>,
    ) -> Ring {
        assert!((1..=MAX_ORDER).contains(&order));
        assert_eq!(add.len(), order * order);
        assert_eq!(mul.len(), order * order);
        let mut neg = vec![0u16; order];
        for a in 0..order {
            // falls back to 0 if no inverse exists; validate_axioms reports it
            let inv = (0..order).find(|&b| add[a * order + b] as usize == zero);
            neg[a] = inv.unwrap_or(0) as u16;
        }
        Arc::new(FiniteRing {
            order,
            zero,
            one,
            add,
            mul,
            neg,
            label: label.into(),
        })
    }

    fn build(
        order: usize,
        label: String,
        add_fn: impl Fn(usize, usize) -> usize,
        mul_fn: impl Fn(usize, usize) -> usize,
        zero: usize,
        one: usize,
    ) -> Ring {
        let mut add = vec![0u16; order * order];
        let mut mul = vec![0u16; order * order];
        for a in 0..order {
            for b in 0..order {
                add[a * order + b] = add_fn(a, b) as u16;
                mul[a * order + b] = mul_fn(a, b) as u16;
            }
        }
        FiniteRing::from_tables(order, zero, one, add, mul, label)
    }
}

/// The ring of residues modulo `n`, labeled `Z/n`. `n = 1` yields the zero
/// ring, where `one == zero`.
pub fn residue_ring(n: usize) -> Result<Ring> {
    if n == 0 {
        return Err(Error::InvalidRing("modulus must be positive".into()));
    }
    if n > MAX_ORDER {
        return Err(Error::ResourceCap(format!(
            "order {n} exceeds the cap {MAX_ORDER}"
        )));
    }
    Ok(FiniteRing::build(
        n,
        format!("Z/{n}"),
        |a, b| (a + b) % n,
        |a, b| (a * b) % n,
        0,
        1 % n,
    ))
}

/// `F_p[x]/(f)` for a prime `p` and a monic `f` of degree `d >= 1`, given as
/// a little-endian coefficient list (constant term first, leading coefficient
/// last). Elements are polynomials of degree `< d`, indexed by their
/// coefficient digits in base `p`; the class of `x` therefore has index `p`.
pub fn poly_quotient_ring(p: usize, f: &[usize]) -> Result<Ring> {
    if !is_prime_integer(p) {
        return Err(Error::InvalidRing(format!("{p} is not prime")));
    }
    if f.len() < 2 {
        return Err(Error::InvalidRing(
            "modulus polynomial must have degree >= 1".into(),
        ));
    }
    if *f.last().unwrap() != 1 {
        return Err(Error::InvalidRing("modulus polynomial must be monic".into()));
    }
    if f.iter().any(|&c| c >= p) {
        return Err(Error::InvalidRing(format!(
            "coefficients must lie in 0..{p}"
        )));
    }
    let d = f.len() - 1;
    let order = p.checked_pow(d as u32).filter(|&o| o <= MAX_ORDER).ok_or(
        Error::ResourceCap(format!("order p^{d} exceeds the cap {MAX_ORDER}")),
    )?;

    let decode = |idx: usize| -> Vec<usize> {
        let mut digits = vec![0usize; d];
        let mut rest = idx;
        for digit in digits.iter_mut() {
            *digit = rest % p;
            rest /= p;
        }
        digits
    };
    let encode = |digits: &[usize]| -> usize {
        digits.iter().rev().fold(0, |acc, &c| acc * p + c)
    };
    let add_fn = |a: usize, b: usize| {
        let (da, db) = (decode(a), decode(b));
        let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
        encode(&sum)
    };
    let mul_fn = |a: usize, b: usize| {
        let (da, db) = (decode(a), decode(b));
        // convolve, then reduce modulo the monic f
        let mut prod = vec![0usize; 2 * d];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for i in (d..2 * d).rev() {
            let c = prod[i];
            if c != 0 {
                prod[i] = 0;
                for (k, &fc) in f.iter().enumerate().take(d) {
                    let pos = i - d + k;
                    prod[pos] = (prod[pos] + p * p - c * fc % p) % p;
                }
            }
        }
        encode(&prod[..d])
    };
    let label = format!("F{p}[x]/({})", poly_label(f));
    Ok(FiniteRing::build(order, label, add_fn, mul_fn, 0, 1))
}

pub(crate) fn poly_label(f: &[usize]) -> String {
    let mut terms = Vec::new();
    for (k, &c) in f.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let term = match (k, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".into(),
            (1, c) => format!("{c}x"),
            (k, 1) => format!("x^{k}"),
            (k, c) => format!("{c}x^{k}"),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

fn is_prime_integer(n: usize) -> bool {
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

/// Componentwise product ring. The pair `(a, b)` is encoded as
/// `a * |R2| + b`.
pub fn product_ring(r1: &Ring, r2: &Ring) -> Result<Ring> {
    let (n1, n2) = (r1.order(), r2.order());
    let order = n1 * n2;
    if order > MAX_ORDER {
        return Err(Error::ResourceCap(format!(
            "product order {order} exceeds the cap {MAX_ORDER}"
        )));
    }
    let wrap = |label: &str| -> String {
        if label.contains(' ') {
            format!("({label})")
        } else {
            label.to_string()
        }
    };
    let label = format!("{} x {}", wrap(r1.label()), wrap(r2.label()));
    let add_fn = |a: usize, b: usize| {
        let (a1, a2) = (a / n2, a % n2);
        let (b1, b2) = (b / n2, b % n2);
        r1.add(a1, b1) * n2 + r2.add(a2, b2)
    };
    let mul_fn = |a: usize, b: usize| {
        let (a1, a2) = (a / n2, a % n2);
        let (b1, b2) = (b / n2, b % n2);
        r1.mul(a1, b1) * n2 + r2.mul(a2, b2)
    };
    Ok(FiniteRing::build(
        order,
        label,
        add_fn,
        mul_fn,
        r1.zero() * n2 + r2.zero(),
        r1.one() * n2 + r2.one(),
    ))
}

/// A homomorphism of finite rings given by its value table.
#[derive(Clone)]
pub struct RingHom {
    source: Ring,
    target: Ring,
    map: Vec<u16>,
}

impl RingHom {
    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a] as usize
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        for &v in &self.map {
            hit[v as usize] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// Exhaustively checks that the map preserves add, mul, zero and one.
    /// Returns the first violating pair, if any.
    pub fn check_preserves(&self) -> Option<(usize, usize)> {
        let (s, t) = (&self.source, &self.target);
        if self.apply(s.zero()) != t.zero() || self.apply(s.one()) != t.one() {
            return Some((s.zero(), s.one()));
        }
        for a in s.elements() {
            for b in s.elements() {
                if self.apply(s.add(a, b)) != t.add(self.apply(a), self.apply(b))
                    || self.apply(s.mul(a, b)) != t.mul(self.apply(a), self.apply(b))
                {
                    return Some((a, b));
                }
            }
        }
        None
    }
}

/// Quotient by an ideal. Cosets are elements, each represented by its least
/// member; the returned projection is surjective.
pub fn quotient_ring(ring: &Ring, ideal: &Ideal) -> Result<(Ring, RingHom)> {
    ideal.check_ring(ring)?;
    let n = ring.order();
    // least member of each coset
    let mut rep = vec![usize::MAX; n];
    for x in ring.elements() {
        if rep[x] != usize::MAX {
            continue;
        }
        let coset_min = ideal
            .members()
            .map(|i| ring.add(x, i))
            .min()
            .expect("ideal contains zero");
        for i in ideal.members() {
            rep[ring.add(x, i)] = coset_min;
        }
    }
    let mut reps: Vec<usize> = rep.to_vec();
    reps.sort_unstable();
    reps.dedup();
    let order = reps.len();
    let rank = |x: usize| reps.binary_search(&rep[x]).expect("rep is canonical");

    let label = {
        let parent = if ring.label().contains(' ') {
            format!("({})", ring.label())
        } else {
            ring.label().to_string()
        };
        format!("{parent}/({})", ideal.generator_label())
    };
    let quotient = FiniteRing::build(
        order,
        label,
        |a, b| rank(ring.add(reps[a], reps[b])),
        |a, b| rank(ring.mul(reps[a], reps[b])),
        rank(ring.zero()),
        rank(ring.one()),
    );
    let map: Vec<u16> = ring.elements().map(|x| rank(x) as u16).collect();
    let hom = RingHom {
        source: ring.clone(),
        target: quotient.clone(),
        map,
    };
    Ok((quotient, hom))
}

/// Localization at a prime ideal `P`, realized as the quotient by the
/// saturation kernel `I_S = { r : s*r = 0 for some s outside P }`. In a
/// finite ring every element outside `P` becomes a unit in this quotient, so
/// the result is the local ring at `P` together with the natural map.
pub fn localize_at_prime(ring: &Ring, prime: &Ideal) -> Result<(Ring, RingHom)> {
    prime.check_ring(ring)?;
    if !prime.is_prime() {
        return Err(Error::NotPrime {
            ring: ring.label().to_string(),
            reason: format!("({})", prime.generator_label()),
        });
    }
    let kernel: Vec<usize> = ring
        .elements()
        .filter(|&r| {
            ring.elements()
                .any(|s| !prime.contains(s) && ring.mul(s, r) == ring.zero())
        })
        .collect();
    let kernel_ideal = Ideal::from_members(ring, &kernel)?;
    let (localized, hom) = quotient_ring(ring, &kernel_ideal)?;
    let label = {
        let parent = if ring.label().contains(' ') {
            format!("({})", ring.label())
        } else {
            ring.label().to_string()
        };
        format!("{parent} at ({})", prime.generator_label())
    };
    let relabeled = Arc::new(FiniteRing {
        label,
        ..(*localized).clone()
    });
    let hom = RingHom {
        source: hom.source,
        target: relabeled.clone(),
        map: hom.map,
    };
    Ok((relabeled, hom))
}

/// The ideal of `hom.target` generated by the image of `ideal`.
pub fn extend_ideal(hom: &RingHom, ideal: &Ideal) -> Result<Ideal> {
    ideal.check_ring(hom.source())?;
    let image: Vec<usize> = ideal.members().map(|x| hom.apply(x)).collect();
    generate_ideal(hom.target(), &image)
}

/// One ring axiom, for violation reporting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum AxiomLaw {
    TableRange,
    AddAssociative,
    AddCommutative,
    AddIdentity,
    AddInverse,
    MulAssociative,
    MulCommutative,
    MulIdentity,
    Distributive,
    OneDistinctFromZero,
}

impl fmt::Display for AxiomLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            AxiomLaw::TableRange => "operation table entry out of range",
            AxiomLaw::AddAssociative => "addition is associative",
            AxiomLaw::AddCommutative => "addition is commutative",
            AxiomLaw::AddIdentity => "zero is an additive identity",
            AxiomLaw::AddInverse => "every element has an additive inverse",
            AxiomLaw::MulAssociative => "multiplication is associative",
            AxiomLaw::MulCommutative => "multiplication is commutative",
            AxiomLaw::MulIdentity => "one is a multiplicative identity",
            AxiomLaw::Distributive => "multiplication distributes over addition",
            AxiomLaw::OneDistinctFromZero => "one differs from zero when order > 1",
        };
        f.write_str(name)
    }
}

/// Result of the exhaustive axiom check: the first violated law with a
/// witness triple, or a clean pass.
#[derive(Clone, Debug, serde::Serialize)]
pub struct AxiomReport {
    pub ring: String,
    pub order: usize,
    pub violation: Option<AxiomViolation>,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct AxiomViolation {
    pub law: AxiomLaw,
    pub witness: Vec<usize>,
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.violation.is_none()
    }
}

/// Exhaustively checks every ring axiom, reporting the first violation in a
/// fixed law-then-lexicographic order.
pub fn validate_axioms(ring: &FiniteRing) -> AxiomReport {
    let n = ring.order();
    let fail = |law: AxiomLaw, witness: Vec<usize>| AxiomReport {
        ring: ring.label().to_string(),
        order: n,
        violation: Some(AxiomViolation { law, witness }),
    };

    for a in 0..n {
        for b in 0..n {
            if ring.add(a, b) >= n || ring.mul(a, b) >= n {
                return fail(AxiomLaw::TableRange, vec![a, b]);
            }
        }
    }
    if ring.zero() >= n || ring.one() >= n {
        return fail(AxiomLaw::TableRange, vec![ring.zero(), ring.one()]);
    }
    for a in 0..n {
        for b in 0..n {
            if ring.add(a, b) != ring.add(b, a) {
                return fail(AxiomLaw::AddCommutative, vec![a, b]);
            }
            if ring.mul(a, b) != ring.mul(b, a) {
                return fail(AxiomLaw::MulCommutative, vec![a, b]);
            }
        }
    }
    for a in 0..n {
        if ring.add(a, ring.zero()) != a {
            return fail(AxiomLaw::AddIdentity, vec![a]);
        }
        if ring.mul(a, ring.one()) != a {
            return fail(AxiomLaw::MulIdentity, vec![a]);
        }
        if !(0..n).any(|b| ring.add(a, b) == ring.zero()) {
            return fail(AxiomLaw::AddInverse, vec![a]);
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c)) {
                    return fail(AxiomLaw::AddAssociative, vec![a, b, c]);
                }
                if ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c)) {
                    return fail(AxiomLaw::MulAssociative, vec![a, b, c]);
                }
                if ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c)) {
                    return fail(AxiomLaw::Distributive, vec![a, b, c]);
                }
            }
        }
    }
    if n > 1 && ring.one() == ring.zero() {
        return fail(AxiomLaw::OneDistinctFromZero, vec![ring.one()]);
    }
    AxiomReport {
        ring: ring.label().to_string(),
        order: n,
        violation: None,
    }
}

/// Parses the ring-spec grammar: `atom := "Z/" n | "F" p "[x]/(" poly ")"`,
/// `expr := atom ("x" atom)*`, whitespace insignificant. Polynomials use
/// caret notation, e.g. `x^2+x+1`.
pub fn parse_ring_spec(spec: &str) -> Result<Ring> {
    let text: Vec<char> = spec.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return Err(Error::Parse("empty ring spec".into()));
    }
    let mut pos = 0;
    let mut ring = parse_atom(&text, &mut pos)?;
    while pos < text.len() {
        if text[pos] != 'x' {
            return Err(Error::Parse(format!(
                "expected product separator 'x' at '{}'",
                tail(&text, pos)
            )));
        }
        pos += 1;
        let next = parse_atom(&text, &mut pos)?;
        ring = product_ring(&ring, &next)?;
    }
    Ok(ring)
}

fn tail(text: &[char], pos: usize) -> String {
    text[pos.min(text.len())..].iter().collect()
}

fn parse_atom(text: &[char], pos: &mut usize) -> Result<Ring> {
    match text.get(*pos) {
        Some('Z') => {
            *pos += 1;
            if text.get(*pos) != Some(&'/') {
                return Err(Error::Parse(format!(
                    "expected '/' after 'Z' at '{}'",
                    tail(text, *pos)
                )));
            }
            *pos += 1;
            let n = parse_uint(text, pos)?;
            residue_ring(n)
        }
        Some('F') => {
            *pos += 1;
            let p = parse_uint(text, pos)?;
            for expected in ['[', 'x', ']', '/', '('] {
                if text.get(*pos) != Some(&expected) {
                    return Err(Error::Parse(format!(
                        "expected '{expected}' at '{}'",
                        tail(text, *pos)
                    )));
                }
                *pos += 1;
            }
            let close = text[*pos..]
                .iter()
                .position(|&c| c == ')')
                .ok_or_else(|| Error::Parse("unbalanced '(' in polynomial".into()))?;
            let poly_text: String = text[*pos..*pos + close].iter().collect();
            *pos += close + 1;
            let coeffs = parse_poly(&poly_text)?;
            poly_quotient_ring(p, &coeffs)
        }
        _ => Err(Error::Parse(format!(
            "expected 'Z/n' or 'Fp[x]/(f)' at '{}'",
            tail(text, *pos)
        ))),
    }
}

fn parse_uint(text: &[char], pos: &mut usize) -> Result<usize> {
    let start = *pos;
    while text.get(*pos).is_some_and(|c| c.is_ascii_digit()) {
        *pos += 1;
    }
    if start == *pos {
        return Err(Error::Parse(format!(
            "expected a number at '{}'",
            tail(text, *pos)
        )));
    }
    text[start..*pos]
        .iter()
        .collect::<String>()
        .parse()
        .map_err(|_| Error::Parse("number too large".into()))
}

/// Parses caret notation (`x^2+2x+1`) into a little-endian coefficient list.
pub fn parse_poly(text: &str) -> Result<Vec<usize>> {
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut coeffs: Vec<usize> = Vec::new();
    for term in cleaned.split('+') {
        if term.is_empty() {
            return Err(Error::Parse(format!("empty term in polynomial '{text}'")));
        }
        let (coeff, degree) = match term.find('x') {
            None => {
                let c = term
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad term '{term}'")))?;
                (c, 0)
            }
            Some(ix) => {
                let c = if ix == 0 {
                    1
                } else {
                    term[..ix]
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad coefficient in '{term}'")))?
                };
                let rest = &term[ix + 1..];
                let d = if rest.is_empty() {
                    1
                } else if let Some(exp) = rest.strip_prefix('^') {
                    exp.parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in '{term}'")))?
                } else {
                    return Err(Error::Parse(format!("bad term '{term}'")));
                };
                (c, d)
            }
        };
        if degree > 16 {
            return Err(Error::ResourceCap(format!(
                "polynomial degree {degree} exceeds the cap 16"
            )));
        }
        if coeffs.len() <= degree {
            coeffs.resize(degree + 1, 0);
        }
        coeffs[degree] += coeff;
    }
    while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
        coeffs.pop();
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::generate_ideal;

    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn residue_ring_z6_basic_arithmetic() {
        let r = residue_ring(6).unwrap();
        assert_eq!(r.mul(2, 3), 0);
        assert!(r.is_unit(5));
        assert!(!r.is_unit(2));
        assert_eq!(r.label(), "Z/6");
    }

    #[test]
    fn residue_ring_one_is_zero_ring() {
        let r = residue_ring(1).unwrap();
        assert_eq!(r.order(), 1);
        assert_eq!(r.one(), r.zero());
        assert!(r.is_zero_ring());
        assert!(validate_axioms(&r).is_ok());
    }

    #[test]
    fn residue_ring_rejects_zero_modulus() {
        assert!(matches!(residue_ring(0), Err(Error::InvalidRing(_))));
    }

    #[test]
    fn residue_ring_z12_units_match_gcd_oracle() {
        let r = residue_ring(12).unwrap();
        let expected: Vec<usize> = (0..12).filter(|&k| gcd(k, 12) == 1).collect();
        assert_eq!(expected, vec![1, 5, 7, 11]);
        let units: Vec<usize> = r.elements().filter(|&a| r.is_unit(a)).collect();
        assert_eq!(units, expected);
        assert_eq!(r.unit_count(), 4);
    }

    #[test]
    fn poly_quotient_gf4_is_a_field() {
        let r = poly_quotient_ring(2, &[1, 1, 1]).unwrap();
        assert_eq!(r.order(), 4);
        for a in 1..4 {
            assert!(r.is_unit(a), "{a} must be invertible in GF(4)");
        }
        assert!(r.is_field());
        assert!(validate_axioms(&r).is_ok());
    }

    #[test]
    fn poly_quotient_dual_numbers_square_to_zero() {
        let r = poly_quotient_ring(2, &[0, 0, 1]).unwrap();
        assert_eq!(r.order(), 4);
        // the class of x has index p = 2
        assert_eq!(r.mul(2, 2), 0);
        assert!(!r.is_field());
    }

    #[test]
    fn poly_quotient_linear_modulus_matches_prime_field() {
        let r = poly_quotient_ring(3, &[0, 1]).unwrap();
        let z3 = residue_ring(3).unwrap();
        assert_eq!(*r, *z3);
    }

    #[test]
    fn poly_quotient_rejects_bad_input() {
        assert!(matches!(
            poly_quotient_ring(4, &[1, 1]),
            Err(Error::InvalidRing(_))
        ));
        assert!(matches!(
            poly_quotient_ring(3, &[1, 2]),
            Err(Error::InvalidRing(_))
        ));
        assert!(matches!(
            poly_quotient_ring(2, &[1]),
            Err(Error::InvalidRing(_))
        ));
    }

    #[test]
    fn product_ring_z2_z3_has_two_units() {
        let r = product_ring(&residue_ring(2).unwrap(), &residue_ring(3).unwrap()).unwrap();
        assert_eq!(r.order(), 6);
        assert_eq!(r.unit_count(), 2);
        assert!(validate_axioms(&r).is_ok());
    }

    #[test]
    fn product_with_zero_ring_is_table_identical() {
        let r = residue_ring(8).unwrap();
        let z = residue_ring(1).unwrap();
        let p = product_ring(&r, &z).unwrap();
        assert_eq!(*p, *r);
    }

    #[test]
    fn validate_axioms_passes_on_constructors() {
        for ring in [
            residue_ring(6).unwrap(),
            poly_quotient_ring(2, &[1, 1, 1]).unwrap(),
            product_ring(&residue_ring(4).unwrap(), &residue_ring(9).unwrap()).unwrap(),
        ] {
            let report = validate_axioms(&ring);
            assert!(report.is_ok(), "{}: {:?}", ring.label(), report.violation);
        }
    }

    #[test]
    fn validate_axioms_catches_corrupted_table() {
        let good = residue_ring(6).unwrap();
        let n = good.order();
        let mut mul: Vec<u16> = (0..n * n)
            .map(|i| good.mul(i / n, i % n) as u16)
            .collect();
        let add: Vec<u16> = (0..n * n).map(|i| good.add(i / n, i % n) as u16).collect();
        // break commutativity at (2, 3)
        mul[2 * n + 3] = 5;
        let bad = FiniteRing::from_tables(n, 0, 1, add, mul, "corrupted");
        let report = validate_axioms(&bad);
        let violation = report.violation.expect("corruption must be detected");
        assert_eq!(violation.law, AxiomLaw::MulCommutative);
        assert_eq!(violation.witness, vec![2, 3]);
    }

    #[test]
    fn quotient_z12_by_four_matches_z4() {
        let r = residue_ring(12).unwrap();
        let i = generate_ideal(&r, &[4]).unwrap();
        let (q, hom) = quotient_ring(&r, &i).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(*q, *residue_ring(4).unwrap());
        assert!(hom.is_surjective());
        assert_eq!(hom.check_preserves(), None);
    }

    #[test]
    fn quotient_by_zero_is_bijective() {
        let r = residue_ring(9).unwrap();
        let zero = generate_ideal(&r, &[]).unwrap();
        let (q, hom) = quotient_ring(&r, &zero).unwrap();
        assert_eq!(*q, *r);
        assert!(hom.is_surjective());
        assert!((0..9).all(|x| hom.apply(x) == x));
    }

    #[test]
    fn quotient_z12_by_two_is_a_field() {
        let r = residue_ring(12).unwrap();
        let i = generate_ideal(&r, &[2]).unwrap();
        let (q, _) = quotient_ring(&r, &i).unwrap();
        assert_eq!(q.order(), 2);
        assert!(q.is_field());
    }

    #[test]
    fn quotient_rejects_non_ideal() {
        let r = residue_ring(12).unwrap();
        let not_ideal = Ideal::from_members(&r, &[0, 1]);
        assert!(matches!(not_ideal, Err(Error::NotAnIdeal { .. })));
    }

    #[test]
    fn localize_z12_at_two_gives_order_four_local_ring() {
        let r = residue_ring(12).unwrap();
        let p = generate_ideal(&r, &[2]).unwrap();
        // saturation-scan oracle: r is killed iff some s outside P annihilates it
        let kernel: Vec<usize> = (0..12)
            .filter(|&x| (0..12).any(|s| s % 2 != 0 && (s * x) % 12 == 0))
            .collect();
        assert_eq!(kernel, vec![0, 4, 8]);
        let (loc, hom) = localize_at_prime(&r, &p).unwrap();
        assert_eq!(loc.order(), 4);
        assert_eq!(hom.check_preserves(), None);
    }

    #[test]
    fn localize_z12_at_three_gives_order_three_field() {
        let r = residue_ring(12).unwrap();
        let p = generate_ideal(&r, &[3]).unwrap();
        let kernel: Vec<usize> = (0..12)
            .filter(|&x| (0..12).any(|s| s % 3 != 0 && (s * x) % 12 == 0))
            .collect();
        assert_eq!(kernel, vec![0, 3, 6, 9]);
        let (loc, _) = localize_at_prime(&r, &p).unwrap();
        assert_eq!(loc.order(), 3);
        assert!(loc.is_field());
    }

    #[test]
    fn localize_field_at_zero_is_identity() {
        let f = poly_quotient_ring(2, &[1, 1, 1]).unwrap();
        let zero = generate_ideal(&f, &[]).unwrap();
        let (loc, _) = localize_at_prime(&f, &zero).unwrap();
        assert_eq!(loc.order(), f.order());
    }

    #[test]
    fn localize_rejects_non_prime() {
        let r = residue_ring(12).unwrap();
        let i = generate_ideal(&r, &[4]).unwrap();
        assert!(matches!(
            localize_at_prime(&r, &i),
            Err(Error::NotPrime { .. })
        ));
    }

    #[test]
    fn extend_ideal_trivial_and_derived_cases() {
        let r = residue_ring(12).unwrap();
        let four = generate_ideal(&r, &[4]).unwrap();
        let (_, hom) = quotient_ring(&r, &four).unwrap();

        let zero = generate_ideal(&r, &[]).unwrap();
        let ext = extend_ideal(&hom, &zero).unwrap();
        assert_eq!(ext.members().collect::<Vec<_>>(), vec![0]);

        let unit = generate_ideal(&r, &[1]).unwrap();
        let ext = extend_ideal(&hom, &unit).unwrap();
        assert_eq!(ext.len(), 4);

        // closure oracle: image of (2) = {0,2,4,...} maps onto {0,2} mod (4)
        let two = generate_ideal(&r, &[2]).unwrap();
        let ext = extend_ideal(&hom, &two).unwrap();
        assert_eq!(ext.members().collect::<Vec<_>>(), vec![0, 2]);
    }

    #[test]
    fn characteristic_of_common_rings() {
        assert_eq!(residue_ring(12).unwrap().characteristic(), 12);
        assert_eq!(poly_quotient_ring(2, &[1, 1, 1]).unwrap().characteristic(), 2);
        assert_eq!(residue_ring(1).unwrap().characteristic(), 1);
    }

    #[test]
    fn parse_ring_spec_accepts_grammar() {
        assert_eq!(parse_ring_spec("Z/12").unwrap().order(), 12);
        assert_eq!(parse_ring_spec("F2[x]/(x^2+x+1)").unwrap().order(), 4);
        let prod = parse_ring_spec("Z/4 x F2[x]/(x^2)").unwrap();
        assert_eq!(prod.order(), 16);
        // whitespace insignificant
        assert_eq!(parse_ring_spec("Z/4xZ/9").unwrap().order(), 36);
        assert_eq!(parse_ring_spec(" Z / 6 ").unwrap().order(), 6);
    }

    #[test]
    fn parse_ring_spec_names_offending_token() {
        let err = parse_ring_spec("Q/4").unwrap_err();
        assert!(err.to_string().contains("Q/4"), "{err}");
        assert!(parse_ring_spec("Z/4 y Z/3").is_err());
        assert!(parse_ring_spec("F2[x]/(x^2").is_err());
        assert!(parse_ring_spec("Z/").is_err());
    }

    #[test]
    fn parse_poly_caret_notation() {
        assert_eq!(parse_poly("x^2+x+1").unwrap(), vec![1, 1, 1]);
        assert_eq!(parse_poly("x^3+2x+2").unwrap(), vec![2, 2, 0, 1]);
        assert_eq!(parse_poly("x").unwrap(), vec![0, 1]);
        assert_eq!(parse_poly("5").unwrap(), vec![5]);
        assert!(parse_poly("x^+1").is_err());
        assert!(parse_poly("").is_err());
    }
}
