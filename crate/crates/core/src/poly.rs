//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Every [`Polynomial`] belongs to exactly one [`RingSpec`], an ordered list
//! of variable names. The order fixes the exponent-vector layout and the
//! monomial order (graded lexicographic, first variable largest). Values from
//! different rings never mix: arithmetic between them is an error, and moving
//! a polynomial into another ring takes an explicit [`Homomorphism`].

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Shared handle to a ring. Polynomials hold one of these.
pub type Ring = Arc<RingSpec>;

/// The polynomial ring `Z[x_1, ..., x_n]` described by its variable names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingSpec {
    names: Vec<String>,
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingSpec {
    /// Builds a ring from distinct identifiers (`[A-Za-z_][A-Za-z0-9_]*`).
    ///
    /// ```
    /// use completion_kit::RingSpec;
    ///
    /// let ring = RingSpec::new(["g", "h", "j", "k"]).unwrap();
    /// assert_eq!(ring.len(), 4);
    /// assert!(RingSpec::new(["a", "a"]).is_err());
    /// ```
    pub fn new<I, S>(names: I) -> Result<Ring>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyRing);
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidIdentifier(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        Ok(Arc::new(RingSpec { names }))
    }

    pub fn variables(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The variable with the given name, as a polynomial.
    pub fn var(self: &Arc<Self>, name: &str) -> Result<Polynomial> {
        let i = self
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(self.variable(i))
    }

    /// The `i`-th variable as a polynomial. Panics if `i` is out of range.
    pub fn variable(self: &Arc<Self>, i: usize) -> Polynomial {
        assert!(i < self.len(), "variable index {i} out of range");
        let mut exps = vec![0; self.len()];
        exps[i] = 1;
        Polynomial::monomial(self, Monomial::new(exps), BigInt::one())
    }

    /// Parses an expression over this ring. See [`crate::parse`].
    pub fn parse(self: &Arc<Self>, text: &str) -> Result<Polynomial> {
        crate::parse::parse(text, self)
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z[{}]", self.names.join(","))
    }
}

fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub(crate) fn ensure_same_ring(a: &Ring, b: &Ring) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(Error::RingMismatch {
            left: a.to_string(),
            right: b.to_string(),
        })
    }
}

/// An exponent vector. Ordered graded-lexicographically: higher total degree
/// first, ties broken by comparing exponents in variable order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn new(exponents: impl Into<Box<[u32]>>) -> Self {
        Monomial(exponents.into())
    }

    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity].into())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in canonical form: no zero coefficients are ever stored, so
/// structural equality is equality of polynomials.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, BigInt::one())
    }

    pub fn constant(ring: &Ring, value: impl Into<BigInt>) -> Self {
        Self::monomial(ring, Monomial::one(ring.len()), value.into())
    }

    /// A single term. Panics if the monomial's arity does not match the ring.
    pub fn monomial(ring: &Ring, monomial: Monomial, coefficient: BigInt) -> Self {
        assert_eq!(monomial.0.len(), ring.len(), "monomial arity");
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(monomial, coefficient);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Collects terms, merging repeated monomials and dropping zeros.
    pub fn from_terms<I, M, C>(ring: &Ring, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (M, C)>,
        M: Into<Box<[u32]>>,
        C: Into<BigInt>,
    {
        let mut map: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in terms {
            let m = Monomial::new(m);
            if m.0.len() != ring.len() {
                return Err(Error::Arity {
                    expected: ring.len(),
                    found: m.0.len(),
                });
            }
            *map.entry(m).or_default() += c.into();
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Polynomial {
            ring: ring.clone(),
            terms: map,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, monomial: &Monomial) -> BigInt {
        self.terms.get(monomial).cloned().unwrap_or_default()
    }

    /// The value of a constant polynomial (including zero), `None` otherwise.
    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        ensure_same_ring(&self.ring, &other.ring)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m, c.clone());
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        ensure_same_ring(&self.ring, &other.ring)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m, -c);
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        ensure_same_ring(&self.ring, &other.ring)?;
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                *terms.entry(m1.mul(m2)).or_default() += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn scale(&self, factor: &BigInt) -> Polynomial {
        if factor.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    /// `self^n` by repeated squaring; `p^0 = 1`, including for `p = 0`.
    pub fn pow(&self, mut n: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Evaluates at an integer point given in the ring's variable order.
    pub fn evaluate(&self, point: &[BigInt]) -> Result<BigInt> {
        if point.len() != self.ring.len() {
            return Err(Error::Arity {
                expected: self.ring.len(),
                found: point.len(),
            });
        }
        let mut sum = BigInt::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(m.0.iter()) {
                if e > 0 {
                    term *= num_traits::pow(x.clone(), e as usize);
                }
            }
            sum += term;
        }
        Ok(sum)
    }
}

fn add_term(terms: &mut BTreeMap<Monomial, BigInt>, m: &Monomial, c: BigInt) {
    match terms.get_mut(m) {
        Some(existing) => {
            *existing += c;
            if existing.is_zero() {
                terms.remove(m);
            }
        }
        None => {
            if !c.is_zero() {
                terms.insert(m.clone(), c);
            }
        }
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

// The operator forms panic on a ring mismatch; use the `checked_*` methods
// when the rings are not known to agree.

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial multiplication")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial, names: &[String]) -> fmt::Result {
    let mut first = true;
    for (name, &e) in names.iter().zip(m.0.iter()) {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(name)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Canonical text form: terms in descending graded-lex order, `*` between
/// factors, `^` for powers, unit coefficients omitted. `0` for zero.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let magnitude = c.abs();
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{magnitude}*")?;
                }
                write_monomial(f, m, &self.ring.names)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({} in {})", self, self.ring)
    }
}

/// A ring map `source -> target` fixed by the image of each source variable.
#[derive(Debug, Clone)]
pub struct Homomorphism {
    source: Ring,
    target: Ring,
    images: Vec<Polynomial>,
}

impl Homomorphism {
    pub fn new(source: &Ring, target: &Ring, images: Vec<Polynomial>) -> Result<Self> {
        if images.len() != source.len() {
            return Err(Error::ImageCount {
                expected: source.len(),
                found: images.len(),
            });
        }
        for image in &images {
            ensure_same_ring(image.ring(), target)?;
        }
        Ok(Homomorphism {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    /// Images given as expressions over `target`, one per source variable.
    pub fn from_exprs(source: &Ring, target: &Ring, images: &[&str]) -> Result<Self> {
        let images = images
            .iter()
            .map(|text| target.parse(text))
            .collect::<Result<Vec<_>>>()?;
        Self::new(source, target, images)
    }

    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn image(&self, variable: usize) -> &Polynomial {
        &self.images[variable]
    }

    /// Substitutes every variable by its image and expands.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        ensure_same_ring(p.ring(), &self.source)?;
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut result = Polynomial::zero(&self.target);
        for (m, c) in &p.terms {
            let mut term = Polynomial::constant(&self.target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let power = powers
                    .entry((i, e))
                    .or_insert_with(|| self.images[i].pow(e));
                term = &term * power;
                if term.is_zero() {
                    break;
                }
            }
            result = &result + &term;
        }
        Ok(result)
    }
}
