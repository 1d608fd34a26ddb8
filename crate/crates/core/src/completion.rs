//! Completing a unimodular row `(a, b, c)` to a 3x3 matrix of determinant 1
//! when `z^2 + bz + ac` has roots `alpha, beta` in the ring.
//!
//! The template matrix is evaluated at `A = a, B = -alpha, C = -beta, D = c`.
//! Then `AD - BC = ac - alpha*beta = 0`, the first column becomes
//! `(a, -alpha - beta, c) = (a, b, c)`, and the determinant is the product of
//! `a^2 s + alpha^2 t + beta^2 u + c^2 v` and
//! `a^2 w + alpha^2 x + beta^2 y + c^2 z`, both chosen to equal 1.
//!
//! Over `Z` the whole pipeline is automatic. Over other rings the caller
//! supplies roots and parameters ([`RingCompletionData`]).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::catalog::{template_matrix, template_ring, PARAMETERS};
use crate::error::{Error, Result};
use crate::linalg::{det3, PolyMatrix};
use crate::poly::{ensure_same_ring, Homomorphism, Polynomial};

pub type IntMatrix = [[BigInt; 3]; 3];

/// An integer row `(a, b, c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowInstance {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl RowInstance {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        RowInstance {
            a: a.into(),
            b: b.into(),
            c: c.into(),
        }
    }

    pub fn gcd(&self) -> BigInt {
        self.a.gcd(&self.b).gcd(&self.c)
    }

    pub fn is_unimodular(&self) -> bool {
        self.gcd().is_one()
    }

    pub fn discriminant(&self) -> BigInt {
        &self.b * &self.b - BigInt::from(4) * &self.a * &self.c
    }
}

impl fmt::Display for RowInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, {}, {}", self.a, self.b, self.c)
    }
}

/// Roots of `z^2 + bz + ac` plus the two parameter quadruples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionCertificate {
    pub alpha: BigInt,
    pub beta: BigInt,
    /// `s, t, u, v` with `a^2 s + alpha^2 t + beta^2 u + c^2 v = 1`.
    pub first: [BigInt; 4],
    /// `w, x, y, z` with `a^2 w + alpha^2 x + beta^2 y + c^2 z = 1`.
    pub second: [BigInt; 4],
}

impl CompletionCertificate {
    /// The squares `(a^2, alpha^2, beta^2, c^2)` both quadruples pair with.
    pub fn squares(row: &RowInstance, alpha: &BigInt, beta: &BigInt) -> [BigInt; 4] {
        [&row.a, alpha, beta, &row.c].map(|x| x * x)
    }

    pub fn validate(&self, row: &RowInstance) -> Result<()> {
        if &self.alpha + &self.beta != -&row.b {
            return Err(Error::InvalidCertificate("alpha + beta != -b".into()));
        }
        if &self.alpha * &self.beta != &row.a * &row.c {
            return Err(Error::InvalidCertificate("alpha * beta != a * c".into()));
        }
        let squares = Self::squares(row, &self.alpha, &self.beta);
        for (name, quad) in [("s,t,u,v", &self.first), ("w,x,y,z", &self.second)] {
            if !dot(&squares, quad).is_one() {
                return Err(Error::InvalidCertificate(format!(
                    "{name} does not pair with the squares to 1"
                )));
            }
        }
        Ok(())
    }
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Integer roots `alpha <= beta` of `z^2 + bz + ac`, if there are any.
///
/// ```
/// use completion_kit::completion::{integer_roots, RowInstance};
///
/// let roots = integer_roots(&RowInstance::new(2, -5, 3)).unwrap();
/// assert_eq!(roots, (2.into(), 3.into()));
/// assert!(integer_roots(&RowInstance::new(1, 0, 1)).is_none());
/// ```
pub fn integer_roots(row: &RowInstance) -> Option<(BigInt, BigInt)> {
    let disc = row.discriminant();
    if disc.is_negative() {
        return None;
    }
    let root = disc.sqrt();
    if &root * &root != disc {
        return None;
    }
    let lo = -&row.b - &root;
    let hi = -&row.b + &root;
    let two = BigInt::from(2);
    if !lo.is_even() {
        return None;
    }
    Some((lo / &two, hi / &two))
}

/// `(g, x, y)` with `g = gcd(a, b) >= 0` and `a*x + b*y = g`.
fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut x0, mut x1) = (BigInt::one(), BigInt::zero());
    let (mut y0, mut y1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = r0.div_floor(&r1);
        let r2 = &r0 - &q * &r1;
        let x2 = &x0 - &q * &x1;
        let y2 = &y0 - &q * &y1;
        (r0, r1) = (r1, r2);
        (x0, x1) = (x1, x2);
        (y0, y1) = (y1, y2);
    }
    if r0.is_negative() {
        (-r0, -x0, -y0)
    } else {
        (r0, x0, y0)
    }
}

/// Bezout coefficients for any number of integers, folding the extended gcd
/// left to right. A value already divisible by the running gcd gets
/// coefficient 0, so redundant entries never disturb earlier choices.
///
/// ```
/// use completion_kit::completion::bezout;
/// use num_bigint::BigInt;
///
/// let values: Vec<BigInt> = [4, 4, 9, 9].into_iter().map(BigInt::from).collect();
/// let (g, coeffs) = bezout(&values);
/// assert_eq!(g, BigInt::from(1));
/// let expected: Vec<BigInt> = [-2, 0, 1, 0].into_iter().map(BigInt::from).collect();
/// assert_eq!(coeffs, expected);
/// ```
pub fn bezout(values: &[BigInt]) -> (BigInt, Vec<BigInt>) {
    let mut g = BigInt::zero();
    let mut coeffs = vec![BigInt::zero(); values.len()];
    for (i, v) in values.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        if g.is_zero() {
            g = v.abs();
            coeffs[i] = v.signum();
            continue;
        }
        if v.is_multiple_of(&g) {
            continue;
        }
        let (d, x, y) = extended_gcd(&g, v);
        for c in &mut coeffs[..i] {
            *c *= &x;
        }
        coeffs[i] = y;
        g = d;
    }
    (g, coeffs)
}

/// Integers `c` with `q . c = 1`. Fails unless the inputs are coprime.
pub fn find_certificate(q: &[BigInt; 4]) -> Result<[BigInt; 4]> {
    let (g, coeffs) = bezout(q);
    if !g.is_one() {
        return Err(Error::NotCoprime(g.to_string()));
    }
    Ok(coeffs.try_into().expect("four coefficients"))
}

/// Evaluates the template at `A = a, B = -alpha, C = -beta, D = c` and the
/// certificate parameters.
pub fn build_completion(row: &RowInstance, cert: &CompletionCertificate) -> Result<IntMatrix> {
    cert.validate(row)?;
    let mut point = vec![
        row.a.clone(),
        -&cert.alpha,
        -&cert.beta,
        row.c.clone(),
    ];
    point.extend(cert.first.iter().cloned());
    point.extend(cert.second.iter().cloned());
    let values = template_matrix().evaluate(&point)?;
    Ok(std::array::from_fn(|r| {
        std::array::from_fn(|c| values[r][c].clone())
    }))
}

/// True iff `det(m) = 1` and the first column of `m` is `(a, b, c)`.
pub fn verify_completion(m: &IntMatrix, row: &RowInstance) -> bool {
    m[0][0] == row.a && m[1][0] == row.b && m[2][0] == row.c && det3(m).is_one()
}

/// A verified completion together with the certificate that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Completion {
    pub row: RowInstance,
    pub certificate: CompletionCertificate,
    pub matrix: IntMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompletionOutcome {
    Completed(Completion),
    /// `z^2 + bz + ac` has no integer roots; the construction does not apply.
    NoIntegerRoots { discriminant: BigInt },
}

/// Finds a certificate from a given pair of roots and builds the matrix.
pub fn complete_with_roots(row: &RowInstance, alpha: BigInt, beta: BigInt) -> Result<Completion> {
    let squares = CompletionCertificate::squares(row, &alpha, &beta);
    // Searched twice on purpose: the two quadruples are independent inputs
    // of the template even when the search returns the same answer.
    let first = find_certificate(&squares)?;
    let second = find_certificate(&squares)?;
    let certificate = CompletionCertificate {
        alpha,
        beta,
        first,
        second,
    };
    let matrix = build_completion(row, &certificate)?;
    if !verify_completion(&matrix, row) {
        return Err(Error::VerificationFailed);
    }
    Ok(Completion {
        row: row.clone(),
        certificate,
        matrix,
    })
}

/// Roots, certificates, template evaluation, then an independent check.
///
/// ```
/// use completion_kit::completion::{complete_row, CompletionOutcome, RowInstance};
///
/// let row = RowInstance::new(2, -5, 3);
/// let CompletionOutcome::Completed(done) = complete_row(&row).unwrap() else {
///     panic!("roots exist");
/// };
/// assert_eq!(done.matrix[1][0], (-5).into());
/// ```
pub fn complete_row(row: &RowInstance) -> Result<CompletionOutcome> {
    if !row.is_unimodular() {
        return Err(Error::NotUnimodular(row.to_string()));
    }
    let Some((alpha, beta)) = integer_roots(row) else {
        return Ok(CompletionOutcome::NoIntegerRoots {
            discriminant: row.discriminant(),
        });
    };
    complete_with_roots(row, alpha, beta).map(CompletionOutcome::Completed)
}

/// Inputs for completion over an arbitrary polynomial ring: the row entries
/// `a, c`, roots `alpha, beta`, and the eight parameters `s..z`.
///
/// Nothing here is checked beyond ring agreement; whether the two quadratic
/// forms equal 1 (possibly only modulo relations) is the caller's claim.
#[derive(Debug, Clone)]
pub struct RingCompletionData {
    pub a: Polynomial,
    pub alpha: Polynomial,
    pub beta: Polynomial,
    pub c: Polynomial,
    pub parameters: [Polynomial; 8],
}

/// The template's image under `A, B, C, D -> a, -alpha, -beta, c` and
/// `s..z -> parameters`.
pub fn build_completion_in(data: &RingCompletionData) -> Result<PolyMatrix> {
    let ring = data.a.ring().clone();
    let mut images = vec![
        data.a.clone(),
        -&data.alpha,
        -&data.beta,
        data.c.clone(),
    ];
    images.extend(data.parameters.iter().cloned());
    for image in &images {
        ensure_same_ring(image.ring(), &ring)?;
    }
    debug_assert_eq!(images.len(), 4 + PARAMETERS.len());
    let hom = Homomorphism::new(&template_ring(), &ring, images)?;
    template_matrix().apply_hom(&hom)
}
