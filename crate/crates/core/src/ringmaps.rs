//! Membership in the determinantal ideal `(ad - bc)` and certificate checks
//! for ideals with several generators.
//!
//! The substitution `a -> gj, b -> gk, c -> hj, d -> hk` maps `Z[a,b,c,d]`
//! onto the subring `Z[gj, gk, hj, hk]` of `Z[g,h,j,k]`, and its kernel is
//! exactly the principal ideal `(ad - bc)`. A polynomial therefore lies in
//! that ideal iff its image vanishes. Auxiliary variables ride along
//! unchanged; the kernel stays `(ad - bc)` after adjoining free variables.

use crate::error::{Error, Result};
use crate::poly::{ensure_same_ring, Homomorphism, Polynomial, Ring, RingSpec};

const SOURCE_VARS: [&str; 4] = ["a", "b", "c", "d"];
const TARGET_VARS: [&str; 4] = ["g", "h", "j", "k"];
const SEGRE_IMAGES: [&str; 4] = ["g*j", "g*k", "h*j", "h*k"];

/// The Segre substitution `Z[a,b,c,d,aux..] -> Z[g,h,j,k,aux..]`.
#[derive(Debug, Clone)]
pub struct SegreContext {
    hom: Homomorphism,
}

impl SegreContext {
    /// Builds the context; `aux` names must avoid `a,b,c,d,g,h,j,k`.
    ///
    /// ```
    /// use completion_kit::SegreContext;
    ///
    /// let ctx = SegreContext::new(&[]).unwrap();
    /// let det = ctx.source().parse("a*d - b*c").unwrap();
    /// assert!(ctx.in_determinantal_ideal(&det).unwrap());
    /// ```
    pub fn new(aux: &[&str]) -> Result<Self> {
        for &name in aux {
            if SOURCE_VARS.contains(&name) || TARGET_VARS.contains(&name) {
                return Err(Error::NameClash(name.to_string()));
            }
        }
        let source = RingSpec::new(SOURCE_VARS.iter().chain(aux.iter()).copied())?;
        let target = RingSpec::new(TARGET_VARS.iter().chain(aux.iter()).copied())?;
        let images: Vec<&str> = SEGRE_IMAGES.iter().chain(aux.iter()).copied().collect();
        let hom = Homomorphism::from_exprs(&source, &target, &images)?;
        Ok(SegreContext { hom })
    }

    pub fn source(&self) -> &Ring {
        self.hom.source()
    }

    pub fn target(&self) -> &Ring {
        self.hom.target()
    }

    pub fn hom(&self) -> &Homomorphism {
        &self.hom
    }

    /// The image of `p` under the substitution; zero iff `p` is in `(ad - bc)`.
    pub fn image(&self, p: &Polynomial) -> Result<Polynomial> {
        self.hom.apply(p)
    }

    pub fn in_determinantal_ideal(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.image(p)?.is_zero())
    }
}

/// Explicit cofactors witnessing `p = sum(cofactor_i * generator_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipCertificate {
    pairs: Vec<(Polynomial, Polynomial)>,
}

impl MembershipCertificate {
    /// Pairs are `(cofactor, generator)`; all must share one ring.
    pub fn new(pairs: Vec<(Polynomial, Polynomial)>) -> Result<Self> {
        let Some((first, _)) = pairs.first() else {
            return Err(Error::EmptyCertificate);
        };
        let ring = first.ring().clone();
        for (cofactor, generator) in &pairs {
            ensure_same_ring(cofactor.ring(), &ring)?;
            ensure_same_ring(generator.ring(), &ring)?;
        }
        Ok(MembershipCertificate { pairs })
    }

    pub fn ring(&self) -> &Ring {
        self.pairs[0].0.ring()
    }

    pub fn pairs(&self) -> &[(Polynomial, Polynomial)] {
        &self.pairs
    }

    /// `sum(cofactor_i * generator_i)`.
    pub fn combination(&self) -> Polynomial {
        self.pairs
            .iter()
            .fold(Polynomial::zero(self.ring()), |acc, (c, g)| &acc + &(c * g))
    }

    /// `p - combination()`; zero iff the certificate proves `p`.
    pub fn residual(&self, p: &Polynomial) -> Result<Polynomial> {
        p.checked_sub(&self.combination())
    }
}

/// True iff `p` equals the certificate's combination in the free ring.
pub fn check_certificate(p: &Polynomial, cert: &MembershipCertificate) -> Result<bool> {
    Ok(cert.residual(p)?.is_zero())
}
