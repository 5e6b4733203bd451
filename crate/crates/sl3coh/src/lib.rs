//! Exact computational representation theory for SL3 in characteristic p.
//!
//! The crate computes, with integer arithmetic only:
//!
//! * characters of line-bundle cohomology groups `H^i(λ)` on the flag variety
//!   of SL3 over a field of characteristic p, together with the two rank-two
//!   bundle variants obtained by twisting short exact sequences along the
//!   simple roots (`Bundle::Alpha`, `Bundle::Beta`);
//! * generic (t-graded) and quantum (t ↦ ζ, a primitive p-th root of unity)
//!   dimensions of those cohomology groups;
//! * the support-variety class over the first Frobenius kernel attached to
//!   each nonvanishing cohomology group, with numeric evidence;
//! * a registry of mechanically verifiable identities relating all of the
//!   above, exposed through the `verify` subcommand of the CLI and through a
//!   C ABI.
//!
//! Everything is exact: characters are sparse integer vectors, graded
//! dimensions are integer Laurent polynomials, and evaluations at ζ live in
//! the rational cyclotomic field written on the basis 1, ζ, …, ζ^{p−2}.
//! Overflow checks stay on in every build profile.

pub mod characters;
pub mod cohomology;
pub mod figure;
pub mod gendim;
pub mod identities;
pub mod supportvar;
pub mod weights;

use thiserror::Error;

/// Crate-wide integer type for weight coordinates, multiplicities,
/// dimensions and Laurent coefficients.
pub type Int = i64;

/// Errors surfaced to callers; internal engine invariants panic instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("p = {0} is not a prime")]
    NotPrime(Int),
    #[error("weight ({0},{1}) admits no fundamental-line p-adic expansion")]
    NotExpandable(Int, Int),
    #[error("cohomology degree {0} is out of range 0..=3")]
    DegreeOutOfRange(Int),
    #[error("the zero Laurent polynomial has no divisibility order")]
    ZeroPolynomial,
    #[error("H^{}({}) vanishes; the requested quantity is undefined on the zero module", .1, .0)]
    ZeroModule(weights::Weight, usize),
    #[error("projectivity test requires p >= 3, got p = {0}")]
    ProjectivityNeedsOddPrime(Int),
    #[error("unknown verification id {0:?}; run `verify --list` for the registry")]
    UnknownProposition(String),
    #[error("weight {0} is outside the eligible region for the degree-one transfer identity: {1}")]
    NotEligible(weights::Weight, String),
    #[error("sweep box {0} exceeds the hard cap {1}")]
    BoxTooLarge(Int, Int),
    #[error("operation {0} is defined for the plain bundle only")]
    PlainBundleOnly(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Trial-division primality test for the small moduli used throughout.
pub fn is_prime(n: Int) -> bool {
    if n < 2 {
        return false;
    }
    let mut d: Int = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Validates a characteristic; all public entry points taking p call this.
pub fn check_prime(p: Int) -> Result<(), Error> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<Int> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(check_prime(7).is_ok());
        assert!(matches!(check_prime(9), Err(Error::NotPrime(9))));
    }
}
