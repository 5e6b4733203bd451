//! Generic and quantum dimensions.
//!
//! The generic dimension of a module with character Σ c_λ e(λ) is the
//! integer Laurent polynomial Σ c_λ t^{−2·wht(λ)} obtained from the ring
//! homomorphism e(λ) ↦ t^{−2·wht(λ)}.  Its value at t = 1 is the ordinary
//! dimension; its image in Q[t]/Φ_p(t) (evaluation at a primitive p-th root
//! of unity ζ) is the quantum dimension; and the multiplicity of
//! ψ_p(t) = 1 + t + ⋯ + t^{p−1} measures how far the module is from having
//! nonzero quantum dimension.

use crate::characters::Character;
use crate::weights::Weight;
use crate::{Error, Int};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// Sparse integer Laurent polynomial in one variable t.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    /// exponent → coefficient, zero coefficients never stored.
    coeffs: BTreeMap<Int, Int>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { coeffs: BTreeMap::new() }
    }

    pub fn constant(c: Int) -> Self {
        let mut coeffs = BTreeMap::new();
        if c != 0 {
            coeffs.insert(0, c);
        }
        LaurentPoly { coeffs }
    }

    /// The monomial c·t^e.
    pub fn monomial(e: Int, c: Int) -> Self {
        let mut coeffs = BTreeMap::new();
        if c != 0 {
            coeffs.insert(e, c);
        }
        LaurentPoly { coeffs }
    }

    /// t^m − t^{−m}.
    pub fn t_pow_minus_inv(m: Int) -> Self {
        debug_assert!(m > 0);
        LaurentPoly::monomial(m, 1).sub(&LaurentPoly::monomial(-m, 1))
    }

    pub fn from_coeffs(terms: impl IntoIterator<Item = (Int, Int)>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (e, c) in terms {
            let entry = coeffs.entry(e).or_insert(0);
            *entry += c;
            if *entry == 0 {
                coeffs.remove(&e);
            }
        }
        LaurentPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: Int) -> Int {
        self.coeffs.get(&e).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Int, Int)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<Int> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<Int> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add(&self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in o.iter() {
            let entry = out.coeffs.entry(e).or_insert(0);
            *entry += c;
            if *entry == 0 {
                out.coeffs.remove(&e);
            }
        }
        out
    }

    pub fn sub(&self, o: &LaurentPoly) -> LaurentPoly {
        self.add(&o.scale(-1))
    }

    pub fn scale(&self, k: Int) -> LaurentPoly {
        if k == 0 {
            return LaurentPoly::zero();
        }
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, &c)| (e, c * k)).collect() }
    }

    pub fn mul(&self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = BTreeMap::new();
        for (ea, ca) in self.iter() {
            for (eb, cb) in o.iter() {
                let entry = out.entry(ea + eb).or_insert(0);
                *entry += ca * cb;
                if *entry == 0 {
                    out.remove(&(ea + eb));
                }
            }
        }
        LaurentPoly { coeffs: out }
    }

    /// Substitution t ↦ t^k for k ≠ 0; k = −1 is the bar involution and
    /// k = p realizes the Frobenius twist on generic dimensions.
    pub fn subst_t_power(&self, k: Int) -> LaurentPoly {
        debug_assert!(k != 0);
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, &c)| (e * k, c)).collect() }
    }

    /// Value at t = 1 (the ordinary dimension of a generic dimension).
    pub fn eval_at_one(&self) -> Int {
        self.coeffs.values().sum()
    }

    /// Formal derivative; exponents act as multipliers.
    pub fn derivative(&self) -> LaurentPoly {
        LaurentPoly::from_coeffs(self.iter().filter(|&(e, _)| e != 0).map(|(e, c)| (e - 1, e * c)))
    }

    /// n-th formal derivative evaluated at t = 1: Σ e(e−1)⋯(e−n+1)·c_e,
    /// computed exactly without materializing intermediate polynomials.
    pub fn derivative_at_one(&self, n: u32) -> Int {
        self.iter()
            .map(|(e, c)| {
                let mut f = 1 as Int;
                for j in 0..n {
                    f *= e - j as Int;
                }
                f * c
            })
            .sum()
    }

    /// Exact division; None when the divisor does not divide self.
    pub fn exact_div(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let d_max = d.max_degree().unwrap();
        let d_lead = d.coeff(d_max);
        // If f = q·d then min-degrees add, bounding every quotient exponent
        // from below; crossing the bound proves non-divisibility and also
        // terminates the loop.
        let lowest_shift = self.min_degree().unwrap() - d.min_degree().unwrap();
        let mut rem = self.clone();
        let mut quot = BTreeMap::new();
        while let Some(top) = rem.max_degree() {
            let c = rem.coeff(top);
            if c % d_lead != 0 {
                return None;
            }
            let shift = top - d_max;
            if shift < lowest_shift {
                return None;
            }
            let q = c / d_lead;
            quot.insert(shift, q);
            rem = rem.sub(&d.subst_shift(shift).scale(q));
        }
        Some(LaurentPoly { coeffs: quot })
    }

    /// Multiplication by t^k.
    fn subst_shift(&self, k: Int) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, &c)| (e + k, c)).collect() }
    }

    /// Multiplicity of the divisor `d` in self by literal repeated exact
    /// division; errors on the zero polynomial.
    pub fn divisor_order(&self, d: &LaurentPoly) -> Result<u32, Error> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut order = 0;
        let mut cur = self.clone();
        while let Some(next) = cur.exact_div(d) {
            order += 1;
            cur = next;
            assert!(order < 4096, "runaway divisor order");
        }
        Ok(order)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{c}")?,
                1 if c == 1 => write!(f, "t")?,
                1 => write!(f, "{c}t")?,
                _ if c == 1 => write!(f, "t^{e}")?,
                _ => write!(f, "{c}t^{e}")?,
            }
        }
        Ok(())
    }
}

/// Serialized as a sorted array of [exponent, coefficient] pairs.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let mut seq = ser.serialize_seq(Some(self.coeffs.len()))?;
        for (e, c) in self.iter() {
            seq.serialize_element(&[e, c])?;
        }
        seq.end()
    }
}

/// ψ_p(t) = 1 + t + ⋯ + t^{p−1}; for prime p this is the p-th cyclotomic
/// polynomial.
pub fn psi_p(p: Int) -> LaurentPoly {
    LaurentPoly::from_coeffs((0..p).map(|e| (e, 1)))
}

/// The generic dimension map: e(λ) ↦ t^{−2·wht(λ)}.
pub fn specialize_generic(c: &Character) -> LaurentPoly {
    LaurentPoly::from_coeffs(c.iter().map(|(w, m)| (-2 * w.wht(), m)))
}

/// Weyl-form generic dimension of the induced module with dominant highest
/// weight λ = (r,s):
/// Π_m (t^m − t^{−m}) / Π_d (t^d − t^{−d}) with m ∈ {r+1, s+1, r+s+2} and
/// d ∈ {1, 1, 2}.
pub fn weyl_generic_dimension(lambda: Weight) -> LaurentPoly {
    assert!(lambda.is_dominant(), "Weyl-form generic dimension needs a dominant weight");
    let num = LaurentPoly::t_pow_minus_inv(lambda.r + 1)
        .mul(&LaurentPoly::t_pow_minus_inv(lambda.s + 1))
        .mul(&LaurentPoly::t_pow_minus_inv(lambda.r + lambda.s + 2));
    let den = LaurentPoly::t_pow_minus_inv(1)
        .mul(&LaurentPoly::t_pow_minus_inv(1))
        .mul(&LaurentPoly::t_pow_minus_inv(2));
    num.exact_div(&den).expect("Weyl numerator divisible by denominator")
}

/// ψ_p-multiplicity of a nonzero Laurent polynomial (literal repeated exact
/// division, every p including p = 2).
pub fn psi_order(f: &LaurentPoly, p: Int) -> Result<u32, Error> {
    crate::check_prime(p)?;
    f.divisor_order(&psi_p(p))
}

/// The defect d(Φ,p) = #{γ ∈ Φ : ⟨ρ, γ^∨⟩ ≡ 0 mod p}, computed by
/// enumerating the six roots.  Equals 2 at p = 2 (only ±(α+β), whose ρ
/// pairing is ±2) and 0 for every p ≥ 3.
pub fn d_phi_p(p: Int) -> Int {
    crate::weights::ROOTS
        .iter()
        .filter(|&&g| crate::weights::coroot_pairing(crate::weights::RHO, g).rem_euclid(p) == 0)
        .count() as Int
}

/// An element of Q(ζ_p) = Q[t]/Φ_p(t) on the power basis 1, ζ, …, ζ^{p−2}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycloElement {
    p: Int,
    coords: Vec<BigRational>,
}

impl CycloElement {
    pub fn zero(p: Int) -> Self {
        CycloElement { p, coords: vec![BigRational::zero(); (p - 1) as usize] }
    }

    pub fn from_int(p: Int, n: Int) -> Self {
        let mut z = CycloElement::zero(p);
        z.coords[0] = BigRational::from_integer(BigInt::from(n));
        z
    }

    pub fn p(&self) -> Int {
        self.p
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    /// ζ^k for any integer k, reduced onto the power basis via
    /// ζ^{p−1} = −(1 + ζ + ⋯ + ζ^{p−2}).
    pub fn zeta_pow(p: Int, k: Int) -> Self {
        let e = k.rem_euclid(p);
        let mut z = CycloElement::zero(p);
        if e < p - 1 {
            z.coords[e as usize] = BigRational::one();
        } else {
            for c in z.coords.iter_mut() {
                *c = -BigRational::one();
            }
        }
        z
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Some(n) when the element is the rational integer n.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.coords[1..].iter().all(|c| c.is_zero()) && self.coords[0].is_integer() {
            Some(self.coords[0].to_integer())
        } else {
            None
        }
    }

    pub fn add(&self, o: &CycloElement) -> CycloElement {
        debug_assert_eq!(self.p, o.p);
        CycloElement {
            p: self.p,
            coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &CycloElement) -> CycloElement {
        debug_assert_eq!(self.p, o.p);
        CycloElement {
            p: self.p,
            coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> CycloElement {
        CycloElement { p: self.p, coords: self.coords.iter().map(|a| -a).collect() }
    }

    pub fn scale_int(&self, k: Int) -> CycloElement {
        let k = BigRational::from_integer(BigInt::from(k));
        CycloElement { p: self.p, coords: self.coords.iter().map(|a| a * &k).collect() }
    }

    pub fn mul(&self, o: &CycloElement) -> CycloElement {
        debug_assert_eq!(self.p, o.p);
        let n = (self.p - 1) as usize;
        // Multiply as polynomials of degree ≤ 2(p−2), then reduce modulo
        // Φ_p using ζ^p = 1 followed by the basis relation.
        let mut prod = vec![BigRational::zero(); 2 * n.max(1)];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        let mut out = CycloElement::zero(self.p);
        for (e, c) in prod.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (e as Int).rem_euclid(self.p);
            if e < self.p - 1 {
                out.coords[e as usize] += c;
            } else {
                for k in out.coords.iter_mut() {
                    *k -= &c;
                }
            }
        }
        out
    }

    /// Multiplicative inverse through the extended Euclidean algorithm on
    /// Q[x] against Φ_p(x); panics on zero.
    pub fn inv(&self) -> CycloElement {
        assert!(!self.is_zero(), "inverting zero in Q(ζ)");
        let p = self.p;
        // Φ_p as a dense rational polynomial of degree p−1.
        let phi: Vec<BigRational> = (0..p).map(|_| BigRational::one()).collect();
        let a: Vec<BigRational> = self.coords.clone();
        let (g, _u, v) = poly_ext_gcd(&phi, &a);
        // g is a nonzero constant since Φ_p is irreducible over Q.
        assert!(g.len() == 1 && !g[0].is_zero(), "Φ_p is irreducible; gcd must be constant");
        let scale = g[0].recip();
        let mut out = CycloElement::zero(p);
        for (i, c) in v.into_iter().enumerate() {
            let c = c * &scale;
            // v may reach degree p−2 at most after the gcd reduction.
            assert!(i < (p - 1) as usize || c.is_zero());
            if i < (p - 1) as usize {
                out.coords[i] = c;
            }
        }
        out
    }

    pub fn div(&self, o: &CycloElement) -> CycloElement {
        self.mul(&o.inv())
    }

    /// Coordinatewise residue mod m on the power basis; defined for
    /// integral coordinates only (panics otherwise).
    pub fn mod_int(&self, m: Int) -> Vec<Int> {
        self.coords
            .iter()
            .map(|c| {
                assert!(c.is_integer(), "mod {m} of a non-integral cyclotomic element");
                let q = c.to_integer() % BigInt::from(m);
                let mut q = q;
                if q.sign() == num_bigint::Sign::Minus {
                    q += BigInt::from(m);
                }
                Int::try_from(q).expect("residue fits")
            })
            .collect()
    }
}

impl fmt::Display for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{c}")?;
            } else if i == 1 {
                write!(f, "{c}·ζ")?;
            } else {
                write!(f, "{c}·ζ^{i}")?;
            }
        }
        Ok(())
    }
}

/// Serialized as p−1 [numerator, denominator] pairs on the power basis.
impl Serialize for CycloElement {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let mut seq = ser.serialize_seq(Some(self.coords.len()))?;
        for c in &self.coords {
            let n = Int::try_from(c.numer().clone())
                .map_err(|_| serde::ser::Error::custom("numerator out of i64 range"))?;
            let d = Int::try_from(c.denom().clone())
                .map_err(|_| serde::ser::Error::custom("denominator out of i64 range"))?;
            seq.serialize_element(&[n, d])?;
        }
        seq.end()
    }
}

/// Dense polynomial helpers over Q for the extended gcd (lowest degree
/// first, no trailing zeros).
fn poly_trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.len() > 1 && v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_is_zero(v: &[BigRational]) -> bool {
    v.iter().all(|c| c.is_zero())
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    poly_trim(out)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if poly_is_zero(a) || poly_is_zero(b) {
        return vec![BigRational::zero()];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if cb.is_zero() {
                continue;
            }
            out[i + j] += ca * cb;
        }
    }
    poly_trim(out)
}

/// Division with remainder: a = q·b + r.
fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let b = poly_trim(b.to_vec());
    assert!(!poly_is_zero(&b));
    let mut r = poly_trim(a.to_vec());
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() - 1 < db || poly_is_zero(&r) {
        return (vec![BigRational::zero()], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while !poly_is_zero(&r) && r.len() - 1 >= db {
        let dr = r.len() - 1;
        let c = &r[dr] / &lead;
        q[dr - db] = c.clone();
        let mut shifted = vec![BigRational::zero(); dr - db];
        shifted.push(c);
        r = poly_sub(&r, &poly_mul(&shifted, &b));
        if r.len() == 1 && r[0].is_zero() {
            break;
        }
    }
    (poly_trim(q), r)
}

/// Extended gcd: returns (g, u, v) with u·a + v·b = g.
fn poly_ext_gcd(
    a: &[BigRational],
    b: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>, Vec<BigRational>) {
    let (mut r0, mut r1) = (poly_trim(a.to_vec()), poly_trim(b.to_vec()));
    let (mut u0, mut u1) = (vec![BigRational::one()], vec![BigRational::zero()]);
    let (mut v0, mut v1) = (vec![BigRational::zero()], vec![BigRational::one()]);
    while !poly_is_zero(&r1) {
        let (q, r) = poly_divmod(&r0, &r1);
        let u = poly_sub(&u0, &poly_mul(&q, &u1));
        let v = poly_sub(&v0, &poly_mul(&q, &v1));
        r0 = std::mem::replace(&mut r1, r);
        u0 = std::mem::replace(&mut u1, u);
        v0 = std::mem::replace(&mut v1, v);
    }
    (r0, u0, v0)
}

/// Evaluation at ζ: reduce exponents mod p, then onto the power basis.
pub fn quantum_eval(f: &LaurentPoly, p: Int) -> Result<CycloElement, Error> {
    crate::check_prime(p)?;
    let mut out = CycloElement::zero(p);
    for (e, c) in f.iter() {
        out = out.add(&CycloElement::zeta_pow(p, e).scale_int(c));
    }
    Ok(out)
}

/// n-th formal derivative followed by evaluation at ζ.
pub fn derivative_eval(f: &LaurentPoly, n: u32, p: Int) -> Result<CycloElement, Error> {
    let mut g = f.clone();
    for _ in 0..n {
        g = g.derivative();
    }
    quantum_eval(&g, p)
}
