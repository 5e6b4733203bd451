//! The A2 weight lattice, its Weyl group, and p-adic digit expansions.
//!
//! A weight is written in fundamental-weight coordinates: `(r,s)` means
//! r·ω_α + s·ω_β.  The simple roots are α = (2,−1) and β = (−1,2), the Weyl
//! vector is ρ = (1,1), and pairings against the three positive coroots are
//! `⟨(r,s),α^∨⟩ = r`, `⟨(r,s),β^∨⟩ = s`, `⟨(r,s),(α+β)^∨⟩ = r+s`.

use crate::{Error, Int};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A weight r·ω_α + s·ω_β of the SL3 maximal torus.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Weight {
    pub r: Int,
    pub s: Int,
}

/// Simple root α in weight coordinates.
pub const ALPHA: Weight = Weight { r: 2, s: -1 };
/// Simple root β in weight coordinates.
pub const BETA: Weight = Weight { r: -1, s: 2 };
/// The Weyl vector ρ = ω_α + ω_β.
pub const RHO: Weight = Weight { r: 1, s: 1 };

impl Weight {
    pub const fn new(r: Int, s: Int) -> Self {
        Weight { r, s }
    }

    /// Scalar multiple.
    pub fn scale(self, k: Int) -> Self {
        Weight::new(self.r * k, self.s * k)
    }

    /// The diagram involution (r,s) ↦ (s,r).
    pub fn swap(self) -> Self {
        Weight::new(self.s, self.r)
    }

    /// Half the sum of pairings with the positive coroots; integral on A2,
    /// where it equals r + s.
    pub fn wht(self) -> Int {
        self.r + self.s
    }

    pub fn is_dominant(self) -> bool {
        self.r >= 0 && self.s >= 0
    }

    pub fn is_antidominant(self) -> bool {
        self.r <= 0 && self.s <= 0
    }

    /// Pairings of `self` with the coroots α^∨, β^∨, (α+β)^∨.
    pub fn pairings(self) -> [Int; 3] {
        [self.r, self.s, self.r + self.s]
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        Weight::new(self.r + o.r, self.s + o.s)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        Weight::new(self.r - o.r, self.s - o.s)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-self.r, -self.s)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r, self.s)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        [self.r, self.s].serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let v = <[Int; 2]>::deserialize(de)?;
        Ok(Weight::new(v[0], v[1]))
    }
}

/// Parses "r,s" (as accepted by the CLI) into a weight.
pub fn parse_weight(text: &str) -> Result<Weight, Error> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::InvalidArgument(format!(
            "weight must be given as r,s — got {text:?}"
        )));
    }
    let r = parts[0].trim().parse::<Int>();
    let s = parts[1].trim().parse::<Int>();
    match (r, s) {
        (Ok(r), Ok(s)) => Ok(Weight::new(r, s)),
        _ => Err(Error::InvalidArgument(format!(
            "weight must be given as r,s with integer entries — got {text:?}"
        ))),
    }
}

/// The six elements of the Weyl group S3, named by reduced words in the
/// simple reflections s_α, s_β.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum WeylElement {
    E,
    Sa,
    Sb,
    SaSb,
    SbSa,
    W0,
}

pub const WEYL_GROUP: [WeylElement; 6] = [
    WeylElement::E,
    WeylElement::Sa,
    WeylElement::Sb,
    WeylElement::SaSb,
    WeylElement::SbSa,
    WeylElement::W0,
];

impl WeylElement {
    /// The linear action on weight coordinates.
    pub fn act(self, w: Weight) -> Weight {
        let (r, s) = (w.r, w.s);
        match self {
            WeylElement::E => Weight::new(r, s),
            WeylElement::Sa => Weight::new(-r, r + s),
            WeylElement::Sb => Weight::new(r + s, -s),
            WeylElement::SaSb => Weight::new(-r - s, r),
            WeylElement::SbSa => Weight::new(s, -r - s),
            WeylElement::W0 => Weight::new(-s, -r),
        }
    }

    /// Sign of the determinant: +1 for rotations, −1 for reflections.
    pub fn det(self) -> Int {
        match self {
            WeylElement::E | WeylElement::SaSb | WeylElement::SbSa => 1,
            WeylElement::Sa | WeylElement::Sb | WeylElement::W0 => -1,
        }
    }

    /// Coxeter length (number of simple reflections in a reduced word).
    pub fn length(self) -> usize {
        match self {
            WeylElement::E => 0,
            WeylElement::Sa | WeylElement::Sb => 1,
            WeylElement::SaSb | WeylElement::SbSa => 2,
            WeylElement::W0 => 3,
        }
    }
}

/// Dot action w·λ = w(λ+ρ) − ρ.
pub fn dot_action(w: WeylElement, lambda: Weight) -> Weight {
    w.act(lambda + RHO) - RHO
}

/// Longest-element dot action w₀·(r,s) = (−s−2, −r−2).
pub fn w0_dot(lambda: Weight) -> Weight {
    dot_action(WeylElement::W0, lambda)
}

/// For λ with λ+ρ regular under the ordinary Weyl action, the unique pair
/// (w, μ = w·λ) with μ dominant, returned as (w, μ, det w).  Absent exactly
/// when (r+1)(s+1)(r+s+2) = 0, i.e. λ+ρ lies on a reflection wall.
pub fn dominant_representative(lambda: Weight) -> Option<(WeylElement, Weight, Int)> {
    let v = lambda + RHO;
    if v.r == 0 || v.s == 0 || v.r + v.s == 0 {
        return None;
    }
    for w in WEYL_GROUP {
        let u = w.act(v);
        if u.r > 0 && u.s > 0 {
            return Some((w, u - RHO, w.det()));
        }
    }
    unreachable!("a regular vector has a strictly dominant Weyl translate");
}

/// Mod-p regularity class of λ, measured through Φ_λ = {γ ∈ Φ :
/// ⟨λ+ρ, γ^∨⟩ ≡ 0 mod p}.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum RegularityClass {
    /// Φ_λ empty (impossible at p = 2).
    Regular,
    /// Φ_λ = {±γ} for a single positive root γ.
    Subregular,
    /// Φ_λ = Φ, the full root system.
    Steinberg,
}

/// Regularity class together with the root subset that witnesses it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Regularity {
    pub class: RegularityClass,
    /// The signed roots γ with ⟨λ+ρ, γ^∨⟩ ≡ 0 mod p; size 0, 2 or 6.
    pub phi_lambda: Vec<Weight>,
}

/// The six roots of A2 in weight coordinates, positive roots first.
pub const ROOTS: [Weight; 6] = [
    Weight { r: 2, s: -1 },
    Weight { r: -1, s: 2 },
    Weight { r: 1, s: 1 },
    Weight { r: -2, s: 1 },
    Weight { r: 1, s: -2 },
    Weight { r: -1, s: -1 },
];

/// Pairing ⟨μ, γ^∨⟩ for a root γ of A2 (all roots have squared length 2, so
/// the coroot pairing is linear in γ's fundamental-line coefficients).
pub fn coroot_pairing(mu: Weight, gamma: Weight) -> Int {
    // γ = c_α·α + c_β·β with c_α = (2γ_r + γ_s)/3, c_β = (γ_r + 2γ_s)/3;
    // ⟨μ, γ^∨⟩ = c_α·μ_r + c_β·μ_s for unit-normalized coroots.
    let ca = (2 * gamma.r + gamma.s) / 3;
    let cb = (gamma.r + 2 * gamma.s) / 3;
    ca * mu.r + cb * mu.s
}

/// Computes Φ_λ and the induced class.  |Φ_λ| ∈ {0, 2, 6} always: if two of
/// the pairings r+1, s+1, r+s+2 vanish mod p, so does the third.
pub fn regularity(lambda: Weight, p: Int) -> Regularity {
    let v = lambda + RHO;
    let phi_lambda: Vec<Weight> = ROOTS
        .into_iter()
        .filter(|&g| coroot_pairing(v, g).rem_euclid(p) == 0)
        .collect();
    let class = match phi_lambda.len() {
        0 => RegularityClass::Regular,
        2 => RegularityClass::Subregular,
        6 => RegularityClass::Steinberg,
        n => unreachable!("Φ_λ has {n} elements at λ = {lambda}"),
    };
    Regularity { class, phi_lambda }
}

/// Whether the restricted digit (a,b) ∈ X₁ is mod-p regular, i.e. neither
/// coordinate equals p−1 and a+b ≠ p−2.
pub fn digit_is_regular(a: Int, b: Int, p: Int) -> bool {
    debug_assert!((0..p).contains(&a) && (0..p).contains(&b));
    a <= p - 2 && b <= p - 2 && a + b != p - 2
}

/// A decomposition λ = Σ_{i<k} p^i (a_i, b_i) + p^k (r₀, s₀) with restricted
/// digits and a tail on the fundamental line r₀ + s₀ = −1.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PAdicExpansion {
    pub p: Int,
    /// Digits (a_i, b_i) ∈ X₁, least significant first.
    pub digits: Vec<(Int, Int)>,
    /// The fundamental-line tail (r₀, s₀).
    pub tail: Weight,
}

impl PAdicExpansion {
    pub fn k(&self) -> usize {
        self.digits.len()
    }

    /// Rebuilds the expanded weight.
    pub fn reassemble(&self) -> Weight {
        let mut acc = self.tail;
        for &(a, b) in self.digits.iter().rev() {
            acc = Weight::new(a + self.p * acc.r, b + self.p * acc.s);
        }
        acc
    }

    /// True when either k = 0 or the top digit is off the digit diagonal
    /// a + b = p − 1 (so no further digits can be folded into the tail).
    pub fn is_normalized(&self) -> bool {
        match self.digits.last() {
            None => true,
            Some(&(a, b)) => a + b != self.p - 1,
        }
    }

    /// Folds every trailing digit with a + b = p − 1 into the tail; the new
    /// tail still satisfies r₀ + s₀ = −1.
    pub fn normalized(mut self) -> Self {
        while let Some(&(a, b)) = self.digits.last() {
            if a + b != self.p - 1 {
                break;
            }
            self.digits.pop();
            self.tail = Weight::new(a + self.p * self.tail.r, b + self.p * self.tail.s);
            debug_assert_eq!(self.tail.wht(), -1);
        }
        self
    }
}

/// Expansion with exactly k digits, if one exists: valid iff
/// floor(r/p^k) + floor(s/p^k) = −1.
pub fn expand_with_k(lambda: Weight, p: Int, k: usize) -> Option<PAdicExpansion> {
    let mut digits = Vec::with_capacity(k);
    let (mut r, mut s) = (lambda.r, lambda.s);
    for _ in 0..k {
        let (a, b) = (r.rem_euclid(p), s.rem_euclid(p));
        digits.push((a, b));
        r = (r - a) / p;
        s = (s - b) / p;
    }
    (r + s == -1).then(|| PAdicExpansion { p, digits, tail: Weight::new(r, s) })
}

/// Greedy minimal-length expansion onto the fundamental line.
///
/// Valid inputs are the weights on neither side of the dominance order:
/// r ≥ 0 ∧ s ≤ −1, or r ≤ −1 ∧ s ≥ 0.  (The corner weights with r = −1,
/// s ≤ −1 or s = −1, r ≤ −1 satisfy (r+1)(s+1) ≤ 0 but admit no expansion;
/// they are rejected.)  The minimal expansion is automatically normalized:
/// if r + s ≠ −1 its top digit is off the diagonal a + b = p − 1, and if
/// r + s = −1 it has no digits at all.  `normalize` re-asserts that form
/// (useful after manual digit surgery through [`expand_with_k`]).
pub fn p_adic_expand(lambda: Weight, p: Int, normalize: bool) -> Result<PAdicExpansion, Error> {
    let mixed = (lambda.r >= 0 && lambda.s <= -1) || (lambda.r <= -1 && lambda.s >= 0);
    if !mixed {
        return Err(Error::NotExpandable(lambda.r, lambda.s));
    }
    let mut digits = Vec::new();
    let (mut r, mut s) = (lambda.r, lambda.s);
    while r + s != -1 {
        let (a, b) = (r.rem_euclid(p), s.rem_euclid(p));
        digits.push((a, b));
        r = (r - a) / p;
        s = (s - b) / p;
    }
    let exp = PAdicExpansion { p, digits, tail: Weight::new(r, s) };
    debug_assert!(exp.is_normalized());
    Ok(if normalize { exp.normalized() } else { exp })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_data() {
        assert_eq!(ALPHA + BETA, Weight::new(1, 1));
        assert_eq!(RHO.pairings(), [1, 1, 2]);
        // ⟨α, α^∨⟩ = 2 and ⟨α, β^∨⟩ = −1 in the A2 Cartan matrix.
        assert_eq!(coroot_pairing(ALPHA, ALPHA), 2);
        assert_eq!(coroot_pairing(ALPHA, BETA), -1);
        assert_eq!(coroot_pairing(Weight::new(5, -7), ALPHA), 5);
        assert_eq!(coroot_pairing(Weight::new(5, -7), BETA), -7);
        assert_eq!(coroot_pairing(Weight::new(5, -7), ALPHA + BETA), -2);
    }

    #[test]
    fn weyl_action_table() {
        let v = Weight::new(5, -1);
        assert_eq!(WeylElement::Sa.act(v), Weight::new(-5, 4));
        assert_eq!(WeylElement::Sb.act(v), Weight::new(4, 1));
        assert_eq!(WeylElement::SaSb.act(v), Weight::new(-4, 5));
        assert_eq!(WeylElement::SbSa.act(v), Weight::new(-1, -4));
        assert_eq!(WeylElement::W0.act(v), Weight::new(1, -5));
        // Group law spot checks: SaSb = Sa ∘ Sb, W0 = Sa ∘ Sb ∘ Sa.
        assert_eq!(WeylElement::SaSb.act(v), WeylElement::Sa.act(WeylElement::Sb.act(v)));
        assert_eq!(
            WeylElement::W0.act(v),
            WeylElement::Sa.act(WeylElement::Sb.act(WeylElement::Sa.act(v)))
        );
        let dets: Int = WEYL_GROUP.iter().map(|w| w.det()).sum();
        assert_eq!(dets, 0);
    }

    #[test]
    fn dot_action_and_w0() {
        assert_eq!(w0_dot(Weight::new(3, -4)), Weight::new(2, -5));
        assert_eq!(dot_action(WeylElement::E, Weight::new(9, 9)), Weight::new(9, 9));
        // w0 dot action is an involution.
        assert_eq!(w0_dot(w0_dot(Weight::new(-7, 11))), Weight::new(-7, 11));
    }

    #[test]
    fn dominant_representatives() {
        // Singular exactly on the three affine walls through −ρ.
        assert!(dominant_representative(Weight::new(-1, 5)).is_none());
        assert!(dominant_representative(Weight::new(5, -1)).is_none());
        assert!(dominant_representative(Weight::new(3, -5)).is_none());
        let (w, mu, det) = dominant_representative(Weight::new(4, -2)).unwrap();
        assert_eq!(w, WeylElement::Sb);
        assert_eq!(mu, Weight::new(3, 0));
        assert_eq!(det, -1);
        let (w, mu, det) = dominant_representative(Weight::new(2, 2)).unwrap();
        assert_eq!((w, mu, det), (WeylElement::E, Weight::new(2, 2), 1));
    }

    #[test]
    fn regularity_classes() {
        use RegularityClass::*;
        assert_eq!(regularity(Weight::new(0, 0), 5).class, Regular);
        assert_eq!(regularity(Weight::new(4, 0), 5).class, Subregular);
        assert_eq!(regularity(Weight::new(4, 4), 5).class, Steinberg);
        assert_eq!(regularity(Weight::new(1, 1), 2).class, Steinberg);
        // p = 2 admits no regular weights.
        for r in -4..4 {
            for s in -4..4 {
                assert_ne!(regularity(Weight::new(r, s), 2).class, Regular);
            }
        }
        assert_eq!(regularity(Weight::new(2, 0), 3).phi_lambda.len(), 2);
    }

    #[test]
    fn digit_regularity() {
        // At p = 2 every digit is singular.
        for a in 0..2 {
            for b in 0..2 {
                assert!(!digit_is_regular(a, b, 2));
            }
        }
        assert!(digit_is_regular(0, 0, 3));
        assert!(!digit_is_regular(1, 0, 3));
        assert!(digit_is_regular(1, 1, 3));
        assert!(digit_is_regular(0, 2, 5));
        assert!(!digit_is_regular(3, 0, 5));
        assert!(!digit_is_regular(4, 2, 5));
    }

    #[test]
    fn expansion_roundtrip() {
        let lam = Weight::new(5, -10);
        let e = p_adic_expand(lam, 5, false).unwrap();
        assert_eq!(e.reassemble(), lam);
        assert_eq!(e.k(), 1);
        assert_eq!(e.tail, Weight::new(1, -2));
        assert_eq!(e.digits, vec![(0, 0)]);

        // Fundamental-line weights need no digits.
        let e = p_adic_expand(Weight::new(7, -8), 3, true).unwrap();
        assert_eq!(e.k(), 0);
        assert_eq!(e.tail, Weight::new(7, -8));

        // A forced longer expansion of a fundamental-line weight has all
        // digits on the diagonal a + b = p − 1, and normalizing folds them
        // all back.
        let e = expand_with_k(Weight::new(7, -8), 3, 2).unwrap();
        assert_eq!(e.digits.len(), 2);
        for &(a, b) in &e.digits {
            assert_eq!(a + b, 2);
        }
        assert_eq!(e.reassemble(), Weight::new(7, -8));
        let n = e.normalized();
        assert_eq!(n.k(), 0);
        assert_eq!(n.tail, Weight::new(7, -8));
    }

    #[test]
    fn expansion_rejects_corners() {
        assert!(p_adic_expand(Weight::new(-1, -5), 3, false).is_err());
        assert!(p_adic_expand(Weight::new(-5, -1), 3, false).is_err());
        assert!(p_adic_expand(Weight::new(-1, -1), 3, false).is_err());
        assert!(p_adic_expand(Weight::new(2, 3), 3, false).is_err());
        assert!(p_adic_expand(Weight::new(-4, -4), 3, false).is_err());
        // (−1, 0) and (0, −1) lie on the fundamental line itself.
        assert_eq!(p_adic_expand(Weight::new(-1, 0), 3, false).unwrap().k(), 0);
        assert_eq!(p_adic_expand(Weight::new(0, -1), 3, false).unwrap().k(), 0);
    }

    #[test]
    fn minimal_expansion_is_normalized() {
        for p in [2, 3, 5] {
            for r in -40..=40 {
                for s in -40..=40 {
                    let lam = Weight::new(r, s);
                    if let Ok(e) = p_adic_expand(lam, p, false) {
                        assert!(e.is_normalized(), "{lam} at p={p}");
                        assert_eq!(e.reassemble(), lam);
                        assert_eq!(e.tail.wht(), -1);
                        for &(a, b) in &e.digits {
                            assert!((0..p).contains(&a) && (0..p).contains(&b));
                        }
                    }
                }
            }
        }
    }
}
