//! Sparse integer characters: elements of the group ring Z[X(T)].
//!
//! A character is a finite formal sum Σ c_λ e(λ).  Weyl characters of
//! arbitrary weights are defined through the alternating-sum quotient
//! (Σ_w det(w) e(w(λ+ρ))) / (Σ_w det(w) e(wρ)), carried out as exact long
//! division of sparse Laurent "polynomials" on the weight lattice.  On a
//! strictly dominant orbit representative this is the honest character of
//! the induced module; on a singular orbit it is 0; otherwise it equals
//! det(w) times the character at the dominant dot-translate.

use crate::weights::{
    digit_is_regular, dominant_representative, Weight, WEYL_GROUP, RHO,
};
use crate::Int;
use dashmap::DashMap;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::{BuildHasherDefault, Hasher};
use std::sync::{Arc, OnceLock};

/// Multiply-xor hasher for weight keys.  The engine's product loops hash
/// millions of (r,s) pairs per table at large norms; the default hasher's
/// per-call cost dominates the arithmetic it guards, while two rounds of
/// xor-multiply mix 16 bytes well enough for these dense small-range keys.
#[derive(Default)]
struct WeightHasher(u64);

impl Hasher for WeightHasher {
    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 = (self.0 ^ b as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
        }
    }

    fn write_i64(&mut self, v: i64) {
        self.0 = (self.0 ^ v as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    }

    fn finish(&self) -> u64 {
        let mut h = self.0;
        h ^= h >> 29;
        h = h.wrapping_mul(0xBF58_476D_1CE4_E5B9);
        h ^ (h >> 32)
    }
}

type WeightMap = HashMap<Weight, Int, BuildHasherDefault<WeightHasher>>;

/// A sparse character: sorted support, no zero multiplicities.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Character {
    terms: Vec<(Weight, Int)>,
}

impl Character {
    pub fn zero() -> Self {
        Character { terms: Vec::new() }
    }

    /// The basis character e(λ).
    pub fn basis(w: Weight) -> Self {
        Character { terms: vec![(w, 1)] }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Weight, Int)>) -> Self {
        let mut acc = WeightMap::default();
        for (w, c) in terms {
            *acc.entry(w).or_insert(0) += c;
        }
        Character::from_map(acc)
    }

    fn from_map(map: WeightMap) -> Self {
        let mut terms: Vec<(Weight, Int)> = map.into_iter().filter(|&(_, c)| c != 0).collect();
        terms.sort_unstable_by_key(|&(w, _)| w);
        Character { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    /// Multiplicity of e(w).
    pub fn coeff(&self, w: Weight) -> Int {
        match self.terms.binary_search_by_key(&w, |&(u, _)| u) {
            Ok(i) => self.terms[i].1,
            Err(_) => 0,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (Weight, Int)> + '_ {
        self.terms.iter().copied()
    }

    /// Total dimension Σ c_λ (signed for virtual characters).
    pub fn dimension(&self) -> Int {
        self.terms.iter().map(|&(_, c)| c).sum()
    }

    /// True when every multiplicity is nonnegative (a genuine module
    /// character rather than a virtual one).
    pub fn is_effective(&self) -> bool {
        self.terms.iter().all(|&(_, c)| c >= 0)
    }

    pub fn add(&self, other: &Character) -> Character {
        // Merge of two sorted supports.
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (wa, ca) = self.terms[i];
            let (wb, cb) = other.terms[j];
            match wa.cmp(&wb) {
                std::cmp::Ordering::Less => {
                    out.push((wa, ca));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((wb, cb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    if ca + cb != 0 {
                        out.push((wa, ca + cb));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Character { terms: out }
    }

    pub fn sub(&self, other: &Character) -> Character {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: Int) -> Character {
        if k == 0 {
            return Character::zero();
        }
        Character { terms: self.terms.iter().map(|&(w, c)| (w, c * k)).collect() }
    }

    /// Product in the group ring: convolution of supports.
    pub fn mul(&self, other: &Character) -> Character {
        if self.is_zero() || other.is_zero() {
            return Character::zero();
        }
        let (small, large) =
            if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        let mut acc =
            WeightMap::with_capacity_and_hasher(small.terms.len() * large.terms.len() / 2 + 1, Default::default());
        for &(wa, ca) in &small.terms {
            for &(wb, cb) in &large.terms {
                *acc.entry(wa + wb).or_insert(0) += ca * cb;
            }
        }
        Character::from_map(acc)
    }

    /// Frobenius twist (−)^{F}: e(λ) ↦ e(pλ).
    pub fn frobenius_twist(&self, p: Int) -> Character {
        // Scaling by p > 0 preserves the lexicographic order of the support.
        Character { terms: self.terms.iter().map(|&(w, c)| (w.scale(p), c)).collect() }
    }

    /// Diagram involution τ: e(r,s) ↦ e(s,r).
    pub fn tau(&self) -> Character {
        let mut terms: Vec<(Weight, Int)> =
            self.terms.iter().map(|&(w, c)| (w.swap(), c)).collect();
        terms.sort_unstable_by_key(|&(w, _)| w);
        Character { terms }
    }

    /// Dual character: e(λ) ↦ e(−λ).
    pub fn dual(&self) -> Character {
        // Negation reverses the sorted order exactly.
        Character { terms: self.terms.iter().rev().map(|&(w, c)| (-w, c)).collect() }
    }

    /// Translation by e(μ).
    pub fn translate(&self, mu: Weight) -> Character {
        Character { terms: self.terms.iter().map(|&(w, c)| (w + mu, c)).collect() }
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c == 1 {
                write!(f, "e{w}")?;
            } else {
                write!(f, "{c}·e{w}")?;
            }
        }
        Ok(())
    }
}

/// Serialized as a sorted array of {weight, mult} objects.
impl Serialize for Character {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            weight: Weight,
            mult: Int,
        }
        let mut seq = ser.serialize_seq(Some(self.terms.len()))?;
        for &(w, c) in &self.terms {
            seq.serialize_element(&Term { weight: w, mult: c })?;
        }
        seq.end()
    }
}

/// Total order used for exact division: by wht, then lexicographically.
/// The Weyl denominator's maximal term under this order is e(ρ), with
/// coefficient +1, so division over Z never truncates.
type DivKey = (Int, Int, Int);

fn div_key(w: Weight) -> DivKey {
    (w.wht(), w.r, w.s)
}

fn key_weight(k: DivKey) -> Weight {
    Weight::new(k.1, k.2)
}

/// Exact division in Z[X(T)]; returns None when the division leaves a
/// remainder or requires a non-integer step.  The order is term (wht, r, s);
/// shifting both sides of a comparison by the same weight preserves it, so
/// the usual long-division argument applies verbatim.
fn exact_divide(num: &Character, den: &Character) -> Option<Character> {
    let den_terms: Vec<(Weight, Int)> = den.iter().collect();
    let (lead_key, lead_coeff) = den_terms
        .iter()
        .map(|&(w, c)| (div_key(w), c))
        .max_by_key(|&(k, _)| k)?;
    let lead_w = key_weight(lead_key);
    let mut rem: BTreeMap<DivKey, Int> = num.iter().map(|(w, c)| (div_key(w), c)).collect();
    let mut quot: Vec<(Weight, Int)> = Vec::new();
    let mut steps = 0usize;
    while let Some((&top_key, &top_coeff)) = rem.iter().next_back() {
        if top_coeff == 0 {
            rem.remove(&top_key);
            continue;
        }
        if top_coeff % lead_coeff != 0 {
            return None;
        }
        steps += 1;
        assert!(steps < 4_000_000, "division does not terminate; bad divisor");
        let q = top_coeff / lead_coeff;
        let shift = key_weight(top_key) - lead_w;
        quot.push((shift, q));
        for &(w, c) in &den_terms {
            let k = div_key(w + shift);
            let e = rem.entry(k).or_insert(0);
            *e -= q * c;
            if *e == 0 {
                rem.remove(&k);
            }
        }
    }
    Some(Character::from_terms(quot))
}

/// Alternating orbit sum Σ_w det(w) e(w(v)).
fn alternating_sum(v: Weight) -> Character {
    Character::from_terms(WEYL_GROUP.iter().map(|&w| (w.act(v), w.det())))
}

fn weyl_character_dominant(lambda: Weight) -> Character {
    debug_assert!(lambda.is_dominant());
    let num = alternating_sum(lambda + RHO);
    let den = alternating_sum(RHO);
    let ch = exact_divide(&num, &den)
        .expect("the Weyl numerator is divisible by the Weyl denominator");
    debug_assert_eq!(ch.dimension(), dominant_weyl_dimension(lambda.r, lambda.s));
    ch
}

const CACHE_NORM_BOUND: Int = 36;

fn cached<K, F>(cache: &OnceLock<DashMap<K, Arc<Character>>>, key: K, compute: F) -> Arc<Character>
where
    K: std::hash::Hash + Eq + Copy,
    F: FnOnce() -> Character,
{
    let map = cache.get_or_init(DashMap::new);
    if let Some(hit) = map.get(&key) {
        return hit.clone();
    }
    let value = Arc::new(compute());
    map.insert(key, value.clone());
    value
}

/// Euler form of the Weyl character at an arbitrary weight: 0 when λ+ρ is
/// singular, otherwise det(w)·(character of the dominant dot-translate).
pub fn weyl_character(lambda: Weight) -> Character {
    match dominant_representative(lambda) {
        None => Character::zero(),
        Some((_, mu, det)) => {
            let ch = if mu.r.max(mu.s) <= CACHE_NORM_BOUND {
                static CACHE: OnceLock<DashMap<Weight, Arc<Character>>> = OnceLock::new();
                cached(&CACHE, mu, || weyl_character_dominant(mu))
            } else {
                Arc::new(weyl_character_dominant(mu))
            };
            if det == 1 {
                (*ch).clone()
            } else {
                ch.scale(det)
            }
        }
    }
}

/// Signed Euler dimension of `weyl_character`: 0 on singular orbits,
/// det(w)·dim V(μ) otherwise.
pub fn weyl_dimension(lambda: Weight) -> Int {
    match dominant_representative(lambda) {
        None => 0,
        Some((_, mu, det)) => det * dominant_weyl_dimension(mu.r, mu.s),
    }
}

/// dim V(a,b) = (a+1)(b+1)(a+b+2)/2 for dominant (a,b).
pub fn dominant_weyl_dimension(a: Int, b: Int) -> Int {
    debug_assert!(a >= 0 && b >= 0);
    (a + 1) * (b + 1) * (a + b + 2) / 2
}

/// Character of the restricted simple module L(a,b), (a,b) ∈ X₁(T):
/// χ(a,b) when a+b ≤ p−2, else χ(a,b) − χ(p−2−b, p−2−a).
pub fn simple_character(a: Int, b: Int, p: Int) -> Arc<Character> {
    assert!(
        (0..p).contains(&a) && (0..p).contains(&b),
        "simple_character needs a restricted weight; got ({a},{b}) at p = {p}"
    );
    static CACHE: OnceLock<DashMap<(Int, Int, Int), Arc<Character>>> = OnceLock::new();
    cached(&CACHE, (a, b, p), || {
        let head = weyl_character(Weight::new(a, b));
        if a + b <= p - 2 {
            head
        } else {
            head.sub(&weyl_character(Weight::new(p - 2 - b, p - 2 - a)))
        }
    })
}

/// dim L(a,b) via the same dichotomy.  The reflection partner is taken in
/// Euler form: it vanishes when (p−2−b, p−2−a)+ρ is singular (e.g. whenever
/// a or b equals p−1).
pub fn simple_dimension(a: Int, b: Int, p: Int) -> Int {
    assert!((0..p).contains(&a) && (0..p).contains(&b));
    let head = dominant_weyl_dimension(a, b);
    if a + b <= p - 2 {
        head
    } else {
        head - weyl_dimension(Weight::new(p - 2 - b, p - 2 - a))
    }
}

/// Character of the Steinberg module L(p−1, p−1), dimension p³.
pub fn steinberg_character(p: Int) -> Arc<Character> {
    let st = simple_character(p - 1, p - 1, p);
    debug_assert_eq!(st.dimension(), p * p * p);
    st
}

/// Character of the twisted simple L(0, p^n) = L(0,1)^{(n)}:
/// e(0,p^n) + e(p^n,−p^n) + e(−p^n,0).
pub fn simple_0_pn_character(p: Int, n: u32) -> Character {
    let q = p.pow(n);
    Character::from_terms([
        (Weight::new(0, q), 1),
        (Weight::new(q, -q), 1),
        (Weight::new(-q, 0), 1),
    ])
}

/// Characters of the two rank-two bundles N(α), N(β) pulled back to weight
/// zero: ch N(α) = e(−α) + e(0) and ch N(β) = e(−β) + e(0).
pub fn bundle_n_character(root: Weight) -> Character {
    Character::from_terms([(-root, 1), (Weight::new(0, 0), 1)])
}

/// On the F-family coefficient weights the Euler class χ equals the simple
/// character χ_p: the reflection partner of the dichotomy is singular.
/// The engine relies on this to use `weyl_character` for every coefficient
/// written without a subscript.
pub fn euler_equals_simple_on(a: Int, b: Int, p: Int) -> bool {
    if !(0..p).contains(&a) || !(0..p).contains(&b) {
        return false;
    }
    if digit_is_regular(a, b, p) {
        // Regular digits genuinely differ unless a + b ≤ p − 2.
        return a + b <= p - 2;
    }
    // Singular digit: either a+b = p−2 (head term only) or a coordinate is
    // p−1, making the reflection partner (p−2−b, p−2−a) dot-singular.
    a + b <= p - 2 || weyl_character(Weight::new(p - 2 - b, p - 2 - a)).is_zero()
}
