//! Support-variety classification of cohomology modules over the first
//! Frobenius kernel.
//!
//! For SL3 the support variety of a nonzero H^i(λ) is one of exactly three
//! conical varieties, determined by the root subsystem Φ_λ of roots γ with
//! ⟨λ+ρ, γ^∨⟩ ≡ 0 (mod p):
//!
//! * Φ_λ empty (regular λ): the full nilpotent cone, dimension 6;
//! * |Φ_λ| = 2 (subregular λ): the subregular orbit closure, dimension 4;
//! * |Φ_λ| = 6 (Steinberg block): the zero variety, dimension 0 — the
//!   module is projective over the Frobenius kernel.
//!
//! The classifier reads Φ_λ directly; independently computed evidence
//! (ψ_p-order of the generic dimension, quantum-dimension nonvanishing and
//! the complexity lower bound) is attached so the agreement between the
//! two routes is a testable statement rather than an assumption.

use crate::cohomology::{Bundle, CharEngine};
use crate::gendim::{d_phi_p, psi_order, specialize_generic};
use crate::weights::{regularity, RegularityClass, Weight};
use crate::{Error, Int};
use serde::Serialize;

/// The three possible support varieties, ordered by inclusion.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum SupportClass {
    Zero,
    SubregularClosure,
    NilpotentCone,
}

impl SupportClass {
    /// Variety dimension: 6 − |Φ_λ|.
    pub fn dimension(self) -> Int {
        match self {
            SupportClass::Zero => 0,
            SupportClass::SubregularClosure => 4,
            SupportClass::NilpotentCone => 6,
        }
    }

    pub fn from_regularity(class: RegularityClass) -> Self {
        match class {
            RegularityClass::Regular => SupportClass::NilpotentCone,
            RegularityClass::Subregular => SupportClass::SubregularClosure,
            RegularityClass::Steinberg => SupportClass::Zero,
        }
    }
}

/// Independently computed facts about dim_t H^i(λ).
#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Evidence {
    /// Largest k with ψ_p^k | dim_t H^i(λ).
    pub psi_order: u32,
    /// Whether the quantum dimension (value at a primitive p-th root of
    /// unity) is nonzero; equivalent to psi_order = 0.
    pub quantum_dim_nonzero: bool,
    /// max(0, 6 − d(Φ,p) − 2·psi_order): a lower bound for the complexity
    /// of the module over the Frobenius kernel.
    pub complexity_lower_bound: Int,
}

/// Full classification record for one nonzero cohomology module.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SupportReport {
    pub weight: Weight,
    pub degree: usize,
    pub p: Int,
    pub class: SupportClass,
    pub evidence: Evidence,
}

impl Serialize for SupportReport {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = ser.serialize_struct("SupportReport", 6)?;
        st.serialize_field("weight", &self.weight)?;
        st.serialize_field("i", &self.degree)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("class", &self.class)?;
        st.serialize_field("dim", &self.class.dimension())?;
        st.serialize_field("evidence", &self.evidence)?;
        st.end()
    }
}

fn check_degree(i: usize) -> Result<(), Error> {
    if i > 3 {
        return Err(Error::DegreeOutOfRange(i as Int));
    }
    Ok(())
}

fn psi_order_of_degree(engine: &CharEngine, lambda: Weight, i: usize) -> Option<u32> {
    let table = engine.table(lambda, Bundle::Plain);
    if table.h[i].is_zero() {
        return None;
    }
    let dim_t = specialize_generic(&table.h[i]);
    let order = psi_order(&dim_t, engine.p()).expect("engine prime is validated");
    Some(order)
}

/// Classify the support variety of H^i(λ); `None` when the module is zero.
pub fn support_variety(
    engine: &CharEngine,
    lambda: Weight,
    i: usize,
) -> Result<Option<SupportReport>, Error> {
    check_degree(i)?;
    let p = engine.p();
    let Some(order) = psi_order_of_degree(engine, lambda, i) else {
        return Ok(None);
    };
    let class = SupportClass::from_regularity(regularity(lambda, p).class);
    let evidence = Evidence {
        psi_order: order,
        quantum_dim_nonzero: order == 0,
        complexity_lower_bound: (6 - d_phi_p(p) - 2 * order as Int).max(0),
    };
    Ok(Some(SupportReport { weight: lambda, degree: i, p, class, evidence }))
}

/// Lower bound for the complexity of H^i(λ) over the Frobenius kernel.
pub fn complexity_lower_bound(engine: &CharEngine, lambda: Weight, i: usize) -> Result<Int, Error> {
    check_degree(i)?;
    match support_variety(engine, lambda, i)? {
        Some(report) => Ok(report.evidence.complexity_lower_bound),
        None => Err(Error::ZeroModule(lambda, i)),
    }
}

/// Outcome of the ψ_p-order projectivity test.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ProjectivityReport {
    pub weight: Weight,
    pub degree: usize,
    pub p: Int,
    pub projective: bool,
    pub psi_order: u32,
}

/// Projectivity of H^i(λ) over the Frobenius kernel, decided by whether
/// ψ_p³ divides dim_t H^i(λ).  Only meaningful for odd p (at p = 2 the
/// ψ-order of every Weyl-factor product collapses and a different argument
/// is required).
pub fn projectivity_test(
    engine: &CharEngine,
    lambda: Weight,
    i: usize,
) -> Result<ProjectivityReport, Error> {
    check_degree(i)?;
    let p = engine.p();
    if p < 3 {
        return Err(Error::ProjectivityNeedsOddPrime(p));
    }
    let Some(order) = psi_order_of_degree(engine, lambda, i) else {
        return Err(Error::ZeroModule(lambda, i));
    };
    Ok(ProjectivityReport {
        weight: lambda,
        degree: i,
        p,
        projective: order >= 3,
        psi_order: order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::dominant_representative;

    #[test]
    fn classifier_examples() {
        let e5 = CharEngine::new(5).unwrap();
        // Regular dominant weight: nilpotent cone.
        let r = support_variety(&e5, Weight::new(0, 0), 0).unwrap().unwrap();
        assert_eq!(r.class, SupportClass::NilpotentCone);
        assert_eq!(r.class.dimension(), 6);
        assert_eq!(r.evidence.psi_order, 0);
        assert!(r.evidence.quantum_dim_nonzero);
        assert_eq!(r.evidence.complexity_lower_bound, 6);
        // Steinberg weight: zero variety, ψ-order 3, projective.
        let r = support_variety(&e5, Weight::new(4, 4), 0).unwrap().unwrap();
        assert_eq!(r.class, SupportClass::Zero);
        assert_eq!(r.evidence.psi_order, 3);
        assert_eq!(r.evidence.complexity_lower_bound, 0);
        assert!(projectivity_test(&e5, Weight::new(4, 4), 0).unwrap().projective);
        // Subregular dominant: dim-4 closure, order 1, bound 4.
        let r = support_variety(&e5, Weight::new(4, 0), 0).unwrap().unwrap();
        assert_eq!(r.class, SupportClass::SubregularClosure);
        assert_eq!(r.evidence.psi_order, 1);
        assert_eq!(r.evidence.complexity_lower_bound, 4);
        assert!(!projectivity_test(&e5, Weight::new(4, 0), 0).unwrap().projective);
        // Two-degree regular weight: cone in degree 1, not projective.
        let r = support_variety(&e5, Weight::new(5, -10), 1).unwrap().unwrap();
        assert_eq!(r.class, SupportClass::NilpotentCone);
        assert_eq!(r.evidence.psi_order, 0);
        // Vanishing wall: absent.
        assert!(support_variety(&e5, Weight::new(-1, 0), 2).unwrap().is_none());
        assert!(complexity_lower_bound(&e5, Weight::new(-1, 0), 2).is_err());
        // Degree validation.
        assert!(support_variety(&e5, Weight::new(0, 0), 4).is_err());
    }

    #[test]
    fn p2_projectivity_rejected() {
        let e2 = CharEngine::new(2).unwrap();
        assert!(matches!(
            projectivity_test(&e2, Weight::new(0, 0), 0),
            Err(Error::ProjectivityNeedsOddPrime(2))
        ));
    }

    #[test]
    fn class_constant_across_degrees_and_dot_orbit() {
        for p in [3, 5] {
            let e = CharEngine::new(p).unwrap();
            for r in -8..=8 {
                for s in -8..=8 {
                    let w = Weight::new(r, s);
                    let classes: Vec<SupportClass> = (0..4)
                        .filter_map(|i| support_variety(&e, w, i).unwrap())
                        .map(|rep| rep.class)
                        .collect();
                    if classes.is_empty() {
                        continue;
                    }
                    assert!(classes.windows(2).all(|c| c[0] == c[1]), "at {w}, p = {p}");
                    // Matches the class of the dominant representative.
                    if let Some((_, mu, _)) = dominant_representative(w) {
                        let dom = support_variety(&e, mu, 0).unwrap().unwrap();
                        assert_eq!(classes[0], dom.class, "at {w} vs {mu}, p = {p}");
                    }
                }
            }
        }
    }

    #[test]
    fn json_shape() {
        let e3 = CharEngine::new(3).unwrap();
        let r = support_variety(&e3, Weight::new(1, 1), 0).unwrap().unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["weight"], serde_json::json!([1, 1]));
        assert_eq!(v["i"], 0);
        assert_eq!(v["p"], 3);
        assert_eq!(v["class"], "NilpotentCone");
        assert_eq!(v["dim"], 6);
        assert!(v["evidence"]["quantum_dim_nonzero"].as_bool().unwrap());
    }
}
